mod common;

use proptest::prelude::*;
use stature_core::artin::{build_w, q_contractible, q_fillable, QVerdict, DEFAULT_COSET_LIMIT};
use stature_core::closure::{census, closure, Limits};
use stature_core::{connected_components, ColoredGraph, EdgeColor, Word};

const PRIMES: [i64; 4] = [2, 3, 5, 7];

/// Boundary vectors of the 2-cells of q(g): every closed trace of x^n, y³,
/// δ³ or yδ⁻¹, as signed edge counts.
fn cell_boundaries(g: &ColoredGraph, n: u32) -> Vec<Vec<i64>> {
    let t = g.tables().unwrap();
    let mut words: Vec<Word> = ["yyy", "ddd", "yD"].iter().map(|w| Word::parse(w).unwrap()).collect();
    words.push(Word::power(EdgeColor::X, n as usize));
    let mut out = Vec::new();
    for w in &words {
        for v in 0..g.vertex_count() {
            let mut at = v;
            let mut row = vec![0i64; g.edge_count()];
            let mut closed = true;
            for &l in w.letters() {
                match t.step_edge(at, l) {
                    Some(e) => {
                        row[e] += if l.inverse { -1 } else { 1 };
                        at = t.step(at, l).unwrap();
                    }
                    None => {
                        closed = false;
                        break;
                    }
                }
            }
            if closed && at == v {
                out.push(row);
            }
        }
    }
    out
}

fn rank_mod(mut rows: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let inv = |a: i64| (1..p).find(|b| a * b % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, pivot);
        let s = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * s % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] - f * rows[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// dim H₁(q(g); F_p) for connected g.
fn h1_dim(g: &ColoredGraph, n: u32, p: i64) -> usize {
    let cycles = g.edge_count() + 1 - g.vertex_count();
    cycles - rank_mod(cell_boundaries(g, n), p)
}

fn check_against_oracle(c: &ColoredGraph, n: u32) {
    if !q_fillable(c, n) {
        return;
    }
    match q_contractible(c, n, DEFAULT_COSET_LIMIT).unwrap() {
        QVerdict::Contractible { .. } => {
            for p in PRIMES {
                assert_eq!(h1_dim(c, n, p), 0, "p = {p}");
            }
        }
        QVerdict::NotContractible { invariants, .. } => {
            for p in PRIMES {
                let expected = invariants.iter().filter(|&&d| d == 0 || d as i64 % p == 0).count();
                assert_eq!(h1_dim(c, n, p), expected, "p = {p}, invariants {invariants:?}");
            }
        }
        QVerdict::Unknown { .. } => panic!("no verdict within the default limit"),
    }
}

#[test]
fn w_has_two_free_homology_classes() {
    for n in 4..=12 {
        let w = build_w(n).unwrap();
        for p in PRIMES {
            assert_eq!(h1_dim(&w, n, p), 2);
        }
        check_against_oracle(&w, n);
    }
}

#[test]
fn census_components_agree_with_mod_p_homology() {
    for n in [4, 6] {
        let cert = closure(n, Limits::default()).unwrap();
        let elements: Vec<_> = cert.maximal.iter().map(|m| cert.graph(m).unwrap()).collect();
        for a in &elements {
            for b in &elements {
                for c in census(a, b).unwrap() {
                    check_against_oracle(&c, n);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_covers_agree_with_mod_p_homology(g in common::w_cover(4, 3)) {
        for c in connected_components(&g) {
            if c.edge_count() > 0 {
                check_against_oracle(&c, 4);
            }
        }
    }
}

