mod common;

use common::{hand_w, naive_component_sizes, COLORS};
use stature_core::artin::{beta, build_red_ngon, build_w, build_y1, build_y2, pi1_generators};
use stature_core::closure::{verify_w_square, w_square_report};
use stature_core::{
    canonical_form, connected_components, fiber_product, fold, fold_graph, rank, Edge, EdgeColor, Tables,
};

#[test]
fn folded_generators_give_w() {
    for n in 4..=12u32 {
        let g = fold(&pi1_generators(n).unwrap());
        assert!(g.is_connected() && g.is_immersed());
        assert_eq!(g.vertex_count(), n as usize);
        assert_eq!(g.edge_count(), n as usize + 6);
        assert_eq!(rank(&g).unwrap(), 7);
        assert_eq!(canonical_form(&g, false).unwrap(), canonical_form(&hand_w(n as usize), false).unwrap());

        let t: Tables = g.tables().unwrap();
        let mut v = g.basepoint().unwrap();
        let mut seen = vec![false; g.vertex_count()];
        for _ in 0..n {
            assert!(!seen[v]);
            seen[v] = true;
            v = t.succ(v, EdgeColor::X).unwrap();
        }
        assert_eq!(Some(v), g.basepoint());

        let touched: std::collections::BTreeSet<usize> = g
            .edges()
            .iter()
            .filter(|e| e.color != EdgeColor::X)
            .flat_map(|e| [e.src, e.dst])
            .collect();
        assert_eq!(touched.len(), 3);
    }
}

#[test]
fn labeled_w_matches_the_hand_written_graph() {
    for n in 4..=12u32 {
        let w = build_w(n).unwrap();
        assert_eq!(canonical_form(&w, true).unwrap(), canonical_form(&hand_w(n as usize), true).unwrap());
    }
}

#[test]
fn w_square_for_n_4() {
    let w = build_w(4).unwrap();
    let parts = connected_components(&fiber_product(&w, &w).unwrap());
    let mut sizes: Vec<usize> = parts.iter().map(|p| p.vertex_count()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![4, 12]);
    assert_eq!(sizes, naive_component_sizes(&w, &w));
    let small = parts.iter().find(|p| p.vertex_count() == 4).unwrap();
    assert_eq!(canonical_form(small, false).unwrap(), canonical_form(&w, false).unwrap());
}

#[test]
fn w_square_decomposes_for_larger_n() {
    for n in 5..=12u32 {
        let report = verify_w_square(n).unwrap();
        assert_eq!((report.w_copies, report.ngons), (1, n as usize - 5));
        assert_eq!(report.doubles, vec![2 * n as usize; 2]);

        let w = hand_w(n as usize);
        let mut expected = vec![n as usize; n as usize - 4];
        expected.extend([2 * n as usize; 2]);
        expected.sort_unstable();
        assert_eq!(naive_component_sizes(&w, &w), expected);
    }
    assert!(w_square_report(4).is_err());
}

#[test]
fn red_ngon_is_a_cycle() {
    let g = build_red_ngon(7).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count(), rank(&g).unwrap()), (7, 7, 1));
    assert!(g.edges().iter().all(|e| e.color == EdgeColor::X));
}

#[test]
fn beta_fixes_w_and_y2() {
    for n in 4..=12u32 {
        let w = build_w(n).unwrap();
        let b = beta(&w, n).unwrap();
        assert_eq!(canonical_form(&b, false).unwrap(), canonical_form(&w, false).unwrap());
    }
    let y2 = build_y2(4).unwrap();
    let b = beta(&y2, 4).unwrap();
    assert_eq!(canonical_form(&b, false).unwrap(), canonical_form(&y2, false).unwrap());
}

#[test]
fn beta_is_an_involution_on_y1() {
    let y1 = build_y1(4).unwrap();
    let twice = beta(&beta(&y1, 4).unwrap(), 4).unwrap();
    assert_eq!(canonical_form(&twice, true).unwrap(), canonical_form(&y1, true).unwrap());
}

#[test]
fn folding_a_graph_with_duplicate_edges_merges_them() {
    let g = stature_core::ColoredGraph::from_parts(
        vec![0, 1, 2],
        vec![Edge::new(0, 1, COLORS[1]), Edge::new(0, 2, COLORS[1]), Edge::new(1, 1, COLORS[0])],
        None,
        None,
    )
    .unwrap();
    let f = fold_graph(&g).unwrap();
    assert_eq!((f.vertex_count(), f.edge_count()), (2, 2));
}
