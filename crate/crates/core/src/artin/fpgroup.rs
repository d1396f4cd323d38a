//! Finitely presented groups: abelian invariants, Tietze reduction and
//! coset enumeration.
//!
//! Letters are nonzero integers: `g + 1` is generator `g`, `-(g + 1)` its
//! inverse.

use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

/// Generator `generator` was solved for using relator `relator` (an index
/// into the original relator list) and substituted away.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TietzeStep {
    pub relator: usize,
    pub generator: usize,
}

pub fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &a in word {
        if out.last() == Some(&-a) {
            out.pop();
        } else {
            out.push(a);
        }
    }
    out
}

pub fn cyclic_reduce(word: &[i32]) -> Vec<i32> {
    let w = free_reduce(word);
    let (mut lo, mut hi) = (0, w.len());
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

fn invert(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|a| -a).collect()
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> Self {
        debug_assert!(relators.iter().flatten().all(|&a| a != 0 && a.unsigned_abs() as usize <= generators));
        Presentation { generators, relators }
    }

    /// Relation matrix of the abelianization: one row per relator, one
    /// column per generator, entries are exponent sums.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators];
                for &a in r {
                    row[a.unsigned_abs() as usize - 1] += a.signum() as i64;
                }
                row
            })
            .collect()
    }

    /// Invariant factors of the abelianization other than 1, in increasing
    /// divisibility order, followed by one 0 per free Z summand. Empty iff
    /// the abelianization is trivial.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        let diagonal = smith_diagonal(self.relation_matrix(), self.generators);
        let mut out: Vec<u64> = diagonal.iter().filter(|&&d| d != 1).map(|&d| d as u64).collect();
        out.extend(std::iter::repeat_n(0, self.generators - diagonal.len()));
        out
    }

    /// Repeatedly eliminate a generator that occurs exactly once in some
    /// relator. Returns the reduced presentation (generators renumbered
    /// densely) and the eliminations performed.
    pub fn simplify(&self) -> (Presentation, Vec<TietzeStep>) {
        let mut relators: Vec<(usize, Vec<i32>)> =
            self.relators.iter().enumerate().map(|(i, r)| (i, cyclic_reduce(r))).filter(|(_, r)| !r.is_empty()).collect();
        let mut alive = vec![true; self.generators];
        let mut steps = Vec::new();
        while let Some((pos, gen)) = find_elimination(&relators, self.generators) {
            let (original, r) = relators.swap_remove(pos);
            let at = r.iter().position(|a| a.unsigned_abs() as usize == gen + 1).expect("found above");
            let mut rotated = r[at..].to_vec();
            rotated.extend_from_slice(&r[..at]);
            // rotated = g^e · rest, so g = rest⁻¹ when e = 1 and g = rest when e = −1.
            let rest = &rotated[1..];
            let value = if rotated[0] > 0 { invert(rest) } else { rest.to_vec() };
            let value_inv = invert(&value);
            for (_, other) in relators.iter_mut() {
                let mut out = Vec::with_capacity(other.len());
                for &a in other.iter() {
                    if a == gen as i32 + 1 {
                        out.extend_from_slice(&value);
                    } else if a == -(gen as i32 + 1) {
                        out.extend_from_slice(&value_inv);
                    } else {
                        out.push(a);
                    }
                }
                *other = cyclic_reduce(&out);
            }
            relators.retain(|(_, r)| !r.is_empty());
            alive[gen] = false;
            steps.push(TietzeStep { relator: original, generator: gen });
        }

        let mut renumber = vec![0i32; self.generators];
        let mut count = 0;
        for g in 0..self.generators {
            if alive[g] {
                count += 1;
                renumber[g] = count;
            }
        }
        let mut rels: Vec<Vec<i32>> = relators
            .into_iter()
            .map(|(_, r)| r.iter().map(|&a| a.signum() * renumber[a.unsigned_abs() as usize - 1]).collect())
            .collect();
        rels.sort();
        rels.dedup();
        (Presentation::new(count as usize, rels), steps)
    }

    /// Index of the trivial subgroup, i.e. the group order, by
    /// Hasse–Lamb–Trotter coset enumeration defining at most `limit` cosets.
    pub fn enumerate_cosets(&self, limit: usize) -> Result<CosetCount, CosetLimit> {
        Enumerator::new(self, limit).run()
    }
}

/// Result of a completed enumeration: the index and how many cosets were
/// defined on the way. Rerunning with `limit = defined` succeeds again.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetCount {
    pub index: usize,
    pub defined: usize,
}

/// Coset enumeration hit its limit after defining this many cosets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetLimit(pub usize);

fn find_elimination(relators: &[(usize, Vec<i32>)], generators: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    let mut counts = vec![0usize; generators];
    for (pos, (_, r)) in relators.iter().enumerate() {
        if best.is_some_and(|b| b.0 <= r.len()) {
            continue;
        }
        counts.iter_mut().for_each(|c| *c = 0);
        for &a in r {
            counts[a.unsigned_abs() as usize - 1] += 1;
        }
        if let Some(g) = r.iter().map(|a| a.unsigned_abs() as usize - 1).find(|&g| counts[g] == 1) {
            best = Some((r.len(), pos, g));
        }
    }
    best.map(|(_, pos, g)| (pos, g))
}

/// Nonzero diagonal of the Smith normal form (absolute values, each
/// dividing the next).
pub fn smith_diagonal(matrix: Vec<Vec<i64>>, cols: usize) -> Vec<i64> {
    let mut m: Vec<Vec<i128>> = matrix.into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
    let rows = m.len();
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_entry(&m, t, t, rows, cols) else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                dirty |= m[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if dirty {
                let (pi, pj) = min_in_cross(&m, t, rows, cols);
                m.swap(t, pi);
                for row in m.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        m[t][j] += m[i][j];
                    }
                }
                None => break,
            }
        }
        diagonal.push(m[t][t].abs() as i64);
        t += 1;
    }
    diagonal
}

fn min_entry(m: &[Vec<i128>], r0: usize, c0: usize, rows: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for (i, row) in m.iter().enumerate().take(rows).skip(r0) {
        for (j, &v) in row.iter().enumerate().take(cols).skip(c0) {
            if v != 0 && best.is_none_or(|b| v.abs() < b.0) {
                best = Some((v.abs(), i, j));
            }
        }
    }
    best.map(|b| (b.1, b.2))
}

/// Smallest nonzero entry in row `t` or column `t` (the pivot included).
fn min_in_cross(m: &[Vec<i128>], t: usize, rows: usize, cols: usize) -> (usize, usize) {
    let mut best = (m[t][t].abs(), t, t);
    for i in t + 1..rows {
        if m[i][t] != 0 && m[i][t].abs() < best.0 {
            best = (m[i][t].abs(), i, t);
        }
    }
    for j in t + 1..cols {
        if m[t][j] != 0 && m[t][j].abs() < best.0 {
            best = (m[t][j].abs(), t, j);
        }
    }
    (best.1, best.2)
}

const UNDEF: u32 = u32::MAX;

struct Enumerator {
    columns: usize,
    relators: Vec<Vec<usize>>,
    table: Vec<u32>,
    parent: Vec<u32>,
    defined: usize,
    limit: usize,
    queue: VecDeque<u32>,
}

impl Enumerator {
    fn new(p: &Presentation, limit: usize) -> Self {
        let col = |a: i32| (a.unsigned_abs() as usize - 1) * 2 + (a < 0) as usize;
        let mut relators: Vec<Vec<usize>> =
            p.relators.iter().map(|r| cyclic_reduce(r)).filter(|r| !r.is_empty()).map(|r| r.into_iter().map(col).collect()).collect();
        relators.sort_by_key(|r| r.len());
        Enumerator {
            columns: 2 * p.generators,
            relators,
            table: Vec::new(),
            parent: Vec::new(),
            defined: 0,
            limit,
            queue: VecDeque::new(),
        }
    }

    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.columns + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.columns + x] = d;
    }

    fn new_coset(&mut self) -> Result<u32, CosetLimit> {
        if self.defined >= self.limit {
            return Err(CosetLimit(self.defined));
        }
        let c = self.parent.len() as u32;
        self.parent.push(c);
        self.table.extend(std::iter::repeat_n(UNDEF, self.columns));
        self.defined += 1;
        Ok(c)
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), CosetLimit> {
        let d = self.new_coset()?;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        self.parent[gone as usize] = keep;
        self.queue.push_back(gone);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for x in 0..self.columns {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                if self.get(f, x ^ 1) == e {
                    self.set(f, x ^ 1, UNDEF);
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let ex = self.get(e1, x);
                if ex != UNDEF {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1, x ^ 1);
                    if fx != UNDEF {
                        self.merge(e1, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, r: usize) -> Result<(), CosetLimit> {
        let len = self.relators[r].len();
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, len as isize - 1);
        loop {
            while (i as isize) <= j {
                let next = self.get(f, self.relators[r][i]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                let next = self.get(b, self.relators[r][j as usize] ^ 1);
                if next == UNDEF {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                let x = self.relators[r][i];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            self.define(f, self.relators[r][i])?;
        }
    }

    fn run(mut self) -> Result<CosetCount, CosetLimit> {
        self.new_coset()?;
        let mut c = 0u32;
        while (c as usize) < self.parent.len() {
            for r in 0..self.relators.len() {
                if !self.live(c) {
                    break;
                }
                self.scan_and_fill(c, r)?;
            }
            for x in 0..self.columns {
                if !self.live(c) {
                    break;
                }
                if self.get(c, x) == UNDEF {
                    self.define(c, x)?;
                }
            }
            c += 1;
        }
        let index = (0..self.parent.len() as u32).filter(|&c| self.live(c)).count();
        Ok(CosetCount { index, defined: self.defined })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        assert_eq!(free_reduce(&[1, 2, -2, -1, 3]), vec![3]);
        assert_eq!(cyclic_reduce(&[2, 1, 3, -2]), vec![1, 3]);
        assert_eq!(cyclic_reduce(&[1, -1]), Vec::<i32>::new());
    }

    #[test]
    fn smith_forms() {
        assert_eq!(smith_diagonal(vec![vec![2, 4], vec![6, 8]], 2), vec![2, 4]);
        assert_eq!(smith_diagonal(vec![vec![2, 0], vec![0, 3]], 2), vec![1, 6]);
        assert_eq!(smith_diagonal(vec![], 3), Vec::<i64>::new());
    }

    #[test]
    fn abelian_invariants_of_small_groups() {
        // Z/6 as ⟨a | a^6⟩, Z² as ⟨a, b | [a, b]⟩, trivial as ⟨a, b | ab, ab²⟩.
        assert_eq!(Presentation::new(1, vec![vec![1; 6]]).abelian_invariants(), vec![6]);
        assert_eq!(Presentation::new(2, vec![vec![1, 2, -1, -2]]).abelian_invariants(), vec![0, 0]);
        assert!(Presentation::new(2, vec![vec![1, 2], vec![1, 2, 2]]).abelian_invariants().is_empty());
    }

    #[test]
    fn coset_enumeration_orders() {
        let cyclic = Presentation::new(1, vec![vec![1; 5]]);
        let order = |p: &Presentation, l| p.enumerate_cosets(l).map(|c| c.index);
        assert_eq!(order(&cyclic, 1000), Ok(5));
        // S3 = ⟨a, b | a², b³, (ab)²⟩.
        let s3 = Presentation::new(2, vec![vec![1, 1], vec![2, 2, 2], vec![1, 2, 1, 2]]);
        assert_eq!(order(&s3, 1000), Ok(6));
        // A5 = ⟨a, b | a², b³, (ab)⁵⟩.
        let a5 = Presentation::new(2, vec![vec![1, 1], vec![2, 2, 2], [1, 2].repeat(5)]);
        assert_eq!(order(&a5, 10_000), Ok(60));
        let used = a5.enumerate_cosets(10_000).unwrap().defined;
        assert!(a5.enumerate_cosets(used).is_ok());
        assert!(a5.enumerate_cosets(used - 1).is_err());
        assert_eq!(order(&Presentation::new(0, vec![]), 1), Ok(1));
        assert!(Presentation::new(0, vec![]).enumerate_cosets(0).is_err());
        assert!(Presentation::new(1, vec![]).enumerate_cosets(50).is_err());
    }

    #[test]
    fn tietze_eliminates_solvable_generators() {
        // ⟨a, b | ab⁻¹, ab⁻²⟩ collapses completely.
        let p = Presentation::new(2, vec![vec![1, -2], vec![1, -2, -2]]);
        let (q, steps) = p.simplify();
        assert_eq!(steps.len(), 2);
        assert_eq!(q, Presentation::new(0, vec![]));
        // b³ has no letter occurring once, so it stays after eliminating a.
        let p = Presentation::new(2, vec![vec![2, 2, 2], vec![1, -2, -2]]);
        let (q, steps) = p.simplify();
        assert_eq!(steps, vec![TietzeStep { relator: 1, generator: 0 }]);
        assert_eq!(q, Presentation::new(1, vec![vec![1, 1, 1]]));
    }
}
