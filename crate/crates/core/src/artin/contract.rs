//! Simple connectivity of q(K).

use serde::{Deserialize, Serialize};

use crate::artin::filling::{cells_of, q_fillable};
use crate::artin::fpgroup::Presentation;
use crate::artin::ArtinError;
use crate::graph::ColoredGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum QVerdict {
    /// π₁(q(K)) is trivial; coset enumeration finished with one coset
    /// after defining `cosets` cosets.
    Contractible { cosets: usize },
    /// π₁(q(K)) is nontrivial. `invariants` are the nontrivial invariant
    /// factors of its abelianization (0 for a free Z); when those vanish,
    /// `order` is the group order found by coset enumeration.
    NotContractible { invariants: Vec<u64>, order: Option<usize> },
    /// Coset enumeration exceeded the limit.
    Unknown { cosets: usize },
}

impl QVerdict {
    pub fn is_contractible(&self) -> bool {
        matches!(self, QVerdict::Contractible { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, QVerdict::Unknown { .. })
    }
}

/// Presentation of π₁(q(K)): the non-tree edges of a breadth-first spanning
/// tree from vertex 0 generate, and every cell boundary is a relator.
pub fn q_presentation(g: &ColoredGraph, n: u32) -> Result<Presentation, ArtinError> {
    if !q_fillable(g, n) {
        return Err(ArtinError::NotFillable);
    }
    let (_, count) = g.component_map();
    if count > 1 {
        return Err(ArtinError::Disconnected(count));
    }
    let tables = g.tables()?;
    let v = g.vertex_count();
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); v];
    for (i, e) in g.edges().iter().enumerate() {
        adjacency[e.src].push((e.dst, i));
        adjacency[e.dst].push((e.src, i));
    }
    let mut in_tree = vec![false; g.edge_count()];
    let mut seen = vec![false; v];
    let mut queue = std::collections::VecDeque::new();
    if v > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(u) = queue.pop_front() {
        for &(w, i) in &adjacency[u] {
            if !seen[w] {
                seen[w] = true;
                in_tree[i] = true;
                queue.push_back(w);
            }
        }
    }
    let mut generator = vec![0i32; g.edge_count()];
    let mut count = 0;
    for i in 0..g.edge_count() {
        if !in_tree[i] {
            count += 1;
            generator[i] = count;
        }
    }
    let relators = cells_of(&tables, v, n)
        .into_iter()
        .map(|cell| {
            cell.boundary
                .iter()
                .filter(|(i, _)| generator[*i] != 0)
                .map(|&(i, back)| if back { -generator[i] } else { generator[i] })
                .collect()
        })
        .collect();
    Ok(Presentation::new(count as usize, relators))
}

/// Decide whether q(K) is simply connected.
///
/// Stage one compares the abelianization with the trivial group. Stage two,
/// reached only when the abelianization is trivial, simplifies the
/// presentation and enumerates cosets of the trivial subgroup, defining at
/// most `limit` cosets.
pub fn q_contractible(g: &ColoredGraph, n: u32, limit: usize) -> Result<QVerdict, ArtinError> {
    let p = q_presentation(g, n)?;
    let invariants = p.abelian_invariants();
    if !invariants.is_empty() {
        return Ok(QVerdict::NotContractible { invariants, order: None });
    }
    let (reduced, _) = p.simplify();
    Ok(match reduced.enumerate_cosets(limit) {
        Ok(c) if c.index == 1 => QVerdict::Contractible { cosets: c.defined },
        Ok(c) => QVerdict::NotContractible { invariants, order: Some(c.index) },
        Err(hit) => QVerdict::Unknown { cosets: hit.0 },
    })
}

/// Re-derive a stored verdict and compare. A contractible verdict is
/// rechecked by enumerating with exactly the recorded number of cosets.
pub fn recheck(g: &ColoredGraph, n: u32, verdict: &QVerdict) -> bool {
    let Ok(p) = q_presentation(g, n) else { return false };
    let invariants = p.abelian_invariants();
    match verdict {
        QVerdict::Contractible { cosets } => {
            invariants.is_empty() && p.simplify().0.enumerate_cosets(*cosets).is_ok_and(|c| c.index == 1)
        }
        QVerdict::NotContractible { invariants: stored, order: None } => !stored.is_empty() && *stored == invariants,
        QVerdict::NotContractible { invariants: stored, order: Some(k) } => {
            stored.is_empty() && invariants.is_empty() && *k > 1 && p.simplify().0.enumerate_cosets(usize::MAX).is_ok_and(|c| c.index == *k)
        }
        QVerdict::Unknown { .. } => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::w::{build_red_ngon, build_w};
    use crate::graph::{Edge, EdgeColor, WTag};

    #[test]
    fn ngon_is_contractible() {
        let g = build_red_ngon(6).unwrap();
        let v = q_contractible(&g, 6, 1000).unwrap();
        assert!(v.is_contractible());
        assert!(recheck(&g, 6, &v));
    }

    #[test]
    fn w_has_free_homology() {
        for n in 4..=9 {
            let v = q_contractible(&build_w(n).unwrap(), n, 1000).unwrap();
            assert_eq!(v, QVerdict::NotContractible { invariants: vec![0, 0], order: None });
        }
    }

    #[test]
    fn linked_triangles_are_contractible() {
        let n = 4;
        let tri = |c| [Edge::new(0, 1, c), Edge::new(1, 2, c), Edge::new(2, 0, c)];
        let mut edges = tri(EdgeColor::Y).to_vec();
        edges.extend(tri(EdgeColor::D));
        let g = ColoredGraph::from_edges(3, edges)
            .unwrap()
            .with_wlabels(vec![WTag::new(1), WTag::new(4), WTag::new(3)])
            .unwrap();
        assert!(q_contractible(&g, n, 1000).unwrap().is_contractible());
    }

    #[test]
    fn zero_limit_is_unknown() {
        let g = build_red_ngon(4).unwrap();
        assert_eq!(q_contractible(&g, 4, 0).unwrap(), QVerdict::Unknown { cosets: 0 });
    }

    #[test]
    fn preconditions() {
        let long = ColoredGraph::from_edges(8, (0..8).map(|i| Edge::new(i, (i + 1) % 8, EdgeColor::X))).unwrap();
        assert_eq!(q_contractible(&long, 4, 10), Err(ArtinError::NotFillable));
        let two = ColoredGraph::disjoint_union(&[&build_red_ngon(4).unwrap(), &build_red_ngon(4).unwrap()]);
        assert_eq!(q_contractible(&two, 4, 10), Err(ArtinError::Disconnected(2)));
    }
}
