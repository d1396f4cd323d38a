//! Fiber products over the one-vertex bouquet.

use crate::graph::{ColoredGraph, Edge, EdgeColor, GraphError, PairOrigin};

/// Fiber product of two immersed graphs over the bouquet with loops x, y, δ.
///
/// The vertex set is every pair `(u, v)`; pair `(u, v)` gets index
/// `u · |V(h)| + v` and that index as its id. Every vertex records a
/// [`PairOrigin`] so the result can be projected to either factor.
pub fn fiber_product(g: &ColoredGraph, h: &ColoredGraph) -> Result<ColoredGraph, GraphError> {
    g.tables()?;
    h.tables()?;
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let index = |u: usize, v: usize| u * nh + v;

    let mut by_color: [Vec<Edge>; 3] = Default::default();
    for e in h.edges() {
        by_color[e.color.index()].push(*e);
    }
    let mut edges = Vec::new();
    for e in g.edges() {
        for f in &by_color[e.color.index()] {
            edges.push(Edge::new(index(e.src, f.src), index(e.dst, f.dst), e.color));
        }
    }

    let mut pairs = Vec::with_capacity(ng * nh);
    for u in 0..ng {
        for v in 0..nh {
            pairs.push(PairOrigin { left: g.id(u), right: h.id(v), left_tag: g.wlabel(u), right_tag: h.wlabel(v) });
        }
    }
    let basepoint = match (g.basepoint(), h.basepoint()) {
        (Some(a), Some(b)) => Some(index(a, b)),
        _ => None,
    };
    Ok(ColoredGraph::assemble((0..(ng * nh) as u64).collect(), edges, basepoint, None, Some(pairs)))
}

/// Relabel every vertex of a fiber product (or a piece of one) by the
/// W-label of its right entry.
pub fn project_second(g: &ColoredGraph) -> Result<ColoredGraph, GraphError> {
    let pairs = g.pairs().ok_or(GraphError::NoPairs)?;
    let labels = pairs
        .iter()
        .enumerate()
        .map(|(v, p)| p.right_tag.ok_or(GraphError::MissingLabel(v)))
        .collect::<Result<Vec<_>, _>>()?;
    g.clone().with_wlabels(labels)
}

/// Relabel by the W-label of the left entry.
pub fn project_first(g: &ColoredGraph) -> Result<ColoredGraph, GraphError> {
    project_second(&swap_factors(g)?)
}

/// Exchange the roles of the two factors in the pair provenance. The shape is
/// untouched: `H⊗K` and `K⊗H` are isomorphic via `(u, v) ↦ (v, u)`.
pub fn swap_factors(g: &ColoredGraph) -> Result<ColoredGraph, GraphError> {
    let pairs = g.pairs().ok_or(GraphError::NoPairs)?;
    let swapped = pairs.iter().map(|p| p.swapped()).collect();
    Ok(g.clone().with_pairs(Some(swapped)))
}

/// Per-color edge counts, indexed by [`EdgeColor::index`].
pub fn color_counts(g: &ColoredGraph) -> [usize; 3] {
    EdgeColor::ALL.map(|c| g.color_count(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::graph::{connected_components, WTag};

    fn red_cycle(n: usize) -> ColoredGraph {
        ColoredGraph::from_edges(n, (0..n).map(|i| Edge::new(i, (i + 1) % n, EdgeColor::X)))
            .unwrap()
            .with_wlabels((1..=n as u32).map(WTag::new).collect())
            .unwrap()
    }

    #[test]
    fn red_cycles_split_by_difference() {
        let c = red_cycle(5);
        let p = fiber_product(&c, &c).unwrap();
        assert_eq!(p.vertex_count(), 25);
        let parts = connected_components(&p);
        assert_eq!(parts.len(), 5);
        let key = canonical_form(&c, false).unwrap();
        assert!(parts.iter().all(|q| canonical_form(q, false).unwrap() == key));
    }

    #[test]
    fn basepoints_pair_up() {
        let c = red_cycle(3).with_basepoint(Some(1)).unwrap();
        let d = red_cycle(4).with_basepoint(Some(2)).unwrap();
        let p = fiber_product(&c, &d).unwrap();
        assert_eq!(p.basepoint(), Some(4 + 2));
        assert_eq!(fiber_product(&c, &red_cycle(4)).unwrap().basepoint(), None);
    }

    #[test]
    fn projection_reads_the_requested_side() {
        let loop_graph = ColoredGraph::from_edges(1, [Edge::new(0, 0, EdgeColor::X)])
            .unwrap()
            .with_wlabels(vec![WTag::new(1)])
            .unwrap();
        let p = fiber_product(&loop_graph, &loop_graph).unwrap();
        let q = project_second(&p).unwrap();
        assert_eq!(q.wlabels(), Some(&[WTag::new(1)][..]));
        assert_eq!(q.edge_count(), 1);

        let c = red_cycle(2);
        let d = red_cycle(2).with_wlabels(vec![WTag::new(7), WTag::new(8)]).unwrap();
        let p = fiber_product(&c, &d).unwrap();
        assert_eq!(project_second(&p).unwrap().wlabel(1), Some(WTag::new(8)));
        assert_eq!(project_first(&p).unwrap().wlabel(1), Some(WTag::new(1)));
    }

    #[test]
    fn projection_errors() {
        let c = red_cycle(2);
        assert_eq!(project_second(&c), Err(GraphError::NoPairs));
        let bare = c.clone().without_wlabels();
        let p = fiber_product(&c, &bare).unwrap();
        assert_eq!(project_second(&p), Err(GraphError::MissingLabel(0)));
    }

    #[test]
    fn non_immersed_factors_are_rejected() {
        let bad = ColoredGraph::from_edges(3, [Edge::new(0, 1, EdgeColor::X), Edge::new(0, 2, EdgeColor::X)]).unwrap();
        assert!(matches!(fiber_product(&bad, &red_cycle(2)), Err(GraphError::NotImmersed { .. })));
    }
}
