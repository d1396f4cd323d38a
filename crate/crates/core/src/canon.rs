//! Canonical forms for connected immersed graphs.
//!
//! An immersed graph is deterministic and co-deterministic in every color,
//! so a breadth-first walk from a chosen start vertex, visiting neighbours in
//! the fixed order (x out, x in, y out, y in, δ out, δ in), numbers the whole
//! component uniquely. The canonical key is the lexicographically least
//! encoding over all start vertices.

use serde::{Deserialize, Serialize};

use crate::graph::{ColoredGraph, EdgeColor, GraphError, Tables, WTag};

/// Isomorphism invariant of a connected immersed graph. Two graphs get equal
/// keys iff they are isomorphic as color-labeled digraphs (and, when the key
/// was computed with labels, W-label preserving).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalKey {
    pub vertices: u32,
    pub edges: u32,
    pub code: Vec<u32>,
}

pub fn canonical_form(g: &ColoredGraph, use_wlabels: bool) -> Result<CanonicalKey, GraphError> {
    let tables = prepare(g, use_wlabels)?;
    let labels = if use_wlabels { g.wlabels() } else { None };
    let mut best: Option<Vec<u32>> = None;
    for start in 0..g.vertex_count() {
        if let Some(code) = encode_from(&tables, labels, start, best.as_deref()) {
            best = Some(code);
        }
    }
    Ok(CanonicalKey { vertices: g.vertex_count() as u32, edges: g.edge_count() as u32, code: best.unwrap_or_default() })
}

/// Canonical key of the based graph: the walk starts at the basepoint only,
/// so isomorphisms must also fix basepoints. Graphs without a basepoint fall
/// back to [`canonical_form`].
pub fn canonical_form_based(g: &ColoredGraph, use_wlabels: bool) -> Result<CanonicalKey, GraphError> {
    let Some(b) = g.basepoint() else {
        return canonical_form(g, use_wlabels);
    };
    let tables = prepare(g, use_wlabels)?;
    let labels = if use_wlabels { g.wlabels() } else { None };
    let code = encode_from(&tables, labels, b, None).expect("unbounded encoding always completes");
    Ok(CanonicalKey { vertices: g.vertex_count() as u32, edges: g.edge_count() as u32, code })
}

fn prepare(g: &ColoredGraph, use_wlabels: bool) -> Result<Tables, GraphError> {
    let tables = g.tables()?;
    let (_, count) = g.component_map();
    if count > 1 {
        return Err(GraphError::Disconnected(count));
    }
    if use_wlabels && g.wlabels().is_none() && !g.is_empty() {
        return Err(GraphError::MissingLabel(0));
    }
    Ok(tables)
}

fn tag_code(tag: WTag) -> u32 {
    tag.base * 2 + tag.barred as u32 + 1
}

const ABSENT: u32 = 0;

/// Encode the component from `start`. Returns `None` as soon as the partial
/// code is already larger than `bound`.
fn encode_from(tables: &Tables, labels: Option<&[WTag]>, start: usize, bound: Option<&[u32]>) -> Option<Vec<u32>> {
    let n = tables.vertex_count();
    let mut order = vec![u32::MAX; n];
    let mut queue = Vec::with_capacity(n);
    order[start] = 0;
    queue.push(start);
    let width = 6 + labels.is_some() as usize;
    let mut code = Vec::with_capacity(n * width);
    let mut less = false;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        if let Some(l) = labels {
            code.push(tag_code(l[v]));
        }
        for color in EdgeColor::ALL {
            for next in [tables.succ(v, color), tables.pred(v, color)] {
                let entry = match next {
                    None => ABSENT,
                    Some(w) => {
                        if order[w] == u32::MAX {
                            order[w] = queue.len() as u32;
                            queue.push(w);
                        }
                        order[w] + 1
                    }
                };
                code.push(entry);
            }
        }
        if let (Some(b), false) = (bound, less) {
            let from = code.len() - width;
            for i in from..code.len() {
                match code[i].cmp(&b[i]) {
                    std::cmp::Ordering::Less => {
                        less = true;
                        break;
                    }
                    std::cmp::Ordering::Greater => return None,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    match bound {
        Some(_) if !less => None,
        _ => Some(code),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn cycle(n: usize, color: EdgeColor) -> ColoredGraph {
        ColoredGraph::from_edges(n, (0..n).map(|i| Edge::new(i, (i + 1) % n, color))).unwrap()
    }

    #[test]
    fn rotation_invariance() {
        let g = cycle(5, EdgeColor::X);
        let rotated = g.permuted(&[2, 3, 4, 0, 1]);
        assert_eq!(canonical_form(&g, false).unwrap(), canonical_form(&rotated, false).unwrap());
    }

    #[test]
    fn colors_are_distinguished() {
        assert_ne!(
            canonical_form(&cycle(3, EdgeColor::X), false).unwrap(),
            canonical_form(&cycle(3, EdgeColor::Y), false).unwrap()
        );
    }

    #[test]
    fn orientation_matters() {
        // x then y versus y then x around a 2-cycle are isomorphic; a 3-cycle
        // x,x,y is not isomorphic to x,y,y.
        let a = ColoredGraph::from_edges(
            3,
            [Edge::new(0, 1, EdgeColor::X), Edge::new(1, 2, EdgeColor::X), Edge::new(2, 0, EdgeColor::Y)],
        )
        .unwrap();
        let b = ColoredGraph::from_edges(
            3,
            [Edge::new(0, 1, EdgeColor::X), Edge::new(1, 2, EdgeColor::Y), Edge::new(2, 0, EdgeColor::Y)],
        )
        .unwrap();
        assert_ne!(canonical_form(&a, false).unwrap(), canonical_form(&b, false).unwrap());
    }

    #[test]
    fn labels_only_count_when_requested() {
        let g = cycle(2, EdgeColor::X).with_wlabels(vec![WTag::new(1), WTag::new(2)]).unwrap();
        let h = cycle(2, EdgeColor::X).with_wlabels(vec![WTag::new(1), WTag::new(3)]).unwrap();
        assert_eq!(canonical_form(&g, false).unwrap(), canonical_form(&h, false).unwrap());
        assert_ne!(canonical_form(&g, true).unwrap(), canonical_form(&h, true).unwrap());
        let barred = cycle(2, EdgeColor::X).with_wlabels(vec![WTag::barred(1), WTag::new(2)]).unwrap();
        assert_ne!(canonical_form(&g, true).unwrap(), canonical_form(&barred, true).unwrap());
    }

    #[test]
    fn errors() {
        let disconnected = ColoredGraph::from_edges(2, []).unwrap();
        assert_eq!(canonical_form(&disconnected, false), Err(GraphError::Disconnected(2)));
        let bad = ColoredGraph::from_edges(3, [Edge::new(0, 1, EdgeColor::X), Edge::new(0, 2, EdgeColor::X)]).unwrap();
        assert!(matches!(canonical_form(&bad, false), Err(GraphError::NotImmersed { .. })));
    }

    #[test]
    fn based_form_fixes_the_basepoint() {
        let path = ColoredGraph::from_edges(2, [Edge::new(0, 1, EdgeColor::X)]).unwrap();
        let a = path.clone().with_basepoint(Some(0)).unwrap();
        let b = path.with_basepoint(Some(1)).unwrap();
        assert_eq!(canonical_form(&a, false).unwrap(), canonical_form(&b, false).unwrap());
        assert_ne!(canonical_form_based(&a, false).unwrap(), canonical_form_based(&b, false).unwrap());
    }
}
