//! The involution β on W-labeled cores.
//!
//! β acts by a substitution over W(n): every vertex over `b` moves to a
//! vertex over `f(b)`, and every edge is replaced by a path in W(n) from
//! `f(source)` to `f(target)`. The substituted graph is then folded and
//! pruned back to a core.

use crate::artin::w::{check_w_labels, w_pred, w_succ};
use crate::artin::ArtinError;
use crate::fold::{fold_graph, prune_to_core};
use crate::graph::{ColoredGraph, Edge, EdgeColor, Letter, UnionFind, WTag};

/// Image of vertex `b` of W(n).
pub fn beta_vertex(n: u32, b: u32) -> u32 {
    match b {
        1 => n - 1,
        b if b == n - 1 => 1,
        b if b == n => n - 1,
        _ => 1,
    }
}

/// Path replacing an edge of `color` leaving vertex `b` of W(n).
pub fn beta_path(n: u32, color: EdgeColor, b: u32) -> Vec<Letter> {
    use EdgeColor::{D, X, Y};
    let fwd = |c| Letter::new(c, false);
    let back = |c| Letter::new(c, true);
    match (color, b) {
        (X, 1) => vec![fwd(D)],
        (X, b) if b == n - 1 => vec![back(Y)],
        (X, _) => vec![],
        (Y, 1) => vec![fwd(X), fwd(Y)],
        (Y, b) if b == n => vec![fwd(Y), fwd(Y), fwd(X)],
        (Y, _) => vec![back(X), back(X)],
        (D, 1) => vec![fwd(X), fwd(D)],
        (D, b) if b == n => vec![fwd(Y), fwd(D), fwd(X)],
        (D, _) => vec![fwd(X); n as usize - 2],
    }
}

/// β of a W-labeled core. The output is W-labeled (plain tags), immersed and
/// pruned; vertex ids are `0..k`.
pub fn beta(g: &ColoredGraph, n: u32) -> Result<ColoredGraph, ArtinError> {
    if n < 4 {
        return Err(ArtinError::BadParameter(format!("n must be at least 4, got {n}")));
    }
    check_w_labels(g, n)?;
    g.tables()?;
    let src_labels = g.wlabels().expect("checked above");

    let mut labels: Vec<u32> = src_labels.iter().map(|t| beta_vertex(n, t.base)).collect();
    let mut edges = Vec::new();
    let mut merges = Vec::new();
    for e in g.edges() {
        let path = beta_path(n, e.color, src_labels[e.src].base);
        if path.is_empty() {
            merges.push((e.src, e.dst));
            continue;
        }
        let mut cur = e.src;
        for (k, &letter) in path.iter().enumerate() {
            let here = labels[cur];
            let next_label = if letter.inverse {
                w_pred(n, here, letter.color)
            } else {
                w_succ(n, here, letter.color)
            }
            .expect("substitution paths exist in W");
            let next = if k + 1 == path.len() {
                debug_assert_eq!(labels[e.dst], next_label);
                e.dst
            } else {
                labels.push(next_label);
                labels.len() - 1
            };
            edges.push(if letter.inverse { Edge::new(next, cur, letter.color) } else { Edge::new(cur, next, letter.color) });
            cur = next;
        }
    }

    let total = labels.len();
    let mut uf = UnionFind::new(total);
    for (a, b) in merges {
        uf.union(a, b);
    }
    let mut index = vec![usize::MAX; total];
    let mut roots = Vec::new();
    for v in 0..total {
        let r = uf.find(v);
        if index[r] == usize::MAX {
            index[r] = roots.len();
            roots.push(r);
        }
    }
    let merged_edges = edges.iter().map(|e| Edge::new(index[uf.find(e.src)], index[uf.find(e.dst)], e.color)).collect();
    let merged_labels = roots.iter().map(|&r| WTag::new(labels[r])).collect();
    let raw = ColoredGraph::from_parts((0..roots.len() as u64).collect(), merged_edges, None, Some(merged_labels))?;
    let folded = fold_graph(&raw)?;
    Ok(prune_to_core(&folded, false))
}
