//! Stallings folding and core pruning.

use std::collections::VecDeque;

use crate::graph::{ColoredGraph, Edge, GraphError, Letter, UnionFind, WTag, Word};

/// Order in which pending identifications are processed. Every schedule
/// gives the same result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Schedule {
    #[default]
    Fifo,
    Lifo,
}

/// Stallings graph of the subgroup of F(x, y, δ) generated by `words`: each
/// word becomes a loop at the basepoint (vertex 0), the bouquet is folded
/// until immersed and then pruned to its core, keeping the basepoint.
pub fn fold(words: &[Word]) -> ColoredGraph {
    fold_with(words, Schedule::Fifo)
}

pub fn fold_with(words: &[Word], schedule: Schedule) -> ColoredGraph {
    let (count, edges) = bouquet(words);
    let g = ColoredGraph::from_edges(count, edges)
        .and_then(|g| g.with_basepoint(Some(0)))
        .expect("bouquet edges stay in range");
    let folded = fold_graph_with(&g, schedule).expect("unlabeled graphs cannot conflict");
    prune_to_core(&folded, true)
}

fn bouquet(words: &[Word]) -> (usize, Vec<Edge>) {
    let mut count = 1;
    let mut edges = Vec::new();
    for w in words {
        let mut cur = 0;
        for (i, &Letter { color, inverse }) in w.letters().iter().enumerate() {
            let next = if i + 1 == w.len() {
                0
            } else {
                count += 1;
                count - 1
            };
            edges.push(if inverse { Edge::new(next, cur, color) } else { Edge::new(cur, next, color) });
            cur = next;
        }
    }
    (count, edges)
}

/// Fold an arbitrary colored graph into an immersed one by identifying
/// same-colored edges that share their source or their target. Parallel
/// edges of one color collapse; edges of different colors are kept.
///
/// Vertex ids of the result are `0..k`, numbered by the smallest input vertex
/// of each class. W-labels are carried over; identifying two vertices with
/// different labels is an error.
pub fn fold_graph(g: &ColoredGraph) -> Result<ColoredGraph, GraphError> {
    fold_graph_with(g, Schedule::Fifo)
}

pub fn fold_graph_with(g: &ColoredGraph, schedule: Schedule) -> Result<ColoredGraph, GraphError> {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    // Per root: the representative target (resp. source) of its c-edges.
    let mut out: Vec<[Option<usize>; 3]> = vec![[None; 3]; n];
    let mut inc: Vec<[Option<usize>; 3]> = vec![[None; 3]; n];
    let mut pending: VecDeque<(usize, usize)> = VecDeque::new();

    let edges: Vec<Edge> = match schedule {
        Schedule::Fifo => g.edges().to_vec(),
        Schedule::Lifo => g.edges().iter().rev().copied().collect(),
    };
    for e in &edges {
        let c = e.color.index();
        let (s, d) = (uf.find(e.src), uf.find(e.dst));
        match out[s][c] {
            Some(t) => pending.push_back((t, d)),
            None => out[s][c] = Some(d),
        }
        match inc[d][c] {
            Some(t) => pending.push_back((t, s)),
            None => inc[d][c] = Some(s),
        }
        drain(&mut uf, &mut out, &mut inc, &mut pending, schedule);
    }

    let mut root_index = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        let r = uf.find(v);
        if root_index[r] == usize::MAX {
            root_index[r] = count;
            count += 1;
        }
    }
    let mut folded: Vec<Edge> = g
        .edges()
        .iter()
        .map(|e| Edge::new(root_index[uf.find(e.src)], root_index[uf.find(e.dst)], e.color))
        .collect();
    folded.sort_unstable();
    folded.dedup();

    let labels = match g.wlabels() {
        None => None,
        Some(l) => {
            let mut merged: Vec<Option<WTag>> = vec![None; count];
            for v in 0..n {
                let slot = &mut merged[root_index[uf.find(v)]];
                match *slot {
                    Some(t) if t != l[v] => return Err(GraphError::LabelConflict(t, l[v])),
                    _ => *slot = Some(l[v]),
                }
            }
            Some(merged.into_iter().map(|t| t.expect("every class has a member")).collect())
        }
    };
    let basepoint = g.basepoint().map(|b| root_index[uf.find(b)]);
    Ok(ColoredGraph::assemble((0..count as u64).collect(), folded, basepoint, labels, None))
}

fn drain(
    uf: &mut UnionFind,
    out: &mut [[Option<usize>; 3]],
    inc: &mut [[Option<usize>; 3]],
    pending: &mut VecDeque<(usize, usize)>,
    schedule: Schedule,
) {
    loop {
        let next = match schedule {
            Schedule::Fifo => pending.pop_front(),
            Schedule::Lifo => pending.pop_back(),
        };
        let Some((a, b)) = next else { break };
        let Some((keep, gone)) = uf.union(a, b) else { continue };
        for c in 0..3 {
            if let Some(t) = out[gone][c].take() {
                match out[keep][c] {
                    Some(u) => pending.push_back((u, t)),
                    None => out[keep][c] = Some(t),
                }
            }
            if let Some(t) = inc[gone][c].take() {
                match inc[keep][c] {
                    Some(u) => pending.push_back((u, t)),
                    None => inc[keep][c] = Some(t),
                }
            }
        }
    }
}

/// Repeatedly delete vertices of total degree at most one (a loop counts
/// twice). The basepoint is never deleted when `keep_basepoint` is set.
/// Surviving vertices keep their ids, labels and provenance.
pub fn prune_to_core(g: &ColoredGraph, keep_basepoint: bool) -> ColoredGraph {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        incident[e.src].push(i);
        if e.dst != e.src {
            incident[e.dst].push(i);
        }
    }
    let protected = if keep_basepoint { g.basepoint() } else { None };
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1 && Some(v) != protected).collect();
    let mut edge_alive = vec![true; g.edge_count()];
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &i in &incident[v] {
            if !edge_alive[i] {
                continue;
            }
            edge_alive[i] = false;
            let e = g.edges()[i];
            let other = if e.src == v { e.dst } else { e.src };
            deg[other] -= 1;
            if alive[other] && deg[other] <= 1 && Some(other) != protected {
                stack.push(other);
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    g.induced(&keep)
}
