//! Brute-force oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use proptest::prelude::*;
use stature_core::{ColoredGraph, Edge, EdgeColor, WTag};

pub const COLORS: [EdgeColor; 3] = [EdgeColor::X, EdgeColor::Y, EdgeColor::D];

/// W(n) written out edge by edge: vertex i has label i + 1.
pub fn hand_w(n: usize) -> ColoredGraph {
    let mut edges: Vec<Edge> = (0..n).map(|i| Edge::new(i, (i + 1) % n, EdgeColor::X)).collect();
    let (one, last, second_last) = (0, n - 1, n - 2);
    for c in [EdgeColor::Y, EdgeColor::D] {
        edges.push(Edge::new(one, last, c));
        edges.push(Edge::new(last, second_last, c));
        edges.push(Edge::new(second_last, one, c));
    }
    let labels = (1..=n as u32).map(WTag::new).collect();
    ColoredGraph::from_edges(n, edges).unwrap().with_wlabels(labels).unwrap()
}

/// Vertex sets of the connected components, by plain BFS on an edge list.
pub fn component_sizes(vertices: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); vertices];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; vertices];
    let mut sizes = Vec::new();
    for s in 0..vertices {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        let mut size = 0;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

/// Fiber product by enumerating all pairs of same-colored edges.
pub fn naive_product(g: &ColoredGraph, h: &ColoredGraph) -> (usize, Vec<(usize, usize, EdgeColor)>) {
    let m = h.vertex_count();
    let mut edges = Vec::new();
    for a in g.edges() {
        for b in h.edges() {
            if a.color == b.color {
                edges.push((a.src * m + b.src, a.dst * m + b.dst, a.color));
            }
        }
    }
    (g.vertex_count() * m, edges)
}

pub fn naive_component_sizes(g: &ColoredGraph, h: &ColoredGraph) -> Vec<usize> {
    let (v, edges) = naive_product(g, h);
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b, _)| (a, b)).collect();
    component_sizes(v, &pairs)
}

fn edge_set(g: &ColoredGraph, perm: &[usize], labels: bool) -> Vec<(usize, usize, usize, Option<WTag>, Option<WTag>)> {
    let mut out: Vec<_> = g
        .edges()
        .iter()
        .map(|e| {
            let (ls, ld) = if labels { (g.wlabel(e.src), g.wlabel(e.dst)) } else { (None, None) };
            (perm[e.src], perm[e.dst], e.color.index(), ls, ld)
        })
        .collect();
    out.sort_unstable();
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every vertex bijection. Small graphs only.
pub fn brute_isomorphic(g: &ColoredGraph, h: &ColoredGraph, labels: bool) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let target = edge_set(h, &(0..h.vertex_count()).collect::<Vec<_>>(), false);
    permutations(g.vertex_count()).into_iter().any(|p| {
        edge_set(g, &p, false) == target
            && (!labels || (0..g.vertex_count()).all(|v| g.wlabel(v) == h.wlabel(p[v])))
    })
}

/// Injective, edge-preserving maps h → g by exhaustive search. Small graphs only.
pub fn brute_embeds(h: &ColoredGraph, g: &ColoredGraph) -> bool {
    fn go(h: &ColoredGraph, g: &ColoredGraph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if map.len() == h.vertex_count() {
            return h.edges().iter().all(|e| g.edges().contains(&Edge::new(map[e.src], map[e.dst], e.color)));
        }
        for t in 0..g.vertex_count() {
            if !used[t] {
                used[t] = true;
                map.push(t);
                if go(h, g, map, used) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }
    h.vertex_count() <= g.vertex_count() && go(h, g, &mut Vec::new(), &mut vec![false; g.vertex_count()])
}

/// Random immersed graph: every color is a partial injection, kept where
/// the mask is set.
pub fn immersed_graph(max_vertices: usize) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_vertices).prop_flat_map(|n| {
        let perm = || Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (Just(n), [perm(), perm(), perm()], proptest::collection::vec(any::<[bool; 3]>(), n)).prop_map(
            |(n, perms, mask)| {
                let mut edges = Vec::new();
                for (c, p) in perms.iter().enumerate() {
                    for v in 0..n {
                        if mask[v][c] {
                            edges.push(Edge::new(v, p[v], COLORS[c]));
                        }
                    }
                }
                ColoredGraph::from_edges(n, edges).unwrap()
            },
        )
    })
}

/// Random immersion into W(n): `sheets` copies of every vertex of W, and
/// for every edge of W a partial bijection between the two fibers.
pub fn w_cover(n: u32, sheets: usize) -> impl Strategy<Value = ColoredGraph> {
    let w = hand_w(n as usize);
    let wedges = w.edges().to_vec();
    let perm = move || Just((0..sheets).collect::<Vec<usize>>()).prop_shuffle();
    (
        proptest::collection::vec(perm(), wedges.len()),
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), sheets), wedges.len()),
    )
        .prop_map(move |(perms, keep)| {
            let mut edges = Vec::new();
            for (k, e) in wedges.iter().enumerate() {
                for s in 0..sheets {
                    if keep[k][s] {
                        edges.push(Edge::new(e.src * sheets + s, e.dst * sheets + perms[k][s], e.color));
                    }
                }
            }
            let labels = (0..n as usize * sheets).map(|v| WTag::new((v / sheets) as u32 + 1)).collect();
            ColoredGraph::from_edges(n as usize * sheets, edges).unwrap().with_wlabels(labels).unwrap()
        })
}
