//! Injective color-preserving maps between immersed graphs.

use serde::{Deserialize, Serialize};

use crate::graph::{ColoredGraph, EdgeColor, Tables};

/// Vertex map of an embedding: vertex `v` of the source goes to `map[v]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

/// Find an injective graph homomorphism `h → g` preserving colors (and
/// W-labels when `respect_wlabels`). Both graphs must be immersed;
/// otherwise no embedding is reported.
///
/// Over the bouquet, the image of one vertex determines the image of its
/// whole component, so the search only branches on one anchor per
/// component of `h`.
pub fn embeds_into(h: &ColoredGraph, g: &ColoredGraph, respect_wlabels: bool) -> Option<Embedding> {
    let (Ok(th), Ok(tg)) = (h.tables(), g.tables()) else {
        return None;
    };
    if h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() {
        return None;
    }
    if respect_wlabels && (h.wlabels().is_none() || g.wlabels().is_none()) && !h.is_empty() {
        return None;
    }
    for c in EdgeColor::ALL {
        if h.color_count(c) > g.color_count(c) {
            return None;
        }
    }

    let (comp, count) = h.component_map();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for v in 0..h.vertex_count() {
        members[comp[v]].push(v);
    }
    // Larger components first: they constrain the search the most.
    members.sort_by(|a, b| b.len().cmp(&a.len()));

    let search = Search { h, g, th: &th, tg: &tg, respect: respect_wlabels, members: &members };
    let mut map = vec![usize::MAX; h.vertex_count()];
    let mut used = vec![false; g.vertex_count()];
    search.place(0, &mut map, &mut used).then_some(Embedding { map })
}

struct Search<'a> {
    h: &'a ColoredGraph,
    g: &'a ColoredGraph,
    th: &'a Tables,
    tg: &'a Tables,
    respect: bool,
    members: &'a [Vec<usize>],
}

impl Search<'_> {
    fn place(&self, k: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if k == self.members.len() {
            return true;
        }
        let anchor = self.members[k][0];
        for image in 0..self.g.vertex_count() {
            if used[image] {
                continue;
            }
            if self.propagate(anchor, image, map, used)
                && self.place(k + 1, map, used) {
                    return true;
                }
            for &v in &self.members[k] {
                if map[v] != usize::MAX {
                    used[map[v]] = false;
                    map[v] = usize::MAX;
                }
            }
        }
        false
    }

    /// Extend `map` over the component of `anchor` given its image. On
    /// failure the partial assignment is left for the caller to undo.
    fn propagate(&self, anchor: usize, image: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if !self.assign(anchor, image, map, used) {
            return false;
        }
        let mut stack = vec![anchor];
        while let Some(v) = stack.pop() {
            let gv = map[v];
            for c in EdgeColor::ALL {
                for forward in [true, false] {
                    let (hn, gn) = if forward {
                        (self.th.succ(v, c), self.tg.succ(gv, c))
                    } else {
                        (self.th.pred(v, c), self.tg.pred(gv, c))
                    };
                    let Some(hn) = hn else { continue };
                    let Some(gn) = gn else { return false };
                    if map[hn] == usize::MAX {
                        if !self.assign(hn, gn, map, used) {
                            return false;
                        }
                        stack.push(hn);
                    } else if map[hn] != gn {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn assign(&self, v: usize, image: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if used[image] {
            return false;
        }
        if self.respect && self.h.wlabel(v) != self.g.wlabel(image) {
            return false;
        }
        map[v] = image;
        used[image] = true;
        true
    }
}

/// Check a claimed embedding without searching.
pub fn check_embedding(h: &ColoredGraph, g: &ColoredGraph, e: &Embedding, respect_wlabels: bool) -> bool {
    if e.map.len() != h.vertex_count() || e.map.iter().any(|&x| x >= g.vertex_count()) {
        return false;
    }
    let mut seen = vec![false; g.vertex_count()];
    for &x in &e.map {
        if std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    if respect_wlabels && (0..h.vertex_count()).any(|v| h.wlabel(v).is_none() || h.wlabel(v) != g.wlabel(e.map[v])) {
        return false;
    }
    h.edges().iter().all(|edge| {
        let image = crate::graph::Edge::new(e.map[edge.src], e.map[edge.dst], edge.color);
        g.edges().binary_search(&image).is_ok()
    })
}
