//! Edge-colored directed multigraphs over the alphabet {x, y, δ}.
//!
//! A [`ColoredGraph`] is the common currency of the crate: Stallings graphs,
//! fiber products, their components and the elements of the closure set are
//! all values of this type. Graphs are immutable once built; every operation
//! returns a new graph.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Edge color, i.e. the generator of the free group F(x, y, δ) an edge reads.
///
/// The derived order `X < Y < D` is the order used by canonical forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeColor {
    /// Red edges, generator `x`.
    #[serde(rename = "x")]
    X,
    /// Green edges, generator `y`.
    #[serde(rename = "y")]
    Y,
    /// Yellow edges, generator `δ`.
    #[serde(rename = "d")]
    D,
}

impl EdgeColor {
    pub const ALL: [EdgeColor; 3] = [EdgeColor::X, EdgeColor::Y, EdgeColor::D];

    pub fn index(self) -> usize {
        match self {
            EdgeColor::X => 0,
            EdgeColor::Y => 1,
            EdgeColor::D => 2,
        }
    }

    /// ASCII letter used in documents and word syntax (`d` stands for δ).
    pub fn letter(self) -> char {
        match self {
            EdgeColor::X => 'x',
            EdgeColor::Y => 'y',
            EdgeColor::D => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'x' => Some(EdgeColor::X),
            'y' => Some(EdgeColor::Y),
            'd' => Some(EdgeColor::D),
            _ => None,
        }
    }

    /// Display name; δ is rendered with its Greek letter.
    pub fn symbol(self) -> &'static str {
        match self {
            EdgeColor::X => "x",
            EdgeColor::Y => "y",
            EdgeColor::D => "δ",
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Label of a vertex by the vertex of W(n) it maps to.
///
/// `barred` distinguishes a second preimage of the same base vertex for
/// bookkeeping; it is ignored for immersion purposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WTag {
    pub base: u32,
    pub barred: bool,
}

impl WTag {
    pub fn new(base: u32) -> Self {
        WTag { base, barred: false }
    }

    pub fn barred(base: u32) -> Self {
        WTag { base, barred: true }
    }
}

impl fmt::Display for WTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}\u{0304}", self.base)
        } else {
            write!(f, "{}", self.base)
        }
    }
}

/// A directed colored edge between two vertex indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub color: EdgeColor,
}

impl Edge {
    pub fn new(src: usize, dst: usize, color: EdgeColor) -> Self {
        Edge { src, dst, color }
    }
}

/// Provenance of a fiber-product vertex: the ids (and W-labels, when the
/// factors carried them) of the two vertices it pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairOrigin {
    pub left: u64,
    pub right: u64,
    pub left_tag: Option<WTag>,
    pub right_tag: Option<WTag>,
}

impl PairOrigin {
    pub fn swapped(self) -> Self {
        PairOrigin {
            left: self.right,
            right: self.left,
            left_tag: self.right_tag,
            right_tag: self.left_tag,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} references vertex {vertex}, but the graph has {count} vertices")]
    DanglingEdge { index: usize, vertex: usize, count: usize },
    #[error("duplicate vertex id {0}")]
    DuplicateId(u64),
    #[error("basepoint {0} is not a vertex")]
    BadBasepoint(usize),
    #[error("label vector has length {got}, expected {expected}")]
    LabelLength { got: usize, expected: usize },
    #[error("vertex {vertex} has two {direction} {color}-edges")]
    NotImmersed { vertex: usize, color: EdgeColor, direction: &'static str },
    #[error("graph has {0} connected components, expected one")]
    Disconnected(usize),
    #[error("vertex {0} has no W-label")]
    MissingLabel(usize),
    #[error("graph vertices are not pairs of a fiber product")]
    NoPairs,
    #[error("folding identified vertices with different W-labels {0} and {1}")]
    LabelConflict(WTag, WTag),
}

/// Finite directed multigraph with colored edges, optional basepoint,
/// optional W-labeling and optional pair provenance.
///
/// Vertices are addressed by dense indices `0..vertex_count()`; each also
/// carries an opaque `u64` id that survives subgraph extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    ids: Vec<u64>,
    edges: Vec<Edge>,
    basepoint: Option<usize>,
    wlabels: Option<Vec<WTag>>,
    pairs: Option<Vec<PairOrigin>>,
}

impl ColoredGraph {
    /// Graph on `vertex_count` vertices with ids `0..vertex_count`.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        Self::from_parts((0..vertex_count as u64).collect(), edges.into_iter().collect(), None, None)
    }

    pub fn from_parts(
        ids: Vec<u64>,
        mut edges: Vec<Edge>,
        basepoint: Option<usize>,
        wlabels: Option<Vec<WTag>>,
    ) -> Result<Self, GraphError> {
        let count = ids.len();
        for (index, e) in edges.iter().enumerate() {
            for vertex in [e.src, e.dst] {
                if vertex >= count {
                    return Err(GraphError::DanglingEdge { index, vertex, count });
                }
            }
        }
        let mut seen = HashMap::with_capacity(count);
        for &id in &ids {
            if seen.insert(id, ()).is_some() {
                return Err(GraphError::DuplicateId(id));
            }
        }
        if let Some(b) = basepoint {
            if b >= count {
                return Err(GraphError::BadBasepoint(b));
            }
        }
        if let Some(labels) = &wlabels {
            if labels.len() != count {
                return Err(GraphError::LabelLength { got: labels.len(), expected: count });
            }
        }
        edges.sort_unstable();
        Ok(ColoredGraph { ids, edges, basepoint, wlabels, pairs: None })
    }

    /// Internal constructor for callers that already uphold the invariants.
    pub(crate) fn assemble(
        ids: Vec<u64>,
        mut edges: Vec<Edge>,
        basepoint: Option<usize>,
        wlabels: Option<Vec<WTag>>,
        pairs: Option<Vec<PairOrigin>>,
    ) -> Self {
        debug_assert!(edges.iter().all(|e| e.src < ids.len() && e.dst < ids.len()));
        edges.sort_unstable();
        ColoredGraph { ids, edges, basepoint, wlabels, pairs }
    }

    pub fn empty() -> Self {
        ColoredGraph { ids: Vec::new(), edges: Vec::new(), basepoint: None, wlabels: None, pairs: None }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn ids(&self) -> &[u64] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> u64 {
        self.ids[v]
    }

    pub fn index_of(&self, id: u64) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    pub fn basepoint(&self) -> Option<usize> {
        self.basepoint
    }

    pub fn wlabels(&self) -> Option<&[WTag]> {
        self.wlabels.as_deref()
    }

    pub fn wlabel(&self, v: usize) -> Option<WTag> {
        self.wlabels.as_ref().map(|l| l[v])
    }

    pub fn pairs(&self) -> Option<&[PairOrigin]> {
        self.pairs.as_deref()
    }

    pub fn color_count(&self, color: EdgeColor) -> usize {
        self.edges.iter().filter(|e| e.color == color).count()
    }

    pub fn with_basepoint(mut self, basepoint: Option<usize>) -> Result<Self, GraphError> {
        if let Some(b) = basepoint {
            if b >= self.vertex_count() {
                return Err(GraphError::BadBasepoint(b));
            }
        }
        self.basepoint = basepoint;
        Ok(self)
    }

    pub fn with_wlabels(mut self, labels: Vec<WTag>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count() {
            return Err(GraphError::LabelLength { got: labels.len(), expected: self.vertex_count() });
        }
        self.wlabels = Some(labels);
        Ok(self)
    }

    pub fn without_wlabels(mut self) -> Self {
        self.wlabels = None;
        self
    }

    pub(crate) fn with_pairs(mut self, pairs: Option<Vec<PairOrigin>>) -> Self {
        debug_assert!(pairs.as_ref().is_none_or(|p| p.len() == self.vertex_count()));
        self.pairs = pairs;
        self
    }

    /// Total degree of every vertex; a loop contributes two.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for e in &self.edges {
            deg[e.src] += 1;
            deg[e.dst] += 1;
        }
        deg
    }

    /// Per-color successor/predecessor tables, or the first violation of
    /// local injectivity.
    pub fn tables(&self) -> Result<Tables, GraphError> {
        Tables::new(self)
    }

    pub fn is_immersed(&self) -> bool {
        self.tables().is_ok()
    }

    /// Subgraph induced on `keep` (in the given order), preserving ids,
    /// labels, pair provenance and the basepoint when it survives.
    pub fn induced(&self, keep: &[usize]) -> ColoredGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.src] != usize::MAX && index[e.dst] != usize::MAX)
            .map(|e| Edge::new(index[e.src], index[e.dst], e.color))
            .collect();
        ColoredGraph::assemble(
            keep.iter().map(|&v| self.ids[v]).collect(),
            edges,
            self.basepoint.and_then(|b| (index[b] != usize::MAX).then_some(index[b])),
            self.wlabels.as_ref().map(|l| keep.iter().map(|&v| l[v]).collect()),
            self.pairs.as_ref().map(|p| keep.iter().map(|&v| p[v]).collect()),
        )
    }

    /// Renumber vertices: vertex `v` moves to index `perm[v]`. Ids travel
    /// with their vertices.
    pub fn permuted(&self, perm: &[usize]) -> ColoredGraph {
        assert_eq!(perm.len(), self.vertex_count());
        let mut inverse = vec![0; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            inverse[p] = v;
        }
        ColoredGraph::assemble(
            inverse.iter().map(|&v| self.ids[v]).collect(),
            self.edges.iter().map(|e| Edge::new(perm[e.src], perm[e.dst], e.color)).collect(),
            self.basepoint.map(|b| perm[b]),
            self.wlabels.as_ref().map(|l| inverse.iter().map(|&v| l[v]).collect()),
            self.pairs.as_ref().map(|p| inverse.iter().map(|&v| p[v]).collect()),
        )
    }

    /// Disjoint union; vertex ids are renumbered densely in part order.
    /// Labels survive only when every part is labeled.
    pub fn disjoint_union(parts: &[&ColoredGraph]) -> ColoredGraph {
        let mut edges = Vec::new();
        let mut labels = Some(Vec::new());
        let mut offset = 0;
        for part in parts {
            edges.extend(part.edges.iter().map(|e| Edge::new(e.src + offset, e.dst + offset, e.color)));
            match (&mut labels, &part.wlabels) {
                (Some(acc), Some(l)) => acc.extend_from_slice(l),
                _ => labels = None,
            }
            offset += part.vertex_count();
        }
        ColoredGraph::assemble((0..offset as u64).collect(), edges, None, labels, None)
    }

    /// Component index of every vertex (weak connectivity) and the count.
    pub fn component_map(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.vertex_count());
        for e in &self.edges {
            uf.union(e.src, e.dst);
        }
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut count = 0;
        for v in 0..self.vertex_count() {
            let r = uf.find(v);
            if comp[r] == usize::MAX {
                comp[r] = count;
                count += 1;
            }
            comp[v] = comp[r];
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.component_map().1 <= 1
    }
}

/// Deterministic transition tables of an immersed graph: for every vertex and
/// color, the unique outgoing and incoming edge (as edge indices).
#[derive(Clone, Debug)]
pub struct Tables {
    out: Vec<[u32; 3]>,
    inc: Vec<[u32; 3]>,
    edges: Vec<Edge>,
}

const NONE: u32 = u32::MAX;

impl Tables {
    fn new(g: &ColoredGraph) -> Result<Self, GraphError> {
        let mut out = vec![[NONE; 3]; g.vertex_count()];
        let mut inc = vec![[NONE; 3]; g.vertex_count()];
        for (i, e) in g.edges.iter().enumerate() {
            let c = e.color.index();
            if out[e.src][c] != NONE {
                return Err(GraphError::NotImmersed { vertex: e.src, color: e.color, direction: "outgoing" });
            }
            out[e.src][c] = i as u32;
            if inc[e.dst][c] != NONE {
                return Err(GraphError::NotImmersed { vertex: e.dst, color: e.color, direction: "incoming" });
            }
            inc[e.dst][c] = i as u32;
        }
        Ok(Tables { out, inc, edges: g.edges.clone() })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    /// Index of the `color`-edge leaving `v`.
    pub fn out_edge(&self, v: usize, color: EdgeColor) -> Option<usize> {
        let i = self.out[v][color.index()];
        (i != NONE).then_some(i as usize)
    }

    /// Index of the `color`-edge entering `v`.
    pub fn in_edge(&self, v: usize, color: EdgeColor) -> Option<usize> {
        let i = self.inc[v][color.index()];
        (i != NONE).then_some(i as usize)
    }

    pub fn succ(&self, v: usize, color: EdgeColor) -> Option<usize> {
        self.out_edge(v, color).map(|i| self.edges[i].dst)
    }

    pub fn pred(&self, v: usize, color: EdgeColor) -> Option<usize> {
        self.in_edge(v, color).map(|i| self.edges[i].src)
    }

    /// Follow one letter: forward along `color`, or backward when `inverse`.
    pub fn step(&self, v: usize, letter: Letter) -> Option<usize> {
        if letter.inverse {
            self.pred(v, letter.color)
        } else {
            self.succ(v, letter.color)
        }
    }

    /// Edge index used by [`Tables::step`], if any.
    pub fn step_edge(&self, v: usize, letter: Letter) -> Option<usize> {
        if letter.inverse {
            self.in_edge(v, letter.color)
        } else {
            self.out_edge(v, letter.color)
        }
    }

    /// The vertex sequence of the unique path reading `word` from `start`,
    /// or `None` if the path leaves the graph.
    pub fn trace(&self, start: usize, word: &Word) -> Option<Vec<usize>> {
        let mut path = Vec::with_capacity(word.len() + 1);
        path.push(start);
        let mut v = start;
        for &letter in word.letters() {
            v = self.step(v, letter)?;
            path.push(v);
        }
        Some(path)
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }
}

/// True iff every vertex has at most one outgoing and at most one incoming
/// edge of each color.
pub fn validate_immersion(g: &ColoredGraph) -> bool {
    g.is_immersed()
}

/// Weakly connected components, each keeping ids, labels and provenance.
///
/// Components are ordered by their unlabeled canonical key, then the labeled
/// key, then the smallest vertex index they contain, so the order does not
/// depend on how the input was scheduled.
pub fn connected_components(g: &ColoredGraph) -> Vec<ColoredGraph> {
    let (comp, count) = g.component_map();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for v in 0..g.vertex_count() {
        members[comp[v]].push(v);
    }
    let mut parts: Vec<(SortKey, ColoredGraph)> = members
        .iter()
        .map(|m| {
            let part = g.induced(m);
            (SortKey::of(&part, m[0]), part)
        })
        .collect();
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    parts.into_iter().map(|(_, p)| p).collect()
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct SortKey {
    unlabeled: Option<crate::canon::CanonicalKey>,
    labeled: Option<crate::canon::CanonicalKey>,
    first: usize,
}

impl SortKey {
    fn of(part: &ColoredGraph, first: usize) -> Self {
        let unlabeled = crate::canon::canonical_form(part, false).ok();
        let labeled = if part.wlabels.is_some() { crate::canon::canonical_form(part, true).ok() } else { None };
        SortKey { unlabeled, labeled, first }
    }
}

/// First Betti number `|E| − |V| + 1` of a connected graph.
pub fn rank(g: &ColoredGraph) -> Result<i64, GraphError> {
    let (_, count) = g.component_map();
    if count > 1 {
        return Err(GraphError::Disconnected(count));
    }
    Ok(g.edge_count() as i64 - g.vertex_count() as i64 + 1)
}

/// Rank of every component, in [`connected_components`] order.
pub fn rank_per_component(g: &ColoredGraph) -> Vec<i64> {
    connected_components(g).iter().map(|c| c.edge_count() as i64 - c.vertex_count() as i64 + 1).collect()
}

/// One signed letter of a word in F(x, y, δ).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub color: EdgeColor,
    pub inverse: bool,
}

impl Letter {
    pub fn new(color: EdgeColor, inverse: bool) -> Self {
        Letter { color, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { color: self.color, inverse: !self.inverse }
    }
}

/// A word over x, y, δ and their inverses.
///
/// Textual form: lowercase `x y d` are generators, uppercase `X Y D` their
/// inverses, and whitespace is ignored, so `"yyDY"` is y²δ⁻¹y⁻¹.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn parse(text: &str) -> Option<Self> {
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                let color = EdgeColor::from_letter(c.to_ascii_lowercase())?;
                Some(Letter::new(color, c.is_ascii_uppercase()))
            })
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }

    pub fn power(color: EdgeColor, k: usize) -> Self {
        Word(vec![Letter::new(color, false); k])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Split a freely reduced word as `t · core · t⁻¹` with `core` cyclically
    /// reduced; returns `(t, core)`.
    pub fn cyclic_core(&self) -> (Word, Word) {
        let w = self.free_reduce().0;
        let mut lo = 0;
        let mut hi = w.len();
        while hi - lo >= 2 && w[lo] == w[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        (Word(w[..lo].to_vec()), Word(w[lo..hi].to_vec()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            let c = l.color.letter();
            write!(f, "{}", if l.inverse { c.to_ascii_uppercase() } else { c })?;
        }
        Ok(())
    }
}

/// Plain union-find with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Union keeping the smaller root as representative; returns the root
    /// that was absorbed, if any.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (keep, gone) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[gone] = keep;
        Some((keep, gone))
    }
}
