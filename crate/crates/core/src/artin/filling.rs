//! q-fillability and the filled 2-complex q(K).

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::artin::w::NWords;
use crate::artin::ArtinError;
use crate::graph::{ColoredGraph, EdgeColor, Letter, Tables, Word};

/// True iff every complete trace of a (cyclically reduced) generator of N,
/// from every vertex, is a simple closed loop. Graphs that are not immersed
/// are never fillable.
pub fn q_fillable(g: &ColoredGraph, n: u32) -> bool {
    let Ok(tables) = g.tables() else { return false };
    let Ok(nw) = NWords::new(n) else { return false };
    let words = nw.traced_words();
    (0..g.vertex_count()).all(|v| {
        words.iter().all(|w| match tables.trace(v, w) {
            None => true,
            Some(path) => is_simple_loop(&path),
        })
    })
}

fn is_simple_loop(path: &[usize]) -> bool {
    if path.first() != path.last() {
        return false;
    }
    let body = &path[..path.len() - 1];
    let mut seen: HashSet<usize> = HashSet::with_capacity(body.len());
    body.iter().all(|v| seen.insert(*v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellKind {
    /// Red n-cycle, x^n.
    Red,
    /// Green triangle, y³.
    Green,
    /// Yellow triangle, δ³.
    Yellow,
    /// Green/yellow bigon, yδ⁻¹.
    Bigon,
}

impl CellKind {
    pub const ALL: [CellKind; 4] = [CellKind::Red, CellKind::Green, CellKind::Yellow, CellKind::Bigon];

    pub fn word(self, n: u32) -> Word {
        match self {
            CellKind::Red => Word::power(EdgeColor::X, n as usize),
            CellKind::Green => Word::power(EdgeColor::Y, 3),
            CellKind::Yellow => Word::power(EdgeColor::D, 3),
            CellKind::Bigon => Word::new(vec![Letter::new(EdgeColor::Y, false), Letter::new(EdgeColor::D, true)]),
        }
    }
}

/// A 2-cell: its kind and its boundary as `(edge index, traversed backwards)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub kind: CellKind,
    pub boundary: Vec<(usize, bool)>,
}

/// The 1-skeleton together with its attached 2-cells.
#[derive(Clone, Debug)]
pub struct QComplex {
    pub skeleton: ColoredGraph,
    pub cells: Vec<Cell>,
}

impl QComplex {
    pub fn count(&self, kind: CellKind) -> usize {
        self.cells.iter().filter(|c| c.kind == kind).count()
    }
}

/// Attach a cell along every simple closed trace of x^n, y³, δ³ and yδ⁻¹,
/// one cell per distinct boundary edge set.
pub fn q_complex(g: &ColoredGraph, n: u32) -> Result<QComplex, ArtinError> {
    if !q_fillable(g, n) {
        return Err(ArtinError::NotFillable);
    }
    let tables = g.tables()?;
    Ok(QComplex { skeleton: g.clone(), cells: cells_of(&tables, g.vertex_count(), n) })
}

pub(crate) fn cells_of(tables: &Tables, vertex_count: usize, n: u32) -> Vec<Cell> {
    let mut cells = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for kind in CellKind::ALL {
        let word = kind.word(n);
        for v in 0..vertex_count {
            let Some(path) = tables.trace(v, &word) else { continue };
            if !is_simple_loop(&path) {
                continue;
            }
            let boundary: Vec<(usize, bool)> = word
                .letters()
                .iter()
                .zip(&path)
                .map(|(&l, &at)| (tables.step_edge(at, l).expect("traced"), l.inverse))
                .collect();
            let mut key: Vec<usize> = boundary.iter().map(|b| b.0).collect();
            key.sort_unstable();
            if seen.insert(key) {
                cells.push(Cell { kind, boundary });
            }
        }
    }
    cells
}
