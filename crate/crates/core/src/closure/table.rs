//! Component census of the n = 4 products and its published reference.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::artin::{q_contractible, QVerdict};
use crate::closure::{census, ClosureCertificate, ClosureError};
use crate::embed::embeds_into;
use crate::graph::ColoredGraph;

/// Target columns: six elements of S, then q-contractible.
pub const TABLE_COLUMNS: [&str; 7] = ["W", "Y1", "bY1", "Y2", "Y3", "bY3", "q"];

/// Row factors. `Y4` is the disjoint union of the remaining n = 4 maximal elements.
pub const TABLE_ROWS: [&str; 4] = ["W", "Y1", "bY1", "Y4"];

/// Reference counts, rows in the order `TABLE_ROWS × TABLE_ROWS`.
pub const REFERENCE_TABLE: [[u32; 7]; 16] = [
    [1, 1, 0, 0, 0, 0, 0],
    [0, 2, 0, 0, 0, 0, 2],
    [0, 2, 1, 1, 0, 0, 0],
    [0, 0, 0, 2, 2, 2, 12],
    [0, 2, 0, 0, 0, 0, 2],
    [0, 2, 0, 0, 0, 0, 14],
    [0, 4, 0, 2, 0, 0, 6],
    [0, 0, 0, 2, 2, 2, 72],
    [0, 2, 1, 0, 1, 0, 0],
    [0, 4, 0, 1, 1, 0, 6],
    [0, 2, 1, 1, 0, 0, 8],
    [0, 0, 0, 3, 1, 1, 68],
    [0, 0, 0, 2, 3, 1, 12],
    [0, 0, 0, 2, 3, 1, 72],
    [0, 0, 0, 4, 0, 1, 68],
    [0, 0, 0, 6, 3, 4, 512],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptionCount {
    /// Columns the component may be attributed to.
    pub columns: Vec<String>,
    pub count: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub left: String,
    pub right: String,
    pub total: u32,
    pub q_contractible: u32,
    /// Raw census: how many components admit each set of columns.
    pub options: Vec<OptionCount>,
    pub assigned: [u32; 7],
    pub reference: [u32; 7],
    /// Whether the assignment is a valid attribution of the census that
    /// equals the reference row.
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub rows: Vec<TableRow>,
}

impl Table {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    /// One line per mismatching row.
    pub fn diff(&self) -> Vec<String> {
        self.rows
            .iter()
            .filter(|r| !r.matches)
            .map(|r| format!("{}⊗{}: got {:?}, reference {:?}", r.left, r.right, r.assigned, r.reference))
            .collect()
    }
}

/// Census every ordered pair of row factors of an n = 4 certificate and
/// attribute components to columns. A component may go to any element it
/// embeds into (labels ignored), or to `q` when q-contractible.
pub fn build_table(cert: &ClosureCertificate, limit: usize) -> Result<Table, ClosureError> {
    if cert.n != 4 {
        return Err(ClosureError::Certificate(format!("the table is defined for n = 4, certificate has n = {}", cert.n)));
    }
    let columns: Vec<ColoredGraph> = TABLE_COLUMNS[..6].iter().map(|name| cert.graph(name)).collect::<Result<_, _>>()?;
    let factor = |row: &str| -> Vec<&ColoredGraph> {
        match row {
            "W" => vec![&columns[0]],
            "Y1" => vec![&columns[1]],
            "bY1" => vec![&columns[2]],
            _ => vec![&columns[3], &columns[4], &columns[5]],
        }
    };

    let mut tasks = Vec::new();
    for (r, a) in TABLE_ROWS.iter().enumerate() {
        for (s, b) in TABLE_ROWS.iter().enumerate() {
            for ga in factor(a) {
                for gb in factor(b) {
                    tasks.push((r * 4 + s, ga, gb));
                }
            }
        }
    }
    let masks: Vec<Result<(usize, Vec<u8>), ClosureError>> = tasks
        .par_iter()
        .map(|&(row, ga, gb)| {
            let mut out = Vec::new();
            for c in census(ga, gb)? {
                let mut mask = 0u8;
                for (k, col) in columns.iter().enumerate() {
                    if embeds_into(&c, col, false).is_some() {
                        mask |= 1 << k;
                    }
                }
                match q_contractible(&c, cert.n, limit)? {
                    QVerdict::Contractible { .. } => mask |= 1 << 6,
                    QVerdict::Unknown { cosets } => {
                        return Err(ClosureError::Unknown {
                            left: TABLE_ROWS[row / 4].into(),
                            right: TABLE_ROWS[row % 4].into(),
                            index: out.len(),
                            cosets,
                        })
                    }
                    QVerdict::NotContractible { .. } => {}
                }
                out.push(mask);
            }
            Ok((row, out))
        })
        .collect();
    let mut per_row: Vec<Vec<u8>> = vec![Vec::new(); 16];
    for m in masks {
        let (row, list) = m?;
        per_row[row].extend(list);
    }

    let rows = per_row
        .into_iter()
        .enumerate()
        .map(|(i, masks)| {
            let reference = REFERENCE_TABLE[i];
            let mut counts = [0u32; 128];
            for &m in &masks {
                counts[m as usize] += 1;
            }
            let options = (0..128)
                .filter(|&m| counts[m] > 0)
                .map(|m| OptionCount {
                    columns: (0..7).filter(|k| m & (1 << k) != 0).map(|k| TABLE_COLUMNS[k].to_string()).collect(),
                    count: counts[m],
                })
                .collect();
            let (assigned, matches) = match assign(&counts, &reference) {
                Some(a) => (a, true),
                None => (greedy(&counts), false),
            };
            TableRow {
                left: TABLE_ROWS[i / 4].into(),
                right: TABLE_ROWS[i % 4].into(),
                total: masks.len() as u32,
                q_contractible: masks.iter().filter(|&&m| m & (1 << 6) != 0).count() as u32,
                options,
                assigned,
                reference,
                matches,
            }
        })
        .collect();
    Ok(Table { rows })
}

/// Attribute `counts[mask]` components with option set `mask` to columns
/// so that column totals equal `target`, by max-flow on the bipartite
/// graph option-sets × columns.
fn assign(counts: &[u32; 128], target: &[u32; 7]) -> Option<[u32; 7]> {
    let total: u32 = counts.iter().sum();
    if total != target.iter().sum::<u32>() {
        return None;
    }
    let types: Vec<usize> = (0..128).filter(|&m| counts[m] > 0).collect();
    // Nodes: 0 source, 1..=T types, T+1..=T+7 columns, T+8 sink.
    let t = types.len();
    let size = t + 9;
    let sink = t + 8;
    let mut cap = vec![vec![0i64; size]; size];
    for (i, &m) in types.iter().enumerate() {
        cap[0][i + 1] = counts[m] as i64;
        for k in 0..7 {
            if m & (1 << k) != 0 {
                cap[i + 1][t + 1 + k] = i64::MAX / 4;
            }
        }
    }
    for k in 0..7 {
        cap[t + 1 + k][sink] = target[k] as i64;
    }
    let mut flow = 0i64;
    loop {
        let mut parent = vec![usize::MAX; size];
        parent[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for v in 0..size {
                if parent[v] == usize::MAX && cap[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut push = i64::MAX;
        let mut v = sink;
        while v != 0 {
            push = push.min(cap[parent[v]][v]);
            v = parent[v];
        }
        let mut v = sink;
        while v != 0 {
            cap[parent[v]][v] -= push;
            cap[v][parent[v]] += push;
            v = parent[v];
        }
        flow += push;
    }
    (flow == total as i64).then_some(*target)
}

/// Fallback attribution when no exact one exists: the first admissible
/// column of every component.
fn greedy(counts: &[u32; 128]) -> [u32; 7] {
    let mut out = [0u32; 7];
    for (m, &c) in counts.iter().enumerate() {
        if let Some(k) = (0..7).find(|k| m & (1 << k) != 0) {
            out[k] += c;
        }
    }
    out
}
