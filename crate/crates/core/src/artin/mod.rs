//! Graphs over W(n) for the Artin groups A(2,3,2n): the fixture W(n), the
//! involution β and the filling machinery.

mod beta;
mod contract;
mod filling;
pub mod fpgroup;
mod w;

use thiserror::Error;

use crate::graph::GraphError;

pub use beta::{beta, beta_path, beta_vertex};
pub use contract::{q_contractible, q_presentation, recheck, QVerdict};
pub use filling::{q_complex, q_fillable, Cell, CellKind, QComplex};
pub use w::{
    build_red_ngon, build_w, build_x1, build_x2, build_y1, build_y2, build_y3, check_w_labels, pi1_generators, w_pred,
    w_succ, NWords,
};

/// Default bound on cosets defined by a single contractibility check.
pub const DEFAULT_COSET_LIMIT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArtinError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("graph carries no W-labels")]
    NotWLabeled,
    #[error("graph does not lie over W: {0}")]
    NotCoverCore(String),
    #[error("graph is not q-fillable")]
    NotFillable,
    #[error("graph has {0} components, expected one")]
    Disconnected(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
