//! Benchmark fixtures.

use stature_core::artin::build_w;
use stature_core::closure::{closure, Limits};
use stature_core::ColoredGraph;

/// W(n) for the given n.
pub fn w(n: u32) -> ColoredGraph {
    build_w(n).expect("n >= 4")
}

/// Maximal closure elements for n.
pub fn maximal(n: u32) -> Vec<ColoredGraph> {
    let cert = closure(n, Limits::default()).expect("closure converges");
    cert.maximal.iter().map(|m| cert.graph(m).unwrap()).collect()
}
