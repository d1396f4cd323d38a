//! Edge-colored graph immersions over the bouquet with loops x, y, δ, and
//! the finite closure computations built on them.
//!
//! * [`graph`], [`fold`], [`product`], [`canon`], [`embed`]: the graph kernel.
//! * [`artin`]: W(n), β, q-fillability and q-contractibility.
//! * [`closure`]: the closed set S, its certificate and the n = 4 table.
//! * [`io`]: JSON graph documents and DOT export.

pub mod artin;
pub mod canon;
pub mod closure;
pub mod embed;
pub mod fold;
pub mod graph;
pub mod io;
pub mod product;

pub use canon::{canonical_form, canonical_form_based, CanonicalKey};
pub use embed::{check_embedding, embeds_into, Embedding};
pub use fold::{fold, fold_graph, prune_to_core, Schedule};
pub use graph::{
    connected_components, rank, rank_per_component, validate_immersion, ColoredGraph, Edge, EdgeColor, GraphError,
    Letter, PairOrigin, Tables, WTag, Word,
};
pub use product::{fiber_product, project_first, project_second, swap_factors};
