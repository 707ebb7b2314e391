//! Differential calculus on finite convergence spaces.
//!
//! A finite reflexive digraph carries a convergence structure in which a
//! filter converges to `v` exactly when it contains the graph neighborhood
//! `N(v)`. Continuous maps between such spaces are the graph homomorphisms,
//! and the continuous maps themselves form a reflexive digraph again. On top
//! of that this crate provides
//!
//! * finite groups given by multiplication tables ([`group`]),
//! * reflexive digraphs, principal filters, products and separation
//!   properties ([`space`]),
//! * Cayley graphs and the space of continuous homomorphisms used as
//!   candidate differentials ([`cayley`], [`integers`]),
//! * differentials of arbitrary maps, computed three independent ways
//!   ([`differential`]),
//! * the Boolean specialisation over GF(2) ([`boolean`]).
//!
//! Vertex sets are sorted `Vec<usize>` throughout; every enumeration returns
//! its results in a fixed canonical order.

pub mod boolean;
pub mod cayley;
pub mod differential;
mod error;
pub mod group;
pub mod integers;
pub mod io;
mod limits;
pub mod space;

pub use error::{Error, Result};
pub use limits::Limits;
