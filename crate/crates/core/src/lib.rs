//! Stable multidigraphs and the exact coefficient function `z(G)` of the
//! Tian-Yau-Zelditch expansion `a_k = sum_{G} z(G) G`.
//!
//! The crate enumerates stable graphs by weight, evaluates `z(G)` exactly,
//! and cross-checks it against independent routes: linear-subgraph orbit
//! sums, characteristic polynomials, Euler-tour and arborescence counts, the
//! Bernoulli identity, and the unit-ball polynomial identity.

pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod eulerian;
pub mod family;
pub mod golden;
pub mod graph;
pub mod poly;
pub mod rational;
pub mod spectral;
pub mod verify;
pub mod zeta;

pub use enumerate::{
    classify, enumerate_stable, enumerate_weight, ConnectivityClass, GraphClassCounts,
};
pub use error::{Error, Result};
pub use family::{z_family, FamilySpec};
pub use graph::{
    are_isomorphic, disjoint_union, format_graph, parse_graph, CanonicalKey, MultiDigraph,
};
pub use poly::Polynomial;
pub use rational::Rational;
pub use zeta::{z, z_strong};
