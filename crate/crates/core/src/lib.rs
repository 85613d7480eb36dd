//! Exact domination-chain parameters (γ, γ_t, γ_pr, Γ, ρ_k, α) on small
//! graphs and graph products, with certificates that re-check themselves.
//!
//! Start from [`families`] or [`Graph::from_edges`], take products with
//! [`products`], and solve with [`solvers`]. [`paperlab`] runs the named
//! claim checks.

mod bitset;
mod error;
pub mod families;
pub mod graph;
pub mod matching;
pub mod paperlab;
pub mod products;
pub mod solvers;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Distance, DistanceMatrix, Graph, InducedSubgraph, VertexSet};
pub use products::ProductIndexMap;
pub use solvers::{solve, Budget, Certificate, CertificateRecord, Parameter};
