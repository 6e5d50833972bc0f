//! Rank-metric codes shaped by Ferrers diagrams, their anticodes, and
//! multilevel subspace codes built from them.
//!
//! Arithmetic is over `GF(q)` with `q <= 2^20`. Minimum-rank claims are
//! checked by exhaustive enumeration when the space is small enough and by
//! seeded sampling otherwise; see [`oracle`].

pub mod anticodes;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod gf;
pub mod linalg;
pub mod multilevel;
pub mod oracle;
pub mod shapes;

pub use constructions::{construct_auto, construct_with, ConstructionResult, Method, Strategy};
pub use error::{Error, Result};
pub use exec::Exec;
pub use gf::{Elem, Extension, Field};
pub use linalg::{Matrix, MatrixSpace};
pub use multilevel::{PivotCode, PivotVector, SubspaceCode};
pub use shapes::{FerrersDiagram, Profile, Shape};
