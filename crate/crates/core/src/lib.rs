//! Exact computation of saturated branching cones for embeddings of semisimple groups.
//!
//! The cone of pairs `(mu, muhat)` of dominant weights such that `V(N mu) (x) V(N muhat)`
//! has nonzero `G`-invariants for some `N > 0` is described by its regular facets
//! (from Schubert calculus on partial flag varieties) and by its extremal rays, which are
//! produced by explicit formulas and checked against a double-description oracle.

pub mod branching;
pub mod cone;
pub mod error;
pub mod linalg;
pub mod polyhedra;
pub mod poly;
pub mod rep;
pub mod root_datum;
pub mod schubert;
pub mod weyl;

pub use branching::{Case, Embedding, LeviPair, Standardized};
pub use cone::{
    Analysis, Budgets, CoverDatum, DimensionCount, Engine, FacetDatum, FundamentalTest, Inequality, Provenance, RayVector, Side,
};
pub use error::{Error, Result};
pub use linalg::Q;
pub use polyhedra::{RationalCone, VRep};
pub use poly::Polynomial;
pub use root_datum::{Coweight, RootDatum, Weight};
pub use schubert::{PullbackTable, SchubertClass};
pub use weyl::WeylElement;
