//! Exact invariants of isolated hypersurface singularities with diagonal symmetry.
//!
//! Everything here runs on arbitrary-precision rational arithmetic; there is no
//! floating point anywhere in the computation path. The crate computes, for a
//! weighted homogeneous polynomial `f` together with a finite abelian diagonal
//! subgroup `G` of `SL_n(C)` leaving `f` invariant:
//!
//! * the two-variable E-function of the pair `(f, G)` and its Hodge table,
//! * the Milnor number of the pair by two independent routes,
//! * the exponent multiset, its mean and its variance,
//! * the exact identity `Var = (1/12) * c_hat * mu` together with the swap,
//!   duality and zero-mean symmetries,
//! * cotangent/Dedekind sum identities used by the variance computation,
//! * the analogous invariants for cusp polynomials
//!   `x1^a1 + x2^a2 + x3^a3 - x1*x2*x3`.
//!
//! All identity checks are exact rational comparisons: a failed check is a bug
//! or an invalid input, never a tolerance issue.

pub mod algebra;
pub mod cusp;
pub mod dedekind;
pub mod error;
pub mod group;
pub mod model;
pub mod orbifold;
pub mod qseries;
pub mod rational;

pub use error::Error;
pub use rational::{Int, Rat};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
