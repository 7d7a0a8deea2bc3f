//! Exact computer algebra for Cox rings of symplectic resolutions of
//! quotient singularities `C^4/G`.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`], [`poly`], [`linalg`]: rationals, ℚ(ζ_N), multivariate
//!   polynomials, matrices over the field and over ℤ.
//! * [`groebner`]: reduced Gröbner bases and the ideal toolkit built on them.
//! * [`matgroup`], [`invariants`]: finite matrix groups and their invariant rings.
//! * [`valuation`], [`coxring`]: monomial valuations and Cox-ring synthesis.
//! * [`gitfan`]: torus stability, cones, fans and toric ideals.
//! * [`cases`], [`report`], [`driver`]: the three worked examples and the
//!   machinery that turns them into verification reports.

pub mod arith;
pub mod cases;
pub mod coxring;
pub mod driver;
pub mod error;
pub mod gitfan;
pub mod groebner;
pub mod groupfile;
pub mod invariants;
pub mod linalg;
pub mod matgroup;
pub mod poly;
pub mod report;
pub mod valuation;

pub use error::{Error, Result};
