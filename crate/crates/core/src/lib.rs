//! Explicit constructions of acute point sets in R^d — sets in which every
//! three points form a strictly acute triangle — together with an exact
//! rational-arithmetic verifier that acts as ground truth for every output.
//!
//! Two constructions are provided: dimension doubling (d -> d+2 at twice
//! the size, hence at least 2^(d/2) points) and the inductive hyperplane
//! lift (d -> d+1 with Fibonacci sizes, hence roughly 1.618^d points),
//! plus the classical randomized cube construction as a baseline. All
//! geometry is exact: acuteness is a strict-sign condition, and no
//! floating point appears anywhere in a decision path.
//!
//! The all-triples verifier sweep is data-parallel under the `parallel`
//! feature (on by default) and sequential without it; reports are
//! bit-identical either way and for any worker count.

pub mod baselines;
pub mod doubling;
mod error;
pub mod fibonacci;
pub mod geom;
pub mod sampling;
pub mod simplify;
pub mod verify;

pub use error::{Error, Result};
pub use fibonacci::{base_config, extend, fibonacci_construct, AcuteConfiguration};
pub use geom::{Hyperplane, QVector, Ratio, Side};
pub use verify::{
    check_triple, robustness_radius, upper_bound_check, verify_acute, verify_acute_sequential,
    VerificationReport, Violation,
};
