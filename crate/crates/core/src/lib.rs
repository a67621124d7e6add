//! Lucas and Fibonacci arithmetic for checking Diophantine classifications
//! at bounded scale.
//!
//! - [`sequences`]: exact and modular `L_n`, `F_n` by fast doubling.
//! - [`arith`]: isqrt, `k x^2` detection, gcd, Jacobi symbol.
//! - [`verify`]: identity and congruence sweeps, Jacobi replay.
//! - [`solver`]: exhaustive searches.

pub mod arith;
pub mod error;
pub mod report;
pub mod sequences;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use report::{ClaimId, Counterexample, Status, VerificationReport};
pub use sequences::{Index, Natural};
