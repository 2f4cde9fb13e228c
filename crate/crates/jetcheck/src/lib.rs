//! Exact symbolic calculus on the jet bundles of the metric and
//! linear-connection bundles over a coordinate chart, together with a batch
//! verifier for the covariant-Hamiltonian identities that arise there.
//!
//! Everything is computed over arbitrary-precision rationals: expressions are
//! canonical reduced fractions of multivariate integer polynomials, so every
//! identity verdict is an exact syntactic statement (`symexpr`).  On top of
//! that sit
//!
//! * coordinate charts for the metric bundle `M`, the connection bundle `C`
//!   (and its torsion-free sub-bundle), their fibred product and jet
//!   prolongations (`charts`),
//! * natural lifts of base vector fields and their jet prolongations
//!   (`lifts`),
//! * the finite generator system characterising diffeomorphism-invariant
//!   Lagrangians and the associated invariance tests (`invariance`),
//! * first-order Ehresmann connections on `M x C` satisfying the metric and
//!   connection compatibility conditions, and covariant Hamiltonians
//!   (`connections`),
//! * the metric-jet/Levi-Civita isomorphism, second-order connections and
//!   second-order covariant Hamiltonians (`second_order`),
//! * the Palatini and Einstein-Hilbert Lagrangians and their zero-Hamiltonian
//!   characterisations (`lagrangians`),
//! * a reporting harness that runs the whole identity suite and emits a
//!   machine-readable report (`report`).

pub mod charts;
pub mod connections;
pub mod invariance;
pub mod lagrangians;
pub mod lifts;
pub mod linalg;
pub mod report;
pub mod second_order;
pub mod symexpr;

mod error;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
