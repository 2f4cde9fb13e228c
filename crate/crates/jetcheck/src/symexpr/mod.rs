//! Exact multivariate rational-function arithmetic with canonical forms,
//! formal differentiation, substitution and two-mode identity testing.

pub mod expr;
pub mod poly;
pub mod sample;
pub mod sexpr;
pub mod var;

pub use expr::{Point, RationalExpr};
pub use poly::{gcd, Monomial, Poly};
pub use sample::{
    check_at_points, derive_seed, format_point, identity_check, CheckMode, Sampler, Verdict,
};
pub use var::VarId;
