//! Two-mode identity testing: exact symbolic normalisation, and randomized
//! evaluation at rational points (Schwartz–Zippel style).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::expr::{Point, RationalExpr};
use super::var::VarId;
use crate::{Error, Result};

/// How many times a vanishing denominator may be resampled before the
/// sampling domain is declared degenerate.
pub const RESAMPLE_BUDGET: u32 = 200;

/// Outcome of an identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Zero,
    NonZero { witness: Point, value: BigRational },
}

impl Verdict {
    pub fn is_zero(&self) -> bool {
        matches!(self, Verdict::Zero)
    }
}

/// Identity-testing mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Exact: the verdict is `Zero` iff the canonical numerator is the zero
    /// polynomial.
    Symbolic,
    /// Probabilistic: evaluate at `trials` uniformly sampled rational points
    /// with numerators in `[-coeff_bound, coeff_bound]` and denominators in
    /// `[1, coeff_bound]`, resampling points that hit a pole.
    Randomized {
        trials: u32,
        seed: u64,
        coeff_bound: i64,
    },
}

impl CheckMode {
    pub fn randomized(seed: u64) -> Self {
        CheckMode::Randomized {
            trials: 20,
            seed,
            coeff_bound: 1000,
        }
    }
}

/// Seeded sampler for rational coordinates.
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64, coeff_bound: i64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: coeff_bound.max(2),
        }
    }

    pub fn rational(&mut self) -> BigRational {
        let num = self.rng.gen_range(-self.bound..=self.bound);
        let den = self.rng.gen_range(1..=self.bound);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// A point assigning a random rational to each listed variable.
    pub fn point(&mut self, vars: &[VarId]) -> Point {
        vars.iter().map(|&v| (v, self.rational())).collect()
    }
}

/// Derives a per-check seed from a master seed and a stable label, so that
/// checks sample independent streams while the whole run stays reproducible.
pub fn derive_seed(master: u64, label: &str) -> u64 {
    // FNV-1a
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ master
}

/// Checks whether `expr` is identically zero.
pub fn identity_check(expr: &RationalExpr, mode: &CheckMode) -> Result<Verdict> {
    match *mode {
        CheckMode::Symbolic => {
            if expr.is_zero() {
                return Ok(Verdict::Zero);
            }
            // The canonical numerator is a nonzero polynomial; attach a
            // witness point for debuggability (found almost surely).
            let vars: Vec<VarId> = expr.vars().into_iter().collect();
            let mut sampler = Sampler::new(derive_seed(0, "symbolic-witness"), 1000);
            for _ in 0..RESAMPLE_BUDGET {
                let pt = sampler.point(&vars);
                if let Some(v) = expr.eval(&pt) {
                    if !v.is_zero() {
                        return Ok(Verdict::NonZero {
                            witness: pt,
                            value: v,
                        });
                    }
                }
            }
            Ok(Verdict::NonZero {
                witness: Point::new(),
                value: BigRational::zero(),
            })
        }
        CheckMode::Randomized {
            trials,
            seed,
            coeff_bound,
        } => {
            if expr.is_zero() {
                return Ok(Verdict::Zero);
            }
            let vars: Vec<VarId> = expr.vars().into_iter().collect();
            let mut sampler = Sampler::new(seed, coeff_bound);
            let mut budget = RESAMPLE_BUDGET;
            let mut done = 0;
            while done < trials {
                let pt = sampler.point(&vars);
                match expr.eval(&pt) {
                    Some(v) if v.is_zero() => {
                        done += 1;
                    }
                    Some(v) => {
                        return Ok(Verdict::NonZero {
                            witness: pt,
                            value: v,
                        })
                    }
                    None => {
                        if budget == 0 {
                            return Err(Error::DegenerateSampling);
                        }
                        budget -= 1;
                    }
                }
            }
            Ok(Verdict::Zero)
        }
    }
}

/// Checks `expr == 0` at the given points exactly, resampling nothing: points
/// where the expression has a pole are skipped, and at least one point must
/// remain.
pub fn check_at_points(expr: &RationalExpr, points: &[Point]) -> Result<Verdict> {
    if expr.is_zero() {
        return Ok(Verdict::Zero);
    }
    let mut evaluated = 0;
    for pt in points {
        match expr.eval(pt) {
            Some(v) if v.is_zero() => evaluated += 1,
            Some(v) => {
                return Ok(Verdict::NonZero {
                    witness: pt.clone(),
                    value: v,
                })
            }
            None => {}
        }
    }
    if evaluated == 0 {
        return Err(Error::DegenerateSampling);
    }
    Ok(Verdict::Zero)
}

/// Renders a witness point compactly for reports.
pub fn format_point(pt: &Point) -> String {
    let parts: Vec<String> = pt.iter().map(|(v, x)| format!("{v}={x}")).collect();
    parts.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symexpr::poly::Poly;

    fn y(i: u8, j: u8) -> RationalExpr {
        RationalExpr::var(VarId::y(i, j))
    }

    #[test]
    fn symbolic_verdicts() {
        let z = y(1, 1).sub(&y(1, 1));
        assert!(identity_check(&z, &CheckMode::Symbolic).unwrap().is_zero());
        let nz = y(1, 1).sub(&y(2, 2));
        assert!(!identity_check(&nz, &CheckMode::Symbolic).unwrap().is_zero());
    }

    #[test]
    fn randomized_finds_witness() {
        let nz = y(1, 1).sub(&y(2, 2));
        let mode = CheckMode::randomized(7);
        match identity_check(&nz, &mode).unwrap() {
            Verdict::NonZero { witness, value } => {
                assert_eq!(nz.eval(&witness).unwrap(), value);
                assert!(!value.is_zero());
            }
            Verdict::Zero => panic!("distinct variables cannot agree at 20 random points"),
        }
    }

    #[test]
    fn randomized_is_deterministic() {
        let nz = y(1, 1).mul(&y(1, 2)).sub(&y(2, 2));
        let mode = CheckMode::randomized(42);
        let a = identity_check(&nz, &mode).unwrap();
        let b = identity_check(&nz, &mode).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_domain_is_detected() {
        // 1 / (y11 - y11) cannot be built; force a pole-only domain instead:
        // 1 / 0 is rejected at construction, so check the resample budget by
        // a denominator that vanishes on the whole sampling lattice is not
        // constructible either -- the error path is exercised through
        // check_at_points with pole-only points.
        let inv = RationalExpr::normalize(Poly::one(), Poly::var(VarId::y(1, 1))).unwrap();
        let mut pt = Point::new();
        pt.insert(VarId::y(1, 1), BigRational::zero());
        assert_eq!(
            check_at_points(&inv, &[pt]),
            Err(Error::DegenerateSampling)
        );
    }

    #[test]
    fn derive_seed_is_stable() {
        assert_eq!(derive_seed(1, "a"), derive_seed(1, "a"));
        assert_ne!(derive_seed(1, "a"), derive_seed(1, "b"));
        assert_ne!(derive_seed(1, "a"), derive_seed(2, "a"));
    }
}
