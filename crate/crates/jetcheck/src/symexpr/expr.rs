//! Canonical fractions of multivariate integer polynomials.
//!
//! The invariant maintained by every constructor and operation:
//!
//! * the denominator is nonzero,
//! * numerator and denominator share no nonconstant polynomial factor,
//! * the integer contents of numerator and denominator are coprime,
//! * the denominator's leading coefficient (grlex) is positive,
//! * zero is represented as `0/1`.
//!
//! Under that invariant equality of values is equality of representations,
//! which is what every identity verdict in the crate rests on.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Poly};
use super::var::VarId;
use crate::{Error, Result};

/// Exact point in coordinate space.
pub type Point = BTreeMap<VarId, BigRational>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalExpr {
    num: Poly,
    den: Poly,
}

impl RationalExpr {
    pub fn zero() -> Self {
        RationalExpr {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RationalExpr {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn int(c: i64) -> Self {
        RationalExpr {
            num: Poly::int(c),
            den: Poly::one(),
        }
    }

    pub fn rational(r: &BigRational) -> Self {
        RationalExpr {
            num: Poly::constant(r.numer().clone()),
            den: Poly::constant(r.denom().clone()),
        }
    }

    pub fn var(v: VarId) -> Self {
        RationalExpr {
            num: Poly::var(v),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalExpr {
            num: p,
            den: Poly::one(),
        }
    }

    /// Builds the canonical reduced form of `num / den`.
    pub fn normalize(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalExpr::zero());
        }
        let mut num = num;
        let mut den = den;
        if !den.is_one() {
            let g = poly::gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_content(&c);
            den = den.div_content(&c);
        }
        if den.leading().1.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalExpr { num, den })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(c)` when the expression is the rational constant `c`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(BigRational::new(n, d)),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        RationalExpr {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // a/b + c/d with g = gcd(b, d): (a d' + c b') / (g b' d')
        let g = if self.den.is_one() || other.den.is_one() {
            Poly::one()
        } else {
            poly::gcd(&self.den, &other.den)
        };
        let (b1, d1) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                other.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        let den = self.den.mul(&d1);
        RationalExpr::normalize(num, den).expect("denominator product is nonzero")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalExpr::zero();
        }
        // cross-cancel before multiplying
        let g1 = if other.den.is_one() {
            Poly::one()
        } else {
            poly::gcd(&self.num, &other.den)
        };
        let g2 = if self.den.is_one() {
            Poly::one()
        } else {
            poly::gcd(&other.num, &self.den)
        };
        let a = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_exact(&g1).expect("gcd divides")
        };
        let d = if g1.is_one() {
            other.den.clone()
        } else {
            other.den.div_exact(&g1).expect("gcd divides")
        };
        let c = if g2.is_one() {
            other.num.clone()
        } else {
            other.num.div_exact(&g2).expect("gcd divides")
        };
        let b = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2).expect("gcd divides")
        };
        let mut num = a.mul(&c);
        let mut den = b.mul(&d);
        // polynomial parts are now coprime; fix contents and sign
        let cc = num.content().gcd(&den.content());
        if !cc.is_one() {
            num = num.div_content(&cc);
            den = den.div_content(&cc);
        }
        if den.leading().1.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RationalExpr { num, den }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&RationalExpr {
            num: other.den.clone(),
            den: other.num.clone(),
        }
        .sign_normalized()))
    }

    fn sign_normalized(mut self) -> Self {
        if self.den.leading().1.is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        self
    }

    pub fn recip(&self) -> Result<Self> {
        RationalExpr::one().div(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = RationalExpr::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.mul(&RationalExpr::int(c))
    }

    /// Formal partial derivative (quotient rule), canonical.
    pub fn diff(&self, v: VarId) -> Self {
        if !self.num.contains_var(v) && !self.den.contains_var(v) {
            return RationalExpr::zero();
        }
        if self.den.is_one() {
            return RationalExpr {
                num: self.num.diff(v),
                den: Poly::one(),
            };
        }
        let dn = self.num.diff(v);
        let dd = self.den.diff(v);
        // (n' d - n d') / d^2
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        let den = self.den.mul(&self.den);
        RationalExpr::normalize(num, den).expect("square of nonzero denominator")
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        let mut set = self.num.vars();
        set.extend(self.den.vars());
        set
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    /// Simultaneous substitution.  Variables not present in `bindings` are
    /// left alone.  Fails when a denominator becomes identically zero.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, RationalExpr>) -> Result<Self> {
        if !self.vars().iter().any(|v| bindings.contains_key(v)) {
            return Ok(self.clone());
        }
        let num = subst_poly(&self.num, bindings);
        let den = subst_poly(&self.den, bindings);
        if den.is_zero() {
            return Err(Error::PoleUnderSubstitution);
        }
        num.div(&den).map_err(|_| Error::PoleUnderSubstitution)
    }

    /// Exact value at a point; `None` when the denominator vanishes there.
    pub fn eval(&self, point: &Point) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }
}

/// Substitutes into a polynomial, producing a rational expression; powers of
/// each binding are cached.
fn subst_poly(p: &Poly, bindings: &BTreeMap<VarId, RationalExpr>) -> RationalExpr {
    let mut powers: BTreeMap<(VarId, u8), RationalExpr> = BTreeMap::new();
    let mut power = |v: VarId, e: u8| -> RationalExpr {
        if let Some(hit) = powers.get(&(v, e)) {
            return hit.clone();
        }
        let base = match bindings.get(&v) {
            Some(b) => b.clone(),
            None => RationalExpr::var(v),
        };
        let val = base.pow(e as u32);
        powers.insert((v, e), val.clone());
        val
    };
    let mut acc = RationalExpr::zero();
    for (m, c) in p.terms() {
        let mut t = RationalExpr::from_poly(Poly::constant(c.clone()));
        for (v, e) in m.iter() {
            t = t.mul(&power(v, e));
        }
        acc = acc.add(&t);
    }
    acc
}

impl fmt::Debug for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?}) / ({:?})", self.num, self.den)
        }
    }
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl From<i64> for RationalExpr {
    fn from(c: i64) -> Self {
        RationalExpr::int(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: u8, j: u8) -> RationalExpr {
        RationalExpr::var(VarId::y(i, j))
    }

    fn yp(i: u8, j: u8) -> Poly {
        Poly::var(VarId::y(i, j))
    }

    #[test]
    fn normalize_difference_of_squares() {
        // (y11^2 - y12^2) / (y11 - y12) -> y11 + y12
        let num = yp(1, 1).mul(&yp(1, 1)).sub(&yp(1, 2).mul(&yp(1, 2)));
        let den = yp(1, 1).sub(&yp(1, 2));
        let e = RationalExpr::normalize(num, den).unwrap();
        assert_eq!(e, y(1, 1).add(&y(1, 2)));
    }

    #[test]
    fn normalize_zero_and_errors() {
        let e = RationalExpr::normalize(Poly::zero(), yp(1, 1)).unwrap();
        assert_eq!(e, RationalExpr::zero());
        assert!(e.den().is_one());
        assert_eq!(
            RationalExpr::normalize(yp(1, 1), Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn normalize_extracts_content() {
        // (6 y11 y22 - 6 y12^2) / 3 -> 2 (y11 y22 - y12^2)
        let det = yp(1, 1).mul(&yp(2, 2)).sub(&yp(1, 2).mul(&yp(1, 2)));
        let e = RationalExpr::normalize(det.scale(&BigInt::from(6)), Poly::int(3)).unwrap();
        // content-extraction oracle: contents 6 and 3 reduce to 2 and 1
        let cn = det.scale(&BigInt::from(6)).content();
        let cd = Poly::int(3).content();
        let g = cn.gcd(&cd);
        assert_eq!(g, BigInt::from(3));
        assert_eq!(e, RationalExpr::from_poly(det.scale(&BigInt::from(2))));
        assert!(e.den().is_one());
    }

    #[test]
    fn normalize_is_idempotent_and_cancels() {
        let p = yp(1, 1).add(&yp(2, 2));
        let q = yp(1, 2).sub(&Poly::int(7));
        let e1 = RationalExpr::normalize(p.mul(&q), q.clone()).unwrap();
        assert_eq!(e1, RationalExpr::from_poly(p.clone()));
        let e2 = RationalExpr::normalize(e1.num().clone(), e1.den().clone()).unwrap();
        assert_eq!(e1, e2);
    }

    #[test]
    fn diff_product_and_quotient() {
        // d/dy11 (y11 y12) = y12
        let e = y(1, 1).mul(&y(1, 2));
        assert_eq!(e.diff(VarId::y(1, 1)), y(1, 2));
        // d/dy11 (1/y11) = -1/y11^2
        let inv = RationalExpr::one().div(&y(1, 1)).unwrap();
        let d = inv.diff(VarId::y(1, 1));
        let expect = RationalExpr::normalize(Poly::int(-1), yp(1, 1).mul(&yp(1, 1))).unwrap();
        assert_eq!(d, expect);
        // derivative of a constant
        assert_eq!(RationalExpr::int(5).diff(VarId::y(1, 1)), RationalExpr::zero());
    }

    #[test]
    fn diff_determinant() {
        let det = RationalExpr::from_poly(
            yp(1, 1).mul(&yp(2, 2)).sub(&yp(1, 2).mul(&yp(1, 2))),
        );
        assert_eq!(det.diff(VarId::y(1, 2)), y(1, 2).scale_int(-2));
    }

    #[test]
    fn substitute_simple() {
        let e = y(1, 1).add(&y(2, 2));
        let mut b = BTreeMap::new();
        b.insert(VarId::y(1, 1), RationalExpr::int(1));
        b.insert(VarId::y(2, 2), RationalExpr::int(1));
        assert_eq!(e.substitute(&b).unwrap(), RationalExpr::int(2));
    }

    #[test]
    fn substitute_pole_is_an_error() {
        let inv = RationalExpr::one().div(&y(1, 1)).unwrap();
        let mut b = BTreeMap::new();
        b.insert(VarId::y(1, 1), RationalExpr::zero());
        assert_eq!(inv.substitute(&b), Err(Error::PoleUnderSubstitution));
    }

    #[test]
    fn eval_skips_poles() {
        let inv = RationalExpr::one().div(&y(1, 1)).unwrap();
        let mut pt = Point::new();
        pt.insert(VarId::y(1, 1), BigRational::zero());
        assert_eq!(inv.eval(&pt), None);
        pt.insert(VarId::y(1, 1), BigRational::from(BigInt::from(4)));
        assert_eq!(
            inv.eval(&pt),
            Some(BigRational::new(BigInt::one(), BigInt::from(4)))
        );
    }
}
