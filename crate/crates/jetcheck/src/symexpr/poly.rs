//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! Terms are kept sorted in descending graded-lexicographic order over the
//! canonical [`VarId`] order, so the representation is itself canonical and
//! equality is syntactic.  The GCD is the primitive subresultant PRS, which
//! is what fraction-field normalisation in [`super::expr`] rests on.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::var::VarId;

/// A power product, sorted by variable with strictly positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    vars: SmallVec<[(VarId, u8); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial {
            vars: smallvec::smallvec![(v, 1)],
        }
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.vars.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exponent(&self, v: VarId) -> u8 {
        self.vars
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u8)> + '_ {
        self.vars.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() && j < other.vars.len() {
            let (va, ea) = self.vars[i];
            let (vb, eb) = other.vars[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.vars[i..]);
        out.extend_from_slice(&other.vars[j..]);
        Monomial { vars: out }
    }

    /// Componentwise quotient; `None` if not divisible.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::new();
        let mut i = 0;
        for &(vb, eb) in &other.vars {
            loop {
                if i >= self.vars.len() {
                    return None;
                }
                let (va, ea) = self.vars[i];
                match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        i += 1;
                    }
                    Ordering::Equal => {
                        if ea < eb {
                            return None;
                        }
                        if ea > eb {
                            out.push((va, ea - eb));
                        }
                        i += 1;
                        break;
                    }
                    Ordering::Greater => return None,
                }
            }
        }
        out.extend_from_slice(&self.vars[i..]);
        Some(Monomial { vars: out })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() && j < other.vars.len() {
            let (va, ea) = self.vars[i];
            let (vb, eb) = other.vars[j];
            match va.cmp(&vb) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push((va, ea.min(eb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { vars: out }
    }

    /// Graded-lexicographic comparison: total degree first, then lex with an
    /// earlier variable (in `VarId` order) carrying more weight.
    pub fn cmp_grlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.vars.get(i), other.vars.get(j)) {
                (None, None) => return Ordering::Equal,
                // a still has variables while b is exhausted: with equal total
                // degree this cannot happen unless both are exhausted, but be
                // total anyway.
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Multivariate polynomial with `BigInt` coefficients, terms sorted in
/// descending grlex order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(BigInt::from(c))
    }

    pub fn var(v: VarId) -> Self {
        Poly {
            terms: vec![(Monomial::var(v), BigInt::one())],
        }
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Leading term under grlex (assumes nonzero).
    pub fn leading(&self) -> (&Monomial, &BigInt) {
        let (m, c) = &self.terms[0];
        (m, c)
    }

    fn from_map(map: HashMap<Monomial, BigInt>) -> Poly {
        let mut terms: Vec<(Monomial, BigInt)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp_grlex(&a.0));
        Poly { terms }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        // merge of two sorted term lists
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp_grlex(mb) {
                Ordering::Greater => {
                    terms.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    terms.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        terms.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Poly { terms }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut map: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(large.terms.len() * 2);
        for (ms, cs) in &small.terms {
            for (ml, cl) in &large.terms {
                let m = ms.mul(ml);
                let c = cs * cl;
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Poly::from_map(map)
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
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

    /// Sum of many polynomials via a single map merge.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Poly>) -> Poly {
        let mut map: HashMap<Monomial, BigInt> = HashMap::new();
        for p in items {
            for (m, c) in &p.terms {
                match map.entry(m.clone()) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c.clone());
                    }
                }
            }
        }
        Poly::from_map(map)
    }

    /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c` (must divide exactly).
    pub fn div_content(&self, c: &BigInt) -> Poly {
        debug_assert!(!c.is_zero());
        Poly {
            terms: self.terms.iter().map(|(m, cc)| (m.clone(), cc / c)).collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        self.div_content(&c)
    }

    /// Formal partial derivative.
    pub fn diff(&self, v: VarId) -> Poly {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let reduced = m.try_div(&Monomial::var(v)).expect("exponent checked");
            terms.push((reduced, c * BigInt::from(e)));
        }
        terms.sort_unstable_by(|a, b| b.0.cmp_grlex(&a.0));
        // monomials stay distinct under d/dv, no merging needed
        Poly { terms }
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        let mut set = BTreeSet::new();
        for (m, _) in &self.terms {
            for (v, _) in m.iter() {
                set.insert(v);
            }
        }
        set
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) > 0)
    }

    pub fn max_degree_in(&self, v: VarId) -> u8 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    /// Exact multivariate division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.as_constant() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, cc) in &self.terms {
                let (q, r) = cc.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                terms.push((m.clone(), q));
            }
            return Some(Poly { terms });
        }
        let (dm, dc) = d.leading();
        let mut rem = self.clone();
        let mut quo: Vec<(Monomial, BigInt)> = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading();
            let m = rm.try_div(dm)?;
            let (q, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            quo.push((m.clone(), q.clone()));
            rem = rem.sub(&d.mul_term(&m, &q));
        }
        quo.sort_unstable_by(|a, b| b.0.cmp_grlex(&a.0));
        Some(Poly { terms: quo })
    }

    /// Exact evaluation at a rational point; unbound variables are an error
    /// on the caller's side, so this panics if one is met.
    pub fn eval(&self, point: &BTreeMap<VarId, BigRational>) -> BigRational {
        let mut powers: HashMap<(VarId, u8), BigRational> = HashMap::new();
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            for (v, e) in m.iter() {
                let p = powers.entry((v, e)).or_insert_with(|| {
                    let base = point
                        .get(&v)
                        .unwrap_or_else(|| panic!("unbound variable {v} in evaluation"));
                    num_traits::pow::pow(base.clone(), e as usize)
                });
                t *= &*p;
            }
            acc += t;
        }
        acc
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v`;
    /// index = power of `v`.
    pub fn to_univariate(&self, v: VarId) -> Vec<Poly> {
        let deg = self.max_degree_in(v) as usize;
        let mut coeffs = vec![Poly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            let rest = if e == 0 {
                m.clone()
            } else {
                let mut vars: SmallVec<[(VarId, u8); 6]> = SmallVec::new();
                for (w, we) in m.iter() {
                    if w != v {
                        vars.push((w, we));
                    }
                }
                Monomial { vars }
            };
            coeffs[e] = coeffs[e].add(&Poly::term(rest, c.clone()));
        }
        coeffs
    }

    pub fn from_univariate(coeffs: &[Poly], v: VarId) -> Poly {
        let mut acc = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let vp = Poly::term(
                {
                    let mut m = Monomial::one();
                    for _ in 0..e {
                        m = m.mul(&Monomial::var(v));
                    }
                    m
                },
                BigInt::one(),
            );
            acc = acc.add(&c.mul(&vp));
        }
        acc
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m:?}")?;
            } else {
                write!(f, "{a}*{m:?}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// GCD: primitive subresultant PRS
// ---------------------------------------------------------------------------

/// Degree of a univariate coefficient vector (index of last nonzero entry).
fn udeg(coeffs: &[Poly]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

fn utrim(mut coeffs: Vec<Poly>) -> Vec<Poly> {
    while matches!(coeffs.last(), Some(c) if c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a  mod  b` for univariate
/// polynomials with `Poly` coefficients.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let da = udeg(a).expect("nonzero dividend");
    let db = udeg(b).expect("nonzero divisor");
    debug_assert!(da >= db);
    let lb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    let mut steps = (da - db + 1) as i64;
    while let Some(dr) = udeg(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        // r <- lb * r - lr * v^(dr-db) * b
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            if bc.is_zero() {
                continue;
            }
            r[i + shift] = r[i + shift].sub(&lr.mul(bc));
        }
        r = utrim(r);
        steps -= 1;
        if r.is_empty() {
            break;
        }
    }
    // normalise to the full pseudo-remainder power
    for _ in 0..steps {
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
    }
    r
}

/// Content of a univariate-with-poly-coefficients polynomial: the gcd of its
/// coefficients (a multivariate `Poly`).
fn ucontent(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.primitive() } else { gcd(&g, c) };
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive subresultant PRS gcd of primitive univariate inputs.
fn prs_gcd(a: Vec<Poly>, b: Vec<Poly>, v: VarId) -> Poly {
    let (mut a, mut b) = if udeg(&a) >= udeg(&b) { (a, b) } else { (b, a) };
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let da = udeg(&a).expect("nonzero");
        let db = udeg(&b).expect("nonzero");
        let delta = (da - db) as u32;
        let r = pseudo_rem(&a, &b);
        let Some(dr) = udeg(&r) else {
            // b divides (a power of lc(b) times) a: gcd is pp(b)
            let bp = Poly::from_univariate(&b, v);
            let cont = ucontent(&b);
            return bp.div_exact(&cont).expect("content divides");
        };
        if dr == 0 {
            // nonzero remainder free of v: primitive parts are coprime
            return Poly::one();
        }
        a = b;
        let denom = g.mul(&h.pow(delta));
        b = r
            .into_iter()
            .map(|c| {
                c.div_exact(&denom)
                    .expect("subresultant division is exact")
            })
            .collect();
        b = utrim(b);
        let dla = udeg(&a).expect("nonzero");
        g = a[dla].clone();
        h = if delta == 0 {
            h
        } else {
            // h <- g^delta / h^(delta-1)
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h-update is exact")
        };
    }
}

/// Primitive gcd (content 1, positive leading coefficient).  `gcd(0, 0) = 0`;
/// the gcd of anything with a nonzero constant is `1`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    // common monomial factor
    let ma = a
        .terms()
        .fold(None::<Monomial>, |acc, (m, _)| match acc {
            None => Some(m.clone()),
            Some(g) => Some(g.gcd(m)),
        })
        .unwrap();
    let mb = b
        .terms()
        .fold(None::<Monomial>, |acc, (m, _)| match acc {
            None => Some(m.clone()),
            Some(g) => Some(g.gcd(m)),
        })
        .unwrap();
    let m = ma.gcd(&mb);
    let a = a
        .div_exact(&Poly::term(ma, BigInt::one()))
        .expect("own monomial factor divides");
    let b = b
        .div_exact(&Poly::term(mb, BigInt::one()))
        .expect("own monomial factor divides");
    let mfac = Poly::term(m, BigInt::one());

    if a.as_constant().is_some() || b.as_constant().is_some() {
        return mfac;
    }
    let va = a.vars();
    let vb = b.vars();
    let common: Vec<VarId> = va.intersection(&vb).copied().collect();
    if common.is_empty() {
        return mfac;
    }
    // quick syntactic check
    if a.primitive() == b.primitive() {
        return mfac.mul(&a.primitive());
    }
    // main variable: smallest min-degree keeps the PRS short
    let v = *common
        .iter()
        .min_by_key(|&&v| a.max_degree_in(v).min(b.max_degree_in(v)))
        .unwrap();
    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = ucontent(&ua);
    let cb = ucontent(&ub);
    let pa: Vec<Poly> = ua
        .iter()
        .map(|c| c.div_exact(&ca).expect("content divides"))
        .collect();
    let pb: Vec<Poly> = ub
        .iter()
        .map(|c| c.div_exact(&cb).expect("content divides"))
        .collect();
    let cont_gcd = gcd(&ca, &cb);
    let pp_gcd = prs_gcd(pa, pb, v);
    mfac.mul(&cont_gcd).mul(&pp_gcd).primitive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: u8, j: u8) -> Poly {
        Poly::var(VarId::y(i, j))
    }

    #[test]
    fn grlex_orders_by_degree_then_lex() {
        let y11 = Monomial::var(VarId::y(1, 1));
        let y12 = Monomial::var(VarId::y(1, 2));
        let y11sq = y11.mul(&y11);
        assert_eq!(y11sq.cmp_grlex(&y12), Ordering::Greater);
        assert_eq!(y11.cmp_grlex(&y12), Ordering::Greater); // y11 earlier var
        assert_eq!(y11sq.cmp_grlex(&y11.mul(&y12)), Ordering::Greater);
    }

    #[test]
    fn arithmetic_basics() {
        let p = y(1, 1).add(&y(1, 2));
        let q = y(1, 1).sub(&y(1, 2));
        let prod = p.mul(&q);
        let expect = y(1, 1).mul(&y(1, 1)).sub(&y(1, 2).mul(&y(1, 2)));
        assert_eq!(prod, expect);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = y(1, 1).add(&y(1, 2));
        let q = y(1, 1).sub(&y(2, 2));
        let prod = p.mul(&q);
        assert_eq!(prod.div_exact(&p), Some(q.clone()));
        assert_eq!(prod.div_exact(&q), Some(p.clone()));
        assert_eq!(prod.div_exact(&y(1, 1)), None);
    }

    #[test]
    fn gcd_of_products() {
        let p = y(1, 1).add(&y(1, 2));
        let q = y(1, 1).sub(&y(2, 2));
        let r = y(2, 2).add(&Poly::int(3));
        let g = gcd(&p.mul(&r), &q.mul(&r));
        assert_eq!(g, r);
        // coprime inputs
        assert!(gcd(&p, &q).is_one());
    }

    #[test]
    fn gcd_with_contents_and_monomials() {
        let p = y(1, 1).mul(&y(1, 2)).scale(&BigInt::from(6));
        let q = y(1, 2).mul(&y(1, 2)).scale(&BigInt::from(4));
        let g = gcd(&p, &q);
        // primitive: integer content is not part of the polynomial gcd
        assert_eq!(g, y(1, 2));
    }

    #[test]
    fn diff_and_eval() {
        // d/dy12 (y11*y22 - y12^2) = -2 y12
        let det = y(1, 1).mul(&y(2, 2)).sub(&y(1, 2).mul(&y(1, 2)));
        let d = det.diff(VarId::y(1, 2));
        assert_eq!(d, y(1, 2).scale(&BigInt::from(-2)));

        let mut pt = BTreeMap::new();
        pt.insert(VarId::y(1, 1), BigRational::from(BigInt::from(2)));
        pt.insert(VarId::y(1, 2), BigRational::from(BigInt::from(3)));
        pt.insert(VarId::y(2, 2), BigRational::from(BigInt::from(5)));
        assert_eq!(det.eval(&pt), BigRational::from(BigInt::from(1)));
    }
}
