//! Coordinate charts for the bundles in play, with deterministic coordinate
//! enumeration, closed-form fibre dimensions, the symbolic inverse metric and
//! chart-aware point sampling.

use std::collections::BTreeMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::symexpr::{Point, Poly, RationalExpr, Sampler, VarId};
use crate::{Error, Result};

/// The spaces covered by this atlas.  `Csym` is the sub-bundle of
/// torsion-free connections; `MxC` is the fibred product of the metric and
/// connection bundles; `J1`/`J2`/`J3` are jet prolongations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    M,
    C,
    Csym,
    MxC,
    MxCsym,
    J1MxC,
    J1MxCsym,
    J1M,
    J2M,
    J3M,
}

impl Space {
    pub fn has_metric(self) -> bool {
        !matches!(self, Space::C | Space::Csym)
    }

    pub fn has_connection(self) -> bool {
        matches!(
            self,
            Space::C | Space::Csym | Space::MxC | Space::MxCsym | Space::J1MxC | Space::J1MxCsym
        )
    }

    /// Torsion-free connection fibre (lower pair of `A^h_{jk}` symmetric)?
    pub fn symmetric_connection(self) -> bool {
        matches!(self, Space::Csym | Space::MxCsym | Space::J1MxCsym)
    }

    /// Number of jet layers carried by the chart.
    pub fn jet_depth(self) -> u8 {
        match self {
            Space::M | Space::C | Space::Csym | Space::MxC | Space::MxCsym => 0,
            Space::J1MxC | Space::J1MxCsym | Space::J1M => 1,
            Space::J2M => 2,
            Space::J3M => 3,
        }
    }

    /// The jet prolongation of this space, when part of the atlas.
    pub fn prolonged(self) -> Option<Space> {
        match self {
            Space::M => Some(Space::J1M),
            Space::MxC => Some(Space::J1MxC),
            Space::MxCsym => Some(Space::J1MxCsym),
            Space::J1M => Some(Space::J2M),
            Space::J2M => Some(Space::J3M),
            _ => None,
        }
    }

    /// The underlying order-zero space.
    pub fn base_space(self) -> Space {
        match self {
            Space::J1M | Space::J2M | Space::J3M => Space::M,
            Space::J1MxC => Space::MxC,
            Space::J1MxCsym => Space::MxCsym,
            s => s,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Space::M => "M",
            Space::C => "C",
            Space::Csym => "Csym",
            Space::MxC => "MxC",
            Space::MxCsym => "MxCsym",
            Space::J1MxC => "J1MxC",
            Space::J1MxCsym => "J1MxCsym",
            Space::J1M => "J1M",
            Space::J2M => "J2M",
            Space::J3M => "J3M",
        }
    }
}

/// Dimension record of a chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChartDims {
    pub base: usize,
    pub fibre: usize,
    pub jet1: usize,
    pub jet2: usize,
    pub jet3: usize,
    pub total: usize,
}

/// A named coordinate system over `R^n` with enumerated, canonically ordered
/// coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChartSpec {
    pub n: u8,
    pub signature: (u8, u8),
    pub space: Space,
}

impl ChartSpec {
    pub fn new(n: u8, signature: (u8, u8), space: Space) -> Result<Self> {
        if !(2..=4).contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        if signature.0 + signature.1 != n {
            return Err(Error::InvalidSignature(signature.0, signature.1));
        }
        Ok(ChartSpec { n, signature, space })
    }

    /// Chart with the default Lorentzian-type signature `(n-1, 1)`.
    pub fn standard(n: u8, space: Space) -> Result<Self> {
        ChartSpec::new(n, (n - 1, 1), space)
    }

    /// Same space family, different space.
    pub fn with_space(&self, space: Space) -> ChartSpec {
        ChartSpec { space, ..*self }
    }

    /// Two charts describe the same coordinates when dimension and space
    /// agree; the signature only gates point sampling.
    pub fn same_coordinates(&self, other: &ChartSpec) -> bool {
        self.n == other.n && self.space == other.space
    }

    pub fn sym_a(&self) -> bool {
        self.space.symmetric_connection()
    }

    // -- canonical index helpers --------------------------------------------

    pub fn x(&self, i: u8) -> VarId {
        VarId::x(i)
    }

    pub fn y(&self, i: u8, j: u8) -> VarId {
        VarId::y(i, j)
    }

    pub fn yj(&self, i: u8, j: u8, k: u8) -> VarId {
        VarId::y_jet(i, j, k)
    }

    pub fn yjj(&self, i: u8, j: u8, k: u8, l: u8) -> VarId {
        VarId::y_jet2(i, j, k, l)
    }

    /// Connection coordinate, canonicalised on torsion-free charts.
    pub fn a(&self, h: u8, j: u8, k: u8) -> VarId {
        if self.sym_a() {
            VarId::a_sym(h, j, k)
        } else {
            VarId::a(h, j, k)
        }
    }

    pub fn aj(&self, h: u8, j: u8, k: u8, l: u8) -> VarId {
        if self.sym_a() {
            VarId::a_jet_sym(h, j, k, l)
        } else {
            VarId::a_jet(h, j, k, l)
        }
    }

    // -- enumeration ---------------------------------------------------------

    fn y_pairs(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i..=self.n {
                out.push((i, j));
            }
        }
        out
    }

    fn a_pairs(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for j in 1..=self.n {
            for k in 1..=self.n {
                if self.sym_a() && k < j {
                    continue;
                }
                out.push((j, k));
            }
        }
        out
    }

    /// Deterministic coordinate enumeration: base, then fibre (metric before
    /// connection), then each jet layer in the same order.
    pub fn coords(&self) -> Vec<VarId> {
        let n = self.n;
        let mut out: Vec<VarId> = (1..=n).map(VarId::x).collect();
        let has_y = self.space.has_metric();
        let has_a = self.space.has_connection();
        if has_y {
            for (i, j) in self.y_pairs() {
                out.push(VarId::Y(i, j));
            }
        }
        if has_a {
            for h in 1..=n {
                for (j, k) in self.a_pairs() {
                    out.push(VarId::A(h, j, k));
                }
            }
        }
        if self.space.jet_depth() >= 1 {
            if has_y {
                for (i, j) in self.y_pairs() {
                    for k in 1..=n {
                        out.push(VarId::YJet(i, j, k));
                    }
                }
            }
            if has_a {
                for h in 1..=n {
                    for (j, k) in self.a_pairs() {
                        for l in 1..=n {
                            out.push(VarId::AJet(h, j, k, l));
                        }
                    }
                }
            }
        }
        if self.space.jet_depth() >= 2 {
            for (i, j) in self.y_pairs() {
                for k in 1..=n {
                    for l in k..=n {
                        out.push(VarId::YJet2(i, j, k, l));
                    }
                }
            }
        }
        if self.space.jet_depth() >= 3 {
            for (i, j) in self.y_pairs() {
                for k in 1..=n {
                    for l in k..=n {
                        for m in l..=n {
                            out.push(VarId::YJet3(i, j, k, l, m));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, v: VarId) -> bool {
        let n = self.n;
        let in_range = |i: u8| (1..=n).contains(&i);
        match v {
            VarId::X(i) => in_range(i),
            VarId::Y(i, j) => self.space.has_metric() && in_range(i) && in_range(j) && i <= j,
            VarId::A(h, j, k) => {
                self.space.has_connection()
                    && in_range(h)
                    && in_range(j)
                    && in_range(k)
                    && (!self.sym_a() || j <= k)
            }
            VarId::YJet(i, j, k) => {
                self.space.has_metric()
                    && self.space.jet_depth() >= 1
                    && in_range(i)
                    && in_range(j)
                    && in_range(k)
                    && i <= j
            }
            VarId::AJet(h, j, k, l) => {
                self.space.has_connection()
                    && self.space.jet_depth() >= 1
                    && [h, j, k, l].iter().all(|&i| in_range(i))
                    && (!self.sym_a() || j <= k)
            }
            VarId::YJet2(i, j, k, l) => {
                self.space.jet_depth() >= 2
                    && [i, j, k, l].iter().all(|&t| in_range(t))
                    && i <= j
                    && k <= l
            }
            VarId::YJet3(i, j, k, l, m) => {
                self.space.jet_depth() >= 3
                    && [i, j, k, l, m].iter().all(|&t| in_range(t))
                    && i <= j
                    && k <= l
                    && l <= m
            }
        }
    }

    /// Verifies that an expression only uses this chart's coordinates.
    pub fn check_expr(&self, e: &RationalExpr) -> Result<()> {
        for v in e.vars() {
            if !self.contains(v) {
                return Err(Error::CoordinateOutsideChart(v.to_string(), self.space));
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> ChartDims {
        let n = self.n as usize;
        let my = n * (n + 1) / 2;
        let ca = if self.space.has_connection() {
            if self.sym_a() {
                n * n * (n + 1) / 2
            } else {
                n * n * n
            }
        } else {
            0
        };
        let y_fibre = if self.space.has_metric() { my } else { 0 };
        let fibre = y_fibre + ca;
        let jet1 = if self.space.jet_depth() >= 1 {
            (y_fibre + ca) * n
        } else {
            0
        };
        let jet2 = if self.space.jet_depth() >= 2 {
            my * my
        } else {
            0
        };
        let jet3 = if self.space.jet_depth() >= 3 {
            my * (n * (n + 1) * (n + 2) / 6)
        } else {
            0
        };
        ChartDims {
            base: n,
            fibre,
            jet1,
            jet2,
            jet3,
            total: n + fibre + jet1 + jet2 + jet3,
        }
    }

    /// Chart description for reports: coordinate names in order, with their
    /// symmetry class.
    pub fn to_json(&self) -> Value {
        let class = |v: VarId| match v {
            VarId::X(_) => "base",
            VarId::Y(..) => "metric",
            VarId::A(..) => "connection",
            VarId::YJet(..) => "metric-jet",
            VarId::AJet(..) => "connection-jet",
            VarId::YJet2(..) => "metric-jet2",
            VarId::YJet3(..) => "metric-jet3",
        };
        let coords: Vec<Value> = self
            .coords()
            .into_iter()
            .map(|v| json!({ "name": v.to_string(), "class": class(v) }))
            .collect();
        json!({
            "n": self.n,
            "signature": [self.signature.0, self.signature.1],
            "space": self.space.name(),
            "symmetric_connection": self.sym_a(),
            "coordinates": coords,
        })
    }

    /// Samples a random rational point on the chart.  When the chart carries
    /// metric coordinates, points where `det(y)` does not have the sign
    /// `(-1)^{n^-}` required by the signature (in particular singular points)
    /// are resampled.
    pub fn sample_point(&self, sampler: &mut Sampler) -> Result<Point> {
        let coords = self.coords();
        if !self.space.has_metric() {
            return Ok(sampler.point(&coords));
        }
        let det = metric_det(self.n);
        let want_positive = self.signature.1 % 2 == 0;
        for _ in 0..crate::symexpr::sample::RESAMPLE_BUDGET {
            let pt = sampler.point(&coords);
            let d = det.eval(&pt);
            if d.is_zero() {
                continue;
            }
            if d.is_positive() == want_positive {
                return Ok(pt);
            }
        }
        Err(Error::DegenerateSampling)
    }
}

/// `det(y_{ij})` as a polynomial in the canonical metric coordinates.
pub fn metric_det(n: u8) -> Poly {
    let idx: Vec<u8> = (1..=n).collect();
    minor_det(&idx, &idx)
}

/// The symbolic inverse metric `y^{ij}` (adjugate over determinant), as an
/// `n x n` matrix of canonical rational expressions.
pub fn inverse_metric(n: u8) -> Result<Vec<Vec<RationalExpr>>> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    static CACHE: LazyLock<Mutex<BTreeMap<u8, Vec<Vec<RationalExpr>>>>> =
        LazyLock::new(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = CACHE.lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let det = metric_det(n);
    let idx: Vec<u8> = (1..=n).collect();
    let mut out = vec![vec![RationalExpr::zero(); n as usize]; n as usize];
    for i in 1..=n {
        for j in 1..=n {
            // cofactor C_{ji} / det  (adjugate is the transposed cofactor
            // matrix; the metric is symmetric so this is symmetric too)
            let rows: Vec<u8> = idx.iter().copied().filter(|&r| r != j).collect();
            let cols: Vec<u8> = idx.iter().copied().filter(|&c| c != i).collect();
            let minor = if rows.is_empty() {
                Poly::one()
            } else {
                minor_det(&rows, &cols)
            };
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            let num = minor.scale(&BigInt::from(sign));
            out[(i - 1) as usize][(j - 1) as usize] =
                RationalExpr::normalize(num, det.clone())?;
        }
    }
    CACHE.lock().unwrap().insert(n, out.clone());
    Ok(out)
}

fn minor_det(rows: &[u8], cols: &[u8]) -> Poly {
    if rows.len() == 1 {
        return Poly::var(VarId::y(rows[0], cols[0]));
    }
    let mut acc = Poly::zero();
    let r = rows[0];
    for (ci, &c) in cols.iter().enumerate() {
        let sub_rows: Vec<u8> = rows[1..].to_vec();
        let sub_cols: Vec<u8> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = minor_det(&sub_rows, &sub_cols).mul(&Poly::var(VarId::y(r, c)));
        if ci % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// `y^{ij}` as an expression (1-based indices).
pub fn inv_y(n: u8, i: u8, j: u8) -> Result<RationalExpr> {
    let m = inverse_metric(n)?;
    Ok(m[(i - 1) as usize][(j - 1) as usize].clone())
}

/// Kronecker delta as an expression.
pub fn delta(i: u8, j: u8) -> RationalExpr {
    if i == j {
        RationalExpr::one()
    } else {
        RationalExpr::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symexpr::{identity_check, CheckMode};

    #[test]
    fn dims_match_closed_forms() {
        let c = ChartSpec::standard(2, Space::J1MxC).unwrap();
        let d = c.dims();
        assert_eq!((d.base, d.fibre, d.jet1, d.total), (2, 3 + 8, 6 + 16, 35));

        let c = ChartSpec::standard(2, Space::J2M).unwrap();
        let d = c.dims();
        assert_eq!((d.base, d.fibre, d.jet1, d.jet2, d.total), (2, 3, 6, 9, 20));

        let c = ChartSpec::standard(3, Space::J1MxC).unwrap();
        let d = c.dims();
        assert_eq!(
            (d.base, d.fibre, d.jet1, d.total),
            (3, 6 + 27, 18 + 81, 135)
        );

        let c = ChartSpec::standard(2, Space::J1MxCsym).unwrap();
        assert_eq!(c.dims().total, 2 + 3 + 6 + 6 + 12);
    }

    #[test]
    fn functionally_independent_invariant_count() {
        // dim J1(MxC) - n*C(n+3,3) = (5n^4 + 3n^3 - 5n^2 + 3n)/6
        for n in 2u8..=4 {
            let c = ChartSpec::standard(n, Space::J1MxC).unwrap();
            let total = c.dims().total as i64;
            let nn = n as i64;
            let gens = nn * (nn + 1) * (nn + 2) * (nn + 3) / 6;
            let expect = (5 * nn.pow(4) + 3 * nn.pow(3) - 5 * nn.pow(2) + 3 * nn) / 6;
            assert_eq!(total - gens, expect, "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_a_bijection() {
        for space in [
            Space::M,
            Space::C,
            Space::Csym,
            Space::MxC,
            Space::MxCsym,
            Space::J1MxC,
            Space::J1MxCsym,
            Space::J1M,
            Space::J2M,
            Space::J3M,
        ] {
            let c = ChartSpec::standard(3, space).unwrap();
            let coords = c.coords();
            assert_eq!(coords.len(), c.dims().total, "{space:?}");
            let set: std::collections::BTreeSet<_> = coords.iter().collect();
            assert_eq!(set.len(), coords.len(), "{space:?} has duplicates");
            for v in &coords {
                assert!(c.contains(*v), "{space:?} should contain {v}");
                // names round-trip
                assert_eq!(v.to_string().parse::<VarId>().unwrap(), *v);
            }
        }
    }

    #[test]
    fn inverse_metric_n2_closed_form() {
        let m = inverse_metric(2).unwrap();
        let det = metric_det(2);
        let expect = RationalExpr::normalize(Poly::var(VarId::y(2, 2)), det.clone()).unwrap();
        assert_eq!(m[0][0], expect);
        // flat evaluation
        let mut pt = Point::new();
        pt.insert(VarId::y(1, 1), BigRational::one());
        pt.insert(VarId::y(1, 2), BigRational::zero());
        pt.insert(VarId::y(2, 2), BigRational::one());
        for i in 0..2 {
            for j in 0..2 {
                let v = m[i][j].eval(&pt).unwrap();
                let expect = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(v, expect);
            }
        }
    }

    #[test]
    fn inverse_metric_product_identity() {
        for n in 2u8..=3 {
            let m = inverse_metric(n).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    let mut acc = RationalExpr::zero();
                    for k in 1..=n {
                        let y_kj = RationalExpr::var(VarId::y(k, j));
                        acc = acc.add(&m[(i - 1) as usize][(k - 1) as usize].mul(&y_kj));
                    }
                    let residual = acc.sub(&delta(i, j));
                    assert!(
                        identity_check(&residual, &CheckMode::Symbolic)
                            .unwrap()
                            .is_zero(),
                        "inverse-metric product identity fails at ({i},{j}) for n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn sampling_respects_signature() {
        use crate::symexpr::Sampler;
        for (np, nm) in [(2, 0), (1, 1), (0, 2)] {
            let chart = ChartSpec::new(2, (np, nm), Space::M).unwrap();
            let mut s = Sampler::new(11, 50);
            let det = metric_det(2);
            for _ in 0..5 {
                let pt = chart.sample_point(&mut s).unwrap();
                let d = det.eval(&pt);
                assert!(!d.is_zero());
                assert_eq!(d.is_positive(), nm % 2 == 0, "signature ({np},{nm})");
            }
        }
    }
}
