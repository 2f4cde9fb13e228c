//! Natural lifts of base vector fields to the metric and connection bundles
//! and their jet prolongations.
//!
//! The prolongation is implemented once, generically, through the truncated
//! total derivative recursion `v_{I+(j)} = D_j(v_I) - y_{I+(k)} du^k/dx^j`.
//! The explicit coordinate formulas for the lifted fields (first-jet metric
//! components, connection components and their jets) are transcribed a second
//! time in [`lift_product`]; the test suite asserts the two routes agree.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::charts::{ChartSpec, Space};
use crate::symexpr::{sexpr, RationalExpr, VarId};
use crate::{Error, Result};

/// A vector field on the base: components `u^i`, polynomial in the `x^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseField {
    pub n: u8,
    components: Vec<RationalExpr>,
}

impl BaseField {
    pub fn new(n: u8, components: Vec<RationalExpr>) -> Result<Self> {
        if components.len() != n as usize {
            return Err(Error::InvalidConfig(format!(
                "expected {n} components, got {}",
                components.len()
            )));
        }
        for (i, c) in components.iter().enumerate() {
            let poly_in_x = c.den().is_one() && c.vars().iter().all(|v| v.is_base());
            if !poly_in_x {
                return Err(Error::NotProjectable(format!("u^{}", i + 1)));
            }
        }
        Ok(BaseField { n, components })
    }

    /// The coordinate field `d/dx^h`.
    pub fn translation(n: u8, h: u8) -> Self {
        let mut components = vec![RationalExpr::zero(); n as usize];
        components[(h - 1) as usize] = RationalExpr::one();
        BaseField { n, components }
    }

    /// The monomial field `x^I d/dx^h` for a multi-index given as a list of
    /// base directions (e.g. `[1, 1, 2]` is `(x^1)^2 x^2`).
    pub fn monomial(n: u8, factors: &[u8], h: u8) -> Self {
        let mut expr = RationalExpr::one();
        for &i in factors {
            expr = expr.mul(&RationalExpr::var(VarId::x(i)));
        }
        let mut components = vec![RationalExpr::zero(); n as usize];
        components[(h - 1) as usize] = expr;
        BaseField { n, components }
    }

    pub fn component(&self, i: u8) -> &RationalExpr {
        &self.components[(i - 1) as usize]
    }

    /// `du^i / dx^k`.
    pub fn partial(&self, i: u8, k: u8) -> RationalExpr {
        self.component(i).diff(VarId::x(k))
    }

    pub fn partial2(&self, i: u8, k: u8, l: u8) -> RationalExpr {
        self.component(i).diff(VarId::x(k)).diff(VarId::x(l))
    }

    pub fn partial3(&self, i: u8, k: u8, l: u8, m: u8) -> RationalExpr {
        self.component(i)
            .diff(VarId::x(k))
            .diff(VarId::x(l))
            .diff(VarId::x(m))
    }

    /// Lie bracket `[self, other]` on the base.
    pub fn bracket(&self, other: &BaseField) -> BaseField {
        let n = self.n;
        let mut components = Vec::with_capacity(n as usize);
        for i in 1..=n {
            let mut acc = RationalExpr::zero();
            for j in 1..=n {
                let t1 = self.component(j).mul(&other.partial(i, j));
                let t2 = other.component(j).mul(&self.partial(i, j));
                acc = acc.add(&t1).sub(&t2);
            }
            components.push(acc);
        }
        BaseField { n, components }
    }

    /// Random polynomial field of total degree `<= max_deg` with small
    /// rational coefficients.
    pub fn random(n: u8, max_deg: u32, sampler: &mut crate::symexpr::Sampler) -> Self {
        let mut components = Vec::with_capacity(n as usize);
        for _ in 0..n {
            let mut acc = RationalExpr::zero();
            for m in monomials_up_to(n, max_deg) {
                let c = sampler.rational();
                let mut term = RationalExpr::rational(&c);
                for &i in &m {
                    term = term.mul(&RationalExpr::var(VarId::x(i)));
                }
                acc = acc.add(&term);
            }
            components.push(acc);
        }
        BaseField { n, components }
    }
}

/// All monomials in `x^1..x^n` of degree `<= max_deg`, as sorted factor
/// lists (the empty list is the constant monomial).
pub fn monomials_up_to(n: u8, max_deg: u32) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = vec![vec![]];
    let mut layer: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..max_deg {
        let mut next = Vec::new();
        for m in &layer {
            let start = m.last().copied().unwrap_or(1);
            for i in start..=n {
                let mut ext = m.clone();
                ext.push(i);
                next.push(ext);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Monomials of exact degree `deg`.
pub fn monomials_of_degree(n: u8, deg: u32) -> Vec<Vec<u8>> {
    monomials_up_to(n, deg)
        .into_iter()
        .filter(|m| m.len() == deg as usize)
        .collect()
}

/// A vector field on a chart: sparse map from coordinates to components
/// (missing keys are zero components).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    pub chart: ChartSpec,
    components: BTreeMap<VarId, RationalExpr>,
}

impl VectorField {
    pub fn new(chart: ChartSpec) -> Self {
        VectorField {
            chart,
            components: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, v: VarId, e: RationalExpr) {
        if e.is_zero() {
            self.components.remove(&v);
        } else {
            self.components.insert(v, e);
        }
    }

    pub fn add_to(&mut self, v: VarId, e: &RationalExpr) {
        if e.is_zero() {
            return;
        }
        let cur = self.components.remove(&v).unwrap_or_else(RationalExpr::zero);
        let sum = cur.add(e);
        if !sum.is_zero() {
            self.components.insert(v, sum);
        }
    }

    pub fn component(&self, v: VarId) -> RationalExpr {
        self.components
            .get(&v)
            .cloned()
            .unwrap_or_else(RationalExpr::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (&VarId, &RationalExpr)> {
        self.components.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Applies the field to a function: `X(f) = sum_v X^v df/dv`.
    pub fn apply(&self, f: &RationalExpr) -> RationalExpr {
        let mut acc = RationalExpr::zero();
        for (v, comp) in &self.components {
            if !f.contains_var(*v) {
                continue;
            }
            acc = acc.add(&comp.mul(&f.diff(*v)));
        }
        acc
    }

    /// Lie bracket `[self, other]`, computed componentwise as
    /// `X(Y^c) - Y(X^c)` per coordinate `c`.
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField> {
        if !self.chart.same_coordinates(&other.chart) {
            return Err(Error::ChartMismatch {
                expected: self.chart.space,
                got: other.chart.space,
            });
        }
        let mut out = VectorField::new(self.chart);
        for (v, yc) in &other.components {
            out.add_to(*v, &self.apply(yc));
        }
        for (v, xc) in &self.components {
            let t = other.apply(xc);
            out.add_to(*v, &t.neg());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RationalExpr) -> VectorField {
        let mut out = VectorField::new(self.chart);
        for (v, comp) in &self.components {
            out.set(*v, comp.mul(c));
        }
        out
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        let mut out = self.clone();
        for (v, comp) in &other.components {
            out.add_to(*v, comp);
        }
        out
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        let mut out = self.clone();
        for (v, comp) in &other.components {
            out.add_to(*v, &comp.neg());
        }
        out
    }

    /// Substitutes into every component (e.g. to evaluate at `x = 0`).
    pub fn substitute(&self, bindings: &BTreeMap<VarId, RationalExpr>) -> Result<VectorField> {
        let mut out = VectorField::new(self.chart);
        for (v, comp) in &self.components {
            out.set(*v, comp.substitute(bindings)?);
        }
        Ok(out)
    }

    /// Component values at a point, in chart coordinate order; `None` when a
    /// component has a pole there.
    pub fn value_at(&self, pt: &crate::symexpr::Point) -> Option<Vec<num_rational::BigRational>> {
        use num_traits::Zero;
        let mut out = Vec::new();
        for v in self.chart.coords() {
            match self.components.get(&v) {
                None => out.push(num_rational::BigRational::zero()),
                Some(c) => out.push(c.eval(pt)?),
            }
        }
        Some(out)
    }

    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .components
            .iter()
            .map(|(v, e)| (v.to_string(), Value::String(sexpr::to_text(e))))
            .collect();
        json!(map)
    }
}

/// Truncated total derivative `D_j f` on a jet chart: `df/dx^j` plus the jet
/// shift of every non-base variable appearing in `f`.  Fails if a variable
/// has no next jet layer.
pub fn total_derivative(f: &RationalExpr, j: u8) -> Result<RationalExpr> {
    let mut acc = f.diff(VarId::x(j));
    for v in f.vars() {
        if v.is_base() {
            continue;
        }
        let Some(next) = v.jet(j) else {
            return Err(Error::NoJetLayer(Space::J3M, v.jet_order() + 1));
        };
        acc = acc.add(&RationalExpr::var(next).mul(&f.diff(v)));
    }
    Ok(acc)
}

/// Natural lift of `u` to the bundle of metrics: the fibre component on
/// `y_{ij}` is `-(du^h/dx^i y_{hj} + du^h/dx^j y_{hi})`.
pub fn lift_metric(u: &BaseField, chart: &ChartSpec) -> Result<VectorField> {
    expect_space(chart, &[Space::M])?;
    let mut out = base_part(u, chart);
    set_metric_components(u, chart, &mut out);
    Ok(out)
}

/// Natural lift of `u` to the bundle of linear connections: component on
/// `A^i_{jk}` is
/// `-d2u^i/(dx^j dx^k) + du^i/dx^l A^l_{jk} - du^l/dx^k A^i_{jl} - du^l/dx^j A^i_{lk}`.
pub fn lift_connection(u: &BaseField, chart: &ChartSpec) -> Result<VectorField> {
    expect_space(chart, &[Space::C, Space::Csym])?;
    let mut out = base_part(u, chart);
    set_connection_components(u, chart, &mut out);
    Ok(out)
}

/// Natural lift of `u` to the fibred product (order zero, no jets).
pub fn lift_base_product(u: &BaseField, chart: &ChartSpec) -> Result<VectorField> {
    expect_space(chart, &[Space::MxC, Space::MxCsym])?;
    let mut out = base_part(u, chart);
    set_metric_components(u, chart, &mut out);
    set_connection_components(u, chart, &mut out);
    Ok(out)
}

fn set_metric_components(u: &BaseField, chart: &ChartSpec, out: &mut VectorField) {
    let n = chart.n;
    for i in 1..=n {
        for j in i..=n {
            let mut acc = RationalExpr::zero();
            for h in 1..=n {
                let t1 = u.partial(h, i).mul(&RationalExpr::var(chart.y(h, j)));
                let t2 = u.partial(h, j).mul(&RationalExpr::var(chart.y(h, i)));
                acc = acc.add(&t1).add(&t2);
            }
            out.set(chart.y(i, j), acc.neg());
        }
    }
}

fn set_connection_components(u: &BaseField, chart: &ChartSpec, out: &mut VectorField) {
    let n = chart.n;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if chart.sym_a() && k < j {
                    continue;
                }
                let mut acc = u.partial2(i, j, k).neg();
                for l in 1..=n {
                    let a = |h, p, q| RationalExpr::var(chart.a(h, p, q));
                    acc = acc
                        .add(&u.partial(i, l).mul(&a(l, j, k)))
                        .sub(&u.partial(l, k).mul(&a(i, j, l)))
                        .sub(&u.partial(l, j).mul(&a(i, l, k)));
                }
                out.set(chart.a(i, j, k), acc);
            }
        }
    }
}

fn base_part(u: &BaseField, chart: &ChartSpec) -> VectorField {
    let mut out = VectorField::new(*chart);
    for i in 1..=chart.n {
        out.set(VarId::x(i), u.component(i).clone());
    }
    out
}

fn expect_space(chart: &ChartSpec, allowed: &[Space]) -> Result<()> {
    if allowed.contains(&chart.space) {
        Ok(())
    } else {
        Err(Error::ChartMismatch {
            expected: allowed[0],
            got: chart.space,
        })
    }
}

/// Generic jet prolongation of a projectable vector field.
///
/// The input must live on an order-zero chart with base components depending
/// only on the `x^j`; the output lives on the `r`-jet chart.  Second-order
/// prolongation is only available where the atlas has a second jet layer
/// (the metric bundle).
pub fn prolong(x: &VectorField, r: u8) -> Result<VectorField> {
    if x.chart.space.jet_depth() != 0 {
        return Err(Error::ChartMismatch {
            expected: x.chart.space.base_space(),
            got: x.chart.space,
        });
    }
    for i in 1..=x.chart.n {
        let c = x.component(VarId::x(i));
        if !c.vars().iter().all(|v| v.is_base()) {
            return Err(Error::NotProjectable(format!("x_{i}")));
        }
    }
    let du = |m: u8, j: u8| x.component(VarId::x(m)).diff(VarId::x(j));
    let mut current = x.clone();
    for step in 0..r {
        let target_space = current
            .chart
            .space
            .prolonged()
            .ok_or(Error::NoJetLayer(current.chart.space, step + 1))?;
        let target = current.chart.with_space(target_space);
        let mut out = VectorField::new(target);
        for (v, comp) in current.components() {
            out.set(*v, comp.clone());
        }
        // new jet layer: v_{I+(j)} = D_j(v_I) - y_{I+(m)} du^m/dx^j
        let mut filled: std::collections::BTreeSet<VarId> = std::collections::BTreeSet::new();
        for coord in current.chart.coords() {
            if coord.is_base() || coord.jet_order() != step {
                continue;
            }
            let v_i = current.component(coord);
            for j in 1..=target.n {
                let new_coord = coord.jet(j).expect("target layer exists");
                // symmetric jet groups: each canonical coordinate once (the
                // recursion gives the same答案 either way; asserted in tests)
                if !filled.insert(new_coord) {
                    continue;
                }
                let mut comp = total_derivative(&v_i, j)?;
                for m in 1..=target.n {
                    let shifted = coord.jet(m).expect("same layer as new_coord");
                    comp = comp.sub(&RationalExpr::var(shifted).mul(&du(m, j)));
                }
                out.set(new_coord, comp);
            }
        }
        current = out;
    }
    Ok(current)
}

/// Natural lift of `u` to the first jet of the fibred product, assembled
/// from the explicit coordinate formulas (independent transcription of the
/// generic prolongation; the tests assert the two agree).
pub fn lift_product(u: &BaseField, chart: &ChartSpec) -> Result<VectorField> {
    expect_space(chart, &[Space::J1MxC, Space::J1MxCsym])?;
    let n = chart.n;
    let mut out = base_part(u, chart);
    let yv = |i, j| RationalExpr::var(chart.y(i, j));
    let yj = |i, j, k| RationalExpr::var(chart.yj(i, j, k));
    let av = |h, p, q| RationalExpr::var(chart.a(h, p, q));
    let avj = |h, p, q, l| RationalExpr::var(chart.aj(h, p, q, l));

    set_metric_components(u, chart, &mut out);
    // metric jet components:
    // v_ijk = -(d2u^h/(dx^i dx^k) y_hj + d2u^h/(dx^j dx^k) y_hi
    //           + du^h/dx^i y_hj,k + du^h/dx^j y_hi,k + du^h/dx^k y_ij,h)
    for i in 1..=n {
        for j in i..=n {
            for k in 1..=n {
                let mut acc = RationalExpr::zero();
                for h in 1..=n {
                    acc = acc
                        .add(&u.partial2(h, i, k).mul(&yv(h, j)))
                        .add(&u.partial2(h, j, k).mul(&yv(h, i)))
                        .add(&u.partial(h, i).mul(&yj(h, j, k)))
                        .add(&u.partial(h, j).mul(&yj(h, i, k)))
                        .add(&u.partial(h, k).mul(&yj(i, j, h)));
                }
                out.set(chart.yj(i, j, k), acc.neg());
            }
        }
    }
    set_connection_components(u, chart, &mut out);
    // connection jet components:
    // w^i_jkh = -d3u^i/(dx^h dx^j dx^k)
    //           + d2u^i/(dx^h dx^l) A^l_jk - d2u^l/(dx^h dx^k) A^i_jl
    //           - d2u^l/(dx^h dx^j) A^i_lk
    //           + du^i/dx^l A^l_jk,h - du^l/dx^k A^i_jl,h
    //           - du^l/dx^j A^i_lk,h - du^l/dx^h A^i_jk,l
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if chart.sym_a() && k < j {
                    continue;
                }
                for h in 1..=n {
                    let mut acc = u.partial3(i, j, k, h).neg();
                    for l in 1..=n {
                        acc = acc
                            .add(&u.partial2(i, h, l).mul(&av(l, j, k)))
                            .sub(&u.partial2(l, h, k).mul(&av(i, j, l)))
                            .sub(&u.partial2(l, h, j).mul(&av(i, l, k)))
                            .add(&u.partial(i, l).mul(&avj(l, j, k, h)))
                            .sub(&u.partial(l, k).mul(&avj(i, j, l, h)))
                            .sub(&u.partial(l, j).mul(&avj(i, l, k, h)))
                            .sub(&u.partial(l, h).mul(&avj(i, j, k, l)));
                    }
                    out.set(chart.aj(i, j, k, h), acc);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symexpr::Sampler;

    fn chart(n: u8, space: Space) -> ChartSpec {
        ChartSpec::standard(n, space).unwrap()
    }

    fn x1_field(n: u8) -> BaseField {
        BaseField::translation(n, 1)
    }

    #[test]
    fn translations_lift_trivially() {
        let m = chart(2, Space::M);
        let lifted = lift_metric(&x1_field(2), &m).unwrap();
        assert_eq!(lifted.component(VarId::x(1)), RationalExpr::one());
        for (v, _) in lifted.components() {
            assert!(v.is_base(), "translation lift has fibre component on {v}");
        }
        let c = chart(2, Space::Csym);
        let lifted = lift_connection(&x1_field(2), &c).unwrap();
        for (v, _) in lifted.components() {
            assert!(v.is_base());
        }
        let j = chart(2, Space::J1MxC);
        let lifted = lift_product(&x1_field(2), &j).unwrap();
        for (v, _) in lifted.components() {
            assert!(v.is_base());
        }
        let j1m = prolong(&lift_metric(&x1_field(2), &m).unwrap(), 1).unwrap();
        for (v, _) in j1m.components() {
            assert!(v.is_base());
        }
    }

    #[test]
    fn metric_lift_shear_field() {
        // u = x^2 d/dx^1: fibre components y11 -> 0, y12 -> -y11, y22 -> -2 y12
        let u = BaseField::monomial(2, &[2], 1);
        let m = chart(2, Space::M);
        let lifted = lift_metric(&u, &m).unwrap();
        assert!(lifted.component(VarId::y(1, 1)).is_zero());
        assert_eq!(
            lifted.component(VarId::y(1, 2)),
            RationalExpr::var(VarId::y(1, 1)).neg()
        );
        assert_eq!(
            lifted.component(VarId::y(2, 2)),
            RationalExpr::var(VarId::y(1, 2)).scale_int(-2)
        );
    }

    #[test]
    fn metric_lift_dilation_field() {
        // u = x^1 d/dx^1: y11 -> -2 y11, y12 -> -y12, y22 -> 0
        let u = BaseField::monomial(2, &[1], 1);
        let lifted = lift_metric(&u, &chart(2, Space::M)).unwrap();
        assert_eq!(
            lifted.component(VarId::y(1, 1)),
            RationalExpr::var(VarId::y(1, 1)).scale_int(-2)
        );
        assert_eq!(
            lifted.component(VarId::y(1, 2)),
            RationalExpr::var(VarId::y(1, 2)).neg()
        );
        assert!(lifted.component(VarId::y(2, 2)).is_zero());
    }

    #[test]
    fn connection_lift_dilation() {
        // u = x^1 d/dx^1, n=2: component on A^1_11 is -A^1_11
        let u = BaseField::monomial(2, &[1], 1);
        let lifted = lift_connection(&u, &chart(2, Space::C)).unwrap();
        assert_eq!(
            lifted.component(VarId::a(1, 1, 1)),
            RationalExpr::var(VarId::a(1, 1, 1)).neg()
        );
    }

    #[test]
    fn connection_lift_quadratic_second_derivative_survives() {
        // u = (x^1)^2 d/dx^1: the A^1_11 component evaluated at x = 0 and
        // A = 0 equals -2 (only the second-derivative term survives)
        let u = BaseField::monomial(2, &[1, 1], 1);
        let lifted = lift_connection(&u, &chart(2, Space::C)).unwrap();
        let comp = lifted.component(VarId::a(1, 1, 1));
        let mut binds = BTreeMap::new();
        for v in comp.vars() {
            binds.insert(v, RationalExpr::zero());
        }
        assert_eq!(comp.substitute(&binds).unwrap(), RationalExpr::int(-2));
    }

    #[test]
    fn product_jet_dilation_component() {
        // u = x^1 d/dx^1, n=2: component on A^1_11,1 equals -2 A^1_11,1
        let u = BaseField::monomial(2, &[1], 1);
        let lifted = lift_product(&u, &chart(2, Space::J1MxC)).unwrap();
        assert_eq!(
            lifted.component(VarId::a_jet(1, 1, 1, 1)),
            RationalExpr::var(VarId::a_jet(1, 1, 1, 1)).scale_int(-2)
        );
    }

    #[test]
    fn transcription_matches_generic_prolongation() {
        for space in [Space::MxC, Space::MxCsym] {
            let jet_space = space.prolonged().unwrap();
            let mut sampler = Sampler::new(3, 5);
            for _ in 0..3 {
                let u = BaseField::random(2, 3, &mut sampler);
                let base = lift_base_product(&u, &chart(2, space)).unwrap();
                let generic = prolong(&base, 1).unwrap();
                let transcribed = lift_product(&u, &chart(2, jet_space)).unwrap();
                assert_eq!(generic, transcribed, "space {space:?}");
            }
        }
    }

    #[test]
    fn product_lift_restricts_to_metric_prolongation() {
        let mut sampler = Sampler::new(5, 5);
        let u = BaseField::random(2, 3, &mut sampler);
        let full = lift_product(&u, &chart(2, Space::J1MxC)).unwrap();
        let metric = prolong(&lift_metric(&u, &chart(2, Space::M)).unwrap(), 1).unwrap();
        for (v, comp) in metric.components() {
            assert_eq!(full.component(*v), *comp, "component {v}");
        }
    }

    #[test]
    fn second_prolongation_only_on_metric_chart() {
        let u = BaseField::monomial(2, &[1, 2], 1);
        let x = lift_metric(&u, &chart(2, Space::M)).unwrap();
        let x2 = prolong(&x, 2).unwrap();
        assert_eq!(x2.chart.space, Space::J2M);
        let base = lift_base_product(&u, &chart(2, Space::MxC)).unwrap();
        assert!(prolong(&base, 2).is_err());
    }

    #[test]
    fn second_prolongation_is_direction_order_independent() {
        // fill order of the symmetric second-jet coordinates must not matter:
        // check v_{ab,(k,l)} computed via D_l(v_{ab,k}) equals D_k(v_{ab,l})
        let u = BaseField::monomial(2, &[1, 2], 1);
        let x = lift_metric(&u, &chart(2, Space::M)).unwrap();
        let x1 = prolong(&x, 1).unwrap();
        let x2 = prolong(&x, 2).unwrap();
        let du = |m: u8, j: u8| u.partial(m, j);
        for a in 1..=2u8 {
            for b in a..=2u8 {
                for k in 1..=2u8 {
                    for l in 1..=2u8 {
                        let v_abk = x1.component(VarId::y_jet(a, b, k));
                        let mut comp = total_derivative(&v_abk, l).unwrap();
                        for m in 1..=2u8 {
                            comp = comp.sub(
                                &RationalExpr::var(VarId::y_jet2(a, b, k, m)).mul(&du(m, l)),
                            );
                        }
                        assert_eq!(
                            comp,
                            x2.component(VarId::y_jet2(a, b, k, l)),
                            "coordinate y_{a}{b},{k}{l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn prolongation_is_a_lie_algebra_homomorphism() {
        // [X^(1), Y^(1)] = [X, Y]^(1) for the product lift
        let x = BaseField::monomial(2, &[2], 1); // x^2 d/dx^1
        let y = BaseField::monomial(2, &[1], 2); // x^1 d/dx^2
        let c = chart(2, Space::J1MxC);
        let lx = lift_product(&x, &c).unwrap();
        let ly = lift_product(&y, &c).unwrap();
        let lhs = lx.bracket(&ly).unwrap();
        let rhs = lift_product(&x.bracket(&y), &c).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn metric_lift_scales_determinant_by_divergence() {
        // X_M(det y) = -2 (sum_i du^i/dx^i) det y
        use crate::charts::metric_det;
        for n in [2u8, 3] {
            let mut sampler = Sampler::new(17, 5);
            let u = BaseField::random(n, 2, &mut sampler);
            let lifted = lift_metric(&u, &chart(n, Space::M)).unwrap();
            let det = RationalExpr::from_poly(metric_det(n));
            let lhs = lifted.apply(&det);
            let mut div = RationalExpr::zero();
            for i in 1..=n {
                div = div.add(&u.partial(i, i));
            }
            let rhs = div.scale_int(-2).mul(&det);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
