//! Exact linear algebra over the rationals: rank, span membership and
//! elimination with symbolic right-hand sides.  No thresholds anywhere.

use num_rational::BigRational;
use num_traits::Zero;

use crate::symexpr::RationalExpr;
use crate::{Error, Result};

/// Row-reduces in place and returns the rank.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in (r + 1)..nrows {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &pivot;
            for j in c..ncols {
                let t = &rows[r][j] * &factor;
                rows[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

/// Whether `v` lies in the row span of `basis` (exact).
pub fn in_span(basis: &[Vec<BigRational>], v: &[BigRational]) -> bool {
    let base_rank = rank(basis.to_vec());
    let mut extended = basis.to_vec();
    extended.push(v.to_vec());
    rank(extended) == base_rank
}

/// Solves `A x = b` where `A` has rational entries and `b` has symbolic
/// entries, by Gaussian elimination applied to both sides.  Requires the
/// system to determine `x` uniquely; a vanishing row with a symbolically
/// nonzero right-hand side is reported as inconsistent.
pub fn solve_exact(
    a: &[Vec<BigRational>],
    b: &[RationalExpr],
) -> Result<Vec<RationalExpr>> {
    let nrows = a.len();
    assert_eq!(nrows, b.len());
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut rhs: Vec<RationalExpr> = b.to_vec();

    let mut pivot_of_col = vec![usize::MAX; ncols];
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        rhs.swap(r, p);
        let pivot = m[r][c].clone();
        for j in c..ncols {
            m[r][j] = &m[r][j] / &pivot;
        }
        let scale = RationalExpr::rational(&pivot.recip());
        rhs[r] = rhs[r].mul(&scale);
        for i in 0..nrows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..ncols {
                let t = &m[r][j] * &factor;
                m[i][j] -= t;
            }
            let t = rhs[r].mul(&RationalExpr::rational(&factor));
            rhs[i] = rhs[i].sub(&t);
        }
        pivot_of_col[c] = r;
        r += 1;
    }
    // consistency: zero rows must have zero right-hand sides
    for i in r..nrows {
        if !rhs[i].is_zero() {
            return Err(Error::InconsistentConstraints(format!(
                "residual row {i}: {:?}",
                rhs[i]
            )));
        }
    }
    // uniqueness
    let mut x = vec![RationalExpr::zero(); ncols];
    for c in 0..ncols {
        let p = pivot_of_col[c];
        if p == usize::MAX {
            return Err(Error::InconsistentConstraints(format!(
                "underdetermined system: free column {c}"
            )));
        }
        x[c] = rhs[p].clone();
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn span_membership() {
        let basis = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        assert!(in_span(&basis, &[q(2), q(3), q(5)]));
        assert!(!in_span(&basis, &[q(0), q(0), q(1)]));
    }

    #[test]
    fn solve_with_symbolic_rhs() {
        use crate::symexpr::VarId;
        let y = RationalExpr::var(VarId::y(1, 1));
        // x0 + x1 = y ; x0 - x1 = 3  =>  x0 = (y+3)/2, x1 = (y-3)/2
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let b = vec![y.clone(), RationalExpr::int(3)];
        let x = solve_exact(&a, &b).unwrap();
        let half = RationalExpr::int(1).div(&RationalExpr::int(2)).unwrap();
        assert_eq!(x[0], y.add(&RationalExpr::int(3)).mul(&half));
        assert_eq!(x[1], y.sub(&RationalExpr::int(3)).mul(&half));
    }

    #[test]
    fn inconsistent_system_is_reported() {
        let a = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        let b = vec![RationalExpr::int(1), RationalExpr::int(3)];
        assert!(matches!(
            solve_exact(&a, &b),
            Err(Error::InconsistentConstraints(_))
        ));
    }
}
