//! Partially pivoted LU factorization for the small dense systems used by
//! the kernels. Matrices here are p ≤ ~20, so a direct method is plenty.

use crate::error::{Error, Result};
use crate::scalar::Real;
use ndarray::{Array1, Array2, ArrayView1};

/// LU factorization PA = LU with row partial pivoting.
#[derive(Debug, Clone)]
pub(crate) struct LuFactors<A> {
    lu: Array2<A>,
    pivots: Vec<usize>,
}

impl<A: Real> LuFactors<A> {
    /// Factor a square matrix. Fails on non-square input or when a pivot
    /// column is numerically zero (singular matrix).
    pub fn factor(a: &Array2<A>) -> Result<Self> {
        let n = a.nrows();
        if a.ncols() != n {
            return Err(Error::InvalidInput(format!(
                "LU requires a square matrix, got {}x{}",
                a.nrows(),
                a.ncols()
            )));
        }
        let scale = a.iter().fold(A::zero(), |m, &x| m.max(x.abs()));
        if !scale.is_finite() {
            return Err(Error::InvalidInput("matrix has non-finite entries".into()));
        }
        let mut lu = a.clone();
        let mut pivots = Vec::with_capacity(n);
        for k in 0..n {
            let mut p = k;
            let mut best = lu[[k, k]].abs();
            for i in (k + 1)..n {
                let v = lu[[i, k]].abs();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if best <= scale * A::epsilon() {
                return Err(Error::Numerical(format!(
                    "singular matrix in LU factorization (pivot column {k})"
                )));
            }
            if p != k {
                for j in 0..n {
                    let tmp = lu[[k, j]];
                    lu[[k, j]] = lu[[p, j]];
                    lu[[p, j]] = tmp;
                }
            }
            pivots.push(p);
            let piv = lu[[k, k]];
            for i in (k + 1)..n {
                let factor = lu[[i, k]] / piv;
                lu[[i, k]] = factor;
                for j in (k + 1)..n {
                    let delta = factor * lu[[k, j]];
                    lu[[i, j]] = lu[[i, j]] - delta;
                }
            }
        }
        Ok(Self { lu, pivots })
    }

    pub fn dim(&self) -> usize {
        self.lu.nrows()
    }

    /// Solve A x = b.
    pub fn solve_vec(&self, b: ArrayView1<A>) -> Array1<A> {
        let n = self.dim();
        assert_eq!(b.len(), n, "right-hand side length mismatch");
        let mut x = b.to_owned();
        for k in 0..n {
            let p = self.pivots[k];
            if p != k {
                x.swap(k, p);
            }
            for i in (k + 1)..n {
                let delta = self.lu[[i, k]] * x[k];
                x[i] = x[i] - delta;
            }
        }
        for k in (0..n).rev() {
            for j in (k + 1)..n {
                let delta = self.lu[[k, j]] * x[j];
                x[k] = x[k] - delta;
            }
            x[k] = x[k] / self.lu[[k, k]];
        }
        x
    }

    /// Solve A X = B column by column.
    pub fn solve_mat(&self, b: &Array2<A>) -> Array2<A> {
        let n = self.dim();
        assert_eq!(b.nrows(), n, "right-hand side row count mismatch");
        let mut x = Array2::zeros((n, b.ncols()));
        for j in 0..b.ncols() {
            let col = self.solve_vec(b.column(j));
            x.column_mut(j).assign(&col);
        }
        x
    }

    /// A^{-1}.
    pub fn inverse(&self) -> Array2<A> {
        self.solve_mat(&Array2::eye(self.dim()))
    }
}

/// Convenience: solve A x = b in one call.
pub(crate) fn solve<A: Real>(a: &Array2<A>, b: ArrayView1<A>) -> Result<Array1<A>> {
    Ok(LuFactors::factor(a)?.solve_vec(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    #[test]
    fn solves_known_system() {
        let a = array![[2.0, 1.0], [1.0, 3.0]];
        let b = array![5.0, 10.0];
        let x = solve(&a, b.view()).unwrap();
        // 2x + y = 5, x + 3y = 10 -> x = 1, y = 3
        assert_abs_diff_eq!(x[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(x[1], 3.0, epsilon = 1e-12);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = array![[4.0, 2.0, 0.5], [1.0, 3.0, -1.0], [0.0, -2.0, 5.0]];
        let inv = LuFactors::factor(&a).unwrap().inverse();
        let prod = a.dot(&inv);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(prod[[i, j]], expect, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        let a = array![[0.0, 1.0], [1.0, 0.0]];
        let x = solve(&a, array![2.0, 3.0].view()).unwrap();
        assert_abs_diff_eq!(x[0], 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(x[1], 2.0, epsilon = 1e-15);
    }

    #[test]
    fn singular_is_reported() {
        let a = array![[1.0, 2.0], [2.0, 4.0]];
        assert!(matches!(
            LuFactors::factor(&a),
            Err(crate::error::Error::Numerical(_))
        ));
    }
}
