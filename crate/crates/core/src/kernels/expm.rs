//! Dense matrix exponential by scaling and squaring with a degree-13 Padé
//! approximant (Higham 2005 coefficients). Matrices in this crate are small,
//! so the fixed top-order approximant is used unconditionally; the scaling
//! step keeps the scaled one-norm below the order-13 threshold.

use crate::error::{Error, Result};
use crate::kernels::lu::LuFactors;
use crate::scalar::Real;
use ndarray::Array2;

/// One-norm threshold below which the degree-13 approximant meets double
/// precision accuracy without scaling.
const THETA_13: f64 = 5.371920351148152;

const PADE_13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

pub(crate) fn one_norm<A: Real>(a: &Array2<A>) -> A {
    let mut best = A::zero();
    for j in 0..a.ncols() {
        let s = a.column(j).iter().map(|x| x.abs()).fold(A::zero(), |acc, v| acc + v);
        best = best.max(s);
    }
    best
}

/// Compute `exp(m)` for a square matrix.
pub(crate) fn expm<A: Real>(m: &Array2<A>) -> Result<Array2<A>> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::InvalidInput(format!(
            "matrix exponential requires a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if m.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput(
            "matrix exponential input has non-finite entries".into(),
        ));
    }
    if n == 0 {
        return Ok(Array2::zeros((0, 0)));
    }

    let norm = one_norm(m).to_f64().unwrap_or(f64::INFINITY);
    let squarings = if norm <= THETA_13 {
        0
    } else {
        (norm / THETA_13).log2().ceil() as u32
    };
    let scale = A::of(0.5).powi(squarings as i32);
    let a = m * scale;

    let a2 = a.dot(&a);
    let a4 = a2.dot(&a2);
    let a6 = a4.dot(&a2);
    let eye: Array2<A> = Array2::eye(n);

    let b = |k: usize| A::of(PADE_13[k]);
    // u = A (A6 (b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I)
    let inner_u = &a6 * b(13) + &a4 * b(11) + &a2 * b(9);
    let u = a.dot(&(a6.dot(&inner_u) + &a6 * b(7) + &a4 * b(5) + &a2 * b(3) + &eye * b(1)));
    // v = A6 (b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    let inner_v = &a6 * b(12) + &a4 * b(10) + &a2 * b(8);
    let v = a6.dot(&inner_v) + &a6 * b(6) + &a4 * b(4) + &a2 * b(2) + &eye * b(0);

    // Solve (v - u) X = (v + u).
    let denom = &v - &u;
    let numer = &v + &u;
    let mut result = LuFactors::factor(&denom)
        .map_err(|_| Error::Numerical("Padé denominator is singular".into()))?
        .solve_mat(&numer);
    for _ in 0..squarings {
        result = result.dot(&result);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    /// Taylor-series oracle, valid for small norms.
    fn expm_series(m: &Array2<f64>) -> Array2<f64> {
        let n = m.nrows();
        let mut sum = Array2::<f64>::eye(n);
        let mut term = Array2::<f64>::eye(n);
        for k in 1..60 {
            term = term.dot(m) / k as f64;
            sum = sum + &term;
        }
        sum
    }

    #[test]
    fn identity_at_zero() {
        let m = Array2::<f64>::zeros((3, 3));
        let e = expm(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_abs_diff_eq!(e[[i, j]], if i == j { 1.0 } else { 0.0 }, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn scalar_case() {
        let m = array![[-2.0]];
        let e = expm(&m).unwrap();
        assert_abs_diff_eq!(e[[0, 0]], (-2.0f64).exp(), epsilon = 1e-14);
    }

    #[test]
    fn matches_series_oracle_small_norm() {
        let m = array![[0.1, 0.2, -0.05], [0.0, -0.3, 0.12], [0.4, 0.0, -0.2]];
        let e = expm(&m).unwrap();
        let o = expm_series(&m);
        for i in 0..3 {
            for j in 0..3 {
                assert_abs_diff_eq!(e[[i, j]], o[[i, j]], epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn squaring_path_matches_series() {
        // Norm well above theta_13 to force scaling.
        let m = array![[-30.0, 30.0], [18.0, -18.0]];
        let e = expm(&m).unwrap();
        // exp(Q) for this 2-state generator via spectral form:
        // pi = (b, a)/(a+b) with a=30, b=18; decay exp(-(a+b)).
        let a = 30.0;
        let b = 18.0;
        let pi = [b / (a + b), a / (a + b)];
        let decay = (-(a + b) as f64).exp();
        let expected = |i: usize, j: usize| {
            let kron = if i == j { 1.0 } else { 0.0 };
            pi[j] + decay * (kron - pi[j])
        };
        for i in 0..2 {
            for j in 0..2 {
                assert_abs_diff_eq!(e[[i, j]], expected(i, j), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn rejects_non_finite() {
        let m = array![[f64::NAN, 0.0], [0.0, 0.0]];
        assert!(expm(&m).is_err());
    }
}
