//! Numerical kernels for finite CTMCs: matrix exponentials, stationary
//! distributions, deviation matrices, and augmented-exponential integrals.
//!
//! All operations are pure functions of their inputs and safe to call
//! concurrently.

mod expm;
mod lu;

use crate::error::{Error, Result};
use crate::scalar::Real;
use ndarray::{Array1, Array2, ArrayView1};

pub(crate) use expm::one_norm;
pub(crate) use lu::{solve, LuFactors};

/// A validated CTMC generator: nonnegative off-diagonal rates, zero row
/// sums, and a single communicating class.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator<A: Real> {
    q: Array2<A>,
}

impl<A: Real> Generator<A> {
    /// Validate and wrap a rate matrix.
    pub fn new(q: Array2<A>) -> Result<Self> {
        let p = q.nrows();
        if q.ncols() != p || p == 0 {
            return Err(Error::InvalidInput(format!(
                "generator must be square and non-empty, got {}x{}",
                q.nrows(),
                q.ncols()
            )));
        }
        if q.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(
                "generator has non-finite entries".into(),
            ));
        }
        let tol = A::validation_tol();
        for i in 0..p {
            let mut row_sum = A::zero();
            for j in 0..p {
                let v = q[[i, j]];
                if i != j && v < -tol {
                    return Err(Error::InvalidInput(format!(
                        "negative off-diagonal rate q[{i}][{j}] = {v}"
                    )));
                }
                row_sum = row_sum + v;
            }
            if row_sum.abs() > tol {
                return Err(Error::InvalidInput(format!(
                    "row {i} of generator sums to {row_sum}, expected 0"
                )));
            }
        }
        if !is_irreducible(&q) {
            return Err(Error::Structural(
                "generator is reducible (not a single communicating class)".into(),
            ));
        }
        Ok(Self { q })
    }

    /// The underlying rate matrix.
    pub fn matrix(&self) -> &Array2<A> {
        &self.q
    }

    /// Number of states.
    pub fn dim(&self) -> usize {
        self.q.nrows()
    }

    /// `exp(Q t)`.
    pub fn exp(&self, t: A) -> Result<Array2<A>> {
        matrix_exponential(&self.q, t)
    }

    /// Stationary distribution π with πQ = 0, π1 = 1.
    pub fn stationary(&self) -> Result<ProbVector<A>> {
        stationary_distribution(self)
    }
}

/// Reachability on the positive off-diagonal pattern, in both directions.
fn is_irreducible<A: Real>(q: &Array2<A>) -> bool {
    let p = q.nrows();
    let reach = |transpose: bool| -> usize {
        let mut seen = vec![false; p];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for j in 0..p {
                let rate = if transpose { q[[j, i]] } else { q[[i, j]] };
                if i != j && !seen[j] && rate > A::zero() {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count
    };
    reach(false) == p && reach(true) == p
}

/// A validated probability row vector: nonnegative entries summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector<A: Real> {
    v: Array1<A>,
}

impl<A: Real> ProbVector<A> {
    /// Validate and wrap a probability vector. Entries within the validation
    /// tolerance below zero are clamped to exactly zero.
    pub fn new(v: Array1<A>) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::InvalidInput("empty probability vector".into()));
        }
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(
                "probability vector has non-finite entries".into(),
            ));
        }
        let tol = A::validation_tol();
        let mut v = v;
        for x in v.iter_mut() {
            if *x < A::zero() {
                if *x < -tol {
                    return Err(Error::InvalidInput(format!(
                        "negative probability entry {x}"
                    )));
                }
                *x = A::zero();
            }
        }
        let sum: A = v.iter().copied().sum();
        if (sum - A::one()).abs() > tol {
            return Err(Error::InvalidInput(format!(
                "probability vector sums to {sum}, expected 1"
            )));
        }
        Ok(Self { v })
    }

    /// Uniform distribution over `p` states.
    pub fn uniform(p: usize) -> Self {
        let w = A::one() / A::of(p as f64);
        Self {
            v: Array1::from_elem(p, w),
        }
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn as_array(&self) -> &Array1<A> {
        &self.v
    }

    pub fn view(&self) -> ArrayView1<'_, A> {
        self.v.view()
    }
}

impl<A: Real> std::ops::Index<usize> for ProbVector<A> {
    type Output = A;
    fn index(&self, i: usize) -> &A {
        &self.v[i]
    }
}

/// Deviation matrix D♯ and fundamental matrix (1π − Q)⁻¹ of a generator.
#[derive(Debug, Clone)]
pub struct DeviationMatrices<A: Real> {
    /// D♯ = ∫₀^∞ (e^{Qu} − 1π) du.
    pub dev: Array2<A>,
    /// (1π − Q)⁻¹ = D♯ + 1π.
    pub fundamental: Array2<A>,
}

/// `exp(M t)` for a general square matrix and t ≥ 0. For a generator the
/// result is a stochastic matrix.
pub fn matrix_exponential<A: Real>(m: &Array2<A>, t: A) -> Result<Array2<A>> {
    if !t.is_finite() || t < A::zero() {
        return Err(Error::InvalidInput(format!(
            "matrix exponential requires finite t >= 0, got {t}"
        )));
    }
    expm::expm(&(m * t))
}

/// Stationary distribution of an irreducible generator: πQ = 0, π1 = 1.
pub fn stationary_distribution<A: Real>(q: &Generator<A>) -> Result<ProbVector<A>> {
    let p = q.dim();
    // Unknowns as a column vector: solve Qᵀ πᵀ = 0 with the last balance
    // equation replaced by normalization.
    let mut m = q.matrix().t().to_owned();
    for j in 0..p {
        m[[p - 1, j]] = A::one();
    }
    let mut rhs = Array1::zeros(p);
    rhs[p - 1] = A::one();
    let pi = solve(&m, rhs.view())?;
    ProbVector::new(pi)
}

/// Deviation and fundamental matrices of an irreducible generator.
pub fn deviation_matrix<A: Real>(q: &Generator<A>) -> Result<DeviationMatrices<A>> {
    let pi = stationary_distribution(q)?;
    let one_pi = ones_outer(&pi);
    let fundamental = LuFactors::factor(&(&one_pi - q.matrix()))?.inverse();
    let dev = &fundamental - &one_pi;
    Ok(DeviationMatrices { dev, fundamental })
}

/// Transient deviation matrix D♯(t) = D♯ (I − e^{Qt}).
pub fn transient_deviation_matrix<A: Real>(q: &Generator<A>, t: A) -> Result<Array2<A>> {
    let dm = deviation_matrix(q)?;
    transient_from_parts(q, &dm.dev, t)
}

/// Same as [`transient_deviation_matrix`] but reusing a precomputed D♯.
pub(crate) fn transient_from_parts<A: Real>(
    q: &Generator<A>,
    dev: &Array2<A>,
    t: A,
) -> Result<Array2<A>> {
    let eqt = q.exp(t)?;
    let eye: Array2<A> = Array2::eye(q.dim());
    Ok(dev.dot(&(&eye - &eqt)))
}

/// ∫₀ᵗ e^{Q(t−s)} M e^{Qs} ds via the Van Loan augmented exponential: the
/// upper-right block of exp([[Q, M], [0, Q]] t).
pub fn convolution_integral<A: Real>(q: &Array2<A>, m: &Array2<A>, t: A) -> Result<Array2<A>> {
    let p = q.nrows();
    if q.ncols() != p || m.nrows() != p || m.ncols() != p {
        return Err(Error::InvalidInput(format!(
            "convolution integral needs matching square matrices, got {}x{} and {}x{}",
            q.nrows(),
            q.ncols(),
            m.nrows(),
            m.ncols()
        )));
    }
    if !t.is_finite() || t < A::zero() {
        return Err(Error::InvalidInput(format!(
            "convolution integral requires finite t >= 0, got {t}"
        )));
    }
    let mut block = Array2::zeros((2 * p, 2 * p));
    for i in 0..p {
        for j in 0..p {
            block[[i, j]] = q[[i, j]];
            block[[i, p + j]] = m[[i, j]];
            block[[p + i, p + j]] = q[[i, j]];
        }
    }
    let w = matrix_exponential(&block, t)?;
    let mut out = Array2::zeros((p, p));
    for i in 0..p {
        for j in 0..p {
            out[[i, j]] = w[[i, p + j]];
        }
    }
    Ok(out)
}

/// Outer product 1·π: every row equal to π.
pub(crate) fn ones_outer<A: Real>(pi: &ProbVector<A>) -> Array2<A> {
    let p = pi.len();
    let mut m = Array2::zeros((p, p));
    for i in 0..p {
        for j in 0..p {
            m[[i, j]] = pi[j];
        }
    }
    m
}
