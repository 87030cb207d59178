//! Continuous Fourier transform on a pair of dual grids.
//!
//! For even `N, M` the spatial window `[−N/2, N/2]` is sampled at
//! `x_j = −N/2 + j/M` and the frequency window `[−M/2, M/2]` at
//! `y_k = −M/2 + k/N`, `j, k = 0, …, MN−1`. Both `M·x_j` and `N·y_k` run over
//! the integers `−MN/2, …, MN/2 − 1`, so the Riemann sum for
//! `f̂(y) = ∫ f(x) e^{−2πixy} dx` becomes
//!
//! ```text
//! f̂(y_k) ≈ (1/M) Σ_j f(x_j) · e^{−2πi (M x_j)(N y_k) / MN}
//! ```
//!
//! which is the length-`MN` DFT of the samples after rotating them by
//! `w = MN/2` (the coefficient order of the polynomial `P(X)` below), with
//! the output rotated by `w` as well. The inverse uses `1/N` and the
//! conjugate kernel; the two are exact discrete inverses of each other.

use crate::dft::{self, ComplexVector, Direction};
use crate::scalar::Real;
use num_complex::Complex;
use num_traits::Zero;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Removable-singularity threshold for the Dirichlet kernel, in units of `x/N`.
pub const DIRICHLET_SINGULAR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContftError {
    #[error("grid sizes must be even and at least 2 (got N={big_n}, M={big_m})")]
    InvalidGrid { big_n: usize, big_m: usize },
    #[error("expected {expected} values for the grid, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("sample {index} is not finite")]
    NonFiniteSample { index: usize },
    #[error("sampled function and spectrum live on different grids")]
    GridMismatch,
    #[error("unknown test function {0:?}")]
    UnknownFunction(String),
    #[error("test function {0:?} has no analytic transform")]
    NoAnalyticTransform(String),
}

/// The dual grid for even `N` (spatial extent) and `M` (frequency extent).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridParams {
    big_n: usize,
    big_m: usize,
}

impl GridParams {
    pub fn new(big_n: usize, big_m: usize) -> Result<Self, ContftError> {
        let ok = |v: usize| v >= 2 && v.is_multiple_of(2);
        if !ok(big_n) || !ok(big_m) {
            return Err(ContftError::InvalidGrid { big_n, big_m });
        }
        Ok(Self { big_n, big_m })
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn big_m(&self) -> usize {
        self.big_m
    }

    /// `MN`, the number of points on either grid.
    pub fn size(&self) -> usize {
        self.big_n * self.big_m
    }

    /// `w = MN/2`.
    pub fn half(&self) -> usize {
        self.size() / 2
    }

    /// `M·x_j = j − MN/2`.
    pub fn scaled_x(&self, j: usize) -> i64 {
        j as i64 - self.half() as i64
    }

    /// `N·y_k = k − MN/2`.
    pub fn scaled_y(&self, k: usize) -> i64 {
        k as i64 - self.half() as i64
    }

    /// `x_j = −N/2 + j/M`.
    pub fn x<T: Real>(&self, j: usize) -> T {
        T::from_signed(self.scaled_x(j)) / T::from_count(self.big_m)
    }

    /// `y_k = −M/2 + k/N`.
    pub fn y<T: Real>(&self, k: usize) -> T {
        T::from_signed(self.scaled_y(k)) / T::from_count(self.big_n)
    }

    pub fn xs<T: Real>(&self) -> Vec<T> {
        (0..self.size()).map(|j| self.x(j)).collect()
    }

    pub fn ys<T: Real>(&self) -> Vec<T> {
        (0..self.size()).map(|k| self.y(k)).collect()
    }
}

fn check_values<T: Real>(grid: &GridParams, values: &[Complex<T>]) -> Result<(), ContftError> {
    if values.len() != grid.size() {
        return Err(ContftError::LengthMismatch {
            expected: grid.size(),
            actual: values.len(),
        });
    }
    match values.iter().position(|z| !crate::scalar::is_finite(z)) {
        Some(index) => Err(ContftError::NonFiniteSample { index }),
        None => Ok(()),
    }
}

/// Values `f(x_j)` on the spatial grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction<T> {
    grid: GridParams,
    samples: Vec<Complex<T>>,
}

impl<T: Real> SampledFunction<T> {
    pub fn new(grid: GridParams, samples: Vec<Complex<T>>) -> Result<Self, ContftError> {
        check_values(&grid, &samples)?;
        Ok(Self { grid, samples })
    }

    pub fn grid(&self) -> &GridParams {
        &self.grid
    }

    pub fn samples(&self) -> &[Complex<T>] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Complex<T>> {
        self.samples
    }
}

/// Values approximating `f̂(y_k)` on the frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    grid: GridParams,
    values: Vec<Complex<T>>,
}

impl<T: Real> Spectrum<T> {
    pub fn new(grid: GridParams, values: Vec<Complex<T>>) -> Result<Self, ContftError> {
        check_values(&grid, &values)?;
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &GridParams {
        &self.grid
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex<T>> {
        self.values
    }
}

pub type RealToComplex<T> = Arc<dyn Fn(T) -> Complex<T> + Send + Sync>;

/// A named function of one real variable, optionally with its exact transform.
#[derive(Clone)]
pub struct TestFunction<T> {
    name: String,
    evaluator: RealToComplex<T>,
    analytic_transform: Option<RealToComplex<T>>,
}

impl<T> fmt::Debug for TestFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("name", &self.name)
            .field("analytic_transform", &self.analytic_transform.is_some())
            .finish()
    }
}

impl<T: Real> TestFunction<T> {
    pub fn new<F>(name: impl Into<String>, evaluator: F) -> Self
    where
        F: Fn(T) -> Complex<T> + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            evaluator: Arc::new(evaluator),
            analytic_transform: None,
        }
    }

    pub fn with_transform<F>(mut self, transform: F) -> Self
    where
        F: Fn(T) -> Complex<T> + Send + Sync + 'static,
    {
        self.analytic_transform = Some(Arc::new(transform));
        self
    }

    /// `e^{−πx²}`, its own transform.
    pub fn gaussian() -> Self {
        Self::scaled_gaussian(T::one())
    }

    /// `e^{−π(x/width)²}` with transform `width·e^{−π(width·y)²}`.
    pub fn scaled_gaussian(width: T) -> Self {
        let pi = T::PI();
        let name = if width == T::one() {
            "gaussian".to_string()
        } else {
            format!("gaussian:{width}")
        };
        Self::new(name, move |x: T| {
            Complex::new((-pi * (x / width).powi(2)).exp(), T::zero())
        })
        .with_transform(move |y: T| {
            Complex::new(width * (-pi * (width * y).powi(2)).exp(), T::zero())
        })
    }

    pub fn zero() -> Self {
        Self::new("zero", |_| Complex::zero()).with_transform(|_| Complex::zero())
    }

    /// Parses `zero`, `gaussian` or `gaussian:<width>` (width finite and positive).
    pub fn from_name(spec: &str) -> Result<Self, ContftError> {
        let unknown = || ContftError::UnknownFunction(spec.to_string());
        match spec.split_once(':') {
            None if spec == "gaussian" => Ok(Self::gaussian()),
            None if spec == "zero" => Ok(Self::zero()),
            Some(("gaussian", width)) => {
                let width: f64 = width.trim().parse().map_err(|_| unknown())?;
                if !(width.is_finite() && width > 0.0) {
                    return Err(unknown());
                }
                Ok(Self::scaled_gaussian(
                    T::from_f64(width).ok_or_else(unknown)?,
                ))
            }
            _ => Err(unknown()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, x: T) -> Complex<T> {
        (self.evaluator)(x)
    }

    pub fn transform(&self, y: T) -> Option<Complex<T>> {
        self.analytic_transform.as_ref().map(|g| g(y))
    }

    pub fn has_transform(&self) -> bool {
        self.analytic_transform.is_some()
    }

    /// Largest of `|f(−N/2)|` and `|f(N/2)|`.
    pub fn edge_magnitude(&self, grid: &GridParams) -> T {
        let edge = T::from_count(grid.big_n()) / T::from_count(2);
        self.eval(-edge).norm().max(self.eval(edge).norm())
    }

    /// Whether the function has decayed below `tol` at both window edges.
    pub fn decays_on(&self, grid: &GridParams, tol: T) -> bool {
        self.edge_magnitude(grid) < tol
    }

    /// Exact transform values `f̂(y_k)` on the frequency grid.
    pub fn sample_transform(&self, grid: &GridParams) -> Result<Spectrum<T>, ContftError> {
        let g = self
            .analytic_transform
            .as_ref()
            .ok_or_else(|| ContftError::NoAnalyticTransform(self.name.clone()))?;
        let values: Vec<_> = (0..grid.size()).map(|k| g(grid.y(k))).collect();
        if let Some(index) = values
            .iter()
            .position(|z: &Complex<T>| !crate::scalar::is_finite(z))
        {
            return Err(ContftError::NonFiniteSample { index });
        }
        Spectrum::new(*grid, values)
    }
}

/// `samples[j] = f(x_j)`.
pub fn sample<T: Real>(
    f: &TestFunction<T>,
    grid: &GridParams,
) -> Result<SampledFunction<T>, ContftError> {
    let samples: Vec<_> = (0..grid.size()).map(|j| f.eval(grid.x(j))).collect();
    if let Some(index) = samples.iter().position(|z| !crate::scalar::is_finite(z)) {
        return Err(ContftError::NonFiniteSample { index });
    }
    Ok(SampledFunction {
        grid: *grid,
        samples,
    })
}

/// Coefficients of `P(X) = (1/M)(f(x_w) + f(x_{w+1})X + … + f(x_{w−1})X^{MN−1})`,
/// i.e. the samples rotated left by `w` and scaled by `1/M`.
///
/// Evaluating `P` at `ω^{N·y_k}` (`ω = e^{−2πi/MN}`) gives the forward sum at `y_k`.
pub fn sample_polynomial<T: Real>(sampled: &SampledFunction<T>) -> Vec<Complex<T>> {
    let grid = sampled.grid();
    let inv_m = T::one() / T::from_count(grid.big_m());
    let mut coeffs: Vec<_> = sampled.samples().iter().map(|z| z.scale(inv_m)).collect();
    coeffs.rotate_left(grid.half());
    coeffs
}

fn rotated_transform<T: Real>(
    values: &[Complex<T>],
    half: usize,
    direction: Direction,
) -> Vec<Complex<T>> {
    let mut buf = values.to_vec();
    buf.rotate_left(half);
    let vector = ComplexVector::new(buf).expect("grid values are non-empty and finite");
    let mut out = dft::transform(&vector, direction).into_inner();
    // output index k holds the value at N·y_k = k − w ≡ k + w (mod MN)
    out.rotate_left(half);
    out
}

/// Approximates `f̂(y_k)` by `(1/M) Σ_j f(x_j)·e^{−2πi (M x_j)(N y_k)/MN}`.
pub fn forward<T: Real>(sampled: &SampledFunction<T>) -> Spectrum<T> {
    let grid = *sampled.grid();
    let coeffs = sample_polynomial(sampled);
    let mut values = ComplexVector::new(coeffs).expect("grid values are non-empty and finite");
    values = dft::transform(&values, Direction::Forward);
    let mut values = values.into_inner();
    values.rotate_left(grid.half());
    Spectrum { grid, values }
}

/// Approximates `f(x_j)` by `(1/N) Σ_k f̂(y_k)·e^{+2πi (N y_k)(M x_j)/MN}`.
pub fn inverse<T: Real>(spectrum: &Spectrum<T>) -> SampledFunction<T> {
    let grid = *spectrum.grid();
    // the inverse DFT carries 1/MN; (1/N) = M·(1/MN)
    let m = T::from_count(grid.big_m());
    let samples = rotated_transform(spectrum.values(), grid.half(), Direction::Inverse)
        .into_iter()
        .map(|z| z.scale(m))
        .collect();
    SampledFunction { grid, samples }
}

/// `D(x) = sin(πMx + πx/N) / sin(πx/N)`, and `MN + 1` where `x/N` is an integer.
pub fn dirichlet_kernel<T: Real>(x: T, grid: &GridParams) -> T {
    let n = T::from_count(grid.big_n());
    let m = T::from_count(grid.big_m());
    let t = x / n;
    let tol = T::from_f64(DIRICHLET_SINGULAR_TOL).expect("representable");
    if (t - t.round()).abs() < tol {
        return T::from_count(grid.size() + 1);
    }
    let pi = T::PI();
    (pi * m * x + pi * t).sin() / (pi * t).sin()
}

/// `(1/N) Σ_k values[k]`, which approximates `f(0)`.
pub fn recover_f0<T: Real>(spectrum: &Spectrum<T>) -> Complex<T> {
    let n = T::from_count(spectrum.grid().big_n());
    let total: Complex<T> = spectrum
        .values()
        .iter()
        .fold(Complex::zero(), |acc, z| acc + z);
    total.unscale(n)
}

/// Both sides of the windowed Poisson summation identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonCheck<T> {
    /// `Σ_{n=−N/2}^{N/2−1} f(n)`.
    pub lhs: Complex<T>,
    /// `Σ_{ℓ=0}^{M−1} values[ℓN]`, the spectrum at the integer frequencies.
    pub rhs: Complex<T>,
    /// `|lhs − rhs|`.
    pub gap: T,
}

/// Integer-point sums of a sampled function and its spectrum.
///
/// The integer points are the stride-`M` subgroup of the spatial grid and
/// the stride-`N` subgroup of the frequency grid.
pub fn poisson_sums<T: Real>(
    sampled: &SampledFunction<T>,
    spectrum: &Spectrum<T>,
) -> Result<PoissonCheck<T>, ContftError> {
    let grid = sampled.grid();
    if grid != spectrum.grid() {
        return Err(ContftError::GridMismatch);
    }
    let lhs = sampled
        .samples()
        .iter()
        .step_by(grid.big_m())
        .fold(Complex::zero(), |acc, z| acc + z);
    let rhs = spectrum
        .values()
        .iter()
        .step_by(grid.big_n())
        .fold(Complex::zero(), |acc, z| acc + z);
    Ok(PoissonCheck {
        lhs,
        rhs,
        gap: (lhs - rhs).norm(),
    })
}

/// Samples `f`, transforms it, and compares the two integer-point sums.
pub fn poisson_check<T: Real>(
    f: &TestFunction<T>,
    grid: &GridParams,
) -> Result<PoissonCheck<T>, ContftError> {
    let sampled = sample(f, grid)?;
    let spectrum = forward(&sampled);
    poisson_sums(&sampled, &spectrum)
}
