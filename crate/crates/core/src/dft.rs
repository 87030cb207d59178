//! Discrete Fourier transforms as the CRT for `ℂ[X]/(X^n − 1)`.
//!
//! The ring `ℂ[X]/(X^n − 1)` splits into the fields `ℂ[X]/(X − ω^k)` with
//! `ω = e^{−2πi/n}`. Reducing a coefficient vector modulo each factor is
//! evaluation at `ω^k`, i.e. the forward DFT, and the CRT inverse is the
//! Lagrange interpolation formula
//!
//! ```text
//! P(X) = Σ_k P(ω^k) · u_k · (X^n − 1)/(X − ω^k),   u_k = 1 / Π_{l≠k} (ω^k − ω^l) = ω^k / n.
//! ```
//!
//! Fast paths: an iterative radix-2 transform, and the Good-Thomas
//! prime-factor transform whose index permutations come straight from
//! [`crate::crt`].

use crate::crt::CrtBasis;
use crate::scalar::Real;
use num_complex::Complex;
use num_traits::{One, Zero};
use std::ops::Deref;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DftError {
    #[error("input vector is empty")]
    EmptyInput,
    #[error("entry {index} is not finite")]
    NonFinite { index: usize },
    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("factors {n1} and {n2} are not coprime")]
    FactorsNotCoprime { n1: usize, n2: usize },
    #[error("factors {n1}·{n2} do not multiply to the input length {len}")]
    LengthMismatch { n1: usize, n2: usize, len: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Kernel `e^{−2πi jk/n}`, no scaling.
    Forward,
    /// Kernel `e^{+2πi jk/n}`, scaled by `1/n`.
    Inverse,
}

/// Non-empty vector of finite complex numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector<T>(Vec<Complex<T>>);

impl<T: Real> ComplexVector<T> {
    pub fn new(values: Vec<Complex<T>>) -> Result<Self, DftError> {
        if values.is_empty() {
            return Err(DftError::EmptyInput);
        }
        if let Some(index) = values.iter().position(|z| !crate::scalar::is_finite(z)) {
            return Err(DftError::NonFinite { index });
        }
        Ok(Self(values))
    }

    pub fn from_real(values: &[T]) -> Result<Self, DftError> {
        Self::new(values.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    pub fn zeros(n: usize) -> Result<Self, DftError> {
        Self::new(vec![Complex::zero(); n])
    }

    // transforms of finite input stay finite; only used on transform outputs
    fn from_raw(values: Vec<Complex<T>>) -> Self {
        debug_assert!(!values.is_empty());
        Self(values)
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Complex<T>> {
        self.0
    }

    /// Largest entrywise distance `max_j |a_j − b_j|`; `None` when lengths differ.
    pub fn max_abs_diff(&self, other: &Self) -> Option<T> {
        (self.len() == other.len()).then(|| max_abs_diff(&self.0, &other.0))
    }
}

impl<T> Deref for ComplexVector<T> {
    type Target = [Complex<T>];

    fn deref(&self) -> &[Complex<T>] {
        &self.0
    }
}

pub(crate) fn max_abs_diff<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> T {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(T::zero(), T::max)
}

/// Precomputed powers `ω^0, …, ω^{n−1}` of `ω = e^{−2πi/n}`.
///
/// Each power is evaluated directly from its angle, so `|ω^k| = 1` holds to
/// rounding for every `k` regardless of `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootOfUnityPlan<T> {
    powers: Vec<Complex<T>>,
}

impl<T: Real> RootOfUnityPlan<T> {
    /// # Panics
    /// If `n == 0`.
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "root-of-unity plan needs n >= 1");
        let step = -T::TAU() / T::from_count(n);
        let powers = (0..n)
            .map(|k| Complex::from_polar(T::one(), step * T::from_count(k)))
            .collect();
        Self { powers }
    }

    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn omega(&self) -> Complex<T> {
        self.power(1)
    }

    /// `ω^k` for any `k` (reduced modulo `n`).
    pub fn power(&self, k: usize) -> Complex<T> {
        self.powers[k % self.powers.len()]
    }

    pub fn powers(&self) -> &[Complex<T>] {
        &self.powers
    }

    fn twiddle(&self, k: usize, direction: Direction) -> Complex<T> {
        match direction {
            Direction::Forward => self.power(k),
            Direction::Inverse => self.power(k).conj(),
        }
    }
}

fn scale_inverse<T: Real>(mut values: Vec<Complex<T>>, direction: Direction) -> Vec<Complex<T>> {
    if direction == Direction::Inverse {
        let inv_n = T::one() / T::from_count(values.len());
        values.iter_mut().for_each(|z| *z = z.scale(inv_n));
    }
    values
}

fn naive_slice<T: Real>(
    input: &[Complex<T>],
    plan: &RootOfUnityPlan<T>,
    direction: Direction,
) -> Vec<Complex<T>> {
    let n = input.len();
    let out = (0..n)
        .map(|k| {
            input
                .iter()
                .enumerate()
                .fold(Complex::zero(), |acc, (j, &x)| {
                    acc + x * plan.twiddle(j * k % n, direction)
                })
        })
        .collect();
    scale_inverse(out, direction)
}

fn radix2_slice<T: Real>(
    input: &[Complex<T>],
    plan: &RootOfUnityPlan<T>,
    direction: Direction,
) -> Vec<Complex<T>> {
    let n = input.len();
    debug_assert!(n.is_power_of_two());
    let bits = n.trailing_zeros();
    let mut buf: Vec<Complex<T>> = if bits == 0 {
        input.to_vec()
    } else {
        (0..n)
            .map(|i| input[i.reverse_bits() >> (usize::BITS - bits)])
            .collect()
    };

    let mut half = 1;
    while half < n {
        let stride = n / (2 * half);
        for block in buf.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (i, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                let t = *b * plan.twiddle(i * stride, direction);
                *b = *a - t;
                *a = *a + t;
            }
        }
        half *= 2;
    }
    scale_inverse(buf, direction)
}

/// Radix-2 when the length allows it, otherwise the quadratic sum.
fn single_slice<T: Real>(
    input: &[Complex<T>],
    plan: &RootOfUnityPlan<T>,
    direction: Direction,
) -> Vec<Complex<T>> {
    if input.len().is_power_of_two() {
        radix2_slice(input, plan, direction)
    } else {
        naive_slice(input, plan, direction)
    }
}

/// Direct `O(n²)` DFT: `out[k] = Σ_j v[j]·ω^{jk}`, i.e. `v` read as a
/// polynomial evaluated at every `ω^k`.
pub fn dft_naive<T: Real>(v: &ComplexVector<T>) -> ComplexVector<T> {
    transform_naive(v, Direction::Forward)
}

/// Direct `O(n²)` transform in either direction.
pub fn transform_naive<T: Real>(v: &ComplexVector<T>, direction: Direction) -> ComplexVector<T> {
    let plan = RootOfUnityPlan::new(v.len());
    ComplexVector::from_raw(naive_slice(v, &plan, direction))
}

/// Running product kept as `mantissa · 2^exponent` so long products of
/// root differences cannot overflow `f32`.
struct ScaledProduct<T> {
    mantissa: Complex<T>,
    exponent: i32,
}

impl<T: Real> ScaledProduct<T> {
    fn mul(&mut self, z: Complex<T>) {
        self.mantissa = self.mantissa * z;
        let (_, exp, _) = self.mantissa.norm().integer_decode();
        // integer_decode exponents are offset by the mantissa width; only drift matters
        let (_, base, _) = T::one().integer_decode();
        let shift = i32::from(exp) - i32::from(base);
        if shift.abs() > 16 {
            self.mantissa = self.mantissa.scale(T::from_signed(2).powi(-shift));
            self.exponent += shift;
        }
    }

    fn reciprocal(&self) -> Complex<T> {
        self.mantissa
            .inv()
            .scale(T::from_signed(2).powi(-self.exponent))
    }
}

/// Lagrange weights `u_k = 1 / Π_{l≠k} (ω^k − ω^l)`, evaluated from the
/// product itself rather than from the closed form `ω^k / n`.
pub fn lagrange_units<T: Real>(n: usize) -> Vec<Complex<T>> {
    assert!(n > 0, "lagrange_units needs n >= 1");
    let plan = RootOfUnityPlan::<T>::new(n);
    (0..n)
        .map(|k| {
            let root = plan.power(k);
            let mut prod = ScaledProduct {
                mantissa: Complex::one(),
                exponent: 0,
            };
            for l in (0..n).filter(|&l| l != k) {
                prod.mul(root - plan.power(l));
            }
            prod.reciprocal()
        })
        .collect()
}

/// Inverse DFT through the polynomial CRT.
///
/// Rebuilds the coefficients of `Σ_k spectrum[k]·u_k·(X^n − 1)/(X − ω^k)`,
/// expanding each cofactor as `Σ_q ω^{k(n−1−q)} X^q`.
pub fn idft_lagrange<T: Real>(spectrum: &ComplexVector<T>) -> ComplexVector<T> {
    let n = spectrum.len();
    let plan = RootOfUnityPlan::<T>::new(n);
    let weighted: Vec<Complex<T>> = spectrum
        .iter()
        .zip(lagrange_units::<T>(n))
        .map(|(s, u)| s * u)
        .collect();
    let coeffs = (0..n)
        .map(|q| {
            weighted
                .iter()
                .enumerate()
                .fold(Complex::zero(), |acc, (k, &w)| {
                    acc + w * plan.power(k * (n - 1 - q) % n)
                })
        })
        .collect();
    ComplexVector::from_raw(coeffs)
}

/// Coefficients of `Σ_k u_k·(X^n − 1)/(X − ω^k)`, which is the constant
/// polynomial 1 in exact arithmetic.
pub fn lagrange_partition_of_unity<T: Real>(n: usize) -> ComplexVector<T> {
    let ones = ComplexVector::from_raw(vec![Complex::one(); n]);
    idft_lagrange(&ones)
}

/// Iterative radix-2 Cooley-Tukey transform. The inverse is normalized by `1/n`.
pub fn fft_radix2<T: Real>(
    v: &ComplexVector<T>,
    direction: Direction,
) -> Result<ComplexVector<T>, DftError> {
    if !v.len().is_power_of_two() {
        return Err(DftError::NotPowerOfTwo(v.len()));
    }
    let plan = RootOfUnityPlan::new(v.len());
    Ok(ComplexVector::from_raw(radix2_slice(v, &plan, direction)))
}

/// Input and output permutations of the prime-factor algorithm for `n = n1·n2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodThomasMap {
    n1: usize,
    n2: usize,
    /// `input[j]` is the row-major cell `a·n2 + b` with `(a, b) = (j mod n1, j mod n2)`.
    input: Vec<usize>,
    /// `output[k1·n2 + k2]` is the CRT solution of `k ≡ k1·n2 (mod n1)`, `k ≡ k2·n1 (mod n2)`.
    output: Vec<usize>,
}

impl GoodThomasMap {
    pub fn new(n1: usize, n2: usize) -> Result<Self, DftError> {
        if n1 == 0 || n2 == 0 || num_integer::gcd(n1, n2) != 1 {
            return Err(DftError::FactorsNotCoprime { n1, n2 });
        }
        let n = n1 * n2;
        if n1 == 1 || n2 == 1 {
            // a unit factor leaves a single transform: both maps are the identity
            let id: Vec<usize> = (0..n).collect();
            return Ok(Self {
                n1,
                n2,
                input: id.clone(),
                output: id,
            });
        }

        let basis = CrtBasis::new(vec![n1 as i64, n2 as i64])
            .map_err(|_| DftError::FactorsNotCoprime { n1, n2 })?;
        let input = (0..n)
            .map(|j| {
                let r = basis.residues_of(&(j as i64));
                r[0] as usize * n2 + r[1] as usize
            })
            .collect();
        let (a1, a2) = (n1 as i64, n2 as i64);
        let output = (0..n)
            .map(|cell| {
                let (k1, k2) = ((cell / n2) as i64, (cell % n2) as i64);
                let k = basis
                    .reconstruct(&[(k1 * a2) % a1, (k2 * a1) % a2])
                    .expect("residues are reduced");
                k as usize
            })
            .collect();
        Ok(Self {
            n1,
            n2,
            input,
            output,
        })
    }

    pub fn factors(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }

    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn input_map(&self) -> &[usize] {
        &self.input
    }

    pub fn output_map(&self) -> &[usize] {
        &self.output
    }

    /// Runs the transform on a slice of length `n1·n2`.
    fn apply<T: Real>(&self, v: &[Complex<T>], direction: Direction) -> Vec<Complex<T>> {
        let (n1, n2) = (self.n1, self.n2);
        if n1 == 1 || n2 == 1 {
            return single_slice(v, &RootOfUnityPlan::new(v.len()), direction);
        }
        let (row_plan, column_plan) = (RootOfUnityPlan::new(n2), RootOfUnityPlan::new(n1));
        let mut grid = vec![Complex::zero(); v.len()];
        for (&cell, &x) in self.input.iter().zip(v) {
            grid[cell] = x;
        }

        // length-n2 transforms along each row
        for row in grid.chunks_exact_mut(n2) {
            let out = single_slice(row, &row_plan, direction);
            row.copy_from_slice(&out);
        }
        // length-n1 transforms down each column; no twiddles in between
        let mut column = vec![Complex::zero(); n1];
        for b in 0..n2 {
            for (a, c) in column.iter_mut().enumerate() {
                *c = grid[a * n2 + b];
            }
            for (a, z) in single_slice(&column, &column_plan, direction)
                .into_iter()
                .enumerate()
            {
                grid[a * n2 + b] = z;
            }
        }

        let mut out = vec![Complex::zero(); v.len()];
        for (&k, &z) in self.output.iter().zip(&grid) {
            out[k] = z;
        }
        out
    }
}

/// Good-Thomas prime-factor transform for `n = n1·n2` with `gcd(n1, n2) = 1`.
pub fn fft_good_thomas<T: Real>(
    v: &ComplexVector<T>,
    (n1, n2): (usize, usize),
    direction: Direction,
) -> Result<ComplexVector<T>, DftError> {
    if n1.checked_mul(n2) != Some(v.len()) {
        return Err(DftError::LengthMismatch {
            n1,
            n2,
            len: v.len(),
        });
    }
    let map = GoodThomasMap::new(n1, n2)?;
    Ok(ComplexVector::from_raw(map.apply(v, direction)))
}

/// Splits `n` into `(p^e, n / p^e)` where `p` is the smallest prime factor of `n`.
///
/// Returns `(n, 1)` for prime powers and `(1, 1)` for `n = 1`.
pub fn coprime_split(n: usize) -> (usize, usize) {
    if n <= 1 {
        return (1, 1);
    }
    let p = (2..)
        .take_while(|d| d * d <= n)
        .find(|d| n.is_multiple_of(*d))
        .unwrap_or(n);
    let mut power = 1;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
        power *= p;
    }
    (power, rest)
}

/// Fastest available exact-length transform: radix-2 for powers of two,
/// Good-Thomas when a nontrivial coprime split exists, the direct sum otherwise.
pub fn transform<T: Real>(v: &ComplexVector<T>, direction: Direction) -> ComplexVector<T> {
    let n = v.len();
    if n.is_power_of_two() {
        let plan = RootOfUnityPlan::new(n);
        return ComplexVector::from_raw(radix2_slice(v, &plan, direction));
    }
    let (n1, n2) = coprime_split(n);
    if n1 > 1 && n2 > 1 {
        let map = GoodThomasMap::new(n1, n2).expect("coprime split");
        return ComplexVector::from_raw(map.apply(v, direction));
    }
    transform_naive(v, direction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cv(values: &[f64]) -> ComplexVector<f64> {
        ComplexVector::from_real(values).unwrap()
    }

    fn assert_close(a: &[Complex64], b: &[Complex64], tol: f64) {
        assert_eq!(a.len(), b.len());
        let d = max_abs_diff(a, b);
        assert!(d < tol, "max abs diff {d:e} >= {tol:e}");
    }

    #[test]
    fn vector_rejects_empty_and_non_finite() {
        assert_eq!(ComplexVector::<f64>::new(vec![]), Err(DftError::EmptyInput));
        assert_eq!(
            ComplexVector::new(vec![c(0.0, 0.0), c(f64::NAN, 0.0)]),
            Err(DftError::NonFinite { index: 1 })
        );
        assert_eq!(
            ComplexVector::new(vec![c(0.0, f64::INFINITY)]),
            Err(DftError::NonFinite { index: 0 })
        );
    }

    #[test]
    fn plan_invariants() {
        for n in [1, 2, 3, 7, 64, 1000] {
            let plan = RootOfUnityPlan::<f64>::new(n);
            for z in plan.powers() {
                assert!((z.norm() - 1.0).abs() < 1e-12);
            }
            let wn = plan
                .powers()
                .iter()
                .fold(Complex64::one(), |acc, _| acc * plan.omega());
            assert!((wn - Complex64::one()).norm() < 1e-12);
        }
        let plan = RootOfUnityPlan::<f64>::new(4);
        assert!((plan.omega() - c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn naive_examples() {
        assert_close(
            &dft_naive(&cv(&[1.0, 0.0, 0.0, 0.0])),
            &[c(1.0, 0.0); 4],
            1e-15,
        );
        assert_close(
            &dft_naive(&cv(&[1.0; 4])),
            &[c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            1e-14,
        );
        assert_close(
            &dft_naive(&cv(&[0.0; 5])),
            &[c(0.0, 0.0); 5],
            0.0 + f64::MIN_POSITIVE,
        );
    }

    #[test]
    fn lagrange_units_small() {
        assert_close(&lagrange_units::<f64>(1), &[c(1.0, 0.0)], 1e-15);
        assert_close(
            &lagrange_units::<f64>(4),
            &[c(0.25, 0.0), c(0.0, -0.25), c(-0.25, 0.0), c(0.0, 0.25)],
            1e-15,
        );
        let plan = RootOfUnityPlan::<f64>::new(8);
        let closed: Vec<_> = plan.powers().iter().map(|w| w / 8.0).collect();
        assert_close(&lagrange_units::<f64>(8), &closed, 1e-12);
    }

    #[test]
    fn lagrange_units_survive_f32_range() {
        // partial products of |ω^k − ω^l| exceed f32::MAX around n ≈ 300
        let n = 512;
        let plan = RootOfUnityPlan::<f32>::new(n);
        for (u, w) in lagrange_units::<f32>(n).iter().zip(plan.powers()) {
            assert!((u - w / n as f32).norm() < 1e-5, "{u} vs {}", w / n as f32);
        }
    }

    #[test]
    fn lagrange_inverse_of_constant_spectrum_is_impulse() {
        let c0 = c(2.5, -1.0);
        let spec = ComplexVector::new(vec![c0; 6]).unwrap();
        let mut expect = vec![c(0.0, 0.0); 6];
        expect[0] = c0;
        assert_close(&idft_lagrange(&spec), &expect, 1e-13);
    }

    #[test]
    fn partition_of_unity() {
        for n in [1, 2, 5, 16, 33] {
            let mut expect = vec![c(0.0, 0.0); n];
            expect[0] = c(1.0, 0.0);
            assert_close(&lagrange_partition_of_unity::<f64>(n), &expect, 1e-12);
        }
    }

    #[test]
    fn radix2_rejects_other_lengths() {
        assert_eq!(
            fft_radix2(&cv(&[1.0; 6]), Direction::Forward),
            Err(DftError::NotPowerOfTwo(6))
        );
        let z = ComplexVector::new(vec![c(3.0, -2.0)]).unwrap();
        assert_eq!(fft_radix2(&z, Direction::Forward).unwrap(), z);
        assert_eq!(fft_radix2(&z, Direction::Inverse).unwrap(), z);
    }

    #[test]
    fn good_thomas_examples() {
        let mut impulse = vec![0.0; 12];
        impulse[0] = 1.0;
        let out = fft_good_thomas(&cv(&impulse), (3, 4), Direction::Forward).unwrap();
        assert_close(&out, &[c(1.0, 0.0); 12], 1e-14);

        let cst = ComplexVector::new(vec![c(0.5, 2.0); 6]).unwrap();
        let out = fft_good_thomas(&cst, (2, 3), Direction::Forward).unwrap();
        let mut expect = vec![c(0.0, 0.0); 6];
        expect[0] = c(3.0, 12.0);
        assert_close(&out, &expect, 1e-14);
    }

    #[test]
    fn good_thomas_errors() {
        let v = cv(&[1.0; 12]);
        assert_eq!(
            fft_good_thomas(&v, (2, 6), Direction::Forward),
            Err(DftError::FactorsNotCoprime { n1: 2, n2: 6 })
        );
        assert_eq!(
            fft_good_thomas(&v, (3, 5), Direction::Forward),
            Err(DftError::LengthMismatch {
                n1: 3,
                n2: 5,
                len: 12
            })
        );
    }

    #[test]
    fn good_thomas_maps_are_permutations() {
        let map = GoodThomasMap::new(3, 5).unwrap();
        for perm in [map.input_map(), map.output_map()] {
            let mut seen = perm.to_vec();
            seen.sort_unstable();
            assert_eq!(seen, (0..15).collect::<Vec<_>>());
        }
        // j = 7 → (1, 2) → cell 1·5 + 2
        assert_eq!(map.input_map()[7], 7);
        // j = 5 → (2, 0) → cell 10
        assert_eq!(map.input_map()[5], 10);
        // cell (k1, k2) = (1, 0) → k ≡ 5·1 ≡ 2 (mod 3), k ≡ 0 (mod 5) → k = 5
        assert_eq!(map.output_map()[5], 5);
        // cell (0, 1) → k ≡ 0 (mod 3), k ≡ 3 (mod 5) → k = 3
        assert_eq!(map.output_map()[1], 3);
    }

    #[test]
    fn split_picks_smallest_prime_power() {
        assert_eq!(coprime_split(1), (1, 1));
        assert_eq!(coprime_split(12), (4, 3));
        assert_eq!(coprime_split(15), (3, 5));
        assert_eq!(coprime_split(4032), (64, 63));
        assert_eq!(coprime_split(49), (49, 1));
        assert_eq!(coprime_split(13), (13, 1));
    }
}
