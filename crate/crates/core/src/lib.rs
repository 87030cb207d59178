//! Chinese remainder theorem and Fourier transforms built on it.
//!
//! - [`crt`]: exact integer CRT (residues, unit coefficients, the use
//!   relation, solving congruence systems).
//! - [`dft`]: the DFT as the polynomial CRT for `ℂ[X]/(X^n − 1)`, with the
//!   Lagrange inverse, radix-2 and Good-Thomas fast transforms.
//! - [`contft`]: dual-grid discretization of the continuous Fourier
//!   transform, the Dirichlet kernel, `f(0)` recovery and the finite
//!   Poisson summation check.
//!
//! Transform code is generic over [`Real`] (`f32` or `f64`); the CRT is
//! generic over any signed integer type implementing [`crt::CrtInt`]. The
//! aliases below fix the usual choices.

pub mod contft;
pub mod crt;
pub mod dft;
pub mod scalar;

pub use scalar::Real;

pub type BigCongruenceSystem = crt::CongruenceSystem<num_bigint::BigInt>;
pub type BigCrtSolution = crt::CrtSolution<num_bigint::BigInt>;
pub type BigCrtBasis = crt::CrtBasis<num_bigint::BigInt>;

pub type Complex64Vector = dft::ComplexVector<f64>;
pub type Complex32Vector = dft::ComplexVector<f32>;
pub type RootOfUnityPlan64 = dft::RootOfUnityPlan<f64>;

pub type Grid = contft::GridParams;
pub type SampledFunction64 = contft::SampledFunction<f64>;
pub type Spectrum64 = contft::Spectrum<f64>;
pub type TestFunction64 = contft::TestFunction<f64>;
