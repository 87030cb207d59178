//! Exact Chinese remainder theorem over arbitrary integer types.
//!
//! For pairwise coprime moduli `m_0, …, m_{μ-1}` with product `Γ`, the map
//! `n ↦ (n mod m_0, …, n mod m_{μ-1})` is a ring isomorphism
//! `ℤ/(Γ) → Π ℤ/(m_j)`. Its inverse is
//!
//! ```text
//! n = Σ_j r_j · u_j · (Γ/m_j)  (mod Γ),   u_j = (Γ/m_j)^{-1} mod m_j
//! ```
//!
//! with the unit coefficients `u_j` normalized into `[1, m_j)`. With that
//! normalization the weights satisfy `Σ_j u_j·(Γ/m_j) = 1 + ℓ·Γ` exactly for
//! some non-negative integer `ℓ`, the *use index*: `ℓ = 1` is the "positive
//! use" case and `ℓ > 1` the "universal use" case.
//!
//! Everything here is generic over [`CrtInt`]; use [`num_bigint::BigInt`]
//! (see the `Big*` aliases at the crate root) when `Γ` can exceed a machine
//! word, or `i64` for index arithmetic.

use num_integer::Integer;
use num_traits::Signed;
use std::fmt::{self, Debug, Display};
use thiserror::Error;

/// Integer types the CRT routines accept.
pub trait CrtInt: Integer + Signed + Clone + Debug + Display + Send + Sync {}

impl<T> CrtInt for T where T: Integer + Signed + Clone + Debug + Display + Send + Sync {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrtError {
    #[error("invalid modulus {0}: moduli must be at least 2")]
    InvalidModulus(String),
    #[error("{value} is not invertible modulo {modulus}")]
    NotCoprime { value: String, modulus: String },
    #[error("moduli {first} (position {i}) and {second} (position {j}) are not coprime")]
    NotPairwiseCoprime {
        i: usize,
        j: usize,
        first: String,
        second: String,
    },
    #[error("residue {residue} at position {index} is outside [0, {modulus})")]
    ResidueOutOfRange {
        index: usize,
        residue: String,
        modulus: String,
    },
    #[error("{moduli} moduli but {residues} residues")]
    LengthMismatch { moduli: usize, residues: usize },
    #[error("at least one modulus is required")]
    Empty,
}

/// Inverse of `a` modulo `m`, normalized into `[1, m)`.
///
/// Extended Euclid on `(a mod m, m)`; the Bézout coefficient is shifted into
/// the positive range at the end.
pub fn mod_inverse<I: CrtInt>(a: &I, m: &I) -> Result<I, CrtError> {
    let two = I::one() + I::one();
    if *m < two {
        return Err(CrtError::InvalidModulus(m.to_string()));
    }
    let reduced = a.mod_floor(m);

    // invariant: old_r ≡ old_s·a, r ≡ s·a (mod m)
    let (mut old_r, mut r) = (reduced, m.clone());
    let (mut old_s, mut s) = (I::one(), I::zero());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s - q * s.clone();
        old_s = std::mem::replace(&mut s, next_s);
    }
    if !old_r.is_one() {
        return Err(CrtError::NotCoprime {
            value: a.to_string(),
            modulus: m.to_string(),
        });
    }
    Ok(old_s.mod_floor(m))
}

/// Classification of the use index `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UseKind {
    /// `ℓ = 0`: the weights already sum to exactly 1 (e.g. a single modulus).
    Degenerate,
    /// `ℓ = 1`.
    Positive,
    /// `ℓ > 1`.
    Universal,
}

impl UseKind {
    pub fn label(self) -> &'static str {
        match self {
            UseKind::Degenerate => "degenerate",
            UseKind::Positive => "positive use",
            UseKind::Universal => "universal use",
        }
    }
}

impl Display for UseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `ℓ` in `Σ_j u_j·(Γ/m_j) = 1 + ℓ·Γ`, with its classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UseRelation<I> {
    pub index: I,
    pub kind: UseKind,
}

fn classify<I: CrtInt>(index: &I) -> UseKind {
    if index.is_zero() {
        UseKind::Degenerate
    } else if index.is_one() {
        UseKind::Positive
    } else {
        UseKind::Universal
    }
}

fn validate_moduli<I: CrtInt>(moduli: &[I]) -> Result<(), CrtError> {
    if moduli.is_empty() {
        return Err(CrtError::Empty);
    }
    let two = I::one() + I::one();
    if let Some(bad) = moduli.iter().find(|m| **m < two) {
        return Err(CrtError::InvalidModulus(bad.to_string()));
    }
    for (i, a) in moduli.iter().enumerate() {
        for (j, b) in moduli.iter().enumerate().skip(i + 1) {
            if !a.gcd(b).is_one() {
                return Err(CrtError::NotPairwiseCoprime {
                    i,
                    j,
                    first: a.to_string(),
                    second: b.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Precomputed reconstruction data for a fixed set of pairwise coprime moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtBasis<I> {
    moduli: Vec<I>,
    gamma: I,
    cofactors: Vec<I>,
    unit_coeffs: Vec<I>,
    use_index: I,
}

impl<I: CrtInt> CrtBasis<I> {
    /// Validates the moduli (each ≥ 2, pairwise coprime) and computes `Γ`,
    /// the cofactors `Γ/m_j`, the unit coefficients and the use index.
    pub fn new(moduli: Vec<I>) -> Result<Self, CrtError> {
        validate_moduli(&moduli)?;
        let gamma = moduli.iter().fold(I::one(), |acc, m| acc * m.clone());
        let cofactors: Vec<I> = moduli.iter().map(|m| gamma.clone() / m.clone()).collect();
        let unit_coeffs = cofactors
            .iter()
            .zip(&moduli)
            .map(|(c, m)| mod_inverse(c, m))
            .collect::<Result<Vec<_>, _>>()?;
        let weight_sum = unit_coeffs
            .iter()
            .zip(&cofactors)
            .fold(I::zero(), |acc, (u, c)| acc + u.clone() * c.clone());
        let (use_index, rest) = (weight_sum - I::one()).div_mod_floor(&gamma);
        debug_assert!(rest.is_zero());
        Ok(Self {
            moduli,
            gamma,
            cofactors,
            unit_coeffs,
            use_index,
        })
    }

    pub fn moduli(&self) -> &[I] {
        &self.moduli
    }

    /// `Γ = Π m_j`.
    pub fn gamma(&self) -> &I {
        &self.gamma
    }

    /// `Γ/m_j` for each modulus.
    pub fn cofactors(&self) -> &[I] {
        &self.cofactors
    }

    pub fn unit_coeffs(&self) -> &[I] {
        &self.unit_coeffs
    }

    pub fn use_relation(&self) -> UseRelation<I> {
        UseRelation {
            index: self.use_index.clone(),
            kind: classify(&self.use_index),
        }
    }

    /// Forward isomorphism: `(n mod m_0, …, n mod m_{μ-1})`, each in `[0, m_j)`.
    pub fn residues_of(&self, n: &I) -> Vec<I> {
        self.moduli.iter().map(|m| n.mod_floor(m)).collect()
    }

    /// Inverse isomorphism: the unique `n ∈ [0, Γ)` with the given residues.
    pub fn reconstruct(&self, residues: &[I]) -> Result<I, CrtError> {
        self.check_residues(residues)?;
        Ok(self.combine(residues))
    }

    fn check_residues(&self, residues: &[I]) -> Result<(), CrtError> {
        if residues.len() != self.moduli.len() {
            return Err(CrtError::LengthMismatch {
                moduli: self.moduli.len(),
                residues: residues.len(),
            });
        }
        for (index, (r, m)) in residues.iter().zip(&self.moduli).enumerate() {
            if r.is_negative() || r >= m {
                return Err(CrtError::ResidueOutOfRange {
                    index,
                    residue: r.to_string(),
                    modulus: m.to_string(),
                });
            }
        }
        Ok(())
    }

    fn combine(&self, residues: &[I]) -> I {
        residues
            .iter()
            .zip(self.unit_coeffs.iter().zip(&self.cofactors))
            .fold(I::zero(), |acc, (r, (u, c))| {
                (acc + r.clone() * u.clone() * c.clone()).mod_floor(&self.gamma)
            })
    }
}

/// A validated system `x ≡ r_j (mod m_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSystem<I> {
    basis: CrtBasis<I>,
    residues: Vec<I>,
}

impl<I: CrtInt> CongruenceSystem<I> {
    pub fn new(moduli: Vec<I>, residues: Vec<I>) -> Result<Self, CrtError> {
        if moduli.len() != residues.len() {
            return Err(CrtError::LengthMismatch {
                moduli: moduli.len(),
                residues: residues.len(),
            });
        }
        let basis = CrtBasis::new(moduli)?;
        basis.check_residues(&residues)?;
        Ok(Self { basis, residues })
    }

    pub fn moduli(&self) -> &[I] {
        self.basis.moduli()
    }

    pub fn residues(&self) -> &[I] {
        &self.residues
    }

    pub fn basis(&self) -> &CrtBasis<I> {
        &self.basis
    }

    pub fn solve(&self) -> CrtSolution<I> {
        CrtSolution {
            value: self.basis.combine(&self.residues),
            gamma: self.basis.gamma.clone(),
            unit_coeffs: self.basis.unit_coeffs.clone(),
            use_index: self.basis.use_index.clone(),
        }
    }
}

/// Result of solving a [`CongruenceSystem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtSolution<I> {
    /// The unique solution in `[0, Γ)`.
    pub value: I,
    pub gamma: I,
    pub unit_coeffs: Vec<I>,
    pub use_index: I,
}

impl<I: CrtInt> CrtSolution<I> {
    pub fn use_kind(&self) -> UseKind {
        classify(&self.use_index)
    }
}

pub fn residues_of<I: CrtInt>(n: &I, moduli: &[I]) -> Result<Vec<I>, CrtError> {
    validate_moduli(moduli)?;
    Ok(moduli.iter().map(|m| n.mod_floor(m)).collect())
}

pub fn unit_coefficients<I: CrtInt>(moduli: &[I]) -> Result<Vec<I>, CrtError> {
    Ok(CrtBasis::new(moduli.to_vec())?.unit_coeffs)
}

pub fn use_relation<I: CrtInt>(moduli: &[I]) -> Result<UseRelation<I>, CrtError> {
    Ok(CrtBasis::new(moduli.to_vec())?.use_relation())
}

pub fn solve<I: CrtInt>(system: &CongruenceSystem<I>) -> CrtSolution<I> {
    system.solve()
}
