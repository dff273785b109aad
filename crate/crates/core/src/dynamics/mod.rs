//! Orbits of the cellular automaton `q ↦ L q` and decision procedures for
//! mixing (no `n` with `det(Lⁿ − 1) = 0`) and weak diffusivity (no soliton
//! `Lⁿ q = uᵏ q`).
//!
//! The general procedures are semi-decisions bounded by a horizon `n_max`;
//! the 2×2 palindromic family has an exact classifier in [`palindromic`].

mod oracle;
pub mod palindromic;
mod soliton;

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::fpoly::{Exponent, LaurentPoly};
use crate::symplectic::{ModuleVector, PolyMatrix};

pub use oracle::{brute_force_soliton_oracle, ORACLE_MAX_UNKNOWNS};
pub use palindromic::{b_sequence, classify_palindromic};
pub use soliton::{cone_candidates, soliton_search, soliton_search_with, witness_extract, SearchOptions};

/// One step of an orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sample {
    pub n: u64,
    pub hamming: usize,
    pub support: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
}

impl Trajectory {
    /// `n,hamming,support` with one row per step.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,hamming,support\n");
        for s in &self.samples {
            let _ = writeln!(out, "{},{},{}", s.n, s.hamming, s.support);
        }
        out
    }

    pub fn max_hamming(&self) -> usize {
        self.samples.iter().map(|s| s.hamming).max().unwrap_or(0)
    }
}

/// Number of distinct sites where `P_q` acts nontrivially.
pub fn support_size(q: &ModuleVector) -> usize {
    q.support().len()
}

/// Samples `Lⁱq` for `i = 0..=steps`, iterating `mat_apply` on the vector.
pub fn weight_trajectory(l: &PolyMatrix, q: &ModuleVector, steps: u64) -> Result<Trajectory> {
    if q.is_zero() {
        return Err(AlgebraError::ZeroVector);
    }
    let mut samples = Vec::with_capacity(steps as usize + 1);
    let mut current = q.clone();
    for n in 0..=steps {
        if n > 0 {
            current = l.apply(&current)?;
        }
        samples.push(Sample {
            n,
            hamming: current.total_weight(),
            support: support_size(&current),
        });
    }
    Ok(Trajectory { samples })
}

/// A nonzero `q` with `Lⁿ q = uᵏ q`, checked on construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolitonWitness {
    n: u64,
    k: Exponent,
    q: ModuleVector,
}

impl SolitonWitness {
    pub fn new(l: &PolyMatrix, n: u64, k: Exponent, q: ModuleVector) -> Result<Self> {
        if n == 0 {
            return Err(AlgebraError::InvalidArgument("soliton period must be positive".into()));
        }
        if q.is_zero() {
            return Err(AlgebraError::ZeroVector);
        }
        let mut image = q.clone();
        for _ in 0..n {
            image = l.apply(&image)?;
        }
        if image != q.shift(&k)? {
            return Err(AlgebraError::InvalidArgument(format!(
                "L^{n} q != u^{k} q for q = {q}"
            )));
        }
        Ok(SolitonWitness { n, k, q })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> &Exponent {
        &self.k
    }

    pub fn q(&self) -> &ModuleVector {
        &self.q
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixingVerdict {
    /// No `n ≤ horizon` has `det(Lⁿ − 1) = 0`.
    MixingUpToHorizon(u64),
    /// The first `n` with `det(Lⁿ − 1) = 0`.
    Periodic(u64),
}

/// Scans `n = 1..=n_max` for `det(Lⁿ − 1) = 0`, reusing `Lⁿ⁻¹`.
pub fn mixing_test(l: &PolyMatrix, n_max: u64) -> Result<MixingVerdict> {
    if n_max == 0 {
        return Err(AlgebraError::InvalidArgument("horizon must be at least 1".into()));
    }
    let one = LaurentPoly::one(l.dim());
    for (i, power) in l.powers().take(n_max as usize).enumerate() {
        if power?.minus_scalar(&one)?.determinant()?.is_zero() {
            return Ok(MixingVerdict::Periodic(i as u64 + 1));
        }
    }
    Ok(MixingVerdict::MixingUpToHorizon(n_max))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Periodic,
    Glider,
    FractalLike,
}

/// `det(Lⁿ − 1) = 0` for this `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityCertificate {
    pub n: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifierReport {
    pub verdict: Verdict,
    /// Largest `n` examined; `None` for exact verdicts.
    pub horizon: Option<u64>,
    pub exact: bool,
    pub witness: Option<SolitonWitness>,
    pub certificate: Option<PeriodicityCertificate>,
}

impl ClassifierReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Periodic if the mixing test fails, glider if a soliton is found, otherwise
/// fractal-like up to the horizon.
pub fn classify(l: &PolyMatrix, n_max: u64) -> Result<ClassifierReport> {
    classify_with(l, n_max, &SearchOptions::default())
}

pub fn classify_with(l: &PolyMatrix, n_max: u64, options: &SearchOptions) -> Result<ClassifierReport> {
    if let MixingVerdict::Periodic(n) = mixing_test(l, n_max)? {
        return Ok(ClassifierReport {
            verdict: Verdict::Periodic,
            horizon: Some(n_max),
            exact: false,
            witness: None,
            certificate: Some(PeriodicityCertificate { n }),
        });
    }
    let witness = soliton_search_with(l, n_max, options)?;
    Ok(ClassifierReport {
        verdict: if witness.is_some() {
            Verdict::Glider
        } else {
            Verdict::FractalLike
        },
        horizon: Some(n_max),
        exact: false,
        witness,
        certificate: None,
    })
}
