//! Expectation values `ω₀ ∘ β (P)` of Pauli monomials in short-range
//! entangled states: a product state `ω₀` dressed by the non-Clifford
//! automorphism `β = ∏ Ad exp(i g X_j X_{j+R})`.
//!
//! Values are computed by a weighted automaton whose cost is linear in the
//! word length, and cross-checked against a dense finite-window oracle.

mod automaton;
mod beta;
mod oracle;
mod state;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{AlgebraError, Error};
use crate::pauli::{vec_to_pauli, PauliLetter};
use crate::symplectic::{ModuleVector, PolyMatrix};

pub use automaton::{build_automaton, AutomatonData};
pub use beta::{beta_coefficients, BetaKind, BetaSpec, BetaTensor, MAX_RANGE};
pub use oracle::dense_oracle;
pub use state::{
    c_beta, certificate_holds, lambda_of_state, moments_from_bloch, thermalization_certificate,
    OneSiteMoments, ProductStateParams,
};

/// The letters of `P_q` over its support interval, phase dropped, with the
/// first site. One-dimensional lattices with one qubit per cell only.
pub fn letter_word(q: &ModuleVector) -> Result<(i64, Vec<PauliLetter>), Error> {
    if q.len() != 2 || q.dim() != 1 {
        return Err(Error::Numerics(
            "expectation values need one qubit per cell on a one-dimensional lattice".into(),
        ));
    }
    let p = vec_to_pauli(q)?;
    let sites: Vec<i64> = p.letters().map(|((s, _), _)| s.components()[0]).collect();
    let (Some(&lo), Some(&hi)) = (sites.first(), sites.last()) else {
        return Ok((0, Vec::new()));
    };
    let len = usize::try_from(hi - lo + 1)
        .map_err(|_| Error::Numerics("support interval too long".into()))?;
    let mut word = vec![PauliLetter::I; len];
    for ((s, _), l) in p.letters() {
        word[(s.components()[0] - lo) as usize] = l;
    }
    Ok((lo, word))
}

/// State, dressing and their automaton, prepared once and reused.
#[derive(Clone, Debug)]
pub struct Evaluator {
    pub state: ProductStateParams,
    pub beta: BetaSpec,
    automaton: AutomatonData,
}

impl Evaluator {
    pub fn new(state: ProductStateParams, beta: BetaSpec) -> Result<Self, Error> {
        let tensor = beta_coefficients(&beta)?;
        let automaton = build_automaton(&moments_from_bloch(&state), &tensor)?;
        Ok(Evaluator { state, beta, automaton })
    }

    pub fn automaton(&self) -> &AutomatonData {
        &self.automaton
    }

    pub fn evaluate(&self, word: &[PauliLetter]) -> Complex64 {
        self.automaton.evaluate(word)
    }

    /// `|ω₀ ∘ β (P_q)|`.
    pub fn abs_expectation(&self, q: &ModuleVector) -> Result<f64, Error> {
        let (_, word) = letter_word(q)?;
        Ok(self.evaluate(&word).norm())
    }
}

/// `|ω₀ ∘ β (P_{Lⁿq₀})|` with `Lⁿq₀` obtained by iterating `L`.
pub fn expect_evolved(
    l: &PolyMatrix,
    q0: &ModuleVector,
    n: u64,
    state: &ProductStateParams,
    beta: &BetaSpec,
) -> Result<f64, Error> {
    let evaluator = Evaluator::new(*state, *beta)?;
    let mut q = q0.clone();
    if q.is_zero() {
        return Err(AlgebraError::ZeroVector.into());
    }
    for _ in 0..n {
        q = l.apply(&q)?;
    }
    evaluator.abs_expectation(&q)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpectationSample {
    pub n: u64,
    /// First site of the letter word of `Lⁿq₀`.
    pub word_start: i64,
    pub abs_expectation: f64,
}

/// `n = 0..=steps`; the orbit is computed once, the evaluations in parallel.
pub fn expectation_series(
    l: &PolyMatrix,
    q0: &ModuleVector,
    steps: u64,
    evaluator: &Evaluator,
) -> Result<Vec<ExpectationSample>, Error> {
    if q0.is_zero() {
        return Err(AlgebraError::ZeroVector.into());
    }
    let mut orbit = Vec::with_capacity(steps as usize + 1);
    orbit.push(q0.clone());
    for i in 0..steps as usize {
        let next = l.apply(&orbit[i])?;
        orbit.push(next);
    }
    orbit
        .par_iter()
        .enumerate()
        .map(|(n, q)| {
            let (start, word) = letter_word(q)?;
            Ok(ExpectationSample {
                n: n as u64,
                word_start: start,
                abs_expectation: evaluator.evaluate(&word).norm(),
            })
        })
        .collect()
}
