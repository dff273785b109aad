//! Closed-form classification of `L = [[0, 1], [1, t]]` with palindromic `t`.
//!
//! Powers are `Lⁿ = [[b_{n−1}, b_n], [b_n, b_{n+1}]]` with `b₀ = 0`, `b₁ = 1`,
//! `b_{n+1} = t·b_n + b_{n−1}`, so `det(Lⁿ − 1) = b_{n−1} + b_{n+1}`.
//! The family is mixing exactly when `t` is not constant, and has a soliton
//! exactly when `t = uᵐ + u⁻ᵐ`, in which case `(1, uᵐ)` is a glider.

use super::{ClassifierReport, PeriodicityCertificate, SolitonWitness, Verdict};
use crate::error::{AlgebraError, Result};
use crate::fpoly::{Exponent, LaurentPoly};
use crate::symplectic::{ModuleVector, PolyMatrix};

/// `b₀, …, bₙ`.
pub fn b_sequence(t: &LaurentPoly, n: usize) -> Result<Vec<LaurentPoly>> {
    let dim = t.dim();
    let mut seq = vec![LaurentPoly::zero(dim)];
    if n >= 1 {
        seq.push(LaurentPoly::one(dim));
    }
    while seq.len() <= n {
        let len = seq.len();
        let next = t.mul(&seq[len - 1])?.add(&seq[len - 2])?;
        seq.push(next);
    }
    Ok(seq)
}

/// Exact verdict for the palindromic family.
pub fn classify_palindromic(t: &LaurentPoly) -> Result<ClassifierReport> {
    if t.dim() != 1 {
        return Err(AlgebraError::DimensionMismatch { left: 1, right: t.dim() });
    }
    if !t.is_palindromic() {
        return Err(AlgebraError::InvalidArgument(format!(
            "t = {t} is not palindromic, so [[0,1],[1,t]] is not pseudo-unitary"
        )));
    }
    let exps = t.exponents_1d();
    if exps.len() <= 1 && exps.iter().all(|&e| e == 0) {
        // t ∈ {0, 1}: the b-sequence is periodic with period dividing 6
        let b = b_sequence(t, 8)?;
        let n = (1..=6)
            .find(|&n| b[n - 1] == b[n + 1])
            .expect("constant t gives a periodic power");
        return Ok(ClassifierReport {
            verdict: Verdict::Periodic,
            horizon: None,
            exact: true,
            witness: None,
            certificate: Some(PeriodicityCertificate { n: n as u64 }),
        });
    }
    if let [lo, hi] = exps[..] {
        if lo == -hi && hi > 0 {
            let l = PolyMatrix::palindromic_family(t);
            let q = ModuleVector::new(vec![LaurentPoly::one(1), LaurentPoly::mono(hi)])?;
            let witness = SolitonWitness::new(&l, 1, Exponent::from(hi), q)?;
            return Ok(ClassifierReport {
                verdict: Verdict::Glider,
                horizon: None,
                exact: true,
                witness: Some(witness),
                certificate: None,
            });
        }
    }
    Ok(ClassifierReport {
        verdict: Verdict::FractalLike,
        horizon: None,
        exact: true,
        witness: None,
        certificate: None,
    })
}
