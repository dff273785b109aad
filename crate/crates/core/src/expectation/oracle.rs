use num_complex::Complex64;

use super::beta::BetaSpec;
use super::state::OneSiteMoments;
use crate::error::Error;
use crate::fpoly::Exponent;
use crate::pauli::{dense_matrix, pauli_mul, PauliLetter, PauliMonomial, DENSE_MAX_QUBITS};

/// `tr(ρ^{⊗W} · U P U†)` computed with explicit `2^W × 2^W` matrices on the
/// window of the word padded by `R` sites each side.
///
/// Every gate `exp(i g X_p X_{p+R})` that touches the word is applied; the
/// rest commute with `P` and cancel.
pub fn dense_oracle(word: &[PauliLetter], m: &OneSiteMoments, beta: &BetaSpec) -> Result<Complex64, Error> {
    let r = beta.range as usize;
    let k = word.len();
    let qubits = k + 2 * r;
    if qubits > DENSE_MAX_QUBITS {
        return Err(Error::Numerics(format!(
            "dense window of {qubits} qubits exceeds {DENSE_MAX_QUBITS}"
        )));
    }
    let p = word.iter().enumerate().fold(PauliMonomial::identity(), |acc, (i, &l)| {
        pauli_mul(&acc, &PauliMonomial::single(Exponent::from((r + i) as i64), 0, l))
    });
    let mut a = dense_matrix(&p, 0, qubits, 1)?;
    let dim = 1usize << qubits;
    let (c, s) = (beta.g.cos(), beta.g.sin());
    let i_cs = Complex64::new(0.0, c * s);
    for first in 0..k + r {
        let mask = (1usize << (qubits - 1 - first)) | (1usize << (qubits - 1 - first - r));
        // G A G† = c²A + ics(XX·A − A·XX) + s²·XX·A·XX with G = c + is·XX
        let mut out = a.clone();
        for row in 0..dim {
            for col in 0..dim {
                let v = c * c * a.get(row, col)
                    + i_cs * (a.get(row ^ mask, col) - a.get(row, col ^ mask))
                    + s * s * a.get(row ^ mask, col ^ mask);
                out.set(row, col, v);
            }
        }
        a = out;
    }
    let rho = m.density_matrix();
    let mut total = Complex64::new(0.0, 0.0);
    for row in 0..dim {
        for col in 0..dim {
            let entry = a.get(row, col);
            if entry.norm_sqr() == 0.0 {
                continue;
            }
            // (ρ^{⊗W})_{col,row}
            let mut w = Complex64::new(1.0, 0.0);
            for t in 0..qubits {
                let shift = qubits - 1 - t;
                w *= rho.get((col >> shift) & 1, (row >> shift) & 1);
            }
            total += w * entry;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expectation::{moments_from_bloch, ProductStateParams};
    use PauliLetter::*;

    #[test]
    fn identity_and_product_cases() {
        let m = moments_from_bloch(&ProductStateParams::new(0.15, 40.0, 10.0).unwrap());
        let b = BetaSpec::xx(0.8, 1).unwrap();
        assert!((dense_oracle(&[I, I], &m, &b).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let free = BetaSpec::xx(0.0, 1).unwrap();
        let word = [Y, X, Z];
        let expected: f64 = word.iter().map(|&l| m.get(l)).product();
        assert!((dense_oracle(&word, &m, &free).unwrap().re - expected).abs() < 1e-12);
        assert!(dense_oracle(&[X; 13], &m, &b).is_err());
    }
}
