use num_complex::Complex64;

use super::beta::{digit, local_mul, BetaTensor};
use super::state::OneSiteMoments;
use crate::error::Error;
use crate::pauli::PauliLetter;

/// Weighted automaton on the bond space `A ⊗ A` of a supersite algebra `A`.
///
/// A bond basis vector `e_i ⊗ e_j` holds the partial operator `e_i` on the
/// supersite about to be closed and `e_j` on the current one. Reading the
/// letter `a` multiplies the left neighbour by the `b` part of `β(e_a)` and
/// evaluates it, multiplies the current supersite by the `c` part, and opens
/// the next supersite with the `d` part:
/// `M^{kl}_{a,ij} = Σ_{b,c} ω(e_i e_b) · [e_j e_c]_k · β^{bcl}_a`.
#[derive(Clone, Debug)]
pub struct AutomatonData {
    qubits: usize,
    local_dim: usize,
    /// One row-major `(n²)×(n²)` matrix per letter; row `(k, l)`, column `(i, j)`.
    transitions: Vec<Vec<Complex64>>,
    gamma: Vec<Complex64>,
    /// All nontrivial moments vanish: the state is the trace, which every
    /// automorphism preserves, so nontrivial words give exactly 0.
    tracial: bool,
}

/// `ω(e_a)` on a supersite with uniform one-qubit moments.
fn supersite_moment(m: &OneSiteMoments, a: usize, qubits: usize) -> f64 {
    (0..qubits).map(|t| m.get(digit(a, t, qubits))).product()
}

pub fn build_automaton(m: &OneSiteMoments, beta: &BetaTensor) -> Result<AutomatonData, Error> {
    let q = beta.supersite_qubits();
    let n = beta.local_dim();
    if n != 1 << (2 * q) {
        return Err(Error::Numerics("inconsistent supersite dimensions".into()));
    }
    let bond = n * n;
    let omega: Vec<f64> = (0..n).map(|a| supersite_moment(m, a, q)).collect();
    let products: Vec<Vec<(Complex64, usize)>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (ph, z) = local_mul(x, y, q);
                    (ph.to_complex(), z)
                })
                .collect()
        })
        .collect();

    let mut transitions = Vec::with_capacity(n);
    for a in 0..n {
        let mut mat = vec![Complex64::new(0.0, 0.0); bond * bond];
        for b in 0..n {
            for c in 0..n {
                for l in 0..n {
                    let coeff = beta.get(a, b, c, l);
                    if coeff.norm_sqr() == 0.0 {
                        continue;
                    }
                    for i in 0..n {
                        let (ph_left, d) = products[i][b];
                        let left = ph_left * omega[d] * coeff;
                        if left.norm_sqr() == 0.0 {
                            continue;
                        }
                        for j in 0..n {
                            let (ph_mid, k) = products[j][c];
                            mat[(k * n + l) * bond + i * n + j] += left * ph_mid;
                        }
                    }
                }
            }
        }
        transitions.push(mat);
    }
    let gamma = (0..bond)
        .map(|ij| Complex64::new(omega[ij / n] * omega[ij % n], 0.0))
        .collect();
    Ok(AutomatonData {
        qubits: q,
        local_dim: n,
        transitions,
        gamma,
        tracial: omega[1..].iter().all(|&w| w == 0.0),
    })
}

impl AutomatonData {
    pub fn bond_dim(&self) -> usize {
        self.local_dim * self.local_dim
    }

    pub fn supersite_qubits(&self) -> usize {
        self.qubits
    }

    /// `γ M_{a_K} ⋯ M_{a_1} (e_1 ⊗ e_1)` for supersite letters `a_i`.
    pub fn evaluate_supersites(&self, word: &[usize]) -> Complex64 {
        if self.tracial {
            let trivial = word.iter().all(|&a| a == 0);
            return Complex64::new(if trivial { 1.0 } else { 0.0 }, 0.0);
        }
        let bond = self.bond_dim();
        let mut v = vec![Complex64::new(0.0, 0.0); bond];
        v[0] = Complex64::new(1.0, 0.0);
        let mut next = vec![Complex64::new(0.0, 0.0); bond];
        for &a in word {
            let m = &self.transitions[a];
            for (row, slot) in next.iter_mut().enumerate() {
                let r = &m[row * bond..(row + 1) * bond];
                *slot = r.iter().zip(&v).map(|(x, y)| x * y).sum();
            }
            std::mem::swap(&mut v, &mut next);
        }
        self.gamma.iter().zip(&v).map(|(g, x)| g * x).sum()
    }

    /// Evaluates a word of one-qubit letters on consecutive sites, grouping
    /// them into supersites and padding the tail with identities.
    pub fn evaluate(&self, word: &[PauliLetter]) -> Complex64 {
        let q = self.qubits;
        let supers: Vec<usize> = word
            .chunks(q)
            .map(|chunk| {
                (0..q).fold(0usize, |acc, t| {
                    (acc << 2) | chunk.get(t).map_or(0, |l| l.index())
                })
            })
            .collect();
        self.evaluate_supersites(&supers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expectation::{beta_coefficients, moments_from_bloch, BetaSpec, ProductStateParams};
    use PauliLetter::*;

    fn moments(p: f64) -> OneSiteMoments {
        moments_from_bloch(&ProductStateParams::new(p, 30.0, 45.0).unwrap())
    }

    #[test]
    fn trivial_beta_factorizes() {
        let m = moments(0.1);
        let a = build_automaton(&m, &BetaTensor::identity(1)).unwrap();
        assert_eq!(a.evaluate(&[]), Complex64::new(1.0, 0.0));
        let word = [X, Z, I, Y, Y];
        let expected: f64 = word.iter().map(|&l| m.get(l)).product();
        assert!((a.evaluate(&word) - Complex64::new(expected, 0.0)).norm() < 1e-14);
        let mixed = build_automaton(&moments(0.5), &BetaTensor::identity(1)).unwrap();
        assert_eq!(mixed.evaluate(&[X]).norm(), 0.0);
    }

    #[test]
    fn identity_words_and_mixed_state() {
        let beta = beta_coefficients(&BetaSpec::xx(0.9, 1).unwrap()).unwrap();
        let a = build_automaton(&moments(0.2), &beta).unwrap();
        assert!((a.evaluate(&[I, I, I]) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let mixed = build_automaton(&moments(0.5), &beta).unwrap();
        assert!(mixed.evaluate(&[Z, I, Y]).norm() < 1e-14);
    }
}
