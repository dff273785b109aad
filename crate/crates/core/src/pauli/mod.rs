//! One-qubit Pauli algebra and finitely supported Pauli monomials.
//!
//! A module vector `q = (x_1, …, x_N, z_1, …, z_N)` encodes the monomial
//! `∏ X^{x-bit} Z^{z-bit}`, X written before Z at every qubit. The bit pair
//! `(1, 1)` is therefore `XZ = −iY`, stored as the letter `Y` with phase `−i`.

mod dense;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{AlgebraError, Result};
use crate::fpoly::{Exponent, LaurentPoly};
use crate::symplectic::ModuleVector;

pub use dense::{dense_matrix, CMatrix, DENSE_MAX_QUBITS};
pub use text::parse_pauli;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    /// Position in the basis `e₀ = I, e₁ = X, e₂ = Y, e₃ = Z`.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(a: usize) -> Option<Self> {
        Self::ALL.get(a).copied()
    }

    /// `(x, z)` bits; `Y` is `(1, 1)`.
    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    pub fn matrix(self) -> [[Complex64; 2]; 2] {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match self {
            PauliLetter::I => [[l, o], [o, l]],
            PauliLetter::X => [[o, l], [l, o]],
            PauliLetter::Y => [[o, -i], [i, o]],
            PauliLetter::Z => [[l, o], [o, -l]],
        }
    }

    pub fn symbol(self) -> char {
        ['I', 'X', 'Y', 'Z'][self.index()]
    }

    /// `self · other = phase · letter`.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: PauliLetter) -> (Phase, PauliLetter) {
        use PauliLetter::*;
        let phase = match (self, other) {
            (X, Y) | (Y, Z) | (Z, X) => Phase::I,
            (Y, X) | (Z, Y) | (X, Z) => Phase::MINUS_I,
            _ => Phase::ONE,
        };
        let (ax, az) = self.bits();
        let (bx, bz) = other.bits();
        (phase, PauliLetter::from_bits(ax ^ bx, az ^ bz))
    }
}

/// `iᵏ` for `k ∈ {0, 1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn power_of_i(self) -> u8 {
        self.0
    }

    pub fn from_power_of_i(k: u8) -> Self {
        Phase(k % 4)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn to_complex(self) -> Complex64 {
        [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -1.0),
        ][self.0 as usize]
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["+1", "+i", "-1", "-i"][self.0 as usize])
    }
}

/// Structure constants `f^a_{bc}` with `e_b e_c = Σ_a f^a_{bc} e_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTable {
    f: [[[Complex64; 4]; 4]; 4],
}

impl StructureTable {
    pub fn new() -> Self {
        let mut f = [[[Complex64::new(0.0, 0.0); 4]; 4]; 4];
        for b in PauliLetter::ALL {
            for c in PauliLetter::ALL {
                let (phase, a) = b.mul(c);
                f[a.index()][b.index()][c.index()] = phase.to_complex();
            }
        }
        StructureTable { f }
    }

    /// `f^a_{bc}`.
    pub fn get(&self, a: usize, b: usize, c: usize) -> Complex64 {
        self.f[a][b][c]
    }
}

impl Default for StructureTable {
    fn default() -> Self {
        Self::new()
    }
}

/// A lattice site and the qubit `μ` inside its cell.
pub type Qubit = (Exponent, usize);

/// `phase · ∏ letters`, identity on every unlisted qubit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PauliMonomial {
    phase: Phase,
    letters: BTreeMap<Qubit, PauliLetter>,
}

impl PauliMonomial {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn single(site: Exponent, mu: usize, letter: PauliLetter) -> Self {
        let mut m = Self::identity();
        if letter != PauliLetter::I {
            m.letters.insert((site, mu), letter);
        }
        m
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    pub fn letter(&self, site: &Exponent, mu: usize) -> PauliLetter {
        self.letters
            .get(&(site.clone(), mu))
            .copied()
            .unwrap_or(PauliLetter::I)
    }

    /// Non-identity letters in site order.
    pub fn letters(&self) -> impl Iterator<Item = (&Qubit, PauliLetter)> {
        self.letters.iter().map(|(k, &v)| (k, v))
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of non-identity qubits.
    pub fn weight(&self) -> usize {
        self.letters.len()
    }

    /// Strips the phase and returns the `(x | z)` encoding.
    pub fn to_vector(&self, qubits_per_cell: usize, dim: usize) -> Result<ModuleVector> {
        let mut terms: Vec<Vec<Exponent>> = vec![Vec::new(); 2 * qubits_per_cell];
        for ((site, mu), letter) in self.letters() {
            if *mu >= qubits_per_cell {
                return Err(AlgebraError::InvalidArgument(format!(
                    "qubit index {mu} outside a cell of {qubits_per_cell}"
                )));
            }
            let (x, z) = letter.bits();
            if x {
                terms[*mu].push(site.clone());
            }
            if z {
                terms[qubits_per_cell + *mu].push(site.clone());
            }
        }
        let entries = terms
            .into_iter()
            .map(|t| LaurentPoly::from_terms(dim, t))
            .collect::<Result<Vec<_>>>()?;
        ModuleVector::new(entries)
    }
}

impl fmt::Display for PauliMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.phase {
            Phase::ONE => {}
            Phase::MINUS_ONE => f.write_str("-")?,
            Phase::I => f.write_str("i*")?,
            _ => f.write_str("-i*")?,
        }
        if self.letters.is_empty() {
            return f.write_str("I");
        }
        for (n, ((site, mu), letter)) in self.letters().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", letter.symbol())?;
            match site.components() {
                [c] => write!(f, "{c}")?,
                cs => {
                    let parts: Vec<String> = cs.iter().map(i64::to_string).collect();
                    write!(f, "({})", parts.join(","))?;
                }
            }
            if *mu > 0 {
                write!(f, "@{mu}")?;
            }
        }
        Ok(())
    }
}

/// Sitewise product with exact phase bookkeeping.
pub fn pauli_mul(p: &PauliMonomial, q: &PauliMonomial) -> PauliMonomial {
    let mut out = p.clone();
    out.phase = p.phase.mul(q.phase);
    for (key, &c) in &q.letters {
        let b = out.letters.get(key).copied().unwrap_or(PauliLetter::I);
        let (phase, a) = b.mul(c);
        out.phase = out.phase.mul(phase);
        if a == PauliLetter::I {
            out.letters.remove(key);
        } else {
            out.letters.insert(key.clone(), a);
        }
    }
    out
}

/// `∏ X^{x}Z^{z}` per qubit, X first; `(1, 1)` contributes `Y` with phase `−i`.
pub fn vec_to_pauli(q: &ModuleVector) -> Result<PauliMonomial> {
    if !q.len().is_multiple_of(2) {
        return Err(AlgebraError::OddSize(q.len()));
    }
    let n = q.len() / 2;
    let mut out = PauliMonomial::identity();
    for mu in 0..n {
        let xs = q.entry(mu).terms();
        let zs = q.entry(n + mu).terms();
        let mut bits: BTreeMap<Exponent, (bool, bool)> = BTreeMap::new();
        for s in xs {
            bits.entry(s).or_default().0 = true;
        }
        for s in zs {
            bits.entry(s).or_default().1 = true;
        }
        for (site, (x, z)) in bits {
            let letter = PauliLetter::from_bits(x, z);
            if letter == PauliLetter::Y {
                out.phase = out.phase.mul(Phase::MINUS_I);
            }
            out.letters.insert((site, mu), letter);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpoly::parse_poly;
    use PauliLetter::*;

    fn at(site: i64, letter: PauliLetter) -> PauliMonomial {
        PauliMonomial::single(Exponent::from(site), 0, letter)
    }

    #[test]
    fn letter_products() {
        assert_eq!(X.mul(Z), (Phase::MINUS_I, Y));
        assert_eq!(X.mul(X), (Phase::ONE, I));
        assert_eq!(Z.mul(X), (Phase::I, Y));
        assert_eq!(X.mul(Y), (Phase::I, Z));
    }

    #[test]
    fn table_invariants() {
        let t = StructureTable::new();
        for b in 0..4 {
            for c in 0..4 {
                let nonzero: Vec<usize> = (0..4).filter(|&a| t.get(a, b, c).norm() > 0.0).collect();
                assert_eq!(nonzero.len(), 1);
                assert!((t.get(nonzero[0], b, c).norm() - 1.0).abs() < 1e-15);
            }
            assert_eq!(t.get(b, 0, b), Complex64::new(1.0, 0.0));
            assert_eq!(t.get(b, b, 0), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn monomial_products() {
        let xz = pauli_mul(&at(0, X), &at(1, Z));
        let zx = pauli_mul(&at(0, Z), &at(1, X));
        let prod = pauli_mul(&xz, &zx);
        assert_eq!(prod.phase(), Phase::ONE);
        assert_eq!(prod.letter(&Exponent::from(0), 0), Y);
        assert_eq!(prod.letter(&Exponent::from(1), 0), Y);
        assert_eq!(pauli_mul(&at(0, X), &at(0, X)), PauliMonomial::identity());
    }

    #[test]
    fn encoding() {
        let v = |x: &str, z: &str| {
            ModuleVector::new(vec![parse_poly(x, 1).unwrap(), parse_poly(z, 1).unwrap()]).unwrap()
        };
        assert_eq!(vec_to_pauli(&v("1", "0")).unwrap(), at(0, X));
        let y = vec_to_pauli(&v("1", "1")).unwrap();
        assert_eq!(y, at(0, Y).with_phase(Phase::MINUS_I));
        let img = vec_to_pauli(&v("1", "u + 1 + u^-1")).unwrap();
        assert_eq!(img.to_string(), "-i*Z-1*Y0*Z1");
        assert_eq!(img.to_vector(1, 1).unwrap(), v("1", "u + 1 + u^-1"));
        assert_eq!(vec_to_pauli(&v("0", "0")).unwrap(), PauliMonomial::identity());
    }
}
