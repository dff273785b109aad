use std::f64::consts::TAU;

use num_complex::Complex64;

use super::state::parse_fields;
use crate::error::{Error, ParseError};
use crate::fpoly::Exponent;
use crate::pauli::{dense_matrix, pauli_mul, CMatrix, PauliLetter, PauliMonomial, Phase};

/// Largest supported range; the bond space has dimension `16^R`.
pub const MAX_RANGE: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaKind {
    /// `β = ∏_j Ad exp(i g X_j X_{j+R})`.
    Xx,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BetaSpec {
    pub kind: BetaKind,
    pub g: f64,
    pub range: u32,
}

impl BetaSpec {
    pub fn xx(g: f64, range: u32) -> Result<Self, Error> {
        if !(0.0..TAU).contains(&g) {
            return Err(Error::Numerics(format!("angle g = {g} outside [0, 2π)")));
        }
        if range == 0 || range > MAX_RANGE {
            return Err(Error::Numerics(format!(
                "range R = {range} unsupported; bond dimension 16^R is capped at R = {MAX_RANGE}"
            )));
        }
        Ok(BetaSpec { kind: BetaKind::Xx, g, range })
    }

    /// `xx:g=0.7,R=1`; `R` defaults to 1.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let trimmed = text.trim_start();
        let offset = text.len() - trimmed.len();
        let Some(rest) = trimmed.strip_prefix("xx:") else {
            return Err(ParseError::new(offset, "expected generator kind 'xx:'").into());
        };
        let fields = parse_fields(rest, &["g", "R"]).map_err(|e| {
            ParseError::new(e.position + offset + 3, e.message)
        })?;
        let g = *fields.get("g").ok_or_else(|| ParseError::new(offset, "missing key 'g'"))?;
        let range = fields.get("R").copied().unwrap_or(1.0);
        if range.fract() != 0.0 || !(1.0..=u32::MAX as f64).contains(&range) {
            return Err(Error::Numerics(format!("range R = {range} must be a positive integer")));
        }
        Self::xx(g, range as u32)
    }

    /// Qubits in a supersite of `R` sites, one qubit per site.
    pub fn supersite_qubits(&self) -> usize {
        self.range as usize
    }

    fn gate(&self, a: usize, b: usize, qubits: usize) -> CMatrix {
        let xx = pauli_mul(
            &PauliMonomial::single(Exponent::from(a as i64), 0, PauliLetter::X),
            &PauliMonomial::single(Exponent::from(b as i64), 0, PauliLetter::X),
        );
        let xx = dense_matrix(&xx, 0, qubits, 1).expect("gate window is small");
        let dim = 1 << qubits;
        CMatrix::identity(dim)
            .scale(Complex64::new(self.g.cos(), 0.0))
            .add(&xx.scale(Complex64::new(0.0, self.g.sin())))
    }

    /// Checks that `U_{0,R}` commutes with its overlapping translates.
    pub fn check_commuting_translates(&self) -> Result<(), Error> {
        let r = self.range as usize;
        for s in 1..=r {
            let qubits = r + s + 1;
            let u0 = self.gate(0, r, qubits);
            let us = self.gate(s, s + r, qubits);
            let gap = u0.mul(&us).max_abs_diff(&us.mul(&u0));
            if gap > 1e-12 {
                return Err(Error::Numerics(format!(
                    "two-site unitary fails to commute with its translate by {s} (gap {gap:e})"
                )));
            }
        }
        Ok(())
    }
}

/// Letter `t` of a supersite basis element; the first qubit is the most significant digit.
pub(crate) fn digit(a: usize, t: usize, qubits: usize) -> PauliLetter {
    PauliLetter::from_index((a >> (2 * (qubits - 1 - t))) & 3).expect("two-bit digit")
}

/// `e_a e_b = phase · e_c` on a supersite of `qubits` qubits.
pub(crate) fn local_mul(a: usize, b: usize, qubits: usize) -> (Phase, usize) {
    let mut phase = Phase::ONE;
    let mut c = 0;
    for t in 0..qubits {
        let (ph, letter) = digit(a, t, qubits).mul(digit(b, t, qubits));
        phase = phase.mul(ph);
        c = (c << 2) | letter.index();
    }
    (phase, c)
}

/// `β^{bcd}_a`: the image of a middle-supersite basis element on three supersites.
#[derive(Clone, Debug, PartialEq)]
pub struct BetaTensor {
    qubits: usize,
    data: Vec<Complex64>,
}

impl BetaTensor {
    /// Number of supersite basis elements, `4^Q`.
    pub fn local_dim(&self) -> usize {
        1 << (2 * self.qubits)
    }

    pub fn supersite_qubits(&self) -> usize {
        self.qubits
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> Complex64 {
        let n = self.local_dim();
        self.data[((a * n + b) * n + c) * n + d]
    }

    /// `Σ_{bcd} |β^{bcd}_a|²`.
    pub fn row_norm_sqr(&self, a: usize) -> f64 {
        let n = self.local_dim();
        let block = n * n * n;
        self.data[a * block..(a + 1) * block].iter().map(|v| v.norm_sqr()).sum()
    }

    /// The identity automorphism.
    pub fn identity(qubits: usize) -> Self {
        let n = 1 << (2 * qubits);
        let mut data = vec![Complex64::new(0.0, 0.0); n * n * n * n];
        for a in 0..n {
            data[((a * n) * n + a) * n] = Complex64::new(1.0, 0.0);
        }
        BetaTensor { qubits, data }
    }
}

/// Hilbert–Schmidt projection of `U e_a U†` onto the three-supersite Pauli basis.
pub fn beta_coefficients(spec: &BetaSpec) -> Result<BetaTensor, Error> {
    spec.check_commuting_translates()?;
    let q = spec.supersite_qubits();
    let r = spec.range as usize;
    let window = 3 * q;
    let n = 1usize << (2 * q);
    let dim = 1usize << window;

    // every gate X_p X_{p+R} touching the middle supersite
    let gates: Vec<CMatrix> = (0..window - r)
        .filter(|&p| (q..2 * q).contains(&p) || (q..2 * q).contains(&(p + r)))
        .map(|p| spec.gate(p, p + r, window))
        .collect();

    let triple = |b: usize, c: usize, d: usize| -> Vec<PauliLetter> {
        [b, c, d]
            .into_iter()
            .flat_map(|idx| (0..q).map(move |t| digit(idx, t, q)))
            .collect()
    };

    let mut data = vec![Complex64::new(0.0, 0.0); n * n * n * n];
    for a in 0..n {
        let middle = (0..q).fold(PauliMonomial::identity(), |acc, t| {
            let site = Exponent::from((q + t) as i64);
            pauli_mul(&acc, &PauliMonomial::single(site, 0, digit(a, t, q)))
        });
        let mut image = dense_matrix(&middle, 0, window, 1)?;
        for g in &gates {
            image = g.mul(&image).mul(&g.adjoint());
        }
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let letters = triple(b, c, d);
                    let x_mask = letters.iter().enumerate().fold(0usize, |m, (t, l)| {
                        m | (usize::from(l.bits().0) << (window - 1 - t))
                    });
                    // tr(P† B) / 2^window, P a signed permutation
                    let mut acc = Complex64::new(0.0, 0.0);
                    for col in 0..dim {
                        let row = col ^ x_mask;
                        let mut p = Complex64::new(1.0, 0.0);
                        for (t, l) in letters.iter().enumerate() {
                            let shift = window - 1 - t;
                            p *= l.matrix()[(row >> shift) & 1][(col >> shift) & 1];
                        }
                        acc += p.conj() * image.get(row, col);
                    }
                    data[((a * n + b) * n + c) * n + d] = acc / dim as f64;
                }
            }
        }
    }
    Ok(BetaTensor { qubits: q, data })
}
