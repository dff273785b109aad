use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::cursor::Cursor;
use crate::error::{Error, ParseError};
use crate::pauli::{CMatrix, PauliLetter};

/// One-qubit density matrix with eigenvalues `p` and `1 − p`, the larger one
/// on the Bloch direction `(θ, φ)` given in degrees.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProductStateParams {
    pub p: f64,
    pub theta_deg: f64,
    pub phi_deg: f64,
}

impl ProductStateParams {
    pub fn new(p: f64, theta_deg: f64, phi_deg: f64) -> Result<Self, Error> {
        if !(0.0..=0.5).contains(&p) {
            return Err(Error::Numerics(format!("p = {p} outside [0, 0.5]")));
        }
        if !theta_deg.is_finite() || !phi_deg.is_finite() {
            return Err(Error::Numerics("Bloch angles must be finite".into()));
        }
        Ok(ProductStateParams { p, theta_deg, phi_deg })
    }

    /// `p=0.1,theta=30,phi=45`; angles default to 0.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let fields = parse_fields(text, &["p", "theta", "phi"])?;
        let p = *fields
            .get("p")
            .ok_or_else(|| ParseError::new(0, "missing key 'p'"))?;
        Self::new(
            p,
            fields.get("theta").copied().unwrap_or(0.0),
            fields.get("phi").copied().unwrap_or(0.0),
        )
    }
}

/// `key=value` pairs separated by commas, every value a number.
pub(crate) fn parse_fields(text: &str, allowed: &[&str]) -> Result<BTreeMap<String, f64>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = BTreeMap::new();
    loop {
        let key_pos = {
            cur.skip_ws();
            cur.pos
        };
        let key = cur.ident().ok_or_else(|| cur.error("expected a key"))?;
        if !allowed.contains(&key) {
            return Err(ParseError::new(
                key_pos,
                format!("unknown key '{key}', expected one of {}", allowed.join(", ")),
            ));
        }
        if !cur.eat(b'=') {
            return Err(cur.error("expected '='"));
        }
        let value = cur.float()?;
        if out.insert(key.to_string(), value).is_some() {
            return Err(ParseError::new(key_pos, format!("duplicate key '{key}'")));
        }
        if cur.at_end() {
            return Ok(out);
        }
        if !cur.eat(b',') {
            return Err(cur.error("expected ',' or end of input"));
        }
    }
}

/// `ω_a = tr(ρ e_a)` for `a = I, X, Y, Z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OneSiteMoments {
    pub values: [f64; 4],
}

impl OneSiteMoments {
    pub fn get(&self, letter: PauliLetter) -> f64 {
        self.values[letter.index()]
    }

    /// `ρ = (I + ω_X X + ω_Y Y + ω_Z Z) / 2`.
    pub fn density_matrix(&self) -> CMatrix {
        let mut rho = CMatrix::zeros(2);
        for letter in PauliLetter::ALL {
            let m = letter.matrix();
            let w = Complex64::new(self.get(letter) / 2.0, 0.0);
            for (r, row) in m.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    rho.set(r, c, rho.get(r, c) + w * v);
                }
            }
        }
        rho
    }
}

pub fn moments_from_bloch(s: &ProductStateParams) -> OneSiteMoments {
    let r = 1.0 - 2.0 * s.p;
    let (theta, phi) = (s.theta_deg.to_radians(), s.phi_deg.to_radians());
    OneSiteMoments {
        values: [
            1.0,
            r * theta.sin() * phi.cos(),
            r * theta.sin() * phi.sin(),
            r * theta.cos(),
        ],
    }
}

/// `max |ω(P)|` over nontrivial on-site monomials.
pub fn lambda_of_state(m: &OneSiteMoments) -> f64 {
    m.values[1..].iter().map(|v| v.abs()).fold(0.0, f64::max)
}

fn ball_volume(range: u32, dim: u32) -> Option<u32> {
    (2 * range + 1).checked_pow(dim)
}

/// `2^{N·V²}` with `V = (2R + 1)^d` the number of sites within sup-distance `R`.
pub fn c_beta(qubits_per_cell: u32, range: u32, dim: u32) -> f64 {
    match ball_volume(range, dim) {
        Some(v) => 2f64.powf(qubits_per_cell as f64 * (v as f64).powi(2)),
        None => f64::INFINITY,
    }
}

/// Whether `λ · C_β < 1`; decided in log space so huge `C_β` cannot overflow.
pub fn thermalization_certificate(m: &OneSiteMoments, qubits_per_cell: u32, range: u32, dim: u32) -> bool {
    certificate_holds(lambda_of_state(m), qubits_per_cell, range, dim)
}

pub fn certificate_holds(lambda: f64, qubits_per_cell: u32, range: u32, dim: u32) -> bool {
    if lambda == 0.0 {
        return true;
    }
    let Some(v) = ball_volume(range, dim) else {
        return false;
    };
    lambda.log2() + qubits_per_cell as f64 * (v as f64).powi(2) < 0.0
}
