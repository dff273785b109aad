use num_complex::Complex64;

use super::{PauliLetter, PauliMonomial};
use crate::error::{AlgebraError, Result};

/// Largest number of qubits [`dense_matrix`] will realize.
pub const DENSE_MAX_QUBITS: usize = 14;

/// A square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            m.data[i * n..(i + 1) * n].copy_from_slice(row);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.n + c] = v;
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let n = self.n * other.n;
        let mut out = Self::zeros(n);
        for (i, j) in (0..self.n).flat_map(|i| (0..self.n).map(move |j| (i, j))) {
            let a = self.get(i, j);
            for (k, l) in (0..other.n).flat_map(|k| (0..other.n).map(move |l| (k, l))) {
                out.set(i * other.n + k, j * other.n + l, a * other.get(k, l));
            }
        }
        out
    }

    pub fn adjoint(&self) -> CMatrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    /// Largest entrywise distance.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Kronecker realization of `P` on sites `first..first + sites` with
/// `qubits_per_cell` qubits each; the first qubit is the most significant
/// tensor factor. One-dimensional lattices only.
pub fn dense_matrix(
    p: &PauliMonomial,
    first: i64,
    sites: usize,
    qubits_per_cell: usize,
) -> Result<CMatrix> {
    let qubits = sites
        .checked_mul(qubits_per_cell)
        .filter(|&q| q <= DENSE_MAX_QUBITS)
        .ok_or_else(|| {
            AlgebraError::CostCap(format!(
                "{sites} sites of {qubits_per_cell} qubits exceed {DENSE_MAX_QUBITS} qubits"
            ))
        })?;
    let mut letters = vec![PauliLetter::I; qubits];
    for ((site, mu), letter) in p.letters() {
        let [s] = site.components() else {
            return Err(AlgebraError::DimensionMismatch { left: 1, right: site.dim() });
        };
        let offset = s
            .checked_sub(first)
            .filter(|&o| o >= 0 && (o as usize) < sites && *mu < qubits_per_cell)
            .ok_or_else(|| {
                AlgebraError::InvalidArgument(format!("{p} is not supported inside the window"))
            })?;
        letters[offset as usize * qubits_per_cell + mu] = letter;
    }
    let dim = 1usize << qubits;
    let mut x_mask = 0usize;
    for (q, l) in letters.iter().enumerate() {
        if l.bits().0 {
            x_mask |= 1 << (qubits - 1 - q);
        }
    }
    let phase = p.phase().to_complex();
    let mut out = CMatrix::zeros(dim);
    for col in 0..dim {
        let row = col ^ x_mask;
        let mut v = phase;
        for (q, l) in letters.iter().enumerate() {
            let shift = qubits - 1 - q;
            v *= l.matrix()[(row >> shift) & 1][(col >> shift) & 1];
        }
        out.set(row, col, v);
    }
    Ok(out)
}
