//! Matrices and vectors over the Laurent ring `R = F₂[u^±1]`.
//!
//! A Clifford QCA with `N` qubits per cell is a pseudo-unitary `2N × 2N`
//! matrix; module vectors hold the X-parts in entries `0..N` and the Z-parts
//! in entries `N..2N`. Signs are never tracked here.

mod determinant;

use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::fpoly::{check_dims, format_poly, Exponent, LaurentPoly};

pub use determinant::determinant;

/// An element `q ∈ M = R^{k}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct ModuleVector {
    entries: Vec<LaurentPoly>,
}

impl ModuleVector {
    pub fn new(entries: Vec<LaurentPoly>) -> Result<Self> {
        if let Some(first) = entries.first() {
            for e in &entries[1..] {
                check_dims(first.dim(), e.dim())?;
            }
        }
        Ok(ModuleVector { entries })
    }

    pub fn zero(size: usize, dim: usize) -> Self {
        ModuleVector {
            entries: vec![LaurentPoly::zero(dim); size],
        }
    }

    /// `u^k` in entry `index`, zero elsewhere.
    pub fn unit(size: usize, index: usize, k: Exponent) -> Self {
        let dim = k.dim();
        let mut v = Self::zero(size, dim);
        v.entries[index] = LaurentPoly::monomial(k);
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Variable count of the underlying ring; 1 for an empty vector.
    pub fn dim(&self) -> usize {
        self.entries.first().map_or(1, LaurentPoly::dim)
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &LaurentPoly {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    /// `Σ weight(entryᵢ)`, the Hamming weight `|q|`.
    pub fn total_weight(&self) -> usize {
        self.entries.iter().map(LaurentPoly::weight).sum()
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        check_len(self.len(), other.len())?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(ModuleVector { entries })
    }

    pub fn scale(&self, r: &LaurentPoly) -> Result<ModuleVector> {
        let entries = self.entries.iter().map(|e| r.mul(e)).collect::<Result<_>>()?;
        Ok(ModuleVector { entries })
    }

    pub fn shift(&self, k: &Exponent) -> Result<ModuleVector> {
        let entries = self.entries.iter().map(|e| e.shift(k)).collect::<Result<_>>()?;
        Ok(ModuleVector { entries })
    }

    pub fn involute(&self) -> Result<ModuleVector> {
        let entries = self.entries.iter().map(LaurentPoly::involute).collect::<Result<_>>()?;
        Ok(ModuleVector { entries })
    }

    /// Distinct exponents (lattice sites) occurring in any entry, sorted.
    pub fn support(&self) -> Vec<Exponent> {
        let mut sites: Vec<Exponent> = self.entries.iter().flat_map(|e| e.terms()).collect();
        sites.sort_unstable();
        sites.dedup();
        sites
    }

    /// Per-variable `(min, max)` over all entries; `None` for the zero vector.
    pub fn extremes(&self) -> Option<Vec<(i64, i64)>> {
        let mut acc: Option<Vec<(i64, i64)>> = None;
        for e in &self.entries {
            if let Ok(ext) = e.deg_extremes() {
                acc = Some(match acc {
                    None => ext,
                    Some(a) => a
                        .iter()
                        .zip(&ext)
                        .map(|(x, y)| (x.0.min(y.0), x.1.max(y.1)))
                        .collect(),
                });
            }
        }
        acc
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_poly(e))?;
        }
        write!(f, ")")
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgebraError::SizeMismatch { expected, found })
    }
}

/// A square matrix over `R`, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyMatrix {
    size: usize,
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(AlgebraError::InvalidArgument("empty matrix".into()));
        }
        let dim = rows[0]
            .first()
            .map(LaurentPoly::dim)
            .ok_or_else(|| AlgebraError::InvalidArgument("empty matrix row".into()))?;
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            check_len(size, row.len())?;
            for e in row {
                check_dims(dim, e.dim())?;
                entries.push(e);
            }
        }
        Ok(PolyMatrix { size, dim, entries })
    }

    pub fn identity(size: usize, dim: usize) -> Self {
        Self::scalar(size, &LaurentPoly::one(dim))
    }

    pub fn zero(size: usize, dim: usize) -> Self {
        PolyMatrix {
            size,
            dim,
            entries: vec![LaurentPoly::zero(dim); size * size],
        }
    }

    /// `r · 1_size`.
    pub fn scalar(size: usize, r: &LaurentPoly) -> Self {
        let mut m = Self::zero(size, r.dim());
        for i in 0..size {
            m.entries[i * size + i] = r.clone();
        }
        m
    }

    /// The 2×2 family `[[0, 1], [1, t]]`.
    pub fn palindromic_family(t: &LaurentPoly) -> Self {
        let dim = t.dim();
        PolyMatrix {
            size: 2,
            dim,
            entries: vec![
                LaurentPoly::zero(dim),
                LaurentPoly::one(dim),
                LaurentPoly::one(dim),
                t.clone(),
            ],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) -> Result<()> {
        check_dims(self.dim, value.dim())?;
        self.entries[row * self.size + col] = value;
        Ok(())
    }

    pub fn rows(&self) -> impl Iterator<Item = &[LaurentPoly]> {
        self.entries.chunks(self.size)
    }

    pub fn column(&self, col: usize) -> ModuleVector {
        ModuleVector {
            entries: (0..self.size).map(|r| self.get(r, col).clone()).collect(),
        }
    }

    /// Largest absolute exponent of each variable over all entries (the per-step reach).
    pub fn reach(&self) -> Vec<u64> {
        let mut reach = vec![0u64; self.dim];
        for e in &self.entries {
            for (slot, r) in reach.iter_mut().zip(e.max_abs_exponents()) {
                *slot = (*slot).max(r);
            }
        }
        reach
    }

    /// Total number of monomials over all entries.
    pub fn total_weight(&self) -> usize {
        self.entries.iter().map(LaurentPoly::weight).sum()
    }

    /// `q ↦ M q`.
    pub fn apply(&self, q: &ModuleVector) -> Result<ModuleVector> {
        check_len(self.size, q.len())?;
        check_dims(self.dim, q.dim())?;
        let mut out = Vec::with_capacity(self.size);
        for row in self.rows() {
            let mut acc = LaurentPoly::zero(self.dim);
            for (a, x) in row.iter().zip(&q.entries) {
                if !a.is_zero() && !x.is_zero() {
                    acc = acc.add(&a.mul(x)?)?;
                }
            }
            out.push(acc);
        }
        Ok(ModuleVector { entries: out })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_len(self.size, other.size)?;
        check_dims(self.dim, other.dim)?;
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero(self.dim);
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b)?)?;
                    }
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            size: n,
            dim: self.dim,
            entries,
        })
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_len(self.size, other.size)?;
        check_dims(self.dim, other.dim)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(PolyMatrix {
            size: self.size,
            dim: self.dim,
            entries,
        })
    }

    /// `M - r·1` (which in characteristic 2 is `M + r·1`).
    pub fn minus_scalar(&self, r: &LaurentPoly) -> Result<PolyMatrix> {
        check_dims(self.dim, r.dim())?;
        let mut out = self.clone();
        for i in 0..self.size {
            let idx = i * self.size + i;
            out.entries[idx] = out.entries[idx].add(r)?;
        }
        Ok(out)
    }

    /// Binary powering; `pow(0)` is the identity.
    pub fn pow(&self, mut n: u64) -> Result<PolyMatrix> {
        let mut acc = PolyMatrix::identity(self.size, self.dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `L, L², L³, …` by repeated multiplication.
    pub fn powers(&self) -> Powers<'_> {
        Powers {
            base: self,
            current: None,
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        PolyMatrix {
            size: n,
            dim: self.dim,
            entries,
        }
    }

    /// Entrywise `r ↦ r̄`.
    pub fn involute(&self) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(LaurentPoly::involute).collect::<Result<_>>()?;
        Ok(PolyMatrix {
            size: self.size,
            dim: self.dim,
            entries,
        })
    }

    pub fn determinant(&self) -> Result<LaurentPoly> {
        determinant(self)
    }

    /// The matrix with row `skip_row` and column `skip_col` removed.
    pub fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let n = self.size;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != skip_row) {
            for j in (0..n).filter(|&j| j != skip_col) {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            size: n - 1,
            dim: self.dim,
            entries,
        }
    }

    /// Classical adjugate; signs vanish in characteristic 2.
    pub fn adjugate(&self) -> Result<PolyMatrix> {
        let n = self.size;
        if n == 1 {
            return Ok(PolyMatrix::identity(1, self.dim));
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                // adj[i][j] = cofactor of (j, i)
                entries.push(determinant(&self.minor(j, i))?);
            }
        }
        Ok(PolyMatrix {
            size: n,
            dim: self.dim,
            entries,
        })
    }

    /// Inverse of a matrix whose determinant is a monomial `u^k`.
    pub fn inverse_unit(&self) -> Result<PolyMatrix> {
        let det = self.determinant()?;
        let k = det
            .as_monomial()
            .ok_or_else(|| AlgebraError::NotInvertible(format_poly(&det)))?;
        let shift = k.checked_neg()?;
        let adj = self.adjugate()?;
        let entries = adj.entries.iter().map(|e| e.shift(&shift)).collect::<Result<_>>()?;
        Ok(PolyMatrix {
            size: self.size,
            dim: self.dim,
            entries,
        })
    }

    /// True iff `M̄ᵀ ω M = ω`.
    pub fn is_pseudo_unitary(&self) -> bool {
        if !self.size.is_multiple_of(2) {
            return false;
        }
        let omega = symplectic_form(self.size / 2, self.dim);
        let check = || -> Result<bool> {
            let lhs = self.involute()?.transpose().mul(&omega)?.mul(self)?;
            Ok(lhs == omega)
        };
        check().unwrap_or(false)
    }

    /// `blockdiag(A(u), (A(u⁻¹)ᵀ)⁻¹)`, a pseudo-unitary matrix of twice the size.
    pub fn double(&self) -> Result<PolyMatrix> {
        let inv_dual = self.involute()?.transpose().inverse_unit()?;
        let k = self.size;
        let mut out = PolyMatrix::zero(2 * k, self.dim);
        for i in 0..k {
            for j in 0..k {
                out.entries[i * 2 * k + j] = self.get(i, j).clone();
                out.entries[(i + k) * 2 * k + (j + k)] = inv_dual.get(i, j).clone();
            }
        }
        Ok(out)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_poly(e))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Iterator over successive powers `L^1, L^2, …`.
pub struct Powers<'a> {
    base: &'a PolyMatrix,
    current: Option<PolyMatrix>,
}

impl Iterator for Powers<'_> {
    type Item = Result<PolyMatrix>;

    fn next(&mut self) -> Option<Self::Item> {
        let next = match &self.current {
            None => Ok(self.base.clone()),
            Some(m) => m.mul(self.base),
        };
        match next {
            Ok(m) => {
                self.current = Some(m.clone());
                Some(Ok(m))
            }
            Err(e) => Some(Err(e)),
        }
    }
}

/// The block-antidiagonal form `ω = [[0, 1_N], [1_N, 0]]`.
pub fn symplectic_form(n: usize, dim: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zero(2 * n, dim);
    for i in 0..n {
        m.entries[i * 2 * n + (i + n)] = LaurentPoly::one(dim);
        m.entries[(i + n) * 2 * n + i] = LaurentPoly::one(dim);
    }
    m
}

/// `Ω(q, q′) = Σ ω^{ab} q̄_a q′_b`.
pub fn omega_form(q: &ModuleVector, q_prime: &ModuleVector) -> Result<LaurentPoly> {
    check_len(q.len(), q_prime.len())?;
    if !q.len().is_multiple_of(2) {
        return Err(AlgebraError::OddSize(q.len()));
    }
    check_dims(q.dim(), q_prime.dim())?;
    let n = q.len() / 2;
    let mut acc = LaurentPoly::zero(q.dim());
    for mu in 0..n {
        let x_z = q.entry(mu).involute()?.mul(q_prime.entry(mu + n))?;
        let z_x = q.entry(mu + n).involute()?.mul(q_prime.entry(mu))?;
        acc = acc.add(&x_z)?.add(&z_x)?;
    }
    Ok(acc)
}
