//! Laurent polynomials in `d` variables with coefficients in F₂.
//!
//! A polynomial is a finite set of exponent vectors; addition is symmetric
//! difference and multiplication is convolution mod 2. Univariate polynomials
//! whose exponent span fits under [`WINDOW_SPAN_LIMIT`] are stored as a packed
//! bit window, everything else as a sorted exponent list. The choice is a
//! function of the term set alone, so derived equality stays structural.

mod text;
mod window;

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};
use window::{span_bits, BitWindow};

pub use text::{format_poly, parse_poly};

/// Univariate polynomials with exponent span below this many bits use the bit-window form.
pub const WINDOW_SPAN_LIMIT: u64 = 1 << 20;

/// A lattice offset `k ∈ Z^d`, i.e. the monomial `u^k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Exponent(SmallVec<[i64; 2]>);

impl Exponent {
    pub fn new(components: &[i64]) -> Self {
        Exponent(SmallVec::from_slice(components))
    }

    pub fn zero(dim: usize) -> Self {
        Exponent(SmallVec::from_elem(0, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn checked_add(&self, other: &Exponent) -> Result<Exponent> {
        check_dims(self.dim(), other.dim())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<_>>()
            .map(Exponent)
    }

    pub fn checked_neg(&self) -> Result<Exponent> {
        self.0
            .iter()
            .map(|a| a.checked_neg().ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<_>>()
            .map(Exponent)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<Exponent> {
        self.0
            .iter()
            .map(|a| a.checked_mul(factor).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<_>>()
            .map(Exponent)
    }

    /// Sum of absolute components (saturating).
    pub fn l1_norm(&self) -> u64 {
        self.0
            .iter()
            .fold(0u64, |acc, c| acc.saturating_add(c.unsigned_abs()))
    }
}

impl From<i64> for Exponent {
    fn from(k: i64) -> Self {
        Exponent::new(&[k])
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "(")?;
            for (i, c) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.len() == 1 {
            serializer.serialize_i64(self.0[0])
        } else {
            self.0.as_slice().serialize(serializer)
        }
    }
}

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { left, right })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    /// Strictly increasing exponents.
    Sparse(Vec<Exponent>),
    Window(BitWindow),
}

/// An element of `F₂[u₁^±1, …, u_d^±1]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    dim: usize,
    repr: Repr,
}

impl LaurentPoly {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "Laurent ring needs at least one variable");
        LaurentPoly {
            dim,
            repr: Repr::Sparse(Vec::new()),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(Exponent::zero(dim))
    }

    pub fn monomial(k: Exponent) -> Self {
        let dim = k.dim();
        assert!(dim >= 1, "Laurent ring needs at least one variable");
        if dim == 1 {
            LaurentPoly {
                dim,
                repr: Repr::Window(BitWindow::from_sorted(&[k.0[0]]).expect("single bit")),
            }
        } else {
            LaurentPoly {
                dim,
                repr: Repr::Sparse(vec![k]),
            }
        }
    }

    /// The univariate monomial `u^k`.
    pub fn mono(k: i64) -> Self {
        Self::monomial(Exponent::from(k))
    }

    /// Builds a polynomial from terms; repeated exponents cancel in pairs.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = Exponent>,
    {
        let mut terms: Vec<Exponent> = terms.into_iter().collect();
        for t in &terms {
            check_dims(dim, t.dim())?;
        }
        terms.sort_unstable();
        Ok(Self::from_sorted_with_parity(dim, terms))
    }

    /// Univariate convenience constructor; repeated exponents cancel.
    pub fn from_exponents_1d(exponents: &[i64]) -> Self {
        Self::from_terms(1, exponents.iter().map(|&e| Exponent::from(e))).expect("dimension 1")
    }

    /// `terms` must be sorted; runs of equal exponents cancel mod 2.
    fn from_sorted_with_parity(dim: usize, terms: Vec<Exponent>) -> Self {
        let mut kept: Vec<Exponent> = Vec::with_capacity(terms.len());
        let mut iter = terms.into_iter().peekable();
        while let Some(t) = iter.next() {
            let mut count = 1usize;
            while iter.peek() == Some(&t) {
                iter.next();
                count += 1;
            }
            if count % 2 == 1 {
                kept.push(t);
            }
        }
        Self::from_canonical_terms(dim, kept)
    }

    /// `terms` must be strictly increasing.
    fn from_canonical_terms(dim: usize, terms: Vec<Exponent>) -> Self {
        if dim == 1 && !terms.is_empty() {
            let lo = terms[0].0[0];
            let hi = terms[terms.len() - 1].0[0];
            if span_bits(lo, hi).is_ok_and(|s| s < WINDOW_SPAN_LIMIT) {
                let flat: Vec<i64> = terms.iter().map(|t| t.0[0]).collect();
                return LaurentPoly {
                    dim,
                    repr: Repr::Window(BitWindow::from_sorted(&flat).expect("span checked")),
                };
            }
        }
        LaurentPoly {
            dim,
            repr: Repr::Sparse(terms),
        }
    }

    fn from_window(window: Option<BitWindow>) -> Self {
        match window {
            Some(w) => LaurentPoly {
                dim: 1,
                repr: Repr::Window(w),
            },
            None => LaurentPoly::zero(1),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.repr, Repr::Sparse(t) if t.is_empty())
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial().is_some_and(|k| k.is_zero())
    }

    /// Number of monomials (the Hamming weight `|p|`).
    pub fn weight(&self) -> usize {
        match &self.repr {
            Repr::Sparse(t) => t.len(),
            Repr::Window(w) => w.weight(),
        }
    }

    /// Terms in increasing lexicographic order.
    pub fn terms(&self) -> Vec<Exponent> {
        match &self.repr {
            Repr::Sparse(t) => t.clone(),
            Repr::Window(w) => w.exponents().map(Exponent::from).collect(),
        }
    }

    /// Exponents of a univariate polynomial, increasing.
    ///
    /// # Panics
    /// If `dim() != 1`.
    pub fn exponents_1d(&self) -> Vec<i64> {
        assert_eq!(self.dim, 1, "exponents_1d on a multivariate polynomial");
        match &self.repr {
            Repr::Sparse(t) => t.iter().map(|e| e.0[0]).collect(),
            Repr::Window(w) => w.exponents().collect(),
        }
    }

    pub fn contains(&self, k: &Exponent) -> bool {
        if k.dim() != self.dim {
            return false;
        }
        match &self.repr {
            Repr::Sparse(t) => t.binary_search(k).is_ok(),
            Repr::Window(w) => w.contains(k.0[0]),
        }
    }

    pub fn as_monomial(&self) -> Option<Exponent> {
        if self.weight() == 1 {
            self.terms().pop()
        } else {
            None
        }
    }

    /// True when `p(u) = p(u⁻¹)`.
    pub fn is_palindromic(&self) -> bool {
        self.involute().is_ok_and(|r| &r == self)
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        check_dims(self.dim, other.dim)?;
        if let (Repr::Window(a), Repr::Window(b)) = (&self.repr, &other.repr) {
            let lo = a.min_exponent().min(b.min_exponent());
            let hi = a.max_exponent().max(b.max_exponent());
            if span_bits(lo, hi)? < WINDOW_SPAN_LIMIT {
                return Ok(Self::from_window(a.xor(b)?));
            }
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let (a, b) = (self.terms(), other.terms());
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Self::from_canonical_terms(self.dim, out))
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        check_dims(self.dim, other.dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(self.dim));
        }
        if let (Repr::Window(a), Repr::Window(b)) = (&self.repr, &other.repr) {
            let lo = a
                .min_exponent()
                .checked_add(b.min_exponent())
                .ok_or(AlgebraError::ExponentOverflow)?;
            let hi = a
                .max_exponent()
                .checked_add(b.max_exponent())
                .ok_or(AlgebraError::ExponentOverflow)?;
            if span_bits(lo, hi)? < WINDOW_SPAN_LIMIT {
                return Ok(Self::from_window(Some(a.mul(b)?)));
            }
        }
        let (a, b) = (self.terms(), other.terms());
        let mut prods = Vec::with_capacity(a.len() * b.len());
        for x in &a {
            for y in &b {
                prods.push(x.checked_add(y)?);
            }
        }
        prods.sort_unstable();
        Ok(Self::from_sorted_with_parity(self.dim, prods))
    }

    /// Multiplication by the monomial `u^k`.
    pub fn shift(&self, k: &Exponent) -> Result<LaurentPoly> {
        check_dims(self.dim, k.dim())?;
        match &self.repr {
            Repr::Window(w) => Ok(LaurentPoly {
                dim: 1,
                repr: Repr::Window(w.shifted(k.0[0])?),
            }),
            Repr::Sparse(t) => {
                let shifted = t.iter().map(|e| e.checked_add(k)).collect::<Result<Vec<_>>>()?;
                Ok(Self::from_canonical_terms(self.dim, shifted))
            }
        }
    }

    /// The ring involution `p(u) ↦ p(u⁻¹)`.
    pub fn involute(&self) -> Result<LaurentPoly> {
        match &self.repr {
            Repr::Window(w) => Ok(LaurentPoly {
                dim: 1,
                repr: Repr::Window(w.reversed()?),
            }),
            Repr::Sparse(t) => {
                let mut neg = t.iter().map(Exponent::checked_neg).collect::<Result<Vec<_>>>()?;
                neg.sort_unstable();
                Ok(Self::from_canonical_terms(self.dim, neg))
            }
        }
    }

    /// Squaring doubles every exponent; no two products collide in characteristic 2.
    pub fn square(&self) -> Result<LaurentPoly> {
        let doubled = self
            .terms()
            .iter()
            .map(|e| e.checked_scale(2))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_canonical_terms(self.dim, doubled))
    }

    pub fn pow(&self, mut n: u64) -> Result<LaurentPoly> {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one(self.dim);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.square()?;
            }
        }
        Ok(acc)
    }

    /// Per-variable `(min, max)` exponent over the term set.
    pub fn deg_extremes(&self) -> Result<Vec<(i64, i64)>> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        match &self.repr {
            Repr::Window(w) => Ok(vec![(w.min_exponent(), w.max_exponent())]),
            Repr::Sparse(t) => {
                let mut ext: Vec<(i64, i64)> = t[0].0.iter().map(|&c| (c, c)).collect();
                for e in &t[1..] {
                    for (slot, &c) in ext.iter_mut().zip(e.0.iter()) {
                        slot.0 = slot.0.min(c);
                        slot.1 = slot.1.max(c);
                    }
                }
                Ok(ext)
            }
        }
    }

    /// Largest `|k_i|` per variable; zeros for the zero polynomial.
    pub fn max_abs_exponents(&self) -> Vec<u64> {
        match self.deg_extremes() {
            Ok(ext) => ext
                .iter()
                .map(|&(lo, hi)| lo.unsigned_abs().max(hi.unsigned_abs()))
                .collect(),
            Err(_) => vec![0; self.dim],
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_poly(self))
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;

    /// Panics on dimension mismatch or exponent overflow; use [`LaurentPoly::add`] to handle those.
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs).expect("LaurentPoly addition")
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;

    /// Panics on dimension mismatch or exponent overflow; use [`LaurentPoly::mul`] to handle those.
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs).expect("LaurentPoly multiplication")
    }
}
