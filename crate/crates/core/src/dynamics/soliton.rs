use std::collections::HashMap;

use rayon::prelude::*;

use super::SolitonWitness;
use crate::error::{AlgebraError, Result};
use crate::fpoly::{Exponent, LaurentPoly};
use crate::gf2::{lightest_kernel_vector, BitMatrix};
use crate::symplectic::{ModuleVector, PolyMatrix};

/// Limits for witness extraction inside [`soliton_search_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest window tried; `None` derives one from a kernel vector of `Lⁿ − uᵏ`.
    pub max_window: Option<u32>,
    /// Refuse linear systems with more unknowns than this.
    pub max_unknowns: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_window: None,
            max_unknowns: 1 << 14,
        }
    }
}

/// Every `k` with `|k_i| ≤ n·D_i`, in search order: by `|k|₁`, then the
/// componentwise `|k_i|`, then positive before negative.
pub fn cone_candidates(reach: &[u64], n: u64) -> Result<Vec<Exponent>> {
    let mut ranges = Vec::with_capacity(reach.len());
    for &d in reach {
        let r = d
            .checked_mul(n)
            .and_then(|r| i64::try_from(r).ok())
            .ok_or(AlgebraError::ExponentOverflow)?;
        ranges.push(r);
    }
    let mut out = Vec::new();
    let mut current: Vec<i64> = ranges.iter().map(|&r| -r).collect();
    loop {
        out.push(Exponent::new(&current));
        let mut i = 0;
        loop {
            if i == current.len() {
                out.sort_by_cached_key(order_key);
                return Ok(out);
            }
            if current[i] < ranges[i] {
                current[i] += 1;
                break;
            }
            current[i] = -ranges[i];
            i += 1;
        }
    }
}

fn order_key(k: &Exponent) -> (u64, Vec<(u64, bool)>) {
    let parts = k.components().iter().map(|&c| (c.unsigned_abs(), c < 0)).collect();
    (k.l1_norm(), parts)
}

/// Searches `n = 1..=n_max` for `det(Lⁿ − uᵏ) = 0` over the propagation cone
/// and returns a verified witness at the first hit.
pub fn soliton_search(l: &PolyMatrix, n_max: u64) -> Result<Option<SolitonWitness>> {
    soliton_search_with(l, n_max, &SearchOptions::default())
}

pub fn soliton_search_with(
    l: &PolyMatrix,
    n_max: u64,
    options: &SearchOptions,
) -> Result<Option<SolitonWitness>> {
    if n_max == 0 {
        return Err(AlgebraError::InvalidArgument("horizon must be at least 1".into()));
    }
    let reach = l.reach();
    for (i, power) in l.powers().take(n_max as usize).enumerate() {
        let n = i as u64 + 1;
        let power = power?;
        let cone = cone_candidates(&reach, n)?;
        // every hit is computed so the choice does not depend on scheduling
        let hits: Vec<(usize, PolyMatrix)> = cone
            .par_iter()
            .enumerate()
            .map(|(idx, k)| -> Result<Option<(usize, PolyMatrix)>> {
                let a = power.minus_scalar(&LaurentPoly::monomial(k.clone()))?;
                Ok(a.determinant()?.is_zero().then_some((idx, a)))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        if let Some((idx, a)) = hits.into_iter().min_by_key(|(idx, _)| *idx) {
            let k = cone[idx].clone();
            let q = extract_escalating(&a, options)?;
            return SolitonWitness::new(l, n, k, q).map(Some);
        }
    }
    Ok(None)
}

/// Grows the window from 1 until a kernel vector appears.
fn extract_escalating(a: &PolyMatrix, options: &SearchOptions) -> Result<ModuleVector> {
    let limit = match options.max_window {
        Some(w) => w as usize,
        None => kernel_span_bound(a)?.unwrap_or(usize::MAX),
    };
    let mut window = 1usize;
    loop {
        if window > limit || unknowns(a, window).is_none_or(|u| u > options.max_unknowns) {
            return Err(AlgebraError::CostCap(format!(
                "no kernel vector of the singular matrix within window {}",
                window - 1
            )));
        }
        if let Some(q) = kernel_in_window(a, window)? {
            return Ok(q);
        }
        window += 1;
    }
}

/// A window that surely holds a kernel vector: the span of a nonzero adjugate column.
fn kernel_span_bound(a: &PolyMatrix) -> Result<Option<usize>> {
    let adj = a.adjugate()?;
    for c in 0..adj.size() {
        if let Some(ext) = adj.column(c).extremes() {
            let span = ext.iter().map(|&(lo, hi)| (hi - lo) as usize + 1).max().unwrap_or(1);
            return Ok(Some(span));
        }
    }
    Ok(None)
}

fn unknowns(a: &PolyMatrix, window: usize) -> Option<usize> {
    window.checked_pow(a.dim() as u32)?.checked_mul(a.size())
}

/// Solves `(Lⁿ − uᵏ) q = 0` with every entry of `q` supported on `[0, window)^d`.
///
/// Returns the lightest solution translated to start at exponent 0, or `None`
/// when the kernel is trivial inside the window.
pub fn witness_extract(
    l: &PolyMatrix,
    n: u64,
    k: &Exponent,
    window: u32,
) -> Result<Option<ModuleVector>> {
    if n == 0 || window == 0 {
        return Err(AlgebraError::InvalidArgument(
            "period and window must be positive".into(),
        ));
    }
    let a = l.pow(n)?.minus_scalar(&LaurentPoly::monomial(k.clone()))?;
    if unknowns(&a, window as usize).is_none_or(|u| u > SearchOptions::default().max_unknowns) {
        return Err(AlgebraError::CostCap(format!("window {window} too large")));
    }
    kernel_in_window(&a, window as usize)
}

fn kernel_in_window(a: &PolyMatrix, window: usize) -> Result<Option<ModuleVector>> {
    let size = a.size();
    let dim = a.dim();
    let cells = window.pow(dim as u32);
    let offsets: Vec<Exponent> = (0..cells).map(|idx| box_point(idx, window, dim)).collect();

    // unknown j * cells + b is the coefficient of u^{offsets[b]} in q_j
    let mut rows: HashMap<(usize, Exponent), usize> = HashMap::new();
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(size * cells);
    for j in 0..size {
        for x in &offsets {
            let mut col = Vec::new();
            for i in 0..size {
                for term in a.get(i, j).terms() {
                    let e = term.checked_add(x)?;
                    let next = rows.len();
                    col.push(*rows.entry((i, e)).or_insert(next));
                }
            }
            columns.push(col);
        }
    }
    let mut system = BitMatrix::zeros(rows.len(), columns.len());
    for (c, col) in columns.iter().enumerate() {
        for &r in col {
            system.toggle(r, c);
        }
    }
    let Some(best) = lightest_kernel_vector(&system.nullspace()) else {
        return Ok(None);
    };
    let mut terms: Vec<Vec<Exponent>> = vec![Vec::new(); size];
    for idx in best {
        terms[idx / cells].push(offsets[idx % cells].clone());
    }
    let entries = terms
        .into_iter()
        .map(|t| LaurentPoly::from_terms(dim, t))
        .collect::<Result<Vec<_>>>()?;
    let mut q = ModuleVector::new(entries)?;
    if let Some(ext) = q.extremes() {
        let lows: Vec<i64> = ext.iter().map(|&(lo, _)| -lo).collect();
        q = q.shift(&Exponent::new(&lows))?;
    }
    if !a.apply(&q)?.is_zero() {
        return Err(AlgebraError::InvalidArgument(
            "extracted vector fails verification".into(),
        ));
    }
    Ok(Some(q))
}

/// The `idx`-th point of `[0, window)^dim` in lexicographic order.
fn box_point(mut idx: usize, window: usize, dim: usize) -> Exponent {
    let mut comps = vec![0i64; dim];
    for slot in comps.iter_mut().rev() {
        *slot = (idx % window) as i64;
        idx /= window;
    }
    Exponent::new(&comps)
}
