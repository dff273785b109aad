//! Brute-force soliton search that never forms a determinant or a matrix
//! power: images of basis vectors are computed by iterating `L`, and the
//! kernel of the stacked system is enumerated exhaustively.

use std::collections::BTreeMap;

use super::SolitonWitness;
use crate::error::{AlgebraError, Result};
use crate::fpoly::Exponent;
use crate::symplectic::{ModuleVector, PolyMatrix};

/// Largest number of unknowns `2N·(2b+1)^d` the oracle accepts.
pub const ORACLE_MAX_UNKNOWNS: usize = 64;
const MAX_KERNEL_DIM: usize = 20;

/// Finds the first `(n, k)` admitting a nonzero `q` supported on
/// `[−support_bound, support_bound]^d` with `Lⁿq = uᵏq`.
pub fn brute_force_soliton_oracle(
    l: &PolyMatrix,
    n_max: u64,
    support_bound: u32,
) -> Result<Option<SolitonWitness>> {
    let size = l.size();
    let dim = l.dim();
    let side = 2 * support_bound as usize + 1;
    let cells = side
        .checked_pow(dim as u32)
        .filter(|c| c.saturating_mul(size) <= ORACLE_MAX_UNKNOWNS)
        .ok_or_else(|| {
            AlgebraError::CostCap(format!(
                "{size}x{size} matrix with support bound {support_bound} exceeds {ORACLE_MAX_UNKNOWNS} unknowns"
            ))
        })?;
    let b = support_bound as i64;
    let points: Vec<Vec<i64>> = (0..cells)
        .map(|mut idx| {
            let mut p = vec![0i64; dim];
            for slot in p.iter_mut().rev() {
                *slot = (idx % side) as i64 - b;
                idx /= side;
            }
            p
        })
        .collect();

    // largest |exponent| per variable, read straight off the terms
    let mut reach = vec![0i64; dim];
    for row in l.rows() {
        for e in row {
            for t in e.terms() {
                for (r, c) in reach.iter_mut().zip(t.components()) {
                    *r = (*r).max(c.abs());
                }
            }
        }
    }

    let mut images: Vec<ModuleVector> = Vec::with_capacity(size * cells);
    for j in 0..size {
        for p in &points {
            images.push(ModuleVector::unit(size, j, Exponent::new(p)));
        }
    }
    let originals = images.clone();

    for n in 1..=n_max {
        for img in images.iter_mut() {
            *img = l.apply(img)?;
        }
        let bound: Vec<i64> = reach.iter().map(|&r| r * n as i64).collect();
        for k in ordered_box(&bound) {
            let k = Exponent::new(&k);
            let mut columns = Vec::with_capacity(images.len());
            for (img, orig) in images.iter().zip(&originals) {
                columns.push(img.add(&orig.shift(&k)?)?);
            }
            if let Some(indices) = lightest_kernel_element(&columns)? {
                let q = assemble(&originals, &indices, size, dim)?;
                return SolitonWitness::new(l, n, k, q).map(Some);
            }
        }
    }
    Ok(None)
}

fn ordered_box(bound: &[i64]) -> Vec<Vec<i64>> {
    let mut all: Vec<Vec<i64>> = vec![Vec::new()];
    for &r in bound {
        all = all
            .into_iter()
            .flat_map(|prefix| {
                (-r..=r).map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    all.sort_by_key(|k| {
        let l1: i64 = k.iter().map(|c| c.abs()).sum();
        let parts: Vec<(i64, bool)> = k.iter().map(|&c| (c.abs(), c < 0)).collect();
        (l1, parts)
    });
    all
}

/// Kernel of the map whose `c`-th column is `columns[c]`, searched exhaustively.
fn lightest_kernel_element(columns: &[ModuleVector]) -> Result<Option<Vec<usize>>> {
    let mut keys: BTreeMap<(usize, Exponent), usize> = BTreeMap::new();
    for col in columns {
        for (i, e) in col.entries().iter().enumerate() {
            for t in e.terms() {
                let next = keys.len();
                keys.entry((i, t)).or_insert(next);
            }
        }
    }
    let width = columns.len();
    let mut rows = vec![vec![false; width]; keys.len()];
    for (c, col) in columns.iter().enumerate() {
        for (i, e) in col.entries().iter().enumerate() {
            for t in e.terms() {
                rows[keys[&(i, t)]][c] = true;
            }
        }
    }

    // plain Gauss-Jordan
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pivot_row = rows[r].clone();
                for (a, b) in rows[i].iter_mut().zip(&pivot_row) {
                    *a ^= *b;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Ok(None);
    }
    if free.len() > MAX_KERNEL_DIM {
        return Err(AlgebraError::CostCap(format!(
            "kernel of dimension {} is too large to enumerate",
            free.len()
        )));
    }
    let mut best: Option<Vec<usize>> = None;
    for mask in 1u64..(1 << free.len()) {
        let mut x = vec![false; width];
        for (bit, &f) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                x[f] = true;
            }
        }
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = free.iter().filter(|&&f| x[f] && rows[row][f]).count() % 2 == 1;
        }
        let set: Vec<usize> = (0..width).filter(|&i| x[i]).collect();
        let replace = match &best {
            None => true,
            Some(b) => (set.len(), &set) < (b.len(), b),
        };
        if replace {
            best = Some(set);
        }
    }
    Ok(best)
}

fn assemble(
    originals: &[ModuleVector],
    indices: &[usize],
    size: usize,
    dim: usize,
) -> Result<ModuleVector> {
    let mut q = ModuleVector::zero(size, dim);
    for &i in indices {
        q = q.add(&originals[i])?;
    }
    let mut low = vec![i64::MAX; dim];
    for e in q.entries() {
        for t in e.terms() {
            for (l, c) in low.iter_mut().zip(t.components()) {
                *l = (*l).min(*c);
            }
        }
    }
    let back: Vec<i64> = low.iter().map(|l| -l).collect();
    q.shift(&Exponent::new(&back))
}
