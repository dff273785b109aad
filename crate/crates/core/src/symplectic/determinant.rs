//! Exact determinants by cofactor expansion.
//!
//! At each level the expansion runs along whichever remaining row or column
//! has the fewest nonzero entries (ties broken by total term count), so sparse
//! CA matrices collapse quickly. Signs are irrelevant in characteristic 2.

use super::PolyMatrix;
use crate::error::Result;
use crate::fpoly::LaurentPoly;

pub fn determinant(m: &PolyMatrix) -> Result<LaurentPoly> {
    let rows: Vec<usize> = (0..m.size()).collect();
    let cols = rows.clone();
    expand(m, &rows, &cols)
}

fn expand(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Result<LaurentPoly> {
    let dim = m.dim();
    match rows.len() {
        0 => return Ok(LaurentPoly::one(dim)),
        1 => return Ok(m.get(rows[0], cols[0]).clone()),
        2 => {
            let ad = m.get(rows[0], cols[0]).mul(m.get(rows[1], cols[1]))?;
            let bc = m.get(rows[0], cols[1]).mul(m.get(rows[1], cols[0]))?;
            return ad.add(&bc);
        }
        _ => {}
    }

    // (nonzero count, term count) for a line
    let line_cost = |cells: &mut dyn Iterator<Item = &LaurentPoly>| {
        cells.fold((0usize, 0usize), |(nz, w), e| {
            if e.is_zero() {
                (nz, w)
            } else {
                (nz + 1, w + e.weight())
            }
        })
    };
    let best_row = rows
        .iter()
        .enumerate()
        .map(|(ri, &r)| (line_cost(&mut cols.iter().map(|&c| m.get(r, c))), ri))
        .min()
        .expect("non-empty");
    let best_col = cols
        .iter()
        .enumerate()
        .map(|(ci, &c)| (line_cost(&mut rows.iter().map(|&r| m.get(r, c))), ci))
        .min()
        .expect("non-empty");

    let mut acc = LaurentPoly::zero(dim);
    if best_row.0 <= best_col.0 {
        let ri = best_row.1;
        let sub_rows: Vec<usize> = rows.iter().enumerate().filter(|&(i, _)| i != ri).map(|(_, &r)| r).collect();
        for (ci, &c) in cols.iter().enumerate() {
            let entry = m.get(rows[ri], c);
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|&(i, _)| i != ci).map(|(_, &c)| c).collect();
            let minor = expand(m, &sub_rows, &sub_cols)?;
            if !minor.is_zero() {
                acc = acc.add(&entry.mul(&minor)?)?;
            }
        }
    } else {
        let ci = best_col.1;
        let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|&(i, _)| i != ci).map(|(_, &c)| c).collect();
        for (ri, &r) in rows.iter().enumerate() {
            let entry = m.get(r, cols[ci]);
            if entry.is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows.iter().enumerate().filter(|&(i, _)| i != ri).map(|(_, &r)| r).collect();
            let minor = expand(m, &sub_rows, &sub_cols)?;
            if !minor.is_zero() {
                acc = acc.add(&entry.mul(&minor)?)?;
            }
        }
    }
    Ok(acc)
}
