//! Bit-packed linear algebra over F₂ (row reduction and null spaces).

#[derive(Clone, Debug)]
pub(crate) struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub(crate) fn toggle(&mut self, r: usize, c: usize) {
        self.data[r * self.stride + c / 64] ^= 1 << (c % 64);
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// `row[dst] ^= row[src]`
    fn xor_row(&mut self, dst: usize, src: usize) {
        for w in 0..self.stride {
            let v = self.data[src * self.stride + w];
            self.data[dst * self.stride + w] ^= v;
        }
    }

    /// Reduced row echelon form in place; returns the pivot column of each leading row.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(row, p);
            for r in 0..self.rows {
                if r != row && self.get(r, col) {
                    self.xor_row(r, row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of `{x : A x = 0}`, one vector per free column, each as a list of set indices.
    pub(crate) fn nullspace(mut self) -> Vec<Vec<usize>> {
        let pivots = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![free];
            for (r, &p) in pivots.iter().enumerate() {
                if self.get(r, free) {
                    v.push(p);
                }
            }
            v.sort_unstable();
            basis.push(v);
        }
        basis
    }
}

/// Symmetric difference of sorted index lists.
pub(crate) fn xor_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// The lightest nonzero kernel vector, ties broken by the smallest sorted index list.
///
/// Exhaustive over the span when the kernel has at most `2^16` elements,
/// otherwise restricted to the basis vectors.
pub(crate) fn lightest_kernel_vector(basis: &[Vec<usize>]) -> Option<Vec<usize>> {
    if basis.is_empty() {
        return None;
    }
    let better = |cand: &Vec<usize>, best: &Option<Vec<usize>>| match best {
        None => true,
        Some(b) => (cand.len(), cand) < (b.len(), b),
    };
    let mut best: Option<Vec<usize>> = None;
    if basis.len() <= 16 {
        // Gray-code walk over all nonzero combinations
        let mut current: Vec<usize> = Vec::new();
        for step in 1u32..(1 << basis.len()) {
            let flip = step.trailing_zeros() as usize;
            current = xor_sorted(&current, &basis[flip]);
            if better(&current, &best) {
                best = Some(current.clone());
            }
        }
    } else {
        for v in basis {
            if better(v, &best) {
                best = Some(v.clone());
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_small_system() {
        // x0 + x1 = 0, x1 + x2 = 0  → kernel spanned by (1,1,1)
        let mut m = BitMatrix::zeros(2, 3);
        m.toggle(0, 0);
        m.toggle(0, 1);
        m.toggle(1, 1);
        m.toggle(1, 2);
        assert_eq!(m.nullspace(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let mut m = BitMatrix::zeros(70, 70);
        for i in 0..70 {
            m.toggle(i, i);
            if i + 1 < 70 {
                m.toggle(i, i + 1);
            }
        }
        assert!(m.nullspace().is_empty());
    }

    #[test]
    fn lightest_vector_search() {
        let basis = vec![vec![0, 1, 2, 3], vec![0, 1, 2]];
        assert_eq!(lightest_kernel_vector(&basis), Some(vec![3]));
        assert_eq!(lightest_kernel_vector(&[]), None);
    }
}
