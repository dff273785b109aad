//! Dense bit-window storage for univariate Laurent polynomials.
//!
//! Bit `i` of `words` is the coefficient of `u^(offset + i)`. A canonical
//! window has bit 0 and bit `len - 1` set, and exactly `ceil(len / 64)` words.

use crate::error::{AlgebraError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitWindow {
    offset: i64,
    len: u64,
    words: Vec<u64>,
}

fn words_for(bits: u64) -> usize {
    bits.div_ceil(64) as usize
}

/// XOR `src`, shifted left by `shift` bits, into `dst`.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: u64) {
    let word_shift = (shift / 64) as usize;
    let bit_shift = (shift % 64) as u32;
    if bit_shift == 0 {
        for (i, &w) in src.iter().enumerate() {
            if let Some(d) = dst.get_mut(i + word_shift) {
                *d ^= w;
            }
        }
    } else {
        for (i, &w) in src.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let lo = w << bit_shift;
            let hi = w >> (64 - bit_shift);
            if let Some(d) = dst.get_mut(i + word_shift) {
                *d ^= lo;
            }
            if let Some(d) = dst.get_mut(i + word_shift + 1) {
                *d ^= hi;
            }
        }
    }
}

/// Ascending positions of set bits.
pub(crate) struct SetBits<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> SetBits<'a> {
    fn new(words: &'a [u64]) -> Self {
        SetBits {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for SetBits<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as u64;
                self.current &= self.current - 1;
                return Some(self.index as u64 * 64 + tz);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl BitWindow {
    /// Builds a canonical window from an arbitrary buffer, or `None` if it is all zero.
    fn normalize(offset: i64, mut words: Vec<u64>) -> Result<Option<BitWindow>> {
        let first = match words.iter().position(|&w| w != 0) {
            Some(i) => i as u64 * 64 + words[i].trailing_zeros() as u64,
            None => return Ok(None),
        };
        let last_word = words.iter().rposition(|&w| w != 0).unwrap();
        let last = last_word as u64 * 64 + 63 - words[last_word].leading_zeros() as u64;
        let len = last - first + 1;
        let new_offset = offset
            .checked_add(i64::try_from(first).map_err(|_| AlgebraError::ExponentOverflow)?)
            .ok_or(AlgebraError::ExponentOverflow)?;
        if first == 0 {
            words.truncate(words_for(len));
            return Ok(Some(BitWindow {
                offset: new_offset,
                len,
                words,
            }));
        }
        let mut out = vec![0u64; words_for(len)];
        let word_shift = (first / 64) as usize;
        let bit_shift = (first % 64) as u32;
        for (i, slot) in out.iter_mut().enumerate() {
            let lo = words.get(i + word_shift).copied().unwrap_or(0);
            *slot = if bit_shift == 0 {
                lo
            } else {
                let hi = words.get(i + word_shift + 1).copied().unwrap_or(0);
                (lo >> bit_shift) | (hi << (64 - bit_shift))
            };
        }
        if !len.is_multiple_of(64) {
            let last = out.len() - 1;
            out[last] &= (1u64 << (len % 64)) - 1;
        }
        Ok(Some(BitWindow {
            offset: new_offset,
            len,
            words: out,
        }))
    }

    /// Builds a window from strictly increasing exponents (non-empty).
    pub(crate) fn from_sorted(exponents: &[i64]) -> Result<BitWindow> {
        let offset = exponents[0];
        let last = *exponents.last().unwrap();
        let span = span_bits(offset, last)?;
        let mut words = vec![0u64; words_for(span)];
        for &e in exponents {
            let bit = (e - offset) as u64;
            words[(bit / 64) as usize] |= 1 << (bit % 64);
        }
        Ok(BitWindow {
            offset,
            len: span,
            words,
        })
    }

    pub(crate) fn min_exponent(&self) -> i64 {
        self.offset
    }

    pub(crate) fn max_exponent(&self) -> i64 {
        self.offset + (self.len - 1) as i64
    }

    pub(crate) fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        let offset = self.offset;
        SetBits::new(&self.words).map(move |b| offset + b as i64)
    }

    pub(crate) fn contains(&self, e: i64) -> bool {
        if e < self.offset {
            return false;
        }
        let bit = (e as i128 - self.offset as i128) as u128;
        if bit >= self.len as u128 {
            return false;
        }
        let bit = bit as u64;
        self.words[(bit / 64) as usize] >> (bit % 64) & 1 == 1
    }

    pub(crate) fn shifted(&self, k: i64) -> Result<BitWindow> {
        let offset = self.offset.checked_add(k).ok_or(AlgebraError::ExponentOverflow)?;
        offset
            .checked_add((self.len - 1) as i64)
            .ok_or(AlgebraError::ExponentOverflow)?;
        Ok(BitWindow {
            offset,
            len: self.len,
            words: self.words.clone(),
        })
    }

    pub(crate) fn xor(&self, other: &BitWindow) -> Result<Option<BitWindow>> {
        let offset = self.offset.min(other.offset);
        let top = self.max_exponent().max(other.max_exponent());
        let span = span_bits(offset, top)?;
        let mut words = vec![0u64; words_for(span)];
        xor_shifted(&mut words, &self.words, (self.offset - offset) as u64);
        xor_shifted(&mut words, &other.words, (other.offset - offset) as u64);
        BitWindow::normalize(offset, words)
    }

    /// Carry-less product, iterating over the set bits of the sparser factor.
    pub(crate) fn mul(&self, other: &BitWindow) -> Result<BitWindow> {
        let offset = self
            .offset
            .checked_add(other.offset)
            .ok_or(AlgebraError::ExponentOverflow)?;
        let top = self
            .max_exponent()
            .checked_add(other.max_exponent())
            .ok_or(AlgebraError::ExponentOverflow)?;
        let span = span_bits(offset, top)?;
        let (sparse, dense) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = vec![0u64; words_for(span)];
        for bit in SetBits::new(&sparse.words) {
            xor_shifted(&mut words, &dense.words, bit);
        }
        Ok(BitWindow::normalize(offset, words)?.expect("product of nonzero polynomials over F2 is nonzero"))
    }

    pub(crate) fn reversed(&self) -> Result<BitWindow> {
        let offset = self
            .max_exponent()
            .checked_neg()
            .ok_or(AlgebraError::ExponentOverflow)?;
        let total = self.words.len() as u64 * 64;
        let mut rev: Vec<u64> = self.words.iter().rev().map(|w| w.reverse_bits()).collect();
        let pad = total - self.len;
        if pad > 0 {
            // shift right by `pad` so that the old top bit lands on bit 0
            let mut out = vec![0u64; rev.len()];
            for (i, slot) in out.iter_mut().enumerate() {
                let lo = rev[i] >> pad;
                let hi = rev.get(i + 1).map_or(0, |w| w << (64 - pad));
                *slot = lo | hi;
            }
            rev = out;
        }
        Ok(BitWindow::normalize(offset, rev)?.expect("nonzero"))
    }
}

pub(crate) fn span_bits(lo: i64, hi: i64) -> Result<u64> {
    let span = hi as i128 - lo as i128 + 1;
    u64::try_from(span).map_err(|_| AlgebraError::ExponentOverflow)
}
