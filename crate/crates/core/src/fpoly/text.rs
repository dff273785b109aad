//! Text grammar for Laurent polynomials:
//!
//! ```text
//! poly   := term ('+' term)*
//! term   := '0' | '1' | factor ('*'? factor)*
//! factor := var ('^' signed-int)?
//! var    := 'u' (d = 1) | 'u1' … 'ud'
//! ```
//!
//! Whitespace is insignificant. Identical terms cancel, as `+` is addition mod 2.

use super::{Exponent, LaurentPoly};
use crate::cursor::Cursor;
use crate::error::ParseError;

/// Parses a polynomial in `dim` variables.
pub fn parse_poly(text: &str, dim: usize) -> Result<LaurentPoly, ParseError> {
    if dim == 0 {
        return Err(ParseError::new(0, "variable count must be at least 1"));
    }
    let mut cur = Cursor::new(text);
    let mut terms: Vec<Exponent> = Vec::new();
    loop {
        if let Some(term) = parse_term(&mut cur, dim)? {
            terms.push(term);
        }
        match cur.peek() {
            None => break,
            Some(b'+') => cur.pos += 1,
            Some(_) => return Err(cur.error("expected '+' or end of input")),
        }
    }
    LaurentPoly::from_terms(dim, terms).map_err(|e| ParseError::new(0, e.to_string()))
}

/// `None` for the term `0`.
fn parse_term(cur: &mut Cursor<'_>, dim: usize) -> Result<Option<Exponent>, ParseError> {
    match cur.peek() {
        Some(b'0') => {
            cur.pos += 1;
            return Ok(None);
        }
        Some(b'1') => {
            cur.pos += 1;
            return Ok(Some(Exponent::zero(dim)));
        }
        Some(b'u') => {}
        Some(_) => return Err(cur.error("expected '0', '1' or a variable")),
        None => return Err(cur.error("expected a term")),
    }
    let mut exponent = vec![0i64; dim];
    loop {
        let factor_pos = cur.pos;
        let (var, power) = parse_factor(cur, dim)?;
        exponent[var] = exponent[var]
            .checked_add(power)
            .ok_or_else(|| ParseError::new(factor_pos, "exponent overflow"))?;
        match cur.peek() {
            Some(b'*') => {
                cur.pos += 1;
                if cur.peek() != Some(b'u') {
                    return Err(cur.error("expected a variable after '*'"));
                }
            }
            Some(b'u') => {}
            _ => break,
        }
    }
    Ok(Some(Exponent::new(&exponent)))
}

fn parse_factor(cur: &mut Cursor<'_>, dim: usize) -> Result<(usize, i64), ParseError> {
    let var_pos = {
        cur.skip_ws();
        cur.pos
    };
    if !cur.eat(b'u') {
        return Err(cur.error("expected a variable"));
    }
    // variable index must follow 'u' directly
    let index = cur.digits()?;
    let var = match index {
        None if dim == 1 => 0,
        None => {
            return Err(ParseError::new(
                var_pos,
                format!("bare 'u' is ambiguous with {dim} variables; use u1…u{dim}"),
            ))
        }
        Some(i) if i >= 1 && i <= dim as u128 => (i - 1) as usize,
        Some(i) => {
            return Err(ParseError::new(
                var_pos,
                format!("variable index {i} out of range 1…{dim}"),
            ))
        }
    };
    let power = if cur.eat(b'^') { cur.signed_int()? } else { 1 };
    Ok((var, power))
}

/// Canonical text form; terms in increasing lexicographic exponent order.
pub fn format_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let dim = p.dim();
    let mut out = String::new();
    for (i, term) in p.terms().iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if term.is_zero() {
            out.push('1');
            continue;
        }
        let mut first = true;
        for (v, &c) in term.components().iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push('u');
            if dim > 1 {
                out.push_str(&(v + 1).to_string());
            }
            if c != 1 {
                out.push('^');
                out.push_str(&c.to_string());
            }
        }
    }
    out
}
