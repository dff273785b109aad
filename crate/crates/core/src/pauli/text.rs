//! Pauli strings such as `X0`, `Y3`, `X0*Z2`, `Z1@1` or `X(0,2)`:
//!
//! ```text
//! string := phase? (word ('*' word)* | 'I')
//! phase  := '-' | 'i*' | '-i*'
//! word   := letter site ('@' int)?
//! site   := signed-int | '(' signed-int (',' signed-int)* ')'
//! ```
//!
//! Repeated qubits multiply in order, so `X0*Z0` is `−iY0`.

use super::{pauli_mul, PauliLetter, PauliMonomial, Phase};
use crate::cursor::Cursor;
use crate::error::ParseError;
use crate::fpoly::Exponent;

/// Parses a Pauli string on a `dim`-dimensional lattice with `qubits_per_cell` qubits per site.
pub fn parse_pauli(text: &str, dim: usize, qubits_per_cell: usize) -> Result<PauliMonomial, ParseError> {
    if dim == 0 || qubits_per_cell == 0 {
        return Err(ParseError::new(0, "lattice dimension and cell size must be positive"));
    }
    let mut cur = Cursor::new(text);
    let mut phase = Phase::ONE;
    if cur.eat(b'-') {
        phase = Phase::MINUS_ONE;
    }
    if cur.peek() == Some(b'i') {
        cur.pos += 1;
        if !cur.eat(b'*') {
            return Err(cur.error("expected '*' after phase"));
        }
        phase = phase.mul(Phase::I);
    }
    let mut out = PauliMonomial::identity();
    loop {
        let start = {
            cur.skip_ws();
            cur.pos
        };
        let letter = match cur.peek() {
            Some(b'I') => PauliLetter::I,
            Some(b'X') => PauliLetter::X,
            Some(b'Y') => PauliLetter::Y,
            Some(b'Z') => PauliLetter::Z,
            Some(_) => return Err(cur.error("expected one of I, X, Y, Z")),
            None => return Err(cur.error("expected a Pauli letter")),
        };
        cur.pos += 1;
        let bare_identity = letter == PauliLetter::I && matches!(cur.peek(), None | Some(b'*'));
        if bare_identity {
            if start != 0 && out.weight() > 0 || !cur.at_end() {
                return Err(ParseError::new(start, "bare 'I' must be the whole string"));
            }
            break;
        }
        let site = parse_site(&mut cur, dim)?;
        let mu = if cur.eat(b'@') {
            cur.skip_ws();
            let mu_pos = cur.pos;
            let mu = cur
                .digits()?
                .ok_or_else(|| cur.error("expected a cell-qubit index"))?;
            if mu >= qubits_per_cell as u128 {
                return Err(ParseError::new(
                    mu_pos,
                    format!("cell-qubit index {mu} out of range 0…{}", qubits_per_cell - 1),
                ));
            }
            mu as usize
        } else {
            0
        };
        out = pauli_mul(&out, &PauliMonomial::single(site, mu, letter));
        match cur.peek() {
            None => break,
            Some(b'*') => cur.pos += 1,
            Some(_) => return Err(cur.error("expected '*' or end of input")),
        }
    }
    let phase = out.phase().mul(phase);
    Ok(out.with_phase(phase))
}

fn parse_site(cur: &mut Cursor<'_>, dim: usize) -> Result<Exponent, ParseError> {
    let open = {
        cur.skip_ws();
        cur.pos
    };
    let mut comps = Vec::with_capacity(dim);
    if cur.eat(b'(') {
        loop {
            comps.push(site_int(cur)?);
            if cur.eat(b')') {
                break;
            }
            if !cur.eat(b',') {
                return Err(cur.error("expected ',' or ')'"));
            }
        }
    } else {
        comps.push(site_int(cur)?);
    }
    if comps.len() != dim {
        return Err(ParseError::new(
            open,
            format!("site has {} coordinates, lattice has {dim}", comps.len()),
        ));
    }
    Ok(Exponent::new(&comps))
}

fn site_int(cur: &mut Cursor<'_>) -> Result<i64, ParseError> {
    cur.signed_int()
        .map_err(|e| ParseError::new(e.position, e.message.replace("exponent", "site index")))
}
