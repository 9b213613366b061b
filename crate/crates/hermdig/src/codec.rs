//! Text encodings for digraphs.
//!
//! The compact `hd6` format: the first character is `chr(63 + n)` (so
//! `n <= 62`), followed by the pair states for `(0,1), (0,2), ..., (0,n-1),
//! (1,2), ...` as 2-bit codes (`00` none, `01` arc i->j, `10` arc j->i,
//! `11` digon), packed three codes per character into a 6-bit value `v`
//! (first pair in the high bits) emitted as `chr(63 + v)`. The final
//! character is zero-padded.
//!
//! The human-readable format: a line `n=<N>`, then one line `u>v` per arc
//! and `u=v` per digon.

use thiserror::Error;

use crate::digraph::{Digraph, PairState};

pub const MAX_ENCODABLE_ORDER: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("order {0} exceeds the encodable maximum of 62")]
    OrderTooLarge(usize),
    #[error("empty input")]
    Empty,
    #[error("malformed header character `{0}`")]
    BadHeader(char),
    #[error("character `{ch}` out of range at position {pos}")]
    BadChar { ch: char, pos: usize },
    #[error("input has {got} body characters, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("nonzero padding bits in final character")]
    BadPadding,
    #[error("malformed text line `{0}`")]
    BadTextLine(String),
    #[error("text vertex {0} out of range for order {1}")]
    TextVertexRange(usize, usize),
}

/// Pairs in hd6 order: `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
fn hd6_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
}

pub fn encode(d: &Digraph) -> Result<String, CodecError> {
    let n = d.order();
    if n > MAX_ENCODABLE_ORDER {
        return Err(CodecError::OrderTooLarge(n));
    }
    let mut out = String::new();
    out.push(char::from(63 + n as u8));
    let mut packed = 0u8;
    let mut filled = 0usize;
    for (i, j) in hd6_pairs(n) {
        packed = (packed << 2) | d.pair(i, j).code();
        filled += 1;
        if filled == 3 {
            out.push(char::from(63 + packed));
            packed = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        packed <<= 2 * (3 - filled);
        out.push(char::from(63 + packed));
    }
    Ok(out)
}

pub fn decode(s: &str) -> Result<Digraph, CodecError> {
    let mut chars = s.chars();
    let header = chars.next().ok_or(CodecError::Empty)?;
    let hcode = u32::from(header);
    if !(63..=63 + MAX_ENCODABLE_ORDER as u32).contains(&hcode) {
        return Err(CodecError::BadHeader(header));
    }
    let n = (hcode - 63) as usize;
    let pair_count = n * (n - 1) / 2 * usize::from(n > 0);
    let expected = (pair_count + 2) / 3;
    let body: Vec<char> = chars.collect();
    if body.len() != expected {
        return Err(CodecError::WrongLength {
            got: body.len(),
            expected,
        });
    }
    let mut codes = Vec::with_capacity(expected * 3);
    for (pos, &ch) in body.iter().enumerate() {
        let c = u32::from(ch);
        if !(63..=126).contains(&c) {
            return Err(CodecError::BadChar { ch, pos: pos + 1 });
        }
        let v = (c - 63) as u8;
        codes.push((v >> 4) & 3);
        codes.push((v >> 2) & 3);
        codes.push(v & 3);
    }
    if codes[pair_count..].iter().any(|&c| c != 0) {
        return Err(CodecError::BadPadding);
    }
    let mut d = Digraph::empty(n);
    for (k, (i, j)) in hd6_pairs(n).enumerate() {
        d.set_pair(i, j, PairState::from_code(codes[k]));
    }
    Ok(d)
}

pub fn to_text(d: &Digraph) -> String {
    let mut out = format!("n={}\n", d.order());
    for (i, j) in d.unordered_pairs() {
        match d.pair(i, j) {
            PairState::None => {}
            PairState::Fwd => out.push_str(&format!("{i}>{j}\n")),
            PairState::Bwd => out.push_str(&format!("{j}>{i}\n")),
            PairState::Digon => out.push_str(&format!("{i}={j}\n")),
        }
    }
    out
}

pub fn from_text(s: &str) -> Result<Digraph, CodecError> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or(CodecError::Empty)?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| CodecError::BadTextLine(header.into()))?;
    let mut d = Digraph::empty(n);
    for line in lines {
        let (u, v, digon) = if let Some((a, b)) = line.split_once('>') {
            (a, b, false)
        } else if let Some((a, b)) = line.split_once('=') {
            (a, b, true)
        } else {
            return Err(CodecError::BadTextLine(line.into()));
        };
        let parse = |t: &str| -> Result<usize, CodecError> {
            let v: usize = t
                .trim()
                .parse()
                .map_err(|_| CodecError::BadTextLine(line.into()))?;
            if v >= n {
                return Err(CodecError::TextVertexRange(v, n));
            }
            Ok(v)
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(CodecError::BadTextLine(line.into()));
        }
        if digon {
            d.add_digon(u, v);
        } else {
            d.add_arc(u, v);
        }
    }
    Ok(d)
}

/// Parses either an hd6 string or the `n=` text format.
pub fn parse_any(s: &str) -> Result<Digraph, CodecError> {
    let t = s.trim();
    if t.starts_with("n=") {
        from_text(t)
    } else {
        decode(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;

    #[test]
    fn singleton_encodes_to_at_sign() {
        assert_eq!(encode(&Digraph::empty(1)).unwrap(), "@");
        assert_eq!(decode("@").unwrap(), Digraph::empty(1));
    }

    #[test]
    fn known_small_codes() {
        let mut d = Digraph::empty(2);
        d.add_arc(0, 1);
        // single pair Fwd: code 01 padded -> v = 0b010000 = 16 -> chr(79) = 'O'
        assert_eq!(encode(&d).unwrap(), "AO");
        d.add_arc(1, 0);
        // digon: 0b110000 = 48 -> chr(111) = 'o'
        assert_eq!(encode(&d).unwrap(), "Ao");
    }

    #[test]
    fn decode_rejects_malformed() {
        assert_eq!(decode(""), Err(CodecError::Empty));
        assert!(matches!(decode(">"), Err(CodecError::BadHeader('>'))));
        assert!(matches!(decode("AO@"), Err(CodecError::WrongLength { .. })));
        assert!(matches!(decode("A"), Err(CodecError::WrongLength { .. })));
        assert!(matches!(
            decode("B\u{1F600}"),
            Err(CodecError::BadChar { .. })
        ));
        // 2 vertices: 1 pair, padding bits must be zero: 'B' = code with low bits set
        assert!(matches!(decode("AB"), Err(CodecError::BadPadding)));
    }

    #[test]
    fn text_round_trip() {
        let mut d = Digraph::empty(4);
        d.add_arc(2, 0);
        d.add_digon(1, 3);
        let txt = to_text(&d);
        assert_eq!(from_text(&txt).unwrap(), d);
        assert!(from_text("n=2\n0>2\n").is_err());
        assert!(from_text("n=2\nxyz\n").is_err());
        assert_eq!(parse_any(&txt).unwrap(), d);
        assert_eq!(parse_any(&encode(&d).unwrap()).unwrap(), d);
    }

    #[test]
    fn encode_gates_large_orders() {
        assert!(encode(&Digraph::empty(62)).is_ok());
        assert!(matches!(
            encode(&Digraph::empty(63)),
            Err(CodecError::OrderTooLarge(63))
        ));
    }
}
