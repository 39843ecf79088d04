//! Parser for the spinor text form.
//!
//! ```text
//! expr    := ['+'|'-'] term { ('+'|'-') term }
//! term    := factor { ['*'] factor }
//! factor  := primary [ '^' digits ]
//! primary := digits ['/' digits] | 'i' | 'x'digits | 'q'digits | '(' expr ')'
//! ```
//!
//! Juxtaposition is only implicit between adjacent primaries, so `2i` and
//! `1/2i` both denote a rational times `i`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{GaussianRational, SpinorMonomial, SpinorPoly};
use crate::error::{Error, Result};

pub fn parse_spinor(text: &str, rank: usize) -> Result<SpinorPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, rank };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

impl std::str::FromStr for SpinorPoly {
    type Err = Error;

    /// Infers the smallest rank that accommodates every variable.
    fn from_str(s: &str) -> Result<Self> {
        parse_spinor(s, infer_rank(s))
    }
}

/// Smallest `n` such that all `x`/`q` indices in `text` fit, at least 1.
pub fn infer_rank(text: &str) -> usize {
    let b = text.as_bytes();
    let mut n = 1;
    let mut k = 0;
    while k < b.len() {
        if b[k] == b'x' || b[k] == b'q' {
            let start = k + 1;
            let mut end = start;
            while end < b.len() && b[end].is_ascii_digit() {
                end += 1;
            }
            if let Ok(idx) = text[start..end].parse::<usize>() {
                let need = if b[k] == b'x' { idx.div_ceil(2) } else { idx };
                n = n.max(need);
            }
            k = end;
        } else {
            k += 1;
        }
    }
    n
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    rank: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as integer"))
    }

    fn expr(&mut self) -> Result<SpinorPoly> {
        let mut acc = SpinorPoly::zero(self.rank);
        let mut sign = GaussianRational::one();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = -sign;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc.add_scaled(&t, &sign);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = GaussianRational::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -GaussianRational::one();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_primary(c: u8) -> bool {
        c.is_ascii_digit() || matches!(c, b'i' | b'x' | b'q' | b'(')
    }

    fn term(&mut self) -> Result<SpinorPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                Some(c) if Self::starts_primary(c) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<SpinorPoly> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.digits()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn variable(&mut self, kind: u8) -> Result<SpinorPoly> {
        let start = self.pos;
        self.pos += 1;
        let idx = self.digits()?;
        let name = format!("{}{}", kind as char, idx);
        let limit = if kind == b'x' { 2 * self.rank } else { self.rank };
        let idx: usize = match idx.try_into() {
            Ok(v) if v >= 1 && v <= limit => v,
            Ok(0) => {
                return Err(Error::Syntax { pos: start, message: format!("variable {name}: indices start at 1") })
            }
            _ => return Err(Error::VariableOutOfRange { name, rank: self.rank }),
        };
        Ok(if kind == b'x' { SpinorPoly::x(self.rank, idx) } else { SpinorPoly::q(self.rank, idx) })
    }

    fn primary(&mut self) -> Result<SpinorPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let mut val = BigRational::from_integer(num);
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    val /= BigRational::from_integer(den);
                }
                Ok(SpinorPoly::constant(self.rank, GaussianRational::from_rational(val)))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(SpinorPoly::constant(self.rank, GaussianRational::i()))
            }
            Some(c @ (b'x' | b'q')) => self.variable(c),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Convenience for building monomials in tests and examples.
pub fn monomial(x: &[u32], q: &[u32]) -> SpinorMonomial {
    SpinorMonomial::new(x.to_vec(), q.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::from_parts(a, b, c, d)
    }

    #[test]
    fn parses_example_polynomial() {
        let p = parse_spinor("-i*x1*x2 + x1*x4 + x2*x3 + i*x3*x4", 2).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.coeff(&monomial(&[1, 1, 0, 0], &[0, 0])), -GaussianRational::i());
        assert_eq!(p.coeff(&monomial(&[0, 0, 1, 1], &[0, 0])), GaussianRational::i());
        assert_eq!(p.coeff(&monomial(&[1, 0, 0, 1], &[0, 0])), GaussianRational::one());
    }

    #[test]
    fn parses_coefficient_forms() {
        let p = parse_spinor("(1/2+1/2i)*x1^2*q3 - i*x4", 3).unwrap();
        assert_eq!(p.coeff(&monomial(&[2, 0, 0, 0, 0, 0], &[0, 0, 1])), gr(1, 2, 1, 2));
        assert_eq!(parse_spinor("1/2i", 1).unwrap(), SpinorPoly::constant(1, gr(0, 1, 1, 2)));
        assert_eq!(parse_spinor("2i*q2*x2", 2).unwrap().to_string(), "2i*x2*q2");
        assert!(parse_spinor("0", 1).unwrap().is_zero());
        assert_eq!(parse_spinor("(x1 + x2)^2 - x1^2 - x2^2", 1).unwrap().to_string(), "2*x1*x2");
    }

    #[test]
    fn errors_carry_position_and_index() {
        match parse_spinor("x1 + * x2", 1) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_spinor("x5", 2) {
            Err(Error::VariableOutOfRange { name, rank }) => {
                assert_eq!(name, "x5");
                assert_eq!(rank, 2);
            }
            other => panic!("expected range error, got {other:?}"),
        }
        assert!(matches!(parse_spinor("q3", 2), Err(Error::VariableOutOfRange { .. })));
        assert!(parse_spinor("1/0", 1).is_err());
        assert!(parse_spinor("(x1", 1).is_err());
    }

    #[test]
    fn infers_rank() {
        assert_eq!(infer_rank("x3*q1"), 2);
        assert_eq!(infer_rank("1"), 1);
        let p: SpinorPoly = "q3 + x1".parse().unwrap();
        assert_eq!(p.rank(), 3);
    }
}
