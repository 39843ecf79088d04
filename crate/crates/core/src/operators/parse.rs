//! Operator words: `Ds`, `Xs`, `Es`, `Ts`, `cl(l)`, `mp(X|Y|Z,j,k)`,
//! composed by whitespace and applied right-to-left (`Ds Xs` is `D_s ∘ X_s`).

use std::fmt;

use super::dirac::{self, clifford_operator, dirac_operator, euler_operator, raising_operator, twistor_operator};
use super::{mp_generator, LinearOperator, MpKind};
use crate::arith::SpinorPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Ds,
    Xs,
    Es,
    Ts,
    Cl(usize),
    Mp(MpKind, usize, usize),
}

/// A parsed composition of operator factors. `Ts` may only appear
/// leftmost, where it makes the result vector-valued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorExpr {
    rank: usize,
    factors: Vec<Factor>,
}

pub fn parse_operator(text: &str, rank: usize) -> Result<OperatorExpr> {
    let mut factors = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let mut depth = 0i32;
        while pos < bytes.len() && (depth > 0 || !bytes[pos].is_ascii_whitespace()) {
            match bytes[pos] {
                b'(' => depth += 1,
                b')' => depth -= 1,
                _ => {}
            }
            pos += 1;
        }
        if depth != 0 {
            return Err(Error::Syntax { pos: start, message: "unbalanced parentheses".into() });
        }
        factors.push(parse_factor(&text[start..pos], start, rank)?);
    }
    if factors.is_empty() {
        return Err(Error::Syntax { pos: 0, message: "empty operator".into() });
    }
    if let Some(k) = factors.iter().skip(1).position(|f| *f == Factor::Ts) {
        return Err(Error::Syntax {
            pos: k + 1,
            message: "Ts is vector-valued and may only appear leftmost".into(),
        });
    }
    Ok(OperatorExpr { rank, factors })
}

fn parse_args(token: &str, pos: usize) -> Result<Vec<&str>> {
    let open = token.find('(').ok_or_else(|| Error::Syntax { pos, message: format!("expected arguments in {token:?}") })?;
    if !token.ends_with(')') {
        return Err(Error::Syntax { pos: pos + token.len(), message: "expected ')'".into() });
    }
    Ok(token[open + 1..token.len() - 1].split(',').map(str::trim).collect())
}

fn parse_index(s: &str, pos: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Syntax { pos, message: format!("expected an index, found {s:?}") })
}

fn parse_factor(token: &str, pos: usize, rank: usize) -> Result<Factor> {
    let f = match token {
        "Ds" => Factor::Ds,
        "Xs" => Factor::Xs,
        "Es" => Factor::Es,
        "Ts" => Factor::Ts,
        t if t.starts_with("cl(") => {
            let args = parse_args(t, pos)?;
            if args.len() != 1 {
                return Err(Error::Syntax { pos, message: "cl takes one index".into() });
            }
            let l = parse_index(args[0], pos)?;
            if l == 0 || l > 2 * rank {
                return Err(Error::IndexOutOfRange { what: "direction", index: l, rank });
            }
            Factor::Cl(l)
        }
        t if t.starts_with("mp(") => {
            let args = parse_args(t, pos)?;
            if args.len() != 3 {
                return Err(Error::Syntax { pos, message: "mp takes kind,j,k".into() });
            }
            let kind: MpKind = args[0].parse().map_err(|_| Error::Syntax {
                pos,
                message: format!("unknown generator kind {:?}", args[0]),
            })?;
            let j = parse_index(args[1], pos)?;
            let k = parse_index(args[2], pos)?;
            for idx in [j, k] {
                if idx == 0 || idx > rank {
                    return Err(Error::IndexOutOfRange { what: "generator", index: idx, rank });
                }
            }
            Factor::Mp(kind, j, k)
        }
        other => return Err(Error::Syntax { pos, message: format!("unknown operator {other:?}") }),
    };
    Ok(f)
}

impl OperatorExpr {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_vector_valued(&self) -> bool {
        self.factors.first() == Some(&Factor::Ts)
    }

    /// Applies the composition; yields `2n` components when headed by `Ts`.
    pub fn apply(&self, s: &SpinorPoly) -> Result<Vec<SpinorPoly>> {
        if s.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: s.rank() });
        }
        let mut cur = s.clone();
        for f in self.factors.iter().rev() {
            cur = match *f {
                Factor::Ds => dirac::apply_ds(&cur),
                Factor::Xs => dirac::apply_xs(&cur),
                Factor::Es => dirac::apply_es(&cur),
                Factor::Cl(l) => dirac::clifford(l, &cur)?,
                Factor::Mp(kind, j, k) => mp_generator(kind, j, k, self.rank)?.apply(&cur)?,
                Factor::Ts => return Ok(dirac::apply_ts(&cur)),
            };
        }
        Ok(vec![cur])
    }

    /// The composition as primitive-word operators, one per output component.
    pub fn components(&self) -> Result<Vec<LinearOperator>> {
        let n = self.rank;
        let mut tail = LinearOperator::identity(n);
        for f in self.factors.iter().rev() {
            let op = match *f {
                Factor::Ds => dirac_operator(n),
                Factor::Xs => raising_operator(n),
                Factor::Es => euler_operator(n),
                Factor::Cl(l) => clifford_operator(l, n)?,
                Factor::Mp(kind, j, k) => mp_generator(kind, j, k, n)?,
                Factor::Ts => {
                    return (1..=2 * n).map(|l| twistor_operator(l, n)?.compose(&tail)).collect();
                }
            };
            tail = op.compose(&tail)?;
        }
        Ok(vec![tail])
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Ds => f.write_str("Ds"),
            Factor::Xs => f.write_str("Xs"),
            Factor::Es => f.write_str("Es"),
            Factor::Ts => f.write_str("Ts"),
            Factor::Cl(l) => write!(f, "cl({l})"),
            Factor::Mp(k, a, b) => write!(f, "mp({k},{a},{b})"),
        }
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}
