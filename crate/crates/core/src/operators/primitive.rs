use std::fmt;

use crate::arith::{GaussianRational, SpinorMonomial, SpinorPoly};
use crate::error::{Error, Result};

/// Generators of the operator algebra acting on polynomial parts.
///
/// Indices are 1-based: `1 ≤ m ≤ 2n` for x-variables, `1 ≤ j ≤ n` for
/// q-variables. `DqTwisted(j)` is `∂/∂q_j` acting on `f·exp(-|q|²/2)`,
/// which on the polynomial part is `f ↦ ∂f/∂q_j − q_j f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Primitive {
    MulX(usize),
    MulQ(usize),
    Dx(usize),
    DqTwisted(usize),
}

impl Primitive {
    pub fn validate(self, rank: usize) -> Result<()> {
        let (what, idx, limit) = match self {
            Primitive::MulX(m) => ("x", m, 2 * rank),
            Primitive::Dx(m) => ("x", m, 2 * rank),
            Primitive::MulQ(j) => ("q", j, rank),
            Primitive::DqTwisted(j) => ("q", j, rank),
        };
        if idx == 0 || idx > limit {
            return Err(Error::IndexOutOfRange { what, index: idx, rank });
        }
        Ok(())
    }

    pub(crate) fn x_shift(self) -> i32 {
        match self {
            Primitive::MulX(_) => 1,
            Primitive::Dx(_) => -1,
            _ => 0,
        }
    }

    pub(crate) fn q_raise(self) -> u32 {
        match self {
            Primitive::MulQ(_) | Primitive::DqTwisted(_) => 1,
            _ => 0,
        }
    }

    /// Adds `c · self(m)` into `out`.
    pub(crate) fn apply_monomial(self, m: &SpinorMonomial, c: &GaussianRational, out: &mut SpinorPoly) {
        match self {
            Primitive::MulX(k) => {
                let mut m2 = m.clone();
                *m2.x_mut(k) += 1;
                out.add_term(m2, c);
            }
            Primitive::MulQ(j) => {
                let mut m2 = m.clone();
                *m2.q_mut(j) += 1;
                out.add_term(m2, c);
            }
            Primitive::Dx(k) => {
                let e = m.x(k);
                if e > 0 {
                    let mut m2 = m.clone();
                    *m2.x_mut(k) -= 1;
                    out.add_term(m2, &c.scale_int(e.into()));
                }
            }
            Primitive::DqTwisted(j) => {
                let e = m.q(j);
                if e > 0 {
                    let mut m2 = m.clone();
                    *m2.q_mut(j) -= 1;
                    out.add_term(m2, &c.scale_int(e.into()));
                }
                let mut m2 = m.clone();
                *m2.q_mut(j) += 1;
                out.add_term(m2, &-c);
            }
        }
    }

    pub fn apply(self, s: &SpinorPoly) -> SpinorPoly {
        let mut out = SpinorPoly::zero(s.rank());
        for (m, c) in s.terms() {
            self.apply_monomial(m, c, &mut out);
        }
        out
    }
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Primitive::MulX(m) => write!(f, "x{m}"),
            Primitive::MulQ(j) => write!(f, "q{j}"),
            Primitive::Dx(m) => write!(f, "dx{m}"),
            Primitive::DqTwisted(j) => write!(f, "dq{j}"),
        }
    }
}
