use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::{Grading, Primitive, SpinorOperator};
use crate::arith::{GaussianRational, SpinorPoly};
use crate::error::{Error, Result};

/// Word in the primitives; acts right-to-left.
pub type Word = Vec<Primitive>;

/// A formal finite sum `Σ c_k · w_k` of primitive words.
///
/// Words are kept merged (one coefficient per distinct word, no zeros) but
/// are not normal-ordered: two operators are compared by evaluating them on
/// graded bases.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearOperator {
    rank: usize,
    terms: BTreeMap<Word, GaussianRational>,
}

impl LinearOperator {
    pub fn new<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GaussianRational, Word)>,
    {
        let mut op = Self::zero(rank);
        for (c, w) in terms {
            for p in &w {
                p.validate(rank)?;
            }
            op.push(c, w);
        }
        Ok(op)
    }

    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn identity(rank: usize) -> Self {
        Self::scalar(rank, GaussianRational::one())
    }

    pub fn scalar(rank: usize, c: GaussianRational) -> Self {
        let mut op = Self::zero(rank);
        op.push(c, Vec::new());
        op
    }

    pub fn primitive(rank: usize, p: Primitive) -> Result<Self> {
        Self::new(rank, [(GaussianRational::one(), vec![p])])
    }

    pub(crate) fn push(&mut self, c: GaussianRational, w: Word) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.push(c.clone(), w.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, a) in &self.terms {
            out.push(a * c, w.clone());
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (wa, a) in &self.terms {
            for (wb, b) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.push(a * b, w);
            }
        }
        Ok(out)
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn apply(&self, s: &SpinorPoly) -> Result<SpinorPoly> {
        if s.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: s.rank() });
        }
        let mut out = SpinorPoly::zero(self.rank);
        for (w, c) in &self.terms {
            let mut cur = s.clone();
            for p in w.iter().rev() {
                if cur.is_zero() {
                    break;
                }
                cur = p.apply(&cur);
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }

    /// Grading read off the words; fails if words disagree on x-shift or
    /// q-parity change.
    pub fn word_grading(&self) -> Result<Grading> {
        let mut grading: Option<Grading> = None;
        for w in self.terms.keys() {
            let x_shift: i32 = w.iter().map(|p| p.x_shift()).sum();
            let q_raise: u32 = w.iter().map(|p| p.q_raise()).sum();
            let g = Grading { x_shift, q_raise, flips_parity: q_raise % 2 == 1 };
            grading = Some(match grading {
                None => g,
                Some(prev) => {
                    if prev.x_shift != g.x_shift || prev.flips_parity != g.flips_parity {
                        return Err(Error::Ungraded(format!("mixed word gradings in {self}")));
                    }
                    Grading { q_raise: prev.q_raise.max(g.q_raise), ..prev }
                }
            });
        }
        Ok(grading.unwrap_or(Grading { x_shift: 0, q_raise: 0, flips_parity: false }))
    }
}

impl SpinorOperator for LinearOperator {
    fn rank(&self) -> usize {
        self.rank
    }

    fn grading(&self) -> Result<Grading> {
        self.word_grading()
    }

    fn apply(&self, s: &SpinorPoly) -> Result<SpinorPoly> {
        LinearOperator::apply(self, s)
    }

    fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for p in w {
                write!(f, "·{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_spinor;

    #[test]
    fn heisenberg_relation_for_twisted_derivative() {
        // [d_q, q] = 1 survives the Gaussian twist
        let n = 1;
        let dq = LinearOperator::primitive(n, Primitive::DqTwisted(1)).unwrap();
        let q = LinearOperator::primitive(n, Primitive::MulQ(1)).unwrap();
        let c = dq.commutator(&q).unwrap();
        let s = parse_spinor("3*x1*q1^2 - i*x2 + 1/2", n).unwrap();
        assert_eq!(c.apply(&s).unwrap(), s);
    }

    #[test]
    fn self_commutator_vanishes() {
        let n = 2;
        let a = LinearOperator::new(
            n,
            [
                (GaussianRational::i(), vec![Primitive::MulQ(1), Primitive::Dx(3)]),
                (GaussianRational::one(), vec![Primitive::DqTwisted(2)]),
            ],
        )
        .unwrap();
        let c = a.commutator(&a).unwrap();
        assert!(c.is_zero(), "formal cancellation: {c}");
    }

    #[test]
    fn cancelled_words_are_dropped() {
        let n = 1;
        let a = LinearOperator::primitive(n, Primitive::MulX(1)).unwrap();
        assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn rank_checks() {
        let a = LinearOperator::identity(1);
        let b = LinearOperator::identity(2);
        assert!(a.compose(&b).is_err());
        assert!(a.apply(&SpinorPoly::one(2)).is_err());
        assert!(LinearOperator::primitive(1, Primitive::MulX(3)).is_err());
    }

    #[test]
    fn mixed_grading_is_rejected() {
        let n = 1;
        let a = LinearOperator::primitive(n, Primitive::MulX(1)).unwrap();
        let b = LinearOperator::identity(n);
        assert!(a.add(&b).unwrap().word_grading().is_err());
    }
}
