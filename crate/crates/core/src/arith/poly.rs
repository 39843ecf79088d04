use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::{GaussianRational, SpinorMonomial};
use crate::error::{Error, Result};

/// Polynomial part `f` of a symplectic spinor `f · exp(-|q|²/2)`.
///
/// The Gaussian weight is never stored. Terms are kept sparse: a stored
/// coefficient is never zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpinorPoly {
    rank: usize,
    terms: BTreeMap<SpinorMonomial, GaussianRational>,
}

impl SpinorPoly {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, GaussianRational::one())
    }

    pub fn constant(rank: usize, c: GaussianRational) -> Self {
        Self::term(c, SpinorMonomial::one(rank))
    }

    pub fn term(c: GaussianRational, m: SpinorMonomial) -> Self {
        let mut p = Self::zero(m.rank());
        p.add_term(m, &c);
        p
    }

    pub fn monomial(m: SpinorMonomial) -> Self {
        Self::term(GaussianRational::one(), m)
    }

    /// The variable `x_m` (1-based). Panics if `m` is out of range.
    pub fn x(rank: usize, m: usize) -> Self {
        let mut mono = SpinorMonomial::one(rank);
        *mono.x_mut(m) = 1;
        Self::monomial(mono)
    }

    /// The variable `q_j` (1-based). Panics if `j` is out of range.
    pub fn q(rank: usize, j: usize) -> Self {
        let mut mono = SpinorMonomial::one(rank);
        *mono.q_mut(j) = 1;
        Self::monomial(mono)
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SpinorMonomial, GaussianRational)>,
    {
        let mut p = Self::zero(rank);
        for (m, c) in terms {
            if m.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: m.rank() });
            }
            p.add_term(m, &c);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SpinorMonomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &SpinorMonomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Adds `c · m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: SpinorMonomial, c: &GaussianRational) {
        debug_assert_eq!(m.rank(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    /// `self + c · other`.
    pub fn combine(&self, other: &Self, c: &GaussianRational) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        out.add_scaled(other, c);
        Ok(out)
    }

    /// In-place `self += c · other`; ranks must agree.
    pub(crate) fn add_scaled(&mut self, other: &Self, c: &GaussianRational) {
        debug_assert_eq!(self.rank, other.rank);
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), &(a * c));
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &GaussianRational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &-GaussianRational::one())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-GaussianRational::one())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                out.add_term(ma.mul(mb), &(a * b));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.rank);
        for _ in 0..e {
            out = out.mul(self).expect("same rank");
        }
        out
    }

    /// Highest total q-degree among the terms, `None` for the zero polynomial.
    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(SpinorMonomial::q_degree).max()
    }

    /// Returns the common x-degree if every term has the same one.
    pub fn x_homogeneity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(SpinorMonomial::x_degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

/// Canonical text form, terms in descending monomial order.
impl fmt::Display for SpinorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative_lead();
            let mag = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SpinorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
