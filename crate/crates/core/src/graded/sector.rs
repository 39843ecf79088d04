use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::SpinorMonomial;
use crate::error::{Error, Result};
use crate::operators::Grading;

/// Total q-degree parity selecting `S₊`, `S₋`, or both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Both,
}

impl Parity {
    pub fn admits(self, q_degree: u32) -> bool {
        match self {
            Parity::Even => q_degree % 2 == 0,
            Parity::Odd => q_degree % 2 == 1,
            Parity::Both => true,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::Both => Parity::Both,
        }
    }

    /// Parity after `k` parity-flipping applications.
    pub fn flip_times(self, k: u32) -> Self {
        if k % 2 == 1 {
            self.flip()
        } else {
            self
        }
    }

    /// Whether every degree admitted by `self` is admitted by `other`.
    pub fn within(self, other: Parity) -> bool {
        other == Parity::Both || self == other
    }
}

impl FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            "both" => Ok(Parity::Both),
            other => Err(Error::Syntax { pos: 0, message: format!("unknown parity {other:?}") }),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Both => "both",
        })
    }
}

/// A finite sector: x-homogeneity exactly `h`, total q-degree at most
/// `q_bound`, and the given q-parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SectorSpec {
    pub n: usize,
    pub h: u32,
    #[serde(rename = "Q")]
    pub q_bound: u32,
    pub parity: Parity,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, t| acc * (n - t) / (t + 1))
}

impl SectorSpec {
    pub fn new(n: usize, h: u32, q_bound: u32, parity: Parity) -> Self {
        assert!(n >= 1, "rank must be positive");
        Self { n, h, q_bound, parity }
    }

    /// Closed-form size `C(h+2n−1, 2n−1) · #{q-monomials of admitted degree ≤ Q}`.
    pub fn dimension(&self) -> usize {
        let n = self.n as u64;
        let x_count = binomial(u64::from(self.h) + 2 * n - 1, 2 * n - 1);
        let q_count: u64 = (0..=self.q_bound)
            .filter(|&d| self.parity.admits(d))
            .map(|d| binomial(u64::from(d) + n - 1, n - 1))
            .sum();
        (x_count * q_count) as usize
    }

    pub fn contains(&self, m: &SpinorMonomial) -> bool {
        m.rank() == self.n && m.x_degree() == self.h && m.q_degree() <= self.q_bound && self.parity.admits(m.q_degree())
    }

    /// Smallest sector receiving the image under an operator with grading `g`,
    /// or `None` when the x-degree would go negative (the image is zero).
    pub fn image(&self, g: Grading) -> Option<SectorSpec> {
        let h = i64::from(self.h) + i64::from(g.x_shift);
        if h < 0 {
            return None;
        }
        let parity = if g.flips_parity { self.parity.flip() } else { self.parity };
        Some(SectorSpec { n: self.n, h: h as u32, q_bound: self.q_bound + g.q_raise, parity })
    }

    pub fn with_q_bound(&self, q_bound: u32) -> Self {
        Self { q_bound, ..*self }
    }

    pub fn with_h(&self, h: u32) -> Self {
        Self { h, ..*self }
    }

    pub fn with_parity(&self, parity: Parity) -> Self {
        Self { parity, ..*self }
    }

    /// Whether `self` is a coordinate subspace of `other`.
    pub fn is_subsector_of(&self, other: &SectorSpec) -> bool {
        self.n == other.n && self.h == other.h && self.q_bound <= other.q_bound && self.parity.within(other.parity)
    }
}

impl fmt::Display for SectorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, h={}, Q={}, {})", self.n, self.h, self.q_bound, self.parity)
    }
}

/// Monomial basis of a sector in increasing monomial order.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    spec: SectorSpec,
    monomials: Vec<SpinorMonomial>,
    index: HashMap<SpinorMonomial, usize>,
}

fn compositions(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Every exponent vector of length `parts` with entries summing to `total`.
pub fn exponent_vectors(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    compositions(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

pub fn enumerate_basis(spec: SectorSpec) -> GradedBasis {
    let xs = exponent_vectors(spec.h, 2 * spec.n);
    let qs: Vec<Vec<u32>> = (0..=spec.q_bound)
        .filter(|&d| spec.parity.admits(d))
        .flat_map(|d| exponent_vectors(d, spec.n))
        .collect();
    let mut monomials: Vec<SpinorMonomial> = xs
        .iter()
        .flat_map(|x| qs.iter().map(move |q| SpinorMonomial::new(x.clone(), q.clone())))
        .collect();
    monomials.sort();
    let index = monomials.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
    GradedBasis { spec, monomials, index }
}

impl GradedBasis {
    pub fn spec(&self) -> SectorSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[SpinorMonomial] {
        &self.monomials
    }

    pub fn get(&self, k: usize) -> &SpinorMonomial {
        &self.monomials[k]
    }

    pub fn index_of(&self, m: &SpinorMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

impl PartialEq for GradedBasis {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for GradedBasis {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sectors() {
        let b = enumerate_basis(SectorSpec::new(1, 0, 2, Parity::Even));
        let names: Vec<String> = b.monomials().iter().map(ToString::to_string).collect();
        assert_eq!(names, ["1", "q1^2"]);

        let b = enumerate_basis(SectorSpec::new(2, 1, 0, Parity::Even));
        let names: Vec<String> = b.monomials().iter().map(ToString::to_string).collect();
        assert_eq!(names, ["x4", "x3", "x2", "x1"]);

        let spec = SectorSpec::new(2, 2, 1, Parity::Both);
        assert_eq!(spec.dimension(), 30);
        assert_eq!(enumerate_basis(spec).len(), 30);
    }

    #[test]
    fn enumeration_matches_closed_form() {
        for n in 1..=3 {
            for h in 0..=3 {
                for q in 0..=4 {
                    for parity in [Parity::Even, Parity::Odd, Parity::Both] {
                        let spec = SectorSpec::new(n, h, q, parity);
                        let b = enumerate_basis(spec);
                        assert_eq!(b.len(), spec.dimension(), "{spec}");
                        assert!(b.monomials().windows(2).all(|w| w[0] < w[1]));
                        assert!(b.monomials().iter().all(|m| spec.contains(m)));
                    }
                }
            }
        }
    }

    #[test]
    fn image_sectors() {
        let spec = SectorSpec::new(2, 0, 3, Parity::Even);
        let ds = Grading { x_shift: -1, q_raise: 1, flips_parity: true };
        assert_eq!(spec.image(ds), None);
        let xs = Grading { x_shift: 1, q_raise: 1, flips_parity: true };
        assert_eq!(spec.image(xs), Some(SectorSpec::new(2, 1, 4, Parity::Odd)));
    }
}
