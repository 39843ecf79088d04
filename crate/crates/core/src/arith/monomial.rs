use std::cmp::Ordering;
use std::fmt;

/// A monomial `x^a · q^b` in the variables `x1..x{2n}` and `q1..q{n}`.
///
/// Ordering is graded lexicographic over the whole exponent vector, with
/// the x-block preceding the q-block and lower indices more significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpinorMonomial {
    x: Vec<u32>,
    q: Vec<u32>,
}

impl SpinorMonomial {
    pub fn one(rank: usize) -> Self {
        Self { x: vec![0; 2 * rank], q: vec![0; rank] }
    }

    /// Panics if `x.len() != 2 * q.len()`.
    pub fn new(x: Vec<u32>, q: Vec<u32>) -> Self {
        assert_eq!(x.len(), 2 * q.len(), "x-exponents must have length 2n");
        Self { x, q }
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn x_exps(&self) -> &[u32] {
        &self.x
    }

    pub fn q_exps(&self) -> &[u32] {
        &self.q
    }

    /// Exponent of `x_m`, 1-based.
    pub fn x(&self, m: usize) -> u32 {
        self.x[m - 1]
    }

    /// Exponent of `q_j`, 1-based.
    pub fn q(&self, j: usize) -> u32 {
        self.q[j - 1]
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn q_degree(&self) -> u32 {
        self.q.iter().sum()
    }

    pub fn degree(&self) -> u32 {
        self.x_degree() + self.q_degree()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    pub(crate) fn x_mut(&mut self, m: usize) -> &mut u32 {
        &mut self.x[m - 1]
    }

    pub(crate) fn q_mut(&mut self, j: usize) -> &mut u32 {
        &mut self.q[j - 1]
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        Self {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            q: self.q.iter().zip(&other.q).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Ord for SpinorMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.q.cmp(&other.q))
    }
}

impl PartialOrd for SpinorMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `x1^2*q3`; the unit monomial prints as `1`.
impl fmt::Display for SpinorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let vars = self
            .x
            .iter()
            .enumerate()
            .map(|(k, e)| ('x', k + 1, *e))
            .chain(self.q.iter().enumerate().map(|(k, e)| ('q', k + 1, *e)));
        for (name, idx, e) in vars {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{name}{idx}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SpinorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let a = SpinorMonomial::new(vec![2, 0], vec![0]);
        let b = SpinorMonomial::new(vec![1, 1], vec![0]);
        let c = SpinorMonomial::new(vec![0, 0], vec![3]);
        let d = SpinorMonomial::new(vec![1, 0], vec![1]);
        assert!(a > b);
        assert!(c > a, "higher total degree wins");
        assert!(d > SpinorMonomial::new(vec![0, 1], vec![1]));
        assert!(b > SpinorMonomial::new(vec![0, 1], vec![1]), "x-block decides first");
    }

    #[test]
    fn display() {
        assert_eq!(SpinorMonomial::new(vec![2, 0, 0, 0, 0, 0], vec![0, 0, 1]).to_string(), "x1^2*q3");
        assert_eq!(SpinorMonomial::one(2).to_string(), "1");
    }
}
