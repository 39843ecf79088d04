//! Infinitesimal metaplectic action on polynomial spinors.
//!
//! For a matrix `A ∈ sp(2n, ℝ)` the action is the sum of a base part, the
//! vector field `−Σ_m (A x)_m ∂_{x_m}`, and a spinor part: the symmetrised
//! quadratic Clifford element `σ_A` with `[σ_A, e_v·] = (A v)·`. Writing
//! `Ω_{ab} = ω(e_a, e_b)`, that element is
//!
//! ```text
//! σ_A = Σ_{a,b} M_ab · ½(e_a e_b + e_b e_a),   M = −(i/2) A Ω,
//! ```
//!
//! which for `A = X_jj` reduces to `½ + q_j ∂_{q_j}`.

use std::fmt;
use std::str::FromStr;

use super::{LinearOperator, Primitive};
use crate::arith::GaussianRational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MpKind {
    X,
    Y,
    Z,
}

impl FromStr for MpKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "X" => Ok(MpKind::X),
            "Y" => Ok(MpKind::Y),
            "Z" => Ok(MpKind::Z),
            other => Err(Error::Syntax { pos: 0, message: format!("unknown generator kind {other:?}") }),
        }
    }
}

impl fmt::Display for MpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MpKind::X => "X",
            MpKind::Y => "Y",
            MpKind::Z => "Z",
        };
        f.write_str(s)
    }
}

/// The `2n × 2n` matrix of a generator, 0-based entries.
///
/// `X_jk = E_{j,k} − E_{n+k,n+j}`, `Y_jk = E_{j,n+k} + E_{k,n+j}`,
/// `Z_jk = E_{n+j,k} + E_{n+k,j}`.
pub fn generator_matrix(kind: MpKind, j: usize, k: usize, n: usize) -> Result<Vec<Vec<i64>>> {
    for idx in [j, k] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange { what: "generator", index: idx, rank: n });
        }
    }
    let (a, b) = (j - 1, k - 1);
    let mut m = vec![vec![0i64; 2 * n]; 2 * n];
    match kind {
        MpKind::X => {
            m[a][b] += 1;
            m[n + b][n + a] -= 1;
        }
        MpKind::Y => {
            m[a][n + b] += 1;
            m[b][n + a] += 1;
        }
        MpKind::Z => {
            m[n + a][b] += 1;
            m[n + b][a] += 1;
        }
    }
    Ok(m)
}

/// `ω(e_a, e_b)` with `ω(e_j, e_{n+j}) = 1`, 0-based.
pub fn omega(a: usize, b: usize, n: usize) -> i64 {
    if a < n && b == a + n {
        1
    } else if a >= n && b + n == a {
        -1
    } else {
        0
    }
}

fn clifford_factor(a: usize, n: usize) -> (GaussianRational, Primitive) {
    if a < n {
        (GaussianRational::i(), Primitive::MulQ(a + 1))
    } else {
        (GaussianRational::one(), Primitive::DqTwisted(a - n + 1))
    }
}

/// Operator of the generator `kind_{jk}` on polynomial spinors.
pub fn mp_generator(kind: MpKind, j: usize, k: usize, n: usize) -> Result<LinearOperator> {
    let a = generator_matrix(kind, j, k, n)?;
    let dim = 2 * n;
    let mut terms = Vec::new();

    for (m, row) in a.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v != 0 {
                terms.push((GaussianRational::from_integer(-v), vec![Primitive::MulX(c + 1), Primitive::Dx(m + 1)]));
            }
        }
    }

    // M = −(i/2) A Ω
    let half_neg_i = GaussianRational::from_parts(0, 1, -1, 2);
    let half = GaussianRational::from_ratio(1, 2);
    for p in 0..dim {
        for r in 0..dim {
            let a_omega: i64 = (0..dim).map(|t| a[p][t] * omega(t, r, n)).sum();
            if a_omega == 0 {
                continue;
            }
            let m_pr = half_neg_i.scale_int(a_omega);
            let (cp, wp) = clifford_factor(p, n);
            let (cr, wr) = clifford_factor(r, n);
            let coeff = &(&m_pr * &half) * &(&cp * &cr);
            terms.push((coeff.clone(), vec![wp, wr]));
            terms.push((coeff, vec![wr, wp]));
        }
    }
    LinearOperator::new(n, terms)
}

/// One generator per basis element of `sp(2n)`: every `X_jk`, and `Y_jk`,
/// `Z_jk` for `j ≤ k`.
pub fn all_generators(n: usize) -> Vec<(MpKind, usize, usize)> {
    let mut out = Vec::new();
    for j in 1..=n {
        for k in 1..=n {
            out.push((MpKind::X, j, k));
        }
    }
    for kind in [MpKind::Y, MpKind::Z] {
        for j in 1..=n {
            for k in j..=n {
                out.push((kind, j, k));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_spinor, SpinorPoly};
    use crate::operators::dirac::{apply_ds, apply_xs};

    fn is_symplectic(a: &[Vec<i64>], n: usize) -> bool {
        // Aᵀ Ω + Ω A = 0
        let d = 2 * n;
        (0..d).all(|r| {
            (0..d).all(|c| {
                let lhs: i64 = (0..d).map(|t| a[t][r] * omega(t, c, n)).sum();
                let rhs: i64 = (0..d).map(|t| omega(r, t, n) * a[t][c]).sum();
                lhs + rhs == 0
            })
        })
    }

    #[test]
    fn generator_matrices_are_symplectic() {
        for n in 1..=3 {
            for (kind, j, k) in all_generators(n) {
                let a = generator_matrix(kind, j, k, n).unwrap();
                assert!(is_symplectic(&a, n), "{kind}{j}{k} for n={n}");
            }
        }
        assert_eq!(all_generators(2).len(), 2 * 4 + 2);
    }

    #[test]
    fn diagonal_generator_matches_explicit_formula() {
        // ½ − x_j∂_{x_j} + x_{n+j}∂_{x_{n+j}} + q_j∂_{q_j}, with ∂_q twisted
        let n = 2;
        let s = parse_spinor("x1^2*q1 + (2-i)*x3*x2*q1^3 + q2^2 - 4*x4", n).unwrap();
        for j in 1..=n {
            let g = mp_generator(MpKind::X, j, j, n).unwrap();
            let mut expected = s.scale(&GaussianRational::from_ratio(1, 2));
            let dxj = Primitive::MulX(j).apply(&Primitive::Dx(j).apply(&s));
            let dxnj = Primitive::MulX(n + j).apply(&Primitive::Dx(n + j).apply(&s));
            let qdq = Primitive::MulQ(j).apply(&Primitive::DqTwisted(j).apply(&s));
            expected = expected.sub(&dxj).unwrap().add(&dxnj).unwrap().add(&qdq).unwrap();
            assert_eq!(g.apply(&s).unwrap(), expected);
        }
    }

    #[test]
    fn diagonal_generator_on_constant() {
        // q_j ∂_{q_j} exp(-|q|²/2) = −q_j² exp(-|q|²/2)
        for n in 1..=3 {
            for j in 1..=n {
                let g = mp_generator(MpKind::X, j, j, n).unwrap();
                let expected = parse_spinor(&format!("1/2 - q{j}^2"), n).unwrap();
                assert_eq!(g.apply(&SpinorPoly::one(n)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn generators_commute_with_dirac_and_raising() {
        let n = 2;
        let s = parse_spinor("x1*x4*q2 - i*x2^2*q1^2 + 3*x3 + (1/3)*q1*q2*x1", n).unwrap();
        for (kind, j, k) in all_generators(n) {
            let g = mp_generator(kind, j, k, n).unwrap();
            let gd = g.apply(&apply_ds(&s)).unwrap();
            let dg = apply_ds(&g.apply(&s).unwrap());
            assert_eq!(gd, dg, "D_s with {kind}{j}{k}");
            let gx = g.apply(&apply_xs(&s)).unwrap();
            let xg = apply_xs(&g.apply(&s).unwrap());
            assert_eq!(gx, xg, "X_s with {kind}{j}{k}");
        }
    }

    #[test]
    fn out_of_range() {
        assert!(mp_generator(MpKind::Y, 0, 1, 2).is_err());
        assert!(mp_generator(MpKind::Z, 1, 3, 2).is_err());
        assert!("W".parse::<MpKind>().is_err());
    }
}
