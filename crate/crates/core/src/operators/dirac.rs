//! Clifford multiplication and the Dirac, raising, Euler and twistor
//! operators, both as direct maps on polynomials and as primitive words.
//!
//! Conventions (1-based, `n` the rank):
//! - `e_j · s = i q_j s` for `j ≤ n`, `e_{n+j} · s = ∂_{q_j} s` (twisted);
//! - `D_s = Σ_j (i q_j ∂_{x_{n+j}} − ∂_{x_j} ∂_{q_j})`;
//! - `X_s = Σ_j (x_{n+j} ∂_{q_j} + i x_j q_j)`;
//! - `E_s = Σ_m x_m ∂_{x_m}`;
//! - `(T_s s)_l = ∂_{x_l} s − (i/n) e_l · D_s s`.

use super::{LinearOperator, Primitive};
use crate::arith::{GaussianRational, SpinorMonomial, SpinorPoly};
use crate::error::{Error, Result};

fn check_direction(l: usize, rank: usize) -> Result<()> {
    if l == 0 || l > 2 * rank {
        return Err(Error::IndexOutOfRange { what: "direction", index: l, rank });
    }
    Ok(())
}

/// Symplectic Clifford multiplication by the basis vector `e_l`.
pub fn clifford(l: usize, s: &SpinorPoly) -> Result<SpinorPoly> {
    let n = s.rank();
    check_direction(l, n)?;
    if l <= n {
        Ok(Primitive::MulQ(l).apply(s).scale(&GaussianRational::i()))
    } else {
        Ok(Primitive::DqTwisted(l - n).apply(s))
    }
}

fn shifted(m: &SpinorMonomial, edit: impl FnOnce(&mut SpinorMonomial)) -> SpinorMonomial {
    let mut m2 = m.clone();
    edit(&mut m2);
    m2
}

/// Symplectic Dirac operator.
pub fn apply_ds(s: &SpinorPoly) -> SpinorPoly {
    let n = s.rank();
    let i = GaussianRational::i();
    let mut out = SpinorPoly::zero(n);
    for (m, c) in s.terms() {
        for j in 1..=n {
            let e = m.x(n + j);
            if e > 0 {
                let m2 = shifted(m, |t| {
                    *t.x_mut(n + j) -= 1;
                    *t.q_mut(j) += 1;
                });
                out.add_term(m2, &(c * &i).scale_int(e.into()));
            }
            let ex = m.x(j);
            if ex > 0 {
                // −∂_{x_j}(∂_{q_j} − q_j)
                let eq = m.q(j);
                if eq > 0 {
                    let m2 = shifted(m, |t| {
                        *t.x_mut(j) -= 1;
                        *t.q_mut(j) -= 1;
                    });
                    out.add_term(m2, &c.scale_int(-i64::from(ex * eq)));
                }
                let m2 = shifted(m, |t| {
                    *t.x_mut(j) -= 1;
                    *t.q_mut(j) += 1;
                });
                out.add_term(m2, &c.scale_int(ex.into()));
            }
        }
    }
    out
}

/// Raising operator `X_s`, the Howe-dual partner of `D_s`.
pub fn apply_xs(s: &SpinorPoly) -> SpinorPoly {
    let n = s.rank();
    let i = GaussianRational::i();
    let mut out = SpinorPoly::zero(n);
    for (m, c) in s.terms() {
        for j in 1..=n {
            let eq = m.q(j);
            if eq > 0 {
                let m2 = shifted(m, |t| {
                    *t.x_mut(n + j) += 1;
                    *t.q_mut(j) -= 1;
                });
                out.add_term(m2, &c.scale_int(eq.into()));
            }
            let m2 = shifted(m, |t| {
                *t.x_mut(n + j) += 1;
                *t.q_mut(j) += 1;
            });
            out.add_term(m2, &-c);
            let m2 = shifted(m, |t| {
                *t.x_mut(j) += 1;
                *t.q_mut(j) += 1;
            });
            out.add_term(m2, &(c * &i));
        }
    }
    out
}

/// Euler operator: multiplies each term by its x-degree.
pub fn apply_es(s: &SpinorPoly) -> SpinorPoly {
    let mut out = SpinorPoly::zero(s.rank());
    for (m, c) in s.terms() {
        out.add_term(m.clone(), &c.scale_int(m.x_degree().into()));
    }
    out
}

/// `−(i/n)`, the Clifford-term coefficient of the twistor operator.
fn twistor_factor(n: usize) -> GaussianRational {
    GaussianRational::from_parts(0, 1, -1, n as i64)
}

/// Component `l` of the twistor operator.
pub fn twistor_component(l: usize, s: &SpinorPoly) -> Result<SpinorPoly> {
    let n = s.rank();
    check_direction(l, n)?;
    let ds = apply_ds(s);
    let mut out = Primitive::Dx(l).apply(s);
    out.add_scaled(&clifford(l, &ds)?, &twistor_factor(n));
    Ok(out)
}

/// All `2n` components of `T_s s`, against the coframe `ε¹..ε²ⁿ`.
pub fn apply_ts(s: &SpinorPoly) -> Vec<SpinorPoly> {
    let n = s.rank();
    let ds = apply_ds(s);
    (1..=2 * n)
        .map(|l| {
            let mut out = Primitive::Dx(l).apply(s);
            out.add_scaled(&clifford(l, &ds).expect("direction in range"), &twistor_factor(n));
            out
        })
        .collect()
}

/// Words for `e_l` together with its scalar factor.
fn clifford_word(l: usize, n: usize) -> (GaussianRational, Primitive) {
    if l <= n {
        (GaussianRational::i(), Primitive::MulQ(l))
    } else {
        (GaussianRational::one(), Primitive::DqTwisted(l - n))
    }
}

pub fn clifford_operator(l: usize, n: usize) -> Result<LinearOperator> {
    check_direction(l, n)?;
    let (c, p) = clifford_word(l, n);
    LinearOperator::new(n, [(c, vec![p])])
}

pub fn dirac_operator(n: usize) -> LinearOperator {
    let i = GaussianRational::i();
    let terms = (1..=n).flat_map(|j| {
        [
            (i.clone(), vec![Primitive::MulQ(j), Primitive::Dx(n + j)]),
            (-GaussianRational::one(), vec![Primitive::Dx(j), Primitive::DqTwisted(j)]),
        ]
    });
    LinearOperator::new(n, terms.collect::<Vec<_>>()).expect("indices in range")
}

pub fn raising_operator(n: usize) -> LinearOperator {
    let i = GaussianRational::i();
    let terms = (1..=n).flat_map(|j| {
        [
            (GaussianRational::one(), vec![Primitive::MulX(n + j), Primitive::DqTwisted(j)]),
            (i.clone(), vec![Primitive::MulX(j), Primitive::MulQ(j)]),
        ]
    });
    LinearOperator::new(n, terms.collect::<Vec<_>>()).expect("indices in range")
}

pub fn euler_operator(n: usize) -> LinearOperator {
    let terms = (1..=2 * n).map(|m| (GaussianRational::one(), vec![Primitive::MulX(m), Primitive::Dx(m)]));
    LinearOperator::new(n, terms.collect::<Vec<_>>()).expect("indices in range")
}

pub fn twistor_operator(l: usize, n: usize) -> Result<LinearOperator> {
    check_direction(l, n)?;
    let dx = LinearOperator::primitive(n, Primitive::Dx(l))?;
    let cl = clifford_operator(l, n)?.compose(&dirac_operator(n))?;
    dx.add(&cl.scale(&twistor_factor(n)))
}
