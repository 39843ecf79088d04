//! Exact arithmetic in the Gaussian rationals ℚ(i).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A complex number `re + im·i` with arbitrary-precision rational parts.
///
/// Both parts are kept in lowest terms with a positive denominator, so
/// structural equality coincides with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field operation dispatch; division by zero is reported, never panics.
pub fn gr_arith(a: &GaussianRational, b: &GaussianRational, kind: ArithKind) -> Result<GaussianRational> {
    match kind {
        ArithKind::Add => Ok(a + b),
        ArithKind::Sub => Ok(a - b),
        ArithKind::Mul => Ok(a * b),
        ArithKind::Div => a.checked_div(b),
    }
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_integer(v: i64) -> Self {
        Self { re: BigRational::from_integer(v.into()), im: BigRational::zero() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self { re: BigRational::new(num.into(), den.into()), im: BigRational::zero() }
    }

    /// `(a/b) + (c/d)·i`.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self {
            re: BigRational::new(a.into(), b.into()),
            im: BigRational::new(c.into(), d.into()),
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|²`, a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigRational::from_integer(k.into());
        Self { re: &self.re * &k, im: &self.im * &k }
    }

    /// Least common multiple of the two denominators.
    pub fn denom_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// Sign used when a coefficient is printed with a leading `+`/`-`.
    pub(crate) fn is_negative_lead(&self) -> bool {
        if !self.re.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::from_rational(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Imaginary part as printed before the `i`; unit magnitudes are elided.
fn fmt_imag(im: &BigRational) -> String {
    if im.is_one() {
        "i".to_string()
    } else if (-im).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", fmt_rational(im))
    }
}

/// Text form: `a`, `a/b`, `ci`, or `(a/b+c/d i)` without the space.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => f.write_str(&fmt_rational(&self.re)),
            (true, false) => f.write_str(&fmt_imag(&self.im)),
            (false, false) => {
                let im = fmt_imag(&self.im);
                let sep = if im.starts_with('-') { "" } else { "+" };
                write!(f, "({}{}{})", fmt_rational(&self.re), sep, im)
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::from_parts(a, b, c, d)
    }

    #[test]
    fn conjugate_product_is_norm() {
        let a = gr(1, 1, 1, 1);
        let b = gr(1, 1, -1, 1);
        assert_eq!(gr_arith(&a, &b, ArithKind::Mul).unwrap(), GaussianRational::from_integer(2));
    }

    #[test]
    fn inverse_of_i() {
        let one = GaussianRational::one();
        let r = gr_arith(&one, &GaussianRational::i(), ArithKind::Div).unwrap();
        assert_eq!(r, -GaussianRational::i());
    }

    #[test]
    fn conjugate_sum() {
        let a = gr(1, 2, 1, 3);
        let b = gr(1, 2, -1, 3);
        assert_eq!(gr_arith(&a, &b, ArithKind::Add).unwrap(), GaussianRational::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let r = gr_arith(&GaussianRational::one(), &GaussianRational::zero(), ArithKind::Div);
        assert_eq!(r, Err(Error::DivisionByZero));
    }

    #[test]
    fn zero_is_unique() {
        let z = gr(3, 4, 0, 7) - gr(6, 8, 0, 1);
        assert_eq!(z, GaussianRational::zero());
        assert!(z.re().denom().is_one());
        assert!(z.im().denom().is_one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(gr(1, 2, 1, 2).to_string(), "(1/2+1/2i)");
        assert_eq!(gr(-3, 1, -1, 1).to_string(), "(-3-i)");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!(gr(0, 1, 2, 1).to_string(), "2i");
        assert_eq!(gr(-5, 3, 0, 1).to_string(), "-5/3");
    }
}
