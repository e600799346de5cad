use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Rational, ScalarError};

/// Radicand used when nothing else is configured.
pub const DEFAULT_D: u32 = 3;

/// Checks that `d` can serve as the radicand of a quadratic extension:
/// at least 2 and square-free.
pub fn validate_d(d: u32) -> Result<u32, ScalarError> {
    if d < 2 {
        return Err(ScalarError::InvalidRadicand(d));
    }
    let mut p = 2u32;
    while p.saturating_mul(p) <= d {
        if d.is_multiple_of(p * p) {
            return Err(ScalarError::InvalidRadicand(d));
        }
        p += 1;
    }
    Ok(d)
}

/// An element `rat + irr·√d` of the quadratic field ℚ(√d).
///
/// Rational elements are compatible with every radicand; combining two
/// elements whose irrational parts live over different radicands is a
/// programming error and panics.
#[derive(Clone, Debug)]
pub struct Scalar {
    rat: Rational,
    irr: Rational,
    d: u32,
}

impl Scalar {
    pub fn new(rat: Rational, irr: Rational, d: u32) -> Self {
        Scalar { rat, irr, d }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(rat: Rational) -> Self {
        Scalar {
            rat,
            irr: Rational::zero(),
            d: DEFAULT_D,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The generator √d.
    pub fn sqrt_d(d: u32) -> Self {
        Scalar {
            rat: Rational::zero(),
            irr: Rational::one(),
            d,
        }
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// The field norm `rat² − d·irr²`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(BigInt::from(self.d)) * &self.irr * &self.irr
    }

    pub fn conjugate(&self) -> Self {
        Scalar {
            rat: self.rat.clone(),
            irr: -&self.irr,
            d: self.d,
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Scalar {
            rat: &self.rat / &n,
            irr: -&self.irr / &n,
            d: self.d,
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: i32) -> Result<Self, ScalarError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Integer value when the element is a rational integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.is_rational() && self.rat.is_integer() {
            self.rat.to_integer().to_i64()
        } else {
            None
        }
    }

    fn joined_d(&self, other: &Scalar) -> u32 {
        match (self.irr.is_zero(), other.irr.is_zero()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ => {
                assert_eq!(
                    self.d, other.d,
                    "cannot combine elements of Q(sqrt {}) and Q(sqrt {})",
                    self.d, other.d
                );
                self.d
            }
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.rat == other.rat && self.irr == other.irr && (self.irr.is_zero() || self.d == other.d)
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rat.hash(state);
        self.irr.hash(state);
        if !self.irr.is_zero() {
            self.d.hash(state);
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            d: self.joined_d(rhs),
            rat: &self.rat + &rhs.rat,
            irr: &self.irr + &rhs.irr,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            d: self.joined_d(rhs),
            rat: &self.rat - &rhs.rat,
            irr: &self.irr - &rhs.irr,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let d = self.joined_d(rhs);
        let dd = Rational::from_integer(BigInt::from(d));
        Scalar {
            rat: &self.rat * &rhs.rat + dd * &self.irr * &rhs.irr,
            irr: &self.rat * &rhs.irr + &rhs.rat * &self.irr,
            d,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            rat: -&self.rat,
            irr: -&self.irr,
            d: self.d,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            return fmt_rational(&self.rat, f);
        }
        if !self.rat.is_zero() {
            fmt_rational(&self.rat, f)?;
            f.write_str(if self.irr.is_negative() { " - " } else { " + " })?;
        } else if self.irr.is_negative() {
            f.write_str("-")?;
        }
        let mag = self.irr.abs();
        if !mag.is_one() {
            fmt_rational(&mag, f)?;
            f.write_str("*")?;
        }
        f.write_str("s")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Scalar {
        // a + b√3
        &Scalar::from_int(a) + &(&Scalar::from_int(b) * &Scalar::sqrt_d(3))
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&q(1, 1) * &q(-1, 1), Scalar::from_int(2));
    }

    #[test]
    fn conjugate_product_is_minus_two() {
        // (√3 − 1)(−1 − √3)
        assert_eq!(&q(-1, 1) * &q(-1, -1), Scalar::from_int(-2));
    }

    #[test]
    fn inverse_roundtrip() {
        let x = q(2, -5);
        assert!((&x * &x.inv().unwrap()).is_one());
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn radicand_validation() {
        assert!(validate_d(3).is_ok());
        assert!(validate_d(2).is_ok());
        assert!(validate_d(30).is_ok());
        assert!(validate_d(1).is_err());
        assert!(validate_d(4).is_err());
        assert!(validate_d(12).is_err());
    }

    #[test]
    fn rationals_ignore_radicand() {
        let a = Scalar::new(Rational::one(), Rational::zero(), 5);
        assert_eq!(a, Scalar::one());
        assert_eq!(&a + &Scalar::sqrt_d(7), Scalar::new(Rational::one(), Rational::one(), 7));
    }

    #[test]
    fn display() {
        assert_eq!(q(1, 1).to_string(), "1 + s");
        assert_eq!(q(0, -1).to_string(), "-s");
        assert_eq!(Scalar::from_frac(-3, 2).to_string(), "-3/2");
        assert_eq!(q(2, -3).to_string(), "2 - 3*s");
    }
}
