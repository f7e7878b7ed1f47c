//! Exact arbitrary-precision scalars: integers, rationals, and Gaussian
//! rationals (the field Q(i)).
//!
//! Integers and rationals are backed by `num-bigint`/`num-rational`, which
//! keep rationals reduced with a positive denominator. `GaussianRational`
//! layers the imaginary unit on top with exact field arithmetic.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for j in 0..k {
        acc = acc * Integer::from(n - j) / Integer::from(j + 1);
    }
    acc
}

/// An element of Q(i), stored as exact real and imaginary rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// norm(a) = re^2 + im^2; zero iff a = 0.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

macro_rules! forward_value_binop {
    ($Op:ident, $op:ident) => {
        impl $Op for GaussianRational {
            type Output = GaussianRational;
            fn $op(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $op(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$op(rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);

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

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self) * rhs;
    }
}

/// Exact division; panics on a zero divisor. Use [`GaussianRational::inverse`]
/// for the checked form.
impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inverse().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: GaussianRational) -> GaussianRational {
        &self / &rhs
    }
}

impl fmt::Display for GaussianRational {
    /// Renders "a+b*i" with canonical signs: "0", "3/2", "-i", "1-2*i", ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut wrote_re = false;
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            wrote_re = true;
        }
        if !self.im.is_zero() {
            let mag = self.im.abs();
            let sign = if self.im.is_negative() {
                "-"
            } else if wrote_re {
                "+"
            } else {
                ""
            };
            if mag.is_one() {
                write!(f, "{}i", sign)?;
            } else {
                write!(f, "{}{}*i", sign, mag)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Num;
    use proptest::prelude::*;
    use std::str::FromStr;

    fn g(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> GaussianRational {
        GaussianRational::new(rat(re_n, re_d), rat(im_n, im_d))
    }

    #[test]
    fn one_plus_i_times_one_minus_i_is_two() {
        let a = g(1, 1, 1, 1);
        let b = g(1, 1, -1, 1);
        assert_eq!(&a * &b, GaussianRational::from_int(2));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }

    #[test]
    fn additive_cancellation() {
        let a = g(3, 2, 1, 2);
        let b = g(1, 2, -1, 2);
        assert_eq!(&a + &b, GaussianRational::from_int(2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            GaussianRational::zero().inverse(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn norm_zero_iff_zero() {
        assert!(GaussianRational::zero().norm_sq().is_zero());
        assert!(!g(0, 1, 2, 3).norm_sq().is_zero());
    }

    #[test]
    fn decimal_round_trip_large_integers() {
        // Round-trips must hold well past 25 digits.
        for s in [
            "1430462027777307645494624",
            "-9999999999999999999999999999999999999999",
            "10000000000000000000000000000000000000000",
        ] {
            let n = Integer::from_str(s).unwrap();
            assert_eq!(n.to_string(), s);
        }
        let big = Integer::from_str_radix("1", 10).unwrap() << 200;
        assert_eq!(Integer::from_str(&big.to_string()).unwrap(), big);
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(rat(3, 2).to_string(), "3/2");
        assert_eq!(rat(4, 2).to_string(), "2");
        assert_eq!(rat(-1, 3).to_string(), "-1/3");
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), Integer::from(10));
        assert_eq!(binomial(0, 0), Integer::from(1));
        assert_eq!(binomial(3, 7), Integer::from(0));
        assert_eq!(binomial(40, 20), Integer::from_str("137846528820").unwrap());
    }

    #[test]
    fn display_sign_handling() {
        assert_eq!(g(1, 1, -2, 1).to_string(), "1-2*i");
        assert_eq!(g(0, 1, 1, 1).to_string(), "i");
        assert_eq!(g(0, 1, -1, 1).to_string(), "-i");
        assert_eq!(g(-1, 2, 1, 3).to_string(), "-1/2+1/3*i");
        assert_eq!(GaussianRational::zero().to_string(), "0");
    }

    fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
        (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
            .prop_map(|(a, b, c, d)| g(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in (arb_gaussian(), arb_gaussian(), arb_gaussian())) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), GaussianRational::one());
            }
        }

        #[test]
        fn reduction_idempotent(n in -1000i64..1000, d in 1i64..1000) {
            let q = rat(n, d);
            let again = Rational::new(q.numer().clone(), q.denom().clone());
            prop_assert_eq!(q, again);
        }

        #[test]
        fn integer_decimal_round_trip(digits in proptest::collection::vec(0u8..10, 1..40), neg in any::<bool>()) {
            let mut s = String::new();
            if neg { s.push('-'); }
            s.push_str(&(digits[0].max(1)).to_string());
            for d in &digits[1..] { s.push_str(&d.to_string()); }
            let n = Integer::from_str(&s).unwrap();
            prop_assert_eq!(n.to_string(), s);
        }
    }
}
