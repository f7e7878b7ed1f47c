//! Univariate polynomials over Q(i): arithmetic, gcd, and squarefree parts.
//!
//! The gcd runs a primitive pseudo-remainder sequence (content stripped after
//! every step) and returns a monic result, which keeps coefficient growth
//! under control on high-degree inputs.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, Rational};

/// Dense univariate polynomial; index = exponent, trailing coefficient nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct UnivariatePoly {
    coeffs: Vec<GaussianRational>,
}

impl UnivariatePoly {
    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UnivariatePoly {
            coeffs: vec![GaussianRational::one()],
        }
    }

    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// x + c, handy for building factored test inputs.
    pub fn linear(c: GaussianRational) -> Self {
        Self::from_coeffs(vec![c, GaussianRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        UnivariatePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += &(a * b);
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UnivariatePoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul_monomial(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![GaussianRational::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UnivariatePoly { coeffs: out }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
            .collect();
        Self::from_coeffs(out)
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Quotient and remainder over the field Q(i).
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.leading_coeff().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() < db + 1 {
            return Ok((Self::zero(), self.clone()));
        }
        let qlen = rem.len() - db;
        let mut quot = vec![GaussianRational::zero(); qlen];
        for k in (0..qlen).rev() {
            let lead = &rem[k + db];
            if lead.is_zero() {
                continue;
            }
            let q = lead * &lc_inv;
            for j in 0..db {
                let t = &q * &divisor.coeffs[j];
                rem[k + j] -= &t;
            }
            rem[k + db] = GaussianRational::zero();
            quot[k] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Strips the positive rational content so every coefficient has coprime
    /// integer coordinates. Value changes by a positive rational unit only.
    fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        let mut visit = |q: &Rational| {
            if !q.is_zero() {
                den_lcm = den_lcm.lcm(q.denom());
            }
        };
        for c in &self.coeffs {
            visit(c.re());
            visit(c.im());
        }
        for c in &self.coeffs {
            for q in [c.re(), c.im()] {
                if !q.is_zero() {
                    let scaled = q.numer() * (&den_lcm / q.denom());
                    num_gcd = num_gcd.gcd(&scaled.abs());
                }
            }
        }
        if num_gcd.is_zero() {
            return self.clone();
        }
        let factor = GaussianRational::from_rational(Rational::new(den_lcm, num_gcd));
        self.scale(&factor)
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo_rem divisor nonzero");
        let lc = b.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        let da = match r.degree() {
            Some(d) if d >= db => d,
            _ => return r,
        };
        let mut e = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let s = r.leading_coeff().unwrap().clone();
            // r <- lc*r - s*x^(dr-db)*b
            r = r.scale(&lc).sub(&b.scale(&s).mul_monomial(dr - db));
            e -= 1;
        }
        if e > 0 {
            r = r.scale(&lc.pow(e as u32));
        }
        r
    }
}

/// Monic greatest common divisor over Q(i); errors if both inputs are zero.
pub fn upoly_gcd(a: &UnivariatePoly, b: &UnivariatePoly) -> Result<UnivariatePoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    let (mut f, mut g) = if a.degree() >= b.degree() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    loop {
        let r = f.pseudo_rem(&g);
        if r.is_zero() {
            return Ok(g.monic());
        }
        f = g;
        g = r.primitive_part();
    }
}

/// Monic g / gcd(g, g'); the result has the same roots as g, all simple.
pub fn squarefree_part(g: &UnivariatePoly) -> Result<UnivariatePoly> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.degree() == Some(0) {
        return Ok(UnivariatePoly::one());
    }
    let d = upoly_gcd(g, &g.derivative())?;
    Ok(g.div_exact(&d)?.monic())
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*t", c)?,
                _ => write!(f, "({})*t^{}", c, k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn int(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn lin(c: i64) -> UnivariatePoly {
        UnivariatePoly::linear(int(c))
    }

    fn lin_g(c: GaussianRational) -> UnivariatePoly {
        UnivariatePoly::linear(c)
    }

    #[test]
    fn gcd_shared_root() {
        // gcd(t^2-1, t^2-2t+1) = t-1
        let a = UnivariatePoly::from_coeffs(vec![int(-1), int(0), int(1)]);
        let b = UnivariatePoly::from_coeffs(vec![int(1), int(-2), int(1)]);
        assert_eq!(upoly_gcd(&a, &b).unwrap(), lin(-1));
    }

    #[test]
    fn gcd_monomials() {
        let a = UnivariatePoly::one().mul_monomial(3);
        let b = UnivariatePoly::one().mul_monomial(2);
        assert_eq!(upoly_gcd(&a, &b).unwrap(), UnivariatePoly::one().mul_monomial(2));
    }

    #[test]
    fn gcd_gaussian_factors() {
        // gcd((t-i)^2 (t+2), (t-i)(t-5)) = t-i, checked by exact division too.
        let t_minus_i = lin_g(-GaussianRational::i());
        let a = t_minus_i.mul(&t_minus_i).mul(&lin(2));
        let b = t_minus_i.mul(&lin(-5));
        let g = upoly_gcd(&a, &b).unwrap();
        assert_eq!(g, t_minus_i);
        assert!(g.divides(&a));
        assert!(g.divides(&b));
    }

    #[test]
    fn gcd_of_zeros_is_error() {
        assert_eq!(
            upoly_gcd(&UnivariatePoly::zero(), &UnivariatePoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_strips_multiplicities() {
        // (t-1)^3 (t+2) -> (t-1)(t+2)
        let g = lin(-1).pow(3).mul(&lin(2));
        assert_eq!(squarefree_part(&g).unwrap(), lin(-1).mul(&lin(2)));
    }

    #[test]
    fn squarefree_pure_power() {
        let g = UnivariatePoly::one().mul_monomial(5);
        assert_eq!(squarefree_part(&g).unwrap(), UnivariatePoly::one().mul_monomial(1));
    }

    #[test]
    fn squarefree_gaussian_pairs() {
        // (t-i)^2 (t+i)^2 -> t^2+1, compared against the hand expansion.
        let f = lin_g(-GaussianRational::i())
            .pow(2)
            .mul(&lin_g(GaussianRational::i()).pow(2));
        let expansion = UnivariatePoly::from_coeffs(vec![int(1), int(0), int(1)]);
        assert_eq!(squarefree_part(&f).unwrap(), expansion);
    }

    #[test]
    fn squarefree_of_zero_is_error() {
        assert_eq!(squarefree_part(&UnivariatePoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn div_rem_round_trip() {
        let a = lin(3).mul(&lin(-4)).mul(&lin(1)).add(&UnivariatePoly::constant(int(7)));
        let b = lin(3).mul(&lin(5));
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    fn arb_coeff() -> impl Strategy<Value = GaussianRational> {
        (-6i64..=6, -6i64..=6).prop_map(|(a, b)| GaussianRational::new(rat(a, 1), rat(b, 1)))
    }

    fn arb_factored() -> impl Strategy<Value = (UnivariatePoly, UnivariatePoly, UnivariatePoly)> {
        (
            proptest::collection::vec(arb_coeff(), 0..3),
            proptest::collection::vec(arb_coeff(), 0..3),
            proptest::collection::vec(arb_coeff(), 1..3),
        )
            .prop_map(|(fa, fb, fc)| {
                let build = |roots: Vec<GaussianRational>| {
                    roots
                        .into_iter()
                        .fold(UnivariatePoly::one(), |acc, r| acc.mul(&lin_g(-r)))
                };
                (build(fa), build(fb), build(fc))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn gcd_divides_both((a, b, c) in arb_factored()) {
            // Share the factor c so the gcd is nontrivial.
            let f = a.mul(&c);
            let g = b.mul(&c);
            let d = upoly_gcd(&f, &g).unwrap();
            prop_assert!(d.divides(&f));
            prop_assert!(d.divides(&g));
            prop_assert!(c.monic().divides(&d.mul(&UnivariatePoly::one())) || d.degree() >= c.degree());
        }

        #[test]
        fn squarefree_coprime_with_derivative((a, _b, c) in arb_factored()) {
            let g = a.mul(&c).mul(&c);
            if !g.is_zero() && g.degree() > Some(0) {
                let sf = squarefree_part(&g).unwrap();
                if sf.degree() > Some(0) {
                    let d = upoly_gcd(&sf, &sf.derivative()).unwrap();
                    prop_assert_eq!(d.degree(), Some(0));
                }
            }
        }
    }
}
