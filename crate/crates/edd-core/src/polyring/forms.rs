//! Homogeneous forms: binary forms in (s, t) and ternary forms in (x, y, z)
//! over Q(i), with the substitution and root-counting operations the curve
//! formulas need.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::polyring::upoly::{squarefree_part, UnivariatePoly};

/// Homogeneous binary form of fixed formal degree; entry k multiplies
/// s^(d-k) t^k. The zero form keeps its formal degree.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<GaussianRational>,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<GaussianRational>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::DegreeMismatch(format!(
                "binary form of degree {} needs {} coefficients, got {}",
                degree,
                degree + 1,
                coeffs.len()
            )));
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![GaussianRational::zero(); degree + 1],
        }
    }

    /// c * s^(d-k) t^k.
    pub fn monomial(degree: usize, k: usize, c: GaussianRational) -> Result<Self> {
        if k > degree {
            return Err(Error::DegreeMismatch(format!(
                "monomial exponent {} exceeds degree {}",
                k, degree
            )));
        }
        let mut f = Self::zero(degree);
        f.coeffs[k] = c;
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.degree != rhs.degree {
            return Err(Error::DegreeMismatch(format!(
                "cannot add binary forms of degrees {} and {}",
                self.degree, rhs.degree
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(BinaryForm {
            degree: self.degree,
            coeffs,
        })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let degree = self.degree + rhs.degree;
        let mut coeffs = vec![GaussianRational::zero(); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += &(a * b);
            }
        }
        BinaryForm { degree, coeffs }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = BinaryForm {
            degree: 0,
            coeffs: vec![GaussianRational::one()],
        };
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        // Fix the formal degree when the base was zero.
        if self.is_zero() && exp > 0 {
            return BinaryForm::zero(self.degree * exp as usize);
        }
        acc
    }

    /// G(1, t) as a univariate polynomial in t.
    pub fn dehomogenize(&self) -> UnivariatePoly {
        UnivariatePoly::from_coeffs(self.coeffs.clone())
    }
}

/// Number of distinct points of P^1 where the form vanishes: distinct roots
/// of G(1,t) plus the point (0:1) when s divides G.
pub fn binary_distinct_roots(g: &BinaryForm) -> Result<usize> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dehom = g.dehomogenize();
    let finite = squarefree_part(&dehom)?.degree().unwrap_or(0);
    let at_infinity = usize::from(dehom.degree().unwrap_or(0) < g.degree());
    Ok(finite + at_infinity)
}

/// Homogeneous ternary form of fixed degree; exponent triples (a, b, c) with
/// a+b+c = degree map to nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TernaryForm {
    degree: usize,
    terms: BTreeMap<(u32, u32, u32), GaussianRational>,
}

impl TernaryForm {
    pub fn new(
        degree: usize,
        terms: impl IntoIterator<Item = ((u32, u32, u32), GaussianRational)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((a, b, c), coeff) in terms {
            if (a + b + c) as usize != degree {
                return Err(Error::DegreeMismatch(format!(
                    "term x^{}y^{}z^{} is not of degree {}",
                    a, b, c, degree
                )));
            }
            if coeff.is_zero() {
                continue;
            }
            let entry = map.entry((a, b, c)).or_insert_with(GaussianRational::zero);
            *entry += &coeff;
            if entry.is_zero() {
                map.remove(&(a, b, c));
            }
        }
        Ok(TernaryForm { degree, terms: map })
    }

    pub fn zero(degree: usize) -> Self {
        TernaryForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: (u32, u32, u32)) -> GaussianRational {
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        TernaryForm {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    /// Partial derivative along variable 0, 1 or 2 (x, y, z).
    pub fn partial(&self, var: usize) -> TernaryForm {
        let degree = self.degree.saturating_sub(1);
        let mut terms = BTreeMap::new();
        for (&(a, b, c), coeff) in &self.terms {
            let (e, rest) = match var {
                0 => (a, (a.wrapping_sub(1), b, c)),
                1 => (b, (a, b.wrapping_sub(1), c)),
                _ => (c, (a, b, c.wrapping_sub(1))),
            };
            if e == 0 {
                continue;
            }
            let v = coeff * &GaussianRational::from_int(e as i64);
            let entry = terms.entry(rest).or_insert_with(GaussianRational::zero);
            *entry += &v;
            if entry.is_zero() {
                terms.remove(&rest);
            }
        }
        TernaryForm { degree, terms }
    }

    pub fn eval(&self, x: &GaussianRational, y: &GaussianRational, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (&(a, b, c), coeff) in &self.terms {
            let term = &(&x.pow(a) * &y.pow(b)) * &z.pow(c);
            acc += &(coeff * &term);
        }
        acc
    }

    /// Restriction to the line z = 0 as a binary form in (s, t) = (x, y).
    pub fn restrict_z0(&self) -> BinaryForm {
        let mut f = BinaryForm::zero(self.degree);
        for (&(_, b, c), coeff) in &self.terms {
            if c == 0 {
                f.coeffs[b as usize] = coeff.clone();
            }
        }
        f
    }

    /// True when other = lambda * self for some nonzero scalar lambda.
    pub fn proportional_to(&self, other: &TernaryForm) -> bool {
        if self.degree != other.degree
            || self.terms.len() != other.terms.len()
            || self.is_zero() != other.is_zero()
        {
            return false;
        }
        if self.is_zero() {
            return true;
        }
        let (first_key, first_val) = self.terms.iter().next().unwrap();
        let Some(other_val) = other.terms.get(first_key) else {
            return false;
        };
        let lambda = other_val / first_val;
        self.terms.iter().all(|(k, v)| {
            other
                .terms
                .get(k)
                .is_some_and(|w| *w == v * &lambda)
        })
    }
}

/// F(phi_x, phi_y, phi_z) for a ternary form F and a parametrization by three
/// binary forms of a common degree e; the result has degree deg(F) * e.
pub fn ternary_substitute_param(
    f: &TernaryForm,
    phi_x: &BinaryForm,
    phi_y: &BinaryForm,
    phi_z: &BinaryForm,
) -> Result<BinaryForm> {
    let e = phi_x.degree();
    if phi_y.degree() != e || phi_z.degree() != e {
        return Err(Error::DegreeMismatch(format!(
            "parametrization degrees differ: {}, {}, {}",
            phi_x.degree(),
            phi_y.degree(),
            phi_z.degree()
        )));
    }
    let out_degree = f.degree() * e;
    let mut acc = BinaryForm::zero(out_degree);
    for (&(a, b, c), coeff) in f.terms() {
        let term = phi_x
            .pow(a)
            .mul(&phi_y.pow(b))
            .mul(&phi_z.pow(c))
            .scale(coeff);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = |name: &str, e: u32| match e {
            0 => String::new(),
            1 => format!("*{}", name),
            _ => format!("*{}^{}", name, e),
        };
        let mut first = true;
        for (&(a, b, c), coeff) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}){}{}{}", coeff, var("x", a), var("y", b), var("z", c))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.degree;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            let se = d - k;
            if se == 1 {
                write!(f, "*s")?;
            } else if se > 1 {
                write!(f, "*s^{}", se)?;
            }
            if k == 1 {
                write!(f, "*t")?;
            } else if k > 1 {
                write!(f, "*t^{}", k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
