//! Truncated multigraded power series over Q.
//!
//! A series lives in Q[h_1, ..., h_p] modulo h_i^(cap_i + 1); the caps encode
//! the relations of the Chow ring of a product of projective spaces. Storage
//! is a dense row-major table, but multiplication and division walk only the
//! nonzero entries of the sparser operand, so multiplying by univariate or
//! linear factors stays cheap on large tables.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, rat_int, GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedMultiSeries {
    caps: Vec<usize>,
    strides: Vec<usize>,
    coeffs: Vec<Rational>,
}

fn strides_for(caps: &[usize]) -> (Vec<usize>, usize) {
    let p = caps.len();
    let mut strides = vec![1usize; p];
    for i in (0..p.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * (caps[i + 1] + 1);
    }
    let size = if p == 0 { 1 } else { strides[0] * (caps[0] + 1) };
    (strides, size)
}

/// Iterates multi-indices in row-major order alongside their linear index.
struct Odometer<'a> {
    caps: &'a [usize],
    multi: Vec<usize>,
    lin: usize,
    done: bool,
}

impl<'a> Odometer<'a> {
    fn new(caps: &'a [usize]) -> Self {
        Odometer {
            caps,
            multi: vec![0; caps.len()],
            lin: 0,
            done: false,
        }
    }

    fn step(&mut self) {
        self.lin += 1;
        for i in (0..self.caps.len()).rev() {
            if self.multi[i] < self.caps[i] {
                self.multi[i] += 1;
                return;
            }
            self.multi[i] = 0;
        }
        self.done = true;
    }
}

impl TruncatedMultiSeries {
    pub fn zero(caps: &[usize]) -> Self {
        let (strides, size) = strides_for(caps);
        TruncatedMultiSeries {
            caps: caps.to_vec(),
            strides,
            coeffs: vec![Rational::zero(); size],
        }
    }

    pub fn one(caps: &[usize]) -> Self {
        let mut s = Self::zero(caps);
        s.coeffs[0] = Rational::one();
        s
    }

    /// constant + sum of coeff_i * h_(var_i); terms beyond a cap truncate away.
    pub fn linear(caps: &[usize], constant: Rational, terms: &[(usize, Rational)]) -> Self {
        let mut s = Self::zero(caps);
        s.coeffs[0] = constant;
        for (var, c) in terms {
            if caps[*var] >= 1 {
                s.coeffs[s.strides[*var]] += c;
            }
        }
        s
    }

    /// (1 + c * h_var)^m, truncated.
    pub fn univariate_binomial(caps: &[usize], var: usize, c: &Rational, m: usize) -> Self {
        let mut s = Self::zero(caps);
        let top = m.min(caps[var]);
        let mut cpow = Rational::one();
        for k in 0..=top {
            s.coeffs[k * s.strides[var]] = Rational::from_integer(binomial(m, k)) * &cpow;
            cpow *= c;
        }
        s
    }

    pub fn var_count(&self) -> usize {
        self.caps.len()
    }

    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    fn check_caps(&self, rhs: &Self) -> Result<()> {
        if self.caps != rhs.caps {
            return Err(Error::SeriesMismatch(format!(
                "caps {:?} vs {:?}",
                self.caps, rhs.caps
            )));
        }
        Ok(())
    }

    fn linear_index(&self, exponents: &[usize]) -> Result<usize> {
        if exponents.len() != self.caps.len()
            || exponents.iter().zip(&self.caps).any(|(e, c)| e > c)
        {
            return Err(Error::ExponentOutOfRange(exponents.to_vec()));
        }
        Ok(exponents
            .iter()
            .zip(&self.strides)
            .map(|(e, s)| e * s)
            .sum())
    }

    pub fn set_coeff(&mut self, exponents: &[usize], value: Rational) -> Result<()> {
        let idx = self.linear_index(exponents)?;
        self.coeffs[idx] = value;
        Ok(())
    }

    /// Exact coefficient lookup; exponents must lie within the caps.
    pub fn coefficient(&self, exponents: &[usize]) -> Result<Rational> {
        let idx = self.linear_index(exponents)?;
        Ok(self.coeffs[idx].clone())
    }

    fn nonzeros(&self) -> Vec<(Vec<usize>, usize, Rational)> {
        let mut out = Vec::new();
        let mut odo = Odometer::new(&self.caps);
        while !odo.done {
            let c = &self.coeffs[odo.lin];
            if !c.is_zero() {
                out.push((odo.multi.clone(), odo.lin, c.clone()));
            }
            odo.step();
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_caps(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    /// Shift by the monomial h_var^power; entries pushed past the cap drop.
    pub fn mul_monomial(&self, var: usize, power: usize) -> Self {
        let mut out = Self::zero(&self.caps);
        if power > self.caps[var] {
            return out;
        }
        let shift = power * self.strides[var];
        let mut odo = Odometer::new(&self.caps);
        while !odo.done {
            if odo.multi[var] + power <= self.caps[var] && !self.coeffs[odo.lin].is_zero() {
                out.coeffs[odo.lin + shift] = self.coeffs[odo.lin].clone();
            }
            odo.step();
        }
        out
    }

    /// Truncated product; exponents exceeding any cap are discarded.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_caps(rhs)?;
        // Walk the denser operand with the odometer, probe the sparser one.
        let self_nnz = self.coeffs.iter().filter(|c| !c.is_zero()).count();
        let rhs_nnz = rhs.coeffs.iter().filter(|c| !c.is_zero()).count();
        let (dense, sparse) = if self_nnz >= rhs_nnz {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let sparse_list = sparse.nonzeros();
        let mut out = Self::zero(&self.caps);
        let mut odo = Odometer::new(&dense.caps);
        while !odo.done {
            let ca = &dense.coeffs[odo.lin];
            if !ca.is_zero() {
                'inner: for (mb, lb, cb) in &sparse_list {
                    for i in 0..self.caps.len() {
                        if odo.multi[i] + mb[i] > self.caps[i] {
                            continue 'inner;
                        }
                    }
                    out.coeffs[odo.lin + lb] += &(ca * cb);
                }
            }
            odo.step();
        }
        Ok(out)
    }

    /// Truncated quotient self / rhs; requires a nonzero constant term in rhs.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.check_caps(rhs)?;
        let b0 = rhs.coeffs[0].clone();
        if b0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let b0_is_one = b0.is_one();
        let tail: Vec<(Vec<usize>, usize, Rational)> = rhs
            .nonzeros()
            .into_iter()
            .filter(|(_, lin, _)| *lin != 0)
            .collect();
        let mut w = self.coeffs.clone();
        let mut odo = Odometer::new(&self.caps);
        while !odo.done {
            let lin = odo.lin;
            let mut acc = w[lin].clone();
            'tail: for (mf, lf, cf) in &tail {
                for i in 0..self.caps.len() {
                    if mf[i] > odo.multi[i] {
                        continue 'tail;
                    }
                }
                acc -= &(cf * &w[lin - lf]);
            }
            if !b0_is_one {
                acc /= &b0;
            }
            w[lin] = acc;
            odo.step();
        }
        Ok(TruncatedMultiSeries {
            caps: self.caps.clone(),
            strides: self.strides.clone(),
            coeffs: w,
        })
    }

    /// Multiplicative inverse up to the caps; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        Self::one(&self.caps).div(self)
    }
}

/// Spec aliases for the series operations.
pub fn ts_mul(a: &TruncatedMultiSeries, b: &TruncatedMultiSeries) -> Result<TruncatedMultiSeries> {
    a.mul(b)
}

pub fn ts_inverse(a: &TruncatedMultiSeries) -> Result<TruncatedMultiSeries> {
    a.inverse()
}

pub fn ts_coefficient(a: &TruncatedMultiSeries, exponents: &[usize]) -> Result<Rational> {
    a.coefficient(exponents)
}

/// Evaluates a univariate truncated series at a Gaussian rational; test aid.
pub fn eval_univariate(a: &TruncatedMultiSeries, x: &GaussianRational) -> GaussianRational {
    assert_eq!(a.var_count(), 1);
    let mut acc = GaussianRational::zero();
    for k in (0..=a.caps[0]).rev() {
        acc = &acc * x;
        acc += &GaussianRational::from_rational(a.coeffs[k].clone());
    }
    acc
}

impl std::fmt::Debug for TruncatedMultiSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut odo = Odometer::new(&self.caps);
        let mut first = true;
        while !odo.done {
            if !self.coeffs[odo.lin].is_zero() {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{}", self.coeffs[odo.lin])?;
                for (i, e) in odo.multi.iter().enumerate() {
                    if *e > 0 {
                        write!(f, "*h{}^{}", i + 1, e)?;
                    }
                }
            }
            odo.step();
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
