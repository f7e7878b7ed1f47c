//! Calculus of rational-equivalence classes pushed forward to projective
//! space, and the Euclidean-distance-degree formula paths built on it.
//!
//! A [`ProjClass`] stores one rational degree per dimension. Capping with a
//! polynomial in the hyperplane class, dualizing, and twisting by a line
//! bundle are all exact operations on that degree vector. Chern-class data of
//! the variety enters the Segre/Milnor paths as a power series in h,
//! normalized so its codimension-0 coefficient is 1.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, rat_int, Integer, Rational};

/// A rational-equivalence class in P^N recorded by the degrees of its graded
/// pieces; entry j is the degree of the dimension-j component. Equality
/// ignores trailing zero entries, so the same class pushed to a larger
/// projective space compares equal.
#[derive(Clone, Eq)]
pub struct ProjClass {
    degrees: Vec<Rational>,
}

impl PartialEq for ProjClass {
    fn eq(&self, other: &Self) -> bool {
        let n = self.degrees.len().max(other.degrees.len());
        (0..n).all(|j| self.degree(j) == other.degree(j))
    }
}

impl ProjClass {
    /// The zero class in P^N (N+1 entries).
    pub fn zero(ambient_dim: usize) -> Self {
        ProjClass {
            degrees: vec![Rational::zero(); ambient_dim + 1],
        }
    }

    /// Builds from degrees listed from dimension 0 upward.
    pub fn from_degrees(degrees: Vec<Rational>) -> Self {
        ProjClass { degrees }
    }

    pub fn from_i64(degrees: &[i64]) -> Self {
        ProjClass {
            degrees: degrees.iter().map(|&d| rat_int(d)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    /// Degree of the dimension-j piece; out-of-range indices read as zero.
    pub fn degree(&self, j: usize) -> Rational {
        self.degrees.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degrees(&self) -> &[Rational] {
        &self.degrees
    }

    /// Sets the dimension-j degree, growing the vector if needed.
    pub fn set_degree(&mut self, j: usize, value: Rational) {
        if j >= self.degrees.len() {
            self.degrees.resize(j + 1, Rational::zero());
        }
        self.degrees[j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.iter().all(|d| d.is_zero())
    }
}

impl fmt::Debug for ProjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, d) in self.degrees.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "dim{}: {}", j, d)?;
        }
        write!(f, "]")
    }
}

/// User-supplied topological data for the Euler-characteristic path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerData {
    pub dim_x: usize,
    pub chi_x: i64,
    pub chi_xq: i64,
    pub chi_xh: i64,
    pub chi_xqh: i64,
}

/// Which formula path produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Generic,
    Segre,
    Milnor,
    Csm,
    Euler,
    Product,
    PlaneCurve,
    RationalCurve,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Method::Generic => "generic",
            Method::Segre => "segre",
            Method::Milnor => "milnor",
            Method::Csm => "csm",
            Method::Euler => "euler",
            Method::Product => "product",
            Method::PlaneCurve => "plane-curve",
            Method::RationalCurve => "rational-curve",
        };
        write!(f, "{}", tag)
    }
}

/// A computed ED degree with the intermediate values that justify it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EddReport {
    pub value: Integer,
    pub method: Method,
    pub intermediates: BTreeMap<String, Rational>,
    pub warnings: Vec<String>,
}

impl EddReport {
    pub fn new(value: Integer, method: Method) -> Self {
        EddReport {
            value,
            method,
            intermediates: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: Rational) -> Self {
        self.intermediates.insert(key.to_string(), value);
        self
    }

    pub fn warn(mut self, message: impl Into<String>) -> Self {
        self.warnings.push(message.into());
        self
    }
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn require_integer(value: &Rational, context: &str) -> Result<Integer> {
    if !value.is_integer() {
        return Err(Error::NonIntegerResult(format!("{}: {}", context, value)));
    }
    Ok(value.to_integer())
}

// --- truncated series in the hyperplane class -------------------------------

fn series_mul(a: &[Rational], b: &[Rational], cap: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); cap + 1];
    for (i, ai) in a.iter().enumerate().take(cap + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(cap + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += &(ai * bj);
        }
    }
    out
}

/// 1 / (1 + l*h) up to h^cap.
fn series_geom(l: i64, cap: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(cap + 1);
    let mut acc = Rational::one();
    for _ in 0..=cap {
        out.push(acc.clone());
        acc *= rat_int(-l);
    }
    out
}

/// (1 + l*h)^m up to h^cap.
fn series_power(l: i64, m: usize, cap: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); cap + 1];
    for (k, entry) in out.iter_mut().enumerate() {
        if k > m {
            break;
        }
        *entry = Rational::from_integer(binomial(m, k)) * rat_int(l).pow(k as i32);
    }
    out
}

// --- class operations --------------------------------------------------------

/// Caps a class with a polynomial in h: result_j = sum_k p_k * alpha_(j+k).
pub fn cap_with_poly(alpha: &ProjClass, p: &[Rational]) -> ProjClass {
    let n = alpha.degrees.len();
    let mut out = vec![Rational::zero(); n];
    for (j, entry) in out.iter_mut().enumerate() {
        for (k, pk) in p.iter().enumerate() {
            if pk.is_zero() {
                continue;
            }
            *entry += &(pk * &alpha.degree(j + k));
        }
    }
    ProjClass { degrees: out }
}

/// Sign flip by codimension in an ambient of dimension m: (-1)^(m-j) on the
/// dimension-j piece.
pub fn class_dual(alpha: &ProjClass, m: usize) -> ProjClass {
    let degrees = alpha
        .degrees
        .iter()
        .enumerate()
        .map(|(j, d)| {
            let k = m.abs_diff(j);
            sign(k) * d
        })
        .collect();
    ProjClass { degrees }
}

/// Tensors the class by a line bundle of degree l, with codimension computed
/// in an ambient of dimension m: the codimension-i piece is divided by
/// (1 + l*h)^i.
pub fn class_tensor(alpha: &ProjClass, l: i64, m: usize) -> ProjClass {
    let n = alpha.degrees.len();
    let mut out = vec![Rational::zero(); n];
    for (j, a) in alpha.degrees.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        if j > m {
            // Negative codimension: multiply by the positive power instead.
            let i = j - m;
            for t in 0..=j {
                if t > i {
                    break;
                }
                let c = Rational::from_integer(binomial(i, t)) * rat_int(l).pow(t as i32);
                out[j - t] += &(c * a);
            }
            continue;
        }
        let i = m - j;
        for t in 0..=j {
            let c = if i == 0 {
                if t == 0 {
                    Rational::one()
                } else {
                    continue;
                }
            } else {
                sign(t)
                    * Rational::from_integer(binomial(i + t - 1, t))
                    * rat_int(l).pow(t as i32)
            };
            out[j - t] += &(c * a);
        }
    }
    ProjClass { degrees: out }
}

/// From c(TX) cap [X] (by degrees) to c(T*X tensor O(l h)) cap [X]: flips the
/// signs of the Chern components and applies the rank-(dim_x) twist formula
/// c_i(E tensor L) = sum_k C(r-k, i-k) c_k(E) (l h)^(i-k).
pub fn twisted_cotangent_chern(chern_tx: &ProjClass, dim_x: usize, l: i64) -> ProjClass {
    let n = chern_tx.degrees.len().max(dim_x + 1);
    let mut out = vec![Rational::zero(); n];
    for i in 0..=dim_x {
        let mut acc = Rational::zero();
        for k in 0..=i {
            let c = Rational::from_integer(binomial(dim_x - k, i - k))
                * rat_int(l).pow((i - k) as i32)
                * sign(k);
            acc += &(c * &chern_tx.degree(dim_x - k));
        }
        out[dim_x - i] = acc;
    }
    ProjClass { degrees: out }
}

/// The generic-translate ED degree as an exact rational:
/// sum_j (-1)^(dim_x + j) * chern_j * (2^(j+1) - 1).
pub fn gedd_sum(chern: &ProjClass, dim_x: usize) -> Rational {
    let mut acc = Rational::zero();
    for j in 0..=dim_x {
        let weight = rat_int(2).pow(j as i32 + 1) - rat_int(1);
        acc += &(sign(dim_x + j) * chern.degree(j) * weight);
    }
    acc
}

/// Generic ED degree from Chern (or Chern-Mather) degrees; must be an integer.
pub fn gedd_from_chern(chern: &ProjClass, dim_x: usize) -> Result<Integer> {
    require_integer(&gedd_sum(chern, dim_x), "generic ED degree")
}

/// Degrees of c(TX) cap [X] for a smooth degree-d hypersurface in P^(n-1):
/// the dimension-j entry is d * [h^(n-2-j)] (1+h)^n / (1+dh).
pub fn hypersurface_chern(n: usize, d: usize) -> Result<ProjClass> {
    if n < 2 || d < 1 {
        return Err(Error::InvalidInput(format!(
            "hypersurface needs n >= 2 and d >= 1, got n={}, d={}",
            n, d
        )));
    }
    let dim_x = n - 2;
    let series = series_mul(
        &series_power(1, n, dim_x),
        &series_geom(d as i64, dim_x),
        dim_x,
    );
    let mut degrees = vec![Rational::zero(); n];
    for j in 0..=dim_x {
        degrees[j] = rat_int(d as i64) * &series[dim_x - j];
    }
    Ok(ProjClass { degrees })
}

/// Chern data as a series in h normalized by the top entry, which is the
/// degree of the variety; coefficient k is the codimension-k degree over it.
fn chern_series(chern: &ProjClass, dim_x: usize) -> Result<Vec<Rational>> {
    let top = chern.degree(dim_x);
    if top.is_zero() {
        return Err(Error::InvalidInput(format!(
            "dimension-{} entry of the Chern input is zero; not a variety of that dimension",
            dim_x
        )));
    }
    Ok((0..=dim_x)
        .map(|k| chern.degree(dim_x - k) / &top)
        .collect())
}

/// Correction term gamma(X) = integral of
/// (1+2h) * c(T*X tensor O(2h)) / (1+h) over s(J(Q cap X), X).
pub fn gamma_from_segre(
    chern_tx: &ProjClass,
    dim_x: usize,
    segre_j: &ProjClass,
) -> Result<Rational> {
    let twisted = twisted_cotangent_chern(chern_tx, dim_x, 2);
    let tau = chern_series(&twisted, dim_x)?;
    let cofactor = series_mul(
        &series_mul(&tau, &series_power(2, 1, dim_x), dim_x),
        &series_geom(1, dim_x),
        dim_x,
    );
    let mut gamma = Rational::zero();
    for (k, q) in cofactor.iter().enumerate() {
        gamma += &(q * &segre_j.degree(k));
    }
    Ok(gamma)
}

/// ED degree of a smooth variety from its Chern degrees and the Segre class
/// of the singularity subscheme of Q cap X, pushed forward to P^N.
pub fn edd_smooth_via_segre(
    chern_tx: &ProjClass,
    dim_x: usize,
    segre_j: &ProjClass,
) -> Result<EddReport> {
    let gedd = gedd_sum(chern_tx, dim_x);
    let gamma = gamma_from_segre(chern_tx, dim_x, segre_j)?;
    let value = &gedd - &gamma;
    let n = require_integer(&value, "ED degree via Segre class")?;
    if n.is_negative() {
        return Err(Error::InvalidInput(format!(
            "negative ED degree {} from inconsistent Chern/Segre data",
            n
        )));
    }
    Ok(EddReport::new(n, Method::Segre)
        .with("gEdd", gedd)
        .with("gamma", gamma))
}

/// Milnor-class degrees of Q cap X from the Segre class of its singularity
/// subscheme: M = (-1)^(dim X) c(TX)/c(L) cap (s^dual tensor L), L = O(l h).
pub fn milnor_from_segre(
    chern_tx: &ProjClass,
    dim_x: usize,
    segre_j: &ProjClass,
    l: i64,
) -> Result<ProjClass> {
    let psi = chern_series(chern_tx, dim_x)?;
    let u = series_mul(&psi, &series_geom(l, dim_x), dim_x);
    let beta = class_tensor(&class_dual(segre_j, dim_x), l, dim_x);
    let capped = cap_with_poly(&beta, &u);
    let s = sign(dim_x);
    Ok(ProjClass {
        degrees: capped.degrees.iter().map(|d| &s * d).collect(),
    })
}

/// Alternating sum of Milnor-class degrees: sum_j (-1)^j M_j.
pub fn milnor_alternating_sum(milnor: &ProjClass) -> Rational {
    milnor
        .degrees
        .iter()
        .enumerate()
        .map(|(j, d)| sign(j) * d)
        .sum()
}

/// ED degree via the Milnor class: gEdd minus the alternating degree sum.
pub fn edd_from_milnor(
    chern_tx: &ProjClass,
    dim_x: usize,
    milnor: &ProjClass,
) -> Result<EddReport> {
    let gedd = gedd_sum(chern_tx, dim_x);
    let correction = milnor_alternating_sum(milnor);
    let value = &gedd - &correction;
    let n = require_integer(&value, "ED degree via Milnor class")?;
    Ok(EddReport::new(n, Method::Milnor)
        .with("gEdd", gedd)
        .with("milnorSum", correction))
}

/// Signed difference of alternating sums behind the CSM path, kept rational
/// so consistency checks can run on arbitrary inputs.
pub fn csm_edd_sum(chern_x: &ProjClass, dim_x: usize, csm_qx: &ProjClass) -> Rational {
    let top = chern_x.degrees.len().max(csm_qx.degrees.len());
    let mut acc = Rational::zero();
    for j in 0..top {
        acc += &(sign(j) * (chern_x.degree(j) - csm_qx.degree(j)));
    }
    sign(dim_x) * acc
}

/// ED degree from the Chern class of X and the CSM class of Q cap X.
pub fn edd_from_csm(
    chern_x: &ProjClass,
    dim_x: usize,
    csm_qx: &ProjClass,
) -> Result<EddReport> {
    let value = csm_edd_sum(chern_x, dim_x, csm_qx);
    let n = require_integer(&value, "ED degree via CSM class")?;
    Ok(EddReport::new(n, Method::Csm))
}

/// ED degree from four Euler characteristics:
/// (-1)^dim (chi(X) - chi(X cap Q) - chi(X cap H) + chi(X cap Q cap H)).
pub fn edd_from_euler(e: &EulerData) -> EddReport {
    let inner = Integer::from(e.chi_x) - Integer::from(e.chi_xq) - Integer::from(e.chi_xh)
        + Integer::from(e.chi_xqh);
    let value = if e.dim_x % 2 == 0 { inner } else { -inner };
    EddReport::new(value, Method::Euler)
        .with("chiX", rat_int(e.chi_x))
        .with("chiXQ", rat_int(e.chi_xq))
        .with("chiXH", rat_int(e.chi_xh))
        .with("chiXQH", rat_int(e.chi_xqh))
}

/// ED degree of a nonsingular curve: d + #(Q cap C) - chi(C).
pub fn curve_edd(d: u64, num_qc: u64, chi_c: i64) -> EddReport {
    let value = Integer::from(d) + Integer::from(num_qc) - Integer::from(chi_c);
    EddReport::new(value, Method::Euler)
        .with("d", rat_int(d as i64))
        .with("numQC", rat_int(num_qc as i64))
        .with("chiC", rat_int(chi_c))
}

/// ED degree of a smooth surface in P^3 with reduced Q-section of Euler
/// characteristic chi_c: d(d^2 - 3d + 5) - chi_c.
pub fn surface_p3_edd(d: u64, chi_c: i64) -> EddReport {
    let dd = Integer::from(d);
    let value = &dd * (&dd * &dd - Integer::from(3) * &dd + Integer::from(5))
        - Integer::from(chi_c);
    EddReport::new(value, Method::Euler)
        .with("d", rat_int(d as i64))
        .with("chiC", rat_int(chi_c))
}
