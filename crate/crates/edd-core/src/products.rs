//! Closed-form ED degrees of Segre and Segre-Veronese varieties by exact
//! coefficient extraction in truncated multigraded series, plus the
//! normal-crossings evaluator on products of projective spaces that all of
//! them wrap.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Integer, Rational};
use crate::polyring::TruncatedMultiSeries;

/// Which coordinates the Veronese factors use; they change how the isotropic
/// quadric restricts to each factor and hence the divisor degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coords {
    General,
    Invariant,
}

/// A product of projective spaces P^(m_1 - 1) x ... x P^(m_p - 1) embedded by
/// Veronese weights followed by the Segre embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    pub dims: Vec<usize>,
    pub weights: Vec<usize>,
    pub coords: Coords,
}

impl ProductSpec {
    pub fn new(dims: Vec<usize>, weights: Vec<usize>, coords: Coords) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidInput("at least one factor is required".into()));
        }
        if dims.len() != weights.len() {
            return Err(Error::InvalidInput(format!(
                "{} dims but {} weights",
                dims.len(),
                weights.len()
            )));
        }
        if dims.iter().any(|&m| m < 1) || weights.iter().any(|&w| w < 1) {
            return Err(Error::InvalidInput(
                "factor dimensions and weights must be positive".into(),
            ));
        }
        Ok(ProductSpec {
            dims,
            weights,
            coords,
        })
    }

    pub fn segre(dims: Vec<usize>) -> Result<Self> {
        let weights = vec![1; dims.len()];
        Self::new(dims, weights, Coords::General)
    }
}

fn caps_of(dims: &[usize]) -> Vec<usize> {
    dims.iter().map(|m| m - 1).collect()
}

fn extract_integer(coeff: Rational, context: &str) -> Result<Integer> {
    if !coeff.is_integer() {
        return Err(Error::NonIntegerResult(format!("{}: {}", context, coeff)));
    }
    Ok(coeff.to_integer())
}

/// ED degree of a product X of projective spaces whose Q-section is a normal
/// crossings divisor with nonsingular components of the given multidegrees:
/// the coefficient of prod h_i^(m_i - 1) in
/// (1/(1 - H)) * prod (1 - h_i)^(m_i) / prod (1 - D_j), H = sum w_i h_i.
pub fn snc_edd(dims: &[usize], weights: &[usize], divisors: &[Vec<i64>]) -> Result<Integer> {
    let spec = ProductSpec::new(dims.to_vec(), weights.to_vec(), Coords::General)?;
    let p = spec.dims.len();
    for d in divisors {
        if d.len() != p {
            return Err(Error::InvalidInput(format!(
                "divisor multidegree {:?} does not have {} entries",
                d, p
            )));
        }
    }
    let caps = caps_of(&spec.dims);

    // c(T*X) = prod (1 - h_i)^(m_i), built factor by factor.
    let mut series = TruncatedMultiSeries::one(&caps);
    for (i, &m) in spec.dims.iter().enumerate() {
        let factor = TruncatedMultiSeries::univariate_binomial(&caps, i, &rat_int(-1), m);
        series = series.mul(&factor)?;
    }

    // Divide by 1 - H with H = sum w_i h_i.
    let hyperplane = TruncatedMultiSeries::linear(
        &caps,
        Rational::one(),
        &spec
            .weights
            .iter()
            .enumerate()
            .map(|(i, &w)| (i, rat_int(-(w as i64))))
            .collect::<Vec<_>>(),
    );
    series = series.div(&hyperplane)?;

    // Divide by each 1 - D_j.
    for d in divisors {
        let factor = TruncatedMultiSeries::linear(
            &caps,
            Rational::one(),
            &d.iter()
                .enumerate()
                .map(|(i, &c)| (i, rat_int(-c)))
                .collect::<Vec<_>>(),
        );
        series = series.div(&factor)?;
    }

    let coeff = series.coefficient(&caps)?;
    extract_integer(coeff, "normal-crossings ED degree")
}

/// ED degree of the Segre variety P^(m_1-1) x ... x P^(m_p-1): divisor
/// components 2 h_i, hyperplane class sum h_i.
pub fn edd_segre(dims: &[usize]) -> Result<Integer> {
    let p = dims.len();
    let weights = vec![1usize; p];
    let divisors: Vec<Vec<i64>> = (0..p)
        .map(|i| (0..p).map(|j| if i == j { 2 } else { 0 }).collect())
        .collect();
    snc_edd(dims, &weights, &divisors)
}

/// ED degree of a Segre-Veronese variety. General coordinates restrict each
/// isotropic quadric to a smooth degree-2w_i hypersurface; invariant
/// coordinates restrict it to a multiple quadric of class 2 h_i.
pub fn edd_segre_veronese(spec: &ProductSpec) -> Result<Integer> {
    let p = spec.dims.len();
    let divisors: Vec<Vec<i64>> = (0..p)
        .map(|i| {
            (0..p)
                .map(|j| {
                    if i != j {
                        0
                    } else {
                        match spec.coords {
                            Coords::General => 2 * spec.weights[i] as i64,
                            Coords::Invariant => 2,
                        }
                    }
                })
                .collect()
        })
        .collect();
    snc_edd(&spec.dims, &spec.weights, &divisors)
}

/// The alternative product formula: the coefficient of prod z_i^(m_i-1) in
/// prod_i (zh_i^(m_i) - z_i^(m_i)) / (zh_i - z_i) with zh_i = sum_j w_j z_j - z_i,
/// each factor expanded as sum_k zh_i^(m_i-1-k) z_i^k and multiplied truncated.
pub fn edd_fo(dims: &[usize], weights: &[usize]) -> Result<Integer> {
    let spec = ProductSpec::new(dims.to_vec(), weights.to_vec(), Coords::Invariant)?;
    let p = spec.dims.len();
    let caps = caps_of(&spec.dims);

    let mut acc = TruncatedMultiSeries::one(&caps);
    for i in 0..p {
        // zh_i as a truncated linear polynomial.
        let terms: Vec<(usize, Rational)> = (0..p)
            .map(|j| {
                let w = spec.weights[j] as i64;
                (j, rat_int(if i == j { w - 1 } else { w }))
            })
            .collect();
        let zhat = TruncatedMultiSeries::linear(&caps, Rational::zero(), &terms);

        // acc * sum_k zh^(m-1-k) z^k via the recurrence S_1 = 1,
        // S_(j+1) = zh * S_j + z^j, tracked as T_j = acc * S_j.
        let mut t = acc.clone();
        for j in 1..spec.dims[i] {
            t = t.mul(&zhat)?.add(&acc.mul_monomial(i, j))?;
        }
        acc = t;
    }

    let coeff = acc.coefficient(&caps)?;
    extract_integer(coeff, "product-formula ED degree")
}

/// Closed form for a single Veronese factor with invariant coordinates:
/// ((w-1)^m - 1) / (w - 2), which degenerates to m at w = 2.
pub fn veronese_p1_closed_form(m: usize, w: usize) -> Integer {
    if w == 2 {
        return Integer::from(m);
    }
    let base = Integer::from(w as i64 - 1);
    let numer = num_traits::pow::pow(base, m) - Integer::one();
    let denom = Integer::from(w as i64 - 2);
    debug_assert!((&numer % &denom).is_zero());
    numer / denom
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn segre_single_factor_is_one() {
        for m in 1..=8 {
            assert_eq!(edd_segre(&[m]).unwrap(), Integer::one(), "m={}", m);
        }
    }

    #[test]
    fn segre_two_by_two() {
        // Hand expansion: each (1-h)^2/(1-2h) is 1 mod h^2, so the target
        // coefficient comes from 1/(1-h1-h2) alone and equals 2.
        assert_eq!(edd_segre(&[2, 2]).unwrap(), Integer::from(2));
        assert_eq!(edd_fo(&[2, 2], &[1, 1]).unwrap(), Integer::from(2));
    }

    #[test]
    fn segre_three_binary_factors() {
        // Product formula: [z1 z2 z3] (z1+z2+z3)^3 = 3! = 6.
        assert_eq!(edd_segre(&[2, 2, 2]).unwrap(), Integer::from(6));
        assert_eq!(edd_fo(&[2, 2, 2], &[1, 1, 1]).unwrap(), Integer::from(6));
    }

    #[test]
    fn segre_matches_fo_small() {
        for m1 in 1..=5 {
            for m2 in 1..=5 {
                let dims = [m1, m2];
                assert_eq!(
                    edd_segre(&dims).unwrap(),
                    edd_fo(&dims, &[1, 1]).unwrap(),
                    "dims {:?}",
                    dims
                );
            }
        }
    }

    #[test]
    fn flagship_value_via_both_formulas() {
        let dims = [3usize, 9, 12, 14, 25];
        let expect = Integer::from_str("1430462027777307645494624").unwrap();
        assert_eq!(edd_segre(&dims).unwrap(), expect);
        assert_eq!(edd_fo(&dims, &[1, 1, 1, 1, 1]).unwrap(), expect);
    }

    #[test]
    fn veronese_weights_one_degenerates_to_segre() {
        for coords in [Coords::General, Coords::Invariant] {
            let spec = ProductSpec::new(vec![3, 4], vec![1, 1], coords).unwrap();
            assert_eq!(
                edd_segre_veronese(&spec).unwrap(),
                edd_segre(&[3, 4]).unwrap()
            );
        }
    }

    #[test]
    fn veronese_single_factor_closed_form() {
        for m in 1..=6 {
            for w in 2..=5 {
                let spec = ProductSpec::new(vec![m], vec![w], Coords::Invariant).unwrap();
                assert_eq!(
                    edd_segre_veronese(&spec).unwrap(),
                    veronese_p1_closed_form(m, w),
                    "m={} w={}",
                    m,
                    w
                );
                assert_eq!(
                    edd_fo(&[m], &[w]).unwrap(),
                    veronese_p1_closed_form(m, w),
                    "fo m={} w={}",
                    m,
                    w
                );
            }
        }
    }

    #[test]
    fn veronese_surface_invariant_coordinates() {
        // One P^2 factor with weight 2: the double-conic Veronese surface.
        let spec = ProductSpec::new(vec![3], vec![2], Coords::Invariant).unwrap();
        assert_eq!(edd_segre_veronese(&spec).unwrap(), Integer::from(3));
    }

    #[test]
    fn invariant_coordinates_match_fo() {
        for m1 in 1..=4 {
            for w1 in 1..=3 {
                for (m2, w2) in [(1, 1), (2, 2), (3, 1), (4, 3)] {
                    let spec =
                        ProductSpec::new(vec![m1, m2], vec![w1, w2], Coords::Invariant).unwrap();
                    assert_eq!(
                        edd_segre_veronese(&spec).unwrap(),
                        edd_fo(&[m1, m2], &[w1, w2]).unwrap(),
                        "dims ({},{}) weights ({},{})",
                        m1,
                        m2,
                        w1,
                        w2
                    );
                }
            }
        }
    }

    #[test]
    fn general_coordinates_wrap_snc() {
        let dims = [3usize, 2];
        let weights = [2usize, 3];
        let spec = ProductSpec::new(dims.to_vec(), weights.to_vec(), Coords::General).unwrap();
        let divisors = vec![vec![4, 0], vec![0, 6]];
        assert_eq!(
            edd_segre_veronese(&spec).unwrap(),
            snc_edd(&dims, &weights, &divisors).unwrap()
        );
    }

    #[test]
    fn snc_p1_segre_check() {
        // One factor with the quadric as its single divisor component is the
        // p = 1 Segre case and evaluates to 1.
        for m in 1..=6 {
            assert_eq!(
                snc_edd(&[m], &[1], &[vec![2]]).unwrap(),
                Integer::one(),
                "m={}",
                m
            );
        }
    }

    #[test]
    fn divisor_length_checked() {
        assert!(matches!(
            snc_edd(&[2, 2], &[1, 1], &[vec![2]]),
            Err(Error::InvalidInput(_))
        ));
    }
}
