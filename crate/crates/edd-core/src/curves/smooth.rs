//! Exact smoothness test for plane curves of bounded degree.
//!
//! The fast path eliminates y with Sylvester resultants (polynomial entries,
//! Bareiss determinant) after restricting to the affine chart; a constant gcd
//! of the two resultants certifies that the partials share no affine zero.
//! The coordinate vertices and the line z = 0 get explicit checks. When the
//! resultants are inconclusive (repeated factors, degenerate charts) the
//! decision falls to an exact linear-algebra test: three degree-e forms in
//! three variables have no common projective zero exactly when their
//! multiples span everything in degree 3e - 2.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::polyring::{upoly_gcd, BinaryForm, TernaryForm, UnivariatePoly};

/// Largest degree the exact smoothness check accepts by default.
pub const DEFAULT_SMOOTHNESS_BOUND: usize = 6;

/// True iff the three partial derivatives of F have no common projective
/// zero. Errors with [`Error::Unsupported`] above the degree bound.
pub fn smoothness_check_plane(f: &TernaryForm, bound: usize) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    if d > bound {
        return Err(Error::Unsupported(format!(
            "smoothness check limited to degree {}, got degree {}",
            bound, d
        )));
    }
    if d == 0 {
        // All partials vanish identically.
        return Ok(false);
    }
    if d == 1 {
        return Ok(true);
    }
    let px = f.partial(0);
    let py = f.partial(1);
    let pz = f.partial(2);
    // A vanishing partial means F ignores a variable, so F is a cone of
    // degree >= 2 and its vertex is singular.
    if px.is_zero() || py.is_zero() || pz.is_zero() {
        return Ok(false);
    }
    let zero = GaussianRational::zero;
    let one = GaussianRational::one;
    for (x, y, z) in [
        (one(), zero(), zero()),
        (zero(), one(), zero()),
        (zero(), zero(), one()),
    ] {
        if px.eval(&x, &y, &z).is_zero()
            && py.eval(&x, &y, &z).is_zero()
            && pz.eval(&x, &y, &z).is_zero()
        {
            return Ok(false);
        }
    }
    if binary_forms_common_root(&[px.restrict_z0(), py.restrict_z0(), pz.restrict_z0()])? {
        return Ok(false);
    }
    match affine_fast_path(f)? {
        Some(verdict) => Ok(verdict),
        None => Ok(!projective_common_zero_exists(&[&px, &py, &pz], d - 1)),
    }
}

/// Whether a family of binary forms has a common point of P^1; zero forms
/// vanish everywhere and are skipped (all-zero input means every point).
pub(crate) fn binary_forms_common_root(forms: &[BinaryForm]) -> Result<bool> {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(true);
    }
    let mut g = nonzero[0].dehomogenize();
    for f in &nonzero[1..] {
        g = upoly_gcd(&g, &f.dehomogenize())?;
    }
    if g.degree().unwrap_or(0) >= 1 {
        return Ok(true);
    }
    let all_drop = nonzero
        .iter()
        .all(|f| f.dehomogenize().degree().unwrap_or(0) < f.degree());
    Ok(all_drop)
}

/// Polynomial in y with coefficients in Q(i)[x]; the affine chart z = 1.
struct ChartPoly {
    coeffs: Vec<UnivariatePoly>,
}

impl ChartPoly {
    /// Restricts F to z = 1. With `swap`, x and y switch roles.
    fn from_chart(f: &TernaryForm, swap: bool) -> Self {
        let mut coeffs: Vec<Vec<GaussianRational>> = Vec::new();
        for (&(a, b, _), coeff) in f.terms() {
            let (xp, yp) = if swap { (b as usize, a as usize) } else { (a as usize, b as usize) };
            if coeffs.len() <= yp {
                coeffs.resize(yp + 1, Vec::new());
            }
            let row = &mut coeffs[yp];
            if row.len() <= xp {
                row.resize(xp + 1, GaussianRational::zero());
            }
            row[xp] = coeff.clone();
        }
        let mut coeffs: Vec<UnivariatePoly> = coeffs
            .into_iter()
            .map(UnivariatePoly::from_coeffs)
            .collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ChartPoly { coeffs }
    }

    fn deg_y(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn derivative_y(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&GaussianRational::from_int(k as i64)))
            .collect();
        ChartPoly { coeffs }
    }

    fn derivative_x(&self) -> Self {
        let mut coeffs: Vec<UnivariatePoly> =
            self.coeffs.iter().map(|c| c.derivative()).collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ChartPoly { coeffs }
    }
}

/// Res_y of two chart polynomials as a univariate polynomial in x, via the
/// Sylvester matrix with polynomial entries and a Bareiss determinant.
fn resultant_y(f: &ChartPoly, g: &ChartPoly) -> UnivariatePoly {
    let m = f.deg_y();
    let n = g.deg_y();
    if f.is_zero() || g.is_zero() {
        return UnivariatePoly::zero();
    }
    if m == 0 {
        return f.coeffs[0].pow(n as u32);
    }
    if n == 0 {
        return g.coeffs[0].pow(m as u32);
    }
    let size = m + n;
    let mut matrix = vec![vec![UnivariatePoly::zero(); size]; size];
    for row in 0..n {
        for k in 0..=m {
            matrix[row][row + k] = f.coeffs[m - k].clone();
        }
    }
    for row in 0..m {
        for k in 0..=n {
            matrix[n + row][row + k] = g.coeffs[n - k].clone();
        }
    }
    bareiss_determinant(matrix)
}

/// Fraction-free determinant over the domain Q(i)[x].
fn bareiss_determinant(mut m: Vec<Vec<UnivariatePoly>>) -> UnivariatePoly {
    let n = m.len();
    if n == 0 {
        return UnivariatePoly::one();
    }
    let mut sign_flip = false;
    let mut prev = UnivariatePoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return UnivariatePoly::zero();
            };
            m.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t
                    .div_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = UnivariatePoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Some(verdict) when the chart analysis is decisive, None when the decision
/// must fall back to the projective rank test.
fn affine_fast_path(f: &TernaryForm) -> Result<Option<bool>> {
    let c = ChartPoly::from_chart(f, false);
    if c.is_zero() {
        return Ok(None);
    }
    if c.deg_y() == 0 {
        // C depends on x alone; singular iff C has a repeated root.
        return univariate_chart_verdict(&c.coeffs[0]).map(Some);
    }
    let swapped = ChartPoly::from_chart(f, true);
    if swapped.deg_y() == 0 {
        return univariate_chart_verdict(&swapped.coeffs[0]).map(Some);
    }
    let cx = c.derivative_x();
    let cy = c.derivative_y();
    let r1 = resultant_y(&c, &cx);
    let r2 = resultant_y(&c, &cy);
    if r1.is_zero() || r2.is_zero() {
        return Ok(None);
    }
    let e = upoly_gcd(&r1, &r2)?;
    if e.degree() == Some(0) {
        return Ok(Some(true));
    }
    Ok(None)
}

/// Chart reduces to one variable: the curve is a union of lines through a
/// point, smooth exactly when the single-variable polynomial is squarefree
/// of degree <= 1 ... i.e. has no repeated root and the projective picture
/// was already cleared by the other checks.
fn univariate_chart_verdict(u: &UnivariatePoly) -> Result<bool> {
    if u.degree().unwrap_or(0) == 0 {
        return Ok(true);
    }
    let g = upoly_gcd(u, &u.derivative())?;
    Ok(g.degree() == Some(0))
}

/// Exact emptiness test for V(f_1, f_2, f_3) in P^2, all forms of degree e:
/// empty iff the multiplication map into degree 3e - 2 is surjective.
fn projective_common_zero_exists(forms: &[&TernaryForm; 3], e: usize) -> bool {
    debug_assert!(e >= 1);
    debug_assert!(forms.iter().all(|f| f.degree() == e && !f.is_zero()));
    let t = 3 * e - 2;
    let cols = monomials_of_degree(t);
    let col_index = |key: (u32, u32, u32)| -> usize {
        // Rows are (a, b) with c determined; dense triangular indexing.
        let (a, b, _) = key;
        let a = a as usize;
        let prior: usize = (0..a).map(|i| t + 1 - i).sum();
        prior + b as usize
    };
    let shifts = monomials_of_degree(t - e);
    let mut rows = Vec::with_capacity(3 * shifts.len());
    for f in forms {
        for &(sa, sb, sc) in &shifts {
            let mut row = vec![GaussianRational::zero(); cols.len()];
            for (&(a, b, c), coeff) in f.terms() {
                row[col_index((a + sa, b + sb, c + sc))] = coeff.clone();
            }
            rows.push(row);
        }
    }
    rank(rows, cols.len()) < cols.len()
}

fn monomials_of_degree(t: usize) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for a in 0..=t {
        for b in 0..=(t - a) {
            out.push((a as u32, b as u32, (t - a - b) as u32));
        }
    }
    out
}

fn rank(mut m: Vec<Vec<GaussianRational>>, cols: usize) -> usize {
    let mut r = 0;
    for col in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][col].inverse().expect("pivot nonzero");
        for i in r + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            for j in col..cols {
                let t = &factor * &m[r][j];
                m[i][j] -= &t;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn form(degree: usize, terms: Vec<((u32, u32, u32), i64)>) -> TernaryForm {
        TernaryForm::new(degree, terms.into_iter().map(|(k, c)| (k, int(c)))).unwrap()
    }

    #[test]
    fn smooth_conic() {
        let f = form(2, vec![((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1)]);
        assert_eq!(smoothness_check_plane(&f, 6).unwrap(), true);
    }

    #[test]
    fn paper_conic_is_smooth() {
        let f = TernaryForm::new(
            2,
            vec![
                ((2, 0, 0), int(1)),
                ((0, 2, 0), int(2)),
                ((0, 1, 1), &int(2) * &GaussianRational::i()),
            ],
        )
        .unwrap();
        assert_eq!(smoothness_check_plane(&f, 6).unwrap(), true);
    }

    #[test]
    fn non_reduced_is_singular() {
        let f = form(3, vec![((2, 1, 0), 1)]); // x^2 y
        assert_eq!(smoothness_check_plane(&f, 6).unwrap(), false);
    }

    #[test]
    fn triangle_is_singular() {
        let f = form(3, vec![((1, 1, 1), 1)]); // xyz
        assert_eq!(smoothness_check_plane(&f, 6).unwrap(), false);
    }

    #[test]
    fn nodal_cubic_is_singular() {
        // y^2 z - x^3 - x^2 z has a node at (0:0:1).
        let f = form(
            3,
            vec![((0, 2, 1), 1), ((3, 0, 0), -1), ((2, 0, 1), -1)],
        );
        assert_eq!(smoothness_check_plane(&f, 6).unwrap(), false);
    }

    #[test]
    fn fermat_curves_are_smooth() {
        for d in 2..=6u32 {
            let f = form(
                d as usize,
                vec![((d, 0, 0), 1), ((0, d, 0), 1), ((0, 0, d), 1)],
            );
            assert_eq!(smoothness_check_plane(&f, 6).unwrap(), true, "d={}", d);
        }
    }

    #[test]
    fn repeated_linear_factor_is_singular() {
        // (x + y + 2z)^2 (x - y + z): the resultants vanish identically and
        // the decision falls through to the rank test.
        let l1 = form(1, vec![((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 2)]);
        let l2 = form(1, vec![((1, 0, 0), 1), ((0, 1, 0), -1), ((0, 0, 1), 1)]);
        let f = l1.mul(&l1).mul(&l2);
        assert_eq!(smoothness_check_plane(&f, 6).unwrap(), false);
    }

    #[test]
    fn smooth_quartic_with_gaussian_coefficients() {
        // x^4 + y^4 + z^4 + i x y z (x + y + z) stays smooth.
        let i = GaussianRational::i();
        let f = TernaryForm::new(
            4,
            vec![
                ((4, 0, 0), int(1)),
                ((0, 4, 0), int(1)),
                ((0, 0, 4), int(1)),
                ((2, 1, 1), i.clone()),
                ((1, 2, 1), i.clone()),
                ((1, 1, 2), i),
            ],
        )
        .unwrap();
        assert_eq!(smoothness_check_plane(&f, 6).unwrap(), true);
    }

    #[test]
    fn degree_above_bound_is_unsupported() {
        let f = form(7, vec![((7, 0, 0), 1), ((0, 7, 0), 1), ((0, 0, 7), 1)]);
        assert!(matches!(
            smoothness_check_plane(&f, 6),
            Err(Error::Unsupported(_))
        ));
        assert_eq!(smoothness_check_plane(&f, 7).unwrap(), true);
    }

    #[test]
    fn cone_over_binary_form_is_singular() {
        // z^2 - x^2 ignores y.
        let f = form(2, vec![((0, 0, 2), 1), ((2, 0, 0), -1)]);
        assert_eq!(smoothness_check_plane(&f, 6).unwrap(), false);
    }

    #[test]
    fn lines_are_smooth() {
        let f = form(1, vec![((1, 0, 0), 1), ((0, 1, 0), 2), ((0, 0, 1), -3)]);
        assert_eq!(smoothness_check_plane(&f, 6).unwrap(), true);
    }

    #[test]
    fn resultant_of_simple_pair() {
        // Res_y(y^2 - x, y - x) = x^2 - x.
        let c = ChartPoly {
            coeffs: vec![
                UnivariatePoly::from_coeffs(vec![int(0), int(-1)]),
                UnivariatePoly::zero(),
                UnivariatePoly::one(),
            ],
        };
        let g = ChartPoly {
            coeffs: vec![
                UnivariatePoly::from_coeffs(vec![int(0), int(-1)]),
                UnivariatePoly::one(),
            ],
        };
        let r = resultant_y(&c, &g);
        let expect =
            UnivariatePoly::from_coeffs(vec![int(0), int(-1), int(1)]);
        assert!(r == expect || r == expect.neg(), "got {}", r);
    }
}
