//! Fast bivariate elimination by evaluation and interpolation.
//!
//! For two polynomials in a main variable with `Z[x]` coefficients, the
//! resultant and the order-1 subresultant are determinants of matrices whose
//! entries are polynomials in `x`. Both specialize cleanly at any `x = xi`
//! where neither leading coefficient vanishes, so they can be computed by
//! fraction-free (Bareiss) determinants at enough integer points and
//! recovered exactly by Newton interpolation. This avoids the coefficient
//! blow-up of a symbolic subresultant chain over `Z[x]`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ipoly::IPoly;
use super::poly::Poly;
use super::poly2::Poly2;
use super::rat::Rat;

/// Exact determinant of an integer matrix (Bareiss fraction-free
/// elimination with row pivoting).
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Output of [`eliminate`]: the resultant in `x` and the order-1
/// subresultant `s1_a * y + s1_b` used for back-substitution.
pub struct ElimOut {
    pub resultant: IPoly,
    pub s1_a: IPoly,
    pub s1_b: IPoly,
}

/// Coefficients of `f` evaluated at `x = xi`, highest main-variable degree
/// first; `None` when the leading coefficient vanishes at `xi`.
fn specialize(f: &Poly2, xi: i64) -> Option<Vec<BigInt>> {
    let p = BigInt::from(xi);
    let q = BigInt::one();
    let vals: Vec<BigInt> = (0..=f.deg() as usize)
        .rev()
        .map(|k| f.coeff(k).eval_homogeneous(&p, &q))
        .collect();
    if vals[0].is_zero() {
        None
    } else {
        Some(vals)
    }
}

/// Sylvester matrix of two coefficient lists (descending, exact degrees).
fn sylvester(a: &[BigInt], b: &[BigInt]) -> Vec<Vec<BigInt>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for r in 0..n {
        for (j, c) in a.iter().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in b.iter().enumerate() {
            mat[n + r][r + j] = c.clone();
        }
    }
    mat
}

/// The order-1 subresultant of two coefficient lists as `(a, b)` with
/// `S1(y) = a y + b`, via two determinants of the subresultant matrix.
fn s1_dets(av: &[BigInt], bv: &[BigInt]) -> (BigInt, BigInt) {
    let m = av.len() - 1;
    let n = bv.len() - 1;
    if m == 1 && n == 1 {
        return (av[0].clone(), av[1].clone());
    }
    // Rows y^(n-2) A .. A, y^(m-2) B .. B; row length m + n - 1.
    let rows = m + n - 2;
    let cols = m + n - 1;
    let mut mat = vec![vec![BigInt::zero(); cols]; rows];
    for r in 0..n - 1 {
        for (j, c) in av.iter().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..m - 1 {
        for (j, c) in bv.iter().enumerate() {
            mat[n - 1 + r][r + j] = c.clone();
        }
    }
    // detpol: a = det(first rows columns), b = det(first rows-1 cols + last).
    let a_mat: Vec<Vec<BigInt>> = mat.iter().map(|r| r[..rows].to_vec()).collect();
    let b_mat: Vec<Vec<BigInt>> = mat
        .iter()
        .map(|r| {
            let mut row = r[..rows - 1].to_vec();
            row.push(r[cols - 1].clone());
            row
        })
        .collect();
    (bareiss_det(a_mat), bareiss_det(b_mat))
}

/// Exact Newton interpolation through `(xi, value)` points.
fn interpolate(points: &[(i64, BigInt)]) -> Poly {
    let n = points.len();
    let xs: Vec<Rat> = points.iter().map(|(x, _)| Rat::from_integer(BigInt::from(*x))).collect();
    // Divided differences.
    let mut dd: Vec<Rat> = points.iter().map(|(_, v)| Rat::from_integer(v.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    // Horner assembly: p = dd[n-1]; p = p*(x - xs[i]) + dd[i].
    let mut p = Poly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = Poly::new(vec![-xs[i].clone(), Rat::one()]);
        p = p.mul(&lin).add(&Poly::constant(dd[i].clone()));
    }
    p
}

fn max_coeff_deg(f: &Poly2) -> usize {
    f.coeffs().iter().map(|c| c.deg().max(0) as usize).max().unwrap_or(0)
}

fn to_ipoly_exact(p: &Poly) -> IPoly {
    IPoly::new(
        p.coeffs()
            .iter()
            .map(|c| {
                assert!(c.denom().is_one(), "interpolant of an integer polynomial is integral");
                c.numer().clone()
            })
            .collect(),
    )
}

/// Resultant of `fa` and `fb` (with respect to the main variable) together
/// with the order-1 subresultant, by evaluation/interpolation. Returns
/// `None` when the resultant vanishes identically (shared factor) or the
/// subresultant is identically zero.
pub fn eliminate(fa: &Poly2, fb: &Poly2) -> Option<ElimOut> {
    let resultant = resultant_interp(fa, fb)?;
    let m = fa.deg().max(0) as usize;
    let n = fb.deg().max(0) as usize;
    let d = max_coeff_deg(fa).max(max_coeff_deg(fb));
    let bound = (m + n).saturating_sub(2) * d + 1;
    let mut pts_a = Vec::with_capacity(bound + 1);
    let mut pts_b = Vec::with_capacity(bound + 1);
    let mut xi = 0i64;
    while pts_a.len() <= bound {
        let x = next_xi(&mut xi);
        let (av, bv) = match (specialize(fa, x), specialize(fb, x)) {
            (Some(a), Some(b)) => (a, b),
            _ => continue,
        };
        let (sa, sb) = s1_dets(&av, &bv);
        pts_a.push((x, sa));
        pts_b.push((x, sb));
    }
    let s1_a = to_ipoly_exact(&interpolate(&pts_a));
    let s1_b = to_ipoly_exact(&interpolate(&pts_b));
    if s1_a.is_zero() {
        return None;
    }
    Some(ElimOut { resultant, s1_a, s1_b })
}

/// Resultant with respect to the main variable via interpolation; `None`
/// when it vanishes identically.
pub fn resultant_interp(fa: &Poly2, fb: &Poly2) -> Option<IPoly> {
    if fa.deg() < 1 || fb.deg() < 1 {
        return None;
    }
    let m = fa.deg() as usize;
    let n = fb.deg() as usize;
    let bound = m * max_coeff_deg(fb) + n * max_coeff_deg(fa) + 1;
    let mut pts = Vec::with_capacity(bound + 1);
    let mut xi = 0i64;
    while pts.len() <= bound {
        let x = next_xi(&mut xi);
        let (av, bv) = match (specialize(fa, x), specialize(fb, x)) {
            (Some(a), Some(b)) => (a, b),
            _ => continue,
        };
        pts.push((x, bareiss_det(sylvester(&av, &bv))));
    }
    let r = to_ipoly_exact(&interpolate(&pts));
    if r.is_zero() {
        None
    } else {
        Some(r)
    }
}

/// Sample points 0, 1, -1, 2, -2, ...
fn next_xi(state: &mut i64) -> i64 {
    let x = *state;
    *state = if x >= 0 { -(x + 1) } else { -x };
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> IPoly {
        IPoly::constant_i64(v)
    }

    fn xp(cs: &[i64]) -> IPoly {
        IPoly::new(cs.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn bareiss_matches_small_dets() {
        let m = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(4)],
        ];
        assert_eq!(bareiss_det(m), BigInt::from(-2));
        let m = vec![
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(3)],
            vec![BigInt::from(4), BigInt::from(-3), BigInt::from(8)],
        ];
        // det = 0*(0*8-3*(-3)) - 1*(8-12) + 2*(-3-0) = 4 - 6 = -2.
        assert_eq!(bareiss_det(m), BigInt::from(-2));
    }

    #[test]
    fn interp_resultant_matches_chain() {
        // a(y) = y^2 - x, b(y) = y - 2: res ~ 4 - x (chain gives it up to
        // factor; interpolation gives it exactly: res = a(2) = 4 - x).
        let a = Poly2::new(vec![xp(&[0, -1]), c(0), c(1)]);
        let b = Poly2::new(vec![c(-2), c(1)]);
        let r = resultant_interp(&a, &b).unwrap();
        assert_eq!(r, xp(&[4, -1]));
    }

    #[test]
    fn interp_detects_shared_factor() {
        let ymx = Poly2::new(vec![xp(&[0, -1]), c(1)]);
        let a = ymx.mul(&Poly2::new(vec![c(1), c(1)]));
        let b = ymx.mul(&Poly2::new(vec![c(2), c(1)]));
        assert!(resultant_interp(&a, &b).is_none());
    }

    #[test]
    fn eliminate_gives_consistent_back_substitution() {
        // a = y^2 + x, b = y^2 + y + x: common root y = -x ... actually
        // subtracting gives y = 0, so at a common zero x = 0, y = 0.
        // Check: resultant vanishes at x = 0 and -s1_b/s1_a gives y there.
        let a = Poly2::new(vec![xp(&[0, 1]), c(0), c(1)]);
        let b = Poly2::new(vec![xp(&[0, 1]), c(1), c(1)]);
        let out = eliminate(&a, &b).unwrap();
        assert!(out.resultant.coeff(0).is_zero());
        // y = -s1_b(0)/s1_a(0) must be 0: s1_b(0) = 0, s1_a(0) != 0.
        assert!(out.s1_b.coeff(0).is_zero());
        assert!(!out.s1_a.coeff(0).is_zero());
    }

    #[test]
    fn eliminate_quadratic_pair_locates_root() {
        // a = y^2 - x, b = y^2 - 2y + x: common zero needs y = x, so
        // x^2 = x: x in {0, 1}; resultant must vanish at both.
        let a = Poly2::new(vec![xp(&[0, -1]), c(0), c(1)]);
        let b = Poly2::new(vec![xp(&[0, 1]), c(-2), c(1)]);
        let out = eliminate(&a, &b).unwrap();
        let r = &out.resultant;
        assert_eq!(r.sign_at(&Rat::from_integer(BigInt::from(0))), 0);
        assert_eq!(r.sign_at(&Rat::from_integer(BigInt::from(1))), 0);
        // Back-substitution at x = 1 gives y = 1: s1_a(1) + s1_b(1) = 0
        // reading S1(y) = s1_a y + s1_b.
        let one = Rat::from_integer(BigInt::from(1));
        let va = out.s1_a.eval_homogeneous(one.numer(), one.denom());
        let vb = out.s1_b.eval_homogeneous(one.numer(), one.denom());
        assert_eq!(va + vb, BigInt::zero());
    }
}
