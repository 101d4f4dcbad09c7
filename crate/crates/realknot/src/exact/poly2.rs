//! Polynomials in one variable with coefficients in `Z[x]`, and their
//! subresultant pseudo-remainder chains.
//!
//! This is the elimination engine: resultants of two bivariate polynomials
//! with respect to the main variable, together with the low-degree chain
//! elements needed for back-substitution (the degree-1 subresultant gives the
//! eliminated variable as a rational function of the surviving one).

use num_bigint::BigInt;
use num_traits::One;

use super::ipoly::{pow_big, IPoly};

/// Polynomial in a main variable `y` with `Z[x]` coefficients, ascending in
/// `y`, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly2 {
    coeffs: Vec<IPoly>,
}

impl Poly2 {
    pub fn new(mut coeffs: Vec<IPoly>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly2 { coeffs }
    }

    pub fn zero() -> Self {
        Poly2 { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the main variable; `-1` for zero.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[IPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> IPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(IPoly::zero)
    }

    /// Leading coefficient in the main variable.
    pub fn lc(&self) -> &IPoly {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly2::new((0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero();
        }
        let mut out = vec![IPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly2::new(out)
    }

    pub fn mul_coeff(&self, s: &IPoly) -> Self {
        if s.is_zero() {
            return Poly2::zero();
        }
        Poly2::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    /// Coefficient-wise exact division by a `Z[x]` polynomial.
    pub fn exact_div_coeff(&self, d: &IPoly) -> Self {
        Poly2::new(self.coeffs.iter().map(|c| if c.is_zero() { IPoly::zero() } else { c.exact_div(d) }).collect())
    }

    /// Content: gcd of the coefficients in `Z[x]`.
    pub fn content(&self) -> IPoly {
        let mut g = IPoly::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.deg() == 0 && g.lc().is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part (content divided out).
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Poly2::zero();
        }
        let c = self.content();
        if c.deg() == 0 && c.lc().is_one() {
            self.clone()
        } else {
            self.exact_div_coeff(&c)
        }
    }

    /// Pseudo-remainder in the main variable (coefficients in `Z[x]`).
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let dd = d.deg();
        if self.deg() < dd {
            return self.clone();
        }
        let l = d.lc().clone();
        let n = (self.deg() - dd) as usize;
        let mut r = self.clone();
        for k in (0..=n).rev() {
            let top = r.coeff(k + dd as usize);
            let mut out: Vec<IPoly> = r.coeffs.iter().map(|c| c.mul(&l)).collect();
            if out.len() < k + dd as usize + 1 {
                out.resize(k + dd as usize + 1, IPoly::zero());
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                out[k + j] = out[k + j].sub(&dc.mul(&top));
            }
            r = Poly2::new(out);
        }
        r
    }

    /// Evaluates the main variable at a rational expressed as `num/den` in
    /// `Z[x]`-land: returns `den^deg * self(num/den)`, a `Z[x]` polynomial.
    pub fn eval_main_homogeneous(&self, num: &IPoly, den: &IPoly) -> IPoly {
        if self.is_zero() {
            return IPoly::zero();
        }
        let n = self.deg() as usize;
        let mut denpows = Vec::with_capacity(n + 1);
        let mut acc = IPoly::constant(BigInt::one());
        for _ in 0..=n {
            denpows.push(acc.clone());
            acc = acc.mul(den);
        }
        let mut result = IPoly::zero();
        for k in (0..=n).rev() {
            result = result.mul(num).add(&self.coeff(k).mul(&denpows[n - k]));
        }
        result
    }
}

/// The subresultant pseudo-remainder chain of `a` and `b` (in the main
/// variable), starting with `a, b` themselves. Later elements are the
/// classical subresultant chain up to `Z[x]`-scalar factors.
pub fn subresultant_chain(a: &Poly2, b: &Poly2) -> Vec<Poly2> {
    let mut chain = vec![a.clone(), b.clone()];
    if a.is_zero() || b.is_zero() {
        return chain;
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        chain = vec![a.clone(), b.clone()];
    }
    let mut g = IPoly::constant(BigInt::one());
    let mut h = IPoly::constant(BigInt::one());
    loop {
        if b.deg() < 0 {
            break;
        }
        let delta = (a.deg() - b.deg()) as usize;
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            break;
        }
        let divisor = g.mul(&pow_ipoly(&h, delta));
        let next = r.exact_div_coeff(&divisor);
        a = b;
        b = next.clone();
        chain.push(next);
        g = a.lc().clone();
        h = if delta == 0 {
            h
        } else {
            pow_ipoly(&g, delta).exact_div(&pow_ipoly(&h, delta - 1))
        };
        if b.deg() <= 0 {
            break;
        }
    }
    chain
}

/// Resultant of `a` and `b` with respect to the main variable, up to a
/// nonzero integer-polynomial-in-`x` factor coming from contents. Returns
/// `None` when the two share a common factor of positive main-variable degree
/// (identically vanishing resultant).
pub fn resultant_main(a: &Poly2, b: &Poly2) -> Option<IPoly> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    if a.deg() == 0 {
        return Some(pow_ipoly(a.lc(), 1));
    }
    if b.deg() == 0 {
        return Some(pow_ipoly(b.lc(), 1));
    }
    let chain = subresultant_chain(a, b);
    let last = chain.last().unwrap();
    if last.deg() == 0 {
        Some(last.lc().clone())
    } else {
        None
    }
}

/// Gcd of two bivariate polynomials, up to sign: the gcd of the contents
/// times the primitive main-variable gcd from the subresultant chain.
pub fn poly2_gcd(a: &Poly2, b: &Poly2) -> Poly2 {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let cg = a.content().gcd(&b.content());
    let pa = a.primitive();
    let pb = b.primitive();
    if pa.deg() == 0 || pb.deg() == 0 {
        // Primitive polynomials share no content, so the gcd is content-level.
        return Poly2::new(vec![cg]);
    }
    let chain = subresultant_chain(&pa, &pb);
    let cand = chain.last().unwrap().primitive();
    if cand.deg() >= 1 && pa.pseudo_rem(&cand).is_zero() && pb.pseudo_rem(&cand).is_zero() {
        cand.mul_coeff(&cg)
    } else {
        Poly2::new(vec![cg])
    }
}

fn pow_ipoly(b: &IPoly, e: usize) -> IPoly {
    let mut acc = IPoly::constant(BigInt::one());
    for _ in 0..e {
        acc = acc.mul(b);
    }
    acc
}

/// Exact resultant scale helper re-exported for callers needing scalar powers.
pub fn pow_int(b: &BigInt, e: usize) -> BigInt {
    pow_big(b, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn c(v: i64) -> IPoly {
        IPoly::constant_i64(v)
    }

    fn xpoly(cs: &[i64]) -> IPoly {
        IPoly::new(cs.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn resultant_eliminates_shared_root_locus() {
        // a(y) = y^2 - x  (coeffs in Z[x]: [-x, 0, 1])
        // b(y) = y - 2    (coeffs: [-2, 1])
        // res_y = a(2) = 4 - x, up to scale.
        let a = Poly2::new(vec![xpoly(&[0, -1]), c(0), c(1)]);
        let b = Poly2::new(vec![c(-2), c(1)]);
        let r = resultant_main(&a, &b).unwrap();
        let want = xpoly(&[4, -1]);
        assert!(r == want || r == want.neg(), "got {:?}", r);
    }

    #[test]
    fn shared_factor_gives_none() {
        // a = (y - x)(y + 1), b = (y - x)(y + 2).
        let ymx = Poly2::new(vec![xpoly(&[0, -1]), c(1)]);
        let a = ymx.mul(&Poly2::new(vec![c(1), c(1)]));
        let b = ymx.mul(&Poly2::new(vec![c(2), c(1)]));
        assert!(resultant_main(&a, &b).is_none());
    }

    #[test]
    fn bivariate_gcd_extracts_shared_factor() {
        let ymx = Poly2::new(vec![xpoly(&[0, -1]), c(1)]); // y - x
        let a = ymx.mul(&Poly2::new(vec![c(1), c(1)]));
        let b = ymx.mul(&Poly2::new(vec![c(2), c(1)]));
        let g = poly2_gcd(&a, &b);
        assert_eq!(g.deg(), 1);
        assert!(poly2_gcd(&a, &Poly2::new(vec![c(3), c(1)])).deg() == 0);
    }

    #[test]
    fn chain_exposes_degree_one_element() {
        // a = y^2 + x, b = y^2 + y + x: prem chain passes through degree 1.
        let a = Poly2::new(vec![xpoly(&[0, 1]), c(0), c(1)]);
        let b = Poly2::new(vec![xpoly(&[0, 1]), c(1), c(1)]);
        let chain = subresultant_chain(&a, &b);
        assert!(chain.iter().any(|p| p.deg() == 1));
        // Common root: y = 0 at x = 0; resultant must vanish at x = 0.
        let r = resultant_main(&a, &b).unwrap();
        assert!(r.coeff(0).is_zero());
    }
}
