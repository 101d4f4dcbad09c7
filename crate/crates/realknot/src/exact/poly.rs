//! Dense univariate polynomials over the rationals.
//!
//! [`Poly`] stores coefficients in ascending degree (the crate-wide
//! interchange convention). Heavy algebra — gcd, resultants, root isolation —
//! is delegated to the integer layer after clearing denominators.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ipoly::IPoly;
use super::rat::{format_rat, parse_rat, Rat};

/// Dense rational polynomial, ascending coefficients, trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rat(c))?,
                1 => write!(f, "({})t", format_rat(c))?,
                _ => write!(f, "({})t^{}", format_rat(c), k)?,
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `t` itself.
    pub fn t() -> Self {
        Poly::from_i64s(&[0, 1])
    }

    /// Convenience constructor from small integer coefficients (ascending).
    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    /// Parses a coefficient array of `"a/b"` strings (ascending degree).
    pub fn from_rat_strings(ss: &[String]) -> Result<Self, String> {
        let coeffs = ss.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }

    /// Serializes as a coefficient array of `"a/b"` strings (ascending degree).
    pub fn to_rat_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rat).collect()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `-1` for the zero polynomial.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lc(&self) -> &Rat {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Poly::new(out)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k as u64 + 1)))
                .collect(),
        )
    }

    /// Euclidean division: `(q, r)` with `self = q*d + r`, `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.deg() < d.deg() {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.deg() as usize;
        let n = self.deg() as usize;
        let mut q = vec![Rat::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd] / d.lc();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= dc * &c;
                }
            }
            q[k] = c;
        }
        (Poly::new(q), Poly::new(rem))
    }

    /// Remainder of Euclidean division.
    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "non-exact polynomial division");
        q
    }

    /// Bezout inverse of `self` modulo `m`: the polynomial `u` with
    /// `u * self = 1 (mod m)`, or `None` when the gcd is nonconstant.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        assert!(m.deg() >= 1, "modulus must have positive degree");
        let mut r0 = m.clone();
        let mut s0 = Poly::zero();
        let mut r1 = self.rem(m);
        let mut s1 = Poly::one();
        if r1.is_zero() {
            return None;
        }
        // Invariant: s_i * self = r_i (mod m).
        while !r1.is_zero() {
            let (q, r2) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            r0 = r1;
            s0 = s1;
            r1 = r2;
            s1 = s2;
        }
        if r0.deg() != 0 {
            return None;
        }
        Some(s0.scale(&r0.coeff(0).recip()).rem(m))
    }

    /// Monic gcd (1 for coprime inputs; 0 only when both inputs are 0).
    pub fn gcd(&self, other: &Self) -> Self {
        let (a, _) = self.clear_denominators();
        let (b, _) = other.clear_denominators();
        let g = a.gcd(&b);
        Poly::from_ipoly(&g).monic()
    }

    /// Divides by the leading coefficient; the zero polynomial is unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.lc().clone();
        self.scale(&lc.recip())
    }

    /// Square-free part, monic.
    pub fn squarefree_part(&self) -> Self {
        let (a, _) = self.clear_denominators();
        Poly::from_ipoly(&a.squarefree_part()).monic()
    }

    /// Yun's square-free decomposition: returns `[(g_1, 1), (g_2, 2), ...]`
    /// with `self = lc * prod g_i^i`, each `g_i` monic square-free, trivial
    /// factors omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        assert!(!self.is_zero());
        let f = self.monic();
        if f.deg() <= 0 {
            return vec![];
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        if a0.deg() == 0 {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.exact_div(&a0);
        let mut c = fp.exact_div(&a0);
        let mut i = 1;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.deg() > 0 {
                    out.push((b.monic(), i));
                }
                break;
            }
            let g = b.gcd(&d);
            if g.deg() > 0 {
                out.push((g.monic(), i));
            }
            b = b.exact_div(&g);
            c = d.exact_div(&g);
            i += 1;
            if b.deg() == 0 {
                break;
            }
        }
        out
    }

    /// Clears denominators: returns `(F, s)` with `self = s * F`, `F` a
    /// primitive integer polynomial and `s > 0` rational (sign carried by `F`).
    pub fn clear_denominators(&self) -> (IPoly, Rat) {
        if self.is_zero() {
            return (IPoly::zero(), Rat::one());
        }
        let mut denom = BigInt::one();
        for c in &self.coeffs {
            denom = num_integer::lcm(denom, c.denom().clone());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&denom / c.denom())).collect();
        let f = IPoly::new(ints);
        let content = f.content();
        let f = f.exact_div_scalar(&content);
        (f, Rat::new(content, denom))
    }

    pub fn from_ipoly(f: &IPoly) -> Self {
        Poly::new(f.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// Resultant of two rational polynomials (exact).
    pub fn resultant(&self, other: &Self) -> Rat {
        assert!(!self.is_zero() && !other.is_zero(), "resultant of zero polynomial");
        if self.deg() == 0 {
            return pow_rat(self.lc(), other.deg() as usize);
        }
        if other.deg() == 0 {
            return pow_rat(other.lc(), self.deg() as usize);
        }
        let (f, sf) = self.clear_denominators();
        let (g, sg) = other.clear_denominators();
        let r = f.resultant(&g);
        Rat::from_integer(r) * pow_rat(&sf, other.deg() as usize) * pow_rat(&sg, self.deg() as usize)
    }

    /// Substitutes `t -> a*t + b`.
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> Self {
        let lin = Poly::new(vec![b.clone(), a.clone()]);
        self.compose(&lin)
    }

    /// Substitutes `t -> g(t)` (Horner over polynomials).
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Reversal to length `n+1`: returns `t^n * f(1/t)`, the chart-swap of a
    /// degree-`<= n` coordinate polynomial.
    pub fn reverse_to(&self, n: usize) -> Self {
        assert!(self.deg() <= n as isize, "reversal length too small");
        let mut out = vec![Rat::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[n - k] = c.clone();
        }
        Poly::new(out)
    }
}

fn pow_rat(b: &Rat, e: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    #[test]
    fn divrem_round_trip() {
        let f = Poly::from_i64s(&[1, 2, 0, 3, 5]);
        let d = Poly::from_i64s(&[2, 1, 7]);
        let (q, r) = f.divrem(&d);
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.deg() < d.deg());
    }

    #[test]
    fn gcd_monic() {
        let f = Poly::from_i64s(&[-1, 0, 1]);
        let g = Poly::from_i64s(&[-3, 3]);
        assert_eq!(f.gcd(&g), Poly::from_i64s(&[-1, 1]));
    }

    #[test]
    fn resultant_examples() {
        // res(t - 1, t - 2) = f(2) = 1 in the chosen convention.
        let r = Poly::from_i64s(&[-1, 1]).resultant(&Poly::from_i64s(&[-2, 1]));
        assert_eq!(r, rat(1, 1));
        let r = Poly::from_i64s(&[1, 0, 1]).resultant(&Poly::from_i64s(&[-2, 0, 1]));
        assert_eq!(r, rat(9, 1));
        let r = Poly::from_i64s(&[-1, 0, 1]).resultant(&Poly::from_i64s(&[-1, 1]));
        assert_eq!(r, rat(0, 1));
    }

    #[test]
    fn resultant_respects_rational_scaling() {
        // res(f/2, g) = (1/2)^deg g * res(f, g).
        let f = Poly::from_i64s(&[3, -4, 1]).scale(&rat(1, 2));
        let g = Poly::from_i64s(&[2, 0, 1]);
        assert_eq!(f.resultant(&g), rat(33, 4));
    }

    #[test]
    fn squarefree_decomposition_recovers_factors() {
        // (t-1)^2 (t+3).
        let f = Poly::from_i64s(&[-1, 1]);
        let g = Poly::from_i64s(&[3, 1]);
        let prod = f.mul(&f).mul(&g);
        let dec = prod.squarefree_decomposition();
        assert_eq!(dec, vec![(g.clone(), 1), (f.clone(), 2)]);
    }

    #[test]
    fn compose_and_reverse() {
        let f = Poly::from_i64s(&[-2, 0, 1]); // t^2 - 2
        // f(t+1) = t^2 + 2t - 1.
        assert_eq!(f.compose_linear(&rat(1, 1), &rat(1, 1)), Poly::from_i64s(&[-1, 2, 1]));
        // t^3 * f(1/t) with n=3: t^3 (1/t^2 - 2) = t - 2t^3.
        assert_eq!(f.reverse_to(3), Poly::from_i64s(&[0, 1, 0, -2]));
    }
}
