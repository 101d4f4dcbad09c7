//! Dense bivariate polynomials over the rationals in two parameters `s, t`.
//!
//! The two operations that matter here are exact division by `s - t`
//! (removing the diagonal from difference expressions) and rewriting a
//! symmetric polynomial in the elementary symmetric coordinates
//! `e1 = s + t`, `e2 = s t`, producing an integer bivariate polynomial
//! suitable for the elimination engine.

use num_traits::Zero;

use super::ipoly::IPoly;
use super::poly::Poly;
use super::poly2::Poly2;
use super::rat::Rat;

/// `coeffs[i][j]` is the coefficient of `s^i t^j`; rows trimmed overall.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPoly {
    coeffs: Vec<Vec<Rat>>,
}

impl BiPoly {
    pub fn new(coeffs: Vec<Vec<Rat>>) -> Self {
        let mut b = BiPoly { coeffs };
        b.trim();
        b
    }

    fn trim(&mut self) {
        for row in &mut self.coeffs {
            while row.last().map_or(false, |c| c.is_zero()) {
                row.pop();
            }
        }
        while self.coeffs.last().map_or(false, |r| r.is_empty()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rat {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Degree in `s`; `-1` for zero.
    pub fn deg_s(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Degree in `t`; `-1` for zero.
    pub fn deg_t(&self) -> isize {
        self.coeffs.iter().map(|r| r.len() as isize).max().unwrap_or(0) - 1
    }

    /// `p(s) * q(t)` for univariate `p`, `q`.
    pub fn product(p: &Poly, q: &Poly) -> Self {
        BiPoly::new(
            p.coeffs()
                .iter()
                .map(|a| q.coeffs().iter().map(|b| a * b).collect())
                .collect(),
        )
    }

    /// The polynomial `p(s)` viewed in two variables.
    pub fn in_s(p: &Poly) -> Self {
        BiPoly::new(p.coeffs().iter().map(|a| vec![a.clone()]).collect())
    }

    /// The polynomial `p(t)` viewed in two variables.
    pub fn in_t(p: &Poly) -> Self {
        BiPoly::new(vec![p.coeffs().to_vec()])
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let ns = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(ns);
        for i in 0..ns {
            let nt = self
                .coeffs
                .get(i)
                .map_or(0, |r| r.len())
                .max(o.coeffs.get(i).map_or(0, |r| r.len()));
            out.push((0..nt).map(|j| self.coeff(i, j) + o.coeff(i, j)).collect());
        }
        BiPoly::new(out)
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|r| r.iter().map(|c| -c).collect()).collect())
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero();
        }
        let ds = (self.deg_s() + o.deg_s()) as usize;
        let dt = (self.deg_t() + o.deg_t()) as usize;
        let mut out = vec![vec![Rat::zero(); dt + 1]; ds + 1];
        for (i, ra) in self.coeffs.iter().enumerate() {
            for (j, a) in ra.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, rb) in o.coeffs.iter().enumerate() {
                    for (l, b) in rb.iter().enumerate() {
                        out[i + k][j + l] += a * b;
                    }
                }
            }
        }
        BiPoly::new(out)
    }

    pub fn scale(&self, r: &Rat) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|row| row.iter().map(|c| c * r).collect()).collect())
    }

    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for row in self.coeffs.iter().rev() {
            let mut inner = Rat::zero();
            for c in row.iter().rev() {
                inner = inner * t + c;
            }
            acc = acc * s + inner;
        }
        acc
    }

    /// Whether `f(s, t) == f(t, s)`.
    pub fn is_symmetric(&self) -> bool {
        let ds = self.deg_s().max(self.deg_t()).max(0) as usize;
        for i in 0..=ds {
            for j in 0..i {
                if self.coeff(i, j) != self.coeff(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `f(s, t) == -f(t, s)`; such polynomials vanish on the diagonal.
    pub fn is_antisymmetric(&self) -> bool {
        let ds = self.deg_s().max(self.deg_t()).max(0) as usize;
        for i in 0..=ds {
            for j in 0..=i {
                if self.coeff(i, j) != -self.coeff(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Exact quotient by `s - t`; panics if the division is not exact.
    pub fn div_s_minus_t(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        // Divide with respect to s: for fixed power of t, f = (s - t) q + r(t);
        // process coefficients of s from the top down.
        let ds = self.deg_s() as usize;
        assert!(ds >= 1, "division of an s-constant by s - t must be zero: {self:?}");
        let dt = self.deg_t().max(0) as usize;
        // q has s-degree ds - 1; remainder must vanish.
        let mut q = vec![vec![Rat::zero(); dt + ds]; ds];
        // Work on a mutable copy of the coefficient table.
        let mut f = vec![vec![Rat::zero(); dt + ds + 1]; ds + 1];
        for i in 0..=ds {
            for j in 0..=dt {
                f[i][j] = self.coeff(i, j);
            }
        }
        for i in (1..=ds).rev() {
            for j in 0..f[i].len() {
                let c = f[i][j].clone();
                if c.is_zero() {
                    continue;
                }
                // s^i t^j = (s - t) s^(i-1) t^j + s^(i-1) t^(j+1).
                q[i - 1][j] += &c;
                f[i - 1][j + 1] += &c;
                f[i][j] = Rat::zero();
            }
        }
        assert!(
            f[0].iter().all(|c| c.is_zero()),
            "polynomial not divisible by s - t"
        );
        BiPoly::new(q)
    }

    /// Rewrites a symmetric polynomial in `e1 = s + t`, `e2 = s t`, clearing
    /// denominators: returns `(F, scale)` with `scale > 0` rational and
    /// `self = scale * F(e1, e2)` after substitution. `F` is a [`Poly2`] in
    /// main variable `e2` with `Z[e1]` coefficients.
    pub fn symmetrize(&self) -> (Poly2, Rat) {
        assert!(self.is_symmetric(), "symmetrize requires a symmetric polynomial");
        // Power tables for e1 = s + t and e2 = s t up to the total degree.
        let dmax = (self.deg_s() + self.deg_t()).max(0) as usize;
        let mut e1t = Vec::with_capacity(dmax + 1);
        let mut e2t = Vec::with_capacity(dmax + 1);
        for k in 0..=dmax {
            if k == 0 {
                e1t.push(pow(&e1_pow(1), 0));
                e2t.push(pow(&e2_pow(1), 0));
            } else {
                e1t.push(e1t[k - 1].mul(&e1_pow(1)));
                e2t.push(e2t[k - 1].mul(&e2_pow(1)));
            }
        }
        // Accumulate rational coefficients of e1^m e2^b, then clear.
        let mut acc: Vec<Vec<Rat>> = Vec::new(); // acc[b][m]: coeff of e1^m e2^b
        let mut rem = self.clone();
        while !rem.is_zero() {
            // Leading monomial in graded-lex with s > t; symmetry gives a >= b
            // for the leader s^a t^b.
            let (a, b, c) = rem.leading_monomial();
            debug_assert!(a >= b, "leader of symmetric polynomial has a < b");
            // Subtract c * e1^(a-b) * e2^b.
            let term = e1t[a - b].mul(&e2t[b]).scale(&c);
            if acc.len() <= b {
                acc.resize(b + 1, Vec::new());
            }
            if acc[b].len() <= a - b {
                acc[b].resize(a - b + 1, Rat::zero());
            }
            acc[b][a - b] += &c;
            rem = rem.sub(&term);
        }
        // scale = 1 / lcm of all coefficient denominators.
        let mut lcm = num_bigint::BigInt::from(1);
        let mut any = false;
        for row in &acc {
            for c in row {
                if !c.is_zero() {
                    any = true;
                    lcm = num_integer::Integer::lcm(&lcm, c.denom());
                }
            }
        }
        if !any {
            return (Poly2::zero(), Rat::new(1.into(), 1.into()));
        }
        let scale = Rat::new(1.into(), lcm.clone());
        let inv = Rat::from_integer(lcm);
        let coeffs: Vec<IPoly> = acc
            .iter()
            .map(|row| {
                IPoly::new(
                    row.iter()
                        .map(|c| {
                            let v = c * &inv;
                            debug_assert!(v.is_integer());
                            v.to_integer()
                        })
                        .collect(),
                )
            })
            .collect();
        (Poly2::new(coeffs), scale)
    }

    /// Largest monomial `(i, j, coeff)` in graded-lex order with `s > t`.
    fn leading_monomial(&self) -> (usize, usize, Rat) {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => {
                        (i + j, i) > (bi + bj, bi)
                    }
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        let (i, j) = best.expect("leading monomial of zero polynomial");
        (i, j, self.coeff(i, j))
    }
}

fn e1_pow(n: usize) -> BiPoly {
    // (s + t)^n.
    let e1 = BiPoly::new(vec![vec![Rat::zero(), Rat::new(1.into(), 1.into())], vec![Rat::new(1.into(), 1.into())]]);
    pow(&e1, n)
}

fn e2_pow(n: usize) -> BiPoly {
    // (s t)^n.
    let e2 = BiPoly::new(vec![vec![Rat::zero()], vec![Rat::zero(), Rat::new(1.into(), 1.into())]]);
    pow(&e2, n)
}

fn pow(b: &BiPoly, n: usize) -> BiPoly {
    let mut acc = BiPoly::new(vec![vec![Rat::new(1.into(), 1.into())]]);
    for _ in 0..n {
        acc = acc.mul(b);
    }
    acc
}
