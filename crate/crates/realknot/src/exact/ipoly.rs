//! Dense univariate polynomials over the integers.
//!
//! These are the workhorses behind gcds, resultants and Sturm sequences: all
//! pseudo-remainder sequences run over `Z` (or `Z[x]`, see `poly2`) so that
//! no rational normalization is needed mid-computation.
//!
//! Coefficients are stored in ascending degree with a trimmed (nonzero)
//! leading coefficient; the zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;

/// Dense integer polynomial, ascending coefficients, trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IPoly {
    coeffs: Vec<BigInt>,
}

impl std::fmt::Debug for IPoly {
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
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})t", c)?,
                _ => write!(f, "({})t^{}", c, k)?,
            }
        }
        Ok(())
    }
}

impl IPoly {
    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        IPoly { coeffs: vec![] }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: BigInt) -> Self {
        IPoly::new(vec![c])
    }

    /// The constant polynomial from an `i64`.
    pub fn constant_i64(c: i64) -> Self {
        IPoly::constant(BigInt::from(c))
    }

    /// Coefficients, ascending degree.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of degree `k` (zero if beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `-1` for the zero polynomial.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn neg(&self) -> Self {
        IPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IPoly::new(out)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return IPoly::zero();
        }
        IPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return IPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        IPoly::new(out)
    }

    /// Divides every coefficient by `s`, which must divide exactly.
    pub fn exact_div_scalar(&self, s: &BigInt) -> Self {
        debug_assert!(!s.is_zero());
        IPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(s);
                    debug_assert!(r.is_zero(), "non-exact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Exact polynomial division; panics if `d` does not divide `self` over `Z`.
    pub fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return IPoly::zero();
        }
        let dd = d.deg() as usize;
        let n = self.deg() as usize;
        assert!(n >= dd, "non-exact division: degree too small");
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let (c, r) = rem[k + dd].div_rem(d.lc());
            debug_assert!(r.is_zero(), "non-exact polynomial division");
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= dc * &c;
                }
            }
            q[k] = c;
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()), "nonzero remainder in exact division");
        IPoly::new(q)
    }

    /// Pseudo-division: returns `(q, r)` with
    /// `lc(d)^(deg self - deg d + 1) * self = q*d + r` and `deg r < deg d`.
    pub fn pseudo_divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let dd = d.deg();
        if self.deg() < dd {
            return (IPoly::zero(), self.clone());
        }
        let l = d.lc().clone();
        let n = (self.deg() - dd) as usize;
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); n + 1];
        for k in (0..=n).rev() {
            // Multiply accumulated quotient and remainder by l, then reduce.
            for c in q.iter_mut() {
                *c *= &l;
            }
            let top = r.coeff(k + dd as usize);
            let mut out: Vec<BigInt> = r.coeffs.iter().map(|c| c * &l).collect();
            if out.len() < k + dd as usize + 1 {
                out.resize(k + dd as usize + 1, BigInt::zero());
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                out[k + j] -= dc * &top;
            }
            r = IPoly::new(out);
            q[k] = top;
        }
        (IPoly::new(q), r)
    }

    /// Pseudo-remainder `prem(self, d)`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        self.pseudo_divrem(d).1
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IPoly::zero();
        }
        IPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * BigInt::from(k as u64 + 1))
                .collect(),
        )
    }

    /// Content: gcd of the coefficients, nonnegative (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive_signed(&self) -> Self {
        if self.is_zero() {
            return IPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.exact_div_scalar(&c)
    }

    /// Greatest common divisor via the primitive pseudo-remainder sequence;
    /// the result is primitive with a positive leading coefficient (times the
    /// gcd of the contents when both inputs are non-primitive constants-wise).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_signed();
        }
        if other.is_zero() {
            return self.primitive_signed();
        }
        let cont = self.content().gcd(&other.content());
        let mut a = self.primitive_signed();
        let mut b = other.primitive_signed();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_signed();
            a = b;
            b = r;
        }
        if a.deg() == 0 {
            IPoly::constant(cont)
        } else {
            a.mul_scalar(&cont)
        }
    }

    /// Greatest common divisor via small-prime homomorphic images with
    /// Chinese-remainder lifting and an exact trial-division check. Falls
    /// back to the pseudo-remainder sequence for small inputs. Output is
    /// normalized exactly like [`IPoly::gcd`].
    pub fn gcd_fast(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() || self.deg() <= 6 || other.deg() <= 6 {
            return self.gcd(other);
        }
        let cont = self.content().gcd(&other.content());
        let a = self.primitive_signed();
        let b = other.primitive_signed();
        let gamma: BigInt = a.lc().gcd(b.lc());
        let finish = |g: IPoly| {
            if g.deg() == 0 {
                IPoly::constant(cont.clone())
            } else {
                g.mul_scalar(&cont)
            }
        };

        let mut best_deg = usize::MAX;
        // (modulus, coefficients lifted so far) for the accumulated CRT image
        // of gamma * monic gcd.
        let mut acc: Option<(BigInt, Vec<BigInt>)> = None;
        let mut last_candidate: Option<IPoly> = None;
        for &p in modgcd::primes() {
            let (pa, pb) = match (modgcd::reduce(&a, p), modgcd::reduce(&b, p)) {
                (Some(x), Some(y)) => (x, y),
                _ => continue, // prime kills a leading coefficient
            };
            let g = modgcd::gcd_mod(pa, pb, p);
            let d = g.len() - 1;
            if d == 0 {
                // Unlucky primes only enlarge the image degree, so a
                // degree-zero image certifies a trivial gcd.
                return finish(IPoly::constant(BigInt::one()));
            }
            if d > best_deg {
                continue;
            }
            if d < best_deg {
                best_deg = d;
                acc = None;
                last_candidate = None;
            }
            let scaled = modgcd::scale_monic(&g, &gamma, p);
            acc = Some(match acc {
                None => (BigInt::from(p), scaled.iter().map(|&c| BigInt::from(c)).collect()),
                Some((m, cs)) => modgcd::crt_step(m, cs, &scaled, p),
            });
            let (m, cs) = acc.as_ref().unwrap();
            // The CRT image is in descending degree; IPoly stores ascending.
            let candidate = IPoly::new(cs.iter().rev().map(|c| modgcd::symmetric(c, m)).collect())
                .primitive_signed();
            if last_candidate.as_ref() == Some(&candidate) {
                if modgcd::divides(&candidate, &a) && modgcd::divides(&candidate, &b) {
                    return finish(candidate);
                }
            }
            last_candidate = Some(candidate);
        }
        // Prime table exhausted without a verified image; fall back.
        self.gcd(other)
    }

    /// Bezout cofactor against `m` by a fraction-free extended remainder
    /// sequence: returns `(u, c)` with `u * self = c (mod m)` for a nonzero
    /// integer constant `c`, or `None` when `gcd(self, m)` is nonconstant
    /// (no inverse modulo `m`). Expects `deg self < deg m`.
    pub fn bezout_constant(&self, m: &IPoly) -> Option<(IPoly, BigInt)> {
        assert!(m.deg() >= 1, "modulus must have positive degree");
        if self.is_zero() {
            return None;
        }
        let mut r0 = m.clone();
        let mut s0 = IPoly::zero();
        let mut r1 = self.clone();
        let mut s1 = IPoly::constant(BigInt::one());
        // Invariant: r_i = s_i * self (mod m).
        while r1.deg() > 0 {
            let e = (r0.deg() - r1.deg() + 1) as usize;
            let (q, r2) = r0.pseudo_divrem(&r1);
            let l = pow_big(r1.lc(), e);
            let mut r2 = r2;
            let mut s2 = s0.mul_scalar(&l).sub(&q.mul(&s1));
            // Joint content removal keeps the growth polynomial.
            let g = r2.content().gcd(&s2.content());
            if g > BigInt::one() {
                if !r2.is_zero() {
                    r2 = r2.exact_div_scalar(&g);
                }
                if !s2.is_zero() {
                    s2 = s2.exact_div_scalar(&g);
                }
            }
            r0 = r1;
            s0 = s1;
            r1 = r2;
            s1 = s2;
            if r1.is_zero() {
                return if r0.deg() == 0 { Some((s0, r0.coeff(0))) } else { None };
            }
        }
        Some((s1, r1.coeff(0)))
    }

    /// Square-free part computed with [`IPoly::gcd_fast`].
    pub fn squarefree_fast(&self) -> Self {
        if self.deg() <= 0 {
            return IPoly::constant(BigInt::one());
        }
        let g = self.gcd_fast(&self.derivative());
        if g.deg() == 0 {
            return self.primitive_signed();
        }
        let (q, r) = self.pseudo_divrem(&g);
        debug_assert!(r.is_zero(), "gcd does not pseudo-divide its multiple");
        let mut out = q.primitive_signed();
        if out.lc().is_negative() {
            out = out.neg();
        }
        out
    }

    /// Square-free part (`f / gcd(f, f')` up to scale), primitive with a
    /// positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        if self.deg() <= 0 {
            return IPoly::constant(BigInt::one());
        }
        let g = self.gcd(&self.derivative());
        if g.deg() == 0 {
            self.primitive_signed()
        } else {
            // g | self over Q; pseudo-division then primitivization recovers
            // the quotient up to a positive scalar.
            let (q, r) = self.pseudo_divrem(&g);
            debug_assert!(r.is_zero(), "gcd does not pseudo-divide its multiple");
            let mut out = q.primitive_signed();
            if self.lc().is_positive() != out.lc().is_positive() {
                out = out.neg();
            }
            // Normalize to positive leading coefficient regardless.
            if out.lc().is_negative() {
                out = out.neg();
            }
            out
        }
    }

    /// Resultant of `self` and `other` (exact, via the subresultant
    /// sequence), in the convention `res(f, g) = lc(g)^deg f * prod f(beta_j)`
    /// over the roots of `g`; e.g. `res(t - 1, t - 2) = 1`.
    pub fn resultant(&self, other: &Self) -> BigInt {
        let r = resultant_sub(self, other);
        if self.deg() > 0 && other.deg() > 0 && (self.deg() * other.deg()) % 2 == 1 {
            -r
        } else {
            r
        }
    }

    /// Evaluates at the rational `x = p/q` after clearing denominators:
    /// returns `q^deg * f(p/q)`, whose sign is `sign(f(p/q))` when `q > 0`.
    pub fn eval_homogeneous(&self, p: &BigInt, q: &BigInt) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let n = self.deg() as usize;
        let mut qpows = Vec::with_capacity(n + 1);
        let mut acc = BigInt::one();
        for _ in 0..=n {
            qpows.push(acc.clone());
            acc *= q;
        }
        let mut result = BigInt::zero();
        for k in (0..=n).rev() {
            result = result * p + self.coeff(k) * &qpows[n - k];
        }
        result
    }

    /// Sign of `f(x)` for rational `x`.
    pub fn sign_at(&self, x: &Rat) -> i8 {
        let v = self.eval_homogeneous(x.numer(), x.denom());
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign at `+inf` (`dir = +1`) or `-inf` (`dir = -1`).
    pub fn sign_at_infinity(&self, dir: i8) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let mut s = if self.lc().is_positive() { 1 } else { -1 };
        if dir < 0 && self.deg() % 2 == 1 {
            s = -s;
        }
        s
    }

    /// Cauchy root bound: every real root lies in `(-M, M)`.
    pub fn cauchy_bound(&self) -> Rat {
        assert!(!self.is_zero());
        let lc = self.lc().abs();
        let mut max = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > max {
                max = a;
            }
        }
        Rat::one() + Rat::new(max, lc)
    }
}

/// Exact resultant by the subresultant pseudo-remainder sequence
/// (Cohen, *A Course in Computational Algebraic Number Theory*, Alg. 3.3.7).
fn resultant_sub(f: &IPoly, g: &IPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    if f.deg() == 0 {
        return pow_big(f.lc(), g.deg() as usize);
    }
    if g.deg() == 0 {
        return pow_big(g.lc(), f.deg() as usize);
    }
    let ca = f.content();
    let cb = g.content();
    let mut a = f.exact_div_scalar(&ca);
    let mut b = g.exact_div_scalar(&cb);
    let mut s = BigInt::one();
    let t = pow_big(&ca, b.deg() as usize) * pow_big(&cb, a.deg() as usize);
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g_val = BigInt::one();
    let mut h_val = BigInt::one();
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = (da - db) as usize;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let denom = &g_val * pow_big(&h_val, delta);
        b = if r.is_zero() { IPoly::zero() } else { r.exact_div_scalar(&denom) };
        g_val = a.lc().clone();
        h_val = if delta == 0 {
            h_val
        } else {
            exact_quot(&pow_big(&g_val, delta), &pow_big(&h_val, delta - 1))
        };
        if b.is_zero() {
            // Positive-degree common factor: resultant vanishes.
            return BigInt::zero();
        }
        if b.deg() == 0 {
            let da = a.deg() as usize;
            let num = pow_big(b.lc(), da);
            let h_final = exact_quot(&num, &pow_big(&h_val, da.saturating_sub(1)));
            return s * t * h_final;
        }
    }
}

pub(crate) fn pow_big(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut base = b.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

fn exact_quot(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    debug_assert!(r.is_zero(), "non-exact quotient in subresultant bookkeeping");
    q
}

/// Small-prime machinery behind [`IPoly::gcd_fast`].
mod modgcd {
    use super::IPoly;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{ToPrimitive, Zero};
    use std::sync::OnceLock;

    /// 31-bit primes (products of residues fit in `u64`).
    pub fn primes() -> &'static [u64] {
        static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
        TABLE.get_or_init(|| {
            let mut out = Vec::with_capacity(128);
            let mut n: u64 = (1 << 31) - 1;
            while out.len() < 128 {
                if is_prime(n) {
                    out.push(n);
                }
                n -= 2;
            }
            out
        })
    }

    fn is_prime(n: u64) -> bool {
        if n < 4 {
            return n > 1;
        }
        if n % 2 == 0 || n % 3 == 0 {
            return false;
        }
        let mut d = 5;
        while d * d <= n {
            if n % d == 0 || n % (d + 2) == 0 {
                return false;
            }
            d += 6;
        }
        true
    }

    /// Coefficients of `f` mod `p`, descending degree; `None` if the
    /// leading coefficient vanishes.
    pub fn reduce(f: &IPoly, p: u64) -> Option<Vec<u64>> {
        let pb = BigInt::from(p);
        let out: Vec<u64> = f
            .coeffs()
            .iter()
            .rev()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect();
        if out[0] == 0 {
            None
        } else {
            Some(out)
        }
    }

    fn mulmod(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    fn invmod(a: u64, p: u64) -> u64 {
        // Extended Euclid; p prime, a != 0 mod p.
        let (mut r0, mut r1) = (p as i128, (a % p) as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        (t0.rem_euclid(p as i128)) as u64
    }

    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        let nz = v.iter().position(|&c| c != 0).unwrap_or(v.len());
        v.drain(..nz);
        v
    }

    /// Monic gcd mod `p` of two descending coefficient vectors.
    pub fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
        while !b.is_empty() {
            // a mod b.
            let inv = invmod(b[0], p);
            while a.len() >= b.len() {
                let c = mulmod(a[0], inv, p);
                if c != 0 {
                    for (ai, bi) in a.iter_mut().zip(b.iter()) {
                        let s = mulmod(c, *bi, p);
                        *ai = (*ai + p - s) % p;
                    }
                }
                a = trim(a);
                if a.is_empty() {
                    break;
                }
            }
            std::mem::swap(&mut a, &mut b);
        }
        // Make monic.
        let inv = invmod(a[0], p);
        a.iter().map(|&c| mulmod(c, inv, p)).collect()
    }

    /// `gamma * g` for monic `g`, coefficients mod `p`.
    pub fn scale_monic(g: &[u64], gamma: &BigInt, p: u64) -> Vec<u64> {
        let gm = gamma.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        g.iter().map(|&c| mulmod(c, gm, p)).collect()
    }

    /// One CRT lifting step: combine `(m, cs)` with a fresh image mod `p`.
    pub fn crt_step(m: BigInt, cs: Vec<BigInt>, image: &[u64], p: u64) -> (BigInt, Vec<BigInt>) {
        debug_assert_eq!(cs.len(), image.len());
        let pb = BigInt::from(p);
        let m_mod_p = m.mod_floor(&pb).to_u64().unwrap();
        let minv = invmod(m_mod_p, p);
        let out = cs
            .into_iter()
            .zip(image.iter())
            .map(|(c, &v)| {
                let c_mod_p = c.mod_floor(&pb).to_u64().unwrap();
                let diff = (v + p - c_mod_p) % p;
                let k = mulmod(diff, minv, p);
                c + &m * BigInt::from(k)
            })
            .collect();
        (&m * pb, out)
    }

    /// Symmetric (balanced) representative of `c` mod `m`.
    pub fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
        let r = c.mod_floor(m);
        if &r * 2 > *m {
            r - m
        } else {
            r
        }
    }

    /// Exact divisibility over `Q` for a primitive divisor: by Gauss's
    /// lemma this coincides with divisibility over `Z`, so integer
    /// synthetic division with exactness checks decides it.
    pub fn divides(d: &IPoly, f: &IPoly) -> bool {
        if d.deg() > f.deg() {
            return false;
        }
        let dd = d.deg() as usize;
        let mut rem: Vec<BigInt> = f.coeffs().to_vec();
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (q, r) = rem[k].div_rem(d.lc());
            if !r.is_zero() {
                return false;
            }
            for (j, dc) in d.coeffs().iter().enumerate() {
                rem[k - dd + j] -= dc * &q;
            }
        }
        rem[..dd].iter().all(|c| c.is_zero())
    }
}
