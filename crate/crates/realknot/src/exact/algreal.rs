//! Exact real algebraic numbers.
//!
//! An [`AlgReal`] is either an exact rational or the unique root of a
//! square-free primitive integer polynomial inside an open rational interval.
//! All predicates (sign, comparison, sign of a polynomial evaluated at the
//! number) are decided exactly: interval refinement answers the generic case
//! and a gcd computation settles exact vanishing.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

use super::ipoly::IPoly;
use super::poly::Poly;
use super::poly2::{resultant_main, Poly2};
use super::rat::{sign as rat_sign, to_f64, Rat};
use super::sturm::{count_roots, isolate_real_roots, sturm_sequence, Bound, IsolatedRoot};

/// A real algebraic number: exact rational, or isolated irrational root.
#[derive(Clone, Debug)]
pub enum AlgReal {
    Rational(Rat),
    Algebraic(AlgebraicRoot),
}

/// The unique root of `poly` in the open interval `(lo, hi)`; `poly` is
/// square-free and primitive with positive leading coefficient, and neither
/// endpoint is a root.
#[derive(Clone, Debug)]
pub struct AlgebraicRoot {
    pub(crate) poly: IPoly,
    pub(crate) lo: Rat,
    pub(crate) hi: Rat,
}

impl AlgebraicRoot {
    fn half(&mut self) {
        let two = Rat::from_integer(2.into());
        let mid = (&self.lo + &self.hi) / &two;
        if self.poly.sign_at(&mid) == 0 {
            // The root turned out rational; collapse the interval onto it.
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        if self.poly.sign_at(&self.lo) * self.poly.sign_at(&mid) < 0 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    fn is_collapsed(&self) -> bool {
        self.lo == self.hi
    }
}

impl AlgReal {
    pub fn from_rat(r: Rat) -> Self {
        AlgReal::Rational(r)
    }

    pub fn from_int(n: i64) -> Self {
        AlgReal::Rational(Rat::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        AlgReal::from_int(0)
    }

    /// Wraps an isolated root of the given square-free polynomial.
    pub fn from_isolated(poly: &IPoly, root: &IsolatedRoot) -> Self {
        match root {
            IsolatedRoot::Rational(r) => AlgReal::Rational(r.clone()),
            IsolatedRoot::Interval { lo, hi } => AlgReal::Algebraic(AlgebraicRoot {
                poly: poly.clone(),
                lo: lo.clone(),
                hi: hi.clone(),
            }),
        }
    }

    /// All real roots of a rational polynomial with multiplicities, sorted
    /// increasing; isolating intervals are pairwise disjoint.
    pub fn real_roots_of(f: &Poly) -> Vec<(AlgReal, usize)> {
        assert!(!f.is_zero(), "real roots of the zero polynomial");
        let mut out: Vec<(AlgReal, usize)> = Vec::new();
        for (factor, mult) in f.squarefree_decomposition() {
            let (fi, _) = factor.clear_denominators();
            for root in isolate_real_roots(&fi) {
                out.push((AlgReal::from_isolated(&fi, &root), mult));
            }
        }
        out.sort_by(|a, b| a.0.cmp_exact(&b.0));
        // Distinct roots of coprime factors: refine until intervals disjoint.
        for i in 1..out.len() {
            let (head, tail) = out.split_at_mut(i);
            let prev = &mut head[i - 1].0;
            let next = &mut tail[0].0;
            loop {
                let (_, ph) = prev.interval();
                let (nl, _) = next.interval();
                if ph <= nl {
                    break;
                }
                prev.refine_in_place();
                next.refine_in_place();
            }
        }
        out
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, AlgReal::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            AlgReal::Rational(r) => Some(r),
            AlgReal::Algebraic(_) => None,
        }
    }

    /// A defining polynomial with this number among its roots.
    pub fn defining(&self) -> IPoly {
        match self {
            AlgReal::Rational(r) => {
                IPoly::new(vec![-r.numer().clone(), r.denom().clone()])
            }
            AlgReal::Algebraic(a) => a.poly.clone(),
        }
    }

    /// Current enclosing interval (degenerate for rationals).
    pub fn interval(&self) -> (Rat, Rat) {
        match self {
            AlgReal::Rational(r) => (r.clone(), r.clone()),
            AlgReal::Algebraic(a) => (a.lo.clone(), a.hi.clone()),
        }
    }

    /// One bisection step (no-op for rationals); normalizes to `Rational`
    /// when a bisection midpoint hits the root exactly.
    pub fn refine_in_place(&mut self) {
        if let AlgReal::Algebraic(a) = self {
            a.half();
            if a.is_collapsed() {
                *self = AlgReal::Rational(a.lo.clone());
            }
        }
    }

    /// Refines until the interval width is at most `width`; rational values
    /// are already exact.
    pub fn refine(&self, width: &Rat) -> Self {
        assert!(width > &Rat::zero(), "refinement width must be positive");
        let mut x = self.clone();
        loop {
            let (lo, hi) = x.interval();
            if &(hi - lo) <= width {
                return x;
            }
            x.refine_in_place();
        }
    }

    /// Sign of the number itself.
    pub fn sign(&self) -> i8 {
        match self {
            AlgReal::Rational(r) => rat_sign(r),
            AlgReal::Algebraic(_) => self.cmp_rat(&Rat::zero()) as i8,
        }
    }

    /// Exact comparison against a rational.
    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        match self {
            AlgReal::Rational(x) => x.cmp(r),
            AlgReal::Algebraic(a) => {
                if r <= &a.lo {
                    return Ordering::Greater;
                }
                if r >= &a.hi {
                    return Ordering::Less;
                }
                if a.poly.sign_at(r) == 0 {
                    // r is a root of the defining polynomial inside the
                    // isolating interval, hence the root itself.
                    return Ordering::Equal;
                }
                let seq = sturm_sequence(&a.poly);
                let below = count_roots(&seq, &Bound::At(a.lo.clone()), &Bound::At(r.clone()));
                if below == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    /// Exact total-order comparison.
    pub fn cmp_exact(&self, other: &AlgReal) -> Ordering {
        match (self, other) {
            (AlgReal::Rational(a), AlgReal::Rational(b)) => a.cmp(b),
            (_, AlgReal::Rational(b)) => self.cmp_rat(b),
            (AlgReal::Rational(a), _) => other.cmp_rat(a).reverse(),
            (AlgReal::Algebraic(_), AlgReal::Algebraic(_)) => {
                let mut x = self.clone();
                let mut y = other.clone();
                loop {
                    // Re-dispatch if refinement collapsed either to a rational.
                    match (&x, &y) {
                        (AlgReal::Algebraic(a), AlgReal::Algebraic(b)) => {
                            if a.hi <= b.lo {
                                return Ordering::Less;
                            }
                            if b.hi <= a.lo {
                                return Ordering::Greater;
                            }
                            let g = a.poly.gcd(&b.poly);
                            if g.deg() > 0 {
                                let lo = if a.lo > b.lo { a.lo.clone() } else { b.lo.clone() };
                                let hi = if a.hi < b.hi { a.hi.clone() } else { b.hi.clone() };
                                let seq = sturm_sequence(&g);
                                if lo < hi
                                    && g.sign_at(&lo) != 0
                                    && g.sign_at(&hi) != 0
                                    && count_roots(&seq, &Bound::At(lo), &Bound::At(hi)) >= 1
                                {
                                    // The shared root lies in both isolating
                                    // intervals, so both numbers equal it.
                                    return Ordering::Equal;
                                }
                            }
                            x.refine_in_place();
                            y.refine_in_place();
                        }
                        _ => return x.cmp_exact(&y),
                    }
                }
            }
        }
    }

    /// Exact sign of `g` evaluated at this number.
    pub fn sign_of_ipoly(&self, g: &IPoly) -> i8 {
        if g.is_zero() {
            return 0;
        }
        match self {
            AlgReal::Rational(r) => g.sign_at(r),
            AlgReal::Algebraic(a) => {
                // Only the value at the root matters: reduce modulo the
                // defining polynomial to keep the degree below deg(poly).
                let gr = if g.deg() >= a.poly.deg() {
                    Poly::from_ipoly(g).rem(&Poly::from_ipoly(&a.poly)).clear_denominators().0
                } else {
                    g.clone()
                };
                if gr.is_zero() {
                    return 0;
                }
                // Exact zero test: the root annihilates gr iff it is a root
                // of gcd(gr, poly), which divides the square-free poly.
                let d = gr.gcd(&a.poly);
                if d.deg() > 0 {
                    let mut x = a.clone();
                    loop {
                        if x.is_collapsed() {
                            return gr.sign_at(&x.lo);
                        }
                        let slo = d.sign_at(&x.lo);
                        let shi = d.sign_at(&x.hi);
                        if slo != 0 && shi != 0 {
                            if slo * shi < 0 {
                                return 0;
                            }
                            break;
                        }
                        x.half();
                    }
                }
                // Nonzero value: interval evaluation pins the sign after
                // finitely many bisections of the (cheap) defining interval.
                let gp = Poly::from_ipoly(&gr);
                let mut x = a.clone();
                loop {
                    if x.is_collapsed() {
                        return gr.sign_at(&x.lo);
                    }
                    let v = eval_poly_interval(&gp, &RI { lo: x.lo.clone(), hi: x.hi.clone() });
                    if !v.contains_zero() {
                        return if v.lo.is_positive() { 1 } else { -1 };
                    }
                    x.half();
                }
            }
        }
    }

    /// Exact sign of a rational polynomial at this number.
    pub fn sign_of_poly(&self, g: &Poly) -> i8 {
        if g.is_zero() {
            return 0;
        }
        let (gi, _positive_scale) = g.clear_denominators();
        self.sign_of_ipoly(&gi)
    }

    pub fn neg(&self) -> Self {
        match self {
            AlgReal::Rational(r) => AlgReal::Rational(-r),
            AlgReal::Algebraic(a) => {
                let flipped = IPoly::new(
                    a.poly
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                        .collect(),
                )
                .primitive_signed();
                AlgReal::Algebraic(AlgebraicRoot { poly: flipped, lo: -&a.hi, hi: -&a.lo })
            }
        }
    }

    pub fn add_rat(&self, r: &Rat) -> Self {
        match self {
            AlgReal::Rational(x) => AlgReal::Rational(x + r),
            AlgReal::Algebraic(a) => {
                // alpha + r is a root of f(t - r).
                let shifted = Poly::from_ipoly(&a.poly).compose_linear(&Rat::one(), &(-r));
                let (f, _) = shifted.clear_denominators();
                AlgReal::Algebraic(AlgebraicRoot {
                    poly: f.primitive_signed(),
                    lo: &a.lo + r,
                    hi: &a.hi + r,
                })
            }
        }
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return AlgReal::zero();
        }
        match self {
            AlgReal::Rational(x) => AlgReal::Rational(x * r),
            AlgReal::Algebraic(a) => {
                // alpha * r is a root of f(t / r).
                let scaled = Poly::new(
                    Poly::from_ipoly(&a.poly)
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(k, c)| c / pow_rat(r, k))
                        .collect(),
                );
                let (f, _) = scaled.clear_denominators();
                let (mut lo, mut hi) = (&a.lo * r, &a.hi * r);
                if r.is_negative() {
                    std::mem::swap(&mut lo, &mut hi);
                }
                AlgReal::Algebraic(AlgebraicRoot { poly: f.primitive_signed(), lo, hi })
            }
        }
    }

    /// Exact sum of two algebraic numbers.
    pub fn add(&self, other: &AlgReal) -> Self {
        match (self, other) {
            (AlgReal::Rational(a), _) => other.add_rat(a),
            (_, AlgReal::Rational(b)) => self.add_rat(b),
            _ => {
                // alpha + beta is a root of Res_y(f(y), g(x - y)).
                let f = self.defining();
                let g = other.defining();
                let a_p2 = Poly2::new(f.coeffs().iter().map(|c| IPoly::constant(c.clone())).collect());
                let x_minus_y = Poly2::new(vec![IPoly::new(vec![BigInt::zero(), BigInt::one()]), IPoly::constant(-BigInt::one())]);
                let b_p2 = compose_ipoly_at(&g, &x_minus_y);
                let res = resultant_main(&a_p2, &b_p2).expect("degenerate sum resultant");
                let res = res.squarefree_part();
                self.locate_binary(other, &res, |x, y| x + y)
            }
        }
    }

    /// Exact product of two algebraic numbers.
    pub fn mul(&self, other: &AlgReal) -> Self {
        match (self, other) {
            (AlgReal::Rational(a), _) => other.mul_rat(a),
            (_, AlgReal::Rational(b)) => self.mul_rat(b),
            _ => {
                if self.sign() == 0 || other.sign() == 0 {
                    return AlgReal::zero();
                }
                // alpha * beta is a root of Res_y(f(y), y^m g(x/y)).
                let f = self.defining();
                let g = other.defining();
                let a_p2 = Poly2::new(f.coeffs().iter().map(|c| IPoly::constant(c.clone())).collect());
                let m = g.deg() as usize;
                // Coefficient of y^j is g_{m-j} x^{m-j}.
                let b_p2 = Poly2::new(
                    (0..=m)
                        .map(|j| {
                            let c = g.coeff(m - j);
                            IPoly::constant(c).shift_up(m - j)
                        })
                        .collect(),
                );
                let res = resultant_main(&a_p2, &b_p2).expect("degenerate product resultant");
                let res = res.squarefree_part();
                self.locate_binary(other, &res, |x, y| x * y)
            }
        }
    }

    pub fn sub(&self, other: &AlgReal) -> Self {
        self.add(&other.neg())
    }

    /// Isolates the image of `(self, other)` under a monotone-interval-exact
    /// binary operation among the roots of `res`.
    fn locate_binary(
        &self,
        other: &AlgReal,
        res: &IPoly,
        op: fn(&Rat, &Rat) -> Rat,
    ) -> AlgReal {
        let seq = sturm_sequence(res);
        let mut x = self.clone();
        let mut y = other.clone();
        loop {
            let (xl, xh) = x.interval();
            let (yl, yh) = y.interval();
            // Endpoint combinations bound the result for + and *.
            let cands = [op(&xl, &yl), op(&xl, &yh), op(&xh, &yl), op(&xh, &yh)];
            let mut lo = cands[0].clone();
            let mut hi = cands[0].clone();
            for c in &cands[1..] {
                if c < &lo {
                    lo = c.clone();
                }
                if c > &hi {
                    hi = c.clone();
                }
            }
            if lo == hi {
                return AlgReal::Rational(lo);
            }
            if res.sign_at(&lo) != 0
                && res.sign_at(&hi) != 0
                && count_roots(&seq, &Bound::At(lo.clone()), &Bound::At(hi.clone())) == 1
            {
                return AlgReal::Algebraic(AlgebraicRoot { poly: res.clone(), lo, hi });
            }
            x.refine_in_place();
            y.refine_in_place();
        }
    }

    /// The value `num(alpha) / den(alpha)` as an exact algebraic number;
    /// requires `den(alpha) != 0`.
    pub fn eval_ratfunc(&self, num: &Poly, den: &Poly) -> AlgReal {
        assert!(self.sign_of_poly(den) != 0, "rational function pole at evaluation point");
        match self {
            AlgReal::Rational(r) => AlgReal::Rational(num.eval(r) / den.eval(r)),
            AlgReal::Algebraic(a) => {
                let (n_i, sn) = num.clear_denominators();
                let (d_i, sd) = den.clear_denominators();
                // value = (sn/sd) * n(alpha)/d(alpha) = p*n(alpha) / (q*d(alpha)).
                let ratio = sn / sd;
                let p = ratio.numer().clone();
                let q = ratio.denom().clone();
                let f_p2 = Poly2::new(a.poly.coeffs().iter().map(|c| IPoly::constant(c.clone())).collect());
                // B(y) = q*d(y)*x - p*n(y), linear in x, polynomial in y.
                let deg = (d_i.deg().max(n_i.deg())) as usize;
                let b_p2_coeffs: Vec<IPoly> = (0..=deg)
                    .map(|j| {
                        let dc = d_i.coeff(j) * &q;
                        let nc = n_i.coeff(j) * &p;
                        IPoly::new(vec![-nc, dc])
                    })
                    .collect();
                let b_p2 = Poly2::new(b_p2_coeffs);
                let res = resultant_main(&f_p2, &b_p2).expect("degenerate evaluation resultant");
                let res = res.squarefree_part();
                let seq = sturm_sequence(&res);
                let mut x = a.clone();
                loop {
                    let xi = RI { lo: x.lo.clone(), hi: x.hi.clone() };
                    let ni = eval_poly_interval(num, &xi);
                    let di = eval_poly_interval(den, &xi);
                    if di.contains_zero() {
                        x.half();
                        continue;
                    }
                    let vi = ni.div(&di);
                    if res.sign_at(&vi.lo) != 0
                        && res.sign_at(&vi.hi) != 0
                        && count_roots(&seq, &Bound::At(vi.lo.clone()), &Bound::At(vi.hi.clone())) == 1
                    {
                        return AlgReal::Algebraic(AlgebraicRoot { poly: res, lo: vi.lo, hi: vi.hi });
                    }
                    // An endpoint may sit exactly on the value: check for a
                    // rational value before refining further.
                    for cand in [&vi.lo, &vi.hi] {
                        if res.sign_at(cand) == 0 {
                            let test = num.sub(&den.scale(cand));
                            if self.sign_of_poly(&test) == 0 {
                                return AlgReal::Rational(cand.clone());
                            }
                        }
                    }
                    x.half();
                    if x.is_collapsed() {
                        let r = x.lo.clone();
                        return AlgReal::Rational(num.eval(&r) / den.eval(&r));
                    }
                }
            }
        }
    }

    /// Double-precision approximation for diagnostics and rendering.
    pub fn approx_f64(&self) -> f64 {
        let x = self.refine(&Rat::new(BigInt::one(), BigInt::from(1u64 << 40)));
        let (lo, hi) = x.interval();
        (to_f64(&lo) + to_f64(&hi)) / 2.0
    }
}

impl PartialEq for AlgReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}
impl Eq for AlgReal {}

impl PartialOrd for AlgReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}
impl Ord for AlgReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

/// Composes an integer polynomial with a `Poly2` argument (Horner).
fn compose_ipoly_at(g: &IPoly, arg: &Poly2) -> Poly2 {
    let mut acc = Poly2::zero();
    for c in g.coeffs().iter().rev() {
        acc = acc.mul(arg).sub(&Poly2::new(vec![IPoly::constant(-c.clone())]));
    }
    acc
}

/// Closed rational interval.
#[derive(Clone, Debug)]
struct RI {
    lo: Rat,
    hi: Rat,
}

impl RI {
    fn from_rat(r: &Rat) -> Self {
        RI { lo: r.clone(), hi: r.clone() }
    }

    fn contains_zero(&self) -> bool {
        self.lo <= Rat::zero() && self.hi >= Rat::zero()
    }

    fn add(&self, o: &RI) -> RI {
        RI { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn mul(&self, o: &RI) -> RI {
        let cands = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        RI { lo, hi }
    }

    fn div(&self, o: &RI) -> RI {
        assert!(!o.contains_zero());
        let inv = RI { lo: o.hi.clone().recip(), hi: o.lo.clone().recip() };
        self.mul(&inv)
    }
}

fn eval_poly_interval(f: &Poly, x: &RI) -> RI {
    let mut acc = RI::from_rat(&Rat::zero());
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(x).add(&RI::from_rat(c));
    }
    acc
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

    fn sqrt2() -> AlgReal {
        let f = Poly::from_i64s(&[-2, 0, 1]);
        let roots = AlgReal::real_roots_of(&f);
        roots[1].0.clone()
    }

    #[test]
    fn real_roots_examples() {
        // t^2 - 2: two roots, isolated around +-sqrt(2).
        let roots = AlgReal::real_roots_of(&Poly::from_i64s(&[-2, 0, 1]));
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].0.sign(), -1);
        assert_eq!(roots[1].0.sign(), 1);
        // t^2 + 1: none.
        assert!(AlgReal::real_roots_of(&Poly::from_i64s(&[1, 0, 1])).is_empty());
        // (t-1)^2 (t+3): multiplicities.
        let f = Poly::from_i64s(&[-1, 1]);
        let g = Poly::from_i64s(&[3, 1]);
        let roots = AlgReal::real_roots_of(&f.mul(&f).mul(&g));
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].1, 1);
        assert_eq!(roots[0].0, AlgReal::from_int(-3));
        assert_eq!(roots[1].1, 2);
        assert_eq!(roots[1].0, AlgReal::from_int(1));
    }

    #[test]
    fn sign_of_poly_exact() {
        let r = sqrt2();
        // t^2 - 2 vanishes exactly.
        assert_eq!(r.sign_of_poly(&Poly::from_i64s(&[-2, 0, 1])), 0);
        // t - 1.4 > 0, t - 1.5 < 0.
        assert_eq!(r.sign_of_poly(&Poly::new(vec![rat(-7, 5), rat(1, 1)])), 1);
        assert_eq!(r.sign_of_poly(&Poly::new(vec![rat(-3, 2), rat(1, 1)])), -1);
    }

    #[test]
    fn arithmetic_on_roots() {
        let r = sqrt2();
        // sqrt2 + sqrt2 = sqrt8.
        let s = r.add(&r);
        assert_eq!(s.sign_of_poly(&Poly::from_i64s(&[-8, 0, 1])), 0);
        // sqrt2 * sqrt2 = 2.
        let p = r.mul(&r);
        assert_eq!(p, AlgReal::from_int(2));
        // sqrt2 - sqrt2 = 0.
        assert_eq!(r.sub(&r).sign(), 0);
    }

    #[test]
    fn eval_ratfunc_on_root() {
        let r = sqrt2();
        // (t^2 + t)/t = t + 1 at sqrt2: root of (x-1)^2 - 2.
        let num = Poly::from_i64s(&[0, 1, 1]);
        let den = Poly::from_i64s(&[0, 1]);
        let v = r.eval_ratfunc(&num, &den);
        assert_eq!(v.sign_of_poly(&Poly::from_i64s(&[-1, -2, 1])), 0);
        assert_eq!(v.cmp_rat(&rat(12, 5)), Ordering::Greater);
        assert_eq!(v.cmp_rat(&rat(5, 2)), Ordering::Less);
    }

    #[test]
    fn refine_contracts_and_preserves() {
        let r = sqrt2();
        let fine = r.refine(&rat(1, 100));
        let (lo, hi) = fine.interval();
        assert!(&hi - &lo <= rat(1, 100));
        assert_eq!(fine, r);
    }

    #[test]
    fn ordering_is_exact() {
        let roots = AlgReal::real_roots_of(&Poly::from_i64s(&[-2, 0, 1]));
        let m = roots[0].0.clone();
        let p = roots[1].0.clone();
        assert!(m < p);
        assert_eq!(p.cmp_exact(&p.clone()), Ordering::Equal);
        // sqrt2 vs root of t^2-3.
        let q = AlgReal::real_roots_of(&Poly::from_i64s(&[-3, 0, 1]))[1].0.clone();
        assert!(p < q);
    }
}
