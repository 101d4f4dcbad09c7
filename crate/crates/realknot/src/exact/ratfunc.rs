//! Rational functions in one variable over the rationals.
//!
//! Thin wrapper over two [`Poly`]s kept in lowest terms with a monic
//! denominator. Used for chart coordinates of parameterized curves
//! (slope, height, projected coordinates) and their exact evaluation at
//! algebraic parameters.

use num_traits::{One, Zero};

use super::algreal::AlgReal;
use super::poly::Poly;
use super::rat::Rat;

/// `num / den` in lowest terms; `den` is monic and nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num: Poly::zero(), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.deg() > 0 {
            (num.exact_div(&g), den.exact_div(&g))
        } else {
            (num, den)
        };
        let lc = den.lc().clone();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn constant(r: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(r))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.deg() == 0
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        assert!(!o.is_zero(), "division by zero rational function");
        RatFunc::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    /// Quotient-rule derivative.
    pub fn derivative(&self) -> RatFunc {
        RatFunc::new(
            self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative())),
            self.den.mul(&self.den),
        )
    }

    /// Exact value at a rational point; `None` at a pole of the reduced form.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Exact sign at an algebraic point; requires the point not to be a pole.
    pub fn sign_at(&self, x: &AlgReal) -> i8 {
        let sd = x.sign_of_poly(&self.den);
        assert!(sd != 0, "sign of rational function at a pole");
        x.sign_of_poly(&self.num) * sd
    }

    /// Exact value at an algebraic point; requires the point not to be a pole.
    pub fn eval_alg(&self, x: &AlgReal) -> AlgReal {
        x.eval_ratfunc(&self.num, &self.den)
    }
}
