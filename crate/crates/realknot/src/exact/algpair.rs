//! Unordered parameter pairs in elementary symmetric coordinates.
//!
//! A node of a parameterized curve corresponds to an unordered pair
//! `{s, t}` of parameter values, which elimination delivers as the exact
//! algebraic numbers `e1 = s + t`, `e2 = s t`. The discriminant
//! `e1^2 - 4 e2` decides the pair type: positive means two real parameters
//! (hyperbolic), negative a complex-conjugate pair (elliptic).

use super::algreal::AlgReal;
use super::rat::{rat_int, Rat};

/// Type of an unordered parameter pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairKind {
    /// Two distinct real parameters.
    Hyperbolic,
    /// A complex-conjugate pair.
    Elliptic,
}

/// An unordered pair `{s, t}` stored as `(e1, e2) = (s + t, s t)`.
#[derive(Clone, Debug)]
pub struct AlgPair {
    pub e1: AlgReal,
    pub e2: AlgReal,
}

impl AlgPair {
    pub fn new(e1: AlgReal, e2: AlgReal) -> Self {
        AlgPair { e1, e2 }
    }

    /// From two exact rational parameter values.
    pub fn from_rats(s: &Rat, t: &Rat) -> Self {
        AlgPair {
            e1: AlgReal::Rational(s + t),
            e2: AlgReal::Rational(s * t),
        }
    }

    /// Exact sign of the discriminant `e1^2 - 4 e2`.
    pub fn discriminant_sign(&self) -> i8 {
        self.discriminant().sign()
    }

    /// The discriminant `e1^2 - 4 e2` as an exact algebraic number.
    pub fn discriminant(&self) -> AlgReal {
        self.e1.mul(&self.e1).sub(&self.e2.mul_rat(&rat_int(4)))
    }

    /// Pair type; `None` when the discriminant vanishes (a degenerate pair
    /// `s = t`, which callers reject).
    pub fn kind(&self) -> Option<PairKind> {
        match self.discriminant_sign() {
            1 => Some(PairKind::Hyperbolic),
            -1 => Some(PairKind::Elliptic),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Poly;
    use crate::exact::rat::rat;

    #[test]
    fn rational_pairs_classify() {
        assert_eq!(AlgPair::from_rats(&rat(1, 1), &rat(3, 1)).kind(), Some(PairKind::Hyperbolic));
        assert_eq!(AlgPair::from_rats(&rat(2, 1), &rat(2, 1)).kind(), None);
        // e1 = 0, e2 = 1: pair {i, -i}.
        let p = AlgPair::new(AlgReal::from_int(0), AlgReal::from_int(1));
        assert_eq!(p.kind(), Some(PairKind::Elliptic));
    }

    #[test]
    fn algebraic_discriminant() {
        // e1 = sqrt(2), e2 = 1/2: disc = 2 - 2 = 0 exactly.
        let s2 = AlgReal::real_roots_of(&Poly::from_i64s(&[-2, 0, 1]))[1].0.clone();
        let p = AlgPair::new(s2.clone(), AlgReal::Rational(rat(1, 2)));
        assert_eq!(p.kind(), None);
        // e2 slightly smaller: hyperbolic.
        let q = AlgPair::new(s2, AlgReal::Rational(rat(1, 4)));
        assert_eq!(q.kind(), Some(PairKind::Hyperbolic));
    }
}
