//! Exact arithmetic substrate: big rationals, integer and rational
//! polynomials, bivariate polynomials, subresultant elimination, Sturm root
//! isolation, real algebraic numbers, and symmetric parameter pairs.

pub mod algpair;
pub mod algreal;
pub mod bipoly;
pub mod elim;
pub mod ipoly;
pub mod poly;
pub mod poly2;
pub mod rat;
pub mod ratfunc;
pub mod sturm;

pub use algpair::{AlgPair, PairKind};
pub use algreal::AlgReal;
pub use bipoly::BiPoly;
pub use elim::{eliminate, resultant_interp, ElimOut};
pub use ipoly::IPoly;
pub use poly::Poly;
pub use poly2::{poly2_gcd, resultant_main, subresultant_chain, Poly2};
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use sturm::{count_real_roots, isolate_real_roots, IsolatedRoot};
