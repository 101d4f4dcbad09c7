//! Sturm sequences and certified real root isolation.
//!
//! Root isolation works on square-free primitive integer polynomials and
//! returns either exact rational roots or open isolating intervals whose
//! endpoints are not roots. All interval endpoints are rationals.

use num_traits::Zero;

use super::ipoly::IPoly;
use super::rat::Rat;

/// A point of the extended real line at which sign variations are counted.
#[derive(Clone, Debug)]
pub enum Bound {
    NegInf,
    At(Rat),
    PosInf,
}

/// The Sturm sequence of `f`: starts with `f, f'`, then negated remainders,
/// with every element scaled only by positive integers (so all signs agree
/// with the exact rational remainder sequence).
pub fn sturm_sequence(f: &IPoly) -> Vec<IPoly> {
    assert!(!f.is_zero());
    let mut seq = vec![f.clone()];
    let fp = f.derivative();
    if fp.is_zero() {
        return seq;
    }
    seq.push(fp);
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.deg() <= 0 {
            break;
        }
        let delta = (a.deg() - b.deg()) as usize;
        let mut r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // prem scales by lc(b)^(delta+1); if that factor is negative the
        // remainder's sign is flipped relative to the rational remainder.
        if b.lc() < &num_bigint::BigInt::zero() && (delta + 1) % 2 == 1 {
            r = r.neg();
        }
        // Sturm uses the negated remainder; strip positive content.
        let r = r.neg();
        let content = r.content();
        let r = r.exact_div_scalar(&content);
        seq.push(r);
    }
    seq
}

/// Number of sign variations of the sequence at the given bound.
pub fn sign_variations(seq: &[IPoly], at: &Bound) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for p in seq {
        let s = match at {
            Bound::NegInf => p.sign_at_infinity(-1),
            Bound::PosInf => p.sign_at_infinity(1),
            Bound::At(x) => p.sign_at(x),
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of the (square-free) head of the sequence in
/// the open interval `(lo, hi)`. Requires `f(lo) != 0` and `f(hi) != 0`.
pub fn count_roots(seq: &[IPoly], lo: &Bound, hi: &Bound) -> usize {
    let v_lo = sign_variations(seq, lo);
    let v_hi = sign_variations(seq, hi);
    v_lo.saturating_sub(v_hi)
}

/// An isolated real root: exactly rational, or the unique root of the
/// polynomial in an open interval with non-root endpoints.
#[derive(Clone, Debug)]
pub enum IsolatedRoot {
    Rational(Rat),
    Interval { lo: Rat, hi: Rat },
}

/// Isolates all real roots of a square-free primitive integer polynomial.
/// Roots are returned in increasing order.
pub fn isolate_real_roots(f: &IPoly) -> Vec<IsolatedRoot> {
    assert!(f.deg() >= 0, "zero polynomial");
    if f.deg() == 0 {
        return vec![];
    }
    let seq = sturm_sequence(f);
    let bound = f.cauchy_bound();
    let lo = -bound.clone();
    let hi = bound;
    debug_assert!(f.sign_at(&lo) != 0 && f.sign_at(&hi) != 0);
    let mut out = Vec::new();
    isolate_rec(f, &seq, lo, hi, &mut out);
    out.sort_by(|a, b| root_key(a).partial_cmp(root_key(b)).unwrap());
    out
}

fn root_key(r: &IsolatedRoot) -> &Rat {
    match r {
        IsolatedRoot::Rational(x) => x,
        IsolatedRoot::Interval { lo, .. } => lo,
    }
}

fn isolate_rec(f: &IPoly, seq: &[IPoly], lo: Rat, hi: Rat, out: &mut Vec<IsolatedRoot>) {
    let n = count_roots(seq, &Bound::At(lo.clone()), &Bound::At(hi.clone()));
    match n {
        0 => {}
        1 => out.push(IsolatedRoot::Interval { lo, hi }),
        _ => {
            let two = Rat::from_integer(2.into());
            let mid = (&lo + &hi) / &two;
            if f.sign_at(&mid) == 0 {
                // The midpoint is an exact rational root; carve out a
                // neighborhood containing only this root and recurse outside.
                out.push(IsolatedRoot::Rational(mid.clone()));
                let mut delta = (&hi - &lo) / Rat::from_integer(4.into());
                loop {
                    let a = &mid - &delta;
                    let b = &mid + &delta;
                    if f.sign_at(&a) != 0
                        && f.sign_at(&b) != 0
                        && count_roots(seq, &Bound::At(a.clone()), &Bound::At(b.clone())) == 1
                    {
                        isolate_rec(f, seq, lo, a, out);
                        isolate_rec(f, seq, b, hi, out);
                        return;
                    }
                    delta = delta / &two;
                }
            }
            isolate_rec(f, seq, lo, mid.clone(), out);
            isolate_rec(f, seq, mid, hi, out);
        }
    }
}

/// Total number of distinct real roots (over the whole line) of a square-free
/// polynomial, by Sturm's theorem.
pub fn count_real_roots(f: &IPoly) -> usize {
    if f.deg() <= 0 {
        return 0;
    }
    let seq = sturm_sequence(f);
    count_roots(&seq, &Bound::NegInf, &Bound::PosInf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ip(cs: &[i64]) -> IPoly {
        IPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn sqrt2_isolation() {
        let f = ip(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        match &roots[1] {
            IsolatedRoot::Interval { lo, hi } => {
                assert!(f.sign_at(lo) * f.sign_at(hi) < 0);
            }
            r => panic!("expected interval, got {r:?}"),
        }
    }

    #[test]
    fn no_real_roots() {
        assert_eq!(isolate_real_roots(&ip(&[1, 0, 1])).len(), 0);
        assert_eq!(count_real_roots(&ip(&[1, 0, 1])), 0);
    }

    #[test]
    fn rational_root_detected_when_midpoint_hits() {
        // Roots 0 and ±sqrt(3): bisection of [-bound, bound] hits 0 exactly.
        let f = ip(&[0, -3, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().any(|r| matches!(r, IsolatedRoot::Rational(x) if x.is_zero())));
    }

    #[test]
    fn count_matches_wilkinson_like_product() {
        // (t-1)(t-2)(t-3)(t-4): 4 real roots.
        let f = ip(&[24, -50, 35, -10, 1]);
        assert_eq!(count_real_roots(&f), 4);
        assert_eq!(isolate_real_roots(&f).len(), 4);
    }
}
