//! Exact winding index of a point with respect to a planar parameterized
//! curve, used for the pole indices `i_M` of an extracted nodal diagram.
//!
//! Conventions match the polyline winding of the diagram-side index: the
//! curve and the query point are lifted to the sphere as a ray pair, the
//! index is half the signed count of crossings of the doubled preimage
//! with a half-meridian cut from the query axis, and the index *at* a
//! point of the curve is the average over the two transverse push-offs.

use num_traits::Zero;

use crate::curves::RationalCurveMap;
use crate::exact::rat::{rat, rat_int};
use crate::exact::{AlgReal, Rat};

type Vec3 = [Rat; 3];

fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn is_zero_vec(v: &Vec3) -> bool {
    v.iter().all(Zero::is_zero)
}

/// The index of the curve point at the (rational, non-node) parameter `r`:
/// the average of the winding classes around the two push-offs of the
/// point along the curve normal.
pub(crate) fn pole_raw_index(base: &RationalCurveMap, r: &Rat) -> Result<Rat, String> {
    let f = base.coords();
    let pt: Vec3 = std::array::from_fn(|i| f[i].eval(r));
    let tg: Vec3 = std::array::from_fn(|i| f[i].derivative().eval(r));
    let normal = cross(&pt, &tg);
    if is_zero_vec(&normal) {
        return Err("the base curve is not immersed at the pole parameter".into());
    }
    // Shrink the push-off until two consecutive answers agree.
    let mut eps = rat(1, 16);
    let mut last: Option<(Rat, Rat)> = None;
    for _ in 0..40 {
        let plus: Vec3 = std::array::from_fn(|i| &pt[i] + &(&normal[i] * &eps));
        let minus: Vec3 = std::array::from_fn(|i| &pt[i] - &(&normal[i] * &eps));
        match (point_index(base, &plus), point_index(base, &minus)) {
            (Some(wp), Some(wm)) => {
                let pair = (wp, wm);
                if last.as_ref() == Some(&pair) {
                    let (wp, wm) = pair;
                    return Ok((wp + wm) / rat_int(2));
                }
                last = Some(pair);
            }
            _ => last = None,
        }
        eps /= rat_int(2);
    }
    Err("one-sided winding classes did not stabilize".into())
}

/// Winding class of the curve around the axis through `q` (a point off the
/// curve): half the signed crossing count of the doubled curve preimage
/// with a half-meridian cut.  `None` when every candidate cut is
/// degenerate, in particular when `q` lies on the curve.
fn point_index(base: &RationalCurveMap, q: &Vec3) -> Option<Rat> {
    let f = base.coords();
    let delta = base.degree() as isize;
    'm: for mc in [
        [1i64, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 2, 3],
        [-3, 1, 7],
        [5, -2, 1],
    ] {
        let m: Vec3 = std::array::from_fn(|i| rat_int(mc[i]));
        let n = cross(q, &m);
        if is_zero_vec(&n) {
            continue;
        }
        // Signed distance to the cut plane along the curve.
        let s = f[0].scale(&n[0]).add(&f[1].scale(&n[1])).add(&f[2].scale(&n[2]));
        // The closure through the parameter at infinity must miss the cut
        // plane, and all crossings must be transverse.
        if s.deg() != delta || s.gcd(&s.derivative()).deg() != 0 {
            continue;
        }
        let sp = s.derivative();
        // Half selector of the meridian: <B x q, m x q> at the crossing.
        let mq = cross(&m, q);
        let bq = [
            f[1].scale(&q[2]).sub(&f[2].scale(&q[1])),
            f[2].scale(&q[0]).sub(&f[0].scale(&q[2])),
            f[0].scale(&q[1]).sub(&f[1].scale(&q[0])),
        ];
        let beta = bq[0].scale(&mq[0]).add(&bq[1].scale(&mq[1])).add(&bq[2].scale(&mq[2]));
        // Per crossing parameter, the two antipodal sheets contribute the
        // sign of the half selector times the crossing direction.
        let mut total = 0i64;
        for (tau, _) in AlgReal::real_roots_of(&s) {
            let sb = tau.sign_of_poly(&beta);
            if sb == 0 {
                continue 'm; // the query axis meets the curve at this cut
            }
            total += i64::from(sb * tau.sign_of_poly(&sp));
        }
        return Some(rat_int(total) / rat_int(2));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Poly;
    use num_traits::Signed;

    /// The unit circle in the chart z = 1.
    fn circle() -> RationalCurveMap {
        RationalCurveMap::new(vec![
            Poly::from_i64s(&[1, 0, -1]),
            Poly::from_i64s(&[0, 2]),
            Poly::from_i64s(&[1, 0, 1]),
        ])
        .unwrap()
    }

    #[test]
    fn circle_separates_inside_from_outside() {
        let c = circle();
        let inside = point_index(&c, &[rat_int(0), rat_int(0), rat_int(1)]).unwrap();
        let outside = point_index(&c, &[rat_int(3), rat_int(0), rat_int(1)]).unwrap();
        assert_eq!(inside.abs(), rat_int(1));
        assert_eq!(outside, rat_int(0));
    }

    #[test]
    fn circle_point_averages_to_a_half() {
        let c = circle();
        // Parameter 0 is the point (1, 0); inside index ±1, outside 0.
        let idx = pole_raw_index(&c, &rat_int(0)).unwrap();
        assert_eq!(idx.abs(), rat(1, 2));
    }

    #[test]
    fn projective_line_has_index_zero() {
        // The line y = 0 through two charts: class 1, both push-offs are
        // related by the deck transformation, so the average vanishes.
        let line =
            RationalCurveMap::new(vec![Poly::from_i64s(&[0, 1]), Poly::zero(), Poly::one()])
                .unwrap();
        let idx = pole_raw_index(&line, &rat_int(0)).unwrap();
        assert_eq!(idx, rat_int(0));
    }

    #[test]
    fn query_on_the_curve_is_rejected() {
        let c = circle();
        assert!(point_index(&c, &[rat_int(1), rat_int(0), rat_int(1)]).is_none());
    }
}
