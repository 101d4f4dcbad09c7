//! Writhe, pole indices, and the linking term computed from a virtual
//! nodal diagram instead of curve coordinates.
//!
//! The writhe of the bounded space curve satisfies
//!
//! ```text
//! w  =  sum of node signs  +  2 * sum of pole indices i_M  +  c
//! ```
//!
//! where the node sum runs over crossings of one real component (signs of
//! inter-component crossings count as 0) and solitary nodes, the pole sum
//! runs over the real divisor points, and `c` is the resolution sign of
//! the node at the projection center (0 for a smooth curve there).
//!
//! The index `i_M(u)` of a pole `u` on a component `M` is the average of
//! the winding classes of `M` around the two points `u_+`, `u_-` obtained
//! by pushing `u` off `M` to either side; it is a half-integer.  Winding
//! classes live in the first homology of the punctured projective plane
//! and are computed here on the sphere double cover: components are
//! polylines of homogeneous coordinate rays, a puncture is an antipodal
//! axis pair, and the class is half the signed crossing count of the
//! lifted curve with a meridian cut from one axis end to the other.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::diagram::VirtualDiagram;
use crate::exact::rat::{rat, rat_int};
use crate::exact::Rat;

use super::ViroError;

/// An orientation choice (+1 or -1) per diagram component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationData(pub Vec<i8>);

impl OrientationData {
    fn check(&self, d: &VirtualDiagram) -> Result<(), ViroError> {
        if self.0.len() != d.components.len() {
            return Err(ViroError::Invalid(format!(
                "{} orientations for {} components",
                self.0.len(),
                d.components.len()
            )));
        }
        if self.0.iter().any(|o| o.abs() != 1) {
            return Err(ViroError::Invalid("orientations must be ±1".into()));
        }
        Ok(())
    }
}

/// The writhe of the space curve bounded by the diagram, via the formula
/// of the module doc.  Needs every crossing sign and, when the diagram
/// has poles, every pole index.
pub fn viro_w_from_diagram(d: &VirtualDiagram, c: i8) -> Result<i64, ViroError> {
    if c.abs() > 1 {
        return Err(ViroError::Invalid("the resolution sign c must be -1, 0, or +1".into()));
    }
    d.check().map_err(|e| ViroError::Invalid(e.to_string()))?;
    let mut sigma: i64 = 0;
    for (id, passages) in d.crossing_passages() {
        let sign = d
            .crossing_signs
            .get(&id)
            .copied()
            .ok_or_else(|| ViroError::Invalid(format!("crossing {id} has no sign")))?;
        if passages[0].0 == passages[1].0 {
            sigma += i64::from(sign);
        }
    }
    for s in &d.solitary {
        sigma += i64::from(s.sign);
    }
    let pole_sum = d
        .pole_index_sum()
        .map_err(|e| ViroError::Invalid(e.to_string()))?;
    let total = Rat::from_integer((sigma + i64::from(c)).into()) + &pole_sum + &pole_sum;
    if !total.is_integer() {
        return Err(ViroError::InternalInconsistency(
            "writhe formula did not produce an integer".into(),
        ));
    }
    i64::try_from(total.to_integer())
        .map_err(|_| ViroError::InternalInconsistency("writhe out of range".into()))
}

/// The linking term: half the sum, over inter-component crossings, of the
/// crossing signs corrected by the chosen component orientations.
pub fn linking_lambda(d: &VirtualDiagram, orientation: &OrientationData) -> Result<Rat, ViroError> {
    if d.components.len() < 2 {
        return Err(ViroError::Invalid(
            "the linking term needs at least two components".into(),
        ));
    }
    orientation.check(d)?;
    let mut sum: i64 = 0;
    for (id, passages) in d.crossing_passages() {
        let (ci, cj) = (passages[0].0, passages[1].0);
        if ci == cj {
            continue;
        }
        let sign = d
            .crossing_signs
            .get(&id)
            .copied()
            .ok_or_else(|| ViroError::Invalid(format!("crossing {id} has no sign")))?;
        sum += i64::from(sign) * i64::from(orientation.0[ci]) * i64::from(orientation.0[cj]);
    }
    Ok(Rat::from_integer(sum.into()) / Rat::from_integer(2.into()))
}

/// Where the index query point sits.
#[derive(Clone, Debug)]
pub enum PointLocation {
    /// A pole of the diagram carrying a stored index value.
    Pole(u32),
    /// A geometric location: the component drawn as a polyline of
    /// homogeneous rays, with the query point at vertex `at`.  For a
    /// class-1 component the polyline closes up through the antipode of
    /// its first vertex.
    Polyline { points: Vec<[Rat; 3]>, at: usize },
}

/// The index `i_M` of a point of a diagram component.
///
/// For [`PointLocation::Pole`] this returns the stored transcription
/// value.  For [`PointLocation::Polyline`] the index is computed exactly
/// from the drawing: the average of the winding classes around the point
/// pushed off the curve to either side.
pub fn index_i_m(
    d: &VirtualDiagram,
    component: usize,
    location: &PointLocation,
) -> Result<Rat, ViroError> {
    if component >= d.components.len() {
        return Err(ViroError::Invalid(format!("no component {component}")));
    }
    match location {
        PointLocation::Pole(id) => {
            let (c, _, _) = *d
                .poles()
                .get(id)
                .ok_or_else(|| ViroError::Invalid(format!("no pole {id} in the diagram")))?;
            if c != component {
                return Err(ViroError::Invalid(format!(
                    "pole {id} lies on component {c}, not {component}"
                )));
            }
            d.pole_index
                .get(id)
                .cloned()
                .ok_or_else(|| ViroError::Invalid(format!("pole {id} has no stored index i_M")))
        }
        PointLocation::Polyline { points, at } => {
            polyline_index(points, *at, d.class[component] == 1)
        }
    }
}

/// A ray through the origin, i.e. a point of the sphere up to positive
/// scaling; the polyline winding works in exact rational coordinates.
type Ray = [Rat; 3];

fn ray(a: i64, b: i64, c: i64) -> Ray {
    [rat_int(a), rat_int(b), rat_int(c)]
}

fn neg(v: &Ray) -> Ray {
    std::array::from_fn(|i| v[i].clone().neg())
}

fn cross(a: &Ray, b: &Ray) -> Ray {
    [
        (&a[1]).mul(&b[2]).sub((&a[2]).mul(&b[1])),
        (&a[2]).mul(&b[0]).sub((&a[0]).mul(&b[2])),
        (&a[0]).mul(&b[1]).sub((&a[1]).mul(&b[0])),
    ]
}

fn dot(a: &Ray, b: &Ray) -> Rat {
    (&a[0]).mul(&b[0]).add((&a[1]).mul(&b[1])).add((&a[2]).mul(&b[2]))
}

fn det3(a: &Ray, b: &Ray, c: &Ray) -> Rat {
    dot(&cross(a, b), c)
}

fn is_zero_ray(v: &Ray) -> bool {
    v.iter().all(Zero::is_zero)
}

fn scaled(v: &Ray, s: &Rat) -> Ray {
    std::array::from_fn(|i| (&v[i]).mul(s))
}

fn add_rays(a: &Ray, b: &Ray) -> Ray {
    std::array::from_fn(|i| (&a[i]).add(&b[i]))
}

/// The index of vertex `at` of the polyline: the average of the two
/// one-sided winding classes around it.
fn polyline_index(points: &[Ray], at: usize, class_one: bool) -> Result<Rat, ViroError> {
    let n = points.len();
    if n < 3 {
        return Err(ViroError::Invalid("a polyline needs at least 3 vertices".into()));
    }
    if at >= n {
        return Err(ViroError::Invalid(format!("no vertex {at}")));
    }
    if points.iter().any(is_zero_ray) {
        return Err(ViroError::Invalid("polyline vertices must be nonzero rays".into()));
    }
    // The closed curve on the sphere: the polyline, then (class 1) its
    // antipodal continuation or (class 0) nothing; the full preimage also
    // includes the antipodal copy of everything.
    let mut circle: Vec<Ray> = points.to_vec();
    if class_one {
        circle.extend(points.iter().map(neg));
    }
    let circles: Vec<Vec<Ray>> = if class_one {
        vec![circle]
    } else {
        let anti = circle.iter().map(neg).collect();
        vec![circle, anti]
    };

    // Push the query vertex off the curve along the tangent normal.
    let u = &points[at];
    let next = &points[(at + 1) % n];
    let prev = &points[(at + n - 1) % n];
    // Forward direction at u, orthogonalized against u.
    let fwd = {
        let raw = add_rays(next, &neg(prev));
        let t = add_rays(&scaled(&raw, &dot(u, u)), &neg(&scaled(u, &dot(u, &raw))));
        if is_zero_ray(&t) {
            return Err(ViroError::Invalid("degenerate tangent at the query vertex".into()));
        }
        t
    };
    let normal = cross(u, &fwd);

    // Shrink the offset until two consecutive answers agree.
    let mut eps = rat(1, 16);
    let mut last: Option<(Rat, Rat)> = None;
    for _ in 0..40 {
        let plus = add_rays(u, &scaled(&normal, &eps));
        let minus = add_rays(u, &neg(&scaled(&normal, &eps)));
        match (winding_class(&circles, &plus), winding_class(&circles, &minus)) {
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
    Err(ViroError::GenericityFailure(
        "one-sided winding classes did not stabilize".into(),
    ))
}

/// The class of the curve system in the first homology of the sphere
/// minus the axis `±a`, halved (so a class-1 component contributes
/// half-integers).  `None` when the cut meridian is not generic for the
/// curve (caller perturbs and retries).
fn winding_class(circles: &[Vec<Ray>], a: &Ray) -> Option<Rat> {
    // A meridian from a to -a: pick a cut plane through the axis such
    // that no vertex lies on it.
    'm: for m in [
        ray(1, 0, 0),
        ray(0, 1, 0),
        ray(0, 0, 1),
        ray(1, 2, 3),
        ray(-3, 1, 7),
        ray(5, -2, 1),
    ] {
        if is_zero_ray(&cross(a, &m)) {
            continue;
        }
        let mut total = rat_int(0);
        for circle in circles {
            let k = circle.len();
            for i in 0..k {
                let v = &circle[i];
                let w = &circle[(i + 1) % k];
                let sv = det3(a, &m, v);
                let sw = det3(a, &m, w);
                if sv.is_zero() || sw.is_zero() {
                    continue 'm; // vertex on the cut plane: try another cut
                }
                if sv.is_positive() == sw.is_positive() {
                    continue;
                }
                // Crossing point of the segment with the cut plane.
                let p = add_rays(&scaled(w, &sv.clone().abs()), &scaled(v, &sw.clone().abs()));
                if is_zero_ray(&p) {
                    continue 'm; // segment passes through the origin plane degenerately
                }
                // Only crossings of the meridian half (beta >= 0) count.
                let ma = cross(&m, a);
                let beta = dot(&cross(&p, a), &ma);
                if beta.is_zero() {
                    continue 'm;
                }
                if beta.is_positive() {
                    // Signed by the direction of the crossing.
                    total += if sw.is_positive() { rat_int(1) } else { rat_int(-1) };
                }
            }
        }
        return Some(total / rat_int(2));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests_support::{p as pole, w as wrap, x};
    use crate::diagram::{SolitaryNode, VirtualDiagram};

    fn chart_ray(x: i64, y: i64) -> Ray {
        ray(x, y, 1)
    }

    /// A square drawn around the vertical axis in the chart z = 1.
    fn square() -> Vec<Ray> {
        vec![
            chart_ray(1, 1),
            chart_ray(-1, 1),
            chart_ray(-1, -1),
            chart_ray(1, -1),
        ]
    }

    #[test]
    fn oval_seen_from_inside_and_outside_averages_to_a_half() {
        let d = VirtualDiagram::new(vec![vec![]], vec![0]).unwrap();
        let idx = index_i_m(
            &d,
            0,
            &PointLocation::Polyline { points: square(), at: 0 },
        )
        .unwrap();
        assert_eq!(idx.clone().abs(), rat(1, 2), "got {idx}");
    }

    #[test]
    fn pseudoline_index_vanishes() {
        // A projective line drawn as half a great circle; the closure
        // through the antipode makes it class 1.
        let d = VirtualDiagram::new(vec![vec![wrap()]], vec![1]).unwrap();
        let points = vec![
            ray(1, 0, 1),
            ray(1, 0, 3),
            ray(0, 0, 1),
            ray(-1, 0, 3),
            ray(-1, 0, 1),
            ray(-1, 0, 0),
        ];
        let idx = index_i_m(&d, 0, &PointLocation::Polyline { points, at: 2 }).unwrap();
        assert!(idx.is_zero(), "got {idx}");
    }

    #[test]
    fn stored_pole_indices_are_returned() {
        let mut d =
            VirtualDiagram::new(vec![vec![pole(1, true), pole(2, true)]], vec![0]).unwrap();
        d.pole_index.insert(1, rat(1, 2));
        d.pole_index.insert(2, rat(-1, 2));
        assert_eq!(index_i_m(&d, 0, &PointLocation::Pole(1)).unwrap(), rat(1, 2));
        assert_eq!(index_i_m(&d, 0, &PointLocation::Pole(2)).unwrap(), rat(-1, 2));
        assert!(index_i_m(&d, 1, &PointLocation::Pole(1)).is_err());
    }

    #[test]
    fn diagram_writhe_of_a_smooth_cubic_is_c() {
        // Oval plus pseudoline, poles off the real locus, no crossings
        // between... the two components of a smooth planar cubic cross
        // once (class-1 pairing is vacuous here: only one class-1
        // component), drawn crossing-free.
        let d = VirtualDiagram::new(vec![vec![], vec![wrap()]], vec![0, 1]).unwrap();
        assert_eq!(viro_w_from_diagram(&d, 1).unwrap(), 1);
        assert_eq!(viro_w_from_diagram(&d, -1).unwrap(), -1);
        assert_eq!(viro_w_from_diagram(&d, 0).unwrap(), 0);
    }

    #[test]
    fn diagram_writhe_counts_only_same_component_crossings() {
        let mut d = VirtualDiagram::new(
            vec![
                vec![x(1, true), x(2, false), x(2, true), x(1, false)],
                vec![x(3, true), x(4, false)],
                vec![x(3, false), x(4, true)],
            ],
            vec![0, 0, 0],
        )
        .unwrap();
        for id in 1..=4 {
            d.crossing_signs.insert(id, 1);
        }
        d.solitary.push(SolitaryNode { region: "r1".into(), sign: -1 });
        // Crossings 1 and 2 are self-crossings; 3 and 4 join components.
        assert_eq!(viro_w_from_diagram(&d, 0).unwrap(), 2 - 1);
    }

    #[test]
    fn diagram_writhe_includes_pole_indices() {
        let mut d =
            VirtualDiagram::new(vec![vec![pole(1, true), pole(2, true)]], vec![0]).unwrap();
        d.pole_index.insert(1, rat(1, 2));
        d.pole_index.insert(2, rat(1, 2));
        assert_eq!(viro_w_from_diagram(&d, 1).unwrap(), 3);
        d.pole_index.insert(2, rat(-1, 2));
        assert_eq!(viro_w_from_diagram(&d, 1).unwrap(), 1);
        d.pole_index.remove(&2);
        assert!(viro_w_from_diagram(&d, 1).is_err());
    }

    #[test]
    fn linking_term_examples() {
        // Two disjoint circles.
        let d = VirtualDiagram::new(vec![vec![], vec![]], vec![0, 0]).unwrap();
        let o = OrientationData(vec![1, 1]);
        assert!(linking_lambda(&d, &o).unwrap().is_zero());

        // Two circles crossing twice with equal signs: lambda = ±1, and
        // doubling the crossings doubles it.
        let mut d = VirtualDiagram::new(
            vec![vec![x(1, true), x(2, true)], vec![x(1, false), x(2, false)]],
            vec![0, 0],
        )
        .unwrap();
        d.crossing_signs.insert(1, 1);
        d.crossing_signs.insert(2, 1);
        assert_eq!(linking_lambda(&d, &o).unwrap(), rat_int(1));
        let flipped = OrientationData(vec![1, -1]);
        assert_eq!(linking_lambda(&d, &flipped).unwrap(), rat_int(-1));

        let mut dd = VirtualDiagram::new(
            vec![
                vec![x(1, true), x(2, true), x(3, true), x(4, true)],
                vec![x(1, false), x(2, false), x(3, false), x(4, false)],
            ],
            vec![0, 0],
        )
        .unwrap();
        for id in 1..=4 {
            dd.crossing_signs.insert(id, 1);
        }
        assert_eq!(linking_lambda(&dd, &o).unwrap(), rat_int(2));

        // Single component: rejected.
        let single = VirtualDiagram::new(vec![vec![]], vec![0]).unwrap();
        assert!(linking_lambda(&single, &OrientationData(vec![1])).is_err());
    }
}
