//! Parameterized rational curves in the projective plane and 3-space:
//! validation, projection from a point, and exact detection and
//! classification of all double points.

pub(crate) mod nodes;

pub use nodes::{nodes, nodes_with_seed, NodeKind, NodeParams, NodeRecord, ParamRep};

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::exact::rat::{format_rat, parse_rat};
use crate::exact::{AlgReal, Poly, Rat};

/// Errors raised by curve-level operations.
#[derive(Error, Debug)]
pub enum CurveError {
    #[error("invalid curve data: {0}")]
    Invalid(String),
    #[error("degenerate curve: {0}")]
    Degenerate(String),
    #[error("non-nodal singularity: {0}")]
    NonNodal(String),
    #[error("genericity retries exhausted: {0}")]
    GenericityExhausted(String),
    #[error("projection point lies on the curve at a non-node point")]
    PointOnCurve,
}

/// A rational curve given by a tuple of coordinate polynomials, interpreted
/// as a map from the projective parameter line via homogenization to the
/// common degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalCurveMap {
    coords: Vec<Poly>,
}

impl RationalCurveMap {
    /// A curve in P^2 (3 coordinates) or P^3 (4 coordinates).
    pub fn new(coords: Vec<Poly>) -> Result<Self, CurveError> {
        if coords.len() != 3 && coords.len() != 4 {
            return Err(CurveError::Invalid(format!(
                "expected 3 or 4 coordinate polynomials, got {}",
                coords.len()
            )));
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(CurveError::Invalid("all coordinates are zero".into()));
        }
        Ok(RationalCurveMap { coords })
    }

    /// Ambient projective dimension: 2 or 3.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    /// Common homogeneous degree: the maximum coordinate degree.
    pub fn degree(&self) -> usize {
        self.coords.iter().map(|c| c.deg().max(0) as usize).max().unwrap_or(0)
    }

    /// Whether the coordinate tuple has constant gcd.
    pub fn is_primitive(&self) -> bool {
        self.coord_gcd().deg() == 0
    }

    fn coord_gcd(&self) -> Poly {
        let mut g = Poly::zero();
        for c in &self.coords {
            if c.is_zero() {
                continue;
            }
            g = if g.is_zero() { c.monic() } else { g.gcd(c) };
            if g.deg() == 0 {
                break;
            }
        }
        g
    }

    /// Divides out the common polynomial factor of the coordinates.
    pub fn primitive(&self) -> Self {
        let g = self.coord_gcd();
        if g.deg() == 0 {
            return self.clone();
        }
        RationalCurveMap {
            coords: self
                .coords
                .iter()
                .map(|c| if c.is_zero() { Poly::zero() } else { c.exact_div(&g) })
                .collect(),
        }
    }

    /// Rank of the linear span of the coordinate polynomials (as vectors of
    /// coefficients); rank <= 2 with degree > 1 signals a degenerate image.
    pub fn span_rank(&self) -> usize {
        let cols = self.degree() + 1;
        let mut rows: Vec<Vec<Rat>> = self
            .coords
            .iter()
            .map(|c| (0..cols).map(|k| c.coeff(k)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..cols {
            if let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
                rows.swap(rank, pivot);
                let inv = Rat::one() / rows[rank][col].clone();
                for c in col..cols {
                    rows[rank][c] = &rows[rank][c] * &inv;
                }
                for r in 0..rows.len() {
                    if r != rank && !rows[r][col].is_zero() {
                        let f = rows[r][col].clone();
                        for c in col..cols {
                            let sub = &rows[rank][c] * &f;
                            rows[r][c] = &rows[r][c] - sub;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    /// Curve with parameter substituted by the Möbius transform
    /// `t -> (a t + b) / (c t + d)`, homogenized back to the common degree.
    pub fn reparam(&self, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Self {
        let det = a * d - b * c;
        assert!(!det.is_zero(), "singular Möbius reparameterization");
        let deg = self.degree();
        RationalCurveMap {
            coords: self.coords.iter().map(|p| moebius_homog(p, a, b, c, d, deg)).collect(),
        }
        .primitive()
    }

    /// JSON form: `{"dim": 2|3, "coords": [[...rat strings...], ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.ambient_dim(),
            "coords": self.coords.iter().map(|c| c.to_rat_strings()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, CurveError> {
        let dim = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| CurveError::Invalid("missing \"dim\"".into()))?;
        if dim != 2 && dim != 3 {
            return Err(CurveError::Invalid(format!("dim must be 2 or 3, got {dim}")));
        }
        let coords = v
            .get("coords")
            .and_then(Value::as_array)
            .ok_or_else(|| CurveError::Invalid("missing \"coords\"".into()))?;
        if coords.len() != dim as usize + 1 {
            return Err(CurveError::Invalid(format!(
                "dim {} curve needs {} coordinates, got {}",
                dim,
                dim + 1,
                coords.len()
            )));
        }
        let mut polys = Vec::new();
        for c in coords {
            let strs: Vec<String> = c
                .as_array()
                .ok_or_else(|| CurveError::Invalid("coordinate is not an array".into()))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| CurveError::Invalid("coefficient is not a string".into()))
                })
                .collect::<Result<_, _>>()?;
            polys.push(Poly::from_rat_strings(&strs).map_err(CurveError::Invalid)?);
        }
        RationalCurveMap::new(polys)
    }
}

/// `(c t + d)^deg * f((a t + b)/(c t + d))`.
pub(crate) fn moebius_homog(f: &Poly, a: &Rat, b: &Rat, c: &Rat, d: &Rat, deg: usize) -> Poly {
    let num = Poly::new(vec![b.clone(), a.clone()]);
    let den = Poly::new(vec![d.clone(), c.clone()]);
    let mut denpow = Vec::with_capacity(deg + 1);
    let mut acc = Poly::one();
    for _ in 0..=deg {
        denpow.push(acc.clone());
        acc = acc.mul(&den);
    }
    let mut out = Poly::zero();
    for k in (0..=deg).rev() {
        out = out.mul(&num).add(&denpow[deg - k].scale(&f.coeff(k)));
    }
    out
}

/// A point of P^3 in canonical form (first nonzero coordinate = 1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjPoint {
    coords: [Rat; 4],
}

impl ProjPoint {
    pub fn new(coords: [Rat; 4]) -> Result<Self, CurveError> {
        let k = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| CurveError::Invalid("projective point with all zero coordinates".into()))?;
        let inv = Rat::one() / coords[k].clone();
        let mut out = coords;
        for c in &mut out {
            *c = &*c * &inv;
        }
        Ok(ProjPoint { coords: out })
    }

    pub fn from_i64s(cs: [i64; 4]) -> Result<Self, CurveError> {
        Self::new(cs.map(|c| Rat::from_integer(c.into())))
    }

    pub fn coords(&self) -> &[Rat; 4] {
        &self.coords
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coords.iter().map(|c| Value::String(format_rat(c))).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self, CurveError> {
        let arr = v
            .as_array()
            .ok_or_else(|| CurveError::Invalid("point is not an array".into()))?;
        if arr.len() != 4 {
            return Err(CurveError::Invalid("point needs 4 coordinates".into()));
        }
        let mut cs = Vec::new();
        for s in arr {
            let s = s
                .as_str()
                .ok_or_else(|| CurveError::Invalid("point coordinate is not a string".into()))?;
            cs.push(parse_rat(s).map_err(CurveError::Invalid)?);
        }
        ProjPoint::new([cs[0].clone(), cs[1].clone(), cs[2].clone(), cs[3].clone()])
    }
}

/// Result of [`validate`]: each failed hypothesis is reported, nothing errors.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub degree: usize,
    pub primitive: bool,
    /// Degenerate image (point or multiply-covered line), with the reason.
    pub degenerate: Option<String>,
    /// Real parameters at which the homogeneous Jacobian drops rank.
    pub immersion_failures: Vec<AlgReal>,
    /// Whether the parameter at infinity is an immersion failure.
    pub immersion_fails_at_infinity: bool,
    /// Number of real double points of the curve itself (hyperbolic pairs);
    /// `None` when the node computation was skipped or failed.
    pub real_double_points: Option<usize>,
    /// Injective on real points: no real parameter pair shares an image.
    pub injective: Option<bool>,
}

impl ValidationReport {
    /// The smooth-embedding hypotheses all hold.
    pub fn smooth_embedded(&self) -> bool {
        self.primitive
            && self.degenerate.is_none()
            && self.immersion_failures.is_empty()
            && !self.immersion_fails_at_infinity
            && self.injective == Some(true)
    }
}

/// Checks primitivity, immersedness (including at parameter infinity) and
/// real injectivity of a parameterized curve.
pub fn validate(curve: &RationalCurveMap) -> ValidationReport {
    let degree = curve.degree();
    let primitive = curve.is_primitive();
    let work = curve.primitive();

    let degenerate = if work.span_rank() <= 1 {
        Some("image is a single point".into())
    } else if work.span_rank() == 2 && work.degree() > 1 {
        Some("image is a line covered with multiplicity > 1".into())
    } else {
        None
    };

    // Immersion: the homogeneous 2 x (n+1) derivative matrix has rank 2
    // exactly where some affine Wronskian x_i' x_j - x_j' x_i is nonzero.
    let mut wgcd = Poly::zero();
    let n = work.coords().len();
    for i in 0..n {
        for j in (i + 1)..n {
            let w = work.coords()[i]
                .derivative()
                .mul(&work.coords()[j])
                .sub(&work.coords()[j].derivative().mul(&work.coords()[i]));
            if w.is_zero() {
                continue;
            }
            wgcd = if wgcd.is_zero() { w.monic() } else { wgcd.gcd(&w) };
            if wgcd.deg() == 0 {
                break;
            }
        }
    }
    let immersion_failures: Vec<AlgReal> = if wgcd.is_zero() {
        vec![] // handled as degenerate above
    } else if wgcd.deg() == 0 {
        vec![]
    } else {
        AlgReal::real_roots_of(&wgcd).into_iter().map(|(r, _)| r).collect()
    };

    // Same check at parameter infinity via the reversed chart at 0.
    let d = work.degree();
    let rev: Vec<Poly> = work.coords().iter().map(|c| c.reverse_to(d)).collect();
    let mut inf_ok = false;
    for i in 0..n {
        for j in (i + 1)..n {
            let w = rev[i].derivative().mul(&rev[j]).sub(&rev[j].derivative().mul(&rev[i]));
            if !w.coeff(0).is_zero() {
                inf_ok = true;
            }
        }
    }
    let immersion_fails_at_infinity = !inf_ok;

    let (real_double_points, injective) = if degenerate.is_some() {
        (None, None)
    } else {
        match nodes(&work) {
            Ok(records) => {
                let hyp = records
                    .iter()
                    .filter(|r| r.kind == NodeKind::Hyperbolic)
                    .count();
                (Some(hyp), Some(hyp == 0))
            }
            Err(_) => (None, None),
        }
    };

    ValidationReport {
        degree,
        primitive,
        degenerate,
        immersion_failures,
        immersion_fails_at_infinity,
        real_double_points,
        injective,
    }
}

/// How [`project`] classified the center relative to the curve.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProjectionFlag {
    /// Center off the curve.
    Generic,
    /// Center at a double point of the curve: degree drops by 2.
    NodeProjection,
    /// Center is the image of the parameter at infinity only; the
    /// projection is defined but its degree drops by 1.
    ThroughInfinity,
}

/// Linear projection of a space curve from a point, composed with the
/// parameterization and made primitive.
pub fn project(
    curve: &RationalCurveMap,
    p: &ProjPoint,
) -> Result<(RationalCurveMap, ProjectionFlag), CurveError> {
    if curve.ambient_dim() != 3 {
        return Err(CurveError::Invalid("projection requires an ambient-3 curve".into()));
    }
    let work = curve.primitive();
    let d = work.degree();

    // Parameters hitting p: common roots of the minors p_i x_j - p_j x_i.
    let mut g = Poly::zero();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let m = work.coords()[j]
                .scale(&p.coords()[i])
                .sub(&work.coords()[i].scale(&p.coords()[j]));
            if m.is_zero() {
                continue;
            }
            g = if g.is_zero() { m.monic() } else { g.gcd(&m) };
            if g.deg() == 0 {
                break;
            }
        }
    }
    // Infinity hits p when the top-coefficient vector is proportional to p.
    let top: Vec<Rat> = work.coords().iter().map(|c| c.coeff(d)).collect();
    let mut inf_hit = true;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if &top[i] * &p.coords()[j] != &top[j] * &p.coords()[i] {
                inf_hit = false;
            }
        }
    }
    if g.is_zero() {
        return Err(CurveError::Degenerate("curve is a single point".into()));
    }
    let finite_hits = g.deg().max(0) as usize;
    let flag = match (finite_hits, inf_hit) {
        (0, false) => ProjectionFlag::Generic,
        (0, true) => ProjectionFlag::ThroughInfinity,
        (1, false) => return Err(CurveError::PointOnCurve),
        _ => ProjectionFlag::NodeProjection,
    };

    // Projection coordinates: forms vanishing at p.
    let k = p.coords().iter().position(|c| c.is_one()).expect("canonical point");
    let mut out = Vec::with_capacity(3);
    for j in 0..4 {
        if j == k {
            continue;
        }
        out.push(work.coords()[j].sub(&work.coords()[k].scale(&p.coords()[j])));
    }
    let projected = RationalCurveMap::new(out)?.primitive();
    if projected.coords().iter().all(|c| c.is_zero()) {
        return Err(CurveError::Degenerate("projection collapses the curve".into()));
    }
    Ok((projected, flag))
}

/// True when projecting from `p` yields a curve whose double points are all
/// simple transverse nodes with no parameter collisions; `p` must be off the
/// curve.
pub fn is_generic_projection(curve: &RationalCurveMap, p: &ProjPoint) -> bool {
    match project(curve, p) {
        Ok((planar, ProjectionFlag::Generic)) => match nodes(&planar) {
            Ok(records) => records.iter().all(|r| !r.tangential),
            Err(_) => false,
        },
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_i64s(cs)
    }

    #[test]
    fn json_round_trip() {
        let c = RationalCurveMap::new(vec![
            p(&[0, 0, 0, 0, 0, 1]),
            p(&[0, 1]),
            p(&[0, 0, 0, 0, 1]),
            p(&[1]),
        ])
        .unwrap();
        let j = c.to_json();
        assert_eq!(j["dim"], 3);
        let back = RationalCurveMap::from_json(&j).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn smooth_quintic_validates() {
        // (t^5 : t : t^4 : 1): smooth embedded rational quintic.
        let c = RationalCurveMap::new(vec![
            p(&[0, 0, 0, 0, 0, 1]),
            p(&[0, 1]),
            p(&[0, 0, 0, 0, 1]),
            p(&[1]),
        ])
        .unwrap();
        let r = validate(&c);
        assert_eq!(r.degree, 5);
        assert!(r.primitive);
        assert!(r.smooth_embedded(), "{r:?}");
    }

    #[test]
    fn proportional_pair_is_degenerate() {
        // (t^2 : t^2 : 1): double cover of a line.
        let c = RationalCurveMap::new(vec![p(&[0, 0, 1]), p(&[0, 0, 1]), p(&[1])]).unwrap();
        let r = validate(&c);
        assert!(r.degenerate.is_some());
    }

    #[test]
    fn cusp_fails_immersion_at_zero() {
        // (t^2 : t^3 : 1): cuspidal cubic, derivative drops rank at t = 0.
        let c = RationalCurveMap::new(vec![p(&[0, 0, 1]), p(&[0, 0, 0, 1]), p(&[1])]).unwrap();
        let r = validate(&c);
        assert_eq!(r.immersion_failures.len(), 1);
        assert_eq!(r.immersion_failures[0].sign(), 0);
        assert!(!r.smooth_embedded());
    }

    #[test]
    fn projection_drops_coordinate() {
        // (t^5 : t : t^4 : 1) from (1:0:0:0) -> (t : t^4 : 1), primitive.
        let c = RationalCurveMap::new(vec![
            p(&[0, 0, 0, 0, 0, 1]),
            p(&[0, 1]),
            p(&[0, 0, 0, 0, 1]),
            p(&[1]),
        ])
        .unwrap();
        let center = ProjPoint::from_i64s([1, 0, 0, 0]).unwrap();
        let (q, flag) = project(&c, &center).unwrap();
        // The center is the image of the parameter at infinity, so the
        // degree drops by one.
        assert_eq!(flag, ProjectionFlag::ThroughInfinity);
        assert_eq!(q.coords(), &[p(&[0, 1]), p(&[0, 0, 0, 0, 1]), p(&[1])]);
        assert_eq!(q.degree(), 4);
    }

    #[test]
    fn projection_from_point_on_curve_errors() {
        // (t^2 : t : 1 : 0) passes through (1:1:1:0) at t = 1.
        let c =
            RationalCurveMap::new(vec![p(&[0, 0, 1]), p(&[0, 1]), p(&[1]), p(&[0])]).unwrap();
        let center = ProjPoint::from_i64s([1, 1, 1, 0]).unwrap();
        assert!(matches!(project(&c, &center), Err(CurveError::PointOnCurve)));
    }

    #[test]
    fn planar_curve_projects_unchanged_from_fourth_axis() {
        let c =
            RationalCurveMap::new(vec![p(&[0, 0, 1]), p(&[0, 1]), p(&[1]), p(&[0])]).unwrap();
        let center = ProjPoint::from_i64s([0, 0, 0, 1]).unwrap();
        let (q, flag) = project(&c, &center).unwrap();
        assert_eq!(flag, ProjectionFlag::Generic);
        assert_eq!(q.coords(), &[p(&[0, 0, 1]), p(&[0, 1]), p(&[1])]);
    }

    #[test]
    fn moebius_reparam_preserves_degree() {
        let c = RationalCurveMap::new(vec![
            p(&[0, 0, 0, 0, 0, 1]),
            p(&[0, 1]),
            p(&[0, 0, 0, 0, 1]),
            p(&[1]),
        ])
        .unwrap();
        let r = c.reparam(
            &Rat::from_integer(1.into()),
            &Rat::from_integer(1.into()),
            &Rat::from_integer(1.into()),
            &Rat::from_integer(2.into()),
        );
        assert_eq!(r.degree(), 5);
        assert!(r.is_primitive());
    }
}
