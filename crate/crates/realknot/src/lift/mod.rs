//! Spatial curves built from planar data: the divisor lift that attaches a
//! prescribed double point over a planar curve, resolution of that double
//! point with a chosen crossing sign, the explicit multinodal sextics
//! (the trinodal curve L and the quadrinodal images of a conic under the
//! cubic Cremona map), and extraction of the virtual nodal diagram of a
//! lifted curve.
//!
//! A lift takes a planar curve `(x : y : z)` of degree `delta`, a height
//! polynomial `u` of degree `delta + 2` and a square-free quadratic `p`,
//! and produces the spatial curve
//!
//! ```text
//!   t  ->  ( x(t) p(t) : y(t) p(t) : z(t) p(t) : u(t) )
//! ```
//!
//! of degree `delta + 2`.  Both roots of `p` map to `(0:0:0:1)`, so the
//! lifted curve acquires exactly one double point there — a crossing for
//! real roots, a solitary point for a conjugate root pair — and projecting
//! back from `(0:0:0:1)` recovers the planar curve.

mod extract;
mod winding;

pub use extract::{nodal_diagram, nodal_diagram_with_seed};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::curves::{
    nodes, validate, CurveError, NodeKind, NodeParams, NodeRecord, RationalCurveMap,
};
use crate::exact::rat::{rat, rat_int, sign as rat_sign};
use crate::exact::{AlgPair, Poly, Rat};
use crate::viro::{viro_w, ViroError};

/// Errors raised by lift constructions and node resolutions.
#[derive(Error, Debug)]
pub enum LiftError {
    #[error("invalid lift data: {0}")]
    Invalid(String),
    #[error("lift carries an unintended singularity at the symmetric parameter pair {0:?}")]
    Singular(AlgPair),
    #[error("node resolution failed: {0}")]
    ResolutionFailure(String),
    #[error("genericity retries exhausted: {0}")]
    GenericityExhausted(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Viro(#[from] ViroError),
}

/// Data of a divisor lift: a planar base curve, the height polynomial `u`
/// and the quadratic `p` cutting out the two points sent to the attached
/// double point.
#[derive(Clone, Debug)]
pub struct LiftSpec {
    pub base: RationalCurveMap,
    pub u: Poly,
    pub p: Poly,
}

impl LiftSpec {
    pub fn new(base: RationalCurveMap, u: Poly, p: Poly) -> Result<Self, LiftError> {
        if base.ambient_dim() != 2 {
            return Err(LiftError::Invalid("the base of a lift must be a planar curve".into()));
        }
        let base = base.primitive();
        let delta = base.degree();
        if p.deg() != 2 {
            return Err(LiftError::Invalid(
                "the pole polynomial p must have degree exactly 2".into(),
            ));
        }
        if p.gcd(&p.derivative()).deg() != 0 {
            return Err(LiftError::Invalid("the pole polynomial p must be square-free".into()));
        }
        if u.deg() != delta as isize + 2 {
            return Err(LiftError::Invalid(format!(
                "the height polynomial u must have degree {} (base degree + 2)",
                delta + 2
            )));
        }
        if u.gcd(&p).deg() != 0 {
            return Err(LiftError::Invalid(
                "the height polynomial u must be coprime to the pole polynomial p".into(),
            ));
        }
        Ok(LiftSpec { base, u, p })
    }

    /// Degree of the lifted curve.
    pub fn degree(&self) -> usize {
        self.base.degree() + 2
    }

    /// JSON form: the base curve JSON with two extra coefficient arrays
    /// `"u"` and `"p"`.
    pub fn to_json(&self) -> Value {
        let mut v = self.base.to_json();
        v["u"] = json!(self.u.to_rat_strings());
        v["p"] = json!(self.p.to_rat_strings());
        v
    }

    pub fn from_json(v: &Value) -> Result<Self, LiftError> {
        let base = RationalCurveMap::from_json(v)?;
        let read = |key: &str| -> Result<Poly, LiftError> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| LiftError::Invalid(format!("missing \"{key}\"")))?;
            let strs: Vec<String> = arr
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| LiftError::Invalid("coefficient is not a string".into()))
                })
                .collect::<Result<_, _>>()?;
            Poly::from_rat_strings(&strs).map_err(LiftError::Invalid)
        };
        LiftSpec::new(base, read("u")?, read("p")?)
    }
}

/// The symmetric coordinates of the root pair of a monic-normalized
/// quadratic: `e1 = sum`, `e2 = product`.
pub(crate) fn quadratic_pair(p: &Poly) -> (Rat, Rat) {
    let top = p.coeff(2);
    (-p.coeff(1) / top.clone(), p.coeff(0) / top)
}

/// Whether the curve is an immersion at every real parameter including
/// infinity: some coordinate Wronskian is nonzero everywhere.
fn immersed(curve: &RationalCurveMap) -> bool {
    let f = curve.coords();
    let n = f.len();
    let mut wgcd = Poly::zero();
    for i in 0..n {
        for j in (i + 1)..n {
            let w = f[i].derivative().mul(&f[j]).sub(&f[j].derivative().mul(&f[i]));
            if w.is_zero() {
                continue;
            }
            wgcd = if wgcd.is_zero() { w.monic() } else { wgcd.gcd(&w) };
            if wgcd.deg() == 0 {
                break;
            }
        }
    }
    if wgcd.is_zero() || wgcd.deg() > 0 {
        return false;
    }
    let d = curve.degree();
    let rev: Vec<Poly> = f.iter().map(|c| c.reverse_to(d)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let w = rev[i].derivative().mul(&rev[j]).sub(&rev[j].derivative().mul(&rev[i]));
            if !w.coeff(0).is_zero() {
                return true;
            }
        }
    }
    false
}

/// The lifted curve `(x p : y p : z p : u)`, verified to be singular only
/// at the attached double point `(0:0:0:1)`.
pub fn lift(spec: &LiftSpec) -> Result<RationalCurveMap, LiftError> {
    let b = spec.base.coords();
    let curve = RationalCurveMap::new(vec![
        b[0].mul(&spec.p),
        b[1].mul(&spec.p),
        b[2].mul(&spec.p),
        spec.u.clone(),
    ])?;
    if !immersed(&curve) {
        return Err(LiftError::Invalid("the lifted curve is not an immersion".into()));
    }
    let (e1, e2) = quadratic_pair(&spec.p);
    let mut found = false;
    for r in nodes(&curve)? {
        match &r.params {
            Some(NodeParams::Finite { pair, .. })
                if pair.e1.cmp_rat(&e1).is_eq() && pair.e2.cmp_rat(&e2).is_eq() =>
            {
                if r.tangential {
                    return Err(LiftError::Invalid(
                        "the branches at the attached double point are tangent".into(),
                    ));
                }
                found = true;
            }
            Some(NodeParams::Finite { pair, .. }) => {
                return Err(LiftError::Singular(pair.clone()));
            }
            Some(NodeParams::WithInfinity { .. }) => {
                return Err(LiftError::Invalid(
                    "the lifted curve has an unintended double point through infinity".into(),
                ));
            }
            None => {
                return Err(LiftError::Invalid(
                    "the lifted curve has unintended non-real double points".into(),
                ));
            }
        }
    }
    if !found {
        return Err(LiftError::Invalid(
            "the attached double point degenerates (p divides a base coordinate?)".into(),
        ));
    }
    Ok(curve)
}

/// The trinodal sextic L: for `t1 < ... < t8` and `p_i = t - t_i`, the
/// curve `(p1 p3 p5 p6 p7 p8 : p1 p2 p3 p4 p5 p7 : p2 p4 p6^3 p8 :
/// p1 p2 p4 p5 p6 p8)`.
pub fn trinodal_l(ts: &[Rat]) -> Result<RationalCurveMap, LiftError> {
    if ts.len() != 8 {
        return Err(LiftError::Invalid("the trinodal curve needs exactly 8 parameters".into()));
    }
    for w in ts.windows(2) {
        if w[0] >= w[1] {
            return Err(LiftError::Invalid(
                "the trinodal parameters must be strictly increasing".into(),
            ));
        }
    }
    let f: Vec<Poly> = ts.iter().map(|t| Poly::new(vec![-t.clone(), Rat::one()])).collect();
    // 1-based factor indices, matching the displayed formula.
    let prod = |idx: &[usize]| -> Poly {
        idx.iter().fold(Poly::one(), |acc, &i| acc.mul(&f[i - 1]))
    };
    RationalCurveMap::new(vec![
        prod(&[1, 3, 5, 6, 7, 8]),
        prod(&[1, 2, 3, 4, 5, 7]),
        prod(&[2, 4, 6, 6, 6, 8]),
        prod(&[1, 2, 4, 5, 6, 8]),
    ])
    .map_err(Into::into)
}

/// Chord data for a quadrinodal sextic: four pairwise coprime square-free
/// quadratics, one per coordinate plane.  A real-rooted quadratic encodes a
/// real chord (a crossing pair), a complex-rooted one a solitary point.
#[derive(Clone, Debug)]
pub struct ChordData {
    pub q: [Poly; 4],
}

impl ChordData {
    pub fn new(q: [Poly; 4]) -> Result<Self, LiftError> {
        for qi in &q {
            if qi.deg() != 2 {
                return Err(LiftError::Invalid("every chord quadratic must have degree 2".into()));
            }
            if qi.gcd(&qi.derivative()).deg() != 0 {
                return Err(LiftError::Invalid("every chord quadratic must be square-free".into()));
            }
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                if q[i].gcd(&q[j]).deg() != 0 {
                    return Err(LiftError::Invalid(
                        "the chord quadratics must be pairwise coprime".into(),
                    ));
                }
            }
        }
        Ok(ChordData { q })
    }
}

/// The quadrinodal sextic `(q1 q2 q3 : q0 q2 q3 : q0 q1 q3 : q0 q1 q2)`:
/// the image under the cubic Cremona map of a conic meeting the `i`-th
/// coordinate plane in the root pair of `q_i`.  Both roots of `q_i` map to
/// the `i`-th coordinate vertex, so the curve has four double points there.
pub fn quadrinodal_from_chords(ch: &ChordData) -> Result<RationalCurveMap, LiftError> {
    let q = &ch.q;
    let coord = |skip: usize| -> Poly {
        (0..4).filter(|&j| j != skip).fold(Poly::one(), |acc, j| acc.mul(&q[j]))
    };
    RationalCurveMap::new(vec![coord(0), coord(1), coord(2), coord(3)]).map_err(Into::into)
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub(crate) fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

fn cross3(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn det3(a: &[Rat; 3], b: &[Rat; 3], c: &[Rat; 3]) -> Rat {
    let x = cross3(a, b);
    (0..3).map(|i| &x[i] * &c[i]).sum()
}

/// Orientation constant matching the local crossing sign of a hyperbolic
/// resolution to the resolution sign `c` of the diagram formula; frozen by
/// the curve/diagram oracle and guarded by
/// `resolution_signs_are_two_apart_and_ordered`.
const RESOLUTION_ORIENTATION: i8 = -1;

const EPS_START: (i64, i64) = (1, 64);
const MAX_HALVINGS: usize = 20;

/// Perturbs a curve with a double point at `(0:0:0:1)` into a smooth
/// embedded curve; the crossing replacing the double point (as seen from a
/// projection center near the former node) gets the requested sign.
///
/// The perturbation keeps the last coordinate and moves the first three by
/// `eps * d_i * m(t)` for a constant direction `d` and a linear factor `m`;
/// `eps` starts at 1/64 and is halved until the result is verified smooth
/// and embedded and the achieved sign is stable.
pub fn resolve_node(
    curve: &RationalCurveMap,
    node: &NodeRecord,
    sign: i8,
) -> Result<RationalCurveMap, LiftError> {
    if curve.ambient_dim() != 3 {
        return Err(LiftError::Invalid("node resolution needs an ambient-3 curve".into()));
    }
    if sign != 1 && sign != -1 {
        return Err(LiftError::Invalid("the resolution sign must be +1 or -1".into()));
    }
    if node.tangential {
        return Err(LiftError::Invalid("only transverse double points can be resolved".into()));
    }
    let pair = match &node.params {
        Some(NodeParams::Finite { pair, .. }) => pair,
        _ => {
            return Err(LiftError::Invalid(
                "node resolution needs finite real parameter data".into(),
            ))
        }
    };
    let (e1, e2) = match (pair.e1.as_rational(), pair.e2.as_rational()) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => {
            return Err(LiftError::Invalid(
                "node resolution needs rational symmetric parameters".into(),
            ))
        }
    };
    let image = node
        .image
        .as_ref()
        .ok_or_else(|| LiftError::Invalid("node record carries no image point".into()))?;
    if image[..3].iter().any(|c| c.sign() != 0) || image[3].sign() == 0 {
        return Err(LiftError::Invalid(
            "node resolution expects the double point at (0:0:0:1)".into(),
        ));
    }
    match node.kind {
        NodeKind::Hyperbolic => resolve_hyperbolic(curve, &e1, &e2, sign),
        NodeKind::Elliptic => resolve_elliptic(curve, sign),
        NodeKind::ComplexPairMember => {
            Err(LiftError::Invalid("only real double points can be resolved".into()))
        }
    }
}

fn perturbed(curve: &RationalCurveMap, d: &[Rat; 3], m: &Poly, eps: &Rat) -> RationalCurveMap {
    let c = curve.coords();
    let shift = |i: usize| c[i].add(&m.scale(&(&d[i] * eps)));
    RationalCurveMap::new(vec![shift(0), shift(1), shift(2), c[3].clone()])
        .expect("perturbation keeps a valid coordinate tuple")
}

fn resolve_hyperbolic(
    curve: &RationalCurveMap,
    e1: &Rat,
    e2: &Rat,
    sign: i8,
) -> Result<RationalCurveMap, LiftError> {
    let disc = e1 * e1 - rat_int(4) * e2;
    let root = rational_sqrt(&disc).ok_or_else(|| {
        LiftError::Invalid("node resolution needs rational branch parameters".into())
    })?;
    let half = rat(1, 2);
    let r1 = (e1 - &root) * &half;
    let r2 = (e1 + &root) * &half;
    let c = curve.coords();
    let c3 = [c[3].eval(&r1), c[3].eval(&r2)];
    if c3.iter().any(Rat::is_zero) {
        return Err(LiftError::Invalid(
            "the double point's branches meet the plane at infinity of its chart".into(),
        ));
    }
    // Affine branch tangents at the node in the chart dividing by the last
    // coordinate; the branch positions vanish there, so only the numerator
    // derivatives survive.
    let tangent = |r: &Rat, c3r: &Rat| -> [Rat; 3] {
        std::array::from_fn(|i| c[i].derivative().eval(r) / c3r.clone())
    };
    let v1 = tangent(&r1, &c3[0]);
    let v2 = tangent(&r2, &c3[1]);
    let d = cross3(&v1, &v2);
    if d.iter().all(Rat::is_zero) {
        return Err(LiftError::Invalid("parallel branch tangents at the double point".into()));
    }
    // Multiplier making the leading-order displacement between the two
    // separated branch points nonzero.
    let mone = Poly::one();
    let mt = Poly::t();
    let mu1 = Rat::one() / c3[0].clone() - Rat::one() / c3[1].clone();
    let (m, mu) = if mu1.is_zero() {
        (&mt, &r1 / &c3[0] - &r2 / &c3[1])
    } else {
        (&mone, mu1)
    };
    let dir = i64::from(sign * RESOLUTION_ORIENTATION * rat_sign(&mu));
    let mut eps = rat(EPS_START.0 * dir, EPS_START.1);
    for _ in 0..=MAX_HALVINGS {
        let pert = perturbed(curve, &d, m, &eps);
        // Achieved local crossing sign from the exact separated positions
        // and the perturbed tangents.
        let pos = |r: &Rat, c3r: &Rat| -> [Rat; 3] {
            std::array::from_fn(|i| &(&d[i] * &eps) * &m.eval(r) / c3r.clone())
        };
        let pc = pert.coords();
        let ptangent = |r: &Rat, c3r: &Rat, p: &[Rat; 3]| -> [Rat; 3] {
            std::array::from_fn(|i| {
                (pc[i].derivative().eval(r) - &c[3].derivative().eval(r) * &p[i]) / c3r.clone()
            })
        };
        let p1 = pos(&r1, &c3[0]);
        let p2 = pos(&r2, &c3[1]);
        let w1 = ptangent(&r1, &c3[0], &p1);
        let w2 = ptangent(&r2, &c3[1], &p2);
        let delta: [Rat; 3] = std::array::from_fn(|i| &p1[i] - &p2[i]);
        let achieved = rat_sign(&det3(&w1, &w2, &delta));
        if achieved == sign * RESOLUTION_ORIENTATION && validate(&pert).smooth_embedded() {
            return Ok(pert);
        }
        eps = eps * half.clone();
    }
    Err(LiftError::ResolutionFailure("no admissible perturbation size found".into()))
}

/// For a solitary double point the two resolutions are told apart by their
/// writhe: the diagram formula gives `w = (diagram terms) + c`, so the
/// resolution with the larger writhe is `c = +1`.
fn resolve_elliptic(curve: &RationalCurveMap, sign: i8) -> Result<RationalCurveMap, LiftError> {
    let dirs: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
    let mone = Poly::one();
    for dir in dirs {
        let d: [Rat; 3] = std::array::from_fn(|i| rat_int(dir[i]));
        let mut eps = rat(EPS_START.0, EPS_START.1);
        for _ in 0..=MAX_HALVINGS {
            let plus = perturbed(curve, &d, &mone, &eps);
            let minus = perturbed(curve, &d, &mone, &(-eps.clone()));
            if validate(&plus).smooth_embedded() && validate(&minus).smooth_embedded() {
                let wp = viro_w(&plus, None)?.w;
                let wm = viro_w(&minus, None)?.w;
                if wp == wm + 2 {
                    return Ok(if sign > 0 { plus } else { minus });
                }
                if wm == wp + 2 {
                    return Ok(if sign > 0 { minus } else { plus });
                }
            }
            eps = eps / rat_int(2);
        }
    }
    Err(LiftError::ResolutionFailure(
        "no perturbation direction separated the solitary point".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{project, ProjPoint, ProjectionFlag};

    fn p64(cs: &[i64]) -> Poly {
        Poly::from_i64s(cs)
    }

    /// The unit circle in the chart z = 1.
    fn conic() -> RationalCurveMap {
        RationalCurveMap::new(vec![p64(&[1, 0, -1]), p64(&[0, 2]), p64(&[1, 0, 1])]).unwrap()
    }

    fn conic_spec(u: &[i64], p: &[i64]) -> LiftSpec {
        LiftSpec::new(conic(), p64(u), p64(p)).unwrap()
    }

    #[test]
    fn line_lift_matches_worked_example() {
        // Base line (t : 1 : 1), heights u = t^3 - t, poles p = t^2 - 4:
        // one crossing at (0:0:0:1) with branch parameters -2 and 2.
        let base = RationalCurveMap::new(vec![p64(&[0, 1]), p64(&[1]), p64(&[1])]).unwrap();
        let spec = LiftSpec::new(base, p64(&[0, -1, 0, 1]), p64(&[-4, 0, 1])).unwrap();
        let curve = lift(&spec).unwrap();
        assert_eq!(curve.degree(), 3);
        let recs = nodes(&curve).unwrap();
        assert_eq!(recs.len(), 1);
        let r = &recs[0];
        assert_eq!(r.kind, NodeKind::Hyperbolic);
        assert!(!r.tangential);
        let Some(NodeParams::Finite { pair, .. }) = &r.params else {
            panic!("expected finite parameters");
        };
        assert_eq!(pair.e1.as_rational(), Some(&rat_int(0)));
        assert_eq!(pair.e2.as_rational(), Some(&rat_int(-4)));
        let image = r.image.as_ref().unwrap();
        assert!(image[..3].iter().all(|c| c.sign() == 0));
        assert!(image[3].sign() != 0);
    }

    #[test]
    fn lift_projects_back_to_its_base() {
        let spec = conic_spec(&[3, 1, 2, 1, 1], &[0, -1, 1]);
        let curve = lift(&spec).unwrap();
        let center = ProjPoint::new([rat_int(0), rat_int(0), rat_int(0), rat_int(1)]).unwrap();
        let (planar, flag) = project(&curve, &center).unwrap();
        assert_eq!(flag, ProjectionFlag::NodeProjection);
        assert_eq!(planar.primitive(), spec.base.primitive());
    }

    #[test]
    fn elliptic_lift_has_a_solitary_double_point() {
        let spec = conic_spec(&[3, 1, 2, 1, 1], &[2, 0, 1]);
        let curve = lift(&spec).unwrap();
        let recs = nodes(&curve).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].kind, NodeKind::Elliptic);
    }

    #[test]
    fn equal_heights_over_a_base_node_are_reported_as_singular() {
        // Nodal cubic base with u(-1) = u(1): the two preimages of the base
        // node stay at equal height, so the lift is singular off (0:0:0:1).
        let base =
            RationalCurveMap::new(vec![p64(&[-1, 0, 1]), p64(&[0, -1, 0, 1]), p64(&[1])]).unwrap();
        let spec = LiftSpec::new(base, p64(&[0, -1, 0, 0, 0, 1]), p64(&[-4, 0, 1])).unwrap();
        match lift(&spec) {
            Err(LiftError::Singular(pair)) => {
                assert!(pair.e1.cmp_rat(&rat_int(0)).is_eq());
                assert!(pair.e2.cmp_rat(&rat_int(-1)).is_eq());
            }
            other => panic!("expected a singular lift, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn spec_validation_catches_degree_and_coprimality_errors() {
        // u of the wrong degree.
        assert!(LiftSpec::new(conic(), p64(&[1, 1, 1]), p64(&[0, -1, 1])).is_err());
        // p not square-free.
        assert!(LiftSpec::new(conic(), p64(&[3, 1, 2, 1, 1]), p64(&[0, 0, 1])).is_err());
        // u sharing a root with p.
        assert!(LiftSpec::new(conic(), p64(&[0, 1, 2, 1, 1]), p64(&[0, -1, 1])).is_err());
        // Base must be planar.
        let spatial = RationalCurveMap::new(vec![
            p64(&[0, 1]),
            p64(&[1]),
            p64(&[1]),
            p64(&[1, 1]),
        ])
        .unwrap();
        assert!(LiftSpec::new(spatial, p64(&[0, -1, 0, 1]), p64(&[-4, 0, 1])).is_err());
    }

    #[test]
    fn spec_json_round_trips() {
        let spec = conic_spec(&[3, 1, 2, 1, 1], &[0, -1, 1]);
        let back = LiftSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(back.base, spec.base);
        assert_eq!(back.u, spec.u);
        assert_eq!(back.p, spec.p);
    }

    #[test]
    fn trinodal_curve_has_three_transverse_double_points() {
        let ts: Vec<Rat> = (1..=8).map(rat_int).collect();
        let curve = trinodal_l(&ts).unwrap();
        assert_eq!(curve.degree(), 6);
        let recs = nodes(&curve).unwrap();
        assert_eq!(recs.len(), 3);
        assert!(recs.iter().all(|r| !r.tangential));
    }

    #[test]
    fn trinodal_rejects_bad_parameter_lists() {
        let short: Vec<Rat> = (1..=7).map(rat_int).collect();
        assert!(trinodal_l(&short).is_err());
        let mut ts: Vec<Rat> = (1..=8).map(rat_int).collect();
        ts.swap(2, 3);
        assert!(trinodal_l(&ts).is_err());
    }

    #[test]
    fn quadrinodal_nodes_sit_at_the_coordinate_vertices() {
        let ch = ChordData::new([
            p64(&[-1, 0, 1]),
            p64(&[-6, -1, 1]),
            p64(&[20, -9, 1]),
            p64(&[1, 0, 1]),
        ])
        .unwrap();
        let curve = quadrinodal_from_chords(&ch).unwrap();
        assert_eq!(curve.degree(), 6);
        let recs = nodes(&curve).unwrap();
        assert_eq!(recs.len(), 4);
        let mut vertices = 0u32;
        for r in &recs {
            let image = r.image.as_ref().unwrap();
            let nonzero: Vec<usize> =
                (0..4).filter(|&i| image[i].sign() != 0).collect();
            assert_eq!(nonzero.len(), 1, "node image must be a coordinate vertex");
            vertices |= 1 << nonzero[0];
        }
        assert_eq!(vertices, 0b1111, "each vertex carries exactly one node");
        assert_eq!(recs.iter().filter(|r| r.kind == NodeKind::Elliptic).count(), 1);
        assert_eq!(recs.iter().filter(|r| r.kind == NodeKind::Hyperbolic).count(), 3);
    }

    #[test]
    fn chord_data_must_be_pairwise_coprime() {
        assert!(ChordData::new([
            p64(&[-1, 0, 1]),
            p64(&[-1, 0, 1]),
            p64(&[-9, 0, 1]),
            p64(&[2, 0, 1]),
        ])
        .is_err());
    }

    /// Guard for the frozen resolution orientation: on the worked conic
    /// lift, the `+1` resolution has writhe `+1` and the `-1` resolution
    /// has writhe `-1`, matching the diagram formula `w = S + c`.
    #[test]
    fn resolution_signs_are_two_apart_and_ordered() {
        let curve = lift(&conic_spec(&[3, 1, 2, 1, 1], &[0, -1, 1])).unwrap();
        let recs = nodes(&curve).unwrap();
        let wp = viro_w(&resolve_node(&curve, &recs[0], 1).unwrap(), None).unwrap().w;
        let wm = viro_w(&resolve_node(&curve, &recs[0], -1).unwrap(), None).unwrap().w;
        assert_eq!((wp, wm), (1, -1));
    }

    #[test]
    fn solitary_resolutions_are_also_two_apart() {
        let curve = lift(&conic_spec(&[3, 1, 2, 1, 1], &[2, 0, 1])).unwrap();
        let recs = nodes(&curve).unwrap();
        let wp = viro_w(&resolve_node(&curve, &recs[0], 1).unwrap(), None).unwrap().w;
        let wm = viro_w(&resolve_node(&curve, &recs[0], -1).unwrap(), None).unwrap().w;
        assert_eq!((wp, wm), (1, -1));
    }

    #[test]
    fn resolve_rejects_bad_signs() {
        let curve = lift(&conic_spec(&[3, 1, 2, 1, 1], &[0, -1, 1])).unwrap();
        let recs = nodes(&curve).unwrap();
        assert!(resolve_node(&curve, &recs[0], 0).is_err());
    }
}
