//! The encomplexed writhe of a smooth real rational space curve: exact
//! signs at the crossings and solitary double points of a generic planar
//! projection, summed to the writhe `w`.
//!
//! All signs are stated in the chart that places the projection center at
//! vertical infinity. For a double point with symmetric parameter
//! coordinates `(e1, e2)` the two branch parameters are `e1/2 ± g` with
//! `g^2 = (e1^2 - 4 e2)/4`, so every needed quantity -- the crossing
//! determinant, the height comparison of the two branches, the affine-chart
//! normalizer -- is a polynomial in the eliminant root and `g`. Signs are
//! then decided by exact arithmetic in that quadratic extension, which is
//! real for crossings and imaginary for solitary points.

mod diagram_ops;
mod report;

pub use diagram_ops::{
    index_i_m, linking_lambda, viro_w_from_diagram, OrientationData, PointLocation,
};
pub use report::ViroReport;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::curves::nodes::{build_records, chart_nodes, infinity_is_double, Attempt};
use crate::curves::{
    project, CurveError, NodeKind, NodeParams, NodeRecord, ProjPoint, ProjectionFlag,
    RationalCurveMap,
};
use crate::exact::rat::format_rat;
use crate::exact::{AlgReal, IPoly, Poly, Rat};

/// Errors raised by writhe computations.
#[derive(Error, Debug)]
pub enum ViroError {
    #[error("crossing with parallel tangents")]
    DegenerateCrossing,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("no generic projection data found: {0}")]
    GenericityFailure(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Calibration constant for solitary double points, frozen by the cusp
/// family test (`cusp_transition_keeps_the_sign`): in a one-parameter
/// family where a crossing passes through a cusp and re-emerges as a
/// solitary point, the sign must not jump.
const SOLITARY_FACTOR: i8 = -1;

/// A projective coordinate change of `P^3` sending the projection center to
/// `(0:0:0:1)`, with positive determinant. The first three transformed
/// coordinates are the planar projection; the last is the height of a point
/// along the projection ray.
#[derive(Clone, Debug)]
pub struct Chart {
    rows: [[Rat; 4]; 4],
}

impl Chart {
    pub fn for_point(p: &ProjPoint) -> Chart {
        let k = p
            .coords()
            .iter()
            .position(|c| !c.is_zero())
            .expect("projective point has a nonzero coordinate");
        let mut rows: Vec<[Rat; 4]> = Vec::new();
        for j in 0..4 {
            if j == k {
                continue;
            }
            let mut r: [Rat; 4] = std::array::from_fn(|_| Rat::zero());
            r[j] = Rat::one();
            r[k] = -p.coords()[j].clone();
            rows.push(r);
        }
        // Keep the determinant positive: moving column k to the last slot
        // is an odd permutation for k = 0 and k = 2.
        if k == 0 || k == 2 {
            rows.swap(0, 1);
        }
        let mut last: [Rat; 4] = std::array::from_fn(|_| Rat::zero());
        last[k] = Rat::one();
        rows.push(last);
        Chart { rows: rows.try_into().expect("four rows") }
    }

    /// Coordinate polynomials of the curve in this chart.
    pub fn apply(&self, curve: &RationalCurveMap) -> Vec<Poly> {
        self.rows
            .iter()
            .map(|r| {
                let mut acc = Poly::zero();
                for (j, c) in r.iter().enumerate() {
                    if !c.is_zero() {
                        acc = acc.add(&curve.coords()[j].scale(c));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| Value::Array(r.iter().map(|c| Value::String(format_rat(c))).collect()))
                .collect(),
        )
    }
}

/// Sign of `det[v_over, v_under]` at a diagram crossing, in the fixed
/// right-handed chart orientation.
pub fn hyperbolic_sign(v_over: &[AlgReal; 2], v_under: &[AlgReal; 2]) -> Result<i8, ViroError> {
    if v_over.iter().all(|c| c.sign() == 0) || v_under.iter().all(|c| c.sign() == 0) {
        return Err(ViroError::Invalid("zero tangent vector at a crossing".into()));
    }
    let det = v_over[0].mul(&v_under[1]).sub(&v_over[1].mul(&v_under[0]));
    match det.sign() {
        0 => Err(ViroError::DegenerateCrossing),
        s => Ok(s),
    }
}

/// Sign of the given solitary double point of the projection of `curve`
/// from `p`.
pub fn elliptic_sign(
    curve: &RationalCurveMap,
    p: &ProjPoint,
    node: &NodeRecord,
) -> Result<i8, ViroError> {
    if node.kind != NodeKind::Elliptic {
        return Err(ViroError::Invalid("node is not solitary".into()));
    }
    let pair = match &node.params {
        Some(NodeParams::Finite { pair, .. }) => pair,
        _ => return Err(ViroError::Invalid("solitary node without finite parameters".into())),
    };
    let report = viro_w(curve, Some(p))?;
    for r in &report.records {
        if r.kind != NodeKind::Elliptic {
            continue;
        }
        if let Some(NodeParams::Finite { pair: q, .. }) = &r.params {
            if q.e1.cmp_exact(&pair.e1).is_eq() && q.e2.cmp_exact(&pair.e2).is_eq() {
                return r.sign.ok_or_else(|| {
                    ViroError::InternalInconsistency("real node without a sign".into())
                });
            }
        }
    }
    Err(ViroError::Invalid("node not found among the projection's double points".into()))
}

/// The encomplexed writhe of a smooth embedded curve, projected from `p`
/// (auto-selected when absent). Deterministic retries with the default seed.
pub fn viro_w(curve: &RationalCurveMap, p: Option<&ProjPoint>) -> Result<ViroReport, ViroError> {
    viro_w_with_seed(curve, p, 0)
}

const MAX_MOBIUS: usize = 48;
const MAX_POINTS: usize = 12;

/// [`viro_w`] with an explicit seed for the projection-point and Möbius
/// retry sequences.
pub fn viro_w_with_seed(
    curve: &RationalCurveMap,
    p: Option<&ProjPoint>,
    seed: u64,
) -> Result<ViroReport, ViroError> {
    if curve.ambient_dim() != 3 {
        return Err(ViroError::Invalid("the writhe needs an ambient-3 curve".into()));
    }
    let curve = curve.primitive();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7669726f);
    if let Some(p) = p {
        return attempt_point(&curve, p, &mut rng);
    }
    let mut last = ViroError::GenericityFailure("no projection point tried".into());
    for _ in 0..MAX_POINTS {
        let cand = loop {
            let cs = [
                rng.gen_range(-7i64..=7),
                rng.gen_range(-7i64..=7),
                rng.gen_range(-7i64..=7),
                rng.gen_range(-7i64..=7),
            ];
            if cs.iter().any(|&c| c != 0) {
                break ProjPoint::from_i64s(cs).expect("nonzero point");
            }
        };
        match attempt_point(&curve, &cand, &mut rng) {
            Ok(report) => return Ok(report),
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn attempt_point(
    curve: &RationalCurveMap,
    p: &ProjPoint,
    rng: &mut ChaCha8Rng,
) -> Result<ViroReport, ViroError> {
    match project(curve, p) {
        Ok((_, ProjectionFlag::Generic)) => {}
        Ok(_) | Err(CurveError::PointOnCurve) => {
            return Err(ViroError::GenericityFailure(
                "projection center lies on the curve".into(),
            ))
        }
        Err(e) => return Err(e.into()),
    }
    let chart = Chart::for_point(p);
    let z = RationalCurveMap::new(chart.apply(curve))?;
    // A generic projection is an immersion: a cusped projection (center on
    // a tangent line) has no well-defined crossing data.
    if !planar_immersed(&RationalCurveMap::new(z.coords()[..3].to_vec())?) {
        return Err(ViroError::GenericityFailure(
            "projection center lies on a tangent line of the curve".into(),
        ));
    }

    let mut last_retry = String::from("no attempt made");
    for attempt in 0..MAX_MOBIUS {
        let (ma, mb, mc, md) = if attempt == 0 {
            (Rat::one(), Rat::zero(), Rat::zero(), Rat::one())
        } else {
            loop {
                let a = Rat::from_integer(rng.gen_range(-9i64..=9).into());
                let b = Rat::from_integer(rng.gen_range(-9i64..=9).into());
                let c = Rat::from_integer(rng.gen_range(-9i64..=9).into());
                let d = Rat::from_integer(rng.gen_range(-9i64..=9).into());
                if !(&a * &d - &b * &c).is_zero() {
                    break (a, b, c, d);
                }
            }
        };
        let work = z.reparam(&ma, &mb, &mc, &md);
        if work.degree() != z.degree() {
            last_retry = "reparameterization dropped degree".into();
            continue;
        }
        let ys = work.coords().to_vec();
        let planar = RationalCurveMap::new(ys[..3].to_vec())?;
        if infinity_is_double(&planar) {
            last_retry = "infinity is a node parameter in this chart".into();
            continue;
        }
        let data = match chart_nodes(&planar) {
            Ok(d) => d,
            Err(Attempt::Retry(r)) => {
                last_retry = r;
                continue;
            }
            Err(Attempt::Fatal(e)) => return Err(e.into()),
        };
        let ctx = SignCtx::new(&data.p, &data.e2rel);
        let mut signs = Vec::with_capacity(data.real.len());
        for nd in &data.real {
            if nd.tangential {
                return Err(ViroError::GenericityFailure(
                    "tangential crossing for this projection center".into(),
                ));
            }
            signs.push(node_sign(&ctx, &nd.alpha, nd.disc_sign > 0, &ys)?);
        }
        let records = match build_records(&data, &ma, &mb, &mc, &md, &signs) {
            Ok(r) => r,
            Err(Attempt::Retry(r)) => {
                last_retry = r;
                continue;
            }
            Err(Attempt::Fatal(e)) => return Err(e.into()),
        };
        let w = records.iter().filter_map(|r| r.sign.map(i64::from)).sum();
        return Ok(ViroReport {
            w,
            records,
            projection_point: p.clone(),
            chart,
            c: 0,
            lambda: None,
            w_lambda: None,
        });
    }
    Err(ViroError::GenericityFailure(last_retry))
}

/// Whether the planar curve is an immersion, including at the parameter at
/// infinity: some coordinate Wronskian must be nonzero at every parameter.
fn planar_immersed(planar: &RationalCurveMap) -> bool {
    let f = planar.coords();
    let mut wgcd = Poly::zero();
    for i in 0..3 {
        for j in (i + 1)..3 {
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
    let d = planar.degree();
    let rev: Vec<Poly> = f.iter().map(|c| c.reverse_to(d)).collect();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let w = rev[i].derivative().mul(&rev[j]).sub(&rev[j].derivative().mul(&rev[i]));
            if !w.coeff(0).is_zero() {
                return true;
            }
        }
    }
    false
}

/// Arithmetic context of the quadratic extension attached to one chart:
/// all elements are `A + g B` with `A`, `B` polynomials in the eliminant
/// root (reduced modulo the eliminant) and `g^2 = q`.
pub(crate) struct SignCtx {
    modulus: Poly,
    /// `e1 / 2`, the common real part of the branch parameters.
    u: Poly,
    /// `g^2 = (e1^2 - 4 e2) / 4`.
    q: Poly,
}

impl SignCtx {
    pub(crate) fn new(p: &IPoly, e2rel: &Poly) -> SignCtx {
        let modulus = Poly::from_ipoly(p);
        let half = Rat::new(1.into(), 2.into());
        let quarter = Rat::new(1.into(), 4.into());
        let u = Poly::t().scale(&half).rem(&modulus);
        let q = Poly::t()
            .mul(&Poly::t())
            .sub(&e2rel.scale(&Rat::from_integer(4.into())))
            .scale(&quarter)
            .rem(&modulus);
        SignCtx { modulus, u, q }
    }

    /// `f(e1/2 + g) = A + g B` by Horner in the extension.
    fn eval(&self, f: &Poly) -> (Poly, Poly) {
        let mut a = Poly::zero();
        let mut b = Poly::zero();
        if f.is_zero() {
            return (a, b);
        }
        for k in (0..=f.deg() as usize).rev() {
            let na = a
                .mul(&self.u)
                .add(&b.mul(&self.q))
                .add(&Poly::constant(f.coeff(k)))
                .rem(&self.modulus);
            let nb = a.add(&b.mul(&self.u)).rem(&self.modulus);
            a = na;
            b = nb;
        }
        (a, b)
    }
}

/// Cyclically ordered affine-chart companions of plane coordinate `j`; the
/// cyclic order keeps the chart orientations of the projective plane
/// consistent.
fn chart_axes(j: usize) -> (usize, usize) {
    match j {
        0 => (1, 2),
        1 => (2, 0),
        _ => (0, 1),
    }
}

/// Writhe sign of one real double point. `ys` are the four chart
/// coordinates of the space curve; the node's branch parameters are
/// `e1/2 ± g`.
///
/// In the affine chart `j` the branch velocities are the Wronskians
/// `N_i = y_i' y_j - y_i y_j'` over `y_j^2`, and the branch heights are
/// `y_3 / y_j`. For a crossing, evaluating at the two conjugate branches
/// gives
///   `det[v(s), v(t)] ~ 2 g (A_2 B_1 - A_1 B_2)` and
///   `h(s) - h(t) = 2 g (B_3 A_j - A_3 B_j) / (y_j(s) y_j(t))`,
/// so the over/under-ordered determinant sign is their product times the
/// sign of the norm `y_j(s) y_j(t)`. For a solitary point the same two
/// brackets are the imaginary parts of `conj(N_1) N_2` and of the height of
/// the `Im > 0` branch, combined with the frozen calibration factor.
pub(crate) fn node_sign(
    ctx: &SignCtx,
    alpha: &AlgReal,
    hyperbolic: bool,
    ys: &[Poly],
) -> Result<i8, ViroError> {
    let parts: Vec<(Poly, Poly)> = ys.iter().map(|y| ctx.eval(y)).collect();
    let mut pick = None;
    for (j, (aj, bj)) in parts.iter().enumerate().take(3) {
        let norm = aj.mul(aj).sub(&bj.mul(bj).mul(&ctx.q)).rem(&ctx.modulus);
        let s = alpha.sign_of_poly(&norm);
        if s != 0 {
            pick = Some((j, s));
            break;
        }
    }
    let (j, norm_sign) = pick.ok_or_else(|| {
        ViroError::InternalInconsistency("node image outside every affine chart".into())
    })?;
    let (xa, xb) = chart_axes(j);
    let wronskian =
        |i: usize| ys[i].derivative().mul(&ys[j]).sub(&ys[i].mul(&ys[j].derivative()));
    let (a1, b1) = ctx.eval(&wronskian(xa));
    let (a2, b2) = ctx.eval(&wronskian(xb));
    let (a3, b3) = &parts[3];
    let (aj, bj) = &parts[j];

    let det = a2.mul(&b1).sub(&a1.mul(&b2)).rem(&ctx.modulus);
    let hgt = b3.mul(aj).sub(&a3.mul(bj)).rem(&ctx.modulus);
    let sd = alpha.sign_of_poly(&det);
    if sd == 0 {
        return Err(ViroError::DegenerateCrossing);
    }
    let sh = alpha.sign_of_poly(&hgt);
    if sh == 0 {
        return Err(ViroError::InternalInconsistency(
            "branches at equal height over a double point".into(),
        ));
    }
    Ok(if hyperbolic { sd * sh * norm_sign } else { SOLITARY_FACTOR * sd * sh })
}

fn alg_json(a: &AlgReal) -> Value {
    if let Some(r) = a.as_rational() {
        json!({ "value": format_rat(r) })
    } else {
        let (lo, hi) = a.interval();
        json!({ "interval": [format_rat(&lo), format_rat(&hi)] })
    }
}

pub(crate) fn record_json(r: &NodeRecord) -> Value {
    let kind = match r.kind {
        NodeKind::Hyperbolic => "hyperbolic",
        NodeKind::Elliptic => "elliptic",
        NodeKind::ComplexPairMember => "complex-pair",
    };
    let mut obj = json!({
        "kind": kind,
        "count": r.count,
        "tangential": r.tangential,
    });
    if let Some(s) = r.sign {
        obj["sign"] = json!(s);
    }
    match &r.params {
        Some(NodeParams::Finite { pair, .. }) => {
            obj["e1"] = alg_json(&pair.e1);
            obj["e2"] = alg_json(&pair.e2);
        }
        Some(NodeParams::WithInfinity { other }) => {
            obj["infinity"] = json!(true);
            obj["other"] = alg_json(other);
        }
        None => {}
    }
    obj
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(cs: &[&[i64]]) -> RationalCurveMap {
        RationalCurveMap::new(cs.iter().map(|c| Poly::from_i64s(c)).collect()).unwrap()
    }

    /// `(t^3 - eps t : t^2 : 1 : t)`: one double point over `(0 : eps : 1)`,
    /// a crossing for `eps > 0` and a solitary point for `eps < 0`.
    fn cusp_family(eps: i64) -> RationalCurveMap {
        curve(&[&[0, -eps, 0, 1], &[0, 0, 1], &[1], &[0, 1]])
    }

    fn vertical() -> ProjPoint {
        ProjPoint::from_i64s([0, 0, 0, 1]).unwrap()
    }

    #[test]
    fn line_has_zero_writhe() {
        let c = curve(&[&[0, 1], &[1], &[0], &[0]]);
        let r = viro_w(&c, None).unwrap();
        assert_eq!(r.w, 0);
        assert!(r.records.is_empty());
    }

    #[test]
    fn smooth_conic_has_zero_writhe() {
        let c = curve(&[&[0, 0, 1], &[0, 1], &[1], &[0]]);
        let r = viro_w(&c, None).unwrap();
        assert_eq!(r.w, 0);
    }

    #[test]
    fn cusp_transition_keeps_the_sign() {
        // Freezes the solitary-point calibration factor: when the crossing
        // of the family passes through the cusp at eps = 0 and becomes
        // solitary, its sign must be unchanged.
        let hyp = viro_w(&cusp_family(1), Some(&vertical())).unwrap();
        let ell = viro_w(&cusp_family(-1), Some(&vertical())).unwrap();
        assert_eq!(hyp.records.len(), 1);
        assert_eq!(ell.records.len(), 1);
        assert_eq!(hyp.records[0].kind, NodeKind::Hyperbolic);
        assert_eq!(ell.records[0].kind, NodeKind::Elliptic);
        assert_eq!(hyp.w, ell.w);
        assert_eq!(hyp.w.abs(), 1);
    }

    #[test]
    fn mirror_negates_the_writhe() {
        let base = cusp_family(1);
        let w0 = viro_w(&base, Some(&vertical())).unwrap().w;
        for flip in 0..4 {
            let coords: Vec<Poly> = base
                .coords()
                .iter()
                .enumerate()
                .map(|(i, c)| if i == flip { c.neg() } else { c.clone() })
                .collect();
            let m = RationalCurveMap::new(coords).unwrap();
            let wm = viro_w(&m, Some(&vertical())).unwrap().w;
            assert_eq!(wm, -w0, "coordinate {flip}");
        }
    }

    #[test]
    fn solitary_sign_survives_reparameterization() {
        let c = cusp_family(-1);
        let w0 = viro_w(&c, Some(&vertical())).unwrap().w;
        let r = c.reparam(
            &Rat::from_integer(2.into()),
            &Rat::from_integer(1.into()),
            &Rat::from_integer(0.into()),
            &Rat::from_integer(1.into()),
        );
        assert_eq!(viro_w(&r, Some(&vertical())).unwrap().w, w0);
        let r2 = c.reparam(
            &Rat::from_integer(1.into()),
            &Rat::from_integer(1.into()),
            &Rat::from_integer(1.into()),
            &Rat::from_integer((-2).into()),
        );
        assert_eq!(viro_w(&r2, Some(&vertical())).unwrap().w, w0);
    }

    #[test]
    fn projection_point_invariance_small() {
        let c = cusp_family(1);
        let mut ws = Vec::new();
        for p in [[0, 0, 0, 1], [1, 1, -2, 5], [2, -1, 1, 7]] {
            ws.push(viro_w(&c, Some(&ProjPoint::from_i64s(p).unwrap())).unwrap().w);
        }
        assert!(ws.iter().all(|&w| w == ws[0]), "{ws:?}");
    }

    /// The degree-5 bidegree-(4,1) torus knot on the hyperboloid: the Segre
    /// image of `((4t - 4t^3 : 1 - 6t^2 + t^4), (t : 1))`, whose first
    /// factor is the tangent quadruple-angle map winding four times.
    fn torus_quintic() -> RationalCurveMap {
        curve(&[
            &[0, 0, 4, 0, -4],
            &[0, 4, 0, -4],
            &[0, 1, 0, -6, 0, 1],
            &[1, 0, -6, 0, 1],
        ])
    }

    #[test]
    fn torus_quintic_writhe_is_six() {
        // All six double points of a generic projection are real crossings
        // of one sign.
        let r = viro_w(&torus_quintic(), None).unwrap();
        assert_eq!(r.w.abs(), 6);
        assert_eq!(r.records.iter().map(|n| n.count).sum::<usize>(), 6);
        assert!(r.records.iter().all(|n| n.kind == NodeKind::Hyperbolic));
    }

    #[test]
    fn monomial_quintic_is_trivially_knotted() {
        // (t^5 : t s^4 : t^4 s : s^5) also has bidegree (4, 1) on the
        // hyperboloid, but its first Segre factor (t^4 : s^4) has real
        // winding number zero: the real locus is a trivial knot, and the
        // four non-real double points contribute nothing to the writhe.
        let c = curve(&[&[0, 0, 0, 0, 0, 1], &[0, 1], &[0, 0, 0, 0, 1], &[1]]);
        let r = viro_w(&c, None).unwrap();
        assert_eq!(r.w.abs(), 2);
        assert_eq!(r.records.iter().map(|n| n.count).sum::<usize>(), 6);
    }

    #[test]
    fn tangent_line_projection_center_is_rejected() {
        // (0:0:1:0) sees the monomial quintic with a higher cusp at the
        // parameter at infinity: not a generic projection.
        let c = curve(&[&[0, 0, 0, 0, 0, 1], &[0, 1], &[0, 0, 0, 0, 1], &[1]]);
        let p = ProjPoint::from_i64s([0, 0, 1, 0]).unwrap();
        assert!(matches!(viro_w(&c, Some(&p)), Err(ViroError::GenericityFailure(_))));
    }

    #[test]
    fn hyperbolic_sign_examples() {
        let e = |a: i64, b: i64| [AlgReal::from_int(a), AlgReal::from_int(b)];
        assert_eq!(hyperbolic_sign(&e(1, 0), &e(0, 1)).unwrap(), 1);
        assert_eq!(hyperbolic_sign(&e(0, 1), &e(1, 0)).unwrap(), -1);
        assert!(matches!(
            hyperbolic_sign(&e(1, 0), &e(2, 0)),
            Err(ViroError::DegenerateCrossing)
        ));
        assert!(matches!(hyperbolic_sign(&e(0, 0), &e(1, 0)), Err(ViroError::Invalid(_))));
    }

    #[test]
    fn elliptic_sign_matches_report() {
        let c = cusp_family(-1);
        let report = viro_w(&c, Some(&vertical())).unwrap();
        let node = &report.records[0];
        let s = elliptic_sign(&c, &vertical(), node).unwrap();
        assert_eq!(i64::from(s), report.w);
    }

    #[test]
    fn report_json_shape() {
        let c = cusp_family(-1);
        let r = viro_w(&c, Some(&vertical())).unwrap();
        let j = r.to_json();
        assert_eq!(j["w"], r.w);
        assert_eq!(j["nodes"].as_array().unwrap().len(), 1);
        assert_eq!(j["nodes"][0]["kind"], "elliptic");
        assert_eq!(j["chart"].as_array().unwrap().len(), 4);
    }
}
