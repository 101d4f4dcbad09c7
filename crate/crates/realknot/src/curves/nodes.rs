//! Exact node detection and classification by symmetric elimination.
//!
//! A double point of a parameterized curve is an unordered parameter pair
//! `{s, t}`, `s != t`, with proportional coordinate vectors. The
//! proportionality minors, divided by `s - t`, are symmetric and are
//! rewritten in `e1 = s + t`, `e2 = s t`; the resulting system is solved by
//! a resultant in `e2` plus back-substitution through the degree-1
//! subresultant. Non-generic situations (parameter infinity involved, shared
//! eliminant roots, failed back-substitution) are escaped through seeded
//! Möbius reparameterizations; genuinely non-nodal singularities are errors.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{CurveError, RationalCurveMap};
use crate::exact::elim::{eliminate, resultant_interp};
use crate::exact::poly2::poly2_gcd;
use crate::exact::rat::rat_int;
use crate::exact::{resultant_main, AlgPair, AlgReal, BiPoly, IPoly, Poly, Poly2, Rat, RatFunc};

/// Classification of a double point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NodeKind {
    /// Two distinct real parameters.
    Hyperbolic,
    /// Complex-conjugate parameters with a real image point.
    Elliptic,
    /// A conjugate-closed family of two non-real parameter pairs.
    ComplexPairMember,
}

/// Back-substitution data for a real node: the internal eliminant root and
/// the original-chart symmetric coordinates as rational functions of it.
#[derive(Clone, Debug)]
pub struct ParamRep {
    /// Root of the (square-free) eliminant.
    pub alpha: AlgReal,
    /// `e1(alpha)` in the original parameter.
    pub e1: RatFunc,
    /// `e2(alpha)` in the original parameter.
    pub e2: RatFunc,
}

/// Parameter data of a real double point.
#[derive(Clone, Debug)]
pub enum NodeParams {
    /// Both parameters finite: symmetric coordinates and their derivation.
    Finite { pair: AlgPair, rep: ParamRep },
    /// One parameter at infinity; the other one's exact value.
    WithInfinity { other: AlgReal },
}

/// One double point (or conjugate-closed family of double points).
#[derive(Clone, Debug)]
pub struct NodeRecord {
    pub kind: NodeKind,
    /// `None` exactly for `ComplexPairMember` families.
    pub params: Option<NodeParams>,
    /// Projective image coordinates (real records only).
    pub image: Option<Vec<AlgReal>>,
    /// Branches meet tangentially (flag; transverse nodes have `false`).
    pub tangential: bool,
    /// Writhe-style sign, filled in by downstream computations.
    pub sign: Option<i8>,
    /// Number of double points this record accounts for: 1 for real
    /// records, 2 for conjugate families.
    pub count: usize,
}

/// All double points of the curve, classified. Deterministic retries with
/// the default seed.
pub fn nodes(curve: &RationalCurveMap) -> Result<Vec<NodeRecord>, CurveError> {
    nodes_with_seed(curve, 0)
}

const MAX_ATTEMPTS: usize = 48;

/// All double points of the curve; the seed drives the Möbius retry
/// sequence used to escape non-generic charts.
pub fn nodes_with_seed(curve: &RationalCurveMap, seed: u64) -> Result<Vec<NodeRecord>, CurveError> {
    let curve = curve.primitive();
    let rank = curve.span_rank();
    if rank <= 1 {
        return Err(CurveError::Degenerate("image is a single point".into()));
    }
    if rank == 2 && curve.degree() > 1 {
        return Err(CurveError::Degenerate(
            "image is a line covered with multiplicity > 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6e6f6465);
    let mut last_retry = String::from("no attempt made");
    for attempt in 0..MAX_ATTEMPTS {
        let (ma, mb, mc, md) = if attempt == 0 {
            (rat_int(1), rat_int(0), rat_int(0), rat_int(1))
        } else {
            loop {
                let a = rat_int(rng.gen_range(-9i64..=9));
                let b = rat_int(rng.gen_range(-9i64..=9));
                let c = rat_int(rng.gen_range(-9i64..=9));
                let d = rat_int(rng.gen_range(-9i64..=9));
                if !(&a * &d - &b * &c).is_zero() {
                    break (a, b, c, d);
                }
            }
        };
        let work = curve.reparam(&ma, &mb, &mc, &md);
        if work.degree() != curve.degree() {
            last_retry = "reparameterization dropped degree".into();
            continue;
        }
        // Certificate: parameter infinity of this chart is not a node
        // parameter (top-coefficient minors have no common root).
        if infinity_is_double(&work) {
            last_retry = "infinity is a node parameter in this chart".into();
            continue;
        }
        match chart_nodes(&work) {
            Ok(data) => match build_records(&data, &ma, &mb, &mc, &md, &[]) {
                Ok(records) => return Ok(records),
                Err(Attempt::Retry(r)) => last_retry = r,
                Err(Attempt::Fatal(e)) => return Err(e),
            },
            Err(Attempt::Retry(r)) => last_retry = r,
            Err(Attempt::Fatal(e)) => return Err(e),
        }
    }
    Err(CurveError::GenericityExhausted(last_retry))
}

pub(crate) enum Attempt {
    Retry(String),
    Fatal(CurveError),
}

/// Does the chart's parameter at infinity share its image with any other
/// parameter?
pub(crate) fn infinity_is_double(curve: &RationalCurveMap) -> bool {
    let d = curve.degree();
    let top: Vec<Rat> = curve.coords().iter().map(|c| c.coeff(d)).collect();
    let mut g = Poly::zero();
    let n = curve.coords().len();
    for i in 0..n {
        for j in (i + 1)..n {
            let m = curve.coords()[j]
                .scale(&top[i])
                .sub(&curve.coords()[i].scale(&top[j]));
            if m.is_zero() {
                continue;
            }
            g = if g.is_zero() { m.monic() } else { g.gcd(&m) };
            if g.deg() == 0 {
                return false;
            }
        }
    }
    // All minors zero would mean the whole curve maps to the image of
    // infinity; rank checks exclude that, so a nonconstant gcd remains.
    true
}

/// Outcome of the per-chart elimination.
pub(crate) struct ChartData {
    /// Verified square-free eliminant in `e1`.
    pub(crate) p: IPoly,
    /// `e2` as a polynomial in `e1`, reduced modulo the eliminant.
    pub(crate) e2rel: Poly,
    pub(crate) real: Vec<RealNodeData>,
    /// Number of non-real eliminant roots (= complex double points).
    pub(crate) complex_roots: usize,
}

pub(crate) struct RealNodeData {
    pub(crate) alpha: AlgReal,
    pub(crate) disc_sign: i8,
    pub(crate) tangential: bool,
    pub(crate) image: Vec<AlgReal>,
}

pub(crate) fn chart_nodes(curve: &RationalCurveMap) -> Result<ChartData, Attempt> {
    let f = curve.coords();
    let n = f.len();

    // Divided proportionality minors, symmetrized.
    let mut minors: Vec<Poly2> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let m = BiPoly::product(&f[i], &f[j]).sub(&BiPoly::product(&f[j], &f[i]));
            if m.is_zero() {
                continue;
            }
            let (sym, _scale) = m.div_s_minus_t().symmetrize();
            if sym.is_zero() {
                continue;
            }
            minors.push(sym);
        }
    }
    if minors.is_empty() {
        return Err(Attempt::Fatal(CurveError::Degenerate(
            "all proportionality minors vanish identically".into(),
        )));
    }
    // A nonzero constant minor rules out any finite pair at once.
    if minors.iter().any(|m| m.deg() == 0 && m.coeff(0).deg() == 0) {
        return Ok(empty_chart());
    }
    // A common factor of every minor means the double-point locus is
    // positive-dimensional: the parameterization multiply covers its image.
    let mut common = minors[0].clone();
    for m in &minors[1..] {
        common = poly2_gcd(&common, m);
        if common.deg() == 0 && common.coeff(0).deg() == 0 {
            break;
        }
    }
    if common.deg() >= 1 || (common.deg() == 0 && common.coeff(0).deg() >= 1) {
        return Err(Attempt::Fatal(CurveError::Degenerate(
            "parameterization multiply covers its image (shared minor factor)".into(),
        )));
    }

    let (e2_pos, e2_zero): (Vec<&Poly2>, Vec<&Poly2>) =
        minors.iter().partition(|m| m.deg() >= 1);
    let univariate: Vec<IPoly> = e2_zero.iter().map(|m| m.coeff(0)).collect();

    let (p0, ahat, bhat) = match e2_pos.len() {
        0 => {
            let mut g = IPoly::zero();
            for u in &univariate {
                g = g.gcd(u);
            }
            if g.deg() == 0 {
                return Ok(empty_chart());
            }
            return Err(Attempt::Fatal(CurveError::Degenerate(
                "one-parameter family of double points".into(),
            )));
        }
        1 => {
            let fa = e2_pos[0];
            if univariate.is_empty() {
                return Err(Attempt::Fatal(CurveError::Degenerate(
                    "double-point locus is a curve in symmetric coordinates".into(),
                )));
            }
            if fa.deg() != 1 {
                return Err(Attempt::Retry("no linear relation for e2".into()));
            }
            let mut g = IPoly::zero();
            for u in &univariate {
                g = g.gcd(u);
            }
            if g.deg() == 0 {
                return Ok(empty_chart());
            }
            if g.deg() > 1 {
                // A single e2-relation cannot certify distinct e2 values.
                return Err(Attempt::Retry("unverifiable multi-root eliminant".into()));
            }
            (g.squarefree_part(), fa.coeff(1), fa.coeff(0))
        }
        _ => match eliminate_minor_system(&e2_pos) {
            Some(triple) => triple,
            None => return Err(Attempt::Retry("selected minors share a factor".into())),
        },
    };
    if p0.deg() < 1 {
        return Ok(empty_chart());
    }
    // Everything downstream needs only the value of e2 at the eliminant
    // roots, so compute the canonical representative
    // `E2(e1) = -bhat * ahat^{-1} mod p0` once; its coefficients are small,
    // unlike those of the raw subresultant pair.
    let modulus0 = Poly::from_ipoly(&p0);
    let e2rel0 = match relation_poly(&ahat, &bhat, &p0) {
        Some(v) => v,
        None => {
            return Err(Attempt::Retry("leading e2 coefficient vanishes at a node".into()))
        }
    };

    // Filter the resultant roots through every minor at e2 = E2(e1).
    let mut p = p0;
    for m in &minors {
        if p.deg() <= 0 {
            break;
        }
        let (g, _) = eval_poly2_mod(m, &e2rel0, &modulus0).clear_denominators();
        if g.is_zero() {
            // The minor vanishes on the whole eliminant root locus: no
            // further constraint.
            continue;
        }
        p = p.gcd(&g);
    }
    if p.deg() <= 0 {
        return Ok(empty_chart());
    }
    let p = p.squarefree_part();
    let pq = Poly::from_ipoly(&p);
    let e2rel = e2rel0.rem(&pq);

    // Certificates on the verified eliminant.
    // Tacnodes: discriminant e1^2 - 4 e2 vanishing at a root means s = t.
    let disc_poly = Poly::t().mul(&Poly::t()).sub(&e2rel.scale(&rat_int(4))).rem(&pq);
    let disc_num = disc_poly.clear_denominators().0;
    if p.gcd(&disc_num).deg() > 0 {
        return Err(Attempt::Fatal(CurveError::NonNodal(
            "tacnodal parameter pair (s = t)".into(),
        )));
    }
    // Coordinate-collision certificate: eliminating e1 instead must find the
    // same number of solutions.
    if e2_pos.len() >= 2 {
        let deg2 = transposed_count(&minors).map_err(Attempt::Retry)?;
        if deg2 != p.deg() {
            return Err(Attempt::Retry(format!(
                "eliminant degree mismatch between coordinates ({} vs {})",
                p.deg(),
                deg2
            )));
        }
    }
    // Shared-parameter certificate (catches triple points): the polynomial
    // of all individual node parameters must be square-free.
    let nt = node_parameter_poly(&p, &e2rel).map_err(Attempt::Retry)?;
    if nt.gcd(&nt.derivative()).deg() > 0 {
        return Err(Attempt::Fatal(CurveError::NonNodal(
            "parameter shared between two double points (triple point)".into(),
        )));
    }

    // Tangency polynomials: D(s,t) = det[f(s), f'(s), f'(t)] over 3-row
    // subsets, symmetrized as D(s,t) D(t,s).
    let tangency: Vec<Poly2> = three_row_subsets(n)
        .into_iter()
        .map(|rows| {
            let dd = branch_det(f, &rows);
            let sym = dd.0.mul(&dd.1);
            sym.symmetrize().0
        })
        .collect();

    // Symmetrized coordinate products for image reconstruction.
    let mut prods: Vec<Vec<Poly2>> = vec![vec![Poly2::zero(); n]; n];
    let half = Rat::new(1.into(), 2.into());
    for i in 0..n {
        for j in i..n {
            let s = BiPoly::product(&f[i], &f[j])
                .add(&BiPoly::product(&f[j], &f[i]))
                .scale(&half);
            let (sym, _) = s.symmetrize();
            prods[i][j] = sym.clone();
            prods[j][i] = sym;
        }
    }

    // Substituted values modulo the final eliminant, computed once and
    // shared by every root.
    let tang_red: Vec<Poly> =
        tangency.iter().map(|tp| eval_poly2_mod(tp, &e2rel, &pq)).collect();
    let prods_red: Vec<Vec<Poly>> = prods
        .iter()
        .map(|row| row.iter().map(|f| eval_poly2_mod(f, &e2rel, &pq)).collect())
        .collect();

    let roots = AlgReal::real_roots_of(&pq);
    let mut real = Vec::new();
    for (alpha, _) in &roots {
        let disc_sign = alpha.sign_of_ipoly(&disc_num);
        debug_assert!(disc_sign != 0);
        let tangential = tang_red.iter().all(|g| alpha.sign_of_poly(g) == 0);
        let image = node_image(alpha, &prods_red)
            .ok_or_else(|| Attempt::Retry("image reconstruction failed".into()))?;
        real.push(RealNodeData { alpha: alpha.clone(), disc_sign, tangential, image });
    }
    let complex_roots = p.deg() as usize - real.len();
    Ok(ChartData { p, e2rel, real, complex_roots })
}

fn empty_chart() -> ChartData {
    ChartData {
        p: IPoly::constant_i64(1),
        e2rel: Poly::zero(),
        real: vec![],
        complex_roots: 0,
    }
}

/// All 3-element subsets of `0..n` (n = 3 or 4).
fn three_row_subsets(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// `(D(s,t), D(t,s))` with `D(s,t) = det[f(s), f'(s), f'(t)]` restricted to
/// the given coordinate rows.
fn branch_det(f: &[Poly], rows: &[usize; 3]) -> (BiPoly, BiPoly) {
    let g: Vec<&Poly> = rows.iter().map(|&r| &f[r]).collect();
    let gp: Vec<Poly> = g.iter().map(|q| q.derivative()).collect();
    // Cofactor expansion along the f'(t) column: D = sum_k sgn_k f_k'(t) W_k(s)
    // with W_k the 2x2 Wronskian of the other two rows.
    let mut d_st = BiPoly::zero();
    let mut d_ts = BiPoly::zero();
    for k in 0..3 {
        let (i, j) = match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let w = g[i].mul(&gp[j]).sub(&g[j].mul(&gp[i]));
        let term_st = BiPoly::product(&w, &gp[k]);
        let term_ts = BiPoly::product(&gp[k], &w);
        if k == 1 {
            d_st = d_st.sub(&term_st);
            d_ts = d_ts.sub(&term_ts);
        } else {
            d_st = d_st.add(&term_st);
            d_ts = d_ts.add(&term_ts);
        }
    }
    (d_st, d_ts)
}

/// Eliminant data `(p0, s1_a, s1_b)` from the first pair of bivariate
/// minors (in degree order) without a shared factor, so a common factor of
/// two particular minors — unavoidable for curves whose coordinates share
/// polynomial factors pairwise, like lifts — does not poison every chart.
/// The eliminant is cut down by one further relation when its resultant
/// with the first minor is available; spurious roots contributed by the
/// chosen pair alone are removed by the downstream gcd filter over all
/// minors.
fn eliminate_minor_system(e2_pos: &[&Poly2]) -> Option<(IPoly, IPoly, IPoly)> {
    let mut sorted: Vec<&Poly2> = e2_pos.to_vec();
    sorted.sort_by_key(|m| m.deg());
    for ia in 0..sorted.len() {
        for ib in (ia + 1)..sorted.len() {
            let (fa, fb) = (sorted[ia], sorted[ib]);
            let Some(out) = eliminate(fa, fb) else { continue };
            let extra = sorted
                .iter()
                .enumerate()
                .filter(|(ic, _)| *ic != ia && *ic != ib)
                .find_map(|(_, fc)| {
                    resultant_interp(fa, fc).filter(|r| !r.is_zero())
                });
            let p0 = match extra {
                Some(r2) => out.resultant.gcd_fast(&r2).squarefree_fast(),
                None => out.resultant.squarefree_fast(),
            };
            return Some((p0, out.s1_a, out.s1_b));
        }
    }
    None
}

/// Resultant eliminating `e1` instead of `e2`; returns the degree of the
/// verified square-free eliminant in `e2`.
fn transposed_count(minors: &[Poly2]) -> Result<isize, String> {
    let tr: Vec<Poly2> = minors.iter().map(transpose).collect();
    let e2_pos: Vec<&Poly2> = tr.iter().filter(|m| m.deg() >= 1).collect();
    if e2_pos.len() < 2 {
        return Err("transposed system lacks two eliminable relations".into());
    }
    let (p0, s1_a, s1_b) =
        eliminate_minor_system(&e2_pos).ok_or("transposed minors share a factor")?;
    if p0.deg() < 1 {
        return Ok(0);
    }
    let modulus = Poly::from_ipoly(&p0);
    let e1rel = relation_poly(&s1_a, &s1_b, &p0)
        .ok_or("transposed leading coefficient vanishes at a node")?;
    let mut p = p0;
    for m in &tr {
        if p.deg() <= 0 {
            break;
        }
        let (g, _) = eval_poly2_mod(m, &e1rel, &modulus).clear_denominators();
        if g.is_zero() {
            continue;
        }
        p = p.gcd(&g);
    }
    Ok(p.squarefree_part().deg())
}

/// Swaps the roles of the two variables of a `Poly2`.
fn transpose(f: &Poly2) -> Poly2 {
    if f.is_zero() {
        return Poly2::zero();
    }
    let rows = f.coeffs();
    let ncols = rows.iter().map(|c| (c.deg() + 1).max(0) as usize).max().unwrap_or(0);
    let mut out: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); rows.len()]; ncols];
    for (i, c) in rows.iter().enumerate() {
        for (j, v) in c.coeffs().iter().enumerate() {
            out[j][i] = v.clone();
        }
    }
    Poly2::new(out.into_iter().map(IPoly::new).collect())
}

/// The polynomial whose roots are all individual node parameters:
/// `Res_alpha(P(alpha), t^2 - alpha t + E2(alpha))` (denominators cleared).
pub(crate) fn node_parameter_poly(p: &IPoly, e2rel: &Poly) -> Result<IPoly, String> {
    if p.deg() <= 0 {
        return Ok(IPoly::constant_i64(1));
    }
    // Main variable alpha, coefficients in Z[t].
    let a2 = Poly2::new(p.coeffs().iter().map(|c| IPoly::constant(c.clone())).collect());
    // e2rel = s * E with E integral and s = ps/qs > 0; multiply the
    // quadratic through by qs.
    let (e_int, s) = e2rel.clear_denominators();
    let (ps, qs) = (s.numer().clone(), s.denom().clone());
    let deg = (p.deg() - 1).max(e_int.deg()).max(1) as usize;
    let b2 = Poly2::new(
        (0..=deg)
            .map(|m| {
                // Coefficient of alpha^m in qs t^2 - qs alpha t + ps E(alpha).
                let c2 = if m == 0 { qs.clone() } else { BigInt::zero() };
                let c1 = if m == 1 { -qs.clone() } else { BigInt::zero() };
                let c0 = &ps * e_int.coeff(m);
                IPoly::new(vec![c0, c1, c2])
            })
            .collect(),
    );
    // Multiplicities matter here (a repeated root signals a shared
    // parameter), so no square-free reduction.
    resultant_main(&a2, &b2)
        .map(|r| r.primitive_signed())
        .ok_or_else(|| "node parameter resultant degenerates".into())
}

/// The eliminated variable as a polynomial in the surviving one:
/// `-bhat * ahat^{-1} mod p`, or `None` when `ahat` is not invertible
/// modulo `p` (it vanishes at an eliminant root). The inverse runs through
/// an integer Bezout sequence to avoid rational coefficient blow-up.
fn relation_poly(ahat: &IPoly, bhat: &IPoly, p: &IPoly) -> Option<Poly> {
    let modulus = Poly::from_ipoly(p);
    let (ia, sa) = Poly::from_ipoly(ahat).rem(&modulus).clear_denominators();
    let (ib, sb) = Poly::from_ipoly(bhat).rem(&modulus).clear_denominators();
    let (u, c) = ia.bezout_constant(p)?;
    if ib.is_zero() {
        return Some(Poly::zero());
    }
    // -b/a = -(sb ib) * (sa ia)^{-1} = -(sb / (sa c)) * ib * u  (mod p).
    let scale = -(sb / sa) / Rat::from_integer(c);
    Some(Poly::from_ipoly(&ib).mul(&Poly::from_ipoly(&u)).rem(&modulus).scale(&scale))
}

/// `f(e1, E2(e1))` reduced modulo `modulus` (Horner with a reduction after
/// every step; `e2` is already reduced).
fn eval_poly2_mod(f: &Poly2, e2: &Poly, modulus: &Poly) -> Poly {
    if f.is_zero() {
        return Poly::zero();
    }
    let n = f.deg() as usize;
    let mut acc = Poly::zero();
    for k in (0..=n).rev() {
        acc = acc.mul(e2).add(&Poly::from_ipoly(&f.coeff(k))).rem(modulus);
    }
    acc
}

/// Projective image tuple of the node at `alpha`, from the substituted
/// coordinate products.
fn node_image(alpha: &AlgReal, prods_red: &[Vec<Poly>]) -> Option<Vec<AlgReal>> {
    let n = prods_red.len();
    let j0 = (0..n).find(|&j| alpha.sign_of_poly(&prods_red[j][j]) != 0)?;
    let mut tuple = Vec::with_capacity(n);
    for i in 0..n {
        tuple.push(alpha.eval_ratfunc(&prods_red[i][j0], &Poly::one()));
    }
    Some(tuple)
}

/// Maps chart-level node data back through the Möbius reparameterization
/// `t -> (a t + b)/(c t + d)` and assembles the public records. `signs`
/// attaches a precomputed writhe sign to the real node of the same index
/// (empty: no signs).
pub(crate) fn build_records(
    data: &ChartData,
    a: &Rat,
    b: &Rat,
    c: &Rat,
    d: &Rat,
    signs: &[i8],
) -> Result<Vec<NodeRecord>, Attempt> {
    let t = Poly::t();
    let modulus = Poly::from_ipoly(&data.p);
    let e2rel = &data.e2rel;

    // Original symmetric coordinates as rational functions of alpha (the
    // common factor ahat, nonzero on the eliminant roots, is divided out):
    //   den  = (c d t + d^2) + c^2 E2
    //   e1n  = ((a d + b c) t + 2 b d) + 2 a c E2
    //   e2n  = (a b t + b^2) + a^2 E2
    let lin = |u: Rat, v: Rat| t.scale(&u).add(&Poly::constant(v));
    let den = lin(c * d, d * d).add(&e2rel.scale(&(c * c)));
    let e1n = lin(a * d + b * c, Rat::from_integer(2.into()) * b * d)
        .add(&e2rel.scale(&(Rat::from_integer(2.into()) * a * c)));
    let e2n = lin(a * b, b * b).add(&e2rel.scale(&(a * a)));
    let den_r = den.rem(&modulus);
    let e1n_r = e1n.rem(&modulus);
    let e2n_r = e2n.rem(&modulus);

    let mut finite: Vec<NodeRecord> = Vec::new();
    let mut at_infinity: Vec<NodeRecord> = Vec::new();
    for (idx, nd) in data.real.iter().enumerate() {
        let sign = signs.get(idx).copied();
        let kind = match nd.disc_sign {
            1 => NodeKind::Hyperbolic,
            -1 => NodeKind::Elliptic,
            _ => {
                return Err(Attempt::Fatal(CurveError::NonNodal(
                    "degenerate pair with vanishing discriminant".into(),
                )))
            }
        };
        let den_sign = nd.alpha.sign_of_poly(&den_r);
        if den_sign == 0 {
            // The pair contains the preimage of infinity: one original
            // parameter is infinite.
            if c.is_zero() {
                return Err(Attempt::Retry(
                    "identity chart claims a node through infinity".into(),
                ));
            }
            if kind != NodeKind::Hyperbolic {
                return Err(Attempt::Retry("non-real pair through infinity".into()));
            }
            // Other chart parameter: alpha + d/c; its original value is
            // (a c alpha + a d + b c) / (c^2 alpha + 2 c d).
            let on = t.scale(&(a * c)).add(&Poly::constant(a * d + b * c));
            let od = t.scale(&(c * c)).add(&Poly::constant(Rat::from_integer(2.into()) * c * d));
            let od_r = od.rem(&modulus);
            if nd.alpha.sign_of_poly(&od_r) == 0 {
                return Err(Attempt::Fatal(CurveError::NonNodal(
                    "pair with both parameters at infinity".into(),
                )));
            }
            let other = nd.alpha.eval_ratfunc(&on.rem(&modulus), &od_r);
            at_infinity.push(NodeRecord {
                kind,
                params: Some(NodeParams::WithInfinity { other }),
                image: Some(nd.image.clone()),
                tangential: nd.tangential,
                sign,
                count: 1,
            });
            continue;
        }
        let e1f = RatFunc::new(e1n_r.clone(), den_r.clone());
        let e2f = RatFunc::new(e2n_r.clone(), den_r.clone());
        let pair = AlgPair::new(e1f.eval_alg(&nd.alpha), e2f.eval_alg(&nd.alpha));
        finite.push(NodeRecord {
            kind,
            params: Some(NodeParams::Finite {
                pair,
                rep: ParamRep { alpha: nd.alpha.clone(), e1: e1f, e2: e2f },
            }),
            image: Some(nd.image.clone()),
            tangential: nd.tangential,
            sign,
            count: 1,
        });
    }

    finite.sort_by(|x, y| {
        let (px, py) = (record_pair(x), record_pair(y));
        px.e1.cmp_exact(&py.e1).then_with(|| px.e2.cmp_exact(&py.e2))
    });
    at_infinity.sort_by(|x, y| match (&x.params, &y.params) {
        (Some(NodeParams::WithInfinity { other: ox }), Some(NodeParams::WithInfinity { other: oy })) => {
            ox.cmp_exact(oy)
        }
        _ => std::cmp::Ordering::Equal,
    });

    let mut out = finite;
    out.extend(at_infinity);
    debug_assert!(data.complex_roots % 2 == 0, "complex eliminant roots pair up");
    for _ in 0..data.complex_roots / 2 {
        out.push(NodeRecord {
            kind: NodeKind::ComplexPairMember,
            params: None,
            image: None,
            tangential: false,
            sign: None,
            count: 2,
        });
    }
    Ok(out)
}

fn record_pair(r: &NodeRecord) -> &AlgPair {
    match &r.params {
        Some(NodeParams::Finite { pair, .. }) => pair,
        _ => unreachable!("finite record without pair"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::RationalCurveMap;

    fn curve(cs: &[&[i64]]) -> RationalCurveMap {
        RationalCurveMap::new(cs.iter().map(|c| Poly::from_i64s(c)).collect()).unwrap()
    }

    #[test]
    fn nodal_cubic_hyperbolic() {
        // (t^2 - 1 : t^3 - t : 1): node at parameters {1, -1}, image (0:0:1).
        let c = curve(&[&[-1, 0, 1], &[0, -1, 0, 1], &[1]]);
        let recs = nodes(&c).unwrap();
        assert_eq!(recs.len(), 1);
        let r = &recs[0];
        assert_eq!(r.kind, NodeKind::Hyperbolic);
        assert!(!r.tangential);
        match r.params.as_ref().unwrap() {
            NodeParams::Finite { pair, .. } => {
                assert_eq!(pair.e1, AlgReal::from_int(0));
                assert_eq!(pair.e2, AlgReal::from_int(-1));
            }
            other => panic!("expected finite pair, got {other:?}"),
        }
        // Image (0:0:1).
        let img = r.image.as_ref().unwrap();
        assert_eq!(img[0].sign(), 0);
        assert_eq!(img[1].sign(), 0);
        assert!(img[2].sign() != 0);
    }

    #[test]
    fn elliptic_cubic() {
        // (t^2 + 1 : t^3 + t : 1): solitary node, parameters {i, -i}.
        let c = curve(&[&[1, 0, 1], &[0, 1, 0, 1], &[1]]);
        let recs = nodes(&c).unwrap();
        assert_eq!(recs.len(), 1);
        let r = &recs[0];
        assert_eq!(r.kind, NodeKind::Elliptic);
        match r.params.as_ref().unwrap() {
            NodeParams::Finite { pair, .. } => {
                assert_eq!(pair.e1, AlgReal::from_int(0));
                assert_eq!(pair.e2, AlgReal::from_int(1));
            }
            other => panic!("expected finite pair, got {other:?}"),
        }
        let img = r.image.as_ref().unwrap();
        assert_eq!(img[0].sign(), 0);
        assert_eq!(img[1].sign(), 0);
    }

    #[test]
    fn smooth_conic_has_no_nodes() {
        let c = curve(&[&[0, 0, 1], &[0, 1], &[1]]);
        assert!(nodes(&c).unwrap().is_empty());
    }

    #[test]
    fn smooth_space_quintic_has_no_real_nodes() {
        let c = curve(&[&[0, 0, 0, 0, 0, 1], &[0, 1], &[0, 0, 0, 0, 1], &[1]]);
        let recs = nodes(&c).unwrap();
        assert!(recs.iter().all(|r| r.kind == NodeKind::ComplexPairMember), "{recs:?}");
    }

    #[test]
    fn node_through_infinity_is_reported() {
        // (t^2 - 1 : t^3 - t : 1) reparameterized so the node parameter 1
        // moves to infinity: t -> (t + 1)/(t - 1) sends t = infinity to 1.
        let base = curve(&[&[-1, 0, 1], &[0, -1, 0, 1], &[1]]);
        let c = base.reparam(
            &Rat::from_integer(1.into()),
            &Rat::from_integer(1.into()),
            &Rat::from_integer(1.into()),
            &Rat::from_integer((-1).into()),
        );
        let recs = nodes(&c).unwrap();
        assert_eq!(recs.len(), 1);
        match recs[0].params.as_ref().unwrap() {
            NodeParams::WithInfinity { other } => {
                // The node pair {1, -1} pulls back to {infinity, 0}.
                assert_eq!(other.sign(), 0);
            }
            other => panic!("expected infinity pair, got {other:?}"),
        }
    }

    #[test]
    fn complex_count_matches_genus_formula() {
        // Smooth planar conic d=2: 0; nodal cubic d=3: 1 = (d-1)(d-2)/2.
        for (cs, d) in [
            (vec![vec![-1i64, 0, 1], vec![0, -1, 0, 1], vec![1]], 3usize),
            (vec![vec![1, 0, 1], vec![0, 1, 0, 1], vec![1]], 3),
        ] {
            let c = curve(&cs.iter().map(|v| v.as_slice()).collect::<Vec<_>>());
            let total: usize = nodes(&c).unwrap().iter().map(|r| r.count).sum();
            assert_eq!(total, (d - 1) * (d - 2) / 2);
        }
    }

    #[test]
    fn tacnode_rejected() {
        // (t^2 : t^4 : 1) covers the parabola twice: degenerate, rejected.
        let c = curve(&[&[0, 0, 1], &[0, 0, 0, 0, 1], &[1]]);
        assert!(matches!(
            nodes(&c),
            Err(CurveError::Degenerate(_)) | Err(CurveError::NonNodal(_))
        ));
    }
}
