//! The five elementary moves on virtual nodal diagrams.
//!
//! Each move rewrites a local pattern of the diagram; curves on the two
//! sides of a move are rigidly isotopic, so every diagram-level invariant
//! of the curve (in particular the writhe formula) is preserved.  The
//! moves are:
//!
//! * **Moving a pole** across an adjacent crossing passage.  The branch
//!   carrying the pole swaps height with the other branch, so the crossing
//!   flips its over/under roles and negates its sign, while the pole's
//!   index `i_M` absorbs the old sign.
//! * **Annihilation of two poles**: two adjacent poles whose high sides
//!   agree across the merge site (and whose indices cancel) disappear —
//!   the divisor moves off the real locus into a conjugate pair.
//! * **Reidemeister 1** through a cusp: a kink crossing of sign `s`
//!   becomes a solitary node of the same sign `s`.
//! * **Reidemeister 2** through a tacnode: a bigon pair of crossings with
//!   cancelling signs disappears, and likewise a pair of solitary nodes of
//!   opposite signs.
//! * **Reidemeister 3** through a triple point: the three pairwise
//!   adjacent passages of a crossing triangle slide past each other.
//!
//! [`apply_move`] returns the rewritten diagram together with the inverse
//! move, so round trips can be tested mechanically.  Removal sites that
//! wrap around the end of an event vector are recreated at the end of the
//! vector; round trips are therefore exact up to rotation, i.e. up to
//! [`canonical`](super::canonical) form.

use std::collections::BTreeSet;

use crate::exact::Rat;

use super::{DiagramError, Event, SolitaryNode, VirtualDiagram};

/// One move site.  Field meanings are documented per variant; positions
/// refer to event indices in the diagram the move is applied to.
#[derive(Clone, Debug, PartialEq)]
pub enum MoveKind {
    /// Slide the pole across the adjacent passage of `crossing`; the
    /// passage must directly follow (`forward`) or precede the pole.
    PoleMove { pole: u32, crossing: u32, forward: bool },
    /// Remove the diagram's two poles (adjacent, matching high sides,
    /// cancelling indices).
    PoleAnnihilation,
    /// Inverse of [`MoveKind::PoleAnnihilation`]: insert the pole pair
    /// `ids` before event `position` of `component`, the first pole with
    /// the given high side and index, the second with the opposite ones.
    PoleCreation {
        component: usize,
        position: usize,
        ids: (u32, u32),
        first_high_before: bool,
        index: Rat,
    },
    /// Collapse the kink at `crossing` into a solitary node tagged
    /// `region`, keeping the sign.
    R1Collapse { crossing: u32, region: String },
    /// Inverse of [`MoveKind::R1Collapse`]: expand the solitary node
    /// tagged `solitary` into a kink before event `position`.
    R1Expand {
        solitary: String,
        component: usize,
        position: usize,
        crossing: u32,
        over_first: bool,
    },
    /// Remove the bigon formed by crossings `a` and `b` (signs cancel).
    R2Annihilate { a: u32, b: u32 },
    /// Inverse of [`MoveKind::R2Annihilate`]: insert a bigon at the two
    /// sites; `sign_first` is the sign given to `sites[0].first`.
    R2Create { sites: [R2Site; 2], sign_first: i8 },
    /// Remove two solitary nodes of opposite signs.
    R2SolitaryAnnihilate { a: String, b: String },
    /// Inverse of [`MoveKind::R2SolitaryAnnihilate`]; `sign_first` is the
    /// sign given to the first region.
    R2SolitaryCreate { regions: (String, String), sign_first: i8 },
    /// Slide the three pairwise adjacent passages of the crossing
    /// triangle past each other.
    R3 { triangle: [u32; 3] },
}

/// One strand of a Reidemeister-2 bigon: the passages of `first` and
/// `second` are inserted consecutively before event `position`, both with
/// the role given by `over`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R2Site {
    pub component: usize,
    pub position: usize,
    pub first: u32,
    pub second: u32,
    pub over: bool,
}

/// Applies a move, returning the rewritten diagram and the inverse move.
pub fn apply_move(
    d: &VirtualDiagram,
    m: &MoveKind,
) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    let (out, inv) = match m {
        MoveKind::PoleMove { pole, crossing, forward } => {
            pole_move(d, *pole, *crossing, *forward)?
        }
        MoveKind::PoleAnnihilation => pole_annihilation(d)?,
        MoveKind::PoleCreation { component, position, ids, first_high_before, index } => {
            pole_creation(d, *component, *position, *ids, *first_high_before, index)?
        }
        MoveKind::R1Collapse { crossing, region } => r1_collapse(d, *crossing, region)?,
        MoveKind::R1Expand { solitary, component, position, crossing, over_first } => {
            r1_expand(d, solitary, *component, *position, *crossing, *over_first)?
        }
        MoveKind::R2Annihilate { a, b } => r2_annihilate(d, *a, *b)?,
        MoveKind::R2Create { sites, sign_first } => r2_create(d, sites, *sign_first)?,
        MoveKind::R2SolitaryAnnihilate { a, b } => r2_solitary_annihilate(d, a, b)?,
        MoveKind::R2SolitaryCreate { regions, sign_first } => {
            r2_solitary_create(d, regions, *sign_first)?
        }
        MoveKind::R3 { triangle } => r3(d, *triangle)?,
    };
    out.check()?;
    Ok((out, inv))
}

fn not_applicable<T>(msg: impl Into<String>) -> Result<T, DiagramError> {
    Err(DiagramError::MoveNotApplicable(msg.into()))
}

/// Removes the adjacent pair at cyclic positions `(i, i+1)` and returns
/// the insertion position recreating it (up to rotation when the pair
/// wraps around the end of the vector).
fn remove_adjacent_pair(evs: &mut Vec<Event>, i: usize) -> usize {
    let n = evs.len();
    if i + 1 < n {
        evs.remove(i + 1);
        evs.remove(i);
        i
    } else {
        debug_assert_eq!(i, n - 1);
        evs.remove(n - 1);
        evs.remove(0);
        evs.len()
    }
}

fn insert_pair(
    evs: &mut Vec<Event>,
    position: usize,
    a: Event,
    b: Event,
) -> Result<(), DiagramError> {
    if position > evs.len() {
        return not_applicable(format!(
            "insertion position {position} exceeds component length {}",
            evs.len()
        ));
    }
    evs.insert(position, b);
    evs.insert(position, a);
    Ok(())
}

/// The two passages of a crossing, as `(component, position, over)`, or an
/// error naming the crossing.
fn passages_of(d: &VirtualDiagram, id: u32) -> Result<[(usize, usize, bool); 2], DiagramError> {
    let map = d.crossing_passages();
    match map.get(&id).map(Vec::as_slice) {
        Some(&[p, q]) => Ok([p, q]),
        _ => not_applicable(format!("no crossing {id} in the diagram")),
    }
}

fn required_sign(d: &VirtualDiagram, id: u32) -> Result<i8, DiagramError> {
    d.crossing_signs
        .get(&id)
        .copied()
        .ok_or_else(|| DiagramError::MissingData(format!("crossing {id} has no sign")))
}

fn pole_move(
    d: &VirtualDiagram,
    pole: u32,
    crossing: u32,
    forward: bool,
) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    let poles = d.poles();
    let &(c, i, _) = match poles.get(&pole) {
        Some(p) => p,
        None => return not_applicable(format!("no pole {pole} in the diagram")),
    };
    let [q1, q2] = passages_of(d, crossing)?;
    let same_component = q1.0 == q2.0;
    let s = required_sign(d, crossing)?;
    let index = d
        .pole_index
        .get(&pole)
        .cloned()
        .ok_or_else(|| DiagramError::MissingData(format!("pole {pole} has no stored index i_M")))?;
    let mut out = d.clone();
    let n = out.components[c].len();
    if n < 2 {
        return not_applicable("pole has no neighboring event");
    }
    let j = if forward { (i + 1) % n } else { (i + n - 1) % n };
    let is_passage =
        |e: &Event| matches!(e, Event::Crossing { id, .. } if *id == crossing);
    if !is_passage(&out.components[c][j]) {
        return not_applicable(format!(
            "no passage of crossing {crossing} {} pole {pole}",
            if forward { "after" } else { "before" }
        ));
    }
    out.components[c].swap(i, j);
    // The branch carrying the pole swaps height with the other branch.
    for comp in &mut out.components {
        for ev in comp.iter_mut() {
            if let Event::Crossing { id, over } = ev {
                if *id == crossing {
                    *over = !*over;
                }
            }
        }
    }
    out.crossing_signs.insert(crossing, -s);
    // The index of the pole counts the winding of its own component, so
    // it only absorbs the sign of a self-crossing; an inter-component
    // crossing contributes 0 to the writhe on both sides of the move.
    if same_component {
        out.pole_index.insert(pole, index + Rat::from_integer(s.into()));
    }
    Ok((out, MoveKind::PoleMove { pole, crossing, forward: !forward }))
}

fn pole_annihilation(d: &VirtualDiagram) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    let poles = d.poles();
    let entries: Vec<(u32, (usize, usize, bool))> =
        poles.iter().map(|(id, v)| (*id, *v)).collect();
    let [(id_a, (ca, ia, ha)), (id_b, (cb, ib, hb))] = match entries.as_slice() {
        &[a, b] => [a, b],
        _ => return not_applicable("the diagram has no pole pair"),
    };
    if ca != cb {
        return not_applicable("the two poles lie on different components");
    }
    let n = d.components[ca].len();
    // Order the pair so the second pole directly follows the first.
    let (first, second) = if (ia + 1) % n == ib {
        ((id_a, ia, ha), (id_b, ib, hb))
    } else if (ib + 1) % n == ia {
        ((id_b, ib, hb), (id_a, ia, ha))
    } else {
        return not_applicable("the two poles are not adjacent");
    };
    if first.2 == second.2 {
        return not_applicable("pole high sides do not match across the merge site");
    }
    let va = d
        .pole_index
        .get(&first.0)
        .ok_or_else(|| DiagramError::MissingData(format!("pole {} has no stored index i_M", first.0)))?;
    let vb = d
        .pole_index
        .get(&second.0)
        .ok_or_else(|| DiagramError::MissingData(format!("pole {} has no stored index i_M", second.0)))?;
    if !(va + vb).eq(&Rat::from_integer(0.into())) {
        return not_applicable("pole indices do not cancel");
    }
    let mut out = d.clone();
    let position = remove_adjacent_pair(&mut out.components[ca], first.1);
    let index = out.pole_index.remove(&first.0).unwrap();
    out.pole_index.remove(&second.0);
    let inv = MoveKind::PoleCreation {
        component: ca,
        position,
        ids: (first.0, second.0),
        first_high_before: first.2,
        index,
    };
    Ok((out, inv))
}

fn pole_creation(
    d: &VirtualDiagram,
    component: usize,
    position: usize,
    ids: (u32, u32),
    first_high_before: bool,
    index: &Rat,
) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    if !d.poles().is_empty() {
        return not_applicable("the diagram already has poles");
    }
    if ids.0 == ids.1 {
        return not_applicable("pole ids must be distinct");
    }
    if component >= d.components.len() {
        return not_applicable(format!("no component {component}"));
    }
    let mut out = d.clone();
    insert_pair(
        &mut out.components[component],
        position,
        Event::Pole { id: ids.0, high_before: first_high_before },
        Event::Pole { id: ids.1, high_before: !first_high_before },
    )?;
    out.pole_index.insert(ids.0, index.clone());
    out.pole_index.insert(ids.1, -index);
    Ok((out, MoveKind::PoleAnnihilation))
}

fn r1_collapse(
    d: &VirtualDiagram,
    crossing: u32,
    region: &str,
) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    let [p, q] = passages_of(d, crossing)?;
    if p.0 != q.0 {
        return not_applicable(format!("crossing {crossing} joins two components"));
    }
    let c = p.0;
    let n = d.components[c].len();
    let first = if (p.1 + 1) % n == q.1 {
        p
    } else if (q.1 + 1) % n == p.1 {
        q
    } else {
        return not_applicable(format!("crossing {crossing} is not a kink"));
    };
    let s = required_sign(d, crossing)?;
    if d.solitary.iter().any(|sn| sn.region == region) {
        return not_applicable(format!("region tag {region:?} already in use"));
    }
    let mut out = d.clone();
    let position = remove_adjacent_pair(&mut out.components[c], first.1);
    out.crossing_signs.remove(&crossing);
    out.solitary.push(SolitaryNode { region: region.to_string(), sign: s });
    let inv = MoveKind::R1Expand {
        solitary: region.to_string(),
        component: c,
        position,
        crossing,
        over_first: first.2,
    };
    Ok((out, inv))
}

fn r1_expand(
    d: &VirtualDiagram,
    solitary: &str,
    component: usize,
    position: usize,
    crossing: u32,
    over_first: bool,
) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    let at = match d.solitary.iter().position(|sn| sn.region == solitary) {
        Some(i) => i,
        None => return not_applicable(format!("no solitary node tagged {solitary:?}")),
    };
    if d.crossing_passages().contains_key(&crossing) {
        return not_applicable(format!("crossing id {crossing} already in use"));
    }
    if component >= d.components.len() {
        return not_applicable(format!("no component {component}"));
    }
    let mut out = d.clone();
    let s = out.solitary.remove(at).sign;
    insert_pair(
        &mut out.components[component],
        position,
        Event::Crossing { id: crossing, over: over_first },
        Event::Crossing { id: crossing, over: !over_first },
    )?;
    out.crossing_signs.insert(crossing, s);
    Ok((out, MoveKind::R1Collapse { crossing, region: solitary.to_string() }))
}

/// The bigon strands of crossings `a` and `b`: cyclic adjacencies whose
/// two events are passages of `a` and `b` in either order.
fn bigon_sites(d: &VirtualDiagram, a: u32, b: u32) -> Vec<(usize, usize, Event, Event)> {
    let mut sites = Vec::new();
    for (c, evs) in d.components.iter().enumerate() {
        let n = evs.len();
        for i in 0..n {
            let j = (i + 1) % n;
            if n < 2 || (n == 2 && i == 1) {
                continue;
            }
            let ids = |e: &Event| match e {
                Event::Crossing { id, .. } => Some(*id),
                _ => None,
            };
            match (ids(&evs[i]), ids(&evs[j])) {
                (Some(x), Some(y)) if (x, y) == (a, b) || (x, y) == (b, a) => {
                    sites.push((c, i, evs[i], evs[j]));
                }
                _ => {}
            }
        }
    }
    sites
}

fn event_over(e: &Event) -> bool {
    matches!(e, Event::Crossing { over: true, .. })
}

fn r2_annihilate(
    d: &VirtualDiagram,
    a: u32,
    b: u32,
) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    if a == b {
        return not_applicable("a bigon needs two distinct crossings");
    }
    passages_of(d, a)?;
    passages_of(d, b)?;
    let sites = bigon_sites(d, a, b);
    if sites.len() != 2 {
        return not_applicable(format!(
            "crossings {a} and {b} do not bound a bigon ({} adjacency sites)",
            sites.len()
        ));
    }
    let used: BTreeSet<(usize, usize)> = sites
        .iter()
        .flat_map(|&(c, i, _, _)| {
            let n = d.components[c].len();
            [(c, i), (c, (i + 1) % n)]
        })
        .collect();
    if used.len() != 4 {
        return not_applicable("the two bigon strands share a passage");
    }
    for &(_, _, e1, e2) in &sites {
        if event_over(&e1) != event_over(&e2) {
            return not_applicable("each bigon strand must run entirely over or entirely under");
        }
    }
    if event_over(&sites[0].2) == event_over(&sites[1].2) {
        return not_applicable("one bigon strand must be over and the other under");
    }
    let sa = required_sign(d, a)?;
    let sb = required_sign(d, b)?;
    if sa != -sb {
        return not_applicable("bigon signs do not cancel");
    }
    let mut out = d.clone();
    let mut inv_sites = Vec::new();
    // Rebuild each touched component without the marked events; the
    // inverse insertion position of a site is the number of surviving
    // events before it (or the final length for a wrapped site).
    for comp in used.iter().map(|&(c, _)| c).collect::<BTreeSet<_>>() {
        let n = d.components[comp].len();
        let marked: BTreeSet<usize> =
            used.iter().filter(|&&(c, _)| c == comp).map(|&(_, i)| i).collect();
        out.components[comp] = d.components[comp]
            .iter()
            .enumerate()
            .filter(|(i, _)| !marked.contains(i))
            .map(|(_, e)| *e)
            .collect();
        for &(c, i, e1, e2) in &sites {
            if c != comp {
                continue;
            }
            let position = if i + 1 == n {
                out.components[comp].len()
            } else {
                (0..i).filter(|k| !marked.contains(k)).count()
            };
            let (fid, sid) = match (e1, e2) {
                (Event::Crossing { id: x, .. }, Event::Crossing { id: y, .. }) => (x, y),
                _ => unreachable!("bigon sites hold crossing events"),
            };
            inv_sites.push(R2Site {
                component: c,
                position,
                first: fid,
                second: sid,
                over: event_over(&e1),
            });
        }
    }
    out.crossing_signs.remove(&a);
    out.crossing_signs.remove(&b);
    let sign_first = if inv_sites[0].first == a { sa } else { sb };
    let inv = MoveKind::R2Create {
        sites: [inv_sites[0].clone(), inv_sites[1].clone()],
        sign_first,
    };
    Ok((out, inv))
}

fn r2_create(
    d: &VirtualDiagram,
    sites: &[R2Site; 2],
    sign_first: i8,
) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    let ids: BTreeSet<u32> = sites.iter().flat_map(|s| [s.first, s.second]).collect();
    if ids.len() != 2
        || sites[0].first == sites[0].second
        || sites[1].first == sites[1].second
    {
        return not_applicable("each bigon strand must pass both crossings");
    }
    if sites[0].over == sites[1].over {
        return not_applicable("one bigon strand must be over and the other under");
    }
    if sign_first.abs() != 1 {
        return not_applicable("bigon signs must be ±1");
    }
    let passages = d.crossing_passages();
    for id in &ids {
        if passages.contains_key(id) {
            return not_applicable(format!("crossing id {id} already in use"));
        }
    }
    for s in sites {
        if s.component >= d.components.len() {
            return not_applicable(format!("no component {}", s.component));
        }
    }
    let mut out = d.clone();
    // Insert the later site of a shared component first so the earlier
    // position stays valid.
    let mut order = [0usize, 1usize];
    if sites[0].component == sites[1].component && sites[0].position < sites[1].position {
        order = [1, 0];
    }
    for k in order {
        let s = &sites[k];
        insert_pair(
            &mut out.components[s.component],
            s.position,
            Event::Crossing { id: s.first, over: s.over },
            Event::Crossing { id: s.second, over: s.over },
        )?;
    }
    out.crossing_signs.insert(sites[0].first, sign_first);
    out.crossing_signs.insert(sites[0].second, -sign_first);
    let inv = MoveKind::R2Annihilate { a: sites[0].first, b: sites[0].second };
    Ok((out, inv))
}

fn r2_solitary_annihilate(
    d: &VirtualDiagram,
    a: &str,
    b: &str,
) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    if a == b {
        return not_applicable("two distinct solitary nodes required");
    }
    let find = |tag: &str| d.solitary.iter().position(|sn| sn.region == tag);
    let (ia, ib) = match (find(a), find(b)) {
        (Some(ia), Some(ib)) => (ia, ib),
        _ => return not_applicable("no such solitary node"),
    };
    if d.solitary[ia].sign != -d.solitary[ib].sign {
        return not_applicable("solitary signs do not cancel");
    }
    let mut out = d.clone();
    let sign_first = out.solitary[ia].sign;
    out.solitary.retain(|sn| sn.region != a && sn.region != b);
    let inv = MoveKind::R2SolitaryCreate {
        regions: (a.to_string(), b.to_string()),
        sign_first,
    };
    Ok((out, inv))
}

fn r2_solitary_create(
    d: &VirtualDiagram,
    regions: &(String, String),
    sign_first: i8,
) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    if regions.0 == regions.1 {
        return not_applicable("region tags must be distinct");
    }
    if sign_first.abs() != 1 {
        return not_applicable("solitary signs must be ±1");
    }
    if d
        .solitary
        .iter()
        .any(|sn| sn.region == regions.0 || sn.region == regions.1)
    {
        return not_applicable("region tag already in use");
    }
    let mut out = d.clone();
    out.solitary.push(SolitaryNode { region: regions.0.clone(), sign: sign_first });
    out.solitary.push(SolitaryNode { region: regions.1.clone(), sign: -sign_first });
    let inv = MoveKind::R2SolitaryAnnihilate { a: regions.0.clone(), b: regions.1.clone() };
    Ok((out, inv))
}

fn r3(
    d: &VirtualDiagram,
    triangle: [u32; 3],
) -> Result<(VirtualDiagram, MoveKind), DiagramError> {
    let [a, b, c] = triangle;
    if a == b || b == c || a == c {
        return not_applicable("a triangle needs three distinct crossings");
    }
    for id in triangle {
        passages_of(d, id)?;
    }
    let mut sites = Vec::new();
    for (x, y) in [(a, b), (b, c), (a, c)] {
        let found = bigon_sites(d, x, y);
        match found.as_slice() {
            &[site] => sites.push(site),
            _ => {
                return not_applicable(format!(
                    "crossings {x} and {y} must be adjacent on exactly one strand, found {}",
                    found.len()
                ))
            }
        }
    }
    let used: BTreeSet<(usize, usize)> = sites
        .iter()
        .flat_map(|&(cc, i, _, _)| {
            let n = d.components[cc].len();
            [(cc, i), (cc, (i + 1) % n)]
        })
        .collect();
    if used.len() != 6 {
        return not_applicable("triangle strands share a passage");
    }
    let mut profile = [0usize; 3]; // count of sites that are over-over, mixed, under-under
    for &(_, _, e1, e2) in &sites {
        let k = event_over(&e1) as usize + event_over(&e2) as usize;
        profile[k] += 1;
    }
    if profile != [1, 1, 1] {
        return not_applicable(
            "triangle needs one over strand, one under strand, and one middle strand",
        );
    }
    let mut out = d.clone();
    for &(cc, i, _, _) in &sites {
        let n = out.components[cc].len();
        out.components[cc].swap(i, (i + 1) % n);
    }
    Ok((out, MoveKind::R3 { triangle }))
}

/// First unused crossing id.
fn fresh_crossing(d: &VirtualDiagram, offset: u32) -> u32 {
    d.crossing_passages().keys().max().copied().unwrap_or(0) + 1 + offset
}

fn fresh_pole(d: &VirtualDiagram, offset: u32) -> u32 {
    d.poles().keys().max().copied().unwrap_or(0) + 1 + offset
}

fn fresh_region(d: &VirtualDiagram, offset: usize) -> String {
    let mut skip = offset;
    for k in 1.. {
        let tag = format!("m{k}");
        if d.solitary.iter().all(|s| s.region != tag) {
            if skip == 0 {
                return tag;
            }
            skip -= 1;
        }
    }
    unreachable!()
}

/// A bounded catalogue of moves applicable to the diagram, each of which
/// also admits its inverse.  Used by randomized move-walk tests; the
/// enumeration is deterministic.
pub fn admissible_moves(d: &VirtualDiagram) -> Vec<MoveKind> {
    let crossings: Vec<u32> = d.crossing_passages().keys().copied().collect();
    let poles: Vec<u32> = d.poles().keys().copied().collect();
    let mut candidates = Vec::new();
    for &p in &poles {
        for &q in &crossings {
            for forward in [true, false] {
                candidates.push(MoveKind::PoleMove { pole: p, crossing: q, forward });
            }
        }
    }
    if poles.len() == 2 {
        candidates.push(MoveKind::PoleAnnihilation);
    }
    let positions = |c: usize| 0..=d.components[c].len().min(4);
    if poles.is_empty() {
        for c in 0..d.components.len() {
            for pos in positions(c) {
                for hb in [true, false] {
                    candidates.push(MoveKind::PoleCreation {
                        component: c,
                        position: pos,
                        ids: (fresh_pole(d, 0), fresh_pole(d, 1)),
                        first_high_before: hb,
                        index: crate::exact::rat::rat(1, 2),
                    });
                }
            }
        }
    }
    for &q in &crossings {
        candidates.push(MoveKind::R1Collapse { crossing: q, region: fresh_region(d, 0) });
    }
    for sn in &d.solitary {
        for c in 0..d.components.len() {
            for pos in positions(c) {
                for over_first in [true, false] {
                    candidates.push(MoveKind::R1Expand {
                        solitary: sn.region.clone(),
                        component: c,
                        position: pos,
                        crossing: fresh_crossing(d, 0),
                        over_first,
                    });
                }
            }
        }
    }
    for (i, &a) in crossings.iter().enumerate() {
        for &b in &crossings[i + 1..] {
            candidates.push(MoveKind::R2Annihilate { a, b });
        }
    }
    {
        let (a, b) = (fresh_crossing(d, 0), fresh_crossing(d, 1));
        let mut spots = Vec::new();
        for c in 0..d.components.len() {
            let len = d.components[c].len();
            spots.push((c, 0));
            if len > 1 {
                spots.push((c, len / 2));
            }
        }
        for (i, &(c1, p1)) in spots.iter().enumerate() {
            for &(c2, p2) in &spots[i + 1..] {
                for sign_first in [1i8, -1] {
                    candidates.push(MoveKind::R2Create {
                        sites: [
                            R2Site { component: c1, position: p1, first: a, second: b, over: true },
                            R2Site { component: c2, position: p2, first: a, second: b, over: false },
                        ],
                        sign_first,
                    });
                }
            }
        }
    }
    for (i, sa) in d.solitary.iter().enumerate() {
        for sb in &d.solitary[i + 1..] {
            candidates.push(MoveKind::R2SolitaryAnnihilate {
                a: sa.region.clone(),
                b: sb.region.clone(),
            });
        }
    }
    for sign_first in [1i8, -1] {
        candidates.push(MoveKind::R2SolitaryCreate {
            regions: (fresh_region(d, 0), fresh_region(d, 1)),
            sign_first,
        });
    }
    for (i, &a) in crossings.iter().enumerate() {
        for (j, &b) in crossings.iter().enumerate().skip(i + 1) {
            for &c in &crossings[j + 1..] {
                candidates.push(MoveKind::R3 { triangle: [a, b, c] });
            }
        }
    }
    candidates
        .into_iter()
        .filter(|m| {
            apply_move(d, m)
                .map(|(next, inv)| apply_move(&next, &inv).is_ok())
                .unwrap_or(false)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::super::tests_support::{p, x};
    use super::super::{canonical, VirtualDiagram};
    use super::*;
    use crate::exact::rat::rat;
    use crate::viro::viro_w_from_diagram;

    /// A signed kinked diagram: one kink plus a far crossing pair.
    fn kinked() -> VirtualDiagram {
        let mut d = VirtualDiagram::new(
            vec![vec![
                x(1, true),
                x(1, false),
                x(2, true),
                x(3, false),
                x(2, false),
                x(3, true),
            ]],
            vec![0],
        )
        .unwrap();
        d.crossing_signs.insert(1, 1);
        d.crossing_signs.insert(2, 1);
        d.crossing_signs.insert(3, -1);
        d
    }

    #[test]
    fn r1_collapse_turns_the_kink_into_a_solitary_node_of_the_same_sign() {
        let d = kinked();
        let w0 = viro_w_from_diagram(&d, 0).unwrap();
        let (out, inv) = apply_move(&d, &MoveKind::R1Collapse { crossing: 1, region: "r".into() })
            .unwrap();
        assert_eq!(out.solitary.len(), 1);
        assert_eq!(out.solitary[0].sign, 1);
        assert_eq!(out.crossing_passages().len(), 2);
        assert_eq!(viro_w_from_diagram(&out, 0).unwrap(), w0);
        let (back, _) = apply_move(&out, &inv).unwrap();
        assert_eq!(canonical(&back), canonical(&d));
    }

    #[test]
    fn r1_needs_an_actual_kink() {
        let d = kinked();
        assert!(matches!(
            apply_move(&d, &MoveKind::R1Collapse { crossing: 2, region: "r".into() }),
            Err(DiagramError::MoveNotApplicable(_))
        ));
    }

    #[test]
    fn pole_move_flips_the_crossing_and_feeds_the_pole_index() {
        let mut d = VirtualDiagram::new(
            vec![vec![
                p(1, true),
                x(1, true),
                x(1, false),
                p(2, false),
            ]],
            vec![0],
        )
        .unwrap();
        d.crossing_signs.insert(1, 1);
        d.pole_index.insert(1, rat(1, 2));
        d.pole_index.insert(2, rat(-1, 2));
        let w0 = viro_w_from_diagram(&d, 0).unwrap();
        let odd0 = d.odd_arc_count();
        let m = MoveKind::PoleMove { pole: 1, crossing: 1, forward: true };
        let (out, inv) = apply_move(&d, &m).unwrap();
        assert_eq!(inv, MoveKind::PoleMove { pole: 1, crossing: 1, forward: false });
        assert_eq!(out.crossing_signs[&1], -1);
        assert_eq!(out.pole_index[&1], rat(3, 2));
        assert_eq!(viro_w_from_diagram(&out, 0).unwrap(), w0);
        assert_eq!((out.odd_arc_count() + odd0) % 2, 0, "odd-arc parity preserved");
        let (back, _) = apply_move(&out, &inv).unwrap();
        assert_eq!(canonical(&back), canonical(&d));
    }

    #[test]
    fn pole_move_across_another_component_keeps_the_index() {
        let mut d = VirtualDiagram::new(
            vec![
                vec![p(1, true), x(1, true), x(2, false), p(2, false)],
                vec![x(1, false), x(2, true)],
            ],
            vec![0, 0],
        )
        .unwrap();
        d.crossing_signs.insert(1, 1);
        d.crossing_signs.insert(2, 1);
        d.pole_index.insert(1, rat(1, 2));
        d.pole_index.insert(2, rat(-1, 2));
        let w0 = viro_w_from_diagram(&d, 0).unwrap();
        let (out, _) =
            apply_move(&d, &MoveKind::PoleMove { pole: 1, crossing: 1, forward: true }).unwrap();
        assert_eq!(out.pole_index[&1], rat(1, 2), "inter-component crossing");
        assert_eq!(out.crossing_signs[&1], -1);
        assert_eq!(viro_w_from_diagram(&out, 0).unwrap(), w0);
    }

    #[test]
    fn pole_annihilation_round_trip() {
        let mut d = VirtualDiagram::new(
            vec![vec![x(1, true), x(1, false), p(1, true), p(2, false)]],
            vec![0],
        )
        .unwrap();
        d.crossing_signs.insert(1, -1);
        d.pole_index.insert(1, rat(1, 2));
        d.pole_index.insert(2, rat(-1, 2));
        let w0 = viro_w_from_diagram(&d, 1).unwrap();
        let (out, inv) = apply_move(&d, &MoveKind::PoleAnnihilation).unwrap();
        assert!(out.poles().is_empty());
        assert_eq!(viro_w_from_diagram(&out, 1).unwrap(), w0);
        let (back, inv2) = apply_move(&out, &inv).unwrap();
        assert_eq!(inv2, MoveKind::PoleAnnihilation);
        assert_eq!(canonical(&back), canonical(&d));
    }

    #[test]
    fn pole_annihilation_needs_matching_sides_and_cancelling_indices() {
        let mut d = VirtualDiagram::new(
            vec![vec![p(1, true), p(2, true)]],
            vec![0],
        )
        .unwrap();
        d.pole_index.insert(1, rat(1, 2));
        d.pole_index.insert(2, rat(-1, 2));
        // Same high side at the merge site: not annihilable.
        assert!(apply_move(&d, &MoveKind::PoleAnnihilation).is_err());
        let mut d2 = VirtualDiagram::new(
            vec![vec![p(1, true), p(2, false)]],
            vec![0],
        )
        .unwrap();
        d2.pole_index.insert(1, rat(1, 2));
        d2.pole_index.insert(2, rat(1, 2));
        // Indices do not cancel.
        assert!(apply_move(&d2, &MoveKind::PoleAnnihilation).is_err());
        d2.pole_index.insert(2, rat(-1, 2));
        assert!(apply_move(&d2, &MoveKind::PoleAnnihilation).is_ok());
    }

    #[test]
    fn r2_bigon_round_trip_across_two_components() {
        let mut d = VirtualDiagram::new(
            vec![
                vec![x(1, true), x(2, true)],
                vec![x(1, false), x(2, false)],
            ],
            vec![0, 0],
        )
        .unwrap();
        d.crossing_signs.insert(1, 1);
        d.crossing_signs.insert(2, -1);
        let w0 = viro_w_from_diagram(&d, 0).unwrap();
        let (out, inv) = apply_move(&d, &MoveKind::R2Annihilate { a: 1, b: 2 }).unwrap();
        assert!(out.crossing_passages().is_empty());
        assert_eq!(viro_w_from_diagram(&out, 0).unwrap(), w0);
        let (back, _) = apply_move(&out, &inv).unwrap();
        assert_eq!(canonical(&back), canonical(&d));
    }

    #[test]
    fn r2_requires_cancelling_signs_and_a_true_bigon() {
        let mut d = VirtualDiagram::new(
            vec![
                vec![x(1, true), x(2, true)],
                vec![x(1, false), x(2, false)],
            ],
            vec![0, 0],
        )
        .unwrap();
        d.crossing_signs.insert(1, 1);
        d.crossing_signs.insert(2, 1);
        assert!(apply_move(&d, &MoveKind::R2Annihilate { a: 1, b: 2 }).is_err());
        // Mixed roles on one strand: not a bigon.
        let mut m = VirtualDiagram::new(
            vec![
                vec![x(1, true), x(2, false)],
                vec![x(1, false), x(2, true)],
            ],
            vec![0, 0],
        )
        .unwrap();
        m.crossing_signs.insert(1, 1);
        m.crossing_signs.insert(2, -1);
        assert!(apply_move(&m, &MoveKind::R2Annihilate { a: 1, b: 2 }).is_err());
    }

    #[test]
    fn r2_solitary_pair_round_trip() {
        let d = VirtualDiagram::new(vec![vec![]], vec![0]).unwrap();
        let m = MoveKind::R2SolitaryCreate { regions: ("a".into(), "b".into()), sign_first: 1 };
        let (out, inv) = apply_move(&d, &m).unwrap();
        assert_eq!(out.solitary.len(), 2);
        assert_eq!(viro_w_from_diagram(&out, 0).unwrap(), 0);
        let (back, _) = apply_move(&out, &inv).unwrap();
        assert_eq!(canonical(&back), canonical(&d));
    }

    /// Standard triangle: strand A over both, strand C under both, strand
    /// B mixed, drawn on three components.
    fn triangle() -> VirtualDiagram {
        let mut d = VirtualDiagram::new(
            vec![
                vec![x(1, true), x(2, true)],
                vec![x(1, false), x(3, true)],
                vec![x(2, false), x(3, false)],
            ],
            vec![0, 0, 0],
        )
        .unwrap();
        d.crossing_signs.insert(1, 1);
        d.crossing_signs.insert(2, -1);
        d.crossing_signs.insert(3, 1);
        d
    }

    #[test]
    fn r3_slides_the_triangle_and_is_an_involution() {
        let d = triangle();
        let w0 = viro_w_from_diagram(&d, 0).unwrap();
        let odd0 = d.odd_arc_count();
        let m = MoveKind::R3 { triangle: [1, 2, 3] };
        let (out, inv) = apply_move(&d, &m).unwrap();
        assert_eq!(inv, m);
        assert_ne!(out, d);
        assert_eq!(viro_w_from_diagram(&out, 0).unwrap(), w0);
        assert_eq!(out.odd_arc_count(), odd0, "odd arcs unchanged by R3");
        let (back, _) = apply_move(&out, &inv).unwrap();
        assert_eq!(canonical(&back), canonical(&d));
    }

    #[test]
    fn r3_rejects_inconsistent_role_profiles() {
        // All three strands mixed: no triangle move.
        let mut d = VirtualDiagram::new(
            vec![
                vec![x(1, true), x(2, false)],
                vec![x(1, false), x(3, true)],
                vec![x(2, true), x(3, false)],
            ],
            vec![0, 0, 0],
        )
        .unwrap();
        for id in 1..=3 {
            d.crossing_signs.insert(id, 1);
        }
        assert!(apply_move(&d, &MoveKind::R3 { triangle: [1, 2, 3] }).is_err());
    }

    #[test]
    fn randomized_move_walk_keeps_the_writhe_and_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f7665);
        let start = kinked();
        let w0 = viro_w_from_diagram(&start, 0).unwrap();
        let census = (start.components.len(), start.class.clone());
        let mut d = start.clone();
        let mut trail = Vec::new();
        for step in 0..60 {
            let moves = admissible_moves(&d);
            assert!(!moves.is_empty(), "no admissible moves at step {step}");
            let m = &moves[rng.gen_range(0..moves.len())];
            let (next, inv) = apply_move(&d, m).unwrap();
            assert_eq!(
                viro_w_from_diagram(&next, 0).unwrap(),
                w0,
                "writhe changed at step {step} by {m:?}"
            );
            assert_eq!((next.components.len(), next.class.clone()), census);
            trail.push(inv);
            d = next;
        }
        while let Some(inv) = trail.pop() {
            let (back, _) = apply_move(&d, &inv).unwrap();
            d = back;
        }
        assert_eq!(canonical(&d), canonical(&start));
    }
}
