//! Combinatorial virtual nodal diagrams.
//!
//! A virtual nodal diagram records the planar projection of a nodal space
//! curve at the Gauss-code level: each real component is a cyclic sequence
//! of events — crossing passages (with an over/under role), pole points
//! (where the space curve meets the projection center, with a marked high
//! side), and wrap markers (transverse crossings of the line at infinity,
//! determining the component's class in `H_1(RP^2)`).  Solitary double
//! points (isolated real nodes of the projection) are carried separately as
//! signed region tags, and crossings may carry signs.
//!
//! Diagrams are *abstract*: planar realizability of the underlying code is
//! not verified.  Inputs are either produced by the curve pipeline (hence
//! realizable by construction) or transcribed by hand and trusted.
//!
//! The height structure is implicit in the event data.  At a crossing the
//! over branch lies above the separating plane and the under branch below;
//! at a pole one side of the curve runs up toward the projection center.
//! Arcs (components minus crossings and poles) therefore acquire a height
//! tag at each endpoint, and an arc is *odd* when its two tags differ.
//! Odd-arc counting drives the genus-0 realizability test.

mod canonical;
mod cover;
mod moves;

pub use canonical::canonical;
pub use cover::double_cover_code;
pub use moves::{admissible_moves, apply_move, MoveKind, R2Site};

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::exact::rat::{format_rat, parse_rat, rat_int};
use crate::exact::Rat;

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
    #[error("missing data: {0}")]
    MissingData(String),
}

/// One event along a component, in traversal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Event {
    /// A passage through the double point `id`; `over` tells whether this
    /// branch is the one above the separating plane.
    Crossing { id: u32, over: bool },
    /// A point mapped to the projection center.  `high_before` tells which
    /// side of the pole runs up toward the center: the incoming side
    /// (`true`) or the outgoing side (`false`).
    Pole { id: u32, high_before: bool },
    /// A transverse crossing of the line at infinity of the affine chart.
    Wrap,
}

/// An isolated real double point of the projection (a solitary node).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolitaryNode {
    /// Tag of the complementary region containing the node.
    pub region: String,
    pub sign: i8,
}

/// A virtual nodal diagram.
///
/// Components are cyclic event sequences; `class` holds each component's
/// class in `H_1(RP^2)` (0 or 1), which must match the parity of its wrap
/// markers.  `crossing_signs` and `pole_index` carry the optional analytic
/// data (node signs, pole indices `i_M`) used by the writhe formula; signs
/// of inter-component crossings are stated relative to the traversal
/// orientations of the two components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualDiagram {
    pub components: Vec<Vec<Event>>,
    /// Component names used by the JSON encoding, in component order.
    pub names: Vec<String>,
    /// Per-component class in `H_1(RP^2)`.
    pub class: Vec<u8>,
    pub solitary: Vec<SolitaryNode>,
    /// Optional sign per crossing id.
    pub crossing_signs: BTreeMap<u32, i8>,
    /// Optional index `i_M` per pole id (a half-integer).
    pub pole_index: BTreeMap<u32, Rat>,
}

/// A segment of a component between consecutive crossings or poles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub component: usize,
    /// Index of the event the arc leaves.
    pub start: usize,
    /// Index of the event the arc arrives at.
    pub end: usize,
    /// Height tags at the start and end; `None` for the single closed arc
    /// of a component without crossings or poles.
    pub tags: Option<(i8, i8)>,
}

impl Arc {
    /// An arc is odd when its endpoint height tags differ.
    pub fn is_odd(&self) -> bool {
        matches!(self.tags, Some((a, b)) if a != b)
    }
}

/// Where a special point sits on the real locus of the normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Attribution {
    /// On the real component with the given index (0 or 1).
    Real(u8),
    /// Off the real locus (a non-real point).
    Imaginary,
}

/// Attribution of the six special points of a two-crossing, two-pole
/// diagram to the real components of a genus-1 normalization.
#[derive(Clone, Debug, Default)]
pub struct G1Attribution {
    /// Per pole id.
    pub poles: BTreeMap<u32, Attribution>,
    /// The two branch preimages of each crossing.
    pub crossings: BTreeMap<u32, (Attribution, Attribution)>,
}

impl VirtualDiagram {
    /// A diagram with auto-generated component names and no optional data.
    pub fn new(components: Vec<Vec<Event>>, class: Vec<u8>) -> Result<Self, DiagramError> {
        let names = (0..components.len()).map(|i| format!("c{i}")).collect();
        let d = VirtualDiagram {
            components,
            names,
            class,
            solitary: Vec::new(),
            crossing_signs: BTreeMap::new(),
            pole_index: BTreeMap::new(),
        };
        d.check()?;
        Ok(d)
    }

    /// All passages of every crossing: id -> list of (component, position,
    /// over).
    pub fn crossing_passages(&self) -> BTreeMap<u32, Vec<(usize, usize, bool)>> {
        let mut map: BTreeMap<u32, Vec<(usize, usize, bool)>> = BTreeMap::new();
        for (c, evs) in self.components.iter().enumerate() {
            for (i, ev) in evs.iter().enumerate() {
                if let Event::Crossing { id, over } = ev {
                    map.entry(*id).or_default().push((c, i, *over));
                }
            }
        }
        map
    }

    /// All poles: id -> (component, position, high_before).
    pub fn poles(&self) -> BTreeMap<u32, (usize, usize, bool)> {
        let mut map = BTreeMap::new();
        for (c, evs) in self.components.iter().enumerate() {
            for (i, ev) in evs.iter().enumerate() {
                if let Event::Pole { id, high_before } = ev {
                    map.insert(*id, (c, i, *high_before));
                }
            }
        }
        map
    }

    /// Whether both passages of the crossing lie on one component.
    pub fn crossing_same_component(&self, id: u32) -> Option<bool> {
        let map = self.crossing_passages();
        let ps = map.get(&id)?;
        if ps.len() != 2 {
            return None;
        }
        Some(ps[0].0 == ps[1].0)
    }

    /// Validates all structural invariants.
    pub fn check(&self) -> Result<(), DiagramError> {
        let n = self.components.len();
        if self.names.len() != n || self.class.len() != n {
            return Err(DiagramError::Invalid(
                "component, name, and class counts disagree".into(),
            ));
        }
        {
            let mut seen = std::collections::BTreeSet::new();
            for name in &self.names {
                if RESERVED_KEYS.contains(&name.as_str()) || !seen.insert(name) {
                    return Err(DiagramError::Invalid(format!(
                        "bad or duplicate component name {name:?}"
                    )));
                }
            }
        }
        for (c, evs) in self.components.iter().enumerate() {
            if self.class[c] > 1 {
                return Err(DiagramError::Invalid("class entries must be 0 or 1".into()));
            }
            let wraps = evs.iter().filter(|e| matches!(e, Event::Wrap)).count();
            if (wraps % 2) as u8 != self.class[c] {
                return Err(DiagramError::Invalid(format!(
                    "component {c} has {wraps} wrap markers but class {}",
                    self.class[c]
                )));
            }
        }
        let passages = self.crossing_passages();
        for (id, ps) in &passages {
            if ps.len() != 2 {
                return Err(DiagramError::Invalid(format!(
                    "crossing {id} appears {} times (expected 2)",
                    ps.len()
                )));
            }
            if ps[0].2 == ps[1].2 {
                return Err(DiagramError::Invalid(format!(
                    "crossing {id} must have one over and one under passage"
                )));
            }
        }
        let pole_events: Vec<&Event> = self
            .components
            .iter()
            .flatten()
            .filter(|e| matches!(e, Event::Pole { .. }))
            .collect();
        let poles = self.poles();
        if poles.len() != pole_events.len() {
            return Err(DiagramError::Invalid("duplicate pole id".into()));
        }
        if !matches!(poles.len(), 0 | 2) {
            return Err(DiagramError::Invalid(format!(
                "a diagram has 0 or 2 poles, found {}",
                poles.len()
            )));
        }
        {
            let mut seen = std::collections::BTreeSet::new();
            for s in &self.solitary {
                if s.sign.abs() != 1 {
                    return Err(DiagramError::Invalid("solitary signs must be ±1".into()));
                }
                if !seen.insert(&s.region) {
                    return Err(DiagramError::Invalid(format!(
                        "duplicate solitary region tag {:?}",
                        s.region
                    )));
                }
            }
        }
        for (id, s) in &self.crossing_signs {
            if !passages.contains_key(id) {
                return Err(DiagramError::Invalid(format!(
                    "sign given for unknown crossing {id}"
                )));
            }
            if s.abs() != 1 {
                return Err(DiagramError::Invalid("crossing signs must be ±1".into()));
            }
        }
        for (id, v) in &self.pole_index {
            if !poles.contains_key(id) {
                return Err(DiagramError::Invalid(format!(
                    "index given for unknown pole {id}"
                )));
            }
            if !(v + v).is_integer() {
                return Err(DiagramError::Invalid(format!(
                    "pole index {} is not a half-integer",
                    format_rat(v)
                )));
            }
        }
        // Two odd curves on RP^2 always intersect; combinatorially, two
        // class-1 components must share an odd number of crossings.
        for i in 0..n {
            for j in i + 1..n {
                if self.class[i] == 1 && self.class[j] == 1 {
                    let shared = passages
                        .values()
                        .filter(|ps| {
                            let cs = [ps[0].0, ps[1].0];
                            cs.contains(&i) && cs.contains(&j)
                        })
                        .count();
                    if shared % 2 == 0 {
                        return Err(DiagramError::Invalid(format!(
                            "class-1 components {i} and {j} cross {shared} times (must be odd)"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The arcs of the diagram: components cut at crossings and poles.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut out = Vec::new();
        for (c, evs) in self.components.iter().enumerate() {
            let cuts: Vec<usize> = evs
                .iter()
                .enumerate()
                .filter(|(_, e)| !matches!(e, Event::Wrap))
                .map(|(i, _)| i)
                .collect();
            if cuts.is_empty() {
                out.push(Arc { component: c, start: 0, end: 0, tags: None });
                continue;
            }
            for (k, &i) in cuts.iter().enumerate() {
                let j = cuts[(k + 1) % cuts.len()];
                out.push(Arc {
                    component: c,
                    start: i,
                    end: j,
                    tags: Some((outgoing_tag(&evs[i]), incoming_tag(&evs[j]))),
                });
            }
        }
        out
    }

    /// Number of arcs whose endpoint height tags differ.
    pub fn odd_arc_count(&self) -> usize {
        self.arcs().iter().filter(|a| a.is_odd()).count()
    }

    /// Genus-0 realizability: a diagram bounds a rational space curve
    /// exactly when it has at most 6 odd arcs.
    pub fn realizable_g0(&self) -> (bool, String) {
        let n = self.odd_arc_count();
        (n <= 6, format!("{n} odd arcs (realizable iff at most 6)"))
    }

    /// Genus-1 realizability for a two-crossing, two-pole diagram, given an
    /// attribution of the six special points (two poles, four crossing
    /// branch preimages) to the real components of the normalization.
    pub fn realizable_g1(&self, attr: &G1Attribution) -> Result<(bool, String), DiagramError> {
        let passages = self.crossing_passages();
        if passages.len() != 2 {
            return Err(DiagramError::Invalid(format!(
                "genus-1 test needs exactly 2 crossings, found {}",
                passages.len()
            )));
        }
        if attr.crossings.len() != 2
            || !passages.keys().all(|id| attr.crossings.contains_key(id))
        {
            return Err(DiagramError::Invalid(
                "crossing attribution does not match the diagram's crossings".into(),
            ));
        }
        let poles = self.poles();
        if attr.poles.len() != 2 {
            return Err(DiagramError::Invalid(
                "exactly two pole points must be attributed".into(),
            ));
        }
        match poles.len() {
            2 => {
                if !poles.keys().all(|id| attr.poles.contains_key(id)) {
                    return Err(DiagramError::Invalid(
                        "pole attribution does not match the diagram's poles".into(),
                    ));
                }
                if attr.poles.values().any(|a| *a == Attribution::Imaginary) {
                    return Err(DiagramError::Invalid(
                        "a pole drawn on the diagram is a real point".into(),
                    ));
                }
            }
            0 => {
                if attr.poles.values().any(|a| matches!(a, Attribution::Real(_))) {
                    return Err(DiagramError::Invalid(
                        "a diagram without pole events cannot have real poles".into(),
                    ));
                }
            }
            _ => unreachable!("check() enforces 0 or 2 poles"),
        }
        let mut points: Vec<Attribution> = attr.poles.values().copied().collect();
        for (a, b) in attr.crossings.values() {
            points.push(*a);
            points.push(*b);
        }
        let all_real = points.iter().all(|a| matches!(a, Attribution::Real(_)));
        if all_real {
            let first = points[0];
            if points.iter().all(|a| *a == first) {
                return Ok((false, "all six special points on one real component".into()));
            }
            if attr.crossings.values().any(|(a, b)| a != b) {
                return Ok((
                    false,
                    "all special points real and a crossing joins distinct components".into(),
                ));
            }
        }
        Ok((true, "no obstruction".into()))
    }

    pub fn to_json(&self) -> Value {
        let mut order: Vec<usize> = (0..self.components.len()).collect();
        order.sort_by(|&a, &b| self.names[a].cmp(&self.names[b]));
        let mut obj = serde_json::Map::new();
        for &c in &order {
            let evs: Vec<Value> = self.components[c].iter().map(event_json).collect();
            obj.insert(self.names[c].clone(), Value::Array(evs));
        }
        obj.insert(
            "class".into(),
            Value::Array(order.iter().map(|&c| json!(self.class[c])).collect()),
        );
        obj.insert(
            "solitary".into(),
            Value::Array(
                self.solitary
                    .iter()
                    .map(|s| json!([s.region, s.sign]))
                    .collect(),
            ),
        );
        if !self.crossing_signs.is_empty() {
            let m: serde_json::Map<String, Value> = self
                .crossing_signs
                .iter()
                .map(|(id, s)| (id.to_string(), json!(s)))
                .collect();
            obj.insert("signs".into(), Value::Object(m));
        }
        if !self.pole_index.is_empty() {
            let m: serde_json::Map<String, Value> = self
                .pole_index
                .iter()
                .map(|(id, v)| (id.to_string(), Value::String(format_rat(v))))
                .collect();
            obj.insert("i_m".into(), Value::Object(m));
        }
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Self, DiagramError> {
        let obj = v
            .as_object()
            .ok_or_else(|| DiagramError::Invalid("diagram JSON must be an object".into()))?;
        let mut names = Vec::new();
        let mut components = Vec::new();
        for (key, val) in obj {
            if RESERVED_KEYS.contains(&key.as_str()) {
                continue;
            }
            let arr = val.as_array().ok_or_else(|| {
                DiagramError::Invalid(format!("component {key:?} must be an event array"))
            })?;
            let evs = arr.iter().map(event_from_json).collect::<Result<Vec<_>, _>>()?;
            names.push(key.clone());
            components.push(evs);
        }
        let class = match obj.get("class") {
            Some(Value::Array(a)) => a
                .iter()
                .map(|x| {
                    x.as_u64()
                        .filter(|&v| v <= 1)
                        .map(|v| v as u8)
                        .ok_or_else(|| DiagramError::Invalid("class entries must be 0 or 1".into()))
                })
                .collect::<Result<Vec<_>, _>>()?,
            None => vec![0; components.len()],
            _ => return Err(DiagramError::Invalid("\"class\" must be an array".into())),
        };
        let mut solitary = Vec::new();
        if let Some(v) = obj.get("solitary") {
            let arr = v
                .as_array()
                .ok_or_else(|| DiagramError::Invalid("\"solitary\" must be an array".into()))?;
            for entry in arr {
                let pair = entry.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                    DiagramError::Invalid("solitary entries are [region, sign] pairs".into())
                })?;
                let region = pair[0]
                    .as_str()
                    .ok_or_else(|| DiagramError::Invalid("solitary region must be a string".into()))?
                    .to_string();
                let sign = pair[1]
                    .as_i64()
                    .filter(|s| s.abs() == 1)
                    .ok_or_else(|| DiagramError::Invalid("solitary sign must be ±1".into()))?
                    as i8;
                solitary.push(SolitaryNode { region, sign });
            }
        }
        let mut crossing_signs = BTreeMap::new();
        if let Some(v) = obj.get("signs") {
            let m = v
                .as_object()
                .ok_or_else(|| DiagramError::Invalid("\"signs\" must be an object".into()))?;
            for (k, s) in m {
                let id: u32 = k
                    .parse()
                    .map_err(|_| DiagramError::Invalid(format!("bad crossing id {k:?}")))?;
                let s = s
                    .as_i64()
                    .filter(|s| s.abs() == 1)
                    .ok_or_else(|| DiagramError::Invalid("crossing signs must be ±1".into()))?;
                crossing_signs.insert(id, s as i8);
            }
        }
        let mut pole_index = BTreeMap::new();
        if let Some(v) = obj.get("i_m") {
            let m = v
                .as_object()
                .ok_or_else(|| DiagramError::Invalid("\"i_m\" must be an object".into()))?;
            for (k, s) in m {
                let id: u32 = k
                    .parse()
                    .map_err(|_| DiagramError::Invalid(format!("bad pole id {k:?}")))?;
                let val = s
                    .as_str()
                    .ok_or_else(|| DiagramError::Invalid("pole indices are rat strings".into()))
                    .and_then(|s| parse_rat(s).map_err(DiagramError::Invalid))?;
                pole_index.insert(id, val);
            }
        }
        let d = VirtualDiagram { components, names, class, solitary, crossing_signs, pole_index };
        d.check()?;
        Ok(d)
    }

    /// Sum of the stored pole indices `i_M`.
    ///
    /// Errors when a pole lacks its index value.
    pub fn pole_index_sum(&self) -> Result<Rat, DiagramError> {
        let mut sum = rat_int(0);
        for id in self.poles().keys() {
            let v = self.pole_index.get(id).ok_or_else(|| {
                DiagramError::MissingData(format!("pole {id} has no stored index i_M"))
            })?;
            sum += v;
        }
        Ok(sum)
    }
}

const RESERVED_KEYS: [&str; 4] = ["class", "solitary", "signs", "i_m"];

/// Height tag of the arc leaving the event.
fn outgoing_tag(e: &Event) -> i8 {
    match e {
        Event::Crossing { over, .. } => tag(*over),
        Event::Pole { high_before, .. } => tag(!high_before),
        Event::Wrap => unreachable!("wrap markers do not cut arcs"),
    }
}

/// Height tag of the arc arriving at the event.
fn incoming_tag(e: &Event) -> i8 {
    match e {
        Event::Crossing { over, .. } => tag(*over),
        Event::Pole { high_before, .. } => tag(*high_before),
        Event::Wrap => unreachable!("wrap markers do not cut arcs"),
    }
}

fn tag(high: bool) -> i8 {
    if high {
        1
    } else {
        -1
    }
}

fn event_json(e: &Event) -> Value {
    match e {
        Event::Crossing { id, over } => json!(["X", id, if *over { "o" } else { "u" }]),
        Event::Pole { id, high_before } => {
            json!(["P", id, if *high_before { "hi-before" } else { "hi-after" }])
        }
        Event::Wrap => json!(["W"]),
    }
}

fn event_from_json(v: &Value) -> Result<Event, DiagramError> {
    let arr = v
        .as_array()
        .ok_or_else(|| DiagramError::Invalid("events are arrays".into()))?;
    let kind = arr
        .first()
        .and_then(Value::as_str)
        .ok_or_else(|| DiagramError::Invalid("event kind must be \"X\", \"P\", or \"W\"".into()))?;
    match kind {
        "W" => {
            if arr.len() != 1 {
                return Err(DiagramError::Invalid("wrap events are [\"W\"]".into()));
            }
            Ok(Event::Wrap)
        }
        "X" | "P" => {
            if arr.len() != 3 {
                return Err(DiagramError::Invalid(format!(
                    "{kind:?} events are [kind, id, flag] triples"
                )));
            }
            let id = arr[1]
                .as_u64()
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| DiagramError::Invalid("event id must be a small integer".into()))?;
            let flag = arr[2]
                .as_str()
                .ok_or_else(|| DiagramError::Invalid("event flag must be a string".into()))?;
            match (kind, flag) {
                ("X", "o") => Ok(Event::Crossing { id, over: true }),
                ("X", "u") => Ok(Event::Crossing { id, over: false }),
                ("P", "hi-before") => Ok(Event::Pole { id, high_before: true }),
                ("P", "hi-after") => Ok(Event::Pole { id, high_before: false }),
                _ => Err(DiagramError::Invalid(format!(
                    "unknown flag {flag:?} for event kind {kind:?}"
                ))),
            }
        }
        _ => Err(DiagramError::Invalid(format!("unknown event kind {kind:?}"))),
    }
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::Event;

    pub(crate) fn x(id: u32, over: bool) -> Event {
        Event::Crossing { id, over }
    }
    pub(crate) fn p(id: u32, high_before: bool) -> Event {
        Event::Pole { id, high_before }
    }
    pub(crate) fn w() -> Event {
        Event::Wrap
    }
}

#[cfg(test)]
mod tests {
    use super::tests_support::{p, x};
    use super::*;
    use crate::exact::rat::rat;

    /// An embedded circle with two poles in the canonical labeling: both
    /// high sides face the same way, so each arc joins a high end to a low
    /// end.
    fn circle_two_poles() -> VirtualDiagram {
        VirtualDiagram::new(vec![vec![p(1, true), p(2, true)]], vec![0]).unwrap()
    }

    fn figure_eight() -> VirtualDiagram {
        VirtualDiagram::new(vec![vec![x(1, true), x(1, false)]], vec![0]).unwrap()
    }

    /// Closed alternating three-crossing diagram (trefoil shadow).
    fn trefoil() -> VirtualDiagram {
        VirtualDiagram::new(
            vec![vec![
                x(1, true),
                x(2, false),
                x(3, true),
                x(1, false),
                x(2, true),
                x(3, false),
            ]],
            vec![0],
        )
        .unwrap()
    }

    #[test]
    fn arc_counts_match_the_small_catalogue() {
        assert_eq!(circle_two_poles().arcs().len(), 2);
        assert_eq!(figure_eight().arcs().len(), 2);
        // One component, 3 crossings and 2 poles: 8 division points.
        let d = VirtualDiagram::new(
            vec![vec![
                x(1, true),
                x(2, false),
                p(1, true),
                x(3, true),
                x(1, false),
                x(2, true),
                p(2, false),
                x(3, false),
            ]],
            vec![0],
        )
        .unwrap();
        assert_eq!(d.arcs().len(), 8);
    }

    #[test]
    fn event_free_component_gives_one_closed_arc() {
        let d = VirtualDiagram::new(vec![vec![]], vec![0]).unwrap();
        let arcs = d.arcs();
        assert_eq!(arcs.len(), 1);
        assert_eq!(arcs[0].tags, None);
        assert!(!arcs[0].is_odd());
        assert_eq!(d.odd_arc_count(), 0);
    }

    #[test]
    fn odd_arcs_on_the_two_pole_circle() {
        // Both arcs join the high side of one pole to the low side of the
        // other: 2 odd arcs.
        assert_eq!(circle_two_poles().odd_arc_count(), 2);
        // Opposed high sides instead: one arc is entirely high, the other
        // entirely low, both even.
        let d = VirtualDiagram::new(vec![vec![p(1, true), p(2, false)]], vec![0]).unwrap();
        assert_eq!(d.odd_arc_count(), 0);
    }

    #[test]
    fn odd_arcs_of_the_figure_eight_and_trefoil() {
        assert_eq!(figure_eight().odd_arc_count(), 2);
        assert_eq!(trefoil().odd_arc_count(), 6);
    }

    #[test]
    fn wrap_markers_do_not_cut_arcs() {
        let d = VirtualDiagram::new(
            vec![vec![Event::Wrap, x(1, true), Event::Wrap, x(1, false)]],
            vec![0],
        )
        .unwrap();
        assert_eq!(d.arcs().len(), 2);
        assert_eq!(d.odd_arc_count(), 2);
    }

    #[test]
    fn genus_zero_realizability_thresholds() {
        let (ok, why) = figure_eight().realizable_g0();
        assert!(ok, "{why}");
        // The alternating trefoil sits exactly on the boundary.
        let t = trefoil();
        assert_eq!(t.odd_arc_count(), 6);
        assert!(t.realizable_g0().0);
        // Splitting arcs with a pole pair pushes it over: place the poles
        // so each cuts an odd arc into an odd and a fresh odd arc.
        let d = VirtualDiagram::new(
            vec![vec![
                x(1, true),
                p(1, false),
                x(2, false),
                x(3, true),
                x(1, false),
                p(2, true),
                x(2, true),
                x(3, false),
            ]],
            vec![0],
        )
        .unwrap();
        assert!(d.odd_arc_count() > 6, "odd arcs: {}", d.odd_arc_count());
        assert!(!d.realizable_g0().0);
    }

    fn two_crossing_two_pole_diagram() -> VirtualDiagram {
        VirtualDiagram::new(
            vec![vec![
                x(1, true),
                p(1, true),
                x(2, false),
                x(1, false),
                p(2, false),
                x(2, true),
            ]],
            vec![0],
        )
        .unwrap()
    }

    #[test]
    fn genus_one_realizability_cases() {
        let d = two_crossing_two_pole_diagram();
        let mut attr = G1Attribution::default();
        attr.poles.insert(1, Attribution::Real(0));
        attr.poles.insert(2, Attribution::Real(0));
        attr.crossings.insert(1, (Attribution::Real(0), Attribution::Real(0)));
        attr.crossings.insert(2, (Attribution::Real(0), Attribution::Real(0)));
        let (ok, why) = d.realizable_g1(&attr).unwrap();
        assert!(!ok, "{why}");

        // All real but a crossing joins the two components.
        attr.crossings.insert(2, (Attribution::Real(0), Attribution::Real(1)));
        let (ok, why) = d.realizable_g1(&attr).unwrap();
        assert!(!ok, "{why}");

        // Same split crossing with the poles on the other component.
        attr.poles.insert(1, Attribution::Real(1));
        attr.poles.insert(2, Attribution::Real(1));
        attr.crossings.insert(2, (Attribution::Real(1), Attribution::Real(1)));
        let (ok, why) = d.realizable_g1(&attr).unwrap();
        assert!(ok, "{why}");

        // Poles off the real locus: no pole events drawn, hypothesis of
        // the one-component clause fails.
        let free = VirtualDiagram::new(
            vec![vec![x(1, true), x(2, false), x(1, false), x(2, true)]],
            vec![0],
        )
        .unwrap();
        let mut attr = G1Attribution::default();
        attr.poles.insert(1, Attribution::Imaginary);
        attr.poles.insert(2, Attribution::Imaginary);
        attr.crossings.insert(1, (Attribution::Real(0), Attribution::Real(0)));
        attr.crossings.insert(2, (Attribution::Real(0), Attribution::Real(0)));
        let (ok, why) = free.realizable_g1(&attr).unwrap();
        assert!(ok, "{why}");
    }

    #[test]
    fn validation_rejects_malformed_diagrams() {
        // Crossing appearing once.
        assert!(VirtualDiagram::new(vec![vec![x(1, true)]], vec![0]).is_err());
        // Two over passages.
        assert!(VirtualDiagram::new(vec![vec![x(1, true), x(1, true)]], vec![0]).is_err());
        // One pole.
        assert!(VirtualDiagram::new(vec![vec![p(1, true)]], vec![0]).is_err());
        // Class not matching wrap parity.
        assert!(VirtualDiagram::new(vec![vec![Event::Wrap]], vec![0]).is_err());
        assert!(VirtualDiagram::new(vec![vec![]], vec![1]).is_err());
        // Two class-1 components must cross an odd number of times.
        assert!(VirtualDiagram::new(
            vec![vec![Event::Wrap], vec![Event::Wrap]],
            vec![1, 1]
        )
        .is_err());
        let ok = VirtualDiagram::new(
            vec![
                vec![Event::Wrap, x(1, true)],
                vec![Event::Wrap, x(1, false)],
            ],
            vec![1, 1],
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn json_round_trip_preserves_everything() {
        let mut d = two_crossing_two_pole_diagram();
        d.solitary.push(SolitaryNode { region: "r1".into(), sign: -1 });
        d.crossing_signs.insert(1, 1);
        d.crossing_signs.insert(2, -1);
        d.pole_index.insert(1, rat(1, 2));
        d.pole_index.insert(2, rat(-1, 2));
        let v = d.to_json();
        let back = VirtualDiagram::from_json(&v).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_json(), v);
    }

    #[test]
    fn json_matches_the_documented_shape() {
        let v: Value = serde_json::from_str(
            r#"{"x": [["X",1,"o"],["P",1,"hi-before"],["X",1,"u"],["P",2,"hi-after"]],
                "class":[0], "solitary":[["r1",-1]]}"#,
        )
        .unwrap();
        let d = VirtualDiagram::from_json(&v).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.names, vec!["x".to_string()]);
        assert_eq!(d.components[0].len(), 4);
        assert_eq!(d.solitary.len(), 1);
        assert_eq!(d.poles().len(), 2);
    }

    #[test]
    fn pole_index_sum_requires_stored_values() {
        let mut d = circle_two_poles();
        assert!(matches!(d.pole_index_sum(), Err(DiagramError::MissingData(_))));
        d.pole_index.insert(1, rat(1, 2));
        d.pole_index.insert(2, rat(1, 2));
        assert_eq!(d.pole_index_sum().unwrap(), rat(1, 1));
    }

    #[test]
    fn half_integer_pole_indices_enforced() {
        let mut d = circle_two_poles();
        d.pole_index.insert(1, rat(1, 3));
        assert!(d.check().is_err());
    }
}
