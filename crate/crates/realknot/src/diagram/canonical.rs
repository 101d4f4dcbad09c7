//! Canonical form for diagram isomorphism testing.
//!
//! Two diagrams are isomorphic when they differ only by renaming crossing
//! ids, pole ids, solitary region tags, and component names, by rotating
//! the cyclic event sequences, by reversing traversal directions, and by
//! reordering components.  [`canonical`] picks the lexicographically
//! minimal encoding over all those choices and rebuilds the diagram from
//! it, so isomorphism becomes equality of canonical forms.
//!
//! The search is a brute-force product over component orderings, rotations
//! and directions; fine for the small diagrams this crate manipulates.

use std::collections::BTreeMap;

use crate::exact::rat::format_rat;

use super::{Event, SolitaryNode, VirtualDiagram};

/// One event in the candidate encoding: kind, relabeled id, flag, and the
/// attached optional data (sign or index), all order-comparable.
type EventKey = (u8, u32, u8, i16, String);

type Key = (Vec<u8>, Vec<Vec<EventKey>>, Vec<i8>);

/// The canonical representative of the diagram's isomorphism class.
pub fn canonical(d: &VirtualDiagram) -> VirtualDiagram {
    let n = d.components.len();
    let mut best: Option<(Key, VirtualDiagram)> = None;
    for perm in permutations(n) {
        // Mixed-radix enumeration of (rotation, direction) per component.
        let radix: Vec<usize> = perm
            .iter()
            .map(|&c| 2 * d.components[c].len().max(1))
            .collect();
        let total: usize = radix.iter().product();
        for mut code in 0..total {
            let mut choices = Vec::with_capacity(n);
            for &r in &radix {
                choices.push(code % r);
                code /= r;
            }
            let candidate = encode(d, &perm, &choices);
            if best.as_ref().map_or(true, |(k, _)| candidate.0 < *k) {
                best = Some(candidate);
            }
        }
    }
    match best {
        Some((_, rebuilt)) => rebuilt,
        None => {
            // No components: only solitary data to normalize.
            let mut out = d.clone();
            out.solitary = renamed_solitary(&d.solitary);
            out
        }
    }
}

fn renamed_solitary(solitary: &[SolitaryNode]) -> Vec<SolitaryNode> {
    let mut signs: Vec<i8> = solitary.iter().map(|s| s.sign).collect();
    signs.sort_unstable();
    signs
        .iter()
        .enumerate()
        .map(|(i, &sign)| SolitaryNode { region: format!("s{}", i + 1), sign })
        .collect()
}

fn encode(d: &VirtualDiagram, perm: &[usize], choices: &[usize]) -> (Key, VirtualDiagram) {
    let mut xmap: BTreeMap<u32, u32> = BTreeMap::new();
    let mut pmap: BTreeMap<u32, u32> = BTreeMap::new();
    let mut keys = Vec::with_capacity(perm.len());
    let mut comps = Vec::with_capacity(perm.len());
    let mut classes = Vec::with_capacity(perm.len());
    for (slot, &c) in perm.iter().enumerate() {
        let evs = &d.components[c];
        let len = evs.len().max(1);
        let rot = choices[slot] % len;
        let reversed = choices[slot] / len == 1;
        let mut key = Vec::with_capacity(evs.len());
        let mut out_evs = Vec::with_capacity(evs.len());
        for step in 0..evs.len() {
            let i = if reversed {
                (2 * evs.len() + rot - step) % evs.len()
            } else {
                (rot + step) % evs.len()
            };
            let (ek, ev) = relabel(d, &evs[i], reversed, &mut xmap, &mut pmap);
            key.push(ek);
            out_evs.push(ev);
        }
        keys.push(key);
        comps.push(out_evs);
        classes.push(d.class[c]);
    }
    let solitary = renamed_solitary(&d.solitary);
    let sol_signs: Vec<i8> = solitary.iter().map(|s| s.sign).collect();
    let key = (classes.clone(), keys, sol_signs);
    let crossing_signs = d
        .crossing_signs
        .iter()
        .filter_map(|(id, s)| xmap.get(id).map(|nid| (*nid, *s)))
        .collect();
    let pole_index = d
        .pole_index
        .iter()
        .filter_map(|(id, v)| pmap.get(id).map(|nid| (*nid, v.clone())))
        .collect();
    let rebuilt = VirtualDiagram {
        names: (0..comps.len()).map(|i| format!("c{i}")).collect(),
        components: comps,
        class: classes,
        solitary,
        crossing_signs,
        pole_index,
    };
    (key, rebuilt)
}

fn relabel(
    d: &VirtualDiagram,
    ev: &Event,
    reversed: bool,
    xmap: &mut BTreeMap<u32, u32>,
    pmap: &mut BTreeMap<u32, u32>,
) -> (EventKey, Event) {
    match ev {
        Event::Crossing { id, over } => {
            let next = xmap.len() as u32 + 1;
            let nid = *xmap.entry(*id).or_insert(next);
            let sign = d.crossing_signs.get(id).copied().unwrap_or(0) as i16;
            (
                (0, nid, *over as u8, sign, String::new()),
                Event::Crossing { id: nid, over: *over },
            )
        }
        Event::Pole { id, high_before } => {
            let next = pmap.len() as u32 + 1;
            let nid = *pmap.entry(*id).or_insert(next);
            // Reversing the traversal swaps the before/after sides.
            let hb = *high_before != reversed;
            let idx = d
                .pole_index
                .get(id)
                .map(|v| format_rat(v))
                .unwrap_or_default();
            ((1, nid, hb as u8, 0, idx), Event::Pole { id: nid, high_before: hb })
        }
        Event::Wrap => ((2, 0, 0, 0, String::new()), Event::Wrap),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}
