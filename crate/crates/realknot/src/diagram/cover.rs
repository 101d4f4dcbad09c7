//! Gauss code of the preimage link in the sphere double cover.
//!
//! The universal covering of projective 3-space is the 3-sphere, and a
//! link downstairs pulls back to a link upstairs whose diagram lives in
//! the sphere double cover of the projective plane.  Combinatorially the
//! wrap markers carry all the covering data: a passage's sheet is the
//! parity of the wrap markers preceding it, each double point downstairs
//! has two preimages (one per sheet), a class-0 component lifts to two
//! disjoint copies, and a class-1 component lifts to one circle of doubled
//! length whose second round visits the opposite sheets.

use super::{Event, VirtualDiagram};

/// One passage of the lifted diagram: crossing label and role.
pub type CoverPassage = (String, char);

/// The Gauss code of the preimage of the diagram's curve in the double
/// cover: one cyclic passage list per lifted circle.  A crossing `q`
/// downstairs lifts to the two crossings `q.0` and `q.1`; circles of
/// crossing-free components are empty lists.
pub fn double_cover_code(d: &VirtualDiagram) -> Vec<Vec<CoverPassage>> {
    let mut out = Vec::new();
    for (c, evs) in d.components.iter().enumerate() {
        // (id, over, sheet) per passage, sheet = wrap prefix parity.
        let mut passages = Vec::new();
        let mut sheet = 0u8;
        for ev in evs {
            match ev {
                Event::Wrap => sheet ^= 1,
                Event::Crossing { id, over } => passages.push((*id, *over, sheet)),
                Event::Pole { .. } => {}
            }
        }
        let round = |r: u8| -> Vec<CoverPassage> {
            passages
                .iter()
                .map(|&(id, over, s)| {
                    (format!("{id}.{}", s ^ r), if over { 'o' } else { 'u' })
                })
                .collect()
        };
        if d.class[c] == 0 {
            out.push(round(0));
            out.push(round(1));
        } else {
            let mut circle = round(0);
            circle.extend(round(1));
            out.push(circle);
        }
    }
    out
}
