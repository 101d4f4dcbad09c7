//! Exact computation with real algebraic curves in projective 3-space:
//! node detection and classification, the encomplexed writhe, virtual
//! nodal diagrams and their moves, lifts and nodal resolutions, torus and
//! projective torus links, and feasibility predicates for degree, genus,
//! and component counts.

pub mod curves;
pub mod diagram;
pub mod exact;
pub mod lift;
pub mod viro;
