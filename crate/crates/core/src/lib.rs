//! Free metabelian groups and their relatives realized through lattice paths.
//!
//! A word in `F_d` is walked on the integer grid `Z^d`. Its endpoint solves the
//! word problem in `Z^d`, the signed areas of its planar projections solve it in
//! the free 2-step nilpotent group, and its net edge flow solves it in the free
//! metabelian group `Met(d)`. Cycles are expanded in unit plaquettes, which
//! gives the algebraic area, the canonical 2-cocycle of `Z^d` with values in
//! cycles, the cohomology invariant `beta`, and the satellite groups `Met_k(2)`.

pub mod cli;
pub mod cocycles;
pub mod error;
pub mod homology;
pub mod json;
pub mod lattice;
pub mod metabelian;
pub mod nilpotent;
pub mod point;
pub mod satellite;
pub mod sparse;
pub mod words;

pub use cocycles::{
    beta, canonical_cocycle, canonical_path, check_cocycle_identity, coboundary, Cocycle, CocycleRule, Perturbation,
};
pub use error::{Error, Result};
pub use homology::{
    algebraic_area, cube_relation, decompose_cycle, decompose_cycle_2d, plaquette_boundary, project_flow, Plaquette,
    PlaquetteSum,
};
pub use lattice::{evaluate_letters, evaluate_path, is_loop, EdgeFlow, EdgeKey, PathEvaluation, VertexChain};
pub use metabelian::{fox_image, met_eq, met_from_word, plaquette_element, section_image, FoxImage, MetabelianElem};
pub use nilpotent::{heis_eq, heis_eval, heis_trivial, HeisenbergElem};
pub use point::Point;
pub use satellite::{abelianization_order_of_z, SatGenerator, SatelliteElem, Subgroup};
pub use words::{free_reduce_letters, Letter, Sign, Word};
