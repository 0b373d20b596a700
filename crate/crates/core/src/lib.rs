//! Rook placements in the root system `A_{n-1}` as a partial order.
//!
//! * [`roots`]: roots, placements, enumeration of `R(n)` and `I(n)`, boards.
//! * [`order`]: the rank-matrix order, root order, `w_D`, Bruhat comparison.
//! * [`moves`]: immediate-predecessor move families.
//! * [`kerov`]: the Kerov map and the rank functions.
//! * [`poset`]: materialized posets, Hasse diagrams, gradedness, exports.
//! * [`verify`]: exhaustive checks against brute-force oracles.

pub mod error;
pub mod kerov;
pub mod moves;
pub mod order;
pub mod poset;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};
pub use kerov::{kerov_map, rank_general, rank_orthogonal, KerovImage};
pub use moves::{predecessors, predecessors_general, predecessors_orthogonal, CoverMove, MoveKind};
pub use order::{
    bruhat_leq, inversion_length, involution_of, leq_placement, r_matrix, Permutation, RankMatrix,
};
pub use poset::{build_poset, DotOptions, GradedReport, GradedWitness, Poset};
pub use roots::{enumerate_placements, render_board, BoardStyle, Kind, RookPlacement, Root};
pub use verify::{Suite, SuiteReport};
