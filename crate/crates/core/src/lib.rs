//! Combinatorial tools for small triangulated manifolds with group actions:
//! complementarity and neighborliness checks, permutation groups and their
//! subgroup lattices, fixed-point complexes, homology, canonical forms, and
//! an orbit-wise search for half-complementarity pseudomanifolds.

pub mod catalog;
pub mod complex;
pub mod error;
pub mod fixed_points;
pub mod group;
pub mod homology;
pub mod io;
pub mod iso;
pub mod perm;
pub mod search;
pub mod verify;
pub mod vertex_set;

pub use complex::{Complementarity, FVector, HVector, PseudomanifoldStatus, SimplicialComplex};
pub use error::{ComplexError, GroupError, HomologyError, ParseError};
pub use group::{OrbitPartition, PermGroup};
pub use perm::Permutation;
pub use vertex_set::VertexSet;
