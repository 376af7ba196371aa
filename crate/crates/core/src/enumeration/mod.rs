//! Replays the tree-plus-edges construction of filling ribbon graphs: pick
//! a plane tree, add extra edges anywhere, choose a cyclic order at every
//! vertex, thicken, and keep the result only when the closed surface has the
//! target genus.

mod census;
mod rotations;
mod trees;

use thiserror::Error;

pub use census::{
    candidates, census_upper_bound_check, generate_candidates, Census, CensusResult,
    ConstructionBudget, UpperBoundCheck,
};
pub use rotations::{
    enumerate_edge_additions, enumerate_rotation_systems, RotationSystems, Skeleton,
};
pub use trees::{enumerate_plane_trees, PlaneTree, PlaneTrees};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("a plane tree needs at least one vertex")]
    ZeroVertices,
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
    #[error("census hit the work cap of {0} sequences; comparison would be meaningless")]
    Truncated(u64),
}
