//! Finite topological spaces and simplicial complexes.

mod complex;
mod smith;
mod space;

use thiserror::Error;

use crate::category::CategoryError;
use crate::functor::FunctorError;

pub use complex::{
    boundary_matrix, euler_characteristic, fundamental_groupoid, homology, pi0_complex, pi1_presentation,
    polyhedron_check, validate_complex, GroupoidResult, HomologyResult, Letter, PolyhedronReport, PresentedGroup,
    SimplicialComplex,
};
pub use smith::{smith_normal_form, IntMatrix, SmithForm};
pub use space::{
    find_homeomorphism, fintop_category, from_masks, glue_check, is_connected, is_continuous, is_homeomorphism,
    pi0_induced, pi0_top, validate_space, ComponentPartition, FinTopSpace, GlueVerdict, Piece, PointSet, MAX_POINTS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopError {
    #[error("family is not closed under unions: {left} ∪ {right} is missing")]
    MissingUnion { left: String, right: String },
    #[error("family is not closed under intersections: {left} ∩ {right} is missing")]
    MissingIntersection { left: String, right: String },
    #[error("the {0} is not open")]
    MissingTopOrBottom(&'static str),
    #[error("not a function: {0}")]
    NotAFunction(String),
    #[error("pieces disagree at point {0}")]
    OverlapDisagreement(String),
    #[error("not a closed cover: {0}")]
    NotClosedCover(String),
    #[error("map is not continuous: {0}")]
    NotContinuous(String),
    #[error("simplex repeats a vertex: {0}")]
    DuplicateVertexInSimplex(String),
    #[error("dimension {0} is out of range")]
    DimensionOutOfRange(usize),
    #[error("base vertex {0} is not in the complex")]
    BaseVertexMissing(String),
    #[error("unknown point {0}")]
    UnknownPoint(String),
    #[error("duplicate name {0}")]
    DuplicateName(String),
    #[error("size bound: {0}")]
    SizeBound(String),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Functor(#[from] FunctorError),
}
