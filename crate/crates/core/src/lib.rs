//! Verification engine for finite category theory.
//!
//! Everything here works over finite data: categories are stored with explicit
//! composition tables, and every universal property is decided by exhaustive
//! enumeration.

pub mod algebra;
pub mod builders;
pub mod category;
pub mod diagram;
pub mod finset;
pub mod functor;
pub mod nattrans;
pub mod topo;
pub mod universal;

pub use algebra::{
    category_to_group, check_action, check_group, check_hom, group_to_category, image, is_abelian, is_group_mono,
    kernel, orbits, ActionData, AlgebraError, FinGroup, GroupHom,
};
pub use builders::{free_category, poset_category, Graph, PosetData};
pub use category::{
    classify_category, classify_morphism, find_special_object, hom_set, is_full_subcategory,
    opposite_category, product_category, validate_category, zero_morphism, CategoryClass,
    CategoryDescription, CategoryError, FinCategory, Mor, MorData, MorphismClass, Obj,
    SpecialKind, SubSelection,
};
pub use finset::{finset_skeleton, FinFunction};
pub use diagram::{build_diagram, CommutativityVerdict, Composite, Diagram, DiagramError, Disagreement, Edge};
pub use functor::{
    classify_functor, compose_functors, validate_functor, Functor, FunctorClass, FunctorError, MonoidalTensor,
    Variance,
};
pub use nattrans::{
    check_interchange, check_natural, coend_finset, end_finset, functor_category, godement, vcompose, NatError,
    NatTrans,
};
pub use universal::{
    check_adjunction, find_adjoint, is_limit_cone, search_colimit, search_limit, Adjunction, AdjunctionMode, Cone,
    Direction, UniversalError,
};
