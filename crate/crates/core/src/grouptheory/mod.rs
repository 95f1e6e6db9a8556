//! Finite groups as validated multiplication tables: structural invariants,
//! subgroup enumeration, quotients, the commutator form of an extraspecial
//! group, and the unitriangular matrix model of the extraspecial group of
//! order p⁵ and exponent p.

mod commform;
mod constructions;
mod enumerate;
mod format;
mod invariants;
mod matgroup;
mod quotient;
mod subgroup;
mod table;

pub use commform::{commutator_form, CommutatorForm};
pub use constructions::{
    central_product, cyclic, direct_product, extraspecial_p5_exponent_p2, modular_maximal_cyclic,
};
pub use enumerate::{subgroups_of_order, subgroups_of_order_bounded, DEFAULT_SUBGROUP_LIMIT};
pub use format::{parse_group_table, write_group_table};
pub use invariants::{
    frattini_by_maximal_intersection, is_extraspecial, structural_invariants, GroupInvariants,
};
pub use matgroup::{
    extraspecial_p5, group_from_matrix_generators, heisenberg, preserved_polarity, MatrixGroup,
    DEFAULT_CLOSURE_BOUND,
};
pub use quotient::{quotient, QuotientGroup};
pub use subgroup::Subgroup;
pub use table::{FiniteGroup, MAX_GROUP_ORDER};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order {0} exceeds the supported cap of {MAX_GROUP_ORDER}")]
    OrderCap(usize),
    #[error("multiplication table has wrong shape")]
    TableShape,
    #[error("table entry out of range at ({0},{1})")]
    EntryRange(usize, usize),
    #[error("identity is not element 0 (row or column {0})")]
    IdentityNotZero(usize),
    #[error("table is not a Latin square: duplicate in {axis} {index}")]
    NotLatin { axis: &'static str, index: usize },
    #[error("operation is not associative: ({0}·{1})·{2} differs from {0}·({1}·{2})")]
    NotAssociative(u32, u32, u32),
    #[error("matrix closure exceeded the bound of {0} elements")]
    ClosureBound(usize),
    #[error("generators must be invertible square matrices over one field")]
    BadGenerators,
    #[error("element set is not closed under multiplication ({0}·{1} missing)")]
    NotClosed(u32, u32),
    #[error("element {0} does not belong to the group")]
    ElementRange(u32),
    #[error("subgroup is not normal (conjugate of {0} by {1} escapes)")]
    NotNormal(u32, u32),
    #[error("group order {0} is not a prime power")]
    NotPGroup(usize),
    #[error("group is not extraspecial: {0}")]
    NotExtraspecial(&'static str),
    #[error("subgroup enumeration exceeded the limit of {0}")]
    EnumerationLimit(usize),
    #[error("group table parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}
