//! Projective spaces PG(n,q): canonical subspaces, symplectic / quadratic /
//! Hermitian forms, totally isotropic subspace enumeration, the quadratic
//! cone and flock verification.

mod flock;
mod form;
mod subspace;

pub use flock::{linear_flock, verify_flock, Flock, FlockViolation, QuadCone};
pub use form::{isotropic_points, isotropic_subspaces, perp, Form, FormKind};
pub use subspace::{
    enumerate_points, enumerate_subspaces, meet, span, ProjSubspace,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjGeomError {
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("form is degenerate")]
    DegenerateForm,
    #[error("gram matrix is not {0}")]
    BadGram(&'static str),
    #[error("form kind not supported here")]
    UnsupportedFormKind,
    #[error("hermitian forms need a degree-2 field")]
    NotQuadraticField,
    #[error("quadratic and symplectic forms need odd characteristic")]
    EvenCharacteristic,
    #[error("cone vertex lies on the base plane")]
    MalformedCone,
    #[error("expected a point, got projective dimension {0}")]
    NotAPoint(isize),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}
