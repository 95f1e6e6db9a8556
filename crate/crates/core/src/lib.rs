//! Exact computational machinery for finite generalised quadrangles:
//! prime and quadratic field arithmetic, projective geometry over GF(p)
//! and GF(p²), multiplication-table group theory, coset geometries from
//! Kantor families, the classical quadrangles, BLT-sets of lines of W(p)
//! and the Knarr construction, together with desk-scale exhaustive
//! searches over all of them.
//!
//! Everything is deterministic: searches that run on several workers
//! merge their results into a canonical order before returning.

pub mod algebra;
pub(crate) mod util;
pub mod grouptheory;
pub mod projgeom;
