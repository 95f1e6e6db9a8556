//! Point-line incidence structures: generalised quadrangle verification,
//! duality, isomorphism checking and search, and spread search.

mod gq;
mod iso;
mod spread;
mod structure;

pub use gq::{verify_gq, GqOrder, GqViolation};
pub use iso::{search_isomorphism, verify_isomorphism, IsoFailure, IsoReport};
pub use spread::search_spread;
pub use structure::IncidenceStructure;

use thiserror::Error;

/// Default ceiling on structure size for the backtracking searches.
pub const DEFAULT_STRUCTURE_BOUND: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("incidence pair ({0},{1}) repeated")]
    DuplicatePair(u32, u32),
    #[error("incidence pair ({0},{1}) out of range")]
    PairRange(u32, u32),
    #[error("point {0} lies on no line")]
    IsolatedPoint(u32),
    #[error("line {0} carries no point")]
    IsolatedLine(u32),
    #[error("map is not total: {0} entries for {1} elements")]
    NonTotalMap(usize, usize),
    #[error("map entry {0} out of range")]
    MapRange(u32),
    #[error("structure has {0} points, beyond the search bound of {1}")]
    SizeBound(usize, usize),
    #[error("structure is not a generalised quadrangle: {0}")]
    NotAGq(String),
    #[error("incidence file parse error: {0}")]
    Parse(String),
}
