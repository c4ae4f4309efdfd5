//! One error enum for the whole crate.
//!
//! Degeneracies are part of the domain here (special position, indeterminacy
//! loci, non-reduced base schemes), so most variants name a geometric failure
//! rather than a programming error. Plumbing failures (shape mismatches, bad
//! input strings) get their own variants with enough context to debug.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Shape(String),

    #[error("zero vector cannot be projectivized")]
    ZeroVector,

    #[error("coincident points at positions {0} and {1}")]
    CoincidentPoints(usize, usize),

    #[error("configuration has {got} points, need {need}")]
    WrongPointCount { need: usize, got: usize },

    #[error("points do not span the ambient space")]
    PointsDoNotSpan,

    #[error("point in special position: nullspace column {0} is zero")]
    SpecialPosition(usize),

    #[error("associated points collide at positions {0} and {1}")]
    AssociatedPointsCollide(usize, usize),

    #[error("degenerate subset: points {0:?} are linearly dependent")]
    DegenerateSubset(Vec<usize>),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("degree too low for resultant")]
    DegreeTooLow,

    #[error("tangent line does not pass through its base point")]
    TangentNotIncident,

    #[error("tangency conditions require ambient dimension 2, got {0}")]
    TangencyAmbient(usize),

    #[error("pencil dimension {0} != 2")]
    PencilDimension(usize),

    #[error("resultant identically zero: the pencil has a common component")]
    ResultantZero,

    #[error("non-reduced base locus")]
    NonReducedBaseLocus,

    #[error("no suitable coordinate change found after {0} attempts")]
    CoordinateSearchExhausted(usize),

    #[error("no elliptic normal curve: cubic system through the associated points is empty")]
    NoEllipticCurve,

    #[error("pencil: ninth point lies on the Weddle locus")]
    NinthPointOnWeddle,

    #[error("indeterminacy locus: point has two or more zero coordinates")]
    IndeterminacyLocus,

    #[error("letter s{letter} is out of range for m = {m}")]
    LetterOutOfRange { letter: usize, m: usize },

    #[error("cremona word failed at step {step} (s{letter}): {source}")]
    WordStep {
        step: usize,
        letter: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("subset {0:?} is not a valid index set: {1}")]
    BadSubset(Vec<usize>, String),

    #[error("arrangement row {0} is zero")]
    ZeroArrangementRow(usize),

    #[error("arrangement needs at least 8 rows (n >= 3), got {0}")]
    ArrangementTooSmall(usize),

    #[error("branch locus: coordinate {0} is zero")]
    BranchLocus(usize),

    #[error("point is not a member of the model")]
    NotMember,

    #[error("could not generate a general configuration after {0} attempts")]
    GenerationFailed(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json error: {0}")]
    Json(String),
}
