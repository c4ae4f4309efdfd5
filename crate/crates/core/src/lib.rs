//! Exact projective geometry over the rationals.
//!
//! Everything in this crate computes with arbitrary-precision rational
//! numbers; there are no floating-point code paths and no tolerance
//! parameters. The main pipelines are:
//!
//! * [`gale`] — association (Gale duality) of point configurations and the
//!   self-association test,
//! * [`linsys`] — linear systems of hypersurfaces with multiplicity and
//!   tangency base conditions, the ninth base point of a cubic pencil, and
//!   the Weddle membership test,
//! * [`weyl`] — the Coxeter group action on the Picard lattice of blown-up
//!   projective space,
//! * [`cremona`] — the same group acting birationally on point
//!   configurations by standard Cremona transformations,
//! * [`quadric`] — diagonal quadric models of certain covers of `P^4`.
//!
//! The substrate ([`matrix`], [`poly`], [`unipoly`], [`projective`]) is
//! deliberately small and deterministic: reduced row echelon form picks the
//! leftmost pivot column and the first nonzero row, nullspace bases come
//! from the RREF free columns, and projective points are stored as
//! primitive integer vectors with positive leading coordinate. Determinism
//! matters because downstream results (association certificates, suite
//! reports) are compared bit-for-bit.

pub mod cremona;
pub mod error;
pub mod gale;
pub mod gen;
pub mod json;
pub mod linsys;
pub mod matrix;
pub mod poly;
pub mod projective;
pub mod quadric;
pub mod rational;
pub mod unipoly;
pub mod weyl;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
