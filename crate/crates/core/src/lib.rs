//! Exact symmetric and nonsymmetric Jack polynomials over Q(α).
//!
//! Coefficients live in the field of rational functions in a formal parameter
//! `α` ([`field::AlphaFrac`]). On top of that sit sparse polynomials, truncated
//! kernel series, composition combinatorics, Cherednik operators, the Jack
//! families themselves, the two combinatorial scalar products, and the exact
//! verification sweeps in [`verify`].
//!
//! With the default `parallel` feature the sweeps spread work over a rayon pool;
//! without it, or with [`par::Parallelism::Sequential`], everything runs on the
//! calling thread and produces identical results.

pub mod compositions;
pub mod field;
pub mod jack;
pub mod linalg;
pub mod operators;
pub mod pairing;
pub mod par;
pub mod poly;
pub mod series;
pub mod verify;

pub use compositions::{Composition, Partition, Permutation};
pub use field::{AlphaFrac, AlphaPoly};
pub use jack::JackFamily;
pub use pairing::DualBasis;
pub use par::Parallelism;
pub use poly::{ExponentVector, SparsePoly};
pub use series::TruncatedBiSeries;
pub use verify::{Report, Suite};

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] field::FieldError),
    #[error(transparent)]
    Poly(#[from] poly::PolyError),
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Composition(#[from] compositions::CompositionError),
    #[error(transparent)]
    Operator(#[from] operators::OperatorError),
    #[error(transparent)]
    LinAlg(#[from] linalg::LinAlgError),
    #[error(transparent)]
    Jack(#[from] jack::JackError),
    #[error(transparent)]
    Pairing(#[from] pairing::PairingError),
    #[error(transparent)]
    Verify(#[from] verify::VerifyError),
}
