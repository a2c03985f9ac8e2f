//! Exact computation of Blanchfield pairings.
//!
//! The pairing on the Alexander module of a knot or fibred 3-manifold is
//! built from integer matrix data and evaluated exactly in `Q(t)/Λ`,
//! `Λ = Z[t, t^-1]`:
//!
//! * [`PresentedPairing::from_seifert`]: module `Λ^2g / (tA - A^T)`, pairing
//!   `v^T (t - 1)(A - tA^T)^-1 conj(w)`;
//! * [`PresentedPairing::from_fibred`]: module `Λ^k / (tP - id)`, pairing
//!   `v^T J (t^-1 P - id)^-1 conj(w)`;
//! * [`DualSurfaceEvaluator`]: the closed form on the image of a dual
//!   surface, `-((I+ - t^-1 I-)^-1 I+ v)^T J conj(w)`;
//! * [`MKForm`]: the hermitian matrix `M_K(t)` that is at once presentation
//!   and (inverted) pairing matrix.
//!
//! Module elements are compared with [`PresentedPairing::element_equal`];
//! pairing values are canonical [`QModLambda`] classes with decidable
//! equality.

mod catalog;
mod data;
mod error;
mod invariants;
mod laurent;
mod matrix;
mod mk;
mod pairing;
mod poly;
mod qmod;
mod ratfunc;
mod ring;
mod symplectic;

pub mod random;
pub mod verify;

pub use catalog::{builtin_catalog, load_entry, lookup_builtin, CatalogEntry, EntryData, EntryKind};
pub use data::{DualSurfaceData, FibredData, SeifertData, Stabilization};
pub use error::{Error, Result};
pub use invariants::{
    alexander_polynomial, check_circle_point, evaluate_matrix, hermitian_signature, levine_tristram_signature,
    mk_signature, normalize_alexander, signature_profile, ProfilePoint, UNIT_CIRCLE_TOLERANCE, ZERO_THRESHOLD,
};
pub use laurent::LaurentPoly;
pub use matrix::{conjugate_vec, IntMatrix, Matrix};
pub use mk::MKForm;
pub use pairing::{
    basis_vector, kearton_value, kearton_witness, DualSurfaceEvaluator, FormMatrix, LambdaVector, PairingSource,
    PairingValue, PresentedPairing,
};
pub use qmod::QModLambda;
pub use ratfunc::RationalFunction;
pub use ring::{ExactDiv, Field, Ring};
pub use symplectic::symplectic_normalize;

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
