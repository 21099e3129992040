//! Rates and error exponents for LOCC distillation of EPR pairs between two
//! designated subsystems of a tripartite pure state.
//!
//! The crate provides:
//! - tripartite state handling, marginals and entropy functionals ([`state`]);
//! - closed-form bipartite rate/exponent curves and one-shot
//!   fidelity/probability conversions ([`rates`]);
//! - majorization predicates and ball-majorization queries ([`majorization`]);
//! - the exact strong-converse rate solver for free-support states
//!   ([`free_support`]);
//! - a constructive one-shot deterministic protocol built from sign-vector
//!   measurements ([`povm`]);
//! - two-sided truncation and the direct-exponent curve ([`truncation`]);
//! - exact small-`n` Schur-Weyl machinery and finite-`n` rate estimators
//!   ([`schur`]);
//! - JSON/CSV interchange formats ([`io`]).
//!
//! The numerical core is generic over the scalar type via [`scalar::Scalar`]
//! (`f32` or `f64`); the aliases below fix the common `f64` instantiation.

pub mod error;
pub mod free_support;
pub mod io;
pub mod linalg;
pub mod majorization;
pub mod opt;
pub mod povm;
pub mod rates;
pub mod scalar;
pub mod schur;
pub mod simplex;
pub mod state;
pub mod truncation;

pub use error::{Error, Result};

/// `f64` instantiations of the main domain types.
pub type State64 = state::PureTripartiteState<f64>;
pub type Spectrum64 = state::MarginalSpectrum<f64>;
pub type RateCurve64 = rates::RateCurve<f64>;


