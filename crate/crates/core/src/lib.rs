//! Exact computation of analogue Zhelobenko invariants for the adjoint
//! module of a simple Lie algebra, the BGG operator calculus they rest on,
//! and the principal-`sl₂` filtration of the Cartan subalgebra they are
//! compared against.
//!
//! The crate is `no_std` (it needs `alloc`) and purely functional: every
//! value is immutable after construction, so results can be shared freely
//! between threads by a caller that has them.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod exact;
pub mod filtration;
pub mod lie;
pub mod pbw;
pub mod root_system;
pub mod verifier;
pub mod weyl_calculus;
pub mod zhelobenko;

pub use error::{Error, Result};
pub use filtration::{principal_filtration, FiltrationFlag};
pub use lie::{LieAlgebra, Sl2Triple};
pub use root_system::{Basis, Family, LieType, RootSystem, Weight};
pub use verifier::{verify_kostant, VerificationReport};
pub use zhelobenko::{DenominatorScalar, PTuple, ZeroWeightElement};
