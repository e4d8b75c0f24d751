//! Exact symbolic workbench for the quantum 2-torus over a field with a
//! distinguished element `q` of infinite order.
//!
//! The field is modelled as Q(q, u0, v0, ...) with every symbol an
//! independent indeterminate. On top of it sit the algebra A_q
//! (`VU = qUV`), the Gamma- and line-bundles with their operator actions,
//! the Gamma-valued pairing, the change-of-representatives isomorphism, the
//! interpretation of integer arithmetic in Gamma, and windowed evidence for
//! the Lang-type coset property.

pub mod arithmetic;
pub mod bundle;
pub mod error;
pub mod field;
pub mod langtype;
mod lattice;
pub mod pairing;
pub mod qalgebra;
pub mod report;
pub mod torus;

pub use error::{Error, Result};
pub use field::{Scalar, Symbol};
