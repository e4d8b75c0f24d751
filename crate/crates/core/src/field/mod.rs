//! Exact arithmetic in the rational-function field Q(q, s1, s2, ...).
//!
//! `q` and every base coordinate are independent indeterminates, so `q` is
//! transcendental and in particular not a root of unity. Any identity that
//! holds here holds for every field and every `q` of infinite order.

mod poly;
mod scalar;
mod symbol;

pub use poly::{Exponents, LaurentPoly};
pub use scalar::Scalar;
pub use symbol::Symbol;

use crate::error::Result;

pub fn scalar_add(a: &Scalar, b: &Scalar) -> Scalar {
    a + b
}

pub fn scalar_mul(a: &Scalar, b: &Scalar) -> Scalar {
    a * b
}

pub fn scalar_inv(a: &Scalar) -> Result<Scalar> {
    a.inv()
}

pub fn scalar_eq(a: &Scalar, b: &Scalar) -> bool {
    a == b
}

pub fn is_gamma_power(a: &Scalar) -> Option<i64> {
    a.is_gamma_power()
}
