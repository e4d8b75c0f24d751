//! The ring of integers interpreted in Gamma: `q^r` stands for `r`, addition
//! is the group law of Gamma and multiplication is read off the pairing of
//! label-shifted points.

use std::fmt;

use serde::Serialize;

use crate::bundle::{BasePoint, GammaBundlePoint, Sort};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::pairing::{self, PairingValue};
use crate::report::{run_check, Report};

/// The element `q^n` of Gamma.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct GammaInt(pub i64);

impl GammaInt {
    pub fn to_scalar(self) -> Scalar {
        Scalar::q_pow(self.0)
    }

    pub fn from_scalar(x: &Scalar) -> Result<Self> {
        x.is_gamma_power()
            .map(GammaInt)
            .ok_or_else(|| Error::Domain(format!("{x} is not a power of q")))
    }

    pub fn decode(self) -> i64 {
        self.0
    }
}

impl fmt::Display for GammaInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{}", self.0)
    }
}

/// Addition: `q^a (+) q^b = q^a q^b`, computed in the field.
pub fn gamma_add(a: GammaInt, b: GammaInt) -> GammaInt {
    GammaInt::from_scalar(&(&a.to_scalar() * &b.to_scalar())).expect("Gamma is closed under products")
}

/// A base pair `(u, v)` with `<u(u, v) | v(v, u)> = 1`, fixed for
/// multiplication.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Interpretation {
    u: BasePoint,
    v: BasePoint,
}

impl Interpretation {
    pub fn new(u: BasePoint, v: BasePoint) -> Result<Self> {
        if u.sort != Sort::U || v.sort != Sort::V {
            return Err(Error::Config("need a U-sort and a V-sort base point".into()));
        }
        let a = GammaBundlePoint::new(0, 0, u);
        let b = GammaBundlePoint::new(0, 0, v);
        match pairing::pair(&a, &b) {
            Ok(PairingValue(0)) => Ok(Interpretation { u, v }),
            Ok(p) => Err(Error::Config(format!("base pairing is {p}, not 1"))),
            Err(e) => Err(Error::Config(format!("no base pair: {e}"))),
        }
    }

    pub fn standard() -> Self {
        Self::new(BasePoint::indexed(0, Sort::U), BasePoint::indexed(0, Sort::V)).expect("u0, v0 pair to 1")
    }

    /// `q^a (x) q^b = <u(q^a u, v) | v(q^b v, u)>`.
    pub fn mul(&self, a: GammaInt, b: GammaInt) -> GammaInt {
        let x = GammaBundlePoint::new(0, a.0, self.u);
        let y = GammaBundlePoint::new(0, b.0, self.v);
        let p = pairing::pair(&x, &y).expect("validated base pair");
        GammaInt::from_scalar(&p.to_scalar()).expect("pairing values lie in Gamma")
    }
}

/// Interpretation over the standard base pair.
pub fn gamma_mul(a: GammaInt, b: GammaInt) -> GammaInt {
    Interpretation::standard().mul(a, b)
}

/// Ring axioms and the decoding isomorphism over all operands in
/// `[-bound, bound]`.
pub fn ring_suite(bound: i64) -> Result<Report> {
    if bound < 1 {
        return Err(Error::Config("window must be at least 1".into()));
    }
    let it = Interpretation::standard();
    let add = gamma_add;
    let mul = |a, b| it.mul(a, b);
    let zero = GammaInt(0);
    let one = GammaInt(1);
    let range = || (-bound..=bound).map(GammaInt);
    let pairs = || range().flat_map(move |a| range().map(move |b| (a, b)));
    let triples = || range().flat_map(move |a| pairs().map(move |(b, c)| (a, b, c)));

    let mut r = Report::new(format!("ring suite, window {bound}"));
    r.push(run_check("add commutative", pairs(), |(a, b)| {
        (add(a, b) == add(b, a)).then_some(()).ok_or(format!("{a} + {b}"))
    }));
    r.push(run_check("mul commutative", pairs(), |(a, b)| {
        (mul(a, b) == mul(b, a)).then_some(()).ok_or(format!("{a} * {b}"))
    }));
    r.push(run_check("add associative", triples(), |(a, b, c)| {
        (add(add(a, b), c) == add(a, add(b, c)))
            .then_some(())
            .ok_or(format!("({a} + {b}) + {c}"))
    }));
    r.push(run_check("mul associative", triples(), |(a, b, c)| {
        (mul(mul(a, b), c) == mul(a, mul(b, c)))
            .then_some(())
            .ok_or(format!("({a} * {b}) * {c}"))
    }));
    r.push(run_check("distributive", triples(), |(a, b, c)| {
        (mul(a, add(b, c)) == add(mul(a, b), mul(a, c)))
            .then_some(())
            .ok_or(format!("{a} * ({b} + {c})"))
    }));
    r.push(run_check("identities", range(), |a| {
        let ok = add(zero, a) == a && mul(one, a) == a && mul(zero, a) == zero;
        ok.then_some(()).ok_or(format!("{a}"))
    }));
    r.push(run_check("additive inverses", range(), |a| {
        (add(a, GammaInt(-a.0)) == zero).then_some(()).ok_or(format!("{a}"))
    }));
    r.push(run_check("decode is a ring map", pairs(), |(a, b)| {
        let ok = add(a, b).decode() == a.decode() + b.decode() && mul(a, b).decode() == a.decode() * b.decode();
        ok.then_some(()).ok_or(format!("{a}, {b}"))
    }));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_examples() {
        assert_eq!(gamma_add(GammaInt(2), GammaInt(3)), GammaInt(5));
        assert_eq!(gamma_add(GammaInt(0), GammaInt(-7)), GammaInt(-7));
        assert_eq!(gamma_add(GammaInt(-4), GammaInt(4)), GammaInt(0));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(gamma_mul(GammaInt(2), GammaInt(3)), GammaInt(6));
        assert_eq!(gamma_mul(GammaInt(0), GammaInt(9)), GammaInt(0));
        assert_eq!(gamma_mul(GammaInt(1), GammaInt(-9)), GammaInt(-9));
        assert_eq!(gamma_mul(GammaInt(3), GammaInt(5)), GammaInt(15));
        assert_eq!(gamma_mul(GammaInt(5), GammaInt(3)), GammaInt(15));
    }

    #[test]
    fn distributivity_witness() {
        let lhs = gamma_mul(GammaInt(2), gamma_add(GammaInt(3), GammaInt(4)));
        let rhs = gamma_add(gamma_mul(GammaInt(2), GammaInt(3)), gamma_mul(GammaInt(2), GammaInt(4)));
        assert_eq!(lhs, GammaInt(14));
        assert_eq!(rhs, GammaInt(14));
    }

    #[test]
    fn mismatched_base_is_config_error() {
        let r = Interpretation::new(BasePoint::indexed(0, Sort::U), BasePoint::indexed(1, Sort::V));
        assert!(matches!(r, Err(Error::Config(_))));
    }

    #[test]
    fn suite_small() {
        assert!(ring_suite(4).unwrap().passed());
    }
}
