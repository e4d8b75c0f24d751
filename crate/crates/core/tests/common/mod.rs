#![allow(dead_code)]

use proptest::prelude::*;
use qtorus_core::bundle::{BasePoint, ModuleVector, Sort};
use qtorus_core::field::Symbol;
use qtorus_core::qalgebra::AlgebraElement;
use qtorus_core::Scalar;

pub fn u0() -> Symbol {
    Symbol::intern("u0")
}

pub fn v0() -> Symbol {
    Symbol::intern("v0")
}

prop_compose! {
    pub fn monomial()(c in -3i64..=3, a in -2i64..=2, b in -1i64..=1, d in -1i64..=1) -> Scalar {
        let c = if c == 0 { 1 } else { c };
        Scalar::monomial(c, &[(Symbol::Q, a), (u0(), b), (v0(), d)])
    }
}

pub fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(monomial(), 1..=3).prop_map(|ms| ms.into_iter().sum())
}

/// Elements of the field, including genuine fractions and zero.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent(), any::<bool>()).prop_map(|(n, d, frac)| {
        if frac && !d.is_zero() {
            n.checked_div(&d).unwrap()
        } else {
            n
        }
    })
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

pub fn algebra_element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((monomial(), -3i64..=3, -3i64..=3), 1..=3).prop_map(|ts| {
        ts.into_iter().fold(AlgebraElement::zero(), |acc, (c, a, b)| {
            acc.add(&AlgebraElement::monomial(c, a, b))
        })
    })
}

pub fn module_vector(sort: Sort) -> impl Strategy<Value = ModuleVector> {
    let base = BasePoint::indexed(0, sort);
    prop::collection::vec((monomial(), -4i64..=4), 1..=5).prop_map(move |ts| {
        let mut m = ModuleVector::zero(base);
        for (c, k) in ts {
            m.add_term(k, c);
        }
        m
    })
}
