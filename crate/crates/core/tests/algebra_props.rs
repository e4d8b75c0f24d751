mod common;

use common::{algebra_element, monomial};
use proptest::prelude::*;
use qtorus_core::bundle::{act_word, BasePoint, LineBundlePoint, Sort};
use qtorus_core::qalgebra::{normalize_word, AlgebraElement, Generator, Word};
use qtorus_core::Scalar;

fn power(g: Generator, n: i64) -> Word {
    let g = if n < 0 { g.inverse() } else { g };
    Word::new(vec![g; n.unsigned_abs() as usize])
}

#[test]
fn commuted_powers() {
    for a in -5..=5 {
        for b in -5..=5 {
            let w = power(Generator::V, b).concat(&power(Generator::U, a));
            let m = normalize_word(&w);
            assert_eq!((m.a, m.b), (a, b));
            assert_eq!(m.coeff, Scalar::q_pow(a * b), "V^{b} U^{a}");
        }
    }
}

#[test]
fn normal_form_agrees_with_action_on_both_sorts() {
    for sort in [Sort::U, Sort::V] {
        let base = BasePoint::indexed(0, sort);
        for len in 0..=6 {
            for w in Word::all_of_length(len) {
                let m = normalize_word(&w);
                let expect = act_word(&w, &LineBundlePoint::basis(0, base));
                let via_normal = act_word(
                    &power(Generator::U, m.a).concat(&power(Generator::V, m.b)),
                    &LineBundlePoint::basis(0, base),
                );
                assert_eq!(expect.k, via_normal.k, "{w}");
                assert_eq!(expect.x, &m.coeff * &via_normal.x, "{w}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associative(x in algebra_element(), y in algebra_element(), z in algebra_element()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn distributive(x in algebra_element(), y in algebra_element(), z in algebra_element()) {
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn scalars_are_central(c in monomial(), x in algebra_element()) {
        let s = AlgebraElement::scalar(c.clone());
        prop_assert_eq!(s.mul(&x), x.mul(&s));
        prop_assert_eq!(s.mul(&x), x.scale(&c));
    }

    #[test]
    fn word_product_is_concatenation(a in 0usize..5, b in 0usize..5, seed in any::<u64>()) {
        let pick = |i: usize, n: usize| -> Word {
            Word::new((0..n).map(|j| Generator::ALL[((seed >> ((i * 5 + j) % 60)) & 3) as usize]).collect::<Vec<_>>())
        };
        let (w1, w2) = (pick(0, a), pick(1, b));
        let lhs = AlgebraElement::from_word(&w1.concat(&w2));
        let rhs = AlgebraElement::from_word(&w1).mul(&AlgebraElement::from_word(&w2));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn not_commutative() {
    let u = AlgebraElement::generator(Generator::U);
    let v = AlgebraElement::generator(Generator::V);
    assert_ne!(u.mul(&v), v.mul(&u));
    assert_eq!(v.mul(&u), u.mul(&v).scale(&Scalar::q()));
}
