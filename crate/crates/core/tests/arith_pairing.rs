use qtorus_core::arithmetic::{gamma_add, gamma_mul, ring_suite, GammaInt, Interpretation};
use qtorus_core::bundle::{BasePoint, GammaBundlePoint, Sort};
use qtorus_core::pairing::{check_pairing_axioms, pair, PairingValue};
use qtorus_core::{Error, Scalar};

#[test]
fn ring_suite_at_twenty() {
    let r = ring_suite(20).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.get("mul commutative").unwrap().cases, 41 * 41);
}

#[test]
fn mul_through_pairing_matches_closed_form() {
    for a in -20..=20 {
        for b in -20..=20 {
            assert_eq!(gamma_mul(GammaInt(a), GammaInt(b)), GammaInt(a * b));
            assert_eq!(gamma_add(GammaInt(a), GammaInt(b)), GammaInt(a + b));
        }
    }
}

#[test]
fn other_base_pairs_interpret_the_same_ring() {
    let it = Interpretation::new(BasePoint::indexed(2, Sort::U), BasePoint::indexed(2, Sort::V)).unwrap();
    assert_eq!(it.mul(GammaInt(-3), GammaInt(7)), GammaInt(-21));
}

#[test]
fn gamma_int_rejects_non_powers() {
    assert!(GammaInt::from_scalar(&Scalar::integer(2)).is_err());
    assert_eq!(GammaInt::from_scalar(&Scalar::q_pow(-4)).unwrap(), GammaInt(-4));
}

#[test]
fn pairing_closed_forms() {
    let bu = BasePoint::indexed(0, Sort::U);
    let bv = BasePoint::indexed(0, Sort::V);
    for r in -8..=8 {
        for s in -8..=8 {
            let u = GammaBundlePoint::new(0, r, bu);
            let v = GammaBundlePoint::new(0, s, bv);
            assert_eq!(pair(&u, &v).unwrap(), PairingValue(r * s));
            assert_eq!(pair(&v, &u).unwrap(), PairingValue(-r * s));
        }
    }
}

#[test]
fn pairing_axioms_at_eight() {
    let r = check_pairing_axioms(8);
    assert!(r.passed(), "{r}");
    assert_eq!(r.get("axiom-3").unwrap().cases, 17usize.pow(4));
}

#[test]
fn pairing_across_bases_is_undefined() {
    for i in 0..10 {
        for j in 0..10 {
            if i == j {
                continue;
            }
            let u = GammaBundlePoint::new(i as i64, j as i64, BasePoint::indexed(i, Sort::U));
            let v = GammaBundlePoint::new(0, 0, BasePoint::indexed(j, Sort::V));
            assert_eq!(pair(&u, &v), Err(Error::PairingUndefined));
            assert_eq!(pair(&v, &u), Err(Error::PairingUndefined));
        }
    }
    assert_eq!(Error::PairingUndefined.to_string(), "pairing undefined: bases differ");
}
