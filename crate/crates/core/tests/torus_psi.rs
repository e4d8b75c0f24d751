use qtorus_core::torus::{check_psi, transfer_u, transfer_v, verify_transfer, Mutation, TorusStructure, TransferMap};
use qtorus_core::Scalar;

#[test]
fn default_structure_passes_with_one_skip() {
    let r = check_psi(&TorusStructure::standard(6).unwrap());
    assert!(r.passed(), "{r}");
    assert_eq!(r.checks.iter().filter(|c| c.is_skip()).count(), 1);
    assert!(r.get("clause-1 algebraically closed").unwrap().is_skip());
    for clause in 1..=8 {
        assert!(r.get(&format!("clause-{clause} ")).is_some(), "clause {clause} missing");
    }
}

#[test]
fn passing_is_monotone_in_the_window() {
    let t = TorusStructure::standard(6).unwrap();
    for w in 1..=6 {
        assert!(check_psi(&t.with_window(w).unwrap()).passed(), "window {w}");
    }
}

#[test]
fn every_mutation_fails_exactly_where_expected() {
    let base = TorusStructure::standard(4).unwrap();
    for m in Mutation::ALL {
        let r = check_psi(&base.clone().with_mutation(m));
        assert!(!r.passed(), "{m}");
        let named = format!("clause-{} ", m.clause());
        assert!(r.failures().any(|c| c.name.starts_with(&named)), "{m}\n{r}");
    }
}

#[test]
fn q_replaced_by_one() {
    let r = check_psi(&TorusStructure::standard(6).unwrap().with_q(Scalar::one()));
    assert!(r.get("clause-2").unwrap().is_fail());
}

#[test]
fn transfer_grid() {
    for s in -4..=4 {
        for t in -4..=4 {
            let r = verify_transfer(TransferMap::new(s, t), 6);
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn transfer_labels_are_shifts() {
    for s in -4..=4 {
        for t in -4..=4 {
            for k in -6..=6 {
                let m = TransferMap::new(s, t);
                assert_eq!(transfer_u(m, k).1, k + s);
                assert_eq!(transfer_v(m, k).1, k + t);
            }
        }
    }
}

#[test]
fn invalid_window() {
    assert!(TorusStructure::standard(0).is_err());
}
