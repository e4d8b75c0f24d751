//! The Gamma-valued pairing between opposite-sort bundle points over a
//! common base, in closed form:
//!
//! ```text
//! < q^s v(q^m v, u) | q^r u(q^k u, v) > = q^(r - s - k m)
//! < q^r u(q^k u, v) | q^s v(q^m v, u) > = q^(k m + s - r)
//! ```

use std::fmt;

use crate::bundle::{act_word, BasePoint, GammaBundlePoint, LineBundlePoint, Sort};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::qalgebra::{Generator, Word};
use crate::report::{run_check, Report};

/// An element `q^n` of Gamma, stored by its exponent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PairingValue(pub i64);

impl PairingValue {
    pub fn exponent(self) -> i64 {
        self.0
    }

    pub fn to_scalar(self) -> Scalar {
        Scalar::q_pow(self.0)
    }
}

impl fmt::Display for PairingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{}", self.0)
    }
}

/// Witness text for a pairing result.
pub(crate) fn show(r: &Result<PairingValue>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => e.to_string(),
    }
}

fn check_pairable(a: &BasePoint, b: &BasePoint) -> Result<()> {
    if a.sort == b.sort {
        return Err(Error::Sort(format!("pairing needs opposite sorts, got {} and {}", a.sort, b.sort)));
    }
    if !a.same_pair(b) {
        return Err(Error::PairingUndefined);
    }
    Ok(())
}

pub fn pair(a: &GammaBundlePoint, b: &GammaBundlePoint) -> Result<PairingValue> {
    check_pairable(&a.base, &b.base)?;
    let n = match a.base.sort {
        // U-first: a = q^r u(q^k u, v), b = q^s v(q^m v, u)
        Sort::U => a.k * b.k + b.c - a.c,
        // V-first: a = q^s v(q^m v, u), b = q^r u(q^k u, v)
        Sort::V => b.c - a.c - b.k * a.k,
    };
    Ok(PairingValue(n))
}

/// Extension of the pairing to line-bundle points by homogeneity over all of
/// F*: `<x a | y b> = x^-1 y <a | b>` in U-first order (and the inverse in
/// V-first order). Only used to check the unitarity postulate, where
/// `U^r V^s` produces scalars outside Gamma.
pub(crate) fn extended_pair_with<P>(pairing: P, a: &LineBundlePoint, b: &LineBundlePoint) -> Result<Scalar>
where
    P: Fn(&GammaBundlePoint, &GammaBundlePoint) -> Result<PairingValue>,
{
    let ga = GammaBundlePoint::new(0, a.k, a.base);
    let gb = GammaBundlePoint::new(0, b.k, b.base);
    let base = pairing(&ga, &gb)?.to_scalar();
    let ratio = match a.base.sort {
        Sort::U => b.x.checked_div(&a.x)?,
        Sort::V => a.x.checked_div(&b.x)?,
    };
    Ok(&ratio * &base)
}

fn uv_word(r: i64, s: i64) -> Word {
    let mut letters = Vec::new();
    let u = if r < 0 { Generator::UInv } else { Generator::U };
    let v = if s < 0 { Generator::VInv } else { Generator::V };
    letters.extend(std::iter::repeat_n(u, r.unsigned_abs() as usize));
    letters.extend(std::iter::repeat_n(v, s.unsigned_abs() as usize));
    Word::new(letters)
}

fn tuples(bound: i64) -> impl Iterator<Item = (i64, i64, i64, i64)> {
    let r = move || -bound..=bound;
    r().flat_map(move |a| r().flat_map(move |b| r().flat_map(move |c| r().map(move |d| (a, b, c, d)))))
}

/// Runs the five pairing postulates against arbitrary interpretations of
/// the pairing and the operator action.
pub(crate) fn check_axioms_with<P, A>(bound: i64, pairing: P, action: A) -> Report
where
    P: Fn(&GammaBundlePoint, &GammaBundlePoint) -> Result<PairingValue> + Copy,
    A: Fn(&Word, &LineBundlePoint) -> LineBundlePoint,
{
    let mut report = Report::new(format!("pairing postulates, window {bound}"));
    let bases: Vec<(BasePoint, BasePoint)> = (0..3)
        .map(|i| (BasePoint::indexed(i, Sort::U), BasePoint::indexed(i, Sort::V)))
        .collect();
    let (bu, bv) = bases[0];

    report.push(run_check("axiom-1 base normalization", bases.iter(), |(bu, bv)| {
        let a = GammaBundlePoint::new(0, 0, *bu);
        let b = GammaBundlePoint::new(0, 0, *bv);
        match (pairing(&a, &b), pairing(&b, &a)) {
            (Ok(PairingValue(0)), Ok(PairingValue(0))) => Ok(()),
            (x, y) => Err(format!("<{a} | {b}> = {}, reversed {}", show(&x), show(&y))),
        }
    }));

    report.push(run_check("axiom-2 unitarity of U^r V^s", pairs(bound), |(r, s)| {
        let w = uv_word(r, s);
        let a = action(&w, &LineBundlePoint::basis(0, bu));
        let b = action(&w, &LineBundlePoint::basis(0, bv));
        match extended_pair_with(pairing, &a, &b) {
            Ok(v) if v.is_one() => Ok(()),
            Ok(v) => Err(format!("r={r} s={s}: <{a} | {b}> = {v}")),
            Err(e) => Err(format!("r={r} s={s}: {e}")),
        }
    }));

    report.push(run_check("axiom-3 inverse symmetry", tuples(bound), |(r, k, s, m)| {
        let a = GammaBundlePoint::new(r, k, bu);
        let b = GammaBundlePoint::new(s, m, bv);
        match (pairing(&a, &b), pairing(&b, &a)) {
            (Ok(x), Ok(y)) if x.0 + y.0 == 0 => Ok(()),
            (x, y) => Err(format!("<{a} | {b}> = {}, <{b} | {a}> = {}", show(&x), show(&y))),
        }
    }));

    report.push(run_check("axiom-4 gamma homogeneity", tuples(bound), |(r, k, s, m)| {
        let a = GammaBundlePoint::new(r, k, bu);
        let b = GammaBundlePoint::new(s, m, bv);
        let bare = pairing(&GammaBundlePoint::new(0, k, bu), &GammaBundlePoint::new(0, m, bv));
        match (pairing(&a, &b), bare) {
            (Ok(x), Ok(y)) if x.0 == s - r + y.0 => Ok(()),
            (x, y) => Err(format!("<{a} | {b}> = {}, expected q^({s} - {r}) * {}", show(&x), show(&y))),
        }
    }));

    let mismatched: Vec<(BasePoint, BasePoint)> = bases
        .iter()
        .flat_map(|(u, _)| bases.iter().map(move |(_, v)| (*u, *v)))
        .filter(|(u, v)| !u.same_pair(v))
        .collect();
    report.push(run_check("axiom-5 undefined across bases", mismatched, |(u, v)| {
        let a = GammaBundlePoint::new(0, 0, u);
        let b = GammaBundlePoint::new(0, 0, v);
        match (pairing(&a, &b), pairing(&b, &a)) {
            (Err(Error::PairingUndefined), Err(Error::PairingUndefined)) => Ok(()),
            (x, y) => Err(format!("<{a} | {b}> = {}, reversed {}", show(&x), show(&y))),
        }
    }));

    report
}

fn pairs(bound: i64) -> impl Iterator<Item = (i64, i64)> {
    (-bound..=bound).flat_map(move |r| (-bound..=bound).map(move |s| (r, s)))
}

/// Checks that the closed form satisfies the pairing postulates on every
/// exponent tuple in `[-bound, bound]`.
pub fn check_pairing_axioms(bound: i64) -> Report {
    check_axioms_with(bound, pair, act_word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bu(i: usize) -> BasePoint {
        BasePoint::indexed(i, Sort::U)
    }

    fn bv(i: usize) -> BasePoint {
        BasePoint::indexed(i, Sort::V)
    }

    #[test]
    fn pair_examples() {
        let v = GammaBundlePoint::new(0, 0, bv(0));
        let u = GammaBundlePoint::new(0, 0, bu(0));
        assert_eq!(pair(&v, &u).unwrap(), PairingValue(0));

        let u2 = GammaBundlePoint::new(0, 2, bu(0));
        let v3 = GammaBundlePoint::new(0, 3, bv(0));
        assert_eq!(pair(&u2, &v3).unwrap(), PairingValue(6));

        let qv = GammaBundlePoint::new(1, 0, bv(0));
        assert_eq!(pair(&qv, &u).unwrap(), PairingValue(-1));

        let v1 = GammaBundlePoint::new(0, 0, bv(1));
        assert_eq!(pair(&v1, &u), Err(Error::PairingUndefined));
        assert!(matches!(pair(&u, &u), Err(Error::Sort(_))));
    }

    #[test]
    fn axioms_pass() {
        let report = check_pairing_axioms(5);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 5);
    }

    #[test]
    fn axiom2_single_instance() {
        let w = uv_word(1, 1);
        let a = act_word(&w, &LineBundlePoint::basis(0, bu(0)));
        let b = act_word(&w, &LineBundlePoint::basis(0, bv(0)));
        assert!(extended_pair_with(pair, &a, &b).unwrap().is_one());
    }

    #[test]
    fn label_shift_law() {
        for k in -8..=8 {
            for m in -8..=8 {
                let u = GammaBundlePoint::new(0, k, bu(0));
                let v = GammaBundlePoint::new(0, m, bv(0));
                assert_eq!(pair(&u, &v).unwrap().0, k * m);
            }
        }
    }

    #[test]
    fn homogeneity_literal() {
        let u = GammaBundlePoint::new(2, 3, bu(0));
        let v = GammaBundlePoint::new(-1, 4, bv(0));
        let u_up = GammaBundlePoint::new(3, 3, bu(0));
        assert_eq!(pair(&u_up, &v).unwrap().0, pair(&u, &v).unwrap().0 - 1);
        assert_eq!(pair(&v, &u_up).unwrap().0, pair(&v, &u).unwrap().0 + 1);
    }

    #[test]
    fn broken_pairing_is_caught() {
        let bad = |a: &GammaBundlePoint, b: &GammaBundlePoint| pair(a, b).map(|v| PairingValue(v.0 + 1));
        let report = check_axioms_with(2, bad, act_word);
        assert!(!report.passed());
    }
}
