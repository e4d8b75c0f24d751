//! Gamma-points of hypersurfaces `f(x1, ..., xn) = 0` in a box of exponents,
//! their decomposition into cosets of subgroups of Gamma^n, and the coset
//! bound `N_f`.
//!
//! Everything here is relative to the window: a coset found in `[-B, B]^n`
//! is a hypothesis about the infinite solution set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Exponents, LaurentPoly, Scalar, Symbol};
use crate::lattice::Lattice;
use crate::report::{run_check, Check, Report};

/// The variable `x_i` (1-based).
pub fn variable(i: usize) -> Symbol {
    Symbol::intern(&format!("x{i}"))
}

/// A polynomial in `x1..xn` with coefficients in the field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    arity: usize,
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl IntPoly {
    pub fn new(arity: usize, terms: impl IntoIterator<Item = (Vec<i64>, Scalar)>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Domain("arity must be at least 1".into()));
        }
        let mut map: BTreeMap<Vec<i64>, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if m.len() != arity {
                return Err(Error::Domain(format!("multi-index {m:?} does not have arity {arity}")));
            }
            if m.iter().any(|&e| e < 0) {
                return Err(Error::Domain(format!("negative exponent in {m:?}")));
            }
            let sum = map.get(&m).map_or_else(|| c.clone(), |old| old + &c);
            if sum.is_zero() {
                map.remove(&m);
            } else {
                map.insert(m, sum);
            }
        }
        Ok(IntPoly { arity, terms: map })
    }

    /// Reads a field element as a polynomial in `x1..x{arity}`. The
    /// denominator may not involve the variables.
    pub fn from_scalar(s: &Scalar, arity: usize) -> Result<Self> {
        let vars: Vec<Symbol> = (1..=arity).map(variable).collect();
        for sym in s.symbols() {
            let name = sym.name();
            let is_var = name.strip_prefix('x').is_some_and(|d| d.parse::<usize>().is_ok());
            if is_var && !vars.contains(&sym) {
                return Err(Error::Domain(format!("{name} exceeds arity {arity}")));
            }
        }
        if s.denom().symbols().iter().any(|sym| vars.contains(sym)) {
            return Err(Error::Domain(format!("{s} is not polynomial in the variables")));
        }
        let den = Scalar::from_poly(s.denom().clone());
        let mut grouped: BTreeMap<Vec<i64>, LaurentPoly> = BTreeMap::new();
        for (e, c) in s.numer().terms() {
            let m: Vec<i64> = vars.iter().map(|v| e.get(*v)).collect();
            let rest = vars.iter().fold(e.clone(), |acc, v| acc.without(*v));
            let entry = grouped.entry(m).or_insert_with(LaurentPoly::zero);
            *entry = entry.add(&LaurentPoly::term(c.clone(), rest));
        }
        let terms = grouped
            .into_iter()
            .map(|(m, p)| Ok((m, Scalar::from_poly(p).checked_div(&den)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(arity, terms)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn to_scalar(&self) -> Scalar {
        self.terms
            .iter()
            .map(|(m, c)| {
                let e = m
                    .iter()
                    .enumerate()
                    .fold(Exponents::one(), |acc, (i, &d)| acc.add(&Exponents::single(variable(i + 1), d)));
                c * &Scalar::from_poly(LaurentPoly::term(1.into(), e))
            })
            .sum()
    }

    /// `f(q^k1, ..., q^kn)`.
    pub fn eval_gamma(&self, k: &[i64]) -> Scalar {
        assert_eq!(k.len(), self.arity);
        self.terms
            .iter()
            .map(|(m, c)| {
                let e: i64 = m.iter().zip(k).map(|(a, b)| a * b).sum();
                c * &Scalar::q_pow(e)
            })
            .sum()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scalar())
    }
}

/// `deg(f) * sum_i M_i`, with `M_i` the total degree of the i-th monomial
/// and `deg(f)` the largest of them.
pub fn nf_bound(f: &IntPoly) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::Domain("the zero polynomial vanishes everywhere".into()));
    }
    let degrees: Vec<u64> = f.terms.keys().map(|m| m.iter().sum::<i64>() as u64).collect();
    let deg = degrees.iter().copied().max().unwrap_or(0);
    Ok(deg * degrees.iter().sum::<u64>())
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GammaPointSet {
    pub arity: usize,
    pub window: i64,
    /// Sorted lexicographically.
    pub points: Vec<Vec<i64>>,
}

impl GammaPointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, k: &[i64]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(k)).is_ok()
    }

    pub fn restrict(&self, window: i64) -> GammaPointSet {
        GammaPointSet {
            arity: self.arity,
            window,
            points: self
                .points
                .iter()
                .filter(|p| p.iter().all(|k| k.abs() <= window))
                .cloned()
                .collect(),
        }
    }
}

/// All integer vectors in `[-window, window]^n`, in lexicographic order.
pub(crate) fn box_points(n: usize, window: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * window + 1) as usize;
    let total = side.pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = (idx % side) as i64 - window;
            idx /= side;
        }
        v
    })
}

pub fn gamma_points(f: &IntPoly, window: i64) -> Result<GammaPointSet> {
    if f.is_zero() {
        return Err(Error::Domain("the zero polynomial vanishes everywhere".into()));
    }
    if window < 1 {
        return Err(Error::Config("window must be at least 1".into()));
    }
    let candidates: Vec<Vec<i64>> = box_points(f.arity, window).collect();
    let points: Vec<Vec<i64>> = candidates
        .into_par_iter()
        .filter(|k| f.eval_gamma(k).is_zero())
        .collect();
    Ok(GammaPointSet {
        arity: f.arity,
        window,
        points,
    })
}

/// `base + span_Z(generators)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Coset {
    pub base: Vec<i64>,
    pub generators: Vec<Vec<i64>>,
}

impl Coset {
    fn lattice(&self) -> Lattice {
        self.generators
            .iter()
            .fold(Lattice::zero(self.base.len()), |l, g| l.with_vector(g))
    }

    pub fn contains(&self, k: &[i64]) -> bool {
        let d: Vec<i64> = k.iter().zip(&self.base).map(|(a, b)| a - b).collect();
        self.lattice().contains(&d)
    }

    /// The points of the coset inside `[-window, window]^n`.
    pub fn expand(&self, window: i64) -> Vec<Vec<i64>> {
        let lattice = self.lattice();
        box_points(self.base.len(), window)
            .filter(|k| {
                let d: Vec<i64> = k.iter().zip(&self.base).map(|(a, b)| a - b).collect();
                lattice.contains(&d)
            })
            .collect()
    }
}

fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vec(&self.base))?;
        for g in &self.generators {
            write!(f, " + Z{}", fmt_vec(g))?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CosetDecomposition {
    pub window: i64,
    pub cosets: Vec<Coset>,
}

impl CosetDecomposition {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Union of the cosets inside the window, sorted.
    pub fn expand(&self) -> Vec<Vec<i64>> {
        let all: BTreeSet<Vec<i64>> = self.cosets.iter().flat_map(|c| c.expand(self.window)).collect();
        all.into_iter().collect()
    }
}

impl fmt::Display for CosetDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cosets.is_empty() {
            return write!(f, "(no cosets)");
        }
        let parts: Vec<String> = self.cosets.iter().map(Coset::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Whether `base + lattice`, cut to the window, lies inside `set`.
fn coset_inside(base: &[i64], lattice: &Lattice, set: &GammaPointSet) -> bool {
    box_points(set.arity, set.window).all(|k| {
        let d: Vec<i64> = k.iter().zip(base).map(|(a, b)| a - b).collect();
        !lattice.contains(&d) || set.contains(&k)
    })
}

/// Greedy decomposition: take the first uncovered point, grow a lattice of
/// differences to other solutions as long as the translated lattice stays
/// inside the solution set, emit it, repeat.
///
/// Differences longer than the window radius are ignored. Such a vector can
/// only be seen near opposite faces of the box, where it tends to connect
/// unrelated components.
pub fn coset_decompose(set: &GammaPointSet) -> CosetDecomposition {
    let mut covered: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut cosets = Vec::new();
    for p in &set.points {
        if covered.contains(p) {
            continue;
        }
        let mut diffs: Vec<Vec<i64>> = set
            .points
            .iter()
            .filter(|o| *o != p)
            .map(|o| o.iter().zip(p).map(|(a, b)| a - b).collect::<Vec<i64>>())
            .filter(|d| d.iter().all(|x| x.abs() <= set.window))
            .collect();
        diffs.sort_by_key(|d: &Vec<i64>| (d.iter().map(|x| x.abs()).sum::<i64>(), d.clone()));
        let mut lattice = Lattice::zero(set.arity);
        for d in &diffs {
            if lattice.contains(d) {
                continue;
            }
            let grown = lattice.with_vector(d);
            if coset_inside(p, &grown, set) {
                lattice = grown;
            }
        }
        let base = lattice.reduce(p);
        let coset = Coset {
            base,
            generators: lattice.basis().to_vec(),
        };
        covered.extend(coset.expand(set.window));
        cosets.push(coset);
    }
    CosetDecomposition {
        window: set.window,
        cosets,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LangCheck {
    pub nf: u64,
    pub points: GammaPointSet,
    pub decomposition: CosetDecomposition,
    pub report: Report,
}

/// Enumerates the Gamma-points of `f = 0` in the window, decomposes them and
/// compares the number of cosets with `N_f`.
pub fn lang_check(f: &IntPoly, window: i64) -> Result<LangCheck> {
    let nf = nf_bound(f)?;
    let points = gamma_points(f, window)?;
    let decomposition = coset_decompose(&points);
    let mut report = Report::new(format!("lang-type f = {f}, window {window}"));
    report.push(Check::pass("gamma points enumerated", points.len()));
    report.push(run_check("coset union equals solution set", [()], |_| {
        let union = decomposition.expand();
        if union == points.points {
            Ok(())
        } else {
            Err(format!("{} points in union, {} solutions", union.len(), points.len()))
        }
    }));
    let count = decomposition.len() as u64;
    let name = format!("coset count {count} <= N_f = {nf}");
    report.push(if count <= nf {
        Check::pass(name, 1)
    } else {
        Check::fail(name, 1, decomposition.to_string())
    });
    Ok(LangCheck {
        nf,
        points,
        decomposition,
        report,
    })
}
