//! Gamma-bundles, line bundles and the operator actions of U, V and their
//! inverses on them.
//!
//! A U-sort point `x * u(q^k u, v)` is stored as `(x, k, base)`, a V-sort
//! point `x * v(q^k v, u)` likewise. The base coordinates `u`, `v` are free
//! symbols standing for the representatives chosen in F*/Gamma.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Exponents, Scalar, Symbol};
use crate::qalgebra::{coeff_factor, AlgebraElement, Generator, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Sort {
    U,
    V,
}

impl Sort {
    pub fn opposite(self) -> Sort {
        match self {
            Sort::U => Sort::V,
            Sort::V => Sort::U,
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::U => "U",
            Sort::V => "V",
        })
    }
}

/// A representative pair `(u, v)` together with the sort of bundle built
/// over it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BasePoint {
    pub u: Symbol,
    pub v: Symbol,
    pub sort: Sort,
}

impl BasePoint {
    pub fn new(u: Symbol, v: Symbol, sort: Sort) -> Result<Self> {
        if u == v {
            return Err(Error::Domain(format!("base coordinates must differ, got {u} twice")));
        }
        if u == Symbol::Q || v == Symbol::Q {
            return Err(Error::Domain("q cannot be a base coordinate".into()));
        }
        Ok(BasePoint { u, v, sort })
    }

    /// The pair `(u_i, v_i)` of the given sort.
    pub fn indexed(i: usize, sort: Sort) -> Self {
        Self::new(Symbol::intern(&format!("u{i}")), Symbol::intern(&format!("v{i}")), sort)
            .expect("u{i} and v{i} are distinct")
    }

    pub fn with_sort(self, sort: Sort) -> Self {
        BasePoint { sort, ..self }
    }

    pub fn same_pair(&self, other: &BasePoint) -> bool {
        self.u == other.u && self.v == other.v
    }

    /// The coordinate that carries the label shift for this sort.
    pub fn label_symbol(&self) -> Symbol {
        match self.sort {
            Sort::U => self.u,
            Sort::V => self.v,
        }
    }

    /// The coordinate that is only defined modulo Gamma for this sort.
    pub fn class_symbol(&self) -> Symbol {
        match self.sort {
            Sort::U => self.v,
            Sort::V => self.u,
        }
    }

    /// Text of the basis label `u[q^k*u0, v0]` / `v[q^k*v0, u0]`.
    pub fn label_text(&self, k: i64) -> String {
        let lead = Scalar::monomial(1, &[(Symbol::Q, k), (self.label_symbol(), 1)]);
        let head = match self.sort {
            Sort::U => 'u',
            Sort::V => 'v',
        };
        format!("{head}[{lead}, {}]", self.class_symbol())
    }
}

/// `q^c * u(q^k u, v)`: the 4-tuple reading of a Gamma-bundle point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GammaBundlePoint {
    pub c: i64,
    pub k: i64,
    pub base: BasePoint,
}

impl GammaBundlePoint {
    pub fn new(c: i64, k: i64, base: BasePoint) -> Self {
        GammaBundlePoint { c, k, base }
    }

    pub fn to_line(&self) -> LineBundlePoint {
        e_normalize(&Scalar::one(), self.c, self.k, self.base).expect("1 is nonzero")
    }
}

impl fmt::Display for GammaBundlePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}", Scalar::q_pow(self.c), self.base.label_text(self.k))
    }
}

/// Canonical representative of an E-class in `F* x Gamma-bundle`: the outer
/// Gamma factor is absorbed into `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LineBundlePoint {
    pub x: Scalar,
    pub k: i64,
    pub base: BasePoint,
}

impl LineBundlePoint {
    pub fn new(x: Scalar, k: i64, base: BasePoint) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::Domain("line-bundle scalar must be nonzero".into()));
        }
        Ok(LineBundlePoint { x, k, base })
    }

    pub fn basis(k: i64, base: BasePoint) -> Self {
        LineBundlePoint {
            x: Scalar::one(),
            k,
            base,
        }
    }

    /// The Gamma-bundle point this is, if `x` is a pure power of q.
    pub fn as_gamma_point(&self) -> Option<GammaBundlePoint> {
        self.x
            .is_gamma_power()
            .map(|c| GammaBundlePoint::new(c, self.k, self.base))
    }
}

impl fmt::Display for LineBundlePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}", coeff_factor(&self.x), self.base.label_text(self.k))
    }
}

/// `pi`: the fibre coordinate `q^k u` (U-sort) or `q^k v` (V-sort) and the
/// base, whose other coordinate is read modulo Gamma. The outer exponent is
/// forgotten.
pub fn project_pi(p: &GammaBundlePoint) -> (Scalar, BasePoint) {
    (fiber_value(p.k, &p.base), p.base)
}

pub(crate) fn fiber_value(k: i64, base: &BasePoint) -> Scalar {
    Scalar::monomial(1, &[(Symbol::Q, k), (base.label_symbol(), 1)])
}

/// Canonical E-representative of `(x, q^c * u(q^k u, v))`: `(x q^c, k, base)`.
pub fn e_normalize(x: &Scalar, c: i64, k: i64, base: BasePoint) -> Result<LineBundlePoint> {
    if x.is_zero() {
        return Err(Error::Domain("E-class needs a nonzero scalar".into()));
    }
    Ok(LineBundlePoint {
        x: x * &Scalar::q_pow(c),
        k,
        base,
    })
}

/// Action of one generator: returns the factor picked up and the new label.
fn action(g: Generator, k: i64, base: &BasePoint) -> (Scalar, i64) {
    let u = base.u;
    let v = base.v;
    match (base.sort, g) {
        (Sort::U, Generator::U) => (Scalar::monomial(1, &[(Symbol::Q, k), (u, 1)]), k),
        (Sort::U, Generator::UInv) => (Scalar::monomial(1, &[(Symbol::Q, -k), (u, -1)]), k),
        (Sort::U, Generator::V) => (Scalar::monomial(1, &[(v, 1)]), k - 1),
        (Sort::U, Generator::VInv) => (Scalar::monomial(1, &[(v, -1)]), k + 1),
        (Sort::V, Generator::U) => (Scalar::monomial(1, &[(u, 1)]), k + 1),
        (Sort::V, Generator::UInv) => (Scalar::monomial(1, &[(u, -1)]), k - 1),
        (Sort::V, Generator::V) => (Scalar::monomial(1, &[(Symbol::Q, k), (v, 1)]), k),
        (Sort::V, Generator::VInv) => (Scalar::monomial(1, &[(Symbol::Q, -k), (v, -1)]), k),
    }
}

pub fn act(g: Generator, p: &LineBundlePoint) -> LineBundlePoint {
    let (factor, k) = action(g, p.k, &p.base);
    LineBundlePoint {
        x: &p.x * &factor,
        k,
        base: p.base,
    }
}

/// Applies a word as an operator product, rightmost letter first.
pub fn act_word(w: &Word, p: &LineBundlePoint) -> LineBundlePoint {
    w.letters().iter().rev().fold(p.clone(), |acc, g| act(*g, &acc))
}

pub fn scalar_mul_line(s: &Scalar, p: &LineBundlePoint) -> Result<LineBundlePoint> {
    if s.is_zero() {
        return Err(Error::Domain("scaling by zero leaves the line bundle".into()));
    }
    Ok(LineBundlePoint {
        x: s * &p.x,
        k: p.k,
        base: p.base,
    })
}

/// Finite combination `sum_k c_k * u(q^k u, v)` over a single base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleVector {
    pub base: BasePoint,
    coeffs: BTreeMap<i64, Scalar>,
}

impl ModuleVector {
    pub fn zero(base: BasePoint) -> Self {
        ModuleVector {
            base,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(k: i64, base: BasePoint) -> Self {
        Self::from_point(&LineBundlePoint::basis(k, base))
    }

    pub fn from_point(p: &LineBundlePoint) -> Self {
        let mut m = Self::zero(p.base);
        m.add_term(p.k, p.x.clone());
        m
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i64, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Scalar {
        self.coeffs.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The single line-bundle point this vector is, if it has one term.
    pub fn as_point(&self) -> Option<LineBundlePoint> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (k, x) = self.coeffs.iter().next()?;
        Some(LineBundlePoint {
            x: x.clone(),
            k: *k,
            base: self.base,
        })
    }

    pub fn add_term(&mut self, k: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&k) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(k, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.base != other.base {
            return Err(Error::Domain("cannot add vectors over different bases".into()));
        }
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.base);
        for (k, c) in &self.coeffs {
            out.add_term(*k, c * s);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::integer(-1))
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 * {}", self.base.label_text(0));
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| format!("{} * {}", coeff_factor(c), self.base.label_text(*k)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Linear extension of a single generator's action.
pub fn act_vector(g: Generator, m: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero(m.base);
    for (k, c) in &m.coeffs {
        let (factor, k2) = action(g, *k, &m.base);
        out.add_term(k2, c * &factor);
    }
    out
}

/// Action of `c U^a V^b` on the basis vector with label `k`, in closed form:
/// on the U-sort `V^b` contributes `v^b` and moves the label to `k - b`,
/// then `U^a` contributes `(q^(k-b) u)^a`; on the V-sort `V^b` contributes
/// `(q^k v)^b` and `U^a` contributes `u^a`, moving the label to `k + a`.
fn monomial_action(a: i64, b: i64, k: i64, base: &BasePoint) -> (Exponents, i64) {
    let (u, v) = (base.u, base.v);
    match base.sort {
        Sort::U => {
            let e = Exponents::single(Symbol::Q, a * (k - b))
                .add(&Exponents::single(u, a))
                .add(&Exponents::single(v, b));
            (e, k - b)
        }
        Sort::V => {
            let e = Exponents::single(Symbol::Q, b * k)
                .add(&Exponents::single(v, b))
                .add(&Exponents::single(u, a));
            (e, k + a)
        }
    }
}

pub fn act_module(w: &AlgebraElement, m: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero(m.base);
    for (&(a, b), c) in w.terms() {
        for (k, x) in &m.coeffs {
            let (e, k2) = monomial_action(a, b, *k, &m.base);
            let factor = Scalar::from_poly(crate::field::LaurentPoly::term(1.into(), e));
            out.add_term(k2, &(c * x) * &factor);
        }
    }
    out
}
