//! Sparse Laurent polynomials with integer coefficients over the session
//! symbol table.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Symbol;

/// Exponent vector indexed by symbol index. Trailing zeros are trimmed, so
/// the vector widens lazily as new symbols appear.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct Exponents(Vec<i64>);

impl Exponents {
    pub fn one() -> Self {
        Exponents(Vec::new())
    }

    pub fn from_vec(mut v: Vec<i64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Exponents(v)
    }

    pub fn single(sym: Symbol, e: i64) -> Self {
        let mut v = vec![0; sym.index() + 1];
        v[sym.index()] = e;
        Self::from_vec(v)
    }

    pub fn get(&self, sym: Symbol) -> i64 {
        self.0.get(sym.index()).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    /// Nonzero `(symbol, exponent)` pairs in index order.
    pub fn iter(&self) -> impl Iterator<Item = (Symbol, i64)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e != 0)
            .map(|(i, e)| (Symbol::from_index(i), *e))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        let n = self.0.len().max(other.0.len());
        let v = (0..n)
            .map(|i| {
                f(
                    self.0.get(i).copied().unwrap_or(0),
                    other.0.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Self::from_vec(v)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn min(&self, other: &Self) -> Self {
        self.zip_with(other, i64::min)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_vec(self.0.iter().map(|e| e * k).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|e| *e >= 0)
    }

    pub fn without(&self, sym: Symbol) -> Self {
        let mut v = self.0.clone();
        if let Some(e) = v.get_mut(sym.index()) {
            *e = 0;
        }
        Self::from_vec(v)
    }
}

// Lexicographic by symbol index with implicit zero padding. This is a
// group order on Z^n, hence a monomial order on the polynomial part.
impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(c, Exponents::one())
    }

    pub fn term(c: BigInt, e: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn as_term(&self) -> Option<(&Exponents, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, c: &BigInt, e: &Exponents) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e0, c0)| (e0.add(e), c0 * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_coeffs(&self, c: &BigInt) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c0)| (e.clone(), c0 / c)).collect(),
        }
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Componentwise minimum exponent: the largest monomial dividing every
    /// term. Identity for the zero polynomial.
    pub fn monomial_content(&self) -> Exponents {
        let mut it = self.terms.keys();
        match it.next() {
            None => Exponents::one(),
            Some(first) => it.fold(first.clone(), |m, e| Exponents::min(&m, e)),
        }
    }

    /// Exact quotient `self / divisor` in the polynomial ring, or `None` if
    /// the division leaves a remainder. Both operands must have nonnegative
    /// exponents.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_e, lead_c) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((e, c)) = rem.leading() {
            let qe = e.sub(lead_e);
            if !qe.is_nonnegative() {
                return None;
            }
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&divisor.mul_term(&qc, &qe));
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Replaces `sym^e` by `factor^e` in every term.
    pub fn substitute(&self, sym: Symbol, factor: &Exponents) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let k = e.get(sym);
            out.add_term(e.without(sym).add(&factor.scale(k)), c.clone());
        }
        out
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let width = self.terms.keys().map(Exponents::width).max().unwrap_or(0);
        (0..width)
            .map(Symbol::from_index)
            .filter(|s| self.terms.keys().any(|e| e.get(*s) != 0))
            .collect()
    }

    pub fn leading_is_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> Exponents {
        Exponents::single(Symbol::Q, e)
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn exponents_trim_and_compare() {
        assert_eq!(Exponents::from_vec(vec![1, 0, 0]), Exponents::from_vec(vec![1]));
        let a = Exponents::from_vec(vec![1]);
        let b = Exponents::from_vec(vec![1, -1]);
        assert!(a > b);
    }

    #[test]
    fn exact_division() {
        // (q^2 - 1) / (q - 1) = q + 1
        let num = LaurentPoly::term(int(1), q(2)).sub(&LaurentPoly::one());
        let den = LaurentPoly::term(int(1), q(1)).sub(&LaurentPoly::one());
        let expected = LaurentPoly::term(int(1), q(1)).add(&LaurentPoly::one());
        assert_eq!(num.div_exact(&den), Some(expected));
        assert_eq!(den.div_exact(&num), None);
    }

    #[test]
    fn substitute_monomial() {
        let u = Symbol::intern("poly_test_u");
        let g = Symbol::intern("poly_test_g");
        // u^2 -> (q^3 g)^2
        let p = LaurentPoly::term(int(5), Exponents::single(u, 2));
        let factor = q(3).add(&Exponents::single(g, 1));
        let out = p.substitute(u, &factor);
        assert_eq!(out, LaurentPoly::term(int(5), q(6).add(&Exponents::single(g, 2))));
    }
}
