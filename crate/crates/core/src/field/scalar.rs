use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::poly::{Exponents, LaurentPoly};
use super::Symbol;
use crate::error::{Error, Result};

/// Element of Q(q, s1, s2, ...): a quotient of integer Laurent polynomials.
///
/// Normal form: the denominator is nonzero, carries no monomial content, has
/// a positive leading coefficient and shares no integer content with the
/// numerator. When one side divides the other exactly the quotient is taken.
/// There is no general gcd, so two equal scalars may still differ in
/// representation; equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_poly(LaurentPoly::constant(n))
    }

    pub fn rational(n: i64, d: i64) -> Result<Self> {
        Self::from_parts(
            LaurentPoly::constant(BigInt::from(n)),
            LaurentPoly::constant(BigInt::from(d)),
        )
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Scalar {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::monomial(1, &[(s, 1)])
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(n: i64) -> Self {
        Self::monomial(1, &[(Symbol::Q, n)])
    }

    pub fn monomial(coeff: i64, factors: &[(Symbol, i64)]) -> Self {
        let e = factors
            .iter()
            .fold(Exponents::one(), |acc, (s, k)| acc.add(&Exponents::single(*s, *k)));
        Self::from_poly(LaurentPoly::term(BigInt::from(coeff), e))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inversion of zero".into()));
        }
        Ok(normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(self.num.mul(&other.den), self.den.mul(&other.num)))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// `Some(n)` iff this scalar is exactly the monomial `q^n`.
    pub fn is_gamma_power(&self) -> Option<i64> {
        if !self.den.is_one() {
            return None;
        }
        let (e, c) = self.num.as_term()?;
        if !c.is_one() {
            return None;
        }
        let n = e.get(Symbol::Q);
        (Exponents::single(Symbol::Q, n) == *e).then_some(n)
    }

    /// Factors of a coefficient-one monomial, in symbol-index order.
    pub fn as_unit_monomial(&self) -> Option<Vec<(Symbol, i64)>> {
        if !self.den.is_one() {
            return None;
        }
        let (e, c) = self.num.as_term()?;
        c.is_one().then(|| e.iter().collect())
    }

    /// Replaces `sym` by the monomial `replacement` throughout.
    pub fn substitute(&self, sym: Symbol, replacement: &Exponents) -> Self {
        normalize(
            self.num.substitute(sym, replacement),
            self.den.substitute(sym, replacement),
        )
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut s = self.num.symbols();
        s.extend(self.den.symbols());
        s.sort();
        s.dedup();
        s
    }
}

fn normalize(num: LaurentPoly, den: LaurentPoly) -> Scalar {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return Scalar::zero();
    }
    if den.is_one() {
        return Scalar::from_poly(num);
    }

    // Strip monomial content from both sides; the ratio is reattached to
    // the numerator at the end.
    let mn = num.monomial_content();
    let md = den.monomial_content();
    let shift = mn.sub(&md);
    let p = num.mul_term(&BigInt::one(), &mn.scale(-1));
    let q = den.mul_term(&BigInt::one(), &md.scale(-1));

    let cp = p.content();
    let cq = q.content();
    let p = p.div_coeffs(&cp);
    let mut q = q.div_coeffs(&cq);
    let g = cp.gcd(&cq);
    let mut cn = &cp / &g;
    let mut cd = &cq / &g;

    let mut p = if let Some(h) = p.div_exact(&q) {
        q = LaurentPoly::one();
        h
    } else if let Some(h) = q.div_exact(&p) {
        q = h;
        LaurentPoly::one()
    } else {
        p
    };

    if q.leading_is_negative() {
        q = q.neg();
        cn = -cn;
    }
    if cd.is_negative() {
        cd = -cd;
        cn = -cn;
    }
    p = p.mul_term(&cn, &shift);
    let den = q.mul_term(&cd, &Exponents::one());
    Scalar { num: p, den }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.den.is_one() && other.den.is_one() {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return normalize(self.num.add(&rhs.num), self.den.clone());
        }
        normalize(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(self.num.mul(&rhs.num));
        }
        normalize(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::integer(n)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

/// Canonical text of a monomial: factors sorted by symbol name.
fn fmt_monomial(e: &Exponents) -> String {
    let mut factors: Vec<(String, i64)> = e.iter().map(|(s, k)| (s.name(), k)).collect();
    factors.sort();
    factors
        .iter()
        .map(|(n, k)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn fmt_term(c: &BigInt, e: &Exponents) -> String {
    if e.is_one() {
        return c.to_string();
    }
    let m = fmt_monomial(e);
    if c.is_one() {
        m
    } else if *c == -BigInt::one() {
        format!("-{m}")
    } else {
        format!("{c}*{m}")
    }
}

/// Terms ordered by descending exponent vector over the name-sorted list of
/// symbols that occur, so the text does not depend on interning order.
pub(crate) fn fmt_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut names: Vec<(String, Symbol)> = p.symbols().into_iter().map(|s| (s.name(), s)).collect();
    names.sort();
    let mut terms: Vec<(Vec<i64>, String, bool)> = p
        .terms()
        .map(|(e, c)| {
            let key = names.iter().map(|(_, s)| e.get(*s)).collect();
            (key, fmt_term(&c.abs(), e), c.is_negative())
        })
        .collect();
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out = String::new();
    for (i, (_, t, neg)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, true) => {
                out.push('-');
                out.push_str(t);
            }
            (0, false) => out.push_str(t),
            (_, true) => {
                out.push_str(" - ");
                out.push_str(t);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = fmt_poly(&self.num);
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let den = fmt_poly(&self.den);
        let wrap = |s: String, many: bool| if many { format!("({s})") } else { s };
        write!(
            f,
            "{} / {}",
            wrap(num, self.num.len() > 1),
            wrap(den, self.den.len() > 1)
        )
    }
}
