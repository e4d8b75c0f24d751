//! The algebra A_q generated by U, V and their inverses subject to
//! `VU = qUV`, with words reduced to the normal form `c U^a V^b`.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    U,
    UInv,
    V,
    VInv,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::U, Generator::UInv, Generator::V, Generator::VInv];

    pub fn inverse(self) -> Generator {
        match self {
            Generator::U => Generator::UInv,
            Generator::UInv => Generator::U,
            Generator::V => Generator::VInv,
            Generator::VInv => Generator::V,
        }
    }

    /// Exponent pair `(a, b)` of the generator as a monomial `U^a V^b`.
    pub fn degree(self) -> (i64, i64) {
        match self {
            Generator::U => (1, 0),
            Generator::UInv => (-1, 0),
            Generator::V => (0, 1),
            Generator::VInv => (0, -1),
        }
    }

    fn is_u(self) -> bool {
        matches!(self, Generator::U | Generator::UInv)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::U => "U",
            Generator::UInv => "U^-1",
            Generator::V => "V",
            Generator::VInv => "V^-1",
        })
    }
}

/// A word in the generators, read as an operator product: the rightmost
/// letter acts first. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn new(letters: impl Into<Vec<Generator>>) -> Self {
        Word(letters.into())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Every word of exactly `len` letters, in lexicographic order.
    pub fn all_of_length(len: usize) -> Vec<Word> {
        let mut out = vec![Word::default()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    Generator::ALL.iter().map(move |g| {
                        let mut v = w.0.clone();
                        v.push(*g);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        let s: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&s.join("*"))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMonomial {
    pub coeff: Scalar,
    pub a: i64,
    pub b: i64,
}

impl QMonomial {
    pub fn to_element(&self) -> AlgebraElement {
        AlgebraElement::monomial(self.coeff.clone(), self.a, self.b)
    }
}

/// One rewriting step on an adjacent pair. Returns the q-exponent picked up
/// and the replacement letters.
fn rewrite_pair(x: Generator, y: Generator) -> Option<(i64, Vec<Generator>)> {
    use Generator::*;
    match (x, y) {
        (V, U) => Some((1, vec![U, V])),
        (V, UInv) => Some((-1, vec![UInv, V])),
        (VInv, U) => Some((-1, vec![U, VInv])),
        (VInv, UInv) => Some((1, vec![UInv, VInv])),
        _ if x.inverse() == y => Some((0, vec![])),
        _ => None,
    }
}

/// Reduces a word to `q^n U^a V^b` by the swap rules
/// `VU -> qUV`, `VU^-1 -> q^-1 U^-1 V`, `V^-1 U -> q^-1 U V^-1`,
/// `V^-1 U^-1 -> q U^-1 V^-1` and inverse cancellation.
pub fn normalize_word(w: &Word) -> QMonomial {
    let mut letters = w.0.clone();
    let mut qexp = 0i64;
    'outer: loop {
        for i in 0..letters.len().saturating_sub(1) {
            if let Some((dq, repl)) = rewrite_pair(letters[i], letters[i + 1]) {
                qexp += dq;
                letters.splice(i..i + 2, repl);
                continue 'outer;
            }
        }
        break;
    }
    // irreducible words are U-letters then V-letters, each block one sign
    debug_assert!(letters.windows(2).all(|p| p[0].is_u() || !p[1].is_u()));
    let (a, b) = letters.iter().fold((0, 0), |(a, b), g| {
        let (da, db) = g.degree();
        (a + da, b + db)
    });
    QMonomial {
        coeff: Scalar::q_pow(qexp),
        a,
        b,
    }
}

/// Finite F-linear combination of normal monomials `U^a V^b`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<(i64, i64), Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::monomial(Scalar::one(), 0, 0)
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(coeff: Scalar, a: i64, b: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, coeff);
        out
    }

    pub fn generator(g: Generator) -> Self {
        let (a, b) = g.degree();
        Self::monomial(Scalar::one(), a, b)
    }

    pub fn from_word(w: &Word) -> Self {
        normalize_word(w).to_element()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(i64, i64), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: i64, b: i64) -> Scalar {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, a: i64, b: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&(a, b)) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert((a, b), sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::integer(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, c * s);
        }
        out
    }

    /// Product under `(c1 U^a1 V^b1)(c2 U^a2 V^b2) = c1 c2 q^(b1 a2) U^(a1+a2) V^(b1+b2)`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                let c = &(c1 * c2) * &Scalar::q_pow(b1 * a2);
                out.add_term(a1 + a2, b1 + b2, c);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.mul(self))
    }
}

pub fn algebra_mul(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    x.mul(y)
}

pub fn algebra_eq(x: &AlgebraElement, y: &AlgebraElement) -> bool {
    x == y
}

fn fmt_uv(a: i64, b: i64) -> String {
    let part = |name: &str, e: i64| match e {
        0 => None,
        1 => Some(name.to_owned()),
        e => Some(format!("{name}^{e}")),
    };
    let parts: Vec<String> = [part("U", a), part("V", b)].into_iter().flatten().collect();
    if parts.is_empty() {
        "I".to_owned()
    } else {
        parts.join("*")
    }
}

/// Coefficient text as a factor; parenthesized unless it is a bare monomial.
pub(crate) fn coeff_factor(c: &Scalar) -> String {
    let s = c.to_string();
    if s.contains(' ') || s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0*I");
        }
        let minus_one = Scalar::integer(-1);
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let mono = fmt_uv(a, b);
            let (neg, body) = if c.is_one() {
                (false, mono)
            } else if *c == minus_one {
                (true, mono)
            } else {
                (false, format!("{}*{mono}", coeff_factor(c)))
            };
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}
