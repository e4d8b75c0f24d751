//! Evaluation of parsed expressions to canonical values.

use std::fmt;

use qtorus_core::bundle::{act_module, BasePoint, GammaBundlePoint, ModuleVector, Sort};
use qtorus_core::field::Symbol;
use qtorus_core::pairing::{self, PairingValue};
use qtorus_core::qalgebra::{AlgebraElement, Generator};
use qtorus_core::{Error, Result, Scalar};
use serde_json::{json, Value as Json};

use crate::syntax::{Expr, Gen};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value {
    Scalar(Scalar),
    Algebra(AlgebraElement),
    Vector(ModuleVector),
    Pairing(PairingValue),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Algebra(_) => "algebra",
            Value::Vector(_) => "vector",
            Value::Pairing(_) => "pairing",
        }
    }

    fn into_scalar(self) -> Option<Scalar> {
        match self {
            Value::Scalar(s) => Some(s),
            Value::Pairing(p) => Some(p.to_scalar()),
            _ => None,
        }
    }

    fn into_algebra(self) -> Option<AlgebraElement> {
        match self {
            Value::Algebra(a) => Some(a),
            other => other.into_scalar().map(AlgebraElement::scalar),
        }
    }

    /// Stable JSON form: every key is always present.
    pub fn to_json(&self) -> Json {
        let mut out = json!({
            "kind": self.kind(),
            "text": self.to_string(),
            "scalar": null,
            "k": null,
            "base": null,
            "exponent": null,
            "terms": [],
        });
        match self {
            Value::Scalar(s) => out["scalar"] = json!(s.to_string()),
            Value::Pairing(p) => out["exponent"] = json!(p.0),
            Value::Algebra(a) => {
                out["terms"] = a
                    .terms()
                    .map(|((u, v), c)| json!({"coeff": c.to_string(), "u": u, "v": v}))
                    .collect();
            }
            Value::Vector(m) => {
                out["base"] = base_json(&m.base);
                if let Some(p) = m.as_point() {
                    out["k"] = json!(p.k);
                    out["scalar"] = json!(p.x.to_string());
                }
                out["terms"] = m.terms().map(|(k, c)| json!({"coeff": c.to_string(), "k": k})).collect();
            }
        }
        out
    }
}

pub fn base_json(b: &BasePoint) -> Json {
    json!({"u": b.u.name(), "v": b.v.name(), "sort": b.sort.to_string()})
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Algebra(a) => write!(f, "{a}"),
            Value::Vector(m) => write!(f, "{m}"),
            Value::Pairing(p) => write!(f, "{p}"),
        }
    }
}

fn sort_error(msg: impl Into<String>) -> Error {
    Error::Sort(msg.into())
}

fn inverse(a: &AlgebraElement) -> Result<AlgebraElement> {
    let mut terms = a.terms();
    match (terms.next(), terms.next()) {
        // (c U^a V^b)^-1 = c^-1 q^(ab) U^-a V^-b
        (Some((&(x, y), c)), None) => {
            let c = &c.inv()? * &Scalar::q_pow(x * y);
            Ok(AlgebraElement::monomial(c, -x, -y))
        }
        _ => Err(Error::Domain(format!("{a} is not invertible"))),
    }
}

/// Reads `q^k * s` as `(s, k)`.
fn label(x: &Scalar) -> Result<(Symbol, i64)> {
    let bad = || Error::Domain(format!("point label must be q^k times a base symbol, got {x}"));
    let factors = x.as_unit_monomial().ok_or_else(bad)?;
    let mut k = 0;
    let mut sym = None;
    for (s, e) in factors {
        if s == Symbol::Q {
            k = e;
        } else if e == 1 && sym.is_none() {
            sym = Some(s);
        } else {
            return Err(bad());
        }
    }
    Ok((sym.ok_or_else(bad)?, k))
}

fn bare_symbol(x: &Scalar) -> Result<Symbol> {
    match label(x) {
        Ok((s, 0)) => Ok(s),
        _ => Err(Error::Domain(format!("second point coordinate must be a base symbol, got {x}"))),
    }
}

fn gamma_point(m: &ModuleVector) -> Result<GammaBundlePoint> {
    m.as_point()
        .and_then(|p| p.as_gamma_point())
        .ok_or_else(|| Error::Domain(format!("pairing needs q^c times a basis point, got {m}")))
}

pub fn evaluate(e: &Expr) -> Result<Value> {
    Ok(match e {
        Expr::Int(n) => Value::Scalar(Scalar::from_bigint(n.clone())),
        Expr::Sym(s) => Value::Scalar(Scalar::symbol(Symbol::intern(s))),
        Expr::Gen(Gen::U) => Value::Algebra(AlgebraElement::generator(Generator::U)),
        Expr::Gen(Gen::V) => Value::Algebra(AlgebraElement::generator(Generator::V)),
        Expr::Identity => Value::Algebra(AlgebraElement::identity()),
        Expr::Neg(a) => match evaluate(a)? {
            Value::Scalar(s) => Value::Scalar(-s),
            Value::Pairing(p) => Value::Scalar(-p.to_scalar()),
            Value::Algebra(x) => Value::Algebra(x.neg()),
            Value::Vector(m) => Value::Vector(m.neg()),
        },
        Expr::Add(a, b) => combine(evaluate(a)?, evaluate(b)?, false)?,
        Expr::Sub(a, b) => combine(evaluate(a)?, evaluate(b)?, true)?,
        Expr::Mul(a, b) => match (evaluate(a)?, evaluate(b)?) {
            (Value::Vector(m), s) | (s, Value::Vector(m)) => {
                let s = s.into_scalar().ok_or_else(|| sort_error("vectors scale by scalars only"))?;
                Value::Vector(m.scale(&s))
            }
            (x, y) => match (x.clone().into_scalar(), y.clone().into_scalar()) {
                (Some(s), Some(t)) => Value::Scalar(&s * &t),
                _ => {
                    let x = x.into_algebra().expect("scalar or algebra");
                    let y = y.into_algebra().expect("scalar or algebra");
                    Value::Algebra(x.mul(&y))
                }
            },
        },
        Expr::Apply(a, b) => {
            let w = evaluate(a)?.into_algebra().ok_or_else(|| sort_error("expected an algebra element"))?;
            match evaluate(b)? {
                Value::Vector(m) => Value::Vector(act_module(&w, &m)),
                _ => return Err(sort_error("algebra elements act on vectors")),
            }
        }
        Expr::Div(a, b) => {
            let d = evaluate(b)?
                .into_scalar()
                .ok_or_else(|| sort_error("divisor must be a scalar"))?;
            let inv = d.inv().map_err(|_| Error::DivisionByZero)?;
            match evaluate(a)? {
                Value::Vector(m) => Value::Vector(m.scale(&inv)),
                Value::Algebra(x) => Value::Algebra(x.scale(&inv)),
                other => Value::Scalar(&other.into_scalar().expect("scalar") * &inv),
            }
        }
        Expr::Pow(a, n) => match evaluate(a)? {
            Value::Algebra(x) => {
                let base = if *n < 0 { inverse(&x)? } else { x };
                Value::Algebra(base.pow(n.unsigned_abs() as u32))
            }
            Value::Vector(_) => return Err(sort_error("cannot raise a vector to a power")),
            other => Value::Scalar(other.into_scalar().expect("scalar").pow(*n)?),
        },
        Expr::Point(sort, a, b) => {
            let first = evaluate(a)?.into_scalar().ok_or_else(|| sort_error("point coordinates are scalars"))?;
            let second = evaluate(b)?.into_scalar().ok_or_else(|| sort_error("point coordinates are scalars"))?;
            let (head, k) = label(&first)?;
            let other = bare_symbol(&second)?;
            let base = match sort {
                Sort::U => BasePoint::new(head, other, Sort::U)?,
                Sort::V => BasePoint::new(other, head, Sort::V)?,
            };
            Value::Vector(ModuleVector::basis(k, base))
        }
        Expr::Pair(a, b) => {
            let (Value::Vector(x), Value::Vector(y)) = (evaluate(a)?, evaluate(b)?) else {
                return Err(sort_error("pairing needs two vectors"));
            };
            Value::Pairing(pairing::pair(&gamma_point(&x)?, &gamma_point(&y)?)?)
        }
    })
}

fn combine(x: Value, y: Value, subtract: bool) -> Result<Value> {
    Ok(match (x, y) {
        (Value::Vector(m), Value::Vector(n)) => {
            let n = if subtract { n.neg() } else { n };
            Value::Vector(m.add(&n)?)
        }
        (Value::Vector(_), _) | (_, Value::Vector(_)) => return Err(sort_error("cannot add a vector and a non-vector")),
        (x, y) => match (x.clone().into_scalar(), y.clone().into_scalar()) {
            (Some(s), Some(t)) => Value::Scalar(if subtract { &s - &t } else { &s + &t }),
            _ => {
                let x = x.into_algebra().expect("scalar or algebra");
                let y = y.into_algebra().expect("scalar or algebra");
                Value::Algebra(if subtract { x.sub(&y) } else { x.add(&y) })
            }
        },
    })
}
