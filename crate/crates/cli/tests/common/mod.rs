#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use num_bigint::BigInt;
use qtorus_cli::syntax::{Expr, Gen, Kind};
use qtorus_core::bundle::Sort;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn cases() -> Vec<(&'static str, Vec<&'static str>)> {
    let mut v: Vec<(&'static str, Vec<&'static str>)> = vec![
        ("eval_action", vec!["eval", "V*U*u[u0,v0]"]),
        ("eval_pairing", vec!["eval", "<v[q^1*v0,u0] | u[q^1*u0,v0]>"]),
        ("eval_identity", vec!["eval", "U*U^-1*u[u0,v0]"]),
        ("eval_scalar", vec!["eval", "q/(q-1) + 1/(1-q)"]),
        ("eval_algebra", vec!["eval", "(U + V)^2"]),
        ("eval_json", vec!["--json", "eval", "V*U*u[u0,v0]"]),
        ("eval_undefined_pairing", vec!["eval", "<v[v1,u1] | u[u0,v0]>"]),
        ("eval_sort_error", vec!["eval", "< u[u0,v0] | u[u0,v0] >"]),
        ("eval_syntax_error", vec!["eval", "u[u0,\n  v0"]),
        ("act_commutator", vec!["act", "V*U - q*U*V", "u[u0,v0] + 2*u[q*u0, v0]"]),
        ("act_word", vec!["act", "U^2*V^-1", "v[q^-1*v0, u0]"]),
        ("pair_label_shift", vec!["pair", "u[q^2*u0,v0]", "v[q^3*v0,u0]"]),
        ("pair_json", vec!["--json", "pair", "v[q*v0,u0]", "q^2*u[q*u0,v0]"]),
        ("arith_add", vec!["arith", "add", "2", "3"]),
        ("arith_add_inverse", vec!["arith", "add", "-4", "4"]),
        ("arith_mul", vec!["arith", "mul", "3", "5"]),
        ("arith_suite", vec!["arith", "suite", "--window", "5"]),
        ("transfer_check", vec!["transfer-check", "--s", "2", "--t", "3", "--window", "5"]),
        ("transfer_check_negative", vec!["transfer-check", "--s", "-3", "--t", "1", "--window", "3"]),
        ("psi_check", vec!["psi-check", "--window", "3"]),
        ("psi_check_json", vec!["--json", "psi-check", "--window", "2"]),
        ("lang_type_hyperbola", vec!["lang-type", "--poly", "x1*x2 - 1", "--arity", "2", "--window", "6"]),
        ("lang_type_shift", vec!["lang-type", "--poly", "x1 - q^3*x2", "--arity", "2", "--window", "6"]),
        ("lang_type_empty", vec!["lang-type", "--poly", "x1 - 2", "--arity", "1", "--window", "6"]),
        ("lang_type_json", vec!["--json", "lang-type", "--poly", "x1^2*x2 - q", "--arity", "2", "--window", "4"]),
        ("axioms", vec!["axioms", "--window", "4"]),
        ("usage_error", vec!["transfer-check", "--s", "1"]),
    ];
    const MUTATIONS: [&str; 8] = [
        "clause-1", "clause-2", "clause-3", "clause-4", "clause-5", "clause-6", "clause-7", "clause-8",
    ];
    const NAMES: [&str; 8] = [
        "psi_mutation_1",
        "psi_mutation_2",
        "psi_mutation_3",
        "psi_mutation_4",
        "psi_mutation_5",
        "psi_mutation_6",
        "psi_mutation_7",
        "psi_mutation_8",
    ];
    for (name, m) in NAMES.into_iter().zip(MUTATIONS) {
        v.push((name, vec!["psi-check", "--window", "3", "--mutate", m]));
    }
    v
}

fn quote(a: &str) -> String {
    if a.chars().all(|c| c.is_ascii_alphanumeric() || "-_=.".contains(c)) {
        a.to_string()
    } else {
        format!("'{a}'")
    }
}

pub fn transcript(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_qtorus"))
        .args(args)
        .env_remove("QTORUS_WINDOW")
        .output()
        .expect("binary runs");
    let shown: Vec<String> = args.iter().map(|a| quote(a)).collect();
    format!(
        "$ qtorus {}\n{}--- stderr\n{}--- exit {}\n",
        shown.join(" "),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1)
    )
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

fn b(e: Expr) -> Box<Expr> {
    Box::new(e)
}

fn other(s: Sort) -> Sort {
    match s {
        Sort::U => Sort::V,
        Sort::V => Sort::U,
    }
}

/// Random trees of a given kind. With `tame`, points are labelled by
/// `q^k * u0` over `(u0, v0)` and divisions are by nonzero integers, so most
/// trees evaluate.
pub struct Trees {
    pub rng: StdRng,
    pub tame: bool,
}

const SYMS: [&str; 5] = ["q", "u0", "v0", "x1", "abc"];

impl Trees {
    pub fn scalar(&mut self, d: u32) -> Expr {
        let leaf = d == 0 || self.rng.gen_bool(0.3);
        if leaf {
            return if self.rng.gen_bool(0.5) {
                Expr::Int(BigInt::from(self.rng.gen_range(0..12)))
            } else {
                let pool = if self.tame { &SYMS[..3] } else { &SYMS[..] };
                Expr::Sym(pool[self.rng.gen_range(0..pool.len())].to_string())
            };
        }
        match self.rng.gen_range(0..7) {
            0 => Expr::Neg(b(self.scalar(d - 1))),
            1 => Expr::Add(b(self.scalar(d - 1)), b(self.scalar(d - 1))),
            2 => Expr::Sub(b(self.scalar(d - 1)), b(self.scalar(d - 1))),
            3 => Expr::Mul(b(self.scalar(d - 1)), b(self.scalar(d - 1))),
            4 => Expr::Div(b(self.scalar(d - 1)), b(self.divisor(d - 1))),
            5 => Expr::Pow(b(self.scalar(d - 1)), self.rng.gen_range(-3..=3)),
            _ => {
                let s = if self.rng.gen_bool(0.5) { Sort::U } else { Sort::V };
                Expr::Pair(b(self.vector(s, d - 1)), b(self.vector(other(s), d - 1)))
            }
        }
    }

    pub fn divisor(&mut self, d: u32) -> Expr {
        if self.tame {
            Expr::Int(BigInt::from(self.rng.gen_range(1..6)))
        } else {
            self.scalar(d)
        }
    }

    pub fn algebra(&mut self, d: u32) -> Expr {
        if d == 0 || self.rng.gen_bool(0.3) {
            return match self.rng.gen_range(0..5) {
                0 | 1 => Expr::Gen(Gen::U),
                2 | 3 => Expr::Gen(Gen::V),
                _ => Expr::Identity,
            };
        }
        match self.rng.gen_range(0..7) {
            0 => Expr::Neg(b(self.algebra(d - 1))),
            1 => Expr::Add(b(self.algebra(d - 1)), b(self.algebra(d - 1))),
            2 => Expr::Sub(b(self.scalar(d - 1)), b(self.algebra(d - 1))),
            3 => Expr::Mul(b(self.algebra(d - 1)), b(self.algebra(d - 1))),
            4 => Expr::Mul(b(self.scalar(d - 1)), b(self.algebra(d - 1))),
            5 => Expr::Div(b(self.algebra(d - 1)), b(self.divisor(d - 1))),
            _ => {
                let g = if self.rng.gen_bool(0.5) { Gen::U } else { Gen::V };
                Expr::Pow(b(Expr::Gen(g)), self.rng.gen_range(-3..=3))
            }
        }
    }

    pub fn point(&mut self, s: Sort, d: u32) -> Expr {
        if self.tame {
            let (head, tail) = match s {
                Sort::U => ("u0", "v0"),
                Sort::V => ("v0", "u0"),
            };
            let k = self.rng.gen_range(-3..=3);
            let label = Expr::Mul(b(Expr::Pow(b(Expr::Sym("q".into())), k)), b(Expr::Sym(head.into())));
            Expr::Point(s, b(label), b(Expr::Sym(tail.into())))
        } else {
            Expr::Point(s, b(self.scalar(d)), b(self.scalar(d)))
        }
    }

    pub fn vector(&mut self, s: Sort, d: u32) -> Expr {
        if d == 0 || self.rng.gen_bool(0.3) {
            return self.point(s, d.min(1));
        }
        match self.rng.gen_range(0..7) {
            0 => Expr::Neg(b(self.vector(s, d - 1))),
            1 => Expr::Add(b(self.vector(s, d - 1)), b(self.vector(s, d - 1))),
            2 => Expr::Sub(b(self.vector(s, d - 1)), b(self.vector(s, d - 1))),
            3 => Expr::Mul(b(self.scalar(d - 1)), b(self.vector(s, d - 1))),
            4 => Expr::Mul(b(self.vector(s, d - 1)), b(self.scalar(d - 1))),
            5 => Expr::Div(b(self.vector(s, d - 1)), b(self.divisor(d - 1))),
            _ => Expr::Apply(b(self.algebra(d - 1)), b(self.vector(s, d - 1))),
        }
    }

    pub fn any(&mut self, d: u32) -> (Expr, Kind) {
        match self.rng.gen_range(0..4) {
            0 => (self.scalar(d), Kind::Scalar),
            1 => (self.algebra(d), Kind::Algebra),
            2 => (self.vector(Sort::U, d), Kind::Vector(Sort::U)),
            _ => (self.vector(Sort::V, d), Kind::Vector(Sort::V)),
        }
    }
}


impl Trees {
    pub fn seeded(seed: u64, tame: bool) -> Self {
        Trees { rng: StdRng::seed_from_u64(seed), tame }
    }
}
