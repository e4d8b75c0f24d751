//! Subcommands and their text/JSON rendering. Exit codes: 0 when everything
//! passes, 1 when a check fails, 2 on usage or domain errors.

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use qtorus_core::arithmetic::{gamma_add, gamma_mul, ring_suite, GammaInt};
use qtorus_core::bundle::act_module;
use qtorus_core::langtype::{lang_check, IntPoly, LangCheck};
use qtorus_core::pairing::check_pairing_axioms;
use qtorus_core::report::Report;
use qtorus_core::torus::{check_psi, verify_transfer, Mutation, TorusStructure, TransferMap};
use qtorus_core::Error;
use serde_json::{json, Value as Json};

use crate::eval::{evaluate, Value};
use crate::syntax::{check, parse, Expr, Kind, ParseError};

const WINDOW_ENV: &str = "QTORUS_WINDOW";

#[derive(Parser, Debug)]
#[command(name = "qtorus", version, about = "Exact workbench for the quantum 2-torus")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate an expression to its canonical form.
    Eval { expr: String },
    /// Apply an algebra element to a bundle vector.
    Act { element: String, vector: String },
    /// Pair two opposite-sort bundle points over the same base.
    Pair { left: String, right: String },
    /// Integer arithmetic interpreted in Gamma.
    Arith {
        #[command(subcommand)]
        op: ArithOp,
    },
    /// Check that a change of representatives is an isomorphism.
    #[command(allow_negative_numbers = true)]
    TransferCheck {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, env = WINDOW_ENV)]
        window: Option<i64>,
    },
    /// Evaluate the clauses of the axiomatizing sentence on a window.
    PsiCheck {
        #[arg(long, env = WINDOW_ENV)]
        window: Option<i64>,
        /// Corrupt one clause's interpretation (name, N or clause-N).
        #[arg(long)]
        mutate: Option<String>,
    },
    /// Gamma-points of f = 0, their cosets and the bound N_f.
    LangType {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        arity: usize,
        #[arg(long, env = WINDOW_ENV)]
        window: Option<i64>,
    },
    /// Check the pairing postulates against the closed form.
    Axioms {
        #[arg(long, env = WINDOW_ENV)]
        window: Option<i64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ArithOp {
    /// q^a (+) q^b
    #[command(allow_negative_numbers = true)]
    Add { a: i64, b: i64 },
    /// q^a (x) q^b, computed through the pairing
    #[command(allow_negative_numbers = true)]
    Mul { a: i64, b: i64 },
    /// Ring axioms on [-B, B]
    Suite {
        #[arg(long, env = WINDOW_ENV)]
        window: Option<i64>,
    },
}

/// Everything a run produces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn checked(passed: bool, stdout: String) -> Self {
        Output {
            code: if passed { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CommandError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] Error),
}

impl From<CommandError> for Output {
    fn from(e: CommandError) -> Self {
        match e {
            // axiom 5 has a fixed message
            CommandError::Core(Error::PairingUndefined) => Output {
                code: 2,
                stdout: String::new(),
                stderr: format!("{}\n", Error::PairingUndefined),
            },
            other => Output::error(other),
        }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Output {
    dispatch(cli).unwrap_or_else(Output::from)
}

fn window_or(w: Option<i64>, default: i64) -> Result<i64, CommandError> {
    let w = w.unwrap_or(default);
    if w < 1 {
        return Err(Error::Config(format!("window must be at least 1, got {w}")).into());
    }
    Ok(w)
}

fn value_out(v: &Value, json: bool) -> Output {
    Output::ok(if json {
        format!("{}\n", v.to_json())
    } else {
        format!("{v}\n")
    })
}

fn report_json(r: &Report) -> Json {
    json!({
        "title": r.title,
        "checks": r.checks,
        "result": if r.passed() { "PASS" } else { "FAIL" },
    })
}

fn report_out(r: &Report, json: bool) -> Output {
    let text = if json {
        format!("{}\n", report_json(r))
    } else {
        format!("{r}\n")
    };
    Output::checked(r.passed(), text)
}

fn checked_expr(text: &str) -> Result<(Expr, Kind), CommandError> {
    let e = parse(text)?;
    Ok(check(e)?)
}

fn dispatch(cli: &Cli) -> Result<Output, CommandError> {
    let json = cli.json;
    Ok(match &cli.command {
        Command::Eval { expr } => value_out(&evaluate(&parse(expr)?)?, json),
        Command::Act { element, vector } => {
            let (w, kw) = checked_expr(element)?;
            let (p, kp) = checked_expr(vector)?;
            if matches!(kw, Kind::Vector(_)) {
                return Err(ParseError::Sort(format!("expected an algebra element, got {kw}")).into());
            }
            if !matches!(kp, Kind::Vector(_)) {
                return Err(ParseError::Sort(format!("expected a vector, got {kp}")).into());
            }
            let w = match evaluate(&w)? {
                Value::Algebra(a) => a,
                other => qtorus_core::qalgebra::AlgebraElement::scalar(match other {
                    Value::Scalar(s) => s,
                    Value::Pairing(p) => p.to_scalar(),
                    _ => unreachable!("sort checked"),
                }),
            };
            let Value::Vector(m) = evaluate(&p)? else {
                unreachable!("sort checked")
            };
            value_out(&Value::Vector(act_module(&w, &m)), json)
        }
        Command::Pair { left, right } => {
            let (a, _) = checked_expr(left)?;
            let (b, _) = checked_expr(right)?;
            let (e, _) = check(Expr::Pair(Box::new(a), Box::new(b)))?;
            value_out(&evaluate(&e)?, json)
        }
        Command::Arith { op } => match op {
            ArithOp::Add { a, b } => gamma_out(gamma_add(GammaInt(*a), GammaInt(*b)), json),
            ArithOp::Mul { a, b } => gamma_out(gamma_mul(GammaInt(*a), GammaInt(*b)), json),
            ArithOp::Suite { window } => report_out(&ring_suite(window_or(*window, 20)?)?, json),
        },
        Command::TransferCheck { s, t, window } => {
            report_out(&verify_transfer(TransferMap::new(*s, *t), window_or(*window, 6)?), json)
        }
        Command::PsiCheck { window, mutate } => {
            let mut t = TorusStructure::standard(window_or(*window, 6)?)?;
            if let Some(m) = mutate {
                t = t.with_mutation(m.parse::<Mutation>()?);
            }
            report_out(&check_psi(&t), json)
        }
        Command::LangType { poly, arity, window } => {
            let f = match evaluate(&parse(poly)?)? {
                Value::Scalar(s) => IntPoly::from_scalar(&s, *arity)?,
                other => {
                    return Err(ParseError::Sort(format!("expected a polynomial, got a {}", other.kind())).into())
                }
            };
            lang_out(&lang_check(&f, window_or(*window, 6)?)?, *arity, json)
        }
        Command::Axioms { window } => report_out(&check_pairing_axioms(window_or(*window, 8)?), json),
    })
}

fn gamma_out(g: GammaInt, json: bool) -> Output {
    Output::ok(if json {
        format!("{}\n", json!({"kind": "gamma", "exponent": g.0, "text": g.to_string()}))
    } else {
        format!("{g}\n")
    })
}

fn lang_out(c: &LangCheck, arity: usize, json: bool) -> Output {
    let passed = c.report.passed();
    if json {
        let v = json!({
            "arity": arity,
            "window": c.points.window,
            "nf": c.nf,
            "points": c.points.points,
            "cosets": c.decomposition.cosets,
            "report": report_json(&c.report),
        });
        return Output::checked(passed, format!("{v}\n"));
    }
    let mut lines = vec![c.report.title.clone()];
    lines[0].insert_str(0, "# ");
    lines.push(format!("N_f = {}", c.nf));
    lines.push(format!("points = {}", c.points.len()));
    lines.push(format!("cosets = {}", c.decomposition.len()));
    for coset in &c.decomposition.cosets {
        lines.push(format!("coset {coset}"));
    }
    lines.extend(c.report.checks.iter().map(|ch| ch.to_string()));
    lines.push(format!("RESULT: {}", if passed { "PASS" } else { "FAIL" }));
    Output::checked(passed, lines.join("\n") + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Output {
        run(std::iter::once("qtorus").chain(args.iter().copied()))
    }

    #[test]
    fn arith_examples() {
        assert_eq!(go(&["arith", "mul", "3", "5"]).stdout, "q^15\n");
        assert_eq!(go(&["arith", "add", "-4", "4"]).stdout, "q^0\n");
        assert_eq!(go(&["arith", "mul", "-2", "-3"]).stdout, "q^6\n");
    }

    #[test]
    fn undefined_pairing_exit_code() {
        let o = go(&["eval", "<v[v1,u1] | u[u0,v0]>"]);
        assert_eq!(o.code, 2);
        assert_eq!(o.stderr, "pairing undefined: bases differ\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(go(&["frobnicate"]).code, 2);
        assert_eq!(go(&["psi-check", "--mutate", "clause-12"]).code, 2);
        assert_eq!(go(&["axioms", "--window", "0"]).code, 2);
        assert_eq!(go(&["eval", "u[u0"]).code, 2);
    }

    #[test]
    fn mutation_exit_code() {
        let o = go(&["psi-check", "--window", "3", "--mutate", "clause-5"]);
        assert_eq!(o.code, 1);
        assert!(
            o.stdout.lines().any(|l| l.starts_with("clause-5 ") && l.contains(": FAIL witness=")),
            "{}",
            o.stdout
        );
    }

    #[test]
    fn lang_type_text() {
        let o = go(&["lang-type", "--poly", "x1*x2 - 1", "--arity", "2", "--window", "6"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("cosets = 1\n"));
        assert!(o.stdout.contains("<= N_f = 4: PASS"));
    }
}
