//! Command-line front end: an expression language for scalars, algebra
//! elements, bundle points and pairings, plus the verification subcommands.

pub mod commands;
pub mod eval;
pub mod syntax;

pub use commands::{run, Output};
