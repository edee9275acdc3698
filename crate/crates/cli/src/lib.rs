//! Library surface of the `mvfn` command-line tool: the expression language,
//! its evaluator, and multivector text/JSON input-output. The binary in
//! `main.rs` is a thin shell over these modules, which keeps every piece
//! testable in-process.

pub mod eval;
pub mod expr;
pub mod fmt;
