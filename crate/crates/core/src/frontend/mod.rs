//! The `.solv` script format: parser, evaluator and the entry points used
//! by the `solvkit` binary.
//!
//! A script declares an algebra, then ideals, submodules, presentations and
//! homomorphisms over it, and runs commands on them:
//!
//! ```text
//! algebra W field QQ gens x d order deglex(x, d)
//! rel d*x = x*d + 1
//! ideal I = [x, d]
//! gb I
//! ```
//!
//! prints `[ 1 ]`.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod session;

use std::fmt;

use crate::field::Field;

pub use ast::Pos;
pub use parser::{is_complete, parse};
pub use session::Session;

/// A diagnostic tied to a script position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptError {
    pub pos: Pos,
    pub message: String,
}

impl ScriptError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        ScriptError {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.pos.line, self.pos.col, self.message
        )
    }
}

impl std::error::Error for ScriptError {}

/// Evaluation switches shared by `run` and `repl`.
#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Emit one JSON object per result line instead of plain text.
    pub json: bool,
    /// Replace the coefficient field of every declared algebra.
    pub field: Option<Field>,
    /// Print every division step to the diagnostic stream.
    pub trace: bool,
}

/// Everything a script run produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Parses and runs a whole script, stopping at the first hard error.
pub fn run_script(src: &str, options: &Options) -> Transcript {
    let mut t = Transcript::default();
    let stmts = match parse(src) {
        Ok(s) => s,
        Err(e) => {
            t.stderr = format!("error: {e}\n");
            t.exit_code = 2;
            return t;
        }
    };
    let mut session = Session::new(options.clone());
    let mut result = Ok(());
    for stmt in &stmts {
        result = session.execute(stmt);
        if result.is_err() {
            break;
        }
    }
    if result.is_ok() {
        result = session.finish();
    }
    t.stdout = session.take_stdout();
    t.stderr = session.take_stderr();
    if let Err(e) = result {
        t.stderr.push_str(&format!("error: {e}\n"));
        t.exit_code = 1;
    }
    t
}

/// Parses `QQ`, `GF 7`, `GF(7)` or `GF7`.
pub fn parse_field(s: &str) -> Result<Field, String> {
    let s = s.trim();
    if s == "QQ" {
        return Ok(Field::Rational);
    }
    let rest = s
        .strip_prefix("GF")
        .ok_or_else(|| format!("unknown field '{s}' (expected QQ or GF <p>)"))?;
    let digits = rest
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    let p: u64 = digits
        .parse()
        .map_err(|_| format!("bad modulus in '{s}'"))?;
    Field::prime(p).map_err(|e| e.to_string())
}
