//! Line-oriented session language over the `sweedler` engine.
//!
//! A program declares bases, vectors, polynomials, elements of `!V` and
//! linear maps, then issues queries (`delta`, `eps`, `d`, `pair`, `raction`,
//! `creation`, `promote`, `map`, `fractions`). Each query prints one line.

pub mod ast;
pub mod error;
pub mod lexer;
pub mod parser;
pub mod render;
pub mod session;

pub use error::{CommandError, EvalError, SyntaxError};
pub use parser::parse;
pub use render::{render_output, render_value};
pub use session::{Config, Format, QueryOutput, Session, Value};
pub use sweedler::DEFAULT_PARTITION_CAP as DEFAULT_CAP;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 1;
    pub const EVAL: i32 = 2;
    pub const SIZE_LIMIT: i32 = 3;
    /// `--check` found a result that differs from its `expect:` annotation.
    pub const CHECK_FAILED: i32 = 4;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses and runs a whole program. With `check`, results are compared
/// against their `# expect:` annotations (text rendering) instead of
/// being printed.
pub fn run_program(src: &str, config: Config, check: bool) -> Outcome {
    let mut stdout = String::new();
    let mut stderr = String::new();
    let statements = match parse(src) {
        Ok(s) => s,
        Err(e) => {
            return Outcome {
                stdout,
                stderr: format!("{e}\n"),
                code: exit::PARSE,
            }
        }
    };
    let mut session = Session::new(config);
    let (mut passed, mut failed) = (0usize, 0usize);
    for result in session.run(&statements) {
        match result {
            Ok(out) if check => {
                let Some(expected) = &out.expect else { continue };
                let got = render_value(&out.value, Format::Text);
                if &got == expected {
                    passed += 1;
                    stdout.push_str(&format!("ok   {} {}\n", out.pos, out.command));
                } else {
                    failed += 1;
                    stdout.push_str(&format!(
                        "FAIL {} {}\n     expected: {expected}\n     got:      {got}\n",
                        out.pos, out.command
                    ));
                }
            }
            Ok(out) => {
                stdout.push_str(&render_output(&out));
                stdout.push('\n');
            }
            Err(e) => {
                stderr.push_str(&format!("{e}\n"));
                let code = if e.error.is_size_limit() {
                    exit::SIZE_LIMIT
                } else {
                    exit::EVAL
                };
                return Outcome { stdout, stderr, code };
            }
        }
    }
    let mut code = exit::OK;
    if check {
        stdout.push_str(&format!("check: {passed} passed, {failed} failed\n"));
        if failed > 0 {
            code = exit::CHECK_FAILED;
        }
    }
    Outcome { stdout, stderr, code }
}
