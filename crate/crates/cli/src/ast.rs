//! Parsed statements. Every node renders back to canonical source text, and
//! parsing that text yields the same node.

use std::fmt;

use num_traits::{One, Signed};
use sweedler::{Multiindex, Polynomial, Rational};

/// A vector operand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VecRef {
    Name(String),
    /// Positional coordinates; the basis comes from context.
    Tuple(Vec<Rational>),
    /// `W(1, 0)`
    Typed(String, Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyRef {
    Name(String),
    Literal { basis: String, poly: Polynomial },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primary {
    /// `ket[P; v1, v2]`
    Ket { point: VecRef, vectors: Vec<VecRef> },
    Name(String),
    Group(BangExpr),
}

/// `Σ c_i · primary_i`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BangExpr {
    pub terms: Vec<(Rational, Primary)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryKind {
    Delta,
    Counit,
    Dereliction,
    Fractions,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Query {
    /// `delta`, `eps`, `d`, `fractions`
    Unary(QueryKind, BangExpr),
    Pair(PolyRef, BangExpr),
    RAction(PolyRef, BangExpr),
    Creation(VecRef, BangExpr),
    Promote(String, BangExpr),
    Map(String, BangExpr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KetPattern {
    pub content: Multiindex,
    pub point: VecRef,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Basis {
        name: String,
        labels: Vec<String>,
    },
    LetVector {
        name: String,
        basis: String,
        coords: Vec<Rational>,
    },
    LetPoly {
        name: String,
        basis: String,
        poly: Polynomial,
    },
    LetBang {
        name: String,
        expr: BangExpr,
    },
    LinMap {
        name: String,
        domain: String,
        codomain: String,
        entries: Vec<(KetPattern, Vec<Rational>)>,
    },
    Linear {
        name: String,
        domain: String,
        codomain: String,
        entries: Vec<(String, Vec<Rational>)>,
    },
    Set {
        option: String,
        value: String,
    },
    Query(Query),
}

/// A command with its source position and optional `# expect:` annotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub command: Command,
    pub pos: crate::lexer::Pos,
    pub expect: Option<String>,
}

fn write_tuple(f: &mut fmt::Formatter<'_>, coords: &[Rational]) -> fmt::Result {
    let parts: Vec<String> = coords.iter().map(ToString::to_string).collect();
    write!(f, "({})", parts.join(", "))
}

impl fmt::Display for VecRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VecRef::Name(n) => f.write_str(n),
            VecRef::Tuple(c) => write_tuple(f, c),
            VecRef::Typed(b, c) => {
                f.write_str(b)?;
                write_tuple(f, c)
            }
        }
    }
}

impl fmt::Display for PolyRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyRef::Name(n) => f.write_str(n),
            PolyRef::Literal { basis, poly } => write!(f, "poly[{basis}]{{ {poly} }}"),
        }
    }
}

impl fmt::Display for Primary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Primary::Ket { point, vectors } => {
                write!(f, "ket[{point};")?;
                for (i, v) in vectors.iter().enumerate() {
                    f.write_str(if i == 0 { " " } else { ", " })?;
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
            Primary::Name(n) => f.write_str(n),
            Primary::Group(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for BangExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, p)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag} * ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl QueryKind {
    pub fn keyword(self) -> &'static str {
        match self {
            QueryKind::Delta => "delta",
            QueryKind::Counit => "eps",
            QueryKind::Dereliction => "d",
            QueryKind::Fractions => "fractions",
        }
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::Unary(k, e) => write!(f, "{} {e}", k.keyword()),
            Query::Pair(p, e) => write!(f, "pair {p} {e}"),
            Query::RAction(p, e) => write!(f, "raction {p} {e}"),
            Query::Creation(v, e) => write!(f, "creation {v} {e}"),
            Query::Promote(n, e) => write!(f, "promote {n} {e}"),
            Query::Map(n, e) => write!(f, "map {n} {e}"),
        }
    }
}

impl fmt::Display for KetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}|_{}", self.content, self.point)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Basis { name, labels } => write!(f, "basis {name} = {{ {} }};", labels.join(" ")),
            Command::LetVector { name, basis, coords } => {
                write!(f, "let {name} : {basis} = ")?;
                write_tuple(f, coords)?;
                f.write_str(";")
            }
            Command::LetPoly { name, basis, poly } => {
                write!(f, "let {name} = poly[{basis}]{{ {poly} }};")
            }
            Command::LetBang { name, expr } => write!(f, "let {name} = {expr};"),
            Command::LinMap {
                name,
                domain,
                codomain,
                entries,
            } => {
                write!(f, "linmap {name} : !{domain} -> {codomain} {{")?;
                for (pat, v) in entries {
                    write!(f, " {pat} -> ")?;
                    write_tuple(f, v)?;
                    f.write_str(";")?;
                }
                f.write_str(" }")
            }
            Command::Linear {
                name,
                domain,
                codomain,
                entries,
            } => {
                write!(f, "linear {name} : {domain} -> {codomain} {{")?;
                for (l, v) in entries {
                    write!(f, " {l} -> ")?;
                    write_tuple(f, v)?;
                    f.write_str(";")?;
                }
                f.write_str(" }")
            }
            Command::Set { option, value } => write!(f, "set {option} {value};"),
            Command::Query(q) => write!(f, "{q};"),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.command)?;
        if let Some(e) = &self.expect {
            write!(f, " # expect: {e}")?;
        }
        Ok(())
    }
}

/// Canonical source for a whole program, one statement per line.
pub fn render_source(statements: &[Statement]) -> String {
    statements.iter().map(|s| format!("{s}\n")).collect()
}
