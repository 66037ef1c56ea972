//! Statement execution against a mutable session of named bindings.

use std::collections::BTreeMap;
use std::str::FromStr;

use sweedler::{
    bang_map, promote, BangElement, Basis, CanonicalKet, GeneralizedFraction, Label,
    LinearMapSpec, MatrixMapSpec, Polynomial, Rational, TensorElement, Vector,
    DEFAULT_PARTITION_CAP,
};

use crate::ast::*;
use crate::error::{CommandError, EvalError};
use crate::lexer::Pos;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "machine" => Ok(Format::Machine),
            other => Err(format!("unknown format `{other}` (expected text or machine)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub partition_cap: usize,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            partition_cap: DEFAULT_PARTITION_CAP,
            format: Format::Text,
        }
    }
}

/// The result of a query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Vector { basis: Basis, vector: Vector },
    Bang(BangElement),
    Tensor(TensorElement),
    Fractions(Vec<(GeneralizedFraction, Rational)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryOutput {
    /// Canonical source of the query.
    pub command: String,
    pub pos: Pos,
    pub value: Value,
    /// Format in force when the query ran.
    pub format: Format,
    pub expect: Option<String>,
}

#[derive(Debug, Clone)]
struct Typed {
    basis: String,
    elem: BangElement,
}

#[derive(Debug, Clone, Default)]
pub struct Session {
    bases: BTreeMap<String, Basis>,
    vectors: BTreeMap<String, (String, Vector)>,
    polys: BTreeMap<String, (String, Polynomial)>,
    bangs: BTreeMap<String, Typed>,
    linmaps: BTreeMap<String, LinearMapSpec>,
    linears: BTreeMap<String, MatrixMapSpec>,
    pub config: Config,
}

type EResult<T> = Result<T, EvalError>;

fn define<T>(map: &mut BTreeMap<String, T>, kind: &'static str, name: &str, value: T) -> EResult<()> {
    if map.contains_key(name) {
        return Err(EvalError::Redefinition {
            kind,
            name: name.to_string(),
        });
    }
    map.insert(name.to_string(), value);
    Ok(())
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &'static str, name: &str) -> EResult<&'a T> {
    map.get(name).ok_or_else(|| EvalError::UnknownName {
        kind,
        name: name.to_string(),
    })
}

fn same_basis(expected: &str, found: &str) -> EResult<()> {
    if expected == found {
        Ok(())
    } else {
        Err(EvalError::MixedBases(expected.to_string(), found.to_string()))
    }
}

impl Session {
    pub fn new(config: Config) -> Self {
        Session {
            config,
            ..Session::default()
        }
    }

    /// Runs statements in order, stopping after the first failure. The
    /// returned list holds one entry per query, plus the error if any.
    pub fn run(&mut self, statements: &[Statement]) -> Vec<Result<QueryOutput, CommandError>> {
        let mut out = Vec::new();
        for stmt in statements {
            match self.execute(stmt) {
                Ok(Some(o)) => out.push(Ok(o)),
                Ok(None) => {}
                Err(e) => {
                    out.push(Err(e));
                    break;
                }
            }
        }
        out
    }

    pub fn execute(&mut self, stmt: &Statement) -> Result<Option<QueryOutput>, CommandError> {
        self.execute_command(&stmt.command)
            .map(|value| {
                value.map(|value| QueryOutput {
                    command: stmt.command.to_string(),
                    pos: stmt.pos,
                    value,
                    format: self.config.format,
                    expect: stmt.expect.clone(),
                })
            })
            .map_err(|error| CommandError {
                pos: stmt.pos,
                source_text: stmt.command.to_string(),
                error,
            })
    }

    fn execute_command(&mut self, cmd: &Command) -> EResult<Option<Value>> {
        match cmd {
            Command::Basis { name, labels } => {
                let basis = Basis::new(name.clone(), labels.iter().map(Label::new).collect())?;
                define(&mut self.bases, "basis", name, basis)?;
            }
            Command::LetVector { name, basis, coords } => {
                let v = lookup(&self.bases, "basis", basis)?.vector(coords)?;
                define(&mut self.vectors, "vector", name, (basis.clone(), v))?;
            }
            Command::LetPoly { name, basis, poly } => {
                self.check_poly(basis, poly)?;
                define(&mut self.polys, "polynomial", name, (basis.clone(), poly.clone()))?;
            }
            Command::LetBang { name, expr } => {
                let value = self.eval_expr(expr)?;
                define(&mut self.bangs, "element", name, value)?;
            }
            Command::LinMap {
                name,
                domain,
                codomain,
                entries,
            } => {
                let dom = lookup(&self.bases, "basis", domain)?.clone();
                let cod = lookup(&self.bases, "basis", codomain)?.clone();
                let mut phi = LinearMapSpec::new(dom, cod.clone());
                for (pat, value) in entries {
                    let point = self.resolve_vector(&pat.point, Some(domain))?;
                    let ket = CanonicalKet::new(point, pat.content.clone());
                    phi.insert(ket, cod.vector(value)?)?;
                }
                define(&mut self.linmaps, "linmap", name, phi)?;
            }
            Command::Linear {
                name,
                domain,
                codomain,
                entries,
            } => {
                let dom = lookup(&self.bases, "basis", domain)?.clone();
                let cod = lookup(&self.bases, "basis", codomain)?.clone();
                let mut psi = MatrixMapSpec::new(dom, cod.clone());
                for (label, value) in entries {
                    psi.set(Label::new(label), cod.vector(value)?)?;
                }
                define(&mut self.linears, "linear map", name, psi)?;
            }
            Command::Set { option, value } => self.set_option(option, value)?,
            Command::Query(q) => return self.query(q).map(Some),
        }
        Ok(None)
    }

    fn set_option(&mut self, option: &str, value: &str) -> EResult<()> {
        let bad = || EvalError::BadOption {
            option: option.to_string(),
            value: value.to_string(),
        };
        match option {
            "cap" => self.config.partition_cap = value.parse().map_err(|_| bad())?,
            "format" => self.config.format = value.parse().map_err(|_| bad())?,
            other => return Err(EvalError::UnknownOption(other.to_string())),
        }
        Ok(())
    }

    fn query(&self, q: &Query) -> EResult<Value> {
        Ok(match q {
            Query::Unary(kind, e) => {
                let t = self.eval_expr(e)?;
                match kind {
                    QueryKind::Delta => Value::Tensor(t.elem.coproduct()),
                    QueryKind::Counit => Value::Scalar(t.elem.counit()),
                    QueryKind::Dereliction => Value::Vector {
                        basis: self.bases[&t.basis].clone(),
                        vector: t.elem.dereliction(),
                    },
                    QueryKind::Fractions => Value::Fractions(t.elem.to_fractions()),
                }
            }
            Query::Pair(p, e) => {
                let t = self.eval_expr(e)?;
                let f = self.resolve_poly(p, &t.basis)?;
                Value::Scalar(t.elem.residue_pair(&f))
            }
            Query::RAction(p, e) => {
                let t = self.eval_expr(e)?;
                let f = self.resolve_poly(p, &t.basis)?;
                Value::Bang(t.elem.r_action(&f))
            }
            Query::Creation(v, e) => {
                let t = self.eval_expr(e)?;
                let nu = self.resolve_vector(v, Some(&t.basis))?;
                Value::Bang(t.elem.creation(&nu))
            }
            Query::Promote(name, e) => {
                let phi = lookup(&self.linmaps, "linmap", name)?;
                let t = self.eval_expr(e)?;
                same_basis(phi.domain().name(), &t.basis)?;
                Value::Bang(promote(phi, &t.elem, self.config.partition_cap)?)
            }
            Query::Map(name, e) => {
                let psi = lookup(&self.linears, "linear map", name)?;
                let t = self.eval_expr(e)?;
                same_basis(psi.domain().name(), &t.basis)?;
                Value::Bang(bang_map(psi, &t.elem)?)
            }
        })
    }

    fn check_poly(&self, basis: &str, f: &Polynomial) -> EResult<()> {
        let b = lookup(&self.bases, "basis", basis)?;
        for l in f.variables() {
            b.check_label(&l)?;
        }
        Ok(())
    }

    fn resolve_poly(&self, p: &PolyRef, basis: &str) -> EResult<Polynomial> {
        let (pb, f) = match p {
            PolyRef::Name(n) => {
                let (pb, f) = lookup(&self.polys, "polynomial", n)?;
                (pb.clone(), f.clone())
            }
            PolyRef::Literal { basis: pb, poly } => {
                self.check_poly(pb, poly)?;
                (pb.clone(), poly.clone())
            }
        };
        same_basis(basis, &pb)?;
        Ok(f)
    }

    /// Resolves a vector operand, returning its basis name and value.
    fn resolve_typed_vector(&self, v: &VecRef, expected: Option<&str>) -> EResult<(String, Vector)> {
        let (basis, vector) = match v {
            VecRef::Name(n) => lookup(&self.vectors, "vector", n)?.clone(),
            VecRef::Tuple(coords) => {
                let b = expected.ok_or(EvalError::UntypedTuple)?;
                let v = lookup(&self.bases, "basis", b)?.vector(coords)?;
                (b.to_string(), v)
            }
            VecRef::Typed(b, coords) => {
                let v = lookup(&self.bases, "basis", b)?.vector(coords)?;
                (b.clone(), v)
            }
        };
        if let Some(e) = expected {
            same_basis(e, &basis)?;
        }
        Ok((basis, vector))
    }

    fn resolve_vector(&self, v: &VecRef, expected: Option<&str>) -> EResult<Vector> {
        self.resolve_typed_vector(v, expected).map(|(_, v)| v)
    }

    fn eval_expr(&self, e: &BangExpr) -> EResult<Typed> {
        let mut basis: Option<String> = None;
        let mut acc = BangElement::zero();
        for (c, p) in &e.terms {
            let t = self.eval_primary(p)?;
            match &basis {
                Some(b) => same_basis(b, &t.basis)?,
                None => basis = Some(t.basis.clone()),
            }
            acc.add_scaled(c, &t.elem);
        }
        Ok(Typed {
            basis: basis.expect("parser never produces an empty expression"),
            elem: acc,
        })
    }

    fn eval_primary(&self, p: &Primary) -> EResult<Typed> {
        match p {
            Primary::Name(n) => Ok(lookup(&self.bangs, "element", n)?.clone()),
            Primary::Group(e) => self.eval_expr(e),
            Primary::Ket { point, vectors } => {
                let (basis, point) = self.resolve_typed_vector(point, None)?;
                let vs = vectors
                    .iter()
                    .map(|v| self.resolve_vector(v, Some(&basis)))
                    .collect::<EResult<Vec<_>>>()?;
                Ok(Typed {
                    basis,
                    elem: BangElement::ket(point, &vs),
                })
            }
        }
    }
}
