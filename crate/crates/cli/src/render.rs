//! Text and machine renderings of query results.
//!
//! Machine output is JSON Lines: one object per query,
//! `{"schema":"bang/1","command":…,"value":…}`, where `value` is tagged by
//! `kind` (`scalar`, `vector`, `bang`, `tensor`, `fractions`). Rationals are
//! `"p/q"` strings; points and vectors are label → rational maps; ket
//! contents are label → multiplicity maps.

use std::collections::BTreeMap;

use serde::Serialize;
use sweedler::{CanonicalKet, GeneralizedFraction, Rational, Vector};

use crate::session::{Format, QueryOutput, Value};

pub const SCHEMA: &str = "bang/1";

#[derive(Serialize)]
struct KetRecord {
    point: BTreeMap<String, String>,
    content: BTreeMap<String, u32>,
}

#[derive(Serialize)]
struct KetTerm {
    point: BTreeMap<String, String>,
    content: BTreeMap<String, u32>,
    coeff: String,
}

#[derive(Serialize)]
struct TensorTerm {
    left: KetRecord,
    right: KetRecord,
    coeff: String,
}

#[derive(Serialize)]
struct FractionTerm {
    point: BTreeMap<String, String>,
    exponents: BTreeMap<String, u32>,
    coeff: String,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum MachineValue {
    Scalar { value: String },
    Vector { entries: BTreeMap<String, String> },
    Bang { terms: Vec<KetTerm> },
    Tensor { terms: Vec<TensorTerm> },
    Fractions { terms: Vec<FractionTerm> },
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: &'static str,
    command: &'a str,
    value: MachineValue,
}

fn entries(v: &Vector) -> BTreeMap<String, String> {
    v.iter().map(|(l, c)| (l.to_string(), c.to_string())).collect()
}

fn ket_record(k: &CanonicalKet) -> KetRecord {
    KetRecord {
        point: entries(&k.point),
        content: k.content.iter().map(|(l, e)| (l.to_string(), e)).collect(),
    }
}

fn machine_value(value: &Value) -> MachineValue {
    match value {
        Value::Scalar(r) => MachineValue::Scalar { value: r.to_string() },
        Value::Vector { vector, .. } => MachineValue::Vector {
            entries: entries(vector),
        },
        Value::Bang(b) => MachineValue::Bang {
            terms: b
                .terms()
                .map(|(k, c)| {
                    let KetRecord { point, content } = ket_record(k);
                    KetTerm {
                        point,
                        content,
                        coeff: c.to_string(),
                    }
                })
                .collect(),
        },
        Value::Tensor(t) => MachineValue::Tensor {
            terms: t
                .terms()
                .map(|(l, r, c)| TensorTerm {
                    left: ket_record(l),
                    right: ket_record(r),
                    coeff: c.to_string(),
                })
                .collect(),
        },
        Value::Fractions(fs) => MachineValue::Fractions {
            terms: fs
                .iter()
                .map(|(f, c)| FractionTerm {
                    point: entries(&f.point),
                    exponents: f.exponents.iter().map(|(l, e)| (l.to_string(), e)).collect(),
                    coeff: c.to_string(),
                })
                .collect(),
        },
    }
}

fn fractions_text(fs: &[(GeneralizedFraction, Rational)]) -> String {
    use num_traits::{One, Signed};
    if fs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (f, c)) in fs.iter().enumerate() {
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(&f.to_string());
    }
    out
}

/// Renders one value. The machine form is the bare value object.
pub fn render_value(value: &Value, format: Format) -> String {
    match format {
        Format::Text => match value {
            Value::Scalar(r) => r.to_string(),
            Value::Vector { basis, vector } => {
                let coords: Vec<String> = basis
                    .labels()
                    .iter()
                    .map(|l| vector.get(l).to_string())
                    .collect();
                format!("({})", coords.join(", "))
            }
            Value::Bang(b) => b.to_string(),
            Value::Tensor(t) => t.to_string(),
            Value::Fractions(fs) => fractions_text(fs),
        },
        Format::Machine => serde_json::to_string(&machine_value(value)).expect("plain data serializes"),
    }
}

/// One output line for a query, in the format that was active when it ran.
pub fn render_output(out: &QueryOutput) -> String {
    match out.format {
        Format::Text => render_value(&out.value, Format::Text),
        Format::Machine => serde_json::to_string(&Envelope {
            schema: SCHEMA,
            command: &out.command,
            value: machine_value(&out.value),
        })
        .expect("plain data serializes"),
    }
}
