//! Basis labels and named basis contexts.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::vector::Vector;

/// Opaque basis index. Ordered by its text.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(name: impl Into<String>) -> Self {
        Label(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.to_string())
    }
}

/// A named, ordered basis `e_1, …, e_n`. The order is only used for
/// positional coordinates; internally every vector is a sparse label map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    name: String,
    labels: Vec<Label>,
}

impl Basis {
    pub fn new(name: impl Into<String>, labels: Vec<Label>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Basis {
            name: name.into(),
            labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.labels.contains(label)
    }

    pub fn check_label(&self, label: &Label) -> Result<()> {
        if self.contains(label) {
            Ok(())
        } else {
            Err(Error::Context {
                basis: self.name.clone(),
                label: label.clone(),
            })
        }
    }

    pub fn check_vector(&self, v: &Vector) -> Result<()> {
        v.labels().try_for_each(|l| self.check_label(l))
    }

    /// Builds a vector from coordinates listed in declaration order.
    pub fn vector(&self, coords: &[crate::Rational]) -> Result<Vector> {
        if coords.len() != self.dim() {
            return Err(Error::Arity {
                basis: self.name.clone(),
                expected: self.dim(),
                found: coords.len(),
            });
        }
        Ok(Vector::from_entries(
            self.labels.iter().cloned().zip(coords.iter().cloned()),
        ))
    }

    /// Coordinates of `v` in declaration order. `v` must lie in this basis.
    pub fn coords(&self, v: &Vector) -> Result<Vec<crate::Rational>> {
        self.check_vector(v)?;
        Ok(self.labels.iter().map(|l| v.get(l)).collect())
    }
}
