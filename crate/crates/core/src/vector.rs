//! Sparse vectors over opaque basis labels.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::basis::Label;
use crate::scalar::Rational;

/// Finitely supported map `Label → Rational` with no stored zeros, so
/// structural equality is equality of vectors. Used both for points `P ∈ V`
/// and for tangent directions `ν`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector {
    entries: BTreeMap<Label, Rational>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector::default()
    }

    /// The basis vector `e_label`.
    pub fn basis(label: impl Into<Label>) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(label.into(), Rational::one());
        Vector { entries }
    }

    /// Sums repeated labels and drops zeros.
    pub fn from_entries(entries: impl IntoIterator<Item = (Label, Rational)>) -> Self {
        let mut v = Vector::zero();
        for (l, c) in entries {
            v.add_at(l, c);
        }
        v
    }

    pub fn get(&self, label: &Label) -> Rational {
        self.entries.get(label).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &Rational)> {
        self.entries.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.entries.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            entries: self
                .entries
                .iter()
                .map(|(l, x)| (l.clone(), x * c))
                .collect(),
        }
    }

    pub fn add_at(&mut self, label: Label, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(label).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.retain(|_, x| !x.is_zero());
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: &Rational, other: &Vector) {
        for (l, x) in &other.entries {
            self.add_at(l.clone(), c * x);
        }
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scale(&-Rational::one())
    }
}

/// `{e1: 1/2, e3: -2}`, labels sorted; the zero vector is `{}`.
impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (l, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}: {c}")?;
        }
        f.write_str("}")
    }
}
