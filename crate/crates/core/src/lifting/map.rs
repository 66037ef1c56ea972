use std::collections::BTreeMap;

use crate::bang::{BangElement, CanonicalKet};
use crate::basis::{Basis, Label};
use crate::error::{Error, Result};
use crate::vector::Vector;

/// A linear map `!W → V`, given by its values on canonical kets.
pub trait KetMap {
    fn image(&self, ket: &CanonicalKet) -> Vector;

    /// Rejects inputs outside the map's domain. The default accepts anything.
    fn check_input(&self, _eta: &BangElement) -> Result<()> {
        Ok(())
    }
}

/// Finite table `CanonicalKet → Vector` with every other ket sent to zero.
///
/// Lifting a single ket `(P, a)` only ever queries the kets `(P, b)` with
/// `b ≤ a` (see [`query_set`](super::query_set)), so a finite table is no
/// loss of generality for any given input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMapSpec {
    domain: Basis,
    codomain: Basis,
    table: BTreeMap<CanonicalKet, Vector>,
}

impl LinearMapSpec {
    pub fn new(domain: Basis, codomain: Basis) -> Self {
        LinearMapSpec {
            domain,
            codomain,
            table: BTreeMap::new(),
        }
    }

    /// Sets `φ(ket) = value`, replacing any earlier entry.
    pub fn insert(&mut self, ket: CanonicalKet, value: Vector) -> Result<()> {
        ket.labels().try_for_each(|l| self.domain.check_label(l))?;
        self.codomain.check_vector(&value)?;
        if value.is_zero() {
            self.table.remove(&ket);
        } else {
            self.table.insert(ket, value);
        }
        Ok(())
    }

    pub fn with(mut self, ket: CanonicalKet, value: Vector) -> Result<Self> {
        self.insert(ket, value)?;
        Ok(self)
    }

    pub fn domain(&self) -> &Basis {
        &self.domain
    }

    pub fn codomain(&self) -> &Basis {
        &self.codomain
    }

    pub fn entries(&self) -> impl Iterator<Item = (&CanonicalKet, &Vector)> {
        self.table.iter()
    }

    pub fn get(&self, ket: &CanonicalKet) -> Vector {
        self.table.get(ket).cloned().unwrap_or_default()
    }
}

impl KetMap for LinearMapSpec {
    fn image(&self, ket: &CanonicalKet) -> Vector {
        self.get(ket)
    }

    fn check_input(&self, eta: &BangElement) -> Result<()> {
        eta.labels().iter().try_for_each(|l| self.domain.check_label(l))
    }
}

/// The dereliction `d: !V → V` viewed as a map to lift.
#[derive(Debug, Clone, Copy, Default)]
pub struct Dereliction;

impl KetMap for Dereliction {
    fn image(&self, ket: &CanonicalKet) -> Vector {
        BangElement::from_ket(ket.clone()).dereliction()
    }
}

/// A linear map `ψ: W → V` given by the images of the domain basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixMapSpec {
    domain: Basis,
    codomain: Basis,
    images: BTreeMap<Label, Vector>,
}

impl MatrixMapSpec {
    /// The zero map.
    pub fn new(domain: Basis, codomain: Basis) -> Self {
        MatrixMapSpec {
            domain,
            codomain,
            images: BTreeMap::new(),
        }
    }

    pub fn identity(basis: Basis) -> Self {
        let images = basis
            .labels()
            .iter()
            .map(|l| (l.clone(), Vector::basis(l.clone())))
            .collect();
        MatrixMapSpec {
            domain: basis.clone(),
            codomain: basis,
            images,
        }
    }

    /// Sets `ψ(e_label) = value`.
    pub fn set(&mut self, label: Label, value: Vector) -> Result<()> {
        self.domain.check_label(&label)?;
        self.codomain.check_vector(&value)?;
        self.images.insert(label, value);
        Ok(())
    }

    pub fn with(mut self, label: impl Into<Label>, value: Vector) -> Result<Self> {
        self.set(label.into(), value)?;
        Ok(self)
    }

    pub fn domain(&self) -> &Basis {
        &self.domain
    }

    pub fn codomain(&self) -> &Basis {
        &self.codomain
    }

    pub fn image_of(&self, label: &Label) -> Vector {
        self.images.get(label).cloned().unwrap_or_default()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (l, c) in v.iter() {
            out.add_scaled(c, &self.image_of(l));
        }
        out
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &MatrixMapSpec) -> Result<MatrixMapSpec> {
        if inner.codomain != self.domain {
            return Err(Error::BasisMismatch {
                expected: self.domain.name().to_string(),
                found: inner.codomain.name().to_string(),
            });
        }
        let mut out = MatrixMapSpec::new(inner.domain.clone(), self.codomain.clone());
        for l in inner.domain.labels() {
            out.images.insert(l.clone(), self.apply(&inner.image_of(l)));
        }
        Ok(out)
    }

    pub fn check_input(&self, eta: &BangElement) -> Result<()> {
        eta.labels().iter().try_for_each(|l| self.domain.check_label(l))
    }
}

/// `ψ ∘ d: !W → V`, the map whose lift is `!ψ`.
#[derive(Debug, Clone, Copy)]
pub struct DerelictionThen<'a>(pub &'a MatrixMapSpec);

impl KetMap for DerelictionThen<'_> {
    fn image(&self, ket: &CanonicalKet) -> Vector {
        self.0.apply(&Dereliction.image(ket))
    }

    fn check_input(&self, eta: &BangElement) -> Result<()> {
        self.0.check_input(eta)
    }
}
