use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{write_combination, BangElement, CanonicalKet};
use crate::scalar::Rational;

/// An element of `!V ⊗ !V` in the ket ⊗ ket basis.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    terms: BTreeMap<(CanonicalKet, CanonicalKet), Rational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn add_term(&mut self, left: CanonicalKet, right: CanonicalKet, c: Rational) {
        add_to(&mut self.terms, (left, right), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalKet, &CanonicalKet, &Rational)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn coeff(&self, left: &CanonicalKet, right: &CanonicalKet) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// `a ⊗ b`
    pub fn outer(a: &BangElement, b: &BangElement) -> Self {
        let mut out = TensorElement::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                out.add_term(ka.clone(), kb.clone(), ca * cb);
            }
        }
        out
    }

    /// `x ⊗ y ↦ y ⊗ x`
    pub fn swap(&self) -> Self {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// `(ε ⊗ id)`
    pub fn counit_left(&self) -> BangElement {
        BangElement::from_terms(
            self.terms
                .iter()
                .filter(|((l, _), _)| l.is_vacuum())
                .map(|((_, r), c)| (r.clone(), c.clone())),
        )
    }

    /// `(id ⊗ ε)`
    pub fn counit_right(&self) -> BangElement {
        BangElement::from_terms(
            self.terms
                .iter()
                .filter(|((_, r), _)| r.is_vacuum())
                .map(|((l, _), c)| (l.clone(), c.clone())),
        )
    }

    /// `(Δ ⊗ id)`
    pub fn coproduct_left(&self) -> TensorPower {
        let mut out = TensorPower::zero(3);
        for ((l, r), c) in &self.terms {
            for (a, b, x) in BangElement::from_ket(l.clone()).coproduct().terms() {
                out.add_term(vec![a.clone(), b.clone(), r.clone()], c * x);
            }
        }
        out
    }

    /// `(id ⊗ Δ)`
    pub fn coproduct_right(&self) -> TensorPower {
        let mut out = TensorPower::zero(3);
        for ((l, r), c) in &self.terms {
            for (a, b, x) in BangElement::from_ket(r.clone()).coproduct().terms() {
                out.add_term(vec![l.clone(), a.clone(), b.clone()], c * x);
            }
        }
        out
    }

    /// `(F ⊗ F)` for a linear map `F` given on kets.
    pub fn try_map_factors<E>(
        &self,
        mut f: impl FnMut(&CanonicalKet) -> Result<BangElement, E>,
    ) -> Result<TensorElement, E> {
        let mut cache: BTreeMap<CanonicalKet, BangElement> = BTreeMap::new();
        let mut image = |k: &CanonicalKet| -> Result<BangElement, E> {
            if let Some(v) = cache.get(k) {
                return Ok(v.clone());
            }
            let v = f(k)?;
            cache.insert(k.clone(), v.clone());
            Ok(v)
        };
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            let part = TensorElement::outer(&image(l)?, &image(r)?);
            for ((a, b), x) in part.terms {
                out.add_term(a, b, c * x);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms.iter(), |f, (l, r)| write!(f, "{l} ⊗ {r}"))
    }
}

/// An element of `(!V)^{⊗k}` for fixed `k ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorPower {
    factors: usize,
    terms: BTreeMap<Vec<CanonicalKet>, Rational>,
}

impl TensorPower {
    pub fn zero(factors: usize) -> Self {
        TensorPower {
            factors,
            terms: BTreeMap::new(),
        }
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn add_term(&mut self, kets: Vec<CanonicalKet>, c: Rational) {
        debug_assert_eq!(kets.len(), self.factors);
        add_to(&mut self.terms, kets, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[CanonicalKet], &Rational)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Δ^{factors−1}(η)`, built by repeatedly splitting the last factor.
    /// `factors = 1` returns `η` itself. Coassociativity makes the choice of
    /// factor irrelevant.
    pub fn iterated_coproduct(eta: &BangElement, factors: usize) -> TensorPower {
        assert!(factors >= 1, "a tensor power needs at least one factor");
        let mut cur = TensorPower::zero(1);
        for (k, c) in eta.terms() {
            cur.add_term(vec![k.clone()], c.clone());
        }
        for _ in 1..factors {
            let mut next = TensorPower::zero(cur.factors + 1);
            for (kets, c) in &cur.terms {
                let (last, head) = kets.split_last().expect("non-empty");
                for (a, b, x) in BangElement::from_ket(last.clone()).coproduct().terms() {
                    let mut v = head.to_vec();
                    v.push(a.clone());
                    v.push(b.clone());
                    next.add_term(v, c * x);
                }
            }
            cur = next;
        }
        cur
    }
}

impl fmt::Display for TensorPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms.iter(), |f, kets| {
            let parts: Vec<String> = kets.iter().map(|k| k.to_string()).collect();
            f.write_str(&parts.join(" ⊗ "))
        })
    }
}

fn add_to<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}
