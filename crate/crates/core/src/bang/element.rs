use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::{write_combination, CanonicalKet, GeneralizedFraction, TensorElement};
use crate::basis::Label;
use crate::poly::Polynomial;
use crate::scalar::Rational;
use crate::vector::Vector;

/// An element of `!V`: a finite linear combination of canonical kets, no
/// zero coefficients stored. The empty combination is the zero of `!V`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BangElement {
    terms: BTreeMap<CanonicalKet, Rational>,
}

impl BangElement {
    pub fn zero() -> Self {
        BangElement::default()
    }

    /// `|0⟩_P`
    pub fn vacuum(point: Vector) -> Self {
        BangElement::from_ket(CanonicalKet::vacuum(point))
    }

    pub fn from_ket(ket: CanonicalKet) -> Self {
        BangElement::from_terms([(ket, Rational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (CanonicalKet, Rational)>) -> Self {
        let mut out = BangElement::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// `|ν_1, …, ν_s⟩_P = ∂_{ν_1} ⋯ ∂_{ν_s} |0⟩_P`, expanded multilinearly
    /// into canonical kets. Symmetric in the `ν_j`.
    pub fn ket(point: Vector, directions: &[Vector]) -> Self {
        directions
            .iter()
            .fold(BangElement::vacuum(point), |acc, v| acc.creation(v))
    }

    pub fn add_term(&mut self, ket: CanonicalKet, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(ket) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: &Rational, other: &BangElement) {
        for (k, x) in &other.terms {
            self.add_term(k.clone(), c * x);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalKet, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ket: &CanonicalKet) -> Rational {
        self.terms.get(ket).cloned().unwrap_or_else(Rational::zero)
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

    pub fn scale(&self, c: &Rational) -> BangElement {
        let mut out = BangElement::zero();
        out.add_scaled(c, self);
        out
    }

    /// Every label mentioned by a point or a content.
    pub fn labels(&self) -> BTreeSet<Label> {
        self.terms
            .keys()
            .flat_map(|k| k.labels().cloned())
            .collect()
    }

    pub fn points(&self) -> BTreeSet<Vector> {
        self.terms.keys().map(|k| k.point.clone()).collect()
    }

    /// Highest ket degree present; `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(CanonicalKet::degree).max()
    }

    /// Applies `f` to every ket and recombines linearly.
    pub fn map_kets(&self, mut f: impl FnMut(&CanonicalKet) -> BangElement) -> BangElement {
        let mut out = BangElement::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// The creation operator `∂_ν`. On kets it appends `ν` to the list of
    /// creation vectors: `∂_{e_i} (P, a) = (P, a + e_i)`.
    pub fn creation(&self, direction: &Vector) -> BangElement {
        let mut out = BangElement::zero();
        for (k, c) in &self.terms {
            for (l, x) in direction.iter() {
                out.add_term(k.with_content(k.content.raised(l)), c * x);
            }
        }
        out
    }

    /// Action of the coordinate function `x_i = z_i + P_i`:
    /// `x_i (P, a) = a_i (P, a − e_i) + P_i (P, a)`.
    pub fn x_action(&self, label: &Label) -> BangElement {
        let mut out = BangElement::zero();
        for (k, c) in &self.terms {
            let a_i = k.content.get(label);
            if let Some(lower) = k.content.lowered(label) {
                out.add_term(k.with_content(lower), c * Rational::from_integer(a_i.into()));
            }
            out.add_term(k.clone(), c * k.point.get(label));
        }
        out
    }

    /// Module action of the polynomial ring `R = Sym(V*)`.
    pub fn r_action(&self, f: &Polynomial) -> BangElement {
        let mut out = BangElement::zero();
        for (m, c) in f.terms() {
            let mut acted = self.clone();
            for l in m.expand() {
                acted = acted.x_action(&l);
            }
            out.add_scaled(c, &acted);
        }
        out
    }

    /// The counit `res = Σ_P res_P`: the sum of the vacuum coefficients.
    pub fn counit(&self) -> Rational {
        self.terms
            .iter()
            .filter(|(k, _)| k.is_vacuum())
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// `d|0⟩_P = P`, `d|ν⟩_P = ν`, and `d` kills kets of degree at least 2.
    pub fn dereliction(&self) -> Vector {
        let mut out = Vector::zero();
        for (k, c) in &self.terms {
            match k.degree() {
                0 => out.add_scaled(c, &k.point),
                1 => {
                    let l = k.content.labels().next().expect("degree one").clone();
                    out.add_at(l, c.clone());
                }
                _ => {}
            }
        }
        out
    }

    /// `res(f·η)`, computed by differentiating: each ket `(P, a)` pairs to
    /// `∂^a f` evaluated at `P`.
    pub fn residue_pair(&self, f: &Polynomial) -> Rational {
        let mut total = Rational::zero();
        for (k, c) in &self.terms {
            let mut g = f.clone();
            for l in k.creation_labels() {
                if g.is_zero() {
                    break;
                }
                g = g.partial(&l);
            }
            total += c * g.eval(&k.point);
        }
        total
    }

    /// `Δ(P, a) = Σ_{0 ≤ b ≤ a} Π_i C(a_i, b_i) · (P, b) ⊗ (P, a − b)`, the
    /// subset sum over the creation vectors with repeated vectors merged.
    pub fn coproduct(&self) -> TensorElement {
        let mut out = TensorElement::zero();
        for (k, c) in &self.terms {
            for b in k.content.divisors() {
                let rest = k.content.checked_sub(&b).expect("divisor");
                let w = Rational::from_integer(k.content.binomial(&b));
                out.add_term(k.with_content(b), k.with_content(rest), c * w);
            }
        }
        out
    }

    /// Rewrites in the generalised-fraction basis: `(P, a) = a! · [1/z^a dz/z]_P`.
    pub fn to_fractions(&self) -> Vec<(GeneralizedFraction, Rational)> {
        self.terms
            .iter()
            .map(|(k, c)| {
                let frac = GeneralizedFraction::new(k.point.clone(), k.content.clone());
                (frac, c * Rational::from_integer(k.content.factorial()))
            })
            .collect()
    }

    pub fn from_fractions<'a>(
        fractions: impl IntoIterator<Item = &'a (GeneralizedFraction, Rational)>,
    ) -> BangElement {
        let mut out = BangElement::zero();
        for (frac, c) in fractions {
            let ket = CanonicalKet::new(frac.point.clone(), frac.exponents.clone());
            let fact = Rational::from_integer(frac.exponents.factorial());
            out.add_term(ket, c / fact);
        }
        out
    }
}

impl Add for &BangElement {
    type Output = BangElement;
    fn add(self, rhs: &BangElement) -> BangElement {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &BangElement {
    type Output = BangElement;
    fn sub(self, rhs: &BangElement) -> BangElement {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &BangElement {
    type Output = BangElement;
    fn neg(self) -> BangElement {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for BangElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms.iter(), |f, k| write!(f, "{k}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiindex::Multiindex;
    use crate::scalar::int;

    fn e(l: &str) -> Vector {
        Vector::basis(l)
    }

    fn pt(pairs: &[(&str, i64)]) -> Vector {
        Vector::from_entries(pairs.iter().map(|(l, c)| (Label::from(*l), int(*c))))
    }

    fn ket(p: &Vector, content: &[(&str, u32)]) -> CanonicalKet {
        CanonicalKet::new(
            p.clone(),
            Multiindex::from_exps(content.iter().map(|(l, x)| (Label::from(*l), *x))),
        )
    }

    #[test]
    fn vacuum_is_single_term() {
        let v = BangElement::vacuum(Vector::zero());
        assert_eq!(v.len(), 1);
        assert_eq!(v.coeff(&CanonicalKet::vacuum(Vector::zero())), int(1));
        assert_eq!(v.to_string(), "|0⟩_{0}");
        assert_eq!(BangElement::vacuum(pt(&[("e1", 2)])).to_string(), "|0⟩_{e1:2}");
        assert_ne!(BangElement::vacuum(Vector::zero()), BangElement::vacuum(pt(&[("e1", 2)])));
    }

    #[test]
    fn ket_expansion_examples() {
        let p = pt(&[("e1", 1)]);
        assert_eq!(BangElement::ket(p.clone(), &[]), BangElement::vacuum(p.clone()));
        assert!(BangElement::ket(p.clone(), &[Vector::zero()]).is_zero());
        let sum = &e("e1") + &e("e2");
        assert_eq!(
            BangElement::ket(p.clone(), &[sum]),
            &BangElement::ket(p.clone(), &[e("e1")]) + &BangElement::ket(p, &[e("e2")])
        );
    }

    #[test]
    fn creation_examples() {
        let p = pt(&[("e2", -1)]);
        let vac = BangElement::vacuum(p.clone());
        assert_eq!(vac.creation(&e("e1")), BangElement::ket(p.clone(), &[e("e1")]));
        assert!(vac.creation(&Vector::zero()).is_zero());
    }

    #[test]
    fn coproduct_examples() {
        let p = pt(&[("e1", 3)]);
        let vac = CanonicalKet::vacuum(p.clone());
        let d = BangElement::vacuum(p.clone()).coproduct();
        assert_eq!(d.len(), 1);
        assert_eq!(d.coeff(&vac, &vac), int(1));

        let k1 = ket(&p, &[("e1", 1)]);
        let d = BangElement::from_ket(k1.clone()).coproduct();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&k1, &vac), int(1));
        assert_eq!(d.coeff(&vac, &k1), int(1));

        let k2 = ket(&p, &[("e1", 2)]);
        let d = BangElement::from_ket(k2.clone()).coproduct();
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&k2, &vac), int(1));
        assert_eq!(d.coeff(&k1, &k1), int(2));
        assert_eq!(d.coeff(&vac, &k2), int(1));
    }

    #[test]
    fn counit_examples() {
        let p = pt(&[("e1", 1)]);
        let q = pt(&[("e2", 1)]);
        assert_eq!(BangElement::vacuum(p.clone()).counit(), int(1));
        assert_eq!(BangElement::ket(p.clone(), &[e("e1"), e("e2")]).counit(), int(0));
        let mix = &BangElement::vacuum(p).scale(&int(3)) - &BangElement::vacuum(q).scale(&int(2));
        assert_eq!(mix.counit(), int(1));
    }

    #[test]
    fn dereliction_examples() {
        let p = pt(&[("e1", 2)]);
        assert_eq!(BangElement::vacuum(p.clone()).dereliction(), p);
        assert_eq!(BangElement::ket(p.clone(), &[e("e2")]).dereliction(), e("e2"));
        assert!(BangElement::ket(p, &[e("e1"), e("e2")]).dereliction().is_zero());
    }

    #[test]
    fn r_action_examples() {
        let p = pt(&[("e1", 5), ("e2", -2)]);
        let vac = BangElement::vacuum(p.clone());
        assert_eq!(vac.r_action(&Polynomial::var("e1")), vac.scale(&int(5)));
        let eta = BangElement::ket(p, &[e("e1"), e("e2"), e("e2")]);
        assert_eq!(eta.r_action(&Polynomial::one()), eta);
        assert!(eta.r_action(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn residue_pair_examples() {
        let p = pt(&[("e1", 3), ("e2", 7)]);
        let vac = BangElement::vacuum(p.clone());
        assert_eq!(vac.residue_pair(&Polynomial::var("e2")), int(7));
        let eta = &BangElement::ket(p.clone(), &[e("e1")]) + &vac.scale(&int(4));
        assert_eq!(eta.residue_pair(&Polynomial::one()), eta.counit());
        let sq = &Polynomial::var("e1") * &Polynomial::var("e1");
        let one_dim = BangElement::ket(pt(&[("e1", 3)]), &[e("e1")]);
        assert_eq!(one_dim.residue_pair(&sq), int(6));
    }

    #[test]
    fn fraction_examples() {
        let p = pt(&[("e1", 1)]);
        let vac = BangElement::vacuum(p.clone());
        let fr = vac.to_fractions();
        assert_eq!(fr.len(), 1);
        assert!(fr[0].0.exponents.is_one());
        assert_eq!(fr[0].1, int(1));

        let twice = BangElement::ket(p.clone(), &[e("e1"), e("e1")]);
        let fr = twice.to_fractions();
        assert_eq!(fr[0].0.exponents, Multiindex::single("e1", 2));
        assert_eq!(fr[0].1, int(2));
        assert_eq!(BangElement::from_fractions(&fr), twice);
    }

    #[test]
    fn zero_maps_to_zero() {
        let z = BangElement::zero();
        assert!(z.creation(&e("e1")).is_zero());
        assert!(z.coproduct().is_zero());
        assert_eq!(z.counit(), int(0));
        assert!(z.dereliction().is_zero());
        assert!(z.r_action(&Polynomial::var("e1")).is_zero());
        assert_eq!(z.to_string(), "0");
    }
}
