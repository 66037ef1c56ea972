#![allow(dead_code)]

use proptest::collection::vec;
use proptest::prelude::*;
use sweedler::{
    query_set, BangElement, Basis, CanonicalKet, Label, LinearMapSpec, Multiindex, Polynomial,
    Rational, Vector,
};

pub const W_LABELS: [&str; 3] = ["e1", "e2", "e3"];
pub const V_LABELS: [&str; 2] = ["f1", "f2"];

pub fn basis(name: &str, labels: &[&str]) -> Basis {
    Basis::new(name, labels.iter().map(|l| Label::from(*l)).collect()).unwrap()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=5).prop_map(|(p, q)| sweedler::scalar::ratio(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-5i64..=-1, 1i64..=5], 1i64..=5).prop_map(|(p, q)| sweedler::scalar::ratio(p, q))
}

pub fn vector_over(labels: &'static [&'static str]) -> impl Strategy<Value = Vector> {
    vec(rational(), labels.len()).prop_map(move |cs| {
        Vector::from_entries(labels.iter().map(|l| Label::from(*l)).zip(cs))
    })
}

pub fn multiindex(labels: &'static [&'static str], max_degree: u32) -> impl Strategy<Value = Multiindex> {
    vec(0..labels.len(), 0..=max_degree as usize).prop_map(move |idx| {
        let ls: Vec<Label> = idx.iter().map(|&i| Label::from(labels[i])).collect();
        Multiindex::from_labels(ls.iter())
    })
}

/// Random element with 1..=4 terms over at most two points.
pub fn bang_element(labels: &'static [&'static str], max_degree: u32) -> impl Strategy<Value = BangElement> {
    (vector_over(labels), vector_over(labels)).prop_flat_map(move |(p, q)| {
        vec(
            (prop::bool::ANY, multiindex(labels, max_degree), nonzero_rational()),
            1..=4,
        )
        .prop_map(move |terms| {
            BangElement::from_terms(terms.into_iter().map(|(first, m, c)| {
                let pt = if first { p.clone() } else { q.clone() };
                (CanonicalKet::new(pt, m), c)
            }))
        })
    })
}

/// A single ket `(P, a)` with coefficient 1.
pub fn single_ket(labels: &'static [&'static str], max_degree: u32) -> impl Strategy<Value = BangElement> {
    (vector_over(labels), multiindex(labels, max_degree))
        .prop_map(|(p, m)| BangElement::from_ket(CanonicalKet::new(p, m)))
}

pub fn polynomial(labels: &'static [&'static str], max_degree: u32) -> impl Strategy<Value = Polynomial> {
    vec((multiindex(labels, max_degree), rational()), 0..=4).prop_map(Polynomial::from_terms)
}

/// `η` together with a random table covering every ket its lift queries.
/// Roughly one entry in five is left at zero.
pub fn element_with_table(max_degree: u32) -> impl Strategy<Value = (BangElement, LinearMapSpec)> {
    bang_element(&W_LABELS, max_degree).prop_flat_map(|eta| {
        let queries: Vec<CanonicalKet> = query_set(&eta).into_iter().collect();
        let n = queries.len();
        (
            Just(eta),
            Just(queries),
            vec((0u8..5, vector_over(&V_LABELS)), n),
        )
            .prop_map(|(eta, queries, values)| {
                let mut phi = LinearMapSpec::new(basis("W", &W_LABELS), basis("V", &V_LABELS));
                for (k, (roll, v)) in queries.into_iter().zip(values) {
                    if roll > 0 {
                        phi.insert(k, v).unwrap();
                    }
                }
                (eta, phi)
            })
    })
}

/// Monomials of degree ≤ `d` in the given labels.
pub fn monomials_up_to(labels: &[&str], d: u32) -> Vec<Multiindex> {
    let mut out = vec![Multiindex::one()];
    let mut frontier = vec![Multiindex::one()];
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &frontier {
            for l in labels {
                let r = m.raised(&Label::from(*l));
                if !next.contains(&r) {
                    next.push(r);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `Δ` by literal enumeration of the `2^s` subsets of the creation vectors.
pub fn coproduct_by_subsets(eta: &BangElement) -> sweedler::TensorElement {
    let mut out = sweedler::TensorElement::zero();
    for (k, c) in eta.terms() {
        let labels = k.creation_labels();
        let s = labels.len();
        for mask in 0u32..(1 << s) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, l) in labels.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(l.clone());
                } else {
                    right.push(l.clone());
                }
            }
            out.add_term(
                k.with_content(Multiindex::from_labels(left.iter())),
                k.with_content(Multiindex::from_labels(right.iter())),
                c.clone(),
            );
        }
    }
    out
}
