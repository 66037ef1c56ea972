use std::collections::BTreeMap;

use num_traits::Zero;

use super::map::KetMap;
use super::partition::{check_cap, SetPartitions};
use crate::bang::{BangElement, CanonicalKet, TensorPower};
use crate::error::Result;
use crate::multiindex::Multiindex;
use crate::poly::{apply_diff_op, Polynomial};
use crate::scalar::Rational;
use crate::vector::Vector;

/// `𝒞(f, η) = f ⌟ Σ_{l ≥ −1} φ^{⊗(l+1)} Δ^l(η)`.
///
/// A monomial `κ_1⋯κ_q` only sees the `l = q − 1` entry, so the coproduct is
/// iterated exactly to the degree of each monomial; constants use the counit.
pub fn script_c<M: KetMap + ?Sized>(f: &Polynomial, map: &M, eta: &BangElement) -> Result<Rational> {
    map.check_input(eta)?;
    let mut images: BTreeMap<CanonicalKet, Vector> = BTreeMap::new();
    let mut powers: BTreeMap<usize, TensorPower> = BTreeMap::new();
    let mut total = Rational::zero();
    for (monomial, coeff) in f.terms() {
        let q = monomial.degree() as usize;
        if q == 0 {
            total += coeff * eta.counit();
            continue;
        }
        let coordinates = monomial.expand();
        let power = powers
            .entry(q)
            .or_insert_with(|| TensorPower::iterated_coproduct(eta, q));
        for (kets, c) in power.terms() {
            let mut term = c * coeff;
            for (k, coord) in kets.iter().zip(&coordinates) {
                let image = images.entry(k.clone()).or_insert_with(|| map.image(k));
                term *= image.get(coord);
                if term.is_zero() {
                    break;
                }
            }
            total += term;
        }
    }
    Ok(total)
}

/// `𝒟(f, |ν_1,…,ν_s⟩) = Σ_C ∂_{φ|ν_{C_1}⟩} ⋯ ∂_{φ|ν_{C_l}⟩}(f) |_{x = Q}` with
/// `Q = φ|0⟩_P`, extended linearly in `η`.
pub fn script_d<M: KetMap + ?Sized>(
    f: &Polynomial,
    map: &M,
    eta: &BangElement,
    cap: usize,
) -> Result<Rational> {
    map.check_input(eta)?;
    if let Some(s) = eta.max_degree() {
        check_cap(s as usize, cap)?;
    }
    let mut total = Rational::zero();
    for (ket, c) in eta.terms() {
        let target = map.image(&CanonicalKet::vacuum(ket.point.clone()));
        let labels = ket.creation_labels();
        for partition in SetPartitions::new(labels.len()) {
            let directions: Vec<Vector> = partition
                .blocks()
                .iter()
                .map(|block| {
                    let content = Multiindex::from_labels(block.iter().map(|&i| &labels[i]));
                    map.image(&ket.with_content(content))
                })
                .collect();
            total += c * apply_diff_op(&directions, f).eval(&target);
        }
    }
    Ok(total)
}
