use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::map::{KetMap, MatrixMapSpec};
use super::partition::{check_cap, SetPartitions};
use crate::bang::{BangElement, CanonicalKet};
use crate::error::Result;
use crate::multiindex::Multiindex;
use crate::vector::Vector;

/// `φ(η)` by linear extension over the kets of `η`.
pub fn eval_map<M: KetMap + ?Sized>(map: &M, eta: &BangElement) -> Result<Vector> {
    map.check_input(eta)?;
    let mut out = Vector::zero();
    for (k, c) in eta.terms() {
        out.add_scaled(c, &map.image(k));
    }
    Ok(out)
}

/// The lift `Φ(η)` of `φ` to a coalgebra morphism.
pub fn promote<M: KetMap + ?Sized>(map: &M, eta: &BangElement, cap: usize) -> Result<BangElement> {
    promote_counted(map, eta, cap).map(|(out, _)| out)
}

/// [`promote`], also returning how many partition terms were generated
/// before merging. Partitions with a block whose image is zero contribute
/// nothing and are not counted.
pub fn promote_counted<M: KetMap + ?Sized>(
    map: &M,
    eta: &BangElement,
    cap: usize,
) -> Result<(BangElement, usize)> {
    map.check_input(eta)?;
    if let Some(s) = eta.max_degree() {
        check_cap(s as usize, cap)?;
    }
    let mut out = BangElement::zero();
    let mut generated = 0;
    for (ket, c) in eta.terms() {
        let (image, n) = promote_ket(map, ket);
        out.add_scaled(c, &image);
        generated += n;
    }
    Ok((out, generated))
}

fn promote_ket<M: KetMap + ?Sized>(map: &M, ket: &CanonicalKet) -> (BangElement, usize) {
    let target = map.image(&CanonicalKet::vacuum(ket.point.clone()));
    let labels = ket.creation_labels();
    let mut block_images: BTreeMap<Multiindex, Vector> = BTreeMap::new();
    let mut out = BangElement::zero();
    let mut generated = 0;
    'partitions: for partition in SetPartitions::new(labels.len()) {
        let mut directions = Vec::with_capacity(partition.len());
        for block in partition.blocks() {
            let content = Multiindex::from_labels(block.iter().map(|&i| &labels[i]));
            let w = block_images
                .entry(content)
                .or_insert_with_key(|content| map.image(&ket.with_content(content.clone())))
                .clone();
            if w.is_zero() {
                continue 'partitions;
            }
            directions.push(w);
        }
        out = &out + &BangElement::ket(target.clone(), &directions);
        generated += 1;
    }
    (out, generated)
}

/// `!ψ |ν_1,…,ν_s⟩_P = |ψν_1,…,ψν_s⟩_{ψP}`.
pub fn bang_map(psi: &MatrixMapSpec, eta: &BangElement) -> Result<BangElement> {
    psi.check_input(eta)?;
    Ok(eta.map_kets(|k| {
        let directions: Vec<Vector> = k
            .creation_labels()
            .iter()
            .map(|l| psi.image_of(l))
            .collect();
        BangElement::ket(psi.apply(&k.point), &directions)
    }))
}

/// Every ket at which [`promote`] evaluates the map when lifting `η`: for
/// each ket `(P, a)` of `η`, all `(P, b)` with `b ≤ a`.
pub fn query_set(eta: &BangElement) -> BTreeSet<CanonicalKet> {
    let mut out = BTreeSet::new();
    for (k, c) in eta.terms() {
        if c.is_zero() {
            continue;
        }
        for b in k.content.divisors() {
            out.insert(k.with_content(b));
        }
    }
    out
}
