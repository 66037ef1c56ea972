//! The coalgebra `!V = ⊕_P Sym_P(V)`.
//!
//! The internal normal form is the ket basis: a [`CanonicalKet`] is a point
//! `P` together with the multiset of basis vectors applied to the vacuum
//! `|0⟩_P` by creation operators. Generalised fractions only appear at the
//! conversion boundary ([`BangElement::to_fractions`]); the two bases differ
//! by the factor `a_1!⋯a_n!`.

mod element;
mod fraction;
mod ket;
mod tensor;

pub use element::BangElement;
pub use fraction::GeneralizedFraction;
pub use ket::{render_point, CanonicalKet};
pub use tensor::{TensorElement, TensorPower};

use std::fmt;

use num_traits::{One, Signed};

use crate::scalar::Rational;

/// Writes `Σ c·item` with the sign folded into the separator and unit
/// coefficients omitted. Empty sums render as `0`.
pub(crate) fn write_combination<'a, T: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (&'a T, &'a Rational)>,
    mut item: impl FnMut(&mut fmt::Formatter<'_>, &T) -> fmt::Result,
) -> fmt::Result {
    let mut empty = true;
    for (x, c) in terms {
        let mag = c.abs();
        match (empty, c.is_negative()) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        if !mag.is_one() {
            write!(f, "{mag} ")?;
        }
        item(f, x)?;
        empty = false;
    }
    if empty {
        f.write_str("0")?;
    }
    Ok(())
}
