use std::fmt;

use crate::basis::Label;
use crate::multiindex::Multiindex;
use crate::scalar::Rational;
use crate::vector::Vector;

use super::ket::render_point;

/// The generalised fraction `[1/(z_1^{a_1} ⋯ z_n^{a_n}) dz/z]` at `P`, with
/// `z_i = x_i − P_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralizedFraction {
    pub point: Vector,
    pub exponents: Multiindex,
}

impl GeneralizedFraction {
    pub fn new(point: Vector, exponents: Multiindex) -> Self {
        GeneralizedFraction { point, exponents }
    }

    /// `[dz/z]_P`, which is the vacuum.
    pub fn vacuum(point: Vector) -> Self {
        GeneralizedFraction::new(point, Multiindex::one())
    }

    /// `z_j · [1/z^a dz/z] = [1/z^{a − e_j} dz/z]`, zero when `a_j = 0`.
    pub fn lower(&self, label: &Label) -> Option<GeneralizedFraction> {
        self.exponents
            .lowered(label)
            .map(|e| GeneralizedFraction::new(self.point.clone(), e))
    }

    /// `[1/z^a dz/z] · ∂_i = (a_i + 1) [1/z^{a + e_i} dz/z]`.
    pub fn differentiate(&self, label: &Label) -> (Rational, GeneralizedFraction) {
        let factor = Rational::from_integer((self.exponents.get(label) + 1).into());
        let raised = GeneralizedFraction::new(self.point.clone(), self.exponents.raised(label));
        (factor, raised)
    }

    /// `res_P` on the fraction basis: 1 for `a = 0`, otherwise 0.
    pub fn residue(&self) -> Rational {
        if self.exponents.is_one() {
            num_traits::One::one()
        } else {
            num_traits::Zero::zero()
        }
    }
}

/// `[1/(z_{e1}^2 z_{e3}) dz/z]_{P}`; the vacuum is `[dz/z]_{P}`.
impl fmt::Display for GeneralizedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = render_point(&self.point);
        if self.exponents.is_one() {
            return write!(f, "[dz/z]_{p}");
        }
        let denom: Vec<String> = self
            .exponents
            .iter()
            .map(|(l, e)| {
                if e == 1 {
                    format!("z_{{{l}}}")
                } else {
                    format!("z_{{{l}}}^{e}")
                }
            })
            .collect();
        write!(f, "[1/({}) dz/z]_{p}", denom.join(" "))
    }
}
