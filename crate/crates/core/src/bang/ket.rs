use std::fmt;

use crate::basis::Label;
use crate::multiindex::Multiindex;
use crate::vector::Vector;

/// `|e_{i_1}, …, e_{i_s}⟩_P` stored as the point and the multiplicity of each
/// basis vector. The vacuum `|0⟩_P` has empty content.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKet {
    pub point: Vector,
    pub content: Multiindex,
}

impl CanonicalKet {
    pub fn new(point: Vector, content: Multiindex) -> Self {
        CanonicalKet { point, content }
    }

    pub fn vacuum(point: Vector) -> Self {
        CanonicalKet::new(point, Multiindex::one())
    }

    /// Total degree `s = Σ a_i`.
    pub fn degree(&self) -> u32 {
        self.content.degree()
    }

    pub fn is_vacuum(&self) -> bool {
        self.content.is_one()
    }

    /// The creation vectors `ν_1, …, ν_s` as basis labels, repeated by
    /// multiplicity, in label order.
    pub fn creation_labels(&self) -> Vec<Label> {
        self.content.expand()
    }

    /// Same point, different content.
    pub fn with_content(&self, content: Multiindex) -> CanonicalKet {
        CanonicalKet::new(self.point.clone(), content)
    }

    /// Every label in the point or the content.
    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.point.labels().chain(self.content.labels())
    }
}

/// Points render as `{e1:2, e3:-1/2}` with labels sorted, the origin as `{0}`.
pub fn render_point(p: &Vector) -> String {
    if p.is_zero() {
        return "{0}".to_string();
    }
    let coords: Vec<String> = p.iter().map(|(l, c)| format!("{l}:{c}")).collect();
    format!("{{{}}}", coords.join(", "))
}

/// `|e1^2 e3⟩_{e1:2}`; the vacuum is `|0⟩_{…}`.
impl fmt::Display for CanonicalKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}⟩_{}", self.content, render_point(&self.point))
    }
}
