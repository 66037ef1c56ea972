use thiserror::Error;

use crate::basis::Label;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A label was used outside the basis it was checked against.
    #[error("label `{label}` is not in basis `{basis}`")]
    Context { basis: String, label: Label },

    #[error("basis mismatch: expected `{expected}`, found `{found}`")]
    BasisMismatch { expected: String, found: String },

    #[error("expected {expected} coordinates for basis `{basis}`, got {found}")]
    Arity {
        basis: String,
        expected: usize,
        found: usize,
    },

    #[error("duplicate label `{0}` in basis")]
    DuplicateLabel(Label),

    /// Enumerating the set partitions of `s` points would exceed the cap.
    #[error("degree {s} exceeds the partition cap {cap} (Bell({s}) = {bell} partitions)")]
    PartitionCap { s: usize, cap: usize, bell: u128 },

    #[error("invalid rational literal `{0}`")]
    Rational(String),
}
