//! Exact symbolic computation in Sweedler's cofree cocommutative coalgebra `!V`.
//!
//! Elements of `!V` are finite linear combinations of kets `|ν_1,…,ν_s⟩_P`,
//! one local summand per point `P ∈ V`. The crate provides the coalgebra
//! structure (coproduct, counit, dereliction), the module actions of the
//! polynomial ring and its constant-coefficient differential operators, the
//! conversion to generalised fractions, and the explicit lifting of a linear
//! map `!W → V` to a coalgebra morphism `!W → !V` as a sum over set partitions.
//!
//! Scalars are exact rationals. Everything that is computed is rational in
//! the input coordinates, so no algebraic closure of `ℚ` is needed; points
//! with irrational coordinates are not representable.
//!
//! Basis indices are opaque labels rather than `1..n`, so a computation only
//! ever touches the finite-dimensional subspace spanned by the labels it
//! mentions and infinite-dimensional spaces need no special handling.

pub mod bang;
pub mod basis;
pub mod error;
pub mod lifting;
pub mod multiindex;
pub mod poly;
pub mod scalar;
pub mod vector;

pub use bang::{
    BangElement, CanonicalKet, GeneralizedFraction, TensorElement, TensorPower,
};
pub use basis::{Basis, Label};
pub use error::{Error, Result};
pub use lifting::{
    bang_map, bell_number, eval_map, promote, promote_counted, query_set, script_c, script_d,
    set_partitions, Dereliction, DerelictionThen, KetMap, LinearMapSpec, MatrixMapSpec,
    SetPartition, SetPartitions, DEFAULT_PARTITION_CAP,
};
pub use multiindex::Multiindex;
pub use poly::{apply_diff_op, Polynomial};
pub use scalar::Rational;
pub use vector::Vector;
