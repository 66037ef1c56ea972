//! Lifting linear maps `φ: !W → V` to coalgebra morphisms `Φ: !W → !V`.
//!
//! [`promote`] evaluates the explicit formula
//! `Φ|ν_1,…,ν_s⟩_P = Σ_C ∂_{φ|ν_{C_1}⟩} ⋯ ∂_{φ|ν_{C_l}⟩} |0⟩_Q` with
//! `Q = φ|0⟩_P`, summed over the set partitions `C` of `{1,…,s}`.
//! [`script_c`] and [`script_d`] are the two contraction functionals used to
//! certify it: the first contracts against iterated coproducts, the second
//! sums differential operators over partitions.

mod map;
mod oracle;
mod partition;
mod promote;

pub use map::{Dereliction, DerelictionThen, KetMap, LinearMapSpec, MatrixMapSpec};
pub use oracle::{script_c, script_d};
pub use partition::{bell_number, set_partitions, SetPartition, SetPartitions};
pub use promote::{bang_map, eval_map, promote, promote_counted, query_set};

/// Largest ket degree whose set partitions are enumerated by default.
/// `Bell(12) = 4 213 597`.
pub const DEFAULT_PARTITION_CAP: usize = 12;
