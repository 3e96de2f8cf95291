//! Verification suites. Each returns a [`Report`] with one entry per check;
//! failed checks carry a witness.

mod equations;
mod golden;
mod intertwine;
mod props;
mod report;
mod theorem;
mod xi;

pub use equations::{reflection_slot_typing, verify_reflection_3d, verify_tetrahedron, Mode, SlotTyping, SAMPLE_POINTS};
pub use golden::{golden_columns, verify_golden, GoldenColumn};
pub use intertwine::verify_t_intertwining;
pub use props::{verify_properties, verify_table_properties};
pub use report::{Check, Report};
pub use theorem::verify_theorem;
pub use xi::{verify_serre, verify_xi_left_multiplication};

use crate::presets::AlgebraId;

/// Default height bound of the block-wise suites.
pub fn default_height(id: AlgebraId) -> i32 {
    match id {
        AlgebraId::A2 | AlgebraId::C2 => 8,
        AlgebraId::G2 => 5,
    }
}

/// Default tuple-sum bound of the t-intertwining suite.
pub fn default_intertwine_height(id: AlgebraId) -> i32 {
    match id {
        AlgebraId::A2 => 4,
        AlgebraId::C2 => 3,
        AlgebraId::G2 => 2,
    }
}
