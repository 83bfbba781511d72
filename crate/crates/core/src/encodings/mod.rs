//! Numeric encodings of the lexicographic rules and the Take-the-Best bridge.

mod capacity;
mod ttb;

pub use capacity::{
    capacity_row, compare_bilexi_np, compare_bilexi_np_sets, compare_np, compare_np_sets,
    is_strictly_big_stepped, net_predisposition, sigma, BigSteppedCapacity, CapacityRow,
    NetPredisposition,
};
pub use ttb::{complete_polar_opposites, ttb_compare, Cue, TtbInstance};
