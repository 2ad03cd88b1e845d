//! Constructive partitions into comparability subgraphs. Every function
//! returns certified parts (an orientation attached to each part).

mod bits;
mod gn;
mod gsp;
mod h;
mod lbip;
mod unit_interval;

pub use bits::{
    ceil_log2, lowest_bit_parts, partition_alpha_comparability, partition_bipartite_log_omega, partition_by_color_bits,
};
pub use gn::{gn_levels, gn_part_bound, gn_part_count, gn_part_of, gn_part_sizes, partition_gn_recursive};
pub use gsp::partition_gsp;
pub use h::partition_h;
pub use lbip::partition_lbip;
pub use unit_interval::{partition_unit_interval, unit_interval_classes, UnitIntervalPartition};
