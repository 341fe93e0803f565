//! Partitions, multipartitions and their statistics, Stirling numbers and
//! p-adic helpers.

mod cells;
mod multipartition;
mod numbers;
mod partition;

pub use cells::{hooks_and_contents, Cell, CellData};
pub use multipartition::{enumerate_multipartitions, MultiPartition};
pub use numbers::{
    class_divisibility_check, has_even_part_with_odd_multiplicity, is_prime, kummer_valuation,
    padic_valuation, prime_factors, stirling_divisibility_check, stirling_first,
};
pub use partition::{enumerate_partitions, Partition};

pub(crate) use numbers::valuation_u64;
pub(crate) use partition::partitions_of;
