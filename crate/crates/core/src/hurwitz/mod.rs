//! Symmetric-group enumeration of branched coverings: partitions and branch
//! profiles, exact character tables, Frobenius counting of factorizations,
//! transitivity-corrected (connected) counts, and the recorded reference
//! constants for small plane Hurwitz counts.

mod character;
mod count;
mod partition;

pub use character::{character_table, character_value, CharacterTable, CHARACTER_DEGREE_CAP};
pub use count::{
    count_by_enumeration, count_factorizations, count_factorizations_dp, count_transitive,
    count_transitive_dp, count_transitive_inversion, simple_hurwitz_number, HurwitzResult,
    Profile, DP_DEGREE_CAP,
};
pub use partition::{partitions_of, Partition};

use alloc::string::String;
use core::fmt;

use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HurwitzError {
    /// Parts must be positive (weakly decreasing order is normalized).
    InvalidPartition(String),
    /// A profile type does not partition the profile degree.
    TypeDegreeMismatch { expected: usize, got: usize },
    DegreeCap { degree: usize, cap: usize },
    /// `w = 2g + 2d - 2` must be nonnegative.
    NegativeBranchCount,
}

impl fmt::Display for HurwitzError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HurwitzError::InvalidPartition(s) => write!(f, "invalid partition: {}", s),
            HurwitzError::TypeDegreeMismatch { expected, got } => {
                write!(f, "branch type sums to {}, expected {}", got, expected)
            }
            HurwitzError::DegreeCap { degree, cap } => {
                write!(f, "degree {} above the cap {}", degree, cap)
            }
            HurwitzError::NegativeBranchCount => write!(f, "2g + 2d - 2 must be nonnegative"),
        }
    }
}

/// Recorded reference constants for plane projections. These are pinned
/// literature values, not recomputed here; the degree-3 entry coincides with
/// the connected double-transposition count and is cross-checked in tests.
#[derive(Clone, Debug)]
pub struct PlaneConstants {
    /// Orbit count for degree-3 projections over 6 fixed simple branch points.
    pub plane_hurwitz_3: BigUint,
    /// Orbit count for degree-4 projections: 120 * (3^10 - 1) / 2.
    pub plane_hurwitz_4: BigUint,
    /// Degree of the branch-locus hypersurface for quartic projections.
    pub branch_hypersurface_degree_4: u64,
    /// Intersection number beta^8 against the degree-3 incidence divisor: 40 * 210.
    pub beta8_i3: u64,
    /// Intersection number beta^13 against the degree-4 incidence divisor: 120 * 2535.
    pub beta13_i4: u64,
}

/// The recorded constants table.
pub fn plane_hurwitz_constants() -> PlaneConstants {
    let three_pow_10 = BigUint::from(3u32).pow(10);
    let half = (three_pow_10 - 1u32) / 2u32;
    PlaneConstants {
        plane_hurwitz_3: BigUint::from(40u32),
        plane_hurwitz_4: BigUint::from(120u32) * &half,
        branch_hypersurface_degree_4: 3762,
        beta8_i3: 40 * 210,
        beta13_i4: 120 * 2535,
    }
}

/// Dimension of the space of degree-d projections modulo the center-fixing
/// group: `d(d+3)/2 - 3`.
pub fn projection_space_dim(d: u64) -> u64 {
    d * (d + 3) / 2 - 3
}
