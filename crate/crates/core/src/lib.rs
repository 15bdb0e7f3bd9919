//! Exact-arithmetic toolkit for integer partitions: merge/split bijections,
//! partition statistics, and brute-force identity verification.
//!
//! The crate centers on a weight-preserving self-map of the partitions of
//! `n`, built from the classical merge/split correspondences between
//! restricted partition classes ([`transforms`]). The map transports one
//! family of multiplicity statistics into another ([`statistics`]), which
//! makes a collection of summation identities over all partitions of `n`
//! checkable by brute force ([`identities`], [`decorated`]). Counting
//! tables computed independently of the enumeration serve as oracles
//! ([`counting`]).
//!
//! All domain arithmetic is exact: multiplicities and weights are `u64`,
//! aggregated sums are `i128` or arbitrary-precision integers, polynomial
//! evaluation uses arbitrary-precision rationals. Floating point appears
//! only in the numeric tier for complex exponents, guarded by an explicit
//! relative tolerance.
//!
//! ```
//! use glaisher::partitions::PartList;
//! use glaisher::transforms::{sigma, sigma_inv};
//!
//! let source: PartList = "6,5,4,4,3,3,2,2,2,1,1,1".parse()?;
//! let image = sigma(&source.to_partition(), 3)?;
//! assert_eq!(image.to_string(), "6,5,4,4,3,2,2,2,1,1,1,1,1,1");
//! assert_eq!(sigma_inv(&image, 3)?, source.to_partition());
//! # Ok::<(), glaisher::Error>(())
//! ```

pub mod counting;
pub mod decorated;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod statistics;
pub mod transforms;

pub use num_bigint::{BigInt, BigUint};
pub use num_complex::Complex64;
pub use num_rational::BigRational;

pub use counting::{complement_count, partition_count, restricted_count, CountTable};
pub use decorated::{
    check_convolution, check_decorated_weights, check_restricted_forms, coefficient_formula,
    enumerate_decorated, weight_w, weight_wtilde, DecoratedPartition, LinearForm,
};
pub use error::{Error, Result};
pub use identities::{
    check_per_k, check_per_k_first, check_per_k_signed, check_poly_full_eval, check_poly_xyz_eval,
    check_transport, check_weighted_sum, check_zsum, derive_seed, format_complex, sample_complex,
    sample_complex_in_disk, sample_rational_point, IdentityReport, IdentityTag, RationalPoint,
    Sign, Value, Verdict, WeightVariant, ZSumVariant, NUMERIC_RELATIVE_TOLERANCE,
};
pub use partitions::{
    decompose_dn, decompose_oe, enumerate_partitions, enumerate_partitions_largest, DNSplit,
    OESplit, PartList, Partition, Partitions,
};
pub use statistics::{residue, stat_vector, transport_check, StatVector};
pub use transforms::{phi_do, phi_od, psi_en, psi_ne, sigma, sigma_inv};
