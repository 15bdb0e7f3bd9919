//! The four merge/split maps between restricted partition classes and the
//! bijection `sigma` assembled from them.
//!
//! For a modulus `m`, the four classes are: parts not divisible by `m`
//! (`O_m`), multiplicities below `m` (`D_m`), parts divisible by `m`
//! (`E_m`), and multiplicities divisible by `m` (`N_m`). [`phi_od`] and
//! [`phi_do`] are mutually inverse between `O_m` and `D_m`; [`psi_en`] and
//! [`psi_ne`] between `E_m` and `N_m`. [`sigma`] splits an arbitrary
//! partition by part divisibility, pushes both halves through, and reunites
//! them; [`sigma_inv`] undoes it via the multiplicity split.

use std::collections::BTreeMap;
use std::ops::Bound;

use crate::error::{Error, Result};
use crate::partitions::{decompose_dn, decompose_oe, PartList, Partition};

fn require_modulus(m: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { m, min: 2 });
    }
    Ok(())
}

/// Merges `m` equal parts into one `m`-fold part, repeating until every
/// multiplicity drops below `m`. Requires that no part of `list` is
/// divisible by `m`; the result then has no multiplicity reaching `m`.
pub fn phi_od(list: &PartList, m: u64) -> Result<PartList> {
    require_modulus(m)?;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for (value, t) in list.distinct() {
        if value % m == 0 {
            return Err(Error::PartDivisible { part: value, m });
        }
        counts.insert(value, t);
    }
    // merging v moves mass only to m*v > v, so one ascending sweep settles
    // every value: by the time v is visited its count is final
    let mut floor = 0u64;
    while let Some((&value, &t)) = counts
        .range((Bound::Excluded(floor), Bound::Unbounded))
        .next()
    {
        if t >= m {
            counts.insert(value, t % m);
            *counts.entry(m * value).or_insert(0) += t / m;
        }
        floor = value;
    }
    let parts = counts
        .into_iter()
        .rev()
        .flat_map(|(value, t)| std::iter::repeat_n(value, t as usize));
    Ok(PartList::new(parts).expect("merged parts are positive"))
}

/// Splits every part divisible by `m` into `m` equal parts, repeating until
/// no part is divisible by `m`. Requires every multiplicity of `list` to be
/// below `m`; inverse of [`phi_od`].
pub fn phi_do(list: &PartList, m: u64) -> Result<PartList> {
    require_modulus(m)?;
    let mut parts = Vec::new();
    for (value, t) in list.distinct() {
        if t >= m {
            return Err(Error::MultiplicityTooLarge {
                part: value,
                multiplicity: t,
                m,
            });
        }
        // v = m^a * u with m not dividing u splits into m^a copies of u
        let mut scale = 1u64;
        let mut core = value;
        while core % m == 0 {
            scale *= m;
            core /= m;
        }
        parts.extend(std::iter::repeat_n(core, (t * scale) as usize));
    }
    Ok(PartList::new(parts).expect("split parts are positive"))
}

/// Splits each part `km` into `m` copies of `k`, in a single pass. Requires
/// every part of `list` to be divisible by `m`; every multiplicity of the
/// result is then divisible by `m`.
pub fn psi_en(list: &PartList, m: u64) -> Result<PartList> {
    require_modulus(m)?;
    let mut parts = Vec::new();
    for (value, t) in list.distinct() {
        if value % m != 0 {
            return Err(Error::PartNotDivisible { part: value, m });
        }
        parts.extend(std::iter::repeat_n(value / m, (t * m) as usize));
    }
    Ok(PartList::new(parts).expect("split parts are positive"))
}

/// Merges each group of `m` equal parts `k` into one part `mk`, in a single
/// pass. Requires every multiplicity of `list` to be divisible by `m`;
/// inverse of [`psi_en`].
pub fn psi_ne(list: &PartList, m: u64) -> Result<PartList> {
    require_modulus(m)?;
    let mut parts = Vec::new();
    for (value, t) in list.distinct() {
        if t % m != 0 {
            return Err(Error::MultiplicityNotDivisible {
                part: value,
                multiplicity: t,
                m,
            });
        }
        parts.extend(std::iter::repeat_n(m * value, (t / m) as usize));
    }
    Ok(PartList::new(parts).expect("merged parts are positive"))
}

fn require_sigma_modulus(m: u64) -> Result<()> {
    if m < 1 {
        return Err(Error::ModulusTooSmall { m, min: 1 });
    }
    Ok(())
}

/// The weight-preserving bijection on partitions of `n`: the parts not
/// divisible by `m` go through [`phi_od`], the parts divisible by `m` go
/// through [`psi_en`], and the images are reunited. `m = 1` is the identity.
pub fn sigma(lambda: &Partition, m: u64) -> Result<Partition> {
    require_sigma_modulus(m)?;
    if m == 1 {
        return Ok(lambda.clone());
    }
    let split = decompose_oe(&lambda.to_part_list(), m)?;
    let merged = phi_od(&split.o_part, m)?;
    let scattered = psi_en(&split.e_part, m)?;
    Ok(merged.union(&scattered).to_partition())
}

/// Inverse of [`sigma`]: multiplicities below `m` go through [`phi_do`],
/// multiplicity blocks divisible by `m` go through [`psi_ne`].
pub fn sigma_inv(lambda: &Partition, m: u64) -> Result<Partition> {
    require_sigma_modulus(m)?;
    if m == 1 {
        return Ok(lambda.clone());
    }
    let split = decompose_dn(&lambda.to_part_list(), m)?;
    let scattered = phi_do(&split.d_part, m)?;
    let merged = psi_ne(&split.n_part, m)?;
    Ok(scattered.union(&merged).to_partition())
}
