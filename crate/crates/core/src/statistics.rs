//! Partition statistics derived from the multiplicity vector, and the
//! transport property that carries them across [`crate::transforms::sigma`].
//!
//! Two statistic families are tracked for a modulus `m`. The plain family
//! reads multiplicities at multiples of `m`: `a_k = t_{km}`, with the
//! aggregates `alpha_sum = Σ a_k`, `beta = Σ k a_k`, and `gamma_o` the
//! weight carried by parts not divisible by `m`. The floor family reads
//! quotients: `a'_k = ⌊t_k/m⌋`, with `alpha_floor_sum`, `beta_floor`, and
//! `gamma_d = Σ k (t_k mod m)`. The map `sigma` turns one family into the
//! other.

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::transforms::sigma;

/// Least nonnegative residue of `x` modulo `m`.
pub fn residue(x: u64, m: u64) -> Result<u64> {
    if m < 1 {
        return Err(Error::ModulusTooSmall { m, min: 1 });
    }
    Ok(x % m)
}

/// Both statistic families of one partition at one modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatVector {
    pub m: u64,
    pub n: u64,
    /// `a_k = t_{km}` for `k = 1..=n/m`.
    pub alpha: Vec<u64>,
    /// `a'_k = ⌊t_k/m⌋` for `k = 1..=n`.
    pub alpha_floor: Vec<u64>,
    /// Weight of the parts not divisible by `m`.
    pub gamma_o: u64,
    /// `Σ_k k·(t_k mod m)`, the weight left after removing full blocks.
    pub gamma_d: u64,
    /// `Σ_k k·a_k`.
    pub beta: u64,
    /// `Σ_k k·a'_k`.
    pub beta_floor: u64,
    /// `Σ_k a_k`.
    pub alpha_sum: u64,
    /// `Σ_k a'_k`.
    pub alpha_floor_sum: u64,
}

impl StatVector {
    /// `a_k`, extended by zero beyond the stored range.
    pub fn alpha_k(&self, k: u64) -> u64 {
        if k == 0 {
            return 0;
        }
        self.alpha.get((k - 1) as usize).copied().unwrap_or(0)
    }

    /// `a'_k`, extended by zero beyond the stored range.
    pub fn alpha_floor_k(&self, k: u64) -> u64 {
        if k == 0 {
            return 0;
        }
        self.alpha_floor.get((k - 1) as usize).copied().unwrap_or(0)
    }
}

/// Computes every statistic of `lambda` at modulus `m` in one pass.
pub fn stat_vector(lambda: &Partition, m: u64) -> Result<StatVector> {
    if m < 1 {
        return Err(Error::ModulusTooSmall { m, min: 1 });
    }
    let n = lambda.n();
    let mut alpha = vec![0u64; (n / m) as usize];
    let mut alpha_floor = vec![0u64; n as usize];
    let mut gamma_o = 0u64;
    let mut gamma_d = 0u64;
    for (part, t) in lambda.distinct() {
        if part % m == 0 {
            alpha[(part / m - 1) as usize] = t;
        } else {
            gamma_o += part * t;
        }
        alpha_floor[(part - 1) as usize] = t / m;
        gamma_d += part * (t % m);
    }
    let alpha_sum = alpha.iter().sum();
    let alpha_floor_sum = alpha_floor.iter().sum();
    let beta = alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| (i as u64 + 1) * a)
        .sum();
    let beta_floor = alpha_floor
        .iter()
        .enumerate()
        .map(|(i, &a)| (i as u64 + 1) * a)
        .sum();
    Ok(StatVector {
        m,
        n,
        alpha,
        alpha_floor,
        gamma_o,
        gamma_d,
        beta,
        beta_floor,
        alpha_sum,
        alpha_floor_sum,
    })
}

/// True iff the plain statistics of `lambda` equal the floor statistics of
/// its image under [`sigma`]: `a_k(lambda) = a'_k(sigma(lambda))` for every
/// `k`, and `gamma_o(lambda) = gamma_d(sigma(lambda))`.
pub fn transport_check(lambda: &Partition, m: u64) -> Result<bool> {
    let image = sigma(lambda, m)?;
    let source_stats = stat_vector(lambda, m)?;
    let image_stats = stat_vector(&image, m)?;
    if source_stats.gamma_o != image_stats.gamma_d {
        return Ok(false);
    }
    let span = lambda.n();
    Ok((1..=span).all(|k| source_stats.alpha_k(k) == image_stats.alpha_floor_k(k)))
}
