//! Exact counting tables: the partition function `p(n)`, the restricted
//! count `p_m(n)`, and its complementary count `r_m(l)`.
//!
//! These tables are computed independently of the enumeration in
//! [`crate::partitions`], so the two can serve as oracles for each other.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact nonnegative counts indexed by `0..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    values: Vec<BigUint>,
}

impl CountTable {
    /// The count at index `n`. Panics when `n` exceeds the table range.
    pub fn value(&self, n: u64) -> &BigUint {
        &self.values[n as usize]
    }

    /// Largest index held by the table.
    pub fn max_index(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// Tabulates `p(0..=n_max)` by Euler's pentagonal-number recurrence:
/// `p(n) = Σ_{k≥1} (-1)^{k+1} (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))`.
pub fn partition_count(n_max: u64) -> CountTable {
    let n_max = n_max as usize;
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(BigUint::one());
    for n in 1..=n_max {
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let target = if k % 2 == 1 { &mut plus } else { &mut minus };
            *target += &values[n - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                *target += &values[n - g2];
            }
            k += 1;
        }
        values.push(plus - minus);
    }
    CountTable { values }
}

/// Adds an unbounded part of size `part` to a knapsack table in place.
fn add_unbounded_part(dp: &mut [BigUint], part: usize) {
    for v in part..dp.len() {
        let prev = dp[v - part].clone();
        dp[v] += prev;
    }
}

/// Tabulates `p_m(0..=n_max)`: partitions with no part divisible by `m` in
/// which the part 1 occurs fewer than `m` times.
pub fn restricted_count(n_max: u64, m: u64) -> Result<CountTable> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { m, min: 2 });
    }
    let n = n_max as usize;
    let m = m as usize;
    let mut dp = vec![BigUint::zero(); n + 1];
    dp[0] = BigUint::one();
    for part in 2..=n {
        if part % m != 0 {
            add_unbounded_part(&mut dp, part);
        }
    }
    let values = (0..=n)
        .map(|total| {
            let lo = total.saturating_sub(m - 1);
            dp[lo..=total].iter().sum()
        })
        .collect();
    Ok(CountTable { values })
}

/// Tabulates `r_m(0..=n_max)`: partitions into parts from `{1, m, 2m, ...}`
/// in which the multiplicity of 1 is divisible by `m`. Together with `p_m`
/// this convolves back to `p`: `Σ_l p_m(n-l) r_m(l) = p(n)`.
pub fn complement_count(n_max: u64, m: u64) -> Result<CountTable> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { m, min: 2 });
    }
    let n = n_max as usize;
    let m = m as usize;
    let mut dp = vec![BigUint::zero(); n + 1];
    dp[0] = BigUint::one();
    let mut part = m;
    while part <= n {
        add_unbounded_part(&mut dp, part);
        part += m;
    }
    // the part 1 enters only in indivisible blocks of m copies, which act as
    // one more unbounded item of size m
    add_unbounded_part(&mut dp, m);
    Ok(CountTable { values: dp })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn as_u64(table: &CountTable) -> Vec<u64> {
        table
            .values()
            .iter()
            .map(|v| u64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn partition_count_small_values() {
        assert_eq!(as_u64(&partition_count(0)), vec![1]);
        assert_eq!(as_u64(&partition_count(5)), vec![1, 1, 2, 3, 5, 7]);
    }

    #[test]
    fn partition_count_desk_scale() {
        let table = partition_count(30);
        assert_eq!(u64::try_from(table.value(25)).unwrap(), 1958);
        assert_eq!(u64::try_from(table.value(30)).unwrap(), 5604);
    }

    #[test]
    fn partition_count_is_monotone() {
        let table = partition_count(40);
        for pair in table.values().windows(2) {
            assert!(pair[0] <= pair[1]);
        }
    }

    #[test]
    fn partition_count_matches_enumeration() {
        let table = partition_count(18);
        for n in 0..=18u64 {
            assert_eq!(
                BigUint::from(enumerate_partitions(n).count()),
                *table.value(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn restricted_count_small_values() {
        assert_eq!(as_u64(&restricted_count(0, 3).unwrap()), vec![1]);
        assert_eq!(
            as_u64(&restricted_count(8, 2).unwrap()),
            vec![1, 1, 0, 1, 1, 1, 2, 2, 2]
        );
        assert_eq!(
            as_u64(&restricted_count(8, 3).unwrap()),
            vec![1, 1, 2, 1, 3, 3, 5, 5, 8]
        );
    }

    #[test]
    fn restricted_count_matches_filtered_enumeration() {
        for m in 2..=6u64 {
            let table = restricted_count(15, m).unwrap();
            for n in 0..=15u64 {
                let direct = enumerate_partitions(n)
                    .filter(|p| {
                        p.multiplicity(1) < m && p.distinct().all(|(part, _)| part % m != 0)
                    })
                    .count();
                assert_eq!(BigUint::from(direct), *table.value(n), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn complement_count_small_values() {
        assert_eq!(
            as_u64(&complement_count(8, 2).unwrap()),
            vec![1, 0, 2, 0, 4, 0, 7, 0, 12]
        );
    }

    #[test]
    fn complement_count_matches_filtered_enumeration() {
        for m in 2..=6u64 {
            let table = complement_count(15, m).unwrap();
            for l in 0..=15u64 {
                let direct = enumerate_partitions(l)
                    .filter(|p| {
                        p.multiplicity(1) % m == 0
                            && p.distinct().all(|(part, _)| part == 1 || part % m == 0)
                    })
                    .count();
                assert_eq!(BigUint::from(direct), *table.value(l), "l={l} m={m}");
            }
        }
    }

    #[test]
    fn restricted_and_complement_convolve_to_p() {
        let p = partition_count(20);
        for m in 2..=6u64 {
            let pm = restricted_count(20, m).unwrap();
            let rm = complement_count(20, m).unwrap();
            for n in 0..=20u64 {
                let sum: BigUint = (0..=n).map(|l| pm.value(n - l) * rm.value(l)).sum();
                assert_eq!(sum, *p.value(n), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn rejects_small_modulus() {
        assert!(matches!(
            restricted_count(5, 1),
            Err(Error::ModulusTooSmall { m: 1, min: 2 })
        ));
        assert!(matches!(
            complement_count(5, 0),
            Err(Error::ModulusTooSmall { m: 0, min: 2 })
        ));
    }
}
