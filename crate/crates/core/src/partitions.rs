//! Partition representations, enumeration of `P_n`, and the two multiset
//! decompositions relative to a modulus `m`.
//!
//! A partition is held canonically as a sparse multiplicity vector
//! ([`Partition`]); the equivalent nonincreasing list of parts is available
//! as [`PartList`]. Both views are immutable values and convert losslessly
//! into each other.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `n` in multiplicity form: part `i` occurs `t_i` times and
/// `sum(i * t_i) = n`. Only nonzero multiplicities are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: u64,
    mult: BTreeMap<u64, u64>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from a list of positive parts in any order.
    pub fn from_parts(parts: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut mult = BTreeMap::new();
        let mut n = 0u64;
        for part in parts {
            if part == 0 {
                return Err(Error::ZeroPart);
            }
            *mult.entry(part).or_insert(0) += 1;
            n += part;
        }
        Ok(Self { n, mult })
    }

    /// The partitioned number `n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// The multiplicity `t_i` of part `i` (0 when the part is absent).
    pub fn multiplicity(&self, part: u64) -> u64 {
        self.mult.get(&part).copied().unwrap_or(0)
    }

    /// Distinct parts with their multiplicities, in increasing part order.
    pub fn distinct(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.mult.iter().map(|(&part, &t)| (part, t))
    }

    /// Number of distinct part values.
    pub fn distinct_count(&self) -> u64 {
        self.mult.len() as u64
    }

    /// Number of parts counted with multiplicity.
    pub fn part_count(&self) -> u64 {
        self.mult.values().sum()
    }

    /// The nonincreasing part-list view.
    pub fn to_part_list(&self) -> PartList {
        let mut parts = Vec::with_capacity(self.part_count() as usize);
        for (&part, &t) in self.mult.iter().rev() {
            parts.extend(std::iter::repeat_n(part, t as usize));
        }
        PartList { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_part_list().fmt(f)
    }
}

impl From<&PartList> for Partition {
    fn from(list: &PartList) -> Self {
        Partition::from_parts(list.parts.iter().copied()).expect("part lists contain no zeros")
    }
}

/// A partition as a nonincreasing list of positive parts (multiset view).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartList {
    parts: Vec<u64>,
}

impl PartList {
    /// Builds a part list from positive parts in any order; the stored form
    /// is always sorted nonincreasing.
    pub fn new(parts: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut parts: Vec<u64> = parts.into_iter().collect();
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.parts.iter().copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.parts
    }

    /// Multiset union with another part list.
    pub fn union(&self, other: &PartList) -> PartList {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        PartList { parts }
    }

    /// Distinct values with multiplicities, in increasing value order.
    pub fn distinct(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((v, t)) if *v == p => *t += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from(self)
    }
}

impl fmt::Display for PartList {
    /// Wire format: comma-separated nonincreasing parts; empty list renders
    /// as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

impl FromStr for PartList {
    type Err = Error;

    /// Parses the comma-separated wire format. Parts may arrive in any
    /// order; the result is normalized to nonincreasing.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PartList::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let value: u64 = token
                .parse()
                .map_err(|_| Error::ParseParts(format!("`{token}` is not a positive integer")))?;
            if value == 0 {
                return Err(Error::ZeroPart);
            }
            parts.push(value);
        }
        PartList::new(parts)
    }
}

/// The unique split of a part multiset into parts not divisible by `m`
/// (`o_part`) and parts divisible by `m` (`e_part`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OESplit {
    pub o_part: PartList,
    pub e_part: PartList,
    pub m: u64,
}

/// The unique split of a part multiset by multiplicity: each value keeps its
/// multiplicity mod `m` in `d_part` and the remaining block of `m * (t / m)`
/// copies goes to `n_part`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DNSplit {
    pub d_part: PartList,
    pub n_part: PartList,
    pub m: u64,
}

fn require_modulus(m: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { m, min: 2 });
    }
    Ok(())
}

/// Splits `list` into the parts not divisible by `m` and the parts divisible
/// by `m`.
pub fn decompose_oe(list: &PartList, m: u64) -> Result<OESplit> {
    require_modulus(m)?;
    let mut o = Vec::new();
    let mut e = Vec::new();
    for p in list.iter() {
        if p % m == 0 {
            e.push(p);
        } else {
            o.push(p);
        }
    }
    Ok(OESplit {
        o_part: PartList { parts: o },
        e_part: PartList { parts: e },
        m,
    })
}

/// Splits `list` by multiplicity: for each distinct value with multiplicity
/// `t`, `d_part` receives `t mod m` copies and `n_part` receives
/// `m * (t / m)` copies.
pub fn decompose_dn(list: &PartList, m: u64) -> Result<DNSplit> {
    require_modulus(m)?;
    let mut d = Vec::new();
    let mut n = Vec::new();
    for (value, t) in list.distinct() {
        d.extend(std::iter::repeat_n(value, (t % m) as usize));
        n.extend(std::iter::repeat_n(value, (m * (t / m)) as usize));
    }
    d.sort_unstable_by(|a, b| b.cmp(a));
    n.sort_unstable_by(|a, b| b.cmp(a));
    Ok(DNSplit {
        d_part: PartList { parts: d },
        n_part: PartList { parts: n },
        m,
    })
}

/// Iterator over all partitions of a fixed `n`, in lexicographically
/// decreasing part-list order: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub struct Partitions {
    next: Option<Vec<u64>>,
    min_first: u64,
}

/// Enumerates every partition of `n` exactly once. `n = 0` yields the single
/// empty partition.
pub fn enumerate_partitions(n: u64) -> Partitions {
    let start = if n == 0 {
        Vec::new()
    } else {
        greedy_fill(n, n)
    };
    Partitions {
        next: Some(start),
        min_first: 0,
    }
}

/// Enumerates the partitions of `n` whose largest part equals `largest`,
/// in the same global order. The chunks for `largest = n, n-1, ..., 1` are
/// disjoint and together cover `P_n`, so callers can fan work out over them.
/// Out-of-range values of `largest` yield an empty iterator.
pub fn enumerate_partitions_largest(n: u64, largest: u64) -> Partitions {
    if n == 0 || largest == 0 || largest > n {
        return Partitions {
            next: None,
            min_first: 0,
        };
    }
    Partitions {
        next: Some(greedy_fill(n, largest)),
        min_first: largest,
    }
}

/// Lexicographically largest partition of `n` with parts bounded by `cap`.
fn greedy_fill(n: u64, cap: u64) -> Vec<u64> {
    let mut parts = vec![cap; (n / cap) as usize];
    if !n.is_multiple_of(cap) {
        parts.push(n % cap);
    }
    parts
}

/// Rewrites `parts` into its successor in decreasing lexicographic order;
/// returns false when `parts` was the final partition `(1,...,1)`.
fn advance(parts: &mut Vec<u64>) -> bool {
    let Some(i) = parts.iter().rposition(|&p| p > 1) else {
        return false;
    };
    let budget = parts[i] + (parts.len() - 1 - i) as u64;
    let v = parts[i] - 1;
    parts.truncate(i);
    parts.extend(std::iter::repeat_n(v, (budget / v) as usize));
    if !budget.is_multiple_of(v) {
        parts.push(budget % v);
    }
    true
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let mut parts = self.next.take()?;
        let item =
            Partition::from_parts(parts.iter().copied()).expect("enumerated parts are positive");
        if advance(&mut parts) && (self.min_first == 0 || parts[0] >= self.min_first) {
            self.next = Some(parts);
        }
        Some(item)
    }
}
