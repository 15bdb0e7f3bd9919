//! Partitions with an optional drawn part, the two weights `W` and `W~` on
//! them, and the refinement/convolution identities connecting those weights
//! to the first-part floor sums.
//!
//! A decorated partition marks at most one part value; the mark always sits
//! on the first occurrence of that value, so the mark is identified by the
//! value alone. `W` sums a formal symbol per non-drawn part; `W~` expands
//! the drawn part `v` into `Σ_j ⌊v/j⌋ x_j`. Both weights live in
//! [`LinearForm`], a finitely supported integer combination of symbols
//! `x_j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::counting::{partition_count, restricted_count};
use crate::error::{Error, Result};
use crate::identities::{exact_form_report, IdentityReport, IdentityTag};
use crate::partitions::{enumerate_partitions, PartList};

/// A finitely supported integer linear combination of formal symbols `x_j`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: BTreeMap<u64, BigInt>,
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `delta * x_j`; entries that reach zero are dropped.
    pub fn add_term(&mut self, j: u64, delta: impl Into<BigInt>) {
        let delta = delta.into();
        if delta.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(j).or_insert_with(BigInt::zero);
        *entry += delta;
        if entry.is_zero() {
            self.coeffs.remove(&j);
        }
    }

    /// Adds `scale * other` term by term.
    pub fn scaled_add(&mut self, other: &LinearForm, scale: &BigInt) {
        for (&j, coeff) in &other.coeffs {
            self.add_term(j, coeff * scale);
        }
    }

    /// Coefficient of `x_j` (zero when absent).
    pub fn coefficient(&self, j: u64) -> BigInt {
        self.coeffs.get(&j).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in increasing symbol order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&j, c)| (j, c))
    }
}

impl std::ops::AddAssign<&LinearForm> for LinearForm {
    fn add_assign(&mut self, other: &LinearForm) {
        for (&j, coeff) in &other.coeffs {
            self.add_term(j, coeff.clone());
        }
    }
}

impl fmt::Display for LinearForm {
    /// Renders like `14x_1+5x_2+2x_3+x_4`; the zero form renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let one = BigInt::from(1);
        let minus_one = BigInt::from(-1);
        for (i, (&j, coeff)) in self.coeffs.iter().enumerate() {
            let rendered = if *coeff == one {
                format!("x_{j}")
            } else if *coeff == minus_one {
                format!("-x_{j}")
            } else {
                format!("{coeff}x_{j}")
            };
            if i > 0 && !rendered.starts_with('-') {
                write!(f, "+")?;
            }
            write!(f, "{rendered}")?;
        }
        Ok(())
    }
}

/// A partition with at most one drawn part value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPartition {
    base: PartList,
    drawn: Option<u64>,
}

impl DecoratedPartition {
    /// Wraps a part list, optionally marking the first occurrence of
    /// `drawn`; the value must occur in the list.
    pub fn new(base: PartList, drawn: Option<u64>) -> Result<Self> {
        if let Some(v) = drawn {
            if !base.iter().any(|p| p == v) {
                return Err(Error::DrawnPartMissing { part: v });
            }
        }
        Ok(Self { base, drawn })
    }

    pub fn plain(base: PartList) -> Self {
        Self { base, drawn: None }
    }

    pub fn base(&self) -> &PartList {
        &self.base
    }

    pub fn drawn(&self) -> Option<u64> {
        self.drawn
    }

    pub fn weight(&self) -> u64 {
        self.base.weight()
    }
}

impl fmt::Display for DecoratedPartition {
    /// Wire format: the part list with a `~` suffix on the first occurrence
    /// of the drawn value, e.g. `3~,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pending = self.drawn;
        for (i, p) in self.base.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            if pending == Some(p) {
                write!(f, "~")?;
                pending = None;
            }
        }
        Ok(())
    }
}

impl FromStr for DecoratedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DecoratedPartition::plain(PartList::empty()));
        }
        let mut parts = Vec::new();
        let mut drawn = None;
        for token in s.split(',') {
            let token = token.trim();
            let (digits, marked) = match token.strip_suffix('~') {
                Some(rest) => (rest, true),
                None => (token, false),
            };
            let value: u64 = digits
                .parse()
                .map_err(|_| Error::ParseParts(format!("`{token}` is not a part")))?;
            if value == 0 {
                return Err(Error::ZeroPart);
            }
            if marked {
                if drawn.is_some() {
                    return Err(Error::ParseParts(
                        "at most one part may carry the ~ mark".to_string(),
                    ));
                }
                drawn = Some(value);
            }
            parts.push(value);
        }
        DecoratedPartition::new(PartList::new(parts)?, drawn)
    }
}

/// Yields every element of the decorated set of `n`: for each partition, the
/// plain copy first, then one drawn copy per distinct value in decreasing
/// value order.
pub fn enumerate_decorated(n: u64) -> impl Iterator<Item = DecoratedPartition> {
    enumerate_partitions(n).flat_map(|p| {
        let base = p.to_part_list();
        let mut out = Vec::with_capacity(1 + p.distinct_count() as usize);
        out.push(DecoratedPartition::plain(base.clone()));
        let values: Vec<u64> = p.distinct().map(|(v, _)| v).collect();
        for &v in values.iter().rev() {
            out.push(DecoratedPartition {
                base: base.clone(),
                drawn: Some(v),
            });
        }
        out
    })
}

/// The weight `W`: one `x_v` per non-drawn part occurrence.
pub fn weight_w(d: &DecoratedPartition) -> LinearForm {
    let mut form = LinearForm::zero();
    for (value, t) in d.base.distinct() {
        let effective = if d.drawn == Some(value) { t - 1 } else { t };
        form.add_term(value, effective);
    }
    form
}

/// The weight `W~`: zero without a drawn part, else `Σ_{j=1}^{v} ⌊v/j⌋ x_j`
/// for the drawn value `v`.
pub fn weight_wtilde(d: &DecoratedPartition) -> LinearForm {
    let mut form = LinearForm::zero();
    if let Some(v) = d.drawn {
        for j in 1..=v {
            form.add_term(j, v / j);
        }
    }
    form
}

/// Checks that the two weights agree in aggregate over the decorated set:
/// `Σ W = Σ W~` as linear forms.
pub fn check_decorated_weights(n: u64) -> IdentityReport {
    let mut lhs = LinearForm::zero();
    let mut rhs = LinearForm::zero();
    for d in enumerate_decorated(n) {
        lhs += &weight_w(&d);
        rhs += &weight_wtilde(&d);
    }
    exact_form_report(IdentityTag::DecoratedWeights, n, 0, lhs, rhs)
}

/// The closed form for either side's `x_j` coefficient in [`check_decorated_weights`]:
/// `Σ_{k=j}^{n} ⌊k/j⌋ p(n-k)`. Returns 0 when `j > n`.
pub fn coefficient_formula(n: u64, j: u64) -> Result<BigInt> {
    if j < 1 {
        return Err(Error::ZeroIndex);
    }
    if j > n {
        return Ok(BigInt::zero());
    }
    let table = partition_count(n);
    let mut sum = BigInt::zero();
    for k in j..=n {
        sum += BigInt::from(k / j) * BigInt::from(table.value(n - k).clone());
    }
    Ok(sum)
}

/// Aggregate over all solutions of `t_1 + m·t_m + 2m·t_{2m} + ⋯ = l` with
/// `m | t_1`: the solution count and both weight sums.
#[derive(Debug, Clone, Default)]
struct Solved {
    count: u64,
    /// `Σ_solutions Σ_j x_j t_{jm}`.
    tform: LinearForm,
    /// `Σ_solutions Σ_j x_j ⌊t_1/(jm)⌋`.
    fform: LinearForm,
}

/// Enumerates the constrained solutions by recursion over the multiples of
/// `m`, memoized on (remaining weight, next multiple index).
struct RestrictedSolver {
    m: u64,
    memo: HashMap<(u64, u64), Solved>,
}

impl RestrictedSolver {
    fn new(m: u64) -> Self {
        Self {
            m,
            memo: HashMap::new(),
        }
    }

    fn solve(&mut self, l: u64) -> Solved {
        self.rec(l, 1)
    }

    fn rec(&mut self, rem: u64, i: u64) -> Solved {
        if let Some(hit) = self.memo.get(&(rem, i)) {
            return hit.clone();
        }
        let m = self.m;
        let solved = if i * m > rem {
            // every remaining multiple is forced to zero; the leftover goes
            // to t_1, which must be a multiple of m
            if rem.is_multiple_of(m) {
                let mut fform = LinearForm::zero();
                let mut j = 1;
                while j * m <= rem {
                    fform.add_term(j, rem / (j * m));
                    j += 1;
                }
                Solved {
                    count: 1,
                    tform: LinearForm::zero(),
                    fform,
                }
            } else {
                Solved::default()
            }
        } else {
            let mut total = Solved::default();
            for c in 0..=rem / (i * m) {
                let sub = self.rec(rem - c * i * m, i + 1);
                total.count += sub.count;
                total.tform += &sub.tform;
                total
                    .tform
                    .add_term(i, BigInt::from(c) * BigInt::from(sub.count));
                total.fform += &sub.fform;
            }
            total
        };
        self.memo.insert((rem, i), solved.clone());
        solved
    }
}

/// Checks the refined identity at a fixed residual weight `l`: over all
/// solutions of `t_1 + m·t_m + 2m·t_{2m} + ⋯ = l` with `m | t_1`,
/// `Σ (x_1 t_m + x_2 t_{2m} + ⋯) = Σ (x_1 ⌊t_1/m⌋ + x_2 ⌊t_1/(2m)⌋ + ⋯)`.
pub fn check_restricted_forms(l: u64, m: u64) -> Result<IdentityReport> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { m, min: 2 });
    }
    let solved = RestrictedSolver::new(m).solve(l);
    Ok(exact_form_report(
        IdentityTag::Restricted,
        l,
        m,
        solved.tform,
        solved.fform,
    ))
}

/// Checks both convolution decompositions over `P_n`: the full sums
/// `Σ_λ Σ_j x_j t_{jm}` and `Σ_λ Σ_j x_j ⌊t_1/(jm)⌋` each equal the
/// convolution of the restricted sums of [`check_restricted_forms`] against
/// the counts `p_m(n-l)`. One report covers both equalities; on failure the
/// sides show the first decomposition that broke.
pub fn check_convolution(n: u64, m: u64) -> Result<IdentityReport> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { m, min: 2 });
    }
    let mut full_t = LinearForm::zero();
    let mut full_f = LinearForm::zero();
    for p in enumerate_partitions(n) {
        for (part, t) in p.distinct() {
            if part % m == 0 {
                full_t.add_term(part / m, t);
            }
        }
        let t1 = p.multiplicity(1);
        let mut j = 1;
        while j * m <= t1 {
            full_f.add_term(j, t1 / (j * m));
            j += 1;
        }
    }
    let counts = restricted_count(n, m)?;
    let mut solver = RestrictedSolver::new(m);
    let mut conv_t = LinearForm::zero();
    let mut conv_f = LinearForm::zero();
    for l in 0..=n {
        let solved = solver.solve(l);
        let scale = BigInt::from(counts.value(n - l).clone());
        conv_t.scaled_add(&solved.tform, &scale);
        conv_f.scaled_add(&solved.fform, &scale);
    }
    let t_side_holds = full_t == conv_t;
    let (lhs, rhs) = if t_side_holds && full_f != conv_f {
        (full_f, conv_f)
    } else {
        (full_t, conv_t)
    };
    Ok(exact_form_report(IdentityTag::Convolution, n, m, lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::complement_count;
    use crate::identities::Value;
    use num_traits::ToPrimitive;

    fn decorated(s: &str) -> DecoratedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight_w(&decorated("2,1~,1")).to_string(), "x_1+x_2");
        assert_eq!(weight_w(&decorated("4~")).to_string(), "0");
        assert_eq!(
            weight_wtilde(&decorated("3~,1")).to_string(),
            "3x_1+x_2+x_3"
        );
        assert_eq!(weight_wtilde(&decorated("3,1")).to_string(), "0");
        assert_eq!(weight_w(&decorated("3,1")).to_string(), "x_1+x_3");
        assert_eq!(weight_wtilde(&decorated("1~")).to_string(), "x_1");
    }

    #[test]
    fn decorated_wire_format_round_trips() {
        for s in ["3~,1", "2,1~,1", "4~", "3,1", "7,7,2~,1"] {
            assert_eq!(decorated(s).to_string(), s);
        }
        assert_eq!(decorated("").base(), &PartList::empty());
        assert!("1~,2~".parse::<DecoratedPartition>().is_err());
        assert!("3~,0".parse::<DecoratedPartition>().is_err());
        assert!(matches!(
            DecoratedPartition::new("3,1".parse().unwrap(), Some(2)),
            Err(Error::DrawnPartMissing { part: 2 })
        ));
    }

    #[test]
    fn decoration_sits_on_first_occurrence_only() {
        let d = DecoratedPartition::new("5,5,5".parse().unwrap(), Some(5)).unwrap();
        assert_eq!(d.to_string(), "5~,5,5");
        assert_eq!(weight_w(&d).to_string(), "2x_5");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_decorated(4).count(), 12);
        assert_eq!(enumerate_decorated(5).count(), 19);
        assert_eq!(enumerate_decorated(1).count(), 2);
    }

    #[test]
    fn enumeration_order_for_two() {
        let all: Vec<String> = enumerate_decorated(2).map(|d| d.to_string()).collect();
        assert_eq!(all, vec!["2", "2~", "1,1", "1~,1"]);
    }

    #[test]
    fn drawn_value_count_equals_partition_count_of_remainder() {
        let table = partition_count(12);
        for n in 1..=12u64 {
            for k in 1..=n {
                let observed = enumerate_decorated(n)
                    .filter(|d| d.drawn() == Some(k))
                    .count();
                assert_eq!(
                    observed as u64,
                    table.value(n - k).to_u64().unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn decorated_weights_tiny_and_frozen() {
        let r = check_decorated_weights(1);
        match (&r.lhs, &r.rhs) {
            (Value::Form(l), Value::Form(rr)) => {
                assert_eq!(l.to_string(), "x_1");
                assert_eq!(rr.to_string(), "x_1");
            }
            other => panic!("expected forms, got {other:?}"),
        }

        let r = check_decorated_weights(4);
        assert!(r.verdict.is_pass());
        match &r.lhs {
            Value::Form(form) => assert_eq!(form.to_string(), "14x_1+5x_2+2x_3+x_4"),
            other => panic!("expected form, got {other:?}"),
        }
    }

    #[test]
    fn decorated_weights_pass_midrange() {
        for n in 1..=14u64 {
            assert!(check_decorated_weights(n).verdict.is_pass(), "n={n}");
        }
    }

    #[test]
    fn coefficient_formula_matches_weight_total_sides() {
        for n in 1..=10u64 {
            let r = check_decorated_weights(n);
            let Value::Form(form) = &r.lhs else { panic!() };
            for j in 1..=n {
                assert_eq!(
                    form.coefficient(j),
                    coefficient_formula(n, j).unwrap(),
                    "n={n} j={j}"
                );
            }
        }
        assert_eq!(coefficient_formula(1, 1).unwrap(), BigInt::from(1));
        assert_eq!(coefficient_formula(4, 4).unwrap(), BigInt::from(1));
        assert_eq!(coefficient_formula(4, 9).unwrap(), BigInt::zero());
        assert!(matches!(coefficient_formula(4, 0), Err(Error::ZeroIndex)));
    }

    #[test]
    fn restricted_forms_small_cases() {
        let r = check_restricted_forms(0, 2).unwrap();
        assert_eq!(r.lhs, Value::Form(LinearForm::zero()));
        assert_eq!(r.rhs, Value::Form(LinearForm::zero()));

        let r = check_restricted_forms(2, 2).unwrap();
        match (&r.lhs, &r.rhs) {
            (Value::Form(l), Value::Form(rr)) => {
                assert_eq!(l.to_string(), "x_1");
                assert_eq!(rr.to_string(), "x_1");
            }
            other => panic!("expected forms, got {other:?}"),
        }
        assert!(matches!(
            check_restricted_forms(2, 1),
            Err(Error::ModulusTooSmall { .. })
        ));
    }

    #[test]
    fn restricted_forms_pass_and_count_solutions() {
        for m in 2..=4u64 {
            let complement = complement_count(14, m).unwrap();
            let mut solver = RestrictedSolver::new(m);
            for l in 0..=14u64 {
                let r = check_restricted_forms(l, m).unwrap();
                assert!(r.verdict.is_pass(), "l={l} m={m}");
                let solved = solver.solve(l);
                assert_eq!(
                    solved.count,
                    complement.value(l).to_u64().unwrap(),
                    "solution count vs complement table, l={l} m={m}"
                );
            }
        }
    }

    #[test]
    fn convolution_small_cases() {
        let r = check_convolution(1, 2).unwrap();
        assert!(r.verdict.is_pass());
        assert_eq!(r.lhs, Value::Form(LinearForm::zero()));

        let r = check_convolution(4, 2).unwrap();
        assert!(r.verdict.is_pass());
        match &r.lhs {
            Value::Form(form) => assert_eq!(form.to_string(), "3x_1+x_2"),
            other => panic!("expected form, got {other:?}"),
        }
    }

    #[test]
    fn convolution_passes_midrange() {
        for n in 1..=12u64 {
            for m in 2..=4u64 {
                assert!(
                    check_convolution(n, m).unwrap().verdict.is_pass(),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn linear_form_algebra() {
        let mut a = LinearForm::zero();
        a.add_term(2, 3);
        a.add_term(1, 1);
        a.add_term(2, -3);
        assert_eq!(a.to_string(), "x_1");
        a.add_term(5, -2);
        assert_eq!(a.to_string(), "x_1-2x_5");
        let mut b = LinearForm::zero();
        b.scaled_add(&a, &BigInt::from(4));
        assert_eq!(b.to_string(), "4x_1-8x_5");
        assert_eq!(b.coefficient(3), BigInt::zero());
    }
}
