//! Brute-force checkers for the partition identities, each summing both
//! sides over the full set `P_n` and reporting the outcome.
//!
//! Integer and rational identities are checked exactly. The complex-weight
//! family is checked exactly for small nonnegative integer exponents and
//! numerically (relative tolerance [`NUMERIC_RELATIVE_TOLERANCE`]) for
//! arbitrary complex exponents. Every checker returns an [`IdentityReport`]
//! carrying both side values, so a failing run shows the first divergence
//! rather than a bare boolean.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decorated::LinearForm;
use crate::error::{Error, Result};
use crate::partitions::enumerate_partitions;
use crate::statistics::transport_check;

/// Relative tolerance for the numeric (complex exponent) tier:
/// pass iff `|lhs - rhs| <= tol * (1 + |lhs|)`.
pub const NUMERIC_RELATIVE_TOLERANCE: f64 = 1e-9;

/// Uniform sign choice for the identities stated with a `±`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `sign^exp` as an integer unit.
    pub fn pow(self, exp: u64) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => {
                if exp.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "+" | "plus" => Ok(Sign::Plus),
            "-1" | "-" | "minus" => Ok(Sign::Minus),
            other => Err(Error::UnknownSign(other.to_string())),
        }
    }
}

/// The three shapes of the complex-weight identity family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZSumVariant {
    /// Right side reads `⌊t_k/m⌋` at index `k`.
    Floor,
    /// Right side reads `⌊t_1/(km)⌋` at index `k`.
    First,
    /// Both sides as in [`ZSumVariant::Floor`] with an alternating global
    /// prefactor `(-1)^{Σ t_{km}}` resp. `(-1)^{Σ ⌊t_k/m⌋}` per partition.
    Signed,
}

/// The two weighted signed-sum identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightVariant {
    /// Weight `β`: `Σ k·t_{km}` against `Σ k·⌊t_k/m⌋`.
    Beta,
    /// Weight `γ`: weight of parts not divisible by `m` against
    /// `Σ k·(t_k mod m)`.
    Gamma,
}

/// Stable tag naming one identity family; doubles as the CLI vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityTag {
    PerK,
    PerKFirst,
    PerKSigned,
    ZSumFloor,
    ZSumFirst,
    ZSumSigned,
    BetaSum,
    GammaSum,
    Transport,
    PolyFull,
    PolyXyz,
    DecoratedWeights,
    Restricted,
    Convolution,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 14] = [
        IdentityTag::PerK,
        IdentityTag::PerKFirst,
        IdentityTag::PerKSigned,
        IdentityTag::ZSumFloor,
        IdentityTag::ZSumFirst,
        IdentityTag::ZSumSigned,
        IdentityTag::BetaSum,
        IdentityTag::GammaSum,
        IdentityTag::Transport,
        IdentityTag::PolyFull,
        IdentityTag::PolyXyz,
        IdentityTag::DecoratedWeights,
        IdentityTag::Restricted,
        IdentityTag::Convolution,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IdentityTag::PerK => "per-k",
            IdentityTag::PerKFirst => "per-k-first",
            IdentityTag::PerKSigned => "per-k-signed",
            IdentityTag::ZSumFloor => "zsum-floor",
            IdentityTag::ZSumFirst => "zsum-first",
            IdentityTag::ZSumSigned => "zsum-signed",
            IdentityTag::BetaSum => "beta-sum",
            IdentityTag::GammaSum => "gamma-sum",
            IdentityTag::Transport => "transport",
            IdentityTag::PolyFull => "poly-full",
            IdentityTag::PolyXyz => "poly-xyz",
            IdentityTag::DecoratedWeights => "decorated-weights",
            IdentityTag::Restricted => "restricted",
            IdentityTag::Convolution => "convolution",
        }
    }
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for IdentityTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        IdentityTag::ALL
            .into_iter()
            .find(|tag| tag.label() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// One side value of a checked identity.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(BigInt),
    Rational(BigRational),
    Complex(Complex64),
    Form(LinearForm),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rational(v) => write!(f, "{v}"),
            Value::Complex(v) => write!(f, "{}", format_complex(*v)),
            Value::Form(v) => write!(f, "{v}"),
        }
    }
}

/// Canonical complex rendering: `re+imi` or `re-imi`, negative zero
/// normalized away.
pub fn format_complex(c: Complex64) -> String {
    let re = if c.re == 0.0 { 0.0 } else { c.re };
    let im = if c.im == 0.0 { 0.0 } else { c.im };
    if im.is_sign_negative() {
        format!("{}-{}i", re, -im)
    } else {
        format!("{}+{}i", re, im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of one identity check: the identity, the parameters it ran with,
/// both side values, and the verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity: IdentityTag,
    pub n: u64,
    pub m: u64,
    pub k: Option<u64>,
    pub sign: Option<Sign>,
    pub z: Option<Complex64>,
    /// Canonical rendering of the rational evaluation point, when one was
    /// used.
    pub point: Option<String>,
    /// Seed the evaluation point or z sample was drawn from, when recorded.
    pub seed: Option<u64>,
    pub lhs: Value,
    pub rhs: Value,
    pub verdict: Verdict,
    /// `|lhs - rhs|` in numeric mode; 0 for exact checks.
    pub residual: f64,
}

fn exact_report(identity: IdentityTag, n: u64, m: u64, lhs: Value, rhs: Value) -> IdentityReport {
    let verdict = if lhs == rhs {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    IdentityReport {
        identity,
        n,
        m,
        k: None,
        sign: None,
        z: None,
        point: None,
        seed: None,
        lhs,
        rhs,
        verdict,
        residual: 0.0,
    }
}

/// Builds an exact report whose sides are linear forms; `m = 0` marks a
/// check with no modulus parameter.
pub(crate) fn exact_form_report(
    identity: IdentityTag,
    n: u64,
    m: u64,
    lhs: LinearForm,
    rhs: LinearForm,
) -> IdentityReport {
    exact_report(identity, n, m, Value::Form(lhs), Value::Form(rhs))
}

fn numeric_report(
    identity: IdentityTag,
    n: u64,
    m: u64,
    lhs: Complex64,
    rhs: Complex64,
) -> IdentityReport {
    let residual = (lhs - rhs).norm();
    let verdict = if residual <= NUMERIC_RELATIVE_TOLERANCE * (1.0 + lhs.norm()) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    IdentityReport {
        identity,
        n,
        m,
        k: None,
        sign: None,
        z: None,
        point: None,
        seed: None,
        lhs: Value::Complex(lhs),
        rhs: Value::Complex(rhs),
        verdict,
        residual,
    }
}

fn require_modulus(m: u64) -> Result<()> {
    if m < 1 {
        return Err(Error::ModulusTooSmall { m, min: 1 });
    }
    Ok(())
}

fn require_index(k: u64) -> Result<()> {
    if k < 1 {
        return Err(Error::ZeroIndex);
    }
    Ok(())
}

fn neg1_pow(exp: u64) -> i128 {
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Checks `Σ_{λ∈P_n} t_{km} = Σ_{λ∈P_n} ⌊t_k/m⌋`.
pub fn check_per_k(n: u64, m: u64, k: u64) -> Result<IdentityReport> {
    require_modulus(m)?;
    require_index(k)?;
    let mut lhs = 0i128;
    let mut rhs = 0i128;
    for p in enumerate_partitions(n) {
        lhs += p.multiplicity(k * m) as i128;
        rhs += (p.multiplicity(k) / m) as i128;
    }
    let mut report = exact_report(
        IdentityTag::PerK,
        n,
        m,
        Value::Int(lhs.into()),
        Value::Int(rhs.into()),
    );
    report.k = Some(k);
    Ok(report)
}

/// Checks `Σ_{λ∈P_n} t_{km} = Σ_{λ∈P_n} ⌊t_1/(km)⌋`.
pub fn check_per_k_first(n: u64, m: u64, k: u64) -> Result<IdentityReport> {
    require_modulus(m)?;
    require_index(k)?;
    let mut lhs = 0i128;
    let mut rhs = 0i128;
    for p in enumerate_partitions(n) {
        lhs += p.multiplicity(k * m) as i128;
        rhs += (p.multiplicity(1) / (k * m)) as i128;
    }
    let mut report = exact_report(
        IdentityTag::PerKFirst,
        n,
        m,
        Value::Int(lhs.into()),
        Value::Int(rhs.into()),
    );
    report.k = Some(k);
    Ok(report)
}

/// Checks the alternating refinement
/// `Σ (-1)^{t_m+t_{2m}+⋯} t_{km} = Σ (-1)^{⌊t_1/m⌋+⌊t_2/m⌋+⋯} ⌊t_k/m⌋`.
pub fn check_per_k_signed(n: u64, m: u64, k: u64) -> Result<IdentityReport> {
    require_modulus(m)?;
    require_index(k)?;
    let mut lhs = 0i128;
    let mut rhs = 0i128;
    for p in enumerate_partitions(n) {
        let mut plain_exp = 0u64;
        let mut floor_exp = 0u64;
        for (part, t) in p.distinct() {
            if part % m == 0 {
                plain_exp += t;
            }
            floor_exp += t / m;
        }
        lhs += neg1_pow(plain_exp) * p.multiplicity(k * m) as i128;
        rhs += neg1_pow(floor_exp) * (p.multiplicity(k) / m) as i128;
    }
    let mut report = exact_report(
        IdentityTag::PerKSigned,
        n,
        m,
        Value::Int(lhs.into()),
        Value::Int(rhs.into()),
    );
    report.k = Some(k);
    Ok(report)
}

impl ZSumVariant {
    fn tag(self) -> IdentityTag {
        match self {
            ZSumVariant::Floor => IdentityTag::ZSumFloor,
            ZSumVariant::First => IdentityTag::ZSumFirst,
            ZSumVariant::Signed => IdentityTag::ZSumSigned,
        }
    }
}

impl WeightVariant {
    fn tag(self) -> IdentityTag {
        match self {
            WeightVariant::Beta => IdentityTag::BetaSum,
            WeightVariant::Gamma => IdentityTag::GammaSum,
        }
    }
}

/// `z` values that can be checked exactly: small nonnegative real integers.
fn exact_exponent(z: Complex64) -> Option<u32> {
    if z.im != 0.0 || z.re < 0.0 || z.re > 63.0 || z.re.fract() != 0.0 {
        return None;
    }
    Some(z.re as u32)
}

/// Checks one of the complex-weight identities
/// `Σ_λ (t_m ± 2^z t_{2m} + 3^z t_{3m} ± ⋯) = Σ_λ (⌊t_1/m⌋ ± 2^z ⌊t_2/m⌋ + ⋯)`
/// (variants swap the right side or add alternating prefactors). The term
/// signs follow `sign^{k+1}`: all positive for `+`, alternating for `-`.
/// Integer `z ≥ 0` is evaluated exactly; other `z` numerically.
pub fn check_zsum(
    n: u64,
    m: u64,
    z: Complex64,
    sign: Sign,
    variant: ZSumVariant,
) -> Result<IdentityReport> {
    require_modulus(m)?;
    let mut report = match exact_exponent(z) {
        Some(e) => check_zsum_exact(n, m, e, sign, variant),
        None => check_zsum_numeric(n, m, z, sign, variant),
    };
    report.k = None;
    report.sign = Some(sign);
    report.z = Some(z);
    Ok(report)
}

fn check_zsum_exact(n: u64, m: u64, e: u32, sign: Sign, variant: ZSumVariant) -> IdentityReport {
    let kpow: Vec<BigInt> = (0..=n).map(|k| BigInt::from(k).pow(e)).collect();
    let term = |k: u64, mult: u64| -> BigInt {
        let v = &kpow[k as usize] * BigInt::from(mult);
        if sign.pow(k + 1) < 0 {
            -v
        } else {
            v
        }
    };
    let mut lhs = BigInt::zero();
    let mut rhs = BigInt::zero();
    for p in enumerate_partitions(n) {
        let mut lhs_inner = BigInt::zero();
        let mut rhs_inner = BigInt::zero();
        let mut plain_exp = 0u64;
        let mut floor_exp = 0u64;
        for (part, t) in p.distinct() {
            if part % m == 0 {
                lhs_inner += term(part / m, t);
                plain_exp += t;
            }
            floor_exp += t / m;
            if !matches!(variant, ZSumVariant::First) && t >= m {
                rhs_inner += term(part, t / m);
            }
        }
        if matches!(variant, ZSumVariant::First) {
            let t1 = p.multiplicity(1);
            let mut k = 1;
            while k * m <= t1 {
                rhs_inner += term(k, t1 / (k * m));
                k += 1;
            }
        }
        match variant {
            ZSumVariant::Signed => {
                if neg1_pow(plain_exp) < 0 {
                    lhs -= lhs_inner;
                } else {
                    lhs += lhs_inner;
                }
                if neg1_pow(floor_exp) < 0 {
                    rhs -= rhs_inner;
                } else {
                    rhs += rhs_inner;
                }
            }
            _ => {
                lhs += lhs_inner;
                rhs += rhs_inner;
            }
        }
    }
    exact_report(variant.tag(), n, m, Value::Int(lhs), Value::Int(rhs))
}

fn check_zsum_numeric(
    n: u64,
    m: u64,
    z: Complex64,
    sign: Sign,
    variant: ZSumVariant,
) -> IdentityReport {
    let kpow: Vec<Complex64> = (0..=n)
        .map(|k| (z * (k.max(1) as f64).ln()).exp())
        .collect();
    let term = |k: u64, mult: u64| -> Complex64 {
        kpow[k as usize] * (sign.pow(k + 1) as f64) * (mult as f64)
    };
    let mut lhs = Complex64::new(0.0, 0.0);
    let mut rhs = Complex64::new(0.0, 0.0);
    for p in enumerate_partitions(n) {
        let mut lhs_inner = Complex64::new(0.0, 0.0);
        let mut rhs_inner = Complex64::new(0.0, 0.0);
        let mut plain_exp = 0u64;
        let mut floor_exp = 0u64;
        for (part, t) in p.distinct() {
            if part % m == 0 {
                lhs_inner += term(part / m, t);
                plain_exp += t;
            }
            floor_exp += t / m;
            if !matches!(variant, ZSumVariant::First) && t >= m {
                rhs_inner += term(part, t / m);
            }
        }
        if matches!(variant, ZSumVariant::First) {
            let t1 = p.multiplicity(1);
            let mut k = 1;
            while k * m <= t1 {
                rhs_inner += term(k, t1 / (k * m));
                k += 1;
            }
        }
        match variant {
            ZSumVariant::Signed => {
                lhs += lhs_inner * (neg1_pow(plain_exp) as f64);
                rhs += rhs_inner * (neg1_pow(floor_exp) as f64);
            }
            _ => {
                lhs += lhs_inner;
                rhs += rhs_inner;
            }
        }
    }
    numeric_report(variant.tag(), n, m, lhs, rhs)
}

/// Checks the weighted signed sums
/// `Σ (±1)^{t_m+t_{2m}+⋯}·w(λ) = Σ (±1)^{⌊t_1/m⌋+⋯+⌊t_n/m⌋}·w'(λ)`,
/// where `w` is `β`/`β'` or `γ`/`γ'` per `variant`.
pub fn check_weighted_sum(
    n: u64,
    m: u64,
    sign: Sign,
    variant: WeightVariant,
) -> Result<IdentityReport> {
    require_modulus(m)?;
    let mut lhs = 0i128;
    let mut rhs = 0i128;
    for p in enumerate_partitions(n) {
        let mut alpha_sum = 0u64;
        let mut alpha_floor_sum = 0u64;
        let mut beta = 0u64;
        let mut beta_floor = 0u64;
        let mut gamma_o = 0u64;
        let mut gamma_d = 0u64;
        for (part, t) in p.distinct() {
            if part % m == 0 {
                alpha_sum += t;
                beta += (part / m) * t;
            } else {
                gamma_o += part * t;
            }
            let q = t / m;
            alpha_floor_sum += q;
            beta_floor += part * q;
            gamma_d += part * (t % m);
        }
        let (w, w_floor) = match variant {
            WeightVariant::Beta => (beta, beta_floor),
            WeightVariant::Gamma => (gamma_o, gamma_d),
        };
        lhs += sign.pow(alpha_sum) as i128 * w as i128;
        rhs += sign.pow(alpha_floor_sum) as i128 * w_floor as i128;
    }
    let mut report = exact_report(
        variant.tag(),
        n,
        m,
        Value::Int(lhs.into()),
        Value::Int(rhs.into()),
    );
    report.sign = Some(sign);
    Ok(report)
}

/// Checks that the statistic transport holds pointwise across all of `P_n`:
/// the report compares the count of partitions passing
/// [`transport_check`] against `|P_n|`.
pub fn check_transport(n: u64, m: u64) -> Result<IdentityReport> {
    require_modulus(m)?;
    let mut passing: u64 = 0;
    let mut total: u64 = 0;
    for p in enumerate_partitions(n) {
        total += 1;
        if transport_check(&p, m)? {
            passing += 1;
        }
    }
    Ok(exact_report(
        IdentityTag::Transport,
        n,
        m,
        Value::Int(passing.into()),
        Value::Int(total.into()),
    ))
}

/// A rational evaluation point: one value per formal variable `x_1..x_n`
/// plus the value of `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    pub xs: Vec<BigRational>,
    pub z: BigRational,
}

impl RationalPoint {
    /// The all-ones point, at which every side degenerates to `p(n)`.
    pub fn ones(n: u64) -> Self {
        RationalPoint {
            xs: vec![BigRational::one(); n as usize],
            z: BigRational::one(),
        }
    }

    /// Value of `x_k` (1-indexed).
    pub fn x(&self, k: u64) -> &BigRational {
        &self.xs[(k - 1) as usize]
    }
}

impl fmt::Display for RationalPoint {
    /// Comma-joined coordinates with `z` last, e.g. `1/2,-3,4/5,-2/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.xs {
            write!(f, "{x},")?;
        }
        write!(f, "{}", self.z)
    }
}

/// Splitmix64 finalizer, used to spread seed material.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Derives a per-job seed from a root seed and the job coordinates, so each
/// job draws identical samples no matter in which order jobs run.
pub fn derive_seed(root: u64, salt: &[u64]) -> u64 {
    let mut state = splitmix64(root);
    for &v in salt {
        state = splitmix64(state ^ v.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    }
    state
}

/// Draws a nonzero rational with numerator and denominator magnitudes in
/// `1..=5`.
fn sample_rational<R: Rng>(rng: &mut R) -> BigRational {
    let magnitude: i64 = rng.gen_range(1..=5);
    let numerator = if rng.gen::<bool>() {
        magnitude
    } else {
        -magnitude
    };
    let denominator: i64 = rng.gen_range(1..=5);
    BigRational::new(numerator.into(), denominator.into())
}

/// Draws the `n + 1` coordinates of a [`RationalPoint`] from a seeded
/// generator.
pub fn sample_rational_point(n: u64, seed: u64) -> RationalPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs = (0..n).map(|_| sample_rational(&mut rng)).collect();
    let z = sample_rational(&mut rng);
    RationalPoint { xs, z }
}

/// Draws a complex number uniformly from the disk `|z| <= radius`.
pub fn sample_complex_in_disk<R: Rng>(rng: &mut R, radius: f64) -> Complex64 {
    loop {
        let re = (rng.gen::<f64>() * 2.0 - 1.0) * radius;
        let im = (rng.gen::<f64>() * 2.0 - 1.0) * radius;
        let c = Complex64::new(re, im);
        if c.norm() <= radius {
            return c;
        }
    }
}

/// Draws one complex number from the disk `|z| <= radius` using a fresh
/// generator seeded with `seed`.
pub fn sample_complex(seed: u64, radius: f64) -> Complex64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_complex_in_disk(&mut rng, radius)
}

fn rat_pow(base: &BigRational, exp: u64) -> BigRational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Checks the full multivariate equidistribution at one rational point:
/// `Σ_λ x_1^{t_m} x_2^{t_{2m}} ⋯ z^{γ} = Σ_λ x_1^{⌊t_1/m⌋} ⋯ z^{γ'}`.
pub fn check_poly_full_eval(
    n: u64,
    m: u64,
    point: &RationalPoint,
    seed: Option<u64>,
) -> Result<IdentityReport> {
    require_modulus(m)?;
    if (point.xs.len() as u64) < n {
        return Err(Error::PointDimension {
            expected: n,
            got: point.xs.len() as u64,
        });
    }
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    for p in enumerate_partitions(n) {
        let mut lterm = BigRational::one();
        let mut rterm = BigRational::one();
        let mut gamma_o = 0u64;
        let mut gamma_d = 0u64;
        for (part, t) in p.distinct() {
            if part % m == 0 {
                lterm *= rat_pow(point.x(part / m), t);
            } else {
                gamma_o += part * t;
            }
            let q = t / m;
            if q > 0 {
                rterm *= rat_pow(point.x(part), q);
            }
            gamma_d += part * (t % m);
        }
        lhs += lterm * rat_pow(&point.z, gamma_o);
        rhs += rterm * rat_pow(&point.z, gamma_d);
    }
    let mut report = exact_report(
        IdentityTag::PolyFull,
        n,
        m,
        Value::Rational(lhs),
        Value::Rational(rhs),
    );
    report.point = Some(point.to_string());
    report.seed = seed;
    Ok(report)
}

/// Checks the trivariate specialization
/// `Σ_λ x^{α} y^{β} z^{γ} = Σ_λ x^{α'} y^{β'} z^{γ'}` at one exact point.
pub fn check_poly_xyz_eval(
    n: u64,
    m: u64,
    x: &BigRational,
    y: &BigRational,
    z: &BigRational,
) -> Result<IdentityReport> {
    require_modulus(m)?;
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    for p in enumerate_partitions(n) {
        let mut alpha_sum = 0u64;
        let mut alpha_floor_sum = 0u64;
        let mut beta = 0u64;
        let mut beta_floor = 0u64;
        let mut gamma_o = 0u64;
        let mut gamma_d = 0u64;
        for (part, t) in p.distinct() {
            if part % m == 0 {
                alpha_sum += t;
                beta += (part / m) * t;
            } else {
                gamma_o += part * t;
            }
            let q = t / m;
            alpha_floor_sum += q;
            beta_floor += part * q;
            gamma_d += part * (t % m);
        }
        lhs += rat_pow(x, alpha_sum) * rat_pow(y, beta) * rat_pow(z, gamma_o);
        rhs += rat_pow(x, alpha_floor_sum) * rat_pow(y, beta_floor) * rat_pow(z, gamma_d);
    }
    let mut report = exact_report(
        IdentityTag::PolyXyz,
        n,
        m,
        Value::Rational(lhs),
        Value::Rational(rhs),
    );
    report.point = Some(format!("{x},{y},{z}"));
    Ok(report)
}
