//! Job generation and execution for the verification suites.
//!
//! A verification run expands its configuration into a flat list of jobs, one
//! per report row, in a canonical order: identity tag first, then `n`, `m`,
//! `k`, sign, and sample index. Executing the list with an indexed parallel
//! iterator preserves that order, so the rendered report is byte-identical no
//! matter how many worker threads ran it.

use std::time::Instant;

use glaisher::{
    check_convolution, check_decorated_weights, check_per_k, check_per_k_first, check_per_k_signed,
    check_poly_full_eval, check_poly_xyz_eval, check_restricted_forms, check_transport,
    check_weighted_sum, check_zsum, derive_seed, sample_complex, sample_rational_point, Complex64,
    IdentityReport, IdentityTag, RationalPoint, Sign, WeightVariant, ZSumVariant,
};

/// Expanded settings for a `verify` run.
pub struct VerifyConfig {
    pub identities: Vec<IdentityTag>,
    pub n_range: (u64, u64),
    pub m_range: (u64, u64),
    pub signs: Vec<Sign>,
    pub z_samples: u64,
    pub points: u64,
    pub seed: u64,
    pub timings: bool,
}

/// One scheduled check, carrying every input it needs.
///
/// Sampled inputs (complex points, rational points) are drawn during job
/// generation so that execution is a pure function of the job.
pub enum Job {
    PerK {
        tag: IdentityTag,
        n: u64,
        m: u64,
        k: u64,
    },
    ZSum {
        variant: ZSumVariant,
        n: u64,
        m: u64,
        sign: Sign,
        z: Complex64,
        seed: Option<u64>,
    },
    Weighted {
        variant: WeightVariant,
        n: u64,
        m: u64,
        sign: Sign,
    },
    Transport {
        n: u64,
        m: u64,
    },
    PolyFull {
        n: u64,
        m: u64,
        point: RationalPoint,
        seed: Option<u64>,
    },
    PolyXyz {
        n: u64,
        m: u64,
        point: RationalPoint,
        seed: Option<u64>,
    },
    Decorated {
        n: u64,
    },
    Restricted {
        l: u64,
        m: u64,
    },
    Convolution {
        n: u64,
        m: u64,
    },
}

fn tag_ordinal(tag: IdentityTag) -> u64 {
    IdentityTag::ALL
        .iter()
        .position(|&t| t == tag)
        .expect("tag missing from the master list") as u64
}

fn sign_ordinal(sign: Sign) -> u64 {
    match sign {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

/// Radius of the disk complex evaluation points are drawn from.
pub const Z_SAMPLE_RADIUS: f64 = 2.0;

/// Expands a configuration into jobs in canonical report order.
pub fn build_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let (n_lo, n_hi) = cfg.n_range;
    let (m_lo, m_hi) = cfg.m_range;
    let ns = move || n_lo..=n_hi;
    let ms = move || m_lo..=m_hi;
    let mut jobs = Vec::new();

    for &tag in &cfg.identities {
        match tag {
            IdentityTag::PerK | IdentityTag::PerKFirst | IdentityTag::PerKSigned => {
                for n in ns() {
                    for m in ms() {
                        let k_max = n.div_ceil(m);
                        for k in 1..=k_max {
                            jobs.push(Job::PerK { tag, n, m, k });
                        }
                    }
                }
            }
            IdentityTag::ZSumFloor | IdentityTag::ZSumFirst | IdentityTag::ZSumSigned => {
                let variant = match tag {
                    IdentityTag::ZSumFloor => ZSumVariant::Floor,
                    IdentityTag::ZSumFirst => ZSumVariant::First,
                    _ => ZSumVariant::Signed,
                };
                for n in ns() {
                    for m in ms() {
                        for &sign in &cfg.signs {
                            for sample in 0..cfg.z_samples {
                                let seed = derive_seed(
                                    cfg.seed,
                                    &[tag_ordinal(tag), n, m, sign_ordinal(sign), sample],
                                );
                                jobs.push(Job::ZSum {
                                    variant,
                                    n,
                                    m,
                                    sign,
                                    z: sample_complex(seed, Z_SAMPLE_RADIUS),
                                    seed: Some(seed),
                                });
                            }
                        }
                    }
                }
            }
            IdentityTag::BetaSum | IdentityTag::GammaSum => {
                let variant = if tag == IdentityTag::BetaSum {
                    WeightVariant::Beta
                } else {
                    WeightVariant::Gamma
                };
                for n in ns() {
                    for m in ms() {
                        for &sign in &cfg.signs {
                            jobs.push(Job::Weighted {
                                variant,
                                n,
                                m,
                                sign,
                            });
                        }
                    }
                }
            }
            IdentityTag::Transport => {
                for n in ns() {
                    for m in ms() {
                        jobs.push(Job::Transport { n, m });
                    }
                }
            }
            IdentityTag::PolyFull | IdentityTag::PolyXyz => {
                for n in ns() {
                    for m in ms() {
                        for sample in 0..cfg.points {
                            let seed = derive_seed(cfg.seed, &[tag_ordinal(tag), n, m, 0, sample]);
                            let coords = if tag == IdentityTag::PolyFull { n } else { 2 };
                            let point = sample_rational_point(coords, seed);
                            let seed = Some(seed);
                            jobs.push(if tag == IdentityTag::PolyFull {
                                Job::PolyFull { n, m, point, seed }
                            } else {
                                Job::PolyXyz { n, m, point, seed }
                            });
                        }
                    }
                }
            }
            IdentityTag::DecoratedWeights => {
                for n in ns() {
                    jobs.push(Job::Decorated { n });
                }
            }
            IdentityTag::Restricted => {
                for l in ns() {
                    for m in ms().filter(|&m| m >= 2) {
                        jobs.push(Job::Restricted { l, m });
                    }
                }
            }
            IdentityTag::Convolution => {
                for n in ns() {
                    for m in ms().filter(|&m| m >= 2) {
                        jobs.push(Job::Convolution { n, m });
                    }
                }
            }
        }
    }
    jobs
}

/// Expands a `table` request into one job per (n, m) cell.
///
/// Sampled inputs are pinned: complex sums evaluate at `z = 0` and rational
/// evaluations use the first seeded draw, so a table is a deterministic
/// cross-section rather than a sweep.
pub fn build_table_jobs(
    tag: IdentityTag,
    n_range: (u64, u64),
    m_range: (u64, u64),
    sign: Sign,
    k: u64,
    seed: u64,
) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in n_range.0..=n_range.1 {
        if tag == IdentityTag::DecoratedWeights {
            jobs.push(Job::Decorated { n });
            continue;
        }
        for m in m_range.0..=m_range.1 {
            match tag {
                IdentityTag::PerK | IdentityTag::PerKFirst | IdentityTag::PerKSigned => {
                    jobs.push(Job::PerK { tag, n, m, k });
                }
                IdentityTag::ZSumFloor | IdentityTag::ZSumFirst | IdentityTag::ZSumSigned => {
                    let variant = match tag {
                        IdentityTag::ZSumFloor => ZSumVariant::Floor,
                        IdentityTag::ZSumFirst => ZSumVariant::First,
                        _ => ZSumVariant::Signed,
                    };
                    jobs.push(Job::ZSum {
                        variant,
                        n,
                        m,
                        sign,
                        z: Complex64::new(0.0, 0.0),
                        seed: None,
                    });
                }
                IdentityTag::BetaSum | IdentityTag::GammaSum => {
                    let variant = if tag == IdentityTag::BetaSum {
                        WeightVariant::Beta
                    } else {
                        WeightVariant::Gamma
                    };
                    jobs.push(Job::Weighted {
                        variant,
                        n,
                        m,
                        sign,
                    });
                }
                IdentityTag::Transport => jobs.push(Job::Transport { n, m }),
                IdentityTag::PolyFull | IdentityTag::PolyXyz => {
                    let seed = derive_seed(seed, &[tag_ordinal(tag), n, m, 0, 0]);
                    let coords = if tag == IdentityTag::PolyFull { n } else { 2 };
                    let point = sample_rational_point(coords, seed);
                    let seed = Some(seed);
                    jobs.push(if tag == IdentityTag::PolyFull {
                        Job::PolyFull { n, m, point, seed }
                    } else {
                        Job::PolyXyz { n, m, point, seed }
                    });
                }
                IdentityTag::Restricted => {
                    if m >= 2 {
                        jobs.push(Job::Restricted { l: n, m });
                    }
                }
                IdentityTag::Convolution => {
                    if m >= 2 {
                        jobs.push(Job::Convolution { n, m });
                    }
                }
                IdentityTag::DecoratedWeights => unreachable!("handled before the m loop"),
            }
        }
    }
    jobs
}

/// Runs one job, returning its report and elapsed wall time in microseconds.
///
/// Timing is only measured when requested; otherwise the elapsed field is
/// zero so repeated runs produce identical bytes.
pub fn run_job(job: &Job, timings: bool) -> glaisher::Result<(IdentityReport, u64)> {
    let start = timings.then(Instant::now);
    let report = match job {
        Job::PerK { tag, n, m, k } => match tag {
            IdentityTag::PerKFirst => check_per_k_first(*n, *m, *k),
            IdentityTag::PerKSigned => check_per_k_signed(*n, *m, *k),
            _ => check_per_k(*n, *m, *k),
        }?,
        Job::ZSum {
            variant,
            n,
            m,
            sign,
            z,
            seed,
        } => {
            let mut report = check_zsum(*n, *m, *z, *sign, *variant)?;
            report.seed = *seed;
            report
        }
        Job::Weighted {
            variant,
            n,
            m,
            sign,
        } => check_weighted_sum(*n, *m, *sign, *variant)?,
        Job::Transport { n, m } => check_transport(*n, *m)?,
        Job::PolyFull { n, m, point, seed } => check_poly_full_eval(*n, *m, point, *seed)?,
        Job::PolyXyz { n, m, point, seed } => {
            let mut report = check_poly_xyz_eval(*n, *m, point.x(1), point.x(2), &point.z)?;
            report.seed = *seed;
            report
        }
        Job::Decorated { n } => check_decorated_weights(*n),
        Job::Restricted { l, m } => check_restricted_forms(*l, *m)?,
        Job::Convolution { n, m } => check_convolution(*n, *m)?,
    };
    let elapsed = start.map(|t| t.elapsed().as_micros() as u64).unwrap_or(0);
    Ok((report, elapsed))
}
