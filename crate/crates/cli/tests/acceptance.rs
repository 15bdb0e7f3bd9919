//! Release gates. Each test is one acceptance check over the full desk-scale
//! range it guards, and prints a single checklist line once it holds. Every
//! tolerance and range is pinned here rather than referenced from elsewhere.

use std::collections::BTreeSet;
use std::process::Command;

use glaisher::{
    check_convolution, check_decorated_weights, check_per_k, check_per_k_first, check_per_k_signed,
    check_poly_full_eval, check_poly_xyz_eval, check_restricted_forms, check_transport,
    check_weighted_sum, check_zsum, coefficient_formula, derive_seed, enumerate_decorated,
    enumerate_partitions, partition_count, restricted_count, sample_complex, sample_rational_point,
    sigma, sigma_inv, BigUint, Complex64, Sign, Value, WeightVariant, ZSumVariant,
    NUMERIC_RELATIVE_TOLERANCE,
};

fn gate(line: &str) {
    println!("gate {line}: pass");
}

#[test]
fn gate_01_bijection_is_a_weight_preserving_permutation() {
    for m in 2..=6 {
        for n in 0..=25 {
            let all: Vec<_> = enumerate_partitions(n).collect();
            let mut images = BTreeSet::new();
            for lambda in &all {
                let image = sigma(lambda, m).unwrap();
                assert_eq!(image.n(), n, "weight changed for {lambda} at m={m}");
                let back = sigma_inv(&image, m).unwrap();
                assert_eq!(&back, lambda, "round trip moved {lambda} at m={m}");
                images.insert(image);
            }
            assert_eq!(
                images.len(),
                all.len(),
                "images collide on weight {n} at m={m}"
            );
        }
    }
    gate("01 bijection round trip and permutation, n <= 25, m in 2..=6");
}

#[test]
fn gate_02_statistics_transport_exactly() {
    for m in 2..=6 {
        for n in 0..=25 {
            let report = check_transport(n, m).unwrap();
            assert!(
                report.verdict.is_pass(),
                "transport failed at n={n} m={m}: {} of {} partitions",
                report.lhs,
                report.rhs
            );
        }
    }
    gate("02 alpha and gamma statistics transport, n <= 25, m in 2..=6");
}

#[test]
fn gate_03_per_k_identities_hold_exactly() {
    for n in 0..=25u64 {
        for m in 1..=6 {
            for k in 1..=n.div_ceil(m) {
                for check in [check_per_k, check_per_k_first, check_per_k_signed] {
                    let report = check(n, m, k).unwrap();
                    assert!(
                        report.verdict.is_pass(),
                        "{} failed at n={n} m={m} k={k}: {} vs {}",
                        report.identity,
                        report.lhs,
                        report.rhs
                    );
                }
            }
        }
    }
    gate("03 per-k count identities, n <= 25, m in 1..=6, k <= ceil(n/m)");
}

#[test]
fn gate_04_weighted_signed_sums_agree() {
    for n in 0..=25 {
        for m in 1..=6 {
            for sign in Sign::BOTH {
                for variant in [WeightVariant::Beta, WeightVariant::Gamma] {
                    let report = check_weighted_sum(n, m, sign, variant).unwrap();
                    assert!(
                        report.verdict.is_pass(),
                        "{} failed at n={n} m={m} sign={sign}: {} vs {}",
                        report.identity,
                        report.lhs,
                        report.rhs
                    );
                }
            }
        }
    }
    gate("04 signed beta and gamma sums, n <= 25, m in 1..=6, both signs");
}

#[test]
fn gate_05_complex_sums_within_tolerance_and_exact_at_integers() {
    assert_eq!(NUMERIC_RELATIVE_TOLERANCE, 1e-9);
    let variants = [ZSumVariant::Floor, ZSumVariant::First, ZSumVariant::Signed];
    for n in 0..=20 {
        for m in 2..=6 {
            for sign in Sign::BOTH {
                for (vi, &variant) in variants.iter().enumerate() {
                    for draw in 0..20 {
                        let seed = derive_seed(
                            0,
                            &[
                                vi as u64,
                                n,
                                m,
                                if sign == Sign::Plus { 0 } else { 1 },
                                draw,
                            ],
                        );
                        let z = sample_complex(seed, 2.0);
                        assert!(z.norm() <= 2.0);
                        let report = check_zsum(n, m, z, sign, variant).unwrap();
                        assert!(
                            report.verdict.is_pass(),
                            "{} failed at n={n} m={m} sign={sign} z={z}: residual {}",
                            report.identity,
                            report.residual
                        );
                    }
                    for e in 0..=3 {
                        let z = Complex64::new(e as f64, 0.0);
                        let report = check_zsum(n, m, z, sign, variant).unwrap();
                        assert!(
                            report.verdict.is_pass() && report.residual == 0.0,
                            "{} not exact at n={n} m={m} sign={sign} z={e}",
                            report.identity
                        );
                    }
                }
            }
        }
    }
    gate(
        "05 complex power sums, n <= 20, m in 2..=6, both signs, 20 draws with |z| <= 2 \
         at relative tolerance 1e-9, exact at z in 0..=3",
    );
}

#[test]
fn gate_06_polynomial_sides_agree_at_seeded_rational_points() {
    for n in 0..=15 {
        for m in 1..=6 {
            for draw in 0..100 {
                let seed = derive_seed(1, &[n, m, draw]);
                let point = sample_rational_point(n, seed);
                let report = check_poly_full_eval(n, m, &point, Some(seed)).unwrap();
                assert!(
                    report.verdict.is_pass(),
                    "{} failed at n={n} m={m} point={point}",
                    report.identity
                );

                let seed = derive_seed(2, &[n, m, draw]);
                let point = sample_rational_point(2, seed);
                let report = check_poly_xyz_eval(n, m, point.x(1), point.x(2), &point.z).unwrap();
                assert!(
                    report.verdict.is_pass(),
                    "{} failed at n={n} m={m} point={point}",
                    report.identity
                );
            }
        }
    }
    gate("06 polynomial identities at 100 seeded rational points per (n, m), n <= 15, m in 1..=6");
}

#[test]
fn gate_07_decorated_weight_totals_and_coefficients() {
    let counts = partition_count(25);
    for n in 0..=25 {
        let report = check_decorated_weights(n);
        assert!(
            report.verdict.is_pass(),
            "weight totals differ at n={n}: {} vs {}",
            report.lhs,
            report.rhs
        );
        let Value::Form(total) = &report.lhs else {
            panic!("weight totals should be linear forms");
        };
        for j in 1..=n {
            assert_eq!(
                total.coefficient(j),
                coefficient_formula(n, j).unwrap(),
                "coefficient of x_{j} differs at n={n}"
            );
        }

        let mut drawn_counts = vec![0u64; n as usize + 1];
        for d in enumerate_decorated(n) {
            if let Some(v) = d.drawn() {
                drawn_counts[v as usize] += 1;
            }
        }
        for k in 1..=n {
            assert_eq!(
                &BigUint::from(drawn_counts[k as usize]),
                counts.value(n - k),
                "count of partitions drawn at {k} differs at n={n}"
            );
        }
    }
    gate("07 decorated weight totals, coefficient formula, and drawn counts, n <= 25");
}

#[test]
fn gate_08_restricted_forms_and_convolution() {
    for m in 2..=6 {
        for l in 0..=30 {
            let report = check_restricted_forms(l, m).unwrap();
            assert!(
                report.verdict.is_pass(),
                "restricted forms differ at l={l} m={m}: {} vs {}",
                report.lhs,
                report.rhs
            );
        }
        for n in 0..=25 {
            let report = check_convolution(n, m).unwrap();
            assert!(
                report.verdict.is_pass(),
                "convolution differs at n={n} m={m}: {} vs {}",
                report.lhs,
                report.rhs
            );
        }
    }
    gate("08 restricted weight forms l <= 30 and convolution n <= 25, m in 2..=6");
}

#[test]
fn gate_09_counting_matches_enumeration() {
    let counts = partition_count(30);
    for n in 0..=30u64 {
        let listed = enumerate_partitions(n).count();
        assert_eq!(
            counts.value(n),
            &BigUint::from(listed),
            "recurrence disagrees with enumeration at n={n}"
        );
    }
    for m in 2..=6 {
        let restricted = restricted_count(25, m).unwrap();
        for n in 0..=25u64 {
            let listed = enumerate_partitions(n)
                .filter(|p| p.distinct().all(|(part, _)| part % m != 0) && p.multiplicity(1) < m)
                .count();
            assert_eq!(
                restricted.value(n),
                &BigUint::from(listed),
                "restricted count disagrees at n={n} m={m}"
            );
        }
    }
    gate("09 recurrence and dynamic-programming counts match enumeration, n <= 30 and n <= 25, m in 2..=6");
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_glaisher"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn gate_10_cli_goldens_are_byte_exact() {
    let (code, stdout, stderr) =
        run_cli(&["map", "--m", "3", "--parts", "6,5,4,4,3,3,2,2,2,1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(stderr, "");
    assert_eq!(
        stdout,
        "source: 6,5,4,4,3,3,2,2,2,1,1,1\n\
         o-part: 5,4,4,2,2,2,1,1,1\n\
         e-part: 6,3,3\n\
         image: 6,5,4,4,3,2,2,2,1,1,1,1,1,1\n"
    );

    let (code, stdout, stderr) = run_cli(&[
        "map",
        "--m",
        "3",
        "--parts",
        "6,5,4,4,3,2,2,2,1,1,1,1,1,1",
        "--inverse",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stderr, "");
    assert_eq!(
        stdout,
        "source: 6,5,4,4,3,2,2,2,1,1,1,1,1,1\n\
         d-part: 6,5,4,4,3\n\
         n-part: 2,2,2,1,1,1,1,1,1\n\
         image: 6,5,4,4,3,3,2,2,2,1,1,1\n"
    );

    let (code, stdout, stderr) = run_cli(&["enumerate", "--n", "4", "--decorated"]);
    assert_eq!(code, 0);
    assert_eq!(stderr, "");
    assert_eq!(
        stdout,
        "4 W=x_4 W~=0\n\
         4~ W=0 W~=4x_1+2x_2+x_3+x_4\n\
         3,1 W=x_1+x_3 W~=0\n\
         3~,1 W=x_1 W~=3x_1+x_2+x_3\n\
         3,1~ W=x_3 W~=x_1\n\
         2,2 W=2x_2 W~=0\n\
         2~,2 W=x_2 W~=2x_1+x_2\n\
         2,1,1 W=2x_1+x_2 W~=0\n\
         2~,1,1 W=2x_1 W~=2x_1+x_2\n\
         2,1~,1 W=x_1+x_2 W~=x_1\n\
         1,1,1,1 W=4x_1 W~=0\n\
         1~,1,1,1 W=3x_1 W~=x_1\n"
    );

    let (code, stdout, stderr) = run_cli(&["enumerate", "--n", "0"]);
    assert_eq!(code, 0);
    assert_eq!(stderr, "");
    assert_eq!(stdout, "\n");

    gate(
        "10 worked bijection and decorated-weight examples reproduce byte-exactly through the CLI",
    );
}
