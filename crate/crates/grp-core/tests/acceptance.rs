//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its runtime (visible with `cargo test --test acceptance --
//! --nocapture`). Criteria with a stated time budget assert it.
//!
//! Criteria:
//! 1. center-rank scan over every word of length <= 6 with arities <= 5
//! 2. the nested wreath example: beta1 = 5 and layer shift multipliers 3, 5, 7
//! 3. three-way center agreement on 100 finite configurations
//! 4. commutator-subgroup characterization on Z wrN Z, N in 2..=5
//! 5. abelianization homomorphism, 10^4 pairs per word up to length 5
//! 6. group axioms, 10^4 triples per word, plus the closed-form commutator
//! 7. parser round-trips and normalization invariants

use std::sync::Mutex;
use std::time::Instant;

use grp_core::analysis::{abelianize, center_generators, integer_rank};
use grp_core::element::{identity, parse_element, print_element, random_element, Element};
use grp_core::oracle::ball_commutator_check;
use grp_core::verify::{
    axioms_suite, com_suite, oracle21_records, zc_suite, SuiteReport, VerifyOptions,
};
use grp_core::word::{enumerate_words, parse_word, print_word, GroupWord};

/// Serializes the timed sections so concurrently scheduled tests do not
/// distort each other's budgets.
static TIMER: Mutex<()> = Mutex::new(());

fn timed<T>(label: &str, budget_secs: Option<f64>, run: impl FnOnce() -> T) -> T {
    let _guard = TIMER.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let value = run();
    let elapsed = start.elapsed().as_secs_f64();
    match budget_secs {
        Some(budget) => {
            if elapsed >= budget {
                println!("{label}: FAIL ({elapsed:.2} s, budget {budget:.0} s)");
                panic!("{label} exceeded its budget: {elapsed:.2} s >= {budget:.0} s");
            }
            println!("{label}: PASS ({elapsed:.2} s, budget {budget:.0} s)");
        }
        None => println!("{label}: PASS ({elapsed:.2} s)"),
    }
    value
}

fn assert_report_passes(report: &SuiteReport) {
    assert!(
        report.pass,
        "suite `{}` failed {} of {} checks; first: {:?}",
        report.suite,
        report.failures.len(),
        report.trials,
        report.failures.first()
    );
}

#[test]
fn criterion_1_center_rank_equals_beta1_exhaustively() {
    timed(
        "criterion 1 (center rank = beta1 = matrix rank, l <= 6)",
        Some(60.0),
        || {
            let report = zc_suite(&VerifyOptions {
                max_len: 6,
                max_arity: 5,
                ..VerifyOptions::default()
            })
            .expect("suite runs");
            assert_eq!(report.trials, 209_568, "expected the full l <= 6 family");
            assert_report_passes(&report);
        },
    );
}

#[test]
fn criterion_2_nested_example_has_beta1_5_and_layer_shifts() {
    timed(
        "criterion 2 (nested example: beta1 and layer shifts)",
        None,
        || {
            let word = parse_word("((Z wr3 Z) x (Z wr5 Z)) wr7 Z").unwrap();
            assert_eq!(word.beta1(), 5);

            let gens = center_generators(&word);
            assert_eq!(gens.len(), 5);

            let base = parse_word("(Z wr3 Z) x (Z wr5 Z)").unwrap();
            let wr3 = parse_word("Z wr3 Z").unwrap();
            let wr5 = parse_word("Z wr5 Z").unwrap();

            // Layer shift with multiplier 3, embedded left then replicated
            // over the 7 outer coordinates.
            let shift3 =
                Element::pair(parse_element(&wr3, "(0, 0, 0; 3)").unwrap(), identity(&wr5));
            assert_eq!(gens[1], Element::wreath(vec![shift3; 7], 0));

            // Layer shift with multiplier 5, embedded right.
            let shift5 = Element::pair(
                identity(&wr3),
                parse_element(&wr5, "(0, 0, 0, 0, 0; 5)").unwrap(),
            );
            assert_eq!(gens[3], Element::wreath(vec![shift5; 7], 0));

            // Outermost shift with multiplier 7.
            assert_eq!(gens[4], Element::wreath(vec![identity(&base); 7], 7));

            let rows: Vec<Vec<i64>> = gens
                .iter()
                .map(|g| abelianize(&word, g).unwrap().entries().to_vec())
                .collect();
            assert_eq!(integer_rank(&rows), 5);
        },
    );
}

#[test]
fn criterion_3_center_oracle_agreement_on_100_configurations() {
    timed(
        "criterion 3 (brute = formula = probe centers, 100 configs)",
        Some(120.0),
        || {
            let records = oracle21_records(&VerifyOptions {
                configs: 100,
                seed: 7,
                ..VerifyOptions::default()
            })
            .expect("oracle runs");
            assert_eq!(records.len(), 100);
            for record in &records {
                assert!(
                    record.pass(),
                    "center disagreement in `{}`: {record:?}",
                    record.label
                );
            }
            // The reference configuration leads the list: S3 Wr_{Z2} Z4 with
            // the parity shift has center size exactly 2.
            assert_eq!(records[0].a, "S3");
            assert_eq!(records[0].brute_size, 2);
            assert_eq!(records[0].formula_size, 2);
            assert_eq!(records[0].probe_size, 2);

            let non_effective = records.iter().filter(|r| !r.effective).count();
            assert!(
                non_effective >= 15,
                "expected a healthy share of non-effective actions, got {non_effective}"
            );
        },
    );
}

#[test]
fn criterion_4_commutator_characterization_on_wreath_words() {
    timed(
        "criterion 4 (commutator subgroup characterization, n in 2..=5)",
        Some(60.0),
        || {
            for n in 2..=5 {
                let word = GroupWord::wreath(GroupWord::Zed, n);
                let report = ball_commutator_check(&word, 3, 8, 10_000, 40 + n as u64)
                    .expect("ball check runs");
                assert_eq!(report.product_trials, 10_000);
                assert_eq!(report.witness_trials, 1_000);
                assert_eq!(report.iff_trials, 10_000);
                assert!(report.pass(), "counterexamples for n = {n}: {report:?}");
            }
        },
    );
}

#[test]
fn criterion_5_abelianization_is_a_homomorphism() {
    timed(
        "criterion 5 (abelianize(x*y) = abelianize(x) + abelianize(y))",
        None,
        || {
            let report = com_suite(&VerifyOptions {
                max_len: 5,
                max_arity: 3,
                trials: 10_000,
                ..VerifyOptions::default()
            })
            .expect("suite runs");
            assert_eq!(report.trials, 6_202 * 10_000);
            assert_report_passes(&report);
        },
    );
}

/// Deep and wide words beyond the exhaustive family, exercising nested
/// wreaths and large arities.
fn stress_words() -> Vec<GroupWord> {
    [
        "((Z wr4 Z) wr4 Z) wr4 Z",
        "(((Z wr2 Z) wr3 Z) wr2 Z) x Z",
        "((Z x Z) wr5 Z) wr2 Z",
        "(Z wr5 Z) x (Z wr4 Z)",
        "(1 wr3 Z) x (Z wr2 Z) x 1",
    ]
    .iter()
    .map(|t| parse_word(t).unwrap())
    .collect()
}

#[test]
fn criterion_6_group_axioms_and_closed_form_commutator() {
    timed(
        "criterion 6 (group axioms + closed-form commutator)",
        None,
        || {
            let mut words = enumerate_words(4, 3);
            words.extend(stress_words());
            let report = axioms_suite(&VerifyOptions {
                trials: 10_000,
                words: Some(words),
                ..VerifyOptions::default()
            })
            .expect("suite runs");
            assert_report_passes(&report);
        },
    );
}

#[test]
fn criterion_7_parser_roundtrips_and_normalization() {
    timed(
        "criterion 7 (parser round-trips, normalize invariants)",
        None,
        || {
            // Words: the full l <= 6 family.
            for word in enumerate_words(6, 5) {
                let reparsed = parse_word(&print_word(&word)).unwrap();
                assert_eq!(reparsed, word, "word round-trip failed for {word}");
                let normal = word.normalize();
                assert_eq!(normal.beta1(), word.beta1(), "beta1 changed for {word}");
                assert_eq!(
                    normal.normalize(),
                    normal,
                    "normalize not idempotent for {word}"
                );
            }

            // Elements: 10^3 random round-trips per word on a family that
            // includes every shape constructor and the stress words.
            let mut words = enumerate_words(4, 3);
            words.extend(stress_words());
            for (i, word) in words.iter().enumerate() {
                for trial in 0..1_000u64 {
                    let x = random_element(word, 9, (i as u64) << 32 | trial);
                    let text = print_element(word, &x).unwrap();
                    assert_eq!(
                        parse_element(word, &text).unwrap(),
                        x,
                        "element round-trip failed for {word}: {text}"
                    );
                }
            }
        },
    );
}
