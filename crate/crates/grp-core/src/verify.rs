//! Verification suites with machine-readable reports.
//!
//! Five suites are exposed, mirroring what the `grp verify` command runs:
//!
//! - `zc` — for every enumerated word, the number of constructed center
//!   generators, the `Z`-symbol count `beta1`, and the rank of the
//!   generators' abelianization matrix coincide.
//! - `axioms` — associativity, identity, and inverse laws on random
//!   triples, plus the closed-form wreath commutator against the
//!   multiply-chain commutator.
//! - `cs` — bounded-ball soundness and completeness of the
//!   commutator-subgroup characterization on wreath words.
//! - `com` — abelianization is a homomorphism on random pairs.
//! - `oracle21` — three-way center agreement on random finite wreath
//!   products.
//!
//! Reports are deterministic functions of their options: per-word and
//! per-trial seeds derive from the root seed, and trials fan out in index
//! order whether or not they run in parallel.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{abelianize, center_generators, integer_rank, is_central};
use crate::element::{commutator, identity, inverse, multiply, sample_element, Element};
use crate::exec::{derive_seed, map_indexed};
use crate::oracle::{
    ball_commutator_check, check_center_agreement, sample_configs, BallCheckReport,
    CenterAgreementRecord, OracleError,
};
use crate::word::{enumerate_words, parse_word, GroupWord};

/// One failed check: the input that failed and the two sides that were
/// expected to coincide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of one suite run; `pass` is true exactly when `failures` is
/// empty.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: &str, trials: usize, failures: Vec<Failure>) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            trials,
            pass: failures.is_empty(),
            failures,
        }
    }
}

/// Options shared by the suites. `Default` matches the CLI defaults.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    pub bound: i64,
    pub trials: usize,
    pub max_len: usize,
    pub max_arity: usize,
    pub configs: usize,
    /// Words for the `cs` suite; defaults to `Z wrN Z` for `N` in `2..=5`.
    pub words: Option<Vec<GroupWord>>,
    /// Fan trials out over the rayon pool (no effect on results, or at all
    /// when the `parallel` feature is disabled).
    pub parallel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            bound: 8,
            trials: 1000,
            max_len: 4,
            max_arity: 3,
            configs: 100,
            words: None,
            parallel: true,
        }
    }
}

// Lane constants keep per-suite random streams disjoint for a fixed root
// seed.
const LANE_AXIOMS: u64 = 1;
const LANE_COM: u64 = 2;
const LANE_CS: u64 = 3;

/// Center rank scan: `count(center_generators(w)) == beta1(w) ==
/// rank(abelianization matrix)` for every enumerated word, and every
/// constructed generator is central.
pub fn zc_suite(opts: &VerifyOptions) -> Result<SuiteReport, OracleError> {
    let words = enumerate_words(opts.max_len, opts.max_arity);
    let failures = map_indexed(opts.parallel, words.len(), |i| {
        let word = &words[i];
        let beta = word.beta1();
        let gens = center_generators(word);
        let mut failures = Vec::new();
        if gens.len() != beta {
            failures.push(Failure {
                input: word.to_string(),
                expected: format!("{beta} center generators"),
                got: format!("{}", gens.len()),
            });
        }
        for g in &gens {
            if !is_central(word, g).unwrap_or(false) {
                failures.push(Failure {
                    input: format!("{word}; {g}"),
                    expected: "central generator".into(),
                    got: "non-central".into(),
                });
            }
        }
        let rows: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| {
                abelianize(word, g)
                    .map(|v| v.entries().to_vec())
                    .unwrap_or_default()
            })
            .collect();
        let rank = integer_rank(&rows);
        if rank != beta {
            failures.push(Failure {
                input: word.to_string(),
                expected: format!("rank {beta}"),
                got: format!("rank {rank}"),
            });
        }
        failures
    });
    Ok(SuiteReport::new(
        "zc",
        words.len(),
        failures.into_iter().flatten().collect(),
    ))
}

fn check_axiom_triple(
    word: &GroupWord,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Vec<Failure>, OracleError> {
    let mut failures = Vec::new();
    let mut record = |law: &str, lhs: &Element, rhs: &Element| {
        if lhs != rhs {
            failures.push(Failure {
                input: format!("{word}; x={x}; y={y}; z={z}; law={law}"),
                expected: rhs.to_string(),
                got: lhs.to_string(),
            });
        }
    };

    let xy_z = multiply(word, &multiply(word, x, y)?, z)?;
    let x_yz = multiply(word, x, &multiply(word, y, z)?)?;
    record("associativity", &xy_z, &x_yz);

    let e = identity(word);
    record("right identity", &multiply(word, x, &e)?, x);
    record("left identity", &multiply(word, &e, x)?, x);

    let xi = inverse(word, x)?;
    record("right inverse", &multiply(word, x, &xi)?, &e);
    record("left inverse", &multiply(word, &xi, x)?, &e);

    Ok(failures)
}

/// The closed-form wreath commutator: coordinate `i` of `[x, y]` for
/// `x = (a, l)`, `y = (b, p)` is
/// `a[i-l] · b[i-l-p] · a[i-l-p]⁻¹ · b[i-p]⁻¹` (indices mod `n`) with
/// shift 0. Serves as the independent route checked against the
/// multiply-chain [`commutator`].
pub fn wreath_commutator_closed_form(
    w: &GroupWord,
    x: &Element,
    y: &Element,
) -> Result<Element, OracleError> {
    let (
        GroupWord::Wreath(base, n),
        Element::Wreath {
            coords: a,
            shift: l,
        },
        Element::Wreath {
            coords: b,
            shift: p,
        },
    ) = (w, x, y)
    else {
        return Err(OracleError::NotWreathWord(w.to_string()));
    };
    let n = *n;
    let idx = |i: usize, off: i64| -> usize { (i as i64 - off).rem_euclid(n as i64) as usize };
    let mut coords = Vec::with_capacity(n);
    for i in 0..n {
        let t1 = &a[idx(i, *l)];
        let t2 = &b[idx(i, l + p)];
        let t3 = inverse(base, &a[idx(i, l + p)])?;
        let t4 = inverse(base, &b[idx(i, *p)])?;
        let c = multiply(base, &multiply(base, &multiply(base, t1, t2)?, &t3)?, &t4)?;
        coords.push(c);
    }
    Ok(Element::wreath(coords, 0))
}

/// Group axiom trials per word, plus closed-form commutator comparisons on
/// wreath words (one comparison per ten triples).
pub fn axioms_suite(opts: &VerifyOptions) -> Result<SuiteReport, OracleError> {
    let words = match &opts.words {
        Some(words) => words.clone(),
        None => enumerate_words(opts.max_len, opts.max_arity),
    };
    let per_word = opts.trials;
    let results = map_indexed(
        opts.parallel,
        words.len(),
        |i| -> Result<Vec<Failure>, OracleError> {
            let word = &words[i];
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(opts.seed, LANE_AXIOMS, i as u64));
            let mut failures = Vec::new();
            for _ in 0..per_word {
                let x = sample_element(word, opts.bound, &mut rng);
                let y = sample_element(word, opts.bound, &mut rng);
                let z = sample_element(word, opts.bound, &mut rng);
                failures.extend(check_axiom_triple(word, &x, &y, &z)?);
            }
            if matches!(word, GroupWord::Wreath(..)) {
                for _ in 0..(per_word / 10).max(1) {
                    let x = sample_element(word, opts.bound, &mut rng);
                    let y = sample_element(word, opts.bound, &mut rng);
                    let chain = commutator(word, &x, &y)?;
                    let closed = wreath_commutator_closed_form(word, &x, &y)?;
                    if chain != closed {
                        failures.push(Failure {
                            input: format!("{word}; x={x}; y={y}; law=closed-form commutator"),
                            expected: chain.to_string(),
                            got: closed.to_string(),
                        });
                    }
                }
            }
            Ok(failures)
        },
    );
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    Ok(SuiteReport::new("axioms", words.len() * per_word, failures))
}

/// Homomorphism trials: `abelianize(x · y) == abelianize(x) + abelianize(y)`.
pub fn com_suite(opts: &VerifyOptions) -> Result<SuiteReport, OracleError> {
    let words = enumerate_words(opts.max_len, opts.max_arity);
    let per_word = opts.trials;
    let results = map_indexed(
        opts.parallel,
        words.len(),
        |i| -> Result<Vec<Failure>, OracleError> {
            let word = &words[i];
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(opts.seed, LANE_COM, i as u64));
            let mut failures = Vec::new();
            for _ in 0..per_word {
                let x = sample_element(word, opts.bound, &mut rng);
                let y = sample_element(word, opts.bound, &mut rng);
                let xy = multiply(word, &x, &y)?;
                let lhs = abelianize(word, &xy)?;
                let rhs = abelianize(word, &x)?.try_add(&abelianize(word, &y)?)?;
                if lhs != rhs {
                    failures.push(Failure {
                        input: format!("{word}; x={x}; y={y}"),
                        expected: rhs.to_string(),
                        got: lhs.to_string(),
                    });
                }
            }
            Ok(failures)
        },
    );
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    Ok(SuiteReport::new("com", words.len() * per_word, failures))
}

/// Default `cs` family: `Z wrN Z` for `N` in `2..=5`.
pub fn default_cs_words() -> Vec<GroupWord> {
    (2..=5)
        .map(|n| GroupWord::wreath(GroupWord::Zed, n))
        .collect()
}

/// Bounded-ball commutator checks; also returns the per-word reports.
pub fn cs_reports(opts: &VerifyOptions) -> Result<Vec<BallCheckReport>, OracleError> {
    let words = match &opts.words {
        Some(words) => words.clone(),
        None => default_cs_words(),
    };
    let results = map_indexed(opts.parallel, words.len(), |i| {
        ball_commutator_check(
            &words[i],
            opts.bound,
            8,
            opts.trials,
            derive_seed(opts.seed, LANE_CS, i as u64),
        )
    });
    results.into_iter().collect()
}

pub fn cs_suite(opts: &VerifyOptions) -> Result<SuiteReport, OracleError> {
    let reports = cs_reports(opts)?;
    let mut trials = 0;
    let mut failures = Vec::new();
    for report in &reports {
        trials += report.product_trials + report.witness_trials + report.iff_trials;
        let mut record = |kind: &str, elements: &[String]| {
            failures.extend(elements.iter().map(|e| Failure {
                input: format!("{}; {e}", report.word),
                expected: format!("{kind} holds"),
                got: "counterexample".into(),
            }));
        };
        record("soundness", &report.product_counterexamples);
        record("witness completeness", &report.witness_counterexamples);
        record("membership iff zero image", &report.iff_counterexamples);
    }
    Ok(SuiteReport::new("cs", trials, failures))
}

/// Center agreement on finite configurations; also returns the per-config
/// records.
pub fn oracle21_records(opts: &VerifyOptions) -> Result<Vec<CenterAgreementRecord>, OracleError> {
    let configs = sample_configs(opts.configs, opts.seed);
    let results = map_indexed(opts.parallel, configs.len(), |i| {
        check_center_agreement(&configs[i])
    });
    results.into_iter().collect()
}

pub fn oracle21_suite(opts: &VerifyOptions) -> Result<SuiteReport, OracleError> {
    let records = oracle21_records(opts)?;
    let failures = records
        .iter()
        .filter(|r| !r.pass())
        .map(|r| Failure {
            input: r.label.clone(),
            expected: "brute = formula = probe center".into(),
            got: format!(
                "sizes brute={} formula={} probe={}",
                r.brute_size, r.formula_size, r.probe_size
            ),
        })
        .collect();
    Ok(SuiteReport::new("oracle21", records.len(), failures))
}

pub const SUITE_NAMES: [&str; 5] = ["zc", "axioms", "cs", "com", "oracle21"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`; expected one of zc, axioms, cs, com, oracle21, all")]
    UnknownSuite(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Runs one named suite, or all five for `"all"`.
pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<Vec<SuiteReport>, VerifyError> {
    match name {
        "zc" => Ok(vec![zc_suite(opts)?]),
        "axioms" => Ok(vec![axioms_suite(opts)?]),
        "cs" => Ok(vec![cs_suite(opts)?]),
        "com" => Ok(vec![com_suite(opts)?]),
        "oracle21" => Ok(vec![oracle21_suite(opts)?]),
        "all" => SUITE_NAMES
            .iter()
            .map(|suite| run_suite(suite, opts).map(|mut v| v.remove(0)))
            .collect(),
        other => Err(VerifyError::UnknownSuite(other.to_string())),
    }
}

/// Parses the `-w` argument of the `cs` suite, requiring a wreath word.
pub fn parse_cs_word(text: &str) -> Result<GroupWord, String> {
    let word = parse_word(text).map_err(|e| e.to_string())?;
    if matches!(word, GroupWord::Wreath(..)) {
        Ok(word)
    } else {
        Err(format!("`{word}` is not a wreath word"))
    }
}
