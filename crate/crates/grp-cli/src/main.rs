//! `grp` — calculator and verification driver for groups built from `1`
//! and `Z` by direct products (`x`) and wreath products (`wrN Z`).
//!
//! Results go to stdout, errors to stderr. Exit codes: 0 on success, 1 on
//! precondition failures (e.g. a witness request for an element outside
//! the commutator subgroup), 2 on parse/type/usage errors, 3 when a
//! verification suite reports failures.

use clap::{Parser, Subcommand};
use serde_json::json;

use grp_core::analysis::{
    abelianize, center_generators, commutator_witness, is_central, is_commutator_element,
    WitnessError,
};
use grp_core::element::{
    commutator, inverse, multiply, parse_element, print_element, random_element, Element,
    ElementError, ElementParseError,
};
use grp_core::verify::{parse_cs_word, run_suite, SuiteReport, VerifyError, VerifyOptions};
use grp_core::word::{parse_word, print_word, GroupWord};

#[derive(Parser)]
#[command(
    name = "grp",
    version,
    about = "Symbolic arithmetic and verification for groups built from 1 and Z by x and wrN Z"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct OneElement {
    /// Presentation word, e.g. "Z wr2 Z"
    #[arg(short, long)]
    word: String,
    /// Element text, e.g. "(3, 4; 5)"
    #[arg(short, long)]
    element: String,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args)]
struct TwoElements {
    /// Presentation word, e.g. "Z wr2 Z"
    #[arg(short, long)]
    word: String,
    /// Element text; pass exactly twice
    #[arg(short, long)]
    element: Vec<String>,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a word and print its canonical rendering
    Parse {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the canonical rendering of a word
    Print {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite a word to normal form (1 wrN Z -> Z, a wr1 Z -> a x Z, drop 1 factors)
    Normalize {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Number of Z symbols in the word (the first Betti number)
    Beta1 {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Multiply two elements
    Mul(TwoElements),
    /// Invert an element
    Inv(OneElement),
    /// Commutator [x, y] = x y x⁻¹ y⁻¹
    Comm(TwoElements),
    /// Image of an element under abelianization
    Abelianize(OneElement),
    /// Whether an element is central
    IsCentral(OneElement),
    /// Whether an element lies in the commutator subgroup
    IsCommutator(OneElement),
    /// Decompose a commutator-subgroup member into commutator pairs
    Witness(OneElement),
    /// Generators of a finite-index subgroup of the center
    CenterGens {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Seeded random element with coordinates in [-bound, bound]
    Random {
        #[arg(short, long)]
        word: String,
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Center agreement records for random finite wreath products (JSON)
    Oracle21 {
        #[arg(long)]
        configs: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run a verification suite: zc, axioms, cs, com, oracle21, or all (JSON report)
    Verify {
        #[arg(long)]
        suite: String,
        /// Wreath word for the cs suite (defaults to Z wrN Z, N = 2..=5)
        #[arg(short, long)]
        word: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_arity: Option<usize>,
        #[arg(long)]
        configs: Option<usize>,
    },
}

enum CliError {
    /// Parse, type, or usage errors — exit 2.
    Usage(String),
    /// Violated preconditions (witness of a non-member, size caps,
    /// overflow) — exit 1.
    Precondition(String),
    /// A verification suite reported failures — exit 3.
    SuiteFailed(usize),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 1,
            CliError::SuiteFailed(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Precondition(m) => m.clone(),
            CliError::SuiteFailed(n) => format!("verification failed: {n} failing checks"),
        }
    }
}

impl From<grp_core::WordParseError> for CliError {
    fn from(e: grp_core::WordParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ElementParseError> for CliError {
    fn from(e: ElementParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ElementError> for CliError {
    fn from(e: ElementError) -> Self {
        match e {
            ElementError::TypeMismatch { .. } => CliError::Usage(e.to_string()),
            ElementError::Overflow => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<WitnessError> for CliError {
    fn from(e: WitnessError) -> Self {
        match e {
            WitnessError::Element(inner) => inner.into(),
            WitnessError::NotInCommutatorSubgroup => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<grp_core::oracle::OracleError> for CliError {
    fn from(e: grp_core::oracle::OracleError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::UnknownSuite(_) => CliError::Usage(e.to_string()),
            VerifyError::Oracle(inner) => inner.into(),
        }
    }
}

/// `--seed` flag, then the `GRP_SEED` environment variable, then 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("GRP_SEED") {
        Ok(text) => text
            .parse()
            .map_err(|_| CliError::Usage(format!("GRP_SEED is not an integer: `{text}`"))),
        Err(_) => Ok(0),
    }
}

fn parse_pair(word: &GroupWord, elements: &[String]) -> Result<(Element, Element), CliError> {
    let [x, y] = elements else {
        return Err(CliError::Usage(format!(
            "expected exactly two -e/--element arguments, got {}",
            elements.len()
        )));
    };
    Ok((parse_element(word, x)?, parse_element(word, y)?))
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Parse { word, json } | Command::Print { word, json } => {
            let parsed = parse_word(&word)?;
            let canonical = print_word(&parsed);
            emit(json, json!({ "word": canonical }), canonical.clone());
        }
        Command::Normalize { word, json } => {
            let normalized = print_word(&parse_word(&word)?.normalize());
            emit(json, json!({ "word": normalized }), normalized.clone());
        }
        Command::Beta1 { word, json } => {
            let parsed = parse_word(&word)?;
            let beta = parsed.beta1();
            emit(
                json,
                json!({ "word": print_word(&parsed), "beta1": beta }),
                beta.to_string(),
            );
        }
        Command::Mul(args) => {
            let word = parse_word(&args.word)?;
            let (x, y) = parse_pair(&word, &args.element)?;
            let result = print_element(&word, &multiply(&word, &x, &y)?)?;
            emit(
                args.json,
                json!({ "word": print_word(&word), "result": result }),
                result.clone(),
            );
        }
        Command::Inv(args) => {
            let word = parse_word(&args.word)?;
            let x = parse_element(&word, &args.element)?;
            let result = print_element(&word, &inverse(&word, &x)?)?;
            emit(
                args.json,
                json!({ "word": print_word(&word), "result": result }),
                result.clone(),
            );
        }
        Command::Comm(args) => {
            let word = parse_word(&args.word)?;
            let (x, y) = parse_pair(&word, &args.element)?;
            let result = print_element(&word, &commutator(&word, &x, &y)?)?;
            emit(
                args.json,
                json!({ "word": print_word(&word), "result": result }),
                result.clone(),
            );
        }
        Command::Abelianize(args) => {
            let word = parse_word(&args.word)?;
            let x = parse_element(&word, &args.element)?;
            let vector = abelianize(&word, &x)?;
            emit(
                args.json,
                json!({
                    "word": print_word(&word),
                    "element": x.to_string(),
                    "abelianization": vector.entries(),
                }),
                vector.to_string(),
            );
        }
        Command::IsCentral(args) => {
            let word = parse_word(&args.word)?;
            let x = parse_element(&word, &args.element)?;
            let central = is_central(&word, &x)?;
            emit(
                args.json,
                json!({ "word": print_word(&word), "element": x.to_string(), "central": central }),
                central.to_string(),
            );
        }
        Command::IsCommutator(args) => {
            let word = parse_word(&args.word)?;
            let x = parse_element(&word, &args.element)?;
            let member = is_commutator_element(&word, &x)?;
            emit(
                args.json,
                json!({
                    "word": print_word(&word),
                    "element": x.to_string(),
                    "commutator_element": member,
                }),
                member.to_string(),
            );
        }
        Command::Witness(args) => {
            let word = parse_word(&args.word)?;
            let x = parse_element(&word, &args.element)?;
            let witness = commutator_witness(&word, &x)?;
            let pairs: Vec<[String; 2]> = witness
                .pairs
                .iter()
                .map(|(p, q)| [p.to_string(), q.to_string()])
                .collect();
            if args.json {
                println!(
                    "{}",
                    json!({
                        "word": print_word(&word),
                        "element": x.to_string(),
                        "pairs": pairs,
                    })
                );
            } else {
                for [p, q] in &pairs {
                    println!("[{p}, {q}]");
                }
            }
        }
        Command::CenterGens { word, json } => {
            let parsed = parse_word(&word)?;
            let gens: Vec<String> = center_generators(&parsed)
                .iter()
                .map(|g| g.to_string())
                .collect();
            if json {
                println!(
                    "{}",
                    json!({ "word": print_word(&parsed), "generators": gens })
                );
            } else {
                for g in &gens {
                    println!("{g}");
                }
            }
        }
        Command::Random {
            word,
            bound,
            seed,
            json,
        } => {
            let parsed = parse_word(&word)?;
            let bound = bound.unwrap_or(8);
            if bound < 1 {
                return Err(CliError::Usage("--bound must be at least 1".into()));
            }
            let seed = resolve_seed(seed)?;
            let x = random_element(&parsed, bound, seed);
            emit(
                json,
                json!({
                    "word": print_word(&parsed),
                    "bound": bound,
                    "seed": seed,
                    "element": x.to_string(),
                }),
                x.to_string(),
            );
        }
        Command::Oracle21 { configs, seed } => {
            let opts = VerifyOptions {
                seed: resolve_seed(seed)?,
                configs: configs.unwrap_or(100),
                ..VerifyOptions::default()
            };
            let records = grp_core::verify::oracle21_records(&opts)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&records).expect("serializable")
            );
            let failing = records.iter().filter(|r| !r.pass()).count();
            if failing > 0 {
                return Err(CliError::SuiteFailed(failing));
            }
        }
        Command::Verify {
            suite,
            word,
            seed,
            bound,
            trials,
            max_len,
            max_arity,
            configs,
        } => {
            let defaults = VerifyOptions::default();
            let words = match word {
                Some(text) => {
                    if suite != "cs" {
                        return Err(CliError::Usage(
                            "-w/--word only applies to the cs suite".into(),
                        ));
                    }
                    Some(vec![parse_cs_word(&text).map_err(CliError::Usage)?])
                }
                None => None,
            };
            let opts = VerifyOptions {
                seed: resolve_seed(seed)?,
                bound: bound.unwrap_or(defaults.bound),
                trials: trials.unwrap_or(defaults.trials),
                max_len: max_len.unwrap_or(defaults.max_len),
                max_arity: max_arity.unwrap_or(defaults.max_arity),
                configs: configs.unwrap_or(defaults.configs),
                words,
                parallel: true,
            };
            let reports = run_suite(&suite, &opts)?;
            let rendered = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0]).expect("serializable")
            } else {
                serde_json::to_string_pretty(&reports).expect("serializable")
            };
            println!("{rendered}");
            let failing: usize = reports.iter().map(|r: &SuiteReport| r.failures.len()).sum();
            if failing > 0 {
                return Err(CliError::SuiteFailed(failing));
            }
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message());
        std::process::exit(e.code());
    }
}
