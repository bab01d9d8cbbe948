//! Symbolic computational group theory for the class of groups generated
//! from the trivial group and the integers by direct products (`A x B`) and
//! wreath products with the integers (`A wrN Z`).
//!
//! The crate is organised around five concerns:
//!
//! - [`word`] — presentation words (grammar, parsing, printing, normal
//!   forms, enumeration) and the `Z`-symbol count `beta1`, the first Betti
//!   number of the presented group.
//! - [`element`] — recursive symbolic group elements with exact arithmetic
//!   (multiplication, inverses, commutators).
//! - [`analysis`] — decision procedures: centrality, membership in the
//!   commutator subgroup with constructive witnesses, abelianization, and
//!   exact integer matrix rank.
//! - [`oracle`] — brute-force verification on fully finite wreath products
//!   `A Wr_X B` (Cayley tables, orbit computations, center scans) and
//!   bounded-ball checks of the commutator-subgroup characterization.
//! - [`verify`] — randomized and exhaustive verification suites with
//!   machine-readable reports.
//!
//! The `parallel` feature (on by default) fans independent trials out over a
//! rayon thread pool; per-trial seeds derive deterministically from the root
//! seed, so reports are byte-identical with and without it.

pub mod analysis;
pub mod element;
mod exec;
pub mod oracle;
#[cfg(test)]
mod testutil;
pub mod verify;
pub mod word;

pub use analysis::{AbelianVector, CommutatorWitness, WitnessError};
pub use element::{Element, ElementError, ElementParseError};
pub use word::{enumerate_words, parse_word, print_word, GroupWord, WordParseError};
