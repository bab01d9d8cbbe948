//! Brute-force verification on fully finite wreath products.
//!
//! The symbolic side of the crate trusts structural characterizations of
//! centers and commutator subgroups; this module checks the center
//! description independently on finite instances `A Wr_X B` built from a
//! hard-coded catalog of small groups, with arbitrary (possibly
//! non-effective) actions of `B` on `X`:
//!
//! - [`build_finite_wreath`] materializes the Cayley table of `A Wr_X B`
//!   using the multiplication law `(f1, b1) · (f2, b2) =
//!   ((f1 ∘ φ_{b2}) · f2, b1 · b2)`.
//! - [`brute_center`] scans a Cayley table for the definitional center.
//! - [`formula_center`] enumerates functions constant on each orbit with
//!   central values together with `ker φ ∩ Z(B)`.
//! - [`probe_centralizer`] computes the centralizer of the one-point probe
//!   set `{(g_{y,c}, p)}`.
//!
//! All `X` here are finite, where the restricted and unrestricted wreath
//! products coincide.
//!
//! [`ball_commutator_check`] is the randomized bounded-ball soundness and
//! completeness harness for the commutator-subgroup characterization of
//! symbolic wreath words.

mod action;
mod agreement;
mod ball;
mod finite_group;
mod wreath;

use thiserror::Error;

use crate::element::ElementError;

pub use action::WreathAction;
pub use agreement::{
    check_center_agreement, deliberate_configs, mandated_config, sample_configs,
    AgreementCounterexamples, CenterAgreementRecord, OracleConfig,
};
pub use ball::{ball_commutator_check, BallCheckReport};
pub use finite_group::{brute_center, catalog, is_subgroup, FiniteGroup};
pub use wreath::{
    build_finite_wreath, enumerate_wreath_elements, formula_center, probe_centralizer,
    wreath_identity, wreath_multiply, wreath_order, BuiltWreath, FiniteWreathElement,
    WREATH_SIZE_CAP, WREATH_TABLE_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("wreath product of order {order} exceeds the cap of {cap} elements")]
    SizeCapExceeded { order: usize, cap: usize },
    #[error("Cayley table of order {order} exceeds the table cap of {cap}")]
    TableCapExceeded { order: usize, cap: usize },
    #[error("invalid Cayley table for `{name}`: {message}")]
    InvalidTable { name: String, message: String },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("work bound exceeded: {0}")]
    WorkBoundExceeded(String),
    #[error("expected a wreath word, got `{0}`")]
    NotWreathWord(String),
    #[error(transparent)]
    Element(#[from] ElementError),
}
