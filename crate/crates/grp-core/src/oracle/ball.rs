//! Bounded-ball checks of the commutator-subgroup characterization for
//! symbolic wreath words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{
    abelianize, commutator_witness, is_commutator_element, sample_commutator_subgroup_element,
};
use crate::element::{commutator, identity, multiply, sample_element};
use crate::word::GroupWord;

use super::OracleError;

const PRODUCT_BUDGET: usize = 1_000_000;

/// Outcome of one bounded-ball run; all three counterexample lists must be
/// empty.
#[derive(Debug, Clone, Serialize)]
pub struct BallCheckReport {
    pub word: String,
    pub coord_bound: i64,
    pub max_commutators: usize,
    /// Random products of at most `max_commutators` commutators, all of
    /// which must satisfy the characterization (soundness).
    pub product_trials: usize,
    /// Random characterized elements, all of which must admit a witness
    /// whose commutator product reproduces them exactly (completeness at
    /// scale).
    pub witness_trials: usize,
    /// Random elements on which membership must coincide with the
    /// abelianization vanishing.
    pub iff_trials: usize,
    pub product_counterexamples: Vec<String>,
    pub witness_counterexamples: Vec<String>,
    pub iff_counterexamples: Vec<String>,
}

impl BallCheckReport {
    pub fn pass(&self) -> bool {
        self.product_counterexamples.is_empty()
            && self.witness_counterexamples.is_empty()
            && self.iff_counterexamples.is_empty()
    }
}

/// Runs `trials` soundness products, `trials / 10` witness syntheses, and
/// `trials` membership/abelianization comparisons on the wreath word `w`,
/// with coordinates drawn from `[-coord_bound, coord_bound]`.
pub fn ball_commutator_check(
    w: &GroupWord,
    coord_bound: i64,
    max_commutators: usize,
    trials: usize,
    seed: u64,
) -> Result<BallCheckReport, OracleError> {
    if !matches!(w, GroupWord::Wreath(..)) {
        return Err(OracleError::NotWreathWord(w.to_string()));
    }
    assert!(coord_bound >= 1, "coordinate bound must be at least 1");
    if trials
        .checked_mul(max_commutators.max(1))
        .is_none_or(|products| products > PRODUCT_BUDGET)
    {
        return Err(OracleError::WorkBoundExceeded(format!(
            "{trials} trials x {max_commutators} commutators exceeds {PRODUCT_BUDGET} products"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = BallCheckReport {
        word: w.to_string(),
        coord_bound,
        max_commutators,
        product_trials: trials,
        witness_trials: (trials / 10).max(1),
        iff_trials: trials,
        product_counterexamples: Vec::new(),
        witness_counterexamples: Vec::new(),
        iff_counterexamples: Vec::new(),
    };

    for _ in 0..report.product_trials {
        let count = rng.gen_range(0..=max_commutators);
        let mut product = identity(w);
        for _ in 0..count {
            let x = sample_element(w, coord_bound, &mut rng);
            let y = sample_element(w, coord_bound, &mut rng);
            product = multiply(w, &product, &commutator(w, &x, &y)?)?;
        }
        if !is_commutator_element(w, &product)? || !abelianize(w, &product)?.is_zero() {
            report.product_counterexamples.push(product.to_string());
        }
    }

    for _ in 0..report.witness_trials {
        let member = sample_commutator_subgroup_element(w, coord_bound, &mut rng)?;
        match commutator_witness(w, &member) {
            Ok(witness) if witness.verifies(w, &member)? => {}
            _ => report.witness_counterexamples.push(member.to_string()),
        }
    }

    for _ in 0..report.iff_trials {
        let x = sample_element(w, coord_bound, &mut rng);
        if is_commutator_element(w, &x)? != abelianize(w, &x)?.is_zero() {
            report.iff_counterexamples.push(x.to_string());
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    #[test]
    fn small_wreath_words_have_no_counterexamples() {
        let report = ball_commutator_check(&parse_word("Z wr2 Z").unwrap(), 3, 4, 500, 1).unwrap();
        assert!(report.pass(), "{report:?}");

        let report = ball_commutator_check(&parse_word("Z wr3 Z").unwrap(), 2, 3, 500, 2).unwrap();
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn nested_wreath_word_passes() {
        let report =
            ball_commutator_check(&parse_word("((Z x Z) wr2 Z) wr3 Z").unwrap(), 2, 3, 200, 7)
                .unwrap();
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn zero_length_products_are_the_identity_and_pass() {
        let report = ball_commutator_check(&parse_word("Z wr2 Z").unwrap(), 3, 0, 50, 3).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn non_wreath_words_are_rejected() {
        let err = ball_commutator_check(&parse_word("Z x Z").unwrap(), 3, 4, 10, 0).unwrap_err();
        assert!(matches!(err, OracleError::NotWreathWord(_)));
    }

    #[test]
    fn work_budget_is_enforced() {
        let err =
            ball_commutator_check(&parse_word("Z wr2 Z").unwrap(), 3, 8, 1_000_000, 0).unwrap_err();
        assert!(matches!(err, OracleError::WorkBoundExceeded(_)));
    }
}
