//! Randomized configurations of finite wreath products and the three-way
//! center agreement check.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::action::WreathAction;
use super::finite_group::{brute_center, catalog, is_subgroup, FiniteGroup};
use super::wreath::{
    build_finite_wreath, formula_center, probe_centralizer, wreath_order, FiniteWreathElement,
    WREATH_TABLE_CAP,
};
use super::OracleError;

/// One finite instance `A Wr_X B` to check.
#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub label: String,
    pub a: FiniteGroup,
    pub action: WreathAction,
}

impl OracleConfig {
    fn new(label: impl Into<String>, a: FiniteGroup, action: WreathAction) -> OracleConfig {
        OracleConfig {
            label: label.into(),
            a,
            action,
        }
    }
}

/// The reference configuration: `S3 Wr_{Z2} Z4` with `Z4` shifting mod 2
/// (kernel `{0, 2}`), whose center has exactly two elements.
pub fn mandated_config() -> OracleConfig {
    OracleConfig::new(
        "S3 wreath Z2 by Z4 parity shift",
        FiniteGroup::symmetric_3(),
        WreathAction::cyclic_shift(4, 2).expect("2 divides 4"),
    )
}

/// Hand-picked configurations covering the degenerate corners: trivial
/// actions (kernel everything), cyclic groups acting through proper
/// quotients, a non-abelian top group, and effective actions for contrast.
pub fn deliberate_configs() -> Vec<OracleConfig> {
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let d4 = FiniteGroup::dihedral_4();
    let s3 = FiniteGroup::symmetric_3();

    let mut configs = vec![mandated_config()];
    configs.push(OracleConfig::new(
        "Z2 by trivial Z2 on a point",
        z2.clone(),
        WreathAction::trivial(z2.clone(), 1),
    ));
    configs.push(OracleConfig::new(
        "Z2 wreath Z2 shift (dihedral of order 8)",
        z2.clone(),
        WreathAction::cyclic_shift(2, 2).expect("shift"),
    ));
    configs.push(OracleConfig::new(
        "Z3 regular shift",
        z3.clone(),
        WreathAction::cyclic_shift(3, 3).expect("shift"),
    ));
    configs.push(OracleConfig::new(
        "Z8 acting through Z2",
        z3.clone(),
        WreathAction::cyclic_shift(8, 2).expect("2 divides 8"),
    ));
    configs.push(OracleConfig::new(
        "Z6 acting through Z3",
        z2.clone(),
        WreathAction::cyclic_shift(6, 3).expect("3 divides 6"),
    ));
    configs.push(OracleConfig::new(
        "S3 with trivial action on 3 points",
        z2.clone(),
        WreathAction::trivial(s3.clone(), 3),
    ));
    configs.push(OracleConfig::new(
        "D4 on cosets of its center",
        z2.clone(),
        WreathAction::from_coset_parts(d4.clone(), &[brute_center(&d4)]),
    ));
    configs.push(OracleConfig::new(
        "S3 on cosets of an order-2 subgroup",
        z2.clone(),
        WreathAction::from_coset_parts(
            s3.clone(),
            &[s3.subgroups().into_iter().find(|s| s.len() == 2).unwrap()],
        ),
    ));
    configs.push(OracleConfig::new(
        "V4 mixed coset action",
        z3,
        WreathAction::from_coset_parts(FiniteGroup::klein_four(), &[vec![0, 1], vec![0, 1, 2, 3]]),
    ));
    configs
}

/// The mandated and deliberate configurations followed by deterministic
/// random draws: `A` and `B` from the catalog, `|X| <= 5` assembled from
/// random coset spaces of `B` (so non-effective actions occur routinely),
/// rejecting draws whose wreath order exceeds the table cap.
pub fn sample_configs(count: usize, seed: u64) -> Vec<OracleConfig> {
    let mut configs = deliberate_configs();
    configs.truncate(count);
    let groups = catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while configs.len() < count {
        let b = &groups[rng.gen_range(0..groups.len())];
        let target_size = rng.gen_range(1..=5usize);
        let subgroups = b.subgroups();
        let mut parts: Vec<Vec<usize>> = Vec::new();
        let mut remaining = target_size;
        while remaining > 0 {
            let fitting: Vec<&Vec<usize>> = subgroups
                .iter()
                .filter(|s| b.order() / s.len() <= remaining)
                .collect();
            // The whole group always fits with index 1.
            let part = fitting[rng.gen_range(0..fitting.len())];
            remaining -= b.order() / part.len();
            parts.push(part.clone());
        }
        let action = WreathAction::from_coset_parts(b.clone(), &parts);

        let fitting_a: Vec<&FiniteGroup> = groups
            .iter()
            .filter(|a| wreath_order(a, &action).is_some_and(|order| order <= WREATH_TABLE_CAP))
            .collect();
        let Some(a) = fitting_a.get(rng.gen_range(0..fitting_a.len().max(1))) else {
            continue;
        };
        let label = format!(
            "random {} wreath X{} {} #{}",
            a.name(),
            action.set_size(),
            b.name(),
            configs.len()
        );
        configs.push(OracleConfig::new(label, (*a).clone(), action));
    }
    configs
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct AgreementCounterexamples {
    pub brute_not_formula: Vec<String>,
    pub formula_not_brute: Vec<String>,
    pub brute_not_probe: Vec<String>,
    pub probe_not_brute: Vec<String>,
}

/// Machine-readable outcome of one configuration: descriptor, the three
/// center sizes, agreement flags, and element-level counterexamples.
#[derive(Debug, Clone, Serialize)]
pub struct CenterAgreementRecord {
    pub label: String,
    pub a: String,
    pub b: String,
    pub set_size: usize,
    pub orbit_sizes: Vec<usize>,
    pub kernel_size: usize,
    pub effective: bool,
    pub order: usize,
    pub brute_size: usize,
    pub formula_size: usize,
    pub probe_size: usize,
    pub brute_equals_formula: bool,
    pub brute_equals_probe: bool,
    pub center_is_subgroup: bool,
    pub counterexamples: AgreementCounterexamples,
}

impl CenterAgreementRecord {
    pub fn pass(&self) -> bool {
        self.brute_equals_formula && self.brute_equals_probe && self.center_is_subgroup
    }
}

fn difference(
    lhs: &BTreeSet<FiniteWreathElement>,
    rhs: &BTreeSet<FiniteWreathElement>,
) -> Vec<String> {
    lhs.difference(rhs).map(|e| e.to_string()).collect()
}

/// Builds the wreath product and compares the three center computations as
/// exact element sets.
pub fn check_center_agreement(config: &OracleConfig) -> Result<CenterAgreementRecord, OracleError> {
    let built = build_finite_wreath(&config.a, &config.action)?;
    let brute = built.center_elements();
    let formula = formula_center(&config.a, &config.action)?;
    let probe = probe_centralizer(&config.a, &config.action)?;

    let center_indices = brute_center(&built.group);
    Ok(CenterAgreementRecord {
        label: config.label.clone(),
        a: config.a.name().to_string(),
        b: config.action.group().name().to_string(),
        set_size: config.action.set_size(),
        orbit_sizes: config.action.orbits().iter().map(|o| o.len()).collect(),
        kernel_size: config.action.kernel().len(),
        effective: config.action.is_effective(),
        order: built.group.order(),
        brute_size: brute.len(),
        formula_size: formula.len(),
        probe_size: probe.len(),
        brute_equals_formula: brute == formula,
        brute_equals_probe: brute == probe,
        center_is_subgroup: is_subgroup(&built.group, &center_indices),
        counterexamples: AgreementCounterexamples {
            brute_not_formula: difference(&brute, &formula),
            formula_not_brute: difference(&formula, &brute),
            brute_not_probe: difference(&brute, &probe),
            probe_not_brute: difference(&probe, &brute),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mandated_configuration_agrees_with_center_size_2() {
        let record = check_center_agreement(&mandated_config()).unwrap();
        assert!(record.pass(), "{record:?}");
        assert_eq!(record.order, 144);
        assert_eq!(record.brute_size, 2);
        assert_eq!(record.kernel_size, 2);
        assert!(!record.effective);
    }

    #[test]
    fn deliberate_configurations_all_agree() {
        for config in deliberate_configs() {
            let record = check_center_agreement(&config).unwrap();
            assert!(
                record.pass(),
                "disagreement in {}: {record:?}",
                config.label
            );
        }
    }

    #[test]
    fn sampled_configurations_are_deterministic_and_fit_caps() {
        let a = sample_configs(30, 9);
        let b = sample_configs(30, 9);
        assert_eq!(a.len(), 30);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.label, y.label);
            assert_eq!(x.a, y.a);
            assert_eq!(x.action, y.action);
        }
        for config in &a {
            let order = wreath_order(&config.a, &config.action).unwrap();
            assert!(order <= WREATH_TABLE_CAP);
            assert!(config.action.set_size() <= 5);
        }
    }

    #[test]
    fn sampled_configurations_include_non_effective_actions() {
        let configs = sample_configs(40, 3);
        let non_effective = configs.iter().filter(|c| !c.action.is_effective()).count();
        assert!(non_effective >= 8, "only {non_effective} non-effective");
    }

    #[test]
    fn a_batch_of_sampled_configurations_agrees() {
        for config in sample_configs(25, 17) {
            let record = check_center_agreement(&config).unwrap();
            assert!(
                record.pass(),
                "disagreement in {}: {record:?}",
                config.label
            );
        }
    }
}
