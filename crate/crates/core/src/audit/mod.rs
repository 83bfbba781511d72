//! Exhaustive checking of axioms and rule properties on small universes.
//!
//! Every sweep enumerates the full powerset of a universe, so results are
//! exact for that universe. Witnesses are found in a fixed enumeration order
//! and can be replayed against the rules directly with [`Witness::replays`].

mod axioms;
mod bundles;
mod generate;
mod relation;

pub use axioms::{
    expected_to_hold, search, violated, AxiomId, Instance, Polarities, Witness,
    SIMPLE_GROUNDING_PARTS,
};
pub use bundles::{
    find_biposs_indifference_intransitivity, propositions, refinement_check, refinement_sweep,
    relation_properties, sweep_axioms, Bundle, PropositionCheck, RefinementVerdict, RelationReport,
    SweepVerdict, THEOREM1, THEOREM2,
};
pub use generate::{enumerate_profiles, generate_universes, AuditBounds, GenerationBounds};
pub use relation::{DirectRelation, Relation, RelationTable};

use serde::Serialize;

use crate::error::Result;
use crate::model::DecisionUniverse;
use crate::rules::RuleId;

/// Outcome of checking one axiom for one rule on one universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditVerdict {
    pub axiom: AxiomId,
    pub rule: RuleId,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl AuditVerdict {
    pub fn expected(&self) -> bool {
        expected_to_hold(self.axiom, self.rule)
    }
}

impl Witness {
    /// Re-evaluates the violation with the rules called directly, bypassing
    /// any precomputed table.
    pub fn replays(&self, rule: RuleId, universe: &DecisionUniverse) -> bool {
        let r = DirectRelation { rule, universe };
        let reference = DirectRelation {
            rule: RuleId::BiPoss,
            universe,
        };
        let p = Polarities::of(&r, universe.len());
        violated(self.axiom, &r, &reference, &p, &self.instance)
    }
}

/// Enumeration bound that applies to an axiom.
pub fn bound_for(axiom: AxiomId, bounds: &AuditBounds) -> usize {
    if axiom.is_pairwise() {
        bounds.pair_limit
    } else {
        bounds.tuple_limit
    }
}

pub fn check_axiom(
    axiom: AxiomId,
    rule: RuleId,
    universe: &DecisionUniverse,
    bounds: &AuditBounds,
) -> Result<AuditVerdict> {
    Ok(check_axioms(&[axiom], rule, universe, bounds)?.remove(0))
}

/// Checks several axioms against one relation table.
pub fn check_axioms(
    axioms: &[AxiomId],
    rule: RuleId,
    universe: &DecisionUniverse,
    bounds: &AuditBounds,
) -> Result<Vec<AuditVerdict>> {
    for &axiom in axioms {
        enumerate_profiles(universe, bound_for(axiom, bounds))?;
    }
    let n = universe.len();
    let table = RelationTable::build(rule, universe);
    let reference = if rule == RuleId::BiPoss || !axioms.iter().any(|&a| axioms::wants_reference(a))
    {
        None
    } else {
        Some(RelationTable::build(RuleId::BiPoss, universe))
    };
    let reference = reference.as_ref().unwrap_or(&table);
    let p = Polarities::of(&table, n);
    Ok(axioms
        .iter()
        .map(|&axiom| {
            let witness = search(axiom, &table, reference, &p, n);
            AuditVerdict {
                axiom,
                rule,
                holds: witness.is_none(),
                witness,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{ArgSet, Argument, ImportanceScale};

    fn bounds() -> AuditBounds {
        AuditBounds::default()
    }

    #[test]
    fn pareto_is_incomplete_on_lucy() {
        let u = fixtures::lucy();
        let v = check_axiom(AxiomId::Completeness, RuleId::Pareto, &u, &bounds()).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        let a = u.set_of(&fixtures::LUCY_A).unwrap();
        let [first, second, ..] = w.instance.sets;
        assert_eq!(first.union(second), a);
        assert!(first.is_empty() || second.is_empty());
        assert!(w.replays(RuleId::Pareto, &u));
    }

    #[test]
    fn biposs_drowns_a_lower_pro() {
        let scale = ImportanceScale::new(["zero", "beta", "lambda"]).unwrap();
        let u = DecisionUniverse::new(scale, vec![Argument::pro("x", 2), Argument::pro("y", 1)])
            .unwrap();
        let v = check_axiom(AxiomId::PosEfficiency, RuleId::BiPoss, &u, &bounds()).unwrap();
        let w = v.witness.expect("drowning effect");
        assert_eq!(
            w.instance.sets[..2],
            [ArgSet::from_indices([0, 1]), ArgSet::singleton(0)]
        );
        assert!(w.replays(RuleId::BiPoss, &u));
        for rule in [RuleId::Discri, RuleId::BiLexi, RuleId::Lexi] {
            assert!(
                check_axiom(AxiomId::PosEfficiency, rule, &u, &bounds())
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn gneg_holds_for_biposs_on_small_universes() {
        for u in generate_universes(4, 3) {
            assert!(
                check_axiom(AxiomId::GNEG, RuleId::BiPoss, &u, &bounds())
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn bounds_are_enforced() {
        let u = fixtures::luc();
        let tight = AuditBounds {
            pair_limit: 12,
            tuple_limit: 6,
        };
        assert!(check_axiom(AxiomId::PrefIndependence, RuleId::BiPoss, &u, &tight).is_ok());
        assert!(matches!(
            check_axiom(AxiomId::GCLO, RuleId::BiPoss, &u, &tight),
            Err(crate::error::Error::UniverseTooLarge { size: 7, bound: 6 })
        ));
    }

    #[test]
    fn audits_are_deterministic() {
        let u = fixtures::luka();
        for axiom in AxiomId::ALL {
            let first = check_axiom(axiom, RuleId::Discri, &u, &bounds()).unwrap();
            let second = check_axiom(axiom, RuleId::Discri, &u, &bounds()).unwrap();
            assert_eq!(first, second);
        }
    }

    #[test]
    fn every_witness_replays() {
        for u in generate_universes(3, 3) {
            for rule in RuleId::ALL {
                for v in check_axioms(&AxiomId::ALL, rule, &u, &bounds()).unwrap() {
                    if let Some(w) = v.witness {
                        assert!(
                            w.replays(rule, &u),
                            "{} {} {}",
                            rule,
                            w.describe(&u),
                            u.display_set(u.all())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn axiom_names_parse_loosely() {
        assert_eq!(
            "prefindependence".parse::<AxiomId>(),
            Ok(AxiomId::PrefIndependence)
        );
        assert_eq!("Pos-Monotony".parse::<AxiomId>(), Ok(AxiomId::PosMonotony));
        assert_eq!("gclo".parse::<AxiomId>(), Ok(AxiomId::GCLO));
        assert!("monotone".parse::<AxiomId>().is_err());
    }
}
