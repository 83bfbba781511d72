//! Axiom bundles, relation properties, refinement and equivalence sweeps.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::axioms::{search, AxiomId, Polarities, Witness};
use super::generate::{enumerate_profiles, AuditBounds};
use super::relation::{Relation, RelationTable};
use super::{check_axioms, AuditVerdict};
use crate::encodings::{compare_bilexi_np_sets, BigSteppedCapacity};
use crate::error::{Error, Result};
use crate::model::{ArgSet, DecisionUniverse, Outcome};
use crate::rules::RuleId;

/// Properties characterizing BiPoss among monotonic bipolar set-relations.
pub const THEOREM1: [AxiomId; 12] = [
    AxiomId::Reflexivity,
    AxiomId::QuasiTransitivity,
    AxiomId::CA,
    AxiomId::SQC,
    AxiomId::NonTriviality,
    AxiomId::WeakUnanimity,
    AxiomId::PosMonotony,
    AxiomId::NegMonotony,
    AxiomId::SimpleGrounding,
    AxiomId::Completeness,
    AxiomId::GNEG,
    AxiomId::GCLO,
];

/// Properties characterizing Lexi among refinements of BiPoss.
pub const THEOREM2: [AxiomId; 5] = [
    AxiomId::Completeness,
    AxiomId::Transitivity,
    AxiomId::PrefIndependence,
    AxiomId::RefinesBiPoss,
    AxiomId::UnbiasedGround,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Bundle {
    Theorem1,
    Theorem2,
    Propositions,
}

impl Bundle {
    pub fn name(self) -> &'static str {
        match self {
            Bundle::Theorem1 => "theorem1",
            Bundle::Theorem2 => "theorem2",
            Bundle::Propositions => "propositions",
        }
    }

    /// Axioms of the bundle; empty for [`Bundle::Propositions`], which is a
    /// list of rule-level checks instead.
    pub fn axioms(self) -> &'static [AxiomId] {
        match self {
            Bundle::Theorem1 => &THEOREM1,
            Bundle::Theorem2 => &THEOREM2,
            Bundle::Propositions => &[],
        }
    }
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Bundle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "theorem1" => Ok(Bundle::Theorem1),
            "theorem2" => Ok(Bundle::Theorem2),
            "propositions" => Ok(Bundle::Propositions),
            _ => Err(Error::UnknownAxiom(s.to_string())),
        }
    }
}

/// An axiom checked on many universes; the counterexample is from the first
/// universe (in the given order) that violates it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepVerdict {
    pub axiom: AxiomId,
    pub rule: RuleId,
    pub holds: bool,
    pub universes_checked: usize,
    pub counterexample: Option<(DecisionUniverse, Witness)>,
}

/// Checks every axiom on every universe, in parallel across universes.
pub fn sweep_axioms(
    axioms: &[AxiomId],
    rule: RuleId,
    universes: &[DecisionUniverse],
    bounds: &AuditBounds,
) -> Result<Vec<SweepVerdict>> {
    let per_universe: Vec<Vec<AuditVerdict>> = universes
        .par_iter()
        .map(|u| check_axioms(axioms, rule, u, bounds))
        .collect::<Result<_>>()?;
    Ok(axioms
        .iter()
        .enumerate()
        .map(|(k, &axiom)| {
            let counterexample = per_universe
                .iter()
                .zip(universes)
                .find_map(|(verdicts, u)| verdicts[k].witness.map(|w| (u.clone(), w)));
            SweepVerdict {
                axiom,
                rule,
                holds: counterexample.is_none(),
                universes_checked: universes.len(),
                counterexample,
            }
        })
        .collect())
}

/// Order-theoretic properties of a rule on one universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub rule: RuleId,
    pub complete: AuditVerdict,
    pub reflexive: AuditVerdict,
    pub transitive: AuditVerdict,
    pub quasi_transitive: AuditVerdict,
    pub indifference_transitive: AuditVerdict,
}

pub fn relation_properties(
    rule: RuleId,
    universe: &DecisionUniverse,
    bounds: &AuditBounds,
) -> Result<RelationReport> {
    let mut v = check_axioms(
        &[
            AxiomId::Completeness,
            AxiomId::Reflexivity,
            AxiomId::Transitivity,
            AxiomId::QuasiTransitivity,
            AxiomId::IndifferenceTransitivity,
        ],
        rule,
        universe,
        bounds,
    )?
    .into_iter();
    let mut next = || v.next().expect("five verdicts");
    Ok(RelationReport {
        rule,
        complete: next(),
        reflexive: next(),
        transitive: next(),
        quasi_transitive: next(),
        indifference_transitive: next(),
    })
}

type Pair = (ArgSet, ArgSet);

/// Whether every strict preference of `coarse` is a strict preference of
/// `fine`, plus a pair showing the refinement is proper (coarse does not
/// decide, fine does).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinementVerdict {
    pub coarse: RuleId,
    pub fine: RuleId,
    pub holds: bool,
    /// `(A, B)` with `A ≻coarse B` but not `A ≻fine B`.
    pub witness: Option<Pair>,
    /// `(A, B)` with `A ≻fine B` but not `A ≻coarse B`.
    pub strictness: Option<Pair>,
}

fn refinement_on_tables(
    coarse: &RelationTable,
    fine: &RelationTable,
    profiles: &[ArgSet],
) -> (Option<Pair>, Option<Pair>) {
    let pairs = || {
        profiles
            .iter()
            .flat_map(|&a| profiles.iter().map(move |&b| (a, b)))
    };
    let witness = pairs().find(|&(a, b)| coarse.strict(a, b) && !fine.strict(a, b));
    let strictness = pairs().find(|&(a, b)| fine.strict(a, b) && !coarse.strict(a, b));
    (witness, strictness)
}

pub fn refinement_check(
    coarse: RuleId,
    fine: RuleId,
    universe: &DecisionUniverse,
    bounds: &AuditBounds,
) -> Result<RefinementVerdict> {
    let profiles = enumerate_profiles(universe, bounds.pair_limit)?;
    let (witness, strictness) = refinement_on_tables(
        &RelationTable::build(coarse, universe),
        &RelationTable::build(fine, universe),
        &profiles,
    );
    Ok(RefinementVerdict {
        coarse,
        fine,
        holds: witness.is_none(),
        witness,
        strictness,
    })
}

/// Refinement over many universes: the first violation and the first
/// strictness pair, each with the universe it was found in.
pub fn refinement_sweep(
    coarse: RuleId,
    fine: RuleId,
    universes: &[DecisionUniverse],
    bounds: &AuditBounds,
) -> Result<PropositionCheck> {
    let verdicts: Vec<RefinementVerdict> = universes
        .par_iter()
        .map(|u| refinement_check(coarse, fine, u, bounds))
        .collect::<Result<_>>()?;
    let counterexample = verdicts.iter().zip(universes).find_map(|(v, u)| {
        v.witness.map(|(a, b)| {
            format!(
                "{} ≻{coarse} {} but not ≻{fine}",
                u.display_set(a),
                u.display_set(b)
            )
        })
    });
    let strictness = verdicts.iter().zip(universes).find_map(|(v, u)| {
        v.strictness.map(|(a, b)| {
            format!(
                "{} vs {}: {coarse} {}, {fine} {}",
                u.display_set(a),
                u.display_set(b),
                crate::rules::compare_sets(coarse, u, a, b).symbol(),
                crate::rules::compare_sets(fine, u, a, b).symbol(),
            )
        })
    });
    Ok(PropositionCheck {
        name: format!("{coarse} strict preferences kept by {fine}"),
        holds: counterexample.is_none(),
        universes_checked: universes.len(),
        counterexample,
        strictness,
    })
}

/// First `(A, B, C)` with `A ∼ B`, `B ∼ C` and not `A ∼ C` under BiPoss.
pub fn find_biposs_indifference_intransitivity(
    universe: &DecisionUniverse,
    bounds: &AuditBounds,
) -> Result<(ArgSet, ArgSet, ArgSet)> {
    enumerate_profiles(universe, bounds.tuple_limit)?;
    let table = RelationTable::build(RuleId::BiPoss, universe);
    let p = Polarities::of(&table, universe.len());
    search(
        AxiomId::IndifferenceTransitivity,
        &table,
        &table,
        &p,
        universe.len(),
    )
    .map(|w| (w.instance.sets[0], w.instance.sets[1], w.instance.sets[2]))
    .ok_or(Error::NoWitnessFound)
}

/// One named rule-level claim checked across universes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropositionCheck {
    pub name: String,
    pub holds: bool,
    pub universes_checked: usize,
    pub counterexample: Option<String>,
    /// For refinements, a pair the finer rule decides and the coarser one
    /// does not.
    pub strictness: Option<String>,
}

fn axiom_check(
    name: &str,
    axiom: AxiomId,
    rule: RuleId,
    universes: &[DecisionUniverse],
    bounds: &AuditBounds,
) -> Result<PropositionCheck> {
    let v = sweep_axioms(&[axiom], rule, universes, bounds)?.remove(0);
    Ok(PropositionCheck {
        name: name.to_string(),
        holds: v.holds,
        universes_checked: v.universes_checked,
        counterexample: v.counterexample.map(|(u, w)| w.describe(&u)),
        strictness: None,
    })
}

fn equivalence_check<F>(
    name: &str,
    rule: RuleId,
    universes: &[DecisionUniverse],
    bounds: &AuditBounds,
    encoded: F,
) -> Result<PropositionCheck>
where
    F: Fn(&DecisionUniverse) -> Box<dyn Fn(ArgSet, ArgSet) -> Outcome + '_> + Sync,
{
    let mismatches: Vec<Option<String>> = universes
        .par_iter()
        .map(|u| {
            let profiles = enumerate_profiles(u, bounds.pair_limit)?;
            let table = RelationTable::build(rule, u);
            let f = encoded(u);
            Ok(profiles.iter().find_map(|&a| {
                profiles.iter().find_map(|&b| {
                    let (direct, via) = (table.outcome(a, b), f(a, b));
                    (direct != via).then(|| {
                        format!(
                            "{} vs {}: {rule} {direct}, encoded {via}",
                            u.display_set(a),
                            u.display_set(b)
                        )
                    })
                })
            }))
        })
        .collect::<Result<_>>()?;
    let counterexample = mismatches.into_iter().flatten().next();
    Ok(PropositionCheck {
        name: name.to_string(),
        holds: counterexample.is_none(),
        universes_checked: universes.len(),
        counterexample,
        strictness: None,
    })
}

/// The rule-level claims: BiPoss complete and quasi-transitive, Impl
/// transitive and refining BiPoss, the refinement chain
/// BiPoss → Discri → BiLexi → Lexi, and the capacity encodings of Lexi and
/// BiLexi.
pub fn propositions(
    universes: &[DecisionUniverse],
    bounds: &AuditBounds,
) -> Result<Vec<PropositionCheck>> {
    let mut checks = vec![
        axiom_check(
            "BiPoss complete",
            AxiomId::Completeness,
            RuleId::BiPoss,
            universes,
            bounds,
        )?,
        axiom_check(
            "BiPoss quasi-transitive",
            AxiomId::QuasiTransitivity,
            RuleId::BiPoss,
            universes,
            bounds,
        )?,
        axiom_check(
            "Impl transitive",
            AxiomId::Transitivity,
            RuleId::Impl,
            universes,
            bounds,
        )?,
        refinement_sweep(RuleId::BiPoss, RuleId::Impl, universes, bounds)?,
    ];
    for pair in [RuleId::BiPoss, RuleId::Discri, RuleId::BiLexi, RuleId::Lexi].windows(2) {
        checks.push(refinement_sweep(pair[0], pair[1], universes, bounds)?);
    }
    checks.push(equivalence_check(
        "net predisposition ranks as Lexi",
        RuleId::Lexi,
        universes,
        bounds,
        |u| {
            let cap = BigSteppedCapacity::new(u);
            let np: Vec<_> = u
                .all()
                .subsets()
                .map(|s| cap.net_predisposition(u, s))
                .collect();
            Box::new(move |a, b| Outcome::from_ordering(np[a.0 as usize].cmp(&np[b.0 as usize])))
        },
    )?);
    checks.push(equivalence_check(
        "truncated capacities rank as BiLexi",
        RuleId::BiLexi,
        universes,
        bounds,
        |u| Box::new(move |a, b| compare_bilexi_np_sets(u, a, b)),
    )?);
    Ok(checks)
}
