//! The six pairwise comparison rules.
//!
//! Every rule is evaluated in both directions and folded into an [`Outcome`].
//! The `*_sets` entry points work on raw [`ArgSet`]s of a universe and are what
//! the audit sweeps call; the profile-based functions add the universe check.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ArgSet, DecisionUniverse, Level, OptionProfile, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    Pareto,
    BiPoss,
    Impl,
    Discri,
    BiLexi,
    Lexi,
}

impl RuleId {
    pub const ALL: [RuleId; 6] = [
        RuleId::Pareto,
        RuleId::BiPoss,
        RuleId::Impl,
        RuleId::Discri,
        RuleId::BiLexi,
        RuleId::Lexi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Pareto => "Pareto",
            RuleId::BiPoss => "BiPoss",
            RuleId::Impl => "Impl",
            RuleId::Discri => "Discri",
            RuleId::BiLexi => "BiLexi",
            RuleId::Lexi => "Lexi",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

/// Compares two subsets of `universe` under `rule`. No universe check.
pub fn compare_sets(rule: RuleId, universe: &DecisionUniverse, a: ArgSet, b: ArgSet) -> Outcome {
    match rule {
        RuleId::Pareto => pareto(universe, a, b),
        RuleId::BiPoss => biposs(universe, a, b),
        RuleId::Impl => implicative(universe, a, b),
        RuleId::Discri => biposs(universe, a.difference(b), b.difference(a)),
        RuleId::BiLexi => bilexi(universe, a, b),
        RuleId::Lexi => lexi(universe, a, b),
    }
}

pub fn compare(rule: RuleId, a: &OptionProfile<'_>, b: &OptionProfile<'_>) -> Result<Outcome> {
    if !a.universe().same_as(b.universe()) {
        return Err(Error::UniverseMismatch);
    }
    Ok(compare_sets(rule, a.universe(), a.members(), b.members()))
}

pub fn compare_pareto(a: &OptionProfile<'_>, b: &OptionProfile<'_>) -> Result<Outcome> {
    compare(RuleId::Pareto, a, b)
}

pub fn compare_biposs(a: &OptionProfile<'_>, b: &OptionProfile<'_>) -> Result<Outcome> {
    compare(RuleId::BiPoss, a, b)
}

pub fn compare_impl(a: &OptionProfile<'_>, b: &OptionProfile<'_>) -> Result<Outcome> {
    compare(RuleId::Impl, a, b)
}

pub fn compare_discri(a: &OptionProfile<'_>, b: &OptionProfile<'_>) -> Result<Outcome> {
    compare(RuleId::Discri, a, b)
}

pub fn compare_bilexi(a: &OptionProfile<'_>, b: &OptionProfile<'_>) -> Result<Outcome> {
    compare(RuleId::BiLexi, a, b)
}

pub fn compare_lexi(a: &OptionProfile<'_>, b: &OptionProfile<'_>) -> Result<Outcome> {
    compare(RuleId::Lexi, a, b)
}

#[derive(Clone, Copy)]
struct Magnitudes {
    pros: Level,
    cons: Level,
}

fn magnitudes(u: &DecisionUniverse, set: ArgSet) -> Magnitudes {
    Magnitudes {
        pros: u.om(set.intersection(u.positives())),
        cons: u.om(set.intersection(u.negatives())),
    }
}

fn pareto(u: &DecisionUniverse, a: ArgSet, b: ArgSet) -> Outcome {
    let (a, b) = (magnitudes(u, a), magnitudes(u, b));
    Outcome::from_weak(
        a.pros >= b.pros && a.cons <= b.cons,
        b.pros >= a.pros && b.cons <= a.cons,
    )
}

fn biposs(u: &DecisionUniverse, a: ArgSet, b: ArgSet) -> Outcome {
    let (a, b) = (magnitudes(u, a), magnitudes(u, b));
    let for_a = a.pros.max(b.cons);
    let for_b = b.pros.max(a.cons);
    Outcome::from_ordering(for_a.cmp(&for_b))
}

fn implicative(u: &DecisionUniverse, a: ArgSet, b: ArgSet) -> Outcome {
    let top = u.om(a.union(b));
    let (a, b) = (magnitudes(u, a), magnitudes(u, b));
    // At the top level, pros of the other side must be matched by own pros,
    // and own cons must be matched by cons of the other side.
    let at_least = |x: Magnitudes, y: Magnitudes| {
        (y.pros != top || x.pros == top) && (x.cons != top || y.cons == top)
    };
    Outcome::from_weak(at_least(a, b), at_least(b, a))
}

fn bilexi(u: &DecisionUniverse, a: ArgSet, b: ArgSet) -> Outcome {
    for level in u.scale().positive_levels_desc() {
        let (ap, an) = (u.pro_count(a, level), u.con_count(a, level));
        let (bp, bn) = (u.pro_count(b, level), u.con_count(b, level));
        if ap != bp || an != bn {
            return Outcome::from_weak(ap >= bp && an <= bn, bp >= ap && bn <= an);
        }
    }
    Outcome::Indifferent
}

fn lexi(u: &DecisionUniverse, a: ArgSet, b: ArgSet) -> Outcome {
    for level in u.scale().positive_levels_desc() {
        let net_a = u.pro_count(a, level) as i64 - u.con_count(a, level) as i64;
        let net_b = u.pro_count(b, level) as i64 - u.con_count(b, level) as i64;
        if net_a != net_b {
            return Outcome::from_ordering(net_a.cmp(&net_b));
        }
    }
    Outcome::Indifferent
}

/// A member of X ∪ {0}: a single argument or the empty set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GroundElement {
    Zero,
    Arg(usize),
}

impl GroundElement {
    pub fn as_set(self) -> ArgSet {
        match self {
            GroundElement::Zero => ArgSet::EMPTY,
            GroundElement::Arg(i) => ArgSet::singleton(i),
        }
    }

    pub fn label(self, universe: &DecisionUniverse) -> String {
        match self {
            GroundElement::Zero => "0".to_string(),
            GroundElement::Arg(i) => universe.argument(i).name.clone(),
        }
    }
}

/// The restriction of a rule to singletons and the empty set.
#[derive(Debug, Clone, PartialEq)]
pub struct GroundRelation {
    pub rule: RuleId,
    pub elements: Vec<GroundElement>,
    /// `outcomes[i * n + j]` compares `elements[i]` with `elements[j]`.
    pub outcomes: Vec<Outcome>,
    pub is_weak_order: bool,
    /// Equivalence classes from best to worst; present iff a weak order.
    pub classes: Option<Vec<Vec<GroundElement>>>,
}

impl GroundRelation {
    pub fn outcome(&self, i: usize, j: usize) -> Outcome {
        self.outcomes[i * self.elements.len() + j]
    }

    pub fn render(&self, universe: &DecisionUniverse) -> String {
        match &self.classes {
            Some(classes) => classes
                .iter()
                .map(|class| {
                    class
                        .iter()
                        .map(|e| e.label(universe))
                        .collect::<Vec<_>>()
                        .join(" ∼ ")
                })
                .collect::<Vec<_>>()
                .join(" ≻ "),
            None => "(not a weak order)".to_string(),
        }
    }

    /// Same comparisons on every pair of ground elements.
    pub fn same_relation(&self, other: &GroundRelation) -> bool {
        self.elements == other.elements && self.outcomes == other.outcomes
    }
}

pub fn ground_relation(rule: RuleId, universe: &DecisionUniverse) -> GroundRelation {
    let mut elements: Vec<GroundElement> = (0..universe.len()).map(GroundElement::Arg).collect();
    elements.push(GroundElement::Zero);
    let n = elements.len();
    let mut outcomes = Vec::with_capacity(n * n);
    for &x in &elements {
        for &y in &elements {
            outcomes.push(compare_sets(rule, universe, x.as_set(), y.as_set()));
        }
    }
    let weak = |i: usize, j: usize| outcomes[i * n + j].first_weakly_preferred();
    let complete = (0..n).all(|i| (0..n).all(|j| weak(i, j) || weak(j, i)));
    let transitive =
        (0..n).all(|i| (0..n).all(|j| !weak(i, j) || (0..n).all(|k| !weak(j, k) || weak(i, k))));
    let is_weak_order = complete && transitive;
    let classes = is_weak_order.then(|| {
        // In a weak order, the number of elements an element beats ranks it.
        let score = |i: usize| (0..n).filter(|&j| weak(i, j)).count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(score(i)));
        let mut classes: Vec<Vec<GroundElement>> = Vec::new();
        let mut last_score = None;
        for i in order {
            if last_score == Some(score(i)) {
                classes.last_mut().unwrap().push(elements[i]);
            } else {
                classes.push(vec![elements[i]]);
                last_score = Some(score(i));
            }
        }
        classes
    });
    GroundRelation {
        rule,
        elements,
        outcomes,
        is_weak_order,
        classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{Argument, ImportanceScale};
    use proptest::prelude::*;

    fn pair<'u>(
        u: &'u DecisionUniverse,
        a: &[&str],
        b: &[&str],
    ) -> (OptionProfile<'u>, OptionProfile<'u>) {
        (
            OptionProfile::from_names(u, a).unwrap(),
            OptionProfile::from_names(u, b).unwrap(),
        )
    }

    /// Four-case decomposition of the implicative rule, written from the
    /// order-of-magnitude values only.
    fn impl_by_cases(u: &DecisionUniverse, a: ArgSet, b: ArgSet) -> Outcome {
        let ap = u.om(a.intersection(u.positives()));
        let an = u.om(a.intersection(u.negatives()));
        let bp = u.om(b.intersection(u.positives()));
        let bn = u.om(b.intersection(u.negatives()));
        let indifferent = (ap == bp && bp == an && an == bn)
            || (ap == bp && ap > an.max(bn))
            || (an == bn && an > ap.max(bp));
        let incomparable = (ap == an && ap > bn.max(bp)) || (bp == bn && bp > an.max(ap));
        let first = ap.max(bn) > an.max(bp)
            || (ap == an && an == bn && bn > bp)
            || (bp == bn && bn == ap && ap > an);
        let second = bp.max(an) > bn.max(ap)
            || (bp == bn && bn == an && an > ap)
            || (ap == an && an == bp && bp > bn);
        match (indifferent, incomparable, first, second) {
            (true, false, false, false) => Outcome::Indifferent,
            (false, true, false, false) => Outcome::Incomparable,
            (false, false, true, false) => Outcome::PreferFirst,
            (false, false, false, true) => Outcome::PreferSecond,
            cases => panic!("decomposition not a partition: {cases:?}"),
        }
    }

    fn small_universes() -> Vec<DecisionUniverse> {
        crate::audit::generate_universes(5, 4).collect()
    }

    #[test]
    fn luc_outcomes() {
        let u = fixtures::luc();
        let (a, b) = pair(&u, &fixtures::LUC_A, &fixtures::LUC_B);
        assert_eq!(compare_pareto(&a, &b), Ok(Outcome::PreferFirst));
        assert_eq!(compare_biposs(&a, &b), Ok(Outcome::Indifferent));
        assert_eq!(compare_impl(&a, &b), Ok(Outcome::PreferFirst));
        assert_eq!(compare_discri(&a, &b), Ok(Outcome::Indifferent));
        assert_eq!(compare_bilexi(&a, &b), Ok(Outcome::Incomparable));
        assert_eq!(compare_lexi(&a, &b), Ok(Outcome::PreferSecond));
    }

    #[test]
    fn lucy_outcomes() {
        let u = fixtures::lucy();
        let (a, home) = pair(&u, &fixtures::LUCY_A, &[]);
        assert_eq!(compare_pareto(&a, &home), Ok(Outcome::Incomparable));
        for rule in &RuleId::ALL[1..] {
            assert_eq!(
                compare(*rule, &a, &home),
                Ok(Outcome::PreferFirst),
                "{rule}"
            );
        }
    }

    #[test]
    fn luka_outcomes() {
        let u = fixtures::luka();
        let (a, b) = pair(&u, &fixtures::LUKA_A, &fixtures::LUKA_B);
        assert_eq!(compare_pareto(&a, &b), Ok(Outcome::PreferFirst));
        assert_eq!(compare_biposs(&a, &b), Ok(Outcome::Indifferent));
        assert_eq!(compare_impl(&a, &b), Ok(Outcome::Indifferent));
        assert_eq!(compare_discri(&a, &b), Ok(Outcome::PreferSecond));
        assert_eq!(compare_bilexi(&a, &b), Ok(Outcome::PreferSecond));
        assert_eq!(compare_lexi(&a, &b), Ok(Outcome::PreferSecond));
    }

    #[test]
    fn reflexive_and_empty_cases() {
        let u = fixtures::luc();
        let a = OptionProfile::from_names(&u, &fixtures::LUC_A).unwrap();
        let empty = OptionProfile::empty(&u);
        for rule in RuleId::ALL {
            assert_eq!(compare(rule, &a, &a), Ok(Outcome::Indifferent), "{rule}");
            assert_eq!(
                compare(rule, &empty, &empty),
                Ok(Outcome::Indifferent),
                "{rule}"
            );
        }
    }

    #[test]
    fn null_only_option_behaves_as_empty() {
        let scale = ImportanceScale::new(["0", "1"]).unwrap();
        let u = DecisionUniverse::new(
            scale,
            vec![
                Argument::pro("z", 0),
                Argument::pro("x", 1),
                Argument::con("y", 1),
            ],
        )
        .unwrap();
        let z = ArgSet::singleton(0);
        for rule in RuleId::ALL {
            for other in u.all().subsets() {
                assert_eq!(
                    compare_sets(rule, &u, z, other),
                    compare_sets(rule, &u, ArgSet::EMPTY, other),
                    "{rule}"
                );
            }
        }
    }

    #[test]
    fn mismatched_universes_are_rejected() {
        let u = fixtures::luc();
        let v = fixtures::lucy();
        let a = OptionProfile::empty(&u);
        let b = OptionProfile::empty(&v);
        assert_eq!(compare_lexi(&a, &b), Err(Error::UniverseMismatch));
    }

    #[test]
    fn rule_names_parse() {
        assert_eq!("biposs".parse::<RuleId>(), Ok(RuleId::BiPoss));
        assert_eq!("LEXI".parse::<RuleId>(), Ok(RuleId::Lexi));
        assert!("borda".parse::<RuleId>().is_err());
    }

    #[test]
    fn impl_matches_case_decomposition_exhaustively() {
        for u in small_universes() {
            for a in u.all().subsets() {
                for b in u.all().subsets() {
                    assert_eq!(
                        compare_sets(RuleId::Impl, &u, a, b),
                        impl_by_cases(&u, a, b),
                        "{:?} vs {:?} in {:?}",
                        a,
                        b,
                        u.arguments()
                    );
                }
            }
        }
    }

    #[test]
    fn mirror_symmetry_and_reflexivity_exhaustive() {
        for u in small_universes() {
            for rule in RuleId::ALL {
                for a in u.all().subsets() {
                    assert_eq!(compare_sets(rule, &u, a, a), Outcome::Indifferent);
                    for b in u.all().subsets() {
                        assert_eq!(
                            compare_sets(rule, &u, a, b).mirror(),
                            compare_sets(rule, &u, b, a)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn only_pareto_bilexi_and_impl_conflicts_are_incomparable() {
        for u in small_universes() {
            for a in u.all().subsets() {
                for b in u.all().subsets() {
                    for rule in [RuleId::BiPoss, RuleId::Discri, RuleId::Lexi] {
                        assert_ne!(compare_sets(rule, &u, a, b), Outcome::Incomparable);
                    }
                    if compare_sets(RuleId::Impl, &u, a, b) == Outcome::Incomparable {
                        let ap = u.om(a.intersection(u.positives()));
                        let an = u.om(a.intersection(u.negatives()));
                        let bp = u.om(b.intersection(u.positives()));
                        let bn = u.om(b.intersection(u.negatives()));
                        assert!((ap == an && ap > bp.max(bn)) || (bp == bn && bp > ap.max(an)));
                    }
                }
            }
        }
    }

    #[test]
    fn bivariate_monotony_exhaustive() {
        for u in small_universes() {
            for a in u.all().subsets() {
                for b in u.all().subsets() {
                    let more_pros = b
                        .intersection(u.positives())
                        .is_subset(a.intersection(u.positives()));
                    let fewer_cons = a
                        .intersection(u.negatives())
                        .is_subset(b.intersection(u.negatives()));
                    if more_pros && fewer_cons {
                        for rule in RuleId::ALL {
                            assert!(
                                compare_sets(rule, &u, a, b).first_weakly_preferred(),
                                "{rule}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_to_cons_is_wald_and_to_pros_is_leximax() {
        for u in small_universes() {
            if u.negatives() == u.all() {
                for a in u.all().subsets() {
                    for b in u.all().subsets() {
                        let wald = Outcome::from_ordering(u.om(b).cmp(&u.om(a)));
                        assert_eq!(compare_sets(RuleId::BiPoss, &u, a, b), wald);
                    }
                }
            }
            if u.positives() == u.all() {
                let sorted = |s: ArgSet| {
                    let mut v: Vec<Level> = s.iter().map(|i| u.importance(i)).collect();
                    v.sort_by(|x, y| y.cmp(x));
                    v
                };
                for a in u.all().subsets() {
                    for b in u.all().subsets() {
                        // leximax: compare descending vectors, a longer vector with an
                        // equal prefix wins since every element is positive.
                        let leximax = Outcome::from_ordering(sorted(a).cmp(&sorted(b)));
                        assert_eq!(compare_sets(RuleId::Lexi, &u, a, b), leximax);
                        assert_eq!(compare_sets(RuleId::BiLexi, &u, a, b), leximax);
                    }
                }
            }
        }
    }

    #[test]
    fn ground_relation_of_luc() {
        let u = fixtures::luc();
        let g = ground_relation(RuleId::BiPoss, &u);
        assert!(g.is_weak_order);
        let names: Vec<Vec<String>> = g
            .classes
            .as_ref()
            .unwrap()
            .iter()
            .map(|c| {
                let mut v: Vec<String> = c.iter().map(|e| e.label(&u)).collect();
                v.sort();
                v
            })
            .collect();
        assert_eq!(
            names,
            vec![
                vec!["landscape⁺⁺".to_string()],
                vec!["disco⁺".into(), "pool⁺".into(), "tennis⁺".into()],
                vec!["0".into()],
                vec!["airline⁻⁻".into(), "governance⁻⁻".into(), "price⁻⁻".into()],
            ]
        );
        assert!(ground_relation(RuleId::Lexi, &u).same_relation(&g));
    }

    #[test]
    fn single_pro_ground_relation() {
        let scale = ImportanceScale::new(["0", "1"]).unwrap();
        let u = DecisionUniverse::new(scale, vec![Argument::pro("x", 1)]).unwrap();
        for rule in RuleId::ALL {
            let g = ground_relation(rule, &u);
            assert_eq!(g.render(&u), "x ≻ 0", "{rule}");
        }
    }

    proptest! {
        #[test]
        fn weak_unanimity_on_random_universes(
            levels in proptest::collection::vec((any::<bool>(), 0u16..4), 1..9),
            a in any::<u64>(),
            b in any::<u64>(),
        ) {
            let args = levels
                .iter()
                .enumerate()
                .map(|(i, &(pro, l))| if pro { Argument::pro(format!("x{i}"), l) } else { Argument::con(format!("x{i}"), l) })
                .collect();
            let u = DecisionUniverse::new(ImportanceScale::with_levels(4).unwrap(), args).unwrap();
            let (a, b) = (ArgSet(a).intersection(u.all()), ArgSet(b).intersection(u.all()));
            let (pos, neg) = (u.positives(), u.negatives());
            for rule in RuleId::ALL {
                let side = |x: ArgSet, y: ArgSet, mask: ArgSet| {
                    compare_sets(rule, &u, x.intersection(mask), y.intersection(mask)).first_weakly_preferred()
                };
                if side(a, b, pos) && side(a, b, neg) {
                    prop_assert!(compare_sets(rule, &u, a, b).first_weakly_preferred(), "{}", rule);
                }
                prop_assert_eq!(compare_sets(rule, &u, a, b).mirror(), compare_sets(rule, &u, b, a));
            }
        }
    }
}
