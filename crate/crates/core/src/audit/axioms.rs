//! Axiom schemas as predicates over a set-relation.
//!
//! Each axiom is a universally quantified implication. [`violated`] decides
//! whether one concrete instance of the quantifiers breaks it, and [`search`]
//! walks the instances in a fixed order and returns the first violation. The
//! positive, negative and null arguments are read off the relation itself
//! (`{x} ≻ ∅`, `∅ ≻ {x}`, `{x} ∼ ∅`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::relation::Relation;
use crate::error::{Error, Result};
use crate::model::{ArgSet, DecisionUniverse};
use crate::rules::RuleId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AxiomId {
    Reflexivity,
    Completeness,
    QuasiTransitivity,
    Transitivity,
    IndifferenceTransitivity,
    /// Clarity of arguments.
    CA,
    /// Status quo consistency.
    SQC,
    PosMonotony,
    NegMonotony,
    WeakUnanimity,
    NonTriviality,
    /// The ground relation on X ∪ {0} is a weak order.
    GroundWeakOrder,
    XMonotony,
    /// Positive cancellation.
    POSC,
    /// Negative cancellation.
    NEGC,
    /// Ground weak order, X-monotony, POSC and NEGC together.
    SimpleGrounding,
    /// Negligibility on positive sets.
    NEG,
    /// Closeness preservation on positive sets.
    CLO,
    GNEG,
    GCLO,
    PosEfficiency,
    NegEfficiency,
    PrefIndependence,
    /// Exchanging disjoint equivalent subsets.
    Anonymity,
    /// Adding a set equivalent to ∅ changes nothing.
    AddNullSet,
    /// `A ⪰ B ⟺ A ∪ C ⪰ B ∪ D` for equivalent `C`, `D` disjoint from both.
    ExchangeEquivalentSets,
    /// `A ⪰ B ⟺ A ∪ {x} ⪰ B ∪ {y}` for equivalent singletons.
    ExchangeEquivalentSingletons,
    /// Strict BiPoss preferences are kept.
    RefinesBiPoss,
    /// Same ground relation as BiPoss.
    UnbiasedGround,
}

impl AxiomId {
    pub const ALL: [AxiomId; 29] = [
        AxiomId::Reflexivity,
        AxiomId::Completeness,
        AxiomId::QuasiTransitivity,
        AxiomId::Transitivity,
        AxiomId::IndifferenceTransitivity,
        AxiomId::CA,
        AxiomId::SQC,
        AxiomId::PosMonotony,
        AxiomId::NegMonotony,
        AxiomId::WeakUnanimity,
        AxiomId::NonTriviality,
        AxiomId::GroundWeakOrder,
        AxiomId::XMonotony,
        AxiomId::POSC,
        AxiomId::NEGC,
        AxiomId::SimpleGrounding,
        AxiomId::NEG,
        AxiomId::CLO,
        AxiomId::GNEG,
        AxiomId::GCLO,
        AxiomId::PosEfficiency,
        AxiomId::NegEfficiency,
        AxiomId::PrefIndependence,
        AxiomId::Anonymity,
        AxiomId::AddNullSet,
        AxiomId::ExchangeEquivalentSets,
        AxiomId::ExchangeEquivalentSingletons,
        AxiomId::RefinesBiPoss,
        AxiomId::UnbiasedGround,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Reflexivity => "Reflexivity",
            AxiomId::Completeness => "Completeness",
            AxiomId::QuasiTransitivity => "QuasiTransitivity",
            AxiomId::Transitivity => "Transitivity",
            AxiomId::IndifferenceTransitivity => "IndifferenceTransitivity",
            AxiomId::CA => "CA",
            AxiomId::SQC => "SQC",
            AxiomId::PosMonotony => "PosMonotony",
            AxiomId::NegMonotony => "NegMonotony",
            AxiomId::WeakUnanimity => "WeakUnanimity",
            AxiomId::NonTriviality => "NonTriviality",
            AxiomId::GroundWeakOrder => "GroundWeakOrder",
            AxiomId::XMonotony => "XMonotony",
            AxiomId::POSC => "POSC",
            AxiomId::NEGC => "NEGC",
            AxiomId::SimpleGrounding => "SimpleGrounding",
            AxiomId::NEG => "NEG",
            AxiomId::CLO => "CLO",
            AxiomId::GNEG => "GNEG",
            AxiomId::GCLO => "GCLO",
            AxiomId::PosEfficiency => "PosEfficiency",
            AxiomId::NegEfficiency => "NegEfficiency",
            AxiomId::PrefIndependence => "PrefIndependence",
            AxiomId::Anonymity => "Anonymity",
            AxiomId::AddNullSet => "AddNullSet",
            AxiomId::ExchangeEquivalentSets => "ExchangeEquivalentSets",
            AxiomId::ExchangeEquivalentSingletons => "ExchangeEquivalentSingletons",
            AxiomId::RefinesBiPoss => "RefinesBiPoss",
            AxiomId::UnbiasedGround => "UnbiasedGround",
        }
    }

    /// Axioms whose instances range over at most two free profiles (plus
    /// single arguments or a set disjoint from both). These use the larger
    /// enumeration bound.
    pub fn is_pairwise(self) -> bool {
        matches!(
            self,
            AxiomId::Reflexivity
                | AxiomId::Completeness
                | AxiomId::CA
                | AxiomId::NonTriviality
                | AxiomId::WeakUnanimity
                | AxiomId::GroundWeakOrder
                | AxiomId::POSC
                | AxiomId::NEGC
                | AxiomId::PosEfficiency
                | AxiomId::NegEfficiency
                | AxiomId::PrefIndependence
                | AxiomId::RefinesBiPoss
                | AxiomId::UnbiasedGround
        )
    }

    fn needs_reference(self) -> bool {
        matches!(self, AxiomId::RefinesBiPoss | AxiomId::UnbiasedGround)
    }

    /// Labels of the set and argument slots an instance uses.
    fn slots(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            AxiomId::Reflexivity => (&["A"], &[]),
            AxiomId::Completeness
            | AxiomId::WeakUnanimity
            | AxiomId::PosEfficiency
            | AxiomId::NegEfficiency
            | AxiomId::RefinesBiPoss
            | AxiomId::UnbiasedGround => (&["A", "B"], &[]),
            AxiomId::QuasiTransitivity
            | AxiomId::Transitivity
            | AxiomId::IndifferenceTransitivity
            | AxiomId::PrefIndependence
            | AxiomId::AddNullSet
            | AxiomId::NEG => (&["A", "B", "C"], &[]),
            AxiomId::CLO => (&["A", "B", "C"], &[]),
            AxiomId::GroundWeakOrder => (&["e1", "e2", "e3"], &[]),
            AxiomId::CA => (&[], &["x"]),
            AxiomId::SQC => (&["A", "B"], &["x"]),
            AxiomId::PosMonotony | AxiomId::NegMonotony => (&["A", "B", "C", "C'"], &[]),
            AxiomId::NonTriviality => (&[], &[]),
            AxiomId::XMonotony => (&["A", "B"], &["x", "x'"]),
            AxiomId::POSC | AxiomId::NEGC => (&[], &["x", "z", "y"]),
            AxiomId::SimpleGrounding => (&[], &[]),
            AxiomId::GNEG
            | AxiomId::GCLO
            | AxiomId::Anonymity
            | AxiomId::ExchangeEquivalentSets => (&["A", "B", "C", "D"], &[]),
            AxiomId::ExchangeEquivalentSingletons => (&["A", "B"], &["x", "y"]),
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::UnknownAxiom(s.to_string()))
    }
}

/// Whether the rule is guaranteed to satisfy the axiom on every valid
/// universe. `false` only means there is no such guarantee: several rules
/// satisfy axioms outside this table (Pareto satisfies GCLO, for instance).
pub fn expected_to_hold(axiom: AxiomId, rule: RuleId) -> bool {
    use AxiomId::*;
    use RuleId::*;
    match axiom {
        Reflexivity | QuasiTransitivity | CA | SQC | PosMonotony | NegMonotony | WeakUnanimity
        | NonTriviality => true,
        Transitivity | IndifferenceTransitivity => matches!(rule, Pareto | Impl | BiLexi | Lexi),
        Completeness => matches!(rule, BiPoss | Discri | Lexi),
        GroundWeakOrder | XMonotony | POSC | NEGC | SimpleGrounding => {
            matches!(rule, Pareto | BiPoss)
        }
        NEG | CLO => matches!(rule, Pareto | BiPoss | Impl),
        GNEG | GCLO => rule == BiPoss,
        PosEfficiency | NegEfficiency | PrefIndependence => matches!(rule, Discri | BiLexi | Lexi),
        Anonymity | AddNullSet | ExchangeEquivalentSets | ExchangeEquivalentSingletons => {
            matches!(rule, BiLexi | Lexi)
        }
        RefinesBiPoss => rule != Pareto,
        UnbiasedGround => matches!(rule, BiPoss | Lexi),
    }
}

/// Concrete values for an axiom's quantified variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Instance {
    pub sets: [ArgSet; 4],
    pub args: [usize; 3],
    /// Which clause of a multi-clause axiom is concerned.
    pub part: u8,
}

impl Instance {
    fn sets(sets: &[ArgSet]) -> Instance {
        let mut inst = Instance::default();
        inst.sets[..sets.len()].copy_from_slice(sets);
        inst
    }

    fn with_args(mut self, args: &[usize]) -> Instance {
        self.args[..args.len()].copy_from_slice(args);
        self
    }

    fn part(mut self, part: u8) -> Instance {
        self.part = part;
        self
    }
}

/// A violation: the axiom actually broken (a component, for composite
/// axioms) and the instance breaking it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub axiom: AxiomId,
    pub instance: Instance,
}

impl Witness {
    pub fn describe(&self, universe: &DecisionUniverse) -> String {
        let (set_labels, arg_labels) = self.axiom.slots();
        let mut parts: Vec<String> = set_labels
            .iter()
            .zip(self.instance.sets)
            .map(|(label, set)| format!("{label}={}", universe.display_set(set)))
            .collect();
        parts.extend(
            arg_labels
                .iter()
                .zip(self.instance.args)
                .map(|(label, i)| format!("{label}={}", universe.argument(i).name)),
        );
        if matches!(
            self.axiom,
            AxiomId::CLO | AxiomId::XMonotony | AxiomId::Anonymity | AxiomId::AddNullSet
        ) {
            parts.push(format!("clause {}", self.instance.part + 1));
        }
        if parts.is_empty() {
            self.axiom.name().to_string()
        } else {
            format!("{}: {}", self.axiom, parts.join(", "))
        }
    }
}

/// Positive, negative and null arguments as the relation sees them.
#[derive(Debug, Clone, Copy)]
pub struct Polarities {
    pub all: ArgSet,
    pub pos: ArgSet,
    pub neg: ArgSet,
    pub null: ArgSet,
}

impl Polarities {
    pub fn of<R: Relation>(r: &R, n: usize) -> Polarities {
        let mut p = Polarities {
            all: ArgSet::full(n),
            pos: ArgSet::EMPTY,
            neg: ArgSet::EMPTY,
            null: ArgSet::EMPTY,
        };
        for x in 0..n {
            let sx = ArgSet::singleton(x);
            if r.strict(sx, ArgSet::EMPTY) {
                p.pos = p.pos.with(x);
            } else if r.strict(ArgSet::EMPTY, sx) {
                p.neg = p.neg.with(x);
            } else if r.indifferent(sx, ArgSet::EMPTY) {
                p.null = p.null.with(x);
            }
        }
        p
    }
}

fn one(x: usize) -> ArgSet {
    ArgSet::singleton(x)
}

/// Does this instance break the axiom? `reference` is the BiPoss relation on
/// the same universe (consulted only by the refinement axioms).
pub fn violated<R: Relation>(
    axiom: AxiomId,
    r: &R,
    reference: &R,
    p: &Polarities,
    inst: &Instance,
) -> bool {
    let [a, b, c, d] = inst.sets;
    let [x, y, z] = inst.args;
    let e = ArgSet::EMPTY;
    match axiom {
        AxiomId::Reflexivity => !r.weak(a, a),
        AxiomId::Completeness => !r.weak(a, b) && !r.weak(b, a),
        AxiomId::QuasiTransitivity => r.strict(a, b) && r.strict(b, c) && !r.strict(a, c),
        AxiomId::Transitivity => r.weak(a, b) && r.weak(b, c) && !r.weak(a, c),
        AxiomId::IndifferenceTransitivity => {
            r.indifferent(a, b) && r.indifferent(b, c) && !r.indifferent(a, c)
        }
        AxiomId::CA => !r.weak(one(x), e) && !r.weak(e, one(x)),
        AxiomId::SQC => {
            r.indifferent(one(x), e)
                && (r.weak(a, b) != r.weak(a.with(x), b) || r.weak(a, b) != r.weak(a, b.with(x)))
        }
        AxiomId::PosMonotony => {
            c.is_subset(p.pos)
                && d.is_subset(p.pos)
                && r.weak(a, b)
                && !r.weak(c.union(a), b.difference(d))
        }
        AxiomId::NegMonotony => {
            c.is_subset(p.neg)
                && d.is_subset(p.neg)
                && r.weak(a, b)
                && !r.weak(a.difference(c), b.union(d))
        }
        AxiomId::WeakUnanimity => {
            r.weak(a.intersection(p.pos), b.intersection(p.pos))
                && r.weak(a.intersection(p.neg), b.intersection(p.neg))
                && !r.weak(a, b)
        }
        AxiomId::NonTriviality => !r.strict(p.pos, p.neg),
        AxiomId::GroundWeakOrder => {
            (!r.weak(a, b) && !r.weak(b, a)) || (r.weak(a, b) && r.weak(b, c) && !r.weak(a, c))
        }
        AxiomId::XMonotony => {
            let (ax, ax2) = (a.with(x), a.with(y));
            a.is_disjoint(one(x).with(y))
                && r.weak(one(y), one(x))
                && match inst.part {
                    0 => r.strict(ax, b) && !r.strict(ax2, b),
                    1 => r.indifferent(ax, b) && !r.weak(ax2, b),
                    2 => r.strict(b, ax2) && !r.strict(b, ax),
                    _ => r.indifferent(b, ax2) && !r.weak(b, ax),
                }
        }
        AxiomId::POSC => {
            p.pos.contains(x)
                && p.pos.contains(y)
                && p.neg.contains(z)
                && r.indifferent(one(x).with(z), e)
                && r.indifferent(one(y).with(z), e)
                && !r.indifferent(one(x), one(y))
        }
        AxiomId::NEGC => {
            p.neg.contains(x)
                && p.neg.contains(y)
                && p.pos.contains(z)
                && r.indifferent(one(x).with(z), e)
                && r.indifferent(one(y).with(z), e)
                && !r.indifferent(one(x), one(y))
        }
        AxiomId::SimpleGrounding => false,
        AxiomId::NEG => {
            a.union(b).union(c).is_subset(p.pos)
                && r.strict(a, b)
                && r.strict(a, c)
                && !r.strict(a, b.union(c))
        }
        AxiomId::CLO => {
            a.union(b).union(c).is_subset(p.pos)
                && match inst.part {
                    0 => {
                        r.indifferent(a, b) && r.indifferent(a, c) && !r.indifferent(a, b.union(c))
                    }
                    _ => r.weak(b, c) && !r.indifferent(b, b.union(c)),
                }
        }
        AxiomId::GNEG => r.strict(a, b) && r.strict(c, d) && !r.strict(a.union(c), b.union(d)),
        AxiomId::GCLO => r.weak(a, b) && r.weak(c, d) && !r.weak(a.union(c), b.union(d)),
        AxiomId::PosEfficiency => b.is_subset(a) && r.strict(a.difference(b), e) && !r.strict(a, b),
        AxiomId::NegEfficiency => b.is_subset(a) && r.strict(e, a.difference(b)) && !r.strict(b, a),
        AxiomId::PrefIndependence => {
            a.union(b).is_disjoint(c) && r.weak(a, b) != r.weak(a.union(c), b.union(c))
        }
        AxiomId::Anonymity => {
            a.is_disjoint(c.union(d))
                && r.indifferent(c, d)
                && match inst.part {
                    0 => r.weak(a.union(c), b) != r.weak(a.union(d), b),
                    _ => r.weak(b, a.union(c)) != r.weak(b, a.union(d)),
                }
        }
        AxiomId::AddNullSet => {
            a.is_disjoint(c)
                && r.indifferent(c, e)
                && match inst.part {
                    0 => r.weak(a, b) != r.weak(a.union(c), b),
                    _ => r.weak(b, a) != r.weak(b, a.union(c)),
                }
        }
        AxiomId::ExchangeEquivalentSets => {
            a.union(b).is_disjoint(c.union(d))
                && r.indifferent(c, d)
                && r.weak(a, b) != r.weak(a.union(c), b.union(d))
        }
        AxiomId::ExchangeEquivalentSingletons => {
            !a.contains(x)
                && !b.contains(y)
                && r.indifferent(one(x), one(y))
                && r.weak(a, b) != r.weak(a.with(x), b.with(y))
        }
        AxiomId::RefinesBiPoss => reference.strict(a, b) && !r.strict(a, b),
        AxiomId::UnbiasedGround => r.outcome(a, b) != reference.outcome(a, b),
    }
}

/// The sub-axioms of [`AxiomId::SimpleGrounding`], checked in this order.
pub const SIMPLE_GROUNDING_PARTS: [AxiomId; 4] = [
    AxiomId::GroundWeakOrder,
    AxiomId::XMonotony,
    AxiomId::POSC,
    AxiomId::NEGC,
];

/// First violating instance in enumeration order, if any. `r` must be
/// defined on every subset of `0..n`.
pub fn search<R: Relation>(
    axiom: AxiomId,
    r: &R,
    reference: &R,
    p: &Polarities,
    n: usize,
) -> Option<Witness> {
    if axiom == AxiomId::SimpleGrounding {
        return SIMPLE_GROUNDING_PARTS
            .iter()
            .find_map(|&part| search(part, r, reference, p, n));
    }
    let profiles: Vec<ArgSet> = p.all.subsets().collect();
    let hit = |inst: Instance| violated(axiom, r, reference, p, &inst).then_some(inst);
    let found =
        match axiom {
            AxiomId::Reflexivity => profiles.iter().find_map(|&a| hit(Instance::sets(&[a]))),
            AxiomId::Completeness | AxiomId::WeakUnanimity | AxiomId::RefinesBiPoss => {
                pairs(&profiles).find_map(|(a, b)| hit(Instance::sets(&[a, b])))
            }
            AxiomId::PosEfficiency | AxiomId::NegEfficiency => profiles
                .iter()
                .flat_map(|&a| a.subsets().map(move |b| (a, b)))
                .find_map(|(a, b)| hit(Instance::sets(&[a, b]))),
            AxiomId::QuasiTransitivity => chains(&profiles, |a, b| r.strict(a, b))
                .find_map(|(a, b, c)| hit(Instance::sets(&[a, b, c]))),
            AxiomId::Transitivity => chains(&profiles, |a, b| r.weak(a, b))
                .find_map(|(a, b, c)| hit(Instance::sets(&[a, b, c]))),
            AxiomId::IndifferenceTransitivity => chains(&profiles, |a, b| r.indifferent(a, b))
                .find_map(|(a, b, c)| hit(Instance::sets(&[a, b, c]))),
            AxiomId::CA => (0..n).find_map(|x| hit(Instance::default().with_args(&[x]))),
            AxiomId::SQC => p.null.iter().find_map(|x| {
                pairs(&profiles).find_map(|(a, b)| hit(Instance::sets(&[a, b]).with_args(&[x])))
            }),
            AxiomId::PosMonotony => {
                pairs(&profiles)
                    .filter(|&(a, b)| r.weak(a, b))
                    .find_map(|(a, b)| {
                        p.pos.difference(a).subsets().find_map(|c| {
                            p.pos
                                .intersection(b)
                                .subsets()
                                .find_map(|c2| hit(Instance::sets(&[a, b, c, c2])))
                        })
                    })
            }
            AxiomId::NegMonotony => {
                pairs(&profiles)
                    .filter(|&(a, b)| r.weak(a, b))
                    .find_map(|(a, b)| {
                        p.neg.intersection(a).subsets().find_map(|c| {
                            p.neg
                                .difference(b)
                                .subsets()
                                .find_map(|c2| hit(Instance::sets(&[a, b, c, c2])))
                        })
                    })
            }
            AxiomId::NonTriviality => hit(Instance::default()),
            AxiomId::GroundWeakOrder => {
                let ground: Vec<ArgSet> = (0..n).map(one).chain([ArgSet::EMPTY]).collect();
                ground.iter().find_map(|&a| {
                    ground
                        .iter()
                        .find_map(|&b| ground.iter().find_map(|&c| hit(Instance::sets(&[a, b, c]))))
                })
            }
            AxiomId::XMonotony => pairs(&profiles).find_map(|(a, b)| {
                let free = p.all.difference(a);
                free.iter().find_map(|x| {
                    free.iter().find_map(|x2| {
                        (0..4).find_map(|part| {
                            hit(Instance::sets(&[a, b]).with_args(&[x, x2]).part(part))
                        })
                    })
                })
            }),
            AxiomId::POSC => cancellation(p.pos, p.neg)
                .find_map(|args| hit(Instance::default().with_args(&args))),
            AxiomId::NEGC => cancellation(p.neg, p.pos)
                .find_map(|args| hit(Instance::default().with_args(&args))),
            AxiomId::SimpleGrounding => unreachable!(),
            AxiomId::NEG => {
                let positive: Vec<ArgSet> = p.pos.subsets().collect();
                positive.iter().find_map(|&a| {
                    let below: Vec<ArgSet> = positive
                        .iter()
                        .copied()
                        .filter(|&b| r.strict(a, b))
                        .collect();
                    below
                        .iter()
                        .find_map(|&b| below.iter().find_map(|&c| hit(Instance::sets(&[a, b, c]))))
                })
            }
            AxiomId::CLO => {
                let positive: Vec<ArgSet> = p.pos.subsets().collect();
                let first = positive.iter().find_map(|&a| {
                    let same: Vec<ArgSet> = positive
                        .iter()
                        .copied()
                        .filter(|&b| r.indifferent(a, b))
                        .collect();
                    same.iter()
                        .find_map(|&b| same.iter().find_map(|&c| hit(Instance::sets(&[a, b, c]))))
                });
                first.or_else(|| {
                    pairs(&positive)
                        .find_map(|(b, c)| hit(Instance::sets(&[ArgSet::EMPTY, b, c]).part(1)))
                })
            }
            AxiomId::GNEG | AxiomId::GCLO => {
                let related: Vec<(ArgSet, ArgSet)> = if axiom == AxiomId::GNEG {
                    pairs(&profiles).filter(|&(a, b)| r.strict(a, b)).collect()
                } else {
                    pairs(&profiles).filter(|&(a, b)| r.weak(a, b)).collect()
                };
                related.iter().find_map(|&(a, b)| {
                    related
                        .iter()
                        .find_map(|&(c, d)| hit(Instance::sets(&[a, b, c, d])))
                })
            }
            AxiomId::PrefIndependence => pairs(&profiles).find_map(|(a, b)| {
                p.all
                    .difference(a.union(b))
                    .subsets()
                    .skip(1)
                    .find_map(|c| hit(Instance::sets(&[a, b, c])))
            }),
            AxiomId::Anonymity => pairs(&profiles)
                .filter(|&(c, d)| c != d && r.indifferent(c, d))
                .find_map(|(c, d)| {
                    p.all.difference(c.union(d)).subsets().find_map(|a| {
                        profiles.iter().find_map(|&b| {
                            (0..2).find_map(|part| hit(Instance::sets(&[a, b, c, d]).part(part)))
                        })
                    })
                }),
            AxiomId::AddNullSet => profiles
                .iter()
                .filter(|&&c| !c.is_empty() && r.indifferent(c, ArgSet::EMPTY))
                .find_map(|&c| {
                    p.all.difference(c).subsets().find_map(|a| {
                        profiles.iter().find_map(|&b| {
                            (0..2).find_map(|part| hit(Instance::sets(&[a, b, c]).part(part)))
                        })
                    })
                }),
            AxiomId::ExchangeEquivalentSets => pairs(&profiles)
                .filter(|&(c, d)| r.indifferent(c, d))
                .find_map(|(c, d)| {
                    let rest: Vec<ArgSet> = p.all.difference(c.union(d)).subsets().collect();
                    let found = pairs(&rest).find_map(|(a, b)| hit(Instance::sets(&[a, b, c, d])));
                    found
                }),
            AxiomId::ExchangeEquivalentSingletons => (0..n).find_map(|x| {
                (0..n)
                    .filter(|&y| r.indifferent(one(x), one(y)))
                    .find_map(|y| {
                        pairs(&profiles)
                            .find_map(|(a, b)| hit(Instance::sets(&[a, b]).with_args(&[x, y])))
                    })
            }),
            AxiomId::UnbiasedGround => {
                let ground: Vec<ArgSet> = (0..n).map(one).chain([ArgSet::EMPTY]).collect();
                let found = pairs(&ground).find_map(|(a, b)| hit(Instance::sets(&[a, b])));
                found
            }
        };
    found.map(|instance| Witness { axiom, instance })
}

fn pairs(items: &[ArgSet]) -> impl Iterator<Item = (ArgSet, ArgSet)> + '_ {
    items
        .iter()
        .flat_map(move |&a| items.iter().map(move |&b| (a, b)))
}

/// Triples `(a, b, c)` with `rel(a, b)` and `rel(b, c)`.
fn chains<'a, F>(items: &'a [ArgSet], rel: F) -> impl Iterator<Item = (ArgSet, ArgSet, ArgSet)> + 'a
where
    F: Fn(ArgSet, ArgSet) -> bool + Copy + 'a,
{
    items.iter().flat_map(move |&a| {
        items
            .iter()
            .filter(move |&&b| rel(a, b))
            .flat_map(move |&b| {
                items
                    .iter()
                    .filter(move |&&c| rel(b, c))
                    .map(move |&c| (a, b, c))
            })
    })
}

/// `(x, z, y)` with `x, z` from `same` and `y` from `opposite`.
fn cancellation(same: ArgSet, opposite: ArgSet) -> impl Iterator<Item = [usize; 3]> {
    same.iter().flat_map(move |x| {
        same.iter()
            .flat_map(move |z| opposite.iter().map(move |y| [x, z, y]))
    })
}

/// Whether `needs_reference` axioms should get a BiPoss relation.
pub(crate) fn wants_reference(axiom: AxiomId) -> bool {
    axiom.needs_reference()
}
