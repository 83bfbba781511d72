//! Big-stepped capacities and the net predisposition score.
//!
//! A level at index `i >= 1` weighs `base^i`; the null level weighs nothing.
//! With `base = 2|X| + 1` the capacity of a set is the base-`base` numeral
//! whose digits are its per-level counts, so comparing sums compares the
//! count vectors lexicographically from the top level down.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{ArgSet, DecisionUniverse, Level, OptionProfile, Outcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigSteppedCapacity {
    base: BigUint,
    /// `weights[i]` is the weight of one argument at level index `i`.
    weights: Vec<BigUint>,
}

impl BigSteppedCapacity {
    /// Capacity with base `2|X| + 1`.
    pub fn new(universe: &DecisionUniverse) -> Self {
        Self::with_base(universe, BigUint::from(2 * universe.len() as u64 + 1))
    }

    /// Level `i >= 1` weighs `base^i`.
    pub fn with_base(universe: &DecisionUniverse, base: BigUint) -> Self {
        Self::with_exponent_offset(universe, base, 0)
    }

    /// Level `i >= 1` weighs `base^(i + offset)`.
    pub fn with_exponent_offset(universe: &DecisionUniverse, base: BigUint, offset: u32) -> Self {
        let levels = universe.scale().len();
        let mut weights = Vec::with_capacity(levels);
        weights.push(BigUint::zero());
        let mut w = base.pow(offset + 1);
        for _ in 1..levels {
            weights.push(w.clone());
            w *= &base;
        }
        BigSteppedCapacity { base, weights }
    }

    /// Base `|X|` with the lowest scale element (the null level) counted as
    /// the first exponent, so level index `i` weighs `|X|^(i+1)`.
    pub fn unit_base(universe: &DecisionUniverse) -> Self {
        Self::with_exponent_offset(universe, BigUint::from(universe.len() as u64), 1)
    }

    pub fn base(&self) -> &BigUint {
        &self.base
    }

    pub fn weight(&self, level: Level) -> &BigUint {
        &self.weights[level.index()]
    }

    /// Sum of level weights over a single-polarity subset.
    pub fn evaluate(&self, universe: &DecisionUniverse, set: ArgSet) -> Result<BigUint> {
        if !set.intersection(universe.positives()).is_empty()
            && !set.intersection(universe.negatives()).is_empty()
        {
            return Err(Error::MixedPolarity);
        }
        Ok(self.sum(universe, set))
    }

    fn sum(&self, universe: &DecisionUniverse, set: ArgSet) -> BigUint {
        set.iter()
            .map(|i| self.weight(universe.importance(i)))
            .sum()
    }

    /// σ⁺(A⁺) − σ⁻(A⁻).
    pub fn net_predisposition(&self, universe: &DecisionUniverse, set: ArgSet) -> BigInt {
        let pros = self.sum(universe, set.intersection(universe.positives()));
        let cons = self.sum(universe, set.intersection(universe.negatives()));
        BigInt::from(pros) - BigInt::from(cons)
    }

    /// The sum with every level below `level` dropped. Exact only when
    /// per-level counts stay below the base.
    fn truncated(&self, value: &BigUint, level: Level) -> BigUint {
        value / self.weight(level)
    }
}

/// σ over a single-polarity subset with the default base `2|X| + 1`.
pub fn sigma(universe: &DecisionUniverse, set: ArgSet) -> Result<BigUint> {
    BigSteppedCapacity::new(universe).evaluate(universe, set)
}

/// Net predisposition of an option under the default capacity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct NetPredisposition(pub BigInt);

pub fn net_predisposition(option: &OptionProfile<'_>) -> NetPredisposition {
    let universe = option.universe();
    NetPredisposition(
        BigSteppedCapacity::new(universe).net_predisposition(universe, option.members()),
    )
}

pub fn compare_np(a: &OptionProfile<'_>, b: &OptionProfile<'_>) -> Result<Outcome> {
    if !a.universe().same_as(b.universe()) {
        return Err(Error::UniverseMismatch);
    }
    Ok(compare_np_sets(a.universe(), a.members(), b.members()))
}

pub fn compare_np_sets(universe: &DecisionUniverse, a: ArgSet, b: ArgSet) -> Outcome {
    let cap = BigSteppedCapacity::new(universe);
    Outcome::from_ordering(
        cap.net_predisposition(universe, a)
            .cmp(&cap.net_predisposition(universe, b)),
    )
}

pub fn compare_bilexi_np(a: &OptionProfile<'_>, b: &OptionProfile<'_>) -> Result<Outcome> {
    if !a.universe().same_as(b.universe()) {
        return Err(Error::UniverseMismatch);
    }
    Ok(compare_bilexi_np_sets(
        a.universe(),
        a.members(),
        b.members(),
    ))
}

/// Two-sided capacity comparison: drop levels from the bottom until the
/// positive or the negative capacities of the two sets stop agreeing, then
/// require the first set to be no worse on both sides.
pub fn compare_bilexi_np_sets(universe: &DecisionUniverse, a: ArgSet, b: ArgSet) -> Outcome {
    let cap = BigSteppedCapacity::new(universe);
    let side = |s: ArgSet, mask: ArgSet| cap.sum(universe, s.intersection(mask));
    let (pa, pb) = (side(a, universe.positives()), side(b, universe.positives()));
    let (na, nb) = (side(a, universe.negatives()), side(b, universe.negatives()));
    if pa == pb && na == nb {
        return Outcome::Indifferent;
    }
    for level in universe.scale().positive_levels_desc() {
        let (tpa, tpb) = (cap.truncated(&pa, level), cap.truncated(&pb, level));
        let (tna, tnb) = (cap.truncated(&na, level), cap.truncated(&nb, level));
        if tpa != tpb || tna != tnb {
            return Outcome::from_weak(tpa >= tpb && tna <= tnb, tpb >= tpa && tnb <= tna);
        }
    }
    Outcome::Indifferent
}

/// Capacities of one option for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapacityRow {
    pub option: String,
    #[serde(serialize_with = "as_decimal")]
    pub sigma_pos: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub sigma_neg: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub net_predisposition: BigInt,
}

fn as_decimal<T: std::fmt::Display, S: serde::Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

pub fn capacity_row(name: &str, option: &OptionProfile<'_>) -> CapacityRow {
    let universe = option.universe();
    let cap = BigSteppedCapacity::new(universe);
    let sigma_pos = cap.sum(universe, option.pros());
    let sigma_neg = cap.sum(universe, option.cons());
    CapacityRow {
        option: name.to_string(),
        net_predisposition: BigInt::from(sigma_pos.clone()) - BigInt::from(sigma_neg.clone()),
        sigma_pos,
        sigma_neg,
    }
}

/// Checks `|d|·B^i > Σ_{j<i} 2|X|·B^j` for every level `i` and `|d| >= 1`.
pub fn is_strictly_big_stepped(cap: &BigSteppedCapacity, universe: &DecisionUniverse) -> bool {
    let bound = BigUint::from(2 * universe.len() as u64);
    let mut lower = BigUint::zero();
    for level in 1..universe.scale().len() {
        let w = cap.weight(Level(level as u16));
        if *w <= lower {
            return false;
        }
        lower += &bound * w;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audit::generate_universes;
    use crate::fixtures;
    use crate::rules::{compare_sets, RuleId};

    #[test]
    fn sigma_of_luc_sides() {
        let u = fixtures::luc();
        assert_eq!(sigma(&u, ArgSet::EMPTY), Ok(BigUint::zero()));
        let b_pros = u.set_of(&["tennis⁺", "pool⁺", "disco⁺"]).unwrap();
        assert_eq!(sigma(&u, b_pros), Ok(BigUint::from(45u32)));
        let a_cons = u.set_of(&["airline⁻⁻", "price⁻⁻"]).unwrap();
        assert_eq!(sigma(&u, a_cons), Ok(BigUint::from(450u32)));
        let mixed = u.set_of(&["tennis⁺", "price⁻⁻"]).unwrap();
        assert_eq!(sigma(&u, mixed), Err(Error::MixedPolarity));
    }

    #[test]
    fn np_of_luc_options() {
        let p = fixtures::luc_problem();
        let (a, b) = (p.option("a").unwrap(), p.option("b").unwrap());
        assert_eq!(net_predisposition(&a).0, BigInt::from(-225));
        assert_eq!(net_predisposition(&b).0, BigInt::from(-180));
        assert_eq!(compare_np(&a, &b), Ok(Outcome::PreferSecond));
        assert_eq!(compare_np(&a, &a), Ok(Outcome::Indifferent));
        assert_eq!(compare_bilexi_np(&a, &b), Ok(Outcome::Incomparable));
        assert_eq!(compare_bilexi_np(&b, &b), Ok(Outcome::Indifferent));
    }

    #[test]
    fn np_of_empty_is_zero() {
        let u = fixtures::luka();
        let empty = OptionProfile::empty(&u);
        assert_eq!(net_predisposition(&empty).0, BigInt::zero());
    }

    #[test]
    fn default_capacity_is_strictly_big_stepped() {
        for u in generate_universes(4, 5) {
            assert!(is_strictly_big_stepped(&BigSteppedCapacity::new(&u), &u));
        }
    }

    #[test]
    fn capacities_are_monotone_and_zero_at_empty() {
        for u in generate_universes(4, 3) {
            let cap = BigSteppedCapacity::new(&u);
            for side in [u.positives(), u.negatives()] {
                assert!(cap.evaluate(&u, ArgSet::EMPTY).unwrap().is_zero());
                for a in side.subsets() {
                    for b in a.subsets() {
                        assert!(cap.evaluate(&u, b).unwrap() <= cap.evaluate(&u, a).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn capacity_comparisons_match_lexicographic_rules() {
        for u in generate_universes(4, 4) {
            for a in u.all().subsets() {
                for b in u.all().subsets() {
                    assert_eq!(
                        compare_np_sets(&u, a, b),
                        compare_sets(RuleId::Lexi, &u, a, b)
                    );
                    assert_eq!(
                        compare_bilexi_np_sets(&u, a, b),
                        compare_sets(RuleId::BiLexi, &u, a, b)
                    );
                }
            }
        }
    }
}
