use crate::model::{ArgSet, DecisionUniverse, Outcome};
use crate::rules::{compare_sets, RuleId};

/// A set-relation queried through its four-valued outcome.
pub trait Relation: Sync {
    fn outcome(&self, a: ArgSet, b: ArgSet) -> Outcome;

    /// `a ⪰ b`
    fn weak(&self, a: ArgSet, b: ArgSet) -> bool {
        self.outcome(a, b).first_weakly_preferred()
    }

    /// `a ≻ b`
    fn strict(&self, a: ArgSet, b: ArgSet) -> bool {
        self.outcome(a, b) == Outcome::PreferFirst
    }

    /// `a ∼ b`
    fn indifferent(&self, a: ArgSet, b: ArgSet) -> bool {
        self.outcome(a, b) == Outcome::Indifferent
    }
}

/// Evaluates the rule on demand. Used to replay witnesses independently of
/// any precomputed table.
pub struct DirectRelation<'u> {
    pub rule: RuleId,
    pub universe: &'u DecisionUniverse,
}

impl Relation for DirectRelation<'_> {
    fn outcome(&self, a: ArgSet, b: ArgSet) -> Outcome {
        compare_sets(self.rule, self.universe, a, b)
    }
}

/// All pairwise outcomes of a rule over the powerset of a universe.
pub struct RelationTable {
    pub rule: RuleId,
    width: usize,
    outcomes: Vec<Outcome>,
}

impl RelationTable {
    pub fn build(rule: RuleId, universe: &DecisionUniverse) -> RelationTable {
        let width = 1usize << universe.len();
        let mut outcomes = vec![Outcome::Indifferent; width * width];
        for a in 0..width {
            for b in 0..width {
                outcomes[a * width + b] =
                    compare_sets(rule, universe, ArgSet(a as u64), ArgSet(b as u64));
            }
        }
        RelationTable {
            rule,
            width,
            outcomes,
        }
    }

    /// Number of profiles (`2^|X|`).
    pub fn width(&self) -> usize {
        self.width
    }
}

impl Relation for RelationTable {
    #[inline]
    fn outcome(&self, a: ArgSet, b: ArgSet) -> Outcome {
        self.outcomes[a.0 as usize * self.width + b.0 as usize]
    }
}
