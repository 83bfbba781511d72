//! Take-the-Best on linearly ranked binary cues.
//!
//! Every cue carries a distinct importance. An option that does not feature a
//! cue receives its polar opposite at the same importance, so every cue is
//! present in every option with one polarity or the other. The heuristic then
//! scans cues from the most important down and stops at the first cue on which
//! the two options disagree.

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::model::{
    ArgSet, Argument, DecisionUniverse, Level, OptionProfile, Outcome, Polarity, NEGATIVE_SUFFIX,
    POSITIVE_SUFFIX,
};
use crate::problem::Problem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cue {
    pub name: String,
    pub level: Level,
    /// Polarity the cue has where it is featured.
    pub polarity: Polarity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TtbInstance {
    /// Cues by strictly decreasing importance.
    pub cues: Vec<Cue>,
    /// Two arguments per cue: the featured side and its opposite.
    pub universe: DecisionUniverse,
    pub options: IndexMap<String, ArgSet>,
    /// Per option, the polarity each cue takes in it (same order as `cues`).
    pub values: IndexMap<String, Vec<Polarity>>,
}

impl TtbInstance {
    pub fn profile(&self, option: &str) -> Result<OptionProfile<'_>> {
        let members = self
            .options
            .get(option)
            .ok_or_else(|| Error::UnknownOption(option.to_string()))?;
        OptionProfile::new(&self.universe, *members)
    }
}

/// Completes a problem whose featured arguments have pairwise distinct
/// importance. Arguments featured by no option, and null-importance ones,
/// take no part.
pub fn complete_polar_opposites(problem: &Problem) -> Result<TtbInstance> {
    let universe = &problem.universe;
    let featured = problem
        .options
        .values()
        .fold(ArgSet::EMPTY, |acc, s| acc.union(*s));
    let mut cue_args: Vec<usize> = featured
        .iter()
        .filter(|&i| !universe.importance(i).is_null())
        .collect();
    cue_args.sort_by_key(|&i| std::cmp::Reverse(universe.importance(i)));
    for pair in cue_args.windows(2) {
        if universe.importance(pair[0]) == universe.importance(pair[1]) {
            return Err(Error::NonInjectiveImportance {
                first: universe.argument(pair[0]).name.clone(),
                second: universe.argument(pair[1]).name.clone(),
            });
        }
    }

    let cues: Vec<Cue> = cue_args
        .iter()
        .map(|&i| {
            let arg = universe.argument(i);
            Cue {
                name: arg.name.clone(),
                level: arg.level,
                polarity: arg.polarity,
            }
        })
        .collect();

    // cue k occupies positions 2k (featured side) and 2k+1 (opposite side)
    let mut arguments = Vec::with_capacity(cues.len() * 2);
    for cue in &cues {
        let opposite = match cue.polarity {
            Polarity::Pro => format!("{}{NEGATIVE_SUFFIX}", cue.name),
            Polarity::Con => format!("{}{POSITIVE_SUFFIX}", cue.name),
        };
        arguments.push(Argument::new(&cue.name, cue.polarity, cue.level));
        arguments.push(Argument::new(opposite, cue.polarity.opposite(), cue.level));
    }
    let completed = DecisionUniverse::new(universe.scale().clone(), arguments)?;

    let mut options = IndexMap::new();
    let mut values = IndexMap::new();
    for (name, members) in &problem.options {
        let mut set = ArgSet::EMPTY;
        let mut vals = Vec::with_capacity(cues.len());
        for (k, &arg) in cue_args.iter().enumerate() {
            let cue = &cues[k];
            if members.contains(arg) {
                set = set.with(2 * k);
                vals.push(cue.polarity);
            } else {
                set = set.with(2 * k + 1);
                vals.push(cue.polarity.opposite());
            }
        }
        options.insert(name.clone(), set);
        values.insert(name.clone(), vals);
    }

    Ok(TtbInstance {
        cues,
        universe: completed,
        options,
        values,
    })
}

/// Take-the-Best: the first discriminating cue decides for the option holding
/// its pro side.
pub fn ttb_compare(instance: &TtbInstance, a: &str, b: &str) -> Result<Outcome> {
    let va = instance
        .values
        .get(a)
        .ok_or_else(|| Error::UnknownOption(a.to_string()))?;
    let vb = instance
        .values
        .get(b)
        .ok_or_else(|| Error::UnknownOption(b.to_string()))?;
    Ok(va
        .iter()
        .zip(vb)
        .find(|(x, y)| x != y)
        .map(|(x, _)| match x {
            Polarity::Pro => Outcome::PreferFirst,
            Polarity::Con => Outcome::PreferSecond,
        })
        .unwrap_or(Outcome::Indifferent))
}
