//! Universe generation and profile enumeration for exhaustive sweeps.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{ArgSet, Argument, DecisionUniverse, ImportanceScale, Level, Polarity};

/// Enumeration limits: universes larger than these are refused rather than
/// swept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditBounds {
    /// For axioms quantifying over two profiles.
    pub pair_limit: usize,
    /// For axioms quantifying over three or four profiles.
    pub tuple_limit: usize,
}

impl Default for AuditBounds {
    fn default() -> Self {
        AuditBounds {
            pair_limit: 12,
            tuple_limit: 6,
        }
    }
}

/// Every subset of the universe, in increasing bitmask order starting at ∅.
pub fn enumerate_profiles(universe: &DecisionUniverse, bound: usize) -> Result<Vec<ArgSet>> {
    if universe.len() > bound {
        return Err(Error::UniverseTooLarge {
            size: universe.len(),
            bound,
        });
    }
    Ok(universe.all().subsets().collect())
}

/// Size limits for generated universes: up to `max_args` arguments over a
/// scale of `levels` elements (the null level included).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenerationBounds {
    pub max_args: usize,
    pub levels: usize,
}

impl GenerationBounds {
    pub fn universes(&self) -> impl Iterator<Item = DecisionUniverse> {
        generate_universes(self.max_args, self.levels)
    }
}

impl fmt::Display for GenerationBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|X|={},|L|={}", self.max_args, self.levels)
    }
}

/// Parses `|X|=5,|L|=3` (bars and spaces optional, either order).
impl FromStr for GenerationBounds {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidBounds(s.to_string());
        let (mut args, mut levels) = (None, None);
        for part in s.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let key: String = key.chars().filter(|c| c.is_ascii_alphabetic()).collect();
            let value: usize = value.trim().parse().map_err(|_| bad())?;
            match key.to_ascii_uppercase().as_str() {
                "X" => args = Some(value),
                "L" => levels = Some(value),
                _ => return Err(bad()),
            }
        }
        match (args, levels) {
            (Some(max_args), Some(levels)) if max_args >= 1 && levels >= 2 => {
                Ok(GenerationBounds { max_args, levels })
            }
            _ => Err(bad()),
        }
    }
}

/// Argument classes: 0 is null, then pro and con at each positive level.
fn class_argument(class: usize, levels: usize) -> (Polarity, Level) {
    if class == 0 {
        return (Polarity::Pro, Level::NULL);
    }
    let level = Level(((class - 1) % (levels - 1) + 1) as u16);
    let polarity = if class < levels {
        Polarity::Pro
    } else {
        Polarity::Con
    };
    (polarity, level)
}

fn build_universe(counts: &[usize], levels: usize) -> DecisionUniverse {
    let mut arguments = Vec::new();
    for (class, &count) in counts.iter().enumerate() {
        let (polarity, level) = class_argument(class, levels);
        for k in 0..count {
            let suffix = (b'a' + k as u8) as char;
            let name = match (class, polarity) {
                (0, _) => format!("z{suffix}"),
                (_, Polarity::Pro) => format!("p{}{suffix}", level.index()),
                (_, Polarity::Con) => format!("n{}{suffix}", level.index()),
            };
            arguments.push(Argument::new(name, polarity, level));
        }
    }
    DecisionUniverse::new_nontrivial(
        ImportanceScale::with_levels(levels).expect("at least two levels"),
        arguments,
    )
    .expect("generated universes are valid")
}

/// All non-trivial universes with 1 to `max_args` arguments over a scale of
/// `levels` elements, one per assignment up to renaming. Smaller universes
/// come first; the order is fixed.
pub fn generate_universes(
    max_args: usize,
    levels: usize,
) -> impl Iterator<Item = DecisionUniverse> {
    assert!(levels >= 2, "a scale needs a null level and one more");
    assert!(max_args <= 26, "argument names use one letter per class");
    let classes = 2 * (levels - 1) + 1;
    (1..=max_args).flat_map(move |size| {
        let mut all = Vec::new();
        let mut counts = vec![0usize; classes];
        compositions(size, 0, &mut counts, &mut all);
        all.into_iter()
            .filter(move |c: &Vec<usize>| c[0] < size)
            .map(move |c| build_universe(&c, levels))
    })
}

/// Every way of splitting `remaining` among `counts[class..]`, last class
/// varying fastest.
fn compositions(
    remaining: usize,
    class: usize,
    counts: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if class == counts.len() - 1 {
        counts[class] = remaining;
        out.push(counts.clone());
        return;
    }
    for k in (0..=remaining).rev() {
        counts[class] = k;
        compositions(remaining - k, class + 1, counts, out);
    }
    counts[class] = 0;
}
