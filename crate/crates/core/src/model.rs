//! Domain model: the ordinal importance scale, arguments and their polarity,
//! the universe of arguments, option profiles, and the four-valued outcome of
//! a pairwise comparison.
//!
//! Arguments of a universe are addressed by their position, and subsets of a
//! universe are bitsets ([`ArgSet`]), so a universe holds at most
//! [`MAX_ARGUMENTS`] arguments.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ARGUMENTS: usize = 64;

/// Position on an [`ImportanceScale`]. Index 0 is the null level.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct Level(pub u16);

impl Level {
    pub const NULL: Level = Level(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_null(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.0)
    }
}

/// Finite, totally ordered scale of importance levels, listed bottom to top.
/// Labels are opaque; only the index order matters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ImportanceScale {
    labels: Vec<String>,
}

impl ImportanceScale {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() < 2 {
            return Err(Error::ScaleTooShort(labels.len()));
        }
        if labels.len() > u16::MAX as usize {
            return Err(Error::LevelOutOfRange(labels.len()));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLevelLabel(label.clone()));
            }
        }
        Ok(ImportanceScale { labels })
    }

    /// Scale with `len` levels labelled `0`, `1`, ... (used by generators).
    pub fn with_levels(len: usize) -> Result<Self> {
        Self::new((0..len).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn bottom(&self) -> Level {
        Level::NULL
    }

    pub fn top(&self) -> Level {
        Level((self.labels.len() - 1) as u16)
    }

    pub fn contains(&self, level: Level) -> bool {
        level.index() < self.labels.len()
    }

    pub fn label(&self, level: Level) -> &str {
        &self.labels[level.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn level_of(&self, label: &str) -> Option<Level> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| Level(i as u16))
    }

    /// Levels strictly above the null level, from the top down.
    pub fn positive_levels_desc(&self) -> impl Iterator<Item = Level> {
        (1..self.labels.len() as u16).rev().map(Level)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Pro,
    Con,
}

impl Polarity {
    pub fn opposite(self) -> Polarity {
        match self {
            Polarity::Pro => Polarity::Con,
            Polarity::Con => Polarity::Pro,
        }
    }
}

/// Polarity as declared in a problem file, before `Both` is split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeclaredPolarity {
    Pro,
    Con,
    Both,
}

/// Effective class of an argument: a null-importance argument is inert
/// whatever its declared polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
    Null,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Argument {
    pub name: String,
    pub polarity: Polarity,
    pub level: Level,
}

impl Argument {
    pub fn new(name: impl Into<String>, polarity: Polarity, level: Level) -> Self {
        Argument {
            name: name.into(),
            polarity,
            level,
        }
    }

    pub fn pro(name: impl Into<String>, level: u16) -> Self {
        Self::new(name, Polarity::Pro, Level(level))
    }

    pub fn con(name: impl Into<String>, level: u16) -> Self {
        Self::new(name, Polarity::Con, Level(level))
    }

    pub fn sign(&self) -> Sign {
        match (self.level.is_null(), self.polarity) {
            (true, _) => Sign::Null,
            (false, Polarity::Pro) => Sign::Positive,
            (false, Polarity::Con) => Sign::Negative,
        }
    }
}

pub const POSITIVE_SUFFIX: &str = "+pos";
pub const NEGATIVE_SUFFIX: &str = "+neg";

/// Argument declaration as it appears in a problem file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentSpec {
    pub name: String,
    pub polarity: DeclaredPolarity,
    pub level: Level,
}

/// Splits a two-sided argument into a pro and a con of equal importance.
/// One-sided declarations pass through unchanged.
pub fn duplicate_both_polarity(spec: &ArgumentSpec) -> Vec<Argument> {
    match spec.polarity {
        DeclaredPolarity::Pro => vec![Argument::new(&spec.name, Polarity::Pro, spec.level)],
        DeclaredPolarity::Con => vec![Argument::new(&spec.name, Polarity::Con, spec.level)],
        DeclaredPolarity::Both => vec![
            Argument::new(
                format!("{}{POSITIVE_SUFFIX}", spec.name),
                Polarity::Pro,
                spec.level,
            ),
            Argument::new(
                format!("{}{NEGATIVE_SUFFIX}", spec.name),
                Polarity::Con,
                spec.level,
            ),
        ],
    }
}

/// Subset of a universe's arguments, one bit per argument position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ArgSet(pub u64);

impl ArgSet {
    pub const EMPTY: ArgSet = ArgSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> ArgSet {
        if n >= 64 {
            ArgSet(u64::MAX)
        } else {
            ArgSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(index: usize) -> ArgSet {
        ArgSet(1u64 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> ArgSet {
        indices
            .into_iter()
            .fold(ArgSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn with(self, index: usize) -> ArgSet {
        ArgSet(self.0 | (1u64 << index))
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 & (1u64 << index) != 0
    }

    pub fn union(self, other: ArgSet) -> ArgSet {
        ArgSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ArgSet) -> ArgSet {
        ArgSet(self.0 & other.0)
    }

    pub fn difference(self, other: ArgSet) -> ArgSet {
        ArgSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ArgSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ArgSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, starting from the empty set.
    pub fn subsets(self) -> impl Iterator<Item = ArgSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == mask {
                None
            } else {
                Some((current.wrapping_sub(mask)) & mask)
            };
            Some(ArgSet(current))
        })
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateName(String),
    TrivialUniverse,
    LevelOutOfRange { argument: String, level: Level },
    TooManyArguments(usize),
}

impl Violation {
    pub fn to_error(&self) -> Error {
        match self {
            Violation::DuplicateName(name) => Error::DuplicateName(name.clone()),
            Violation::TrivialUniverse => Error::TrivialUniverse,
            Violation::LevelOutOfRange { level, .. } => Error::LevelOutOfRange(level.index()),
            Violation::TooManyArguments(got) => Error::TooManyArguments {
                max: MAX_ARGUMENTS,
                got: *got,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Only triviality was found: the arguments still form a usable universe.
    pub fn is_only_trivial(&self) -> bool {
        self.violations == [Violation::TrivialUniverse]
    }

    pub fn into_result(self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(v.to_error()),
        }
    }
}

/// Checks uniqueness of names, level bounds, size, and non-triviality.
pub fn validate_universe(scale: &ImportanceScale, arguments: &[Argument]) -> ValidationReport {
    let mut violations = Vec::new();
    if arguments.len() > MAX_ARGUMENTS {
        violations.push(Violation::TooManyArguments(arguments.len()));
    }
    let mut seen = HashSet::new();
    for arg in arguments {
        if !seen.insert(arg.name.as_str()) {
            violations.push(Violation::DuplicateName(arg.name.clone()));
        }
        if !scale.contains(arg.level) {
            violations.push(Violation::LevelOutOfRange {
                argument: arg.name.clone(),
                level: arg.level,
            });
        }
    }
    if arguments.iter().all(|a| a.level.is_null()) {
        violations.push(Violation::TrivialUniverse);
    }
    ValidationReport { violations }
}

/// The argument set X with its pro/con/null partition and importance map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionUniverse {
    scale: ImportanceScale,
    arguments: Vec<Argument>,
    by_name: HashMap<String, usize>,
    positives: ArgSet,
    negatives: ArgSet,
    pos_by_level: Vec<ArgSet>,
    neg_by_level: Vec<ArgSet>,
}

impl DecisionUniverse {
    /// Builds a universe. Structural violations are errors; a trivial universe
    /// is accepted here and rejected by [`DecisionUniverse::new_nontrivial`].
    pub fn new(scale: ImportanceScale, arguments: Vec<Argument>) -> Result<Self> {
        let report = validate_universe(&scale, &arguments);
        if let Some(v) = report
            .violations
            .iter()
            .find(|v| **v != Violation::TrivialUniverse)
        {
            return Err(v.to_error());
        }
        let mut pos_by_level = vec![ArgSet::EMPTY; scale.len()];
        let mut neg_by_level = vec![ArgSet::EMPTY; scale.len()];
        let mut positives = ArgSet::EMPTY;
        let mut negatives = ArgSet::EMPTY;
        for (i, arg) in arguments.iter().enumerate() {
            match arg.sign() {
                Sign::Positive => {
                    positives = positives.with(i);
                    pos_by_level[arg.level.index()] = pos_by_level[arg.level.index()].with(i);
                }
                Sign::Negative => {
                    negatives = negatives.with(i);
                    neg_by_level[arg.level.index()] = neg_by_level[arg.level.index()].with(i);
                }
                Sign::Null => {}
            }
        }
        let by_name = arguments
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.clone(), i))
            .collect();
        Ok(DecisionUniverse {
            scale,
            arguments,
            by_name,
            positives,
            negatives,
            pos_by_level,
            neg_by_level,
        })
    }

    pub fn new_nontrivial(scale: ImportanceScale, arguments: Vec<Argument>) -> Result<Self> {
        validate_universe(&scale, &arguments).into_result()?;
        Self::new(scale, arguments)
    }

    pub fn validate(&self) -> ValidationReport {
        validate_universe(&self.scale, &self.arguments)
    }

    pub fn is_trivial(&self) -> bool {
        self.positives.union(self.negatives).is_empty()
    }

    pub fn scale(&self) -> &ImportanceScale {
        &self.scale
    }

    pub fn arguments(&self) -> &[Argument] {
        &self.arguments
    }

    pub fn argument(&self, index: usize) -> &Argument {
        &self.arguments[index]
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn all(&self) -> ArgSet {
        ArgSet::full(self.arguments.len())
    }

    /// X⁺: arguments with pro polarity and non-null importance.
    pub fn positives(&self) -> ArgSet {
        self.positives
    }

    /// X⁻: arguments with con polarity and non-null importance.
    pub fn negatives(&self) -> ArgSet {
        self.negatives
    }

    /// X⁰: null-importance arguments.
    pub fn nulls(&self) -> ArgSet {
        self.all().difference(self.positives.union(self.negatives))
    }

    pub fn importance(&self, index: usize) -> Level {
        self.arguments[index].level
    }

    pub fn sign(&self, index: usize) -> Sign {
        self.arguments[index].sign()
    }

    /// Order of magnitude of a set: its highest importance, null for ∅.
    pub fn om(&self, set: ArgSet) -> Level {
        set.iter()
            .map(|i| self.arguments[i].level)
            .max()
            .unwrap_or(Level::NULL)
    }

    /// Number of pros of `set` at exactly `level`.
    pub fn pro_count(&self, set: ArgSet, level: Level) -> usize {
        set.intersection(self.pos_by_level[level.index()]).len()
    }

    /// Number of cons of `set` at exactly `level`.
    pub fn con_count(&self, set: ArgSet, level: Level) -> usize {
        set.intersection(self.neg_by_level[level.index()]).len()
    }

    pub fn section(&self, set: ArgSet, level: Level) -> Section {
        let all = ArgSet::from_indices(set.iter().filter(|&i| self.arguments[i].level == level));
        Section {
            level,
            all,
            pros: all.intersection(self.positives),
            cons: all.intersection(self.negatives),
        }
    }

    pub fn names(&self, set: ArgSet) -> Vec<&str> {
        set.iter()
            .map(|i| self.arguments[i].name.as_str())
            .collect()
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ArgSet> {
        let mut set = ArgSet::EMPTY;
        for name in names {
            let idx = self
                .index_of(name.as_ref())
                .ok_or_else(|| Error::UnknownArgument {
                    option: String::new(),
                    argument: name.as_ref().to_string(),
                })?;
            set = set.with(idx);
        }
        Ok(set)
    }

    /// `{a, b, c}` rendering of a subset.
    pub fn display_set(&self, set: ArgSet) -> String {
        format!("{{{}}}", self.names(set).join(", "))
    }

    /// Same universe, or an identical copy of it.
    pub fn same_as(&self, other: &DecisionUniverse) -> bool {
        std::ptr::eq(self, other) || self == other
    }
}

/// Members of an option at exactly one importance level, split by polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Section {
    pub level: Level,
    pub all: ArgSet,
    pub pros: ArgSet,
    pub cons: ArgSet,
}

/// A subset of a universe describing one option.
#[derive(Debug, Clone, Copy)]
pub struct OptionProfile<'u> {
    universe: &'u DecisionUniverse,
    members: ArgSet,
}

impl<'u> OptionProfile<'u> {
    pub fn new(universe: &'u DecisionUniverse, members: ArgSet) -> Result<Self> {
        if !members.is_subset(universe.all()) {
            return Err(Error::UnknownArgument {
                option: String::new(),
                argument: format!(
                    "#{}",
                    members
                        .difference(universe.all())
                        .iter()
                        .next()
                        .unwrap_or(0)
                ),
            });
        }
        Ok(OptionProfile { universe, members })
    }

    pub fn empty(universe: &'u DecisionUniverse) -> Self {
        OptionProfile {
            universe,
            members: ArgSet::EMPTY,
        }
    }

    pub fn from_names<S: AsRef<str>>(universe: &'u DecisionUniverse, names: &[S]) -> Result<Self> {
        let mut members = ArgSet::EMPTY;
        for name in names {
            let name = name.as_ref();
            let idx = universe
                .index_of(name)
                .ok_or_else(|| Error::UnknownArgument {
                    option: String::new(),
                    argument: name.to_string(),
                })?;
            if members.contains(idx) {
                return Err(Error::RepeatedMember {
                    option: String::new(),
                    argument: name.to_string(),
                });
            }
            members = members.with(idx);
        }
        Ok(OptionProfile { universe, members })
    }

    pub fn universe(&self) -> &'u DecisionUniverse {
        self.universe
    }

    pub fn members(&self) -> ArgSet {
        self.members
    }

    pub fn pros(&self) -> ArgSet {
        self.members.intersection(self.universe.positives())
    }

    pub fn cons(&self) -> ArgSet {
        self.members.intersection(self.universe.negatives())
    }

    pub fn om(&self) -> Level {
        self.universe.om(self.members)
    }

    pub fn section(&self, level: Level) -> Section {
        self.universe.section(self.members, level)
    }
}

/// Order of magnitude of a subset: max importance, null level for ∅.
pub fn om(universe: &DecisionUniverse, subset: ArgSet) -> Level {
    universe.om(subset)
}

/// The λ-section of an option at `level`.
pub fn lambda_section(option: &OptionProfile<'_>, level: Level) -> Section {
    option.section(level)
}

/// Result of comparing a first option against a second one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    PreferFirst,
    PreferSecond,
    Indifferent,
    Incomparable,
}

impl Outcome {
    pub const ALL: [Outcome; 4] = [
        Outcome::PreferFirst,
        Outcome::PreferSecond,
        Outcome::Indifferent,
        Outcome::Incomparable,
    ];

    /// Combines the two directions of a weak preference `⪰`.
    pub fn from_weak(first_ge_second: bool, second_ge_first: bool) -> Outcome {
        match (first_ge_second, second_ge_first) {
            (true, true) => Outcome::Indifferent,
            (true, false) => Outcome::PreferFirst,
            (false, true) => Outcome::PreferSecond,
            (false, false) => Outcome::Incomparable,
        }
    }

    pub fn from_ordering(ord: std::cmp::Ordering) -> Outcome {
        match ord {
            std::cmp::Ordering::Greater => Outcome::PreferFirst,
            std::cmp::Ordering::Less => Outcome::PreferSecond,
            std::cmp::Ordering::Equal => Outcome::Indifferent,
        }
    }

    pub fn mirror(self) -> Outcome {
        match self {
            Outcome::PreferFirst => Outcome::PreferSecond,
            Outcome::PreferSecond => Outcome::PreferFirst,
            other => other,
        }
    }

    /// First ⪰ second.
    pub fn first_weakly_preferred(self) -> bool {
        matches!(self, Outcome::PreferFirst | Outcome::Indifferent)
    }

    pub fn is_strict(self) -> bool {
        matches!(self, Outcome::PreferFirst | Outcome::PreferSecond)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Outcome::PreferFirst => "≻",
            Outcome::PreferSecond => "≺",
            Outcome::Indifferent => "∼",
            Outcome::Incomparable => "≈",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Outcome::PreferFirst => "PreferFirst",
            Outcome::PreferSecond => "PreferSecond",
            Outcome::Indifferent => "Indifferent",
            Outcome::Incomparable => "Incomparable",
        };
        f.pad(name)
    }
}

/// ASCII form of an argument name for machine output: a trailing run of
/// superscript signs becomes `_` followed by `p`/`m` per sign.
pub fn ascii_name(name: &str) -> String {
    let trimmed = name.trim_end_matches(['⁺', '⁻']);
    let suffix: String = name[trimmed.len()..]
        .chars()
        .map(|c| if c == '⁺' { 'p' } else { 'm' })
        .collect();
    let base: String = trimmed
        .chars()
        .map(|c| match c {
            '⁺' => '+',
            '⁻' => '-',
            c => c,
        })
        .collect();
    if suffix.is_empty() {
        base
    } else {
        format!("{base}_{suffix}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn luc() -> DecisionUniverse {
        let scale = ImportanceScale::new(["zero", "beta", "lambda"]).unwrap();
        DecisionUniverse::new(
            scale,
            vec![
                Argument::pro("landscape", 2),
                Argument::pro("tennis", 1),
                Argument::pro("pool", 1),
                Argument::pro("disco", 1),
                Argument::con("price", 2),
                Argument::con("airline", 2),
                Argument::con("governance", 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn luc_universe_is_valid() {
        let u = luc();
        assert!(u.validate().is_valid());
        assert_eq!(u.len(), 7);
        assert_eq!(u.positives().len(), 4);
        assert_eq!(u.negatives().len(), 3);
    }

    #[test]
    fn trivial_universe_is_reported() {
        let scale = ImportanceScale::new(["zero", "one"]).unwrap();
        let args = vec![Argument::pro("x", 0), Argument::con("y", 0)];
        let report = validate_universe(&scale, &args);
        assert_eq!(report.violations, vec![Violation::TrivialUniverse]);
        assert_eq!(
            DecisionUniverse::new_nontrivial(scale.clone(), args.clone()),
            Err(Error::TrivialUniverse)
        );
        // still constructible for single comparisons
        assert!(DecisionUniverse::new(scale, args).unwrap().is_trivial());
    }

    #[test]
    fn duplicate_name_is_rejected() {
        let scale = ImportanceScale::new(["zero", "one"]).unwrap();
        let args = vec![Argument::pro("pool", 1), Argument::con("pool", 1)];
        assert_eq!(
            validate_universe(&scale, &args).violations,
            vec![Violation::DuplicateName("pool".into())]
        );
        assert_eq!(
            DecisionUniverse::new(scale, args),
            Err(Error::DuplicateName("pool".into()))
        );
    }

    #[test]
    fn scale_needs_two_distinct_levels() {
        assert_eq!(ImportanceScale::new(["zero"]), Err(Error::ScaleTooShort(1)));
        assert_eq!(
            ImportanceScale::new(["a", "a"]),
            Err(Error::DuplicateLevelLabel("a".into()))
        );
    }

    #[test]
    fn duplication_splits_both_only() {
        let both = ArgumentSpec {
            name: "chocolate".into(),
            polarity: DeclaredPolarity::Both,
            level: Level(2),
        };
        assert_eq!(
            duplicate_both_polarity(&both),
            vec![
                Argument::pro("chocolate+pos", 2),
                Argument::con("chocolate+neg", 2)
            ]
        );
        let pro = ArgumentSpec {
            name: "x".into(),
            polarity: DeclaredPolarity::Pro,
            level: Level(1),
        };
        assert_eq!(duplicate_both_polarity(&pro), vec![Argument::pro("x", 1)]);

        let null = ArgumentSpec {
            name: "y".into(),
            polarity: DeclaredPolarity::Both,
            level: Level::NULL,
        };
        let parts = duplicate_both_polarity(&null);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|a| a.sign() == Sign::Null));
    }

    #[test]
    fn om_of_luc_sides() {
        let u = luc();
        assert_eq!(u.om(ArgSet::EMPTY), Level::NULL);
        let a_cons = u.set_of(&["airline", "price"]).unwrap();
        assert_eq!(u.om(a_cons), Level(2));
        let b_pros = u.set_of(&["tennis", "pool", "disco"]).unwrap();
        assert_eq!(om(&u, b_pros), Level(1));
    }

    #[test]
    fn lambda_sections_of_luc_a() {
        let u = luc();
        let a = OptionProfile::from_names(&u, &["landscape", "airline", "price"]).unwrap();
        let top = lambda_section(&a, Level(2));
        assert_eq!(top.all, a.members());
        assert_eq!(top.pros, u.set_of(&["landscape"]).unwrap());
        assert_eq!(top.cons, u.set_of(&["airline", "price"]).unwrap());
        let low = lambda_section(&a, Level(1));
        assert!(low.all.is_empty() && low.pros.is_empty() && low.cons.is_empty());
    }

    #[test]
    fn null_section_holds_only_null_members() {
        let scale = ImportanceScale::new(["zero", "one"]).unwrap();
        let u = DecisionUniverse::new(
            scale,
            vec![
                Argument::pro("z", 0),
                Argument::pro("x", 1),
                Argument::con("y", 1),
            ],
        )
        .unwrap();
        let s = u.section(u.all(), Level::NULL);
        assert_eq!(s.all, ArgSet::singleton(0));
        assert!(s.pros.is_empty() && s.cons.is_empty());
    }

    #[test]
    fn repeated_member_is_rejected() {
        let u = luc();
        assert!(matches!(
            OptionProfile::from_names(&u, &["pool", "pool"]),
            Err(Error::RepeatedMember { .. })
        ));
    }

    #[test]
    fn subsets_enumerates_powerset() {
        let s = ArgSet::from_indices([1, 3, 4]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset(s)));
        assert_eq!(all[0], ArgSet::EMPTY);
        assert_eq!(ArgSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn ascii_names() {
        assert_eq!(ascii_name("landscape⁺⁺"), "landscape_pp");
        assert_eq!(ascii_name("price⁻⁻⁻"), "price_mmm");
        assert_eq!(ascii_name("plain"), "plain");
    }

    #[test]
    fn outcome_mirror_is_involutive() {
        for o in Outcome::ALL {
            assert_eq!(o.mirror().mirror(), o);
        }
    }
}
