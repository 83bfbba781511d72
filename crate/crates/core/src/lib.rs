//! Comparing options described by pros and cons of ranked importance.
//!
//! Arguments carry a polarity (pro or con) and a level on an ordinal
//! importance scale whose bottom element marks arguments that do not matter.
//! An option is a set of arguments. Six rules compare two options, ranging
//! from a cautious Pareto test to a fully decisive lexicographic count:
//!
//! | rule   | compares                                                     |
//! |--------|--------------------------------------------------------------|
//! | Pareto | strongest pro and strongest con separately                   |
//! | BiPoss | strongest argument for each option against the other's worst |
//! | Impl   | who holds the strongest arguments of the union               |
//! | Discri | BiPoss after removing shared arguments                       |
//! | BiLexi | pro and con counts level by level, top down                  |
//! | Lexi   | net pro-minus-con count level by level, top down             |
//!
//! ```
//! use bipolar_choice::{fixtures, rules::{compare, RuleId}, Outcome};
//!
//! let problem = fixtures::luc_problem();
//! let (a, b) = (problem.option("a")?, problem.option("b")?);
//! assert_eq!(compare(RuleId::BiPoss, &a, &b)?, Outcome::Indifferent);
//! assert_eq!(compare(RuleId::Lexi, &a, &b)?, Outcome::PreferSecond);
//! # Ok::<(), bipolar_choice::Error>(())
//! ```
//!
//! The [`audit`] module checks rules against axioms by exhaustive enumeration,
//! [`encodings`] holds the capacity and Take-the-Best views of the
//! lexicographic rules, and [`cli`] backs the `bipolar` binary.

pub mod audit;
pub mod cli;
pub mod encodings;
pub mod error;
pub mod fixtures;
pub mod model;
pub mod problem;
pub mod rules;

pub use error::{Error, Result};
pub use model::{
    ArgSet, Argument, DecisionUniverse, ImportanceScale, Level, OptionProfile, Outcome, Polarity,
};
pub use problem::Problem;
pub use rules::{compare, RuleId};
