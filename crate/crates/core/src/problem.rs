//! JSON problem documents: a scale, argument declarations, and named options.
//!
//! ```json
//! { "scale": ["zero", "beta", "lambda"],
//!   "arguments": [{"name": "pool", "polarity": "pro", "level": "beta"}],
//!   "options": {"a": ["pool"], "b": []} }
//! ```
//!
//! The scale is listed bottom to top. An argument declared with polarity
//! `both` becomes two arguments, `name+pos` and `name+neg`; an option may list
//! either half, or the bare name to take both.

use std::collections::HashMap;
use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    duplicate_both_polarity, ArgSet, ArgumentSpec, DecisionUniverse, DeclaredPolarity,
    ImportanceScale, OptionProfile, Polarity,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArgumentDecl {
    pub name: String,
    pub polarity: DeclaredPolarity,
    pub level: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub scale: Vec<String>,
    pub arguments: Vec<ArgumentDecl>,
    #[serde(default)]
    pub options: IndexMap<String, Vec<String>>,
}

/// A loaded problem: a universe plus named options over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub universe: DecisionUniverse,
    pub options: IndexMap<String, ArgSet>,
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Problem> {
        let doc: ProblemDocument = serde_json::from_str(text)?;
        Problem::from_document(&doc)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Problem> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Problem::from_json(&text)
    }

    pub fn from_document(doc: &ProblemDocument) -> Result<Problem> {
        let scale = ImportanceScale::new(doc.scale.iter().cloned())?;
        let mut arguments = Vec::new();
        // bare names of two-sided arguments, resolved to both halves
        let mut two_sided: HashMap<&str, (usize, usize)> = HashMap::new();
        for decl in &doc.arguments {
            let level = scale
                .level_of(&decl.level)
                .ok_or_else(|| Error::UnknownLevel {
                    argument: decl.name.clone(),
                    label: decl.level.clone(),
                })?;
            let spec = ArgumentSpec {
                name: decl.name.clone(),
                polarity: decl.polarity,
                level,
            };
            if decl.polarity == DeclaredPolarity::Both {
                two_sided.insert(&decl.name, (arguments.len(), arguments.len() + 1));
            }
            arguments.extend(duplicate_both_polarity(&spec));
        }
        let universe = DecisionUniverse::new(scale, arguments)?;

        let mut options = IndexMap::new();
        for (option, names) in &doc.options {
            let mut members = ArgSet::EMPTY;
            for name in names {
                let indices: Vec<usize> = match universe.index_of(name) {
                    Some(i) => vec![i],
                    None => match two_sided.get(name.as_str()) {
                        Some(&(p, n)) => vec![p, n],
                        None => {
                            return Err(Error::UnknownArgument {
                                option: option.clone(),
                                argument: name.clone(),
                            })
                        }
                    },
                };
                for i in indices {
                    if members.contains(i) {
                        return Err(Error::RepeatedMember {
                            option: option.clone(),
                            argument: name.clone(),
                        });
                    }
                    members = members.with(i);
                }
            }
            options.insert(option.clone(), members);
        }
        Ok(Problem { universe, options })
    }

    /// Document describing exactly this problem; two-sided arguments appear
    /// already split.
    pub fn to_document(&self) -> ProblemDocument {
        let scale = self.universe.scale();
        ProblemDocument {
            scale: scale.labels().to_vec(),
            arguments: self
                .universe
                .arguments()
                .iter()
                .map(|a| ArgumentDecl {
                    name: a.name.clone(),
                    polarity: match a.polarity {
                        Polarity::Pro => DeclaredPolarity::Pro,
                        Polarity::Con => DeclaredPolarity::Con,
                    },
                    level: scale.label(a.level).to_string(),
                })
                .collect(),
            options: self
                .options
                .iter()
                .map(|(name, set)| {
                    let members = self
                        .universe
                        .names(*set)
                        .into_iter()
                        .map(String::from)
                        .collect();
                    (name.clone(), members)
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("problem documents serialize")
    }

    pub fn option(&self, name: &str) -> Result<OptionProfile<'_>> {
        let members = self
            .options
            .get(name)
            .ok_or_else(|| Error::UnknownOption(name.to_string()))?;
        OptionProfile::new(&self.universe, *members)
    }
}
