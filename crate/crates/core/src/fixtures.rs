//! The worked scenarios shipped with the crate (`fixtures/*.json`).

use crate::model::DecisionUniverse;
use crate::problem::Problem;

pub const LUC_JSON: &str = include_str!("../fixtures/luc.json");
pub const LUCY_JSON: &str = include_str!("../fixtures/lucy.json");
pub const LUKA_JSON: &str = include_str!("../fixtures/luka.json");
pub const TTB_THREE_CUES_JSON: &str = include_str!("../fixtures/ttb_three_cues.json");

/// Holiday choice: a strong pro against two strong cons, or one strong con
/// against three weak pros.
pub const LUC_A: [&str; 3] = ["landscape⁺⁺", "airline⁻⁻", "price⁻⁻"];
pub const LUC_B: [&str; 4] = ["governance⁻⁻", "tennis⁺", "pool⁺", "disco⁺"];
/// A stay with a great pro and a mild con, against staying home (`[]`).
pub const LUCY_A: [&str; 2] = ["estate⁺⁺", "inlaw⁻"];
/// Two equally expensive gyms; one has a squash court but a bad location.
pub const LUKA_A: [&str; 3] = ["squash⁺", "location⁻⁻", "price⁻⁻⁻"];
pub const LUKA_B: [&str; 1] = ["price⁻⁻⁻"];

fn load(text: &str) -> Problem {
    Problem::from_json(text).expect("bundled fixture parses")
}

pub fn luc_problem() -> Problem {
    load(LUC_JSON)
}

pub fn lucy_problem() -> Problem {
    load(LUCY_JSON)
}

pub fn luka_problem() -> Problem {
    load(LUKA_JSON)
}

pub fn ttb_three_cues_problem() -> Problem {
    load(TTB_THREE_CUES_JSON)
}

pub fn luc() -> DecisionUniverse {
    luc_problem().universe
}

pub fn lucy() -> DecisionUniverse {
    lucy_problem().universe
}

pub fn luka() -> DecisionUniverse {
    luka_problem().universe
}
