//! Ranks several options under each rule and lists the undominated ones.
//! The problem declares `chocolate` as both a pro and a con.
//!
//! Run with `cargo run --example rank_options`.

use bipolar_choice::cli::{cmd_rank, RankReport};
use bipolar_choice::{Problem, Result, RuleId};

const PROBLEM: &str = include_str!("../fixtures/chocolate.json");

fn main() -> Result<()> {
    let problem = Problem::from_json(PROBLEM)?;
    for (name, members) in &problem.options {
        println!("{name}: {}", problem.universe.display_set(*members));
    }
    println!();
    for rule in RuleId::ALL {
        let report: RankReport = cmd_rank(&problem, rule)?;
        print!("{}", report.render());
        println!();
    }
    Ok(())
}
