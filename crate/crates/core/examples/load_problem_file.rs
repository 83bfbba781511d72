//! Loads a problem from JSON, validates it and writes it back. Arguments
//! declared `both` are split into a pro half and a con half.
//!
//! Run with `cargo run --example load_problem_file [path.json]`.

use bipolar_choice::{Problem, Result};

const DEFAULT: &str = r#"{
  "scale": ["zero", "low", "high"],
  "arguments": [
    {"name": "chocolate", "polarity": "both", "level": "high"},
    {"name": "walk", "polarity": "pro", "level": "low"}
  ],
  "options": {"treat": ["chocolate"], "stroll": ["walk"]}
}"#;

fn main() -> Result<()> {
    let problem = match std::env::args().nth(1) {
        Some(path) => Problem::load(path)?,
        None => Problem::from_json(DEFAULT)?,
    };
    let universe = &problem.universe;
    println!("valid: {}", universe.validate().is_valid());
    for arg in universe.arguments() {
        println!(
            "  {:<16} {:?} at {}",
            arg.name,
            arg.polarity,
            universe.scale().label(arg.level)
        );
    }
    for (name, members) in &problem.options {
        println!("{name} = {}", universe.display_set(*members));
    }
    let again = Problem::from_json(&problem.to_json())?;
    assert_eq!(again, problem);
    println!("\n{}", problem.to_json());
    Ok(())
}
