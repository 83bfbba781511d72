//! Compares the two options of each bundled scenario under all six rules.
//!
//! Run with `cargo run --example compare_worked_examples`.

use bipolar_choice::{fixtures, rules::compare, Problem, Result, RuleId};

fn main() -> Result<()> {
    let scenarios: [(&str, Problem, &str, &str); 3] = [
        ("luc", fixtures::luc_problem(), "a", "b"),
        ("lucy", fixtures::lucy_problem(), "a", "home"),
        ("luka", fixtures::luka_problem(), "a", "b"),
    ];
    print!("{:<6}", "");
    for rule in RuleId::ALL {
        print!("{rule:>14}");
    }
    println!();
    for (name, problem, x, y) in &scenarios {
        let (a, b) = (problem.option(x)?, problem.option(y)?);
        print!("{name:<6}");
        for rule in RuleId::ALL {
            print!("{:>14}", compare(rule, &a, &b)?.to_string());
        }
        println!();
        println!(
            "        {x} = {}, {y} = {}",
            problem.universe.display_set(a.members()),
            problem.universe.display_set(b.members())
        );
    }
    Ok(())
}
