//! Big-stepped capacities: each level outweighs everything below it, so the
//! net predisposition σ⁺ − σ⁻ ranks options exactly as Lexi does.
//!
//! Run with `cargo run --example capacities`.

use bipolar_choice::encodings::{capacity_row, compare_bilexi_np, compare_np, BigSteppedCapacity};
use bipolar_choice::{fixtures, model::Level, rules::compare, Result, RuleId};

fn main() -> Result<()> {
    let problem = fixtures::luc_problem();
    let universe = &problem.universe;
    let cap = BigSteppedCapacity::new(universe);
    print!("base {}:", cap.base());
    for (i, label) in universe.scale().labels().iter().enumerate() {
        print!(" {label}={}", cap.weight(Level(i as u16)));
    }
    println!();
    for name in problem.options.keys() {
        let row = capacity_row(name, &problem.option(name)?);
        println!(
            "{name}: σ⁺ = {}, σ⁻ = {}, net = {}",
            row.sigma_pos, row.sigma_neg, row.net_predisposition
        );
    }
    let (a, b) = (problem.option("a")?, problem.option("b")?);
    println!(
        "net predisposition: {}   Lexi: {}",
        compare_np(&a, &b)?,
        compare(RuleId::Lexi, &a, &b)?
    );
    println!(
        "truncated capacities: {}   BiLexi: {}",
        compare_bilexi_np(&a, &b)?,
        compare(RuleId::BiLexi, &a, &b)?
    );
    Ok(())
}
