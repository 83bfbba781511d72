//! BiPoss indifference is not transitive: a pro and a con of equal strength
//! cancel against the empty option, yet the pair is also level with the pro
//! alone, which beats the empty option.
//!
//! Run with `cargo run --example biposs_intransitivity`.

use bipolar_choice::audit::{find_biposs_indifference_intransitivity, AuditBounds};
use bipolar_choice::rules::compare_sets;
use bipolar_choice::{Argument, DecisionUniverse, ImportanceScale, Result, RuleId};

fn main() -> Result<()> {
    let scale = ImportanceScale::new(["zero", "one", "beta"])?;
    let universe = DecisionUniverse::new(
        scale,
        vec![
            Argument::pro("x", 1),
            Argument::con("y", 1),
            Argument::pro("u", 2),
        ],
    )?;
    let (a, b, c) = find_biposs_indifference_intransitivity(&universe, &AuditBounds::default())?;
    let show = |s| universe.display_set(s);
    for (s, t) in [(a, b), (b, c), (a, c)] {
        let outcome = compare_sets(RuleId::BiPoss, &universe, s, t);
        println!("{} {} {}", show(s), outcome.symbol(), show(t));
    }
    Ok(())
}
