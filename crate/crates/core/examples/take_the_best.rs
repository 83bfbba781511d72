//! Take-the-Best on three cues of distinct importance. Options missing a cue
//! get its opposite, after which Discri, BiLexi and Lexi all agree with the
//! heuristic.
//!
//! Run with `cargo run --example take_the_best`.

use bipolar_choice::encodings::{complete_polar_opposites, ttb_compare};
use bipolar_choice::{fixtures, rules::compare, Result, RuleId};

fn main() -> Result<()> {
    let problem = fixtures::ttb_three_cues_problem();
    let instance = complete_polar_opposites(&problem)?;
    for name in instance.options.keys() {
        println!(
            "{name}: {}",
            instance.universe.display_set(instance.options[name])
        );
    }
    let ttb = ttb_compare(&instance, "option1", "option2")?;
    println!("take-the-best: {ttb}");
    let (a, b) = (instance.profile("option1")?, instance.profile("option2")?);
    for rule in [RuleId::Discri, RuleId::BiLexi, RuleId::Lexi] {
        println!("{rule}: {}", compare(rule, &a, &b)?);
    }
    Ok(())
}
