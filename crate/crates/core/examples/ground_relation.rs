//! How each rule ranks single arguments against each other and against the
//! empty option.
//!
//! Run with `cargo run --example ground_relation`.

use bipolar_choice::rules::ground_relation;
use bipolar_choice::{fixtures, RuleId};

fn main() {
    let universe = fixtures::luc();
    let biposs = ground_relation(RuleId::BiPoss, &universe);
    for rule in RuleId::ALL {
        let ground = ground_relation(rule, &universe);
        let same = if ground.same_relation(&biposs) {
            ""
        } else {
            "  (differs from BiPoss)"
        };
        println!("{rule:<7} {}{same}", ground.render(&universe));
    }
}
