//! Sweeps both axiom bundles over every small universe and prints which
//! rules satisfy which axioms, with the first counterexample found.
//!
//! Run with `cargo run --release --example audit_axioms`.

use bipolar_choice::audit::{generate_universes, sweep_axioms, AuditBounds, THEOREM1, THEOREM2};
use bipolar_choice::{Result, RuleId};

fn main() -> Result<()> {
    let universes: Vec<_> = generate_universes(4, 3).collect();
    let bounds = AuditBounds::default();
    println!(
        "{} universes with up to 4 arguments on 2 levels\n",
        universes.len()
    );
    for (title, bundle) in [
        ("characterizing BiPoss", &THEOREM1[..]),
        ("characterizing Lexi", &THEOREM2[..]),
    ] {
        println!("axioms {title}:");
        for rule in RuleId::ALL {
            let verdicts = sweep_axioms(bundle, rule, &universes, &bounds)?;
            let failed: Vec<_> = verdicts.iter().filter(|v| !v.holds).collect();
            if failed.is_empty() {
                println!("  {rule:<7} all hold");
                continue;
            }
            for v in failed {
                let (u, w) = v
                    .counterexample
                    .as_ref()
                    .expect("failed verdicts carry a witness");
                println!("  {rule:<7} {}", w.describe(u));
                assert!(w.replays(rule, u));
            }
        }
        println!();
    }
    Ok(())
}
