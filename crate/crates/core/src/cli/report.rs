//! Report types: each serializes to JSON and renders as a plain-text table.

use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::Serialize;

use super::{AuditSource, AxiomSelection};
use crate::audit::{
    expected_to_hold, propositions, sweep_axioms, AuditBounds, Bundle, PropositionCheck,
};
use crate::encodings::{
    capacity_row, complete_polar_opposites, ttb_compare, BigSteppedCapacity, CapacityRow,
};
use crate::error::Result;
use crate::model::{DecisionUniverse, Outcome, Polarity};
use crate::problem::Problem;
use crate::rules::{compare, RuleId};

/// Replaces runs of superscript signs with `_p`/`_m` letters, so
/// `landscape⁺⁺` becomes `landscape_pp`.
pub fn ascii_text(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_run = false;
    for c in text.chars() {
        let letter = match c {
            '⁺' => Some('p'),
            '⁻' => Some('m'),
            _ => None,
        };
        match letter {
            Some(l) => {
                if !in_run {
                    out.push('_');
                    in_run = true;
                }
                out.push(l);
            }
            None => {
                in_run = false;
                out.push(c);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub arguments: usize,
    pub pros: usize,
    pub cons: usize,
    pub null: usize,
    pub scale: Vec<String>,
    pub options: Vec<String>,
}

impl ValidateReport {
    pub fn new(problem: &Problem) -> Self {
        let u = &problem.universe;
        ValidateReport {
            valid: true,
            arguments: u.len(),
            pros: u.positives().len(),
            cons: u.negatives().len(),
            null: u.nulls().len(),
            scale: u.scale().labels().to_vec(),
            options: problem.options.keys().cloned().collect(),
        }
    }

    pub fn render(&self) -> String {
        format!(
            "valid: {} arguments ({} pro, {} con, {} null), {} levels, {} options\n",
            self.arguments,
            self.pros,
            self.cons,
            self.null,
            self.scale.len(),
            self.options.len()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub first: String,
    pub second: String,
    pub outcomes: IndexMap<RuleId, Outcome>,
}

impl CompareReport {
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (rule, outcome) in &self.outcomes {
            let _ = writeln!(
                s,
                "{:<8}{:<14}{} {} {}",
                format!("{rule}:"),
                outcome,
                self.first,
                outcome.symbol(),
                self.second
            );
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rule: RuleId,
    pub options: Vec<String>,
    /// `matrix[i][j]` compares option `i` with option `j`.
    pub matrix: Vec<Vec<Outcome>>,
    /// Options no other option is strictly preferred to.
    pub maximal: Vec<String>,
    /// A cycle in the strict part, if one exists.
    pub cycle: Option<Vec<String>>,
}

impl RankReport {
    pub fn build(problem: &Problem, rule: RuleId) -> Result<RankReport> {
        let names: Vec<String> = problem.options.keys().cloned().collect();
        let profiles = names
            .iter()
            .map(|n| problem.option(n))
            .collect::<Result<Vec<_>>>()?;
        let matrix = profiles
            .iter()
            .map(|a| {
                profiles
                    .iter()
                    .map(|b| compare(rule, a, b))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let maximal = (0..names.len())
            .filter(|&i| (0..names.len()).all(|j| matrix[j][i] != Outcome::PreferFirst))
            .map(|i| names[i].clone())
            .collect();
        let cycle =
            strict_cycle(&matrix).map(|c| c.into_iter().map(|i| names[i].clone()).collect());
        Ok(RankReport {
            rule,
            options: names,
            matrix,
            maximal,
            cycle,
        })
    }

    pub fn render(&self) -> String {
        let width = self
            .options
            .iter()
            .map(|n| n.chars().count())
            .max()
            .unwrap_or(1)
            .max(1);
        let mut s = format!("rule: {}\n{:width$}", self.rule, "");
        for name in &self.options {
            let _ = write!(s, " {name:>width$}");
        }
        s.push('\n');
        for (name, row) in self.options.iter().zip(&self.matrix) {
            let _ = write!(s, "{name:<width$}");
            for outcome in row {
                let _ = write!(s, " {:>width$}", outcome.symbol());
            }
            s.push('\n');
        }
        let _ = writeln!(s, "maximal: {{{}}}", self.maximal.join(", "));
        if let Some(cycle) = &self.cycle {
            let _ = writeln!(s, "strict cycle: {}", cycle.join(" ≻ "));
        }
        s
    }
}

/// Depth-first search for a cycle of strict preferences.
fn strict_cycle(matrix: &[Vec<Outcome>]) -> Option<Vec<usize>> {
    fn visit(
        v: usize,
        m: &[Vec<Outcome>],
        state: &mut [u8],
        stack: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        state[v] = 1;
        stack.push(v);
        for w in 0..m.len() {
            if m[v][w] != Outcome::PreferFirst {
                continue;
            }
            if state[w] == 1 {
                let start = stack.iter().position(|&x| x == w).expect("on stack");
                return Some(stack[start..].to_vec());
            }
            if state[w] == 0 {
                if let Some(c) = visit(w, m, state, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        state[v] = 2;
        None
    }
    let mut state = vec![0u8; matrix.len()];
    (0..matrix.len()).find_map(|v| {
        if state[v] == 0 {
            visit(v, matrix, &mut state, &mut Vec::new())
        } else {
            None
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub axiom: String,
    pub rule: RuleId,
    pub holds: bool,
    /// Whether the rule is guaranteed to satisfy the axiom.
    pub expected: bool,
    pub universes_checked: usize,
    pub witness: Option<String>,
    /// Arguments of the universe the witness lives in.
    pub universe: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub source: String,
    pub bounds: AuditBounds,
    pub universes: usize,
    pub rows: Vec<AuditRow>,
    pub propositions: Vec<PropositionCheck>,
}

fn describe_universe(u: &DecisionUniverse) -> String {
    let args: Vec<String> = u
        .arguments()
        .iter()
        .map(|a| {
            let sign = match a.polarity {
                Polarity::Pro => '+',
                Polarity::Con => '-',
            };
            format!("{}{sign}@{}", a.name, u.scale().label(a.level))
        })
        .collect();
    args.join(" ")
}

impl AuditReport {
    pub fn build(
        source: &AuditSource,
        rules: &[RuleId],
        selection: &AxiomSelection,
        bounds: &AuditBounds,
    ) -> Result<AuditReport> {
        let (label, universes): (String, Vec<DecisionUniverse>) = match source {
            AuditSource::File(path, problem) => (path.clone(), vec![problem.universe.clone()]),
            AuditSource::Generated(g) => (format!("generated {g}"), g.universes().collect()),
        };
        let mut rows = Vec::new();
        let mut checks = Vec::new();
        match selection {
            AxiomSelection::Bundle(Bundle::Propositions) => {
                checks = propositions(&universes, bounds)?;
            }
            AxiomSelection::Bundle(b) => rows = axiom_rows(b.axioms(), rules, &universes, bounds)?,
            AxiomSelection::Axioms(axioms) => rows = axiom_rows(axioms, rules, &universes, bounds)?,
        }
        Ok(AuditReport {
            source: label,
            bounds: *bounds,
            universes: universes.len(),
            rows,
            propositions: checks,
        })
    }

    /// True unless a guaranteed axiom or a proposition failed.
    pub fn expectations_met(&self) -> bool {
        self.rows.iter().all(|r| r.holds || !r.expected)
            && self.propositions.iter().all(|c| c.holds)
    }

    pub fn render(&self) -> String {
        let mut s = format!("audit of {} ({} universes)\n", self.source, self.universes);
        if !self.rows.is_empty() {
            let mut axioms: Vec<&str> = Vec::new();
            let mut rules: Vec<RuleId> = Vec::new();
            for row in &self.rows {
                if !axioms.contains(&row.axiom.as_str()) {
                    axioms.push(&row.axiom);
                }
                if !rules.contains(&row.rule) {
                    rules.push(row.rule);
                }
            }
            let width = axioms.iter().map(|a| a.len()).max().unwrap_or(0);
            let _ = write!(s, "{:width$}", "");
            for rule in &rules {
                let _ = write!(s, " {rule:>7}");
            }
            s.push('\n');
            for axiom in &axioms {
                let _ = write!(s, "{axiom:<width$}");
                for rule in &rules {
                    let row = self
                        .rows
                        .iter()
                        .find(|r| r.axiom == *axiom && r.rule == *rule);
                    let mark = match row {
                        Some(r) if r.holds => "✓",
                        Some(r) if r.expected => "✗!",
                        Some(_) => "✗",
                        None => "",
                    };
                    let _ = write!(s, " {mark:>7}");
                }
                s.push('\n');
            }
            for row in self.rows.iter().filter(|r| !r.holds) {
                let _ = writeln!(
                    s,
                    "✗ {} {}: {} [{}]",
                    row.rule,
                    row.axiom,
                    row.witness.as_deref().unwrap_or(""),
                    row.universe.as_deref().unwrap_or("")
                );
            }
        }
        for check in &self.propositions {
            let mark = if check.holds { "✓" } else { "✗" };
            let _ = write!(
                s,
                "{mark} {} ({} universes)",
                check.name, check.universes_checked
            );
            if let Some(w) = &check.counterexample {
                let _ = write!(s, ": {w}");
            }
            if let Some(w) = &check.strictness {
                let _ = write!(s, "; proper: {w}");
            }
            s.push('\n');
        }
        if !self.expectations_met() {
            s.push_str("some guaranteed property failed (marked ✗!)\n");
        }
        s
    }
}

fn axiom_rows(
    axioms: &[crate::audit::AxiomId],
    rules: &[RuleId],
    universes: &[DecisionUniverse],
    bounds: &AuditBounds,
) -> Result<Vec<AuditRow>> {
    let mut rows = Vec::new();
    for &rule in rules {
        for v in sweep_axioms(axioms, rule, universes, bounds)? {
            let (witness, universe) = match &v.counterexample {
                Some((u, w)) => (Some(w.describe(u)), Some(describe_universe(u))),
                None => (None, None),
            };
            rows.push(AuditRow {
                axiom: v.axiom.to_string(),
                rule,
                holds: v.holds,
                expected: expected_to_hold(v.axiom, rule),
                universes_checked: v.universes_checked,
                witness,
                universe,
            });
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TtbReport {
    pub first: String,
    pub second: String,
    /// Cue names, most important first.
    pub cues: Vec<String>,
    pub first_values: Vec<Polarity>,
    pub second_values: Vec<Polarity>,
    pub ttb: Outcome,
    pub discri: Outcome,
    pub bilexi: Outcome,
    pub lexi: Outcome,
    pub coincide: bool,
}

impl TtbReport {
    pub fn build(problem: &Problem, first: &str, second: &str) -> Result<TtbReport> {
        problem.option(first)?;
        problem.option(second)?;
        let inst = complete_polar_opposites(problem)?;
        let ttb = ttb_compare(&inst, first, second)?;
        let (a, b) = (inst.profile(first)?, inst.profile(second)?);
        let discri = compare(RuleId::Discri, &a, &b)?;
        let bilexi = compare(RuleId::BiLexi, &a, &b)?;
        let lexi = compare(RuleId::Lexi, &a, &b)?;
        Ok(TtbReport {
            first: first.to_string(),
            second: second.to_string(),
            cues: inst.cues.iter().map(|c| c.name.clone()).collect(),
            first_values: inst.values[first].clone(),
            second_values: inst.values[second].clone(),
            ttb,
            discri,
            bilexi,
            lexi,
            coincide: ttb == discri && ttb == bilexi && ttb == lexi,
        })
    }

    pub fn render(&self) -> String {
        let sign = |p: &Polarity| match p {
            Polarity::Pro => '+',
            Polarity::Con => '-',
        };
        let mut s = String::new();
        let width = self
            .cues
            .iter()
            .map(|c| c.chars().count())
            .max()
            .unwrap_or(3)
            .max(3);
        let _ = writeln!(s, "{:width$} {} {}", "cue", self.first, self.second);
        for (k, cue) in self.cues.iter().enumerate() {
            let _ = writeln!(
                s,
                "{cue:width$} {:>w1$} {:>w2$}",
                sign(&self.first_values[k]),
                sign(&self.second_values[k]),
                w1 = self.first.chars().count(),
                w2 = self.second.chars().count()
            );
        }
        let _ = writeln!(
            s,
            "take-the-best: {} ({} {} {})",
            self.ttb,
            self.first,
            self.ttb.symbol(),
            self.second
        );
        let mark = if self.coincide { "✓" } else { "✗" };
        let _ = writeln!(
            s,
            "{mark} agrees with Discri {}, BiLexi {}, Lexi {}",
            self.discri, self.bilexi, self.lexi
        );
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapacityReport {
    pub base: String,
    /// Weight of one argument at each scale level, bottom first.
    pub weights: IndexMap<String, String>,
    pub rows: Vec<CapacityRow>,
}

impl CapacityReport {
    pub fn build(problem: &Problem) -> Result<CapacityReport> {
        let u = &problem.universe;
        let cap = BigSteppedCapacity::new(u);
        let weights = (0..u.scale().len())
            .map(|i| {
                let level = crate::model::Level(i as u16);
                (
                    u.scale().label(level).to_string(),
                    cap.weight(level).to_string(),
                )
            })
            .collect();
        let rows = problem
            .options
            .keys()
            .map(|name| Ok(capacity_row(name, &problem.option(name)?)))
            .collect::<Result<_>>()?;
        Ok(CapacityReport {
            base: cap.base().to_string(),
            weights,
            rows,
        })
    }

    pub fn render(&self) -> String {
        let mut s = format!("base {}:", self.base);
        for (label, w) in &self.weights {
            let _ = write!(s, " {label}={w}");
        }
        s.push('\n');
        let width = self
            .rows
            .iter()
            .map(|r| r.option.chars().count())
            .max()
            .unwrap_or(6)
            .max(6);
        let _ = writeln!(
            s,
            "{:width$} {:>12} {:>12} {:>12}",
            "option", "σ⁺", "σ⁻", "NP"
        );
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:width$} {:>12} {:>12} {:>12}",
                r.option,
                r.sigma_pos.to_string(),
                r.sigma_neg.to_string(),
                r.net_predisposition.to_string()
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_text_replaces_superscript_runs() {
        assert_eq!(
            ascii_text("{landscape⁺⁺, price⁻⁻}"),
            "{landscape_pp, price_mm}"
        );
        assert_eq!(ascii_text("plain"), "plain");
    }

    #[test]
    fn cycle_detection() {
        use Outcome::*;
        let acyclic = vec![
            vec![Indifferent, PreferFirst],
            vec![PreferSecond, Indifferent],
        ];
        assert_eq!(strict_cycle(&acyclic), None);
        let cyclic = vec![
            vec![Indifferent, PreferFirst, PreferSecond],
            vec![PreferSecond, Indifferent, PreferFirst],
            vec![PreferFirst, PreferSecond, Indifferent],
        ];
        assert_eq!(strict_cycle(&cyclic), Some(vec![0, 1, 2]));
    }
}
