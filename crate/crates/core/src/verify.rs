//! Property suites over a whole Hasse diagram, comparing the local rules
//! with brute force. Used by the `verify` command.

use std::collections::BTreeSet;
use std::fmt;

use crate::dynamics::{transition_bounds, transition_counts};
use crate::error::{Error, Result};
use crate::function::{level_leq, RegulatorContext, Shape};
use crate::neighborhood::{build_hasse, children, parents, HasseGraph, NeighborStep, HASSE_LIMIT};

/// Deliberate corruption of the parent rules, to check that the suites
/// notice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// The last parent of every shape with several parents goes missing.
    DropParent,
    /// Rule tags are shifted, so deltas disagree.
    MislabelRule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub arity: usize,
    pub nodes: usize,
    pub edges: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn violation_count(&self) -> usize {
        self.suites.iter().map(|s| s.violations.len()).sum()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "p={}: {} nodes / {} edges checked",
            self.arity, self.nodes, self.edges
        )?;
        for s in &self.suites {
            let status = if s.passed() { "ok" } else { "FAILED" };
            writeln!(f, "  {:<12} {:>6} checks  {status}", s.name, s.checked)?;
            for v in s.violations.iter().take(5) {
                writeln!(f, "    counterexample: {v}")?;
            }
            if s.violations.len() > 5 {
                writeln!(f, "    ... {} more", s.violations.len() - 5)?;
            }
        }
        Ok(())
    }
}

fn faulty_parents(s: &Shape, fault: Option<Fault>) -> Vec<NeighborStep> {
    let mut steps = parents(s);
    match fault {
        Some(Fault::DropParent) if steps.len() > 1 => {
            steps.pop();
        }
        Some(Fault::MislabelRule) => {
            for step in &mut steps {
                step.rule = match step.rule {
                    crate::neighborhood::ParentRule::R1 => crate::neighborhood::ParentRule::R3,
                    crate::neighborhood::ParentRule::R2 => crate::neighborhood::ParentRule::R2,
                    crate::neighborhood::ParentRule::R3 => crate::neighborhood::ParentRule::R1,
                };
            }
        }
        _ => {}
    }
    steps
}

fn oracle_suite(hd: &HasseGraph, fault: Option<Fault>) -> SuiteResult {
    let mut violations = Vec::new();
    for (i, node) in hd.nodes().iter().enumerate() {
        let want: BTreeSet<&Shape> = hd.parents_of(i).iter().map(|&j| &hd.nodes()[j]).collect();
        let ups = faulty_parents(node, fault);
        let got: BTreeSet<&Shape> = ups.iter().map(|s| &s.target).collect();
        if got != want {
            violations.push(format!(
                "parents of {node}: rules give {got:?}, cover relation gives {want:?}"
            ));
        }
        let want: BTreeSet<&Shape> = hd.children_of(i).iter().map(|&j| &hd.nodes()[j]).collect();
        let downs = children(node);
        let got: BTreeSet<&Shape> = downs.iter().map(|s| &s.target).collect();
        if got != want {
            violations.push(format!(
                "children of {node}: rules give {got:?}, cover relation gives {want:?}"
            ));
        }
    }
    SuiteResult {
        name: "oracle",
        checked: 2 * hd.node_count(),
        violations,
    }
}

fn delta_suite(hd: &HasseGraph, fault: Option<Fault>) -> SuiteResult {
    let mut violations = Vec::new();
    let mut checked = 0;
    for node in hd.nodes() {
        for step in faulty_parents(node, fault) {
            checked += 1;
            let gained = step.target.true_state_count() - node.true_state_count();
            if gained != u64::from(step.rule.delta()) {
                violations.push(format!(
                    "{node} -> {} tagged {} gains {gained} true states",
                    step.target, step.rule
                ));
            }
        }
    }
    SuiteResult {
        name: "deltas",
        checked,
        violations,
    }
}

fn level_suite(hd: &HasseGraph) -> SuiteResult {
    let mut violations = Vec::new();
    let edges = hd.edges();
    for &(c, p) in &edges {
        let (child, parent) = (&hd.nodes()[c], &hd.nodes()[p]);
        if !level_leq(&child.level(), &parent.level()) {
            violations.push(format!(
                "level({child}) = {} > level({parent}) = {}",
                child.level(),
                parent.level()
            ));
        }
    }
    SuiteResult {
        name: "levels",
        checked: edges.len(),
        violations,
    }
}

fn transition_suite(hd: &HasseGraph) -> Result<SuiteResult> {
    let p = hd.arity();
    let mut violations = Vec::new();
    let mut checked = 0;
    let plain = RegulatorContext::all_positive(p)?;
    let mut contexts = vec![(plain.clone(), p + 1)];
    contexts.push((plain.with_self_index(p)?, p));
    let mut signs = vec![crate::function::Sign::Positive; p];
    signs[p - 1] = crate::function::Sign::Negative;
    contexts.push((RegulatorContext::new(signs)?.with_self_index(p)?, p));
    for (ctx, n) in &contexts {
        let bounds = transition_bounds(ctx, *n);
        for shape in hd.nodes() {
            checked += 1;
            let counts = transition_counts(shape, ctx, *n)?;
            if !bounds.admits(&counts) {
                violations.push(format!(
                    "{shape} under {:?}: {counts:?} outside {bounds:?}",
                    bounds.case
                ));
            }
        }
        // counts move monotonically along every edge
        for (c, q) in hd.edges() {
            let lo = transition_counts(&hd.nodes()[c], ctx, *n)?;
            let hi = transition_counts(&hd.nodes()[q], ctx, *n)?;
            checked += 1;
            if hi.increasing < lo.increasing || hi.decreasing > lo.decreasing {
                violations.push(format!(
                    "{} -> {}: {lo:?} then {hi:?}",
                    hd.nodes()[c],
                    hd.nodes()[q]
                ));
            }
        }
    }
    Ok(SuiteResult {
        name: "transitions",
        checked,
        violations,
    })
}

/// Runs every suite on the Hasse diagram of arity `p`.
pub fn verify_arity(p: usize, fault: Option<Fault>) -> Result<VerifyReport> {
    if p == 0 || p > HASSE_LIMIT {
        return Err(Error::ArityTooLarge {
            arity: p,
            limit: HASSE_LIMIT,
        });
    }
    let hd = build_hasse(p)?;
    let suites = vec![
        oracle_suite(&hd, fault),
        delta_suite(&hd, fault),
        level_suite(&hd),
        transition_suite(&hd)?,
    ];
    Ok(VerifyReport {
        arity: p,
        nodes: hd.node_count(),
        edges: hd.edge_count(),
        suites,
    })
}
