use std::collections::BTreeSet;

use monoreg::function::{RegulatorContext, Shape};
use monoreg::neighborhood::{
    build_hasse, children, count_consistent, enumerate_all, extended_siblings, parents, siblings,
    ParentRule,
};

fn true_count(s: &Shape) -> u64 {
    s.true_state_count()
}

#[test]
fn rules_match_brute_force_cover_relation() {
    for p in 1..=5 {
        let hasse = build_hasse(p).unwrap();
        assert_eq!(hasse.node_count() as u128, count_consistent(p).unwrap());
        for (i, node) in hasse.nodes().iter().enumerate() {
            let want_up: BTreeSet<&Shape> = hasse
                .parents_of(i)
                .iter()
                .map(|&j| &hasse.nodes()[j])
                .collect();
            let want_down: BTreeSet<&Shape> = hasse
                .children_of(i)
                .iter()
                .map(|&j| &hasse.nodes()[j])
                .collect();
            let ups = parents(node);
            let downs = children(node);
            let got_up: BTreeSet<&Shape> = ups.iter().map(|s| &s.target).collect();
            let got_down: BTreeSet<&Shape> = downs.iter().map(|s| &s.target).collect();
            assert_eq!(got_up, want_up, "parents of {node}");
            assert_eq!(got_down, want_down, "children of {node}");
        }
    }
}

#[test]
fn edge_deltas_match_rule_tags() {
    for p in 1..=5 {
        for node in enumerate_all(p).unwrap() {
            for step in parents(&node) {
                let delta = true_count(&step.target) - true_count(&node);
                assert!(delta == 1 || delta == 2);
                assert_eq!(
                    delta as u32,
                    step.delta_true_states(),
                    "{node} -> {}",
                    step.target
                );
                let expect = if delta == 2 {
                    ParentRule::R3
                } else {
                    step.rule
                };
                assert_eq!(step.rule, expect);
            }
        }
    }
}

#[test]
fn duality_and_incomparability() {
    for p in 1..=4 {
        for node in enumerate_all(p).unwrap() {
            let ups = parents(&node);
            for step in &ups {
                assert!(children(&step.target).iter().any(|c| c.target == node));
            }
            for step in children(&node) {
                assert!(parents(&step.target).iter().any(|c| c.target == node));
            }
            for a in &ups {
                for b in &ups {
                    if a != b {
                        assert!(!a.target.leq(&b.target).unwrap());
                    }
                }
            }
            assert!(!siblings(&node).contains(&node));
        }
    }
}

#[test]
fn order_agrees_with_true_state_inclusion() {
    for p in 1..=4 {
        let all: Vec<Shape> = enumerate_all(p).unwrap().collect();
        let contexts: Vec<RegulatorContext> = (0..1u32 << p)
            .map(|neg| {
                RegulatorContext::new(
                    (0..p)
                        .map(|k| {
                            if neg >> k & 1 == 1 {
                                monoreg::function::Sign::Negative
                            } else {
                                monoreg::function::Sign::Positive
                            }
                        })
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        for ctx in &contexts {
            let sets: Vec<_> = all.iter().map(|s| s.true_states(ctx).unwrap()).collect();
            for (i, a) in all.iter().enumerate() {
                for (j, b) in all.iter().enumerate() {
                    assert_eq!(a.leq(b).unwrap(), sets[i].is_subset(&sets[j]), "{a} vs {b}");
                }
            }
        }
        let inf = Shape::inf(p).unwrap();
        let sup = Shape::sup(p).unwrap();
        for s in &all {
            assert!(inf.leq(s).unwrap() && s.leq(&sup).unwrap());
        }
    }
}

#[test]
fn non_lattice_witness() {
    let s1: Shape = "{{3},{1,2,4}}".parse().unwrap();
    let s2: Shape = "{{2,3},{1,4}}".parse().unwrap();
    let all: Vec<Shape> = enumerate_all(4).unwrap().collect();
    let upper: Vec<&Shape> = all
        .iter()
        .filter(|u| s1.leq(u).unwrap() && s2.leq(u).unwrap())
        .collect();
    let minimal: Vec<String> = upper
        .iter()
        .filter(|u| !upper.iter().any(|v| v.is_below(u).unwrap()))
        .map(|u| u.to_string())
        .collect();
    assert_eq!(minimal, ["{{3},{1,2},{1,4}}", "{{3},{1,4},{2,4}}"]);
    // {{1,2},{3},{4}} bounds both from above but sits over {{3},{1,2},{1,4}}
    let named: Shape = "{{1,2},{3},{4}}".parse().unwrap();
    assert!(s1.leq(&named).unwrap() && s2.leq(&named).unwrap());
    assert!(!minimal.contains(&named.to_string()));
}

#[test]
fn sibling_relations_match_brute_force() {
    for p in 1..=4 {
        let hd = build_hasse(p).unwrap();
        let n = hd.node_count();
        for (i, node) in hd.nodes().iter().enumerate() {
            // nodes sharing a parent, then nodes sharing a child, by index
            let mut by_parent = BTreeSet::new();
            let mut by_child = BTreeSet::new();
            for j in (0..n).filter(|&j| j != i) {
                if hd
                    .parents_of(i)
                    .iter()
                    .any(|q| hd.parents_of(j).contains(q))
                {
                    by_parent.insert(&hd.nodes()[j]);
                }
                if hd
                    .children_of(i)
                    .iter()
                    .any(|c| hd.children_of(j).contains(c))
                {
                    by_child.insert(&hd.nodes()[j]);
                }
            }
            let sib = siblings(node);
            assert_eq!(sib.iter().collect::<BTreeSet<_>>(), by_parent, "{node}");
            let ext = extended_siblings(node);
            let want: BTreeSet<&Shape> = by_parent.union(&by_child).copied().collect();
            assert_eq!(ext.iter().collect::<BTreeSet<_>>(), want, "{node}");
        }
    }
}
