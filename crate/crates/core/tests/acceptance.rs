//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Values marked as published are compared with the printed numbers;
//! everything else is recomputed here by brute force over truth tables and
//! state spaces, independently of the library's rule-based code paths.
//!
//! The process exits non-zero unless the set of failing criteria equals
//! [`KNOWN_FAILURES`], so a known failure that starts passing is flagged too.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use monoreg::dynamics::{
    attractors, f_star, path_trace, stg_async, stg_sync, transition_bounds, transition_counts,
    TransitionCounts,
};
use monoreg::function::{level_leq, RegulatorContext, Shape, Sign};
use monoreg::io::{parse_function_for, parse_model};
use monoreg::neighborhood::{
    children, count_consistent, enumerate_all, parents, random_path, siblings, HasseSlice,
    ParentRule,
};
use monoreg::pbn::{
    simulate, th_initial_state, th_model, th_neighbor_table, Experiment, Phenotype,
    ProbabilisticNetwork, SimulationConfig,
};
use monoreg::state::State;

/// N(8) as printed differs by 2 from the value its own recursion gives.
const KNOWN_FAILURES: &[u8] = &[1];

const PUBLISHED_COUNTS: [&str; 8] = [
    "1",
    "2",
    "9",
    "114",
    "6894",
    "7785062",
    "2414627396434",
    "56130437209370320359968",
];

type Check = Result<String, String>;
type Criterion = (u8, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- oracles ----------------------------------------------------------

/// Up-set of a shape as a bitmask over operative masks `0..2^p` (p <= 6).
fn true_set(shape: &Shape) -> u64 {
    let p = shape.arity();
    (0u32..1 << p)
        .filter(|&x| shape.clauses().iter().any(|c| c.mask() & !x == 0))
        .fold(0u64, |acc, x| acc | 1 << x)
}

/// All monotone, nondegenerate functions of `p` positive inputs, by
/// exhaustive search over truth tables (p <= 4).
fn brute_force_count(p: usize) -> u64 {
    let rows = 1u32 << p;
    let mut count = 0;
    for table in 0u64..1 << rows {
        let f = |x: u32| table >> x & 1 == 1;
        let monotone = (0..rows).all(|x| (0..p).all(|k| !f(x) || f(x | 1 << k)));
        let essential = (0..p).all(|k| (0..rows).any(|x| f(x) != f(x ^ 1 << k)));
        if monotone && essential {
            count += 1;
        }
    }
    count
}

/// Cover relation of the up-set inclusion order, as (child, parent) pairs.
fn brute_force_covers(nodes: &[u64]) -> BTreeSet<(usize, usize)> {
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by_key(|&i| nodes[i].count_ones());
    let mut covers = BTreeSet::new();
    for (a, &ta) in nodes.iter().enumerate() {
        let mut minimal: Vec<u64> = Vec::new();
        for &b in &order {
            let tb = nodes[b];
            if tb == ta || ta & !tb != 0 {
                continue;
            }
            if minimal.iter().any(|&m| m & !tb == 0) {
                continue;
            }
            minimal.push(tb);
            covers.insert((a, b));
        }
    }
    covers
}

fn eval(shape: &Shape, signs: &[Sign], local: u32) -> bool {
    shape.clauses().iter().any(|c| {
        c.indices()
            .all(|k| (local >> (k - 1) & 1 == 1) == (signs[k - 1] == Sign::Positive))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Case {
    None,
    Pos,
    Neg,
}

const CASES: [Case; 3] = [Case::None, Case::Pos, Case::Neg];

fn dimension(p: usize, case: Case) -> usize {
    if case == Case::None {
        p + 1
    } else {
        p
    }
}

/// Transitions of the last of `n` components, regulated by components
/// `0..p` (itself included when auto-regulated).
fn oracle_counts(shape: &Shape, signs: &[Sign], case: Case) -> TransitionCounts {
    let p = signs.len();
    let n = dimension(p, case);
    let mut c = TransitionCounts::default();
    for s in 0u32..1 << n {
        let g = s >> (n - 1) & 1 == 1;
        let f = eval(shape, signs, s & ((1 << p) - 1));
        if f && !g {
            c.increasing += 1;
        } else if !f && g {
            c.decreasing += 1;
        }
    }
    c
}

fn sign_patterns(p: usize, case: Case) -> Vec<Vec<Sign>> {
    (0u32..1 << p)
        .map(|m| {
            (0..p)
                .map(|k| {
                    if m >> k & 1 == 1 {
                        Sign::Negative
                    } else {
                        Sign::Positive
                    }
                })
                .collect::<Vec<_>>()
        })
        .filter(|s| match case {
            Case::None => true,
            Case::Pos => s[p - 1] == Sign::Positive,
            Case::Neg => s[p - 1] == Sign::Negative,
        })
        .collect()
}

fn context(signs: &[Sign], case: Case) -> RegulatorContext {
    let ctx = RegulatorContext::new(signs.to_vec()).unwrap();
    match case {
        Case::None => ctx,
        _ => ctx.with_self_index(signs.len()).unwrap(),
    }
}

fn endpoint_counts(case: Case, half: u64) -> ((u64, u64), (u64, u64)) {
    // (sup, inf) as (increasing, decreasing)
    match case {
        Case::None => ((half - 1, 1), (1, half - 1)),
        Case::Pos => ((half - 1, 0), (0, half - 1)),
        Case::Neg => ((half, 1), (1, half)),
    }
}

// ---- criteria ---------------------------------------------------------

fn counting() -> Check {
    let start = Instant::now();
    let sizes: Vec<usize> = (1..=5).map(|p| enumerate_all(p).unwrap().count()).collect();
    let small = start.elapsed();
    ensure(sizes == [1, 2, 9, 114, 6894], || {
        format!("enumerated sizes {sizes:?}")
    })?;
    ensure(small < Duration::from_secs(1), || {
        format!("p <= 5 enumeration took {small:?}")
    })?;
    for p in 1..=4 {
        let brute = brute_force_count(p);
        ensure(brute as usize == sizes[p - 1], || {
            format!("truth-table count for p={p} is {brute}")
        })?;
    }
    let start = Instant::now();
    let six = enumerate_all(6).unwrap().count();
    let six_time = start.elapsed();
    ensure(six == 7_785_062, || format!("p=6 enumerated {six}"))?;
    ensure(six_time < Duration::from_secs(120), || {
        format!("p=6 enumeration took {six_time:?}")
    })?;
    let mut mismatches = Vec::new();
    for (p, published) in (1..=8).zip(PUBLISHED_COUNTS) {
        let got = count_consistent(p).unwrap().to_string();
        if got != published {
            mismatches.push(format!("N({p}) = {got}, published {published}"));
        }
    }
    ensure(mismatches.is_empty(), || mismatches.join("; "))?;
    Ok(format!("p<=5 in {small:?}, p=6 in {six_time:?}"))
}

fn hasse_oracle() -> Check {
    let mut edges_total = 0;
    for p in 1..=5 {
        let nodes: Vec<Shape> = enumerate_all(p).unwrap().collect();
        let sets: Vec<u64> = nodes.iter().map(true_set).collect();
        let index = |s: &Shape| nodes.binary_search(s).ok();
        let oracle = brute_force_covers(&sets);
        let mut from_rules = BTreeSet::new();
        for (i, node) in nodes.iter().enumerate() {
            for step in parents(node) {
                from_rules.insert((i, index(&step.target).ok_or("parent outside enumeration")?));
            }
            for step in children(node) {
                let j = index(&step.target).ok_or("child outside enumeration")?;
                ensure(oracle.contains(&(j, i)), || {
                    format!("spurious child {} of {node}", step.target)
                })?;
                from_rules.insert((j, i));
            }
        }
        let diff = oracle.symmetric_difference(&from_rules).count();
        ensure(diff == 0, || format!("p={p}: {diff} discrepancies"))?;
        edges_total += oracle.len();
    }
    Ok(format!(
        "{edges_total} cover pairs for p=1..5, 0 discrepancies"
    ))
}

fn worked_example() -> Check {
    let nodes: Vec<Shape> = enumerate_all(3).unwrap().collect();
    let sets: Vec<u64> = nodes.iter().map(true_set).collect();
    let edges = brute_force_covers(&sets).len();
    ensure(nodes.len() == 9 && edges == 12, || {
        format!("{} nodes, {edges} edges", nodes.len())
    })?;
    let s = |t: &str| t.parse::<Shape>().unwrap();
    let center = s("{{1},{2,3}}");
    let slice = HasseSlice::of(&center);
    let ps: Vec<Shape> = slice.parents.iter().map(|x| x.target.clone()).collect();
    let cs: Vec<Shape> = slice.children.iter().map(|x| x.target.clone()).collect();
    ensure(ps == [s("{{1},{2},{3}}")], || format!("parents {ps:?}"))?;
    ensure(cs == [s("{{1,2},{1,3},{2,3}}")], || {
        format!("children {cs:?}")
    })?;
    let mut sib = siblings(&center);
    sib.sort();
    ensure(sib == [s("{{2},{1,3}}"), s("{{3},{1,2}}")], || {
        format!("siblings {sib:?}")
    })?;
    Ok("9 nodes, 12 edges, worked example matches".into())
}

fn edge_deltas() -> Check {
    let mut n = 0;
    for p in 1..=5 {
        for node in enumerate_all(p).unwrap() {
            let below = true_set(&node);
            for step in parents(&node) {
                let above = true_set(&step.target);
                let delta = (above & !below).count_ones();
                ensure(below & !above == 0, || {
                    format!("{node} not below {}", step.target)
                })?;
                let want = if step.rule == ParentRule::R3 { 2 } else { 1 };
                ensure(delta == want, || {
                    format!("{node} -> {} by {}: delta {delta}", step.target, step.rule)
                })?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} edges"))
}

fn transition_properties() -> Check {
    let mut checked = 0;
    for p in 1..=4 {
        let shapes: Vec<Shape> = enumerate_all(p).unwrap().collect();
        let sets: Vec<u64> = shapes.iter().map(true_set).collect();
        for case in CASES {
            let n = dimension(p, case);
            let half = 1u64 << (n - 1);
            for signs in sign_patterns(p, case) {
                let ctx = context(&signs, case);
                let bounds = transition_bounds(&ctx, n);
                let counts: Vec<TransitionCounts> = shapes
                    .iter()
                    .map(|f| oracle_counts(f, &signs, case))
                    .collect();
                for ((f, c), t) in shapes.iter().zip(&counts).zip(&sets) {
                    let lib = transition_counts(f, &ctx, n).unwrap();
                    ensure(lib == *c, || {
                        format!("{f} {signs:?}: library {lib:?}, oracle {c:?}")
                    })?;
                    let total = c.total();
                    let ok = match case {
                        Case::None => total == half,
                        Case::Pos => total < half,
                        Case::Neg => half < total && total <= 2 * half,
                    };
                    ensure(ok, || format!("{case:?} {f} {signs:?}: total {total}"))?;
                    ensure(bounds.admits(c), || {
                        format!("{case:?} {f} {signs:?}: {c:?} outside bounds")
                    })?;
                    if case == Case::None {
                        let true_states = t.count_ones() as u64;
                        ensure(
                            c.increasing == true_states && c.decreasing == half - true_states,
                            || format!("{f} {signs:?}: {c:?} with |T| = {true_states}"),
                        )?;
                        if 4 * true_states == 2 * half {
                            ensure(c.increasing == c.decreasing, || {
                                format!("balanced {f} unbalanced")
                            })?;
                        }
                    }
                    checked += 1;
                }
                // ordered functions order their counts when not auto-regulated
                if case == Case::None {
                    for (i, a) in sets.iter().enumerate() {
                        for (j, b) in sets.iter().enumerate() {
                            if a & !b == 0 {
                                ensure(
                                    counts[i].increasing <= counts[j].increasing
                                        && counts[i].decreasing >= counts[j].decreasing,
                                    || {
                                        format!(
                                            "{} below {} but counts unordered",
                                            shapes[i], shapes[j]
                                        )
                                    },
                                )?;
                            }
                        }
                    }
                }
                // every bound is attained by some function (a sole positive
                // self-regulator has no room to move)
                if p > 1 || case == Case::Neg {
                    for dir in [
                        |c: &TransitionCounts| c.increasing,
                        |c: &TransitionCounts| c.decreasing,
                    ] {
                        let hi = counts.iter().map(dir).max().unwrap();
                        let lo = counts.iter().map(dir).min().unwrap();
                        ensure(hi == bounds.incr_upper && lo == bounds.incr_lower, || {
                            format!("{case:?} {signs:?}: range {lo}..={hi} vs {bounds:?}")
                        })?;
                    }
                }
                let ((sup, inf), (s, i)) = (
                    endpoint_counts(case, half),
                    (
                        oracle_counts(&Shape::sup(p).unwrap(), &signs, case),
                        oracle_counts(&Shape::inf(p).unwrap(), &signs, case),
                    ),
                );
                ensure(
                    (s.increasing, s.decreasing) == sup && (i.increasing, i.decreasing) == inf,
                    || format!("{case:?} {signs:?}: sup {s:?}, inf {i:?}"),
                )?;
            }
        }
    }
    Ok(format!("{checked} (function, signs) pairs"))
}

fn maximal_functionality() -> Check {
    for n in 2..=5 {
        for case in [Case::Pos, Case::Neg] {
            for signs in sign_patterns(n, case) {
                let ctx = context(&signs, case);
                let star = f_star(&ctx).unwrap();
                let c = oracle_counts(&star, &signs, case);
                let half = 1u64 << (n - 1);
                let ok = match case {
                    Case::Neg => c.decreasing == half && c.increasing == half - 1,
                    _ => c.total() == 1 && c.decreasing == 1,
                };
                ensure(ok, || {
                    format!("n={n} {case:?} {signs:?}: f* = {star}, {c:?}")
                })?;
            }
        }
    }
    Ok("n = 2..5, both self signs, every sign pattern".into())
}

fn levels() -> Check {
    let mut n = 0;
    for p in 1..=4 {
        let nodes: Vec<Shape> = enumerate_all(p).unwrap().collect();
        let sets: Vec<u64> = nodes.iter().map(true_set).collect();
        for (a, b) in brute_force_covers(&sets) {
            let (lo, hi) = (&nodes[a], &nodes[b]);
            ensure(level_leq(&lo.level(), &hi.level()), || {
                format!("{lo} -> {hi}")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} edges"))
}

fn toy_model() -> Check {
    let bn = parse_model(include_str!("../../../data/toy.bnet")).map_err(|e| e.to_string())?;
    // best of several builds, so a busy machine does not decide the timing
    let mut elapsed = Duration::MAX;
    for _ in 0..5 {
        let start = Instant::now();
        let _ = (stg_async(&bn).unwrap(), stg_sync(&bn).unwrap());
        elapsed = elapsed.min(start.elapsed());
    }
    let g = stg_async(&bn).unwrap();
    let sync = stg_sync(&bn).unwrap();
    let st = |t: &str| t.parse::<State>().unwrap();
    // independent fixed points by direct evaluation
    let fixed: BTreeSet<State> = (0..8u64)
        .map(|b| State::new(b, 3))
        .filter(|&s| bn.is_stable(s))
        .collect();
    let stable: BTreeSet<State> = g.stable_states().into_iter().collect();
    let want: BTreeSet<State> = ["001", "101", "110"].map(st).into();
    ensure(stable == want && fixed == want, || {
        format!("stable {stable:?}")
    })?;
    let succ: BTreeSet<State> = g.successors(st("000")).into_iter().collect();
    ensure(succ == ["010", "001"].map(st).into(), || {
        format!("async successors of 000: {succ:?}")
    })?;
    let mut cycles: Vec<BTreeSet<State>> = attractors(&sync)
        .into_iter()
        .filter(|a| a.len() > 1)
        .map(|a| a.into_iter().collect())
        .collect();
    cycles.sort();
    let want_cycles: Vec<BTreeSet<State>> =
        vec![["000", "011"].map(st).into(), ["100", "111"].map(st).into()];
    ensure(cycles == want_cycles, || format!("sync cycles {cycles:?}"))?;
    for c in &want_cycles {
        for &s in c {
            ensure(
                c.contains(&bn.sync_successor(s)) && bn.sync_successor(s) != s,
                || format!("{s} not on a 2-cycle"),
            )?;
        }
    }
    ensure(elapsed < Duration::from_millis(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("graphs built in {elapsed:?}"))
}

fn th_table() -> Check {
    let bn = th_model();
    let table = th_neighbor_table();
    let parse =
        |name: &str, t: &str| parse_function_for(&bn, bn.index_of(name).unwrap(), t).unwrap();
    let sorted = |mut v: Vec<Shape>| {
        v.sort();
        v
    };
    let listed: &[(&str, &[&str], &[&str])] = &[
        (
            "GATA3",
            &[
                "!Tbet & STAT6 & GATA3",
                "(!Tbet & STAT6) | (!Tbet & GATA3) | (STAT6 & GATA3)",
            ],
            &[
                "(!Tbet & STAT6) | (STAT6 & GATA3)",
                "(!Tbet & GATA3) | (STAT6 & GATA3)",
            ],
        ),
        (
            "Tbet",
            &[
                "!GATA3 & STAT1 & Tbet",
                "(!GATA3 & STAT1) | (!GATA3 & Tbet) | (STAT1 & Tbet)",
            ],
            &[
                "(!GATA3 & STAT1) | (STAT1 & Tbet)",
                "(!GATA3 & Tbet) | (STAT1 & Tbet)",
            ],
        ),
        ("IL4", &["GATA3 | !STAT1"], &[]),
        ("IL4R", &["IL4 | !SOCS1"], &[]),
        ("IL12R", &["!STAT6 | IL12"], &[]),
        ("IL18R", &["!STAT6 | IL18"], &[]),
        ("JAK1", &["IFNgR | !SOCS1"], &[]),
        ("SOCS1", &["STAT1 & Tbet"], &[]),
        ("STAT1", &["JAK1 & IFNbR"], &[]),
        ("STAT4", &["!GATA3 | IL12R"], &[]),
    ];
    for (name, direct, starred) in listed {
        let row = table
            .iter()
            .find(|r| r.component == *name)
            .ok_or(format!("no row {name}"))?;
        let d = sorted(direct.iter().map(|t| parse(name, t)).collect());
        let s = sorted(starred.iter().map(|t| parse(name, t)).collect());
        ensure(sorted(row.direct()) == d, || {
            format!("{name}: direct neighbors differ")
        })?;
        ensure(sorted(row.siblings.clone()) == s, || {
            format!("{name}: siblings differ")
        })?;
    }
    let ifng = table
        .iter()
        .find(|r| r.component == "IFNg")
        .ok_or("no IFNg row")?;
    ensure(ifng.function_count == 6894, || {
        format!("IFNg NbFun {}", ifng.function_count)
    })?;
    ensure(ifng.siblings.len() == 10, || {
        format!("IFNg siblings {}", ifng.siblings.len())
    })?;
    Ok(format!(
        "10 rows match, IFNg: {} + {} + 10 siblings",
        ifng.parents.len(),
        ifng.children.len()
    ))
}

fn deterministic_baseline() -> Check {
    let bn = th_model();
    let tbet = bn.index_of("Tbet").unwrap();
    let mut s = th_initial_state(&bn).unwrap();
    for step in 0..1000 {
        let next = bn.sync_successor(s);
        if next == s {
            ensure(s.get(tbet), || format!("stable state {s} has Tbet off"))?;
            let report = simulate(
                &ProbabilisticNetwork::deterministic(bn.clone()),
                &SimulationConfig::new(s, 1, 0),
            )
            .map_err(|e| e.to_string())?;
            ensure(report.outcomes[0].phenotype == Some(Phenotype::Th1), || {
                "not classified Th1".into()
            })?;
            return Ok(format!("Th1 fixed point after {step} steps"));
        }
        s = next;
    }
    Err("no fixed point within 1000 steps".into())
}

fn run(e: Experiment) -> Result<[f64; 3], String> {
    let bn = th_model();
    let pnet = e.network(&bn).map_err(|e| e.to_string())?;
    let config = SimulationConfig::new(th_initial_state(&bn).unwrap(), 1000, 1);
    let report = simulate(&pnet, &config).map_err(|e| e.to_string())?;
    Ok([Phenotype::Th0, Phenotype::Th1, Phenotype::Th2].map(|p| report.proportion(p) * 100.0))
}

fn stochastic() -> Check {
    let [_, c1, _] = run(Experiment::C)?;
    ensure(c1 >= 99.0, || format!("C: Th1 {c1:.1}%"))?;
    let [d0, d1, d2] = run(Experiment::D)?;
    ensure(
        (8.7..=18.7).contains(&d0) && (d1 - (100.0 - d0)).abs() < 1e-9 && d2 == 0.0,
        || format!("D: {d0:.1}/{d1:.1}/{d2:.1}"),
    )?;
    let [_, _, e2] = run(Experiment::E)?;
    ensure((0.0..=9.6).contains(&e2), || format!("E: Th2 {e2:.1}%"))?;
    let [_, _, f2] = run(Experiment::F)?;
    ensure((21.7..=31.7).contains(&f2), || format!("F: Th2 {f2:.1}%"))?;
    Ok(format!(
        "C Th1 {c1:.1}%, D Th0 {d0:.1}%, E Th2 {e2:.1}%, F Th2 {f2:.1}%"
    ))
}

fn advisory() -> Vec<String> {
    [Experiment::A, Experiment::B]
        .into_iter()
        .map(|e| match run(e) {
            Ok([t0, t1, t2]) => {
                let ok = t0 > 0.0 && t1 > 0.0 && t2 > 0.0 && t2 > t1 && t1 > t0;
                format!(
                    "{} 11 advisory {e}: Th0 {t0:.1}% Th1 {t1:.1}% Th2 {t2:.1}% (wants all present, Th2 > Th1 > Th0)",
                    if ok { "PASS" } else { "FAIL" }
                )
            }
            Err(err) => format!("FAIL 11 advisory {e}: {err}"),
        })
        .collect()
}

fn walks() -> Check {
    let mut traces = 0;
    for p in [5, 6] {
        for case in CASES {
            let n = dimension(p, case);
            let half = 1u64 << (n - 1);
            let (sup, inf) = endpoint_counts(case, half);
            for seed in 0..12u64 {
                // rotate through sign patterns with the seed
                let patterns = sign_patterns(p, case);
                let signs = &patterns[(seed as usize * 7) % patterns.len()];
                let ctx = context(signs, case);
                let path = random_path(p, seed).unwrap();
                let trace = path_trace(&ctx, n, &path).unwrap();
                ensure(
                    path.first().unwrap().is_inf() && path.last().unwrap().is_sup(),
                    || "path endpoints".into(),
                )?;
                for (f, c) in path.iter().zip(&trace) {
                    let o = oracle_counts(f, signs, case);
                    ensure(*c == o, || {
                        format!("p={p} {case:?} {f}: trace {c:?}, oracle {o:?}")
                    })?;
                    if case == Case::None {
                        ensure(c.total() == half, || {
                            format!("p={p} total {} at {f}", c.total())
                        })?;
                    }
                }
                for w in trace.windows(2) {
                    ensure(
                        w[0].increasing <= w[1].increasing && w[0].decreasing >= w[1].decreasing,
                        || format!("p={p} {case:?} seed {seed}: {:?} then {:?}", w[0], w[1]),
                    )?;
                }
                let (first, last) = (trace[0], *trace.last().unwrap());
                ensure(
                    (first.increasing, first.decreasing) == inf
                        && (last.increasing, last.decreasing) == sup,
                    || format!("p={p} {case:?}: endpoints {first:?} {last:?}"),
                )?;
                traces += 1;
            }
        }
    }
    Ok(format!("{traces} traces"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "counting", counting),
        (2, "Hasse oracle equivalence p=1..5", hasse_oracle),
        (3, "p=3 diagram and worked example", worked_example),
        (4, "true-state deltas on every edge", edge_deltas),
        (
            5,
            "transition totals, identities and bounds",
            transition_properties,
        ),
        (
            6,
            "maximally functional auto-regulation",
            maximal_functionality,
        ),
        (7, "levels along edges", levels),
        (8, "toy model dynamics", toy_model),
        (9, "Th neighbor table", th_table),
        (10, "deterministic Th baseline", deterministic_baseline),
        (11, "stochastic experiments C-F", stochastic),
        (12, "ascending walk envelope p=5,6", walks),
    ];
    let mut failed = BTreeSet::new();
    for (id, name, check) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail} [{secs:.2}s]"),
            Err(why) => {
                let known = if KNOWN_FAILURES.contains(&id) {
                    " (known)"
                } else {
                    ""
                };
                println!("FAIL {id:>2} {name}{known}: {why} [{secs:.2}s]");
                failed.insert(id);
            }
        }
        if id == 11 {
            for line in advisory() {
                println!("{line}");
            }
        }
    }
    let known: BTreeSet<u8> = KNOWN_FAILURES.iter().copied().collect();
    if failed == known {
        println!(
            "acceptance: {} passed, {} known failure(s)",
            12 - failed.len(),
            failed.len()
        );
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing set {failed:?} differs from known {known:?}");
        ExitCode::FAILURE
    }
}
