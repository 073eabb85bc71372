//! Machine check of the known formulas and outcome tables.
//!
//! Every check produces one [`CheckRecord`]. Table checks run on named
//! families; sweep checks aggregate one record per claim and order over all
//! connected labeled graphs; sampled checks draw from a seeded generator.
//! Groups run on a rayon pool whose size can be set with `MBSR_WORKERS`;
//! record order does not depend on scheduling.

use crate::enumerate::{all_graphs, connected_classes, connected_graphs, random_connected_graph, random_subset, random_tree};
use crate::families::{
    complete, complete_multipartite, cycle, is_tree, path, petersen, spider, star, tree_stats,
};
use crate::game::{
    is_pairing_vertex_cover, is_quasi_pairing_vertex_cover, outcome_rg_exact_with_limit, outcome_sr_core,
    outcome_srg_classifier, outcome_srg_full_board,
};
use crate::graph::{canonical_form, classify_shape, Graph};
use crate::products::{
    cartesian, corona, direct, gamma_pairs, modular, modular_diameter, modular_sr_by_theorem,
    is_union_of_two_cliques,
};
use crate::resolving::{
    min_vertex_cover_with_limit, strong_resolving_graph, strong_resolving_graph_with, strongly_resolves,
    twin_free_clique_number_with_limit, twin_partition, SrGraph,
};
use crate::{Limits, Outcome, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt::Display;
use std::time::Instant;

/// Environment variable that fixes the number of worker threads.
pub const WORKERS_ENV: &str = "MBSR_WORKERS";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub claim_id: String,
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub millis: f64,
}

impl CheckRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest order of the exhaustive labeled-graph sweeps.
    pub max_n: usize,
    /// Number of random connected graphs of order 7 to 9 in the sampled
    /// classifier sweep.
    pub samples: usize,
    pub seed: u64,
    /// `exact` bounds each game board (a single SR component when the core
    /// is split); the product tables need 25.
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 6,
            samples: 10_000,
            seed: 2024,
            limits: Limits {
                exact: 32,
                ..Limits::default()
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub total: usize,
    pub failed: usize,
}

pub fn summarize(records: &[CheckRecord]) -> Summary {
    Summary {
        total: records.len(),
        failed: records.iter().filter(|r| !r.pass).count(),
    }
}

/// Worker count from `MBSR_WORKERS`, if set to a positive integer.
pub fn workers_from_env() -> Option<usize> {
    std::env::var(WORKERS_ENV).ok()?.trim().parse().ok().filter(|&k| k > 0)
}

/// Runs every check group.
pub fn run_verification(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = workers_from_env() {
        builder = builder.num_threads(k);
    }
    let pool = builder.build().expect("thread pool");
    pool.install(|| {
        let groups: Vec<fn(&VerifyConfig) -> Vec<CheckRecord>> = vec![
            sdim_formulas,
            outcome_tables,
            corona_tables,
            cartesian_tables,
            modular_tables,
            witness_tables,
            exhaustive_sweep,
            sampled_sweep,
        ];
        groups.par_iter().map(|group| group(cfg)).collect::<Vec<_>>().concat()
    })
}

fn record(
    claim: &str,
    instance: impl Into<String>,
    expected: impl Display,
    run: impl FnOnce() -> Result<(String, bool)>,
) -> CheckRecord {
    let start = Instant::now();
    let (computed, pass) = match run() {
        Ok(out) => out,
        Err(e) => (format!("error: {e}"), false),
    };
    CheckRecord {
        claim_id: claim.to_string(),
        instance: instance.into(),
        expected: expected.to_string(),
        computed,
        pass,
        millis: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn equal<T: Display + PartialEq>(expected: T, computed: T) -> (String, bool) {
    let pass = expected == computed;
    (computed.to_string(), pass)
}

fn sdim_of(g: &Graph, limits: &Limits) -> Result<usize> {
    let sr = strong_resolving_graph(g)?;
    Ok(min_vertex_cover_with_limit(sr.core(), limits.cover)?.0)
}

/// Exact and classifier outcome, as `"X"` when they agree and
/// `"X (classifier Y)"` otherwise.
fn both_outcomes(g: &Graph, limits: &Limits) -> Result<(Outcome, String)> {
    let sr = strong_resolving_graph(g)?;
    let exact = outcome_sr_core(&sr, limits.exact)?;
    let fast = outcome_srg_classifier(&sr)?;
    let text = if exact == fast {
        exact.to_string()
    } else {
        format!("{exact} (classifier {fast})")
    };
    Ok((exact, text))
}

fn outcome_check(claim: &str, instance: impl Into<String>, g: &Graph, expected: Outcome, limits: &Limits) -> CheckRecord {
    record(claim, instance, expected, || {
        let (_, text) = both_outcomes(g, limits)?;
        Ok(equal(expected.to_string(), text))
    })
}

fn one_of_check(
    claim: &str,
    instance: impl Into<String>,
    g: &Graph,
    allowed: &[Outcome],
    limits: &Limits,
) -> CheckRecord {
    let expected: Vec<String> = allowed.iter().map(Outcome::to_string).collect();
    record(claim, instance, expected.join("|"), || {
        let sr = strong_resolving_graph(g)?;
        let exact = outcome_sr_core(&sr, limits.exact)?;
        let fast = outcome_srg_classifier(&sr)?;
        Ok((
            format!("{exact} (classifier {fast})"),
            allowed.contains(&exact) && exact == fast,
        ))
    })
}

fn parts_label(parts: &[usize]) -> String {
    let p: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("K_{{{}}}", p.join(","))
}

/// Part-size vectors (non-increasing) with at least two parts and total in
/// `3..=max_total`.
pub fn multipartite_instances(max_total: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for a in (1..=cap.min(rest)).rev() {
            prefix.push(a);
            extend(rest - a, a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 3..=max_total {
        let mut all = Vec::new();
        extend(total, total, &mut Vec::new(), &mut all);
        out.extend(all.into_iter().filter(|p| p.len() >= 2));
    }
    out
}

/// Expected tables, as closed formulas.
pub mod tables {
    use crate::Outcome;

    pub fn tree_outcome(sigma: usize) -> Outcome {
        match sigma {
            2 => Outcome::Maker,
            3 => Outcome::Next,
            _ => Outcome::Breaker,
        }
    }

    pub fn cycle_outcome(n: usize) -> Outcome {
        match n {
            _ if n.is_multiple_of(2) => Outcome::Maker,
            3 => Outcome::Next,
            _ => Outcome::Breaker,
        }
    }

    pub fn multipartite_sdim(parts: &[usize]) -> usize {
        let n: usize = parts.iter().sum();
        let k = parts.len();
        match parts.iter().filter(|&&a| a == 1).count() {
            0 => n - k,
            s => n - k + s - 1,
        }
    }

    pub fn multipartite_outcome(parts: &[usize]) -> Outcome {
        let s = parts.iter().filter(|&&a| a == 1).count();
        let threes = parts.iter().filter(|&&a| a == 3).count();
        let big = parts.iter().any(|&a| a >= 4);
        if s >= 4 || big || (s == 3 && threes >= 1) || threes >= 2 {
            Outcome::Breaker
        } else if s == 3 || threes == 1 {
            Outcome::Next
        } else {
            Outcome::Maker
        }
    }

    /// `G ⊙ H` with `G` connected of order `n >= 2` and `H` of order `m >= 1`.
    pub fn corona_outcome(n: usize, m: usize) -> Outcome {
        match (n, m) {
            (2, 1) => Outcome::Maker,
            (3, 1) => Outcome::Next,
            _ => Outcome::Breaker,
        }
    }

    pub fn k1_corona_path(n: usize) -> Outcome {
        match n {
            1 | 3 => Outcome::Maker,
            2 | 4 => Outcome::Next,
            _ => Outcome::Breaker,
        }
    }

    pub fn k1_corona_cycle(n: usize) -> Outcome {
        if n == 4 {
            Outcome::Maker
        } else {
            Outcome::Breaker
        }
    }
}

/// `K1 ⊙ H` for disconnected `H`, from the component structure of `H`.
pub fn k1_corona_disconnected_outcome(h: &Graph) -> Outcome {
    let comps = h.components();
    let orders: Vec<usize> = comps.iter().map(Vec::len).collect();
    match comps.len() {
        0 | 1 => panic!("H must be disconnected"),
        2 => {
            let (small, large) = (orders[0].min(orders[1]), orders[0].max(orders[1]));
            if large == 1 {
                return Outcome::Maker;
            }
            if small != 1 {
                return Outcome::Breaker;
            }
            let big = comps.iter().find(|c| c.len() == large).expect("component");
            let (hh, _) = h.induced_subgraph(big).expect("in range");
            let m = hh.n();
            let path3 = m == 3 && hh.m() == 2;
            if m == 2 || path3 || is_h_star(&hh) {
                Outcome::Next
            } else {
                Outcome::Breaker
            }
        }
        3 if orders.iter().all(|&k| k == 1) => Outcome::Next,
        _ => Outcome::Breaker,
    }
}

/// Connected, order `m >= 4`, every degree `m-2` or `m-1`, at most two of
/// degree `m-1`.
pub fn is_h_star(h: &Graph) -> bool {
    let m = h.n();
    m >= 4
        && h.is_connected()
        && (0..m).all(|v| h.degree(v) + 2 >= m)
        && (0..m).filter(|&v| h.degree(v) == m - 1).count() <= 2
}

/// `K_m` minus a matching of `k` edges.
pub fn complete_minus_matching(m: usize, k: usize) -> Graph {
    assert!(2 * k <= m);
    Graph::from_fn(m, |u, v| !(u / 2 == v / 2 && v < 2 * k))
}

fn sdim_formulas(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let l = &cfg.limits;
    let mut out = Vec::new();
    for n in 2..=12 {
        out.push(record("sdim/path", format!("P{n}"), 1, || Ok(equal(1, sdim_of(&path(n), l)?))));
        out.push(record("sdim/complete", format!("K{n}"), n - 1, || {
            Ok(equal(n - 1, sdim_of(&complete(n), l)?))
        }));
    }
    for n in 3usize..=14 {
        let expected = n.div_ceil(2);
        out.push(record("sdim/cycle", format!("C{n}"), expected, || {
            Ok(equal(expected, sdim_of(&cycle(n), l)?))
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..50 {
        let n = rng.gen_range(2..=14);
        let t = random_tree(n, &mut rng);
        let sigma = (0..n).filter(|&v| t.degree(v) == 1).count();
        out.push(record("sdim/tree-leaves", describe(&t), sigma - 1, || {
            Ok(equal(sigma - 1, sdim_of(&t, l)?))
        }));
    }
    out.push(record("sdim/petersen", "Petersen", 8, || Ok(equal(8, sdim_of(&petersen(), l)?))));
    for parts in multipartite_instances(10) {
        let expected = tables::multipartite_sdim(&parts);
        out.push(record("sdim/multipartite", parts_label(&parts), expected, || {
            Ok(equal(expected, sdim_of(&complete_multipartite(&parts)?, l)?))
        }));
    }
    out
}

/// Spiders with `sigma` legs of lengths 1 to 3.
fn spiders(sigma: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut legs = vec![1usize; sigma];
    loop {
        out.push(legs.clone());
        // next non-increasing vector over {1,2,3}
        match (0..sigma).rev().find(|&i| legs[i] < 3 && (i == 0 || legs[i] < legs[i - 1])) {
            Some(i) => {
                legs[i] += 1;
                for x in legs.iter_mut().skip(i + 1) {
                    *x = 1;
                }
            }
            None => return out,
        }
    }
}

fn outcome_tables(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let l = &cfg.limits;
    let mut out = Vec::new();
    for n in 2..=8 {
        out.push(outcome_check("outcome/tree", format!("P{n}"), &path(n), Outcome::Maker, l));
    }
    for sigma in 3..=6 {
        for legs in spiders(sigma) {
            let g = spider(&legs).expect("legs");
            out.push(outcome_check(
                "outcome/tree",
                format!("spider{legs:?}"),
                &g,
                tables::tree_outcome(sigma),
                l,
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let mut taken = 0;
    while taken < 40 {
        let t = random_tree(rng.gen_range(4..=14), &mut rng);
        let sigma = tree_stats(&t).expect("tree").sigma;
        if sigma <= 6 {
            taken += 1;
            out.push(outcome_check("outcome/tree", describe(&t), &t, tables::tree_outcome(sigma), l));
        }
    }
    for n in 3..=14 {
        let claim = if n % 2 == 0 { "outcome/cycle-even" } else { "outcome/cycle-odd" };
        out.push(outcome_check(claim, format!("C{n}"), &cycle(n), tables::cycle_outcome(n), l));
    }
    out.push(outcome_check("outcome/petersen", "Petersen", &petersen(), Outcome::Breaker, l));
    for parts in multipartite_instances(10) {
        let g = complete_multipartite(&parts).expect("parts");
        out.push(outcome_check(
            "outcome/multipartite",
            parts_label(&parts),
            &g,
            tables::multipartite_outcome(&parts),
            l,
        ));
    }
    out
}

/// One representative per isomorphism class among all graphs of order `n`.
fn graph_classes(n: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    all_graphs(n)
        .filter(|g| seen.insert(canonical_form(g).expect("small graph")))
        .collect()
}

fn corona_tables(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let l = &cfg.limits;
    let mut out = Vec::new();
    for n in 2..=4 {
        for g in connected_classes(n) {
            for m in 1..=3 {
                for h in graph_classes(m) {
                    out.push(outcome_check(
                        "corona/connected-base",
                        format!("{} ⊙ {}", describe(&g), describe(&h)),
                        &corona(&g, &h),
                        tables::corona_outcome(n, m),
                        l,
                    ));
                }
            }
        }
    }
    let k1 = complete(1);
    for m in 2..=6 {
        for h in graph_classes(m).into_iter().filter(|h| !h.is_connected()) {
            out.push(outcome_check(
                "corona/k1-disconnected",
                format!("K1 ⊙ {}", describe(&h)),
                &corona(&k1, &h),
                k1_corona_disconnected_outcome(&h),
                l,
            ));
        }
    }
    for m in 4usize..=9 {
        // K_m minus a matching leaving at most two vertices unmatched
        for k in (m.saturating_sub(2)).div_ceil(2)..=m / 2 {
            let hs = complete_minus_matching(m, k);
            let h = Graph::disjoint_union(&k1, &hs);
            out.push(record(
                "corona/k1-h-star",
                format!("K1 ⊙ (K1 ∪ K{m} minus {k} matching edges)"),
                "degree condition holds, N",
                || {
                    let (o, text) = both_outcomes(&corona(&k1, &h), l)?;
                    let cond = is_h_star(&hs);
                    Ok((
                        format!("degree condition {}, {text}", if cond { "holds" } else { "fails" }),
                        cond && o == Outcome::Next && text == "N",
                    ))
                },
            ));
        }
    }
    for n in 1..=8 {
        out.push(outcome_check(
            "corona/k1-path",
            format!("K1 ⊙ P{n}"),
            &corona(&k1, &path(n)),
            tables::k1_corona_path(n),
            l,
        ));
    }
    for n in 3..=8 {
        out.push(outcome_check(
            "corona/k1-cycle",
            format!("K1 ⊙ C{n}"),
            &corona(&k1, &cycle(n)),
            tables::k1_corona_cycle(n),
            l,
        ));
    }
    for m in 3..=6 {
        for h in connected_classes(m) {
            let diam = h.distances().diameter();
            let allowed: &[Outcome] = match diam {
                2 => continue,
                3 => &[Outcome::Next, Outcome::Breaker],
                _ => &[Outcome::Breaker],
            };
            out.push(one_of_check(
                "corona/k1-connected-diameter",
                format!("K1 ⊙ {} (diameter {diam})", describe(&h)),
                &corona(&k1, &h),
                allowed,
                l,
            ));
        }
    }
    out
}

/// The SR graph as a graph on all parent vertices.
fn sr_on_parent(sr: &SrGraph) -> Graph {
    let edges = sr.parent_edges();
    Graph::from_fn(sr.parent_n(), |u, v| edges.binary_search(&(u.min(v), u.max(v))).is_ok())
}

/// Factors used for the Cartesian tables.
pub fn cartesian_factors() -> Vec<(&'static str, Graph)> {
    vec![
        ("P3", path(3)),
        ("P4", path(4)),
        ("K3", complete(3)),
        ("K4", complete(4)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("K1,3", star(3)),
    ]
}

fn cartesian_tables(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let l = &cfg.limits;
    let factors = cartesian_factors();
    let mut out = Vec::new();
    for (gn, g) in &factors {
        for (hn, h) in &factors {
            let instance = format!("{gn} □ {hn}");
            let gh = cartesian(g, h);
            out.push(record("cartesian/sr-direct-product", instance.clone(), "equal", || {
                let lhs = sr_on_parent(&strong_resolving_graph(&gh)?);
                let rhs = direct(
                    &sr_on_parent(&strong_resolving_graph(g)?),
                    &sr_on_parent(&strong_resolving_graph(h)?),
                );
                Ok(if lhs == rhs {
                    ("equal".into(), true)
                } else {
                    ("different".into(), false)
                })
            }));
            let matchings = strong_resolving_graph(g).map(|s| s.core().max_degree() <= 1).unwrap_or(false)
                && strong_resolving_graph(h).map(|s| s.core().max_degree() <= 1).unwrap_or(false);
            let expected = if matchings { Outcome::Maker } else { Outcome::Breaker };
            out.push(outcome_check("cartesian/outcome", instance, &gh, expected, l));
        }
    }
    for (gn, g) in &factors {
        let g_matching = strong_resolving_graph(g).map(|s| s.core().max_degree() <= 1).unwrap_or(false);
        for n in 3..=4 {
            out.push(outcome_check(
                "cartesian/complete-factor",
                format!("{gn} □ K{n}"),
                &cartesian(g, &complete(n)),
                Outcome::Breaker,
                l,
            ));
        }
        for n in 3..=6 {
            let expected = if n % 2 == 0 && g_matching { Outcome::Maker } else { Outcome::Breaker };
            out.push(outcome_check(
                "cartesian/cycle-factor",
                format!("{gn} □ C{n}"),
                &cartesian(g, &cycle(n)),
                expected,
                l,
            ));
        }
        for legs in [vec![1, 1, 1], vec![2, 1, 1], vec![1, 1, 1, 1]] {
            let t = spider(&legs).expect("legs");
            out.push(outcome_check(
                "cartesian/tree-factor",
                format!("{gn} □ spider{legs:?}"),
                &cartesian(g, &t),
                Outcome::Breaker,
                l,
            ));
        }
    }
    out
}

fn modular_tables(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let l = &cfg.limits;
    let mut out = Vec::new();
    let shape_and_outcome = |g: &Graph, h: &Graph| -> Result<String> {
        let direct_sr = strong_resolving_graph(&modular(g, h))?;
        let theorem = modular_sr_by_theorem(g, h)?;
        let same = theorem.parent_edges() == direct_sr.parent_edges();
        let o = outcome_sr_core(&direct_sr, l.exact)?;
        let c = outcome_srg_classifier(&direct_sr)?;
        Ok(format!(
            "{}, {o}{}{}",
            classify_shape(direct_sr.core()),
            if c == o { String::new() } else { format!(" (classifier {c})") },
            if same { "" } else { ", characterization differs" }
        ))
    };
    out.push(record("modular/sr-c4-c6", "C4 ◇ C6", "12K2, M", || {
        Ok(equal("12K2, M".to_string(), shape_and_outcome(&cycle(4), &cycle(6))?))
    }));
    out.push(record("modular/sr-cop5-p5", "complement(P5) ◇ P5", "P5 ∪ 10K2, N", || {
        Ok(equal(
            "P5 ∪ 10K2, N".to_string(),
            shape_and_outcome(&path(5).complement(), &path(5))?,
        ))
    }));
    out.push(outcome_check("modular/p4-p4", "P4 ◇ P4", &modular(&path(4), &path(4)), Outcome::Breaker, l));

    let factors: Vec<Graph> = (3..=4)
        .flat_map(connected_classes)
        .filter(|g| !g.is_complete())
        .chain([cycle(5), path(5), cycle(6)])
        .collect();
    for g in &factors {
        for h in &factors {
            if is_union_of_two_cliques(g) && is_union_of_two_cliques(h) {
                continue;
            }
            let instance = format!("{} ◇ {}", describe(g), describe(h));
            out.push(record("modular/sr-characterization", instance.clone(), "equal", || {
                let direct_sr = strong_resolving_graph(&modular(g, h))?;
                let theorem = modular_sr_by_theorem(g, h)?;
                Ok(if theorem.parent_edges() == direct_sr.parent_edges() {
                    ("equal".into(), true)
                } else {
                    ("different".into(), false)
                })
            }));
            if g.n() * h.n() <= 16 && modular_diameter(g, h).ok() == Some(2) {
                out.push(outcome_check("modular/diameter-two", instance.clone(), &modular(g, h), Outcome::Breaker, l));
            }
            if !gamma_pairs(g).is_empty() && !gamma_pairs(h).is_empty() {
                out.push(outcome_check("modular/both-gamma-pairs", instance, &modular(g, h), Outcome::Breaker, l));
            }
        }
    }
    for n in 2..=4 {
        for g in connected_classes(n) {
            for t in 2..=3 {
                out.push(outcome_check(
                    "modular/complete-factor",
                    format!("{} ◇ K{t}", describe(&g)),
                    &modular(&g, &complete(t)),
                    Outcome::Breaker,
                    l,
                ));
            }
        }
    }
    let with_two_universal: Vec<Graph> = (3..=4)
        .flat_map(connected_classes)
        .filter(|g| (0..g.n()).filter(|&v| g.is_universal(v)).count() >= 2)
        .collect();
    let far: Vec<Graph> = (4..=5)
        .flat_map(connected_classes)
        .filter(|h| h.distances().diameter() >= 3)
        .collect();
    for g in &with_two_universal {
        for h in &far {
            out.push(outcome_check(
                "modular/universal-and-far",
                format!("{} ◇ {}", describe(g), describe(h)),
                &modular(g, h),
                Outcome::Breaker,
                l,
            ));
        }
    }
    out
}

fn witness_tables(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let l = &cfg.limits;
    let mut out = Vec::new();
    let pair = |g: &Graph| -> Result<String> {
        let o_sr = outcome_sr_core(&strong_resolving_graph(g)?, l.exact)?;
        let o_r = outcome_rg_exact_with_limit(g, l.dim)?;
        Ok(format!("({o_sr},{o_r})"))
    };
    let mut witnesses: Vec<(String, Graph, &str)> = Vec::new();
    for n in 2..=8 {
        witnesses.push((format!("P{n}"), path(n), "(M,M)"));
    }
    witnesses.push(("K3".into(), complete(3), "(N,N)"));
    witnesses.push(("K1,3".into(), star(3), "(N,N)"));
    for x in 4..=6 {
        witnesses.push((format!("K1,{x}"), star(x), "(B,B)"));
    }
    for legs in [vec![2, 2, 1], vec![2, 2, 2], vec![3, 2, 1]] {
        witnesses.push((format!("spider{legs:?}"), spider(&legs).expect("legs"), "(N,M)"));
    }
    for legs in [vec![2, 2, 2, 1], vec![2, 2, 2, 2], vec![2, 2, 2, 2, 1]] {
        witnesses.push((format!("spider{legs:?}"), spider(&legs).expect("legs"), "(B,M)"));
    }
    for legs in [vec![2, 1, 1, 1], vec![2, 2, 1, 1, 1]] {
        witnesses.push((format!("spider{legs:?}"), spider(&legs).expect("legs"), "(B,N)"));
    }
    for (name, g, expected) in witnesses {
        out.push(record("order/witness", name, expected, || Ok(equal(expected.to_string(), pair(&g)?))));
    }
    for n in 4..=10 {
        let family = [
            (path(n), Outcome::Maker),
            (spider(&[n - 3, 1, 1]).expect("legs"), Outcome::Next),
            (complete(n), Outcome::Breaker),
        ];
        for (g, o) in family {
            out.push(outcome_check("realization/order-n", format!("{} (order {n})", describe(&g)), &g, o, l));
        }
    }
    out
}

/// Facts gathered for one connected labeled graph in the sweep.
#[derive(Debug, Clone)]
struct Facts {
    n: usize,
    exact: Outcome,
    classifier: Outcome,
    full_board: Outcome,
    o_r: Outcome,
    sdim: usize,
    min_strong_set: usize,
    sets_match_covers: bool,
    core_max_degree: usize,
    pairing: bool,
    quasi_pairing: bool,
    is_path: bool,
    is_complete: bool,
    diameter: u32,
    twin_free_clique: Option<usize>,
    twins_are_mmd: bool,
}

fn members(mask: u64) -> Vec<usize> {
    crate::graph::bits(mask).collect()
}

/// Searches all sets of disjoint pairs of core vertices for a (quasi-)
/// pairing vertex cover. `extra` is the vertex claimed first.
fn find_pairing(sr: &SrGraph, extra: Option<usize>) -> Result<bool> {
    fn search(
        sr: &SrGraph,
        used: &mut Vec<bool>,
        pairs: &mut Vec<(usize, usize)>,
        extra: Option<usize>,
    ) -> Result<bool> {
        let n = used.len();
        let Some(u) = (0..n).find(|&u| !used[u]) else {
            return match extra {
                Some(v) => is_quasi_pairing_vertex_cover(sr, pairs, v),
                None => is_pairing_vertex_cover(sr, pairs),
            };
        };
        used[u] = true;
        let mut found = search(sr, used, pairs, extra)?;
        for v in (u + 1)..n {
            if found {
                break;
            }
            if !used[v] {
                used[v] = true;
                pairs.push((u, v));
                found = search(sr, used, pairs, extra)?;
                pairs.pop();
                used[v] = false;
            }
        }
        // leave `used[u]` set only while it is in the caller's prefix
        used[u] = false;
        Ok(found)
    }
    let n = sr.core().n();
    let mut used = vec![false; n];
    if let Some(v) = extra {
        used[v] = true;
    }
    search(sr, &mut used, &mut Vec::new(), extra)
}

fn facts(g: &Graph, limits: &Limits) -> Result<Facts> {
    let n = g.n();
    let d = g.distances();
    let sr = strong_resolving_graph_with(g, &d);
    let core = sr.core();
    let exact = outcome_sr_core(&sr, limits.exact)?;
    let classifier = outcome_srg_classifier(&sr)?;
    let full_board = outcome_srg_full_board(g, limits.exact)?;
    let o_r = outcome_rg_exact_with_limit(g, limits.dim.min(limits.exact))?;
    let sdim = min_vertex_cover_with_limit(core, limits.cover)?.0;

    let edges = sr.parent_edges();
    let mut min_strong_set = n;
    let mut sets_match_covers = true;
    for mask in 0u64..1 << n {
        let strong = strongly_resolves(&d, &members(mask));
        let covers = edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1);
        sets_match_covers &= strong == covers;
        if strong {
            min_strong_set = min_strong_set.min(mask.count_ones() as usize);
        }
    }

    let pairing = find_pairing(&sr, None)?;
    let mut quasi_pairing = false;
    for v in 0..core.n() {
        if find_pairing(&sr, Some(v))? {
            quasi_pairing = true;
            break;
        }
    }

    let twins = twin_partition(g);
    let twins_are_mmd = twins.non_singleton().all(|block| {
        block.vertices.iter().all(|&u| {
            block
                .vertices
                .iter()
                .all(|&w| u >= w || edges.binary_search(&(u, w)).is_ok())
        })
    });
    let diameter = d.diameter();
    let twin_free_clique = if n >= 4 && (diameter == 2 || sdim + 2 == n) {
        Some(twin_free_clique_number_with_limit(g, limits.exact)?)
    } else {
        None
    };
    Ok(Facts {
        n,
        exact,
        classifier,
        full_board,
        o_r,
        sdim,
        min_strong_set,
        sets_match_covers,
        core_max_degree: core.max_degree(),
        pairing,
        quasi_pairing,
        is_path: is_tree(g) && g.max_degree() <= 2,
        is_complete: g.is_complete(),
        diameter,
        twin_free_clique,
        twins_are_mmd,
    })
}

type Predicate = fn(&Facts) -> bool;

fn sweep_claims() -> Vec<(&'static str, &'static str, Predicate)> {
    vec![
        ("classifier-vs-exact", "classifier equals exact outcome", |f| f.classifier == f.exact),
        ("board-reduction", "full-board outcome equals SR-board outcome", |f| f.full_board == f.exact),
        ("sdim-equals-cover-number", "sdim equals cover number of SR graph", |f| f.sdim == f.min_strong_set),
        ("strong-resolving-sets-are-covers", "every subset strongly resolves iff it covers the SR graph", |f| {
            f.sets_match_covers
        }),
        ("order/sr-le-r", "strong resolving outcome at most resolving outcome", |f| f.exact <= f.o_r),
        ("maker-iff-matching", "outcome M iff SR graph is a matching", |f| {
            (f.exact == Outcome::Maker) == (f.core_max_degree <= 1)
        }),
        ("certificate/pairing", "pairing vertex cover implies M", |f| !f.pairing || f.exact == Outcome::Maker),
        ("certificate/quasi-pairing", "quasi-pairing vertex cover implies M or N", |f| {
            !f.quasi_pairing || f.exact != Outcome::Breaker
        }),
        ("certificate/degree-two", "SR max degree at least 2 implies N or B", |f| {
            f.core_max_degree < 2 || f.exact != Outcome::Maker
        }),
        ("bound/maker-small-sdim", "M implies sdim at most floor(n/2)", |f| {
            f.exact != Outcome::Maker || f.sdim <= f.n / 2
        }),
        ("bound/large-sdim-breaker", "sdim at least ceil(n/2)+1 implies B", |f| {
            f.sdim < f.n.div_ceil(2) + 1 || f.exact == Outcome::Breaker
        }),
        ("sdim-one-iff-path", "sdim 1 iff path", |f| (f.sdim == 1) == f.is_path),
        ("sdim-n-minus-one-iff-complete", "sdim n-1 iff complete", |f| (f.sdim + 1 == f.n) == f.is_complete),
        ("sdim-n-minus-two", "for n >= 4: sdim n-2 iff diameter 2 and twin-free clique number 2", |f| {
            f.n < 4 || (f.sdim + 2 == f.n) == (f.diameter == 2 && f.twin_free_clique == Some(2))
        }),
        ("twins-are-mmd", "distinct twins are MMD", |f| f.twins_are_mmd),
    ]
}

fn exhaustive_sweep(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let claims = sweep_claims();
    let mut out = Vec::new();
    for n in 2..=cfg.max_n {
        let start = Instant::now();
        let graphs: Vec<Graph> = connected_graphs(n).collect();
        let results: Vec<std::result::Result<Facts, String>> = graphs
            .par_iter()
            .map(|g| facts(g, &cfg.limits).map_err(|e| format!("{e} on {}", describe(g))))
            .collect();
        let millis = start.elapsed().as_secs_f64() * 1e3;
        let total = graphs.len();
        for (claim, statement, holds) in &claims {
            let mut ok = 0;
            let mut first_failure: Option<String> = None;
            for (g, r) in graphs.iter().zip(&results) {
                match r {
                    Ok(f) if holds(f) => ok += 1,
                    Ok(_) => {
                        first_failure.get_or_insert_with(|| describe(g));
                    }
                    Err(e) => {
                        first_failure.get_or_insert_with(|| e.clone());
                    }
                }
            }
            let computed = match &first_failure {
                None => format!("{ok}/{total} hold"),
                Some(g) => format!("{ok}/{total} hold; first failure {g}"),
            };
            out.push(CheckRecord {
                claim_id: format!("{claim}/exhaustive"),
                instance: format!("all {total} connected labeled graphs on {n} vertices"),
                expected: format!("{statement}: {total}/{total}"),
                computed,
                pass: ok == total,
                millis,
            });
        }
    }
    out
}

fn sampled_sweep(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let start = Instant::now();
    let limits = cfg.limits;
    let results: Vec<(bool, bool, String)> = (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ i.wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let n = 7 + (i % 3) as usize;
            let g = random_connected_graph(n, &mut rng);
            let d = g.distances();
            let sr = strong_resolving_graph_with(&g, &d);
            let agree = match (outcome_sr_core(&sr, limits.exact), outcome_srg_classifier(&sr)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
            let sets_ok = (0..8).all(|_| {
                let s = random_subset(n, &mut rng);
                strongly_resolves(&d, &s) == sr.is_covered_by(&s)
            });
            (agree, sets_ok, describe(&g))
        })
        .collect();
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let total = results.len();
    let summarize_claim = |claim: &str, statement: &str, pick: fn(&(bool, bool, String)) -> bool| {
        let ok = results.iter().filter(|r| pick(r)).count();
        let first = results.iter().find(|r| !pick(r)).map(|r| r.2.clone());
        CheckRecord {
            claim_id: claim.to_string(),
            instance: format!("{total} random connected graphs on 7 to 9 vertices, seed {}", cfg.seed),
            expected: format!("{statement}: {total}/{total}"),
            computed: match first {
                None => format!("{ok}/{total} hold"),
                Some(g) => format!("{ok}/{total} hold; first failure {g}"),
            },
            pass: ok == total,
            millis,
        }
    };
    vec![
        summarize_claim("classifier-vs-exact/random", "classifier equals exact outcome", |r| r.0),
        summarize_claim(
            "strong-resolving-sets-are-covers/random",
            "sampled sets strongly resolve iff they cover the SR graph",
            |r| r.1,
        ),
    ]
}

/// Compact edge-list description such as `n=4 [0-1 1-2 2-3]`.
pub fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_n: 4,
            samples: 50,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn multipartite_instance_counts() {
        let all = multipartite_instances(4);
        // 3: 2+1, 1+1+1; 4: 3+1, 2+2, 2+1+1, 1+1+1+1
        assert_eq!(all.len(), 6);
        assert!(all.contains(&vec![2, 1, 1]));
    }

    #[test]
    fn h_star_construction() {
        assert!(is_h_star(&cycle(4)));
        assert!(is_h_star(&complete_minus_matching(5, 2)));
        assert!(!is_h_star(&complete_minus_matching(6, 1)));
        assert!(!is_h_star(&complete(4)));
    }

    #[test]
    fn spider_enumeration() {
        assert_eq!(spiders(3).len(), 10);
        assert!(spiders(3).iter().all(|l| l.windows(2).all(|w| w[0] >= w[1])));
    }

    #[test]
    fn sweep_groups_pass_at_small_size() {
        let cfg = small();
        for group in [exhaustive_sweep, sampled_sweep, witness_tables] {
            let records = group(&cfg);
            assert!(!records.is_empty());
            for r in &records {
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn records_are_json_lines() {
        let r = record("x/y", "P3", 1, || Ok(equal(1, 1)));
        let line = r.to_json_line();
        assert!(line.starts_with("{\"claim_id\":\"x/y\""));
        assert!(line.contains("\"pass\":true"));
        assert!(!line.contains('\n'));
    }

    #[test]
    fn errors_become_failures() {
        let r = record("x", "K1", 0, || Ok(equal(0, sdim_of(&complete(1), &Limits::default())?)));
        assert!(!r.pass);
        assert!(r.computed.starts_with("error:"));
    }
}
