//! Modular-product structure checked against direct computation on the
//! constructed product, for all connected non-complete factors of order 3–5.

use mbsr_core::enumerate::connected_classes;
use mbsr_core::products::{
    adjacent_twins_modular, decode, is_union_of_two_cliques, modular, modular_distance_three,
    modular_sr_by_conditions, modular_sr_by_theorem, modular_sr_diameter_two,
    modular_sr_dispatch, modular_sr_gamma_formula, ModularMethod,
};
use mbsr_core::resolving::strong_resolving_graph;
use mbsr_core::Graph;

fn factors() -> Vec<Graph> {
    (3..=5)
        .flat_map(connected_classes)
        .filter(|g| !g.is_complete())
        .collect()
}

fn eligible(g: &Graph, h: &Graph) -> bool {
    !(is_union_of_two_cliques(g) && is_union_of_two_cliques(h))
}

#[test]
fn distance_three_predicate_matches_bfs() {
    let fs = factors();
    for g in &fs {
        for h in &fs {
            let gh = modular(g, h);
            let d = gh.distances();
            assert!(d.diameter() <= 3);
            let m = h.n();
            for x in 0..gh.n() {
                for y in 0..gh.n() {
                    let predicted = modular_distance_three(g, h, decode(m, x), decode(m, y));
                    assert_eq!(predicted, d.get(x, y) == 3, "{g:?} {h:?} {x} {y}");
                }
            }
        }
    }
}

#[test]
fn twins_match_closed_neighborhoods() {
    let fs = factors();
    for g in fs.iter().take(10) {
        for h in &fs {
            let gh = modular(g, h);
            let m = h.n();
            for x in 0..gh.n() {
                for y in 0..gh.n() {
                    let (a, b) = (decode(m, x), decode(m, y));
                    let closed = x != y && gh.same_closed_neighborhood(x, y);
                    assert_eq!(adjacent_twins_modular(g, h, a, b), closed);
                    // no distinct non-adjacent twins
                    let open_twins = x != y
                        && !gh.has_edge(x, y)
                        && gh.neighbors(x) == gh.neighbors(y);
                    assert!(!open_twins);
                }
            }
        }
    }
}

#[test]
fn sr_graph_characterizations_match_mmd() {
    let fs = factors();
    let mut counts = [0usize; 3];
    let mut gamma_checked = 0;
    for g in &fs {
        for h in &fs {
            if !eligible(g, h) {
                continue;
            }
            let direct = strong_resolving_graph(&modular(g, h)).unwrap().parent_edges();
            let (method, sr) = modular_sr_dispatch(g, h).unwrap();
            assert_eq!(sr.parent_edges(), direct, "{method:?} {g:?} {h:?}");
            assert_eq!(modular_sr_by_theorem(g, h).unwrap().parent_edges(), direct);
            match method {
                ModularMethod::DiameterTwo => {
                    counts[0] += 1;
                    assert!(modular_sr_by_conditions(g, h).is_err());
                }
                ModularMethod::GammaFormula => {
                    counts[1] += 1;
                    assert_eq!(modular_sr_by_conditions(g, h).unwrap().parent_edges(), direct);
                }
                ModularMethod::Conditions => counts[2] += 1,
            }
            if let Ok(sr) = modular_sr_gamma_formula(g, h) {
                gamma_checked += 1;
                assert_eq!(sr.parent_edges(), direct);
            }
            if let Ok(sr) = modular_sr_diameter_two(g, h) {
                assert_eq!(sr.parent_edges(), direct);
            }
        }
    }
    assert!(counts.iter().all(|&c| c >= 20), "{counts:?}");
    assert!(gamma_checked >= 20);
}
