//! Structure of modular products: γ-pairs, twin edges, distances and the
//! strong resolving graph assembled from factor data alone.
//!
//! Under the standing hypotheses (neither factor complete, not both factors
//! disjoint unions of two cliques) `diam(G ◇ H) <= 3`, a pair is at distance
//! 3 exactly when [`modular_distance_three`] holds, and the SR graph has a
//! closed description in terms of the factors.

use super::{decode, modular_adjacent};
use crate::graph::{DistanceMatrix, Graph};
use crate::resolving::{is_mmd, SrGraph};
use crate::{Error, Limits, Result};
use serde::Serialize;

/// All γ-pairs of a graph: `{u, w}` with `N[u] ∩ N[w] = ∅`,
/// `N[u] ∪ N[w] = V` and `γ(G) = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaPairSet {
    n: usize,
    pairs: Vec<(usize, usize)>,
    members: Vec<usize>,
}

impl GammaPairSet {
    /// Pairs `(u, w)` with `u < w`, sorted.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `P(G)`: vertices lying in at least one γ-pair.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, u: usize, w: usize) -> bool {
        self.pairs.binary_search(&(u.min(w), u.max(w))).is_ok()
    }

    pub fn is_member(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// `GP(G)`: the γ-pairs as edges on `V(G)`.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edge_relation(self.n, self.pairs.iter().copied())
    }
}

/// Two vertices with disjoint closed neighborhoods covering `V` dominate
/// `G`, so such a pair is a minimum dominating set exactly when no vertex is
/// universal.
pub fn gamma_pairs(g: &Graph) -> GammaPairSet {
    let n = g.n();
    let mut pairs = Vec::new();
    if !(0..n).any(|v| g.is_universal(v)) {
        for u in 0..n {
            for w in (u + 1)..n {
                let disjoint = !g.has_edge(u, w)
                    && !g.neighbors(u).iter().any(|&x| g.has_edge(x, w));
                if disjoint && g.degree(u) + g.degree(w) + 2 == n {
                    pairs.push((u, w));
                }
            }
        }
    }
    let mut members: Vec<usize> = pairs.iter().flat_map(|&(u, w)| [u, w]).collect();
    members.sort_unstable();
    members.dedup();
    GammaPairSet { n, pairs, members }
}

pub fn gp_graph(g: &Graph) -> Graph {
    gamma_pairs(g).to_graph()
}

/// Edges `uv` with `N[u] = N[v]`.
pub fn twin_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().filter(|&(u, v)| g.same_closed_neighborhood(u, v)).collect()
}

/// Exact domination number by increasing-size subset search, bounded above
/// by a greedy dominating set.
pub fn domination_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    let limit = Limits::default().domination;
    if n > limit {
        return Err(Error::limit("domination number", n, limit));
    }
    let closed = g.closed_masks();
    let all = (1u64 << n) - 1;
    let mut covered = 0u64;
    let mut greedy = 0;
    while covered != all {
        let best = (0..n).max_by_key(|&v| ((closed[v] & !covered).count_ones(), std::cmp::Reverse(v))).unwrap();
        covered |= closed[best];
        greedy += 1;
    }
    for k in 0..greedy {
        let dominates = crate::enumerate::combinations(n, k)
            .any(|s| s.iter().fold(0u64, |m, &v| m | closed[v]) == all);
        if dominates {
            return Ok(k);
        }
    }
    Ok(greedy)
}

/// Exactly two components, each a clique.
pub fn is_union_of_two_cliques(g: &Graph) -> bool {
    let comps = g.components();
    comps.len() == 2
        && comps.iter().all(|c| {
            c.iter().all(|&u| c.iter().all(|&v| u == v || g.has_edge(u, v)))
        })
}

struct Factor<'a> {
    graph: &'a Graph,
    dist: DistanceMatrix,
    gamma: GammaPairSet,
    universal: Vec<bool>,
    on_twin_edge: Vec<bool>,
    mmd: Vec<Vec<bool>>,
}

impl<'a> Factor<'a> {
    fn new(graph: &'a Graph) -> Self {
        let n = graph.n();
        let dist = graph.distances();
        let mut on_twin_edge = vec![false; n];
        for (u, v) in twin_edges(graph) {
            on_twin_edge[u] = true;
            on_twin_edge[v] = true;
        }
        let mmd = (0..n)
            .map(|u| (0..n).map(|v| is_mmd(graph, &dist, u, v)).collect())
            .collect();
        Factor {
            graph,
            gamma: gamma_pairs(graph),
            universal: (0..n).map(|v| graph.is_universal(v)).collect(),
            on_twin_edge,
            mmd,
            dist,
        }
    }

    fn adj(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    fn non_adj(&self, u: usize, v: usize) -> bool {
        u != v && !self.graph.has_edge(u, v)
    }

    fn same_closed(&self, u: usize, v: usize) -> bool {
        self.graph.same_closed_neighborhood(u, v)
    }

    fn gamma(&self, u: usize, v: usize) -> bool {
        self.gamma.contains(u, v)
    }

    fn in_pair(&self, v: usize) -> bool {
        self.gamma.is_member(v)
    }

    fn d(&self, u: usize, v: usize) -> u32 {
        self.dist.get(u, v)
    }

    fn has_universal(&self) -> bool {
        self.universal.iter().any(|&u| u)
    }
}

type V2 = (usize, usize);

struct Modular<'a> {
    g: Factor<'a>,
    h: Factor<'a>,
}

impl<'a> Modular<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> Self {
        Modular {
            g: Factor::new(g),
            h: Factor::new(h),
        }
    }

    fn order(&self) -> usize {
        self.g.graph.n() * self.h.graph.n()
    }

    fn vertex(&self, x: usize) -> V2 {
        decode(self.h.graph.n(), x)
    }

    fn adjacent(&self, x: V2, y: V2) -> bool {
        modular_adjacent(self.g.graph, self.h.graph, x, y)
    }

    fn twins(&self, (g1, h1): V2, (g2, h2): V2) -> bool {
        (g1, h1) != (g2, h2)
            && ((self.g.same_closed(g1, g2) && self.h.same_closed(h1, h2))
                || (self.g.gamma(g1, g2) && self.h.gamma(h1, h2)))
    }

    fn distance_three(&self, (g1, h1): V2, (g2, h2): V2) -> bool {
        fn one_side(a: &Factor, b: &Factor, a1: usize, a2: usize, b1: usize, b2: usize) -> bool {
            a.same_closed(a1, a2) && b.d(b1, b2) >= 3 && (a.universal[a1] || b.gamma(b1, b2))
        }
        one_side(&self.g, &self.h, g1, g2, h1, h2) || one_side(&self.h, &self.g, h1, h2, g1, g2)
    }

    fn distance(&self, x: V2, y: V2) -> u32 {
        if x == y {
            0
        } else if self.adjacent(x, y) {
            1
        } else if self.distance_three(x, y) {
            3
        } else {
            2
        }
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |x| ((x + 1)..n).map(move |y| (x, y)))
    }

    fn diameter(&self) -> u32 {
        self.pairs()
            .map(|(x, y)| self.distance(self.vertex(x), self.vertex(y)))
            .max()
            .unwrap_or(0)
    }

    fn sr_where(&self, keep: impl Fn(V2, V2) -> bool) -> SrGraph {
        let edges: Vec<(usize, usize)> = self
            .pairs()
            .filter(|&(x, y)| keep(self.vertex(x), self.vertex(y)))
            .collect();
        SrGraph::from_parent_edges(self.order(), edges)
    }

    /// `TW(G◇H) ∪ E(Ḡ□H̄) ∪ E(G×H̄) ∪ E(Ḡ×H)`.
    fn diameter_two_edge(&self, x: V2, y: V2) -> bool {
        let ((g1, h1), (g2, h2)) = (x, y);
        let (g, h) = (&self.g, &self.h);
        self.twins(x, y)
            || (g1 == g2 && h.non_adj(h1, h2))
            || (h1 == h2 && g.non_adj(g1, g2))
            || (g.adj(g1, g2) && h.non_adj(h1, h2))
            || (g.non_adj(g1, g2) && h.adj(h1, h2))
    }

    fn gamma_hypothesis(&self) -> bool {
        (!self.g.gamma.is_empty() && !self.h.has_universal())
            || (!self.h.gamma.is_empty() && !self.g.has_universal())
    }

    /// The γ-pair formula: twin edges, the complement/direct pieces on the
    /// vertices outside every γ-pair, `GP(G) □ GP(H)` and the twin-edge
    /// vertices crossed with the γ-pairs of the other factor.
    fn gamma_formula_edge(&self, x: V2, y: V2) -> bool {
        let ((g1, h1), (g2, h2)) = (x, y);
        let (g, h) = (&self.g, &self.h);
        let outside = !g.in_pair(g1) && !g.in_pair(g2) && !h.in_pair(h1) && !h.in_pair(h2);
        self.twins(x, y)
            || (outside
                && ((g1 == g2 && h.non_adj(h1, h2))
                    || (h1 == h2 && g.non_adj(g1, g2))
                    || (g.adj(g1, g2) && h.non_adj(h1, h2))
                    || (g.non_adj(g1, g2) && h.adj(h1, h2))))
            || (g1 == g2 && h.gamma(h1, h2))
            || (h1 == h2 && g.gamma(g1, g2))
            || (g.on_twin_edge[g1] && g.on_twin_edge[g2] && g.adj(g1, g2) && h.gamma(h1, h2))
            || (g.gamma(g1, g2) && h.on_twin_edge[h1] && h.on_twin_edge[h2] && h.adj(h1, h2))
    }

    /// Clause-by-clause characterization for diameter 3.
    fn conditions_edge(&self, x: V2, y: V2, boundary: &[bool]) -> bool {
        let m = self.h.graph.n();
        let id = |(a, b): V2| a * m + b;
        let dist = self.distance(x, y);
        if self.twins(x, y) || dist == 3 {
            return true;
        }
        if dist == 2 && !boundary[id(x)] && !boundary[id(y)] {
            return true;
        }
        let flip = |(a, b): V2| (b, a);
        for (a, b, p, q) in [(&self.g, &self.h, x, y), (&self.h, &self.g, flip(x), flip(y))] {
            if clause_universal_pair(a, b, p, q) {
                return true;
            }
            if clause_universal_one(a, b, p, q) || clause_universal_one(a, b, q, p) {
                return true;
            }
        }
        false
    }
}

/// Both first coordinates universal and the second coordinates an MMD pair
/// at distance 2.
fn clause_universal_pair(a: &Factor, b: &Factor, (a1, b1): V2, (a2, b2): V2) -> bool {
    a.universal[a1] && a.universal[a2] && b.d(b1, b2) == 2 && b.mmd[b1][b2]
}

/// `a1` universal, `a2` not, `d(b1, b2) = 2`, every closed neighbor of `b2`
/// within distance 2 of `b1`, and `b2` in no γ-pair.
fn clause_universal_one(a: &Factor, b: &Factor, (a1, b1): V2, (a2, b2): V2) -> bool {
    a.universal[a1]
        && !a.universal[a2]
        && b.d(b1, b2) == 2
        && b.graph.neighbors(b2).iter().all(|&w| b.d(b1, w) <= 2)
        && !b.in_pair(b2)
}

/// `(g1, h1)` and `(g2, h2)` are distinct adjacent twins of `G ◇ H`: closed
/// neighborhoods agree coordinatewise, or both coordinate pairs are γ-pairs.
pub fn adjacent_twins_modular(g: &Graph, h: &Graph, x: V2, y: V2) -> bool {
    let (g1, h1) = x;
    let (g2, h2) = y;
    x != y
        && ((g.same_closed_neighborhood(g1, g2) && h.same_closed_neighborhood(h1, h2))
            || (gamma_pairs(g).contains(g1, g2) && gamma_pairs(h).contains(h1, h2)))
}

/// Distance-3 predicate for `G ◇ H` under the standing hypotheses: one
/// coordinate has equal closed neighborhoods, the other is at distance at
/// least 3, and either the first coordinate is universal or the other pair
/// is a γ-pair.
pub fn modular_distance_three(g: &Graph, h: &Graph, x: V2, y: V2) -> bool {
    Modular::new(g, h).distance_three(x, y)
}

fn check_hypotheses(g: &Graph, h: &Graph) -> Result<()> {
    if g.n() < 2 || h.n() < 2 {
        return Err(Error::Precondition("modular factors need at least two vertices".into()));
    }
    if g.is_complete() || h.is_complete() {
        return Err(Error::Precondition("a modular factor is complete".into()));
    }
    if is_union_of_two_cliques(g) && is_union_of_two_cliques(h) {
        return Err(Error::Precondition(
            "both modular factors are disjoint unions of two cliques".into(),
        ));
    }
    Ok(())
}

/// `diam(G ◇ H)` from factor data.
pub fn modular_diameter(g: &Graph, h: &Graph) -> Result<u32> {
    check_hypotheses(g, h)?;
    Ok(Modular::new(g, h).diameter())
}

/// Which characterization produced a modular SR graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModularMethod {
    DiameterTwo,
    GammaFormula,
    Conditions,
}

/// SR graph of a diameter-2 modular product.
pub fn modular_sr_diameter_two(g: &Graph, h: &Graph) -> Result<SrGraph> {
    check_hypotheses(g, h)?;
    let ctx = Modular::new(g, h);
    if ctx.diameter() != 2 {
        return Err(Error::Precondition("modular product does not have diameter 2".into()));
    }
    Ok(ctx.sr_where(|x, y| ctx.diameter_two_edge(x, y)))
}

/// SR graph when one factor has a γ-pair and the other no universal vertex.
pub fn modular_sr_gamma_formula(g: &Graph, h: &Graph) -> Result<SrGraph> {
    check_hypotheses(g, h)?;
    let ctx = Modular::new(g, h);
    if !ctx.gamma_hypothesis() {
        return Err(Error::Precondition(
            "no factor has a γ-pair while the other has no universal vertex".into(),
        ));
    }
    Ok(ctx.sr_where(|x, y| ctx.gamma_formula_edge(x, y)))
}

/// SR graph of a diameter-3 modular product, clause by clause. Boundary
/// vertices are read off the product distances.
pub fn modular_sr_by_conditions(g: &Graph, h: &Graph) -> Result<SrGraph> {
    check_hypotheses(g, h)?;
    let ctx = Modular::new(g, h);
    if ctx.diameter() != 3 {
        return Err(Error::Precondition("modular product does not have diameter 3".into()));
    }
    Ok(conditions(&ctx))
}

fn conditions(ctx: &Modular) -> SrGraph {
    let n = ctx.order();
    let boundary: Vec<bool> = (0..n)
        .map(|x| (0..n).any(|y| ctx.distance_three(ctx.vertex(x), ctx.vertex(y))))
        .collect();
    ctx.sr_where(|x, y| ctx.conditions_edge(x, y, &boundary))
}

/// SR graph of `G ◇ H` from the factor characterizations, never from MMD
/// tests on the product. Dispatches to the diameter-2 formula, then the
/// γ-pair formula, then the diameter-3 clauses.
pub fn modular_sr_by_theorem(g: &Graph, h: &Graph) -> Result<SrGraph> {
    modular_sr_dispatch(g, h).map(|(_, sr)| sr)
}

pub fn modular_sr_dispatch(g: &Graph, h: &Graph) -> Result<(ModularMethod, SrGraph)> {
    check_hypotheses(g, h)?;
    let ctx = Modular::new(g, h);
    match ctx.diameter() {
        2 => Ok((ModularMethod::DiameterTwo, ctx.sr_where(|x, y| ctx.diameter_two_edge(x, y)))),
        3 if ctx.gamma_hypothesis() => Ok((
            ModularMethod::GammaFormula,
            ctx.sr_where(|x, y| ctx.gamma_formula_edge(x, y)),
        )),
        3 => Ok((ModularMethod::Conditions, conditions(&ctx))),
        d => Err(Error::Precondition(format!("modular product has diameter {d}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_multipartite, cycle, path, star};
    use crate::graph::classify_shape;
    use crate::products::modular;

    #[test]
    fn gamma_pairs_examples() {
        assert_eq!(gamma_pairs(&path(5)).pairs(), &[(0, 3), (1, 4)]);
        assert!(!gamma_pairs(&path(5)).is_member(2));
        assert_eq!(gamma_pairs(&cycle(6)).pairs(), &[(0, 3), (1, 4), (2, 5)]);
        for n in 2..6 {
            assert!(gamma_pairs(&complete(n)).is_empty());
        }
        assert_eq!(gamma_pairs(&path(4)).pairs(), &[(0, 3)]);
    }

    #[test]
    fn gamma_pairs_satisfy_definition() {
        for g in [path(5), cycle(6), path(4), cycle(4), complete(2).copies(2), path(5).complement()] {
            let gamma = domination_number(&g).unwrap();
            for &(u, w) in gamma_pairs(&g).pairs() {
                let nu = g.closed_masks()[u];
                let nw = g.closed_masks()[w];
                assert_eq!(nu & nw, 0);
                assert_eq!((nu | nw).count_ones() as usize, g.n());
                assert_eq!(gamma, 2);
            }
        }
    }

    #[test]
    fn gp_graphs() {
        assert_eq!(classify_shape(&gp_graph(&cycle(6))).to_string(), "3K2");
        assert_eq!(classify_shape(&gp_graph(&path(5))).to_string(), "2K2 ∪ K1");
        assert_eq!(gp_graph(&complete(4)).m(), 0);
    }

    #[test]
    fn twin_edge_examples() {
        assert_eq!(twin_edges(&complete(3)).len(), 3);
        assert!(twin_edges(&path(4)).is_empty());
        assert!(twin_edges(&cycle(4)).is_empty());
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(domination_number(&complete(5)).unwrap(), 1);
        assert_eq!(domination_number(&path(7)).unwrap(), 3);
        assert_eq!(domination_number(&cycle(6)).unwrap(), 2);
        assert_eq!(domination_number(&Graph::empty(4)).unwrap(), 4);
        assert!(domination_number(&path(17)).is_err());
    }

    #[test]
    fn two_clique_unions() {
        assert!(is_union_of_two_cliques(&complete(2).copies(2)));
        assert!(is_union_of_two_cliques(&Graph::disjoint_union(&complete(3), &Graph::empty(1))));
        assert!(!is_union_of_two_cliques(&complete(2).copies(3)));
        assert!(!is_union_of_two_cliques(&path(3)));
    }

    #[test]
    fn twins_in_modular_products() {
        let k3 = complete(3);
        let gh = modular(&k3, &k3);
        assert!(adjacent_twins_modular(&k3, &k3, (0, 0), (1, 2)));
        assert!(gh.same_closed_neighborhood(0, 5));
        let p4 = path(4);
        assert!(adjacent_twins_modular(&p4, &p4, (0, 0), (3, 3)));
        let gh = modular(&p4, &p4);
        for x in 0..16 {
            for y in 0..16 {
                let xy = ((x / 4, x % 4), (y / 4, y % 4));
                let expected = x != y && gh.same_closed_neighborhood(x, y);
                assert_eq!(adjacent_twins_modular(&p4, &p4, xy.0, xy.1), expected);
            }
        }
    }

    #[test]
    fn hypotheses_are_checked() {
        assert!(modular_sr_by_theorem(&complete(3), &path(4)).is_err());
        let two = complete(2).copies(2);
        assert!(modular_sr_by_theorem(&two, &two).is_err());
        assert!(modular_sr_by_theorem(&star(3), &complete_multipartite(&[2, 2]).unwrap()).is_ok());
    }

    #[test]
    fn named_modular_products() {
        let sr = modular_sr_by_theorem(&cycle(4), &cycle(6)).unwrap();
        assert_eq!(classify_shape(sr.core()).to_string(), "12K2");
        let p5 = path(5);
        let sr = modular_sr_by_theorem(&p5.complement(), &p5).unwrap();
        assert_eq!(classify_shape(sr.core()).to_string(), "P5 ∪ 10K2");
        let (method, sr) = modular_sr_dispatch(&path(4), &path(4)).unwrap();
        assert_eq!(method, ModularMethod::GammaFormula);
        // (u1,w1) (u1,w4) (u4,w4) (u4,w1) is a 4-cycle
        for (x, y) in [(0, 3), (3, 15), (12, 15), (0, 12)] {
            assert!(sr.parent_edges().contains(&(x, y)), "{x} {y}");
        }
    }
}
