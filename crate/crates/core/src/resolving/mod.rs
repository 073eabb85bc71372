//! Metric and strong-metric resolution.
//!
//! `u` and `v` are *mutually maximally distant* (MMD) when no neighbor of
//! `u` is farther from `v` than `u` and no neighbor of `v` is farther from
//! `u` than `v`. The strong resolving graph `G_SR` has the MMD pairs as
//! edges, and a set strongly resolves `G` exactly when it covers every edge
//! of `G_SR`, so `sdim(G) = τ(G_SR)`.

mod cover;
mod twins;

pub use cover::{is_vertex_cover, min_vertex_cover, min_vertex_cover_with_limit};
pub use twins::{
    twin_free_clique_number, twin_free_clique_number_with_limit, twin_partition, TwinBlock, TwinKind, TwinPartition};

use crate::graph::{DistanceMatrix, Graph, UNREACHABLE};
use crate::{Error, Limits, Result};

/// The strong resolving graph of a connected graph, restricted to the
/// vertices that are MMD with at least one other vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrGraph {
    core: Graph,
    to_parent: Vec<usize>,
    parent_n: usize,
}

impl SrGraph {
    /// Wraps a graph with no isolated vertices as its own SR core (identity
    /// mapping). Handy for running the game machinery on a given core.
    pub fn from_core(core: Graph) -> Result<SrGraph> {
        if let Some(v) = (0..core.n()).find(|&v| core.degree(v) == 0) {
            return Err(Error::Precondition(format!("SR core vertex {v} is isolated")));
        }
        let parent_n = core.n();
        Ok(SrGraph {
            to_parent: (0..parent_n).collect(),
            core,
            parent_n,
        })
    }

    /// Builds the core spanned by `edges`, given in parent vertex ids.
    pub fn from_parent_edges<I>(parent_n: usize, edges: I) -> SrGraph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        let mut to_parent: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        to_parent.sort_unstable();
        to_parent.dedup();
        let mut index = vec![usize::MAX; parent_n];
        for (i, &v) in to_parent.iter().enumerate() {
            index[v] = i;
        }
        let core = Graph::from_edge_relation(
            to_parent.len(),
            edges.iter().map(|&(u, v)| (index[u], index[v])),
        );
        SrGraph {
            core,
            to_parent,
            parent_n,
        }
    }

    pub fn core(&self) -> &Graph {
        &self.core
    }

    pub fn to_parent(&self) -> &[usize] {
        &self.to_parent
    }

    pub fn parent_n(&self) -> usize {
        self.parent_n
    }

    /// Core vertex for a parent vertex, if it takes part in an MMD pair.
    pub fn core_vertex(&self, parent: usize) -> Option<usize> {
        self.to_parent.binary_search(&parent).ok()
    }

    /// MMD pairs in parent ids, `(u, v)` with `u < v`, sorted.
    pub fn parent_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .core
            .edges()
            .map(|(a, b)| {
                let (u, v) = (self.to_parent[a], self.to_parent[b]);
                (u.min(v), u.max(v))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether the parent-vertex set `s` meets every MMD pair.
    pub fn is_covered_by(&self, s: &[usize]) -> bool {
        let mut mark = vec![false; self.parent_n];
        for &v in s {
            if v < self.parent_n {
                mark[v] = true;
            }
        }
        self.parent_edges().iter().all(|&(u, v)| mark[u] || mark[v])
    }
}

fn require_connected(d: &DistanceMatrix) -> Result<()> {
    if d.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn check_vertices(n: usize, vs: &[usize]) -> Result<()> {
    match vs.iter().find(|&&v| v >= n) {
        Some(&v) => Err(Error::VertexOutOfRange { vertex: v, n }),
        None => Ok(()),
    }
}

/// `(d(v, s_1), ..., d(v, s_k))`.
pub fn metric_code(d: &DistanceMatrix, s: &[usize], v: usize) -> Result<Vec<u32>> {
    require_connected(d)?;
    check_vertices(d.n(), s)?;
    check_vertices(d.n(), &[v])?;
    if s.is_empty() {
        return Err(Error::Precondition("metric code needs a non-empty vertex list".into()));
    }
    Ok(s.iter().map(|&u| d.get(v, u)).collect())
}

pub(crate) fn resolves(d: &DistanceMatrix, s: &[usize]) -> bool {
    let n = d.n();
    (0..n).all(|x| {
        ((x + 1)..n).all(|y| s.iter().any(|&z| d.get(x, z) != d.get(y, z)))
    })
}

/// Every pair of distinct vertices is told apart by the distance to some
/// member of `s`.
pub fn is_resolving_set(g: &Graph, s: &[usize]) -> Result<bool> {
    let d = g.distances();
    require_connected(&d)?;
    check_vertices(g.n(), s)?;
    Ok(resolves(&d, s))
}

/// Exact metric dimension with a minimum resolving set, searching subsets
/// by size and then lexicographically. A twin class of size `k` forces
/// `k - 1` of its vertices into every resolving set, which both bounds the
/// starting size and filters candidates.
pub fn metric_dimension(g: &Graph) -> Result<(usize, Vec<usize>)> {
    metric_dimension_with_limit(g, Limits::default().dim)
}

pub fn metric_dimension_with_limit(g: &Graph, limit: usize) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    let d = g.distances();
    require_connected(&d)?;
    if n > limit {
        return Err(Error::limit("metric dimension", n, limit));
    }
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let twins = twin_partition(g);
    let forced: usize = twins.blocks().iter().map(|b| b.vertices.len() - 1).sum();
    for k in forced.max(1)..n {
        let found = crate::enumerate::combinations(n, k).find(|s| {
            twins
                .blocks()
                .iter()
                .all(|b| b.vertices.iter().filter(|v| s.contains(v)).count() + 1 >= b.vertices.len())
                && resolves(&d, s)
        });
        if let Some(s) = found {
            return Ok((k, s));
        }
    }
    unreachable!("V(G) minus one vertex always resolves a connected graph")
}

/// `mid` lies on some shortest `a`–`b` path.
pub fn lies_on_geodesic(d: &DistanceMatrix, a: usize, mid: usize, b: usize) -> Result<bool> {
    check_vertices(d.n(), &[a, mid, b])?;
    let (am, mb, ab) = (d.get(a, mid), d.get(mid, b), d.get(a, b));
    if am == UNREACHABLE || mb == UNREACHABLE || ab == UNREACHABLE {
        return Err(Error::Disconnected);
    }
    Ok(am + mb == ab)
}

pub(crate) fn strongly_resolves(d: &DistanceMatrix, s: &[usize]) -> bool {
    let n = d.n();
    (0..n).all(|x| {
        ((x + 1)..n).all(|y| {
            let dxy = d.get(x, y);
            s.iter().any(|&z| {
                d.get(y, z) == dxy + d.get(x, z) || d.get(x, z) == dxy + d.get(y, z)
            })
        })
    })
}

/// For every pair `x != y` some `z` in `s` has `x` on a `y`–`z` geodesic or
/// `y` on an `x`–`z` geodesic. Evaluated directly from distances.
pub fn is_strong_resolving_set(g: &Graph, s: &[usize]) -> Result<bool> {
    let d = g.distances();
    require_connected(&d)?;
    check_vertices(g.n(), s)?;
    Ok(strongly_resolves(&d, s))
}

/// `u` is maximally distant from `v`: no neighbor of `u` is farther from `v`.
pub fn is_maximally_distant(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> Result<bool> {
    require_connected(d)?;
    check_vertices(g.n(), &[u, v])?;
    Ok(maximally_distant(g, d, u, v))
}

fn maximally_distant(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    let duv = d.get(u, v);
    g.neighbors(u).iter().all(|&w| d.get(w, v) <= duv)
}

pub fn is_mmd(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    u != v && maximally_distant(g, d, u, v) && maximally_distant(g, d, v, u)
}

/// `G_SR`: edges are the MMD pairs, vertices the ones in some MMD pair.
pub fn strong_resolving_graph(g: &Graph) -> Result<SrGraph> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let d = g.distances();
    require_connected(&d)?;
    Ok(strong_resolving_graph_with(g, &d))
}

pub(crate) fn strong_resolving_graph_with(g: &Graph, d: &DistanceMatrix) -> SrGraph {
    let n = g.n();
    let far: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| maximally_distant(g, d, u, v)).collect())
        .collect();
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    SrGraph::from_parent_edges(n, edges.filter(|&(u, v)| far[u][v] && far[v][u]))
}

/// `sdim(G) = τ(G_SR)`, with a minimum strong resolving set in parent ids.
pub fn strong_metric_dimension(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let sr = strong_resolving_graph(g)?;
    strong_metric_dimension_of(&sr)
}

pub fn strong_metric_dimension_of(sr: &SrGraph) -> Result<(usize, Vec<usize>)> {
    let (size, cover) = min_vertex_cover(sr.core())?;
    let mut witness: Vec<usize> = cover.iter().map(|&c| sr.to_parent()[c]).collect();
    witness.sort_unstable();
    Ok((size, witness))
}

/// Vertices realizing the diameter against some other vertex.
pub fn boundary_vertices(g: &Graph) -> Result<Vec<usize>> {
    let d = g.distances();
    require_connected(&d)?;
    let diam = d.diameter();
    Ok((0..g.n()).filter(|&u| d.eccentricity(u) == diam).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, petersen, spider, star};
    use crate::graph::{classify_shape, Component, ShapeDescription};
    use crate::products::cartesian;

    #[test]
    fn metric_codes() {
        let d = path(3).distances();
        assert_eq!(metric_code(&d, &[0], 2).unwrap(), vec![2]);
        assert_eq!(metric_code(&d, &[1], 1).unwrap(), vec![0]);
        let d = cycle(4).distances();
        assert_eq!(metric_code(&d, &[0, 1], 2).unwrap(), vec![2, 1]);
        let disconnected = Graph::empty(2).distances();
        assert_eq!(metric_code(&disconnected, &[0], 1), Err(Error::Disconnected));
    }

    #[test]
    fn resolving_sets() {
        for n in 2..8 {
            assert!(is_resolving_set(&path(n), &[0]).unwrap());
        }
        assert!(!is_resolving_set(&complete(4), &[0, 1]).unwrap());
        for g in [petersen(), cycle(7), star(4)] {
            for v in 0..g.n() {
                let s: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
                assert!(is_resolving_set(&g, &s).unwrap());
            }
        }
        assert_eq!(is_resolving_set(&Graph::empty(3), &[0]), Err(Error::Disconnected));
    }

    #[test]
    fn metric_dimension_examples() {
        assert_eq!(metric_dimension(&path(6)).unwrap().0, 1);
        assert_eq!(metric_dimension(&complete(5)).unwrap().0, 4);
        let (k, w) = metric_dimension(&spider(&[2, 2, 1]).unwrap()).unwrap();
        assert_eq!(k, 2);
        assert!(is_resolving_set(&spider(&[2, 2, 1]).unwrap(), &w).unwrap());
        assert_eq!(metric_dimension(&petersen()).unwrap().0, 3);
        assert!(matches!(metric_dimension(&path(15)), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn geodesics() {
        let d = path(4).distances();
        assert!(lies_on_geodesic(&d, 0, 1, 3).unwrap());
        assert!(lies_on_geodesic(&d, 0, 0, 3).unwrap());
        assert!(!lies_on_geodesic(&d, 1, 0, 3).unwrap());
        let d = cycle(4).distances();
        assert!(lies_on_geodesic(&d, 0, 1, 2).unwrap());
        assert!(lies_on_geodesic(&d, 0, 3, 2).unwrap());
        assert!(!lies_on_geodesic(&d, 0, 2, 1).unwrap());
        let d = Graph::empty(2).distances();
        assert_eq!(lies_on_geodesic(&d, 0, 0, 1), Err(Error::Disconnected));
    }

    #[test]
    fn strong_resolving_sets() {
        assert!(is_strong_resolving_set(&path(5), &[0]).unwrap());
        let k4 = complete(4);
        assert!(is_strong_resolving_set(&k4, &[0, 1, 2]).unwrap());
        assert!(!is_strong_resolving_set(&k4, &[0, 1]).unwrap());
        let p = petersen();
        let all: Vec<usize> = (0..10).collect();
        assert!(is_strong_resolving_set(&p, &all).unwrap());
    }

    #[test]
    fn maximal_distance() {
        let g = path(5);
        let d = g.distances();
        assert!(is_maximally_distant(&g, &d, 4, 0).unwrap());
        assert!(!is_maximally_distant(&g, &d, 2, 0).unwrap());
        let c = cycle(5);
        let d = c.distances();
        for u in 0..5 {
            for v in 0..5 {
                if d.get(u, v) == 2 {
                    assert!(is_maximally_distant(&c, &d, u, v).unwrap());
                }
            }
        }
    }

    fn shape(parts: &[(Component, usize)]) -> ShapeDescription {
        ShapeDescription::from_parts(parts.iter().cloned())
    }

    #[test]
    fn strong_resolving_graph_examples() {
        for n in 2..9 {
            let sr = strong_resolving_graph(&path(n)).unwrap();
            assert_eq!(sr.parent_edges(), vec![(0, n - 1)]);
        }
        for m in 2..7 {
            let even = strong_resolving_graph(&cycle(2 * m)).unwrap();
            assert_eq!(classify_shape(even.core()), shape(&[(Component::Complete(2), m)]));
            let odd = strong_resolving_graph(&cycle(2 * m - 1)).unwrap();
            assert_eq!(classify_shape(odd.core()), shape(&[(Component::Cycle(2 * m - 1), 1)]));
        }
        for m in 3..7 {
            let ladder = cartesian(&path(m), &complete(2));
            let sr = strong_resolving_graph(&ladder).unwrap();
            assert_eq!(classify_shape(sr.core()), shape(&[(Component::Complete(2), 2)]));
        }
        assert_eq!(strong_resolving_graph(&Graph::empty(1)), Err(Error::TooSmall(1)));
        assert_eq!(strong_resolving_graph(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn sr_core_has_no_isolated_vertices() {
        for g in [petersen(), spider(&[3, 2, 1]).unwrap(), cycle(9)] {
            let sr = strong_resolving_graph(&g).unwrap();
            assert!((0..sr.core().n()).all(|v| sr.core().degree(v) > 0));
        }
        assert!(SrGraph::from_core(Graph::empty(2)).is_err());
    }

    #[test]
    fn sdim_examples() {
        let (k, w) = strong_metric_dimension(&petersen()).unwrap();
        assert_eq!(k, 8);
        assert!(is_strong_resolving_set(&petersen(), &w).unwrap());
        assert_eq!(strong_metric_dimension(&cycle(7)).unwrap().0, 4);
        assert_eq!(strong_metric_dimension(&star(3)).unwrap().0, 2);
        assert_eq!(strong_metric_dimension(&Graph::empty(1)), Err(Error::TooSmall(1)));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary_vertices(&path(5)).unwrap(), vec![0, 4]);
        assert_eq!(boundary_vertices(&cycle(6)).unwrap(), (0..6).collect::<Vec<_>>());
        assert_eq!(boundary_vertices(&star(3)).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn p5_with_matching_minus_center_is_a_matching() {
        let core = Graph::disjoint_union(&path(5), &complete(2).copies(3));
        let (rest, _) = core.remove_vertex(2).unwrap();
        let (rest, _) = rest.induced_subgraph(&(0..rest.n()).filter(|&v| rest.degree(v) > 0).collect::<Vec<_>>()).unwrap();
        assert_eq!(classify_shape(&rest), shape(&[(Component::Complete(2), 5)]));
    }
}
