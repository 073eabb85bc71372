//! Pairing and quasi-pairing vertex covers of the SR graph.
//!
//! Disjoint pairs such that every transversal (one vertex from each pair)
//! covers the SR graph give Maker a pairing strategy as second player; with
//! one extra vertex taken first, as first player.

use crate::graph::Graph;
use crate::resolving::SrGraph;
use crate::{Error, Result};

/// Largest number of pairs checked by transversal enumeration.
const MAX_PAIRS: usize = 20;

fn check_pairs(core: &Graph, pairs: &[(usize, usize)]) -> Result<Vec<bool>> {
    let n = core.n();
    let mut used = vec![false; n];
    for &(a, b) in pairs {
        for v in [a, b] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if a == b {
            return Err(Error::OverlappingPairs(a));
        }
        for v in [a, b] {
            if used[v] {
                return Err(Error::OverlappingPairs(v));
            }
            used[v] = true;
        }
    }
    if pairs.len() > MAX_PAIRS {
        return Err(Error::limit("pairing transversals", pairs.len(), MAX_PAIRS));
    }
    Ok(used)
}

fn every_transversal_covers(core: &Graph, pairs: &[(usize, usize)], extra: Option<usize>) -> bool {
    let mut chosen = vec![false; core.n()];
    if let Some(v) = extra {
        chosen[v] = true;
    }
    (0u64..1 << pairs.len()).all(|mask| {
        for (i, &(a, b)) in pairs.iter().enumerate() {
            let pick_b = mask >> i & 1 == 1;
            chosen[a] = !pick_b;
            chosen[b] = pick_b;
        }
        core.edges().all(|(u, v)| chosen[u] || chosen[v])
    })
}

/// Every transversal of `pairs` is a vertex cover of the SR core. Vertex
/// ids are core ids.
pub fn is_pairing_vertex_cover(sr: &SrGraph, pairs: &[(usize, usize)]) -> Result<bool> {
    check_pairs(sr.core(), pairs)?;
    Ok(every_transversal_covers(sr.core(), pairs, None))
}

/// Every transversal of `pairs` together with `v` is a vertex cover.
pub fn is_quasi_pairing_vertex_cover(sr: &SrGraph, pairs: &[(usize, usize)], v: usize) -> Result<bool> {
    let used = check_pairs(sr.core(), pairs)?;
    let n = sr.core().n();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if used[v] {
        return Err(Error::Precondition(format!("vertex {v} lies in one of the pairs")));
    }
    Ok(every_transversal_covers(sr.core(), pairs, Some(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    fn sr(core: Graph) -> SrGraph {
        SrGraph::from_core(core).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let m = sr(complete(2).copies(3));
        assert!(is_pairing_vertex_cover(&m, &[(0, 1), (2, 3), (4, 5)]).unwrap());
        assert!(!is_pairing_vertex_cover(&sr(path(3)), &[(0, 2)]).unwrap());
        assert!(!is_pairing_vertex_cover(&sr(cycle(4)), &[(0, 2), (1, 3)]).unwrap());
    }

    #[test]
    fn quasi_pairing_examples() {
        assert!(is_quasi_pairing_vertex_cover(&sr(cycle(3)), &[(0, 2)], 1).unwrap());
        assert!(is_quasi_pairing_vertex_cover(&sr(path(4)), &[(2, 3)], 1).unwrap());
        let k4 = sr(complete(4));
        for (a, b) in [(0, 1), (0, 2), (2, 3)] {
            for v in (0..4).filter(|&v| v != a && v != b) {
                assert!(!is_quasi_pairing_vertex_cover(&k4, &[(a, b)], v).unwrap());
            }
        }
    }

    #[test]
    fn malformed_pairs() {
        let p = sr(path(4));
        assert_eq!(is_pairing_vertex_cover(&p, &[(0, 1), (1, 2)]), Err(Error::OverlappingPairs(1)));
        assert!(matches!(
            is_pairing_vertex_cover(&p, &[(0, 9)]),
            Err(Error::VertexOutOfRange { vertex: 9, .. })
        ));
        assert!(is_quasi_pairing_vertex_cover(&p, &[(0, 1)], 1).is_err());
    }
}
