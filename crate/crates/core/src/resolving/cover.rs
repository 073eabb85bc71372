//! Exact minimum vertex cover by branch and bound on bitmasks.

use crate::graph::Graph;
use crate::{Error, Limits, Result};

pub fn is_vertex_cover(g: &Graph, s: &[usize]) -> bool {
    let mut mark = vec![false; g.n()];
    for &v in s {
        if v < g.n() {
            mark[v] = true;
        }
    }
    g.edges().all(|(u, v)| mark[u] || mark[v])
}

/// `τ(g)` with one optimal cover (any optimum; ties are broken by lowest
/// vertex id among maximum-degree branching vertices).
pub fn min_vertex_cover(g: &Graph) -> Result<(usize, Vec<usize>)> {
    min_vertex_cover_with_limit(g, Limits::default().cover)
}

pub fn min_vertex_cover_with_limit(g: &Graph, limit: usize) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    let limit = limit.min(64);
    if n > limit {
        return Err(Error::limit("vertex cover", n, limit));
    }
    let adj = g.adjacency_masks();
    let alive = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut bb = BranchAndBound {
        adj,
        best_size: usize::MAX,
        best: 0,
    };
    bb.search(alive, 0);
    let cover: Vec<usize> = crate::graph::bits(bb.best).collect();
    Ok((cover.len(), cover))
}

struct BranchAndBound {
    adj: Vec<u64>,
    best_size: usize,
    best: u64,
}

impl BranchAndBound {
    fn degree(&self, v: usize, alive: u64) -> u32 {
        (self.adj[v] & alive).count_ones()
    }

    /// Size of a greedy maximal matching among `alive`: a lower bound on the
    /// cover still needed.
    fn matching_bound(&self, mut alive: u64) -> usize {
        let mut size = 0;
        while alive != 0 {
            let v = alive.trailing_zeros() as usize;
            alive &= !(1u64 << v);
            let nb = self.adj[v] & alive;
            if nb != 0 {
                let w = nb.trailing_zeros() as usize;
                alive &= !(1u64 << w);
                size += 1;
            }
        }
        size
    }

    fn search(&mut self, mut alive: u64, mut chosen: u64) {
        // degree-0 vertices drop out; a degree-1 vertex's neighbor is taken
        loop {
            let mut changed = false;
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if alive >> v & 1 == 0 {
                    continue;
                }
                match self.degree(v, alive) {
                    0 => {
                        alive &= !(1u64 << v);
                        changed = true;
                    }
                    1 => {
                        let u = (self.adj[v] & alive).trailing_zeros() as usize;
                        chosen |= 1u64 << u;
                        alive &= !((1u64 << u) | (1u64 << v));
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }

        let taken = chosen.count_ones() as usize;
        if alive == 0 {
            if taken < self.best_size {
                self.best_size = taken;
                self.best = chosen;
            }
            return;
        }
        if taken + self.matching_bound(alive) >= self.best_size {
            return;
        }

        let mut pivot = usize::MAX;
        let mut pivot_degree = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let dv = self.degree(v, alive);
            if dv > pivot_degree {
                pivot = v;
                pivot_degree = dv;
            }
        }
        let bit = 1u64 << pivot;
        self.search(alive & !bit, chosen | bit);
        let nb = self.adj[pivot] & alive;
        self.search(alive & !nb & !bit, chosen | nb);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_graphs, combinations};
    use crate::families::{complete, cycle, petersen};

    fn brute_force(g: &Graph) -> usize {
        (0..=g.n())
            .find(|&k| combinations(g.n(), k).any(|s| is_vertex_cover(g, &s)))
            .unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(min_vertex_cover(&complete(4)).unwrap().0, 3);
        assert_eq!(min_vertex_cover(&complete(2).copies(5)).unwrap().0, 5);
        assert_eq!(min_vertex_cover(&cycle(5)).unwrap().0, 3);
        assert_eq!(min_vertex_cover(&Graph::empty(3)).unwrap().0, 0);
        assert_eq!(min_vertex_cover(&petersen()).unwrap().0, 6);
    }

    #[test]
    fn agrees_with_brute_force_on_all_graphs_up_to_six() {
        for n in 0..=6 {
            for g in all_graphs(n) {
                let (k, w) = min_vertex_cover(&g).unwrap();
                assert!(is_vertex_cover(&g, &w));
                assert_eq!(k, brute_force(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn limit_enforced() {
        assert!(matches!(
            min_vertex_cover(&Graph::empty(41)),
            Err(Error::LimitExceeded { size: 41, limit: 40, .. })
        ));
        assert!(min_vertex_cover_with_limit(&cycle(60), 64).unwrap().0 == 30);
    }
}
