use super::Graph;
use std::collections::VecDeque;

/// Marker stored for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, filled by one BFS per source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in g.neighbors(u) {
                    if row[w] == UNREACHABLE {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw distance, [`UNREACHABLE`] across components.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Distance if `u` and `v` share a component.
    pub fn finite(&self, u: usize, v: usize) -> Option<u32> {
        Some(self.get(u, v)).filter(|&d| d != UNREACHABLE)
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.dist.iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest finite entry (0 for graphs without edges).
    pub fn diameter(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }

    /// Eccentricity of `u` within its component.
    pub fn eccentricity(&self, u: usize) -> u32 {
        self.row(u)
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, petersen};
    use proptest::prelude::*;

    #[test]
    fn cycle_and_path_distances() {
        let d = cycle(5).distances();
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    assert!(matches!(d.get(u, v), 1 | 2));
                }
            }
        }
        assert_eq!(d.diameter(), 2);
        assert_eq!(path(4).distances().get(0, 3), 3);
    }

    #[test]
    fn petersen_diameter() {
        assert_eq!(petersen().distances().diameter(), 2);
    }

    #[test]
    fn unreachable_marker() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = g.distances();
        assert_eq!(d.get(0, 2), UNREACHABLE);
        assert_eq!(d.finite(0, 2), None);
        assert_eq!(d.diameter(), 1);
        assert!(!d.is_connected());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn metric_axioms(g in arb_graph(8)) {
            let d = g.distances();
            let n = g.n();
            for u in 0..n {
                prop_assert_eq!(d.get(u, u), 0);
                for v in 0..n {
                    prop_assert_eq!(d.get(u, v), d.get(v, u));
                    prop_assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                    for w in 0..n {
                        if let (Some(a), Some(b)) = (d.finite(u, v), d.finite(v, w)) {
                            prop_assert!(d.get(u, w) <= a + b);
                        }
                    }
                }
            }
        }
    }
}
