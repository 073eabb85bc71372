//! Exhaustive and random graph generation for sweeps.

use crate::graph::{canonical_form, Graph};
use rand::Rng;
use std::collections::HashSet;

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = if k <= n { Some((0..k).collect::<Vec<usize>>()) } else { None };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut c = current.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in (i + 1)..k {
                    c[j] = c[j - 1] + 1;
                }
                next = Some(c);
                break;
            }
        }
        Some(current)
    })
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect()
}

/// Graph whose edges are the pairs of `0..n` (in lexicographic order)
/// selected by the bits of `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = pair_list(n);
    Graph::from_edge_relation(
        n,
        pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
    )
}

/// All `2^C(n,2)` labeled graphs on `0..n`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let slots = n * n.saturating_sub(1) / 2;
    assert!(slots < 64, "labeled graph enumeration is limited to n <= 11");
    (0u64..1 << slots).map(move |mask| graph_from_mask(n, mask))
}

/// All connected labeled graphs on `0..n`.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(Graph::is_connected)
}

/// One representative per isomorphism class among the connected graphs of
/// order `n` (first labeled graph met in mask order).
pub fn connected_classes(n: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    connected_graphs(n)
        .filter(|g| seen.insert(canonical_form(g).expect("small graph")))
        .collect()
}

/// Uniform random labeled tree via a Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return Graph::from_edge_relation(n, (n == 2).then_some((0, 1)));
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_relation(n, edges)
}

/// Uniform random labeled graph of order `n`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(0.5))
}

/// Uniform random connected labeled graph of order `n`, by rejection.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    loop {
        let g = random_graph(n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random subset of `0..n`, each vertex kept with probability 1/2.
pub fn random_subset<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::is_tree;
    use rand::SeedableRng;

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(combinations(4, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 4).count(), 0);
        assert_eq!(combinations(4, 4).count(), 1);
        let all: Vec<_> = combinations(4, 2).collect();
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
    }

    #[test]
    fn connected_labeled_counts() {
        // number of connected labeled graphs on n vertices
        let expected = [1usize, 1, 4, 38, 728];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).count(), count);
        }
    }

    #[test]
    fn connected_class_counts() {
        // connected unlabeled graphs on 1..=5 vertices
        let expected = [1usize, 1, 2, 6, 21];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(connected_classes(i + 1).len(), count);
        }
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..15 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.n(), n);
            assert!(is_tree(&t));
        }
    }

    #[test]
    fn random_connected_graphs_are_connected() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for n in 1..10 {
            assert!(random_connected_graph(n, &mut rng).is_connected());
        }
    }
}
