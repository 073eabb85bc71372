//! Twin classes and the twin-free clique number.

use crate::graph::Graph;
use crate::{Error, Limits, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    AdjacentTwins,
    NonAdjacentTwins,
    Singleton,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinBlock {
    pub vertices: Vec<usize>,
    pub kind: TwinKind,
}

/// Partition of `V(G)` into twin classes, blocks ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinPartition {
    blocks: Vec<TwinBlock>,
    #[serde(skip)]
    block_of: Vec<usize>,
}

impl TwinPartition {
    pub fn blocks(&self) -> &[TwinBlock] {
        &self.blocks
    }

    pub fn block_of(&self, v: usize) -> &TwinBlock {
        &self.blocks[self.block_of[v]]
    }

    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        u != v && self.block_of[u] == self.block_of[v]
    }

    pub fn non_singleton(&self) -> impl Iterator<Item = &TwinBlock> {
        self.blocks.iter().filter(|b| b.vertices.len() > 1)
    }
}

/// `u`, `w` are twins when `N(u) \ {w} = N(w) \ {u}`.
pub(crate) fn are_twins(g: &Graph, u: usize, w: usize) -> bool {
    let strip = |x: usize, y: usize| g.neighbors(x).iter().copied().filter(move |&z| z != y);
    u != w && strip(u, w).eq(strip(w, u))
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.n();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![0; n];
    for v in 0..n {
        match blocks.iter().position(|b| are_twins(g, b[0], v)) {
            Some(i) => {
                blocks[i].push(v);
                block_of[v] = i;
            }
            None => {
                block_of[v] = blocks.len();
                blocks.push(vec![v]);
            }
        }
    }
    let blocks = blocks
        .into_iter()
        .map(|vertices| {
            let kind = match vertices.as_slice() {
                [_] => TwinKind::Singleton,
                [a, b, ..] if g.has_edge(*a, *b) => TwinKind::AdjacentTwins,
                _ => TwinKind::NonAdjacentTwins,
            };
            TwinBlock { vertices, kind }
        })
        .collect();
    TwinPartition { blocks, block_of }
}

/// `ω̄(G)`: largest clique containing no two twins.
pub fn twin_free_clique_number(g: &Graph) -> Result<usize> {
    twin_free_clique_number_with_limit(g, Limits::default().exact)
}

pub fn twin_free_clique_number_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.n();
    let limit = limit.min(64);
    if n > limit {
        return Err(Error::limit("twin-free clique search", n, limit));
    }
    let adj = g.adjacency_masks();
    let twins = twin_partition(g);
    let twin_mask: Vec<u64> = (0..n)
        .map(|v| {
            twins.block_of(v).vertices.iter().fold(0u64, |m, &w| m | 1u64 << w)
        })
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    grow(&adj, &twin_mask, all, 0, &mut best);
    Ok(best)
}

fn grow(adj: &[u64], twin_mask: &[u64], mut cand: u64, size: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        grow(adj, twin_mask, cand & adj[v] & !twin_mask[v], size + 1, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_multipartite, cycle, path, star};

    #[test]
    fn star_leaves_are_one_class() {
        let p = twin_partition(&star(4));
        let leaves = p.non_singleton().collect::<Vec<_>>();
        assert_eq!(leaves.len(), 1);
        assert_eq!(leaves[0].vertices, vec![1, 2, 3, 4]);
        assert_eq!(leaves[0].kind, TwinKind::NonAdjacentTwins);
    }

    #[test]
    fn path_and_complete() {
        assert!(twin_partition(&path(5)).blocks().iter().all(|b| b.kind == TwinKind::Singleton));
        let k4 = twin_partition(&complete(4));
        assert_eq!(k4.blocks().len(), 1);
        assert_eq!(k4.blocks()[0].kind, TwinKind::AdjacentTwins);
        // P2: the two vertices are adjacent twins
        assert!(twin_partition(&path(2)).are_twins(0, 1));
    }

    #[test]
    fn blocks_are_cliques_or_independent() {
        for g in [complete_multipartite(&[3, 2, 1]).unwrap(), cycle(4), star(5)] {
            for b in twin_partition(&g).non_singleton() {
                let edges = b
                    .vertices
                    .iter()
                    .flat_map(|&u| b.vertices.iter().map(move |&w| (u, w)))
                    .filter(|&(u, w)| u < w && g.has_edge(u, w))
                    .count();
                let k = b.vertices.len();
                assert!(edges == 0 || edges == k * (k - 1) / 2);
            }
        }
    }

    #[test]
    fn clique_numbers() {
        for n in 1..7 {
            assert_eq!(twin_free_clique_number(&complete(n)).unwrap(), 1);
        }
        assert_eq!(twin_free_clique_number(&path(4)).unwrap(), 2);
        assert_eq!(twin_free_clique_number(&cycle(5)).unwrap(), 2);
        // K4 minus an edge: the two degree-3 vertices are twins
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(twin_free_clique_number(&diamond).unwrap(), 2);
        assert_eq!(twin_free_clique_number(&Graph::empty(0)).unwrap(), 0);
    }
}
