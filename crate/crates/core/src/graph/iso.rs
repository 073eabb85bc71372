//! Canonical labeling for small graphs.
//!
//! Individualization-refinement: colors are refined to an equitable
//! partition, then the first non-singleton cell is split by individualizing
//! each of its vertices in turn. Every discrete leaf yields a relabeled
//! adjacency matrix and the lexicographically smallest one is the canonical
//! form. Twins inside a cell are interchangeable by an automorphism that
//! fixes everything already individualized, so only one vertex per twin
//! class is tried at each node.

use super::Graph;
use crate::{Error, Limits, Result};
use std::fmt;

/// Canonical adjacency matrix: row `i` is the neighbor mask of the vertex at
/// canonical position `i`, written in canonical positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for r in &self.rows {
            write!(f, "{r:x}.")?;
        }
        Ok(())
    }
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonical representative as a graph.
    pub fn to_graph(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| self.rows[u] >> v & 1 == 1)
    }
}

/// Canonical form of `g`; fails beyond the default isomorphism limit.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_limit(g, Limits::default().iso)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    let n = g.n();
    if n > limit.min(64) {
        return Err(Error::limit("canonical labeling", n, limit.min(64)));
    }
    let mut search = Search {
        adj: g.adjacency_masks(),
        best: None,
    };
    let colors = search.refine(vec![0; n]);
    search.descend(colors);
    Ok(search.best.unwrap_or(CanonicalForm { n: 0, rows: Vec::new() }))
}

/// Exact isomorphism test, default size limit.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    are_isomorphic_with_limit(a, b, Limits::default().iso)
}

pub fn are_isomorphic_with_limit(a: &Graph, b: &Graph, limit: usize) -> Result<bool> {
    if a.n() != b.n() || a.m() != b.m() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form_with_limit(a, limit)? == canonical_form_with_limit(b, limit)?)
}

struct Search {
    adj: Vec<u64>,
    best: Option<CanonicalForm>,
}

impl Search {
    /// Refines `colors` until stable. New colors are ranks of the signature
    /// (old color, sorted neighbor colors), so the result does not depend on
    /// vertex numbering.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let n = colors.len();
        let mut classes = count_classes(&colors);
        loop {
            let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = bits(self.adj[v]).map(|w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = vec![0; n];
            let mut rank = 0;
            for i in 0..n {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    rank += 1;
                }
                next[sigs[i].2] = rank;
            }
            let next_classes = rank + 1;
            colors = next;
            if next_classes == classes {
                return colors;
            }
            classes = next_classes;
        }
    }

    fn descend(&mut self, colors: Vec<usize>) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaf(&colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let split: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| if c > target || (c == target && w != v) { c + 1 } else { c })
                .collect();
            let refined = self.refine(split);
            self.descend(refined);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.adj[u] & !(1u64 << v) == self.adj[v] & !(1u64 << u)
    }

    fn leaf(&mut self, colors: &[usize]) {
        let n = colors.len();
        let mut rows = vec![0u64; n];
        for v in 0..n {
            let mut row = 0u64;
            for w in bits(self.adj[v]) {
                row |= 1u64 << colors[w];
            }
            rows[colors[v]] = row;
        }
        let form = CanonicalForm { n, rows };
        if self.best.as_ref().is_none_or(|b| form < *b) {
            self.best = Some(form);
        }
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_multipartite, cycle, path, petersen, star};
    use crate::resolving::strong_resolving_graph;
    use proptest::prelude::*;

    #[test]
    fn named_examples() {
        assert!(are_isomorphic(&cycle(5), &cycle(5).complement()).unwrap());
        assert!(!are_isomorphic(&path(4), &star(3)).unwrap());
        let sr = strong_resolving_graph(&petersen()).unwrap();
        assert_eq!(sr.core().n(), 10);
        assert!(are_isomorphic(sr.core(), &petersen().complement()).unwrap());
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C6 and 2C3 are both 2-regular on six vertices
        let two_c3 = cycle(3).copies(2);
        assert!(!are_isomorphic(&cycle(6), &two_c3).unwrap());
        // K3,3 and the prism are both 3-regular on six vertices
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        let prism = crate::products::cartesian(&cycle(3), &complete(2));
        assert!(!are_isomorphic(&k33, &prism).unwrap());
    }

    #[test]
    fn highly_symmetric_graphs_are_fast() {
        for g in [complete(12), complete_multipartite(&[6, 6]).unwrap(), complete_multipartite(&[2; 6]).unwrap()] {
            let f = canonical_form(&g).unwrap();
            assert_eq!(f.to_graph().m(), g.m());
        }
    }

    #[test]
    fn limit_enforced() {
        assert_eq!(
            canonical_form(&path(13)).unwrap_err(),
            Error::limit("canonical labeling", 13, 12)
        );
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
        fn invariant_under_relabeling(g in arb_graph(9), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = g.permuted(&perm);
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            prop_assert!(are_isomorphic(&g, &h).unwrap());
            let canon = canonical_form(&g).unwrap().to_graph();
            prop_assert!(are_isomorphic(&canon, &g).unwrap());
        }

        #[test]
        fn equivalence_relation(a in arb_graph(6), b in arb_graph(6), c in arb_graph(6)) {
            let ab = are_isomorphic(&a, &b).unwrap();
            let ba = are_isomorphic(&b, &a).unwrap();
            let bc = are_isomorphic(&b, &c).unwrap();
            let ac = are_isomorphic(&a, &c).unwrap();
            prop_assert!(are_isomorphic(&a, &a).unwrap());
            prop_assert_eq!(ab, ba);
            if ab && bc {
                prop_assert!(ac);
            }
        }
    }
}
