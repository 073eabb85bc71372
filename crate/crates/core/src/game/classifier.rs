//! Polynomial-time outcome of the strong resolving game from `G_SR`.

use super::Outcome;
use crate::resolving::SrGraph;
use crate::{Error, Result};

/// `M` if the SR graph is a matching; `B` if deleting any single vertex
/// still leaves a vertex of degree at least 2; `N` otherwise.
///
/// In the `N` case the first player wins: Maker opens on a vertex whose
/// removal leaves a matching and then answers inside each edge, while
/// Breaker opens on a vertex of degree at least 2 and then takes one of its
/// unclaimed neighbors.
pub fn outcome_srg_classifier(sr: &SrGraph) -> Result<Outcome> {
    let core = sr.core();
    let n = core.n();
    if n == 0 {
        return Err(Error::Precondition("empty strong resolving graph".into()));
    }
    if core.max_degree() <= 1 {
        return Ok(Outcome::Maker);
    }
    let leaves_matching = |u: usize| {
        (0..n)
            .filter(|&v| v != u)
            .all(|v| core.degree(v) - usize::from(core.has_edge(u, v)) <= 1)
    };
    if (0..n).any(leaves_matching) {
        Ok(Outcome::Next)
    } else {
        Ok(Outcome::Breaker)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, star};
    use crate::graph::Graph;

    fn classify(core: Graph) -> Outcome {
        outcome_srg_classifier(&SrGraph::from_core(core).unwrap()).unwrap()
    }

    #[test]
    fn named_cores() {
        assert_eq!(classify(complete(2).copies(5)), Outcome::Maker);
        assert_eq!(classify(path(5)), Outcome::Next);
        assert_eq!(classify(complete(4)), Outcome::Breaker);
        for core in [cycle(3), path(3), path(4)] {
            assert_eq!(classify(core), Outcome::Next);
        }
        assert_eq!(classify(cycle(4)), Outcome::Breaker);
        assert_eq!(classify(star(3)), Outcome::Next);
        assert_eq!(classify(Graph::disjoint_union(&path(3), &path(3))), Outcome::Breaker);
    }
}
