//! Concrete win systems and outcome computations.

use super::solver::{full_mask, Solver, WinSystem};
use super::{Outcome, Player};
use crate::graph::{bits, DistanceMatrix, Graph};
use crate::resolving::{resolves, strong_resolving_graph, strongly_resolves, SrGraph};
use crate::{Error, Limits, Result};
use std::cell::RefCell;
use std::collections::HashMap;

/// Maker wins by covering every edge, Breaker by owning both ends of one.
pub struct VertexCoverSystem {
    adj: Vec<u64>,
}

impl VertexCoverSystem {
    pub fn new(g: &Graph) -> Self {
        assert!(g.n() <= 64, "vertex-cover board is limited to 64 vertices");
        VertexCoverSystem {
            adj: g.adjacency_masks(),
        }
    }
}

impl WinSystem for VertexCoverSystem {
    fn board_size(&self) -> usize {
        self.adj.len()
    }

    fn maker_done(&self, maker: u64) -> bool {
        bits(!maker & full_mask(self.adj.len())).all(|v| self.adj[v] & !maker == 0)
    }

    fn breaker_done(&self, breaker: u64) -> bool {
        bits(breaker).any(|v| self.adj[v] & breaker != 0)
    }

    /// A free vertex whose edges all have a Maker end is dead for both sides.
    fn useful_moves(&self, maker: u64, breaker: u64) -> u64 {
        let free = full_mask(self.adj.len()) & !(maker | breaker);
        bits(free)
            .filter(|&v| self.adj[v] & !maker != 0)
            .fold(0, |m, v| m | 1u64 << v)
    }

    /// Descending degree in the residual graph (edges without a Maker end).
    fn order_moves(&self, maker: u64, _breaker: u64, candidates: u64) -> Vec<usize> {
        let mut moves: Vec<usize> = bits(candidates).collect();
        moves.sort_by_key(|&v| std::cmp::Reverse((self.adj[v] & !maker).count_ones()));
        moves
    }
}

/// Resolving game: Maker needs a resolving set of `g`.
pub struct ResolvingSystem {
    dist: DistanceMatrix,
    breaker_memo: RefCell<HashMap<u64, bool>>,
}

impl ResolvingSystem {
    pub fn new(g: &Graph) -> Result<Self> {
        let dist = g.distances();
        if !dist.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(ResolvingSystem {
            dist,
            breaker_memo: RefCell::new(HashMap::new()),
        })
    }
}

fn members(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

impl WinSystem for ResolvingSystem {
    fn board_size(&self) -> usize {
        self.dist.n()
    }

    fn maker_done(&self, maker: u64) -> bool {
        resolves(&self.dist, &members(maker))
    }

    fn breaker_done(&self, breaker: u64) -> bool {
        if let Some(&v) = self.breaker_memo.borrow().get(&breaker) {
            return v;
        }
        let rest = full_mask(self.dist.n()) & !breaker;
        let done = !resolves(&self.dist, &members(rest));
        self.breaker_memo.borrow_mut().insert(breaker, done);
        done
    }
}

/// Strong resolving game on the whole vertex set, using the geodesic
/// definition directly rather than the SR graph.
pub struct StrongResolvingBoardSystem {
    dist: DistanceMatrix,
    breaker_memo: RefCell<HashMap<u64, bool>>,
}

impl StrongResolvingBoardSystem {
    pub fn new(g: &Graph) -> Result<Self> {
        let dist = g.distances();
        if !dist.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(StrongResolvingBoardSystem {
            dist,
            breaker_memo: RefCell::new(HashMap::new()),
        })
    }
}

impl WinSystem for StrongResolvingBoardSystem {
    fn board_size(&self) -> usize {
        self.dist.n()
    }

    fn maker_done(&self, maker: u64) -> bool {
        strongly_resolves(&self.dist, &members(maker))
    }

    fn breaker_done(&self, breaker: u64) -> bool {
        if let Some(&v) = self.breaker_memo.borrow().get(&breaker) {
            return v;
        }
        let rest = full_mask(self.dist.n()) & !breaker;
        let done = !strongly_resolves(&self.dist, &members(rest));
        self.breaker_memo.borrow_mut().insert(breaker, done);
        done
    }
}

/// Solves the M-game and the B-game.
pub fn outcome_of_system<S: WinSystem + ?Sized>(sys: &S, limit: usize) -> Result<Outcome> {
    let m_game = Solver::new(sys, Player::Maker, limit)?.winner();
    let b_game = Solver::new(sys, Player::Breaker, limit)?.winner();
    Outcome::from_winners(m_game, b_game)
}

/// Strong resolving game outcome from the SR graph.
///
/// A connected core is solved as one board. A disconnected core is split
/// into components: Maker wins the B-game iff he wins the B-game on every
/// component, and wins the M-game iff at most one component is a B-game
/// loss and, if there is one, he wins its M-game. `limit` bounds each
/// board.
pub fn outcome_sr_core(sr: &SrGraph, limit: usize) -> Result<Outcome> {
    let core = sr.core();
    if core.n() == 0 {
        return Err(Error::Precondition("empty strong resolving graph".into()));
    }
    if core.is_connected() {
        return outcome_of_system(&VertexCoverSystem::new(core), limit);
    }
    outcome_by_components(core, limit)
}

fn outcome_by_components(core: &Graph, limit: usize) -> Result<Outcome> {
    let mut cache: HashMap<crate::graph::CanonicalForm, Outcome> = HashMap::new();
    let mut b_losses = Vec::new();
    for comp in core.components() {
        let (h, _) = core.induced_subgraph(&comp)?;
        if h.n() > limit {
            return Err(Error::limit("game board", h.n(), limit));
        }
        let outcome = match crate::graph::canonical_form(&h) {
            Ok(form) => match cache.get(&form) {
                Some(&o) => o,
                None => {
                    let o = outcome_of_system(&VertexCoverSystem::new(&h), limit)?;
                    cache.insert(form, o);
                    o
                }
            },
            Err(_) => outcome_of_system(&VertexCoverSystem::new(&h), limit)?,
        };
        if outcome != Outcome::Maker {
            b_losses.push(outcome);
        }
    }
    Ok(match b_losses.as_slice() {
        [] => Outcome::Maker,
        [Outcome::Next] => Outcome::Next,
        _ => Outcome::Breaker,
    })
}

/// `O_SR(G)` with the default board limit.
pub fn outcome_srg_exact(g: &Graph) -> Result<Outcome> {
    outcome_srg_exact_with_limit(g, Limits::default().exact)
}

pub fn outcome_srg_exact_with_limit(g: &Graph, limit: usize) -> Result<Outcome> {
    outcome_sr_core(&strong_resolving_graph(g)?, limit)
}

/// `O_SR(G)` played on all of `V(G)` with the direct strong resolving
/// predicate. Used to check that restricting the board to `V(G_SR)` is sound.
pub fn outcome_srg_full_board(g: &Graph, limit: usize) -> Result<Outcome> {
    if g.n() < 2 {
        return Err(Error::TooSmall(g.n()));
    }
    outcome_of_system(&StrongResolvingBoardSystem::new(g)?, limit)
}

/// `O_R(G)` with the default metric-dimension limit.
pub fn outcome_rg_exact(g: &Graph) -> Result<Outcome> {
    outcome_rg_exact_with_limit(g, Limits::default().dim)
}

pub fn outcome_rg_exact_with_limit(g: &Graph, limit: usize) -> Result<Outcome> {
    if g.n() < 2 {
        return Err(Error::TooSmall(g.n()));
    }
    outcome_of_system(&ResolvingSystem::new(g)?, limit)
}

/// `(O_SR(G), O_R(G))`; a strong resolving set is resolving, so
/// `O_SR <= O_R` always holds and a violation is reported as an error.
pub fn compare_outcomes(g: &Graph) -> Result<(Outcome, Outcome)> {
    let o_sr = outcome_srg_exact(g)?;
    let o_r = outcome_rg_exact(g)?;
    if o_sr > o_r {
        return Err(Error::Precondition(format!(
            "strong resolving outcome {o_sr} exceeds resolving outcome {o_r}"
        )));
    }
    Ok((o_sr, o_r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, petersen, spider, star};
    use crate::game::solve_mb;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn strong_resolving_outcomes() {
        assert_eq!(outcome_srg_exact(&cycle(4)).unwrap(), Outcome::Maker);
        assert_eq!(outcome_srg_exact(&star(3)).unwrap(), Outcome::Next);
        assert_eq!(outcome_srg_exact(&petersen()).unwrap(), Outcome::Breaker);
        assert_eq!(outcome_srg_exact(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn resolving_outcomes() {
        for n in 2..8 {
            assert_eq!(outcome_rg_exact(&path(n)).unwrap(), Outcome::Maker);
        }
        assert_eq!(outcome_rg_exact(&spider(&[2, 2, 1]).unwrap()).unwrap(), Outcome::Maker);
        assert_eq!(outcome_rg_exact(&spider(&[2, 1, 1, 1]).unwrap()).unwrap(), Outcome::Next);
        assert!(matches!(outcome_rg_exact(&path(15)), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn outcome_pairs() {
        assert_eq!(compare_outcomes(&path(6)).unwrap(), (Outcome::Maker, Outcome::Maker));
        assert_eq!(
            compare_outcomes(&spider(&[2, 2, 1]).unwrap()).unwrap(),
            (Outcome::Next, Outcome::Maker)
        );
        assert_eq!(
            compare_outcomes(&spider(&[2, 1, 1, 1]).unwrap()).unwrap(),
            (Outcome::Breaker, Outcome::Next)
        );
    }

    #[test]
    fn full_board_matches_core_board() {
        for g in [cycle(5), cycle(6), star(4), spider(&[2, 2, 1]).unwrap(), complete(4)] {
            assert_eq!(
                outcome_srg_full_board(&g, 20).unwrap(),
                outcome_srg_exact(&g).unwrap()
            );
        }
    }

    #[test]
    fn decomposition_matches_single_board() {
        let cores = [
            Graph::disjoint_union(&path(5), &complete(2).copies(3)),
            Graph::disjoint_union(&path(3), &path(3)),
            Graph::disjoint_union(&cycle(3), &complete(2)),
            complete(2).copies(4),
            Graph::disjoint_union(&complete(4), &complete(2)),
        ];
        for core in cores {
            let largest = core.components().iter().map(Vec::len).max().unwrap();
            assert!(largest < core.n());
            let sr = SrGraph::from_core(core).unwrap();
            let split = outcome_sr_core(&sr, largest).unwrap();
            assert_eq!(split, outcome_of_system(&VertexCoverSystem::new(sr.core()), 20).unwrap());
            assert!(outcome_sr_core(&sr, largest - 1).is_err());
        }
    }

    /// Random move order must not change the value.
    struct Shuffled<'a> {
        inner: &'a VertexCoverSystem,
        seed: u64,
    }

    impl WinSystem for Shuffled<'_> {
        fn board_size(&self) -> usize {
            self.inner.board_size()
        }
        fn maker_done(&self, maker: u64) -> bool {
            self.inner.maker_done(maker)
        }
        fn breaker_done(&self, breaker: u64) -> bool {
            self.inner.breaker_done(breaker)
        }
        fn order_moves(&self, maker: u64, breaker: u64, candidates: u64) -> Vec<usize> {
            let mut moves: Vec<usize> = bits(candidates).collect();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(self.seed ^ maker ^ breaker.rotate_left(17));
            moves.shuffle(&mut rng);
            moves
        }
    }

    #[test]
    fn move_order_does_not_change_value() {
        for g in [petersen().complement(), cycle(7), Graph::disjoint_union(&path(5), &complete(2).copies(2))] {
            let sys = VertexCoverSystem::new(&g);
            for seed in 0..4 {
                let shuffled = Shuffled { inner: &sys, seed };
                for first in [Player::Maker, Player::Breaker] {
                    assert_eq!(solve_mb(&shuffled, first).unwrap(), solve_mb(&sys, first).unwrap());
                }
            }
        }
    }
}
