//! Exact Maker-Breaker search over bitset positions.

use super::Player;
use crate::graph::bits;
use crate::{Error, Limits, Result};
use std::collections::HashMap;

/// Winning condition of a Maker-Breaker game on the board `0..board_size`.
///
/// `maker_done` must be monotone under inclusion and `breaker_done` must
/// mean that no Maker win set avoids Breaker's vertices, so both only depend
/// on the claiming player's own set.
pub trait WinSystem {
    fn board_size(&self) -> usize;

    fn maker_done(&self, maker: u64) -> bool;

    fn breaker_done(&self, breaker: u64) -> bool;

    /// Free vertices whose claim can still matter. Claiming any other free
    /// vertex is equivalent to passing, which never helps in a
    /// Maker-Breaker game.
    fn useful_moves(&self, maker: u64, breaker: u64) -> u64 {
        full_mask(self.board_size()) & !(maker | breaker)
    }

    /// Search order for the candidate moves. Affects speed only.
    fn order_moves(&self, _maker: u64, _breaker: u64, candidates: u64) -> Vec<usize> {
        bits(candidates).collect()
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Claimed vertices of both players.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GameState {
    pub maker: u64,
    pub breaker: u64,
    pub board_size: usize,
}

impl GameState {
    pub fn new(board_size: usize) -> Self {
        GameState {
            maker: 0,
            breaker: 0,
            board_size,
        }
    }

    pub fn free(&self) -> u64 {
        full_mask(self.board_size) & !(self.maker | self.breaker)
    }

    pub fn is_free(&self, v: usize) -> bool {
        v < self.board_size && self.free() >> v & 1 == 1
    }

    /// Player to move, derived from the claim counts.
    pub fn to_move(&self, first: Player) -> Player {
        let (m, b) = (self.maker.count_ones(), self.breaker.count_ones());
        match first {
            Player::Maker if m == b => Player::Maker,
            Player::Maker => Player::Breaker,
            Player::Breaker if m == b => Player::Breaker,
            Player::Breaker => Player::Maker,
        }
    }

    pub fn claim(mut self, v: usize, player: Player) -> Self {
        match player {
            Player::Maker => self.maker |= 1u64 << v,
            Player::Breaker => self.breaker |= 1u64 << v,
        }
        self
    }
}

/// Memoized minimax for one win system and one starting player.
pub struct Solver<'a, S: WinSystem + ?Sized> {
    sys: &'a S,
    first: Player,
    memo: HashMap<(u64, u64), bool>,
}

impl<'a, S: WinSystem + ?Sized> Solver<'a, S> {
    pub fn new(sys: &'a S, first: Player, limit: usize) -> Result<Self> {
        let limit = limit.min(64);
        if sys.board_size() > limit {
            return Err(Error::limit("game board", sys.board_size(), limit));
        }
        Ok(Solver {
            sys,
            first,
            memo: HashMap::new(),
        })
    }

    pub fn first(&self) -> Player {
        self.first
    }

    pub fn initial(&self) -> GameState {
        GameState::new(self.sys.board_size())
    }

    /// Winner from the empty board under optimal play.
    pub fn winner(&mut self) -> Player {
        self.winner_from(self.initial())
    }

    pub fn winner_from(&mut self, state: GameState) -> Player {
        if self.maker_wins(state.maker, state.breaker) {
            Player::Maker
        } else {
            Player::Breaker
        }
    }

    /// Whether the game is over, and who won.
    pub fn finished(&self, state: GameState) -> Option<Player> {
        if self.sys.maker_done(state.maker) {
            Some(Player::Maker)
        } else if self.sys.breaker_done(state.breaker) || state.free() == 0 {
            Some(Player::Breaker)
        } else {
            None
        }
    }

    /// Lowest-id move that keeps the game value for the player to move.
    pub fn best_move(&mut self, state: GameState) -> Option<usize> {
        if self.finished(state).is_some() {
            return None;
        }
        let mover = state.to_move(self.first);
        let value = self.winner_from(state);
        let free: Vec<usize> = bits(state.free()).collect();
        free.iter()
            .copied()
            .find(|&v| self.winner_from(state.claim(v, mover)) == value)
            .or(free.first().copied())
    }

    fn maker_wins(&mut self, maker: u64, breaker: u64) -> bool {
        let sys = self.sys;
        if sys.maker_done(maker) {
            return true;
        }
        if sys.breaker_done(breaker) {
            return false;
        }
        let free = full_mask(sys.board_size()) & !(maker | breaker);
        if free == 0 {
            return false;
        }
        if let Some(&v) = self.memo.get(&(maker, breaker)) {
            return v;
        }
        let state = GameState {
            maker,
            breaker,
            board_size: sys.board_size(),
        };
        let maker_to_move = state.to_move(self.first) == Player::Maker;
        let value = if maker_to_move {
            self.maker_move(maker, breaker, free)
        } else {
            !self.breaker_move(maker, breaker, free)
        };
        self.memo.insert((maker, breaker), value);
        value
    }

    /// Maker to move: does he win?
    fn maker_move(&mut self, maker: u64, breaker: u64, free: u64) -> bool {
        let sys = self.sys;
        if bits(free).any(|v| sys.maker_done(maker | 1u64 << v)) {
            return true;
        }
        let threats = bits(free)
            .filter(|&v| sys.breaker_done(breaker | 1u64 << v))
            .fold(0u64, |m, v| m | 1u64 << v);
        let candidates = match threats.count_ones() {
            0 => nonempty_or(sys.useful_moves(maker, breaker) & free, free),
            1 => threats,
            _ => return false,
        };
        sys.order_moves(maker, breaker, candidates)
            .into_iter()
            .any(|v| self.maker_wins(maker | 1u64 << v, breaker))
    }

    /// Breaker to move: does she win?
    fn breaker_move(&mut self, maker: u64, breaker: u64, free: u64) -> bool {
        let sys = self.sys;
        if bits(free).any(|v| sys.breaker_done(breaker | 1u64 << v)) {
            return true;
        }
        if free.count_ones() == 1 {
            return true;
        }
        let threats = bits(free)
            .filter(|&v| sys.maker_done(maker | 1u64 << v))
            .fold(0u64, |m, v| m | 1u64 << v);
        let candidates = match threats.count_ones() {
            0 => nonempty_or(sys.useful_moves(maker, breaker) & free, free),
            1 => threats,
            _ => return false,
        };
        sys.order_moves(maker, breaker, candidates)
            .into_iter()
            .any(|v| !self.maker_wins(maker, breaker | 1u64 << v))
    }
}

fn nonempty_or(mask: u64, fallback: u64) -> u64 {
    if mask == 0 {
        fallback & fallback.wrapping_neg()
    } else {
        mask
    }
}

/// Winner of the game with `first` moving first, default board limit.
pub fn solve_mb<S: WinSystem + ?Sized>(sys: &S, first: Player) -> Result<Player> {
    Ok(Solver::new(sys, first, Limits::default().exact)?.winner())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};
    use crate::game::VertexCoverSystem;

    #[test]
    fn single_edge() {
        let sys = VertexCoverSystem::new(&complete(2));
        assert_eq!(solve_mb(&sys, Player::Maker).unwrap(), Player::Maker);
        assert_eq!(solve_mb(&sys, Player::Breaker).unwrap(), Player::Maker);
    }

    #[test]
    fn path_on_three_vertices() {
        let sys = VertexCoverSystem::new(&path(3));
        assert_eq!(solve_mb(&sys, Player::Breaker).unwrap(), Player::Breaker);
        assert_eq!(solve_mb(&sys, Player::Maker).unwrap(), Player::Maker);
    }

    #[test]
    fn triangle() {
        let sys = VertexCoverSystem::new(&cycle(3));
        assert_eq!(solve_mb(&sys, Player::Maker).unwrap(), Player::Maker);
        assert_eq!(solve_mb(&sys, Player::Breaker).unwrap(), Player::Breaker);
    }

    #[test]
    fn board_limit() {
        let sys = VertexCoverSystem::new(&complete(2).copies(11));
        assert!(matches!(
            solve_mb(&sys, Player::Maker),
            Err(Error::LimitExceeded { size: 22, limit: 20, .. })
        ));
    }

    #[test]
    fn state_bookkeeping() {
        let s = GameState::new(4).claim(0, Player::Maker);
        assert_eq!(s.to_move(Player::Maker), Player::Breaker);
        assert_eq!(s.claim(1, Player::Breaker).to_move(Player::Maker), Player::Maker);
        assert!(!s.is_free(0));
        assert_eq!(s.free(), 0b1110);
    }

    #[test]
    fn best_move_keeps_value() {
        let sys = VertexCoverSystem::new(&path(3));
        let mut solver = Solver::new(&sys, Player::Maker, 20).unwrap();
        // taking an end still wins for Maker: he answers in the other edge
        assert_eq!(solver.best_move(solver.initial()), Some(0));
        let mut solver = Solver::new(&sys, Player::Breaker, 20).unwrap();
        let s = solver.initial();
        assert_eq!(solver.best_move(s), Some(1));
    }
}
