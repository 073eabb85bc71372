//! Line-oriented game session against the exact engine.

use crate::Failure;
use clap::ValueEnum;
use mbsr_core::game::{outcome_of_system, GameState, ResolvingSystem, Solver, VertexCoverSystem, WinSystem};
use mbsr_core::resolving::strong_resolving_graph;
use mbsr_core::{Graph, Limits, Player};
use std::io::{BufRead, Write};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GameKind {
    /// Strong resolving game
    Srg,
    /// Resolving game
    Rg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Human {
    Maker,
    Breaker,
    /// Engine plays both sides
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Maker,
    Breaker,
}

impl From<Side> for Player {
    fn from(s: Side) -> Player {
        match s {
            Side::Maker => Player::Maker,
            Side::Breaker => Player::Breaker,
        }
    }
}

/// Plays one game on `V(g)` and returns the winner.
pub fn play(
    g: &Graph,
    game: GameKind,
    human: Human,
    first: Side,
    limits: &Limits,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<Player, Failure> {
    match game {
        GameKind::Srg => {
            // the vertex-cover game on the SR graph, with every vertex of G on
            // the board; vertices in no MMD pair are dead moves
            let sr = strong_resolving_graph(g)?;
            let board = Graph::from_edges(g.n(), sr.parent_edges())?;
            writeln!(out, "strong resolving game on {} vertices, {} MMD pairs", g.n(), board.m())?;
            session(&VertexCoverSystem::new(&board), human, first.into(), limits.exact, input, out)
        }
        GameKind::Rg => {
            if g.n() < 2 {
                return Err(mbsr_core::Error::TooSmall(g.n()).into());
            }
            writeln!(out, "resolving game on {} vertices", g.n())?;
            let limit = limits.exact.min(limits.dim);
            session(&ResolvingSystem::new(g)?, human, first.into(), limit, input, out)
        }
    }
}

fn session<S: WinSystem>(
    sys: &S,
    human: Human,
    first: Player,
    limit: usize,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<Player, Failure> {
    let outcome = outcome_of_system(sys, limit)?;
    let mut solver = Solver::new(sys, first, limit)?;
    let predicted = outcome.winner(first);
    writeln!(out, "value: {outcome}; {first} moves first, {predicted} wins with optimal play")?;
    let human_side = match human {
        Human::Maker => Some(Player::Maker),
        Human::Breaker => Some(Player::Breaker),
        Human::None => None,
    };
    let mut state = solver.initial();
    let winner = loop {
        if let Some(w) = solver.finished(state) {
            break w;
        }
        let mover = state.to_move(first);
        let v = if human_side == Some(mover) {
            read_move(state, mover, input, out)?
        } else {
            let v = solver.best_move(state).expect("game not finished");
            writeln!(out, "{mover} (engine) claims {v}")?;
            v
        };
        state = state.claim(v, mover);
    };
    writeln!(out, "winner: {winner}")?;
    if human_side.is_none() && winner != predicted {
        return Err(Failure {
            code: crate::EXIT_VERIFY,
            message: format!("engine playout won by {winner}, solver value says {predicted}"),
        });
    }
    Ok(winner)
}

fn read_move(state: GameState, mover: Player, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<usize, Failure> {
    loop {
        let free: Vec<String> = (0..state.board_size)
            .filter(|&v| state.is_free(v))
            .map(|v| v.to_string())
            .collect();
        write!(out, "{mover} (you), free [{}]> ", free.join(" "))?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            return Err(Failure {
                code: crate::EXIT_USAGE,
                message: "input ended before the game finished".into(),
            });
        }
        match line.trim().parse::<usize>() {
            Ok(v) if state.is_free(v) => return Ok(v),
            Ok(v) => writeln!(out, "illegal move {v}: not a free vertex")?,
            Err(_) => writeln!(out, "illegal move {:?}: expected a vertex id", line.trim())?,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbsr_core::families::{cycle, star};

    fn run(g: &Graph, game: GameKind, human: Human, first: Side, moves: &str) -> (Player, String) {
        let mut input = moves.as_bytes();
        let mut out = Vec::new();
        let w = play(g, game, human, first, &Limits::default(), &mut input, &mut out)
            .unwrap_or_else(|f| panic!("{}", f.message));
        (w, String::from_utf8(out).unwrap())
    }

    #[test]
    fn engine_self_play_matches_value() {
        for first in [Side::Maker, Side::Breaker] {
            assert_eq!(run(&cycle(4), GameKind::Srg, Human::None, first, "").0, Player::Maker);
            assert_eq!(run(&star(4), GameKind::Rg, Human::None, first, "").0, Player::Breaker);
            assert_eq!(run(&star(3), GameKind::Srg, Human::None, first, "").0, first.into());
        }
    }

    #[test]
    fn illegal_moves_are_reprompted() {
        // K1,3: leaves 1..3 form the SR triangle; Maker opens on a leaf
        let (w, transcript) = run(&star(3), GameKind::Srg, Human::Breaker, Side::Maker, "x\n9\n1\n0\n2\n3\n");
        assert_eq!(w, Player::Maker);
        assert!(transcript.contains("illegal move \"x\""));
        assert!(transcript.contains("illegal move 9"));
        assert!(transcript.contains("winner: Maker"));
    }

    #[test]
    fn eof_is_an_error() {
        let mut input = "".as_bytes();
        let mut out = Vec::new();
        let r = play(&cycle(4), GameKind::Srg, Human::Maker, Side::Maker, &Limits::default(), &mut input, &mut out);
        assert!(matches!(r, Err(Failure { code: 1, .. })));
    }
}
