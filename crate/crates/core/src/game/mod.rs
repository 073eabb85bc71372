//! Maker-Breaker strong resolving and resolving games.
//!
//! Maker and Breaker alternately claim unclaimed vertices. In the strong
//! resolving game Maker wins by claiming a strong resolving set, which is the
//! same as claiming a vertex cover of the SR graph; in the resolving game he
//! needs a resolving set. Breaker wins otherwise.

mod certificates;
mod classifier;
mod solver;
mod systems;

pub use certificates::{is_pairing_vertex_cover, is_quasi_pairing_vertex_cover};
pub use classifier::outcome_srg_classifier;
pub use solver::{solve_mb, GameState, Solver, WinSystem};
pub use systems::{
    compare_outcomes, outcome_of_system, outcome_rg_exact, outcome_rg_exact_with_limit,
    outcome_srg_exact, outcome_srg_exact_with_limit, outcome_srg_full_board, outcome_sr_core,
    ResolvingSystem, StrongResolvingBoardSystem, VertexCoverSystem,
};

use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Player {
    Maker,
    Breaker,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Maker => Player::Breaker,
            Player::Breaker => Player::Maker,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Maker => "Maker",
            Player::Breaker => "Breaker",
        })
    }
}

impl FromStr for Player {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Player> {
        match s.to_ascii_lowercase().as_str() {
            "maker" | "m" => Ok(Player::Maker),
            "breaker" | "b" => Ok(Player::Breaker),
            _ => Err(crate::Error::InvalidParameter(format!("unknown player {s:?}"))),
        }
    }
}

/// Game outcome, ordered `Breaker < Next < Maker`.
///
/// `Maker`: Maker wins whoever starts. `Next`: the first player wins.
/// `Breaker`: Breaker wins whoever starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Breaker,
    Next,
    Maker,
}

impl Outcome {
    /// Outcome from the winners of the M-game (Maker first) and the B-game
    /// (Breaker first).
    pub fn from_winners(m_game: Player, b_game: Player) -> crate::Result<Outcome> {
        match (m_game, b_game) {
            (Player::Maker, Player::Maker) => Ok(Outcome::Maker),
            (Player::Maker, Player::Breaker) => Ok(Outcome::Next),
            (Player::Breaker, Player::Breaker) => Ok(Outcome::Breaker),
            (Player::Breaker, Player::Maker) => Err(crate::Error::SecondPlayerAdvantage),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Outcome::Maker => 'M',
            Outcome::Next => 'N',
            Outcome::Breaker => 'B',
        }
    }

    /// Winner when `first` moves first.
    pub fn winner(self, first: Player) -> Player {
        match self {
            Outcome::Maker => Player::Maker,
            Outcome::Breaker => Player::Breaker,
            Outcome::Next => first,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Outcome {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Outcome> {
        match s {
            "M" | "m" => Ok(Outcome::Maker),
            "N" | "n" => Ok(Outcome::Next),
            "B" | "b" => Ok(Outcome::Breaker),
            _ => Err(crate::Error::InvalidParameter(format!("unknown outcome {s:?}"))),
        }
    }
}

impl Serialize for Outcome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_char(self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering() {
        assert!(Outcome::Breaker < Outcome::Next);
        assert!(Outcome::Next < Outcome::Maker);
    }

    #[test]
    fn winners_map_to_outcomes() {
        use Player::*;
        assert_eq!(Outcome::from_winners(Maker, Maker).unwrap(), Outcome::Maker);
        assert_eq!(Outcome::from_winners(Maker, Breaker).unwrap(), Outcome::Next);
        assert_eq!(Outcome::from_winners(Breaker, Breaker).unwrap(), Outcome::Breaker);
        assert_eq!(
            Outcome::from_winners(Breaker, Maker),
            Err(crate::Error::SecondPlayerAdvantage)
        );
        assert_eq!(Outcome::Next.winner(Breaker), Breaker);
    }

    #[test]
    fn parse_and_print() {
        for o in [Outcome::Maker, Outcome::Next, Outcome::Breaker] {
            assert_eq!(o.to_string().parse::<Outcome>().unwrap(), o);
        }
        assert!("X".parse::<Outcome>().is_err());
        assert_eq!("breaker".parse::<Player>().unwrap(), Player::Breaker);
    }
}
