//! Generators for the named graph families and tree statistics.

use crate::graph::Graph;
use crate::products::join;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edge_relation(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` for `n >= 3`: the path `P_n` closed by the edge `{n-1, 0}`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    Graph::from_edge_relation(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

/// `K_{1,x}` with center 0.
pub fn star(x: usize) -> Graph {
    Graph::from_edge_relation(x + 1, (1..=x).map(|i| (0, i)))
}

/// The Petersen graph: outer cycle 0-4, inner pentagram 5-9 and spokes
/// `i -- i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edge_relation(10, outer.chain(inner).chain(spokes))
}

/// `K_{a_1,...,a_k}`; parts are laid out consecutively in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidParameter(format!(
            "complete multipartite part sizes must be positive, got {parts:?}"
        )));
    }
    let mut part_of = Vec::new();
    for (i, &a) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, a));
    }
    Ok(Graph::from_fn(part_of.len(), |u, v| part_of[u] != part_of[v]))
}

/// Fan `K1 + P_n`, hub 0.
pub fn fan(n: usize) -> Graph {
    join(&Graph::empty(1), &path(n))
}

/// Wheel `K1 + C_n`, hub 0.
pub fn wheel(n: usize) -> Graph {
    join(&Graph::empty(1), &cycle(n))
}

/// Spider: center 0 with pendant paths of the given lengths. Legs are laid
/// out longest first, so the order of `legs` does not affect the labeling.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() || legs.contains(&0) {
        return Err(Error::InvalidParameter(format!(
            "spider needs at least one leg of positive length, got {legs:?}"
        )));
    }
    let mut sorted = legs.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let n = 1 + sorted.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for len in sorted {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(Graph::from_edge_relation(n, edges))
}

/// Tree from a parent array; exactly one entry (the root) is `None`.
pub fn tree_from_parents(parents: &[Option<usize>]) -> Result<Graph> {
    let n = parents.len();
    let roots = parents.iter().filter(|p| p.is_none()).count();
    if roots != 1 {
        return Err(Error::InvalidParameter(format!(
            "parent array must have exactly one root, found {roots}"
        )));
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (v, p) in parents.iter().enumerate() {
        if let Some(p) = *p {
            if p >= n {
                return Err(Error::VertexOutOfRange { vertex: p, n });
            }
            if p == v {
                return Err(Error::InvalidParameter(format!("vertex {v} is its own parent")));
            }
            edges.push((p, v));
        }
    }
    let g = Graph::from_edges(n, edges)?;
    if !g.is_connected() {
        return Err(Error::InvalidParameter(
            "parent array contains a cycle, so it does not describe a tree".into(),
        ));
    }
    Ok(g)
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && g.m() + 1 == g.n() && g.is_connected()
}

/// Leaves, exterior major vertices and terminal degrees of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats {
    /// Number of leaves.
    pub sigma: usize,
    /// Number of major vertices (degree >= 3) with positive terminal degree.
    pub ex: usize,
    /// Terminal degree of every major vertex, keyed by vertex.
    pub terminal_degree: BTreeMap<usize, usize>,
    /// `(leaf, major vertex)` for every leaf that is a terminal vertex.
    pub terminal_of: Vec<(usize, usize)>,
}

pub fn tree_stats(t: &Graph) -> Result<TreeStats> {
    if t.n() < 2 {
        return Err(Error::TooSmall(t.n()));
    }
    if !is_tree(t) {
        return Err(Error::Precondition("tree statistics need a tree".into()));
    }
    let d = t.distances();
    let leaves: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) == 1).collect();
    let majors: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();
    let mut terminal_degree: BTreeMap<usize, usize> = majors.iter().map(|&v| (v, 0)).collect();
    let mut terminal_of = Vec::new();
    for &leaf in &leaves {
        // the major vertex strictly closest to this leaf, if unique
        let closest = majors
            .iter()
            .copied().find(|&v| majors.iter().all(|&w| w == v || d.get(leaf, v) < d.get(leaf, w)));
        if let Some(v) = closest {
            *terminal_degree.get_mut(&v).expect("major vertex") += 1;
            terminal_of.push((leaf, v));
        }
    }
    Ok(TreeStats {
        sigma: leaves.len(),
        ex: terminal_degree.values().filter(|&&k| k > 0).count(),
        terminal_degree,
        terminal_of,
    })
}

/// A named family with its parameters, as accepted on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Petersen,
    Multipartite(Vec<usize>),
    Spider(Vec<usize>),
    Fan(usize),
    Wheel(usize),
    /// Parent array, `-` marking the root.
    Tree(Vec<Option<usize>>),
}

impl Family {
    pub const NAMES: &'static [&'static str] = &[
        "path", "cycle", "complete", "star", "petersen", "multipartite", "spider", "fan", "wheel", "tree",
    ];

    /// Parses a family name and a comma- or space-separated parameter list.
    pub fn parse(name: &str, params: &str) -> Result<Family> {
        let tokens: Vec<&str> = params
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        let ints = || -> Result<Vec<usize>> {
            tokens
                .iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidParameter(format!("expected an integer, found {t:?}")))
                })
                .collect()
        };
        let one = || -> Result<usize> {
            match ints()?.as_slice() {
                [k] => Ok(*k),
                other => Err(Error::InvalidParameter(format!(
                    "{name} takes exactly one parameter, got {}",
                    other.len()
                ))),
            }
        };
        let family = match name {
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "complete" => Family::Complete(one()?),
            "star" => Family::Star(one()?),
            "petersen" => Family::Petersen,
            "multipartite" => Family::Multipartite(ints()?),
            "spider" => Family::Spider(ints()?),
            "fan" => Family::Fan(one()?),
            "wheel" => Family::Wheel(one()?),
            "tree" => Family::Tree(
                tokens
                    .iter()
                    .map(|t| match *t {
                        "-" => Ok(None),
                        t => t.parse::<usize>().map(Some).map_err(|_| {
                            Error::InvalidParameter(format!("expected a parent id or '-', found {t:?}"))
                        }),
                    })
                    .collect::<Result<_>>()?,
            ),
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family {other:?}; expected one of {}",
                    Family::NAMES.join(", ")
                )))
            }
        };
        Ok(family)
    }

    pub fn build(&self) -> Result<Graph> {
        let positive = |n: usize, min: usize, what: &str| {
            if n < min {
                Err(Error::InvalidParameter(format!("{what} needs n >= {min}, got {n}")))
            } else {
                Ok(())
            }
        };
        match self {
            Family::Path(n) => positive(*n, 1, "path").map(|_| path(*n)),
            Family::Cycle(n) => positive(*n, 3, "cycle").map(|_| cycle(*n)),
            Family::Complete(n) => positive(*n, 1, "complete").map(|_| complete(*n)),
            Family::Star(x) => positive(*x, 1, "star").map(|_| star(*x)),
            Family::Petersen => Ok(petersen()),
            Family::Multipartite(parts) => complete_multipartite(parts),
            Family::Spider(legs) => spider(legs),
            Family::Fan(n) => positive(*n, 1, "fan").map(|_| fan(*n)),
            Family::Wheel(n) => positive(*n, 3, "wheel").map(|_| wheel(*n)),
            Family::Tree(parents) => tree_from_parents(parents),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Star(x) => write!(f, "K1,{x}"),
            Family::Petersen => write!(f, "Petersen"),
            Family::Multipartite(p) => write!(f, "K{{{}}}", list(p)),
            Family::Spider(l) => write!(f, "spider({})", list(l)),
            Family::Fan(n) => write!(f, "fan{n}"),
            Family::Wheel(n) => write!(f, "wheel{n}"),
            Family::Tree(p) => {
                let items: Vec<String> = p.iter().map(|x| x.map_or("-".into(), |v| v.to_string())).collect();
                write!(f, "tree[{}]", items.join(","))
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `name` or `name:params`, e.g. `spider:2,2,1`.
    fn from_str(s: &str) -> Result<Family> {
        match s.split_once(':') {
            Some((name, params)) => Family::parse(name, params),
            None => Family::parse(s, ""),
        }
    }
}
