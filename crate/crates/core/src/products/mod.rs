//! Graph products.
//!
//! Two-factor products on `V(G) × V(H)` number the vertex `(u, w)` as
//! `u * |V(H)| + w`. [`corona`] and [`join`] list the vertices of `g` first
//! and then the vertices of the second graph (for the corona, copy `i` of
//! `h` occupies `n + i*m .. n + (i+1)*m`).

mod modular;

pub use modular::{
    adjacent_twins_modular, domination_number, gamma_pairs, gp_graph, is_union_of_two_cliques,
    modular_diameter, modular_distance_three, modular_sr_by_conditions, modular_sr_by_theorem,
    modular_sr_dispatch,
    modular_sr_diameter_two, modular_sr_gamma_formula, twin_edges, GammaPairSet, ModularMethod,
};

use crate::graph::Graph;

/// Product vertex id of `(u, w)` when the second factor has `m` vertices.
pub fn encode(m: usize, u: usize, w: usize) -> usize {
    u * m + w
}

/// Inverse of [`encode`].
pub fn decode(m: usize, x: usize) -> (usize, usize) {
    (x / m, x % m)
}

fn product_by(g: &Graph, h: &Graph, adjacent: impl Fn((usize, usize), (usize, usize)) -> bool) -> Graph {
    let m = h.n();
    Graph::from_fn(g.n() * m, |x, y| adjacent(decode(m, x), decode(m, y)))
}

/// `G ⊙ H`: one copy of `h` per vertex of `g`, joined to that vertex.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.n(), h.n());
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..n {
        let base = n + i * m;
        edges.extend(h.edges().map(|(a, b)| (base + a, base + b)));
        edges.extend((0..m).map(|w| (i, base + w)));
    }
    Graph::from_edge_relation(n + n * m, edges)
}

/// `G + H`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(h.edges().map(|(a, b)| (n + a, n + b)));
    edges.extend((0..n).flat_map(|u| (0..h.n()).map(move |w| (u, n + w))));
    Graph::from_edge_relation(n + h.n(), edges)
}

/// `G □ H`.
pub fn cartesian(g: &Graph, h: &Graph) -> Graph {
    product_by(g, h, |(u, w), (u2, w2)| {
        (u == u2 && h.has_edge(w, w2)) || (w == w2 && g.has_edge(u, u2))
    })
}

/// `G × H`.
pub fn direct(g: &Graph, h: &Graph) -> Graph {
    product_by(g, h, |(u, w), (u2, w2)| g.has_edge(u, u2) && h.has_edge(w, w2))
}

/// `G ∘ H`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Graph {
    product_by(g, h, |(u, w), (u2, w2)| {
        g.has_edge(u, u2) || (u == u2 && h.has_edge(w, w2))
    })
}

pub(crate) fn modular_adjacent(g: &Graph, h: &Graph, (u, w): (usize, usize), (u2, w2): (usize, usize)) -> bool {
    if (u, w) == (u2, w2) {
        return false;
    }
    let gu = g.has_edge(u, u2);
    let hw = h.has_edge(w, w2);
    let g_non = u != u2 && !gu;
    let h_non = w != w2 && !hw;
    (u == u2 && hw) || (w == w2 && gu) || (gu && hw) || (g_non && h_non)
}

/// `G ◇ H = (G □ H) ∪ (G × H) ∪ (Ḡ × H̄)`.
pub fn modular(g: &Graph, h: &Graph) -> Graph {
    product_by(g, h, |x, y| modular_adjacent(g, h, x, y))
}
