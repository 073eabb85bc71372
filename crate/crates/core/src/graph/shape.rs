//! Component-shape descriptions such as `P5 ∪ 10K2`.

use super::iso::canonical_form_with_limit;
use super::Graph;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Shape of one connected component.
///
/// `K1`, `K2` are always `Complete`; `K3` is always `Cycle(3)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// Anything else. The certificate is the canonical form for components
    /// within the isomorphism limit and a degree/refinement invariant
    /// (prefixed `inv:`) beyond it.
    Other {
        order: usize,
        size: usize,
        certificate: String,
    },
}

impl Component {
    /// Collapses naming collisions: `P1`, `P2` are `K1`, `K2` and `K3` is `C3`.
    pub fn normalized(self) -> Component {
        match self {
            Component::Path(k) if k <= 2 => Component::Complete(k),
            Component::Complete(3) => Component::Cycle(3),
            other => other,
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Component::Complete(k) | Component::Cycle(k) | Component::Path(k) => k,
            Component::Other { order, .. } => order,
        }
    }

    pub fn is_shape_level_only(&self) -> bool {
        matches!(self, Component::Other { certificate, .. } if certificate.starts_with("inv:"))
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Complete(k) => write!(f, "K{k}"),
            Component::Cycle(k) => write!(f, "C{k}"),
            Component::Path(k) => write!(f, "P{k}"),
            Component::Other { order, size, certificate } => {
                write!(f, "G(n={order},m={size},{certificate})")
            }
        }
    }
}

/// Multiset of component shapes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ShapeDescription {
    parts: BTreeMap<Component, usize>,
}

impl ShapeDescription {
    /// Builds a description from `(component, multiplicity)` pairs,
    /// normalizing names and merging repeats.
    pub fn from_parts<I: IntoIterator<Item = (Component, usize)>>(parts: I) -> Self {
        let mut out = ShapeDescription::default();
        for (c, k) in parts {
            if k > 0 {
                *out.parts.entry(c.normalized()).or_default() += k;
            }
        }
        out
    }

    pub fn parts(&self) -> impl Iterator<Item = (&Component, usize)> {
        self.parts.iter().map(|(c, &k)| (c, k))
    }

    pub fn component_count(&self) -> usize {
        self.parts.values().sum()
    }

    pub fn order(&self) -> usize {
        self.parts.iter().map(|(c, k)| c.order() * k).sum()
    }

    /// Multiset union.
    pub fn union(&self, other: &ShapeDescription) -> ShapeDescription {
        ShapeDescription::from_parts(self.parts().chain(other.parts()).map(|(c, k)| (c.clone(), k)))
    }

    /// Every component is a single edge (`xK2`, `x >= 1`).
    pub fn is_matching(&self) -> bool {
        !self.parts.is_empty() && self.parts.keys().all(|c| *c == Component::Complete(2))
    }

    /// Some component certificate is only an invariant, so equality with
    /// another description does not prove isomorphism.
    pub fn is_shape_level_only(&self) -> bool {
        self.parts.keys().any(Component::is_shape_level_only)
    }
}

impl fmt::Display for ShapeDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        // larger components first reads more naturally: "P5 ∪ 10K2"
        let mut items: Vec<_> = self.parts.iter().collect();
        items.sort_by(|a, b| b.0.order().cmp(&a.0.order()).then(a.0.cmp(b.0)));
        for (i, (c, &k)) in items.into_iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            if k > 1 {
                write!(f, "{k}")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for ShapeDescription {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn classify_component(h: &Graph, iso_limit: usize) -> Component {
    let k = h.n();
    let e = h.m();
    if k <= 2 {
        return Component::Complete(k);
    }
    if e == k && (0..k).all(|v| h.degree(v) == 2) {
        return Component::Cycle(k);
    }
    if e == k * (k - 1) / 2 {
        return Component::Complete(k);
    }
    if e + 1 == k && h.max_degree() <= 2 {
        return Component::Path(k);
    }
    let certificate = match canonical_form_with_limit(h, iso_limit) {
        Ok(form) => form.to_string(),
        Err(_) => invariant_certificate(h),
    };
    Component::Other {
        order: k,
        size: e,
        certificate,
    }
}

fn invariant_certificate(h: &Graph) -> String {
    let d = h.distances();
    let mut profiles: Vec<Vec<u32>> = (0..h.n())
        .map(|v| {
            let mut row = d.row(v).to_vec();
            row.sort_unstable();
            row
        })
        .collect();
    profiles.sort_unstable();
    let mut hasher = std::collections::hash_map::DefaultHasher::new();
    std::hash::Hash::hash(&profiles, &mut hasher);
    format!(
        "inv:{:?}:{:016x}",
        h.degree_sequence(),
        std::hash::Hasher::finish(&hasher)
    )
}

/// Describes every connected component of `g` by name when it is a
/// complete graph, cycle or path, and by certificate otherwise.
pub fn classify_shape(g: &Graph) -> ShapeDescription {
    classify_shape_with_limit(g, crate::Limits::default().iso)
}

/// As [`classify_shape`], with an explicit canonical-labeling limit for
/// unnamed components.
pub fn classify_shape_with_limit(g: &Graph, iso_limit: usize) -> ShapeDescription {
    ShapeDescription::from_parts(g.components().into_iter().map(|comp| {
        let (h, _) = g.induced_subgraph(&comp).expect("component vertices are in range");
        (classify_component(&h, iso_limit), 1)
    }))
}
