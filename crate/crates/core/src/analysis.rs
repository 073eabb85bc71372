//! One-shot analysis of a connected graph: SR graph, dimensions, outcomes.

use crate::game::{outcome_rg_exact_with_limit, outcome_sr_core, outcome_srg_classifier};
use crate::graph::{classify_shape_with_limit, Graph, ShapeDescription};
use crate::resolving::{
    is_resolving_set, is_strong_resolving_set, metric_dimension_with_limit,
    min_vertex_cover_with_limit, strong_resolving_graph,
};
use crate::{Error, Limits, Outcome, Result};
use serde::{Serialize, Serializer};
use std::fmt;
use std::time::Instant;

/// Result of one analysis stage; exceeding a size limit skips the stage.
#[derive(Debug, Clone, PartialEq)]
pub enum Stage<T> {
    Done(T),
    Skipped(String),
}

impl<T> Stage<T> {
    pub fn done(&self) -> Option<&T> {
        match self {
            Stage::Done(t) => Some(t),
            Stage::Skipped(_) => None,
        }
    }

    fn from_result(r: Result<T>) -> Result<Stage<T>> {
        match r {
            Ok(t) => Ok(Stage::Done(t)),
            Err(Error::LimitExceeded { what, size, limit }) => Ok(Stage::Skipped(format!(
                "skipped: limit ({what}: {size} > {limit})"
            ))),
            Err(e) => Err(e),
        }
    }
}

impl<T: Serialize> Serialize for Stage<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Stage::Done(t) => t.serialize(s),
            Stage::Skipped(reason) => s.serialize_str(reason),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Stage<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Done(t) => t.fmt(f),
            Stage::Skipped(reason) => f.write_str(reason),
        }
    }
}

/// A dimension value with a set attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnessed {
    pub value: usize,
    pub witness: Vec<usize>,
}

impl fmt::Display for Witnessed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.value, self.witness)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timing {
    pub stage: &'static str,
    pub millis: f64,
}

/// Internal inconsistency found while analysing. Never expected; reported
/// rather than reconciled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Defect {
    pub kind: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub sr_core_order: usize,
    pub sr_core_size: usize,
    pub sr_shape: ShapeDescription,
    pub sdim: Stage<Witnessed>,
    pub dim: Stage<Witnessed>,
    pub outcome_exact: Stage<Outcome>,
    pub outcome_classifier: Outcome,
    pub outcome_r: Option<Stage<Outcome>>,
    pub timings: Vec<Timing>,
    pub defects: Vec<Defect>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub limits: Limits,
    /// Also solve the resolving game.
    pub resolving_game: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            limits: Limits::default(),
            resolving_game: true,
        }
    }
}

fn timed<T>(timings: &mut Vec<Timing>, stage: &'static str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.push(Timing {
        stage,
        millis: start.elapsed().as_secs_f64() * 1e3,
    });
    out
}

/// Analyses a connected graph of order at least 2.
pub fn analyze(g: &Graph, source: &str, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let limits = opts.limits;
    let mut timings = Vec::new();
    let mut defects = Vec::new();

    let sr = timed(&mut timings, "sr_graph", || strong_resolving_graph(g))?;
    let d = g.distances();
    let core = sr.core();
    let sr_shape = timed(&mut timings, "shape", || classify_shape_with_limit(core, limits.iso));

    let sdim = timed(&mut timings, "sdim", || {
        Stage::from_result(min_vertex_cover_with_limit(core, limits.cover).map(|(value, cover)| {
            let mut witness: Vec<usize> = cover.iter().map(|&v| sr.to_parent()[v]).collect();
            witness.sort_unstable();
            Witnessed { value, witness }
        }))
    })?;
    if let Stage::Done(w) = &sdim {
        if w.witness.len() != w.value || !is_strong_resolving_set(g, &w.witness)? {
            defects.push(Defect {
                kind: "sdim-witness",
                detail: format!("{:?} does not strongly resolve the graph", w.witness),
            });
        }
    }

    let dim = timed(&mut timings, "dim", || {
        Stage::from_result(
            metric_dimension_with_limit(g, limits.dim).map(|(value, witness)| Witnessed { value, witness }),
        )
    })?;
    if let Stage::Done(w) = &dim {
        if w.witness.len() != w.value || !is_resolving_set(g, &w.witness)? {
            defects.push(Defect {
                kind: "dim-witness",
                detail: format!("{:?} does not resolve the graph", w.witness),
            });
        }
    }

    let outcome_exact = timed(&mut timings, "outcome_exact", || {
        Stage::from_result(outcome_sr_core(&sr, limits.exact))
    })?;
    let outcome_classifier = timed(&mut timings, "outcome_classifier", || outcome_srg_classifier(&sr))?;
    if let Stage::Done(exact) = outcome_exact {
        if exact != outcome_classifier {
            defects.push(Defect {
                kind: "classifier-mismatch",
                detail: format!("exact solver gives {exact}, classifier gives {outcome_classifier}"),
            });
        }
    }

    let outcome_r = if opts.resolving_game {
        let o = timed(&mut timings, "outcome_r", || {
            Stage::from_result(outcome_rg_exact_with_limit(g, limits.dim.min(limits.exact)))
        })?;
        if let (Stage::Done(o_sr), Stage::Done(o_r)) = (&outcome_exact, &o) {
            if o_sr > o_r {
                defects.push(Defect {
                    kind: "outcome-order",
                    detail: format!("strong resolving outcome {o_sr} exceeds resolving outcome {o_r}"),
                });
            }
        }
        Some(o)
    } else {
        None
    };

    Ok(AnalysisReport {
        source: source.to_string(),
        n: g.n(),
        m: g.m(),
        diameter: d.diameter(),
        sr_core_order: core.n(),
        sr_core_size: core.m(),
        sr_shape,
        sdim,
        dim,
        outcome_exact,
        outcome_classifier,
        outcome_r,
        timings,
        defects,
    })
}

impl AnalysisReport {
    /// Human-readable multi-line rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<20}{v}\n"));
        line("source", self.source.clone());
        line("order / size", format!("{} / {}", self.n, self.m));
        line("diameter", self.diameter.to_string());
        line(
            "SR core",
            format!("{} ({} vertices, {} edges)", self.sr_shape, self.sr_core_order, self.sr_core_size),
        );
        line("sdim", self.sdim.to_string());
        line("dim", self.dim.to_string());
        line("O_SR (exact)", self.outcome_exact.to_string());
        line("O_SR (classifier)", self.outcome_classifier.to_string());
        if let Some(o) = &self.outcome_r {
            line("O_R (exact)", o.to_string());
        }
        let timings: Vec<String> = self
            .timings
            .iter()
            .map(|t| format!("{}={:.2}ms", t.stage, t.millis))
            .collect();
        line("timings", timings.join(" "));
        for defect in &self.defects {
            line("DEFECT", format!("{}: {}", defect.kind, defect.detail));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
