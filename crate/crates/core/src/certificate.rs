//! Self-contained JSON certificates for rainbow independent sets.
//!
//! All vertices and colors in a certificate are 1-based.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{label, vertex, Degree2Graph};
use crate::gris::{replay_trace, Decision, GreedyResult, TraceStep};
use crate::indset::Collection;
use crate::rainbow::{verify_rainbow, RainbowAssignment};
use crate::two_jump::{Move, MoveRecord, TwoJumpOutcome};

pub const CERTIFICATE_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Added,
    NoUnusedColor,
    NotIndependent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub vertex: usize,
    pub decision: StepKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<usize>,
}

impl TraceEntry {
    fn from_step(s: &TraceStep) -> Self {
        let (decision, color) = match s.decision {
            Decision::Added { color } => (StepKind::Added, Some(color + 1)),
            Decision::NoUnusedColor => (StepKind::NoUnusedColor, None),
            Decision::NotIndependent => (StepKind::NotIndependent, None),
        };
        TraceEntry {
            vertex: label(s.vertex),
            decision,
            color,
        }
    }

    fn to_step(self) -> Result<TraceStep> {
        let v = vertex(self.vertex)
            .ok_or_else(|| Error::InvalidCertificate(format!("trace vertex {}", self.vertex)))?;
        let decision = match (self.decision, self.color) {
            (StepKind::Added, Some(c)) if c > 0 => Decision::Added { color: c - 1 },
            (StepKind::NoUnusedColor, None) => Decision::NoUnusedColor,
            (StepKind::NotIndependent, None) => Decision::NotIndependent,
            _ => return Err(Error::InvalidCertificate(format!("malformed trace step at {}", self.vertex))),
        };
        Ok(TraceStep { vertex: v, decision })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub version: u32,
    pub solver: String,
    pub graph: String,
    /// Size of the certified rainbow set.
    pub m: usize,
    /// Scan order of the greedy solver.
    pub ordering: Option<Vec<usize>>,
    pub collection: Collection,
    pub rainbow: RainbowAssignment,
    pub greedy_colors: Option<Vec<usize>>,
    pub trace: Option<Vec<TraceEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moves: Option<Vec<MoveRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fell_back: Option<bool>,
}

impl Certificate {
    pub fn from_rainbow(solver: &str, g: &Degree2Graph, f: &Collection, r: &RainbowAssignment) -> Self {
        Certificate {
            version: CERTIFICATE_VERSION,
            solver: solver.to_string(),
            graph: g.to_string(),
            m: r.len(),
            ordering: None,
            collection: f.clone(),
            rainbow: r.clone(),
            greedy_colors: None,
            trace: None,
            moves: None,
            fell_back: None,
        }
    }

    pub fn from_greedy(g: &Degree2Graph, ordering: &[usize], f: &Collection, res: &GreedyResult) -> Self {
        Certificate {
            ordering: Some(ordering.iter().map(|&v| label(v)).collect()),
            greedy_colors: Some(res.greedy_colors.iter().map(|c| c + 1).collect()),
            trace: Some(res.trace.iter().map(TraceEntry::from_step).collect()),
            ..Certificate::from_rainbow("gris", g, f, &res.rainbow)
        }
    }

    pub fn from_two_jump(g: &Degree2Graph, f: &Collection, out: &TwoJumpOutcome) -> Self {
        let moves = out.moves.iter().map(labelled).collect();
        Certificate {
            moves: Some(moves),
            fell_back: Some(out.fell_back),
            ..Certificate::from_rainbow("two-jump", g, f, &out.rainbow)
        }
    }

    /// Re-checks the rainbow set against the graph and collection, and
    /// replays the greedy trace when one is present.
    pub fn verify(&self) -> Result<bool> {
        let g: Degree2Graph = self
            .graph
            .parse()
            .map_err(|e| Error::InvalidCertificate(format!("graph: {e}")))?;
        self.collection.validate(&g)?;
        if !verify_rainbow(&g, &self.collection, &self.rainbow, self.m)? {
            return Ok(false);
        }
        let Some(trace) = &self.trace else {
            return Ok(true);
        };
        let ordering: Vec<usize> = match &self.ordering {
            Some(o) => o
                .iter()
                .map(|&l| vertex(l).ok_or_else(|| Error::InvalidCertificate(format!("ordering entry {l}"))))
                .collect::<Result<_>>()?,
            None => return Err(Error::InvalidCertificate("trace without ordering".into())),
        };
        let steps: Vec<TraceStep> = trace.iter().map(|e| e.to_step()).collect::<Result<_>>()?;
        if steps.iter().map(|s| s.vertex).ne(ordering.iter().copied()) {
            return Ok(false);
        }
        let mut colors = self.rainbow.colors();
        colors.sort_unstable();
        let greedy = GreedyResult {
            rainbow: self.rainbow.clone(),
            greedy_colors: colors,
            trace: steps,
        };
        let claimed: Option<Vec<usize>> = self
            .greedy_colors
            .as_ref()
            .map(|c| c.iter().map(|x| x.saturating_sub(1)).collect());
        Ok(claimed.as_ref() == Some(&greedy.greedy_colors) && replay_trace(&g, &self.collection, &greedy))
    }
}

fn labelled(r: &MoveRecord) -> MoveRecord {
    let step = match r.step.clone() {
        Move::Add { vertex } => Move::Add { vertex: label(vertex) },
        Move::Exchange { removed, added } => Move::Exchange {
            removed: label(removed),
            added: added.map(label),
        },
        Move::Shift { from, to } => Move::Shift {
            from: label(from),
            to: label(to),
        },
    };
    MoveRecord { step, ..r.clone() }
}
