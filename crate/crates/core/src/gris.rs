//! Greedy rainbow independent set selection over an ordered vertex set, and
//! the two constructions built directly on it: the path rainbow and the
//! `(n-1)`-rainbow of a cycle.

use crate::error::{Error, Result};
use crate::graph::{label, Degree2Graph};
use crate::indset::Collection;
use crate::rainbow::{verify_rainbow, RainbowAssignment};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// What the greedy scan did with one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    /// Added with the unused color of least index.
    Added { color: usize },
    /// Every color containing the vertex was already used.
    NoUnusedColor,
    /// A free color existed but the vertex has a neighbor in the set.
    NotIndependent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub vertex: usize,
    pub decision: Decision,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyResult {
    pub rainbow: RainbowAssignment,
    /// Colors consumed by the scan, ascending.
    pub greedy_colors: Vec<usize>,
    pub trace: Vec<TraceStep>,
}

impl GreedyResult {
    pub fn size(&self) -> usize {
        self.rainbow.len()
    }

    /// Colors of `f` not consumed by the scan.
    pub fn unused_colors(&self, f: &Collection) -> Vec<usize> {
        (0..f.len())
            .filter(|c| self.greedy_colors.binary_search(c).is_err())
            .collect()
    }
}

/// Greedy rainbow independent set: scan `ordering`; add a vertex iff some
/// unused color contains it and it has no neighbor already chosen, binding
/// the unused color of least index.
pub fn gris(g: &Degree2Graph, ordering: &[usize], f: &Collection) -> Result<GreedyResult> {
    check_ordering(g, ordering)?;
    f.validate(g)?;
    Ok(gris_unchecked(g, ordering, f))
}

/// [`gris`] without validating its inputs.
pub fn gris_unchecked(g: &Degree2Graph, ordering: &[usize], f: &Collection) -> GreedyResult {
    let mut used = vec![false; f.len()];
    let mut chosen = VertexSet::EMPTY;
    let mut pairs = Vec::new();
    let mut trace = Vec::with_capacity(ordering.len());
    for &v in ordering {
        let free = (0..f.len()).find(|&c| !used[c] && f.sets()[c].contains(v));
        let decision = match free {
            None => Decision::NoUnusedColor,
            Some(_) if !g.neighbors(v).is_disjoint(chosen) => Decision::NotIndependent,
            Some(color) => {
                used[color] = true;
                chosen.insert(v);
                pairs.push((v, color));
                Decision::Added { color }
            }
        };
        trace.push(TraceStep {
            vertex: v,
            decision,
        });
    }
    let greedy_colors = (0..f.len()).filter(|&c| used[c]).collect();
    GreedyResult {
        rainbow: RainbowAssignment::new(pairs),
        greedy_colors,
        trace,
    }
}

fn check_ordering(g: &Degree2Graph, ordering: &[usize]) -> Result<()> {
    let n = g.vertex_count();
    if ordering.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "ordering has {} entries, {g} has {n} vertices",
            ordering.len()
        )));
    }
    let mut seen = VertexSet::EMPTY;
    for &v in ordering {
        if v >= n {
            return Err(Error::InvalidOrdering(format!("{} is not a vertex of {g}", label(v))));
        }
        if seen.contains(v) {
            return Err(Error::InvalidOrdering(format!("{} appears twice", label(v))));
        }
        seen.insert(v);
    }
    Ok(())
}

/// Replays a greedy trace against `(g, f)`: every recorded decision must be
/// the one the scan is forced to make at that step.
pub fn replay_trace(g: &Degree2Graph, f: &Collection, result: &GreedyResult) -> bool {
    let mut used = vec![false; f.len()];
    let mut chosen = VertexSet::EMPTY;
    for step in &result.trace {
        let v = step.vertex;
        let free: Vec<usize> = (0..f.len())
            .filter(|&c| !used[c] && f.sets()[c].contains(v))
            .collect();
        let blocked = !g.neighbors(v).is_disjoint(chosen);
        match step.decision {
            Decision::NoUnusedColor if free.is_empty() => {}
            Decision::NotIndependent if !free.is_empty() && blocked => {}
            Decision::Added { color } if !blocked && free.first() == Some(&color) => {
                used[color] = true;
                chosen.insert(v);
            }
            _ => return false,
        }
    }
    result.rainbow.vertices() == chosen
}

/// Outcome of the path construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathOutcome {
    /// The scan reached `n` vertices.
    Full,
    /// The scan stopped at `n - 1`; each listed unused set has exactly `n - 1`
    /// vertices, one in each pair `{a, a+1}` for `a` in the rainbow set.
    Tight { unused: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathRainbow {
    pub greedy: GreedyResult,
    pub outcome: PathOutcome,
}

/// Greedy scan of `P_t` in natural order for a collection of independent
/// `(n-1)^+`-sets with at least `n - 1` members, `t >= 2n - 1`, with the
/// size dichotomy on the result checked.
pub fn rainbow_path(t: usize, n: usize, f: &Collection) -> Result<PathRainbow> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let g = Degree2Graph::path(t)?;
    if t + 1 < 2 * n {
        return Err(Error::Precondition(format!("t >= 2n-1 fails: t={t}, n={n}")));
    }
    if f.len() + 1 < n {
        return Err(Error::Precondition(format!(
            "|F| >= n-1 fails: |F|={}, n={n}",
            f.len()
        )));
    }
    f.validate(&g)?;
    if let Some(i) = f.sets().iter().position(|s| s.len() + 1 < n) {
        return Err(Error::Precondition(format!(
            "every set has size >= n-1 fails: set {} has {} elements",
            i + 1,
            f.sets()[i].len()
        )));
    }
    let ordering: Vec<usize> = (0..t).collect();
    let greedy = gris_unchecked(&g, &ordering, f);
    let outcome = path_dichotomy(n, f, &greedy).map_err(Error::ContractViolation)?;
    Ok(PathRainbow { greedy, outcome })
}

fn path_dichotomy(n: usize, f: &Collection, greedy: &GreedyResult) -> Result<PathOutcome, String> {
    let r = greedy.size();
    if r >= n {
        return Ok(PathOutcome::Full);
    }
    if r + 1 != n {
        return Err(format!("greedy path rainbow has {r} vertices, expected at least {}", n - 1));
    }
    let unused = greedy.unused_colors(f);
    let chosen = greedy.rainbow.vertices();
    for &c in &unused {
        let s = f.sets()[c];
        if s.len() != r {
            return Err(format!("unused set {} has {} elements, expected {r}", c + 1, s.len()));
        }
        for a in chosen.iter() {
            let mut pair = VertexSet::singleton(a);
            if a + 1 < MAX_VERTICES {
                pair.insert(a + 1);
            }
            if s.intersection(pair).len() != 1 {
                return Err(format!(
                    "unused set {} misses the pair {{{}, {}}}",
                    c + 1,
                    label(a),
                    label(a + 1)
                ));
            }
        }
    }
    Ok(PathOutcome::Tight { unused })
}

/// A rainbow independent `(n-1)`-set of `(f, C_t)` for `t >= 2n` and at
/// least `n - 1` independent `n`-sets: delete the last vertex, scan the
/// remaining path in natural order, keep the first `n - 1` chosen vertices.
pub fn rainbow_cycle_n_minus_1(t: usize, n: usize, f: &Collection) -> Result<RainbowAssignment> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let g = Degree2Graph::cycle(t)?;
    if t < 2 * n {
        return Err(Error::Precondition(format!("t >= 2n fails: t={t}, n={n}")));
    }
    if f.len() + 1 < n {
        return Err(Error::Precondition(format!(
            "|F| >= n-1 fails: |F|={}, n={n}",
            f.len()
        )));
    }
    f.validate(&g)?;
    f.check_uniform(n)?;
    if n == 1 {
        return Ok(RainbowAssignment::empty());
    }
    let restricted = f.restrict(VertexSet::prefix(t - 1));
    let path = rainbow_path(t - 1, n, &restricted)?;
    let r = path.greedy.rainbow.truncated(n - 1);
    if r.len() != n - 1 || !verify_rainbow(&g, f, &r, n - 1)? {
        return Err(Error::ContractViolation(format!(
            "cycle construction on C{t} produced {} vertices",
            r.len()
        )));
    }
    Ok(r)
}
