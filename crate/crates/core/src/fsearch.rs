//! Exhaustive search for `f_G(n, m)`.
//!
//! A collection is *bad* when it has no rainbow independent `m`-set. Badness
//! is closed under taking sub-multisets, so `f_G(n, m)` is one more than the
//! largest bad size and the bad collections can be grown one set at a time.
//!
//! Collections are sorted tuples of indices into the lexicographic list of
//! independent `n`-sets. Each level keeps only tuples that are least in their
//! orbit under the automorphism group. Dropping the largest index of a
//! canonical tuple leaves a canonical tuple, so every canonical bad
//! collection of size `k + 1` is reached exactly once by appending an index
//! no smaller than the last one to a canonical bad collection of size `k`.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cyclic_add, Degree2Graph};
use crate::indset::{enumerate_ind_sets, Collection};
use crate::par::Executor;
use crate::rainbow::{has_rainbow, has_rainbow_sets, MAX_COLORS};
use crate::symmetry::{IndexAction, SymmetryGroup};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Largest collection size explored; `None` means `3n`.
    pub level_cap: Option<usize>,
    /// Prune by graph automorphisms.
    pub symmetry: bool,
    /// Worker threads; 0 uses every core, 1 runs sequentially.
    pub workers: usize,
    pub time_budget: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            level_cap: None,
            symmetry: true,
            workers: 0,
            time_budget: Some(Duration::from_secs(60)),
        }
    }
}

impl SearchConfig {
    pub fn sequential() -> Self {
        SearchConfig {
            workers: 1,
            ..SearchConfig::default()
        }
    }

    fn cap(&self, n: usize) -> usize {
        self.level_cap.unwrap_or(3 * n).min(MAX_COLORS)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Candidate tuples generated.
    pub nodes: u64,
    /// Canonical tuples tested (or accepted below level `m`).
    pub canonical_classes: u64,
    pub group_order: usize,
    pub wall_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchStatus {
    /// `f_value` is exact.
    Exact,
    /// Bad collections reach the level cap; `f_value` is a lower bound.
    LevelCap { cap: usize },
    /// Time ran out; `f_value` is a lower bound.
    TimeBudget { seconds: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FResult {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub f_value: usize,
    pub status: SearchStatus,
    /// A largest bad collection found, if any has at least `m` sets.
    pub witness: Option<Collection>,
    pub stats: SearchStats,
}

impl FResult {
    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }
}

/// No rainbow independent `m`-set.
pub fn is_bad(g: &Degree2Graph, f: &Collection, m: usize) -> bool {
    !has_rainbow(g, f, m)
}

fn check_parameters(g: &Degree2Graph, n: usize, m: usize) -> Result<Vec<VertexSet>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if m > n {
        return Err(Error::InvalidParameter(format!("m = {m} exceeds n = {n}")));
    }
    let sets = enumerate_ind_sets(g, n);
    if sets.is_empty() {
        return Err(Error::EmptyIndependentFamily {
            graph: g.to_string(),
            n,
        });
    }
    if sets.len() > u32::MAX as usize {
        return Err(Error::InvalidParameter(format!(
            "{} independent {n}-sets is too many to index",
            sets.len()
        )));
    }
    Ok(sets)
}

struct Levels<'a> {
    g: &'a Degree2Graph,
    sets: Vec<VertexSet>,
    action: IndexAction,
    m: usize,
    exec: Executor,
    deadline: Option<Instant>,
    group_order: usize,
}

struct Level {
    width: usize,
    /// Concatenated tuples of `width` indices.
    tuples: Vec<u32>,
}

impl Level {
    fn root() -> Self {
        Level {
            width: 0,
            tuples: Vec::new(),
        }
    }

    fn count(&self) -> usize {
        self.tuples.len().checked_div(self.width).unwrap_or(1)
    }

    fn is_empty(&self) -> bool {
        self.count() == 0
    }

    fn tuple(&self, i: usize) -> &[u32] {
        &self.tuples[i * self.width..(i + 1) * self.width]
    }
}

struct Expansion {
    tuples: Vec<u32>,
    nodes: u64,
    canonical: u64,
    timed_out: bool,
}

impl<'a> Levels<'a> {
    fn new(g: &'a Degree2Graph, sets: Vec<VertexSet>, m: usize, cfg: &SearchConfig) -> Self {
        let (action, group_order) = if cfg.symmetry {
            let group = SymmetryGroup::automorphisms(g);
            (IndexAction::new(&group, &sets), group.order())
        } else {
            (IndexAction::identity(), 1)
        };
        Levels {
            g,
            sets,
            action,
            m,
            exec: Executor::new(cfg.workers),
            deadline: cfg.time_budget.map(|d| Instant::now() + d),
            group_order,
        }
    }

    fn expand_one(&self, parent: &[u32]) -> Expansion {
        let mut out = Expansion {
            tuples: Vec::new(),
            nodes: 0,
            canonical: 0,
            timed_out: false,
        };
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            out.timed_out = true;
            return out;
        }
        let start = parent.last().copied().unwrap_or(0);
        let mut child: Vec<u32> = parent.to_vec();
        child.push(0);
        let mut chosen: Vec<VertexSet> = parent.iter().map(|&i| self.sets[i as usize]).collect();
        chosen.push(VertexSet::EMPTY);
        let k = child.len();
        for i in start..self.sets.len() as u32 {
            child[k - 1] = i;
            out.nodes += 1;
            if !self.action.is_canonical(&child) {
                continue;
            }
            out.canonical += 1;
            chosen[k - 1] = self.sets[i as usize];
            if k >= self.m && has_rainbow_sets(self.g, &chosen, self.m) {
                continue;
            }
            out.tuples.extend_from_slice(&child);
        }
        out
    }

    /// Canonical bad children of every tuple in `level`, in order.
    fn expand(&self, level: &Level, stats: &mut SearchStats) -> (Level, bool) {
        let parents: Vec<&[u32]> = (0..level.count()).map(|i| level.tuple(i)).collect();
        let parts = self.exec.map(&parents, |p| self.expand_one(p));
        let mut tuples = Vec::new();
        let mut timed_out = false;
        for part in parts {
            stats.nodes += part.nodes;
            stats.canonical_classes += part.canonical;
            timed_out |= part.timed_out;
            tuples.extend(part.tuples);
        }
        let next = Level {
            width: level.width + 1,
            tuples,
        };
        (next, timed_out)
    }

    fn collection(&self, tuple: &[u32]) -> Collection {
        tuple.iter().map(|&i| self.sets[i as usize]).collect()
    }
}

/// Computes `f_G(n, m)` by growing canonical bad collections level by level.
///
/// The search stops early at the level cap or time budget; the result then
/// carries a lower bound and the status says why.
pub fn f_value(g: &Degree2Graph, n: usize, m: usize, cfg: &SearchConfig) -> Result<FResult> {
    let sets = check_parameters(g, n, m)?;
    let cap = cfg.cap(n);
    if cap < m {
        return Err(Error::InvalidParameter(format!(
            "level cap {cap} is below m = {m}"
        )));
    }
    let started = Instant::now();
    let search = Levels::new(g, sets, m, cfg);
    let mut stats = SearchStats {
        group_order: search.group_order,
        ..SearchStats::default()
    };
    let mut prev: Option<Level> = None;
    let mut level = Level::root();
    let (f, status, last_bad) = loop {
        let k = level.width;
        if m == 0 {
            // Even the empty collection has the empty rainbow set.
            break (0, SearchStatus::Exact, None);
        }
        if level.is_empty() {
            break (k, SearchStatus::Exact, prev);
        }
        if k == cap {
            break (k + 1, SearchStatus::LevelCap { cap }, Some(level));
        }
        let (next, timed_out) = search.expand(&level, &mut stats);
        if timed_out {
            let seconds = cfg.time_budget.map_or(0, |d| d.as_secs());
            break ((k + 1).max(m), SearchStatus::TimeBudget { seconds }, Some(level));
        }
        prev = Some(level);
        level = next;
    };
    let witness = last_bad
        .filter(|l| l.width >= m && !l.is_empty())
        .map(|l| search.collection(l.tuple(0)));
    stats.wall_ms = started.elapsed().as_millis() as u64;
    Ok(FResult {
        graph: g.to_string(),
        n,
        m,
        f_value: f,
        status,
        witness,
        stats,
    })
}

/// Canonical representatives of the bad collections of exactly `size`
/// independent `n`-sets, or `None` if the time budget ran out.
pub fn bad_collections(
    g: &Degree2Graph,
    n: usize,
    m: usize,
    size: usize,
    cfg: &SearchConfig,
) -> Result<Option<Vec<Collection>>> {
    let sets = check_parameters(g, n, m)?;
    if size > MAX_COLORS {
        return Err(Error::InvalidParameter(format!(
            "at most {MAX_COLORS} sets are supported"
        )));
    }
    let search = Levels::new(g, sets, m, cfg);
    let mut stats = SearchStats::default();
    let mut level = Level::root();
    while level.width < size && !level.is_empty() {
        let (next, timed_out) = search.expand(&level, &mut stats);
        if timed_out {
            return Ok(None);
        }
        level = next;
    }
    if size == 0 {
        return Ok(Some(if m == 0 { Vec::new() } else { vec![Collection::default()] }));
    }
    Ok(Some(
        (0..level.count()).map(|i| search.collection(level.tuple(i))).collect(),
    ))
}

/// Outcome of one structural check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Check {
    Pass,
    /// Fails at this 0-based vertex.
    Fail { vertex: usize },
    NotApplicable,
}

impl Check {
    pub fn is_fail(self) -> bool {
        matches!(self, Check::Fail { .. })
    }
}

/// List-number properties of a bad collection of `n` independent `n`-sets on
/// the cycle `C_t` with `t >= 2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BReport {
    /// Every vertex lies in some set.
    pub b1: Check,
    /// A vertex lying in exactly one set `I` has both `i - 2` and `i + 2`
    /// in `I`.
    pub b2: Check,
    /// No two consecutive vertices both lie in exactly one set (only for
    /// `t >= 2n + 1`).
    pub b3: Check,
}

impl BReport {
    pub fn all_hold(&self) -> bool {
        !(self.b1.is_fail() || self.b2.is_fail() || self.b3.is_fail())
    }
}

pub fn check_b_properties(t: usize, n: usize, f: &Collection) -> Result<BReport> {
    if n == 0 || t < 2 * n {
        return Err(Error::Precondition(format!("need t >= 2n, got t = {t}, n = {n}")));
    }
    let g = Degree2Graph::cycle(t)?;
    if f.len() != n {
        return Err(Error::Precondition(format!(
            "need exactly n = {n} sets, got {}",
            f.len()
        )));
    }
    f.validate(&g)?;
    f.check_uniform(n)?;
    if has_rainbow(&g, f, n) {
        return Err(Error::Precondition(
            "the collection has a rainbow independent n-set".into(),
        ));
    }
    let lists: Vec<usize> = (0..t).map(|v| f.list_number(v)).collect();
    let b1 = match lists.iter().position(|&l| l == 0) {
        Some(vertex) => Check::Fail { vertex },
        None => Check::Pass,
    };
    let b2 = (0..t)
        .find(|&v| {
            lists[v] == 1 && {
                let s = f.sets()[f.list_of(v)[0]];
                !(s.contains(cyclic_add(v, -2, t)) && s.contains(cyclic_add(v, 2, t)))
            }
        })
        .map_or(Check::Pass, |vertex| Check::Fail { vertex });
    let b3 = if t < 2 * n + 1 {
        Check::NotApplicable
    } else {
        (0..t)
            .find(|&v| lists[v] == 1 && lists[cyclic_add(v, 1, t)] == 1)
            .map_or(Check::Pass, |vertex| Check::Fail { vertex })
    };
    Ok(BReport { b1, b2, b3 })
}

/// The list-number checks over every canonical bad collection of `n`
/// independent `n`-sets on `C_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BSweep {
    pub t: usize,
    pub n: usize,
    pub collections: usize,
    /// First collection violating a property, with its report.
    pub counterexample: Option<(Collection, BReport)>,
    pub timed_out: bool,
}

impl BSweep {
    /// No bad collection exists, so the properties hold vacuously.
    pub fn is_vacuous(&self) -> bool {
        !self.timed_out && self.collections == 0
    }

    pub fn holds(&self) -> bool {
        !self.timed_out && self.counterexample.is_none()
    }
}

pub fn sweep_b_properties(t: usize, n: usize, cfg: &SearchConfig) -> Result<BSweep> {
    if n == 0 || t < 2 * n {
        return Err(Error::Precondition(format!("need t >= 2n, got t = {t}, n = {n}")));
    }
    let g = Degree2Graph::cycle(t)?;
    let Some(bad) = bad_collections(&g, n, n, n, cfg)? else {
        return Ok(BSweep {
            t,
            n,
            collections: 0,
            counterexample: None,
            timed_out: true,
        });
    };
    let mut counterexample = None;
    for f in &bad {
        let report = check_b_properties(t, n, f)?;
        if !report.all_hold() {
            counterexample = Some((f.clone(), report));
            break;
        }
    }
    Ok(BSweep {
        t,
        n,
        collections: bad.len(),
        counterexample,
        timed_out: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(d: &str) -> Degree2Graph {
        d.parse().unwrap()
    }

    fn f(d: &str, n: usize, m: usize) -> FResult {
        f_value(&g(d), n, m, &SearchConfig::sequential()).unwrap()
    }

    #[test]
    fn small_cycles() {
        assert_eq!(f("C5", 2, 2).f_value, 2);
        assert_eq!(f("C4", 2, 2).f_value, 3);
        assert_eq!(f("C6", 3, 3).f_value, 5);
        let r = f("C6", 3, 3);
        assert!(r.is_exact());
        let w = r.witness.unwrap();
        assert_eq!(w.len(), 4);
        assert!(is_bad(&g("C6"), &w, 3));
    }

    #[test]
    fn m_zero_and_one() {
        assert_eq!(f("C7", 3, 0).f_value, 0);
        assert_eq!(f("C7", 3, 1).f_value, 1);
        assert!(f("C7", 3, 1).witness.is_none());
    }

    #[test]
    fn symmetry_does_not_change_the_value() {
        for (d, n) in [("C6", 2), ("C7", 3), ("P6", 3), ("C4+C4", 3)] {
            let with = f(d, n, n);
            let cfg = SearchConfig {
                symmetry: false,
                ..SearchConfig::sequential()
            };
            let without = f_value(&g(d), n, n, &cfg).unwrap();
            assert_eq!(with.f_value, without.f_value, "{d}");
            assert!(with.stats.canonical_classes <= without.stats.canonical_classes);
        }
    }

    #[test]
    fn level_cap_gives_lower_bound() {
        let cfg = SearchConfig {
            level_cap: Some(4),
            ..SearchConfig::sequential()
        };
        let r = f_value(&g("C8"), 4, 4, &cfg).unwrap();
        assert_eq!(r.status, SearchStatus::LevelCap { cap: 4 });
        assert_eq!(r.f_value, 5);
        assert_eq!(r.witness.unwrap().len(), 4);
    }

    #[test]
    fn empty_family_is_an_error() {
        let err = f_value(&g("C5"), 3, 3, &SearchConfig::sequential()).unwrap_err();
        assert!(matches!(err, Error::EmptyIndependentFamily { n: 3, .. }));
        assert!(f_value(&g("C5"), 2, 3, &SearchConfig::sequential()).is_err());
    }

    #[test]
    fn b_properties_on_even_cycle() {
        // Two copies of the odd class and one of the even class on C6
        // leave no rainbow 3-set.
        let f = Collection::from_labels(&[vec![1, 3, 5], vec![1, 3, 5], vec![2, 4, 6]]).unwrap();
        let rep = check_b_properties(6, 3, &f).unwrap();
        assert_eq!(rep.b1, Check::Pass);
        assert_eq!(rep.b2, Check::Pass);
        assert_eq!(rep.b3, Check::NotApplicable);
        let good = Collection::from_labels(&[vec![1, 3, 5], vec![1, 3, 5], vec![1, 3, 5]]).unwrap();
        assert!(matches!(
            check_b_properties(6, 3, &good),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn b_sweep_on_odd_cycle_is_vacuous() {
        let s = sweep_b_properties(7, 3, &SearchConfig::sequential()).unwrap();
        assert!(s.is_vacuous());
        let s = sweep_b_properties(8, 3, &SearchConfig::sequential()).unwrap();
        assert!(s.holds());
    }
}
