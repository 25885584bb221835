//! Rainbow independent `n`-sets for `n` 2-jump independent `n`-sets of a
//! cycle `C_t`, `t >= 2n + 1`.
//!
//! The solver keeps a rainbow independent set `A` and improves it under the
//! order "larger first, then smaller gap vector". The gap vector of `A`
//! listed clockwise from an anchor `a_1` is
//! `(a_r - a_1, a_2 - a_1, ..., a_r - a_{r-1})` mod `t`; `D_A` is its least
//! value over anchors. Moves:
//!
//! * add a vertex outside `N[A]`;
//! * swap one vertex of `A` for two;
//! * replace one vertex so that `D_A` strictly decreases.
//!
//! Colors are reassigned by bipartite matching after each move, which covers
//! the recolorings along 2-jump chains. When no move applies and `|A| < n`
//! the exact search takes over.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cyclic_sub, Degree2Graph};
use crate::gris::rainbow_cycle_n_minus_1;
use crate::indset::{Collection, JumpSet};
use crate::rainbow::{find_rainbow, least_color_assignment, verify_rainbow, RainbowAssignment};
use crate::vertex_set::VertexSet;

/// A rainbow set listed clockwise from the anchor that minimizes its gap
/// vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoJumpState {
    /// Clockwise from the anchor, 0-based.
    pub vertices: Vec<usize>,
    /// Color of each entry of `vertices`.
    pub colors: Vec<usize>,
    pub gaps: Vec<usize>,
    /// Colors not used by the set, ascending; when `|A| = n - 1` the single
    /// entry is the distinguished unused set.
    pub unused: Vec<usize>,
}

impl TwoJumpState {
    fn new(t: usize, lists: &[u128], colors_total: usize, set: VertexSet) -> Option<Self> {
        let members = set.to_vec();
        let (anchor, gaps) = min_gap_vector(t, &members);
        let mut vertices = members[anchor..].to_vec();
        vertices.extend_from_slice(&members[..anchor]);
        let colors = least_color_assignment(lists, &vertices)?;
        let used: u128 = colors.iter().fold(0, |m, &c| m | 1u128 << c);
        let unused = (0..colors_total).filter(|&c| used >> c & 1 == 0).collect();
        Some(TwoJumpState {
            vertices,
            colors,
            gaps,
            unused,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn assignment(&self) -> RainbowAssignment {
        RainbowAssignment::new(self.vertices.iter().copied().zip(self.colors.iter().copied()).collect())
    }

    fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

/// Gap vector with anchor at `members[i]` (members ascending).
fn gap_vector(t: usize, members: &[usize], i: usize) -> Vec<usize> {
    let r = members.len();
    let at = |k: usize| members[(i + k) % r];
    let mut gaps = Vec::with_capacity(r);
    gaps.push(cyclic_sub(at(r - 1), at(0), t));
    for k in 1..r {
        gaps.push(cyclic_sub(at(k), at(k - 1), t));
    }
    gaps
}

/// Anchor index and least gap vector over all anchors.
fn min_gap_vector(t: usize, members: &[usize]) -> (usize, Vec<usize>) {
    if members.is_empty() {
        return (0, Vec::new());
    }
    (0..members.len())
        .map(|i| (i, gap_vector(t, members, i)))
        .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
        .expect("nonempty")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    Add { vertex: usize },
    Exchange { removed: usize, added: [usize; 2] },
    Shift { from: usize, to: usize },
}

/// One applied move with the gap vectors around it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    #[serde(flatten)]
    pub step: Move,
    pub size_before: usize,
    pub size_after: usize,
    pub gaps_before: Vec<usize>,
    pub gaps_after: Vec<usize>,
}

impl MoveRecord {
    /// The move went strictly down the well-order.
    pub fn improves(&self) -> bool {
        self.size_after > self.size_before
            || (self.size_after == self.size_before && self.gaps_after < self.gaps_before)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoJumpOutcome {
    pub rainbow: RainbowAssignment,
    /// Set at the end of the move phase.
    pub state: TwoJumpState,
    pub moves: Vec<MoveRecord>,
    /// The move phase stalled below `n` and the exact search finished.
    pub fell_back: bool,
}

/// Checks the input and returns it as a collection.
pub fn two_jump_collection(t: usize, n: usize, sets: &[JumpSet]) -> Result<Collection> {
    if n == 0 || t < 2 * n + 1 {
        return Err(Error::Precondition(format!("need t >= 2n + 1, got t = {t}, n = {n}")));
    }
    if sets.len() != n {
        return Err(Error::Precondition(format!(
            "need exactly n = {n} sets, got {}",
            sets.len()
        )));
    }
    for (i, s) in sets.iter().enumerate() {
        if s.cycle_len != t || s.jump != 2 || s.size != n {
            return Err(Error::Precondition(format!(
                "set {} is not a 2-jump {n}-set of C{t}",
                i + 1
            )));
        }
    }
    Ok(sets.iter().map(JumpSet::vertex_set).collect())
}

/// Builds a rainbow independent `n`-set for `n` 2-jump `n`-sets of `C_t`.
pub fn solve_two_jump(t: usize, n: usize, sets: &[JumpSet]) -> Result<TwoJumpOutcome> {
    let f = two_jump_collection(t, n, sets)?;
    let g = Degree2Graph::cycle(t)?;
    let lists: Vec<u128> = (0..t).map(|v| f.list_mask(v)).collect();
    let start = rainbow_cycle_n_minus_1(t, n, &f)?;
    let mut state = TwoJumpState::new(t, &lists, n, start.vertices())
        .ok_or_else(|| Error::ContractViolation("initial set has no coloring".into()))?;
    let mut moves = Vec::new();
    while state.len() < n {
        let Some((step, next)) = best_move(&g, t, &lists, n, &state) else {
            break;
        };
        moves.push(MoveRecord {
            step,
            size_before: state.len(),
            size_after: next.len(),
            gaps_before: state.gaps.clone(),
            gaps_after: next.gaps.clone(),
        });
        state = next;
    }
    let (rainbow, fell_back) = if state.len() == n {
        (state.assignment(), false)
    } else {
        let r = find_rainbow(&g, &f, n).ok_or_else(|| {
            Error::ContractViolation(format!("no rainbow independent {n}-set on C{t}"))
        })?;
        (r, true)
    };
    if !verify_rainbow(&g, &f, &rainbow, n)? {
        return Err(Error::ContractViolation("two-jump result failed verification".into()));
    }
    Ok(TwoJumpOutcome {
        rainbow,
        state,
        moves,
        fell_back,
    })
}

fn best_move(
    g: &Degree2Graph,
    t: usize,
    lists: &[u128],
    colors: usize,
    state: &TwoJumpState,
) -> Option<(Move, TwoJumpState)> {
    let a = state.vertex_set();
    let free = |s: VertexSet| g.vertices().difference(g.closed_neighborhood_unchecked(s));
    let try_set = |s: VertexSet| TwoJumpState::new(t, lists, colors, s);

    for b in free(a).iter() {
        if let Some(next) = try_set(a.with(b)) {
            return Some((Move::Add { vertex: b }, next));
        }
    }
    for &x in &state.vertices {
        let rest = a.without(x);
        let room = free(rest);
        for b1 in room.iter() {
            for b2 in room.difference(g.closed_neighborhood_unchecked(VertexSet::singleton(b1))).iter() {
                if b2 < b1 {
                    continue;
                }
                if let Some(next) = try_set(rest.with(b1).with(b2)) {
                    return Some((Move::Exchange { removed: x, added: [b1, b2] }, next));
                }
            }
        }
    }
    let mut best: Option<(Move, TwoJumpState)> = None;
    for &x in &state.vertices {
        let rest = a.without(x);
        for b in free(rest).iter() {
            if b == x {
                continue;
            }
            let s = rest.with(b);
            let members = s.to_vec();
            let (_, gaps) = min_gap_vector(t, &members);
            let bar = best.as_ref().map_or(&state.gaps, |(_, st)| &st.gaps);
            if gaps >= *bar {
                continue;
            }
            if let Some(next) = try_set(s) {
                best = Some((Move::Shift { from: x, to: b }, next));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn starts(t: usize, n: usize, labels: &[usize]) -> Vec<JumpSet> {
        labels
            .iter()
            .map(|&s| JumpSet::new(t, s - 1, 2, n).unwrap())
            .collect()
    }

    #[test]
    fn gap_vector_of_a_triple() {
        // {0, 2, 5} on C_9: anchors give (5,2,3), (7,3,4), (6,4,2).
        assert_eq!(gap_vector(9, &[0, 2, 5], 0), vec![5, 2, 3]);
        assert_eq!(gap_vector(9, &[0, 2, 5], 1), vec![7, 3, 4]);
        assert_eq!(min_gap_vector(9, &[0, 2, 5]), (0, vec![5, 2, 3]));
    }

    #[test]
    fn examples() {
        let out = solve_two_jump(5, 2, &starts(5, 2, &[1, 2])).unwrap();
        assert_eq!(out.rainbow.len(), 2);
        let out = solve_two_jump(7, 3, &starts(7, 3, &[1, 1, 1])).unwrap();
        assert_eq!(out.rainbow.to_labels(), vec![[1, 1], [3, 2], [5, 3]]);
        let out = solve_two_jump(9, 4, &starts(9, 4, &[1, 1, 3, 3])).unwrap();
        assert_eq!(out.rainbow.len(), 4);
        assert!(out.moves.iter().all(MoveRecord::improves));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(solve_two_jump(6, 3, &starts(6, 3, &[1, 1, 1])).is_err());
        assert!(solve_two_jump(9, 4, &starts(9, 4, &[1, 1, 3])).is_err());
        let three = JumpSet::new(9, 0, 3, 3).unwrap();
        assert!(solve_two_jump(9, 3, &[three; 3]).is_err());
    }
}
