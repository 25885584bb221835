//! Independent sets of prescribed size, k-jump sets of cycles, and
//! collections of independent sets with their lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{label, vertex, ComponentKind, Degree2Graph};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// An ordered multiset of vertex sets. The position of a set is its color;
/// colors are 0-based in the API and 1-based in serialized form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Collection {
    sets: Vec<VertexSet>,
}

impl Collection {
    pub fn new(sets: Vec<VertexSet>) -> Self {
        Collection { sets }
    }

    /// Builds a collection from 1-based label lists.
    pub fn from_labels<S: AsRef<[usize]>>(lists: &[S]) -> Result<Self> {
        let mut sets = Vec::with_capacity(lists.len());
        for (i, list) in lists.iter().enumerate() {
            let mut s = VertexSet::EMPTY;
            for &l in list.as_ref() {
                let v = vertex(l)
                    .filter(|&v| v < MAX_VERTICES)
                    .ok_or_else(|| Error::InvalidSet(format!("set {}: bad label {l}", i + 1)))?;
                if s.contains(v) {
                    return Err(Error::InvalidSet(format!("set {}: repeated label {l}", i + 1)));
                }
                s.insert(v);
            }
            sets.push(s);
        }
        Ok(Collection { sets })
    }

    pub fn to_labels(&self) -> Vec<Vec<usize>> {
        self.sets
            .iter()
            .map(|s| s.iter().map(label).collect())
            .collect()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn push(&mut self, s: VertexSet) {
        self.sets.push(s);
    }

    pub fn get(&self, color: usize) -> Option<VertexSet> {
        self.sets.get(color).copied()
    }

    /// Colors whose set contains `v`, ascending.
    pub fn list_of(&self, v: usize) -> Vec<usize> {
        (0..self.sets.len())
            .filter(|&i| self.sets[i].contains(v))
            .collect()
    }

    pub fn list_number(&self, v: usize) -> usize {
        self.sets.iter().filter(|s| s.contains(v)).count()
    }

    /// Colors containing `v` as a bit mask (colors must fit in 128 bits).
    pub fn list_mask(&self, v: usize) -> u128 {
        self.sets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.contains(v))
            .fold(0, |m, (i, _)| m | 1u128 << i)
    }

    /// Every member must lie in the graph and be independent.
    pub fn validate(&self, g: &Degree2Graph) -> Result<()> {
        for (i, &s) in self.sets.iter().enumerate() {
            g.check_set(s)
                .map_err(|e| Error::InvalidSet(format!("set {}: {e}", i + 1)))?;
            if !g.is_independent_unchecked(s) {
                return Err(Error::NotIndependent {
                    index: i + 1,
                    graph: g.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Every member must have exactly `n` elements.
    pub fn check_uniform(&self, n: usize) -> Result<()> {
        match self.sets.iter().position(|s| s.len() != n) {
            None => Ok(()),
            Some(i) => Err(Error::Precondition(format!(
                "set {} has {} elements, expected {n}",
                i + 1,
                self.sets[i].len()
            ))),
        }
    }

    /// Each member intersected with `mask`.
    pub fn restrict(&self, mask: VertexSet) -> Collection {
        Collection::new(self.sets.iter().map(|s| s.intersection(mask)).collect())
    }

    pub fn select(&self, colors: &[usize]) -> Collection {
        Collection::new(colors.iter().map(|&c| self.sets[c]).collect())
    }

    pub fn total_size(&self) -> usize {
        self.sets.iter().map(|s| s.len()).sum()
    }
}

impl TryFrom<Vec<Vec<usize>>> for Collection {
    type Error = Error;
    fn try_from(lists: Vec<Vec<usize>>) -> Result<Self> {
        Collection::from_labels(&lists)
    }
}

impl From<Collection> for Vec<Vec<usize>> {
    fn from(c: Collection) -> Self {
        c.to_labels()
    }
}

impl FromIterator<VertexSet> for Collection {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        Collection::new(iter.into_iter().collect())
    }
}

/// An arithmetic progression `start, start+jump, ...` of `size` vertices of
/// the cycle `C_len`, independent in the cycle. Identity is the triple
/// `(start, jump, size)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JumpSet {
    pub cycle_len: usize,
    /// 0-based start vertex.
    pub start: usize,
    pub jump: usize,
    pub size: usize,
}

impl JumpSet {
    /// Checks the progression is an independent `size`-set of the cycle.
    pub fn new(cycle_len: usize, start: usize, jump: usize, size: usize) -> Result<Self> {
        check_jump_params(cycle_len, jump, size)?;
        if start >= cycle_len {
            return Err(Error::InvalidParameter(format!(
                "start {} outside C{cycle_len}",
                label(start)
            )));
        }
        let j = JumpSet {
            cycle_len,
            start,
            jump,
            size,
        };
        let s = j.progression();
        let c = Degree2Graph::cycle(cycle_len)?;
        if s.len() != size || !c.is_independent_unchecked(s) {
            return Err(Error::InvalidParameter(format!(
                "progression from {} with step {jump} is not an independent {size}-set of C{cycle_len}",
                label(start)
            )));
        }
        Ok(j)
    }

    /// The `i`-th element (0-based).
    pub fn element(&self, i: usize) -> usize {
        (self.start + i * self.jump) % self.cycle_len
    }

    pub fn end(&self) -> usize {
        self.element(self.size - 1)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.progression()
    }

    fn progression(&self) -> VertexSet {
        (0..self.size).map(|i| self.element(i)).collect()
    }
}

fn check_jump_params(t: usize, k: usize, n: usize) -> Result<()> {
    if t < 3 {
        return Err(Error::InvalidParameter(format!("cycle length {t} is below 3")));
    }
    if t > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!("cycle length {t} exceeds the vertex cap")));
    }
    if k < 2 || k + 2 > t {
        return Err(Error::InvalidParameter(format!(
            "jump {k} outside [2, {}]",
            t as isize - 2
        )));
    }
    if n < 1 {
        return Err(Error::InvalidParameter("jump set size must be positive".into()));
    }
    Ok(())
}

/// All k-jump independent n-sets of `C_t`, one per valid start, by start.
pub fn enumerate_jump_sets(t: usize, k: usize, n: usize) -> Result<Vec<JumpSet>> {
    check_jump_params(t, k, n)?;
    let c = Degree2Graph::cycle(t)?;
    Ok((0..t)
        .map(|start| JumpSet {
            cycle_len: t,
            start,
            jump: k,
            size: n,
        })
        .filter(|j| {
            let s = j.progression();
            s.len() == n && c.is_independent_unchecked(s)
        })
        .collect())
}

/// The 2-jump `n`-set of `C_t` starting at 0-based `start`.
pub fn two_jump(t: usize, start: usize, n: usize) -> Result<JumpSet> {
    JumpSet::new(t, start, 2, n)
}

/// All independent `n`-sets of `g`, ordered lexicographically by sorted
/// member list.
///
/// Depth-first over vertices in increasing order. Each branch is cut with an
/// exact bound: the independence number of what is left of the current
/// component plus the precomputed independence numbers of later components,
/// so every explored branch produces at least one set.
pub fn enumerate_ind_sets(g: &Degree2Graph, n: usize) -> Vec<VertexSet> {
    let comps = g.components();
    let mut alpha_after = vec![0usize; comps.len() + 1];
    for c in (0..comps.len()).rev() {
        alpha_after[c] = alpha_after[c + 1] + comps[c].independence_number();
    }
    let mut out = Vec::new();
    if alpha_after[0] >= n {
        let mut walk = Walk {
            g,
            alpha_after: &alpha_after,
            out: &mut out,
        };
        walk.component(0, 0, false, n, VertexSet::EMPTY);
    }
    out
}

struct Walk<'a> {
    g: &'a Degree2Graph,
    alpha_after: &'a [usize],
    out: &'a mut Vec<VertexSet>,
}

impl Walk<'_> {
    /// Maximum independent set size among local positions `p..` of component
    /// `c`, given whether its local vertex 0 has been chosen.
    fn room(&self, c: usize, p: usize, first_chosen: bool) -> usize {
        let comp = self.g.components()[c];
        let len = comp.len;
        match comp.kind {
            ComponentKind::Path => len.saturating_sub(p).div_ceil(2),
            ComponentKind::Cycle if p == 0 => len / 2,
            ComponentKind::Cycle if first_chosen => (len - 1).saturating_sub(p).div_ceil(2),
            ComponentKind::Cycle => len.saturating_sub(p).div_ceil(2),
        }
    }

    fn component(&mut self, c: usize, p: usize, first_chosen: bool, k: usize, cur: VertexSet) {
        if k == 0 {
            self.out.push(cur);
            return;
        }
        if c == self.g.components().len()
            || self.room(c, p, first_chosen) + self.alpha_after[c + 1] < k
        {
            return;
        }
        let comp = self.g.components()[c];
        let last = match comp.kind {
            ComponentKind::Cycle if first_chosen => comp.len - 2,
            _ => comp.len - 1,
        };
        let cycle = comp.kind == ComponentKind::Cycle;
        for q in p..=last {
            let fc = first_chosen || (cycle && q == 0);
            self.component(c, q + 2, fc, k - 1, cur.with(comp.offset + q));
        }
        if self.alpha_after[c + 1] >= k {
            self.component(c + 1, 0, false, k, cur);
        }
    }
}

/// Number of independent sets of each size, by per-component independence
/// polynomials multiplied together.
pub fn independent_set_counts(g: &Degree2Graph) -> Vec<u128> {
    let mut total = vec![1u128];
    for comp in g.components() {
        let poly = match comp.kind {
            ComponentKind::Path => path_polynomial(comp.len),
            ComponentKind::Cycle => cycle_polynomial(comp.len),
        };
        let mut next = vec![0u128; total.len() + poly.len() - 1];
        for (i, a) in total.iter().enumerate() {
            for (j, b) in poly.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        total = next;
    }
    while total.len() > 1 && *total.last().unwrap() == 0 {
        total.pop();
    }
    total
}

/// Independence polynomial of `P_len` (`len` may be 0).
fn path_polynomial(len: usize) -> Vec<u128> {
    // I(P_k) = I(P_{k-1}) + x I(P_{k-2})
    let mut prev = vec![1u128]; // P_{-1} convention: empty graph
    let mut cur = vec![1u128]; // P_0
    for _ in 0..len {
        let mut next = cur.clone();
        next.resize(prev.len().max(cur.len()).max(prev.len() + 1), 0);
        for (i, &a) in prev.iter().enumerate() {
            next[i + 1] += a;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// `I(C_len) = I(P_{len-1}) + x I(P_{len-3})`.
fn cycle_polynomial(len: usize) -> Vec<u128> {
    let a = path_polynomial(len - 1);
    let b = path_polynomial(len - 3);
    let mut out = a.clone();
    out.resize(a.len().max(b.len() + 1), 0);
    for (i, &x) in b.iter().enumerate() {
        out[i + 1] += x;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(d: &str) -> Degree2Graph {
        d.parse().unwrap()
    }

    /// Independent n-sets by scanning all subsets, in lex order.
    fn subsets_oracle(g: &Degree2Graph, n: usize) -> Vec<VertexSet> {
        let t = g.vertex_count();
        let mut found: Vec<VertexSet> = (0u128..1 << t)
            .filter(|b| b.count_ones() as usize == n)
            .map(VertexSet::from_bits)
            .filter(|s| {
                s.iter()
                    .all(|u| s.iter().all(|v| !g.adjacent(u, v)))
            })
            .collect();
        found.sort_by(|a, b| a.cmp_lex(*b));
        found
    }

    #[test]
    fn c6_three_sets() {
        let sets = enumerate_ind_sets(&g("C6"), 3);
        let c = Collection::new(sets);
        assert_eq!(c.to_labels(), vec![vec![1, 3, 5], vec![2, 4, 6]]);
    }

    #[test]
    fn frozen_counts() {
        assert_eq!(enumerate_ind_sets(&g("C5"), 2).len(), 5);
        assert_eq!(enumerate_ind_sets(&g("C4+C4"), 4).len(), 4);
        assert!(enumerate_ind_sets(&g("P1"), 2).is_empty());
        assert_eq!(enumerate_ind_sets(&g("P1"), 0), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn matches_subset_oracle() {
        for d in ["C3", "C4", "C7", "C10", "P1", "P2", "P6", "C4+C5", "P3+C5+P2", "C6+C6"] {
            let gr = g(d);
            for n in 0..=6 {
                assert_eq!(enumerate_ind_sets(&gr, n), subsets_oracle(&gr, n), "{d} n={n}");
            }
        }
    }

    #[test]
    fn polynomial_counts_match_enumeration() {
        for d in ["C8", "P9", "C5+P4", "C4+C6+C3"] {
            let gr = g(d);
            let counts = independent_set_counts(&gr);
            for (n, &c) in counts.iter().enumerate() {
                assert_eq!(enumerate_ind_sets(&gr, n).len() as u128, c, "{d} n={n}");
            }
            assert_eq!(counts.len() - 1, gr.independence_number());
        }
        // Lucas number L_40 counts all independent sets of C40
        let total: u128 = independent_set_counts(&g("C40")).iter().sum();
        assert_eq!(total, 228_826_127);
    }

    #[test]
    fn jump_sets() {
        let c7 = enumerate_jump_sets(7, 2, 3).unwrap();
        assert_eq!(c7.len(), 7);
        // {1,3,5} and {2,4,6} in C6 are independent: 5 and 1 are two steps apart
        assert_eq!(enumerate_jump_sets(6, 2, 3).unwrap().len(), 6);
        assert_eq!(enumerate_jump_sets(5, 2, 2).unwrap().len(), 5);
        // {1,3,5,1} collapses to three vertices
        assert!(enumerate_jump_sets(6, 2, 4).unwrap().is_empty());
        for bad in [(2, 2, 1), (7, 1, 3), (7, 6, 3), (7, 2, 0)] {
            assert!(matches!(
                enumerate_jump_sets(bad.0, bad.1, bad.2),
                Err(Error::InvalidParameter(_))
            ));
        }
        let j = two_jump(9, 7, 4).unwrap();
        assert_eq!(j.vertex_set().iter().map(label).collect::<Vec<_>>(), vec![1, 3, 5, 8]);
        assert_eq!(label(j.end()), 5);
    }

    #[test]
    fn lists() {
        let f = Collection::from_labels(&[vec![1, 3], vec![1, 4]]).unwrap();
        let v = |l| vertex(l).unwrap();
        assert_eq!(f.list_of(v(1)), vec![0, 1]);
        assert!(f.list_of(v(2)).is_empty());
        assert_eq!(f.list_of(v(4)), vec![1]);
        assert_eq!(f.list_number(v(1)), 2);
        assert_eq!(Collection::default().list_number(0), 0);

        let all: Collection = enumerate_jump_sets(7, 2, 3)
            .unwrap()
            .iter()
            .map(JumpSet::vertex_set)
            .collect();
        for v in 0..7 {
            assert_eq!(all.list_number(v), 3);
        }
    }

    #[test]
    fn validation_names_the_offending_set() {
        let c6 = g("C6");
        let f = Collection::from_labels(&[vec![1, 3], vec![1, 2]]).unwrap();
        match f.validate(&c6) {
            Err(Error::NotIndependent { index, .. }) => assert_eq!(index, 2),
            other => panic!("{other:?}"),
        }
        assert!(Collection::from_labels(&[vec![0]]).is_err());
        assert!(Collection::from_labels(&[vec![2, 2]]).is_err());
        let out = Collection::from_labels(&[vec![9]]).unwrap();
        assert!(matches!(out.validate(&c6), Err(Error::InvalidSet(_))));
    }

    #[test]
    fn json_form() {
        let f = Collection::from_labels(&[vec![1, 3, 5], vec![2, 4, 6]]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, "[[1,3,5],[2,4,6]]");
        let back: Collection = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Collection>("[[0]]").is_err());
    }
}
