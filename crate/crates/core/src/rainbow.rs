//! Rainbow assignments, the certificate checker, and the exact search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{label, vertex, Degree2Graph};
use crate::indset::Collection;
use crate::vertex_set::VertexSet;

/// Most colors the exact search handles; colors are bit positions in a `u128`.
pub const MAX_COLORS: usize = 128;

/// Chosen vertices with their colors, sorted by vertex. Vertices and colors
/// are 0-based; the serialized form is `[[vertex, color], ...]` in 1-based
/// labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<[usize; 2]>", into = "Vec<[usize; 2]>")]
pub struct RainbowAssignment {
    pairs: Vec<(usize, usize)>,
}

impl RainbowAssignment {
    /// Sorts the pairs by vertex.
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        RainbowAssignment { pairs }
    }

    pub fn empty() -> Self {
        RainbowAssignment::default()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.pairs.iter().map(|&(v, _)| v).collect()
    }

    pub fn colors(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(_, c)| c).collect()
    }

    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.pairs.iter().find(|&&(u, _)| u == v).map(|&(_, c)| c)
    }

    /// Keeps the first `m` pairs.
    pub fn truncated(&self, m: usize) -> Self {
        RainbowAssignment {
            pairs: self.pairs[..m.min(self.pairs.len())].to_vec(),
        }
    }

    /// Union with another assignment; the caller guarantees disjointness.
    pub fn merged(&self, other: &RainbowAssignment) -> Self {
        let mut pairs = self.pairs.clone();
        pairs.extend_from_slice(&other.pairs);
        RainbowAssignment::new(pairs)
    }

    /// Renames colors through `map` (local color -> global color).
    pub fn recolored(&self, map: &[usize]) -> Self {
        RainbowAssignment::new(self.pairs.iter().map(|&(v, c)| (v, map[c])).collect())
    }

    pub fn to_labels(&self) -> Vec<[usize; 2]> {
        self.pairs
            .iter()
            .map(|&(v, c)| [label(v), c + 1])
            .collect()
    }
}

impl TryFrom<Vec<[usize; 2]>> for RainbowAssignment {
    type Error = Error;
    fn try_from(raw: Vec<[usize; 2]>) -> Result<Self> {
        let pairs = raw
            .into_iter()
            .map(|[v, c]| match (vertex(v), c.checked_sub(1)) {
                (Some(v), Some(c)) => Ok((v, c)),
                _ => Err(Error::InvalidCertificate(format!("bad pair [{v}, {c}]"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RainbowAssignment { pairs })
    }
}

impl From<RainbowAssignment> for Vec<[usize; 2]> {
    fn from(r: RainbowAssignment) -> Self {
        r.to_labels()
    }
}

/// True iff `r` is a rainbow independent `m`-set of `(f, g)`: exactly `m`
/// pairs, strictly increasing independent vertices, pairwise distinct colors,
/// and every vertex in the set of its color.
///
/// References outside `g` or `f` are an [`Error::InvalidCertificate`].
pub fn verify_rainbow(
    g: &Degree2Graph,
    f: &Collection,
    r: &RainbowAssignment,
    m: usize,
) -> Result<bool> {
    for &(v, c) in r.pairs() {
        if v >= g.vertex_count() {
            return Err(Error::InvalidCertificate(format!(
                "vertex {} is not in {g}",
                label(v)
            )));
        }
        if c >= f.len() {
            return Err(Error::InvalidCertificate(format!(
                "color {} exceeds the {} sets of the collection",
                c + 1,
                f.len()
            )));
        }
    }
    if r.len() != m {
        return Ok(false);
    }
    if r.pairs().windows(2).any(|w| w[0].0 >= w[1].0) {
        return Ok(false);
    }
    let mut colors = r.colors();
    colors.sort_unstable();
    if colors.windows(2).any(|w| w[0] == w[1]) {
        return Ok(false);
    }
    if r.pairs().iter().any(|&(v, c)| !f.sets()[c].contains(v)) {
        return Ok(false);
    }
    Ok(g.is_independent_unchecked(r.vertices()))
}

/// The lexicographically least rainbow independent `m`-set of `(f, g)`,
/// compared first by vertex list and then by color list, or `None`.
///
/// Vertices are tried in increasing order. A partial vertex list survives
/// only while it still has a system of distinct colors (kept as an
/// incrementally augmented bipartite matching) and while its size plus an
/// independence bound on the remaining candidates reaches `m`.
///
/// # Panics
///
/// If `f` has more than [`MAX_COLORS`] sets.
pub fn find_rainbow(g: &Degree2Graph, f: &Collection, m: usize) -> Option<RainbowAssignment> {
    assert!(f.len() <= MAX_COLORS, "at most {MAX_COLORS} colors are supported");
    if m == 0 {
        return Some(RainbowAssignment::empty());
    }
    if m > f.len() {
        return None;
    }
    let search = Search::new(g, f.sets());
    let mut chosen = Vec::with_capacity(m);
    let mut matching = Matching::new();
    if !search.dfs(m, 0, VertexSet::EMPTY, &mut chosen, &mut matching) {
        return None;
    }
    Some(search.least_colors(&chosen))
}

/// Whether `(f, g)` has a rainbow independent `m`-set.
pub fn has_rainbow(g: &Degree2Graph, f: &Collection, m: usize) -> bool {
    has_rainbow_sets(g, f.sets(), m)
}

/// [`has_rainbow`] over a slice of sets (colors are slice positions).
pub fn has_rainbow_sets(g: &Degree2Graph, sets: &[VertexSet], m: usize) -> bool {
    assert!(sets.len() <= MAX_COLORS, "at most {MAX_COLORS} colors are supported");
    if m == 0 {
        return true;
    }
    if m > sets.len() {
        return false;
    }
    let search = Search::new(g, sets);
    let mut chosen = Vec::with_capacity(m);
    search.dfs(m, 0, VertexSet::EMPTY, &mut chosen, &mut Matching::new())
}

const NONE: u8 = u8::MAX;

/// Color -> index into the chosen vertex list.
#[derive(Clone, Copy)]
struct Matching {
    owner: [u8; MAX_COLORS],
}

impl Matching {
    fn new() -> Self {
        Matching {
            owner: [NONE; MAX_COLORS],
        }
    }

    /// Kuhn's augmenting path from chosen vertex `i`.
    fn augment(&mut self, lists: &[u128], i: usize, visited: &mut u128) -> bool {
        let mut avail = lists[i] & !*visited;
        while avail != 0 {
            let c = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            *visited |= 1u128 << c;
            let o = self.owner[c];
            if o == NONE || self.augment(lists, o as usize, visited) {
                self.owner[c] = i as u8;
                return true;
            }
        }
        false
    }
}

struct Search<'a> {
    g: &'a Degree2Graph,
    /// Color masks per vertex.
    lists: Vec<u128>,
    candidates: VertexSet,
    forward_edges: u128,
}

impl<'a> Search<'a> {
    fn new(g: &'a Degree2Graph, sets: &[VertexSet]) -> Self {
        let n = g.vertex_count();
        let mut lists = vec![0u128; n];
        for (c, s) in sets.iter().enumerate() {
            for v in s.intersection(g.vertices()).iter() {
                lists[v] |= 1u128 << c;
            }
        }
        let candidates = (0..n).filter(|&v| lists[v] != 0).collect();
        let forward_edges = (0..n.saturating_sub(1))
            .filter(|&v| g.adjacent(v, v + 1))
            .fold(0u128, |m, v| m | 1u128 << v);
        Search {
            g,
            lists,
            candidates,
            forward_edges,
        }
    }

    /// Upper bound on an independent subset of `rest`: the greedy
    /// leftmost scan is exact on paths and ignores closing cycle edges.
    fn bound(&self, rest: VertexSet, need: usize) -> bool {
        let mut count = 0;
        let mut prev_taken: Option<usize> = None;
        for v in rest.iter() {
            let blocked = matches!(prev_taken, Some(p) if p + 1 == v && (self.forward_edges >> p) & 1 == 1);
            if !blocked {
                count += 1;
                if count >= need {
                    return true;
                }
                prev_taken = Some(v);
            }
        }
        false
    }

    fn dfs(
        &self,
        m: usize,
        from: usize,
        blocked: VertexSet,
        chosen: &mut Vec<usize>,
        matching: &mut Matching,
    ) -> bool {
        if chosen.len() == m {
            return true;
        }
        let rest = VertexSet::from_bits(
            self.candidates.bits() & !blocked.bits() & !VertexSet::prefix(from).bits(),
        );
        if !self.bound(rest, m - chosen.len()) {
            return false;
        }
        let mut chosen_lists: Vec<u128> = chosen.iter().map(|&v| self.lists[v]).collect();
        for v in rest.iter() {
            if rest.difference(VertexSet::prefix(v)).len() < m - chosen.len() {
                break;
            }
            let saved = *matching;
            chosen_lists.push(self.lists[v]);
            let mut visited = 0u128;
            if matching.augment(&chosen_lists, chosen.len(), &mut visited) {
                chosen.push(v);
                let nb = blocked.union(self.g.closed_neighborhood_unchecked(VertexSet::singleton(v)));
                if self.dfs(m, v + 1, nb, chosen, matching) {
                    return true;
                }
                chosen.pop();
            }
            chosen_lists.pop();
            *matching = saved;
        }
        false
    }

    /// Least color list for a fixed feasible vertex list.
    fn least_colors(&self, chosen: &[usize]) -> RainbowAssignment {
        let colors = least_color_assignment(&self.lists, chosen).expect("vertex list was feasible");
        RainbowAssignment::new(chosen.iter().copied().zip(colors).collect())
    }
}

/// Lexicographically least color list for `vertices` (in the given order)
/// drawing each vertex's color from `lists[v]` (bit masks), if any exists.
pub(crate) fn least_color_assignment(lists: &[u128], vertices: &[usize]) -> Option<Vec<usize>> {
    let vl: Vec<u128> = vertices.iter().map(|&v| lists[v]).collect();
    if !perfect_matching(&vl) {
        return None;
    }
    let mut used = 0u128;
    let mut colors = Vec::with_capacity(vertices.len());
    for i in 0..vl.len() {
        let mut opts = vl[i] & !used;
        loop {
            let c = opts.trailing_zeros() as usize;
            opts &= opts - 1;
            let rest: Vec<u128> = vl[i + 1..].iter().map(|&l| l & !used & !(1u128 << c)).collect();
            if perfect_matching(&rest) {
                used |= 1u128 << c;
                colors.push(c);
                break;
            }
        }
    }
    Some(colors)
}

pub(crate) fn perfect_matching(lists: &[u128]) -> bool {
    let mut m = Matching::new();
    (0..lists.len()).all(|i| m.augment(lists, i, &mut 0))
}
