//! Graph automorphisms and canonical forms of collections.
//!
//! A collection's canonical key is the least sorted tuple of set indices
//! over all automorphism images, where sets are indexed by their position in
//! the lexicographic enumeration of independent sets. Sorting the tuple
//! quotients out color permutations; the minimum over images quotients out
//! the automorphism group.

use crate::graph::{ComponentKind, Degree2Graph};
use crate::indset::Collection;
use crate::vertex_set::VertexSet;

/// Largest group enumerated explicitly. Beyond this the search falls back to
/// a subgroup, which keeps canonical pruning sound but less effective.
pub const MAX_GROUP_ORDER: usize = 50_000;

/// A set of vertex permutations closed under composition; the identity is
/// always first.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    perms: Vec<Vec<usize>>,
}

impl SymmetryGroup {
    pub fn trivial(g: &Degree2Graph) -> Self {
        SymmetryGroup {
            perms: vec![(0..g.vertex_count()).collect()],
        }
    }

    /// The automorphism group of `g`: dihedral symmetries of each cycle,
    /// reversal of each path, and exchanges of isomorphic components.
    /// Drops the exchanges, then everything, if the order would exceed
    /// [`MAX_GROUP_ORDER`].
    pub fn automorphisms(g: &Degree2Graph) -> Self {
        let local: Vec<Vec<Vec<usize>>> = g.components().iter().map(|c| local_maps(c.kind, c.len)).collect();
        let local_order: usize = local.iter().map(Vec::len).product();
        let arrangements = component_arrangements(g);
        let with_swaps = local_order.saturating_mul(arrangements.len());
        let arrangements = if with_swaps <= MAX_GROUP_ORDER {
            arrangements
        } else if local_order <= MAX_GROUP_ORDER {
            vec![(0..g.components().len()).collect()]
        } else {
            return SymmetryGroup::trivial(g);
        };

        let comps = g.components();
        let mut perms = Vec::with_capacity(local_order * arrangements.len());
        for arrangement in &arrangements {
            let mut choice = vec![0usize; comps.len()];
            loop {
                let mut perm = vec![0usize; g.vertex_count()];
                for (ci, comp) in comps.iter().enumerate() {
                    let target = comps[arrangement[ci]];
                    let map = &local[ci][choice[ci]];
                    for (i, &j) in map.iter().enumerate() {
                        perm[comp.offset + i] = target.offset + j;
                    }
                }
                perms.push(perm);
                // odometer over local choices
                let mut k = 0;
                while k < comps.len() {
                    choice[k] += 1;
                    if choice[k] < local[k].len() {
                        break;
                    }
                    choice[k] = 0;
                    k += 1;
                }
                if k == comps.len() {
                    break;
                }
            }
        }
        perms.sort();
        perms.dedup();
        let id: Vec<usize> = (0..g.vertex_count()).collect();
        let pos = perms.iter().position(|p| *p == id).expect("identity present");
        perms.swap(0, pos);
        SymmetryGroup { perms }
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn apply(&self, k: usize, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.perms[k][v]).collect()
    }

    /// Least image of a collection under the group with sets sorted
    /// lexicographically.
    pub fn canonical_collection(&self, f: &Collection) -> Collection {
        (0..self.order())
            .map(|k| {
                let mut sets: Vec<VertexSet> = f.sets().iter().map(|&s| self.apply(k, s)).collect();
                sets.sort_by(|a, b| a.cmp_lex(*b));
                sets
            })
            .min_by(|a, b| cmp_set_lists(a, b))
            .map(Collection::new)
            .unwrap_or_default()
    }
}

fn cmp_set_lists(a: &[VertexSet], b: &[VertexSet]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.cmp_lex(*y))
        .find(|o| o.is_ne())
        .unwrap_or(a.len().cmp(&b.len()))
}

/// Symmetries of one component in local coordinates.
fn local_maps(kind: ComponentKind, len: usize) -> Vec<Vec<usize>> {
    let mut maps: Vec<Vec<usize>> = match kind {
        ComponentKind::Cycle => (0..len)
            .flat_map(|r| {
                [
                    (0..len).map(|v| (v + r) % len).collect(),
                    (0..len).map(|v| (r + len - v) % len).collect(),
                ]
            })
            .collect(),
        ComponentKind::Path => vec![(0..len).collect(), (0..len).rev().collect()],
    };
    maps.sort();
    maps.dedup();
    maps
}

/// Permutations of component positions that only exchange isomorphic
/// components.
fn component_arrangements(g: &Degree2Graph) -> Vec<Vec<usize>> {
    let comps = g.components();
    let mut out = vec![Vec::with_capacity(comps.len())];
    for ci in 0..comps.len() {
        let mut next = Vec::new();
        for partial in &out {
            for cj in 0..comps.len() {
                let same = comps[cj].kind == comps[ci].kind && comps[cj].len == comps[ci].len;
                if same && !partial.contains(&cj) {
                    let mut p = partial.clone();
                    p.push(cj);
                    next.push(p);
                }
            }
        }
        out = next;
        if out.len() > MAX_GROUP_ORDER {
            return vec![(0..comps.len()).collect()];
        }
    }
    out
}

/// The group's action on an indexed family of sets (sorted by `cmp_lex`,
/// closed under the group).
#[derive(Clone, Debug)]
pub struct IndexAction {
    /// `images[k][i]` is the index of the image of set `i` under element `k`;
    /// the identity is omitted.
    images: Vec<Vec<u32>>,
}

impl IndexAction {
    pub fn new(group: &SymmetryGroup, sets: &[VertexSet]) -> Self {
        let images = (1..group.order())
            .map(|k| {
                sets.iter()
                    .map(|&s| {
                        let img = group.apply(k, s);
                        sets.binary_search_by(|x| x.cmp_lex(img))
                            .expect("family closed under automorphisms") as u32
                    })
                    .collect()
            })
            .collect();
        IndexAction { images }
    }

    pub fn identity() -> Self {
        IndexAction { images: Vec::new() }
    }

    /// Whether the sorted tuple is the least in its orbit.
    pub fn is_canonical(&self, tuple: &[u32]) -> bool {
        let mut buf = vec![0u32; tuple.len()];
        for img in &self.images {
            for (b, &i) in buf.iter_mut().zip(tuple) {
                *b = img[i as usize];
            }
            buf.sort_unstable();
            if buf.as_slice() < tuple {
                return false;
            }
        }
        true
    }

    /// Least image of a sorted tuple.
    pub fn canonical_key(&self, tuple: &[u32]) -> Vec<u32> {
        let mut best = tuple.to_vec();
        best.sort_unstable();
        let mut buf = vec![0u32; tuple.len()];
        for img in &self.images {
            for (b, &i) in buf.iter_mut().zip(tuple) {
                *b = img[i as usize];
            }
            buf.sort_unstable();
            if buf < best {
                best.copy_from_slice(&buf);
            }
        }
        best
    }
}
