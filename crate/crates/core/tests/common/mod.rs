//! Shared generators and slow oracles for the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use rainbow_core::graph::ComponentKind;
use rainbow_core::{enumerate_ind_sets, Collection, Degree2Graph, RainbowAssignment, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independence by checking every pair against the edge list.
pub fn independent_by_pairs(g: &Degree2Graph, s: VertexSet) -> bool {
    let v = s.to_vec();
    v.iter()
        .enumerate()
        .all(|(i, &a)| v[i + 1..].iter().all(|&b| !g.adjacent(a, b)))
}

/// Independent `n`-sets by scanning all subsets.
pub fn subset_oracle(g: &Degree2Graph, n: usize) -> Vec<VertexSet> {
    let t = g.vertex_count();
    assert!(t <= 24);
    let mut out: Vec<VertexSet> = (0u128..1 << t)
        .filter(|b| b.count_ones() as usize == n)
        .map(VertexSet::from_bits)
        .filter(|&s| independent_by_pairs(g, s))
        .collect();
    out.sort_by(|a, b| a.cmp_lex(*b));
    out
}

/// Independence number by scanning all subsets.
pub fn alpha_oracle(g: &Degree2Graph) -> usize {
    let t = g.vertex_count();
    (0u128..1 << t)
        .map(VertexSet::from_bits)
        .filter(|&s| independent_by_pairs(g, s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Random graph of maximum degree two with at most `max_vertices` vertices.
pub fn random_graph(rng: &mut ChaCha8Rng, max_vertices: usize) -> Degree2Graph {
    loop {
        let mut parts = Vec::new();
        let mut left = rng.gen_range(1..=max_vertices);
        while left > 0 {
            let cycle = left >= 3 && rng.gen_bool(0.5);
            let len = if cycle { rng.gen_range(3..=left) } else { rng.gen_range(1..=left) };
            parts.push((if cycle { ComponentKind::Cycle } else { ComponentKind::Path }, len));
            left -= len;
        }
        if let Ok(g) = Degree2Graph::from_components(&parts) {
            return g;
        }
    }
}

/// Memoized independent-set families per `(graph, size)`.
#[derive(Default)]
pub struct Families {
    memo: HashMap<(String, usize), Vec<VertexSet>>,
}

impl Families {
    pub fn get(&mut self, g: &Degree2Graph, n: usize) -> &[VertexSet] {
        self.memo
            .entry((g.to_string(), n))
            .or_insert_with(|| enumerate_ind_sets(g, n))
    }

    pub fn random(&mut self, g: &Degree2Graph, n: usize, rng: &mut ChaCha8Rng) -> Option<VertexSet> {
        self.get(g, n).choose(rng).copied()
    }
}

/// Lexicographically least (vertex list, color list) rainbow independent
/// `m`-set, by trying every `m`-set of colors and every transversal.
pub fn slow_rainbow(g: &Degree2Graph, f: &Collection, m: usize) -> Option<RainbowAssignment> {
    let k = f.len();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for mask in 0u32..1 << k {
        if mask.count_ones() as usize != m {
            continue;
        }
        let colors: Vec<usize> = (0..k).filter(|c| mask >> c & 1 == 1).collect();
        let mut pick = vec![0usize; m];
        transversals(g, f, &colors, 0, &mut pick, &mut best);
    }
    if m == 0 {
        return Some(RainbowAssignment::empty());
    }
    best.map(|(vs, cs)| RainbowAssignment::new(vs.into_iter().zip(cs).collect()))
}

fn transversals(
    g: &Degree2Graph,
    f: &Collection,
    colors: &[usize],
    i: usize,
    pick: &mut Vec<usize>,
    best: &mut Option<(Vec<usize>, Vec<usize>)>,
) {
    if i == colors.len() {
        let s: VertexSet = pick.iter().copied().collect();
        if s.len() != pick.len() || !independent_by_pairs(g, s) {
            return;
        }
        let mut pairs: Vec<(usize, usize)> = pick.iter().copied().zip(colors.iter().copied()).collect();
        pairs.sort();
        let key = (
            pairs.iter().map(|p| p.0).collect::<Vec<_>>(),
            pairs.iter().map(|p| p.1).collect::<Vec<_>>(),
        );
        if best.as_ref().is_none_or(|b| key < *b) {
            *best = Some(key);
        }
        return;
    }
    for v in f.sets()[colors[i]].iter() {
        pick[i] = v;
        transversals(g, f, colors, i + 1, pick, best);
    }
}
