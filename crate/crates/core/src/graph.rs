//! Graphs of maximum degree two: disjoint unions of paths and cycles.
//!
//! Vertices are numbered consecutively component by component and, inside a
//! cycle, in clockwise order. Internally vertices are 0-based; every external
//! surface (descriptors, JSON, CLI output) uses 1-based labels and goes
//! through [`label`] / [`vertex`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// External 1-based label of internal vertex `v`.
#[inline]
pub fn label(v: usize) -> usize {
    v + 1
}

/// Internal vertex for an external 1-based label.
#[inline]
pub fn vertex(label: usize) -> Option<usize> {
    label.checked_sub(1)
}

/// `v + d` in the additive group of residues mod `t`.
#[inline]
pub fn cyclic_add(v: usize, d: isize, t: usize) -> usize {
    (v as isize + d).rem_euclid(t as isize) as usize
}

/// `a - b` as a residue in `0..t`.
#[inline]
pub fn cyclic_sub(a: usize, b: usize, t: usize) -> usize {
    (a + t - b % t) % t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Path,
    Cycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub kind: ComponentKind,
    pub len: usize,
    /// Internal number of the component's first vertex.
    pub offset: usize,
}

impl Component {
    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_bits(VertexSet::prefix(self.len).bits() << self.offset)
    }

    /// Maximum size of an independent set inside this component.
    pub fn independence_number(&self) -> usize {
        match self.kind {
            ComponentKind::Path => self.len.div_ceil(2),
            ComponentKind::Cycle => self.len / 2,
        }
    }

    pub fn is_even_cycle(&self) -> bool {
        self.kind == ComponentKind::Cycle && self.len.is_multiple_of(2)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ComponentKind::Path => write!(f, "P{}", self.len),
            ComponentKind::Cycle => write!(f, "C{}", self.len),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Degree2Graph {
    components: Vec<Component>,
    vertex_count: usize,
    /// Bit `v` set iff `{v, v+1}` is an edge.
    forward_edges: u128,
    /// Closing edge `{first, last}` of each cycle.
    wraps: Vec<(usize, usize)>,
    neighbors: Vec<VertexSet>,
}

impl Degree2Graph {
    pub fn cycle(t: usize) -> Result<Self> {
        if t < 3 {
            return Err(Error::InvalidGraph(format!("cycle length {t} is below 3")));
        }
        Self::from_components(&[(ComponentKind::Cycle, t)])
    }

    pub fn path(t: usize) -> Result<Self> {
        if t < 1 {
            return Err(Error::InvalidGraph("path length must be at least 1".into()));
        }
        Self::from_components(&[(ComponentKind::Path, t)])
    }

    /// Concatenates the vertex numberings in list order.
    pub fn disjoint_union(graphs: &[Degree2Graph]) -> Result<Self> {
        if graphs.is_empty() {
            return Err(Error::InvalidGraph("disjoint union of an empty list".into()));
        }
        let parts: Vec<_> = graphs
            .iter()
            .flat_map(|g| g.components.iter().map(|c| (c.kind, c.len)))
            .collect();
        Self::from_components(&parts)
    }

    pub fn from_components(parts: &[(ComponentKind, usize)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidGraph("graph has no components".into()));
        }
        let total: usize = parts.iter().map(|&(_, len)| len).sum();
        if total > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{total} vertices exceeds the cap of {MAX_VERTICES}"
            )));
        }
        let mut components = Vec::with_capacity(parts.len());
        let mut forward_edges = 0u128;
        let mut wraps = Vec::new();
        let mut offset = 0;
        for &(kind, len) in parts {
            match kind {
                ComponentKind::Cycle if len < 3 => {
                    return Err(Error::InvalidGraph(format!("cycle length {len} is below 3")))
                }
                ComponentKind::Path if len < 1 => {
                    return Err(Error::InvalidGraph("path length must be at least 1".into()))
                }
                _ => {}
            }
            for v in offset..offset + len - 1 {
                forward_edges |= 1u128 << v;
            }
            if kind == ComponentKind::Cycle {
                wraps.push((offset, offset + len - 1));
            }
            components.push(Component { kind, len, offset });
            offset += len;
        }
        let mut neighbors = vec![VertexSet::EMPTY; total];
        for v in 0..total {
            if (forward_edges >> v) & 1 == 1 {
                neighbors[v].insert(v + 1);
                neighbors[v + 1].insert(v);
            }
        }
        for &(a, b) in &wraps {
            neighbors[a].insert(b);
            neighbors[b].insert(a);
        }
        Ok(Degree2Graph {
            components,
            vertex_count: total,
            forward_edges,
            wraps,
            neighbors,
        })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.vertex_count)
    }

    /// Number of even-length cycle components.
    pub fn even_cycle_count(&self) -> usize {
        self.components.iter().filter(|c| c.is_even_cycle()).count()
    }

    pub fn is_two_regular(&self) -> bool {
        self.components.iter().all(|c| c.kind == ComponentKind::Cycle)
    }

    /// The cycle length if this graph is a single cycle.
    pub fn as_cycle(&self) -> Option<usize> {
        match self.components.as_slice() {
            [c] if c.kind == ComponentKind::Cycle => Some(c.len),
            _ => None,
        }
    }

    pub fn as_path(&self) -> Option<usize> {
        match self.components.as_slice() {
            [c] if c.kind == ComponentKind::Path => Some(c.len),
            _ => None,
        }
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.components
            .iter()
            .position(|c| v >= c.offset && v < c.offset + c.len)
            .expect("vertex out of range")
    }

    pub fn independence_number(&self) -> usize {
        self.components.iter().map(Component::independence_number).sum()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.neighbors[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].contains(v)
    }

    /// Fails when `s` has a member outside the vertex range.
    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            let bad = s.difference(self.vertices()).first().unwrap();
            Err(Error::InvalidSet(format!(
                "vertex {} is not a vertex of {}",
                label(bad),
                self
            )))
        }
    }

    pub fn is_independent(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.is_independent_unchecked(s))
    }

    /// Independence test for a set already known to be in range.
    #[inline]
    pub fn is_independent_unchecked(&self, s: VertexSet) -> bool {
        let b = s.bits();
        if b & (b >> 1) & self.forward_edges != 0 {
            return false;
        }
        self.wraps
            .iter()
            .all(|&(a, z)| !(s.contains(a) && s.contains(z)))
    }

    pub fn closed_neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.closed_neighborhood_unchecked(s))
    }

    #[inline]
    pub fn closed_neighborhood_unchecked(&self, s: VertexSet) -> VertexSet {
        let b = s.bits();
        let mut out = b | ((b & self.forward_edges) << 1) | ((b >> 1) & self.forward_edges);
        for &(a, z) in &self.wraps {
            if s.contains(a) {
                out |= 1u128 << z;
            }
            if s.contains(z) {
                out |= 1u128 << a;
            }
        }
        VertexSet::from_bits(out)
    }
}

impl fmt::Display for Degree2Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Degree2Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Degree2Graph({self})")
    }
}

/// Parses `component ('+' component)*` with `component := ('C'|'P') integer`.
impl FromStr for Degree2Graph {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let err = |position: usize, message: &str| Error::Descriptor {
            input: input.to_string(),
            position,
            message: message.to_string(),
        };
        let bytes = input.as_bytes();
        let mut parts = Vec::new();
        let mut pos = 0;
        loop {
            let kind = match bytes.get(pos) {
                Some(b'C') => ComponentKind::Cycle,
                Some(b'P') => ComponentKind::Path,
                Some(_) => return Err(err(pos, "expected 'C' or 'P'")),
                None => return Err(err(pos, "expected a component")),
            };
            pos += 1;
            let start = pos;
            while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
                pos += 1;
            }
            if start == pos {
                return Err(err(pos, "expected a length"));
            }
            let len: usize = input[start..pos]
                .parse()
                .map_err(|_| err(start, "length out of range"))?;
            match kind {
                ComponentKind::Cycle if len < 3 => {
                    return Err(err(start, "cycle length must be at least 3"))
                }
                ComponentKind::Path if len < 1 => {
                    return Err(err(start, "path length must be at least 1"))
                }
                _ => {}
            }
            parts.push((kind, len));
            match bytes.get(pos) {
                None => break,
                Some(b'+') => pos += 1,
                Some(_) => return Err(err(pos, "expected '+' or end of input")),
            }
        }
        Self::from_components(&parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[usize]) -> VertexSet {
        labels.iter().map(|&l| vertex(l).unwrap()).collect()
    }

    fn labels(s: VertexSet) -> Vec<usize> {
        s.iter().map(label).collect()
    }

    /// Size of a largest independent set by trying all subsets.
    fn alpha_by_subsets(g: &Degree2Graph) -> usize {
        let n = g.vertex_count();
        (0u128..1 << n)
            .filter(|&bits| {
                let s = VertexSet::from_bits(bits);
                s.iter()
                    .all(|u| s.iter().all(|v| u == v || !g.neighbors(u).contains(v)))
            })
            .map(|bits| bits.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn triangle_is_complete() {
        let g = Degree2Graph::cycle(3).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(g.adjacent(u, v), u != v);
            }
        }
    }

    #[test]
    fn cycle_adjacency() {
        let g = Degree2Graph::cycle(7).unwrap();
        assert!(g.adjacent(vertex(1).unwrap(), vertex(7).unwrap()));
        assert!(!g.adjacent(vertex(1).unwrap(), vertex(3).unwrap()));
        assert_eq!(g.even_cycle_count(), 0);
    }

    #[test]
    fn small_cycles_and_paths_rejected() {
        assert!(matches!(Degree2Graph::cycle(2), Err(Error::InvalidGraph(_))));
        assert!(matches!(Degree2Graph::path(0), Err(Error::InvalidGraph(_))));
        assert!(matches!(
            Degree2Graph::disjoint_union(&[]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(Degree2Graph::cycle(129), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn independence_numbers_match_subset_oracle() {
        // C6 -> 3, P5 -> 3, C4+C6 -> 5
        for (desc, alpha) in [("C6", 3), ("P5", 3), ("C4+C6", 5), ("P1", 1), ("C3+P2", 2)] {
            let g: Degree2Graph = desc.parse().unwrap();
            assert_eq!(alpha_by_subsets(&g), alpha, "{desc}");
            assert_eq!(g.independence_number(), alpha, "{desc}");
        }
    }

    #[test]
    fn path_basics() {
        let p1 = Degree2Graph::path(1).unwrap();
        assert_eq!(p1.vertex_count(), 1);
        assert!(p1.neighbors(0).is_empty());
        let p5 = Degree2Graph::path(5).unwrap();
        assert!(p5.is_independent(set(&[1, 3, 5])).unwrap());
        assert!(!p5.adjacent(0, 4));
    }

    #[test]
    fn unions() {
        let c4 = Degree2Graph::cycle(4).unwrap();
        let g = Degree2Graph::disjoint_union(&[c4.clone(), c4]).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.even_cycle_count(), 2);
        assert_eq!(g.to_string(), "C4+C4");
        let h = Degree2Graph::disjoint_union(&[
            Degree2Graph::cycle(3).unwrap(),
            Degree2Graph::path(2).unwrap(),
        ])
        .unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.even_cycle_count(), 0);
        // 4 is the last vertex of C4, 5 the first of the second C4
        assert!(!g.adjacent(3, 4));
        assert!(g.adjacent(0, 3));
    }

    #[test]
    fn independence_queries() {
        let c6 = Degree2Graph::cycle(6).unwrap();
        assert!(c6.is_independent(set(&[1, 3, 5])).unwrap());
        assert!(!c6.is_independent(set(&[1, 2])).unwrap());
        let c5 = Degree2Graph::cycle(5).unwrap();
        assert!(c5.is_independent(set(&[1, 3])).unwrap());
        assert!(!c5.is_independent(set(&[1, 5])).unwrap());
        assert!(matches!(
            c5.is_independent(set(&[6])),
            Err(Error::InvalidSet(_))
        ));
    }

    #[test]
    fn closed_neighborhoods() {
        let c7 = Degree2Graph::cycle(7).unwrap();
        assert_eq!(labels(c7.closed_neighborhood(set(&[1])).unwrap()), vec![1, 2, 7]);
        assert!(c7.closed_neighborhood(VertexSet::EMPTY).unwrap().is_empty());
        assert_eq!(
            labels(c7.closed_neighborhood(set(&[1, 4])).unwrap()),
            vec![1, 2, 3, 4, 5, 7]
        );
    }

    #[test]
    fn descriptor_round_trip_and_errors() {
        for d in ["C7", "C4+C6", "P9+C5", "P1"] {
            assert_eq!(d.parse::<Degree2Graph>().unwrap().to_string(), d);
        }
        let cases = [("", 0), ("X3", 0), ("C", 1), ("C2", 1), ("C4+", 3), ("C4,C6", 2), ("P0", 1)];
        for (d, pos) in cases {
            match d.parse::<Degree2Graph>() {
                Err(Error::Descriptor { position, .. }) => assert_eq!(position, pos, "{d:?}"),
                other => panic!("{d:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn cyclic_arithmetic() {
        assert_eq!(cyclic_add(0, -1, 7), 6);
        assert_eq!(cyclic_add(6, 2, 7), 1);
        assert_eq!(cyclic_sub(1, 6, 7), 2);
        assert_eq!(cyclic_sub(3, 3, 7), 0);
    }
}
