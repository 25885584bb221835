//! Rainbow independent `(n-1)`-sets for `n - 1` independent `n`-sets of a
//! 2-regular graph on `2n - 1` or `2n` vertices, by induction on the number
//! of cycles.
//!
//! * One cycle: the cycle construction.
//! * An odd cycle `C_{2m+1}`: exact search for `m` colors on it using the
//!   first `m` sets, induction on the rest with the remaining sets.
//! * All cycles even, `C_1` of length `2n_1` first: induction on the other
//!   cycles with all but the first `n_1` sets leaves exactly one cycle `C_j`
//!   one vertex short. The first `n_1` sets together with the colors used on
//!   `C_j` give `n_1 + n_j - 1` sets. On the shorter of `C_1`, `C_j` one
//!   parity class is hit by at least half of them, which colors that cycle
//!   fully; the leftover colors go to the longer cycle through the cycle
//!   construction.

use crate::error::{Error, Result};
use crate::graph::{Component, ComponentKind, Degree2Graph};
use crate::gris::rainbow_cycle_n_minus_1;
use crate::indset::Collection;
use crate::rainbow::{find_rainbow, verify_rainbow, RainbowAssignment};
use crate::vertex_set::VertexSet;

/// A set restricted to a component, in the component's local numbering.
fn local(s: VertexSet, c: &Component) -> VertexSet {
    VertexSet::from_bits(s.intersection(c.vertices()).bits() >> c.offset)
}

/// One set of the working collection: its color in the input and its
/// vertices (global numbering).
type Colored = (usize, VertexSet);
/// Chosen `(vertex, color)` pairs and the colors left over.
type Split = (Vec<(usize, usize)>, Vec<Colored>);

pub fn solve_two_regular(g: &Degree2Graph, n: usize, f: &Collection) -> Result<RainbowAssignment> {
    if !g.is_two_regular() {
        return Err(Error::Precondition(format!("{g} is not 2-regular")));
    }
    let v = g.vertex_count();
    if n == 0 || v + 1 < 2 * n || v > 2 * n {
        return Err(Error::Precondition(format!(
            "need 2n - 1 <= |V| <= 2n, got |V| = {v}, n = {n}"
        )));
    }
    if g.independence_number() < n {
        return Err(Error::EmptyIndependentFamily {
            graph: g.to_string(),
            n,
        });
    }
    if f.len() + 1 != n {
        return Err(Error::Precondition(format!(
            "need exactly n - 1 = {} sets, got {}",
            n - 1,
            f.len()
        )));
    }
    f.validate(g)?;
    f.check_uniform(n)?;
    let sets: Vec<Colored> = f.sets().iter().copied().enumerate().collect();
    let pairs = solve(g.components(), n, &sets)?;
    let r = RainbowAssignment::new(pairs);
    if !verify_rainbow(g, f, &r, n - 1)? {
        return Err(Error::ContractViolation(format!(
            "2-regular construction on {g} failed verification"
        )));
    }
    Ok(r)
}

fn solve(comps: &[Component], n: usize, f: &[Colored]) -> Result<Vec<(usize, usize)>> {
    debug_assert_eq!(f.len() + 1, n);
    if let [c] = comps {
        return on_cycle(c, n, f);
    }
    if let Some(j) = comps.iter().position(|c| c.len % 2 == 1) {
        return odd_split(comps, j, n, f);
    }
    even_split(comps, n, f)
}

/// The cycle construction on one component; `f` has `n - 1` sets.
fn on_cycle(c: &Component, n: usize, f: &[Colored]) -> Result<Vec<(usize, usize)>> {
    let sets: Collection = f.iter().map(|&(_, s)| local(s, c)).collect();
    let r = rainbow_cycle_n_minus_1(c.len, n, &sets)?;
    Ok(r.pairs().iter().map(|&(v, k)| (v + c.offset, f[k].0)).collect())
}

fn odd_split(comps: &[Component], j: usize, n: usize, f: &[Colored]) -> Result<Vec<(usize, usize)>> {
    let c = &comps[j];
    let m = c.len / 2;
    let cycle = Degree2Graph::cycle(c.len)?;
    let f1: Collection = f[..m].iter().map(|&(_, s)| local(s, c)).collect();
    let r1 = find_rainbow(&cycle, &f1, m).ok_or_else(|| {
        Error::ContractViolation(format!("no rainbow independent {m}-set on C{}", c.len))
    })?;
    let mut out: Vec<(usize, usize)> = r1.pairs().iter().map(|&(v, k)| (v + c.offset, f[k].0)).collect();
    let rest: Vec<Component> = comps.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, c)| *c).collect();
    let mask = rest.iter().fold(VertexSet::EMPTY, |m, c| m.union(c.vertices()));
    let f2: Vec<Colored> = f[m..].iter().map(|&(k, s)| (k, s.intersection(mask))).collect();
    out.extend(solve(&rest, n - m, &f2)?);
    Ok(out)
}

fn even_split(comps: &[Component], n: usize, f: &[Colored]) -> Result<Vec<(usize, usize)>> {
    let c1 = comps[0];
    let n1 = c1.len / 2;
    let rest = &comps[1..];
    let mask = rest.iter().fold(VertexSet::EMPTY, |m, c| m.union(c.vertices()));
    let f_rest: Vec<Colored> = f[n1..].iter().map(|&(k, s)| (k, s.intersection(mask))).collect();
    let sub = solve(rest, n - n1, &f_rest)?;

    let short = rest
        .iter()
        .find(|c| sub.iter().filter(|&&(v, _)| c.vertices().contains(v)).count() + 1 == c.len / 2)
        .copied()
        .ok_or_else(|| Error::ContractViolation("no deficient cycle after induction".into()))?;
    let nj = short.len / 2;
    let j_colors: Vec<usize> = sub
        .iter()
        .filter(|&&(v, _)| short.vertices().contains(v))
        .map(|&(_, k)| k)
        .collect();
    let by_color = |k: usize| f.iter().find(|&&(c, _)| c == k).copied().expect("color present");
    let mut f1: Vec<Colored> = f[..n1].to_vec();
    f1.extend(j_colors.iter().map(|&k| by_color(k)));
    f1.sort_by_key(|&(k, _)| k);

    let (small, big) = if n1 <= nj { (c1, short) } else { (short, c1) };
    let (r1, leftover) = parity_class_rainbow(&small, &f1)?;
    let r2 = on_cycle(&big, big.len / 2, &leftover)?;

    let mut out: Vec<(usize, usize)> = sub.into_iter().filter(|&(v, _)| !short.vertices().contains(v)).collect();
    out.extend(r1);
    out.extend(r2);
    Ok(out)
}

/// On an even cycle `C_{2k}` with at least `2k - 1` sets, each meeting it in
/// one of its two parity classes: bind the first `k` sets of a class that
/// appears at least `k` times. Returns the pairs and the unbound sets.
fn parity_class_rainbow(c: &Component, f: &[Colored]) -> Result<Split> {
    debug_assert_eq!(c.kind, ComponentKind::Cycle);
    let k = c.len / 2;
    let class = |parity: usize| -> VertexSet { (0..k).map(|i| c.offset + 2 * i + parity).collect() };
    let classes = [class(0), class(1)];
    for cls in classes {
        let hits: Vec<usize> = (0..f.len())
            .filter(|&i| f[i].1.intersection(c.vertices()) == cls)
            .take(k)
            .collect();
        if hits.len() == k {
            let pairs = cls.iter().zip(hits.iter().map(|&i| f[i].0)).collect();
            let leftover = (0..f.len()).filter(|i| !hits.contains(i)).map(|i| f[i]).collect();
            return Ok((pairs, leftover));
        }
    }
    Err(Error::ContractViolation(format!(
        "no parity class of C{} is hit {k} times by {} sets",
        c.len,
        f.len()
    )))
}
