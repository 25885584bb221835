//! The h-value of a collection on a vertex set, and the two-sided partition
//! of a collection by h-value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indset::Collection;
use crate::vertex_set::VertexSet;

/// Largest `m` such that at least `m` sets of `f` meet `s` in at least `m`
/// vertices.
pub fn h_value(f: &Collection, s: VertexSet) -> usize {
    h_of_sizes(f.sets().iter().map(|i| i.intersection(s).len()).collect())
}

fn h_of_sizes(mut sizes: Vec<usize>) -> usize {
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
        .iter()
        .enumerate()
        .take_while(|&(i, &x)| x > i)
        .count()
}

/// Extra guarantee attached to a split, depending on the slack
/// `d = m1 + m2 - n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum SideCondition {
    /// `d = 0`: every set of part `i` meets the other side `V_{3-i}` in at
    /// most `m_{3-i}` vertices.
    Tight { holds: bool },
    /// `ell < d`: every set of part 2 meets `V2` in at least
    /// `n - m1 + ell + 1` vertices.
    Raised { holds: bool },
    /// `0 < d = ell`: nothing beyond the h-values.
    None,
}

impl SideCondition {
    pub fn holds(self) -> bool {
        match self {
            SideCondition::Tight { holds } | SideCondition::Raised { holds } => holds,
            SideCondition::None => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionResult {
    /// Colors (positions in the input) of part 1, ascending.
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
    pub m1: usize,
    pub m2: usize,
    pub ell: usize,
    /// `h(part1, V1)`, equal to `m1 - ell`.
    pub h1: usize,
    /// `h(part2, V2)`, equal to `n - m1 + ell`.
    pub h2: usize,
    pub side: SideCondition,
}

impl PartitionResult {
    pub fn part1_collection(&self, f: &Collection) -> Collection {
        f.select(&self.part1)
    }

    pub fn part2_collection(&self, f: &Collection) -> Collection {
        f.select(&self.part2)
    }
}

/// Splits `f` (`n = |f|` sets, each of size at least `n`, with
/// `h(f, V1 ∪ V2) = n`) into two parts with `h(part1, V1) = m1 - ell` and
/// `h(part2, V2) = n - m1 + ell`, where `m_i = h(f, V_i)` and
/// `0 <= ell <= m1 + m2 - n`.
///
/// Sets are ranked by `|I ∩ V1|` descending, then by color. Part 1 takes
/// every set that clears the `V1` threshold but not the `V2` threshold, and
/// is topped up from the sets clearing both. When the slack is zero the
/// choice is steered to also satisfy the cross bound of
/// [`SideCondition::Tight`] whenever some choice can; the report says
/// whether it holds.
pub fn split(f: &Collection, v1: VertexSet, v2: VertexSet, ell: usize) -> Result<PartitionResult> {
    let n = f.len();
    if !v1.is_disjoint(v2) {
        return Err(Error::Precondition("V1 and V2 must be disjoint".into()));
    }
    if let Some(i) = f.sets().iter().position(|s| s.len() < n) {
        return Err(Error::Precondition(format!(
            "every set needs at least n = {n} elements; set {} has {}",
            i + 1,
            f.sets()[i].len()
        )));
    }
    let h = h_value(f, v1.union(v2));
    if h != n {
        return Err(Error::Precondition(format!(
            "h(F, V1 ∪ V2) = {h}, expected n = {n}"
        )));
    }
    let m1 = h_value(f, v1);
    let m2 = h_value(f, v2);
    if m1 + m2 < n {
        return Err(Error::ContractViolation(format!(
            "m1 + m2 = {} is below n = {n}",
            m1 + m2
        )));
    }
    let slack = m1 + m2 - n;
    if ell > slack {
        return Err(Error::Precondition(format!(
            "ell = {ell} exceeds m1 + m2 - n = {slack}"
        )));
    }

    let in1: Vec<usize> = f.sets().iter().map(|s| s.intersection(v1).len()).collect();
    let in2: Vec<usize> = f.sets().iter().map(|s| s.intersection(v2).len()).collect();
    let raised = ell < slack;
    let thr1 = m1 - ell;
    let thr2 = n - m1 + ell + usize::from(raised);
    let clears1: Vec<bool> = in1.iter().map(|&x| x >= thr1).collect();
    let clears2: Vec<bool> = in2.iter().map(|&x| x >= thr2).collect();
    let size1 = m1 - ell;

    let mut ranked: Vec<usize> = (0..n).collect();
    ranked.sort_by_key(|&i| (clears2[i], std::cmp::Reverse(in1[i]), i));

    let plain = |forced1: &[bool], forced2: &[bool]| -> Option<Vec<bool>> {
        let mut pick = forced1.to_vec();
        let mut taken = pick.iter().filter(|&&b| b).count();
        if taken > size1 || (0..n).any(|i| forced1[i] && (forced2[i] || !clears1[i])) {
            return None;
        }
        for &i in &ranked {
            if taken == size1 {
                break;
            }
            if !pick[i] && clears1[i] && !forced2[i] {
                pick[i] = true;
                taken += 1;
            }
        }
        (taken == size1).then_some(pick)
    };

    let base1: Vec<bool> = (0..n).map(|i| clears1[i] && !clears2[i]).collect();
    let none = vec![false; n];
    let mut pick = None;
    if slack == 0 {
        // Exact: part 1 must hold every set it alone can hold, and part 2
        // likewise; any completion of a consistent choice works.
        let forced1: Vec<bool> = (0..n).map(|i| base1[i] || in1[i] > m1).collect();
        let forced2: Vec<bool> = (0..n).map(|i| in2[i] > m2 || !clears1[i]).collect();
        pick = plain(&forced1, &forced2);
    }
    let pick = match pick.or_else(|| plain(&base1, &none)) {
        Some(p) => p,
        None => {
            return Err(Error::ContractViolation(format!(
                "no part 1 of size {size1} inside the V1 threshold class"
            )))
        }
    };

    let part1: Vec<usize> = (0..n).filter(|&i| pick[i]).collect();
    let part2: Vec<usize> = (0..n).filter(|&i| !pick[i]).collect();
    let h1 = h_of_sizes(part1.iter().map(|&i| in1[i]).collect());
    let h2 = h_of_sizes(part2.iter().map(|&i| in2[i]).collect());
    if h1 != m1 - ell || h2 != n - m1 + ell {
        return Err(Error::ContractViolation(format!(
            "split reached h-values ({h1}, {h2}), expected ({}, {})",
            m1 - ell,
            n - m1 + ell
        )));
    }
    let side = if slack == 0 {
        SideCondition::Tight {
            holds: part1.iter().all(|&i| in2[i] <= m2) && part2.iter().all(|&i| in1[i] <= m1),
        }
    } else if raised {
        SideCondition::Raised {
            holds: part2.iter().all(|&i| in2[i] > n - m1 + ell),
        }
    } else {
        SideCondition::None
    };
    Ok(PartitionResult {
        part1,
        part2,
        m1,
        m2,
        ell,
        h1,
        h2,
        side,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coll(lists: &[&[usize]]) -> Collection {
        Collection::from_labels(lists).unwrap()
    }

    fn vs(labels: &[usize]) -> VertexSet {
        labels.iter().map(|&l| l - 1).collect()
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_value(&coll(&[&[1, 2], &[1, 3]]), vs(&[1])), 1);
        assert_eq!(h_value(&Collection::default(), vs(&[1, 2])), 0);
        let f = coll(&[&[1, 3, 5], &[1, 3, 5], &[1, 3, 5]]);
        assert_eq!(h_value(&f, vs(&[1, 3, 5])), 3);
    }

    #[test]
    fn one_sided_mass() {
        let f = coll(&[&[1, 3, 5], &[1, 3, 5], &[1, 3, 5]]);
        let r = split(&f, vs(&[1, 3, 5]), VertexSet::EMPTY, 0).unwrap();
        assert_eq!((r.m1, r.m2), (3, 0));
        assert_eq!(r.part1, vec![0, 1, 2]);
        assert!(r.part2.is_empty());
        assert_eq!(r.side, SideCondition::Tight { holds: true });
    }

    #[test]
    fn two_copies() {
        let f = coll(&[&[1, 3], &[1, 3]]);
        let r = split(&f, vs(&[1]), vs(&[3]), 0).unwrap();
        assert_eq!((r.m1, r.m2, r.h1, r.h2), (1, 1, 1, 1));
        assert_eq!(r.part1.len() + r.part2.len(), 2);
        assert!(r.side.holds());
    }

    #[test]
    fn raised_case() {
        // m1 = m2 = 2 with n = 2: slack 2, so ell = 0 and ell = 1 are raised.
        let f = coll(&[&[1, 2, 4, 5], &[1, 2, 4, 5]]);
        for ell in 0..2 {
            let r = split(&f, vs(&[1, 2]), vs(&[4, 5]), ell).unwrap();
            assert_eq!(r.side, SideCondition::Raised { holds: true });
        }
        let r = split(&f, vs(&[1, 2]), vs(&[4, 5]), 2).unwrap();
        assert_eq!(r.side, SideCondition::None);
        assert_eq!(r.part1.len(), 0);
    }

    #[test]
    fn tight_cross_bound_can_be_unattainable() {
        // Sets larger than n: whichever set goes to part 1, one part breaks
        // the cross bound.
        let f = coll(&[&[1, 2, 4, 5], &[1, 4]]);
        let r = split(&f, vs(&[1, 2, 3]), vs(&[4, 5, 6]), 0).unwrap();
        assert_eq!((r.m1, r.m2), (1, 1));
        assert_eq!(r.side, SideCondition::Tight { holds: false });
    }

    #[test]
    fn preconditions() {
        let f = coll(&[&[1, 3], &[1, 3]]);
        assert!(matches!(split(&f, vs(&[1]), vs(&[1]), 0), Err(Error::Precondition(_))));
        assert!(matches!(split(&f, vs(&[1]), vs(&[3]), 1), Err(Error::Precondition(_))));
        assert!(matches!(split(&f, vs(&[1]), vs(&[2]), 0), Err(Error::Precondition(_))));
    }
}
