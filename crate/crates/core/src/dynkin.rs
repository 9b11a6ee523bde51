//! Bookkeeping for the type `A_n` Dynkin diagram: nodes `1..=n` on a line.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A node of the diagram, 1-based.
pub type Node = u32;

/// The Dynkin diagram of type `A_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct DynkinA {
    n: u32,
}

/// A connected subdiagram `{lo, ..., hi}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Node,
    pub hi: Node,
}

impl Interval {
    pub fn new(a: Node, b: Node) -> Self {
        Interval { lo: a.min(b), hi: a.max(b) }
    }

    pub fn contains(&self, node: Node) -> bool {
        self.lo <= node && node <= self.hi
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn len(&self) -> u32 {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> {
        self.lo..=self.hi
    }

    /// Distance from `inner` to the boundary `{lo, hi}` of this interval,
    /// treating the interval as an ambient diagram of its own.
    pub fn boundary_distance_of(&self, inner: Interval) -> Result<u32> {
        if !inner.is_subset_of(self) {
            return Err(Error::IntervalDoesNotContain {
                lo: self.lo,
                hi: self.hi,
                i: inner.lo,
                j: inner.hi,
            });
        }
        Ok((inner.lo - self.lo).min(self.hi - inner.hi))
    }
}

impl TryFrom<u32> for DynkinA {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        DynkinA::new(n)
    }
}

impl From<DynkinA> for u32 {
    fn from(d: DynkinA) -> u32 {
        d.n
    }
}

impl DynkinA {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank);
        }
        Ok(DynkinA { n })
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn check(&self, node: Node) -> Result<Node> {
        if (1..=self.n).contains(&node) {
            Ok(node)
        } else {
            Err(Error::InvalidNode { node, rank: self.n })
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> {
        1..=self.n
    }

    pub fn full(&self) -> Interval {
        Interval { lo: 1, hi: self.n }
    }

    pub fn distance(&self, i: Node, j: Node) -> Result<u32> {
        self.check(i)?;
        self.check(j)?;
        Ok(i.abs_diff(j))
    }

    pub fn interval(&self, i: Node, j: Node) -> Result<Interval> {
        self.check(i)?;
        self.check(j)?;
        Ok(Interval::new(i, j))
    }

    /// `d(J, ∂I)` for a connected node set `J`, with `∂I = {1, n}`.
    pub fn boundary_distance(&self, nodes: &[Node]) -> Result<u32> {
        let interval = self.interval_of(nodes)?;
        self.full().boundary_distance_of(interval)
    }

    /// Validates that `nodes` is a nonempty connected subdiagram.
    pub fn interval_of(&self, nodes: &[Node]) -> Result<Interval> {
        let mut sorted = nodes.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let (&lo, &hi) = match (sorted.first(), sorted.last()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::InvalidInterval),
        };
        for &node in &sorted {
            self.check(node)?;
        }
        if (hi - lo + 1) as usize != sorted.len() {
            return Err(Error::InvalidInterval);
        }
        Ok(Interval { lo, hi })
    }

    /// The diagram involution `i* = w_0(i)`.
    pub fn star(&self, i: Node) -> Result<Node> {
        self.check(i)?;
        Ok(self.n + 1 - i)
    }

    /// The dual Coxeter number `h∨ = n + 1`.
    pub fn dual_coxeter(&self) -> u32 {
        self.n + 1
    }

    pub(crate) fn star_unchecked(&self, i: Node) -> Node {
        self.n + 1 - i
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(n: u32) -> DynkinA {
        DynkinA::new(n).unwrap()
    }

    #[test]
    fn distances() {
        assert_eq!(a(5).distance(2, 4).unwrap(), 2);
        assert_eq!(a(3).distance(1, 1).unwrap(), 0);
        // tournament family, N = 4: d(i+N-2, j+N-2) = j - i with i = 1, j = 4
        assert_eq!(a(8).distance(3, 6).unwrap(), 3);
        assert_eq!(
            a(3).distance(4, 1),
            Err(Error::InvalidNode { node: 4, rank: 3 })
        );
        assert!(a(3).distance(0, 1).is_err());
    }

    #[test]
    fn intervals() {
        let nodes = |i: Interval| i.nodes().collect::<Vec<_>>();
        assert_eq!(nodes(a(5).interval(3, 1).unwrap()), vec![1, 2, 3]);
        assert_eq!(nodes(a(5).interval(4, 4).unwrap()), vec![4]);
        assert_eq!(nodes(a(3).interval(1, 3).unwrap()), vec![1, 2, 3]);
        assert!(a(3).interval(1, 9).is_err());
    }

    #[test]
    fn boundary_distances() {
        assert_eq!(a(8).boundary_distance(&[3, 4, 5, 6]).unwrap(), 2);
        assert_eq!(a(5).boundary_distance(&[2, 3]).unwrap(), 1);
        assert_eq!(a(3).boundary_distance(&[1, 2]).unwrap(), 0);
        assert_eq!(a(5).boundary_distance(&[]), Err(Error::InvalidInterval));
        assert_eq!(a(5).boundary_distance(&[1, 3]), Err(Error::InvalidInterval));
    }

    #[test]
    fn star_and_coxeter() {
        assert_eq!(a(5).star(2).unwrap(), 4);
        assert_eq!(a(3).star(2).unwrap(), 2);
        assert_eq!(a(8).star(1).unwrap(), 8);
        assert!(a(8).star(9).is_err());
        assert_eq!(a(3).dual_coxeter(), 4);
        assert_eq!(a(5).dual_coxeter(), 6);
        assert_eq!(a(1).dual_coxeter(), 2);
        assert_eq!(DynkinA::new(0), Err(Error::InvalidRank));
    }

    fn rank_and_nodes() -> impl Strategy<Value = (u32, Vec<u32>)> {
        (1u32..=12).prop_flat_map(|n| (Just(n), prop::collection::vec(1..=n, 4)))
    }

    proptest! {
        #[test]
        fn metric_properties((n, v) in rank_and_nodes()) {
            let d = a(n);
            let (i, j, k) = (v[0], v[1], v[2]);
            prop_assert!(d.distance(i, k)? <= d.distance(i, j)? + d.distance(j, k)?);
            prop_assert_eq!(d.star(d.star(i)?)?, i);
            prop_assert_eq!(d.distance(d.star(i)?, d.star(j)?)?, d.distance(i, j)?);
        }

        #[test]
        fn boundary_distance_monotone((n, v) in rank_and_nodes()) {
            let d = a(n);
            let outer = d.interval(v[0], v[1])?;
            let inner = Interval::new(v[2].max(outer.lo).min(outer.hi), v[3].max(outer.lo).min(outer.hi));
            prop_assert!(inner.is_subset_of(&outer));
            prop_assert!(d.full().boundary_distance_of(outer)? <= d.full().boundary_distance_of(inner)?);
        }
    }
}
