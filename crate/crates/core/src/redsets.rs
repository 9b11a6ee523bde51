//! Type-A reducibility sets and the Kirillov–Reshetikhin pair tests built on them.
//!
//! `R_{i,j}^{r,s} = { r + s + d(i,j) - 2p : -d([i,j], ∂I) <= p < min(r,s) }`.
//! Every such set is an arithmetic progression with step 2, so membership is
//! a range and parity check.

use serde::{Deserialize, Serialize};

use crate::dynkin::{DynkinA, Interval, Node};
use crate::error::Result;
use crate::lweight::KrFactor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RSetParams {
    pub i: Node,
    pub j: Node,
    pub r: u32,
    pub s: u32,
    pub interval: Option<Interval>,
}

/// `{ base - 2p : p_lo <= p < p_hi }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RSet {
    params: RSetParams,
    base: i64,
    p_lo: i64,
    p_hi: i64,
}

impl RSet {
    fn build(params: RSetParams, distance: u32, boundary: u32) -> Self {
        RSet {
            params,
            base: i64::from(params.r) + i64::from(params.s) + i64::from(distance),
            p_lo: -i64::from(boundary),
            p_hi: i64::from(params.r.min(params.s)),
        }
    }

    pub fn params(&self) -> RSetParams {
        self.params
    }

    pub fn is_empty(&self) -> bool {
        self.p_lo >= self.p_hi
    }

    pub fn len(&self) -> usize {
        (self.p_hi - self.p_lo).max(0) as usize
    }

    pub fn min(&self) -> Option<i64> {
        (!self.is_empty()).then(|| self.base - 2 * (self.p_hi - 1))
    }

    pub fn max(&self) -> Option<i64> {
        (!self.is_empty()).then(|| self.base - 2 * self.p_lo)
    }

    pub fn contains(&self, m: i64) -> bool {
        self.p_of(m).is_some()
    }

    /// The `p` with `m = base - 2p`, if `m` is a member.
    pub fn p_of(&self, m: i64) -> Option<i64> {
        let diff = self.base - m;
        if diff.rem_euclid(2) != 0 {
            return None;
        }
        let p = diff / 2;
        (self.p_lo <= p && p < self.p_hi).then_some(p)
    }

    /// Members in increasing order.
    pub fn members(&self) -> Vec<i64> {
        (self.p_lo..self.p_hi).rev().map(|p| self.base - 2 * p).collect()
    }
}

/// `R_{i,j}^{r,s}` over the full diagram.
pub fn rset(rank: &DynkinA, i: Node, j: Node, r: u32, s: u32) -> Result<RSet> {
    let span = rank.interval(i, j)?;
    let boundary = rank.full().boundary_distance_of(span)?;
    let params = RSetParams { i, j, r, s, interval: None };
    Ok(RSet::build(params, i.abs_diff(j), boundary))
}

/// `R_{i,j,J}^{r,s}`: the set computed with `J` as the ambient diagram.
pub fn rset_restricted(rank: &DynkinA, i: Node, j: Node, r: u32, s: u32, within: Interval) -> Result<RSet> {
    let span = rank.interval(i, j)?;
    rank.check(within.lo)?;
    rank.check(within.hi)?;
    let boundary = within.boundary_distance_of(span)?;
    let params = RSetParams { i, j, r, s, interval: Some(within) };
    Ok(RSet::build(params, i.abs_diff(j), boundary))
}

/// `R_i^{r,s} = { r + s - 2p : 0 <= p < min(r,s) }`.
pub fn rset_same_node(rank: &DynkinA, i: Node, r: u32, s: u32) -> Result<RSet> {
    rset_restricted(rank, i, i, r, s, Interval::new(i, i))
}

/// How the ordered tensor product `L(f) ⊗ L(g)` of two KR modules behaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairRelation {
    Simple,
    /// Reducible and highest-ℓ-weight; carries `center(f) - center(g) > 0`.
    ReducibleHlw(i64),
    /// Reducible, and the opposite order is highest-ℓ-weight; carries the negative difference.
    ReducibleOpposite(i64),
}

impl PairRelation {
    pub fn is_simple(&self) -> bool {
        matches!(self, PairRelation::Simple)
    }
}

pub fn kr_pair_relation(rank: &DynkinA, f: &KrFactor, g: &KrFactor) -> Result<PairRelation> {
    let set = rset(rank, f.color, g.color, f.length, g.length)?;
    if f.coset != g.coset {
        return Ok(PairRelation::Simple);
    }
    let delta = f.center - g.center;
    Ok(if !set.contains(delta.abs()) {
        PairRelation::Simple
    } else if delta > 0 {
        PairRelation::ReducibleHlw(delta)
    } else {
        PairRelation::ReducibleOpposite(delta)
    })
}

/// The right dual `g*`: recolored by the involution and shifted by `-h∨`.
pub fn right_dual(rank: &DynkinA, g: &KrFactor) -> Result<KrFactor> {
    Ok(KrFactor {
        color: rank.star(g.color)?,
        center: g.center - i64::from(rank.dual_coxeter()),
        ..*g
    })
}

/// The left dual `*g`, shifted by `+h∨`.
pub fn left_dual(rank: &DynkinA, g: &KrFactor) -> Result<KrFactor> {
    Ok(KrFactor {
        color: rank.star(g.color)?,
        center: g.center + i64::from(rank.dual_coxeter()),
        ..*g
    })
}

/// Whether `L(f) ⊗ L(g)^*` is simple.
pub fn kr_dual_pair_simple(rank: &DynkinA, f: &KrFactor, g: &KrFactor) -> Result<bool> {
    rank.check(f.color)?;
    Ok(kr_pair_relation(rank, f, &right_dual(rank, g)?)?.is_simple())
}

/// Whether `L(f) ⊗ *L(g)` is simple.
pub fn kr_left_dual_pair_simple(rank: &DynkinA, f: &KrFactor, g: &KrFactor) -> Result<bool> {
    rank.check(f.color)?;
    Ok(kr_pair_relation(rank, f, &left_dual(rank, g)?)?.is_simple())
}
