//! Drinfeld polynomials as multisets of Kirillov–Reshetikhin strings.
//!
//! A factor `ω_{i,a q^m, r}` is stored as its color `i`, the integer exponent
//! `m` of its center relative to an anchor `a`, and its length `r`. Spectral
//! parameters lying in different `q^ℤ` cosets never interact; the `coset`
//! tag keeps them apart.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::{DynkinA, Node};
use crate::error::{Error, Result};

/// Opaque tag naming the `q^ℤ` coset of a spectral parameter.
pub type Coset = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KrFactor {
    pub color: Node,
    pub center: i64,
    pub length: u32,
    #[serde(default)]
    pub coset: Coset,
}

impl KrFactor {
    pub fn new(color: Node, center: i64, length: u32) -> Self {
        KrFactor { color, center, length, coset: 0 }
    }

    pub fn in_coset(self, coset: Coset) -> Self {
        KrFactor { coset, ..self }
    }

    pub fn shifted(self, by: i64) -> Self {
        KrFactor { center: self.center + by, ..self }
    }

    /// Exponents of the roots of the string: `center + r - 1 - 2p`, `0 <= p < r`.
    pub fn roots(&self) -> Vec<i64> {
        let r = i64::from(self.length);
        (0..r).map(|p| self.center + r - 1 - 2 * p).collect()
    }

    /// Whether the two strings may both be q-factors of the same polynomial,
    /// i.e. their union is not a longer string unless one contains the other.
    pub fn in_general_position(&self, other: &KrFactor) -> bool {
        if self.color != other.color || self.coset != other.coset {
            return true;
        }
        let delta = (self.center - other.center).abs();
        let (r, s) = (i64::from(self.length), i64::from(other.length));
        !(0..r.min(s)).any(|p| delta == r + s - 2 * p)
    }
}

/// Root exponents of a factor, as a multiset.
pub fn roots_of(f: &KrFactor) -> Vec<i64> {
    f.roots()
}

/// A Drinfeld polynomial given by a (pseudo) q-factorization.
///
/// Factors are kept sorted so that equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DrinfeldPoly {
    rank: DynkinA,
    factors: Vec<KrFactor>,
}

impl DrinfeldPoly {
    pub fn one(rank: DynkinA) -> Self {
        DrinfeldPoly { rank, factors: Vec::new() }
    }

    pub fn from_factors(rank: DynkinA, factors: impl IntoIterator<Item = KrFactor>) -> Result<Self> {
        let mut factors: Vec<KrFactor> = factors.into_iter().collect();
        for f in &factors {
            rank.check(f.color)?;
            if f.length == 0 {
                return Err(Error::NonPositiveLength);
            }
        }
        factors.sort();
        Ok(DrinfeldPoly { rank, factors })
    }

    pub fn rank(&self) -> DynkinA {
        self.rank
    }

    pub fn factors(&self) -> &[KrFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    fn map(&self, f: impl Fn(KrFactor) -> KrFactor) -> Self {
        let mut factors: Vec<_> = self.factors.iter().copied().map(f).collect();
        factors.sort();
        DrinfeldPoly { rank: self.rank, factors }
    }

    /// The product of two polynomials (multiset sum of their factors).
    pub fn product(&self, other: &DrinfeldPoly) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank.rank(),
                right: other.rank.rank(),
            });
        }
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        factors.sort();
        Ok(DrinfeldPoly { rank: self.rank, factors })
    }

    /// Root exponents per `(coset, color)`, with multiplicities.
    pub fn root_multiset(&self) -> BTreeMap<(Coset, Node), BTreeMap<i64, usize>> {
        let mut out: BTreeMap<(Coset, Node), BTreeMap<i64, usize>> = BTreeMap::new();
        for f in &self.factors {
            let roots = out.entry((f.coset, f.color)).or_default();
            for x in f.roots() {
                *roots.entry(x).or_default() += 1;
            }
        }
        out
    }

    /// Whether the factors pairwise satisfy the q-factorization condition.
    pub fn is_q_factorization(&self) -> bool {
        self.first_non_general_pair().is_none()
    }

    pub(crate) fn first_non_general_pair(&self) -> Option<(KrFactor, KrFactor)> {
        for (k, f) in self.factors.iter().enumerate() {
            for g in &self.factors[k + 1..] {
                if !f.in_general_position(g) {
                    return Some((*f, *g));
                }
            }
        }
        None
    }

    /// The q-factorization: the unique decomposition into strings in
    /// pairwise general position with the same roots.
    ///
    /// Each `(coset, color)` class is peeled greedily, longest step-2 run
    /// first, leftmost on ties.
    pub fn q_factorize(&self) -> Result<Self> {
        let mut factors = Vec::new();
        for ((coset, color), mut roots) in self.root_multiset() {
            while let Some((start, len)) = longest_run(&roots) {
                for k in 0..len {
                    let x = start + 2 * k as i64;
                    let count = roots.get_mut(&x).expect("run member present");
                    *count -= 1;
                    if *count == 0 {
                        roots.remove(&x);
                    }
                }
                let factor = KrFactor {
                    color,
                    center: start + len as i64 - 1,
                    length: len as u32,
                    coset,
                };
                factors.push(factor);
            }
        }
        factors.sort();
        let out = DrinfeldPoly { rank: self.rank, factors };
        if let Some((f, g)) = out.first_non_general_pair() {
            return Err(Error::InternalInvariantViolation(format!(
                "peeling produced non-general strings {f:?} and {g:?}"
            )));
        }
        Ok(out)
    }

    /// `wt(π)` as total length per color.
    pub fn weight(&self) -> BTreeMap<Node, u32> {
        let mut out = BTreeMap::new();
        for f in &self.factors {
            *out.entry(f.color).or_default() += f.length;
        }
        out
    }

    pub fn support(&self) -> BTreeSet<Node> {
        self.factors.iter().map(|f| f.color).collect()
    }

    pub fn shift(&self, by: i64) -> Self {
        self.map(|f| f.shifted(by))
    }

    /// `π^-`: inverts every root, `(i, m, r) -> (i, -m, r)`.
    pub fn dual_negate(&self) -> Self {
        self.map(|f| KrFactor { center: -f.center, ..f })
    }

    /// `π^σ`: recolors by the diagram involution.
    pub fn dual_sigma(&self) -> Self {
        let rank = self.rank;
        self.map(|f| KrFactor { color: rank.star_unchecked(f.color), ..f })
    }

    /// `π^*`, the Drinfeld polynomial of the dual module.
    pub fn dual_star(&self) -> Self {
        self.dual_sigma().shift(-i64::from(self.rank.dual_coxeter()))
    }

    /// `π^κ = (π^-)^*`.
    pub fn dual_kappa(&self) -> Self {
        self.dual_negate().dual_star()
    }

    /// Parses the `color:center:length[@coset]` token grammar.
    pub fn parse(rank: DynkinA, text: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut pos = 0;
        for token in text.split_whitespace() {
            let offset = pos + text[pos..].find(token).unwrap_or(0);
            pos = offset + token.len();
            let factor = parse_factor(token).map_err(|msg| Error::Syntax { pos: offset, msg })?;
            rank.check(factor.color)?;
            if factor.length == 0 {
                return Err(Error::NonPositiveLength);
            }
            factors.push(factor);
        }
        DrinfeldPoly::from_factors(rank, factors)
    }
}

fn parse_factor(token: &str) -> std::result::Result<KrFactor, String> {
    let (body, coset) = match token.split_once('@') {
        Some((body, coset)) => (
            body,
            coset
                .parse::<Coset>()
                .map_err(|_| format!("bad coset tag in {token:?}"))?,
        ),
        None => (token, 0),
    };
    let parts: Vec<&str> = body.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected color:center:length, got {token:?}"));
    }
    let color = parts[0]
        .parse::<Node>()
        .map_err(|_| format!("bad color in {token:?}"))?;
    let center = parts[1]
        .parse::<i64>()
        .map_err(|_| format!("bad center in {token:?}"))?;
    let length = parts[2]
        .parse::<i64>()
        .map_err(|_| format!("bad length in {token:?}"))?;
    if length <= 0 {
        // reported as NonPositiveLength by the caller
        return Ok(KrFactor { color, center, length: 0, coset });
    }
    let length = u32::try_from(length).map_err(|_| format!("length too large in {token:?}"))?;
    Ok(KrFactor { color, center, length, coset })
}

impl fmt::Display for KrFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.color, self.center, self.length)?;
        if self.coset != 0 {
            write!(f, "@{}", self.coset)?;
        }
        Ok(())
    }
}

impl fmt::Display for DrinfeldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Longest run `x, x+2, ..., x+2(len-1)` present in `roots`, leftmost on ties.
fn longest_run(roots: &BTreeMap<i64, usize>) -> Option<(i64, usize)> {
    let mut best: Option<(i64, usize)> = None;
    for &x in roots.keys() {
        if roots.contains_key(&(x - 2)) {
            continue;
        }
        let mut len = 1;
        while roots.contains_key(&(x + 2 * len as i64)) {
            len += 1;
        }
        if best.is_none_or(|(_, l)| len > l) {
            best = Some((x, len));
        }
    }
    best
}
