//! Pre-, pseudo- and q-factorization graphs.
//!
//! Vertices carry absolute centers, so an arrow's exponent is always the
//! difference of the centers of its tail and head.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::dynkin::{DynkinA, Node};
use crate::error::{Error, Result};
use crate::lweight::{Coset, DrinfeldPoly, KrFactor};
use crate::redsets::{kr_pair_relation, rset, rset_same_node, PairRelation};

pub type VertexId = usize;

/// Default bound on the number of vertices for cut enumeration.
pub const DEFAULT_CUT_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub id: VertexId,
    pub color: Node,
    pub center: i64,
    pub weight: u32,
    #[serde(default)]
    pub coset: Coset,
}

impl Vertex {
    pub fn factor(&self) -> KrFactor {
        KrFactor::new(self.color, self.center, self.weight).in_coset(self.coset)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub tail: VertexId,
    pub head: VertexId,
    pub exp: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct FactGraph {
    rank: DynkinA,
    vertices: Vec<Vertex>,
    arrows: BTreeSet<Arrow>,
}

#[derive(Deserialize)]
struct RawGraph {
    rank: DynkinA,
    vertices: Vec<Vertex>,
    #[serde(default)]
    arrows: Vec<Arrow>,
}

impl TryFrom<RawGraph> for FactGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        FactGraph::new(raw.rank, raw.vertices, raw.arrows)
    }
}

/// A bipartition of the vertex set together with the arrows crossing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cut {
    pub left: BTreeSet<VertexId>,
    pub right: BTreeSet<VertexId>,
    pub crossing: Vec<Arrow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Prefact,
    Pseudo,
    Qfact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    InvalidColor { vertex: VertexId },
    ZeroWeight { vertex: VertexId },
    SelfLoop { vertex: VertexId },
    BadExponent { tail: VertexId, head: VertexId, exp: i64 },
    DuplicateArrow { a: VertexId, b: VertexId },
    CrossCosetArrow { tail: VertexId, head: VertexId },
    Cycle,
    /// The pair is reducible in this orientation but the arrow is absent.
    MissingArrow { tail: VertexId, head: VertexId, exp: i64 },
    /// An arrow whose exponent is outside the reducibility set.
    SpuriousArrow { tail: VertexId, head: VertexId, exp: i64 },
    /// Two same-colored vertices whose strings would merge.
    NotGeneralPosition { a: VertexId, b: VertexId, diff: i64, color: Node, r: u32, s: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::InvalidColor { vertex } => write!(f, "vertex {vertex} has an invalid color"),
            Violation::ZeroWeight { vertex } => write!(f, "vertex {vertex} has weight 0"),
            Violation::SelfLoop { vertex } => write!(f, "loop at vertex {vertex}"),
            Violation::BadExponent { tail, head, exp } => {
                write!(f, "arrow {tail}->{head} has exponent {exp}, not the positive center difference")
            }
            Violation::DuplicateArrow { a, b } => write!(f, "more than one arrow between {a} and {b}"),
            Violation::CrossCosetArrow { tail, head } => write!(f, "arrow {tail}->{head} joins different cosets"),
            Violation::Cycle => write!(f, "oriented cycle"),
            Violation::MissingArrow { tail, head, exp } => {
                write!(f, "missing arrow {tail}->{head}: {exp} lies in the reducibility set")
            }
            Violation::SpuriousArrow { tail, head, exp } => {
                write!(f, "arrow {tail}->{head}: {exp} is not in the reducibility set")
            }
            Violation::NotGeneralPosition { a, b, diff, color, r, s } => {
                write!(f, "vertices {a} and {b}: {diff} lies in R_{color}^{{{r},{s}}}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub level: Level,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorGraph {
    pub graph: FactGraph,
    pub origin: BTreeMap<VertexId, Origin>,
    /// Whether the q-factors of the product are the union of those of the factors.
    pub dissociate: bool,
}

/// Strict order induced by the arrows: `greater ≻ lesser` when a directed path
/// runs from `greater` down to `lesser`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrder {
    ids: Vec<VertexId>,
    below: Vec<Vec<bool>>,
}

impl PartialOrder {
    pub fn greater(&self, a: VertexId, b: VertexId) -> bool {
        match (self.pos(a), self.pos(b)) {
            (Some(x), Some(y)) => self.below[x][y],
            _ => false,
        }
    }

    pub fn comparable(&self, a: VertexId, b: VertexId) -> bool {
        a == b || self.greater(a, b) || self.greater(b, a)
    }

    /// All pairs `(greater, lesser)`.
    pub fn pairs(&self) -> BTreeSet<(VertexId, VertexId)> {
        let mut out = BTreeSet::new();
        for (x, row) in self.below.iter().enumerate() {
            for (y, &b) in row.iter().enumerate() {
                if b {
                    out.insert((self.ids[x], self.ids[y]));
                }
            }
        }
        out
    }

    fn pos(&self, id: VertexId) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }
}

impl FactGraph {
    /// Assembles a graph, checking only that ids are unique and arrows refer
    /// to existing vertices. Use [`FactGraph::validate`] for the rest.
    pub fn new(rank: DynkinA, vertices: Vec<Vertex>, arrows: impl IntoIterator<Item = Arrow>) -> Result<Self> {
        let mut vertices = vertices;
        vertices.sort_by_key(|v| v.id);
        for w in vertices.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::InvalidVertex(w[1].id));
            }
        }
        let g = FactGraph { rank, vertices, arrows: BTreeSet::new() };
        let mut arrows_set = BTreeSet::new();
        for a in arrows {
            for end in [a.tail, a.head] {
                if g.pos(end).is_none() {
                    return Err(Error::InvalidVertex(end));
                }
            }
            arrows_set.insert(a);
        }
        Ok(FactGraph { arrows: arrows_set, ..g })
    }

    pub fn rank(&self) -> DynkinA {
        self.rank
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &BTreeSet<Arrow> {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().map(|v| v.id)
    }

    pub fn vertex(&self, id: VertexId) -> Result<&Vertex> {
        self.pos(id).map(|p| &self.vertices[p]).ok_or(Error::InvalidVertex(id))
    }

    fn pos(&self, id: VertexId) -> Option<usize> {
        self.vertices.binary_search_by_key(&id, |v| v.id).ok()
    }

    /// Positional adjacency: `out[x]` lists heads of arrows with tail at position `x`.
    fn adjacency(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let n = self.len();
        let (mut out, mut inc) = (vec![Vec::new(); n], vec![Vec::new(); n]);
        for a in &self.arrows {
            let (t, h) = (self.pos(a.tail).unwrap(), self.pos(a.head).unwrap());
            out[t].push(h);
            inc[h].push(t);
        }
        (out, inc)
    }

    pub fn has_arrow(&self, tail: VertexId, head: VertexId) -> bool {
        self.arrows.range(Arrow { tail, head, exp: i64::MIN }..).next().is_some_and(|a| a.tail == tail && a.head == head)
    }

    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.has_arrow(a, b) || self.has_arrow(b, a)
    }

    pub fn validate(&self, level: Level) -> ValidationReport {
        let mut violations = Vec::new();
        for v in &self.vertices {
            if self.rank.check(v.color).is_err() {
                violations.push(Violation::InvalidColor { vertex: v.id });
            }
            if v.weight == 0 {
                violations.push(Violation::ZeroWeight { vertex: v.id });
            }
        }
        let mut seen_pairs = BTreeSet::new();
        for a in &self.arrows {
            let (t, h) = (self.vertex(a.tail).unwrap(), self.vertex(a.head).unwrap());
            if a.tail == a.head {
                violations.push(Violation::SelfLoop { vertex: a.tail });
                continue;
            }
            if a.exp <= 0 || a.exp != t.center - h.center {
                violations.push(Violation::BadExponent { tail: a.tail, head: a.head, exp: a.exp });
            }
            if !seen_pairs.insert((a.tail.min(a.head), a.tail.max(a.head))) {
                violations.push(Violation::DuplicateArrow { a: a.tail.min(a.head), b: a.tail.max(a.head) });
            }
            if t.coset != h.coset {
                violations.push(Violation::CrossCosetArrow { tail: a.tail, head: a.head });
            }
        }
        if self.partial_order().is_err() {
            violations.push(Violation::Cycle);
        }
        if level >= Level::Pseudo && violations.is_empty() {
            self.check_arrows_forced(&mut violations);
        }
        if level >= Level::Qfact && violations.is_empty() {
            self.check_general_position(&mut violations);
        }
        ValidationReport { level, violations }
    }

    fn component_labels(&self) -> Vec<usize> {
        let n = self.len();
        let (out, inc) = self.adjacency();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            label[start] = next;
            while let Some(x) = queue.pop_front() {
                for &y in out[x].iter().chain(&inc[x]) {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Pairs whose centers are comparable; absolute centers make this every same-coset pair.
    fn same_coset_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if self.vertices[x].coset == self.vertices[y].coset {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn check_arrows_forced(&self, violations: &mut Vec<Violation>) {
        for a in &self.arrows {
            let (t, h) = (self.vertex(a.tail).unwrap(), self.vertex(a.head).unwrap());
            let set = rset(&self.rank, t.color, h.color, t.weight, h.weight).unwrap();
            if !set.contains(a.exp) {
                violations.push(Violation::SpuriousArrow { tail: a.tail, head: a.head, exp: a.exp });
            }
        }
        for (x, y) in self.same_coset_pairs() {
            let (v, w) = (&self.vertices[x], &self.vertices[y]);
            let (hi, lo) = if v.center >= w.center { (v, w) } else { (w, v) };
            let diff = hi.center - lo.center;
            if diff > 0
                && rset(&self.rank, hi.color, lo.color, hi.weight, lo.weight).unwrap().contains(diff)
                && !self.has_arrow(hi.id, lo.id)
            {
                violations.push(Violation::MissingArrow { tail: hi.id, head: lo.id, exp: diff });
            }
        }
    }

    fn check_general_position(&self, violations: &mut Vec<Violation>) {
        for (x, y) in self.same_coset_pairs() {
            let (v, w) = (&self.vertices[x], &self.vertices[y]);
            if v.color != w.color {
                continue;
            }
            let diff = (v.center - w.center).abs();
            if rset_same_node(&self.rank, v.color, v.weight, w.weight).unwrap().contains(diff) {
                violations.push(Violation::NotGeneralPosition {
                    a: v.id,
                    b: w.id,
                    diff,
                    color: v.color,
                    r: v.weight,
                    s: w.weight,
                });
            }
        }
    }

    pub fn to_polynomial(&self) -> Result<DrinfeldPoly> {
        DrinfeldPoly::from_factors(self.rank, self.vertices.iter().map(Vertex::factor))
    }

    /// The induced subgraph on `ids`, keeping vertex ids.
    pub fn subgraph(&self, ids: &BTreeSet<VertexId>) -> Result<FactGraph> {
        let mut vertices = Vec::with_capacity(ids.len());
        for &id in ids {
            vertices.push(*self.vertex(id)?);
        }
        let arrows = self.arrows.iter().filter(|a| ids.contains(&a.tail) && ids.contains(&a.head)).copied();
        FactGraph::new(self.rank, vertices, arrows)
    }

    pub fn connected_components(&self) -> Vec<FactGraph> {
        let label = self.component_labels();
        let count = label.iter().copied().max().map_or(0, |m| m + 1);
        let mut groups = vec![BTreeSet::new(); count];
        for (x, &l) in label.iter().enumerate() {
            groups[l].insert(self.vertices[x].id);
        }
        groups.iter().map(|ids| self.subgraph(ids).unwrap()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().iter().all(|&l| l == 0)
    }

    pub fn partial_order(&self) -> Result<PartialOrder> {
        let n = self.len();
        let (out, inc) = self.adjacency();
        let mut indeg: Vec<usize> = inc.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            topo.push(x);
            for &y in &out[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::CyclicGraph);
        }
        let mut below = vec![vec![false; n]; n];
        for &x in topo.iter().rev() {
            for &y in &out[x] {
                below[x][y] = true;
                let (row_x, row_y) = if x < y {
                    let (a, b) = below.split_at_mut(y);
                    (&mut a[x], &b[0])
                } else {
                    let (a, b) = below.split_at_mut(x);
                    (&mut b[0], &a[y])
                };
                for (bx, &by) in row_x.iter_mut().zip(row_y.iter()) {
                    *bx |= by;
                }
            }
        }
        Ok(PartialOrder { ids: self.ids().collect(), below })
    }

    /// Connected, acyclic, and any two vertices are comparable.
    pub fn is_totally_ordered(&self) -> bool {
        let Ok(order) = self.partial_order() else { return false };
        !self.is_empty()
            && self.ids().all(|a| self.ids().all(|b| order.comparable(a, b)))
    }

    pub fn sinks(&self) -> BTreeSet<VertexId> {
        let tails: BTreeSet<_> = self.arrows.iter().map(|a| a.tail).collect();
        self.ids().filter(|id| !tails.contains(id)).collect()
    }

    pub fn sources(&self) -> BTreeSet<VertexId> {
        let heads: BTreeSet<_> = self.arrows.iter().map(|a| a.head).collect();
        self.ids().filter(|id| !heads.contains(id)).collect()
    }

    pub fn is_extremal(&self, id: VertexId) -> bool {
        !self.arrows.iter().any(|a| a.head == id) || !self.arrows.iter().any(|a| a.tail == id)
    }

    pub fn is_isolated(&self, id: VertexId) -> bool {
        !self.arrows.iter().any(|a| a.head == id || a.tail == id)
    }

    pub fn is_tournament(&self) -> bool {
        let ids: Vec<_> = self.ids().collect();
        ids.iter().enumerate().all(|(k, &a)| ids[k + 1..].iter().all(|&b| self.adjacent(a, b)))
    }

    fn undirected_edges(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.arrows.iter().map(|a| (a.tail.min(a.head), a.tail.max(a.head))).collect()
    }

    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.is_connected() && self.undirected_edges().len() + 1 == self.len()
    }

    pub fn is_line(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let mut degree: BTreeMap<VertexId, usize> = BTreeMap::new();
        for (a, b) in self.undirected_edges() {
            *degree.entry(a).or_default() += 1;
            *degree.entry(b).or_default() += 1;
        }
        degree.values().all(|&d| d <= 2)
    }

    /// A line all of whose arrows point the same way along it.
    pub fn is_monotonic_line(&self) -> bool {
        if !self.is_line() {
            return false;
        }
        let (out, inc) = self.adjacency();
        out.iter().all(|o| o.len() <= 1) && inc.iter().all(|i| i.len() <= 1)
    }

    /// `Plus`: vertices strictly above `v`; `Minus`: strictly below. `v` itself is excluded.
    pub fn neighborhoods(&self, v: VertexId, sign: Sign) -> Result<BTreeSet<VertexId>> {
        self.vertex(v)?;
        let order = self.partial_order()?;
        Ok(self
            .ids()
            .filter(|&w| match sign {
                Sign::Plus => order.greater(w, v),
                Sign::Minus => order.greater(v, w),
            })
            .collect())
    }

    /// All `2^(N-1) - 1` cuts; the side holding the smallest id is `left`.
    pub fn cuts(&self, cap: usize) -> Result<impl Iterator<Item = Cut> + '_> {
        let n = self.len();
        if n > cap || n > 63 {
            return Err(Error::TooManyVertices { count: n, cap: cap.min(63) });
        }
        let count: u64 = if n == 0 { 0 } else { (1u64 << (n - 1)) - 1 };
        Ok((0..count).map(move |k| self.cut_from_mask(1 | k << 1)))
    }

    /// Bit `x` of `mask` set means position `x` goes left.
    pub(crate) fn cut_from_mask(&self, mask: u64) -> Cut {
        let (mut left, mut right) = (BTreeSet::new(), BTreeSet::new());
        for (x, v) in self.vertices.iter().enumerate() {
            if mask >> x & 1 == 1 {
                left.insert(v.id);
            } else {
                right.insert(v.id);
            }
        }
        let crossing = self
            .arrows
            .iter()
            .filter(|a| left.contains(&a.tail) != left.contains(&a.head))
            .copied()
            .collect();
        Cut { left, right, crossing }
    }

    /// Checks that `left`/`right` partition the vertex set and recomputes the crossing arrows.
    pub fn make_cut(&self, left: BTreeSet<VertexId>, right: BTreeSet<VertexId>) -> Result<Cut> {
        let all: BTreeSet<_> = self.ids().collect();
        if left.is_empty() || right.is_empty() || !left.is_disjoint(&right) || &left | &right != all {
            return Err(Error::InvalidCut);
        }
        let crossing = self
            .arrows
            .iter()
            .filter(|a| left.contains(&a.tail) != left.contains(&a.head))
            .copied()
            .collect();
        Ok(Cut { left, right, crossing })
    }

    /// Reverses every arrow and negates every center.
    pub fn arrow_dual(&self) -> FactGraph {
        let vertices = self.vertices.iter().map(|v| Vertex { center: -v.center, ..*v }).collect();
        let arrows = self.arrows.iter().map(|a| Arrow { tail: a.head, head: a.tail, exp: a.exp });
        FactGraph::new(self.rank, vertices, arrows).unwrap()
    }

    /// Applies the diagram involution to every color.
    pub fn color_dual(&self) -> FactGraph {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex { color: self.rank.star(v.color).unwrap_or(v.color), ..*v })
            .collect();
        FactGraph::new(self.rank, vertices, self.arrows.iter().copied()).unwrap()
    }

    pub fn transitive_reduction(&self) -> Result<BTreeSet<Arrow>> {
        let order = self.partial_order()?;
        Ok(self
            .arrows
            .iter()
            .filter(|a| !self.ids().any(|c| order.greater(a.tail, c) && order.greater(c, a.head)))
            .copied()
            .collect())
    }

    /// Vertices sorted by `(color, center, weight, coset)` and renumbered from 0.
    pub fn canonical_form(&self) -> FactGraph {
        let mut sorted = self.vertices.clone();
        sorted.sort_by_key(|v| (v.color, v.center, v.weight, v.coset, v.id));
        let renumber: BTreeMap<VertexId, VertexId> = sorted.iter().enumerate().map(|(k, v)| (v.id, k)).collect();
        let vertices = sorted.iter().map(|v| Vertex { id: renumber[&v.id], ..*v }).collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { tail: renumber[&a.tail], head: renumber[&a.head], exp: a.exp });
        FactGraph::new(self.rank, vertices, arrows).unwrap()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    pub fn to_dot(&self, hasse: bool) -> Result<String> {
        let arrows = if hasse { self.transitive_reduction()? } else { self.arrows.clone() };
        let mut s = String::from("digraph G {\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  v{} [label=\"{}/{}\"];", v.id, v.weight, v.color);
        }
        for a in &arrows {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", a.tail, a.head, a.exp);
        }
        s.push_str("}\n");
        Ok(s)
    }
}

/// One vertex per factor and an arrow wherever the ordered pair is reducible and highest-ℓ-weight.
pub fn build_graph(p: &DrinfeldPoly) -> FactGraph {
    let rank = p.rank();
    let vertices: Vec<Vertex> = p
        .factors()
        .iter()
        .enumerate()
        .map(|(id, f)| Vertex { id, color: f.color, center: f.center, weight: f.length, coset: f.coset })
        .collect();
    let mut arrows = Vec::new();
    for v in &vertices {
        for w in &vertices {
            if v.id == w.id {
                continue;
            }
            if let Ok(PairRelation::ReducibleHlw(exp)) = kr_pair_relation(&rank, &v.factor(), &w.factor()) {
                arrows.push(Arrow { tail: v.id, head: w.id, exp });
            }
        }
    }
    FactGraph::new(rank, vertices, arrows).expect("ids are sequential")
}

pub fn graph_tensor(g: &FactGraph, h: &FactGraph) -> Result<TensorGraph> {
    let (pg, ph) = (g.to_polynomial()?, h.to_polynomial()?);
    let product = pg.product(&ph)?;
    let mut origin = BTreeMap::new();
    let mut vertices = Vec::with_capacity(g.len() + h.len());
    for (side, graph) in [(Origin::Left, g), (Origin::Right, h)] {
        for v in graph.vertices() {
            let id = vertices.len();
            vertices.push(Vertex { id, ..*v });
            origin.insert(id, side);
        }
    }
    let factors: Vec<KrFactor> = vertices.iter().map(Vertex::factor).collect();
    let mut arrows = Vec::new();
    for (x, f) in factors.iter().enumerate() {
        for (y, e) in factors.iter().enumerate() {
            if x != y {
                if let PairRelation::ReducibleHlw(exp) = kr_pair_relation(&g.rank(), f, e)? {
                    arrows.push(Arrow { tail: x, head: y, exp });
                }
            }
        }
    }
    let union = pg.q_factorize()?.product(&ph.q_factorize()?)?;
    let dissociate = product.q_factorize()? == union;
    Ok(TensorGraph { graph: FactGraph::new(g.rank(), vertices, arrows)?, origin, dissociate })
}
