//! The graph monoid: the free abelian monoid on the vertices modulo, for
//! every non-sink v, the relation identifying v with the multiset of
//! ranges of its outgoing edges.
//!
//! Equality of monoid classes is searched, not derived: forward rewriting
//! can grow multisets without bound, so the word problem is attacked by a
//! budgeted bidirectional breadth-first closure. The group completion, by
//! contrast, is exact, and serves as an independent route to the plain
//! Grothendieck group.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::matrix::{cokernel, FinAbGroup, IntMatrix};

/// Element of the free abelian monoid on the vertices: one multiplicity
/// per vertex, in declaration order. The zero element is all zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MonoidElement {
    counts: Vec<u64>,
}

impl MonoidElement {
    pub fn zero(g: &Graph) -> Self {
        MonoidElement {
            counts: alloc::vec![0; g.vertex_count()],
        }
    }

    pub fn single(g: &Graph, v: VertexId) -> Self {
        let mut m = MonoidElement::zero(g);
        m.counts[v.0] += 1;
        m
    }

    pub fn from_counts(g: &Graph, counts: Vec<u64>) -> Self {
        assert_eq!(
            counts.len(),
            g.vertex_count(),
            "one multiplicity per vertex"
        );
        MonoidElement { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn add(&self, other: &MonoidElement) -> MonoidElement {
        assert_eq!(self.counts.len(), other.counts.len());
        MonoidElement {
            counts: self
                .counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Vertices with nonzero multiplicity.
    pub fn support(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| VertexId(i))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RewriteError {
    /// Forward rewriting needs a copy of the vertex in the multiset.
    VertexAbsent,
    /// Sinks have no defining relation.
    SinkRelation,
    /// Backward rewriting needs the whole right-hand side present.
    RhsNotContained,
}

impl fmt::Display for RewriteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteError::VertexAbsent => write!(f, "vertex has multiplicity zero"),
            RewriteError::SinkRelation => write!(f, "sinks have no rewriting relation"),
            RewriteError::RhsNotContained => {
                write!(
                    f,
                    "multiset does not contain the relation's right-hand side"
                )
            }
        }
    }
}

/// Multiplicity vector of the right-hand side of v's relation: one entry
/// per vertex, counting v's outgoing edges into it.
fn relation_rhs(g: &Graph, v: VertexId) -> Vec<u64> {
    let mut rhs = alloc::vec![0u64; g.vertex_count()];
    for &e in g.out_edges(v) {
        rhs[g.edge(e).range.0] += 1;
    }
    rhs
}

/// Apply the relation of `v` to `m` once, in the given direction.
pub fn rewrite_step(
    g: &Graph,
    m: &MonoidElement,
    v: VertexId,
    direction: Direction,
) -> Result<MonoidElement, RewriteError> {
    assert_eq!(m.counts.len(), g.vertex_count());
    if g.is_sink(v) {
        return Err(RewriteError::SinkRelation);
    }
    let rhs = relation_rhs(g, v);
    let mut counts = m.counts.clone();
    match direction {
        Direction::Forward => {
            if counts[v.0] == 0 {
                return Err(RewriteError::VertexAbsent);
            }
            counts[v.0] -= 1;
            for (c, r) in counts.iter_mut().zip(&rhs) {
                *c += r;
            }
        }
        Direction::Backward => {
            if counts.iter().zip(&rhs).any(|(c, r)| c < r) {
                return Err(RewriteError::RhsNotContained);
            }
            for (c, r) in counts.iter_mut().zip(&rhs) {
                *c -= r;
            }
            counts[v.0] += 1;
        }
    }
    Ok(MonoidElement { counts })
}

/// All one-step rewrites of a multiplicity vector, in both directions.
fn successors(g: &Graph, state: &[u64], out: &mut Vec<Vec<u64>>) {
    out.clear();
    for v in g.vertices() {
        if g.is_sink(v) {
            continue;
        }
        let rhs = relation_rhs(g, v);
        if state[v.0] > 0 {
            let mut next = state.to_vec();
            next[v.0] -= 1;
            for (c, r) in next.iter_mut().zip(&rhs) {
                *c += r;
            }
            out.push(next);
        }
        if state.iter().zip(&rhs).all(|(c, r)| c >= r) {
            let mut next = state.to_vec();
            for (c, r) in next.iter_mut().zip(&rhs) {
                *c -= r;
            }
            next[v.0] += 1;
            out.push(next);
        }
    }
}

/// Verdict of the bounded word-problem search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonoidEq {
    Equal,
    /// A reachable set was exhausted without meeting the other side, which
    /// settles the question negatively.
    NotEqualWithinBudget,
    /// The budget ran out first.
    Unknown,
}

impl fmt::Display for MonoidEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidEq::Equal => write!(f, "equal"),
            MonoidEq::NotEqualWithinBudget => write!(f, "not equal"),
            MonoidEq::Unknown => write!(f, "unknown"),
        }
    }
}

/// Default cap on explored states.
pub const DEFAULT_BUDGET: u64 = 100_000;

/// Decide whether two multisets represent the same monoid class by
/// bidirectional breadth-first rewriting. `budget` bounds the number of
/// states expanded across both sides.
///
/// Every new state on one side is tested against the other side's visited
/// set, so a common class is always detected before either closure
/// completes; conversely, once one side's closure is fully explored it is
/// the entire equivalence class, and missing the other start settles
/// inequality conclusively.
pub fn monoid_equal(g: &Graph, a: &MonoidElement, b: &MonoidElement, budget: u64) -> MonoidEq {
    assert_eq!(a.counts.len(), g.vertex_count());
    assert_eq!(b.counts.len(), g.vertex_count());
    if a == b {
        return MonoidEq::Equal;
    }
    let mut visited = [BTreeSet::new(), BTreeSet::new()];
    let mut frontier = [VecDeque::new(), VecDeque::new()];
    visited[0].insert(a.counts.clone());
    frontier[0].push_back(a.counts.clone());
    visited[1].insert(b.counts.clone());
    frontier[1].push_back(b.counts.clone());

    let mut succ = Vec::new();
    let mut spent = 0u64;
    let mut side = 0usize;
    loop {
        if frontier[0].is_empty() || frontier[1].is_empty() {
            return MonoidEq::NotEqualWithinBudget;
        }
        if spent >= budget {
            return MonoidEq::Unknown;
        }
        spent += 1;
        let state = frontier[side]
            .pop_front()
            .expect("frontier checked nonempty");
        successors(g, &state, &mut succ);
        for next in succ.drain(..) {
            if visited[1 - side].contains(&next) {
                return MonoidEq::Equal;
            }
            if visited[side].insert(next.clone()) {
                frontier[side].push_back(next);
            }
        }
        side = 1 - side;
    }
}

/// Group completion of the graph monoid: the cokernel of the relation
/// matrix whose column for each non-sink v is (rhs of v's relation) - v.
/// This is an independent route to the plain Grothendieck group.
pub fn k0_from_monoid(g: &Graph) -> FinAbGroup {
    let n = g.vertex_count();
    let non_sinks: Vec<VertexId> = g.vertices().filter(|&v| !g.is_sink(v)).collect();
    let mut rel = IntMatrix::zero(n, non_sinks.len());
    for (j, &v) in non_sinks.iter().enumerate() {
        let single = MonoidElement::single(g, v);
        let rewritten = rewrite_step(g, &single, v, Direction::Forward)
            .expect("v is not a sink and is present in its own singleton");
        for i in 0..n {
            rel[(i, j)] =
                BigInt::from(rewritten.counts[i] as i64) - BigInt::from(single.counts[i] as i64);
        }
    }
    cokernel(&rel)
}

// ====== Ideal membership by vertex support ======

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SupportError {
    /// The correspondence used here is stated for sink-free graphs.
    SinksPresent,
    /// The candidate set must be closed under edge ranges.
    NotHereditary,
    /// The candidate set must absorb vertices all of whose edges land in it.
    NotSaturated,
    /// A vertex id exceeds the graph's vertex count.
    VertexOutOfRange(usize),
}

impl fmt::Display for SupportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupportError::SinksPresent => write!(f, "graph has sinks"),
            SupportError::NotHereditary => write!(f, "vertex set is not hereditary"),
            SupportError::NotSaturated => write!(f, "vertex set is not saturated"),
            SupportError::VertexOutOfRange(i) => write!(f, "vertex index {i} out of range"),
        }
    }
}

/// Result of the per-vertex ideal membership search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealSupport {
    pub members: VertexSet,
    pub unknown: VertexSet,
}

/// For a hereditary saturated set H in a sink-free graph, compute the
/// vertices v whose monoid class is dominated by an H-supported class,
/// i.e. `[γ] = [v] + [δ]` for some γ supported in H.
///
/// Membership of each v in H is certified by a bounded forward search for
/// an H-supported multiset. Non-membership is conclusive without search:
/// rewriting in either direction preserves "supported in H" (forward
/// because H is hereditary; backward because H is saturated), so a vertex
/// outside H can never be a summand of an H-supported class.
pub fn ideal_vertex_support(
    g: &Graph,
    h: &VertexSet,
    budget: u64,
) -> Result<IdealSupport, SupportError> {
    if !crate::graph::sinks(g).is_empty() {
        return Err(SupportError::SinksPresent);
    }
    if let Some(v) = h.iter().find(|v| v.0 >= g.vertex_count()) {
        return Err(SupportError::VertexOutOfRange(v.0));
    }
    if !crate::graph::is_hereditary(g, h) {
        return Err(SupportError::NotHereditary);
    }
    if !crate::graph::is_saturated(g, h) {
        return Err(SupportError::NotSaturated);
    }

    let mut members = Vec::new();
    let mut unknown = Vec::new();
    for v in g.vertices() {
        if !h.contains(v) {
            continue;
        }
        match certify_membership(g, v, h, budget) {
            Some(true) => members.push(v),
            Some(false) => {}
            None => unknown.push(v),
        }
    }
    Ok(IdealSupport {
        members: VertexSet::from_iter(members),
        unknown: VertexSet::from_iter(unknown),
    })
}

/// Bounded forward-only search from the singleton of `v` for a multiset
/// supported inside `h`. `Some(true)` is a certificate; `None` means the
/// budget ran out; `Some(false)` means the forward closure was exhausted.
fn certify_membership(g: &Graph, v: VertexId, h: &VertexSet, budget: u64) -> Option<bool> {
    let supported = |state: &[u64]| {
        state
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || h.contains(VertexId(i)))
    };
    let start = MonoidElement::single(g, v).counts;
    if supported(&start) {
        return Some(true);
    }
    let mut visited = BTreeSet::new();
    let mut frontier = VecDeque::new();
    visited.insert(start.clone());
    frontier.push_back(start);
    let mut spent = 0u64;
    while let Some(state) = frontier.pop_front() {
        if spent >= budget {
            return None;
        }
        spent += 1;
        for w in g.vertices() {
            if g.is_sink(w) || state[w.0] == 0 {
                continue;
            }
            let mut next = state.clone();
            next[w.0] -= 1;
            for &e in g.out_edges(w) {
                next[g.edge(e).range.0] += 1;
            }
            if supported(&next) {
                return Some(true);
            }
            if visited.insert(next.clone()) {
                frontier.push_back(next);
            }
        }
    }
    Some(false)
}
