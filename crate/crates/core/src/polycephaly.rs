//! Recognition and decomposition of polycephaly graphs: graphs whose cycles
//! have no exits and are pairwise disjoint, so every vertex flows into a
//! sink, an exit-free cycle (comet), or an exit-free multi-loop rose.
//!
//! Normalization: a single exit-free loop is a comet of length 1, never a
//! one-petal rose; an isolated vertex is a plain sink (a zero-petal rose).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{self, Graph, VertexId};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HeadKind {
    /// A sink vertex of the graph.
    Sink,
    /// An exit-free cycle; `cycle` lists its vertices in cycle order starting
    /// at the base (the cycle vertex with the smallest declaration index).
    Comet { cycle: Vec<VertexId> },
    /// An exit-free rose with `petals >= 2` loops.
    Rose { petals: usize },
}

/// One head of a polycephaly graph: where it sits and the multiset of feeder
/// path lengths into it, measured in the reduced graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Head {
    /// Sink vertex, comet base, or rose vertex.
    pub vertex: VertexId,
    pub kind: HeadKind,
    /// Ascending multiset of lengths of all reduced-graph paths into
    /// `vertex`; contains 0 exactly once (the trivial path).
    pub lengths: Vec<usize>,
}

impl Head {
    pub fn cycle_len(&self) -> Option<usize> {
        match &self.kind {
            HeadKind::Comet { cycle } => Some(cycle.len()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PolycephalyDecomposition {
    /// Heads ordered by head vertex declaration index.
    pub heads: Vec<Head>,
    /// The graph with one cycle edge removed per comet (the edge leaving the
    /// base) and all rose loops removed; always acyclic.
    pub reduced: Graph,
}

/// Why a graph is not polycephaly. Rejection is a value, not an error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RejectReason {
    CycleHasExit { vertex: String },
    RoseHasExit { vertex: String },
    OverlappingCycles { vertex: String },
    NoHeadReachable { vertex: String },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::CycleHasExit { vertex } => {
                write!(f, "cycle has exit at vertex {vertex}")
            }
            RejectReason::RoseHasExit { vertex } => {
                write!(f, "rose has exit at vertex {vertex}")
            }
            RejectReason::OverlappingCycles { vertex } => {
                write!(f, "overlapping cycles at vertex {vertex}")
            }
            RejectReason::NoHeadReachable { vertex } => {
                write!(f, "vertex {vertex} reaches no sink, cycle, or rose")
            }
        }
    }
}

/// Classify `g`, returning its full head decomposition or the first reason it
/// fails to be polycephaly. Disconnected graphs are fine: heads are collected
/// across components.
pub fn classify(g: &Graph) -> Result<PolycephalyDecomposition, RejectReason> {
    let kinds = head_sites(g)?;
    let heads: Vec<Head> = kinds
        .into_iter()
        .map(|(vertex, kind)| Head {
            vertex,
            kind,
            lengths: Vec::new(),
        })
        .collect();
    let reduced = reduce_to_e1(g, &heads);
    let heads = heads
        .into_iter()
        .map(|mut h| {
            h.lengths =
                graph::path_lengths_into(&reduced, h.vertex).expect("reduced graph is acyclic");
            h
        })
        .collect();
    Ok(PolycephalyDecomposition { heads, reduced })
}

/// Locate and validate the heads, without computing feeder lengths.
fn head_sites(g: &Graph) -> Result<Vec<(VertexId, HeadKind)>, RejectReason> {
    let mut sites: Vec<(VertexId, HeadKind)> = Vec::new();
    let mut is_rose = vec![false; g.vertex_count()];

    for v in g.vertices() {
        let loops = g.loops_at(v);
        if loops >= 2 {
            if g.out_degree(v) != loops {
                return Err(RejectReason::RoseHasExit {
                    vertex: g.vertex_name(v).into(),
                });
            }
            is_rose[v.0] = true;
            sites.push((v, HeadKind::Rose { petals: loops }));
        } else if g.is_sink(v) {
            sites.push((v, HeadKind::Sink));
        }
    }

    // Cycles through a rose vertex are exactly its petals (all its edges are
    // loops); every other simple cycle must be exit-free.
    let mut on_cycle = vec![false; g.vertex_count()];
    for cycle in graph::simple_cycles(g) {
        if is_rose[cycle.source.0] {
            continue;
        }
        let mut vertices = Vec::with_capacity(cycle.len());
        let mut at = cycle.source;
        for &e in &cycle.edges {
            if g.out_degree(at) != 1 {
                return Err(RejectReason::CycleHasExit {
                    vertex: g.vertex_name(at).into(),
                });
            }
            vertices.push(at);
            at = g.edge(e).range;
        }
        for &v in &vertices {
            // Unreachable once every cycle vertex has out-degree 1: two
            // distinct cycles through a vertex would branch somewhere.
            if on_cycle[v.0] {
                return Err(RejectReason::OverlappingCycles {
                    vertex: g.vertex_name(v).into(),
                });
            }
            on_cycle[v.0] = true;
        }
        // Base the comet at its smallest vertex; cycles are enumerated from
        // that vertex already.
        debug_assert_eq!(vertices.iter().min(), vertices.first());
        sites.push((cycle.source, HeadKind::Comet { cycle: vertices }));
    }

    // Every vertex must reach some head. In a finite graph this always holds
    // once all cycles validated, so this cannot fire; kept as a contract.
    let mut reaches = vec![false; g.vertex_count()];
    let mut stack: Vec<VertexId> = Vec::new();
    for (v, kind) in &sites {
        match kind {
            HeadKind::Comet { cycle } => {
                for &c in cycle {
                    reaches[c.0] = true;
                    stack.push(c);
                }
            }
            _ => {
                reaches[v.0] = true;
                stack.push(*v);
            }
        }
    }
    while let Some(w) = stack.pop() {
        for &e in g.in_edges(w) {
            let u = g.edge(e).source;
            if !reaches[u.0] {
                reaches[u.0] = true;
                stack.push(u);
            }
        }
    }
    if let Some(v) = g.vertices().find(|v| !reaches[v.0]) {
        return Err(RejectReason::NoHeadReachable {
            vertex: g.vertex_name(v).into(),
        });
    }

    sites.sort_by_key(|(v, _)| *v);
    Ok(sites)
}

/// The reduced graph: drop the cycle edge leaving each comet base and all
/// petals of each rose. Panics when `heads` does not describe `g` or the
/// result is cyclic, both of which indicate a classifier bug.
pub fn reduce_to_e1(g: &Graph, heads: &[Head]) -> Graph {
    let mut drop = vec![false; g.edge_count()];
    for head in heads {
        match &head.kind {
            HeadKind::Sink => {}
            HeadKind::Comet { .. } => {
                let out = g.out_edges(head.vertex);
                assert_eq!(out.len(), 1, "comet base has a unique outgoing edge");
                drop[out[0].0] = true;
            }
            HeadKind::Rose { petals } => {
                let out = g.out_edges(head.vertex);
                assert_eq!(out.len(), *petals, "rose vertex has only petals");
                for &e in out {
                    assert_eq!(g.edge(e).range, head.vertex, "petals are loops");
                    drop[e.0] = true;
                }
            }
        }
    }
    let mut reduced = Graph::new();
    for v in g.vertices() {
        reduced
            .add_vertex(g.vertex_name(v))
            .expect("vertex names are distinct");
    }
    for (e, edge) in g.edges() {
        if !drop[e.0] {
            reduced
                .add_edge(&edge.name, edge.source, edge.range)
                .expect("edge names are distinct");
        }
    }
    assert!(
        graph::simple_cycles(&reduced).is_empty(),
        "reduction must break every cycle"
    );
    reduced
}

// ====== Reporting ======

/// Coefficient algebra of one block of the decomposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coefficient {
    /// The ground field (sink head).
    Field,
    /// Laurent subalgebra generated by x^step (comet of length `step`).
    LaurentSub { step: usize },
    /// Leavitt algebra of module type (1, petals) (rose head).
    Leavitt { petals: usize },
}

/// One matrix block `M_size(coefficient)(shifts)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeadAlgebra {
    /// Index into `PolycephalyDecomposition::heads`.
    pub head: usize,
    pub size: usize,
    pub coefficient: Coefficient,
    pub shifts: Vec<usize>,
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Field => write!(f, "K"),
            Coefficient::LaurentSub { step: 1 } => write!(f, "K[x,x^-1]"),
            Coefficient::LaurentSub { step } => write!(f, "K[x^{step},x^-{step}]"),
            Coefficient::Leavitt { petals } => write!(f, "L(1,{petals})"),
        }
    }
}

impl fmt::Display for HeadAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{}({})(", self.size, self.coefficient)?;
        for (i, s) in self.shifts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// The matrix blocks of the graded decomposition, one per head, in head
/// order: sizes are feeder path counts and shifts the path lengths.
pub fn decomposition_report(d: &PolycephalyDecomposition) -> Vec<HeadAlgebra> {
    d.heads
        .iter()
        .enumerate()
        .map(|(i, h)| HeadAlgebra {
            head: i,
            size: h.lengths.len(),
            coefficient: match &h.kind {
                HeadKind::Sink => Coefficient::Field,
                HeadKind::Comet { cycle } => Coefficient::LaurentSub { step: cycle.len() },
                HeadKind::Rose { petals } => Coefficient::Leavitt { petals: *petals },
            },
            shifts: h.lengths.clone(),
        })
        .collect()
}
