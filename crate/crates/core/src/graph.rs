//! Finite directed multigraphs with named vertices and edges.
//!
//! Vertex and edge declaration order is significant: it fixes the indexing of
//! every matrix and vector produced elsewhere in this crate.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Index of a vertex in declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

/// Index of an edge in declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub usize);

#[derive(Clone, Debug)]
pub struct Edge {
    pub name: String,
    pub source: VertexId,
    pub range: VertexId,
}

/// A finite directed multigraph. Parallel edges and loops are allowed.
#[derive(Clone, Debug)]
pub struct Graph {
    names: Vec<String>,
    by_name: BTreeMap<String, usize>,
    edges: Vec<Edge>,
    out: Vec<Vec<EdgeId>>,
    into: Vec<Vec<EdgeId>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    DuplicateVertex(String),
    DuplicateEdge(String),
    UnknownVertex(String),
    /// `paths_into` was asked about a vertex reachable from a cycle.
    CycleReachesVertex(String),
    /// Brute-force enumeration was asked to run above its cap.
    TooManyVertices {
        count: usize,
        cap: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::DuplicateVertex(n) => write!(f, "duplicate vertex {n}"),
            GraphError::DuplicateEdge(n) => write!(f, "duplicate edge {n}"),
            GraphError::UnknownVertex(n) => write!(f, "unknown vertex {n}"),
            GraphError::CycleReachesVertex(n) => {
                write!(f, "a cycle reaches vertex {n}; its path set is infinite")
            }
            GraphError::TooManyVertices { count, cap } => {
                write!(f, "{count} vertices exceeds the enumeration cap of {cap}")
            }
        }
    }
}

impl Graph {
    pub fn new() -> Self {
        Graph {
            names: Vec::new(),
            by_name: BTreeMap::new(),
            edges: Vec::new(),
            out: Vec::new(),
            into: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        if self.by_name.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.into()));
        }
        let id = VertexId(self.names.len());
        self.by_name.insert(name.into(), id.0);
        self.names.push(name.into());
        self.out.push(Vec::new());
        self.into.push(Vec::new());
        Ok(id)
    }

    pub fn add_edge(
        &mut self,
        name: &str,
        source: VertexId,
        range: VertexId,
    ) -> Result<EdgeId, GraphError> {
        if self.edges.iter().any(|e| e.name == name) {
            return Err(GraphError::DuplicateEdge(name.into()));
        }
        assert!(source.0 < self.names.len() && range.0 < self.names.len());
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge {
            name: name.into(),
            source,
            range,
        });
        self.out[source.0].push(id);
        self.into[range.0].push(id);
        Ok(id)
    }

    pub fn add_edge_by_names(
        &mut self,
        name: &str,
        source: &str,
        range: &str,
    ) -> Result<EdgeId, GraphError> {
        let s = self
            .vertex_by_name(source)
            .ok_or_else(|| GraphError::UnknownVertex(source.into()))?;
        let r = self
            .vertex_by_name(range)
            .ok_or_else(|| GraphError::UnknownVertex(range.into()))?;
        self.add_edge(name, s, r)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.names.len()).map(VertexId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.by_name.get(name).copied().map(VertexId)
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &Edge)> {
        self.edges.iter().enumerate().map(|(i, e)| (EdgeId(i), e))
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v.0]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.into[v.0]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[v.0].len()
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.out[v.0].is_empty()
    }

    /// Number of loops based at `v`.
    pub fn loops_at(&self, v: VertexId) -> usize {
        self.out[v.0]
            .iter()
            .filter(|e| self.edges[e.0].range == v)
            .count()
    }

    /// The same graph with vertices re-declared in the order given by `order`
    /// (a permutation of `0..vertex_count()`; new index `i` holds old vertex
    /// `order[i]`). Edge declaration order is unchanged.
    pub fn relabeled(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.vertex_count());
        let mut old_to_new = vec![usize::MAX; order.len()];
        for (new, &old) in order.iter().enumerate() {
            old_to_new[old] = new;
        }
        assert!(
            old_to_new.iter().all(|&i| i != usize::MAX),
            "not a permutation"
        );
        let mut g = Graph::new();
        for &old in order {
            g.add_vertex(&self.names[old]).expect("names stay distinct");
        }
        for e in &self.edges {
            g.add_edge(
                &e.name,
                VertexId(old_to_new[e.source.0]),
                VertexId(old_to_new[e.range.0]),
            )
            .expect("edge names stay distinct");
        }
        g
    }
}

impl Default for Graph {
    fn default() -> Self {
        Graph::new()
    }
}

/// A set of vertices, kept sorted by declaration index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct VertexSet(Vec<VertexId>);

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut v: Vec<VertexId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: VertexId) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

/// A finite path: a composable sequence of edges. An empty edge list is the
/// trivial path at `source` (== `range`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Path {
    pub source: VertexId,
    pub range: VertexId,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            range: v,
            edges: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

// ====== Parsing ======

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseErrorKind {
    UnknownDirective(String),
    BadArity {
        directive: &'static str,
        expected: usize,
        got: usize,
    },
    DuplicateVertex(String),
    DuplicateEdge(String),
    UnknownVertex(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::UnknownDirective(d) => write!(f, "unknown directive {d}"),
            ParseErrorKind::BadArity {
                directive,
                expected,
                got,
            } => {
                write!(f, "{directive} takes {expected} arguments, got {got}")
            }
            ParseErrorKind::DuplicateVertex(n) => write!(f, "duplicate vertex {n}"),
            ParseErrorKind::DuplicateEdge(n) => write!(f, "duplicate edge {n}"),
            ParseErrorKind::UnknownVertex(n) => write!(f, "unknown vertex {n}"),
        }
    }
}

/// Parse the line-oriented graph format:
///
/// ```text
/// # comment
/// vertex <id>
/// edge <id> <source> <range>
/// ```
///
/// `#` starts a comment anywhere on a line; blank lines are skipped.
/// Declaration order of vertices fixes all matrix indexing downstream.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut g = Graph::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut words = content.split_whitespace();
        let Some(directive) = words.next() else {
            continue;
        };
        let args: Vec<&str> = words.collect();
        match directive {
            "vertex" => {
                if args.len() != 1 {
                    return Err(ParseError {
                        line,
                        kind: ParseErrorKind::BadArity {
                            directive: "vertex",
                            expected: 1,
                            got: args.len(),
                        },
                    });
                }
                g.add_vertex(args[0]).map_err(|_| ParseError {
                    line,
                    kind: ParseErrorKind::DuplicateVertex(args[0].into()),
                })?;
            }
            "edge" => {
                if args.len() != 3 {
                    return Err(ParseError {
                        line,
                        kind: ParseErrorKind::BadArity {
                            directive: "edge",
                            expected: 3,
                            got: args.len(),
                        },
                    });
                }
                g.add_edge_by_names(args[0], args[1], args[2])
                    .map_err(|e| ParseError {
                        line,
                        kind: match e {
                            GraphError::DuplicateEdge(n) => ParseErrorKind::DuplicateEdge(n),
                            GraphError::UnknownVertex(n) => ParseErrorKind::UnknownVertex(n),
                            _ => unreachable!("add_edge_by_names only fails as above"),
                        },
                    })?;
            }
            other => {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::UnknownDirective(other.into()),
                });
            }
        }
    }
    Ok(g)
}

// ====== Structure queries ======

/// Vertices with no outgoing edges.
pub fn sinks(g: &Graph) -> VertexSet {
    VertexSet::from_iter(g.vertices().filter(|&v| g.is_sink(v)))
}

/// Vertices from which `v` is reachable (including `v` itself).
fn ancestors(g: &Graph, v: VertexId) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![v];
    seen[v.0] = true;
    while let Some(w) = stack.pop() {
        for &e in g.in_edges(w) {
            let u = g.edge(e).source;
            if !seen[u.0] {
                seen[u.0] = true;
                stack.push(u);
            }
        }
    }
    seen
}

/// True when the subgraph induced on `keep` contains a directed cycle.
fn induced_has_cycle(g: &Graph, keep: &[bool]) -> bool {
    // Kahn's algorithm on the induced subgraph.
    let n = g.vertex_count();
    let mut indeg = vec![0usize; n];
    for (_, e) in g.edges() {
        if keep[e.source.0] && keep[e.range.0] {
            indeg[e.range.0] += 1;
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&i| keep[i] && indeg[i] == 0).collect();
    let mut removed = 0usize;
    while let Some(u) = queue.pop() {
        removed += 1;
        for &e in g.out_edges(VertexId(u)) {
            let w = g.edge(e).range;
            if keep[w.0] {
                indeg[w.0] -= 1;
                if indeg[w.0] == 0 {
                    queue.push(w.0);
                }
            }
        }
    }
    removed != keep.iter().filter(|&&k| k).count()
}

/// All finite paths with range `v`, the trivial path included.
///
/// Errors with `CycleReachesVertex` when some cycle reaches `v`, since the set
/// would be infinite.
pub fn paths_into(g: &Graph, v: VertexId) -> Result<Vec<Path>, GraphError> {
    let keep = ancestors(g, v);
    if induced_has_cycle(g, &keep) {
        return Err(GraphError::CycleReachesVertex(g.vertex_name(v).into()));
    }
    // The ancestor subgraph is a DAG; build path lists in memoized reverse
    // order. paths(w) = trivial + { p.e : e an in-edge u -> w, p in paths(u) }.
    let mut memo: Vec<Option<Vec<Path>>> = vec![None; g.vertex_count()];
    fn collect(g: &Graph, w: VertexId, memo: &mut Vec<Option<Vec<Path>>>) -> Vec<Path> {
        if let Some(p) = &memo[w.0] {
            return p.clone();
        }
        let mut acc = vec![Path::trivial(w)];
        for &e in g.in_edges(w) {
            let u = g.edge(e).source;
            for p in collect(g, u, memo) {
                let mut edges = p.edges;
                edges.push(e);
                acc.push(Path {
                    source: p.source,
                    range: w,
                    edges,
                });
            }
        }
        memo[w.0] = Some(acc.clone());
        acc
    }
    Ok(collect(g, v, &mut memo))
}

/// The multiset of lengths of all paths with range `v`, ascending.
///
/// Cheaper than materializing `paths_into` when only lengths matter.
pub fn path_lengths_into(g: &Graph, v: VertexId) -> Result<Vec<usize>, GraphError> {
    let keep = ancestors(g, v);
    if induced_has_cycle(g, &keep) {
        return Err(GraphError::CycleReachesVertex(g.vertex_name(v).into()));
    }
    let mut memo: Vec<Option<Vec<usize>>> = vec![None; g.vertex_count()];
    fn lengths(g: &Graph, w: VertexId, memo: &mut Vec<Option<Vec<usize>>>) -> Vec<usize> {
        if let Some(l) = &memo[w.0] {
            return l.clone();
        }
        let mut acc = vec![0usize];
        for &e in g.in_edges(w) {
            let u = g.edge(e).source;
            for l in lengths(g, u, memo) {
                acc.push(l + 1);
            }
        }
        acc.sort_unstable();
        memo[w.0] = Some(acc.clone());
        acc
    }
    Ok(lengths(g, v, &mut memo))
}

/// All simple cycles (closed paths with pairwise distinct vertices), each
/// reported exactly once, based at its smallest vertex. Loops are length-1
/// cycles; parallel edges give distinct cycles.
pub fn simple_cycles(g: &Graph) -> Vec<Path> {
    let n = g.vertex_count();
    let mut found = Vec::new();
    for start in 0..n {
        // Search closed walks start -> start whose interior vertices are all
        // > start and distinct, so each cycle is found once, at its minimum.
        let mut on_path = vec![false; n];
        let mut edge_stack: Vec<EdgeId> = Vec::new();
        fn dfs(
            g: &Graph,
            start: usize,
            at: usize,
            on_path: &mut Vec<bool>,
            edge_stack: &mut Vec<EdgeId>,
            found: &mut Vec<Path>,
        ) {
            on_path[at] = true;
            for &e in g.out_edges(VertexId(at)) {
                let w = g.edge(e).range.0;
                if w == start {
                    edge_stack.push(e);
                    found.push(Path {
                        source: VertexId(start),
                        range: VertexId(start),
                        edges: edge_stack.clone(),
                    });
                    edge_stack.pop();
                } else if w > start && !on_path[w] {
                    edge_stack.push(e);
                    dfs(g, start, w, on_path, edge_stack, found);
                    edge_stack.pop();
                }
            }
            on_path[at] = false;
        }
        dfs(g, start, start, &mut on_path, &mut edge_stack, &mut found);
    }
    found
}

/// Default vertex cap for the brute-force subset enumeration.
pub const HEREDITARY_ENUM_CAP: usize = 20;

/// All hereditary and saturated vertex subsets, by brute force over all
/// 2^n subsets, in ascending bitmask order (so the empty set comes first and
/// the full set last). See `hereditary_saturated_sets_with_cap` for the cap.
pub fn hereditary_saturated_sets(g: &Graph) -> Result<Vec<VertexSet>, GraphError> {
    hereditary_saturated_sets_with_cap(g, HEREDITARY_ENUM_CAP)
}

pub fn hereditary_saturated_sets_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<Vec<VertexSet>, GraphError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::TooManyVertices { count: n, cap });
    }
    let mut result = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if is_hereditary_mask(g, mask) && is_saturated_mask(g, mask) {
            result.push(VertexSet::from_iter(
                (0..n).filter(|i| mask >> i & 1 == 1).map(VertexId),
            ));
        }
    }
    Ok(result)
}

fn is_hereditary_mask(g: &Graph, mask: u64) -> bool {
    // Closure under single edges implies closure under reachability.
    g.edges()
        .all(|(_, e)| mask >> e.source.0 & 1 == 0 || mask >> e.range.0 & 1 == 1)
}

fn is_saturated_mask(g: &Graph, mask: u64) -> bool {
    g.vertices().all(|v| {
        g.is_sink(v)
            || mask >> v.0 & 1 == 1
            || g.out_edges(v)
                .iter()
                .any(|&e| mask >> g.edge(e).range.0 & 1 == 0)
    })
}

/// True when `h` is closed under edges (hereditary).
pub fn is_hereditary(g: &Graph, h: &VertexSet) -> bool {
    is_hereditary_mask(g, set_mask(h))
}

/// True when `h` contains every non-sink all of whose edge ranges lie in `h`.
pub fn is_saturated(g: &Graph, h: &VertexSet) -> bool {
    is_saturated_mask(g, set_mask(h))
}

fn set_mask(h: &VertexSet) -> u64 {
    let mut m = 0u64;
    for v in h.iter() {
        assert!(v.0 < 64);
        m |= 1 << v.0;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Graph {
        parse_graph(text).expect("fixture parses")
    }

    #[test]
    fn parses_vertices_edges_and_comments() {
        let g = parse("# two vertices\nvertex u\nvertex v # inline\n\nedge e u v\n");
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        let e = g.edge(EdgeId(0));
        assert_eq!(g.vertex_name(e.source), "u");
        assert_eq!(g.vertex_name(e.range), "v");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_graph("vertex u\nvertex u\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::DuplicateVertex("u".into()));

        let err = parse_graph("vertex u\nedge e u w\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownVertex("w".into()));

        let err = parse_graph("node u\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownDirective("node".into()));

        let err = parse_graph("vertex u\nedge e u\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::BadArity {
                directive: "edge",
                expected: 3,
                got: 2
            }
        );

        let err = parse_graph("vertex u\nedge e u u\nedge e u u\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateEdge("e".into()));
    }

    #[test]
    fn sinks_are_vertices_without_outgoing_edges() {
        let g = parse("vertex a\nvertex b\nedge e a b\n");
        let s = sinks(&g);
        assert_eq!(s.len(), 1);
        assert!(s.contains(VertexId(1)));

        // A loop makes its vertex a non-sink.
        let g = parse("vertex a\nedge l a a\n");
        assert!(sinks(&g).is_empty());
    }

    #[test]
    fn diamond_path_lengths() {
        let g = parse(
            "vertex a\nvertex b\nvertex c\nvertex d\n\
             edge ab a b\nedge ac a c\nedge bd b d\nedge cd c d\n",
        );
        let d = g.vertex_by_name("d").unwrap();
        assert_eq!(path_lengths_into(&g, d).unwrap(), vec![0, 1, 1, 2, 2]);
        let paths = paths_into(&g, d).unwrap();
        assert_eq!(paths.len(), 5);
        let mut lens: Vec<usize> = paths.iter().map(Path::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![0, 1, 1, 2, 2]);
        // Every reported path really ends at d and is composable.
        for p in &paths {
            assert_eq!(p.range, d);
            let mut at = p.source;
            for &e in &p.edges {
                assert_eq!(g.edge(e).source, at);
                at = g.edge(e).range;
            }
            assert_eq!(at, d);
        }
    }

    #[test]
    fn paths_into_rejects_cycles_that_reach_the_vertex() {
        let g = parse("vertex u\nvertex v\nedge l u u\nedge e u v\n");
        let v = g.vertex_by_name("v").unwrap();
        assert_eq!(
            paths_into(&g, v).unwrap_err(),
            GraphError::CycleReachesVertex("v".into())
        );
        // A cycle elsewhere is fine when it cannot reach the vertex.
        let g = parse("vertex u\nvertex v\nedge l u u\nedge e v u\n");
        let v = g.vertex_by_name("v").unwrap();
        assert_eq!(path_lengths_into(&g, v).unwrap(), vec![0]);
    }

    #[test]
    fn simple_cycles_up_to_rotation() {
        // Loop plus 2-cycle through the same vertex.
        let g = parse("vertex u\nvertex v\nedge l u u\nedge a u v\nedge b v u\n");
        let cycles = simple_cycles(&g);
        assert_eq!(cycles.len(), 2);
        let mut lens: Vec<usize> = cycles.iter().map(Path::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 2]);
        // Both cycles are based at u, the smaller vertex.
        assert!(cycles.iter().all(|c| c.source == VertexId(0)));

        // Two loops at one vertex are two distinct cycles.
        let g = parse("vertex w\nedge l1 w w\nedge l2 w w\n");
        assert_eq!(simple_cycles(&g).len(), 2);

        // Triangle with all six edges: three 2-cycles and two 3-cycles.
        let g = parse(
            "vertex a\nvertex b\nvertex c\n\
             edge ab a b\nedge ba b a\nedge bc b c\nedge cb c b\nedge ac a c\nedge ca c a\n",
        );
        let cycles = simple_cycles(&g);
        let mut lens: Vec<usize> = cycles.iter().map(Path::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn hereditary_saturated_enumeration() {
        // Loop at u, edge u -> v, loop at v: the only proper nonempty set is {v}.
        let g = parse("vertex u\nvertex v\nedge lu u u\nedge uv u v\nedge lv v v\n");
        let sets = hereditary_saturated_sets(&g).unwrap();
        assert_eq!(
            sets,
            vec![
                VertexSet::new(),
                VertexSet::from_iter([VertexId(1)]),
                VertexSet::from_iter([VertexId(0), VertexId(1)]),
            ]
        );

        // Loop at u with u <-> v: only the trivial sets.
        let g = parse("vertex u\nvertex v\nedge lu u u\nedge uv u v\nedge vu v u\n");
        let sets = hereditary_saturated_sets(&g).unwrap();
        assert_eq!(sets.len(), 2);
        assert!(sets[0].is_empty());
        assert_eq!(sets[1].len(), 2);
    }

    #[test]
    fn hereditary_enumeration_cap() {
        let mut g = Graph::new();
        for i in 0..21 {
            let mut name = alloc::string::String::from("v");
            name.push_str(&alloc::format!("{i}"));
            g.add_vertex(&name).unwrap();
        }
        assert_eq!(
            hereditary_saturated_sets(&g).unwrap_err(),
            GraphError::TooManyVertices { count: 21, cap: 20 }
        );
        assert!(hereditary_saturated_sets_with_cap(&g, 21).is_ok());
    }

    #[test]
    fn saturation_ignores_sinks_and_uses_all_ranges() {
        // a -> b, a -> c: {b} and {c} qualify (a keeps a range outside), but
        // {b, c} would force a in, so it is not saturated.
        let g = parse("vertex a\nvertex b\nvertex c\nedge ab a b\nedge ac a c\n");
        let sets = hereditary_saturated_sets(&g).unwrap();
        let names: Vec<Vec<&str>> = sets
            .iter()
            .map(|s| s.iter().map(|v| g.vertex_name(v)).collect())
            .collect();
        assert_eq!(
            names,
            vec![
                Vec::<&str>::new(),
                vec!["b"],
                vec!["c"],
                vec!["a", "b", "c"]
            ]
        );
    }

    #[test]
    fn relabeling_permutes_declaration_order() {
        let g = parse("vertex a\nvertex b\nedge e a b\n");
        let h = g.relabeled(&[1, 0]);
        assert_eq!(h.vertex_name(VertexId(0)), "b");
        assert_eq!(h.vertex_name(VertexId(1)), "a");
        let e = h.edge(EdgeId(0));
        assert_eq!(h.vertex_name(e.source), "a");
        assert_eq!(h.vertex_name(e.range), "b");
    }
}
