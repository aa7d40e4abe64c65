//! Simple undirected graphs on `1..=n` and the graph-theoretic predicates
//! and constructions built on them.

mod chordal;
mod cliques;
mod construct;
pub mod enumerate;
mod graph6;
mod metric;

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub use chordal::{find_induced_cycle, is_chordal, is_perfect_elimination_ordering, perfect_elimination_ordering};
pub use cliques::{clique_facets, find_claw, free_vertices, independence_triangle, Claw, FacetComplex};
pub use construct::{cone, glue_at_free_vertices};
pub use graph6::{parse_graph6, to_graph6};
pub use metric::{
    components, distances, is_narrow, is_narrow_all_geodesics, narrowness_violation, strict_narrowness_violation,
    DistanceTable, NarrownessViolation,
};

/// A simple undirected graph on the vertices `1..=n`.
///
/// Construction goes through [`Graph::new`] or the parsers, which reject
/// loops, duplicate edges and out-of-range endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (n + 1) x (n + 1), row/column 0 unused
    adj: Vec<bool>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (idx, (u, v)) in edges.into_iter().enumerate() {
            g.try_add_edge(u, v).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(idx + 1, message),
                other => other,
            })?;
        }
        Ok(g)
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![false; (n + 1) * (n + 1)] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                g.insert(i, j);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.insert(i, i + 1);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.insert(1, n);
        }
        g
    }

    /// `K_{1,k}` with center 1.
    pub fn star(k: usize) -> Self {
        let mut g = Graph::empty(k + 1);
        for v in 2..=k + 1 {
            g.insert(1, v);
        }
        g
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::parse(0, format!("loop edge at vertex {u}")));
        }
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::parse(0, format!("endpoint {w} out of range 1..={}", self.n)));
            }
        }
        if self.has_edge(u, v) {
            return Err(Error::parse(0, format!("duplicate edge {{{},{}}}", u.min(v), u.max(v))));
        }
        self.insert(u, v);
        Ok(())
    }

    // caller guarantees a fresh, in-range, non-loop edge
    fn insert(&mut self, u: usize, v: usize) {
        let (a, b) = (u.min(v), u.max(v));
        let pos = self.edges.partition_point(|&e| e < (a, b));
        self.edges.insert(pos, (a, b));
        let s = self.n + 1;
        self.adj[a * s + b] = true;
        self.adj[b * s + a] = true;
    }

    /// Returns a copy with the extra edge `{u,v}`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Domain(format!("loop edge at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.insert(u, v);
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u <= self.n && v <= self.n && self.adj[u * (self.n + 1) + v]
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&w| self.has_edge(v, w))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(k, &a)| vs[k + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// The graph with vertex `v` renamed to `lab.position(v)`.
    pub fn relabel(&self, lab: &Labeling) -> Graph {
        assert_eq!(lab.len(), self.n, "labeling size must match the vertex count");
        let mut g = Graph::empty(self.n);
        for &(u, v) in &self.edges {
            g.insert(lab.position(u), lab.position(v));
        }
        g
    }

    /// Subgraph induced on `keep` (sorted), relabeled `1..=keep.len()` in order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.insert(a + 1, b + 1);
                }
            }
        }
        g
    }

    /// Parses edge-list or graph6 text; the format is detected from the
    /// first significant line.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut significant = text.lines().map(|l| strip_comment(l).trim()).filter(|l| !l.is_empty());
        let first = significant.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let is_token = |l: &str| l.bytes().all(|b| (63..=126).contains(&b));
        // graph6 files hold one token per line; the first graph is read
        let looks_graph6 = first.starts_with(">>graph6<<") || (is_token(first) && significant.all(is_token));
        if looks_graph6 {
            parse_graph6(first)
        } else {
            parse_edge_list(text)
        }
    }

    /// Edge-list serialization: `n` on the first line, then one `i j` per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if !self.has_edge(i, j) {
                    g.insert(i, j);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

/// Parses the edge-list format. Endpoints may be given in either order.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(k, l)| (k + 1, strip_comment(l).trim())).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(hline, format!("malformed header {header:?}: expected the vertex count")))?;
    if n == 0 {
        return Err(Error::parse(hline, "vertex count must be positive"));
    }
    let mut g = Graph::empty(n);
    for (lineno, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(lineno, format!("expected \"i j\", found {line:?}")));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&fields) {
            *slot = tok.parse().map_err(|_| Error::parse(lineno, format!("invalid vertex {tok:?}")))?;
        }
        let [u, v] = ends;
        g.try_add_edge(u, v).map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(lineno, message),
            other => other,
        })?;
    }
    Ok(g)
}

/// A bijection from vertices `1..=n` to positions `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    // pos[v - 1] = position of vertex v
    pos: Vec<usize>,
}

impl Labeling {
    pub fn new(pos: Vec<usize>) -> Result<Self> {
        let mut sorted = pos.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(k, &p)| p != k + 1) {
            return Err(Error::InvalidLabeling(format!("{pos:?} is not a permutation of 1..={}", pos.len())));
        }
        Ok(Labeling { pos })
    }

    pub fn identity(n: usize) -> Self {
        Labeling { pos: (1..=n).collect() }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut pos: Vec<usize> = (1..=n).collect();
        pos.shuffle(rng);
        Labeling { pos }
    }

    /// Parses `"3,1,2"`: the i-th entry is the position of vertex i.
    pub fn parse(text: &str) -> Result<Self> {
        let pos = text
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidLabeling(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Labeling::new(pos)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty()
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v - 1]
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    /// The vertex placed at each position, i.e. the inverse permutation.
    pub fn order(&self) -> Vec<usize> {
        let mut inv = vec![0; self.pos.len()];
        for (v, &p) in self.pos.iter().enumerate() {
            inv[p - 1] = v + 1;
        }
        inv
    }

    /// Labeling that puts `order[0]` at position 1, `order[1]` at 2, ...
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let mut pos = vec![0; order.len()];
        for (p, &v) in order.iter().enumerate() {
            if v == 0 || v > order.len() || pos[v - 1] != 0 {
                return Err(Error::InvalidLabeling(format!("{order:?} is not an ordering of the vertices")));
            }
            pos[v - 1] = p + 1;
        }
        Ok(Labeling { pos })
    }

    /// Steps to the next labeling in lexicographic order; false after the last.
    pub fn advance(&mut self) -> bool {
        next_permutation(&mut self.pos)
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labeling{:?}", self.pos)
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pos.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for Labeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pos.serialize(s)
    }
}

pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
