use super::{free_vertices, Graph};
use crate::error::{Error, Result};

/// `cone(v, G)`: adjoins the apex `n + 1`, adjacent to every vertex of `g`.
pub fn cone(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::empty(n + 1);
    for &(i, j) in g.edges() {
        out.insert(i, j);
    }
    for v in 1..=n {
        out.insert(v, n + 1);
    }
    out
}

/// Glues `g2` onto `g1` by identifying the free vertex `v2` of `g2` with the
/// free vertex `v1` of `g1`.
///
/// `g1` keeps its labels; the other vertices of `g2` become `n1 + 1, n1 + 2, ...`
/// in ascending order, and edges at `v2` are rerouted to `v1`.
pub fn glue_at_free_vertices(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    for (g, v, which) in [(g1, v1, "the first graph"), (g2, v2, "the second graph")] {
        if v == 0 || v > g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if !free_vertices(g).contains(&v) {
            return Err(Error::NotFree { vertex: v, which });
        }
    }
    let n1 = g1.n();
    let map = |w: usize| match w.cmp(&v2) {
        std::cmp::Ordering::Equal => v1,
        std::cmp::Ordering::Less => n1 + w,
        std::cmp::Ordering::Greater => n1 + w - 1,
    };
    let mut out = Graph::empty(n1 + g2.n() - 1);
    for &(i, j) in g1.edges() {
        out.insert(i, j);
    }
    for &(i, j) in g2.edges() {
        out.insert(map(i), map(j));
    }
    Ok(out)
}
