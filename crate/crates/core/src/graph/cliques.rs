use serde::Serialize;

use super::Graph;

/// The facets (maximal cliques) of the clique complex of a graph.
///
/// Each facet is sorted ascending and the list is sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetComplex {
    pub facets: Vec<Vec<usize>>,
}

impl FacetComplex {
    /// Number of facets containing `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.facets.iter().filter(|f| f.binary_search(&v).is_ok()).count()
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }
}

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting.
pub fn clique_facets(g: &Graph) -> FacetComplex {
    let mut facets = Vec::new();
    let p: Vec<usize> = g.vertices().collect();
    bron_kerbosch(g, &mut Vec::new(), p, Vec::new(), &mut facets);
    for f in &mut facets {
        f.sort_unstable();
    }
    facets.sort();
    FacetComplex { facets }
}

fn bron_kerbosch(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&w| g.has_edge(u, w)).count())
        .expect("p is nonempty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Vertices lying in exactly one facet of the clique complex.
pub fn free_vertices(g: &Graph) -> Vec<usize> {
    let facets = clique_facets(g);
    g.vertices().filter(|&v| facets.multiplicity(v) == 1).collect()
}

/// An induced `K_{1,3}`: `center` adjacent to three pairwise nonadjacent leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// The lexicographically first claw (by center, then leaves), if any.
pub fn find_claw(g: &Graph) -> Option<Claw> {
    for center in g.vertices() {
        let nbrs: Vec<usize> = g.neighbors(center).collect();
        if let Some(leaves) = independent_triple(g, &nbrs) {
            return Some(Claw { center, leaves });
        }
    }
    None
}

/// Three pairwise nonadjacent vertices (a triangle of `Ind(G)`), if any.
pub fn independence_triangle(g: &Graph) -> Option<[usize; 3]> {
    let all: Vec<usize> = g.vertices().collect();
    independent_triple(g, &all)
}

fn independent_triple(g: &Graph, among: &[usize]) -> Option<[usize; 3]> {
    for (i, &a) in among.iter().enumerate() {
        for (j, &b) in among.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                continue;
            }
            for &c in &among[j + 1..] {
                if !g.has_edge(a, c) && !g.has_edge(b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}
