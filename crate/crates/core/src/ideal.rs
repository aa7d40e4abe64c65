//! Binomial edge ideals, admissible paths and their Gröbner basis.
//!
//! Variables are indexed by labeled position: `x_i` is variable `i - 1` and
//! `y_i` is variable `n + i - 1`, and the order is lex with
//! `x_1 > ... > x_n > y_1 > ... > y_n`. The generator of an edge with
//! positions `i < j` is `f_ij = x_i*y_j - x_j*y_i`, whose leading term is
//! `x_i*y_j`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Labeling};
use crate::poly::{self, Field, Monomial, PolyRing, Polynomial, PowerSeries};

/// `J_G` for a graph under a labeling.
#[derive(Debug, Clone)]
pub struct BinomialEdgeIdeal<E> {
    pub graph: Graph,
    pub labeling: Labeling,
    /// One `f_ij` per edge, sorted by `(i, j)` in labeled positions.
    pub generators: Vec<Polynomial<E>>,
}

fn check_ring<F: Field>(ring: &PolyRing<F>, g: &Graph) {
    assert_eq!(ring.nvars(), 2 * g.n(), "ring must have 2n variables for a graph on n vertices");
}

/// `f_ij = x_i*y_j - x_j*y_i` in a ring with `2n` variables.
pub fn edge_binomial<F: Field>(ring: &PolyRing<F>, i: usize, j: usize) -> Polynomial<F::Elem> {
    let n = ring.nvars() / 2;
    let f = ring.field();
    ring.from_terms([
        (Monomial::product_of(2 * n, [i - 1, n + j - 1]), f.one()),
        (Monomial::product_of(2 * n, [j - 1, n + i - 1]), f.from_i64(-1)),
    ])
}

pub fn build_ideal<F: Field>(ring: &PolyRing<F>, g: &Graph, lab: &Labeling) -> BinomialEdgeIdeal<F::Elem> {
    check_ring(ring, g);
    let h = g.relabel(lab);
    let generators = h.edges().iter().map(|&(i, j)| edge_binomial(ring, i, j)).collect();
    BinomialEdgeIdeal { graph: g.clone(), labeling: lab.clone(), generators }
}

/// An admissible path `i = i_0, ..., i_r = j` (labeled positions, `i < j`)
/// and its monomial `u = prod_{i_k > j} x_{i_k} * prod_{i_k < i} y_{i_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissiblePath {
    pub vertices: Vec<usize>,
    #[serde(skip)]
    pub monomial: Monomial,
}

impl AdmissiblePath {
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("paths are nonempty")
    }

    fn from_vertices(n: usize, vertices: Vec<usize>) -> Self {
        let (i, j) = (vertices[0], *vertices.last().expect("paths are nonempty"));
        let interior = &vertices[1..vertices.len() - 1];
        let vars = interior.iter().map(|&v| {
            if v > j {
                v - 1
            } else {
                debug_assert!(v < i);
                n + v - 1
            }
        });
        let monomial = Monomial::product_of(2 * n, vars);
        AdmissiblePath { vertices, monomial }
    }
}

/// Checks conditions (i)-(iii) literally: distinct vertices, interior outside
/// `[i, j]`, and no proper subsequence of the interior (in path order) that
/// still forms a path from `i` to `j`. `h` is the labeled graph.
pub fn is_admissible(h: &Graph, path: &[usize]) -> bool {
    let Some((&i, &j)) = path.first().zip(path.last()) else { return false };
    if path.len() < 2 || i >= j {
        return false;
    }
    if !path.windows(2).all(|w| h.has_edge(w[0], w[1])) {
        return false;
    }
    let mut sorted = path.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != path.len() {
        return false;
    }
    let interior = &path[1..path.len() - 1];
    if interior.iter().any(|&v| i < v && v < j) {
        return false;
    }
    let r = interior.len();
    (0u64..(1 << r) - 1).all(|mask| {
        let mut seq = vec![i];
        seq.extend((0..r).filter(|&k| mask >> k & 1 == 1).map(|k| interior[k]));
        seq.push(j);
        !seq.windows(2).all(|w| h.has_edge(w[0], w[1]))
    })
}

fn admissible_in_labeled(h: &Graph, i: usize, j: usize) -> Vec<AdmissiblePath> {
    fn extend(h: &Graph, i: usize, j: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().expect("starts at i");
        for w in h.neighbors(last) {
            if on_path[w] {
                continue;
            }
            // a chord back to any earlier vertex skips part of the interior
            if path[..path.len() - 1].iter().any(|&u| h.has_edge(u, w)) {
                continue;
            }
            if w == j {
                path.push(w);
                out.push(path.clone());
                path.pop();
            } else if w < i || w > j {
                path.push(w);
                on_path[w] = true;
                extend(h, i, j, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }
    let mut raw = Vec::new();
    let mut on_path = vec![false; h.n() + 1];
    on_path[i] = true;
    extend(h, i, j, &mut vec![i], &mut on_path, &mut raw);
    raw.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    raw.dedup();
    raw.into_iter()
        .map(|p| {
            debug_assert!(is_admissible(h, &p));
            AdmissiblePath::from_vertices(h.n(), p)
        })
        .collect()
}

/// All admissible paths between labeled positions `i < j`, sorted by length
/// then lexicographically.
pub fn admissible_paths(g: &Graph, lab: &Labeling, i: usize, j: usize) -> Result<Vec<AdmissiblePath>> {
    if !(1 <= i && i < j && j <= g.n()) {
        return Err(Error::Domain(format!("need 1 <= i < j <= {}, got ({i}, {j})", g.n())));
    }
    Ok(admissible_in_labeled(&g.relabel(lab), i, j))
}

/// `{ u_pi * f_ij : pi admissible from i to j, i < j }`, monic and sorted
/// descending by leading monomial.
pub fn combinatorial_gb<F: Field>(ring: &PolyRing<F>, g: &Graph, lab: &Labeling) -> Vec<Polynomial<F::Elem>> {
    check_ring(ring, g);
    let h = g.relabel(lab);
    let one = ring.field().one();
    let mut out = Vec::new();
    for i in 1..=h.n() {
        for j in i + 1..=h.n() {
            let paths = admissible_in_labeled(&h, i, j);
            if paths.is_empty() {
                continue;
            }
            let f = edge_binomial(ring, i, j);
            for p in paths {
                out.push(ring.mul_term(&f, &one, &p.monomial));
            }
        }
    }
    out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    out.dedup();
    out
}

/// Whether the combinatorial Gröbner basis under `lab` is quadratic, i.e.
/// every admissible path is a single edge.
pub fn has_quadratic_gb(g: &Graph, lab: &Labeling) -> bool {
    let ring = PolyRing::for_vertices(poly::Rationals, g.n());
    poly::is_quadratic_basis(&combinatorial_gb(&ring, g, lab))
}

/// Hilbert series of `S / J_G` through degree `truncation`, read off the
/// leading monomials of the reduced Gröbner basis from Buchberger's
/// algorithm.
pub fn quotient_hilbert_series<F: Field>(ring: &PolyRing<F>, g: &Graph, truncation: usize) -> Result<PowerSeries> {
    check_ring(ring, g);
    let ideal = build_ideal(ring, g, &Labeling::identity(g.n()));
    let gb = poly::buchberger(ring, &ideal.generators)?;
    let leading: Vec<Monomial> = gb.iter().filter_map(|p| p.leading_monomial().cloned()).collect();
    Ok(poly::hilbert_series(&leading, ring.nvars(), truncation))
}

/// Series comparison for `A = S/J_G` and `B = S/J_{G+e}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeAddition {
    pub edge: (usize, usize),
    pub truncation: usize,
    pub hilbert_a: PowerSeries,
    pub hilbert_b: PowerSeries,
    /// `H_B = (1 - t^2) H_A` through the truncation order. A true value only
    /// certifies the identity up to that degree; false is exact.
    pub nonzerodivisor: bool,
    /// `1/H_A = 1/H_B - t^2` through the truncation order.
    pub strongly_free: bool,
}

pub fn edge_addition<F: Field>(
    ring: &PolyRing<F>,
    g: &Graph,
    e: (usize, usize),
    truncation: usize,
) -> Result<EdgeAddition> {
    let bigger = g.with_edge(e.0, e.1)?;
    let hilbert_a = quotient_hilbert_series(ring, g, truncation)?;
    let hilbert_b = quotient_hilbert_series(ring, &bigger, truncation)?;
    let t2 = PowerSeries::monomial(2, truncation);
    let one_minus_t2 = PowerSeries::one(truncation).sub(&t2);
    let nonzerodivisor = hilbert_b == one_minus_t2.mul(&hilbert_a);
    let strongly_free = hilbert_a.inverse()? == hilbert_b.inverse()?.sub(&t2);
    Ok(EdgeAddition {
        edge: (e.0.min(e.1), e.0.max(e.1)),
        truncation,
        hilbert_a,
        hilbert_b,
        nonzerodivisor,
        strongly_free,
    })
}

/// Whether `f_e` behaves as a nonzerodivisor on `S/J_G` through degree `truncation`.
pub fn nonzerodivisor_check<F: Field>(
    ring: &PolyRing<F>,
    g: &Graph,
    e: (usize, usize),
    truncation: usize,
) -> Result<bool> {
    Ok(edge_addition(ring, g, e, truncation)?.nonzerodivisor)
}

/// Whether `f_e` satisfies the strongly-free series identity through degree `truncation`.
pub fn strongly_free_check<F: Field>(
    ring: &PolyRing<F>,
    g: &Graph,
    e: (usize, usize),
    truncation: usize,
) -> Result<bool> {
    Ok(edge_addition(ring, g, e, truncation)?.strongly_free)
}
