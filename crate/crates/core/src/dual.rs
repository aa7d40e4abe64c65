//! The quadratic dual of `S/J_G`.
//!
//! Relations live in the degree-2 part of the free algebra on the letters
//! `x_1..x_n, y_1..y_n` (letter `a` is variable index `a`, as in
//! [`crate::poly`]). An element `sum c_ab * a*b` pairs with a word `a*b` by
//! reading off `c_ab`; a commutative quadric pairs through its symmetrized
//! lift.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg;
use crate::poly::{var_name, Polynomial, Rationals};

/// A degree-2 element of the free algebra, with terms kept in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcRelation {
    nletters: usize,
    terms: Vec<((usize, usize), BigRational)>,
}

impl NcRelation {
    /// Builds a relation, merging repeated letter pairs and dropping zeros.
    pub fn new(nletters: usize, terms: impl IntoIterator<Item = ((usize, usize), BigRational)>) -> Self {
        let mut merged: Vec<((usize, usize), BigRational)> = Vec::new();
        for (pair, c) in terms {
            assert!(pair.0 < nletters && pair.1 < nletters, "letter out of range");
            match merged.iter_mut().find(|(p, _)| *p == pair) {
                Some((_, acc)) => *acc += c,
                None => merged.push((pair, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        NcRelation { nletters, terms: merged }
    }

    fn unit(nletters: usize, pairs: &[(usize, usize)]) -> Self {
        NcRelation::new(nletters, pairs.iter().map(|&p| (p, BigRational::one())))
    }

    pub fn nletters(&self) -> usize {
        self.nletters
    }

    pub fn terms(&self) -> &[((usize, usize), BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: usize, b: usize) -> BigRational {
        self.terms.iter().find(|(p, _)| *p == (a, b)).map_or_else(BigRational::zero, |(_, c)| c.clone())
    }

    /// Coordinates in the word basis `a*b`, indexed `a * nletters + b`.
    pub fn to_vector(&self) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.nletters * self.nletters];
        for ((a, b), c) in &self.terms {
            v[a * self.nletters + b] = c.clone();
        }
        v
    }

    /// `x1*y2 + y2*x1 + ...`; letter order within a word is significant.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !c.abs().is_one() {
                out.push_str(&format!("{}*", c.abs()));
            }
            out.push_str(&format!("{}*{}", var_name(*a, self.nletters), var_name(*b, self.nletters)));
        }
        out
    }
}

impl Serialize for NcRelation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

/// The closed-form generators of the dual, in four families: squares;
/// anticommutators of two x's or two y's; `x_i*y_j + y_j*x_i` for every
/// ordered non-edge `(i, j)` including `i = j`; and
/// `x_i*y_j + y_j*x_i + x_j*y_i + y_i*x_j` for every edge.
pub fn dual_generators(g: &Graph) -> Vec<NcRelation> {
    let n = g.n();
    let m = 2 * n;
    let x = |i: usize| i - 1;
    let y = |i: usize| n + i - 1;
    let mut out = Vec::new();
    for letter in (1..=n).map(x).chain((1..=n).map(y)) {
        out.push(NcRelation::unit(m, &[(letter, letter)]));
    }
    for offset in [0, n] {
        for i in 1..=n {
            for j in 1..i {
                let (a, b) = (offset + j - 1, offset + i - 1);
                out.push(NcRelation::unit(m, &[(a, b), (b, a)]));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if !g.has_edge(i, j) {
                out.push(NcRelation::unit(m, &[(x(i), y(j)), (y(j), x(i))]));
            }
        }
    }
    for &(i, j) in g.edges() {
        out.push(NcRelation::unit(m, &[(x(i), y(j)), (y(j), x(i)), (x(j), y(i)), (y(i), x(j))]));
    }
    out
}

/// `C(2n+1, 2) - |E|`, the number of closed-form generators.
pub fn dual_relation_count(g: &Graph) -> usize {
    let m = 2 * g.n();
    (m + 1) * m / 2 - g.edge_count()
}

/// Index of the commutative monomial `Z_j * Z_k`, `j <= k`, in lex order of pairs.
fn pair_index(m: usize, j: usize, k: usize) -> usize {
    debug_assert!(j <= k);
    j * m - j * (j + 1) / 2 + k
}

/// Dual generators from the general construction: solve
/// `sum_{j<=k} b_jk Z_jk = 0` for the coefficient rows `b` of the input
/// quadrics, and emit `sum c_jk [Y_j, Y_k]` per kernel vector, where
/// `[Y_j, Y_k] = Y_j*Y_k + Y_k*Y_j` and `[Y_j, Y_j] = Y_j^2`.
pub fn dual_generators_general(quadrics: &[Polynomial<BigRational>], nvars: usize) -> Result<Vec<NcRelation>> {
    let m = nvars;
    let ncols = m * (m + 1) / 2;
    let mut rows = Vec::with_capacity(quadrics.len());
    for q in quadrics {
        if q.nvars() != m {
            return Err(Error::Domain(format!("polynomial has {} variables, expected {m}", q.nvars())));
        }
        if !q.is_homogeneous_of_degree(2) {
            return Err(Error::Domain("input must be homogeneous quadrics".into()));
        }
        let mut row = vec![BigRational::zero(); ncols];
        for (mono, c) in q.terms() {
            let vars: Vec<usize> =
                mono.exponents().iter().enumerate().flat_map(|(v, &e)| std::iter::repeat_n(v, e as usize)).collect();
            row[pair_index(m, vars[0], vars[1])] = c.clone();
        }
        rows.push(row);
    }
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|j| (j..m).map(move |k| (j, k))).collect();
    let kernel = linalg::kernel_basis(&Rationals, &rows, ncols);
    Ok(kernel
        .into_iter()
        .map(|c| {
            let terms = pairs.iter().zip(c).flat_map(|(&(j, k), cjk)| {
                if j == k {
                    vec![((j, j), cjk)]
                } else {
                    vec![((j, k), cjk.clone()), ((k, j), cjk)]
                }
            });
            NcRelation::new(m, terms)
        })
        .filter(|r| !r.is_zero())
        .collect())
}

/// Outcome of pairing a relation list against the quadratic part of `J_G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orthogonality {
    pub all_orthogonal: bool,
    /// Rank of the relations.
    pub span_dim: usize,
    /// `(2n)^2 - dim I_2`, the dimension of the annihilator.
    pub annihilator_dim: usize,
    pub ideal_dim: usize,
}

impl Orthogonality {
    /// Orthogonal and spanning the full annihilator.
    pub fn complete(&self) -> bool {
        self.all_orthogonal && self.span_dim == self.annihilator_dim
    }
}

/// Degree-2 part of the ideal in the free algebra: all commutators
/// `a*b - b*a` plus the symmetrized lifts of the edge binomials.
pub fn quadratic_ideal_vectors(g: &Graph) -> Vec<Vec<BigRational>> {
    let n = g.n();
    let m = 2 * n;
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let mut v = vec![BigRational::zero(); m * m];
            v[a * m + b] = BigRational::one();
            v[b * m + a] = -BigRational::one();
            out.push(v);
        }
    }
    let half = BigRational::new(1.into(), 2.into());
    for &(i, j) in g.edges() {
        let (xi, xj, yi, yj) = (i - 1, j - 1, n + i - 1, n + j - 1);
        let mut v = vec![BigRational::zero(); m * m];
        v[xi * m + yj] = half.clone();
        v[yj * m + xi] = half.clone();
        v[xj * m + yi] = -half.clone();
        v[yi * m + xj] = -half.clone();
        out.push(v);
    }
    out
}

pub fn verify_orthogonality(g: &Graph, relations: &[NcRelation]) -> Orthogonality {
    let m = 2 * g.n();
    let ideal = quadratic_ideal_vectors(g);
    let rels: Vec<Vec<BigRational>> = relations.iter().map(NcRelation::to_vector).collect();
    let all_orthogonal =
        rels.iter().all(|r| ideal.iter().all(|w| r.iter().zip(w).map(|(a, b)| a * b).sum::<BigRational>().is_zero()));
    let ideal_dim = linalg::rank(&Rationals, &ideal, m * m);
    Orthogonality {
        all_orthogonal,
        span_dim: linalg::rank(&Rationals, &rels, m * m),
        annihilator_dim: m * m - ideal_dim,
        ideal_dim,
    }
}

/// Whether two relation lists span the same subspace.
pub fn same_span(a: &[NcRelation], b: &[NcRelation]) -> bool {
    let m = a.first().or(b.first()).map_or(0, |r| r.nletters);
    let va: Vec<_> = a.iter().map(NcRelation::to_vector).collect();
    let vb: Vec<_> = b.iter().map(NcRelation::to_vector).collect();
    linalg::same_span(&Rationals, &va, &vb, m * m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Labeling;
    use crate::ideal::build_ideal;
    use crate::poly::PolyRing;

    fn rendered(rels: &[NcRelation]) -> Vec<String> {
        rels.iter().map(NcRelation::render).collect()
    }

    #[test]
    fn pair_indexing_is_dense() {
        for m in 1..6 {
            let mut expected = 0;
            for j in 0..m {
                for k in j..m {
                    assert_eq!(pair_index(m, j, k), expected);
                    expected += 1;
                }
            }
        }
    }

    #[test]
    fn single_vertex() {
        let rels = dual_generators(&Graph::empty(1));
        assert_eq!(rendered(&rels), ["x1*x1", "y1*y1", "x1*y1 + y1*x1"]);
        let o = verify_orthogonality(&Graph::empty(1), &rels);
        assert_eq!((o.all_orthogonal, o.span_dim, o.annihilator_dim), (true, 3, 3));
    }

    #[test]
    fn single_edge() {
        let g = Graph::complete(2);
        let rels = dual_generators(&g);
        assert_eq!(rels.len(), 9);
        assert_eq!(rels.last().unwrap().render(), "x1*y2 + y2*x1 + x2*y1 + y1*x2");
        assert!(rels.last().unwrap().terms().iter().all(|(_, c)| c.is_one()));
        let o = verify_orthogonality(&g, &rels);
        assert_eq!((o.all_orthogonal, o.span_dim, o.ideal_dim), (true, 9, 7));
        assert_eq!(dual_relation_count(&g), 9);
    }

    #[test]
    fn corrupted_edge_relation_fails() {
        let g = Graph::complete(2);
        let mut rels = dual_generators(&g);
        let last = rels.pop().unwrap();
        let flipped =
            last.terms().iter().enumerate().map(|(k, (p, c))| (*p, if k == 2 { -c.clone() } else { c.clone() }));
        rels.push(NcRelation::new(4, flipped));
        assert!(!verify_orthogonality(&g, &rels).all_orthogonal);
    }

    #[test]
    fn general_construction_examples() {
        let all = dual_generators_general(&[], 4).unwrap();
        assert_eq!(all.len(), 10);
        assert!(same_span(&all, &dual_generators(&Graph::empty(2))));

        let g = Graph::complete(2);
        let ring = PolyRing::for_vertices(Rationals, 2);
        let ideal = build_ideal(&ring, &g, &Labeling::identity(2));
        let general = dual_generators_general(&ideal.generators, 4).unwrap();
        assert!(same_span(&general, &dual_generators(&g)));

        let full: Vec<_> = (0..4)
            .flat_map(|j| (j..4).map(move |k| (j, k)))
            .map(|(j, k)| ring.mul(&ring.var(j), &ring.var(k)))
            .collect();
        assert!(dual_generators_general(&full, 4).unwrap().is_empty());
    }

    #[test]
    fn general_construction_rejects_non_quadrics() {
        let ring = PolyRing::for_vertices(Rationals, 2);
        let cubic = ring.mul(&ring.var(0), &ring.mul(&ring.var(1), &ring.var(2)));
        assert!(matches!(dual_generators_general(&[cubic], 4), Err(Error::Domain(_))));
        assert!(matches!(dual_generators_general(&[ring.var(0)], 4), Err(Error::Domain(_))));
    }
}
