//! Enumeration of small graphs, labeled or up to isomorphism.

use std::collections::BTreeMap;

use super::Graph;

/// Number of labeled graphs on `n` vertices, `2^(n choose 2)`.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Graph whose edge set is the bitmask `mask` over the pairs
/// `(1,2), (1,3), ..., (1,n), (2,3), ...` (bit 0 is `(1,2)`).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if mask >> bit & 1 == 1 {
                g.insert(i, j);
            }
            bit += 1;
        }
    }
    g
}

/// All labeled graphs on `n` vertices in bitmask order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "labeled enumeration is limited to n <= 11");
    (0..labeled_count(n)).map(move |m| graph_from_mask(n, m))
}

/// Canonical key: the largest adjacency bitstring (pairs in row order, first
/// pair most significant) over all vertex orders that sort vertices by
/// degree. The candidate orders form an isomorphism-invariant family, so
/// isomorphic graphs get equal keys.
pub fn canonical_key(g: &Graph) -> u64 {
    canonical_form(g).0
}

/// Canonical key together with the vertex order that realizes it.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= 11, "canonical forms are limited to n <= 11");
    let mut by_degree: Vec<usize> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match cells.last_mut() {
            Some(cell) if g.degree(cell[0]) == g.degree(v) => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = (0u64, by_degree.clone());
    let mut first = true;
    let mut order = by_degree;
    loop {
        let key = key_for_order(g, &order);
        if first || key > best.0 {
            best = (key, order.clone());
            first = false;
        }
        // odometer over the per-cell permutations
        let mut offset = order.len();
        let mut advanced = false;
        for cell in cells.iter().rev() {
            offset -= cell.len();
            let slice = &mut order[offset..offset + cell.len()];
            if super::next_permutation(slice) {
                advanced = true;
                break;
            }
            slice.reverse();
        }
        if !advanced {
            break;
        }
    }
    best
}

fn key_for_order(g: &Graph, order: &[usize]) -> u64 {
    let mut key = 0u64;
    for p in 0..order.len() {
        for q in p + 1..order.len() {
            key = (key << 1) | g.has_edge(order[p], order[q]) as u64;
        }
    }
    key
}

/// The canonical representative: `g` relabeled along its canonical order.
pub fn canonical_representative(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    let lab = super::Labeling::from_order(&order).expect("canonical order is a permutation");
    g.relabel(&lab)
}

/// One representative per isomorphism class on exactly `n` vertices, sorted by
/// canonical key. Built by adding a vertex to every class on `n - 1` vertices.
pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    assert!((1..=10).contains(&n), "isomorphism classes are generated for 1 <= n <= 10");
    let mut classes = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for base in &classes {
            for nbhd in 0u64..1 << (m - 1) {
                let mut g = Graph::empty(m);
                for &(i, j) in base.edges() {
                    g.insert(i, j);
                }
                for v in 1..m {
                    if nbhd >> (v - 1) & 1 == 1 {
                        g.insert(v, m);
                    }
                }
                next.entry(canonical_key(&g)).or_insert_with(|| canonical_representative(&g));
            }
        }
        classes = next.into_values().collect();
    }
    classes
}
