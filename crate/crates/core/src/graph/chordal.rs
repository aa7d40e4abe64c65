use super::Graph;

/// Maximum cardinality search, returning vertices in visit order.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut visited = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        // ties broken toward the smallest label
        let v = (1..=n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// True iff, for every vertex, its neighbors later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut index = vec![usize::MAX; n + 1];
    for (k, &v) in order.iter().enumerate() {
        if v == 0 || v > n || index[v] != usize::MAX {
            return false;
        }
        index[v] = k;
    }
    order.iter().enumerate().all(|(k, &v)| {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| index[w] > k).collect();
        g.is_clique(&later)
    })
}

/// A perfect elimination ordering if `g` is chordal.
///
/// The reverse of a maximum cardinality search order is a perfect elimination
/// ordering exactly when the graph is chordal, so verifying it decides
/// chordality.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// An induced cycle of length at least 4, listed in cycle order, if one exists.
///
/// For every vertex `v` and nonadjacent neighbors `a < b`, a shortest `a`-`b`
/// path avoiding the rest of `N[v]` closes an induced cycle through `v`.
pub fn find_induced_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for v in 1..=n {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (k, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[k + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let blocked = |w: usize| w == v || (w != a && w != b && g.has_edge(v, w));
                if let Some(path) = shortest_path_avoiding(g, a, b, blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    if best.as_ref().is_none_or(|c| cycle.len() < c.len()) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

fn shortest_path_avoiding(g: &Graph, from: usize, to: usize, blocked: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![0usize; n + 1];
    let mut seen = vec![false; n + 1];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from] = true;
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u) {
            if !seen[w] && !blocked(w) {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
        let k = cycle.len();
        (0..k).all(|a| {
            (a + 1..k).all(|b| {
                let consecutive = b == a + 1 || (a == 0 && b == k - 1);
                g.has_edge(cycle[a], cycle[b]) == consecutive
            })
        })
    }

    #[test]
    fn small_cases() {
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(is_chordal(&Graph::complete(4)));
        let tri_pendant = Graph::new(4, [(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert!(is_chordal(&tri_pendant));
        assert!(is_chordal(&Graph::empty(3)));
    }

    #[test]
    fn witness_rechecks() {
        let g = Graph::new(6, [(1, 2), (2, 3), (1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6)]).unwrap();
        let peo = perfect_elimination_ordering(&g).unwrap();
        assert!(is_perfect_elimination_ordering(&g, &peo));
        assert!(!is_perfect_elimination_ordering(&g, &[1, 2, 3]));
    }

    #[test]
    fn induced_cycle_found_exactly_when_not_chordal() {
        let c6 = Graph::cycle(6);
        let cyc = find_induced_cycle(&c6).unwrap();
        assert_eq!(cyc.len(), 6);
        assert!(is_induced_cycle(&c6, &cyc));

        // C5 with one chord: the 4-cycle survives
        let g = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)]).unwrap();
        let cyc = find_induced_cycle(&g).unwrap();
        assert_eq!(cyc.len(), 4);
        assert!(is_induced_cycle(&g, &cyc));

        assert!(find_induced_cycle(&Graph::complete(5)).is_none());
    }
}
