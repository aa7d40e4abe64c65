use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;

/// All-pairs shortest-path lengths; `None` marks disconnected pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceTable {
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.dist[(u - 1) * self.n + (v - 1)]
    }

    /// Largest finite distance over all pairs.
    pub fn max_finite(&self) -> usize {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }
}

pub fn distances(g: &Graph) -> DistanceTable {
    let n = g.n();
    let mut dist = vec![None; n * n];
    for s in 1..=n {
        let row = &mut dist[(s - 1) * n..s * n];
        row[s - 1] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = row[u - 1].expect("queued vertices have a distance");
            for w in g.neighbors(u) {
                if row[w - 1].is_none() {
                    row[w - 1] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceTable { n, dist }
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n + 1];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 1..=n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut k = 0;
        while k < members.len() {
            let u = members[k];
            k += 1;
            for w in g.neighbors(u) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// A vertex at distance at least 2 from a diametral geodesic of its component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NarrownessViolation {
    pub vertex: usize,
    pub geodesic: Vec<usize>,
}

/// Narrowness, component by component: for every pair of vertices at
/// diametral distance, some geodesic between them has every vertex of the
/// component within distance 1. On failure the witness is the first
/// geodesic of the offending pair together with a vertex far from it.
pub fn narrowness_violation(g: &Graph) -> Option<NarrownessViolation> {
    violation(g, false)
}

/// The stricter reading: every diametral geodesic must be within distance 1
/// of every vertex. Agrees with [`narrowness_violation`] on chordal claw-free
/// graphs, but rejects cones over graphs with three independent vertices.
pub fn strict_narrowness_violation(g: &Graph) -> Option<NarrownessViolation> {
    violation(g, true)
}

pub fn is_narrow(g: &Graph) -> bool {
    narrowness_violation(g).is_none()
}

pub fn is_narrow_all_geodesics(g: &Graph) -> bool {
    strict_narrowness_violation(g).is_none()
}

fn violation(g: &Graph, every_geodesic: bool) -> Option<NarrownessViolation> {
    let dist = distances(g);
    for comp in components(g) {
        let diam = comp
            .iter()
            .flat_map(|&u| comp.iter().map(move |&v| (u, v)))
            .filter_map(|(u, v)| dist.get(u, v))
            .max()
            .unwrap_or(0);
        if diam < 2 {
            continue; // cliques are narrow
        }
        for (a, &u) in comp.iter().enumerate() {
            for &v in &comp[a + 1..] {
                if dist.get(u, v) != Some(diam) {
                    continue;
                }
                let mut first = None;
                let mut dominated = false;
                for_each_geodesic(g, &dist, u, v, &mut |path| {
                    if dominated || (every_geodesic && first.is_some()) {
                        return;
                    }
                    let far =
                        comp.iter().copied().find(|&w| path.iter().all(|&p| dist.get(w, p).is_some_and(|d| d > 1)));
                    match far {
                        None => dominated = !every_geodesic,
                        Some(w) if first.is_none() => {
                            first = Some(NarrownessViolation { vertex: w, geodesic: path.to_vec() })
                        }
                        Some(_) => {}
                    }
                });
                if !dominated && first.is_some() {
                    return first;
                }
            }
        }
    }
    None
}

fn for_each_geodesic(g: &Graph, dist: &DistanceTable, from: usize, to: usize, visit: &mut dyn FnMut(&[usize])) {
    fn extend(g: &Graph, dist: &DistanceTable, to: usize, path: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        let last = *path.last().expect("path starts nonempty");
        if last == to {
            visit(path);
            return;
        }
        let remaining = dist.get(last, to).expect("geodesic stays in the component");
        for w in g.neighbors(last) {
            if dist.get(w, to) == Some(remaining - 1) {
                path.push(w);
                extend(g, dist, to, path, visit);
                path.pop();
            }
        }
    }
    let mut path = vec![from];
    extend(g, dist, to, &mut path, visit);
}
