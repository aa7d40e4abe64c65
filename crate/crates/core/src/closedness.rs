//! Closed graphs and the Koszul implication chain.
//!
//! A labeling is closed when, for every vertex, its neighbors with larger
//! label form a clique and its neighbors with smaller label form a clique;
//! this is the edge-pair condition `{i,j},{i,l} => {j,l}` and
//! `{i,l},{k,l} => {i,k}` read vertex by vertex. Three independent routes
//! decide whether some closed labeling exists: exhaustive search, the
//! chordal + claw-free + narrow characterization, and interval facets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    self, clique_facets, find_claw, find_induced_cycle, independence_triangle, narrowness_violation,
    perfect_elimination_ordering, Claw, Graph, Labeling, NarrownessViolation,
};

/// Largest `n` for which labeling searches run by default.
pub const SEARCH_CAP: usize = 8;

/// Whether `lab` satisfies the closed-labeling condition.
pub fn check_labeling_closed(g: &Graph, lab: &Labeling) -> bool {
    let mut above = Vec::with_capacity(g.n());
    let mut below = Vec::with_capacity(g.n());
    for v in g.vertices() {
        above.clear();
        below.clear();
        for w in g.neighbors(v) {
            if lab.position(w) > lab.position(v) {
                above.push(w);
            } else {
                below.push(w);
            }
        }
        if !g.is_clique(&above) || !g.is_clique(&below) {
            return false;
        }
    }
    true
}

/// First closed labeling in lexicographic order, with the default cap.
pub fn is_closed_search(g: &Graph) -> Result<Option<Labeling>> {
    is_closed_search_capped(g, SEARCH_CAP)
}

pub fn is_closed_search_capped(g: &Graph, cap: usize) -> Result<Option<Labeling>> {
    search_labelings(g, cap, check_labeling_closed)
}

fn search_labelings(g: &Graph, cap: usize, accept: impl Fn(&Graph, &Labeling) -> bool) -> Result<Option<Labeling>> {
    if g.n() > cap {
        return Err(Error::Capacity(format!(
            "labeling search is capped at n = {cap} (got n = {}); use is_closed_fast",
            g.n()
        )));
    }
    let mut lab = Labeling::identity(g.n());
    loop {
        if accept(g, &lab) {
            return Ok(Some(lab));
        }
        if !lab.advance() {
            return Ok(None);
        }
    }
}

/// The three ingredients of the polynomial-time characterization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FastVerdict {
    pub chordal: bool,
    pub claw: Option<Claw>,
    pub narrowness_violation: Option<NarrownessViolation>,
}

impl FastVerdict {
    pub fn closed(&self) -> bool {
        self.chordal && self.claw.is_none() && self.narrowness_violation.is_none()
    }
}

pub fn fast_verdict(g: &Graph) -> FastVerdict {
    FastVerdict { chordal: graph::is_chordal(g), claw: find_claw(g), narrowness_violation: narrowness_violation(g) }
}

/// Closed iff chordal, claw-free and narrow. Chordality and claws are
/// hereditary to components and narrowness is evaluated per component, so
/// this is the conjunction over components.
pub fn is_closed_fast(g: &Graph) -> bool {
    fast_verdict(g).closed()
}

/// Whether every maximal clique maps to a set of consecutive positions.
pub fn interval_facets_check(g: &Graph, lab: &Labeling) -> bool {
    facets_are_intervals(&clique_facets(g).facets, lab)
}

fn facets_are_intervals(facets: &[Vec<usize>], lab: &Labeling) -> bool {
    facets.iter().all(|facet| {
        let mut pos: Vec<usize> = facet.iter().map(|&v| lab.position(v)).collect();
        pos.sort_unstable();
        pos.windows(2).all(|w| w[1] == w[0] + 1)
    })
}

/// First labeling (lexicographic) under which all facets are intervals.
pub fn interval_labeling_search(g: &Graph) -> Result<Option<Labeling>> {
    let facets = clique_facets(g).facets;
    search_labelings(g, SEARCH_CAP, |_, lab| facets_are_intervals(&facets, lab))
}

/// Lexicographic breadth-first search. Ties go to the vertex appearing latest
/// in `previous` when given (LBFS+), else to the smallest label.
fn lex_bfs(g: &Graph, previous: Option<&[usize]>) -> Vec<usize> {
    let n = g.n();
    let mut rank = vec![0usize; n + 1];
    match previous {
        Some(prev) => prev.iter().enumerate().for_each(|(k, &v)| rank[v] = k + 1),
        None => (1..=n).for_each(|v| rank[v] = n + 1 - v),
    }
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut visited = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (1..=n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(rank[a].cmp(&rank[b])))
            .expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Closed labeling from three LexBFS sweeps, verified before it is returned.
///
/// On a closed graph the third sweep yields an umbrella ordering, which is a
/// closed labeling; `None` means no closed labeling was produced.
pub fn lexbfs_closed_labeling(g: &Graph) -> Option<Labeling> {
    let first = lex_bfs(g, None);
    let second = lex_bfs(g, Some(&first));
    let third = lex_bfs(g, Some(&second));
    [third, second, first]
        .into_iter()
        .map(|order| Labeling::from_order(&order).expect("LexBFS visits every vertex once"))
        .find(|lab| check_labeling_closed(g, lab))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reason {
    ClosedGraph,
    NotChordal,
    HasClaw,
    ConeCriterion,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A closed labeling.
    ClosedLabeling(Labeling),
    Claw(Claw),
    /// An induced cycle of length at least 4, in cycle order.
    InducedCycle(Vec<usize>),
    /// For a cone over `g`: a perfect elimination ordering of `g`, and the
    /// fact that `Ind(g)` has no triangle.
    ConeCertificate {
        elimination_order: Vec<usize>,
    },
}

/// Three-valued Koszulness verdict with its cause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoszulStatus {
    pub verdict: Verdict,
    pub reason: Reason,
    pub witness: Option<Witness>,
}

impl KoszulStatus {
    fn new(verdict: Verdict, reason: Reason, witness: Option<Witness>) -> Self {
        KoszulStatus { verdict, reason, witness }
    }
}

/// Classifies `g` along closed => Koszul => chordal and claw-free.
///
/// Closedness is decided by exhaustive search up to [`SEARCH_CAP`]; above it
/// only a verified LexBFS labeling counts as evidence, otherwise the verdict
/// is `Unknown`.
pub fn koszul_classify(g: &Graph) -> KoszulStatus {
    if let Some(cycle) = find_induced_cycle(g) {
        return KoszulStatus::new(Verdict::No, Reason::NotChordal, Some(Witness::InducedCycle(cycle)));
    }
    if let Some(claw) = find_claw(g) {
        return KoszulStatus::new(Verdict::No, Reason::HasClaw, Some(Witness::Claw(claw)));
    }
    let closed = if g.n() <= SEARCH_CAP {
        is_closed_search(g).expect("n is within the search cap")
    } else if is_closed_fast(g) {
        lexbfs_closed_labeling(g)
    } else {
        None
    };
    match closed {
        Some(lab) => KoszulStatus::new(Verdict::Yes, Reason::ClosedGraph, Some(Witness::ClosedLabeling(lab))),
        None => KoszulStatus::new(Verdict::Unknown, Reason::Indeterminate, None),
    }
}

/// Classifies `cone(v, g)`: it is Koszul iff `g` is chordal and `Ind(g)` has
/// no triangle. Never returns `Unknown`.
pub fn cone_koszul_classify(g: &Graph) -> KoszulStatus {
    if let Some(leaves) = independence_triangle(g) {
        let claw = Claw { center: g.n() + 1, leaves };
        return KoszulStatus::new(Verdict::No, Reason::HasClaw, Some(Witness::Claw(claw)));
    }
    match perfect_elimination_ordering(g) {
        Some(order) => KoszulStatus::new(
            Verdict::Yes,
            Reason::ConeCriterion,
            Some(Witness::ConeCertificate { elimination_order: order }),
        ),
        None => {
            let cycle = find_induced_cycle(g).expect("a non-chordal graph has an induced long cycle");
            KoszulStatus::new(Verdict::No, Reason::NotChordal, Some(Witness::InducedCycle(cycle)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cone, enumerate::isomorphism_classes};

    fn bowtie() -> Graph {
        Graph::new(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    fn spider() -> Graph {
        Graph::new(7, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)]).unwrap()
    }

    /// The condition exactly as stated on pairs of edges, in positions.
    fn closed_by_edge_pairs(g: &Graph, lab: &Labeling) -> bool {
        let h = g.relabel(lab);
        h.edges().iter().all(|&(i, j)| {
            h.edges().iter().all(|&(k, l)| {
                let first = !(i == k && j != l) || h.has_edge(j, l);
                let second = !(j == l && i != k) || h.has_edge(i, k);
                first && second
            })
        })
    }

    #[test]
    fn labeling_check_examples() {
        assert!(check_labeling_closed(&Graph::path(3), &Labeling::identity(3)));
        let star = Graph::star(3);
        let mut lab = Labeling::identity(4);
        loop {
            assert!(!check_labeling_closed(&star, &lab));
            assert!(!interval_facets_check(&star, &lab));
            if !lab.advance() {
                break;
            }
        }
        let g = Graph::new(3, [(1, 3), (2, 3)]).unwrap();
        assert!(!check_labeling_closed(&g, &Labeling::identity(3)));
    }

    #[test]
    fn vertex_form_matches_edge_pair_form() {
        for g in isomorphism_classes(5) {
            let mut lab = Labeling::identity(5);
            loop {
                assert_eq!(check_labeling_closed(&g, &lab), closed_by_edge_pairs(&g, &lab), "{g:?} {lab:?}");
                if !lab.advance() {
                    break;
                }
            }
        }
    }

    #[test]
    fn search_examples() {
        for n in 1..=8 {
            assert_eq!(is_closed_search(&Graph::path(n)).unwrap(), Some(Labeling::identity(n)));
        }
        assert_eq!(is_closed_search(&Graph::cycle(4)).unwrap(), None);
        assert_eq!(is_closed_search(&bowtie()).unwrap(), Some(Labeling::identity(5)));
        assert!(matches!(is_closed_search(&Graph::path(9)), Err(Error::Capacity(_))));
    }

    #[test]
    fn fast_examples() {
        assert!(is_closed_fast(&Graph::path(9)));
        assert!(!is_closed_fast(&Graph::star(3)));
        let spider = fast_verdict(&spider());
        assert!(spider.chordal);
        assert!(spider.narrowness_violation.is_some());
        assert!(!spider.closed());
    }

    #[test]
    fn interval_examples() {
        assert!(interval_facets_check(&bowtie(), &Labeling::identity(5)));
        assert!(interval_facets_check(&Graph::path(3), &Labeling::identity(3)));
    }

    #[test]
    fn classify_examples() {
        let p4 = koszul_classify(&Graph::path(4));
        assert_eq!((p4.verdict, p4.reason), (Verdict::Yes, Reason::ClosedGraph));
        let c4 = koszul_classify(&Graph::cycle(4));
        assert_eq!((c4.verdict, c4.reason), (Verdict::No, Reason::NotChordal));
        // the spider has a claw at 3, so it is decided negatively
        let sp = koszul_classify(&spider());
        assert_eq!((sp.verdict, sp.reason), (Verdict::No, Reason::HasClaw));
    }

    #[test]
    fn smallest_chordal_claw_free_non_narrow_graph_is_unknown() {
        let found = (1..=6)
            .flat_map(isomorphism_classes)
            .find(|g| {
                let v = fast_verdict(g);
                v.chordal && v.claw.is_none() && v.narrowness_violation.is_some()
            })
            .expect("the net is such a graph");
        assert_eq!(found.n(), 6);
        assert_eq!(found.edge_count(), 6);
        let status = koszul_classify(&found);
        assert_eq!((status.verdict, status.reason), (Verdict::Unknown, Reason::Indeterminate));
        assert_eq!(status.witness, None);
    }

    #[test]
    fn cone_examples() {
        assert_eq!(cone_koszul_classify(&Graph::complete(2)).verdict, Verdict::Yes);
        let claw = cone_koszul_classify(&Graph::empty(3));
        assert_eq!((claw.verdict, claw.reason), (Verdict::No, Reason::HasClaw));
        assert_eq!(claw.witness, Some(Witness::Claw(Claw { center: 4, leaves: [1, 2, 3] })));
        assert_eq!(cone_koszul_classify(&Graph::cycle(4)).reason, Reason::NotChordal);
    }

    #[test]
    fn lexbfs_finds_closed_labelings_exactly_on_closed_graphs() {
        for n in 1..=7 {
            for g in isomorphism_classes(n) {
                let lab = lexbfs_closed_labeling(&g);
                assert_eq!(lab.is_some(), is_closed_fast(&g), "{g:?}");
            }
        }
        // beyond the search cap the classifier relies on it
        let square_of_path = Graph::new(10, (1..10).map(|i| (i, i + 1)).chain((1..9).map(|i| (i, i + 2)))).unwrap();
        assert_eq!(koszul_classify(&square_of_path).verdict, Verdict::Yes);
        assert_eq!(koszul_classify(&cone(&Graph::path(9))).reason, Reason::HasClaw);
    }
}
