//! Exhaustive verification sweeps over small graphs.
//!
//! Each check compares a structural computation with an independent oracle
//! on every instance. Instances are processed in parallel and merged in
//! instance order, so the report does not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{betti_formula, syzygy_check};
use crate::closedness::{
    check_labeling_closed, cone_koszul_classify, interval_labeling_search, is_closed_fast, is_closed_search,
    koszul_classify, lexbfs_closed_labeling, Reason, Verdict, Witness,
};
use crate::dual::{dual_generators, dual_generators_general, dual_relation_count, same_span, verify_orthogonality};
use crate::error::{Error, Result};
use crate::graph::{
    cone, distances, enumerate, find_claw, free_vertices, glue_at_free_vertices, independence_triangle, is_chordal,
    narrowness_violation, to_graph6, Graph, Labeling,
};
use crate::ideal::{build_ideal, combinatorial_gb, has_quadratic_gb};
use crate::poly::{buchberger, PolyRing, Rationals};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Combinatorial basis equals Buchberger's reduced basis.
    Gb,
    /// Some labeling has a quadratic basis iff a closed labeling exists.
    Quadratic,
    /// Chordal, claw-free and narrow iff a closed labeling exists.
    CoxErskine,
    /// Cone closedness iff chordal with no independent triple; cone diameter
    /// at most 2.
    Cone,
    /// Every cone is narrow.
    ConeNarrow,
    Betti,
    Dual,
    /// Interval facets under some labeling iff closed.
    Interval,
    /// Koszul classifier verdicts are backed by valid witnesses.
    Classify,
    /// Negative control: the quadraticity check with the basis side negated.
    BrokenQuadratic,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Gb,
        Check::Quadratic,
        Check::CoxErskine,
        Check::Cone,
        Check::ConeNarrow,
        Check::Betti,
        Check::Dual,
        Check::Interval,
        Check::Classify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Gb => "gb",
            Check::Quadratic => "quadratic",
            Check::CoxErskine => "cox-erskine",
            Check::Cone => "cone",
            Check::ConeNarrow => "cone-narrow",
            Check::Betti => "betti",
            Check::Dual => "dual",
            Check::Interval => "interval",
            Check::Classify => "classify",
            Check::BrokenQuadratic => "broken-quadratic",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .chain([Check::BrokenQuadratic])
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Domain(format!("unknown check {s:?}")))
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Parses a comma-separated check list; `all` selects every real check.
pub fn parse_checks(s: &str) -> Result<Vec<Check>> {
    if s.trim() == "all" {
        return Ok(Check::ALL.to_vec());
    }
    s.split(',').map(str::parse).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub nmin: usize,
    pub nmax: usize,
    pub checks: Vec<Check>,
    /// One representative per isomorphism class instead of all labeled graphs.
    pub canonical: bool,
    /// Random labelings per graph for the `gb` check, besides the identity.
    pub random_labelings: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { nmin: 1, nmax: 4, checks: Check::ALL.to_vec(), canonical: false, random_labelings: 3, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: Check,
    pub instance: usize,
    pub graph6: String,
    pub labeling: Option<Labeling>,
    pub detail: String,
    /// Shell command reproducing the instance.
    pub reproducer: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub check: Check,
    pub instance: usize,
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub instances: usize,
    pub passed: usize,
    pub violations: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub graphs: usize,
    /// Per-check counts, in the order of `config.checks`.
    pub summary: Vec<(Check, CheckSummary)>,
    pub violations: Vec<Violation>,
    pub skipped: Vec<Skip>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "swept {} graphs (n = {}..={}, {})\n",
            self.graphs,
            self.config.nmin,
            self.config.nmax,
            if self.config.canonical { "isomorphism classes" } else { "labeled" }
        );
        for (check, c) in &self.summary {
            s += &format!(
                "  {:<17} {:>7} instances  {:>7} passed  {:>5} violations  {:>5} skipped\n",
                check.name(),
                c.instances,
                c.passed,
                c.violations,
                c.skipped
            );
        }
        const SHOWN: usize = 20;
        for v in self.violations.iter().take(SHOWN) {
            s += &format!("violation [{}] {}: {}\n  reproduce: {}\n", v.check, v.graph6, v.detail, v.reproducer);
        }
        if self.violations.len() > SHOWN {
            s += &format!("... {} more violations (use --json for all)\n", self.violations.len() - SHOWN);
        }
        s
    }
}

/// Result of one check on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { detail: String, labeling: Option<Labeling> },
    Skip(String),
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome::Fail { detail: detail.into(), labeling: None }
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        fail(detail())
    }
}

/// The graphs of a sweep, in instance order.
pub fn sweep_graphs(cfg: &SweepConfig) -> Vec<Graph> {
    (cfg.nmin.max(1)..=cfg.nmax)
        .flat_map(|n| {
            if cfg.canonical {
                enumerate::isomorphism_classes(n)
            } else {
                enumerate::labeled_graphs(n).collect()
            }
        })
        .collect()
}

/// Deterministic per-instance labelings: identity followed by `count`
/// random permutations drawn from a stream keyed by `(seed, instance)`.
pub fn instance_labelings(n: usize, count: usize, seed: u64, instance: usize) -> Vec<Labeling> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(instance as u64);
    std::iter::once(Labeling::identity(n)).chain((0..count).map(|_| Labeling::random(n, &mut rng))).collect()
}

pub fn run_check(check: Check, g: &Graph, instance: usize, cfg: &SweepConfig) -> Outcome {
    let result = match check {
        Check::Gb => check_gb(g, &instance_labelings(g.n(), cfg.random_labelings, cfg.seed, instance)),
        Check::Quadratic => check_quadratic(g, false),
        Check::BrokenQuadratic => check_quadratic(g, true),
        Check::CoxErskine => check_cox_erskine(g),
        Check::Cone => check_cone(g),
        Check::ConeNarrow => Ok(check_cone_narrow(g)),
        Check::Betti => check_betti(g),
        Check::Dual => check_dual(g),
        Check::Interval => check_interval(g),
        Check::Classify => Ok(check_classify(g)),
    };
    result.unwrap_or_else(|e| Outcome::Skip(e.to_string()))
}

fn check_gb(g: &Graph, labelings: &[Labeling]) -> Result<Outcome> {
    let ring = PolyRing::for_vertices(Rationals, g.n());
    for lab in labelings {
        let comb = combinatorial_gb(&ring, g, lab);
        let oracle = buchberger(&ring, &build_ideal(&ring, g, lab).generators)?;
        if comb != oracle {
            return Ok(Outcome::Fail {
                detail: format!("combinatorial basis has {} elements, Buchberger {}", comb.len(), oracle.len()),
                labeling: Some(lab.clone()),
            });
        }
    }
    Ok(Outcome::Pass)
}

fn check_quadratic(g: &Graph, negate: bool) -> Result<Outcome> {
    let closed = is_closed_search(g)?;
    let mut lab = Labeling::identity(g.n());
    let mut quadratic = loop {
        if has_quadratic_gb(g, &lab) {
            break true;
        }
        if !lab.advance() {
            break false;
        }
    };
    if negate {
        quadratic = !quadratic;
    }
    if quadratic != closed.is_some() {
        return Ok(fail(format!("quadratic basis exists: {quadratic}, closed labeling exists: {}", closed.is_some())));
    }
    if let Some(w) = closed {
        if !has_quadratic_gb(g, &w) {
            return Ok(Outcome::Fail {
                detail: "closed labeling gives a non-quadratic basis".into(),
                labeling: Some(w),
            });
        }
    }
    Ok(Outcome::Pass)
}

fn check_cox_erskine(g: &Graph) -> Result<Outcome> {
    let search = is_closed_search(g)?.is_some();
    let fast = is_closed_fast(g);
    if search != fast {
        return Ok(fail(format!("labeling search says {search}, fast test says {fast}")));
    }
    let lex = lexbfs_closed_labeling(g);
    Ok(ensure(lex.is_some() == fast, || format!("LexBFS labeling found: {}, closed: {fast}", lex.is_some())))
}

fn check_cone(g: &Graph) -> Result<Outcome> {
    let c = cone(g);
    let closed = is_closed_search(&c)?.is_some();
    let criterion = is_chordal(g) && independence_triangle(g).is_none();
    if closed != criterion {
        return Ok(fail(format!("cone closed: {closed}, chordal without independent triple: {criterion}")));
    }
    let diam = distances(&c).max_finite();
    if diam > 2 {
        return Ok(fail(format!("cone has diameter {diam}")));
    }
    let status = cone_koszul_classify(g);
    let expected = if criterion { Verdict::Yes } else { Verdict::No };
    if status.verdict != expected {
        return Ok(fail(format!("cone classifier says {:?}", status.verdict)));
    }
    let direct = koszul_classify(&c).verdict;
    Ok(ensure(direct == expected, || format!("classifier on the cone says {direct:?}, expected {expected:?}")))
}

fn check_cone_narrow(g: &Graph) -> Outcome {
    match narrowness_violation(&cone(g)) {
        None => Outcome::Pass,
        Some(v) => fail(format!(
            "vertex {} is at distance 2 from the diametral geodesic {:?} of the cone",
            v.vertex, v.geodesic
        )),
    }
}

fn check_betti(g: &Graph) -> Result<Outcome> {
    let s = syzygy_check(g)?;
    let formula = betti_formula(g).beta2;
    if s.kernel_dim != formula {
        return Ok(fail(format!("kernel dimension {} but formula gives {formula}", s.kernel_dim)));
    }
    Ok(ensure(s.spans_kernel(), || format!("explicit syzygies do not span the kernel: {s:?}")))
}

fn check_dual(g: &Graph) -> Result<Outcome> {
    let rels = dual_generators(g);
    let expected = dual_relation_count(g);
    if rels.len() != expected {
        return Ok(fail(format!("{} relations, expected {expected}", rels.len())));
    }
    let orth = verify_orthogonality(g, &rels);
    if !orth.complete() || orth.span_dim != expected {
        return Ok(fail(format!("orthogonality failed: {orth:?}")));
    }
    let ring = PolyRing::for_vertices(Rationals, g.n());
    let ideal = build_ideal(&ring, g, &Labeling::identity(g.n()));
    let general = dual_generators_general(&ideal.generators, ring.nvars())?;
    Ok(ensure(same_span(&rels, &general), || "closed-form relations differ from the general construction".into()))
}

fn check_interval(g: &Graph) -> Result<Outcome> {
    let closed = is_closed_search(g)?.is_some();
    let interval = interval_labeling_search(g)?.is_some();
    Ok(ensure(closed == interval, || format!("closed: {closed}, interval facets: {interval}")))
}

fn check_classify(g: &Graph) -> Outcome {
    let status = koszul_classify(g);
    let valid = match (&status.verdict, &status.reason, &status.witness) {
        (Verdict::Yes, Reason::ClosedGraph, Some(Witness::ClosedLabeling(lab))) => check_labeling_closed(g, lab),
        (Verdict::No, Reason::NotChordal, Some(Witness::InducedCycle(cycle))) => is_induced_cycle(g, cycle),
        (Verdict::No, Reason::HasClaw, Some(Witness::Claw(claw))) => {
            let [a, b, c] = claw.leaves;
            is_chordal(g)
                && [a, b, c].iter().all(|&l| g.has_edge(claw.center, l))
                && !g.has_edge(a, b)
                && !g.has_edge(a, c)
                && !g.has_edge(b, c)
        }
        (Verdict::Unknown, Reason::Indeterminate, None) => {
            is_chordal(g) && find_claw(g).is_none() && matches!(is_closed_search(g), Ok(None) | Err(_))
        }
        _ => false,
    };
    ensure(valid, || format!("unsupported verdict {status:?}"))
}

fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    k >= 4
        && (0..k).all(|a| {
            (a + 1..k).all(|b| {
                let consecutive = b == a + 1 || (a == 0 && b == k - 1);
                g.has_edge(cycle[a], cycle[b]) == consecutive
            })
        })
}

fn reproducer(g: &Graph, labeling: Option<&Labeling>) -> String {
    let lab = labeling.map(|l| format!(" --labeling {l}")).unwrap_or_default();
    format!("echo '{}' | beid analyze -{lab}", to_graph6(g))
}

/// Runs every configured check on every instance.
pub fn run_sweep(cfg: &SweepConfig) -> SweepReport {
    let graphs = sweep_graphs(cfg);
    let outcomes: Vec<Vec<Outcome>> = graphs
        .par_iter()
        .enumerate()
        .map(|(k, g)| cfg.checks.iter().map(|&c| run_check(c, g, k, cfg)).collect())
        .collect();
    let mut summary: Vec<(Check, CheckSummary)> = cfg.checks.iter().map(|&c| (c, CheckSummary::default())).collect();
    let mut violations = Vec::new();
    let mut skipped = Vec::new();
    for (instance, (g, row)) in graphs.iter().zip(outcomes).enumerate() {
        for (slot, outcome) in summary.iter_mut().zip(row) {
            let (check, counts) = slot;
            counts.instances += 1;
            match outcome {
                Outcome::Pass => counts.passed += 1,
                Outcome::Fail { detail, labeling } => {
                    counts.violations += 1;
                    violations.push(Violation {
                        check: *check,
                        instance,
                        graph6: to_graph6(g),
                        reproducer: reproducer(g, labeling.as_ref()),
                        labeling,
                        detail,
                    });
                }
                Outcome::Skip(reason) => {
                    counts.skipped += 1;
                    skipped.push(Skip { check: *check, instance, graph6: to_graph6(g), reason });
                }
            }
        }
    }
    SweepReport { config: cfg.clone(), graphs: graphs.len(), summary, violations, skipped }
}

/// One gluing of two closed graphs at free vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluingCase {
    pub first: String,
    pub first_vertex: usize,
    pub second: String,
    pub second_vertex: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct GluingReport {
    pub closed_graphs: usize,
    pub gluings: usize,
    pub yes: usize,
    pub unknown: usize,
    /// Gluings classified as not Koszul.
    pub violations: Vec<GluingCase>,
}

/// Glues every ordered pair of closed graphs (one per isomorphism class, with
/// at most `nmax` vertices) at every pair of free vertices and classifies
/// the result.
pub fn gluing_sweep(nmax: usize) -> GluingReport {
    let closed: Vec<Graph> = (1..=nmax)
        .flat_map(enumerate::isomorphism_classes)
        .filter(|g| matches!(is_closed_search(g), Ok(Some(_))))
        .collect();
    let jobs: Vec<(usize, usize, usize, usize)> = closed
        .iter()
        .enumerate()
        .flat_map(|(a, ga)| {
            let closed = &closed;
            free_vertices(ga).into_iter().flat_map(move |va| {
                closed
                    .iter()
                    .enumerate()
                    .flat_map(move |(b, gb)| free_vertices(gb).into_iter().map(move |vb| (a, va, b, vb)))
            })
        })
        .collect();
    let cases: Vec<GluingCase> = jobs
        .par_iter()
        .map(|&(a, va, b, vb)| {
            let glued = glue_at_free_vertices(&closed[a], va, &closed[b], vb).expect("vertices are free");
            GluingCase {
                first: to_graph6(&closed[a]),
                first_vertex: va,
                second: to_graph6(&closed[b]),
                second_vertex: vb,
                verdict: koszul_classify(&glued).verdict,
            }
        })
        .collect();
    GluingReport {
        closed_graphs: closed.len(),
        gluings: cases.len(),
        yes: cases.iter().filter(|c| c.verdict == Verdict::Yes).count(),
        unknown: cases.iter().filter(|c| c.verdict == Verdict::Unknown).count(),
        violations: cases.into_iter().filter(|c| c.verdict == Verdict::No).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL.into_iter().chain([Check::BrokenQuadratic]) {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert_eq!(parse_checks("all").unwrap().len(), 9);
        assert!(parse_checks("gb,nope").is_err());
    }

    #[test]
    fn labelings_are_deterministic() {
        let a = instance_labelings(6, 3, 7, 11);
        assert_eq!(a, instance_labelings(6, 3, 7, 11));
        assert_eq!(a[0], Labeling::identity(6));
        assert_ne!(a[1..], instance_labelings(6, 3, 7, 12)[1..]);
    }

    #[test]
    fn small_sweep_is_clean() {
        let cfg = SweepConfig { nmax: 3, ..Default::default() };
        let r = run_sweep(&cfg);
        assert_eq!(r.graphs, 1 + 2 + 8);
        assert!(r.is_clean(), "{}", r.to_text());
    }

    #[test]
    fn broken_check_reports_violations() {
        let cfg = SweepConfig { nmax: 3, checks: vec![Check::BrokenQuadratic], ..Default::default() };
        let r = run_sweep(&cfg);
        assert_eq!(r.violations.len(), r.graphs);
        assert!(r.violations[0].reproducer.starts_with("echo '@' | beid analyze -"));
    }

    #[test]
    fn induced_cycle_validation() {
        let c5 = Graph::cycle(5);
        assert!(is_induced_cycle(&c5, &[1, 2, 3, 4, 5]));
        assert!(!is_induced_cycle(&c5.with_edge(1, 3).unwrap(), &[1, 2, 3, 4, 5]));
    }
}
