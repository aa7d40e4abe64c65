//! The full analysis pipeline and its deterministic report.

use std::fmt::Write as _;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;

use crate::betti::{betti_report, BettiReport};
use crate::closedness::{
    check_labeling_closed, fast_verdict, interval_labeling_search, is_closed_search, koszul_classify,
    lexbfs_closed_labeling, FastVerdict, KoszulStatus,
};
use crate::dual::{dual_generators, dual_relation_count, verify_orthogonality, Orthogonality};
use crate::error::{Error, Result};
use crate::graph::{Graph, Labeling};
use crate::ideal::{build_ideal, combinatorial_gb, edge_addition, quotient_hilbert_series};
use crate::poly::{self, Field, PolyRing, PrimeField, Rationals};

/// Truncation for the edge-addition series checks.
pub const EDGE_CHECK_TRUNCATION: usize = 10;

/// Coefficient field selected at run time.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum FieldChoice {
    #[default]
    Rationals,
    Prime(PrimeField),
}

impl FieldChoice {
    pub fn name(&self) -> String {
        match self {
            FieldChoice::Rationals => Rationals.name(),
            FieldChoice::Prime(p) => p.name(),
        }
    }
}

/// `q` (or `Q`, `QQ`) for the rationals, `p:<prime>` for a prime field.
impl FromStr for FieldChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "q" | "Q" | "QQ") {
            return Ok(FieldChoice::Rationals);
        }
        let p = s
            .strip_prefix("p:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Domain(format!("unknown field {s:?} (expected q or p:<prime>)")))?;
        Ok(FieldChoice::Prime(PrimeField::new(p)?))
    }
}

#[derive(Debug, Clone, Default)]
pub struct AnalysisOptions {
    /// Labeling for the Gröbner basis section; identity when absent.
    pub labeling: Option<Labeling>,
    /// Skip the Buchberger oracle.
    pub skip_gb: bool,
    /// Include the Hilbert series of `S/J_G` through this degree.
    pub truncation: Option<usize>,
    pub add_edge: Option<(usize, usize)>,
    pub field: FieldChoice,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphEcho {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Outcome of an exhaustive labeling search; `closed` is `None` when the
/// graph is above the search cap.
#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub closed: Option<bool>,
    pub witness: Option<Labeling>,
}

impl SearchOutcome {
    fn from(found: Result<Option<Labeling>>) -> Self {
        match found {
            Ok(w) => SearchOutcome { closed: Some(w.is_some()), witness: w },
            Err(_) => SearchOutcome { closed: None, witness: None },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FastOutcome {
    pub closed: bool,
    pub ingredients: FastVerdict,
    /// Verified closed labeling from LexBFS sweeps.
    pub witness: Option<Labeling>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosednessSection {
    pub search: SearchOutcome,
    pub fast: FastOutcome,
    pub interval: SearchOutcome,
    /// Whether the labeling used for the Gröbner basis is itself closed.
    pub labeling_closed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GbSection {
    pub labeling: Labeling,
    pub combinatorial: Vec<String>,
    /// Reduced basis from Buchberger's algorithm; absent with `skip_gb`.
    pub buchberger: Option<Vec<String>>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    pub quadratic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualSection {
    pub count: usize,
    pub expected_count: usize,
    pub relations: Vec<String>,
    pub orthogonality: Orthogonality,
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertSection {
    pub truncation: usize,
    pub coefficients: Vec<String>,
    pub series: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeSection {
    pub edge: (usize, usize),
    pub truncation: usize,
    pub hilbert_before: String,
    pub hilbert_after: String,
    pub nonzerodivisor: bool,
    pub strongly_free: bool,
    pub caveat: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub field: String,
    pub graph: GraphEcho,
    pub closedness: ClosednessSection,
    pub koszul: KoszulStatus,
    pub gb: GbSection,
    pub dual: DualSection,
    pub betti: BettiReport,
    pub hilbert: Option<HilbertSection>,
    pub edge_addition: Option<EdgeSection>,
}

impl AnalysisReport {
    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    /// Oracle and combinatorial bases disagree.
    pub fn gb_mismatch(&self) -> bool {
        self.gb.matches == Some(false)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let opt = |b: Option<bool>| b.map_or("skipped (above search cap)", yes_no);
        let _ = writeln!(s, "graph: n = {}, {} edges, field {}", self.graph.n, self.graph.edges.len(), self.field);
        let c = &self.closedness;
        let _ = writeln!(s, "closed (labeling search): {}", opt(c.search.closed));
        if let Some(w) = &c.search.witness {
            let _ = writeln!(s, "  closed labeling: {w}");
        }
        let _ = writeln!(s, "closed (chordal, claw-free, narrow): {}", yes_no(c.fast.closed));
        let _ = writeln!(s, "closed (interval facets): {}", opt(c.interval.closed));
        let _ = writeln!(s, "koszul: {:?} ({:?})", self.koszul.verdict, self.koszul.reason);
        let _ = writeln!(s, "groebner basis under labeling {}:", self.gb.labeling);
        for p in &self.gb.combinatorial {
            let _ = writeln!(s, "  {p}");
        }
        let _ = writeln!(s, "  quadratic: {}", yes_no(self.gb.quadratic));
        match self.gb.matches {
            Some(m) => {
                let _ = writeln!(s, "  matches Buchberger: {}", yes_no(m));
            }
            None => {
                let _ = writeln!(s, "  Buchberger check skipped");
            }
        }
        let _ = writeln!(
            s,
            "quadratic dual: {} relations, orthogonal: {}, spans annihilator: {}",
            self.dual.count,
            yes_no(self.dual.orthogonality.all_orthogonal),
            yes_no(self.dual.orthogonality.complete())
        );
        let b = &self.betti;
        let _ = write!(s, "betti: beta1 = {}, beta2 = {}", b.beta1, b.beta2);
        match b.beta2_verified {
            Some(v) => {
                let _ = writeln!(s, " (kernel computation: {v})");
            }
            None => s.push('\n'),
        }
        if let Some(h) = &self.hilbert {
            let _ = writeln!(s, "hilbert series: {}", h.series);
        }
        if let Some(e) = &self.edge_addition {
            let _ = writeln!(s, "adding edge {{{}, {}}} through degree {}:", e.edge.0, e.edge.1, e.truncation);
            let _ = writeln!(s, "  H_before = {}", e.hilbert_before);
            let _ = writeln!(s, "  H_after  = {}", e.hilbert_after);
            let _ = writeln!(s, "  nonzerodivisor: {}", yes_no(e.nonzerodivisor));
            let _ = writeln!(s, "  strongly free: {}", yes_no(e.strongly_free));
            if let Some(c) = &e.caveat {
                let _ = writeln!(s, "  note: {c}");
            }
        }
        s
    }
}

pub fn analyze(g: &Graph, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    match opts.field {
        FieldChoice::Rationals => analyze_over(Rationals, g, opts),
        FieldChoice::Prime(p) => analyze_over(p, g, opts),
    }
}

pub fn analyze_over<F: Field>(field: F, g: &Graph, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let n = g.n();
    let lab = match &opts.labeling {
        Some(l) if l.len() != n => {
            return Err(Error::InvalidLabeling(format!("labeling has {} entries, graph has {n} vertices", l.len())))
        }
        Some(l) => l.clone(),
        None => Labeling::identity(n),
    };
    let ring = PolyRing::for_vertices(field, n);

    let fv = fast_verdict(g);
    let closedness = ClosednessSection {
        search: SearchOutcome::from(is_closed_search(g)),
        fast: FastOutcome {
            closed: fv.closed(),
            witness: if fv.closed() { lexbfs_closed_labeling(g) } else { None },
            ingredients: fv,
        },
        interval: SearchOutcome::from(interval_labeling_search(g)),
        labeling_closed: check_labeling_closed(g, &lab),
    };

    let comb = combinatorial_gb(&ring, g, &lab);
    let (buchberger, matches) = if opts.skip_gb {
        (None, None)
    } else {
        let oracle = poly::buchberger(&ring, &build_ideal(&ring, g, &lab).generators)?;
        let m = oracle == comb;
        (Some(oracle.iter().map(|p| ring.render(p)).collect()), Some(m))
    };
    let gb = GbSection {
        labeling: lab,
        quadratic: poly::is_quadratic_basis(&comb),
        combinatorial: comb.iter().map(|p| ring.render(p)).collect(),
        buchberger,
        matches,
    };

    let rels = dual_generators(g);
    let dual = DualSection {
        count: rels.len(),
        expected_count: dual_relation_count(g),
        orthogonality: verify_orthogonality(g, &rels),
        relations: rels.iter().map(|r| r.render()).collect(),
    };

    let hilbert = match opts.truncation {
        Some(t) => {
            let h = quotient_hilbert_series(&ring, g, t)?;
            Some(HilbertSection { truncation: t, coefficients: coefficient_strings(h.coeffs()), series: h.to_string() })
        }
        None => None,
    };

    let edge_addition = match opts.add_edge {
        Some(e) => {
            let t = opts.truncation.unwrap_or(EDGE_CHECK_TRUNCATION);
            let r = edge_addition(&ring, g, e, t)?;
            Some(EdgeSection {
                edge: r.edge,
                truncation: t,
                hilbert_before: r.hilbert_a.to_string(),
                hilbert_after: r.hilbert_b.to_string(),
                nonzerodivisor: r.nonzerodivisor,
                strongly_free: r.strongly_free,
                caveat: r.nonzerodivisor.then(|| format!("nonzerodivisor identity certified up to degree {t} only")),
            })
        }
        None => None,
    };

    Ok(AnalysisReport {
        field: ring.field().name(),
        graph: GraphEcho { n, edges: g.edges().to_vec() },
        closedness,
        koszul: koszul_classify(g),
        gb,
        dual,
        betti: betti_report(g),
        hilbert,
        edge_addition,
    })
}

fn coefficient_strings(coeffs: &[BigRational]) -> Vec<String> {
    coeffs.iter().map(|c| c.to_string()).collect()
}
