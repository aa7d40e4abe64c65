//! Command-line front end for the `beid` binary.
//!
//! Exit codes: 0 success, 1 sweep violations, 2 input error, 3 capacity
//! exceeded, 4 Gröbner basis mismatch between the two constructions.

use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::betti::{betti_report, syzygy_check};
use crate::dual::{dual_generators, dual_relation_count, verify_orthogonality};
use crate::error::{Error, Result};
use crate::graph::{cone, glue_at_free_vertices, Graph, Labeling};
use crate::ideal::{build_ideal, combinatorial_gb, edge_addition, quotient_hilbert_series};
use crate::poly::{self, Field, PolyRing, Rationals};
use crate::report::{analyze, AnalysisOptions, FieldChoice, EDGE_CHECK_TRUNCATION};
use crate::sweep::{gluing_sweep, parse_checks, run_sweep, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Environment variable holding the default coefficient field.
pub const FIELD_ENV: &str = "BEID_FIELD";

#[derive(Debug, Parser)]
#[command(name = "beid", version, about = "Binomial edge ideals of graphs: Gröbner bases, closedness, Koszul duals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full analysis of one graph.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
        /// Skip the Buchberger oracle.
        #[arg(long)]
        skip_gb: bool,
        /// Include the Hilbert series through this degree.
        #[arg(long)]
        truncation: Option<usize>,
        /// Compare Hilbert series before and after adding the edge `i,j`.
        #[arg(long, value_name = "I,J")]
        add_edge: Option<String>,
    },
    /// Combinatorial and Buchberger Gröbner bases.
    Gb {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
    /// Quadratic dual relations and their orthogonality check.
    Dual {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// First two Betti numbers of the residue field.
    Betti {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert series of the quotient ring, optionally with an edge added.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = EDGE_CHECK_TRUNCATION)]
        truncation: usize,
        #[arg(long, value_name = "I,J")]
        add_edge: Option<String>,
    },
    /// Cone over a graph, as an edge list.
    Cone {
        #[command(flatten)]
        input: Input,
    },
    /// Glue two graphs at free vertices, as an edge list.
    Glue { first: PathBuf, first_vertex: usize, second: PathBuf, second_vertex: usize },
    /// Exhaustive verification sweep.
    Sweep {
        #[arg(long, default_value_t = 1)]
        nmin: usize,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        /// Comma-separated checks, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// One graph per isomorphism class.
        #[arg(long)]
        canonical: bool,
        #[arg(long, default_value_t = 3)]
        random_labelings: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Also glue closed graphs with at most this many vertices.
        #[arg(long)]
        gluing: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Edge-list or graph6 file, or `-` for stdin.
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Vertex positions, e.g. `3,1,2` puts vertex 1 at position 3.
    #[arg(long)]
    pub labeling: Option<String>,
    /// `q` or `p:<prime>`; defaults to $BEID_FIELD, then `q`.
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub json: bool,
}

impl Common {
    fn field(&self) -> Result<FieldChoice> {
        match &self.field {
            Some(f) => f.parse(),
            None => std::env::var(FIELD_ENV).ok().map_or(Ok(FieldChoice::Rationals), |f| f.parse()),
        }
    }

    fn labeling(&self) -> Result<Option<Labeling>> {
        self.labeling.as_deref().map(Labeling::parse).transpose()
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Error::Domain(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Domain(format!("reading {}: {e}", path.display())))?
    };
    Graph::parse(&text)
}

fn parse_edge(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Domain(format!("bad edge {s:?} (expected i,j)"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string_pretty(&v).expect("serializable")
}

/// Runs a parsed command, returning its output text and exit code.
pub fn run(cli: Cli) -> Result<(String, i32)> {
    match cli.command {
        Command::Analyze { input, common, skip_gb, truncation, add_edge } => {
            let g = read_graph(&input.input)?;
            let opts = AnalysisOptions {
                labeling: common.labeling()?,
                skip_gb,
                truncation,
                add_edge: add_edge.as_deref().map(parse_edge).transpose()?,
                field: common.field()?,
            };
            let report = analyze(&g, &opts)?;
            let code = if report.gb_mismatch() { EXIT_MISMATCH } else { EXIT_OK };
            let out = if common.json { report.to_json() } else { report.to_text() };
            Ok((out, code))
        }
        Command::Gb { input, common } => {
            let g = read_graph(&input.input)?;
            let lab = common.labeling()?.unwrap_or_else(|| Labeling::identity(g.n()));
            match common.field()? {
                FieldChoice::Rationals => gb_command(Rationals, &g, &lab, common.json),
                FieldChoice::Prime(p) => gb_command(p, &g, &lab, common.json),
            }
        }
        Command::Dual { input, json: as_json } => {
            let g = read_graph(&input.input)?;
            let rels = dual_generators(&g);
            let orth = verify_orthogonality(&g, &rels);
            let rendered: Vec<String> = rels.iter().map(|r| r.render()).collect();
            let out = if as_json {
                json(&serde_json::json!({
                    "count": rels.len(),
                    "expected_count": dual_relation_count(&g),
                    "relations": rendered,
                    "orthogonality": orth,
                }))
            } else {
                let mut s = rendered.join("\n");
                s += &format!(
                    "\n{} relations, orthogonal: {}, span {} of {}\n",
                    rels.len(),
                    orth.all_orthogonal,
                    orth.span_dim,
                    orth.annihilator_dim
                );
                s
            };
            Ok((out, if orth.complete() { EXIT_OK } else { EXIT_MISMATCH }))
        }
        Command::Betti { input, json: as_json } => {
            let g = read_graph(&input.input)?;
            let report = betti_report(&g);
            let syz = syzygy_check(&g).ok();
            let out = if as_json {
                json(&serde_json::json!({ "betti": report, "syzygies": syz }))
            } else {
                let mut s = format!("beta1 = {}\nbeta2 = {}\n", report.beta1, report.beta2);
                match syz {
                    Some(c) => {
                        s += &format!(
                            "kernel dimension {} ({} Koszul + {} edge syzygies, spanning: {})\n",
                            c.kernel_dim,
                            c.koszul_syzygies,
                            c.edge_syzygies,
                            c.spans_kernel()
                        )
                    }
                    None => s += "kernel computation skipped (graph too large)\n",
                }
                s
            };
            Ok((out, if report.matches == Some(false) { EXIT_MISMATCH } else { EXIT_OK }))
        }
        Command::Hilbert { input, common, truncation, add_edge } => {
            let g = read_graph(&input.input)?;
            let edge = add_edge.as_deref().map(parse_edge).transpose()?;
            match common.field()? {
                FieldChoice::Rationals => hilbert_command(Rationals, &g, truncation, edge, common.json),
                FieldChoice::Prime(p) => hilbert_command(p, &g, truncation, edge, common.json),
            }
        }
        Command::Cone { input } => Ok((cone(&read_graph(&input.input)?).to_edge_list(), EXIT_OK)),
        Command::Glue { first, first_vertex, second, second_vertex } => {
            let (g1, g2) = (read_graph(&first)?, read_graph(&second)?);
            Ok((glue_at_free_vertices(&g1, first_vertex, &g2, second_vertex)?.to_edge_list(), EXIT_OK))
        }
        Command::Sweep { nmin, nmax, checks, canonical, random_labelings, seed, jobs, gluing, json: as_json } => {
            let cfg = SweepConfig { nmin, nmax, checks: parse_checks(&checks)?, canonical, random_labelings, seed };
            if !canonical && nmax > 7 {
                return Err(Error::Capacity(format!(
                    "labeled sweeps are limited to n <= 7 (got {nmax}); use --canonical"
                )));
            }
            if canonical && nmax > 9 {
                return Err(Error::Capacity(format!("canonical sweeps are limited to n <= 9 (got {nmax})")));
            }
            let work = || {
                let report = run_sweep(&cfg);
                let glue = gluing.map(gluing_sweep);
                (report, glue)
            };
            let (report, glue) = match jobs {
                Some(k) => rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build()
                    .map_err(|e| Error::Domain(format!("thread pool: {e}")))?
                    .install(work),
                None => work(),
            };
            let clean = report.is_clean() && glue.as_ref().is_none_or(|g| g.violations.is_empty());
            let out = if as_json {
                json(&serde_json::json!({ "sweep": report, "gluing": glue }))
            } else {
                let mut s = report.to_text();
                if let Some(g) = &glue {
                    s += &format!(
                        "gluing: {} closed graphs, {} gluings, {} Koszul, {} undecided, {} violations\n",
                        g.closed_graphs,
                        g.gluings,
                        g.yes,
                        g.unknown,
                        g.violations.len()
                    );
                }
                s
            };
            Ok((out, if clean { EXIT_OK } else { EXIT_VIOLATIONS }))
        }
    }
}

fn gb_command<F: Field>(field: F, g: &Graph, lab: &Labeling, as_json: bool) -> Result<(String, i32)> {
    if lab.len() != g.n() {
        return Err(Error::InvalidLabeling(format!(
            "labeling has {} entries, graph has {} vertices",
            lab.len(),
            g.n()
        )));
    }
    let ring = PolyRing::for_vertices(field, g.n());
    let comb = combinatorial_gb(&ring, g, lab);
    let oracle = poly::buchberger(&ring, &build_ideal(&ring, g, lab).generators)?;
    let matches = comb == oracle;
    let render = |b: &[poly::Polynomial<F::Elem>]| b.iter().map(|p| ring.render(p)).collect::<Vec<_>>();
    let out = if as_json {
        json(&serde_json::json!({
            "field": ring.field().name(),
            "labeling": lab,
            "combinatorial": render(&comb),
            "buchberger": render(&oracle),
            "match": matches,
            "quadratic": poly::is_quadratic_basis(&comb),
        }))
    } else {
        let mut s = render(&comb).join("\n");
        s += &format!(
            "\n{} elements, quadratic: {}, matches Buchberger: {matches}\n",
            comb.len(),
            poly::is_quadratic_basis(&comb)
        );
        s
    };
    Ok((out, if matches { EXIT_OK } else { EXIT_MISMATCH }))
}

fn hilbert_command<F: Field>(
    field: F,
    g: &Graph,
    truncation: usize,
    edge: Option<(usize, usize)>,
    as_json: bool,
) -> Result<(String, i32)> {
    let ring = PolyRing::for_vertices(field, g.n());
    let out = match edge {
        None => {
            let h = quotient_hilbert_series(&ring, g, truncation)?;
            if as_json {
                json(&serde_json::json!({ "truncation": truncation, "coefficients": h }))
            } else {
                format!("{h}\n")
            }
        }
        Some(e) => {
            let r = edge_addition(&ring, g, e, truncation)?;
            if as_json {
                json(&r)
            } else {
                let mut s = format!("H_before = {}\nH_after  = {}\n", r.hilbert_a, r.hilbert_b);
                s += &format!("nonzerodivisor: {}\nstrongly free: {}\n", r.nonzerodivisor, r.strongly_free);
                if r.nonzerodivisor {
                    s += &format!("note: nonzerodivisor identity certified up to degree {truncation} only\n");
                }
                s
            }
        }
    };
    Ok((out, EXIT_OK))
}

/// Entry point for the binary: parses `std::env::args`, prints, and returns
/// the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = io::stdout().lock();
            let newline = if out.ends_with('\n') { "" } else { "\n" };
            // a closed pipe is not an error for the computation
            let _ = write!(stdout, "{out}{newline}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
