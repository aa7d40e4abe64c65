//! Exhaustive checks over all small graphs.
//!
//! ```text
//! cargo run --release --example exhaustive_sweep -- 4
//! ```

use beid::sweep::{gluing_sweep, run_sweep, Check, SweepConfig};

fn main() {
    let nmax = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let cfg = SweepConfig {
        nmax,
        checks: vec![Check::Gb, Check::Quadratic, Check::CoxErskine, Check::Cone, Check::Betti, Check::Dual],
        ..Default::default()
    };
    print!("{}", run_sweep(&cfg).to_text());

    let iso = SweepConfig { nmax: nmax + 2, canonical: true, checks: vec![Check::CoxErskine], ..Default::default() };
    print!("{}", run_sweep(&iso).to_text());

    let glue = gluing_sweep(nmax);
    println!(
        "gluing {} closed graphs: {} gluings, {} not Koszul",
        glue.closed_graphs,
        glue.gluings,
        glue.violations.len()
    );
}
