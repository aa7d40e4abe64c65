//! The full pipeline as one JSON report.
//!
//! ```text
//! cargo run --example analysis_report
//! ```

use beid::report::{analyze, AnalysisOptions};
use beid::Graph;

fn main() -> beid::Result<()> {
    let g = Graph::parse("4\n1 2\n2 3\n3 4\n4 1\n")?;
    let opts = AnalysisOptions { truncation: Some(6), field: "p:32003".parse()?, ..Default::default() };
    println!("{}", analyze(&g, &opts)?.to_json());
    Ok(())
}
