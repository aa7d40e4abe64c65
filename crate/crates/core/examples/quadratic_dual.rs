//! Relations of the quadratic dual in closed form, verified against the
//! general annihilator construction.
//!
//! ```text
//! cargo run --example quadratic_dual
//! ```

use beid::dual::{dual_generators, dual_generators_general, dual_relation_count, same_span, verify_orthogonality};
use beid::ideal::build_ideal;
use beid::poly::{PolyRing, Rationals};
use beid::{Graph, Labeling};

fn main() -> beid::Result<()> {
    let g = Graph::path(3);
    let rels = dual_generators(&g);
    println!("{} relations (expected {}):", rels.len(), dual_relation_count(&g));
    for r in &rels {
        println!("  {}", r.render());
    }

    let orth = verify_orthogonality(&g, &rels);
    println!(
        "orthogonal: {}, rank {} of annihilator dimension {}",
        orth.all_orthogonal, orth.span_dim, orth.annihilator_dim
    );

    let ring = PolyRing::for_vertices(Rationals, g.n());
    let ideal = build_ideal(&ring, &g, &Labeling::identity(g.n()));
    let general = dual_generators_general(&ideal.generators, ring.nvars())?;
    println!("general construction: {} relations, same span: {}", general.len(), same_span(&rels, &general));
    Ok(())
}
