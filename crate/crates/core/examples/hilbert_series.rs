//! Hilbert series of `S/J_G` and the effect of adding one edge.
//!
//! ```text
//! cargo run --example hilbert_series
//! ```

use beid::ideal::{edge_addition, quotient_hilbert_series};
use beid::poly::{PolyRing, Rationals};
use beid::Graph;

fn main() -> beid::Result<()> {
    let ring = PolyRing::for_vertices(Rationals, 2);
    println!("K2: {}", quotient_hilbert_series(&ring, &Graph::complete(2), 6)?);

    let g = Graph::new(4, [(1, 2), (1, 3), (2, 3), (3, 4)])?;
    let ring = PolyRing::for_vertices(Rationals, 4);
    let r = edge_addition(&ring, &g, (2, 4), 10)?;
    println!("before: {}", r.hilbert_a);
    println!("after:  {}", r.hilbert_b);
    println!("nonzerodivisor: {}", r.nonzerodivisor);
    println!("strongly free: {}", r.strongly_free);
    Ok(())
}
