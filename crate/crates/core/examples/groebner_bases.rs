//! The Gröbner basis of a binomial edge ideal, read off admissible paths and
//! checked against Buchberger's algorithm.
//!
//! ```text
//! cargo run --example groebner_bases
//! ```

use beid::ideal::{admissible_paths, build_ideal, combinatorial_gb};
use beid::poly::{buchberger, is_quadratic_basis, PolyRing, PrimeField, Rationals};
use beid::{Graph, Labeling};

fn main() -> beid::Result<()> {
    // edges {1,3} and {2,3}: the path 1-3-2 is admissible between 1 and 2
    let g = Graph::new(3, [(1, 3), (2, 3)])?;
    let id = Labeling::identity(3);
    for p in admissible_paths(&g, &id, 1, 2)? {
        println!("admissible path {:?}", p.vertices);
    }

    let ring = PolyRing::for_vertices(Rationals, 3);
    let comb = combinatorial_gb(&ring, &g, &id);
    let oracle = buchberger(&ring, &build_ideal(&ring, &g, &id).generators)?;
    println!("from paths:");
    for p in &comb {
        println!("  {}", ring.render(p));
    }
    println!("equal to Buchberger: {}", comb == oracle);
    println!("quadratic: {}", is_quadratic_basis(&comb));

    // relabeling so that 3 sits in the middle gives the path P3 and a quadratic basis
    let middle = Labeling::parse("1,3,2")?;
    println!("under 1,3,2 quadratic: {}", is_quadratic_basis(&combinatorial_gb(&ring, &g, &middle)));

    // the same construction over a prime field
    let fp = PolyRing::for_vertices(PrimeField::new(101)?, 4);
    let c4 = Graph::cycle(4);
    let basis = buchberger(&fp, &build_ideal(&fp, &c4, &Labeling::identity(4)).generators)?;
    println!("C4 over GF(101): {} elements", basis.len());
    for p in &basis {
        println!("  {}", fp.render(p));
    }
    Ok(())
}
