//! Cones and gluings at free vertices.
//!
//! ```text
//! cargo run --example cone_and_gluing
//! ```

use beid::closedness::{cone_koszul_classify, koszul_classify};
use beid::graph::{cone, free_vertices, glue_at_free_vertices, independence_triangle, is_chordal};
use beid::Graph;

fn main() -> beid::Result<()> {
    for (name, g) in [
        ("P3", Graph::path(3)),
        ("3K1", Graph::empty(3)),
        ("C4", Graph::cycle(4)),
        ("2K2", Graph::new(4, [(1, 2), (3, 4)])?),
    ] {
        let c = cone(&g);
        let status = cone_koszul_classify(&g);
        println!(
            "cone over {name}: chordal base {}, independent triple {:?} -> {:?} ({:?})",
            is_chordal(&g),
            independence_triangle(&g),
            status.verdict,
            status.reason
        );
        assert_eq!(koszul_classify(&c).verdict, status.verdict);
    }

    let triangle = Graph::complete(3);
    println!("free vertices of K3: {:?}", free_vertices(&triangle));
    let bowtie = glue_at_free_vertices(&triangle, 3, &triangle, 1)?;
    print!("bowtie:\n{}", bowtie.to_edge_list());
    println!("bowtie koszul: {:?}", koszul_classify(&bowtie).verdict);

    // the middle of P3 lies in two maximal cliques
    match glue_at_free_vertices(&Graph::path(3), 2, &triangle, 1) {
        Ok(_) => unreachable!(),
        Err(e) => println!("gluing at a non-free vertex: {e}"),
    }
    Ok(())
}
