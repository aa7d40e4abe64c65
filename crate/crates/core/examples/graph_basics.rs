//! Parsing graphs and querying the predicates the rest of the crate uses.
//!
//! ```text
//! cargo run --example graph_basics
//! ```

use beid::graph::{
    clique_facets, distances, find_claw, find_induced_cycle, free_vertices, independence_triangle, is_chordal,
    narrowness_violation, parse_graph6, to_graph6,
};
use beid::Graph;

fn main() -> beid::Result<()> {
    // a triangle with a pendant vertex, as an edge list
    let g = Graph::parse("# triangle plus pendant\n4\n1 2\n1 3\n2 3\n3 4\n")?;
    println!("edges: {:?}", g.edges());
    println!("graph6: {}", to_graph6(&g));
    assert_eq!(parse_graph6(&to_graph6(&g))?, g);

    let facets = clique_facets(&g);
    println!("maximal cliques: {:?}", facets.facets);
    println!("free vertices: {:?}", free_vertices(&g));
    println!("chordal: {}", is_chordal(&g));

    let dist = distances(&g);
    println!("diameter: {}", dist.max_finite());

    let c5 = Graph::cycle(5);
    println!("C5 induced cycle: {:?}", find_induced_cycle(&c5));

    let claw = Graph::star(3);
    println!("K_1,3 claw: {:?}", find_claw(&claw));
    println!("independent triple in 3 isolated vertices: {:?}", independence_triangle(&Graph::empty(3)));

    // a tree with a long spine: chordal, but not narrow
    let spider = Graph::new(7, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)])?;
    if let Some(v) = narrowness_violation(&spider) {
        println!("spider: vertex {} is far from the geodesic {:?}", v.vertex, v.geodesic);
    }
    Ok(())
}
