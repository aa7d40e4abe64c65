//! Deciding closedness three ways, and the Koszul classifier built on it.
//!
//! ```text
//! cargo run --example closed_graphs
//! ```

use beid::closedness::{
    check_labeling_closed, fast_verdict, interval_labeling_search, is_closed_search, koszul_classify,
    lexbfs_closed_labeling,
};
use beid::{Graph, Labeling};

fn main() -> beid::Result<()> {
    let net = Graph::new(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])?;
    let cases = [
        ("P4", Graph::path(4)),
        ("C4", Graph::cycle(4)),
        ("K_1,3", Graph::star(3)),
        ("net", net),
        ("K4 minus an edge", Graph::new(4, [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])?),
    ];
    for (name, g) in &cases {
        let search = is_closed_search(g)?;
        let fast = fast_verdict(g);
        let interval = interval_labeling_search(g)?;
        println!("{name}:");
        println!("  closed labeling by search: {}", search.as_ref().map_or("none".into(), |l| l.to_string()));
        println!(
            "  chordal {}, claw {:?}, narrowness violation {:?}",
            fast.chordal, fast.claw, fast.narrowness_violation
        );
        println!("  interval facets under: {}", interval.map_or("none".into(), |l| l.to_string()));
        println!("  LexBFS labeling: {}", lexbfs_closed_labeling(g).map_or("none".into(), |l| l.to_string()));
        let status = koszul_classify(g);
        println!("  koszul: {:?} ({:?})", status.verdict, status.reason);
    }

    // closedness depends on the labeling: P3 with its middle vertex first is not closed
    let p3 = Graph::path(3);
    let middle_first = Labeling::parse("2,1,3")?;
    println!("P3 under 2,1,3 closed: {}", check_labeling_closed(&p3, &middle_first));
    Ok(())
}
