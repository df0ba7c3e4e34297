//! Decide transversality of positroids three ways: the antichain inequality
//! on cyclic flats, the support presentation, and the rank-2 statistic tau.
//!
//! Run with `cargo run --example transversality`.

use poslab::diagram::LeDiagram;
use poslab::enumeration::positroid;
use poslab::network::{boundary_measurement, build_network, support, WeightAssignment};
use poslab::transversal::{
    find_crossing, is_fundamental_transversal, is_minimal_presentation, is_transversal_rank2, tau,
    transversal_matroid, transversal_violation, CrossingMode,
};

fn main() -> poslab::Result<()> {
    for text in [".*\n**\n", "**\n**\n", "*.*...**.*\n.**.***\n"] {
        let d = LeDiagram::from_ascii(text, None)?;
        let m = positroid(&d)?;
        print!("{}", d.to_ascii());
        match transversal_violation(&m)? {
            None => println!("  transversal (fundamental: {})", is_fundamental_transversal(&m)?),
            Some(w) => println!(
                "  not transversal: meet rank {} exceeds {} on {} flats",
                w.intersection_rank,
                w.alternating_sum,
                w.flats.len()
            ),
        }

        let system = support(&boundary_measurement(&build_network(&d, &WeightAssignment::Primes)?)?)?;
        println!(
            "  support {system}: minimal {}, crossing {:?}",
            is_minimal_presentation(&system),
            find_crossing(&system, CrossingMode::Verbatim)
        );
        println!("  M[support] equals the positroid: {}", transversal_matroid(&system) == m);

        if d.k() == 2 {
            let t = tau(&d.loopless_reduction())?;
            println!("  tau = {} (rank-2 verdict {})", t.value, is_transversal_rank2(&d)?);
        }
    }
    Ok(())
}
