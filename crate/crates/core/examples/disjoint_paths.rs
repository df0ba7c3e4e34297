//! Read positroid bases from vertex-disjoint path systems and compare them
//! with the nonzero maximal minors of the measurement matrix.
//!
//! Run with `cargo run --example disjoint_paths`.

use poslab::bits;
use poslab::diagram::LeDiagram;
use poslab::matroid::matroid_from_matrix;
use poslab::network::{bases_from_flows, boundary_measurement, build_network, has_disjoint_path_system, WeightAssignment};

fn main() -> poslab::Result<()> {
    let d = LeDiagram::from_ascii(".*\n**\n", None)?;
    let net = build_network(&d, &WeightAssignment::Primes)?;
    for j in bits::k_subsets(d.n(), d.k()) {
        println!("{:>8}: {}", bits::format(j), has_disjoint_path_system(&net, j)?);
    }

    let flows = bases_from_flows(&d)?;
    let minors = matroid_from_matrix(boundary_measurement(&net)?.rows())?;
    println!("flow bases agree with nonzero minors: {}", flows == minors.bases());
    Ok(())
}
