//! Build the Le-network of a diagram with explicit edge weights and compute
//! its boundary measurement matrix in exact rational arithmetic.
//!
//! Run with `cargo run --example boundary_measurement`.

use poslab::diagram::LeDiagram;
use poslab::matroid::matroid_from_matrix;
use poslab::network::{boundary_measurement, build_network, support, WeightAssignment};

fn main() -> poslab::Result<()> {
    let d = LeDiagram::from_ascii(".**.\n.***\n..*\n", None)?;
    print!("{}", d.to_ascii());

    let weights = WeightAssignment::from_integers([2, 3, 5, 7, 11, 13]);
    let net = build_network(&d, &weights)?;
    println!(
        "network: {} internal vertices, {} edges, acyclic = {}",
        net.internal_count(),
        net.edges().len(),
        net.is_acyclic()
    );

    let meas = boundary_measurement(&net)?;
    print!("{}", meas.to_text());

    let m = matroid_from_matrix(meas.rows())?;
    println!("rank {} with {} bases", m.rank(), m.bases().len());
    println!("support presentation: {}", support(&meas)?);
    Ok(())
}
