//! Paving positroids from pldc functions: the boundary numbering, condition
//! checks, the diagram D(f), its obstruction sets and recognition back to f.
//!
//! Run with `cargo run --example pldc_functions`.

use poslab::bits;
use poslab::enumeration::positroid;
use poslab::paving::{
    boundary_numbering, build_pldc_diagram, is_sparse_paving_f, obstructions, recognize_paving_positroid,
    PldcFunction,
};

fn main() -> poslab::Result<()> {
    print!("{}", boundary_numbering(4, 10)?.to_text());

    let rejected = PldcFunction::from_pairs(4, 10, &[(1, 2), (3, 1), (9, 3)])?;
    println!("{rejected}: ldc {}, pldc violations {:?}", rejected.is_ldc(), rejected.pldc_violations());

    let f = PldcFunction::from_pairs(4, 10, &[(1, 1), (3, 1), (6, 1), (9, 1)])?;
    let d = build_pldc_diagram(&f)?;
    println!("{f}");
    print!("{}", d.to_ascii());

    let family = obstructions(&f)?;
    let sets: Vec<String> = family.all().into_iter().map(bits::format).collect();
    println!("obstructions: {}", sets.join(" "));

    let m = positroid(&d)?;
    let mut dependent = m.dependent_hyperplanes()?;
    let mut expected = family.hyperplanes();
    dependent.sort_unstable();
    expected.sort_unstable();
    println!("dependent hyperplanes match: {}", dependent == expected);
    println!("sparse paving: {} (matroid says {})", is_sparse_paving_f(&f)?, m.is_sparse_paving());
    println!("recognized: {:?}", recognize_paving_positroid(&d)?.map(|g| g == f));
    Ok(())
}
