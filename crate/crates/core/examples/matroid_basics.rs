//! The matroid toolkit on a small positroid: ranks, circuits, flats, cyclic
//! flats, duality and relaxation of a stressed hyperplane.
//!
//! Run with `cargo run --example matroid_basics`.

use poslab::bits::{self, from_elements};
use poslab::matroid::{paving_from_hyperplanes, Matroid};

fn show(label: &str, sets: &[bits::Set]) {
    let parts: Vec<String> = sets.iter().map(|&s| bits::format(s)).collect();
    println!("{label}: {}", parts.join(" "));
}

fn main() -> poslab::Result<()> {
    // Rank 2 on [4] with 3 and 4 parallel.
    let m = Matroid::from_bases(4, vec![
        from_elements([1, 2]),
        from_elements([1, 3]),
        from_elements([1, 4]),
        from_elements([2, 3]),
        from_elements([2, 4]),
    ])?;
    println!("{}", m.to_json());
    println!("rank of {{3,4}} = {}", m.rank_of(from_elements([3, 4]))?);
    show("circuits", &m.circuits()?);
    show("flats", &m.flats()?);
    show("cyclic flats", &m.cyclic_flats()?.sets());
    show("dual bases", m.dual().bases());
    println!("paving {}, sparse paving {}", m.is_paving(), m.is_sparse_paving());

    let stressed = m.stressed_hyperplanes()?;
    show("stressed hyperplanes", &stressed);
    // Hyperplanes smaller than the rank are stressed vacuously; relax the big one.
    if let Some(&h) = stressed.iter().max_by_key(|&&h| bits::size(h)) {
        let relaxed = m.relax(h)?;
        println!("relaxing {} gives U(2,4): {}", bits::format(h), relaxed == Matroid::uniform(2, 4)?);
    }

    let fano_like = paving_from_hyperplanes(6, 3, &[from_elements([1, 2, 3]), from_elements([3, 4, 5])])?;
    println!("paving matroid from two hyperplanes has {} bases", fano_like.bases().len());
    Ok(())
}
