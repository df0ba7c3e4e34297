//! Parse a diagram, check the Le and double-Le conditions, and read off its
//! boundary labels, loops and loopless reduction.
//!
//! Run with `cargo run --example le_diagrams`.

use poslab::diagram::LeDiagram;

fn main() -> poslab::Result<()> {
    let d = LeDiagram::from_ascii("*.*...**.*\n.**.***\n", None)?;
    print!("{}", d.to_ascii());
    println!("k = {}, n = {}, bullets = {}", d.k(), d.n(), d.bullet_count());
    println!("Le: {}, double-Le: {}", d.validate_le(), d.validate_sq()?);

    let labels = d.boundary_labeling();
    println!("sources {:?}, sinks {:?}", labels.sources(), labels.sinks());
    println!("loops {:?}, coloops {:?}", d.loops(), d.coloops());

    let reduced = d.loopless_reduction();
    println!("loopless reduction (n = {}):", reduced.n());
    print!("{}", reduced.to_ascii());
    println!("json: {}", reduced.to_json());

    let bad = LeDiagram::from_ascii(".*\n*.\n", None)?;
    if let Some(v) = bad.le_violation() {
        println!("rejected: {v}");
    }
    Ok(())
}
