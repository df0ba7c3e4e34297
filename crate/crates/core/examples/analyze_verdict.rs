//! Produce the full verdict the `analyze` subcommand prints, straight from
//! the library.
//!
//! Run with `cargo run --example analyze_verdict`.

use poslab::cli::analyze;
use poslab::diagram::LeDiagram;

fn main() -> poslab::Result<()> {
    let d = LeDiagram::full_rectangle(2, 5)?;
    let verdict = analyze(&d)?;
    print!("{}", verdict.to_text(&d));
    println!("{}", serde_json::to_string_pretty(&verdict).expect("verdict serializes"));
    Ok(())
}
