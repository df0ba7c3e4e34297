//! Count labeled positroids by property and print the tables in markdown.
//! Pass a maximum n as the first argument (default 6).
//!
//! Run with `cargo run --release --example count_tables -- 7`.

use std::time::Instant;

use poslab::enumeration::{emit_table, Property, TableOptions};

fn main() -> poslab::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for property in [Property::Transversal, Property::Fundamental, Property::Paving] {
        let start = Instant::now();
        let table = emit_table(property, n_max, &TableOptions::default())?;
        println!("{} ({:.2?})", property.name(), start.elapsed());
        println!("{}", table.to_markdown());
    }
    Ok(())
}
