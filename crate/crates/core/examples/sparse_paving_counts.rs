//! Sparse paving positroids: counts from pldc functions against a direct scan
//! of every diagram, and the subset counts against the two-term recurrence.
//!
//! Run with `cargo run --release --example sparse_paving_counts`.

use poslab::enumeration::{count_sparse_paving, count_sparse_paving_brute, sparse_paving_recurrence_report};

fn main() -> poslab::Result<()> {
    for n in 1..=7 {
        let mut row = Vec::new();
        for k in 0..=n {
            let fast = count_sparse_paving(k, n)?;
            let slow = count_sparse_paving_brute(k, n)?;
            assert_eq!(fast, slow, "k = {k}, n = {n}");
            row.push(fast.to_string());
        }
        println!("n = {n}: {}", row.join(" "));
    }

    println!("\n n  subsets  recurrence");
    for r in sparse_paving_recurrence_report(10) {
        let mark = if r.agrees() { "" } else { "  <- differs" };
        println!("{:>2}  {:>7}  {:>10}{mark}", r.n, r.brute_force, r.recurrence);
    }
    Ok(())
}
