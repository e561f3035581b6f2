//! Partition and tableau combinatorics: enumeration, conjugation, hook
//! dimensions and Schur-functor evaluations.
//!
//! Run with `cargo run --example partitions`.

use grfunc::partition::{partitions_of, standard_tableaux, Partition};

fn main() {
    println!("partitions of 6:");
    for lam in partitions_of(6) {
        println!(
            "  {:<12} conjugate {:<12} dim {:>3}   rank-3 Schur dim {:>3}",
            lam.to_string(),
            lam.conjugate().to_string(),
            lam.dim_irrep(),
            lam.dim_schur_eval(3)
        );
    }

    let lam = Partition::new(vec![3, 2]);
    println!("\nstandard tableaux of shape {lam} (major index in brackets):");
    for t in standard_tableaux(&lam).unwrap() {
        let rows: Vec<String> = t
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        println!("  {} [maj {}]", rows.join(" / "), t.major_index());
    }

    let total: u64 = partitions_of(8)
        .iter()
        .map(|l| l.dim_irrep() * l.dim_irrep())
        .sum();
    println!("\nsum of squared dimensions over partitions of 8: {total} = 8!");
}
