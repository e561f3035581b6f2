//! Graded homology dimension tables for wedges of circles and the derived
//! tensor dimensions of the associated filtration.
//!
//! Run with `cargo run --example hochschild`.

use grfunc::hochschild::{hh_dual_numbers, hh_inj_fin, hh_inj_gamma, tor_gamma_dim};
use grfunc::partition::Partition;

fn main() {
    // Purity: one nonzero degree per arity.
    for d in 0..=5u32 {
        let t = hh_inj_gamma(d, 2).unwrap();
        println!(
            "inj-gamma arity {d}, rank 2: degree {d} has dimension {}",
            t.dimension(d)
        );
    }

    // Isotypical tables for the resolved coefficient families.
    println!();
    for lam in [
        Partition::row(4),
        Partition::column(4),
        Partition::new(vec![2, 1, 1]),
    ] {
        match hh_inj_fin(&lam, 2) {
            Ok(t) => {
                println!("inj-fin[{lam}] at rank 2:");
                for (deg, row) in t.rows.iter().rev() {
                    println!("  degree {deg}: dim {:>3}   {}", row.dimension, row.class);
                }
            }
            Err(e) => println!("inj-fin[{lam}]: {e}"),
        }
    }

    // Dual numbers: one row per homological degree.
    println!("\ndual numbers at rank 1, degrees 0..6:");
    let t = hh_dual_numbers(1, 6).unwrap();
    for (deg, row) in &t.rows {
        println!("  degree {deg}: dim {}", row.dimension);
    }

    // Derived tensor dimensions: concentrated in degree n - m.
    println!("\ntor table (m rows, n columns):");
    print!("{:>6}", "");
    for n in 1..=5u32 {
        print!("{:>10}", n);
    }
    println!();
    for m in 1..=5u32 {
        print!("{:>6}", m);
        for n in 1..=5u32 {
            let (deg, dim) = tor_gamma_dim(m, n).unwrap();
            print!("{:>10}", format!("{dim}@{deg}"));
        }
        println!();
    }
}
