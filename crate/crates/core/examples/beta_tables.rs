//! Composition factors of the injective polynomial functors on free groups:
//! the bigraded tables per arity and individual isotypical rows.
//!
//! Run with `cargo run --example beta_tables`.

use grfunc::beta::{beta_class, psi_pcoalg_class};
use grfunc::partition::{binomial, factorial, partitions_of, Partition};

fn main() {
    for d in [3u32, 4] {
        let psi = psi_pcoalg_class(d).unwrap();
        println!("arity {d}, isotypical rows:");
        for nu in partitions_of(d) {
            println!("  [{nu}]: {}", psi.row(&nu));
        }
        for r in 1..=3u32 {
            let dim = psi.eval_dimension(r);
            assert_eq!(
                dim,
                (factorial(d) * binomial((d + r - 1) as u64, (r - 1) as u64)) as i64
            );
            println!("  rank-{r} dimension {dim}");
        }
        println!();
    }

    // The sign column keeps exactly one factor in each polynomial degree
    // above the socle pair; the trivial row stays simple.
    for nu in [
        Partition::row(6),
        Partition::column(6),
        Partition::new(vec![5, 1]),
        Partition::new(vec![3, 2, 1]),
    ] {
        println!("beta[{nu}] = {}", beta_class(&nu).unwrap());
    }
}
