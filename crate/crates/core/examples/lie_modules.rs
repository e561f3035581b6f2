//! Decomposition of the Lie modules into simples: the major-index rule
//! against the necklace-character route.
//!
//! Run with `cargo run --example lie_modules`.

use grfunc::lie::{lie_module, lie_module_oracle};
use grfunc::partition::factorial;

fn main() {
    for n in 1..=8u32 {
        let lie = lie_module(n);
        let oracle = lie_module_oracle(n);
        assert_eq!(*lie, oracle, "the two routes agree");
        println!(
            "Lie({n})  (total dimension {} = {}!):",
            lie.total_dimension(),
            n - 1
        );
        for (lam, m) in lie.iter() {
            println!("  {m} x [{lam}]  (dim {})", lam.dim_irrep());
        }
        assert_eq!(lie.total_dimension(), factorial(n - 1));
    }

    // Conjugating every label gives the sign-twisted module.
    let twisted = lie_module(5).dagger();
    println!("Lie(5) twisted by sign:");
    for (lam, m) in twisted.iter() {
        println!("  {m} x [{lam}]");
    }
}
