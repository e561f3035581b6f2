//! Plethysm of Schur functions via power-sum substitution.
//!
//! Run with `cargo run --example plethysm`.

use grfunc::partition::{partitions_of, Partition};
use grfunc::symfunc::{plethysm, SchurVector};

fn s(parts: &[u32]) -> SchurVector {
    SchurVector::basis(Partition::new(parts.to_vec()))
}

fn main() {
    for (lam, mu) in [
        (&[2][..], &[1, 1][..]),
        (&[1, 1], &[1, 1]),
        (&[2], &[2]),
        (&[1, 1], &[2]),
        (&[3], &[1, 1]),
        (&[2, 1], &[2]),
    ] {
        let result = plethysm(&s(lam), &s(mu)).unwrap();
        println!("s{lam:?} o s{mu:?} = {result}");
    }

    // Composing symmetric powers: s[2] o s[2] evaluated on a rank-2 module
    // has the dimension of the degree-4 invariants it came from.
    let comp = plethysm(&s(&[2]), &s(&[2])).unwrap();
    let dim: u64 = comp
        .integer_terms()
        .iter()
        .map(|(nu, m)| *m as u64 * nu.dim_schur_eval(2))
        .sum();
    println!("\ndim (S^2 o S^2)(k^2) = {dim}");

    // Decomposing the full degree-3 tensor power: the plethysms against the
    // partitions of 3 refine it.
    let mut total = 0u64;
    for lam in partitions_of(3) {
        let plet = plethysm(&SchurVector::basis(lam.clone()), &s(&[2])).unwrap();
        let d: u64 = plet
            .integer_terms()
            .iter()
            .map(|(nu, m)| *m as u64 * nu.dim_schur_eval(2))
            .sum();
        total += lam.dim_irrep() * d;
        println!(
            "s[{lam}] o s[2] contributes {d} (weight {})",
            lam.dim_irrep()
        );
    }
    println!("weighted total {total} = dim (k^3)^(x3) with k^3 = S^2(k^2)");
}
