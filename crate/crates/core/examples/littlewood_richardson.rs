//! Littlewood-Richardson products and individual coefficients.
//!
//! Run with `cargo run --example littlewood_richardson`.

use grfunc::partition::Partition;
use grfunc::symfunc::{lr_coefficient, lr_expand, schur_product, SchurVector};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn main() {
    for (lam, mu) in [
        (p(&[1]), p(&[1])),
        (p(&[2, 1]), p(&[1])),
        (p(&[2]), p(&[1, 1])),
        (p(&[2, 1]), p(&[2, 1])),
    ] {
        println!("s[{lam}] * s[{mu}]:");
        for (nu, c) in lr_expand(&lam, &mu).iter() {
            println!("  {c} s[{nu}]");
        }
    }

    // A single coefficient, and the conjugation symmetry.
    let (lam, mu, nu) = (p(&[2, 1]), p(&[2, 1]), p(&[3, 2, 1]));
    println!(
        "c^[{nu}]_([{lam}],[{mu}]) = {}",
        lr_coefficient(&lam, &mu, &nu)
    );
    println!(
        "c^[{}]_([{}],[{}]) = {}",
        nu.conjugate(),
        lam.conjugate(),
        mu.conjugate(),
        lr_coefficient(&lam.conjugate(), &mu.conjugate(), &nu.conjugate())
    );

    // Products extend bilinearly to whole vectors.
    let mut v = SchurVector::basis(p(&[2]));
    v.add_assign(&SchurVector::basis(p(&[1, 1])));
    println!(
        "(s[2] + s[1,1]) * s[1] = {}",
        schur_product(&v, &SchurVector::basis(p(&[1])))
    );
}
