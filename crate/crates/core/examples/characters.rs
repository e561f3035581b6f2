//! Symmetric-group character tables and the orthogonality relations.
//!
//! Run with `cargo run --example characters`.

use grfunc::partition::partitions_of;
use grfunc::symfunc::{char_table, ClassFunction};

fn main() {
    let n = 5;
    let table = char_table(n);
    let parts = table.partitions();

    print!("{:>12}", "");
    for mu in parts {
        print!("{:>9}", mu.to_string());
    }
    println!();
    for lam in parts {
        print!("{:>12}", lam.to_string());
        for mu in parts {
            print!("{:>9}", table.value(lam, mu));
        }
        println!();
    }

    // Orthonormality under the centralizer-weighted inner product.
    let a = ClassFunction::irreducible(&parts[1]);
    let b = ClassFunction::irreducible(&parts[2]);
    println!(
        "\n<chi^{}, chi^{}> = {}",
        parts[1],
        parts[1],
        a.inner_product(&a)
    );
    println!(
        "<chi^{}, chi^{}> = {}",
        parts[1],
        parts[2],
        a.inner_product(&b)
    );

    let id = partitions_of(n)
        .into_iter()
        .find(|p| p.len() == n as usize)
        .unwrap();
    println!("\ncharacter values at the identity are the dimensions:");
    for lam in parts {
        println!("  chi^{lam}({id}) = {}", table.value(lam, &id));
    }
}
