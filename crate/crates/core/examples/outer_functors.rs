//! Outer subobjects of the injectives, coaction cokernels, and extension
//! dimensions in the full and outer categories.
//!
//! Run with `cargo run --example outer_functors`.

use grfunc::outer::{adbar_euler, ext1_dim, ext1_out_dim, is_outer_beta, omega_beta};
use grfunc::partition::{partitions_of, Partition};

fn main() {
    for nu in [
        Partition::row(4),
        Partition::column(4),
        Partition::new(vec![3, 1]),
        Partition::new(vec![2, 2]),
        Partition::new(vec![2, 1, 1]),
    ] {
        let rep = omega_beta(&nu).unwrap();
        println!("nu = [{nu}]  (method {})", rep.method);
        println!("  beta   {}", rep.beta);
        println!("  euler  {}", rep.euler_difference);
        match (&rep.omega, &rep.coker) {
            (Some(omega), Some(coker)) => {
                println!("  omega  {omega}");
                println!("  coker  {coker}");
            }
            _ => println!("  omega/coker not determined; Euler data only"),
        }
        println!("  injective stays outer: {}", is_outer_beta(&nu));
    }

    // The extension matrix in degree 5: rows rho of size 4, columns nu of
    // size 5, full category next to the outer one.
    println!("\next1 matrix, |nu| = 5 (full / outer):");
    let rhos = partitions_of(4);
    let nus = partitions_of(5);
    print!("{:>12}", "");
    for nu in &nus {
        print!("{:>12}", nu.to_string());
    }
    println!();
    for rho in &rhos {
        print!("{:>12}", rho.to_string());
        for nu in &nus {
            print!(
                "{:>12}",
                format!("{}/{}", ext1_dim(rho, nu), ext1_out_dim(rho, nu))
            );
        }
        println!();
    }

    // Euler data alone still pins the virtual difference for unresolved nu.
    let rep = adbar_euler(&Partition::new(vec![3, 2])).unwrap();
    println!(
        "\nadbar euler difference at [3,2]: {}",
        rep.euler_difference
    );
}
