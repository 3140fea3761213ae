//! The lattice generated by the rational Weyl orbit of a target equals
//! `Λ(n)`, and membership in the scaled lattice is a system of linear
//! congruences with an explicit residue witness.
//!
//! ```bash
//! cargo run --example weyl_congruence
//! ```

use num_bigint::BigInt;
use starlat::lattice::{congruence_member, lattice_equal, lattice_from_n, weyl_lattice, ApproxTarget};

fn main() {
    let target = ApproxTarget::from_i64(&[2, 3, 5]).expect("valid target");
    let weyl = weyl_lattice(&target);
    let lat = lattice_from_n(&target);
    println!("n = {target}");
    println!("  Weyl-orbit lattice equals Λ(n): {}", lattice_equal(&weyl, &lat));

    println!("  congruence tests x_i + r·n_i ≡ 0 (mod n_k+1):");
    for x in [[1i64, 4], [2, 3], [0, 0], [1, 0]] {
        let xv: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        match congruence_member(&target, &xv) {
            Some(r) => println!("    x = {x:?}: member, witness r = {r}"),
            None => println!("    x = {x:?}: not a member"),
        }
    }
}
