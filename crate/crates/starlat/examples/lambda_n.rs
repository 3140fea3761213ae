//! Build the approximation lattice `Λ(n)` of a target vector, check its
//! determinant, and confirm that the integer orthogonal section equals the
//! polar lattice.
//!
//! ```bash
//! cargo run --example lambda_n
//! ```

use starlat::lattice::{lattice_equal, lattice_from_n, orthogonal_section, ApproxTarget};

fn main() {
    for n in [vec![1i64, 1, 2], vec![2, 3, 5], vec![3, 7, 8, 12]] {
        let target = ApproxTarget::from_i64(&n).expect("valid target");
        let lat = lattice_from_n(&target);
        println!("n = {target}");
        println!("  det Λ(n)      = {}  (1/n_k+1)", lat.det());
        println!("  canonical basis rows of the scaled lattice:");
        for i in 0..lat.dim() {
            let row: Vec<String> = lat
                .hnf_matrix()
                .row(i)
                .iter()
                .map(|v| v.to_string())
                .collect();
            println!("    [{}] / {}", row.join(", "), lat.scalar_den());
        }
        let polar = lat.polar().expect("full rank");
        let section = orthogonal_section(target.n()).expect("nonzero last entry");
        println!(
            "  orthogonal section == polar lattice: {}",
            lattice_equal(&section, &polar)
        );
        println!(
            "  det Λ · det Λ* = {}",
            lat.det() * polar.det()
        );
        println!();
    }
}
