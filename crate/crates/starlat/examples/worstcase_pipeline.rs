//! The worst-case pipeline for k = 3: targets built over the honeycomb
//! critical lattice with ratio windows close to one have certified
//! decomposition bounds clearing `(1-ε)^k/(k+1)` in k-th powers.
//!
//! ```bash
//! cargo run --release --example worstcase_pipeline
//! ```

use starlat::decompose::{worstcase_sequence, WorstcaseConfig};
use starlat::exact::rat;

fn main() {
    let eps = rat(1, 2);
    let points = worstcase_sequence(3, &eps, 2, &WorstcaseConfig::default()).unwrap();
    for p in &points {
        println!("t = {}, perturbation {:?}", p.point.t, p.point.tvec);
        println!("  n = {}", p.point.target);
        println!("  f_min = {} ≈ {:.6}", p.certificate.f_min.value, p.certificate.f_min.approx_f64());
        println!(
            "  window check: {} > {} (k-th powers)",
            p.check_lhs, p.check_rhs
        );
        println!(
            "  certified cubed ratio bound {} > threshold {}",
            p.certificate.bound_pow_k, p.theorem_threshold
        );
        println!();
    }
}
