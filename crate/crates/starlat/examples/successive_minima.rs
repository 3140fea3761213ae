//! Exact successive minima of different star-body gauges over lattices,
//! including the honeycomb body over its critical lattice where the first
//! minimum is exactly one.
//!
//! ```bash
//! cargo run --example successive_minima
//! ```

use starlat::bodies::{honeycomb_critical_basis, Gauge};
use starlat::lattice::{lattice_from_n, ApproxTarget, Lattice};
use starlat::minima::successive_minima;

fn main() {
    let target = ApproxTarget::from_i64(&[1, 1, 2]).expect("valid target");
    let lat = lattice_from_n(&target);
    for gauge in [Gauge::sup(2), Gauge::euclid(2), Gauge::honeycomb(2).unwrap()] {
        let rep = successive_minima(&lat, &gauge);
        let lambdas: Vec<String> = rep
            .lambdas
            .iter()
            .map(|l| format!("{}^(1/{})", l.value, l.exp))
            .collect();
        println!(
            "Λ({target}), {:>9}: λ = [{}], ratio value {} (exp {})",
            gauge.name(),
            lambdas.join(", "),
            rep.ratio.value,
            rep.ratio.exp
        );
    }

    println!();
    for k in 2..=4 {
        let basis = honeycomb_critical_basis(k).unwrap();
        let lat = Lattice::from_basis(basis).unwrap();
        let gauge = Gauge::honeycomb(k).unwrap();
        let rep = successive_minima(&lat, &gauge);
        println!(
            "honeycomb critical lattice k={k}: det = {}, λ1 = {} (admissible, boundary contact)",
            lat.det(),
            rep.lambdas[0].value
        );
    }
}
