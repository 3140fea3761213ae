//! Minima converge along convergent lattice sequences: the scaled lattices
//! `d·t·Λ(n(t))` of a constructed run approach the prescribed lattice, and
//! their first minima approach its first minimum.
//!
//! ```bash
//! cargo run --example lattice_convergence
//! ```

use starlat::bodies::Gauge;
use starlat::construct::{find_admissible, prepare};
use starlat::exact::{rat, Rational, RationalMatrix};
use starlat::lattice::Lattice;
use starlat::minima::convergence_check;

fn main() {
    let params = prepare(RationalMatrix::identity(2), vec![rat(1, 2), rat(3, 4)]).unwrap();
    let run = find_admissible(&params, 6, 60, 2).unwrap();
    let scaled: Vec<Lattice> = run
        .points
        .iter()
        .map(|p| {
            p.lattice()
                .scale(&Rational::from_integer(&params.d * &p.t))
                .unwrap()
        })
        .collect();
    let limit = Lattice::from_basis(params.basis.clone()).unwrap();
    for gauge in [Gauge::sup(2), Gauge::honeycomb(2).unwrap()] {
        let errors = convergence_check(&scaled, &limit, &gauge);
        println!("gauge {}:", gauge.name());
        for (p, row) in run.points.iter().zip(&errors) {
            let deviations: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            println!("  t = {:>3}: |λ_i(dtΛ(n(t))) - λ_i(Λ)| = [{}]", p.t, deviations.join(", "));
        }
    }
}
