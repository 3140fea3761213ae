//! Denominator-constrained approximation minima: best simultaneous
//! approximations of a rational point by fractions with denominator at most
//! Q, and the identity tying them to lattice minima when the point is the
//! ratio vector of a target.
//!
//! ```bash
//! cargo run --example constrained_approx
//! ```

use num_bigint::BigInt;
use num_traits::One;
use starlat::bodies::Gauge;
use starlat::exact::{rat, Rational};
use starlat::lattice::{lattice_from_n, ApproxTarget};
use starlat::minima::{constrained_minima, successive_minima, ConstrainedProblem};

fn main() {
    let problem = ConstrainedProblem::new(
        vec![rat(1, 2), rat(1, 2)],
        Rational::one(),
        Gauge::sup(2),
    )
    .unwrap();
    let rep = constrained_minima(&problem, 2).unwrap();
    println!("x = (1/2, 1/2), Q = 1, sup gauge:");
    for (i, (l, w)) in rep.lambdas.iter().zip(&rep.witnesses).enumerate() {
        println!("  λ_{} = {} via p = {:?}", i + 1, l.value, w);
    }

    // with x the ratio vector of n and Q = n_k+1 - 1, the first constrained
    // minimum coincides with the first lattice minimum of Λ(n)
    println!();
    for n in [[2i64, 3, 5], [3, 5, 7], [4, 9, 11]] {
        let target = ApproxTarget::from_i64(&n).unwrap();
        let lattice_min = successive_minima(&lattice_from_n(&target), &Gauge::sup(2));
        let problem = ConstrainedProblem::new(
            target.thetas(),
            Rational::from_integer(target.n_last() - BigInt::one()),
            Gauge::sup(2),
        )
        .unwrap();
        let constrained = constrained_minima(&problem, 1).unwrap();
        println!(
            "n = {target}: λ1(x, Q) = {} = λ1(Λ(n)) = {}",
            constrained.lambdas[0].value, lattice_min.lambdas[0].value
        );
    }
}
