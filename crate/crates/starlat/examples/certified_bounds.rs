//! Certified decomposition lower bounds: the first minimum of the target body
//! over `Λ(n)` bounds every decomposition's statistic from below, and the
//! polygon of any pair obeys the Minkowski product chain.
//!
//! ```bash
//! cargo run --example certified_bounds
//! ```

use num_bigint::BigInt;
use starlat::decompose::{brute_force_decomposition, certify_lower_bound, minkowski_chain_check};
use starlat::lattice::ApproxTarget;

fn main() {
    for n in [[2i64, 3, 5], [3, 5, 7], [4, 7, 9]] {
        let target = ApproxTarget::from_i64(&n).unwrap();
        let cert = certify_lower_bound(&target).unwrap();
        let brute = brute_force_decomposition(target.n(), None).unwrap();
        println!(
            "n = {target}: f_min = {}, certified (ratio)^2 >= {}, optimum (ratio)^2 = {}, sound: {}",
            cert.f_min.value,
            cert.bound_pow_k,
            brute.ratio_pow_k(2),
            cert.dominated_by(&brute, 2),
        );
    }

    println!();
    let m: Vec<BigInt> = vec![1.into(), 0.into(), 0.into()];
    let n: Vec<BigInt> = vec![1.into(), 1.into(), 2.into()];
    let rep = minkowski_chain_check(&m, &n).unwrap();
    println!(
        "pair polygon of m={m:?}, n={n:?}: area {}, λ1·λ2 = {} >= 2/area = {}",
        rep.area, rep.product.value, rep.lower_bound
    );
}
