//! Minimal-height-product decompositions `n = u·p + v·q`: exhaustive optimum,
//! reduced-plane heuristic, and the exhaustive sweep of the k-th-powered
//! statistic with its exact upper bound `2^k/(k+1)`.
//!
//! ```bash
//! cargo run --release --example decompose_vector
//! ```

use num_bigint::BigInt;
use starlat::decompose::{brute_force_decomposition, c0_sweep, heuristic_decomposition};

fn main() {
    for n in [vec![1i64, 1, 2], vec![5, 8, 13], vec![7, 10, 12]] {
        let nb: Vec<BigInt> = n.iter().map(|&x| BigInt::from(x)).collect();
        let brute = brute_force_decomposition(&nb, None).unwrap();
        let heur = heuristic_decomposition(&nb).unwrap();
        println!("n = {n:?}");
        println!(
            "  optimum: {} = {}·{:?} + {}·{:?}, product {}, squared ratio {}",
            format!("{n:?}"),
            brute.u,
            brute.p,
            brute.v,
            brute.q,
            brute.product,
            brute.ratio_pow_k(2)
        );
        println!("  heuristic upper bound: product {}", heur.product);
    }

    println!();
    let sweep = c0_sweep(2, 12).unwrap();
    println!(
        "sweep h(n) <= 12: {} classes, max squared ratio {} at {:?} (bound 4/3)",
        sweep.rows.len(),
        sweep.max_ratio_pow_k,
        sweep.argmax
    );
}
