//! Exhaustive minima-ratio sweeps over all ordered primitive targets up to a
//! height bound: the product statistic stays strictly below the planar
//! Euclidean constant (squared: 4/3), and the first-power sup statistic never
//! exceeds one.
//!
//! ```bash
//! cargo run --release --example ratio_sweep
//! ```

use starlat::bodies::Gauge;
use starlat::minima::{sweep_ratio, SweepMode};

fn main() {
    let res = sweep_ratio(2, &Gauge::euclid(2), 30, SweepMode::Product).unwrap();
    println!(
        "euclid product sweep, N=30: {} targets, max squared ratio {} ≈ {:.5} at {:?}",
        res.rows.len(),
        res.max_ratio.value,
        res.max_ratio.approx_f64().powi(2),
        res.argmax
    );
    println!("  (the strict per-target bound squared is 4/3 ≈ 1.33333)");

    let res = sweep_ratio(2, &Gauge::sup(2), 30, SweepMode::FirstPower).unwrap();
    println!(
        "sup first-power sweep, N=30: max λ1²/det = {} at {:?}",
        res.max_ratio.value, res.argmax
    );

    let res = sweep_ratio(2, &Gauge::honeycomb(2).unwrap(), 20, SweepMode::Product).unwrap();
    println!(
        "honeycomb product sweep, N=20: max ratio {} (bound 2^k/(k+1) = 4/3)",
        res.max_ratio.value
    );
}
