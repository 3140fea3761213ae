//! Tour of the star-body gauges: closed forms, the two-parameter convex body
//! with its exact rational boundary arcs, and the polygon of a pair.
//!
//! ```bash
//! cargo run --example star_bodies
//! ```

use num_bigint::BigInt;
use starlat::bodies::{b1_boundary_point, b1_piece_range, polygon_pi, B1Piece, Gauge};
use starlat::exact::rat;

fn main() {
    let point = [rat(1, 1), rat(-1, 1)];
    for gauge in [
        Gauge::sup(2),
        Gauge::euclid(2),
        Gauge::honeycomb(2).unwrap(),
        Gauge::b1(rat(1, 4), rat(1, 2)).unwrap(),
    ] {
        let v = gauge.evaluate(&point);
        println!(
            "{:>12} at (1, -1): value {} (exp {})",
            gauge.name(),
            v.value,
            v.exp
        );
    }

    println!();
    let alpha = rat(1, 4);
    let beta = rat(1, 2);
    println!("boundary of b1:1/4,1/2 (each point has gauge exactly 1):");
    for piece in [
        B1Piece::HorizontalSegment,
        B1Piece::VerticalSegment,
        B1Piece::ArcPositiveSlope,
        B1Piece::ArcNegativeSlope,
    ] {
        let (lo, hi) = b1_piece_range(&alpha, &beta, piece);
        let mid = (&lo + &hi) / rat(2, 1);
        let (x, y) = b1_boundary_point(&alpha, &beta, piece, &mid).unwrap();
        println!("  {piece:?}: t in [{lo}, {hi}], midpoint ({x}, {y})");
    }

    println!();
    let m: Vec<BigInt> = vec![1.into(), 0.into(), 0.into()];
    let n: Vec<BigInt> = vec![1.into(), 1.into(), 2.into()];
    let p = polygon_pi(&m, &n).unwrap();
    println!("polygon of m={m:?}, n={n:?}: area {}", p.area);
    for (x, y) in &p.vertices {
        println!("  vertex ({x}, {y})");
    }
}
