//! Distance functions (gauges) of the bounded star bodies in play, plus the
//! symmetric polygon `Π(m,n)` cut out by `|m_i·y - n_i·x| <= 1`.
//!
//! Every gauge here evaluates exactly. The Euclidean gauge is kept in squared
//! form end to end (exponent 2 below); all other gauges are rational-valued
//! (exponent 1). Comparisons between mixed exponents cross-power so no square
//! root is ever taken.

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

use crate::exact::{rat_str, Rational, RationalMatrix};
use crate::lattice::ApproxTarget;
use crate::{Error, Result};

/// A gauge value `v` with semantics `gauge = v^(1/exp)`; `exp` is 2 only for
/// the Euclidean norm, which would otherwise be irrational.
#[derive(Clone, Debug)]
pub struct GaugeValue {
    pub value: Rational,
    pub exp: u8,
}

fn rat_pow(r: &Rational, k: u32) -> Rational {
    Rational::new(r.numer().pow(k), r.denom().pow(k))
}

/// Small rational upper bound for `sqrt(r)`, `r >= 0`.
fn rat_sqrt_upper(r: &Rational) -> Rational {
    Rational::new(
        r.numer().sqrt() + BigInt::one(),
        r.denom().sqrt().max(BigInt::one()),
    )
}

impl GaugeValue {
    pub fn new(value: Rational, exp: u8) -> Self {
        debug_assert!(exp == 1 || exp == 2);
        debug_assert!(!value.is_negative());
        GaugeValue { value, exp }
    }

    pub fn zero(exp: u8) -> Self {
        GaugeValue::new(Rational::zero(), exp)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Gauge scaled by a non-negative rational factor.
    pub fn scale(&self, c: &Rational) -> Self {
        debug_assert!(!c.is_negative());
        GaugeValue::new(&self.value * rat_pow(c, self.exp as u32), self.exp)
    }

    /// Gauge divided by a positive rational.
    pub fn div_rational(&self, c: &Rational) -> Self {
        debug_assert!(c.is_positive());
        GaugeValue::new(&self.value / rat_pow(c, self.exp as u32), self.exp)
    }

    /// Product of two gauge values; mixed exponents promote to 2.
    pub fn mul(&self, other: &Self) -> Self {
        let exp = self.exp.max(other.exp);
        let a = if self.exp == exp {
            self.value.clone()
        } else {
            rat_pow(&self.value, 2)
        };
        let b = if other.exp == exp {
            other.value.clone()
        } else {
            rat_pow(&other.value, 2)
        };
        GaugeValue::new(a * b, exp)
    }

    /// k-th power of the gauge.
    pub fn pow(&self, k: u32) -> Self {
        GaugeValue::new(rat_pow(&self.value, k), self.exp)
    }

    /// Compares the gauge against a non-negative rational threshold.
    pub fn cmp_rational(&self, threshold: &Rational) -> Ordering {
        self.value.cmp(&rat_pow(threshold, self.exp as u32))
    }

    /// A rational upper bound on the gauge itself (exact for exponent 1).
    pub fn rational_upper_bound(&self) -> Rational {
        match self.exp {
            1 => self.value.clone(),
            _ => rat_sqrt_upper(&self.value),
        }
    }

    /// Informational decimal rendering; never used in comparisons.
    pub fn approx_f64(&self) -> f64 {
        let v = self
            .value
            .numer()
            .to_string()
            .parse::<f64>()
            .unwrap_or(f64::NAN)
            / self
                .value
                .denom()
                .to_string()
                .parse::<f64>()
                .unwrap_or(f64::NAN);
        if self.exp == 2 {
            v.sqrt()
        } else {
            v
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "value": rat_str(&self.value), "exp": self.exp })
    }
}

impl PartialEq for GaugeValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for GaugeValue {}

impl PartialOrd for GaugeValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GaugeValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.exp, other.exp) {
            (a, b) if a == b => self.value.cmp(&other.value),
            (1, 2) => rat_pow(&self.value, 2).cmp(&other.value),
            (2, 1) => self.value.cmp(&rat_pow(&other.value, 2)),
            _ => unreachable!("exponents are 1 or 2"),
        }
    }
}

/// Distance function of a bounded star body.
#[derive(Clone, Debug)]
pub enum Gauge {
    /// `max |x_i|`; unit body is the cube.
    Sup(usize),
    /// squared Euclidean norm; unit body is the ball.
    Euclid(usize),
    /// generalized honeycomb `{ |x_i| <= 1, |x_i - x_j| <= 1 }`.
    Honeycomb(usize),
    /// two-parameter convex body `B1(α,β)`, `0 < α < β < 1`, in the plane.
    B1 { alpha: Rational, beta: Rational },
    /// intersection of scaled `B1` cylinders derived from a strictly ordered
    /// target `n`; the body whose first minimum certifies decompositions.
    BodyOfN(ApproxTarget),
    /// symmetric convex polygon `Π(m,n)`.
    Polygon(PolygonPi),
}

impl Gauge {
    pub fn sup(k: usize) -> Gauge {
        Gauge::Sup(k)
    }

    pub fn euclid(k: usize) -> Gauge {
        Gauge::Euclid(k)
    }

    pub fn honeycomb(k: usize) -> Result<Gauge> {
        if k < 2 {
            return Err(Error::InvalidParameter("honeycomb needs k >= 2".into()));
        }
        Ok(Gauge::Honeycomb(k))
    }

    pub fn b1(alpha: Rational, beta: Rational) -> Result<Gauge> {
        if !(alpha.is_positive() && alpha < beta && beta < Rational::one()) {
            return Err(Error::InvalidParameter(format!(
                "B1 needs 0 < α < β < 1, got α={alpha}, β={beta}"
            )));
        }
        Ok(Gauge::B1 { alpha, beta })
    }

    /// Body `M₁(n)` of a strictly ordered target.
    pub fn body_of_n(target: ApproxTarget) -> Result<Gauge> {
        if !target.is_strictly_ordered() {
            return Err(Error::InvalidParameter(format!(
                "body of n needs strict ordering 0 < n_1 < ... < n_k+1, got {target}"
            )));
        }
        Ok(Gauge::BodyOfN(target))
    }

    pub fn polygon(p: PolygonPi) -> Gauge {
        Gauge::Polygon(p)
    }

    pub fn dim(&self) -> usize {
        match self {
            Gauge::Sup(k) | Gauge::Euclid(k) | Gauge::Honeycomb(k) => *k,
            Gauge::B1 { .. } | Gauge::Polygon(_) => 2,
            Gauge::BodyOfN(t) => t.k(),
        }
    }

    pub fn exponent(&self) -> u8 {
        if matches!(self, Gauge::Euclid(_)) {
            2
        } else {
            1
        }
    }

    pub fn name(&self) -> String {
        match self {
            Gauge::Sup(_) => "sup".into(),
            Gauge::Euclid(_) => "euclid".into(),
            Gauge::Honeycomb(_) => "honeycomb".into(),
            Gauge::B1 { alpha, beta } => format!("b1:{alpha},{beta}"),
            Gauge::BodyOfN(t) => format!("mn:{t}"),
            Gauge::Polygon(_) => "polygon".into(),
        }
    }

    /// `R` with `{gauge <= 1} ⊆ [-R, R]^k`; sizes enumeration boxes.
    pub fn circumradius_sup(&self) -> Rational {
        match self {
            // B1 sits inside the unit square, and every coordinate pair of
            // the body of n is constrained through a (p,q,k+1) triple, so
            // R = 1 throughout.
            Gauge::Sup(_)
            | Gauge::Euclid(_)
            | Gauge::Honeycomb(_)
            | Gauge::B1 { .. }
            | Gauge::BodyOfN(_) => Rational::one(),
            Gauge::Polygon(p) => p
                .vertices
                .iter()
                .flat_map(|(x, y)| [x.abs(), y.abs()])
                .max()
                .expect("polygon has vertices"),
        }
    }

    /// Exact critical determinant when a closed form is known.
    pub fn known_delta(&self) -> Option<GaugeValue> {
        match self {
            Gauge::Sup(_) => Some(GaugeValue::new(Rational::one(), 1)),
            Gauge::Honeycomb(k) => Some(GaugeValue::new(
                Rational::new(BigInt::from(*k as u64 + 1), BigInt::from(2u8).pow(*k as u32)),
                1,
            )),
            // disk: Δ² = 3/4
            Gauge::Euclid(2) => Some(GaugeValue::new(Rational::new(3.into(), 4.into()), 2)),
            _ => None,
        }
    }

    /// Evaluates the gauge at a rational point. `x = 0` gives 0.
    pub fn evaluate(&self, x: &[Rational]) -> GaugeValue {
        assert_eq!(x.len(), self.dim(), "point dimension");
        match self {
            Gauge::Sup(_) => GaugeValue::new(
                x.iter()
                    .map(|v| v.abs())
                    .max()
                    .unwrap_or_else(Rational::zero),
                1,
            ),
            Gauge::Euclid(_) => GaugeValue::new(x.iter().map(|v| v * v).sum(), 2),
            Gauge::Honeycomb(k) => {
                let mut m = Rational::zero();
                for i in 0..*k {
                    m = m.max(x[i].abs());
                    for j in i + 1..*k {
                        m = m.max((&x[i] - &x[j]).abs());
                    }
                }
                GaugeValue::new(m, 1)
            }
            Gauge::B1 { alpha, beta } => GaugeValue::new(b1_gauge(alpha, beta, &x[0], &x[1]), 1),
            Gauge::BodyOfN(target) => GaugeValue::new(body_of_n_gauge(target, x), 1),
            Gauge::Polygon(p) => GaugeValue::new(p.halfplane_gauge(&x[0], &x[1]), 1),
        }
    }
}

/// Gauge of `B1(α,β)` by slope case analysis: decide which boundary piece the
/// ray through the point leaves, then scale onto it. The boundary consists of
/// horizontal segments at `y = ±1`, vertical segments at `x = ±1` and four
/// arcs with rational parametrizations, so the result is exact. At shared
/// endpoints the segment cases take priority; the boundary point is the same
/// either way.
fn b1_gauge(alpha: &Rational, beta: &Rational, px: &Rational, py: &Rational) -> Rational {
    if px.is_zero() && py.is_zero() {
        return Rational::zero();
    }
    // normalize into the upper half plane (y > 0, or y = 0 and x > 0)
    let (px, py) = if py.is_negative() || (py.is_zero() && px.is_negative()) {
        (-px.clone(), -py.clone())
    } else {
        (px.clone(), py.clone())
    };
    let one = Rational::one();
    if py.is_zero() {
        return px; // exits the vertical segment at (1, 0)
    }
    if px.is_zero() {
        return py; // exits the horizontal segment at (0, 1)
    }
    if px.is_positive() {
        let slope = &py / &px;
        let sv_top = (&one - beta) / (&one - alpha);
        if slope <= sv_top {
            return px;
        }
        let l1_top = (&one + beta) / (&one + alpha);
        if slope >= l1_top {
            return py;
        }
        px / b1_arc_x(alpha, beta, &slope)
    } else {
        let apx = -px;
        let slope = &py / &apx; // |slope| of the ray
        let l2_hi = (&one + beta) / (&one - alpha);
        if slope >= l2_hi {
            return py;
        }
        let l2_lo = (&one - beta) / (&one + alpha);
        if slope <= l2_lo {
            return apx;
        }
        let x = b1_arc_big_x(alpha, beta, &slope);
        apx / x
    }
}

/// `x(t)` of the positive-slope arc.
fn b1_arc_x(alpha: &Rational, beta: &Rational, t: &Rational) -> Rational {
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    let t2 = t * t;
    let num = -(&t2 * rat_pow(&(&one + alpha), 2)) + t * two * (&one - alpha + beta + alpha * beta)
        - rat_pow(&(&one - beta), 2);
    let den = Rational::from_integer(4.into()) * t * (beta - &(alpha * t));
    num / den
}

/// `X(t)` of the negative-slope arc.
fn b1_arc_big_x(alpha: &Rational, beta: &Rational, t: &Rational) -> Rational {
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    let t2 = t * t;
    let num = -(&t2 * rat_pow(&(&one - alpha), 2)) + t * two * (&one + alpha + beta - alpha * beta)
        - rat_pow(&(&one - beta), 2);
    let den = Rational::from_integer(4.into()) * t * (beta + &(alpha * t));
    num / den
}

/// Boundary pieces of `B1(α,β)` for parametrized boundary-point queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B1Piece {
    /// `(t, 1)`
    HorizontalSegment,
    /// `(1, t)`
    VerticalSegment,
    /// `(x(t), t·x(t))`
    ArcPositiveSlope,
    /// `(X(t), -t·X(t))`
    ArcNegativeSlope,
}

/// Closed parameter interval of a boundary piece.
pub fn b1_piece_range(alpha: &Rational, beta: &Rational, piece: B1Piece) -> (Rational, Rational) {
    let one = Rational::one();
    match piece {
        B1Piece::HorizontalSegment => (
            -((&one - alpha) / (&one + beta)),
            (&one + alpha) / (&one + beta),
        ),
        B1Piece::VerticalSegment => (
            -((&one - beta) / (&one + alpha)),
            (&one - beta) / (&one - alpha),
        ),
        B1Piece::ArcPositiveSlope => (
            (&one - beta) / (&one - alpha),
            (&one + beta) / (&one + alpha),
        ),
        B1Piece::ArcNegativeSlope => (
            (&one - beta) / (&one + alpha),
            (&one + beta) / (&one - alpha),
        ),
    }
}

/// Point of the `B1` boundary at parameter `t` of the given piece.
pub fn b1_boundary_point(
    alpha: &Rational,
    beta: &Rational,
    piece: B1Piece,
    t: &Rational,
) -> Result<(Rational, Rational)> {
    let (lo, hi) = b1_piece_range(alpha, beta, piece);
    if t < &lo || t > &hi {
        return Err(Error::InvalidParameter(format!(
            "parameter {t} outside [{lo}, {hi}]"
        )));
    }
    Ok(match piece {
        B1Piece::HorizontalSegment => (t.clone(), Rational::one()),
        B1Piece::VerticalSegment => (Rational::one(), t.clone()),
        B1Piece::ArcPositiveSlope => {
            let x = b1_arc_x(alpha, beta, t);
            let y = t * &x;
            (x, y)
        }
        B1Piece::ArcNegativeSlope => {
            let x = b1_arc_big_x(alpha, beta, t);
            let y = -(t * &x);
            (x, y)
        }
    })
}

/// Gauge of the body `M₁(n)`: the max over all index triples `p < q < r` of
/// the (scaled) `B1` gauge of the projected coordinate pair.
fn body_of_n_gauge(target: &ApproxTarget, x: &[Rational]) -> Rational {
    let k = target.k();
    let n = target.n();
    let mut best = Rational::zero();
    for p in 0..k - 1 {
        for q in p + 1..k {
            // r = k+1 (index k): plain B1 on (x_p, x_q)
            let alpha = Rational::new(n[p].clone(), n[k].clone());
            let beta = Rational::new(n[q].clone(), n[k].clone());
            best = best.max(b1_gauge(&alpha, &beta, &x[p], &x[q]));
            // r < k+1: projected pair in the body scaled by n_{k+1}/n_r
            for r in q + 1..k {
                let alpha = Rational::new(n[p].clone(), n[r].clone());
                let beta = Rational::new(n[q].clone(), n[r].clone());
                let u = &x[p] - &(Rational::new(n[p].clone(), n[r].clone()) * &x[r]);
                let v = &x[q] - &(Rational::new(n[q].clone(), n[r].clone()) * &x[r]);
                let gamma = Rational::new(n[k].clone(), n[r].clone());
                best = best.max(b1_gauge(&alpha, &beta, &u, &v) / gamma);
            }
        }
    }
    best
}

/// Rows `b_i` with 1 on the diagonal and 1/2 elsewhere: the basis of the
/// unique critical lattice of the honeycomb; det = (k+1)/2^k.
pub fn honeycomb_critical_basis(k: usize) -> Result<RationalMatrix> {
    if k < 2 {
        return Err(Error::InvalidParameter(
            "honeycomb basis needs k >= 2".into(),
        ));
    }
    let half = Rational::new(1.into(), 2.into());
    Ok(RationalMatrix::from_fn(k, k, |i, j| {
        if i == j {
            Rational::one()
        } else {
            half.clone()
        }
    }))
}

/// The polygon `Π(m,n) = { (x,y) : |m_i·y - n_i·x| <= 1 }` with exact
/// vertices and area.
#[derive(Clone, Debug)]
pub struct PolygonPi {
    pub m: Vec<BigInt>,
    pub n: Vec<BigInt>,
    /// vertices in counterclockwise order
    pub vertices: Vec<(Rational, Rational)>,
    pub area: Rational,
}

impl PolygonPi {
    /// `max_i |m_i·y - n_i·x|`: the gauge of an intersection of symmetric
    /// slabs is the max of the slab forms.
    fn halfplane_gauge(&self, x: &Rational, y: &Rational) -> Rational {
        self.m
            .iter()
            .zip(&self.n)
            .map(|(mi, ni)| {
                (Rational::from_integer(mi.clone()) * y - Rational::from_integer(ni.clone()) * x)
                    .abs()
            })
            .max()
            .expect("at least one constraint")
    }
}

/// Builds `Π(m,n)` by exact half-plane intersection. All-zero constraint rows
/// are skipped; the region is bounded iff two non-parallel constraint
/// directions remain, which holds exactly when `m` and `n` are independent.
pub fn polygon_pi(m: &[BigInt], n: &[BigInt]) -> Result<PolygonPi> {
    if m.len() != n.len() {
        return Err(Error::Dimension("m and n must have equal length".into()));
    }
    // boundary lines a·x + b·y = c with (a, b) = (-n_i, m_i), c = ±1
    let dirs: Vec<(BigInt, BigInt)> = m
        .iter()
        .zip(n)
        .filter(|(mi, ni)| !(mi.is_zero() && ni.is_zero()))
        .map(|(mi, ni)| (-ni.clone(), mi.clone()))
        .collect();
    let parallel =
        |a: &(BigInt, BigInt), b: &(BigInt, BigInt)| (&a.0 * &b.1 - &a.1 * &b.0).is_zero();
    if dirs.is_empty() || dirs.iter().all(|d| parallel(d, &dirs[0])) {
        return Err(Error::Unbounded);
    }
    let mut vertices: Vec<(Rational, Rational)> = Vec::new();
    let signs = [BigInt::one(), -BigInt::one()];
    for i in 0..dirs.len() {
        for j in i + 1..dirs.len() {
            if parallel(&dirs[i], &dirs[j]) {
                continue;
            }
            let det = &dirs[i].0 * &dirs[j].1 - &dirs[i].1 * &dirs[j].0;
            for si in &signs {
                for sj in &signs {
                    let x = Rational::new(si * &dirs[j].1 - sj * &dirs[i].1, det.clone());
                    let y = Rational::new(sj * &dirs[i].0 - si * &dirs[j].0, det.clone());
                    let inside = dirs.iter().all(|(a, b)| {
                        (Rational::from_integer(a.clone()) * &x
                            + Rational::from_integer(b.clone()) * &y)
                            .abs()
                            <= Rational::one()
                    });
                    if inside {
                        vertices.push((x, y));
                    }
                }
            }
        }
    }
    // sort counterclockwise around the origin (strictly interior) and dedupe
    vertices.sort_by(angular_cmp);
    vertices.dedup();
    if vertices.len() < 3 {
        return Err(Error::Unbounded);
    }
    let mut twice_area = Rational::zero();
    for i in 0..vertices.len() {
        let (x1, y1) = &vertices[i];
        let (x2, y2) = &vertices[(i + 1) % vertices.len()];
        twice_area += x1 * y2 - x2 * y1;
    }
    let area = twice_area.abs() / Rational::from_integer(2.into());
    Ok(PolygonPi {
        m: m.to_vec(),
        n: n.to_vec(),
        vertices,
        area,
    })
}

/// Counterclockwise comparison of nonzero points around the origin, exact.
fn angular_cmp(a: &(Rational, Rational), b: &(Rational, Rational)) -> Ordering {
    let half = |p: &(Rational, Rational)| -> u8 {
        if p.1.is_positive() || (p.1.is_zero() && p.0.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a.0 * &b.1 - &a.1 * &b.0;
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            // same ray: order by distance for a deterministic dedupe
            (&a.0 * &a.0 + &a.1 * &a.1).cmp(&(&b.0 * &b.0 + &b.1 * &b.1))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rv(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn honeycomb_gauge_examples() {
        let g = Gauge::honeycomb(2).unwrap();
        assert_eq!(g.evaluate(&rv(&[(1, 1), (-1, 1)])).value, rat_int(2));
        let g3 = Gauge::honeycomb(3).unwrap();
        assert_eq!(g3.evaluate(&rv(&[(1, 1), (1, 2), (1, 2)])).value, rat_int(1));
    }

    #[test]
    fn honeycomb_matches_pairwise_reduction() {
        let mut rng = StdRng::seed_from_u64(5);
        for k in 2..=5usize {
            let g = Gauge::honeycomb(k).unwrap();
            for _ in 0..30 {
                let x: Vec<Rational> = (0..k)
                    .map(|_| rat(rng.gen_range(-8i64..=8), rng.gen_range(1i64..=4)))
                    .collect();
                let direct = g.evaluate(&x);
                let g2 = Gauge::honeycomb(2).unwrap();
                let pairwise = (0..k)
                    .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                    .map(|(i, j)| g2.evaluate(&[x[i].clone(), x[j].clone()]))
                    .max()
                    .unwrap();
                assert_eq!(direct, pairwise);
            }
        }
    }

    #[test]
    fn euclid_is_squared() {
        let g = Gauge::euclid(2);
        let v = g.evaluate(&rv(&[(1, 2), (1, 2)]));
        assert_eq!(v.value, rat(1, 2));
        assert_eq!(v.exp, 2);
    }

    #[test]
    fn b1_examples() {
        let g = Gauge::b1(rat(1, 4), rat(1, 2)).unwrap();
        // (0,1) sits on the horizontal segment
        assert_eq!(g.evaluate(&rv(&[(0, 1), (1, 1)])).value, rat_int(1));
        // (1,-1) exits through the negative-slope arc at t=1, X(1) = 13/16
        assert_eq!(g.evaluate(&rv(&[(1, 1), (-1, 1)])).value, rat(16, 13));
    }

    #[test]
    fn b1_rejects_bad_parameters() {
        assert!(Gauge::b1(rat(1, 2), rat(1, 2)).is_err());
        assert!(Gauge::b1(rat(1, 2), rat(1, 4)).is_err());
        assert!(Gauge::b1(rat(0, 1), rat(1, 2)).is_err());
        assert!(Gauge::b1(rat(1, 4), rat_int(1)).is_err());
    }

    #[test]
    fn b1_boundary_points_have_gauge_one() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..100 {
            let a = rng.gen_range(1i64..20);
            let b = rng.gen_range(a + 1..21);
            let den = rng.gen_range(21i64..40);
            let alpha = rat(a, den);
            let beta = rat(b, den);
            let g = Gauge::b1(alpha.clone(), beta.clone()).unwrap();
            for piece in [
                B1Piece::HorizontalSegment,
                B1Piece::VerticalSegment,
                B1Piece::ArcPositiveSlope,
                B1Piece::ArcNegativeSlope,
            ] {
                let (lo, hi) = b1_piece_range(&alpha, &beta, piece);
                for frac in [rat(0, 1), rat(1, 3), rat(1, 2), rat(2, 3), rat(1, 1)] {
                    let t = &lo + (&hi - &lo) * &frac;
                    let (x, y) = b1_boundary_point(&alpha, &beta, piece, &t).unwrap();
                    let v = g.evaluate(&[x.clone(), y.clone()]);
                    assert_eq!(
                        v.value,
                        rat_int(1),
                        "piece {piece:?} t={t} α={alpha} β={beta} point=({x},{y})"
                    );
                }
            }
        }
    }

    #[test]
    fn b1_contains_in_unit_square() {
        // B1 ⊂ C1 means the B1 gauge dominates the sup gauge
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..200 {
            let alpha = rat(rng.gen_range(1i64..10), 20);
            let beta = &alpha + rat(rng.gen_range(1i64..9), 20);
            let g = Gauge::b1(alpha, beta).unwrap();
            let s = Gauge::sup(2);
            let x = rv(&[
                (rng.gen_range(-12i64..=12), rng.gen_range(1i64..=6)),
                (rng.gen_range(-12i64..=12), rng.gen_range(1i64..=6)),
            ]);
            assert!(g.evaluate(&x) >= s.evaluate(&x));
        }
    }

    #[test]
    fn b1_midpoints_stay_inside() {
        // convexity probe: midpoints of boundary points have gauge <= 1
        let mut rng = StdRng::seed_from_u64(31);
        let alpha = rat(1, 4);
        let beta = rat(1, 2);
        let g = Gauge::b1(alpha.clone(), beta.clone()).unwrap();
        let pieces = [
            B1Piece::HorizontalSegment,
            B1Piece::VerticalSegment,
            B1Piece::ArcPositiveSlope,
            B1Piece::ArcNegativeSlope,
        ];
        for _ in 0..200 {
            let sample = |rng: &mut StdRng| {
                let piece = pieces[rng.gen_range(0..4)];
                let (lo, hi) = b1_piece_range(&alpha, &beta, piece);
                let t = &lo + (&hi - &lo) * rat(rng.gen_range(0i64..=8), 8);
                let (x, y) = b1_boundary_point(&alpha, &beta, piece, &t).unwrap();
                if rng.gen() {
                    (-x, -y)
                } else {
                    (x, y)
                }
            };
            let (ux, uy) = sample(&mut rng);
            let (wx, wy) = sample(&mut rng);
            let mid = [(&ux + &wx) / rat_int(2), (&uy + &wy) / rat_int(2)];
            assert!(
                g.evaluate(&mid).value <= rat_int(1),
                "u=({ux},{uy}) w=({wx},{wy})"
            );
        }
    }

    #[test]
    fn gauges_are_homogeneous_and_symmetric() {
        let mut rng = StdRng::seed_from_u64(41);
        let t3 = ApproxTarget::from_i64(&[2, 3, 5, 7]).unwrap();
        let gauges: Vec<Gauge> = vec![
            Gauge::sup(3),
            Gauge::euclid(3),
            Gauge::honeycomb(3).unwrap(),
            Gauge::b1(rat(1, 3), rat(2, 3)).unwrap(),
            Gauge::body_of_n(t3).unwrap(),
        ];
        for g in &gauges {
            let k = g.dim();
            for _ in 0..40 {
                let x: Vec<Rational> = (0..k)
                    .map(|_| rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)))
                    .collect();
                let c = rat(rng.gen_range(-7i64..=7), rng.gen_range(1i64..=4));
                if c.is_zero() {
                    continue;
                }
                let scaled: Vec<Rational> = x.iter().map(|v| v * &c).collect();
                assert_eq!(
                    g.evaluate(&scaled),
                    g.evaluate(&x).scale(&c.abs()),
                    "{}",
                    g.name()
                );
                let negated: Vec<Rational> = x.iter().map(|v| -v).collect();
                assert_eq!(g.evaluate(&negated), g.evaluate(&x));
            }
        }
    }

    #[test]
    fn body_of_n_dominates_sup() {
        let mut rng = StdRng::seed_from_u64(43);
        let t = ApproxTarget::from_i64(&[3, 4, 5, 6]).unwrap();
        let g = Gauge::body_of_n(t).unwrap();
        let s = Gauge::sup(3);
        for _ in 0..100 {
            let x: Vec<Rational> = (0..3)
                .map(|_| rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)))
                .collect();
            assert!(g.evaluate(&x) >= s.evaluate(&x));
        }
    }

    #[test]
    fn body_of_n_requires_strict_ordering() {
        let t = ApproxTarget::from_i64(&[1, 1, 2]).unwrap();
        assert!(Gauge::body_of_n(t).is_err());
    }

    #[test]
    fn honeycomb_critical_basis_properties() {
        for k in 2..=5usize {
            let b = honeycomb_critical_basis(k).unwrap();
            let expect =
                Rational::new(BigInt::from(k as u64 + 1), BigInt::from(2u8).pow(k as u32));
            assert_eq!(b.det().unwrap(), expect);
            let g = Gauge::honeycomb(k).unwrap();
            for i in 0..k {
                assert_eq!(g.evaluate(b.row(i)).value, rat_int(1));
            }
        }
        assert_eq!(
            honeycomb_critical_basis(3).unwrap().det().unwrap(),
            rat(1, 2)
        );
        assert!(honeycomb_critical_basis(1).is_err());
    }

    #[test]
    fn known_delta_values() {
        assert_eq!(
            Gauge::honeycomb(3).unwrap().known_delta().unwrap().value,
            rat(1, 2)
        );
        assert_eq!(Gauge::sup(4).known_delta().unwrap().value, rat_int(1));
        let e = Gauge::euclid(2).known_delta().unwrap();
        assert_eq!((e.value, e.exp), (rat(3, 4), 2));
        assert!(Gauge::euclid(3).known_delta().is_none());
        assert!(Gauge::b1(rat(1, 4), rat(1, 2))
            .unwrap()
            .known_delta()
            .is_none());
    }

    #[test]
    fn polygon_examples() {
        let m: Vec<BigInt> = vec![1.into(), 0.into(), 0.into()];
        let n: Vec<BigInt> = vec![1.into(), 1.into(), 2.into()];
        let p = polygon_pi(&m, &n).unwrap();
        assert_eq!(p.area, rat_int(2));

        let m: Vec<BigInt> = vec![1.into(), 0.into()];
        let n: Vec<BigInt> = vec![0.into(), 1.into()];
        let p = polygon_pi(&m, &n).unwrap();
        assert_eq!(p.area, rat_int(4));
        assert_eq!(p.vertices.len(), 4);

        // central symmetry of the area
        let m: Vec<BigInt> = vec![2.into(), (-1).into(), 3.into()];
        let n: Vec<BigInt> = vec![1.into(), 4.into(), 1.into()];
        let a1 = polygon_pi(&m, &n).unwrap().area;
        let mneg: Vec<BigInt> = m.iter().map(|v| -v).collect();
        let nneg: Vec<BigInt> = n.iter().map(|v| -v).collect();
        assert_eq!(a1, polygon_pi(&mneg, &nneg).unwrap().area);
    }

    #[test]
    fn polygon_unbounded_for_dependent_rows() {
        let m: Vec<BigInt> = vec![1.into(), 2.into()];
        let n: Vec<BigInt> = vec![2.into(), 4.into()];
        assert!(matches!(polygon_pi(&m, &n), Err(Error::Unbounded)));
    }

    #[test]
    fn gauge_value_ordering_across_exponents() {
        // 1/2 (exp 1) vs squared value 1/4 (exp 2) are the same gauge
        let a = GaugeValue::new(rat(1, 2), 1);
        let b = GaugeValue::new(rat(1, 4), 2);
        assert_eq!(a, b);
        let c = GaugeValue::new(rat(1, 3), 2);
        assert!(c > a);
    }
}
