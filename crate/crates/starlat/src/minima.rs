//! Exact successive minima of a gauge over a lattice, the constrained
//! approximation minima, and exhaustive ratio sweeps over all targets up to a
//! height bound.
//!
//! The engine is plain coefficient-box enumeration over a size-reduced
//! canonical basis. Completeness: a point with gauge <= λ lies in
//! `[-λR, λR]^k` (R the sup circumradius of the unit body), so its
//! coefficient vector is bounded by the column sums of the inverse basis.
//! Minima are attained because the candidate sets are finite and bodies are
//! closed (gauge comparisons use `<=`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bodies::{Gauge, GaugeValue};
use crate::exact::{rat_str, Rational, RationalMatrix};
use crate::lattice::{big_json, lattice_from_n, ApproxTarget, Lattice};
use crate::{Error, Result};

/// Successive minima `λ_1 <= ... <= λ_k` with attaining witnesses.
#[derive(Clone, Debug)]
pub struct MinimaReport {
    pub lambdas: Vec<GaugeValue>,
    pub witnesses: Vec<Vec<Rational>>,
    pub det: Rational,
    /// `λ_1 ⋯ λ_k / det`
    pub ratio: GaugeValue,
    /// `λ_1^k / det`
    pub ratio_first_power: GaugeValue,
}

impl MinimaReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambdas": self.lambdas.iter().map(|l| l.to_json()).collect::<Vec<_>>(),
            "witnesses": self.witnesses.iter()
                .map(|w| w.iter().map(rat_str).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "det": rat_str(&self.det),
            "ratio": self.ratio.to_json(),
            "ratio_first_power": self.ratio_first_power.to_json(),
        })
    }
}

/// Pairwise integer size reduction; keeps the row span intact and only
/// applies a step when it strictly shrinks the squared norm, which terminates
/// because squared norms live in a discrete set.
fn size_reduce(basis: &mut RationalMatrix) {
    let k = basis.rows();
    let dot = |b: &RationalMatrix, i: usize, j: usize| -> Rational {
        (0..k).map(|c| &b[(i, c)] * &b[(j, c)]).sum()
    };
    loop {
        let mut changed = false;
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                let njj = dot(basis, j, j);
                if njj.is_zero() {
                    continue;
                }
                let mu = dot(basis, i, j) / &njj;
                let c = mu.round();
                if c.is_zero() {
                    continue;
                }
                let old = dot(basis, i, i);
                let new_norm = &old - (Rational::from_integer(2.into()) * &mu - &c) * &c * &njj;
                if new_norm < old {
                    for col in 0..k {
                        let s = &basis[(j, col)] * &c;
                        basis[(i, col)] = &basis[(i, col)] - &s;
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // deterministic row order
    let mut rows = basis.row_vecs();
    rows.sort_by(|a, b| {
        let na: Rational = a.iter().map(|v| v * v).sum();
        let nb: Rational = b.iter().map(|v| v * v).sum();
        na.cmp(&nb).then_with(|| a.cmp(b))
    });
    *basis = RationalMatrix::from_rows(rows);
}

/// Incremental exact rank tracker over the rationals.
struct RankTracker {
    reduced: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RankTracker {
    fn new() -> Self {
        RankTracker {
            reduced: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.reduced.len()
    }

    /// Returns true (and absorbs the vector) when it enlarges the span.
    fn try_add(&mut self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (c, r) in v.iter_mut().zip(row) {
                let s = r * &f;
                *c = &*c - &s;
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            Some(p) => {
                let inv = v[p].clone();
                for c in v.iter_mut() {
                    *c = &*c / &inv;
                }
                self.reduced.push(v);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }
}

/// All nonzero lattice points with gauge at most `bound`, with their gauge
/// values, sorted by (gauge, coordinates).
pub fn enumerate_below(
    lattice: &Lattice,
    gauge: &Gauge,
    bound: &GaugeValue,
) -> Vec<(Vec<Rational>, GaugeValue)> {
    let mut basis = lattice.canonical_basis();
    size_reduce(&mut basis);
    enumerate_with_basis(&basis, gauge, bound)
}

fn enumerate_with_basis(
    basis: &RationalMatrix,
    gauge: &Gauge,
    bound: &GaugeValue,
) -> Vec<(Vec<Rational>, GaugeValue)> {
    let k = basis.rows();
    let inv = basis.inverse().expect("basis is invertible");
    let radius = bound.rational_upper_bound() * gauge.circumradius_sup();
    // |c_i| <= radius * (column i sum of |inv|)
    let limits: Vec<i64> = (0..k)
        .map(|i| {
            let colsum: Rational = (0..k).map(|j| inv[(j, i)].abs()).sum();
            (&radius * colsum)
                .floor()
                .to_integer()
                .to_i64()
                .expect("enumeration box fits in i64")
        })
        .collect();
    let mut out = Vec::new();
    let mut coeff = vec![0i64; k];
    let zero_point = vec![Rational::zero(); k];
    enumerate_rec(
        basis,
        gauge,
        bound,
        &limits,
        0,
        &zero_point,
        &mut coeff,
        &mut out,
    );
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    basis: &RationalMatrix,
    gauge: &Gauge,
    bound: &GaugeValue,
    limits: &[i64],
    depth: usize,
    partial: &[Rational],
    coeff: &mut [i64],
    out: &mut Vec<(Vec<Rational>, GaugeValue)>,
) {
    let k = basis.rows();
    if depth == k {
        if coeff.iter().all(|&c| c == 0) {
            return;
        }
        let value = gauge.evaluate(partial);
        if &value <= bound {
            out.push((partial.to_vec(), value));
        }
        return;
    }
    let m = limits[depth];
    // start below coefficient -m and walk up by adding the basis row
    let mut point: Vec<Rational> = partial
        .iter()
        .enumerate()
        .map(|(j, p)| p - &basis[(depth, j)] * Rational::from_integer((m + 1).into()))
        .collect();
    for c in -m..=m {
        for (j, x) in point.iter_mut().enumerate() {
            *x = &*x + &basis[(depth, j)];
        }
        coeff[depth] = c;
        enumerate_rec(basis, gauge, bound, limits, depth + 1, &point, coeff, out);
    }
}

/// Exact successive minima by greedy independent selection from the
/// enumerated candidates. The result only depends on the lattice, not on its
/// basis representation (the engine canonicalizes first).
pub fn successive_minima(lattice: &Lattice, gauge: &Gauge) -> MinimaReport {
    assert_eq!(lattice.dim(), gauge.dim(), "gauge/lattice dimension");
    let k = lattice.dim();
    let mut basis = lattice.canonical_basis();
    size_reduce(&mut basis);
    // the reduced basis rows are k independent points, so this bound suffices
    let mut bound = (0..k)
        .map(|i| gauge.evaluate(basis.row(i)))
        .max()
        .expect("k >= 1");
    for _ in 0..64 {
        let points = enumerate_with_basis(&basis, gauge, &bound);
        let mut tracker = RankTracker::new();
        let mut lambdas = Vec::with_capacity(k);
        let mut witnesses = Vec::with_capacity(k);
        for (p, v) in &points {
            if tracker.try_add(p) {
                lambdas.push(v.clone());
                witnesses.push(p.clone());
                if tracker.rank() == k {
                    break;
                }
            }
        }
        if tracker.rank() == k {
            let det = lattice.det();
            let ratio = lambdas
                .iter()
                .skip(1)
                .fold(lambdas[0].clone(), |acc, l| acc.mul(l))
                .div_rational(&det);
            let ratio_first_power = lambdas[0].pow(k as u32).div_rational(&det);
            return MinimaReport {
                lambdas,
                witnesses,
                det,
                ratio,
                ratio_first_power,
            };
        }
        bound = bound.scale(&Rational::from_integer(2.into()));
    }
    unreachable!("basis vectors bound the k-th minimum");
}

/// Denominator-constrained approximation problem: minima of
/// `g(p_{k+1}·x - (p_1..p_k))` over integer vectors with `|p_{k+1}| <= Q`.
#[derive(Clone, Debug)]
pub struct ConstrainedProblem {
    pub x: Vec<Rational>,
    pub q_bound: Rational,
    pub gauge: Gauge,
}

impl ConstrainedProblem {
    pub fn new(x: Vec<Rational>, q_bound: Rational, gauge: Gauge) -> Result<Self> {
        if q_bound < Rational::one() {
            return Err(Error::InvalidParameter("Q must be at least 1".into()));
        }
        if gauge.dim() != x.len() {
            return Err(Error::Dimension(format!(
                "gauge dimension {} vs x length {}",
                gauge.dim(),
                x.len()
            )));
        }
        Ok(ConstrainedProblem { x, q_bound, gauge })
    }
}

/// Minima plus the integer approximants that attain them.
#[derive(Clone, Debug)]
pub struct ConstrainedReport {
    pub lambdas: Vec<GaugeValue>,
    /// witness vectors `p` in `Z^{k+1}`, linearly independent
    pub witnesses: Vec<Vec<BigInt>>,
    /// residues `p_{k+1}·x - (p_1..p_k)` of the witnesses
    pub points: Vec<Vec<Rational>>,
}

impl ConstrainedReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambdas": self.lambdas.iter().map(|l| l.to_json()).collect::<Vec<_>>(),
            "witnesses": self.witnesses.iter()
                .map(|w| w.iter().map(big_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "points": self.points.iter()
                .map(|p| p.iter().map(rat_str).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// First `count` constrained minima (`count <= k`). Independence of the
/// witnesses is taken in `Z^{k+1}`; the search range for the last coordinate
/// is `|p_{k+1}| <= floor(Q)`.
pub fn constrained_minima(problem: &ConstrainedProblem, count: usize) -> Result<ConstrainedReport> {
    let k = problem.x.len();
    if count == 0 || count > k {
        return Err(Error::InvalidParameter(format!(
            "count must be in 1..={k}, got {count}"
        )));
    }
    let qmax = problem.q_bound.floor().to_integer();
    // unit approximants and the rounded approximant make k+1 independent
    // integer vectors, so this initial bound always suffices for count <= k
    let mut bound = (0..k)
        .map(|j| {
            let e: Vec<Rational> = (0..k)
                .map(|c| {
                    if c == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            problem.gauge.evaluate(&e)
        })
        .max()
        .unwrap();
    let frac: Vec<Rational> = problem.x.iter().map(|v| v - v.round()).collect();
    bound = bound.max(problem.gauge.evaluate(&frac));
    for _ in 0..64 {
        let mut candidates: Vec<(GaugeValue, Vec<BigInt>, Vec<Rational>)> = Vec::new();
        let radius = bound.rational_upper_bound() * problem.gauge.circumradius_sup();
        let mut q = -qmax.clone();
        while q <= qmax {
            let qr = Rational::from_integer(q.clone());
            // integer parts m_j with |q·x_j - m_j| <= radius
            let lows: Vec<BigInt> = problem
                .x
                .iter()
                .map(|xj| (&qr * xj - &radius).ceil().to_integer())
                .collect();
            let highs: Vec<BigInt> = problem
                .x
                .iter()
                .map(|xj| (&qr * xj + &radius).floor().to_integer())
                .collect();
            if lows.iter().zip(&highs).any(|(l, h)| l > h) {
                q += 1;
                continue;
            }
            let mut m = lows.clone();
            'outer: loop {
                let point: Vec<Rational> = (0..k)
                    .map(|j| &qr * &problem.x[j] - Rational::from_integer(m[j].clone()))
                    .collect();
                let nonzero = !q.is_zero() || m.iter().any(|v| !v.is_zero());
                if nonzero {
                    let value = problem.gauge.evaluate(&point);
                    if value <= bound {
                        let mut p = m.clone();
                        p.push(q.clone());
                        candidates.push((value, p, point));
                    }
                }
                // odometer over m
                let mut j = 0;
                loop {
                    if j == k {
                        break 'outer;
                    }
                    if m[j] < highs[j] {
                        m[j] += 1;
                        break;
                    }
                    m[j] = lows[j].clone();
                    j += 1;
                }
            }
            q += 1;
        }
        candidates.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        let mut tracker = RankTracker::new();
        let mut lambdas = Vec::new();
        let mut witnesses = Vec::new();
        let mut points = Vec::new();
        for (v, p, pt) in &candidates {
            let pr: Vec<Rational> = p
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect();
            if tracker.try_add(&pr) {
                lambdas.push(v.clone());
                witnesses.push(p.clone());
                points.push(pt.clone());
                if tracker.rank() == count {
                    return Ok(ConstrainedReport {
                        lambdas,
                        witnesses,
                        points,
                    });
                }
            }
        }
        bound = bound.scale(&Rational::from_integer(2.into()));
    }
    unreachable!("unit approximants bound the constrained minima");
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// statistic `λ_1⋯λ_k / det`
    Product,
    /// statistic `λ_1^k / det`
    FirstPower,
}

impl SweepMode {
    pub fn name(&self) -> &'static str {
        match self {
            SweepMode::Product => "product",
            SweepMode::FirstPower => "first_power",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub n: Vec<i64>,
    pub ratio: GaugeValue,
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub mode: SweepMode,
    pub max_ratio: GaugeValue,
    pub argmax: Vec<i64>,
    pub rows: Vec<SweepRow>,
}

/// All ordered primitive targets with `n_{k+1} <= max_last` as i64 tuples.
pub fn ordered_primitive_tuples(k: usize, max_last: u64) -> Vec<Vec<i64>> {
    fn rec(cur: &mut Vec<i64>, idx: usize, min: i64, max_last: i64, out: &mut Vec<Vec<i64>>) {
        let k1 = cur.len();
        if idx == k1 {
            let g = cur.iter().fold(0i64, |a, &b| a.gcd(&b));
            if g == 1 {
                out.push(cur.clone());
            }
            return;
        }
        for v in min..=max_last {
            cur[idx] = v;
            rec(cur, idx + 1, v, max_last, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; k + 1];
    rec(&mut cur, 0, 1, max_last as i64, &mut out);
    out
}

/// Exhaustive ratio sweep over all targets in `U^{k+1}` with
/// `n_{k+1} <= max_last`. In product mode, whenever the gauge has a known
/// critical determinant the Minkowski-type bound `ratio <= 1/Δ` is asserted
/// per target (strictly `<` for the planar Euclidean gauge); a violation is
/// an identity error, never a warning.
pub fn sweep_ratio(k: usize, gauge: &Gauge, max_last: u64, mode: SweepMode) -> Result<SweepResult> {
    if max_last < 2 {
        return Err(Error::InvalidParameter("height bound must be >= 2".into()));
    }
    if gauge.dim() != k {
        return Err(Error::Dimension(format!(
            "gauge dimension {} vs k = {k}",
            gauge.dim()
        )));
    }
    if matches!(gauge, Gauge::BodyOfN(_) | Gauge::Polygon(_)) {
        return Err(Error::InvalidParameter(
            "sweep needs a fixed body (sup, euclid, honeycomb or b1)".into(),
        ));
    }
    let tuples = ordered_primitive_tuples(k, max_last);
    let bound_recip: Option<GaugeValue> = gauge.known_delta().map(|d| {
        GaugeValue::new(
            Rational::new(d.value.denom().clone(), d.value.numer().clone()),
            d.exp,
        )
    });
    let euclid_plane = matches!(gauge, Gauge::Euclid(2));
    let rows: Result<Vec<SweepRow>> = tuples
        .par_iter()
        .map(|n| {
            let target = ApproxTarget::from_i64(n).expect("tuples are valid targets");
            let lat = lattice_from_n(&target);
            // both ratio statistics are scale-invariant; the integer lattice
            // n_{k+1}·Λ(n) avoids denominator bookkeeping in the enumeration
            let scaled = lat
                .scale(&Rational::from_integer(target.n_last().clone()))
                .unwrap();
            let report = successive_minima(&scaled, gauge);
            let ratio = match mode {
                SweepMode::Product => report.ratio.clone(),
                SweepMode::FirstPower => report.ratio_first_power.clone(),
            };
            if mode == SweepMode::Product {
                if let Some(b) = &bound_recip {
                    let ok = if euclid_plane { ratio < *b } else { ratio <= *b };
                    if !ok {
                        return Err(Error::IdentityViolation(format!(
                            "minima product bound failed at n={n:?}: ratio value {}",
                            ratio.value
                        )));
                    }
                }
            }
            Ok(SweepRow {
                n: n.clone(),
                ratio,
            })
        })
        .collect();
    let mut rows = rows?;
    rows.sort_by(|a, b| a.n.cmp(&b.n));
    // ties resolved toward the largest denominator, then the lex-least n
    let best = rows
        .iter()
        .max_by(|a, b| {
            a.ratio
                .cmp(&b.ratio)
                .then_with(|| a.n.last().cmp(&b.n.last()))
                .then_with(|| b.n.cmp(&a.n))
        })
        .expect("sweep is nonempty");
    Ok(SweepResult {
        mode,
        max_ratio: best.ratio.clone(),
        argmax: best.n.clone(),
        rows,
    })
}

/// Table of exact deviations `|λ_i(g, L_t) - λ_i(g, L)|` along a lattice
/// sequence (squared-value differences for the Euclidean gauge).
pub fn convergence_check(
    sequence: &[Lattice],
    limit: &Lattice,
    gauge: &Gauge,
) -> Vec<Vec<Rational>> {
    let lim = successive_minima(limit, gauge);
    sequence
        .iter()
        .map(|lat| {
            let rep = successive_minima(lat, gauge);
            rep.lambdas
                .iter()
                .zip(&lim.lambdas)
                .map(|(a, b)| (&a.value - &b.value).abs())
                .collect()
        })
        .collect()
}

/// Verifies the witness contract on a report: witnesses are independent,
/// attain their minima, and no `i` independent points exist strictly below
/// `λ_i`.
pub fn verify_witnesses(lattice: &Lattice, gauge: &Gauge, report: &MinimaReport) -> Result<()> {
    let k = lattice.dim();
    let mut tracker = RankTracker::new();
    for (i, (w, l)) in report.witnesses.iter().zip(&report.lambdas).enumerate() {
        if gauge.evaluate(w) != *l {
            return Err(Error::IdentityViolation(format!(
                "witness {i} does not attain its minimum"
            )));
        }
        if !tracker.try_add(w) {
            return Err(Error::IdentityViolation(format!(
                "witness {i} is dependent on earlier witnesses"
            )));
        }
    }
    for i in 0..k {
        let below = enumerate_below(lattice, gauge, &report.lambdas[i]);
        let mut strict = RankTracker::new();
        for (p, v) in &below {
            if v < &report.lambdas[i] {
                strict.try_add(p);
            }
        }
        if strict.rank() > i {
            return Err(Error::IdentityViolation(format!(
                "{} independent points strictly below λ_{}",
                strict.rank(),
                i + 1
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::honeycomb_critical_basis;
    use crate::exact::{rat, rat_int, random_unimodular};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn target(n: &[i64]) -> ApproxTarget {
        ApproxTarget::from_i64(n).unwrap()
    }

    #[test]
    fn enumerate_below_small_lattice() {
        let lat = lattice_from_n(&target(&[1, 1, 2]));
        let pts = enumerate_below(&lat, &Gauge::sup(2), &GaugeValue::new(rat(1, 2), 1));
        let coords: Vec<Vec<Rational>> = pts.iter().map(|(p, _)| p.clone()).collect();
        assert_eq!(coords.len(), 4);
        for want in [
            vec![rat(1, 2), rat(1, 2)],
            vec![rat(-1, 2), rat(-1, 2)],
            vec![rat(1, 2), rat(-1, 2)],
            vec![rat(-1, 2), rat(1, 2)],
        ] {
            assert!(coords.contains(&want), "missing {want:?}");
        }
        assert_eq!(pts.len() % 2, 0);

        // below the first minimum nothing shows up
        let none = enumerate_below(
            &Lattice::standard(2),
            &Gauge::sup(2),
            &GaugeValue::new(rat(1, 2), 1),
        );
        assert!(none.is_empty());
    }

    #[test]
    fn minima_of_lambda_112() {
        let lat = lattice_from_n(&target(&[1, 1, 2]));
        let rep = successive_minima(&lat, &Gauge::sup(2));
        assert_eq!(rep.lambdas[0].value, rat(1, 2));
        assert_eq!(rep.lambdas[1].value, rat(1, 2));
        assert_eq!(rep.ratio.value, rat(1, 2)); // (1/4)/(1/2)

        let rep = successive_minima(&lat, &Gauge::euclid(2));
        assert_eq!(rep.lambdas[0].value, rat(1, 2)); // squared
        assert_eq!(rep.lambdas[1].value, rat(1, 2));
        assert_eq!(rep.ratio.value, rat_int(1)); // squared ratio
    }

    #[test]
    fn minima_of_standard_lattice() {
        let rep = successive_minima(&Lattice::standard(3), &Gauge::sup(3));
        for l in &rep.lambdas {
            assert_eq!(l.value, rat_int(1));
        }
    }

    #[test]
    fn honeycomb_critical_lattice_has_unit_first_minimum() {
        for k in 2..=4usize {
            let lat = Lattice::from_basis(honeycomb_critical_basis(k).unwrap()).unwrap();
            let rep = successive_minima(&lat, &Gauge::honeycomb(k).unwrap());
            assert_eq!(rep.lambdas[0].value, rat_int(1), "k={k}");
        }
    }

    #[test]
    fn minima_are_basis_invariant() {
        let mut rng = StdRng::seed_from_u64(19);
        let lat = lattice_from_n(&target(&[2, 3, 7]));
        let base = successive_minima(&lat, &Gauge::sup(2));
        for _ in 0..10 {
            let u = random_unimodular(&mut rng, 2, 8);
            let ub = u.to_rational().mul(lat.basis());
            let relat = Lattice::from_basis(ub).unwrap();
            let rep = successive_minima(&relat, &Gauge::sup(2));
            assert_eq!(rep.lambdas, base.lambdas);
        }
    }

    #[test]
    fn minima_scale_covariantly() {
        let lat = lattice_from_n(&target(&[1, 2, 5]));
        let rep = successive_minima(&lat, &Gauge::sup(2));
        let scaled = lat.scale(&rat(3, 2)).unwrap();
        let rep2 = successive_minima(&scaled, &Gauge::sup(2));
        for (a, b) in rep.lambdas.iter().zip(&rep2.lambdas) {
            assert_eq!(a.scale(&rat(3, 2)), *b);
        }
    }

    #[test]
    fn witness_contract_holds() {
        for n in [vec![1i64, 1, 2], vec![2, 3, 7], vec![1, 4, 9]] {
            let lat = lattice_from_n(&target(&n));
            for gauge in [Gauge::sup(2), Gauge::euclid(2), Gauge::honeycomb(2).unwrap()] {
                let rep = successive_minima(&lat, &gauge);
                verify_witnesses(&lat, &gauge, &rep).unwrap();
            }
        }
    }

    #[test]
    fn constrained_examples() {
        let p =
            ConstrainedProblem::new(vec![rat(1, 2), rat(1, 2)], rat_int(1), Gauge::sup(2)).unwrap();
        let rep = constrained_minima(&p, 2).unwrap();
        assert_eq!(rep.lambdas[0].value, rat(1, 2));
        assert_eq!(rep.lambdas[1].value, rat(1, 2));

        // integer x has an exact approximant
        let p = ConstrainedProblem::new(vec![rat_int(3), rat_int(-2)], rat_int(4), Gauge::sup(2))
            .unwrap();
        let rep = constrained_minima(&p, 1).unwrap();
        assert!(rep.lambdas[0].is_zero());

        // Q below 1 is rejected
        assert!(
            ConstrainedProblem::new(vec![rat(1, 2), rat(1, 2)], rat(1, 2), Gauge::sup(2)).is_err()
        );
    }

    #[test]
    fn constrained_first_minimum_matches_lattice_minimum() {
        // x = ratios of n, Q = n_{k+1} - 1: the candidate residues coincide
        // with the nonzero points of Λ(n)
        for n in [vec![1i64, 1, 2], vec![2, 3, 5], vec![3, 5, 7]] {
            let t = target(&n);
            for gauge in [Gauge::sup(2), Gauge::euclid(2)] {
                let lam = successive_minima(&lattice_from_n(&t), &gauge);
                let prob = ConstrainedProblem::new(
                    t.thetas(),
                    Rational::from_integer(t.n_last() - BigInt::one()),
                    gauge.clone(),
                )
                .unwrap();
                let con = constrained_minima(&prob, 1).unwrap();
                assert_eq!(con.lambdas[0], lam.lambdas[0], "n={n:?}");
            }
        }
    }

    #[test]
    fn sweep_product_euclid_tiny() {
        let res = sweep_ratio(2, &Gauge::euclid(2), 2, SweepMode::Product).unwrap();
        // targets: (1,1,1), (1,1,2), (1,2,2); max ratio 1 at (1,1,2)
        assert_eq!(res.max_ratio.value, rat_int(1));
        assert_eq!(res.argmax, vec![1, 1, 2]);
        for row in &res.rows {
            assert!(row.ratio.value < rat(4, 3));
        }
    }

    #[test]
    fn sweep_sup_ratios_bounded_by_one() {
        let res = sweep_ratio(2, &Gauge::sup(2), 12, SweepMode::Product).unwrap();
        for row in &res.rows {
            assert!(row.ratio.value <= rat_int(1), "n={:?}", row.n);
        }
    }

    #[test]
    fn convergence_trivial_cases() {
        let z2 = Lattice::standard(2);
        let errs = convergence_check(&[z2.clone(), z2.clone()], &z2, &Gauge::sup(2));
        assert!(errs.iter().flatten().all(|e| e.is_zero()));

        // (1 + 1/t)·Z² has error exactly 1/t in the sup gauge
        let seq: Vec<Lattice> = (1..=4)
            .map(|t| {
                z2.scale(&(Rational::one() + Rational::new(1.into(), t.into())))
                    .unwrap()
            })
            .collect();
        let errs = convergence_check(&seq, &z2, &Gauge::sup(2));
        for (t, row) in (1..=4).zip(&errs) {
            assert_eq!(row[0], rat(1, t));
        }
    }
}

#[cfg(test)]
mod bench {
    use super::*;
    use crate::bodies::Gauge;

    #[test]
    #[ignore]
    fn bench_sweep_150() {
        let start = std::time::Instant::now();
        let res = sweep_ratio(2, &Gauge::euclid(2), 150, SweepMode::Product).unwrap();
        println!(
            "euclid N=150: {} targets, max {} at {:?}, {:?}",
            res.rows.len(),
            res.max_ratio.value,
            res.argmax,
            start.elapsed()
        );
        let start = std::time::Instant::now();
        let res = sweep_ratio(2, &Gauge::sup(2), 150, SweepMode::FirstPower).unwrap();
        println!(
            "sup first-power N=150: max {} at {:?}, {:?}",
            res.max_ratio.value,
            res.argmax,
            start.elapsed()
        );
    }
}
