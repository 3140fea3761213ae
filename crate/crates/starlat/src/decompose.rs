//! Integer vector decomposition `n = u·p + v·q` under the sup norm `h`:
//! brute-force optimal products `h(p)h(q)`, the sweep of the associated
//! sup-inf statistic, certified lower bounds from the first minimum of the
//! target body over `Λ(n)`, and the worst-case sequence generator.
//!
//! The statistic compares `h(p)h(q)` against `h(n)^{1-1/k}`; the fractional
//! power never gets evaluated. Every comparison raises both sides to the
//! k-th power and compares exact integers or rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bodies::{honeycomb_critical_basis, polygon_pi, Gauge, GaugeValue};
use crate::construct::{find_admissible, prepare, ConstructionPoint, SequenceParams};
use crate::exact::{complete_to_unimodular, gcd_vector, rat_str, Rational};
use crate::lattice::{big_json, lattice_from_n, ApproxTarget, Lattice};
use crate::minima::successive_minima;
use crate::{Error, Result};

/// A decomposition `n = u·p + v·q` with `dim(p,q) = 2`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub p: Vec<BigInt>,
    pub q: Vec<BigInt>,
    pub u: BigInt,
    pub v: BigInt,
    /// `h(p)·h(q)`
    pub product: BigInt,
    /// `h(n)`
    pub height: BigInt,
}

impl Decomposition {
    /// `(h(p)h(q) / h(n)^{1-1/k})^k = product^k / h(n)^{k-1}`, exact.
    pub fn ratio_pow_k(&self, k: usize) -> Rational {
        Rational::new(self.product.pow(k as u32), self.height.pow(k as u32 - 1))
    }

    pub fn to_json(&self, k: usize) -> serde_json::Value {
        serde_json::json!({
            "p": self.p.iter().map(big_json).collect::<Vec<_>>(),
            "q": self.q.iter().map(big_json).collect::<Vec<_>>(),
            "u": big_json(&self.u),
            "v": big_json(&self.v),
            "product": big_json(&self.product),
            "height": big_json(&self.height),
            "ratio_pow_k": rat_str(&self.ratio_pow_k(k)),
        })
    }
}

fn sup_height(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).max().unwrap_or(0)
}

fn to_i64_checked(n: &[BigInt]) -> Result<Vec<i64>> {
    n.iter()
        .map(|x| {
            x.to_i64().filter(|v| v.abs() <= 100_000).ok_or_else(|| {
                Error::InvalidParameter("decomposition search needs desk-scale entries".into())
            })
        })
        .collect()
}

/// All primitive vectors of the given sup height with canonical sign (first
/// nonzero entry positive). Flipping signs of `p` or `q` only flips `u`, `v`.
fn shell(dim: usize, h: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; dim];
    fn rec(cur: &mut Vec<i64>, idx: usize, h: i64, hit: bool, out: &mut Vec<Vec<i64>>) {
        if idx == cur.len() {
            if !hit {
                return;
            }
            let g = cur.iter().fold(0i64, |a, &b| a.gcd(&b));
            if g != 1 {
                return;
            }
            if cur.iter().find(|&&v| v != 0).map_or(false, |&v| v > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for v in -h..=h {
            cur[idx] = v;
            rec(cur, idx + 1, h, hit || v.abs() == h, out);
        }
    }
    rec(&mut cur, 0, h, false, &mut out);
    out
}

/// Tries to solve `n = u·p + v·q` over the integers; `p, q` must be
/// independent (some 2x2 minor nonzero).
fn solve_uv(n: &[i64], p: &[i64], q: &[i64]) -> Option<(i64, i64)> {
    let d = n.len();
    let (mut i0, mut j0, mut det) = (usize::MAX, 0usize, 0i64);
    'search: for i in 0..d {
        for j in i + 1..d {
            let m = p[i] * q[j] - p[j] * q[i];
            if m != 0 {
                (i0, j0, det) = (i, j, m);
                break 'search;
            }
        }
    }
    if i0 == usize::MAX {
        return None; // dependent pair
    }
    let un = n[i0] * q[j0] - n[j0] * q[i0];
    let vn = p[i0] * n[j0] - p[j0] * n[i0];
    if un % det != 0 || vn % det != 0 {
        return None;
    }
    let (u, v) = (un / det, vn / det);
    if (0..d).all(|l| u * p[l] + v * q[l] == n[l]) {
        Some((u, v))
    } else {
        None
    }
}

fn trivial_decomposition(n: &[i64]) -> Decomposition {
    let d = n.len();
    let h = sup_height(n);
    // a unit vector independent of n always exists for d >= 2
    let q = (0..d)
        .map(|j| {
            let mut e = vec![0i64; d];
            e[j] = 1;
            e
        })
        .find(|e| solve_uv_dim2(n, e))
        .expect("some axis is independent of n");
    Decomposition {
        p: n.iter().map(|&x| BigInt::from(x)).collect(),
        q: q.iter().map(|&x| BigInt::from(x)).collect(),
        u: BigInt::one(),
        v: BigInt::zero(),
        product: BigInt::from(h),
        height: BigInt::from(h),
    }
}

fn solve_uv_dim2(n: &[i64], q: &[i64]) -> bool {
    let d = n.len();
    (0..d).any(|i| (i + 1..d).any(|j| n[i] * q[j] - n[j] * q[i] != 0))
}

/// Exhaustive minimal-product decomposition: walks candidate products in
/// ascending order over sup-norm shells `h(p) = a <= h(q) = b`, `a·b = P`,
/// and returns the first solvable pair. Primitive `p, q` suffice (dividing
/// out a common factor never increases a height). Desk scale: the search is
/// exhaustive and exact but meant for heights up to a few dozen.
pub fn brute_force_decomposition(n: &[BigInt], product_cap: Option<u64>) -> Result<Decomposition> {
    let ni = to_i64_checked(n)?;
    if ni.iter().all(|&x| x == 0) {
        return Err(Error::InvalidParameter("n must be nonzero".into()));
    }
    if ni.len() < 2 {
        return Err(Error::Dimension("n needs at least 2 entries".into()));
    }
    let h = sup_height(&ni);
    let cap = product_cap.unwrap_or(h as u64).min(h as u64) as i64;
    let dim = ni.len();
    let mut shells: Vec<Vec<Vec<i64>>> = vec![Vec::new(); (cap + 1) as usize];
    for p in 1..=cap {
        for a in 1..=((p as f64).sqrt() as i64 + 1) {
            if p % a != 0 {
                continue;
            }
            let b = p / a;
            if a > b {
                continue;
            }
            if shells[a as usize].is_empty() {
                shells[a as usize] = shell(dim, a);
            }
            if shells[b as usize].is_empty() {
                shells[b as usize] = shell(dim, b);
            }
            for pv in &shells[a as usize] {
                for qv in &shells[b as usize] {
                    if let Some((u, v)) = solve_uv(&ni, pv, qv) {
                        return Ok(Decomposition {
                            p: pv.iter().map(|&x| BigInt::from(x)).collect(),
                            q: qv.iter().map(|&x| BigInt::from(x)).collect(),
                            u: BigInt::from(u),
                            v: BigInt::from(v),
                            product: BigInt::from(p),
                            height: BigInt::from(h),
                        });
                    }
                }
            }
        }
    }
    Ok(trivial_decomposition(&ni))
}

/// Upper-bound companion: completes `n` (its primitive part) to a rank-2
/// plane and sup-norm-reduces the basis pair. Optimality is not claimed; the
/// optimum may live in a different plane.
pub fn heuristic_decomposition(n: &[BigInt]) -> Result<Decomposition> {
    let ni = to_i64_checked(n)?;
    if ni.iter().all(|&x| x == 0) {
        return Err(Error::InvalidParameter("n must be nonzero".into()));
    }
    let g = gcd_vector(n);
    let prim: Vec<BigInt> = n.iter().map(|x| x / &g).collect();
    let completion = complete_to_unimodular(&prim)?;
    let mut p: Vec<i64> = to_i64_checked(&prim)?;
    let mut q: Vec<i64> = completion
        .row(0)
        .iter()
        .map(|x| x.to_i64().expect("completion entries are desk scale"))
        .collect();
    // pairwise sup-norm reduction
    loop {
        if sup_height(&p) > sup_height(&q) {
            std::mem::swap(&mut p, &mut q);
        }
        let mut best: Option<(i64, Vec<i64>)> = None;
        for i in 0..p.len() {
            if p[i] == 0 {
                continue;
            }
            let c0 = (q[i] as f64 / p[i] as f64).round() as i64;
            for c in [c0 - 1, c0, c0 + 1] {
                if c == 0 {
                    continue;
                }
                let cand: Vec<i64> = q.iter().zip(&p).map(|(a, b)| a - c * b).collect();
                let hh = sup_height(&cand);
                if hh < sup_height(&q) && best.as_ref().map_or(true, |(bh, _)| hh < *bh) {
                    best = Some((hh, cand));
                }
            }
        }
        match best {
            Some((_, cand)) => q = cand,
            None => break,
        }
    }
    let (u, v) = solve_uv(&ni, &p, &q).ok_or_else(|| {
        Error::IdentityViolation("reduced plane basis no longer contains n".into())
    })?;
    let product = sup_height(&p) * sup_height(&q);
    // the chosen plane may have no short second vector; never report an
    // upper bound worse than the trivial decomposition
    if product >= sup_height(&ni) {
        return Ok(trivial_decomposition(&ni));
    }
    Ok(Decomposition {
        p: p.iter().map(|&x| BigInt::from(x)).collect(),
        q: q.iter().map(|&x| BigInt::from(x)).collect(),
        u: BigInt::from(u),
        v: BigInt::from(v),
        product: BigInt::from(product),
        height: BigInt::from(sup_height(&ni)),
    })
}

#[derive(Clone, Debug)]
pub struct C0Row {
    pub n: Vec<i64>,
    pub product: i64,
    /// `product^k / h^{k-1}`
    pub ratio_pow_k: Rational,
}

#[derive(Debug)]
pub struct C0Sweep {
    pub rows: Vec<C0Row>,
    pub max_ratio_pow_k: Rational,
    pub argmax: Vec<i64>,
}

/// Exhaustive sup-inf sweep: for every primitive `n` with `h(n) <= max_h`
/// (one representative per signed-permutation class, entries sorted
/// ascending, zeros allowed) computes the minimal decomposition product and
/// asserts the k-th-powered ratio bound `2^k/(k+1)` exactly.
pub fn c0_sweep(k: usize, max_h: u64) -> Result<C0Sweep> {
    if !(2..=4).contains(&k) {
        return Err(Error::InvalidParameter(
            "decomposition sweep supports k in 2..=4".into(),
        ));
    }
    let mut targets: Vec<Vec<i64>> = Vec::new();
    let mut cur = vec![0i64; k + 1];
    fn rec(cur: &mut Vec<i64>, idx: usize, min: i64, h: i64, out: &mut Vec<Vec<i64>>) {
        if idx == cur.len() - 1 {
            cur[idx] = h;
            if cur.iter().fold(0i64, |a, &b| a.gcd(&b)) == 1 {
                out.push(cur.clone());
            }
            return;
        }
        for v in min..=h {
            cur[idx] = v;
            rec(cur, idx + 1, v, h, out);
        }
    }
    for h in 1..=max_h as i64 {
        rec(&mut cur, 0, 0, h, &mut targets);
    }
    let bound_lhs_rhs = |row: &C0Row| -> bool {
        // product^k · (k+1) <= 2^k · h^{k-1}
        let lhs = BigInt::from(row.product).pow(k as u32) * BigInt::from(k as u64 + 1);
        let rhs = BigInt::from(2u8).pow(k as u32)
            * BigInt::from(*row.n.last().unwrap()).pow(k as u32 - 1);
        lhs <= rhs
    };
    let rows: Result<Vec<C0Row>> = targets
        .par_iter()
        .map(|n| {
            let nb: Vec<BigInt> = n.iter().map(|&x| BigInt::from(x)).collect();
            let dec = brute_force_decomposition(&nb, None)?;
            let row = C0Row {
                n: n.clone(),
                product: dec.product.to_i64().unwrap(),
                ratio_pow_k: dec.ratio_pow_k(k),
            };
            if !bound_lhs_rhs(&row) {
                return Err(Error::IdentityViolation(format!(
                    "decomposition ratio bound failed at n={n:?}: product {}",
                    row.product
                )));
            }
            Ok(row)
        })
        .collect();
    let mut rows = rows?;
    rows.sort_by(|a, b| a.n.cmp(&b.n));
    let best = rows
        .iter()
        .max_by(|a, b| {
            a.ratio_pow_k
                .cmp(&b.ratio_pow_k)
                .then_with(|| a.n.last().cmp(&b.n.last()))
                .then_with(|| b.n.cmp(&a.n))
        })
        .expect("sweep is nonempty");
    Ok(C0Sweep {
        max_ratio_pow_k: best.ratio_pow_k.clone(),
        argmax: best.n.clone(),
        rows,
    })
}

/// Certified lower bound for every decomposition of a strictly ordered
/// target: any rank-2 plane through `n` corresponds to a nonzero point of
/// `Λ(n)`, whose target-body gauge is at least the first minimum, so
/// `h(p)h(q) >= n_{k+1}·f_min/2` and the k-th-powered ratio is at least
/// `bound_pow_k = n_{k+1}·f_min^k / 2^k`.
#[derive(Clone, Debug)]
pub struct DecompCertificate {
    pub target: ApproxTarget,
    /// `λ_1` of the target body over `Λ(n)`
    pub f_min: GaugeValue,
    /// k-th power of the certified ratio lower bound
    pub bound_pow_k: Rational,
}

impl DecompCertificate {
    /// Soundness comparison against a concrete decomposition, in k-th powers.
    pub fn dominated_by(&self, d: &Decomposition, k: usize) -> bool {
        self.bound_pow_k <= d.ratio_pow_k(k)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.target.n().iter().map(big_json).collect::<Vec<_>>(),
            "f_min": self.f_min.to_json(),
            "bound_pow_k": rat_str(&self.bound_pow_k),
        })
    }
}

pub fn certify_lower_bound(target: &ApproxTarget) -> Result<DecompCertificate> {
    if !target.is_strictly_ordered() {
        return Err(Error::InvalidParameter(format!(
            "certificate needs strict ordering, got {target}"
        )));
    }
    let k = target.k();
    let gauge = Gauge::body_of_n(target.clone())?;
    let report = successive_minima(&lattice_from_n(target), &gauge);
    let f_min = report.lambdas[0].clone();
    debug_assert_eq!(f_min.exp, 1);
    let bound_pow_k = Rational::from_integer(target.n_last().clone())
        * Rational::new(f_min.value.numer().pow(k as u32), f_min.value.denom().pow(k as u32))
        / Rational::from_integer(BigInt::from(2u8).pow(k as u32));
    Ok(DecompCertificate {
        target: target.clone(),
        f_min,
        bound_pow_k,
    })
}

/// Decreasing search for a ratio window `δ`: commits to the largest δ in
/// `{1/4, 1/8, ...}` whose randomized spot checks of the pointwise
/// body-vs-honeycomb inequality all pass. The committed δ only steers the
/// later pipeline; every pipeline certificate is verified exactly.
pub fn search_delta(k: usize, eps: &Rational, seed: u64) -> Result<Rational> {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    if k < 2 {
        return Err(Error::InvalidParameter("need k >= 2".into()));
    }
    let factor = Rational::one() - eps / Rational::from_integer(2.into());
    let honey = Gauge::honeycomb(k)?;
    let mut rng = StdRng::seed_from_u64(seed);
    'delta: for exp in 2..=6u32 {
        let delta = Rational::new(BigInt::one(), BigInt::from(2u8).pow(exp));
        for _ in 0..25 {
            // strictly ordered target with all ratios inside (1-δ, 1)
            let min_last = (Rational::from_integer(BigInt::from(2 * (k as u64 + 2))) / &delta)
                .ceil()
                .to_integer()
                .to_u64()
                .unwrap();
            let last = rng.gen_range(min_last..=4 * min_last);
            let width = (delta.clone() * Rational::from_integer(last.into()))
                .ceil()
                .to_integer()
                .to_u64()
                .unwrap()
                .saturating_sub(1)
                .max(k as u64);
            let mut offsets: Vec<u64> = Vec::new();
            while offsets.len() < k {
                let o = rng.gen_range(1..=width);
                if !offsets.contains(&o) {
                    offsets.push(o);
                }
            }
            offsets.sort_unstable_by(|a, b| b.cmp(a));
            let mut n: Vec<BigInt> = offsets
                .iter()
                .map(|&o| BigInt::from(last) - BigInt::from(o))
                .collect();
            n.push(BigInt::from(last));
            if !gcd_vector(&n).is_one() {
                continue;
            }
            let target = match ApproxTarget::new(n) {
                Ok(t) if t.is_strictly_ordered() => t,
                _ => continue,
            };
            if target
                .thetas()
                .first()
                .map_or(true, |t0| t0 <= &(Rational::one() - &delta))
            {
                continue;
            }
            let body = Gauge::body_of_n(target)?;
            for _ in 0..40 {
                let x: Vec<Rational> = (0..k)
                    .map(|_| {
                        Rational::new(
                            rng.gen_range(-16i64..=16).into(),
                            rng.gen_range(1i64..=8).into(),
                        )
                    })
                    .collect();
                if x.iter().all(|v| v.is_zero()) {
                    continue;
                }
                let lhs = body.evaluate(&x);
                let rhs = honey.evaluate(&x).scale(&factor);
                if lhs <= rhs {
                    continue 'delta;
                }
            }
        }
        return Ok(delta);
    }
    Err(Error::SearchExhausted(
        "no window in {1/4,...,1/64} passed the spot checks".into(),
    ))
}

/// One point of the worst-case pipeline with its exact certificate data.
#[derive(Debug)]
pub struct WorstcasePoint {
    pub point: ConstructionPoint,
    pub certificate: DecompCertificate,
    /// `f_min^k · (k+1) · n_{k+1}` — must exceed `(1-ε)^k · 2^k`
    pub check_lhs: Rational,
    pub check_rhs: Rational,
    /// `(1-ε)^k/(k+1)`: every decomposition ratio, k-th powered, exceeds it
    pub theorem_threshold: Rational,
}

impl WorstcasePoint {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "t": big_json(&self.point.t),
            "tvec": self.point.tvec.iter().map(big_json).collect::<Vec<_>>(),
            "n": self.point.target.n().iter().map(big_json).collect::<Vec<_>>(),
            "f_min": self.certificate.f_min.to_json(),
            "bound_pow_k": rat_str(&self.certificate.bound_pow_k),
            "check_lhs": rat_str(&self.check_lhs),
            "check_rhs": rat_str(&self.check_rhs),
            "theorem_threshold": rat_str(&self.theorem_threshold),
        })
    }
}

pub struct WorstcaseConfig {
    pub t_limit: u64,
    pub tvec_box: u64,
    pub seed: u64,
    /// how many accepted construction points to examine at most
    pub scan_budget: usize,
}

impl Default for WorstcaseConfig {
    fn default() -> Self {
        WorstcaseConfig {
            t_limit: 8,
            tvec_box: 3,
            seed: 0,
            scan_budget: 5,
        }
    }
}

/// Worst-case sequence generator: applies the sequence constructor to the
/// honeycomb critical lattice with ratios packed strictly inside `(1-δ, 1)`
/// and keeps the points whose first target-body minimum passes the exact
/// k-th-powered window inequality
/// `f_min^k > (1-ε)^k · 2^k / ((k+1)·n_{k+1})`.
pub fn worstcase_sequence(
    k: usize,
    eps: &Rational,
    count: usize,
    config: &WorstcaseConfig,
) -> Result<Vec<WorstcasePoint>> {
    if k < 3 {
        return Err(Error::InvalidParameter(
            "the worst-case pipeline needs k >= 3".into(),
        ));
    }
    if !(eps.is_positive() && eps < &Rational::one()) {
        return Err(Error::InvalidParameter("need 0 < ε < 1".into()));
    }
    let delta = search_delta(k, eps, config.seed)?;
    let params = worstcase_params(k, &delta)?;
    let one_minus_eps_k = {
        let b = Rational::one() - eps;
        Rational::new(b.numer().pow(k as u32), b.denom().pow(k as u32))
    };
    let two_k = Rational::from_integer(BigInt::from(2u8).pow(k as u32));
    let k1 = Rational::from_integer(BigInt::from(k as u64 + 1));
    let theorem_threshold = &one_minus_eps_k / &k1;
    // grow the accepted batch until enough points clear the window check
    let mut batch = count;
    loop {
        let run = match find_admissible(&params, batch, config.t_limit, config.tvec_box) {
            Ok(r) => r,
            Err(Error::SearchExhausted(msg)) => {
                return Err(Error::SearchExhausted(format!(
                    "pipeline needs more accepted points than the scan offers: {msg}"
                )))
            }
            Err(e) => return Err(e),
        };
        let mut out = Vec::new();
        for point in run.points {
            // strictness and window conditions of the pipeline hypothesis
            let ratios_ok = point.target.is_strictly_ordered()
                && point.ratios[0] > Rational::one() - &delta
                && point.ratios.last().unwrap() < &Rational::one();
            if !ratios_ok {
                continue; // early-t point outside the window
            }
            // ordered targets have h(n) = n_{k+1} by construction
            let cert = certify_lower_bound(&point.target)?;
            let check_lhs = {
                let f = &cert.f_min.value;
                Rational::new(f.numer().pow(k as u32), f.denom().pow(k as u32))
                    * &k1
                    * Rational::from_integer(point.target.n_last().clone())
            };
            let check_rhs = &one_minus_eps_k * &two_k;
            if check_lhs > check_rhs {
                // algebraic consequence: the certified ratio bound clears
                // the theorem threshold
                if cert.bound_pow_k <= theorem_threshold {
                    return Err(Error::IdentityViolation(
                        "window inequality passed but certificate missed the threshold".into(),
                    ));
                }
                out.push(WorstcasePoint {
                    point,
                    certificate: cert,
                    check_lhs,
                    check_rhs,
                    theorem_threshold: theorem_threshold.clone(),
                });
                if out.len() == count {
                    return Ok(out);
                }
            }
        }
        batch += count - out.len();
        if batch > config.scan_budget {
            return Err(Error::SearchExhausted(format!(
                "scan budget {} exhausted with {} of {count} pipeline points",
                config.scan_budget,
                out.len()
            )));
        }
    }
}

/// Ratios strictly increasing inside `(1-δ, 1)` over the honeycomb basis.
/// The offsets are dyadic so the clearing integer stays a power of two, which
/// keeps the structural common factors of the candidate scan to parity only.
pub fn worstcase_params(k: usize, delta: &Rational) -> Result<SequenceParams> {
    let mut denom = BigInt::one();
    while denom < BigInt::from(k as u64 + 2) {
        denom *= 2;
    }
    let alphas: Vec<Rational> = (1..=k)
        .map(|i| {
            Rational::one() - delta * Rational::new(BigInt::from((k + 1 - i) as u64), denom.clone())
        })
        .collect();
    prepare(honeycomb_critical_basis(k)?, alphas)
}

/// Minkowski chain on the polygon of a pair: the product of the first two
/// minima of `Π(m,n)` over `Z²` is at least `2/V₂(Π)`.
#[derive(Debug)]
pub struct MinkowskiReport {
    pub area: Rational,
    pub lambda1: GaugeValue,
    pub lambda2: GaugeValue,
    pub product: GaugeValue,
    /// `2 / V₂(Π)`
    pub lower_bound: Rational,
}

pub fn minkowski_chain_check(m: &[BigInt], n: &[BigInt]) -> Result<MinkowskiReport> {
    let polygon = polygon_pi(m, n)?;
    let area = polygon.area.clone();
    let gauge = Gauge::polygon(polygon);
    let rep = successive_minima(&Lattice::standard(2), &gauge);
    let product = rep.lambdas[0].mul(&rep.lambdas[1]);
    let lower_bound = Rational::from_integer(2.into()) / &area;
    if product.cmp_rational(&lower_bound) == std::cmp::Ordering::Less {
        return Err(Error::IdentityViolation(format!(
            "minima product of the polygon fell below 2/area for m={m:?}, n={n:?}"
        )));
    }
    Ok(MinkowskiReport {
        area,
        lambda1: rep.lambdas[0].clone(),
        lambda2: rep.lambdas[1].clone(),
        product,
        lower_bound,
    })
}
