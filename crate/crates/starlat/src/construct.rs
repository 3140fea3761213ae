//! Manufactures primitive integer targets `n(t)` whose lattices `Λ(n(t))`,
//! scaled by `d·t`, converge to a prescribed rational lattice with prescribed
//! limit ratios `α_i`.
//!
//! The machine builds a `k x (k+1)` integer matrix whose rows are dominated
//! by the polar basis directions; the cofactor-signed cross product of the
//! rows is the candidate target. Candidates are accepted when they are
//! primitive and ordered; the search over the diagonal perturbations and `t`
//! is exhaustive and deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{gcd_vector, minors_omit_column, IntegerMatrix, Rational, RationalMatrix};
use crate::lattice::{big_json, lattice_equal, lattice_from_n, ApproxTarget, Lattice};
use crate::{Error, Result};

/// Prepared inputs: basis `b_i`, ratios `α_i`, the clearing integer `d`, the
/// polar rows `b*_i` and their `α`-weighted row sums.
#[derive(Clone, Debug)]
pub struct SequenceParams {
    pub basis: RationalMatrix,
    pub alphas: Vec<Rational>,
    pub d: BigInt,
    pub polar_basis: RationalMatrix,
    /// `Σ_l α_l b*_{il}` per row `i`; the last matrix column direction
    pub weighted_sums: Vec<Rational>,
    /// sign applied to the last column so the candidate targets come out
    /// positive
    pub last_col_sign: i8,
}

/// Clears the denominators of the basis, its polar, their `α`-multiples and
/// the weighted sums; picks the orientation of the last column by testing
/// the unperturbed cross product.
pub fn prepare(basis: RationalMatrix, alphas: Vec<Rational>) -> Result<SequenceParams> {
    if !basis.is_square() {
        return Err(Error::Dimension("basis must be square".into()));
    }
    let k = basis.rows();
    if alphas.len() != k {
        return Err(Error::Dimension(format!(
            "need {k} ratios, got {}",
            alphas.len()
        )));
    }
    if alphas[0] <= Rational::zero()
        || alphas.last().unwrap() > &Rational::one()
        || alphas.windows(2).any(|w| w[0] > w[1])
    {
        return Err(Error::InvalidParameter(
            "ratios must satisfy 0 < α_1 <= ... <= α_k <= 1".into(),
        ));
    }
    let polar_basis = basis.inverse()?.transpose();
    let weighted_sums: Vec<Rational> = (0..k)
        .map(|i| (0..k).map(|l| &alphas[l] * &polar_basis[(i, l)]).sum())
        .collect();
    let mut d = BigInt::one();
    {
        let mut absorb = |r: &Rational| d = d.lcm(r.denom());
        for i in 0..k {
            for j in 0..k {
                absorb(&basis[(i, j)]);
                absorb(&polar_basis[(i, j)]);
                absorb(&(&alphas[j] * &basis[(i, j)]));
                absorb(&(&alphas[j] * &polar_basis[(i, j)]));
            }
            absorb(&weighted_sums[i]);
        }
    }
    let mut params = SequenceParams {
        basis,
        alphas,
        d,
        polar_basis,
        weighted_sums,
        last_col_sign: -1,
    };
    for sign in [-1i8, 1] {
        params.last_col_sign = sign;
        let m = build_m(&params, &BigInt::one(), &vec![BigInt::zero(); k])?;
        let mut cross = minors_omit_column(&m)?.cross;
        if cross[k].is_zero() {
            continue;
        }
        if cross[k].is_negative() {
            for c in cross.iter_mut() {
                *c = -c.clone();
            }
        }
        if cross.iter().all(|c| c.is_positive()) {
            return Ok(params);
        }
    }
    Err(Error::InvalidParameter(
        "no last-column orientation yields positive targets".into(),
    ))
}

/// The perturbed direction matrix: entry `(i,j) = d·b*_{ij}·t + δ_{ij}·t_i`
/// for `j <= k`, last column `s·d·(Σ_l α_l b*_{il})·t`. All entries are
/// integers by the choice of `d`.
pub fn build_m(params: &SequenceParams, t: &BigInt, tvec: &[BigInt]) -> Result<IntegerMatrix> {
    let k = params.basis.rows();
    if !t.is_positive() {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    if tvec.len() != k {
        return Err(Error::Dimension(format!(
            "perturbation vector needs {k} entries"
        )));
    }
    let dr = Rational::from_integer(params.d.clone());
    let tr = Rational::from_integer(t.clone());
    let mut m = IntegerMatrix::zero(k, k + 1);
    let to_int = |r: Rational| -> Result<BigInt> {
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(Error::IdentityViolation(format!(
                "clearing integer d={} left a fractional entry {r}",
                params.d
            )))
        }
    };
    for i in 0..k {
        for j in 0..k {
            let mut e = &dr * &params.polar_basis[(i, j)] * &tr;
            if i == j {
                e += Rational::from_integer(tvec[i].clone());
            }
            m[(i, j)] = to_int(e)?;
        }
        let mut last = &dr * &params.weighted_sums[i] * &tr;
        if params.last_col_sign < 0 {
            last = -last;
        }
        m[(i, k)] = to_int(last)?;
    }
    Ok(m)
}

/// An accepted candidate: the target, the dual rows (first `k` columns of the
/// direction matrix) and the matched basis of `Λ(n(t))`.
#[derive(Clone, Debug)]
pub struct ConstructionPoint {
    pub t: BigInt,
    pub tvec: Vec<BigInt>,
    pub m: IntegerMatrix,
    pub target: ApproxTarget,
    /// rows `a*_i(t)`: basis of the orthogonal section of the target
    pub a_star: IntegerMatrix,
    /// rows `a_i(t)`: the dual of `a_star`; spans `Λ(n(t))`
    pub a_basis: RationalMatrix,
    /// `α_i(t) = n_i(t)/n_{k+1}(t)`
    pub ratios: Vec<Rational>,
}

impl ConstructionPoint {
    /// `Λ(n(t))` as a lattice object (built from the matched basis).
    pub fn lattice(&self) -> Lattice {
        Lattice::from_basis(self.a_basis.clone()).expect("dual basis has full rank")
    }
}

/// Why a `(t, tvec)` candidate was not accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectReason {
    /// the cross product has a common factor
    CommonFactor(BigInt),
    /// entries not positive or not non-decreasing
    NotOrdered,
    /// the direction rows were rank-deficient
    Degenerate,
}

#[derive(Debug)]
pub enum PointOutcome {
    Accepted(Box<ConstructionPoint>),
    Rejected(RejectReason),
}

/// Evaluates one `(t, tvec)` candidate: the target is the cofactor-signed
/// cross product of the direction rows, sign-normalized to a positive last
/// entry, accepted when primitive and ordered. Acceptance also cross-checks
/// that the dual rows really span `Λ(n(t))`.
pub fn n_of_t(params: &SequenceParams, t: &BigInt, tvec: &[BigInt]) -> Result<PointOutcome> {
    let k = params.basis.rows();
    let m = build_m(params, t, tvec)?;
    let mut cross = minors_omit_column(&m)?.cross;
    if cross.iter().all(|c| c.is_zero()) {
        return Ok(PointOutcome::Rejected(RejectReason::Degenerate));
    }
    if cross[k].is_negative() {
        for c in cross.iter_mut() {
            *c = -c.clone();
        }
    }
    let g = gcd_vector(&cross);
    if !g.is_one() {
        return Ok(PointOutcome::Rejected(RejectReason::CommonFactor(g)));
    }
    if cross.iter().any(|c| !c.is_positive()) || cross.windows(2).any(|w| w[0] > w[1]) {
        return Ok(PointOutcome::Rejected(RejectReason::NotOrdered));
    }
    // orthogonality of the target to every direction row is structural
    for i in 0..k {
        let dot: BigInt = m.row(i).iter().zip(&cross).map(|(a, b)| a * b).sum();
        if !dot.is_zero() {
            return Err(Error::IdentityViolation(format!(
                "cross product not orthogonal to direction row {i}"
            )));
        }
    }
    let target = ApproxTarget::new(cross).expect("checked primitive ordered positive");
    let a_star = IntegerMatrix::from_rows((0..k).map(|i| m.row(i)[..k].to_vec()).collect());
    let a_basis = a_star.to_rational().inverse()?.transpose();
    let span = Lattice::from_basis(a_basis.clone())?;
    if !lattice_equal(&span, &lattice_from_n(&target)) {
        return Err(Error::IdentityViolation(format!(
            "dual rows do not span Λ(n) at t={t}"
        )));
    }
    let ratios = target.thetas();
    Ok(PointOutcome::Accepted(Box::new(ConstructionPoint {
        t: t.clone(),
        tvec: tvec.to_vec(),
        m,
        target,
        a_star,
        a_basis,
        ratios,
    })))
}

/// Result of the deterministic `(tvec, t)` scan.
#[derive(Debug)]
pub struct AdmissibleRun {
    pub points: Vec<ConstructionPoint>,
    pub tvec: Vec<BigInt>,
    /// common difference when the accepted t values form an arithmetic
    /// progression (informational)
    pub arithmetic_step: Option<BigInt>,
    pub candidates_scanned: u64,
}

/// Scans perturbation vectors over `[0, tvec_box]^k` in lexicographic order
/// and `t` ascending; returns the first `count` accepted points sharing one
/// perturbation vector.
pub fn find_admissible(
    params: &SequenceParams,
    count: usize,
    t_limit: u64,
    tvec_box: u64,
) -> Result<AdmissibleRun> {
    let k = params.basis.rows();
    if count == 0 {
        return Ok(AdmissibleRun {
            points: Vec::new(),
            tvec: vec![BigInt::zero(); k],
            arithmetic_step: None,
            candidates_scanned: 0,
        });
    }
    let mut scanned = 0u64;
    let mut tvec = vec![0u64; k];
    'scan: loop {
        let tv: Vec<BigInt> = tvec.iter().map(|&v| BigInt::from(v)).collect();
        let mut accepted: Vec<ConstructionPoint> = Vec::new();
        for t in 1..=t_limit {
            scanned += 1;
            if let PointOutcome::Accepted(p) = n_of_t(params, &BigInt::from(t), &tv)? {
                accepted.push(*p);
                if accepted.len() == count {
                    let steps: Vec<BigInt> =
                        accepted.windows(2).map(|w| &w[1].t - &w[0].t).collect();
                    let arithmetic_step = match steps.as_slice() {
                        [] => None,
                        [first, rest @ ..] if rest.iter().all(|s| s == first) => {
                            Some(first.clone())
                        }
                        _ => None,
                    };
                    return Ok(AdmissibleRun {
                        points: accepted,
                        tvec: tv,
                        arithmetic_step,
                        candidates_scanned: scanned,
                    });
                }
            }
        }
        // next tvec in lexicographic order
        let mut idx = k;
        while idx > 0 {
            idx -= 1;
            if tvec[idx] < tvec_box {
                tvec[idx] += 1;
                for v in tvec.iter_mut().skip(idx + 1) {
                    *v = 0;
                }
                continue 'scan;
            }
        }
        return Err(Error::SearchExhausted(format!(
            "no perturbation in [0,{tvec_box}]^{k} yields {count} points with t <= {t_limit} ({scanned} candidates tried)"
        )));
    }
}

/// Exact values of the unperturbed-direction identities: the last minor
/// equals `det(b*)` in magnitude and is nonzero; every other minor magnitude
/// is `α_i` times it; the `t^k` coefficient of each perturbed minor equals
/// `d^k` times the corresponding direction minor.
#[derive(Debug)]
pub struct IdentityReport {
    /// `|minor_{k+1}|` and `|det(b*)|`
    pub last_minor: (Rational, Rational),
    /// per i: `(|minor_i|, α_i·|minor_{k+1}|)`
    pub weighted: Vec<(Rational, Rational)>,
    /// per i: `(leading coefficient of M_i(t), d^k·minor_i)`
    pub leading: Vec<(Rational, Rational)>,
}

/// Checks the three direction-matrix identities exactly; the leading
/// coefficients are read off by interpolating each minor at `k+1` values of
/// `t` with the probe perturbation `tvec = (1, ..., k)`.
pub fn verify_identities(params: &SequenceParams) -> Result<IdentityReport> {
    let k = params.basis.rows();
    // direction matrix [b* | s·sums] and its k+1 minors
    let dir = RationalMatrix::from_fn(k, k + 1, |i, j| {
        if j < k {
            params.polar_basis[(i, j)].clone()
        } else if params.last_col_sign < 0 {
            -params.weighted_sums[i].clone()
        } else {
            params.weighted_sums[i].clone()
        }
    });
    let minor = |omit: usize| -> Result<Rational> {
        RationalMatrix::from_fn(k, k, |i, j| {
            let col = if j < omit { j } else { j + 1 };
            dir[(i, col)].clone()
        })
        .det()
    };
    let minors: Vec<Rational> = (0..=k).map(minor).collect::<Result<_>>()?;
    let det_polar = params.polar_basis.det()?;
    let last_minor = (minors[k].abs(), det_polar.abs());
    if last_minor.0 != last_minor.1 || last_minor.0.is_zero() {
        return Err(Error::IdentityViolation(
            "last direction minor must equal det(b*) and be nonzero".into(),
        ));
    }
    let weighted: Vec<(Rational, Rational)> = (0..k)
        .map(|i| (minors[i].abs(), &params.alphas[i] * &last_minor.0))
        .collect();
    for (i, (a, b)) in weighted.iter().enumerate() {
        if a != b {
            return Err(Error::IdentityViolation(format!(
                "direction minor {i} is not α_i·det(b*)"
            )));
        }
    }
    // leading t^k coefficients by exact interpolation at t = 1..k+1
    let tvec: Vec<BigInt> = (1..=k as i64).map(BigInt::from).collect();
    let dk = Rational::from_integer(params.d.pow(k as u32));
    let mut leading = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let values: Vec<Rational> = (1..=k as i64 + 1)
            .map(|t| {
                let m = build_m(params, &BigInt::from(t), &tvec)?;
                let sub = IntegerMatrix::from_rows(
                    (0..k)
                        .map(|r| {
                            (0..=k)
                                .filter(|&c| c != i)
                                .map(|c| m[(r, c)].clone())
                                .collect()
                        })
                        .collect(),
                );
                Ok(Rational::from_integer(sub.det()?))
            })
            .collect::<Result<_>>()?;
        let lead = leading_coefficient(&values);
        let expect = &dk * &minors[i];
        if lead != expect {
            return Err(Error::IdentityViolation(format!(
                "t^{k} coefficient of minor {i} is {lead}, expected {expect}"
            )));
        }
        leading.push((lead, expect));
    }
    Ok(IdentityReport {
        last_minor,
        weighted,
        leading,
    })
}

/// Degree-(n-1) leading coefficient of the polynomial interpolating
/// `values[j]` at `x = j+1`.
fn leading_coefficient(values: &[Rational]) -> Rational {
    let n = values.len();
    let mut acc = Rational::zero();
    for (j, y) in values.iter().enumerate() {
        let mut denom = Rational::one();
        for l in 0..n {
            if l != j {
                denom *= Rational::from_integer(BigInt::from(j as i64 - l as i64));
            }
        }
        acc += y / denom;
    }
    acc
}

/// t-scaled deviation columns of a run of accepted points.
#[derive(Debug)]
pub struct AsymptoticRow {
    pub t: BigInt,
    /// `max_ij |d·t·a_ij(t) - b_ij| · t`
    pub e2: Rational,
    /// `|n_{k+1}(t)·|det B| / (d·t)^k - 1| · t`
    pub e3: Rational,
    /// `max_i |α_i(t) - α_i| · t`
    pub e4: Rational,
}

#[derive(Debug)]
pub struct AsymptoticTable {
    pub rows: Vec<AsymptoticRow>,
}

impl AsymptoticTable {
    /// Desk-scale boundedness surrogate: each column's max stays within
    /// `factor` times its median.
    pub fn bounded(&self, factor: u64) -> bool {
        let check = |col: Vec<Rational>| -> bool {
            let mut sorted = col;
            sorted.sort();
            let median = sorted[sorted.len() / 2].clone();
            let max = sorted.last().unwrap();
            max <= &(median * Rational::from_integer(factor.into()))
        };
        check(self.rows.iter().map(|r| r.e2.clone()).collect())
            && check(self.rows.iter().map(|r| r.e3.clone()).collect())
            && check(self.rows.iter().map(|r| r.e4.clone()).collect())
    }
}

/// Exact t-scaled error columns for the three asymptotic statements: basis
/// entries, denominator growth, ratio convergence.
pub fn verify_asymptotics(
    params: &SequenceParams,
    points: &[ConstructionPoint],
) -> Result<AsymptoticTable> {
    if points.len() < 2 {
        return Err(Error::InvalidParameter(
            "asymptotics need at least two points".into(),
        ));
    }
    let k = params.basis.rows();
    let det_abs = params.basis.det()?.abs();
    let rows = points
        .iter()
        .map(|p| {
            let tr = Rational::from_integer(p.t.clone());
            let dt = Rational::from_integer(&params.d * &p.t);
            let mut e2 = Rational::zero();
            for i in 0..k {
                for j in 0..k {
                    e2 = e2.max((&dt * &p.a_basis[(i, j)] - &params.basis[(i, j)]).abs());
                }
            }
            e2 *= &tr;
            let dtk = Rational::new(BigInt::one(), (&params.d * &p.t).pow(k as u32));
            let e3 = (Rational::from_integer(p.target.n_last().clone()) * &det_abs * dtk
                - Rational::one())
            .abs()
                * &tr;
            let mut e4 = Rational::zero();
            for i in 0..k {
                e4 = e4.max((&p.ratios[i] - &params.alphas[i]).abs());
            }
            e4 *= &tr;
            AsymptoticRow {
                t: p.t.clone(),
                e2,
                e3,
                e4,
            }
        })
        .collect();
    Ok(AsymptoticTable { rows })
}

/// JSON rows for a run: target, ratios and the t-scaled error columns.
pub fn run_to_json(params: &SequenceParams, run: &AdmissibleRun) -> Result<serde_json::Value> {
    let table = verify_asymptotics(params, &run.points)?;
    Ok(serde_json::json!(run
        .points
        .iter()
        .zip(&table.rows)
        .map(|(p, e)| {
            serde_json::json!({
                "t": big_json(&p.t),
                "tvec": p.tvec.iter().map(big_json).collect::<Vec<_>>(),
                "n": p.target.n().iter().map(big_json).collect::<Vec<_>>(),
                "ratios": p.ratios.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "errors": {
                    "e2": e.e2.to_string(),
                    "e3": e.e3.to_string(),
                    "e4": e.e4.to_string(),
                },
            })
        })
        .collect::<Vec<_>>()))
}

/// Greedy doubling subsequence of accepted points: each kept `t` at least
/// doubles the previous one (up to the additive shift the perturbations
/// introduce). The asymptotic checks want such a t-ladder.
pub fn doubling_ladder(points: &[ConstructionPoint], want: usize) -> Vec<ConstructionPoint> {
    let mut out: Vec<ConstructionPoint> = Vec::new();
    for p in points {
        match out.last() {
            None => out.push(p.clone()),
            Some(last) => {
                if p.t >= &last.t * BigInt::from(2) - BigInt::one() {
                    out.push(p.clone());
                }
            }
        }
        if out.len() == want {
            break;
        }
    }
    out
}
