//! Acceptance gate: one test per criterion, every tolerance pinned exactly,
//! one pass/fail line printed per criterion (visible with `--nocapture`).

use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use starlat::bodies::{
    b1_boundary_point, b1_piece_range, honeycomb_critical_basis, B1Piece, Gauge,
};
use starlat::construct::{
    doubling_ladder, find_admissible, prepare, verify_asymptotics, verify_identities,
};
use starlat::decompose::{
    brute_force_decomposition, c0_sweep, certify_lower_bound, minkowski_chain_check,
    worstcase_sequence, WorstcaseConfig,
};
use starlat::exact::{hnf, rat, rat_int, random_unimodular, IntegerMatrix, Rational, RationalMatrix};
use starlat::lattice::{
    congruence_member, lattice_equal, lattice_from_n, orthogonal_section, weyl_lattice,
    ApproxTarget, Lattice,
};
use starlat::minima::{
    successive_minima, sweep_ratio, verify_witnesses, SweepMode,
};

struct Criterion {
    number: u32,
    label: &'static str,
    start: std::time::Instant,
}

impl Criterion {
    fn new(number: u32, label: &'static str) -> Self {
        Criterion {
            number,
            label,
            start: std::time::Instant::now(),
        }
    }

    fn finish(self, pass: bool, detail: String) {
        let status = if pass { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2} [{:>8.2?}] {}: {detail}",
            self.number,
            self.start.elapsed(),
            self.label
        );
        assert!(pass, "criterion {} failed: {detail}", self.number);
    }
}

#[test]
fn criterion_01_determinant_identity() {
    let c = Criterion::new(1, "det Λ(n) = 1/n_{k+1}");
    let mut rng = StdRng::seed_from_u64(101);
    let mut checked = 0u32;
    for k in [2usize, 3, 4] {
        for _ in 0..334 {
            let t = ApproxTarget::random(&mut rng, k, 5000);
            let lat = lattice_from_n(&t);
            assert_eq!(
                lat.det(),
                Rational::new(BigInt::one(), t.n_last().clone()),
                "n = {t}"
            );
            checked += 1;
        }
    }
    c.finish(checked >= 1000, format!("{checked} random targets, all exact"));
}

#[test]
fn criterion_02_polarity() {
    let c = Criterion::new(2, "orthogonal section equals the polar lattice");
    let mut rng = StdRng::seed_from_u64(202);
    let mut checked = 0u32;
    for k in [2usize, 3, 4] {
        for _ in 0..167 {
            let t = ApproxTarget::random(&mut rng, k, 80);
            let section = orthogonal_section(t.n()).unwrap();
            let polar = lattice_from_n(&t).polar().unwrap();
            assert!(lattice_equal(&section, &polar), "n = {t}");
            checked += 1;
        }
    }
    c.finish(checked >= 500, format!("{checked} random targets, all equal"));
}

#[test]
fn criterion_03_weyl_congruence() {
    let c = Criterion::new(3, "Weyl lattice and congruence correspondence");
    let mut rng = StdRng::seed_from_u64(303);
    let mut checked = 0u32;
    for k in [2usize, 3] {
        for _ in 0..100 {
            let t = ApproxTarget::random(&mut rng, k, 50);
            let lat = lattice_from_n(&t);
            assert!(lattice_equal(&weyl_lattice(&t), &lat), "n = {t}");
            let scaled = lat
                .scale(&Rational::from_integer(t.n_last().clone()))
                .unwrap();
            for _ in 0..5 {
                let x: Vec<BigInt> = (0..k)
                    .map(|_| BigInt::from(rng.gen_range(-25i64..=25)))
                    .collect();
                let xr: Vec<Rational> = x
                    .iter()
                    .map(|v| Rational::from_integer(v.clone()))
                    .collect();
                assert_eq!(
                    congruence_member(&t, &x).is_some(),
                    scaled.contains(&xr),
                    "n = {t}, x = {x:?}"
                );
            }
            checked += 1;
        }
    }
    c.finish(checked >= 200, format!("{checked} random targets"));
}

#[test]
fn criterion_04_honeycomb_constants() {
    let c = Criterion::new(4, "honeycomb determinant and first minimum");
    for k in 2..=5usize {
        let basis = honeycomb_critical_basis(k).unwrap();
        let expect = Rational::new(
            BigInt::from(k as u64 + 1),
            BigInt::from(2u8).pow(k as u32),
        );
        assert_eq!(basis.det().unwrap(), expect, "det at k={k}");
        let lat = Lattice::from_basis(basis).unwrap();
        let rep = successive_minima(&lat, &Gauge::honeycomb(k).unwrap());
        assert_eq!(rep.lambdas[0].value, rat_int(1), "λ1 at k={k}");
    }
    c.finish(true, "k = 2..5: det = (k+1)/2^k and λ1 = 1 exactly".into());
}

#[test]
fn criterion_05_planar_euclidean_bound() {
    let c = Criterion::new(5, "planar Euclidean product bound, N=150");
    // every squared ratio < 4/3 strictly is enforced inside the sweep;
    // a violation surfaces as an identity error here
    let res = sweep_ratio(2, &Gauge::euclid(2), 150, SweepMode::Product).unwrap();
    let squared_floor = rat(441, 400); // 1.05^2
    let mut max = res.max_ratio.clone();
    let mut n_used = 150u64;
    if max.value <= squared_floor {
        // the stated fallback: raise the bound once before judging
        n_used = 300;
        max = sweep_ratio(2, &Gauge::euclid(2), 300, SweepMode::Product)
            .unwrap()
            .max_ratio;
    }
    let pass = max.value < rat(4, 3) && max.value > squared_floor;
    c.finish(
        pass,
        format!(
            "all squared ratios < 4/3 over {} targets (N={n_used}); max {} at {:?}",
            res.rows.len(),
            max.value,
            res.argmax
        ),
    );
}

#[test]
fn criterion_06_first_power_sup_ramp() {
    let c = Criterion::new(6, "first-power sup sweep ramp, N=150");
    let res = sweep_ratio(2, &Gauge::sup(2), 150, SweepMode::FirstPower).unwrap();
    // λ1^2/det never exceeds 1/Δ(cube) = 1 and the sweep max clears 0.9
    let pass = res.max_ratio.value <= rat_int(1) && res.max_ratio.value > rat(9, 10);
    c.finish(
        pass,
        format!(
            "max λ1²/det = {} at {:?} (bound 1 exact)",
            res.max_ratio.value, res.argmax
        ),
    );
}

#[test]
fn criterion_07_sequence_asymptotics() {
    let c = Criterion::new(7, "sequence constructor asymptotics and identities");
    let families = [
        (
            prepare(RationalMatrix::identity(2), vec![rat(1, 2), rat(3, 4)]).unwrap(),
            40u64,
        ),
        (
            prepare(
                honeycomb_critical_basis(3).unwrap(),
                vec![rat(1, 2), rat(3, 4), rat_int(1)],
            )
            .unwrap(),
            60u64,
        ),
    ];
    for (params, t_limit) in families {
        // the three direction identities hold exactly
        verify_identities(&params).unwrap();
        let run = find_admissible(&params, 16, t_limit, 2).unwrap();
        let ladder = doubling_ladder(&run.points, 4);
        assert!(ladder.len() >= 4, "need 4 doubling t values");
        let table = verify_asymptotics(&params, &ladder).unwrap();
        assert!(
            table.bounded(4),
            "t-scaled error columns exceeded the factor-4 median rule"
        );
    }
    c.finish(
        true,
        "both families: 4-step doubling ladders bounded, identities exact".into(),
    );
}

#[test]
fn criterion_08_minima_convergence() {
    let c = Criterion::new(8, "scaled-lattice first-minimum convergence");
    let params = prepare(RationalMatrix::identity(2), vec![rat(1, 2), rat(3, 4)]).unwrap();
    let run = find_admissible(&params, 8, 60, 2).unwrap();
    let limit = Lattice::from_basis(params.basis.clone()).unwrap();
    let gauge = Gauge::sup(2);
    let lim = successive_minima(&limit, &gauge);
    let mut prev: Option<Rational> = None;
    let mut violations = 0u32;
    let mut errs = Vec::new();
    for p in &run.points {
        let scaled = p
            .lattice()
            .scale(&Rational::from_integer(&params.d * &p.t))
            .unwrap();
        let rep = successive_minima(&scaled, &gauge);
        let err = (&rep.lambdas[0].value - &lim.lambdas[0].value).abs();
        if let Some(prev) = &prev {
            if &err > prev {
                violations += 1;
            }
        }
        errs.push(err.to_string());
        prev = Some(err);
    }
    c.finish(
        violations <= 1,
        format!("deviations along t: [{}], {violations} monotonicity violations", errs.join(", ")),
    );
}

#[test]
fn criterion_09_decomposition_statistic_bounds() {
    let c = Criterion::new(9, "decomposition statistic bounds");
    // k = 2, exhaustive to height 40; the per-class bound (ratio² <= 4/3)
    // is enforced inside the sweep
    let sweep2 = c0_sweep(2, 40).unwrap();
    let reach = sweep2.max_ratio_pow_k.clone();
    // k = 3, exhaustive to height 10, cubed bound 2^3/4 = 2
    let sweep3 = c0_sweep(3, 10).unwrap();
    for row in &sweep3.rows {
        assert!(row.ratio_pow_k <= rat_int(2), "n = {:?}", row.n);
    }
    let ramp_ok = reach >= rat(6, 5);
    c.finish(
        ramp_ok,
        format!(
            "k=2: {} classes all ratio² <= 4/3, max {} at {:?} (required >= 6/5); \
             k=3: {} classes all ratio³ <= 2",
            sweep2.rows.len(),
            reach,
            sweep2.argmax,
            sweep3.rows.len()
        ),
    );
}

#[test]
fn criterion_10_certificate_soundness() {
    let c = Criterion::new(10, "certified bounds below brute-force optima");
    let mut checked = 0u32;
    // k = 2: all strictly ordered primitive targets with height <= 20
    for n1 in 1..=18i64 {
        for n2 in n1 + 1..=19 {
            for n3 in n2 + 1..=20 {
                let n = [n1, n2, n3];
                if n.iter().fold(0i64, |a, &b| num_integer::gcd(a, b)) != 1 {
                    continue;
                }
                let t = ApproxTarget::from_i64(&n).unwrap();
                let cert = certify_lower_bound(&t).unwrap();
                let brute = brute_force_decomposition(t.n(), None).unwrap();
                assert!(cert.dominated_by(&brute, 2), "n = {n:?}");
                checked += 1;
            }
        }
    }
    // k = 3: all strictly ordered primitive targets with height <= 8
    for n1 in 1..=5i64 {
        for n2 in n1 + 1..=6 {
            for n3 in n2 + 1..=7 {
                for n4 in n3 + 1..=8 {
                    let n = [n1, n2, n3, n4];
                    if n.iter().fold(0i64, |a, &b| num_integer::gcd(a, b)) != 1 {
                        continue;
                    }
                    let t = ApproxTarget::from_i64(&n).unwrap();
                    let cert = certify_lower_bound(&t).unwrap();
                    let brute = brute_force_decomposition(t.n(), None).unwrap();
                    assert!(cert.dominated_by(&brute, 3), "n = {n:?}");
                    checked += 1;
                }
            }
        }
    }
    c.finish(
        true,
        format!("{checked} strictly ordered targets, every certificate below the optimum"),
    );
}

#[test]
fn criterion_11_worstcase_mechanism() {
    let c = Criterion::new(11, "worst-case pipeline window inequality, k=3");
    let eps = rat(1, 2);
    let points = worstcase_sequence(3, &eps, 1, &WorstcaseConfig::default()).unwrap();
    let p = &points[0];
    // exact window inequality f³·(k+1)·n₄ > (1-ε)³·2³ and the implied
    // certified cubed ratio above (1-ε)³/(k+1) = 1/32
    let pass = p.check_lhs > p.check_rhs && p.certificate.bound_pow_k > rat(1, 32);
    c.finish(
        pass,
        format!(
            "t = {}, n₄ = {}, f_min = {}, certified ratio³ = {} > 1/32",
            p.point.t,
            p.point.target.n_last(),
            p.certificate.f_min.value,
            p.certificate.bound_pow_k
        ),
    );
}

#[test]
fn criterion_12_property_suites() {
    let c = Criterion::new(12, "property suites");
    let mut rng = StdRng::seed_from_u64(1212);

    // gauge homogeneity and symmetry across every kind
    let gauges: Vec<Gauge> = vec![
        Gauge::sup(3),
        Gauge::euclid(3),
        Gauge::honeycomb(3).unwrap(),
        Gauge::b1(rat(1, 3), rat(2, 3)).unwrap(),
        Gauge::body_of_n(ApproxTarget::from_i64(&[2, 3, 5, 7]).unwrap()).unwrap(),
    ];
    for g in &gauges {
        let k = g.dim();
        for _ in 0..60 {
            let x: Vec<Rational> = (0..k)
                .map(|_| rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)))
                .collect();
            let cfac = rat(rng.gen_range(1i64..=7), rng.gen_range(1i64..=4));
            let scaled: Vec<Rational> = x.iter().map(|v| v * &cfac).collect();
            let neg: Vec<Rational> = x.iter().map(|v| -v).collect();
            assert_eq!(g.evaluate(&scaled), g.evaluate(&x).scale(&cfac));
            assert_eq!(g.evaluate(&neg), g.evaluate(&x));
        }
    }

    // B1 boundary points all evaluate to exactly 1; containment in the cube
    for _ in 0..100 {
        let a = rng.gen_range(1i64..20);
        let b = rng.gen_range(a + 1..21);
        let alpha = rat(a, 21);
        let beta = rat(b, 21);
        let g = Gauge::b1(alpha.clone(), beta.clone()).unwrap();
        for piece in [
            B1Piece::HorizontalSegment,
            B1Piece::VerticalSegment,
            B1Piece::ArcPositiveSlope,
            B1Piece::ArcNegativeSlope,
        ] {
            let (lo, hi) = b1_piece_range(&alpha, &beta, piece);
            let t = &lo + (&hi - &lo) * rat(rng.gen_range(0i64..=4), 4);
            let (x, y) = b1_boundary_point(&alpha, &beta, piece, &t).unwrap();
            assert_eq!(g.evaluate(&[x, y]).value, rat_int(1));
        }
        let s = Gauge::sup(2);
        let point = vec![
            rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)),
            rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)),
        ];
        assert!(g.evaluate(&point) >= s.evaluate(&point));
    }

    // HNF invariance under unimodular factors
    for _ in 0..60 {
        let n = rng.gen_range(2..=4usize);
        let base = IntegerMatrix::from_rows(
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                        .collect()
                })
                .collect(),
        );
        let u = random_unimodular(&mut rng, n, 12);
        let h1 = hnf(&base);
        let h2 = hnf(&u.mul(&base));
        assert_eq!(h1.rank, h2.rank);
        assert_eq!(h1.mat, h2.mat);
    }

    // witness contract for the minima engine
    for n in [[1i64, 1, 2], [2, 3, 7], [3, 5, 8], [1, 6, 7]] {
        let lat = lattice_from_n(&ApproxTarget::from_i64(&n).unwrap());
        for g in [
            Gauge::sup(2),
            Gauge::euclid(2),
            Gauge::honeycomb(2).unwrap(),
            Gauge::b1(rat(1, 4), rat(1, 2)).unwrap(),
        ] {
            let rep = successive_minima(&lat, &g);
            verify_witnesses(&lat, &g, &rep).unwrap();
        }
    }

    // Minkowski chain on 200 random pairs (the check itself errors on a
    // violation)
    let mut checked = 0u32;
    while checked < 200 {
        let m: Vec<BigInt> = (0..3)
            .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
            .collect();
        let n: Vec<BigInt> = (0..3)
            .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
            .collect();
        match minkowski_chain_check(&m, &n) {
            Ok(_) => checked += 1,
            Err(starlat::Error::Unbounded) => continue,
            Err(e) => panic!("minkowski chain violated: {e}"),
        }
    }

    c.finish(
        true,
        "homogeneity, boundary, containment, HNF, witnesses, 200 polygon chains".into(),
    );
}
