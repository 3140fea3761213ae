//! Subcommand dispatch for the `starlat` binary.
//!
//! Every run echoes its resolved configuration into the output header, all
//! machine-readable numbers are exact ("num/den" strings or integers), and
//! runs with identical configuration produce byte-identical output. Exit
//! codes: 0 success, 1 validation error, 2 violated exact identity (a bug,
//! not bad input).

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::bodies::{polygon_pi, Gauge};
use crate::construct::{find_admissible, prepare, run_to_json, verify_identities};
use crate::decompose::{
    brute_force_decomposition, c0_sweep, certify_lower_bound, heuristic_decomposition,
    minkowski_chain_check, worstcase_sequence, WorstcaseConfig,
};
use crate::exact::{rat_parse, rat_str, Rational, RationalMatrix};
use crate::lattice::{
    congruence_member, lattice_equal, lattice_from_n, orthogonal_section, weyl_lattice,
    ApproxTarget,
};
use crate::minima::{constrained_minima, successive_minima, sweep_ratio, ConstrainedProblem, SweepMode};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "starlat", version, about = "exact lattice approximation toolkit")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// output format
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
    /// worker threads (0 = all cores; env STARLAT_THREADS overrides the default)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// seed for randomized spot checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// canonical basis and determinant of the approximation lattice of n
    LambdaN {
        /// target vector, comma separated
        #[arg(long)]
        n: String,
    },
    /// polar lattice of Λ(n) and the orthogonal-section identity
    Polar {
        #[arg(long)]
        n: String,
    },
    /// Weyl-orbit lattice of n and the congruence system test
    Weyl {
        #[arg(long)]
        n: String,
        /// optional integer vector for the congruence membership test
        #[arg(long)]
        x: Option<String>,
    },
    /// successive minima of a gauge over Λ(n)
    Minima {
        #[arg(long)]
        n: String,
        /// sup | euclid | honeycomb | b1:α,β | mn
        #[arg(long, default_value = "sup")]
        gauge: String,
    },
    /// denominator-constrained approximation minima of a rational point
    Approx {
        /// rational coordinates, comma separated (e.g. 1/2,1/2)
        #[arg(long)]
        x: String,
        /// denominator bound
        #[arg(long = "Q")]
        q: String,
        #[arg(long, default_value = "sup")]
        gauge: String,
        /// how many minima (default: all k)
        #[arg(long)]
        count: Option<usize>,
    },
    /// exhaustive minima-ratio sweep over all targets up to a height bound
    Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "euclid")]
        gauge: String,
        /// height bound on n_{k+1}
        #[arg(long = "N")]
        max: u64,
        #[arg(long, default_value = "product", value_parser = ["product", "first-power"])]
        mode: String,
    },
    /// build targets n(t) converging to a prescribed lattice
    Construct {
        /// JSON file: { "basis": [["num/den", ...], ...], "alphas": [...] }
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 4)]
        count: usize,
        #[arg(long, default_value_t = 40)]
        t_limit: u64,
        #[arg(long, default_value_t = 2)]
        tvec_box: u64,
    },
    /// brute-force and heuristic decomposition of one integer vector
    Decompose {
        #[arg(long)]
        n: String,
        /// cap on the decomposition product
        #[arg(long)]
        cap: Option<u64>,
    },
    /// exhaustive decomposition-statistic sweep up to a height bound
    C0Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        max: u64,
    },
    /// certified decomposition lower bound for a strictly ordered target
    CertifyDecomp {
        #[arg(long)]
        n: String,
    },
    /// worst-case decomposition sequence over the honeycomb critical lattice
    Worstcase {
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// window parameter, e.g. 1/2
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        t_limit: u64,
        #[arg(long, default_value_t = 3)]
        tvec_box: u64,
    },
    /// run the exact invariant suites
    Selftest {
        /// shrink the sample counts
        #[arg(long)]
        quick: bool,
    },
}

pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success exit codes
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let threads = cli.common.threads.unwrap_or_else(|| {
        std::env::var("STARLAT_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(0)
    });
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build();
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let out = pool.install(|| dispatch(&cli.command, &cli.common, threads));
    match out {
        Ok(text) => {
            println!("{text}");
            0
        }
        Err(Error::IdentityViolation(msg)) => {
            eprintln!("identity violation: {msg}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn parse_bigints(s: &str) -> Result<Vec<BigInt>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidParameter(format!("bad integer `{p}`")))
        })
        .collect()
}

fn parse_rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(rat_parse).collect()
}

fn parse_target(s: &str) -> Result<ApproxTarget> {
    ApproxTarget::new(parse_bigints(s)?)
}

fn parse_gauge(name: &str, k: usize, target: Option<&ApproxTarget>) -> Result<Gauge> {
    match name {
        "sup" => Ok(Gauge::sup(k)),
        "euclid" => Ok(Gauge::euclid(k)),
        "honeycomb" => Gauge::honeycomb(k),
        "mn" => match target {
            Some(t) => Gauge::body_of_n(t.clone()),
            None => Err(Error::InvalidParameter(
                "gauge `mn` needs a target vector".into(),
            )),
        },
        other => match other.strip_prefix("b1:") {
            Some(rest) => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 2 {
                    return Err(Error::InvalidParameter(
                        "b1 gauge syntax: b1:alpha,beta".into(),
                    ));
                }
                Gauge::b1(rat_parse(parts[0])?, rat_parse(parts[1])?)
            }
            None => Err(Error::InvalidParameter(format!("unknown gauge `{other}`"))),
        },
    }
}

fn config_json(common: &Common, threads: usize, fields: serde_json::Value) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    if let serde_json::Value::Object(m) = fields {
        obj.extend(m);
    }
    obj.insert("format".into(), common.format.clone().into());
    obj.insert("threads".into(), threads.into());
    obj.insert("seed".into(), common.seed.into());
    serde_json::Value::Object(obj)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable value")
}

fn dispatch(cmd: &Command, common: &Common, threads: usize) -> Result<String> {
    match cmd {
        Command::LambdaN { n } => {
            let target = parse_target(n)?;
            let lat = lattice_from_n(&target);
            let config = config_json(
                common,
                threads,
                serde_json::json!({"subcommand": "lambda-n", "n": n}),
            );
            Ok(pretty(&serde_json::json!({
                "config": config,
                "lattice": lat.to_json(),
                "det": rat_str(&lat.det()),
            })))
        }
        Command::Polar { n } => {
            let target = parse_target(n)?;
            let lat = lattice_from_n(&target);
            let polar = lat.polar()?;
            let section = orthogonal_section(target.n())?;
            if !lattice_equal(&polar, &section) {
                return Err(Error::IdentityViolation(format!(
                    "orthogonal section differs from the polar lattice for n={target}"
                )));
            }
            let config = config_json(
                common,
                threads,
                serde_json::json!({"subcommand": "polar", "n": n}),
            );
            Ok(pretty(&serde_json::json!({
                "config": config,
                "lattice": lat.to_json(),
                "polar": polar.to_json(),
                "orthogonal_section": section.to_json(),
                "polarity_identity": true,
            })))
        }
        Command::Weyl { n, x } => {
            let target = parse_target(n)?;
            let weyl = weyl_lattice(&target);
            let lat = lattice_from_n(&target);
            if !lattice_equal(&weyl, &lat) {
                return Err(Error::IdentityViolation(format!(
                    "Weyl lattice differs from Λ(n) for n={target}"
                )));
            }
            let congruence = match x {
                Some(xs) => {
                    let xv = parse_bigints(xs)?;
                    if xv.len() != target.k() {
                        return Err(Error::Dimension(format!(
                            "x needs {} entries",
                            target.k()
                        )));
                    }
                    let witness = congruence_member(&target, &xv);
                    serde_json::json!({
                        "x": xs,
                        "member": witness.is_some(),
                        "witness": witness.map(|r| r.to_string()),
                    })
                }
                None => serde_json::Value::Null,
            };
            let config = config_json(
                common,
                threads,
                serde_json::json!({"subcommand": "weyl", "n": n, "x": x}),
            );
            Ok(pretty(&serde_json::json!({
                "config": config,
                "weyl": weyl.to_json(),
                "equals_lambda_n": true,
                "congruence": congruence,
            })))
        }
        Command::Minima { n, gauge } => {
            let target = parse_target(n)?;
            let g = parse_gauge(gauge, target.k(), Some(&target))?;
            let report = successive_minima(&lattice_from_n(&target), &g);
            let config = config_json(
                common,
                threads,
                serde_json::json!({"subcommand": "minima", "n": n, "gauge": g.name()}),
            );
            Ok(pretty(&serde_json::json!({
                "config": config,
                "report": report.to_json(),
            })))
        }
        Command::Approx { x, q, gauge, count } => {
            let xv = parse_rationals(x)?;
            let k = xv.len();
            let g = parse_gauge(gauge, k, None)?;
            let problem = ConstrainedProblem::new(xv, rat_parse(q)?, g.clone())?;
            let count = count.unwrap_or(k);
            let report = constrained_minima(&problem, count)?;
            let config = config_json(
                common,
                threads,
                serde_json::json!({
                    "subcommand": "approx", "x": x, "Q": q,
                    "gauge": g.name(), "count": count,
                }),
            );
            Ok(pretty(&serde_json::json!({
                "config": config,
                "report": report.to_json(),
            })))
        }
        Command::Sweep { k, gauge, max, mode } => {
            let g = parse_gauge(gauge, *k, None)?;
            let mode = match mode.as_str() {
                "product" => SweepMode::Product,
                _ => SweepMode::FirstPower,
            };
            let result = sweep_ratio(*k, &g, *max, mode)?;
            let config = config_json(
                common,
                threads,
                serde_json::json!({
                    "subcommand": "sweep", "k": k, "gauge": g.name(),
                    "N": max, "mode": mode.name(),
                }),
            );
            if common.format == "csv" {
                let mut out = config_csv_header(&config);
                let cols: Vec<String> = (1..=k + 1).map(|i| format!("n{i}")).collect();
                out.push_str(&format!("{},ratio_num,ratio_den,exp\n", cols.join(",")));
                for row in &result.rows {
                    let ns: Vec<String> = row.n.iter().map(|v| v.to_string()).collect();
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        ns.join(","),
                        row.ratio.value.numer(),
                        row.ratio.value.denom(),
                        row.ratio.exp
                    ));
                }
                out.pop();
                Ok(out)
            } else {
                Ok(pretty(&serde_json::json!({
                    "config": config,
                    "max_ratio": result.max_ratio.to_json(),
                    "argmax": result.argmax,
                    "rows": result.rows.iter().map(|r| serde_json::json!({
                        "n": r.n,
                        "ratio": r.ratio.to_json(),
                    })).collect::<Vec<_>>(),
                })))
            }
        }
        Command::Construct {
            params,
            count,
            t_limit,
            tvec_box,
        } => {
            let text = std::fs::read_to_string(params)
                .map_err(|e| Error::InvalidParameter(format!("cannot read {params}: {e}")))?;
            let spec: ParamsFile = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidParameter(format!("bad params file: {e}")))?;
            let sp = spec.into_params()?;
            verify_identities(&sp)?;
            let run = find_admissible(&sp, *count, *t_limit, *tvec_box)?;
            let config = config_json(
                common,
                threads,
                serde_json::json!({
                    "subcommand": "construct", "params": params, "count": count,
                    "t_limit": t_limit, "tvec_box": tvec_box, "d": sp.d.to_string(),
                }),
            );
            Ok(pretty(&serde_json::json!({
                "config": config,
                "tvec": run.tvec.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "arithmetic_step": run.arithmetic_step.as_ref().map(|s| s.to_string()),
                "points": run_to_json(&sp, &run)?,
            })))
        }
        Command::Decompose { n, cap } => {
            let nv = parse_bigints(n)?;
            let k = nv.len() - 1;
            let brute = brute_force_decomposition(&nv, *cap)?;
            let heuristic = heuristic_decomposition(&nv)?;
            let config = config_json(
                common,
                threads,
                serde_json::json!({"subcommand": "decompose", "n": n, "cap": cap}),
            );
            Ok(pretty(&serde_json::json!({
                "config": config,
                "brute_force": brute.to_json(k),
                "heuristic": heuristic.to_json(k),
            })))
        }
        Command::C0Sweep { k, max } => {
            let sweep = c0_sweep(*k, *max)?;
            let config = config_json(
                common,
                threads,
                serde_json::json!({"subcommand": "c0-sweep", "k": k, "N": max}),
            );
            if common.format == "csv" {
                let mut out = config_csv_header(&config);
                let cols: Vec<String> = (1..=k + 1).map(|i| format!("n{i}")).collect();
                out.push_str(&format!(
                    "{},product,ratio_pow_k_num,ratio_pow_k_den\n",
                    cols.join(",")
                ));
                for row in &sweep.rows {
                    let ns: Vec<String> = row.n.iter().map(|v| v.to_string()).collect();
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        ns.join(","),
                        row.product,
                        row.ratio_pow_k.numer(),
                        row.ratio_pow_k.denom()
                    ));
                }
                out.pop();
                Ok(out)
            } else {
                Ok(pretty(&serde_json::json!({
                    "config": config,
                    "max_ratio_pow_k": rat_str(&sweep.max_ratio_pow_k),
                    "argmax": sweep.argmax,
                    "rows": sweep.rows.iter().map(|r| serde_json::json!({
                        "n": r.n,
                        "product": r.product,
                        "ratio_pow_k": rat_str(&r.ratio_pow_k),
                    })).collect::<Vec<_>>(),
                })))
            }
        }
        Command::CertifyDecomp { n } => {
            let target = parse_target(n)?;
            let cert = certify_lower_bound(&target)?;
            let brute = brute_force_decomposition(target.n(), None)?;
            if !cert.dominated_by(&brute, target.k()) {
                return Err(Error::IdentityViolation(format!(
                    "certificate exceeds the brute-force optimum for n={target}"
                )));
            }
            let config = config_json(
                common,
                threads,
                serde_json::json!({"subcommand": "certify-decomp", "n": n}),
            );
            Ok(pretty(&serde_json::json!({
                "config": config,
                "certificate": cert.to_json(),
                "brute_force": brute.to_json(target.k()),
                "sound": true,
            })))
        }
        Command::Worstcase {
            k,
            eps,
            count,
            t_limit,
            tvec_box,
        } => {
            let eps = rat_parse(eps)?;
            let cfg = WorstcaseConfig {
                t_limit: *t_limit,
                tvec_box: *tvec_box,
                seed: common.seed,
                scan_budget: (*count).max(4) * 6,
            };
            let points = worstcase_sequence(*k, &eps, *count, &cfg)?;
            let config = config_json(
                common,
                threads,
                serde_json::json!({
                    "subcommand": "worstcase", "k": k, "eps": rat_str(&eps),
                    "count": count, "t_limit": t_limit, "tvec_box": tvec_box,
                }),
            );
            Ok(pretty(&serde_json::json!({
                "config": config,
                "points": points.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
            })))
        }
        Command::Selftest { quick } => selftest(common, threads, *quick),
    }
}

fn config_csv_header(config: &serde_json::Value) -> String {
    let mut parts: Vec<String> = Vec::new();
    if let serde_json::Value::Object(map) = config {
        for (k, v) in map {
            let vs = match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            parts.push(format!("{k}={vs}"));
        }
    }
    format!("# {}\n", parts.join(" "))
}

#[derive(serde::Deserialize)]
struct ParamsFile {
    basis: Vec<Vec<String>>,
    alphas: Vec<String>,
}

impl ParamsFile {
    fn into_params(self) -> Result<crate::construct::SequenceParams> {
        let rows: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|row| row.iter().map(|s| rat_parse(s)).collect())
            .collect::<Result<_>>()?;
        let alphas: Vec<Rational> = self
            .alphas
            .iter()
            .map(|s| rat_parse(s))
            .collect::<Result<_>>()?;
        prepare(RationalMatrix::from_rows(rows), alphas)
    }
}

/// Runs the exact invariant suites; any violated identity aborts with the
/// identity-violation exit code.
fn selftest(common: &Common, threads: usize, quick: bool) -> Result<String> {
    use crate::bodies::{b1_boundary_point, b1_piece_range, honeycomb_critical_basis, B1Piece};
    use crate::exact::{hnf, random_unimodular, IntegerMatrix};
    use crate::lattice::section_det_identity;
    use crate::minima::verify_witnesses;
    use num_traits::One;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    let mut rng = StdRng::seed_from_u64(common.seed);
    let scale = if quick { 1usize } else { 4 };
    let mut lines: Vec<String> = Vec::new();
    let config = config_json(
        common,
        threads,
        serde_json::json!({"subcommand": "selftest", "quick": quick}),
    );
    lines.push(config_csv_header(&config).trim_end().to_string());

    // determinant identity
    for k in 2..=4usize {
        for _ in 0..25 * scale {
            let t = ApproxTarget::random(&mut rng, k, 60);
            let lat = lattice_from_n(&t);
            if lat.det() != Rational::new(BigInt::one(), t.n_last().clone()) {
                return Err(Error::IdentityViolation(format!("det Λ(n) != 1/n_k+1 at {t}")));
            }
        }
    }
    lines.push("ok determinant-identity".into());

    // polarity
    for k in 2..=3usize {
        for _ in 0..15 * scale {
            let t = ApproxTarget::random(&mut rng, k, 40);
            let polar = lattice_from_n(&t).polar()?;
            if !lattice_equal(&orthogonal_section(t.n())?, &polar) {
                return Err(Error::IdentityViolation(format!("section != polar at {t}")));
            }
        }
    }
    lines.push("ok polarity".into());

    // Weyl lattice and congruence system
    for _ in 0..10 * scale {
        let t = ApproxTarget::random(&mut rng, 2, 30);
        if !lattice_equal(&weyl_lattice(&t), &lattice_from_n(&t)) {
            return Err(Error::IdentityViolation(format!("Weyl lattice != Λ(n) at {t}")));
        }
        let scaled = lattice_from_n(&t).scale(&Rational::from_integer(t.n_last().clone()))?;
        for _ in 0..6 {
            let x: Vec<BigInt> = (0..2)
                .map(|_| BigInt::from(rng.gen_range(-12i64..=12)))
                .collect();
            let xr: Vec<Rational> = x.iter().map(|v| Rational::from_integer(v.clone())).collect();
            if congruence_member(&t, &x).is_some() != scaled.contains(&xr) {
                return Err(Error::IdentityViolation(format!(
                    "congruence/membership mismatch at n={t}, x={x:?}"
                )));
            }
        }
    }
    lines.push("ok weyl-congruence".into());

    // section determinant identity
    for _ in 0..15 * scale {
        let m: Vec<BigInt> = (0..4).map(|_| BigInt::from(rng.gen_range(-6i64..=6))).collect();
        let n: Vec<BigInt> = (0..4).map(|_| BigInt::from(rng.gen_range(-6i64..=6))).collect();
        match section_det_identity(&m, &n) {
            Ok((a, b)) if a != b => {
                return Err(Error::IdentityViolation(format!(
                    "section determinants differ for m={m:?}, n={n:?}"
                )))
            }
            _ => {}
        }
    }
    lines.push("ok section-determinants".into());

    // gauge homogeneity and symmetry
    let gauges: Vec<Gauge> = vec![
        Gauge::sup(3),
        Gauge::euclid(3),
        Gauge::honeycomb(3)?,
        Gauge::b1(rat_parse("1/3")?, rat_parse("2/3")?)?,
        Gauge::body_of_n(ApproxTarget::from_i64(&[2, 3, 5, 7])?)?,
    ];
    for g in &gauges {
        let k = g.dim();
        for _ in 0..10 * scale {
            let x: Vec<Rational> = (0..k)
                .map(|_| {
                    Rational::new(
                        rng.gen_range(-9i64..=9).into(),
                        rng.gen_range(1i64..=5).into(),
                    )
                })
                .collect();
            let c = Rational::new(
                rng.gen_range(1i64..=7).into(),
                rng.gen_range(1i64..=4).into(),
            );
            let scaled: Vec<Rational> = x.iter().map(|v| v * &c).collect();
            let neg: Vec<Rational> = x.iter().map(|v| -v).collect();
            if g.evaluate(&scaled) != g.evaluate(&x).scale(&c) || g.evaluate(&neg) != g.evaluate(&x)
            {
                return Err(Error::IdentityViolation(format!(
                    "gauge {} not homogeneous/symmetric",
                    g.name()
                )));
            }
        }
    }
    lines.push("ok gauge-homogeneity".into());

    // B1 boundary points evaluate to exactly one
    for _ in 0..5 * scale {
        let a = rng.gen_range(1i64..12);
        let b = rng.gen_range(a + 1..13);
        let alpha = Rational::new(a.into(), 16.into());
        let beta = Rational::new(b.into(), 16.into());
        let g = Gauge::b1(alpha.clone(), beta.clone())?;
        for piece in [
            B1Piece::HorizontalSegment,
            B1Piece::VerticalSegment,
            B1Piece::ArcPositiveSlope,
            B1Piece::ArcNegativeSlope,
        ] {
            let (lo, hi) = b1_piece_range(&alpha, &beta, piece);
            let t = &lo + (&hi - &lo) * Rational::new(rng.gen_range(0i64..=6).into(), 6.into());
            let (x, y) = b1_boundary_point(&alpha, &beta, piece, &t)?;
            if g.evaluate(&[x, y]).value != Rational::one() {
                return Err(Error::IdentityViolation(format!(
                    "boundary point of b1:{alpha},{beta} not on the unit level"
                )));
            }
        }
    }
    lines.push("ok b1-boundary".into());

    // honeycomb constants
    for k in 2..=4usize {
        let basis = honeycomb_critical_basis(k)?;
        let lat = crate::lattice::Lattice::from_basis(basis)?;
        let rep = successive_minima(&lat, &Gauge::honeycomb(k)?);
        if rep.lambdas[0].value != Rational::one() {
            return Err(Error::IdentityViolation(format!(
                "honeycomb critical lattice first minimum != 1 at k={k}"
            )));
        }
    }
    lines.push("ok honeycomb-constants".into());

    // HNF unimodular invariance
    for _ in 0..10 * scale {
        let n = rng.gen_range(2..=4usize);
        let base = IntegerMatrix::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect())
                .collect(),
        );
        let u = random_unimodular(&mut rng, n, 10);
        let h1 = hnf(&base);
        let h2 = hnf(&u.mul(&base));
        if h1.rank != h2.rank || h1.mat != h2.mat {
            return Err(Error::IdentityViolation("HNF not unimodular-invariant".into()));
        }
    }
    lines.push("ok hnf-invariance".into());

    // witness contract
    for n in [[1i64, 1, 2], [2, 3, 7], [3, 5, 8]] {
        let lat = lattice_from_n(&ApproxTarget::from_i64(&n)?);
        for g in [Gauge::sup(2), Gauge::euclid(2)] {
            let rep = successive_minima(&lat, &g);
            verify_witnesses(&lat, &g, &rep)?;
        }
    }
    lines.push("ok witness-contract".into());

    // Minkowski chain on the pair polygon
    let mut checked = 0;
    while checked < 10 * scale {
        let m: Vec<BigInt> = (0..3).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect();
        let n: Vec<BigInt> = (0..3).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect();
        match minkowski_chain_check(&m, &n) {
            Ok(_) => checked += 1,
            Err(Error::Unbounded) => continue,
            Err(e) => return Err(e),
        }
    }
    lines.push("ok minkowski-chain".into());

    // polygon area example stays pinned
    let area = polygon_pi(
        &[1.into(), 0.into(), 0.into()],
        &[1.into(), 1.into(), 2.into()],
    )?
    .area;
    if area != Rational::from_integer(2.into()) {
        return Err(Error::IdentityViolation("pair polygon area drifted".into()));
    }
    lines.push("ok polygon-area".into());

    lines.push("selftest passed".into());
    Ok(lines.join("\n"))
}
