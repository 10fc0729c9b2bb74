//! `spherical-lab`: enumerate K-types, tabulate zonal functions, evaluate
//! matrix spherical functions and run the verifiers.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a pair is
//! inadmissible, 2 on usage errors.

mod parse;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use spherical_lab::config::set_orthogonality_tolerance;
use spherical_lab::jacobi::{
    chebyshev_grid, check_identity_a, check_zonal_correspondence, write_zonal_csv, zonal_table, Space,
};
use spherical_lab::reps::KType;
use spherical_lab::spherical::{
    check_theorem_impar, check_theorem_matrix, check_theorem_par, check_theorem_weights, check_zonal_on_group,
    functional_equation_sweep, functional_equation_sweep_taus, tau_for_label, CheckConfig, Report,
    SphericalFunction, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use spherical_lab::weights::{branching_contains, ClassificationRecord, HighestWeight};
use spherical_lab::{Exec, LabError, Tolerances};

#[derive(Parser, Debug)]
#[command(name = "spherical-lab", version, about)]
struct Cli {
    /// Write output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output format. CSV columns: ktypes `n,so_weight,variant,partner_weight,sign,dim`;
    /// zonal `space,n,j,theta,value`; verify `theorem,n,tau,delta,residual,tolerance,verdict,seed`;
    /// spherical `row,col,re,im`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// SO(n)-weights up to a label and the O(n)-types built from them.
    Ktypes {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=3))]
        n: u64,
        #[arg(long)]
        max: u32,
    },
    /// Zonal spherical functions of the sphere or projective space.
    Zonal {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long)]
        jmax: u32,
        /// Number of Chebyshev–Lobatto points on [0, π].
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
        grid: u64,
    },
    /// Run a verifier suite.
    Verify(VerifyArgs),
    /// Evaluate Φ^{τ,δ}(g).
    Spherical {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=3))]
        n: u64,
        /// Highest weight of SO(n+1), e.g. `2` or `2,1`.
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        /// `so:M`, `o:M:triv|eps` (n odd), `o:M:+|-` or `o:M` (n even).
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        /// `identity`, `euler:a,b,c`, `quat:w,x,y,z/w,x,y,z`, `angles:θ1,…` or `file:PATH`.
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Significant digits in the CSV output.
        #[arg(long, default_value_t = 12)]
        precision: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpaceArg {
    Sphere,
    Projective,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Jacobi,
    ZonalCorrespondence,
    FunctionalEquation,
    Par,
    Impar,
    Matrix,
    Weights,
    All,
}

#[derive(clap::Args, Debug, Serialize)]
struct VerifyArgs {
    #[arg(value_enum)]
    #[serde(skip)]
    which: Which,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..=3))]
    n: Option<u64>,
    /// SO(n+1) label (par: `p,q`; weights: `p,q`; functional-equation: either).
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    /// SO(n) label for par.
    #[arg(long, allow_hyphen_values = true)]
    pi: Option<String>,
    /// ℓ for impar and matrix.
    #[arg(long)]
    l: Option<u32>,
    /// m for matrix.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Tolerance override `NAME=V` (repeatable).
    #[arg(long = "tol", value_parser = parse::tolerance)]
    tol: Vec<(String, f64)>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random samples (or pairs) per check.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Quadrature band override.
    #[arg(long)]
    band: Option<usize>,
    /// Omit the timestamp so reports are byte-identical across runs.
    #[arg(long)]
    deterministic: bool,
    /// Run the quadrature loops sequentially.
    #[arg(long)]
    sequential: bool,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<LabError> for Failure {
    fn from(e: LabError) -> Self {
        Failure::Verification(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("output: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(format!("output: {e}"))
    }
}

type CmdResult = Result<bool, Failure>;

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(p) => Box::new(File::create(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_json(out: &Option<PathBuf>, value: &Value) -> Result<(), Failure> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(w)?;
    Ok(())
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn cmd_ktypes(cli: &Cli, n: usize, max: u32) -> CmdResult {
    let records: Vec<ClassificationRecord> = (0..=max as i64)
        .map(|m| ClassificationRecord::for_weight(&HighestWeight::for_so(n, vec![m])?))
        .collect::<Result<_, LabError>>()?;
    if cli.format == Some(Format::Csv) {
        let mut w = csv::Writer::from_writer(sink(&cli.out)?);
        w.write_record(["n", "so_weight", "variant", "partner_weight", "sign", "dim"])?;
        for r in &records {
            for t in &r.o_types {
                let label = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
                w.write_record([
                    r.n.to_string(),
                    label(&r.so_weight),
                    t.variant.clone(),
                    t.partner_weight.as_deref().map(label).unwrap_or_default(),
                    t.sign.map(|s| s.to_string()).unwrap_or_default(),
                    t.dim.to_string(),
                ])?;
            }
        }
        w.flush()?;
    } else {
        write_json(&cli.out, &serde_json::to_value(&records).expect("records serialize"))?;
    }
    Ok(true)
}

fn cmd_zonal(cli: &Cli, space: SpaceArg, n: usize, jmax: u32, grid: usize) -> CmdResult {
    let space = match space {
        SpaceArg::Sphere => Space::Sphere,
        SpaceArg::Projective => Space::Projective,
    };
    let rows = zonal_table(space, n, jmax, &chebyshev_grid(grid)).map_err(|e| Failure::Usage(e.to_string()))?;
    if cli.format == Some(Format::Json) {
        write_json(&cli.out, &serde_json::to_value(&rows).expect("rows serialize"))?;
    } else {
        write_zonal_csv(&rows, sink(&cli.out)?)?;
    }
    Ok(true)
}

fn check_config(args: &VerifyArgs) -> Result<CheckConfig, Failure> {
    let mut tolerances = Tolerances::default();
    for (name, value) in &args.tol {
        if name == "orthogonality" {
            if !(value.is_finite() && *value > 0.0) {
                return usage(format!("tolerance {name} must be positive"));
            }
            set_orthogonality_tolerance(Some(*value));
            continue;
        }
        tolerances.set(name, *value).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(CheckConfig {
        tolerances,
        seed: args.seed,
        samples: args.samples,
        band: args.band,
        exec: if args.sequential { Exec::Sequential } else { Exec::default() },
        basis_rotation: None,
    })
}

fn require_n(args: &VerifyArgs, expected: usize, what: &str) -> Result<(), Failure> {
    match args.n {
        Some(n) if n as usize != expected => usage(format!("{what} is defined for n = {expected} only")),
        _ => Ok(()),
    }
}

fn ns(args: &VerifyArgs) -> Vec<usize> {
    args.n.map(|n| vec![n as usize]).unwrap_or_else(|| vec![2, 3])
}

fn verify_jacobi(cfg: &CheckConfig) -> Result<Vec<Report>, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut reports = Vec::new();
    for alpha in [0.0, 0.5, 1.0, 1.5] {
        let mut max: f64 = 0.0;
        for k in 0..=20 {
            for _ in 0..50 {
                max = max.max(check_identity_a(k, alpha, rng.random_range(-1.0..=1.0))?);
            }
        }
        // α = (n − 2)/2
        let n = (2.0 * alpha + 2.0) as usize;
        reports.push(
            Report::new("jacobi", n, max, cfg.tolerances.jacobi_identity)
                .seed(cfg.seed)
                .detail("alpha", alpha)
                .detail("k_max", 20)
                .detail("points_per_k", 50),
        );
    }
    Ok(reports)
}

fn verify_zonal(args: &VerifyArgs, cfg: &CheckConfig) -> Result<Vec<Report>, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut reports = Vec::new();
    for n in ns(args) {
        let mut max: f64 = 0.0;
        for j in 0..=10 {
            for _ in 0..100 {
                max = max.max(check_zonal_correspondence(n, j, rng.random_range(0.0..=std::f64::consts::PI))?);
            }
        }
        reports.push(
            Report::new("zonal_correspondence", n, max, cfg.tolerances.zonal_scalar)
                .seed(cfg.seed)
                .detail("j_max", 10)
                .detail("thetas", 100),
        );
        let group_cfg = CheckConfig { samples: cfg.samples.min(20), ..cfg.clone() };
        for j in 0..=4 {
            reports.push(check_zonal_on_group(n, j, &group_cfg)?);
        }
    }
    Ok(reports)
}

fn verify_functional(args: &VerifyArgs, cfg: &CheckConfig) -> Result<Vec<Report>, Failure> {
    let mut reports = Vec::new();
    for n in ns(args) {
        match &args.tau {
            Some(t) => {
                let w = parse::weight(n + 1, t).map_err(Failure::Usage)?;
                reports.extend(functional_equation_sweep_taus(n, &[w], cfg)?);
            }
            None => reports.extend(functional_equation_sweep(n, if n == 2 { 4 } else { 3 }, cfg)?),
        }
    }
    Ok(reports)
}

fn verify_par(args: &VerifyArgs, cfg: &CheckConfig) -> Result<Vec<Report>, Failure> {
    require_n(args, 3, "par")?;
    let tau = args.tau.as_deref().map(|t| parse::weight(4, t)).transpose().map_err(Failure::Usage)?;
    let pi = args.pi.as_deref().map(|p| parse::weight(3, p)).transpose().map_err(Failure::Usage)?;
    if let (Some(tau), Some(pi)) = (&tau, &pi) {
        if !branching_contains(tau, pi)? {
            return Err(Failure::Verification(format!("{pi} does not occur in the restriction of {tau}")));
        }
        return Ok(vec![check_theorem_par(tau, pi, cfg)?]);
    }
    let mut reports = Vec::new();
    for p in 0..=3i64 {
        for q in -p..=p {
            let t = HighestWeight::for_so(4, vec![p, q])?;
            if tau.as_ref().is_some_and(|x| *x != t) {
                continue;
            }
            for j in 0..=p {
                let pw = HighestWeight::for_so(3, vec![j])?;
                if pi.as_ref().is_some_and(|x| *x != pw) || !branching_contains(&t, &pw)? {
                    continue;
                }
                reports.push(check_theorem_par(&t, &pw, cfg)?);
            }
        }
    }
    Ok(reports)
}

fn verify_impar(args: &VerifyArgs, cfg: &CheckConfig) -> Result<Vec<Report>, Failure> {
    require_n(args, 2, "impar")?;
    let ls: Vec<u32> = args.l.map(|l| vec![l]).unwrap_or_else(|| (0..=6).collect());
    ls.into_iter().map(|l| Ok(check_theorem_impar(l, cfg)?)).collect()
}

fn verify_matrix(args: &VerifyArgs, cfg: &CheckConfig) -> Result<Vec<Report>, Failure> {
    require_n(args, 2, "matrix")?;
    if let Some(m) = args.m {
        let l = args.l.ok_or_else(|| Failure::Usage("--m needs --l".into()))?;
        if m == 0 || m.unsigned_abs() > l as u64 {
            return usage(format!("matrix needs 0 < |m| ≤ ℓ, got ℓ={l}, m={m}"));
        }
        return Ok(vec![check_theorem_matrix(l, m, cfg)?]);
    }
    let ls: Vec<u32> = args.l.map(|l| vec![l]).unwrap_or_else(|| (1..=6).collect());
    let mut reports = Vec::new();
    for l in ls {
        for m in 1..=l as i64 {
            reports.push(check_theorem_matrix(l, m, cfg)?);
        }
    }
    Ok(reports)
}

fn verify_weights(args: &VerifyArgs, cfg: &CheckConfig) -> Result<Vec<Report>, Failure> {
    if let Some(t) = &args.tau {
        let w = parse::weight(4, t).map_err(Failure::Usage)?;
        let [p, q] = w.entries() else { unreachable!("SO(4) weights have two entries") };
        return Ok(vec![check_theorem_weights(*p, *q, cfg)?]);
    }
    let mut reports = Vec::new();
    for p in 1..=2i64 {
        for q in (-p..=p).filter(|q| *q != 0) {
            reports.push(check_theorem_weights(p, q, cfg)?);
        }
    }
    Ok(reports)
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> CmdResult {
    let cfg = check_config(args)?;
    let reports = match args.which {
        Which::Jacobi => verify_jacobi(&cfg)?,
        Which::ZonalCorrespondence => verify_zonal(args, &cfg)?,
        Which::FunctionalEquation => verify_functional(args, &cfg)?,
        Which::Par => verify_par(args, &cfg)?,
        Which::Impar => verify_impar(args, &cfg)?,
        Which::Matrix => verify_matrix(args, &cfg)?,
        Which::Weights => verify_weights(args, &cfg)?,
        Which::All => {
            if args.tau.is_some() || args.pi.is_some() || args.l.is_some() || args.m.is_some() || args.n.is_some() {
                return usage("verify all takes no --n/--tau/--pi/--l/--m");
            }
            let mut r = verify_jacobi(&cfg)?;
            r.extend(verify_zonal(args, &cfg)?);
            r.extend(verify_functional(args, &cfg)?);
            r.extend(verify_par(args, &cfg)?);
            r.extend(verify_impar(args, &cfg)?);
            r.extend(verify_matrix(args, &cfg)?);
            r.extend(verify_weights(args, &cfg)?);
            r
        }
    };
    let passed = reports.iter().all(|r| r.verdict);
    if cli.format == Some(Format::Csv) {
        let mut w = csv::Writer::from_writer(sink(&cli.out)?);
        w.write_record(["theorem", "n", "tau", "delta", "residual", "tolerance", "verdict", "seed"])?;
        for r in &reports {
            w.write_record([
                r.theorem.clone(),
                r.n.to_string(),
                r.tau.clone().unwrap_or_default(),
                r.delta.clone().unwrap_or_default(),
                format!("{:e}", r.residual),
                format!("{:e}", r.tolerance),
                if r.verdict { "pass" } else { "fail" }.to_string(),
                r.seed.map(|s| s.to_string()).unwrap_or_default(),
            ])?;
        }
        w.flush()?;
    } else {
        let which = args.which.to_possible_value().expect("no skipped variants").get_name().to_string();
        let mut doc = json!({
            "command": format!("verify {which}"),
            "config": {
                "args": args,
                "tolerances": cfg.tolerances,
                "exec": cfg.exec,
            },
            "passed": passed,
            "reports": reports,
        });
        if !args.deterministic {
            let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            doc["timestamp"] = json!(now);
        }
        write_json(&cli.out, &doc)?;
    }
    for r in reports.iter().filter(|r| !r.verdict) {
        eprintln!(
            "FAIL {} n={} tau={} delta={} residual={:e} tolerance={:e}",
            r.theorem,
            r.n,
            r.tau.as_deref().unwrap_or("-"),
            r.delta.as_deref().unwrap_or("-"),
            r.residual,
            r.tolerance
        );
    }
    Ok(passed)
}

fn cmd_spherical(cli: &Cli, n: usize, tau: &str, delta: &str, g: &str, precision: usize) -> CmdResult {
    let tau_w = parse::weight(n + 1, tau).map_err(Failure::Usage)?;
    let delta = parse::ktype(n, delta).map_err(Failure::Usage)?;
    let g = parse::element(n, g).map_err(Failure::Usage)?;
    if let KType::So(pi) = &delta {
        if !branching_contains(&tau_w, pi)? {
            return Err(Failure::Verification(format!(
                "{pi} does not occur in the restriction of {tau_w} to SO({n}): the labels do not interlace"
            )));
        }
    }
    let rep = tau_for_label(n, &tau_w)?;
    let phi = SphericalFunction::new(&rep, &delta, None, Exec::default())?;
    let value = phi.eval(&g)?;
    if cli.format == Some(Format::Json) {
        let matrix: Vec<Vec<[f64; 2]>> = (0..value.nrows())
            .map(|r| (0..value.ncols()).map(|c| [value[(r, c)].re, value[(r, c)].im]).collect())
            .collect();
        let g_rows: Vec<Vec<f64>> = g.matrix().row_iter().map(|r| r.iter().copied().collect()).collect();
        write_json(
            &cli.out,
            &json!({
                "command": "spherical",
                "config": { "n": n, "tau": tau_w.to_string(), "delta": delta.to_string() },
                "g": g_rows,
                "rank": phi.rank(),
                "matrix": matrix,
            }),
        )?;
    } else {
        let mut w = csv::Writer::from_writer(sink(&cli.out)?);
        w.write_record(["row", "col", "re", "im"])?;
        let p = precision.max(1) - 1;
        for r in 0..value.nrows() {
            for c in 0..value.ncols() {
                let z = value[(r, c)];
                w.write_record([r.to_string(), c.to_string(), format!("{:.p$e}", z.re), format!("{:.p$e}", z.im)])?;
            }
        }
        w.flush()?;
    }
    Ok(true)
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Ktypes { n, max } => cmd_ktypes(cli, *n as usize, *max),
        Command::Zonal { space, n, jmax, grid } => cmd_zonal(cli, *space, *n as usize, *jmax, *grid as usize),
        Command::Verify(args) => cmd_verify(cli, args),
        Command::Spherical { n, tau, delta, g, precision } => cmd_spherical(cli, *n as usize, tau, delta, g, *precision),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
