use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deltaq::delta::{
    delta_prime_elem_t0, delta_prime_schur_t0, delta_unprimed_schur_t0, grfrob_r_nnu, grfrob_v,
    p_coeff,
};
use deltaq::hypergeo::{
    lemma32_lhs, lemma32_rhs_proof_form, lemma32_rhs_published, lemma33_check, Lemma32Params,
    Lemma33Params,
};
use deltaq::json::ToJson;
use deltaq::osp::{c_via_qprime, d_poly};
use deltaq::qarith::q_binomial;
use deltaq::symfun::qprime;
use deltaq::tableaux::kostka_foulkes;
use deltaq::verify::{self, Bounds, Identity};
use deltaq::{Error, Partition};
use serde_json::{json, Value};

mod cache;

#[derive(Parser)]
#[command(
    name = "deltaq",
    version,
    about = "Exact t = 0 Schur delta computations and identity sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one object and print its JSON encoding.
    Compute(ComputeArgs),
    /// Check an identity over all instances within the bounds.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Qbinomial,
    KostkaFoulkes,
    Qprime,
    C,
    D,
    DeltaPrimeElem,
    DeltaPrimeSchur,
    DeltaSchur,
    PCoeff,
    GrfrobV,
    GrfrobRnnu,
    #[value(name = "lemma-3-2")]
    Lemma32,
    #[value(name = "lemma-3-3")]
    Lemma33,
}

#[derive(Args)]
struct ComputeArgs {
    target: Target,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// Partition as comma-separated descending parts, e.g. 2,1 (empty for the empty partition).
    #[arg(long)]
    lam: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<i64>,
    /// Compact JSON (the default).
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct VerifyArgs {
    identity: String,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_m: Option<usize>,
    #[arg(long)]
    max_j: Option<usize>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    /// Kostka-Foulkes cache file; overrides DELTAQ_CACHE.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Recompute every cache entry on load and drop disagreeing ones.
    #[arg(long)]
    paranoid: bool,
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::Precondition(format!("--{name} is required for this target")))
}

fn partition(v: &Option<String>, name: &str) -> Result<Partition, Error> {
    v.as_deref()
        .ok_or_else(|| Error::Precondition(format!("--{name} is required for this target")))?
        .parse()
}

fn compute(a: &ComputeArgs) -> Result<Value, Error> {
    Ok(match a.target {
        Target::Qbinomial => q_binomial(need(a.n, "n")? as i64, need(a.k, "k")? as i64)?.to_json(),
        Target::KostkaFoulkes => {
            kostka_foulkes(&partition(&a.lam, "lam")?, &partition(&a.mu, "mu")?)?.to_json()
        }
        Target::Qprime => qprime(&partition(&a.mu, "mu")?).to_json(),
        Target::C => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            if k < 1 || k > n {
                return Err(Error::Range(format!("need 1 <= k <= n, got k={k} n={n}")));
            }
            c_via_qprime(n, k)?.to_json()
        }
        Target::D => d_poly(need(a.n, "n")?, need(a.k, "k")?)?.to_json(),
        Target::DeltaPrimeElem => delta_prime_elem_t0(need(a.k, "k")?, need(a.n, "n")?)?.to_json(),
        Target::DeltaPrimeSchur => {
            delta_prime_schur_t0(&partition(&a.nu, "nu")?, need(a.n, "n")?)?.to_json()
        }
        Target::DeltaSchur => {
            delta_unprimed_schur_t0(&partition(&a.nu, "nu")?, need(a.n, "n")?)?.to_json()
        }
        Target::PCoeff => p_coeff(&partition(&a.nu, "nu")?, need(a.k, "k")?)?.to_json(),
        Target::GrfrobV => grfrob_v(need(a.n, "n")?, need(a.m, "m")?)?.to_json(),
        Target::GrfrobRnnu => grfrob_r_nnu(&partition(&a.nu, "nu")?, need(a.n, "n")?)?.to_json(),
        Target::Lemma32 => {
            let p = Lemma32Params {
                j: need(a.j, "j")?,
                alpha: need(a.alpha, "alpha")?,
                x: need(a.x, "x")?,
                y: need(a.y, "y")?,
                z: need(a.z, "z")?,
            };
            let lhs = lemma32_lhs(p)?;
            let published = lemma32_rhs_published(p)?;
            let proof_form = lemma32_rhs_proof_form(p)?;
            json!({
                "lhs": lhs.to_json(),
                "published": {"value": published.to_json(), "holds": published == lhs},
                "proof_form": {"value": proof_form.to_json(), "holds": proof_form == lhs},
            })
        }
        Target::Lemma33 => {
            let (lhs, rhs) = lemma33_check(Lemma33Params {
                n: need(a.n, "n")?,
                k: need(a.k, "k")?,
                j: need(a.j, "j")?,
                p: need(a.p, "p")?,
            })?;
            json!({"lhs": lhs.to_json(), "rhs": rhs.to_json(), "holds": lhs == rhs})
        }
    })
}

fn print_json(v: &Value, pretty: bool) {
    if pretty {
        println!(
            "{}",
            serde_json::to_string_pretty(v).expect("JSON values serialize")
        );
    } else {
        println!("{v}");
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    println!("{}", json!({"error": msg.to_string()}));
    ExitCode::from(2)
}

fn run_verify(a: &VerifyArgs) -> ExitCode {
    let id: Identity = match a.identity.parse() {
        Ok(id) => id,
        Err(e) => return usage_error(e),
    };
    let bounds = Bounds {
        max_n: a.max_n,
        max_m: a.max_m,
        max_j: a.max_j,
    };
    if let Err(e) = bounds.resolve(id) {
        return usage_error(e);
    }
    if a.jobs == Some(0) {
        return usage_error("--jobs must be positive");
    }
    let jobs = a
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let cache_path = a
        .cache
        .clone()
        .or_else(|| std::env::var_os("DELTAQ_CACHE").map(PathBuf::from));

    let mut stats = cache::CacheStats::default();
    if let Some(path) = &cache_path {
        match cache::load(path, a.paranoid) {
            Ok(s) => stats = s,
            Err(e) => return usage_error(e),
        }
    }
    let report = match verify::run(id, bounds, jobs) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    if let Some(path) = &cache_path {
        match cache::store(path) {
            Ok(n) => stats.stored = n,
            Err(e) => eprintln!("warning: {e}"),
        }
    }

    let mut out = serde_json::to_value(&report).expect("reports serialize");
    out["passed"] = report.passed().into();
    if cache_path.is_some() {
        out["cache"] = stats.to_json();
    }
    print_json(&out, true);
    eprintln!("{}", report.summary());
    for note in &report.notes {
        eprintln!("  {note}");
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Compute(a) => match compute(a) {
            Ok(v) => {
                print_json(&v, a.pretty);
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Command::Verify(a) => run_verify(a),
    }
}
