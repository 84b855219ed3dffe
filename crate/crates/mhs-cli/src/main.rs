//! `mhs` — compute multiple harmonic sums exactly, and machine-verify the
//! identity, congruence, and series suites built on them.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage
//! error.

mod report;

use clap::{Args, Parser, Subcommand};
use mhs_core::congruences::{claim_statements, run_claims, select_claims, CongGrid, Status, SweepConfig};
use mhs_core::identities::{identity_catalog, run_identities, IdentityGrid};
use mhs_core::mhs::{evaluate, Composition, ModRing, Rationals, SumKind};
use mhs_core::series::{evaluate_series, zeta_star_check, SeriesOutcome};
use report::{failures, write_report, Format, ReportRecord};
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "mhs",
    version,
    about = "Exact multiple harmonic sums with identity/congruence/series verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single sum exactly or modulo a prime power
    Compute(ComputeArgs),
    /// Run the identity and/or congruence suites
    Verify(VerifyArgs),
    /// Evaluate and check the infinite-series targets
    Series(SeriesArgs),
    /// Print the registered identities and congruence claims
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Sum kind: H (strict), S (non-strict star), Hbar (odd denominators)
    #[arg(long)]
    kind: String,
    /// Composition, e.g. "1,2" or "2^3,1" or "2,2,-3"
    #[arg(long)]
    index: String,
    /// Upper summation limit
    #[arg(long)]
    n: u64,
    /// Exact rational output (default)
    #[arg(long, default_value_t = false, conflicts_with = "modulus")]
    exact: bool,
    /// Reduce modulo this prime
    #[arg(long = "mod")]
    modulus: Option<u64>,
    /// Modulus exponent N (modulus is p^N)
    #[arg(long = "exp", default_value_t = 1)]
    nexp: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity selection glob, e.g. "L2.1*" or "all"
    #[arg(long)]
    identities: Option<String>,
    /// Congruence claim selection glob, e.g. "C3-eq41" or "all"
    #[arg(long)]
    congruences: Option<String>,
    /// Inclusive prime range "lo..hi" (default: per-claim ranges)
    #[arg(long)]
    primes: Option<String>,
    /// Cap every identity family's n-range
    #[arg(long)]
    nmax: Option<u64>,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Re-check every congruence over exact rationals instead of Z/p^N
    #[arg(long, default_value_t = false)]
    exact_oracle: bool,
    /// Output format: json, csv, text
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<String>,
    /// Seed for the randomized multiplier sequences
    #[arg(long, default_value_t = 0x6d68_7321)]
    seed: u64,
    /// Record real per-check timings (breaks byte-identical reports)
    #[arg(long, default_value_t = false)]
    timing: bool,
}

#[derive(Args)]
struct SeriesArgs {
    /// APERY2, APERY3, LESH-2..LESH-5, ZSTAR-231, ZSTAR-121, ZSTAR-12b,
    /// ZAGIER-ZZZZ, or "all"
    #[arg(long)]
    target: String,
    /// Layer parameter for the LESH targets
    #[arg(long, default_value_t = 0)]
    m: u64,
    /// First index parameter for the zeta-star targets
    #[arg(long, default_value_t = 0)]
    a: u64,
    /// Second index parameter for the zeta-star targets
    #[arg(long, default_value_t = 0)]
    b: u64,
    /// Agreement tolerance 10^-digits
    #[arg(long, default_value_t = 25)]
    digits: u32,
    /// Output format: json, csv, text
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct CatalogArgs {
    /// Output format: json, csv, text
    #[arg(long, default_value = "text")]
    format: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Series(args) => cmd_series(&args),
        Command::Catalog(args) => cmd_catalog(&args),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn cmd_compute(args: &ComputeArgs) -> ExitCode {
    let Some(kind) = SumKind::parse(&args.kind) else {
        return usage_error("--kind must be H, S, or Hbar");
    };
    let comp = match Composition::parse(&args.index) {
        Ok(c) => c,
        Err(e) => return usage_error(&format!("bad --index: {e}")),
    };
    match args.modulus {
        None => match evaluate(&Rationals, kind, &comp, args.n) {
            Ok(v) => {
                println!("{v}");
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(&e.to_string()),
        },
        Some(p) => {
            if !mhs_core::primes::is_prime(p) {
                return usage_error("--mod must be prime");
            }
            if args.nexp == 0 || args.nexp > 3 {
                return usage_error("--exp must be 1, 2, or 3");
            }
            let ring = ModRing::new(p, args.nexp);
            match evaluate(&ring, kind, &comp, args.n) {
                Ok(v) => {
                    println!("{v} (mod {}^{})", p, args.nexp);
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
    }
}

fn parse_prime_range(text: &str) -> Option<(u64, u64)> {
    let (lo, hi) = text.split_once("..")?;
    Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?))
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    if args.identities.is_none() && args.congruences.is_none() {
        return usage_error("select something: --identities and/or --congruences");
    }
    let Some(format) = Format::parse(&args.format) else {
        return usage_error("--format must be json, csv, or text");
    };
    let primes = match &args.primes {
        None => None,
        Some(t) => match parse_prime_range(t) {
            Some(r) => Some(r),
            None => return usage_error("--primes must look like 5..300"),
        },
    };
    let mut records: Vec<ReportRecord> = Vec::new();

    if let Some(sel) = &args.identities {
        let mut grid = match args.nmax {
            Some(n) => IdentityGrid::with_nmax(n),
            None => IdentityGrid::default(),
        };
        grid.seed = args.seed;
        let t0 = Instant::now();
        let outcomes = run_identities(sel, &grid);
        let micros = if args.timing {
            t0.elapsed().as_micros() as u64
        } else {
            0
        };
        for o in outcomes {
            records.push(ReportRecord {
                kind: "identity",
                id: o.id.to_string(),
                params: o.params,
                prime: None,
                modexp: None,
                lhs: o.detail.clone().unwrap_or_default(),
                rhs: String::new(),
                pass: o.pass,
                skipped: false,
                micros,
            });
        }
    }

    if let Some(sel) = &args.congruences {
        let claims = select_claims(&CongGrid::default(), sel);
        if claims.is_empty() {
            return usage_error(&format!("no congruence claim matches {sel}"));
        }
        let cfg = SweepConfig {
            primes,
            exact: args.exact_oracle,
            jobs: args.jobs,
        };
        let t0 = Instant::now();
        let results = run_claims(&claims, &cfg);
        let micros = if args.timing {
            (t0.elapsed().as_micros() as u64) / results.len().max(1) as u64
        } else {
            0
        };
        for r in results {
            records.push(ReportRecord {
                kind: "congruence",
                id: r.id,
                params: r.params,
                prime: Some(r.prime),
                modexp: Some(r.nexp),
                lhs: r.lhs,
                rhs: r.rhs,
                pass: r.status == Status::Pass,
                skipped: r.status == Status::Skipped,
                micros,
            });
        }
    }

    emit(&records, format, args.output.as_deref())
}

fn series_to_record(o: &SeriesOutcome) -> ReportRecord {
    ReportRecord {
        kind: "series",
        id: o.id.clone(),
        params: o.params.clone(),
        prime: None,
        modexp: None,
        lhs: format!("{} (bound {})", o.value, o.bound),
        rhs: o.reference.clone(),
        pass: o.pass,
        skipped: false,
        micros: 0,
    }
}

fn cmd_series(args: &SeriesArgs) -> ExitCode {
    let Some(format) = Format::parse(&args.format) else {
        return usage_error("--format must be json, csv, or text");
    };
    let binomial_target = matches!(
        args.target.as_str(),
        "APERY2" | "APERY3" | "LESH-2" | "LESH-3" | "LESH-4" | "LESH-5"
    );
    if binomial_target && args.digits > 40 {
        return usage_error("binomial-sum targets support --digits up to 40");
    }
    if (args.target.starts_with("ZSTAR") || args.target.starts_with("ZAGIER"))
        && args.digits > 20
    {
        return usage_error("zeta-star targets support --digits up to 20");
    }
    let mut outcomes: Vec<SeriesOutcome> = Vec::new();
    match args.target.as_str() {
        "all" => {
            for id in ["APERY2", "APERY3"] {
                outcomes.push(evaluate_series(id, 0, args.digits.max(30)));
            }
            for id in ["LESH-2", "LESH-3", "LESH-4", "LESH-5"] {
                for m in 0..=3 {
                    outcomes.push(evaluate_series(id, m, args.digits.min(25)));
                }
            }
            for a in 0..=3u64 {
                for b in 0..=3u64 {
                    outcomes.extend(zeta_star_check(a, b, args.digits.min(15)));
                }
            }
        }
        "APERY2" | "APERY3" => outcomes.push(evaluate_series(&args.target, 0, args.digits)),
        "LESH-2" | "LESH-3" | "LESH-4" | "LESH-5" => {
            outcomes.push(evaluate_series(&args.target, args.m, args.digits))
        }
        "ZSTAR-231" | "ZSTAR-121" | "ZSTAR-12b" | "ZAGIER-ZZZZ" => {
            let all = zeta_star_check(args.a, args.b, args.digits);
            let want: Vec<SeriesOutcome> = all
                .into_iter()
                .filter(|o| o.id.starts_with(args.target.as_str()))
                .collect();
            if want.is_empty() {
                return usage_error(&format!(
                    "target {} undefined at a={}, b={}",
                    args.target, args.a, args.b
                ));
            }
            outcomes.extend(want);
        }
        other => return usage_error(&format!("unknown series target {other}")),
    }
    let records: Vec<ReportRecord> = outcomes.iter().map(series_to_record).collect();
    if format == Format::Text {
        for o in &outcomes {
            println!(
                "{} [{}] value={} reference={} bound={} -> {}",
                o.id,
                o.params,
                o.value,
                o.reference,
                o.bound,
                if o.pass { "pass" } else { "FAIL" }
            );
        }
        if failures(&records) > 0 {
            return ExitCode::FAILURE;
        }
        return ExitCode::SUCCESS;
    }
    emit(&records, format, args.output.as_deref())
}

fn cmd_catalog(args: &CatalogArgs) -> ExitCode {
    let Some(format) = Format::parse(&args.format) else {
        return usage_error("--format must be json, csv, or text");
    };
    // aggregate the claim registry per family
    let claims = select_claims(&CongGrid::default(), "all");
    let statements = claim_statements();
    let mut rows: Vec<(String, String, String)> = Vec::new(); // (id, grid info, statement)
    for (id, stmt) in &statements {
        let instances: Vec<_> = claims.iter().filter(|c| c.id == *id).collect();
        if instances.is_empty() {
            continue;
        }
        let min_p = instances.iter().map(|c| c.min_prime).min().unwrap();
        let max_def = instances.iter().map(|c| c.default_max_prime).max().unwrap();
        let nexps: std::collections::BTreeSet<u32> =
            instances.iter().map(|c| c.nexp).collect();
        rows.push((
            id.to_string(),
            format!(
                "instances={}, admissible p >= {min_p}, default sweep <= {max_def}, mod p^{{{}}}",
                instances.len(),
                nexps.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
            ),
            stmt.to_string(),
        ));
    }
    match format {
        Format::Text => {
            println!("# Identities");
            for (id, stmt) in identity_catalog() {
                println!("{id}: {stmt}");
            }
            println!();
            println!("# Congruence claims");
            for (id, grid, stmt) in &rows {
                println!("{id} ({grid})");
                println!("    {stmt}");
            }
            println!();
            println!("# Series targets");
            for id in mhs_core::series::series_target_ids() {
                println!("{id}");
            }
        }
        Format::Json => {
            for (id, stmt) in identity_catalog() {
                println!(
                    "{}",
                    serde_json::json!({"kind": "identity", "id": id, "statement": stmt})
                );
            }
            for (id, grid, stmt) in &rows {
                println!(
                    "{}",
                    serde_json::json!({"kind": "congruence", "id": id, "grid": grid, "statement": stmt})
                );
            }
            for id in mhs_core::series::series_target_ids() {
                println!("{}", serde_json::json!({"kind": "series", "id": id}));
            }
        }
        Format::Csv => {
            println!("kind,id,info,statement");
            for (id, stmt) in identity_catalog() {
                println!("identity,{id},,\"{}\"", stmt.replace('"', "\"\""));
            }
            for (id, grid, stmt) in &rows {
                println!(
                    "congruence,{id},\"{}\",\"{}\"",
                    grid.replace('"', "\"\""),
                    stmt.replace('"', "\"\"")
                );
            }
        }
    }
    ExitCode::SUCCESS
}

fn emit(records: &[ReportRecord], format: Format, output: Option<&str>) -> ExitCode {
    let write = |w: &mut dyn Write| write_report(records, format, w);
    let result = match output {
        Some(path) => {
            let mut f = match std::fs::File::create(path) {
                Ok(f) => f,
                Err(e) => return usage_error(&format!("cannot write {path}: {e}")),
            };
            write(&mut f)
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)
        }
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if failures(records) > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
