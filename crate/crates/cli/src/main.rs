//! `pfaffkit`: generators, codimensions and Betti tables of the ideals built
//! from the Pfaffians of a generic alternating matrix `X` and the entries of
//! `tX`, plus the verification suites.

mod cas;
mod config;
mod error;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pfaffkit::constructions::{build_complex, build_ideal, map_matrix, ComplexName, IdealKind, MapName};
use pfaffkit::groebner::dimension_codim;
use pfaffkit::homology::{cyclic_presentation, default_max_len, free_resolution};
use pfaffkit::matrix::GradedMatrix;
use pfaffkit::ring::{
    is_prime, parse_polynomial, render_polynomial, Field, MonomialOrder, PolyRing, Polynomial, PrimeField, Rationals,
};
use pfaffkit::verify::{export_report, run_suite, Grid, ReportFormat, RunOptions, Suite};

use config::Config;
use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "pfaffkit", version, about = "Pfaffian ideals, their resolutions and verification suites")]
struct Cli {
    /// `key = value` configuration file (keys: f, char, seed, budget_seconds, output_dir, format).
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the generators of an ideal, one per line.
    Gen(GenArgs),
    /// Dimension, codimension and Hilbert numerator of an ideal, as JSON.
    Codim(CodimArgs),
    /// Minimal free resolution and Betti table of a module.
    Resolve(ResolveArgs),
    /// Run a verification suite; exit code 0 pass, 1 fail, 2 incomplete.
    #[command(after_help = suites_help())]
    Verify(VerifyArgs),
    /// Print the matrices of a named map or complex.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IdealArg {
    #[value(name = "I")]
    I,
    #[value(name = "K")]
    K,
    #[value(name = "J")]
    J,
    #[value(name = "Ilambda")]
    Ilambda,
    #[value(name = "Iprime")]
    Iprime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModuleArg {
    #[value(name = "A")]
    A,
    #[value(name = "N")]
    N,
    #[value(name = "RJ")]
    Rj,
    #[value(name = "Ilambda")]
    Ilambda,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Text,
    Cas,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct RingArgs {
    /// Size of the alternating matrix.
    #[arg(long, value_parser = parse_f)]
    f: usize,
    /// Characteristic: 0 for the rationals or a prime.
    #[arg(long = "char", default_value = "0", value_parser = parse_char)]
    characteristic: u64,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    ideal: IdealArg,
    #[command(flatten)]
    ring: RingArgs,
    /// λ for `Ilambda` (1 <= λ < f).
    #[arg(long)]
    lambda: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: GenFormat,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["ideal", "from"]))]
struct CodimArgs {
    #[arg(long, value_enum)]
    ideal: Option<IdealArg>,
    /// Read the ideal from a generator file (as written by `gen --format cas`).
    #[arg(long, value_name = "FILE", conflicts_with_all = ["f", "characteristic", "lambda"])]
    from: Option<PathBuf>,
    #[arg(long, value_parser = parse_f)]
    f: Option<usize>,
    #[arg(long = "char", value_parser = parse_char)]
    characteristic: Option<u64>,
    #[arg(long)]
    lambda: Option<usize>,
}

#[derive(Args, Debug)]
struct ResolveArgs {
    #[arg(long, value_enum)]
    module: ModuleArg,
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    lambda: Option<usize>,
    /// Keep the (x-degree, t-degree) bigrading.
    #[arg(long)]
    bigraded: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    /// Matrix sizes, comma separated (default 4,5).
    #[arg(long, value_delimiter = ',', value_parser = parse_f)]
    f: Option<Vec<usize>>,
    /// Characteristics, comma separated (default 0,32003).
    #[arg(long = "char", value_delimiter = ',', value_parser = parse_char)]
    characteristics: Option<Vec<u64>>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Wall-clock budget; checks still running when it expires are skipped.
    #[arg(long)]
    budget_seconds: Option<u64>,
    /// Directory for the report file (overrides PFAFFKIT_OUTPUT_DIR and the config).
    #[arg(long, value_name = "DIR")]
    output_dir: Option<PathBuf>,
    /// Include per-check timings in the report.
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("object").required(true).args(["map", "complex"]))]
struct ExportArgs {
    /// One of d0, d1, delta1, rho, d0prime, tau_row, tXi_row, D1, D2.
    #[arg(long, value_parser = parse_map)]
    map: Option<MapName>,
    /// One of precplx, seq32, seq43, relcplx.
    #[arg(long, value_parser = parse_complex)]
    complex: Option<ComplexName>,
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn suites_help() -> String {
    let mut s = String::from("Suites:\n");
    for suite in Suite::ALL {
        let _ = writeln!(s, "  {:<20} {}", suite.as_str(), suite.summary());
    }
    s
}

fn parse_f(s: &str) -> Result<usize, String> {
    let f: usize = s.parse().map_err(|_| format!("`{s}` is not a matrix size"))?;
    if !(2..=6).contains(&f) {
        return Err(format!("matrix size must lie in 2..=6, got {f}"));
    }
    Ok(f)
}

fn parse_char(s: &str) -> Result<u64, String> {
    let c: u64 = s.parse().map_err(|_| format!("`{s}` is not a characteristic"))?;
    if c != 0 && (!is_prime(c) || c >= 1 << 31) {
        return Err(format!("characteristic must be 0 or a prime below 2^31, got {c}"));
    }
    Ok(c)
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| format!("unknown suite `{s}`"))
}

fn parse_map(s: &str) -> Result<MapName, String> {
    s.parse().map_err(|_| format!("unknown map `{s}`"))
}

fn parse_complex(s: &str) -> Result<ComplexName, String> {
    s.parse().map_err(|_| format!("unknown complex `{s}`"))
}

/// Runs `$body` with `$ring` bound to the ring of size `$f` over characteristic `$c`.
macro_rules! with_ring {
    ($c:expr, $f:expr, |$ring:ident| $body:expr) => {
        match $c {
            0 => {
                let $ring = PolyRing::new(Rationals, $f)?;
                $body
            }
            p => {
                let $ring = PolyRing::new(PrimeField::new(p as u32)?, $f)?;
                $body
            }
        }
    };
}

fn ideal_kind(ideal: IdealArg, f: usize, lambda: Option<usize>) -> Result<IdealKind, CliError> {
    Ok(match ideal {
        IdealArg::I => IdealKind::I,
        IdealArg::K => IdealKind::K,
        IdealArg::J => IdealKind::J,
        IdealArg::Iprime => IdealKind::IPrime,
        IdealArg::Ilambda => IdealKind::Lambda(check_lambda(f, lambda)?),
    })
}

fn check_lambda(f: usize, lambda: Option<usize>) -> Result<usize, CliError> {
    match lambda {
        Some(l) if (1..f).contains(&l) => Ok(l),
        Some(l) => Err(CliError::Usage(format!("--lambda must lie in 1..{f}, got {l}"))),
        None => Err(CliError::Usage("Ilambda needs --lambda".into())),
    }
}

/// Monic generators sorted by decreasing lexicographic leading term.
fn normalized<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let lex = ring.with_order(MonomialOrder::Lex);
    let mut out: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| lex.monic(&lex.import(g))).collect();
    out.sort_by(|a, b| {
        let (ma, mb) = (a.lead_monomial().expect("nonzero"), b.lead_monomial().expect("nonzero"));
        MonomialOrder::Lex.cmp(mb, ma)
    });
    out.dedup();
    out.into_iter().map(|g| ring.import(&g)).collect()
}

fn gen<F: Field>(ring: &PolyRing<F>, args: &GenArgs) -> Result<String, CliError> {
    let kind = ideal_kind(args.ideal, ring.f(), args.lambda)?;
    let gens = normalized(ring, &build_ideal(ring, kind)?.gens);
    Ok(match args.format {
        GenFormat::Text => gens.iter().map(|g| render_polynomial(ring, g) + "\n").collect(),
        GenFormat::Cas => cas::write(ring, &gens),
        GenFormat::Json => {
            let lines: Vec<String> = gens.iter().map(|g| render_polynomial(ring, g)).collect();
            pretty(&json!({ "ring": cas::header(ring), "ideal": kind.to_string(), "generators": lines }))
        }
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn codim_of<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Result<String, CliError> {
    let data = dimension_codim(ring, gens)?;
    Ok(pretty(&serde_json::to_value(data).expect("hilbert data serializes")))
}

fn codim(args: &CodimArgs, cfg: &Config) -> Result<String, CliError> {
    if let Some(path) = &args.from {
        let text = std::fs::read_to_string(path)?;
        let file = cas::read(&text)?;
        if !(2..=6).contains(&file.f) {
            return Err(CliError::Usage(format!("generator file: matrix size {} out of range 2..=6", file.f)));
        }
        return with_ring!(file.field.characteristic(), file.f, |ring| {
            let gens = file
                .lines
                .iter()
                .map(|l| parse_polynomial(&ring, l))
                .collect::<pfaffkit::Result<Vec<_>>>()
                .map_err(|e| CliError::Usage(format!("generator file: {e}")))?;
            codim_of(&ring, &gens)
        });
    }
    let ideal = args.ideal.expect("clap enforces one source");
    let f = args
        .f
        .or_else(|| cfg.f.as_ref().and_then(|v| v.first().copied()))
        .ok_or_else(|| CliError::Usage("codim needs --f".into()))?;
    let c = args.characteristic.or_else(|| cfg.characteristics.as_ref().and_then(|v| v.first().copied())).unwrap_or(0);
    let kind = ideal_kind(ideal, f, args.lambda)?;
    with_ring!(c, f, |ring| codim_of(&ring, &build_ideal(&ring, kind)?.gens))
}

fn resolve<F: Field>(ring: &PolyRing<F>, args: &ResolveArgs, format: Format) -> Result<String, CliError> {
    let f = ring.f();
    let (presentation, max_len) = match args.module {
        ModuleArg::A => (cyclic_presentation(ring, &build_ideal(ring, IdealKind::I)?.gens)?, default_max_len(f)),
        ModuleArg::N => (pfaffkit::homology::n_presentation(ring)?, default_max_len(f)),
        ModuleArg::Rj => (cyclic_presentation(ring, &build_ideal(ring, IdealKind::J)?.gens)?, default_max_len(f)),
        ModuleArg::Ilambda => {
            let l = check_lambda(f, args.lambda)?;
            (cyclic_presentation(ring, &build_ideal(ring, IdealKind::Lambda(l))?.gens)?, ring.nvars() + 1)
        }
    };
    let table = free_resolution(ring, &presentation, max_len)?.betti();
    Ok(match format {
        Format::Json => {
            let entries: Vec<Value> = if args.bigraded {
                table.entries().iter().map(|e| json!({ "i": e.i, "j": e.j, "jx": e.jx, "jt": e.jt, "count": e.count })).collect()
            } else {
                table.total_degree_entries().iter().map(|((i, j), c)| json!({ "i": i, "j": j, "count": c })).collect()
            };
            pretty(&json!({ "betti": entries }))
        }
        Format::Text => {
            let mut out = table.render();
            if args.bigraded {
                out.push_str("\n  i  jx  jt  count\n");
                for e in table.entries() {
                    let _ = writeln!(out, "{:>3} {:>3} {:>3} {:>6}", e.i, e.jx, e.jt, e.count);
                }
            }
            out
        }
    })
}

fn matrix_json<F: Field>(ring: &PolyRing<F>, name: &str, m: &GradedMatrix<F>) -> Value {
    let entries: Vec<Vec<String>> =
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| render_polynomial(ring, m.entry(i, j))).collect()).collect();
    json!({
        "name": name,
        "rows": m.rows(),
        "cols": m.cols(),
        "target": m.target(),
        "source": m.source(),
        "row_labels": m.row_labels(),
        "col_labels": m.col_labels(),
        "entries": entries,
    })
}

fn matrix_text<F: Field>(ring: &PolyRing<F>, name: &str, m: &GradedMatrix<F>) -> String {
    let mut out = format!("matrix {name} {}x{}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| render_polynomial(ring, m.entry(i, j))).collect();
        let _ = writeln!(out, "{}", row.join(", "));
    }
    out
}

fn export<F: Field>(ring: &PolyRing<F>, args: &ExportArgs) -> Result<String, CliError> {
    let named: Vec<(String, GradedMatrix<F>)> = match (args.map, args.complex) {
        (Some(m), _) => vec![(m.as_str().to_string(), map_matrix(ring, m)?)],
        (None, Some(c)) => {
            let cx = build_complex(ring, c)?;
            cx.maps
                .into_iter()
                .enumerate()
                .map(|(k, m)| (format!("{}.{}->{}", c.as_str(), cx.modules[k].label, cx.modules[k + 1].label), m))
                .collect()
        }
        (None, None) => unreachable!("clap enforces one object"),
    };
    Ok(match args.format {
        Format::Json => {
            let mats: Vec<Value> = named.iter().map(|(n, m)| matrix_json(ring, n, m)).collect();
            pretty(&json!({ "ring": cas::header(ring), "matrices": mats }))
        }
        Format::Text => {
            let mut out = cas::header(ring) + "\n";
            for (n, m) in &named {
                out.push_str(&matrix_text(ring, n, m));
            }
            out
        }
    })
}

fn format_from(flag: Option<Format>, cfg: &Config) -> Result<Format, CliError> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match cfg.format.as_deref() {
        None | Some("text") => Ok(Format::Text),
        Some("json") => Ok(Format::Json),
        Some(other) => Err(CliError::Usage(format!("config: unknown format `{other}`"))),
    }
}

fn verify(args: &VerifyArgs, cfg: &Config) -> Result<(String, i32), CliError> {
    let f = args.f.clone().or_else(|| cfg.f.clone()).unwrap_or_else(|| vec![4, 5]);
    if let Some(bad) = f.iter().find(|f| !(2..=6).contains(*f)) {
        return Err(CliError::Usage(format!("matrix size must lie in 2..=6, got {bad}")));
    }
    let characteristics = args.characteristics.clone().or_else(|| cfg.characteristics.clone()).unwrap_or_else(|| vec![0, 32003]);
    if let Some(bad) = characteristics.iter().find(|c| parse_char(&c.to_string()).is_err()) {
        return Err(CliError::Usage(format!("characteristic must be 0 or a prime, got {bad}")));
    }
    let grid = Grid::new(f, characteristics, args.seed.or(cfg.seed).unwrap_or(0));
    let format = format_from(args.format, cfg)?;
    let mut options = RunOptions {
        budget: Some(Duration::from_secs(args.budget_seconds.or(cfg.budget_seconds).unwrap_or(900))),
        timings: args.timings,
        ..RunOptions::default()
    };
    if let Some(t) = args.threads {
        options.threads = t.max(1);
    }
    let report = run_suite(args.suite, &grid, &options);
    let (fmt, ext) = match format {
        Format::Text => (ReportFormat::Text, "txt"),
        Format::Json => (ReportFormat::Json, "json"),
    };
    let text = export_report(&report, fmt);
    if let Some(dir) = cfg.output_dir(args.output_dir.as_deref()) {
        write_report(&dir, &format!("verify-{}.{ext}", args.suite), &text)?;
    }
    Ok((text, report.exit_code()))
}

fn write_report(dir: &Path, name: &str, text: &str) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join(name), text)?;
    Ok(())
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let ok = |s: String| (s, 0);
    match &cli.command {
        Command::Gen(a) => with_ring!(a.ring.characteristic, a.ring.f, |ring| gen(&ring, a).map(ok)),
        Command::Codim(a) => codim(a, &cfg).map(ok),
        Command::Resolve(a) => {
            let format = format_from(a.format, &cfg)?;
            with_ring!(a.ring.characteristic, a.ring.f, |ring| resolve(&ring, a, format).map(ok))
        }
        Command::Verify(a) => verify(a, &cfg),
        Command::Export(a) => with_ring!(a.ring.characteristic, a.ring.f, |ring| export(&ring, a).map(ok)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("pfaffkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
