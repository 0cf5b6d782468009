//! `cerf`: point evaluation of the complex error functions plus the table,
//! error-map and benchmark drivers of `cerf_core::analysis`.
//!
//! Exit status: 0 on success, 1 when output cannot be written, 2 for
//! argument errors, 3 for numeric errors (domain, overflow, oracle
//! non-convergence).

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use cerf_core::analysis::{
    benchmark, error_map, format_complex, format_sci, reproduce_table, ErrorMap, Function, Grid,
    MethodPair, Spacing, TableRow, BENCH_SEED, CSV_HEADER, TABLE_CSV_HEADER,
};
use cerf_core::oracle::{erf_oracle, erfc_oracle, w_oracle, w_oracle_full, QuadratureSpec};
use cerf_core::{
    erf_full_plane, erf_rational, erf_reference, erfc_full_plane, erfc_rational, erfc_reference,
    w_full_plane, w_rational, w_reference, ApproximationParams, CoefficientTable, Error, Method,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cerf",
    version,
    about = "Complex error function by shifted Fourier rational approximation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Reproduce a comparison table (1: real parts, 2: imaginary parts of erf).
    Table(TableArgs),
    /// Relative errors of the rational form over a grid.
    Errmap(ErrmapArgs),
    /// Median timings of the rational and reference forms of w.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Func {
    W,
    Erf,
    Erfc,
    Voigt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Rational,
    Reference,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Tty,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MapFunc {
    W,
    Erf,
    Erfc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SpacingArg {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PairArg {
    #[value(alias = "rational_vs_reference")]
    RationalVsReference,
    #[value(alias = "rational_vs_oracle")]
    RationalVsOracle,
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// Number of Fourier terms N.
    #[arg(long = "n", default_value_t = 23)]
    terms: usize,
    /// Half-period margin τm.
    #[arg(long, default_value_t = 12.0, allow_negative_numbers = true)]
    tau_m: f64,
    /// Shift constant σ.
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    sigma: f64,
}

impl ParamArgs {
    fn resolve(&self) -> Result<ApproximationParams, Failure> {
        ApproximationParams::new(self.terms, self.tau_m, self.sigma)
            .map_err(|e| Failure::Usage(e.to_string()))
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write to this file (atomically) instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Tty)]
    format: Format,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, value_enum)]
    func: Func,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, allow_negative_numbers = true)]
    y: f64,
    #[arg(long, value_enum, default_value_t = MethodArg::Rational)]
    method: MethodArg,
    /// Reject points outside the half-plane where each form is derived
    /// instead of reflecting them.
    #[arg(long)]
    strict_domain: bool,
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    id: u8,
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ErrmapArgs {
    #[arg(long, value_enum, default_value_t = MapFunc::Erf)]
    func: MapFunc,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1e-3)]
    x_min: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 10.0)]
    x_max: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1e-3)]
    y_min: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 10.0)]
    y_max: f64,
    #[arg(long, default_value_t = 50)]
    nx: usize,
    #[arg(long, default_value_t = 50)]
    ny: usize,
    #[arg(long, value_enum, default_value_t = SpacingArg::Log)]
    spacing: SpacingArg,
    #[arg(long, value_enum, default_value_t = PairArg::RationalVsReference)]
    pair: PairArg,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 1_000_000)]
    points: usize,
    #[arg(long, default_value_t = 11)]
    repeats: usize,
    #[arg(long, default_value_t = BENCH_SEED)]
    seed: u64,
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Numeric(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_numeric() {
            Failure::Numeric(e)
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit status. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(args) => eval(&args, out),
        Command::Table(args) => table(&args, out),
        Command::Errmap(args) => errmap(&args, out),
        Command::Bench(args) => bench(&args, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "cerf: error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Numeric(e)) => {
            let _ = writeln!(err, "cerf: numeric error: {e}");
            EXIT_NUMERIC
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "cerf: {msg}");
            EXIT_IO
        }
    }
}

/// Sends `text` to `path` through a temporary file in the same directory
/// renamed into place, or to `out` when no path is given.
fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    let Some(path) = path else {
        return out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}")));
    };
    let io = |e: io::Error| Failure::Io(format!("{}: {e}", path.display()));
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(text.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn strict_violation(func: Func, z: Complex64) -> Option<&'static str> {
    match func {
        Func::W | Func::Voigt if z.im < 0.0 => Some("Im z >= 0"),
        Func::Erf | Func::Erfc if z.re < 0.0 => Some("Re z >= 0"),
        _ => None,
    }
}

fn evaluate(args: &EvalArgs, z: Complex64, table: &CoefficientTable) -> Result<Complex64, Error> {
    let spec = QuadratureSpec::default();
    let method = match args.method {
        MethodArg::Rational => Method::Rational,
        MethodArg::Reference => Method::Reference,
        MethodArg::Oracle => {
            return match args.func {
                Func::W | Func::Voigt if args.strict_domain => w_oracle(z, &spec),
                Func::W | Func::Voigt => w_oracle_full(z, &spec).map(|v| v.value),
                Func::Erf => erf_oracle(z, &spec).map(|v| v.value),
                Func::Erfc => erfc_oracle(z, &spec).map(|v| v.value),
            }
        }
    };
    if args.strict_domain {
        return match (args.func, method) {
            (Func::W | Func::Voigt, Method::Rational) => w_rational(z, table),
            (Func::W | Func::Voigt, Method::Reference) => w_reference(z, table),
            (Func::Erf, Method::Rational) => erf_rational(z, table),
            (Func::Erf, Method::Reference) => erf_reference(z, table),
            (Func::Erfc, Method::Rational) => erfc_rational(z, table),
            (Func::Erfc, Method::Reference) => erfc_reference(z, table),
        };
    }
    match args.func {
        Func::W | Func::Voigt => w_full_plane(z, table, method),
        Func::Erf => erf_full_plane(z, table, method),
        Func::Erfc => erfc_full_plane(z, table, method),
    }
}

fn eval(args: &EvalArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if !args.x.is_finite() || !args.y.is_finite() {
        return Err(Failure::Usage(format!(
            "--x and --y must be finite, got {} and {}",
            args.x, args.y
        )));
    }
    let table = CoefficientTable::new(args.params.resolve()?);
    let z = Complex64::new(args.x, args.y);
    if matches!(args.func, Func::Voigt) && z.im < 0.0 {
        return Err(Failure::Numeric(Error::Domain {
            func: "voigt",
            re: z.re,
            im: z.im,
            required: "y >= 0",
        }));
    }
    if args.strict_domain {
        if let Some(required) = strict_violation(args.func, z) {
            return Err(Failure::Numeric(Error::Domain {
                func: "eval",
                re: z.re,
                im: z.im,
                required,
            }));
        }
    }
    let v = evaluate(args, z, &table)?;
    let text = match (args.func, args.output.format) {
        (Func::Voigt, Format::Tty) => {
            format!("K = {}\nL = {}\n", format_sci(v.re), format_sci(v.im))
        }
        (Func::Voigt, Format::Csv) => format!(
            "x,y,K,L\n{},{},{},{}\n",
            format_sci(z.re),
            format_sci(z.im),
            format_sci(v.re),
            format_sci(v.im)
        ),
        (_, Format::Tty) => format!("{}\n", format_complex(v)),
        (_, Format::Csv) => format!(
            "x,y,re,im\n{},{},{},{}\n",
            format_sci(z.re),
            format_sci(z.im),
            format_sci(v.re),
            format_sci(v.im)
        ),
    };
    emit(&text, args.output.output.as_deref(), out)
}

fn table_tty(rows: &[TableRow], id: u8) -> String {
    let part = if id == 1 { "Re" } else { "Im" };
    let mut s = format!(
        "{:>8} {:>8}  {:>24}  {:>24}  {:>12}\n",
        "x",
        "y",
        format!("{part} erf (rational)"),
        format!("{part} erf (reference)"),
        format!("Δ_{part}")
    );
    for r in rows {
        s.push_str(&format!(
            "{:>8} {:>8}  {:>24}  {:>24}  {:>12}\n",
            r.x,
            r.y,
            format_sci(r.rational),
            format_sci(r.reference),
            format!("{:.4E}", r.delta)
        ));
    }
    s
}

fn table(args: &TableArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let rows = reproduce_table(args.id, &args.params.resolve()?)?;
    let text = match args.output.format {
        Format::Csv => {
            let mut s = format!("{TABLE_CSV_HEADER}\n");
            for r in &rows {
                s.push_str(&r.to_csv());
                s.push('\n');
            }
            s
        }
        Format::Tty => table_tty(&rows, args.id),
    };
    emit(&text, args.output.output.as_deref(), out)
}

fn errmap_tty(map: &ErrorMap) -> String {
    let mut s = format!(
        "{:>22} {:>22} {:>22} {:>22} {:>10} {:>10}\n",
        "x", "y", "re", "im", "Δ_Re", "Δ_Im"
    );
    for r in &map.rows {
        s.push_str(&format!(
            "{:>22} {:>22} {:>22} {:>22} {:>10.3E} {:>10.3E}\n",
            format_sci(r.x),
            format_sci(r.y),
            format_sci(r.approx.re),
            format_sci(r.approx.im),
            r.err.delta_re,
            r.err.delta_im
        ));
    }
    s.push_str(&format!(
        "points {}  max Δ_Re {}  max Δ_Im {}\n",
        map.rows.len(),
        format_sci(map.max_delta_re),
        format_sci(map.max_delta_im)
    ));
    s
}

fn errmap(args: &ErrmapArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let bounds = [args.x_min, args.x_max, args.y_min, args.y_max];
    if bounds.iter().any(|b| !b.is_finite()) {
        return Err(Failure::Usage("grid bounds must be finite".into()));
    }
    let grid = Grid {
        x_min: args.x_min,
        x_max: args.x_max,
        y_min: args.y_min,
        y_max: args.y_max,
        nx: args.nx,
        ny: args.ny,
        spacing: match args.spacing {
            SpacingArg::Linear => Spacing::Linear,
            SpacingArg::Log => Spacing::Log,
        },
    };
    let func = match args.func {
        MapFunc::W => Function::W,
        MapFunc::Erf => Function::Erf,
        MapFunc::Erfc => Function::Erfc,
    };
    let pair = match args.pair {
        PairArg::RationalVsReference => MethodPair::RationalVsReference,
        PairArg::RationalVsOracle => MethodPair::RationalVsOracle,
    };
    let map = error_map(func, &grid, &args.params.resolve()?, pair)?;
    let text = match args.format {
        Format::Csv => {
            let mut s = format!("{CSV_HEADER}\n");
            for r in &map.rows {
                s.push_str(&r.to_csv());
                s.push('\n');
            }
            s
        }
        Format::Tty => errmap_tty(&map),
    };
    emit(&text, args.output.as_deref(), out)
}

fn bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let report = benchmark(
        args.points,
        args.repeats,
        &args.params.resolve()?,
        args.seed,
    )?;
    let text = match args.output.format {
        Format::Tty => format!("{report}\n"),
        Format::Csv => format!(
            "points,repeats,seed,median_ns_rational,median_ns_reference,speedup,checksum_rational,checksum_reference\n\
             {},{},{},{},{},{},{},{}\n",
            report.points,
            report.repeats,
            report.seed,
            format_sci(report.median_ns_rational),
            format_sci(report.median_ns_reference),
            format_sci(report.speedup),
            format_sci(report.checksum_rational),
            format_sci(report.checksum_reference)
        ),
    };
    emit(&text, args.output.output.as_deref(), out)
}
