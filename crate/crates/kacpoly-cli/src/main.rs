//! Command-line front end for the kacpoly library.
//!
//! Subcommands compute Kac polynomials of quivers (`kac`), connected graph
//! counts by edge-class profile (`graphs`), leading coefficients of the
//! derivative values at q = 1 (`leading`), the expansion of a multiplicity
//! family of Kac polynomials in the q-binomial basis (`mahler`), and run
//! the built-in verification suites (`verify`).
//!
//! Exit codes: 0 success, 1 a reported verification failed, 2 bad input,
//! 3 a broken internal invariant.

mod quiverspec;
mod report;

use std::collections::BTreeSet;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kacpoly::graphs::{connected_counts, connected_counts_bruteforce, GraphCountTable};
use kacpoly::leading::{fit_polynomial_in_g, leading_component};
use kacpoly::mahler::{check_coefficient_derivative, mahler_table_auto};
use kacpoly::multi::{box_points, weight};
use kacpoly::quiver::pairs;
use kacpoly::{kac_polynomial, run_suite, DimVector, QPoly, Size, Suite};

use quiverspec::QuiverSpec;
use report::{Format, Report, Section};

#[derive(Parser)]
#[command(
    name = "kacpoly",
    version,
    about = "Kac polynomials of quivers and the structure of their q = 1 derivatives"
)]
struct Cli {
    /// Output format: aligned table, one JSON record per line, or CSV
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    /// Worker threads for independent evaluations; 1 means sequential.
    /// Output is identical for any thread count.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kac polynomial of a quiver at a dimension vector
    Kac(KacArgs),
    /// Connected graph counts on split vertex classes, by edge profile
    Graphs(GraphsArgs),
    /// Leading component of the derivative values at q = 1
    Leading(LeadingArgs),
    /// q-binomial expansion of the Kac polynomials over edge multiplicities
    Mahler(MahlerArgs),
    /// Built-in verification suites
    Verify(VerifyArgs),
}

#[derive(Args)]
struct KacArgs {
    /// Path to a quiver file, or an inline description like "n=1; 1-1:3"
    #[arg(long)]
    quiver: String,
    /// Dimension vector, comma-separated, one entry per vertex
    #[arg(long)]
    alpha: String,
    /// Also list the derivative values at q = 1 for orders 0..S
    #[arg(long, default_value_t = 0)]
    s: u64,
}

#[derive(Args)]
struct GraphsArgs {
    /// Vertex class sizes, comma-separated: "4" or "2,1"
    #[arg(long)]
    classes: String,
    /// Largest edge-profile weight to compute
    #[arg(long)]
    budget: u32,
    /// Cross-check the series route against subset enumeration
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct LeadingArgs {
    /// Dimension vector, comma-separated
    #[arg(long)]
    alpha: String,
    /// Derivative order
    #[arg(long, default_value_t = 0)]
    s: u32,
    /// Cross-check the component against the top part of a difference fit
    #[arg(long)]
    fit: bool,
}

#[derive(Args)]
struct MahlerArgs {
    /// Dimension vector, comma-separated
    #[arg(long)]
    alpha: String,
    /// Initial uniform cap on the expansion box; grows automatically until
    /// the expansion reconstructs the family (default |alpha|, plus 2 when
    /// divisibility checks are requested)
    #[arg(long = "box")]
    box_cap: Option<u32>,
    /// Check q-difference divisibility of each coefficient with weight in
    /// [|alpha|, |alpha| + 2]; the boundary weight |alpha| is reported but
    /// not asserted
    #[arg(long)]
    derivative_checks: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    #[arg(long, value_enum, default_value_t = SizeArg::Quick)]
    size: SizeArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tables,
    Graphs,
    Qbinom,
    Mahler,
    Theorems,
    All,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::Tables => "tables",
            SuiteArg::Graphs => "graphs",
            SuiteArg::Qbinom => "qbinom",
            SuiteArg::Mahler => "mahler",
            SuiteArg::Theorems => "theorems",
            SuiteArg::All => "all",
        }
    }
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Graphs => Suite::Graphs,
            SuiteArg::Qbinom => Suite::Qbinom,
            SuiteArg::Mahler => Suite::Mahler,
            SuiteArg::Theorems => Suite::Theorems,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SizeArg {
    Quick,
    Full,
}

impl From<SizeArg> for Size {
    fn from(s: SizeArg) -> Size {
        match s {
            SizeArg::Quick => Size::Quick,
            SizeArg::Full => Size::Full,
        }
    }
}

enum CliError {
    Input(String),
    Lib(kacpoly::Error),
}

impl From<kacpoly::Error> for CliError {
    fn from(e: kacpoly::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn message(&self) -> String {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Lib(e) => e.to_string(),
        }
    }

    /// 2 for anything the caller can fix, 3 for broken internal invariants.
    fn exit_code(&self) -> i32 {
        use kacpoly::Error;
        match self {
            CliError::Input(_) => 2,
            CliError::Lib(e) => match e {
                Error::InvalidInput(_)
                | Error::BruteForceTooLarge { .. }
                | Error::GroundSetTooLarge { .. }
                | Error::DegreeCapTooSmall { .. }
                | Error::NotInRelaxationSet { .. } => 2,
                _ => 3,
            },
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if cli.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        std::process::exit(2);
    }
    // Fix the pool size up front; results are ordered after collection, so
    // the report bytes do not depend on this number.
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .ok();

    let start = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(&cli)));
    let code = match outcome {
        Ok(Ok(rep)) => {
            let format = Format::from(cli.format);
            let wall = (format == Format::Table).then(|| start.elapsed());
            print!("{}", rep.render(format, wall));
            i32::from(!rep.all_checks_pass())
        }
        Ok(Err(err)) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
        Err(_) => {
            eprintln!("error: internal assertion failed");
            3
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Kac(a) => cmd_kac(a),
        Command::Graphs(a) => cmd_graphs(a),
        Command::Leading(a) => cmd_leading(a),
        Command::Mahler(a) => cmd_mahler(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn cmd_kac(a: &KacArgs) -> Result<Report, CliError> {
    let spec = QuiverSpec::from_arg(&a.quiver).map_err(CliError::Input)?;
    let quiver = spec.to_quiver().map_err(CliError::Input)?;
    let alpha = parse_dims(&a.alpha, "--alpha")?;
    if alpha.len() != quiver.n() {
        return Err(CliError::Input(format!(
            "--alpha has {} entries but the quiver has {} vertices",
            alpha.len(),
            quiver.n()
        )));
    }
    let poly = kac_polynomial(&quiver, &alpha)?;

    let mut r = Report::new("kac");
    r.field("quiver", spec.describe());
    r.field("alpha", dims_string(&alpha));
    r.field(
        "degree",
        poly.degree().map_or_else(|| "-".to_string(), |d| d.to_string()),
    );
    r.field("polynomial", poly.render("q"));
    r.section(polynomial_section("terms", &poly));
    if a.s > 0 {
        let rows = (0..a.s)
            .map(|t| vec![t.to_string(), poly.taylor_at_one(t).to_string()])
            .collect();
        r.section(Section {
            title: "derivatives at q = 1".into(),
            columns: vec!["order".into(), "value".into()],
            rows,
        });
    }
    Ok(r)
}

fn cmd_graphs(a: &GraphsArgs) -> Result<Report, CliError> {
    let ell = parse_dims(&a.classes, "--classes")?;
    let table = connected_counts(&ell, a.budget);

    let mut r = Report::new("graphs");
    r.field("classes", dims_string(&ell));
    r.field("budget", a.budget.to_string());
    r.field("profiles", table.entries().len().to_string());
    let mut columns = profile_names("k", ell.len());
    columns.push("count".into());
    let rows = table
        .entries()
        .iter()
        .map(|(k, c)| {
            let mut row: Vec<String> = k.iter().map(ToString::to_string).collect();
            row.push(c.to_string());
            row
        })
        .collect();
    r.section(Section {
        title: "connected counts".into(),
        columns,
        rows,
    });
    if a.oracle {
        let brute = connected_counts_bruteforce(&ell, a.budget)?;
        let agree = brute == table;
        let detail = if agree {
            format!("{} profiles", table.entries().len())
        } else {
            first_count_difference(&table, &brute)
        };
        r.check("subset enumeration agreement", agree, detail);
    }
    Ok(r)
}

fn first_count_difference(series: &GraphCountTable, brute: &GraphCountTable) -> String {
    let keys: BTreeSet<_> = series
        .entries()
        .keys()
        .chain(brute.entries().keys())
        .collect();
    for k in keys {
        let (a, b) = (series.count(k), brute.count(k));
        if a != b {
            return format!("profile {k:?}: series {a}, enumeration {b}");
        }
    }
    "tables agree".to_string()
}

fn cmd_leading(a: &LeadingArgs) -> Result<Report, CliError> {
    let alpha = parse_dims(&a.alpha, "--alpha")?;
    let lc = leading_component(&alpha, a.s);
    let names = profile_names("g", alpha.len());
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();

    let mut r = Report::new("leading");
    r.field("alpha", dims_string(&alpha));
    r.field("s", a.s.to_string());
    r.field("degree", lc.degree().to_string());
    r.field("component", lc.to_mpoly().render(&name_refs));
    let mut columns = names.clone();
    columns.push("coefficient".into());
    let rows = lc
        .terms()
        .iter()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| {
            let mut row: Vec<String> = k.iter().map(ToString::to_string).collect();
            row.push(c.to_string());
            row
        })
        .collect();
    r.section(Section {
        title: "terms".into(),
        columns,
        rows,
    });
    if a.fit {
        let fit = fit_polynomial_in_g(&alpha, a.s, lc.degree())?;
        let top = fit.homogeneous_part(lc.degree());
        let component = lc.to_mpoly();
        let agree = top == component;
        let detail = if agree {
            format!("fit through total degree {}", lc.degree())
        } else {
            format!(
                "component {}, fit top part {}",
                component.render(&name_refs),
                top.render(&name_refs)
            )
        };
        r.check("difference-fit agreement", agree, detail);
    }
    Ok(r)
}

fn cmd_mahler(a: &MahlerArgs) -> Result<Report, CliError> {
    let alpha = parse_dims(&a.alpha, "--alpha")?;
    let w = alpha.weight();
    let initial = a
        .box_cap
        .unwrap_or(w + if a.derivative_checks { 2 } else { 0 });
    let table = mahler_table_auto(&alpha, initial)?;

    let mut r = Report::new("mahler");
    r.field("alpha", dims_string(&alpha));
    r.field("initial cap", initial.to_string());
    r.field("box", join_u32(table.box_caps()));
    r.field("coefficients", table.entries().len().to_string());
    let mut columns = profile_names("k", alpha.len());
    columns.push("a_k(q)".into());
    columns.push("a_k(1)".into());
    let rows = table
        .entries()
        .iter()
        .map(|(k, p)| {
            let mut row: Vec<String> = k.iter().map(ToString::to_string).collect();
            row.push(p.render("q"));
            row.push(p.eval_at_one().to_string());
            row
        })
        .collect();
    r.section(Section {
        title: "coefficients".into(),
        columns,
        rows,
    });
    r.check(
        "reconstruction on the box and at spot checks beyond it",
        true,
        "validated while building the table".to_string(),
    );
    let nonintegral: Vec<String> = table
        .entries()
        .iter()
        .filter(|(_, p)| !p.is_integral())
        .map(|(k, p)| format!("{k:?}: {}", p.render("q")))
        .collect();
    r.check(
        "integer coefficients",
        nonintegral.is_empty(),
        nonintegral.join("; "),
    );

    if a.derivative_checks {
        let mut rows = Vec::new();
        let mut above_boundary_ok = true;
        for k in box_points(table.box_caps()) {
            let wk = weight(&k);
            if wk < w || wk > w + 2 {
                continue;
            }
            let divisible = check_coefficient_derivative(&alpha, &k)?;
            let boundary = wk == w;
            if !boundary && !divisible {
                above_boundary_ok = false;
            }
            rows.push(vec![
                format!("{k:?}"),
                wk.to_string(),
                divisible.to_string(),
                if boundary { "boundary, reported only".into() } else { String::new() },
            ]);
        }
        r.section(Section {
            title: "difference divisibility".into(),
            columns: vec!["k".into(), "weight".into(), "divisible".into(), "note".into()],
            rows,
        });
        r.check(
            "difference divisibility above the boundary",
            above_boundary_ok,
            String::new(),
        );
    }
    Ok(r)
}

fn cmd_verify(a: &VerifyArgs) -> Result<Report, CliError> {
    let results = run_suite(a.suite.into(), a.size.into());
    let mut r = Report::new("verify");
    r.field("suite", a.suite.name());
    r.field(
        "size",
        match a.size {
            SizeArg::Quick => "quick",
            SizeArg::Full => "full",
        },
    );
    let mut mismatch_rows = Vec::new();
    for res in &results {
        let detail = if res.passed() {
            format!("{} comparisons", res.items)
        } else {
            format!("{} comparisons, {} mismatches", res.items, res.mismatches.len())
        };
        r.check(res.id, res.passed(), detail);
        for m in &res.mismatches {
            mismatch_rows.push(vec![
                res.id.to_string(),
                m.label.clone(),
                m.expected.clone(),
                m.actual.clone(),
            ]);
        }
    }
    if !mismatch_rows.is_empty() {
        r.section(Section {
            title: "mismatches".into(),
            columns: vec!["check".into(), "item".into(), "expected".into(), "actual".into()],
            rows: mismatch_rows,
        });
    }
    Ok(r)
}

fn parse_dims(arg: &str, flag: &str) -> Result<DimVector, CliError> {
    let entries: Result<Vec<u32>, _> = arg.split(',').map(|p| p.trim().parse()).collect();
    let entries = entries.map_err(|_| {
        CliError::Input(format!(
            "{flag} must be comma-separated nonnegative integers, got {arg:?}"
        ))
    })?;
    DimVector::new(entries).map_err(|e| CliError::Input(format!("{flag}: {e}")))
}

fn dims_string(v: &DimVector) -> String {
    join_u32(v.as_slice())
}

fn join_u32(v: &[u32]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// One column name per vertex pair: `g` for a single vertex, otherwise
/// `g11, g12, ...` (1-based, matching the library's variable order).
fn profile_names(prefix: &str, n: usize) -> Vec<String> {
    if n == 1 {
        return vec![prefix.to_string()];
    }
    pairs(n)
        .into_iter()
        .map(|(i, j)| format!("{prefix}{}{}", i + 1, j + 1))
        .collect()
}

/// Terms in descending exponent order, matching the rendered string.
fn polynomial_section(title: &str, p: &QPoly) -> Section {
    let rows = p
        .to_pairs()
        .into_iter()
        .rev()
        .map(|(e, c)| vec![e.to_string(), c.to_string()])
        .collect();
    Section {
        title: title.into(),
        columns: vec!["exponent".into(), "coefficient".into()],
        rows,
    }
}
