use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use leonard_lab::leonard::{
    scan_grid, theorem_conditions, verify_leonard_pair_square, LambdaMode, LeonardPairReport,
    SValues, SearchGrid, TheoremConditions,
};
use leonard_lab::params::check_closed_forms;
use leonard_lab::racah::{
    build_racah_params, check_barred_recurrence, check_barred_representations, check_index_mapping,
    check_orthogonality_reindexing, check_racah_orthogonality, check_starred_products,
    check_table_permutation, check_unbarred_identities, eval_table_4f3, eval_table_varphi_sum,
    RacahParams,
};
use leonard_lab::repr::{eval_table_hypergeometric, eval_table_recurrence, ValueTable};
use leonard_lab::sl2mod::{
    build_even_module, catalog_entry_matches_dual_hahn, example_pair, terwilliger_catalog,
    verify_example_match, CatalogEntry, EvenModule, ModuleKind,
};
use leonard_lab::{build_params, Error, Rational, RationalMatrix};

const THREADS_VAR: &str = "LEONARD_LAB_THREADS";
const DEFAULT_GRID: &str = "-3/4,-1/2,-1/4,1/4,1/2,3/4,1,2";

#[derive(Parser, Debug)]
#[command(
    name = "leonard-lab",
    version,
    about = "Exact checks of dual Hahn and Racah Leonard-pair identities"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct DualHahnArgs {
    /// Diameter.
    #[arg(long)]
    d: usize,
    /// Parameter r as "p/q".
    #[arg(long, allow_hyphen_values = true)]
    r: Rational,
    /// Parameter s as "p/q".
    #[arg(long, allow_hyphen_values = true)]
    s: Rational,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableMethod {
    Hypergeometric,
    Recurrence,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum LambdaModeArg {
    Canonical,
    List,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump the parameter arrays and check them against their closed forms.
    Params(DualHahnArgs),
    /// Value table u_i(theta_j).
    Table {
        #[command(flatten)]
        params: DualHahnArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
        #[arg(long, value_enum, default_value = "hypergeometric")]
        method: TableMethod,
    },
    /// Decide whether L and (L* + lambda)^2 form a Leonard pair.
    VerifyLp {
        #[command(flatten)]
        params: DualHahnArgs,
        /// Shift lambda; defaults to (r - d)/2.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<Rational>,
        /// Also scan every basis permutation.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check the Racah reparametrization at s = -r.
    VerifyRacah {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        r: Rational,
    },
    /// Check an even sl2 module and its example Leonard pair.
    VerifySl2 {
        #[arg(long)]
        kind: u8,
        #[arg(long)]
        n: usize,
    },
    /// Scan a parameter grid, one JSON line per point.
    Search {
        #[arg(long, default_value_t = 1)]
        d_min: usize,
        #[arg(long)]
        d_max: usize,
        /// Comma-separated r values.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = DEFAULT_GRID)]
        r: Vec<Rational>,
        /// Comma-separated s values.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = DEFAULT_GRID)]
        s: Vec<Rational>,
        /// Use s = -r at every point instead of the s list.
        #[arg(long)]
        s_negate_r: bool,
        #[arg(long, value_enum, default_value = "canonical")]
        lambda_mode: LambdaModeArg,
        /// Comma-separated lambda values for --lambda-mode list.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<Rational>,
        #[arg(long)]
        exhaustive: bool,
        /// Only emit points where the verdict is true.
        #[arg(long)]
        hits_only: bool,
    },
    /// Irreducible Terwilliger modules of the halved D-cube.
    Catalog {
        /// The cube dimension D.
        #[arg(long = "cube-dim")]
        cube_dim: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Domain(_) => 2,
            Failure::Usage(_) => 64,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            Error::ParameterDomain(_)
            | Error::InvalidArgument(_)
            | Error::DivisionByZero { .. } => Failure::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(format!("output error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(format!("serialization error: {e}"))
    }
}

type Outcome = Result<bool, Failure>;

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ParamsOutput {
    #[serde(flatten)]
    params: leonard_lab::DualHahnParams,
    closed_forms_hold: bool,
    invariant_violations: Vec<String>,
}

fn cmd_params(args: DualHahnArgs, out: &mut dyn Write) -> Outcome {
    let p = build_params(args.d, args.r, args.s)?;
    let closed_forms_hold = check_closed_forms(&p);
    let invariant_violations = p.invariant_violations();
    let ok = closed_forms_hold && invariant_violations.is_empty();
    emit_json(
        out,
        &ParamsOutput {
            params: p,
            closed_forms_hold,
            invariant_violations,
        },
    )?;
    Ok(ok)
}

#[derive(Serialize)]
struct TableOutput<'a> {
    d: usize,
    r: &'a Rational,
    s: &'a Rational,
    theta: &'a [Rational],
    u: &'a ValueTable,
}

fn cmd_table(
    args: DualHahnArgs,
    format: TableFormat,
    method: TableMethod,
    out: &mut dyn Write,
) -> Outcome {
    let p = build_params(args.d, args.r, args.s)?;
    let table = match method {
        TableMethod::Hypergeometric => eval_table_hypergeometric(&p)?,
        TableMethod::Recurrence => eval_table_recurrence(&p)?,
    };
    match format {
        TableFormat::Csv => out.write_all(table.to_csv().as_bytes())?,
        TableFormat::Json => emit_json(
            out,
            &TableOutput {
                d: p.d,
                r: &p.r,
                s: &p.s,
                theta: &p.theta,
                u: &table,
            },
        )?,
    }
    Ok(true)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct LeonardPairOutput {
    d: usize,
    r: Rational,
    s: Rational,
    #[serde(flatten)]
    report: LeonardPairReport,
    theorem_conditions: TheoremConditions,
}

fn cmd_verify_lp(
    args: DualHahnArgs,
    lambda: Option<Rational>,
    exhaustive: bool,
    out: &mut dyn Write,
) -> Outcome {
    let p = build_params(args.d, args.r, args.s)?;
    let lambda = lambda.unwrap_or_else(|| p.canonical_lambda());
    let report = verify_leonard_pair_square(&p, &lambda, exhaustive);
    let ok = !report.is_inconsistent();
    let output = LeonardPairOutput {
        d: p.d,
        theorem_conditions: theorem_conditions(&p, &lambda),
        r: p.r,
        s: p.s,
        report,
    };
    emit_json(out, &output)?;
    Ok(ok)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RacahChecks {
    index_mapping: bool,
    unbarred_identities: bool,
    starred_products: bool,
    table_permutation: bool,
    varphi_sum_table: bool,
    barred_orthogonality: bool,
    orthogonality_reindexing: bool,
    barred_recurrence: bool,
    barred_representations: bool,
}

impl RacahChecks {
    fn all(&self) -> bool {
        self.index_mapping
            && self.unbarred_identities
            && self.starred_products
            && self.table_permutation
            && self.varphi_sum_table
            && self.barred_orthogonality
            && self.orthogonality_reindexing
            && self.barred_recurrence
            && self.barred_representations
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RacahOutput {
    params: RacahParams,
    checks: RacahChecks,
    all_hold: bool,
}

fn cmd_verify_racah(d: usize, r: Rational, out: &mut dyn Write) -> Outcome {
    let q = build_racah_params(d, r.clone())?;
    let p = build_params(d, r.clone(), -&r)?;
    let u = eval_table_hypergeometric(&p)?;
    let v = eval_table_4f3(&q)?;
    let checks = RacahChecks {
        index_mapping: check_index_mapping(&p, &q)?,
        unbarred_identities: check_unbarred_identities(&p, &q)?,
        starred_products: check_starred_products(&p, &q)?,
        table_permutation: check_table_permutation(&u, &v),
        varphi_sum_table: eval_table_varphi_sum(&q)? == v,
        barred_orthogonality: check_racah_orthogonality(&q, &v),
        orthogonality_reindexing: check_orthogonality_reindexing(&p, &q, &u, &v)?,
        barred_recurrence: check_barred_recurrence(&q, &v),
        barred_representations: check_barred_representations(&p, &q)?,
    };
    let all_hold = checks.all();
    emit_json(
        out,
        &RacahOutput {
            params: q,
            checks,
            all_hold,
        },
    )?;
    Ok(all_hold)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ExamplePair {
    tridiagonal: RationalMatrix,
    diagonal: RationalMatrix,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Sl2Output {
    module: EvenModule,
    weight_relations: bool,
    casimir: bool,
    shape: bool,
    example_pair: Option<ExamplePair>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

fn cmd_verify_sl2(kind: u8, n: usize, out: &mut dyn Write) -> Outcome {
    let kind = ModuleKind::from_index(kind)?;
    let module = build_even_module(kind, n)?;
    let (pair, matches) = if n % 2 == 1 {
        let (tridiagonal, diagonal) = example_pair(kind, n)?;
        (
            Some(ExamplePair {
                tridiagonal,
                diagonal,
            }),
            Some(verify_example_match(kind, n)?),
        )
    } else {
        (None, None)
    };
    let output = Sl2Output {
        weight_relations: module.check_weight_relations(),
        casimir: module.check_casimir(),
        shape: module.check_shape(),
        module,
        example_pair: pair,
        matches,
    };
    let ok =
        output.weight_relations && output.casimir && output.shape && output.matches != Some(false);
    emit_json(out, &output)?;
    Ok(ok)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CatalogOutputEntry {
    #[serde(flatten)]
    entry: CatalogEntry,
    /// Present for odd `D` only.
    dual_hahn_match: Option<bool>,
}

fn cmd_catalog(cube_dim: usize, out: &mut dyn Write) -> Outcome {
    let entries = terwilliger_catalog(cube_dim)?;
    let mut ok = true;
    let mut rows = Vec::with_capacity(entries.len());
    for entry in entries {
        let dual_hahn_match = if cube_dim % 2 == 1 {
            let m = catalog_entry_matches_dual_hahn(&entry, cube_dim)?;
            ok &= m;
            Some(m)
        } else {
            None
        };
        rows.push(CatalogOutputEntry {
            entry,
            dual_hahn_match,
        });
    }
    emit_json(out, &rows)?;
    Ok(ok)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    d_min: usize,
    d_max: usize,
    rs: Vec<Rational>,
    ss: Vec<Rational>,
    s_negate_r: bool,
    lambda_mode: LambdaModeArg,
    lambdas: Vec<Rational>,
    exhaustive: bool,
    hits_only: bool,
    out: &mut dyn Write,
) -> Outcome {
    if d_min > d_max {
        return Err(Failure::Usage(format!(
            "--d-min {d_min} exceeds --d-max {d_max}"
        )));
    }
    let lambdas = match lambda_mode {
        LambdaModeArg::Canonical if !lambdas.is_empty() => {
            return Err(Failure::Usage("--lambda needs --lambda-mode list".into()));
        }
        LambdaModeArg::Canonical => LambdaMode::Canonical,
        LambdaModeArg::List if lambdas.is_empty() => {
            return Err(Failure::Usage("--lambda-mode list needs --lambda".into()));
        }
        LambdaModeArg::List => LambdaMode::List(lambdas),
    };
    let grid = SearchGrid {
        ds: (d_min..=d_max).collect(),
        rs,
        ss: if s_negate_r {
            SValues::NegateR
        } else {
            SValues::List(ss)
        },
        lambdas,
        exhaustive,
    };
    let records = scan_grid(&grid)?;
    let mut ok = true;
    for record in records.iter().filter(|rec| !hits_only || rec.verdict) {
        ok &= !record.report.is_inconsistent();
        serde_json::to_writer(&mut *out, record)?;
        writeln!(out)?;
    }
    Ok(ok && records.iter().all(|rec| !rec.report.is_inconsistent()))
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        Failure::Usage(format!(
            "{THREADS_VAR} must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Internal(format!("thread pool: {e}")))
}

fn run(cli: Cli) -> Outcome {
    configure_threads()?;
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            Failure::Usage(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let out = out.as_mut();
    let ok = match cli.command {
        Command::Params(args) => cmd_params(args, out)?,
        Command::Table {
            params,
            format,
            method,
        } => cmd_table(params, format, method, out)?,
        Command::VerifyLp {
            params,
            lambda,
            exhaustive,
        } => cmd_verify_lp(params, lambda, exhaustive, out)?,
        Command::VerifyRacah { d, r } => cmd_verify_racah(d, r, out)?,
        Command::VerifySl2 { kind, n } => cmd_verify_sl2(kind, n, out)?,
        Command::Search {
            d_min,
            d_max,
            r,
            s,
            s_negate_r,
            lambda_mode,
            lambda,
            exhaustive,
            hits_only,
        } => cmd_search(
            d_min,
            d_max,
            r,
            s,
            s_negate_r,
            lambda_mode,
            lambda,
            exhaustive,
            hits_only,
            out,
        )?,
        Command::Catalog { cube_dim } => cmd_catalog(cube_dim, out)?,
    };
    out.flush()?;
    Ok(ok)
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
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: internal inconsistency, a checked identity failed");
            ExitCode::from(1)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
