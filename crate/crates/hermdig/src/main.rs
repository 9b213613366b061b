//! `hermdig`: spectra, switchings, verification suites and censuses for
//! digraphs under the Hermitian adjacency matrix.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hermdig::codec;
use hermdig::digraph::Digraph;
use hermdig::enumerate::{self, MatrixKind};
use hermdig::family::Family;
use hermdig::hermitian;
use hermdig::switching::{self, Label, QuaternaryPartition, SwitchReport};
use hermdig::verify::{self, Suite};

#[derive(Parser)]
#[command(
    name = "hermdig",
    version,
    about = "Hermitian adjacency spectra of digraphs and mixed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum MatrixArg {
    H,
    A,
}

impl MatrixArg {
    fn kind(self) -> MatrixKind {
        match self {
            MatrixArg::H => MatrixKind::Hermitian,
            MatrixArg::A => MatrixKind::Adjacency,
        }
    }
}

#[derive(Args)]
struct CommonOpts {
    /// Eigenvalue clustering tolerance.
    #[arg(long, default_value_t = hermdig::DEFAULT_TOL)]
    tol: f64,
    /// Worker threads (falls back to HERMDIG_JOBS, then all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the primary report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum report for a digraph.
    Spectrum {
        /// hd6 string, `n=`-format text (or a file containing either), or a
        /// family spec such as `Ctilde:4`.
        input: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Exact characteristic polynomial.
    Charpoly {
        input: Option<String>,
        /// Build a named family instead of reading an encoding.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = MatrixArg::H)]
        matrix: MatrixArg,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Cross-check the basic-subgraph coefficient expansion against the
    /// matrix route.
    Sachs {
        input: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Construct a named family and print its encoding.
    Family {
        spec: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Apply a spectrum-preserving switching operation.
    Switch {
        input: String,
        #[arg(long)]
        op: String,
        /// Vertex set for local-reversal / digon-cut, e.g. `1,3,4`.
        #[arg(long)]
        set: Option<String>,
        /// Labels for four-way switching, e.g. `1,-1,i,-i`.
        #[arg(long)]
        labels: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Cartesian product of two digraphs.
    Product {
        left: String,
        right: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run a verification suite; exits 1 on any failure.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(short = 'n', long, default_value_t = 5)]
        order: usize,
        /// Unlock the order-6 census rows.
        #[arg(long)]
        large: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Isomorph-free census of all digraphs of one order.
    Enumerate {
        #[arg(short = 'n', long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = MatrixArg::H)]
        matrix: MatrixArg,
        /// Print the statistics row to stdout.
        #[arg(long)]
        stats: bool,
        /// Required for the order-6 run.
        #[arg(long)]
        large: bool,
        /// Write one `charpoly;size;members` line per class.
        #[arg(long)]
        classes_csv: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
}

/// Reproducibility header embedded in every JSON report.
#[derive(Serialize)]
struct Report<T: Serialize> {
    tool: &'static str,
    version: &'static str,
    args: Vec<String>,
    report: T,
}

impl<T: Serialize> Report<T> {
    fn wrap(report: T) -> Self {
        Report {
            tool: "hermdig",
            version: env!("CARGO_PKG_VERSION"),
            args: std::env::args().skip(1).collect(),
            report,
        }
    }
}

#[derive(Debug)]
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

/// hd6 / text / file / family-spec input resolution.
fn parse_input(s: &str) -> Result<Digraph, CliError> {
    let t = s.trim();
    if t.starts_with("n=") {
        return Ok(codec::from_text(t)?);
    }
    let path = std::path::Path::new(t);
    if path.exists() && path.is_file() {
        let content = std::fs::read_to_string(path).map_err(|e| CliError(e.to_string()))?;
        return Ok(codec::parse_any(&content)?);
    }
    if let Ok(fam) = t.parse::<Family>() {
        if let Ok(d) = fam.build() {
            return Ok(d);
        }
    }
    Ok(codec::decode(t)?)
}

fn parse_set(s: &str) -> Result<Vec<usize>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError(format!("bad vertex `{p}`")))
        })
        .collect()
}

fn emit(common: &CommonOpts, text: String) -> Result<(), CliError> {
    match &common.out {
        Some(path) => {
            let mut f = std::fs::File::create(path).map_err(|e| CliError(e.to_string()))?;
            writeln!(f, "{text}").map_err(|e| CliError(e.to_string()))?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_json<T: Serialize>(common: &CommonOpts, report: T) -> Result<(), CliError> {
    let wrapped = Report::wrap(report);
    emit(common, serde_json::to_string_pretty(&wrapped).unwrap())
}

fn install_pool(jobs: Option<usize>) -> Option<rayon::ThreadPool> {
    let jobs = jobs.or_else(|| {
        std::env::var("HERMDIG_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .ok()
}

fn run() -> Result<bool, CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Spectrum { input, common } => {
            if common.tol <= 0.0 {
                return Err(CliError("tolerance must be positive".into()));
            }
            let d = parse_input(&input)?;
            let report = hermitian::spectrum_report(&d, common.tol);
            match common.format.unwrap_or(Format::Json) {
                Format::Plain => {
                    let pairs: Vec<String> = report
                        .eigenvalues
                        .iter()
                        .zip(&report.multiplicities)
                        .map(|(v, m)| format!("{v:.8}^{m}"))
                        .collect();
                    emit(&common, pairs.join(" "))?;
                }
                _ => emit_json(&common, report)?,
            }
            Ok(true)
        }
        Command::Charpoly {
            input,
            family,
            matrix,
            common,
        } => {
            let d = match (input, family) {
                (Some(i), None) => parse_input(&i)?,
                (None, Some(f)) => f.parse::<Family>()?.build()?,
                _ => return Err(CliError("provide exactly one input source".into())),
            };
            let poly = match matrix.kind() {
                MatrixKind::Hermitian => hermitian::char_poly(&d),
                MatrixKind::Adjacency => hermitian::adjacency_char_poly(&d),
            };
            match common.format.unwrap_or(Format::Plain) {
                Format::Json => {
                    #[derive(Serialize)]
                    struct CharPolyReport {
                        n: usize,
                        matrix: String,
                        coefficients: Vec<String>,
                        plain: String,
                    }
                    emit_json(
                        &common,
                        CharPolyReport {
                            n: d.order(),
                            matrix: matrix.kind().name().into(),
                            coefficients: (0..=d.order())
                                .map(|k| poly.coeff(k).to_string())
                                .collect(),
                            plain: poly.to_string(),
                        },
                    )?;
                }
                _ => emit(&common, poly.to_string())?,
            }
            Ok(true)
        }
        Command::Sachs { input, common } => {
            let d = parse_input(&input)?;
            let matrix_route = hermitian::char_poly(&d);
            let sachs_route = hermdig::sachs::sachs_char_poly(&d);
            let census = hermdig::sachs::triangle_census(&d);
            #[derive(Serialize)]
            struct SachsReport {
                hd6: String,
                charpoly_matrix: String,
                charpoly_basic_subgraphs: String,
                coefficients_match: bool,
                triangle_census: [usize; 4],
                trace_h3: i64,
            }
            let report = SachsReport {
                hd6: codec::encode(&d).unwrap_or_default(),
                charpoly_matrix: matrix_route.to_string(),
                charpoly_basic_subgraphs: sachs_route.to_string(),
                coefficients_match: matrix_route == sachs_route,
                triangle_census: [census.x1, census.x2, census.x3, census.x4],
                trace_h3: census.trace_h3(),
            };
            let ok = report.coefficients_match;
            emit_json(&common, report)?;
            Ok(ok)
        }
        Command::Family { spec, common } => {
            let fam: Family = spec.parse()?;
            let d = fam.build()?;
            match common.format.unwrap_or(Format::Plain) {
                Format::Plain => emit(&common, codec::encode(&d)?)?,
                Format::Csv => emit(&common, codec::to_text(&d).trim_end().to_string())?,
                Format::Json => {
                    #[derive(Serialize)]
                    struct FamilyReport {
                        family: String,
                        n: usize,
                        hd6: String,
                        text: String,
                    }
                    emit_json(
                        &common,
                        FamilyReport {
                            family: fam.to_string(),
                            n: d.order(),
                            hd6: codec::encode(&d)?,
                            text: codec::to_text(&d),
                        },
                    )?;
                }
            }
            Ok(true)
        }
        Command::Switch {
            input,
            op,
            set,
            labels,
            common,
        } => {
            let d = parse_input(&input)?;
            let (out, params) = match op.as_str() {
                "converse" => (d.converse(), String::new()),
                "local-reversal" => {
                    let s = parse_set(set.as_deref().unwrap_or(""))?;
                    (
                        switching::local_reversal(&d, &s)?,
                        format!("set={}", set.unwrap_or_default()),
                    )
                }
                "digon-cut" => {
                    let s = parse_set(set.as_deref().unwrap_or(""))?;
                    (
                        switching::digon_cut_replace(&d, &s)?,
                        format!("set={}", set.unwrap_or_default()),
                    )
                }
                "four-way" => {
                    let spec = labels.ok_or(CliError("four-way needs --labels".into()))?;
                    let parsed: Option<Vec<Label>> = spec.split(',').map(Label::parse).collect();
                    let labels = parsed.ok_or(CliError(format!("bad labels `{spec}`")))?;
                    (
                        switching::four_way_switch(&d, &QuaternaryPartition::new(labels))?,
                        format!("labels={spec}"),
                    )
                }
                "cycle-normal-form" => {
                    let nf = switching::cycle_normal_form(&d)?;
                    #[derive(Serialize)]
                    struct NormalFormReport {
                        input: String,
                        tag: String,
                        steps: Vec<switching::SwitchStep>,
                        result: String,
                        charpoly: String,
                    }
                    emit_json(
                        &common,
                        NormalFormReport {
                            input: codec::encode(&d)?,
                            tag: nf.tag.name().into(),
                            steps: nf.steps.clone(),
                            result: codec::encode(&nf.result)?,
                            charpoly: hermitian::char_poly(&nf.result).to_string(),
                        },
                    )?;
                    return Ok(true);
                }
                other => return Err(CliError(format!("unknown operation `{other}`"))),
            };
            let report = SwitchReport::new(&d, &out, &op, params);
            match common.format.unwrap_or(Format::Json) {
                Format::Plain => emit(&common, report.output)?,
                _ => emit_json(&common, report)?,
            }
            Ok(true)
        }
        Command::Product {
            left,
            right,
            common,
        } => {
            let a = parse_input(&left)?;
            let b = parse_input(&right)?;
            let p = a.cartesian_product(&b);
            match common.format.unwrap_or(Format::Plain) {
                Format::Json => emit_json(&common, hermitian::spectrum_report(&p, common.tol))?,
                _ => emit(&common, codec::encode(&p)?)?,
            }
            Ok(true)
        }
        Command::Verify {
            suite,
            order,
            large,
            common,
        } => {
            let _pool = install_pool(common.jobs);
            let suites: Vec<Suite> = if suite == "all" {
                Suite::all().to_vec()
            } else {
                vec![Suite::parse(&suite).ok_or(CliError(format!("unknown suite `{suite}`")))?]
            };
            let results: Vec<verify::SuiteResult> = suites
                .into_iter()
                .map(|s| verify::run_suite(s, order, large))
                .collect();
            let all_pass = results.iter().all(|r| r.all_pass());
            match common.format.unwrap_or(Format::Plain) {
                Format::Json => emit_json(&common, &results)?,
                _ => {
                    let mut lines = vec![format!(
                        "# hermdig {} verify -- suite={suite} n={order} large={large}",
                        env!("CARGO_PKG_VERSION")
                    )];
                    for r in &results {
                        for c in &r.checks {
                            lines.push(format!(
                                "{} [{}] {} -- {}",
                                if c.pass { "PASS" } else { "FAIL" },
                                r.suite,
                                c.name,
                                c.details
                            ));
                        }
                    }
                    lines.push(
                        if all_pass { "ALL PASS" } else { "FAILURES PRESENT" }.to_string(),
                    );
                    emit(&common, lines.join("\n"))?;
                }
            }
            Ok(all_pass)
        }
        Command::Enumerate {
            order,
            matrix,
            stats,
            large,
            classes_csv,
            common,
        } => {
            if order == 6 && !large {
                return Err(CliError(
                    "the order-6 census takes a while; pass --large to confirm".into(),
                ));
            }
            let _pool = install_pool(common.jobs);
            let census = enumerate::census(order, matrix.kind())?;
            if let Some(path) = classes_csv {
                let mut f = std::fs::File::create(path).map_err(|e| CliError(e.to_string()))?;
                for class in &census.classes {
                    writeln!(
                        f,
                        "{};{};{}",
                        class.key_poly(),
                        class.size(),
                        class.members.join(",")
                    )
                    .map_err(|e| CliError(e.to_string()))?;
                }
            }
            if stats {
                println!("{}", serde_json::to_string_pretty(&census.row).unwrap());
            }
            match common.format.unwrap_or(Format::Json) {
                Format::Csv => {
                    let lines: Vec<String> = census
                        .classes
                        .iter()
                        .map(|c| format!("{};{};{}", c.key_poly(), c.size(), c.members.join(",")))
                        .collect();
                    emit(&common, lines.join("\n"))?;
                }
                _ => emit_json(&common, &census)?,
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
