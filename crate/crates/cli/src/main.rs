//! `jack`: build, render, evaluate and pair Jack polynomials, and run the
//! exact verification suites.
//!
//! Exit codes: 0 success, 1 a verified identity failed, 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use jack_core::field::parse_rational;
use jack_core::jack::{monomial_symmetric, JackFamily};
use jack_core::pairing::{g_basis, q_basis};
use jack_core::{AlphaFrac, Composition, Parallelism, Partition, SparsePoly, Suite};

#[derive(Parser, Debug)]
#[command(name = "jack", version, about = "Exact Jack polynomials over Q(α)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a polynomial of one of the families.
    Build {
        kind: Kind,
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Substitute a rational value for α, e.g. `--alpha 1/2`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Print the diagram constants of a composition.
    Constants {
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Evaluate a polynomial at a point (default: all ones).
    Eval {
        kind: Kind,
        #[command(flatten)]
        index: IndexArgs,
        /// Comma-separated coordinates, each an element of Q(α).
        #[arg(long)]
        at: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Pair two polynomials, each given as KIND:INDEX or @file.json.
    Pair {
        #[arg(long)]
        n: usize,
        left: String,
        right: String,
        /// Use the symmetric product instead of the nonsymmetric one.
        #[arg(long)]
        symmetric: bool,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Run a verification suite and emit a JSON report.
    Verify {
        suite: SuiteArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: u32,
        /// Exponent for the `las` suite (element of Q(α)); defaults to 1.
        #[arg(long)]
        r: Option<String>,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        threads: Option<usize>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
struct IndexArgs {
    /// Number of variables; defaults to the index length.
    #[arg(long)]
    n: Option<usize>,
    /// Composition such as `1,0,2`.
    #[arg(long, conflicts_with = "partition")]
    comp: Option<String>,
    /// Partition such as `2,1`; padded with zeros to n.
    #[arg(long)]
    partition: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "E")]
    E,
    #[value(name = "F")]
    F,
    #[value(name = "J")]
    J,
    #[value(name = "P")]
    P,
    #[value(name = "m")]
    M,
    #[value(name = "q")]
    Q,
    #[value(name = "g")]
    G,
}

impl Kind {
    fn needs_partition(self) -> bool {
        matches!(self, Kind::J | Kind::P | Kind::M | Kind::G)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Orthogonality,
    Cauchy,
    Symm,
    Spec,
    Recursions,
    Las,
    Lemma31,
    Oracle,
    Eigen,
    Structure,
    Stanley,
    Stability,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Identity(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Build {
            kind,
            index,
            format,
            alpha,
        } => {
            let poly = build(kind, &index)?;
            println!("{}", render_poly(&poly, format, alpha.as_deref())?);
            Ok(())
        }
        Command::Constants {
            index,
            format,
            alpha,
        } => constants(&index, format, alpha.as_deref()),
        Command::Eval {
            kind,
            index,
            at,
            alpha,
        } => {
            let poly = build(kind, &index)?;
            let value = match at {
                None => poly.eval_ones(),
                Some(s) => {
                    let point = s
                        .split(',')
                        .map(|t| t.trim().parse::<AlphaFrac>())
                        .collect::<Result<Vec<_>, _>>()?;
                    poly.evaluate(&point)?
                }
            };
            println!("{}", render_value(&value, alpha.as_deref())?);
            Ok(())
        }
        Command::Pair {
            n,
            left,
            right,
            symmetric,
            alpha,
        } => {
            let f = operand(&left, n)?;
            let g = operand(&right, n)?;
            let cap = f.degree().unwrap_or(0).max(g.degree().unwrap_or(0));
            let basis = if symmetric {
                g_basis(n, cap, Parallelism::Parallel)?
            } else {
                q_basis(n, cap, Parallelism::Parallel)?
            };
            println!("{}", render_value(&basis.pair(&f, &g)?, alpha.as_deref())?);
            Ok(())
        }
        Command::Verify {
            suite,
            n,
            degree,
            r,
            threads,
            output,
        } => verify(suite, n, degree, r, threads, output),
    }
}

fn parse_alpha(alpha: Option<&str>) -> Result<Option<BigRational>, Failure> {
    Ok(alpha.map(parse_rational).transpose()?)
}

fn render_value(v: &AlphaFrac, alpha: Option<&str>) -> Result<String, Failure> {
    Ok(match parse_alpha(alpha)? {
        Some(a) => v.evaluate_alpha(&a)?.to_string(),
        None => v.to_string(),
    })
}

fn render_poly(p: &SparsePoly, format: Format, alpha: Option<&str>) -> Result<String, Failure> {
    let p = match parse_alpha(alpha)? {
        Some(a) => p.specialize(&a)?,
        None => p.clone(),
    };
    Ok(match format {
        Format::Text => p.to_text(),
        Format::Json => p.to_json(),
        Format::Latex => p.to_latex(),
    })
}

/// Resolves `--comp/--partition/--n` into a composition of length `n`.
fn resolve_index(index: &IndexArgs, partition: bool) -> Result<Composition, Failure> {
    let comp = match (&index.comp, &index.partition) {
        (Some(c), None) => {
            if partition {
                return Err(Failure::Usage(
                    "this kind is indexed by a partition; use --partition".into(),
                ));
            }
            c.parse::<Composition>()?
        }
        (None, Some(p)) => {
            let lambda = p.parse::<Partition>()?;
            let n = index.n.unwrap_or(lambda.len());
            if lambda.length() > n {
                return Err(Failure::Usage(format!(
                    "partition {lambda} has more than {n} nonzero parts"
                )));
            }
            lambda.padded(n)
        }
        _ => {
            return Err(Failure::Usage(
                "give exactly one of --comp or --partition".into(),
            ))
        }
    };
    if let Some(n) = index.n {
        if comp.len() != n {
            return Err(Failure::Usage(format!(
                "composition {comp} has length {}, expected {n}",
                comp.len()
            )));
        }
    }
    if comp.is_empty() {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    Ok(comp)
}

fn build(kind: Kind, index: &IndexArgs) -> Result<SparsePoly, Failure> {
    let eta = resolve_index(index, kind.needs_partition())?;
    let n = eta.len();
    let d = eta.degree();
    let family = || JackFamily::build(n, d, Parallelism::Parallel);
    let lambda = || eta.as_partition();
    Ok(match kind {
        Kind::E => family().e(&eta)?.clone(),
        Kind::F => family().f(&eta)?,
        Kind::J => family().symmetric_j(&lambda()?)?,
        Kind::P => family().symmetric_p(&lambda()?)?,
        Kind::M => monomial_symmetric(&lambda()?),
        Kind::Q => q_basis(n, d, Parallelism::Parallel)?.element(&eta)?.clone(),
        Kind::G => g_basis(n, d, Parallelism::Parallel)?.element(&eta)?.clone(),
    })
}

/// `KIND:INDEX` (e.g. `F:1,0`) or `@path` to a JSON polynomial.
fn operand(spec: &str, n: usize) -> Result<SparsePoly, Failure> {
    if let Some(path) = spec.strip_prefix('@') {
        let p = SparsePoly::from_json(&fs::read_to_string(path)?)?;
        if p.nvars() != n {
            return Err(Failure::Usage(format!(
                "{path} has {} variables, expected {n}",
                p.nvars()
            )));
        }
        return Ok(p);
    }
    let (kind, idx) = spec
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("operand {spec:?} is not KIND:INDEX or @file")))?;
    let kind = Kind::from_str(kind, false)?;
    let args = IndexArgs {
        n: Some(n),
        comp: (!kind.needs_partition()).then(|| idx.to_string()),
        partition: kind.needs_partition().then(|| idx.to_string()),
    };
    build(kind, &args)
}

fn constants(index: &IndexArgs, format: Format, alpha: Option<&str>) -> Outcome {
    let eta = resolve_index(
        &IndexArgs {
            n: index.n,
            comp: index.comp.clone().or_else(|| index.partition.clone()),
            partition: None,
        },
        false,
    )?;
    let k = eta.constants();
    let mut rows: Vec<(&str, AlphaFrac)> =
        vec![("d", k.d), ("d'", k.d_prime), ("e", k.e), ("f", k.f)];
    if let Some(p) = k.partition {
        rows.extend([("b", p.b), ("c", p.c), ("c'", p.c_prime), ("j", p.j)]);
    }
    let alpha = parse_alpha(alpha)?;
    let show = |v: &AlphaFrac, latex: bool| -> Result<String, Failure> {
        Ok(match &alpha {
            Some(a) => v.evaluate_alpha(a)?.to_string(),
            None if latex => v.to_latex(),
            None => v.to_string(),
        })
    };
    match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("composition".into(), json!(eta.to_string()));
            for (name, v) in &rows {
                obj.insert((*name).into(), json!(show(v, false)?));
            }
            println!("{}", serde_json::to_string_pretty(&obj)?);
        }
        Format::Text | Format::Latex => {
            for (name, v) in &rows {
                println!("{name}={}", show(v, format == Format::Latex)?);
            }
        }
    }
    Ok(())
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Orthogonality => Suite::Orthogonality,
        SuiteArg::Cauchy => Suite::Cauchy,
        SuiteArg::Symm => Suite::Symm,
        SuiteArg::Spec => Suite::Spec,
        SuiteArg::Recursions => Suite::Recursions,
        SuiteArg::Las => Suite::BinomialExpansion,
        SuiteArg::Lemma31 => Suite::KernelOperator,
        SuiteArg::Oracle => Suite::Oracle,
        SuiteArg::Eigen => Suite::Eigen,
        SuiteArg::Structure => Suite::Structure,
        SuiteArg::Stanley => Suite::Stanley,
        SuiteArg::Stability => Suite::Stability,
    }
}

fn verify(
    s: SuiteArg,
    n: usize,
    degree: u32,
    r: Option<String>,
    threads: Option<usize>,
    output: Option<PathBuf>,
) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let r = r.map(|s| s.parse::<AlphaFrac>()).transpose()?;
    let mode = match threads {
        Some(0) => return Err(Failure::Usage("--threads must be at least 1".into())),
        Some(1) => Parallelism::Sequential,
        _ => Parallelism::Parallel,
    };
    let job = || suite(s).run(n, degree, r.as_ref(), mode);
    let report = with_threads(threads, job)??;
    let body = report.to_json();
    match output {
        Some(path) => fs::write(path, body + "\n")?,
        None => println!("{body}"),
    }
    let line = format!("{}: {}", suite(s), report.summary());
    if report.passed() {
        eprintln!("{line}");
        Ok(())
    } else {
        Err(Failure::Identity(line))
    }
}

#[cfg(feature = "parallel")]
fn with_threads<R: Send>(
    threads: Option<usize>,
    job: impl FnOnce() -> R + Send,
) -> Result<R, Failure> {
    match threads {
        Some(t) if t > 1 => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build()?;
            Ok(pool.install(job))
        }
        _ => Ok(job()),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<R>(_threads: Option<usize>, job: impl FnOnce() -> R) -> Result<R, Failure> {
    Ok(job())
}
