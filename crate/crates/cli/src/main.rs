use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ferrers::anticodes::anticode_max;
use ferrers::multilevel::{
    lexicode, multilevel_bound, multilevel_build, table_formulas, DistanceStrategy, LevelSpec, PivotCode, PivotVector,
};
use ferrers::oracle::{
    search_max_dim_with, verify_anticode_with, verify_delta_space_with, RankConstraint, VerifyMode, DEFAULT_BUDGET,
    EXHAUSTIVE_CAP,
};
use ferrers::{construct_with, Error, Exec, FerrersDiagram, Field, MatrixSpace, Profile, Strategy};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ferrers",
    version,
    about = "Ferrers-diagram rank-metric codes, anticodes and multilevel subspace codes"
)]
struct Cli {
    /// Worker threads; 1 runs every check sequentially, 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Upper bound T_δ for a diagram or profile.
    Tdelta {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build a δ-space of the given shape.
    Construct {
        #[arg(long)]
        diagram: FerrersDiagram,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximal anticode (every element of rank < δ) of the given shape.
    Anticode {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the rank condition on a space read from JSON.
    Verify {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        delta: usize,
        /// Require rank <= δ instead of rank >= δ.
        #[arg(long)]
        anticode: bool,
        /// Sample this many elements instead of enumerating.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Greedy constant-weight code.
    Lexicode {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        /// First word; defaults to k ones followed by zeros.
        #[arg(long)]
        seed: Option<PivotVector>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Assemble a multilevel subspace code from pivot vectors.
    Multilevel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Newline-separated 0/1 strings; a lexicode with distance 2δ when omitted.
        #[arg(long)]
        pivots: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = DistanceArg::Structured)]
        distance: DistanceArg,
        /// Pairs for `--distance sampled`.
        #[arg(long, default_value_t = 100_000)]
        pairs: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also print the cardinality bounds.
        #[arg(long)]
        bounds: bool,
        /// Write every codeword to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Largest code `--emit` will write.
        #[arg(long, default_value_t = 1 << 16)]
        cap: u128,
    },
    /// Cardinality polynomials of the large-code table evaluated at q.
    Table {
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive search for the largest space of a shape.
    Search {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Search for rank <= δ-1 instead of rank >= δ.
        #[arg(long)]
        anticode: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ShapeArgs {
    /// Row lengths, e.g. `6,3,2,2` or `3,2@5` for 5 columns.
    #[arg(long)]
    diagram: Option<FerrersDiagram>,
    /// Profile JSON file.
    #[arg(long)]
    profile: Option<PathBuf>,
}

enum ShapeInput {
    Diagram(FerrersDiagram),
    Profile(Profile),
}

impl ShapeArgs {
    fn load(&self) -> anyhow::Result<ShapeInput> {
        match (&self.diagram, &self.profile) {
            (Some(d), _) => Ok(ShapeInput::Diagram(d.clone())),
            (None, Some(p)) => Ok(ShapeInput::Profile(read_json(p)?)),
            (None, None) => bail!("one of --diagram or --profile is required"),
        }
    }
}

impl ShapeInput {
    fn profile(&self) -> Profile {
        match self {
            ShapeInput::Diagram(d) => d.to_profile(),
            ShapeInput::Profile(p) => p.clone(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Mrd,
    Intersect,
    Diagonal,
    Square,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistanceArg {
    Structured,
    Exact,
    Sampled,
}

/// Command outcome: verification failures exit with status 1.
enum Outcome {
    Ok,
    Violation,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{text}")?;
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn field(q: u64) -> anyhow::Result<Field> {
    Ok(Field::from_order(q)?)
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn run(cli: Cli, exec: Exec) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Tdelta { shape, delta, json } => match shape.load()? {
            ShapeInput::Diagram(d) => {
                let t = d.tdelta(delta)?;
                let text = if json {
                    to_json(&t)?
                } else {
                    format!("{} (i={})", t.value, t.argmin)
                };
                emit(None, &text)?;
            }
            ShapeInput::Profile(p) => {
                let t = p.tdelta(delta)?;
                let text = if json {
                    to_json(&t)?
                } else {
                    format!(
                        "{} (I={:?}, J={:?})",
                        t.value,
                        one_based(&t.lines.rows),
                        one_based(&t.lines.cols)
                    )
                };
                emit(None, &text)?;
            }
        },
        Command::Construct {
            diagram,
            delta,
            q,
            method,
            out,
        } => {
            let strategy = match method {
                MethodArg::Auto => Strategy::Auto,
                MethodArg::Mrd => Strategy::Mrd,
                MethodArg::Intersect => Strategy::Intersect,
                MethodArg::Diagonal => Strategy::Diagonal,
                MethodArg::Square => Strategy::Square,
            };
            let result = construct_with(&diagram, delta, &field(q)?, strategy)?;
            emit(out.as_deref(), &to_json(&result)?)?;
        }
        Command::Anticode { shape, delta, q, out } => {
            let profile = shape.load()?.profile();
            let (space, lines) = anticode_max(&profile, delta, &field(q)?)?;
            let cells = profile.cell_set().len();
            let payload = serde_json::json!({
                "delta": delta,
                "dimension": space.dim(),
                "tdelta": cells - space.dim(),
                "lines": lines,
                "space": space,
            });
            emit(out.as_deref(), &to_json(&payload)?)?;
        }
        Command::Verify {
            space,
            delta,
            anticode,
            samples,
            seed,
        } => {
            let space: MatrixSpace = read_json(&space)?;
            let mode = match samples {
                Some(count) => VerifyMode::Sample { count, seed },
                None => VerifyMode::auto(&space, EXHAUSTIVE_CAP, 100_000, seed),
            };
            let report = if anticode {
                verify_anticode_with(&space, delta, mode, exec)?
            } else {
                verify_delta_space_with(&space, delta, mode, exec)?
            };
            let payload = serde_json::json!({
                "ok": report.ok,
                "exhaustive": matches!(mode, VerifyMode::Exhaustive),
                "checked": report.checked,
                "witness_rank": report.witness.as_ref().map(|w| w.rank()),
                "witness": report.witness,
            });
            emit(None, &to_json(&payload)?)?;
            if !report.ok {
                return Ok(Outcome::Violation);
            }
        }
        Command::Lexicode { n, k, d, seed, out } => {
            let seed = match seed {
                Some(s) => s,
                None => PivotVector::from_positions(n, &(1..=k).collect::<Vec<_>>())?,
            };
            let code = lexicode(n, k, d, seed)?;
            let text: Vec<String> = code.vectors().iter().map(|v| v.to_string()).collect();
            emit(out.as_deref(), &text.join("\n"))?;
        }
        Command::Multilevel {
            n,
            k,
            delta,
            q,
            pivots,
            distance,
            pairs,
            seed,
            bounds,
            emit: emit_path,
            cap,
        } => {
            let code = match pivots {
                Some(path) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    PivotCode::parse(&text)?
                }
                None => lexicode(
                    n,
                    k,
                    2 * delta,
                    PivotVector::from_positions(n, &(1..=k).collect::<Vec<_>>())?,
                )?,
            };
            if (code.n(), code.k()) != (n, k) {
                bail!(Error::InvalidPivot(format!(
                    "pivot vectors have length {} and weight {}, expected {n} and {k}",
                    code.n(),
                    code.k()
                )));
            }
            let fld = field(q)?;
            let built = multilevel_build(&code, delta, &fld, &vec![LevelSpec::Auto; code.len()])?;
            let strategy = match distance {
                DistanceArg::Structured => DistanceStrategy::Structured,
                DistanceArg::Exact => DistanceStrategy::Exact,
                DistanceArg::Sampled => DistanceStrategy::Sampled {
                    pairs,
                    seed,
                    cross_level: false,
                },
            };
            let report = built.min_distance_with(strategy, exec)?;
            let certificate = if report.certified { report.value } else { None };
            let mut payload = serde_json::to_value(built.summary(certificate))?;
            if !report.certified {
                payload["sampled_min_distance"] = serde_json::json!(report.value);
            }
            if bounds {
                let b = multilevel_bound(&code, delta, q)?;
                payload["bounds"] = serde_json::json!({
                    "d_prime": b.d_prime,
                    "d_second": b.d_second,
                    "lower": b.lower.to_string(),
                    "upper": b.upper.to_string(),
                });
            }
            if let Some(path) = emit_path {
                let words = built.materialize(cap)?;
                let rows: Vec<_> = words.iter().map(|w| w.to_rows()).collect();
                let file = serde_json::json!({ "field": fld.spec(), "n": n, "k": k, "codewords": rows });
                fs::write(&path, serde_json::to_string(&file)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            emit(None, &to_json(&payload)?)?;
        }
        Command::Table { q, json } => {
            #[derive(Serialize)]
            struct Row {
                n: usize,
                k: usize,
                delta: usize,
                formula: String,
                value: String,
            }
            let rows: Vec<Row> = table_formulas(q)
                .into_iter()
                .map(|(r, v)| Row {
                    n: r.n,
                    k: r.k,
                    delta: r.delta,
                    formula: r.formula(),
                    value: v.to_string(),
                })
                .collect();
            let text = if json {
                to_json(&rows)?
            } else {
                rows.iter()
                    .map(|r| format!("({},{},{})  {}  = {}", r.n, r.k, r.delta, r.formula, r.value))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            emit(None, &text)?;
        }
        Command::Search {
            shape,
            delta,
            q,
            anticode,
            budget,
        } => {
            let constraint = if anticode {
                RankConstraint::AtMost(delta.saturating_sub(1))
            } else {
                RankConstraint::AtLeast(delta)
            };
            let fld = field(q)?;
            let result = match shape.load()? {
                ShapeInput::Diagram(d) => search_max_dim_with(&d, constraint, &fld, budget, exec)?,
                ShapeInput::Profile(p) => search_max_dim_with(&p, constraint, &fld, budget, exec)?,
            };
            emit(None, &to_json(&result)?)?;
        }
    }
    Ok(Outcome::Ok)
}

fn configure(jobs: usize) -> anyhow::Result<Exec> {
    #[cfg(feature = "parallel")]
    {
        if jobs > 0 {
            rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
        }
        if jobs != 1 {
            return Ok(Exec::Parallel);
        }
    }
    let _ = jobs;
    Ok(Exec::Sequential)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. }) => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure(cli.jobs).and_then(|exec| run(cli, exec));
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(EXIT_VERIFY),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
