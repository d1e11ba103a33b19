use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use salza::corpus::{read_inputs, read_nonempty};
use salza::error::{Error, Result};
use salza::func::parse_weighting;
use salza::matrix::{directed_matrix, nsd_matrix};
use salza::spec::{dag_specs, markov_specs};
use salza::{dot, newick, tsv};
use salza_core::directed::DEFAULT_THRESHOLD;
use salza_core::lz::ConditioningMode;
use salza_core::synth::{gen_dag_processes, gen_markov, simulate_length_profile, LengthSimSpec};
use salza_core::{extract_dag, factorize, neighbor_joining, to_newick, upgma, Context, DirectedKind, DistanceMatrix, StringSet};

/// Lempel-Ziv complexity estimates, semi-distance clustering and
/// directed information graphs for arbitrary byte strings.
#[derive(Parser)]
#[command(name = "salza", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for matrix cells; defaults to available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output file (directory for `gen`); standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FuncArgs {
    /// `sigmoid`, `threshold` or `table:<path>`.
    #[arg(long, default_value = "sigmoid")]
    func: String,
    /// Cutoff of the function, or `auto` for the reference region's own.
    #[arg(long, default_value = "auto")]
    l0: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Nj,
    Upgma,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Causal,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Pairwise semi-distance matrix of files or directory contents, as TSV.
    Nsd {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        func: FuncArgs,
    },
    /// Tree from a TSV distance matrix, as Newick.
    Cluster {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "nj")]
        method: Method,
        /// Print an indented drawing instead of Newick on standard output.
        #[arg(long)]
        ascii: bool,
    },
    /// Directed information graph, as DOT; the full matrix goes to --matrix.
    Causality {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "causal")]
        mode: Kind,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: f64,
        /// Where to write the TSV matrix.
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[command(flatten)]
        func: FuncArgs,
    },
    /// Synthetic strings from a spec file, one file per label in --out.
    #[command(subcommand)]
    Gen(Gen),
    /// Symbol dump of a target factorized against sources, as TSV.
    Factorize {
        target: PathBuf,
        sources: Vec<PathBuf>,
        /// past-of-x, all-of-x, past-of-both or past-of-y-all-of-x; defaults
        /// to all-of-x with sources and to the target's own past without.
        #[arg(long)]
        mode: Option<String>,
    },
    /// Estimate terms for Poisson symbol lengths, as TSV.
    Simulate {
        /// Mean symbol lengths, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<f64>,
        #[arg(long)]
        l0: f64,
        /// Target lengths, comma separated.
        #[arg(long = "length", value_delimiter = ',', default_value = "16384")]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Gen {
    Markov {
        spec: PathBuf,
        /// Replaces the seed of every spec in the file.
        #[arg(long)]
        seed: Option<u64>,
    },
    Dag {
        spec: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| Error::io(Path::new("<stdout>"), e))
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    String::from_utf8(fs::read(path).map_err(|e| Error::io(path, e))?)
        .map_err(|_| Error::Usage(format!("{}: not UTF-8 text", path.display())))
}

fn write_strings(dir: &Path, items: impl IntoIterator<Item = (String, Vec<u8>)>) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    for (label, bytes) in items {
        let p = dir.join(label);
        fs::write(&p, bytes).map_err(|e| Error::io(&p, e))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Nsd { inputs, func } => {
            let w = parse_weighting(&func.func, &func.l0)?;
            let items = read_inputs(&inputs)?;
            if items.len() < 2 {
                return Err(Error::Usage(format!("need at least 2 input files, got {}", items.len())));
            }
            let m = nsd_matrix(&items, &w)?;
            emit(out, &tsv::write_matrix(m.labels(), m.values()))
        }
        Command::Cluster { matrix, method, ascii } => {
            let (labels, values) = tsv::parse_matrix(&read_text(&matrix)?, &matrix.display().to_string())?;
            let d = DistanceMatrix::new(labels, values)?;
            let tree = match method {
                Method::Nj => neighbor_joining(&d),
                Method::Upgma => upgma(&d),
            };
            let nwk = to_newick(&tree) + "\n";
            if ascii {
                if let Some(p) = out {
                    fs::write(p, &nwk).map_err(|e| Error::io(p, e))?;
                }
                emit(None, &newick::render_ascii(&tree))
            } else {
                emit(out, &nwk)
            }
        }
        Command::Causality { inputs, mode, threshold, matrix, func } => {
            let w = parse_weighting(&func.func, &func.l0)?;
            let set = StringSet::new(read_inputs(&inputs)?)?;
            let kind = match mode {
                Kind::Causal => DirectedKind::Causal,
                Kind::Full => DirectedKind::Full,
            };
            let mut m = directed_matrix(&set, kind, &w)?;
            m.threshold = threshold;
            let graph = extract_dag(&m, threshold);
            if let Some(p) = matrix.as_deref() {
                emit(Some(p), &tsv::write_matrix(&m.labels, &m.values))?;
            }
            emit(out, &dot::to_dot(&graph))
        }
        Command::Gen(Gen::Markov { spec, seed }) => {
            let specs = markov_specs(&read_text(&spec)?, &spec.display().to_string(), seed)?;
            let dir = out.unwrap_or(Path::new("."));
            let items = specs.iter().map(|(l, s)| Ok((l.clone(), gen_markov(s)?))).collect::<Result<Vec<_>>>()?;
            write_strings(dir, items)
        }
        Command::Gen(Gen::Dag { spec, seed }) => {
            let specs = dag_specs(&read_text(&spec)?, &spec.display().to_string(), seed)?;
            let dir = out.unwrap_or(Path::new("."));
            let mut items = Vec::new();
            for (name, s) in &specs {
                let set = gen_dag_processes(s)?;
                for (label, bytes) in set.iter() {
                    let label = match name {
                        Some(n) => format!("{n}-{label}"),
                        None => label.to_string(),
                    };
                    items.push((label, bytes.to_vec()));
                }
            }
            write_strings(dir, items)
        }
        Command::Factorize { target, sources, mode } => {
            let mode = match mode {
                Some(m) => m.parse::<ConditioningMode>()?,
                None if sources.is_empty() => ConditioningMode::PastOfBoth,
                None => ConditioningMode::AllOfX,
            };
            let x = read_nonempty(&target)?;
            let srcs = sources.iter().map(|p| read_nonempty(p)).collect::<Result<Vec<_>>>()?;
            let ctx = Context::new(mode, srcs.iter().map(Vec::as_slice).collect())?;
            emit(out, &tsv::write_symbols(&factorize(&x, &ctx)?))
        }
        Command::Simulate { mu, l0, lengths, trials, seed } => {
            let mut profiles = Vec::new();
            for &target_length in &lengths {
                for &m in &mu {
                    profiles.push(simulate_length_profile(&LengthSimSpec { mu: m, l0, target_length, trials, seed })?);
                }
            }
            emit(out, &tsv::write_profiles(&profiles))
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build();
    let result = match pool {
        Ok(pool) => pool.install(|| run(cli)),
        Err(e) => Err(Error::Usage(format!("cannot start thread pool: {e}"))),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("salza: {}", e.to_string().replace('\n', " "));
            ExitCode::FAILURE
        }
    }
}
