//! The `groupdist` command line.
//!
//! Exit status: 0 on success, 2 for usage and parse errors, 3 for failed
//! structural validation (group axioms, generating sets, embeddings) and 4
//! for runtime failures. Failures print a single `error[Kind]: message` line
//! to standard error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::embed::{embed, Variant};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ordinal::{ordinal_encode, pattern_histogram, RealSeries, TiePolicy};
use crate::perm::{AdjacencyGraph, Metric, Permutation};
use crate::seriesmetrics::{
    histogram, windowed_distances, Binning, DistanceProvider, Domain, EmbeddedMetric, Exponent, GroupSeries,
    PermutationMetric, WordMetric,
};
use crate::simulate::{henon_coupled, ExperimentConfig, ExperimentMetric, HenonConfig};
use crate::wordmetric::GeneratingSet;

fn parse_with<T: FromStr<Err = Error>>(s: &str) -> std::result::Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_pair(s: &str) -> std::result::Result<[f64; 2], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok([
            a.parse().map_err(|_| format!("`{a}` is not a number"))?,
            b.parse().map_err(|_| format!("`{b}` is not a number"))?,
        ]),
        _ => Err(format!("expected two comma-separated numbers, got `{s}`")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "groupdist", version, about = "Permutation and group metrics for symbolic time series")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance between two permutations given in one-line form.
    PermDist {
        /// First permutation, e.g. `462531` or `4 6 2 5 3 1`.
        r: String,
        /// Second permutation.
        s: String,
        /// `cayley` or `kendall`.
        #[arg(long, default_value = "kendall", value_parser = parse_with::<Metric>)]
        metric: Metric,
    },
    /// Inverse, cycle factorization, cycle and inversion counts of a permutation.
    PermInfo {
        r: String,
        /// Omit fixed points from the cycle factorization.
        #[arg(long)]
        omit_fixed: bool,
    },
    /// Export the Kendall adjacency graph of Sym(L).
    KendallGraph {
        /// Degree L, between 2 and 6.
        #[arg(long = "L")]
        degree: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Validate, inspect or emit group tables.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Distance matrix of a Cayley embedding.
    EmbedDistmatrix {
        #[command(flatten)]
        source: GroupSource,
        /// `left`, `right` or `adjoint`.
        #[arg(long, default_value = "left", value_parser = parse_with::<Variant>)]
        variant: Variant,
        /// `cayley` or `kendall`.
        #[arg(long, default_value = "kendall", value_parser = parse_with::<Metric>)]
        metric: Metric,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        out: Format,
        /// Print only the admissible distances, space separated.
        #[arg(long)]
        admissible: bool,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Word metric of a generating set.
    Wordmetric {
        #[command(flatten)]
        source: GroupSource,
        /// Generator labels, comma separated or repeated.
        #[arg(long, required = true, value_delimiter = ',')]
        gens: Vec<String>,
        /// Print the full distance table instead of one distance.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        table: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        out: Format,
        /// First element label.
        a: Option<String>,
        /// Second element label.
        b: Option<String>,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Ordinal pattern encoding of real series.
    #[command(subcommand)]
    Ordinal(OrdinalCommand),
    /// Element-wise or windowed distances between two group-valued series.
    SeriesDist(SeriesDistArgs),
    /// Generate simulated series.
    #[command(subcommand)]
    Simulate(SimulateCommand),
    /// Coupled Hénon maps → ordinal patterns → distance histogram.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct OutputArg {
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GroupSource {
    /// Group table file in .gtab format.
    #[arg(long, conflicts_with = "builtin")]
    group: Option<PathBuf>,
    /// Built-in group: `symL` (2 ≤ L ≤ 6), `klein` or `cyclic:n`.
    #[arg(long)]
    builtin: Option<String>,
}

impl GroupSource {
    fn load(&self) -> Result<FiniteGroup> {
        load_group(self.group.as_deref(), self.builtin.as_deref())
    }
}

fn load_group(path: Option<&Path>, builtin: Option<&str>) -> Result<FiniteGroup> {
    match (path, builtin) {
        (Some(p), None) => FiniteGroup::from_gtab(&fs::read_to_string(p)?),
        (None, Some(name)) => FiniteGroup::builtin(name),
        _ => Err(Error::InvalidParameter(
            "give exactly one of a .gtab file or --builtin".into(),
        )),
    }
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// Check the group axioms and print a one-line summary.
    Validate {
        /// Group table file.
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        builtin: Option<String>,
    },
    /// Summary plus the identity, inverses and element orders.
    Show {
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        builtin: Option<String>,
    },
    /// Print the group in .gtab format.
    Emit {
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        builtin: Option<String>,
        #[command(flatten)]
        output: OutputArg,
    },
}

#[derive(Debug, Subcommand)]
enum OrdinalCommand {
    /// Encode a real series (one value per line) into ordinal patterns.
    Encode {
        input: PathBuf,
        /// Pattern length L ≥ 2.
        #[arg(long = "L")]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Ties::Index)]
        ties: Ties,
        /// Noise amplitude for `--ties jitter`.
        #[arg(long)]
        amplitude: Option<f64>,
        /// Random seed for `--ties jitter`.
        #[arg(long)]
        seed: Option<u64>,
        /// Print pattern counts instead of the pattern series.
        #[arg(long)]
        histogram: bool,
        #[command(flatten)]
        output: OutputArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Ties {
    /// Equal values are ordered by position.
    Index,
    /// Equal values are separated by seeded uniform noise.
    Jitter,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesMetric {
    Cayley,
    Kendall,
    Word,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BinningArg {
    Exact,
    /// Bin v to the integer n with v in (n − 0.5, n + 0.5].
    Round,
}

#[derive(Debug, Args)]
struct SeriesDistArgs {
    /// First series, one element per line.
    alpha: PathBuf,
    /// Second series, aligned with the first.
    beta: PathBuf,
    /// Series are ordinal patterns of length L (one-line forms).
    #[arg(long = "sym", conflicts_with_all = ["group", "builtin"])]
    sym: Option<usize>,
    #[command(flatten)]
    source: GroupSource,
    /// `cayley`, `kendall` or `word`.
    #[arg(long, value_enum, default_value_t = SeriesMetric::Kendall)]
    metric: SeriesMetric,
    /// Use the distance of a Cayley embedding (`left`, `right`, `adjoint`).
    /// Implied as `left` for group tables.
    #[arg(long, value_parser = parse_with::<Variant>)]
    variant: Option<Variant>,
    /// Generators for `--metric word`, comma separated.
    #[arg(long, value_delimiter = ',')]
    gens: Vec<String>,
    /// Window length.
    #[arg(long = "W", default_value_t = 1)]
    window: usize,
    /// Window norm exponent: a real ≥ 1 or `inf`.
    #[arg(long, default_value = "1", value_parser = parse_with::<Exponent>)]
    p: Exponent,
    /// Print the histogram of the distances instead of the series.
    #[arg(long)]
    hist: bool,
    /// Histogram binning; defaults to exact for integer distances and
    /// round-half-up otherwise.
    #[arg(long, value_enum, requires = "hist")]
    binning: Option<BinningArg>,
    /// Histogram format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    out: Format,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Debug, Subcommand)]
enum SimulateCommand {
    /// Driver and responder series of the coupled Hénon maps.
    Henon {
        #[command(flatten)]
        henon: HenonArgs,
        /// Directory receiving driver.csv and responder.csv.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

#[derive(Debug, Args)]
struct HenonArgs {
    /// Coupling strength C ≥ 0.
    #[arg(long = "C")]
    coupling: Option<f64>,
    /// Number of recorded samples.
    #[arg(long = "N")]
    length: Option<usize>,
    /// Iterations discarded before recording (default 1000).
    #[arg(long)]
    transient: Option<usize>,
    /// Driver seed `x1,x2` (default 0,0.9).
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    seed_x: Option<[f64; 2]>,
    /// Responder seed `y1,y2` (default 0.75,0).
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    seed_y: Option<[f64; 2]>,
    /// JSON configuration; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl HenonArgs {
    fn apply(&self, cfg: &mut HenonConfig) {
        if let Some(c) = self.coupling {
            cfg.coupling = c;
        }
        if let Some(n) = self.length {
            cfg.length = n;
        }
        if let Some(t) = self.transient {
            cfg.transient = t;
        }
        if let Some(s) = self.seed_x {
            cfg.driver_seed = s;
        }
        if let Some(s) = self.seed_y {
            cfg.responder_seed = s;
        }
    }
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    #[command(flatten)]
    henon: HenonArgs,
    /// Ordinal pattern length, 3 to 6.
    #[arg(long = "L")]
    degree: Option<usize>,
    /// Window length.
    #[arg(long = "W")]
    window: Option<usize>,
    /// Window norm exponent: a real ≥ 1 or `inf`.
    #[arg(long, value_parser = parse_with::<Exponent>)]
    p: Option<Exponent>,
    /// `kendall`, `cayley`, `embedded-kendall` or `embedded-cayley`.
    #[arg(long, value_parser = parse_with::<ExperimentMetric>)]
    metric: Option<ExperimentMetric>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    out: Format,
    #[command(flatten)]
    output: OutputArg,
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `stdout` and diagnostics to `stderr`. Returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error[{}]: {}", e.kind(), e);
            e.exit_code()
        }
    }
}

fn emit(stdout: &mut dyn Write, output: &OutputArg, text: &str) -> Result<()> {
    match &output.output {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_perm(token: &str) -> Result<Permutation> {
    token.parse()
}

fn group_summary(g: &FiniteGroup) -> String {
    format!(
        "order {}, {}, identity {}",
        g.order(),
        if g.is_abelian() { "abelian" } else { "non-abelian" },
        g.label(g.identity())
    )
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::PermDist { r, s, metric } => {
            let d = metric.distance(&parse_perm(&r)?, &parse_perm(&s)?)?;
            writeln!(stdout, "{d}")?;
        }
        Command::PermInfo { r, omit_fixed } => {
            let r = parse_perm(&r)?;
            writeln!(stdout, "inverse {}", r.inverse())?;
            writeln!(stdout, "cycles {}", r.cycles().display(omit_fixed))?;
            writeln!(stdout, "cycle_count {}", r.count_cycles())?;
            writeln!(stdout, "inversions {}", r.count_inversions())?;
            writeln!(stdout, "norm_cayley {}", Metric::Cayley.norm(&r))?;
            writeln!(stdout, "norm_kendall {}", Metric::Kendall.norm(&r))?;
        }
        Command::KendallGraph { degree, format, output } => {
            let g = AdjacencyGraph::kendall(degree)?;
            let text = match format {
                GraphFormat::Dot => g.to_dot(),
                GraphFormat::Edges => g.to_edge_list(),
            };
            emit(stdout, &output, &text)?;
        }
        Command::Group(cmd) => group_command(cmd, stdout)?,
        Command::EmbedDistmatrix {
            source,
            variant,
            metric,
            out,
            admissible,
            output,
        } => {
            let emb = embed(&source.load()?, variant)?;
            let text = if admissible {
                let values: Vec<String> = emb.admissible_distances(metric).iter().map(usize::to_string).collect();
                format!("{}\n", values.join(" "))
            } else {
                let m = emb.distance_matrix(metric)?;
                match out {
                    Format::Csv => m.to_csv(),
                    Format::Json => m.to_json() + "\n",
                }
            };
            emit(stdout, &output, &text)?;
        }
        Command::Wordmetric {
            source,
            gens,
            table,
            out,
            a,
            b,
            output,
        } => {
            let g = source.load()?;
            let gs = GeneratingSet::from_labels(g, &gens)?;
            let text = match (table, a, b) {
                (true, _, _) => {
                    let m = gs.distance_table()?;
                    match out {
                        Format::Csv => m.to_csv(),
                        Format::Json => m.to_json() + "\n",
                    }
                }
                (false, Some(a), Some(b)) => {
                    let g = gs.group();
                    format!("{}\n", gs.distance(g.index_of(&a)?, g.index_of(&b)?)?)
                }
                _ => {
                    return Err(Error::InvalidParameter(
                        "give two element labels or --table".into(),
                    ))
                }
            };
            emit(stdout, &output, &text)?;
        }
        Command::Ordinal(OrdinalCommand::Encode {
            input,
            degree,
            ties,
            amplitude,
            seed,
            histogram,
            output,
        }) => {
            let policy = match (ties, amplitude, seed) {
                (Ties::Index, None, None) => TiePolicy::IndexOrder,
                (Ties::Jitter, Some(amplitude), Some(seed)) => TiePolicy::Jitter { amplitude, seed },
                (Ties::Jitter, _, _) => {
                    return Err(Error::InvalidParameter(
                        "--ties jitter needs both --amplitude and --seed".into(),
                    ))
                }
                (Ties::Index, _, _) => {
                    return Err(Error::InvalidParameter(
                        "--amplitude and --seed only apply to --ties jitter".into(),
                    ))
                }
            };
            let x = RealSeries::parse(&fs::read_to_string(input)?)?;
            let o = ordinal_encode(&x, degree, policy)?;
            let text = if histogram {
                let mut s = String::new();
                for (p, c) in pattern_histogram(&o) {
                    writeln!(s, "{}\t{c}", p.compact()).unwrap();
                }
                s
            } else {
                o.to_text()
            };
            emit(stdout, &output, &text)?;
        }
        Command::SeriesDist(args) => series_dist(args, stdout)?,
        Command::Simulate(SimulateCommand::Henon { henon, out_dir }) => {
            let mut cfg = match &henon.config {
                Some(path) => serde_json::from_str(&fs::read_to_string(path)?)?,
                None => HenonConfig::default(),
            };
            henon.apply(&mut cfg);
            let (x, y) = henon_coupled(&cfg)?;
            fs::create_dir_all(&out_dir)?;
            let driver = out_dir.join("driver.csv");
            let responder = out_dir.join("responder.csv");
            fs::write(&driver, x.to_csv())?;
            fs::write(&responder, y.to_csv())?;
            writeln!(
                stdout,
                "# C={} N={} transient={}\n{}\n{}",
                cfg.coupling,
                cfg.length,
                cfg.transient,
                driver.display(),
                responder.display()
            )?;
        }
        Command::Experiment(args) => {
            let mut cfg = match &args.henon.config {
                Some(path) => serde_json::from_str(&fs::read_to_string(path)?)?,
                None => ExperimentConfig::default(),
            };
            args.henon.apply(&mut cfg.henon);
            if let Some(l) = args.degree {
                cfg.degree = l;
            }
            if let Some(w) = args.window {
                cfg.window = w;
            }
            if let Some(p) = args.p {
                cfg.p = p;
            }
            if let Some(m) = args.metric {
                cfg.metric = m;
            }
            let h = crate::simulate::run_experiment(&cfg)?;
            let text = match args.out {
                Format::Json => {
                    let mut v = serde_json::to_value(&h)?;
                    v["config"] = serde_json::to_value(&cfg)?;
                    serde_json::to_string_pretty(&v)? + "\n"
                }
                Format::Csv => {
                    format!(
                        "# C={} N={} transient={} L={}\n{}",
                        cfg.henon.coupling,
                        cfg.henon.length,
                        cfg.henon.transient,
                        cfg.degree,
                        h.to_csv()
                    )
                }
            };
            emit(stdout, &args.output, &text)?;
        }
    }
    Ok(())
}

fn group_command(cmd: GroupCommand, stdout: &mut dyn Write) -> Result<()> {
    match cmd {
        GroupCommand::Validate { path, builtin } => {
            let g = load_group(path.as_deref(), builtin.as_deref())?;
            writeln!(stdout, "{}", group_summary(&g))?;
        }
        GroupCommand::Show { path, builtin } => {
            let g = load_group(path.as_deref(), builtin.as_deref())?;
            writeln!(stdout, "{}", group_summary(&g))?;
            writeln!(stdout, "element\tinverse\torder")?;
            for a in 0..g.order() {
                writeln!(
                    stdout,
                    "{}\t{}\t{}",
                    g.label(a),
                    g.label(g.inverses()[a]),
                    g.element_order(a)?
                )?;
            }
        }
        GroupCommand::Emit { path, builtin, output } => {
            let g = load_group(path.as_deref(), builtin.as_deref())?;
            emit(stdout, &output, &g.to_gtab())?;
        }
    }
    Ok(())
}

fn series_dist(args: SeriesDistArgs, stdout: &mut dyn Write) -> Result<()> {
    let provider: Box<dyn DistanceProvider> = match (args.sym, args.metric, args.variant) {
        (Some(l), SeriesMetric::Word, _) => Box::new(WordMetric::on_symmetric(l, &args.gens)?),
        (Some(l), SeriesMetric::Cayley, None) => Box::new(PermutationMetric::new(l, Metric::Cayley)?),
        (Some(l), SeriesMetric::Kendall, None) => Box::new(PermutationMetric::new(l, Metric::Kendall)?),
        (Some(l), m, Some(v)) => Box::new(EmbeddedMetric::on_symmetric(l, v, base_metric(m))?),
        (None, SeriesMetric::Word, _) => Box::new(WordMetric::new(Arc::new(args.source.load()?), &args.gens)?),
        (None, m, v) => Box::new(EmbeddedMetric::new(
            Arc::new(args.source.load()?),
            v.unwrap_or(Variant::Left),
            base_metric(m),
        )?),
    };
    let domain: Domain = provider.domain().clone();
    let alpha = GroupSeries::parse(domain.clone(), &fs::read_to_string(&args.alpha)?)?;
    let beta = GroupSeries::parse(domain, &fs::read_to_string(&args.beta)?)?;
    let d = windowed_distances(&alpha, &beta, provider.as_ref(), args.window, args.p)?;
    let text = if args.hist {
        let integral = args.window == 1 || args.p.preserves_integers();
        let binning = match args.binning {
            Some(BinningArg::Exact) => Binning::Exact,
            Some(BinningArg::Round) => Binning::RoundHalfUp,
            None if integral => Binning::Exact,
            None => Binning::RoundHalfUp,
        };
        let support = (args.window == 1).then(|| provider.admissible());
        let h = histogram(&d, binning, support.as_deref())?;
        match args.out {
            Format::Json => h.to_json() + "\n",
            Format::Csv => h.to_csv(),
        }
    } else {
        d.to_csv()
    };
    emit(stdout, &args.output, &text)
}

fn base_metric(m: SeriesMetric) -> Metric {
    match m {
        SeriesMetric::Cayley => Metric::Cayley,
        _ => Metric::Kendall,
    }
}
