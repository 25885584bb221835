mod render;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_core::claims::cached_f_value;
use rainbow_core::gris::{gris, rainbow_cycle_n_minus_1, rainbow_path};
use rainbow_core::{
    enumerate_ind_sets, enumerate_jump_sets, find_rainbow, label, solve_two_jump, solve_two_regular,
    verify_theorem_range, vertex, Certificate, Claim, Collection, Degree2Graph, Error, Grid, JumpSet,
    ResultCache, SearchConfig, VerifyOptions,
};

use render::Format;

/// Exit status for an input or usage error.
const EXIT_ERROR: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "rainbow", version, about = "Rainbow independent sets in graphs of maximum degree two")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Result cache (JSON lines).
    #[arg(long, global = true, env = "RAINBOW_CACHE", default_value = "rainbow-cache.jsonl")]
    cache: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List independent n-sets, or k-jump n-sets of a cycle.
    Enumerate {
        #[arg(long)]
        graph: Degree2Graph,
        #[arg(long)]
        n: usize,
        /// List k-jump sets instead (cycles only).
        #[arg(long)]
        jump: Option<usize>,
    },
    /// Compute f_G(n, m) by exhaustive search.
    Fvalue {
        #[arg(long)]
        graph: Degree2Graph,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check a claim over a parameter grid.
    Verify {
        #[arg(long)]
        claim: Claim,
        /// Value or range, e.g. 3 or 2..5.
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        /// Cycle or path length (vertex count for thm-1.2); value or range.
        #[arg(long, value_parser = parse_range)]
        t: Option<RangeInclusive<usize>>,
        #[arg(long)]
        t_max: Option<usize>,
        /// Graphs for thm-1.2 (repeatable).
        #[arg(long)]
        graph: Vec<Degree2Graph>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Run a solver and emit a verified certificate.
    Solve {
        #[arg(value_enum)]
        solver: Solver,
        #[arg(long)]
        graph: Degree2Graph,
        /// Collection as JSON, or @path to a JSON file.
        #[arg(long)]
        collection: Option<String>,
        /// 2-jump start labels, e.g. 1,1,3,3 (two-jump only).
        #[arg(long, value_delimiter = ',')]
        starts: Vec<usize>,
        /// Set size n (path, cycle, two-jump, two-regular).
        #[arg(long)]
        n: Option<usize>,
        /// Rainbow size (find-rainbow).
        #[arg(long)]
        m: Option<usize>,
        /// Scan order as labels (gris); natural order by default.
        #[arg(long, value_delimiter = ',')]
        ordering: Vec<usize>,
        /// Also write the certificate here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate file.
    Check { certificate: PathBuf },
    /// Inspect or clear the result cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Args, Debug, Clone)]
struct SearchArgs {
    /// Largest collection size searched (default 3n).
    #[arg(long)]
    level_cap: Option<usize>,
    /// Seconds per search or grid cell; 0 disables the limit.
    #[arg(long, default_value_t = 60)]
    time_budget: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long)]
    no_symmetry: bool,
    /// Ignore cached results.
    #[arg(long)]
    recompute: bool,
    /// Neither read nor write the cache.
    #[arg(long)]
    no_cache: bool,
}

impl SearchArgs {
    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            search: SearchConfig {
                level_cap: self.level_cap,
                symmetry: !self.no_symmetry,
                workers: self.workers,
                time_budget: (self.time_budget > 0).then(|| Duration::from_secs(self.time_budget)),
            },
            recompute: self.recompute,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Solver {
    Gris,
    Path,
    Cycle,
    TwoJump,
    TwoRegular,
    FindRainbow,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CacheAction {
    Show,
    Path,
    Clear,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => {
            let v = num(s)?;
            v..=v
        }
    };
    if r.start() > r.end() {
        return Err(format!("empty range {s}"));
    }
    Ok(r)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let refuted = e
                .downcast_ref::<Error>()
                .is_some_and(|e| matches!(e, Error::ContractViolation(_)));
            ExitCode::from(if refuted { 1 } else { EXIT_ERROR })
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let format = cli.format;
    match cli.command {
        Command::Enumerate { graph, n, jump } => enumerate(format, &graph, n, jump),
        Command::Fvalue { graph, n, m, search } => {
            let cache = (!search.no_cache).then(|| ResultCache::new(&cli.cache));
            let (r, cached) = cached_f_value(&graph, n, m, &search.options(), cache.as_ref())?;
            render::f_result(format, &r, cached)?;
            Ok(if r.is_exact() { 0 } else { 2 })
        }
        Command::Verify {
            claim,
            n,
            t,
            t_max,
            graph,
            search,
        } => {
            let cache = (!search.no_cache).then(|| ResultCache::new(&cli.cache));
            let grid = Grid {
                n,
                t,
                t_max,
                graphs: graph,
            };
            let report = verify_theorem_range(claim, &grid, &search.options(), cache.as_ref())?;
            render::grid(format, &report)?;
            Ok(report.exit_code() as u8)
        }
        Command::Solve {
            solver,
            graph,
            collection,
            starts,
            n,
            m,
            ordering,
            out,
        } => {
            let cert = solve(solver, &graph, collection.as_deref(), &starts, n, m, &ordering)?;
            if !cert.verify()? {
                return Err(Error::ContractViolation("certificate failed re-verification".into()).into());
            }
            let json = serde_json::to_string_pretty(&cert)?;
            if let Some(path) = out {
                std::fs::write(&path, format!("{json}\n")).with_context(|| format!("writing {}", path.display()))?;
            }
            render::certificate(format, &cert, &json)?;
            Ok(0)
        }
        Command::Check { certificate } => {
            let text = std::fs::read_to_string(&certificate)
                .with_context(|| format!("reading {}", certificate.display()))?;
            let cert: Certificate = serde_json::from_str(&text)?;
            let ok = cert.verify()?;
            println!("{}", if ok { "valid" } else { "INVALID" });
            Ok(if ok { 0 } else { 1 })
        }
        Command::Cache { action } => {
            let cache = ResultCache::new(&cli.cache);
            match action {
                CacheAction::Path => println!("{}", cache.path().display()),
                CacheAction::Clear => {
                    cache.clear()?;
                    println!("cleared {}", cache.path().display());
                }
                CacheAction::Show => render::cache(format, &cache.load()?)?,
            }
            Ok(0)
        }
    }
}

fn enumerate(format: Format, g: &Degree2Graph, n: usize, jump: Option<usize>) -> anyhow::Result<u8> {
    let sets: Vec<Vec<usize>> = match jump {
        None => enumerate_ind_sets(g, n).iter().map(|s| s.iter().map(label).collect()).collect(),
        Some(k) => {
            let t = g.as_cycle().ok_or_else(|| anyhow!("--jump needs a single cycle, got {g}"))?;
            enumerate_jump_sets(t, k, n)?
                .iter()
                .map(|j| (0..j.size).map(|i| label(j.element(i))).collect())
                .collect()
        }
    };
    render::listing(format, g, n, jump, &sets)?;
    Ok(0)
}

fn read_collection(arg: Option<&str>) -> anyhow::Result<Collection> {
    let Some(arg) = arg else {
        bail!("--collection is required for this solver");
    };
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).context("parsing the collection")
}

fn need(v: Option<usize>, flag: &str) -> anyhow::Result<usize> {
    v.ok_or_else(|| anyhow!("--{flag} is required for this solver"))
}

/// Recovers 2-jump sets from explicit vertex sets.
fn as_jump_sets(t: usize, n: usize, f: &Collection) -> anyhow::Result<Vec<JumpSet>> {
    f.sets()
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            (0..t)
                .filter_map(|st| JumpSet::new(t, st, 2, n).ok())
                .find(|j| j.vertex_set() == s)
                .ok_or_else(|| anyhow!("set {} is not a 2-jump {n}-set of C{t}", i + 1))
        })
        .collect()
}

fn solve(
    solver: Solver,
    g: &Degree2Graph,
    collection: Option<&str>,
    starts: &[usize],
    n: Option<usize>,
    m: Option<usize>,
    ordering: &[usize],
) -> anyhow::Result<Certificate> {
    let cycle_len = || g.as_cycle().ok_or_else(|| anyhow!("this solver needs a single cycle, got {g}"));
    match solver {
        Solver::Gris => {
            let f = read_collection(collection)?;
            let order: Vec<usize> = if ordering.is_empty() {
                (0..g.vertex_count()).collect()
            } else {
                ordering
                    .iter()
                    .map(|&l| vertex(l).ok_or_else(|| anyhow!("vertex labels start at 1")))
                    .collect::<anyhow::Result<_>>()?
            };
            let res = gris(g, &order, &f)?;
            Ok(Certificate::from_greedy(g, &order, &f, &res))
        }
        Solver::Path => {
            let t = g.as_path().ok_or_else(|| anyhow!("the path solver needs a single path, got {g}"))?;
            let f = read_collection(collection)?;
            let n = need(n, "n")?;
            let res = rainbow_path(t, n, &f)?;
            let order: Vec<usize> = (0..t).collect();
            Ok(Certificate::from_greedy(g, &order, &f, &res.greedy))
        }
        Solver::Cycle => {
            let t = cycle_len()?;
            let f = read_collection(collection)?;
            let r = rainbow_cycle_n_minus_1(t, need(n, "n")?, &f)?;
            Ok(Certificate::from_rainbow("cycle", g, &f, &r))
        }
        Solver::TwoJump => {
            let t = cycle_len()?;
            let sets = if starts.is_empty() {
                let f = read_collection(collection)?;
                as_jump_sets(t, n.unwrap_or(f.len()), &f)?
            } else {
                let n = n.unwrap_or(starts.len());
                starts
                    .iter()
                    .map(|&s| {
                        let v = vertex(s).ok_or_else(|| anyhow!("vertex labels start at 1"))?;
                        Ok(JumpSet::new(t, v, 2, n)?)
                    })
                    .collect::<anyhow::Result<_>>()?
            };
            let n = sets.len();
            let out = solve_two_jump(t, n, &sets)?;
            let f: Collection = sets.iter().map(JumpSet::vertex_set).collect();
            Ok(Certificate::from_two_jump(g, &f, &out))
        }
        Solver::TwoRegular => {
            let f = read_collection(collection)?;
            let n = n.unwrap_or(f.len() + 1);
            let r = solve_two_regular(g, n, &f)?;
            Ok(Certificate::from_rainbow("two-regular", g, &f, &r))
        }
        Solver::FindRainbow => {
            let f = read_collection(collection)?;
            let m = need(m, "m")?;
            f.validate(g)?;
            if f.len() > rainbow_core::rainbow::MAX_COLORS {
                bail!("at most {} sets are supported", rainbow_core::rainbow::MAX_COLORS);
            }
            let r = find_rainbow(g, &f, m)
                .ok_or_else(|| anyhow!("no rainbow independent {m}-set exists"))?;
            Ok(Certificate::from_rainbow("find-rainbow", g, &f, &r))
        }
    }
}
