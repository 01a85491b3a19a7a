use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use wlprove::fol::{parse_clauses, parse_cnf, Problem};
use wlprove::harness::{read_results, report, run_corpus, run_one, solved_sets, greedy_cover, CorpusOptions, RunConfig, WatchlistSource};
use wlprove::saturation::{resolve_strategy, Budget, Strategy, StrategyMode};
use wlprove::selection::{build_watchlists, load_corpus, load_problem, load_problems, problem_dirs, watchlist_text, write_proof, write_watchlists, Method, SelectParams};
use wlprove::watchlist::watchlist_files;

/// Saturation prover with watchlist guidance.
#[derive(Parser)]
#[command(name = "wlprove", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prove one problem.
    Prove(ProveArgs),
    /// Run strategies over a corpus directory and write results.
    Corpus(CorpusArgs),
    /// Build watchlists for a problem from the proofs in a corpus.
    Select(SelectArgs),
    /// Greedy strategy cover of a results file.
    Cover(CoverArgs),
    /// Summary of a results file.
    Report(ReportArgs),
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 10_000)]
    max_given: u64,
    #[arg(long)]
    max_seconds: Option<f64>,
    #[arg(long)]
    max_generated: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget { max_given: Some(self.max_given), max_seconds: self.max_seconds, max_generated: self.max_generated }
    }
}

#[derive(Args)]
struct ProveArgs {
    /// A TPTP CNF file or a problem directory holding `problem.p`.
    problem: PathBuf,
    /// Built-in name (`baseline`, `baseline+dyn`, ...) or strategy text.
    #[arg(long, default_value = "baseline")]
    strategy: String,
    /// Load every `*.p` file of this directory as one watchlist.
    #[arg(long)]
    watchlist_dir: Option<PathBuf>,
    /// Load a single watchlist file; repeatable.
    #[arg(long)]
    watchlist: Vec<PathBuf>,
    /// Strategy variant applied on top of `--strategy`; repeatable.
    #[arg(long)]
    mode: Vec<StrategyMode>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Write the proof here instead of standard output.
    #[arg(long)]
    proof_out: Option<PathBuf>,
}

#[derive(Args)]
struct CorpusArgs {
    /// Directory of problem directories.
    dir: PathBuf,
    /// One strategy per line, `name = spec` or just `spec`; `#` starts a comment.
    #[arg(long)]
    strategies: PathBuf,
    /// Results file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Guide every run with leave-one-out watchlists selected from the
    /// proofs already stored in the corpus.
    #[arg(long)]
    select: Option<Method>,
    #[arg(long, default_value_t = 16)]
    k: usize,
    /// Store the first checked proof of each problem in its directory.
    #[arg(long)]
    write_proofs: bool,
    /// Number of greedy cover picks in the printed summary.
    #[arg(long, default_value_t = 5)]
    cover: usize,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct SelectArgs {
    #[arg(long)]
    method: Method,
    /// Corpus directory with stored proofs.
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long, default_value_t = 16)]
    k: usize,
    /// Problem file or directory to select for.
    #[arg(long)]
    target: PathBuf,
    #[arg(long, default_value_t = 1000)]
    max_clauses: usize,
    /// Rank proofs by recorded guidance provenance as well.
    #[arg(long)]
    round2: bool,
    /// Write one `<name>.p` per watchlist here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CoverArgs {
    #[arg(long)]
    results: Vec<PathBuf>,
    #[arg(long, default_value_t = 5)]
    k: usize,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long)]
    results: Vec<PathBuf>,
    #[arg(long, default_value_t = 5)]
    cover: usize,
}

fn read_problem(path: &Path) -> Result<Problem> {
    if path.is_dir() {
        return Ok(load_problem(path)?);
    }
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(parse_cnf(&name, &text).with_context(|| format!("parsing {}", path.display()))?)
}

fn strategy(spec: &str, modes: &[StrategyMode]) -> Result<Strategy> {
    let mut s = resolve_strategy(spec).with_context(|| format!("strategy `{spec}`"))?;
    for m in modes {
        s = s.apply_mode(*m);
    }
    s.validate()?;
    Ok(s)
}

fn read_watchlist(path: &Path) -> Result<(String, Vec<wlprove::fol::Clause>)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let clauses = parse_clauses(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(), clauses))
}

fn prove(args: ProveArgs) -> Result<ExitCode> {
    let problem = read_problem(&args.problem)?;
    let strategy = strategy(&args.strategy, &args.mode)?;
    let mut files = args.watchlist.clone();
    if let Some(dir) = &args.watchlist_dir {
        files.extend(watchlist_files(dir).with_context(|| format!("listing {}", dir.display()))?);
    }
    let sets = files.iter().map(|f| read_watchlist(f)).collect::<Result<Vec<_>>>()?;
    if !sets.is_empty() && !strategy.uses_watchlist() {
        log::warn!("watchlists loaded but the strategy does not use them");
    }
    let config = RunConfig { name: args.strategy.clone(), strategy, watchlists: WatchlistSource::Fixed(Arc::new(sets)) };
    let opts = CorpusOptions { budget: args.budget.budget(), ..Default::default() };
    let out = run_one(&problem, &config, &opts);
    let r = &out.record;
    if let Some(e) = &r.error {
        bail!("{}: {e}", problem.name);
    }
    let mut text = format!("% {}: {}\n", problem.name, r.result);
    text += &format!("% loops {} generated {} processed {} pps {:.0}\n", r.loops, r.generated, r.processed, r.pps);
    if !r.progress.is_empty() {
        let p: Vec<String> = r.progress.iter().map(|x| format!("{x:.3}")).collect();
        text += &format!("% watchlist progress {}\n", p.join(" "));
    }
    let code = match &out.proof {
        Some(proof) => {
            text += &format!("% proof length {} guided {}\n", proof.len(), proof.guided_steps());
            match &args.proof_out {
                Some(path) => fs::write(path, proof.to_tptp()).with_context(|| format!("writing {}", path.display()))?,
                None => text += &proof.to_tptp(),
            }
            ExitCode::SUCCESS
        }
        None => ExitCode::from(1),
    };
    emit(&text)?;
    Ok(code)
}

/// Write to standard output; a closed pipe is not an error.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn read_strategies(path: &Path) -> Result<Vec<RunConfig>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, spec) = match line.split_once('=') {
            Some((n, s)) if !n.contains('(') => (n.trim(), s.trim()),
            _ => (line, line),
        };
        let s = strategy(spec, &[]).with_context(|| format!("{}:{}", path.display(), i + 1))?;
        out.push(RunConfig::unguided(name, s));
    }
    if out.is_empty() {
        bail!("{}: no strategies", path.display());
    }
    Ok(out)
}

fn corpus(args: CorpusArgs) -> Result<ExitCode> {
    let problems = load_problems(&args.dir)?;
    if problems.is_empty() {
        bail!("{}: no problem directories", args.dir.display());
    }
    let mut configs = read_strategies(&args.strategies)?;
    if let Some(method) = args.select {
        let proofs = Arc::new(load_corpus(&args.dir)?);
        log::info!("{} stored proofs", proofs.len());
        let params = SelectParams { k: args.k, ..Default::default() };
        for c in &mut configs {
            c.watchlists = WatchlistSource::Select { method, params, corpus: proofs.clone() };
        }
    }
    let opts = CorpusOptions { budget: args.budget.budget(), jobs: args.jobs.max(1), record_log: false };
    opts.budget.validate()?;
    let outputs = match &args.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
            run_corpus(&problems, &configs, &opts, Some(&mut w))?
        }
        None => run_corpus(&problems, &configs, &opts, Some(&mut io::stdout().lock()))?,
    };
    if args.write_proofs {
        let dirs = problem_dirs(&args.dir)?;
        for (dir, chunk) in dirs.iter().zip(outputs.chunks(configs.len())) {
            if let Some(proof) = chunk.iter().find_map(|o| o.proof.as_ref()) {
                write_proof(dir, proof)?;
            }
        }
    }
    let records: Vec<_> = outputs.into_iter().map(|o| o.record).collect();
    eprint!("{}", report(&records, args.cover));
    Ok(ExitCode::SUCCESS)
}

fn select(args: SelectArgs) -> Result<ExitCode> {
    let target = read_problem(&args.target)?;
    let proofs = load_corpus(&args.corpus)?;
    let params = SelectParams { k: args.k, max_clauses: args.max_clauses, round2: args.round2 };
    let sets = build_watchlists(args.method, &target, &proofs, params);
    if sets.is_empty() {
        log::warn!("no watchlists selected for {}", target.name);
    }
    match &args.out {
        Some(dir) => {
            for p in write_watchlists(dir, &sets)? {
                println!("{}", p.display());
            }
        }
        None => {
            let mut out = io::stdout().lock();
            for (name, clauses) in &sets {
                writeln!(out, "% watchlist {name} ({} clauses)", clauses.len())?;
                write!(out, "{}", watchlist_text(clauses))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_records(paths: &[PathBuf]) -> Result<Vec<wlprove::harness::RunRecord>> {
    if paths.is_empty() {
        bail!("no results files given");
    }
    let mut out = Vec::new();
    for p in paths {
        let f = File::open(p).with_context(|| format!("opening {}", p.display()))?;
        out.extend(read_results(BufReader::new(f)).with_context(|| format!("reading {}", p.display()))?);
    }
    Ok(out)
}

fn cover(args: CoverArgs) -> Result<ExitCode> {
    if args.k == 0 {
        bail!("k must be at least 1");
    }
    let records = load_records(&args.results)?;
    let (mut total, mut text) = (0, String::new());
    for (name, added) in greedy_cover(&solved_sets(&records), args.k) {
        total += added;
        text += &format!("{name}\t+{added}\t{total}\n");
    }
    emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn show_report(args: ReportArgs) -> Result<ExitCode> {
    let records = load_records(&args.results)?;
    emit(&report(&records, args.cover).to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Prove(a) => prove(a),
        Command::Corpus(a) => corpus(a),
        Command::Select(a) => select(a),
        Command::Cover(a) => cover(a),
        Command::Report(a) => show_report(a),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
