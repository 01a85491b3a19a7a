//! Leave-one-out k-NN guidance experiment over a corpus directory.
//!
//! Runs the unguided base strategy on every problem, turns the proofs into a
//! proof corpus, then reruns every problem with `<base>+dyn` and knn-dyn
//! watchlists built from the other problems' proofs.
//!
//! ```text
//! cargo run --release -p wlprove-core --example efficacy -- corpus baseline
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use wlprove::harness::{run_corpus, CorpusOptions, RunConfig, WatchlistSource};
use wlprove::saturation::{resolve_strategy, Budget};
use wlprove::selection::{entry_from_proof, family, load_problems, Method, SelectParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dir = args.next().unwrap_or_else(|| "corpus".into());
    let base = args.next().unwrap_or_else(|| "baseline".into());
    let mode = args.next().unwrap_or_else(|| "dyn".into());
    let env = |k: &str, d: u64| std::env::var(k).ok().and_then(|v| v.parse().ok()).unwrap_or(d);
    let problems = load_problems(std::path::Path::new(&dir))?;
    let budget = Budget { max_given: Some(10_000), max_generated: Some(env("MAXGEN", 250_000)), max_seconds: None };
    let opts = CorpusOptions { budget, ..Default::default() };

    let plain = run_corpus(&problems, &[RunConfig::unguided(&base, resolve_strategy(&base)?)], &opts, None)?;
    let corpus: Vec<_> = problems
        .iter()
        .zip(&plain)
        .filter_map(|(p, o)| o.proof.as_ref().map(|pr| entry_from_proof(p, &pr.clauses().cloned().collect::<Vec<_>>(), vec![])))
        .collect();
    let guided_name = format!("{base}+{mode}");
    let guided = RunConfig {
        name: guided_name.clone(),
        strategy: resolve_strategy(&guided_name)?,
        watchlists: WatchlistSource::Select {
            method: Method::KnnDyn,
            params: SelectParams { k: env("K", 16) as usize, ..Default::default() },
            corpus: Arc::new(corpus),
        },
    };
    let dynr = run_corpus(&problems, &[guided], &opts, None)?;

    let distinct: std::collections::BTreeSet<String> = plain
        .iter()
        .chain(&dynr)
        .filter_map(|o| o.proof.as_ref())
        .flat_map(|p| p.clauses().map(wlprove::fol::normal_form_text).collect::<Vec<_>>())
        .collect();
    println!("distinct proof clauses: {}", distinct.len());
    let mut fam: BTreeMap<&str, (u32, u32)> = BTreeMap::new();
    let (mut lb, mut lg, mut common) = (0u64, 0u64, 0u32);
    for ((p, a), b) in problems.iter().zip(&plain).zip(&dynr) {
        let (a, b) = (&a.record, &b.record);
        println!("{:8} {:16} {:6} | {:16} {:6} matched={}", p.name, a.result, a.loops, b.result, b.loops, b.matched_in_proof);
        let f = fam.entry(family(&p.name)).or_default();
        f.0 += a.solved() as u32;
        f.1 += b.solved() as u32;
        if a.solved() && b.solved() {
            lb += a.loops;
            lg += b.loops;
            common += 1;
        }
    }
    for (f, (a, b)) in &fam {
        println!("{f}: {base} {a}  {guided_name} {b}");
    }
    println!("common {common}: mean loops {:.1} vs {:.1}", lb as f64 / common as f64, lg as f64 / common as f64);
    Ok(())
}
