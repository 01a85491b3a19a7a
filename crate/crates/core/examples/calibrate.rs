//! Runs strategies over a corpus directory and prints one line per run.
//!
//! ```text
//! cargo run -p wlprove-core --example calibrate -- corpus fifo baseline
//! ```

use std::time::Instant;

use wlprove::harness::{run_one, CorpusOptions, RunConfig};
use wlprove::saturation::{resolve_strategy, Budget};
use wlprove::selection::load_problems;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dir = args.next().unwrap_or_else(|| "corpus".into());
    let names: Vec<String> = args.collect();
    let problems = load_problems(std::path::Path::new(&dir))?;
    let env = |k: &str, d: u64| std::env::var(k).ok().and_then(|v| v.parse().ok()).unwrap_or(d);
    let budget = Budget { max_given: Some(env("GIVEN", 10_000)), max_generated: Some(env("MAXGEN", 250_000)), max_seconds: None };
    let opts = CorpusOptions { budget, ..Default::default() };
    for p in &problems {
        for n in &names {
            let cfg = RunConfig::unguided(n.clone(), resolve_strategy(n)?);
            let t = Instant::now();
            let out = run_one(p, &cfg, &opts);
            let r = &out.record;
            println!(
                "{:8} {:10} {:16} loops={:6} gen={:8} t={:.2}s",
                p.name,
                n,
                r.result,
                r.loops,
                r.generated,
                t.elapsed().as_secs_f64()
            );
        }
    }
    Ok(())
}
