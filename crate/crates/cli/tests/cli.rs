use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn wlprove(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wlprove")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn chain(n: usize) -> String {
    let mut t = "a".to_string();
    for _ in 0..n {
        t = format!("s({t})");
    }
    format!(
        "cnf(zero, axiom, nat(a)).\ncnf(succ, axiom, ~nat(X) | nat(s(X))).\ncnf(goal, negated_conjecture, ~nat({t})).\n"
    )
}

fn small_corpus(dir: &Path) {
    for n in 1..=4 {
        let d = dir.join(format!("chain_{n}"));
        fs::create_dir_all(&d).unwrap();
        fs::write(d.join("problem.p"), chain(n * 2)).unwrap();
    }
    let d = dir.join("open_1");
    fs::create_dir_all(&d).unwrap();
    fs::write(d.join("problem.p"), "cnf(a, axiom, p(a)).\ncnf(b, negated_conjecture, ~q(a)).\n").unwrap();
}

#[test]
fn prove_exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let unsat = tmp.path().join("unsat.p");
    fs::write(&unsat, chain(3)).unwrap();
    let sat = tmp.path().join("sat.p");
    fs::write(&sat, "cnf(a, axiom, p(a)).\ncnf(b, negated_conjecture, ~q(a)).\n").unwrap();

    let o = wlprove(&["prove", unsat.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("% unsat: proof"));
    assert!(stdout(&o).contains("$false"));

    let o = wlprove(&["prove", sat.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("saturated"));

    let o = wlprove(&["prove", unsat.to_str().unwrap(), "--max-given", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = wlprove(&["prove", tmp.path().join("missing.p").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = wlprove(&["prove", unsat.to_str().unwrap(), "--strategy", "-H(1*Nope(ConstPrio))"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn proof_replays_as_watchlist() {
    let tmp = tempfile::tempdir().unwrap();
    let problem = tmp.path().join("p.p");
    fs::write(&problem, chain(5)).unwrap();
    let wl = tmp.path().join("wl");
    fs::create_dir(&wl).unwrap();
    let proof = wl.join("own.p");
    let o = wlprove(&["prove", problem.to_str().unwrap(), "--proof-out", proof.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(&proof).unwrap().contains("$false"));

    let o = wlprove(&["prove", problem.to_str().unwrap(), "--strategy", "watchlist", "--watchlist-dir", wl.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("watchlist progress 1.000"), "{out}");

    let o = wlprove(&["prove", problem.to_str().unwrap(), "--mode", "dyn", "--watchlist", proof.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn corpus_select_cover_report() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("corpus");
    small_corpus(&corpus);
    let strategies = tmp.path().join("strategies.txt");
    fs::write(&strategies, "# two strategies\nfifo\nmine = -H(2*Clauseweight(ConstPrio,1,1,1),1*FIFOWeight(ConstPrio))\n").unwrap();
    let results = tmp.path().join("results.jsonl");

    let o = wlprove(&[
        "corpus",
        corpus.to_str().unwrap(),
        "--strategies",
        strategies.to_str().unwrap(),
        "--out",
        results.to_str().unwrap(),
        "--write-proofs",
        "--max-given",
        "500",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&results).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], r#"{"format":"wlprove-results","version":1}"#);
    assert_eq!(lines.len(), 1 + 5 * 2);
    assert!(lines[1].starts_with(r#"{"problem":"chain_1","strategy":"fifo","result":"proof""#));
    assert!(corpus.join("chain_3/proof.p").is_file());
    assert!(corpus.join("chain_3/provenance.json").is_file());
    assert!(!corpus.join("open_1/proof.p").exists());

    let o = wlprove(&["cover", "--results", results.to_str().unwrap(), "--k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "fifo\t+4\t4\nmine\t+0\t4\n");

    let o = wlprove(&["report", "--results", results.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("union: 4"));

    let wl = tmp.path().join("wl");
    let o = wlprove(&[
        "select", "--method", "knn-dyn", "--corpus", corpus.to_str().unwrap(), "--k", "2", "--target",
        corpus.join("chain_4").to_str().unwrap(), "--out", wl.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let written: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(written.len(), 2);
    assert!(written.iter().all(|p| !p.ends_with("chain_4.p")));

    let o = wlprove(&[
        "prove", corpus.join("chain_4").to_str().unwrap(), "--strategy", "baseline+dyn", "--watchlist-dir",
        wl.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));

    let guided = tmp.path().join("guided.jsonl");
    let o = wlprove(&[
        "corpus", corpus.to_str().unwrap(), "--strategies", strategies.to_str().unwrap(), "--out",
        guided.to_str().unwrap(), "--select", "art", "--jobs", "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&guided).unwrap();
    assert!(text.lines().skip(1).take(8).all(|l| l.contains(r#""watchlists":1"#)), "{text}");
}

#[test]
fn cover_rejects_bad_input() {
    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.jsonl");
    fs::write(&bad, "{\"format\":\"other\",\"version\":1}\n").unwrap();
    let o = wlprove(&["cover", "--results", bad.to_str().unwrap(), "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = wlprove(&["cover", "--results", bad.to_str().unwrap(), "--k", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = wlprove(&["select", "--method", "nearest", "--corpus", ".", "--target", "x"]);
    assert_eq!(o.status.code(), Some(2));
}
