//! Regenerates the bundled problem corpus.
//!
//! ```text
//! cargo run -p wlprove-core --example gen_corpus -- corpus
//! ```
//!
//! Three families of twenty problems each: `grp` (relational group theory,
//! Horn), `lat` (lattices over an order predicate) and `rel` (relation
//! algebra over a membership predicate). Goals are produced by random valid
//! rewriting from a fixed seed, so the output is reproducible.

use std::fmt;
use std::path::Path;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

#[derive(Clone, PartialEq, Eq, Debug)]
enum T {
    C(&'static str),
    F(&'static str, Vec<T>),
}

use T::{C, F};

impl fmt::Display for T {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            C(c) => write!(f, "{c}"),
            F(s, args) => {
                write!(f, "{s}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn f1(s: &'static str, a: T) -> T {
    F(s, vec![a])
}

fn f2(s: &'static str, a: T, b: T) -> T {
    F(s, vec![a, b])
}

impl T {
    fn size(&self) -> usize {
        match self {
            C(_) => 1,
            F(_, a) => 1 + a.iter().map(T::size).sum::<usize>(),
        }
    }

    fn positions(&self, at: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(at.clone());
        if let F(_, args) = self {
            for (i, a) in args.iter().enumerate() {
                at.push(i);
                a.positions(at, out);
                at.pop();
            }
        }
    }

    fn get(&self, path: &[usize]) -> &T {
        match (self, path.split_first()) {
            (_, None) => self,
            (F(_, a), Some((i, rest))) => a[*i].get(rest),
            _ => unreachable!(),
        }
    }

    fn set(&mut self, path: &[usize], with: T) {
        match path.split_first() {
            None => *self = with,
            Some((i, rest)) => match self {
                F(_, a) => a[*i].set(rest, with),
                C(_) => unreachable!(),
            },
        }
    }
}

/// Apply `steps` random rewrites at random positions. `rule` returns the
/// rewritten subterm or `None` when nothing applies.
fn rewrite_walk(rng: &mut StdRng, mut t: T, steps: usize, rule: &dyn Fn(&mut StdRng, &T) -> Option<T>) -> T {
    let mut done = 0;
    let mut tries = 0;
    while done < steps && tries < steps * 200 {
        tries += 1;
        let mut ps = Vec::new();
        t.positions(&mut Vec::new(), &mut ps);
        let p = ps.choose(rng).unwrap().clone();
        if let Some(n) = rule(rng, t.get(&p)) {
            if n.size() <= 15 {
                t.set(&p, n);
                done += 1;
            }
        }
    }
    t
}

struct Problem {
    name: String,
    clauses: Vec<(String, &'static str, String)>,
}

impl Problem {
    fn text(&self) -> String {
        let mut s = String::new();
        for (n, role, body) in &self.clauses {
            s.push_str(&format!("cnf({n}, {role}, {body}).\n"));
        }
        s
    }
}

fn axioms(list: &[(&str, &str)]) -> Vec<(String, &'static str, String)> {
    list.iter().map(|(n, b)| (n.to_string(), "axiom", b.to_string())).collect()
}

// ---- groups ----

fn grp_term(rng: &mut StdRng, depth: usize, pool: &[T]) -> T {
    if depth == 0 || rng.gen_bool(0.3) {
        if !pool.is_empty() && rng.gen_bool(0.5) {
            return pool.choose(rng).unwrap().clone();
        }
        return C(["a", "b", "c", "e"][rng.gen_range(0..4)]);
    }
    if rng.gen_bool(0.35) {
        f1("i", grp_term(rng, depth - 1, pool))
    } else {
        f2("m", grp_term(rng, depth - 1, pool), grp_term(rng, depth - 1, pool))
    }
}

fn grp_rule(rng: &mut StdRng, t: &T) -> Option<T> {
    let mut options: Vec<T> = Vec::new();
    match t {
        F("m", a) => {
            let (x, y) = (&a[0], &a[1]);
            if let F("m", b) = x {
                options.push(f2("m", b[0].clone(), f2("m", b[1].clone(), y.clone())));
            }
            if let F("m", b) = y {
                options.push(f2("m", f2("m", x.clone(), b[0].clone()), b[1].clone()));
            }
            if *x == C("e") {
                options.push(y.clone());
            }
            if *y == C("e") {
                options.push(x.clone());
            }
            if *x == f1("i", y.clone()) || *y == f1("i", x.clone()) {
                options.push(C("e"));
            }
        }
        F("i", a) => {
            match &a[0] {
                F("i", b) => options.push(b[0].clone()),
                F("m", b) => options.push(f2("m", f1("i", b[1].clone()), f1("i", b[0].clone()))),
                C("e") => options.push(C("e")),
                _ => {}
            }
        }
        _ => {}
    }
    // expansions
    if rng.gen_bool(0.25) {
        options.push(match rng.gen_range(0..3) {
            0 => f2("m", C("e"), t.clone()),
            1 => f2("m", t.clone(), C("e")),
            _ => f1("i", f1("i", t.clone())),
        });
    }
    options.choose(rng).cloned()
}

fn grp_problem(rng: &mut StdRng, n: usize, pool: &[T]) -> Problem {
    let (s, t, u) = if n <= 2 {
        let s = grp_term(rng, 1, pool);
        match n {
            1 => (s.clone(), C("e"), s),
            _ => (s.clone(), f1("i", s), C("e")),
        }
    } else {
        let steps = 1 + n / 7;
        loop {
            let s = grp_term(rng, n / 12, pool);
            let t = grp_term(rng, n / 12, pool);
            let prod = f2("m", s.clone(), t.clone());
            let u = rewrite_walk(rng, prod.clone(), steps, &grp_rule);
            if u != prod {
                break (s, t, u);
            }
        }
    };
    let mut clauses = axioms(&[
        ("closure", "p(X,Y,m(X,Y))"),
        ("left_identity", "p(e,X,X)"),
        ("left_inverse", "p(i(X),X,e)"),
        ("right_identity", "p(X,e,X)"),
        ("right_inverse", "p(X,i(X),e)"),
        ("assoc_1", "~p(X,Y,U) | ~p(Y,Z,V) | ~p(U,Z,W) | p(X,V,W)"),
        ("assoc_2", "~p(X,Y,U) | ~p(Y,Z,V) | ~p(X,V,W) | p(U,Z,W)"),
    ]);
    clauses.push(("goal".into(), "negated_conjecture", format!("~p({s},{t},{u})")));
    Problem { name: format!("grp_{n}"), clauses }
}

// ---- lattices ----

fn lat_term(rng: &mut StdRng, depth: usize, pool: &[T]) -> T {
    if depth == 0 || rng.gen_bool(0.25) {
        if !pool.is_empty() && rng.gen_bool(0.5) {
            return pool.choose(rng).unwrap().clone();
        }
        return C(["a", "b", "c", "d"][rng.gen_range(0..4)]);
    }
    let op = if rng.gen_bool(0.5) { "meet" } else { "join" };
    f2(op, lat_term(rng, depth - 1, pool), lat_term(rng, depth - 1, pool))
}

/// Whitman's decision procedure for lattice inequalities.
fn lat_le(s: &T, t: &T) -> bool {
    match (s, t) {
        (F("join", a), _) => lat_le(&a[0], t) && lat_le(&a[1], t),
        (_, F("meet", b)) => lat_le(s, &b[0]) && lat_le(s, &b[1]),
        (C(x), C(y)) => x == y,
        (F("meet", a), C(_)) => lat_le(&a[0], t) || lat_le(&a[1], t),
        (C(_), F("join", b)) => lat_le(s, &b[0]) || lat_le(s, &b[1]),
        (F("meet", a), F("join", b)) => lat_le(&a[0], t) || lat_le(&a[1], t) || lat_le(s, &b[0]) || lat_le(s, &b[1]),
        _ => unreachable!(),
    }
}

fn lat_problem(rng: &mut StdRng, n: usize, pool: &[T]) -> Problem {
    let depth = 1 + n / 6;
    let (s, t) = loop {
        let s = lat_term(rng, depth, pool);
        let t = lat_term(rng, depth, pool);
        let size = s.size() + t.size();
        if s != t && lat_le(&s, &t) && size >= 3 + n / 3 && size <= 6 + n / 2 {
            break (s, t);
        }
    };
    let mut clauses = axioms(&[
        ("reflexive", "le(X,X)"),
        ("transitive", "~le(X,Y) | ~le(Y,Z) | le(X,Z)"),
        ("meet_lower_1", "le(meet(X,Y),X)"),
        ("meet_lower_2", "le(meet(X,Y),Y)"),
        ("meet_greatest", "~le(Z,X) | ~le(Z,Y) | le(Z,meet(X,Y))"),
        ("join_upper_1", "le(X,join(X,Y))"),
        ("join_upper_2", "le(Y,join(X,Y))"),
        ("join_least", "~le(X,Z) | ~le(Y,Z) | le(join(X,Y),Z)"),
    ]);
    clauses.push(("goal".into(), "negated_conjecture", format!("~le({s},{t})")));
    Problem { name: format!("lat_{n}"), clauses }
}

// ---- relation algebra ----

fn rel_term(rng: &mut StdRng, depth: usize, pool: &[T]) -> T {
    if depth == 0 || rng.gen_bool(0.3) {
        if !pool.is_empty() && rng.gen_bool(0.5) {
            return pool.choose(rng).unwrap().clone();
        }
        return C(["r", "s", "t"][rng.gen_range(0..3)]);
    }
    match rng.gen_range(0..5) {
        0 => f1("conv", rel_term(rng, depth - 1, pool)),
        1 | 2 => f2("comp", rel_term(rng, depth - 1, pool), rel_term(rng, depth - 1, pool)),
        3 => f2("union", rel_term(rng, depth - 1, pool), rel_term(rng, depth - 1, pool)),
        _ => f2("inter", rel_term(rng, depth - 1, pool), rel_term(rng, depth - 1, pool)),
    }
}

/// Rewrites `t` to a superset of itself.
fn rel_rule(rng: &mut StdRng, t: &T) -> Option<T> {
    let mut options: Vec<T> = Vec::new();
    match t {
        F("conv", a) => match &a[0] {
            F("conv", b) => options.push(b[0].clone()),
            F("comp", b) => options.push(f2("comp", f1("conv", b[1].clone()), f1("conv", b[0].clone()))),
            F("union", b) => options.push(f2("union", f1("conv", b[0].clone()), f1("conv", b[1].clone()))),
            F("inter", b) => options.push(f2("inter", f1("conv", b[0].clone()), f1("conv", b[1].clone()))),
            _ => {}
        },
        F("comp", a) => {
            let (x, y) = (&a[0], &a[1]);
            if let F("comp", b) = x {
                options.push(f2("comp", b[0].clone(), f2("comp", b[1].clone(), y.clone())));
            }
            if let F("comp", b) = y {
                options.push(f2("comp", f2("comp", x.clone(), b[0].clone()), b[1].clone()));
            }
            if let F("union", b) = y {
                options.push(f2("union", f2("comp", x.clone(), b[0].clone()), f2("comp", x.clone(), b[1].clone())));
            }
            if let F("union", b) = x {
                options.push(f2("union", f2("comp", b[0].clone(), y.clone()), f2("comp", b[1].clone(), y.clone())));
            }
            if let F("inter", b) = y {
                options.push(f2("inter", f2("comp", x.clone(), b[0].clone()), f2("comp", x.clone(), b[1].clone())));
            }
        }
        F("union", a) => options.push(f2("union", a[1].clone(), a[0].clone())),
        F("inter", a) => {
            options.push(f2("inter", a[1].clone(), a[0].clone()));
            options.push(a[rng.gen_range(0..2)].clone());
        }
        _ => {}
    }
    if rng.gen_bool(0.15) {
        options.push(f2("union", t.clone(), C(["r", "s", "t"][rng.gen_range(0..3)])));
    }
    options.choose(rng).cloned()
}

fn rel_problem(rng: &mut StdRng, n: usize, pool: &[T]) -> Problem {
    let steps = 1 + n / 7;
    let (s, t) = loop {
        let s = rel_term(rng, 1 + n / 8, pool);
        if s.size() < 3 {
            continue;
        }
        let t = rewrite_walk(rng, s.clone(), steps, &rel_rule);
        if t != s {
            break (s, t);
        }
    };
    let mut clauses = axioms(&[
        ("comp_intro", "~in(X,Z,R) | ~in(Z,Y,S) | in(X,Y,comp(R,S))"),
        ("comp_elim_1", "~in(X,Y,comp(R,S)) | in(X,mid(X,Y,R,S),R)"),
        ("comp_elim_2", "~in(X,Y,comp(R,S)) | in(mid(X,Y,R,S),Y,S)"),
        ("conv_intro", "~in(Y,X,R) | in(X,Y,conv(R))"),
        ("conv_elim", "~in(X,Y,conv(R)) | in(Y,X,R)"),
        ("union_intro_1", "~in(X,Y,R) | in(X,Y,union(R,S))"),
        ("union_intro_2", "~in(X,Y,S) | in(X,Y,union(R,S))"),
        ("union_elim", "~in(X,Y,union(R,S)) | in(X,Y,R) | in(X,Y,S)"),
        ("inter_intro", "~in(X,Y,R) | ~in(X,Y,S) | in(X,Y,inter(R,S))"),
        ("inter_elim_1", "~in(X,Y,inter(R,S)) | in(X,Y,R)"),
        ("inter_elim_2", "~in(X,Y,inter(R,S)) | in(X,Y,S)"),
    ]);
    clauses.push(("goal_1".into(), "negated_conjecture", format!("in(x0,y0,{s})")));
    clauses.push(("goal_2".into(), "negated_conjecture", format!("~in(x0,y0,{t})")));
    Problem { name: format!("rel_{n}"), clauses }
}

const SEED: u64 = 0x5eed;
/// Shared subterms per family, so that related problems share lemmas.
const POOL: usize = 4;

fn main() -> std::io::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "corpus".into());
    let out = Path::new(&out);
    let mut problems = Vec::new();
    let mut rng = StdRng::seed_from_u64(SEED);
    let pool: Vec<T> = (0..POOL).map(|_| grp_term(&mut rng, 1, &[])).collect();
    problems.extend((1..=20).map(|n| grp_problem(&mut rng, n, &pool)));
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let pool: Vec<T> = (0..POOL).map(|_| lat_term(&mut rng, 1, &[])).collect();
    problems.extend((1..=20).map(|n| lat_problem(&mut rng, n, &pool)));
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    let pool: Vec<T> = (0..POOL).map(|_| rel_term(&mut rng, 1, &[])).collect();
    problems.extend((1..=20).map(|n| rel_problem(&mut rng, n, &pool)));
    for p in &problems {
        let dir = out.join(&p.name);
        std::fs::create_dir_all(&dir)?;
        std::fs::write(dir.join("problem.p"), p.text())?;
    }
    println!("wrote {} problems to {}", problems.len(), out.display());
    Ok(())
}
