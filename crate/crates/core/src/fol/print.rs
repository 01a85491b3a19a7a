use super::{Clause, Origin};

fn quote_name(name: &str) -> String {
    let plain = name.chars().next().is_some_and(|c| c.is_ascii_lowercase())
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    let numeric = !name.is_empty() && name.chars().all(|c| c.is_ascii_digit());
    if plain || numeric {
        name.to_string()
    } else {
        format!("'{}'", name.replace('\\', "\\\\").replace('\'', "\\'"))
    }
}

fn role(c: &Clause) -> &'static str {
    match c.origin {
        Origin::Axiom => "axiom",
        Origin::NegatedConjecture => "negated_conjecture",
        Origin::Derived => "plain",
    }
}

/// `cnf(<name>, <role>, <literals>).` in the syntax [`parse_cnf`](super::parse_cnf) reads.
pub fn print_clause(c: &Clause) -> String {
    format!("cnf({}, {}, {}).", quote_name(&c.display_name()), role(c), c)
}

/// Like [`print_clause`], with an `inference(rule, [], [parents])` annotation
/// on derived clauses. `parent_name` maps parent ids to printed names.
pub fn print_derivation_step(c: &Clause, parent_name: impl Fn(&super::ClauseId) -> String) -> String {
    if c.parents.is_empty() {
        return print_clause(c);
    }
    let parents: Vec<String> = c.parents.iter().map(|p| quote_name(&parent_name(p))).collect();
    format!(
        "cnf({}, {}, {}, inference({}, [], [{}])).",
        quote_name(&c.display_name()),
        role(c),
        c,
        c.inference.label(),
        parents.join(", ")
    )
}
