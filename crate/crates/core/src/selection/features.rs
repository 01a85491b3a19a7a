use std::collections::BTreeMap;

use crate::fol::{Clause, Term};

pub const VAR_TOKEN: &str = "VAR";

/// Multiset of string features.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FeatureBag(pub BTreeMap<String, u32>);

impl FeatureBag {
    pub fn new() -> FeatureBag {
        FeatureBag::default()
    }

    pub fn add(&mut self, feature: impl Into<String>) {
        *self.0.entry(feature.into()).or_insert(0) += 1;
    }

    pub fn count(&self, feature: &str) -> u32 {
        self.0.get(feature).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn extend(&mut self, other: &FeatureBag) {
        for (k, v) in other.iter() {
            *self.0.entry(k.to_string()).or_insert(0) += v;
        }
    }
}

impl<S: Into<String>> FromIterator<S> for FeatureBag {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        let mut b = FeatureBag::new();
        for f in iter {
            b.add(f);
        }
        b
    }
}

/// Length of the top-down walks recorded as features.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WalkLength {
    /// Parent and child symbol.
    #[default]
    Pairs,
    /// Grandparent, parent and child symbol.
    Triples,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FeatureConfig {
    pub walks: WalkLength,
}

fn node_name(t: &Term) -> String {
    match t {
        Term::Var(_) => VAR_TOKEN.to_string(),
        Term::App(s, _) => s.name().to_string(),
    }
}

/// Term with variables as `VAR` and skolems as `SK<arity>`.
fn skeleton(t: &Term) -> String {
    match t {
        Term::Var(_) => VAR_TOKEN.to_string(),
        Term::App(s, args) => {
            let head = if s.is_skolem() { format!("SK{}", args.len()) } else { s.name().to_string() };
            if args.is_empty() {
                head
            } else {
                let inner: Vec<String> = args.iter().map(skeleton).collect();
                format!("{head}({})", inner.join(","))
            }
        }
    }
}

fn walk(t: &Term, path: &mut Vec<String>, cfg: FeatureConfig, bag: &mut FeatureBag) -> String {
    let name = node_name(t);
    if let Some(parent) = path.last() {
        bag.add(format!("w:{parent}>{name}"));
        if cfg.walks == WalkLength::Triples && path.len() >= 2 {
            bag.add(format!("w:{}>{parent}>{name}", path[path.len() - 2]));
        }
    }
    let sk = match t {
        Term::Var(_) => VAR_TOKEN.to_string(),
        Term::App(s, args) => {
            bag.add(format!("s:{}", s.name()));
            path.push(name);
            for a in args.iter() {
                walk(a, path, cfg, bag);
            }
            path.pop();
            skeleton(t)
        }
    };
    bag.add(format!("t:{sk}"));
    sk
}

/// Symbols (`s:`), top-down walks (`w:`) and subterm skeletons (`t:`) of
/// every atom of `clauses`.
pub fn extract_features_with(clauses: &[Clause], cfg: FeatureConfig) -> FeatureBag {
    let mut bag = FeatureBag::new();
    for c in clauses {
        for l in &c.literals {
            walk(&l.atom, &mut Vec::new(), cfg, &mut bag);
        }
    }
    bag
}

pub fn extract_features(clauses: &[Clause]) -> FeatureBag {
    extract_features_with(clauses, FeatureConfig::default())
}
