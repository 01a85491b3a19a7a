//! Clause selection strategies.
//!
//! A strategy is a list of clause evaluation functions (CEFs), each a weight
//! function paired with a priority function, consulted in weighted
//! round-robin. The text form follows E's heuristic syntax:
//!
//! ```text
//! [--uwl] [--no-remove] [--ska] [--paramod] [--mode=static|dyn|dyndec]
//! [--delta=D] [--alpha=A] [--beta=B] -H(w1*WF1(PF[,args]),...)
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::watchlist::{GuidanceConfig, RelevanceMode, RelevanceParams};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WeightFunction {
    /// Symbol counting with separate function and variable weights; positive
    /// literals are multiplied by `pos_mult`.
    Clauseweight { fweight: f64, vweight: f64, pos_mult: f64 },
    /// Generation order.
    Fifo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PriorityFunction {
    ConstPrio,
    PreferWatchlist,
    DeferWatchlist,
    PreferWatchlistRelevant,
    DeferWatchlistRelevant,
}

impl PriorityFunction {
    pub fn name(self) -> &'static str {
        match self {
            PriorityFunction::ConstPrio => "ConstPrio",
            PriorityFunction::PreferWatchlist => "PreferWatchlist",
            PriorityFunction::DeferWatchlist => "DeferWatchlist",
            PriorityFunction::PreferWatchlistRelevant => "PreferWatchlistRelevant",
            PriorityFunction::DeferWatchlistRelevant => "DeferWatchlistRelevant",
        }
    }
}

impl FromStr for PriorityFunction {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        Ok(match s {
            "ConstPrio" => PriorityFunction::ConstPrio,
            "PreferWatchlist" => PriorityFunction::PreferWatchlist,
            "DeferWatchlist" => PriorityFunction::DeferWatchlist,
            "PreferWatchlistRelevant" => PriorityFunction::PreferWatchlistRelevant,
            "DeferWatchlistRelevant" => PriorityFunction::DeferWatchlistRelevant,
            _ => return Err(()),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cef {
    pub frequency: u32,
    pub weight: WeightFunction,
    pub priority: PriorityFunction,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StrategyFlags {
    /// Watchlist-matching clauses go first in every queue.
    pub uwl: bool,
    /// Matched watchlist clauses stay matchable.
    pub no_remove: bool,
    /// Skolems of equal arity are interchangeable when matching watchlists.
    pub ska: bool,
    /// Enable paramodulation and equality resolution.
    pub paramod: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Strategy {
    pub cefs: Vec<Cef>,
    pub flags: StrategyFlags,
    pub mode: RelevanceMode,
    pub relevance: RelevanceParams,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StrategyError {
    #[error("at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown weight function `{0}`")]
    UnknownWeightFunction(String),
    #[error("unknown priority function `{0}`")]
    UnknownPriorityFunction(String),
    #[error("invalid strategy: {0}")]
    Invalid(String),
}

/// Variants derived from a baseline strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrategyMode {
    Pref,
    Const,
    Uwl,
    Ska,
    Dyn,
    DynDec,
    Evo,
}

impl FromStr for StrategyMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "pref" => StrategyMode::Pref,
            "const" => StrategyMode::Const,
            "uwl" => StrategyMode::Uwl,
            "ska" => StrategyMode::Ska,
            "dyn" => StrategyMode::Dyn,
            "dyndec" => StrategyMode::DynDec,
            "evo" => StrategyMode::Evo,
            _ => return Err(format!("unknown strategy mode `{s}`")),
        })
    }
}

impl fmt::Display for StrategyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrategyMode::Pref => "pref",
            StrategyMode::Const => "const",
            StrategyMode::Uwl => "uwl",
            StrategyMode::Ska => "ska",
            StrategyMode::Dyn => "dyn",
            StrategyMode::DynDec => "dyndec",
            StrategyMode::Evo => "evo",
        })
    }
}

impl Strategy {
    pub fn new(cefs: Vec<Cef>) -> Strategy {
        Strategy { cefs, flags: StrategyFlags::default(), mode: RelevanceMode::Static, relevance: RelevanceParams::default() }
    }

    pub fn validate(&self) -> Result<(), StrategyError> {
        if self.cefs.is_empty() {
            return Err(StrategyError::Invalid("at least one CEF is required".into()));
        }
        if self.cefs.iter().any(|c| c.frequency == 0) {
            return Err(StrategyError::Invalid("CEF frequencies must be positive".into()));
        }
        let r = self.relevance;
        if !(r.delta < 1.0) || r.delta < 0.0 {
            return Err(StrategyError::Invalid(format!("delta must be in [0, 1), got {}", r.delta)));
        }
        if !(r.alpha >= 0.0 && r.beta >= 0.0) {
            return Err(StrategyError::Invalid("alpha and beta must be non-negative".into()));
        }
        Ok(())
    }

    /// Guidance settings implied by the strategy.
    pub fn guidance_config(&self) -> GuidanceConfig {
        GuidanceConfig {
            mode: self.mode,
            no_remove: self.flags.no_remove,
            ska: self.flags.ska,
            params: self.relevance,
            record_log: false,
        }
    }

    /// Whether any priority function looks at the watchlists.
    pub fn uses_watchlist(&self) -> bool {
        self.flags.uwl || self.cefs.iter().any(|c| c.priority != PriorityFunction::ConstPrio)
    }

    fn with_priority(&self, p: PriorityFunction) -> Strategy {
        let mut s = self.clone();
        for c in &mut s.cefs {
            c.priority = p;
        }
        s
    }

    /// Derive one of the watchlist variants of a baseline strategy.
    pub fn apply_mode(&self, mode: StrategyMode) -> Strategy {
        match mode {
            StrategyMode::Pref => self.with_priority(PriorityFunction::PreferWatchlist),
            StrategyMode::Const => self.with_priority(PriorityFunction::ConstPrio),
            StrategyMode::Uwl => {
                let mut s = self.clone();
                s.flags.uwl = true;
                s
            }
            StrategyMode::Ska => {
                let mut s = self.with_priority(PriorityFunction::PreferWatchlist);
                s.flags.ska = true;
                s
            }
            StrategyMode::Dyn => {
                let mut s = self.with_priority(PriorityFunction::PreferWatchlistRelevant);
                s.mode = RelevanceMode::Dyn;
                s
            }
            StrategyMode::DynDec => {
                let mut s = self.with_priority(PriorityFunction::PreferWatchlistRelevant);
                s.mode = RelevanceMode::DynDec;
                s
            }
            StrategyMode::Evo => {
                let mut s = builtin("evo").expect("evo is built in");
                s.flags = self.flags;
                s
            }
        }
    }
}

/// Named strategies.
///
/// `evo` stands in for E's evolved watchlist heuristic, whose parameters are
/// not published: four CEFs, two of them preferring watchlist matches.
pub fn builtin(name: &str) -> Option<Strategy> {
    let text = match name {
        "fifo" => "-H(1*FIFOWeight(ConstPrio))",
        "weight" => "-H(1*Clauseweight(ConstPrio,1,1,1))",
        "baseline" => "-H(4*Clauseweight(ConstPrio,2,1,1),1*FIFOWeight(ConstPrio))",
        "watchlist" => "-H(1*Clauseweight(PreferWatchlist,1,1,1))",
        "interleaved" => "-H(10*Clauseweight(PreferWatchlist,1,1,1),1*FIFOWeight(ConstPrio))",
        "evo" => {
            "-H(8*Clauseweight(PreferWatchlist,1,1,1),8*Clauseweight(PreferWatchlist,2,1,1),\
             1*FIFOWeight(ConstPrio),1*Clauseweight(ConstPrio,3,1,1))"
        }
        _ => return None,
    };
    Some(text.parse().expect("built-in strategies parse"))
}

pub const BUILTIN_NAMES: &[&str] = &["fifo", "weight", "baseline", "watchlist", "interleaved", "evo"];

/// A built-in name, optionally suffixed with `+mode` (e.g. `baseline+dyn`),
/// or a strategy in text form.
pub fn resolve_strategy(spec: &str) -> Result<Strategy, StrategyError> {
    let (base, modes) = match spec.split_once('+') {
        Some((b, m)) if builtin(b.trim()).is_some() => (b.trim(), Some(m)),
        _ => (spec.trim(), None),
    };
    let mut s = match builtin(base) {
        Some(s) => s,
        None => return parse_strategy(spec),
    };
    for m in modes.into_iter().flat_map(|m| m.split('+')) {
        let mode: StrategyMode = m.trim().parse().map_err(|e: String| StrategyError::Invalid(e))?;
        s = s.apply_mode(mode);
    }
    Ok(s)
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), StrategyError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`")))
        }
    }

    fn error(&self, message: impl Into<String>) -> StrategyError {
        StrategyError::Syntax { position: self.pos, message: message.into() }
    }

    fn ident(&mut self) -> Result<&'a str, StrategyError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let n = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        if n == 0 {
            return Err(self.error("expected an identifier"));
        }
        self.pos += n;
        Ok(&rest[..n])
    }

    fn number(&mut self) -> Result<f64, StrategyError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let n = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E'))
            .unwrap_or(rest.len());
        let v = rest[..n].parse::<f64>().map_err(|_| self.error("expected a number"))?;
        self.pos += n;
        Ok(v)
    }
}

fn parse_cef(cur: &mut Cursor<'_>) -> Result<Cef, StrategyError> {
    let freq_at = {
        cur.skip_ws();
        cur.pos
    };
    let freq = cur.number()?;
    if freq < 1.0 || freq.fract() != 0.0 {
        return Err(StrategyError::Syntax { position: freq_at, message: "frequency must be a positive integer".into() });
    }
    cur.expect("*")?;
    let wf = cur.ident()?;
    cur.expect("(")?;
    let pf_name = cur.ident()?;
    let priority = match pf_name.parse::<PriorityFunction>() {
        Ok(p) => p,
        Err(()) if pf_name == "DeferSoS" => {
            log::warn!("priority function DeferSoS is not supported; using ConstPrio");
            PriorityFunction::ConstPrio
        }
        Err(()) => return Err(StrategyError::UnknownPriorityFunction(pf_name.to_string())),
    };
    let mut args = Vec::new();
    while cur.eat(",") {
        args.push(cur.number()?);
    }
    cur.expect(")")?;
    let weight = match wf {
        "Clauseweight" => match args[..] {
            [fweight, vweight, pos_mult] => WeightFunction::Clauseweight { fweight, vweight, pos_mult },
            _ => return Err(StrategyError::Invalid("Clauseweight takes three numeric arguments".into())),
        },
        "FIFOWeight" => {
            if !args.is_empty() {
                return Err(StrategyError::Invalid("FIFOWeight takes no numeric arguments".into()));
            }
            WeightFunction::Fifo
        }
        other => return Err(StrategyError::UnknownWeightFunction(other.to_string())),
    };
    Ok(Cef { frequency: freq as u32, weight, priority })
}

pub fn parse_strategy(text: &str) -> Result<Strategy, StrategyError> {
    let mut s = Strategy::new(Vec::new());
    let mut cur = Cursor { text, pos: 0 };
    let mut seen_heuristic = false;
    loop {
        cur.skip_ws();
        if cur.pos == text.len() {
            break;
        }
        if cur.eat("--") {
            let at = cur.pos;
            let name = cur.ident()?.replace('_', "-");
            let name = if name == "no" && cur.eat("-remove") { "no-remove".to_string() } else { name };
            let value = if cur.eat("=") {
                cur.skip_ws();
                let rest = &text[cur.pos..];
                let n = rest.find(char::is_whitespace).unwrap_or(rest.len());
                cur.pos += n;
                Some(&rest[..n])
            } else {
                None
            };
            let num = |v: Option<&str>| -> Result<f64, StrategyError> {
                v.and_then(|v| v.parse().ok())
                    .ok_or(StrategyError::Syntax { position: at, message: format!("--{name} needs a number") })
            };
            match name.as_str() {
                "uwl" => s.flags.uwl = true,
                "no-remove" => s.flags.no_remove = true,
                "ska" => s.flags.ska = true,
                "paramod" => s.flags.paramod = true,
                "mode" => {
                    s.mode = value
                        .unwrap_or("")
                        .parse()
                        .map_err(|m: String| StrategyError::Syntax { position: at, message: m })?
                }
                "delta" => s.relevance.delta = num(value)?,
                "alpha" => s.relevance.alpha = num(value)?,
                "beta" => s.relevance.beta = num(value)?,
                other => return Err(StrategyError::Syntax { position: at, message: format!("unknown flag --{other}") }),
            }
        } else if cur.eat("-t") {
            let ord = cur.ident()?;
            log::warn!("term ordering -t{ord} is ignored");
        } else if cur.eat("-H") {
            cur.expect("(")?;
            loop {
                s.cefs.push(parse_cef(&mut cur)?);
                if !cur.eat(",") {
                    break;
                }
            }
            cur.expect(")")?;
            seen_heuristic = true;
        } else {
            return Err(cur.error("expected a flag or -H(...)"));
        }
    }
    if !seen_heuristic {
        return Err(cur.error("missing -H(...)"));
    }
    s.validate()?;
    Ok(s)
}

impl FromStr for Strategy {
    type Err = StrategyError;
    fn from_str(s: &str) -> Result<Self, StrategyError> {
        parse_strategy(s)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fl = self.flags;
        for (on, name) in [(fl.uwl, "--uwl "), (fl.no_remove, "--no-remove "), (fl.ska, "--ska "), (fl.paramod, "--paramod ")] {
            if on {
                f.write_str(name)?;
            }
        }
        if self.mode != RelevanceMode::Static {
            write!(f, "--mode={} ", self.mode)?;
        }
        let d = RelevanceParams::default();
        if self.relevance.delta != d.delta {
            write!(f, "--delta={} ", self.relevance.delta)?;
        }
        if self.relevance.alpha != d.alpha {
            write!(f, "--alpha={} ", self.relevance.alpha)?;
        }
        if self.relevance.beta != d.beta {
            write!(f, "--beta={} ", self.relevance.beta)?;
        }
        f.write_str("-H(")?;
        for (i, c) in self.cefs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match c.weight {
                WeightFunction::Clauseweight { fweight, vweight, pos_mult } => {
                    write!(f, "{}*Clauseweight({},{fweight},{vweight},{pos_mult})", c.frequency, c.priority.name())?
                }
                WeightFunction::Fifo => write!(f, "{}*FIFOWeight({})", c.frequency, c.priority.name())?,
            }
        }
        f.write_str(")")
    }
}
