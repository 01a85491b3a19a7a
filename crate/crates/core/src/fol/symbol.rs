//! Process-wide symbol interning.
//!
//! Every function and predicate name is interned once and referred to by a
//! [`Symbol`] handle afterwards. Skolem-ness is decided at interning time from
//! the configured name prefixes and stored in the handle itself, so the
//! matching code never has to touch the table.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

const SKOLEM_BIT: u32 = 1 << 31;

/// Interned function or predicate symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u32);

#[derive(Default)]
struct Table {
    names: Vec<Arc<str>>,
    ids: HashMap<Arc<str>, u32>,
}

fn table() -> &'static RwLock<Table> {
    static TABLE: OnceLock<RwLock<Table>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

static SKOLEM_PREFIXES: OnceLock<Vec<String>> = OnceLock::new();

/// Prefixes used when no other configuration was installed.
pub const DEFAULT_SKOLEM_PREFIXES: &[&str] = &["sk"];

fn skolem_prefixes() -> &'static [String] {
    SKOLEM_PREFIXES.get_or_init(|| DEFAULT_SKOLEM_PREFIXES.iter().map(|s| s.to_string()).collect())
}

/// Install the name prefixes that identify skolem functions.
///
/// Must happen before the first symbol is interned; afterwards the
/// configuration is frozen and this returns `false`.
pub fn set_skolem_prefixes<S: AsRef<str>>(prefixes: &[S]) -> bool {
    SKOLEM_PREFIXES
        .set(prefixes.iter().map(|p| p.as_ref().to_string()).collect())
        .is_ok()
}

fn looks_like_skolem(name: &str) -> bool {
    skolem_prefixes().iter().any(|p| {
        name.len() > p.len() && name.starts_with(p.as_str())
    })
}

impl Symbol {
    pub fn intern(name: &str) -> Symbol {
        let skolem = if looks_like_skolem(name) { SKOLEM_BIT } else { 0 };
        if let Some(&id) = table().read().unwrap().ids.get(name) {
            return Symbol(id | skolem);
        }
        let mut t = table().write().unwrap();
        if let Some(&id) = t.ids.get(name) {
            return Symbol(id | skolem);
        }
        let id = t.names.len() as u32;
        assert!(id < SKOLEM_BIT, "symbol table overflow");
        let name: Arc<str> = Arc::from(name);
        t.names.push(name.clone());
        t.ids.insert(name, id);
        Symbol(id | skolem)
    }

    /// The equality predicate.
    pub fn equality() -> Symbol {
        static EQ: OnceLock<Symbol> = OnceLock::new();
        *EQ.get_or_init(|| Symbol::intern("="))
    }

    pub fn name(self) -> Arc<str> {
        table().read().unwrap().names[self.index()].clone()
    }

    /// Dense index into the symbol table (skolem flag stripped).
    pub fn index(self) -> usize {
        (self.0 & !SKOLEM_BIT) as usize
    }

    /// Whether the name carries one of the configured skolem prefixes.
    /// Only meaningful for function symbols.
    pub fn is_skolem(self) -> bool {
        self.0 & SKOLEM_BIT != 0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        if needs_quotes(&name) {
            write!(f, "'{}'", name.replace('\\', "\\\\").replace('\'', "\\'"))
        } else {
            f.write_str(&name)
        }
    }
}

fn needs_quotes(name: &str) -> bool {
    if name == "=" {
        return false;
    }
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => !chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        Some(c) if c.is_ascii_digit() => !name.chars().all(|c| c.is_ascii_digit()),
        _ => true,
    }
}
