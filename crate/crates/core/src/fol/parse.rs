//! Reader for the CNF fragment of TPTP.
//!
//! Accepts `cnf(name, role, clause).` lines with an optional source
//! annotation and useful-info list, which are skipped. `%` and `/* */`
//! comments are ignored.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use thiserror::Error;

use super::{Clause, ClauseId, Literal, Origin, Problem, Symbol, Term, Var};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: symbol `{symbol}` used with arity {found}, previously {expected}")]
    ArityClash { symbol: String, expected: usize, found: usize, line: usize, column: usize },
    #[error("{line}:{column}: duplicate clause name `{name}`")]
    DuplicateName { name: String, line: usize, column: usize },
    #[error("problem contains no clauses")]
    Empty,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Lower(String),
    Upper(String),
    Quoted(String),
    Dollar(String),
    Number(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Pipe,
    Tilde,
    Eq,
    Neq,
    Colon,
    Other(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if c == '%' {
            while i < chars.len() && chars[i] != '\n' {
                bump!();
            }
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'*') {
            bump!();
            bump!();
            while i < chars.len() && !(chars[i] == '*' && chars.get(i + 1) == Some(&'/')) {
                bump!();
            }
            if i >= chars.len() {
                return Err(ParseError::Syntax { line: l0, column: c0, message: "unterminated comment".into() });
            }
            bump!();
            bump!();
            continue;
        }
        let word = |i: &mut usize, col: &mut usize| {
            let s = *i;
            while *i < chars.len() && (chars[*i].is_alphanumeric() || chars[*i] == '_') {
                *i += 1;
                *col += 1;
            }
            chars[s..*i].iter().collect::<String>()
        };
        let tok = if c.is_ascii_lowercase() {
            Tok::Lower(word(&mut i, &mut col))
        } else if c.is_ascii_uppercase() || c == '_' {
            Tok::Upper(word(&mut i, &mut col))
        } else if c.is_ascii_digit() {
            Tok::Number(word(&mut i, &mut col))
        } else if c == '$' {
            bump!();
            Tok::Dollar(word(&mut i, &mut col))
        } else if c == '\'' || c == '"' {
            let quote = c;
            bump!();
            let mut s = String::new();
            loop {
                if i >= chars.len() {
                    return Err(ParseError::Syntax { line: l0, column: c0, message: "unterminated quoted name".into() });
                }
                let d = chars[i];
                bump!();
                if d == quote {
                    break;
                }
                if d == '\\' && i < chars.len() {
                    s.push(chars[i]);
                    bump!();
                } else {
                    s.push(d);
                }
            }
            if quote == '"' {
                // distinct objects are kept verbatim, quotes included
                Tok::Quoted(format!("\"{s}\""))
            } else {
                Tok::Quoted(s)
            }
        } else {
            let t = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '|' => Tok::Pipe,
                '~' => Tok::Tilde,
                '=' => Tok::Eq,
                ':' => Tok::Colon,
                '!' if chars.get(i + 1) == Some(&'=') => {
                    bump!();
                    Tok::Neq
                }
                other => Tok::Other(other),
            };
            bump!();
            t
        };
        out.push(Spanned { tok, line: l0, column: c0 });
    }
    out.push(Spanned { tok: Tok::Eof, line, column: col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    arities: HashMap<Symbol, usize>,
    vars: HashMap<String, u32>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let s = &self.toks[self.pos];
        (s.line, s.column)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let (line, column) = self.here();
        Err(ParseError::Syntax { line, column, message: message.into() })
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn back(&mut self, t: &Tok) {
        if *t != Tok::Eof {
            self.pos -= 1;
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            self.err(format!("expected {what}, found {}", describe(self.peek())))
        }
    }

    fn check_arity(&mut self, sym: Symbol, arity: usize, at: (usize, usize)) -> Result<(), ParseError> {
        match self.arities.get(&sym) {
            Some(&expected) if expected != arity => Err(ParseError::ArityClash {
                symbol: sym.name().to_string(),
                expected,
                found: arity,
                line: at.0,
                column: at.1,
            }),
            Some(_) => Ok(()),
            None => {
                self.arities.insert(sym, arity);
                Ok(())
            }
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        match self.next() {
            Tok::Lower(s) | Tok::Quoted(s) | Tok::Number(s) => Ok(s),
            t => {
                self.back(&t);
                self.err(format!("expected a name, found {}", describe(&t)))
            }
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let at = self.here();
        match self.next() {
            Tok::Upper(v) => {
                let next = self.vars.len() as u32;
                Ok(Term::Var(Var(*self.vars.entry(v).or_insert(next))))
            }
            Tok::Lower(s) | Tok::Quoted(s) | Tok::Number(s) => {
                let sym = Symbol::intern(&s);
                let mut args = Vec::new();
                if *self.peek() == Tok::LParen {
                    self.next();
                    loop {
                        args.push(self.term()?);
                        match self.next() {
                            Tok::Comma => continue,
                            Tok::RParen => break,
                            t => {
                                self.back(&t);
                                return self.err(format!("expected `,` or `)`, found {}", describe(&t)));
                            }
                        }
                    }
                }
                self.check_arity(sym, args.len(), at)?;
                Ok(Term::app(sym, args))
            }
            t => {
                self.back(&t);
                self.err(format!("expected a term, found {}", describe(&t)))
            }
        }
    }

    /// One literal; `None` for `$false`.
    fn literal(&mut self) -> Result<Option<Literal>, ParseError> {
        let mut positive = true;
        if *self.peek() == Tok::Tilde {
            self.next();
            positive = false;
        }
        if let Tok::Dollar(d) = self.peek().clone() {
            if d == "false" && positive {
                self.next();
                return Ok(None);
            }
            return self.err(format!("unsupported `${d}`"));
        }
        let at = self.here();
        let lhs = self.term()?;
        let eq = match self.peek() {
            Tok::Eq => Some(true),
            Tok::Neq => Some(false),
            _ => None,
        };
        if let Some(sign) = eq {
            self.next();
            let rhs = self.term()?;
            return Ok(Some(Literal::new(positive == sign, Term::app(Symbol::equality(), vec![lhs, rhs]))));
        }
        if lhs.is_var() {
            let (line, column) = at;
            return Err(ParseError::Syntax { line, column, message: "variable used as an atom".into() });
        }
        Ok(Some(Literal::new(positive, lhs)))
    }

    fn disjunction(&mut self) -> Result<Vec<Literal>, ParseError> {
        let mut lits = Vec::new();
        loop {
            if let Some(l) = self.literal()? {
                lits.push(l);
            }
            if *self.peek() == Tok::Pipe {
                self.next();
            } else {
                return Ok(lits);
            }
        }
    }

    fn formula(&mut self) -> Result<Vec<Literal>, ParseError> {
        // a parenthesised disjunction, unless the parenthesis opens nothing but a term
        if *self.peek() == Tok::LParen {
            self.next();
            let lits = self.disjunction()?;
            self.expect(Tok::RParen, "`)`")?;
            Ok(lits)
        } else {
            self.disjunction()
        }
    }

    /// Skip a general TPTP term (annotations), balancing brackets.
    fn skip_general(&mut self) -> Result<(), ParseError> {
        let mut depth = 0usize;
        loop {
            match self.peek() {
                Tok::Eof => return self.err("unexpected end of input in annotation"),
                Tok::LParen | Tok::LBracket => depth += 1,
                Tok::RParen | Tok::RBracket => {
                    if depth == 0 {
                        return Ok(());
                    }
                    depth -= 1;
                }
                Tok::Comma if depth == 0 => return Ok(()),
                _ => {}
            }
            self.next();
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Lower(s) | Tok::Upper(s) | Tok::Number(s) => format!("`{s}`"),
        Tok::Quoted(s) => format!("'{s}'"),
        Tok::Dollar(s) => format!("`${s}`"),
        Tok::Eof => "end of input".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::LBracket => "`[`".into(),
        Tok::RBracket => "`]`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Dot => "`.`".into(),
        Tok::Pipe => "`|`".into(),
        Tok::Tilde => "`~`".into(),
        Tok::Eq => "`=`".into(),
        Tok::Neq => "`!=`".into(),
        Tok::Colon => "`:`".into(),
        Tok::Other(c) => format!("`{c}`"),
    }
}

fn role_origin(role: &str) -> Option<Origin> {
    match role {
        "negated_conjecture" => Some(Origin::NegatedConjecture),
        "axiom" | "hypothesis" | "plain" | "lemma" | "theorem" | "definition" | "assumption"
        | "unknown" => Some(Origin::Axiom),
        _ => None,
    }
}

/// Parse CNF clauses. Clause ids are assigned in file order starting at 0.
/// An empty input yields an empty list.
pub fn parse_clauses(text: &str) -> Result<Vec<Clause>, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, arities: HashMap::new(), vars: HashMap::new() };
    let mut out: Vec<Clause> = Vec::new();
    let mut names: HashSet<String> = HashSet::new();
    while *p.peek() != Tok::Eof {
        match p.next() {
            Tok::Lower(kw) if kw == "cnf" => {}
            Tok::Lower(kw) if kw == "include" => {
                p.pos -= 1;
                return p.err("include directives are not supported");
            }
            t => {
                p.back(&t);
                return p.err(format!("expected `cnf`, found {}", describe(&t)));
            }
        }
        p.expect(Tok::LParen, "`(`")?;
        let name_at = p.here();
        let name = p.name()?;
        if !names.insert(name.clone()) {
            return Err(ParseError::DuplicateName { name, line: name_at.0, column: name_at.1 });
        }
        p.expect(Tok::Comma, "`,`")?;
        let role = match p.next() {
            Tok::Lower(r) => r,
            t => {
                p.back(&t);
                return p.err(format!("expected a role, found {}", describe(&t)));
            }
        };
        let Some(origin) = role_origin(&role) else {
            p.pos -= 1;
            return p.err(format!("unsupported role `{role}`"));
        };
        p.expect(Tok::Comma, "`,`")?;
        p.vars.clear();
        let literals = p.formula()?;
        while *p.peek() == Tok::Comma {
            p.next();
            p.skip_general()?;
        }
        p.expect(Tok::RParen, "`)`")?;
        p.expect(Tok::Dot, "`.`")?;
        let mut clause = Clause::new(literals);
        clause.id = ClauseId(out.len() as u32);
        clause.birth = out.len() as u64;
        clause.name = Some(Arc::from(name.as_str()));
        clause.origin = origin;
        out.push(clause);
    }
    Ok(out)
}

/// Parse a problem; it must contain at least one clause.
pub fn parse_cnf(name: &str, text: &str) -> Result<Problem, ParseError> {
    let clauses = parse_clauses(text)?;
    if clauses.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(Problem { name: name.to_string(), clauses })
}
