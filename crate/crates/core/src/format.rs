//! Line-oriented text format for specs, base sets and transversal
//! presentations.
//!
//! ```text
//! # comments run to the end of the line
//! polymatroid plp
//! name example
//! n 3
//! d 2
//! a 0 0 0
//! b 2 1 2
//! alpha 0 1 2
//! beta 1 2 2
//! ```
//!
//! A `bases` document has `n` and one `base u1 ... un` line per base; a
//! `transversal` document has `n` and one `factor s t` line per interval.
//! In `plp` documents `a` defaults to zeros and `b` to `d`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::plp::{PlpSpec, TransversalPresentation};
use crate::vector::{BaseSet, ExponentVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Plp(PlpSpec),
    Bases(BaseSet),
    Transversal(TransversalPresentation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecDocument {
    pub name: Option<String>,
    pub payload: Payload,
}

impl SpecDocument {
    pub fn new(payload: Payload) -> Self {
        SpecDocument { name: None, payload }
    }

    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::Plp(_) => "plp",
            Payload::Bases(_) => "bases",
            Payload::Transversal(_) => "transversal",
        }
    }

    /// The base set described by the document.
    pub fn base_set(&self, max_bases: usize) -> Result<BaseSet> {
        match &self.payload {
            Payload::Plp(s) => s.generate_bases_bounded(max_bases),
            Payload::Bases(b) => Ok(b.clone()),
            Payload::Transversal(t) => Ok(t.base_set()),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    key: Token<'a>,
    args: Vec<Token<'a>>,
}

impl Line<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse { line: self.number, column, message: message.into() }
    }

    fn numbers(&self) -> Result<Vec<u32>> {
        self.args
            .iter()
            .map(|t| t.text.parse::<u32>().map_err(|_| self.err(t.column, format!("expected a non-negative integer, found `{}`", t.text))))
            .collect()
    }

    fn single(&self) -> Result<u32> {
        let v = self.numbers()?;
        if v.len() != 1 {
            return Err(self.err(self.key.column, format!("`{}` takes exactly one value", self.key.text)));
        }
        Ok(v[0])
    }
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token { text: &content[s..pos], column: content[..s].chars().count() + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            let key = tokens.remove(0);
            out.push(Line { number: idx + 1, key, args: tokens });
        }
    }
    out
}

/// Parses a document; errors carry the 1-based line and column.
pub fn parse(text: &str) -> Result<SpecDocument> {
    let lines = tokenize(text);
    let Some(header) = lines.first() else {
        return Err(Error::Parse { line: 1, column: 1, message: "empty document".into() });
    };
    if header.key.text != "polymatroid" || header.args.len() != 1 {
        return Err(header.err(header.key.column, "expected `polymatroid plp|bases|transversal`"));
    }
    let kind = header.args[0].text;
    if !matches!(kind, "plp" | "bases" | "transversal") {
        return Err(header.err(header.args[0].column, format!("unknown kind `{kind}`")));
    }
    let mut name = None;
    let mut n = None;
    let mut d = None;
    let mut vectors: [Option<(Vec<u32>, &Line)>; 4] = [None, None, None, None];
    let mut bases = Vec::new();
    let mut factors = Vec::new();
    for line in &lines[1..] {
        let key = line.key.text;
        match (kind, key) {
            (_, "name") => {
                if line.args.is_empty() {
                    return Err(line.err(line.key.column, "`name` needs a value"));
                }
                name = Some(line.args.iter().map(|t| t.text).collect::<Vec<_>>().join(" "));
            }
            (_, "n") => n = Some((line.single()? as usize, line)),
            ("plp", "d") => d = Some(line.single()?),
            ("plp", "a" | "b" | "alpha" | "beta") => {
                let slot = ["a", "b", "alpha", "beta"].iter().position(|k| *k == key).expect("matched");
                if vectors[slot].is_some() {
                    return Err(line.err(line.key.column, format!("duplicate `{key}`")));
                }
                vectors[slot] = Some((line.numbers()?, line));
            }
            ("bases", "base") => bases.push((line.numbers()?, line)),
            ("transversal", "factor") => {
                let v = line.numbers()?;
                if v.len() != 2 {
                    return Err(line.err(line.key.column, "`factor` takes two values `s t`"));
                }
                factors.push((v[0] as usize, v[1] as usize));
            }
            _ => return Err(line.err(line.key.column, format!("unexpected key `{key}` in a {kind} document"))),
        }
    }
    let Some((n, n_line)) = n else {
        return Err(header.err(1, "missing `n`"));
    };
    let semantic = |line: &Line, e: Error| line.err(1, e.to_string());
    let payload = match kind {
        "plp" => {
            let [a, b, alpha, beta] = vectors;
            let Some((beta, beta_line)) = beta else { return Err(n_line.err(1, "missing `beta`")) };
            let Some((alpha, _)) = alpha else { return Err(n_line.err(1, "missing `alpha`")) };
            if beta.len() != n {
                return Err(beta_line.err(1, format!("expected {n} values, found {}", beta.len())));
            }
            let total = beta[n - 1];
            if let Some(dv) = d {
                if dv != total {
                    return Err(beta_line.err(1, format!("d = {dv} but beta_n = {total}")));
                }
            }
            let a = a.map(|x| x.0).unwrap_or_else(|| vec![0; n]);
            let b = b.map(|x| x.0).unwrap_or_else(|| vec![total; n]);
            Payload::Plp(PlpSpec::new(a, b, alpha, beta).map_err(|e| semantic(n_line, e))?)
        }
        "bases" => {
            let mut vs = Vec::new();
            for (v, l) in bases {
                if v.len() != n {
                    return Err(l.err(1, format!("expected {n} entries, found {}", v.len())));
                }
                vs.push(ExponentVector::new(v));
            }
            Payload::Bases(BaseSet::new(n, vs).map_err(|e| semantic(n_line, e))?)
        }
        _ => Payload::Transversal(TransversalPresentation::new(n, factors).map_err(|e| semantic(n_line, e))?),
    };
    Ok(SpecDocument { name, payload })
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Canonical text of a document; `parse(&print(doc)) == doc`.
pub fn print(doc: &SpecDocument) -> String {
    let mut out = format!("polymatroid {}\n", doc.kind());
    if let Some(name) = &doc.name {
        let _ = writeln!(out, "name {name}");
    }
    match &doc.payload {
        Payload::Plp(s) => {
            let _ = writeln!(out, "n {}\nd {}", s.n(), s.d());
            for (key, v) in [("a", s.a()), ("b", s.b()), ("alpha", s.alpha()), ("beta", s.beta())] {
                let _ = writeln!(out, "{key} {}", join(v));
            }
        }
        Payload::Bases(b) => {
            let _ = writeln!(out, "n {}", b.n());
            for u in b.iter() {
                let _ = writeln!(out, "base {}", join(u.entries()));
            }
        }
        Payload::Transversal(t) => {
            let _ = writeln!(out, "n {}", t.n());
            for (s, e) in t.intervals() {
                let _ = writeln!(out, "factor {s} {e}");
            }
        }
    }
    out
}
