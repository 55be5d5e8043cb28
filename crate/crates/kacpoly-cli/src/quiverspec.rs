//! Plain-text quiver descriptions.
//!
//! The file form is line oriented:
//!
//! ```text
//! # two loops on one vertex
//! n = 1
//! edge 1 1 2
//! ```
//!
//! `n = K` declares the vertex count, `edge i j m` puts `m` edges between
//! vertices `i` and `j` (1-based, `i <= j`, loops allowed), and `#` starts
//! a comment.  Unlisted pairs have multiplicity zero.  The inline form
//! packs the same data into one argument: `"n=1; 1-1:2"`.

use kacpoly::quiver::{pair_count, pair_index};
use kacpoly::Quiver;

#[derive(Debug)]
pub struct QuiverSpec {
    pub n: usize,
    /// 1-based `(i, j, multiplicity)` with `i <= j`, no duplicate pairs.
    pub edges: Vec<(usize, usize, u32)>,
}

impl QuiverSpec {
    /// Accepts either a path to a description file or an inline form.  An
    /// argument containing `;` or starting with `n=` is taken as inline.
    pub fn from_arg(arg: &str) -> Result<Self, String> {
        let trimmed = arg.trim();
        if trimmed.contains(';') || trimmed.starts_with("n=") || trimmed.starts_with("n =") {
            Self::parse_inline(trimmed)
        } else {
            let text = std::fs::read_to_string(trimmed)
                .map_err(|e| format!("cannot read quiver file {trimmed}: {e}"))?;
            Self::parse(&text)
        }
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some((key, value)) = line.split_once('=') {
                match key.trim() {
                    "n" => {
                        if n.is_some() {
                            return Err(format!("line {lineno}: n declared twice"));
                        }
                        let v: usize = value
                            .trim()
                            .parse()
                            .map_err(|_| format!("line {lineno}: n must be a positive integer, got {:?}", value.trim()))?;
                        if v == 0 {
                            return Err(format!("line {lineno}: n must be at least 1"));
                        }
                        n = Some(v);
                    }
                    "name" => {} // cosmetic, ignored
                    other => {
                        return Err(format!("line {lineno}: unknown key {other:?}"));
                    }
                }
                continue;
            }
            let mut words = line.split_whitespace();
            if words.next() != Some("edge") {
                return Err(format!(
                    "line {lineno}: expected `n = K`, `edge i j m`, or a comment, got {line:?}"
                ));
            }
            let mut field = |what: &str| -> Result<&str, String> {
                words
                    .next()
                    .ok_or_else(|| format!("line {lineno}: edge line is missing its {what}"))
            };
            let i = parse_num(field("first endpoint")?, lineno, "first endpoint")?;
            let j = parse_num(field("second endpoint")?, lineno, "second endpoint")?;
            let m = parse_num(field("multiplicity")?, lineno, "multiplicity")?;
            if let Some(extra) = words.next() {
                return Err(format!("line {lineno}: trailing token {extra:?} on edge line"));
            }
            edges.push((lineno, i as usize, j as usize, m));
        }
        let n = n.ok_or("missing `n = K` line".to_string())?;
        validate(n, edges)
    }

    pub fn parse_inline(text: &str) -> Result<Self, String> {
        let mut chunks = text.split(';').map(str::trim).filter(|c| !c.is_empty());
        let head = chunks.next().ok_or("empty quiver description".to_string())?;
        let n: usize = head
            .strip_prefix('n')
            .map(str::trim_start)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(|| format!("inline quiver must start with n=K, got {head:?}"))?
            .trim()
            .parse()
            .map_err(|_| format!("bad vertex count in {head:?}"))?;
        if n == 0 {
            return Err("n must be at least 1".to_string());
        }
        let mut edges = Vec::new();
        for (idx, chunk) in chunks.enumerate() {
            let lineno = idx + 2; // chunk position doubles as the diagnostic line
            let (pair, mult) = chunk
                .split_once(':')
                .ok_or_else(|| format!("edge {chunk:?} is not of the form i-j:m"))?;
            let (i, j) = pair
                .trim()
                .split_once('-')
                .ok_or_else(|| format!("edge {chunk:?} is not of the form i-j:m"))?;
            let i = parse_num(i.trim(), lineno, "first endpoint")? as usize;
            let j = parse_num(j.trim(), lineno, "second endpoint")? as usize;
            let m = parse_num(mult.trim(), lineno, "multiplicity")?;
            edges.push((lineno, i, j, m));
        }
        validate(n, edges)
    }

    pub fn to_quiver(&self) -> Result<Quiver, String> {
        let mut slots = vec![0u32; pair_count(self.n)];
        for &(i, j, m) in &self.edges {
            slots[pair_index(self.n, i - 1, j - 1)] = m;
        }
        Quiver::new(self.n, slots).map_err(|e| e.to_string())
    }

    /// Compact echo for reports: `n=2; 1-2:3` style.
    pub fn describe(&self) -> String {
        let mut out = format!("n={}", self.n);
        for &(i, j, m) in &self.edges {
            if m > 0 {
                out.push_str(&format!("; {i}-{j}:{m}"));
            }
        }
        out
    }
}

fn parse_num(word: &str, lineno: usize, what: &str) -> Result<u32, String> {
    word.parse()
        .map_err(|_| format!("line {lineno}: {what} must be a nonnegative integer, got {word:?}"))
}

fn validate(n: usize, raw: Vec<(usize, usize, usize, u32)>) -> Result<QuiverSpec, String> {
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::with_capacity(raw.len());
    for (lineno, i, j, m) in raw {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(format!("line {lineno}: endpoints must lie in 1..={n}, got {i}-{j}"));
        }
        if i > j {
            return Err(format!("line {lineno}: endpoints must satisfy i <= j, got {i}-{j}"));
        }
        if !seen.insert((i, j)) {
            return Err(format!("line {lineno}: duplicate edge pair {i}-{j}"));
        }
        edges.push((i, j, m));
    }
    Ok(QuiverSpec { n, edges })
}
