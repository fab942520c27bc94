//! Text formats: set systems (`.ss`), GF(2) matrices (`.gf2`) and signed
//! chord diagrams (`.cd`).
//!
//! All three accept `#` comment lines and blank lines anywhere. Parse errors
//! carry 1-based line numbers.
//!
//! ```text
//! # .ss                # .gf2          # .cd
//! elements: 1 2        2               word: a b a b
//! -                    0 1             twisted: b
//! 1 2                  1 0
//! ```

use crate::binary::Gf2SymMatrix;
use crate::bouquet::SignedChordDiagram;
use crate::error::{Error, Result};
use crate::mask::{GroundSet, SubsetMask};
use crate::setsystem::SetSystem;

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn keyed<'a>(line: usize, text: &'a str, key: &str) -> Result<&'a str> {
    text.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(':'))
        .map(str::trim)
        .ok_or_else(|| Error::parse(line, format!("expected `{key}:`")))
}

pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `elements:` line"))?;
    let names: Vec<&str> = keyed(line, header, "elements")?.split_whitespace().collect();
    let ground = GroundSet::new(names.iter().copied()).map_err(|e| Error::parse(line, e.to_string()))?;
    let mut family = Vec::new();
    for (line, text) in lines {
        if text == "-" {
            family.push(SubsetMask::EMPTY);
            continue;
        }
        let mut set = SubsetMask::EMPTY;
        for name in text.split_whitespace() {
            let i = ground
                .index_of(name)
                .ok_or_else(|| Error::parse(line, format!("unknown element `{name}`")))?;
            if set.contains(i) {
                return Err(Error::parse(line, format!("element `{name}` repeated")));
            }
            set = set | SubsetMask::singleton(i);
        }
        family.push(set);
    }
    SetSystem::new(ground, family)
}

pub fn write_set_system(d: &SetSystem) -> String {
    let names: Vec<&str> = d.ground().names().collect();
    let mut out = format!("elements: {}\n", names.join(" "));
    for &set in d.family() {
        out.push_str(&d.ground().render(set));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Gf2SymMatrix> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing dimension line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a dimension, found `{header}`")))?;
    let mut rows = Vec::with_capacity(n);
    let mut last_line = line;
    for (line, text) in lines {
        if rows.len() == n {
            return Err(Error::parse(line, format!("more than {n} rows")));
        }
        let mut row = 0u64;
        let entries: Vec<&str> = text.split_whitespace().collect();
        if entries.len() != n {
            return Err(Error::parse(
                line,
                format!("expected {n} entries, found {}", entries.len()),
            ));
        }
        for (j, entry) in entries.iter().enumerate() {
            match *entry {
                "0" => {}
                "1" => row |= 1 << j,
                other => return Err(Error::parse(line, format!("entry `{other}` is not 0 or 1"))),
            }
        }
        rows.push((line, row));
        last_line = line;
    }
    if rows.len() != n {
        return Err(Error::parse(
            last_line,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    let bits: Vec<u64> = rows.iter().map(|&(_, r)| r).collect();
    Gf2SymMatrix::from_rows(bits).map_err(|e| match e {
        Error::Asymmetric(i, j) => {
            Error::parse(rows[i].0, format!("matrix is not symmetric at ({}, {})", i + 1, j + 1))
        }
        other => Error::parse(line, other.to_string()),
    })
}

pub fn write_matrix(m: &Gf2SymMatrix) -> String {
    m.to_string()
}

pub fn parse_chord_diagram(text: &str) -> Result<SignedChordDiagram> {
    let mut lines = content_lines(text);
    let (word_line, first) = lines.next().ok_or_else(|| Error::parse(1, "missing `word:` line"))?;
    let tokens: Vec<&str> = keyed(word_line, first, "word")?.split_whitespace().collect();
    let (line, second) = lines
        .next()
        .ok_or_else(|| Error::parse(word_line + 1, "missing `twisted:` line"))?;
    let twisted: Vec<&str> = keyed(line, second, "twisted")?.split_whitespace().collect();
    if let Some((extra, _)) = lines.next() {
        return Err(Error::parse(extra, "unexpected content after `twisted:`"));
    }
    SignedChordDiagram::new(&tokens, &twisted).map_err(|e| {
        let at = if matches!(&e, Error::BadDiagram(msg) if msg.starts_with("twisted")) {
            line
        } else {
            word_line
        };
        Error::parse(at, e.to_string())
    })
}

pub fn write_chord_diagram(b: &SignedChordDiagram) -> String {
    b.to_string()
}
