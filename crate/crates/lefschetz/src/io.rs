//! Line-oriented text formats for complexes, cell sets and vertex maps.
//!
//! ```text
//! # a complex: maximal simplices suffice
//! simplex 0 1 2
//! # a cell set
//! cell 0 1
//! # a vertex map
//! map 0 -> 1
//! ```

use std::sync::Arc;

use thiserror::Error;

use crate::chain::{ChainError, VertexSelfMap};
use crate::complex::{CellId, CellSet, Complex, ComplexError, VertexToken};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Complex { line: usize, source: ComplexError },
    #[error("{0}")]
    Empty(String),
}

/// Non-blank, non-comment lines as (1-based line number, tokens).
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn keyword<'a>(line: usize, tokens: &'a [&'a str], expected: &str) -> Result<&'a [&'a str], ParseError> {
    match tokens.split_first() {
        Some((k, rest)) if *k == expected => Ok(rest),
        Some((k, _)) => Err(ParseError::Syntax {
            line,
            message: format!("expected `{expected}`, found `{k}`"),
        }),
        None => unreachable!("records are non-empty"),
    }
}

fn tokens(rest: &[&str]) -> Vec<VertexToken> {
    rest.iter().map(|t| VertexToken::parse(t)).collect()
}

pub fn parse_complex(text: &str) -> Result<Complex, ParseError> {
    let mut simplices = Vec::new();
    let mut first_line = 0;
    for (line, toks) in records(text) {
        let rest = keyword(line, &toks, "simplex")?;
        if rest.is_empty() {
            return Err(ParseError::Complex {
                line,
                source: ComplexError::EmptySimplex,
            });
        }
        let s = tokens(rest);
        let mut sorted = s.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(ParseError::Complex {
                line,
                source: ComplexError::RepeatedVertex { simplex: rest.join(" ") },
            });
        }
        if first_line == 0 {
            first_line = line;
        }
        simplices.push(s);
    }
    if simplices.is_empty() {
        return Err(ParseError::Empty("complex has no simplices".to_string()));
    }
    Complex::from_maximal(simplices).map_err(|source| ParseError::Complex { line: first_line, source })
}

pub fn parse_cellset(text: &str, complex: &Arc<Complex>) -> Result<CellSet, ParseError> {
    let mut cells = Vec::new();
    for (line, toks) in records(text) {
        let rest = keyword(line, &toks, "cell")?;
        let cell = complex
            .find_tokens(&tokens(rest))
            .map_err(|source| ParseError::Complex { line, source })?;
        cells.push(cell);
    }
    Ok(CellSet::from_cells(complex, cells))
}

/// Parsed `map v -> w` pairs. Simpliciality is checked separately by [`build_map`].
pub fn parse_map(text: &str) -> Result<Vec<(VertexToken, VertexToken)>, ParseError> {
    let mut pairs = Vec::new();
    for (line, toks) in records(text) {
        match keyword(line, &toks, "map")? {
            [a, "->", b] => pairs.push((VertexToken::parse(a), VertexToken::parse(b))),
            _ => {
                return Err(ParseError::Syntax {
                    line,
                    message: "expected `map v -> w`".to_string(),
                })
            }
        }
    }
    Ok(pairs)
}

pub fn build_map(complex: &Arc<Complex>, pairs: Vec<(VertexToken, VertexToken)>) -> Result<VertexSelfMap, ChainError> {
    VertexSelfMap::from_pairs(complex, pairs)
}

fn simplex_line(keyword: &str, complex: &Complex, cell: CellId) -> String {
    let labels: Vec<String> = complex.simplex(cell).iter().map(|&v| complex.label(v).to_string()).collect();
    format!("{keyword} {}\n", labels.join(" "))
}

/// Maximal simplices, in canonical cell order.
pub fn write_complex(complex: &Complex) -> String {
    let mut covered = vec![Vec::new(); complex.dim() + 1];
    for (p, c) in covered.iter_mut().enumerate() {
        *c = vec![false; complex.count(p)];
    }
    for cell in complex.cells().filter(|c| c.dim > 0) {
        for f in complex.facets(cell) {
            covered[f.dim][f.pos] = true;
        }
    }
    complex
        .cells()
        .filter(|c| !covered[c.dim][c.pos])
        .map(|c| simplex_line("simplex", complex, c))
        .collect()
}

pub fn write_cellset(set: &CellSet) -> String {
    set.iter().map(|c| simplex_line("cell", set.complex(), c)).collect()
}

pub fn write_map(map: &VertexSelfMap) -> String {
    let x = map.complex();
    (0..x.num_vertices())
        .map(|v| format!("map {} -> {}\n", x.label(v), x.label(map.vertex_image(v))))
        .collect()
}
