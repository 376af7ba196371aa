//! Text exchange format, one map per line: `E;sigma-cycles;alpha-pairs`.
//!
//! ```text
//! 2;(0 2 1 3);(0 1)(2 3)
//! ```
//!
//! Darts are `0..2E`. Darts absent from the sigma cycles are fixed points of
//! sigma; every dart must appear in exactly one alpha pair. Blank lines and
//! lines starting with `#` are skipped by [`parse_maps`].

use std::fmt::Write as _;

use thiserror::Error;

use super::{CombinatorialMap, Dart, MapError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub fn write_map(map: &CombinatorialMap) -> String {
    let mut out = String::new();
    write!(out, "{};", map.edge_count()).unwrap();
    for cyc in map.vertex_cycles() {
        out.push('(');
        for (i, d) in cyc.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{d}").unwrap();
        }
        out.push(')');
    }
    out.push(';');
    for (a, b) in map.edges() {
        write!(out, "({a} {b})").unwrap();
    }
    out
}

/// Parses every non-blank, non-comment line.
pub fn parse_maps(text: &str) -> Result<Vec<CombinatorialMap>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_map_at(l, i + 1))
        .collect()
}

pub fn parse_map(line: &str) -> Result<CombinatorialMap, ParseError> {
    parse_map_at(line, 1)
}

fn parse_map_at(line: &str, line_no: usize) -> Result<CombinatorialMap, ParseError> {
    let err = |column: usize, message: String| ParseError {
        line: line_no,
        column,
        message,
    };
    let parts: Vec<&str> = line.split(';').collect();
    if parts.len() != 3 {
        return Err(err(
            1,
            format!("expected 3 ';'-separated fields, found {}", parts.len()),
        ));
    }
    let sigma_col = parts[0].len() + 2;
    let alpha_col = sigma_col + parts[1].len() + 1;

    let edges: usize = parts[0]
        .trim()
        .parse()
        .map_err(|_| err(1, format!("bad edge count {:?}", parts[0].trim())))?;
    let n = 2 * edges;

    let sigma_cycles = parse_cycles(parts[1], sigma_col, n).map_err(|(c, m)| err(c, m))?;
    let mut sigma: Vec<Dart> = (0..n).collect();
    let mut seen = vec![false; n];
    for (col, cyc) in &sigma_cycles {
        for (i, &d) in cyc.iter().enumerate() {
            if seen[d] {
                return Err(err(*col, format!("dart {d} repeated in sigma")));
            }
            seen[d] = true;
            sigma[d] = cyc[(i + 1) % cyc.len()];
        }
    }

    let alpha_cycles = parse_cycles(parts[2], alpha_col, n).map_err(|(c, m)| err(c, m))?;
    let mut alpha = vec![usize::MAX; n];
    for (col, cyc) in &alpha_cycles {
        if cyc.len() != 2 {
            return Err(err(
                *col,
                format!("alpha cycle has length {}, expected 2", cyc.len()),
            ));
        }
        for (i, &d) in cyc.iter().enumerate() {
            if alpha[d] != usize::MAX {
                return Err(err(*col, format!("dart {d} repeated in alpha")));
            }
            alpha[d] = cyc[1 - i];
        }
    }
    if let Some(d) = alpha.iter().position(|&a| a == usize::MAX) {
        return Err(err(alpha_col, format!("dart {d} missing from alpha")));
    }
    CombinatorialMap::new(sigma, alpha).map_err(|e| match e {
        MapError::Invalid(v) => err(1, v[0].to_string()),
        other => err(1, other.to_string()),
    })
}

/// Parses `(a b c)(d e)...`, returning each cycle with its 1-based column.
#[allow(clippy::type_complexity)]
fn parse_cycles(
    field: &str,
    offset: usize,
    n: usize,
) -> Result<Vec<(usize, Vec<Dart>)>, (usize, String)> {
    let bytes = field.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' => i += 1,
            b'(' => {
                let open = i;
                let close = field[i..]
                    .find(')')
                    .map(|k| i + k)
                    .ok_or((offset + open, "unclosed '('".to_string()))?;
                let mut cyc = Vec::new();
                let mut j = open + 1;
                for tok in field[open + 1..close].split(' ') {
                    if tok.is_empty() {
                        j += 1;
                        continue;
                    }
                    let d: Dart = tok
                        .parse()
                        .map_err(|_| (offset + j, format!("bad dart {tok:?}")))?;
                    if d >= n {
                        return Err((offset + j, format!("dart {d} out of range 0..{n}")));
                    }
                    if cyc.contains(&d) {
                        return Err((offset + j, format!("dart {d} repeated in cycle")));
                    }
                    cyc.push(d);
                    j += tok.len() + 1;
                }
                if cyc.is_empty() {
                    return Err((offset + open, "empty cycle".to_string()));
                }
                out.push((offset + open, cyc));
                i = close + 1;
            }
            c => return Err((offset + i, format!("unexpected character {:?}", c as char))),
        }
    }
    Ok(out)
}
