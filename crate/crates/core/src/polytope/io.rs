// SPDX-License-Identifier: Apache-2.0

//! Line-oriented polytope text format.
//!
//! ```text
//! # comment
//! V <ambient_dim> <count>
//! x_1 ... x_d            (one point per line)
//!
//! H <ambient_dim> <count>
//! a_1 ... a_d b          (a · x <= b, one inequality per line)
//! ```

use std::fmt::Write as _;

use super::{HRep, Inequality, VRep};
use crate::error::{Error, Result};
use crate::linalg::{parse_scalar, Scalar, Vector};

/// Contents of a polytope file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeFile {
    V(VRep),
    H(HRep),
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Tokens with their 1-based column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let base = line.as_ptr() as usize;
    line.split_ascii_whitespace()
        .map(move |t| (t.as_ptr() as usize - base + 1, t))
}

pub fn parse_polytope(text: &str) -> Result<PolytopeFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, 1, "missing header line"))?;
    let toks: Vec<(usize, &str)> = tokens(header).collect();
    if toks.len() != 3 {
        return Err(parse_err(hline, 1, "header must be `V|H <ambient_dim> <count>`"));
    }
    let kind = toks[0].1;
    if kind != "V" && kind != "H" {
        return Err(parse_err(hline, toks[0].0, format!("unknown representation `{kind}`")));
    }
    let dim: usize = toks[1]
        .1
        .parse()
        .map_err(|_| parse_err(hline, toks[1].0, "ambient dimension must be a nonnegative integer"))?;
    let count: usize = toks[2]
        .1
        .parse()
        .map_err(|_| parse_err(hline, toks[2].0, "count must be a nonnegative integer"))?;
    let width = if kind == "V" { dim } else { dim + 1 };

    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(count);
    for _ in 0..count {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline, 1, format!("expected {count} data lines, found {}", rows.len())))?;
        let mut row = Vec::with_capacity(width);
        for (col, tok) in tokens(line) {
            let v = parse_scalar(tok).ok_or_else(|| parse_err(ln, col, format!("invalid scalar `{tok}`")))?;
            row.push(v);
        }
        if row.len() != width {
            return Err(parse_err(ln, 1, format!("expected {width} scalars, found {}", row.len())));
        }
        rows.push(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, 1, "unexpected data after the declared count"));
    }

    Ok(match kind {
        "V" => PolytopeFile::V(VRep::new(dim, rows.into_iter().map(Vector::new).collect()).map_err(
            |e| parse_err(hline, 1, e.to_string()),
        )?),
        _ => PolytopeFile::H(HRep {
            ambient_dim: dim,
            inequalities: rows
                .into_iter()
                .map(|mut r| {
                    let offset = r.pop().expect("width >= 1");
                    Inequality::new(Vector::new(r), offset)
                })
                .collect(),
        }),
    })
}

pub fn write_vrep(v: &VRep) -> String {
    let mut out = format!("V {} {}\n", v.ambient_dim, v.points.len());
    for p in &v.points {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn write_hrep(h: &HRep) -> String {
    let mut out = format!("H {} {}\n", h.ambient_dim, h.inequalities.len());
    for ineq in &h.inequalities {
        if ineq.normal.dim() > 0 {
            let _ = writeln!(out, "{} {}", ineq.normal, ineq.offset);
        } else {
            let _ = writeln!(out, "{}", ineq.offset);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    #[test]
    fn parses_both_kinds() {
        let v = parse_polytope("# square\nV 2 2\n0 1/2\n-3 4\n").unwrap();
        match v {
            PolytopeFile::V(v) => {
                assert_eq!(v.points[0], Vector::new(vec![int(0), ratio(1, 2)]));
                assert_eq!(write_vrep(&v), "V 2 2\n0 1/2\n-3 4\n");
            }
            _ => panic!("expected V"),
        }
        let h = parse_polytope("H 1 2\n1 1\n-1 0\n").unwrap();
        match h {
            PolytopeFile::H(h) => {
                assert_eq!(h.inequalities[1].offset, int(0));
                assert_eq!(write_hrep(&h), "H 1 2\n1 1\n-1 0\n");
            }
            _ => panic!("expected H"),
        }
    }

    #[test]
    fn reports_line_and_column() {
        match parse_polytope("V 2 1\n1 x\n").unwrap_err() {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (2, 3)),
            e => panic!("unexpected {e}"),
        }
        match parse_polytope("V 2 2\n1 1\n").unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 1),
            e => panic!("unexpected {e}"),
        }
        assert!(parse_polytope("Q 2 1\n1 1\n").is_err());
        assert!(parse_polytope("V 2 1\n1 1 1\n").is_err());
        assert!(parse_polytope("V 1 1\n1\n2\n").is_err());
        assert!(parse_polytope("").is_err());
    }
}
