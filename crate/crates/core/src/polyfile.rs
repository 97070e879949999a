//! Plain-text polytope files.
//!
//! ```text
//! # comment
//! dim 2
//! 0 0
//! 0 2
//! 1 3
//! 3 0
//! ```
//!
//! The first non-comment line is `dim n`; every following non-empty line is a
//! point with `n` integer coordinates. Blank lines and text after `#` are ignored.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::polytope::{convex_hull, LatticePolytope};

/// Ambient dimension and points listed in a polytope file.
pub fn parse_points(text: &str) -> Result<(usize, Vec<LatticePoint>)> {
    let mut dim = None;
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        match dim {
            None => {
                if fields.next() != Some("dim") {
                    return Err(err("expected `dim n`".into()));
                }
                let n: usize = fields
                    .next()
                    .ok_or_else(|| err("missing dimension".into()))?
                    .parse()
                    .map_err(|e| err(format!("bad dimension: {e}")))?;
                if fields.next().is_some() || n == 0 {
                    return Err(err("expected `dim n` with n >= 1".into()));
                }
                dim = Some(n);
            }
            Some(n) => {
                let coords = fields
                    .map(|f| f.parse::<BigInt>().map_err(|e| err(format!("bad integer `{f}`: {e}"))))
                    .collect::<Result<Vec<_>>>()?;
                if coords.len() != n {
                    return Err(err(format!("expected {n} coordinates, found {}", coords.len())));
                }
                points.push(LatticePoint::new(coords));
            }
        }
    }
    let dim = dim.ok_or(Error::Parse {
        line: 0,
        msg: "missing `dim n` header".into(),
    })?;
    if points.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "no points".into(),
        });
    }
    Ok((dim, points))
}

/// Convex hull of the points in a polytope file.
pub fn parse_polytope(text: &str) -> Result<LatticePolytope> {
    let (_, points) = parse_points(text)?;
    convex_hull(&points)
}

/// Writes points in the file format.
pub fn format_points(points: &[LatticePoint]) -> String {
    let dim = points.first().map_or(0, |p| p.dim());
    let mut out = format!("dim {dim}\n");
    for p in points {
        let cols: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
        out.push_str(&cols.join(" "));
        out.push('\n');
    }
    out
}
