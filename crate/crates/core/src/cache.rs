//! Text encoding of built blocks for on-disk caching.
//!
//! A block file is a short manifest followed by one section per
//! differential, sections separated by blank lines:
//!
//! ```text
//! hairycalc-block 1
//! key hairy_m2_d6_s2_t1
//! degrees 1
//! dims 1
//! zeros 0
//!
//! 2 3
//! 0 1 1/1
//! 1 2 -3/2
//! ```
//!
//! Each section is a `rows cols` header and then `row col num/den` triplets
//! in row-major order. Reading and writing files is left to the caller.

use std::fmt::Write;

use num_bigint::BigInt;

use crate::engine::{BlockKey, ChainBlock};
use crate::error::{Error, Result};
use crate::linalg::GradedComplex;
use crate::{QMatrix, Rational};

const MAGIC: &str = "hairycalc-block 1";

fn err<T>(path: &str, reason: impl Into<String>) -> Result<T> {
    Err(Error::CacheFormat { path: path.to_string(), reason: reason.into() })
}

pub fn encode_matrix(m: &QMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for (r, c, v) in m.entries() {
        let _ = writeln!(out, "{r} {c} {}/{}", v.numer(), v.denom());
    }
    out
}

fn parse_rational(tok: &str, path: &str) -> Result<Rational> {
    let Some((n, d)) = tok.split_once('/') else {
        return err(path, format!("expected num/den, found {tok:?}"));
    };
    let n: BigInt = n.parse().or_else(|_| err(path, format!("bad numerator {n:?}")))?;
    let d: BigInt = d.parse().or_else(|_| err(path, format!("bad denominator {d:?}")))?;
    if d == BigInt::from(0) {
        return err(path, "zero denominator");
    }
    Ok(Rational::new(n, d))
}

fn parse_usize(tok: &str, path: &str) -> Result<usize> {
    tok.parse().or_else(|_| err(path, format!("expected a non-negative integer, found {tok:?}")))
}

pub fn decode_matrix(text: &str, path: &str) -> Result<QMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let Some(header) = lines.next() else {
        return err(path, "missing `rows cols` header");
    };
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [rows, cols] = dims.as_slice() else {
        return err(path, format!("bad header {header:?}"));
    };
    let (rows, cols) = (parse_usize(rows, path)?, parse_usize(cols, path)?);
    let mut triplets = Vec::new();
    let mut last: Option<(usize, usize)> = None;
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [r, c, v] = toks.as_slice() else {
            return err(path, format!("bad entry line {line:?}"));
        };
        let (r, c) = (parse_usize(r, path)?, parse_usize(c, path)?);
        if r >= rows || c >= cols {
            return err(path, format!("entry ({r},{c}) outside {rows}x{cols}"));
        }
        if last.is_some_and(|p| p >= (r, c)) {
            return err(path, format!("entry ({r},{c}) out of row-major order"));
        }
        last = Some((r, c));
        triplets.push((r, c, parse_rational(v, path)?));
    }
    QMatrix::from_triplets(rows, cols, triplets)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn encode_block(block: &ChainBlock) -> String {
    let c = &block.complex;
    let mut out = format!(
        "{MAGIC}\nkey {}\ndegrees {}\ndims {}\nzeros {}\n",
        block.key.slug(),
        join(&c.degrees),
        join(&c.dims),
        join(&block.zero_discarded)
    );
    for m in &c.maps {
        out.push('\n');
        out.push_str(&encode_matrix(m));
    }
    out
}

/// Parses a block file for `key`. Generator lists are not stored, so the
/// returned block carries only dimensions and matrices.
pub fn decode_block(key: &BlockKey, text: &str, path: &str) -> Result<ChainBlock> {
    let mut sections = text.split("\n\n");
    let manifest = sections.next().unwrap_or("");
    let mut lines = manifest.lines();
    if lines.next() != Some(MAGIC) {
        return err(path, "missing block header");
    }
    let mut field = |name: &str| -> Result<Vec<String>> {
        let Some(line) = lines.next() else {
            return err(path, format!("missing `{name}` line"));
        };
        let mut toks = line.split_whitespace();
        if toks.next() != Some(name) {
            return err(path, format!("expected `{name}` line, found {line:?}"));
        }
        Ok(toks.map(str::to_string).collect())
    };
    let slug = field("key")?;
    if slug != [key.slug()] {
        return err(path, format!("file is for {slug:?}, expected {}", key.slug()));
    }
    let degrees = field("degrees")?
        .iter()
        .map(|t| t.parse::<i64>().or_else(|_| err(path, format!("bad degree {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    let dims = field("dims")?.iter().map(|t| parse_usize(t, path)).collect::<Result<Vec<_>>>()?;
    let zeros = field("zeros")?.iter().map(|t| parse_usize(t, path)).collect::<Result<Vec<_>>>()?;
    if dims.len() != degrees.len() || zeros.len() != degrees.len() {
        return err(path, "degrees, dims and zeros differ in length");
    }
    let maps = sections
        .filter(|s| !s.trim().is_empty())
        .map(|s| decode_matrix(s, path))
        .collect::<Result<Vec<_>>>()?;
    let complex = GradedComplex { degrees, dims, maps };
    complex
        .validate()
        .or_else(|e| err(path, format!("inconsistent shapes: {e}")))?;
    Ok(ChainBlock {
        key: key.clone(),
        complex,
        zero_discarded: zeros,
        hairy_bases: vec![],
        vertex_blocks: vec![],
    })
}
