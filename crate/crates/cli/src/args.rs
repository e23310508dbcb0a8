//! Flag-value parsers. Every error names the offending token so the
//! single-line diagnostics stay machine-parseable.

use anyhow::{bail, Result};
use lplab_core::Exponent;

/// Comma-separated integers and inclusive ranges: "3..10", "3,4,5", "3..5,9".
pub fn parse_size_list(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        if item.is_empty() {
            bail!("empty item in list '{text}'");
        }
        if let Some((a, b)) = item.split_once("..") {
            let lo: usize = a
                .trim()
                .parse()
                .map_err(|_| anyhow::anyhow!("bad range start '{a}'"))?;
            let hi: usize = b
                .trim()
                .parse()
                .map_err(|_| anyhow::anyhow!("bad range end '{b}'"))?;
            if lo > hi {
                bail!("range '{item}' is empty");
            }
            out.extend(lo..=hi);
        } else {
            out.push(
                item.parse()
                    .map_err(|_| anyhow::anyhow!("bad integer '{item}'"))?,
            );
        }
    }
    if out.is_empty() {
        bail!("list '{text}' is empty");
    }
    Ok(out)
}

/// Comma-separated exponents: decimals in (1, 1e6], "1", or "inf".
pub fn parse_exponent_list(text: &str) -> Result<Vec<Exponent>> {
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        out.push(
            item.parse::<Exponent>()
                .map_err(|_| anyhow::anyhow!("bad exponent '{item}' (want a decimal in (1, 1e6], 1, or inf)"))?,
        );
    }
    if out.is_empty() {
        bail!("list '{text}' is empty");
    }
    Ok(out)
}

/// One exponent.
pub fn parse_exponent(text: &str) -> Result<Exponent> {
    let list = parse_exponent_list(text)?;
    if list.len() != 1 {
        bail!("expected a single exponent, got '{text}'");
    }
    Ok(list[0])
}

/// Comma-separated reals: "2,1,-4".
pub fn parse_dense(text: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        let v: f64 = item
            .parse()
            .map_err(|_| anyhow::anyhow!("bad number '{item}'"))?;
        if !v.is_finite() {
            bail!("non-finite number '{item}'");
        }
        out.push(v);
    }
    if out.is_empty() {
        bail!("vector '{text}' is empty");
    }
    Ok(out)
}

/// Sparse literal: comma-separated index:value pairs, e.g. "0:1,5:-2.5".
/// An empty string is the zero sequence.
pub fn parse_sparse(text: &str) -> Result<Vec<(i64, f64)>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        let (idx, val) = item
            .split_once(':')
            .ok_or_else(|| anyhow::anyhow!("bad entry '{item}' (want index:value)"))?;
        let idx: i64 = idx
            .trim()
            .parse()
            .map_err(|_| anyhow::anyhow!("bad index '{idx}'"))?;
        let val: f64 = val
            .trim()
            .parse()
            .map_err(|_| anyhow::anyhow!("bad value '{val}'"))?;
        if !val.is_finite() {
            bail!("non-finite value '{val}'");
        }
        out.push((idx, val));
    }
    Ok(out)
}
