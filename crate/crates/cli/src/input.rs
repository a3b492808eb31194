// SPDX-License-Identifier: MIT
//! Parsing of profile, subset and parameter arguments.

use std::path::Path;

use anyhow::{bail, Context, Result};
use grasscat_core::{KSubset, Profile};

/// Marks an error as a usage error (exit status 1).
#[derive(Debug)]
pub struct Usage(pub String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

#[derive(Debug, Clone, Copy)]
pub struct Kn {
    pub k: usize,
    pub n: usize,
}

pub fn parse_kn(s: &str) -> std::result::Result<Kn, String> {
    let (k, n) = s.split_once(',').ok_or("expected k,n")?;
    let k = k.trim().parse().map_err(|_| format!("bad k in {s:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("bad n in {s:?}"))?;
    Ok(Kn { k, n })
}

pub fn check_kn(kn: Kn, allow_large_k: bool) -> Result<()> {
    if kn.k == 0 || kn.k >= kn.n {
        return Err(usage(format!("need 1 ≤ k < n, got ({}, {})", kn.k, kn.n)));
    }
    if 2 * kn.k > kn.n && !allow_large_k {
        return Err(usage(format!("k = {} exceeds n/2; pass --allow-large-k", kn.k)));
    }
    Ok(())
}

/// Reads a file argument when it names an existing file, else returns it.
fn inline_or_file(arg: &str) -> Result<String> {
    if Path::new(arg).is_file() {
        return std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"));
    }
    Ok(arg.to_string())
}

/// Accepts `359|258|147`, `[[3,5,9],[2,5,8]]`, a JSON profile object, or a file holding one.
pub fn parse_profile(arg: &str, kn: Kn) -> Result<Profile> {
    let text = inline_or_file(arg)?;
    let t = text.trim();
    let p = if t.starts_with('{') {
        serde_json::from_str::<Profile>(t).context("profile JSON")?
    } else if t.starts_with('[') {
        let rows: Vec<Vec<usize>> = serde_json::from_str(t).context("profile rows")?;
        Profile::from_vecs(kn.n, rows)?
    } else {
        Profile::parse(kn.n, t)?
    };
    if p.n() != kn.n || p.k() != kn.k {
        bail!(grasscat_core::Error::Mismatch(format!(
            "profile is over ({}, {}) but --kn is ({}, {})",
            p.k(),
            p.n(),
            kn.k,
            kn.n
        )));
    }
    Ok(p)
}

/// Accepts `1,4,7`, `147` (single-digit labels) or `1 4 7`.
pub fn parse_subset(arg: &str, kn: Kn) -> Result<KSubset> {
    let t = arg.trim();
    let s = if t.contains(',') {
        let e: Vec<usize> = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .with_context(|| format!("subset {t:?}"))?;
        KSubset::new(kn.n, e)?
    } else {
        KSubset::parse(kn.n, t)?
    };
    if s.k() != kn.k {
        bail!(grasscat_core::Error::Mismatch(format!("{s} has {} elements, expected {}", s.k(), kn.k)));
    }
    Ok(s)
}

pub fn parse_vector(arg: &str) -> Result<Vec<i64>> {
    arg.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|x| x.trim().parse::<i64>().with_context(|| format!("entry {x:?}")))
        .collect()
}
