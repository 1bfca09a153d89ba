use serde::Serialize;

use super::{GoldenChain, Letter};
use crate::error::{Error, Result};

/// Run-length statistics of a slope-φ chain `c · a^{m₁} b^{l₁} a^{m₂} b^{l₂} …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenChainStats {
    pub c_prefix: String,
    pub m: Vec<usize>,
    pub l: Vec<usize>,
    /// `e_i` when the tail reads `u (b²a²)^{e₁} ba (b²a²)^{e₂} ba …`
    pub e: Option<Vec<usize>>,
}

fn runs(letters: &[Letter]) -> Vec<(Letter, usize)> {
    let mut out: Vec<(Letter, usize)> = Vec::new();
    for &l in letters {
        match out.last_mut() {
            Some((last, n)) if *last == l => *n += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

/// Statistics over the first `horizon` letters. The last run is dropped since
/// its length is not determined within the horizon.
pub fn chain_stats(chain: &GoldenChain, horizon: usize) -> Result<GoldenChainStats> {
    let letters = chain.letters(horizon);
    let mut rs = runs(&letters);
    rs.pop();
    let first = (1..rs.len())
        .find(|&i| rs[i].0 == Letter::A && rs[i - 1].0 == Letter::B)
        .ok_or_else(|| Error::StatsUndefined("tail uses a single letter within the horizon".into()))?;
    let mut c_prefix = String::new();
    if chain.leading_iii {
        c_prefix.push_str("(iii)");
    }
    for &(l, n) in &rs[..first] {
        c_prefix.extend(std::iter::repeat_n(l.as_char(), n));
    }
    let tail = &rs[first..];
    let m: Vec<usize> = tail.iter().filter(|r| r.0 == Letter::A).map(|r| r.1).collect();
    let l: Vec<usize> = tail.iter().filter(|r| r.0 == Letter::B).map(|r| r.1).collect();
    if l.is_empty() {
        return Err(Error::StatsUndefined("no complete b-chain within the horizon".into()));
    }
    Ok(GoldenChainStats {
        c_prefix,
        m,
        l,
        e: e_decomposition(tail),
    })
}

/// Pairs (b-run, following a-run) drawn from {(2,2), (1,1)} from some point on.
fn e_decomposition(tail: &[(Letter, usize)]) -> Option<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = tail
        .windows(2)
        .filter(|w| w[0].0 == Letter::B)
        .map(|w| (w[0].1, w[1].1))
        .collect();
    let ok = |p: &(usize, usize)| *p == (2, 2) || *p == (1, 1);
    let mut start = pairs.len();
    while start > 0 && ok(&pairs[start - 1]) {
        start -= 1;
    }
    let mut e = Vec::new();
    let mut count = 0;
    for p in &pairs[start..] {
        if *p == (2, 2) {
            count += 1;
        } else {
            e.push(count);
            count = 0;
        }
    }
    (!e.is_empty()).then_some(e)
}
