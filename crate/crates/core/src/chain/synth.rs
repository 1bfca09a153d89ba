use super::{Case, Chain};
use crate::cf::CFExpansion;
use crate::error::{Error, Result};
use crate::words::{FiniteWord, StandardWordTable};

/// Length of the prefix pinned down at level `k`, for each k, computed
/// without building words. Saturates at `usize::MAX`.
fn determined_lengths(cf: &CFExpansion, chain: &Chain) -> Result<Vec<usize>> {
    let n = chain.len();
    let a = cf.quotient_vec(n)?;
    let mut q = vec![1usize, a[1] as usize];
    for k in 1..n {
        q.push((a[k + 1] as usize).saturating_mul(q[k]).saturating_add(q[k - 1]));
    }
    let mut w = chain.w1 as usize;
    let mut out = vec![0];
    for k in 1..=n {
        let case = chain.case(k);
        let extra = if case == Case::II { q[k - 1] } else { 0 };
        out.push(
            w.saturating_add(extra)
                .saturating_add(q[k].saturating_mul(2))
                .saturating_add(q[k - 1])
                .saturating_sub(2),
        );
        if k < n {
            match (case, chain.case(k + 1)) {
                (Case::I, Case::III) | (Case::III, _) => {}
                (Case::II, _) => w = w.saturating_add(q[k - 1]),
                (Case::I, _) => {
                    let t = chain.t[&k] as usize;
                    w = w.saturating_add(t.saturating_mul(q[k])).saturating_add(q[k - 1]);
                }
            }
        }
    }
    Ok(out)
}

/// The prefix `W_K [M_{K−1}] M_K M̃_K` determined by the chain at level K.
pub fn synthesize_level(cf: &CFExpansion, chain: &Chain, level: usize) -> Result<FiniteWord> {
    chain.validate(cf)?;
    if level < 1 || level > chain.len() {
        return Err(Error::Domain(format!("level {level} outside 1..={}", chain.len())));
    }
    let table = StandardWordTable::build(cf, level)?;
    let mut w: Vec<u8> = if chain.case(1) == Case::III {
        table.m(0).to_vec()
    } else {
        let m1 = table.m(1);
        m1[m1.len() - chain.w1 as usize..].to_vec()
    };
    for k in 1..level {
        match (chain.case(k), chain.case(k + 1)) {
            (Case::I, Case::III) | (Case::III, _) => {}
            (Case::II, _) => w.extend_from_slice(table.m(k - 1)),
            (Case::I, _) => {
                for _ in 0..chain.t[&k] {
                    w.extend_from_slice(table.m(k));
                }
                w.extend_from_slice(table.m(k - 1));
            }
        }
    }
    if chain.case(level) == Case::II {
        w.extend_from_slice(table.m(level - 1));
    }
    w.extend_from_slice(table.m(level));
    w.extend_from_slice(&table.m_tilde(level));
    Ok(FiniteWord::from_vec_unchecked(w))
}

/// First `len` letters of the word with this locating chain.
pub fn synthesize(cf: &CFExpansion, chain: &Chain, len: usize) -> Result<FiniteWord> {
    chain.validate(cf)?;
    let lens = determined_lengths(cf, chain)?;
    let level = (1..lens.len())
        .find(|&k| lens[k] >= len)
        .ok_or(Error::NeedsMoreLevels {
            requested: len,
            available: *lens.last().unwrap_or(&0),
        })?;
    let mut w = synthesize_level(cf, chain, level)?.into_letters();
    w.truncate(len);
    Ok(FiniteWord::from_vec_unchecked(w))
}
