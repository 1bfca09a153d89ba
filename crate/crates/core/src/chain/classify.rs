use num_bigint::BigUint;
use num_traits::Zero;

use super::{Case, Chain, LevelState};
use crate::cf::CFExpansion;
use crate::error::{Error, Result};
use crate::words::{StandardWordTable, WordStream};

/// Letters needed to decide the case at level `k`: `3q_k + 2q_{k−1} − 2`.
pub fn required_len(table: &StandardWordTable, k: usize) -> usize {
    3 * table.q(k) + 2 * table.q(k - 1) - 2
}

/// Z-array of `s`.
fn z_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        if i < r {
            z[i] = z[i - l].min(r - i);
        }
        while i + z[i] < n && s[z[i]] == s[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}

/// Start positions `s ≤ max_start` of `pattern` inside `text`.
fn occurrences(pattern: &[u8], text: &[u8], max_start: usize) -> Vec<usize> {
    let end = (max_start + pattern.len()).min(text.len());
    let mut buf = Vec::with_capacity(pattern.len() + 1 + end);
    buf.extend_from_slice(pattern);
    buf.push(2);
    buf.extend_from_slice(&text[..end]);
    let z = z_array(&buf);
    let off = pattern.len() + 1;
    (0..=max_start.min(end))
        .filter(|&s| off + s < buf.len() && z[off + s] >= pattern.len())
        .collect()
}

/// Every `(case, |W_k|)` such that `x` starts with `W_k` followed by the case's continuation.
pub fn level_candidates(x: &[u8], table: &StandardWordTable, k: usize) -> Result<Vec<(Case, usize)>> {
    assert!(k >= 1 && k <= table.levels());
    let need = required_len(table, k);
    if x.len() < need {
        return Err(Error::PrefixTooShort {
            needed: need,
            have: x.len(),
        });
    }
    let mk = table.m(k);
    let mk1 = table.m(k - 1);
    let mut tail = mk.to_vec();
    tail.extend_from_slice(&table.m_tilde(k));
    let mut tail_ii = mk1.to_vec();
    tail_ii.extend_from_slice(&tail);

    let mut found = Vec::new();
    for (case, src, pat) in [(Case::I, mk, &tail), (Case::II, mk, &tail_ii), (Case::III, mk1, &tail)] {
        for s in occurrences(pat, x, src.len()) {
            if s >= 1 && x[..s] == src[src.len() - s..] {
                found.push((case, s));
            }
        }
    }
    Ok(found)
}

/// The unique case and |W_k| of `x` at level `k`.
pub fn classify_level(x: &[u8], table: &StandardWordTable, k: usize) -> Result<(Case, usize)> {
    let found = level_candidates(x, table, k)?;
    match found.len() {
        1 => Ok(found[0]),
        0 => Err(Error::NotSturmian { k }),
        n => Err(Error::Ambiguous { k, count: n }),
    }
}

/// Classify levels 1..=K and check every consecutive pair against Table 1.
pub fn chain_of(x: &[u8], table: &StandardWordTable, k_max: usize) -> Result<(Chain, Vec<LevelState>)> {
    if k_max < 1 || k_max > table.levels() {
        return Err(Error::Domain(format!("level {k_max} outside 1..={}", table.levels())));
    }
    let mut raw = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        raw.push(classify_level(x, table, k)?);
    }
    let mut chain = Chain::new(raw.iter().map(|r| r.0).collect());
    chain.w1 = raw[0].1 as u64;
    let mut states = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let (case, w) = raw[k - 1];
        let (qk, qk1) = (table.q(k), table.q(k - 1));
        let mut t = None;
        if k < k_max {
            let (next, w2) = raw[k];
            let fail = |msg: String| Error::Consistency { k, msg };
            match (case, next) {
                (Case::I, Case::III) | (Case::III, Case::I | Case::II) => {
                    if w2 != w {
                        return Err(fail(format!("|W| changed {w} -> {w2}")));
                    }
                }
                (Case::II, Case::I | Case::II) => {
                    if w2 != w + qk1 {
                        return Err(fail(format!("|W| {w} -> {w2}, expected +q_(k-1)")));
                    }
                }
                (Case::I, Case::I | Case::II) => {
                    let diff = w2 as i64 - w as i64 - qk1 as i64;
                    if diff <= 0 || diff % qk as i64 != 0 {
                        return Err(fail(format!("|W| {w} -> {w2} is not w + t·q_k + q_(k-1)")));
                    }
                    let tk = (diff / qk as i64) as u64;
                    let max = table_quotient(table, k + 1) - 1;
                    if tk > max {
                        return Err(Error::TOutOfRange { k, t: tk, max });
                    }
                    t = Some(tk);
                    chain.t.insert(k, tk);
                }
                (from, to) => {
                    return Err(Error::InvalidTransition {
                        k,
                        from: from.to_string(),
                        to: to.to_string(),
                    })
                }
            }
        }
        states.push(LevelState {
            k,
            case,
            w_len: BigUint::from(w),
            q_k: BigUint::from(qk),
            q_km1: BigUint::from(qk1),
            t,
        });
    }
    Ok((chain, states))
}

fn table_quotient(table: &StandardWordTable, k: usize) -> u64 {
    if k <= table.levels() {
        table.quotient(k)
    } else {
        table.cf().quotient(k).unwrap_or(1)
    }
}

/// `chain_of` on a stream, growing it as far as level K requires.
pub fn chain_of_stream(stream: &mut WordStream, cf: &CFExpansion, k_max: usize) -> Result<(Chain, Vec<LevelState>)> {
    let table = StandardWordTable::build(cf, k_max)?;
    let need = required_len(&table, k_max);
    let x = stream.prefix(need)?;
    chain_of(x, &table, k_max)
}

/// Rebuild symbolic level states from an annotated chain, without words.
pub fn states_from_chain(cf: &CFExpansion, chain: &Chain) -> Result<Vec<LevelState>> {
    chain.validate(cf)?;
    let n = chain.len();
    let q = cf.denominators(n + 1)?;
    let mut w = BigUint::from(chain.w1);
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let case = chain.case(k);
        let t = chain.t.get(&k).copied();
        out.push(LevelState {
            k,
            case,
            w_len: w.clone(),
            q_k: q[k].clone(),
            q_km1: q[k - 1].clone(),
            t,
        });
        if k < n {
            match (case, chain.case(k + 1)) {
                (Case::I, Case::III) | (Case::III, _) => {}
                (Case::II, _) => w += &q[k - 1],
                (Case::I, _) => w += &q[k] * BigUint::from(t.expect("validated")) + &q[k - 1],
            }
        }
    }
    Ok(out)
}

/// Chain of the characteristic word: (ii) when a_{k+1} = 1, else (i) with
/// t = a_{k+1} − 1, and W_k = M_k throughout.
pub fn characteristic_chain(cf: &CFExpansion, levels: usize) -> Result<Chain> {
    let a = cf.quotient_vec(levels + 1)?;
    let mut chain = Chain::new(Vec::with_capacity(levels));
    for k in 1..=levels {
        if a[k + 1] == 1 {
            chain.cases.push(Case::II);
        } else {
            chain.cases.push(Case::I);
            if k < levels {
                chain.t.insert(k, a[k + 1] - 1);
            }
        }
    }
    chain.w1 = a[1];
    Ok(chain)
}

/// |W_k| must fit the case bounds.
pub fn check_state_bounds(s: &LevelState) -> bool {
    let cap = if s.case == Case::III { &s.q_km1 } else { &s.q_k };
    !s.w_len.is_zero() && &s.w_len <= cap
}
