use num_bigint::BigUint;

use super::FiniteWord;
use crate::cf::CFExpansion;
use crate::error::{Error, Result};

/// Refuse to materialise standard words longer than this.
pub const MAX_STANDARD_LEN: usize = 1 << 31;

/// One row of the table: `M_k`, `M̃_k`, `D_k`, `D′_k` and `q_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardEntry {
    pub k: usize,
    pub m: FiniteWord,
    pub m_tilde: Option<FiniteWord>,
    pub d: Option<FiniteWord>,
    pub d_prime: Option<FiniteWord>,
    pub q: BigUint,
}

/// Standard words `M_0 … M_K` of one slope.
#[derive(Clone, Debug)]
pub struct StandardWordTable {
    cf: CFExpansion,
    a: Vec<u64>,
    m: Vec<Vec<u8>>,
}

impl StandardWordTable {
    /// `M_0 = 0`, `M_1 = 0^{a₁−1}1`, `M_{k+1} = M_k^{a_{k+1}} M_{k−1}`.
    pub fn build(cf: &CFExpansion, k_max: usize) -> Result<Self> {
        if k_max < 1 {
            return Err(Error::Domain("K must be at least 1".into()));
        }
        let a = cf.quotient_vec(k_max)?;
        let mut len = vec![1u128, a[1] as u128];
        for k in 1..k_max {
            len.push(a[k + 1] as u128 * len[k] + len[k - 1]);
        }
        if len[k_max] > MAX_STANDARD_LEN as u128 {
            return Err(Error::Unsupported(format!(
                "M_{k_max} would have {} letters",
                len[k_max]
            )));
        }
        let mut m: Vec<Vec<u8>> = Vec::with_capacity(k_max + 1);
        m.push(vec![0]);
        let mut m1 = vec![0u8; a[1] as usize - 1];
        m1.push(1);
        m.push(m1);
        for k in 1..k_max {
            let mut next = Vec::with_capacity(len[k + 1] as usize);
            for _ in 0..a[k + 1] {
                next.extend_from_slice(&m[k]);
            }
            next.extend_from_slice(&m[k - 1]);
            m.push(next);
        }
        Ok(StandardWordTable { cf: cf.clone(), a, m })
    }

    pub fn cf(&self) -> &CFExpansion {
        &self.cf
    }

    pub fn levels(&self) -> usize {
        self.m.len() - 1
    }

    /// `a_k` for 1 ≤ k ≤ K.
    pub fn quotient(&self, k: usize) -> u64 {
        self.a[k]
    }

    pub fn m(&self, k: usize) -> &[u8] {
        &self.m[k]
    }

    pub fn q(&self, k: usize) -> usize {
        self.m[k].len()
    }

    /// `M_k M_{k−1}` minus its last two letters.
    pub fn m_tilde(&self, k: usize) -> Vec<u8> {
        assert!(k >= 1);
        let mut w = self.m[k].clone();
        w.extend_from_slice(&self.m[k - 1]);
        w.truncate(w.len() - 2);
        w
    }

    pub fn entry(&self, k: usize) -> StandardEntry {
        let q = BigUint::from(self.q(k));
        if k == 0 {
            return StandardEntry {
                k,
                m: FiniteWord::from_vec_unchecked(self.m[0].clone()),
                m_tilde: None,
                d: None,
                d_prime: None,
                q,
            };
        }
        let mut ab = self.m[k].clone();
        ab.extend_from_slice(&self.m[k - 1]);
        let mut ba = self.m[k - 1].clone();
        ba.extend_from_slice(&self.m[k]);
        let n = ab.len();
        StandardEntry {
            k,
            m: FiniteWord::from_vec_unchecked(self.m[k].clone()),
            m_tilde: Some(FiniteWord::from_vec_unchecked(ab[..n - 2].to_vec())),
            d: Some(FiniteWord::from_vec_unchecked(ab[n - 2..].to_vec())),
            d_prime: Some(FiniteWord::from_vec_unchecked(ba[n - 2..].to_vec())),
            q,
        }
    }
}
