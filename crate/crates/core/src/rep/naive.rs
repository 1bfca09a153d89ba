use crate::error::{Error, Result};

/// r(n) by direct comparison: the smallest m such that the factor ending at
/// position m also starts at some earlier position.
pub fn r_naive(w: &[u8], n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    for m in n + 1..=w.len() {
        let tail = &w[m - n..m];
        if (0..m - n).any(|j| &w[j..j + n] == tail) {
            return Ok(m);
        }
    }
    Err(Error::InsufficientPrefix { n, len: w.len() })
}

/// Quadratic oracle for the whole profile: `r(n) = n + min{j : L(j) ≥ n}`,
/// where `L(j)` is the longest common prefix of the suffix at `j` with any
/// earlier suffix. Entry 0 is unused; unresolved entries are `None`.
pub fn r_oracle_profile(w: &[u8], n_max: usize) -> Vec<Option<usize>> {
    let m = w.len();
    let mut lmax = vec![0usize; m];
    // row[j] = lce(i + 1, j) while processing i
    let mut row = vec![0usize; m + 1];
    let mut next = vec![0usize; m + 1];
    for i in (0..m).rev() {
        for j in i + 1..m {
            next[j] = if w[i] == w[j] { 1 + row[j + 1] } else { 0 };
            lmax[j] = lmax[j].max(next[j]);
        }
        std::mem::swap(&mut row, &mut next);
    }
    let mut r = vec![None; n_max + 1];
    let mut n = 1;
    for (j, &l) in lmax.iter().enumerate() {
        while n <= n_max && l >= n {
            r[n] = Some(n + j);
            n += 1;
        }
    }
    r
}
