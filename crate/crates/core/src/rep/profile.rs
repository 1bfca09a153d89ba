use std::io::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::SuffixAutomaton;
use crate::error::{Error, Result};
use crate::words::WordStream;

/// r(n) for n ≤ N together with Λ and consecutive ratios.
#[derive(Clone, Debug, Serialize)]
pub struct RepProfile {
    pub n_max: usize,
    /// `r[n]`, with `r[0] = 0` unused.
    pub r: Vec<usize>,
    pub lambda: Vec<usize>,
    /// `n_i / n_{i+1}` over consecutive Λ elements.
    #[serde(skip)]
    pub ratios: Vec<BigRational>,
    pub prefix_len: usize,
}

impl RepProfile {
    /// Build from a resolved r array (index 0 ignored).
    pub fn from_r(r: Vec<usize>, prefix_len: usize) -> Self {
        let n_max = r.len().saturating_sub(1);
        let lambda = lambda_set(&r);
        let ratios = lambda
            .windows(2)
            .map(|p| BigRational::new(BigInt::from(p[0]), BigInt::from(p[1])))
            .collect();
        RepProfile {
            n_max,
            r,
            lambda,
            ratios,
            prefix_len,
        }
    }

    pub fn in_lambda(&self, n: usize) -> bool {
        self.lambda.binary_search(&n).is_ok()
    }

    /// `n,r(n),r(n)/n,in_lambda` rows.
    pub fn write_csv(&self, mut out: impl Write) -> Result<()> {
        writeln!(out, "n,r(n),r(n)/n,in_lambda")?;
        for n in 1..=self.n_max {
            let r = self.r[n];
            writeln!(out, "{n},{r},{:.6},{}", r as f64 / n as f64, self.in_lambda(n) as u8)?;
        }
        Ok(())
    }

    /// Two-column `n,r(n)/n` plot data.
    pub fn write_plot(&self, mut out: impl Write) -> Result<()> {
        writeln!(out, "n,ratio")?;
        for n in 1..=self.n_max {
            writeln!(out, "{n},{:.6}", self.r[n] as f64 / n as f64)?;
        }
        Ok(())
    }
}

/// `{n ≥ 1 : r[n] = 2n + 1}`
pub fn lambda_set(r: &[usize]) -> Vec<usize> {
    (1..r.len()).filter(|&n| r[n] == 2 * n + 1).collect()
}

/// Incremental profile: feed letters into a suffix automaton and read off
/// `r(n) = min{m : ℓ(m) ≥ n}`. Letters are requested lazily, capped at 64·N.
pub fn r_profile(stream: &mut WordStream, n_max: usize) -> Result<RepProfile> {
    if n_max == 0 {
        return Err(Error::Domain("N must be positive".into()));
    }
    let cap = n_max.saturating_mul(64);
    let mut sam = SuffixAutomaton::with_capacity(2 * n_max + 2);
    let mut r = vec![0usize; n_max + 1];
    let mut n = 1;
    let mut m = 0;
    let mut chunk = 2 * n_max + 2;
    while n <= n_max {
        let target = (m + chunk).min(cap);
        if target <= m {
            return Err(Error::PrefixCap { n, cap });
        }
        let have = match stream.capacity() {
            Some(c) => target.min(c),
            None => target,
        };
        if have <= m {
            return Err(Error::InsufficientPrefix { n, len: m });
        }
        let letters = stream.prefix(have)?;
        for &c in &letters[m..have] {
            m += 1;
            let l = sam.push(c);
            while n <= n_max && l >= n {
                r[n] = m;
                n += 1;
            }
            if n > n_max {
                break;
            }
        }
        chunk *= 2;
    }
    Ok(RepProfile::from_r(r, m))
}

/// r(n) for n ≤ N on a finite word; `None` where no repeat exists yet.
pub fn r_profile_word(w: &[u8], n_max: usize) -> Vec<Option<usize>> {
    let mut sam = SuffixAutomaton::with_capacity(w.len());
    let mut r = vec![None; n_max + 1];
    let mut n = 1;
    for (i, &c) in w.iter().enumerate() {
        let l = sam.push(c);
        while n <= n_max && l >= n {
            r[n] = Some(i + 1);
            n += 1;
        }
        if n > n_max {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::CFExpansion;
    use crate::words::FiniteWord;

    #[test]
    fn golden_lambda_head() {
        let mut s = WordStream::characteristic(CFExpansion::golden());
        let p = r_profile(&mut s, 12).unwrap();
        assert_eq!(p.lambda, vec![1, 2, 4, 7, 12]);
        assert_eq!(p.r[4], 9);
    }

    #[test]
    fn periodic_word_has_finite_lambda() {
        let mut s = WordStream::eventually_periodic(FiniteWord::default(), "01".parse().unwrap()).unwrap();
        let p = r_profile(&mut s, 100).unwrap();
        assert!((3..=100).all(|n| p.r[n] <= 2 * n));
    }

    #[test]
    fn literal_too_short() {
        let mut s = WordStream::literal("0110".parse().unwrap());
        assert!(r_profile(&mut s, 10).is_err());
    }

    #[test]
    fn csv_dump() {
        let mut s = WordStream::characteristic(CFExpansion::golden());
        let p = r_profile(&mut s, 3).unwrap();
        let mut buf = Vec::new();
        p.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,r(n),r(n)/n,in_lambda\n1,3,3.000000,1\n2,5,2.500000,1\n3,6,2.000000,0\n"
        );
    }
}
