use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::QuadraticNumber;
use crate::error::{Error, Result};

pub type QuotientFn = Arc<dyn Fn(usize) -> Option<u64> + Send + Sync>;

/// Where the partial quotients a₁, a₂, … come from.
#[derive(Clone)]
pub enum Quotients {
    Finite(Vec<u64>),
    Periodic {
        pre: Vec<u64>,
        period: Vec<u64>,
    },
    /// `gen(n)` yields aₙ for n ≥ 1, or `None` once exhausted.
    Bounded {
        bound: u64,
        label: String,
        gen: QuotientFn,
    },
}

impl fmt::Debug for Quotients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quotients::Finite(v) => f.debug_tuple("Finite").field(v).finish(),
            Quotients::Periodic { pre, period } => f
                .debug_struct("Periodic")
                .field("pre", pre)
                .field("period", period)
                .finish(),
            Quotients::Bounded { bound, label, .. } => f
                .debug_struct("Bounded")
                .field("bound", bound)
                .field("label", label)
                .finish(),
        }
    }
}

/// A continued fraction `[a₀; a₁, a₂, …]`.
#[derive(Clone, Debug)]
pub struct CFExpansion {
    a0: i64,
    quotients: Quotients,
}

/// `p_k/q_k`, with `k = −1` giving `1/0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergent {
    pub k: i64,
    pub p: BigInt,
    pub q: BigInt,
}

fn check_positive(v: &[u64]) -> Result<()> {
    if v.contains(&0) {
        return Err(Error::Domain("partial quotients must be positive".into()));
    }
    Ok(())
}

impl CFExpansion {
    pub fn finite(a0: i64, quotients: Vec<u64>) -> Result<Self> {
        check_positive(&quotients)?;
        Ok(CFExpansion {
            a0,
            quotients: Quotients::Finite(quotients),
        })
    }

    pub fn periodic(a0: i64, pre: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Domain("period must be non-empty".into()));
        }
        check_positive(&pre)?;
        check_positive(&period)?;
        Ok(CFExpansion {
            a0,
            quotients: Quotients::Periodic { pre, period },
        })
    }

    pub fn bounded(a0: i64, bound: u64, label: impl Into<String>, gen: QuotientFn) -> Self {
        CFExpansion {
            a0,
            quotients: Quotients::Bounded {
                bound,
                label: label.into(),
                gen,
            },
        }
    }

    /// φ = [0; 1̄]
    pub fn golden() -> Self {
        Self::periodic(0, vec![], vec![1]).expect("valid")
    }

    pub fn a0(&self) -> i64 {
        self.a0
    }

    pub fn source(&self) -> &Quotients {
        &self.quotients
    }

    pub fn is_eventually_periodic(&self) -> bool {
        matches!(self.quotients, Quotients::Periodic { .. })
    }

    /// Declared or structural bound on the partial quotients, if any.
    pub fn bound(&self) -> Option<u64> {
        match &self.quotients {
            Quotients::Finite(v) => Some(v.iter().copied().max().unwrap_or(1)),
            Quotients::Periodic { pre, period } => pre.iter().chain(period).copied().max(),
            Quotients::Bounded { bound, .. } => Some(*bound),
        }
    }

    /// Exact value of an eventually periodic expansion.
    pub fn value(&self) -> Result<QuadraticNumber> {
        let Quotients::Periodic { pre, period } = &self.quotients else {
            return Err(Error::Unsupported(
                "exact value needs an eventually periodic expansion".into(),
            ));
        };
        let mut x = super::purely_periodic_value(period);
        for &a in pre.iter().rev() {
            x = QuadraticNumber::from_integer(a) + x.recip()?;
        }
        Ok(QuadraticNumber::from_integer(self.a0) + x.recip()?)
    }

    /// aₙ for n ≥ 1.
    pub fn quotient(&self, n: usize) -> Result<u64> {
        assert!(n >= 1, "partial quotients are indexed from 1");
        match &self.quotients {
            Quotients::Finite(v) => v.get(n - 1).copied().ok_or(Error::SourceExhausted { needed: n }),
            Quotients::Periodic { pre, period } => Ok(if n <= pre.len() {
                pre[n - 1]
            } else {
                period[(n - 1 - pre.len()) % period.len()]
            }),
            Quotients::Bounded { bound, gen, .. } => {
                let a = gen(n).ok_or(Error::SourceExhausted { needed: n })?;
                if a == 0 || a > *bound {
                    return Err(Error::Domain(format!("quotient a_{n} = {a} violates bound {bound}")));
                }
                Ok(a)
            }
        }
    }

    /// `[0, a₁, …, a_n]`; index 0 is a placeholder so that `v[k] = a_k`.
    pub fn quotient_vec(&self, n: usize) -> Result<Vec<u64>> {
        let mut v = Vec::with_capacity(n + 1);
        v.push(0);
        for k in 1..=n {
            v.push(self.quotient(k)?);
        }
        Ok(v)
    }

    pub fn convergents(&self, k_max: i64) -> Result<Vec<Convergent>> {
        if k_max < -1 {
            return Err(Error::Domain("k_max must be at least -1".into()));
        }
        let mut out = vec![Convergent {
            k: -1,
            p: BigInt::one(),
            q: BigInt::zero(),
        }];
        if k_max >= 0 {
            out.push(Convergent {
                k: 0,
                p: BigInt::from(self.a0),
                q: BigInt::one(),
            });
        }
        for k in 1..=k_max.max(0) as usize {
            let a = BigInt::from(self.quotient(k)?);
            let (prev, cur) = (&out[k - 1], &out[k]);
            let next = Convergent {
                k: k as i64,
                p: &a * &cur.p + &prev.p,
                q: &a * &cur.q + &prev.q,
            };
            out.push(next);
        }
        Ok(out)
    }

    /// `q_0, …, q_k` as unsigned integers.
    pub fn denominators(&self, k: usize) -> Result<Vec<BigUint>> {
        let mut q = vec![BigUint::one()];
        let mut prev = BigUint::zero();
        for n in 1..=k {
            let next = BigUint::from(self.quotient(n)?) * &q[n - 1] + &prev;
            prev = q[n - 1].clone();
            q.push(next);
        }
        Ok(q)
    }

    /// The ordered interval between `p_k/q_k` and `p_{k+1}/q_{k+1}`.
    pub fn eval_bracket(&self, k: usize) -> Result<(BigRational, BigRational)> {
        if k < 1 {
            return Err(Error::Domain("bracket level must be at least 1".into()));
        }
        let c = self.convergents(k as i64 + 1)?;
        let x = BigRational::new(c[k + 1].p.clone(), c[k + 1].q.clone());
        let y = BigRational::new(c[k + 2].p.clone(), c[k + 2].q.clone());
        Ok(if x <= y { (x, y) } else { (y, x) })
    }

    /// `[1; 1 + a_k, a_{k−1}, …, a₁]` exactly.
    pub fn mirror_value(&self, k: usize) -> Result<BigRational> {
        if k < 1 {
            return Err(Error::Domain("mirror level must be at least 1".into()));
        }
        let a = self.quotient_vec(k)?;
        let mut acc = BigRational::from_integer(BigInt::from(a[1]));
        for &ai in &a[2..k.max(2)] {
            acc = BigRational::from_integer(BigInt::from(ai)) + acc.recip();
        }
        let top = BigRational::from_integer(BigInt::from(a[k] + 1));
        let inner = if k == 1 { top } else { top + acc.recip() };
        Ok(BigRational::one() + inner.recip())
    }
}

/// Expand an irrational `x ∈ (0,1)` of a real quadratic field.
pub fn quadratic_to_cf(x: &QuadraticNumber) -> Result<CFExpansion> {
    if x.is_rational() {
        return Err(Error::NotIrrational);
    }
    if x.signum() != std::cmp::Ordering::Greater || x >= &QuadraticNumber::one() {
        return Err(Error::Domain("expected 0 < x < 1".into()));
    }
    // rewrite x = (P + √d)/Q with Q | d − P²
    let (mut a, mut b, mut c) = (x.a().clone(), x.b().clone(), x.c().clone());
    if b.is_negative() {
        a = -a;
        b = -b;
        c = -c;
    }
    let d = &b * &b * BigInt::from(x.d()) * &c * &c;
    let mut p = &a * c.abs();
    let mut q = &c * c.abs();
    let s = d.sqrt();
    let floor_state = |p: &BigInt, q: &BigInt| -> BigInt {
        if q.is_positive() {
            (p + &s).div_floor(q)
        } else {
            let t: BigInt = (p + &s).div_floor(&-q);
            -(t + BigInt::one())
        }
    };

    let a0 = floor_state(&p, &q);
    debug_assert!(a0.is_zero());
    let step = |p: &BigInt, q: &BigInt, an: &BigInt| -> (BigInt, BigInt) {
        let p2 = an * q - p;
        let q2 = (&d - &p2 * &p2) / q;
        (p2, q2)
    };
    let (np, nq) = step(&p, &q, &a0);
    p = np;
    q = nq;

    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut quotients: Vec<u64> = Vec::new();
    loop {
        let n = quotients.len() + 1;
        if let Some(&first) = seen.get(&(p.clone(), q.clone())) {
            let pre = quotients[..first - 1].to_vec();
            let period = quotients[first - 1..].to_vec();
            return CFExpansion::periodic(0, pre, period);
        }
        seen.insert((p.clone(), q.clone()), n);
        let an = floor_state(&p, &q);
        let an_u = an
            .to_u64()
            .ok_or_else(|| Error::Unsupported("partial quotient exceeds 64 bits".into()))?;
        quotients.push(an_u);
        let (np, nq) = step(&p, &q, &an);
        p = np;
        q = nq;
    }
}

impl fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match &self.quotients {
            Quotients::Finite(v) => write!(f, "[{};{}]", self.a0, join(v)),
            Quotients::Periodic { pre, period } => {
                if pre.is_empty() {
                    write!(f, "[{};({})]", self.a0, join(period))
                } else {
                    write!(f, "[{};{},({})]", self.a0, join(pre), join(period))
                }
            }
            Quotients::Bounded { bound, label, .. } => write!(f, "stream:{label}<={bound}"),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad partial quotient {t:?}")))
        })
        .collect()
}

impl FromStr for CFExpansion {
    type Err = Error;

    /// Accepts `[0;1,2,3]`, `[0;1,(2,3)]` and `quad:(a,b,c,D)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with("quad:") {
            let x: QuadraticNumber = s.parse()?;
            return quadratic_to_cf(&x);
        }
        let body = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [a0;...], got {s:?}")))?;
        let (head, rest) = body.split_once(';').unwrap_or((body, ""));
        let a0: i64 = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer part {head:?}")))?;
        match rest.find('(') {
            None => CFExpansion::finite(a0, parse_list(rest)?),
            Some(open) => {
                let close = rest
                    .rfind(')')
                    .filter(|&c| c > open && rest[c + 1..].trim().is_empty())
                    .ok_or_else(|| Error::Parse("period group must close the literal".into()))?;
                let pre_txt = rest[..open].trim().trim_end_matches(',');
                CFExpansion::periodic(a0, parse_list(pre_txt)?, parse_list(&rest[open + 1..close])?)
            }
        }
    }
}
