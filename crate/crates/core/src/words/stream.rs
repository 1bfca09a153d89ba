use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{FiniteWord, Mechanical, Rounding, StandardWordTable};
use crate::cf::{CFExpansion, QuadraticNumber};
use crate::chain::{synthesize, Chain};
use crate::error::{Error, Result};

/// Where the letters of a stream come from.
#[derive(Clone, Debug)]
pub enum StreamSource {
    Mechanical(Mechanical),
    Characteristic(CFExpansion),
    Chain {
        cf: CFExpansion,
        chain: Chain,
    },
    /// A finite word; requests beyond its end fail.
    Literal(FiniteWord),
    /// `head · period^∞`
    EventuallyPeriodic {
        head: FiniteWord,
        period: FiniteWord,
    },
}

/// Serializable description of a stream.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum SourceDescriptor {
    Mechanical {
        theta: QuadraticNumber,
        rho: QuadraticNumber,
        rounding: Rounding,
    },
    Characteristic {
        slope: String,
    },
    Chain {
        slope: String,
        chain: String,
    },
    Literal {
        word: String,
    },
    EventuallyPeriodic {
        head: String,
        period: String,
    },
}

/// A grow-only prefix of one infinite word.
///
/// Growth takes `&mut self`; share between threads by cloning.
#[derive(Clone, Debug)]
pub struct WordStream {
    source: StreamSource,
    cache: Vec<u8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StreamRecord {
    #[serde(flatten)]
    pub descriptor: SourceDescriptor,
    pub cached_length: usize,
}

impl WordStream {
    pub fn new(source: StreamSource) -> Self {
        WordStream {
            source,
            cache: Vec::new(),
        }
    }

    pub fn mechanical(theta: QuadraticNumber, rho: QuadraticNumber, rounding: Rounding) -> Result<Self> {
        Ok(Self::new(StreamSource::Mechanical(Mechanical::new(
            theta, rho, rounding,
        )?)))
    }

    pub fn characteristic(cf: CFExpansion) -> Self {
        Self::new(StreamSource::Characteristic(cf))
    }

    pub fn from_chain(cf: CFExpansion, chain: Chain) -> Self {
        Self::new(StreamSource::Chain { cf, chain })
    }

    pub fn literal(word: FiniteWord) -> Self {
        Self::new(StreamSource::Literal(word))
    }

    pub fn eventually_periodic(head: FiniteWord, period: FiniteWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Domain("period must be non-empty".into()));
        }
        Ok(Self::new(StreamSource::EventuallyPeriodic { head, period }))
    }

    pub fn source(&self) -> &StreamSource {
        &self.source
    }

    /// Letters generated so far.
    pub fn cached(&self) -> &[u8] {
        &self.cache
    }

    /// Maximum number of letters the source can ever supply.
    pub fn capacity(&self) -> Option<usize> {
        match &self.source {
            StreamSource::Literal(w) => Some(w.len()),
            _ => None,
        }
    }

    pub fn descriptor(&self) -> SourceDescriptor {
        match &self.source {
            StreamSource::Mechanical(m) => SourceDescriptor::Mechanical {
                theta: m.theta().clone(),
                rho: m.rho().clone(),
                rounding: m.rounding(),
            },
            StreamSource::Characteristic(cf) => SourceDescriptor::Characteristic { slope: cf.to_string() },
            StreamSource::Chain { cf, chain } => SourceDescriptor::Chain {
                slope: cf.to_string(),
                chain: chain.to_json(),
            },
            StreamSource::Literal(w) => SourceDescriptor::Literal { word: w.to_ascii() },
            StreamSource::EventuallyPeriodic { head, period } => SourceDescriptor::EventuallyPeriodic {
                head: head.to_ascii(),
                period: period.to_ascii(),
            },
        }
    }

    pub fn record(&self) -> StreamRecord {
        StreamRecord {
            descriptor: self.descriptor(),
            cached_length: self.cache.len(),
        }
    }

    /// Make sure at least `len` letters are cached.
    pub fn ensure(&mut self, len: usize) -> Result<()> {
        if self.cache.len() >= len {
            return Ok(());
        }
        match &self.source {
            StreamSource::Mechanical(m) => {
                let start = self.cache.len() as u64 + 1;
                let more = m.letters(start, len as u64);
                self.cache.extend_from_slice(&more);
            }
            StreamSource::Characteristic(cf) => {
                self.cache = characteristic_prefix(cf, len)?.into_letters();
            }
            StreamSource::Chain { cf, chain } => {
                self.cache = synthesize(cf, chain, len)?.into_letters();
            }
            StreamSource::Literal(w) => {
                if w.len() < len {
                    return Err(Error::PrefixTooShort {
                        needed: len,
                        have: w.len(),
                    });
                }
                self.cache = w.letters().to_vec();
            }
            StreamSource::EventuallyPeriodic { head, period } => {
                while self.cache.len() < len {
                    let i = self.cache.len();
                    let b = if i < head.len() {
                        head[i]
                    } else {
                        period[(i - head.len()) % period.len()]
                    };
                    self.cache.push(b);
                }
            }
        }
        Ok(())
    }

    /// Exactly the first `len` letters.
    pub fn prefix(&mut self, len: usize) -> Result<&[u8]> {
        self.ensure(len)?;
        Ok(&self.cache[..len])
    }
}

/// Prefix of `c_θ = lim M_k`, read off the first standard word long enough.
pub fn characteristic_prefix(cf: &CFExpansion, len: usize) -> Result<FiniteWord> {
    // M_k is a prefix of M_{k+1} for k ≥ 1
    let mut q_prev = 1usize;
    let mut q = cf.quotient(1)? as usize;
    let mut k = 1;
    while q < len {
        let a = cf.quotient(k + 1)? as usize;
        let next = a
            .checked_mul(q)
            .and_then(|x| x.checked_add(q_prev))
            .ok_or_else(|| Error::Unsupported("prefix too long".into()))?;
        q_prev = q;
        q = next;
        k += 1;
    }
    let table = StandardWordTable::build(cf, k.max(1))?;
    Ok(FiniteWord::from_vec_unchecked(table.m(k)[..len].to_vec()))
}

/// `Σ_{k≤terms} x_k/b^k` together with the tail bound `1/(b^terms (b−1))`.
pub fn sturmian_number(stream: &mut WordStream, base: u32, terms: usize) -> Result<(BigRational, BigRational)> {
    if base < 2 || terms < 1 {
        return Err(Error::Domain("need base ≥ 2 and terms ≥ 1".into()));
    }
    let letters = stream.prefix(terms)?;
    let b = BigInt::from(base);
    let mut num = BigInt::zero();
    for &x in letters {
        num = num * &b + BigInt::from(x);
    }
    let den = b.pow(terms as u32);
    let err = BigRational::new(BigInt::one(), &den * (&b - BigInt::one()));
    Ok((BigRational::new(num, den), err))
}
