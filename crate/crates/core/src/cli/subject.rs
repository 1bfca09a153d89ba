use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cf::{CFExpansion, QuadraticNumber};
use crate::chain::{synthesize, Chain, GoldenChain};
use crate::error::{Error, Result};
use crate::words::{FiniteWord, Rounding, WordStream};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RoundingArg {
    Floor,
    Ceil,
}

/// Which infinite word to work on. Without `--rho`, `--chain`, `--word` or
/// `--periodic` the characteristic word of the slope is used.
#[derive(Clone, Debug, Args)]
pub struct SubjectArgs {
    /// Slope as a CF literal (`[0;(1)]`, `[0;1,(2,3)]`) or `quad:(a,b,c,D)`
    #[arg(long, default_value = "[0;(1)]")]
    pub slope: String,
    /// Intercept: `quad:(a,b,c,D)`, `p/q` or an integer (mechanical word)
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["chain", "word", "periodic"])]
    pub rho: Option<String>,
    #[arg(long, value_enum, default_value_t = RoundingArg::Floor)]
    pub rounding: RoundingArg,
    /// Locating chain: letter literal such as `bab(b2a2)` (slope φ) or JSON
    #[arg(long, conflicts_with_all = ["word", "periodic"])]
    pub chain: Option<String>,
    /// Literal 0/1 word
    #[arg(long, conflicts_with = "periodic")]
    pub word: Option<String>,
    /// Eventually periodic word `HEAD:PERIOD`
    #[arg(long)]
    pub periodic: Option<String>,
}

pub enum ChainSpec {
    Golden(GoldenChain),
    Annotated(Chain),
}

pub enum Subject {
    Characteristic,
    Mechanical { rho: QuadraticNumber },
    Chain(ChainSpec),
    Word(FiniteWord),
    Periodic { head: FiniteWord, period: FiniteWord },
}

pub fn parse_slope(s: &str) -> Result<CFExpansion> {
    let s = s.trim();
    if s.starts_with("quad:") {
        crate::cf::quadratic_to_cf(&s.parse()?)
    } else {
        s.parse()
    }
}

pub fn parse_rho(s: &str) -> Result<QuadraticNumber> {
    let s = s.trim();
    if s.starts_with("quad:") {
        return s.parse();
    }
    let bad = || Error::Parse(format!("intercept {s:?} is neither quad:(a,b,c,D) nor p/q"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(QuadraticNumber::from_ratio(&BigRational::new(n, d)))
}

pub fn parse_chain(s: &str, cf: &CFExpansion) -> Result<ChainSpec> {
    let s = s.trim();
    if s.starts_with('{') {
        let c = Chain::from_json(s)?;
        c.validate(cf)?;
        return Ok(ChainSpec::Annotated(c));
    }
    if cf.value().ok() != Some(QuadraticNumber::phi()) {
        return Err(Error::Domain(
            "letter chains describe slope φ; use JSON chains for other slopes".into(),
        ));
    }
    Ok(ChainSpec::Golden(s.parse()?))
}

impl ChainSpec {
    /// Chain cut to `levels`, or all available levels of a finite chain.
    pub fn levels(&self, levels: usize) -> Result<Chain> {
        match self {
            ChainSpec::Golden(g) if g.is_periodic() => g.chain(levels),
            ChainSpec::Golden(g) => g.chain(levels.min(g.preperiod_levels())),
            ChainSpec::Annotated(c) => Ok(c.truncated(levels.min(c.len()))),
        }
    }

    /// Fewest levels that determine `len` letters.
    pub fn chain_for_length(&self, cf: &CFExpansion, len: usize) -> Result<Chain> {
        let max = match self {
            ChainSpec::Golden(g) if g.is_periodic() => 400,
            ChainSpec::Golden(g) => g.preperiod_levels(),
            ChainSpec::Annotated(c) => c.len(),
        };
        let mut last = None;
        for levels in 1..=max {
            let chain = self.levels(levels)?;
            match synthesize(cf, &chain, len) {
                Ok(_) => return Ok(chain),
                Err(e @ Error::NeedsMoreLevels { .. }) => last = Some(e),
                Err(e) => return Err(e),
            }
        }
        Err(last.unwrap_or(Error::NeedsMoreLevels {
            requested: len,
            available: 0,
        }))
    }
}

impl SubjectArgs {
    pub fn cf(&self) -> Result<CFExpansion> {
        parse_slope(&self.slope)
    }

    pub fn subject(&self, cf: &CFExpansion) -> Result<Subject> {
        Ok(if let Some(r) = &self.rho {
            Subject::Mechanical { rho: parse_rho(r)? }
        } else if let Some(c) = &self.chain {
            Subject::Chain(parse_chain(c, cf)?)
        } else if let Some(w) = &self.word {
            Subject::Word(w.parse()?)
        } else if let Some(p) = &self.periodic {
            let (h, p) = p.split_once(':').unwrap_or(("", p));
            Subject::Periodic {
                head: h.parse()?,
                period: p.parse()?,
            }
        } else {
            Subject::Characteristic
        })
    }

    pub fn rounding(&self) -> Rounding {
        match self.rounding {
            RoundingArg::Floor => Rounding::Floor,
            RoundingArg::Ceil => Rounding::Ceil,
        }
    }

    /// A stream able to supply at least `len` letters (chains pick their level).
    pub fn stream(&self, cf: &CFExpansion, len: usize) -> Result<WordStream> {
        Ok(match self.subject(cf)? {
            Subject::Characteristic => WordStream::characteristic(cf.clone()),
            Subject::Mechanical { rho } => WordStream::mechanical(cf.value()?, rho, self.rounding())?,
            Subject::Chain(spec) => WordStream::from_chain(cf.clone(), spec.chain_for_length(cf, len)?),
            Subject::Word(w) => WordStream::literal(w),
            Subject::Periodic { head, period } => WordStream::eventually_periodic(head, period)?,
        })
    }

    pub fn describe(&self) -> String {
        if let Some(r) = &self.rho {
            format!("mechanical slope={} rho={r}", self.slope)
        } else if let Some(c) = &self.chain {
            format!("chain {c} slope={}", self.slope)
        } else if let Some(w) = &self.word {
            format!("word {w}")
        } else if let Some(p) = &self.periodic {
            format!("periodic {p}")
        } else {
            format!("characteristic slope={}", self.slope)
        }
    }
}
