use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cf::CFExpansion;
use crate::error::{Error, Result};

/// The three alignment cases of a word against `M_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::I => "i",
            Case::II => "ii",
            Case::III => "iii",
        })
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().trim_matches(|c| c == '(' || c == ')') {
            "i" => Ok(Case::I),
            "ii" => Ok(Case::II),
            "iii" => Ok(Case::III),
            other => Err(Error::Parse(format!("unknown case {other:?}"))),
        }
    }
}

/// Classification of one level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelState {
    pub k: usize,
    pub case: Case,
    #[serde(serialize_with = "crate::serde_util::biguint_str")]
    pub w_len: BigUint,
    #[serde(serialize_with = "crate::serde_util::biguint_str")]
    pub q_k: BigUint,
    #[serde(serialize_with = "crate::serde_util::biguint_str")]
    pub q_km1: BigUint,
    /// multiplicity of an (i)→(i)/(ii) step from this level
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
}

impl LevelState {
    /// η_k = q_{k−1}/q_k
    pub fn eta(&self) -> f64 {
        crate::numeric::rational_to_f64(&num_rational::BigRational::new(
            self.q_km1.clone().into(),
            self.q_k.clone().into(),
        ))
    }

    /// t_k = |W_k|/q_k
    pub fn t_ratio(&self) -> f64 {
        crate::numeric::rational_to_f64(&num_rational::BigRational::new(
            self.w_len.clone().into(),
            self.q_k.clone().into(),
        ))
    }
}

fn default_w1() -> u64 {
    1
}

/// A locating chain with the annotations needed to pin down a word.
///
/// `cases[k−1]` is the case at level k. `t[k]` is the multiplicity of the
/// (i)→(i)/(ii) step from level k to k+1. `w1` is |W₁|.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub cases: Vec<Case>,
    #[serde(default)]
    pub t: BTreeMap<usize, u64>,
    #[serde(default = "default_w1")]
    pub w1: u64,
}

impl Chain {
    pub fn new(cases: Vec<Case>) -> Self {
        Chain {
            cases,
            t: BTreeMap::new(),
            w1: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.cases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cases.is_empty()
    }

    /// First level of the {a,b} description: 2 after a leading (iii), else 1.
    pub fn start_level(&self) -> usize {
        if self.cases.first() == Some(&Case::III) {
            2
        } else {
            1
        }
    }

    pub fn case(&self, k: usize) -> Case {
        self.cases[k - 1]
    }

    pub fn truncated(&self, levels: usize) -> Chain {
        Chain {
            cases: self.cases[..levels.min(self.cases.len())].to_vec(),
            t: self.t.range(..levels).map(|(&k, &t)| (k, t)).collect(),
            w1: self.w1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("chain serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Check Table-1 validity and annotation bounds against the slope.
    pub fn validate(&self, cf: &CFExpansion) -> Result<()> {
        if self.cases.is_empty() {
            return Err(Error::Domain("empty chain".into()));
        }
        let n = self.cases.len();
        let a = cf.quotient_vec(n)?;
        let w1_max = if self.cases[0] == Case::III { 1 } else { a[1] };
        if self.w1 < 1 || self.w1 > w1_max {
            return Err(Error::Domain(format!("w1 = {} outside 1..={w1_max}", self.w1)));
        }
        if let Some((&k, _)) = self.t.range(n..).next() {
            return Err(Error::Domain(format!("t annotation at level {k} beyond the chain")));
        }
        if self.t.contains_key(&0) {
            return Err(Error::Domain("t annotation at level 0".into()));
        }
        for k in 1..n {
            let (from, to) = (self.cases[k - 1], self.cases[k]);
            let t = self.t.get(&k).copied();
            match (from, to) {
                (Case::I, Case::I | Case::II) => {
                    let max = a[k + 1] - 1;
                    let t = t.ok_or_else(|| Error::Domain(format!("missing t at level {k}")))?;
                    if t < 1 || t > max {
                        return Err(Error::TOutOfRange { k, t, max });
                    }
                }
                (Case::II | Case::III, Case::III) => {
                    return Err(Error::InvalidTransition {
                        k,
                        from: from.to_string(),
                        to: to.to_string(),
                    })
                }
                _ => {
                    if t.is_some() {
                        return Err(Error::Domain(format!("unexpected t at level {k}")));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            write!(f, "({c})")?;
        }
        Ok(())
    }
}

/// Letter of the golden alphabet: `a = (i)(iii)`, `b = (ii)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn levels(self) -> usize {
        match self {
            Letter::A => 2,
            Letter::B => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// A slope-φ chain written over {a, b}: optional leading (iii), a finite
/// prefix, and an optional period.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GoldenChain {
    pub leading_iii: bool,
    pub prefix: Vec<Letter>,
    pub period: Vec<Letter>,
}

impl GoldenChain {
    pub fn periodic(prefix: Vec<Letter>, period: Vec<Letter>) -> Self {
        GoldenChain {
            leading_iii: false,
            prefix,
            period,
        }
    }

    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    /// Letter number `i` (0-based) or `None` past the end of a finite chain.
    pub fn letter(&self, i: usize) -> Option<Letter> {
        if i < self.prefix.len() {
            Some(self.prefix[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.prefix.len()) % self.period.len()])
        }
    }

    pub fn letters(&self, n: usize) -> Vec<Letter> {
        (0..n).map_while(|i| self.letter(i)).collect()
    }

    /// Cases at levels 1..=levels.
    pub fn cases(&self, levels: usize) -> Result<Vec<Case>> {
        let mut out = Vec::with_capacity(levels + 1);
        if self.leading_iii {
            out.push(Case::III);
        }
        let mut i = 0;
        while out.len() < levels {
            match self.letter(i) {
                Some(Letter::A) => out.extend([Case::I, Case::III]),
                Some(Letter::B) => out.push(Case::II),
                None => {
                    return Err(Error::NeedsMoreLevels {
                        requested: levels,
                        available: out.len(),
                    });
                }
            }
            i += 1;
        }
        out.truncate(levels);
        Ok(out)
    }

    pub fn chain(&self, levels: usize) -> Result<Chain> {
        Ok(Chain::new(self.cases(levels)?))
    }

    /// Levels covered by the finite part (leading (iii) plus prefix).
    pub fn preperiod_levels(&self) -> usize {
        self.leading_iii as usize + self.prefix.iter().map(|l| l.levels()).sum::<usize>()
    }

    pub fn period_levels(&self) -> usize {
        self.period.iter().map(|l| l.levels()).sum()
    }

    /// Read a slope-φ chain back into letters; a dangling final (i) is dropped.
    pub fn from_cases(cases: &[Case]) -> Result<Self> {
        let mut g = GoldenChain::default();
        let mut i = 0;
        if cases.first() == Some(&Case::III) {
            g.leading_iii = true;
            i = 1;
        }
        while i < cases.len() {
            match (cases[i], cases.get(i + 1)) {
                (Case::II, _) => {
                    g.prefix.push(Letter::B);
                    i += 1;
                }
                (Case::I, Some(Case::III)) => {
                    g.prefix.push(Letter::A);
                    i += 2;
                }
                (Case::I, None) => break,
                (c, next) => {
                    return Err(Error::Domain(format!(
                        "({c}) followed by {next:?} at level {} is not a golden chain",
                        i + 1
                    )))
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Display for GoldenChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.leading_iii {
            f.write_str("iii")?;
        }
        for l in &self.prefix {
            write!(f, "{}", l.as_char())?;
        }
        if !self.period.is_empty() {
            f.write_str("(")?;
            for l in &self.period {
                write!(f, "{}", l.as_char())?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("chain literal at byte {}: {msg}", self.pos))
    }

    fn count(&mut self) -> Result<Option<usize>> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        txt.parse().map(Some).map_err(|_| self.err("bad exponent"))
    }

    /// Parses items until `)` or end. Returns the letters and, at top level,
    /// a trailing unexponentiated group as the period.
    fn seq(&mut self, top: bool) -> Result<(Vec<Letter>, Vec<Letter>)> {
        let mut out = Vec::new();
        while self.pos < self.s.len() {
            match self.s[self.pos] {
                b'a' | b'b' => {
                    let l = if self.s[self.pos] == b'a' { Letter::A } else { Letter::B };
                    self.pos += 1;
                    let n = self.count()?.unwrap_or(1);
                    out.extend(std::iter::repeat_n(l, n));
                }
                b'(' => {
                    self.pos += 1;
                    let (inner, _) = self.seq(false)?;
                    if self.pos >= self.s.len() || self.s[self.pos] != b')' {
                        return Err(self.err("unclosed group"));
                    }
                    self.pos += 1;
                    match self.count()? {
                        Some(n) => {
                            for _ in 0..n {
                                out.extend_from_slice(&inner);
                            }
                        }
                        None if top && self.pos == self.s.len() => {
                            if inner.is_empty() {
                                return Err(self.err("empty period"));
                            }
                            return Ok((out, inner));
                        }
                        None => out.extend_from_slice(&inner),
                    }
                }
                b')' if !top => return Ok((out, Vec::new())),
                b' ' | b'\t' => self.pos += 1,
                _ => return Err(self.err("unexpected character")),
            }
        }
        if !top {
            return Err(self.err("unclosed group"));
        }
        Ok((out, Vec::new()))
    }
}

impl FromStr for GoldenChain {
    type Err = Error;

    /// Grammar: `[iii]? (a|b)+ ( "(" (a|b)+ ")" )?` with exponent sugar
    /// (`b2` = `bb`, `(ab)3` = `ababab`). `(iii)` is accepted for the prefix.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (leading_iii, rest) = if let Some(r) = s.strip_prefix("(iii)") {
            (true, r)
        } else if let Some(r) = s.strip_prefix("iii") {
            (true, r)
        } else {
            (false, s)
        };
        let mut p = Parser {
            s: rest.as_bytes(),
            pos: 0,
        };
        let (prefix, period) = p.seq(true)?;
        if prefix.is_empty() && period.is_empty() {
            return Err(Error::Parse("chain literal has no letters".into()));
        }
        Ok(GoldenChain {
            leading_iii,
            prefix,
            period,
        })
    }
}
