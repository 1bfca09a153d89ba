use serde::Serialize;

use crate::cf::QuadraticNumber;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct MuEntry {
    pub name: &'static str,
    pub exact: QuadraticNumber,
    pub decimal: String,
    pub family: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct MuTable {
    pub entries: Vec<MuEntry>,
}

impl MuTable {
    pub fn get(&self, name: &str) -> Option<&MuEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn phi() -> QuadraticNumber {
    QuadraticNumber::phi()
}

fn one() -> QuadraticNumber {
    QuadraticNumber::one()
}

/// √10 − 3/2
pub fn r_max() -> QuadraticNumber {
    QuadraticNumber::new(-3, 2, 2, 10).expect("valid")
}

/// (48 + √10)/31
pub fn r_one() -> QuadraticNumber {
    QuadraticNumber::new(48, 1, 31, 10).expect("valid")
}

pub fn mu_max() -> QuadraticNumber {
    one() + phi()
}

/// 1 + 2φ³
pub fn mu2() -> QuadraticNumber {
    one() + phi().pow(3) * QuadraticNumber::from(2)
}

/// 1 + φ²(φ⁴+φ²+1)/(φ⁵+φ³+1)
pub fn mu3() -> QuadraticNumber {
    let p = phi();
    one() + p.pow(2) * (p.pow(4) + p.pow(2) + one()) / (p.pow(5) + p.pow(3) + one())
}

/// 1 + (1−φ⁶)/(1+2φ−2φ⁷+φ¹¹)
pub fn mu4() -> QuadraticNumber {
    let p = phi();
    let two = QuadraticNumber::from(2);
    one() + (one() - p.pow(6)) / (one() + &two * &p - &two * &p.pow(7) + p.pow(11))
}

pub fn mu_min() -> QuadraticNumber {
    one() + phi().pow(2)
}

/// rep of the chain `((b²a²)^d ba)` repeated:
/// `1 + (1/φ + φ + φ⁶/(1−φ^{6d+3}) + φ¹⁰(1−φ^{6d})/((1−φ⁶)(1−φ^{6d+3})))⁻¹`
pub fn mu4_family(d: u32) -> QuadraticNumber {
    let p = phi();
    let tail = one() - p.pow(6 * d + 3);
    let inner = p.recip().expect("nonzero")
        + p.clone()
        + p.pow(6) / tail.clone()
        + p.pow(10) * (one() - p.pow(6 * d)) / ((one() - p.pow(6)) * tail);
    one() + inner.recip().expect("positive")
}

pub fn mu_table() -> MuTable {
    let e = |name, exact: QuadraticNumber, family| MuEntry {
        name,
        decimal: exact.to_decimal(6),
        exact,
        family,
    };
    MuTable {
        entries: vec![
            e("r_max", r_max(), "all-(ii) chain of slope [0;(2,1,1)]"),
            e("r_1", r_one(), "second largest rep over all Sturmian words"),
            e("mu_max", mu_max(), "(b), (a)"),
            e("mu_2", mu2(), "(ab)"),
            e("mu_3", mu3(), "(b2a2)"),
            e("mu_4", mu4(), "limit of ((b2a2)^d ba) as d grows"),
            e("mu_min", mu_min(), "b a b a2 b a3 ..."),
        ],
    }
}

/// `rep/(rep − 1)`
pub fn irrationality_exponent(rep: &QuadraticNumber) -> Result<QuadraticNumber> {
    if *rep <= one() {
        return Err(Error::Domain(format!("rep = {} must exceed 1", rep.pretty())));
    }
    rep.checked_div(&(rep - &one()))
}
