use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::FiniteWord;
use crate::cf::QuadraticNumber;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rounding {
    Floor,
    Ceil,
}

const FRAC_BITS: u32 = 96;
const ONE: i128 = 1 << FRAC_BITS;

/// Letter generator for `x_n = ⌊(n+1)θ+ρ⌋ − ⌊nθ+ρ⌋` (or the ceiling variant), n ≥ 1.
///
/// Fixed-point with 96 fractional bits; whenever the approximation cannot
/// decide the integer part it falls back to exact quadratic evaluation.
#[derive(Clone, Debug)]
pub struct Mechanical {
    theta: QuadraticNumber,
    rho: QuadraticNumber,
    rounding: Rounding,
    t: i128,
    r: i128,
}

impl Mechanical {
    pub fn new(theta: QuadraticNumber, rho: QuadraticNumber, rounding: Rounding) -> Result<Self> {
        if theta.is_rational() {
            return Err(Error::NotIrrational);
        }
        if theta <= QuadraticNumber::zero() || theta >= QuadraticNumber::one() {
            return Err(Error::Domain("slope must lie in (0,1)".into()));
        }
        if !rho.is_rational() && rho.d() != theta.d() {
            return Err(Error::FieldMismatch(theta.d(), rho.d()));
        }
        let scale = BigInt::one() << FRAC_BITS;
        let t = theta.scale(&scale).floor().to_i128().expect("θ < 1");
        let r_big = rho.scale(&scale).floor();
        if r_big.abs() >= (BigInt::one() << (FRAC_BITS + 24)) {
            return Err(Error::Domain("intercept too large".into()));
        }
        let r = r_big.to_i128().expect("bounded above");
        Ok(Mechanical {
            theta,
            rho,
            rounding,
            t,
            r,
        })
    }

    pub fn theta(&self) -> &QuadraticNumber {
        &self.theta
    }

    pub fn rho(&self) -> &QuadraticNumber {
        &self.rho
    }

    pub fn rounding(&self) -> Rounding {
        self.rounding
    }

    fn exact(&self, n: u64) -> BigInt {
        let v = self.theta.scale(&BigInt::from(n)) + &self.rho;
        match self.rounding {
            Rounding::Floor => v.floor(),
            Rounding::Ceil => v.ceil(),
        }
    }

    /// ⌊nθ+ρ⌋ or ⌈nθ+ρ⌉.
    pub fn integer_part(&self, n: u64) -> BigInt {
        if n >= 1 << 30 {
            return self.exact(n);
        }
        // true value·2^96 lies in [v, v + n + 1)
        let v = self.t * n as i128 + self.r;
        let frac = v.rem_euclid(ONE);
        let margin = n as i128 + 2;
        if frac < margin || frac > ONE - margin {
            return self.exact(n);
        }
        let fl = v.div_euclid(ONE);
        BigInt::from(match self.rounding {
            Rounding::Floor => fl,
            Rounding::Ceil => fl + 1,
        })
    }

    /// Letters `x_start … x_end` (1-based, inclusive).
    pub fn letters(&self, start: u64, end: u64) -> Vec<u8> {
        assert!(start >= 1);
        let mut out = Vec::with_capacity(end.saturating_sub(start) as usize + 1);
        if end < start {
            return out;
        }
        let mut prev = self.integer_part(start);
        for n in start..=end {
            let next = self.integer_part(n + 1);
            let x = &next - &prev;
            debug_assert!(x.is_zero() || x.is_one());
            out.push(if x.is_zero() { 0 } else { 1 });
            prev = next;
        }
        out
    }
}

/// Length-`len` prefix of the mechanical word `s_{θ,ρ}` (floor) or `s′_{θ,ρ}` (ceil).
pub fn mechanical_prefix(
    theta: &QuadraticNumber,
    rho: &QuadraticNumber,
    rounding: Rounding,
    len: usize,
) -> Result<FiniteWord> {
    let gen = Mechanical::new(theta.clone(), rho.clone(), rounding)?;
    Ok(FiniteWord::from_vec_unchecked(gen.letters(1, len as u64)))
}
