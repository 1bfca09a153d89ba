use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::render_scaled;

/// Exact element `(a + b·√D)/c` of a real quadratic field.
///
/// Canonical: `c > 0`, `gcd(a, b, c) = 1`, `D` square-free, and `D = 1`
/// whenever `b = 0` so that rationals compare equal across fields.
///
/// Mixing two irrational operands from different fields in arithmetic or
/// comparison panics; use [`QuadraticNumber::checked_add`] and friends to get
/// an error instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: u64,
}

fn square_free(d: u64) -> (u64, u64) {
    // returns (k, m) with d = k²m and m square-free
    let mut k = 1u64;
    let mut m = d;
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        let pp = p * p;
        while m.is_multiple_of(pp) {
            m /= pp;
            k *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (k, m)
}

impl QuadraticNumber {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: u64) -> Result<Self> {
        let (a, mut b, c) = (a.into(), b.into(), c.into());
        if c.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        if d == 0 {
            return Err(Error::Domain("D must be positive".into()));
        }
        let (k, m) = square_free(d);
        b *= k;
        Ok(Self::canonical(a, b, c, m))
    }

    fn canonical(mut a: BigInt, mut b: BigInt, mut c: BigInt, mut d: u64) -> Self {
        if d == 1 {
            a += &b;
            b = BigInt::zero();
        }
        if b.is_zero() {
            d = 1;
            if a.is_zero() {
                c = BigInt::one();
            }
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() && !g.is_zero() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        QuadraticNumber { a, b, c, d }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::canonical(n.into(), BigInt::zero(), BigInt::one(), 1)
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Self::canonical(r.numer().clone(), BigInt::zero(), r.denom().clone(), 1)
    }

    /// `√d`
    pub fn sqrt(d: u64) -> Result<Self> {
        Self::new(0, 1, 1, d)
    }

    /// `φ = (√5 − 1)/2`
    pub fn phi() -> Self {
        Self::canonical(BigInt::from(-1), BigInt::one(), BigInt::from(2), 5)
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.a.clone(), self.c.clone()))
    }

    fn field(&self, other: &Self) -> Result<u64> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(other.d),
            (_, true) => Ok(self.d),
            _ if self.d == other.d => Ok(self.d),
            _ => Err(Error::FieldMismatch(self.d, other.d)),
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let d = self.field(o)?;
        Ok(Self::canonical(
            &self.a * &o.c + &o.a * &self.c,
            &self.b * &o.c + &o.b * &self.c,
            &self.c * &o.c,
            d,
        ))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&-o)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let d = self.field(o)?;
        let dd = BigInt::from(d);
        Ok(Self::canonical(
            &self.a * &o.a + &self.b * &o.b * dd,
            &self.a * &o.b + &self.b * &o.a,
            &self.c * &o.c,
            d,
        ))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        // c/(a + b√D) = c(a − b√D)/(a² − b²D)
        let norm = &self.a * &self.a - &self.b * &self.b * BigInt::from(self.d);
        Ok(Self::canonical(&self.c * &self.a, -(&self.c * &self.b), norm, self.d))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        self.field(o)?;
        self.checked_mul(&o.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign of `a + b√D` (the denominator is positive).
    pub fn signum(&self) -> Ordering {
        let sa = self.a.sign_cmp();
        let sb = self.b.sign_cmp();
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigInt::from(self.d);
        if a2 > b2d {
            sa
        } else {
            sb
        }
    }

    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.div_floor(&self.c);
        }
        let s = (&self.b * &self.b * BigInt::from(self.d)).sqrt();
        // b²D is never a square here, so ⌊b√D⌋ is s or −s−1
        let t = if self.b.is_positive() { s } else { -s - 1 };
        (&self.a + t).div_floor(&self.c)
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Multiply by an integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        Self::canonical(&self.a * k, &self.b * k, self.c.clone(), self.d)
    }

    pub fn to_f64(&self) -> f64 {
        let shift = 80u32;
        let scaled = self.scale(&(BigInt::one() << shift)).floor();
        scaled.to_f64().unwrap_or(f64::NAN) / 2f64.powi(shift as i32)
    }

    /// Decimal rendering rounded half-up.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10u32).pow(places as u32);
        let n = self.scale(&scale);
        let half = Self::canonical(BigInt::one(), BigInt::zero(), BigInt::from(2), 1);
        let k = (&n + &half).floor();
        render_scaled(&k, &scale, places)
    }

    /// Human-readable form such as `(-1 + √5)/2`.
    pub fn pretty(&self) -> String {
        if self.is_rational() {
            return if self.c.is_one() {
                self.a.to_string()
            } else {
                format!("{}/{}", self.a, self.c)
            };
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        let coef = if self.b.abs().is_one() {
            String::new()
        } else {
            self.b.abs().to_string()
        };
        let num = format!("{} {} {}√{}", self.a, sign, coef, self.d);
        if self.c.is_one() {
            num
        } else {
            format!("({num})/{}", self.c)
        }
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.checked_sub(other)
            .expect("comparison across quadratic fields")
            .signum()
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d,
        }
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&QuadraticNumber> for &QuadraticNumber {
            type Output = QuadraticNumber;
            fn $m(self, o: &QuadraticNumber) -> QuadraticNumber {
                self.$checked(o).expect("quadratic arithmetic")
            }
        }
        impl $tr<QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $m(self, o: QuadraticNumber) -> QuadraticNumber {
                (&self).$m(&o)
            }
        }
        impl $tr<&QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $m(self, o: &QuadraticNumber) -> QuadraticNumber {
                (&self).$m(o)
            }
        }
        impl $tr<QuadraticNumber> for &QuadraticNumber {
            type Output = QuadraticNumber;
            fn $m(self, o: QuadraticNumber) -> QuadraticNumber {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl From<i64> for QuadraticNumber {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quad:({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for QuadraticNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected quad:(a,b,c,D), got {s:?}"));
        let body = s
            .strip_prefix("quad:")
            .map(str::trim)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(bad());
        }
        let a: BigInt = parts[0].parse().map_err(|_| bad())?;
        let b: BigInt = parts[1].parse().map_err(|_| bad())?;
        let c: BigInt = parts[2].parse().map_err(|_| bad())?;
        let d: u64 = parts[3].parse().map_err(|_| bad())?;
        Self::new(a, b, c, d)
    }
}

impl serde::Serialize for QuadraticNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for QuadraticNumber {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: u64) -> QuadraticNumber {
        QuadraticNumber::new(a, b, c, d).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(q(2, 4, 6, 5), q(1, 2, 3, 5));
        assert_eq!(q(1, 1, -2, 5), q(-1, -1, 2, 5));
        // √8 = 2√2
        assert_eq!(q(0, 1, 1, 8), q(0, 2, 1, 2));
        assert_eq!(q(0, 1, 1, 9), QuadraticNumber::from_integer(3));
        assert_eq!(q(3, 0, 6, 7), q(1, 0, 2, 11));
    }

    #[test]
    fn phi_identities() {
        let phi = QuadraticNumber::phi();
        // φ² + φ = 1
        assert_eq!(&phi * &phi + &phi, QuadraticNumber::one());
        assert_eq!(phi.recip().unwrap(), &phi + QuadraticNumber::one());
        assert_eq!(phi.to_decimal(6), "0.618034");
        assert!((phi.to_f64() - 0.6180339887498949).abs() < 1e-15);
    }

    #[test]
    fn floors() {
        let phi = QuadraticNumber::phi();
        assert_eq!(phi.floor(), BigInt::from(0));
        assert_eq!((-&phi).floor(), BigInt::from(-1));
        assert_eq!((-&phi).ceil(), BigInt::from(0));
        assert_eq!(phi.scale(&BigInt::from(2)).floor(), BigInt::from(1));
        assert_eq!(q(-7, 0, 2, 1).floor(), BigInt::from(-4));
        // ⌊√10 − 3/2⌋ = 1
        assert_eq!(q(-3, 2, 2, 10).floor(), BigInt::from(1));
    }

    #[test]
    fn ordering() {
        let phi = QuadraticNumber::phi();
        assert!(phi > QuadraticNumber::from_ratio(&BigRational::new(3.into(), 5.into())));
        assert!(phi < QuadraticNumber::from_ratio(&BigRational::new(5.into(), 8.into())));
        assert!(q(0, 1, 1, 2) > q(7, 0, 5, 1));
    }

    #[test]
    fn literal_round_trip() {
        let x: QuadraticNumber = "quad:(-1,1,2,5)".parse().unwrap();
        assert_eq!(x, QuadraticNumber::phi());
        assert_eq!(x.to_string(), "quad:(-1,1,2,5)");
        assert!("quad:(1,2)".parse::<QuadraticNumber>().is_err());
        assert!("quad:(1,2,0,5)".parse::<QuadraticNumber>().is_err());
    }

    #[test]
    fn field_mismatch_is_an_error() {
        assert!(q(0, 1, 1, 2).checked_add(&q(0, 1, 1, 3)).is_err());
        assert!(q(0, 1, 1, 2).checked_add(&q(1, 0, 1, 1)).is_ok());
    }
}
