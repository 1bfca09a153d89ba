//! Small helpers shared by the exact-arithmetic modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Render `num/den` (den > 0) rounded half-up to `places` decimals.
pub(crate) fn render_scaled(num: &BigInt, den: &BigInt, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let twice: BigInt = num * &scale * 2 + den;
    let rounded = twice.div_floor(&(den * BigInt::from(2)));
    let neg = rounded.is_negative();
    let digits = rounded.abs().to_string();
    let digits = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int, frac) = digits.split_at(digits.len() - places);
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

pub fn rational_decimal(r: &BigRational, places: usize) -> String {
    render_scaled(r.numer(), r.denom(), places)
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() && d != 0.0 => n / d,
        _ => {
            // scale down both sides until they fit
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_half_up() {
        let r = BigRational::new(BigInt::from(2), BigInt::from(3));
        assert_eq!(rational_decimal(&r, 6), "0.666667");
        let r = BigRational::new(BigInt::from(-1), BigInt::from(8));
        assert_eq!(rational_decimal(&r, 2), "-0.12");
        let r = BigRational::from_integer(BigInt::from(7));
        assert_eq!(rational_decimal(&r, 3), "7.000");
        assert_eq!(rational_decimal(&r, 0), "7");
    }
}
