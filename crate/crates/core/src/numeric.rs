//! Exact-rational helpers shared by the evaluation and reporting code.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

pub fn factorial(m: u64) -> BigInt {
    (2..=m).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn pow_rational(base: &BigRational, exp: i32) -> BigRational {
    let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// `floor(x * 10^digits)` for a rational `x`.
pub fn floor_scaled(x: &BigRational, digits: u32) -> BigInt {
    let scaled = x * BigRational::from_integer(pow10(digits));
    scaled.numer().div_floor(scaled.denom())
}

/// Decimal expansion of `x` truncated toward zero after `digits` places.
pub fn truncated_decimal(x: &BigRational, digits: u32) -> String {
    let neg = x.is_negative();
    let scaled = x.abs() * BigRational::from_integer(pow10(digits));
    let units = scaled.numer() / scaled.denom();
    let body = format_fixed(&units, digits);
    if neg && !units.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// Formats a nonnegative integer `units` as `units / 10^digits` in fixed point.
fn format_fixed(units: &BigInt, digits: u32) -> String {
    let s = units.to_str_radix(10);
    let d = digits as usize;
    if d == 0 {
        return s;
    }
    let padded = if s.len() <= d {
        format!("{}{}", "0".repeat(d + 1 - s.len()), s)
    } else {
        s
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - d);
    format!("{int_part}.{frac_part}")
}

/// `log10 |x|` of a nonzero big integer, accurate to roughly f64 precision.
pub fn log10_abs_int(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        if let Some(f) = x.to_f64() {
            return f.abs().log10();
        }
    }
    let shift = bits - 64;
    let top = (x.abs() >> shift).to_f64().unwrap_or(f64::MAX);
    top.log10() + shift as f64 * std::f64::consts::LOG10_2
}

pub fn log10_abs(x: &BigRational) -> f64 {
    log10_abs_int(x.numer()) - log10_abs_int(x.denom())
}

pub fn is_negative(x: &BigRational) -> bool {
    x.numer().sign() == Sign::Minus
}

pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
