//! Exact rationals and their canonical string form.
//!
//! Every coefficient in this crate is a [`Rat`]. Rationals serialize as
//! `"p/q"` in lowest terms with `q > 1`, or as `"p"` when the denominator
//! is one. The parser accepts only that canonical spelling.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError {
    pub input: String,
    pub reason: &'static str,
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}: {}", self.input, self.reason)
    }
}

impl std::error::Error for ParseRatError {}

fn digits_ok(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'))
}

/// Parses a rational in canonical form only.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let err = |reason| ParseRatError {
        input: s.to_string(),
        reason,
    };
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num_s, den_s) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !digits_ok(num_s) {
        return Err(err("numerator is not a canonical decimal integer"));
    }
    let num: BigInt = num_s.parse().map_err(|_| err("numerator overflow"))?;
    if neg && num.is_zero() {
        return Err(err("negative zero"));
    }
    let num = if neg { -num } else { num };
    let den: BigInt = match den_s {
        None => BigInt::one(),
        Some(d) => {
            if !digits_ok(d) {
                return Err(err("denominator is not a canonical decimal integer"));
            }
            let d: BigInt = d.parse().map_err(|_| err("denominator overflow"))?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            if d.is_one() {
                return Err(err("denominator 1 must be omitted"));
            }
            d
        }
    };
    if !num.gcd(&den).is_one() {
        return Err(err("not in lowest terms"));
    }
    Ok(Rat::new_raw(num, den))
}

/// Exact integer square root if `n` is a perfect square.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Non-negative rational square root, if rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(r.numer())?;
    let d = int_sqrt_exact(r.denom())?;
    Some(Rat::new(n, d))
}

/// Writes a positive rational as `x² + y²` with rational `x, y`, searching
/// over integer representations of `numer·denom` up to `budget` candidates.
pub fn sum_of_two_squares(r: &Rat, budget: u64) -> Option<(Rat, Rat)> {
    if !r.is_positive() {
        return None;
    }
    if let Some(s) = rat_sqrt(r) {
        return Some((s, Rat::zero()));
    }
    // r = N/D = (N·D)/D², so it suffices to split N·D over the integers.
    let m = r.numer() * r.denom();
    let limit = m.sqrt();
    let mut x = BigInt::zero();
    let mut tries = 0u64;
    while x <= limit && tries < budget {
        let rest = &m - &x * &x;
        if let Some(y) = int_sqrt_exact(&rest) {
            let d = r.denom().clone();
            return Some((Rat::new(x, d.clone()), Rat::new(y, d)));
        }
        x += 1;
        tries += 1;
    }
    None
}

/// Approximates a float by a rational with denominator at most `max_den`
/// (continued fraction convergents).
pub fn rat_approx(x: f64, max_den: i64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 {
        return None;
    }
    Some(Rat::new(BigInt::from(h1), BigInt::from(k1)))
}

pub fn to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        for s in ["0", "1", "-3", "2/15", "-32/15", "13/3"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
    }

    #[test]
    fn rejects_non_canonical() {
        for s in ["2/4", "3/1", "-0", "+1", "01", "1/0", "1/-2", "", "1.5", "1/02", " 1"] {
            assert!(parse_rat(s).is_err(), "{s} accepted");
        }
    }

    #[test]
    fn squares() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        let (x, y) = sum_of_two_squares(&rat(5, 1), 1000).unwrap();
        assert_eq!(&x * &x + &y * &y, rat(5, 1));
        let (x, y) = sum_of_two_squares(&rat(2, 9), 1000).unwrap();
        assert_eq!(&x * &x + &y * &y, rat(2, 9));
        assert!(sum_of_two_squares(&rat(3, 1), 1000).is_none());
    }

    #[test]
    fn approximation() {
        assert_eq!(rat_approx(0.75, 100), Some(rat(3, 4)));
        assert_eq!(rat_approx(-2.0 / 3.0, 100), Some(rat(-2, 3)));
    }
}
