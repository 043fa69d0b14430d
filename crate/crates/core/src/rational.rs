//! Canonical arbitrary-precision rationals and their `p/q` token form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number. `num_rational` keeps every value reduced with a
/// positive denominator, and zero as `0/1`.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenError {
    Malformed,
    ZeroDenominator,
}

pub fn from_int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio<A: Into<BigInt>, B: Into<BigInt>>(numer: A, denom: B) -> Rational {
    Rational::new(numer.into(), denom.into())
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses `p` or `p/q` with optional signs on `p`. Surrounding whitespace is
/// ignored.
pub fn parse_token(token: &str) -> Result<Rational, TokenError> {
    let token = token.trim();
    match token.split_once('/') {
        None => parse_int(token)
            .map(Rational::from_integer)
            .ok_or(TokenError::Malformed),
        Some((p, q)) => {
            let numer = parse_int(p.trim()).ok_or(TokenError::Malformed)?;
            let q = q.trim();
            if q.starts_with(['-', '+']) {
                return Err(TokenError::Malformed);
            }
            let denom = parse_int(q).ok_or(TokenError::Malformed)?;
            if denom.is_zero() {
                return Err(TokenError::ZeroDenominator);
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Larger of the numerator and denominator bit lengths.
pub fn bit_len(r: &Rational) -> u64 {
    r.numer().bits().max(r.denom().bits())
}

pub(crate) fn lcm_of_denominators<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Rational>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}
