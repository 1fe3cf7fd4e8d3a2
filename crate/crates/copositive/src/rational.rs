//! Exact rational scalars and their text form.
//!
//! Entries serialize as `"p/q"` strings (or plain integers) so no value
//! ever passes through binary floating point on its way in or out.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or a plain integer string.
pub fn parse_rational(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let err = || Error::ParseRational(s.to_string());
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = numer.parse().map_err(|_| err())?;
    let denom: BigInt = match denom {
        Some(d) => d.parse().map_err(|_| err())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(numer, denom))
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn as_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Smallest rational with the given denominator that is `>= v`.
pub fn ceil_with_denominator(v: f64, denominator: i64) -> Rat {
    assert!(denominator > 0);
    rat((v * denominator as f64).ceil() as i64, denominator)
}

/// True when the value is one of -1, 0, 1.
pub fn is_unit(r: &Rat) -> bool {
    r.is_integer() && r.numer().abs() <= BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_lowest_terms() {
        let r = parse_rational("6/4").unwrap();
        assert_eq!(r, rat(3, 2));
        assert_eq!(format_rational(&r), "3/2");
    }

    #[test]
    fn parse_integer_and_negative_denominator() {
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        // sign normalizes onto the numerator
        let r = parse_rational("1/-3").unwrap();
        assert_eq!(r, rat(-1, 3));
        assert_eq!(format_rational(&r), "-1/3");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn ceil_is_upper_bound() {
        let v = 0.7421337;
        let r = ceil_with_denominator(v, 4096);
        assert!(to_f64(&r) >= v);
        assert!(to_f64(&r) - v < 1.0 / 4096.0 + 1e-12);
    }
}
