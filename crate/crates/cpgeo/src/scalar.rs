//! Exact rational scalars.
//!
//! Every quantity in this crate is a `BigRational`: structure constants,
//! metric entries, form coefficients, Christoffel symbols, angle squares.
//! `num`'s `Ratio` keeps values reduced with a positive denominator, which
//! is exactly the canonical representation we need. No floating point
//! appears anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Scalar = BigRational;

/// `p/q` as a scalar. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses an integer or a fraction `p/q`.
pub fn parse_rational(text: &str) -> Result<Scalar, String> {
    let text = text.trim();
    let parse_int = |t: &str| -> Result<BigInt, String> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("not an integer: `{t}`"))
    };
    match text.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(text)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(format!("zero denominator in `{text}`"));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Sign as -1, 0 or 1.
pub fn sign(x: &Scalar) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational(" 4/6 ").unwrap(), frac(2, 3));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn canonical_form() {
        // reduced, positive denominator
        let x = frac(2, -4);
        assert_eq!(x, frac(-1, 2));
        assert_eq!(x.to_string(), "-1/2");
    }
}
