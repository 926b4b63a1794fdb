use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rational;

/// Failure to read a string as an exact rational.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("not a rational number: {0:?} (expected an integer, p/q, or a finite decimal)")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parse an integer, a `p/q` fraction, or a finite decimal into an exact
/// rational. Decimals are read exactly: `"0.25"` becomes `1/4`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ParseRationalError::Malformed(text.to_owned()));
    }
    if let Some((num, den)) = trimmed.split_once('/') {
        let num = parse_bigint(num.trim()).ok_or_else(malformed(text))?;
        let den = parse_bigint(den.trim()).ok_or_else(malformed(text))?;
        if den.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(text.to_owned()));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int_part, frac_part)) = trimmed.split_once('.') {
        let (sign, digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if digits.is_empty() && frac_part.is_empty() {
            return Err(ParseRationalError::Malformed(text.to_owned()));
        }
        if !digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(ParseRationalError::Malformed(text.to_owned()));
        }
        let mut numer: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| malformed(text)())?
        };
        let mut denom = BigInt::one();
        for c in frac_part.chars() {
            numer = numer * 10 + c.to_digit(10).unwrap();
            denom *= 10;
        }
        return Ok(Rational::new(numer * sign, denom));
    }
    let int = parse_bigint(trimmed).ok_or_else(malformed(text))?;
    Ok(Rational::from_integer(int))
}

fn parse_bigint(text: &str) -> Option<BigInt> {
    if text.is_empty() {
        return None;
    }
    let unsigned = text
        .strip_prefix('-')
        .or_else(|| text.strip_prefix('+'))
        .unwrap_or(text);
    if unsigned.is_empty() || !unsigned.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

fn malformed(text: &str) -> impl Fn() -> ParseRationalError + '_ {
    move || ParseRationalError::Malformed(text.to_owned())
}

/// Convenience constructor for tests and fixtures.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_three_forms() {
        assert_eq!(parse_rational("3").unwrap(), ratio(3, 1));
        assert_eq!(parse_rational("-7/2").unwrap(), ratio(-7, 2));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("2.5").unwrap(), ratio(5, 2));
        assert_eq!(parse_rational(" 90 ").unwrap(), ratio(90, 1));
        assert_eq!(parse_rational("70/3").unwrap(), ratio(70, 3));
    }

    #[test]
    fn normalizes_sign_and_lowest_terms() {
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational("1/-2").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("-2.50").unwrap(), ratio(-5, 2));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x", "1/0", "1.2.3", "1e3", "--2", ".", "1/ /2"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
        assert_eq!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator("1/0".into()))
        );
    }

    #[test]
    fn displays_in_lowest_terms() {
        assert_eq!(ratio(4, 6).to_string(), "2/3");
        assert_eq!(ratio(6, 3).to_string(), "2");
        assert_eq!(ratio(-1, 4).to_string(), "-1/4");
    }
}
