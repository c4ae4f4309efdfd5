//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`: arbitrary-precision, always
//! reduced, denominator always positive, zero stored as 0/1. Those are
//! exactly the invariants the rest of the crate assumes, so we use the type
//! directly instead of wrapping it. The helpers here cover the two things
//! the library needs everywhere: integer literals and the `"num/den"`
//! string form used in all JSON output (`den` omitted when it is 1, which
//! is what `Display` already does).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::{Error, Result};

pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn rat(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational from a big integer.
pub fn rat_big(v: BigInt) -> Rational {
    BigRational::from_integer(v)
}

/// Parse `"num"` or `"num/den"`. Whitespace is not accepted; a zero
/// denominator is an error rather than a panic.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Canonical string form: `"7"`, `"-7"`, `"7/3"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
