//! Exact rational scalars.
//!
//! Every coordinate in this crate is either a [`Rational`] or a polynomial
//! with rational coefficients; no floating point enters a predicate. The
//! only conversions to `f64` happen at the rendering boundary, via
//! [`rational_to_f64`].

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision fraction, kept in canonical form (positive
/// denominator, reduced) by `num-rational`.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` as a rational; panics if `q == 0` (test/construction helper).
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` into a rational, rejecting zero denominators
/// and anything that is not an integer pair. Used for instance files,
/// so the diagnostics name the offending text.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let (num_text, den_text) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = num_text
        .parse()
        .map_err(|_| format!("not an integer: {num_text:?}"))?;
    let denom: BigInt = den_text
        .parse()
        .map_err(|_| format!("not an integer: {den_text:?}"))?;
    if denom.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(numer, denom))
}

/// Rounds a rational to `f64` without overflowing on huge numerators:
/// both parts are shifted down together until they fit comfortably in a
/// double, which preserves the value to well below 1e-15 relative.
pub fn rational_to_f64(r: &Rational) -> f64 {
    let numer = r.numer();
    let denom = r.denom();
    let bits = numer.bits().max(denom.bits());
    if bits <= 900 {
        // within f64 exponent range; num's conversion is exact enough
        let n = numer.to_f64().unwrap_or(f64::NAN);
        let d = denom.to_f64().unwrap_or(f64::NAN);
        return n / d;
    }
    let shift = bits - 128;
    let n = (numer >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (denom >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// True when the rational is strictly positive.
pub fn is_positive(r: &Rational) -> bool {
    r.numer().is_positive()
}
