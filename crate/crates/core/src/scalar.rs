//! Scalar abstraction for exact arithmetic.
//!
//! Every geometric computation in this crate is carried out over an exact,
//! totally ordered field. The [`Scalar`] trait collects the bounds the
//! kernels need; it is implemented for `num_rational::Ratio<I>` over any
//! signed integer type, which keeps floating point out by construction
//! (`f32`/`f64` have no `Ord` and no exact division).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, NumAssign, Signed};

/// Exact ordered-field scalar. All arithmetic must be exact: `a / b * b == a`
/// for `b != 0`, and comparisons decide strict inequalities reliably.
pub trait Scalar:
    Clone
    + Ord
    + Num
    + NumAssign
    + Signed
    + FromPrimitive
    + fmt::Debug
    + fmt::Display
    + 'static
{
    /// Numerator/denominator pair in lowest terms, denominator positive.
    fn to_fraction(&self) -> (String, String);
}

impl<I> Scalar for Ratio<I>
where
    I: Integer
        + Signed
        + NumAssign
        + FromStr
        + Clone
        + Ord
        + fmt::Debug
        + fmt::Display
        + 'static,
    Ratio<I>: FromPrimitive,
{
    fn to_fraction(&self) -> (String, String) {
        (self.numer().to_string(), self.denom().to_string())
    }
}

/// Shorthand for integer literals inside generic code.
pub fn int<S: Scalar>(v: i64) -> S {
    S::from_i64(v).expect("small integer must be representable")
}

/// Parse a rational from the repository's exact string syntax: `p/q` or `p`.
/// Floating-point literals are rejected.
pub fn parse_exact<S: Scalar + FromStr>(text: &str) -> Result<S, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty rational literal".to_string());
    }
    if t.contains(['.', 'e', 'E']) {
        return Err(format!(
            "floating-point literal {t:?} rejected; use exact p/q syntax"
        ));
    }
    S::from_str(t).map_err(|_| format!("cannot parse {t:?} as an exact rational"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn parses_integers_and_fractions() {
        let half: BigRational = parse_exact("1/2").unwrap();
        assert_eq!(half.to_string(), "1/2");
        let three: Rational64 = parse_exact("3").unwrap();
        assert_eq!(three, int::<Rational64>(3));
        let neg: BigRational = parse_exact("-7/5").unwrap();
        assert_eq!(neg.to_fraction(), ("-7".to_string(), "5".to_string()));
    }

    #[test]
    fn rejects_floats() {
        assert!(parse_exact::<BigRational>("0.5").is_err());
        assert!(parse_exact::<BigRational>("1e3").is_err());
        assert!(parse_exact::<BigRational>("").is_err());
    }

    #[test]
    fn lowest_terms_on_display() {
        let r: BigRational = parse_exact("4/8").unwrap();
        assert_eq!(r.to_string(), "1/2");
    }
}
