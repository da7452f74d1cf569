//! Exact rational scalars and their canonical `"p/q"` string form.
//!
//! Every rational that crosses a serialization boundary (cache files, JSON
//! reports) is written as `"p/q"` with the fraction in lowest terms and a
//! positive denominator, so that equal values always produce equal bytes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Canonical string form `p/q`, reduced, denominator positive.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = num.trim().parse().ok()?;
    let denom: BigInt = den.trim().parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rat::new(numer, denom))
}

/// True if `r` is +1 or -1.
pub fn is_unit(r: &Rat) -> bool {
    r.abs().is_one()
}
