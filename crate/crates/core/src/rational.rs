//! Exact rational values and their canonical `"a/b"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `"a"` or `"a/b"` with `b > 0`, never as a float.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"a"` or `"a/b"`. Returns `None` on malformed input or `b = 0`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((a, b)) => {
            let num = a.trim().parse::<BigInt>().ok()?;
            let den = b.trim().parse::<BigInt>().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rat::new(num, den))
        }
    }
}

/// Floor of a rational as a BigInt.
pub fn rat_floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Ceiling of a rational as a BigInt.
pub fn rat_ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

/// Smallest integer `k >= 0` with `k^2 >= r`, for `r >= 0`.
pub fn sqrt_ceil(r: &Rat) -> BigInt {
    assert!(!r.is_negative(), "sqrt_ceil of negative rational");
    let c = rat_ceil(r);
    let (_, digits) = c.to_bytes_be();
    let n = num_bigint::BigUint::from_bytes_be(&digits);
    let root = n.sqrt();
    let root = BigInt::from(root);
    if Rat::from_integer(root.clone() * root.clone()) >= *r {
        root
    } else {
        root + 1
    }
}
