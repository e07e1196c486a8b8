//! Integer and rational primitives: factorials, binomials, Pochhammer symbols,
//! exact rational powers and the textual `p/q` form used on every output.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_big(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

/// `(-1)^n` as a small signed integer.
pub fn parity_sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as u64 > n as u64 {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: acc holds C(n, i) before the update
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `x (x-1) ... (x-n+1) / n!` for rational `x`.
pub fn gen_binomial(x: &Rational, n: usize) -> Rational {
    falling(x, n) / from_big(&factorial(n))
}

/// Rising factorial `x (x+1) ... (x+n-1)`.
pub fn rising(x: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (x + int(i as i64)))
}

/// Falling factorial `x (x-1) ... (x-n+1)`.
pub fn falling(x: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (x - int(i as i64)))
}

/// Integer power; negative exponents require `x != 0`.
pub fn pow_int(x: &Rational, e: i64) -> Result<Rational> {
    if e < 0 && x.is_zero() {
        return Err(Error::Domain("zero raised to a negative power".into()));
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    Ok((0..e.unsigned_abs()).fold(Rational::one(), |acc, _| acc * &base))
}

fn exact_int_root(v: &BigInt, q: u32) -> Option<BigInt> {
    if v.is_negative() && q.is_multiple_of(2) {
        return None;
    }
    let r = v.nth_root(q);
    if num_traits::pow(r.clone(), q as usize) == *v {
        Some(r)
    } else {
        None
    }
}

/// `x^e` for rational `e = a/q`, defined only when `x` is an exact `q`-th
/// power of a rational (odd roots of negatives allowed).
pub fn pow_rational(x: &Rational, e: &Rational) -> Result<Rational> {
    let q: u32 = e
        .denom()
        .try_into()
        .map_err(|_| Error::Domain(format!("exponent denominator too large in {}", fmt(e))))?;
    let a: i64 = e
        .numer()
        .try_into()
        .map_err(|_| Error::Domain(format!("exponent numerator too large in {}", fmt(e))))?;
    let root = if q == 1 {
        x.clone()
    } else {
        let n = exact_int_root(x.numer(), q);
        let d = exact_int_root(x.denom(), q);
        match (n, d) {
            (Some(n), Some(d)) => Rational::new(n, d),
            _ => {
                return Err(Error::Domain(format!(
                    "{} has no exact rational root of degree {q}",
                    fmt(x)
                )))
            }
        }
    };
    pow_int(&root, a)
}

/// Lowest-terms text form: `p` for integers, `p/q` otherwise.
pub fn fmt(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, `p/q` or `-p/q` (decimal digits only, `q != 0`).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Usage(format!("expected a rational like 3, -2 or 3/4, got {s:?}"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (n, d) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || !digits(d) {
        return Err(bad());
    }
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Usage(format!("zero denominator in {s:?}")));
    }
    let r = Rational::new(n, d);
    Ok(if neg { -r } else { r })
}
