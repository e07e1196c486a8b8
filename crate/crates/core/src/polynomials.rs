//! Dense polynomials over the rationals and the polynomial families built on
//! them: generalized Laguerre (any rational order, including -1), exponential
//! polynomials, and conversions between the rising and falling factorial bases.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, from_big, int, parity_sign, BigInt, Rational};
use crate::sequences::{lah, stirling_first_row, stirling_second_row};

/// Univariate polynomial, `coeffs[i]` is the coefficient of `x^i`. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn from_big(coeffs: &[BigInt]) -> Self {
        Poly::new(coeffs.iter().map(from_big).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    /// `a*x + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Poly::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn differentiate(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * int(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x0 + a)
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| a * int(parity_sign(i)))
                .collect(),
        )
    }

    /// `p(x) * x^k`
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

/// Descending-degree human form, e.g. `-x^3/6 + x^2 - x`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let (num, den) = (a.numer(), a.denom());
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                f.write_str(&crate::exact::fmt(&a))?;
            } else {
                if !num.is_one() {
                    write!(f, "{num}")?;
                }
                f.write_str(&var)?;
                if !den.is_one() {
                    write!(f, "/{den}")?;
                }
            }
        }
        Ok(())
    }
}

/// `L_n^(alpha)(x)` with the coefficient of `(-x)^k` written as the finite
/// product `prod_{i=k+1}^{n} (alpha + i) / (k! (n-k)!)`. The product form stays
/// valid at `alpha = -1`, where the `k = 0` term vanishes.
pub fn laguerre(alpha: &Rational, n: usize) -> Poly {
    let coeffs = (0..=n)
        .map(|k| {
            let prod = (k + 1..=n).fold(Rational::one(), |acc, i| acc * (alpha + int(i as i64)));
            let denom = factorial(k) * factorial(n - k);
            prod * int(parity_sign(k)) / from_big(&denom)
        })
        .collect();
    Poly::new(coeffs)
}

/// `L_n^(-1)(x) = (1/n!) sum_k L(n,k) (-x)^k`, given row `n` of a Lah triangle.
pub fn laguerre_m1_from_lah_row(row: &[BigInt]) -> Poly {
    let n = row.len() - 1;
    Poly::from_big(row)
        .reflect()
        .scale(&from_big(&factorial(n)).recip())
}

/// `L_n^(-1)` assembled from Lah numbers.
pub fn laguerre_m1_lah(n: usize) -> Poly {
    laguerre_m1_from_lah_row(&lah_row(n))
}

/// Operator form `x^(-alpha)/n! * (D - 1)^n x^(n + alpha)` for integer
/// `alpha` in `{-1, 0}`.
pub fn laguerre_rodriguez(alpha: i64, n: usize) -> Result<Poly> {
    if !(alpha == -1 || alpha == 0) {
        return Err(Error::Domain(format!(
            "operator form supports alpha in {{-1, 0}}, got {alpha}"
        )));
    }
    if n == 0 {
        // x^(-alpha) * x^alpha with no operator applied
        return Ok(Poly::one());
    }
    let start = (n as i64 + alpha) as usize;
    let mut p = Poly::monomial(Rational::one(), start);
    for _ in 0..n {
        p = p.differentiate() - &p;
    }
    Ok(p.shift((-alpha) as usize)
        .scale(&from_big(&factorial(n)).recip()))
}

/// Exponential polynomial `phi_n(x) = sum_k S(n,k) x^k`.
pub fn bell_poly(n: usize) -> Poly {
    Poly::from_big(&stirling_second_row(n))
}

/// Coefficient of `e^x` after applying `x D` to it `n` times.
pub fn xd_power(n: usize) -> Poly {
    let mut p = Poly::one();
    for _ in 0..n {
        p = (p.differentiate() + &p).shift(1);
    }
    p
}

/// `x (x+1) ... (x+n-1)` expanded.
pub fn rising_poly(n: usize) -> Poly {
    (0..n).fold(Poly::one(), |acc, i| {
        acc * Poly::linear(Rational::one(), int(i as i64))
    })
}

/// `x (x-1) ... (x-n+1)` expanded.
pub fn falling_poly(n: usize) -> Poly {
    (0..n).fold(Poly::one(), |acc, i| {
        acc * Poly::linear(Rational::one(), int(-(i as i64)))
    })
}

pub fn falling_poly_matches_stirling(n: usize) -> bool {
    falling_poly(n) == Poly::from_big(&stirling_first_row(n))
}

/// Coefficients expressing one factorial basis in the other, together with
/// the outcome of expanding both sides into monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisConversion {
    /// Entry `k - 1` multiplies the basis polynomial of degree `k`.
    pub coeffs: Vec<BigInt>,
    pub consistent: bool,
}

/// `sum_k coeffs[k-1] * x^(k falling)` expanded into monomials.
pub fn expand_falling_basis(coeffs: &[BigInt]) -> Poly {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| falling_poly(i + 1).scale(&from_big(c)))
        .sum()
}

/// `sum_k coeffs[k-1] * x^(k rising)` expanded into monomials.
pub fn expand_rising_basis(coeffs: &[BigInt]) -> Poly {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| rising_poly(i + 1).scale(&from_big(c)))
        .sum()
}

/// `x^(n rising) = sum_k L(n,k) x^(k falling)`, using row `n` of a Lah
/// triangle.
pub fn rising_to_falling_from_row(row: &[BigInt]) -> BasisConversion {
    let n = row.len() - 1;
    let coeffs = row[1..].to_vec();
    BasisConversion {
        consistent: expand_falling_basis(&coeffs) == rising_poly(n),
        coeffs,
    }
}

/// `x^(n falling) = sum_k (-1)^(n-k) L(n,k) x^(k rising)`, using row `n` of a
/// Lah triangle.
pub fn falling_to_rising_from_row(row: &[BigInt]) -> BasisConversion {
    let n = row.len() - 1;
    let coeffs: Vec<BigInt> = (1..=n).map(|k| &row[k] * parity_sign(n - k)).collect();
    BasisConversion {
        consistent: expand_rising_basis(&coeffs) == falling_poly(n),
        coeffs,
    }
}

fn lah_row(n: usize) -> Vec<BigInt> {
    (0..=n).map(|k| lah(n, k)).collect()
}

pub fn rising_to_falling(n: usize) -> Result<BasisConversion> {
    if n == 0 {
        return Err(Error::Usage("basis conversion needs n >= 1".into()));
    }
    Ok(rising_to_falling_from_row(&lah_row(n)))
}

pub fn falling_to_rising(n: usize) -> Result<BasisConversion> {
    if n == 0 {
        return Err(Error::Usage("basis conversion needs n >= 1".into()));
    }
    Ok(falling_to_rising_from_row(&lah_row(n)))
}
