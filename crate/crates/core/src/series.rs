//! Truncated formal power series in `t` over rationals or rational
//! polynomials, and coefficient-extraction checks of the generating functions
//! for Lah columns, order -1 Laguerre polynomials and exponential polynomials.
//!
//! Series are purely formal: coefficients in `Poly` keep `x` symbolic, so no
//! convergence condition on `t` ever enters.

use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::exact::{factorial, from_big, int, Rational};
use crate::polynomials::{bell_poly, laguerre, Poly};
use crate::sequences::Triangle;

/// Ring of series coefficients.
pub trait Coefficient: Clone + PartialEq + Debug
where
    for<'a> &'a Self:
        Add<&'a Self, Output = Self> + Sub<&'a Self, Output = Self> + Mul<&'a Self, Output = Self>,
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn scale(&self, c: &Rational) -> Self;
    /// Exact text form used in reports.
    fn render(&self) -> String;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        int(0)
    }
    fn one() -> Self {
        int(1)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn render(&self) -> String {
        crate::exact::fmt(self)
    }
}

impl Coefficient for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn scale(&self, c: &Rational) -> Self {
        Poly::scale(self, c)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

/// `sum_{n=0}^{N} a_n t^n`; always exactly `N + 1` stored coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncSeries<C>
where
    for<'a> &'a C: Add<&'a C, Output = C> + Sub<&'a C, Output = C> + Mul<&'a C, Output = C>,
{
    /// Pads with zeros or truncates to `order + 1` coefficients.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::new(vec![C::one()], order)
    }

    /// `c * t^k`
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::Usage(format!(
                "series orders differ: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Multiplies by every coefficient with a ring element.
    pub fn times(&self, c: &C) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `exp(u)` via `n f_n = sum_{k=1}^{n} k u_k f_{n-k}`, the coefficient
    /// form of `f' = u' f`. Requires `u_0 = 0`.
    pub fn exp(&self) -> Result<Self> {
        self.require_zero_constant()?;
        let order = self.order();
        let mut f: Vec<C> = Vec::with_capacity(order + 1);
        f.push(C::one());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = (&self.coeffs[k] * &f[n - k]).scale(&int(k as i64));
                acc = &acc + &term;
            }
            f.push(acc.scale(&Rational::new(1.into(), n.into())));
        }
        Ok(TruncSeries { coeffs: f })
    }

    /// `exp(u) = sum_k u^k / k!`, summing powers directly. Quadratically more
    /// ring operations than [`TruncSeries::exp`].
    pub fn exp_by_powers(&self) -> Result<Self> {
        self.require_zero_constant()?;
        let order = self.order();
        let mut total = TruncSeries::one(order);
        let mut power = TruncSeries::one(order);
        for k in 1..=order {
            power = power.mul(self)?;
            total = total.add(&power.scale(&from_big(&factorial(k)).recip()))?;
        }
        Ok(total)
    }

    fn require_zero_constant(&self) -> Result<()> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(format!(
                "exp needs a zero constant term, got {}",
                self.coeffs[0].render()
            )));
        }
        Ok(())
    }
}

/// `1/(1 - t) = sum_{n=0}^{N} t^n`.
pub fn geometric(order: usize) -> TruncSeries<Rational> {
    TruncSeries::new(vec![int(1); order + 1], order)
}

/// One extracted generating-function coefficient next to its reference value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfEntry<C> {
    pub index: usize,
    pub extracted: C,
    pub expected: C,
}

impl<C: PartialEq> GfEntry<C> {
    pub fn passed(&self) -> bool {
        self.extracted == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfCheck<C> {
    pub entries: Vec<GfEntry<C>>,
}

impl<C: PartialEq> GfCheck<C> {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(GfEntry::passed)
    }
}

/// `n! [t^n] (1/k!) (t/(1-t))^k` against column `k` of `lah` for
/// `0 <= n <= order` (both sides vanish below `k`).
pub fn lah_column_gf_check_against(
    lah: &Triangle,
    k: usize,
    order: usize,
) -> Result<GfCheck<Rational>> {
    if k == 0 || k > order {
        return Err(Error::Usage(format!(
            "column generating function needs 1 <= k <= order, got k = {k}, order = {order}"
        )));
    }
    if lah.nmax() < order {
        return Err(Error::Usage(format!(
            "Lah triangle has {} rows, order {order} needs more",
            lah.nmax() + 1
        )));
    }
    let base = TruncSeries::monomial(int(1), 1, order).mul(&geometric(order))?;
    let mut power = TruncSeries::one(order);
    for _ in 0..k {
        power = power.mul(&base)?;
    }
    let gf = power.scale(&from_big(&factorial(k)).recip());
    let entries = (0..=order)
        .map(|n| GfEntry {
            index: n,
            extracted: gf.coeff(n) * &from_big(&factorial(n)),
            expected: from_big(&lah.get(n, k)),
        })
        .collect();
    Ok(GfCheck { entries })
}

pub fn lah_column_gf_check(k: usize, order: usize) -> Result<GfCheck<Rational>> {
    let lah = Triangle::build(crate::sequences::TriangleKind::Lah, order);
    lah_column_gf_check_against(&lah, k, order)
}

/// `[t^n] exp(-x t/(1-t))` against `L_n^(-1)(x)`.
pub fn laguerre_m1_gf_check(order: usize) -> Result<GfCheck<Poly>> {
    if order == 0 {
        return Err(Error::Usage(
            "generating function order must be >= 1".into(),
        ));
    }
    let minus_x = -Poly::x();
    let t_over_1_minus_t: Vec<Poly> = (0..=order)
        .map(|n| {
            if n == 0 {
                Poly::zero()
            } else {
                minus_x.clone()
            }
        })
        .collect();
    let gf = TruncSeries::new(t_over_1_minus_t, order).exp()?;
    let entries = (0..=order)
        .map(|n| GfEntry {
            index: n,
            extracted: gf.coeff(n).clone(),
            expected: laguerre(&int(-1), n),
        })
        .collect();
    Ok(GfCheck { entries })
}

/// `n! [t^n] exp(x (e^t - 1))` against `phi_n(x)`.
pub fn bell_gf_check(order: usize) -> Result<GfCheck<Poly>> {
    if order == 0 {
        return Err(Error::Usage(
            "generating function order must be >= 1".into(),
        ));
    }
    let e_t_minus_1: Vec<Poly> = (0..=order)
        .map(|n| {
            if n == 0 {
                Poly::zero()
            } else {
                Poly::x().scale(&from_big(&factorial(n)).recip())
            }
        })
        .collect();
    let gf = TruncSeries::new(e_t_minus_1, order).exp()?;
    let entries = (0..=order)
        .map(|n| GfEntry {
            index: n,
            extracted: gf.coeff(n).scale(&from_big(&factorial(n))),
            expected: bell_poly(n),
        })
        .collect();
    Ok(GfCheck { entries })
}
