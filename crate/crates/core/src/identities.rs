//! Exact checks of the identities tying Lah numbers, Stirling numbers,
//! order -1 Laguerre polynomials and exponential polynomials together, and a
//! runner that sweeps them over a parameter range.
//!
//! All checks read their triangles from a [`Tables`] value, so feeding in a
//! corrupted table must make some check fail.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::derivatives::{
    derive_brychkov, derive_via_exppoly, derive_via_laguerre, derive_via_leibniz,
    derive_via_schwatt, evaluate_form, taylor_oracle, DerivClosedForm, DerivSpec,
};
use crate::error::{Error, Result};
use crate::exact::{
    binomial, factorial, fmt as fmt_rational, from_big, int, parity_sign, ratio, BigInt, Rational,
};
use crate::polynomials::{
    expand_falling_basis, expand_rising_basis, falling_poly, falling_to_rising_from_row, laguerre,
    laguerre_m1_from_lah_row, laguerre_rodriguez, rising_poly, rising_to_falling_from_row,
    xd_power, Poly,
};
use crate::sequences::Tables;
use crate::series::{
    bell_gf_check, laguerre_m1_gf_check, lah_column_gf_check_against, Coefficient,
};

/// Exact textual form of a checked value.
pub trait ExactText {
    fn exact_text(&self) -> String;
}

impl ExactText for BigInt {
    fn exact_text(&self) -> String {
        self.to_string()
    }
}

impl ExactText for Rational {
    fn exact_text(&self) -> String {
        fmt_rational(self)
    }
}

impl ExactText for Poly {
    fn exact_text(&self) -> String {
        self.to_string()
    }
}

impl<T: ExactText> ExactText for Vec<T> {
    fn exact_text(&self) -> String {
        let parts: Vec<String> = self.iter().map(ExactText::exact_text).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl ExactText for DerivClosedForm {
    fn exact_text(&self) -> String {
        self.coeffs.exact_text()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    LaguerreThreeRoutes,
    LahOrthogonalityOffDiag,
    LahOrthogonalityDiag,
    StirlingOrthogonality,
    LahFromStirling,
    TodorovCharalambides,
    TodorovAtMinusOne,
    RisingToFalling,
    FallingToRising,
    FallingFactorialStirling,
    Gould,
    LahColumnGf,
    LaguerreGf,
    BellGf,
    DerivativeFourWay,
    SchwattVsExppoly,
    TaylorOracle,
    BrychkovVsLah,
    BrychkovVsLeibniz,
    LahExpBell,
    LaguerreExpBell,
    XdPowerBell,
}

impl IdentityId {
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::LaguerreThreeRoutes => "laguerre-three-routes",
            IdentityId::LahOrthogonalityOffDiag => "lah-orthogonality-offdiag",
            IdentityId::LahOrthogonalityDiag => "lah-orthogonality-diag",
            IdentityId::StirlingOrthogonality => "stirling-orthogonality",
            IdentityId::LahFromStirling => "lah-from-stirling",
            IdentityId::TodorovCharalambides => "todorov-charalambides",
            IdentityId::TodorovAtMinusOne => "todorov-at-minus-one",
            IdentityId::RisingToFalling => "rising-to-falling",
            IdentityId::FallingToRising => "falling-to-rising",
            IdentityId::FallingFactorialStirling => "falling-factorial-stirling",
            IdentityId::Gould => "gould",
            IdentityId::LahColumnGf => "lah-column-gf",
            IdentityId::LaguerreGf => "laguerre-gf",
            IdentityId::BellGf => "bell-gf",
            IdentityId::DerivativeFourWay => "derivative-four-way",
            IdentityId::SchwattVsExppoly => "schwatt-vs-exppoly",
            IdentityId::TaylorOracle => "taylor-oracle",
            IdentityId::BrychkovVsLah => "brychkov-vs-lah",
            IdentityId::BrychkovVsLeibniz => "brychkov-vs-leibniz",
            IdentityId::LahExpBell => "lah-expbell",
            IdentityId::LaguerreExpBell => "laguerre-expbell",
            IdentityId::XdPowerBell => "xd-power-bell",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Outcome of one identity at one parameter tuple. Both sides are kept even
/// on success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: Vec<String>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityReport {
    pub fn compare<T: PartialEq + ExactText>(
        id: IdentityId,
        params: Vec<String>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        IdentityReport {
            id,
            params,
            status: if lhs == rhs {
                Status::Pass
            } else {
                Status::Fail
            },
            lhs: lhs.exact_text(),
            rhs: rhs.exact_text(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn params(v: &[usize]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Named groups of checks selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Orthogonality,
    Todorov,
    Gould,
    Gf,
    Derivatives,
    Expbell,
}

impl Suite {
    pub const GROUPS: [Suite; 6] = [
        Suite::Orthogonality,
        Suite::Todorov,
        Suite::Gould,
        Suite::Gf,
        Suite::Derivatives,
        Suite::Expbell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Orthogonality => "orthogonality",
            Suite::Todorov => "todorov",
            Suite::Gould => "gould",
            Suite::Gf => "gf",
            Suite::Derivatives => "derivatives",
            Suite::Expbell => "expbell",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::GROUPS)
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}")))
    }
}

/// `sum_{k,j} (-1)^(k+j) L(n,k) L(m,j) (k+j-1)!` for `n != m`; always zero.
pub fn lah_orthogonality_offdiag(tables: &Tables, n: usize, m: usize) -> Result<BigInt> {
    if n == 0 || m == 0 {
        return Err(Error::Usage("orthogonality sums need n, m >= 1".into()));
    }
    if n == m {
        return Err(Error::Usage(format!(
            "n = m = {n} is the diagonal case, use lah_orthogonality_diag"
        )));
    }
    Ok(lah_double_sum(tables, n, m))
}

/// The same double sum with `m = n`; equals `(n!)^2 / n`.
pub fn lah_orthogonality_diag(tables: &Tables, n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Usage("orthogonality sums need n >= 1".into()));
    }
    Ok(from_big(&lah_double_sum(tables, n, n)))
}

fn lah_double_sum(tables: &Tables, n: usize, m: usize) -> BigInt {
    let mut total = BigInt::zero();
    for k in 1..=n {
        for j in 1..=m {
            total += tables.lah.get(n, k)
                * tables.lah.get(m, j)
                * factorial(k + j - 1)
                * parity_sign(k + j);
        }
    }
    total
}

/// Expansion of `C(a z + b, n) = prod_{i<n} (a z + b - i) / n!` as a
/// polynomial in `z`.
pub fn binomial_poly(a: &Rational, b: &Rational, n: usize) -> Poly {
    let prod = (0..n).fold(Poly::one(), |acc, i| {
        acc * Poly::linear(a.clone(), b - int(i as i64))
    });
    prod.scale(&from_big(&factorial(n)).recip())
}

/// Both sides of
/// `(m!/n!) sum_k s(n,k) S(k,m) z^k = (-1)^m sum_j C(m,j) (-1)^j C(j z, n)`
/// as polynomials in `z`.
pub fn todorov_charalambides(tables: &Tables, n: usize, m: usize) -> (Poly, Poly) {
    let weight = from_big(&factorial(m)) / from_big(&factorial(n));
    let lhs = Poly::new(
        (0..=n)
            .map(|k| {
                from_big(&(tables.stirling_first.get(n, k) * tables.stirling_second.get(k, m)))
            })
            .collect(),
    )
    .scale(&weight);
    let rhs: Poly = (0..=m)
        .map(|j| {
            let c = from_big(&binomial(m, j as i64)) * int(parity_sign(j));
            binomial_poly(&int(j as i64), &int(0), n).scale(&c)
        })
        .sum::<Poly>()
        .scale(&int(parity_sign(m)));
    (lhs, rhs)
}

/// Specializes the two sides of [`todorov_charalambides`] to `z = -1` and
/// follows the chain down to `L(n, m)`:
/// both sides agree, the alternating binomial sum collapses to
/// `(-1)^n C(n-1, m-1)`, and rescaling gives the Lah number from `tables`.
pub fn todorov_at_minus_one(tables: &Tables, n: usize, m: usize) -> Result<IdentityReport> {
    if m == 0 || m > n {
        return Err(Error::Usage(format!(
            "need 1 <= m <= n, got n = {n}, m = {m}"
        )));
    }
    let (lhs, rhs) = todorov_charalambides(tables, n, m);
    let z = int(-1);
    let lhs_at = lhs.eval(&z);
    let rhs_at = rhs.eval(&z);
    // (-1)^(m+n) sum_j C(m,j) (-1)^j C(n+j-1, n)
    let alternating: BigInt = (0..=m)
        .map(|j| binomial(m, j as i64) * binomial(n + j - 1, n as i64) * parity_sign(j))
        .sum::<BigInt>()
        * parity_sign(m + n);
    let collapsed = binomial(n - 1, m as i64 - 1) * parity_sign(n);
    let rescaled =
        &lhs_at * from_big(&factorial(n)) / from_big(&factorial(m)) * int(parity_sign(n));
    Ok(IdentityReport::compare(
        IdentityId::TodorovAtMinusOne,
        params(&[n, m]),
        &vec![lhs_at, from_big(&alternating), rescaled],
        &vec![
            rhs_at,
            from_big(&collapsed),
            from_big(&tables.lah.get(n, m)),
        ],
    ))
}

/// Both sides of `sum_j C(m,j) (-1)^j C(y+j, n) = (-1)^m C(y, n-m)` as
/// polynomials in `y`; the right side is zero when `n < m`.
pub fn gould_identity(m: usize, n: usize) -> (Poly, Poly) {
    let lhs: Poly = (0..=m)
        .map(|j| {
            let c = from_big(&binomial(m, j as i64)) * int(parity_sign(j));
            binomial_poly(&int(1), &int(j as i64), n).scale(&c)
        })
        .sum();
    let rhs = if n < m {
        Poly::zero()
    } else {
        binomial_poly(&int(1), &int(0), n - m).scale(&int(parity_sign(m)))
    };
    (lhs, rhs)
}

fn bell_from_tables(tables: &Tables, j: usize) -> Poly {
    Poly::from_big(tables.stirling_second.row(j))
}

/// `sum_{k>=1} L(n,k) x^k` against `(-1)^n sum_j s(n,j) (-1)^j phi_j(x)`.
pub fn lah_expbell_identity(tables: &Tables, n: usize) -> Result<(Poly, Poly)> {
    if n == 0 {
        return Err(Error::Usage("needs n >= 1".into()));
    }
    let mut row = tables.lah.row(n).to_vec();
    row[0] = BigInt::zero();
    let lhs = Poly::from_big(&row);
    let rhs: Poly = (0..=n)
        .map(|j| {
            let c = from_big(&tables.stirling_first.get(n, j)) * int(parity_sign(j));
            bell_from_tables(tables, j).scale(&c)
        })
        .sum::<Poly>()
        .scale(&int(parity_sign(n)));
    Ok((lhs, rhs))
}

/// `L_n^(-1)(x)` against `((-1)^n / n!) sum_j s(n,j) (-1)^j phi_j(-x)`.
pub fn laguerre_expbell_identity(tables: &Tables, n: usize) -> (Poly, Poly) {
    let lhs = laguerre(&int(-1), n);
    let rhs: Poly = (0..=n)
        .map(|j| {
            let c = from_big(&tables.stirling_first.get(n, j)) * int(parity_sign(j));
            bell_from_tables(tables, j).reflect().scale(&c)
        })
        .sum::<Poly>()
        .scale(&(int(parity_sign(n)) / from_big(&factorial(n))));
    (lhs, rhs)
}

/// Coefficients `c` used in the Schwatt / exponential-polynomial comparison.
pub fn schwatt_c_grid() -> Vec<Rational> {
    vec![int(1), int(-1), int(2), ratio(1, 2), ratio(-3, 2)]
}

/// Powers `p` used in the Schwatt / exponential-polynomial comparison.
pub fn schwatt_p_grid() -> Vec<Rational> {
    vec![int(-1), int(1), int(2), int(-2), ratio(1, 2)]
}

/// `(c, p, x0)` triples checked against the Taylor oracle.
pub fn oracle_grid() -> Vec<(Rational, Rational, Rational)> {
    let cs = [int(1), int(-1), ratio(1, 2)];
    let mut grid = Vec::new();
    for p in [-2, -1, 1, 2, 3] {
        for c in &cs {
            for x0 in [int(1), ratio(1, 2), int(2), ratio(3, 4)] {
                grid.push((c.clone(), int(p), x0));
            }
        }
    }
    for c in &cs {
        for x0 in [int(1), int(4), ratio(9, 4)] {
            grid.push((c.clone(), ratio(1, 2), x0));
        }
    }
    grid
}

fn rparams(n: usize, rest: &[&Rational]) -> Vec<String> {
    std::iter::once(n.to_string())
        .chain(rest.iter().map(|r| fmt_rational(r)))
        .collect()
}

fn gf_report<C: Coefficient + ExactText>(
    id: IdentityId,
    p: Vec<String>,
    check: crate::series::GfCheck<C>,
) -> IdentityReport
where
    for<'a> &'a C: std::ops::Add<&'a C, Output = C>
        + std::ops::Sub<&'a C, Output = C>
        + std::ops::Mul<&'a C, Output = C>,
{
    let (lhs, rhs): (Vec<C>, Vec<C>) = check
        .entries
        .into_iter()
        .map(|e| (e.extracted, e.expected))
        .unzip();
    IdentityReport::compare(id, p, &lhs, &rhs)
}

fn orthogonality_suite(tables: &Tables, nmax: usize, out: &mut Vec<IdentityReport>) -> Result<()> {
    for n in 0..=nmax {
        let direct = laguerre(&int(-1), n);
        let from_lah = laguerre_m1_from_lah_row(tables.lah.row(n));
        let operator = laguerre_rodriguez(-1, n)?;
        out.push(IdentityReport::compare(
            IdentityId::LaguerreThreeRoutes,
            params(&[n]),
            &vec![direct.clone(), direct],
            &vec![from_lah, operator],
        ));
    }
    for n in 1..=nmax {
        for m in 1..=nmax {
            if n != m {
                out.push(IdentityReport::compare(
                    IdentityId::LahOrthogonalityOffDiag,
                    params(&[n, m]),
                    &lah_orthogonality_offdiag(tables, n, m)?,
                    &BigInt::zero(),
                ));
            }
        }
    }
    for n in 1..=nmax {
        let nf = from_big(&factorial(n));
        out.push(IdentityReport::compare(
            IdentityId::LahOrthogonalityDiag,
            params(&[n]),
            &lah_orthogonality_diag(tables, n)?,
            &(&nf * &nf / int(n as i64)),
        ));
    }
    for n in 0..=nmax {
        for m in 0..=n {
            let delta = if m == n {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            out.push(IdentityReport::compare(
                IdentityId::StirlingOrthogonality,
                params(&[n, m]),
                &tables.stirling_orthogonality(n, m),
                &delta,
            ));
        }
    }
    Ok(())
}

fn todorov_suite(tables: &Tables, nmax: usize, out: &mut Vec<IdentityReport>) -> Result<()> {
    for n in 0..=nmax {
        for m in 0..=n {
            out.push(IdentityReport::compare(
                IdentityId::LahFromStirling,
                params(&[n, m]),
                &tables.lah_from_stirling(n, m),
                &tables.lah.get(n, m),
            ));
        }
    }
    for n in 0..=nmax {
        for m in 0..=nmax {
            let (lhs, rhs) = todorov_charalambides(tables, n, m);
            out.push(IdentityReport::compare(
                IdentityId::TodorovCharalambides,
                params(&[n, m]),
                &lhs,
                &rhs,
            ));
        }
    }
    for n in 1..=nmax {
        for m in 1..=n {
            out.push(todorov_at_minus_one(tables, n, m)?);
        }
    }
    for n in 1..=nmax {
        let row = tables.lah.row(n);
        let up = rising_to_falling_from_row(row);
        out.push(IdentityReport::compare(
            IdentityId::RisingToFalling,
            params(&[n]),
            &expand_falling_basis(&up.coeffs),
            &rising_poly(n),
        ));
        let down = falling_to_rising_from_row(row);
        out.push(IdentityReport::compare(
            IdentityId::FallingToRising,
            params(&[n]),
            &expand_rising_basis(&down.coeffs),
            &falling_poly(n),
        ));
    }
    for n in 0..=nmax {
        out.push(IdentityReport::compare(
            IdentityId::FallingFactorialStirling,
            params(&[n]),
            &falling_poly(n),
            &Poly::from_big(tables.stirling_first.row(n)),
        ));
    }
    Ok(())
}

fn gould_suite(nmax: usize, out: &mut Vec<IdentityReport>) {
    for m in 0..=nmax {
        for n in 0..=nmax {
            let (lhs, rhs) = gould_identity(m, n);
            out.push(IdentityReport::compare(
                IdentityId::Gould,
                params(&[m, n]),
                &lhs,
                &rhs,
            ));
        }
    }
}

fn gf_suite(tables: &Tables, nmax: usize, out: &mut Vec<IdentityReport>) -> Result<()> {
    for k in 1..=nmax {
        let check = lah_column_gf_check_against(&tables.lah, k, nmax)?;
        out.push(gf_report(
            IdentityId::LahColumnGf,
            params(&[k, nmax]),
            check,
        ));
    }
    out.push(gf_report(
        IdentityId::LaguerreGf,
        params(&[nmax]),
        laguerre_m1_gf_check(nmax)?,
    ));
    out.push(gf_report(
        IdentityId::BellGf,
        params(&[nmax]),
        bell_gf_check(nmax)?,
    ));
    Ok(())
}

fn derivatives_suite(tables: &Tables, nmax: usize, out: &mut Vec<IdentityReport>) -> Result<()> {
    let (one, minus_one) = (int(1), int(-1));
    for n in 0..=nmax {
        let lah_form = DerivClosedForm::from_lah_row(tables.lah.row(n));
        let others = vec![
            derive_via_laguerre(n),
            derive_via_schwatt(n, &one, &minus_one)?,
            derive_via_exppoly(n, &one, &minus_one)?,
        ];
        out.push(IdentityReport::compare(
            IdentityId::DerivativeFourWay,
            params(&[n]),
            &vec![lah_form.clone(), lah_form.clone(), lah_form],
            &others,
        ));
    }
    for c in schwatt_c_grid() {
        for p in schwatt_p_grid() {
            for n in 0..=nmax {
                out.push(IdentityReport::compare(
                    IdentityId::SchwattVsExppoly,
                    rparams(n, &[&c, &p]),
                    &derive_via_schwatt(n, &c, &p)?,
                    &derive_via_exppoly(n, &c, &p)?,
                ));
            }
        }
    }
    for (c, p, x0) in oracle_grid() {
        for n in 0..=nmax {
            let spec = DerivSpec::new(n, c.clone(), p.clone(), int(0));
            let oracle = taylor_oracle(&spec, &x0)?;
            let schwatt = evaluate_form(&derive_via_schwatt(n, &c, &p)?, &x0)?;
            let exppoly = evaluate_form(&derive_via_exppoly(n, &c, &p)?, &x0)?;
            out.push(IdentityReport::compare(
                IdentityId::TaylorOracle,
                rparams(n, &[&c, &p, &x0]),
                &vec![schwatt, exppoly],
                &vec![oracle.clone(), oracle],
            ));
        }
    }
    for n in 0..=nmax {
        out.push(IdentityReport::compare(
            IdentityId::BrychkovVsLah,
            params(&[n]),
            &derive_brychkov(n, &int(0), &minus_one),
            &DerivClosedForm::from_lah_row(tables.lah.row(n)),
        ));
    }
    for lambda in [int(0), int(1), int(2)] {
        for a in [int(-1), int(2)] {
            for n in 0..=nmax {
                out.push(IdentityReport::compare(
                    IdentityId::BrychkovVsLeibniz,
                    rparams(n, &[&lambda, &a]),
                    &derive_brychkov(n, &lambda, &a),
                    &derive_via_leibniz(n, &lambda, &a)?,
                ));
            }
        }
    }
    Ok(())
}

fn expbell_suite(tables: &Tables, nmax: usize, out: &mut Vec<IdentityReport>) -> Result<()> {
    for n in 1..=nmax {
        let (lhs, rhs) = lah_expbell_identity(tables, n)?;
        out.push(IdentityReport::compare(
            IdentityId::LahExpBell,
            params(&[n]),
            &lhs,
            &rhs,
        ));
    }
    for n in 0..=nmax {
        let (lhs, rhs) = laguerre_expbell_identity(tables, n);
        out.push(IdentityReport::compare(
            IdentityId::LaguerreExpBell,
            params(&[n]),
            &lhs,
            &rhs,
        ));
    }
    for n in 0..=nmax {
        out.push(IdentityReport::compare(
            IdentityId::XdPowerBell,
            params(&[n]),
            &xd_power(n),
            &bell_from_tables(tables, n),
        ));
    }
    Ok(())
}

/// Runs the selected checks for every parameter up to `nmax`. Reports come
/// back grouped by suite, then by identity, then by parameters, in a fixed
/// order.
pub fn run_suite(tables: &Tables, suite: Suite, nmax: usize) -> Result<Vec<IdentityReport>> {
    if nmax == 0 {
        return Err(Error::Usage("nmax must be >= 1".into()));
    }
    if tables.nmax() < nmax {
        return Err(Error::Usage(format!(
            "tables hold rows up to {}, nmax {nmax} needs more",
            tables.nmax()
        )));
    }
    let groups: Vec<Suite> = match suite {
        Suite::All => Suite::GROUPS.to_vec(),
        g => vec![g],
    };
    let mut out = Vec::new();
    for g in groups {
        match g {
            Suite::Orthogonality => orthogonality_suite(tables, nmax, &mut out)?,
            Suite::Todorov => todorov_suite(tables, nmax, &mut out)?,
            Suite::Gould => gould_suite(nmax, &mut out),
            Suite::Gf => gf_suite(tables, nmax, &mut out)?,
            Suite::Derivatives => derivatives_suite(tables, nmax, &mut out)?,
            Suite::Expbell => expbell_suite(tables, nmax, &mut out)?,
            Suite::All => unreachable!(),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tables() -> Tables {
        Tables::new(15)
    }

    #[test]
    fn offdiagonal_sums_vanish() {
        let t = tables();
        assert_eq!(lah_orthogonality_offdiag(&t, 1, 2).unwrap(), BigInt::zero());
        assert_eq!(lah_orthogonality_offdiag(&t, 2, 3).unwrap(), BigInt::zero());
        assert_eq!(lah_orthogonality_offdiag(&t, 1, 5).unwrap(), BigInt::zero());
        assert!(lah_orthogonality_offdiag(&t, 3, 3).is_err());
        assert!(lah_orthogonality_offdiag(&t, 0, 3).is_err());
    }

    #[test]
    fn diagonal_sums() {
        let t = tables();
        assert_eq!(lah_orthogonality_diag(&t, 1).unwrap(), int(1));
        assert_eq!(lah_orthogonality_diag(&t, 2).unwrap(), int(2));
        assert_eq!(lah_orthogonality_diag(&t, 4).unwrap(), int(144));
        assert!(lah_orthogonality_diag(&t, 0).is_err());
    }

    #[test]
    fn todorov_examples() {
        let t = tables();
        let (lhs, rhs) = todorov_charalambides(&t, 2, 1);
        let expected = Poly::new(vec![int(0), ratio(-1, 2), ratio(1, 2)]);
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
        let (lhs, rhs) = todorov_charalambides(&t, 0, 0);
        assert_eq!((lhs.clone(), rhs), (Poly::one(), Poly::one()));
        let (lhs, rhs) = todorov_charalambides(&t, 3, 3);
        // (3!/3!) s(3,3) S(3,3) z^3
        assert_eq!(lhs, Poly::monomial(int(1), 3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn todorov_structure() {
        let t = tables();
        for n in 0..=12 {
            for m in 0..=12 {
                let (lhs, rhs) = todorov_charalambides(&t, n, m);
                assert_eq!(lhs, rhs, "n={n} m={m}");
                assert!(lhs.degree().is_none_or(|d| d <= n));
                for k in 0..m.min(lhs.coeffs().len()) {
                    assert!(num_traits::Zero::is_zero(&lhs.coeff(k)));
                }
            }
        }
    }

    #[test]
    fn todorov_specialization() {
        let t = tables();
        for (n, m) in [(3, 2), (1, 1), (4, 2)] {
            let r = todorov_at_minus_one(&t, n, m).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let r = todorov_at_minus_one(&t, 4, 2).unwrap();
        assert!(r.rhs.ends_with("36]"));
        assert!(todorov_at_minus_one(&t, 2, 3).is_err());
    }

    #[test]
    fn gould_examples() {
        assert_eq!(
            gould_identity(1, 2),
            (Poly::from_ints(&[0, -1]), Poly::from_ints(&[0, -1]))
        );
        for n in 0..=5 {
            let (lhs, rhs) = gould_identity(0, n);
            assert_eq!(lhs, binomial_poly(&int(1), &int(0), n));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(gould_identity(2, 3).0, Poly::x());
        assert_eq!(gould_identity(2, 3).1, Poly::x());
        assert_eq!(gould_identity(4, 2), (Poly::zero(), Poly::zero()));
    }

    #[test]
    fn expbell_examples() {
        let t = tables();
        assert_eq!(lah_expbell_identity(&t, 1).unwrap().1, Poly::x());
        let (l2, r2) = lah_expbell_identity(&t, 2).unwrap();
        assert_eq!((l2.clone(), r2), (Poly::from_ints(&[0, 2, 1]), l2));
        let (l3, r3) = lah_expbell_identity(&t, 3).unwrap();
        assert_eq!(l3, Poly::from_ints(&[0, 6, 6, 1]));
        assert_eq!(l3, r3);
        assert_eq!(laguerre_expbell_identity(&t, 0), (Poly::one(), Poly::one()));
        let (a, b) = laguerre_expbell_identity(&t, 2);
        assert_eq!(a, Poly::new(vec![int(0), int(-1), ratio(1, 2)]));
        assert_eq!(a, b);
        let (a, b) = laguerre_expbell_identity(&t, 3);
        assert_eq!(b, Poly::new(vec![int(0), int(-1), int(1), ratio(-1, 6)]));
        assert_eq!(a, b);
    }

    #[test]
    fn suite_passes() {
        let t = Tables::new(6);
        let reports = run_suite(&t, Suite::All, 1).unwrap();
        assert!(reports.iter().all(IdentityReport::passed));
        let reports = run_suite(&t, Suite::All, 6).unwrap();
        let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert_eq!(run_suite(&t, Suite::Gould, 5).unwrap().len(), 36);
        assert!(run_suite(&t, Suite::All, 0).is_err());
        assert!(run_suite(&t, Suite::All, 7).is_err());
    }

    #[test]
    fn corrupted_lah_entry_is_caught() {
        let mut t = Tables::new(6);
        t.corrupt_lah(4, 2);
        let reports = run_suite(&t, Suite::All, 6).unwrap();
        let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
        assert!(failed
            .iter()
            .any(|r| r.id == IdentityId::LahFromStirling && r.params == ["4", "2"]));
        assert!(failed
            .iter()
            .any(|r| r.id == IdentityId::LaguerreThreeRoutes));
    }

    #[test]
    fn report_status_tracks_equality() {
        let r = IdentityReport::compare(IdentityId::Gould, vec![], &int(2), &ratio(4, 2));
        assert!(r.passed());
        assert_eq!(r.lhs, r.rhs);
        let r = IdentityReport::compare(IdentityId::Gould, vec![], &int(2), &int(3));
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::GROUPS) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
