//! Closed forms for `D^n [x^lambda exp(c x^p)]`.
//!
//! Every formula is reshaped into the normal form
//!
//! ```text
//! D^n [x^lambda e^(c x^p)] = e^(c x^p) * x^(lambda - n) * sum_{k=0}^{n} a_k x^(p k)
//! ```
//!
//! so that different routes can be compared coefficient by coefficient. The
//! Taylor oracle computes the same derivative at a point without going through
//! any of the closed forms.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    binomial, factorial, falling, from_big, gen_binomial, int, parity_sign, pow_int, pow_rational,
    BigInt, Rational,
};
use crate::polynomials::laguerre;
use crate::sequences::{lah, stirling_first, stirling_second};
use crate::series::TruncSeries;

/// Parameters of `D^n [x^lambda exp(c x^p)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DerivSpec {
    pub n: usize,
    pub c: Rational,
    pub p: Rational,
    pub lambda: Rational,
}

impl DerivSpec {
    pub fn new(n: usize, c: Rational, p: Rational, lambda: Rational) -> Self {
        DerivSpec { n, c, p, lambda }
    }

    /// `D^n exp(1/x)`
    pub fn exp_inverse(n: usize) -> Self {
        DerivSpec::new(n, int(1), int(-1), int(0))
    }

    /// Parameter of the `x^lambda exp(-a/x)` form; `a = -c` when `p = -1`.
    pub fn a(&self) -> Rational {
        -&self.c
    }
}

/// Coefficients `a_0..=a_n` of the normal form. Explicit zeros are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DerivClosedForm {
    pub spec: DerivSpec,
    pub coeffs: Vec<Rational>,
}

impl DerivClosedForm {
    fn zeros(spec: DerivSpec) -> Self {
        let coeffs = vec![Rational::zero(); spec.n + 1];
        DerivClosedForm { spec, coeffs }
    }

    /// `(-1)^n L(n,k)`, given row `n` of a Lah triangle.
    pub fn from_lah_row(row: &[BigInt]) -> Self {
        let n = row.len() - 1;
        DerivClosedForm {
            spec: DerivSpec::exp_inverse(n),
            coeffs: row
                .iter()
                .map(|l| from_big(l) * int(parity_sign(n)))
                .collect(),
        }
    }
}

fn reject_degenerate(p: &Rational) -> Result<()> {
    if p.is_zero() {
        return Err(Error::Degenerate(
            "p = 0 makes exp(c x^p) constant; the x^(p k) normal form does not apply".into(),
        ));
    }
    Ok(())
}

/// `D^n e^(1/x) = (-1)^n e^(1/x) x^(-n) sum_k L(n,k) x^(-k)`.
pub fn derive_via_lah(n: usize) -> DerivClosedForm {
    let row: Vec<BigInt> = (0..=n).map(|k| lah(n, k)).collect();
    DerivClosedForm::from_lah_row(&row)
}

/// `D^n e^(1/x) = (-1)^n n! e^(1/x) x^(-n) L_n^(-1)(-1/x)`.
pub fn derive_via_laguerre(n: usize) -> DerivClosedForm {
    let poly = laguerre(&int(-1), n);
    let scale = from_big(&factorial(n)) * int(parity_sign(n));
    let mut form = DerivClosedForm::zeros(DerivSpec::exp_inverse(n));
    for (k, slot) in form.coeffs.iter_mut().enumerate() {
        // (-1/x)^k puts (-1)^k into the x^(-k) slot
        *slot = poly.coeff(k) * &scale * int(parity_sign(k));
    }
    form
}

/// Schwatt's double sum:
/// `a_k = n! (-1)^k c^k / k! * sum_{j=1}^{k} (-1)^j C(k,j) C(p j, n)`.
pub fn derive_via_schwatt(n: usize, c: &Rational, p: &Rational) -> Result<DerivClosedForm> {
    reject_degenerate(p)?;
    let mut form = DerivClosedForm::zeros(DerivSpec::new(n, c.clone(), p.clone(), int(0)));
    if n == 0 {
        form.coeffs[0] = Rational::one();
        return Ok(form);
    }
    let nf = from_big(&factorial(n));
    let mut c_pow = Rational::one();
    for k in 1..=n {
        c_pow *= c;
        let inner: Rational = (1..=k)
            .map(|j| {
                let pj = p * int(j as i64);
                gen_binomial(&pj, n) * from_big(&binomial(k, j as i64)) * int(parity_sign(j))
            })
            .sum();
        form.coeffs[k] = &nf * int(parity_sign(k)) * &c_pow / from_big(&factorial(k)) * inner;
    }
    Ok(form)
}

/// Stirling / exponential polynomial form
/// `e^(c x^p) x^(-n) sum_j s(n,j) p^j phi_j(c x^p)`, expanded so that
/// `a_k = c^k sum_{j=k}^{n} s(n,j) p^j S(j,k)`.
pub fn derive_via_exppoly(n: usize, c: &Rational, p: &Rational) -> Result<DerivClosedForm> {
    reject_degenerate(p)?;
    let mut form = DerivClosedForm::zeros(DerivSpec::new(n, c.clone(), p.clone(), int(0)));
    let p_pows: Vec<Rational> = (0..=n)
        .map(|j| pow_int(p, j as i64))
        .collect::<Result<_>>()?;
    for k in 0..=n {
        let sum: Rational = (k..=n)
            .map(|j| from_big(&(stirling_first(n, j) * stirling_second(j, k))) * &p_pows[j])
            .sum();
        form.coeffs[k] = sum * pow_int(c, k as i64)?;
    }
    Ok(form)
}

/// `D^n [x^lambda e^(-a/x)] = (-1)^n n! e^(-a/x) x^(lambda-n) L_n^(-lambda-1)(a/x)`.
pub fn derive_brychkov(n: usize, lambda: &Rational, a: &Rational) -> DerivClosedForm {
    let order = -lambda - int(1);
    let poly = laguerre(&order, n);
    let scale = from_big(&factorial(n)) * int(parity_sign(n));
    let spec = DerivSpec::new(n, -a, int(-1), lambda.clone());
    let mut form = DerivClosedForm::zeros(spec);
    let mut a_pow = Rational::one();
    for k in 0..=n {
        form.coeffs[k] = poly.coeff(k) * &scale * &a_pow;
        a_pow *= a;
    }
    form
}

/// Leibniz rule on `x^lambda * e^(-a/x)`, with the derivatives of `e^(-a/x)`
/// taken from [`derive_via_schwatt`]. An independent route to
/// [`derive_brychkov`].
pub fn derive_via_leibniz(n: usize, lambda: &Rational, a: &Rational) -> Result<DerivClosedForm> {
    let c = -a;
    let spec = DerivSpec::new(n, c.clone(), int(-1), lambda.clone());
    let mut form = DerivClosedForm::zeros(spec);
    for k in 0..=n {
        let weight = from_big(&binomial(n, k as i64)) * falling(lambda, k);
        if weight.is_zero() {
            continue;
        }
        // x^(lambda-k) * x^(-(n-k)) = x^(lambda-n); slot indices carry over
        let inner = derive_via_schwatt(n - k, &c, &int(-1))?;
        for (j, b) in inner.coeffs.iter().enumerate() {
            form.coeffs[j] += &weight * b;
        }
    }
    Ok(form)
}

/// `x0^(lambda-n) * sum_k a_k x0^(p k)`, i.e. the derivative at `x0` with the
/// factor `e^(c x0^p)` removed.
pub fn evaluate_form(form: &DerivClosedForm, x0: &Rational) -> Result<Rational> {
    if x0.is_zero() {
        return Err(Error::Domain("evaluation point must be nonzero".into()));
    }
    let spec = &form.spec;
    let prefactor = pow_rational(x0, &(&spec.lambda - int(spec.n as i64)))?;
    let x0_p = pow_rational(x0, &spec.p)?;
    let mut sum = Rational::zero();
    let mut x0_pk = Rational::one();
    for a in &form.coeffs {
        sum += a * &x0_pk;
        x0_pk *= &x0_p;
    }
    Ok(prefactor * sum)
}

/// Binomial series `(1 + h/x0)^e` to the given order in `h`.
fn binomial_series(e: &Rational, x0: &Rational, order: usize) -> TruncSeries<Rational> {
    let inv = x0.recip();
    let coeffs = (0..=order)
        .map(|k| gen_binomial(e, k) * pow_int(&inv, k as i64).expect("x0 is nonzero"))
        .collect();
    TruncSeries::new(coeffs, order)
}

/// Exact `D^n [x^lambda e^(c x^p)] / e^(c x0^p)` at `x = x0`, obtained as
/// `n! [h^n]` of the Taylor expansion in `h = x - x0`:
/// `x0^lambda (1 + h/x0)^lambda * exp(c x0^p ((1 + h/x0)^p - 1))`.
pub fn taylor_oracle(spec: &DerivSpec, x0: &Rational) -> Result<Rational> {
    if x0.is_zero() {
        return Err(Error::Domain("expansion point must be nonzero".into()));
    }
    let n = spec.n;
    let x0_p = pow_rational(x0, &spec.p)?;
    let x0_lambda = pow_rational(x0, &spec.lambda)?;
    let mut inner = binomial_series(&spec.p, x0, n);
    inner = inner.sub(&TruncSeries::one(n))?.scale(&(&spec.c * x0_p));
    let series = binomial_series(&spec.lambda, x0, n).mul(&inner.exp()?)?;
    Ok(series.coeff(n) * from_big(&factorial(n)) * x0_lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn lah_route() {
        assert_eq!(derive_via_lah(0).coeffs, ints(&[1]));
        assert_eq!(derive_via_lah(1).coeffs, ints(&[0, -1]));
        assert_eq!(derive_via_lah(2).coeffs, ints(&[0, 2, 1]));
    }

    #[test]
    fn laguerre_route() {
        assert_eq!(derive_via_laguerre(0).coeffs, ints(&[1]));
        assert_eq!(derive_via_laguerre(1).coeffs, ints(&[0, -1]));
        assert_eq!(derive_via_laguerre(2).coeffs, ints(&[0, 2, 1]));
    }

    #[test]
    fn schwatt_route() {
        assert_eq!(
            derive_via_schwatt(1, &int(1), &int(-1)).unwrap().coeffs,
            ints(&[0, -1])
        );
        assert_eq!(
            derive_via_schwatt(2, &int(1), &int(2)).unwrap().coeffs,
            ints(&[0, 2, 4])
        );
        assert_eq!(
            derive_via_schwatt(2, &int(1), &int(-1)).unwrap().coeffs,
            ints(&[0, 2, 1])
        );
        assert_eq!(
            derive_via_schwatt(0, &int(3), &ratio(1, 2)).unwrap().coeffs,
            ints(&[1])
        );
        assert!(matches!(
            derive_via_schwatt(2, &int(1), &int(0)),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn exppoly_route() {
        assert_eq!(
            derive_via_exppoly(1, &int(1), &int(-1)).unwrap().coeffs,
            ints(&[0, -1])
        );
        assert_eq!(
            derive_via_exppoly(2, &int(1), &int(-1)).unwrap().coeffs,
            ints(&[0, 2, 1])
        );
        assert_eq!(
            derive_via_exppoly(2, &int(1), &ratio(1, 2)).unwrap(),
            derive_via_schwatt(2, &int(1), &ratio(1, 2)).unwrap()
        );
        assert!(derive_via_exppoly(3, &int(1), &int(0)).is_err());
    }

    #[test]
    fn brychkov_route() {
        assert_eq!(
            derive_brychkov(2, &int(0), &int(-1)).coeffs,
            ints(&[0, 2, 1])
        );
        assert_eq!(derive_brychkov(0, &int(0), &int(-1)).coeffs, ints(&[1]));
        let f = derive_brychkov(1, &int(1), &int(-1));
        assert_eq!(f.coeffs, ints(&[1, -1]));
        assert_eq!(f.spec.lambda, int(1));
        assert_eq!(f.spec.c, int(1));
        for n in 0..=12 {
            assert_eq!(derive_brychkov(n, &int(0), &int(-1)), derive_via_lah(n));
        }
    }

    #[test]
    fn brychkov_against_leibniz() {
        for lambda in [int(0), int(1), int(2), ratio(1, 2), int(-3)] {
            for a in [int(-1), int(2), ratio(-1, 3), int(0)] {
                for n in 0..=8 {
                    assert_eq!(
                        derive_brychkov(n, &lambda, &a),
                        derive_via_leibniz(n, &lambda, &a).unwrap(),
                        "n={n} lambda={lambda} a={a}"
                    );
                }
            }
        }
    }

    #[test]
    fn four_routes_agree() {
        for n in 0..=15 {
            let lah_form = derive_via_lah(n);
            assert_eq!(lah_form, derive_via_laguerre(n));
            assert_eq!(lah_form, derive_via_schwatt(n, &int(1), &int(-1)).unwrap());
            assert_eq!(lah_form, derive_via_exppoly(n, &int(1), &int(-1)).unwrap());
            if n >= 1 {
                assert!(lah_form.coeffs[0].is_zero());
            }
            assert_eq!(lah_form.coeffs.len(), n + 1);
        }
    }

    #[test]
    fn evaluation() {
        assert_eq!(
            evaluate_form(&derive_via_lah(1), &int(2)).unwrap(),
            ratio(-1, 4)
        );
        assert_eq!(
            evaluate_form(&derive_via_lah(0), &ratio(7, 3)).unwrap(),
            int(1)
        );
        assert_eq!(evaluate_form(&derive_via_lah(2), &int(1)).unwrap(), int(3));
        let half = derive_via_schwatt(2, &int(1), &ratio(1, 2)).unwrap();
        assert!(evaluate_form(&half, &int(2)).is_err());
        assert!(evaluate_form(&half, &int(0)).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            taylor_oracle(&DerivSpec::exp_inverse(1), &int(1)).unwrap(),
            int(-1)
        );
        assert_eq!(
            taylor_oracle(&DerivSpec::exp_inverse(2), &int(1)).unwrap(),
            int(3)
        );
        // D^2 e^(sqrt x) = e^(sqrt x) (1/(4x) - 1/(4 x^(3/2))); at x = 4: 1/16 - 1/32
        let spec = DerivSpec::new(2, int(1), ratio(1, 2), int(0));
        assert_eq!(taylor_oracle(&spec, &int(4)).unwrap(), ratio(1, 32));
        let form = derive_via_exppoly(2, &int(1), &ratio(1, 2)).unwrap();
        assert_eq!(evaluate_form(&form, &int(4)).unwrap(), ratio(1, 32));
        assert!(taylor_oracle(&spec, &int(2)).is_err());
        assert!(taylor_oracle(&spec, &int(0)).is_err());
        // D [x e^(1/x)] = e^(1/x) (1 - 1/x); at x = 2: 1/2
        let spec = DerivSpec::new(1, int(1), int(-1), int(1));
        assert_eq!(taylor_oracle(&spec, &int(2)).unwrap(), ratio(1, 2));
    }

    #[test]
    fn oracle_matches_closed_forms_on_a_small_grid() {
        for n in 0..=6 {
            for p in [int(-2), int(-1), int(1), int(3)] {
                for c in [int(1), ratio(1, 2)] {
                    let form = derive_via_schwatt(n, &c, &p).unwrap();
                    for x0 in [int(1), ratio(1, 2), ratio(3, 4)] {
                        let spec = DerivSpec::new(n, c.clone(), p.clone(), int(0));
                        assert_eq!(
                            evaluate_form(&form, &x0).unwrap(),
                            taylor_oracle(&spec, &x0).unwrap()
                        );
                    }
                }
            }
        }
        for n in 0..=6 {
            for lambda in [int(1), int(2), ratio(1, 2)] {
                let form = derive_brychkov(n, &lambda, &int(-2));
                let x0 = int(4);
                assert_eq!(
                    evaluate_form(&form, &x0).unwrap(),
                    taylor_oracle(&form.spec, &x0).unwrap()
                );
            }
        }
    }
}
