use lahlab_core::derivatives::{
    derive_brychkov, derive_via_exppoly, derive_via_leibniz, derive_via_schwatt, evaluate_form,
    taylor_oracle,
};
use lahlab_core::exact::{int, ratio};
use lahlab_core::identities::{run_suite, Suite};
use lahlab_core::polynomials::{falling_to_rising, laguerre, rising_to_falling};
use lahlab_core::sequences::{lah, lah_from_stirling};
use lahlab_core::{DerivSpec, Rational, Tables};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != int(0))
}

fn integer_power() -> impl Strategy<Value = Rational> {
    prop_oneof![-3i64..=-1, 1i64..=3].prop_map(int)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn schwatt_value_matches_oracle(
        n in 0usize..=7,
        c in nonzero_rational(),
        p in integer_power(),
        x0 in nonzero_rational(),
    ) {
        let spec = DerivSpec::new(n, c.clone(), p.clone(), int(0));
        let form = derive_via_schwatt(n, &c, &p).unwrap();
        prop_assert_eq!(evaluate_form(&form, &x0).unwrap(), taylor_oracle(&spec, &x0).unwrap());
    }

    #[test]
    fn schwatt_and_exppoly_agree(n in 0usize..=8, c in nonzero_rational(), p in nonzero_rational()) {
        prop_assert_eq!(derive_via_schwatt(n, &c, &p).unwrap(), derive_via_exppoly(n, &c, &p).unwrap());
    }

    #[test]
    fn brychkov_matches_leibniz(n in 0usize..=8, lambda in rational(), a in nonzero_rational()) {
        prop_assert_eq!(derive_brychkov(n, &lambda, &a), derive_via_leibniz(n, &lambda, &a).unwrap());
    }

    #[test]
    fn brychkov_value_matches_oracle(
        n in 0usize..=6,
        lambda in -3i64..=3,
        a in nonzero_rational(),
        x0 in nonzero_rational(),
    ) {
        let form = derive_brychkov(n, &int(lambda), &a);
        prop_assert_eq!(
            evaluate_form(&form, &x0).unwrap(),
            taylor_oracle(&form.spec, &x0).unwrap()
        );
    }

    #[test]
    fn lah_recovered_from_stirling(n in 0usize..=20, m in 0usize..=20) {
        prop_assert_eq!(lah_from_stirling(n, m), lah(n, m));
    }

    #[test]
    fn laguerre_recurrence(alpha in rational(), n in 1usize..=10, x in rational()) {
        // (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}
        let nn = int(n as i64);
        let lhs = laguerre(&alpha, n + 1).eval(&x) * (&nn + int(1));
        let rhs = laguerre(&alpha, n).eval(&x) * (&nn * int(2) + int(1) + &alpha - &x)
            - laguerre(&alpha, n - 1).eval(&x) * (&nn + &alpha);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn basis_conversions_are_consistent() {
    for n in 1..=15 {
        assert!(rising_to_falling(n).unwrap().consistent, "n = {n}");
        assert!(falling_to_rising(n).unwrap().consistent, "n = {n}");
    }
}

#[test]
fn every_suite_passes() {
    let tables = Tables::new(8);
    for suite in Suite::GROUPS {
        let reports = run_suite(&tables, suite, 8).unwrap();
        assert!(!reports.is_empty(), "{}", suite.name());
        for r in &reports {
            assert!(
                r.passed(),
                "{} {:?}: {} != {}",
                r.id,
                r.params,
                r.lhs,
                r.rhs
            );
        }
    }
}
