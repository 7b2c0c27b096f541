use num_bigint::BigInt;
use num_traits::Pow;
use proptest::prelude::*;

use modsym_core::stirling::{Family, Triangle};
use modsym_core::symfun::{eval_modular_sym, modular_sym, Method};
use modsym_core::{Monomial, Polynomial, TruncatedSeries};

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, 0..4), -6i64..7), 0..6).prop_map(|ts| {
        Polynomial::from_terms(
            ts.into_iter()
                .map(|(e, c)| (Monomial::new(e), BigInt::from(c))),
        )
    })
}

fn point() -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec(-4i64..5, 3).prop_map(|v| v.into_iter().map(BigInt::from).collect())
}

fn series(bound: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(poly(), bound + 1)
        .prop_map(move |c| TruncatedSeries::from_coeffs(bound, c))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
        prop_assert!((&a * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in point()) {
        let (va, vb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), &va + &vb);
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &va * &vb);
    }

    #[test]
    fn power_substitution(a in poly(), b in poly(), m in 1u32..4, x in point()) {
        prop_assert_eq!((&a * &b).substitute_power(m), &a.substitute_power(m) * &b.substitute_power(m));
        let xm: Vec<BigInt> = x.iter().map(|v| Pow::pow(v, m)).collect();
        prop_assert_eq!(a.substitute_power(m).eval(&x).unwrap(), a.eval(&xm).unwrap());
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        let json = serde_json::to_string(&a).unwrap();
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(a.to_string() == "0", a.is_zero());
    }

    #[test]
    fn series_product_truncates(a in series(3), b in series(5)) {
        let p = a.mul(&b);
        prop_assert_eq!(p.degree_bound(), 3);
        for k in 0..=3 {
            let direct: Polynomial = (0..=k).map(|i| &a.coeff(i) * &b.coeff(k - i)).sum();
            prop_assert_eq!(p.coeff(k), direct);
        }
        prop_assert_eq!(a.add(&b).degree_bound(), 3);
    }

    #[test]
    fn modular_sym_is_symmetric(x in point(), k in 0usize..7, s in 1usize..4, i in 0usize..3, j in 0usize..3) {
        let m = modular_sym(3, k, s, Method::Recurrence);
        let mut y = x.clone();
        y.swap(i, j);
        prop_assert_eq!(m.eval(&x).unwrap(), m.eval(&y).unwrap());
        prop_assert_eq!(m.eval(&x).unwrap(), eval_modular_sym(&x, k, s));
    }

    #[test]
    fn triangle_csv_round_trip(n_max in 0usize..15, s in 1usize..5, f in 0usize..5) {
        let family = Family::ALL[f];
        let t = Triangle::build(family, s, n_max).unwrap();
        let csv = t.to_csv();
        let back = Triangle::from_csv(family, t.s, &csv).unwrap();
        prop_assert_eq!(back.to_csv(), csv);
        prop_assert_eq!(back, t);
    }
}
