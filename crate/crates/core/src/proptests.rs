//! Randomised checks of the cross-module invariants.

use proptest::prelude::*;

use crate::characters::{hook_char_row, mn_char};
use crate::decomposition::{decompose_full, decompose_reduced, h_via_hooks, rho_poly};
use crate::exact_arith::Rat;
use crate::hurwitz::{h_onepart, h_quasi, parity_forces_zero, w_onepart, Engine};
use crate::oracle::Oracle;
use crate::polynomiality::interpolate_grid;
use crate::shifted::completed_cycle;
use crate::{partitions_of, HurwitzQuery, Partition};

fn partition(max_size: u32) -> impl Strategy<Value = Partition> {
    (1..=max_size).prop_flat_map(|d| {
        let all = partitions_of(d);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn k_part(max_size: u32) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|d| {
        let all = if d == 0 {
            vec![Partition::empty()]
        } else {
            partitions_of(d)
        };
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_text_round_trip(p in partition(12)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn class_sizes_sum_to_factorial(d in 1u32..=8) {
        let total: num_bigint::BigInt = partitions_of(d).iter().map(|p| p.class_size()).sum();
        prop_assert_eq!(total, crate::exact_arith::factorial(d));
    }

    #[test]
    fn hook_row_is_mn(beta in partition(9)) {
        let d = beta.size();
        let row = hook_char_row(&beta).unwrap();
        for j in 0..d {
            prop_assert_eq!(row[j as usize], mn_char(&Partition::hook(j, d), &beta).unwrap());
        }
    }

    #[test]
    fn decomposition_reconstructs(beta in partition(12)) {
        let full = decompose_full(&beta).unwrap();
        prop_assert_eq!(full.reconstruct(), rho_poly(&beta).unwrap());
        prop_assert_eq!(decompose_reduced(&beta).unwrap(), full);
    }

    #[test]
    fn completed_cycle_support(k in 1u32..=6) {
        // weights vanish beyond |μ| = k and are nonnegative
        for (mu, c) in completed_cycle(k, false).unwrap().iter() {
            prop_assert!(mu.size() <= k);
            prop_assert!(!c.is_negative());
        }
    }

    #[test]
    fn engines_agree(beta in partition(6), k in k_part(4), q in 1u32..=6) {
        let d = beta.size();
        let q = q.min(d);
        let a = w_onepart(d, q, &k, &beta, Engine::CharacterSum).unwrap();
        let b = w_onepart(d, q, &k, &beta, Engine::GeneratingFunction).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn routes_agree(beta in partition(5), k in k_part(4), m in 1u32..=5) {
        let d = beta.size();
        let m = m.min(d);
        let one = h_onepart(d, m, &k, &beta).unwrap();
        let q = HurwitzQuery::one_part(d, m, k.clone(), beta.clone()).unwrap();
        prop_assert_eq!(&h_quasi(&q).unwrap(), &one);
        if !k.is_empty() {
            prop_assert_eq!(&h_via_hooks(d, m, &k, &beta).unwrap(), &one);
        }
        if parity_forces_zero(d, m, &k, &beta) {
            prop_assert!(one.is_zero());
        }
    }

    #[test]
    fn oracle_matches_formula(beta in partition(4), k in k_part(3), m in 1u32..=4, star: bool) {
        let d = beta.size();
        let m = m.min(d);
        let q = HurwitzQuery::new(d, m, k, vec![Partition::full(d), beta], star).unwrap();
        prop_assert_eq!(
            Oracle::default().h_by_definition(&q).unwrap(),
            crate::hurwitz::compute(&q).unwrap()
        );
    }

    #[test]
    fn xi_count_reversal(a in partition(5), m in 1u32..=5) {
        let d = a.size();
        let m = m.min(d);
        let o = Oracle::default();
        let classes = vec![a.clone(), Partition::full(d), Partition::identity(d)];
        let mut rev = classes.clone();
        rev.reverse();
        prop_assert_eq!(o.xi_count(d, m, &classes).unwrap(), o.xi_count(d, m, &rev).unwrap());
    }

    #[test]
    fn interpolation_recovers(coeffs in proptest::collection::vec(-9i64..=9, 9)) {
        // a polynomial of partial degrees <= 2 in two variables
        let p = interpolate_grid(vec!["x".into(), "y".into()], 3, |pt| {
            let (x, y) = (pt[0] as i64, pt[1] as i64);
            let mut v = 0;
            for i in 0..3 {
                for j in 0..3 {
                    v += coeffs[3 * i + j] * x.pow(i as u32) * y.pow(j as u32);
                }
            }
            Ok(Rat::from(v))
        })
        .unwrap();
        for i in 0..3u32 {
            for j in 0..3u32 {
                prop_assert_eq!(p.coeff(&[i, j]), Rat::from(coeffs[(3 * i + j) as usize]));
            }
        }
    }
}
