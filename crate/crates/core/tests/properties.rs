//! Randomized invariants.

use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use proptest::prelude::*;

use grfunc::partition::Partition;
use grfunc::symfunc::{lr_coefficient, power_to_schur, schur_product, schur_to_power, SchurVector};

/// Random partition of size at most `max`.
fn partition_strategy(max: u32) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=max, 0..=max as usize).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        let mut kept = Vec::new();
        for p in parts {
            if total + p > max {
                continue;
            }
            total += p;
            kept.push(p);
        }
        kept.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(kept)
    })
}

fn schur_vector_strategy(max_deg: u32) -> impl Strategy<Value = SchurVector> {
    proptest::collection::vec((partition_strategy(max_deg), -5i64..=5), 0..5).prop_map(|terms| {
        let mut v = SchurVector::zero();
        for (lam, c) in terms {
            v.add_term(lam, BigRational::from_integer(BigInt::from(c)));
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_round_trip(v in schur_vector_strategy(8)) {
        prop_assert_eq!(power_to_schur(&schur_to_power(&v)), v);
    }

    #[test]
    fn conjugate_is_involutive(lam in partition_strategy(12)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn partition_text_round_trip(lam in partition_strategy(12)) {
        let text = lam.to_string();
        prop_assert_eq!(Partition::from_str(&text).unwrap(), lam);
    }

    #[test]
    fn lr_commutes(lam in partition_strategy(4), mu in partition_strategy(4), nu in partition_strategy(8)) {
        prop_assert_eq!(
            lr_coefficient(&lam, &mu, &nu),
            lr_coefficient(&mu, &lam, &nu)
        );
    }

    #[test]
    fn product_is_commutative(lam in partition_strategy(4), mu in partition_strategy(4)) {
        let a = SchurVector::basis(lam);
        let b = SchurVector::basis(mu);
        prop_assert_eq!(schur_product(&a, &b), schur_product(&b, &a));
    }

    #[test]
    fn pieri_matches_containment(lam in partition_strategy(8)) {
        let added = lam.pieri_add_box();
        for mu in &added {
            prop_assert!(mu.contains(&lam));
            prop_assert_eq!(mu.size(), lam.size() + 1);
        }
        prop_assert_eq!(added.len(), {
            let mut distinct = added.clone();
            distinct.dedup();
            distinct.len()
        });
    }
}
