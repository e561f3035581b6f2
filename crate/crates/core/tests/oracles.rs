//! Cross-route checks that pit the fast paths against literal brute force.

mod common;

use std::collections::HashMap;

use num::bigint::BigInt;

use grfunc::beta::psi_pcoalg_class;
use grfunc::partition::{factorial, partitions_of, Partition};
use grfunc::symfunc::{lr_coefficient, lr_expand};

use common::{peel_schur, product_char_oracle, schur_poly, schur_rows, MPoly};

/// Littlewood-Richardson coefficients against honest polynomial
/// multiplication in |nu| variables followed by leading-monomial peeling.
#[test]
fn lr_coefficient_matches_polynomial_multiplication() {
    for total in 1..=8u32 {
        let n_vars = total as usize;
        let mut polys: HashMap<Partition, MPoly> = HashMap::new();
        let mut poly_of = |lam: &Partition| -> MPoly {
            polys
                .entry(lam.clone())
                .or_insert_with(|| schur_poly(lam, n_vars))
                .clone()
        };
        for a in 0..=total {
            let b = total - a;
            for lam in partitions_of(a) {
                for mu in partitions_of(b) {
                    let product = poly_of(&lam).mul(&poly_of(&mu));
                    let rows: HashMap<Partition, BigInt> =
                        peel_schur(product, n_vars).into_iter().collect();
                    for nu in partitions_of(total) {
                        let got = rows.get(&nu).cloned().unwrap_or_default();
                        assert_eq!(
                            BigInt::from(lr_coefficient(&lam, &mu, &nu)),
                            got,
                            "c^{nu}_{{{lam},{mu}}}"
                        );
                    }
                }
            }
        }
    }
}

/// The acceptance suite covers degrees up to 8; the arity-9 and arity-10
/// tables consume products at those degrees too, so check the rule against
/// the character route there as well.
#[test]
fn lr_rule_matches_character_route_at_degrees_nine_and_ten() {
    for total in 9..=10u32 {
        for a in 1..total {
            let b = total - a;
            for lam in partitions_of(a) {
                for mu in partitions_of(b) {
                    let via_char = schur_rows(&product_char_oracle(&lam, &mu));
                    let mut via_lr: Vec<(Partition, i64)> = lr_expand(&lam, &mu)
                        .iter()
                        .map(|(nu, c)| (nu.clone(), *c as i64))
                        .collect();
                    via_lr.sort();
                    assert_eq!(via_lr, via_char, "routes disagree at {lam} * {mu}");
                }
            }
        }
    }
}

/// Rank-r dimension of the arity-d aggregate by literally summing the
/// induced-module dimensions over ordered decompositions d_1 + ... + d_r = d.
#[test]
fn psi_dimension_matches_composition_sum() {
    fn compositions(d: u32, r: u32) -> Vec<Vec<u32>> {
        if r == 1 {
            return vec![vec![d]];
        }
        let mut out = Vec::new();
        for first in 0..=d {
            for mut rest in compositions(d - first, r - 1) {
                let mut v = vec![first];
                v.append(&mut rest);
                out.push(v);
            }
        }
        out
    }
    for d in 0..=5u32 {
        let psi = psi_pcoalg_class(d).unwrap();
        for r in 1..=3u32 {
            let mut total = BigInt::from(0);
            for comp in compositions(d, r) {
                // multinomial(d; comp) * prod comp_i!
                let mut term = BigInt::from(factorial(d));
                for &di in &comp {
                    term /= BigInt::from(factorial(di));
                }
                for &di in &comp {
                    term *= BigInt::from(factorial(di));
                }
                total += term;
            }
            assert_eq!(
                BigInt::from(psi.eval_dimension(r)),
                total,
                "psi({d}) at rank {r}"
            );
        }
    }
}
