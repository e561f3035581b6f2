//! Test-only oracles, kept independent of the library's fast paths.
//!
//! * [`schur_poly`] expands a Schur function as an honest symmetric
//!   polynomial by enumerating semistandard tableaux;
//! * [`peel_schur`] recovers Schur coefficients from a symmetric polynomial
//!   by repeatedly stripping the lex-leading monomial;
//! * [`plethysm_monomial_oracle`] substitutes the monomials of one Schur
//!   polynomial into another, never touching power sums;
//! * [`product_char_oracle`] multiplies Schur vectors through the power-sum
//!   basis, never touching the Littlewood-Richardson rule.
//!
//! Each integration test compiles its own copy, so helpers unused by one
//! target are expected.
#![allow(dead_code, clippy::type_complexity)]

use std::collections::BTreeMap;
use std::collections::HashMap;

use num::bigint::BigInt;
use num::{One, Zero};

use grfunc::partition::Partition;
use grfunc::symfunc::{power_product, power_to_schur, schur_to_power, SchurVector};

/// Dense-exponent polynomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }
}

/// Enumerate the semistandard tableaux of shape `lambda` with entries in
/// 1..=n_vals, invoking `visit` with the content vector of each.
fn for_each_ssyt(lambda: &Partition, n_vals: usize, visit: &mut dyn FnMut(&[u32])) {
    fn rec(
        lambda: &Partition,
        n_vals: usize,
        rows: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        let target = (0..rows.len()).find(|&i| (rows[i].len() as u32) < lambda.part(i));
        let Some(i) = target else {
            visit(content);
            return;
        };
        let col = rows[i].len();
        let lo = if col > 0 { rows[i][col - 1] } else { 1 };
        let floor = if i > 0 { rows[i - 1][col] + 1 } else { 1 };
        for v in lo.max(floor)..=(n_vals as u32) {
            rows[i].push(v);
            content[(v - 1) as usize] += 1;
            rec(lambda, n_vals, rows, content, visit);
            content[(v - 1) as usize] -= 1;
            rows[i].pop();
        }
    }
    let mut rows: Vec<Vec<u32>> = lambda.parts().iter().map(|_| Vec::new()).collect();
    let mut content = vec![0u32; n_vals];
    if lambda.is_empty() {
        visit(&content);
        return;
    }
    rec(lambda, n_vals, &mut rows, &mut content, visit);
}

/// The Schur polynomial s_lambda(x_1, ..., x_{n_vars}).
pub fn schur_poly(lambda: &Partition, n_vars: usize) -> MPoly {
    let mut out = MPoly::default();
    for_each_ssyt(lambda, n_vars, &mut |content| {
        out.add_term(content.to_vec(), BigInt::one());
    });
    out
}

/// Write a symmetric polynomial as a Schur combination by peeling leading
/// monomials; panics if the input is not symmetric enough to peel.
pub fn peel_schur(mut poly: MPoly, n_vars: usize) -> Vec<(Partition, BigInt)> {
    let mut cache: HashMap<Partition, MPoly> = HashMap::new();
    let mut out = Vec::new();
    while !poly.is_zero() {
        let (exp, c) = poly
            .terms
            .iter()
            .next_back()
            .map(|(k, v)| (k.clone(), v.clone()))
            .unwrap();
        let mut parts = exp.clone();
        while let Some(&0) = parts.last() {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "leading exponent {exp:?} is not a partition; polynomial not symmetric"
        );
        let lam = Partition::new(parts);
        let basis = cache
            .entry(lam.clone())
            .or_insert_with(|| schur_poly(&lam, n_vars))
            .clone();
        for (e, v) in &basis.terms {
            poly.add_term(e.clone(), -(v * &c));
        }
        out.push((lam, c));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// s_lambda composed with s_mu by substituting the monomials of s_mu, then
/// peeling. Needs n_vars at least the degree of the result.
pub fn plethysm_monomial_oracle(
    lambda: &Partition,
    mu: &Partition,
    n_vars: usize,
) -> Vec<(Partition, BigInt)> {
    // Monomials of s_mu(x_1..x_{n_vars}), with multiplicity.
    let mut inner: Vec<Vec<u32>> = Vec::new();
    for_each_ssyt(mu, n_vars, &mut |content| {
        inner.push(content.to_vec());
    });
    // s_lambda evaluated at those monomials: each semistandard tableau of
    // shape lambda with entries <= inner.len() contributes the product of
    // the corresponding monomials.
    let mut result = MPoly::default();
    let mut tableau_content: Vec<(Vec<u32>, BigInt)> = Vec::new();
    for_each_ssyt(lambda, inner.len(), &mut |content| {
        let mut exp = vec![0u32; n_vars];
        for (idx, &count) in content.iter().enumerate() {
            if count > 0 {
                for (slot, e) in inner[idx].iter().enumerate() {
                    exp[slot] += e * count;
                }
            }
        }
        tableau_content.push((exp, BigInt::one()));
    });
    for (exp, c) in tableau_content {
        result.add_term(exp, c);
    }
    peel_schur(result, n_vars)
}

/// Schur product computed through characters and power sums only.
pub fn product_char_oracle(lambda: &Partition, mu: &Partition) -> SchurVector {
    let a = schur_to_power(&SchurVector::basis(lambda.clone()));
    let b = schur_to_power(&SchurVector::basis(mu.clone()));
    power_to_schur(&power_product(&a, &b))
}

/// Convert an integral Schur vector to sorted (partition, coefficient) rows.
pub fn schur_rows(v: &SchurVector) -> Vec<(Partition, i64)> {
    v.integer_terms()
}
