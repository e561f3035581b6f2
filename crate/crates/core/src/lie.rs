//! Decomposition of the Lie modules Lie(n) into simples.
//!
//! Primary algorithm: count standard tableaux of each shape whose major index
//! is congruent to 1 mod n. Independent oracle: the classical necklace
//! character (1/n) sum_{d|n} mobius(d) p_d^{n/d}, expanded into the Schur
//! basis through the character tables.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::partition::{partitions_of, standard_tableaux_bounded, Partition};
use crate::symfunc::{power_to_schur, PowerVector, SchurVector};

/// Multiplicities of the simple modules inside Lie(n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieClass {
    n: u32,
    multiplicities: BTreeMap<Partition, u64>,
}

impl LieClass {
    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn mult(&self, lambda: &Partition) -> u64 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &u64)> {
        self.multiplicities.iter()
    }

    /// Total dimension sum mult(lambda) dim(lambda); equals (n-1)! for n >= 1.
    pub fn total_dimension(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|(lam, m)| m * lam.dim_irrep())
            .sum()
    }

    /// Conjugate every index partition, keeping multiplicities.
    pub fn dagger(&self) -> LieClass {
        LieClass {
            n: self.n,
            multiplicities: self
                .multiplicities
                .iter()
                .map(|(lam, m)| (lam.conjugate(), *m))
                .collect(),
        }
    }

    /// The class as an integer Schur vector.
    pub fn schur_vector(&self) -> SchurVector {
        let mut v = SchurVector::zero();
        for (lam, m) in &self.multiplicities {
            v.add_term(lam.clone(), BigRational::from_integer(BigInt::from(*m)));
        }
        v
    }
}

static LIE_CACHE: RwLock<Option<HashMap<u32, Arc<LieClass>>>> = RwLock::new(None);

/// Lie(n) by the major-index rule: mult(lambda) counts standard tableaux of
/// shape lambda with maj congruent to 1 mod n. The count is independent of
/// which residue coprime to n is used; 1 is always coprime.
pub fn lie_module(n: u32) -> Arc<LieClass> {
    if let Some(map) = LIE_CACHE.read().unwrap().as_ref() {
        if let Some(c) = map.get(&n) {
            return Arc::clone(c);
        }
    }
    let class = Arc::new(lie_module_maj_residue(n, 1));
    let mut guard = LIE_CACHE.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Arc::clone(map.entry(n).or_insert(class))
}

/// The maj-rule count for an arbitrary residue (exposed so the residue
/// independence can be tested).
pub fn lie_module_maj_residue(n: u32, residue: u32) -> LieClass {
    assert!(n >= 1, "lie_module requires n >= 1");
    let mut multiplicities = BTreeMap::new();
    for lam in partitions_of(n) {
        let count = standard_tableaux_bounded(&lam, n.max(crate::partition::DEFAULT_TABLEAU_BOUND))
            .expect("bound covers n")
            .iter()
            .filter(|t| t.major_index() % n == residue % n)
            .count() as u64;
        if count > 0 {
            multiplicities.insert(lam, count);
        }
    }
    LieClass { n, multiplicities }
}

/// Independent route: Schur expansion of (1/n) sum_{d|n} mobius(d) p_d^{n/d}.
pub fn lie_module_oracle(n: u32) -> LieClass {
    assert!(n >= 1);
    let mut pw = PowerVector::zero();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        let idx = Partition::new(vec![d; (n / d) as usize]);
        pw.add_term(idx, BigRational::new(BigInt::from(mu), BigInt::from(n)));
    }
    let sv = power_to_schur(&pw);
    let mut multiplicities = BTreeMap::new();
    for (lam, m) in sv.integer_terms() {
        multiplicities.insert(lam, m as u64);
    }
    LieClass { n, multiplicities }
}

/// Mobius function by trial factorization; inputs stay tiny here.
pub fn moebius(n: u32) -> i64 {
    if n == 1 {
        return 1;
    }
    let mut n = n;
    let mut factors = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Partitions never appearing in any Lie(n): single rows of size >= 2,
/// single columns of height >= 3, and the two exceptional squares.
pub fn is_lie_exceptional(lambda: &Partition) -> bool {
    let n = lambda.size();
    (lambda.is_single_row() && n >= 2)
        || (lambda.is_single_column() && n >= 3)
        || lambda.parts() == [2, 2]
        || lambda.parts() == [2, 2, 2]
}
