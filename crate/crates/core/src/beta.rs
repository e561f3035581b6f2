//! Composition factors of the injective polynomial functors on free groups.
//!
//! The bigraded class of the full coalgebra functor in arity d is assembled
//! as a sum over weight sequences (a_n) with sum n*a_n = d: each sequence
//! contributes, for every tuple of partitions lambda(n) of a_n, the outer
//! product of
//!
//!   * the Schur expansion of the product of the s_{lambda(n)} (the functor
//!     grading), and
//!   * the Schur expansion of the product of the plethysms
//!     s_{lambda(n)} o Lie(n) (the symmetric-group grading).
//!
//! The isotypical row of a partition nu is then the class of beta_{|nu|}
//! applied to the simple indexed by nu.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lie::lie_module;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{plethysm, schur_product, SchurVector};

/// Default cap on the arity d; the d = 10 computation is the practical
/// desk-scale frontier for the plethysms involved.
pub const DEFAULT_DEGREE_BOUND: u32 = 10;

/// Integer combination of simple-functor labels. Negative entries are legal
/// (virtual classes); zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GrothendieckClass {
    mult: BTreeMap<Partition, i64>,
}

impl GrothendieckClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn simple(lambda: Partition) -> Self {
        let mut c = Self::default();
        c.add(lambda, 1);
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut c = Self::default();
        for (lam, m) in terms {
            c.add(lam, m);
        }
        c
    }

    pub fn add(&mut self, lambda: Partition, m: i64) {
        if m == 0 {
            return;
        }
        match self.mult.entry(lambda) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(m);
            }
        }
    }

    pub fn add_class(&mut self, other: &GrothendieckClass) {
        for (lam, m) in &other.mult {
            self.add(lam.clone(), *m);
        }
    }

    pub fn sub_class(&mut self, other: &GrothendieckClass) {
        for (lam, m) in &other.mult {
            self.add(lam.clone(), -m);
        }
    }

    pub fn sum(a: &GrothendieckClass, b: &GrothendieckClass) -> GrothendieckClass {
        let mut out = a.clone();
        out.add_class(b);
        out
    }

    pub fn difference(a: &GrothendieckClass, b: &GrothendieckClass) -> GrothendieckClass {
        let mut out = a.clone();
        out.sub_class(b);
        out
    }

    pub fn scaled(&self, k: i64) -> GrothendieckClass {
        GrothendieckClass::from_terms(self.mult.iter().map(|(lam, m)| (lam.clone(), m * k)))
    }

    pub fn mult(&self, lambda: &Partition) -> i64 {
        self.mult.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &i64)> {
        self.mult.iter()
    }

    /// Rows in the canonical print order: descending lexicographic labels.
    pub fn rows(&self) -> Vec<(Partition, i64)> {
        self.mult
            .iter()
            .rev()
            .map(|(lam, m)| (lam.clone(), *m))
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.mult.values().all(|&m| m >= 0)
    }

    /// True iff every multiplicity of `self` is at most that of `other`.
    pub fn contained_in(&self, other: &GrothendieckClass) -> bool {
        self.mult.iter().all(|(lam, m)| *m <= other.mult(lam))
    }

    /// Conjugate every index partition.
    pub fn dagger(&self) -> GrothendieckClass {
        GrothendieckClass::from_terms(self.mult.iter().map(|(lam, m)| (lam.conjugate(), *m)))
    }

    /// Sum of dimensions of the underlying functor evaluated on a free group
    /// of rank `r`.
    pub fn eval_dimension(&self, r: u32) -> i64 {
        self.mult
            .iter()
            .map(|(lam, m)| m * lam.dim_schur_eval(r) as i64)
            .sum()
    }
}

impl fmt::Display for GrothendieckClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, m)) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}[{lam}]")?;
        }
        Ok(())
    }
}

/// Class in the Grothendieck group of bifunctors: labels are pairs (functor
/// partition rho, symmetric-group partition nu).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BigradedClass {
    mult: BTreeMap<(Partition, Partition), i64>,
}

impl BigradedClass {
    pub fn add(&mut self, rho: Partition, nu: Partition, m: i64) {
        if m == 0 {
            return;
        }
        match self.mult.entry((rho, nu)) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(m);
            }
        }
    }

    pub fn merge(&mut self, other: BigradedClass) {
        for ((rho, nu), m) in other.mult {
            self.add(rho, nu, m);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Partition), &i64)> {
        self.mult.iter()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.mult.values().all(|&m| m >= 0)
    }

    /// The isotypical row of `nu`.
    pub fn row(&self, nu: &Partition) -> GrothendieckClass {
        GrothendieckClass::from_terms(
            self.mult
                .iter()
                .filter(|((_, n), _)| n == nu)
                .map(|((rho, _), m)| (rho.clone(), *m)),
        )
    }

    /// The nu labels present, in canonical order.
    pub fn sigma_labels(&self) -> Vec<Partition> {
        let mut labels: Vec<Partition> = self.mult.keys().map(|(_, nu)| nu.clone()).collect();
        labels.sort();
        labels.dedup();
        labels.reverse();
        labels
    }

    pub fn eval_dimension(&self, r: u32) -> i64 {
        self.mult
            .iter()
            .map(|((rho, nu), m)| m * rho.dim_schur_eval(r) as i64 * nu.dim_irrep() as i64)
            .sum()
    }
}

/// A finitely supported sequence (a_n) of natural numbers; the weight is
/// sum n*a_n. Stored as counts indexed from n = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSequence {
    counts: Vec<u32>,
}

impl WeightSequence {
    /// The sequence whose multiplicities are the part counts of `lambda`.
    pub fn from_partition(lambda: &Partition) -> Self {
        let max = lambda.part(0);
        let mut counts = vec![0u32; max as usize];
        for &p in lambda.parts() {
            counts[p as usize - 1] += 1;
        }
        WeightSequence { counts }
    }

    pub fn weight(&self) -> u32 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u32 + 1) * a)
            .sum()
    }

    /// The (n, a_n) pairs with a_n > 0, ascending in n.
    pub fn active(&self) -> Vec<(u32, u32)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| (i as u32 + 1, a))
            .collect()
    }
}

impl fmt::Display for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (n, a)) in self.active().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "a{n}={a}")?;
        }
        write!(f, ")")
    }
}

/// All weight sequences of weight `d`, ordered by their partition of d in
/// reverse-lexicographic order.
pub fn weight_sequences(d: u32) -> Vec<WeightSequence> {
    partitions_of(d)
        .iter()
        .map(WeightSequence::from_partition)
        .collect()
}

type PlethTable = HashMap<(Partition, u32), Arc<SchurVector>>;

static PLETH_LIE_CACHE: RwLock<Option<PlethTable>> = RwLock::new(None);

/// s_lambda o Lie(n), memoized: these dominate the runtime and recur across
/// weight sequences.
pub fn pleth_lie(lambda: &Partition, n: u32) -> Arc<SchurVector> {
    let key = (lambda.clone(), n);
    if let Some(map) = PLETH_LIE_CACHE.read().unwrap().as_ref() {
        if let Some(v) = map.get(&key) {
            return Arc::clone(v);
        }
    }
    let lie = lie_module(n).schur_vector();
    let value = if n == 1 {
        // Lie(1) is the one-box simple; plethysm with it is the identity.
        SchurVector::basis(lambda.clone())
    } else {
        plethysm(&SchurVector::basis(lambda.clone()), &lie)
            .expect("Lie(n) is homogeneous of positive degree")
    };
    let arc = Arc::new(value);
    let mut guard = PLETH_LIE_CACHE.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Arc::clone(map.entry(key).or_insert(arc))
}

static PSI_CACHE: RwLock<Option<HashMap<u32, Arc<BigradedClass>>>> = RwLock::new(None);

/// The full bigraded class in arity `d`, under the default degree bound.
pub fn psi_pcoalg_class(d: u32) -> Result<Arc<BigradedClass>> {
    psi_pcoalg_class_bounded(d, DEFAULT_DEGREE_BOUND)
}

pub fn psi_pcoalg_class_bounded(d: u32, bound: u32) -> Result<Arc<BigradedClass>> {
    if d > bound {
        return Err(Error::BoundExceeded {
            what: "arity",
            value: d,
            bound,
        });
    }
    if let Some(map) = PSI_CACHE.read().unwrap().as_ref() {
        if let Some(c) = map.get(&d) {
            return Ok(Arc::clone(c));
        }
    }
    // Weight sequences are independent work units; addition of classes is
    // commutative, so any parallel schedule yields the same result.
    let total = weight_sequences(d)
        .par_iter()
        .map(sequence_contribution)
        .reduce(BigradedClass::default, |mut acc, c| {
            acc.merge(c);
            acc
        });
    let arc = Arc::new(total);
    let mut guard = PSI_CACHE.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Ok(Arc::clone(map.entry(d).or_insert(arc)))
}

fn sequence_contribution(seq: &WeightSequence) -> BigradedClass {
    let active = seq.active();
    let choices: Vec<Vec<Partition>> = active.iter().map(|&(_, a)| partitions_of(a)).collect();
    let mut out = BigradedClass::default();
    let mut tuple = vec![0usize; active.len()];
    loop {
        let mut functor_part = SchurVector::one();
        let mut sigma_part = SchurVector::one();
        for (slot, &(n, _)) in active.iter().enumerate() {
            let lam = &choices[slot][tuple[slot]];
            functor_part = schur_product(&functor_part, &SchurVector::basis(lam.clone()));
            sigma_part = schur_product(&sigma_part, &pleth_lie(lam, n));
        }
        for (rho, a) in functor_part.integer_terms() {
            for (nu, b) in sigma_part.integer_terms() {
                out.add(rho.clone(), nu, a * b);
            }
        }
        // Advance the mixed-radix tuple index.
        let mut slot = 0;
        loop {
            if slot == tuple.len() {
                return out;
            }
            tuple[slot] += 1;
            if tuple[slot] < choices[slot].len() {
                break;
            }
            tuple[slot] = 0;
            slot += 1;
        }
    }
}

/// Composition factors of the injective envelope of the simple functor
/// indexed by `nu`: the nu-isotypical row in arity |nu|.
///
/// Structural facts visible in the output: the row contains `nu` itself
/// exactly once and every other label has strictly smaller size; the
/// degree-one multiplicity is the Lie-module multiplicity of `nu`; and for
/// odd |nu| the degree-two labels (2) and (1,1) occur with the same
/// multiplicity (both count the arity-(n-1) Lie component), though that
/// shared value generally differs from the degree-one multiplicity.
pub fn beta_class(nu: &Partition) -> Result<GrothendieckClass> {
    beta_class_bounded(nu, DEFAULT_DEGREE_BOUND)
}

pub fn beta_class_bounded(nu: &Partition, bound: u32) -> Result<GrothendieckClass> {
    Ok(psi_pcoalg_class_bounded(nu.size(), bound)?.row(nu))
}

/// The class of the arity-n value of the full bifunctor: the regular
/// representation aggregate sum_{nu} dim(nu) beta_class(nu).
pub fn bold_beta_class(n: u32, bound: u32) -> Result<GrothendieckClass> {
    let psi = psi_pcoalg_class_bounded(n, bound)?;
    let mut out = GrothendieckClass::zero();
    for ((rho, nu), m) in psi.iter() {
        out.add(rho.clone(), m * nu.dim_irrep() as i64);
    }
    Ok(out)
}
