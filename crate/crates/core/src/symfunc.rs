//! Exact symmetric-function arithmetic over the rationals.
//!
//! Two bases are materialized: Schur ([`SchurVector`]) and power sum
//! ([`PowerVector`]). The change of basis runs through the character tables
//! of the symmetric groups, computed once per degree by the
//! Murnaghan–Nakayama recursion and shared behind a concurrent cache.
//!
//! Products of Schur vectors go through the Littlewood–Richardson rule
//! (backtracking over lattice-word skew fillings); plethysm goes through
//! power-sum substitution. Tests cross-check both against independent routes.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, z_weight, Partition};

pub type Coeff = BigRational;

fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// A finitely supported rational combination of Schur functions. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurVector {
    coeffs: BTreeMap<Partition, Coeff>,
}

/// Same shape, power-sum basis p_mu.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PowerVector {
    coeffs: BTreeMap<Partition, Coeff>,
}

macro_rules! vector_impl {
    ($ty:ident) => {
        impl $ty {
            pub fn zero() -> Self {
                Self::default()
            }

            /// The basis element indexed by `lambda`.
            pub fn basis(lambda: Partition) -> Self {
                let mut v = Self::default();
                v.add_term(lambda, Coeff::one());
                v
            }

            /// The empty-partition unit.
            pub fn one() -> Self {
                Self::basis(Partition::empty())
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.is_empty()
            }

            pub fn add_term(&mut self, lambda: Partition, c: Coeff) {
                if c.is_zero() {
                    return;
                }
                match self.coeffs.entry(lambda) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }

            pub fn add_assign(&mut self, other: &Self) {
                for (lam, c) in &other.coeffs {
                    self.add_term(lam.clone(), c.clone());
                }
            }

            pub fn scaled(&self, c: &Coeff) -> Self {
                let mut out = Self::default();
                for (lam, v) in &self.coeffs {
                    out.add_term(lam.clone(), v * c);
                }
                out
            }

            pub fn coeff(&self, lambda: &Partition) -> Coeff {
                self.coeffs.get(lambda).cloned().unwrap_or_else(Coeff::zero)
            }

            pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Coeff)> {
                self.coeffs.iter()
            }

            pub fn support_len(&self) -> usize {
                self.coeffs.len()
            }

            /// Degrees present in the vector.
            pub fn degrees(&self) -> Vec<u32> {
                let mut ds: Vec<u32> = self.coeffs.keys().map(|p| p.size()).collect();
                ds.dedup();
                ds.sort_unstable();
                ds.dedup();
                ds
            }

            /// Restriction to the terms indexed by partitions of `d`.
            pub fn degree_component(&self, d: u32) -> Self {
                let mut out = Self::default();
                for (lam, c) in &self.coeffs {
                    if lam.size() == d {
                        out.add_term(lam.clone(), c.clone());
                    }
                }
                out
            }

            /// Extract (partition, integer) terms, asserting every
            /// coefficient is a nonnegative integer. Rational arithmetic
            /// upstream must have cancelled exactly.
            pub fn integer_terms(&self) -> Vec<(Partition, i64)> {
                self.coeffs
                    .iter()
                    .map(|(lam, c)| {
                        assert!(c.is_integer(), "non-integer coefficient at {lam}: {c}");
                        assert!(!c.is_negative(), "negative coefficient at {lam}: {c}");
                        let v = c.to_integer().to_i64().expect("coefficient overflows i64");
                        (lam.clone(), v)
                    })
                    .collect()
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.coeffs.is_empty() {
                    return write!(f, "0");
                }
                for (i, (lam, c)) in self.coeffs.iter().rev().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{c}*[{lam}]")?;
                }
                Ok(())
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self)
            }
        }
    };
}

vector_impl!(SchurVector);
vector_impl!(PowerVector);

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

/// Character table of one symmetric group: rows indexed by the partition of
/// the simple module, columns by cycle type, both in canonical order.
pub struct CharTable {
    n: u32,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }
}

static CHAR_TABLES: RwLock<Option<HashMap<u32, Arc<CharTable>>>> = RwLock::new(None);

/// The full character table for degree `n`, computed once and shared.
/// Concurrent fills are idempotent.
pub fn char_table(n: u32) -> Arc<CharTable> {
    if let Some(map) = CHAR_TABLES.read().unwrap().as_ref() {
        if let Some(t) = map.get(&n) {
            return Arc::clone(t);
        }
    }
    let table = Arc::new(build_char_table(n));
    let mut guard = CHAR_TABLES.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Arc::clone(map.entry(n).or_insert(table))
}

fn build_char_table(n: u32) -> CharTable {
    let parts = partitions_of(n);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut memo: HashMap<(Partition, Partition), i64> = HashMap::new();
    let values = parts
        .iter()
        .map(|lam| {
            parts
                .iter()
                .map(|mu| mn_value(lam, mu, &mut memo))
                .collect()
        })
        .collect();
    CharTable {
        n,
        parts,
        index,
        values,
    }
}

/// Murnaghan–Nakayama: strip off a border strip of length mu_1 and recurse.
fn mn_value(
    lambda: &Partition,
    mu: &Partition,
    memo: &mut HashMap<(Partition, Partition), i64>,
) -> i64 {
    if lambda.is_empty() {
        return 1;
    }
    if let Some(&v) = memo.get(&(lambda.clone(), mu.clone())) {
        return v;
    }
    let strip = mu.part(0);
    let rest = Partition::new(mu.parts()[1..].to_vec());
    let mut total = 0i64;
    for (shape, height) in remove_border_strips(lambda, strip) {
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_value(&shape, &rest, memo);
    }
    memo.insert((lambda.clone(), mu.clone()), total);
    total
}

/// All ways of removing a border strip of `len` boxes from `lambda`,
/// returning the leftover shape and the strip height (rows spanned minus 1).
///
/// A rim hook spanning rows i..=j forces nu_k = lambda_{k+1} - 1 for
/// i <= k < j; row j keeps whatever the length dictates. The shape stays a
/// partition iff nu_j >= lambda_{j+1} and the strip has a box in every
/// spanned row.
fn remove_border_strips(lambda: &Partition, len: u32) -> Vec<(Partition, u32)> {
    let mut out = Vec::new();
    let rows = lambda.len();
    for i in 0..rows {
        let mut parts: Vec<u32> = lambda.parts().to_vec();
        let mut removed: i64 = 0;
        for j in i..rows {
            if j > i {
                let shifted = lambda.part(j) - 1;
                removed += parts[j - 1] as i64 - shifted as i64;
                parts[j - 1] = shifted;
            }
            let need = len as i64 - removed;
            if need <= 0 {
                break;
            }
            let nu_j = lambda.part(j) as i64 - need;
            if nu_j >= lambda.part(j + 1) as i64 {
                let mut nu = parts.clone();
                nu[j] = nu_j as u32;
                while let Some(&0) = nu.last() {
                    nu.pop();
                }
                out.push((Partition::new(nu), (j - i) as u32));
            }
        }
    }
    out
}

/// Irreducible character value chi^lambda(mu). Errors unless |lambda| = |mu|.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    }
    Ok(char_table(lambda.size()).value(lambda, mu))
}

/// A class function on the symmetric group of degree `n`: one exact rational
/// per cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    degree: u32,
    values: BTreeMap<Partition, Coeff>,
}

impl ClassFunction {
    pub fn new(degree: u32, values: BTreeMap<Partition, Coeff>) -> Self {
        debug_assert!(values.keys().all(|mu| mu.size() == degree));
        ClassFunction { degree, values }
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        let table = char_table(lambda.size());
        let values = table
            .partitions()
            .iter()
            .map(|mu| (mu.clone(), int(table.value(lambda, mu))))
            .collect();
        ClassFunction {
            degree: lambda.size(),
            values,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn value(&self, mu: &Partition) -> Coeff {
        self.values.get(mu).cloned().unwrap_or_else(Coeff::zero)
    }

    /// z-weighted inner product; irreducible characters are orthonormal.
    pub fn inner_product(&self, other: &ClassFunction) -> Coeff {
        assert_eq!(self.degree, other.degree, "class function degree mismatch");
        let mut acc = Coeff::zero();
        for mu in partitions_of(self.degree) {
            let z = BigRational::from_integer(z_weight(&mu));
            acc += self.value(&mu) * other.value(&mu) / z;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Basis changes
// ---------------------------------------------------------------------------

/// s_lambda = sum_mu chi^lambda(mu)/z_mu p_mu, extended linearly.
pub fn schur_to_power(f: &SchurVector) -> PowerVector {
    let mut out = PowerVector::zero();
    for (lam, c) in f.iter() {
        let table = char_table(lam.size());
        for mu in table.partitions() {
            let chi = int(table.value(lam, mu));
            let z = BigRational::from_integer(z_weight(mu));
            out.add_term(mu.clone(), c * chi / z);
        }
    }
    out
}

/// p_mu = sum_lambda chi^lambda(mu) s_lambda, extended linearly.
pub fn power_to_schur(g: &PowerVector) -> SchurVector {
    let mut out = SchurVector::zero();
    for (mu, c) in g.iter() {
        let table = char_table(mu.size());
        for lam in table.partitions() {
            out.add_term(lam.clone(), c * int(table.value(lam, mu)));
        }
    }
    out
}

/// Product in the power basis: p_mu * p_rho = p_{mu union rho}.
pub fn power_product(a: &PowerVector, b: &PowerVector) -> PowerVector {
    let mut out = PowerVector::zero();
    for (mu, c) in a.iter() {
        for (rho, d) in b.iter() {
            let mut parts: Vec<u32> = mu.parts().to_vec();
            parts.extend_from_slice(rho.parts());
            parts.sort_unstable_by(|x, y| y.cmp(x));
            out.add_term(Partition::new(parts), c * d);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson
// ---------------------------------------------------------------------------

type LrExpansion = Arc<Vec<(Partition, u64)>>;

static LR_CACHE: RwLock<Option<HashMap<(Partition, Partition), LrExpansion>>> = RwLock::new(None);

/// Expansion of s_lambda * s_mu into Schur terms, cached per (lambda, mu).
pub fn lr_expand(lambda: &Partition, mu: &Partition) -> LrExpansion {
    let key = (lambda.clone(), mu.clone());
    if let Some(map) = LR_CACHE.read().unwrap().as_ref() {
        if let Some(v) = map.get(&key) {
            return Arc::clone(v);
        }
    }
    let mut terms = Vec::new();
    for nu in partitions_of(lambda.size() + mu.size()) {
        if !nu.contains(lambda) {
            continue;
        }
        let c = count_lr_fillings(lambda, mu, &nu);
        if c > 0 {
            terms.push((nu, c));
        }
    }
    let arc = Arc::new(terms);
    let mut guard = LR_CACHE.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Arc::clone(map.entry(key).or_insert(arc))
}

/// c^nu_{lambda,mu}: semistandard skew fillings of nu \ lambda with content
/// mu whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return 0;
    }
    count_lr_fillings(lambda, mu, nu)
}

fn count_lr_fillings(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // Cells of the skew shape in reverse reading order: rows top to bottom,
    // each row right to left. Placing values in this order, the lattice-word
    // property can be checked incrementally.
    let mut cells = Vec::new();
    for i in 0..nu.len() {
        let lo = lambda.part(i);
        let hi = nu.part(i);
        for j in (lo..hi).rev() {
            cells.push((i, j as usize));
        }
    }
    let num_values = mu.len();
    if num_values == 0 {
        return if cells.is_empty() { 1 } else { 0 };
    }
    let mut remaining: Vec<u32> = mu.parts().to_vec();
    let mut counts = vec![0u32; num_values];
    // grid[(i, j)] = value placed at that cell, for constraint lookups.
    let mut grid: HashMap<(usize, usize), u32> = HashMap::new();
    fn rec(
        cells: &[(usize, usize)],
        pos: usize,
        lambda: &Partition,
        remaining: &mut Vec<u32>,
        counts: &mut Vec<u32>,
        grid: &mut HashMap<(usize, usize), u32>,
        total: &mut u64,
    ) {
        if pos == cells.len() {
            *total += 1;
            return;
        }
        let (i, j) = cells[pos];
        // Row-weakness with the right neighbour (already placed).
        let right_cap = grid.get(&(i, j + 1)).copied().unwrap_or(u32::MAX);
        // Column-strictness with the cell above (already placed if it is in
        // the skew shape; cells of lambda are absent and impose no bound).
        let above_floor = if i > 0 && (j as u32) >= lambda.part(i - 1) {
            grid.get(&(i - 1, j)).copied().unwrap_or(0) + 1
        } else {
            1
        };
        for v in above_floor..=right_cap.min(remaining.len() as u32) {
            let idx = (v - 1) as usize;
            if remaining[idx] == 0 {
                continue;
            }
            // Lattice condition on the reverse reading word.
            if v > 1 && counts[idx - 1] <= counts[idx] {
                continue;
            }
            remaining[idx] -= 1;
            counts[idx] += 1;
            grid.insert((i, j), v);
            rec(cells, pos + 1, lambda, remaining, counts, grid, total);
            grid.remove(&(i, j));
            counts[idx] -= 1;
            remaining[idx] += 1;
        }
    }
    let mut total = 0;
    rec(
        &cells,
        0,
        lambda,
        &mut remaining,
        &mut counts,
        &mut grid,
        &mut total,
    );
    total
}

/// Bilinear extension of the Littlewood-Richardson product.
pub fn schur_product(f: &SchurVector, g: &SchurVector) -> SchurVector {
    let mut out = SchurVector::zero();
    for (lam, c) in f.iter() {
        for (mu, d) in g.iter() {
            let cd = c * d;
            for (nu, k) in lr_expand(lam, mu).iter() {
                out.add_term(nu.clone(), &cd * int(*k as i64));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Plethysm
// ---------------------------------------------------------------------------

/// f composed with g, via power-sum substitution: p_k acts on the power
/// expansion of g by stretching every index partition by k. Requires g
/// homogeneous of positive degree.
pub fn plethysm(f: &SchurVector, g: &SchurVector) -> Result<SchurVector> {
    let degs = g.degrees();
    if degs.len() != 1 || degs[0] == 0 {
        return Err(Error::InhomogeneousArgument);
    }
    let gp = schur_to_power(g);
    let mut result = PowerVector::zero();
    for (lam, c) in f.iter() {
        if lam.is_empty() {
            result.add_term(Partition::empty(), c.clone());
            continue;
        }
        let table = char_table(lam.size());
        for mu in table.partitions() {
            let chi = table.value(lam, mu);
            if chi == 0 {
                continue;
            }
            let z = BigRational::from_integer(z_weight(mu));
            let coeff = c * int(chi) / z;
            // prod over parts k of mu of (p_k o g).
            let mut acc = PowerVector::one();
            for &k in mu.parts() {
                let stretched = stretch_power(&gp, k);
                acc = power_product(&acc, &stretched);
            }
            for (rho, v) in acc.iter() {
                result.add_term(rho.clone(), &coeff * v);
            }
        }
    }
    Ok(power_to_schur(&result))
}

fn stretch_power(g: &PowerVector, k: u32) -> PowerVector {
    let mut out = PowerVector::zero();
    for (rho, c) in g.iter() {
        out.add_term(rho.stretch(k), c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn s(parts: &[u32]) -> SchurVector {
        SchurVector::basis(p(parts))
    }

    fn assert_integral_terms(v: &SchurVector, expected: &[(&[u32], i64)]) {
        let got = v.integer_terms();
        let want: Vec<(Partition, i64)> = expected.iter().map(|(q, m)| (p(q), *m)).collect();
        assert_eq!(got, {
            let mut w = want;
            w.sort();
            w
        });
    }

    #[test]
    fn character_values() {
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert!(mn_character(&p(&[2]), &p(&[3])).is_err());
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=7u32 {
            for mu in partitions_of(n) {
                assert_eq!(mn_character(&p(&[n]), &mu).unwrap(), 1);
                let sgn = if (n as i64 - mu.len() as i64) % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(mn_character(&Partition::column(n), &mu).unwrap(), sgn);
            }
        }
    }

    #[test]
    fn character_dimension_column() {
        for n in 1..=8u32 {
            let id = Partition::column(n);
            for lam in partitions_of(n) {
                assert_eq!(
                    mn_character(&lam, &id).unwrap(),
                    lam.dim_irrep() as i64,
                    "at {lam}"
                );
            }
        }
    }

    #[test]
    fn character_orthogonality() {
        for n in 1..=7u32 {
            let parts = partitions_of(n);
            for a in &parts {
                let ca = ClassFunction::irreducible(a);
                for b in &parts {
                    let cb = ClassFunction::irreducible(b);
                    let ip = ca.inner_product(&cb);
                    let expected = if a == b { Coeff::one() } else { Coeff::zero() };
                    assert_eq!(ip, expected, "<chi^{a}, chi^{b}>");
                }
            }
        }
    }

    /// Independent character oracle: characters of the permutation modules on
    /// tabloids, orthogonalized in dominance-compatible order.
    fn brute_char_table(n: u32) -> HashMap<(Partition, Partition), i64> {
        // Permutation character: number of ways to distribute the cycles of
        // mu into the rows of lambda.
        fn perm_char(lambda: &Partition, mu: &Partition) -> i64 {
            fn rec(rows: &mut Vec<i64>, cycles: &[u32], k: usize) -> i64 {
                if k == cycles.len() {
                    return 1;
                }
                let c = cycles[k] as i64;
                let mut acc = 0;
                for i in 0..rows.len() {
                    if rows[i] >= c {
                        rows[i] -= c;
                        acc += rec(rows, cycles, k + 1);
                        rows[i] += c;
                    }
                }
                acc
            }
            let mut rows: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
            rec(&mut rows, mu.parts(), 0)
        }
        let parts = partitions_of(n);
        let mut rows: HashMap<Partition, ClassFunction> = HashMap::new();
        let mut out = HashMap::new();
        // Reverse-lex order refines dominance, so Gram-Schmidt against
        // already-processed rows strips exactly the Kostka upper triangle.
        for lam in &parts {
            let mut values: BTreeMap<Partition, Coeff> = BTreeMap::new();
            for mu in &parts {
                values.insert(mu.clone(), int(perm_char(lam, mu)));
            }
            let mut f = ClassFunction::new(n, values);
            for prev in &parts {
                if let Some(chi) = rows.get(prev) {
                    let k = f.inner_product(chi);
                    if !k.is_zero() {
                        let mut values = BTreeMap::new();
                        for mu in &parts {
                            values.insert(mu.clone(), f.value(mu) - &k * chi.value(mu));
                        }
                        f = ClassFunction::new(n, values);
                    }
                }
            }
            for mu in &parts {
                let v = f.value(mu);
                assert!(v.is_integer());
                out.insert((lam.clone(), mu.clone()), v.to_integer().to_i64().unwrap());
            }
            rows.insert(lam.clone(), f);
        }
        out
    }

    #[test]
    fn character_table_matches_tabloid_oracle() {
        for n in 1..=6u32 {
            let brute = brute_char_table(n);
            let table = char_table(n);
            for lam in table.partitions() {
                for mu in table.partitions() {
                    assert_eq!(
                        table.value(lam, mu),
                        brute[&(lam.clone(), mu.clone())],
                        "chi^{lam}({mu})"
                    );
                }
            }
        }
    }

    #[test]
    fn lr_fixtures() {
        assert_integral_terms(
            &schur_product(&s(&[2]), &s(&[1])),
            &[(&[3], 1), (&[2, 1], 1)],
        );
        assert_integral_terms(
            &schur_product(&s(&[1, 1]), &s(&[1, 1])),
            &[(&[1, 1, 1, 1], 1), (&[2, 1, 1], 1), (&[2, 2], 1)],
        );
        assert_integral_terms(
            &schur_product(&s(&[2, 1]), &s(&[1])),
            &[(&[3, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1)],
        );
    }

    #[test]
    fn lr_coefficient_single_column() {
        // c^nu_{lambda, 1^n} vanishes when any row gains more than one box.
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[3])), 0);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[1, 1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1, 1]), &p(&[3, 1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1, 1]), &p(&[4, 1])), 0);
    }

    #[test]
    fn lr_symmetries() {
        for total in 0..=8u32 {
            for a in 0..=total {
                let b = total - a;
                for lam in partitions_of(a) {
                    for mu in partitions_of(b) {
                        for nu in partitions_of(total) {
                            let c = lr_coefficient(&lam, &mu, &nu);
                            assert_eq!(c, lr_coefficient(&mu, &lam, &nu));
                            assert_eq!(
                                c,
                                lr_coefficient(&lam.conjugate(), &mu.conjugate(), &nu.conjugate())
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_size_vanishing() {
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2, 1, 1])), 0);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2])), 0);
    }

    #[test]
    fn product_dimension_count() {
        // sum_nu c^nu dim(nu) = binom(a+b, a) dim(lam) dim(mu).
        for total in 2..=9u32 {
            for a in 1..total {
                let b = total - a;
                for lam in partitions_of(a) {
                    for mu in partitions_of(b) {
                        let lhs: u64 = lr_expand(&lam, &mu)
                            .iter()
                            .map(|(nu, c)| c * nu.dim_irrep())
                            .sum();
                        let rhs = crate::partition::binomial(total as u64, a as u64)
                            * lam.dim_irrep()
                            * mu.dim_irrep();
                        assert_eq!(lhs, rhs, "at {lam} x {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn product_with_single_box_is_pieri() {
        for n in 0..=7u32 {
            for lam in partitions_of(n) {
                let prod = schur_product(&SchurVector::basis(lam.clone()), &s(&[1]));
                let mut expect = SchurVector::zero();
                for nu in lam.pieri_add_box() {
                    expect.add_term(nu, Coeff::one());
                }
                assert_eq!(prod, expect);
            }
        }
    }

    #[test]
    fn basis_change_examples() {
        let sp = schur_to_power(&s(&[1]));
        assert_eq!(sp.coeff(&p(&[1])), Coeff::one());
        assert_eq!(sp.support_len(), 1);
        // s_2 = 1/2 p_11 + 1/2 p_2.
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let sp = schur_to_power(&s(&[2]));
        assert_eq!(sp.coeff(&p(&[1, 1])), half);
        assert_eq!(sp.coeff(&p(&[2])), half);
    }

    #[test]
    fn basis_change_round_trip() {
        for n in 1..=8u32 {
            for lam in partitions_of(n) {
                let v = SchurVector::basis(lam.clone());
                assert_eq!(power_to_schur(&schur_to_power(&v)), v, "at {lam}");
            }
        }
    }

    #[test]
    fn plethysm_fixtures() {
        let r = plethysm(&s(&[1, 1]), &s(&[1, 1])).unwrap();
        assert_integral_terms(&r, &[(&[2, 1, 1], 1)]);
        let r = plethysm(&s(&[2]), &s(&[1, 1])).unwrap();
        assert_integral_terms(&r, &[(&[1, 1, 1, 1], 1), (&[2, 2], 1)]);
    }

    #[test]
    fn plethysm_identity() {
        for n in 1..=5u32 {
            for mu in partitions_of(n) {
                let g = SchurVector::basis(mu.clone());
                assert_eq!(plethysm(&s(&[1]), &g).unwrap(), g);
                assert_eq!(plethysm(&g, &s(&[1])).unwrap(), g);
            }
        }
    }

    #[test]
    fn plethysm_rejects_mixed_degrees() {
        let mut g = s(&[1]);
        g.add_term(p(&[2]), Coeff::one());
        assert!(matches!(
            plethysm(&s(&[2]), &g),
            Err(Error::InhomogeneousArgument)
        ));
        assert!(matches!(
            plethysm(&s(&[2]), &SchurVector::one()),
            Err(Error::InhomogeneousArgument)
        ));
    }

    #[test]
    fn plethysm_dimension_composition() {
        // Evaluating s_lam o s_mu at rank r counts dim S_lam(S_mu(k^r)),
        // for every pair with |lam| * |mu| <= 8.
        for a in 1..=8u32 {
            for b in 1..=8u32 {
                if a * b > 8 {
                    continue;
                }
                plethysm_dimension_pair(a, b);
            }
        }
    }

    fn plethysm_dimension_pair(a: u32, b: u32) {
        for lam in partitions_of(a) {
            for mu in partitions_of(b) {
                let plet = plethysm(
                    &SchurVector::basis(lam.clone()),
                    &SchurVector::basis(mu.clone()),
                )
                .unwrap();
                for r in 1..=3u32 {
                    let inner = mu.dim_schur_eval(r);
                    let direct = lam.dim_schur_eval(inner as u32);
                    let via: u64 = plet
                        .integer_terms()
                        .iter()
                        .map(|(nu, m)| *m as u64 * nu.dim_schur_eval(r))
                        .sum();
                    assert_eq!(via, direct, "s_{lam} o s_{mu} at rank {r}");
                }
            }
        }
    }

    #[test]
    fn schur_products_integral_on_integral_inputs() {
        for a in 1..=4u32 {
            for b in 1..=(8 - a).min(4) {
                for lam in partitions_of(a) {
                    for mu in partitions_of(b) {
                        let prod = schur_product(
                            &SchurVector::basis(lam.clone()),
                            &SchurVector::basis(mu.clone()),
                        );
                        // integer_terms asserts integrality and nonnegativity.
                        let _ = prod.integer_terms();
                    }
                }
            }
        }
    }
}
