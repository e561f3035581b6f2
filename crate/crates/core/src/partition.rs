//! Partitions and Young tableaux.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers; the
//! empty sequence is the unique partition of 0. Partitions index the simple
//! modules of the symmetric groups and everything downstream of them, so this
//! module also carries the tableau combinatorics those modules need: standard
//! tableau enumeration, the major index, hook-length dimensions, hook-content
//! evaluations of Schur functors and the one-box Pieri moves.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Default cap on |lambda| for standard-tableau enumeration. Hook products up
/// to 12! stay comfortably inside 64 bits and keep the enumeration small.
pub const DEFAULT_TABLEAU_BOUND: u32 = 12;

/// A partition: weakly decreasing positive parts. The canonical total order
/// used for all printed output is descending lexicographic on part sequences,
/// i.e. the reverse of the derived `Ord`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics if `parts` is not weakly decreasing or contains a zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(!parts.contains(&0), "partition parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row (n); the empty partition when n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single column (1^n).
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    /// Hook (b, 1^a); degenerate inputs collapse to row/column.
    pub fn hook(b: u32, a: u32) -> Self {
        if b == 0 {
            return Self::column(a);
        }
        let mut parts = vec![b];
        parts.extend(std::iter::repeat_n(1, a as usize));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The part at `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_single_row(&self) -> bool {
        self.parts.len() <= 1
    }

    pub fn is_single_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// True for (m, 1) with m >= 1.
    pub fn is_hook_m1(&self) -> bool {
        self.parts.len() == 2 && self.parts[1] == 1
    }

    /// True iff the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut i = 1;
        loop {
            let count = self.parts.iter().filter(|&&p| p >= i).count() as u32;
            if count == 0 {
                break;
            }
            parts.push(count);
            i += 1;
        }
        Partition { parts }
    }

    /// All ways of adding one box; output in canonical (descending) order.
    pub fn pieri_add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i == 0 || self.parts[i] < self.parts[i - 1] {
                let mut p = self.parts.clone();
                p[i] += 1;
                out.push(Partition { parts: p });
            }
        }
        let mut p = self.parts.clone();
        p.push(1);
        out.push(Partition { parts: p });
        out
    }

    /// All ways of removing one box (the empty partition may appear).
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1] {
                let mut p = self.parts.clone();
                p[i] -= 1;
                if p[i] == 0 {
                    p.remove(i);
                }
                out.push(Partition { parts: p });
            }
        }
        out
    }

    /// Every part multiplied by `k` (used by power-sum plethysm).
    pub fn stretch(&self, k: u32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }

    /// Multiplicity vector: how many parts equal each value.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Dimension of the simple module indexed by `self`, by the hook-length
    /// formula.
    pub fn dim_irrep(&self) -> u64 {
        let n = self.size();
        let mut num = factorial_big(n);
        let conj = self.conjugate();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let hook = (row as i64 - j as i64) + (conj.part(j) as i64 - i as i64) - 1;
                num /= BigInt::from(hook);
            }
        }
        num.to_u64().expect("hook-length dimension overflows u64")
    }

    /// Dimension of the Schur functor for `self` on a free module of rank
    /// `r`, by the hook-content formula. Zero when the partition has more
    /// rows than `r`.
    pub fn dim_schur_eval(&self, r: u32) -> u64 {
        if self.len() as u32 > r {
            return 0;
        }
        let conj = self.conjugate();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let content = r as i64 + j as i64 - i as i64;
                let hook = (row as i64 - j as i64) + (conj.part(j) as i64 - i as i64) - 1;
                num *= BigInt::from(content);
                den *= BigInt::from(hook);
            }
        }
        (num / den)
            .to_u64()
            .expect("hook-content dimension overflows u64")
    }
}

impl fmt::Display for Partition {
    /// CLI text form: comma-separated parts, `0` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part {tok:?} in {s:?}")))?;
            if p == 0 {
                return Err(Error::Parse(format!("zero part in partition {s:?}")));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "parts not weakly decreasing in {s:?}"
            )));
        }
        Ok(Partition { parts })
    }
}

/// All partitions of `n`, in reverse-lexicographic (descending) order, so
/// `(n)` comes first and `(1^n)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Sort a list of partitions into the canonical (descending lexicographic)
/// order used everywhere in printed output.
pub fn sort_canonical(parts: &mut [Partition]) {
    parts.sort_by(|a, b| b.cmp(a));
}

/// A standard Young tableau: shape filled with 1..n, rows and columns
/// strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Row index (0-based) holding entry `k`.
    fn row_of(&self, k: u32) -> usize {
        self.rows
            .iter()
            .position(|row| row.contains(&k))
            .expect("entry not in tableau")
    }

    /// Sum of the descents: positions i such that i+1 sits in a strictly
    /// lower row than i.
    pub fn major_index(&self) -> u32 {
        let n = self.shape.size();
        (1..n)
            .filter(|&i| self.row_of(i + 1) > self.row_of(i))
            .sum()
    }
}

/// All standard tableaux of shape `lambda`, under the default size bound.
pub fn standard_tableaux(lambda: &Partition) -> Result<Vec<StandardTableau>> {
    standard_tableaux_bounded(lambda, DEFAULT_TABLEAU_BOUND)
}

pub fn standard_tableaux_bounded(lambda: &Partition, bound: u32) -> Result<Vec<StandardTableau>> {
    if lambda.size() > bound {
        return Err(Error::BoundExceeded {
            what: "tableau shape size",
            value: lambda.size(),
            bound,
        });
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = lambda.parts().iter().map(|_| Vec::new()).collect();
    fill(lambda, 1, &mut rows, &mut out);
    Ok(out)
}

fn fill(lambda: &Partition, next: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<StandardTableau>) {
    if next > lambda.size() {
        out.push(StandardTableau {
            shape: lambda.clone(),
            rows: rows.clone(),
        });
        return;
    }
    for i in 0..rows.len() {
        let col = rows[i].len();
        if col as u32 >= lambda.part(i) {
            continue;
        }
        // Column-strictness: the row above must already extend past this column.
        if i > 0 && rows[i - 1].len() <= col {
            continue;
        }
        rows[i].push(next);
        fill(lambda, next + 1, rows, out);
        rows[i].pop();
    }
}

pub(crate) fn factorial_big(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

pub fn factorial(n: u32) -> u64 {
    factorial_big(n).to_u64().expect("factorial overflows u64")
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc.to_u64().expect("binomial overflows u64")
}

/// z_mu = prod_i m_i! i^{m_i}: the order of the centralizer of a permutation
/// of cycle type mu.
pub fn z_weight(mu: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    for (value, count) in mu.multiplicities() {
        acc *= factorial_big(count);
        for _ in 0..count {
            acc *= BigInt::from(value);
        }
    }
    acc
}
