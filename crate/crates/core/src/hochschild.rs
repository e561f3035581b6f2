//! Graded dimension tables for the homology of wedges of circles with
//! functorial coefficients, and the derived tensor dimensions obtained from
//! the associated filtration.
//!
//! Three coefficient families are reported:
//!
//! * the injection coefficients indexed by an arity d: pure, concentrated in
//!   degree d, with class the conjugate-twisted arity-d aggregate;
//! * the finite-set coefficients indexed by a partition lambda: concentrated
//!   in degrees |lambda| and |lambda| - 1, with classes the outer subobject
//!   and coaction cokernel for nu = conjugate(lambda);
//! * the dual-numbers table: the degreewise sum of the previous family over
//!   all single-row lambda.

use std::collections::BTreeMap;
use std::fmt;

use crate::beta::{
    bold_beta_class, psi_pcoalg_class_bounded, GrothendieckClass, DEFAULT_DEGREE_BOUND,
};
use crate::error::{Error, Result};
use crate::outer::{omega_beta_bounded, sign_omega};
use crate::partition::{partitions_of, Partition};

/// Which coefficient a table reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HHCoefficient {
    InjGamma(u32),
    InjFin(Partition),
    DualNumbers,
}

impl fmt::Display for HHCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HHCoefficient::InjGamma(d) => write!(f, "inj-gamma[{d}]"),
            HHCoefficient::InjFin(lam) => write!(f, "inj-fin[{lam}]"),
            HHCoefficient::DualNumbers => write!(f, "dual-numbers"),
        }
    }
}

/// One homological degree: a dimension and, when determined, the class whose
/// evaluation produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HHRow {
    pub dimension: u64,
    pub class: GrothendieckClass,
}

/// A graded dimension table at a fixed free-group rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HHTable {
    pub coefficient: HHCoefficient,
    pub rank: u32,
    pub rows: BTreeMap<u32, HHRow>,
}

impl HHTable {
    pub fn dimension(&self, degree: u32) -> u64 {
        self.rows.get(&degree).map(|r| r.dimension).unwrap_or(0)
    }

    pub fn nonzero_degrees(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|(_, r)| r.dimension > 0)
            .map(|(d, _)| *d)
            .collect()
    }
}

fn row_from_class(class: GrothendieckClass, rank: u32) -> HHRow {
    let dim = class.eval_dimension(rank);
    debug_assert!(dim >= 0);
    HHRow {
        dimension: dim as u64,
        class,
    }
}

/// Homology with arity-`d` injection coefficients at rank `r`: a single row
/// in degree d (purity), whose class conjugates every functor label of the
/// arity-d aggregate.
pub fn hh_inj_gamma(d: u32, r: u32) -> Result<HHTable> {
    hh_inj_gamma_bounded(d, r, DEFAULT_DEGREE_BOUND)
}

pub fn hh_inj_gamma_bounded(d: u32, r: u32, bound: u32) -> Result<HHTable> {
    let psi = psi_pcoalg_class_bounded(d, bound)?;
    let mut class = GrothendieckClass::zero();
    for ((rho, nu), m) in psi.iter() {
        class.add(rho.conjugate(), m * nu.dim_irrep() as i64);
    }
    let mut rows = BTreeMap::new();
    rows.insert(d, row_from_class(class, r));
    Ok(HHTable {
        coefficient: HHCoefficient::InjGamma(d),
        rank: r,
        rows,
    })
}

/// The cokernel class used in the homology tables. This is the outer
/// report's cokernel everywhere except nu = (1), where the degree-0 row
/// carries the constant class: the target of the coaction map in arity one
/// is the constant functor and the map out of the one-box simple vanishes.
fn hh_coker_class(nu: &Partition, bound: u32) -> Result<GrothendieckClass> {
    if nu.parts() == [1] {
        return Ok(GrothendieckClass::simple(Partition::empty()));
    }
    let rep = omega_beta_bounded(nu, bound)?;
    match rep.coker {
        Some(c) => Ok(c),
        None => Err(Error::UnsupportedFamily(nu.clone())),
    }
}

/// Homology with finite-set coefficients indexed by `lambda`, at rank `r`.
/// Rows sit in degrees |lambda| and |lambda| - 1; the classes come from the
/// outer report of conjugate(lambda). Unresolved families yield
/// `UnsupportedFamily`.
pub fn hh_inj_fin(lambda: &Partition, r: u32) -> Result<HHTable> {
    hh_inj_fin_bounded(lambda, r, DEFAULT_DEGREE_BOUND)
}

pub fn hh_inj_fin_bounded(lambda: &Partition, r: u32, bound: u32) -> Result<HHTable> {
    let nu = lambda.conjugate();
    let rep = omega_beta_bounded(&nu, bound)?;
    let omega = match rep.omega {
        Some(o) => o,
        None => return Err(Error::UnsupportedFamily(nu)),
    };
    let mut rows = BTreeMap::new();
    let top = lambda.size();
    rows.insert(top, row_from_class(omega, r));
    if top >= 1 {
        rows.insert(top - 1, row_from_class(hh_coker_class(&nu, bound)?, r));
    }
    Ok(HHTable {
        coefficient: HHCoefficient::InjFin(lambda.clone()),
        rank: r,
        rows,
    })
}

/// The dual-numbers table: degree d carries the outer class of the sign
/// column (1^d) plus the cokernel contribution of (1^{d+1}), i.e. the sign
/// omega one degree down.
pub fn hh_dual_numbers(r: u32, dmax: u32) -> Result<HHTable> {
    hh_dual_numbers_bounded(r, dmax, DEFAULT_DEGREE_BOUND)
}

pub fn hh_dual_numbers_bounded(r: u32, dmax: u32, bound: u32) -> Result<HHTable> {
    if dmax > bound {
        return Err(Error::BoundExceeded {
            what: "degree",
            value: dmax,
            bound,
        });
    }
    let mut rows = BTreeMap::new();
    for d in 0..=dmax {
        let mut class = sign_omega_full(d);
        if d >= 1 {
            class.add_class(&sign_omega_full(d - 1));
        }
        rows.insert(d, row_from_class(class, r));
    }
    Ok(HHTable {
        coefficient: HHCoefficient::DualNumbers,
        rank: r,
        rows,
    })
}

/// Outer class of the sign column with the degree-zero bottom: the constant
/// class at d = 0.
fn sign_omega_full(d: u32) -> GrothendieckClass {
    if d == 0 {
        GrothendieckClass::simple(Partition::empty())
    } else {
        sign_omega(d)
    }
}

/// Derived-tensor dimension between the arity-m and arity-n injection
/// coefficients: concentrated in degree n - m, zero when n < m (reported as
/// degree 0, dimension 0). The dimension pairs the polynomial-degree-m layer
/// of the arity-n aggregate against the simples of degree m.
pub fn tor_gamma_dim(m: u32, n: u32) -> Result<(u32, u64)> {
    tor_gamma_dim_bounded(m, n, DEFAULT_DEGREE_BOUND)
}

pub fn tor_gamma_dim_bounded(m: u32, n: u32, bound: u32) -> Result<(u32, u64)> {
    assert!(m >= 1 && n >= 1, "tor_gamma_dim requires m, n >= 1");
    if n < m {
        return Ok((0, 0));
    }
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "arity",
            value: n,
            bound,
        });
    }
    let aggregate = bold_beta_class(n, bound)?;
    let mut dim = 0u64;
    for rho in partitions_of(m) {
        let mult = aggregate.mult(&rho);
        debug_assert!(mult >= 0);
        dim += mult as u64 * rho.dim_irrep();
    }
    Ok((n - m, dim))
}
