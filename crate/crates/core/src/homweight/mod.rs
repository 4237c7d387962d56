//! Homogeneous weights from the generating character.
//!
//! With units `R^x` and generating character `chi`, the homogeneous weight of
//! average value `gamma` is `gamma * (1 - (1/|R^x|) * sum_{u in R^x} chi(xu))`.
//! Tables store the normalized weight `w/gamma`, which does not depend on
//! `gamma`; bounds only ever need `d/gamma`.

pub mod cyclotomic;

use std::collections::BTreeSet;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::ring::{Elem, Ring, Side};
pub use cyclotomic::{cyclotomic_polynomial, cyclotomic_reduce, CyclotomicReducer, CyclotomicSum};

/// Normalized homogeneous weight `w/gamma` of every element of a ring.
#[derive(Debug, Clone)]
pub struct HomWeightTable {
    ring: Arc<Ring>,
    gamma: Rational,
    norm: Vec<Rational>,
    // norm[x] * denom, for integer sums in codeword sweeps
    scaled: Vec<i64>,
    denom: i64,
}

/// `sum_{u in R^x} zeta^{e(xu)}` (right multiplication by units) or
/// `sum zeta^{e(ux)}` (left).
pub fn unit_character_sum(ring: &Ring, x: Elem, side: Side) -> CyclotomicSum {
    let mut s = CyclotomicSum::new(ring.add_exponent());
    for &u in ring.units() {
        let y = match side {
            Side::Right => ring.mul(x, u),
            Side::Left => ring.mul(u, x),
        };
        s.add_root(ring.char_exp(y));
    }
    s
}

fn check_gamma(gamma: &Rational) -> Result<()> {
    if !gamma.is_positive() {
        return Err(Error::InvalidGamma(gamma.to_string()));
    }
    Ok(())
}

/// Builds the homogeneous weight table of `ring` with average value `gamma`.
pub fn hom_weight_table(ring: Arc<Ring>, gamma: Rational) -> Result<HomWeightTable> {
    check_gamma(&gamma)?;
    let reducer = CyclotomicReducer::new(ring.add_exponent());
    let units = int(ring.units().len() as i64);
    let norm = ring
        .elements()
        .map(|x| {
            let s = reducer.reduce(&unit_character_sum(&ring, x, Side::Right))?;
            Ok(Rational::one() - s / &units)
        })
        .collect::<Result<Vec<_>>>()?;
    let table = HomWeightTable::from_values(ring, gamma, norm)?;
    if !verify_axioms(&table) {
        return Err(Error::AxiomViolation);
    }
    Ok(table)
}

/// The weight that is `q/(q-1)` on the nonzero socle and `1` elsewhere off zero,
/// for a local ring with `q`-element residue field.
pub fn local_socle_weight_table(ring: Arc<Ring>, gamma: Rational) -> Result<HomWeightTable> {
    check_gamma(&gamma)?;
    let q = ring.residue_field_size()? as i64;
    let socle: BTreeSet<Elem> = ring.socle_local()?;
    let heavy = Rational::new(q.into(), (q - 1).into());
    let norm = ring
        .elements()
        .map(|x| {
            if x.is_zero() {
                Rational::zero()
            } else if socle.contains(&x) {
                heavy.clone()
            } else {
                Rational::one()
            }
        })
        .collect();
    HomWeightTable::from_values(ring, gamma, norm)
}

/// Average value that gives the identity weight 1; `1` when that is impossible.
///
/// Reproduces the customary normalizations: `(q-1)/q` on `GF(q)`, `1` on `Z4`,
/// `3/2` on `M2(GF(2))`.
pub fn preset_gamma(ring: Arc<Ring>) -> Result<Rational> {
    let t = hom_weight_table(ring, Rational::one())?;
    let w1 = t.norm_weight(Elem::ONE).clone();
    Ok(if w1.is_positive() { w1.recip() } else { Rational::one() })
}

/// Exhaustive check of (H1) equal weights on generators of the same principal
/// left ideal and (H2) average exactly 1 (normalized) on every nonzero one.
pub fn verify_axioms(table: &HomWeightTable) -> bool {
    let ring = table.ring();
    if !table.norm_weight(Elem::ZERO).is_zero() {
        return false;
    }
    let ideals: Vec<BTreeSet<Elem>> =
        ring.elements().map(|x| ring.principal_ideal(x, Side::Left).members).collect();
    for x in ring.elements() {
        for y in ring.elements() {
            if ideals[x.index()] == ideals[y.index()] && table.norm_weight(x) != table.norm_weight(y) {
                return false;
            }
        }
    }
    ring.nonzero().all(|x| {
        let ideal = &ideals[x.index()];
        let total: Rational = ideal.iter().map(|&y| table.norm_weight(y).clone()).sum();
        total == int(ideal.len() as i64)
    })
}

impl HomWeightTable {
    /// Wraps arbitrary normalized values without checking the axioms.
    pub fn from_values(ring: Arc<Ring>, gamma: Rational, norm: Vec<Rational>) -> Result<HomWeightTable> {
        check_gamma(&gamma)?;
        if norm.len() != ring.size() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for a ring of size {}",
                norm.len(),
                ring.size()
            )));
        }
        let denom = norm
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let scaled = norm
            .iter()
            .map(|v| (v * Rational::from_integer(denom.clone())).to_integer().to_i64())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::DimensionMismatch("weight values do not fit in 64 bits".into()))?;
        let denom = denom
            .to_i64()
            .ok_or_else(|| Error::DimensionMismatch("weight denominators do not fit in 64 bits".into()))?;
        Ok(HomWeightTable { ring, gamma, norm, scaled, denom })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    /// `w(x)/gamma`.
    pub fn norm_weight(&self, x: Elem) -> &Rational {
        &self.norm[x.index()]
    }

    pub fn norm_weights(&self) -> &[Rational] {
        &self.norm
    }

    /// `w(x) = gamma * norm_weight(x)`.
    pub fn weight(&self, x: Elem) -> Rational {
        &self.gamma * &self.norm[x.index()]
    }

    /// Same weights, different average value.
    pub fn with_gamma(&self, gamma: Rational) -> Result<HomWeightTable> {
        check_gamma(&gamma)?;
        Ok(HomWeightTable { gamma, ..self.clone() })
    }

    /// Additive extension `sum_i w(c_i)/gamma`.
    pub fn extend_weight(&self, c: &[Elem]) -> Rational {
        Rational::new(self.extend_scaled(c).into(), self.denom.into())
    }

    /// `extend_weight(c) * scale()`, in integers.
    #[inline]
    pub fn extend_scaled(&self, c: &[Elem]) -> i64 {
        c.iter().map(|x| self.scaled[x.index()]).sum()
    }

    #[inline]
    pub fn scaled(&self, x: Elem) -> i64 {
        self.scaled[x.index()]
    }

    /// Common denominator of all normalized weights.
    pub fn scale(&self) -> i64 {
        self.denom
    }
}
