//! Exact sums of `N`-th roots of unity.
//!
//! A sum `sum_j counts[j] * zeta_N^j` is reduced modulo the `N`-th cyclotomic
//! polynomial; it is rational exactly when the remainder is constant.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// A multiset of `N`-th roots of unity, `sum_j counts[j] * zeta_N^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicSum {
    order: u32,
    counts: Vec<i64>,
}

impl CyclotomicSum {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "root-of-unity order must be positive");
        CyclotomicSum { order, counts: vec![0; order as usize] }
    }

    pub fn from_counts(order: u32, counts: &BTreeMap<u32, i64>) -> Self {
        let mut s = CyclotomicSum::new(order);
        for (&j, &c) in counts {
            s.counts[(j % order) as usize] += c;
        }
        s
    }

    pub fn add_root(&mut self, exponent: u32) {
        self.counts[(exponent % self.order) as usize] += 1;
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Exact quotient of `num` by the monic `den` (coefficients low first).
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

/// `Phi_n`, coefficients low first: `x^n - 1` divided by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let mut cache: BTreeMap<u32, Vec<i64>> = BTreeMap::new();
    for d in divisors(n) {
        let mut poly = vec![0i64; d as usize + 1];
        poly[0] = -1;
        poly[d as usize] = 1;
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            poly = exact_div(&poly, &cache[&e]);
        }
        cache.insert(d, poly);
    }
    cache.remove(&n).unwrap()
}

/// Reduces sums of `N`-th roots of unity; reuses one `Phi_N` across calls.
#[derive(Debug, Clone)]
pub struct CyclotomicReducer {
    order: u32,
    phi: Vec<i64>,
}

impl CyclotomicReducer {
    pub fn new(order: u32) -> Self {
        CyclotomicReducer { order, phi: cyclotomic_polynomial(order) }
    }

    pub fn reduce(&self, s: &CyclotomicSum) -> Result<Rational> {
        assert_eq!(s.order, self.order, "sum and reducer disagree on the order");
        let deg = self.phi.len() - 1;
        let mut rem: Vec<i128> = s.counts.iter().map(|&c| c as i128).collect();
        // Phi is monic: cancel leading terms from the top down.
        for top in (deg..rem.len()).rev() {
            let c = rem[top];
            if c != 0 {
                let shift = top - deg;
                for (j, &pj) in self.phi.iter().enumerate() {
                    rem[shift + j] -= c * pj as i128;
                }
            }
        }
        if let Some(d) = (1..rem.len().min(deg)).rev().find(|&i| rem[i] != 0) {
            return Err(Error::NotRational { order: self.order, degree: d });
        }
        Ok(int(rem[0] as i64))
    }
}

pub fn cyclotomic_reduce(s: &CyclotomicSum) -> Result<Rational> {
    CyclotomicReducer::new(s.order).reduce(s)
}
