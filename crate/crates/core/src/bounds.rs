//! Exact evaluation of the averaging, Plotkin-type and Singleton-type bounds.
//!
//! Every bound is phrased in normalized terms (`d/gamma`, written `dh` below)
//! and evaluated with exact rationals, so `sharp` means `lhs == rhs`.
//! A report always lists the hypotheses it checked; the verdict flags are only
//! set when all of them hold.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::lincode::{cyclic_size, LinearCode, Word};
use crate::rational::{ceil_log, int, serde_pq, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BoundName {
    #[serde(rename = "averaging")]
    Averaging,
    #[serde(rename = "plotkin-refined")]
    PlotkinRefined,
    #[serde(rename = "plotkin-minham")]
    PlotkinMinham,
    #[serde(rename = "plotkin-minimal-ideal")]
    PlotkinMinimalIdeal,
    #[serde(rename = "singleton-P")]
    SingletonP,
    #[serde(rename = "singleton-Q")]
    SingletonQ,
    #[serde(rename = "singleton-weak")]
    SingletonWeak,
}

impl BoundName {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::Averaging => "averaging",
            BoundName::PlotkinRefined => "plotkin-refined",
            BoundName::PlotkinMinham => "plotkin-minham",
            BoundName::PlotkinMinimalIdeal => "plotkin-minimal-ideal",
            BoundName::SingletonP => "singleton-P",
            BoundName::SingletonQ => "singleton-Q",
            BoundName::SingletonWeak => "singleton-weak",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Direction of the inequality `lhs REL rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precondition {
    pub description: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: BoundName,
    pub preconditions: Vec<Precondition>,
    pub applicable: bool,
    pub relation: Relation,
    #[serde(with = "serde_pq::option")]
    pub lhs: Option<Rational>,
    #[serde(with = "serde_pq::option")]
    pub rhs: Option<Rational>,
    pub satisfied: bool,
    pub sharp: bool,
    /// Derived quantities (`P`, `Q`, the chosen word, ...), as strings.
    pub parameters: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl BoundReport {
    fn new(bound: BoundName, relation: Relation) -> Self {
        BoundReport {
            bound,
            preconditions: Vec::new(),
            applicable: false,
            relation,
            lhs: None,
            rhs: None,
            satisfied: false,
            sharp: false,
            parameters: BTreeMap::new(),
            note: None,
        }
    }

    fn require(&mut self, description: impl Into<String>, holds: bool) {
        self.preconditions.push(Precondition { description: description.into(), holds });
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    /// Sets both sides and derives the verdict from the preconditions.
    fn finish(mut self, lhs: Option<Rational>, rhs: Option<Rational>) -> Self {
        self.applicable = self.preconditions.iter().all(|p| p.holds);
        if let (true, Some(l), Some(r)) = (self.applicable, &lhs, &rhs) {
            self.satisfied = match self.relation {
                Relation::AtMost => l <= r,
                Relation::AtLeast => l >= r,
            };
            self.sharp = l == r;
        }
        self.lhs = lhs;
        self.rhs = rhs;
        self
    }

    /// True unless an applicable bound failed.
    pub fn ok(&self) -> bool {
        !self.applicable || self.satisfied
    }
}

fn has_nonzero(report: &mut BoundReport, code: &LinearCode) -> Option<Rational> {
    let dh = code.min_hom_norm();
    report.require("C has a nonzero word", dh.is_some());
    dh
}

/// `((M-1)/M) dh <= n` for codes of full support.
pub fn averaging_bound(code: &LinearCode) -> BoundReport {
    let mut r = BoundReport::new(BoundName::Averaging, Relation::AtMost);
    let dh = has_nonzero(&mut r, code);
    let n = code.n() as i64;
    r.require("ell(C) = n", code.ell() == code.n());
    let m = int(code.size() as i64);
    let lhs = dh.map(|d| (&m - Rational::one()) / &m * d);
    r.finish(lhs, Some(int(n)))
}

/// `M <= |Rc| (dh - ell(c)) / (dh - n)` for a codeword `c`.
pub fn plotkin_refined(code: &LinearCode, c: &Word) -> BoundReport {
    let mut r = BoundReport::new(BoundName::PlotkinRefined, Relation::AtMost);
    let dh = has_nonzero(&mut r, code);
    let n = int(code.n() as i64);
    r.require("c in C", code.contains(c));
    let rc = cyclic_size(code.ring(), c);
    let l = int(c.ell() as i64);
    r.param("c", c.format(code.ring()));
    r.param("ell(c)", c.ell());
    r.param("|Rc|", rc);
    let mut rhs = None;
    if let Some(d) = &dh {
        r.require("n < d/gamma", &n < d);
        r.require("ell(c) < d/gamma", &l < d);
        if d != &n {
            rhs = Some(int(rc as i64) * (d - &l) / (d - &n));
        }
    }
    r.finish(Some(int(code.size() as i64)), rhs)
}

fn boundary_note(r: &mut BoundReport, dh: &Rational, n: &Rational) {
    if dh == n {
        r.note = Some("n = d/gamma: the stated hypothesis holds but the bound divides by d - gamma n = 0".into());
    }
}

/// `M <= |R| (dh - ell) / (dh - n)` with `ell` the minimum Hamming weight.
pub fn plotkin_minham(code: &LinearCode) -> BoundReport {
    let mut r = BoundReport::new(BoundName::PlotkinMinham, Relation::AtMost);
    let dh = has_nonzero(&mut r, code);
    let size = code.ring().size() as i64;
    r.param("|R|", size);
    plotkin_with_factor(r, code, dh, int(size), false)
}

/// `M <= Q (dh - ell) / (dh - n)` with `Q` the largest minimal left ideal.
pub fn plotkin_minimal_ideal(code: &LinearCode) -> BoundReport {
    let mut r = BoundReport::new(BoundName::PlotkinMinimalIdeal, Relation::AtMost);
    let dh = has_nonzero(&mut r, code);
    let q = code.ring().minimal_left_ideals().iter().map(|i| i.len()).max().unwrap_or(1) as i64;
    r.param("Q", q);
    plotkin_with_factor(r, code, dh, int(q), true)
}

fn plotkin_with_factor(
    mut r: BoundReport,
    code: &LinearCode,
    dh: Option<Rational>,
    factor: Rational,
    strict_ell: bool,
) -> BoundReport {
    let n = int(code.n() as i64);
    let mut rhs = None;
    if let (Some(d), Some(l)) = (&dh, code.min_hamming()) {
        let l = int(l as i64);
        r.param("ell", &l);
        if strict_ell {
            r.require("ell < n", l < n);
        } else {
            r.require("ell <= n", l <= n);
        }
        r.require("n <= d/gamma", &n <= d);
        r.require("n < d/gamma (nonzero denominator)", &n < d);
        boundary_note(&mut r, d, &n);
        if d != &n {
            rhs = Some(factor * (d - &l) / (d - &n));
        }
    }
    r.finish(Some(int(code.size() as i64)), rhs)
}

/// `n - ceil(((P-1)/P) dh)`.
fn singleton_lhs(n: usize, p: usize, dh: &Rational) -> Rational {
    let p = int(p as i64);
    let frac = (&p - Rational::one()) / &p * dh;
    int(n as i64) - frac.ceil()
}

/// `P = max |Rc|` over nonzero codewords with `ell(c) < n`.
pub fn singleton_p_parameter(code: &LinearCode) -> Option<usize> {
    let ring = code.ring();
    code.nonzero_words().filter(|c| c.ell() < code.n()).map(|c| cyclic_size(ring, c)).max()
}

/// `Q = max |Rc|` over all codewords.
pub fn singleton_q_parameter(code: &LinearCode) -> usize {
    let ring = code.ring();
    code.words().iter().map(|c| cyclic_size(ring, c)).max().unwrap_or(1)
}

/// `n - ceil(((P-1)/P) dh) >= ceil(log_P M - log_P |R|)`.
pub fn singleton_p(code: &LinearCode) -> BoundReport {
    let mut r = BoundReport::new(BoundName::SingletonP, Relation::AtLeast);
    let dh = has_nonzero(&mut r, code);
    let n = int(code.n() as i64);
    let p = singleton_p_parameter(code);
    r.require("minimum Hamming weight < n", p.is_some());
    let (mut lhs, mut rhs) = (None, None);
    if let Some(d) = &dh {
        r.require("n <= d/gamma", &n <= d);
        if let Some(p) = p {
            r.param("P", p);
            lhs = Some(singleton_lhs(code.n(), p, d));
            let target = Rational::new((code.size() as i64).into(), (code.ring().size() as i64).into());
            rhs = Some(int(ceil_log(p as u64, &target)));
        }
    }
    r.finish(lhs, rhs)
}

/// `n - ceil(((Q-1)/Q) dh) >= ceil(log_Q M - 1)`.
pub fn singleton_q(code: &LinearCode) -> BoundReport {
    let mut r = BoundReport::new(BoundName::SingletonQ, Relation::AtLeast);
    let dh = has_nonzero(&mut r, code);
    let n = int(code.n() as i64);
    let (mut lhs, mut rhs) = (None, None);
    if let Some(d) = &dh {
        r.require("n < d/gamma", &n < d);
        let q = singleton_q_parameter(code);
        r.param("Q", q);
        lhs = Some(singleton_lhs(code.n(), q, d));
        rhs = Some(int(ceil_log(q as u64, &int(code.size() as i64)) - 1));
    }
    r.finish(lhs, rhs)
}

/// `n - ceil(((|R|-1)/|R|) dh) >= ceil(log_|R| M - 1)`.
pub fn singleton_weak(code: &LinearCode) -> BoundReport {
    let mut r = BoundReport::new(BoundName::SingletonWeak, Relation::AtLeast);
    let dh = has_nonzero(&mut r, code);
    let n = int(code.n() as i64);
    let size = code.ring().size();
    r.param("|R|", size);
    let (mut lhs, mut rhs) = (None, None);
    if let Some(d) = &dh {
        r.require("n <= d/gamma", &n <= d);
        lhs = Some(singleton_lhs(code.n(), size, d));
        rhs = Some(int(ceil_log(size as u64, &int(code.size() as i64)) - 1));
    }
    let mut r = r.finish(lhs, rhs);
    if r.applicable && !r.satisfied {
        let rc = singleton_q_parameter(code);
        r.note = Some(format!(
            "violated although n <= d/gamma; max |Rc| over the code is {rc}, |R| is {size}"
        ));
    }
    r
}

/// Nonzero codeword giving the smallest right-hand side of the refined Plotkin
/// bound among words with `ell(c) < d/gamma`; ties go to the earliest word.
pub fn tightest_refined_witness(code: &LinearCode) -> Option<&Word> {
    let dh = code.min_hom_norm()?;
    let n = int(code.n() as i64);
    let ring = code.ring();
    let denom = &dh - &n;
    let mut best: Option<(Rational, &Word)> = None;
    for c in code.nonzero_words().filter(|c| int(c.ell() as i64) < dh) {
        let value = if denom.is_zero() {
            // no finite bound: rank by |Rc| (dh - ell) alone
            int(cyclic_size(ring, c) as i64) * (&dh - int(c.ell() as i64))
        } else {
            int(cyclic_size(ring, c) as i64) * (&dh - int(c.ell() as i64)) / &denom
        };
        if best.as_ref().is_none_or(|(b, _)| &value < b) {
            best = Some((value, c));
        }
    }
    best.map(|(_, c)| c)
}

/// Every bound, in a fixed order.
pub fn check_all(code: &LinearCode) -> Vec<BoundReport> {
    let refined = match tightest_refined_witness(code) {
        Some(c) => plotkin_refined(code, c),
        None => {
            let mut r = BoundReport::new(BoundName::PlotkinRefined, Relation::AtMost);
            has_nonzero(&mut r, code);
            r.require("some nonzero c in C has ell(c) < d/gamma", false);
            r.finish(Some(int(code.size() as i64)), None)
        }
    };
    vec![
        averaging_bound(code),
        refined,
        plotkin_minham(code),
        plotkin_minimal_ideal(code),
        singleton_p(code),
        singleton_q(code),
        singleton_weak(code),
    ]
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::homweight::hom_weight_table;
    use crate::lincode::build_code;
    use crate::rational::ratio;
    use crate::ring::{build_ring, Elem, RingSpec};

    fn z4_code(rows: &[&[u16]]) -> LinearCode {
        let t = Arc::new(hom_weight_table(Arc::new(build_ring(&RingSpec::zm(4)).unwrap()), int(1)).unwrap());
        build_code(t, rows.iter().map(|r| r.iter().map(|&x| Elem(x)).collect()).collect()).unwrap()
    }

    fn w(v: &[u16]) -> Word {
        Word(v.iter().map(|&x| Elem(x)).collect())
    }

    #[test]
    fn averaging_on_z4_simplex() {
        let r = averaging_bound(&z4_code(&[&[1, 2, 3]]));
        assert!(r.applicable && r.satisfied && r.sharp);
        assert_eq!(r.lhs, Some(int(3)));
    }

    #[test]
    fn zero_code_is_inapplicable_everywhere() {
        let c = z4_code(&[&[0, 0, 0]]);
        for r in check_all(&c) {
            assert!(!r.applicable, "{}", r.bound);
            assert!(r.ok());
        }
    }

    #[test]
    fn refined_on_z4_simplex() {
        let c = z4_code(&[&[1, 2, 3]]);
        let r = plotkin_refined(&c, &w(&[2, 0, 2]));
        assert!(r.applicable && r.sharp);
        assert_eq!(r.rhs, Some(int(4)));
        let r = plotkin_refined(&c, &w(&[1, 1, 1]));
        assert!(!r.applicable);
    }

    #[test]
    fn minham_and_minimal_ideal_on_z4_simplex() {
        let c = z4_code(&[&[1, 2, 3]]);
        let r = plotkin_minham(&c);
        assert!(r.applicable && r.satisfied && !r.sharp);
        assert_eq!(r.rhs, Some(int(8)));
        let r = plotkin_minimal_ideal(&c);
        assert!(r.applicable && r.sharp);
        assert_eq!(r.parameters["Q"], "2");
        assert_eq!(r.rhs, Some(int(4)));
    }

    #[test]
    fn boundary_case_is_inapplicable() {
        // (1,1) over Z4 has dh = 2 = n
        let c = z4_code(&[&[1, 1]]);
        assert_eq!(c.min_hom_norm(), Some(int(2)));
        let r = plotkin_minham(&c);
        assert!(!r.applicable);
        assert!(r.note.is_some());
        assert_eq!(r.rhs, None);
        assert!(!plotkin_refined(&c, &w(&[2, 2])).applicable);
    }

    #[test]
    fn singletons_on_z4_simplex() {
        let c = z4_code(&[&[1, 2, 3]]);
        let q = singleton_q(&c);
        assert!(q.applicable && q.sharp);
        assert_eq!((q.lhs.clone(), q.rhs.clone()), (Some(int(0)), Some(int(0))));
        let weak = singleton_weak(&c);
        assert!(weak.applicable && weak.sharp);
        let p = singleton_p(&c);
        assert!(p.applicable && p.satisfied);
        assert_eq!(p.parameters["P"], "2");
        // 3 - ceil(1/2 * 4) = 1 >= ceil(log_2 (4/4)) = 0
        assert_eq!((p.lhs, p.rhs), (Some(int(1)), Some(int(0))));
    }

    #[test]
    fn constant_hamming_weight_code_has_no_p() {
        let c = z4_code(&[&[1, 1, 1]]);
        assert!(c.nonzero_words().all(|w| w.ell() == 3));
        assert!(!singleton_p(&c).applicable);
    }

    #[test]
    fn larger_n_than_dh() {
        let c = z4_code(&[&[1, 0, 0, 0], &[0, 1, 1, 1]]);
        assert_eq!(c.min_hom_norm(), Some(int(1)));
        let all = check_all(&c);
        for r in &all[1..] {
            assert!(!r.applicable, "{}", r.bound);
        }
        assert!(all[0].applicable && all[0].satisfied);
        assert_eq!(all[0].lhs, Some(ratio(15, 16)));
    }

    #[test]
    fn weak_singleton_counterexample() {
        // {0, 2} in Z4: n = 1, d/gamma = 2, 1 - ceil(3/2) = -1 < 0 = ceil(log_4 2 - 1)
        let c = z4_code(&[&[2]]);
        let r = singleton_weak(&c);
        assert!(r.applicable && !r.satisfied);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (Some(int(-1)), Some(int(0))));
        assert!(r.note.is_some());
        // the sharper variants are not applicable or hold
        assert!(singleton_p(&c).ok() && singleton_q(&c).ok());
    }
}
