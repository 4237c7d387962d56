//! Independent oracles shared by the integration and acceptance suites.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use frobcode_core::bounds::{check_all, BoundName, plotkin_minham, plotkin_minimal_ideal, plotkin_refined};
use frobcode_core::families::residual_chain;
use frobcode_core::homweight::{hom_weight_table, HomWeightTable};
use frobcode_core::lincode::{build_code, cyclic_size, cyclic_span, LinearCode, Word};
use frobcode_core::rational::{int, Rational};
use frobcode_core::ring::{build_ring, Elem, Ring, RingSpec};
use num_traits::{One, Zero};

/// Every ring named in the oracle-equivalence suite.
pub fn ring_suite() -> Vec<RingSpec> {
    let mut specs: Vec<RingSpec> = (2..=12).map(RingSpec::zm).collect();
    for q in [2, 3, 4, 5, 7, 8, 9] {
        specs.push(RingSpec::gf_q(q).unwrap());
    }
    specs.push(RingSpec::mat(2, RingSpec::gf(2, 1)));
    specs.push(RingSpec::prod(RingSpec::zm(2), RingSpec::zm(3)));
    specs.push(RingSpec::chain(2));
    specs.push(RingSpec::chain(3));
    specs
}

pub fn ring(spec: &RingSpec) -> Arc<Ring> {
    Arc::new(build_ring(spec).unwrap())
}

pub fn table(spec: &RingSpec, gamma: Rational) -> Arc<HomWeightTable> {
    Arc::new(hom_weight_table(ring(spec), gamma).unwrap())
}

pub fn word(v: &[u16]) -> Word {
    Word(v.iter().map(|&x| Elem(x)).collect())
}

/// Unique solution of `a x = b` by Gauss-Jordan elimination, or `None` when
/// the system is inconsistent or underdetermined.
pub fn solve_unique(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..a.len()).find(|&r| !a[r][col].is_zero())?;
        a.swap(row, pivot);
        b.swap(row, pivot);
        let inv = Rational::one() / a[row][col].clone();
        for x in a[row].iter_mut() {
            *x *= inv.clone();
        }
        b[row] *= inv;
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..cols {
                    let t = a[row][c].clone() * f.clone();
                    a[r][c] -= t;
                }
                let t = b[row].clone() * f;
                b[r] -= t;
            }
        }
        row += 1;
    }
    if b[row..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(b[..cols].to_vec())
}

fn left_ideal(r: &Ring, x: Elem) -> BTreeSet<Elem> {
    r.elements().map(|s| r.mul(s, x)).collect()
}

/// Normalized homogeneous weight obtained purely from the axioms:
/// `w(0) = 0`, `w(x) = w(y)` whenever `Rx = Ry`, and the weights on every
/// nonzero principal left ideal `Rx` sum to `|Rx|`.
pub fn axiom_weights(r: &Ring) -> Vec<Rational> {
    let n = r.size();
    let unit_row = |i: usize, j: Option<usize>| {
        let mut v = vec![Rational::zero(); n];
        v[i] = int(1);
        if let Some(j) = j {
            v[j] = int(-1);
        }
        v
    };
    let mut a = vec![unit_row(0, None)];
    let mut b = vec![Rational::zero()];
    let ideals: Vec<BTreeSet<Elem>> = r.elements().map(|x| left_ideal(r, x)).collect();
    for x in 1..n {
        for y in x + 1..n {
            if ideals[x] == ideals[y] {
                a.push(unit_row(x, Some(y)));
                b.push(Rational::zero());
            }
        }
        let mut sum = vec![Rational::zero(); n];
        for y in &ideals[x] {
            sum[y.index()] = int(1);
        }
        a.push(sum);
        b.push(int(ideals[x].len() as i64));
    }
    solve_unique(a, b).expect("axioms determine a unique weight")
}

/// All distinct codes of length `1..=max_n` generated by `1..=max_rows` rows.
pub fn small_codes(table: &Arc<HomWeightTable>, max_n: usize, max_rows: usize) -> Vec<LinearCode> {
    let q = table.ring().size();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut seen: HashSet<Vec<Vec<u16>>> = HashSet::new();
        for k in 1..=max_rows {
            let entries = n * k;
            let total = q.pow(entries as u32);
            for idx in 0..total {
                let mut rest = idx;
                let mut rows = vec![Vec::with_capacity(n); k];
                for e in 0..entries {
                    rows[e / n].push(Elem((rest % q) as u16));
                    rest /= q;
                }
                let code = build_code(table.clone(), rows).unwrap();
                let mut key: Vec<Vec<u16>> = code.words().iter().map(|w| w.iter().map(|e| e.0).collect()).collect();
                key.sort();
                if seen.insert(key) {
                    out.push(code);
                }
            }
        }
    }
    out
}

/// `(1/|C|) sum_c w(x + c)` and `l(C) + sum_{i outside supp C} w(x_i)`,
/// both evaluated directly from the weight table.
pub fn coset_sides(code: &LinearCode, x: &Word) -> (Rational, Rational) {
    let ring = code.ring();
    let t = code.table();
    let total: Rational = code
        .words()
        .iter()
        .map(|c| t.extend_weight(&x.add(ring, c)))
        .fold(Rational::zero(), |a, b| a + b);
    let avg = total / int(code.size() as i64);
    let supp = code.support();
    let rest: Rational = (0..code.n())
        .filter(|i| !supp.contains(i))
        .map(|i| t.norm_weight(x[i]).clone())
        .fold(Rational::zero(), |a, b| a + b);
    (avg, int(supp.len() as i64) + rest)
}

fn word_set(words: &[Word]) -> BTreeSet<Word> {
    words.iter().cloned().collect()
}

/// Checks every structural lemma and bound on one code; returns the first failure.
pub fn check_code(code: &LinearCode) -> Result<(), String> {
    let ring = code.ring();
    let n = code.n();
    let dh = code.min_hom_norm();
    let fail = |what: &str| Err(format!("{what} fails on {:?}", code.generators()));

    // the weak Singleton form has genuine counterexamples; see bounds tests
    for rep in check_all(code).into_iter().filter(|r| r.bound != BoundName::SingletonWeak) {
        if rep.applicable && !rep.satisfied {
            return fail(&format!("bound {}", rep.bound));
        }
    }
    let (mh, mi) = (plotkin_minham(code), plotkin_minimal_ideal(code));
    if mh.applicable && mi.applicable && mi.rhs > mh.rhs {
        return fail("minimal-ideal/min-Hamming monotonicity");
    }
    let Some(dh) = dh else { return Ok(()) };
    let ell_min = code.min_hamming().unwrap();

    for c in code.nonzero_words() {
        let ell = int(c.ell() as i64);
        let rc = cyclic_span(ring, c);
        if ell < dh {
            // shortening recovers exactly Rc
            if word_set(code.shorten_by(c).words()) != word_set(&rc) {
                return fail("shortening equals Rc");
            }
            let res = code.residual_by(c);
            if res.n() != n - c.ell() || res.size() * rc.len() != code.size() {
                return fail("residual length and size");
            }
            if let Some(d1) = res.min_hom_norm() {
                if d1 < dh.clone() - ell.clone() {
                    return fail("residual weight drop");
                }
            }
            let rep = plotkin_refined(code, c);
            if rep.applicable && !rep.satisfied {
                return fail("refined Plotkin bound");
            }
        }
        if c.ell() == ell_min {
            let s = code
                .min_hamming_word_structure(c)
                .map_err(|e| format!("min-Hamming structure: {e} on {:?}", code.generators()))?;
            for (&i, &u) in &s.units {
                if !ring.is_unit(u) || ring.mul(s.alpha, u) != c[i] {
                    return fail("min-Hamming decomposition");
                }
            }
            if cyclic_size(ring, &Word(vec![s.alpha])) != rc.len() {
                return fail("|Rc| = |R alpha|");
            }
            if int(ell_min as i64) < dh && rc.iter().any(|c2| !c2.is_zero() && cyclic_size(ring, c2) != rc.len()) {
                return fail("Rc is simple");
            }
        }
    }

    if int(n as i64) <= dh {
        let q_all = code.words().iter().map(|c| cyclic_size(ring, c)).max().unwrap();
        let p_all = code.words().iter().filter(|c| c.ell() < n).map(|c| cyclic_size(ring, c)).max().unwrap();
        for c in code.words().iter().filter(|c| c.ell() < n) {
            let res = code.residual_by(c);
            for c2 in res.words() {
                let s = cyclic_size(ring, c2);
                if s > q_all || (c2.ell() < n - c.ell() && s > p_all) {
                    return fail("residual cyclic sizes bounded by Q and P");
                }
            }
        }
        if !residual_chain(code).certificate.verified() {
            return fail("residual chain certificate");
        }
    }
    Ok(())
}
