mod common;

use std::collections::BTreeSet;

use common::{ring, table};
use frobcode_core::bounds::{check_all, singleton_p_parameter, BoundName, BoundReport};
use frobcode_core::families::{hjelmslev_line, residual_chain, simplex};
use frobcode_core::homweight::hom_weight_table;
use frobcode_core::lincode::cyclic_size;
use frobcode_core::rational::{int, ratio, Rational};
use frobcode_core::ring::RingSpec;
use std::sync::Arc;

fn report(reports: &[BoundReport], name: BoundName) -> &BoundReport {
    reports.iter().find(|r| r.bound == name).unwrap()
}

#[test]
fn simplex_weight_laws() {
    let cases = [
        (RingSpec::zm(2), 3),
        (RingSpec::zm(3), 2),
        (RingSpec::zm(4), 2),
        (RingSpec::zm(6), 1),
        (RingSpec::gf(2, 2), 2),
        (RingSpec::chain(2), 2),
        (RingSpec::mat(2, RingSpec::gf(2, 1)), 1),
        (RingSpec::prod(RingSpec::zm(2), RingSpec::zm(3)), 1),
    ];
    for (spec, m) in cases {
        let code = simplex(table(&spec, int(1)), m).unwrap();
        let q = code.ring().size();
        let total = q.pow(m as u32);
        assert_eq!((code.n(), code.size()), (total - 1, total), "{spec}");
        for w in code.nonzero_words() {
            assert_eq!(code.weight_of(w), int(total as i64), "{spec}");
            let rc = cyclic_size(code.ring(), w);
            assert_eq!(w.ell(), total - total / rc, "{spec}");
        }
        let reports = check_all(&code);
        let refined = report(&reports, BoundName::PlotkinRefined);
        assert!(refined.applicable && refined.sharp, "{spec}");
        assert_eq!(refined.rhs, Some(int(total as i64)));
        assert!(reports.iter().all(BoundReport::ok));
    }
}

#[test]
fn matrix_simplex_meets_minimal_ideal_bound() {
    let code = simplex(table(&RingSpec::mat(2, RingSpec::gf(2, 1)), ratio(3, 2)), 1).unwrap();
    let reports = check_all(&code);
    let mi = report(&reports, BoundName::PlotkinMinimalIdeal);
    assert!(mi.applicable && mi.sharp);
    assert_eq!((mi.lhs.clone(), mi.rhs.clone()), (Some(int(16)), Some(int(16))));
    assert_eq!(mi.parameters["Q"], "4");
    let mh = report(&reports, BoundName::PlotkinMinham);
    assert_eq!(mh.rhs, Some(int(64)));
    assert!(mh.satisfied && !mh.sharp);
    let sq = report(&reports, BoundName::SingletonQ);
    assert!(sq.applicable && sq.sharp);
}

fn hjelmslev_checks(spec: RingSpec, q: i64) {
    let t = table(&spec, int(1));
    let code = hjelmslev_line(t.clone()).unwrap();
    let n = (q * q + q) as usize;
    assert_eq!((code.n(), code.size()), (n, (q * q * q * q) as usize), "{spec}");
    assert_eq!(code.min_hom_norm(), Some(int(q * q + q)));

    let r = t.ring();
    let rad = r.radical();
    let mut weights = BTreeSet::new();
    for w in code.nonzero_words() {
        let wt = code.weight_of(w);
        weights.insert(wt.clone());
        let on_radical = w.iter().all(|x| rad.contains(x));
        let expect: Rational = if on_radical { ratio(q * q * q, q - 1) } else { int(q * q + q) };
        assert_eq!(wt, expect, "{spec}");
        if !on_radical {
            let units = w.iter().filter(|&&x| r.is_unit(x)).count();
            let socle = w.iter().filter(|&&x| !x.is_zero() && !r.is_unit(x)).count();
            assert_eq!((units, socle), ((q * q) as usize, (q - 1) as usize), "{spec}");
        }
    }
    assert_eq!(weights, [int(q * q + q), ratio(q * q * q, q - 1)].into_iter().collect());

    assert_eq!(singleton_p_parameter(&code), Some((q * q) as usize));
    let reports = check_all(&code);
    for name in [BoundName::SingletonP, BoundName::SingletonWeak] {
        let rep = report(&reports, name);
        assert!(rep.applicable && rep.satisfied, "{spec} {name}");
    }
    let chain = residual_chain(&code);
    assert!(chain.certificate.verified(), "{spec}");
    assert_eq!(chain.certificate.r, 1);
}

#[test]
fn hjelmslev_lines() {
    hjelmslev_checks(RingSpec::zm(4), 2);
    hjelmslev_checks(RingSpec::chain(2), 2);
    hjelmslev_checks(RingSpec::zm(9), 3);
    hjelmslev_checks(RingSpec::chain(3), 3);
}

#[test]
fn hjelmslev_z4_singleton_equality() {
    let code = hjelmslev_line(table(&RingSpec::zm(4), int(1))).unwrap();
    let reports = check_all(&code);
    for name in [BoundName::SingletonP, BoundName::SingletonWeak] {
        let rep = report(&reports, name);
        assert_eq!((rep.lhs.clone(), rep.rhs.clone()), (Some(int(1)), Some(int(1))));
        assert!(rep.sharp);
    }
}

#[test]
fn chain_examples() {
    let t = table(&RingSpec::zm(4), int(1));
    let chain = residual_chain(&simplex(t.clone(), 1).unwrap());
    let cert = &chain.certificate;
    assert_eq!(cert.r, 1);
    assert_eq!(chain.chosen[0], common::word(&[2, 0, 2]));
    assert_eq!(cert.stages[1].n, 1);
    assert!(cert.verified());

    let chain = residual_chain(&simplex(t, 2).unwrap());
    assert!(chain.certificate.verified());
}

#[test]
fn preset_gamma_does_not_change_chain_or_bounds() {
    let spec = RingSpec::gf(3, 1);
    let r: Arc<_> = ring(&spec);
    let a = simplex(Arc::new(hom_weight_table(r.clone(), int(1)).unwrap()), 2).unwrap();
    let b = simplex(Arc::new(hom_weight_table(r, ratio(2, 3)).unwrap()), 2).unwrap();
    let strip = |v: Vec<BoundReport>| v.into_iter().map(|x| (x.lhs, x.rhs, x.sharp)).collect::<Vec<_>>();
    assert_eq!(strip(check_all(&a)), strip(check_all(&b)));
    assert_eq!(residual_chain(&a).certificate.stages, residual_chain(&b).certificate.stages);
}
