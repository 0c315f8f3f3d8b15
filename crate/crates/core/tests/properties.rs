mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::Index;

use schubert_iso::atlas::{classify, enumerate};
use schubert_iso::isoclass::{necessary_filters, restrict, search_tau};
use schubert_iso::weyl::{Side, DEFAULT_WORD_CAP};
use schubert_iso::{
    check_iso, DatumDocument, IsoVerdict, SchubertBasis, SchubertClass, SchubertDatum, VerdictKind,
};

use common::all_data;

fn rank3() -> &'static [(String, SchubertDatum)] {
    static DATA: OnceLock<Vec<(String, SchubertDatum)>> = OnceLock::new();
    DATA.get_or_init(|| all_data(3, 5))
}

fn rank2() -> &'static [(String, SchubertDatum)] {
    static DATA: OnceLock<Vec<(String, SchubertDatum)>> = OnceLock::new();
    DATA.get_or_init(|| all_data(2, 4))
}

fn pick(data: &'static [(String, SchubertDatum)], i: &Index) -> &'static SchubertDatum {
    &data[i.index(data.len())].1
}

/// Chevalley's rule restricted to `v·s_β` already minimal, with coefficient
/// the pairing of the fundamental weight with `β^∨`.
fn chevalley_oracle(basis: &SchubertBasis, s: usize, v: usize) -> SchubertClass {
    let d = basis.datum();
    let g = d.group();
    let mut out = SchubertClass::zero();
    let base = basis.element(v);
    for beta in g.roots().positive() {
        let r = g.reflection_of(&beta.root).unwrap();
        let x = g.mul(base, &r);
        if x.length() == base.length() + 1 && g.is_min_rep(&x, d.parabolic()) {
            if let Ok(i) = basis.index_of(&x) {
                out.add_term(i, BigInt::from(beta.coroot[s]));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn chevalley_is_homogeneous_and_positive(i in any::<Index>(), v in any::<Index>()) {
        let d = pick(rank3(), &i);
        let basis = SchubertBasis::new(d).unwrap();
        let v = v.index(basis.len());
        for s in basis.degree_two_generators().collect::<Vec<_>>() {
            let c = basis.chevalley(s, v).unwrap();
            prop_assert!(c.all_positive());
            for (k, _) in c.terms() {
                prop_assert_eq!(basis.degree(k), basis.degree(v) + 2);
            }
        }
    }

    #[test]
    fn chevalley_matches_minimal_reflection_rule(i in any::<Index>(), v in any::<Index>()) {
        let d = pick(rank3(), &i);
        let basis = SchubertBasis::new(d).unwrap();
        let v = v.index(basis.len());
        for s in basis.degree_two_generators().collect::<Vec<_>>() {
            prop_assert_eq!(basis.chevalley(s, v).unwrap(), chevalley_oracle(&basis, s, v));
        }
    }

    #[test]
    fn class_descents_are_right_descents(i in any::<Index>(), v in any::<Index>()) {
        let d = pick(rank3(), &i);
        let basis = SchubertBasis::new(d).unwrap();
        let v = v.index(basis.len());
        let want = d.group().descents(basis.element(v), Side::Right);
        prop_assert_eq!(basis.class_descents(v).unwrap(), want);
    }

    #[test]
    fn max_below_is_coarser_minimal_representative(i in any::<Index>(), v in any::<Index>()) {
        let d = pick(rank3(), &i);
        let basis = SchubertBasis::new(d).unwrap();
        let v = v.index(basis.len());
        for t in basis.class_descents(v).unwrap() {
            let mut bigger = d.parabolic().clone();
            bigger.insert(t);
            let want = d.group().min_rep(basis.element(v), &bigger);
            let got = basis.max_below(v, t).unwrap();
            prop_assert_eq!(basis.element(got), &want);
        }
    }

    #[test]
    fn document_round_trip(i in any::<Index>()) {
        let d = pick(rank3(), &i);
        let doc = DatumDocument::from_datum(d);
        let text = doc.to_json();
        let back = DatumDocument::parse(&text).unwrap().to_datum(false).unwrap().datum;
        prop_assert_eq!(&back, d);
    }

    #[test]
    fn restriction_is_idempotent(i in any::<Index>()) {
        let d = pick(rank3(), &i);
        let r = restrict(d);
        prop_assert_eq!(restrict(&r), r.clone());
        prop_assert_eq!(r.dimension(), d.dimension());
        prop_assert_eq!(r.group().rank(), d.support().len());
    }

    #[test]
    fn verdicts_are_symmetric(i in any::<Index>(), j in any::<Index>()) {
        let (d, e) = (pick(rank2(), &i), pick(rank2(), &j));
        let fwd = check_iso(d, e).unwrap();
        let back = check_iso(e, d).unwrap();
        prop_assert_eq!(fwd.kind(), back.kind());
        if let IsoVerdict::Isomorphic(c) = &fwd {
            c.verify(d, e).unwrap();
            prop_assert_eq!(back.certificate().unwrap(), &c.inverse());
        }
    }

    #[test]
    fn failed_filters_admit_no_bijection(i in any::<Index>(), j in any::<Index>()) {
        let (d, e) = (restrict(pick(rank3(), &i)), restrict(pick(rank3(), &j)));
        if necessary_filters(&d, &e).is_err() {
            prop_assert!(search_tau(&d, &e, DEFAULT_WORD_CAP).unwrap().is_none());
        }
    }

    #[test]
    fn classification_ignores_order(perm in Just((0..13).collect::<Vec<usize>>()).prop_shuffle()) {
        let data: Vec<SchubertDatum> = enumerate(2, 2)
            .unwrap()
            .into_iter()
            .map(|e| e.datum)
            .filter(|d| d.dimension() == 2)
            .collect();
        let shuffled: Vec<SchubertDatum> = perm.iter().map(|&k| data[k].clone()).collect();
        let canon = |c: Vec<Vec<usize>>, map: &dyn Fn(usize) -> usize| {
            let mut out: Vec<BTreeSet<usize>> =
                c.into_iter().map(|cl| cl.into_iter().map(map).collect()).collect();
            out.sort();
            out
        };
        let a = canon(classify(&data).unwrap().classes, &|k| k);
        let b = canon(classify(&shuffled).unwrap().classes, &|k| perm[k]);
        prop_assert_eq!(a, b);
    }
}

#[test]
fn class_reduced_words_are_reduced_words() {
    let mut checked = 0;
    for (_, d) in all_data(2, 6) {
        if d.parabolic().len() != 1 {
            continue;
        }
        let basis = SchubertBasis::new(&d).unwrap();
        for v in 0..basis.len() {
            let all = d
                .group()
                .reduced_words(basis.element(v), DEFAULT_WORD_CAP)
                .unwrap();
            for word in basis.class_reduced_words(v).unwrap() {
                assert!(all.contains(&word), "{word:?} is not a reduced word");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn reconstructed_order_matches_interval_in_rank_four() {
    for word in [
        &["1", "2", "3", "4"][..],
        &["4", "3", "2", "1"],
        &["2", "1", "3", "2", "4"],
    ] {
        let d = common::datum(schubert_iso::CartanMatrix::type_f4(), word, &[]);
        let basis = SchubertBasis::new(&d).unwrap();
        assert_eq!(
            basis.reconstruct_poset().leq_matrix(),
            basis.interval().leq_matrix()
        );
    }
}

#[test]
fn certificates_compose_along_isomorphic_triples() {
    let data: Vec<SchubertDatum> = all_data(2, 3).into_iter().map(|(_, d)| d).collect();
    let mut composed = 0;
    for a in &data {
        for b in &data {
            let Some(ab) = check_iso(a, b).unwrap().certificate().cloned() else {
                continue;
            };
            for c in &data {
                let Some(bc) = check_iso(b, c).unwrap().certificate().cloned() else {
                    continue;
                };
                let ac = ab.compose(&bc).unwrap();
                ac.verify(a, c).unwrap();
                assert_eq!(check_iso(a, c).unwrap().kind(), VerdictKind::Isomorphic);
                composed += 1;
            }
        }
    }
    assert!(composed > 0);
}
