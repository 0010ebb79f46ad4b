//! Chain construction, reports, certificates and localization across the corpus.

mod common;

use ladderlink::families::natural_generators;
use ladderlink::ladders::SplitResult;
use ladderlink::linkage::{groebner_fixed_point, replay, verify_family, LinkageCertificate, Status};
use ladderlink::localization::{localization_maps, verify_localization};
use ladderlink::monomial_ideal::MonomialIdeal;
use ladderlink::{build_chain, Budget, Field, FamilyReport, Ladder, LadderError, OneSidedLadder, SimplicialComplex, Var};
use proptest::prelude::*;

const Q: Field = Field::Rationals;

fn chain(l: &Ladder) -> LinkageCertificate {
    build_chain(l, &l.default_order(), Q, &Budget::unlimited()).unwrap()
}

#[test]
fn every_corpus_chain_is_connected_and_ends_in_indeterminates() {
    for l in common::corpus() {
        let cert = chain(&l);
        assert!(cert.is_connected(), "{l}");
        assert!(!cert.terminals.is_empty(), "{l}");
        assert!(cert.terminals.iter().all(|t| t.linear), "{l}");
        assert!(cert.verdicts.values().all(|&v| v), "{l}: {:?}", cert.verdicts);
        for s in &cert.steps {
            assert!(s.is_ok(), "{}: {:?}", s.key, s.flags);
            assert_eq!(s.shift, 1);
            let (a, _, c) = s.ideals();
            let (cc, ca) = (
                SimplicialComplex::from_squarefree(&c).unwrap().codimension(),
                SimplicialComplex::from_squarefree(&a).unwrap().codimension(),
            );
            assert_eq!(s.instance.height_formula() as i64, s.middle.height_formula() as i64 + 1);
            assert_eq!(cc, ca + 1);
        }
    }
}

#[test]
fn splits_decrease_the_measure() {
    for l in common::corpus() {
        for s in chain(&l).steps {
            let SplitResult::Split(split) = s.instance.recursion_split().unwrap() else { panic!("{}", s.key) };
            let m = |x: &Ladder| (x.cells().len(), x.size_sum());
            assert!(m(&split.reduced) < m(&s.instance));
            assert!(m(&split.middle) < m(&s.instance));
        }
    }
}

#[test]
fn maxminors_two_by_three_chain_depth() {
    let cert = chain(&common::maxminors(2, 3));
    assert!(cert.steps.len() >= 2);
    assert_eq!(cert.steps[0].shedding, Var::new(2, 3));
}

#[test]
fn reports_for_named_instances() {
    for l in [common::maxminors(2, 3), common::pfaffian(6, &[(1, 6)], &[2]), common::symmetric(3, &[(3, 3)], &[2])] {
        let r = verify_family(&l, &l.default_order(), Q, None, &Budget::unlimited()).unwrap();
        assert!(r.passed(), "{l}: {:#?}", r.checks);
        let back: FamilyReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
    assert_eq!(natural_generators(&common::pfaffian(6, &[(1, 6)], &[2]), Q).unwrap().len(), 15);
}

#[test]
fn replay_detects_tampering() {
    let l = common::onesided(3, 3, &[(2, 1), (3, 2)], &[2, 2]);
    let r = verify_family(&l, &l.default_order(), Q, None, &Budget::unlimited()).unwrap();
    let cert = r.certificate.unwrap();
    assert!(replay(&cert).unwrap().passed());

    let mut bad = cert.clone();
    bad.steps[0].shedding = Var::new(1, 1);
    assert!(!replay(&bad).unwrap().passed());

    let mut bad = cert.clone();
    bad.steps[0].c.pop();
    assert!(!replay(&bad).unwrap().passed());

    let mut bad = cert.clone();
    if let Some(ladderlink::VdCertificate::Shed { vertex, .. }) = bad.vd.as_mut() {
        *vertex = Var::new(3, 3);
    }
    assert!(!replay(&bad).unwrap().passed());
}

#[test]
fn budget_exhaustion_is_reported_as_skipped() {
    let l = common::pfaffian(6, &[(1, 6)], &[2]);
    let r = verify_family(&l, &l.default_order(), Q, None, &Budget::unlimited().with_spairs(1).with_faces(1)).unwrap();
    assert!(r.checks.iter().any(|c| c.status == Status::Skipped));
    assert!(!r.any_failed());
}

#[test]
fn mixed_sizes_with_a_size_one_region_are_groebner_but_not_minimal() {
    let l = common::onesided(4, 4, &[(1, 1), (4, 3)], &[1, 2]);
    let o = l.default_order();
    let (reduced, equal) = groebner_fixed_point(&l, &o, Q, &Budget::unlimited()).unwrap();
    assert!(!reduced && !equal);
    let gb = ladderlink::poly::buchberger_reduced(&natural_generators(&l, Q).unwrap().polynomials(), &o).unwrap();
    let lead = |ps: &[ladderlink::Polynomial]| MonomialIdeal::new(ps.iter().map(|p| p.leading_monomial(&o).unwrap()), []);
    assert_eq!(lead(&gb), lead(&natural_generators(&l, Q).unwrap().polynomials()));
}

#[test]
fn normalization_drops_redundant_regions() {
    let l = common::pfaffian(5, &[(1, 4), (2, 5)], &[2, 1]);
    let (n, _) = l.normalized().unwrap();
    assert_eq!(n, common::pfaffian(5, &[(2, 5)], &[1]));
}

#[test]
fn localization_errors() {
    let l = OneSidedLadder { m: 3, n: 3, points: vec![(3, 1)], t: vec![1] };
    assert!(matches!(localization_maps(&l, (2, 2), Q), Err(LadderError::Precondition(_))));
    let l = OneSidedLadder { m: 3, n: 3, points: vec![(2, 1), (3, 2)], t: vec![2, 2] };
    assert!(matches!(localization_maps(&l, (3, 1), Q), Err(LadderError::OutOfBounds(_))));
}

#[test]
fn localization_on_two_regions() {
    let l = OneSidedLadder { m: 3, n: 4, points: vec![(2, 1), (3, 2)], t: vec![2, 2] };
    let r = verify_localization(&l, (2, 2), Q, &Budget::unlimited()).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn coincident_corners_are_rejected() {
    let l = common::pfaffian(5, &[(1, 4), (1, 4)], &[2, 2]);
    let err = verify_family(&l, &l.default_order(), Q, None, &Budget::unlimited()).unwrap_err();
    assert!(matches!(err, LadderError::InvalidLadder(d) if d.condition == "no two upper corners coincide"));
}

fn onesided_ladder() -> impl Strategy<Value = Ladder> {
    (2usize..=4, 0usize..=1, prop::collection::vec((1usize..=4, 1usize..=4, 1usize..=2), 1..=2)).prop_filter_map(
        "valid",
        |(m, extra, pts)| {
            let n = m + extra;
            let mut pts: Vec<((usize, usize), usize)> = pts.into_iter().map(|(a, b, t)| ((a.min(m), b.min(n)), t)).collect();
            pts.sort();
            pts.dedup_by_key(|p| p.0);
            let l = common::onesided(m, n, &pts.iter().map(|p| p.0).collect::<Vec<_>>(), &pts.iter().map(|p| p.1).collect::<Vec<_>>());
            let (norm, _) = l.normalized().ok()?;
            (l.validate().is_ok() && norm == l).then_some(l)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_onesided_ladders_link_cleanly(l in onesided_ladder()) {
        let cert = chain(&l);
        prop_assert!(cert.is_connected());
        for s in &cert.steps {
            prop_assert!(s.flags.bdl_exact && s.flags.colon_stable, "{}", s.key);
        }
        let a = MonomialIdeal::new(ladderlink::families::initial_generators(&l, &l.default_order(), Q).unwrap(), l.variables());
        prop_assert_eq!(SimplicialComplex::from_squarefree(&a).unwrap().codimension(), l.height_formula() as i64);
    }
}
