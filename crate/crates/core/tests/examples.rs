//! Worked examples for each layer of the library, with hand-checked values.

use evenmon::counting::{self, card, card_stratum, stirling2, Stratum};
use evenmon::engine::{
    closure, conjecture_probe, equals_family, exhaustive_rank, is_regular, kernel_orbit_count,
    lemma_delta1_factor, lemma_delta2_normalize, r_class_half_check, FamilyMismatch,
    ProbeOutcome, RankOutcome,
};
use evenmon::family::{self, classify_rank_n_minus_2, oracle_contains, pap_split, PapClass, Rank2Shape};
use evenmon::named::{generating_set, GeneratingFamily, GeneratingSetSpec, NamedElement};
use evenmon::{CycleExpr, Error, FamilySpec, FamilyTag, KernelPartition, PartialPerm, Parity, Transformation};

fn t(v: &[usize]) -> Transformation {
    Transformation::new(v.iter().copied()).unwrap()
}

fn named(s: &str) -> Transformation {
    s.parse::<NamedElement>().unwrap().build().unwrap()
}

fn fam(tag: FamilyTag, n: usize) -> FamilySpec {
    FamilySpec::new(tag, n).unwrap()
}

fn gens(f: GeneratingFamily, n: usize) -> Vec<Transformation> {
    generating_set(&GeneratingSetSpec::new(f, n)).unwrap()
}

#[test]
fn composition_and_restriction() {
    assert_eq!(&t(&[2, 3, 1]) * &t(&[2, 3, 1]), t(&[3, 1, 2]));
    assert_eq!(&t(&[1, 1, 3, 4]) * &t(&[2, 3, 4, 1]), t(&[2, 2, 4, 1]));

    let r = t(&[1, 1, 3, 4]).restrict(&[2, 3, 4]).unwrap();
    assert_eq!(r, PartialPerm::new(4, [(2, 1), (3, 3), (4, 4)]).unwrap());
    assert_eq!(
        t(&[1, 1, 3, 4]).restrict(&[1, 2, 3]),
        Err(Error::NonInjectiveRestriction(1, 2))
    );
}

#[test]
fn inversions_parity_kernels_orders() {
    let rho = t(&[4, 3, 2, 1]);
    assert_eq!(rho.inversions(), 6);
    assert_eq!(rho.sign().unwrap(), Parity::Even);
    let p = PartialPerm::new(4, [(1, 3), (2, 1), (4, 2)]).unwrap();
    assert_eq!(p.inversions(), 2);
    assert_eq!(p.parity(), Parity::Even);

    let k = t(&[1, 2, 1, 2]).kernel();
    assert_eq!(k.blocks(), &[vec![1, 3], vec![2, 4]]);
    assert_eq!(t(&[1, 1, 1, 1]).kernel().rank(), 1);

    assert_eq!(t(&[2, 3, 4, 5, 1]).order().unwrap(), 5);
    let theta = CycleExpr::new(vec![vec![1, 3], vec![2, 4]]).unwrap().eval(4).unwrap();
    assert_eq!(theta, t(&[3, 4, 1, 2]));
    assert_eq!(theta.order().unwrap(), 2);
    assert!(CycleExpr::new(vec![]).unwrap().eval(3).unwrap().is_identity());
}

#[test]
fn catalogue_elements() {
    assert_eq!(named("epsilon@4"), t(&[1, 1, 3, 4]));
    assert_eq!(named("gamma@5"), t(&[1, 2, 1, 2, 3]));
    let zeta = CycleExpr::new(vec![vec![1, 3, 5, 7, 9], vec![4, 6, 8]]).unwrap().eval(9).unwrap();
    assert_eq!(named("zeta@9"), zeta);
    assert!(matches!(
        "gamma'@6".parse::<NamedElement>().unwrap().build(),
        Err(Error::OutOfRange { .. })
    ));

    let g7 = gens(GeneratingFamily::GammaGroup, 7);
    let want: Vec<Transformation> = ["(1,3)(2,4)", "(3,5,7)", "(2,4,6)"]
        .iter()
        .map(|c| c.parse::<CycleExpr>().unwrap().eval(7).unwrap())
        .collect();
    assert_eq!(g7, want);

    let d8 = gens(GeneratingFamily::DeltaMonoid, 8);
    let s8 = gens(GeneratingFamily::SigmaMonoid, 8);
    assert_eq!(&s8[..d8.len()], &d8[..]);
    assert_eq!(
        &s8[d8.len()..],
        &[named("gamma@8"), named("gamma'@8"), named("delta@8")]
    );
}

#[test]
fn membership_examples() {
    for a in [t(&[2, 1, 3]), t(&[3, 3, 1])] {
        assert!(oracle_contains(&fam(FamilyTag::SigmaT(1), 3), &a).unwrap());
    }
    assert!(oracle_contains(&fam(FamilyTag::SigmaT(5), 5), &t(&[2, 1, 4, 3, 5])).unwrap());
    assert!(!oracle_contains(&fam(FamilyTag::GammaT(2), 6), &named("sigma@6")).unwrap());

    assert!(family::contains(&fam(FamilyTag::Sigma, 4), &t(&[1, 1, 3, 4])).unwrap());
    assert!(!family::contains(&fam(FamilyTag::Delta, 4), &t(&[1, 2, 1, 2])).unwrap());
    assert!(family::contains(&fam(FamilyTag::Gamma, 4), &t(&[2, 3, 4, 1])).unwrap());
    // kernel pair {1,3} has an even sum
    assert!(!family::contains(&fam(FamilyTag::Sigma, 5), &t(&[1, 2, 1, 4, 5])).unwrap());

    assert_eq!(
        classify_rank_n_minus_2(&t(&[1, 1, 1, 2])).unwrap(),
        Rank2Shape::TypeA(vec![1, 2, 3])
    );
    assert_eq!(
        classify_rank_n_minus_2(&t(&[1, 2, 1, 2])).unwrap(),
        Rank2Shape::TypeB(vec![1, 3], vec![2, 4])
    );
    assert!(matches!(
        classify_rank_n_minus_2(&Transformation::identity(4)),
        Err(Error::WrongRank { .. })
    ));

    assert_eq!(pap_split(&Transformation::identity(6)), PapClass::Plus);
    assert_eq!(pap_split(&named("pi@6")), PapClass::Minus);
    assert_eq!(pap_split(&t(&[1, 3, 2])), PapClass::NotPap);
}

#[test]
fn closure_and_family_equality() {
    assert_eq!(closure(&[t(&[2, 3, 4, 1])], 4, 100).unwrap().len(), 4);
    assert_eq!(closure(&gens(GeneratingFamily::DeltaMonoid, 6), 6, 1 << 20).unwrap().len(), 33702);
    let trivial = closure(&[], 5, 10).unwrap();
    assert_eq!(trivial.len(), 1);
    assert!(trivial.get(0).is_identity());

    let g9 = closure(&[named("theta@9"), named("eta@9")], 9, 10_000).unwrap();
    assert_eq!(equals_family(&g9, &fam(FamilyTag::Gamma, 9)).unwrap(), None);
    let s5 = closure(&gens(GeneratingFamily::SigmaMonoid, 5), 5, 10_000).unwrap();
    assert_eq!(s5.len(), 2171);
    assert_eq!(equals_family(&s5, &fam(FamilyTag::Sigma, 5)).unwrap(), None);
    let th6 = closure(&[named("theta@6")], 6, 100).unwrap();
    assert!(matches!(
        equals_family(&th6, &fam(FamilyTag::Gamma, 6)).unwrap(),
        Some(FamilyMismatch::MissingFromMonoid(_))
    ));
}

#[test]
fn factor_words() {
    let m = closure(&[named("sigma@4"), named("epsilon@4")], 4, 1000).unwrap();
    let target = named("epsilon'@4");
    assert_eq!(m.eval_word(&m.factor_word(&target).unwrap()), target);
    assert!(m.factor_word(&Transformation::identity(4)).unwrap().is_empty());

    let mut g = gens(GeneratingFamily::GammaGroup, 5);
    g.push(named("epsilon@5"));
    g.push(named("epsilon'@5"));
    let m = closure(&g, 5, 10_000).unwrap();
    let l3 = named("lambda_i@5:3");
    assert_eq!(m.eval_word(&m.factor_word(&l3).unwrap()), l3);
}

#[test]
fn ranks_and_regularity() {
    let rank = |g: Vec<Transformation>, n, max| {
        let m = closure(&g, n, 1 << 20).unwrap();
        match exhaustive_rank(&m, max, 10_000_000).unwrap() {
            RankOutcome::Exact { rank, .. } => rank,
            other => panic!("{other:?}"),
        }
    };
    assert_eq!(rank(gens(GeneratingFamily::GammaGroup, 7), 7, 3), 3);
    assert_eq!(rank(gens(GeneratingFamily::DeltaMonoid, 4), 4, 2), 2);
    assert_eq!(rank(generating_set(&GeneratingSetSpec::oplus(2, 2)).unwrap(), 4, 1), 1);

    let d4 = closure(&gens(GeneratingFamily::DeltaMonoid, 4), 4, 1000).unwrap();
    let eps = t(&[1, 1, 3, 4]);
    let w = is_regular(&d4, &eps).unwrap().unwrap().witness;
    assert_eq!(&(&eps * &w) * &eps, eps);
    let a = t(&[1, 1, 2, 3]);
    let w = is_regular(&d4, &a).unwrap().unwrap().witness;
    assert_eq!(&(&a * &w) * &a, a);
    let b = t(&[1, 3, 4, 4]);
    assert_eq!(&(&a * &b) * &a, a);
}

#[test]
fn kernel_classes_and_orbits() {
    let k = KernelPartition::new(5, vec![vec![2, 3], vec![1], vec![4], vec![5]]).unwrap();
    assert!(r_class_half_check(&k).unwrap().is_half());
    assert_eq!(kernel_orbit_count(4).unwrap().orbit_count, 1);
    assert_eq!(kernel_orbit_count(6).unwrap().orbit_count, 2);
    assert_eq!(kernel_orbit_count(9).unwrap().orbit_count, 5);
}

#[test]
fn lemma_examples() {
    let a = t(&[1, 1, 1, 2]);
    let (a1, a2) = lemma_delta1_factor(&a).unwrap();
    assert_eq!((&a1 * &a2, a1.rank(), a2.rank()), (a.clone(), 3, 2));
    assert!(matches!(
        lemma_delta1_factor(&Transformation::identity(4)),
        Err(Error::PreconditionViolated(_))
    ));

    let (s, tau, c) = lemma_delta2_normalize(&t(&[1, 1, 3, 4])).unwrap();
    assert!(s.is_identity() && tau.is_identity() && c == 1);
    // fiber {3,4} maps to 2 at odd degree
    let a = t(&[1, 3, 2, 2, 5]);
    let (s, tau, c) = lemma_delta2_normalize(&a).unwrap();
    let p = &(&s * &a) * &tau;
    assert_eq!((c, p.apply(1), p.apply(2)), (2, 2, 2));
    assert!(matches!(
        lemma_delta2_normalize(&t(&[1, 2, 1, 2])),
        Err(Error::PreconditionViolated(_))
    ));
}

#[test]
fn block_group_probe() {
    assert!(matches!(
        conjecture_probe(2, 2, 1_000_000, 1).unwrap(),
        ProbeOutcome::RankIsTwo(..)
    ));
    assert_eq!(conjecture_probe(4, 3, 10_000_000, 1).unwrap(), ProbeOutcome::NoPairFound);
    match conjecture_probe(5, 4, 10_000_000, 1).unwrap() {
        ProbeOutcome::RankIsTwo(a, b) => {
            let m = closure(&[a, b], 9, 10_000).unwrap();
            assert_eq!(m.len(), 1440);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn counting_examples() {
    assert_eq!(stirling2(5, 5), 1u32.into());
    assert_eq!(stirling2(3, 0), 0u32.into());
    assert_eq!(stirling2(4, 2), 7u32.into());
    assert_eq!(card(&fam(FamilyTag::Sigma, 5)).unwrap(), 2171u32.into());
    assert_eq!(card(&fam(FamilyTag::Delta, 8)).unwrap(), 14237912u32.into());
    assert_eq!(card(&fam(FamilyTag::Gamma, 10)).unwrap(), 14400u32.into());
    assert_eq!(card_stratum(Stratum::SigmaRankNMinus1, 4), 48u32.into());

    let rows = counting::table(12);
    let r7 = &rows[6];
    assert_eq!(
        [&r7.gamma, &r7.sym, &r7.delta, &r7.sigma, &r7.full].map(|x| x.to_string()),
        ["72", "5040", "651793", "742975", "823543"]
    );
    assert!(rows.iter().all(|r| r.consistent()));
}
