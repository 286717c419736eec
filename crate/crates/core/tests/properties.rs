use evenmon::engine::closure;
use evenmon::family::{self, Oracle};
use evenmon::named::{generating_set, GeneratingFamily, GeneratingSetSpec};
use evenmon::perm::{inversions_merge, inversions_naive};
use evenmon::{CycleExpr, FamilySpec, FamilyTag, PartialPerm, Parity, Transformation};
use proptest::prelude::*;

fn transformation(n: usize) -> impl Strategy<Value = Transformation> {
    prop::collection::vec(1..=n, n).prop_map(|v| Transformation::new(v).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Transformation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Transformation::new(v).unwrap())
}

fn sized_transformation() -> impl Strategy<Value = Transformation> {
    (1usize..=9).prop_flat_map(transformation)
}

/// A chained pair: the second map is defined exactly on the image of the first.
fn chained_pair() -> impl Strategy<Value = (PartialPerm, PartialPerm)> {
    (1usize..=9)
        .prop_flat_map(|n| (Just(n), permutation(n), permutation(n), permutation(n), 0..=n))
        .prop_map(|(n, d, i, j, k)| {
            let dom: Vec<usize> = d.images().take(k).collect();
            let img: Vec<usize> = i.images().take(k).collect();
            let p = PartialPerm::new(n, dom.iter().copied().zip(img.iter().copied())).unwrap();
            let img2: Vec<usize> = j.images().take(k).collect();
            let q = PartialPerm::new(n, img.into_iter().zip(img2)).unwrap();
            (p, q)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn composition_is_associative(n in 1usize..=9, seed in any::<u64>()) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let [a, b, c] = [0, 1, 2].map(|_| evenmon::engine::random_transformation(&mut rng, n));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn composition_acts_left_to_right(a in transformation(6), b in transformation(6)) {
        let ab = &a * &b;
        for x in 1..=6 {
            prop_assert_eq!(ab.apply(x), b.apply(a.apply(x)));
        }
    }

    #[test]
    fn rank_of_product_is_bounded(a in transformation(7), b in transformation(7)) {
        let r = (&a * &b).rank();
        prop_assert!(r <= a.rank().min(b.rank()));
    }

    #[test]
    fn parity_of_chained_pairs((p, q) in chained_pair()) {
        let pq = p.compose_chained(&q).unwrap();
        prop_assert_eq!(pq.parity() == Parity::Even, p.parity() == q.parity());
    }

    #[test]
    fn merge_inversions_agree_with_naive(v in prop::collection::vec(0u8..20, 0..40)) {
        prop_assert_eq!(inversions_merge(&v), inversions_naive(&v));
    }

    #[test]
    fn cycles_round_trip(p in (1usize..=9).prop_flat_map(permutation)) {
        let c = CycleExpr::from_permutation(&p).unwrap();
        prop_assert_eq!(c.eval(p.degree()).unwrap(), p.clone());
        let text = c.to_string();
        let back: CycleExpr = text.parse().unwrap();
        prop_assert_eq!(back.eval(p.degree()).unwrap(), p);
    }

    #[test]
    fn tuples_round_trip(a in sized_transformation()) {
        let back: Transformation = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn key_packing_preserves_order(a in transformation(8), b in transformation(8)) {
        prop_assert_eq!(a.to_key().cmp(&b.to_key()), a.to_vec().cmp(&b.to_vec()));
        prop_assert_eq!(Transformation::from_key(a.to_key().unwrap(), 8), a);
    }

    #[test]
    fn fast_membership_agrees_with_definition(a in (4usize..=7).prop_flat_map(transformation)) {
        let n = a.degree();
        let oracle = Oracle::shared();
        for tag in [FamilyTag::Gamma, FamilyTag::Sigma, FamilyTag::Delta, FamilyTag::ScriptX,
                    FamilyTag::SigmaT(2), FamilyTag::SigmaT(3), FamilyTag::Pap] {
            let f = FamilySpec::new(tag, n).unwrap();
            prop_assert_eq!(family::contains(&f, &a).unwrap(), oracle.contains(&f, &a).unwrap(),
                "{} at {}", tag, a);
        }
    }

    #[test]
    fn sigma_is_closed_under_products(a in transformation(6), b in transformation(6)) {
        let f = FamilySpec::new(FamilyTag::Sigma, 6).unwrap();
        if family::contains(&f, &a).unwrap() && family::contains(&f, &b).unwrap() {
            prop_assert!(family::contains(&f, &(&a * &b)).unwrap());
        }
    }
}

#[test]
fn closure_is_deterministic_and_generated() {
    let gens = generating_set(&GeneratingSetSpec::new(GeneratingFamily::DeltaMonoid, 5)).unwrap();
    let m1 = closure(&gens, 5, 1 << 20).unwrap();
    let m2 = closure(&gens, 5, 1 << 20).unwrap();
    assert_eq!(m1.keys(), m2.keys());
    assert_eq!(m1.len(), 1911);
    for i in 0..m1.len() {
        assert_eq!(m1.eval_word(&m1.word(i)), m1.get(i));
    }
}

#[test]
fn gamma_four_is_cyclic_of_order_four() {
    let s4 = Transformation::new([2, 3, 4, 1]).unwrap();
    let f = FamilySpec::new(FamilyTag::Gamma, 4).unwrap();
    assert!(family::contains(&f, &s4).unwrap());
    assert_eq!(closure(&[s4], 4, 100).unwrap().len(), 4);
}
