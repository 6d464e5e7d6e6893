use atomic_core::crystal::{generate_crystal, CrystalOps};
use atomic_core::poset::padded;
use atomic_core::{weyl_act, Family, RootSystem, TPoly, Weight};
use proptest::prelude::*;

fn rank_and_family() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (2usize..=4).prop_map(|r| (Family::A, r)),
        (2usize..=3).prop_map(|r| (Family::B, r)),
        (2usize..=3).prop_map(|r| (Family::C, r)),
        Just((Family::D, 4)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn modified_operators_invert((family, rank) in rank_and_family(), pick in any::<prop::sample::Index>(), root in any::<prop::sample::Index>()) {
        let rs = RootSystem::new(family, rank).unwrap();
        let lambda = padded(if family == Family::A { &[2, 1] } else { &[1, 1] }, rs.dim());
        let g = generate_crystal(&rs, &lambda).unwrap();
        let ops = CrystalOps::new(&rs);
        let b = &g.vertices()[pick.index(g.len())];
        let alpha = &rs.positive_roots()[root.index(rs.positive_roots().len())];
        if let Ok(Some(up)) = ops.f_alpha(alpha, b) {
            prop_assert_eq!(ops.e_alpha(alpha, &up).unwrap(), Some(b.clone()));
            prop_assert_eq!(ops.weight(&up), &ops.weight(b) - alpha);
        }
    }

    #[test]
    fn weyl_action_preserves_norm((family, rank) in rank_and_family(), k in any::<prop::sample::Index>(), v in prop::collection::vec(-3i64..=3, 5)) {
        let rs = RootSystem::new(family, rank).unwrap();
        let w = Weight(v[..rs.dim()].to_vec());
        let g = &rs.weyl_group()[k.index(rs.weyl_group().len())];
        let image = weyl_act(g, &w);
        prop_assert_eq!(image.dot(&image), w.dot(&w));
        prop_assert_eq!(weyl_act(&g.inverse(), &image), w);
    }

    #[test]
    fn poly_ring_laws(a in prop::collection::vec(-5i64..=5, 0..5), b in prop::collection::vec(-5i64..=5, 0..5), t in -3i64..=3) {
        let (p, q) = (TPoly::from_coeffs(a), TPoly::from_coeffs(b));
        prop_assert_eq!((&p * &q).eval(t), p.eval(t) * q.eval(t));
        prop_assert_eq!((&p + &q).eval(t), p.eval(t) + q.eval(t));
        prop_assert_eq!(&(&p - &q) + &q, p);
    }
}
