//! Agreement between independently computed quantities.

use atomic_core::atomic_graph::{build_bplus, export, to_export, BplusExport};
use atomic_core::binf::{self, Multisegment};
use atomic_core::charge::{kostka_via_charge, Tableau};
use atomic_core::crystal::{generate_crystal, partition_weight, weyl_dimension};
use atomic_core::kostka::{
    atomic_polys, dominant_character_t, kostka_foulkes, m_t, resum_atomic, AtomicVariant,
};
use atomic_core::poset::{interval, partitions, IntervalExport};
use atomic_core::{wt, Family, RootSystem, TPoly, Weight};

fn systems() -> Vec<RootSystem> {
    [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 2),
        (Family::C, 3),
        (Family::D, 4),
    ]
    .into_iter()
    .map(|(f, r)| RootSystem::new(f, r).unwrap())
    .collect()
}

fn small_weights(rs: &RootSystem) -> Vec<Weight> {
    (1..=3)
        .flat_map(|size| partitions(size, rs.rank()))
        .map(|p| partition_weight(rs, &p).unwrap())
        .collect()
}

#[test]
fn kostka_at_one_is_weight_multiplicity() {
    for rs in systems() {
        for lambda in small_weights(&rs) {
            let crystal = generate_crystal(&rs, &lambda).unwrap();
            let ch = crystal.character();
            for mu in interval(&rs, &lambda).unwrap().elements() {
                let k = kostka_foulkes(&rs, &lambda, mu).unwrap();
                let mult = ch.get(mu).copied().unwrap_or(0) as i64;
                assert_eq!(k.eval_at_one(), mult, "{} {lambda} {mu}", rs.name());
            }
        }
    }
}

#[test]
fn crystal_size_is_weyl_dimension() {
    for rs in systems() {
        for lambda in small_weights(&rs) {
            let crystal = generate_crystal(&rs, &lambda).unwrap();
            assert_eq!(
                crystal.len() as u128,
                weyl_dimension(&rs, &lambda),
                "{} {lambda}",
                rs.name()
            );
        }
    }
}

#[test]
fn atomic_expansions_resum_to_character() {
    for rs in systems() {
        for lambda in small_weights(&rs) {
            let ex = atomic_polys(&rs, &lambda, AtomicVariant::Plain).unwrap();
            assert_eq!(ex.get(&lambda), Some(&TPoly::one()));
            let ch = dominant_character_t(&rs, &lambda).unwrap();
            assert_eq!(resum_atomic(&rs, &ex), ch, "{} {lambda}", rs.name());
        }
    }
}

#[test]
fn charge_matches_lusztig_in_gl5() {
    let a4 = RootSystem::new(Family::A, 4).unwrap();
    let lambda = [3usize, 2, 1, 1];
    let mu = [2usize, 2, 1, 1, 1];
    let via_charge = kostka_via_charge(&lambda, &mu, 5).unwrap();
    let lusztig = kostka_foulkes(&a4, &wt![3, 2, 1, 1, 0], &wt![2, 2, 1, 1, 1]).unwrap();
    assert_eq!(via_charge, lusztig);
}

#[test]
fn m_t_from_sources_and_partition_function() {
    let a3 = RootSystem::new(Family::A, 3).unwrap();
    for coords in [[1, 1, 1], [2, 2, 1], [1, 2, 1], [2, 3, 2]] {
        let beta = a3.from_simple_coords(&coords);
        assert_eq!(
            binf::mt_via_sources(4, &coords, binf::DEFAULT_HEIGHT_BOUND).unwrap(),
            m_t(&a3, &beta)
        );
    }
    let a2 = RootSystem::new(Family::A, 2).unwrap();
    assert_eq!(
        m_t(&a2, &a2.from_simple_coords(&[1, 1])),
        TPoly::monomial(1, 1)
    );
}

#[test]
fn exports_round_trip() {
    let c3 = RootSystem::new(Family::C, 3).unwrap();
    let g = build_bplus(&c3, &wt![2, 1, 1]).unwrap();
    let json = export(&g, "json").unwrap();
    let back: BplusExport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, to_export(&g));
    assert_eq!(back.nodes.len(), 9);
    assert_eq!(back.components.len(), 4);
    assert_eq!(export(&g, "json").unwrap(), json);
    assert_eq!(export(&g, "dot").unwrap(), export(&g, "dot").unwrap());

    let iv = interval(&c3, &wt![2, 1, 1]).unwrap();
    let back: IntervalExport = serde_json::from_str(&iv.to_json()).unwrap();
    assert_eq!(back, iv.to_export());

    let m = Multisegment::from_entries(5, &[((1, 3), 1), ((2, 5), 3)]);
    let back: Multisegment = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
    assert_eq!(back, m);

    let t = Tableau::new(vec![vec![1, 1, 2], vec![2, 3]]).unwrap();
    let back: Tableau = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
    assert_eq!(back, t);
}
