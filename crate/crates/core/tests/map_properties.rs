use std::collections::BTreeSet;

use grayiso::graymaps::{
    composed_map, composed_map_general, phi, phi_inverse, phi_word, psi, rm1_codewords,
};
use grayiso::rings::{hom_weight, lee_weight, two_adic_expansion};
use grayiso::{codes, BinaryWord, MapKind, Metric, Modulus, RingWord};
use proptest::prelude::*;

fn z4_word(values: Vec<u32>) -> RingWord {
    RingWord::new(Modulus::Z4, values).unwrap()
}

fn all_z4_words(len: usize) -> Vec<RingWord> {
    (0..4usize.pow(len as u32))
        .map(|i| z4_word((0..len).map(|j| ((i >> (2 * j)) & 3) as u32).collect()))
        .collect()
}

#[test]
fn phi_isometry_exhaustive_up_to_length_two() {
    for len in 1..=2 {
        for w in all_z4_words(len) {
            assert_eq!(
                w.weight(Metric::Lee).unwrap(),
                phi_word(&w).unwrap().hamming_weight(),
                "{w}"
            );
        }
    }
}

#[test]
fn phi_is_a_bijection() {
    for len in 1..=2 {
        for w in all_z4_words(len) {
            assert_eq!(phi_inverse(&phi_word(&w).unwrap()).unwrap(), w);
        }
        for b in BinaryWord::all(2 * len) {
            assert_eq!(phi_word(&phi_inverse(&b).unwrap()).unwrap(), b);
        }
    }
    let images: BTreeSet<_> = (0..4).map(|x| phi(x).unwrap()).collect();
    assert_eq!(images.len(), 4);
}

#[test]
fn psi_at_k2_is_phi() {
    for x in 0..4 {
        assert_eq!(psi(u64::from(x), 2).unwrap(), phi(x).unwrap());
    }
}

#[test]
fn psi_is_an_isometry_and_hits_rm1() {
    for k in 2..=4 {
        let modulus = Modulus::from_exponent(k).unwrap();
        let mut image = BTreeSet::new();
        for u in modulus.residues() {
            let b = psi(u64::from(u), k).unwrap();
            assert_eq!(b.len(), 1 << (k - 1));
            assert_eq!(
                u64::from(hom_weight(modulus, u).unwrap()),
                b.hamming_weight(),
                "k = {k}, u = {u}"
            );
            image.insert(b);
        }
        let rm: BTreeSet<_> = rm1_codewords(k - 1).unwrap().into_iter().collect();
        assert_eq!(image, rm, "k = {k}");
        assert_eq!(image.len(), 1 << k);
    }
}

#[test]
fn composed_routes_agree_on_z8() {
    for u in 0..8u32 {
        let via_psi = phi_inverse(&psi(u64::from(u), 3).unwrap()).unwrap();
        assert_eq!(composed_map(u).unwrap(), via_psi);
        assert_eq!(composed_map_general(u64::from(u), 3).unwrap(), via_psi);
        assert_eq!(
            u64::from(hom_weight(Modulus::Z8, u).unwrap()),
            via_psi.weight(Metric::Lee).unwrap()
        );
    }
}

#[test]
fn composed_map_is_injective() {
    for k in 3..=6 {
        let modulus = Modulus::from_exponent(k).unwrap();
        let images: BTreeSet<_> = modulus
            .residues()
            .map(|u| composed_map_general(u64::from(u), k).unwrap())
            .collect();
        assert_eq!(images.len(), modulus.value() as usize, "k = {k}");
    }
}

#[test]
fn isometry_reports_are_clean() {
    assert!(
        codes::verify_isometry(MapKind::Phi, Metric::Lee, Metric::Hamming)
            .unwrap()
            .holds()
    );
    for k in 2..=4 {
        let r =
            codes::verify_isometry(MapKind::Psi(k), Metric::Homogeneous, Metric::Hamming).unwrap();
        assert_eq!(r.symbols_checked, 1 << k);
        assert!(r.holds());
    }
    for k in 3..=4 {
        let r = codes::verify_isometry(
            MapKind::ComposedPhiInvPsi(k),
            Metric::Homogeneous,
            Metric::Lee,
        )
        .unwrap();
        assert!(r.holds());
    }
}

#[test]
fn composed_map_is_not_additive() {
    let a = RingWord::new(Modulus::Z8, vec![6, 6, 6]).unwrap();
    let b = RingWord::new(Modulus::Z8, vec![7, 6, 1]).unwrap();
    let map = MapKind::ComposedPhiInvPsi(3);
    let sum_of_images = map.apply(&a).unwrap().add(&map.apply(&b).unwrap()).unwrap();
    let image_of_sum = map.apply(&a.add(&b).unwrap()).unwrap();
    assert_ne!(sum_of_images, image_of_sum);
}

#[test]
fn lee_and_homogeneous_match_textbook_formulas() {
    for x in 0..4u32 {
        assert_eq!(lee_weight(x).unwrap(), x.min(4 - x));
    }
    for k in 2..=10 {
        let modulus = Modulus::from_exponent(k).unwrap();
        let weights: Vec<u32> = modulus
            .residues()
            .map(|x| hom_weight(modulus, x).unwrap())
            .collect();
        let total: u64 = weights.iter().map(|&w| u64::from(w)).sum();
        // (m - 2) symbols of weight m/4 plus one of weight m/2.
        let m = u64::from(modulus.value());
        assert_eq!(total, (m - 2) * m / 4 + m / 2);
        assert_eq!(weights[(m / 2) as usize], (m / 2) as u32);
    }
}

fn ring_word(modulus: Modulus, max_len: usize) -> impl Strategy<Value = RingWord> {
    prop::collection::vec(0..modulus.value(), 1..=max_len)
        .prop_map(move |v| RingWord::new(modulus, v).unwrap())
}

proptest! {
    #[test]
    fn phi_isometry_random_lengths(w in ring_word(Modulus::Z4, 40)) {
        let b = phi_word(&w).unwrap();
        prop_assert_eq!(b.len(), 2 * w.len());
        prop_assert_eq!(w.weight(Metric::Lee).unwrap(), b.hamming_weight());
        prop_assert_eq!(phi_inverse(&b).unwrap(), w);
    }

    #[test]
    fn composed_word_isometry(w in ring_word(Modulus::Z8, 30)) {
        let image = MapKind::ComposedPhiInvPsi(3).apply(&w).unwrap();
        prop_assert_eq!(image.len(), 2 * w.len());
        prop_assert_eq!(w.weight(Metric::Homogeneous).unwrap(), image.weight(Metric::Lee).unwrap());
        prop_assert_eq!(image.weight(Metric::Lee).unwrap() % 2, 0);
    }

    #[test]
    fn composed_word_isometry_k4(w in ring_word(Modulus::from_exponent(4).unwrap(), 12)) {
        let image = MapKind::ComposedPhiInvPsi(4).apply(&w).unwrap();
        prop_assert_eq!(image.len(), 4 * w.len());
        prop_assert_eq!(w.weight(Metric::Homogeneous).unwrap(), image.weight(Metric::Lee).unwrap());
    }

    #[test]
    fn weights_add_under_concatenation(
        u in ring_word(Modulus::Z4, 16),
        v in ring_word(Modulus::Z4, 16),
    ) {
        let joined = u.concat(&v).unwrap();
        for metric in Metric::ALL {
            prop_assert_eq!(
                joined.weight(metric).unwrap(),
                u.weight(metric).unwrap() + v.weight(metric).unwrap()
            );
        }
    }

    #[test]
    fn homogeneous_adds_under_concatenation_z8(
        u in ring_word(Modulus::Z8, 16),
        v in ring_word(Modulus::Z8, 16),
    ) {
        let joined = u.concat(&v).unwrap();
        for metric in [Metric::Hamming, Metric::Homogeneous] {
            prop_assert_eq!(
                joined.weight(metric).unwrap(),
                u.weight(metric).unwrap() + v.weight(metric).unwrap()
            );
        }
    }

    #[test]
    fn two_adic_round_trip(k in 1u32..=16, seed in any::<u64>()) {
        let u = seed & ((1u64 << k) - 1);
        let e = two_adic_expansion(u, k).unwrap();
        prop_assert_eq!(e.bits().len(), k as usize);
        prop_assert_eq!(e.reconstruct(), u);
    }

    #[test]
    fn distance_is_translation_invariant(
        (a, b, c) in (1usize..10).prop_flat_map(|n| {
            let w = move || prop::collection::vec(0u32..8, n)
                .prop_map(|v| RingWord::new(Modulus::Z8, v).unwrap());
            (w(), w(), w())
        })
    ) {
        for metric in [Metric::Hamming, Metric::Homogeneous] {
            let d = a.distance(&b, metric).unwrap();
            prop_assert_eq!(d, b.distance(&a, metric).unwrap());
            prop_assert_eq!(d, a.add(&c).unwrap().distance(&b.add(&c).unwrap(), metric).unwrap());
        }
    }
}
