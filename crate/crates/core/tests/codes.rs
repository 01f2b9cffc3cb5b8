mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use z4codes::equiv::{are_equivalent, canonical_form};
use z4codes::gf2core::{full_mask, inner, weight, BinaryCode};
use z4codes::named::{named_code, weight4_label, LABELS, SELF_DUAL_24};
use z4codes::perm::{group_order, Permutation};

fn rows_strategy() -> impl Strategy<Value = (usize, Vec<u128>)> {
    (1usize..=40).prop_flat_map(|n| {
        let mask = full_mask(n);
        (
            Just(n),
            prop::collection::vec(any::<u128>().prop_map(move |v| v & mask), 0..12),
        )
    })
}

proptest! {
    #[test]
    fn dual_is_an_involution((n, rows) in rows_strategy()) {
        let c = BinaryCode::from_rows(n, &rows).unwrap();
        let d = c.dual();
        prop_assert_eq!(c.dim() + d.dim(), n);
        prop_assert_eq!(d.dual(), c.clone());
        for &a in c.basis() {
            for &b in d.basis() {
                prop_assert_eq!(inner(a, b), 0);
            }
        }
    }

    #[test]
    fn min_weight_is_first_populated_weight((n, rows) in rows_strategy()) {
        let c = BinaryCode::from_rows(n, &rows).unwrap();
        prop_assume!(!c.is_zero());
        let dist = c.weight_distribution().unwrap();
        let d = c.min_weight().unwrap();
        prop_assert!(dist.counts[d] >= 1);
        prop_assert!(dist.counts[1..d].iter().all(|&x| x == 0));
        prop_assert_eq!(dist.counts.iter().sum::<u64>(), 1u64 << c.dim());
    }

    #[test]
    fn codewords_match_membership((n, rows) in rows_strategy(), probe in any::<u128>()) {
        let c = BinaryCode::from_rows(n, &rows).unwrap();
        let words = c.codewords().unwrap();
        let v = probe & full_mask(n);
        prop_assert_eq!(words.contains(&v), c.contains(v));
        for w in words.iter().take(64) {
            prop_assert!(c.contains(*w));
            prop_assert_eq!(c.encode(c.coords(*w).unwrap()), *w);
        }
    }

    #[test]
    fn text_round_trip((n, rows) in rows_strategy()) {
        let c = BinaryCode::from_rows(n, &rows).unwrap();
        prop_assert_eq!(BinaryCode::from_text(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn canonical_form_ignores_coordinate_order(seed in any::<u64>(), k in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = common::random_code(&mut rng, 16, k);
        let p = Permutation::random(16, &mut rng);
        let a = canonical_form(&c).unwrap();
        let b = canonical_form(&c.permuted(p.images())).unwrap();
        prop_assert_eq!(&a.canonical, &b.canonical);
        prop_assert_eq!(&a.aut_order, &b.aut_order);
        prop_assert_eq!(c.permuted(a.witness.images()), a.canonical.clone());
    }
}

#[test]
fn random_duals_thousand() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..1000 {
        let n = 1 + i % 64;
        let c = common::random_code(&mut rng, n, i % 20);
        let d = c.dual();
        assert_eq!(c.dim() + d.dim(), n);
        assert_eq!(d.dual(), c);
    }
}

#[test]
fn parser_rejects_bad_input() {
    assert!(BinaryCode::from_text("binary 3 1\n10a\n").is_err());
    assert!(BinaryCode::from_text("binary 3 2\n101\n").is_err());
    assert!(BinaryCode::from_text("z4 3 1 0\n101\n").is_err());
    assert!(BinaryCode::from_text("binary 4 1\n101\n").is_err());
}

#[test]
fn named_self_dual_codes() {
    let mut mw8 = 0;
    for label in SELF_DUAL_24 {
        let c = named_code(label).unwrap();
        assert!(c.is_self_dual(), "{label}");
        assert!(c.is_doubly_even(), "{label}");
        assert!(c.divisibility().unwrap() >= 4);
        let d = c.min_weight().unwrap();
        if d == 8 {
            mw8 += 1;
            assert_eq!(*label, "g24");
        } else {
            assert_eq!(d, 4, "{label}");
            assert_eq!(weight4_label(&c).unwrap(), *label);
        }
    }
    assert_eq!(mw8, 1);
    assert!(LABELS.len() >= SELF_DUAL_24.len());
}

#[test]
fn golay_weight_distribution() {
    let g = named_code("g24").unwrap();
    let dist = g.weight_distribution().unwrap();
    assert_eq!(dist.counts[8], 759);
    assert_eq!(dist.counts[12], 2576);
    assert_eq!(dist.counts[16], 759);
    assert_eq!(dist.counts[24], 1);
}

#[test]
fn self_dual_codes_are_pairwise_inequivalent() {
    let canon: Vec<BinaryCode> = SELF_DUAL_24
        .iter()
        .map(|l| canonical_form(&named_code(l).unwrap()).unwrap().canonical)
        .collect();
    for i in 0..canon.len() {
        for j in i + 1..canon.len() {
            assert_ne!(canon[i], canon[j], "{} {}", SELF_DUAL_24[i], SELF_DUAL_24[j]);
        }
    }
}

#[test]
fn automorphism_generators_preserve_code() {
    let c = named_code("e8^3").unwrap();
    let cert = canonical_form(&c).unwrap();
    for a in &cert.aut_generators {
        assert_eq!(c.permuted(a.images()), c);
    }
    // |Aut(e8)|^3 * 3! with |Aut(e8)| = 1344
    let expected = BigUint::from(1344u64).pow(3) * BigUint::from(6u32);
    assert_eq!(cert.aut_order, expected);
    assert_eq!(group_order(24, &cert.aut_generators), expected);
}

#[test]
fn equivalence_witness_maps_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = named_code("d6^4").unwrap();
    let p = Permutation::random(24, &mut rng);
    let d = c.permuted(p.images());
    let w = are_equivalent(&c, &d).unwrap().expect("equivalent");
    assert_eq!(c.permuted(w.images()), d);
    assert!(are_equivalent(&c, &named_code("d4^6").unwrap()).unwrap().is_none());
}

#[test]
fn weight_helpers() {
    assert_eq!(weight(0b1011), 3);
    assert_eq!(inner(0b1011, 0b0011), 0);
    assert_eq!(inner(0b1011, 0b0001), 1);
}
