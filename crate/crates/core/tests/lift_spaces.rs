use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use z4codes::equiv::canonical_form;
use z4codes::lifts::{
    decide_realizability, enumerate_classes, orbit_of, random_point, DecideOptions, ExtremalityTest,
    LiftSpace, RealizabilityVerdict,
};
use z4codes::registry::{c6, fig1_code, table_code};
use z4codes::z4core::MonomialMap;

#[test]
fn c6_has_one_extremal_class_containing_fig1() {
    let space = LiftSpace::new(&c6()).unwrap();
    assert_eq!(space.m0, 1 + 6 * 5 / 2);
    assert_eq!(space.m0, space.predicted_m0);
    let classes = enumerate_classes(&space, 24).unwrap();
    assert_eq!(classes.iter().map(|o| o.size).sum::<u64>(), 1 << space.m);
    let test = ExtremalityTest::new(&space).unwrap();
    let extremal: Vec<_> = classes
        .iter()
        .filter(|o| test.is_extremal_point(o.representative))
        .collect();
    assert_eq!(extremal.len(), 1);
    let q = space.encode(&fig1_code()).unwrap();
    assert!(orbit_of(q, &space.aut_action).contains(&extremal[0].representative));
    assert!(space.decode(extremal[0].representative).is_extremal());
}

#[test]
fn points_decode_to_type2_codes_with_the_residue() {
    let code = table_code("C7_1").unwrap();
    let space = LiftSpace::new(&code).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let q = random_point(&space, &mut rng);
        let z = space.decode(q);
        assert!(z.is_type2());
        assert_eq!(z.residue(), code);
        assert_eq!(space.encode(&z).unwrap(), q);
    }
}

#[test]
fn fast_extremality_agrees_with_decoding() {
    let code = table_code("C8_1").unwrap();
    let space = LiftSpace::new(&code).unwrap();
    let test = ExtremalityTest::new(&space).unwrap();
    for q in 0..(1u64 << space.m) {
        assert_eq!(test.is_extremal_point(q), space.decode(q).is_extremal(), "point {q}");
    }
}

#[test]
fn group_action_gives_equivalent_codes() {
    let code = table_code("C7_3").unwrap();
    let space = LiftSpace::new(&code).unwrap();
    let cert = canonical_form(&code).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (g, map) in cert.aut_generators.iter().zip(&space.aut_action) {
        let q = random_point(&space, &mut rng);
        let moved = space.decode(q).apply_monomial(&MonomialMap {
            perm: g.clone(),
            signs: 0,
        });
        // encoding forgets sign changes, so the permuted code lands on the image point
        assert_eq!(moved.residue(), code);
        let p = space.encode(&moved).unwrap();
        assert_eq!(p, map.apply(q));
    }
}

#[test]
fn extremality_is_constant_on_orbits() {
    let space = LiftSpace::new(&table_code("C7_2").unwrap()).unwrap();
    let test = ExtremalityTest::new(&space).unwrap();
    for o in enumerate_classes(&space, 24).unwrap() {
        let orbit = orbit_of(o.representative, &space.aut_action);
        assert_eq!(orbit.len() as u64, o.size);
        let e = test.is_extremal_point(o.representative);
        assert!(orbit.iter().all(|&q| test.is_extremal_point(q) == e));
    }
}

#[test]
fn maximal_nonrealizable_dimension_nine() {
    let expected = [
        ("N9_1", 159u64),
        ("N9_2", 372),
        ("N9_3", 170),
        ("N9_4", 388),
        ("N9_5", 228),
        ("N9_6", 254),
        ("N9_7", 287),
        ("N9_8", 488),
    ];
    for (name, n) in expected {
        let space = LiftSpace::new(&table_code(name).unwrap()).unwrap();
        assert_eq!(space.m, 14, "{name}");
        assert_eq!(space.m0, space.predicted_m0);
        let classes = enumerate_classes(&space, 24).unwrap();
        assert_eq!(classes.len() as u64, n, "{name}");
        assert_eq!(classes.iter().map(|o| o.size).sum::<u64>(), 1 << 14);
        let v = decide_realizability(&space, DecideOptions::default()).unwrap();
        assert_eq!(v, RealizabilityVerdict::NonRealizable { classes_checked: n });
    }
}

#[test]
fn large_spaces_are_searched() {
    let code = table_code("C11").unwrap();
    let space = LiftSpace::new(&code).unwrap();
    assert_eq!(space.m, 33);
    let v = decide_realizability(&space, DecideOptions::default()).unwrap();
    match v {
        RealizabilityVerdict::Realizable { witness, .. } => {
            assert!(witness.is_extremal());
            assert_eq!(witness.residue(), code);
        }
        other => panic!("{other:?}"),
    }
    let tiny = DecideOptions {
        budget: 0,
        ..DecideOptions::default()
    };
    assert!(matches!(
        decide_realizability(&space, tiny).unwrap(),
        RealizabilityVerdict::Unknown { .. }
    ));
}

#[test]
fn rejects_codes_outside_the_conditions() {
    let mut c = c6();
    c = z4codes::gf2core::BinaryCode::from_rows(24, &c.basis()[1..]).unwrap();
    assert!(LiftSpace::new(&c).is_err());
}
