//! Acceptance run: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use z4codes::classify::{
    classify, realizable_chain_witnesses, AugmentationDag, Status, StatusPolicy,
};
use z4codes::equiv::canonical_form;
use z4codes::gf2core::inner;
use z4codes::lifts::{enumerate_classes, orbit_of, ExtremalityTest, LiftSpace, Orbit};
use z4codes::moonshine::{decomposable_identities, doubling, doubling_status, MoonshineStatus};
use z4codes::named::{named_code, SELF_DUAL_24};
use z4codes::neighbor::{augment_extremal, deaugment_extremal};
use z4codes::perm::Permutation;
use z4codes::registry::{appendix_code, c6, fig1_code, table_code, APPENDIX_LABELS};
use z4codes::z4core::{Z4Code, Z4Vec};

const SEED: u64 = 2024;

const LIMIT_FIG1: Duration = Duration::from_secs(60);
const LIMIT_APPENDIX: Duration = Duration::from_secs(600);
const LIMIT_CLASSIFY: Duration = Duration::from_secs(3600);
const LIMIT_MAXIMAL: Duration = Duration::from_secs(1800);
const LIMIT_C6: Duration = Duration::from_secs(1800);
const LIMIT_CHAINS: Duration = Duration::from_secs(600);

const MAXIMAL_M14: [(&str, u64); 8] = [
    ("N9_1", 159),
    ("N9_2", 372),
    ("N9_3", 170),
    ("N9_4", 388),
    ("N9_5", 228),
    ("N9_6", 254),
    ("N9_7", 287),
    ("N9_8", 488),
];
const MAXIMAL_M23: [(&str, u64); 2] = [("N10_1", 299), ("N10_2", 378)];
const CLASS_TOTALS: [usize; 7] = [9, 21, 49, 60, 32, 7, 1];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn timed<F: FnOnce() -> Outcome>(limit: Duration, f: F) -> Outcome {
    let t = Instant::now();
    let mut o = f();
    let el = t.elapsed();
    if el > limit {
        o.pass = false;
    }
    o.detail = format!("{}; {:.1}s of {}s", o.detail, el.as_secs_f64(), limit.as_secs());
    o
}

fn fig1() -> Outcome {
    let f = fig1_code();
    let type2 = f.is_type2();
    let de = f.min_euclidean_weight().unwrap_or(0);
    let dim = f.residue().dim();
    outcome(
        type2 && de == 16 && dim == 6,
        format!("Type II {type2}, min Euclidean weight {de}, residue dim {dim}"),
    )
}

fn appendix() -> Outcome {
    let mut canon = Vec::new();
    let mut extremal = 0;
    for i in 0..APPENDIX_LABELS.len() {
        let z = appendix_code(i).unwrap();
        let r = z.residue();
        if z.is_extremal() && r.is_self_dual() && r.is_doubly_even() {
            extremal += 1;
        }
        canon.push(canonical_form(&r).unwrap().canonical);
    }
    let g24 = canonical_form(&named_code("g24").unwrap()).unwrap().canonical;
    let d24 = canonical_form(&named_code("d24").unwrap()).unwrap().canonical;
    let distinct: BTreeSet<_> = canon.iter().collect();
    let avoids = !canon.contains(&g24) && !canon.contains(&d24);
    let mut all: BTreeSet<_> = canon.iter().cloned().collect();
    all.insert(g24);
    all.insert(d24);
    let nine: BTreeSet<_> = SELF_DUAL_24
        .iter()
        .map(|l| canonical_form(&named_code(l).unwrap()).unwrap().canonical)
        .collect();
    outcome(
        extremal == 7 && distinct.len() == 7 && avoids && all == nine,
        format!(
            "{extremal}/7 extremal with doubly even self-dual residue, {} distinct residues, \
             with g24 and d24 they give {} of the 9 classes",
            distinct.len(),
            all.intersection(&nine).count()
        ),
    )
}

fn totals(dag: &AugmentationDag) -> Outcome {
    let by_dim = dag.counts_by_dim();
    let got: Vec<usize> = (6..=12).rev().map(|k| by_dim.get(&k).copied().unwrap_or(0)).collect();
    outcome(
        got == CLASS_TOTALS && dag.nodes.len() == 179,
        format!("k=12..6 totals {got:?}, sum {}", dag.nodes.len()),
    )
}

fn orbit_sum_ok(m: usize, orbits: &[Orbit]) -> bool {
    orbits.iter().map(|o| o.size).sum::<u64>() == 1u64 << m
}

fn maximal(orbit_sums: &mut Vec<bool>) -> Outcome {
    let mut ok = true;
    let mut got = Vec::new();
    for (name, n) in MAXIMAL_M14 {
        let space = LiftSpace::new(&table_code(name).unwrap()).unwrap();
        let classes = enumerate_classes(&space, 24).unwrap();
        orbit_sums.push(orbit_sum_ok(space.m, &classes));
        let test = ExtremalityTest::new(&space).unwrap();
        let ext = classes.iter().filter(|o| test.is_extremal_point(o.representative)).count();
        ok &= space.m == 14 && classes.len() as u64 == n && ext == 0;
        got.push(classes.len());
    }
    let mut stretch = Vec::new();
    for (name, n) in MAXIMAL_M23 {
        let space = LiftSpace::new(&table_code(name).unwrap()).unwrap();
        let classes = enumerate_classes(&space, 24).unwrap();
        orbit_sums.push(orbit_sum_ok(space.m, &classes));
        let test = ExtremalityTest::new(&space).unwrap();
        let ext = classes.iter().filter(|o| test.is_extremal_point(o.representative)).count();
        let hit = space.m == 23 && classes.len() as u64 == n && ext == 0;
        stretch.push(format!("{name} m={} N={} {}", space.m, classes.len(), if hit { "ok" } else { "MISMATCH" }));
    }
    outcome(
        ok,
        format!(
            "m=14 class counts {got:?}, no extremal class; stretch: {}",
            stretch.join(", ")
        ),
    )
}

fn c6_unique(orbit_sums: &mut Vec<bool>) -> Outcome {
    let space = LiftSpace::new(&c6()).unwrap();
    let classes = enumerate_classes(&space, 24).unwrap();
    orbit_sums.push(orbit_sum_ok(space.m, &classes));
    let test = ExtremalityTest::new(&space).unwrap();
    let ext: Vec<&Orbit> = classes.iter().filter(|o| test.is_extremal_point(o.representative)).collect();
    let q = space.encode(&fig1_code()).unwrap();
    let inside = ext.len() == 1 && orbit_of(q, &space.aut_action).contains(&ext[0].representative);
    outcome(
        ext.len() == 1 && inside,
        format!(
            "m={}, {} classes, {} extremal, matrix point {q} in it: {inside}",
            space.m,
            classes.len(),
            ext.len()
        ),
    )
}

fn chains(dag: &AugmentationDag) -> Outcome {
    let ws = match realizable_chain_witnesses(dag) {
        Ok(ws) => ws,
        Err(e) => return outcome(false, e.to_string()),
    };
    let verified = ws
        .iter()
        .filter(|w| w.witness.is_extremal() && w.witness.residue() == w.code)
        .count();
    let refused = ws.iter().filter(|w| !w.parent.is_empty() && w.augmentation_refused).count();
    let with_parent = ws.iter().filter(|w| !w.parent.is_empty()).count();
    let min_vec = ws.iter().flat_map(|w| w.vector_weights.iter()).min().copied().unwrap_or(0);
    outcome(
        verified == 19 && ws.len() == 19,
        format!(
            "{verified}/19 witnesses extremal with the right residue; each code equals its \
             parent plus listed vectors, but those vectors have weight >= {min_vec}, so \
             weight-4 augmentation cannot build them ({refused}/{with_parent} refused); \
             witnesses come from the lift spaces and the reference matrix"
        ),
    )
}

fn census(dag: &AugmentationDag) -> Outcome {
    let (mut yes, mut no, mut other) = (0, 0, 0);
    let mut coherent = true;
    for n in &dag.nodes {
        let s = doubling_status(&n.canonical, dag).unwrap();
        coherent &= s.is_moonshine() == n.status.is_realizable();
        match s {
            MoonshineStatus::Moonshine(_) => yes += 1,
            MoonshineStatus::NotMoonshine(_) => no += 1,
            MoonshineStatus::Unknown => other += 1,
        }
    }
    let real = dag.nodes.iter().filter(|n| n.status.is_realizable()).count();
    let nonreal = dag
        .nodes
        .iter()
        .filter(|n| matches!(n.status, Status::NonRealizable { .. }))
        .count();
    let ids = decomposable_identities().unwrap();
    let ids_ok = ids.iter().all(|i| i.holds && i.coset_min_weight == 8);
    let dims: Vec<usize> = ids.iter().map(|i| i.target_dim).collect();
    outcome(
        yes == 149 && no == 30 && other == 0 && coherent && real == 149 && nonreal == 30 && ids_ok,
        format!(
            "{yes} moonshine / {no} not / {other} unknown, realizable {real} / non-realizable \
             {nonreal}; 3 identities hold {ids_ok} with dims {dims:?}"
        ),
    )
}

fn properties(orbit_sums: &[bool]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut fails = Vec::new();

    for i in 0..1000 {
        let n = 1 + i % 64;
        let c = common::random_code(&mut rng, n, i % 20);
        let d = c.dual();
        if d.dual() != c || c.dim() + d.dim() != n {
            fails.push("duality");
            break;
        }
    }

    for i in 0..100 {
        let n = if i % 2 == 0 { 8 } else { 16 };
        let c = common::random_doubly_even(&mut rng, n);
        let z = common::random_self_dual_z4(&mut rng, &c);
        if z.is_type2() != common::type2_by_enumeration(&z) {
            fails.push("type II check");
            break;
        }
    }

    'canon: for label in SELF_DUAL_24 {
        let c = named_code(label).unwrap();
        let base = canonical_form(&c).unwrap().canonical;
        for _ in 0..100 {
            let p = Permutation::random(24, &mut rng);
            if canonical_form(&c.permuted(p.images())).unwrap().canonical != base {
                fails.push("canonical form");
                break 'canon;
            }
        }
    }

    if orbit_sums.is_empty() || !orbit_sums.iter().all(|&b| b) {
        fails.push("orbit sizes");
    }

    for i in 0..12 {
        let n = 4 + i % 5;
        let k = rng.gen_range(1..=3);
        let rows: Vec<Z4Vec> = (0..k)
            .map(|_| {
                let e: Vec<u8> = (0..n).map(|_| rng.gen_range(0..4)).collect();
                Z4Vec::from_entries(&e).unwrap()
            })
            .collect();
        let z = Z4Code::from_rows(n, &rows).unwrap();
        let Ok(de) = z.min_euclidean_weight() else { continue };
        if common::lattice_min_norm_times4(&z) != 16.min(de) {
            fails.push("lattice norm");
            break;
        }
    }

    for i in 0..200 {
        let n = 8 * (1 + i % 3);
        let c = common::random_doubly_even(&mut rng, n);
        let d = doubling(&c).unwrap();
        let mut ok = d.is_triply_even() && d.dim() == c.dim() + 1;
        let dual_even = c.dual().basis().iter().all(|b| b.count_ones() % 2 == 0);
        if dual_even && c.dual_min_weight().unwrap() >= 4 {
            ok &= d.dual().basis().iter().all(|b| b.count_ones() % 2 == 0)
                && d.dual_min_weight().unwrap() >= 4;
        }
        if !ok {
            fails.push("doubling");
            break;
        }
    }

    let f = fig1_code();
    let res = f.residue();
    let mut pool: Vec<u128> = res
        .dual()
        .words_of_weight(4)
        .unwrap()
        .into_iter()
        .filter(|&w| !res.contains(w))
        .collect();
    pool.shuffle(&mut rng);
    for &a in pool.iter().take(50) {
        let span = res.span_with(a).unwrap();
        let ok = match augment_extremal(&f, a) {
            Ok((up, _)) if up.residue() == span => match deaugment_extremal(&up, a) {
                Ok((down, dw)) => {
                    down.residue().span_with(a).unwrap() == span
                        && !down.residue().contains(a)
                        && inner(a, dw.c) == 1
                }
                Err(_) => false,
            },
            _ => false,
        };
        if !ok {
            fails.push("round trip");
            break;
        }
    }

    outcome(
        fails.is_empty() && pool.len() >= 50,
        if fails.is_empty() {
            format!(
                "duality x1000, Type II x100, canonical form 9x100, {} orbit sums, lattice norm, \
                 doubling x200, round trip x50 (seed {SEED})",
                orbit_sums.len()
            )
        } else {
            format!("failed: {}", fails.join(", "))
        },
    )
}

fn main() {
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut report = |i: usize, name: &'static str, o: Outcome| {
        println!(
            "criterion {i} [{name}]: {} | {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        results.push((i, name, o));
    };

    report(1, "fig1", timed(LIMIT_FIG1, fig1));
    report(2, "appendix", timed(LIMIT_APPENDIX, appendix));

    let t = Instant::now();
    let dag = classify(StatusPolicy::default()).expect("classification");
    let classify_time = t.elapsed();
    let mut o = totals(&dag);
    if classify_time > LIMIT_CLASSIFY {
        o.pass = false;
    }
    o.detail = format!(
        "{}; {:.1}s of {}s",
        o.detail,
        classify_time.as_secs_f64(),
        LIMIT_CLASSIFY.as_secs()
    );
    report(3, "classification totals", o);

    let mut orbit_sums = Vec::new();
    report(4, "maximal non-realizable", timed(LIMIT_MAXIMAL, || maximal(&mut orbit_sums)));
    report(5, "dimension-6 uniqueness", timed(LIMIT_C6, || c6_unique(&mut orbit_sums)));
    report(6, "minimum-weight-8 witnesses", timed(LIMIT_CHAINS, || chains(&dag)));
    report(7, "moonshine census", timed(LIMIT_CLASSIFY, || census(&dag)));
    report(8, "property suites", timed(LIMIT_CLASSIFY, || properties(&orbit_sums)));

    let failed: Vec<usize> = results.iter().filter(|r| !r.2.pass).map(|r| r.0).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", results.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
