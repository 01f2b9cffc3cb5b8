#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use z4codes::gf2core::{full_mask, BinaryCode};
use z4codes::moonshine::{d16_plus, e8};
use z4codes::named::named_code;
use z4codes::perm::Permutation;
use z4codes::z4core::{Z4Code, Z4Vec};

pub fn random_code<R: Rng>(rng: &mut R, n: usize, rows: usize) -> BinaryCode {
    let mask = full_mask(n);
    let v: Vec<u128> = (0..rows).map(|_| rng.gen::<u128>() & mask).collect();
    BinaryCode::from_rows(n, &v).unwrap()
}

/// Span of `k` random codewords of `code`.
pub fn random_subcode<R: Rng>(rng: &mut R, code: &BinaryCode, k: usize) -> BinaryCode {
    let basis = code.basis();
    let rows: Vec<u128> = (0..k)
        .map(|_| {
            basis
                .iter()
                .filter(|_| rng.gen::<bool>())
                .fold(0u128, |a, &b| a ^ b)
        })
        .collect();
    BinaryCode::from_rows(code.len(), &rows).unwrap()
}

/// A randomly permuted doubly even self-dual code of length 8, 16 or 24.
pub fn random_self_dual<R: Rng>(rng: &mut R, n: usize) -> BinaryCode {
    let c = match n {
        8 => e8(),
        16 => {
            if rng.gen() {
                d16_plus()
            } else {
                e8().direct_sum(&e8()).unwrap()
            }
        }
        24 => {
            let labels = z4codes::named::SELF_DUAL_24;
            named_code(labels[rng.gen_range(0..labels.len())]).unwrap()
        }
        _ => panic!("no self-dual code of length {n} here"),
    };
    c.permuted(Permutation::random(n, rng).images())
}

/// Random doubly even code of length `n` (a multiple of 8 up to 24).
pub fn random_doubly_even<R: Rng>(rng: &mut R, n: usize) -> BinaryCode {
    let s = random_self_dual(rng, n);
    let k = rng.gen_range(1..=n / 2);
    let mut c = random_subcode(rng, &s, k);
    if rng.gen_bool(0.5) {
        c = c.span_with(full_mask(n)).unwrap();
    }
    c
}

/// Random self-dual Z4-code with doubly even residue `c`: random lifts of
/// the residue basis, corrected pairwise through the pivot coordinates.
pub fn random_self_dual_z4<R: Rng>(rng: &mut R, c: &BinaryCode) -> Z4Code {
    let n = c.len();
    let g = c.basis();
    let piv = c.pivots();
    let mut xs: Vec<Z4Vec> = g
        .iter()
        .map(|&r| {
            let signs = rng.gen::<u128>() & r;
            let noise = rng.gen::<u128>() & full_mask(n);
            Z4Vec::lift(r).negate_coords(signs).add(Z4Vec::twice(noise))
        })
        .collect();
    for i in 0..xs.len() {
        let mut t = 0u128;
        for j in 0..xs.len() {
            if j < i {
                continue;
            }
            let ip = xs[i].inner(&xs[j]);
            assert_eq!(ip % 2, 0);
            if j > i && ip == 2 {
                t |= 1u128 << piv[j];
            }
        }
        xs[i] = xs[i].add(Z4Vec::twice(t));
    }
    let mut rows = xs;
    rows.extend(c.dual().basis().iter().map(|&u| Z4Vec::twice(u)));
    Z4Code::from_rows(n, &rows).unwrap()
}

/// Type II by listing every codeword.
pub fn type2_by_enumeration(z: &Z4Code) -> bool {
    if z.log2_size() != z.len() {
        return false;
    }
    let mut ok = true;
    z.for_each_codeword(|x| {
        ok &= x.euclidean_weight() % 8 == 0;
        ok
    })
    .unwrap();
    ok && z.gen4().iter().chain(z.gen2()).all(|a| {
        z.gen4().iter().chain(z.gen2()).all(|b| a.inner(b) == 0)
    })
}

/// Minimum norm of the lattice (1/2){x : x mod 4 in C}: a vector of norm
/// below 4 has all entries in [-3, 3], and 4e_1 has norm 4.
pub fn lattice_min_norm_times4(z: &Z4Code) -> u32 {
    let n = z.len();
    let mut words = HashSet::new();
    z.for_each_codeword(|x| {
        words.insert(*x);
        true
    })
    .unwrap();
    let mut best = 16u32;
    let mut x = vec![-3i32; n];
    loop {
        let norm: u32 = x.iter().map(|v| (v * v) as u32).sum();
        if norm != 0 && norm < best {
            let e: Vec<u8> = x.iter().map(|v| v.rem_euclid(4) as u8).collect();
            if words.contains(&Z4Vec::from_entries(&e).unwrap()) {
                best = norm;
            }
        }
        let mut i = 0;
        while i < n && x[i] == 3 {
            x[i] = -3;
            i += 1;
        }
        if i == n {
            break;
        }
        x[i] += 1;
    }
    best
}

