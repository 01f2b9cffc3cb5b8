//! Type II Z4-lifts of a fixed binary residue code.
//!
//! Let `g_1..g_k` be the echelon basis of `C` with pivots `p_a`. A Z4-code
//! with residue `C` and torsion `C^⊥` has a codeword `g_i + 2 x_i` over each
//! basis row, with `x_i` determined modulo `C^⊥`, so the code is determined
//! by the `k x k` binary matrix `Y_ia = <x_i, g_a>`. Self-duality and the
//! Type II condition are affine equations in `Y`:
//!
//! * `Y_ij + Y_ji = |g_i ∧ g_j| / 2` for `i < j`,
//! * `sum_a c_a Y_ia + Y_ii = wt(g_i) / 4` where `1 = sum_a c_a g_a`,
//!
//! all mod 2. Negating a coordinate translates `Y` inside the solution
//! space; the quotient by these translations is the affine space on which
//! `Aut(C)` acts, and its orbits are the equivalence classes of lifts.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::equiv::canonical_form;
use crate::error::{CodeError, Result};
use crate::gf2core::{inner, weight, BinaryCode};
use crate::perm::Permutation;
use crate::z4core::{MonomialMap, Z4Code, Z4Vec};

/// Largest residue dimension handled.
pub const MAX_DIM: usize = 16;
/// Default largest quotient dimension for exhaustive orbit enumeration.
pub const DEFAULT_CAP: usize = 24;
/// Default number of points visited by the randomized search.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A `k x k` binary matrix; bit `a` of `rows[i]` is `Y_ia`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug, Serialize, Deserialize)]
pub struct LiftParams {
    pub rows: [u16; MAX_DIM],
}

impl LiftParams {
    fn xor(&self, o: &LiftParams) -> LiftParams {
        let mut r = *self;
        for (a, b) in r.rows.iter_mut().zip(o.rows.iter()) {
            *a ^= b;
        }
        r
    }

    fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Flat index `16 i + a` of the lowest set entry.
    fn lowest(&self) -> Option<usize> {
        self.rows
            .iter()
            .enumerate()
            .find(|(_, &r)| r != 0)
            .map(|(i, &r)| 16 * i + r.trailing_zeros() as usize)
    }

    fn get(&self, idx: usize) -> bool {
        (self.rows[idx / 16] >> (idx % 16)) & 1 == 1
    }

    fn flip(&mut self, idx: usize) {
        self.rows[idx / 16] ^= 1 << (idx % 16);
    }

    fn parity_with(&self, mask: &LiftParams) -> bool {
        self.rows
            .iter()
            .zip(mask.rows.iter())
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            & 1
            == 1
    }
}

/// `q -> A q + shift` on `F_2^m`, with `A` given by its columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    pub cols: Vec<u64>,
    pub shift: u64,
}

impl AffineMap {
    pub fn apply(&self, q: u64) -> u64 {
        let mut r = self.shift;
        let mut x = q;
        while x != 0 {
            r ^= self.cols[x.trailing_zeros() as usize];
            x &= x - 1;
        }
        r
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.cols.iter().enumerate().all(|(i, &c)| c == 1 << i)
    }
}

/// Byte-sliced lookup tables for fast repeated application.
struct FastMap {
    tables: Vec<[u64; 256]>,
    shift: u64,
}

impl FastMap {
    fn new(map: &AffineMap) -> FastMap {
        let m = map.cols.len();
        let chunks = m.div_ceil(8);
        let mut tables = vec![[0u64; 256]; chunks];
        for (c, table) in tables.iter_mut().enumerate() {
            for byte in 1..256usize {
                let low = byte.trailing_zeros() as usize;
                let col = map.cols.get(8 * c + low).copied().unwrap_or(0);
                table[byte] = table[byte & (byte - 1)] ^ col;
            }
        }
        FastMap {
            tables,
            shift: map.shift,
        }
    }

    #[inline]
    fn apply(&self, q: u64) -> u64 {
        let mut r = self.shift;
        for (c, t) in self.tables.iter().enumerate() {
            r ^= t[((q >> (8 * c)) & 0xff) as usize];
        }
        r
    }
}

#[derive(Clone, Debug)]
struct EchelonRow {
    vec: LiftParams,
    pivot: usize,
    tag: u64,
}

#[derive(Clone, Debug)]
pub struct LiftSpace {
    pub residue: BinaryCode,
    rows: Vec<u128>,
    pivots: Vec<usize>,
    torsion_rows: Vec<u128>,
    /// Parameters of the base lift.
    pub base_point: LiftParams,
    pub base_lift: Z4Code,
    /// Basis of the homogeneous solution space.
    pub direction_basis: Vec<LiftParams>,
    pub m0: usize,
    /// `1 + k(k-1)/2`.
    pub predicted_m0: usize,
    /// Translation induced by negating each coordinate of the base lift.
    pub negations: Vec<LiftParams>,
    pub negation_rank: usize,
    quotient_basis: Vec<LiftParams>,
    echelon: Vec<EchelonRow>,
    pub m: usize,
    pub aut_generators: Vec<Permutation>,
    pub aut_action: Vec<AffineMap>,
}

fn decode_rows(n: usize, rows: &[u128], pivots: &[usize], torsion: &[u128], y: &LiftParams) -> Z4Code {
    let mut gens: Vec<Z4Vec> = Vec::with_capacity(rows.len() + torsion.len());
    for (i, &g) in rows.iter().enumerate() {
        let mut hi = 0u128;
        let mut bits = y.rows[i];
        while bits != 0 {
            hi |= 1u128 << pivots[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        gens.push(Z4Vec { lo: g, hi });
    }
    gens.extend(torsion.iter().map(|&t| Z4Vec::twice(t)));
    Z4Code::from_rows(n, &gens).expect("valid length")
}

/// Solves the Type II equations and returns `(particular, null basis)`.
fn solve_type2(rows: &[u128]) -> Result<(LiftParams, Vec<LiftParams>)> {
    let k = rows.len();
    let ones_coeffs: u16 = (1u32 << k).wrapping_sub(1) as u16;
    let mut eqs: Vec<(LiftParams, bool)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let mut mask = LiftParams::default();
            mask.flip(16 * i + j);
            mask.flip(16 * j + i);
            eqs.push((mask, (weight(rows[i] & rows[j]) / 2) & 1 == 1));
        }
    }
    // 1 is in C, so it is the sum of all echelon rows
    for i in 0..k {
        let mut mask = LiftParams::default();
        mask.rows[i] = ones_coeffs;
        mask.flip(16 * i + i);
        eqs.push((mask, (weight(rows[i]) / 4) & 1 == 1));
    }
    // reduced echelon form, pivot = lowest index
    let mut ech: Vec<(LiftParams, bool, usize)> = Vec::new();
    for (mut mask, mut rhs) in eqs {
        for (m, r, p) in &ech {
            if mask.get(*p) {
                mask = mask.xor(m);
                rhs ^= r;
            }
        }
        match mask.lowest() {
            None if rhs => {
                return Err(CodeError::Infeasible(
                    "Type II conditions on the residue basis are inconsistent".into(),
                ))
            }
            None => {}
            Some(p) => {
                for (m, r, _) in ech.iter_mut() {
                    if m.get(p) {
                        *m = m.xor(&mask);
                        *r ^= rhs;
                    }
                }
                ech.push((mask, rhs, p));
            }
        }
    }
    let pivot_set: Vec<usize> = ech.iter().map(|e| e.2).collect();
    let assign = |free: &LiftParams| -> LiftParams {
        let mut y = *free;
        for (mask, rhs, p) in &ech {
            let mut others = *mask;
            others.flip(*p);
            if free.parity_with(&others) ^ rhs {
                y.flip(*p);
            }
        }
        y
    };
    let particular = assign(&LiftParams::default());
    let mut basis = Vec::new();
    for i in 0..k {
        for a in 0..k {
            let idx = 16 * i + a;
            if pivot_set.contains(&idx) {
                continue;
            }
            let mut f = LiftParams::default();
            f.flip(idx);
            // homogeneous: drop the right-hand sides
            let y = assign(&f).xor(&particular);
            basis.push(y);
        }
    }
    Ok((particular, basis))
}

impl LiftSpace {
    /// Builds the space, taking `Aut(C)` generators from the canonical form.
    pub fn new(code: &BinaryCode) -> Result<LiftSpace> {
        let cert = canonical_form(code)?;
        LiftSpace::with_generators(code, &cert.aut_generators)
    }

    pub fn with_generators(code: &BinaryCode, gens: &[Permutation]) -> Result<LiftSpace> {
        if !code.satisfies_residue_conditions() {
            return Err(CodeError::Precondition(
                "code must be doubly even, contain 1 and have dual distance at least 4".into(),
            ));
        }
        let k = code.dim();
        if k > MAX_DIM {
            return Err(CodeError::UnsupportedLength(k));
        }
        for g in gens {
            if code.permuted(g.images()) != *code {
                return Err(CodeError::Precondition(
                    "generator does not preserve the code".into(),
                ));
            }
        }
        let rows = code.basis().to_vec();
        let pivots = code.pivots();
        let torsion_rows = code.dual().basis().to_vec();
        let (base_point, direction_basis) = solve_type2(&rows)?;
        let m0 = direction_basis.len();
        let mut space = LiftSpace {
            residue: code.clone(),
            rows,
            pivots,
            torsion_rows,
            base_point,
            base_lift: Z4Code::from_rows(code.len(), &[])
                .unwrap_or_else(|_| unreachable!("length already validated")),
            direction_basis,
            m0,
            predicted_m0: 1 + k * k.saturating_sub(1) / 2,
            negations: Vec::new(),
            negation_rank: 0,
            quotient_basis: Vec::new(),
            echelon: Vec::new(),
            m: 0,
            aut_generators: gens.to_vec(),
            aut_action: Vec::new(),
        };
        space.base_lift = space.decode_params(&base_point);
        if !space.base_lift.is_type2() {
            return Err(CodeError::Internal("base lift is not Type II".into()));
        }
        space.build_negations()?;
        space.build_quotient()?;
        space.build_action()?;
        Ok(space)
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.residue.len()
    }

    /// The code with parameters `y`.
    pub fn decode_params(&self, y: &LiftParams) -> Z4Code {
        decode_rows(self.residue.len(), &self.rows, &self.pivots, &self.torsion_rows, y)
    }

    /// Parameters of a code with residue `C` and torsion `C^⊥`.
    pub fn encode_params(&self, code: &Z4Code) -> Option<LiftParams> {
        if code.len() != self.residue.len() || code.residue() != self.residue {
            return None;
        }
        if code.log2_size() != self.residue.len() {
            return None;
        }
        let mut y = LiftParams::default();
        for (i, &g) in self.rows.iter().enumerate() {
            let z = code.lift_of(g)?;
            for (a, &ga) in self.rows.iter().enumerate() {
                if inner(z.hi, ga) == 1 {
                    y.rows[i] |= 1 << a;
                }
            }
        }
        Some(y)
    }

    fn build_negations(&mut self) -> Result<()> {
        let n = self.residue.len();
        let mut negs = Vec::with_capacity(n);
        for j in 0..n {
            let neg = self.base_lift.apply_monomial(&MonomialMap {
                perm: Permutation::identity(n),
                signs: 1u128 << j,
            });
            let y = self
                .encode_params(&neg)
                .ok_or_else(|| CodeError::Internal("negated lift lost its residue".into()))?;
            negs.push(y.xor(&self.base_point));
        }
        self.negations = negs;
        Ok(())
    }

    fn reduce(&self, v: &LiftParams) -> (LiftParams, u64) {
        let mut v = *v;
        let mut tag = 0;
        for row in &self.echelon {
            if v.get(row.pivot) {
                v = v.xor(&row.vec);
                tag ^= row.tag;
            }
        }
        (v, tag)
    }

    fn insert(&mut self, v: LiftParams, tag: u64) {
        let pivot = v.lowest().expect("nonzero");
        let pos = self.echelon.partition_point(|r| r.pivot < pivot);
        self.echelon.insert(pos, EchelonRow { vec: v, pivot, tag });
    }

    fn build_quotient(&mut self) -> Result<()> {
        let negs = self.negations.clone();
        for v in &negs {
            let (r, _) = self.reduce(v);
            if !r.is_zero() {
                self.insert(r, 0);
            }
        }
        self.negation_rank = self.echelon.len();
        for v in self.direction_basis.clone() {
            let (r, tag) = self.reduce(&v);
            if r.is_zero() {
                continue;
            }
            let t = self.quotient_basis.len();
            if t >= 63 {
                return Err(CodeError::UnsupportedLength(t + 1));
            }
            self.quotient_basis.push(v);
            self.insert(r, tag ^ (1 << t));
        }
        self.m = self.quotient_basis.len();
        // every negation translation must be a homogeneous solution
        let rank_all = self.echelon.len();
        if rank_all != self.m0 {
            return Err(CodeError::Internal(format!(
                "negation translations leave the solution space ({} vs {})",
                rank_all, self.m0
            )));
        }
        Ok(())
    }

    /// Parameters of quotient point `q` (coset representative).
    pub fn point_params(&self, q: u64) -> LiftParams {
        let mut y = self.base_point;
        let mut x = q;
        while x != 0 {
            y = y.xor(&self.quotient_basis[x.trailing_zeros() as usize]);
            x &= x - 1;
        }
        y
    }

    /// Quotient point of a parameter matrix.
    pub fn params_point(&self, y: &LiftParams) -> Result<u64> {
        let (r, tag) = self.reduce(&y.xor(&self.base_point));
        if !r.is_zero() {
            return Err(CodeError::Precondition(
                "parameters do not satisfy the Type II equations".into(),
            ));
        }
        Ok(tag)
    }

    pub fn decode(&self, q: u64) -> Z4Code {
        self.decode_params(&self.point_params(q))
    }

    /// Quotient point of a Type II code with residue `C`.
    pub fn encode(&self, code: &Z4Code) -> Result<u64> {
        let y = self.encode_params(code).ok_or_else(|| {
            CodeError::Precondition("code does not have the space's residue and torsion".into())
        })?;
        self.params_point(&y)
    }

    fn action_of(&self, g: &Permutation, q: u64) -> Result<u64> {
        let image = self.decode(q).apply_monomial(&MonomialMap {
            perm: g.clone(),
            signs: 0,
        });
        self.encode(&image)
    }

    fn build_action(&mut self) -> Result<()> {
        let mut maps = Vec::with_capacity(self.aut_generators.len());
        for g in &self.aut_generators {
            let shift = self.action_of(g, 0)?;
            let cols = (0..self.m)
                .map(|t| Ok(self.action_of(g, 1 << t)? ^ shift))
                .collect::<Result<Vec<u64>>>()?;
            let map = AffineMap { cols, shift };
            if self.m >= 2 {
                let q = 0b11 | (1u64 << (self.m - 1));
                if self.action_of(g, q)? != map.apply(q) {
                    return Err(CodeError::Internal("induced action is not affine".into()));
                }
            }
            maps.push(map);
        }
        self.aut_action = maps;
        Ok(())
    }

    pub fn summary(&self) -> LiftSpaceSummary {
        LiftSpaceSummary {
            n: self.residue.len(),
            k: self.k(),
            m0: self.m0,
            predicted_m0: self.predicted_m0,
            negation_rank: self.negation_rank,
            m: self.m,
            aut_generators: self.aut_generators.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftSpaceSummary {
    pub n: usize,
    pub k: usize,
    pub m0: usize,
    pub predicted_m0: usize,
    pub negation_rank: usize,
    pub m: usize,
    pub aut_generators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub representative: u64,
    pub size: u64,
}

/// Orbits of the affine group generated by `maps` on `F_2^m`; each
/// representative is the least point of its orbit.
pub fn orbits(m: usize, maps: &[AffineMap]) -> Result<Vec<Orbit>> {
    if m > 40 {
        return Err(CodeError::BudgetExceeded(format!("orbit bitmap of 2^{m} bits")));
    }
    let fast: Vec<FastMap> = maps.iter().filter(|a| !a.is_identity()).map(FastMap::new).collect();
    let total = 1u64 << m;
    let mut seen = vec![0u64; total.div_ceil(64) as usize];
    let mark = |seen: &mut [u64], p: u64| -> bool {
        let (w, b) = ((p / 64) as usize, p % 64);
        let fresh = (seen[w] >> b) & 1 == 0;
        seen[w] |= 1 << b;
        fresh
    };
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let mut start = 0u64;
    while start < total {
        let (w, b) = ((start / 64) as usize, start % 64);
        if seen[w] == u64::MAX {
            start = (w as u64 + 1) * 64;
            continue;
        }
        if (seen[w] >> b) & 1 == 1 {
            start += 1;
            continue;
        }
        mark(&mut seen, start);
        queue.push_back(start);
        let mut size = 0u64;
        while let Some(p) = queue.pop_front() {
            size += 1;
            for f in &fast {
                let image = f.apply(p);
                if mark(&mut seen, image) {
                    queue.push_back(image);
                }
            }
        }
        out.push(Orbit {
            representative: start,
            size,
        });
        start += 1;
    }
    Ok(out)
}

/// All points of the orbit of `q`.
pub fn orbit_of(q: u64, maps: &[AffineMap]) -> Vec<u64> {
    let fast: Vec<FastMap> = maps.iter().map(FastMap::new).collect();
    let mut seen = std::collections::HashSet::new();
    seen.insert(q);
    let mut queue = vec![q];
    while let Some(p) = queue.pop() {
        for f in &fast {
            let image = f.apply(p);
            if seen.insert(image) {
                queue.push(image);
            }
        }
    }
    let mut v: Vec<u64> = seen.into_iter().collect();
    v.sort_unstable();
    v
}

/// Orbit representatives of the lift space.
pub fn enumerate_classes(space: &LiftSpace, cap: usize) -> Result<Vec<Orbit>> {
    if space.m > cap {
        return Err(CodeError::BudgetExceeded(format!(
            "quotient dimension {} exceeds the cap {cap}",
            space.m
        )));
    }
    orbits(space.m, &space.aut_action)
}

/// One residue word below the extremal bound, as a condition on the
/// quotient point: the word is bad when the reduced syndrome lands in
/// `targets`.
#[derive(Clone, Debug)]
struct WordCheck {
    base: u16,
    cols: Vec<u16>,
    targets: Vec<u16>,
}

/// Decides `d_E >= bound` for the decoded codes of a lift space without
/// building them.
#[derive(Clone, Debug)]
pub struct ExtremalityTest {
    checks: Vec<WordCheck>,
    pub bound: u32,
}

fn reduce_span(span: &[u16], mut v: u16) -> u16 {
    for &b in span {
        let top = 15 - b.leading_zeros();
        if (v >> top) & 1 == 1 {
            v ^= b;
        }
    }
    v
}

impl ExtremalityTest {
    pub fn new(space: &LiftSpace) -> Result<ExtremalityTest> {
        let n = space.residue.len();
        let k = space.k();
        let bound = 8 * (n as u32 / 24) + 8;
        // syndrome columns: bit a of cols[j] is coordinate j of g_a
        let syn_cols: Vec<u16> = (0..n)
            .map(|j| {
                space
                    .rows
                    .iter()
                    .enumerate()
                    .fold(0u16, |c, (a, &g)| c | ((((g >> j) & 1) as u16) << a))
            })
            .collect();
        let syndrome = |v: u128| -> u16 {
            space
                .rows
                .iter()
                .enumerate()
                .fold(0u16, |s, (a, &g)| s | ((inner(v, g) as u16) << a))
        };
        let qbasis: Vec<LiftParams> = space.quotient_basis.clone();
        let mut checks = Vec::new();
        if k >= 32 {
            return Err(CodeError::UnsupportedLength(k));
        }
        for coeffs in 1u32..(1u32 << k) {
            let mut r = 0u128;
            let mut carry_sum = Z4Vec::ZERO;
            for (i, &g) in space.rows.iter().enumerate() {
                if (coeffs >> i) & 1 == 1 {
                    r ^= g;
                    carry_sum = carry_sum.add(Z4Vec::lift(g));
                }
            }
            let wr = weight(r);
            if wr >= bound {
                continue;
            }
            let slack = ((bound - 1 - wr) / 4) as usize;
            let mut span: Vec<u16> = Vec::new();
            let mut s = r;
            while s != 0 {
                let v = reduce_span(&span, syn_cols[s.trailing_zeros() as usize]);
                if v != 0 {
                    span.push(v);
                    span.sort_by(|a, b| b.cmp(a));
                }
                s &= s - 1;
            }
            let outside: Vec<u16> = (0..n)
                .filter(|&j| (r >> j) & 1 == 0)
                .map(|j| reduce_span(&span, syn_cols[j]))
                .collect();
            let mut targets = vec![0u16];
            let mut layer = vec![(0u16, 0usize)];
            for _ in 0..slack {
                let mut next = Vec::new();
                for &(v, start) in &layer {
                    for (j, &c) in outside.iter().enumerate().skip(start) {
                        next.push((v ^ c, j + 1));
                        targets.push(v ^ c);
                    }
                }
                layer = next;
            }
            targets.sort_unstable();
            targets.dedup();
            let row_sum = |y: &LiftParams| -> u16 {
                (0..k)
                    .filter(|&i| (coeffs >> i) & 1 == 1)
                    .fold(0u16, |acc, i| acc ^ y.rows[i])
            };
            let base = reduce_span(
                &span,
                syndrome(carry_sum.hi) ^ row_sum(&space.base_point),
            );
            let cols = qbasis
                .iter()
                .map(|qv| reduce_span(&span, row_sum(qv)))
                .collect();
            checks.push(WordCheck {
                base,
                cols,
                targets,
            });
        }
        Ok(ExtremalityTest { checks, bound })
    }

    fn value(check: &WordCheck, q: u64) -> u16 {
        let mut v = check.base;
        let mut x = q;
        while x != 0 {
            v ^= check.cols[x.trailing_zeros() as usize];
            x &= x - 1;
        }
        v
    }

    /// Whether the code at quotient point `q` has no nonzero codeword of
    /// Euclidean weight below the bound.
    pub fn is_extremal_point(&self, q: u64) -> bool {
        self.checks
            .iter()
            .all(|c| c.targets.binary_search(&Self::value(c, q)).is_err())
    }

    /// Number of residue words whose coset contains a light codeword.
    pub fn violations(&self, q: u64) -> usize {
        self.checks
            .iter()
            .filter(|c| c.targets.binary_search(&Self::value(c, q)).is_ok())
            .count()
    }

    /// Seeded local search for an extremal point. Every visited point counts
    /// against `budget`.
    pub fn search(&self, m: usize, seed: u64, budget: u64) -> Option<u64> {
        if m == 0 {
            return self.is_extremal_point(0).then_some(0);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mask = if m >= 64 { u64::MAX } else { (1u64 << m) - 1 };
        let restart_every = 200 * m as u64;
        let mut visited = 0u64;
        let nc = self.checks.len();
        while visited < budget {
            let mut q = rng.gen::<u64>() & mask;
            let mut vals: Vec<u16> = self.checks.iter().map(|c| Self::value(c, q)).collect();
            let bad = |c: &WordCheck, v: u16| c.targets.binary_search(&v).is_ok();
            let mut steps = 0u64;
            while steps < restart_every && visited < budget {
                visited += 1;
                steps += 1;
                let violated: Vec<usize> = (0..nc)
                    .filter(|&i| bad(&self.checks[i], vals[i]))
                    .collect();
                if violated.is_empty() {
                    return Some(q);
                }
                let ci = violated[rng.gen_range(0..violated.len())];
                let c = &self.checks[ci];
                let fixes: Vec<usize> = (0..m)
                    .filter(|&t| !bad(c, vals[ci] ^ c.cols[t]))
                    .collect();
                if fixes.is_empty() {
                    break;
                }
                let t = if rng.gen_bool(0.3) {
                    fixes[rng.gen_range(0..fixes.len())]
                } else {
                    let mut best = (usize::MAX, Vec::new());
                    for &t in &fixes {
                        let breaks = (0..nc)
                            .filter(|&i| {
                                let ch = &self.checks[i];
                                ch.cols[t] != 0 && !bad(ch, vals[i]) && bad(ch, vals[i] ^ ch.cols[t])
                            })
                            .count();
                        if breaks < best.0 {
                            best = (breaks, vec![t]);
                        } else if breaks == best.0 {
                            best.1.push(t);
                        }
                    }
                    best.1[rng.gen_range(0..best.1.len())]
                };
                q ^= 1 << t;
                for (i, v) in vals.iter_mut().enumerate() {
                    *v ^= self.checks[i].cols[t];
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RealizabilityVerdict {
    Realizable { witness: Z4Code, point: u64 },
    NonRealizable { classes_checked: u64 },
    Unknown { budget: u64, seed: u64 },
}

impl RealizabilityVerdict {
    pub fn is_realizable(&self) -> bool {
        matches!(self, RealizabilityVerdict::Realizable { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecideOptions {
    pub cap: usize,
    pub budget: u64,
    pub seed: u64,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            cap: DEFAULT_CAP,
            budget: DEFAULT_BUDGET,
            seed: 0,
        }
    }
}

/// Exhaustive over orbit representatives when `m <= cap`, otherwise a
/// seeded randomized search.
pub fn decide_realizability(space: &LiftSpace, opts: DecideOptions) -> Result<RealizabilityVerdict> {
    let test = ExtremalityTest::new(space)?;
    let found = if space.m <= opts.cap {
        let classes = enumerate_classes(space, opts.cap)?;
        match classes
            .iter()
            .find(|o| test.is_extremal_point(o.representative))
        {
            Some(o) => Some(o.representative),
            None => {
                return Ok(RealizabilityVerdict::NonRealizable {
                    classes_checked: classes.len() as u64,
                })
            }
        }
    } else {
        test.search(space.m, opts.seed, opts.budget)
    };
    match found {
        Some(q) => {
            let witness = space.decode(q);
            if !witness.is_extremal() || witness.residue() != space.residue {
                return Err(CodeError::Internal(
                    "fast extremality test disagrees with the decoded code".into(),
                ));
            }
            Ok(RealizabilityVerdict::Realizable { witness, point: q })
        }
        None => Ok(RealizabilityVerdict::Unknown {
            budget: opts.budget,
            seed: opts.seed,
        }),
    }
}

/// One Type II lift of `C`.
pub fn base_type2_lift(code: &BinaryCode) -> Result<Z4Code> {
    if !code.satisfies_residue_conditions() {
        return Err(CodeError::Precondition(
            "code must be doubly even, contain 1 and have dual distance at least 4".into(),
        ));
    }
    let rows = code.basis().to_vec();
    let (y, _) = solve_type2(&rows)?;
    Ok(decode_rows(
        code.len(),
        &rows,
        &code.pivots(),
        code.dual().basis(),
        &y,
    ))
}

/// A random quotient point, for tests and sampling.
pub fn random_point<R: Rng + ?Sized>(space: &LiftSpace, rng: &mut R) -> u64 {
    if space.m == 0 {
        0
    } else {
        rng.gen::<u64>() & ((1u64 << space.m) - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{c6, fig1_code};

    #[test]
    fn trivial_action_gives_singletons() {
        let maps = vec![AffineMap {
            cols: vec![1, 2, 4],
            shift: 0,
        }];
        let o = orbits(3, &maps).unwrap();
        assert_eq!(o.len(), 8);
        assert!(o.iter().all(|x| x.size == 1));
    }

    #[test]
    fn translation_pairs_points() {
        let maps = vec![AffineMap {
            cols: vec![1, 2, 4],
            shift: 1,
        }];
        let o = orbits(3, &maps).unwrap();
        assert_eq!(o.len(), 4);
        assert_eq!(o.iter().map(|x| x.size).sum::<u64>(), 8);
    }

    #[test]
    fn c6_space_decodes_to_type2() {
        let s = LiftSpace::new(&c6()).unwrap();
        assert_eq!(s.m0, s.predicted_m0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let q = random_point(&s, &mut rng);
            let c = s.decode(q);
            assert!(c.is_type2());
            assert_eq!(c.residue(), s.residue);
            assert_eq!(s.encode(&c).unwrap(), q);
        }
        let f = fig1_code();
        assert!(s.encode(&f).is_ok());
    }

    #[test]
    fn rejects_code_without_all_ones() {
        let c = BinaryCode::from_strings(&["11110000", "00001111"]).unwrap();
        assert!(base_type2_lift(&c).is_err());
    }
}
