//! Linear codes over Z4.
//!
//! A vector is stored as two bit planes, `lo` and `hi`, with entry
//! `lo + 2*hi`. A [`Z4Code`] keeps generators in a normal form: order-4 rows
//! whose reductions mod 2 are the echelon basis of the residue code (entry 1
//! on their pivot, 0 on the other order-4 pivots, 0 or 1 on order-2 pivots),
//! followed by order-2 rows `2t` where the `t` are an echelon basis of a
//! complement of the residue inside the torsion code. Equal codes have equal
//! normal forms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CodeError, Result};
use crate::gf2core::{full_mask, rref, BinaryCode, MAX_LEN};
use crate::perm::Permutation;

/// Largest `log2 |C|` accepted by exhaustive enumeration.
pub const ENUM_MAX_LOG2: usize = 26;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Z4Vec {
    pub lo: u128,
    pub hi: u128,
}

impl Z4Vec {
    pub const ZERO: Z4Vec = Z4Vec { lo: 0, hi: 0 };

    pub fn from_entries(entries: &[u8]) -> Result<Z4Vec> {
        if entries.len() > MAX_LEN {
            return Err(CodeError::UnsupportedLength(entries.len()));
        }
        let mut v = Z4Vec::ZERO;
        for (i, &e) in entries.iter().enumerate() {
            if e > 3 {
                return Err(CodeError::BadEntry(e));
            }
            v.lo |= ((e & 1) as u128) << i;
            v.hi |= (((e >> 1) & 1) as u128) << i;
        }
        Ok(v)
    }

    /// The {0,1}-lift of a binary vector.
    pub fn lift(v: u128) -> Z4Vec {
        Z4Vec { lo: v, hi: 0 }
    }

    /// `2v` for a binary vector `v`.
    pub fn twice(v: u128) -> Z4Vec {
        Z4Vec { lo: 0, hi: v }
    }

    #[inline]
    pub fn entry(&self, i: usize) -> u8 {
        (((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1)) as u8
    }

    pub fn entries(&self, n: usize) -> Vec<u8> {
        (0..n).map(|i| self.entry(i)).collect()
    }

    #[inline]
    pub fn add(self, o: Z4Vec) -> Z4Vec {
        Z4Vec {
            lo: self.lo ^ o.lo,
            hi: self.hi ^ o.hi ^ (self.lo & o.lo),
        }
    }

    #[inline]
    pub fn neg(self) -> Z4Vec {
        Z4Vec {
            lo: self.lo,
            hi: self.hi ^ self.lo,
        }
    }

    #[inline]
    pub fn sub(self, o: Z4Vec) -> Z4Vec {
        self.add(o.neg())
    }

    #[inline]
    pub fn double(self) -> Z4Vec {
        Z4Vec { lo: 0, hi: self.lo }
    }

    pub fn scale(self, e: u8) -> Z4Vec {
        match e & 3 {
            0 => Z4Vec::ZERO,
            1 => self,
            2 => self.double(),
            _ => self.neg(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.lo == 0 && self.hi == 0
    }

    /// Reduction mod 2.
    pub fn residue(&self) -> u128 {
        self.lo
    }

    /// `n_1 + 4 n_2 + n_3`.
    #[inline]
    pub fn euclidean_weight(&self) -> u32 {
        self.lo.count_ones() + 4 * (self.hi & !self.lo).count_ones()
    }

    /// Standard inner product mod 4.
    #[inline]
    pub fn inner(&self, o: &Z4Vec) -> u32 {
        ((self.lo & o.lo).count_ones()
            + 2 * ((self.lo & o.hi).count_ones() + (self.hi & o.lo).count_ones()))
            & 3
    }

    /// Negates the coordinates in `signs`.
    pub fn negate_coords(&self, signs: u128) -> Z4Vec {
        Z4Vec {
            lo: self.lo,
            hi: self.hi ^ (self.lo & signs),
        }
    }

    pub fn permuted(&self, p: &Permutation) -> Z4Vec {
        Z4Vec {
            lo: p.apply_bits(self.lo),
            hi: p.apply_bits(self.hi),
        }
    }

    pub fn to_string_n(&self, n: usize) -> String {
        (0..n).map(|i| char::from(b'0' + self.entry(i))).collect()
    }
}

impl fmt::Debug for Z4Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = 128 - (self.lo | self.hi).leading_zeros() as usize;
        write!(f, "{}", self.to_string_n(n.max(1)))
    }
}

/// Euclidean weight of an entry vector.
pub fn euclidean_weight(entries: &[u8]) -> Result<u32> {
    Ok(Z4Vec::from_entries(entries)?.euclidean_weight())
}

/// A permutation of coordinates combined with sign changes. The signs are
/// applied first, in the source coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap {
    pub perm: Permutation,
    pub signs: u128,
}

impl MonomialMap {
    pub fn identity(n: usize) -> Self {
        MonomialMap {
            perm: Permutation::identity(n),
            signs: 0,
        }
    }

    pub fn apply(&self, v: &Z4Vec) -> Z4Vec {
        v.negate_coords(self.signs).permuted(&self.perm)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Z4Code {
    n: usize,
    gen4: Vec<Z4Vec>,
    gen2: Vec<Z4Vec>,
}

impl fmt::Debug for Z4Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Code(n={}, k1={}, k2={})", self.n, self.k1(), self.k2())
    }
}

impl Z4Code {
    /// Span of rows over Z4 given as entry lists.
    pub fn from_entry_rows(n: usize, rows: &[Vec<u8>]) -> Result<Z4Code> {
        let mut vs = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != n {
                return Err(CodeError::LengthMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            vs.push(Z4Vec::from_entries(r)?);
        }
        Z4Code::from_rows(n, &vs)
    }

    /// Span of packed rows, brought to normal form.
    pub fn from_rows(n: usize, rows: &[Z4Vec]) -> Result<Z4Code> {
        if n == 0 || n > MAX_LEN {
            return Err(CodeError::UnsupportedLength(n));
        }
        let mask = full_mask(n);
        if rows.iter().any(|r| (r.lo | r.hi) & !mask != 0) {
            return Err(CodeError::LengthMismatch {
                expected: n,
                found: MAX_LEN,
            });
        }
        let mut pool: Vec<Z4Vec> = rows.iter().copied().filter(|r| !r.is_zero()).collect();
        let mut gen4: Vec<Z4Vec> = Vec::new();
        for c in 0..n {
            let Some(idx) = pool.iter().position(|r| (r.lo >> c) & 1 == 1) else {
                continue;
            };
            let mut x = pool.swap_remove(idx);
            if x.entry(c) == 3 {
                x = x.neg();
            }
            for y in pool.iter_mut().chain(gen4.iter_mut()) {
                let e = y.entry(c);
                if e != 0 {
                    *y = y.sub(x.scale(e));
                }
            }
            pool.retain(|r| !r.is_zero());
            gen4.push(x);
        }
        let halves: Vec<u128> = pool.iter().map(|r| r.hi).collect();
        let tbasis = rref(&halves);
        for g in gen4.iter_mut() {
            for &t in &tbasis {
                let q = t.trailing_zeros();
                if (g.hi >> q) & 1 == 1 {
                    g.hi ^= t;
                }
            }
        }
        Ok(Z4Code {
            n,
            gen4,
            gen2: tbasis.into_iter().map(Z4Vec::twice).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn k1(&self) -> usize {
        self.gen4.len()
    }

    pub fn k2(&self) -> usize {
        self.gen2.len()
    }

    pub fn gen4(&self) -> &[Z4Vec] {
        &self.gen4
    }

    pub fn gen2(&self) -> &[Z4Vec] {
        &self.gen2
    }

    pub fn generators(&self) -> impl Iterator<Item = &Z4Vec> {
        self.gen4.iter().chain(self.gen2.iter())
    }

    /// `log2 |C|`.
    pub fn log2_size(&self) -> usize {
        2 * self.k1() + self.k2()
    }

    pub fn residue(&self) -> BinaryCode {
        let rows: Vec<u128> = self.gen4.iter().map(|g| g.lo).collect();
        BinaryCode::from_rows(self.n, &rows).expect("valid length")
    }

    pub fn torsion(&self) -> BinaryCode {
        let rows: Vec<u128> = self
            .gen4
            .iter()
            .map(|g| g.lo)
            .chain(self.gen2.iter().map(|g| g.hi))
            .collect();
        BinaryCode::from_rows(self.n, &rows).expect("valid length")
    }

    /// Pivot columns of the order-4 generators.
    pub fn pivots4(&self) -> Vec<usize> {
        self.gen4.iter().map(|g| g.lo.trailing_zeros() as usize).collect()
    }

    pub fn contains(&self, v: &Z4Vec) -> bool {
        if (v.lo | v.hi) & !full_mask(self.n) != 0 {
            return false;
        }
        let mut x = *v;
        for g in &self.gen4 {
            let e = x.entry(g.lo.trailing_zeros() as usize);
            if e != 0 {
                x = x.sub(g.scale(e));
            }
        }
        if x.lo != 0 {
            return false;
        }
        for t in &self.gen2 {
            if (x.hi >> t.hi.trailing_zeros()) & 1 == 1 {
                x.hi ^= t.hi;
            }
        }
        x.hi == 0
    }

    /// Codeword whose residue is the binary codeword `r`, with entries on the
    /// order-4 pivots equal to 0 or 1.
    pub fn lift_of(&self, r: u128) -> Option<Z4Vec> {
        let mut acc = Z4Vec::ZERO;
        let mut rem = r;
        for g in &self.gen4 {
            if (rem >> g.lo.trailing_zeros()) & 1 == 1 {
                rem ^= g.lo;
                acc = acc.add(*g);
            }
        }
        (rem == 0 && acc.lo == r).then_some(acc)
    }

    pub fn dual(&self) -> Z4Code {
        let n = self.n;
        let p4 = self.pivots4();
        let p2: Vec<usize> = self
            .gen2
            .iter()
            .map(|t| t.hi.trailing_zeros() as usize)
            .collect();
        let used = p4.iter().chain(&p2).fold(0u128, |m, &p| m | (1u128 << p));
        // x is determined on the order-4 pivots by x_p = -sum_{j != p} g_j x_j
        let close = |mut x: Z4Vec| -> Z4Vec {
            for (g, &p) in self.gen4.iter().zip(&p4) {
                let mut gp = *g;
                gp.lo &= !(1u128 << p);
                gp.hi &= !(1u128 << p);
                let s = gp.inner(&x) as u8;
                let e = (4 - s) & 3;
                x.lo = (x.lo & !(1u128 << p)) | (((e & 1) as u128) << p);
                x.hi = (x.hi & !(1u128 << p)) | ((((e >> 1) & 1) as u128) << p);
            }
            x
        };
        let mut rows = Vec::new();
        for f in 0..n {
            if (used >> f) & 1 == 1 {
                continue;
            }
            let mut x = Z4Vec::lift(1u128 << f);
            for t in &self.gen2 {
                if (t.hi >> f) & 1 == 1 {
                    x.lo |= 1u128 << t.hi.trailing_zeros();
                }
            }
            rows.push(close(x));
        }
        for &q in &p2 {
            rows.push(close(Z4Vec::twice(1u128 << q)));
        }
        Z4Code::from_rows(n, &rows).expect("valid length")
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let g: Vec<&Z4Vec> = self.generators().collect();
        (0..g.len()).all(|i| (i..g.len()).all(|j| g[i].inner(g[j]) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        self.log2_size() == self.n && self.is_self_orthogonal()
    }

    /// Self-dual with every Euclidean weight divisible by 8, decided on the
    /// generators: on a self-orthogonal code
    /// `Euclid(x+y) ≡ Euclid(x) + Euclid(y) + 2<x,y> (mod 8)`.
    pub fn is_type2(&self) -> bool {
        self.is_self_dual() && self.generators().all(|g| g.euclidean_weight() % 8 == 0)
    }

    /// Visits every codeword (Gray order over the binary generator list
    /// `g, 2g` for order-4 rows and `2t` for order-2 rows).
    pub fn for_each_codeword<F: FnMut(&Z4Vec) -> bool>(&self, mut f: F) -> Result<()> {
        let m = self.log2_size();
        if m > ENUM_MAX_LOG2 {
            return Err(CodeError::BudgetExceeded(format!(
                "enumeration of 2^{m} codewords"
            )));
        }
        let mut steps: Vec<Z4Vec> = Vec::with_capacity(m);
        for g in &self.gen4 {
            steps.push(*g);
            steps.push(g.double());
        }
        steps.extend(self.gen2.iter().copied());
        let mut x = Z4Vec::ZERO;
        let mut state = 0u64;
        if !f(&x) {
            return Ok(());
        }
        for i in 1u64..(1u64 << m) {
            let b = i.trailing_zeros() as usize;
            state ^= 1 << b;
            x = if (state >> b) & 1 == 1 {
                x.add(steps[b])
            } else {
                x.sub(steps[b])
            };
            if !f(&x) {
                break;
            }
        }
        Ok(())
    }

    /// Exact minimum Euclidean weight by exhaustive enumeration.
    pub fn min_euclidean_weight(&self) -> Result<u32> {
        let mut best = u32::MAX;
        self.for_each_codeword(|x| {
            let w = x.euclidean_weight();
            if w != 0 && w < best {
                best = w;
            }
            best > 1
        })?;
        if best == u32::MAX {
            return Err(CodeError::ZeroCode);
        }
        Ok(best)
    }

    /// Whether some nonzero codeword has Euclidean weight below `bound`.
    ///
    /// Codewords with residue `r` are `x_r + 2t` for `t` in the torsion code,
    /// of weight `wt(r) + 4 wt((h + t) off supp r)` where `h` is the high
    /// plane of `x_r`. The coset distance is decided through syndromes of a
    /// parity check of the torsion code, so only the `2^{k1}` residue words
    /// are visited.
    pub fn has_euclidean_weight_below(&self, bound: u32) -> bool {
        let torsion = self.torsion();
        if let Ok(d) = torsion.min_weight() {
            if 4 * d as u32 != 0 && (4 * d as u32) < bound {
                return true;
            }
        }
        let check = torsion.dual();
        let cols: Vec<u128> = check_columns(&check, self.n);
        let k1 = self.k1();
        let mut x = Z4Vec::ZERO;
        let mut state = 0u64;
        for i in 1u64..(1u64 << k1) {
            let b = i.trailing_zeros() as usize;
            state ^= 1 << b;
            x = if (state >> b) & 1 == 1 {
                x.add(self.gen4[b])
            } else {
                x.sub(self.gen4[b])
            };
            let wr = x.lo.count_ones();
            if wr >= bound {
                continue;
            }
            let slack = (bound - 1 - wr) / 4;
            if coset_within(&cols, self.n, x.lo, x.hi & !x.lo, slack as usize) {
                return true;
            }
        }
        false
    }

    /// Type II with `d_E = 8 floor(n/24) + 8`.
    pub fn is_extremal(&self) -> bool {
        if !self.is_type2() {
            return false;
        }
        let bound = 8 * (self.n as u32 / 24) + 8;
        if self.has_euclidean_weight_below(bound) {
            return false;
        }
        // a torsion word of weight bound/4 gives a codeword of weight bound
        let torsion = self.torsion();
        if bound % 4 == 0 && !torsion.is_zero() {
            if let Ok(d) = torsion.min_weight() {
                if 4 * d as u32 == bound {
                    return true;
                }
            }
        }
        self.has_euclidean_weight_below(bound + 1)
    }

    pub fn apply_monomial(&self, m: &MonomialMap) -> Z4Code {
        let rows: Vec<Z4Vec> = self.generators().map(|g| m.apply(g)).collect();
        Z4Code::from_rows(self.n, &rows).expect("valid length")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("z4 {} {} {}\n", self.n, self.k1(), self.k2());
        for g in self.generators() {
            s.push_str(&g.to_string_n(self.n));
            s.push('\n');
        }
        s
    }

    /// Parses the `z4 <n> <k1> <k2>` text format.
    pub fn from_text(text: &str) -> Result<Z4Code> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| CodeError::Parse("empty input".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 4 || parts[0] != "z4" {
            return Err(CodeError::Parse(format!("bad header `{header}`")));
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| CodeError::Parse(format!("bad number `{s}`")))
        };
        let (n, k1, k2) = (num(parts[1])?, num(parts[2])?, num(parts[3])?);
        let mut rows = Vec::new();
        for line in lines {
            if line.len() != n {
                return Err(CodeError::Parse(format!(
                    "row of length {} in a length-{n} code",
                    line.len()
                )));
            }
            let entries: Vec<u8> = line
                .chars()
                .map(|c| match c {
                    '0'..='3' => Ok(c as u8 - b'0'),
                    _ => Err(CodeError::Parse(format!("unexpected character `{c}`"))),
                })
                .collect::<Result<_>>()?;
            rows.push(entries);
        }
        if rows.len() != k1 + k2 {
            return Err(CodeError::Parse(format!(
                "expected {} rows, found {}",
                k1 + k2,
                rows.len()
            )));
        }
        let code = Z4Code::from_entry_rows(n, &rows)?;
        if code.k1() != k1 || code.k2() != k2 {
            return Err(CodeError::Parse(format!(
                "rows generate a code of type 4^{} 2^{}, header says 4^{k1} 2^{k2}",
                code.k1(),
                code.k2()
            )));
        }
        Ok(code)
    }
}

/// Column syndromes of a parity-check code (bit `i` of entry `j` is
/// coordinate `j` of check row `i`).
fn check_columns(check: &BinaryCode, n: usize) -> Vec<u128> {
    (0..n)
        .map(|j| {
            check
                .basis()
                .iter()
                .enumerate()
                .fold(0u128, |c, (i, &b)| c | (((b >> j) & 1) << i))
        })
        .collect()
}

/// Whether some `t` with `H t = 0` satisfies `wt((h + t) & !support) <= slack`.
fn coset_within(cols: &[u128], n: usize, support: u128, h: u128, slack: usize) -> bool {
    // syndromes reachable by free choices on the support
    let mut span: Vec<u128> = Vec::new();
    let mut s = support;
    while s != 0 {
        let j = s.trailing_zeros() as usize;
        push_reduced(&mut span, cols[j]);
        s &= s - 1;
    }
    let red = |v: u128| reduce_hi(&span, v);
    let mut target = 0u128;
    let mut hh = h;
    while hh != 0 {
        target ^= cols[hh.trailing_zeros() as usize];
        hh &= hh - 1;
    }
    let target = red(target);
    if target == 0 {
        return true;
    }
    let outside: Vec<u128> = (0..n)
        .filter(|&j| (support >> j) & 1 == 0)
        .map(|j| red(cols[j]))
        .collect();
    fn rec(outside: &[u128], start: usize, left: usize, acc: u128) -> bool {
        if acc == 0 {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..outside.len()).any(|i| rec(outside, i + 1, left - 1, acc ^ outside[i]))
    }
    rec(&outside, 0, slack, target)
}

/// Echelon basis keyed on the highest set bit.
fn push_reduced(span: &mut Vec<u128>, v: u128) {
    let v = reduce_hi(span, v);
    if v != 0 {
        span.push(v);
        span.sort_by(|a, b| b.cmp(a));
    }
}

fn reduce_hi(span: &[u128], mut v: u128) -> u128 {
    for &b in span {
        let top = 127 - b.leading_zeros();
        if (v >> top) & 1 == 1 {
            v ^= b;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclidean_weight_examples() {
        assert_eq!(euclidean_weight(&[1, 2, 3, 0]).unwrap(), 6);
        assert_eq!(euclidean_weight(&[0, 0, 0]).unwrap(), 0);
        assert_eq!(euclidean_weight(&[2, 2, 2, 2]).unwrap(), 16);
        assert!(euclidean_weight(&[4]).is_err());
    }

    #[test]
    fn order_two_row() {
        let c = Z4Code::from_entry_rows(4, &[vec![2, 2, 2, 2]]).unwrap();
        assert_eq!((c.k1(), c.k2()), (0, 1));
        assert!(c.residue().is_zero());
        assert_eq!(c.torsion().dim(), 1);
    }

    #[test]
    fn unit_vector_code_is_not_self_dual() {
        let c = Z4Code::from_entry_rows(4, &[vec![1, 0, 0, 0]]).unwrap();
        assert!(!c.is_self_dual());
        assert!(!c.is_type2());
    }

    #[test]
    fn dual_of_dual() {
        let rows = vec![vec![1, 1, 1, 1, 0, 0], vec![0, 2, 0, 2, 2, 2], vec![0, 0, 1, 3, 1, 1]];
        let c = Z4Code::from_entry_rows(6, &rows).unwrap();
        let d = c.dual();
        assert_eq!(c.log2_size() + d.log2_size(), 12);
        for g in c.generators() {
            for h in d.generators() {
                assert_eq!(g.inner(h), 0);
            }
        }
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn normal_form_is_unique() {
        let a = Z4Code::from_entry_rows(4, &[vec![1, 1, 1, 1], vec![0, 2, 0, 2]]).unwrap();
        let b = Z4Code::from_entry_rows(4, &[vec![1, 3, 1, 3], vec![0, 2, 0, 2], vec![2, 2, 2, 2]])
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn monomial_negation_of_everything_fixes_code() {
        let rows = vec![vec![1, 1, 1, 1, 0, 0, 0, 0], vec![0, 0, 1, 3, 1, 3, 0, 2]];
        let c = Z4Code::from_entry_rows(8, &rows).unwrap();
        let m = MonomialMap {
            perm: Permutation::identity(8),
            signs: 0xff,
        };
        assert_eq!(c.apply_monomial(&m), c);
        assert_eq!(c.apply_monomial(&MonomialMap::identity(8)), c);
    }

    #[test]
    fn text_format() {
        let c = Z4Code::from_entry_rows(4, &[vec![1, 1, 1, 1], vec![0, 2, 0, 2]]).unwrap();
        assert_eq!(Z4Code::from_text(&c.to_text()).unwrap(), c);
        assert!(Z4Code::from_text("z4 4 1 0\n1114\n").is_err());
        assert!(Z4Code::from_text("z4 4 2 0\n1111\n2222\n").is_err());
    }
}
