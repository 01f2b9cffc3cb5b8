//! Binary linear codes of length at most 128.
//!
//! Vectors are packed into a `u128`, coordinate `i` living in bit `i`. A
//! [`BinaryCode`] always stores its basis in reduced row-echelon form where
//! the pivot of a row is its lowest set bit, so two values describe the same
//! code exactly when their bases are equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CodeError, Result};

/// Largest supported code length.
pub const MAX_LEN: usize = 128;

/// Largest dimension accepted by full codeword enumeration.
pub const ENUM_MAX_DIM: usize = 28;

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

#[inline]
pub fn weight(v: u128) -> u32 {
    v.count_ones()
}

#[inline]
pub fn inner(a: u128, b: u128) -> u32 {
    (a & b).count_ones() & 1
}

/// Reduced row-echelon form of `rows`; zero rows are dropped.
pub fn rref(rows: &[u128]) -> Vec<u128> {
    let mut basis: Vec<u128> = Vec::with_capacity(rows.len());
    for &r in rows {
        let v = reduce(&basis, r);
        if v == 0 {
            continue;
        }
        let p = v.trailing_zeros();
        for b in basis.iter_mut() {
            if (*b >> p) & 1 == 1 {
                *b ^= v;
            }
        }
        basis.push(v);
    }
    basis.sort_by_key(|b| b.trailing_zeros());
    basis
}

/// Reduces `v` against an echelon basis (pivot = lowest bit of each row).
#[inline]
pub fn reduce(basis: &[u128], mut v: u128) -> u128 {
    for &b in basis {
        if (v >> b.trailing_zeros()) & 1 == 1 {
            v ^= b;
        }
    }
    v
}

/// A linear code over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BinaryCode {
    n: usize,
    basis: Vec<u128>,
}

/// `counts[w]` is the number of codewords of weight `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight that occurs, if any.
    pub fn min_nonzero(&self) -> Option<usize> {
        self.counts.iter().skip(1).position(|&c| c > 0).map(|w| w + 1)
    }
}

impl BinaryCode {
    /// Span of `rows` at length `n`.
    pub fn from_rows(n: usize, rows: &[u128]) -> Result<Self> {
        if n == 0 || n > MAX_LEN {
            return Err(CodeError::UnsupportedLength(n));
        }
        let mask = full_mask(n);
        if let Some(r) = rows.iter().find(|&&r| r & !mask != 0) {
            return Err(CodeError::LengthMismatch {
                expected: n,
                found: 128 - r.leading_zeros() as usize,
            });
        }
        Ok(BinaryCode {
            n,
            basis: rref(rows),
        })
    }

    /// Parses rows written as strings of `0`/`1` characters.
    pub fn from_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let n = rows.first().map(|r| r.as_ref().trim().len()).unwrap_or(0);
        let mut vs = Vec::with_capacity(rows.len());
        for r in rows {
            let r = r.as_ref().trim();
            if r.len() != n {
                return Err(CodeError::LengthMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            vs.push(parse_bits(r)?);
        }
        Self::from_rows(n, &vs)
    }

    pub fn zero(n: usize) -> Self {
        BinaryCode {
            n,
            basis: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        BinaryCode {
            n,
            basis: (0..n).map(|i| 1u128 << i).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[u128] {
        &self.basis
    }

    pub fn all_ones(&self) -> u128 {
        full_mask(self.n)
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|b| b.trailing_zeros() as usize)
            .collect()
    }

    pub fn contains(&self, v: u128) -> bool {
        v & !self.all_ones() == 0 && reduce(&self.basis, v) == 0
    }

    pub fn is_subcode_of(&self, other: &BinaryCode) -> bool {
        self.n == other.n && self.basis.iter().all(|&b| other.contains(b))
    }

    /// Coordinates of a codeword with respect to the stored basis.
    pub fn coords(&self, v: u128) -> Option<u64> {
        let mut x = 0u64;
        let mut r = v;
        for (i, &b) in self.basis.iter().enumerate() {
            if (r >> b.trailing_zeros()) & 1 == 1 {
                r ^= b;
                x |= 1 << i;
            }
        }
        (r == 0).then_some(x)
    }

    /// Codeword with the given basis coordinates.
    pub fn encode(&self, x: u64) -> u128 {
        let mut v = 0;
        for (i, &b) in self.basis.iter().enumerate() {
            if (x >> i) & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    pub fn dual(&self) -> BinaryCode {
        let pivots = self.pivots();
        let pivot_mask = pivots.iter().fold(0u128, |m, &p| m | (1u128 << p));
        let mut rows = Vec::with_capacity(self.n - self.dim());
        for f in 0..self.n {
            if (pivot_mask >> f) & 1 == 1 {
                continue;
            }
            let mut v = 1u128 << f;
            for (b, &p) in self.basis.iter().zip(&pivots) {
                if (b >> f) & 1 == 1 {
                    v |= 1u128 << p;
                }
            }
            rows.push(v);
        }
        BinaryCode {
            n: self.n,
            basis: rref(&rows),
        }
    }

    pub fn span_with(&self, v: u128) -> Result<BinaryCode> {
        let mut rows = self.basis.clone();
        rows.push(v);
        BinaryCode::from_rows(self.n, &rows)
    }

    pub fn direct_sum(&self, other: &BinaryCode) -> Result<BinaryCode> {
        let n = self.n + other.n;
        if n > MAX_LEN {
            return Err(CodeError::UnsupportedLength(n));
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().map(|&b| b << self.n));
        BinaryCode::from_rows(n, &rows)
    }

    /// Sum of two codes of the same length.
    pub fn sum(&self, other: &BinaryCode) -> Result<BinaryCode> {
        if self.n != other.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut rows = self.basis.clone();
        rows.extend_from_slice(&other.basis);
        BinaryCode::from_rows(self.n, &rows)
    }

    /// Image under the coordinate map `i -> images[i]`.
    pub fn permuted(&self, images: &[usize]) -> BinaryCode {
        let rows: Vec<u128> = self.basis.iter().map(|&b| permute_bits(b, images)).collect();
        BinaryCode {
            n: self.n,
            basis: rref(&rows),
        }
    }

    /// Visits every codeword in Gray-code order (starting with zero).
    pub fn for_each_codeword<F: FnMut(u128)>(&self, mut f: F) {
        let k = self.dim();
        let mut v = 0u128;
        f(v);
        for i in 1u64..(1u64 << k) {
            v ^= self.basis[i.trailing_zeros() as usize];
            f(v);
        }
    }

    pub fn codewords(&self) -> Result<Vec<u128>> {
        self.check_budget()?;
        let mut out = Vec::with_capacity(1 << self.dim());
        self.for_each_codeword(|v| out.push(v));
        Ok(out)
    }

    fn check_budget(&self) -> Result<()> {
        if self.dim() > ENUM_MAX_DIM {
            Err(CodeError::BudgetExceeded(format!(
                "enumeration of 2^{} codewords",
                self.dim()
            )))
        } else {
            Ok(())
        }
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.check_budget()?;
        let mut counts = vec![0u64; self.n + 1];
        self.for_each_codeword(|v| counts[v.count_ones() as usize] += 1);
        Ok(WeightDistribution { counts })
    }

    pub fn min_weight(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(CodeError::ZeroCode);
        }
        self.check_budget()?;
        let k = self.dim();
        let mut v = 0u128;
        let mut best = u32::MAX;
        for i in 1u64..(1u64 << k) {
            v ^= self.basis[i.trailing_zeros() as usize];
            let w = v.count_ones();
            if w < best {
                best = w;
                if best <= 1 {
                    break;
                }
            }
        }
        Ok(best as usize)
    }

    /// Largest `2^e` (`e <= 3`) dividing every codeword weight.
    pub fn divisibility(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(CodeError::ZeroCode);
        }
        // Weights mod 8 of a span are decided by the basis: even codes need
        // even rows, doubly even need rows ≡ 0 mod 4 pairwise orthogonal,
        // triply even needs the triple-intersection condition as well.
        let b = &self.basis;
        if b.iter().any(|&x| weight(x) % 2 != 0) {
            return Ok(1);
        }
        let pair_even = |d: u32| {
            b.iter().enumerate().all(|(i, &x)| {
                b[i + 1..]
                    .iter()
                    .all(|&y| weight(x & y) % d == 0)
            })
        };
        if b.iter().any(|&x| weight(x) % 4 != 0) || !pair_even(2) {
            return Ok(2);
        }
        let triples_even = || {
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    let xy = b[i] & b[j];
                    for &z in &b[j + 1..] {
                        if weight(xy & z) % 2 != 0 {
                            return false;
                        }
                    }
                }
            }
            true
        };
        if b.iter().any(|&x| weight(x) % 8 != 0) || !pair_even(4) || !triples_even() {
            return Ok(4);
        }
        Ok(8)
    }

    pub fn is_doubly_even(&self) -> bool {
        self.is_zero() || self.divisibility().map(|d| d >= 4).unwrap_or(false)
    }

    pub fn is_triply_even(&self) -> bool {
        self.is_zero() || self.divisibility().map(|d| d >= 8).unwrap_or(false)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.basis
            .iter()
            .all(|&x| self.basis.iter().all(|&y| inner(x, y) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.n && self.is_self_orthogonal()
    }

    /// Minimum weight of the dual code. Small duals are enumerated; larger
    /// ones are first searched for dependent column sets of size at most 6.
    pub fn dual_min_weight(&self) -> Result<usize> {
        let d = self.dual();
        if d.is_zero() {
            return Err(CodeError::ZeroCode);
        }
        if d.dim() <= 20 {
            return d.min_weight();
        }
        // Dual word of weight w exists iff some w columns of the generator
        // matrix sum to zero; search small w directly.
        let cols = self.columns();
        for w in 1..=self.n {
            if exists_zero_sum(&cols, w) {
                return Ok(w);
            }
            if w >= 6 {
                break;
            }
        }
        d.min_weight()
    }

    /// Column `j` of the basis matrix packed as a `u64` (bit `i` = row `i`).
    pub fn columns(&self) -> Vec<u64> {
        (0..self.n)
            .map(|j| {
                self.basis
                    .iter()
                    .enumerate()
                    .fold(0u64, |c, (i, &b)| c | ((((b >> j) & 1) as u64) << i))
            })
            .collect()
    }

    /// Conditions satisfied by residue codes of extremal Type II codes of
    /// length 24: doubly even, contains the all-ones vector, dual minimum
    /// weight at least 4.
    pub fn satisfies_residue_conditions(&self) -> bool {
        self.is_doubly_even()
            && self.contains(self.all_ones())
            && self.dual_min_weight().map(|d| d >= 4).unwrap_or(false)
    }

    /// Minimum weight of the coset `v + C`.
    pub fn coset_min_weight(&self, v: u128) -> Result<(usize, u128)> {
        self.check_budget()?;
        let k = self.dim();
        let mut x = v;
        let mut best = (x.count_ones(), x);
        for i in 1u64..(1u64 << k) {
            x ^= self.basis[i.trailing_zeros() as usize];
            let w = x.count_ones();
            if w < best.0 || (w == best.0 && x < best.1) {
                best = (w, x);
            }
        }
        Ok((best.0 as usize, best.1))
    }

    /// All codewords of the given weight.
    pub fn words_of_weight(&self, w: u32) -> Result<Vec<u128>> {
        self.check_budget()?;
        let mut out = Vec::new();
        self.for_each_codeword(|v| {
            if v.count_ones() == w {
                out.push(v)
            }
        });
        Ok(out)
    }

    /// Subcode spanned by the codewords of weight `w`.
    pub fn weight_subcode(&self, w: u32) -> Result<BinaryCode> {
        let words = self.words_of_weight(w)?;
        BinaryCode::from_rows(self.n, &words)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("binary {} {}\n", self.n, self.dim());
        for &b in &self.basis {
            s.push_str(&bits_to_string(b, self.n));
            s.push('\n');
        }
        s
    }

    /// Parses the `binary <n> <k>` text format.
    pub fn from_text(text: &str) -> Result<BinaryCode> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| CodeError::Parse("empty input".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 || parts[0] != "binary" {
            return Err(CodeError::Parse(format!("bad header `{header}`")));
        }
        let n: usize = parts[1]
            .parse()
            .map_err(|_| CodeError::Parse(format!("bad length `{}`", parts[1])))?;
        let k: usize = parts[2]
            .parse()
            .map_err(|_| CodeError::Parse(format!("bad dimension `{}`", parts[2])))?;
        let mut rows = Vec::with_capacity(k);
        for line in lines {
            if line.len() != n {
                return Err(CodeError::Parse(format!(
                    "row of length {} in a length-{n} code",
                    line.len()
                )));
            }
            rows.push(parse_bits(line)?);
        }
        if rows.len() != k {
            return Err(CodeError::Parse(format!(
                "expected {k} rows, found {}",
                rows.len()
            )));
        }
        BinaryCode::from_rows(n, &rows)
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]{{", self.n, self.dim())?;
        for (i, &b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", bits_to_string(b, self.n))?;
        }
        write!(f, "}}")
    }
}

fn exists_zero_sum(cols: &[u64], w: usize) -> bool {
    fn rec(cols: &[u64], start: usize, left: usize, acc: u64) -> bool {
        if left == 0 {
            return acc == 0;
        }
        (start..cols.len()).any(|j| rec(cols, j + 1, left - 1, acc ^ cols[j]))
    }
    rec(cols, 0, w, 0)
}

/// Moves bit `i` of `v` to bit `images[i]`.
#[inline]
pub fn permute_bits(v: u128, images: &[usize]) -> u128 {
    let mut out = 0u128;
    let mut x = v;
    while x != 0 {
        let i = x.trailing_zeros() as usize;
        out |= 1u128 << images[i];
        x &= x - 1;
    }
    out
}

pub fn bits_to_string(v: u128, n: usize) -> String {
    (0..n)
        .map(|i| if (v >> i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn parse_bits(s: &str) -> Result<u128> {
    if s.len() > MAX_LEN {
        return Err(CodeError::UnsupportedLength(s.len()));
    }
    let mut v = 0u128;
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => v |= 1u128 << i,
            _ => return Err(CodeError::Parse(format!("unexpected character `{c}`"))),
        }
    }
    Ok(v)
}

/// Builds a vector from a 0/1 slice.
pub fn from_bits(bits: &[u8]) -> u128 {
    bits.iter()
        .enumerate()
        .fold(0u128, |v, (i, &b)| v | (((b & 1) as u128) << i))
}
