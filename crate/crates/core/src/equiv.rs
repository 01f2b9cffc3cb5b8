//! Canonical forms and automorphism groups of binary codes under coordinate
//! permutations.
//!
//! The search is individualization–refinement over ordered partitions of
//! the coordinates. Refinement splits cells by how columns meet a fixed,
//! permutation-invariant family of codewords, each word first labelled by
//! its weight and its intersection sizes with every current cell. A leaf
//! (discrete partition) orders the coordinates; its certificate is the
//! echelon basis of the relabelled code, and the canonical form is the least
//! certificate over all leaves. Leaves with equal certificates give
//! automorphisms, which prune the search: only one child per orbit of the
//! pointwise stabiliser of the current path is explored, and after an
//! automorphism is found the search backs up to where the two leaves' paths
//! diverge.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{CodeError, Result};
use crate::gf2core::{permute_bits, rref, BinaryCode};
use crate::perm::{orbit_reps, Permutation};

/// Default cap on search-tree nodes per canonical-form call.
pub const DEFAULT_NODE_CAP: usize = 2_000_000;

/// Refinement uses every nonzero word when the smaller of the code and its
/// dual has at most this dimension.
const ALL_WORDS_DIM: usize = 13;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalCertificate {
    pub canonical: BinaryCode,
    /// Maps the input code onto `canonical`.
    pub witness: Permutation,
    pub aut_generators: Vec<Permutation>,
    pub aut_order: BigUint,
    pub nodes: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct CanonOptions {
    pub node_cap: usize,
}

impl Default for CanonOptions {
    fn default() -> Self {
        CanonOptions {
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

pub fn canonical_form(code: &BinaryCode) -> Result<CanonicalCertificate> {
    canonical_form_with(code, CanonOptions::default())
}

pub fn canonical_form_with(code: &BinaryCode, opts: CanonOptions) -> Result<CanonicalCertificate> {
    let n = code.len();
    if n > 48 {
        return Err(CodeError::UnsupportedLength(n));
    }
    let words = refinement_words(code)?;
    let mut s = Search {
        n,
        code,
        words,
        first: None,
        best: None,
        gens: Vec::new(),
        first_path: Vec::new(),
        nodes: 0,
        cap: opts.node_cap,
    };
    let root = s.refine(vec![(0..n).collect()]);
    let mut path = Vec::new();
    s.search(root, &mut path)?;
    let (best_cert, best_perm) = s.best.take().expect("at least one leaf");
    let aut_order = s.group_order();
    Ok(CanonicalCertificate {
        canonical: BinaryCode::from_rows(n, &best_cert)?,
        witness: Permutation::from_images(best_perm).expect("leaf is a bijection"),
        aut_generators: s.gens,
        aut_order,
        nodes: s.nodes,
    })
}

/// A permutation mapping `a` onto `b`, if the codes are equivalent.
pub fn are_equivalent(a: &BinaryCode, b: &BinaryCode) -> Result<Option<Permutation>> {
    if a.len() != b.len() {
        return Err(CodeError::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    if a.dim() != b.dim() {
        return Ok(None);
    }
    let ca = canonical_form(a)?;
    let cb = canonical_form(b)?;
    if ca.canonical != cb.canonical {
        return Ok(None);
    }
    Ok(Some(ca.witness.then(&cb.witness.inverse())))
}

/// The words driving refinement. The choice depends only on the
/// equivalence class of the code.
fn refinement_words(code: &BinaryCode) -> Result<Vec<u128>> {
    let dual = code.dual();
    let src = if dual.dim() < code.dim() { &dual } else { code };
    if src.dim() <= ALL_WORDS_DIM {
        let mut w = src.codewords()?;
        w.retain(|&x| x != 0);
        return Ok(w);
    }
    let wd = src.weight_distribution()?;
    let mut classes = wd
        .counts
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &c)| c > 0)
        .map(|(w, _)| w as u32);
    let lo = classes.next();
    let hi = classes.next();
    let mut out = Vec::new();
    src.for_each_codeword(|x| {
        let w = x.count_ones();
        if Some(w) == lo || Some(w) == hi {
            out.push(x);
        }
    });
    Ok(out)
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    n: usize,
    code: &'a BinaryCode,
    words: Vec<u128>,
    first: Option<(Vec<u128>, Vec<usize>)>,
    best: Option<(Vec<u128>, Vec<usize>)>,
    gens: Vec<Permutation>,
    first_path: Vec<usize>,
    nodes: usize,
    cap: usize,
}

#[inline]
fn mix(mut x: u64) -> u64 {
    x ^= x >> 33;
    x = x.wrapping_mul(0xff51afd7ed558ccd);
    x ^= x >> 33;
    x = x.wrapping_mul(0xc4ceb9fe1a85ec53);
    x ^ (x >> 33)
}

impl Search<'_> {
    fn refine(&self, mut cells: Cells) -> Cells {
        let n = self.n;
        let mut colinv = vec![0u64; n];
        loop {
            let masks: Vec<u128> = cells
                .iter()
                .map(|c| c.iter().fold(0u128, |m, &j| m | (1u128 << j)))
                .collect();
            colinv.iter_mut().for_each(|x| *x = 0);
            for &w in &self.words {
                let mut h = mix(w.count_ones() as u64);
                for &m in &masks {
                    h = mix(h ^ ((w & m).count_ones() as u64).wrapping_add(0x9e37));
                }
                let mut x = w;
                while x != 0 {
                    let j = x.trailing_zeros() as usize;
                    colinv[j] = colinv[j].wrapping_add(h);
                    x &= x - 1;
                }
            }
            let mut next: Cells = Vec::with_capacity(n);
            for c in &cells {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut sorted = c.clone();
                sorted.sort_by_key(|&j| (colinv[j], j));
                let mut start = 0;
                for i in 1..=sorted.len() {
                    if i == sorted.len() || colinv[sorted[i]] != colinv[sorted[start]] {
                        let mut part = sorted[start..i].to_vec();
                        part.sort_unstable();
                        next.push(part);
                        start = i;
                    }
                }
            }
            let split = next.len() != cells.len();
            cells = next;
            if !split {
                return cells;
            }
        }
    }

    fn search(&mut self, cells: Cells, path: &mut Vec<usize>) -> Result<Option<usize>> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(CodeError::BudgetExceeded(format!(
                "canonical form search exceeded {} nodes",
                self.cap
            )));
        }
        let target = match cells.iter().position(|c| c.len() > 1) {
            None => return Ok(self.leaf(&cells, path)),
            Some(t) => t,
        };
        if self.first.is_none() {
            self.first_path.push(cells[target][0]);
        }
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() {
                let stab: Vec<&Permutation> = self
                    .gens
                    .iter()
                    .filter(|g| path.iter().all(|&p| g.apply(p) == p))
                    .collect();
                let reps = orbit_reps(self.n, &stab);
                if explored.iter().any(|&u| reps[u] == reps[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&x| x != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            let child = self.refine(child);
            path.push(v);
            let jump = self.search(child, path)?;
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Ok(Some(level));
                }
            }
        }
        Ok(None)
    }

    /// Processes a leaf; returns the depth to back up to when an
    /// automorphism was found.
    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let mut images = vec![0usize; self.n];
        for (pos, c) in cells.iter().enumerate() {
            images[c[0]] = pos;
        }
        let rows: Vec<u128> = self
            .code
            .basis()
            .iter()
            .map(|&b| permute_bits(b, &images))
            .collect();
        let cert = rref(&rows);
        let Some((first_cert, first_perm)) = &self.first else {
            self.first = Some((cert.clone(), images.clone()));
            self.best = Some((cert, images));
            return None;
        };
        if cert == *first_cert {
            let aut = automorphism(first_perm, &images);
            self.push_gen(aut);
            return Some(common_prefix(path, &self.first_path));
        }
        let (best_cert, best_perm) = self.best.as_ref().unwrap();
        match cert.cmp(best_cert) {
            std::cmp::Ordering::Equal => {
                let aut = automorphism(best_perm, &images);
                self.push_gen(aut);
                // the best leaf's path is not tracked; back up one level only
                None
            }
            std::cmp::Ordering::Less => {
                self.best = Some((cert, images));
                None
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn push_gen(&mut self, g: Permutation) {
        if !g.is_identity() && !self.gens.contains(&g) {
            self.gens.push(g);
        }
    }

    /// Product over the first path of the orbit length of each individualized
    /// point under the generators fixing the earlier points.
    fn group_order(&self) -> BigUint {
        let mut order = BigUint::from(1u32);
        for d in 0..self.first_path.len() {
            let fixed = &self.first_path[..d];
            let stab: Vec<&Permutation> = self
                .gens
                .iter()
                .filter(|g| fixed.iter().all(|&p| g.apply(p) == p))
                .collect();
            let reps = orbit_reps(self.n, &stab);
            let v = self.first_path[d];
            let size = reps.iter().filter(|&&r| r == reps[v]).count();
            order *= BigUint::from(size);
        }
        order
    }
}

/// `x -> a^{-1}(b(x))`, an automorphism when the leaves `a` and `b` carry the
/// same certificate.
fn automorphism(a: &[usize], b: &[usize]) -> Permutation {
    let mut inv = vec![0usize; a.len()];
    for (i, &p) in a.iter().enumerate() {
        inv[p] = i;
    }
    Permutation::from_images(b.iter().map(|&p| inv[p]).collect()).expect("bijection")
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named_code;
    use crate::perm::group_order;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn golay_automorphism_group_is_m24() {
        let g = named_code("g24").unwrap();
        let cert = canonical_form(&g).unwrap();
        assert_eq!(cert.aut_order, BigUint::from(244_823_040u64));
        assert_eq!(group_order(24, &cert.aut_generators), cert.aut_order);
        for a in &cert.aut_generators {
            assert_eq!(g.permuted(a.images()), g);
        }
        assert_eq!(g.permuted(cert.witness.images()), cert.canonical);
    }

    #[test]
    fn repetition_code_has_full_symmetric_group() {
        let r = BinaryCode::from_rows(24, &[(1u128 << 24) - 1]).unwrap();
        let cert = canonical_form(&r).unwrap();
        let fact: BigUint = (1..=24u32).map(BigUint::from).product();
        assert_eq!(cert.aut_order, fact);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let c = named_code("C7_2").unwrap();
        let base = canonical_form(&c).unwrap();
        for _ in 0..10 {
            let p = Permutation::random(24, &mut rng);
            let img = c.permuted(p.images());
            assert_eq!(canonical_form(&img).unwrap().canonical, base.canonical);
            let map = are_equivalent(&c, &img).unwrap().unwrap();
            assert_eq!(c.permuted(map.images()), img);
        }
    }

    #[test]
    fn inequivalent_pairs() {
        let g = named_code("g24").unwrap();
        let d = named_code("d24").unwrap();
        assert!(are_equivalent(&g, &d).unwrap().is_none());
        let a = named_code("C7_1").unwrap();
        let b = named_code("C7_2").unwrap();
        assert!(are_equivalent(&a, &b).unwrap().is_none());
    }

    #[test]
    fn node_cap_is_reported() {
        let r = BinaryCode::from_rows(24, &[(1u128 << 24) - 1]).unwrap();
        let err = canonical_form_with(&r, CanonOptions { node_cap: 3 }).unwrap_err();
        assert!(matches!(err, CodeError::BudgetExceeded(_)));
    }
}
