//! Permutations of coordinates and a small Schreier–Sims implementation.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// A bijection of `{0, …, n-1}`; coordinate `i` is sent to `images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation, returning `None` unless `images` is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self` followed by `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation {
            images: self.images.iter().map(|&j| other.images[j]).collect(),
        }
    }

    /// Moves bit `i` of a packed vector to bit `self(i)`.
    pub fn apply_bits(&self, v: u128) -> u128 {
        crate::gf2core::permute_bits(v, &self.images)
    }

    /// Uniformly random permutation.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        use rand::seq::SliceRandom;
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Orbits of `{0..n}` under the group generated by `gens`, as a
/// representative map (`rep[x]` is the least element of the orbit of `x`).
pub fn orbit_reps(n: usize, gens: &[&Permutation]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

struct Level {
    base: usize,
    orbit: Vec<usize>,
    // trans[x] maps the base point to x
    trans: Vec<Option<Permutation>>,
}

/// Order of the group generated by `gens`, by deterministic Schreier–Sims.
pub fn group_order(n: usize, gens: &[Permutation]) -> BigUint {
    let mut strong: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    let mut base: Vec<usize> = Vec::new();
    loop {
        // every strong generator must move some base point
        for g in &strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                let moved = (0..n).find(|&x| g.apply(x) != x).expect("non-identity");
                base.push(moved);
            }
        }
        let levels = build_levels(n, &base, &strong);
        let mut found = None;
        'outer: for l in (0..levels.len()).rev() {
            let gens_l: Vec<&Permutation> = strong
                .iter()
                .filter(|g| base[..l].iter().all(|&b| g.apply(b) == b))
                .collect();
            for &x in &levels[l].orbit {
                let ux = levels[l].trans[x].as_ref().unwrap();
                for s in &gens_l {
                    let y = s.apply(x);
                    let uy = levels[l].trans[y].as_ref().unwrap();
                    // h = uy^-1 ∘ s ∘ ux fixes the base point of level l
                    let h = ux.then(s).then(&uy.inverse());
                    let r = strip(&levels, l + 1, h);
                    if !r.is_identity() {
                        found = Some(r);
                        break 'outer;
                    }
                }
            }
        }
        match found {
            Some(r) => strong.push(r),
            None => {
                return levels
                    .iter()
                    .fold(BigUint::from(1u32), |acc, lv| acc * BigUint::from(lv.orbit.len()))
            }
        }
    }
}

fn build_levels(n: usize, base: &[usize], strong: &[Permutation]) -> Vec<Level> {
    base.iter()
        .enumerate()
        .map(|(l, &b)| {
            let gens: Vec<&Permutation> = strong
                .iter()
                .filter(|g| base[..l].iter().all(|&c| g.apply(c) == c))
                .collect();
            let mut trans: Vec<Option<Permutation>> = vec![None; n];
            trans[b] = Some(Permutation::identity(n));
            let mut orbit = vec![b];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                let ux = trans[x].clone().unwrap();
                for g in &gens {
                    let y = g.apply(x);
                    if trans[y].is_none() {
                        trans[y] = Some(ux.then(g));
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            Level {
                base: b,
                orbit,
                trans,
            }
        })
        .collect()
}

fn strip(levels: &[Level], from: usize, mut h: Permutation) -> Permutation {
    for lv in &levels[from..] {
        let x = h.apply(lv.base);
        match &lv.trans[x] {
            Some(u) => h = h.then(&u.inverse()),
            None => return h,
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Permutation {
        Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()
    }

    fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut im: Vec<usize> = (0..n).collect();
        im.swap(a, b);
        Permutation::from_images(im).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..8 {
            let g = group_order(n, &[cycle(n), transposition(n, 0, 1)]);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(g, BigUint::from(fact));
        }
    }

    #[test]
    fn cyclic_and_trivial() {
        assert_eq!(group_order(7, &[cycle(7)]), BigUint::from(7u32));
        assert_eq!(group_order(5, &[]), BigUint::from(1u32));
    }

    #[test]
    fn inverse_and_compose() {
        let c = cycle(5);
        assert!(c.then(&c.inverse()).is_identity());
        assert_eq!(c.then(&c).apply(4), 1);
        assert!(Permutation::from_images(vec![0, 0]).is_none());
    }
}
