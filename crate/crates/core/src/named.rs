//! Fixed constructions of the reference binary codes.
//!
//! The doubly even self-dual codes of length 24 other than the Golay code are
//! assembled from their weight-4 components (`d_{2m}`, `e_7`, `e_8`) laid out
//! on consecutive coordinate blocks, then glued: glue vectors are drawn from
//! the product of the component glue groups and added depth-first in a fixed
//! order, accepting a vector only when it keeps the code doubly even and
//! creates no new weight-4 word. The result is checked against its label by
//! [`weight4_label`].

use crate::error::{CodeError, Result};
use crate::gf2core::{full_mask, inner, weight, BinaryCode};

/// Labels accepted by [`named_code`].
pub const LABELS: &[&str] = &[
    "g24",
    "d12^2",
    "d10e7^2",
    "d8^3",
    "d6^4",
    "d24",
    "d4^6",
    "e8^3",
    "d16e8",
    "e6_parity",
    "e7",
    "e8",
    "d16plus",
    "M12_bordered",
    "C7_1",
    "C7_2",
];

/// The nine doubly even self-dual codes of length 24.
pub const SELF_DUAL_24: &[&str] = &[
    "g24", "d12^2", "d10e7^2", "d8^3", "d6^4", "d24", "d4^6", "e8^3", "d16e8",
];

#[derive(Clone, Copy, Debug)]
enum Component {
    D(usize),
    E7,
    E8,
}

impl Component {
    fn len(self) -> usize {
        match self {
            Component::D(m) => m,
            Component::E7 => 7,
            Component::E8 => 8,
        }
    }

    fn rows(self) -> Vec<u128> {
        match self {
            Component::D(m) => (0..m / 2 - 1).map(|i| 0b1111u128 << (2 * i)).collect(),
            Component::E7 => simplex7(),
            Component::E8 => {
                let mut r = simplex7();
                r.push(0xff);
                r
            }
        }
    }

    /// Coset representatives of the component's glue group.
    fn glue(self) -> Vec<u128> {
        match self {
            Component::D(m) => {
                let odd = (0..m / 2).fold(0u128, |v, i| v | (1u128 << (2 * i + 1)));
                vec![0, 0b11, odd, odd ^ 0b11]
            }
            Component::E7 => vec![0, 0x7f],
            Component::E8 => vec![0],
        }
    }
}

fn simplex7() -> Vec<u128> {
    (0..3)
        .map(|b| {
            (1..8usize)
                .filter(|j| (j >> b) & 1 == 1)
                .fold(0u128, |v, j| v | (1u128 << (j - 1)))
        })
        .collect()
}

fn components(label: &str) -> Option<Vec<Component>> {
    use Component::*;
    Some(match label {
        "d12^2" => vec![D(12), D(12)],
        "d10e7^2" => vec![D(10), E7, E7],
        "d8^3" => vec![D(8), D(8), D(8)],
        "d6^4" => vec![D(6); 4],
        "d24" => vec![D(24)],
        "d4^6" => vec![D(4); 6],
        "e8^3" => vec![E8, E8, E8],
        "d16e8" => vec![D(16), E8],
        _ => return None,
    })
}

fn glued_self_dual(comps: &[Component]) -> Result<BinaryCode> {
    let n: usize = comps.iter().map(|c| c.len()).sum();
    let mut rows = Vec::new();
    let mut offset = 0;
    let mut glue_sets = Vec::new();
    for c in comps {
        rows.extend(c.rows().into_iter().map(|r| r << offset));
        glue_sets.push(c.glue().into_iter().map(|g| g << offset).collect::<Vec<_>>());
        offset += c.len();
    }
    let base = BinaryCode::from_rows(n, &rows)?;
    let mut candidates = vec![0u128];
    for set in &glue_sets {
        candidates = candidates
            .iter()
            .flat_map(|&a| set.iter().map(move |&g| a | g))
            .collect();
    }
    candidates.retain(|&v| v != 0 && weight(v) % 4 == 0);
    extend_glue(&base, &candidates, 0).ok_or_else(|| {
        CodeError::Internal("no self-dual gluing of the components exists".into())
    })
}

fn extend_glue(code: &BinaryCode, candidates: &[u128], start: usize) -> Option<BinaryCode> {
    if code.is_self_dual() {
        return Some(code.clone());
    }
    for (i, &v) in candidates.iter().enumerate().skip(start) {
        if code.contains(v) || code.basis().iter().any(|&b| inner(b, v) != 0) {
            continue;
        }
        let (w, _) = code.coset_min_weight(v).ok()?;
        if w < 8 {
            continue;
        }
        let next = code.span_with(v).ok()?;
        if let Some(done) = extend_glue(&next, candidates, i + 1) {
            return Some(done);
        }
    }
    None
}

/// Extended Golay code from the cyclic generator `x^11+x^10+x^6+x^5+x^4+x^2+1`.
fn golay24() -> BinaryCode {
    let g: u128 = 0b1100_0111_0101;
    let rows: Vec<u128> = (0..12)
        .map(|i| {
            let r = g << i;
            let parity = (weight(r) & 1) as u128;
            r | (parity << 23)
        })
        .collect();
    BinaryCode::from_rows(24, &rows).expect("valid rows")
}

fn parity_rows(n: usize) -> Vec<u128> {
    (0..n - 1).map(|i| 0b11u128 << i).collect()
}

/// Rows of the 6x12 bordered double circulant matrix.
pub const M12_ROWS: [&str; 6] = [
    "100000011111",
    "010000101001",
    "001000110100",
    "000100101010",
    "000010100101",
    "000001110010",
];

/// Returns the code with the given label.
pub fn named_code(label: &str) -> Result<BinaryCode> {
    if let Some(comps) = components(label) {
        return glued_self_dual(&comps);
    }
    match label {
        "g24" => Ok(golay24()),
        "e6_parity" => BinaryCode::from_rows(6, &parity_rows(6)),
        "e7" => BinaryCode::from_rows(7, &simplex7()),
        "e8" => BinaryCode::from_rows(8, &Component::E8.rows()),
        "d16plus" => {
            let mut rows = Component::D(16).rows();
            rows.push(Component::D(16).glue()[2]);
            BinaryCode::from_rows(16, &rows)
        }
        "M12_bordered" => BinaryCode::from_strings(&M12_ROWS),
        "C7_1" => {
            let six = full_mask(6);
            let mut rows: Vec<u128> = parity_rows(6)
                .into_iter()
                .map(|x| x | (x << 6) | (x << 12) | (x << 18))
                .collect();
            rows.push(six | (six << 6));
            rows.push(six | (six << 12));
            BinaryCode::from_rows(24, &rows)
        }
        "C7_2" => {
            let m12 = BinaryCode::from_strings(&M12_ROWS)?;
            let mut rows: Vec<u128> = vec![full_mask(12)];
            // M12 rows are independent, so its echelon basis spans the same rows.
            rows.extend(m12.basis().iter().map(|&r| r | (r << 12)));
            BinaryCode::from_rows(24, &rows)
        }
        _ => Err(CodeError::UnknownLabel(label.to_string())),
    }
}

/// Root-system style label of the subcode spanned by weight-4 codewords,
/// e.g. `d10e7^2`; a code without weight-4 words yields an empty string.
pub fn weight4_label(code: &BinaryCode) -> Result<String> {
    let words = code.words_of_weight(4)?;
    let n = code.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for &w in &words {
        let first = w.trailing_zeros() as usize;
        let mut rest = w & (w - 1);
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            let (a, b) = (find(&mut parent, first), find(&mut parent, j));
            parent[a] = b;
            rest &= rest - 1;
        }
    }
    let mut comps: Vec<(char, usize)> = Vec::new();
    let mut seen = 0u128;
    for &w in &words {
        let root = find(&mut parent, w.trailing_zeros() as usize);
        if (seen >> root) & 1 == 1 {
            continue;
        }
        seen |= 1u128 << root;
        let support: u128 = (0..n)
            .filter(|&j| find(&mut parent, j) == root)
            .fold(0u128, |m, j| m | (1u128 << j));
        let inside: Vec<u128> = words.iter().copied().filter(|&x| x & !support == 0).collect();
        let len = weight(support) as usize;
        let dim = BinaryCode::from_rows(n, &inside)?.dim();
        let kind = match (len, dim) {
            (7, 3) => ('e', 7),
            (8, 4) => ('e', 8),
            (l, d) if l % 2 == 0 && d == l / 2 - 1 => ('d', l),
            (l, d) => {
                return Err(CodeError::Internal(format!(
                    "unrecognised weight-4 component of length {l} and dimension {d}"
                )))
            }
        };
        comps.push(kind);
    }
    comps.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut label = String::new();
    let mut i = 0;
    while i < comps.len() {
        let mut j = i;
        while j < comps.len() && comps[j] == comps[i] {
            j += 1;
        }
        label.push(comps[i].0);
        label.push_str(&comps[i].1.to_string());
        if j - i > 1 {
            label.push('^');
            label.push_str(&(j - i).to_string());
        }
        i = j;
    }
    Ok(label)
}
