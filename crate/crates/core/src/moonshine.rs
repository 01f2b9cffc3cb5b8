//! Triply even codes of length 48 built from doubly even codes by the
//! extended doubling `D(C) = <d(C), l(1)>`, and the code-level rules that
//! decide when such a code is a moonshine code.
//!
//! Verdicts come only from three rules: the necessary conditions (triply
//! even, contains 1, dual distance at least 4, dimension at least 7), the
//! doubling rule (`D(B)` is moonshine exactly when `B` is the residue of an
//! extremal Type II code), and weight-8 augmentation (adding `xi` to a
//! moonshine code gives a moonshine code when `xi + D` has minimum weight 8).
//! Anything else stays `Unknown`.

use serde::{Deserialize, Serialize};

use crate::classify::{AugmentationDag, Status};
use crate::equiv::canonical_form;
use crate::error::{CodeError, Result};
use crate::gf2core::{full_mask, permute_bits, BinaryCode};
use crate::perm::Permutation;
use crate::z4core::{MonomialMap, Z4Code};

pub const LENGTH: usize = 48;

/// `(a_1, a_1, a_2, a_2, ...)`.
pub fn map_d(x: u128, n: usize) -> u128 {
    let mut out = 0u128;
    for i in 0..n {
        if (x >> i) & 1 == 1 {
            out |= 3u128 << (2 * i);
        }
    }
    out
}

/// `(a_1, 0, a_2, 0, ...)`.
pub fn map_l(x: u128, n: usize) -> u128 {
    let mut out = 0u128;
    for i in 0..n {
        if (x >> i) & 1 == 1 {
            out |= 1u128 << (2 * i);
        }
    }
    out
}

/// Extended doubling of a code of length at most 64.
pub fn doubling(code: &BinaryCode) -> Result<BinaryCode> {
    let n = code.len();
    if 2 * n > 128 {
        return Err(CodeError::UnsupportedLength(2 * n));
    }
    let mut rows: Vec<u128> = code.basis().iter().map(|&b| map_d(b, n)).collect();
    rows.push(map_l(full_mask(n), n));
    BinaryCode::from_rows(2 * n, &rows)
}

/// The permutation of `2n` coordinates induced by one of `n` coordinates.
pub fn doubled_permutation(p: &Permutation) -> Permutation {
    let images: Vec<usize> = p
        .images()
        .iter()
        .flat_map(|&j| [2 * j, 2 * j + 1])
        .collect();
    Permutation::from_images(images).expect("doubled permutation")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NecessaryCondition {
    TriplyEven,
    ContainsOne,
    DualDistance,
    Dimension,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Justification {
    /// `D(residue)` where `witness` is an extremal Type II code with that
    /// residue.
    DoublingOfRealizable {
        residue: BinaryCode,
        witness: Z4Code,
    },
    /// `<base, xi>` with `xi + base` of minimum weight 8.
    Weight8Augmentation {
        base: BinaryCode,
        base_justification: Box<Justification>,
        xi: u128,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    FailsNecessary(NecessaryCondition),
    /// `B` is not doubly even, lacks 1 or has dual distance below 4, so no
    /// Type II code has residue `B`.
    NotAResidue,
    DoublingOfNonRealizable {
        residue: BinaryCode,
        m: usize,
        classes_checked: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoonshineStatus {
    Moonshine(Justification),
    NotMoonshine(Reason),
    Unknown,
}

impl MoonshineStatus {
    pub fn is_moonshine(&self) -> bool {
        matches!(self, MoonshineStatus::Moonshine(_))
    }

    pub fn is_not_moonshine(&self) -> bool {
        matches!(self, MoonshineStatus::NotMoonshine(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriplyEvenCandidate {
    pub code: BinaryCode,
    pub triply_even: bool,
    pub contains_one: bool,
    pub dual_min_ge4: bool,
    pub status: MoonshineStatus,
}

impl TriplyEvenCandidate {
    pub fn passes_necessary(&self) -> bool {
        self.triply_even && self.contains_one && self.dual_min_ge4 && self.code.dim() >= 7
    }
}

fn dual_distance_at_least4(code: &BinaryCode) -> bool {
    !code.dual().is_zero() && code.dual_min_weight().map(|d| d >= 4).unwrap_or(false)
}

/// Computes the necessary-condition flags. Fails when the length is not 48.
pub fn moonshine_candidate_check(code: &BinaryCode) -> Result<TriplyEvenCandidate> {
    if code.len() != LENGTH {
        return Err(CodeError::LengthMismatch {
            expected: LENGTH,
            found: code.len(),
        });
    }
    let triply_even = code.is_triply_even();
    let contains_one = code.contains(code.all_ones());
    let dual_min_ge4 = dual_distance_at_least4(code);
    let failed = if !triply_even {
        Some(NecessaryCondition::TriplyEven)
    } else if !contains_one {
        Some(NecessaryCondition::ContainsOne)
    } else if !dual_min_ge4 {
        Some(NecessaryCondition::DualDistance)
    } else if code.dim() < 7 {
        Some(NecessaryCondition::Dimension)
    } else {
        None
    };
    Ok(TriplyEvenCandidate {
        code: code.clone(),
        triply_even,
        contains_one,
        dual_min_ge4,
        status: match failed {
            Some(c) => MoonshineStatus::NotMoonshine(Reason::FailsNecessary(c)),
            None => MoonshineStatus::Unknown,
        },
    })
}

/// Status of `D(B)` for a length-24 code `B`, read off the classification.
pub fn doubling_status(b: &BinaryCode, dag: &AugmentationDag) -> Result<MoonshineStatus> {
    if b.len() != 24 {
        return Err(CodeError::LengthMismatch {
            expected: 24,
            found: b.len(),
        });
    }
    let cand = moonshine_candidate_check(&doubling(b)?)?;
    if !cand.passes_necessary() {
        return Ok(cand.status);
    }
    if !b.satisfies_residue_conditions() {
        return Ok(MoonshineStatus::NotMoonshine(Reason::NotAResidue));
    }
    let cert = canonical_form(b)?;
    let Some(node) = dag.nodes.iter().find(|n| n.canonical == cert.canonical) else {
        return Err(CodeError::Internal(
            "code satisfies the residue conditions but is not classified".into(),
        ));
    };
    Ok(match &node.status {
        Status::Realizable { witness, .. } => {
            // move the witness from canonical coordinates back to B's
            let back = cert.witness.inverse();
            let w = witness.apply_monomial(&MonomialMap {
                perm: back,
                signs: 0,
            });
            MoonshineStatus::Moonshine(Justification::DoublingOfRealizable {
                residue: b.clone(),
                witness: w,
            })
        }
        Status::NonRealizable { m, classes_checked } => {
            MoonshineStatus::NotMoonshine(Reason::DoublingOfNonRealizable {
                residue: b.clone(),
                m: *m,
                classes_checked: *classes_checked,
            })
        }
        _ => MoonshineStatus::Unknown,
    })
}

/// Minimum weight of `xi + D`.
pub fn coset_min_weight(d: &BinaryCode, xi: u128) -> Result<usize> {
    Ok(d.coset_min_weight(xi)?.0)
}

/// Status of `<D, xi>` given a moonshine code `D`.
pub fn weight8_augment_status(
    candidate: &TriplyEvenCandidate,
    xi: u128,
) -> Result<TriplyEvenCandidate> {
    let MoonshineStatus::Moonshine(just) = &candidate.status else {
        return Err(CodeError::Precondition("base code is not known to be moonshine".into()));
    };
    let d = &candidate.code;
    if d.contains(xi) {
        return Err(CodeError::Precondition("xi lies in the code".into()));
    }
    let span = d.span_with(xi)?;
    if !span.is_triply_even() {
        return Err(CodeError::Precondition("span with xi is not triply even".into()));
    }
    let mut out = moonshine_candidate_check(&span)?;
    if coset_min_weight(d, xi)? == 8 {
        out.status = MoonshineStatus::Moonshine(Justification::Weight8Augmentation {
            base: d.clone(),
            base_justification: Box::new(just.clone()),
            xi,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeaugmentCandidates {
    pub eta: u128,
    pub subcodes: Vec<BinaryCode>,
    /// At least one of `subcodes` is moonshine; which one is not decided.
    pub note: String,
}

/// All index-2 subcodes `D'` of `D` with `eta` outside `D'`.
pub fn weight8_deaugment_candidates(d: &BinaryCode, eta: u128) -> Result<DeaugmentCandidates> {
    if eta.count_ones() != 8 {
        return Err(CodeError::Precondition(format!(
            "eta has weight {}, not 8",
            eta.count_ones()
        )));
    }
    let Some(c) = d.coords(eta) else {
        return Err(CodeError::Precondition("eta is not in the code".into()));
    };
    let k = d.dim();
    if k > 20 {
        return Err(CodeError::BudgetExceeded(format!("2^{} candidate subcodes", k - 1)));
    }
    let rows = d.basis();
    let mut subcodes = Vec::new();
    for f in 1u64..(1u64 << k) {
        if (f & c).count_ones() % 2 == 0 {
            continue;
        }
        let i0 = f.trailing_zeros() as usize;
        let sub: Vec<u128> = (0..k)
            .filter(|&i| i != i0)
            .map(|i| if (f >> i) & 1 == 1 { rows[i] ^ rows[i0] } else { rows[i] })
            .collect();
        subcodes.push(BinaryCode::from_rows(d.len(), &sub)?);
    }
    Ok(DeaugmentCandidates {
        eta,
        subcodes,
        note: "at least one candidate is a moonshine code".into(),
    })
}

/// A moonshine code written as a minimum-weight-16 moonshine code followed
/// by weight-8 augmentations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight16Chain {
    /// Residue whose doubling is the root.
    pub root_residue: BinaryCode,
    pub root_witness: Z4Code,
    pub root: BinaryCode,
    pub steps: Vec<u128>,
}

impl Weight16Chain {
    /// Replays the chain: root has minimum weight 16, every step is triply
    /// even with coset minimum weight 8, and the end is `target`.
    pub fn replay(&self, target: &BinaryCode) -> Result<()> {
        if doubling(&self.root_residue)? != self.root {
            return Err(CodeError::Internal("root is not the doubling of its residue".into()));
        }
        if self.root_witness.residue() != self.root_residue || !self.root_witness.is_extremal() {
            return Err(CodeError::Internal("root witness is not extremal with that residue".into()));
        }
        if self.root.min_weight()? != 16 {
            return Err(CodeError::Internal("root does not have minimum weight 16".into()));
        }
        let mut cur = self.root.clone();
        for &xi in &self.steps {
            if cur.contains(xi) || coset_min_weight(&cur, xi)? != 8 {
                return Err(CodeError::Internal("step is not a weight-8 augmentation".into()));
            }
            cur = cur.span_with(xi)?;
            if !cur.is_triply_even() {
                return Err(CodeError::Internal("step is not triply even".into()));
            }
        }
        if &cur != target {
            return Err(CodeError::Internal("chain does not end at the code".into()));
        }
        Ok(())
    }
}

/// Writes a realizable `B` as `<B0, a_1, ..., a_t>` with `B0` realizable of
/// minimum weight 8 and weight-4 vectors `a_i`, following augmentation edges
/// down the classification. Vectors are in `B`'s coordinates.
fn descend_to_weight8(b: &BinaryCode, dag: &AugmentationDag) -> Result<(BinaryCode, Z4Code, Vec<u128>)> {
    let cert = canonical_form(b)?;
    let mut idx = dag
        .nodes
        .iter()
        .position(|n| n.canonical == cert.canonical)
        .ok_or_else(|| CodeError::Precondition("code is not classified".into()))?;
    // maps current canonical coordinates to B's coordinates
    let mut back = cert.witness.inverse();
    let mut vectors = Vec::new();
    while dag.nodes[idx].min_weight != 8 {
        let e = dag
            .augmentation_edges()
            .find(|e| e.sup == idx && dag.nodes[e.sub].status.is_realizable())
            .ok_or_else(|| CodeError::Internal("no realizable class below".into()))?;
        vectors.push(permute_bits(e.a.expect("augmentation edge"), back.images()));
        back = e.to_sub.inverse().then(&back);
        idx = e.sub;
    }
    vectors.reverse();
    let node = &dag.nodes[idx];
    let root = node.canonical.permuted(back.images());
    let witness = node
        .status
        .witness()
        .ok_or_else(|| CodeError::Internal("root class has no witness".into()))?
        .apply_monomial(&MonomialMap { perm: back, signs: 0 });
    Ok((root, witness, vectors))
}

/// Decomposes a moonshine verdict into a minimum-weight-16 root and
/// weight-8 augmentations.
pub fn weight16_chain(just: &Justification, dag: &AugmentationDag) -> Result<Weight16Chain> {
    match just {
        Justification::DoublingOfRealizable { residue, .. } => {
            let (root_residue, root_witness, vectors) = descend_to_weight8(residue, dag)?;
            let n = residue.len();
            Ok(Weight16Chain {
                root: doubling(&root_residue)?,
                root_residue,
                root_witness,
                steps: vectors.into_iter().map(|a| map_d(a, n)).collect(),
            })
        }
        Justification::Weight8Augmentation {
            base_justification,
            xi,
            ..
        } => {
            let mut chain = weight16_chain(base_justification, dag)?;
            chain.steps.push(*xi);
            Ok(chain)
        }
    }
}

/// Extended Hamming code `[8,4,4]`.
pub fn e8() -> BinaryCode {
    BinaryCode::from_strings(&["11110000", "00111100", "00001111", "01010101"])
        .expect("valid rows")
}

/// `d16^+`: the tetrads on consecutive pairs plus the alternating glue word.
pub fn d16_plus() -> BinaryCode {
    let mut rows: Vec<u128> = (0..7).map(|i| 0b1111u128 << (2 * i)).collect();
    rows.push((0..8).fold(0u128, |acc, i| acc | (1u128 << (2 * i))));
    BinaryCode::from_rows(16, &rows).expect("valid rows")
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecomposableIdentity {
    pub name: String,
    pub start: BinaryCode,
    pub xi: u128,
    pub target: BinaryCode,
    pub holds: bool,
    pub coset_min_weight: usize,
    pub target_dim: usize,
}

/// The three identities expressing direct sums of doublings as weight-8
/// augmentations of doublings of length-24 self-dual codes.
pub fn decomposable_identities() -> Result<Vec<DecomposableIdentity>> {
    let e = e8();
    let e2 = e.direct_sum(&e)?;
    let e3 = e2.direct_sum(&e)?;
    let d16 = d16_plus();
    let tail = map_l(0xff, 8) << 32;
    let de = doubling(&e)?;
    let de2_de = doubling(&e2)?.direct_sum(&de)?;
    let de_de_de = de.direct_sum(&de)?.direct_sum(&de)?;
    let dd16_de = doubling(&d16)?.direct_sum(&de)?;
    let cases = [
        ("D(e8+e8)+D(e8)", doubling(&e3)?, tail, de2_de.clone()),
        ("D(e8)+D(e8)+D(e8)", de2_de, map_l(0xff, 8), de_de_de),
        ("D(d16+)+D(e8)", doubling(&d16.direct_sum(&e)?)?, tail, dd16_de),
    ];
    cases
        .into_iter()
        .map(|(name, start, xi, target)| {
            let span = start.span_with(xi)?;
            Ok(DecomposableIdentity {
                name: name.to_string(),
                holds: span == target && span.is_triply_even() && !start.contains(xi),
                coset_min_weight: coset_min_weight(&start, xi)?,
                target_dim: target.dim(),
                start,
                xi,
                target,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_on_small_vector() {
        assert_eq!(map_d(0b101, 3), 0b110011);
        assert_eq!(map_l(0b101, 3), 0b010001);
    }

    #[test]
    fn doubling_of_e8() {
        let d = doubling(&e8()).unwrap();
        assert_eq!((d.len(), d.dim()), (16, 5));
        assert!(d.is_triply_even());
    }

    #[test]
    fn d16_plus_is_self_dual() {
        let d = d16_plus();
        assert!(d.is_self_dual() && d.is_doubly_even());
        assert_eq!(d.min_weight().unwrap(), 4);
    }

    #[test]
    fn deaugment_candidate_count() {
        let d = doubling(&e8().direct_sum(&e8()).unwrap().direct_sum(&e8()).unwrap()).unwrap();
        let eta = map_d(0x0f, 24);
        let c = weight8_deaugment_candidates(&d, eta).unwrap();
        assert_eq!(c.subcodes.len(), 1 << (d.dim() - 1));
        for s in &c.subcodes {
            assert!(!s.contains(eta));
            assert_eq!(&s.span_with(eta).unwrap(), &d);
        }
        assert!(weight8_deaugment_candidates(&d, d.all_ones()).is_err());
    }
}
