//! Classification of the length-24 codes that can be residue codes of
//! Type II Z4-codes (doubly even, containing 1, dual distance at least 4),
//! together with the weight-4 augmentation graph between them and a
//! realizability status for every class.
//!
//! Every such code lies in a doubly even self-dual code, so the classes are
//! reached from the nine self-dual codes by repeatedly passing to
//! hyperplanes that contain 1 and keep the dual distance. Hyperplanes are
//! kernels of functionals, taken up to the action of `Aut(C)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::equiv::{canonical_form, CanonicalCertificate};
use crate::error::{CodeError, Result};
use crate::gf2core::{weight, BinaryCode};
use crate::lifts::{decide_realizability, DecideOptions, LiftSpace, RealizabilityVerdict};
use crate::named::{named_code, SELF_DUAL_24};
use crate::neighbor::{augment_extremal, deaugment_extremal, AugmentationWitness};
use crate::perm::Permutation;
use crate::registry::{fig1_code, table_code, NONREALIZABLE_CODES, REALIZABLE_CODES};
use crate::z4core::{MonomialMap, Z4Code};

pub const LENGTH: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    /// The code generated by the transcribed 18x24 matrix.
    ReferenceMatrix,
    /// Weight-4 augmentation of the witness of a smaller class.
    Augmentation {
        sub: usize,
        witness: AugmentationWitness,
    },
    /// Found in the lift space of the class.
    LiftSearch {
        m: usize,
        classes: Option<u64>,
        point: u64,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Pending,
    Realizable {
        witness: Z4Code,
        provenance: Provenance,
    },
    NonRealizable {
        m: usize,
        classes_checked: u64,
    },
    Unknown {
        m: usize,
        budget: u64,
        seed: u64,
    },
}

impl Status {
    pub fn is_realizable(&self) -> bool {
        matches!(self, Status::Realizable { .. })
    }

    pub fn is_nonrealizable(&self) -> bool {
        matches!(self, Status::NonRealizable { .. })
    }

    pub fn witness(&self) -> Option<&Z4Code> {
        match self {
            Status::Realizable { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeRecord {
    pub canonical: BinaryCode,
    pub dim: usize,
    pub min_weight: usize,
    pub dual_min_weight: usize,
    pub aut_order: BigUint,
    pub aut_generators: Vec<Permutation>,
    pub label: Option<String>,
    pub status: Status,
}

/// `super = span(sub', a)` where `sub'` is a hyperplane of `super`'s
/// canonical code equivalent to `sub`; `to_sub` maps `sub'` onto `sub`'s
/// canonical code.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub sub: usize,
    pub sup: usize,
    /// Functional on the echelon basis of the super code whose kernel is `sub'`.
    pub functional: u32,
    pub to_sub: Permutation,
    /// A weight-4 word of `super` outside `sub'`, if one exists.
    pub a: Option<u128>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct AugmentationDag {
    pub nodes: Vec<CodeRecord>,
    /// All hyperplane relations found during the descent.
    pub edges: Vec<Edge>,
}

impl AugmentationDag {
    pub fn counts_by_dim(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for n in &self.nodes {
            *m.entry(n.dim).or_insert(0) += 1;
        }
        m
    }

    /// Weight-4 augmentation edges only.
    pub fn augmentation_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.a.is_some())
    }

    pub fn find(&self, code: &BinaryCode) -> Result<Option<usize>> {
        let cert = canonical_form(code)?;
        Ok(self.nodes.iter().position(|n| n.canonical == cert.canonical))
    }

    /// Rows `(k, total, R8, R4, N8, N4)` for k = 12 down to 6.
    pub fn table(&self) -> Vec<(usize, usize, usize, usize, usize, usize)> {
        (6..=12)
            .rev()
            .map(|k| {
                let at: Vec<&CodeRecord> = self.nodes.iter().filter(|n| n.dim == k).collect();
                let count = |real: bool, d: usize| {
                    at.iter()
                        .filter(|n| {
                            n.min_weight == d
                                && if real {
                                    n.status.is_realizable()
                                } else {
                                    n.status.is_nonrealizable()
                                }
                        })
                        .count()
                };
                (k, at.len(), count(true, 8), count(true, 4), count(false, 8), count(false, 4))
            })
            .collect()
    }
}

/// Syndromes `(<e, g_i>)_i` of all vectors of weight at most 3, as a bitmap.
fn light_syndromes(code: &BinaryCode) -> Vec<bool> {
    let k = code.dim();
    let n = code.len();
    let cols: Vec<u32> = code.columns().into_iter().map(|c| c as u32).collect();
    let mut hit = vec![false; 1 << k];
    for i in 0..n {
        hit[cols[i] as usize] = true;
        for j in i + 1..n {
            hit[(cols[i] ^ cols[j]) as usize] = true;
            for l in j + 1..n {
                hit[(cols[i] ^ cols[j] ^ cols[l]) as usize] = true;
            }
        }
    }
    hit
}

/// Echelon basis of the kernel of functional `f`.
fn hyperplane(code: &BinaryCode, f: u32) -> Result<BinaryCode> {
    let rows = code.basis();
    let i0 = f.trailing_zeros() as usize;
    let sub: Vec<u128> = rows
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != i0)
        .map(|(i, &g)| if (f >> i) & 1 == 1 { g ^ rows[i0] } else { g })
        .collect();
    BinaryCode::from_rows(code.len(), &sub)
}

/// Representatives of the `Aut(C)`-orbits of functionals vanishing on 1
/// whose kernels keep dual distance at least 4.
fn functional_orbit_reps(code: &BinaryCode, gens: &[Permutation]) -> Vec<u32> {
    let k = code.dim();
    let size = 1usize << k;
    let ones = (1u32 << k) - 1;
    let all_ones_coords = code.coords(code.all_ones()).unwrap_or(0) as u32;
    debug_assert_eq!(all_ones_coords, ones);
    // matrix of each generator on the echelon basis
    let mats: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            code.basis()
                .iter()
                .map(|&b| {
                    code.coords(crate::gf2core::permute_bits(b, g.images()))
                        .expect("generator preserves the code") as u32
                })
                .collect()
        })
        .collect();
    let mut parent: Vec<u32> = (0..size as u32).collect();
    fn find(p: &mut [u32], x: u32) -> u32 {
        let mut r = x;
        while p[r as usize] != r {
            r = p[r as usize];
        }
        let mut y = x;
        while p[y as usize] != r {
            let next = p[y as usize];
            p[y as usize] = r;
            y = next;
        }
        r
    }
    for m in &mats {
        for f in 0..size as u32 {
            let img = m
                .iter()
                .enumerate()
                .fold(0u32, |acc, (i, &row)| acc | (((f & row).count_ones() & 1) << i));
            let (a, b) = (find(&mut parent, f), find(&mut parent, img));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    let light = light_syndromes(code);
    (1..size as u32)
        .filter(|&f| find(&mut parent, f) == f)
        .filter(|&f| (f & all_ones_coords).count_ones() % 2 == 0 && !light[f as usize])
        .collect()
}

/// `w a w^-1`: an automorphism of the input code moved to the canonical one.
fn conjugate(a: &Permutation, w: &Permutation) -> Permutation {
    let (wi, ai) = (w.images(), a.images());
    let mut images = vec![0; wi.len()];
    for i in 0..wi.len() {
        images[wi[i]] = wi[ai[i]];
    }
    Permutation::from_images(images).expect("conjugate of a permutation")
}

fn record_from(cert: &CanonicalCertificate) -> Result<CodeRecord> {
    let c = &cert.canonical;
    Ok(CodeRecord {
        canonical: c.clone(),
        dim: c.dim(),
        min_weight: c.min_weight()?,
        dual_min_weight: c.dual_min_weight()?,
        aut_order: cert.aut_order.clone(),
        aut_generators: cert
            .aut_generators
            .iter()
            .map(|a| conjugate(a, &cert.witness))
            .collect(),
        label: None,
        status: Status::Pending,
    })
}

/// All inequivalent codes satisfying the residue conditions at length 24,
/// by descent from the nine doubly even self-dual codes.
pub fn enumerate_condition_codes() -> Result<AugmentationDag> {
    enumerate_from(SELF_DUAL_24)
}

/// Descent from the named self-dual starting codes.
pub fn enumerate_from(labels: &[&str]) -> Result<AugmentationDag> {
    let codes = labels
        .iter()
        .map(|l| named_code(l))
        .collect::<Result<Vec<_>>>()?;
    enumerate_from_codes(&codes)
}

/// Descent from arbitrary starting codes of one dimension.
pub fn enumerate_from_codes(codes: &[BinaryCode]) -> Result<AugmentationDag> {
    let mut level: BTreeMap<Vec<u128>, CodeRecord> = BTreeMap::new();
    for c in codes {
        if !c.satisfies_residue_conditions() {
            return Err(CodeError::Precondition(
                "starting code does not satisfy the residue conditions".into(),
            ));
        }
        let cert = canonical_form(c)?;
        level
            .entry(cert.canonical.basis().to_vec())
            .or_insert(record_from(&cert)?);
    }
    let mut dag = AugmentationDag::default();
    loop {
        let base = dag.nodes.len();
        let parents: Vec<CodeRecord> = level.into_values().collect();
        dag.nodes.extend(parents.iter().cloned());
        if parents.is_empty() || parents[0].dim <= 1 {
            break;
        }
        // hyperplanes of every parent, canonized independently
        let found: Vec<Vec<(u32, CanonicalCertificate, Option<u128>)>> = parents
            .par_iter()
            .map(|p| {
                let words4 = p.canonical.words_of_weight(4)?;
                functional_orbit_reps(&p.canonical, &p.aut_generators)
                    .into_iter()
                    .map(|f| {
                        let h = hyperplane(&p.canonical, f)?;
                        let cert = canonical_form(&h)?;
                        let a = words4.iter().copied().find(|&w| !h.contains(w));
                        Ok((f, cert, a))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut next: BTreeMap<Vec<u128>, CodeRecord> = BTreeMap::new();
        for hs in &found {
            for (_, cert, _) in hs {
                let key = cert.canonical.basis().to_vec();
                if !next.contains_key(&key) {
                    next.insert(key, record_from(cert)?);
                }
            }
        }
        let keys: Vec<Vec<u128>> = next.keys().cloned().collect();
        let sub_base = base + parents.len();
        for (pi, hs) in found.into_iter().enumerate() {
            for (f, cert, a) in hs {
                let idx = keys
                    .binary_search(&cert.canonical.basis().to_vec())
                    .expect("inserted above");
                dag.edges.push(Edge {
                    sub: sub_base + idx,
                    sup: base + pi,
                    functional: f,
                    to_sub: cert.witness,
                    a,
                });
            }
        }
        level = next;
    }
    // sort by (k, canonical form) and renumber
    let mut order: Vec<usize> = (0..dag.nodes.len()).collect();
    order.sort_by(|&x, &y| {
        let (a, b) = (&dag.nodes[x], &dag.nodes[y]);
        a.dim.cmp(&b.dim).then(a.canonical.basis().cmp(b.canonical.basis()))
    });
    let mut new_index = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let nodes = order.iter().map(|&i| dag.nodes[i].clone()).collect();
    for e in dag.edges.iter_mut() {
        e.sub = new_index[e.sub];
        e.sup = new_index[e.sup];
    }
    dag.edges.sort_by_key(|e| (e.sup, e.sub, e.functional));
    dag.nodes = nodes;
    Ok(dag)
}

/// Attaches the names of the reference codes to matching classes.
pub fn attach_labels(dag: &mut AugmentationDag) -> Result<()> {
    let names = REALIZABLE_CODES
        .iter()
        .map(|r| r.0)
        .chain(NONREALIZABLE_CODES.iter().map(|r| r.0));
    for name in names {
        let code = table_code(name)?;
        if let Some(i) = dag.find(&code)? {
            dag.nodes[i].label = Some(name.to_string());
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct StatusPolicy {
    pub decide: DecideOptions,
}

impl Default for StatusPolicy {
    fn default() -> Self {
        StatusPolicy {
            decide: DecideOptions::default(),
        }
    }
}

/// Moves a code by a coordinate permutation.
fn permute_code(code: &Z4Code, p: &Permutation) -> Z4Code {
    code.apply_monomial(&MonomialMap {
        perm: p.clone(),
        signs: 0,
    })
}

/// Assigns a status to every class in increasing dimension: the class of
/// the 18x24 matrix's residue gets that code; a class with a weight-4
/// augmentation edge from a realizable class gets the augmented witness;
/// every other class is decided in its own lift space.
pub fn assign_statuses(dag: &mut AugmentationDag, policy: StatusPolicy) -> Result<()> {
    let fig1 = fig1_code();
    let c6_cert = canonical_form(&fig1.residue())?;
    let mut by_sup: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, e) in dag.edges.iter().enumerate() {
        if e.a.is_some() {
            by_sup.entry(e.sup).or_default().push(i);
        }
    }
    let dims: BTreeSet<usize> = dag.nodes.iter().map(|n| n.dim).collect();
    for k in dims {
        let ids: Vec<usize> = (0..dag.nodes.len()).filter(|&i| dag.nodes[i].dim == k).collect();
        let statuses: Vec<Status> = ids
            .par_iter()
            .map(|&i| node_status(dag, i, &by_sup, &fig1, &c6_cert, policy))
            .collect::<Result<Vec<_>>>()?;
        for (i, s) in ids.into_iter().zip(statuses) {
            dag.nodes[i].status = s;
        }
    }
    Ok(())
}

fn node_status(
    dag: &AugmentationDag,
    i: usize,
    by_sup: &BTreeMap<usize, Vec<usize>>,
    fig1: &Z4Code,
    c6_cert: &CanonicalCertificate,
    policy: StatusPolicy,
) -> Result<Status> {
    let node = &dag.nodes[i];
    if node.canonical == c6_cert.canonical {
        return Ok(Status::Realizable {
            witness: permute_code(fig1, &c6_cert.witness),
            provenance: Provenance::ReferenceMatrix,
        });
    }
    for &ei in by_sup.get(&i).map(|v| v.as_slice()).unwrap_or(&[]) {
        let e = &dag.edges[ei];
        let Some(w) = dag.nodes[e.sub].status.witness() else {
            continue;
        };
        let moved = permute_code(w, &e.to_sub.inverse());
        let a = e.a.expect("augmentation edge");
        let (code, witness) = augment_extremal(&moved, a)?;
        if code.residue() != node.canonical {
            return Err(CodeError::Internal("augmented residue mismatch".into()));
        }
        return Ok(Status::Realizable {
            witness: code,
            provenance: Provenance::Augmentation { sub: e.sub, witness },
        });
    }
    let space = LiftSpace::with_generators(&node.canonical, &node.aut_generators)?;
    let verdict = decide_realizability(&space, policy.decide)?;
    Ok(match verdict {
        RealizabilityVerdict::Realizable { witness, point } => Status::Realizable {
            witness,
            provenance: Provenance::LiftSearch {
                m: space.m,
                classes: None,
                point,
                seed: policy.decide.seed,
            },
        },
        RealizabilityVerdict::NonRealizable { classes_checked } => Status::NonRealizable {
            m: space.m,
            classes_checked,
        },
        RealizabilityVerdict::Unknown { budget, seed } => Status::Unknown {
            m: space.m,
            budget,
            seed,
        },
    })
}

/// Classes reachable from `from` along weight-4 augmentation edges
/// (including `from` itself).
pub fn upward_closure(dag: &AugmentationDag, from: &[usize]) -> BTreeSet<usize> {
    let mut up: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in dag.augmentation_edges() {
        up.entry(e.sub).or_default().push(e.sup);
    }
    let mut seen: BTreeSet<usize> = from.iter().copied().collect();
    let mut queue: VecDeque<usize> = from.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for &y in up.get(&x).map(|v| v.as_slice()).unwrap_or(&[]) {
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct TheoremReport {
    /// Realizable classes not reachable from a minimum-weight-8 realizable class.
    pub unreachable_realizable: Vec<usize>,
    /// Non-realizable classes reachable from a minimum-weight-8 realizable class.
    pub reachable_nonrealizable: Vec<usize>,
    /// Classes whose status disagrees with "no maximal non-realizable class
    /// lies above it".
    pub criterion_mismatch: Vec<usize>,
    /// Realizable classes whose upward closure is not all realizable.
    pub not_upward_closed: Vec<usize>,
    pub unknown: Vec<usize>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.unreachable_realizable.is_empty()
            && self.reachable_nonrealizable.is_empty()
            && self.criterion_mismatch.is_empty()
            && self.not_upward_closed.is_empty()
            && self.unknown.is_empty()
    }
}

/// Checks the equivalence of realizability, reachability from the
/// minimum-weight-8 realizable classes, and avoidance of the maximal
/// non-realizable classes.
pub fn check_realizability_theorem(dag: &AugmentationDag) -> TheoremReport {
    let mut report = TheoremReport::default();
    let sources: Vec<usize> = (0..dag.nodes.len())
        .filter(|&i| dag.nodes[i].status.is_realizable() && dag.nodes[i].min_weight == 8)
        .collect();
    let reach = upward_closure(dag, &sources);
    let maximal_nonreal: BTreeSet<usize> = (0..dag.nodes.len())
        .filter(|&i| dag.nodes[i].status.is_nonrealizable())
        .filter(|&i| {
            !dag.augmentation_edges()
                .any(|e| e.sub == i && dag.nodes[e.sup].status.is_nonrealizable())
        })
        .collect();
    for (i, node) in dag.nodes.iter().enumerate() {
        match &node.status {
            Status::Realizable { .. } => {
                if !reach.contains(&i) {
                    report.unreachable_realizable.push(i);
                }
                let up = upward_closure(dag, &[i]);
                if up.iter().any(|&j| !dag.nodes[j].status.is_realizable()) {
                    report.not_upward_closed.push(i);
                }
            }
            Status::NonRealizable { .. } => {
                if reach.contains(&i) {
                    report.reachable_nonrealizable.push(i);
                }
            }
            _ => report.unknown.push(i),
        }
        let up = upward_closure(dag, &[i]);
        let avoids = up.is_disjoint(&maximal_nonreal);
        if avoids != node.status.is_realizable() {
            report.criterion_mismatch.push(i);
        }
    }
    report
}

/// Non-realizable classes with no non-realizable class above them.
pub fn maximal_nonrealizable(dag: &AugmentationDag) -> Vec<usize> {
    (0..dag.nodes.len())
        .filter(|&i| dag.nodes[i].status.is_nonrealizable())
        .filter(|&i| {
            !dag.augmentation_edges()
                .any(|e| e.sub == i && dag.nodes[e.sup].status.is_nonrealizable())
        })
        .collect()
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct DownwardReport {
    pub checked: usize,
    pub failures: Vec<(usize, String)>,
}

/// For each realizable class of dimension at least 7 with a weight-4 word,
/// removes that word from its witness and checks the result lands in a
/// realizable class.
pub fn check_downward_closure(dag: &AugmentationDag) -> Result<DownwardReport> {
    let mut report = DownwardReport::default();
    for (i, node) in dag.nodes.iter().enumerate() {
        if node.dim < 7 {
            continue;
        }
        let Some(w) = node.status.witness() else {
            continue;
        };
        let words = node.canonical.words_of_weight(4)?;
        let Some(&a) = words.iter().min() else {
            continue;
        };
        report.checked += 1;
        match deaugment_extremal(w, a) {
            Ok((sub, _)) => match dag.find(&sub.residue())? {
                Some(j) if dag.nodes[j].status.is_realizable() => {}
                Some(j) => report
                    .failures
                    .push((i, format!("lands in class {j}, which is not realizable"))),
                None => report
                    .failures
                    .push((i, "residue is not among the classified codes".into())),
            },
            Err(e) => report.failures.push((i, e.to_string())),
        }
    }
    Ok(report)
}

/// Enumeration, labels and statuses in one call.
pub fn classify(policy: StatusPolicy) -> Result<AugmentationDag> {
    let mut dag = enumerate_condition_codes()?;
    attach_labels(&mut dag)?;
    assign_statuses(&mut dag, policy)?;
    Ok(dag)
}

/// Minimum weights occurring among the classes.
pub fn min_weights(dag: &AugmentationDag) -> BTreeSet<usize> {
    dag.nodes.iter().map(|n| n.min_weight).collect()
}

/// Whether `a` has weight 4; used when replaying edges.
pub fn is_weight4(a: u128) -> bool {
    weight(a) == 4
}

/// Extremal witness for one of the minimum-weight-8 reference codes, which
/// are given as a parent code extended by listed vectors.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainWitness {
    pub name: String,
    pub parent: String,
    pub vectors: Vec<String>,
    pub code: BinaryCode,
    pub witness: Z4Code,
    pub provenance: Provenance,
    /// Weights of the listed vectors; weight-4 augmentation needs 4.
    pub vector_weights: Vec<usize>,
    /// Whether weight-4 augmentation of the parent witness by each listed
    /// vector is refused.
    pub augmentation_refused: bool,
}

/// Witnesses for every minimum-weight-8 reference code, moved into the
/// code's own coordinates and checked: `witness` is extremal, its residue is
/// `code`, and `code` is the span of the parent and the vectors.
pub fn realizable_chain_witnesses(dag: &AugmentationDag) -> Result<Vec<ChainWitness>> {
    let mut out: Vec<ChainWitness> = Vec::new();
    for &(name, parent, vectors) in REALIZABLE_CODES.iter() {
        let code = table_code(name)?;
        let cert = canonical_form(&code)?;
        let node = dag
            .nodes
            .iter()
            .find(|n| n.canonical == cert.canonical)
            .ok_or_else(|| CodeError::Internal(format!("{name} is not classified")))?;
        let Status::Realizable { witness, provenance } = &node.status else {
            return Err(CodeError::Infeasible(format!("{name} has no witness")));
        };
        let w = permute_code(witness, &cert.witness.inverse());
        if w.residue() != code || !w.is_extremal() {
            return Err(CodeError::Internal(format!("{name} witness fails")));
        }
        let mut vector_weights = Vec::new();
        let mut refused = true;
        if !parent.is_empty() {
            let p = table_code(parent)?;
            let mut span = p.clone();
            for v in vectors.iter() {
                let x = crate::registry::vector(v)?;
                vector_weights.push(weight(x) as usize);
                span = span.span_with(x)?;
            }
            if span != code {
                return Err(CodeError::Internal(format!("{name} is not spanned by its parent")));
            }
            if let Some(pw) = out.iter().find(|c| c.name == parent) {
                for v in vectors.iter() {
                    let x = crate::registry::vector(v)?;
                    if augment_extremal(&pw.witness, x).is_ok() {
                        refused = false;
                    }
                }
            }
        }
        out.push(ChainWitness {
            name: name.to_string(),
            parent: parent.to_string(),
            vectors: vectors.iter().map(|v| v.to_string()).collect(),
            code,
            witness: w,
            provenance: provenance.clone(),
            vector_weights,
            augmentation_refused: refused,
        });
    }
    Ok(out)
}
