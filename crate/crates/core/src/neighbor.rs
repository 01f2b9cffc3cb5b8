//! Weight-4 augmentation and de-augmentation of extremal Type II codes.
//!
//! For an even unimodular `Λ = A4(C)` and a norm-4 vector `α`, the neighbor
//! `Λ_α ∪ (α/2 + β + Λ_α)` is again Construction A of a Z4-code. At code
//! level `Λ_α` becomes `K = {c ∈ C : <α, c> ≡ 0 mod 4}` and the glue vector
//! `α/2 + β` becomes the Z4 word `α + 2β`.

use serde::{Deserialize, Serialize};

use crate::error::{CodeError, Result};
use crate::gf2core::{inner, weight, BinaryCode};
use crate::z4core::{Z4Code, Z4Vec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentationWitness {
    pub a: u128,
    pub alpha: Z4Vec,
    pub b: u128,
    pub beta: Z4Vec,
    pub glue: Z4Vec,
    pub kernel_index: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeaugmentationWitness {
    pub a: u128,
    pub alpha_prime: Z4Vec,
    pub alpha: Z4Vec,
    pub c: u128,
    pub glue: Z4Vec,
}

/// Generators of `{x ∈ C : <alpha, x> ≡ 0 mod 4}`, given `s0 ∈ C` with
/// `<alpha, s0> ≡ 2`. Fails if some generator pairs oddly with `alpha`.
fn half_kernel(code: &Z4Code, alpha: &Z4Vec, s0: Z4Vec) -> Result<Vec<Z4Vec>> {
    let mut rows = Vec::new();
    for g in code.generators() {
        match alpha.inner(g) {
            0 => rows.push(*g),
            2 => rows.push(g.sub(s0)),
            v => {
                return Err(CodeError::Internal(format!(
                    "<alpha, g> = {v} is odd for a generator"
                )))
            }
        }
    }
    rows.push(s0.double());
    Ok(rows)
}

fn require_extremal(code: &Z4Code) -> Result<()> {
    if !code.is_type2() {
        return Err(CodeError::Precondition("code is not Type II".into()));
    }
    if code.has_euclidean_weight_below(16) || !code.has_euclidean_weight_below(17) {
        return Err(CodeError::Precondition(
            "code does not have minimum Euclidean weight 16".into(),
        ));
    }
    Ok(())
}

fn check_result(old: &Z4Code, new: &Z4Code, glue: &Z4Vec, residue: &BinaryCode) -> Result<()> {
    if new.log2_size() != old.log2_size() {
        return Err(CodeError::Internal("result changed the code size".into()));
    }
    if old.contains(glue) {
        return Err(CodeError::Internal("glue vector lies in the original code".into()));
    }
    if !new.is_type2() {
        return Err(CodeError::Internal("result is not Type II".into()));
    }
    if new.has_euclidean_weight_below(16) || !new.has_euclidean_weight_below(17) {
        return Err(CodeError::Internal(
            "result does not have minimum Euclidean weight 16".into(),
        ));
    }
    if &new.residue() != residue {
        return Err(CodeError::Internal("result has the wrong residue code".into()));
    }
    Ok(())
}

/// Extends the residue code by a weight-4 vector `a`.
pub fn augment_extremal(code: &Z4Code, a: u128) -> Result<(Z4Code, AugmentationWitness)> {
    require_extremal(code)?;
    if weight(a) != 4 {
        return Err(CodeError::Precondition(format!(
            "vector has weight {}, not 4",
            weight(a)
        )));
    }
    let residue = code.residue();
    if residue.contains(a) {
        return Err(CodeError::Precondition("vector lies in the residue code".into()));
    }
    if residue.basis().iter().any(|&r| inner(r, a) != 0) {
        return Err(CodeError::Precondition(
            "span with the vector is not doubly even".into(),
        ));
    }
    let torsion = code.torsion();
    let b = torsion
        .basis()
        .iter()
        .copied()
        .find(|&t| inner(t, a) == 1)
        .ok_or_else(|| CodeError::Internal("no torsion vector pairs oddly with a".into()))?;
    let alpha = Z4Vec::lift(a);
    let beta = Z4Vec::lift(b);
    let mut rows = half_kernel(code, &alpha, beta.double())?;
    let glue = alpha.add(beta.double());
    rows.push(glue);
    let new = Z4Code::from_rows(code.len(), &rows)?;
    let target = residue.span_with(a)?;
    check_result(code, &new, &glue, &target)?;
    Ok((
        new,
        AugmentationWitness {
            a,
            alpha,
            b,
            beta,
            glue,
            kernel_index: 2,
        },
    ))
}

/// Removes a weight-4 residue word `a`, producing an index-2 residue subcode
/// that does not contain it.
pub fn deaugment_extremal(code: &Z4Code, a: u128) -> Result<(Z4Code, DeaugmentationWitness)> {
    if weight(a) != 4 {
        return Err(CodeError::Precondition(format!(
            "vector has weight {}, not 4",
            weight(a)
        )));
    }
    let residue = code.residue();
    if !residue.contains(a) {
        return Err(CodeError::Precondition("vector is not in the residue code".into()));
    }
    require_extremal(code)?;
    let alpha_prime = code
        .lift_of(a)
        .ok_or_else(|| CodeError::Internal("no codeword lifts a".into()))?;
    // unit entries on supp(a), zero elsewhere, first support entry negated
    let first = a & a.wrapping_neg();
    let mut alpha = Z4Vec {
        lo: a,
        hi: alpha_prime.hi & a,
    };
    alpha.hi ^= first;
    let glue = alpha.sub(alpha_prime);
    if glue.lo != 0 {
        return Err(CodeError::Internal("alpha - alpha' is not even".into()));
    }
    let c = glue.hi;
    if alpha.inner(&alpha_prime) != 2 || inner(a, c) != 1 {
        return Err(CodeError::Internal("lift normalization failed".into()));
    }
    let mut rows = half_kernel(code, &alpha, alpha_prime)?;
    rows.push(glue);
    let new = Z4Code::from_rows(code.len(), &rows)?;
    let kept: Vec<u128> = residue
        .codewords()?
        .into_iter()
        .filter(|&w| inner(w, c) == 0)
        .collect();
    let target = BinaryCode::from_rows(code.len(), &kept)?;
    check_result(code, &new, &glue, &target)?;
    if target.span_with(a)? != residue {
        return Err(CodeError::Internal("span identity fails".into()));
    }
    Ok((
        new,
        DeaugmentationWitness {
            a,
            alpha_prime,
            alpha,
            c,
            glue,
        },
    ))
}
