//! Coxeter length and reduced normal forms of `D_n` elements.
//!
//! For `π = π•·π°` with elementary projection `π′ = t_{k_1}^{i_{k_1}} ··· t_{k_m}^{i_{k_m}}`
//! the length is `ℓ(π′) + 2·Σ_{L ∈ π•} ϱ̇_L(π′)`, where
//!
//! ```text
//! ϱ̇_L = L                      if L < maj(π′) or L ≥ k_m
//! ϱ̇_L = L - maj(π′)            if maj(π′) ≤ L < k_1
//! ϱ̇_L = L - Σ_{x ≥ q} i_{k_x}   if k_{q-1} ≤ L < k_q
//! ```
//!
//! General elements are split into per-factor pieces by
//! [`crate::blocks::length_factors`] and the piece lengths are summed.

use std::collections::BTreeSet;

use crate::blocks::{length_factors, BulletCircleDecomposition};
use crate::error::{Error, Result};
use crate::factor::{sn_length, Factor};
use crate::ogs::{DnOgsForm, SnOgsForm};
use crate::perm::SignedPerm;
use crate::word::{CoxeterLetter, CoxeterWord};

fn elementary_factor(circle: &SnOgsForm) -> Result<Factor> {
    let f = Factor::new(circle.pairs());
    if f.is_elementary() {
        Ok(f)
    } else {
        Err(Error::NotElementary(circle.to_string()))
    }
}

fn check_w_index(l: usize, n: usize) -> Result<()> {
    if (1..n).contains(&l) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what: "w", index: l, n })
    }
}

/// `ϱ̇_L(f)` for an elementary factor `f`.
fn rho_dot(l: usize, f: &Factor) -> u64 {
    let terms = f.terms();
    let maj = f.maj();
    let (Some(k1), Some(km)) = (f.first_k(), f.last_k()) else {
        return l as u64;
    };
    if l < maj || l >= km {
        return l as u64;
    }
    if l < k1 {
        return (l - maj) as u64;
    }
    let q = terms.iter().position(|&(k, _)| l < k).expect("l < k_m");
    let tail: usize = terms[q..].iter().map(|&(_, e)| e as usize).sum();
    (l - tail) as u64
}

/// Length of `(∏_{L ∈ ws} w_L) · f` for an elementary factor `f`.
pub(crate) fn piece_length(ws: &BTreeSet<usize>, f: &Factor) -> u64 {
    f.length() + 2 * ws.iter().map(|&l| rho_dot(l, f)).sum::<u64>()
}

/// `ℓ(w_L · π′)` for an elementary `π′`, by the five-way case split on `L`.
///
/// ```
/// use dn_ogs::{length::dn_length_single_w, SnOgsForm};
///
/// let circle = SnOgsForm::from_terms(12, &[(7, 2), (9, 2), (12, 3)]).unwrap();
/// assert_eq!(dn_length_single_w(5, &circle).unwrap(), 29);
/// ```
pub fn dn_length_single_w(l: usize, circle: &SnOgsForm) -> Result<u64> {
    let f = elementary_factor(circle)?;
    check_w_index(l, circle.rank())?;
    let base = f.length();
    let double = |x: usize| 2 * x as u64 + base;
    let (Some(k1), Some(km)) = (f.first_k(), f.last_k()) else {
        return Ok(double(l));
    };
    let maj = f.maj();
    let len = if l < maj {
        double(l)
    } else if l == maj && l < k1 {
        base
    } else if l < k1 {
        double(l - maj)
    } else if l < km {
        let r = f.terms().iter().filter(|&&(k, _)| k <= l).count();
        let tail: usize = f.terms()[r..].iter().map(|&(_, e)| e as usize).sum();
        double(l - tail)
    } else {
        double(l)
    };
    Ok(len)
}

/// `ℓ(π•·π°) = ℓ(π′) + 2·Σ ϱ̇_L(π′)` for an elementary circle part.
pub fn dn_length_elementary(decomp: &BulletCircleDecomposition) -> Result<u64> {
    let f = elementary_factor(decomp.circle())?;
    let ws: BTreeSet<usize> = decomp.w_indices().iter().copied().collect();
    Ok(piece_length(&ws, &f))
}

/// The Coxeter length of the element denoted by `form`.
///
/// ```
/// use dn_ogs::{exchange::normalize_mixed_word, length::dn_length, text::parse_word};
///
/// let w = parse_word("t10^4*w11*t12^2*w13*w14*w15*t16^3*t17", 17).unwrap();
/// assert_eq!(dn_length(&normalize_mixed_word(&w)), 119);
/// ```
pub fn dn_length(form: &DnOgsForm) -> u64 {
    length_factors(form).iter().map(|(ws, f)| piece_length(ws, f)).sum()
}

/// `ℓ(π′)`, the length of the projection.
pub fn circle_length(form: &DnOgsForm) -> u64 {
    sn_length(form.circle())
}

/// The reduced normal form of `form`, one block per level.
///
/// See [`element_normal_form`].
///
/// ```
/// use dn_ogs::{exchange::normalize_mixed_word, length::dn_normal_form, text::parse_word};
///
/// let form = normalize_mixed_word(&parse_word("w4*t5^2*t6^2", 6).unwrap());
/// assert_eq!(dn_normal_form(&form).to_string(), "(s4*s3*s2*s1')*(s5*s4)");
/// ```
pub fn dn_normal_form(form: &DnOgsForm) -> CoxeterWord {
    element_normal_form(&form.realize()).expect("realized forms lie in D_n")
}

/// The reduced normal form `norm_1 · norm_2 ··· norm_{n-1}` of `a ∈ D_n`.
///
/// Block `u` is the right coset representative that moves the value
/// currently at position `u+1` into place: with `v` that value,
///
/// - `v > 0` gives `s_u s_{u-1} ··· s_{v}` (`u + 1 - v` letters);
/// - `v = -1` gives `s_u ··· s_2 s_{1'}`;
/// - `v < -1` gives `s_u ··· s_2 s_1 s_{1'} s_2 ··· s_{|v|-1}`.
pub fn element_normal_form(a: &SignedPerm) -> Result<CoxeterWord> {
    if !a.is_d_element() {
        return Err(Error::NotInD(a.to_string()));
    }
    let n = a.rank();
    let mut residual = a.images().to_vec();
    let mut blocks = Vec::with_capacity(n - 1);
    for u in (1..n).rev() {
        let m = u + 1;
        let v = residual[m - 1];
        let block: Vec<CoxeterLetter> = if v > 0 {
            let count = m - v as usize;
            (u + 1 - count..=u).rev().map(CoxeterLetter::S).collect()
        } else {
            let y = v.unsigned_abs() as usize - 1;
            let mut b: Vec<CoxeterLetter> = (2..=u).rev().map(CoxeterLetter::S).collect();
            if y >= 1 {
                b.push(CoxeterLetter::S(1));
            }
            b.push(CoxeterLetter::SPrime);
            b.extend((2..=y).map(CoxeterLetter::S));
            b
        };
        for &letter in block.iter().rev() {
            for x in residual.iter_mut() {
                *x = letter.apply(*x);
            }
        }
        debug_assert_eq!(residual[m - 1], m as i32);
        blocks.push(block);
    }
    blocks.reverse();
    Ok(CoxeterWord::from_blocks(blocks))
}
