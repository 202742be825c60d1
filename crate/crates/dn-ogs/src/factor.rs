//! Major index, elementary elements and the elementary factorization of `S_n` forms.
//!
//! A form `t_{k_1}^{i_{k_1}} ··· t_{k_m}^{i_{k_m}}` (nonzero terms only) is
//! *elementary* when `Σ i_{k_j} ≤ k_1`. Every form splits uniquely into
//! elementary factors `π^{(1)} ··· π^{(z)}` such that the last index of each
//! factor is at most the major index of the next, which is at most that
//! factor's first index. A single power may be split across two adjacent
//! factors. Lengths and normal forms are computed factor by factor.

use std::fmt;

use serde::Serialize;

use crate::ogs::{format_terms, SnOgsForm, Term};
use crate::word::{CoxeterLetter, CoxeterWord};

/// One elementary factor: `(k, i)` pairs with strictly increasing `k` and `i ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Factor {
    terms: Vec<(usize, u32)>,
}

impl Factor {
    /// Wraps `(k, i)` pairs. The pairs are not checked for elementarity.
    pub fn new(terms: Vec<(usize, u32)>) -> Self {
        Factor { terms }
    }

    /// The `(k, i)` pairs.
    pub fn terms(&self) -> &[(usize, u32)] {
        &self.terms
    }

    /// The factor as canonical terms.
    pub fn as_terms(&self) -> Vec<Term> {
        self.terms.iter().map(|&(k, e)| Term::T { k, e }).collect()
    }

    /// The exponent sum, which is the major index of an elementary factor.
    pub fn maj(&self) -> usize {
        self.terms.iter().map(|&(_, e)| e as usize).sum()
    }

    /// The first index `k_1`, or `None` for the empty factor.
    pub fn first_k(&self) -> Option<usize> {
        self.terms.first().map(|&(k, _)| k)
    }

    /// The last index `k_m`, or `None` for the empty factor.
    pub fn last_k(&self) -> Option<usize> {
        self.terms.last().map(|&(k, _)| k)
    }

    /// True iff the factor has no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the exponent sum is at most the first index.
    pub fn is_elementary(&self) -> bool {
        self.first_k().is_none_or(|k1| self.maj() <= k1)
    }

    /// `Σ k·i - maj²`, the Coxeter length of an elementary factor.
    pub fn length(&self) -> u64 {
        let weighted: u64 = self.terms.iter().map(|&(k, e)| k as u64 * e as u64).sum();
        let maj = self.maj() as u64;
        weighted - maj * maj
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(&self.as_terms()))
    }
}

/// The elementary factorization of an `S_n` form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ElementaryFactorization {
    n: usize,
    factors: Vec<Factor>,
}

impl ElementaryFactorization {
    /// The rank of the factored form.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// The factors, in product order; empty for the identity.
    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// The factor count `z(π)`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// True iff there are no factors, i.e. the form is the identity.
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The major index of each factor.
    pub fn majs(&self) -> Vec<usize> {
        self.factors.iter().map(Factor::maj).collect()
    }

    /// True iff every factor is elementary and the boundary chain
    /// `k_m^{(v-1)} ≤ maj(π^{(v)}) ≤ k_1^{(v)}` holds.
    pub fn satisfies_constraints(&self) -> bool {
        self.factors.iter().all(|f| !f.is_empty() && f.is_elementary())
            && self.factors.windows(2).all(|w| {
                let (prev, next) = (&w[0], &w[1]);
                prev.last_k().unwrap() <= next.maj() && next.maj() <= next.first_k().unwrap()
            })
    }

    /// Concatenates the factors back into a form, merging split powers.
    pub fn reassemble(&self) -> SnOgsForm {
        let mut exps = vec![0u32; self.n - 1];
        for (k, e) in self.factors.iter().flat_map(|f| f.terms.iter().copied()) {
            exps[k - 2] += e;
        }
        SnOgsForm::new(self.n, exps).expect("factors partition the exponents of a valid form")
    }
}

impl fmt::Display for ElementaryFactorization {
    /// Factors joined by ` | `; the identity is `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("e");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            factor.fmt(f)?;
        }
        Ok(())
    }
}

/// The major index `Σ des(π)` of the element denoted by `form`.
///
/// ```
/// use dn_ogs::{factor::maj, SnOgsForm};
///
/// assert_eq!(maj(&SnOgsForm::from_terms(5, &[(4, 2), (5, 1)]).unwrap()), 3);
/// ```
pub fn maj(form: &SnOgsForm) -> usize {
    form.realize().descents().iter().sum()
}

/// True iff the exponent sum is at most the smallest index with a nonzero exponent.
pub fn is_elementary(form: &SnOgsForm) -> bool {
    Factor::new(form.pairs()).is_elementary()
}

/// The unique elementary factorization of `form`.
///
/// Terms are scanned from the right while the running exponent sum of the
/// open factor stays within the current index. The first term that would
/// overflow either closes the factor (if the sum already reached its index)
/// or is split, with just enough of its power moved into the open factor to
/// make the sum equal to the index.
///
/// ```
/// use dn_ogs::{factor::factorize_elementary, SnOgsForm};
///
/// let f = SnOgsForm::from_terms(11, &[(4, 2), (5, 1), (6, 3), (9, 1), (11, 2)]).unwrap();
/// assert_eq!(factorize_elementary(&f).to_string(), "t4^2*t5 | t6^3*t9*t11^2");
/// ```
pub fn factorize_elementary(form: &SnOgsForm) -> ElementaryFactorization {
    let mut pending = form.pairs();
    let mut factors = Vec::new();
    let mut current: Vec<(usize, u32)> = Vec::new();
    let mut sum = 0usize;
    while let Some(&(k, e)) = pending.last() {
        let e_us = e as usize;
        if sum + e_us <= k {
            current.push((k, e));
            sum += e_us;
            pending.pop();
        } else {
            if sum < k {
                let take = k - sum;
                current.push((k, take as u32));
                pending.last_mut().unwrap().1 = e - take as u32;
            }
            current.reverse();
            factors.push(Factor::new(std::mem::take(&mut current)));
            sum = 0;
        }
    }
    if !current.is_empty() {
        current.reverse();
        factors.push(Factor::new(current));
    }
    factors.reverse();
    ElementaryFactorization {
        n: form.rank(),
        factors,
    }
}

/// The Coxeter length `Σ k·i_k - Σ_v maj(π^{(v)})²`, equal to the inversion count.
///
/// ```
/// use dn_ogs::{factor::sn_length, SnOgsForm};
///
/// assert_eq!(sn_length(&SnOgsForm::from_terms(6, &[(5, 2), (6, 2)]).unwrap()), 6);
/// ```
pub fn sn_length(form: &SnOgsForm) -> u64 {
    factorize_elementary(form).factors.iter().map(Factor::length).sum()
}

/// The descent set, obtained as the set of factor major indices.
pub fn sn_descents(form: &SnOgsForm) -> Vec<usize> {
    factorize_elementary(form).majs()
}

/// The reduced word of an elementary factor.
///
/// With `ρ_j = Σ_{x ≥ j} i_{k_x}`, it is the product over `u = ρ_1..k_1-1`
/// of `s_u s_{u-1} ··· s_{u-ρ_1+1}`, followed for each `j ≥ 2` by the
/// product over `u = k_{j-1}..k_j-1` of the `ρ_j` letters descending from `s_u`.
pub fn factor_normal_form(factor: &Factor) -> CoxeterWord {
    let terms = factor.terms();
    let mut rho: Vec<usize> = terms.iter().map(|&(_, e)| e as usize).collect();
    for j in (0..rho.len().saturating_sub(1)).rev() {
        rho[j] += rho[j + 1];
    }
    let descending = |u: usize, count: usize| -> Vec<CoxeterLetter> {
        (u + 1 - count..=u).rev().map(CoxeterLetter::S).collect()
    };
    let mut blocks = Vec::new();
    if let Some(&(k1, _)) = terms.first() {
        for u in rho[0]..k1 {
            blocks.push(descending(u, rho[0]));
        }
    }
    for j in 1..terms.len() {
        for u in terms[j - 1].0..terms[j].0 {
            blocks.push(descending(u, rho[j]));
        }
    }
    CoxeterWord::from_blocks(blocks)
}

/// The reduced word of `form`: the concatenated normal forms of its elementary factors.
///
/// ```
/// use dn_ogs::{factor::sn_normal_form, SnOgsForm};
///
/// let f = SnOgsForm::from_terms(6, &[(5, 2), (6, 2)]).unwrap();
/// assert_eq!(sn_normal_form(&f).to_string(), "(s4*s3*s2*s1)*(s5*s4)");
/// ```
pub fn sn_normal_form(form: &SnOgsForm) -> CoxeterWord {
    let mut word = CoxeterWord::default();
    for factor in factorize_elementary(form).factors() {
        word.extend(factor_normal_form(factor));
    }
    word
}
