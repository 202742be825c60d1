//! Standard OGS canonical forms of `S_n` and generalized standard OGS
//! canonical forms of `D_n`.
//!
//! Every `π ∈ S_n` is uniquely `t_2^{i_2} ··· t_n^{i_n}` with `0 ≤ i_k < k`,
//! and every `π ∈ D_n` is uniquely
//! `w_1^{j_1} · t_2^{i_2} · w_2^{j_2} ··· w_{n-1}^{j_{n-1}} · t_n^{i_n}` with
//! `j_k ∈ {0, 1}`. Extraction peels right cosets from position `n` down: the
//! residual image `v` of position `m` gives `j_{m-1} = [v < 0]` and
//! `i_m = m - |v|`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{check_rank, SignedPerm};
use crate::word::{apply_t_power, apply_w, right_multiply, write_joined, Letter, MixedWord};

/// A nonzero canonical generator power, as it appears in a canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    /// `t_k^e` with `2 ≤ k` and `1 ≤ e < k`.
    T { k: usize, e: u32 },
    /// `w_L` with `L ≥ 1`.
    W(usize),
}

impl Term {
    /// Slot of the term in the canonical order `w_1, t_2, w_2, t_3, ...`:
    /// `w_L` sits at `2L - 1` and `t_k` at `2k - 2`.
    pub fn position(self) -> usize {
        match self {
            Term::W(l) => 2 * l - 1,
            Term::T { k, .. } => 2 * k - 2,
        }
    }

    /// The term as a word letter.
    pub fn letter(self) -> Letter {
        match self {
            Term::T { k, e } => Letter::T { k, exp: e as u64 },
            Term::W(l) => Letter::W(l),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letter().fmt(f)
    }
}

/// Renders terms joined by `*`, with `e` for the empty sequence.
pub fn format_terms(terms: &[Term]) -> String {
    struct Joined<'a>(&'a [Term]);
    impl fmt::Display for Joined<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_joined(f, self.0.iter())
        }
    }
    Joined(terms).to_string()
}

/// True iff the term positions strictly increase, i.e. the sequence is in canonical order.
pub fn is_canonical_order(terms: &[Term]) -> bool {
    terms.windows(2).all(|w| w[0].position() < w[1].position())
}

/// Standard OGS canonical form `t_2^{i_2} ··· t_n^{i_n}` of an element of `S_n`.
///
/// ```
/// use dn_ogs::ogs::SnOgsForm;
///
/// let f = SnOgsForm::from_terms(6, &[(5, 2), (6, 2)]).unwrap();
/// assert_eq!(f.to_string(), "t5^2*t6^2");
/// assert_eq!(f.realize().images(), &[2, 3, 5, 6, 1, 4]);
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnOgsForm {
    n: usize,
    exps: Vec<u32>,
}

impl SnOgsForm {
    /// Builds a form from `i_2, ..., i_n` (so `exps.len() == n - 1`).
    pub fn new(n: usize, exps: Vec<u32>) -> Result<Self> {
        check_rank(n)?;
        if exps.len() != n - 1 {
            return Err(Error::RankMismatch {
                left: n,
                right: exps.len() + 1,
            });
        }
        for (idx, &e) in exps.iter().enumerate() {
            let k = idx + 2;
            if e as usize >= k {
                return Err(Error::ExponentOutOfRange {
                    what: format!("t{k}"),
                    exp: e as u64,
                });
            }
        }
        Ok(SnOgsForm { n, exps })
    }

    /// The identity form of rank `n`.
    pub fn identity(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(SnOgsForm {
            n,
            exps: vec![0; n - 1],
        })
    }

    /// Builds a form from `(k, i_k)` pairs; unlisted exponents are zero.
    pub fn from_terms(n: usize, terms: &[(usize, u32)]) -> Result<Self> {
        let mut f = Self::identity(n)?;
        for &(k, e) in terms {
            if !(2..=n).contains(&k) {
                return Err(Error::IndexOutOfRange {
                    what: "t",
                    index: k,
                    n,
                });
            }
            if e as usize >= k || f.exps[k - 2] != 0 {
                return Err(Error::ExponentOutOfRange {
                    what: format!("t{k}"),
                    exp: e as u64,
                });
            }
            f.exps[k - 2] = e;
        }
        Ok(f)
    }

    /// The rank.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// The exponent `i_k` for `2 ≤ k ≤ n`.
    ///
    /// # Panics
    ///
    /// Panics if `k` is outside `2..=n`.
    pub fn exponent(&self, k: usize) -> u32 {
        assert!((2..=self.n).contains(&k), "t-index {k} outside 2..={}", self.n);
        self.exps[k - 2]
    }

    /// The exponent vector `i_2, ..., i_n`.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Nonzero `(k, i_k)` pairs in increasing `k`.
    pub fn pairs(&self) -> Vec<(usize, u32)> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(idx, &e)| (idx + 2, e))
            .collect()
    }

    /// Nonzero terms in canonical order.
    pub fn support_terms(&self) -> Vec<Term> {
        self.pairs()
            .into_iter()
            .map(|(k, e)| Term::T { k, e })
            .collect()
    }

    /// True iff every exponent is zero.
    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// The element `t_2^{i_2} ··· t_n^{i_n}`.
    pub fn realize(&self) -> SignedPerm {
        let mut images: Vec<i32> = (1..=self.n as i32).collect();
        for (k, e) in self.pairs() {
            right_multiply(&mut images, |y| apply_t_power(k, e, y));
        }
        SignedPerm::from_images_unchecked(images)
    }

    /// The canonical form of an unsigned permutation.
    pub fn extract(a: &SignedPerm) -> Result<Self> {
        if !a.is_unsigned() {
            return Err(Error::NotInS(a.to_string()));
        }
        let d = DnOgsForm::extract(a)?;
        debug_assert!(d.w_indices().is_empty());
        Ok(d.t)
    }

    /// The form as a word.
    pub fn to_word(&self) -> MixedWord {
        let letters = self.support_terms().into_iter().map(Term::letter).collect();
        MixedWord::new(self.n, letters).expect("canonical terms are in range")
    }
}

impl fmt::Display for SnOgsForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.support_terms().iter())
    }
}

/// Generalized standard OGS canonical form of an element of `D_n`.
///
/// ```
/// use dn_ogs::ogs::DnOgsForm;
/// use dn_ogs::perm::SignedPerm;
///
/// let a = SignedPerm::new(vec![-2, -1, -4, -3]).unwrap();
/// let f = DnOgsForm::extract(&a).unwrap();
/// assert_eq!(f.to_string(), "w1*t2*t3^2*w3*t4");
/// assert_eq!(f.realize(), a);
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DnOgsForm {
    w: Vec<bool>,
    t: SnOgsForm,
}

impl DnOgsForm {
    /// Builds a form from `j_1, ..., j_{n-1}` and `i_2, ..., i_n`.
    pub fn new(n: usize, w_exps: Vec<u8>, t_exps: Vec<u32>) -> Result<Self> {
        let t = SnOgsForm::new(n, t_exps)?;
        if w_exps.len() != n - 1 {
            return Err(Error::RankMismatch {
                left: n,
                right: w_exps.len() + 1,
            });
        }
        let mut w = Vec::with_capacity(n - 1);
        for (idx, &j) in w_exps.iter().enumerate() {
            if j > 1 {
                return Err(Error::ExponentOutOfRange {
                    what: format!("w{}", idx + 1),
                    exp: j as u64,
                });
            }
            w.push(j == 1);
        }
        Ok(DnOgsForm { w, t })
    }

    /// The identity form of rank `n`.
    pub fn identity(n: usize) -> Result<Self> {
        Ok(DnOgsForm {
            w: vec![false; n.saturating_sub(1)],
            t: SnOgsForm::identity(n)?,
        })
    }

    /// Builds a form from its nonzero terms, in any order; each slot may be used once.
    pub fn from_terms(n: usize, terms: &[Term]) -> Result<Self> {
        let mut f = Self::identity(n)?;
        for &term in terms {
            match term {
                Term::W(l) => {
                    if !(1..n).contains(&l) {
                        return Err(Error::IndexOutOfRange {
                            what: "w",
                            index: l,
                            n,
                        });
                    }
                    if f.w[l - 1] {
                        return Err(Error::ExponentOutOfRange {
                            what: format!("w{l}"),
                            exp: 2,
                        });
                    }
                    f.w[l - 1] = true;
                }
                Term::T { k, e } => {
                    let mut pairs = f.t.pairs();
                    pairs.push((k, e));
                    f.t = SnOgsForm::from_terms(n, &pairs)?;
                }
            }
        }
        Ok(f)
    }

    /// Builds the form `w_{L_1} ··· w_{L_r} · circle`-shaped element whose
    /// w-content is `w_indices` and whose t-content is `circle`.
    pub fn from_parts(w_indices: &[usize], circle: &SnOgsForm) -> Result<Self> {
        let n = circle.rank();
        let mut terms: Vec<Term> = w_indices.iter().map(|&l| Term::W(l)).collect();
        terms.extend(circle.support_terms());
        Self::from_terms(n, &terms)
    }

    /// The rank.
    pub fn rank(&self) -> usize {
        self.t.n
    }

    /// The exponent `j_L` for `1 ≤ L ≤ n-1`.
    ///
    /// # Panics
    ///
    /// Panics if `L` is outside `1..n`.
    pub fn w_exponent(&self, l: usize) -> u8 {
        assert!((1..self.rank()).contains(&l), "w-index {l} outside 1..{}", self.rank());
        self.w[l - 1] as u8
    }

    /// The exponent `i_k` for `2 ≤ k ≤ n`.
    pub fn t_exponent(&self, k: usize) -> u32 {
        self.t.exponent(k)
    }

    /// The t-part, which is the canonical form of the unsigned projection `φ(π)`.
    pub fn circle(&self) -> &SnOgsForm {
        &self.t
    }

    /// Indices `L` with `j_L = 1`, increasing.
    pub fn w_indices(&self) -> Vec<usize> {
        (1..self.rank()).filter(|&l| self.w[l - 1]).collect()
    }

    /// Nonzero terms in canonical order `w_1, t_2, w_2, t_3, ...`.
    pub fn support_terms(&self) -> Vec<Term> {
        let mut out = Vec::new();
        for k in 2..=self.rank() {
            if self.w[k - 2] {
                out.push(Term::W(k - 1));
            }
            let e = self.t.exponent(k);
            if e > 0 {
                out.push(Term::T { k, e });
            }
        }
        out
    }

    /// True iff every exponent is zero.
    pub fn is_identity(&self) -> bool {
        self.t.is_identity() && !self.w.iter().any(|&b| b)
    }

    /// The element denoted by the form.
    pub fn realize(&self) -> SignedPerm {
        let mut images: Vec<i32> = (1..=self.rank() as i32).collect();
        for term in self.support_terms() {
            match term {
                Term::W(l) => right_multiply(&mut images, |y| apply_w(l, y)),
                Term::T { k, e } => right_multiply(&mut images, |y| apply_t_power(k, e, y)),
            }
        }
        SignedPerm::from_images_unchecked(images)
    }

    /// The canonical form of an element of `D_n`, by right-coset peeling.
    pub fn extract(a: &SignedPerm) -> Result<Self> {
        if !a.is_d_element() {
            return Err(Error::NotInD(a.to_string()));
        }
        let n = a.rank();
        let mut residual = a.images().to_vec();
        let mut w = vec![false; n - 1];
        let mut t = vec![0u32; n - 1];
        for m in (2..=n).rev() {
            let v = residual[m - 1];
            let j = v < 0;
            let i = (m - v.unsigned_abs() as usize) as u32;
            w[m - 2] = j;
            t[m - 2] = i;
            // Strip the coset representative: residual ← residual · (w_{m-1}^j t_m^i)^{-1}.
            let back = (m as u32 - i) % m as u32;
            right_multiply(&mut residual, |y| {
                let y = apply_t_power(m, back, y);
                if j {
                    apply_w(m - 1, y)
                } else {
                    y
                }
            });
            debug_assert_eq!(residual[m - 1], m as i32);
        }
        debug_assert_eq!(residual[0], 1);
        Ok(DnOgsForm {
            w,
            t: SnOgsForm { n, exps: t },
        })
    }

    /// The form as a word.
    pub fn to_word(&self) -> MixedWord {
        let letters = self.support_terms().into_iter().map(Term::letter).collect();
        MixedWord::new(self.rank(), letters).expect("canonical terms are in range")
    }
}

impl fmt::Display for DnOgsForm {
    /// Canonical text such as `w1*t2*t3^2*w3*t4`; the identity is `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.support_terms().iter())
    }
}

impl From<SnOgsForm> for DnOgsForm {
    fn from(t: SnOgsForm) -> Self {
        DnOgsForm {
            w: vec![false; t.n - 1],
            t,
        }
    }
}

/// The canonical form of `a ∈ D_n`.
pub fn extract_dn_ogs(a: &SignedPerm) -> Result<DnOgsForm> {
    DnOgsForm::extract(a)
}

/// The element denoted by a `D_n` form.
pub fn realize_dn(form: &DnOgsForm) -> SignedPerm {
    form.realize()
}

/// The canonical form of an unsigned permutation.
pub fn extract_sn_ogs(a: &SignedPerm) -> Result<SnOgsForm> {
    SnOgsForm::extract(a)
}

/// The element denoted by an `S_n` form.
pub fn realize_sn(form: &SnOgsForm) -> SignedPerm {
    form.realize()
}
