//! Generators, letters and words of `D_n`.
//!
//! The Coxeter generators are `s_{1'}` and `s_1, ..., s_{n-1}`. On top of
//! them the canonical generators are
//!
//! - `t_m = s_1 s_2 ··· s_{m-1}`, the cycle `[m, 1, 2, ..., m-1, m+1, ...]`;
//! - `w_L = s_L ··· s_2 s_1 s_{1'} s_2 ··· s_L`, which negates positions 1 and `L+1`.
//!
//! A [`MixedWord`] is a product of any of these letters, evaluated left to right.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{check_rank, SignedPerm};

/// A Coxeter generator of `D_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterLetter {
    /// `s_{1'}`, mapping `1 ↦ -2` and `2 ↦ -1`.
    SPrime,
    /// `s_i` for `1 ≤ i ≤ n-1`, swapping `i` and `i+1`.
    S(usize),
}

impl CoxeterLetter {
    /// Checks the index against rank `n`.
    pub fn validate(self, n: usize) -> Result<()> {
        match self {
            CoxeterLetter::SPrime => Ok(()),
            CoxeterLetter::S(i) if (1..n).contains(&i) => Ok(()),
            CoxeterLetter::S(i) => Err(Error::IndexOutOfRange {
                what: "s",
                index: i,
                n,
            }),
        }
    }

    /// Applies the generator to a signed value.
    pub(crate) fn apply(self, y: i32) -> i32 {
        let (a, sign) = (y.abs(), y.signum());
        match self {
            CoxeterLetter::SPrime => match a {
                1 => -2 * sign,
                2 => -sign,
                _ => y,
            },
            CoxeterLetter::S(i) => {
                let i = i as i32;
                if a == i {
                    (i + 1) * sign
                } else if a == i + 1 {
                    i * sign
                } else {
                    y
                }
            }
        }
    }
}

impl fmt::Display for CoxeterLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterLetter::SPrime => f.write_str("s1'"),
            CoxeterLetter::S(i) => write!(f, "s{i}"),
        }
    }
}

/// One letter of a [`MixedWord`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// A Coxeter generator.
    Coxeter(CoxeterLetter),
    /// `t_k^exp` for `2 ≤ k ≤ n`; any exponent is accepted and read modulo `k`.
    T { k: usize, exp: u64 },
    /// `w_L` for `1 ≤ L ≤ n-1`.
    W(usize),
}

impl Letter {
    /// Checks every index against rank `n`.
    pub fn validate(self, n: usize) -> Result<()> {
        match self {
            Letter::Coxeter(c) => c.validate(n),
            Letter::T { k, .. } if (2..=n).contains(&k) => Ok(()),
            Letter::T { k, .. } => Err(Error::IndexOutOfRange {
                what: "t",
                index: k,
                n,
            }),
            Letter::W(l) if (1..n).contains(&l) => Ok(()),
            Letter::W(l) => Err(Error::IndexOutOfRange {
                what: "w",
                index: l,
                n,
            }),
        }
    }

    /// Applies the letter to a signed value.
    pub(crate) fn apply(self, y: i32) -> i32 {
        match self {
            Letter::Coxeter(c) => c.apply(y),
            Letter::T { k, exp } => apply_t_power(k, (exp % k as u64) as u32, y),
            Letter::W(l) => apply_w(l, y),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Coxeter(c) => c.fmt(f),
            Letter::T { k, exp: 1 } => write!(f, "t{k}"),
            Letter::T { k, exp } => write!(f, "t{k}^{exp}"),
            Letter::W(l) => write!(f, "w{l}"),
        }
    }
}

/// Image of `y` under `t_k^e` where `0 ≤ e < k`: `j ↦ ((j - 1 - e) mod k) + 1` for `|j| ≤ k`.
pub(crate) fn apply_t_power(k: usize, e: u32, y: i32) -> i32 {
    let k = k as i32;
    let a = y.abs();
    if a > k || e == 0 {
        return y;
    }
    let img = (a - 1 + k - e as i32) % k + 1;
    img * y.signum()
}

/// Image of `y` under `w_l`, which negates `±1` and `±(l+1)`.
pub(crate) fn apply_w(l: usize, y: i32) -> i32 {
    let a = y.unsigned_abs() as usize;
    if a == 1 || a == l + 1 {
        -y
    } else {
        y
    }
}

/// Right-multiplies `acc` in place by the permutation `g` given as a map on values.
pub(crate) fn right_multiply(acc: &mut [i32], g: impl Fn(i32) -> i32) {
    for v in acc.iter_mut() {
        *v = g(*v);
    }
}

/// The permutation of a Coxeter generator at rank `n`.
///
/// ```
/// use dn_ogs::word::{generator_permutation, CoxeterLetter};
/// assert_eq!(generator_permutation(CoxeterLetter::SPrime, 2).unwrap().images(), &[-2, -1]);
/// assert_eq!(generator_permutation(CoxeterLetter::S(2), 4).unwrap().images(), &[1, 3, 2, 4]);
/// ```
pub fn generator_permutation(letter: CoxeterLetter, n: usize) -> Result<SignedPerm> {
    check_rank(n)?;
    letter.validate(n)?;
    Ok(letter_permutation(Letter::Coxeter(letter), n))
}

/// `t_m = [m, 1, 2, ..., m-1, m+1, ..., n]` for `2 ≤ m ≤ n`.
pub fn t_generator(m: usize, n: usize) -> Result<SignedPerm> {
    check_rank(n)?;
    Letter::T { k: m, exp: 1 }.validate(n)?;
    Ok(letter_permutation(Letter::T { k: m, exp: 1 }, n))
}

/// `w_L`, negating positions 1 and `L+1`, for `1 ≤ L ≤ n-1`.
pub fn w_generator(l: usize, n: usize) -> Result<SignedPerm> {
    check_rank(n)?;
    Letter::W(l).validate(n)?;
    Ok(letter_permutation(Letter::W(l), n))
}

/// The permutation of an already validated letter.
pub(crate) fn letter_permutation(letter: Letter, n: usize) -> SignedPerm {
    let mut images: Vec<i32> = (1..=n as i32).collect();
    right_multiply(&mut images, |y| letter.apply(y));
    SignedPerm::from_images_unchecked(images)
}

/// The Coxeter spelling `s_L ··· s_1 s_{1'} s_2 ··· s_L` of `w_L`.
pub fn w_coxeter_letters(l: usize) -> Vec<CoxeterLetter> {
    let mut out: Vec<CoxeterLetter> = (1..=l).rev().map(CoxeterLetter::S).collect();
    out.push(CoxeterLetter::SPrime);
    out.extend((2..=l).map(CoxeterLetter::S));
    out
}

/// The Coxeter spelling `s_1 s_2 ··· s_{m-1}` of `t_m`.
pub fn t_coxeter_letters(m: usize) -> Vec<CoxeterLetter> {
    (1..m).map(CoxeterLetter::S).collect()
}

/// A word over the mixed alphabet `{s_{1'}, s_i, t_k^e, w_L}` at a fixed rank.
///
/// ```
/// use dn_ogs::word::{Letter, MixedWord};
///
/// let w = MixedWord::new(4, vec![Letter::W(1), Letter::T { k: 2, exp: 1 }]).unwrap();
/// assert_eq!(w.to_string(), "w1*t2");
/// assert_eq!(w.evaluate().images(), &[-2, -1, 3, 4]);
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedWord {
    n: usize,
    letters: Vec<Letter>,
}

impl MixedWord {
    /// Builds a word, validating every letter against rank `n`.
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        check_rank(n)?;
        for l in &letters {
            l.validate(n)?;
        }
        Ok(MixedWord { n, letters })
    }

    /// The empty word of rank `n`.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// The rank.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// The letters in order.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &MixedWord) -> Result<MixedWord> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(MixedWord { n: self.n, letters })
    }

    /// The left-to-right product of the letters.
    pub fn evaluate(&self) -> SignedPerm {
        evaluate_word(self)
    }
}

impl fmt::Display for MixedWord {
    /// Letters joined by `*`; the empty word is `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.letters.iter())
    }
}

/// Writes items joined by `*`, or `e` when there are none.
pub(crate) fn write_joined<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    let mut empty = true;
    for item in items {
        if !empty {
            f.write_str("*")?;
        }
        write!(f, "{item}")?;
        empty = false;
    }
    if empty {
        f.write_str("e")?;
    }
    Ok(())
}

/// Evaluates a word left to right; `T(k, e)` contributes `t_k` composed `e` times.
pub fn evaluate_word(word: &MixedWord) -> SignedPerm {
    let mut images: Vec<i32> = (1..=word.n as i32).collect();
    for &letter in &word.letters {
        right_multiply(&mut images, |y| letter.apply(y));
    }
    SignedPerm::from_images_unchecked(images)
}

/// A word over the Coxeter generators, grouped into blocks for display.
///
/// Blocks carry no meaning for the product; they reproduce the
/// block structure of normal forms such as `(s4*s3*s2*s1')*(s5*s4)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CoxeterWord {
    blocks: Vec<Vec<CoxeterLetter>>,
}

impl CoxeterWord {
    /// A word made of the given blocks; empty blocks are dropped.
    pub fn from_blocks(blocks: Vec<Vec<CoxeterLetter>>) -> Self {
        CoxeterWord {
            blocks: blocks.into_iter().filter(|b| !b.is_empty()).collect(),
        }
    }

    /// The non-empty blocks.
    pub fn blocks(&self) -> &[Vec<CoxeterLetter>] {
        &self.blocks
    }

    /// All letters in order.
    pub fn letters(&self) -> impl Iterator<Item = CoxeterLetter> + '_ {
        self.blocks.iter().flatten().copied()
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// True iff the word has no letters.
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Appends another word's blocks.
    pub fn extend(&mut self, other: CoxeterWord) {
        self.blocks.extend(other.blocks);
    }

    /// The product at rank `n`.
    pub fn evaluate(&self, n: usize) -> Result<SignedPerm> {
        let letters = self.letters().map(Letter::Coxeter).collect();
        Ok(MixedWord::new(n, letters)?.evaluate())
    }

    /// The letters joined by `*` without block parentheses; parseable by
    /// [`crate::text::parse_word`].
    pub fn to_flat_string(&self) -> String {
        let mut out = String::new();
        for (i, l) in self.letters().enumerate() {
            if i > 0 {
                out.push('*');
            }
            out.push_str(&l.to_string());
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }
}

impl fmt::Display for CoxeterWord {
    /// Blocks joined by `*`, with multi-letter blocks parenthesized; the empty word is `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        struct Block<'a>(&'a [CoxeterLetter]);
        impl fmt::Display for Block<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.len() == 1 {
                    return self.0[0].fmt(f);
                }
                f.write_str("(")?;
                write_joined(f, self.0.iter())?;
                f.write_str(")")
            }
        }
        write_joined(f, self.blocks.iter().map(|b| Block(b)))
    }
}
