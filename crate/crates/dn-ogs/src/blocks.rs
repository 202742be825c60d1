//! Block decomposition and the bullet/circle decomposition `π = π•·π°` of `D_n` elements.
//!
//! Splitting a canonical form into maximal runs of t-terms and w-terms gives
//! the alternating block decomposition `π_1° · π_1• · π_2° ··· π_μ°`.
//! Moving every `w_L` to the front with the exchange laws gives
//! `π = π•·π°`, where `π•` is a product of distinct `w_L` (an element of
//! `Id•_n`, the elements projecting to the identity) and `π°` has the
//! canonical form of the unsigned projection `π′`.
//!
//! For a non-elementary `π′` the decomposition is done per elementary
//! factor: each `w_L` of the form is attached to one factor, each factor
//! is decomposed in closed form, and the resulting w-sets are pushed to
//! the front through the factors to their left.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exchange::{conjugate_w_set, toggle};
use crate::factor::{factorize_elementary, maj, Factor};
use crate::ogs::{DnOgsForm, SnOgsForm, Term};
use crate::perm::SignedPerm;
use crate::word::{apply_w, right_multiply};

/// Alternating circle (t-run) and bullet (w-run) blocks of a canonical form.
///
/// There is always one more circle block than bullet blocks; a circle block
/// is empty when the form starts or ends with a w-run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    n: usize,
    circles: Vec<Vec<(usize, u32)>>,
    bullets: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// The number `μ` of circle blocks.
    pub fn mu(&self) -> usize {
        self.circles.len()
    }

    /// The circle blocks `π_1°, ..., π_μ°` as `(k, i)` pairs.
    pub fn circles(&self) -> &[Vec<(usize, u32)>] {
        &self.circles
    }

    /// The bullet blocks `π_1•, ..., π_{μ-1}•` as increasing w-indices.
    pub fn bullets(&self) -> &[Vec<usize>] {
        &self.bullets
    }

    /// The size `ν_α` of bullet block `α` (1-based).
    pub fn nu(&self, alpha: usize) -> usize {
        self.bullets[alpha - 1].len()
    }

    /// The number `r_α` of t-terms in circle blocks `1..=α`.
    pub fn r(&self, alpha: usize) -> usize {
        self.circles[..alpha].iter().map(Vec::len).sum()
    }

    /// The form the blocks were taken from.
    pub fn reassemble(&self) -> DnOgsForm {
        let mut terms: Vec<Term> = Vec::new();
        for (alpha, circle) in self.circles.iter().enumerate() {
            terms.extend(circle.iter().map(|&(k, e)| Term::T { k, e }));
            if let Some(bullet) = self.bullets.get(alpha) {
                terms.extend(bullet.iter().map(|&l| Term::W(l)));
            }
        }
        DnOgsForm::from_terms(self.n, &terms).expect("blocks come from a valid form")
    }
}

/// Splits a canonical form into its alternating circle and bullet blocks.
///
/// ```
/// use dn_ogs::{blocks::block_decompose, text::parse_word, exchange::normalize_mixed_word};
///
/// let form = normalize_mixed_word(&parse_word("w1*w2", 3).unwrap());
/// let blocks = block_decompose(&form);
/// assert_eq!(blocks.mu(), 2);
/// assert_eq!(blocks.bullets(), &[vec![1, 2]]);
/// ```
pub fn block_decompose(form: &DnOgsForm) -> BlockDecomposition {
    let mut circles = vec![Vec::new()];
    let mut bullets: Vec<Vec<usize>> = Vec::new();
    for term in form.support_terms() {
        match term {
            Term::T { k, e } => {
                if circles.len() == bullets.len() {
                    circles.push(Vec::new());
                }
                circles.last_mut().unwrap().push((k, e));
            }
            Term::W(l) => {
                if bullets.len() < circles.len() {
                    bullets.push(Vec::new());
                }
                bullets.last_mut().unwrap().push(l);
            }
        }
    }
    if circles.len() == bullets.len() {
        circles.push(Vec::new());
    }
    BlockDecomposition {
        n: form.rank(),
        circles,
        bullets,
    }
}

/// Statistics of one bullet block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockStat {
    /// The block index `α`, 1-based.
    pub alpha: usize,
    /// `maj_α(π)`, the major index of `π_1° ··· π_α°`.
    pub maj: usize,
    /// `ρ_α(π) = maj(π′) - maj_α(π)`.
    pub rho: i64,
    /// `(L, ϱ_L(π))` for each `w_L` of the block, where `ϱ_L = L - ρ_α` if
    /// `L ≥ maj(π′)` and `ϱ_L = L` otherwise.
    pub varrho: Vec<(usize, i64)>,
}

/// Per-block statistics `maj_α`, `ρ_α` and `ϱ_L` for every bullet block.
///
/// Empty when there are no bullet blocks.
pub fn block_statistics(blocks: &BlockDecomposition) -> Vec<BlockStat> {
    let prefix_maj = |alpha: usize| -> usize {
        let pairs: Vec<(usize, u32)> = blocks.circles[..alpha].concat();
        maj(&SnOgsForm::from_terms(blocks.n, &pairs).expect("circle terms come from a form"))
    };
    let total = prefix_maj(blocks.mu()) as i64;
    (1..blocks.mu())
        .map(|alpha| {
            let maj_alpha = prefix_maj(alpha);
            let rho = total - maj_alpha as i64;
            let varrho = blocks.bullets[alpha - 1]
                .iter()
                .map(|&l| {
                    let v = if l as i64 >= total { l as i64 - rho } else { l as i64 };
                    (l, v)
                })
                .collect();
            BlockStat {
                alpha,
                maj: maj_alpha,
                rho,
                varrho,
            }
        })
        .collect()
}

/// The decomposition `π = (∏_{L ∈ w_indices} w_L) · π°`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BulletCircleDecomposition {
    w_indices: Vec<usize>,
    /// The canonical form of `π°`, equal to that of `π′`.
    circle: SnOgsForm,
}

impl BulletCircleDecomposition {
    /// Builds a decomposition from its parts; the w-indices are sorted and must be
    /// distinct and in `1..n`.
    pub fn new(mut w_indices: Vec<usize>, circle: SnOgsForm) -> Result<Self> {
        w_indices.sort_unstable();
        let n = circle.rank();
        for (i, &l) in w_indices.iter().enumerate() {
            if !(1..n).contains(&l) {
                return Err(Error::IndexOutOfRange {
                    what: "w",
                    index: l,
                    n,
                });
            }
            if i > 0 && w_indices[i - 1] == l {
                return Err(Error::ExponentOutOfRange {
                    what: format!("w{l}"),
                    exp: 2,
                });
            }
        }
        Ok(BulletCircleDecomposition { w_indices, circle })
    }

    /// Increasing, distinct w-indices of `π•`.
    pub fn w_indices(&self) -> &[usize] {
        &self.w_indices
    }

    /// The circle part, whose form equals that of `π′`.
    pub fn circle(&self) -> &SnOgsForm {
        &self.circle
    }

    /// The element `π•`.
    pub fn bullet_element(&self) -> SignedPerm {
        let mut images: Vec<i32> = (1..=self.circle.rank() as i32).collect();
        for &l in &self.w_indices {
            right_multiply(&mut images, |y| apply_w(l, y));
        }
        SignedPerm::from_images_unchecked(images)
    }

    /// The product `π•·π°`.
    pub fn element(&self) -> SignedPerm {
        self.bullet_element().then(&self.circle.realize())
    }
}

fn to_set(indices: &[usize]) -> BTreeSet<usize> {
    indices.iter().copied().collect()
}

/// `π•` of `ws · f` for an elementary factor `f` with the w-letters `ws`
/// interleaved at their canonical positions.
///
/// The w-letters group into maximal runs by the number `r` of terms of `f`
/// to their left. A run of odd length with `0 < maj_r < k_1`, where `maj_r`
/// is the exponent sum of the first `r` terms, contributes `w_{maj_r}`; all
/// the w-letters themselves are kept. An empty `f` keeps `ws` unchanged.
fn elementary_bullet(ws: &BTreeSet<usize>, f: &Factor) -> BTreeSet<usize> {
    let terms = f.terms();
    let mut out = ws.clone();
    let Some(k1) = f.first_k() else {
        return out;
    };
    let mut run_parity = vec![false; terms.len() + 1];
    for &l in ws {
        let r = terms.iter().take_while(|&&(k, _)| k <= l).count();
        run_parity[r] ^= true;
    }
    let mut maj_r = 0usize;
    for (r, &odd) in run_parity.iter().enumerate() {
        if r > 0 {
            maj_r += terms[r - 1].1 as usize;
        }
        if odd && maj_r > 0 && maj_r < k1 {
            toggle(&mut out, maj_r);
        }
    }
    out
}

/// Attaches each w-letter of `form` to one elementary factor of its projection.
///
/// `w_L` belongs to the last factor whose first index is at most `L`, or to
/// the first factor if there is none. A letter in the gap between factor
/// `v` and factor `v+1` moves to factor `v+1` when `L ≥ maj(π^{(v+1)})`.
/// Returns the factors with their attached w-sets; an identity projection
/// gives a single empty factor carrying every w-letter.
pub fn dotted_factors(form: &DnOgsForm) -> Vec<(BTreeSet<usize>, Factor)> {
    let factors = factorize_elementary(form.circle()).factors().to_vec();
    if factors.is_empty() {
        return vec![(to_set(&form.w_indices()), Factor::new(Vec::new()))];
    }
    let mut groups = vec![BTreeSet::new(); factors.len()];
    for l in form.w_indices() {
        let mut v = factors.iter().rposition(|f| f.first_k().unwrap() <= l).unwrap_or_default();
        if let Some(next) = factors.get(v + 1) {
            let in_gap = factors[v].last_k().unwrap() <= l && l < next.first_k().unwrap();
            if in_gap && l >= next.maj() {
                v += 1;
            }
        }
        groups[v].insert(l);
    }
    groups.into_iter().zip(factors).collect()
}

/// The bullet/circle decomposition of `form`.
///
/// ```
/// use dn_ogs::{blocks::bullet_circle_decompose, exchange::normalize_mixed_word, text::parse_word};
///
/// let w = parse_word("t10^4*w11*t12^2*w13*w14*w15*t16^3*t17", 17).unwrap();
/// let d = bullet_circle_decompose(&normalize_mixed_word(&w));
/// assert_eq!(d.w_indices(), &[4, 6, 11, 13, 14, 15]);
/// assert_eq!(d.circle().to_string(), "t10^4*t12^2*t16^3*t17");
/// ```
pub fn bullet_circle_decompose(form: &DnOgsForm) -> BulletCircleDecomposition {
    let dotted = dotted_factors(form);
    let mut front = BTreeSet::new();
    for (ws, f) in dotted.iter().rev() {
        let pushed = conjugate_w_set(f.terms(), &front);
        front = elementary_bullet(ws, f);
        for l in pushed {
            toggle(&mut front, l);
        }
    }
    BulletCircleDecomposition {
        w_indices: front.into_iter().collect(),
        circle: form.circle().clone(),
    }
}

/// Per-factor pieces `(W_v, π^{(v)})` with `π = ∏_v (∏_{L ∈ W_v} w_L) · π^{(v)}`,
/// arranged so the length of `π` is the sum of the lengths of the pieces.
///
/// Each factor is first decomposed in closed form. Then, from the last
/// factor down to the second, every `w_L` with `L < maj(π^{(v)})` is pushed
/// through the previous factor into its w-set.
pub fn length_factors(form: &DnOgsForm) -> Vec<(BTreeSet<usize>, Factor)> {
    let mut pieces: Vec<(BTreeSet<usize>, Factor)> = dotted_factors(form)
        .into_iter()
        .map(|(ws, f)| (elementary_bullet(&ws, &f), f))
        .collect();
    for v in (1..pieces.len()).rev() {
        let threshold = pieces[v].1.maj();
        let low: BTreeSet<usize> = pieces[v].0.iter().copied().filter(|&l| l < threshold).collect();
        if low.is_empty() {
            continue;
        }
        pieces[v].0.retain(|&l| l >= threshold);
        let pushed = conjugate_w_set(pieces[v - 1].1.terms(), &low);
        for l in pushed {
            toggle(&mut pieces[v - 1].0, l);
        }
    }
    pieces
}

/// The set `N(π)` of positions with negative image, for an element with elementary projection.
///
/// It contains `L + 1` for each `w_L` of `π•`, and `1` when `π•` has an odd
/// number of letters.
///
/// ```
/// use dn_ogs::{blocks::negation_set, exchange::normalize_mixed_word, text::parse_word};
///
/// let form = normalize_mixed_word(&parse_word("w4*t5^2*t6^2", 6).unwrap());
/// assert_eq!(negation_set(&form).unwrap(), vec![1, 5]);
/// ```
pub fn negation_set(form: &DnOgsForm) -> Result<Vec<usize>> {
    if !crate::factor::is_elementary(form.circle()) {
        return Err(Error::NotElementary(form.circle().to_string()));
    }
    let bullet = bullet_circle_decompose(form).w_indices().to_vec();
    let mut out: Vec<usize> = bullet.iter().map(|&l| l + 1).collect();
    if bullet.len() % 2 == 1 {
        out.insert(0, 1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::normalize_mixed_word;
    use crate::text::parse_word;

    fn form(text: &str, n: usize) -> DnOgsForm {
        normalize_mixed_word(&parse_word(text, n).unwrap())
    }

    #[test]
    fn blocks_of_a_mixed_form() {
        let f = form("t10^4*w11*t12^2*w13*w14*w15*t16^3*t17", 17);
        let b = block_decompose(&f);
        assert_eq!(b.circles(), &[vec![(10, 4)], vec![(12, 2)], vec![(16, 3), (17, 1)]]);
        assert_eq!(b.bullets(), &[vec![11], vec![13, 14, 15]]);
        assert_eq!((b.nu(2), b.r(2)), (3, 2));
        assert_eq!(b.reassemble(), f);
        let stats = block_statistics(&b);
        assert_eq!((stats[0].maj, stats[0].rho), (4, 6));
        assert_eq!((stats[1].maj, stats[1].rho), (6, 4));
        assert_eq!(stats[0].varrho, vec![(11, 5)]);
        assert_eq!(stats[1].varrho, vec![(13, 9), (14, 10), (15, 11)]);
    }

    #[test]
    fn degenerate_blocks() {
        let b = block_decompose(&form("t3^2", 4));
        assert_eq!((b.mu(), b.bullets().len()), (1, 0));
        assert!(block_statistics(&b).is_empty());
        let b = block_decompose(&DnOgsForm::identity(3).unwrap());
        assert_eq!(b.circles(), &[Vec::<(usize, u32)>::new()]);
    }

    #[test]
    fn split_power_decomposition() {
        let text = "t7^2*t9^2*t12^4*t14^7*w15*t16^4*t19^10*w20*t22^5*t23^4";
        let f = form(text, 23);
        assert_eq!(bullet_circle_decompose(&f).w_indices(), &[11, 14, 15, 20]);
        let pieces: Vec<Vec<usize>> = length_factors(&f)
            .into_iter()
            .map(|(ws, _)| ws.into_iter().collect())
            .collect();
        assert_eq!(pieces, vec![vec![11], vec![14, 15], vec![20]]);
    }

    #[test]
    fn negation_set_requires_elementary_projection() {
        assert_eq!(negation_set(&form("w2", 4)).unwrap(), vec![1, 3]);
        assert!(negation_set(&form("t3^2", 4)).unwrap().is_empty());
        assert!(negation_set(&form("t4^2*t5*t6^3*t9*t11^2", 11)).is_err());
    }
}
