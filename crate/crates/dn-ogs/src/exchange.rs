//! Exchange laws between canonical generators and the symbolic normalizer.
//!
//! The laws rewrite a product of two canonical generator powers that appear
//! in the wrong order into canonical order:
//!
//! - `t_q^{i_q} · t_p^{i_p}` for `p < q` ([`exchange_tt`]);
//! - `t_q^{i_q} · w_p` for `p < q` ([`exchange_tw`]);
//! - `w_q · t_p^{i_p}` for `p ≤ q` ([`exchange_wt`]);
//! - `w_q · w_p = w_p · w_q` and `w_q² = 1`.
//!
//! [`normalize_mixed_word`] applies them until the word is the canonical form.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ogs::{format_terms, DnOgsForm, Term};
use crate::word::{CoxeterLetter, Letter, MixedWord};

fn precondition(law: &'static str, detail: String) -> Error {
    Error::LawPrecondition { law, detail }
}

/// Turns `(k, e)` pairs with nondecreasing `k` into canonical t-terms:
/// equal indices are merged, exponents reduced mod `k`, trivial terms dropped.
fn collect_t_terms(pairs: &[(usize, u64)]) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::new();
    for &(k, e) in pairs {
        if k < 2 {
            continue;
        }
        let e = e % k as u64;
        match out.last_mut() {
            Some(Term::T { k: last_k, e: last_e }) if *last_k == k => {
                *last_e = ((*last_e as u64 + e) % k as u64) as u32;
            }
            _ => out.push(Term::T { k, e: e as u32 }),
        }
    }
    out.retain(|t| !matches!(t, Term::T { e: 0, .. }));
    out
}

/// Rewrites `t_q^{i_q} · t_p^{i_p}` (`p < q`) into canonical order.
///
/// With `q - i_q ≥ p` the result is `t_{i_q+i_p}^{i_q} · t_{p+i_q}^{i_p} · t_q^{i_q}`;
/// with `i_p ≤ q - i_q ≤ p` it is `t_{i_q}^{p+i_q-q} · t_{i_q+i_p}^{q-p} · t_q^{i_q+i_p}`;
/// otherwise `t_{p+i_q-q}^{i_q+i_p-q} · t_{i_q}^{p-i_p} · t_q^{i_q+i_p-p}`.
/// Terms of index below 2 or with zero exponent are dropped and equal
/// indices merged, so the result has exactly two terms when `q - i_q = p`
/// or `q - i_q = i_p`. A zero exponent on either side returns the other term.
///
/// ```
/// use dn_ogs::exchange::exchange_tt;
/// use dn_ogs::ogs::{format_terms, Term};
///
/// assert_eq!(format_terms(&exchange_tt(3, 1, 2, 1).unwrap()), "t2*t3^2");
/// assert_eq!(format_terms(&exchange_tt(5, 2, 4, 2).unwrap()), "t2*t4*t5^4");
/// ```
pub fn exchange_tt(q: usize, iq: u32, p: usize, ip: u32) -> Result<Vec<Term>> {
    if !(p >= 2 && p < q) || iq as usize >= q || ip as usize >= p {
        return Err(precondition(
            "exchange_tt",
            format!("need 2 ≤ p < q, i_q < q, i_p < p; got q={q}, i_q={iq}, p={p}, i_p={ip}"),
        ));
    }
    if iq == 0 || ip == 0 {
        let mut terms = Vec::new();
        if ip > 0 {
            terms.push(Term::T { k: p, e: ip });
        }
        if iq > 0 {
            terms.push(Term::T { k: q, e: iq });
        }
        return Ok(terms);
    }
    let (q, iq, p, ip) = (q as u64, iq as u64, p as u64, ip as u64);
    let raw = if q - iq >= p {
        [(iq + ip, iq), (p + iq, ip), (q, iq)]
    } else if ip <= q - iq {
        [(iq, p + iq - q), (iq + ip, q - p), (q, iq + ip)]
    } else {
        [(p + iq - q, iq + ip - q), (iq, p - ip), (q, iq + ip - p)]
    };
    let pairs: Vec<(usize, u64)> = raw.iter().map(|&(k, e)| (k as usize, e)).collect();
    Ok(collect_t_terms(&pairs))
}

/// Rewrites `t_q^{i_q} · w_p` (`p < q`) into canonical order.
///
/// The result is `w_{i_q} · t_q^{i_q}` if `q = p + i_q`,
/// `w_{i_q} · w_{p+i_q} · t_q^{i_q}` if `q > p + i_q`, and
/// `w_{p+i_q-q} · w_{i_q} · t_q^{i_q}` if `q < p + i_q`. For `p ≥ q` the
/// product is already in canonical order and the call is rejected; see
/// [`conjugate_t_w`] for moving `w_p` to the left in that case.
///
/// ```
/// use dn_ogs::exchange::exchange_tw;
/// use dn_ogs::ogs::format_terms;
///
/// assert_eq!(format_terms(&exchange_tw(3, 1, 2).unwrap()), "w1*t3");
/// assert_eq!(format_terms(&exchange_tw(4, 3, 2).unwrap()), "w1*w3*t4^3");
/// ```
pub fn exchange_tw(q: usize, iq: u32, p: usize) -> Result<Vec<Term>> {
    if !(1..q).contains(&p) || iq == 0 || iq as usize >= q {
        return Err(precondition(
            "exchange_tw",
            format!("need 1 ≤ p < q and 1 ≤ i_q < q; got q={q}, i_q={iq}, p={p}"),
        ));
    }
    let mut terms: Vec<Term> = conjugate_t_w(q, iq, p)?.into_iter().map(Term::W).collect();
    terms.push(Term::T { k: q, e: iq });
    Ok(terms)
}

/// Rewrites `w_q · t_p^{i_p}` (`p ≤ q`) as `w_{i_p} · t_p^{i_p} · w_q`.
///
/// For `p > q` the product is already canonical and the call is rejected.
///
/// ```
/// use dn_ogs::exchange::exchange_wt;
/// use dn_ogs::ogs::format_terms;
///
/// assert_eq!(format_terms(&exchange_wt(5, 3, 2).unwrap()), "w2*t3^2*w5");
/// ```
pub fn exchange_wt(q: usize, p: usize, ip: u32) -> Result<Vec<Term>> {
    if !(p >= 2 && p <= q) || ip == 0 || ip as usize >= p {
        return Err(precondition(
            "exchange_wt",
            format!("need 2 ≤ p ≤ q and 1 ≤ i_p < p; got q={q}, p={p}, i_p={ip}"),
        ));
    }
    Ok(vec![Term::W(ip as usize), Term::T { k: p, e: ip }, Term::W(q)])
}

/// The w-indices `X` with `t_q^{i_q} · w_p = (∏_{L ∈ X} w_L) · t_q^{i_q}`, increasing.
///
/// For `p < q` these are the w-letters of [`exchange_tw`]. For `p ≥ q`
/// the identity `w_p · t_q^{i_q} = w_{i_q} · t_q^{i_q} · w_p` gives
/// `X = {i_q, p}`. A zero exponent gives `X = {p}`.
pub fn conjugate_t_w(q: usize, iq: u32, p: usize) -> Result<Vec<usize>> {
    if q < 2 || p == 0 || iq as usize >= q {
        return Err(precondition(
            "conjugate_t_w",
            format!("need q ≥ 2, p ≥ 1 and i_q < q; got q={q}, i_q={iq}, p={p}"),
        ));
    }
    let iq = iq as usize;
    if iq == 0 {
        return Ok(vec![p]);
    }
    Ok(if p >= q {
        vec![iq, p]
    } else if q == p + iq {
        vec![iq]
    } else if q > p + iq {
        vec![iq, p + iq]
    } else {
        vec![p + iq - q, iq]
    })
}

/// Toggles `l` in `set` (the group generated by the `w_L` is `Z_2^{n-1}`).
pub(crate) fn toggle(set: &mut BTreeSet<usize>, l: usize) {
    if !set.remove(&l) {
        set.insert(l);
    }
}

/// The w-index set `X` with `(∏ t_k^{i_k}) · (∏_{L ∈ S} w_L) = (∏_{L ∈ X} w_L) · (∏ t_k^{i_k})`.
///
/// `terms` are `(k, i_k)` pairs in product order; they need not be canonical.
///
/// ```
/// use std::collections::BTreeSet;
/// use dn_ogs::exchange::conjugate_w_set;
///
/// let x = conjugate_w_set(&[(5, 2), (6, 2)], &BTreeSet::from([6]));
/// assert_eq!(x, BTreeSet::from([4, 6]));
/// ```
pub fn conjugate_w_set(terms: &[(usize, u32)], set: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut current = set.clone();
    for &(k, e) in terms.iter().rev() {
        let mut next = BTreeSet::new();
        for &p in &current {
            let conj = conjugate_t_w(k, e % k as u32, p).expect("indices validated by caller");
            for l in conj {
                toggle(&mut next, l);
            }
        }
        current = next;
    }
    current
}

/// Moves a Coxeter letter across `w_L`: `w_L · s = s' · w_L`.
///
/// `s_1` and `s_{1'}` swap (for `L ≥ 2`), and `s_k` is unchanged for
/// `2 ≤ k ≤ L - 1`. The range `k ≥ L + 2`, where `s_k` and `w_L` have
/// disjoint support, is accepted as well.
///
/// ```
/// use dn_ogs::exchange::conjugate_w;
/// use dn_ogs::word::CoxeterLetter;
///
/// assert_eq!(conjugate_w(3, CoxeterLetter::S(1)).unwrap(), (CoxeterLetter::SPrime, 3));
/// assert_eq!(conjugate_w(4, CoxeterLetter::S(2)).unwrap(), (CoxeterLetter::S(2), 4));
/// ```
pub fn conjugate_w(l: usize, letter: CoxeterLetter) -> Result<(CoxeterLetter, usize)> {
    let out = match letter {
        CoxeterLetter::S(1) if l >= 2 => CoxeterLetter::SPrime,
        CoxeterLetter::SPrime if l >= 2 => CoxeterLetter::S(1),
        CoxeterLetter::S(k) if k >= 2 && (k < l || k >= l + 2) => letter,
        _ => {
            return Err(precondition(
                "conjugate_w",
                format!("w{l} does not commute with {letter} up to swapping s1 and s1'"),
            ))
        }
    };
    Ok((out, l))
}

/// Slides `w_j` through the run `π_{j,r} = s_j · s_{j-1} ··· s_{j-r}`:
/// `w_j · π_{j,r} = π_{j,r} · w_{j-r-1}`. Requires `j - r - 1 ≥ 1`.
///
/// ```
/// use dn_ogs::exchange::slide_w_through_run;
/// use dn_ogs::word::CoxeterLetter::S;
///
/// assert_eq!(slide_w_through_run(5, 2).unwrap(), (vec![S(5), S(4), S(3)], 2));
/// ```
pub fn slide_w_through_run(j: usize, r: usize) -> Result<(Vec<CoxeterLetter>, usize)> {
    if j < r + 2 {
        return Err(precondition(
            "slide_w_through_run",
            format!("need j - r - 1 ≥ 1; got j={j}, r={r}"),
        ));
    }
    let run = (j - r..=j).rev().map(CoxeterLetter::S).collect();
    Ok((run, j - r - 1))
}

/// Rewrites `π_1 · w_q` for an elementary block `π_1 = ∏ t_{k_x}^{i_{k_x}}` and `q ≥ k_m`.
///
/// The result is `w_q · π_1` when `maj(π_1) = k_1` and
/// `w_{maj(π_1)} · w_q · π_1` when `maj(π_1) < k_1`.
///
/// ```
/// use dn_ogs::exchange::push_w_left;
/// use dn_ogs::ogs::format_terms;
///
/// assert_eq!(format_terms(&push_w_left(&[(5, 2), (6, 2)], 6).unwrap()), "w4*w6*t5^2*t6^2");
/// assert_eq!(format_terms(&push_w_left(&[(5, 2), (6, 3)], 6).unwrap()), "w6*t5^2*t6^3");
/// ```
pub fn push_w_left(block: &[(usize, u32)], q: usize) -> Result<Vec<Term>> {
    let valid_terms = block
        .iter()
        .all(|&(k, e)| k >= 2 && e >= 1 && (e as usize) < k)
        && block.windows(2).all(|w| w[0].0 < w[1].0);
    if !valid_terms {
        return Err(precondition(
            "push_w_left",
            format!("block {block:?} is not a canonical t-term sequence"),
        ));
    }
    let maj: usize = block.iter().map(|&(_, e)| e as usize).sum();
    if let Some(&(k1, _)) = block.first() {
        if maj > k1 {
            return Err(Error::NotElementary(terms_text(block)));
        }
    }
    if q == 0 || block.last().is_some_and(|&(km, _)| q < km) {
        return Err(precondition(
            "push_w_left",
            format!("need q ≥ k_m; got q={q} for block {}", terms_text(block)),
        ));
    }
    let mut out: Vec<Term> = conjugate_w_set(block, &BTreeSet::from([q]))
        .into_iter()
        .map(Term::W)
        .collect();
    out.extend(block.iter().map(|&(k, e)| Term::T { k, e }));
    Ok(out)
}

fn terms_text(block: &[(usize, u32)]) -> String {
    let terms: Vec<Term> = block.iter().map(|&(k, e)| Term::T { k, e }).collect();
    format_terms(&terms)
}

/// Names of the rewrite rules recorded in a normalization trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `s_1 = t_2`.
    ExpandS1,
    /// `s_i = t_i^{i-1} · t_{i+1}` for `i ≥ 2`.
    ExpandS,
    /// `s_{1'} = w_1 · t_2`.
    ExpandS1Prime,
    /// A t-letter exponent reduced modulo its order, or dropped when it becomes zero.
    TReduce,
    /// `t_k^a · t_k^b = t_k^{(a+b) mod k}`.
    TMerge,
    /// [`exchange_tt`] with `q - i_q ≥ p`.
    ExchangeTt1,
    /// [`exchange_tt`] with `i_p ≤ q - i_q < p`.
    ExchangeTt2,
    /// [`exchange_tt`] with `q - i_q < i_p`.
    ExchangeTt3,
    /// [`exchange_tw`] with `q = p + i_q`.
    ExchangeTw1,
    /// [`exchange_tw`] with `q > p + i_q`.
    ExchangeTw2,
    /// [`exchange_tw`] with `q < p + i_q`.
    ExchangeTw3,
    /// [`exchange_wt`].
    ExchangeWt,
    /// `w_q · w_p = w_p · w_q`.
    CommuteWw,
    /// `w_L² = 1`.
    WSquare,
}

impl Rule {
    /// The kebab-case rule name used in traces.
    pub fn name(self) -> &'static str {
        match self {
            Rule::ExpandS1 => "expand-s1",
            Rule::ExpandS => "expand-s",
            Rule::ExpandS1Prime => "expand-s1-prime",
            Rule::TReduce => "t-reduce",
            Rule::TMerge => "t-merge",
            Rule::ExchangeTt1 => "exchange-tt-1",
            Rule::ExchangeTt2 => "exchange-tt-2",
            Rule::ExchangeTt3 => "exchange-tt-3",
            Rule::ExchangeTw1 => "exchange-tw-1",
            Rule::ExchangeTw2 => "exchange-tw-2",
            Rule::ExchangeTw3 => "exchange-tw-3",
            Rule::ExchangeWt => "exchange-wt",
            Rule::CommuteWw => "commute-ww",
            Rule::WSquare => "w-square",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One rewrite: the redex and its replacement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub before: String,
    pub after: String,
}

/// Normal-form accumulator: a stack of terms with strictly increasing positions.
///
/// Inserting a letter against the top either pushes it, merges it with a
/// top of equal position, or pops the top and schedules the exchange-law
/// right-hand side. Right-hand sides only contain terms whose positions are
/// at most the larger of the two inputs, so by induction on that position
/// every insertion terminates.
struct Normalizer<'a> {
    stack: Vec<Term>,
    pending: Vec<Term>,
    trace: Option<&'a mut Vec<TraceStep>>,
}

impl Normalizer<'_> {
    fn record(&mut self, rule: Rule, before: String, after: &[Term]) {
        if let Some(trace) = self.trace.as_deref_mut() {
            trace.push(TraceStep {
                rule,
                before,
                after: format_terms(after),
            });
        }
    }

    fn feed(&mut self, letter: Letter) {
        let (rule, expansion) = match letter {
            Letter::Coxeter(CoxeterLetter::S(1)) => (Some(Rule::ExpandS1), vec![Term::T { k: 2, e: 1 }]),
            Letter::Coxeter(CoxeterLetter::S(i)) => (
                Some(Rule::ExpandS),
                vec![Term::T { k: i, e: (i - 1) as u32 }, Term::T { k: i + 1, e: 1 }],
            ),
            Letter::Coxeter(CoxeterLetter::SPrime) => (
                Some(Rule::ExpandS1Prime),
                vec![Term::W(1), Term::T { k: 2, e: 1 }],
            ),
            Letter::T { k, exp } => {
                let e = (exp % k as u64) as u32;
                let terms = if e == 0 { vec![] } else { vec![Term::T { k, e }] };
                let rule = (exp >= k as u64 || exp == 0).then_some(Rule::TReduce);
                (rule, terms)
            }
            Letter::W(l) => (None, vec![Term::W(l)]),
        };
        if let Some(rule) = rule {
            self.record(rule, letter.to_string(), &expansion);
        }
        self.pending.extend(expansion.into_iter().rev());
        self.drain();
    }

    fn drain(&mut self) {
        while let Some(y) = self.pending.pop() {
            let Some(&top) = self.stack.last() else {
                self.stack.push(y);
                continue;
            };
            if y.position() > top.position() {
                self.stack.push(y);
                continue;
            }
            self.stack.pop();
            let before = format!("{top}*{y}");
            let (rule, rhs) = match (top, y) {
                (Term::W(_), Term::W(_)) if top == y => (Rule::WSquare, vec![]),
                (Term::T { k, e: a }, Term::T { e: b, .. }) if top.position() == y.position() => {
                    let e = ((a as u64 + b as u64) % k as u64) as u32;
                    let rhs = if e == 0 { vec![] } else { vec![Term::T { k, e }] };
                    (Rule::TMerge, rhs)
                }
                (Term::T { k: q, e: iq }, Term::T { k: p, e: ip }) => {
                    let rule = if q - iq as usize >= p {
                        Rule::ExchangeTt1
                    } else if ip as usize <= q - iq as usize {
                        Rule::ExchangeTt2
                    } else {
                        Rule::ExchangeTt3
                    };
                    (rule, exchange_tt(q, iq, p, ip).expect("positions give p < q"))
                }
                (Term::T { k: q, e: iq }, Term::W(p)) => {
                    let iq_us = iq as usize;
                    let rule = match q.cmp(&(p + iq_us)) {
                        std::cmp::Ordering::Equal => Rule::ExchangeTw1,
                        std::cmp::Ordering::Greater => Rule::ExchangeTw2,
                        std::cmp::Ordering::Less => Rule::ExchangeTw3,
                    };
                    (rule, exchange_tw(q, iq, p).expect("positions give p < q"))
                }
                (Term::W(q), Term::T { k: p, e: ip }) => {
                    (Rule::ExchangeWt, exchange_wt(q, p, ip).expect("positions give p ≤ q"))
                }
                (Term::W(_), Term::W(_)) => (Rule::CommuteWw, vec![y, top]),
            };
            self.record(rule, before, &rhs);
            self.pending.extend(rhs.into_iter().rev());
        }
    }
}

/// Rewrites a word into its canonical form using only the exchange laws.
///
/// The result equals `DnOgsForm::extract(&word.evaluate())`.
///
/// ```
/// use dn_ogs::exchange::normalize_mixed_word;
/// use dn_ogs::text::parse_word;
///
/// let form = normalize_mixed_word(&parse_word("t3*t2", 3).unwrap());
/// assert_eq!(form.to_string(), "t2*t3^2");
/// ```
pub fn normalize_mixed_word(word: &MixedWord) -> DnOgsForm {
    normalize(word, None)
}

/// [`normalize_mixed_word`] together with the sequence of rewrites applied.
pub fn normalize_with_trace(word: &MixedWord) -> (DnOgsForm, Vec<TraceStep>) {
    let mut trace = Vec::new();
    let form = normalize(word, Some(&mut trace));
    (form, trace)
}

fn normalize(word: &MixedWord, trace: Option<&mut Vec<TraceStep>>) -> DnOgsForm {
    let mut normalizer = Normalizer {
        stack: Vec::new(),
        pending: Vec::new(),
        trace,
    };
    for &letter in word.letters() {
        normalizer.feed(letter);
    }
    DnOgsForm::from_terms(word.rank(), &normalizer.stack)
        .expect("the normalizer emits each canonical slot at most once")
}
