//! Brute-force oracles, subgroup membership and the `verify` suites.
//!
//! The oracles here do not use the closed-form machinery: elements are
//! enumerated directly, lengths come from breadth-first search over the
//! Cayley graph, and subgroups are generated by closure.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::blocks::{bullet_circle_decompose, dotted_factors, negation_set};
use crate::error::{Error, Result};
use crate::exchange::{
    conjugate_t_w, conjugate_w, exchange_tt, exchange_tw, exchange_wt, normalize_mixed_word,
    slide_w_through_run,
};
use crate::factor::is_elementary;
use crate::length::{dn_length, dn_normal_form};
use crate::ogs::{is_canonical_order, DnOgsForm, SnOgsForm, Term};
use crate::perm::{check_rank, SignedPerm};
use crate::word::{generator_permutation, w_generator, CoxeterLetter, Letter, MixedWord};

/// Largest rank accepted by [`enumerate_dn`] and [`enumerate_dn_forms`].
pub const MAX_ENUMERATION_RANK: usize = 7;
/// Largest rank accepted by [`bfs_length_table`].
pub const MAX_BFS_RANK: usize = 6;

fn guard(what: &'static str, n: usize, max: usize) -> Result<()> {
    check_rank(n)?;
    if n > max {
        return Err(Error::RankTooLarge { what, n, max });
    }
    Ok(())
}

/// `|D_n| = 2^{n-1} · n!`.
pub fn dn_order(n: usize) -> u64 {
    (1..=n as u64).product::<u64>() << (n - 1)
}

/// Every element of `D_n` exactly once: each permutation with each even sign pattern.
pub fn enumerate_dn(n: usize) -> Result<Vec<SignedPerm>> {
    guard("enumerate_dn", n, MAX_ENUMERATION_RANK)?;
    let mut out = Vec::with_capacity(dn_order(n) as usize);
    for perm in (1..=n as i32).permutations(n) {
        for mask in 0u32..1 << n {
            if mask.count_ones() % 2 == 1 {
                continue;
            }
            let images = perm
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPerm::from_images_unchecked(images));
        }
    }
    Ok(out)
}

/// Every canonical form of rank `n`, i.e. all `2^{n-1} · n!` exponent tuples.
pub fn enumerate_dn_forms(n: usize) -> Result<Vec<DnOgsForm>> {
    guard("enumerate_dn_forms", n, MAX_ENUMERATION_RANK)?;
    let t_ranges = (2..=n as u32).map(|k| 0..k).multi_cartesian_product();
    let t_tuples: Vec<Vec<u32>> = t_ranges.collect();
    let mut out = Vec::with_capacity(dn_order(n) as usize);
    for mask in 0u32..1 << (n - 1) {
        let w: Vec<u8> = (0..n - 1).map(|i| (mask >> i & 1) as u8).collect();
        for t in &t_tuples {
            out.push(DnOgsForm::new(n, w.clone(), t.clone())?);
        }
    }
    Ok(out)
}

/// Breadth-first distances from the identity in the Cayley graph of `D_n`.
#[derive(Clone, Debug)]
pub struct LengthTable {
    n: usize,
    distances: HashMap<SignedPerm, u64>,
}

impl LengthTable {
    /// The rank.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Number of elements, `|D_n|`.
    pub fn len(&self) -> usize {
        self.distances.len()
    }

    /// Always false: the identity is present.
    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    /// The distance of `a`, or `None` if `a` is not in `D_n` of this rank.
    pub fn get(&self, a: &SignedPerm) -> Option<u64> {
        self.distances.get(a).copied()
    }

    /// All `(element, distance)` pairs in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (&SignedPerm, u64)> {
        self.distances.iter().map(|(k, &v)| (k, v))
    }
}

/// The Coxeter generators `s_{1'}, s_1, ..., s_{n-1}` of `D_n`.
pub fn coxeter_generators(n: usize) -> Result<Vec<SignedPerm>> {
    check_rank(n)?;
    let mut gens = vec![generator_permutation(CoxeterLetter::SPrime, n)?];
    for i in 1..n {
        gens.push(generator_permutation(CoxeterLetter::S(i), n)?);
    }
    Ok(gens)
}

/// Cayley-graph distances for every element of `D_n`, `n ≤ 6`.
///
/// ```
/// use dn_ogs::oracle::bfs_length_table;
/// use dn_ogs::word::w_generator;
///
/// let table = bfs_length_table(4).unwrap();
/// assert_eq!(table.len(), 192);
/// assert_eq!(table.get(&w_generator(3, 4).unwrap()), Some(6));
/// ```
pub fn bfs_length_table(n: usize) -> Result<LengthTable> {
    guard("bfs_length_table", n, MAX_BFS_RANK)?;
    let gens = coxeter_generators(n)?;
    let identity = SignedPerm::identity(n)?;
    let mut distances = HashMap::with_capacity(dn_order(n) as usize);
    distances.insert(identity.clone(), 0);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        let d = distances[&x];
        for g in &gens {
            let y = x.then(g);
            if !distances.contains_key(&y) {
                distances.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    Ok(LengthTable { n, distances })
}

/// `#{i < j : a(i) > a(j)} + #{i < j : a(i) + a(j) < 0}`.
///
/// This equals the Coxeter length on `D_n`; the claim is checked against
/// [`bfs_length_table`] exhaustively for `n ≤ 6` by the test suite.
///
/// ```
/// use dn_ogs::{oracle::statistic_length, SignedPerm};
///
/// assert_eq!(statistic_length(&SignedPerm::new(vec![-1, -2]).unwrap()).unwrap(), 2);
/// ```
pub fn statistic_length(a: &SignedPerm) -> Result<u64> {
    if !a.is_d_element() {
        return Err(Error::NotInD(a.to_string()));
    }
    let v = a.images();
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            count += u64::from(v[i] > v[j]) + u64::from(v[i] + v[j] < 0);
        }
    }
    Ok(count)
}

/// True iff the form has no w-letters, i.e. lies in the t-generated copy of `S_n`.
pub fn is_in_s_circle(form: &DnOgsForm) -> bool {
    form.w_indices().is_empty()
}

/// True iff the form has no t-letters, i.e. lies in `Id•_n`.
pub fn is_in_id_bullet(form: &DnOgsForm) -> bool {
    form.circle().is_identity()
}

/// The w-indices `{k - 1 : a(k) = -k, k ≥ 2}` of an element projecting to the identity.
///
/// ```
/// use dn_ogs::{oracle::id_bullet_from_negations, SignedPerm};
///
/// let a = SignedPerm::new(vec![1, -2, -3, 4]).unwrap();
/// assert_eq!(id_bullet_from_negations(&a).unwrap(), vec![1, 2]);
/// ```
pub fn id_bullet_from_negations(a: &SignedPerm) -> Result<Vec<usize>> {
    if !a.phi().is_identity() || !a.is_d_element() {
        return Err(Error::NotInIdBullet(a.to_string()));
    }
    Ok((2..=a.rank()).filter(|&k| a.images()[k - 1] < 0).map(|k| k - 1).collect())
}

/// Every element of `Id•_n`, the `2^{n-1}` products of distinct `w_L`.
pub fn id_bullet_elements(n: usize) -> Result<Vec<SignedPerm>> {
    guard("id_bullet_elements", n, 20)?;
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u32..1 << (n - 1) {
        let w: Vec<u8> = (0..n - 1).map(|i| (mask >> i & 1) as u8).collect();
        out.push(DnOgsForm::new(n, w, vec![0; n - 1])?.realize());
    }
    Ok(out)
}

/// Membership in the parabolic subgroup `⟨s_{1'}, s_2, ..., s_{n-1}⟩`.
///
/// Factorizing the projection, the w-letters attached to each factor must
/// be exactly `{maj}` when the factor's major index is below its first
/// index, and empty when they are equal.
///
/// ```
/// use dn_ogs::{exchange::normalize_mixed_word, oracle::is_in_s_prime, text::parse_word};
///
/// let form = normalize_mixed_word(&parse_word("w3*t4^2*t5*t6^3*t9*t11^2", 11).unwrap());
/// assert!(is_in_s_prime(&form));
/// ```
pub fn is_in_s_prime(form: &DnOgsForm) -> bool {
    dotted_factors(form).iter().all(|(ws, f)| match f.first_k() {
        None => ws.is_empty(),
        Some(k1) if f.maj() < k1 => ws.len() == 1 && ws.contains(&f.maj()),
        Some(_) => ws.is_empty(),
    })
}

/// The generators `s_{1'}, s_2, ..., s_{n-1}` of the second parabolic copy of `S_n`.
pub fn s_prime_generators(n: usize) -> Result<Vec<SignedPerm>> {
    check_rank(n)?;
    let mut gens = vec![generator_permutation(CoxeterLetter::SPrime, n)?];
    for i in 2..n {
        gens.push(generator_permutation(CoxeterLetter::S(i), n)?);
    }
    Ok(gens)
}

/// The subgroup generated by `gens`, by breadth-first closure under right multiplication.
pub fn subgroup_closure(n: usize, gens: &[SignedPerm]) -> Result<HashSet<SignedPerm>> {
    guard("subgroup_closure", n, MAX_ENUMERATION_RANK)?;
    if let Some(g) = gens.iter().find(|g| g.rank() != n) {
        return Err(Error::RankMismatch {
            left: n,
            right: g.rank(),
        });
    }
    let identity = SignedPerm::identity(n)?;
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// The embedded copy of `B_m`: all elements `w_1^{j_1} · t_2^{i_2} ··· t_m^{i_m} · w_m^{j_m}`.
///
/// Requires `1 ≤ m < n ≤ 6`.
pub fn bm_subgroup_elements(m: usize, n: usize) -> Result<BTreeSet<SignedPerm>> {
    guard("bm_subgroup_elements", n, MAX_BFS_RANK)?;
    if !(1..n).contains(&m) {
        return Err(Error::IndexOutOfRange { what: "m", index: m, n });
    }
    let mut out = BTreeSet::new();
    let t_tuples = (2..=m as u32).map(|k| 0..k).multi_cartesian_product();
    let t_tuples: Vec<Vec<u32>> = if m == 1 { vec![vec![]] } else { t_tuples.collect() };
    for mask in 0u32..1 << m {
        let mut w = vec![0u8; n - 1];
        for (i, slot) in w.iter_mut().take(m).enumerate() {
            *slot = (mask >> i & 1) as u8;
        }
        for t in &t_tuples {
            let mut exps = t.clone();
            exps.resize(n - 1, 0);
            out.insert(DnOgsForm::new(n, w.clone(), exps)?.realize());
        }
    }
    Ok(out)
}

/// The canonical generators `w_1, ..., w_m, t_2, ..., t_m` of the embedded `B_m`.
pub fn bm_generators(m: usize, n: usize) -> Result<Vec<SignedPerm>> {
    let mut gens = Vec::new();
    for l in 1..=m {
        gens.push(w_generator(l, n)?);
    }
    for k in 2..=m {
        gens.push(crate::word::t_generator(k, n)?);
    }
    Ok(gens)
}

/// A named verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Canonical forms are in bijection with `D_n` and extraction inverts realization.
    Bijection,
    /// Every exchange law and conjugation lemma is sound at rank `n`.
    ExchangeLaws,
    /// `dn_length` and the normal form agree with Cayley-graph distances.
    Length,
    /// The bullet/circle decomposition reproduces every element.
    Decomposition,
    /// Subgroup orders, closure and membership predicates.
    Subgroups,
}

impl Suite {
    /// All suites in a fixed order.
    pub const ALL: [Suite; 5] = [
        Suite::Bijection,
        Suite::ExchangeLaws,
        Suite::Length,
        Suite::Decomposition,
        Suite::Subgroups,
    ];

    /// The suite name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::ExchangeLaws => "exchange-laws",
            Suite::Length => "length",
            Suite::Decomposition => "decomposition",
            Suite::Subgroups => "subgroups",
        }
    }

    /// The largest rank the suite accepts.
    pub fn max_rank(self) -> usize {
        match self {
            Suite::Bijection | Suite::Decomposition => MAX_ENUMERATION_RANK,
            Suite::ExchangeLaws => 8,
            Suite::Length | Suite::Subgroups => MAX_BFS_RANK,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Outcome of a verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub n: usize,
    /// Number of individual checks performed.
    pub checked: u64,
    /// Descriptions of the first failures, at most [`VerifyReport::MAX_FAILURES`].
    pub failures: Vec<String>,
}

impl VerifyReport {
    /// Cap on the number of recorded failures.
    pub const MAX_FAILURES: usize = 20;

    /// True iff no check failed.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker {
    checked: u64,
    failures: Vec<String>,
}

impl Checker {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < VerifyReport::MAX_FAILURES {
            self.failures.push(describe());
        }
    }
}

/// Runs the named suite at rank `n`.
///
/// ```
/// use dn_ogs::oracle::verify_suite;
///
/// let report = verify_suite(4, "bijection").unwrap();
/// assert!(report.passed());
/// ```
pub fn verify_suite(n: usize, suite: &str) -> Result<VerifyReport> {
    let suite: Suite = suite.parse()?;
    guard("verify_suite", n, suite.max_rank())?;
    let mut c = Checker {
        checked: 0,
        failures: Vec::new(),
    };
    match suite {
        Suite::Bijection => verify_bijection(n, &mut c)?,
        Suite::ExchangeLaws => verify_exchange_laws(n, &mut c)?,
        Suite::Length => verify_length(n, &mut c)?,
        Suite::Decomposition => verify_decomposition(n, &mut c)?,
        Suite::Subgroups => verify_subgroups(n, &mut c)?,
    }
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        n,
        checked: c.checked,
        failures: c.failures,
    })
}

fn verify_bijection(n: usize, c: &mut Checker) -> Result<()> {
    let forms = enumerate_dn_forms(n)?;
    let mut seen = HashSet::with_capacity(forms.len());
    for form in &forms {
        let a = form.realize();
        c.check(a.is_d_element(), || format!("{form} realizes {a}, not in D_{n}"));
        c.check(seen.insert(a.clone()), || format!("{form} realizes the repeated element {a}"));
        let back = DnOgsForm::extract(&a);
        c.check(back.as_ref() == Ok(form), || format!("extract({a}) = {back:?}, expected {form}"));
        let phi = SnOgsForm::extract(&a.phi());
        c.check(phi.as_ref() == Ok(form.circle()), || format!("phi of {form} has form {phi:?}"));
    }
    c.check(seen.len() as u64 == dn_order(n), || {
        format!("{} distinct elements, expected {}", seen.len(), dn_order(n))
    });
    Ok(())
}

fn terms_perm(n: usize, terms: &[Term]) -> Result<SignedPerm> {
    let letters = terms.iter().map(|t| t.letter()).collect();
    Ok(MixedWord::new(n, letters)?.evaluate())
}

fn letters_perm(n: usize, letters: &[Letter]) -> Result<SignedPerm> {
    Ok(MixedWord::new(n, letters.to_vec())?.evaluate())
}

fn verify_exchange_laws(n: usize, c: &mut Checker) -> Result<()> {
    let t = |k: usize, e: u32| Term::T { k, e };
    for q in 3..=n {
        for p in 2..q {
            for iq in 1..q as u32 {
                for ip in 1..p as u32 {
                    let rhs = exchange_tt(q, iq, p, ip)?;
                    let lhs = terms_perm(n, &[t(q, iq), t(p, ip)])?;
                    c.check(lhs == terms_perm(n, &rhs)?, || {
                        format!("t{q}^{iq}*t{p}^{ip} != {rhs:?}")
                    });
                    let collapsed = q - iq as usize == p || q - iq as usize == ip as usize;
                    c.check(
                        is_canonical_order(&rhs) && rhs.len() <= 3 && (rhs.len() == 2) == collapsed,
                        || format!("t{q}^{iq}*t{p}^{ip} rewrites to the malformed {rhs:?}"),
                    );
                }
            }
        }
    }
    for q in 2..=n {
        for iq in 1..q as u32 {
            for p in 1..n {
                let lhs = terms_perm(n, &[t(q, iq), Term::W(p)])?;
                let ws = conjugate_t_w(q, iq, p)?;
                let mut rhs: Vec<Term> = ws.iter().map(|&l| Term::W(l)).collect();
                rhs.push(t(q, iq));
                c.check(lhs == terms_perm(n, &rhs)?, || format!("t{q}^{iq}*w{p} != {rhs:?}"));
                if p < q {
                    let law = exchange_tw(q, iq, p)?;
                    c.check(is_canonical_order(&law) && law == rhs, || {
                        format!("exchange_tw({q},{iq},{p}) = {law:?}")
                    });
                }
            }
        }
    }
    for q in 2..n {
        for p in 2..=q {
            for ip in 1..p as u32 {
                let rhs = exchange_wt(q, p, ip)?;
                let lhs = terms_perm(n, &[Term::W(q), t(p, ip)])?;
                c.check(lhs == terms_perm(n, &rhs)?, || format!("w{q}*t{p}^{ip} != {rhs:?}"));
            }
        }
    }
    for q in 1..n {
        c.check(terms_perm(n, &[Term::W(q), Term::W(q)])?.is_identity(), || {
            format!("w{q}^2 is not the identity")
        });
        for p in 1..n {
            let a = terms_perm(n, &[Term::W(q), Term::W(p)])?;
            let b = terms_perm(n, &[Term::W(p), Term::W(q)])?;
            c.check(a == b, || format!("w{q} and w{p} do not commute"));
        }
    }
    let letters: Vec<CoxeterLetter> = std::iter::once(CoxeterLetter::SPrime)
        .chain((1..n).map(CoxeterLetter::S))
        .collect();
    for l in 1..n {
        for &s in &letters {
            if let Ok((s2, l2)) = conjugate_w(l, s) {
                let lhs = letters_perm(n, &[Letter::W(l), Letter::Coxeter(s)])?;
                let rhs = letters_perm(n, &[Letter::Coxeter(s2), Letter::W(l2)])?;
                c.check(lhs == rhs, || format!("w{l}*{s} != {s2}*w{l2}"));
            }
        }
        for r in 0..l.saturating_sub(1) {
            let (run, l2) = slide_w_through_run(l, r)?;
            let mut lhs = vec![Letter::W(l)];
            lhs.extend(run.iter().map(|&s| Letter::Coxeter(s)));
            let mut rhs: Vec<Letter> = run.iter().map(|&s| Letter::Coxeter(s)).collect();
            rhs.push(Letter::W(l2));
            c.check(letters_perm(n, &lhs)? == letters_perm(n, &rhs)?, || {
                format!("sliding w{l} through a run of length {} fails", r + 1)
            });
        }
    }
    Ok(())
}

fn verify_length(n: usize, c: &mut Checker) -> Result<()> {
    let table = bfs_length_table(n)?;
    for (a, d) in table.iter() {
        let form = DnOgsForm::extract(a)?;
        let len = dn_length(&form);
        c.check(len == d, || format!("dn_length({form}) = {len}, distance {d}"));
        let word = dn_normal_form(&form);
        c.check(word.len() as u64 == d && word.evaluate(n)? == *a, || {
            format!("normal form {word} of {a} is wrong")
        });
        let stat = statistic_length(a)?;
        c.check(stat == d, || format!("statistic({a}) = {stat}, distance {d}"));
    }
    Ok(())
}

fn verify_decomposition(n: usize, c: &mut Checker) -> Result<()> {
    for a in enumerate_dn(n)? {
        let form = DnOgsForm::extract(&a)?;
        let d = bullet_circle_decompose(&form);
        c.check(d.element() == a, || format!("bullet/circle of {form} does not multiply back"));
        c.check(d.bullet_element().phi().is_identity(), || {
            format!("bullet part of {form} is not in Id•")
        });
        c.check(SnOgsForm::extract(&a.phi()).as_ref() == Ok(d.circle()), || {
            format!("circle part of {form} differs from its projection")
        });
        if is_elementary(form.circle()) {
            let negated: Vec<usize> = (1..=n).filter(|&x| a.images()[x - 1] < 0).collect();
            let set = negation_set(&form)?;
            c.check(set == negated, || format!("N({form}) = {set:?}, negatives {negated:?}"));
        }
    }
    Ok(())
}

fn verify_subgroups(n: usize, c: &mut Checker) -> Result<()> {
    let factorial: u64 = (1..=n as u64).product();
    let s_prime = subgroup_closure(n, &s_prime_generators(n)?)?;
    c.check(s_prime.len() as u64 == factorial, || {
        format!("S' closure has {} elements, expected {factorial}", s_prime.len())
    });
    for a in enumerate_dn(n)? {
        let form = DnOgsForm::extract(&a)?;
        let member = is_in_s_prime(&form);
        c.check(member == s_prime.contains(&a), || {
            format!("is_in_s_prime({form}) = {member} disagrees with closure")
        });
        c.check(is_in_s_circle(&form) == a.is_unsigned(), || {
            format!("is_in_s_circle({form}) disagrees with the signs of {a}")
        });
        c.check(is_in_id_bullet(&form) == a.phi().is_identity(), || {
            format!("is_in_id_bullet({form}) disagrees with the projection of {a}")
        });
    }
    let id_bullet = id_bullet_elements(n)?;
    let distinct: HashSet<&SignedPerm> = id_bullet.iter().collect();
    c.check(distinct.len() == 1 << (n - 1), || {
        format!("Id• has {} elements, expected {}", distinct.len(), 1 << (n - 1))
    });
    for a in &id_bullet {
        c.check(a.then(a).is_identity() && a.phi().is_identity(), || {
            format!("{a} in Id• is not an involution over the identity")
        });
        let ws = id_bullet_from_negations(a)?;
        let back = normalize_mixed_word(&MixedWord::new(n, ws.iter().map(|&l| Letter::W(l)).collect())?);
        c.check(back.realize() == *a, || format!("w-indices {ws:?} do not reproduce {a}"));
    }
    for m in 1..n {
        let elements = bm_subgroup_elements(m, n)?;
        let order = (1..=m as u64).product::<u64>() << m;
        c.check(elements.len() as u64 == order, || {
            format!("B_{m} in D_{n} has {} elements, expected {order}", elements.len())
        });
        let gens = bm_generators(m, n)?;
        let closed = gens.iter().all(|g| elements.contains(g))
            && elements.iter().all(|x| gens.iter().all(|g| elements.contains(&x.then(g))));
        c.check(closed, || format!("B_{m} in D_{n} is not closed"));
    }
    Ok(())
}
