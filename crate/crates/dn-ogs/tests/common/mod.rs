//! Independent brute-force oracle for the integration tests.
//!
//! Nothing here calls into the library's algorithms: permutations are plain
//! image vectors, generators are written down from their one-line formulas,
//! and lengths come from a separate breadth-first search.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use dn_ogs::SignedPerm;

/// One-line images `p[i-1] = π(i)`.
pub type Perm = Vec<i32>;

/// A letter of the test alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tok {
    /// `s_{1'}`.
    SPrime,
    /// `s_i`.
    S(usize),
    /// `t_k^e`, with `e` taken literally (any value).
    T(usize, u64),
    /// `w_L`.
    W(usize),
}

pub fn ev(p: &[i32], x: i32) -> i32 {
    let v = p[x.unsigned_abs() as usize - 1];
    if x < 0 {
        -v
    } else {
        v
    }
}

/// Left-to-right product: `i ↦ b(a(i))`.
pub fn compose(a: &[i32], b: &[i32]) -> Perm {
    a.iter().map(|&x| ev(b, x)).collect()
}

pub fn identity(n: usize) -> Perm {
    (1..=n as i32).collect()
}

pub fn inverse(a: &[i32]) -> Perm {
    let mut r = vec![0; a.len()];
    for (i, &v) in a.iter().enumerate() {
        let pos = i as i32 + 1;
        r[v.unsigned_abs() as usize - 1] = if v > 0 { pos } else { -pos };
    }
    r
}

pub fn s_prime(n: usize) -> Perm {
    let mut p = identity(n);
    p[0] = -2;
    p[1] = -1;
    p
}

pub fn s(i: usize, n: usize) -> Perm {
    let mut p = identity(n);
    p.swap(i - 1, i);
    p
}

/// `t_m = [m, 1, 2, ..., m-1, m+1, ..., n]`.
pub fn t(m: usize, n: usize) -> Perm {
    let mut p = identity(n);
    p[0] = m as i32;
    for j in 2..=m {
        p[j - 1] = j as i32 - 1;
    }
    p
}

/// `w_L`, negating positions 1 and `L+1`.
pub fn w(l: usize, n: usize) -> Perm {
    let mut p = identity(n);
    p[0] = -1;
    p[l] = -(l as i32 + 1);
    p
}

pub fn power(g: &[i32], e: u64) -> Perm {
    let mut r = identity(g.len());
    for _ in 0..e {
        r = compose(&r, g);
    }
    r
}

pub fn tok_perm(tok: Tok, n: usize) -> Perm {
    match tok {
        Tok::SPrime => s_prime(n),
        Tok::S(i) => s(i, n),
        Tok::T(k, e) => power(&t(k, n), e),
        Tok::W(l) => w(l, n),
    }
}

pub fn word(toks: &[Tok], n: usize) -> Perm {
    toks.iter()
        .fold(identity(n), |acc, &tok| compose(&acc, &tok_perm(tok, n)))
}

/// Text form of a token sequence in the library's word syntax.
pub fn word_text(toks: &[Tok]) -> String {
    if toks.is_empty() {
        return "e".into();
    }
    toks.iter()
        .map(|tok| match *tok {
            Tok::SPrime => "s1'".to_string(),
            Tok::S(i) => format!("s{i}"),
            Tok::T(k, e) => format!("t{k}^{e}"),
            Tok::W(l) => format!("w{l}"),
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// The canonical-form word `w_1^{j_1} t_2^{i_2} w_2^{j_2} ··· t_n^{i_n}`.
/// `j[L-1]` is `j_L` and `i[k-2]` is `i_k`.
pub fn form_word(j: &[u8], i: &[u32]) -> Vec<Tok> {
    let mut toks = Vec::new();
    for k in 2..=i.len() + 1 {
        if j[k - 2] == 1 {
            toks.push(Tok::W(k - 1));
        }
        if i[k - 2] > 0 {
            toks.push(Tok::T(k, i[k - 2] as u64));
        }
    }
    toks
}

/// All permutations of `1..=n`, by recursive insertion.
pub fn permutations(n: usize) -> Vec<Perm> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as i32);
            out.push(q);
        }
    }
    out
}

/// Every element of `D_n`.
pub fn all_dn(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    for p in permutations(n) {
        for mask in 0u32..1 << n {
            if mask.count_ones() % 2 == 0 {
                out.push(
                    p.iter()
                        .enumerate()
                        .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                        .collect(),
                );
            }
        }
    }
    out
}

/// Every exponent tuple `(j, i)` of rank `n`.
pub fn all_forms(n: usize) -> Vec<(Vec<u8>, Vec<u32>)> {
    let mut t_tuples: Vec<Vec<u32>> = vec![vec![]];
    for k in 2..=n as u32 {
        t_tuples = t_tuples
            .into_iter()
            .flat_map(|v| {
                (0..k).map(move |e| {
                    let mut v = v.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << (n - 1) {
        let j: Vec<u8> = (0..n - 1).map(|b| (mask >> b & 1) as u8).collect();
        for i in &t_tuples {
            out.push((j.clone(), i.clone()));
        }
    }
    out
}

/// Breadth-first distances in the Cayley graph of `D_n` over `s_{1'}, s_1, ..., s_{n-1}`.
pub fn bfs(n: usize) -> HashMap<Perm, u64> {
    let mut gens = vec![s_prime(n)];
    gens.extend((1..n).map(|i| s(i, n)));
    bfs_with(n, &gens)
}

/// Breadth-first distances in the Cayley graph of `S_n` over `s_1, ..., s_{n-1}`.
pub fn bfs_sn(n: usize) -> HashMap<Perm, u64> {
    let gens: Vec<Perm> = (1..n).map(|i| s(i, n)).collect();
    bfs_with(n, &gens)
}

fn bfs_with(n: usize, gens: &[Perm]) -> HashMap<Perm, u64> {
    let mut dist = HashMap::from([(identity(n), 0)]);
    let mut queue = VecDeque::from([identity(n)]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for g in gens {
            let y = compose(&x, g);
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Closure of `gens` under right multiplication.
pub fn closure(n: usize, gens: &[Perm]) -> HashSet<Perm> {
    bfs_with(n, gens).into_keys().collect()
}

/// The inversion + negative-pair statistic.
pub fn stat(p: &[i32]) -> u64 {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            c += u64::from(p[i] > p[j]) + u64::from(p[i] + p[j] < 0);
        }
    }
    c
}

pub fn inversions(p: &[i32]) -> u64 {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            c += u64::from(p[i] > p[j]);
        }
    }
    c
}

pub fn descents(p: &[i32]) -> Vec<usize> {
    (1..p.len()).filter(|&i| p[i - 1] > p[i]).collect()
}

pub fn abs(p: &[i32]) -> Perm {
    p.iter().map(|v| v.abs()).collect()
}

/// The w-indices of `π · |π|^{-1}`, the part of `π` projecting to the identity.
pub fn direct_bullet(p: &[i32]) -> Vec<usize> {
    let b = compose(p, &inverse(&abs(p)));
    (2..=p.len()).filter(|&k| b[k - 1] < 0).map(|k| k - 1).collect()
}

type Chunk = Vec<(usize, u32)>;

/// Every splitting of `pairs` into elementary chunks obeying the factorization
/// boundary chain, found by exhaustive search over unit exponent tokens.
pub fn brute_force_factorizations(pairs: &[(usize, u32)]) -> Vec<Vec<Chunk>> {
    let units: Vec<usize> = pairs
        .iter()
        .flat_map(|&(k, e)| std::iter::repeat_n(k, e as usize))
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    search(&units, 0, &mut current, &mut out);
    out.into_iter()
        .map(|chunks| chunks.into_iter().map(|c| to_pairs(&c)).collect())
        .collect()
}

fn to_pairs(units: &[usize]) -> Chunk {
    let mut out: Chunk = Vec::new();
    for &k in units {
        match out.last_mut() {
            Some((last, e)) if *last == k => *e += 1,
            _ => out.push((k, 1)),
        }
    }
    out
}

fn search(units: &[usize], start: usize, current: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    if start == units.len() {
        out.push(current.clone());
        return;
    }
    for end in start + 1..=units.len() {
        let chunk = &units[start..end];
        let maj = chunk.len();
        if maj > chunk[0] {
            break;
        }
        if let Some(prev) = current.last() {
            if *prev.last().unwrap() > maj {
                continue;
            }
        }
        current.push(chunk.to_vec());
        search(units, end, current, out);
        current.pop();
    }
}

pub fn lib_perm(p: &[i32]) -> SignedPerm {
    SignedPerm::new(p.to_vec()).unwrap()
}
