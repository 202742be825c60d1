//! Text syntax for words and signed permutations.
//!
//! Words are terms separated by `*` or whitespace:
//!
//! ```text
//! word  := term (('*' | whitespace) term)*
//! term  := 'e' | "s1'" | 's0' | 's' index ('^' nat)? | 't' index ('^' nat)? | 'w' index ('^' nat)?
//! ```
//!
//! `s0` is an alias for `s1'`, `e` is the identity, and `s`/`w` letters only
//! accept the exponents 0 and 1. Permutations use one-line notation such as
//! `[-2,-1,-4,-3]`. Every input either parses or yields a [`ParseError`]
//! carrying a 1-based character column.

use thiserror::Error;

use crate::perm::SignedPerm;
use crate::word::{CoxeterLetter, Letter, MixedWord};

/// A syntax or range error at a 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error<T>(&self, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column,
            message: message.into(),
        })
    }

    fn skip_whitespace(&mut self) -> bool {
        let start = self.pos;
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
        self.pos > start
    }

    /// A decimal natural number, rejecting values that overflow `u64`.
    fn nat(&mut self, what: &str) -> Result<u64, ParseError> {
        let start = self.column();
        let mut value: u64 = 0;
        let mut digits = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            self.pos += 1;
            digits += 1;
            value = match value.checked_mul(10).and_then(|v| v.checked_add(d as u64)) {
                Some(v) => v,
                None => return self.error(start, format!("{what} is too large")),
            };
        }
        if digits == 0 {
            return self.error(start, format!("expected {what}"));
        }
        Ok(value)
    }
}

fn index(value: u64) -> usize {
    usize::try_from(value).unwrap_or(usize::MAX)
}

/// Parses a word at rank `n`, validating every index.
///
/// ```
/// use dn_ogs::text::parse_word;
///
/// assert_eq!(parse_word("w1*t2*t3^2*w3*t4", 4).unwrap().letters().len(), 5);
/// assert_eq!(parse_word("s1' s2 s1", 3).unwrap().letters().len(), 3);
/// assert_eq!(parse_word("t1", 4).unwrap_err().message, "t-index must be ≥ 2");
/// ```
pub fn parse_word(text: &str, n: usize) -> Result<MixedWord, ParseError> {
    if crate::perm::check_rank(n).is_err() {
        return Err(ParseError {
            column: 1,
            message: format!("rank {n} is outside the supported range 2..={}", crate::perm::MAX_RANK),
        });
    }
    let mut cur = Cursor::new(text);
    let mut letters = Vec::new();
    cur.skip_whitespace();
    if cur.peek().is_none() {
        return cur.error(cur.column(), "empty word (use `e` for the identity)");
    }
    loop {
        if let Some(letter) = parse_term(&mut cur, n)? {
            letters.push(letter);
        }
        let spaced = cur.skip_whitespace();
        match cur.peek() {
            None => break,
            Some('*') => {
                cur.bump();
                cur.skip_whitespace();
                if cur.peek().is_none() {
                    return cur.error(cur.column(), "expected a term after `*`");
                }
            }
            Some(_) if spaced => {}
            Some(c) => return cur.error(cur.column(), format!("unexpected character {c:?}")),
        }
    }
    Ok(MixedWord::new(n, letters).expect("indices validated while parsing"))
}

fn parse_term(cur: &mut Cursor, n: usize) -> Result<Option<Letter>, ParseError> {
    let start = cur.column();
    let head = match cur.bump() {
        Some(c) => c,
        None => return cur.error(start, "expected a term"),
    };
    match head {
        'e' => Ok(None),
        's' | 't' | 'w' => {
            let index_col = cur.column();
            let raw = cur.nat(&format!("{head}-index"))?;
            let prime = head == 's' && cur.peek() == Some('\'');
            if prime {
                cur.bump();
                if raw != 1 {
                    return cur.error(index_col, "only s1' carries a prime");
                }
            }
            let exp_col = cur.column();
            let exp = if cur.peek() == Some('^') {
                cur.bump();
                Some(cur.nat("exponent")?)
            } else {
                None
            };
            let k = index(raw);
            let letter = match head {
                's' => {
                    let c = if prime || k == 0 {
                        CoxeterLetter::SPrime
                    } else if k < n {
                        CoxeterLetter::S(k)
                    } else {
                        return cur.error(index_col, format!("s-index must be in 1..={}", n - 1));
                    };
                    Letter::Coxeter(c)
                }
                't' => {
                    if k < 2 {
                        return cur.error(index_col, "t-index must be ≥ 2");
                    }
                    if k > n {
                        return cur.error(index_col, format!("t-index must be ≤ {n}"));
                    }
                    return Ok(Some(Letter::T {
                        k,
                        exp: exp.unwrap_or(1),
                    }));
                }
                _ => {
                    if !(1..n).contains(&k) {
                        return cur.error(index_col, format!("w-index must be in 1..={}", n - 1));
                    }
                    Letter::W(k)
                }
            };
            match exp {
                None | Some(1) => Ok(Some(letter)),
                Some(0) => Ok(None),
                Some(_) => cur.error(exp_col, format!("{head}-letters only take the exponents 0 and 1")),
            }
        }
        c => cur.error(start, format!("unexpected character {c:?}")),
    }
}

/// Parses one-line notation `[a_1,...,a_n]`; whitespace around entries is allowed.
///
/// ```
/// use dn_ogs::text::parse_perm;
///
/// assert_eq!(parse_perm("[-2, -1, -4, -3]").unwrap().images(), &[-2, -1, -4, -3]);
/// assert!(parse_perm("[1,1]").is_err());
/// ```
pub fn parse_perm(text: &str) -> Result<SignedPerm, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_whitespace();
    if cur.bump() != Some('[') {
        return cur.error(1.max(cur.pos), "expected `[`");
    }
    let mut images = Vec::new();
    cur.skip_whitespace();
    if cur.peek() == Some(']') {
        return cur.error(cur.column(), "a permutation needs at least two entries");
    }
    loop {
        cur.skip_whitespace();
        let col = cur.column();
        let negative = cur.peek() == Some('-');
        if negative {
            cur.bump();
        }
        let magnitude = cur.nat("an integer")?;
        let value = i32::try_from(magnitude).map_err(|_| ParseError {
            column: col,
            message: "entry is too large".into(),
        })?;
        images.push(if negative { -value } else { value });
        cur.skip_whitespace();
        match cur.bump() {
            Some(',') => continue,
            Some(']') => break,
            Some(c) => return cur.error(cur.pos, format!("unexpected character {c:?}")),
            None => return cur.error(cur.column(), "expected `,` or `]`"),
        }
    }
    cur.skip_whitespace();
    if let Some(c) = cur.peek() {
        return cur.error(cur.column(), format!("unexpected character {c:?} after `]`"));
    }
    SignedPerm::new(images).map_err(|e| ParseError {
        column: 1,
        message: e.to_string(),
    })
}
