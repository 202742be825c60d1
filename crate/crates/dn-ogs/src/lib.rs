//! Canonical forms and Coxeter lengths for the Coxeter group `D_n`.
//!
//! Elements of `D_n` are modelled as even signed permutations of `±1..±n`
//! ([`SignedPerm`]). Every element has a unique *generalized standard OGS
//! canonical form*
//!
//! ```text
//! w_1^{j_1} · t_2^{i_2} · w_2^{j_2} · t_3^{i_3} ··· w_{n-1}^{j_{n-1}} · t_n^{i_n}
//! ```
//!
//! with `j_k ∈ {0, 1}` and `0 ≤ i_k < k`, where `t_m = s_1 s_2 ··· s_{m-1}` and
//! `w_L = s_L ··· s_2 s_1 s_{1'} s_2 ··· s_L`. The crate provides:
//!
//! - [`perm`] and [`word`]: signed permutations, generators and mixed words,
//!   multiplied left to right (`(a·b)(i) = b(a(i))`).
//! - [`ogs`]: conversion between elements and canonical forms.
//! - [`exchange`]: the closed-form exchange laws and a symbolic normalizer
//!   that rewrites any word into canonical form.
//! - [`factor`]: major index, elementary elements, elementary factorization,
//!   `S_n` lengths and normal forms.
//! - [`blocks`]: the block and bullet/circle decompositions `π = π•·π°` of
//!   `D_n` elements.
//! - [`length`]: Coxeter lengths and reduced normal forms of `D_n` elements.
//! - [`oracle`]: brute-force enumeration, Cayley-graph distances, subgroup
//!   membership and the `verify` suites.
//! - [`text`]: the textual word, form and permutation syntax.
//!
//! ```
//! use dn_ogs::{ogs::DnOgsForm, perm::SignedPerm, text::parse_word, exchange::normalize_mixed_word};
//!
//! let word = parse_word("w1*t2*t3^2*w3*t4", 4).unwrap();
//! let form = normalize_mixed_word(&word);
//! assert_eq!(form.to_string(), "w1*t2*t3^2*w3*t4");
//! assert_eq!(form.realize(), SignedPerm::new(vec![-2, -1, -4, -3]).unwrap());
//! assert_eq!(DnOgsForm::extract(&form.realize()).unwrap(), form);
//! ```

pub mod blocks;
pub mod error;
pub mod exchange;
pub mod factor;
pub mod length;
pub mod ogs;
pub mod oracle;
pub mod perm;
pub mod text;
pub mod word;

pub use error::{Error, Result};
pub use ogs::{DnOgsForm, SnOgsForm, Term};
pub use perm::SignedPerm;
pub use word::{CoxeterLetter, CoxeterWord, Letter, MixedWord};
