mod common;

use common::{compose, lib_perm, Perm, Tok};
use dn_ogs::word::{
    evaluate_word, generator_permutation, t_generator, w_coxeter_letters, w_generator, CoxeterLetter,
    CoxeterWord, Letter, MixedWord,
};
use dn_ogs::{Error, SignedPerm};
use proptest::prelude::*;

fn signed_perm(n: usize) -> impl Strategy<Value = Perm> {
    (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
        .prop_map(|(p, signs)| p.into_iter().zip(signs).map(|(v, neg)| if neg { -v } else { v }).collect())
}

fn triple() -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (2usize..=9).prop_flat_map(|n| (signed_perm(n), signed_perm(n), signed_perm(n)))
}

proptest! {
    #[test]
    fn compose_is_associative((a, b, c) in triple()) {
        let (a, b, c) = (lib_perm(&a), lib_perm(&b), lib_perm(&c));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn compose_matches_oracle((a, b, _) in triple()) {
        let got = lib_perm(&a).compose(&lib_perm(&b)).unwrap();
        let expected = compose(&a, &b);
        prop_assert_eq!(got.images(), expected.as_slice());
    }

    #[test]
    fn phi_is_a_homomorphism((a, b, _) in triple()) {
        let (a, b) = (lib_perm(&a), lib_perm(&b));
        prop_assert_eq!(a.compose(&b).unwrap().phi(), a.phi().compose(&b.phi()).unwrap());
    }

    #[test]
    fn inverse_is_two_sided((a, _, _) in triple()) {
        let a = lib_perm(&a);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
    }

    #[test]
    fn d_membership_is_closed((a, b, _) in triple()) {
        let (a, b) = (lib_perm(&a), lib_perm(&b));
        if a.is_d_element() && b.is_d_element() {
            prop_assert!(a.compose(&b).unwrap().is_d_element());
            prop_assert!(a.inverse().is_d_element());
        }
    }
}

fn coxeter(n: usize, letters: &[CoxeterLetter]) -> SignedPerm {
    let letters = letters.iter().map(|&c| Letter::Coxeter(c)).collect();
    MixedWord::new(n, letters).unwrap().evaluate()
}

fn order_is(n: usize, letters: &[CoxeterLetter], m: usize) -> bool {
    let repeated: Vec<CoxeterLetter> = letters.iter().copied().cycle().take(letters.len() * m).collect();
    coxeter(n, &repeated).is_identity()
}

#[test]
fn coxeter_relations_hold_up_to_rank_8() {
    use CoxeterLetter::{SPrime, S};
    for n in 2..=8 {
        assert!(order_is(n, &[SPrime], 2));
        for i in 1..n {
            assert!(order_is(n, &[S(i)], 2));
            assert!(order_is(n, &[SPrime, S(i)], if i == 2 { 3 } else { 2 }), "s1' s{i} at n={n}");
            for j in i + 1..n {
                let m = if j == i + 1 { 3 } else { 2 };
                assert!(order_is(n, &[S(i), S(j)], m), "s{i} s{j} at n={n}");
            }
        }
        for l in 1..n {
            let word = CoxeterWord::from_blocks(vec![w_coxeter_letters(l)]);
            assert_eq!(word.evaluate(n).unwrap(), w_generator(l, n).unwrap());
        }
    }
}

#[test]
fn generator_formulas() {
    assert_eq!(generator_permutation(CoxeterLetter::SPrime, 2).unwrap().images(), &[-2, -1]);
    assert_eq!(generator_permutation(CoxeterLetter::S(1), 2).unwrap().images(), &[2, 1]);
    assert_eq!(generator_permutation(CoxeterLetter::S(2), 4).unwrap().images(), &[1, 3, 2, 4]);
    assert_eq!(t_generator(4, 5).unwrap().images(), &[4, 1, 2, 3, 5]);
    assert_eq!(t_generator(3, 3).unwrap().images(), &[3, 1, 2]);
    assert_eq!(w_generator(1, 2).unwrap().images(), &[-1, -2]);
    assert_eq!(w_generator(2, 4).unwrap().images(), &[-1, 2, -3, 4]);
    for n in 2..=8 {
        for m in 2..=n {
            assert_eq!(t_generator(m, n).unwrap().images(), common::t(m, n).as_slice());
        }
        for l in 1..n {
            assert_eq!(w_generator(l, n).unwrap().images(), common::w(l, n).as_slice());
            assert!(w_generator(l, n).unwrap().phi().is_identity());
        }
    }
    assert!(matches!(generator_permutation(CoxeterLetter::S(3), 3), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn compose_and_inverse_examples() {
    let a = lib_perm(&[3, 1, 2]);
    assert_eq!(a.compose(&lib_perm(&[2, 1, 3])).unwrap(), lib_perm(&[3, 2, 1]));
    assert_eq!(a.inverse(), lib_perm(&[2, 3, 1]));
    assert_eq!(lib_perm(&[2, 1, 3]).inverse(), lib_perm(&[2, 1, 3]));
    assert_eq!(SignedPerm::identity(3).unwrap().compose(&a).unwrap(), a);
    assert!(matches!(a.compose(&lib_perm(&[1, 2])), Err(Error::RankMismatch { .. })));
}

#[test]
fn evaluate_word_examples() {
    let parse = |s: &str, n| dn_ogs::text::parse_word(s, n).unwrap();
    assert_eq!(evaluate_word(&parse("w1*t2*t3^2*w3*t4", 4)).images(), &[-2, -1, -4, -3]);
    assert!(evaluate_word(&MixedWord::empty(3).unwrap()).is_identity());
    assert_eq!(evaluate_word(&parse("s1'*s1", 2)), w_generator(1, 2).unwrap());
    let toks = [Tok::W(1), Tok::T(2, 1), Tok::T(3, 2), Tok::W(3), Tok::T(4, 1)];
    assert_eq!(common::word(&toks, 4), vec![-2, -1, -4, -3]);
}

#[test]
fn projection_and_membership_examples() {
    let a = lib_perm(&[2, -4, 1, -3]);
    assert_eq!(a.phi(), lib_perm(&[2, 4, 1, 3]));
    assert!(a.is_d_element());
    assert!(!lib_perm(&[-1, 2, 3]).is_d_element());
    assert!(SignedPerm::identity(5).unwrap().is_d_element());
}
