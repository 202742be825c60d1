mod common;

use common::{all_forms, form_word, word};
use dn_ogs::factor::{
    factor_normal_form, factorize_elementary, is_elementary, maj, sn_descents, sn_length, sn_normal_form, Factor,
};
use dn_ogs::SnOgsForm;

fn sn_forms(n: usize) -> impl Iterator<Item = SnOgsForm> {
    all_forms(n)
        .into_iter()
        .filter(|(j, _)| j.iter().all(|&b| b == 0))
        .map(move |(_, i)| SnOgsForm::new(n, i).unwrap())
}

fn images(form: &SnOgsForm) -> Vec<i32> {
    let j = vec![0; form.rank() - 1];
    word(&form_word(&j, form.exponents()), form.rank())
}

#[test]
fn length_is_inversion_count_and_bfs_distance() {
    for n in 2..=7 {
        let bfs = common::bfs_sn(n);
        let mut count = 0;
        for f in sn_forms(n) {
            let p = images(&f);
            assert_eq!(sn_length(&f), common::inversions(&p), "{f}");
            assert_eq!(sn_length(&f), bfs[&p], "{f}");
            count += 1;
        }
        assert_eq!(count, bfs.len());
    }
}

#[test]
fn elementary_forms_have_a_single_descent_at_maj() {
    for n in 2..=7 {
        for f in sn_forms(n).filter(is_elementary) {
            let p = images(&f);
            let exp_sum: usize = f.exponents().iter().map(|&e| e as usize).sum();
            if f.is_identity() {
                assert!(common::descents(&p).is_empty());
            } else {
                assert_eq!(common::descents(&p), vec![exp_sum], "{f}");
            }
            assert_eq!(maj(&f), exp_sum);
        }
    }
}

#[test]
fn factorization_is_the_unique_admissible_splitting() {
    for n in 2..=7 {
        for f in sn_forms(n) {
            let fact = factorize_elementary(&f);
            assert!(fact.satisfies_constraints(), "{f}");
            assert_eq!(fact.reassemble(), f);
            let ours: Vec<Vec<(usize, u32)>> = fact.factors().iter().map(|x| x.terms().to_vec()).collect();
            let all = common::brute_force_factorizations(&f.pairs());
            assert_eq!(all, vec![ours], "{f}");
        }
    }
}

#[test]
fn descents_are_the_factor_majors() {
    for n in 2..=7 {
        for f in sn_forms(n) {
            assert_eq!(sn_descents(&f), common::descents(&images(&f)), "{f}");
        }
    }
}

#[test]
fn normal_form_is_reduced_and_evaluates_to_the_element() {
    for n in 2..=7 {
        for f in sn_forms(n) {
            let nf = sn_normal_form(&f);
            assert_eq!(nf.len() as u64, sn_length(&f));
            assert_eq!(nf.evaluate(n).unwrap(), f.realize(), "{f}: {nf}");
        }
    }
}

#[test]
fn grouping_terms_into_factors_is_strictly_subadditive() {
    // Each term alone has length e·(k-e); grouping loses Σ_{x≠y} e_x·e_y per factor.
    for n in 2..=7 {
        for f in sn_forms(n) {
            let fact = factorize_elementary(&f);
            let single: u64 = fact
                .factors()
                .iter()
                .flat_map(|x| x.terms().iter())
                .map(|&(k, e)| Factor::new(vec![(k, e)]).length())
                .sum();
            let grouped = fact.factors().iter().any(|x| x.terms().len() > 1);
            assert_eq!(sn_length(&f) < single, grouped, "{f}");
            assert!(sn_length(&f) <= single);
            for x in fact.factors() {
                assert_eq!(factor_normal_form(x).len() as u64, x.length());
            }
        }
    }
}

#[test]
fn worked_examples() {
    let f = SnOgsForm::from_terms(11, &[(4, 2), (5, 1), (6, 3), (9, 1), (11, 2)]).unwrap();
    assert_eq!(factorize_elementary(&f).to_string(), "t4^2*t5 | t6^3*t9*t11^2");
    assert_eq!(sn_descents(&f), vec![3, 6]);
    assert_eq!(sn_descents(&f), common::descents(&images(&f)));

    let f = SnOgsForm::from_terms(6, &[(5, 2), (6, 2)]).unwrap();
    assert_eq!(sn_normal_form(&f).to_string(), "(s4*s3*s2*s1)*(s5*s4)");
    assert_eq!(sn_length(&f), 6);

    let f = SnOgsForm::from_terms(12, &[(7, 2), (9, 2), (12, 3)]).unwrap();
    assert!(is_elementary(&f));
    assert_eq!(sn_length(&f), 19);
    assert_eq!(sn_length(&f), common::inversions(&images(&f)));
}
