mod common;

use dn_ogs::exchange::normalize_mixed_word;
use dn_ogs::text::{parse_perm, parse_word};
use dn_ogs::{DnOgsForm, Letter};
use proptest::prelude::*;

#[test]
fn canonical_forms_round_trip_through_text() {
    for n in 2..=6 {
        for (j, i) in common::all_forms(n) {
            let form = DnOgsForm::new(n, j, i).unwrap();
            let text = form.to_string();
            let word = parse_word(&text, n).unwrap();
            assert_eq!(word, form.to_word(), "{text}");
            assert_eq!(normalize_mixed_word(&word), form, "{text}");
            let a = form.realize();
            assert_eq!(parse_perm(&a.to_string()).unwrap(), a);
        }
    }
}

#[test]
fn grammar_examples() {
    let w = parse_word("s1' * s0 s2^1 t3^5 w2^0", 4).unwrap();
    let kinds: Vec<&str> = w
        .letters()
        .iter()
        .map(|l| match l {
            Letter::Coxeter(_) => "s",
            Letter::T { .. } => "t",
            Letter::W(_) => "w",
        })
        .collect();
    assert_eq!(kinds, ["s", "s", "s", "t"]);
    assert_eq!(w.letters()[3], Letter::T { k: 3, exp: 5 });
    assert!(parse_word("e", 5).unwrap().letters().is_empty());
    assert!(parse_word("e*e", 5).unwrap().letters().is_empty());
    assert!(parse_word("t5^100000000000", 5).is_ok());
    assert_eq!(parse_word("t6", 5).unwrap_err().message, "t-index must be ≤ 5");
    assert_eq!(parse_word("   ", 5).unwrap_err().message, "empty word (use `e` for the identity)");
    assert_eq!(parse_word("x", 5).unwrap_err().column, 1);
    assert_eq!(parse_word("t2 * q", 5).unwrap_err().column, 6);
    assert_eq!(parse_perm(" [ 2 , -1 , 3 ] ").unwrap().images(), &[2, -1, 3]);
    assert!(parse_perm("[1,3]").is_err());
}

fn fuzz_input() -> impl Strategy<Value = String> {
    let piece = prop_oneof![
        Just("s".to_string()),
        Just("t".to_string()),
        Just("w".to_string()),
        Just("e".to_string()),
        Just("'".to_string()),
        Just("^".to_string()),
        Just("*".to_string()),
        Just(" ".to_string()),
        Just("[".to_string()),
        Just("]".to_string()),
        Just(",".to_string()),
        Just("-".to_string()),
        "[0-9]{1,25}",
        any::<char>().prop_map(String::from),
    ];
    prop::collection::vec(piece, 0..16).prop_map(|v| v.concat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20_000))]

    #[test]
    fn parsers_are_total(text in fuzz_input(), n in 0usize..12) {
        let chars = text.chars().count();
        match parse_word(&text, n) {
            Ok(w) => {
                let roundtrip = normalize_mixed_word(&w);
                prop_assert_eq!(roundtrip.realize(), w.evaluate());
            }
            Err(e) => prop_assert!(e.column >= 1 && e.column <= chars + 1, "{e}"),
        }
        match parse_perm(&text) {
            Ok(a) => prop_assert_eq!(parse_perm(&a.to_string()).unwrap(), a),
            Err(e) => prop_assert!(e.column >= 1 && e.column <= chars + 1, "{e}"),
        }
    }

    #[test]
    fn mixed_word_display_round_trips(seed in prop::collection::vec((0u8..4, 1usize..8, 0u64..20), 0..12), n in 2usize..=8) {
        let text: Vec<String> = seed
            .iter()
            .map(|&(kind, idx, e)| match kind {
                0 => "s1'".to_string(),
                1 => format!("s{}", 1 + idx % (n - 1)),
                2 => format!("t{}^{e}", 2 + idx % (n - 1)),
                _ => format!("w{}", 1 + idx % (n - 1)),
            })
            .collect();
        let text = if text.is_empty() { "e".to_string() } else { text.join("*") };
        let w = parse_word(&text, n).unwrap();
        let shown = w.to_string();
        let again = parse_word(if shown.is_empty() { "e" } else { &shown }, n).unwrap();
        prop_assert_eq!(again.evaluate(), w.evaluate());
    }
}
