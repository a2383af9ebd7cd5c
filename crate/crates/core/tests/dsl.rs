use amalgam_order::{load_tower, parse_tower, parse_word, Group};
use proptest::prelude::*;

const ALPHABET: &str = "groupsubgroupmapamalgamcyclicmodkernelexponentsvariant=(),:^-0123xyZAT# \n";

fn noise() -> impl Strategy<Value = String> {
    let chars: Vec<char> = ALPHABET.chars().collect();
    prop::collection::vec(prop::sample::select(chars), 0..120).prop_map(|v| v.into_iter().collect())
}

const TREFOIL: &str = "group Zx = Z(x)\ngroup Zy = Z(y)\nsubgroup A = cyclic(Zx: x^2, Zy: y^3)\ngroup T = amalgam(Zx, Zy, A, variant=1)\n";

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn tower_parser_never_panics(text in noise()) {
        let _ = load_tower(&text);
    }

    #[test]
    fn arbitrary_unicode_never_panics(text in any::<String>()) {
        let _ = parse_tower(&text);
        let _ = parse_word(&text, &Group::cyclic("x"));
    }

    #[test]
    fn truncated_towers_fail_cleanly(cut in 0usize..TREFOIL.len()) {
        if let Err(d) = load_tower(&TREFOIL[..cut]) {
            prop_assert!(d.line >= 1 && d.col >= 1);
        }
    }

    #[test]
    fn word_parser_never_panics(text in "[xy1*^0-9-]{0,24}") {
        let _ = parse_word(&text, &Group::cyclic("x"));
    }

    #[test]
    fn cyclic_words_sum_exponents(exps in prop::collection::vec(-50i64..=50, 1..8)) {
        let text = exps.iter().map(|k| format!("x^{k}")).collect::<Vec<_>>().join("*");
        let x = parse_word(&text, &Group::cyclic("x")).unwrap();
        prop_assert_eq!(x.as_cyclic(), Some(exps.iter().sum()));
    }
}

#[test]
fn trefoil_tower_loads() {
    let t = load_tower(TREFOIL).unwrap();
    assert_eq!(t.group_ids().collect::<Vec<_>>(), ["Zx", "Zy", "T"]);
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = format!("# header\n\n{TREFOIL}   # trailing\n");
    assert!(load_tower(&text).is_ok());
}

#[test]
fn exponent_overflow_is_rejected() {
    assert!(parse_word("x^99999999999999999999", &Group::cyclic("x")).is_err());
    assert!(parse_word("x^2000000000", &Group::cyclic("x")).is_err());
}
