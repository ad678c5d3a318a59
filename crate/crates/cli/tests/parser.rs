use mixbraid::are_equal;
use mixbraid::braid::full_twist;
use mixbraid_cli::parse::{parse_braid, parse_expr, Atom, BraidExpr, Term};
use proptest::prelude::*;

fn atom_leaf() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (0usize..20).prop_map(Atom::Gen),
        (0usize..9).prop_map(Atom::Delta),
        (0usize..5).prop_map(Atom::Omega),
        (0usize..9).prop_map(Atom::FullTwist),
        (0usize..9, 0usize..9).prop_map(|(i, j)| Atom::A(i, j)),
        Just(Atom::Identity),
    ]
}

fn expr_strategy() -> impl Strategy<Value = BraidExpr> {
    let term = |atom: BoxedStrategy<Atom>| {
        (atom, prop::collection::vec(-5i64..=5, 0..3))
            .prop_map(|(atom, exponents)| Term { atom, exponents })
    };
    let leaf = prop::collection::vec(term(atom_leaf().boxed()), 0..5).prop_map(BraidExpr);
    leaf.prop_recursive(3, 40, 5, move |inner| {
        let atom = prop_oneof![atom_leaf(), inner.prop_map(Atom::Group)].boxed();
        prop::collection::vec(term(atom), 0..5).prop_map(BraidExpr)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_then_parse_is_identity(e in expr_strategy()) {
        let printed = e.to_string();
        prop_assert_eq!(parse_expr(&printed).unwrap(), e);
    }

    #[test]
    fn parse_then_print_ignores_whitespace(e in expr_strategy(), pad in "[ \t]{0,3}") {
        let printed = e.to_string();
        let spaced = format!("{pad}{}{pad}", printed.replace(' ', &format!(" {pad}")));
        prop_assert_eq!(parse_expr(&spaced).unwrap().to_string(), printed);
    }

    #[test]
    fn word_printing_round_trips(signed in prop::collection::vec(prop_oneof![1i64..=4, -4i64..=-1], 0..20)) {
        let w = mixbraid::BraidWord::from_signed(5, &signed).unwrap();
        let printed = BraidExpr::from_word(&w).to_string();
        prop_assert_eq!(parse_braid(&printed, 5).unwrap(), w);
    }
}

#[test]
fn powers_of_the_generator_product_give_the_full_twist() {
    for m in 2..=5 {
        let text = format!(
            "({})^{m}",
            (1..m)
                .map(|i| format!("s{i}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
        assert!(are_equal(&parse_braid(&text, m).unwrap(), &full_twist(m)).unwrap());
    }
}
