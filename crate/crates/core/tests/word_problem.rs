mod common;

use common::{burau, oracle_equal};
use mixbraid::braid::{delta, full_twist};
use mixbraid::sample::{random_artin_rewrite, random_word, random_word_of_len, rng};
use mixbraid::{are_equal, is_trivial, normal_form, BraidWord};
use proptest::prelude::*;

fn word_strategy(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |m| {
        let m1 = (m - 1) as i64;
        prop::collection::vec(
            (1..=m1, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }),
            0..=max_len,
        )
        .prop_map(move |signed| BraidWord::from_signed(m, &signed).unwrap())
    })
}

#[test]
fn burau_oracle_respects_braid_relations() {
    for m in 3..=5 {
        for i in 1..m - 1 {
            let a = BraidWord::from_signed(m, &[i as i64, i as i64 + 1, i as i64]).unwrap();
            let b = BraidWord::from_signed(m, &[i as i64 + 1, i as i64, i as i64 + 1]).unwrap();
            assert_eq!(burau(&a, 7), burau(&b, 7));
        }
        let s = BraidWord::from_signed(m, &[1, -1]).unwrap();
        assert_eq!(burau(&s, 7), burau(&BraidWord::identity(m), 7));
    }
}

#[test]
fn normal_form_equality_agrees_with_burau_oracle() {
    let mut r = rng(11);
    for _ in 0..300 {
        let a = random_word(&mut r, 4, 14);
        let mut b = a.clone();
        for _ in 0..5 {
            b = random_artin_rewrite(&mut r, &b);
        }
        assert!(are_equal(&a, &b).unwrap());
        assert!(oracle_equal(&a, &b));
        let c = random_word(&mut r, 4, 14);
        assert_eq!(
            are_equal(&a, &c).unwrap(),
            oracle_equal(&a, &c),
            "{a} vs {c}"
        );
    }
}

#[test]
fn garside_element_identities() {
    for m in 2..=6 {
        let d = delta(m);
        assert!(oracle_equal(&d.pow(2), &full_twist(m)));
        let nf = normal_form(&d);
        assert_eq!((nf.inf(), nf.canonical_length()), (1, 0));
        let nf = normal_form(&full_twist(m).inverse());
        assert_eq!((nf.inf(), nf.canonical_length()), (-2, 0));
    }
}

#[test]
fn long_words_normalize_within_budget() {
    let mut r = rng(1);
    for _ in 0..3 {
        let w = random_word_of_len(&mut r, 12, 2000);
        let start = std::time::Instant::now();
        let nf = normal_form(&w);
        assert!(start.elapsed().as_secs_f64() < 1.0, "{:?}", start.elapsed());
        assert!(nf.is_canonical());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn word_times_inverse_is_trivial(w in word_strategy(6, 40)) {
        prop_assert!(is_trivial(&w.concat(&w.inverse()).unwrap()));
        prop_assert!(is_trivial(&w.inverse().concat(&w).unwrap()));
    }

    #[test]
    fn normal_form_is_canonical_and_represents_input(w in word_strategy(6, 30)) {
        let nf = normal_form(&w);
        prop_assert!(nf.is_canonical());
        let back = nf.to_word();
        prop_assert!(oracle_equal(&w, &back));
        prop_assert_eq!(normal_form(&back), nf);
    }

    #[test]
    fn normal_form_agrees_with_oracle(a in word_strategy(5, 12), b in word_strategy(5, 12)) {
        prop_assume!(a.strands() == b.strands());
        prop_assert_eq!(are_equal(&a, &b).unwrap(), oracle_equal(&a, &b));
    }

    #[test]
    fn rewrites_preserve_normal_form(w in word_strategy(6, 30), seed in any::<u64>()) {
        let mut r = rng(seed);
        let nf = normal_form(&w);
        let mut v = w.clone();
        for _ in 0..20 {
            v = random_artin_rewrite(&mut r, &v);
            prop_assert_eq!(&normal_form(&v), &nf);
        }
    }

    #[test]
    fn normal_form_is_multiplicative_in_permutation_and_exponent(a in word_strategy(5, 20)) {
        let nf = normal_form(&a);
        let back = nf.to_word();
        prop_assert_eq!(back.permutation(), a.permutation());
        prop_assert_eq!(back.exponent_sum(), a.exponent_sum());
    }

    #[test]
    fn delta_conjugation_flips_generators(m in 2usize..=6, i in 1usize..6) {
        prop_assume!(i < m);
        let d = delta(m);
        let s = BraidWord::generator(m, i).unwrap();
        let lhs = d.concat(&s).unwrap().concat(&d.inverse()).unwrap();
        prop_assert!(are_equal(&lhs, &BraidWord::generator(m, m - i).unwrap()).unwrap());
    }

    #[test]
    fn free_reduction_is_idempotent_and_sound(w in word_strategy(6, 40)) {
        let r = w.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(are_equal(&r, &w).unwrap());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
    }

    #[test]
    fn permutation_is_a_homomorphism(a in word_strategy(6, 20), b in word_strategy(6, 20)) {
        prop_assume!(a.strands() == b.strands());
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(ab.permutation(), &a.permutation() * &b.permutation());
        prop_assert_eq!(a.inverse().permutation(), a.permutation().inverse());
    }
}
