mod common;

use catkit_core::category::{
    classify_morphism, is_initial, is_terminal, opposite_category, product_category, validate_category, FinCategory,
};
use catkit_core::finset::{finset_skeleton, FinFunction};
use common::*;
use proptest::prelude::*;

#[test]
fn corpus_categories_pass_the_axioms() {
    for c in corpus_categories() {
        c.check_axioms().unwrap_or_else(|e| panic!("{}: {e}", c.name()));
        let again = validate_category(&describe(&c)).unwrap();
        assert_eq!(again.morphism_count(), c.morphism_count(), "{}", c.name());
        assert!(brute_force_axioms(&describe(&c)), "{}", c.name());
    }
}

#[test]
fn mono_epi_match_injective_surjective() {
    let s = finset_skeleton(3).unwrap();
    let mut checked = 0;
    for f in s.morphisms() {
        let func = s.function(f).unwrap();
        let class = classify_morphism(&s, f);
        assert_eq!(class.mono, func.is_injective(), "{}", s.morphism_name(f));
        assert_eq!(class.epi, func.is_surjective(), "{}", s.morphism_name(f));
        checked += 1;
    }
    let expected: usize = (0..=3).flat_map(|a| (0..=3).map(move |b| FinFunction::count(a, b))).sum();
    assert_eq!(checked, expected);
}

#[test]
fn inverse_implications() {
    let mut cats = corpus_categories();
    cats.retain(|c| c.morphism_count() <= 8);
    for c in &cats {
        for f in c.morphisms() {
            let k = classify_morphism(c, f);
            if k.iso.is_some() {
                assert!(k.mono && k.epi && k.regular.is_some(), "{} in {}", c.morphism_name(f), c.name());
            }
            if k.left_inverse.is_some() {
                assert!(k.mono);
            }
            if k.right_inverse.is_some() {
                assert!(k.epi);
            }
        }
    }
}

#[test]
fn null_objects_are_isomorphic() {
    for c in corpus_categories().iter().chain([walking_iso(), pointed()].iter()) {
        let nulls: Vec<_> = c.objects().filter(|&a| is_initial(c, a) && is_terminal(c, a)).collect();
        for &a in &nulls {
            for &b in &nulls {
                let iso = c.hom(a, b).iter().any(|&f| classify_morphism(c, f).iso.is_some());
                assert!(iso, "{} and {} in {}", c.object_name(a), c.object_name(b), c.name());
            }
        }
    }
    let w = walking_iso();
    assert_eq!(w.objects().filter(|&a| is_initial(&w, a) && is_terminal(&w, a)).count(), 2);
}

fn assert_double_opposite(c: &FinCategory) {
    let oo = opposite_category(&opposite_category(c));
    oo.check_axioms().unwrap();
    assert_eq!(oo.object_count(), c.object_count());
    for f in c.morphisms() {
        assert_eq!(oo.morphism_name(f), format!("op_op_{}", c.morphism_name(f)));
        assert_eq!((oo.dom(f), oo.cod(f)), (c.dom(f), c.cod(f)));
        for g in c.morphisms() {
            assert_eq!(oo.compose(g, f), c.compose(g, f));
        }
    }
}

#[test]
fn double_opposite_is_canonically_isomorphic() {
    for c in corpus_categories() {
        assert_double_opposite(&c);
    }
}

#[test]
fn products_satisfy_the_axioms() {
    let cats = corpus_categories();
    for a in cats.iter().take(6) {
        for b in cats.iter().skip(8).take(6) {
            let p = product_category(a, b);
            p.check_axioms().unwrap();
            assert_eq!(p.morphism_count(), a.morphism_count() * b.morphism_count());
        }
    }
}

#[test]
fn reserved_identity_names_are_rejected() {
    let mut d = describe(&graph(&["A", "B"], &[("f", "A", "B")]));
    d.arrows[0].0 = "id_A".into();
    assert!(validate_category(&d).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn validator_agrees_with_brute_force(seed in any::<u64>(), mutations in 0usize..3) {
        let mut r = rng(seed);
        let mut d = random_description(&mut r, 3, 6);
        for _ in 0..mutations {
            d = mutate(&mut r, &d);
        }
        prop_assert_eq!(validate_category(&d).is_ok(), brute_force_axioms(&d), "{:?}", d);
    }

    #[test]
    fn mutated_corpus_agrees_with_brute_force(idx in 0usize..16, seed in any::<u64>()) {
        let c = &corpus_categories()[idx];
        let d = mutate(&mut rng(seed), &describe(c));
        prop_assert_eq!(validate_category(&d).is_ok(), brute_force_axioms(&d), "{:?}", d);
    }

    #[test]
    fn identities_are_two_sided(idx in 0usize..16) {
        let c = &corpus_categories()[idx];
        for f in c.morphisms() {
            prop_assert_eq!(c.comp(c.identity(c.cod(f)), f), f);
            prop_assert_eq!(c.comp(f, c.identity(c.dom(f))), f);
        }
    }
}
