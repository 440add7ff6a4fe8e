mod common;

use catkit_core::category::{FinCategory, Mor};
use catkit_core::diagram::{Diagram, Edge};
use catkit_core::finset::finset_skeleton;
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn random_path<'c>(r: &mut impl Rng, c: &'c FinCategory, len: usize) -> Diagram<'c> {
    let mut f = Mor(r.gen_range(0..c.morphism_count()));
    let mut nodes = vec![("p0".to_string(), c.dom(f))];
    let mut edges = Vec::new();
    for i in 0..len {
        nodes.push((format!("p{}", i + 1), c.cod(f)));
        edges.push(Edge { src: i, dst: i + 1, mor: f });
        let next: Vec<Mor> = c.morphisms().filter(|&g| c.dom(g) == c.cod(f)).collect();
        f = next[r.gen_range(0..next.len())];
    }
    Diagram::new(c, nodes, edges).unwrap()
}

#[test]
fn associativity_squares_commute_in_the_corpus() {
    for c in corpus_categories() {
        for (f, g, h) in composable_triples(&c) {
            assert!(associativity_square(&c, f, g, h).is_commutative().commutative, "{}", c.name());
        }
    }
}

#[test]
fn broken_tables_are_flagged() {
    let mut r = rng(7);
    let mut flagged = 0;
    for _ in 0..20 {
        for c in corpus_categories() {
            let Some(broken) = break_associativity(&mut r, &c) else { continue };
            let witness = composable_triples(&broken)
                .into_iter()
                .find_map(|(f, g, h)| associativity_square(&broken, f, g, h).is_commutative().witness);
            let w = witness.unwrap_or_else(|| panic!("{} not flagged", c.name()));
            assert_ne!(w.first.morphism, w.second.morphism);
            flagged += 1;
        }
    }
    assert!(flagged >= 40, "{flagged}");
}

#[test]
fn triangulated_diagrams_commute() {
    let s = finset_skeleton(3).unwrap();
    let mut r = rng(11);
    for _ in 0..50 {
        let steps = r.gen_range(1..=7);
        let t = random_triangulation(&mut r, &s, steps);
        for &face in &t.faces {
            assert!(t.face(&s, face).is_commutative().commutative);
        }
        assert!(t.diagram(&s).is_commutative().commutative);
    }
}

#[test]
fn a_non_commuting_triangle_is_reported() {
    let c = graph(&["A", "B", "C"], &[("f", "A", "B"), ("g", "B", "C"), ("h", "A", "C")]);
    let d = catkit_core::build_diagram(
        &c,
        &[("n1", "A"), ("n2", "B"), ("n3", "C")],
        &[("n1", "n2", "f"), ("n2", "n3", "g"), ("n1", "n3", "h")],
    )
    .unwrap();
    let v = d.is_commutative();
    assert!(!v.commutative);
    assert_eq!(d.describe(&v.witness.unwrap()), "paths (f;g) and (h) from n1 to n3 differ");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn single_paths_commute(idx in 0usize..16, seed in any::<u64>(), len in 1usize..6) {
        let c = &corpus_categories()[idx];
        let d = random_path(&mut rng(seed), c, len);
        prop_assert!(d.is_commutative().commutative);
    }

    #[test]
    fn composites_grow_with_edges(idx in 0usize..16, seed in any::<u64>(), len in 1usize..5) {
        let c = &corpus_categories()[idx];
        let mut r = rng(seed);
        let d = random_path(&mut r, c, len);
        let (s, t) = (r.gen_range(0..d.nodes().len()), r.gen_range(0..d.nodes().len()));
        let (a, b) = (d.nodes()[s].1, d.nodes()[t].1);
        if let Some(&extra) = c.hom(a, b).first() {
            let mut edges = d.edges().to_vec();
            edges.push(Edge { src: s, dst: t, mor: extra });
            let bigger = Diagram::new(c, d.nodes().to_vec(), edges).unwrap();
            for x in 0..d.nodes().len() {
                for y in 0..d.nodes().len() {
                    prop_assert!(d.achievable_composites(x, y).is_subset(&bigger.achievable_composites(x, y)));
                }
            }
        }
    }
}
