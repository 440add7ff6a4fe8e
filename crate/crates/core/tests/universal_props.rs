mod common;

use std::sync::Arc;

use catkit_core::builders::{poset_category, PosetData};
use catkit_core::category::FinCategory;
use catkit_core::finset::finset_skeleton;
use catkit_core::functor::{diagonal_functor, Functor};
use catkit_core::nattrans::all_functors;
use catkit_core::universal::{
    all_universal_cones, colimit_finset, diagonal_product_adjunction, duality_check, find_adjoint, is_limit_cone,
    limit_finset, preservation_check, search_colimit, unique_mediator, AdjointSearch, Side,
};
use catkit_core::{check_adjunction, AdjunctionMode, Direction, UniversalError};
use common::*;

fn shape_diagrams(target: &Arc<FinCategory>) -> Vec<Functor> {
    limit_shapes()
        .into_iter()
        .map(arc)
        .flat_map(|j| all_functors(&j, target, 1_000_000).unwrap())
        .collect()
}

#[test]
fn limit_shapes_enumeration() {
    let shapes = limit_shapes();
    for s in &shapes {
        s.check_axioms().unwrap();
        assert!(s.object_count() <= 3 && s.morphism_count() - s.object_count() <= 2);
    }
    let forms: std::collections::BTreeSet<_> = shapes.iter().map(canonical_form).collect();
    assert_eq!(forms.len(), shapes.len());
    let discrete = shapes.iter().filter(|s| s.morphism_count() == s.object_count()).count();
    assert_eq!(discrete, 4);
}

#[test]
fn limits_and_colimits_agree_on_small_shapes() {
    let t = Arc::new(finset_skeleton(3).unwrap());
    for f in shape_diagrams(&t) {
        assert!(limits_agree(&f, Direction::Cone).unwrap(), "limit of {:?}", f.object_map);
        assert!(limits_agree(&f, Direction::Cocone).unwrap(), "colimit of {:?}", f.object_map);
    }
}

#[test]
fn constructed_cones_are_universal() {
    let t = Arc::new(finset_skeleton(3).unwrap());
    for f in shape_diagrams(&t).into_iter().step_by(11) {
        if let Ok(c) = limit_finset(&f) {
            assert!(is_limit_cone(&c).unwrap().universal);
        }
        if let Ok(c) = colimit_finset(&f) {
            assert!(is_limit_cone(&c).unwrap().universal);
        }
    }
}

#[test]
fn universal_cones_are_uniquely_isomorphic() {
    let t = Arc::new(finset_skeleton(2).unwrap());
    let mut multiple = 0;
    for f in shape_diagrams(&t).into_iter().step_by(3) {
        for dir in [Direction::Cone, Direction::Cocone] {
            let cones = all_universal_cones(&f, dir).unwrap();
            for a in &cones {
                for b in &cones {
                    let u = unique_mediator(a, b).expect("unique mediator");
                    assert!(t.function(u).unwrap().is_bijective());
                }
            }
            multiple += usize::from(cones.len() > 1);
        }
    }
    assert!(multiple > 0);
}

#[test]
fn duality_on_corpus_instances() {
    let t = Arc::new(finset_skeleton(3).unwrap());
    let mut checked = 0;
    for f in shape_diagrams(&t).into_iter().step_by(97) {
        if search_colimit(&f).unwrap().is_none() {
            continue;
        }
        for n in t.objects() {
            let r = duality_check(&f, n).unwrap();
            assert_eq!(r.hom_size, r.limit_size);
            assert!(r.bijective);
            checked += 1;
        }
    }
    assert!(checked >= 25, "{checked}");
}

#[test]
fn diagonal_product_adjunction_on_one_point_skeleton() {
    let s1 = Arc::new(finset_skeleton(1).unwrap());
    let adj = diagonal_product_adjunction(&s1).unwrap();
    check_adjunction(&adj, AdjunctionMode::Both).unwrap();
    check_adjunction(&adj, AdjunctionMode::HomBijection).unwrap();
    check_adjunction(&adj, AdjunctionMode::UnitCounit).unwrap();
    let AdjointSearch::Found(found) = find_adjoint(&adj.left, Side::Right).unwrap() else { panic!() };
    assert_eq!(found.right.object_map, adj.right.object_map);
    let k = adj.right.source.clone();
    let mut preserved = 0;
    for d in limit_shapes().into_iter().map(arc).flat_map(|j| all_functors(&j, &k, 10_000).unwrap()) {
        match preservation_check(&adj, Side::Right, &d) {
            Ok(ok) => {
                assert!(ok);
                preserved += 1;
            }
            Err(UniversalError::NoLimit(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
    assert!(preserved >= 10, "{preserved}");
}

#[test]
fn diagonal_has_no_right_adjoint_on_truncated_skeleton() {
    let s2 = Arc::new(finset_skeleton(2).unwrap());
    assert!(matches!(diagonal_product_adjunction(&s2), Err(UniversalError::Functor(_))));
    assert!(matches!(find_adjoint(&diagonal_functor(&s2), Side::Right).unwrap(), AdjointSearch::Absent { .. }));
}

fn chain(n: usize) -> FinCategory {
    let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let leq: Vec<(&str, &str)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| (refs[i], refs[j])).collect();
    poset_category(&PosetData::new(&refs, &leq)).unwrap()
}

/// Galois connections between posets: `F a ≤ b ⇔ a ≤ G b`.
fn has_poset_adjoint(f: &Functor, side: Side) -> bool {
    let (k, l) = (&f.source, &f.target);
    all_functors(l, k, 100_000).unwrap().iter().any(|g| {
        k.objects().all(|a| {
            l.objects().all(|b| match side {
                Side::Right => l.hom(f.obj(a), b).is_empty() == k.hom(a, g.obj(b)).is_empty(),
                Side::Left => l.hom(b, f.obj(a)).is_empty() == k.hom(g.obj(b), a).is_empty(),
            })
        })
    })
}

#[test]
fn find_adjoint_matches_galois_connections() {
    let posets: Vec<Arc<FinCategory>> = vec![
        arc(chain(2)),
        arc(chain(3)),
        arc(poset_category(&PosetData::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")])).unwrap()),
        arc(catkit_core::builders::powerset_lattice(2)),
    ];
    let (mut found, mut absent) = (0, 0);
    for k in &posets {
        for l in &posets {
            for f in all_functors(k, l, 100_000).unwrap() {
                for side in [Side::Left, Side::Right] {
                    let expected = has_poset_adjoint(&f, side);
                    match find_adjoint(&f, side).unwrap() {
                        AdjointSearch::Found(adj) => {
                            assert!(expected);
                            check_adjunction(&adj, AdjunctionMode::HomBijection).unwrap();
                            check_adjunction(&adj, AdjunctionMode::UnitCounit).unwrap();
                            found += 1;
                        }
                        AdjointSearch::Absent { .. } => {
                            assert!(!expected);
                            absent += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(found > 0 && absent > 0);
}
