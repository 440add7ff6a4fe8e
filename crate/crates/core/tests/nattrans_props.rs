mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use catkit_core::category::{product_mor, product_obj, FinCategory, Mor, Obj, SubSelection};
use catkit_core::finset::{finset_skeleton, FinFunction};
use catkit_core::functor::{compose_functors, hom_bifunctor, inclusion_functor, Functor};
use catkit_core::nattrans::{
    all_functors, check_interchange, coend_finset, end_finset, functor_category, godement, vcompose, NatTrans,
};
use catkit_core::{check_natural, opposite_category, product_category};
use common::*;

fn small_pairs() -> Vec<(Arc<FinCategory>, Arc<FinCategory>)> {
    let pool = interchange_pool();
    let mut out = Vec::new();
    for k in &pool {
        for l in &pool {
            if k.morphism_count() <= 4 {
                out.push((k.clone(), l.clone()));
            }
        }
    }
    out
}

fn naturality_oracle(f: &Functor, g: &Functor, components: &[Mor]) -> bool {
    let (s, t) = (&*f.source, &*f.target);
    s.morphisms().all(|m| {
        let (a, b) = (s.dom(m).0, s.cod(m).0);
        t.comp(g.mor(m), components[a]) == t.comp(components[b], f.mor(m))
    })
}

#[test]
fn functor_category_counts_natural_families() {
    for (k, l) in small_pairs() {
        let fc = functor_category(&k, &l).unwrap();
        fc.category.check_axioms().unwrap();
        let mut expected = 0;
        for f in &fc.functors {
            for g in &fc.functors {
                let homs: Vec<&[Mor]> = k.objects().map(|a| l.hom(f.obj(a), g.obj(a))).collect();
                let mut families: Vec<Vec<Mor>> = vec![Vec::new()];
                for h in homs {
                    families = families
                        .into_iter()
                        .flat_map(|fam| h.iter().map(move |&m| [fam.clone(), vec![m]].concat()))
                        .collect();
                }
                expected += families.iter().filter(|fam| naturality_oracle(f, g, fam)).count();
            }
        }
        assert_eq!(fc.category.morphism_count(), expected, "{}^{}", l.name(), k.name());
    }
}

#[test]
fn vertical_composition_is_associative_and_unital() {
    for (k, l) in small_pairs() {
        let fc = functor_category(&k, &l).unwrap();
        let ts = &fc.transformations;
        for a in ts {
            let id_src = NatTrans::identity(&a.source);
            let id_tgt = NatTrans::identity(&a.target);
            assert_eq!(vcompose(a, &id_src).unwrap().components, a.components);
            assert_eq!(vcompose(&id_tgt, a).unwrap().components, a.components);
        }
        for a in ts.iter().take(40) {
            for b in ts.iter().filter(|b| b.source == a.target).take(6) {
                for c in ts.iter().filter(|c| c.source == b.target).take(6) {
                    let left = vcompose(c, &vcompose(b, a).unwrap()).unwrap();
                    let right = vcompose(&vcompose(c, b).unwrap(), a).unwrap();
                    assert_eq!(left.components, right.components);
                    assert!(check_natural(&left).unwrap().natural);
                }
            }
        }
    }
}

#[test]
fn godement_formulas_and_interchange() {
    let mut r = rng(5);
    for _ in 0..60 {
        let (alpha, beta, gamma, delta) = random_interchange(&mut r);
        let g = godement(&beta, &alpha).unwrap();
        assert!(check_natural(&g).unwrap().natural);
        assert!(check_interchange(&alpha, &beta, &gamma, &delta).unwrap());
    }
}

fn act<'a>(c: &FinCategory, s: &'a Functor, f: Mor, g: Mor) -> &'a FinFunction {
    s.target.function(s.mor(product_mor(c, f, g))).unwrap()
}

fn end_oracle(c: &FinCategory, s: &Functor) -> usize {
    let sizes: Vec<usize> = c.objects().map(|x| s.target.set_size(s.obj(product_obj(c, x, x))).unwrap()).collect();
    let mut families: Vec<Vec<usize>> = vec![Vec::new()];
    for &n in &sizes {
        families = families.into_iter().flat_map(|fam| (0..n).map(move |v| [fam.clone(), vec![v]].concat())).collect();
    }
    families
        .iter()
        .filter(|x| {
            c.morphisms().all(|f| {
                let (a, b) = (c.dom(f), c.cod(f));
                act(c, s, c.identity(a), f).apply(x[a.0]) == act(c, s, f, c.identity(b)).apply(x[b.0])
            })
        })
        .count()
}

fn coend_oracle(c: &FinCategory, s: &Functor) -> usize {
    let size = |x, y| s.target.set_size(s.obj(product_obj(c, x, y))).unwrap();
    let mut points: Vec<(usize, usize)> = Vec::new();
    for x in c.objects() {
        points.extend((0..size(x, x)).map(|v| (x.0, v)));
    }
    let mut class: Vec<usize> = (0..points.len()).collect();
    let at = |p: (usize, usize)| points.iter().position(|&q| q == p).unwrap();
    loop {
        let mut changed = false;
        for f in c.morphisms() {
            let (a, b) = (c.dom(f), c.cod(f));
            for y in 0..size(b, a) {
                let p = at((a.0, act(c, s, f, c.identity(a)).apply(y)));
                let q = at((b.0, act(c, s, c.identity(b), f).apply(y)));
                let m = class[p].min(class[q]);
                if class[p] != class[q] {
                    let (old1, old2) = (class[p], class[q]);
                    for k in class.iter_mut() {
                        if *k == old1 || *k == old2 {
                            *k = m;
                        }
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    class.into_iter().collect::<BTreeSet<_>>().len()
}

#[test]
fn ends_and_coends_match_oracles() {
    let cats: Vec<Arc<FinCategory>> = corpus_categories().into_iter().filter(|c| c.morphism_count() <= 5).map(arc).collect();
    let target = Arc::new(finset_skeleton(2).unwrap());
    let mut checked = 0;
    for c in &cats {
        let hom = hom_bifunctor(c).unwrap();
        let end = end_finset(c, &hom).unwrap();
        assert!(end.universal);
        assert_eq!(end.size, end_oracle(c, &hom), "{}", c.name());
        let coend = coend_finset(c, &hom).unwrap();
        assert!(coend.universal);
        assert_eq!(coend.size, coend_oracle(c, &hom), "{}", c.name());
        let source = Arc::new(product_category(&opposite_category(c), c));
        if source.morphism_count() <= 9 {
            for s in all_functors(&source, &target, 100_000).unwrap().into_iter().step_by(5) {
                assert_eq!(end_finset(c, &s).unwrap().size, end_oracle(c, &s));
                assert_eq!(coend_finset(c, &s).unwrap().size, coend_oracle(c, &s));
                checked += 1;
            }
        }
    }
    assert!(checked > 20, "{checked}");
}

#[test]
fn skeleton_inclusion_preserves_ends() {
    let s3 = Arc::new(finset_skeleton(3).unwrap());
    let small: Vec<Obj> = s3.objects().filter(|&a| s3.set_size(a).unwrap() <= 2).collect();
    let incl = inclusion_functor(&s3, &SubSelection::full(&s3, &small)).unwrap();
    let sub = incl.source.clone();
    let cats: Vec<Arc<FinCategory>> = corpus_categories().into_iter().filter(|c| c.morphism_count() <= 3).map(arc).collect();
    let mut checked = 0;
    for c in &cats {
        let source = Arc::new(product_category(&opposite_category(c), c));
        for s in all_functors(&source, &sub, 100_000).unwrap().into_iter().step_by(7) {
            let end = end_finset(c, &s).unwrap();
            let image = end_finset(c, &compose_functors(&incl, &s).unwrap()).unwrap();
            assert!(end.universal && image.universal);
            assert_eq!((end.size, &end.elements), (image.size, &image.elements));
            assert_eq!(end.wedge.components, image.wedge.components);
            checked += 1;
        }
    }
    assert!(checked > 20, "{checked}");
}
