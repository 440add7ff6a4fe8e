//! Limits and colimits of finite diagrams, comma categories and adjunctions.
//!
//! Universal properties are decided by exhaustive enumeration: a cone `φ`
//! with apex `L` is a limit iff for every object `N` the map
//! `hom(N, L) → Cones(N)`, `u ↦ φ ∘ u`, is a bijection.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::category::{
    find_special_object, product_mor, product_obj, split_product_obj, CategoryError, FinCategory, Mor, MorData, Obj,
    SpecialKind,
};
use crate::finset::FinFunction;
use crate::functor::{
    cartesian_product_functor, compose_functors, diagonal_functor, same, Functor, FunctorError, Variance,
};
use crate::nattrans::{check_natural, same_functor, NatError, NatTrans};

/// Largest product of set sizes enumerated by [`concrete_limit`].
pub const LIMIT_ENUMERATION_LIMIT: usize = 1_000_000;
/// Largest comma category built by [`comma_category`].
pub const COMMA_MORPHISM_LIMIT: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniversalError {
    #[error("not a cone: {0}")]
    NotACone(String),
    #[error("size bound: {0}")]
    SizeBound(String),
    #[error("no colimit: {0}")]
    NoColimit(String),
    #[error("no limit: {0}")]
    NoLimit(String),
    #[error("adjunction {check} fails at {instance}")]
    Mismatch { check: &'static str, instance: String },
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error(transparent)]
    Nat(#[from] NatError),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Cone,
    Cocone,
}

/// Legs `φ_X: apex → F(X)` (cone) or `φ_X: F(X) → apex` (cocone) over a
/// covariant diagram functor `F: J → C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub functor: Functor,
    pub apex: Obj,
    pub legs: Vec<Mor>,
    pub direction: Direction,
}

/// A competing cone with a wrong number of mediators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Competitor {
    pub apex: Obj,
    pub legs: Vec<Mor>,
    pub mediators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitVerdict {
    pub universal: bool,
    pub witness: Option<Competitor>,
}

fn leg_hom(c: &FinCategory, dir: Direction, apex: Obj, fx: Obj) -> &[Mor] {
    match dir {
        Direction::Cone => c.hom(apex, fx),
        Direction::Cocone => c.hom(fx, apex),
    }
}

/// The condition for `f: X → Y` with image `ff = F(f)`.
fn leg_condition(c: &FinCategory, dir: Direction, ff: Mor, leg_x: Mor, leg_y: Mor) -> bool {
    match dir {
        Direction::Cone => c.comp(ff, leg_x) == leg_y,
        Direction::Cocone => c.comp(leg_y, ff) == leg_x,
    }
}

/// Candidate mediators between a competitor at `n` and the apex `l`.
fn mediator_hom(c: &FinCategory, dir: Direction, l: Obj, n: Obj) -> &[Mor] {
    match dir {
        Direction::Cone => c.hom(n, l),
        Direction::Cocone => c.hom(l, n),
    }
}

fn through(c: &FinCategory, dir: Direction, u: Mor, leg: Mor) -> Mor {
    match dir {
        Direction::Cone => c.comp(leg, u),
        Direction::Cocone => c.comp(u, leg),
    }
}

fn covariant(f: &Functor) -> Result<(), UniversalError> {
    if f.variance != Variance::Covariant {
        return Err(UniversalError::NotACone(format!("diagram {} must be covariant", f.name)));
    }
    Ok(())
}

/// Every cone (or cocone) over `f` with apex `n`, legs in shape-object order.
pub fn cones_at(f: &Functor, dir: Direction, n: Obj) -> Vec<Vec<Mor>> {
    let (j, c) = (&*f.source, &*f.target);
    // Each non-identity shape arrow is checked once both its legs are chosen.
    let mut checks: Vec<Vec<Mor>> = vec![Vec::new(); j.object_count()];
    for m in j.morphisms().filter(|&m| !j.is_identity(m)) {
        checks[j.dom(m).0.max(j.cod(m).0)].push(m);
    }
    let mut out = Vec::new();
    let mut legs = Vec::with_capacity(j.object_count());
    fn go(
        f: &Functor,
        c: &FinCategory,
        j: &FinCategory,
        dir: Direction,
        n: Obj,
        checks: &[Vec<Mor>],
        legs: &mut Vec<Mor>,
        out: &mut Vec<Vec<Mor>>,
    ) {
        let x = legs.len();
        if x == j.object_count() {
            out.push(legs.clone());
            return;
        }
        for &leg in leg_hom(c, dir, n, f.obj(Obj(x))) {
            legs.push(leg);
            let ok = checks[x]
                .iter()
                .all(|&m| leg_condition(c, dir, f.mor(m), legs[j.dom(m).0], legs[j.cod(m).0]));
            if ok {
                go(f, c, j, dir, n, checks, legs, out);
            }
            legs.pop();
        }
    }
    go(f, c, j, dir, n, &checks, &mut legs, &mut out);
    out
}

/// Checks that the legs are typed and satisfy the (co)cone condition.
pub fn check_cone(cone: &Cone) -> Result<(), UniversalError> {
    let f = &cone.functor;
    covariant(f)?;
    let (j, c) = (&*f.source, &*f.target);
    if cone.legs.len() != j.object_count() {
        return Err(UniversalError::NotACone("one leg per shape object is required".into()));
    }
    for x in j.objects() {
        let leg = cone.legs[x.0];
        if leg.0 >= c.morphism_count() || !leg_hom(c, cone.direction, cone.apex, f.obj(x)).contains(&leg) {
            return Err(UniversalError::NotACone(format!("leg at {} has the wrong endpoints", j.object_name(x))));
        }
    }
    for m in j.morphisms() {
        if !leg_condition(c, cone.direction, f.mor(m), cone.legs[j.dom(m).0], cone.legs[j.cod(m).0]) {
            return Err(UniversalError::NotACone(format!("condition fails for {}", j.morphism_name(m))));
        }
    }
    Ok(())
}

/// Exhaustive universality check over every apex and every competing cone.
pub fn is_limit_cone(cone: &Cone) -> Result<LimitVerdict, UniversalError> {
    check_cone(cone)?;
    let f = &cone.functor;
    let c = &*f.target;
    for n in c.objects() {
        let mut images: HashMap<Vec<Mor>, usize> = HashMap::new();
        for &u in mediator_hom(c, cone.direction, cone.apex, n) {
            let legs: Vec<Mor> = cone.legs.iter().map(|&l| through(c, cone.direction, u, l)).collect();
            *images.entry(legs).or_insert(0) += 1;
        }
        for legs in cones_at(f, cone.direction, n) {
            let count = images.get(&legs).copied().unwrap_or(0);
            if count != 1 {
                return Ok(LimitVerdict {
                    universal: false,
                    witness: Some(Competitor {
                        apex: n,
                        legs,
                        mediators: count,
                    }),
                });
            }
        }
    }
    Ok(LimitVerdict {
        universal: true,
        witness: None,
    })
}

/// Every universal cone, apexes and leg families in declaration order.
pub fn all_universal_cones(f: &Functor, dir: Direction) -> Result<Vec<Cone>, UniversalError> {
    covariant(f)?;
    let c = &*f.target;
    let cones: Vec<HashSet<Vec<Mor>>> = c.objects().map(|n| cones_at(f, dir, n).into_iter().collect()).collect();
    let mut out = Vec::new();
    for l in c.objects() {
        // A universal apex has exactly |Cones(N)| mediators into every N.
        if c.objects().any(|n| mediator_hom(c, dir, l, n).len() != cones[n.0].len()) {
            continue;
        }
        let mut candidates: Vec<&Vec<Mor>> = cones[l.0].iter().collect();
        candidates.sort();
        for legs in candidates {
            // With equal counts, injectivity of u ↦ φ ∘ u gives bijectivity.
            let injective = c.objects().all(|n| {
                let hom = mediator_hom(c, dir, l, n);
                let images: HashSet<Vec<Mor>> = hom
                    .iter()
                    .map(|&u| legs.iter().map(|&leg| through(c, dir, u, leg)).collect())
                    .collect();
                images.len() == hom.len()
            });
            if injective {
                out.push(Cone {
                    functor: f.clone(),
                    apex: l,
                    legs: legs.clone(),
                    direction: dir,
                });
            }
        }
    }
    Ok(out)
}

/// The first limit cone in declaration order, or `None` when `f` has no limit.
pub fn search_limit(f: &Functor) -> Result<Option<Cone>, UniversalError> {
    Ok(all_universal_cones(f, Direction::Cone)?.into_iter().next())
}

pub fn search_colimit(f: &Functor) -> Result<Option<Cone>, UniversalError> {
    Ok(all_universal_cones(f, Direction::Cocone)?.into_iter().next())
}

/// The unique mediator from `a` to `b` (cone morphism `a.apex → b.apex`, or
/// `b.apex → a.apex` for cocones), if exactly one exists.
pub fn unique_mediator(a: &Cone, b: &Cone) -> Option<Mor> {
    let c = &*a.functor.target;
    let found: Vec<Mor> = mediator_hom(c, b.direction, b.apex, a.apex)
        .iter()
        .copied()
        .filter(|&u| b.legs.iter().zip(&a.legs).all(|(&lb, &la)| through(c, b.direction, u, lb) == la))
        .collect();
    (found.len() == 1).then(|| found[0])
}

/// A (co)limit in finite sets, possibly larger than any skeleton. Apex
/// elements are indexed by position in `elements`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCone {
    pub size: usize,
    /// Limit: compatible tuples. Colimit: `[x, element]` class representatives.
    pub elements: Vec<Vec<usize>>,
    pub legs: Vec<FinFunction>,
    pub direction: Direction,
}

fn concrete_sizes(f: &Functor) -> Result<Vec<usize>, UniversalError> {
    covariant(f)?;
    if !f.target.is_concrete() {
        return Err(UniversalError::NotACone(format!("{} does not land in finite sets", f.name)));
    }
    Ok(f.source.objects().map(|x| f.target.set_size(f.obj(x)).unwrap()).collect())
}

/// Compatible tuples in the product of all `F(X)`, with projections.
pub fn concrete_limit(f: &Functor) -> Result<SetCone, UniversalError> {
    let sizes = concrete_sizes(f)?;
    let (j, t) = (&*f.source, &*f.target);
    let total = sizes.iter().fold(1usize, |a, &s| a.saturating_mul(s));
    if total > LIMIT_ENUMERATION_LIMIT {
        return Err(UniversalError::SizeBound(format!("product of sizes {sizes:?} is too large")));
    }
    let arrows: Vec<(usize, usize, &FinFunction)> = j
        .morphisms()
        .filter(|&m| !j.is_identity(m))
        .map(|m| (j.dom(m).0, j.cod(m).0, t.function(f.mor(m)).unwrap()))
        .collect();
    let mut elements = Vec::new();
    if sizes.iter().all(|&s| s > 0) {
        let mut t = vec![0usize; sizes.len()];
        'outer: loop {
            if arrows.iter().all(|&(x, y, fun)| fun.apply(t[x]) == t[y]) {
                elements.push(t.clone());
            }
            for i in (0..t.len()).rev() {
                t[i] += 1;
                if t[i] < sizes[i] {
                    continue 'outer;
                }
                t[i] = 0;
            }
            break;
        }
    }
    let legs = (0..sizes.len())
        .map(|x| FinFunction::new(sizes[x], elements.iter().map(|e| e[x]).collect()).unwrap())
        .collect();
    Ok(SetCone {
        size: elements.len(),
        elements,
        legs,
        direction: Direction::Cone,
    })
}

/// Disjoint union of all `F(X)` modulo `x ~ F(f)(x)`, with injections.
pub fn concrete_colimit(f: &Functor) -> Result<SetCone, UniversalError> {
    let sizes = concrete_sizes(f)?;
    let (j, t) = (&*f.source, &*f.target);
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut total = 0;
    for &s in &sizes {
        offsets.push(total);
        total += s;
    }
    let mut uf = UnionFind::<usize>::new(total);
    for m in j.morphisms().filter(|&m| !j.is_identity(m)) {
        let fun = t.function(f.mor(m)).unwrap();
        let (x, y) = (j.dom(m).0, j.cod(m).0);
        for e in 0..sizes[x] {
            uf.union(offsets[x] + e, offsets[y] + fun.apply(e));
        }
    }
    let mut class_of = vec![0; total];
    let mut roots: HashMap<usize, usize> = HashMap::new();
    let mut elements = Vec::new();
    for x in 0..sizes.len() {
        for e in 0..sizes[x] {
            let root = uf.find(offsets[x] + e);
            class_of[offsets[x] + e] = *roots.entry(root).or_insert_with(|| {
                elements.push(vec![x, e]);
                elements.len() - 1
            });
        }
    }
    let size = elements.len();
    let legs = (0..sizes.len())
        .map(|x| FinFunction::new(size, (0..sizes[x]).map(|e| class_of[offsets[x] + e]).collect()).unwrap())
        .collect();
    Ok(SetCone {
        size,
        elements,
        legs,
        direction: Direction::Cocone,
    })
}

fn lift(f: &Functor, set: SetCone) -> Result<Cone, UniversalError> {
    let t = &*f.target;
    let apex = t
        .object_of_size(set.size)
        .ok_or_else(|| UniversalError::SizeBound(format!("{} has no set of size {}", t.name(), set.size)))?;
    let legs = set
        .legs
        .iter()
        .map(|l| {
            t.morphism_for(l)
                .ok_or_else(|| UniversalError::SizeBound(format!("{} does not contain {l}", t.name())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cone = Cone {
        functor: f.clone(),
        apex,
        legs,
        direction: set.direction,
    };
    let verdict = is_limit_cone(&cone)?;
    if !verdict.universal {
        return Err(UniversalError::NotACone(format!(
            "constructed {:?} over {} failed verification",
            set.direction, f.name
        )));
    }
    Ok(cone)
}

/// Limit of `F: J → finite sets` as a verified cone in `F`'s target.
pub fn limit_finset(f: &Functor) -> Result<Cone, UniversalError> {
    lift(f, concrete_limit(f)?)
}

pub fn colimit_finset(f: &Functor) -> Result<Cone, UniversalError> {
    lift(f, concrete_colimit(f)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub hom_size: usize,
    pub limit_size: usize,
    pub bijective: bool,
}

/// `C[colim F, N] ≅ lim C[F(−), N]`. The right side is computed in sets as
/// the families `(u_X: F(X) → N)` with `u_Y ∘ F(f) = u_X` for every shape
/// arrow `f: X → Y`; the canonical map `u ↦ (u ∘ φ_X)_X` must be a bijection.
pub fn duality_check(f: &Functor, n: Obj) -> Result<DualityReport, UniversalError> {
    let colim = search_colimit(f)?.ok_or_else(|| UniversalError::NoColimit(f.name.clone()))?;
    let (j, c) = (&*f.source, &*f.target);
    let homs: Vec<&[Mor]> = j.objects().map(|x| c.hom(f.obj(x), n)).collect();
    let total = homs.iter().fold(1usize, |acc, h| acc.saturating_mul(h.len()));
    if total > LIMIT_ENUMERATION_LIMIT {
        return Err(UniversalError::SizeBound(format!(
            "{total} candidate families exceed the bound {LIMIT_ENUMERATION_LIMIT}"
        )));
    }
    let compatible = |family: &[Mor]| {
        j.morphisms()
            .all(|m| c.comp(family[j.cod(m).0], f.mor(m)) == family[j.dom(m).0])
    };
    let mut families: Vec<Vec<Mor>> = vec![Vec::new()];
    for h in &homs {
        families = families
            .into_iter()
            .flat_map(|fam| h.iter().map(move |&u| [fam.as_slice(), &[u]].concat()))
            .collect();
    }
    families.retain(|fam| compatible(fam));
    let index: HashMap<&Vec<Mor>, usize> = families.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let lhs = c.hom(colim.apex, n);
    let mut hit = vec![false; families.len()];
    let mut bijective = lhs.len() == families.len();
    for &u in lhs {
        let family: Vec<Mor> = colim.legs.iter().map(|&leg| c.comp(u, leg)).collect();
        match index.get(&family) {
            Some(&i) if !hit[i] => hit[i] = true,
            _ => bijective = false,
        }
    }
    Ok(DualityReport {
        hom_size: lhs.len(),
        limit_size: families.len(),
        bijective: bijective && hit.iter().all(|&h| h),
    })
}

/// A comma category together with the data behind its objects and morphisms.
#[derive(Clone, Debug)]
pub struct Comma {
    pub category: FinCategory,
    /// `(B, a: A → G(B))` for `(A ↓ G)`, `(A, b: F(A) → B)` for `(F ↓ B)`.
    pub objects: Vec<(Obj, Mor)>,
    /// Underlying morphism of each comma morphism.
    pub morphisms: Vec<Mor>,
}

impl Comma {
    pub fn object_of(&self, pair: (Obj, Mor)) -> Option<Obj> {
        self.objects.iter().position(|&p| p == pair).map(Obj)
    }
}

fn assemble_comma(
    name: &str,
    base: &FinCategory,
    objects: Vec<(Obj, Mor)>,
    arrow_ok: impl Fn(Mor, (Obj, Mor), (Obj, Mor)) -> bool,
) -> Result<Comma, UniversalError> {
    let mut data = Vec::new();
    let mut under = Vec::new();
    let mut identities = vec![Mor(0); objects.len()];
    let names: Vec<String> = objects
        .iter()
        .map(|&(o, m)| format!("({},{})", base.object_name(o), m.0))
        .collect();
    for (i, &p) in objects.iter().enumerate() {
        for (j, &q) in objects.iter().enumerate() {
            for &b in base.hom(p.0, q.0) {
                if !arrow_ok(b, p, q) {
                    continue;
                }
                if i == j && b == base.identity(p.0) {
                    identities[i] = Mor(data.len());
                }
                data.push(MorData {
                    name: if i == j && b == base.identity(p.0) {
                        format!("id_{}", names[i])
                    } else {
                        format!("{}:{i}>{j}", base.morphism_name(b))
                    },
                    dom: Obj(i),
                    cod: Obj(j),
                });
                under.push(b);
                if data.len() > COMMA_MORPHISM_LIMIT {
                    return Err(UniversalError::SizeBound(format!(
                        "comma category {name} exceeds {COMMA_MORPHISM_LIMIT} morphisms"
                    )));
                }
            }
        }
    }
    let index: HashMap<(usize, usize, Mor), Mor> = data
        .iter()
        .zip(&under)
        .enumerate()
        .map(|(k, (d, &b))| ((d.dom.0, d.cod.0, b), Mor(k)))
        .collect();
    let m = data.len();
    let mut table = vec![None; m * m];
    for f in 0..m {
        for g in 0..m {
            if data[g].dom == data[f].cod {
                let key = (data[f].dom.0, data[g].cod.0, base.comp(under[g], under[f]));
                table[g * m + f] = index.get(&key).copied();
            }
        }
    }
    let category = FinCategory::from_table(name, names, data, identities, table)?;
    Ok(Comma {
        category,
        objects,
        morphisms: under,
    })
}

/// `(A ↓ G)` for `G: K → L` and `A` in `L`.
pub fn comma_category(a: Obj, g: &Functor) -> Result<Comma, UniversalError> {
    covariant(g)?;
    let (k, l) = (&*g.source, &*g.target);
    let objects: Vec<(Obj, Mor)> = k
        .objects()
        .flat_map(|b| l.hom(a, g.obj(b)).iter().map(move |&m| (b, m)))
        .collect();
    assemble_comma(
        &format!("({}|{})", l.object_name(a), g.name),
        k,
        objects,
        |b, (_, x), (_, y)| l.comp(g.mor(b), x) == y,
    )
}

/// `(F ↓ B)` for `F: L → K` and `B` in `K`.
pub fn comma_category_over(f: &Functor, b: Obj) -> Result<Comma, UniversalError> {
    covariant(f)?;
    let (l, k) = (&*f.source, &*f.target);
    let objects: Vec<(Obj, Mor)> = l
        .objects()
        .flat_map(|a| k.hom(f.obj(a), b).iter().map(move |&m| (a, m)))
        .collect();
    assemble_comma(
        &format!("({}|{})", f.name, k.object_name(b)),
        l,
        objects,
        |a, (_, x), (_, y)| k.comp(y, f.mor(a)) == x,
    )
}

/// `F ⊣ G` with `F: L → K`, `G: K → L`, `η: 1_L → GF`, `ε: FG → 1_K`. The
/// table `phi[a * |K| + b]` runs parallel to `hom_K(F(a), b)`.
#[derive(Clone, Debug)]
pub struct Adjunction {
    pub left: Functor,
    pub right: Functor,
    pub phi: Vec<Vec<Mor>>,
    pub unit: NatTrans,
    pub counit: NatTrans,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjunctionMode {
    HomBijection,
    UnitCounit,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Adjunction {
    fn k(&self) -> &FinCategory {
        &self.left.target
    }

    /// `φ(f)` for `f: F(a) → b`.
    pub fn phi_of(&self, a: Obj, f: Mor) -> Mor {
        let k = self.k();
        let b = k.cod(f);
        let pos = k.hom(self.left.obj(a), b).iter().position(|&x| x == f).expect("f starts at F(a)");
        self.phi[a.0 * k.object_count() + b.0][pos]
    }

    /// Builds `φ(f) = G(f) ∘ η_A` from a unit and counit.
    pub fn from_unit_counit(left: Functor, right: Functor, unit: NatTrans, counit: NatTrans) -> Adjunction {
        let (l, k) = (&*left.source, &*left.target);
        let mut phi = Vec::with_capacity(l.object_count() * k.object_count());
        for a in l.objects() {
            for b in k.objects() {
                phi.push(
                    k.hom(left.obj(a), b)
                        .iter()
                        .map(|&f| l.comp(right.mor(f), unit.component(a)))
                        .collect(),
                );
            }
        }
        Adjunction {
            left,
            right,
            phi,
            unit,
            counit,
        }
    }
}

fn mismatch(check: &'static str, instance: String) -> UniversalError {
    UniversalError::Mismatch { check, instance }
}

/// Verifies an adjunction in the chosen mode and reports the first failing
/// instance.
pub fn check_adjunction(adj: &Adjunction, mode: AdjunctionMode) -> Result<(), UniversalError> {
    let (f, g) = (&adj.left, &adj.right);
    covariant(f)?;
    covariant(g)?;
    if !same(&f.source, &g.target) || !same(&f.target, &g.source) {
        return Err(mismatch("shape", format!("{} and {} are not opposed", f.name, g.name)));
    }
    let (l, k) = (&*f.source, &*f.target);
    if matches!(mode, AdjunctionMode::HomBijection | AdjunctionMode::Both) {
        if adj.phi.len() != l.object_count() * k.object_count() {
            return Err(mismatch("bijection", "phi is not total".into()));
        }
        for a in l.objects() {
            for b in k.objects() {
                let table = &adj.phi[a.0 * k.object_count() + b.0];
                let source = k.hom(f.obj(a), b);
                let target = l.hom(a, g.obj(b));
                let mut seen: Vec<Mor> = table.clone();
                seen.sort_unstable();
                seen.dedup();
                let ok = table.len() == source.len()
                    && seen.len() == table.len()
                    && table.len() == target.len()
                    && table.iter().all(|m| target.contains(m));
                if !ok {
                    return Err(mismatch(
                        "bijection",
                        format!("({}, {})", l.object_name(a), k.object_name(b)),
                    ));
                }
            }
        }
        // φ(g ∘ f ∘ F(h)) = G(g) ∘ φ(f) ∘ h
        for a in l.objects() {
            for b in k.objects() {
                for &fm in k.hom(f.obj(a), b) {
                    let pf = adj.phi_of(a, fm);
                    for &h in l.into(a) {
                        for &gm in k.out_of(b) {
                            let left_side = adj.phi_of(l.dom(h), k.comp(gm, k.comp(fm, f.mor(h))));
                            let right_side = l.comp(g.mor(gm), l.comp(pf, h));
                            if left_side != right_side {
                                return Err(mismatch(
                                    "naturality of phi",
                                    format!(
                                        "f = {}, h = {}, g = {}",
                                        k.morphism_name(fm),
                                        l.morphism_name(h),
                                        k.morphism_name(gm)
                                    ),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    if matches!(mode, AdjunctionMode::UnitCounit | AdjunctionMode::Both) {
        let gf = compose_functors(g, f)?;
        let fg = compose_functors(f, g)?;
        let (eta, eps) = (&adj.unit, &adj.counit);
        if !same_functor(&eta.target, &gf) || eta.source.object_map != l.objects().collect::<Vec<_>>() {
            return Err(mismatch("unit", "unit is not 1_L → GF".into()));
        }
        if !same_functor(&eps.source, &fg) || eps.target.object_map != k.objects().collect::<Vec<_>>() {
            return Err(mismatch("counit", "counit is not FG → 1_K".into()));
        }
        if let Some(w) = check_natural(eta)?.witness {
            return Err(mismatch("unit naturality", l.morphism_name(w).into()));
        }
        if let Some(w) = check_natural(eps)?.witness {
            return Err(mismatch("counit naturality", k.morphism_name(w).into()));
        }
        for b in k.objects() {
            let gb = g.obj(b);
            if l.comp(g.mor(eps.component(b)), eta.component(gb)) != l.identity(gb) {
                return Err(mismatch("triangle G(eps) . eta_G", k.object_name(b).into()));
            }
        }
        for a in l.objects() {
            let fa = f.obj(a);
            if k.comp(eps.component(fa), f.mor(eta.component(a))) != k.identity(fa) {
                return Err(mismatch("triangle eps_F . F(eta)", l.object_name(a).into()));
            }
        }
    }
    if mode == AdjunctionMode::Both {
        for a in l.objects() {
            for b in k.objects() {
                for &fm in k.hom(f.obj(a), b) {
                    if adj.phi_of(a, fm) != l.comp(g.mor(fm), adj.unit.component(a)) {
                        return Err(mismatch("phi = G(f) . eta", k.morphism_name(fm).into()));
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub enum AdjointSearch {
    Found(Box<Adjunction>),
    /// No universal arrow at this object.
    Absent { object: String },
}

fn unique_comma_arrow(comma: &Comma, from: Obj, to: Obj) -> Mor {
    let hom = comma.category.hom(from, to);
    debug_assert_eq!(hom.len(), 1);
    comma.morphisms[hom[0].0]
}

/// Searches for a left adjoint of `functor` (`side = Left`, from initial
/// objects of `(A ↓ G)`) or a right adjoint (`side = Right`, from terminal
/// objects of `(F ↓ B)`), and verifies the result in both modes.
pub fn find_adjoint(functor: &Functor, side: Side) -> Result<AdjointSearch, UniversalError> {
    covariant(functor)?;
    let adj = match side {
        Side::Left => {
            let g = functor;
            let (k, l) = (&g.source, &g.target);
            let mut commas = Vec::with_capacity(l.object_count());
            let mut universal = Vec::with_capacity(l.object_count());
            for a in l.objects() {
                let comma = comma_category(a, g)?;
                let Some(init) = find_special_object(&comma.category, SpecialKind::Initial) else {
                    return Ok(AdjointSearch::Absent {
                        object: l.object_name(a).into(),
                    });
                };
                universal.push(comma.objects[init.0]);
                commas.push((comma, init));
            }
            let mut morphism_map = Vec::with_capacity(l.morphism_count());
            for h in l.morphisms() {
                let (a, a2) = (l.dom(h), l.cod(h));
                let (comma, init) = &commas[a.0];
                let target = (universal[a2.0].0, l.comp(universal[a2.0].1, h));
                morphism_map.push(unique_comma_arrow(comma, *init, comma.object_of(target).unwrap()));
            }
            let f = Functor::new(
                &format!("{}_left", g.name),
                l.clone(),
                k.clone(),
                Variance::Covariant,
                universal.iter().map(|u| u.0).collect(),
                morphism_map,
            )?;
            let unit = NatTrans {
                name: "eta".into(),
                source: crate::functor::identity_functor(l),
                target: compose_functors(g, &f)?,
                components: universal.iter().map(|u| u.1).collect(),
            };
            let mut counit_components = Vec::with_capacity(k.object_count());
            for b in k.objects() {
                let (comma, init) = &commas[g.obj(b).0];
                let to = comma.object_of((b, l.identity(g.obj(b)))).unwrap();
                counit_components.push(unique_comma_arrow(comma, *init, to));
            }
            let counit = NatTrans {
                name: "eps".into(),
                source: compose_functors(&f, g)?,
                target: crate::functor::identity_functor(k),
                components: counit_components,
            };
            Adjunction::from_unit_counit(f, g.clone(), unit, counit)
        }
        Side::Right => {
            let f = functor;
            let (l, k) = (&f.source, &f.target);
            let mut commas = Vec::with_capacity(k.object_count());
            let mut universal = Vec::with_capacity(k.object_count());
            for b in k.objects() {
                let comma = comma_category_over(f, b)?;
                let Some(term) = find_special_object(&comma.category, SpecialKind::Terminal) else {
                    return Ok(AdjointSearch::Absent {
                        object: k.object_name(b).into(),
                    });
                };
                universal.push(comma.objects[term.0]);
                commas.push((comma, term));
            }
            let mut morphism_map = Vec::with_capacity(k.morphism_count());
            for gm in k.morphisms() {
                let (b, b2) = (k.dom(gm), k.cod(gm));
                let (comma, term) = &commas[b2.0];
                let from = (universal[b.0].0, k.comp(gm, universal[b.0].1));
                morphism_map.push(unique_comma_arrow(comma, comma.object_of(from).unwrap(), *term));
            }
            let g = Functor::new(
                &format!("{}_right", f.name),
                k.clone(),
                l.clone(),
                Variance::Covariant,
                universal.iter().map(|u| u.0).collect(),
                morphism_map,
            )?;
            let counit = NatTrans {
                name: "eps".into(),
                source: compose_functors(f, &g)?,
                target: crate::functor::identity_functor(k),
                components: universal.iter().map(|u| u.1).collect(),
            };
            let mut unit_components = Vec::with_capacity(l.object_count());
            for a in l.objects() {
                let fa = f.obj(a);
                let (comma, term) = &commas[fa.0];
                let from = comma.object_of((a, k.identity(fa))).unwrap();
                unit_components.push(unique_comma_arrow(comma, from, *term));
            }
            let unit = NatTrans {
                name: "eta".into(),
                source: crate::functor::identity_functor(l),
                target: compose_functors(&g, f)?,
                components: unit_components,
            };
            Adjunction::from_unit_counit(f.clone(), g, unit, counit)
        }
    };
    check_adjunction(&adj, AdjunctionMode::Both)?;
    Ok(AdjointSearch::Found(Box::new(adj)))
}

/// `Δ ⊣ ×` on a concrete category closed under binary products, with `φ`
/// given by pairing `(f₁, f₂) ↦ ⟨f₁, f₂⟩`.
pub fn diagonal_product_adjunction(s: &Arc<FinCategory>) -> Result<Adjunction, UniversalError> {
    let times = cartesian_product_functor(s, s)?;
    let delta = diagonal_functor(s);
    let k = times.source.clone();
    let size = |a: Obj| s.set_size(a).unwrap();
    let lookup = |fun: FinFunction| {
        s.morphism_for(&fun)
            .ok_or_else(|| UniversalError::SizeBound(format!("{} does not contain {fun}", s.name())))
    };
    let mut unit = Vec::with_capacity(s.object_count());
    for a in s.objects() {
        let n = size(a);
        unit.push(lookup(FinFunction::new(n * n, (0..n).map(|x| x * n + x).collect()).unwrap())?);
    }
    let mut counit = Vec::with_capacity(k.object_count());
    for p in k.objects() {
        let (b1, b2) = split_product_obj(s, p);
        let (n1, n2) = (size(b1), size(b2));
        let p1 = lookup(FinFunction::new(n1, (0..n1 * n2).map(|z| z / n2).collect()).unwrap())?;
        let p2 = lookup(FinFunction::new(n2, (0..n1 * n2).map(|z| z % n2).collect()).unwrap())?;
        counit.push(product_mor(s, p1, p2));
    }
    let mut phi = Vec::with_capacity(s.object_count() * k.object_count());
    for a in s.objects() {
        for p in k.objects() {
            let (b1, b2) = split_product_obj(s, p);
            let mut row = Vec::new();
            for &fm in k.hom(product_obj(s, a, a), p) {
                let (f1, f2) = crate::category::split_product_mor(s, fm);
                let (f1, f2) = (s.function(f1).unwrap(), s.function(f2).unwrap());
                let n2 = size(b2);
                let pairing = FinFunction::new(size(b1) * n2, (0..size(a)).map(|x| f1.apply(x) * n2 + f2.apply(x)).collect())
                    .unwrap();
                row.push(lookup(pairing)?);
            }
            phi.push(row);
        }
    }
    let unit = NatTrans {
        name: "eta".into(),
        source: crate::functor::identity_functor(s),
        target: compose_functors(&times, &delta)?,
        components: unit,
    };
    let counit = NatTrans {
        name: "eps".into(),
        source: compose_functors(&delta, &times)?,
        target: crate::functor::identity_functor(&k),
        components: counit,
    };
    Ok(Adjunction {
        left: delta,
        right: times,
        phi,
        unit,
        counit,
    })
}

/// Right adjoints send limit cones of `d: J → K` to limit cones; left
/// adjoints send colimit cocones of `d: J → L` to colimit cocones.
pub fn preservation_check(adj: &Adjunction, side: Side, d: &Functor) -> Result<bool, UniversalError> {
    let (functor, dir) = match side {
        Side::Right => (&adj.right, Direction::Cone),
        Side::Left => (&adj.left, Direction::Cocone),
    };
    let found = all_universal_cones(d, dir)?.into_iter().next();
    let cone = match (found, dir) {
        (Some(c), _) => c,
        (None, Direction::Cone) => return Err(UniversalError::NoLimit(d.name.clone())),
        (None, Direction::Cocone) => return Err(UniversalError::NoColimit(d.name.clone())),
    };
    let image = Cone {
        functor: compose_functors(functor, d)?,
        apex: functor.obj(cone.apex),
        legs: cone.legs.iter().map(|&l| functor.mor(l)).collect(),
        direction: dir,
    };
    Ok(is_limit_cone(&image)?.universal)
}
