//! Natural transformations: naturality, vertical and Godement composition,
//! the interchange law, functor categories, and ends/coends of bifunctors
//! into finite sets.

use std::collections::HashMap;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::category::{product_mor, product_obj, split_product_mor, CategoryError, FinCategory, MorData, Mor, Obj};
use crate::finset::FinFunction;
use crate::functor::{compose_functors, same, Functor, FunctorError, Variance};

/// Default bound on candidate component families in [`functor_category`].
pub const FAMILY_LIMIT: usize = 10_000;
/// Largest product of set sizes enumerated by [`end_finset`].
pub const END_ENUMERATION_LIMIT: usize = 1_000_000;
/// Largest number of competing (co)wedges tried per apex size.
const WEDGE_BUDGET: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NatError {
    #[error("component at {object} is {component}, which is not a morphism {expected}")]
    ComponentEndpointMismatch {
        object: String,
        component: String,
        expected: String,
    },
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("size bound: {0}")]
    SizeBound(String),
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

/// `τ: F → G`, one component `τ_A: F(A) → G(A)` per source object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    pub name: String,
    pub source: Functor,
    pub target: Functor,
    pub components: Vec<Mor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalityVerdict {
    pub natural: bool,
    /// First source morphism whose square fails.
    pub witness: Option<Mor>,
}

/// Same categories, variance and maps; names are ignored.
pub fn same_functor(a: &Functor, b: &Functor) -> bool {
    a.variance == b.variance
        && a.object_map == b.object_map
        && a.morphism_map == b.morphism_map
        && same(&a.source, &b.source)
        && same(&a.target, &b.target)
}

fn parallel(f: &Functor, g: &Functor) -> Result<(), NatError> {
    if !same(&f.source, &g.source) || !same(&f.target, &g.target) || f.variance != g.variance {
        return Err(NatError::Mismatch(format!("{} and {} are not parallel", f.name, g.name)));
    }
    Ok(())
}

impl NatTrans {
    pub fn identity(f: &Functor) -> NatTrans {
        NatTrans {
            name: format!("1_{}", f.name),
            source: f.clone(),
            target: f.clone(),
            components: f.object_map.iter().map(|&a| f.target.identity(a)).collect(),
        }
    }

    pub fn component(&self, a: Obj) -> Mor {
        self.components[a.0]
    }

    fn check_components(&self) -> Result<(), NatError> {
        parallel(&self.source, &self.target)?;
        let (s, t) = (&*self.source.source, &*self.source.target);
        if self.components.len() != s.object_count() {
            return Err(NatError::Mismatch(format!("{} has the wrong number of components", self.name)));
        }
        for a in s.objects() {
            let c = self.component(a);
            let (fa, ga) = (self.source.obj(a), self.target.obj(a));
            if c.0 >= t.morphism_count() || t.dom(c) != fa || t.cod(c) != ga {
                return Err(NatError::ComponentEndpointMismatch {
                    object: s.object_name(a).into(),
                    component: t.morphism_data(c).name.clone(),
                    expected: format!("{} → {}", t.object_name(fa), t.object_name(ga)),
                });
            }
        }
        Ok(())
    }
}

/// Checks `G(f) ∘ τ_A = τ_B ∘ F(f)` for every `f: A → B` (reversed for
/// contravariant functors).
pub fn check_natural(tau: &NatTrans) -> Result<NaturalityVerdict, NatError> {
    tau.check_components()?;
    let (f, g) = (&tau.source, &tau.target);
    let (s, t) = (&*f.source, &*f.target);
    for m in s.morphisms() {
        let (a, b) = (s.dom(m), s.cod(m));
        let ok = match f.variance {
            Variance::Covariant => t.comp(g.mor(m), tau.component(a)) == t.comp(tau.component(b), f.mor(m)),
            Variance::Contravariant => t.comp(g.mor(m), tau.component(b)) == t.comp(tau.component(a), f.mor(m)),
        };
        if !ok {
            return Ok(NaturalityVerdict {
                natural: false,
                witness: Some(m),
            });
        }
    }
    Ok(NaturalityVerdict {
        natural: true,
        witness: None,
    })
}

/// `(β ∘ α)_A = β_A ∘ α_A`.
pub fn vcompose(beta: &NatTrans, alpha: &NatTrans) -> Result<NatTrans, NatError> {
    alpha.check_components()?;
    beta.check_components()?;
    if !same_functor(&alpha.target, &beta.source) {
        return Err(NatError::Mismatch(format!(
            "target of {} is not the source of {}",
            alpha.name, beta.name
        )));
    }
    let t = &*alpha.source.target;
    Ok(NatTrans {
        name: format!("{}.{}", beta.name, alpha.name),
        source: alpha.source.clone(),
        target: beta.target.clone(),
        components: alpha
            .components
            .iter()
            .zip(&beta.components)
            .map(|(&a, &b)| t.comp(b, a))
            .collect(),
    })
}

/// Godement product of `α: F → G` (between `A ⇉ B`) and `β: H → K` (between
/// `B ⇉ C`): `(β ∗ α)_A = β_{GA} ∘ H(α_A)`, which must equal
/// `K(α_A) ∘ β_{FA}`. Covariant functors only.
pub fn godement(beta: &NatTrans, alpha: &NatTrans) -> Result<NatTrans, NatError> {
    alpha.check_components()?;
    beta.check_components()?;
    let (f, g) = (&alpha.source, &alpha.target);
    let (h, k) = (&beta.source, &beta.target);
    if [f, g, h, k].iter().any(|x| x.variance != Variance::Covariant) {
        return Err(NatError::Mismatch("Godement product needs covariant functors".into()));
    }
    if !same(&f.target, &h.source) {
        return Err(NatError::Mismatch(format!(
            "{} lands in {} but {} starts at {}",
            alpha.name,
            f.target.name(),
            beta.name,
            h.source.name()
        )));
    }
    let c = &*h.target;
    let mut components = Vec::with_capacity(f.source.object_count());
    for a in f.source.objects() {
        let alpha_a = alpha.component(a);
        let first = c.comp(beta.component(g.obj(a)), h.mor(alpha_a));
        let second = c.comp(k.mor(alpha_a), beta.component(f.obj(a)));
        if first != second {
            return Err(NatError::Mismatch(format!(
                "the two Godement formulas disagree at {}: {} vs {}",
                f.source.object_name(a),
                c.morphism_name(first),
                c.morphism_name(second)
            )));
        }
        components.push(first);
    }
    Ok(NatTrans {
        name: format!("{}*{}", beta.name, alpha.name),
        source: compose_functors(h, f)?,
        target: compose_functors(k, g)?,
        components,
    })
}

/// `(δ ∗ γ) ∘ (β ∗ α) = (δ ∘ β) ∗ (γ ∘ α)` for `α: F → H`, `γ: H → L` between
/// `A ⇉ B` and `β: G → K`, `δ: K → M` between `B ⇉ C`.
pub fn check_interchange(alpha: &NatTrans, beta: &NatTrans, gamma: &NatTrans, delta: &NatTrans) -> Result<bool, NatError> {
    let left = vcompose(&godement(delta, gamma)?, &godement(beta, alpha)?)?;
    let right = godement(&vcompose(delta, beta)?, &vcompose(gamma, alpha)?)?;
    Ok(left.components == right.components)
}

/// Inverse transformation when every component is an isomorphism.
pub fn is_natural_iso(tau: &NatTrans) -> Result<Option<NatTrans>, NatError> {
    tau.check_components()?;
    let t = &*tau.source.target;
    let mut inverse = Vec::with_capacity(tau.components.len());
    for &c in &tau.components {
        let inv = t
            .hom(t.cod(c), t.dom(c))
            .iter()
            .copied()
            .find(|&i| t.comp(i, c) == t.identity(t.dom(c)) && t.comp(c, i) == t.identity(t.cod(c)));
        match inv {
            Some(i) => inverse.push(i),
            None => return Ok(None),
        }
    }
    let inv = NatTrans {
        name: format!("{}^-1", tau.name),
        source: tau.target.clone(),
        target: tau.source.clone(),
        components: inverse,
    };
    if !check_natural(&inv)?.natural {
        return Err(NatError::Mismatch(format!("inverse of {} is not natural", tau.name)));
    }
    Ok(Some(inv))
}

/// Every covariant functor `K → L`, in lexicographic order of object map and
/// then morphism map. Fails with `SizeBound` past `limit` functors.
pub fn all_functors(k: &Arc<FinCategory>, l: &Arc<FinCategory>, limit: usize) -> Result<Vec<Functor>, NatError> {
    let n = k.object_count();
    // Identities are forced; other morphisms are assigned in index order and
    // each composition constraint is tested at its latest-assigned member.
    let order: Vec<Mor> = k.morphisms().filter(|&m| !k.is_identity(m)).collect();
    let mut pos = vec![usize::MAX; k.morphism_count()];
    for (i, &m) in order.iter().enumerate() {
        pos[m.0] = i;
    }
    let mut constraints: Vec<Vec<(Mor, Mor, Mor)>> = vec![Vec::new(); order.len()];
    for f in k.morphisms() {
        for &g in k.out_of(k.cod(f)) {
            let h = k.comp(g, f);
            let latest = [f, g, h].iter().filter(|m| !k.is_identity(**m)).map(|m| pos[m.0]).max();
            if let Some(p) = latest {
                constraints[p].push((g, f, h));
            }
        }
    }
    let mut out = Vec::new();
    let mut object_map = vec![Obj(0); n];
    if n == 0 {
        out.push(Functor {
            name: "F0".into(),
            source: k.clone(),
            target: l.clone(),
            variance: Variance::Covariant,
            object_map: Vec::new(),
            morphism_map: Vec::new(),
        });
        return Ok(out);
    }
    if l.object_count() == 0 {
        return Ok(out);
    }
    loop {
        let mut morphism_map = vec![Mor(usize::MAX); k.morphism_count()];
        for a in k.objects() {
            morphism_map[k.identity(a).0] = l.identity(object_map[a.0]);
        }
        assign(k, l, &order, &constraints, &object_map, &mut morphism_map, 0, &mut out, limit)?;
        // next object map (odometer, last object fastest)
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            object_map[i].0 += 1;
            if object_map[i].0 < l.object_count() {
                break;
            }
            object_map[i] = Obj(0);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    k: &Arc<FinCategory>,
    l: &Arc<FinCategory>,
    order: &[Mor],
    constraints: &[Vec<(Mor, Mor, Mor)>],
    object_map: &[Obj],
    morphism_map: &mut Vec<Mor>,
    depth: usize,
    out: &mut Vec<Functor>,
    limit: usize,
) -> Result<(), NatError> {
    if depth == order.len() {
        if out.len() >= limit {
            return Err(NatError::SizeBound(format!(
                "more than {limit} functors {} → {}",
                k.name(),
                l.name()
            )));
        }
        out.push(Functor {
            name: format!("F{}", out.len()),
            source: k.clone(),
            target: l.clone(),
            variance: Variance::Covariant,
            object_map: object_map.to_vec(),
            morphism_map: morphism_map.clone(),
        });
        return Ok(());
    }
    let m = order[depth];
    let candidates = l.hom(object_map[k.dom(m).0], object_map[k.cod(m).0]).to_vec();
    for cand in candidates {
        morphism_map[m.0] = cand;
        let ok = constraints[depth]
            .iter()
            .all(|&(g, f, h)| l.comp(morphism_map[g.0], morphism_map[f.0]) == morphism_map[h.0]);
        if ok {
            assign(k, l, order, constraints, object_map, morphism_map, depth + 1, out, limit)?;
        }
    }
    morphism_map[m.0] = Mor(usize::MAX);
    Ok(())
}

/// Every component family `F ⇒ G` that passes [`check_natural`], in
/// lexicographic order of components.
pub fn natural_transformations(f: &Functor, g: &Functor) -> Result<Vec<NatTrans>, NatError> {
    parallel(f, g)?;
    let t = &*f.target;
    let homs: Vec<&[Mor]> = f.source.objects().map(|a| t.hom(f.obj(a), g.obj(a))).collect();
    let mut out = Vec::new();
    if homs.iter().any(|h| h.is_empty()) {
        return Ok(out);
    }
    let mut idx = vec![0usize; homs.len()];
    loop {
        let tau = NatTrans {
            name: format!("t{}", out.len()),
            source: f.clone(),
            target: g.clone(),
            components: idx.iter().zip(&homs).map(|(&i, h)| h[i]).collect(),
        };
        if check_natural(&tau)?.natural {
            out.push(tau);
        }
        let mut i = idx.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < homs[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// `L^K` together with the functors and transformations behind its objects
/// and morphisms.
#[derive(Clone, Debug)]
pub struct FunctorCategory {
    pub category: FinCategory,
    pub functors: Vec<Functor>,
    pub transformations: Vec<NatTrans>,
}

pub fn functor_category(k: &Arc<FinCategory>, l: &Arc<FinCategory>) -> Result<FunctorCategory, NatError> {
    functor_category_bounded(k, l, FAMILY_LIMIT)
}

/// Functor category with composition given by [`vcompose`]. `limit` bounds
/// both the number of functors and the number of candidate component families
/// examined.
pub fn functor_category_bounded(k: &Arc<FinCategory>, l: &Arc<FinCategory>, limit: usize) -> Result<FunctorCategory, NatError> {
    let functors = all_functors(k, l, limit)?;
    let mut families = 0usize;
    for f in &functors {
        for g in &functors {
            let count = k
                .objects()
                .map(|a| l.hom(f.obj(a), g.obj(a)).len())
                .fold(1usize, |acc, x| acc.saturating_mul(x));
            families = families.saturating_add(count);
        }
    }
    if families > limit {
        return Err(NatError::SizeBound(format!(
            "{families} candidate component families exceed the bound {limit}"
        )));
    }
    let objects: Vec<String> = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let mut transformations = Vec::new();
    let mut morphisms = Vec::new();
    let mut identities = vec![Mor(0); functors.len()];
    let mut index: HashMap<(usize, usize, Vec<Mor>), Mor> = HashMap::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for (n, mut tau) in natural_transformations(f, g)?.into_iter().enumerate() {
                let id = Mor(morphisms.len());
                let is_identity = i == j && tau.components == NatTrans::identity(f).components;
                tau.name = if is_identity { format!("id_F{i}") } else { format!("t{i}_{j}_{n}") };
                if is_identity {
                    identities[i] = id;
                }
                morphisms.push(MorData {
                    name: tau.name.clone(),
                    dom: Obj(i),
                    cod: Obj(j),
                });
                index.insert((i, j, tau.components.clone()), id);
                transformations.push(tau);
            }
        }
    }
    let m = morphisms.len();
    let mut table = vec![None; m * m];
    for (a, alpha) in transformations.iter().enumerate() {
        for (b, beta) in transformations.iter().enumerate() {
            if morphisms[b].dom != morphisms[a].cod {
                continue;
            }
            let composite = vcompose(beta, alpha)?;
            let key = (morphisms[a].dom.0, morphisms[b].cod.0, composite.components);
            let h = index
                .get(&key)
                .copied()
                .ok_or_else(|| NatError::Mismatch("vertical composite is not natural".into()))?;
            table[b * m + a] = Some(h);
        }
    }
    let name = format!("{}^{}", l.name(), k.name());
    let category = FinCategory::from_table(&name, objects, morphisms, identities, table)?;
    Ok(FunctorCategory {
        category,
        functors,
        transformations,
    })
}

/// Components of a (co)wedge, one function per object of `C`: from the apex
/// into `S(c, c)` for an end, out of `S(c, c)` for a coend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wedge {
    pub apex: usize,
    pub components: Vec<FinFunction>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndResult {
    pub size: usize,
    /// The apex as an object of the bifunctor's target, when it has one.
    pub object: Option<Obj>,
    /// End: the compatible tuples. Coend: one `[c, x]` representative per
    /// class, minimal in `(c, x)` order.
    pub elements: Vec<Vec<usize>>,
    pub wedge: Wedge,
    /// Every competing (co)wedge with apex of size 0, 1 or 2 factors uniquely.
    pub universal: bool,
}

/// Set-valued action of `S` on its concrete target.
struct Bifunctor<'a> {
    c: &'a FinCategory,
    s: &'a Functor,
}

impl<'a> Bifunctor<'a> {
    fn new(c: &'a FinCategory, s: &'a Functor) -> Result<Self, NatError> {
        let n = c.object_count();
        if s.source.object_count() != n * n || s.source.morphism_count() != c.morphism_count() * c.morphism_count() {
            return Err(NatError::Mismatch(format!("{} is not defined on {}^op × {}", s.name, c.name(), c.name())));
        }
        if !s.target.is_concrete() || s.variance != Variance::Covariant {
            return Err(NatError::Mismatch(format!("{} is not a covariant functor into finite sets", s.name)));
        }
        Ok(Bifunctor { c, s })
    }

    fn size(&self, x: Obj, y: Obj) -> usize {
        self.s.target.set_size(self.s.obj(product_obj(self.c, x, y))).unwrap()
    }

    /// `S(f, g)` with `f` read in `C^op`.
    fn act(&self, f: Mor, g: Mor) -> &FinFunction {
        self.s.target.function(self.s.mor(product_mor(self.c, f, g))).unwrap()
    }

    /// For `f: c → c'`: `S(c, f)` and `S(f, c')`, both landing in `S(c, c')`.
    fn legs_of(&self, f: Mor) -> (&FinFunction, &FinFunction) {
        let (c, c2) = (self.c.dom(f), self.c.cod(f));
        (self.act(self.c.identity(c), f), self.act(f, self.c.identity(c2)))
    }

    /// For `f: c → c'`: `S(f, c)` and `S(c', f)`, both out of `S(c', c)`.
    fn colegs_of(&self, f: Mor) -> (&FinFunction, &FinFunction) {
        let (c, c2) = (self.c.dom(f), self.c.cod(f));
        (self.act(f, self.c.identity(c)), self.act(self.c.identity(c2), f))
    }

    fn diagonal_sizes(&self) -> Vec<usize> {
        self.c.objects().map(|x| self.size(x, x)).collect()
    }

    fn is_wedge_point(&self, t: &[usize]) -> bool {
        self.c.morphisms().all(|f| {
            let (cf, fc) = self.legs_of(f);
            cf.apply(t[self.c.dom(f).0]) == fc.apply(t[self.c.cod(f).0])
        })
    }

    fn is_cowedge(&self, w: &[FinFunction]) -> bool {
        self.c.morphisms().all(|f| {
            let (c, c2) = (self.c.dom(f), self.c.cod(f));
            let (fc, cf) = self.colegs_of(f);
            (0..fc.dom()).all(|x| w[c.0].apply(fc.apply(x)) == w[c2.0].apply(cf.apply(x)))
        })
    }
}

/// Odometer over `sizes`; `None` when some factor is empty.
fn tuples(sizes: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let mut next = if sizes.contains(&0) { None } else { Some(vec![0; sizes.len()]) };
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        for i in (0..sizes.len()).rev() {
            succ[i] += 1;
            if succ[i] < sizes[i] {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(cur)
    })
}

fn product_size(sizes: &[usize]) -> usize {
    sizes.iter().fold(1usize, |acc, &s| acc.saturating_mul(s))
}

/// End of `S: C^op × C → FinSet` as the set of dinatural tuples.
pub fn end_finset(c: &Arc<FinCategory>, s: &Functor) -> Result<EndResult, NatError> {
    let b = Bifunctor::new(c, s)?;
    let sizes = b.diagonal_sizes();
    if product_size(&sizes) > END_ENUMERATION_LIMIT {
        return Err(NatError::SizeBound(format!(
            "product of sizes {sizes:?} exceeds {END_ENUMERATION_LIMIT}"
        )));
    }
    let elements: Vec<Vec<usize>> = tuples(&sizes).filter(|t| b.is_wedge_point(t)).collect();
    let e = elements.len();
    let components = c
        .objects()
        .map(|x| FinFunction::new(sizes[x.0], elements.iter().map(|t| t[x.0]).collect()).unwrap())
        .collect();
    let wedge = Wedge { apex: e, components };
    let universal = end_is_universal(&b, &sizes, &wedge);
    Ok(EndResult {
        size: e,
        object: s.target.object_of_size(e),
        elements,
        wedge,
        universal,
    })
}

fn end_is_universal(b: &Bifunctor, sizes: &[usize], wedge: &Wedge) -> bool {
    let points = product_size(sizes);
    for n in 0..=2u32 {
        if points.checked_pow(n).is_none_or(|p| p > WEDGE_BUDGET) {
            break;
        }
        // A competing wedge from an n-set is n points of the product.
        let repeated: Vec<usize> = std::iter::repeat_n(points, n as usize).collect();
        let all_points: Vec<Vec<usize>> = tuples(sizes).collect();
        for choice in tuples(&repeated) {
            let family: Vec<&Vec<usize>> = choice.iter().map(|&i| &all_points[i]).collect();
            if !family.iter().all(|t| b.is_wedge_point(t)) {
                continue;
            }
            let mediators = FinFunction::all(n as usize, wedge.apex)
                .filter(|h| {
                    (0..n as usize).all(|i| {
                        wedge.components.iter().enumerate().all(|(x, w)| w.apply(h.apply(i)) == family[i][x])
                    })
                })
                .count();
            if mediators != 1 {
                return false;
            }
        }
    }
    true
}

/// Coend of `S` as the quotient of `∐_c S(c, c)` by `S(f, c)(x) ~ S(c', f)(x)`.
pub fn coend_finset(c: &Arc<FinCategory>, s: &Functor) -> Result<EndResult, NatError> {
    let b = Bifunctor::new(c, s)?;
    let sizes = b.diagonal_sizes();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &n| {
            let o = *acc;
            *acc += n;
            Some(o)
        })
        .collect();
    let total: usize = sizes.iter().sum();
    let mut uf = UnionFind::<usize>::new(total);
    for f in c.morphisms() {
        let (x, x2) = (c.dom(f), c.cod(f));
        let (fc, cf) = b.colegs_of(f);
        for y in 0..fc.dom() {
            uf.union(offsets[x.0] + fc.apply(y), offsets[x2.0] + cf.apply(y));
        }
    }
    let mut class_of = vec![usize::MAX; total];
    let mut elements = Vec::new();
    let mut root_class: HashMap<usize, usize> = HashMap::new();
    for x in c.objects() {
        for y in 0..sizes[x.0] {
            let i = offsets[x.0] + y;
            let root = uf.find(i);
            let class = *root_class.entry(root).or_insert_with(|| {
                elements.push(vec![x.0, y]);
                elements.len() - 1
            });
            class_of[i] = class;
        }
    }
    let d = elements.len();
    let components: Vec<FinFunction> = c
        .objects()
        .map(|x| FinFunction::new(d, (0..sizes[x.0]).map(|y| class_of[offsets[x.0] + y]).collect()).unwrap())
        .collect();
    let wedge = Wedge { apex: d, components };
    let universal = coend_is_universal(&b, &sizes, &wedge);
    Ok(EndResult {
        size: d,
        object: s.target.object_of_size(d),
        elements,
        wedge,
        universal,
    })
}

fn coend_is_universal(b: &Bifunctor, sizes: &[usize], wedge: &Wedge) -> bool {
    let total: usize = sizes.iter().sum();
    for n in 0..=2usize {
        if n.checked_pow(total as u32).is_none_or(|p| p > WEDGE_BUDGET) {
            break;
        }
        // A competing cowedge is a function from the disjoint union to n.
        for flat in FinFunction::all(total, n) {
            let mut w = Vec::with_capacity(sizes.len());
            let mut at = 0;
            for &k in sizes {
                w.push(FinFunction::new(n, flat.values()[at..at + k].to_vec()).unwrap());
                at += k;
            }
            if !b.is_cowedge(&w) {
                continue;
            }
            let mediators = FinFunction::all(wedge.apex, n)
                .filter(|h| wedge.components.iter().zip(&w).all(|(omega, wc)| h.after(omega).as_ref() == Some(wc)))
                .count();
            if mediators != 1 {
                return false;
            }
        }
    }
    true
}

/// `S(b, c) = T(c)`, constant in the contravariant variable.
pub fn dummy_bifunctor(c: &Arc<FinCategory>, t: &Functor) -> Result<Functor, NatError> {
    if !same(&t.source, c) || t.variance != Variance::Covariant {
        return Err(NatError::Mismatch(format!("{} is not a covariant functor on {}", t.name, c.name())));
    }
    let source = Arc::new(crate::category::product_category(&crate::category::opposite_category(c), c));
    let object_map = source
        .objects()
        .map(|p| t.obj(crate::category::split_product_obj(c, p).1))
        .collect();
    let morphism_map = source.morphisms().map(|p| t.mor(split_product_mor(c, p).1)).collect();
    Ok(Functor::new(
        &format!("{}_dummy", t.name),
        source,
        t.target.clone(),
        Variance::Covariant,
        object_map,
        morphism_map,
    )?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndLimitReport {
    pub end_size: usize,
    pub limit_size: usize,
    /// The mediator from the end wedge to the limit cone is a bijection.
    pub isomorphic: bool,
}

/// Compares `∫_c T(c)` with `lim T`, both computed independently.
pub fn end_equals_limit_check(c: &Arc<FinCategory>, t: &Functor) -> Result<EndLimitReport, NatError> {
    let s = dummy_bifunctor(c, t)?;
    let end = end_finset(c, &s)?;
    let limit = crate::universal::concrete_limit(t).map_err(|e| NatError::Mismatch(e.to_string()))?;
    // Mediator: the unique limit element whose legs agree with the wedge.
    let mut image = Vec::with_capacity(end.size);
    for i in 0..end.size {
        let matches: Vec<usize> = (0..limit.size)
            .filter(|&l| {
                c.objects()
                    .all(|x| limit.legs[x.0].apply(l) == end.wedge.components[x.0].apply(i))
            })
            .collect();
        if matches.len() != 1 {
            return Ok(EndLimitReport {
                end_size: end.size,
                limit_size: limit.size,
                isomorphic: false,
            });
        }
        image.push(matches[0]);
    }
    let isomorphic = end.universal
        && end.size == limit.size
        && FinFunction::new(limit.size, image).is_some_and(|m| m.is_bijective());
    Ok(EndLimitReport {
        end_size: end.size,
        limit_size: limit.size,
        isomorphic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{validate_category, CategoryDescription};
    use crate::finset::finset_skeleton;
    use crate::functor::{constant_functor, hom_bifunctor, identity_functor};

    fn cat(objects: &[&str], arrows: &[(&str, &str, &str)]) -> Arc<FinCategory> {
        Arc::new(
            validate_category(&CategoryDescription {
                name: "T".into(),
                objects: objects.iter().map(|s| s.to_string()).collect(),
                arrows: arrows.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string())).collect(),
                compositions: vec![],
            })
            .unwrap(),
        )
    }

    fn functor_to(s: &Arc<FinCategory>, c: &Arc<FinCategory>, sizes: &[usize], funcs: &[FinFunction]) -> Functor {
        let mut morphism_map = vec![Mor(0); c.morphism_count()];
        let mut k = 0;
        for m in c.morphisms() {
            morphism_map[m.0] = if c.is_identity(m) {
                s.identity(s.object_of_size(sizes[c.dom(m).0]).unwrap())
            } else {
                k += 1;
                s.morphism_for(&funcs[k - 1]).unwrap()
            };
        }
        Functor::new(
            "T",
            c.clone(),
            s.clone(),
            Variance::Covariant,
            sizes.iter().map(|&n| s.object_of_size(n).unwrap()).collect(),
            morphism_map,
        )
        .unwrap()
    }

    #[test]
    fn identity_transformations() {
        let c = cat(&["A", "B"], &[("f", "A", "B")]);
        let id = identity_functor(&c);
        let one = NatTrans::identity(&id);
        assert!(check_natural(&one).unwrap().natural);
        assert_eq!(vcompose(&one, &one).unwrap().components, one.components);
        assert_eq!(godement(&one, &one).unwrap().components, one.components);
        assert!(check_interchange(&one, &one, &one, &one).unwrap());
        assert_eq!(is_natural_iso(&one).unwrap().unwrap().components, one.components);
    }

    #[test]
    fn corrupted_component_has_witness() {
        let s = Arc::new(finset_skeleton(2).unwrap());
        let c = cat(&["A", "B"], &[("f", "A", "B")]);
        let f = functor_to(&s, &c, &[2, 2], &[FinFunction::identity(2)]);
        let mut tau = NatTrans::identity(&f);
        tau.components[0] = s.morphism_for(&FinFunction::new(2, vec![1, 0]).unwrap()).unwrap();
        let v = check_natural(&tau).unwrap();
        assert_eq!(v.witness, c.morphism("f"));
        tau.components[0] = s.identity(Obj(1));
        assert!(matches!(check_natural(&tau), Err(NatError::ComponentEndpointMismatch { .. })));
    }

    #[test]
    fn swap_is_natural_iso() {
        let s = Arc::new(finset_skeleton(2).unwrap());
        let c = cat(&["A"], &[]);
        let f = functor_to(&s, &c, &[2], &[]);
        let swap = s.morphism_for(&FinFunction::new(2, vec![1, 0]).unwrap()).unwrap();
        let tau = NatTrans { name: "s".into(), source: f.clone(), target: f.clone(), components: vec![swap] };
        assert_eq!(is_natural_iso(&tau).unwrap().unwrap().components, vec![swap]);
        let collapse = s.morphism_for(&FinFunction::new(2, vec![0, 0]).unwrap()).unwrap();
        let tau = NatTrans { components: vec![collapse], ..tau };
        assert!(is_natural_iso(&tau).unwrap().is_none());
    }

    #[test]
    fn functor_category_sizes() {
        let point = cat(&["P"], &[]);
        let l = cat(&["A", "B"], &[("f", "A", "B")]);
        let lk = functor_category(&point, &l).unwrap();
        assert_eq!((lk.category.object_count(), lk.category.morphism_count()), (2, 3));
        let kl = functor_category(&l, &point).unwrap();
        assert_eq!((kl.category.object_count(), kl.category.morphism_count()), (1, 1));
        let discrete = cat(&["X", "Y"], &[]);
        let s1 = Arc::new(finset_skeleton(1).unwrap());
        assert_eq!(functor_category(&discrete, &s1).unwrap().category.object_count(), 4);
    }

    #[test]
    fn end_of_hom_on_arrow() {
        let c = cat(&["A", "B"], &[("f", "A", "B")]);
        let hom = hom_bifunctor(&c).unwrap();
        let end = end_finset(&c, &hom).unwrap();
        assert_eq!(end.size, 1);
        assert!(end.universal);
        let coend = coend_finset(&c, &hom).unwrap();
        assert!(coend.universal);
    }

    #[test]
    fn constant_bifunctor_ends() {
        let c = cat(&["A", "B"], &[("f", "A", "B")]);
        let s3 = Arc::new(finset_skeleton(3).unwrap());
        let source = Arc::new(crate::category::product_category(&crate::category::opposite_category(&c), &c));
        let k = constant_functor(&source, &s3, s3.object_of_size(3).unwrap());
        assert_eq!(end_finset(&c, &k).unwrap().size, 3);
        assert_eq!(coend_finset(&c, &k).unwrap().size, 3);
        let t = functor_to(&s3, &c, &[2, 3], &[FinFunction::new(3, vec![0, 2]).unwrap()]);
        let r = end_equals_limit_check(&c, &t).unwrap();
        assert!(r.isomorphic);
        assert_eq!(r.end_size, 2);
    }
}
