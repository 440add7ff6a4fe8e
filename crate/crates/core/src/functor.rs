//! Functors between finite categories: the three functor laws, composition,
//! faithfulness/fullness, and the canonical functors (identity, constant,
//! inclusion, diagonal, Hom, Cartesian product) together with the monoidal
//! bifunctoriality square.

use std::sync::Arc;

use thiserror::Error;

use crate::category::{
    opposite_category, product_category, product_mor, product_obj, split_product_mor, split_product_obj, subcategory,
    CategoryError, FinCategory, Mor, Obj, SubSelection,
};
use crate::diagram::{CommutativityVerdict, Diagram, Edge};
use crate::finset::{finset_skeleton_bounded, FinFunction, DEFAULT_SKELETON_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    Covariant,
    Contravariant,
}

impl Variance {
    /// Variance of a composite: two reversals cancel.
    pub fn then(self, other: Variance) -> Variance {
        if self == other {
            Variance::Covariant
        } else {
            Variance::Contravariant
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("map is not total: {0}")]
    NotTotal(String),
    #[error("law 1 (endpoints): {morphism} ↦ {image} has the wrong endpoints")]
    EndpointViolation { morphism: String, image: String },
    #[error("law 2 (identities): identity of {object} is not sent to an identity")]
    IdentityViolation { object: String },
    #[error("law 3 (composition): image of {g} ∘ {f} is not the composite of the images")]
    CompositionViolation { g: String, f: String },
    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),
    #[error("size bound: {0}")]
    SizeBound(String),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

impl FunctorError {
    /// Which functor law a violation breaks, if any.
    pub fn law(&self) -> Option<u8> {
        match self {
            FunctorError::EndpointViolation { .. } => Some(1),
            FunctorError::IdentityViolation { .. } => Some(2),
            FunctorError::CompositionViolation { .. } => Some(3),
            _ => None,
        }
    }
}

/// Object and morphism maps with a variance flag. Construct through
/// [`Functor::new`] to have the laws checked; the fields stay public so that
/// deliberately broken data can be fed to the validators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    pub name: String,
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    pub variance: Variance,
    pub object_map: Vec<Obj>,
    pub morphism_map: Vec<Mor>,
}

pub(crate) fn same(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Functor {
    pub fn new(
        name: &str,
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        variance: Variance,
        object_map: Vec<Obj>,
        morphism_map: Vec<Mor>,
    ) -> Result<Self, FunctorError> {
        let f = Functor {
            name: name.to_string(),
            source,
            target,
            variance,
            object_map,
            morphism_map,
        };
        validate_functor(&f)?;
        Ok(f)
    }

    pub fn obj(&self, a: Obj) -> Obj {
        self.object_map[a.0]
    }

    pub fn mor(&self, f: Mor) -> Mor {
        self.morphism_map[f.0]
    }

    pub fn is_covariant(&self) -> bool {
        self.variance == Variance::Covariant
    }

    /// The same data read as a covariant functor out of the opposite source.
    pub fn as_covariant_on_opposite(&self) -> Functor {
        Functor {
            name: format!("{}^op", self.name),
            source: Arc::new(opposite_category(&self.source)),
            target: self.target.clone(),
            variance: self.variance.then(Variance::Contravariant),
            object_map: self.object_map.clone(),
            morphism_map: self.morphism_map.clone(),
        }
    }
}

/// Checks the three functor laws in order and reports the first violation.
pub fn validate_functor(f: &Functor) -> Result<(), FunctorError> {
    let (s, t) = (&*f.source, &*f.target);
    if f.object_map.len() != s.object_count() || f.object_map.iter().any(|o| o.0 >= t.object_count()) {
        return Err(FunctorError::NotTotal("object map".into()));
    }
    if f.morphism_map.len() != s.morphism_count() || f.morphism_map.iter().any(|m| m.0 >= t.morphism_count()) {
        return Err(FunctorError::NotTotal("morphism map".into()));
    }
    for m in s.morphisms() {
        let img = f.mor(m);
        let (a, b) = (f.obj(s.dom(m)), f.obj(s.cod(m)));
        let (want_dom, want_cod) = match f.variance {
            Variance::Covariant => (a, b),
            Variance::Contravariant => (b, a),
        };
        if t.dom(img) != want_dom || t.cod(img) != want_cod {
            return Err(FunctorError::EndpointViolation {
                morphism: s.morphism_name(m).into(),
                image: t.morphism_name(img).into(),
            });
        }
    }
    for a in s.objects() {
        if f.mor(s.identity(a)) != t.identity(f.obj(a)) {
            return Err(FunctorError::IdentityViolation {
                object: s.object_name(a).into(),
            });
        }
    }
    for m in s.morphisms() {
        for &g in s.out_of(s.cod(m)) {
            let image = f.mor(s.comp(g, m));
            let expected = match f.variance {
                Variance::Covariant => t.comp(f.mor(g), f.mor(m)),
                Variance::Contravariant => t.comp(f.mor(m), f.mor(g)),
            };
            if image != expected {
                return Err(FunctorError::CompositionViolation {
                    g: s.morphism_name(g).into(),
                    f: s.morphism_name(m).into(),
                });
            }
        }
    }
    Ok(())
}

pub fn identity_functor(c: &Arc<FinCategory>) -> Functor {
    Functor {
        name: format!("1_{}", c.name()),
        source: c.clone(),
        target: c.clone(),
        variance: Variance::Covariant,
        object_map: c.objects().collect(),
        morphism_map: c.morphisms().collect(),
    }
}

/// Sends everything to `obj` and its identity.
pub fn constant_functor(source: &Arc<FinCategory>, target: &Arc<FinCategory>, obj: Obj) -> Functor {
    Functor {
        name: format!("const_{}", target.object_name(obj)),
        source: source.clone(),
        target: target.clone(),
        variance: Variance::Covariant,
        object_map: vec![obj; source.object_count()],
        morphism_map: vec![target.identity(obj); source.morphism_count()],
    }
}

/// `G ∘ F`; variances multiply.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor, FunctorError> {
    if !same(&f.target, &g.source) {
        return Err(FunctorError::SourceTargetMismatch(format!(
            "target {} of {} is not source {} of {}",
            f.target.name(),
            f.name,
            g.source.name(),
            g.name
        )));
    }
    Ok(Functor {
        name: format!("{}.{}", g.name, f.name),
        source: f.source.clone(),
        target: g.target.clone(),
        variance: f.variance.then(g.variance),
        object_map: f.object_map.iter().map(|&a| g.obj(a)).collect(),
        morphism_map: f.morphism_map.iter().map(|&m| g.mor(m)).collect(),
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FunctorClass {
    pub faithful: bool,
    pub full: bool,
    pub full_embedding: bool,
}

/// Injectivity and surjectivity of `F` on every hom-set.
pub fn classify_functor(f: &Functor) -> FunctorClass {
    let (s, t) = (&*f.source, &*f.target);
    let mut faithful = true;
    let mut full = true;
    for a in s.objects() {
        for b in s.objects() {
            let mut images: Vec<Mor> = s.hom(a, b).iter().map(|&m| f.mor(m)).collect();
            images.sort_unstable();
            let before = images.len();
            images.dedup();
            faithful &= images.len() == before;
            let target_hom = match f.variance {
                Variance::Covariant => t.hom(f.obj(a), f.obj(b)),
                Variance::Contravariant => t.hom(f.obj(b), f.obj(a)),
            };
            full &= target_hom.iter().all(|m| images.binary_search(m).is_ok());
        }
    }
    FunctorClass {
        faithful,
        full,
        full_embedding: faithful && full,
    }
}

/// Inclusion of the selected subcategory into `c`.
pub fn inclusion_functor(c: &Arc<FinCategory>, sel: &SubSelection) -> Result<Functor, FunctorError> {
    let name = format!("{}_sub", c.name());
    let sub = subcategory(c, sel, &name)?;
    Functor::new(
        &format!("In_{name}"),
        Arc::new(sub),
        c.clone(),
        Variance::Covariant,
        sel.objects.clone(),
        sel.morphisms.clone(),
    )
}

/// `A ↦ (A, A)` into `C × C`.
pub fn diagonal_functor(c: &Arc<FinCategory>) -> Functor {
    let target = Arc::new(product_category(c, c));
    Functor {
        name: format!("Delta_{}", c.name()),
        source: c.clone(),
        target,
        variance: Variance::Covariant,
        object_map: c.objects().map(|a| product_obj(c, a, a)).collect(),
        morphism_map: c.morphisms().map(|f| product_mor(c, f, f)).collect(),
    }
}

/// Position of `m` in `c.hom(dom, cod)`.
pub(crate) fn hom_position(c: &FinCategory, m: Mor) -> usize {
    c.hom(c.dom(m), c.cod(m)).iter().position(|&x| x == m).expect("morphism is in its hom-set")
}

fn skeleton_for(size: usize) -> Result<Arc<FinCategory>, FunctorError> {
    if size > DEFAULT_SKELETON_LIMIT {
        return Err(FunctorError::SizeBound(format!(
            "hom-set of size {size} exceeds the skeleton bound {DEFAULT_SKELETON_LIMIT}"
        )));
    }
    Ok(Arc::new(finset_skeleton_bounded(size, DEFAULT_SKELETON_LIMIT)?))
}

fn set_object(target: &FinCategory, n: usize) -> Result<Obj, FunctorError> {
    target
        .object_of_size(n)
        .ok_or_else(|| FunctorError::SizeBound(format!("{} has no set of size {n}", target.name())))
}

fn set_morphism(target: &FinCategory, f: &FinFunction) -> Result<Mor, FunctorError> {
    target
        .morphism_for(f)
        .ok_or_else(|| FunctorError::SizeBound(format!("{} does not contain {f}", target.name())))
}

/// `C[A, _]` (covariant) or `C[_, A]` (contravariant) into the smallest
/// finite-set skeleton holding every hom-set. Each hom-set is enumerated in
/// declaration order.
pub fn hom_functor(c: &Arc<FinCategory>, a: Obj, variance: Variance) -> Result<Functor, FunctorError> {
    let largest = c
        .objects()
        .map(|x| match variance {
            Variance::Covariant => c.hom(a, x).len(),
            Variance::Contravariant => c.hom(x, a).len(),
        })
        .max()
        .unwrap_or(0);
    hom_functor_into(c, a, variance, &skeleton_for(largest)?)
}

pub fn hom_functor_into(
    c: &Arc<FinCategory>,
    a: Obj,
    variance: Variance,
    target: &Arc<FinCategory>,
) -> Result<Functor, FunctorError> {
    let mut object_map = Vec::with_capacity(c.object_count());
    for x in c.objects() {
        let size = match variance {
            Variance::Covariant => c.hom(a, x).len(),
            Variance::Contravariant => c.hom(x, a).len(),
        };
        object_map.push(set_object(target, size)?);
    }
    let mut morphism_map = Vec::with_capacity(c.morphism_count());
    for g in c.morphisms() {
        let (x, y) = (c.dom(g), c.cod(g));
        let func = match variance {
            Variance::Covariant => {
                let values = c.hom(a, x).iter().map(|&u| hom_position(c, c.comp(g, u))).collect();
                FinFunction::new(c.hom(a, y).len(), values)
            }
            Variance::Contravariant => {
                let values = c.hom(y, a).iter().map(|&u| hom_position(c, c.comp(u, g))).collect();
                FinFunction::new(c.hom(x, a).len(), values)
            }
        }
        .expect("positions are in range");
        morphism_map.push(set_morphism(target, &func)?);
    }
    let prefix = match variance {
        Variance::Covariant => "Hom_to",
        Variance::Contravariant => "Hom_from",
    };
    Functor::new(
        &format!("{prefix}_{}", c.object_name(a)),
        c.clone(),
        target.clone(),
        variance,
        object_map,
        morphism_map,
    )
}

/// `C[_, _]: C^op × C → FinSet`, `(f, g) ↦ (u ↦ g ∘ u ∘ f)`.
pub fn hom_bifunctor(c: &Arc<FinCategory>) -> Result<Functor, FunctorError> {
    let largest = c
        .objects()
        .flat_map(|x| c.objects().map(move |y| (x, y)))
        .map(|(x, y)| c.hom(x, y).len())
        .max()
        .unwrap_or(0);
    hom_bifunctor_into(c, &skeleton_for(largest)?)
}

pub fn hom_bifunctor_into(c: &Arc<FinCategory>, target: &Arc<FinCategory>) -> Result<Functor, FunctorError> {
    let op = opposite_category(c);
    let source = Arc::new(product_category(&op, c));
    let mut object_map = Vec::with_capacity(source.object_count());
    for p in source.objects() {
        let (x, y) = split_product_obj(c, p);
        object_map.push(set_object(target, c.hom(x, y).len())?);
    }
    let mut morphism_map = Vec::with_capacity(source.morphism_count());
    for p in source.morphisms() {
        // (op_f, g): (X, Y) → (X', Y') with f: X' → X in C
        let (f, g) = split_product_mor(c, p);
        let (x, y) = (c.cod(f), c.dom(g));
        let (x2, y2) = (c.dom(f), c.cod(g));
        let values = c
            .hom(x, y)
            .iter()
            .map(|&u| hom_position(c, c.comp(g, c.comp(u, f))))
            .collect();
        let func = FinFunction::new(c.hom(x2, y2).len(), values).expect("positions are in range");
        morphism_map.push(set_morphism(target, &func)?);
    }
    Functor::new(
        &format!("Hom_{}", c.name()),
        source,
        target.clone(),
        Variance::Covariant,
        object_map,
        morphism_map,
    )
}

/// `k × l: ⟨x, y⟩ ↦ ⟨k x, l y⟩` with row-major pair encoding
/// `⟨x, y⟩ = x · |second factor| + y`.
pub fn product_of_functions(k: &FinFunction, l: &FinFunction) -> FinFunction {
    let mut values = Vec::with_capacity(k.dom() * l.dom());
    for x in 0..k.dom() {
        for y in 0..l.dom() {
            values.push(k.apply(x) * l.cod() + l.apply(y));
        }
    }
    FinFunction::new(k.cod() * l.cod(), values).expect("encoded pairs are in range")
}

/// Cartesian product `S × S → T` for a concrete `S`, landing in a concrete `T`
/// that must contain every product size.
pub fn cartesian_product_functor(base: &Arc<FinCategory>, target: &Arc<FinCategory>) -> Result<Functor, FunctorError> {
    if !base.is_concrete() || !target.is_concrete() {
        return Err(FunctorError::SourceTargetMismatch(
            "Cartesian product needs concrete finite-set categories".into(),
        ));
    }
    let source = Arc::new(product_category(base, base));
    let mut object_map = Vec::with_capacity(source.object_count());
    for p in source.objects() {
        let (a, b) = split_product_obj(base, p);
        object_map.push(set_object(target, base.set_size(a).unwrap() * base.set_size(b).unwrap())?);
    }
    let mut morphism_map = Vec::with_capacity(source.morphism_count());
    for p in source.morphisms() {
        let (f, g) = split_product_mor(base, p);
        let func = product_of_functions(base.function(f).unwrap(), base.function(g).unwrap());
        morphism_map.push(set_morphism(target, &func)?);
    }
    Functor::new(
        &format!("Times_{}", base.name()),
        source,
        target.clone(),
        Variance::Covariant,
        object_map,
        morphism_map,
    )
}

/// A tensor `⊗: K × K → T` with a unit object. `T` is usually `K`; finite
/// skeleta are not closed under products, so a larger target is allowed.
#[derive(Clone, Debug)]
pub struct MonoidalTensor {
    pub base: Arc<FinCategory>,
    pub tensor: Functor,
    pub unit: Obj,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareCheck {
    pub verdict: CommutativityVerdict,
    pub message: Option<String>,
}

/// Builds the square `f ⊗ 1_{A₂}` then `1_{B₁} ⊗ g` against `1_{A₁} ⊗ g` then
/// `f ⊗ 1_{B₂}` and chases it in the tensor's target.
pub fn check_bifunctoriality(t: &MonoidalTensor, f: Mor, g: Mor) -> Result<SquareCheck, FunctorError> {
    let k = &*t.base;
    let source = &*t.tensor.source;
    if source.object_count() != k.object_count() * k.object_count() || source.morphism_count() != k.morphism_count() * k.morphism_count() {
        return Err(FunctorError::SourceTargetMismatch("tensor source is not K × K".into()));
    }
    let (a1, b1) = (k.dom(f), k.cod(f));
    let (a2, b2) = (k.dom(g), k.cod(g));
    let on_obj = |x: Obj, y: Obj| t.tensor.obj(product_obj(k, x, y));
    let on_mor = |x: Mor, y: Mor| t.tensor.mor(product_mor(k, x, y));
    let target = &*t.tensor.target;
    let nodes = vec![
        ("A1xA2".to_string(), on_obj(a1, a2)),
        ("B1xA2".to_string(), on_obj(b1, a2)),
        ("A1xB2".to_string(), on_obj(a1, b2)),
        ("B1xB2".to_string(), on_obj(b1, b2)),
    ];
    let edges = vec![
        Edge { src: 0, dst: 1, mor: on_mor(f, k.identity(a2)) },
        Edge { src: 1, dst: 3, mor: on_mor(k.identity(b1), g) },
        Edge { src: 0, dst: 2, mor: on_mor(k.identity(a1), g) },
        Edge { src: 2, dst: 3, mor: on_mor(f, k.identity(b2)) },
    ];
    let d = Diagram::new(target, nodes, edges)
        .map_err(|e| FunctorError::SourceTargetMismatch(format!("tensor image is not a square: {e}")))?;
    let verdict = d.is_commutative();
    let message = verdict.witness.as_ref().map(|w| d.describe(w));
    Ok(SquareCheck { verdict, message })
}

/// Image of a diagram under a functor; contravariant functors reverse edges.
pub fn map_diagram<'t>(f: &'t Functor, d: &Diagram<'_>) -> Diagram<'t> {
    let nodes = d.nodes().iter().map(|(n, o)| (n.clone(), f.obj(*o))).collect();
    let edges = d
        .edges()
        .iter()
        .map(|e| match f.variance {
            Variance::Covariant => Edge { src: e.src, dst: e.dst, mor: f.mor(e.mor) },
            Variance::Contravariant => Edge { src: e.dst, dst: e.src, mor: f.mor(e.mor) },
        })
        .collect();
    Diagram::new(&f.target, nodes, edges).expect("functor laws preserve edge endpoints")
}
