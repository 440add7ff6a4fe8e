//! Finite categories: storage, axiom validation, morphism and object
//! classification, subcategories, opposites and products.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::finset::FinFunction;

/// Index of an object within one [`FinCategory`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj(pub usize);

/// Index of a morphism within one [`FinCategory`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mor(pub usize);

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorData {
    pub name: String,
    pub dom: Obj,
    pub cod: Obj,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("missing composite {g} ∘ {f}")]
    MissingComposite { g: String, f: String },
    #[error("composition is not associative on ({f}, {g}, {h}): {h} ∘ ({g} ∘ {f}) ≠ ({h} ∘ {g}) ∘ {f}")]
    NotAssociative { f: String, g: String, h: String },
    #[error("identity law fails: {witness}")]
    BadIdentity { witness: String },
    #[error("arrow {arrow} has undeclared endpoint {endpoint}")]
    DanglingEndpoint { arrow: String, endpoint: String },
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("unknown morphism {0}")]
    UnknownMorphism(String),
    #[error("ill-typed composition entry {g} ∘ {f} = {h}")]
    IllTypedComposite { g: String, f: String, h: String },
    #[error("conflicting entries for {g} ∘ {f}")]
    ConflictingComposite { g: String, f: String },
    #[error("size {requested} exceeds the configured bound {limit}")]
    SizeBound { requested: usize, limit: usize },
    #[error("not a subcategory: {0}")]
    NotASubcategory(String),
    #[error("category has no null object")]
    NoNullObject,
    #[error("not a partial order ({axiom}): {witness}")]
    NotAPoset { axiom: &'static str, witness: String },
    #[error("graph has a directed cycle through {0}; its free category is infinite")]
    CyclicGraph(String),
}

const UNDEFINED: u32 = u32::MAX;
const DENSE_LIMIT: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Composition {
    /// `table[g * m + f] = g ∘ f`, `UNDEFINED` off composable pairs.
    Table(Vec<u32>),
    /// Composite found by composing the underlying functions.
    Concrete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Concrete {
    sizes: Vec<usize>,
    functions: Vec<FinFunction>,
    index: HashMap<FinFunction, Mor>,
}

/// A validated finite category. Immutable once built.
#[derive(Clone, Debug)]
pub struct FinCategory {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<MorData>,
    identities: Vec<Mor>,
    composition: Composition,
    homs: Vec<Vec<Mor>>,
    object_index: HashMap<String, Obj>,
    morphism_index: HashMap<String, Mor>,
    concrete: Option<Concrete>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.composition == other.composition
            && self.concrete.as_ref().map(|c| &c.functions) == other.concrete.as_ref().map(|c| &c.functions)
    }
}

impl Eq for FinCategory {}

impl FinCategory {
    fn skeleton(name: &str, objects: Vec<String>, morphisms: Vec<MorData>) -> Result<Self, CategoryError> {
        let mut object_index = HashMap::with_capacity(objects.len());
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), Obj(i)).is_some() {
                return Err(CategoryError::DuplicateId(o.clone()));
            }
        }
        let n = objects.len();
        let mut morphism_index = HashMap::with_capacity(morphisms.len());
        let mut homs = vec![Vec::new(); n * n];
        for (i, m) in morphisms.iter().enumerate() {
            for end in [m.dom, m.cod] {
                if end.0 >= n {
                    return Err(CategoryError::DanglingEndpoint {
                        arrow: m.name.clone(),
                        endpoint: end.to_string(),
                    });
                }
            }
            if morphism_index.insert(m.name.clone(), Mor(i)).is_some() {
                return Err(CategoryError::DuplicateId(m.name.clone()));
            }
            homs[m.dom.0 * n + m.cod.0].push(Mor(i));
        }
        Ok(FinCategory {
            name: name.to_string(),
            objects,
            morphisms,
            identities: Vec::new(),
            composition: Composition::Concrete,
            homs,
            object_index,
            morphism_index,
            concrete: None,
        })
    }

    /// Assembles a category from an explicit composition table
    /// (`table[g * m + f] = Some(g ∘ f)` on composable pairs) and checks every
    /// axiom.
    pub fn from_table(
        name: &str,
        objects: Vec<String>,
        morphisms: Vec<MorData>,
        identities: Vec<Mor>,
        table: Vec<Option<Mor>>,
    ) -> Result<Self, CategoryError> {
        let mut cat = Self::skeleton(name, objects, morphisms)?;
        let m = cat.morphisms.len();
        assert_eq!(table.len(), m * m, "composition table must be m×m");
        cat.set_identities(identities)?;
        cat.composition = Composition::Table(
            table
                .into_iter()
                .map(|e| e.map_or(UNDEFINED, |h| h.0 as u32))
                .collect(),
        );
        cat.check_axioms()?;
        Ok(cat)
    }

    /// [`FinCategory::from_table`] without the axiom check. Used for constructions
    /// that are valid by design (opposites, products) and for feeding broken
    /// tables to the diagram checker; nothing is guaranteed about the result.
    pub fn from_table_unchecked(
        name: &str,
        objects: Vec<String>,
        morphisms: Vec<MorData>,
        identities: Vec<Mor>,
        table: Vec<Option<Mor>>,
    ) -> Result<Self, CategoryError> {
        let mut cat = Self::skeleton(name, objects, morphisms)?;
        cat.set_identities(identities)?;
        cat.composition = Composition::Table(
            table
                .into_iter()
                .map(|e| e.map_or(UNDEFINED, |h| h.0 as u32))
                .collect(),
        );
        Ok(cat)
    }

    /// Assembles a concrete category: morphisms are the given functions and
    /// composition is function composition. Sizes must be distinct, identities
    /// present and the families closed under composition.
    pub fn from_functions(
        name: &str,
        objects: Vec<String>,
        sizes: Vec<usize>,
        morphisms: Vec<MorData>,
        functions: Vec<FinFunction>,
    ) -> Result<Self, CategoryError> {
        let mut cat = Self::skeleton(name, objects, morphisms)?;
        let mut index = HashMap::with_capacity(functions.len());
        for (i, f) in functions.iter().enumerate() {
            if index.insert(f.clone(), Mor(i)).is_some() {
                return Err(CategoryError::DuplicateId(cat.morphisms[i].name.clone()));
            }
        }
        let mut seen_sizes = sizes.clone();
        seen_sizes.sort_unstable();
        seen_sizes.dedup();
        if seen_sizes.len() != sizes.len() {
            return Err(CategoryError::DuplicateId("repeated set size".into()));
        }
        let mut identities = Vec::with_capacity(sizes.len());
        for (a, &s) in sizes.iter().enumerate() {
            match index.get(&FinFunction::identity(s)) {
                Some(&id) => identities.push(id),
                None => {
                    return Err(CategoryError::BadIdentity {
                        witness: format!("no identity function on {}", cat.objects[a]),
                    })
                }
            }
        }
        cat.set_identities(identities)?;
        cat.concrete = Some(Concrete {
            sizes,
            functions,
            index,
        });
        let m = cat.morphisms.len();
        if m <= DENSE_LIMIT {
            let mut table = vec![UNDEFINED; m * m];
            for f in 0..m {
                for &g in cat.out_of(cat.morphisms[f].cod) {
                    let c = cat.concrete.as_ref().unwrap();
                    let h = c.functions[g.0].after(&c.functions[f]).expect("typed");
                    match c.index.get(&h) {
                        Some(&h) => table[g.0 * m + f] = h.0 as u32,
                        None => {
                            return Err(CategoryError::MissingComposite {
                                g: cat.morphisms[g.0].name.clone(),
                                f: cat.morphisms[f].name.clone(),
                            })
                        }
                    }
                }
            }
            cat.composition = Composition::Table(table);
        }
        Ok(cat)
    }

    fn set_identities(&mut self, identities: Vec<Mor>) -> Result<(), CategoryError> {
        if identities.len() != self.objects.len() {
            return Err(CategoryError::BadIdentity {
                witness: "identity assignment is not total".into(),
            });
        }
        for (a, &id) in identities.iter().enumerate() {
            let ok = id.0 < self.morphisms.len() && self.morphisms[id.0].dom == Obj(a) && self.morphisms[id.0].cod == Obj(a);
            if !ok {
                return Err(CategoryError::BadIdentity {
                    witness: format!("identity of {} is not an endomorphism of it", self.objects[a]),
                });
            }
        }
        self.identities = identities;
        Ok(())
    }

    /// Re-runs every category axiom: totality and typing of composition,
    /// identity laws, associativity. Reports the first violation.
    pub fn check_axioms(&self) -> Result<(), CategoryError> {
        let m = self.morphisms.len();
        if let Composition::Table(table) = &self.composition {
            for f in 0..m {
                for g in 0..m {
                    let entry = table[g * m + f];
                    let composable = self.morphisms[g].dom == self.morphisms[f].cod;
                    if !composable {
                        if entry != UNDEFINED {
                            return Err(self.ill_typed(Mor(g), Mor(f), Mor(entry as usize)));
                        }
                        continue;
                    }
                    if entry == UNDEFINED {
                        return Err(CategoryError::MissingComposite {
                            g: self.morphisms[g].name.clone(),
                            f: self.morphisms[f].name.clone(),
                        });
                    }
                    let h = &self.morphisms[entry as usize];
                    if h.dom != self.morphisms[f].dom || h.cod != self.morphisms[g].cod {
                        return Err(self.ill_typed(Mor(g), Mor(f), Mor(entry as usize)));
                    }
                }
            }
        }
        for f in 0..m {
            let f = Mor(f);
            let data = &self.morphisms[f.0];
            let left = self.compose(self.identities[data.cod.0], f);
            if left != Some(f) {
                return Err(CategoryError::BadIdentity {
                    witness: format!(
                        "{} ∘ {} = {}",
                        self.morphism_name(self.identities[data.cod.0]),
                        data.name,
                        left.map_or("undefined".into(), |h| self.morphism_name(h).to_string())
                    ),
                });
            }
            let right = self.compose(f, self.identities[data.dom.0]);
            if right != Some(f) {
                return Err(CategoryError::BadIdentity {
                    witness: format!(
                        "{} ∘ {} = {}",
                        data.name,
                        self.morphism_name(self.identities[data.dom.0]),
                        right.map_or("undefined".into(), |h| self.morphism_name(h).to_string())
                    ),
                });
            }
        }
        for f in 0..m {
            let f = Mor(f);
            for &g in self.out_of(self.cod(f)) {
                let gf = self.compose(g, f).ok_or_else(|| self.missing(g, f))?;
                for &h in self.out_of(self.cod(g)) {
                    let hg = self.compose(h, g).ok_or_else(|| self.missing(h, g))?;
                    let left = self.compose(h, gf).ok_or_else(|| self.missing(h, gf))?;
                    let right = self.compose(hg, f).ok_or_else(|| self.missing(hg, f))?;
                    if left != right {
                        return Err(CategoryError::NotAssociative {
                            f: self.morphism_name(f).into(),
                            g: self.morphism_name(g).into(),
                            h: self.morphism_name(h).into(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn missing(&self, g: Mor, f: Mor) -> CategoryError {
        CategoryError::MissingComposite {
            g: self.morphism_name(g).into(),
            f: self.morphism_name(f).into(),
        }
    }

    fn ill_typed(&self, g: Mor, f: Mor, h: Mor) -> CategoryError {
        CategoryError::IllTypedComposite {
            g: self.morphism_name(g).into(),
            f: self.morphism_name(f).into(),
            h: self.morphisms.get(h.0).map_or("?".into(), |d| d.name.clone()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> + Clone {
        (0..self.objects.len()).map(Obj)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = Mor> + Clone {
        (0..self.morphisms.len()).map(Mor)
    }

    pub fn object_name(&self, a: Obj) -> &str {
        &self.objects[a.0]
    }

    pub fn morphism_name(&self, f: Mor) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn morphism_data(&self, f: Mor) -> &MorData {
        &self.morphisms[f.0]
    }

    pub fn object(&self, name: &str) -> Option<Obj> {
        self.object_index.get(name).copied()
    }

    pub fn morphism(&self, name: &str) -> Option<Mor> {
        self.morphism_index.get(name).copied()
    }

    pub fn dom(&self, f: Mor) -> Obj {
        self.morphisms[f.0].dom
    }

    pub fn cod(&self, f: Mor) -> Obj {
        self.morphisms[f.0].cod
    }

    pub fn identity(&self, a: Obj) -> Mor {
        self.identities[a.0]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identities[self.dom(f).0] == f
    }

    /// `Mor(a, b)` in declaration order.
    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    /// All morphisms with domain `a`, grouped by codomain.
    pub fn out_of(&self, a: Obj) -> impl Iterator<Item = &Mor> {
        let n = self.objects.len();
        self.homs[a.0 * n..(a.0 + 1) * n].iter().flatten()
    }

    /// All morphisms with codomain `b`.
    pub fn into(&self, b: Obj) -> impl Iterator<Item = &Mor> {
        let n = self.objects.len();
        (0..n).flat_map(move |a| self.homs[a * n + b.0].iter())
    }

    /// `g ∘ f`, or `None` when `cod f ≠ dom g`.
    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        if self.morphisms[g.0].dom != self.morphisms[f.0].cod {
            return None;
        }
        match &self.composition {
            Composition::Table(t) => {
                let h = t[g.0 * self.morphisms.len() + f.0];
                (h != UNDEFINED).then_some(Mor(h as usize))
            }
            Composition::Concrete => {
                let c = self.concrete.as_ref().expect("concrete composition");
                let h = c.functions[g.0].after(&c.functions[f.0])?;
                c.index.get(&h).copied()
            }
        }
    }

    /// `g ∘ f` for a pair known to be composable.
    pub fn comp(&self, g: Mor, f: Mor) -> Mor {
        self.compose(g, f).unwrap_or_else(|| {
            panic!(
                "{} ∘ {} is not composable in {}",
                self.morphism_name(g),
                self.morphism_name(f),
                self.name
            )
        })
    }

    /// Composite of a path given in application order (`path[0]` first).
    pub fn comp_path(&self, path: &[Mor]) -> Option<Mor> {
        let (&first, rest) = path.split_first()?;
        rest.iter().try_fold(first, |acc, &g| self.compose(g, acc))
    }

    pub fn is_concrete(&self) -> bool {
        self.concrete.is_some()
    }

    /// Cardinality of an object of a concrete category.
    pub fn set_size(&self, a: Obj) -> Option<usize> {
        self.concrete.as_ref().map(|c| c.sizes[a.0])
    }

    /// Underlying function of a morphism of a concrete category.
    pub fn function(&self, f: Mor) -> Option<&FinFunction> {
        self.concrete.as_ref().map(|c| &c.functions[f.0])
    }

    pub fn morphism_for(&self, f: &FinFunction) -> Option<Mor> {
        self.concrete.as_ref()?.index.get(f).copied()
    }

    pub fn object_of_size(&self, n: usize) -> Option<Obj> {
        let c = self.concrete.as_ref()?;
        c.sizes.iter().position(|&s| s == n).map(Obj)
    }
}

impl fmt::Display for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} objects, {} morphisms",
            self.name,
            self.objects.len(),
            self.morphisms.len()
        )
    }
}

/// A raw category description as written by a user: identities are implied.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CategoryDescription {
    pub name: String,
    pub objects: Vec<String>,
    /// `(name, dom, cod)`
    pub arrows: Vec<(String, String, String)>,
    /// `(g, f, h)` meaning `g ∘ f = h`
    pub compositions: Vec<(String, String, String)>,
}

/// Reserved name of the synthesized identity on `obj`.
pub fn identity_name(obj: &str) -> String {
    format!("id_{obj}")
}

/// Validates a description: identities `id_<Obj>` are synthesized, every
/// composable non-identity pair needs an entry, and associativity is checked
/// exhaustively.
pub fn validate_category(raw: &CategoryDescription) -> Result<FinCategory, CategoryError> {
    let mut objects = Vec::with_capacity(raw.objects.len());
    let mut obj_of: HashMap<&str, Obj> = HashMap::new();
    for o in &raw.objects {
        if obj_of.insert(o.as_str(), Obj(objects.len())).is_some() {
            return Err(CategoryError::DuplicateId(o.clone()));
        }
        objects.push(o.clone());
    }
    let mut morphisms: Vec<MorData> = objects
        .iter()
        .enumerate()
        .map(|(i, o)| MorData {
            name: identity_name(o),
            dom: Obj(i),
            cod: Obj(i),
        })
        .collect();
    let identities: Vec<Mor> = (0..objects.len()).map(Mor).collect();
    let mut mor_of: HashMap<String, Mor> = morphisms.iter().enumerate().map(|(i, m)| (m.name.clone(), Mor(i))).collect();
    for (name, dom, cod) in &raw.arrows {
        let lookup = |e: &String| {
            obj_of.get(e.as_str()).copied().ok_or_else(|| CategoryError::DanglingEndpoint {
                arrow: name.clone(),
                endpoint: e.clone(),
            })
        };
        let (d, c) = (lookup(dom)?, lookup(cod)?);
        if mor_of.contains_key(name) {
            return Err(CategoryError::DuplicateId(name.clone()));
        }
        mor_of.insert(name.clone(), Mor(morphisms.len()));
        morphisms.push(MorData {
            name: name.clone(),
            dom: d,
            cod: c,
        });
    }
    let m = morphisms.len();
    let mut table: Vec<Option<Mor>> = vec![None; m * m];
    let is_id = |f: Mor| f.0 < objects.len();
    for (g, f, h) in &raw.compositions {
        let find = |n: &String| mor_of.get(n).copied().ok_or_else(|| CategoryError::UnknownMorphism(n.clone()));
        let (gm, fm, hm) = (find(g)?, find(f)?, find(h)?);
        let (gd, fd, hd) = (&morphisms[gm.0], &morphisms[fm.0], &morphisms[hm.0]);
        if gd.dom != fd.cod || hd.dom != fd.dom || hd.cod != gd.cod {
            return Err(CategoryError::IllTypedComposite {
                g: g.clone(),
                f: f.clone(),
                h: h.clone(),
            });
        }
        if (is_id(gm) && hm != fm) || (is_id(fm) && hm != gm) {
            return Err(CategoryError::BadIdentity {
                witness: format!("{g} ∘ {f} = {h}"),
            });
        }
        let slot = &mut table[gm.0 * m + fm.0];
        if slot.is_some_and(|prev| prev != hm) {
            return Err(CategoryError::ConflictingComposite { g: g.clone(), f: f.clone() });
        }
        *slot = Some(hm);
    }
    for (i, md) in morphisms.iter().enumerate() {
        let f = Mor(i);
        table[identities[md.cod.0].0 * m + i] = Some(f);
        table[i * m + identities[md.dom.0].0] = Some(f);
    }
    FinCategory::from_table(&raw.name, objects, morphisms, identities, table)
}

/// `Mor(A, B)` by object name.
pub fn hom_set(c: &FinCategory, a: &str, b: &str) -> Result<Vec<Mor>, CategoryError> {
    let find = |n: &str| c.object(n).ok_or_else(|| CategoryError::UnknownObject(n.to_string()));
    Ok(c.hom(find(a)?, find(b)?).to_vec())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorphismClass {
    pub mono: bool,
    pub epi: bool,
    /// The two-sided inverse, when one exists.
    pub iso: Option<Mor>,
    /// Some `g` with `f ∘ g ∘ f = f`.
    pub regular: Option<Mor>,
    pub left_inverse: Option<Mor>,
    pub right_inverse: Option<Mor>,
}

/// Exhaustive cancellability, inverse and regularity search for `f`.
pub fn classify_morphism(c: &FinCategory, f: Mor) -> MorphismClass {
    let (a, b) = (c.dom(f), c.cod(f));
    // mono: u ↦ f∘u injective on every Mor(X, A)
    let mono = c.objects().all(|x| {
        let mut images: Vec<Mor> = c.hom(x, a).iter().map(|&u| c.comp(f, u)).collect();
        let len = images.len();
        images.sort_unstable();
        images.dedup();
        images.len() == len
    });
    let epi = c.objects().all(|x| {
        let mut images: Vec<Mor> = c.hom(b, x).iter().map(|&u| c.comp(u, f)).collect();
        let len = images.len();
        images.sort_unstable();
        images.dedup();
        images.len() == len
    });
    let (id_a, id_b) = (c.identity(a), c.identity(b));
    let backs = c.hom(b, a);
    let left_inverse = backs.iter().copied().find(|&g| c.comp(g, f) == id_a);
    let right_inverse = backs.iter().copied().find(|&g| c.comp(f, g) == id_b);
    let iso = backs
        .iter()
        .copied()
        .find(|&g| c.comp(g, f) == id_a && c.comp(f, g) == id_b);
    let regular = backs.iter().copied().find(|&g| c.comp(f, c.comp(g, f)) == f);
    MorphismClass {
        mono,
        epi,
        iso,
        regular,
        left_inverse,
        right_inverse,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    Initial,
    Terminal,
    Null,
}

pub fn is_initial(c: &FinCategory, a: Obj) -> bool {
    c.objects().all(|x| c.hom(a, x).len() == 1)
}

pub fn is_terminal(c: &FinCategory, a: Obj) -> bool {
    c.objects().all(|x| c.hom(x, a).len() == 1)
}

/// First object of the requested kind in declaration order.
pub fn find_special_object(c: &FinCategory, kind: SpecialKind) -> Option<Obj> {
    c.objects().find(|&a| match kind {
        SpecialKind::Initial => is_initial(c, a),
        SpecialKind::Terminal => is_terminal(c, a),
        SpecialKind::Null => is_initial(c, a) && is_terminal(c, a),
    })
}

/// The composite `A → Z → B` through the first null object `Z`.
pub fn zero_morphism(c: &FinCategory, a: Obj, b: Obj) -> Result<Mor, CategoryError> {
    let z = find_special_object(c, SpecialKind::Null).ok_or(CategoryError::NoNullObject)?;
    Ok(c.comp(c.hom(z, b)[0], c.hom(a, z)[0]))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CategoryClass {
    pub groupoid: bool,
    pub discrete: bool,
    pub one_object_monoid: bool,
    pub one_object_group: bool,
}

pub fn classify_category(c: &FinCategory) -> CategoryClass {
    let groupoid = c.morphisms().all(|f| classify_morphism(c, f).iso.is_some());
    let discrete = c.morphisms().all(|f| c.is_identity(f));
    let one_object = c.object_count() == 1;
    CategoryClass {
        groupoid,
        discrete,
        one_object_monoid: one_object,
        one_object_group: one_object && groupoid,
    }
}

/// A selection of objects and morphisms of an ambient category.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubSelection {
    pub objects: Vec<Obj>,
    pub morphisms: Vec<Mor>,
}

impl SubSelection {
    /// Every morphism of `c` between the chosen objects.
    pub fn full(c: &FinCategory, objects: &[Obj]) -> Self {
        let mut morphisms = Vec::new();
        for f in c.morphisms() {
            if objects.contains(&c.dom(f)) && objects.contains(&c.cod(f)) {
                morphisms.push(f);
            }
        }
        SubSelection {
            objects: objects.to_vec(),
            morphisms,
        }
    }
}

fn check_subcategory(c: &FinCategory, sel: &SubSelection) -> Result<(), CategoryError> {
    let has_obj = |a: Obj| sel.objects.contains(&a);
    let has_mor = |f: Mor| sel.morphisms.contains(&f);
    for &a in &sel.objects {
        if a.0 >= c.object_count() {
            return Err(CategoryError::UnknownObject(a.to_string()));
        }
        if !has_mor(c.identity(a)) {
            return Err(CategoryError::NotASubcategory(format!(
                "identity of {} missing",
                c.object_name(a)
            )));
        }
    }
    for &f in &sel.morphisms {
        if f.0 >= c.morphism_count() {
            return Err(CategoryError::UnknownMorphism(f.to_string()));
        }
        if !has_obj(c.dom(f)) || !has_obj(c.cod(f)) {
            return Err(CategoryError::NotASubcategory(format!(
                "{} has an endpoint outside the selection",
                c.morphism_name(f)
            )));
        }
    }
    for &f in &sel.morphisms {
        for &g in &sel.morphisms {
            if let Some(h) = c.compose(g, f) {
                if !has_mor(h) {
                    return Err(CategoryError::NotASubcategory(format!(
                        "{} ∘ {} = {} is not selected",
                        c.morphism_name(g),
                        c.morphism_name(f),
                        c.morphism_name(h)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// True iff the selection is a subcategory containing every morphism of `c`
/// between each pair of its objects.
pub fn is_full_subcategory(c: &FinCategory, sel: &SubSelection) -> Result<bool, CategoryError> {
    check_subcategory(c, sel)?;
    Ok(sel.objects.iter().all(|&a| {
        sel.objects
            .iter()
            .all(|&b| c.hom(a, b).iter().all(|f| sel.morphisms.contains(f)))
    }))
}

/// The selected subcategory as a category in its own right. Objects and
/// morphisms keep their names and the selection's order.
pub fn subcategory(c: &FinCategory, sel: &SubSelection, name: &str) -> Result<FinCategory, CategoryError> {
    check_subcategory(c, sel)?;
    let obj_pos = |a: Obj| Obj(sel.objects.iter().position(|&x| x == a).unwrap());
    let objects: Vec<String> = sel.objects.iter().map(|&a| c.object_name(a).to_string()).collect();
    let morphisms: Vec<MorData> = sel
        .morphisms
        .iter()
        .map(|&f| MorData {
            name: c.morphism_name(f).to_string(),
            dom: obj_pos(c.dom(f)),
            cod: obj_pos(c.cod(f)),
        })
        .collect();
    let mor_pos: HashMap<Mor, Mor> = sel.morphisms.iter().enumerate().map(|(i, &f)| (f, Mor(i))).collect();
    if c.is_concrete() {
        let sizes = sel.objects.iter().map(|&a| c.set_size(a).unwrap()).collect();
        let functions = sel.morphisms.iter().map(|&f| c.function(f).unwrap().clone()).collect();
        return FinCategory::from_functions(name, objects, sizes, morphisms, functions);
    }
    let identities = sel.objects.iter().map(|&a| mor_pos[&c.identity(a)]).collect();
    let m = sel.morphisms.len();
    let mut table = vec![None; m * m];
    for (i, &f) in sel.morphisms.iter().enumerate() {
        for (j, &g) in sel.morphisms.iter().enumerate() {
            if let Some(h) = c.compose(g, f) {
                table[j * m + i] = Some(mor_pos[&h]);
            }
        }
    }
    FinCategory::from_table(name, objects, morphisms, identities, table)
}

/// `C^op`: same objects, morphisms renamed `op_<id>` with swapped endpoints,
/// `op_g ∘ op_f = op_(f ∘ g)`.
pub fn opposite_category(c: &FinCategory) -> FinCategory {
    let morphisms = c
        .morphisms
        .iter()
        .map(|m| MorData {
            name: format!("op_{}", m.name),
            dom: m.cod,
            cod: m.dom,
        })
        .collect();
    let m = c.morphism_count();
    let mut table = vec![None; m * m];
    for f in c.morphisms() {
        for &g in c.out_of(c.cod(f)) {
            // op_f ∘ op_g = op_(g ∘ f)
            table[f.0 * m + g.0] = Some(c.comp(g, f));
        }
    }
    let name = format!("{}^op", c.name);
    FinCategory::from_table_unchecked(&name, c.objects.clone(), morphisms, c.identities.clone(), table)
        .expect("opposite of a valid category is valid")
}

/// Index of the pair object `(a, b)` in `product_category(c, d)`.
pub fn product_obj(d: &FinCategory, a: Obj, b: Obj) -> Obj {
    Obj(a.0 * d.object_count() + b.0)
}

/// Index of the pair morphism `(f, g)` in `product_category(c, d)`.
pub fn product_mor(d: &FinCategory, f: Mor, g: Mor) -> Mor {
    Mor(f.0 * d.morphism_count() + g.0)
}

/// Components of a pair object of `product_category(c, d)`.
pub fn split_product_obj(d: &FinCategory, p: Obj) -> (Obj, Obj) {
    (Obj(p.0 / d.object_count()), Obj(p.0 % d.object_count()))
}

pub fn split_product_mor(d: &FinCategory, p: Mor) -> (Mor, Mor) {
    (Mor(p.0 / d.morphism_count()), Mor(p.0 % d.morphism_count()))
}

/// `C × D` with componentwise composition. Objects are named `<A>*<B>`,
/// morphisms `<f>*<g>`; see [`product_obj`] / [`product_mor`] for indexing.
pub fn product_category(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let mut objects = Vec::with_capacity(c.object_count() * d.object_count());
    for a in c.objects() {
        for b in d.objects() {
            objects.push(format!("{}*{}", c.object_name(a), d.object_name(b)));
        }
    }
    let mut morphisms = Vec::with_capacity(c.morphism_count() * d.morphism_count());
    for f in c.morphisms() {
        for g in d.morphisms() {
            morphisms.push(MorData {
                name: format!("{}*{}", c.morphism_name(f), d.morphism_name(g)),
                dom: product_obj(d, c.dom(f), d.dom(g)),
                cod: product_obj(d, c.cod(f), d.cod(g)),
            });
        }
    }
    let identities = c
        .objects()
        .flat_map(|a| d.objects().map(move |b| (a, b)))
        .map(|(a, b)| product_mor(d, c.identity(a), d.identity(b)))
        .collect();
    let m = morphisms.len();
    let mut table = vec![None; m * m];
    for f1 in c.morphisms() {
        for &g1 in c.out_of(c.cod(f1)) {
            let h1 = c.comp(g1, f1);
            for f2 in d.morphisms() {
                for &g2 in d.out_of(d.cod(f2)) {
                    let h2 = d.comp(g2, f2);
                    let (f, g) = (product_mor(d, f1, f2), product_mor(d, g1, g2));
                    table[g.0 * m + f.0] = Some(product_mor(d, h1, h2));
                }
            }
        }
    }
    let name = format!("{}*{}", c.name, d.name);
    FinCategory::from_table_unchecked(&name, objects, morphisms, identities, table)
        .expect("product of valid categories is valid")
}
