//! Finite groups given by multiplication tables. The group axioms are checked
//! as commuting diagrams of finite sets `1, G, G×G, G×G×G`, run through the
//! diagram module; actions, homomorphisms and the one-object-category bridge
//! are checked elementwise.

use std::collections::{BTreeSet, HashMap};

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::category::{classify_category, CategoryError, FinCategory, Mor, MorData, Obj};
use crate::diagram::{Diagram, Edge};
use crate::finset::FinFunction;
use crate::topo::ComponentPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed table: {0}")]
    BadTable(String),
    #[error("identity diagram fails at {element}")]
    IdentityFail { element: String },
    #[error("associativity diagram fails at ({x}, {y}, {z})")]
    AssocFail { x: String, y: String, z: String },
    #[error("inverse diagram fails at {element}")]
    InverseFail { element: String },
    #[error("unit diagram fails at {point}")]
    UnitFail { point: String },
    #[error("compatibility diagram fails at g = {g}, h = {h}, x = {point}")]
    CompatFail { g: String, h: String, point: String },
    #[error("not a homomorphism: h({x} * {y}) != h({x}) . h({y})")]
    NotAHom { x: String, y: String },
    #[error("derived property fails: {0}")]
    DerivedFact(String),
    #[error("not a one-object groupoid: {0}")]
    NotOneObjectGroupoid(String),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

/// A validated finite group; `table[a * n + b] = a · b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    elements: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FinGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    /// `Z/n` with elements named `0..n-1`.
    pub fn cyclic(n: usize) -> FinGroup {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        check_group(&names, &rows).expect("cyclic group")
    }

    /// `S_n` on permutations in lexicographic order, `(σ · τ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> FinGroup {
        let perms: Vec<FinFunction> = FinFunction::all(n, n).filter(|f| f.is_bijective()).collect();
        let names: Vec<String> = perms
            .iter()
            .map(|p| format!("p{}", p.values().iter().map(|v| v.to_string()).collect::<String>()))
            .collect();
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| perms.iter().position(|p| Some(p) == s.after(t).as_ref()).unwrap())
                    .collect()
            })
            .collect();
        check_group(&names, &rows).expect("symmetric group")
    }
}

/// Finite-set rendering of a multiplication table.
struct Rendering {
    n: usize,
    mu: FinFunction,
}

impl Rendering {
    fn pair(&self, a: usize, b: usize) -> usize {
        a * self.n + b
    }

    /// `x ↦ (f(x), g(x))` as a function `G → G × G`.
    fn pairing(&self, f: impl Fn(usize) -> usize, g: impl Fn(usize) -> usize) -> FinFunction {
        FinFunction::new(self.n * self.n, (0..self.n).map(|x| self.pair(f(x), g(x))).collect()).unwrap()
    }

    fn mu_times_one(&self) -> FinFunction {
        let n = self.n;
        FinFunction::new(n * n, (0..n * n * n).map(|t| self.pair(self.mu.apply(t / n), t % n)).collect()).unwrap()
    }

    fn one_times_mu(&self) -> FinFunction {
        let n = self.n;
        FinFunction::new(n * n, (0..n * n * n).map(|t| self.pair(t / (n * n), self.mu.apply(t % (n * n)))).collect())
            .unwrap()
    }
}

/// Builds the category of composable paths over `nodes` (one object per
/// node, morphisms identified by endpoints and underlying function), places
/// `edges` (by generator index) and returns the first pair of disagreeing
/// composites as functions. The axiom diagrams are acyclic, so the closure is
/// finite and small.
fn chase(
    generators: &[FinFunction],
    nodes: &[usize],
    edges: &[(usize, usize, usize)],
) -> Result<Option<(FinFunction, FinFunction)>, AlgebraError> {
    let mut arrows: Vec<(usize, usize, FinFunction)> =
        nodes.iter().enumerate().map(|(i, &s)| (i, i, FinFunction::identity(s))).collect();
    let mut index: HashMap<(usize, usize, FinFunction), usize> =
        arrows.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    let mut edge_mor = Vec::with_capacity(edges.len());
    let mut frontier = Vec::new();
    for &(src, dst, g) in edges {
        let key = (src, dst, generators[g].clone());
        let next = arrows.len();
        let i = *index.entry(key.clone()).or_insert_with(|| {
            arrows.push(key);
            frontier.push(next);
            next
        });
        edge_mor.push(i);
    }
    while let Some(f) = frontier.pop() {
        for g in 0..arrows.len() {
            let candidates = [(f, g), (g, f)];
            for (first, second) in candidates {
                let (a, b, ref u) = arrows[first];
                let (b2, c, ref v) = arrows[second];
                if b != b2 {
                    continue;
                }
                let key = (a, c, v.after(u).expect("typed"));
                if !index.contains_key(&key) {
                    index.insert(key.clone(), arrows.len());
                    frontier.push(arrows.len());
                    arrows.push(key);
                }
            }
        }
    }
    let m = arrows.len();
    let mut table = vec![None; m * m];
    for (f, (a, b, u)) in arrows.iter().enumerate() {
        for (g, (b2, c, v)) in arrows.iter().enumerate() {
            if b == b2 {
                table[g * m + f] = Some(Mor(index[&(*a, *c, v.after(u).unwrap())]));
            }
        }
    }
    let objects: Vec<String> = (0..nodes.len()).map(|i| format!("n{i}")).collect();
    let morphisms = arrows
        .iter()
        .enumerate()
        .map(|(i, (a, b, _))| MorData {
            name: if i < nodes.len() { format!("id_n{i}") } else { format!("g{i}") },
            dom: Obj(*a),
            cod: Obj(*b),
        })
        .collect();
    let identities = (0..nodes.len()).map(Mor).collect();
    let c = FinCategory::from_table("Axiom", objects.clone(), morphisms, identities, table)?;
    let node_list = objects.into_iter().enumerate().map(|(i, name)| (name, Obj(i))).collect();
    let edge_list = edges
        .iter()
        .zip(&edge_mor)
        .map(|(&(src, dst, _), &i)| Edge { src, dst, mor: Mor(i) })
        .collect();
    let d = Diagram::new(&c, node_list, edge_list).map_err(|e| AlgebraError::BadTable(e.to_string()))?;
    Ok(d.is_commutative().witness.map(|w| (arrows[w.first.morphism.0].2.clone(), arrows[w.second.morphism.0].2.clone())))
}

fn first_difference(a: &FinFunction, b: &FinFunction) -> usize {
    (0..a.dom()).find(|&x| a.apply(x) != b.apply(x)).expect("composites differ somewhere")
}

/// Validates a multiplication table. The identity and inverses are solved
/// from the table; the identity, associativity and inverse diagrams are then
/// chased in that order.
pub fn check_group(elements: &[String], rows: &[Vec<usize>]) -> Result<FinGroup, AlgebraError> {
    let n = elements.len();
    if n == 0 {
        return Err(AlgebraError::BadTable("a group has at least one element".into()));
    }
    for (i, e) in elements.iter().enumerate() {
        if elements[..i].contains(e) {
            return Err(AlgebraError::BadTable(format!("duplicate element {e}")));
        }
    }
    if rows.len() != n || rows.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
        return Err(AlgebraError::BadTable(format!("table must be {n}×{n} with entries below {n}")));
    }
    let table: Vec<usize> = rows.iter().flatten().copied().collect();
    let mul = |a: usize, b: usize| table[a * n + b];
    let r = Rendering {
        n,
        mu: FinFunction::new(n, table.clone()).unwrap(),
    };
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
        .unwrap_or(0);
    let id = FinFunction::identity(n);

    // G --(e,1)--> G×G --μ--> G,  G --(1,e)--> G×G --μ--> G,  G --1--> G
    let generators = [
        r.pairing(|_| identity, |x| x),
        r.pairing(|x| x, |_| identity),
        r.mu.clone(),
        id.clone(),
    ];
    let nodes = [n, n * n, n * n, n];
    let edges = [(0, 1, 0), (0, 2, 1), (1, 3, 2), (2, 3, 2), (0, 3, 3)];
    if let Some((a, b)) = chase(&generators, &nodes, &edges)? {
        return Err(AlgebraError::IdentityFail {
            element: elements[first_difference(&a, &b)].clone(),
        });
    }

    // G×G×G --μ×1--> G×G --μ--> G  against  G×G×G --1×μ--> G×G --μ--> G
    let generators = [r.mu_times_one(), r.one_times_mu(), r.mu.clone()];
    let nodes = [n * n * n, n * n, n * n, n];
    let edges = [(0, 1, 0), (0, 2, 1), (1, 3, 2), (2, 3, 2)];
    if let Some((a, b)) = chase(&generators, &nodes, &edges)? {
        let t = first_difference(&a, &b);
        return Err(AlgebraError::AssocFail {
            x: elements[t / (n * n)].clone(),
            y: elements[t / n % n].clone(),
            z: elements[t % n].clone(),
        });
    }

    // G --(ν,1)--> G×G --μ--> G,  G --(1,ν)--> G×G --μ--> G,  G --!--> 1 --e--> G
    let inverse: Vec<usize> = (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                .unwrap_or(identity)
        })
        .collect();
    let generators = [
        r.pairing(|x| inverse[x], |x| x),
        r.pairing(|x| x, |x| inverse[x]),
        r.mu.clone(),
        FinFunction::constant(n, 1, 0).unwrap(),
        FinFunction::constant(1, n, identity).unwrap(),
    ];
    let nodes = [n, n * n, n * n, n, 1];
    let edges = [(0, 1, 0), (0, 2, 1), (1, 3, 2), (2, 3, 2), (0, 4, 3), (4, 3, 4)];
    if let Some((a, b)) = chase(&generators, &nodes, &edges)? {
        return Err(AlgebraError::InverseFail {
            element: elements[first_difference(&a, &b)].clone(),
        });
    }
    Ok(FinGroup {
        elements: elements.to_vec(),
        table,
        identity,
        inverse,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianVerdict {
    pub abelian: bool,
    pub witness: Option<(usize, usize)>,
}

/// `μ ∘ T = μ` with `T(a, b) = (b, a)`, first failing pair as witness.
pub fn is_abelian(g: &FinGroup) -> AbelianVerdict {
    let n = g.order();
    let witness = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| g.mul(a, b) != g.mul(b, a));
    AbelianVerdict {
        abelian: witness.is_none(),
        witness,
    }
}

/// Left action `act[g * |A| + x] = g · x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionData {
    pub group: FinGroup,
    pub carrier: Vec<String>,
    pub act: Vec<usize>,
}

impl ActionData {
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.act[g * self.carrier.len() + x]
    }
}

/// Unit `e · x = x` and compatibility `g · (h · x) = (gh) · x`.
pub fn check_action(a: &ActionData) -> Result<(), AlgebraError> {
    let (g, m) = (&a.group, a.carrier.len());
    if a.act.len() != g.order() * m || a.act.iter().any(|&v| v >= m) {
        return Err(AlgebraError::BadTable("action table must be |G|×|A| with entries in A".into()));
    }
    if let Some(x) = (0..m).find(|&x| a.apply(g.identity(), x) != x) {
        return Err(AlgebraError::UnitFail {
            point: a.carrier[x].clone(),
        });
    }
    for p in 0..g.order() {
        for q in 0..g.order() {
            for x in 0..m {
                if a.apply(p, a.apply(q, x)) != a.apply(g.mul(p, q), x) {
                    return Err(AlgebraError::CompatFail {
                        g: g.elements[p].clone(),
                        h: g.elements[q].clone(),
                        point: a.carrier[x].clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

pub fn orbits(a: &ActionData) -> ComponentPartition {
    let m = a.carrier.len();
    let mut uf = UnionFind::new(m);
    for g in 0..a.group.order() {
        for x in 0..m {
            uf.union(x, a.apply(g, x));
        }
    }
    ComponentPartition::from_union_find(m, &uf)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: FinGroup,
    pub target: FinGroup,
    pub map: Vec<usize>,
}

/// `h(x * y) = h(x) · h(y)`, then the consequences `h(e) = e` and
/// `h(x⁻¹) = h(x)⁻¹`.
pub fn check_hom(h: &GroupHom) -> Result<(), AlgebraError> {
    let (s, t) = (&h.source, &h.target);
    if h.map.len() != s.order() || h.map.iter().any(|&v| v >= t.order()) {
        return Err(AlgebraError::BadTable("map must send every element into the target".into()));
    }
    for x in 0..s.order() {
        for y in 0..s.order() {
            if h.map[s.mul(x, y)] != t.mul(h.map[x], h.map[y]) {
                return Err(AlgebraError::NotAHom {
                    x: s.elements[x].clone(),
                    y: s.elements[y].clone(),
                });
            }
        }
    }
    if h.map[s.identity()] != t.identity() {
        return Err(AlgebraError::DerivedFact("h(e) is not the identity".into()));
    }
    if let Some(x) = (0..s.order()).find(|&x| h.map[s.inv(x)] != t.inv(h.map[x])) {
        return Err(AlgebraError::DerivedFact(format!("h({}^-1) != h({})^-1", s.elements[x], s.elements[x])));
    }
    Ok(())
}

fn is_subgroup(g: &FinGroup, set: &BTreeSet<usize>) -> bool {
    set.contains(&g.identity())
        && set.iter().all(|&a| set.contains(&g.inv(a)) && set.iter().all(|&b| set.contains(&g.mul(a, b))))
}

/// `Ker h`, verified to be a normal subgroup.
pub fn kernel(h: &GroupHom) -> Result<Vec<usize>, AlgebraError> {
    check_hom(h)?;
    let g = &h.source;
    let k: BTreeSet<usize> = (0..g.order()).filter(|&x| h.map[x] == h.target.identity()).collect();
    let normal = (0..g.order()).all(|x| k.iter().all(|&n| k.contains(&g.mul(g.mul(x, n), g.inv(x)))));
    if !is_subgroup(g, &k) || !normal {
        return Err(AlgebraError::DerivedFact("kernel is not a normal subgroup".into()));
    }
    Ok(k.into_iter().collect())
}

/// `Im h`, verified to be a subgroup.
pub fn image(h: &GroupHom) -> Result<Vec<usize>, AlgebraError> {
    check_hom(h)?;
    let im: BTreeSet<usize> = h.map.iter().copied().collect();
    if !is_subgroup(&h.target, &im) {
        return Err(AlgebraError::DerivedFact("image is not a subgroup".into()));
    }
    Ok(im.into_iter().collect())
}

/// Trivial kernel, cross-checked against injectivity.
pub fn is_group_mono(h: &GroupHom) -> Result<bool, AlgebraError> {
    let trivial = kernel(h)? == vec![h.source.identity()];
    let injective = h.map.iter().collect::<BTreeSet<_>>().len() == h.map.len();
    if trivial != injective {
        return Err(AlgebraError::DerivedFact("trivial kernel and injectivity disagree".into()));
    }
    Ok(trivial)
}

/// One object `*`, one morphism per element, `g ∘ f = g · f`.
pub fn group_to_category(g: &FinGroup) -> FinCategory {
    let n = g.order();
    let morphisms = g
        .elements
        .iter()
        .map(|e| MorData {
            name: e.clone(),
            dom: Obj(0),
            cod: Obj(0),
        })
        .collect();
    let table = (0..n * n).map(|i| Some(Mor(g.mul(i / n, i % n)))).collect();
    FinCategory::from_table("Group", vec!["*".into()], morphisms, vec![Mor(g.identity())], table)
        .expect("a group is a one-object category")
}

pub fn category_to_group(c: &FinCategory) -> Result<FinGroup, AlgebraError> {
    if !classify_category(c).one_object_group {
        return Err(AlgebraError::NotOneObjectGroupoid(format!(
            "{} has {} objects or a non-invertible morphism",
            c.name(),
            c.object_count()
        )));
    }
    let names: Vec<String> = c.morphisms().map(|m| c.morphism_name(m).to_string()).collect();
    let rows: Vec<Vec<usize>> = c
        .morphisms()
        .map(|g| c.morphisms().map(|f| c.comp(g, f).0).collect())
        .collect();
    check_group(&names, &rows)
}
