//! Finite topological spaces with point subsets as bit masks.

use std::collections::HashMap;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use super::TopError;
use crate::category::{FinCategory, Mor, MorData, Obj};
use crate::finset::{finset_skeleton_bounded, FinFunction, DEFAULT_SKELETON_LIMIT};
use crate::functor::{Functor, Variance};

pub const MAX_POINTS: usize = 64;
/// Largest number of candidate maps examined by [`fintop_category`].
pub const MAP_ENUMERATION_LIMIT: usize = 100_000;

pub type PointSet = u64;

fn full(n: usize) -> PointSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A validated finite space. `opens` is sorted by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinTopSpace {
    name: String,
    points: Vec<String>,
    opens: Vec<PointSet>,
    minimal: Vec<PointSet>,
}

impl FinTopSpace {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn full_set(&self) -> PointSet {
        full(self.points.len())
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(self.full_set() & !s)
    }

    /// Smallest open set containing `x`.
    pub fn minimal_open(&self, x: usize) -> PointSet {
        self.minimal[x]
    }

    pub fn point(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    pub fn render(&self, s: PointSet) -> String {
        let names: Vec<&str> = (0..self.points.len())
            .filter(|&i| s >> i & 1 == 1)
            .map(|i| self.points[i].as_str())
            .collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn discrete(n: usize) -> FinTopSpace {
        let points: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        from_masks("Discrete", points, (0..=full(n)).collect()).expect("power set is a topology")
    }

    pub fn indiscrete(n: usize) -> FinTopSpace {
        let points: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        from_masks("Indiscrete", points, vec![0, full(n)]).expect("indiscrete topology")
    }

    /// Points `p, q` with opens `∅, {p}, {p, q}`.
    pub fn sierpinski() -> FinTopSpace {
        from_masks("Sierpinski", vec!["p".into(), "q".into()], vec![0, 1, 3]).expect("Sierpinski topology")
    }

    /// Points `0..n-1` whose opens are the down-sets `{0..k}` of a chain.
    pub fn chain(n: usize) -> FinTopSpace {
        let points: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        from_masks("Chain", points, (0..=n).map(full).collect()).expect("chain topology")
    }
}

/// Validates a family of point subsets, reporting the first violated axiom.
pub fn validate_space(name: &str, points: &[String], family: &[Vec<String>]) -> Result<FinTopSpace, TopError> {
    if points.len() > MAX_POINTS {
        return Err(TopError::SizeBound(format!("at most {MAX_POINTS} points are supported")));
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(TopError::DuplicateName(p.clone()));
        }
    }
    let mut masks = Vec::with_capacity(family.len());
    for set in family {
        let mut m = 0u64;
        for p in set {
            let i = points
                .iter()
                .position(|q| q == p)
                .ok_or_else(|| TopError::UnknownPoint(p.clone()))?;
            m |= 1 << i;
        }
        masks.push(m);
    }
    from_masks(name, points.to_vec(), masks)
}

/// Mask-level validation; `family` order determines which witness is reported.
pub fn from_masks(name: &str, points: Vec<String>, family: Vec<PointSet>) -> Result<FinTopSpace, TopError> {
    let n = points.len();
    let top = full(n);
    let render = |s: PointSet| {
        let names: Vec<&str> = (0..n).filter(|&i| s >> i & 1 == 1).map(|i| points[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    };
    if !family.contains(&0) {
        return Err(TopError::MissingTopOrBottom("empty set"));
    }
    if !family.contains(&top) {
        return Err(TopError::MissingTopOrBottom("whole space"));
    }
    if let Some(&bad) = family.iter().find(|&&s| s & !top != 0) {
        return Err(TopError::UnknownPoint(format!("mask {bad:#x}")));
    }
    let mut sorted = family.clone();
    sorted.sort_unstable();
    sorted.dedup();
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if sorted.binary_search(&(a | b)).is_err() {
                return Err(TopError::MissingUnion {
                    left: render(a),
                    right: render(b),
                });
            }
        }
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if sorted.binary_search(&(a & b)).is_err() {
                return Err(TopError::MissingIntersection {
                    left: render(a),
                    right: render(b),
                });
            }
        }
    }
    let minimal = (0..n)
        .map(|x| sorted.iter().filter(|&&s| s >> x & 1 == 1).fold(top, |acc, &s| acc & s))
        .collect();
    Ok(FinTopSpace {
        name: name.to_string(),
        points,
        opens: sorted,
        minimal,
    })
}

fn check_map(f: &[usize], x: &FinTopSpace, y: &FinTopSpace) -> Result<(), TopError> {
    if f.len() != x.len() || f.iter().any(|&v| v >= y.len()) {
        return Err(TopError::NotAFunction(format!(
            "map must send each of the {} points of {} into {}",
            x.len(),
            x.name,
            y.name
        )));
    }
    Ok(())
}

fn preimage(f: &[usize], v: PointSet) -> PointSet {
    f.iter()
        .enumerate()
        .filter(|&(_, &y)| v >> y & 1 == 1)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Every open set of `Y` has an open preimage.
pub fn is_continuous(f: &[usize], x: &FinTopSpace, y: &FinTopSpace) -> Result<bool, TopError> {
    check_map(f, x, y)?;
    Ok(y.opens.iter().all(|&v| x.is_open(preimage(f, v))))
}

/// Bijective, continuous, with continuous inverse.
pub fn is_homeomorphism(f: &[usize], x: &FinTopSpace, y: &FinTopSpace) -> Result<bool, TopError> {
    check_map(f, x, y)?;
    if x.len() != y.len() {
        return Ok(false);
    }
    let mut inverse = vec![usize::MAX; y.len()];
    for (i, &v) in f.iter().enumerate() {
        if inverse[v] != usize::MAX {
            return Ok(false);
        }
        inverse[v] = i;
    }
    Ok(is_continuous(f, x, y)? && is_continuous(&inverse, y, x)?)
}

/// Some homeomorphism `X → Y`, by exhaustive search over bijections.
pub fn find_homeomorphism(x: &FinTopSpace, y: &FinTopSpace) -> Option<Vec<usize>> {
    if x.len() != y.len() || x.opens.len() != y.opens.len() {
        return None;
    }
    let n = x.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    // Heap's algorithm
    if is_homeomorphism(&perm, x, y).unwrap_or(false) {
        return Some(perm);
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if is_homeomorphism(&perm, x, y).unwrap_or(false) {
                return Some(perm);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    None
}

/// A map defined on one piece of a cover: `values[p]` is set exactly on the
/// points of the piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub domain: PointSet,
    pub values: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueVerdict {
    pub glued: Vec<usize>,
    pub continuous: bool,
    pub pieces_continuous: Vec<bool>,
    /// `continuous` equals the conjunction of `pieces_continuous`.
    pub iff_holds: bool,
}

fn restriction_continuous(p: &Piece, x: &FinTopSpace, y: &FinTopSpace) -> bool {
    // Subspace opens of the piece are U ∩ A.
    y.opens.iter().all(|&v| {
        let pre = (0..x.len())
            .filter(|&i| p.values[i].is_some_and(|w| v >> w & 1 == 1))
            .fold(0u64, |acc, i| acc | 1 << i);
        x.opens.iter().any(|&u| u & p.domain == pre)
    })
}

/// Glues maps on a finite closed cover after checking they agree on overlaps.
pub fn glue_check(x: &FinTopSpace, y: &FinTopSpace, pieces: &[Piece]) -> Result<GlueVerdict, TopError> {
    let mut union = 0u64;
    for (i, p) in pieces.iter().enumerate() {
        if !x.is_closed(p.domain) {
            return Err(TopError::NotClosedCover(format!("piece {i} {} is not closed", x.render(p.domain))));
        }
        let consistent = p.values.len() == x.len()
            && (0..x.len()).all(|k| (p.domain >> k & 1 == 1) == p.values[k].is_some())
            && p.values.iter().flatten().all(|&v| v < y.len());
        if !consistent {
            return Err(TopError::NotAFunction(format!("piece {i} is not a map on {}", x.render(p.domain))));
        }
        union |= p.domain;
    }
    if union != x.full_set() {
        return Err(TopError::NotClosedCover(format!(
            "pieces miss {}",
            x.render(x.full_set() & !union)
        )));
    }
    let mut glued = vec![usize::MAX; x.len()];
    for p in pieces {
        for (k, v) in p.values.iter().enumerate() {
            if let Some(v) = *v {
                if glued[k] != usize::MAX && glued[k] != v {
                    return Err(TopError::OverlapDisagreement(x.points[k].clone()));
                }
                glued[k] = v;
            }
        }
    }
    let continuous = is_continuous(&glued, x, y)?;
    let pieces_continuous: Vec<bool> = pieces.iter().map(|p| restriction_continuous(p, x, y)).collect();
    let iff_holds = continuous == pieces_continuous.iter().all(|&b| b);
    Ok(GlueVerdict {
        glued,
        continuous,
        pieces_continuous,
        iff_holds,
    })
}

/// No proper nonempty subset is both open and closed.
pub fn is_connected(x: &FinTopSpace) -> bool {
    let top = x.full_set();
    !x.opens.iter().any(|&u| u != 0 && u != top && x.is_open(top & !u))
}

/// Blocks of a partition, each sorted, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<Vec<usize>>,
    pub block_of: Vec<usize>,
}

impl ComponentPartition {
    pub(crate) fn from_union_find(n: usize, uf: &UnionFind<usize>) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0; n];
        let mut root_block: HashMap<usize, usize> = HashMap::new();
        for i in 0..n {
            let b = *root_block.entry(uf.find(i)).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i);
            block_of[i] = b;
        }
        ComponentPartition { blocks, block_of }
    }
}

/// Components from minimal open neighbourhoods: `x` and `y` are adjacent
/// when one lies in the other's `U`.
pub fn pi0_top(x: &FinTopSpace) -> ComponentPartition {
    let mut uf = UnionFind::new(x.len());
    for a in 0..x.len() {
        for b in 0..x.len() {
            if x.minimal[a] >> b & 1 == 1 {
                uf.union(a, b);
            }
        }
    }
    ComponentPartition::from_union_find(x.len(), &uf)
}

/// The block map `π₀(f)`.
pub fn pi0_induced(f: &[usize], x: &FinTopSpace, y: &FinTopSpace) -> Result<Vec<usize>, TopError> {
    if !is_continuous(f, x, y)? {
        return Err(TopError::NotContinuous(format!("{} → {}", x.name, y.name)));
    }
    let (px, py) = (pi0_top(x), pi0_top(y));
    Ok(px.blocks.iter().map(|b| py.block_of[f[b[0]]]).collect())
}

/// The category of the given spaces and all continuous maps, and its
/// forgetful functor into the finite-set skeleton.
pub fn fintop_category(spaces: &[FinTopSpace]) -> Result<(Arc<FinCategory>, Functor), TopError> {
    let largest = spaces.iter().map(|s| s.len()).max().unwrap_or(0);
    if largest > DEFAULT_SKELETON_LIMIT {
        return Err(TopError::SizeBound(format!("spaces above {DEFAULT_SKELETON_LIMIT} points")));
    }
    let candidates: usize = spaces
        .iter()
        .flat_map(|a| spaces.iter().map(move |b| FinFunction::count(a.len(), b.len())))
        .fold(0usize, |acc, c| acc.saturating_add(c));
    if candidates > MAP_ENUMERATION_LIMIT {
        return Err(TopError::SizeBound(format!("{candidates} candidate maps")));
    }
    let mut morphisms = Vec::new();
    let mut maps: Vec<FinFunction> = Vec::new();
    let mut identities = vec![Mor(0); spaces.len()];
    for (i, a) in spaces.iter().enumerate() {
        for (j, b) in spaces.iter().enumerate() {
            for f in FinFunction::all(a.len(), b.len()) {
                if !is_continuous(f.values(), a, b)? {
                    continue;
                }
                let is_id = i == j && f == FinFunction::identity(a.len());
                if is_id {
                    identities[i] = Mor(morphisms.len());
                }
                let values: Vec<String> = f.values().iter().map(|v| v.to_string()).collect();
                morphisms.push(MorData {
                    name: if is_id {
                        format!("id_{}", a.name)
                    } else {
                        format!("c{i}_{j}_{}", values.join("_"))
                    },
                    dom: Obj(i),
                    cod: Obj(j),
                });
                maps.push(f);
            }
        }
    }
    let index: HashMap<(Obj, Obj, &FinFunction), Mor> = morphisms
        .iter()
        .zip(&maps)
        .enumerate()
        .map(|(k, (d, f))| ((d.dom, d.cod, f), Mor(k)))
        .collect();
    let m = morphisms.len();
    let mut table = vec![None; m * m];
    for f in 0..m {
        for g in 0..m {
            if morphisms[g].dom == morphisms[f].cod {
                let h = maps[g].after(&maps[f]).expect("typed");
                table[g * m + f] = index.get(&(morphisms[f].dom, morphisms[g].cod, &h)).copied();
            }
        }
    }
    let objects = spaces.iter().map(|s| s.name.clone()).collect();
    let cat = Arc::new(FinCategory::from_table("FinTop", objects, morphisms, identities, table)?);
    let skeleton = Arc::new(finset_skeleton_bounded(largest, DEFAULT_SKELETON_LIMIT)?);
    let object_map = spaces.iter().map(|s| skeleton.object_of_size(s.len()).unwrap()).collect();
    let morphism_map = maps.iter().map(|f| skeleton.morphism_for(f).unwrap()).collect();
    let forget = Functor::new("U", cat.clone(), skeleton, Variance::Covariant, object_map, morphism_map)?;
    Ok((cat, forget))
}
