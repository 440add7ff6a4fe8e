//! Simplicial complexes: boundary operators, homology, Euler characteristic,
//! components and edge-path presentations of the fundamental group.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use petgraph::unionfind::UnionFind;

use super::smith::{smith_normal_form, IntMatrix};
use super::space::ComponentPartition;
use super::TopError;
use crate::category::{classify_category, FinCategory, Mor, MorData, Obj};

/// Face-closed family of ascending vertex tuples, grouped by dimension and
/// sorted lexicographically within each dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl SimplicialComplex {
    /// Builds the face closure of `simplices` over vertices `0..n`; every
    /// vertex is a 0-simplex.
    pub fn from_indices(n: usize, simplices: &[Vec<usize>]) -> Result<Self, TopError> {
        let vertices = (0..n).map(|i| i.to_string()).collect();
        Self::close(vertices, simplices)
    }

    fn close(vertices: Vec<String>, simplices: &[Vec<usize>]) -> Result<Self, TopError> {
        let n = vertices.len();
        let mut all: BTreeSet<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        for s in simplices {
            let mut sorted = s.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                let names: Vec<&str> = s.iter().map(|&v| vertices[v].as_str()).collect();
                return Err(TopError::DuplicateVertexInSimplex(names.join(",")));
            }
            if let Some(&v) = sorted.iter().find(|&&v| v >= n) {
                return Err(TopError::UnknownPoint(v.to_string()));
            }
            if sorted.len() > 20 {
                return Err(TopError::SizeBound("simplices above dimension 19".into()));
            }
            if all.contains(&sorted) {
                continue;
            }
            for mask in 1u32..(1 << sorted.len()) {
                all.insert((0..sorted.len()).filter(|&i| mask >> i & 1 == 1).map(|i| sorted[i]).collect());
            }
        }
        let dim = all.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim];
        for s in all {
            by_dim[s.len() - 1].push(s);
        }
        let index = by_dim
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Ok(SimplicialComplex {
            vertices,
            simplices: by_dim,
            index,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, n: usize) -> &[Vec<usize>] {
        self.simplices.get(n).map_or(&[], |v| v.as_slice())
    }

    pub fn count(&self, n: usize) -> usize {
        self.simplices(n).len()
    }

    pub fn face_counts(&self) -> Vec<usize> {
        self.simplices.iter().map(|s| s.len()).collect()
    }

    pub fn position(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s.len().checked_sub(1)?)?.get(s).copied()
    }

    /// Same complex with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, TopError> {
        let tops: Vec<Vec<usize>> = self
            .simplices
            .iter()
            .flatten()
            .map(|s| s.iter().map(|&v| perm[v]).collect())
            .collect();
        Self::from_indices(self.vertices.len(), &tops)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.face_counts().iter().map(|c| c.to_string()).collect();
        write!(f, "complex with face counts ({})", counts.join(","))
    }
}

/// Resolves named simplices over declared vertices and closes under faces.
pub fn validate_complex(vertices: &[String], simplices: &[Vec<String>]) -> Result<SimplicialComplex, TopError> {
    for (i, v) in vertices.iter().enumerate() {
        if vertices[..i].contains(v) {
            return Err(TopError::DuplicateName(v.clone()));
        }
    }
    let mut resolved = Vec::with_capacity(simplices.len());
    for s in simplices {
        let mut idx = Vec::with_capacity(s.len());
        for name in s {
            idx.push(
                vertices
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| TopError::UnknownPoint(name.clone()))?,
            );
        }
        resolved.push(idx);
    }
    SimplicialComplex::close(vertices.to_vec(), &resolved)
}

fn boundary_unchecked(k: &SimplicialComplex, n: usize) -> IntMatrix {
    let rows = if n == 0 { 0 } else { k.count(n - 1) };
    let mut m = IntMatrix::zeros(rows, k.count(n));
    if n == 0 {
        return m;
    }
    for (col, s) in k.simplices(n).iter().enumerate() {
        for i in 0..s.len() {
            let mut face = s.clone();
            face.remove(i);
            let row = k.position(&face).expect("face-closed");
            m.set(row, col, BigInt::from(if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    m
}

/// `∂_n`: one column per `n`-simplex, one row per `(n-1)`-simplex, entry
/// `(-1)^i` for deleting vertex `i`.
pub fn boundary_matrix(k: &SimplicialComplex, n: usize) -> Result<IntMatrix, TopError> {
    match k.dimension() {
        Some(d) if n >= 1 && n <= d => Ok(boundary_unchecked(k, n)),
        _ => Err(TopError::DimensionOutOfRange(n)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub dimension: usize,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.torsion.iter().map(|v| v.to_string()).collect();
        write!(f, "H_{}: betti={} torsion=[{}]", self.dimension, self.betti, t.join(","))
    }
}

/// `H_n = Ker ∂_n / Im ∂_{n+1}` over the integers.
pub fn homology(k: &SimplicialComplex, n: usize) -> Result<HomologyResult, TopError> {
    match k.dimension() {
        Some(d) if n <= d => {}
        _ => return Err(TopError::DimensionOutOfRange(n)),
    }
    let rank_n = smith_normal_form(&boundary_unchecked(k, n)).rank;
    let next = smith_normal_form(&boundary_unchecked(k, n + 1));
    Ok(HomologyResult {
        dimension: n,
        betti: k.count(n) - rank_n - next.rank,
        torsion: next.invariant_factors.into_iter().filter(|v| !v.is_one()).collect(),
    })
}

pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    k.face_counts()
        .iter()
        .enumerate()
        .map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyhedronReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// `f + v = e + 2`.
    pub holds: bool,
}

pub fn polyhedron_check(k: &SimplicialComplex) -> PolyhedronReport {
    let (v, e, f) = (k.count(0), k.count(1), k.count(2));
    PolyhedronReport {
        vertices: v,
        edges: e,
        faces: f,
        holds: k.dimension() == Some(2) && f + v == e + 2,
    }
}

/// Connected components of the 1-skeleton.
pub fn pi0_complex(k: &SimplicialComplex) -> ComponentPartition {
    let n = k.vertices.len();
    let mut uf = UnionFind::new(n);
    for e in k.simplices(1) {
        uf.union(e[0], e[1]);
    }
    ComponentPartition::from_union_find(n, &uf)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    fn inv(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedGroup {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<Letter>>,
}

fn free_reduce(word: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    // cyclic reduction
    let mut start = 0;
    let mut end = out.len();
    while end - start >= 2 && out[start] == out[end - 1].inv() {
        start += 1;
        end -= 1;
    }
    out[start..end].to_vec()
}

impl PresentedGroup {
    pub fn render_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|l| {
                let g = &self.generators[l.generator];
                if l.inverse {
                    format!("{g}^-1")
                } else {
                    g.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Free and cyclic reduction of relators, then Tietze eliminations of
    /// generators occurring exactly once in some relator.
    pub fn simplify(&self) -> PresentedGroup {
        let mut alive: Vec<bool> = vec![true; self.generators.len()];
        let mut relators: Vec<Vec<Letter>> = self.relators.iter().map(|r| free_reduce(r)).collect();
        loop {
            relators.retain(|r| !r.is_empty());
            let found = relators.iter().enumerate().find_map(|(ri, r)| {
                r.iter()
                    .position(|l| r.iter().filter(|m| m.generator == l.generator).count() == 1)
                    .map(|pos| (ri, pos))
            });
            let Some((ri, pos)) = found else { break };
            let r = relators.remove(ri);
            let g = r[pos];
            // r = u g^e v = 1  =>  g^e = u^-1 v^-1 (cyclically: g^e = (v u)^-1)
            let mut rest: Vec<Letter> = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
            rest.reverse();
            let mut replacement: Vec<Letter> = rest.into_iter().map(Letter::inv).collect();
            if g.inverse {
                replacement.reverse();
                replacement = replacement.into_iter().map(Letter::inv).collect();
            }
            alive[g.generator] = false;
            for other in relators.iter_mut() {
                let mut w = Vec::with_capacity(other.len());
                for &l in other.iter() {
                    if l.generator == g.generator {
                        if l.inverse {
                            w.extend(replacement.iter().rev().map(|x| x.inv()));
                        } else {
                            w.extend_from_slice(&replacement);
                        }
                    } else {
                        w.push(l);
                    }
                }
                *other = free_reduce(&w);
            }
        }
        let mut renumber = vec![usize::MAX; alive.len()];
        let mut generators = Vec::new();
        for (i, &a) in alive.iter().enumerate() {
            if a {
                renumber[i] = generators.len();
                generators.push(self.generators[i].clone());
            }
        }
        let relators = relators
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|l| Letter {
                        generator: renumber[l.generator],
                        inverse: l.inverse,
                    })
                    .collect()
            })
            .collect();
        PresentedGroup { generators, relators }
    }

    /// Certified trivial: simplification removes every generator.
    pub fn is_trivially_presented(&self) -> bool {
        self.simplify().generators.is_empty()
    }
}

/// Edge-path presentation at `base`: BFS spanning tree of its component, one
/// generator per non-tree edge, relator `ab · bc · (ac)⁻¹` per triangle.
pub fn pi1_presentation(k: &SimplicialComplex, base: &str) -> Result<PresentedGroup, TopError> {
    let b = k.vertex(base).ok_or_else(|| TopError::BaseVertexMissing(base.to_string()))?;
    let n = k.vertices.len();
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, e) in k.simplices(1).iter().enumerate() {
        adjacency[e[0]].push((e[1], i));
        adjacency[e[1]].push((e[0], i));
    }
    let mut seen = vec![false; n];
    let mut tree = vec![false; k.count(1)];
    seen[b] = true;
    let mut queue = VecDeque::from([b]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    let mut generator_of = vec![None; k.count(1)];
    let mut generators = Vec::new();
    for (i, e) in k.simplices(1).iter().enumerate() {
        if seen[e[0]] && !tree[i] {
            generator_of[i] = Some(generators.len());
            generators.push(format!("{}-{}", k.vertices[e[0]], k.vertices[e[1]]));
        }
    }
    let letter = |u: usize, v: usize, inverse: bool| -> Option<Letter> {
        let e = k.position(&[u, v]).expect("edge of a triangle");
        generator_of[e].map(|g| Letter { generator: g, inverse })
    };
    let mut relators = Vec::new();
    for t in k.simplices(2) {
        if !seen[t[0]] {
            continue;
        }
        let word: Vec<Letter> = [letter(t[0], t[1], false), letter(t[1], t[2], false), letter(t[0], t[2], true)]
            .into_iter()
            .flatten()
            .collect();
        relators.push(word);
    }
    Ok(PresentedGroup { generators, relators })
}

#[derive(Clone, Debug)]
pub enum GroupoidResult {
    Groupoid(FinCategory),
    Absent { explanation: String },
}

/// The pair groupoid on each component, available when every component is
/// certified simply connected.
pub fn fundamental_groupoid(k: &SimplicialComplex) -> Result<GroupoidResult, TopError> {
    let comps = pi0_complex(k);
    for block in &comps.blocks {
        let base = &k.vertices[block[0]];
        let p = pi1_presentation(k, base)?;
        if !p.is_trivially_presented() {
            return Ok(GroupoidResult::Absent {
                explanation: format!(
                    "component of {base} has fundamental group with {} generator(s) left after simplification",
                    p.simplify().generators.len()
                ),
            });
        }
    }
    let n = k.vertices.len();
    let mut morphisms = Vec::new();
    let mut id = HashMap::new();
    let mut identities = vec![Mor(0); n];
    for u in 0..n {
        for v in 0..n {
            if comps.block_of[u] == comps.block_of[v] {
                if u == v {
                    identities[u] = Mor(morphisms.len());
                }
                id.insert((u, v), Mor(morphisms.len()));
                morphisms.push(MorData {
                    name: if u == v {
                        format!("id_{}", k.vertices[u])
                    } else {
                        format!("p_{}_{}", k.vertices[u], k.vertices[v])
                    },
                    dom: Obj(u),
                    cod: Obj(v),
                });
            }
        }
    }
    let m = morphisms.len();
    let mut table = vec![None; m * m];
    for (f, fd) in morphisms.iter().enumerate() {
        for (g, gd) in morphisms.iter().enumerate() {
            if gd.dom == fd.cod {
                table[g * m + f] = Some(id[&(fd.dom.0, gd.cod.0)]);
            }
        }
    }
    let cat = FinCategory::from_table("Pi1", k.vertices.clone(), morphisms, identities, table)?;
    debug_assert!(classify_category(&cat).groupoid);
    Ok(GroupoidResult::Groupoid(cat))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hollow() -> SimplicialComplex {
        SimplicialComplex::from_indices(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    fn solid() -> SimplicialComplex {
        SimplicialComplex::from_indices(3, &[vec![0, 1, 2]]).unwrap()
    }

    fn sphere() -> SimplicialComplex {
        SimplicialComplex::from_indices(4, &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap()
    }

    /// Six-vertex real projective plane.
    fn rp2() -> SimplicialComplex {
        let t = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        SimplicialComplex::from_indices(6, &t.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn betti(k: &SimplicialComplex) -> Vec<usize> {
        (0..=k.dimension().unwrap()).map(|n| homology(k, n).unwrap().betti).collect()
    }

    #[test]
    fn closures() {
        assert_eq!(solid().face_counts(), vec![3, 3, 1]);
        assert_eq!(hollow().face_counts(), vec![3, 3]);
        assert_eq!(sphere().face_counts(), vec![4, 6, 4]);
        assert!(matches!(
            SimplicialComplex::from_indices(3, &[vec![0, 0]]),
            Err(TopError::DuplicateVertexInSimplex(_))
        ));
    }

    #[test]
    fn boundaries() {
        let edge = SimplicialComplex::from_indices(2, &[vec![0, 1]]).unwrap();
        let d = boundary_matrix(&edge, 1).unwrap();
        assert_eq!((d.get(0, 0), d.get(1, 0)), (&BigInt::from(-1), &BigInt::from(1)));
        let s = sphere();
        let dd = boundary_matrix(&s, 1).unwrap().mul(&boundary_matrix(&s, 2).unwrap()).unwrap();
        assert!(dd.is_zero());
        assert!(matches!(boundary_matrix(&s, 3), Err(TopError::DimensionOutOfRange(3))));
    }

    #[test]
    fn homology_examples() {
        assert_eq!(betti(&hollow()), vec![1, 1]);
        assert_eq!(betti(&sphere()), vec![1, 0, 1]);
        let h1 = homology(&rp2(), 1).unwrap();
        assert_eq!((h1.betti, h1.torsion.clone()), (0, vec![BigInt::from(2)]));
        assert_eq!(h1.to_string(), "H_1: betti=0 torsion=[2]");
        assert_eq!(euler_characteristic(&sphere()), 2);
        assert_eq!(euler_characteristic(&hollow()), 0);
        assert_eq!(euler_characteristic(&SimplicialComplex::from_indices(1, &[]).unwrap()), 1);
        assert!(polyhedron_check(&sphere()).holds);
    }

    #[test]
    fn fundamental_groups() {
        let h = pi1_presentation(&hollow(), "0").unwrap();
        assert_eq!((h.generators.len(), h.relators.len()), (1, 0));
        assert!(!h.is_trivially_presented());
        let s = pi1_presentation(&solid(), "0").unwrap();
        assert_eq!((s.generators.len(), s.relators.len()), (1, 1));
        assert!(s.is_trivially_presented());
        assert!(pi1_presentation(&rp2(), "0").unwrap().simplify().generators.len() <= 1);
        assert!(matches!(pi1_presentation(&solid(), "9"), Err(TopError::BaseVertexMissing(_))));
        let two = SimplicialComplex::from_indices(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(pi0_complex(&two).blocks.len(), 2);
    }

    #[test]
    fn groupoids() {
        match fundamental_groupoid(&solid()).unwrap() {
            GroupoidResult::Groupoid(c) => assert_eq!(c.morphism_count(), 9),
            GroupoidResult::Absent { .. } => panic!("solid triangle is simply connected"),
        }
        assert!(matches!(fundamental_groupoid(&hollow()).unwrap(), GroupoidResult::Absent { .. }));
    }
}
