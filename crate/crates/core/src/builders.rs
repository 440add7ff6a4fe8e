//! Standard example categories: posets and free categories on acyclic graphs.

use std::collections::{BTreeSet, HashMap};

use crate::category::{CategoryError, FinCategory, Mor, MorData, Obj};

/// A finite relation intended as a partial order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetData {
    pub elements: Vec<String>,
    /// Pairs `(a, b)` meaning `a ≤ b`. Reflexive pairs may be omitted.
    pub leq: Vec<(String, String)>,
}

impl PosetData {
    pub fn new(elements: &[&str], leq: &[(&str, &str)]) -> Self {
        PosetData {
            elements: elements.iter().map(|s| s.to_string()).collect(),
            leq: leq.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        }
    }
}

/// One morphism `a → b` exactly when `a ≤ b`. The relation is closed under
/// reflexivity; antisymmetry and transitivity are checked, not inferred.
pub fn poset_category(p: &PosetData) -> Result<FinCategory, CategoryError> {
    let n = p.elements.len();
    let mut pos = HashMap::new();
    for (i, e) in p.elements.iter().enumerate() {
        if pos.insert(e.as_str(), i).is_some() {
            return Err(CategoryError::DuplicateId(e.clone()));
        }
    }
    let mut rel = vec![false; n * n];
    for i in 0..n {
        rel[i * n + i] = true;
    }
    for (a, b) in &p.leq {
        let find = |x: &String| pos.get(x.as_str()).copied().ok_or_else(|| CategoryError::UnknownObject(x.clone()));
        rel[find(a)? * n + find(b)?] = true;
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && rel[a * n + b] && rel[b * n + a] {
                return Err(CategoryError::NotAPoset {
                    axiom: "antisymmetry",
                    witness: format!("{0} ≤ {1} and {1} ≤ {0}", p.elements[a], p.elements[b]),
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if rel[a * n + b] && rel[b * n + c] && !rel[a * n + c] {
                    return Err(CategoryError::NotAPoset {
                        axiom: "transitivity",
                        witness: format!(
                            "{} ≤ {} ≤ {} but not {} ≤ {}",
                            p.elements[a], p.elements[b], p.elements[c], p.elements[a], p.elements[c]
                        ),
                    });
                }
            }
        }
    }
    let mut morphisms = Vec::new();
    let mut arrow = vec![usize::MAX; n * n];
    let mut identities = vec![Mor(0); n];
    for a in 0..n {
        for b in 0..n {
            if rel[a * n + b] {
                arrow[a * n + b] = morphisms.len();
                let name = if a == b {
                    format!("id_{}", p.elements[a])
                } else {
                    format!("{}_le_{}", p.elements[a], p.elements[b])
                };
                if a == b {
                    identities[a] = Mor(morphisms.len());
                }
                morphisms.push(MorData {
                    name,
                    dom: Obj(a),
                    cod: Obj(b),
                });
            }
        }
    }
    let m = morphisms.len();
    let mut table = vec![None; m * m];
    for (f, fd) in morphisms.iter().enumerate() {
        for (g, gd) in morphisms.iter().enumerate() {
            if gd.dom == fd.cod {
                table[g * m + f] = Some(Mor(arrow[fd.dom.0 * n + gd.cod.0]));
            }
        }
    }
    FinCategory::from_table("Poset", p.elements.clone(), morphisms, identities, table)
}

/// A directed multigraph with named vertices and edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    pub vertices: Vec<String>,
    /// `(name, src, dst)`
    pub edges: Vec<(String, String, String)>,
}

impl Graph {
    pub fn new(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Self {
        Graph {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(e, a, b)| (e.to_string(), a.to_string(), b.to_string()))
                .collect(),
        }
    }
}

/// Free category on an acyclic graph: morphisms are all directed paths.
/// Generators keep their names; a composite path is named by its edges in
/// application order joined with `.`, e.g. `g.f` for `f` then `g`.
pub fn free_category(g: &Graph) -> Result<FinCategory, CategoryError> {
    let n = g.vertices.len();
    let mut pos = HashMap::new();
    for (i, v) in g.vertices.iter().enumerate() {
        if pos.insert(v.as_str(), i).is_some() {
            return Err(CategoryError::DuplicateId(v.clone()));
        }
    }
    let mut edges = Vec::new();
    for (e, a, b) in &g.edges {
        let find = |x: &String| {
            pos.get(x.as_str()).copied().ok_or_else(|| CategoryError::DanglingEndpoint {
                arrow: e.clone(),
                endpoint: x.clone(),
            })
        };
        edges.push((e.clone(), find(a)?, find(b)?));
    }
    // Kahn's algorithm; leftover vertices lie on a cycle.
    let mut indeg = vec![0usize; n];
    for &(_, _, b) in &edges {
        indeg[b] += 1;
    }
    let mut order: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &(_, a, b) in &edges {
            if a == v {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    order.push(b);
                }
            }
        }
    }
    if order.len() < n {
        let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap();
        return Err(CategoryError::CyclicGraph(g.vertices[stuck].clone()));
    }

    // Paths as edge-index sequences, identities first, then by length.
    let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..n).map(|v| (v, v, Vec::new())).collect();
    let mut frontier: Vec<usize> = Vec::new();
    for (i, &(_, a, b)) in edges.iter().enumerate() {
        frontier.push(paths.len());
        paths.push((a, b, vec![i]));
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            for (i, &(_, a, b)) in edges.iter().enumerate() {
                if a == paths[p].1 {
                    let mut seq = paths[p].2.clone();
                    seq.push(i);
                    next.push(paths.len());
                    paths.push((paths[p].0, b, seq));
                }
            }
        }
        frontier = next;
    }
    let index: HashMap<Vec<usize>, usize> = paths
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.2.is_empty())
        .map(|(i, p)| (p.2.clone(), i))
        .collect();
    let morphisms: Vec<MorData> = paths
        .iter()
        .map(|(a, b, seq)| MorData {
            name: if seq.is_empty() {
                format!("id_{}", g.vertices[*a])
            } else {
                seq.iter().rev().map(|&e| edges[e].0.as_str()).collect::<Vec<_>>().join(".")
            },
            dom: Obj(*a),
            cod: Obj(*b),
        })
        .collect();
    let m = paths.len();
    let mut table = vec![None; m * m];
    for f in 0..m {
        for h in 0..m {
            if paths[h].0 != paths[f].1 {
                continue;
            }
            let composite = if paths[f].2.is_empty() {
                h
            } else if paths[h].2.is_empty() {
                f
            } else {
                let mut seq = paths[f].2.clone();
                seq.extend_from_slice(&paths[h].2);
                index[&seq]
            };
            table[h * m + f] = Some(Mor(composite));
        }
    }
    let identities = (0..n).map(Mor).collect();
    FinCategory::from_table("Free", g.vertices.clone(), morphisms, identities, table)
}

/// Poset of subsets of `{0..n-1}` ordered by inclusion, named by bit masks.
pub fn powerset_lattice(n: usize) -> FinCategory {
    let elements: Vec<String> = (0..1usize << n).map(|m| format!("s{m}")).collect();
    let mut leq = Vec::new();
    for a in 0..1usize << n {
        for b in 0..1usize << n {
            if a != b && a & b == a {
                leq.push((elements[a].clone(), elements[b].clone()));
            }
        }
    }
    poset_category(&PosetData { elements, leq }).expect("inclusion is a partial order")
}

/// Objects reachable from `a` (inclusive), used by several searches.
pub fn reachable(c: &FinCategory, a: Obj) -> BTreeSet<Obj> {
    c.objects().filter(|&b| !c.hom(a, b).is_empty()).collect()
}
