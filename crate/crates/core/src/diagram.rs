//! Diagrams as labelled shape graphs in a finite category, and commutativity
//! by diagram chasing.
//!
//! Paths in a shape graph can be infinite in number once the graph has cycles,
//! but their composites live in finite hom-sets. The chase therefore explores
//! states `(node, composite so far)` depth-first in edge declaration order;
//! the reachable state set is the least fixpoint of single-edge extension and
//! the order makes witnesses reproducible.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::category::{FinCategory, Mor, Obj};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("edge {edge}: {morphism} is {actual} but the nodes require {expected}")]
    EndpointMismatch {
        edge: usize,
        morphism: String,
        actual: String,
        expected: String,
    },
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("duplicate node {0}")]
    DuplicateNode(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub mor: Mor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram<'c> {
    category: &'c FinCategory,
    nodes: Vec<(String, Obj)>,
    edges: Vec<Edge>,
}

/// A composite reached by a path; `path` lists edge indices in traversal
/// order and is empty for the empty path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composite {
    pub morphism: Mor,
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub src: usize,
    pub dst: usize,
    pub first: Composite,
    pub second: Composite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativityVerdict {
    pub commutative: bool,
    pub witness: Option<Disagreement>,
}

/// Resolves node labels and edge morphisms by name.
pub fn build_diagram<'c>(
    c: &'c FinCategory,
    nodes: &[(&str, &str)],
    edges: &[(&str, &str, &str)],
) -> Result<Diagram<'c>, DiagramError> {
    let mut resolved = Vec::with_capacity(nodes.len());
    for (n, label) in nodes {
        let obj = c.object(label).ok_or_else(|| DiagramError::UnknownLabel(label.to_string()))?;
        resolved.push((n.to_string(), obj));
    }
    let node_of = |n: &str| {
        resolved
            .iter()
            .position(|(name, _)| name == n)
            .ok_or_else(|| DiagramError::UnknownLabel(n.to_string()))
    };
    let mut es = Vec::with_capacity(edges.len());
    for (a, b, m) in edges {
        let mor = c.morphism(m).ok_or_else(|| DiagramError::UnknownLabel(m.to_string()))?;
        es.push(Edge {
            src: node_of(a)?,
            dst: node_of(b)?,
            mor,
        });
    }
    Diagram::new(c, resolved, es)
}

impl<'c> Diagram<'c> {
    pub fn new(category: &'c FinCategory, nodes: Vec<(String, Obj)>, edges: Vec<Edge>) -> Result<Self, DiagramError> {
        for (i, (n, _)) in nodes.iter().enumerate() {
            if nodes[..i].iter().any(|(m, _)| m == n) {
                return Err(DiagramError::DuplicateNode(n.clone()));
            }
        }
        for (i, e) in edges.iter().enumerate() {
            if e.src >= nodes.len() || e.dst >= nodes.len() || e.mor.0 >= category.morphism_count() {
                return Err(DiagramError::UnknownLabel(format!("edge {i}")));
            }
            let (want_dom, want_cod) = (nodes[e.src].1, nodes[e.dst].1);
            if category.dom(e.mor) != want_dom || category.cod(e.mor) != want_cod {
                return Err(DiagramError::EndpointMismatch {
                    edge: i,
                    morphism: category.morphism_name(e.mor).to_string(),
                    actual: format!(
                        "{} → {}",
                        category.object_name(category.dom(e.mor)),
                        category.object_name(category.cod(e.mor))
                    ),
                    expected: format!(
                        "{} → {}",
                        category.object_name(want_dom),
                        category.object_name(want_cod)
                    ),
                });
            }
        }
        Ok(Diagram { category, nodes, edges })
    }

    pub fn category(&self) -> &'c FinCategory {
        self.category
    }

    pub fn nodes(&self) -> &[(String, Obj)] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|(n, _)| n == name)
    }

    /// Composites of all non-empty paths out of `src`, indexed by target node,
    /// each in discovery order with its first-found path.
    pub fn chase_from(&self, src: usize) -> Vec<Vec<Composite>> {
        let c = self.category;
        let mut found: Vec<Vec<Composite>> = vec![Vec::new(); self.nodes.len()];
        let start = (src, c.identity(self.nodes[src].1));
        let mut visited: HashSet<(usize, Mor)> = HashSet::from([start]);
        // (node, composite, path, next edge to try)
        let mut stack: Vec<(usize, Mor, Vec<usize>, usize)> = vec![(start.0, start.1, Vec::new(), 0)];
        while let Some(top) = stack.last_mut() {
            let (node, mor) = (top.0, top.1);
            let Some(offset) = self.edges[top.3..].iter().position(|e| e.src == node) else {
                stack.pop();
                continue;
            };
            let ei = top.3 + offset;
            top.3 = ei + 1;
            let e = self.edges[ei];
            let next = c.comp(e.mor, mor);
            let mut path = top.2.clone();
            path.push(ei);
            if !found[e.dst].iter().any(|k| k.morphism == next) {
                found[e.dst].push(Composite {
                    morphism: next,
                    path: path.clone(),
                });
            }
            if visited.insert((e.dst, next)) {
                stack.push((e.dst, next, path, 0));
            }
        }
        found
    }

    /// Distinct composites of paths `src → dst`; the empty path counts only
    /// when `src == dst`.
    pub fn achievable_composites(&self, src: usize, dst: usize) -> BTreeSet<Mor> {
        let mut set: BTreeSet<Mor> = self.chase_from(src)[dst].iter().map(|k| k.morphism).collect();
        if src == dst {
            set.insert(self.category.identity(self.nodes[src].1));
        }
        set
    }

    /// Commutative iff every ordered node pair has at most one composite.
    /// The witness is the first violating pair in node declaration order.
    pub fn is_commutative(&self) -> CommutativityVerdict {
        for s in 0..self.nodes.len() {
            let found = self.chase_from(s);
            for (t, list) in found.into_iter().enumerate() {
                let mut distinct: Vec<Composite> = Vec::new();
                if s == t {
                    distinct.push(Composite {
                        morphism: self.category.identity(self.nodes[s].1),
                        path: Vec::new(),
                    });
                }
                for k in list {
                    if !distinct.iter().any(|d| d.morphism == k.morphism) {
                        distinct.push(k);
                    }
                }
                if distinct.len() > 1 {
                    let mut it = distinct.into_iter();
                    let (first, second) = (it.next().unwrap(), it.next().unwrap());
                    return CommutativityVerdict {
                        commutative: false,
                        witness: Some(Disagreement {
                            src: s,
                            dst: t,
                            first,
                            second,
                        }),
                    };
                }
            }
        }
        CommutativityVerdict {
            commutative: true,
            witness: None,
        }
    }

    /// Renders a path as `(f;g)` in traversal order, `()` when empty.
    pub fn render_path(&self, path: &[usize]) -> String {
        let names: Vec<&str> = path
            .iter()
            .map(|&e| self.category.morphism_name(self.edges[e].mor))
            .collect();
        format!("({})", names.join(";"))
    }

    pub fn describe(&self, d: &Disagreement) -> String {
        format!(
            "paths {} and {} from {} to {} differ",
            self.render_path(&d.first.path),
            self.render_path(&d.second.path),
            self.nodes[d.src].0,
            self.nodes[d.dst].0
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{validate_category, CategoryDescription};

    fn cat(arrows: &[(&str, &str, &str)], comps: &[(&str, &str, &str)]) -> FinCategory {
        validate_category(&CategoryDescription {
            name: "T".into(),
            objects: vec!["A".into(), "B".into(), "C".into()],
            arrows: arrows.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string())).collect(),
            compositions: comps.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string())).collect(),
        })
        .unwrap()
    }

    #[test]
    fn commuting_triangle() {
        let c = cat(&[("f", "A", "B"), ("g", "B", "C"), ("h", "A", "C")], &[("g", "f", "h")]);
        let d = build_diagram(
            &c,
            &[("X", "A"), ("Y", "B"), ("Z", "C")],
            &[("X", "Y", "f"), ("Y", "Z", "g"), ("X", "Z", "h")],
        )
        .unwrap();
        assert_eq!(d.achievable_composites(0, 2), BTreeSet::from([c.morphism("h").unwrap()]));
        assert_eq!(d.achievable_composites(0, 0), BTreeSet::from([c.identity(Obj(0))]));
        assert!(d.is_commutative().commutative);
    }

    #[test]
    fn non_commuting_triangle_witness() {
        let c = cat(
            &[("f", "A", "B"), ("g", "B", "C"), ("h", "A", "C"), ("k", "A", "C")],
            &[("g", "f", "k")],
        );
        let d = build_diagram(
            &c,
            &[("n1", "A"), ("n2", "B"), ("n3", "C")],
            &[("n1", "n2", "f"), ("n2", "n3", "g"), ("n1", "n3", "h")],
        )
        .unwrap();
        assert_eq!(d.achievable_composites(0, 2).len(), 2);
        let v = d.is_commutative();
        assert!(!v.commutative);
        assert_eq!(d.describe(v.witness.as_ref().unwrap()), "paths (f;g) and (h) from n1 to n3 differ");
    }

    #[test]
    fn parallel_edges_and_errors() {
        let c = cat(&[("f", "A", "B"), ("g", "A", "B")], &[]);
        let d = build_diagram(&c, &[("x", "A"), ("y", "B")], &[("x", "y", "f"), ("x", "y", "g")]).unwrap();
        let w = d.is_commutative().witness.unwrap();
        assert_eq!((w.first.morphism, w.second.morphism), (c.morphism("f").unwrap(), c.morphism("g").unwrap()));
        let bad = build_diagram(&c, &[("x", "A"), ("y", "B")], &[("y", "x", "f")]);
        assert!(matches!(bad, Err(DiagramError::EndpointMismatch { .. })));
        let unknown = build_diagram(&c, &[("x", "Q")], &[]);
        assert_eq!(unknown, Err(DiagramError::UnknownLabel("Q".into())));
        let empty = build_diagram(&c, &[], &[]).unwrap();
        assert!(empty.is_commutative().commutative);
    }

    #[test]
    fn loops_terminate() {
        // s∘s = id on one object: infinitely many paths, two composites.
        let c = validate_category(&CategoryDescription {
            name: "Z2".into(),
            objects: vec!["X".into()],
            arrows: vec![("s".into(), "X".into(), "X".into())],
            compositions: vec![("s".into(), "s".into(), "id_X".into())],
        })
        .unwrap();
        let d = build_diagram(&c, &[("n", "X")], &[("n", "n", "s")]).unwrap();
        assert_eq!(d.achievable_composites(0, 0).len(), 2);
        let v = d.is_commutative();
        assert_eq!(d.describe(v.witness.as_ref().unwrap()), "paths () and (s) from n to n differ");
    }
}
