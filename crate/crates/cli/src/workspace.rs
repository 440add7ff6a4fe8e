//! Name resolution across parsed files into core values.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::sync::Arc;

use catkit_core::algebra::{check_group, FinGroup};
use catkit_core::builders::{free_category, Graph};
use catkit_core::category::{validate_category, CategoryDescription, FinCategory, Mor};
use catkit_core::diagram::{Diagram, Edge};
use catkit_core::finset::finset_skeleton;
use catkit_core::functor::{Functor, FunctorError, Variance};
use catkit_core::nattrans::NatTrans;
use catkit_core::topo::{validate_complex, validate_space, FinTopSpace, SimplicialComplex};

use crate::report::Finding;
use crate::syntax::{
    parse, CategoryDecl, ComplexDecl, Decl, DiagramDecl, FunctorDecl, GroupDecl, Ident, MapDecl, NatDecl,
    ParseError, ParseErrorKind, SpaceDecl,
};

/// Resolution either hits a bad reference (a located parse-level error) or a
/// referenced value fails its own checks.
#[derive(Clone, Debug)]
pub enum LoadError {
    Parse(ParseError),
    Check(Finding),
}

impl From<ParseError> for LoadError {
    fn from(e: ParseError) -> Self {
        LoadError::Parse(e)
    }
}

fn unknown(id: &Ident, what: &str) -> LoadError {
    LoadError::Parse(ParseError::new(
        ParseErrorKind::UnknownReference,
        &id.span,
        format!("unknown {what} `{}`", id.name),
    ))
}

/// Largest built-in `FinSet<n>` category.
pub const BUILTIN_FINSET_MAX: usize = 4;

fn builtin_finset(name: &str) -> Option<usize> {
    let n: usize = name.strip_prefix("FinSet")?.parse().ok()?;
    (n <= BUILTIN_FINSET_MAX && name == format!("FinSet{n}")).then_some(n)
}

/// Named diagram nodes with their objects, and the resolved edges.
pub type DiagramParts = (Vec<(String, catkit_core::Obj)>, Vec<Edge>);

pub struct Workspace {
    decls: Vec<Decl>,
    categories: RefCell<BTreeMap<String, Arc<FinCategory>>>,
}

impl Workspace {
    /// Parses `(file, text)` pairs; a name may be declared once per kind.
    pub fn load(files: &[(String, String)]) -> Result<Workspace, ParseError> {
        let mut decls: Vec<Decl> = Vec::new();
        for (file, text) in files {
            for d in parse(file, text)?.decls {
                if decls.iter().any(|e| e.keyword() == d.keyword() && e.name() == d.name()) {
                    return Err(ParseError::new(
                        ParseErrorKind::DuplicateName,
                        &d.name().span,
                        format!("duplicate {} `{}`", d.keyword(), d.name()),
                    ));
                }
                decls.push(d);
            }
        }
        Ok(Workspace {
            decls,
            categories: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn decls(&self) -> &[Decl] {
        &self.decls
    }

    pub fn category_decls(&self) -> Vec<&CategoryDecl> {
        self.decls.iter().filter_map(|d| if let Decl::Category(c) = d { Some(c) } else { None }).collect()
    }

    pub fn functor_decls(&self) -> Vec<&FunctorDecl> {
        self.decls.iter().filter_map(|d| if let Decl::Functor(c) = d { Some(c) } else { None }).collect()
    }

    pub fn nat_decls(&self) -> Vec<&NatDecl> {
        self.decls.iter().filter_map(|d| if let Decl::Nat(c) = d { Some(c) } else { None }).collect()
    }

    pub fn diagram_decls(&self) -> Vec<&DiagramDecl> {
        self.decls.iter().filter_map(|d| if let Decl::Diagram(c) = d { Some(c) } else { None }).collect()
    }

    pub fn complex_decls(&self) -> Vec<&ComplexDecl> {
        self.decls.iter().filter_map(|d| if let Decl::Complex(c) = d { Some(c) } else { None }).collect()
    }

    pub fn space_decls(&self) -> Vec<&SpaceDecl> {
        self.decls.iter().filter_map(|d| if let Decl::Space(c) = d { Some(c) } else { None }).collect()
    }

    pub fn group_decls(&self) -> Vec<&GroupDecl> {
        self.decls.iter().filter_map(|d| if let Decl::Group(c) = d { Some(c) } else { None }).collect()
    }

    pub fn map_decls(&self) -> Vec<&MapDecl> {
        self.decls.iter().filter_map(|d| if let Decl::Map(c) = d { Some(c) } else { None }).collect()
    }

    pub fn build_category(decl: &CategoryDecl) -> Result<FinCategory, Finding> {
        let names = |ids: &[Ident]| ids.iter().map(|i| i.name.clone()).collect::<Vec<_>>();
        let desc = CategoryDescription {
            name: decl.name.name.clone(),
            objects: names(&decl.objects),
            arrows: decl
                .arrows
                .iter()
                .map(|a| (a.name.name.clone(), a.dom.name.clone(), a.cod.name.clone()))
                .collect(),
            compositions: decl
                .compositions
                .iter()
                .map(|(g, f, h)| (g.name.clone(), f.name.clone(), h.name.clone()))
                .collect(),
        };
        validate_category(&desc).map_err(|e| Finding::from_error(&format!("category {}", decl.name), &e))
    }

    /// A declared category, or a built-in `FinSet<n>` skeleton.
    pub fn category(&self, id: &Ident) -> Result<Arc<FinCategory>, LoadError> {
        if let Some(c) = self.categories.borrow().get(&id.name) {
            return Ok(c.clone());
        }
        let built = match self.category_decls().into_iter().find(|c| c.name == *id) {
            Some(decl) => Workspace::build_category(decl).map_err(LoadError::Check)?,
            None => match builtin_finset(&id.name) {
                Some(n) => finset_skeleton(n).expect("built-in skeleton"),
                None => return Err(unknown(id, "category")),
            },
        };
        let c = Arc::new(built);
        self.categories.borrow_mut().insert(id.name.clone(), c.clone());
        Ok(c)
    }

    pub fn functor_decl(&self, id: &Ident) -> Result<&FunctorDecl, LoadError> {
        self.functor_decls().into_iter().find(|f| f.name == *id).ok_or_else(|| unknown(id, "functor"))
    }

    /// The declared maps of a functor, identities filled in; the laws are not
    /// checked here.
    pub fn functor(&self, decl: &FunctorDecl) -> Result<Functor, LoadError> {
        let (s, t) = (self.category(&decl.source)?, self.category(&decl.target)?);
        let not_total = |what: String| {
            LoadError::Check(Finding::from_error(
                &format!("functor {}", decl.name),
                &FunctorError::NotTotal(what),
            ))
        };
        for (a, x) in &decl.objects {
            s.object(&a.name).ok_or_else(|| unknown(a, &format!("object of {}", s.name())))?;
            t.object(&x.name).ok_or_else(|| unknown(x, &format!("object of {}", t.name())))?;
        }
        for (f, u) in &decl.arrows {
            match s.morphism(&f.name) {
                Some(m) if !s.is_identity(m) => {}
                _ => return Err(unknown(f, &format!("non-identity arrow of {}", s.name()))),
            }
            t.morphism(&u.name).ok_or_else(|| unknown(u, &format!("arrow of {}", t.name())))?;
        }
        let mut object_map = Vec::with_capacity(s.object_count());
        for a in s.objects() {
            let (_, x) = decl
                .objects
                .iter()
                .find(|(o, _)| o.name == s.object_name(a))
                .ok_or_else(|| not_total(format!("object {} has no image", s.object_name(a))))?;
            object_map.push(t.object(&x.name).unwrap());
        }
        let mut morphism_map = Vec::with_capacity(s.morphism_count());
        for f in s.morphisms() {
            if s.is_identity(f) {
                morphism_map.push(t.identity(object_map[s.dom(f).0]));
                continue;
            }
            let (_, u) = decl
                .arrows
                .iter()
                .find(|(m, _)| m.name == s.morphism_name(f))
                .ok_or_else(|| not_total(format!("arrow {} has no image", s.morphism_name(f))))?;
            morphism_map.push(t.morphism(&u.name).unwrap());
        }
        Ok(Functor {
            name: decl.name.name.clone(),
            source: s,
            target: t,
            variance: if decl.contravariant { Variance::Contravariant } else { Variance::Covariant },
            object_map,
            morphism_map,
        })
    }

    pub fn functor_named(&self, id: &Ident) -> Result<Functor, LoadError> {
        let decl = self.functor_decl(id)?;
        self.functor(decl)
    }

    pub fn nat(&self, decl: &NatDecl) -> Result<NatTrans, LoadError> {
        let (f, g) = (self.functor_named(&decl.source)?, self.functor_named(&decl.target)?);
        let (s, t) = (f.source.clone(), f.target.clone());
        for (a, u) in &decl.components {
            s.object(&a.name).ok_or_else(|| unknown(a, &format!("object of {}", s.name())))?;
            t.morphism(&u.name).ok_or_else(|| unknown(u, &format!("arrow of {}", t.name())))?;
        }
        let mut components = Vec::with_capacity(s.object_count());
        for a in s.objects() {
            let (_, u) = decl.components.iter().find(|(o, _)| o.name == s.object_name(a)).ok_or_else(|| {
                LoadError::Check(Finding::new(
                    "MissingComponent",
                    format!("nat {}: no component at {}", decl.name, s.object_name(a)),
                    Some(s.object_name(a).to_string()),
                ))
            })?;
            components.push(t.morphism(&u.name).unwrap());
        }
        Ok(NatTrans {
            name: decl.name.name.clone(),
            source: f,
            target: g,
            components,
        })
    }

    pub fn nat_named(&self, id: &Ident) -> Result<NatTrans, LoadError> {
        let decl = self.nat_decls().into_iter().find(|n| n.name == *id).ok_or_else(|| unknown(id, "nat"))?;
        self.nat(decl)
    }

    /// Nodes and edges resolved in `c`; endpoint typing is left to the core.
    pub fn diagram_parts(&self, decl: &DiagramDecl, c: &FinCategory) -> Result<DiagramParts, LoadError> {
        let mut nodes = Vec::with_capacity(decl.nodes.len());
        for (n, o) in &decl.nodes {
            let obj = c.object(&o.name).ok_or_else(|| unknown(o, &format!("object of {}", c.name())))?;
            nodes.push((n.name.clone(), obj));
        }
        let mut edges = Vec::with_capacity(decl.edges.len());
        for e in &decl.edges {
            let pos = |id: &Ident| decl.nodes.iter().position(|(n, _)| n == id).unwrap();
            let mor = c.morphism(&e.by.name).ok_or_else(|| unknown(&e.by, &format!("arrow of {}", c.name())))?;
            edges.push(Edge {
                src: pos(&e.src),
                dst: pos(&e.dst),
                mor,
            });
        }
        Ok((nodes, edges))
    }

    pub fn diagram<'c>(&self, decl: &DiagramDecl, c: &'c FinCategory) -> Result<Diagram<'c>, LoadError> {
        let (nodes, edges) = self.diagram_parts(decl, c)?;
        Diagram::new(c, nodes, edges).map_err(|e| LoadError::Check(Finding::from_error(&format!("diagram {}", decl.name), &e)))
    }

    /// The diagram as a functor out of the free category on its graph.
    pub fn diagram_functor(&self, decl: &DiagramDecl) -> Result<Functor, LoadError> {
        let c = self.category(&decl.category)?;
        let d = self.diagram(decl, &c)?;
        let check = |e: &dyn std::fmt::Display, kind: &str| {
            LoadError::Check(Finding::new(kind, format!("diagram {}: {e}", decl.name), Some(e.to_string())))
        };
        let edge_names: Vec<String> = (0..d.edges().len()).map(|i| format!("e{i}")).collect();
        let graph = Graph {
            vertices: d.nodes().iter().map(|(n, _)| n.clone()).collect(),
            edges: d
                .edges()
                .iter()
                .zip(&edge_names)
                .map(|(e, name)| (name.clone(), d.nodes()[e.src].0.clone(), d.nodes()[e.dst].0.clone()))
                .collect(),
        };
        let shape = Arc::new(free_category(&graph).map_err(|e| check(&e, &crate::report::variant_name(&e)))?);
        let object_map = d.nodes().iter().map(|&(_, o)| o).collect();
        let morphism_map: Vec<Mor> = shape
            .morphisms()
            .map(|m| {
                if shape.is_identity(m) {
                    return c.identity(d.nodes()[shape.dom(m).0].1);
                }
                // Composite names list edges in application order, last first.
                let path: Vec<Mor> = shape
                    .morphism_name(m)
                    .split('.')
                    .rev()
                    .map(|e| d.edges()[e[1..].parse::<usize>().unwrap()].mor)
                    .collect();
                c.comp_path(&path).expect("typed path")
            })
            .collect();
        let f = Functor {
            name: decl.name.name.clone(),
            source: shape,
            target: c.clone(),
            variance: Variance::Covariant,
            object_map,
            morphism_map,
        };
        catkit_core::functor::validate_functor(&f).map_err(|e| check(&e, &crate::report::variant_name(&e)))?;
        Ok(f)
    }

    pub fn complex(decl: &ComplexDecl) -> Result<SimplicialComplex, LoadError> {
        let mut vertices: Vec<String> = Vec::new();
        for s in &decl.simplices {
            for v in s {
                if !vertices.contains(&v.name) {
                    vertices.push(v.name.clone());
                }
            }
        }
        let simplices: Vec<Vec<String>> =
            decl.simplices.iter().map(|s| s.iter().map(|v| v.name.clone()).collect()).collect();
        validate_complex(&vertices, &simplices)
            .map_err(|e| LoadError::Check(Finding::from_error(&format!("complex {}", decl.name), &e)))
    }

    pub fn space(decl: &SpaceDecl) -> Result<FinTopSpace, LoadError> {
        let points: Vec<String> = decl.points.iter().map(|p| p.name.clone()).collect();
        let family: Vec<Vec<String>> = decl.opens.iter().map(|o| o.iter().map(|p| p.name.clone()).collect()).collect();
        validate_space(&decl.name.name, &points, &family)
            .map_err(|e| LoadError::Check(Finding::from_error(&format!("space {}", decl.name), &e)))
    }

    pub fn space_named(&self, id: &Ident) -> Result<FinTopSpace, LoadError> {
        let decl = self.space_decls().into_iter().find(|s| s.name == *id).ok_or_else(|| unknown(id, "space"))?;
        Workspace::space(decl)
    }

    pub fn group(decl: &GroupDecl) -> Result<FinGroup, LoadError> {
        let elements: Vec<String> = decl.elements.iter().map(|e| e.name.clone()).collect();
        let rows: Vec<Vec<usize>> = decl
            .rows
            .iter()
            .map(|r| r.iter().map(|e| decl.elements.iter().position(|x| x == e).unwrap()).collect())
            .collect();
        check_group(&elements, &rows).map_err(|e| LoadError::Check(Finding::from_error(&format!("group {}", decl.name), &e)))
    }

    pub fn group_decl(&self, id: &Ident) -> Option<&GroupDecl> {
        self.group_decls().into_iter().find(|g| g.name == *id)
    }

    /// Resolves a map between named point lists into an index table.
    pub fn map_table(decl: &MapDecl, source: &[String], target: &[String]) -> Result<Vec<usize>, LoadError> {
        for (p, q) in &decl.pairs {
            if !source.contains(&p.name) {
                return Err(unknown(p, &format!("point of {}", decl.source)));
            }
            if !target.contains(&q.name) {
                return Err(unknown(q, &format!("point of {}", decl.target)));
            }
        }
        source
            .iter()
            .map(|p| {
                let (_, q) = decl.pairs.iter().find(|(a, _)| a.name == *p).ok_or_else(|| {
                    LoadError::Check(Finding::new(
                        "NotAFunction",
                        format!("map {}: {p} has no image", decl.name),
                        Some(p.clone()),
                    ))
                })?;
                Ok(target.iter().position(|t| *t == q.name).unwrap())
            })
            .collect()
    }
}
