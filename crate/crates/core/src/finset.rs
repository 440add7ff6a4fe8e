//! Functions between finite sets `{0..n-1}` and the skeletal category of
//! finite sets built from them.

use std::fmt;

use crate::category::{CategoryError, FinCategory, MorData, Obj};

/// Default upper bound on `max_size` for [`finset_skeleton`].
pub const DEFAULT_SKELETON_LIMIT: usize = 6;

/// A total function `{0..dom} -> {0..cod}` stored as its value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinFunction {
    dom: usize,
    cod: usize,
    map: Vec<usize>,
}

impl FinFunction {
    /// Returns `None` when an entry is out of range.
    pub fn new(cod: usize, map: Vec<usize>) -> Option<Self> {
        if map.iter().any(|&v| v >= cod) {
            return None;
        }
        Some(FinFunction {
            dom: map.len(),
            cod,
            map,
        })
    }

    pub fn identity(n: usize) -> Self {
        FinFunction {
            dom: n,
            cod: n,
            map: (0..n).collect(),
        }
    }

    pub fn constant(dom: usize, cod: usize, value: usize) -> Option<Self> {
        Self::new(cod, vec![value; dom])
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ inner`. Returns `None` unless `inner.cod() == self.dom()`.
    pub fn after(&self, inner: &FinFunction) -> Option<FinFunction> {
        if inner.cod != self.dom {
            return None;
        }
        Some(FinFunction {
            dom: inner.dom,
            cod: self.cod,
            map: inner.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom == self.cod && self.is_injective()
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<FinFunction> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.dom];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(FinFunction {
            dom: self.cod,
            cod: self.dom,
            map: inv,
        })
    }

    /// Every function `dom -> cod`, lexicographic in the value table.
    pub fn all(dom: usize, cod: usize) -> AllFunctions {
        AllFunctions {
            dom,
            cod,
            next: if dom > 0 && cod == 0 {
                None
            } else {
                Some(vec![0; dom])
            },
        }
    }

    /// Number of functions `dom -> cod`, with `0^0 = 1`.
    pub fn count(dom: usize, cod: usize) -> usize {
        (0..dom).fold(1usize, |acc, _| acc.saturating_mul(cod))
    }
}

impl fmt::Display for FinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} [", self.dom, self.cod)?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Odometer over all value tables of a given shape.
pub struct AllFunctions {
    dom: usize,
    cod: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllFunctions {
    type Item = FinFunction;

    fn next(&mut self) -> Option<FinFunction> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for slot in succ.iter_mut().rev() {
            *slot += 1;
            if *slot < self.cod {
                carried = false;
                break;
            }
            *slot = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(FinFunction {
            dom: self.dom,
            cod: self.cod,
            map: current,
        })
    }
}

/// Canonical object name of the `n`-element set in a skeleton.
pub fn set_name(n: usize) -> String {
    format!("S{n}")
}

/// Canonical morphism name of a function in a skeleton; identities use the
/// reserved `id_<Obj>` form.
pub fn function_name(f: &FinFunction) -> String {
    if f.dom == f.cod && f.map.iter().enumerate().all(|(i, &v)| i == v) {
        return format!("id_{}", set_name(f.dom));
    }
    let mut name = format!("f{}_{}", f.dom, f.cod);
    for v in &f.map {
        name.push('_');
        name.push_str(&v.to_string());
    }
    name
}

/// The skeleton of finite sets of sizes `0..=max_size` with every function
/// between them, bounded by [`DEFAULT_SKELETON_LIMIT`].
pub fn finset_skeleton(max_size: usize) -> Result<FinCategory, CategoryError> {
    finset_skeleton_bounded(max_size, DEFAULT_SKELETON_LIMIT)
}

pub fn finset_skeleton_bounded(max_size: usize, limit: usize) -> Result<FinCategory, CategoryError> {
    if max_size > limit {
        return Err(CategoryError::SizeBound {
            requested: max_size,
            limit,
        });
    }
    concrete_category(&format!("FinSet{max_size}"), (0..=max_size).collect(), |a, b| {
        FinFunction::all(a, b).collect()
    })
}

/// Full subcategory of finite sets on the given sizes (in order), all functions
/// included. Object names follow the skeleton scheme.
pub fn finset_full(name: &str, sizes: &[usize]) -> Result<FinCategory, CategoryError> {
    concrete_category(name, sizes.to_vec(), |a, b| FinFunction::all(a, b).collect())
}

/// Builds a concrete category whose objects are finite sets of the given sizes
/// and whose hom-sets are chosen by `hom`. The chosen families must contain
/// the identities and be closed under composition; this is checked.
pub fn concrete_category(
    name: &str,
    sizes: Vec<usize>,
    hom: impl Fn(usize, usize) -> Vec<FinFunction>,
) -> Result<FinCategory, CategoryError> {
    let objects: Vec<String> = sizes.iter().map(|&s| set_name(s)).collect();
    let mut morphisms = Vec::new();
    let mut functions = Vec::new();
    for (a, &sa) in sizes.iter().enumerate() {
        for (b, &sb) in sizes.iter().enumerate() {
            for f in hom(sa, sb) {
                debug_assert!(f.dom == sa && f.cod == sb);
                morphisms.push(MorData {
                    name: function_name(&f),
                    dom: Obj(a),
                    cod: Obj(b),
                });
                functions.push(f);
            }
        }
    }
    FinCategory::from_functions(name, objects, sizes, morphisms, functions)
}

/// The subcategory of finite sets generated under composition by `generators`
/// between sets of the given sizes. Distinct sizes are required; morphisms are
/// named `g<k>` in discovery order, identities `id_S<n>`.
pub fn generated_concrete_category(
    name: &str,
    sizes: &[usize],
    generators: &[FinFunction],
) -> Result<FinCategory, CategoryError> {
    use std::collections::HashSet;

    let obj_of = |n: usize| sizes.iter().position(|&s| s == n);
    let mut found: Vec<FinFunction> = sizes.iter().map(|&n| FinFunction::identity(n)).collect();
    let mut seen: HashSet<FinFunction> = found.iter().cloned().collect();
    let mut frontier: Vec<FinFunction> = Vec::new();
    for g in generators {
        if obj_of(g.dom).is_none() || obj_of(g.cod).is_none() {
            return Err(CategoryError::DanglingEndpoint {
                arrow: g.to_string(),
                endpoint: format!("set of size {}", if obj_of(g.dom).is_none() { g.dom } else { g.cod }),
            });
        }
        if seen.insert(g.clone()) {
            found.push(g.clone());
            frontier.push(g.clone());
        }
    }
    while let Some(f) = frontier.pop() {
        let snapshot: Vec<FinFunction> = found.clone();
        for g in &snapshot {
            for c in [g.after(&f), f.after(g)].into_iter().flatten() {
                if seen.insert(c.clone()) {
                    found.push(c.clone());
                    frontier.push(c);
                }
            }
        }
    }
    let objects: Vec<String> = sizes.iter().map(|&s| set_name(s)).collect();
    let mut morphisms = Vec::new();
    let mut functions = Vec::new();
    let mut counter = 0;
    for f in found {
        let (a, b) = (obj_of(f.dom).unwrap(), obj_of(f.cod).unwrap());
        let name = if a == b && f == FinFunction::identity(f.dom) {
            format!("id_{}", objects[a])
        } else {
            counter += 1;
            format!("g{counter}")
        };
        morphisms.push(MorData {
            name,
            dom: Obj(a),
            cod: Obj(b),
        });
        functions.push(f);
    }
    FinCategory::from_functions(name, objects, sizes.to_vec(), morphisms, functions)
}
