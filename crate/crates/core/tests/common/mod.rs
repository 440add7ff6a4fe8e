//! Shared corpus, random generators and brute-force oracles for the
//! integration and acceptance tests. Oracles work from the raw data and do not
//! call the checkers they are compared against.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use catkit_core::builders::{free_category, poset_category, powerset_lattice, Graph, PosetData};
use catkit_core::category::{CategoryDescription, FinCategory, Mor, MorData, Obj};
use catkit_core::diagram::{Diagram, Edge};
use catkit_core::finset::finset_skeleton;
use catkit_core::topo::{from_masks, FinTopSpace, SimplicialComplex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One-object category from a monoid table over `0..n`, element 0 the unit.
pub fn monoid(name: &str, rows: &[Vec<usize>]) -> FinCategory {
    let n = rows.len();
    let morphisms = (0..n)
        .map(|i| MorData {
            name: if i == 0 { "id_M".into() } else { format!("m{i}") },
            dom: Obj(0),
            cod: Obj(0),
        })
        .collect();
    let table = rows.iter().flatten().map(|&h| Some(Mor(h))).collect();
    FinCategory::from_table(name, vec!["M".into()], morphisms, vec![Mor(0)], table).unwrap()
}

/// `Z` is a null object: `z: Z → A`, `t: A → Z`, `e = z ∘ t`.
pub fn pointed() -> FinCategory {
    let desc = CategoryDescription {
        name: "Pointed".into(),
        objects: vec!["Z".into(), "A".into()],
        arrows: vec![
            ("z".into(), "Z".into(), "A".into()),
            ("t".into(), "A".into(), "Z".into()),
            ("e".into(), "A".into(), "A".into()),
        ],
        compositions: [
            ("t", "z", "id_Z"),
            ("z", "t", "e"),
            ("e", "e", "e"),
            ("t", "e", "t"),
            ("e", "z", "z"),
        ]
        .iter()
        .map(|(g, f, h)| (g.to_string(), f.to_string(), h.to_string()))
        .collect(),
    };
    catkit_core::validate_category(&desc).unwrap()
}

pub fn walking_iso() -> FinCategory {
    let desc = CategoryDescription {
        name: "Iso".into(),
        objects: vec!["A".into(), "B".into()],
        arrows: vec![("i".into(), "A".into(), "B".into()), ("j".into(), "B".into(), "A".into())],
        compositions: vec![
            ("j".into(), "i".into(), "id_A".into()),
            ("i".into(), "j".into(), "id_B".into()),
        ],
    };
    catkit_core::validate_category(&desc).unwrap()
}

pub fn discrete(names: &[&str]) -> FinCategory {
    free_category(&Graph::new(names, &[])).unwrap()
}

pub fn graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> FinCategory {
    free_category(&Graph::new(vertices, edges)).unwrap()
}

/// Small categories, all with at most 11 morphisms.
pub fn corpus_categories() -> Vec<FinCategory> {
    vec![
        discrete(&["A"]).with_name("One"),
        discrete(&["A", "B"]).with_name("Two"),
        graph(&["A", "B"], &[("f", "A", "B")]).with_name("Arrow"),
        graph(&["A", "B"], &[("f", "A", "B"), ("g", "A", "B")]).with_name("Parallel"),
        graph(&["A", "B", "C"], &[("f", "C", "A"), ("g", "C", "B")]).with_name("Span"),
        graph(&["A", "B", "C"], &[("f", "A", "C"), ("g", "B", "C")]).with_name("Cospan"),
        graph(&["A", "B", "C"], &[("f", "A", "B"), ("g", "B", "C")]).with_name("Path"),
        poset_category(&PosetData::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")])).unwrap().with_name("Vee"),
        powerset_lattice(2).with_name("Square"),
        monoid("Z2", &[vec![0, 1], vec![1, 0]]),
        monoid("Idem", &[vec![0, 1], vec![1, 1]]),
        monoid("Z3", &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]),
        monoid("LeftZero", &[vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]]),
        pointed(),
        walking_iso(),
        finset_skeleton(2).unwrap(),
    ]
}

/// Description listing non-identity arrows and every composable
/// non-identity pair.
pub fn describe(c: &FinCategory) -> CategoryDescription {
    let mut desc = CategoryDescription {
        name: c.name().to_string(),
        objects: c.objects().map(|a| c.object_name(a).to_string()).collect(),
        ..Default::default()
    };
    for f in c.morphisms().filter(|&f| !c.is_identity(f)) {
        desc.arrows.push((
            c.morphism_name(f).to_string(),
            c.object_name(c.dom(f)).to_string(),
            c.object_name(c.cod(f)).to_string(),
        ));
    }
    for f in c.morphisms().filter(|&f| !c.is_identity(f)) {
        for g in c.morphisms().filter(|&g| !c.is_identity(g) && c.dom(g) == c.cod(f)) {
            desc.compositions.push((
                c.morphism_name(g).to_string(),
                c.morphism_name(f).to_string(),
                c.morphism_name(c.comp(g, f)).to_string(),
            ));
        }
    }
    desc
}

/// Random description on at most `max_objects` objects and `max_morphisms`
/// morphisms (identities included), with a random typed table.
pub fn random_description(rng: &mut impl Rng, max_objects: usize, max_morphisms: usize) -> CategoryDescription {
    let n = rng.gen_range(1..=max_objects);
    let objects: Vec<String> = (0..n).map(|i| ["A", "B", "C", "D"][i].to_string()).collect();
    let arrows_count = rng.gen_range(0..=max_morphisms - n);
    let arrows: Vec<(String, String, String)> = (0..arrows_count)
        .map(|i| {
            (
                format!("f{i}"),
                objects[rng.gen_range(0..n)].clone(),
                objects[rng.gen_range(0..n)].clone(),
            )
        })
        .collect();
    let mut compositions = Vec::new();
    for f in &arrows {
        for g in &arrows {
            if g.1 != f.2 {
                continue;
            }
            let mut candidates: Vec<String> =
                arrows.iter().filter(|h| h.1 == f.1 && h.2 == g.2).map(|h| h.0.clone()).collect();
            if f.1 == g.2 {
                candidates.push(format!("id_{}", f.1));
            }
            if let Some(h) = candidates.choose(rng) {
                compositions.push((g.0.clone(), f.0.clone(), h.clone()));
            }
        }
    }
    CategoryDescription {
        name: "Random".into(),
        objects,
        arrows,
        compositions,
    }
}

/// One random edit: rewrite, drop or duplicate a table entry, retype or
/// rename an arrow.
pub fn mutate(rng: &mut impl Rng, desc: &CategoryDescription) -> CategoryDescription {
    let mut d = desc.clone();
    let names: Vec<String> = d
        .arrows
        .iter()
        .map(|a| a.0.clone())
        .chain(d.objects.iter().map(|o| format!("id_{o}")))
        .collect();
    match rng.gen_range(0..6) {
        0 | 1 if !d.compositions.is_empty() => {
            let i = rng.gen_range(0..d.compositions.len());
            d.compositions[i].2 = names.choose(rng).unwrap().clone();
        }
        2 if !d.compositions.is_empty() => {
            let i = rng.gen_range(0..d.compositions.len());
            d.compositions.remove(i);
        }
        3 if !d.compositions.is_empty() => {
            let mut e = d.compositions.choose(rng).unwrap().clone();
            e.2 = names.choose(rng).unwrap().clone();
            d.compositions.push(e);
        }
        4 if !d.arrows.is_empty() => {
            let i = rng.gen_range(0..d.arrows.len());
            d.arrows[i].2 = d.objects.choose(rng).unwrap().clone();
        }
        _ if !d.arrows.is_empty() => {
            let i = rng.gen_range(0..d.arrows.len());
            d.arrows[i].0 = names.choose(rng).unwrap().clone();
        }
        _ => d.objects.push(d.objects[0].clone()),
    }
    d
}

/// The category axioms checked directly on the names of a description.
pub fn brute_force_axioms(d: &CategoryDescription) -> bool {
    let objects: BTreeSet<&str> = d.objects.iter().map(|s| s.as_str()).collect();
    if objects.len() != d.objects.len() {
        return false;
    }
    let mut ends: HashMap<String, (String, String)> = HashMap::new();
    for o in &d.objects {
        ends.insert(format!("id_{o}"), (o.clone(), o.clone()));
    }
    for (name, a, b) in &d.arrows {
        if !objects.contains(a.as_str()) || !objects.contains(b.as_str()) {
            return false;
        }
        if ends.insert(name.clone(), (a.clone(), b.clone())).is_some() {
            return false;
        }
    }
    let mut comp: HashMap<(String, String), String> = HashMap::new();
    for (g, f, h) in &d.compositions {
        let (Some(ge), Some(fe), Some(he)) = (ends.get(g), ends.get(f), ends.get(h)) else {
            return false;
        };
        if ge.0 != fe.1 || he.0 != fe.0 || he.1 != ge.1 {
            return false;
        }
        if comp.insert((g.clone(), f.clone()), h.clone()).is_some_and(|prev| &prev != h) {
            return false;
        }
    }
    for (f, fe) in &ends {
        let id_dom = format!("id_{}", fe.0);
        let id_cod = format!("id_{}", fe.1);
        for (key, want) in [((f.clone(), id_dom), f), ((id_cod, f.clone()), f)] {
            if comp.get(&key).is_some_and(|h| h != want) {
                return false;
            }
            comp.insert(key, want.clone());
        }
    }
    for (f, fe) in &ends {
        for (g, ge) in &ends {
            if ge.0 == fe.1 && !comp.contains_key(&(g.clone(), f.clone())) {
                return false;
            }
        }
    }
    for (f, fe) in &ends {
        for (g, ge) in &ends {
            if ge.0 != fe.1 {
                continue;
            }
            for (h, he) in &ends {
                if he.0 != ge.1 {
                    continue;
                }
                let gf = &comp[&(g.clone(), f.clone())];
                let hg = &comp[&(h.clone(), g.clone())];
                if comp[&(h.clone(), gf.clone())] != comp[&(hg.clone(), f.clone())] {
                    return false;
                }
            }
        }
    }
    true
}

/// Composition of a category as a name table, for building mutated copies.
pub fn raw_table(c: &FinCategory) -> (Vec<String>, Vec<MorData>, Vec<Mor>, Vec<Option<Mor>>) {
    let m = c.morphism_count();
    let objects = c.objects().map(|a| c.object_name(a).to_string()).collect();
    let morphisms = c.morphisms().map(|f| c.morphism_data(f).clone()).collect();
    let identities = c.objects().map(|a| c.identity(a)).collect();
    let table = (0..m * m).map(|i| c.compose(Mor(i / m), Mor(i % m))).collect();
    (objects, morphisms, identities, table)
}

/// Whether composition in a raw table is associative, by direct triple scan.
pub fn table_associative(morphisms: &[MorData], table: &[Option<Mor>]) -> bool {
    let m = morphisms.len();
    let at = |g: usize, f: usize| table[g * m + f];
    for f in 0..m {
        for g in 0..m {
            let Some(gf) = at(g, f) else { continue };
            for h in 0..m {
                let Some(hg) = at(h, g) else { continue };
                if at(h, gf.0) != at(hg.0, f) {
                    return false;
                }
            }
        }
    }
    true
}

/// Random face-closed complex on up to `max_vertices` vertices with facets
/// of dimension at most 3.
pub fn random_complex(rng: &mut impl Rng, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let facets: Vec<Vec<usize>> = (0..rng.gen_range(0..=2 * n))
        .map(|_| {
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            vs.truncate(rng.gen_range(1..=4.min(n)));
            vs
        })
        .collect();
    SimplicialComplex::from_indices(n, &facets).unwrap()
}

/// Random connected simple graph: a random spanning tree plus extra edges.
pub fn random_connected_graph(rng: &mut impl Rng, max_vertices: usize) -> (usize, Vec<(usize, usize)>) {
    let n = rng.gen_range(1..=max_vertices);
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for _ in 0..rng.gen_range(0..=n) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    (n, edges.into_iter().collect())
}

/// Every topology on `n` points, by brute force over families of subsets.
pub fn all_topologies(n: usize) -> Vec<FinTopSpace> {
    let subsets = 1usize << n;
    let full = subsets - 1;
    let points: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut out = Vec::new();
    for family in 0u64..1 << subsets {
        let has = |s: usize| family >> s & 1 == 1;
        if !has(0) || !has(full) {
            continue;
        }
        let closed = (0..subsets).all(|a| (0..subsets).all(|b| !(has(a) && has(b)) || (has(a | b) && has(a & b))));
        if closed {
            let opens = (0..subsets).filter(|&s| has(s)).map(|s| s as u64).collect();
            out.push(from_masks(&format!("T{n}_{family}"), points.clone(), opens).unwrap());
        }
    }
    out
}

/// Preimage definition of continuity.
pub fn continuous_oracle(f: &[usize], x: &FinTopSpace, y: &FinTopSpace) -> bool {
    y.opens().iter().all(|&v| {
        let pre = (0..x.len()).filter(|&p| v >> f[p] & 1 == 1).fold(0u64, |m, p| m | 1 << p);
        x.opens().contains(&pre)
    })
}

/// Classical group axioms on a table over `0..n`.
pub fn elementwise_group(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    let Some(e) = (0..n).find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x)) else {
        return false;
    };
    let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| rows[rows[a][b]][c] == rows[a][rows[b][c]])));
    assoc && (0..n).all(|a| (0..n).any(|b| rows[a][b] == e && rows[b][a] == e))
}

pub fn arc(c: FinCategory) -> Arc<FinCategory> {
    Arc::new(c)
}

/// A diagram drawn in some category as raw nodes and edges.
#[derive(Clone, Debug)]
pub struct DrawnDiagram {
    pub nodes: Vec<(String, Obj)>,
    pub edges: Vec<Edge>,
    /// Triangular faces as edge-index triples.
    pub faces: Vec<[usize; 3]>,
}

impl DrawnDiagram {
    pub fn diagram<'c>(&self, c: &'c FinCategory) -> Diagram<'c> {
        Diagram::new(c, self.nodes.clone(), self.edges.clone()).unwrap()
    }

    /// The sub-diagram spanned by one face.
    pub fn face<'c>(&self, c: &'c FinCategory, face: [usize; 3]) -> Diagram<'c> {
        let mut nodes: Vec<usize> = face.iter().flat_map(|&e| [self.edges[e].src, self.edges[e].dst]).collect();
        nodes.sort_unstable();
        nodes.dedup();
        let local = |n: usize| nodes.iter().position(|&m| m == n).unwrap();
        let edges = face
            .iter()
            .map(|&e| Edge {
                src: local(self.edges[e].src),
                dst: local(self.edges[e].dst),
                mor: self.edges[e].mor,
            })
            .collect();
        Diagram::new(c, nodes.iter().map(|&n| self.nodes[n].clone()).collect(), edges).unwrap()
    }
}

/// Grows a triangulated disc from one edge. Each step glues a commuting
/// triangle onto an existing edge `x → y` by `m`: a factorization
/// `x → w → y`, a new source `w → x, w → y`, or a new target `y → w, x → w`.
pub fn random_triangulation(rng: &mut impl Rng, c: &FinCategory, steps: usize) -> DrawnDiagram {
    let base = loop {
        let f = Mor(rng.gen_range(0..c.morphism_count()));
        if c.dom(f) != c.cod(f) {
            break f;
        }
    };
    let mut d = DrawnDiagram {
        nodes: vec![("n0".into(), c.dom(base)), ("n1".into(), c.cod(base))],
        edges: vec![Edge { src: 0, dst: 1, mor: base }],
        faces: Vec::new(),
    };
    for _ in 0..steps {
        let ei = rng.gen_range(0..d.edges.len());
        let Edge { src: x, dst: y, mor: m } = d.edges[ei];
        let w = d.nodes.len();
        let (wo, e1, e2) = match rng.gen_range(0..3) {
            0 => {
                let options: Vec<(Obj, Mor, Mor)> = c
                    .objects()
                    .flat_map(|o| {
                        c.hom(c.dom(m), o)
                            .iter()
                            .flat_map(move |&a| c.hom(o, c.cod(m)).iter().map(move |&b| (o, a, b)))
                    })
                    .filter(|&(_, a, b)| c.comp(b, a) == m)
                    .collect();
                let &(o, a, b) = options.choose(rng).unwrap();
                (o, Edge { src: x, dst: w, mor: a }, Edge { src: w, dst: y, mor: b })
            }
            1 => {
                let options: Vec<Mor> = c.morphisms().filter(|&a| c.cod(a) == c.dom(m)).collect();
                let &a = options.choose(rng).unwrap();
                (c.dom(a), Edge { src: w, dst: x, mor: a }, Edge { src: w, dst: y, mor: c.comp(m, a) })
            }
            _ => {
                let options: Vec<Mor> = c.morphisms().filter(|&b| c.dom(b) == c.cod(m)).collect();
                let &b = options.choose(rng).unwrap();
                (c.cod(b), Edge { src: y, dst: w, mor: b }, Edge { src: x, dst: w, mor: c.comp(b, m) })
            }
        };
        d.nodes.push((format!("n{w}"), wo));
        d.edges.push(e1);
        d.edges.push(e2);
        let k = d.edges.len();
        d.faces.push([ei, k - 2, k - 1]);
    }
    d
}

/// `A -f-> B -g-> C -h-> D` with the chords `g∘f` and `h∘g`, composites read
/// from the table.
pub fn associativity_square(c: &FinCategory, f: Mor, g: Mor, h: Mor) -> Diagram<'_> {
    let nodes = vec![
        ("A".to_string(), c.dom(f)),
        ("B".to_string(), c.cod(f)),
        ("C".to_string(), c.cod(g)),
        ("D".to_string(), c.cod(h)),
    ];
    let edges = vec![
        Edge { src: 0, dst: 1, mor: f },
        Edge { src: 1, dst: 2, mor: g },
        Edge { src: 2, dst: 3, mor: h },
        Edge { src: 0, dst: 2, mor: c.comp(g, f) },
        Edge { src: 1, dst: 3, mor: c.comp(h, g) },
    ];
    Diagram::new(c, nodes, edges).unwrap()
}

/// Every composable triple `(f, g, h)`.
pub fn composable_triples(c: &FinCategory) -> Vec<(Mor, Mor, Mor)> {
    let mut out = Vec::new();
    for f in c.morphisms() {
        for g in c.morphisms().filter(|&g| c.dom(g) == c.cod(f)) {
            for h in c.morphisms().filter(|&h| c.dom(h) == c.cod(g)) {
                out.push((f, g, h));
            }
        }
    }
    out
}

/// Rewrites one composite `g ∘ f` of non-identities to another typed value,
/// returning the broken table when it is no longer associative.
pub fn break_associativity(rng: &mut impl Rng, c: &FinCategory) -> Option<FinCategory> {
    let (objects, morphisms, identities, mut table) = raw_table(c);
    let m = morphisms.len();
    let mut slots: Vec<(usize, usize)> = (0..m)
        .flat_map(|g| (0..m).map(move |f| (g, f)))
        .filter(|&(g, f)| !c.is_identity(Mor(g)) && !c.is_identity(Mor(f)) && table[g * m + f].is_some())
        .collect();
    slots.shuffle(rng);
    for (g, f) in slots {
        let old = table[g * m + f].unwrap();
        let mut others: Vec<Mor> = c.hom(c.dom(Mor(f)), c.cod(Mor(g))).iter().copied().filter(|&h| h != old).collect();
        others.shuffle(rng);
        for h in others {
            table[g * m + f] = Some(h);
            if !table_associative(&morphisms, &table) {
                return Some(
                    FinCategory::from_table_unchecked("Broken", objects, morphisms, identities, table).unwrap(),
                );
            }
        }
        table[g * m + f] = Some(old);
    }
    None
}

/// Categories for the interchange configurations: small, with several
/// functors and transformations between them.
pub fn interchange_pool() -> Vec<Arc<FinCategory>> {
    vec![
        arc(graph(&["A", "B"], &[("f", "A", "B")]).with_name("Arrow")),
        arc(discrete(&["A", "B"]).with_name("Two")),
        arc(monoid("Idem", &[vec![0, 1], vec![1, 1]])),
        arc(poset_category(&PosetData::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")])).unwrap().with_name("Vee")),
        arc(finset_skeleton(2).unwrap()),
    ]
}

/// Two composable transformations `F → G → H` between random functors
/// `k → l`.
pub fn random_composable_pair(
    rng: &mut impl Rng,
    k: &Arc<FinCategory>,
    l: &Arc<FinCategory>,
) -> (catkit_core::NatTrans, catkit_core::NatTrans) {
    use catkit_core::nattrans::{all_functors, natural_transformations};
    let functors = all_functors(k, l, 100_000).unwrap();
    loop {
        let f = functors.choose(rng).unwrap();
        let g = functors.choose(rng).unwrap();
        let h = functors.choose(rng).unwrap();
        let first = natural_transformations(f, g).unwrap();
        let second = natural_transformations(g, h).unwrap();
        if let (Some(a), Some(b)) = (first.choose(rng), second.choose(rng)) {
            return (a.clone(), b.clone());
        }
    }
}

/// `(α, β, γ, δ)` in the argument order of `check_interchange`: `α: F → H`,
/// `γ: H → L` between `A ⇉ B` and `β: G → K`, `δ: K → M` between `B ⇉ C`.
pub fn random_interchange(
    rng: &mut impl Rng,
) -> (catkit_core::NatTrans, catkit_core::NatTrans, catkit_core::NatTrans, catkit_core::NatTrans) {
    let pool = interchange_pool();
    let a = pool.choose(rng).unwrap().clone();
    let b = pool.choose(rng).unwrap().clone();
    let c = pool.choose(rng).unwrap().clone();
    let (alpha, gamma) = random_composable_pair(rng, &a, &b);
    let (beta, delta) = random_composable_pair(rng, &b, &c);
    (alpha, beta, gamma, delta)
}

/// Every category on at most three objects with at most two non-identity
/// arrows, one per isomorphism class, found by exhaustive search over
/// descriptions.
pub fn limit_shapes() -> Vec<FinCategory> {
    let names = ["A", "B", "C"];
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for n in 0..=3usize {
        for k in 0..=2usize {
            let endpoint_choices = (n * n).pow(k as u32);
            for code in 0..endpoint_choices {
                let mut rest = code;
                let arrows: Vec<(String, String, String)> = (0..k)
                    .map(|i| {
                        let (d, c) = (rest % n, rest / n % n);
                        rest /= n * n;
                        (format!("f{i}"), names[d].to_string(), names[c].to_string())
                    })
                    .collect();
                let mut pairs: Vec<((String, String), Vec<String>)> = Vec::new();
                for f in &arrows {
                    for g in arrows.iter().filter(|g| g.1 == f.2) {
                        let mut cands: Vec<String> =
                            arrows.iter().filter(|h| h.1 == f.1 && h.2 == g.2).map(|h| h.0.clone()).collect();
                        if f.1 == g.2 {
                            cands.push(format!("id_{}", f.1));
                        }
                        pairs.push(((g.0.clone(), f.0.clone()), cands));
                    }
                }
                let total: usize = pairs.iter().map(|p| p.1.len()).product();
                for choice in 0..total {
                    let mut rest = choice;
                    let compositions = pairs
                        .iter()
                        .map(|((g, f), cands)| {
                            let h = cands[rest % cands.len()].clone();
                            rest /= cands.len();
                            (g.clone(), f.clone(), h)
                        })
                        .collect();
                    let desc = CategoryDescription {
                        name: format!("J{}", out.len()),
                        objects: names[..n].iter().map(|s| s.to_string()).collect(),
                        arrows: arrows.clone(),
                        compositions,
                    };
                    if let Ok(c) = catkit_core::validate_category(&desc) {
                        if seen.insert(canonical_form(&c)) {
                            out.push(c);
                        }
                    }
                }
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest encoding of the composition structure over all relabelings.
pub fn canonical_form(c: &FinCategory) -> Vec<usize> {
    let (n, m) = (c.object_count(), c.morphism_count());
    let arrows: Vec<Mor> = c.morphisms().filter(|&f| !c.is_identity(f)).collect();
    let mut best: Option<Vec<usize>> = None;
    for po in permutations(n) {
        for pa in permutations(arrows.len()) {
            // New index of each morphism: identities first, then arrows.
            let mut relabel = vec![0; m];
            for a in c.objects() {
                relabel[c.identity(a).0] = po[a.0];
            }
            for (i, &f) in arrows.iter().enumerate() {
                relabel[f.0] = n + pa[i];
            }
            let mut code = vec![n, m];
            let mut by_new = vec![Mor(0); m];
            for f in c.morphisms() {
                by_new[relabel[f.0]] = f;
            }
            for &f in &by_new {
                code.push(po[c.dom(f).0]);
                code.push(po[c.cod(f).0]);
            }
            for &g in &by_new {
                for &f in &by_new {
                    code.push(c.compose(g, f).map_or(usize::MAX, |h| relabel[h.0]));
                }
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap()
}

/// The set-level (co)limit and the searched one agree: both absent, or both
/// present with equal apex size and bijective unique mediators both ways.
pub fn limits_agree(f: &catkit_core::Functor, dir: catkit_core::Direction) -> Result<bool, String> {
    use catkit_core::universal::{
        colimit_finset, concrete_colimit, concrete_limit, limit_finset, search_colimit, search_limit,
        unique_mediator,
    };
    use catkit_core::Direction;
    let (size, finset, searched) = match dir {
        Direction::Cone => (
            concrete_limit(f).map_err(|e| e.to_string())?.size,
            limit_finset(f),
            search_limit(f).map_err(|e| e.to_string())?,
        ),
        Direction::Cocone => (
            concrete_colimit(f).map_err(|e| e.to_string())?.size,
            colimit_finset(f),
            search_colimit(f).map_err(|e| e.to_string())?,
        ),
    };
    let fits = f.target.object_of_size(size).is_some();
    Ok(match (finset, searched) {
        (Ok(a), Some(b)) => {
            let t = &f.target;
            let bijective = |u: Option<Mor>| u.is_some_and(|u| t.function(u).unwrap().is_bijective());
            fits && t.set_size(a.apex) == Some(size)
                && t.set_size(b.apex) == Some(size)
                && bijective(unique_mediator(&b, &a))
                && bijective(unique_mediator(&a, &b))
        }
        (Err(catkit_core::UniversalError::SizeBound(_)), None) => !fits,
        _ => false,
    })
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_oracle(m: &catkit_core::topo::IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<i128>> =
        (0..rows).map(|r| (0..cols).map(|c| i128::try_from(m.get(r, c)).unwrap()).collect()).collect();
    let (mut rank, mut prev) = (0, 1i128);
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    rank
}

/// `c_n − rank ∂_n − rank ∂_{n+1}` with ranks from [`rank_oracle`].
pub fn betti_oracle(k: &SimplicialComplex, n: usize) -> usize {
    let rank = |d: usize| catkit_core::topo::boundary_matrix(k, d).map_or(0, |m| rank_oracle(&m));
    k.count(n) - if n == 0 { 0 } else { rank(n) } - rank(n + 1)
}

/// Element names `0..n`.
pub fn element_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Klein four-group as `Z/2 × Z/2` with bitwise xor.
pub fn klein_rows() -> Vec<Vec<usize>> {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

pub fn corpus_groups() -> Vec<catkit_core::FinGroup> {
    use catkit_core::{check_group, FinGroup};
    vec![
        FinGroup::cyclic(1),
        FinGroup::cyclic(2),
        FinGroup::cyclic(3),
        FinGroup::cyclic(4),
        check_group(&element_names(4), &klein_rows()).unwrap(),
        FinGroup::cyclic(6),
        FinGroup::symmetric(3),
    ]
}

/// Every homomorphism `g → h`, found by brute force over all functions.
pub fn all_homs(g: &catkit_core::FinGroup, h: &catkit_core::FinGroup) -> Vec<catkit_core::GroupHom> {
    use catkit_core::finset::FinFunction;
    FinFunction::all(g.order(), h.order())
        .filter(|f| {
            (0..g.order()).all(|x| (0..g.order()).all(|y| f.apply(g.mul(x, y)) == h.mul(f.apply(x), f.apply(y))))
        })
        .map(|f| catkit_core::GroupHom { source: g.clone(), target: h.clone(), map: f.values().to_vec() })
        .collect()
}

/// Every table over `0..n` in row-major odometer order, optionally with row
/// and column 0 fixed to the identity pattern.
pub fn all_tables(n: usize, unit_at_zero: bool) -> impl Iterator<Item = Vec<Vec<usize>>> {
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !unit_at_zero || (a != 0 && b != 0))
        .collect();
    let total = n.pow(free.len() as u32);
    (0..total).map(move |code| {
        let mut rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| if a == 0 { b } else if b == 0 { a } else { 0 }).collect()).collect();
        let mut rest = code;
        for &(a, b) in &free {
            rows[a][b] = rest % n;
            rest /= n;
        }
        rows
    })
}
