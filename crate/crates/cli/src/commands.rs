//! Command-line surface: argument parsing and dispatch to the core checks.

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use catkit_core::algebra::{check_hom, image, is_abelian, is_group_mono, kernel, GroupHom};
use catkit_core::category::{classify_morphism, FinCategory};
use catkit_core::functor::{classify_functor, compose_functors, hom_bifunctor, identity_functor, validate_functor, Variance};
use catkit_core::nattrans::{
    check_natural, coend_finset, dummy_bifunctor, end_equals_limit_check, end_finset, is_natural_iso, same_functor,
    EndResult,
};
use catkit_core::topo::{
    euler_characteristic, homology, is_connected, is_continuous, pi0_complex, pi0_top, pi1_presentation,
    ComponentPartition, SimplicialComplex,
};
use catkit_core::universal::{
    check_adjunction, find_adjoint, is_limit_cone, search_colimit, search_limit, AdjointSearch, Adjunction,
    AdjunctionMode, Side,
};

use crate::report::{Finding, Report};
use crate::syntax::{FunctorDecl, GroupDecl, Ident, MapDecl, NatDecl, ParseError, ParseErrorKind, SourceSpan, SpaceDecl};
use crate::workspace::{LoadError, Workspace};

#[derive(Parser, Debug)]
#[command(name = "catkit", version, about = "Checks finite categories, functors, diagrams, limits, adjunctions, complexes, spaces and groups")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate every declaration of one kind in the given files.
    Check {
        #[command(subcommand)]
        what: CheckKind,
    },
    /// Diagram commands.
    Diagram {
        #[command(subcommand)]
        action: DiagramAction,
    },
    /// Search for a limit of a diagram.
    Limit(DiagramArgs),
    /// Search for a colimit of a diagram.
    Colimit(DiagramArgs),
    /// Adjunction commands.
    Adjoint {
        #[command(subcommand)]
        action: AdjointAction,
    },
    /// End of a functor (as a bifunctor constant in one variable) or of a hom bifunctor.
    End(EndArgs),
    /// Coend of a functor or of a hom bifunctor.
    Coend(EndArgs),
    /// Integral homology of a simplicial complex.
    Homology {
        #[command(flatten)]
        target: Selection,
        /// Single dimension; all dimensions when absent.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Euler characteristic of a simplicial complex.
    Euler(Selection),
    /// Path components of a complex or finite space.
    Pi0(Selection),
    /// Edge-path presentation of the fundamental group.
    Pi1 {
        #[command(flatten)]
        target: Selection,
        /// Base vertex; the first vertex when absent.
        #[arg(long)]
        base: Option<String>,
    },
    /// Finite-space commands.
    Top {
        #[command(subcommand)]
        action: TopAction,
    },
    /// Classification commands.
    Classify {
        #[command(subcommand)]
        what: ClassifyKind,
    },
}

#[derive(Subcommand, Debug)]
enum CheckKind {
    Category { files: Vec<PathBuf> },
    Functor { files: Vec<PathBuf> },
    Nat { files: Vec<PathBuf> },
    Group { files: Vec<PathBuf> },
    Space { files: Vec<PathBuf> },
}

#[derive(Args, Debug)]
struct Selection {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Declaration to use when the files contain several.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args, Debug)]
struct DiagramArgs {
    #[command(flatten)]
    target: Selection,
}

#[derive(Subcommand, Debug)]
enum DiagramAction {
    /// Decide whether a diagram commutes.
    Check(DiagramArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Hom,
    UnitCounit,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
enum AdjointAction {
    /// Verify F ⊣ G from a unit and counit.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        unit: String,
        #[arg(long)]
        counit: String,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
    /// Search for a left or right adjoint through comma categories.
    Find {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        functor: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "subject")]
struct EndSubject {
    /// Covariant functor T into a finite-set category, read as S(b, c) = T(c).
    #[arg(long)]
    functor: Option<String>,
    /// Category whose hom bifunctor is integrated.
    #[arg(long)]
    hom: Option<String>,
}

#[derive(Args, Debug)]
struct EndArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[command(flatten)]
    subject: EndSubject,
}

#[derive(Subcommand, Debug)]
enum TopAction {
    /// Decide continuity of a declared map between declared spaces.
    Continuous(Selection),
}

#[derive(Subcommand, Debug)]
enum ClassifyKind {
    /// Mono, epi, inverses and regularity of one morphism.
    Morphism {
        file: PathBuf,
        morphism: String,
        /// Category to search when the file declares several.
        #[arg(long)]
        category: Option<String>,
    },
}

/// Everything one invocation writes, plus its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Usage(String),
    Parse(ParseError),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

type Res = Result<Report, Failure>;

/// Turns a load result into a report: bad references abort, failed checks
/// become findings.
fn settle<T>(subject: &str, r: Result<T, LoadError>) -> Result<Result<T, Report>, Failure> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(LoadError::Parse(e)) => Err(Failure::Parse(e)),
        Err(LoadError::Check(f)) => Ok(Err(Report::fail(subject, f))),
    }
}

macro_rules! load {
    ($subject:expr, $e:expr) => {
        match settle(&$subject, $e)? {
            Ok(v) => v,
            Err(report) => return Ok(report),
        }
    };
}

fn cli_ident(name: &str) -> Ident {
    Ident {
        name: name.to_string(),
        span: SourceSpan {
            file: "<command line>".into(),
            line: 1,
            column: 1,
            length: name.chars().count().max(1),
        },
    }
}

fn read_files(paths: &[PathBuf]) -> Result<Workspace, Failure> {
    let mut files = Vec::with_capacity(paths.len());
    for p in paths {
        let text = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?;
        files.push((p.display().to_string(), text));
    }
    Ok(Workspace::load(&files)?)
}

/// The named declaration, or the only one of its kind.
fn select<'a, T>(items: Vec<&'a T>, name: Option<&str>, kind: &str, name_of: impl Fn(&T) -> &Ident) -> Result<&'a T, Failure> {
    match name {
        Some(n) => items
            .into_iter()
            .find(|d| name_of(d).name == n)
            .ok_or_else(|| Failure::Usage(format!("no {kind} named {n}"))),
        None => match items.len() {
            1 => Ok(items[0]),
            0 => Err(Failure::Usage(format!("no {kind} declared"))),
            _ => Err(Failure::Usage(format!("several {kind} declarations; choose one with --name"))),
        },
    }
}

fn nonempty(parts: Vec<Report>, kind: &str) -> Res {
    if parts.is_empty() {
        return Err(Failure::Usage(format!("no {kind} declarations in input")));
    }
    Ok(Report::combine(parts))
}

fn check_categories(ws: &Workspace) -> Res {
    let parts = ws
        .category_decls()
        .into_iter()
        .map(|d| match Workspace::build_category(d) {
            Ok(c) => Report::ok(format!("category {c}")),
            Err(f) => Report::fail(format!("category {}", d.name), f),
        })
        .collect();
    nonempty(parts, "category")
}

fn yes_no(flag: bool, yes: &str, no: &str) -> String {
    if flag { yes.to_string() } else { no.to_string() }
}

fn functor_report(ws: &Workspace, d: &FunctorDecl) -> Res {
    let subject = format!("functor {}", d.name);
    let f = load!(subject, ws.functor(d));
    if let Err(e) = validate_functor(&f) {
        return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e)));
    }
    let class = classify_functor(&f);
    let variance = if d.contravariant { " contravariant" } else { "" };
    Ok(Report::ok(format!(
        "functor {}: {} -> {}{variance} ({}, {})",
        d.name,
        f.source.name(),
        f.target.name(),
        yes_no(class.faithful, "faithful", "not faithful"),
        yes_no(class.full, "full", "not full")
    )))
}

fn check_functors(ws: &Workspace) -> Res {
    let parts = ws.functor_decls().into_iter().map(|d| functor_report(ws, d)).collect::<Result<_, _>>()?;
    nonempty(parts, "functor")
}

fn nat_report(ws: &Workspace, d: &NatDecl) -> Res {
    let subject = format!("nat {}", d.name);
    let tau = load!(subject, ws.nat(d));
    if let Some(e) = [&tau.source, &tau.target].into_iter().find_map(|f| validate_functor(f).err()) {
        return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e)));
    }
    let verdict = match check_natural(&tau) {
        Ok(v) => v,
        Err(e) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
    };
    if let Some(f) = verdict.witness {
        let (s, t) = (&*tau.source.source, &*tau.source.target);
        let (a, b) = (s.dom(f), s.cod(f));
        let (lhs, rhs) = match tau.source.variance {
            Variance::Covariant => (
                t.comp(tau.target.mor(f), tau.component(a)),
                t.comp(tau.component(b), tau.source.mor(f)),
            ),
            Variance::Contravariant => (
                t.comp(tau.target.mor(f), tau.component(b)),
                t.comp(tau.component(a), tau.source.mor(f)),
            ),
        };
        return Ok(Report::fail(
            subject,
            Finding::new(
                "NotNatural",
                format!("nat {}: naturality square fails at {}: {} -> {}", d.name, s.morphism_name(f), s.object_name(a), s.object_name(b)),
                Some(format!("{} != {}", t.morphism_name(lhs), t.morphism_name(rhs))),
            ),
        ));
    }
    let iso = matches!(is_natural_iso(&tau), Ok(Some(_)));
    Ok(Report::ok(format!(
        "nat {}: {} => {} is natural{}",
        d.name,
        d.source,
        d.target,
        if iso { " (isomorphism)" } else { "" }
    )))
}

fn check_nats(ws: &Workspace) -> Res {
    let parts = ws.nat_decls().into_iter().map(|d| nat_report(ws, d)).collect::<Result<_, _>>()?;
    nonempty(parts, "nat")
}

fn render_subset(names: &[String], members: &[usize]) -> String {
    format!("{{{}}}", members.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(" "))
}

fn group_report(d: &GroupDecl) -> Res {
    let subject = format!("group {}", d.name);
    let g = load!(subject, Workspace::group(d));
    if g.identity() != 0 {
        return Ok(Report::fail(
            subject,
            Finding::new(
                "IdentityNotFirst",
                format!("group {}: the identity is {}, not the first element {}", d.name, g.elements()[g.identity()], g.elements()[0]),
                Some(g.elements()[g.identity()].clone()),
            ),
        ));
    }
    let shape = match is_abelian(&g).witness {
        None => "abelian".to_string(),
        Some((a, b)) => format!("non-abelian, {0}{1} != {1}{0}", g.elements()[a], g.elements()[b]),
    };
    Ok(Report::ok(format!("group {}: order {}, {shape}", d.name, g.order())))
}

fn hom_report(ws: &Workspace, m: &MapDecl, sd: &GroupDecl) -> Res {
    let subject = format!("hom {}", m.name);
    let td = ws.group_decl(&m.target).ok_or_else(|| {
        Failure::Parse(ParseError::new(
            ParseErrorKind::UnknownReference,
            &m.target.span,
            format!("unknown group `{}`", m.target),
        ))
    })?;
    let g = load!(subject, Workspace::group(sd));
    let h = load!(subject, Workspace::group(td));
    let map = load!(subject, Workspace::map_table(m, g.elements(), h.elements()));
    let hom = GroupHom { source: g.clone(), target: h.clone(), map };
    let (k, im) = match check_hom(&hom).and_then(|()| Ok((kernel(&hom)?, image(&hom)?))) {
        Ok(v) => v,
        Err(e) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
    };
    let mono = matches!(is_group_mono(&hom), Ok(true));
    Ok(Report::ok(format!(
        "hom {}: {} -> {}, kernel {}, image {}, {}",
        m.name,
        m.source,
        m.target,
        render_subset(g.elements(), &k),
        render_subset(h.elements(), &im),
        yes_no(mono, "mono", "not mono")
    )))
}

fn check_groups(ws: &Workspace) -> Res {
    let mut parts: Vec<Report> = ws.group_decls().into_iter().map(group_report).collect::<Result<_, _>>()?;
    for m in ws.map_decls() {
        if let Some(sd) = ws.group_decl(&m.source) {
            parts.push(hom_report(ws, m, sd)?);
        }
    }
    nonempty(parts, "group")
}

fn space_report(d: &SpaceDecl) -> Res {
    let subject = format!("space {}", d.name);
    let x = load!(subject, Workspace::space(d));
    Ok(Report::ok(format!(
        "space {}: {} points, {} open sets, {}",
        d.name,
        x.len(),
        x.opens().len(),
        yes_no(is_connected(&x), "connected", "disconnected")
    )))
}

fn check_spaces(ws: &Workspace) -> Res {
    let parts = ws.space_decls().into_iter().map(space_report).collect::<Result<_, _>>()?;
    nonempty(parts, "space")
}

fn diagram_check(ws: &Workspace, sel: &Selection) -> Res {
    let d = select(ws.diagram_decls(), sel.name.as_deref(), "diagram", |d| &d.name)?;
    let subject = format!("diagram {}", d.name);
    let c = load!(subject, ws.category(&d.category));
    let diagram = load!(subject, ws.diagram(d, &c));
    let verdict = diagram.is_commutative();
    Ok(match verdict.witness {
        None => Report::ok(format!("diagram {} in {} commutes", d.name, c.name())),
        Some(w) => Report::fail(
            subject,
            Finding::new(
                "NotCommutative",
                diagram.describe(&w),
                Some(format!(
                    "{} = {}, {} = {}",
                    diagram.render_path(&w.first.path),
                    c.morphism_name(w.first.morphism),
                    diagram.render_path(&w.second.path),
                    c.morphism_name(w.second.morphism)
                )),
            ),
        ),
    })
}

fn limit(ws: &Workspace, sel: &Selection, colimit: bool) -> Res {
    let d = select(ws.diagram_decls(), sel.name.as_deref(), "diagram", |d| &d.name)?;
    let what = if colimit { "colimit" } else { "limit" };
    let subject = format!("{what} of {}", d.name);
    let f = load!(subject, ws.diagram_functor(d));
    let c = f.target.clone();
    let found = if colimit { search_colimit(&f) } else { search_limit(&f) };
    let cone = match found {
        Ok(Some(cone)) => cone,
        Ok(None) => {
            return Ok(Report::fail(
                subject,
                Finding::new(
                    if colimit { "NoColimit" } else { "NoLimit" },
                    format!("diagram {} has no {what} in {}", d.name, c.name()),
                    Some(format!("no universal {} among {} candidate apexes", if colimit { "cocone" } else { "cone" }, c.object_count())),
                ),
            ))
        }
        Err(e) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
    };
    match is_limit_cone(&cone) {
        Ok(v) if v.universal => {}
        Ok(_) => {
            return Ok(Report::fail(
                subject.clone(),
                Finding::new("NotUniversal", format!("{subject}: the constructed cone is not universal"), None),
            ))
        }
        Err(e) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
    }
    let legs: Vec<String> = f
        .source
        .objects()
        .map(|x| format!("{} = {}", f.source.object_name(x), c.morphism_name(cone.legs[x.0])))
        .collect();
    Ok(Report::ok(format!(
        "{what} of {} in {}: apex {}, legs {}",
        d.name,
        c.name(),
        c.object_name(cone.apex),
        legs.join(", ")
    )))
}

fn adjoint_verify(ws: &Workspace, left: &str, right: &str, unit: &str, counit: &str, mode: Mode) -> Res {
    let subject = format!("adjunction {left} -| {right}");
    let f = load!(subject, ws.functor_named(&cli_ident(left)));
    let g = load!(subject, ws.functor_named(&cli_ident(right)));
    let eta = load!(subject, ws.nat_named(&cli_ident(unit)));
    let eps = load!(subject, ws.nat_named(&cli_ident(counit)));
    for fun in [&f, &g, &eta.source, &eta.target, &eps.source, &eps.target] {
        if let Err(e) = validate_functor(fun) {
            return Ok(Report::fail(subject.clone(), Finding::from_error(&format!("functor {}", fun.name), &e)));
        }
    }
    let shape = |ok: bool, what: &str| {
        (!ok).then(|| Report::fail(subject.clone(), Finding::new("Mismatch", format!("{subject}: {what}"), Some(what.to_string()))))
    };
    let (gf, fg) = match (compose_functors(&g, &f), compose_functors(&f, &g)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
    };
    let checks = [
        (same_functor(&eta.source, &identity_functor(&f.source)), format!("unit {unit} must start at the identity functor")),
        (same_functor(&eta.target, &gf), format!("unit {unit} must end at {right}{left}")),
        (same_functor(&eps.source, &fg), format!("counit {counit} must start at {left}{right}")),
        (same_functor(&eps.target, &identity_functor(&f.target)), format!("counit {counit} must end at the identity functor")),
    ];
    for (ok, what) in &checks {
        if let Some(r) = shape(*ok, what) {
            return Ok(r);
        }
    }
    for tau in [&eta, &eps] {
        if let Err(e) = check_natural(tau) {
            return Ok(Report::fail(subject.clone(), Finding::from_error(&format!("nat {}", tau.name), &e)));
        }
    }
    let adj = Adjunction::from_unit_counit(f, g, eta, eps);
    let (core_mode, label) = match mode {
        Mode::Hom => (AdjunctionMode::HomBijection, "hom bijection"),
        Mode::UnitCounit => (AdjunctionMode::UnitCounit, "unit and counit"),
        Mode::Both => (AdjunctionMode::Both, "hom bijection, unit and counit"),
    };
    Ok(match check_adjunction(&adj, core_mode) {
        Ok(()) => Report::ok(format!("{subject} verified ({label})")),
        Err(e) => Report::fail(subject.clone(), Finding::from_error(&subject, &e)),
    })
}

fn adjoint_find(ws: &Workspace, functor: &str, side: SideArg) -> Res {
    let which = if side == SideArg::Left { "left" } else { "right" };
    let subject = format!("{which} adjoint of {functor}");
    let f = load!(subject, ws.functor_named(&cli_ident(functor)));
    if let Err(e) = validate_functor(&f) {
        return Ok(Report::fail(subject, Finding::from_error(&format!("functor {functor}"), &e)));
    }
    let core_side = if side == SideArg::Left { Side::Left } else { Side::Right };
    Ok(match find_adjoint(&f, core_side) {
        Ok(AdjointSearch::Found(adj)) => {
            let g = if side == SideArg::Left { &adj.left } else { &adj.right };
            let map: Vec<String> = g
                .source
                .objects()
                .map(|b| format!("{} => {}", g.source.object_name(b), g.target.object_name(g.obj(b))))
                .collect();
            Report::ok(format!("{subject}: {}", map.join(", ")))
        }
        Ok(AdjointSearch::Absent { object }) => Report::fail(
            subject,
            Finding::new(
                "NoAdjoint",
                format!("{functor} has no {which} adjoint: no universal arrow at {object}"),
                Some(object),
            ),
        ),
        Err(e) => Report::fail(subject.clone(), Finding::from_error(&subject, &e)),
    })
}

fn end_report(ws: &Workspace, args: &EndArgs, coend: bool) -> Res {
    let what = if coend { "coend" } else { "end" };
    let (c, s, label, limit) = match (&args.subject.functor, &args.subject.hom) {
        (Some(name), _) => {
            let subject = format!("{what} of {name}");
            let t = load!(subject, ws.functor_named(&cli_ident(name)));
            if let Err(e) = validate_functor(&t) {
                return Ok(Report::fail(subject, Finding::from_error(&format!("functor {name}"), &e)));
            }
            let c = t.source.clone();
            let s = match dummy_bifunctor(&c, &t) {
                Ok(s) => s,
                Err(e) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
            };
            let limit = if coend { None } else { Some(end_equals_limit_check(&c, &t)) };
            (c, s, name.clone(), limit)
        }
        (None, Some(name)) => {
            let subject = format!("{what} of Hom({name})");
            let c: Arc<FinCategory> = load!(subject, ws.category(&cli_ident(name)));
            let s = match hom_bifunctor(&c) {
                Ok(s) => s,
                Err(e) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
            };
            (c, s, format!("Hom({name})"), None)
        }
        (None, None) => return Err(Failure::Usage("one of --functor or --hom is required".into())),
    };
    let subject = format!("{what} of {label}");
    let result: EndResult = match if coend { coend_finset(&c, &s) } else { end_finset(&c, &s) } {
        Ok(r) => r,
        Err(e) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
    };
    if !result.universal {
        return Ok(Report::fail(
            subject.clone(),
            Finding::new("NotUniversal", format!("{subject}: the computed wedge is not universal"), None),
        ));
    }
    let unit = if coend { "classes" } else { "elements" };
    let mut text = format!("{subject}: {} {unit}, universal", result.size);
    if let Some(check) = limit {
        match check {
            Ok(r) if r.isomorphic => text.push_str(&format!("; isomorphic to lim {label} ({} elements)", r.limit_size)),
            Ok(r) => {
                return Ok(Report::fail(
                    subject.clone(),
                    Finding::new(
                        "EndNotLimit",
                        format!("{subject}: end and limit disagree"),
                        Some(format!("end {} elements, limit {} elements", r.end_size, r.limit_size)),
                    ),
                ))
            }
            Err(e) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
        }
    }
    Ok(Report::ok(text))
}

fn complex_of(ws: &Workspace, sel: &Selection) -> Result<(String, Result<SimplicialComplex, LoadError>), Failure> {
    let d = select(ws.complex_decls(), sel.name.as_deref(), "complex", |d| &d.name)?;
    Ok((d.name.name.clone(), Workspace::complex(d)))
}

fn homology_report(ws: &Workspace, sel: &Selection, dim: Option<usize>) -> Res {
    let (name, k) = complex_of(ws, sel)?;
    let subject = format!("homology of {name}");
    let k = load!(subject, k);
    let dims: Vec<usize> = match (dim, k.dimension()) {
        (Some(n), _) => vec![n],
        (None, Some(d)) => (0..=d).collect(),
        (None, None) => return Ok(Report::ok(format!("complex {name} is empty"))),
    };
    let mut groups = Vec::with_capacity(dims.len());
    for n in dims {
        match homology(&k, n) {
            Ok(h) => groups.push(h.to_string()),
            Err(e) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
        }
    }
    Ok(Report::ok(groups.join("; ")))
}

fn euler_report(ws: &Workspace, sel: &Selection) -> Res {
    let (name, k) = complex_of(ws, sel)?;
    let subject = format!("Euler characteristic of {name}");
    let k = load!(subject, k);
    let counts: Vec<String> = k.face_counts().iter().map(|c| c.to_string()).collect();
    Ok(Report::ok(format!("chi({name}) = {} from face counts [{}]", euler_characteristic(&k), counts.join(", "))))
}

fn render_components(names: &[String], p: &ComponentPartition) -> String {
    let n = p.blocks.len();
    let blocks: Vec<String> = p.blocks.iter().map(|b| render_subset(names, b)).collect();
    format!("{n} component{} {}", if n == 1 { "" } else { "s" }, blocks.join(" "))
}

fn pi0_report(ws: &Workspace, sel: &Selection) -> Res {
    let complexes = ws.complex_decls();
    let spaces = ws.space_decls();
    let wanted = |id: &Ident| sel.name.as_deref().is_none_or(|n| id.name == n);
    let hits = complexes.iter().filter(|d| wanted(&d.name)).count() + spaces.iter().filter(|d| wanted(&d.name)).count();
    if hits != 1 {
        return Err(Failure::Usage(match (hits, &sel.name) {
            (0, Some(n)) => format!("no complex or space named {n}"),
            (0, None) => "no complex or space declared".into(),
            _ => "several complexes or spaces; choose one with --name".into(),
        }));
    }
    if let Some(d) = complexes.into_iter().find(|d| wanted(&d.name)) {
        let subject = format!("pi0 of {}", d.name);
        let k = load!(subject, Workspace::complex(d));
        return Ok(Report::ok(format!("pi0({}): {}", d.name, render_components(k.vertices(), &pi0_complex(&k)))));
    }
    let d = spaces.into_iter().find(|d| wanted(&d.name)).unwrap();
    let subject = format!("pi0 of {}", d.name);
    let x = load!(subject, Workspace::space(d));
    Ok(Report::ok(format!("pi0({}): {}", d.name, render_components(x.points(), &pi0_top(&x)))))
}

fn pi1_report(ws: &Workspace, sel: &Selection, base: Option<&str>) -> Res {
    let (name, k) = complex_of(ws, sel)?;
    let subject = format!("pi1 of {name}");
    let k = load!(subject, k);
    let Some(base) = base.map(str::to_string).or_else(|| k.vertices().first().cloned()) else {
        return Ok(Report::ok(format!("complex {name} is empty")));
    };
    let p = match pi1_presentation(&k, &base) {
        Ok(p) => p.simplify(),
        Err(e) => return Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
    };
    let relators: Vec<String> = p.relators.iter().map(|r| p.render_word(r)).collect();
    let trivial = if p.is_trivially_presented() { " (trivial)" } else { "" };
    Ok(Report::ok(format!("pi1({name}, {base}) = <{} | {}>{trivial}", p.generators.join(", "), relators.join(", "))))
}

fn continuity_report(ws: &Workspace, sel: &Selection) -> Res {
    let m = select(ws.map_decls(), sel.name.as_deref(), "map", |d| &d.name)?;
    let subject = format!("map {}", m.name);
    let x = load!(subject, ws.space_named(&m.source));
    let y = load!(subject, ws.space_named(&m.target));
    let f = load!(subject, Workspace::map_table(m, x.points(), y.points()));
    match is_continuous(&f, &x, &y) {
        Ok(true) => Ok(Report::ok(format!("map {}: {} -> {} is continuous", m.name, m.source, m.target))),
        Ok(false) => {
            let (v, u) = y
                .opens()
                .iter()
                .map(|&v| (v, (0..x.len()).filter(|&p| v >> f[p] & 1 == 1).fold(0u64, |acc, p| acc | 1 << p)))
                .find(|&(_, u)| !x.is_open(u))
                .expect("a discontinuous map has a bad preimage");
            Ok(Report::fail(
                subject,
                Finding::new(
                    "NotContinuous",
                    format!(
                        "map {}: preimage of open set {} is {}, which is not open in {}",
                        m.name,
                        y.render(v),
                        x.render(u),
                        m.source
                    ),
                    Some(format!("{} <- {}", y.render(v), x.render(u))),
                ),
            ))
        }
        Err(e) => Ok(Report::fail(subject.clone(), Finding::from_error(&subject, &e))),
    }
}

fn classify_report(ws: &Workspace, morphism: &str, category: Option<&str>) -> Res {
    let d = select(ws.category_decls(), category, "category", |d| &d.name)?;
    let subject = format!("morphism {morphism}");
    let c = load!(subject, ws.category(&d.name));
    let f = c.morphism(morphism).ok_or_else(|| {
        Failure::Parse(ParseError::new(
            ParseErrorKind::UnknownReference,
            &cli_ident(morphism).span,
            format!("unknown arrow `{morphism}` in {}", c.name()),
        ))
    })?;
    let k = classify_morphism(&c, f);
    let name = |m: Option<catkit_core::Mor>| m.map_or("none".to_string(), |m| c.morphism_name(m).to_string());
    Ok(Report::ok(format!(
        "morphism {morphism}: {} -> {} in {}: {}, {}; iso inverse: {}; left inverse: {}; right inverse: {}; regular: {}",
        c.object_name(c.dom(f)),
        c.object_name(c.cod(f)),
        c.name(),
        yes_no(k.mono, "mono", "not mono"),
        yes_no(k.epi, "epi", "not epi"),
        name(k.iso),
        name(k.left_inverse),
        name(k.right_inverse),
        name(k.regular)
    )))
}

fn dispatch(cli: &Cli) -> Res {
    match &cli.command {
        Command::Check { what } => match what {
            CheckKind::Category { files } => check_categories(&read_files(files)?),
            CheckKind::Functor { files } => check_functors(&read_files(files)?),
            CheckKind::Nat { files } => check_nats(&read_files(files)?),
            CheckKind::Group { files } => check_groups(&read_files(files)?),
            CheckKind::Space { files } => check_spaces(&read_files(files)?),
        },
        Command::Diagram { action: DiagramAction::Check(args) } => diagram_check(&read_files(&args.target.files)?, &args.target),
        Command::Limit(args) => limit(&read_files(&args.target.files)?, &args.target, false),
        Command::Colimit(args) => limit(&read_files(&args.target.files)?, &args.target, true),
        Command::Adjoint { action } => match action {
            AdjointAction::Verify { files, left, right, unit, counit, mode } => {
                adjoint_verify(&read_files(files)?, left, right, unit, counit, *mode)
            }
            AdjointAction::Find { files, functor, side } => adjoint_find(&read_files(files)?, functor, *side),
        },
        Command::End(args) => end_report(&read_files(&args.files)?, args, false),
        Command::Coend(args) => end_report(&read_files(&args.files)?, args, true),
        Command::Homology { target, dim } => homology_report(&read_files(&target.files)?, target, *dim),
        Command::Euler(sel) => euler_report(&read_files(&sel.files)?, sel),
        Command::Pi0(sel) => pi0_report(&read_files(&sel.files)?, sel),
        Command::Pi1 { target, base } => pi1_report(&read_files(&target.files)?, target, base.as_deref()),
        Command::Top { action: TopAction::Continuous(sel) } => continuity_report(&read_files(&sel.files)?, sel),
        Command::Classify { what: ClassifyKind::Morphism { file, morphism, category } } => {
            classify_report(&read_files(std::slice::from_ref(file))?, morphism, category.as_deref())
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match dispatch(&cli) {
        Ok(report) => Outcome {
            stdout: match cli.format {
                Format::Text => report.render_text(),
                Format::Json => report.render_json(),
            },
            stderr: String::new(),
            code: report.exit_code(),
        },
        Err(Failure::Parse(e)) => Outcome {
            stdout: String::new(),
            stderr: format!("{e}\n"),
            code: 2,
        },
        Err(Failure::Usage(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        },
    }
}
