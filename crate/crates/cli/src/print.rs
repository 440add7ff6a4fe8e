//! Canonical text for parsed declarations; `parse(print(d)) == d`.

use std::fmt::Write;

use crate::syntax::{Decl, Document, Ident};

fn join(ids: &[Ident]) -> String {
    ids.iter().map(|i| i.name.as_str()).collect::<Vec<_>>().join(" ")
}

pub fn print_decl(d: &Decl) -> String {
    let mut s = String::new();
    match d {
        Decl::Category(c) => {
            writeln!(s, "category {} {{", c.name).unwrap();
            if !c.objects.is_empty() {
                writeln!(s, "  objects {}", join(&c.objects)).unwrap();
            }
            for a in &c.arrows {
                writeln!(s, "  arrow {} : {} -> {}", a.name, a.dom, a.cod).unwrap();
            }
            for (g, f, h) in &c.compositions {
                writeln!(s, "  compose {g} {f} = {h}").unwrap();
            }
        }
        Decl::Functor(f) => {
            let variance = if f.contravariant { " contravariant" } else { "" };
            writeln!(s, "functor {} : {} -> {}{variance} {{", f.name, f.source, f.target).unwrap();
            for (a, x) in &f.objects {
                writeln!(s, "  object {a} => {x}").unwrap();
            }
            for (a, x) in &f.arrows {
                writeln!(s, "  arrow {a} => {x}").unwrap();
            }
        }
        Decl::Diagram(d) => {
            writeln!(s, "diagram {} in {} {{", d.name, d.category).unwrap();
            for (n, o) in &d.nodes {
                writeln!(s, "  node {n} = {o}").unwrap();
            }
            for e in &d.edges {
                writeln!(s, "  edge {} -> {} by {}", e.src, e.dst, e.by).unwrap();
            }
        }
        Decl::Nat(t) => {
            writeln!(s, "nat {} : {} => {} {{", t.name, t.source, t.target).unwrap();
            for (o, m) in &t.components {
                writeln!(s, "  component {o} = {m}").unwrap();
            }
        }
        Decl::Complex(k) => {
            writeln!(s, "complex {} {{", k.name).unwrap();
            for simplex in &k.simplices {
                writeln!(s, "  simplex {}", join(simplex)).unwrap();
            }
        }
        Decl::Space(x) => {
            writeln!(s, "space {} {{", x.name).unwrap();
            if !x.points.is_empty() {
                writeln!(s, "  points {}", join(&x.points)).unwrap();
            }
            for o in &x.opens {
                let body = if o.is_empty() { "-".to_string() } else { join(o) };
                writeln!(s, "  open {body}").unwrap();
            }
        }
        Decl::Group(g) => {
            writeln!(s, "group {} {{", g.name).unwrap();
            if !g.elements.is_empty() {
                writeln!(s, "  elements {}", join(&g.elements)).unwrap();
            }
            if !g.rows.is_empty() {
                let rows: Vec<String> = g.rows.iter().map(|r| join(r)).collect();
                writeln!(s, "  table {}", rows.join(" ; ")).unwrap();
            }
        }
        Decl::Map(m) => {
            let pairs: Vec<String> = m.pairs.iter().map(|(p, q)| format!("{p} => {q}")).collect();
            let body = if pairs.is_empty() { String::new() } else { format!(" {} ", pairs.join(" ")) };
            writeln!(s, "map {} : {} -> {} {{{body}}}", m.name, m.source, m.target).unwrap();
            return s;
        }
    }
    s.push_str("}\n");
    s
}

pub fn print_document(doc: &Document) -> String {
    doc.decls.iter().map(print_decl).collect::<Vec<_>>().join("\n")
}
