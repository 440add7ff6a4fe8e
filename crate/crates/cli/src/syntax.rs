//! Line-oriented specification language: lexer, declarations and parser.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SourceSpan {
    pub file: String,
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.file, self.line, self.column)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParseErrorKind {
    UnexpectedToken,
    DuplicateName,
    UnknownReference,
    BadArity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub kind: ParseErrorKind,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, span: &SourceSpan, message: impl Into<String>) -> Self {
        ParseError {
            span: span.clone(),
            kind,
            message: message.into(),
            expected: Vec::new(),
        }
    }

    fn expecting(mut self, expected: &[&str]) -> Self {
        self.expected = expected.iter().map(|s| s.to_string()).collect();
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: error[{:?}]: {}", self.span, self.kind, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

/// A name with its source location. Equality ignores the location.
#[derive(Clone, Debug)]
pub struct Ident {
    pub name: String,
    pub span: SourceSpan,
}

impl PartialEq for Ident {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for Ident {}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: Ident,
    pub dom: Ident,
    pub cod: Ident,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryDecl {
    pub name: Ident,
    pub objects: Vec<Ident>,
    pub arrows: Vec<ArrowDecl>,
    /// `(g, f, h)` for `compose g f = h`.
    pub compositions: Vec<(Ident, Ident, Ident)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorDecl {
    pub name: Ident,
    pub source: Ident,
    pub target: Ident,
    pub contravariant: bool,
    pub objects: Vec<(Ident, Ident)>,
    pub arrows: Vec<(Ident, Ident)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDecl {
    pub src: Ident,
    pub dst: Ident,
    pub by: Ident,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramDecl {
    pub name: Ident,
    pub category: Ident,
    pub nodes: Vec<(Ident, Ident)>,
    pub edges: Vec<EdgeDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatDecl {
    pub name: Ident,
    pub source: Ident,
    pub target: Ident,
    pub components: Vec<(Ident, Ident)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDecl {
    pub name: Ident,
    pub simplices: Vec<Vec<Ident>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceDecl {
    pub name: Ident,
    pub points: Vec<Ident>,
    pub opens: Vec<Vec<Ident>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDecl {
    pub name: Ident,
    pub elements: Vec<Ident>,
    pub rows: Vec<Vec<Ident>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDecl {
    pub name: Ident,
    pub source: Ident,
    pub target: Ident,
    pub pairs: Vec<(Ident, Ident)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Category(CategoryDecl),
    Functor(FunctorDecl),
    Diagram(DiagramDecl),
    Nat(NatDecl),
    Complex(ComplexDecl),
    Space(SpaceDecl),
    Group(GroupDecl),
    Map(MapDecl),
}

impl Decl {
    pub fn name(&self) -> &Ident {
        match self {
            Decl::Category(d) => &d.name,
            Decl::Functor(d) => &d.name,
            Decl::Diagram(d) => &d.name,
            Decl::Nat(d) => &d.name,
            Decl::Complex(d) => &d.name,
            Decl::Space(d) => &d.name,
            Decl::Group(d) => &d.name,
            Decl::Map(d) => &d.name,
        }
    }

    pub fn keyword(&self) -> &'static str {
        match self {
            Decl::Category(_) => "category",
            Decl::Functor(_) => "functor",
            Decl::Diagram(_) => "diagram",
            Decl::Nat(_) => "nat",
            Decl::Complex(_) => "complex",
            Decl::Space(_) => "space",
            Decl::Group(_) => "group",
            Decl::Map(_) => "map",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub decls: Vec<Decl>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    LBrace,
    RBrace,
    Colon,
    Arrow,
    FatArrow,
    Equals,
    Semi,
    Dash,
    Newline,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Name(n) => format!("`{n}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::FatArrow => "`=>`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Dash => "`-`".into(),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of file".into(),
        }
    }
}

struct Token {
    tok: Tok,
    span: SourceSpan,
}

fn lex(file: &str, text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let span = |line, column, length| SourceSpan {
        file: file.to_string(),
        line,
        column,
        length,
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            '\n' => {
                out.push(Token { tok: Tok::Newline, span: span(line, col, 1) });
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            ' ' | '\t' | '\r' => {}
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                    col += 1;
                }
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                out.push(Token { tok: Tok::Name(name), span: span(line, col, i - start) });
                col += i - start;
                continue;
            }
            '-' | '=' if chars.get(i + 1) == Some(&'>') => {
                let tok = if c == '-' { Tok::Arrow } else { Tok::FatArrow };
                out.push(Token { tok, span: span(line, col, 2) });
                i += 2;
                col += 2;
                continue;
            }
            '{' | '}' | ':' | '=' | ';' | '-' => {
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    ':' => Tok::Colon,
                    '=' => Tok::Equals,
                    ';' => Tok::Semi,
                    _ => Tok::Dash,
                };
                out.push(Token { tok, span: span(line, col, 1) });
            }
            other => {
                return Err(ParseError::new(
                    ParseErrorKind::UnexpectedToken,
                    &span(line, col, 1),
                    format!("unexpected character `{other}`"),
                ))
            }
        }
        i += 1;
        col += 1;
    }
    out.push(Token { tok: Tok::Eof, span: span(line, col, 1) });
    Ok(out)
}

const KEYWORDS: [&str; 8] = ["category", "functor", "diagram", "nat", "complex", "space", "group", "map"];

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

fn unexpected(t: &Token, expected: &[&str]) -> ParseError {
    ParseError::new(
        ParseErrorKind::UnexpectedToken,
        &t.span,
        format!("unexpected {}", t.tok.describe()),
    )
    .expecting(expected)
}

fn duplicate(id: &Ident, what: &str) -> ParseError {
    ParseError::new(ParseErrorKind::DuplicateName, &id.span, format!("duplicate {what} `{}`", id.name))
}

fn unknown(id: &Ident, what: &str) -> ParseError {
    ParseError::new(ParseErrorKind::UnknownReference, &id.span, format!("unknown {what} `{}`", id.name))
}

fn check_fresh(seen: &[Ident], id: &Ident, what: &str) -> Result<(), ParseError> {
    if seen.contains(id) {
        return Err(duplicate(id, what));
    }
    Ok(())
}

fn check_known(known: &[Ident], id: &Ident, what: &str) -> Result<(), ParseError> {
    if !known.contains(id) {
        return Err(unknown(id, what));
    }
    Ok(())
}

fn check_unreserved(id: &Ident) -> Result<(), ParseError> {
    if id.name.starts_with("id_") {
        return Err(ParseError::new(
            ParseErrorKind::UnexpectedToken,
            &id.span,
            format!("`{}` is reserved for synthesized identities", id.name),
        )
        .expecting(&["a name not starting with `id_`"]));
    }
    Ok(())
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> &Token {
        let t = &self.tokens[self.pos];
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn at(&self, tok: &Tok) -> bool {
        &self.peek().tok == tok
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<SourceSpan, ParseError> {
        if self.at(&tok) {
            Ok(self.bump().span.clone())
        } else {
            Err(unexpected(self.peek(), &[expected]))
        }
    }

    fn name(&mut self, expected: &str) -> Result<Ident, ParseError> {
        match &self.peek().tok {
            Tok::Name(n) => {
                let id = Ident {
                    name: n.clone(),
                    span: self.peek().span.clone(),
                };
                self.bump();
                Ok(id)
            }
            _ => Err(unexpected(self.peek(), &[expected])),
        }
    }

    /// Names up to the end of the line (or another stop token).
    fn names(&mut self) -> Vec<Ident> {
        let mut out = Vec::new();
        while let Tok::Name(n) = &self.peek().tok {
            out.push(Ident {
                name: n.clone(),
                span: self.peek().span.clone(),
            });
            self.bump();
        }
        out
    }

    fn end_of_line(&mut self) -> Result<(), ParseError> {
        match self.peek().tok {
            Tok::Newline => {
                self.bump();
                Ok(())
            }
            Tok::Eof => Ok(()),
            _ => Err(unexpected(self.peek(), &["end of line"])),
        }
    }

    fn skip_newlines(&mut self) {
        while self.at(&Tok::Newline) {
            self.bump();
        }
    }

    /// `{` then directives until `}`; `directive` consumes one line.
    fn block(&mut self, mut directive: impl FnMut(&mut Self, Ident) -> Result<(), ParseError>, keys: &[&str]) -> Result<(), ParseError> {
        self.expect(Tok::LBrace, "`{`")?;
        self.end_of_line()?;
        loop {
            self.skip_newlines();
            match &self.peek().tok {
                Tok::RBrace => {
                    self.bump();
                    return self.end_of_line();
                }
                Tok::Name(n) if keys.contains(&n.as_str()) => {
                    let key = self.name("directive")?;
                    directive(self, key)?;
                    self.end_of_line()?;
                }
                _ => {
                    let mut expected: Vec<String> = keys.iter().map(|k| format!("`{k}`")).collect();
                    expected.push("`}`".into());
                    let refs: Vec<&str> = expected.iter().map(|s| s.as_str()).collect();
                    return Err(unexpected(self.peek(), &refs));
                }
            }
        }
    }

    fn document(&mut self) -> Result<Document, ParseError> {
        let mut decls: Vec<Decl> = Vec::new();
        loop {
            self.skip_newlines();
            if self.at(&Tok::Eof) {
                return Ok(Document { decls });
            }
            let quoted: Vec<String> = KEYWORDS.iter().map(|k| format!("`{k}`")).collect();
            let expected: Vec<&str> = quoted.iter().map(|s| s.as_str()).collect();
            let key = match &self.peek().tok {
                Tok::Name(n) if KEYWORDS.contains(&n.as_str()) => n.clone(),
                _ => return Err(unexpected(self.peek(), &expected)),
            };
            self.bump();
            let decl = match key.as_str() {
                "category" => Decl::Category(self.category()?),
                "functor" => Decl::Functor(self.functor()?),
                "diagram" => Decl::Diagram(self.diagram()?),
                "nat" => Decl::Nat(self.nat()?),
                "complex" => Decl::Complex(self.complex()?),
                "space" => Decl::Space(self.space()?),
                "group" => Decl::Group(self.group()?),
                _ => Decl::Map(self.map()?),
            };
            if decls.iter().any(|d| d.keyword() == decl.keyword() && d.name() == decl.name()) {
                return Err(duplicate(decl.name(), decl.keyword()));
            }
            decls.push(decl);
        }
    }

    fn category(&mut self) -> Result<CategoryDecl, ParseError> {
        let name = self.name("category name")?;
        let mut d = CategoryDecl {
            name,
            objects: Vec::new(),
            arrows: Vec::new(),
            compositions: Vec::new(),
        };
        self.block(
            |p, key| {
                match key.name.as_str() {
                    "objects" => {
                        let objs = p.names();
                        if objs.is_empty() {
                            return Err(unexpected(p.peek(), &["object name"]));
                        }
                        for o in objs {
                            check_unreserved(&o)?;
                            check_fresh(&d.objects, &o, "object")?;
                            d.objects.push(o);
                        }
                    }
                    "arrow" => {
                        let name = p.name("arrow name")?;
                        check_unreserved(&name)?;
                        if d.arrows.iter().any(|a| a.name == name) {
                            return Err(duplicate(&name, "arrow"));
                        }
                        p.expect(Tok::Colon, "`:`")?;
                        let dom = p.name("domain object")?;
                        check_known(&d.objects, &dom, "object")?;
                        p.expect(Tok::Arrow, "`->`")?;
                        let cod = p.name("codomain object")?;
                        check_known(&d.objects, &cod, "object")?;
                        d.arrows.push(ArrowDecl { name, dom, cod });
                    }
                    _ => {
                        let lhs = p.names();
                        if lhs.len() != 2 {
                            return Err(ParseError::new(
                                ParseErrorKind::BadArity,
                                &key.span,
                                format!("`compose` takes two arrows before `=`, found {}", lhs.len()),
                            ));
                        }
                        p.expect(Tok::Equals, "`=`")?;
                        let h = p.name("composite arrow")?;
                        let known: Vec<Ident> = d.arrows.iter().map(|a| a.name.clone()).collect();
                        check_known(&known, &lhs[0], "arrow")?;
                        check_known(&known, &lhs[1], "arrow")?;
                        // A composite may be an identity, as in a group.
                        let is_identity = h.name.strip_prefix("id_").is_some_and(|o| d.objects.iter().any(|x| x.name == o));
                        if !is_identity {
                            check_known(&known, &h, "arrow")?;
                        }
                        d.compositions.push((lhs[0].clone(), lhs[1].clone(), h));
                    }
                }
                Ok(())
            },
            &["objects", "arrow", "compose"],
        )?;
        Ok(d)
    }

    fn functor(&mut self) -> Result<FunctorDecl, ParseError> {
        let name = self.name("functor name")?;
        self.expect(Tok::Colon, "`:`")?;
        let source = self.name("source category")?;
        self.expect(Tok::Arrow, "`->`")?;
        let target = self.name("target category")?;
        let contravariant = match &self.peek().tok {
            Tok::Name(n) if n == "contravariant" => {
                self.bump();
                true
            }
            Tok::LBrace => false,
            _ => return Err(unexpected(self.peek(), &["`contravariant`", "`{`"])),
        };
        let mut d = FunctorDecl {
            name,
            source,
            target,
            contravariant,
            objects: Vec::new(),
            arrows: Vec::new(),
        };
        self.block(
            |p, key| {
                let from = p.name(if key.name == "object" { "source object" } else { "source arrow" })?;
                p.expect(Tok::FatArrow, "`=>`")?;
                let to = p.name(if key.name == "object" { "target object" } else { "target arrow" })?;
                let list = if key.name == "object" { &mut d.objects } else { &mut d.arrows };
                if list.iter().any(|(a, _)| a == &from) {
                    return Err(duplicate(&from, &format!("{} mapping for", key.name)));
                }
                list.push((from, to));
                Ok(())
            },
            &["object", "arrow"],
        )?;
        Ok(d)
    }

    fn diagram(&mut self) -> Result<DiagramDecl, ParseError> {
        let name = self.name("diagram name")?;
        match &self.peek().tok {
            Tok::Name(n) if n == "in" => {
                self.bump();
            }
            _ => return Err(unexpected(self.peek(), &["`in`"])),
        }
        let category = self.name("category name")?;
        let mut d = DiagramDecl {
            name,
            category,
            nodes: Vec::new(),
            edges: Vec::new(),
        };
        self.block(
            |p, key| {
                if key.name == "node" {
                    let n = p.name("node name")?;
                    if d.nodes.iter().any(|(m, _)| m == &n) {
                        return Err(duplicate(&n, "node"));
                    }
                    p.expect(Tok::Equals, "`=`")?;
                    let obj = p.name("object")?;
                    d.nodes.push((n, obj));
                } else {
                    let known: Vec<Ident> = d.nodes.iter().map(|(n, _)| n.clone()).collect();
                    let src = p.name("source node")?;
                    check_known(&known, &src, "node")?;
                    p.expect(Tok::Arrow, "`->`")?;
                    let dst = p.name("target node")?;
                    check_known(&known, &dst, "node")?;
                    match &p.peek().tok {
                        Tok::Name(n) if n == "by" => {
                            p.bump();
                        }
                        _ => return Err(unexpected(p.peek(), &["`by`"])),
                    }
                    let by = p.name("morphism")?;
                    d.edges.push(EdgeDecl { src, dst, by });
                }
                Ok(())
            },
            &["node", "edge"],
        )?;
        Ok(d)
    }

    fn nat(&mut self) -> Result<NatDecl, ParseError> {
        let name = self.name("transformation name")?;
        self.expect(Tok::Colon, "`:`")?;
        let source = self.name("source functor")?;
        self.expect(Tok::FatArrow, "`=>`")?;
        let target = self.name("target functor")?;
        let mut d = NatDecl {
            name,
            source,
            target,
            components: Vec::new(),
        };
        self.block(
            |p, _| {
                let obj = p.name("object")?;
                if d.components.iter().any(|(o, _)| o == &obj) {
                    return Err(duplicate(&obj, "component at"));
                }
                p.expect(Tok::Equals, "`=`")?;
                let mor = p.name("morphism")?;
                d.components.push((obj, mor));
                Ok(())
            },
            &["component"],
        )?;
        Ok(d)
    }

    fn complex(&mut self) -> Result<ComplexDecl, ParseError> {
        let name = self.name("complex name")?;
        let mut d = ComplexDecl {
            name,
            simplices: Vec::new(),
        };
        self.block(
            |p, key| {
                let vs = p.names();
                if vs.is_empty() {
                    return Err(ParseError::new(ParseErrorKind::BadArity, &key.span, "a simplex needs at least one vertex"));
                }
                for (i, v) in vs.iter().enumerate() {
                    check_fresh(&vs[..i], v, "vertex in simplex")?;
                }
                d.simplices.push(vs);
                Ok(())
            },
            &["simplex"],
        )?;
        Ok(d)
    }

    fn space(&mut self) -> Result<SpaceDecl, ParseError> {
        let name = self.name("space name")?;
        let mut d = SpaceDecl {
            name,
            points: Vec::new(),
            opens: Vec::new(),
        };
        self.block(
            |p, key| {
                if key.name == "points" {
                    for q in p.names() {
                        check_fresh(&d.points, &q, "point")?;
                        d.points.push(q);
                    }
                } else if p.at(&Tok::Dash) {
                    p.bump();
                    d.opens.push(Vec::new());
                } else {
                    let set = p.names();
                    if set.is_empty() {
                        return Err(unexpected(p.peek(), &["point name", "`-`"]));
                    }
                    for (i, q) in set.iter().enumerate() {
                        check_known(&d.points, q, "point")?;
                        check_fresh(&set[..i], q, "point in open set")?;
                    }
                    d.opens.push(set);
                }
                Ok(())
            },
            &["points", "open"],
        )?;
        Ok(d)
    }

    fn group(&mut self) -> Result<GroupDecl, ParseError> {
        let name = self.name("group name")?;
        let mut d = GroupDecl {
            name,
            elements: Vec::new(),
            rows: Vec::new(),
        };
        let mut last_row = None;
        self.block(
            |p, key| {
                if key.name == "elements" {
                    if !d.rows.is_empty() {
                        return Err(ParseError::new(
                            ParseErrorKind::UnexpectedToken,
                            &key.span,
                            "`elements` must precede the table",
                        )
                        .expecting(&["`table`", "`}`"]));
                    }
                    for e in p.names() {
                        check_fresh(&d.elements, &e, "element")?;
                        d.elements.push(e);
                    }
                    return Ok(());
                }
                if d.elements.is_empty() {
                    return Err(ParseError::new(
                        ParseErrorKind::UnexpectedToken,
                        &key.span,
                        "`table` needs the elements declared first",
                    )
                    .expecting(&["`elements`"]));
                }
                loop {
                    let row = p.names();
                    let at = row.first().map(|r| r.span.clone()).unwrap_or_else(|| p.peek().span.clone());
                    if row.len() != d.elements.len() {
                        return Err(ParseError::new(
                            ParseErrorKind::BadArity,
                            &at,
                            format!("table row has {} entries, expected {}", row.len(), d.elements.len()),
                        ));
                    }
                    for e in &row {
                        check_known(&d.elements, e, "element")?;
                    }
                    d.rows.push(row);
                    last_row = Some(at);
                    if !p.at(&Tok::Semi) {
                        return Ok(());
                    }
                    p.bump();
                }
            },
            &["elements", "table"],
        )?;
        if d.rows.len() != d.elements.len() {
            let at = last_row.unwrap_or_else(|| d.name.span.clone());
            return Err(ParseError::new(
                ParseErrorKind::BadArity,
                &at,
                format!("table has {} rows, expected {}", d.rows.len(), d.elements.len()),
            ));
        }
        Ok(d)
    }

    fn map(&mut self) -> Result<MapDecl, ParseError> {
        let name = self.name("map name")?;
        self.expect(Tok::Colon, "`:`")?;
        let source = self.name("source")?;
        self.expect(Tok::Arrow, "`->`")?;
        let target = self.name("target")?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut pairs: Vec<(Ident, Ident)> = Vec::new();
        loop {
            self.skip_newlines();
            if self.at(&Tok::RBrace) {
                self.bump();
                break;
            }
            let from = self.name("point or `}`")?;
            if pairs.iter().any(|(p, _)| p == &from) {
                return Err(duplicate(&from, "image of"));
            }
            self.skip_newlines();
            self.expect(Tok::FatArrow, "`=>`")?;
            self.skip_newlines();
            let to = self.name("image point")?;
            pairs.push((from, to));
        }
        self.end_of_line()?;
        Ok(MapDecl {
            name,
            source,
            target,
            pairs,
        })
    }
}

/// Parses a whole file. The first error is reported with its span.
pub fn parse(file: &str, text: &str) -> Result<Document, ParseError> {
    let tokens = lex(file, text)?;
    Parser { tokens, pos: 0 }.document()
}

#[cfg(test)]
mod tests {
    use super::*;

    const PATH: &str = "category Path {\n  objects A B C\n  arrow f : A -> B\n  arrow g : B -> C\n  arrow h : A -> C\n  compose g f = h\n}\n";

    #[test]
    fn path_category() {
        let doc = parse("path.cat", PATH).unwrap();
        let Decl::Category(c) = &doc.decls[0] else { panic!() };
        assert_eq!((c.objects.len(), c.arrows.len(), c.compositions.len()), (3, 3, 1));
    }

    #[test]
    fn missing_codomain() {
        let e = parse("x.cat", "category X {\n  objects A\n  arrow f : A ->\n}\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedToken);
        assert_eq!((e.span.line, e.span.column), (3, 17));
        assert_eq!(e.expected, vec!["codomain object"]);
    }

    #[test]
    fn unknown_composite() {
        let text = "category X {\n  objects A B C\n  arrow f : A -> B\n  arrow g : B -> C\n  compose g f = h\n}\n";
        let e = parse("x.cat", text).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownReference);
        assert_eq!((e.span.line, e.span.column, e.span.length), (5, 17, 1));
    }

    #[test]
    fn crlf_and_comments() {
        let text = PATH.replace('\n', " # note\r\n");
        assert_eq!(parse("a", &text).unwrap(), parse("b", PATH).unwrap());
    }

    #[test]
    fn errors_by_kind() {
        let dup = parse("x", "category X {\n  objects A A\n}\n").unwrap_err();
        assert_eq!(dup.kind, ParseErrorKind::DuplicateName);
        let arity = parse("x", "group G {\n  elements e a\n  table e a ; a\n}\n").unwrap_err();
        assert_eq!(arity.kind, ParseErrorKind::BadArity);
        let reserved = parse("x", "category X {\n  objects A\n  arrow id_A : A -> A\n}\n").unwrap_err();
        assert_eq!(reserved.kind, ParseErrorKind::UnexpectedToken);
        let compose = parse("x", "category X {\n  objects A\n  arrow f : A -> A\n  compose f = f\n}\n").unwrap_err();
        assert_eq!(compose.kind, ParseErrorKind::BadArity);
        let early = parse("x", "group G {\n  table e\n  elements e\n}\n").unwrap_err();
        assert_eq!((early.kind, early.span.line, early.expected.clone()), (ParseErrorKind::UnexpectedToken, 2, vec!["`elements`".to_string()]));
    }

    #[test]
    fn other_blocks() {
        let text = "space S {\n  points p q\n  open -\n  open p\n  open p q\n}\nmap f : S -> S { p => p q => p }\ngroup Z2 {\n  elements e a\n  table e a ; a e\n}\ncomplex K {\n  simplex a b c\n}\n";
        let doc = parse("x", text).unwrap();
        assert_eq!(doc.decls.len(), 4);
        let Decl::Space(s) = &doc.decls[0] else { panic!() };
        assert_eq!(s.opens[0], vec![]);
    }
}
