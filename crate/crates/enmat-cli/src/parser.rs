//! Line-oriented document parser.
//!
//! A document declares one base and then named object sets, functions,
//! matrices, graphs, categories and cocategories:
//!
//! ```text
//! base = tropical
//! objset X { a b c }
//! function f : X -> X { a -> b, b -> c, c -> c }
//! matrix M : X -> X { a b : 3 }       # unlisted entries default to bottom
//! graph G : X { a b : 3  b c : 4 }
//! category A : X { ... }
//! cocategory C : X { ... }
//! ```
//!
//! `#` starts a comment. Object names may carry balanced `(...)` and `⟨...⟩`
//! groups (the shapes produced by product and exponent object sets), so
//! rendered output parses back.

use std::fmt;

use enmat::{Base, BaseKind, Elem, Graph, Matrix, ObjFun, ObjSet, Trop};

/// Parse-stage failure with its position.
#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.msg)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    LBrace,
    RBrace,
    Colon,
    Comma,
    Equals,
    Arrow,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Equals => write!(f, "`=`"),
            Tok::Arrow => write!(f, "`->`"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0usize;

    let is_special = |c: char| "{}:,=#".contains(c);

    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col);
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                advance(&mut i, &mut line, &mut col);
            }
            continue;
        }
        if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Token { tok: Tok::Arrow, line: tline, col: tcol });
            advance(&mut i, &mut line, &mut col);
            advance(&mut i, &mut line, &mut col);
            continue;
        }
        match c {
            '{' => {
                out.push(Token { tok: Tok::LBrace, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
                continue;
            }
            '}' => {
                out.push(Token { tok: Tok::RBrace, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
                continue;
            }
            ':' => {
                out.push(Token { tok: Tok::Colon, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
                continue;
            }
            ',' => {
                out.push(Token { tok: Tok::Comma, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
                continue;
            }
            '=' => {
                out.push(Token { tok: Tok::Equals, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
                continue;
            }
            _ => {}
        }
        // Identifier: a run of non-special characters; balanced (...) and
        // ⟨...⟩ groups are swallowed whole, commas and all.
        let mut name = String::new();
        while i < chars.len() {
            let c = chars[i];
            if c == '(' || c == '⟨' {
                let (open, close) = if c == '(' { ('(', ')') } else { ('⟨', '⟩') };
                let mut depth = 0usize;
                loop {
                    if i >= chars.len() {
                        return Err(ParseError {
                            line: tline,
                            col: tcol,
                            msg: format!("unbalanced `{open}` in name"),
                        });
                    }
                    let d = chars[i];
                    name.push(d);
                    if d == open {
                        depth += 1;
                    } else if d == close {
                        depth -= 1;
                    }
                    advance(&mut i, &mut line, &mut col);
                    if depth == 0 {
                        break;
                    }
                }
                continue;
            }
            if c.is_whitespace() || is_special(c) || c == ')' || c == '⟩' {
                break;
            }
            if c == '-' && chars.get(i + 1) == Some(&'>') {
                break;
            }
            name.push(c);
            advance(&mut i, &mut line, &mut col);
        }
        if name.is_empty() {
            return Err(ParseError {
                line: tline,
                col: tcol,
                msg: format!("unexpected character `{c}`"),
            });
        }
        out.push(Token { tok: Tok::Ident(name), line: tline, col: tcol });
    }
    Ok(out)
}

/// One named declaration.
#[derive(Debug, Clone)]
pub enum Item {
    Objects(ObjSet),
    Function(ObjFun),
    MatrixItem(Matrix),
    GraphItem(Graph),
    CategoryItem(Graph),
    CocategoryItem(Graph),
}

impl Item {
    pub fn keyword(&self) -> &'static str {
        match self {
            Item::Objects(_) => "objset",
            Item::Function(_) => "function",
            Item::MatrixItem(_) => "matrix",
            Item::GraphItem(_) => "graph",
            Item::CategoryItem(_) => "category",
            Item::CocategoryItem(_) => "cocategory",
        }
    }
}

/// A parsed document: one base, declarations in source order.
#[derive(Debug, Clone)]
pub struct Document {
    pub base: Base,
    pub items: Vec<(String, Item)>,
}

impl Document {
    pub fn get(&self, name: &str) -> Option<&Item> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn objset_name(&self, set: &ObjSet) -> Option<&str> {
        self.items.iter().find_map(|(n, i)| match i {
            Item::Objects(s) if s == set => Some(n.as_str()),
            _ => None,
        })
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err_here(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self
            .tokens
            .get(self.pos.min(self.tokens.len().saturating_sub(1)))
            .map(|t| (t.line, t.col))
            .unwrap_or((1, 1));
        ParseError { line, col, msg: msg.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn next(&mut self) -> Result<&Token, ParseError> {
        let t = self.tokens.get(self.pos).ok_or_else(|| ParseError {
            line: self.tokens.last().map(|t| t.line).unwrap_or(1),
            col: self.tokens.last().map(|t| t.col).unwrap_or(1),
            msg: "unexpected end of input".into(),
        })?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        let got = self.next()?;
        if got.tok == want {
            Ok(())
        } else {
            Err(ParseError {
                line: got.line,
                col: got.col,
                msg: format!("expected {want}, found {}", got.tok),
            })
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize), ParseError> {
        let t = self.next()?;
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.line, t.col)),
            other => Err(ParseError {
                line: t.line,
                col: t.col,
                msg: format!("expected a name, found {other}"),
            }),
        }
    }

    fn skip_commas(&mut self) {
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
        }
    }
}

fn parse_literal(p: &mut Parser<'_>, base: &Base) -> Result<Elem, ParseError> {
    // pz2 set literals arrive as token runs `{ 0 , 1 }`.
    if base.kind() == BaseKind::PowersetZ2 {
        let t = p.next()?;
        if t.tok != Tok::LBrace {
            return Err(ParseError {
                line: t.line,
                col: t.col,
                msg: format!("expected a set literal like {{0,1}}, found {}", t.tok),
            });
        }
        let mut mask = 0u8;
        loop {
            let t = p.next()?;
            match &t.tok {
                Tok::RBrace => break,
                Tok::Comma => continue,
                Tok::Ident(s) if s == "0" => mask |= 0b01,
                Tok::Ident(s) if s == "1" => mask |= 0b10,
                other => {
                    return Err(ParseError {
                        line: t.line,
                        col: t.col,
                        msg: format!("expected 0 or 1 inside a set literal, found {other}"),
                    })
                }
            }
        }
        return Ok(Elem::Mask(mask));
    }
    let (word, line, col) = p.ident()?;
    let bad = |msg: String| ParseError { line, col, msg };
    match base.kind() {
        BaseKind::Boolean => match word.as_str() {
            "0" => Ok(Elem::Bool(false)),
            "1" => Ok(Elem::Bool(true)),
            _ => Err(bad(format!("boolean entries are 0 or 1, found `{word}`"))),
        },
        BaseKind::Tropical => {
            if word == "inf" {
                Ok(Elem::Trop(Trop::Inf))
            } else {
                word.parse::<i64>()
                    .map(|n| Elem::Trop(Trop::Fin(n)))
                    .map_err(|_| bad(format!("tropical entries are integers or inf, found `{word}`")))
            }
        }
        BaseKind::Nat => word
            .parse::<u64>()
            .map(Elem::Nat)
            .map_err(|_| bad(format!("nat entries are nonnegative integers, found `{word}`"))),
        BaseKind::Chain(n) | BaseKind::Lukasiewicz(n) => {
            let v = word
                .parse::<u8>()
                .map_err(|_| bad(format!("chain entries are levels 0..{}, found `{word}`", n - 1)))?;
            if v >= n {
                return Err(bad(format!("level {v} out of range 0..{}", n - 1)));
            }
            Ok(Elem::Level(v))
        }
        BaseKind::PowersetZ2 => unreachable!("handled above"),
    }
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens: &tokens, pos: 0 };

    // The base comes first; entry literals cannot be read without it.
    let (kw, line, col) = p.ident()?;
    if kw != "base" {
        return Err(ParseError { line, col, msg: "a document starts with `base = <name>`".into() });
    }
    p.expect(Tok::Equals)?;
    let (base_name, bline, bcol) = p.ident()?;
    let base = Base::from_name(&base_name)
        .map_err(|_| ParseError { line: bline, col: bcol, msg: format!("unknown base: {base_name}") })?;

    let mut doc = Document { base, items: Vec::new() };

    let resolve_objset = |doc: &Document, name: &str, line: usize, col: usize| -> Result<ObjSet, ParseError> {
        match doc.get(name) {
            Some(Item::Objects(s)) => Ok(s.clone()),
            Some(other) => Err(ParseError {
                line,
                col,
                msg: format!("{name} is a {}, not an objset", other.keyword()),
            }),
            None => Err(ParseError { line, col, msg: format!("unresolved reference: {name}") }),
        }
    };

    while p.peek().is_some() {
        let (kw, kline, kcol) = p.ident()?;
        let (name, nline, ncol) = p.ident()?;
        if doc.get(&name).is_some() {
            return Err(ParseError {
                line: nline,
                col: ncol,
                msg: format!("duplicate declaration: {name}"),
            });
        }
        match kw.as_str() {
            "objset" => {
                p.expect(Tok::LBrace)?;
                let mut names = Vec::new();
                loop {
                    match p.peek() {
                        Some(Tok::RBrace) => {
                            p.pos += 1;
                            break;
                        }
                        Some(Tok::Ident(_)) => names.push(p.ident()?.0),
                        _ => return Err(p.err_here("expected an object name or `}`")),
                    }
                }
                let set = ObjSet::new(names).map_err(|e| ParseError {
                    line: nline,
                    col: ncol,
                    msg: e.to_string(),
                })?;
                doc.items.push((name, Item::Objects(set)));
            }
            "function" => {
                p.expect(Tok::Colon)?;
                let (xn, xl, xc) = p.ident()?;
                p.expect(Tok::Arrow)?;
                let (yn, yl, yc) = p.ident()?;
                let src = resolve_objset(&doc, &xn, xl, xc)?;
                let dst = resolve_objset(&doc, &yn, yl, yc)?;
                p.expect(Tok::LBrace)?;
                let mut images: Vec<Option<usize>> = vec![None; src.len()];
                loop {
                    p.skip_commas();
                    if p.peek() == Some(&Tok::RBrace) {
                        p.pos += 1;
                        break;
                    }
                    let (a, al, ac) = p.ident()?;
                    p.expect(Tok::Arrow)?;
                    let (b, bl, bc) = p.ident()?;
                    let i = src.position(&a).ok_or(ParseError {
                        line: al,
                        col: ac,
                        msg: format!("unresolved reference: {a} is not in {xn}"),
                    })?;
                    let j = dst.position(&b).ok_or(ParseError {
                        line: bl,
                        col: bc,
                        msg: format!("unresolved reference: {b} is not in {yn}"),
                    })?;
                    images[i] = Some(j);
                }
                let total: Option<Vec<usize>> = images.into_iter().collect();
                let images = total.ok_or(ParseError {
                    line: nline,
                    col: ncol,
                    msg: format!("function {name} is not total on {xn}"),
                })?;
                let f = ObjFun::new(src, dst, images).map_err(|e| ParseError {
                    line: nline,
                    col: ncol,
                    msg: e.to_string(),
                })?;
                doc.items.push((name, Item::Function(f)));
            }
            "matrix" | "graph" | "category" | "cocategory" => {
                p.expect(Tok::Colon)?;
                let (xn, xl, xc) = p.ident()?;
                let src = resolve_objset(&doc, &xn, xl, xc)?;
                let dst = if kw == "matrix" {
                    p.expect(Tok::Arrow)?;
                    let (yn, yl, yc) = p.ident()?;
                    resolve_objset(&doc, &yn, yl, yc)?
                } else {
                    src.clone()
                };
                p.expect(Tok::LBrace)?;
                let mut m = Matrix::bottom(src.clone(), dst.clone(), base);
                loop {
                    p.skip_commas();
                    if p.peek() == Some(&Tok::RBrace) {
                        p.pos += 1;
                        break;
                    }
                    let (a, al, ac) = p.ident()?;
                    let (b, bl, bc) = p.ident()?;
                    p.expect(Tok::Colon)?;
                    let value = parse_literal(&mut p, &base)?;
                    let i = src.position(&a).ok_or(ParseError {
                        line: al,
                        col: ac,
                        msg: format!("unresolved reference: {a} is not in the row set"),
                    })?;
                    let j = dst.position(&b).ok_or(ParseError {
                        line: bl,
                        col: bc,
                        msg: format!("unresolved reference: {b} is not in the column set"),
                    })?;
                    m.set(i, j, value);
                }
                let item = match kw.as_str() {
                    "matrix" => Item::MatrixItem(m),
                    _ => {
                        let g = Graph::new(m).map_err(|e| ParseError {
                            line: nline,
                            col: ncol,
                            msg: e.to_string(),
                        })?;
                        match kw.as_str() {
                            "graph" => Item::GraphItem(g),
                            "category" => Item::CategoryItem(g),
                            _ => Item::CocategoryItem(g),
                        }
                    }
                };
                doc.items.push((name, item));
            }
            _ => {
                return Err(ParseError {
                    line: kline,
                    col: kcol,
                    msg: format!("unknown declaration keyword: {kw}"),
                })
            }
        }
    }
    Ok(doc)
}
