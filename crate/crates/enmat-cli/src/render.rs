//! Canonical renderer: output parses back through `parse_document` and
//! renders identically (byte-for-byte round trip). Entries appear in
//! row-major declared order and bottom entries are omitted.

use enmat::{Base, Matrix, ObjFun, ObjSet};

use crate::parser::{Document, Item};

pub fn render_objset(name: &str, set: &ObjSet) -> String {
    let names: Vec<&str> = set.names().collect();
    format!("objset {name} {{ {} }}\n", names.join(" "))
}

pub fn render_function(name: &str, f: &ObjFun, src_name: &str, dst_name: &str) -> String {
    let pairs: Vec<String> = (0..f.src().len())
        .map(|i| format!("{} -> {}", f.src().name(i), f.dst().name(f.apply(i))))
        .collect();
    format!("function {name} : {src_name} -> {dst_name} {{ {} }}\n", pairs.join(", "))
}

fn render_entries(m: &Matrix) -> String {
    let mut out = String::new();
    let bottom = m.base().bottom();
    for i in 0..m.src().len() {
        for j in 0..m.dst().len() {
            let e = m.get(i, j);
            if e != bottom {
                out.push_str(&format!("  {} {} : {e}\n", m.src().name(i), m.dst().name(j)));
            }
        }
    }
    out
}

pub fn render_matrix(name: &str, m: &Matrix, src_name: &str, dst_name: &str) -> String {
    format!("matrix {name} : {src_name} -> {dst_name} {{\n{}}}\n", render_entries(m))
}

pub fn render_square(keyword: &str, name: &str, m: &Matrix, objset_name: &str) -> String {
    format!("{keyword} {name} : {objset_name} {{\n{}}}\n", render_entries(m))
}

pub fn render_base(base: &Base) -> String {
    format!("base = {}\n", base.name())
}

/// Renders a whole document in declaration order.
pub fn render_document(doc: &Document) -> String {
    let mut out = render_base(&doc.base);
    let set_name = |set: &ObjSet| -> String {
        doc.objset_name(set).expect("document declarations reference declared objsets").to_string()
    };
    for (name, item) in &doc.items {
        match item {
            Item::Objects(s) => out.push_str(&render_objset(name, s)),
            Item::Function(f) => {
                out.push_str(&render_function(name, f, &set_name(f.src()), &set_name(f.dst())))
            }
            Item::MatrixItem(m) => {
                out.push_str(&render_matrix(name, m, &set_name(m.src()), &set_name(m.dst())))
            }
            Item::GraphItem(g) => {
                out.push_str(&render_square("graph", name, g.mat(), &set_name(g.objects())))
            }
            Item::CategoryItem(g) => {
                out.push_str(&render_square("category", name, g.mat(), &set_name(g.objects())))
            }
            Item::CocategoryItem(g) => {
                out.push_str(&render_square("cocategory", name, g.mat(), &set_name(g.objects())))
            }
        }
    }
    out
}

/// Assigns names to result object sets: reuses a declared name when the
/// content matches, otherwise synthesizes `_S0`, `_S1`, ... deterministically.
/// Every named set is recorded so the output document can declare them all
/// and stay self-contained.
pub struct ObjSetNamer<'a> {
    doc: Option<&'a Document>,
    used: Vec<(ObjSet, String)>,
    synthesized: usize,
}

impl<'a> ObjSetNamer<'a> {
    pub fn new(doc: Option<&'a Document>) -> Self {
        ObjSetNamer { doc, used: Vec::new(), synthesized: 0 }
    }

    pub fn name(&mut self, set: &ObjSet) -> String {
        if let Some((_, n)) = self.used.iter().find(|(s, _)| s == set) {
            return n.clone();
        }
        let name = match self.doc.and_then(|d| d.objset_name(set)) {
            Some(n) => n.to_string(),
            None => loop {
                let n = format!("_S{}", self.synthesized);
                self.synthesized += 1;
                // A document may itself declare a _Sk name; skip those.
                if self.doc.is_none_or(|d| d.get(&n).is_none()) {
                    break n;
                }
            },
        };
        self.used.push((set.clone(), name.clone()));
        name
    }

    /// Declarations for every named set, in first-use order.
    pub fn declarations(&self) -> String {
        self.used.iter().map(|(s, n)| render_objset(n, s)).collect()
    }
}
