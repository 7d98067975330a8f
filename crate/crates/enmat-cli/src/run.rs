//! Command dispatch: resolves names against the parsed document, runs the
//! library operation, and renders the result as a self-contained document
//! (or a plain-text report for the checking verbs).
//!
//! Exit codes: 0 success, 1 law violation found by `check`/`validate`,
//! 2 parse error, 3 domain error, 4 non-convergence, 5 budget or cap
//! exceeded.

use std::fmt::Write as _;

use enmat::{
    check_category, check_cocategory, cofree_cocategory, convolution, enrichment_report,
    free_category_capped, hom_graph, internal_hom, pullback_category, pushforward,
    pushforward_cocategory, restrict, sweedler_hom, tensor, tensor_category, tensor_cocategory,
    tensor_graph, validate_base, Category, Cocategory, Error, Graph, Matrix, ObjFun,
};

use crate::parser::{Document, Item};
use crate::render::{render_base, render_matrix, render_square, ObjSetNamer};

pub const EXIT_OK: u8 = 0;
pub const EXIT_LAW_VIOLATION: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;
pub const EXIT_NON_CONVERGENT: u8 = 4;
pub const EXIT_BUDGET: u8 = 5;

pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NonConvergent { .. } => EXIT_NON_CONVERGENT,
        Error::ExponentCapExceeded { .. } | Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_DOMAIN,
    }
}

/// A command to run against a document.
#[derive(Debug, Clone)]
pub struct CommandSpec {
    pub verb: String,
    pub args: Vec<String>,
    pub cap: usize,
    pub max_iter: Option<usize>,
    pub seed: u64,
}

pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

fn ok(stdout: String) -> Result<Outcome, Error> {
    Ok(Outcome { stdout, code: EXIT_OK })
}

fn usage(msg: &str) -> Error {
    Error::MalformedShape(msg.to_string())
}

fn lookup<'d>(doc: &'d Document, name: &str) -> Result<&'d Item, Error> {
    doc.get(name)
        .ok_or_else(|| usage(&format!("no declaration named {name}")))
}

fn as_matrix(doc: &Document, name: &str) -> Result<Matrix, Error> {
    match lookup(doc, name)? {
        Item::MatrixItem(m) => Ok(m.clone()),
        Item::GraphItem(g) | Item::CategoryItem(g) | Item::CocategoryItem(g) => {
            Ok(g.mat().clone())
        }
        other => Err(usage(&format!("{name} is a {}, not matrix-like", other.keyword()))),
    }
}

fn as_graph(doc: &Document, name: &str) -> Result<Graph, Error> {
    match lookup(doc, name)? {
        Item::GraphItem(g) | Item::CategoryItem(g) | Item::CocategoryItem(g) => Ok(g.clone()),
        Item::MatrixItem(m) => Graph::new(m.clone()),
        other => Err(usage(&format!("{name} is a {}, not graph-like", other.keyword()))),
    }
}

fn as_category(doc: &Document, name: &str) -> Result<Category, Error> {
    Category::new(as_graph(doc, name)?)
}

fn as_cocategory(doc: &Document, name: &str) -> Result<Cocategory, Error> {
    Cocategory::new(as_graph(doc, name)?)
}

fn as_function(doc: &Document, name: &str) -> Result<ObjFun, Error> {
    match lookup(doc, name)? {
        Item::Function(f) => Ok(f.clone()),
        other => Err(usage(&format!("{name} is a {}, not a function", other.keyword()))),
    }
}

fn header(cmd: &CommandSpec) -> String {
    if cmd.args.is_empty() {
        format!("# {}\n", cmd.verb)
    } else {
        format!("# {} {}\n", cmd.verb, cmd.args.join(" "))
    }
}

fn emit_matrix(doc: &Document, cmd: &CommandSpec, m: &Matrix) -> String {
    let mut namer = ObjSetNamer::new(Some(doc));
    let (sn, dn) = (namer.name(m.src()), namer.name(m.dst()));
    format!(
        "{}{}{}{}",
        header(cmd),
        render_base(&m.base()),
        namer.declarations(),
        render_matrix("result", m, &sn, &dn)
    )
}

fn emit_square(doc: &Document, cmd: &CommandSpec, keyword: &str, g: &Graph) -> String {
    let mut namer = ObjSetNamer::new(Some(doc));
    let on = namer.name(g.objects());
    format!(
        "{}{}{}{}",
        header(cmd),
        render_base(&g.base()),
        namer.declarations(),
        render_square(keyword, "result", g.mat(), &on)
    )
}

fn kind_of(doc: &Document, name: &str) -> Result<&'static str, Error> {
    Ok(lookup(doc, name)?.keyword())
}

fn need_args(cmd: &CommandSpec, n: usize) -> Result<(), Error> {
    if cmd.args.len() == n {
        Ok(())
    } else {
        Err(usage(&format!("{} takes {n} argument(s), got {}", cmd.verb, cmd.args.len())))
    }
}

pub fn run_command(doc: Option<&Document>, cmd: &CommandSpec) -> Result<Outcome, Error> {
    if cmd.verb == "check" {
        return run_check(cmd);
    }
    let doc = doc.ok_or_else(|| usage("this command needs an input document"))?;
    match cmd.verb.as_str() {
        "compose" => {
            need_args(cmd, 2)?;
            let second = as_matrix(doc, &cmd.args[0])?;
            let first = as_matrix(doc, &cmd.args[1])?;
            let m = enmat::compose(&second, &first)?;
            ok(emit_matrix(doc, cmd, &m))
        }
        "tensor" => {
            need_args(cmd, 2)?;
            let (a, b) = (&cmd.args[0], &cmd.args[1]);
            match (kind_of(doc, a)?, kind_of(doc, b)?) {
                ("category", "category") => {
                    let t = tensor_category(&as_category(doc, a)?, &as_category(doc, b)?)?;
                    ok(emit_square(doc, cmd, "category", t.graph()))
                }
                ("cocategory", "cocategory") => {
                    let t = tensor_cocategory(&as_cocategory(doc, a)?, &as_cocategory(doc, b)?)?;
                    ok(emit_square(doc, cmd, "cocategory", t.graph()))
                }
                ("graph", "graph") => {
                    let t = tensor_graph(&as_graph(doc, a)?, &as_graph(doc, b)?)?;
                    ok(emit_square(doc, cmd, "graph", &t))
                }
                _ => {
                    let t = tensor(&as_matrix(doc, a)?, &as_matrix(doc, b)?)?;
                    ok(emit_matrix(doc, cmd, &t))
                }
            }
        }
        "closure" => {
            need_args(cmd, 1)?;
            let c = free_category_capped(&as_graph(doc, &cmd.args[0])?, cmd.max_iter)?;
            ok(emit_square(doc, cmd, "category", c.graph()))
        }
        "cofree" => {
            need_args(cmd, 1)?;
            let c = cofree_cocategory(&as_graph(doc, &cmd.args[0])?)?;
            ok(emit_square(doc, cmd, "cocategory", c.graph()))
        }
        "hom" => {
            need_args(cmd, 2)?;
            let (a, b) = (&cmd.args[0], &cmd.args[1]);
            if kind_of(doc, a)? == "matrix" && kind_of(doc, b)? == "matrix" {
                let h = internal_hom(&as_matrix(doc, a)?, &as_matrix(doc, b)?, cmd.cap)?;
                ok(emit_matrix(doc, cmd, &h))
            } else {
                let h = hom_graph(&as_graph(doc, a)?, &as_graph(doc, b)?, cmd.cap)?;
                ok(emit_square(doc, cmd, "graph", &h))
            }
        }
        "pullback" => match cmd.args.len() {
            2 => {
                let f = as_function(doc, &cmd.args[0])?;
                let b = as_category(doc, &cmd.args[1])?;
                let c = pullback_category(&f, &b)?;
                ok(emit_square(doc, cmd, "category", c.graph()))
            }
            3 => {
                let f = as_function(doc, &cmd.args[0])?;
                let g = as_function(doc, &cmd.args[1])?;
                let n = as_matrix(doc, &cmd.args[2])?;
                ok(emit_matrix(doc, cmd, &restrict(&f, &g, &n)?))
            }
            n => Err(usage(&format!("pullback takes 2 or 3 arguments, got {n}"))),
        },
        "pushforward" => match cmd.args.len() {
            2 => {
                let f = as_function(doc, &cmd.args[0])?;
                let c = as_cocategory(doc, &cmd.args[1])?;
                let d = pushforward_cocategory(&f, &c)?;
                ok(emit_square(doc, cmd, "cocategory", d.graph()))
            }
            3 => {
                let f = as_function(doc, &cmd.args[0])?;
                let g = as_function(doc, &cmd.args[1])?;
                let m = as_matrix(doc, &cmd.args[2])?;
                ok(emit_matrix(doc, cmd, &pushforward(&f, &g, &m)?))
            }
            n => Err(usage(&format!("pushforward takes 2 or 3 arguments, got {n}"))),
        },
        "convolution" => {
            need_args(cmd, 2)?;
            let c = as_cocategory(doc, &cmd.args[0])?;
            let b = as_category(doc, &cmd.args[1])?;
            let k = convolution(&c, &b, cmd.cap)?;
            ok(emit_square(doc, cmd, "category", k.graph()))
        }
        "sweedler-hom" => {
            need_args(cmd, 2)?;
            let a = as_category(doc, &cmd.args[0])?;
            let b = as_category(doc, &cmd.args[1])?;
            let t = sweedler_hom(&a, &b, cmd.cap)?;
            ok(emit_square(doc, cmd, "cocategory", t.graph()))
        }
        "enrichment-report" => {
            if cmd.args.len() < 2 {
                return Err(usage("enrichment-report takes a category pair and then cocategories"));
            }
            let a = as_category(doc, &cmd.args[0])?;
            let b = as_category(doc, &cmd.args[1])?;
            let cs: Vec<Cocategory> = cmd.args[2..]
                .iter()
                .map(|n| as_cocategory(doc, n))
                .collect::<Result<_, _>>()?;
            let report = enrichment_report(&a, &b, &cs, cmd.cap)?;
            let mut out = header(cmd);
            let hom_objects: Vec<&str> = report.hom.objects().names().collect();
            writeln!(out, "hom objects: {{ {} }}", hom_objects.join(" ")).unwrap();
            writeln!(
                out,
                "hom objects = function set: {}",
                if report.hom_objects_are_function_set { "yes" } else { "NO" }
            )
            .unwrap();
            writeln!(
                out,
                "projection square commutes: {}",
                if report.projection_square_commutes { "yes" } else { "NO" }
            )
            .unwrap();
            for (i, (name, table)) in cmd.args[2..].iter().zip(&report.tables).enumerate() {
                writeln!(
                    out,
                    "cotensor {i} ({name}): functors={} cofunctors={} pairing={}",
                    table.functors.len(),
                    table.cofunctors.len(),
                    if table.pairing_ok { "verified" } else { "BROKEN" }
                )
                .unwrap();
            }
            writeln!(out, "enrichment: {}", if report.ok() { "verified" } else { "FAILED" })
                .unwrap();
            ok(out)
        }
        "validate" => run_validate(doc, cmd),
        other => Err(usage(&format!("unknown command: {other}"))),
    }
}

fn run_validate(doc: &Document, cmd: &CommandSpec) -> Result<Outcome, Error> {
    let mut out = header(cmd);
    let failed: bool;
    match cmd.args.first().map(String::as_str) {
        Some("base") => {
            let report = validate_base(&doc.base);
            write!(out, "{report}").unwrap();
            failed = !report.all_pass();
        }
        Some("category") => {
            need_args(cmd, 2)?;
            let g = as_graph(doc, &cmd.args[1])?;
            let report = check_category(&g)?;
            failed = !report.ok();
            if failed {
                writeln!(out, "category laws violated: {}", report.witness_string()).unwrap();
            } else {
                writeln!(out, "category laws hold for {}", cmd.args[1]).unwrap();
            }
        }
        Some("cocategory") => {
            need_args(cmd, 2)?;
            let g = as_graph(doc, &cmd.args[1])?;
            let report = check_cocategory(&g)?;
            failed = !report.ok();
            if failed {
                writeln!(out, "cocategory laws violated: {}", report.witness_string()).unwrap();
            } else {
                writeln!(out, "cocategory laws hold for {}", cmd.args[1]).unwrap();
            }
        }
        _ => return Err(usage("validate takes `base`, `category NAME` or `cocategory NAME`")),
    }
    Ok(Outcome { stdout: out, code: if failed { EXIT_LAW_VIOLATION } else { EXIT_OK } })
}

fn run_check(cmd: &CommandSpec) -> Result<Outcome, Error> {
    let mut laws = "double-category".to_string();
    let mut seed = cmd.seed;
    let mut cases = 1000usize;
    for opt in &cmd.args {
        match opt.split_once('=') {
            Some(("laws", v)) => laws = v.to_string(),
            Some(("seed", v)) => {
                seed = v.parse().map_err(|_| usage(&format!("bad seed: {v}")))?
            }
            Some(("cases", v)) => {
                cases = v.parse().map_err(|_| usage(&format!("bad case count: {v}")))?
            }
            _ => return Err(usage(&format!("check options are key=value, got {opt}"))),
        }
    }
    let report = match laws.as_str() {
        "double-category" => enmat::oracle::double_category_suite(seed, cases),
        "base" => enmat::oracle::base_law_suite(),
        "mates" => enmat::oracle::mate_suite(enmat::Base::boolean(), 2)?,
        other => return Err(usage(&format!("unknown law suite: {other}"))),
    };
    let out = format!("{}{report}", header(cmd));
    Ok(Outcome { stdout: out, code: if report.all_pass() { EXIT_OK } else { EXIT_LAW_VIOLATION } })
}
