//! Finite ordered sets of named objects and functions between them: the
//! vertical data under every matrix.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// An ordered set of distinct names. The order is significant: it fixes
/// matrix indexing and makes every rendered output deterministic.
#[derive(Clone, Debug, Eq)]
pub struct ObjSet {
    names: Arc<Vec<String>>,
}

impl PartialEq for ObjSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl std::hash::Hash for ObjSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

impl ObjSet {
    pub fn new<I, S>(names: I) -> Result<ObjSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidObjSet(format!("duplicate object name: {n}")));
            }
        }
        Ok(ObjSet { names: Arc::new(names) })
    }

    pub fn singleton(name: &str) -> ObjSet {
        ObjSet { names: Arc::new(vec![name.to_string()]) }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Cartesian product, ordered lexicographically by (self order, other
    /// order); pair `(i, j)` sits at index `i * other.len() + j`.
    pub fn product(&self, other: &ObjSet) -> ObjSet {
        let mut names = Vec::with_capacity(self.len() * other.len());
        for a in self.names() {
            for b in other.names() {
                names.push(format!("({a},{b})"));
            }
        }
        ObjSet { names: Arc::new(names) }
    }
}

impl fmt::Display for ObjSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(" "))
    }
}

/// A function between object sets, stored as image indices in source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjFun {
    src: ObjSet,
    dst: ObjSet,
    images: Vec<usize>,
}

impl ObjFun {
    pub fn new(src: ObjSet, dst: ObjSet, images: Vec<usize>) -> Result<ObjFun> {
        if images.len() != src.len() {
            return Err(Error::InvalidFunction(format!(
                "expected {} images, got {}",
                src.len(),
                images.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&i| i >= dst.len()) {
            return Err(Error::InvalidFunction(format!("image index {bad} out of range")));
        }
        Ok(ObjFun { src, dst, images })
    }

    pub fn from_names(src: ObjSet, dst: ObjSet, pairs: &[(&str, &str)]) -> Result<ObjFun> {
        let mut images = vec![usize::MAX; src.len()];
        for (a, b) in pairs {
            let i = src
                .position(a)
                .ok_or_else(|| Error::InvalidFunction(format!("unknown source object {a}")))?;
            let j = dst
                .position(b)
                .ok_or_else(|| Error::InvalidFunction(format!("unknown target object {b}")))?;
            images[i] = j;
        }
        if let Some(i) = images.iter().position(|&j| j == usize::MAX) {
            return Err(Error::InvalidFunction(format!("no image for {}", src.name(i))));
        }
        Ok(ObjFun { src, dst, images })
    }

    pub fn identity(x: &ObjSet) -> ObjFun {
        ObjFun { src: x.clone(), dst: x.clone(), images: (0..x.len()).collect() }
    }

    pub fn constant(src: ObjSet, dst: ObjSet, image: usize) -> Result<ObjFun> {
        let n = src.len();
        ObjFun::new(src, dst, vec![image; n])
    }

    pub fn src(&self) -> &ObjSet {
        &self.src
    }

    pub fn dst(&self) -> &ObjSet {
        &self.dst
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `after ∘ first`.
    pub fn compose(after: &ObjFun, first: &ObjFun) -> Result<ObjFun> {
        if first.dst != after.src {
            return Err(Error::ObjSetMismatch(format!(
                "cannot compose: {} vs {}",
                first.dst, after.src
            )));
        }
        Ok(ObjFun {
            src: first.src.clone(),
            dst: after.dst.clone(),
            images: first.images.iter().map(|&i| after.images[i]).collect(),
        })
    }

    /// `f × g` on product object sets, matching `ObjSet::product` indexing.
    pub fn product(f: &ObjFun, g: &ObjFun) -> ObjFun {
        let src = f.src.product(&g.src);
        let dst = f.dst.product(&g.dst);
        let gw = g.dst.len();
        let mut images = Vec::with_capacity(src.len());
        for &fi in &f.images {
            for &gi in &g.images {
                images.push(fi * gw + gi);
            }
        }
        ObjFun { src, dst, images }
    }

    /// The index of this function in `all_functions(src, dst)` order.
    pub fn exponent_index(&self) -> usize {
        let mut idx = 0;
        for &i in &self.images {
            idx = idx * self.dst.len() + i;
        }
        idx
    }
}

impl fmt::Display for ObjFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, &j)| format!("{} -> {}", self.src.name(i), self.dst.name(j)))
            .collect();
        write!(f, "{{{}}}", pairs.join(", "))
    }
}

/// The number of functions `dom → cod`, as a u128 so caps can be checked
/// before anything is materialized.
pub fn exponent_size(dom: &ObjSet, cod: &ObjSet) -> u128 {
    (cod.len() as u128).pow(dom.len() as u32)
}

/// The object set of all functions `dom → cod`, one name per function:
/// `⟨y1,…,yn⟩` lists the images in `dom` order, and functions are
/// enumerated lexicographically by `cod` order (first coordinate most
/// significant). `all_functions` yields the same order.
pub fn exponent_objset(dom: &ObjSet, cod: &ObjSet) -> ObjSet {
    let names: Vec<String> = image_tuples(dom.len(), cod.len())
        .map(|images| {
            let parts: Vec<&str> = images.iter().map(|&i| cod.name(i)).collect();
            format!("⟨{}⟩", parts.join(","))
        })
        .collect();
    ObjSet { names: Arc::new(names) }
}

/// Every function `dom → cod` in exponent order.
pub fn all_functions(dom: &ObjSet, cod: &ObjSet) -> Vec<ObjFun> {
    image_tuples(dom.len(), cod.len())
        .map(|images| ObjFun { src: dom.clone(), dst: cod.clone(), images })
        .collect()
}

fn image_tuples(dom: usize, cod: usize) -> impl Iterator<Item = Vec<usize>> {
    let total: u128 = (cod as u128).pow(dom as u32);
    (0..total).map(move |t| {
        let mut images = vec![0usize; dom];
        let mut rest = t;
        for slot in images.iter_mut().rev() {
            *slot = (rest % cod as u128) as usize;
            rest /= cod as u128;
        }
        images
    })
}
