//! Matrices weighted in a thin semiring or quantale base, together with the
//! structures they support: graphs, categories (reflexive-transitive data:
//! preorders, generalized metrics), cocategories (their duals), free and
//! cofree constructions, and the convolution/Sweedler hom pairing between
//! categories and cocategories. Every law the constructions rely on is
//! executable and checked, exhaustively wherever the carrier is finite.

pub mod base;
pub mod category;
pub mod cocategory;
mod error;
pub mod graph;
pub mod matrix;
pub mod objset;
pub mod oracle;
pub mod sweedler;

pub use base::{validate_base, Base, BaseKind, Elem, Trop};
pub use category::{
    check_category, count_functors, free_category, free_category_capped, is_functor,
    pullback_category, tensor_category, Category,
};
pub use cocategory::{
    check_cocategory, cofree_cocategory, count_cofunctors, is_cofunctor, pushforward_cocategory,
    tensor_cocategory, Cocategory,
};
pub use error::{Error, Result};
pub use graph::{hom_graph, is_graph_morphism, tensor_graph, Graph};
pub use matrix::{
    companion, compose, conjoint, internal_hom, mate, pointwise_tensor, pushforward, restrict,
    tensor, MateData, MateForm, Matrix, TwoCell,
};
pub use objset::{all_functions, exponent_objset, exponent_size, ObjFun, ObjSet};
pub use sweedler::{
    convolution, enrichment_report, measuring_check, sweedler_hom, EnrichmentReport,
};

/// Default cap on exponent object sets (`|Y|^|X|`); operations that build
/// function sets refuse larger instances instead of degrading.
pub const DEFAULT_EXPONENT_CAP: usize = 64;
