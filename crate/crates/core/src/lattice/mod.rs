//! Quasilattices, fundamental triples and chart structure groups.

mod quasilattice;
mod triple;

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::linalg::LinalgError;

pub use quasilattice::{
    is_quasirational, ql_contains, ql_equal, ql_is_lattice, ql_span, ray_generator, Quasilattice, RayGenerator,
};
pub use triple::{
    chart_groups, finite_order, triple_validate, Body, ChartClass, ChartGroupReport, FundamentalTriple, TripleReport,
    NONSIMPLE_WARNING,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a quasilattice needs at least one generator")]
    NoGenerators,
    #[error("the generators do not span the ambient space")]
    NotSpanning,
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coordinates belong to different fields")]
    MixedFields,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("expected {expected} normals, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("normal {0} is not in the quasilattice")]
    NormalNotInQuasilattice(usize),
    #[error("normal {0} is not a positive multiple of its facet normal or ray")]
    NormalWrongDirection(usize),
    #[error("chart groups need a simple polytope or simplicial fan")]
    NonSimpleBody,
    #[error("the normals active at vertex {0} are not a basis")]
    SingularVertexFrame(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
