//! Convex polytopes in half-space and vertex form, face lattices, normal fans
//! and fan predicates.

mod fan;
mod hull;
mod polytope;

use thiserror::Error;

use crate::arith::{FieldElement, RealAlgebraicField};
use crate::linalg::{FieldMatrix, LinalgError};

pub use fan::{fan_predicates, fans_equivalent, is_polytopal, normal_fan, Fan, FanReport};
pub use hull::halfspaces_from_vertices;
pub use polytope::{
    face_lattice, is_simple, vertices_from_halfspaces, Face, FaceLattice, Facet, HalfspaceRep, VertexRep, FACET_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("the half-spaces do not bound a polytope")]
    UnboundedPolytope,
    #[error("the half-spaces cut out a set without interior")]
    DegenerateDimension,
    #[error("{facets} facets exceed the enumeration budget of {budget}")]
    FacetBudgetExceeded { facets: usize, budget: usize },
    #[error("dimension {0} is not supported here")]
    DimensionTooHigh(usize),
    #[error("the points do not span the ambient space")]
    NotFullDimensional,
    #[error("facet {0} is redundant")]
    RedundantFacet(usize),
    #[error("vector {0} is zero")]
    ZeroVector(usize),
    #[error("rays {0} and {1} span the same ray")]
    RepeatedRay(usize, usize),
    #[error("cone refers to ray {0}, which does not exist")]
    BadRayIndex(usize),
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coordinates belong to different fields")]
    MixedFields,
    #[error("fan is not simplicial")]
    FanNotSimplicial,
    #[error("fan is not complete")]
    FanNotComplete,
    #[error("fan is not a valid fan")]
    InvalidFan,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) fn check_vector(field: &RealAlgebraicField, dim: usize, v: &[FieldElement]) -> Result<(), GeometryError> {
    if v.len() != dim {
        return Err(GeometryError::DimensionMismatch { expected: dim, found: v.len() });
    }
    if v.iter().any(|x| x.field() != field) {
        return Err(GeometryError::MixedFields);
    }
    Ok(())
}

/// Rank of a list of vectors of length `dim`.
pub fn rank_of(field: &RealAlgebraicField, dim: usize, vectors: &[&[FieldElement]]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<FieldElement>> = vectors.iter().map(|v| v.to_vec()).collect();
    FieldMatrix::from_rows(field, dim, &rows).expect("consistent vectors").rank()
}

/// True when `u = t·v` for some `t > 0`.
pub fn positively_proportional(u: &[FieldElement], v: &[FieldElement]) -> bool {
    if u.len() != v.len() || u.is_empty() {
        return false;
    }
    let field = u[0].field();
    let is_zero = |w: &[FieldElement]| w.iter().all(FieldElement::is_zero);
    if is_zero(u) || is_zero(v) {
        return false;
    }
    rank_of(field, u.len(), &[u, v]) == 1 && crate::linalg::dot(field, u, v).is_positive()
}

pub(crate) fn sub(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
