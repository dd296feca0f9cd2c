use std::collections::{BTreeSet, HashMap};

use crate::arith::{FieldElement, RealAlgebraicField};
use crate::linalg::{dot, rank_kernel_solve, strict_lp_feasible, Constraint, FieldMatrix, Relation};

use super::{check_vector, rank_of, sub, subsets, GeometryError};

/// Largest facet count accepted by [`vertices_from_halfspaces`].
pub const FACET_BUDGET: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<FieldElement>,
    pub offset: FieldElement,
}

/// `{μ : ⟨μ, X_j⟩ ≥ λ_j for all j}`, bounded and with nonempty interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceRep {
    field: RealAlgebraicField,
    dim: usize,
    facets: Vec<Facet>,
}

impl HalfspaceRep {
    pub fn new(field: &RealAlgebraicField, dim: usize, facets: Vec<Facet>) -> Result<Self, GeometryError> {
        for (j, f) in facets.iter().enumerate() {
            check_vector(field, dim, &f.normal)?;
            if f.offset.field() != field {
                return Err(GeometryError::MixedFields);
            }
            if f.normal.iter().all(FieldElement::is_zero) {
                return Err(GeometryError::ZeroVector(j));
            }
        }
        let h = HalfspaceRep { field: field.clone(), dim, facets };
        if !h.is_bounded()? {
            return Err(GeometryError::UnboundedPolytope);
        }
        if h.interior_point()?.is_none() {
            return Err(GeometryError::DegenerateDimension);
        }
        Ok(h)
    }

    pub fn field(&self) -> &RealAlgebraicField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn normals(&self) -> Vec<Vec<FieldElement>> {
        self.facets.iter().map(|f| f.normal.clone()).collect()
    }

    pub fn offsets(&self) -> Vec<FieldElement> {
        self.facets.iter().map(|f| f.offset.clone()).collect()
    }

    pub fn contains(&self, point: &[FieldElement]) -> bool {
        self.facets.iter().all(|f| !(&dot(&self.field, &f.normal, point) - &f.offset).is_negative())
    }

    /// The recession cone `{y : ⟨y, X_j⟩ ≥ 0}` is trivial exactly when the
    /// normals span and no nonzero `y` has all products nonnegative, which
    /// (given spanning) means no `y` with those products and a positive sum.
    fn is_bounded(&self) -> Result<bool, GeometryError> {
        let normals: Vec<&[FieldElement]> = self.facets.iter().map(|f| f.normal.as_slice()).collect();
        if rank_of(&self.field, self.dim, &normals) < self.dim {
            return Ok(false);
        }
        let zero = FieldElement::zero(&self.field);
        let mut system: Vec<Constraint> =
            self.facets.iter().map(|f| Constraint::new(f.normal.clone(), Relation::GreaterEq, zero.clone())).collect();
        let total: Vec<FieldElement> = (0..self.dim)
            .map(|i| self.facets.iter().fold(zero.clone(), |acc, f| &acc + &f.normal[i]))
            .collect();
        system.push(Constraint::new(total, Relation::Greater, zero));
        Ok(strict_lp_feasible(&self.field, self.dim, &system)?.is_none())
    }

    /// A point strictly inside every half-space, if one exists.
    pub fn interior_point(&self) -> Result<Option<Vec<FieldElement>>, GeometryError> {
        let system: Vec<Constraint> = self
            .facets
            .iter()
            .map(|f| Constraint::new(f.normal.clone(), Relation::Greater, f.offset.clone()))
            .collect();
        Ok(strict_lp_feasible(&self.field, self.dim, &system)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRep {
    pub vertices: Vec<Vec<FieldElement>>,
    /// Sorted indices of the facets active at each vertex.
    pub vertex_facets: Vec<Vec<usize>>,
    /// Facets that do not define a facet of the polytope.
    pub redundant: Vec<usize>,
}

/// Enumerates vertices by solving every `n`-subset of facet equations.
pub fn vertices_from_halfspaces(h: &HalfspaceRep) -> Result<VertexRep, GeometryError> {
    let (n, d) = (h.dim, h.facets.len());
    if d > FACET_BUDGET {
        return Err(GeometryError::FacetBudgetExceeded { facets: d, budget: FACET_BUDGET });
    }
    let field = &h.field;
    let mut vertices: Vec<Vec<FieldElement>> = Vec::new();
    let mut seen: HashMap<Vec<FieldElement>, usize> = HashMap::new();
    for subset in subsets(d, n) {
        let rows: Vec<Vec<FieldElement>> = subset.iter().map(|&j| h.facets[j].normal.clone()).collect();
        let a = FieldMatrix::from_rows(field, n, &rows)?;
        let b: Vec<FieldElement> = subset.iter().map(|&j| h.facets[j].offset.clone()).collect();
        let s = rank_kernel_solve(&a, Some(&b));
        if s.rank < n {
            continue;
        }
        let v = s.solution.expect("full-rank square system");
        if seen.contains_key(&v) || !h.contains(&v) {
            continue;
        }
        seen.insert(v.clone(), vertices.len());
        vertices.push(v);
    }
    let vertex_facets: Vec<Vec<usize>> = vertices
        .iter()
        .map(|v| (0..d).filter(|&j| dot(field, &h.facets[j].normal, v) == h.facets[j].offset).collect())
        .collect();

    let mut redundant = Vec::new();
    let mut facet_vertex_sets: Vec<BTreeSet<usize>> = Vec::new();
    for j in 0..d {
        let on: BTreeSet<usize> = (0..vertices.len()).filter(|&v| vertex_facets[v].contains(&j)).collect();
        let dim = affine_dimension(field, n, &on.iter().map(|&v| vertices[v].as_slice()).collect::<Vec<_>>());
        if dim != Some(n - 1) || facet_vertex_sets.contains(&on) {
            redundant.push(j);
        }
        facet_vertex_sets.push(on);
    }
    Ok(VertexRep { vertices, vertex_facets, redundant })
}

/// Dimension of the affine hull, `None` for the empty set.
pub(crate) fn affine_dimension(field: &RealAlgebraicField, n: usize, points: &[&[FieldElement]]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Vec<FieldElement>> = rest.iter().map(|p| sub(p, first)).collect();
    let refs: Vec<&[FieldElement]> = diffs.iter().map(Vec::as_slice).collect();
    Some(rank_of(field, n, &refs))
}

/// A face, identified by the facets containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub facets: Vec<usize>,
    pub dim: usize,
    pub vertices: Vec<usize>,
}

/// Nonempty faces ordered by decreasing dimension, then by facet set. The
/// whole polytope appears with an empty facet set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
}

impl FaceLattice {
    pub fn count_by_dim(&self, dim: usize) -> usize {
        self.faces.iter().filter(|f| f.dim == dim).count()
    }

    /// f-vector `(f_0, …, f_n)`.
    pub fn f_vector(&self, n: usize) -> Vec<usize> {
        (0..=n).map(|k| self.count_by_dim(k)).collect()
    }
}

pub fn face_lattice(h: &HalfspaceRep, v: &VertexRep) -> FaceLattice {
    let mut sets: BTreeSet<Vec<usize>> = v.vertex_facets.iter().cloned().collect();
    sets.insert(Vec::new());
    loop {
        let current: Vec<Vec<usize>> = sets.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let meet: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
                grew |= sets.insert(meet);
            }
        }
        if !grew {
            break;
        }
    }
    let mut faces: Vec<Face> = sets
        .into_iter()
        .map(|facets| {
            let normals: Vec<&[FieldElement]> = facets.iter().map(|&j| h.facets[j].normal.as_slice()).collect();
            let dim = h.dim - rank_of(&h.field, h.dim, &normals);
            let vertices =
                (0..v.vertices.len()).filter(|&k| facets.iter().all(|j| v.vertex_facets[k].contains(j))).collect();
            Face { facets, dim, vertices }
        })
        .collect();
    faces.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.facets.cmp(&b.facets)));
    FaceLattice { faces }
}

/// Every vertex lies on exactly `n` facets.
pub fn is_simple(h: &HalfspaceRep, v: &VertexRep) -> bool {
    v.vertex_facets.iter().all(|s| s.len() == h.dim)
}
