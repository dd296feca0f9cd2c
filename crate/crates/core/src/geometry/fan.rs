use std::collections::{BTreeMap, BTreeSet};

use crate::arith::{FieldElement, RealAlgebraicField};
use crate::linalg::{strict_lp_feasible, Constraint, FieldMatrix};

use super::{
    check_vector, face_lattice, positively_proportional, rank_of, subsets, vertices_from_halfspaces, GeometryError,
    HalfspaceRep,
};

/// A fan given by its rays and its cones, each cone a sorted set of ray
/// indices. The zero cone is the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    field: RealAlgebraicField,
    dim: usize,
    rays: Vec<Vec<FieldElement>>,
    cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Builds a fan from rays and cones. Cones are sorted and deduplicated but
    /// not closed under faces; see [`Fan::from_maximal_cones`].
    pub fn new(
        field: &RealAlgebraicField,
        dim: usize,
        rays: Vec<Vec<FieldElement>>,
        cones: Vec<Vec<usize>>,
    ) -> Result<Self, GeometryError> {
        for (i, r) in rays.iter().enumerate() {
            check_vector(field, dim, r)?;
            if r.iter().all(FieldElement::is_zero) {
                return Err(GeometryError::ZeroVector(i));
            }
        }
        for i in 0..rays.len() {
            for j in i + 1..rays.len() {
                if positively_proportional(&rays[i], &rays[j]) {
                    return Err(GeometryError::RepeatedRay(i, j));
                }
            }
        }
        let mut set = BTreeSet::new();
        for mut c in cones {
            c.sort_unstable();
            c.dedup();
            if let Some(&bad) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(GeometryError::BadRayIndex(bad));
            }
            set.insert(c);
        }
        Ok(Fan { field: field.clone(), dim, rays, cones: order_cones(set) })
    }

    /// Builds a fan from its maximal cones and adds every face of each.
    pub fn from_maximal_cones(
        field: &RealAlgebraicField,
        dim: usize,
        rays: Vec<Vec<FieldElement>>,
        maximal: Vec<Vec<usize>>,
    ) -> Result<Self, GeometryError> {
        let fan = Fan::new(field, dim, rays, maximal)?;
        let mut all = BTreeSet::new();
        for c in &fan.cones {
            all.extend(fan.cone_faces(c)?);
        }
        Ok(Fan { cones: order_cones(all), ..fan })
    }

    pub fn field(&self) -> &RealAlgebraicField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<FieldElement>] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    /// Cones not contained in another cone.
    pub fn maximal_cones(&self) -> Vec<Vec<usize>> {
        self.cones
            .iter()
            .filter(|c| !self.cones.iter().any(|d| d.len() > c.len() && c.iter().all(|i| d.contains(i))))
            .cloned()
            .collect()
    }

    fn cone_rank(&self, cone: &[usize]) -> usize {
        let vs: Vec<&[FieldElement]> = cone.iter().map(|&i| self.rays[i].as_slice()).collect();
        rank_of(&self.field, self.dim, &vs)
    }

    /// Subsets `S` of the cone's rays for which some linear functional
    /// vanishes on `S` and is positive on the other rays, i.e. the faces.
    fn cone_faces(&self, cone: &[usize]) -> Result<Vec<Vec<usize>>, GeometryError> {
        let simplicial = self.cone_rank(cone) == cone.len();
        let mut faces = Vec::new();
        for k in 0..=cone.len() {
            for pick in subsets(cone.len(), k) {
                let face: Vec<usize> = pick.iter().map(|&i| cone[i]).collect();
                if simplicial || self.separable(&face, &cone_minus(cone, &face), &[])? {
                    faces.push(face);
                }
            }
        }
        Ok(faces)
    }

    /// Is there `h` with `h = 0` on `zero`, `h > 0` on `pos`, `h < 0` on `neg`?
    fn separable(&self, zero: &[usize], pos: &[usize], neg: &[usize]) -> Result<bool, GeometryError> {
        let mut system = Vec::new();
        for &i in zero {
            system.push(Constraint::zero(self.rays[i].clone()));
        }
        for &i in pos {
            system.push(Constraint::positive(self.rays[i].clone()));
        }
        for &i in neg {
            system.push(Constraint::positive(self.rays[i].iter().map(|x| -x).collect()));
        }
        Ok(strict_lp_feasible(&self.field, self.dim, &system)?.is_some())
    }

    /// Faces of codimension one in a full-dimensional cone.
    fn walls(&self, cone: &[usize]) -> Result<Vec<Vec<usize>>, GeometryError> {
        Ok(self.cone_faces(cone)?.into_iter().filter(|f| self.cone_rank(f) + 1 == self.dim).collect())
    }
}

fn cone_minus(cone: &[usize], face: &[usize]) -> Vec<usize> {
    cone.iter().copied().filter(|i| !face.contains(i)).collect()
}

fn order_cones(set: BTreeSet<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = set.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}

/// Rays are the facet normals with their given scaling; the cone of a face is
/// spanned by the normals of the facets containing it.
pub fn normal_fan(h: &HalfspaceRep) -> Result<Fan, GeometryError> {
    let v = vertices_from_halfspaces(h)?;
    if let Some(&j) = v.redundant.first() {
        return Err(GeometryError::RedundantFacet(j));
    }
    let lattice = face_lattice(h, &v);
    let cones = lattice.faces.into_iter().map(|f| f.facets).collect();
    Fan::new(h.field(), h.dim(), h.normals(), cones)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanReport {
    /// Every face of a cone is a cone of the fan.
    pub face_closed: bool,
    /// Any two maximal cones meet in a common face.
    pub intersections_proper: bool,
    pub valid: bool,
    pub simplicial: bool,
    pub complete: bool,
}

/// Validity, simpliciality and completeness, decided exactly in any dimension.
///
/// Two cones meet in the common face spanned by their shared rays exactly when
/// a hyperplane through those rays has the remaining rays of one cone strictly
/// on one side and those of the other strictly on the other side. A fan with
/// full-dimensional maximal cones is complete when every wall lies in exactly
/// two maximal cones and the cones are connected across walls.
pub fn fan_predicates(fan: &Fan) -> Result<FanReport, GeometryError> {
    let present: BTreeSet<&Vec<usize>> = fan.cones.iter().collect();
    let mut face_closed = true;
    for c in &fan.cones {
        if fan.cone_faces(c)?.iter().any(|f| !present.contains(f)) {
            face_closed = false;
            break;
        }
    }
    let maximal = fan.maximal_cones();
    let mut intersections_proper = true;
    'pairs: for (i, a) in maximal.iter().enumerate() {
        for b in &maximal[i + 1..] {
            let common: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
            if !fan.separable(&common, &cone_minus(a, &common), &cone_minus(b, &common))? {
                intersections_proper = false;
                break 'pairs;
            }
        }
    }
    let simplicial = fan.cones.iter().all(|c| fan.cone_rank(c) == c.len());
    let complete = is_complete(fan, &maximal)?;
    Ok(FanReport { face_closed, intersections_proper, valid: face_closed && intersections_proper, simplicial, complete })
}

fn is_complete(fan: &Fan, maximal: &[Vec<usize>]) -> Result<bool, GeometryError> {
    if maximal.is_empty() || maximal.iter().any(|c| fan.cone_rank(c) < fan.dim) {
        return Ok(false);
    }
    let mut wall_owners: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (k, c) in maximal.iter().enumerate() {
        for w in fan.walls(c)? {
            wall_owners.entry(w).or_default().push(k);
        }
    }
    if wall_owners.values().any(|owners| owners.len() != 2) {
        return Ok(false);
    }
    let mut reached = vec![false; maximal.len()];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(k) = stack.pop() {
        for owners in wall_owners.values() {
            if owners.contains(&k) {
                for &o in owners {
                    if !reached[o] {
                        reached[o] = true;
                        stack.push(o);
                    }
                }
            }
        }
    }
    Ok(reached.iter().all(|&r| r))
}

/// Offsets `λ` with `{μ : ⟨μ, X_j⟩ ≥ λ_j}` having normal fan `fan`, or `None`.
///
/// For adjacent maximal cones `τ ∪ {i}` and `τ ∪ {j}` the rays satisfy one
/// linear relation `c_i X_i + c_j X_j + Σ_τ c_k X_k = 0` with `c_i, c_j > 0`;
/// the support function is strictly convex across the wall exactly when
/// `⟨c, λ⟩ < 0`. The offsets of the first maximal cone are pinned to zero.
pub fn is_polytopal(fan: &Fan) -> Result<Option<Vec<FieldElement>>, GeometryError> {
    let report = fan_predicates(fan)?;
    if !report.valid {
        return Err(GeometryError::InvalidFan);
    }
    if !report.simplicial {
        return Err(GeometryError::FanNotSimplicial);
    }
    if !report.complete {
        return Err(GeometryError::FanNotComplete);
    }
    let field = &fan.field;
    let d = fan.rays.len();
    let zero = FieldElement::zero(field);
    let maximal = fan.maximal_cones();
    let mut system = Vec::new();
    for &i in &maximal[0] {
        let mut e = vec![zero.clone(); d];
        e[i] = FieldElement::one(field);
        system.push(Constraint::zero(e));
    }
    let mut wall_owners: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (k, c) in maximal.iter().enumerate() {
        for w in fan.walls(c)? {
            wall_owners.entry(w).or_default().push(k);
        }
    }
    for (wall, owners) in &wall_owners {
        let i = cone_minus(&maximal[owners[0]], wall)[0];
        let j = cone_minus(&maximal[owners[1]], wall)[0];
        let mut idx = vec![i, j];
        idx.extend(wall);
        let cols: Vec<Vec<FieldElement>> = idx.iter().map(|&r| fan.rays[r].clone()).collect();
        let m = FieldMatrix::from_columns(field, fan.dim, &cols)?;
        let kernel = m.kernel();
        debug_assert_eq!(kernel.len(), 1);
        let mut c = kernel[0].clone();
        if c[0].is_negative() {
            c = c.iter().map(|x| -x).collect();
        }
        let mut row = vec![zero.clone(); d];
        for (pos, &r) in idx.iter().enumerate() {
            row[r] = -&c[pos];
        }
        system.push(Constraint::positive(row));
    }
    Ok(strict_lp_feasible(field, d, &system)?)
}

/// Same rays up to positive scaling and the same cones under the induced
/// bijection of ray indices.
pub fn fans_equivalent(a: &Fan, b: &Fan) -> bool {
    if a.dim != b.dim || a.rays.len() != b.rays.len() || a.field != b.field {
        return false;
    }
    let mut map = Vec::with_capacity(a.rays.len());
    for r in &a.rays {
        match b.rays.iter().position(|s| positively_proportional(r, s)) {
            Some(k) => map.push(k),
            None => return false,
        }
    }
    let mapped: BTreeSet<Vec<usize>> = a
        .cones
        .iter()
        .map(|c| {
            let mut m: Vec<usize> = c.iter().map(|&i| map[i]).collect();
            m.sort_unstable();
            m
        })
        .collect();
    let theirs: BTreeSet<Vec<usize>> = b.cones.iter().cloned().collect();
    mapped == theirs
}
