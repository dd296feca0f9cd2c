//! Triangulated vector configurations, their encoding of fundamental triples,
//! ghost vectors and Gale duality.

mod augment;
mod gale;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::arith::{FieldElement, RealAlgebraicField};
use crate::geometry::{rank_of, GeometryError};
use crate::lattice::LatticeError;
use crate::linalg::{strict_lp_feasible, Constraint, LinalgError};

pub use augment::{augment, decode, AugmentedTriple};
pub use gale::{chamber_check, gale_dual, ChamberMember, ChamberReport, GaleDualConfiguration};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coordinates belong to different fields")]
    MixedFields,
    #[error("simplex refers to vector {0}, which does not exist")]
    BadIndex(usize),
    #[error("configuration is not balanced")]
    NotBalanced,
    #[error("configuration is not odd")]
    NotOdd,
    #[error("configuration does not span")]
    NotSpanning,
    #[error("fan is not complete")]
    FanNotComplete,
    #[error("fan is not simplicial")]
    FanNotSimplicial,
    #[error("invalid triangulated configuration: {0}")]
    InvalidConfiguration(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An ordered list of vectors, repetitions allowed, with the indices of the
/// ghost vectors (those in no simplex). Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfiguration {
    field: RealAlgebraicField,
    dim: usize,
    vectors: Vec<Vec<FieldElement>>,
    ghosts: Vec<usize>,
}

impl VectorConfiguration {
    pub fn new(
        field: &RealAlgebraicField,
        dim: usize,
        vectors: Vec<Vec<FieldElement>>,
        mut ghosts: Vec<usize>,
    ) -> Result<Self, ConfigError> {
        for v in &vectors {
            if v.len() != dim {
                return Err(ConfigError::DimensionMismatch { expected: dim, found: v.len() });
            }
            if v.iter().any(|x| x.field() != field) {
                return Err(ConfigError::MixedFields);
            }
        }
        ghosts.sort_unstable();
        ghosts.dedup();
        if let Some(&bad) = ghosts.iter().find(|&&g| g >= vectors.len()) {
            return Err(ConfigError::BadIndex(bad));
        }
        Ok(VectorConfiguration { field: field.clone(), dim, vectors, ghosts })
    }

    pub fn field(&self) -> &RealAlgebraicField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vec<FieldElement>] {
        &self.vectors
    }

    pub fn ghosts(&self) -> &[usize] {
        &self.ghosts
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn sum(&self) -> Vec<FieldElement> {
        let zero = FieldElement::zero(&self.field);
        (0..self.dim).map(|i| self.vectors.iter().fold(zero.clone(), |acc, v| &acc + &v[i])).collect()
    }

    pub fn rank(&self) -> usize {
        let refs: Vec<&[FieldElement]> = self.vectors.iter().map(Vec::as_slice).collect();
        rank_of(&self.field, self.dim, &refs)
    }
}

/// A set of simplices, each a sorted set of 0-based vector indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Triangulation {
    simplices: BTreeSet<Vec<usize>>,
}

impl Triangulation {
    /// Exactly the given simplices.
    pub fn new(simplices: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let simplices = simplices
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        Triangulation { simplices }
    }

    /// The given simplices together with all their faces.
    pub fn closure_of(simplices: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut all = BTreeSet::new();
        for s in Triangulation::new(simplices).simplices {
            for mask in 0u64..(1u64 << s.len()) {
                all.insert(s.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect());
            }
        }
        Triangulation { simplices: all }
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter()
    }

    pub fn maximal(&self) -> Vec<Vec<usize>> {
        self.simplices
            .iter()
            .filter(|s| !self.simplices.iter().any(|t| t.len() > s.len() && s.iter().all(|i| t.contains(i))))
            .cloned()
            .collect()
    }

    /// Indices appearing in some simplex.
    pub fn support(&self) -> BTreeSet<usize> {
        self.simplices.iter().flatten().copied().collect()
    }

    fn is_closed(&self) -> bool {
        self.simplices.iter().all(|s| {
            (0..s.len()).all(|k| {
                let mut t = s.clone();
                t.remove(k);
                self.simplices.contains(&t)
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigReport {
    pub p: usize,
    pub n: usize,
    /// Every simplex indexes linearly independent vectors.
    pub independent: bool,
    /// Closed under taking faces.
    pub axiom_faces: bool,
    /// `cone(τ) ∩ cone(τ') = cone(τ ∩ τ')` for all simplices.
    pub axiom_intersections: bool,
    /// The cones of the simplices cover `cone(V)`.
    pub axiom_covering: bool,
    /// No listed ghost appears in a simplex.
    pub ghosts_disjoint: bool,
    /// Exact `Σ Xᵢ`.
    pub sum: Vec<FieldElement>,
    pub balanced: bool,
    pub odd: bool,
    /// `(p − n − 1) / 2` when odd.
    pub m: Option<usize>,
    pub spanning: bool,
    /// The cones of the simplices cover `Rⁿ`.
    pub complete: bool,
    /// For balanced configurations: completeness agrees with spanning.
    pub complete_iff_spanning: Option<bool>,
}

impl ConfigReport {
    /// Axioms, independence and ghost disjointness all hold.
    pub fn is_triangulated(&self) -> bool {
        self.independent && self.axiom_faces && self.axiom_intersections && self.axiom_covering && self.ghosts_disjoint
    }
}

pub fn config_validate(v: &VectorConfiguration, t: &Triangulation) -> Result<ConfigReport, ConfigError> {
    let (p, n) = (v.len(), v.dim);
    if let Some(&bad) = t.support().iter().find(|&&i| i >= p) {
        return Err(ConfigError::BadIndex(bad));
    }
    let field = &v.field;
    let rank = |s: &[usize]| {
        let refs: Vec<&[FieldElement]> = s.iter().map(|&i| v.vectors[i].as_slice()).collect();
        rank_of(field, n, &refs)
    };
    let independent = t.simplices().all(|s| rank(s) == s.len());
    let axiom_faces = t.is_closed();
    let maximal = t.maximal();

    let mut axiom_intersections = true;
    'pairs: for (i, a) in maximal.iter().enumerate() {
        for b in &maximal[i + 1..] {
            let common: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
            if !separable(v, &common, &minus(a, &common), &minus(b, &common))? {
                axiom_intersections = false;
                break 'pairs;
            }
        }
    }

    let r = v.rank();
    let full: Vec<Vec<usize>> = maximal.iter().filter(|s| s.len() == r && rank(s) == r).cloned().collect();
    let owners = wall_owners(&full);
    let axiom_covering = if r == 0 {
        true
    } else if full.is_empty() {
        false
    } else {
        let mut ok = true;
        for (wall, own) in &owners {
            if own.len() == 1 {
                let apex = minus(&full[own[0]], wall)[0];
                if !supports_configuration(v, wall, apex)? {
                    ok = false;
                    break;
                }
            }
        }
        ok
    };

    let support = t.support();
    let ghosts_disjoint = v.ghosts.iter().all(|g| !support.contains(g));
    let sum = v.sum();
    let balanced = sum.iter().all(FieldElement::is_zero);
    let odd = p >= n && (p - n) % 2 == 1;
    let m = odd.then(|| (p - n - 1) / 2);
    let spanning = r == n;
    let complete = r == n && axiom_intersections && !full.is_empty() && owners.values().all(|o| o.len() == 2);
    let complete_iff_spanning = balanced.then_some(complete == spanning);
    Ok(ConfigReport {
        p,
        n,
        independent,
        axiom_faces,
        axiom_intersections,
        axiom_covering,
        ghosts_disjoint,
        sum,
        balanced,
        odd,
        m,
        spanning,
        complete,
        complete_iff_spanning,
    })
}

fn minus(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|i| !b.contains(i)).collect()
}

/// Codimension-one faces of simplices of full rank, with the simplices
/// containing each.
fn wall_owners(full: &[Vec<usize>]) -> BTreeMap<Vec<usize>, Vec<usize>> {
    let mut owners: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (k, s) in full.iter().enumerate() {
        for drop in 0..s.len() {
            let mut w = s.clone();
            w.remove(drop);
            owners.entry(w).or_default().push(k);
        }
    }
    owners
}

/// A functional vanishing on `zero`, positive on `pos`, negative on `neg`.
fn separable(v: &VectorConfiguration, zero: &[usize], pos: &[usize], neg: &[usize]) -> Result<bool, ConfigError> {
    let mut system = Vec::new();
    for &i in zero {
        system.push(Constraint::zero(v.vectors[i].clone()));
    }
    for &i in pos {
        system.push(Constraint::positive(v.vectors[i].clone()));
    }
    for &i in neg {
        system.push(Constraint::positive(v.vectors[i].iter().map(|x| -x).collect()));
    }
    if system.is_empty() {
        return Ok(true);
    }
    Ok(strict_lp_feasible(&v.field, v.dim, &system)?.is_some())
}

/// A boundary wall of the union lies on the boundary of `cone(V)`: some
/// functional vanishes on the wall, is nonnegative on all of `V` and positive
/// on the apex of the simplex owning the wall.
fn supports_configuration(v: &VectorConfiguration, wall: &[usize], apex: usize) -> Result<bool, ConfigError> {
    let mut system: Vec<Constraint> = wall.iter().map(|&i| Constraint::zero(v.vectors[i].clone())).collect();
    for x in &v.vectors {
        system.push(Constraint::nonnegative(x.clone()));
    }
    system.push(Constraint::positive(v.vectors[apex].clone()));
    Ok(strict_lp_feasible(&v.field, v.dim, &system)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(ps: &[&[i64]], ghosts: Vec<usize>) -> VectorConfiguration {
        let f = RealAlgebraicField::rationals();
        let vs = ps.iter().map(|p| p.iter().map(|&x| FieldElement::from_int(&f, x)).collect()).collect();
        VectorConfiguration::new(&f, ps[0].len(), vs, ghosts).unwrap()
    }

    #[test]
    fn closure_adds_faces() {
        let t = Triangulation::closure_of(vec![vec![0, 1]]);
        assert_eq!(t.simplices().count(), 4);
        assert_eq!(t.maximal(), vec![vec![0, 1]]);
    }

    #[test]
    fn square_with_ghosts() {
        let v = config(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, 0], &[1, 0], &[-2, 0]], vec![4, 5, 6]);
        let t = Triangulation::closure_of(vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]);
        let r = config_validate(&v, &t).unwrap();
        assert!(r.is_triangulated());
        assert!(r.balanced && r.odd && r.spanning && r.complete);
        assert_eq!(r.m, Some(2));
        assert_eq!(r.complete_iff_spanning, Some(true));
    }

    #[test]
    fn overlapping_simplices_fail_axiom_two() {
        let v = config(&[&[1, 0], &[0, 1], &[1, 1], &[-1, -1]], vec![]);
        let t = Triangulation::closure_of(vec![vec![0, 1], vec![0, 2]]);
        let r = config_validate(&v, &t).unwrap();
        assert!(!r.axiom_intersections);
    }

    #[test]
    fn partial_cover_fails_axiom_three() {
        let v = config(&[&[1, 0], &[0, 1], &[-1, 0]], vec![]);
        // cone(V) is the upper half plane; one quadrant is not enough
        let t = Triangulation::closure_of(vec![vec![0, 1]]);
        assert!(!config_validate(&v, &t).unwrap().axiom_covering);
        let t = Triangulation::closure_of(vec![vec![0, 1], vec![1, 2]]);
        let r = config_validate(&v, &t).unwrap();
        assert!(r.axiom_covering && !r.complete && !r.balanced);
    }

    #[test]
    fn ghost_inside_simplex_detected() {
        let v = config(&[&[1, 0], &[0, 1], &[-1, -1]], vec![2]);
        let t = Triangulation::closure_of(vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        let r = config_validate(&v, &t).unwrap();
        assert!(!r.ghosts_disjoint && !r.is_triangulated());
    }

    #[test]
    fn dependent_simplex_detected() {
        let v = config(&[&[1, 0], &[2, 0], &[0, 1]], vec![]);
        let t = Triangulation::closure_of(vec![vec![0, 1]]);
        assert!(!config_validate(&v, &t).unwrap().independent);
    }
}
