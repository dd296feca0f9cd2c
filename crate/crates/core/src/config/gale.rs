use crate::arith::{FieldElement, RealAlgebraicField};
use crate::geometry::rank_of;
use crate::linalg::{strict_lp_feasible, Constraint, FieldMatrix, Relation};

use super::{minus, ConfigError, Triangulation, VectorConfiguration};

/// Points `Λ₁, …, Λ_p` of complex affine `m`-space, stored as real and
/// imaginary coordinate vectors, with the virtual chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleDualConfiguration {
    pub field: RealAlgebraicField,
    pub m: usize,
    /// `(Re Λⱼ, Im Λⱼ)`, each of length `m`.
    pub points: Vec<(Vec<FieldElement>, Vec<FieldElement>)>,
    /// Complements of the maximal simplices, sorted.
    pub virtual_chamber: Vec<Vec<usize>>,
}

impl GaleDualConfiguration {
    /// The `(2m+1) × p` matrix with rows all-ones, then alternating real and
    /// imaginary rows.
    pub fn kernel_rows(&self) -> Vec<Vec<FieldElement>> {
        let mut rows = vec![vec![FieldElement::one(&self.field); self.points.len()]];
        for k in 0..self.m {
            rows.push(self.points.iter().map(|(re, _)| re[k].clone()).collect());
            rows.push(self.points.iter().map(|(_, im)| im[k].clone()).collect());
        }
        rows
    }

    /// `Λⱼ` as a point of `R^{2m}`: `(Re₁, Im₁, Re₂, Im₂, …)`.
    pub fn real_point(&self, j: usize) -> Vec<FieldElement> {
        let (re, im) = &self.points[j];
        re.iter().zip(im).flat_map(|(a, b)| [a.clone(), b.clone()]).collect()
    }
}

/// Kernel of the `n × p` matrix of `V` in the basis (all-ones, then the
/// reduced echelon kernel rows after the first). Row `2k+1` is `Re` and row
/// `2k+2` is `Im` of coordinate `k`.
pub fn gale_dual(v: &VectorConfiguration, t: Option<&Triangulation>) -> Result<GaleDualConfiguration, ConfigError> {
    let (p, n) = (v.len(), v.dim());
    if !v.sum().iter().all(FieldElement::is_zero) {
        return Err(ConfigError::NotBalanced);
    }
    if p < n || (p - n) % 2 == 0 {
        return Err(ConfigError::NotOdd);
    }
    if v.rank() != n {
        return Err(ConfigError::NotSpanning);
    }
    let field = v.field();
    let matrix = FieldMatrix::from_columns(field, n, v.vectors())?;
    let kernel = matrix.kernel();
    let (reduced, _) = FieldMatrix::from_rows(field, p, &kernel)?.rref();
    let rows = reduced.to_rows();
    debug_assert_eq!(rows.len(), p - n);
    // The ones vector has coefficient 1 on the first reduced row, so it can
    // replace that row.
    let m = (p - n - 1) / 2;
    let points = (0..p)
        .map(|j| {
            let re = (0..m).map(|k| rows[1 + 2 * k][j].clone()).collect();
            let im = (0..m).map(|k| rows[2 + 2 * k][j].clone()).collect();
            (re, im)
        })
        .collect();
    let virtual_chamber = match t {
        Some(t) => {
            let all: Vec<usize> = (0..p).collect();
            let mut chamber: Vec<Vec<usize>> = t.maximal().iter().map(|s| minus(&all, s)).collect();
            chamber.sort();
            chamber
        }
        None => Vec::new(),
    };
    Ok(GaleDualConfiguration { field: field.clone(), m, points, virtual_chamber })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberMember {
    pub indices: Vec<usize>,
    /// `|σ| = p − n`.
    pub cardinality_ok: bool,
    /// Origin in the interior of the convex hull of `{Λᵢ : i ∈ σ}` in `R^{2m}`.
    pub interior: bool,
    /// Convex weights witnessing the interior condition.
    pub weights: Option<Vec<FieldElement>>,
}

/// Heuristic: the interior condition is one plausible reading of the chamber
/// requirement and is reported, never enforced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberReport {
    pub members: Vec<ChamberMember>,
    pub all_cardinalities_ok: bool,
    pub all_interior: bool,
    pub heuristic: bool,
}

/// For each `σ`: strictly positive weights summing to one with `Σ wᵢ Λᵢ = 0`,
/// and the points `Λᵢ` affinely spanning `R^{2m}`.
pub fn chamber_check(g: &GaleDualConfiguration, n: usize) -> Result<ChamberReport, ConfigError> {
    let p = g.points.len();
    let mut members = Vec::with_capacity(g.virtual_chamber.len());
    for sigma in &g.virtual_chamber {
        let cardinality_ok = p >= n && sigma.len() == p - n;
        let (interior, weights) = interior_weights(g, sigma)?;
        members.push(ChamberMember { indices: sigma.clone(), cardinality_ok, interior, weights });
    }
    Ok(ChamberReport {
        all_cardinalities_ok: members.iter().all(|m| m.cardinality_ok),
        all_interior: members.iter().all(|m| m.interior),
        members,
        heuristic: true,
    })
}

fn interior_weights(g: &GaleDualConfiguration, sigma: &[usize]) -> Result<(bool, Option<Vec<FieldElement>>), ConfigError> {
    if sigma.is_empty() {
        return Ok((false, None));
    }
    let field = &g.field;
    let d = 2 * g.m;
    let pts: Vec<Vec<FieldElement>> = sigma.iter().map(|&i| g.real_point(i)).collect();
    let diffs: Vec<Vec<FieldElement>> =
        pts[1..].iter().map(|q| q.iter().zip(&pts[0]).map(|(a, b)| a - b).collect()).collect();
    let refs: Vec<&[FieldElement]> = diffs.iter().map(Vec::as_slice).collect();
    if rank_of(field, d, &refs) != d {
        return Ok((false, None));
    }
    let k = sigma.len();
    let mut system = Vec::with_capacity(2 * k + d + 1);
    for i in 0..k {
        let mut e = vec![FieldElement::zero(field); k];
        e[i] = FieldElement::one(field);
        system.push(Constraint::positive(e));
    }
    system.push(Constraint::new(vec![FieldElement::one(field); k], Relation::Equal, FieldElement::one(field)));
    for c in 0..d {
        system.push(Constraint::zero(pts.iter().map(|q| q[c].clone()).collect()));
    }
    let w = strict_lp_feasible(field, k, &system)?;
    Ok((w.is_some(), w))
}
