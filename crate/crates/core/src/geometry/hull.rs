use std::collections::BTreeSet;

use crate::arith::{FieldElement, RealAlgebraicField};
use crate::linalg::dot;

use super::polytope::affine_dimension;
use super::{check_vector, sub, subsets, Facet, GeometryError, HalfspaceRep};

/// Irredundant half-space description of the convex hull of `points`, with
/// inward normals. Gift wrapping in the plane, support-plane enumeration in
/// space.
pub fn halfspaces_from_vertices(
    field: &RealAlgebraicField,
    dim: usize,
    points: &[Vec<FieldElement>],
) -> Result<HalfspaceRep, GeometryError> {
    if dim > 3 {
        return Err(GeometryError::DimensionTooHigh(dim));
    }
    for p in points {
        check_vector(field, dim, p)?;
    }
    let refs: Vec<&[FieldElement]> = points.iter().map(Vec::as_slice).collect();
    if dim == 0 || affine_dimension(field, dim, &refs) != Some(dim) {
        return Err(GeometryError::NotFullDimensional);
    }
    let facets = match dim {
        1 => interval(field, points),
        2 => gift_wrap(field, points),
        _ => support_planes(field, points),
    };
    HalfspaceRep::new(field, dim, facets)
}

fn interval(field: &RealAlgebraicField, points: &[Vec<FieldElement>]) -> Vec<Facet> {
    let mut lo = &points[0][0];
    let mut hi = &points[0][0];
    for p in points {
        if p[0].cmp_value(lo).is_lt() {
            lo = &p[0];
        }
        if p[0].cmp_value(hi).is_gt() {
            hi = &p[0];
        }
    }
    vec![
        Facet { normal: vec![FieldElement::one(field)], offset: lo.clone() },
        Facet { normal: vec![FieldElement::from_int(field, -1)], offset: -hi },
    ]
}

fn cross(o: &[FieldElement], a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    let (u, v) = (sub(a, o), sub(b, o));
    &(&u[0] * &v[1]) - &(&u[1] * &v[0])
}

/// Counter-clockwise Jarvis march from the lexicographically smallest point.
fn gift_wrap(field: &RealAlgebraicField, points: &[Vec<FieldElement>]) -> Vec<Facet> {
    let lex = |a: &Vec<FieldElement>, b: &Vec<FieldElement>| a[0].cmp_value(&b[0]).then_with(|| a[1].cmp_value(&b[1]));
    let start = points.iter().min_by(|a, b| lex(a, b)).unwrap().clone();
    let mut facets = Vec::new();
    let mut p = start.clone();
    loop {
        let mut q: Option<&Vec<FieldElement>> = None;
        for r in points {
            if *r == p {
                continue;
            }
            q = match q {
                None => Some(r),
                Some(cur) => {
                    let c = cross(&p, cur, r).signum();
                    // r is clockwise of cur, or collinear and farther
                    let farther = || {
                        let (d1, d2) = (sub(cur, &p), sub(r, &p));
                        dot(field, &d2, &d2).cmp_value(&dot(field, &d1, &d1)).is_gt()
                    };
                    if c < 0 || (c == 0 && farther()) {
                        Some(r)
                    } else {
                        Some(cur)
                    }
                }
            };
        }
        let q = q.expect("at least two distinct points").clone();
        let normal = vec![-(&q[1] - &p[1]), &q[0] - &p[0]];
        let offset = dot(field, &normal, &p);
        facets.push(Facet { normal, offset });
        p = q;
        if p == start {
            break;
        }
    }
    facets
}

fn cross3(u: &[FieldElement], v: &[FieldElement]) -> Vec<FieldElement> {
    vec![
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

/// Every plane through three points with all points on one side, one facet
/// per distinct set of points on the plane.
fn support_planes(field: &RealAlgebraicField, points: &[Vec<FieldElement>]) -> Vec<Facet> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut facets = Vec::new();
    for t in subsets(points.len(), 3) {
        let (a, b, c) = (&points[t[0]], &points[t[1]], &points[t[2]]);
        let mut normal = cross3(&sub(b, a), &sub(c, a));
        if normal.iter().all(FieldElement::is_zero) {
            continue;
        }
        let mut offset = dot(field, &normal, a);
        let signs: Vec<i8> = points.iter().map(|p| (&dot(field, &normal, p) - &offset).signum()).collect();
        if signs.iter().any(|&s| s > 0) && signs.iter().any(|&s| s < 0) {
            continue;
        }
        if signs.iter().all(|&s| s <= 0) {
            normal = normal.iter().map(|x| -x).collect();
            offset = -offset;
        }
        let on: Vec<usize> = (0..points.len()).filter(|&i| signs[i] == 0).collect();
        if seen.insert(on) {
            facets.push(Facet { normal, offset });
        }
    }
    facets
}
