//! Machine-readable reports. Every function returns a JSON value whose key
//! order and content depend only on the input.

use serde_json::{json, Value};

use quasitoric_core::config::{augment, chamber_check, config_validate, gale_dual, Triangulation, VectorConfiguration};
use quasitoric_core::geometry::{
    face_lattice, fan_predicates, is_polytopal, is_simple, normal_fan, vertices_from_halfspaces, Fan, FanReport,
    HalfspaceRep,
};
use quasitoric_core::lattice::{
    chart_groups, is_quasirational, ql_is_lattice, ray_generator, triple_validate, Body, ChartClass, FundamentalTriple,
    Quasilattice,
};

use crate::doc::{configuration_doc, element_doc, fan_doc, vector_doc, vectors_doc, Loaded};
use crate::error::CliError;

fn to_value<T: serde::Serialize>(x: T) -> Value {
    serde_json::to_value(x).expect("documents serialize")
}

fn one_based(s: &[usize]) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

fn predicates(r: &FanReport) -> Value {
    json!({
        "face_closed": r.face_closed,
        "intersections_proper": r.intersections_proper,
        "valid": r.valid,
        "simplicial": r.simplicial,
        "complete": r.complete,
    })
}

pub fn analyze_polytope(h: &HalfspaceRep) -> Result<Value, CliError> {
    let v = vertices_from_halfspaces(h)?;
    let lattice = face_lattice(h, &v);
    let simple = is_simple(h, &v);
    let fan = normal_fan(h)?;
    let report = fan_predicates(&fan)?;
    let faces: Vec<Value> =
        lattice.faces.iter().map(|f| json!({"dim": f.dim, "facets": one_based(&f.facets)})).collect();
    Ok(json!({
        "dimension": h.dim(),
        "vertices": to_value(vectors_doc(&v.vertices)),
        "vertex_facets": v.vertex_facets.iter().map(|s| one_based(s)).collect::<Vec<_>>(),
        "redundant_facets": one_based(&v.redundant),
        "f_vector": lattice.f_vector(h.dim()),
        "faces": faces,
        "simple": simple,
        "normal_fan": to_value(fan_doc(&fan)),
        "fan_predicates": predicates(&report),
        "simple_iff_simplicial": simple == report.simplicial,
    }))
}

pub fn analyze_fan(f: &Fan) -> Result<Value, CliError> {
    Ok(json!({
        "dimension": f.dim(),
        "fan": to_value(fan_doc(f)),
        "fan_predicates": predicates(&fan_predicates(f)?),
    }))
}

pub fn analyze(l: &Loaded) -> Result<Value, CliError> {
    match l.body() {
        Some(Body::Polytope(h)) => analyze_polytope(&h),
        Some(Body::Fan(f)) => analyze_fan(&f),
        None => Err(CliError::MissingInput("document has no polytope or fan".into())),
    }
}

pub fn check_triple(t: &FundamentalTriple) -> Result<Value, CliError> {
    let r = triple_validate(t)?;
    let coefficients: Vec<Vec<String>> =
        r.coefficients.iter().map(|c| c.iter().map(ToString::to_string).collect()).collect();
    Ok(json!({
        "coefficients": coefficients,
        "simple": r.simple,
        "normals_span_quasilattice": r.normals_span_quasilattice,
        "warnings": r.warnings,
    }))
}

pub fn quasirational(directions: &[Vec<quasitoric_core::arith::FieldElement>], q: &Quasilattice) -> Result<Value, CliError> {
    let mut rays = Vec::with_capacity(directions.len());
    for d in directions {
        rays.push(match ray_generator(q, d)? {
            Some(g) => json!({
                "generator": to_value(vector_doc(&g.vector)),
                "scale": to_value(element_doc(&g.scale)),
                "coefficients": g.coefficients.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "canonical": g.canonical,
            }),
            None => Value::Null,
        });
    }
    Ok(json!({
        "quasirational": is_quasirational(q, directions)?,
        "rays": rays,
    }))
}

pub fn quasilattice_summary(q: &Quasilattice) -> Value {
    json!({
        "generators": q.generators().len(),
        "flattened_rank": q.flattened_rank(),
        "is_lattice": ql_is_lattice(q),
    })
}

pub fn charts(t: &FundamentalTriple) -> Result<Value, CliError> {
    let charts: Vec<Value> = chart_groups(t)?
        .iter()
        .map(|c| {
            let (class, order) = match &c.classification {
                ChartClass::Trivial => ("trivial", Value::from("1")),
                ChartClass::Finite(k) => ("finite", Value::from(k.to_string())),
                ChartClass::Infinite => ("infinite", Value::Null),
            };
            json!({
                "vertex": c.vertex + 1,
                "active": one_based(&c.active),
                "classification": class,
                "order": order,
                "images": to_value(vectors_doc(&c.images)),
            })
        })
        .collect();
    Ok(json!({
        "quasilattice": quasilattice_summary(&t.quasilattice),
        "charts": charts,
    }))
}

pub fn validate_config(v: &VectorConfiguration, t: &Triangulation) -> Result<Value, CliError> {
    let r = config_validate(v, t)?;
    Ok(json!({
        "p": r.p,
        "n": r.n,
        "independent": r.independent,
        "axiom_faces": r.axiom_faces,
        "axiom_intersections": r.axiom_intersections,
        "axiom_covering": r.axiom_covering,
        "ghosts_disjoint": r.ghosts_disjoint,
        "triangulated": r.is_triangulated(),
        "sum": to_value(vector_doc(&r.sum)),
        "balanced": r.balanced,
        "odd": r.odd,
        "m": r.m,
        "spanning": r.spanning,
        "complete": r.complete,
        "complete_iff_spanning": r.complete_iff_spanning,
    }))
}

pub fn augment_report(t: &FundamentalTriple) -> Result<Value, CliError> {
    let a = augment(t)?;
    Ok(json!({
        "configuration": to_value(configuration_doc(&a.configuration, &a.triangulation)),
        "report": validate_config(&a.configuration, &a.triangulation)?,
    }))
}

pub fn gale(v: &VectorConfiguration, t: &Triangulation) -> Result<Value, CliError> {
    let g = gale_dual(v, Some(t))?;
    let chamber = chamber_check(&g, v.dim())?;
    let points: Vec<Value> = g
        .points
        .iter()
        .map(|(re, im)| json!({"re": to_value(vector_doc(re)), "im": to_value(vector_doc(im))}))
        .collect();
    let members: Vec<Value> = chamber
        .members
        .iter()
        .map(|m| {
            json!({
                "indices": one_based(&m.indices),
                "cardinality_ok": m.cardinality_ok,
                "interior": m.interior,
                "weights": m.weights.as_ref().map(|w| to_value(vector_doc(w))),
            })
        })
        .collect();
    Ok(json!({
        "m": g.m,
        "points": points,
        "kernel_rows": to_value(vectors_doc(&g.kernel_rows())),
        "virtual_chamber": g.virtual_chamber.iter().map(|s| one_based(s)).collect::<Vec<_>>(),
        "chamber_check": {
            "heuristic": chamber.heuristic,
            "all_cardinalities_ok": chamber.all_cardinalities_ok,
            "all_interior": chamber.all_interior,
            "members": members,
        },
    }))
}

pub fn polytopal(f: &Fan) -> Result<Value, CliError> {
    let offsets = is_polytopal(f)?;
    Ok(json!({
        "polytopal": offsets.is_some(),
        "offsets": offsets.map(|o| to_value(vector_doc(&o))),
    }))
}

fn attempt(r: Result<Value, CliError>) -> Value {
    r.unwrap_or_else(|e| json!({"error": e.diagnostic()}))
}

/// Everything that applies to a document: body analysis, triple checks,
/// charts, augmentation, configuration validation and the Gale dual. Failures
/// are recorded in place as diagnostics.
pub fn full_report(l: &Loaded) -> Value {
    let mut out = serde_json::Map::new();
    if let Some(note) = &l.note {
        out.insert("note".into(), Value::from(note.as_str()));
    }
    if l.body().is_some() {
        out.insert("analysis".into(), attempt(analyze(l)));
    }
    if let Some(Body::Fan(f)) = l.body() {
        if l.polytope.is_none() {
            out.insert("polytopal".into(), attempt(polytopal(&f)));
        }
    }
    if l.quasilattice.is_some() && l.body().is_some() {
        match l.triple() {
            Ok(t) => {
                out.insert("triple".into(), attempt(check_triple(&t)));
                out.insert("quasirational".into(), attempt(quasirational(&t.body.directions(), &t.quasilattice)));
                out.insert("charts".into(), attempt(charts(&t)));
                out.insert("augment".into(), attempt(augment_report(&t)));
            }
            Err(e) => {
                out.insert("triple".into(), json!({"error": e.diagnostic()}));
            }
        }
    }
    if let Some((v, t)) = &l.configuration {
        out.insert("configuration".into(), attempt(validate_config(v, t)));
        out.insert("gale".into(), attempt(gale(v, t)));
    }
    Value::Object(out)
}
