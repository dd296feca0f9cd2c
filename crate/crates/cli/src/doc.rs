//! JSON documents: fields, elements, polytopes, fans, triples and
//! configurations.
//!
//! Rationals are text (`"3"`, `"-1/2"`). An element is either a rational or
//! its list of power-basis coefficients, so `["1/2", "1/2"]` is `(1 + α)/2`.
//! Indices in fans and configurations are 1-based.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use quasitoric_core::arith::{parse_rational, FieldElement, Rational, RealAlgebraicField};
use quasitoric_core::config::{Triangulation, VectorConfiguration};
use quasitoric_core::geometry::{Facet, Fan, HalfspaceRep};
use quasitoric_core::lattice::{ql_span, Body, FundamentalTriple, Quasilattice};

use crate::error::CliError;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum ElementDoc {
    Rational(String),
    Coefficients(Vec<String>),
}

pub type VectorDoc = Vec<ElementDoc>;

/// `Q(α)` where `α` is the root of `minpoly` (ascending coefficients) inside
/// `interval`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FieldDoc {
    pub minpoly: Vec<String>,
    pub interval: [String; 2],
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FacetDoc {
    pub normal: VectorDoc,
    pub offset: ElementDoc,
}

/// `{x : ⟨normal, x⟩ ≥ offset}` for every facet.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PolytopeDoc {
    pub n: usize,
    pub facets: Vec<FacetDoc>,
}

/// Rays and maximal cones; faces are added on load.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FanDoc {
    pub n: usize,
    pub rays: Vec<VectorDoc>,
    pub cones: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct QuasilatticeDoc {
    pub generators: Vec<VectorDoc>,
}

/// Simplices are listed by their maximal members; faces are added on load.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ConfigurationDoc {
    pub vectors: Vec<VectorDoc>,
    pub triangulation: Vec<Vec<usize>>,
    #[serde(default)]
    pub ghosts: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polytope: Option<PolytopeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fan: Option<FanDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quasilattice: Option<QuasilatticeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normals: Option<Vec<VectorDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub configuration: Option<ConfigurationDoc>,
}

impl Document {
    /// Also accepts a bare polytope (`n`, `facets`) or a bare configuration
    /// (`vectors`, `triangulation`, `ghosts`) at the top level.
    pub fn from_json(text: &str) -> Result<Document, CliError> {
        let mut value: Value = serde_json::from_str(text)?;
        let Value::Object(map) = &mut value else {
            return Err(CliError::ParseError("document must be a JSON object".into()));
        };
        if map.contains_key("facets") && !map.contains_key("polytope") {
            let mut inner = serde_json::Map::new();
            for key in ["n", "facets"] {
                if let Some(v) = map.remove(key) {
                    inner.insert(key.into(), v);
                }
            }
            map.insert("polytope".into(), Value::Object(inner));
        }
        if map.contains_key("vectors") && !map.contains_key("configuration") {
            let mut inner = serde_json::Map::new();
            for key in ["vectors", "triangulation", "ghosts"] {
                if let Some(v) = map.remove(key) {
                    inner.insert(key.into(), v);
                }
            }
            map.insert("configuration".into(), Value::Object(inner));
        }
        Ok(serde_json::from_value(value)?)
    }

    pub fn to_json(&self) -> String {
        pretty(&serde_json::to_value(self).expect("documents serialize")) + "\n"
    }

    pub fn load(&self) -> Result<Loaded, CliError> {
        let field = match &self.field {
            Some(fd) => parse_field(fd)?,
            None => RealAlgebraicField::rationals(),
        };
        let polytope = self.polytope.as_ref().map(|p| parse_polytope(&field, p)).transpose()?;
        let fan = self.fan.as_ref().map(|f| parse_fan(&field, f)).transpose()?;
        let dim = polytope.as_ref().map(HalfspaceRep::dim).or(fan.as_ref().map(Fan::dim));
        let quasilattice = match &self.quasilattice {
            Some(q) => {
                let gens = parse_vectors(&field, &q.generators)?;
                let n = dim.or(gens.first().map(Vec::len)).unwrap_or(0);
                Some(ql_span(&field, n, gens)?)
            }
            None => None,
        };
        let normals = self.normals.as_ref().map(|ns| parse_vectors(&field, ns)).transpose()?;
        let configuration = self.configuration.as_ref().map(|c| parse_configuration(&field, c)).transpose()?;
        Ok(Loaded { field, field_doc: self.field.clone(), note: self.note.clone(), polytope, fan, quasilattice, normals, configuration })
    }
}

/// A document with every part parsed into exact objects.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub field: RealAlgebraicField,
    pub field_doc: Option<FieldDoc>,
    pub note: Option<String>,
    pub polytope: Option<HalfspaceRep>,
    pub fan: Option<Fan>,
    pub quasilattice: Option<Quasilattice>,
    pub normals: Option<Vec<Vec<FieldElement>>>,
    pub configuration: Option<(VectorConfiguration, Triangulation)>,
}

impl Loaded {
    /// The polytope if present, else the fan.
    pub fn body(&self) -> Option<Body> {
        match (&self.polytope, &self.fan) {
            (Some(p), _) => Some(Body::Polytope(p.clone())),
            (None, Some(f)) => Some(Body::Fan(f.clone())),
            (None, None) => None,
        }
    }

    /// Normals default to the facet normals or rays of the body.
    pub fn triple(&self) -> Result<FundamentalTriple, CliError> {
        let body = self.body().ok_or_else(|| CliError::MissingInput("document has no polytope or fan".into()))?;
        let quasilattice =
            self.quasilattice.clone().ok_or_else(|| CliError::MissingInput("document has no quasilattice".into()))?;
        let normals = self.normals.clone().unwrap_or_else(|| body.directions());
        Ok(FundamentalTriple { body, quasilattice, normals })
    }

    pub fn configuration(&self) -> Result<&(VectorConfiguration, Triangulation), CliError> {
        self.configuration.as_ref().ok_or_else(|| CliError::MissingInput("document has no configuration".into()))
    }
}

pub fn parse_field(fd: &FieldDoc) -> Result<RealAlgebraicField, CliError> {
    let minpoly = fd.minpoly.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
    let interval = (parse_rational(&fd.interval[0])?, parse_rational(&fd.interval[1])?);
    Ok(RealAlgebraicField::new(minpoly, interval)?)
}

pub fn parse_element(field: &RealAlgebraicField, e: &ElementDoc) -> Result<FieldElement, CliError> {
    match e {
        ElementDoc::Rational(s) => Ok(FieldElement::from_rational(field, parse_rational(s)?)),
        ElementDoc::Coefficients(cs) => {
            if cs.len() > field.degree() {
                return Err(CliError::FieldMismatch(format!(
                    "element has {} coefficients but the field has degree {}",
                    cs.len(),
                    field.degree()
                )));
            }
            let coeffs = cs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
            Ok(FieldElement::new(field, coeffs))
        }
    }
}

pub fn parse_vector(field: &RealAlgebraicField, v: &[ElementDoc]) -> Result<Vec<FieldElement>, CliError> {
    v.iter().map(|e| parse_element(field, e)).collect()
}

pub fn parse_vectors(field: &RealAlgebraicField, vs: &[VectorDoc]) -> Result<Vec<Vec<FieldElement>>, CliError> {
    vs.iter().map(|v| parse_vector(field, v)).collect()
}

fn parse_polytope(field: &RealAlgebraicField, p: &PolytopeDoc) -> Result<HalfspaceRep, CliError> {
    let facets = p
        .facets
        .iter()
        .map(|f| Ok(Facet { normal: parse_vector(field, &f.normal)?, offset: parse_element(field, &f.offset)? }))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(HalfspaceRep::new(field, p.n, facets)?)
}

fn zero_based(sets: &[Vec<usize>], len: usize, what: &str) -> Result<Vec<Vec<usize>>, CliError> {
    sets.iter()
        .map(|s| {
            s.iter()
                .map(|&i| {
                    if i == 0 || i > len {
                        Err(CliError::ParseError(format!("{what} index {i} outside 1..={len}")))
                    } else {
                        Ok(i - 1)
                    }
                })
                .collect()
        })
        .collect()
}

fn parse_fan(field: &RealAlgebraicField, f: &FanDoc) -> Result<Fan, CliError> {
    let rays = parse_vectors(field, &f.rays)?;
    let cones = zero_based(&f.cones, rays.len(), "ray")?;
    Ok(Fan::from_maximal_cones(field, f.n, rays, cones)?)
}

fn parse_configuration(
    field: &RealAlgebraicField,
    c: &ConfigurationDoc,
) -> Result<(VectorConfiguration, Triangulation), CliError> {
    let vectors = parse_vectors(field, &c.vectors)?;
    let n = vectors.first().map(Vec::len).ok_or_else(|| CliError::ParseError("configuration has no vectors".into()))?;
    let simplices = zero_based(&c.triangulation, vectors.len(), "vector")?;
    let ghosts = zero_based(std::slice::from_ref(&c.ghosts), vectors.len(), "ghost")?.remove(0);
    let v = VectorConfiguration::new(field, n, vectors, ghosts)?;
    Ok((v, Triangulation::closure_of(simplices)))
}

pub fn rational_text(q: &Rational) -> String {
    q.to_string()
}

pub fn element_doc(x: &FieldElement) -> ElementDoc {
    match x.to_rational() {
        Some(q) => ElementDoc::Rational(rational_text(&q)),
        None => ElementDoc::Coefficients(x.coeffs().iter().map(rational_text).collect()),
    }
}

pub fn vector_doc(v: &[FieldElement]) -> VectorDoc {
    v.iter().map(element_doc).collect()
}

pub fn vectors_doc(vs: &[Vec<FieldElement>]) -> Vec<VectorDoc> {
    vs.iter().map(|v| vector_doc(v)).collect()
}

fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().map(|i| i + 1).collect()).collect()
}

pub fn polytope_doc(h: &HalfspaceRep) -> PolytopeDoc {
    PolytopeDoc {
        n: h.dim(),
        facets: h.facets().iter().map(|f| FacetDoc { normal: vector_doc(&f.normal), offset: element_doc(&f.offset) }).collect(),
    }
}

pub fn fan_doc(f: &Fan) -> FanDoc {
    FanDoc { n: f.dim(), rays: vectors_doc(f.rays()), cones: one_based(&f.maximal_cones()) }
}

pub fn quasilattice_doc(q: &Quasilattice) -> QuasilatticeDoc {
    QuasilatticeDoc { generators: vectors_doc(q.generators()) }
}

pub fn configuration_doc(v: &VectorConfiguration, t: &Triangulation) -> ConfigurationDoc {
    ConfigurationDoc {
        vectors: vectors_doc(v.vectors()),
        triangulation: one_based(&t.maximal()),
        ghosts: v.ghosts().iter().map(|g| g + 1).collect(),
    }
}

/// Declaration of `Q(√k)` as built by [`RealAlgebraicField::sqrt`].
pub fn sqrt_field_doc(k: i64) -> FieldDoc {
    FieldDoc { minpoly: vec![(-k).to_string(), "0".into(), "1".into()], interval: ["0".into(), (k + 1).to_string()] }
}

/// Declaration of the field of `tan 72°`.
pub fn pentagon_field_doc() -> FieldDoc {
    FieldDoc {
        minpoly: ["5", "0", "-10", "0", "1"].iter().map(|s| s.to_string()).collect(),
        interval: ["3".into(), "4".into()],
    }
}

/// Indented JSON with arrays of scalars kept on one line, so an element or a
/// vector of rationals reads as a single row.
pub fn pretty(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && (!x.is_array() || is_scalar_array(x))),
        _ => true,
    }
}

fn is_scalar_array(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()))
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if is_flat(v) => {
            let parts: Vec<String> = items.iter().map(|x| serde_json::to_string(x).expect("json")).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, x, depth + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(key).expect("json"));
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("json")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_parse_both_forms() {
        let f = parse_field(&sqrt_field_doc(5)).unwrap();
        let half = parse_element(&f, &ElementDoc::Rational("1/2".into())).unwrap();
        let phi = parse_element(&f, &ElementDoc::Coefficients(vec!["1/2".into(), "1/2".into()])).unwrap();
        assert_eq!(&(&phi * &phi) - &phi, FieldElement::one(&f));
        assert_eq!(element_doc(&half), ElementDoc::Rational("1/2".into()));
        assert_eq!(element_doc(&phi), ElementDoc::Coefficients(vec!["1/2".into(), "1/2".into()]));
        let bad = ElementDoc::Coefficients(vec!["1".into(); 3]);
        assert!(matches!(parse_element(&f, &bad), Err(CliError::FieldMismatch(_))));
    }

    #[test]
    fn bare_forms_are_accepted() {
        let d = Document::from_json(r#"{"n": 1, "facets": [{"normal": ["1"], "offset": "0"}, {"normal": ["-1"], "offset": "-1"}]}"#).unwrap();
        assert_eq!(d.polytope.as_ref().unwrap().facets.len(), 2);
        let d = Document::from_json(r#"{"vectors": [["1"], ["-2"], ["1"]], "triangulation": [[1], [3]], "ghosts": [2]}"#).unwrap();
        let l = d.load().unwrap();
        let (v, t) = l.configuration().unwrap();
        assert_eq!(v.ghosts(), &[1]);
        assert!(t.simplices().any(|s| s.is_empty()));
    }

    #[test]
    fn one_based_indices_are_checked() {
        let d = Document::from_json(r#"{"vectors": [["1"], ["-1"]], "triangulation": [[0]]}"#).unwrap();
        assert!(matches!(d.load(), Err(CliError::ParseError(_))));
    }
}
