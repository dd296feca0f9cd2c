//! The shipped example documents, built from the exact catalog.

use std::path::PathBuf;

use quasitoric_core::arith::{parse_rational, FieldElement, RealAlgebraicField};
use quasitoric_core::catalog;
use quasitoric_core::config::{Triangulation, VectorConfiguration};
use quasitoric_core::lattice::{Body, FundamentalTriple};

use crate::doc::{
    configuration_doc, fan_doc, pentagon_field_doc, polytope_doc, quasilattice_doc, sqrt_field_doc, vectors_doc,
    Document, FieldDoc,
};
use crate::error::CliError;

/// Names accepted by `examples`; `hirzebruch` also takes `--a`.
pub const NAMES: [&str; 11] = [
    "unit-interval",
    "unit-interval-sqrt2",
    "orbifold-interval",
    "square",
    "square-pyramid",
    "pentagon",
    "kite",
    "thick-rhombus",
    "thin-rhombus",
    "hirzebruch",
    "twisted-prism",
];

/// Values of `a` shipped for the trapezoid family.
pub const HIRZEBRUCH_PARAMETERS: [&str; 5] = ["1", "2", "3", "1/2", "sqrt(2)"];

pub const KITE_NOTE: &str =
    "the configuration is stored exactly as listed; its vectors do not sum to zero, and reports show the exact sum";

/// `QUASITORIC_CORPUS`, or the `corpus` directory at the workspace root.
pub fn corpus_dir() -> PathBuf {
    match std::env::var_os("QUASITORIC_CORPUS") {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus"),
    }
}

/// The parameter `a` from `"p/q"` or `"sqrt(k)"`, with the declaration of its
/// field.
pub fn parse_parameter(text: &str) -> Result<(FieldElement, Option<FieldDoc>), CliError> {
    let t = text.trim();
    if let Some(inner) = t.strip_prefix("sqrt(").and_then(|s| s.strip_suffix(')')) {
        let k: i64 = inner.trim().parse().map_err(|_| CliError::ParseError(format!("bad square root {t:?}")))?;
        let r = (k as f64).sqrt().round() as i64;
        if k > 0 && r * r == k {
            let f = RealAlgebraicField::rationals();
            return Ok((FieldElement::from_int(&f, r), None));
        }
        let f = RealAlgebraicField::sqrt(k)?;
        return Ok((FieldElement::generator(&f), Some(sqrt_field_doc(k))));
    }
    let q = parse_rational(t)?;
    Ok((FieldElement::from_rational(&RealAlgebraicField::rationals(), q), None))
}

/// File-name form of a parameter: `1/2` becomes `1_2`, `sqrt(2)` becomes
/// `sqrt2`.
pub fn parameter_slug(text: &str) -> String {
    text.trim().replace('/', "_").replace(['(', ')', ' '], "")
}

fn triple_document(name: &str, field: Option<FieldDoc>, t: &FundamentalTriple) -> Document {
    let mut d = Document { name: Some(name.into()), field, ..Document::default() };
    match &t.body {
        Body::Polytope(h) => d.polytope = Some(polytope_doc(h)),
        Body::Fan(f) => d.fan = Some(fan_doc(f)),
    }
    d.quasilattice = Some(quasilattice_doc(&t.quasilattice));
    d.normals = Some(vectors_doc(&t.normals));
    d
}

fn with_configuration(mut d: Document, c: (VectorConfiguration, Triangulation)) -> Document {
    d.configuration = Some(configuration_doc(&c.0, &c.1));
    d
}

/// The document for `name`; `a` applies to `hirzebruch` only (default 1).
pub fn entry(name: &str, a: Option<&str>) -> Result<Document, CliError> {
    let pentagon = || Some(pentagon_field_doc());
    let d = match name {
        "unit-interval" => triple_document(name, None, &catalog::unit_interval_triple()),
        "unit-interval-sqrt2" => triple_document(name, Some(sqrt_field_doc(2)), &catalog::unit_interval_sqrt2_triple()),
        "orbifold-interval" => triple_document(name, None, &catalog::orbifold_interval_triple()),
        "square" => triple_document(name, None, &catalog::square_triple()),
        "square-pyramid" => triple_document(name, None, &catalog::square_pyramid_triple()),
        "pentagon" => triple_document(name, pentagon(), &catalog::pentagon_triple()),
        "kite" => {
            let mut d = with_configuration(
                triple_document(name, pentagon(), &catalog::kite_triple()),
                catalog::kite_configuration(),
            );
            d.note = Some(KITE_NOTE.into());
            d
        }
        "thick-rhombus" => with_configuration(
            triple_document(name, pentagon(), &catalog::thick_rhombus_triple()),
            catalog::thick_rhombus_configuration(),
        ),
        "thin-rhombus" => triple_document(name, pentagon(), &catalog::thin_rhombus_triple()),
        "hirzebruch" => {
            let text = a.unwrap_or("1");
            let (a, field) = parse_parameter(text)?;
            if !a.is_positive() {
                return Err(CliError::ParseError(format!("the parameter a must be positive, got {text}")));
            }
            let full = format!("hirzebruch-{}", parameter_slug(text));
            with_configuration(
                triple_document(&full, field, &catalog::hirzebruch_triple(&a)),
                catalog::hirzebruch_configuration(&a),
            )
        }
        "twisted-prism" => triple_document(name, None, &catalog::twisted_prism_triple()),
        other => return Err(CliError::ParseError(format!("unknown example {other:?}; known: {}", NAMES.join(", ")))),
    };
    Ok(d)
}

/// Every shipped document, one per name and one per trapezoid parameter.
pub fn all_entries() -> Vec<Document> {
    let mut out = Vec::new();
    for name in NAMES {
        if name == "hirzebruch" {
            out.extend(HIRZEBRUCH_PARAMETERS.iter().map(|a| entry(name, Some(a)).expect("shipped parameter")));
        } else {
            out.push(entry(name, None).expect("shipped example"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters() {
        let (a, f) = parse_parameter("sqrt(2)").unwrap();
        assert!(f.is_some() && !a.is_rational());
        let (a, f) = parse_parameter("sqrt(4)").unwrap();
        assert!(f.is_none() && a == FieldElement::from_int(a.field(), 2));
        let (a, _) = parse_parameter("2/1").unwrap();
        assert_eq!(a, FieldElement::from_int(a.field(), 2));
        assert_eq!(parameter_slug("1/2"), "1_2");
        assert_eq!(parameter_slug("sqrt(2)"), "sqrt2");
        assert!(entry("hirzebruch", Some("-1")).is_err());
    }

    #[test]
    fn entries_roundtrip_through_json() {
        for d in all_entries() {
            let again = Document::from_json(&d.to_json()).unwrap();
            assert_eq!(again, d);
            again.load().unwrap();
        }
    }
}
