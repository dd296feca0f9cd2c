use crate::arith::{FieldElement, Rational};
use crate::geometry::{fan_predicates, normal_fan, sub, Fan};
use crate::lattice::{ql_contains, ql_span, triple_validate, Body, FundamentalTriple};

use super::{config_validate, ConfigError, Triangulation, VectorConfiguration};

/// A balanced odd configuration encoding a fundamental triple. Vector `i` is
/// the image of the `i`-th standard basis vector under the calibration; the
/// ghosts are the vectors outside every simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedTriple {
    pub configuration: VectorConfiguration,
    pub triangulation: Triangulation,
}

impl AugmentedTriple {
    /// `(index, vector)` pairs of the calibration.
    pub fn calibration(&self) -> impl Iterator<Item = (usize, &Vec<FieldElement>)> {
        self.configuration.vectors().iter().enumerate()
    }
}

/// Extends the ray generators of a complete simplicial triple by ghost
/// vectors until the configuration generates the quasilattice, is balanced
/// and is odd.
///
/// Quasilattice generators outside the current Z-span are appended in order,
/// each tested against everything appended so far. Then, with `S` the sum and
/// `r = p − n`: `S ≠ 0, r` even appends `−S`; `S ≠ 0, r` odd appends `g` and
/// `−S − g` for the first generator `g` with `−S − g ≠ 0` (falling back to
/// `2g`); `S = 0, r` even appends `g₁, g₁, −2g₁`; `S = 0, r` odd appends
/// nothing.
pub fn augment(t: &FundamentalTriple) -> Result<AugmentedTriple, ConfigError> {
    triple_validate(t)?;
    let fan: Fan = match &t.body {
        Body::Fan(f) => f.clone(),
        Body::Polytope(h) => normal_fan(h)?,
    };
    let report = fan_predicates(&fan)?;
    if !report.complete {
        return Err(ConfigError::FanNotComplete);
    }
    if !report.simplicial {
        return Err(ConfigError::FanNotSimplicial);
    }
    let q = &t.quasilattice;
    let field = q.field();
    let n = q.dim();
    let mut vectors = t.normals.clone();

    for g in q.generators() {
        let span = ql_span(field, n, vectors.clone())?;
        if ql_contains(&span, g).is_none() {
            vectors.push(g.clone());
        }
    }

    let sum = |vs: &[Vec<FieldElement>]| -> Vec<FieldElement> {
        let zero = FieldElement::zero(field);
        (0..n).map(|i| vs.iter().fold(zero.clone(), |acc, v| &acc + &v[i])).collect()
    };
    let neg = |v: &[FieldElement]| -> Vec<FieldElement> { v.iter().map(|x| -x).collect() };
    let scale = |v: &[FieldElement], k: i64| -> Vec<FieldElement> {
        v.iter().map(|x| x.scale(&Rational::from_integer(k.into()))).collect()
    };
    let is_zero = |v: &[FieldElement]| v.iter().all(FieldElement::is_zero);

    let s = sum(&vectors);
    let r = vectors.len() - n;
    let g1 = q.generators()[0].clone();
    match (is_zero(&s), r.is_multiple_of(2)) {
        (false, true) => vectors.push(neg(&s)),
        (false, false) => {
            let minus_s = neg(&s);
            let pick = q
                .generators()
                .iter()
                .find(|g| !is_zero(&sub(&minus_s, g)))
                .cloned();
            let (a, b) = match pick {
                Some(g) => {
                    let rest = sub(&minus_s, &g);
                    (g, rest)
                }
                None => {
                    let g2 = scale(&g1, 2);
                    let rest = sub(&minus_s, &g2);
                    (g2, rest)
                }
            };
            vectors.push(a);
            vectors.push(b);
        }
        (true, true) => {
            vectors.push(g1.clone());
            vectors.push(g1.clone());
            vectors.push(scale(&g1, -2));
        }
        (true, false) => {}
    }
    debug_assert!(vectors.iter().all(|v| !is_zero(v) && ql_contains(q, v).is_some()));

    let d = t.normals.len();
    let ghosts: Vec<usize> = (d..vectors.len()).collect();
    let configuration = VectorConfiguration::new(field, n, vectors, ghosts)?;
    let triangulation = Triangulation::new(fan.cones().iter().cloned());
    Ok(AugmentedTriple { configuration, triangulation })
}

/// The fan of the simplices, the Z-span of all vectors and the ray generators
/// as normals.
pub fn decode(v: &VectorConfiguration, t: &Triangulation) -> Result<FundamentalTriple, ConfigError> {
    let report = config_validate(v, t)?;
    if !report.ghosts_disjoint {
        return Err(ConfigError::InvalidConfiguration("a ghost vector appears in a simplex".into()));
    }
    if !report.independent {
        return Err(ConfigError::InvalidConfiguration("a simplex has dependent vectors".into()));
    }
    if !(report.axiom_faces && report.axiom_intersections && report.axiom_covering) {
        return Err(ConfigError::InvalidConfiguration("triangulation axioms fail".into()));
    }
    let used: Vec<usize> = t.support().into_iter().collect();
    let position = |i: usize| used.iter().position(|&u| u == i).expect("index in support");
    let rays: Vec<Vec<FieldElement>> = used.iter().map(|&i| v.vectors()[i].clone()).collect();
    let cones: Vec<Vec<usize>> = t.simplices().map(|s| s.iter().map(|&i| position(i)).collect()).collect();
    let fan = Fan::new(v.field(), v.dim(), rays.clone(), cones)?;
    let quasilattice = ql_span(v.field(), v.dim(), v.vectors().to_vec())?;
    Ok(FundamentalTriple { body: Body::Fan(fan), quasilattice, normals: rays })
}
