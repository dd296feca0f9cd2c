//! Exact feasibility of mixed strict/non-strict linear systems by
//! Fourier–Motzkin elimination.

use std::collections::HashMap;

use crate::arith::{FieldElement, RealAlgebraicField};

use super::matrix::dot;
use super::LinalgError;

/// Largest number of variables accepted by [`strict_lp_feasible`].
pub const VARIABLE_BUDGET: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Greater,
    GreaterEq,
    Equal,
}

/// `⟨coeffs, x⟩ (relation) rhs`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<FieldElement>,
    pub rhs: FieldElement,
    pub relation: Relation,
}

impl Constraint {
    pub fn new(coeffs: Vec<FieldElement>, relation: Relation, rhs: FieldElement) -> Self {
        Constraint { coeffs, rhs, relation }
    }

    /// `⟨coeffs, x⟩ > 0`
    pub fn positive(coeffs: Vec<FieldElement>) -> Self {
        let rhs = FieldElement::zero(coeffs[0].field());
        Constraint { coeffs, rhs, relation: Relation::Greater }
    }

    /// `⟨coeffs, x⟩ ≥ 0`
    pub fn nonnegative(coeffs: Vec<FieldElement>) -> Self {
        let rhs = FieldElement::zero(coeffs[0].field());
        Constraint { coeffs, rhs, relation: Relation::GreaterEq }
    }

    /// `⟨coeffs, x⟩ = 0`
    pub fn zero(coeffs: Vec<FieldElement>) -> Self {
        let rhs = FieldElement::zero(coeffs[0].field());
        Constraint { coeffs, rhs, relation: Relation::Equal }
    }

    pub fn is_satisfied_by(&self, x: &[FieldElement]) -> bool {
        let lhs = dot(self.rhs.field(), &self.coeffs, x);
        let s = (&lhs - &self.rhs).signum();
        match self.relation {
            Relation::Greater => s > 0,
            Relation::GreaterEq => s >= 0,
            Relation::Equal => s == 0,
        }
    }
}

/// Working inequality `⟨a, x⟩ ≥ b` (or `>` when strict) with the set of input
/// inequalities it was combined from.
#[derive(Clone, Debug)]
struct Row {
    a: Vec<FieldElement>,
    b: FieldElement,
    strict: bool,
    history: Vec<u64>,
}

impl Row {
    fn history_len(&self) -> usize {
        self.history.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Scales so that the first nonzero coefficient has absolute value 1.
    fn normalize(&mut self) {
        if let Some(lead) = self.a.iter().find(|x| !x.is_zero()) {
            let inv = lead.abs().inv().expect("nonzero coefficient");
            for x in &mut self.a {
                *x = &*x * &inv;
            }
            self.b = &self.b * &inv;
        }
    }

    /// For a row with no variables left: does `0 (≥|>) b` hold?
    fn trivially_holds(&self) -> bool {
        let s = self.b.signum();
        if self.strict {
            s < 0
        } else {
            s <= 0
        }
    }

    fn is_constant(&self) -> bool {
        self.a.iter().all(FieldElement::is_zero)
    }
}

/// A substitution `x_var = constant + ⟨coeffs, x⟩` recorded while eliminating
/// equalities. `coeffs[var]` is zero.
struct Substitution {
    var: usize,
    coeffs: Vec<FieldElement>,
    constant: FieldElement,
}

/// Finds a point satisfying every constraint, or returns `Ok(None)` when the
/// system is infeasible. The witness is deterministic: each variable is set to
/// the midpoint of its feasible interval given the earlier ones (or one unit
/// past a one-sided bound, or zero when unconstrained).
pub fn strict_lp_feasible(
    field: &RealAlgebraicField,
    num_vars: usize,
    constraints: &[Constraint],
) -> Result<Option<Vec<FieldElement>>, LinalgError> {
    if num_vars > VARIABLE_BUDGET {
        return Err(LinalgError::VariableBudgetExceeded { vars: num_vars, budget: VARIABLE_BUDGET });
    }
    for c in constraints {
        if c.coeffs.len() != num_vars {
            return Err(LinalgError::DimensionMismatch { expected: num_vars, found: c.coeffs.len() });
        }
        if c.rhs.field() != field || c.coeffs.iter().any(|x| x.field() != field) {
            return Err(LinalgError::MixedFields);
        }
    }
    let zero = FieldElement::zero(field);

    let mut equalities: Vec<(Vec<FieldElement>, FieldElement)> = Vec::new();
    let mut inequalities: Vec<(Vec<FieldElement>, FieldElement, bool)> = Vec::new();
    for c in constraints {
        match c.relation {
            Relation::Equal => equalities.push((c.coeffs.clone(), c.rhs.clone())),
            Relation::Greater => inequalities.push((c.coeffs.clone(), c.rhs.clone(), true)),
            Relation::GreaterEq => inequalities.push((c.coeffs.clone(), c.rhs.clone(), false)),
        }
    }

    let mut subs: Vec<Substitution> = Vec::new();
    while let Some((a, b)) = equalities.pop() {
        let Some(var) = a.iter().position(|x| !x.is_zero()) else {
            if b.is_zero() {
                continue;
            }
            return Ok(None);
        };
        let inv = a[var].inv().expect("nonzero coefficient");
        let coeffs: Vec<FieldElement> =
            a.iter().enumerate().map(|(j, x)| if j == var { zero.clone() } else { -&(x * &inv) }).collect();
        let constant = &b * &inv;
        let apply = |a: &mut Vec<FieldElement>, b: &mut FieldElement| {
            let k = std::mem::replace(&mut a[var], zero.clone());
            if k.is_zero() {
                return;
            }
            for (x, c) in a.iter_mut().zip(&coeffs) {
                *x = &*x + &(&k * c);
            }
            *b = &*b - &(&k * &constant);
        };
        for (a, b) in equalities.iter_mut() {
            apply(a, b);
        }
        for (a, b, _) in inequalities.iter_mut() {
            apply(a, b);
        }
        subs.push(Substitution { var, coeffs, constant });
    }

    let pruned = eliminate(field, num_vars, &inequalities, true);
    let x = match pruned {
        None => return Ok(None),
        Some(x) if satisfies(&inequalities, &x) => x,
        // pruning may drop a row whose implying rows were merged away; redo
        // the elimination in full
        Some(_) => match eliminate(field, num_vars, &inequalities, false) {
            None => return Ok(None),
            Some(x) => x,
        },
    };
    let mut x = x;
    for s in subs.iter().rev() {
        x[s.var] = &s.constant + &dot(field, &s.coeffs, &x);
    }
    debug_assert!(constraints.iter().all(|c| c.is_satisfied_by(&x)));
    Ok(Some(x))
}

fn satisfies(inequalities: &[(Vec<FieldElement>, FieldElement, bool)], x: &[FieldElement]) -> bool {
    inequalities.iter().all(|(a, b, strict)| {
        let s = (&dot(b.field(), a, x) - b).signum();
        if *strict {
            s > 0
        } else {
            s >= 0
        }
    })
}

/// Fourier–Motzkin elimination followed by back-substitution. With `prune`,
/// combinations are dropped by Chernikov's rule; the system only gets weaker,
/// so `None` is always trustworthy but a witness must be checked.
fn eliminate(
    field: &RealAlgebraicField,
    num_vars: usize,
    inequalities: &[(Vec<FieldElement>, FieldElement, bool)],
    prune: bool,
) -> Option<Vec<FieldElement>> {
    let words = inequalities.len().div_ceil(64).max(1);
    let mut rows: Vec<Row> = Vec::new();
    for (i, (a, b, strict)) in inequalities.iter().enumerate() {
        let mut history = vec![0u64; words];
        history[i / 64] |= 1 << (i % 64);
        rows.push(Row { a: a.clone(), b: b.clone(), strict: *strict, history });
    }
    let mut rows = simplify(rows)?;

    // levels[k] holds the system over variables 0..=k, before eliminating k
    let mut levels: Vec<Vec<Row>> = vec![Vec::new(); num_vars];
    for (step, k) in (0..num_vars).rev().enumerate() {
        levels[k] = rows.clone();
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match r.a[k].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => keep.push(r),
            }
        }
        let limit = step + 2;
        for p in &pos {
            for n in &neg {
                let (cp, cn) = (-&n.a[k], p.a[k].clone());
                let history: Vec<u64> = p.history.iter().zip(&n.history).map(|(x, y)| x | y).collect();
                let combined = Row {
                    a: p.a.iter().zip(&n.a).map(|(x, y)| &(&cp * x) + &(&cn * y)).collect(),
                    b: &(&cp * &p.b) + &(&cn * &n.b),
                    strict: p.strict || n.strict,
                    history,
                };
                // Chernikov: after `step + 1` eliminations a combination of more
                // than `step + 2` input rows is implied by the others.
                if prune && combined.history_len() > limit {
                    continue;
                }
                keep.push(combined);
            }
        }
        rows = simplify(keep)?;
    }

    let mut x = vec![FieldElement::zero(field); num_vars];
    for k in 0..num_vars {
        x[k] = choose_value(field, &levels[k], k, &x);
    }
    Some(x)
}

/// Normalizes rows, drops constant rows that hold and keeps only the strongest
/// row per direction. `None` when some constant row fails.
fn simplify(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut out: Vec<Row> = Vec::new();
    let mut index: HashMap<Vec<FieldElement>, usize> = HashMap::new();
    for mut r in rows {
        if r.is_constant() {
            if !r.trivially_holds() {
                return None;
            }
            continue;
        }
        r.normalize();
        match index.get(&r.a) {
            Some(&i) => {
                let cur = &out[i];
                let stronger = match r.b.cmp_value(&cur.b) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Equal if r.strict != cur.strict => r.strict,
                    std::cmp::Ordering::Equal => r.history_len() < cur.history_len(),
                    std::cmp::Ordering::Less => false,
                };
                if stronger {
                    out[i] = r;
                }
            }
            None => {
                index.insert(r.a.clone(), out.len());
                out.push(r);
            }
        }
    }
    Some(out)
}

fn choose_value(field: &RealAlgebraicField, rows: &[Row], k: usize, x: &[FieldElement]) -> FieldElement {
    let mut lo: Option<(FieldElement, bool)> = None;
    let mut hi: Option<(FieldElement, bool)> = None;
    for r in rows {
        let c = &r.a[k];
        if c.is_zero() {
            continue;
        }
        let partial = dot(field, &r.a[..k], &x[..k]);
        let bound = &(&r.b - &partial) / c;
        if c.is_positive() {
            let tighter = lo.as_ref().is_none_or(|(l, ls)| match bound.cmp_value(l) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Equal => r.strict && !ls,
                std::cmp::Ordering::Less => false,
            });
            if tighter {
                lo = Some((bound, r.strict));
            }
        } else {
            let tighter = hi.as_ref().is_none_or(|(h, hs)| match bound.cmp_value(h) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => r.strict && !hs,
                std::cmp::Ordering::Greater => false,
            });
            if tighter {
                hi = Some((bound, r.strict));
            }
        }
    }
    let one = FieldElement::one(field);
    match (lo, hi) {
        (Some((l, _)), Some((h, _))) => (&l + &h).scale(&crate::arith::rational(1, 2)),
        (Some((l, strict)), None) => {
            if strict {
                &l + &one
            } else {
                l
            }
        }
        (None, Some((h, strict))) => {
            if strict {
                &h - &one
            } else {
                h
            }
        }
        (None, None) => FieldElement::zero(field),
    }
}
