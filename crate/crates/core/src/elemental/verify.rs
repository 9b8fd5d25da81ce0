//! Exact checks of the algebraic laws against elemental differentials.

use super::operator::apply_operator;
use super::poly::{PolyScalar, PolyVecField};
use super::sseries::{
    apply_sum, bseries_field, h_grades, sseries_apply, sseries_apply_graded,
    sseries_apply_parametric,
};
use crate::error::Result;
use crate::forest::AromaticForest;
use crate::scalar::Scalar;
use crate::series::{bar_extend, comp_product, graph_composition, CoeffMap, Domain};
use crate::substitution::star_product;

/// Two sides of an identity, grade by grade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison<T> {
    pub lhs: Vec<PolyScalar<T>>,
    pub rhs: Vec<PolyScalar<T>>,
}

impl<T: Scalar> Comparison<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Grades at which the two sides differ.
    pub fn mismatches(&self) -> Vec<usize> {
        (0..self.lhs.len().max(self.rhs.len()))
            .filter(|&k| self.lhs.get(k) != self.rhs.get(k))
            .collect()
    }
}

/// `F_f(φ₁)[F_f(φ₂)[g]]` against the operators of the grafting sum `φ₁∘φ₂`.
pub fn verify_composition_lemma<T: Scalar>(
    outer: &AromaticForest,
    inner: &AromaticForest,
    f: &PolyVecField<T>,
    g: &PolyScalar<T>,
) -> Result<Comparison<T>> {
    let lhs = apply_operator(outer, f, &apply_operator(inner, f, g)?)?;
    let composed = graph_composition(outer, inner);
    let rhs = apply_sum(composed.iter().map(|(psi, m)| (psi.clone(), m)), f, g)?;
    Ok(Comparison {
        lhs: vec![lhs],
        rhs: vec![rhs],
    })
}

/// `S_f(b)[S_f(a)[g]]` against `S_f(b·a)[g]`.
pub fn verify_composition_theorem<T: Scalar>(
    b: &CoeffMap<T>,
    a: &CoeffMap<T>,
    f: &PolyVecField<T>,
    g: &PolyScalar<T>,
    order: usize,
) -> Result<Comparison<T>> {
    let inner = sseries_apply(a, f, g, order)?;
    let lhs = sseries_apply_graded(b, f, &inner, order)?;
    let rhs = sseries_apply(&comp_product(b, a, order)?, f, g, order)?;
    Ok(Comparison { lhs, rhs })
}

/// `g(y + B_f(a)(y))`, Taylor-expanded in `h`, against `S_f(ā)[g]`.
pub fn verify_sseries_of_map<T: Scalar>(
    a: &CoeffMap<T>,
    f: &PolyVecField<T>,
    g: &PolyScalar<T>,
    order: usize,
) -> Result<Comparison<T>> {
    let field = bseries_field(a, f, order)?;
    let n = f.dim();
    let shifted: Vec<PolyScalar<T>> = (0..n)
        .map(|i| PolyScalar::var(n + 1, i).add(field.component(i)))
        .collect();
    let composed = g.compose(&shifted)?.truncate_var(n, order as u32);
    let lhs = h_grades(&composed, order);
    let rhs = sseries_apply(&bar_extend(a, order)?, f, g, order)?;
    Ok(Comparison { lhs, rhs })
}

/// `S_{B_f(b)}(a)[g]` against `S_f(b★a)[g]`.
pub fn verify_substitution_theorem<T: Scalar>(
    b: &CoeffMap<T>,
    a: &CoeffMap<T>,
    f: &PolyVecField<T>,
    g: &PolyScalar<T>,
    order: usize,
) -> Result<Comparison<T>> {
    b.check_domain(Domain::AT, "substituted series")?;
    let field = bseries_field(b, f, order)?;
    let lhs = h_grades(
        &sseries_apply_parametric(a, &field, &g.extend_vars(1), order)?,
        order,
    );
    let rhs = sseries_apply(&star_product(b, a, order)?, f, g, order)?;
    Ok(Comparison { lhs, rhs })
}
