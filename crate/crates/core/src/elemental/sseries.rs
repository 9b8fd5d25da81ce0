use super::operator::{apply_capped, apply_operator, tree_vector_field};
use super::poly::{PolyScalar, PolyVecField};
use crate::error::{Error, Result};
use crate::forest::{sigma, AromaticForest};
use crate::scalar::Scalar;
use crate::series::{CoeffMap, Domain};

/// Grades `0..=order` of `S_f(a)[g] = Σ a(φ)/σ(φ) F_f(φ)[g]`, grade `k`
/// collecting the forests with `k` vertices.
pub fn sseries_apply<T: Scalar>(
    a: &CoeffMap<T>,
    f: &PolyVecField<T>,
    g: &PolyScalar<T>,
    order: usize,
) -> Result<Vec<PolyScalar<T>>> {
    a.check_order(order)?;
    let mut grades = vec![PolyScalar::zero(g.nvars()); order + 1];
    for (phi, c) in a.iter() {
        if phi.size() > order {
            continue;
        }
        let term = apply_operator(phi, f, g)?;
        grades[phi.size()].add_assign(&term.scale(&(c.clone() / T::from_count(sigma(phi)))));
    }
    Ok(grades)
}

/// The B-series field `Σ h^|τ| b(τ)/σ(τ) F_f(τ)` truncated at `h^order`,
/// with `h` appended as the last polynomial variable.
pub fn bseries_field<T: Scalar>(
    b: &CoeffMap<T>,
    f: &PolyVecField<T>,
    order: usize,
) -> Result<PolyVecField<T>> {
    b.check_domain(Domain::AT, "B-series coefficients")?;
    b.check_order(order)?;
    if f.nvars() != f.dim() {
        return Err(Error::Dimension {
            expected: f.dim(),
            found: f.nvars(),
        });
    }
    let h = f.nvars();
    let mut components = vec![PolyScalar::zero(h + 1); f.dim()];
    for (tau, c) in b.iter() {
        if tau.size() > order {
            continue;
        }
        let weight = PolyScalar::monomial(h + 1, h, tau.size() as u32)
            .scale(&(c.clone() / T::from_count(sigma(tau))));
        let field = tree_vector_field(tau, f)?;
        for (out, comp) in components.iter_mut().zip(field.components()) {
            out.add_assign(&comp.extend_vars(1).mul(&weight));
        }
    }
    PolyVecField::new(components)
}

/// Splits a polynomial in the coordinates and a trailing `h` into its
/// coefficients of `h^0..=h^order`.
pub(crate) fn h_grades<T: Scalar>(p: &PolyScalar<T>, order: usize) -> Vec<PolyScalar<T>> {
    let h = p.nvars() - 1;
    (0..=order).map(|k| p.coefficient_of(h, k as u32)).collect()
}

/// `S_g(a)[G]` for a field `g` carrying a trailing `h`, truncated at `h^order`.
pub(crate) fn sseries_apply_parametric<T: Scalar>(
    a: &CoeffMap<T>,
    g_field: &PolyVecField<T>,
    g: &PolyScalar<T>,
    order: usize,
) -> Result<PolyScalar<T>> {
    let h = g_field.nvars() - 1;
    let cap = Some((h, order as u32));
    let mut total = PolyScalar::zero(g_field.nvars());
    for (phi, c) in a.iter() {
        // Every vertex of φ contributes at least one power of h.
        if phi.size() > order {
            continue;
        }
        let term = apply_capped(phi, g_field, g, cap)?;
        total.add_assign(&term.scale(&(c.clone() / T::from_count(sigma(phi)))));
    }
    Ok(total)
}

/// Applies `S_f(b)` to an `h`-graded argument, keeping grades `0..=order`.
pub(crate) fn sseries_apply_graded<T: Scalar>(
    b: &CoeffMap<T>,
    f: &PolyVecField<T>,
    graded: &[PolyScalar<T>],
    order: usize,
) -> Result<Vec<PolyScalar<T>>> {
    let nvars = graded.first().map_or(f.nvars(), PolyScalar::nvars);
    let mut out = vec![PolyScalar::zero(nvars); order + 1];
    for (phi, c) in b.iter() {
        let weight = c.clone() / T::from_count(sigma(phi));
        for (l, inner) in graded.iter().enumerate() {
            let k = phi.size() + l;
            if k > order || inner.is_zero() {
                continue;
            }
            out[k].add_assign(&apply_operator(phi, f, inner)?.scale(&weight));
        }
    }
    Ok(out)
}

/// Sum of `m·F_f(ψ)[g]` over a formal sum of forests.
pub(crate) fn apply_sum<T: Scalar>(
    terms: impl IntoIterator<Item = (AromaticForest, u64)>,
    f: &PolyVecField<T>,
    g: &PolyScalar<T>,
) -> Result<PolyScalar<T>> {
    let mut total = PolyScalar::zero(g.nvars());
    for (psi, m) in terms {
        total.add_assign(&apply_operator(&psi, f, g)?.scale(&T::from_count(m)));
    }
    Ok(total)
}
