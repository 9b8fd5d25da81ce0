use super::poly::{PolyScalar, PolyVecField};
use crate::error::{Error, Result};
use crate::forest::text::{Component, Structure};
use crate::forest::AromaticForest;
use crate::scalar::Scalar;

/// Optional cap on the degree of one parameter variable, applied after
/// every multiplication.
pub(crate) type Cap = Option<(usize, u32)>;

fn capped<T: Scalar>(p: PolyScalar<T>, cap: Cap) -> PolyScalar<T> {
    match cap {
        Some((var, max)) => p.truncate_var(var, max),
        None => p,
    }
}

/// `Σ_J ∂_J p · Π_c args[c][J_c]`, contracting one derivative slot of `p`
/// with each vector in `args`.
fn contract<T: Scalar>(p: &PolyScalar<T>, args: &[&[PolyScalar<T>]], cap: Cap) -> PolyScalar<T> {
    let Some((first, rest)) = args.split_first() else {
        return p.clone();
    };
    let mut out = PolyScalar::zero(p.nvars());
    for (j, v) in first.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let d = p.partial(j);
        if d.is_zero() {
            continue;
        }
        out.add_assign(&capped(contract(&d, rest, cap).mul(v), cap));
    }
    out
}

struct Evaluator<'a, T> {
    f: &'a PolyVecField<T>,
    structure: Structure,
    cap: Cap,
}

impl<T: Scalar> Evaluator<'_, T> {
    fn children_fields(&self, v: usize) -> Vec<Vec<PolyScalar<T>>> {
        let kids: Vec<usize> = self.structure.children(v).collect();
        kids.into_iter().map(|c| self.tree_field(c)).collect()
    }

    /// The vector field of the subtree hanging at `v`.
    fn tree_field(&self, v: usize) -> Vec<PolyScalar<T>> {
        let fields = self.children_fields(v);
        let args: Vec<&[PolyScalar<T>]> = fields.iter().map(Vec::as_slice).collect();
        self.f
            .components()
            .iter()
            .map(|fi| contract(fi, &args, self.cap))
            .collect()
    }

    /// Trace of the product of the matrices `∂_l (f^i contracted with the
    /// hanging trees)` around a cycle.
    fn cycle_trace(&self, cycle: &[usize]) -> PolyScalar<T> {
        let n = self.f.dim();
        let nvars = self.f.nvars();
        let mut product: Option<Vec<Vec<PolyScalar<T>>>> = None;
        for &v in cycle {
            let fields = self.children_fields(v);
            let args: Vec<&[PolyScalar<T>]> = fields.iter().map(Vec::as_slice).collect();
            let m: Vec<Vec<PolyScalar<T>>> = (0..n)
                .map(|i| {
                    let fi = self.f.component(i);
                    (0..n)
                        .map(|l| contract(&fi.partial(l), &args, self.cap))
                        .collect()
                })
                .collect();
            product = Some(match product {
                None => m,
                Some(acc) => (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|l| {
                                let mut s = PolyScalar::zero(nvars);
                                for (k, mk) in m[i].iter().enumerate() {
                                    if !mk.is_zero() && !acc[k][l].is_zero() {
                                        s.add_assign(&capped(mk.mul(&acc[k][l]), self.cap));
                                    }
                                }
                                s
                            })
                            .collect()
                    })
                    .collect(),
            });
        }
        let product = product.expect("cycles are non-empty");
        let mut trace = PolyScalar::zero(nvars);
        for (i, row) in product.iter().enumerate() {
            trace.add_assign(&row[i]);
        }
        trace
    }
}

pub(crate) fn apply_capped<T: Scalar>(
    phi: &AromaticForest,
    f: &PolyVecField<T>,
    g: &PolyScalar<T>,
    cap: Cap,
) -> Result<PolyScalar<T>> {
    if g.nvars() != f.nvars() {
        return Err(Error::Dimension {
            expected: f.nvars(),
            found: g.nvars(),
        });
    }
    let eval = Evaluator {
        f,
        structure: Structure::new(phi.successors()),
        cap,
    };
    let mut root_fields = Vec::new();
    let mut scalar = PolyScalar::one(f.nvars());
    for c in &eval.structure.components {
        match c {
            Component::Tree(r) => root_fields.push(eval.tree_field(*r)),
            Component::Cycle(cycle) => {
                scalar = capped(scalar.mul(&eval.cycle_trace(cycle)), cap);
                if scalar.is_zero() {
                    return Ok(scalar);
                }
            }
        }
    }
    let args: Vec<&[PolyScalar<T>]> = root_fields.iter().map(Vec::as_slice).collect();
    Ok(capped(scalar.mul(&contract(g, &args, cap)), cap))
}

/// The elemental differential operator `F_f(φ)` applied to `g`.
///
/// Each vertex carries a component of `f`, differentiated once along each
/// incoming edge; each root differentiates `g` once. Indices are summed over
/// the coordinates of `f` only, so trailing parameter variables pass through.
pub fn apply_operator<T: Scalar>(
    phi: &AromaticForest,
    f: &PolyVecField<T>,
    g: &PolyScalar<T>,
) -> Result<PolyScalar<T>> {
    apply_capped(phi, f, g, None)
}

/// The vector field `F_f(τ)` of an aromatic tree, component by component.
pub fn tree_vector_field<T: Scalar>(
    tau: &AromaticForest,
    f: &PolyVecField<T>,
) -> Result<PolyVecField<T>> {
    if tau.root_count() != 1 {
        return Err(Error::Domain(format!("{tau} is not an aromatic tree")));
    }
    let components = (0..f.dim())
        .map(|i| apply_operator(tau, f, &PolyScalar::var(f.nvars(), i)))
        .collect::<Result<Vec<_>>>()?;
    PolyVecField::new(components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn field(s: &str) -> PolyVecField<Rational> {
        PolyVecField::parse(s, 2).unwrap()
    }

    fn p(s: &str) -> PolyScalar<Rational> {
        PolyScalar::parse(s, 2).unwrap()
    }

    fn apply(
        phi: &str,
        f: &PolyVecField<Rational>,
        g: &PolyScalar<Rational>,
    ) -> PolyScalar<Rational> {
        apply_operator(&phi.parse().unwrap(), f, g).unwrap()
    }

    #[test]
    fn single_node_is_directional_derivative() {
        let f = field("x1^2; x1*x2");
        let g = p("x1^3 + x2^2");
        assert_eq!(apply("b", &f, &g), p("3*x1^4 + 2*x1*x2^2"));
    }

    #[test]
    fn loop_is_divergence() {
        let f = field("x1^2; x2");
        assert_eq!(apply("<b>", &f, &p("1")), p("2*x1 + 1"));
    }

    #[test]
    fn two_cycle_is_trace_of_jacobian_squared() {
        let f = field("x1*x2; x1^2");
        // J = [[x2, x1], [2x1, 0]], tr(J²) = x2² + 4x1².
        assert_eq!(apply("<b,b>", &f, &p("1")), p("x2^2 + 4*x1^2"));
    }

    #[test]
    fn constant_argument_is_killed_by_roots() {
        let f = field("x1^2; x2");
        assert!(apply("<b> b[b]", &f, &p("5")).is_zero());
        assert_eq!(apply("1", &f, &p("5")), p("5"));
    }

    #[test]
    fn dimension_mismatch() {
        let f = field("x1; x2");
        let g = PolyScalar::<Rational>::parse("x1", 3).unwrap();
        assert!(apply_operator(&"b".parse().unwrap(), &f, &g).is_err());
    }
}
