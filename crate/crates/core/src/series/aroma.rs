//! The product on rootless forests and the extension of aromatic-tree maps
//! to all forests.

use super::coeff_map::{CoeffMap, Domain};
use super::sums::TensorSum;
use crate::error::Result;
use crate::forest::AromaticForest;
use crate::scalar::Scalar;

/// Distinct components of `phi` with their multiplicities, in canonical order.
fn component_multiset(phi: &AromaticForest) -> Vec<(AromaticForest, usize)> {
    let mut out: Vec<(AromaticForest, usize)> = Vec::new();
    for c in phi.components() {
        match out.last_mut() {
            Some((last, m)) if *last == c => *m += 1,
            _ => out.push((c, 1)),
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Every sub-multiset of `counts` with its binomial weight `Π C(μ, k)`.
fn sub_multisets(counts: &[usize]) -> Vec<(Vec<usize>, u64)> {
    let mut out = vec![(Vec::new(), 1u64)];
    for &mu in counts {
        out = out
            .into_iter()
            .flat_map(|(pick, w)| {
                (0..=mu).map(move |k| {
                    let mut p = pick.clone();
                    p.push(k);
                    (p, w * binomial(mu, k))
                })
            })
            .collect();
    }
    out
}

fn assemble(parts: &[(AromaticForest, usize)], counts: &[usize]) -> AromaticForest {
    let factors: Vec<&AromaticForest> = parts
        .iter()
        .zip(counts)
        .flat_map(|((c, _), &k)| std::iter::repeat_n(c, k))
        .collect();
    AromaticForest::product(factors)
}

/// Coproduct splitting a forest's components into two sub-multisets, each
/// split counted `Π C(μ, k)` times. On rootless forests this is the
/// coproduct dual to [`aroma_dual_product`].
pub fn aroma_coproduct(gamma: &AromaticForest) -> TensorSum {
    let parts = component_multiset(gamma);
    let counts: Vec<usize> = parts.iter().map(|(_, m)| *m).collect();
    let mut out = TensorSum::new();
    for (pick, w) in sub_multisets(&counts) {
        let rest: Vec<usize> = counts.iter().zip(&pick).map(|(m, k)| m - k).collect();
        out.add(assemble(&parts, &pick), assemble(&parts, &rest), w);
    }
    out
}

/// `(a·b)(γ) = Σ w·a(γ₁)·b(γ₂)` over the splittings of [`aroma_coproduct`].
pub fn aroma_dual_product<T: Scalar>(
    a: &CoeffMap<T>,
    b: &CoeffMap<T>,
    order: usize,
) -> Result<CoeffMap<T>> {
    a.check_domain(Domain::A, "left factor")?;
    b.check_domain(Domain::A, "right factor")?;
    a.check_order(order)?;
    b.check_order(order)?;
    let mut out = CoeffMap::new(Domain::A, order);
    for gamma in Domain::A.forests(order) {
        let mut value = T::zero();
        for (g1, g2, w) in aroma_coproduct(&gamma).iter() {
            value = value + T::from_count(w) * a.coeff(g1) * b.coeff(g2);
        }
        out.insert(gamma, value)?;
    }
    Ok(out)
}

/// `ā(φ)` for a single forest `φ = γ·u₁⋯u_k` (`γ` rootless, `u_i` trees):
/// the `k`-fold product of the functionals `γ' ↦ a(γ'u_i)`, evaluated at `γ`.
pub fn bar_value<T: Scalar>(a: &CoeffMap<T>, phi: &AromaticForest) -> Result<T> {
    a.check_domain(Domain::AT, "bar extension input")?;
    a.check_order(phi.size())?;
    let (gamma, trees) = phi.split_aromas();
    let parts = component_multiset(&gamma);
    let counts: Vec<usize> = parts.iter().map(|(_, m)| *m).collect();
    Ok(bar_rec(a, &parts, &counts, &trees))
}

fn bar_rec<T: Scalar>(
    a: &CoeffMap<T>,
    parts: &[(AromaticForest, usize)],
    remaining: &[usize],
    trees: &[AromaticForest],
) -> T {
    let Some((tree, rest_trees)) = trees.split_first() else {
        return if remaining.iter().all(|&k| k == 0) {
            T::one()
        } else {
            T::zero()
        };
    };
    let mut total = T::zero();
    for (pick, w) in sub_multisets(remaining) {
        let head = a.coeff(&assemble(parts, &pick).concat(tree));
        if head.is_zero() {
            continue;
        }
        let rest: Vec<usize> = remaining.iter().zip(&pick).map(|(m, k)| m - k).collect();
        let tail = bar_rec(a, parts, &rest, rest_trees);
        total = total + T::from_count(w) * head * tail;
    }
    total
}

/// The extension `ā` of an aromatic-tree map to every forest up to `order`.
pub fn bar_extend<T: Scalar>(a: &CoeffMap<T>, order: usize) -> Result<CoeffMap<T>> {
    a.check_domain(Domain::AT, "bar extension input")?;
    a.check_order(order)?;
    let mut out = CoeffMap::new(Domain::AF, order);
    for phi in Domain::AF.forests(order) {
        let value = bar_value(a, &phi)?;
        out.insert(phi, value)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn f(s: &str) -> AromaticForest {
        s.parse().unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn aroma_coproduct_weights() {
        assert_eq!(
            aroma_coproduct(&f("<b> <b>")).to_string(),
            "1*(1|<b> <b>) + 2*(<b>|<b>) + 1*(<b> <b>|1)"
        );
        assert_eq!(
            aroma_coproduct(&f("<b[b]>")).to_string(),
            "1*(1|<b[b]>) + 1*(<b[b]>|1)"
        );
    }

    #[test]
    fn dual_product_examples() {
        let a = CoeffMap::from_pairs(Domain::A, 2, [("1", q(1)), ("<b>", q(1))]).unwrap();
        let ab = aroma_dual_product(&a, &a, 2).unwrap();
        assert_eq!(ab.coeff(&f("<b> <b>")), q(2));
        assert_eq!(ab.coeff(&f("<b>")), q(2));
        let unit = CoeffMap::aroma_unit(2);
        assert_eq!(aroma_dual_product(&a, &unit, 2).unwrap(), a);
        let at = CoeffMap::<Rational>::new(Domain::AT, 2);
        assert!(aroma_dual_product(&at, &a, 2).is_err());
    }

    #[test]
    fn bar_extension_examples() {
        let a = CoeffMap::from_pairs(
            Domain::AT,
            3,
            [("b", q(3)), ("<b> b", q(5)), ("b[b]", q(7))],
        )
        .unwrap();
        let bar = bar_extend(&a, 3).unwrap();
        assert_eq!(bar.coeff(&f("<b>")), q(0));
        assert_eq!(bar.coeff(&f("1")), q(1));
        assert_eq!(bar.coeff(&f("<b> b")), q(5));
        assert_eq!(bar.coeff(&f("b b")), q(9));
        assert_eq!(bar.coeff(&f("b b b")), q(27));
        assert_eq!(bar.coeff(&f("b b[b]")), q(21));
        // Both trees may take the loop: 2·a(<b> b)·a(b).
        assert_eq!(bar.coeff(&f("<b> b b")), q(30));
    }
}
