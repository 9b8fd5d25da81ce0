use super::partition::tree_partitions;
use crate::error::{Error, Result};
use crate::forest::AromaticForest;
use crate::scalar::Scalar;
use crate::series::{CoeffMap, Domain};

fn partition_sum<T: Scalar>(
    b: &CoeffMap<T>,
    a: &CoeffMap<T>,
    phi: &AromaticForest,
    skip_trivial: bool,
) -> T {
    let mut total = T::zero();
    for p in tree_partitions(phi).iter() {
        if skip_trivial && p.is_trivial() {
            continue;
        }
        let outer = a.coeff(&p.skeleton);
        if outer.is_zero() {
            continue;
        }
        let inner = p
            .blocks
            .iter()
            .fold(T::one(), |acc, blk| acc * b.coeff(blk));
        total = total + outer * inner;
    }
    total
}

/// `(b★a)(φ) = Σ a(skeleton)·Π b(block)` over the partitions of `φ` into
/// aromatic trees. The result lives on the same domain as `a`.
pub fn star_product<T: Scalar>(
    b: &CoeffMap<T>,
    a: &CoeffMap<T>,
    order: usize,
) -> Result<CoeffMap<T>> {
    b.check_domain(Domain::AT, "substituted series")?;
    b.check_order(order)?;
    a.check_order(order)?;
    let mut out = CoeffMap::new(a.domain(), order);
    for phi in a.domain().forests(order) {
        let value = partition_sum(b, a, &phi, false);
        out.insert(phi, value)?;
    }
    Ok(out)
}

/// The inverse of `b` for substitution, with `b⁻¹★b = b★b⁻¹ = •*`.
pub fn star_inverse<T: Scalar>(b: &CoeffMap<T>, order: usize) -> Result<CoeffMap<T>> {
    b.check_domain(Domain::AT, "substituted series")?;
    b.check_order(order)?;
    let node = AromaticForest::node();
    let lead = b.coeff(&node);
    if lead.is_zero() {
        return Err(Error::NotInvertible(
            "coefficient of the single node is zero".into(),
        ));
    }
    let mut out = CoeffMap::new(Domain::AT, order);
    if order == 0 {
        return Ok(out);
    }
    out.insert(node.clone(), T::one() / lead.clone())?;
    for tau in Domain::AT.forests(order) {
        if tau == node {
            continue;
        }
        // The trivial partition contributes b(•)·b⁻¹(τ); all other blocks are smaller.
        let rest = partition_sum(&out, b, &tau, true);
        out.insert(tau, -rest / lead.clone())?;
    }
    Ok(out)
}

/// `∇b(γ) = Σ_v b(γ with the edge leaving v removed)` on rootless forests.
pub fn divergence<T: Scalar>(b: &CoeffMap<T>, order: usize) -> Result<CoeffMap<T>> {
    b.check_domain(Domain::AT, "series")?;
    b.check_order(order)?;
    let mut out = CoeffMap::new(Domain::A, order);
    for gamma in Domain::A.forests(order) {
        let mut value = T::zero();
        for v in 0..gamma.size() {
            value = value + b.coeff(&gamma.delete_out_edge(v)?);
        }
        out.insert(gamma, value)?;
    }
    Ok(out)
}
