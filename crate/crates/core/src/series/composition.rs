//! The composition product dual to the coproduct, its inverse, and the antipode.

use super::coeff_map::{CoeffMap, Domain};
use super::coproduct::{coproduct, reduced_coproduct};
use crate::error::{Error, Result};
use crate::forest::AromaticForest;
use crate::memo::Memo;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::LazyLock;

static ANTIPODES: LazyLock<Memo<AromaticForest, BTreeMap<AromaticForest, BigInt>>> =
    LazyLock::new(Memo::new);

/// `(b·a)(φ) = Σ m·b(P*)·a(R)` over the coproduct of `φ`, for `|φ| ≤ order`.
pub fn comp_product<T: Scalar>(
    b: &CoeffMap<T>,
    a: &CoeffMap<T>,
    order: usize,
) -> Result<CoeffMap<T>> {
    b.check_order(order)?;
    a.check_order(order)?;
    let mut out = CoeffMap::new(Domain::AF, order);
    for phi in Domain::AF.forests(order) {
        let value = pair_coproduct(b, a, &phi);
        out.insert(phi, value)?;
    }
    Ok(out)
}

fn pair_coproduct<T: Scalar>(b: &CoeffMap<T>, a: &CoeffMap<T>, phi: &AromaticForest) -> T {
    let mut value = T::zero();
    for (p, r, m) in coproduct(phi).iter() {
        let left = b.coeff(p);
        if left.is_zero() {
            continue;
        }
        value = value + T::from_count(m) * left * a.coeff(r);
    }
    value
}

/// The inverse `a⁻¹` with `a·a⁻¹ = a⁻¹·a = ε` up to `order`.
///
/// Grade by grade, `a⁻¹(φ) = −(a(φ)·a⁻¹(1) + Σ' m·a(P*)·a⁻¹(R)) / a(1)`,
/// the primed sum running over the reduced coproduct.
pub fn comp_inverse<T: Scalar>(a: &CoeffMap<T>, order: usize) -> Result<CoeffMap<T>> {
    a.check_order(order)?;
    let unit = AromaticForest::unit();
    let a0 = a.coeff(&unit);
    if a0.is_zero() {
        return Err(Error::NotInvertible(
            "coefficient of the empty forest is zero".into(),
        ));
    }
    let inv0 = T::one() / a0.clone();
    let mut out = CoeffMap::new(Domain::AF, order);
    out.insert(unit, inv0.clone())?;
    for phi in Domain::AF.forests(order).into_iter().skip(1) {
        let mut acc = a.coeff(&phi) * inv0.clone();
        for (p, r, m) in reduced_coproduct(&phi)?.iter() {
            let left = a.coeff(p);
            if !left.is_zero() {
                acc = acc + T::from_count(m) * left * out.coeff(r);
            }
        }
        out.insert(phi, -acc / a0.clone())?;
    }
    Ok(out)
}

/// The antipode as a signed integer combination of forests:
/// `S(1) = 1` and `S(φ) = −φ − Σ' S(P*)·R` over the reduced coproduct.
pub fn antipode(phi: &AromaticForest) -> CoeffMap<BigInt> {
    let terms = antipode_terms(phi);
    let mut out = CoeffMap::new(Domain::AF, phi.size());
    for (k, v) in terms.iter() {
        out.insert(k.clone(), v.clone())
            .expect("antipode terms have the size of the argument");
    }
    out
}

fn antipode_terms(phi: &AromaticForest) -> std::sync::Arc<BTreeMap<AromaticForest, BigInt>> {
    ANTIPODES.get_or_insert_with(phi, || {
        let mut out = BTreeMap::new();
        if phi.is_unit() {
            out.insert(phi.clone(), BigInt::one());
            return out;
        }
        let mut add = |k: AromaticForest, v: BigInt| {
            let e = out.entry(k).or_insert_with(BigInt::zero);
            *e += v;
        };
        add(phi.clone(), -BigInt::one());
        for (p, r, m) in reduced_coproduct(phi).expect("non-empty forest").iter() {
            for (s, c) in antipode_terms(p).iter() {
                add(s.concat(r), -c * BigInt::from(m));
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    })
}
