//! Seeded random instances for the verification sweeps.

use crate::elemental::{PolyScalar, PolyVecField};
use crate::forest::AromaticForest;
use crate::series::{CoeffMap, Domain};
use crate::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic generator for a seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `p/q` with `|p| ≤ 4`, `1 ≤ q ≤ 3`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(
        rng.gen_range(-4i64..=4).into(),
        rng.gen_range(1i64..=3).into(),
    )
}

fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = rational(rng);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

/// A map with a random coefficient on every forest of `domain` up to `order`.
/// On domains containing the empty forest its coefficient is `unit` when given.
pub fn coeff_map<R: Rng>(
    rng: &mut R,
    domain: Domain,
    order: usize,
    unit: Option<Rational>,
) -> CoeffMap<Rational> {
    let mut m = CoeffMap::new(domain, order);
    for phi in domain.forests(order) {
        let value = match (&unit, phi.is_unit()) {
            (Some(u), true) => u.clone(),
            _ => rational(rng),
        };
        m.insert(phi, value)
            .expect("forest drawn from the map's own domain");
    }
    m
}

/// An aromatic-tree map with a nonzero coefficient on the single node.
pub fn invertible_tree_map<R: Rng>(rng: &mut R, order: usize) -> CoeffMap<Rational> {
    let mut m = coeff_map(rng, Domain::AT, order, None);
    if order >= 1 {
        m.insert(AromaticForest::node(), nonzero_rational(rng))
            .expect("node is an aromatic tree");
    }
    m
}

/// A dense random polynomial of total degree at most `degree`.
pub fn polynomial<R: Rng>(rng: &mut R, nvars: usize, degree: u32) -> PolyScalar<Rational> {
    let mut exponents = vec![vec![]];
    for _ in 0..nvars {
        exponents = exponents
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                let used: u32 = e.iter().sum();
                (0..=degree - used).map(move |k| {
                    let mut e = e.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    let terms: Vec<_> = exponents.into_iter().map(|e| (e, rational(rng))).collect();
    PolyScalar::from_terms(nvars, terms).expect("exponents have nvars entries")
}

/// A random polynomial vector field on `dim` coordinates.
pub fn vector_field<R: Rng>(rng: &mut R, dim: usize, degree: u32) -> PolyVecField<Rational> {
    PolyVecField::new((0..dim).map(|_| polynomial(rng, dim, degree)).collect())
        .expect("components share one variable count")
}
