mod common;

use aromatic_core::forest::{enumerate_up_to, sigma};
use aromatic_core::random;
use aromatic_core::series::{
    antipode, aroma_dual_product, bar_extend, bar_value, comp_inverse, comp_product, coproduct,
    graph_composition, inherited_coproduct, reduced_coproduct,
};
use aromatic_core::{AromaticForest, CoeffMap, Domain, ForestFilter, Rational, TensorSum};
use common::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn forests(max: usize) -> Vec<AromaticForest> {
    enumerate_up_to(max, ForestFilter::All)
}

#[test]
fn coproduct_matches_subset_enumeration() {
    for phi in forests(6) {
        let listed: BTreeMap<_, _> = coproduct(&phi)
            .iter()
            .map(|(l, r, m)| ((l.clone(), r.clone()), m))
            .collect();
        assert_eq!(listed, brute_coproduct(&phi), "{phi}");
    }
}

#[test]
fn counit_terms_appear_once() {
    for phi in forests(5).into_iter().filter(|p| !p.is_unit()) {
        let d = coproduct(&phi);
        let unit = AromaticForest::unit();
        assert_eq!(d.multiplicity(&unit, &phi), 1, "{phi}");
        assert_eq!(d.multiplicity(&phi, &unit), 1, "{phi}");
        assert_eq!(reduced_coproduct(&phi).unwrap().total() + 2, d.total());
    }
}

#[test]
fn coproduct_is_coassociative() {
    type Triple = BTreeMap<(AromaticForest, AromaticForest, AromaticForest), u64>;
    for phi in forests(5) {
        let (mut left, mut right): (Triple, Triple) = Default::default();
        for (l, r, m) in coproduct(&phi).iter() {
            for (ll, lr, k) in coproduct(l).iter() {
                *left.entry((ll.clone(), lr.clone(), r.clone())).or_default() += m * k;
            }
            for (rl, rr, k) in coproduct(r).iter() {
                *right
                    .entry((l.clone(), rl.clone(), rr.clone()))
                    .or_default() += m * k;
            }
        }
        assert_eq!(left, right, "{phi}");
    }
}

#[test]
fn coproduct_is_multiplicative() {
    let all = forests(5);
    for x in &all {
        for y in all.iter().filter(|y| x.size() + y.size() <= 5) {
            assert_eq!(
                coproduct(&x.concat(y)),
                coproduct(x).product(&coproduct(y)),
                "{x} · {y}"
            );
        }
    }
}

fn convolve_with_antipode(
    phi: &AromaticForest,
    antipode_left: bool,
) -> BTreeMap<AromaticForest, BigInt> {
    let mut out: BTreeMap<AromaticForest, BigInt> = BTreeMap::new();
    for (l, r, m) in coproduct(phi).iter() {
        let (s_side, plain) = if antipode_left { (l, r) } else { (r, l) };
        for (psi, c) in antipode(s_side).iter() {
            *out.entry(psi.concat(plain)).or_insert_with(BigInt::zero) += c * BigInt::from(m);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[test]
fn antipode_laws() {
    for phi in forests(5) {
        let expected: BTreeMap<AromaticForest, BigInt> = if phi.is_unit() {
            [(AromaticForest::unit(), BigInt::one())].into()
        } else {
            BTreeMap::new()
        };
        assert_eq!(convolve_with_antipode(&phi, true), expected, "{phi}");
        assert_eq!(convolve_with_antipode(&phi, false), expected, "{phi}");
    }
}

#[test]
fn antipode_examples() {
    let coeffs = |text: &str| -> Vec<(String, i64)> {
        antipode(&forest(text))
            .iter()
            .map(|(k, v)| (k.to_string(), i64::try_from(v.clone()).unwrap()))
            .collect()
    };
    assert_eq!(coeffs("b"), [("b".to_string(), -1)]);
    assert_eq!(
        coeffs("b[b]"),
        [("b b".to_string(), 1), ("b[b]".to_string(), -1)]
    );
    assert_eq!(
        coeffs("<b[b]>"),
        [("<b> b".to_string(), 1), ("<b[b]>".to_string(), -1)]
    );
}

#[test]
fn graph_composition_symmetry_identity() {
    let all = forests(5);
    for l in &all {
        for r in all.iter().filter(|r| l.size() + r.size() <= 5) {
            let composed = graph_composition(l, r);
            for (psi, m) in composed.iter() {
                let lhs = m * sigma(psi);
                let rhs = coproduct(psi).multiplicity(l, r) * sigma(l) * sigma(r);
                assert_eq!(lhs, rhs, "{l} ∘ {r} → {psi}");
            }
        }
    }
}

#[test]
fn inherited_coproduct_misses_cuts_that_open_an_aroma() {
    assert_eq!(
        inherited_coproduct(&forest("<b> b")),
        coproduct(&forest("<b> b"))
    );
    assert_eq!(
        inherited_coproduct(&forest("b[b,b]")),
        coproduct(&forest("b[b,b]"))
    );
    let full = coproduct(&forest("<b[b]>"));
    let inherited = inherited_coproduct(&forest("<b[b]>"));
    assert_eq!(full.multiplicity(&forest("b"), &forest("<b>")), 1);
    assert_eq!(inherited.multiplicity(&forest("b"), &forest("<b>")), 0);
}

#[test]
fn tensor_sum_text_round_trips() {
    for phi in forests(4) {
        let d = coproduct(&phi);
        assert_eq!(d.to_string().parse::<TensorSum>().unwrap(), d);
    }
    assert_eq!(
        coproduct(&forest("b[b]")).to_string(),
        "1*(1|b[b]) + 1*(b|b) + 1*(b[b]|1)"
    );
}

fn map(seed: u64, order: usize) -> CoeffMap<Rational> {
    random::coeff_map(&mut random::rng(seed), Domain::AF, order, None)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn composition_matches_subset_enumeration(s in any::<u64>()) {
        let (b, a) = (map(s, 4), map(s ^ 0x9e37, 4));
        let product = comp_product(&b, &a, 4).unwrap();
        for phi in forests(4) {
            prop_assert_eq!(product.coeff(&phi), brute_composition(&b, &a, &phi));
        }
    }

    #[test]
    fn composition_is_associative(s in any::<u64>()) {
        let (c, b, a) = (map(s, 4), map(s.wrapping_add(1), 4), map(s.wrapping_add(2), 4));
        let left = comp_product(&comp_product(&c, &b, 4).unwrap(), &a, 4).unwrap();
        let right = comp_product(&c, &comp_product(&b, &a, 4).unwrap(), 4).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn counit_is_two_sided_identity(s in any::<u64>()) {
        let a = map(s, 4);
        let e = CoeffMap::counit(4);
        prop_assert_eq!(&comp_product(&e, &a, 4).unwrap(), &a);
        prop_assert_eq!(&comp_product(&a, &e, 4).unwrap(), &a);
    }

    #[test]
    fn inverse_is_two_sided(s in any::<u64>(), k in 1i64..5) {
        let unit = Rational::new(k.into(), 2.into());
        let a = random::coeff_map(&mut random::rng(s), Domain::AF, 4, Some(unit));
        let inv = comp_inverse(&a, 4).unwrap();
        prop_assert_eq!(comp_product(&a, &inv, 4).unwrap(), CoeffMap::counit(4));
        prop_assert_eq!(comp_product(&inv, &a, 4).unwrap(), CoeffMap::counit(4));
    }

    #[test]
    fn aroma_product_matches_term_by_term_multiplication(s in any::<u64>()) {
        let mut rng = random::rng(s);
        let a = random::coeff_map(&mut rng, Domain::A, 4, None);
        let b = random::coeff_map(&mut rng, Domain::A, 4, None);
        let rootless = Domain::A.forests(4);
        let literal = literal_series_product(&a, &b, &rootless, 4);
        let product = aroma_dual_product(&a, &b, 4).unwrap();
        for gamma in &rootless {
            prop_assert_eq!(product.coeff(gamma), literal.get(gamma).cloned().unwrap_or_else(Rational::zero));
        }
    }

    #[test]
    fn json_round_trip(s in any::<u64>()) {
        let a = map(s, 4);
        prop_assert_eq!(CoeffMap::from_json_str(&a.to_json_string()).unwrap(), a);
    }
}

#[test]
fn inverse_needs_a_unit_coefficient() {
    let a = random::coeff_map(&mut random::rng(3), Domain::AF, 3, Some(Rational::zero()));
    assert!(comp_inverse(&a, 3).is_err());
}

#[test]
fn bar_examples() {
    let a = CoeffMap::from_pairs(
        Domain::AT,
        3,
        [("b", q(2)), ("b[b]", frac(1, 3)), ("<b> b", q(5))],
    )
    .unwrap();
    // The extension kills the single loop and keeps aromatic trees.
    assert!(bar_value(&a, &AromaticForest::loop1()).unwrap().is_zero());
    let ext = bar_extend(&a, 3).unwrap();
    assert_eq!(ext.coeff(&forest("b")), q(2));
    assert_eq!(ext.coeff(&forest("b[b]")), frac(1, 3));
    assert_eq!(ext.coeff(&AromaticForest::unit()), q(1));
    // Two roots: a product of tree coefficients.
    assert_eq!(ext.coeff(&forest("b b")), q(4));
}
