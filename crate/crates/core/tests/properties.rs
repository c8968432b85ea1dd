use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use srak::centralizer::Algebra;
use srak::cherednik::{build_cherednik, param_values, CherednikAlgebra, Representation};
use srak::coeffs::{ParamPoly, Rational};
use srak::completion::{be_iso, recenter, BEIsoData};
use srak::groups::{FiniteSymplecticGroup, SymmetricRep};
use srak::sra::{parse_element, SRAElement, SRAlgebra};

fn sym(n: usize) -> Arc<FiniteSymplecticGroup> {
    Arc::new(FiniteSymplecticGroup::symmetric(n, SymmetricRep::Reflection).unwrap())
}

fn h2() -> &'static CherednikAlgebra {
    static A: OnceLock<CherednikAlgebra> = OnceLock::new();
    A.get_or_init(|| build_cherednik(sym(2), Representation::Trivial).unwrap())
}

fn h3() -> &'static CherednikAlgebra {
    static A: OnceLock<CherednikAlgebra> = OnceLock::new();
    A.get_or_init(|| build_cherednik(sym(3), Representation::Trivial).unwrap())
}

fn iso2() -> &'static BEIsoData {
    static I: OnceLock<BEIsoData> = OnceLock::new();
    I.get_or_init(|| be_iso(sym(2), &[Rational::one()], None, 6).unwrap())
}

/// Up to three terms `(exponents, group element, coefficient)`.
fn arb_terms(dim: usize, order: usize, max_deg: u32) -> impl Strategy<Value = Vec<(Vec<u32>, usize, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, dim), 0..order, -3i64..=3), 1..=3)
}

fn build(alg: &SRAlgebra, terms: &[(Vec<u32>, usize, i64)], max_deg: u32) -> SRAElement {
    let mut out = alg.zero();
    for (e, g, k) in terms {
        // keep the total degree at most max_deg
        let mut e = e.clone();
        let mut left = max_deg;
        for x in e.iter_mut() {
            *x = (*x).min(left);
            left -= *x;
        }
        out = out.add(&alg.basis_element(e, *g).scale(&Rational::from_int(*k)));
    }
    out
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(p, q)| Rational::new(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_one_products_are_associative(a in arb_terms(2, 2, 3), b in arb_terms(2, 2, 3), c in arb_terms(2, 2, 3)) {
        let alg = h2().sra();
        let (a, b, c) = (build(alg, &a, 3), build(alg, &b, 3), build(alg, &c, 3));
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
        // distributivity
        prop_assert_eq!(alg.mul(&a, &b.add(&c)), alg.mul(&a, &b).add(&alg.mul(&a, &c)));
    }

    #[test]
    fn s3_products_are_associative(a in arb_terms(4, 6, 2), b in arb_terms(4, 6, 2), c in arb_terms(4, 6, 2), cv in arb_rational()) {
        let alg = h3().specialize(&param_values(None, &[Some(cv)]));
        let alg = alg.sra();
        let (a, b, c) = (build(alg, &a, 2), build(alg, &b, 2), build(alg, &c, 2));
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
    }

    #[test]
    fn specialization_is_multiplicative(a in arb_terms(4, 6, 2), b in arb_terms(4, 6, 2), t in arb_rational(), c in arb_rational()) {
        let generic = h3().sra();
        let values = param_values(Some(t), &[Some(c)]);
        let special = generic.specialize_params(&values);
        let (a, b) = (build(generic, &a, 2), build(generic, &b, 2));
        prop_assert_eq!(
            generic.mul(&a, &b).specialize(&values),
            special.mul(&a.specialize(&values), &b.specialize(&values))
        );
    }

    #[test]
    fn group_conjugation_is_an_automorphism(a in arb_terms(4, 6, 2), b in arb_terms(4, 6, 2), g in 0usize..6) {
        let alg = h3().sra();
        let (a, b) = (build(alg, &a, 2), build(alg, &b, 2));
        let ginv = alg.group().inv(g);
        prop_assert_eq!(
            alg.conjugate_by_group(g, &a),
            alg.mul(&alg.mul(&alg.group_element(g), &a), &alg.group_element(ginv))
        );
        prop_assert_eq!(
            alg.conjugate_by_group(g, &alg.mul(&a, &b)),
            alg.mul(&alg.conjugate_by_group(g, &a), &alg.conjugate_by_group(g, &b))
        );
    }

    #[test]
    fn printed_elements_parse_back(a in arb_terms(4, 6, 3)) {
        let alg = h3().sra();
        let a = build(alg, &a, 3);
        prop_assert_eq!(parse_element(alg, &alg.format(&a)).unwrap(), a);
    }

    #[test]
    fn rationals_print_and_parse(p in any::<i64>(), q in 1i64..1_000_000) {
        let r = Rational::new(p, q);
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn recentering_is_invertible(a in arb_terms(2, 1, 4), b in arb_rational()) {
        let alg = h2().sra();
        let a = build(alg, &a, 4);
        let there = recenter(&a, std::slice::from_ref(&b)).unwrap();
        prop_assert_eq!(recenter(&there, &[-&b]).unwrap(), a);
    }

    #[test]
    fn geometric_inverses_are_exact(beta in arb_rational().prop_filter("nonzero", |b| !b.is_zero()), alpha in arb_rational()) {
        let comp = iso2().context().algebra();
        let inv = comp.inverse_shifted_linear(std::slice::from_ref(&alpha), &beta).unwrap();
        let lin = comp.add(&comp.linear_x(&[alpha]), &comp.constant(ParamPoly::constant(comp.slice().arity(), beta)));
        prop_assert_eq!(comp.mul(&lin, &inv), comp.one());
        prop_assert_eq!(comp.mul(&inv, &lin), comp.one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// The completion map is multiplicative, up to the order both sides are known to.
    #[test]
    fn completion_map_is_multiplicative(a in arb_terms(2, 2, 2), b in arb_terms(2, 2, 2)) {
        let iso = iso2();
        let alg = iso.ambient().sra();
        let (a, b) = (build(alg, &a, 2), build(alg, &b, 2));
        let lhs = iso.theta(&alg.mul(&a, &b)).unwrap();
        let rhs = iso.context().mul(&iso.theta(&a).unwrap(), &iso.theta(&b).unwrap());
        // a and b have y-degree at most 2, so both sides are known to x-order at least 6 − 4
        let known = lhs.entries.iter().chain(&rhs.entries).map(|e| e.order).min().unwrap();
        prop_assert!(known >= 2, "known only to order {}", known);
        prop_assert_eq!(lhs, rhs);
    }

    /// The completion map is additive and sends 1 to 1.
    #[test]
    fn completion_map_is_linear(a in arb_terms(2, 2, 3), b in arb_terms(2, 2, 3)) {
        let iso = iso2();
        let alg = iso.ambient().sra();
        let (a, b) = (build(alg, &a, 3), build(alg, &b, 3));
        let lhs = iso.theta(&a.add(&b)).unwrap();
        let rhs = iso.context().add(&iso.theta(&a).unwrap(), &iso.theta(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(iso.theta(&alg.one()).unwrap(), iso.context().one_element());
    }
}

#[test]
fn specialization_commutes_with_group_action() {
    let alg = h2().sra();
    let values: BTreeMap<usize, Rational> = param_values(Some(Rational::one()), &[Some(Rational::new(1, 2))]);
    let x = alg.generator(0);
    let s = alg.group_element(1);
    let sx = alg.mul(&s, &x).specialize(&values);
    assert_eq!(sx, alg.specialize_params(&values).mul(&s, &x));
}
