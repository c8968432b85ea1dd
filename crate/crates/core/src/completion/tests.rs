use std::sync::Arc;

use super::*;
use crate::centralizer::Algebra;
use crate::cherednik::{build_cherednik, Representation};
use crate::coeffs::ParamPoly;
use crate::groups::{FiniteSymplecticGroup, SymmetricRep};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn sym(n: usize) -> Arc<FiniteSymplecticGroup> {
    Arc::new(FiniteSymplecticGroup::symmetric(n, SymmetricRep::Reflection).unwrap())
}

fn s3_iso(order: u32) -> BEIsoData {
    let g = sym(3);
    let s = (1..g.order()).find(|&x| g.mul(x, x) == g.identity()).unwrap();
    let b = generic_base_point(&g, &[0, s]).unwrap();
    be_iso(g, &b, None, order).unwrap()
}

#[test]
fn geometric_inverse_is_exact() {
    let iso = be_iso(sym(2), &[q(1)], None, 6).unwrap();
    let comp = iso.context().algebra();
    for beta in [q(1), q(-3), Rational::new(2, 5)] {
        let inv = comp.inverse_shifted_linear(&[q(1)], &beta).unwrap();
        let lin = comp.add(&comp.linear_x(&[q(1)]), &comp.constant(ParamPoly::constant(iso.ambient().arity(), beta.clone())));
        assert_eq!(comp.mul(&lin, &inv), comp.one());
        assert_eq!(comp.mul(&inv, &lin), comp.one());
        // the coefficient of x^5 is (−1)^5 / β^6
        let c = inv.value.coeff(&[5, 0], 0);
        assert_eq!(c.as_constant().unwrap(), -&beta.pow(6).recip().unwrap());
    }
    assert!(comp.inverse_shifted_linear(&[q(1)], &q(0)).is_err());
}

#[test]
fn order_bookkeeping() {
    let iso = be_iso(sym(2), &[q(1)], None, 5).unwrap();
    let comp = iso.context().algebra();
    let x = comp.linear_x(&[q(1)]);
    let y = comp.linear_y(&[q(1)]);
    let x4 = (0..3).fold(x.clone(), |acc, _| comp.mul(&acc, &x));
    assert_eq!(x4.order, 5);
    assert_eq!(comp.mul(&y, &x4).order, 4);
    assert_eq!(comp.mul(&x4, &y).order, 5);
    assert_eq!(comp.mul(&comp.mul(&y, &y), &x).order, 3);
    // known modulo order 4 only: x^4 = 0 there
    let low = comp.mul(&y, &x4);
    assert_eq!(comp.mul(&low, &x4), comp.zero());
}

#[test]
fn recenter_round_trip() {
    let alg = build_cherednik(sym(3), Representation::Trivial).unwrap();
    let sra = alg.sra();
    let a = sra.mul(&sra.pow(&alg.x(0), 3), &sra.mul(&alg.x(1), &alg.y(1)));
    let a = sra.mul(&a, &sra.group_element(1));
    assert_eq!(recenter(&a, &[q(0), q(0)]).unwrap(), a);
    let b = [q(2), Rational::new(-1, 3)];
    let nb = [q(-2), Rational::new(1, 3)];
    assert_eq!(recenter(&recenter(&a, &b).unwrap(), &nb).unwrap(), a);
    // (x1 + 2)^2 expanded by hand
    let sq = sra.pow(&alg.x(0), 2);
    let expect = sq.add(&alg.x(0).scale(&q(4))).add(&sra.one().scale(&q(4)));
    assert_eq!(recenter(&sq, &b).unwrap(), expect);
    assert!(recenter(&sq, &[q(1)]).is_err());
}

#[test]
fn recenter_preserves_commutation_relations() {
    let alg = build_cherednik(sym(2), Representation::Trivial).unwrap();
    let sra = alg.sra();
    let b = [q(1)];
    let (x, y) = (alg.x(0), alg.y(0));
    let rx = recenter(&x, &b).unwrap();
    let ry = recenter(&y, &b).unwrap();
    assert_eq!(sra.commutator(&ry, &rx), recenter(&sra.commutator(&y, &x), &b).unwrap());
    assert!(sra.commutator(&rx, &recenter(&sra.mul(&x, &x), &b).unwrap()).is_zero());
}

#[test]
fn rank_one_images_match_hand_computation() {
    let iso = be_iso(sym(2), &[q(1)], None, 6).unwrap();
    assert_eq!(iso.subgroup(), &[0]);
    let comp = iso.context().algebra();
    let arity = iso.ambient().arity();
    let c = comp.constant(ParamPoly::c(arity, 1));
    let one = comp.constant(ParamPoly::one(arity));
    let x = comp.linear_x(&[q(1)]);
    let y = comp.linear_y(&[q(1)]);
    let inv = comp.inverse_shifted_linear(&[q(1)], &q(1)).unwrap();
    let frac = comp.mul(&c, &inv);
    // reps (1, s); s acts by −1 on h and h*
    let xi = iso.x_image(0);
    assert_eq!(*xi.entry(0, 0), comp.add(&x, &one));
    assert_eq!(*xi.entry(1, 1), comp.neg(&comp.add(&x, &one)));
    assert!(xi.entry(0, 1).is_zero() && xi.entry(1, 0).is_zero());
    let yi = iso.y_image(0);
    assert_eq!(*yi.entry(0, 0), comp.sub(&y, &frac));
    assert_eq!(*yi.entry(0, 1), frac);
    assert_eq!(*yi.entry(1, 0), comp.neg(&frac));
    assert_eq!(*yi.entry(1, 1), comp.add(&comp.neg(&y), &frac));
}

#[test]
fn rank_one_homomorphism() {
    let iso = be_iso(sym(2), &[q(1)], None, 6).unwrap();
    let report = verify_homomorphism(&iso).unwrap();
    assert_eq!(report.order, 5);
    for c in &report.checks {
        assert!(c.passed, "{}: {:?}", c.relation, c.first_failure);
    }
    assert!(!report.checks.is_empty());
}

#[test]
fn s3_over_s2_homomorphism() {
    let iso = s3_iso(4);
    assert_eq!(iso.subgroup().len(), 2);
    assert_eq!(iso.context().size(), 3);
    let report = verify_homomorphism(&iso).unwrap();
    for c in &report.checks {
        assert!(c.passed, "{}: {:?}", c.relation, c.first_failure);
    }
}

#[test]
fn specialized_parameters_also_satisfy_relations() {
    let iso = be_iso(sym(2), &[q(2)], Some(&[Rational::new(1, 3)]), 5).unwrap();
    assert!(verify_homomorphism(&iso).unwrap().passed());
}

#[test]
fn wrong_sign_is_detected() {
    // ϑ(y) built with −c instead of c must break [y, x]
    let iso = be_iso(sym(2), &[q(1)], None, 5).unwrap();
    let ctx = iso.context();
    let comp = ctx.algebra();
    let arity = iso.ambient().arity();
    let c = comp.constant(ParamPoly::c(arity, 1));
    let inv = comp.inverse_shifted_linear(&[q(1)], &q(1)).unwrap();
    let twice = comp.scale(&comp.mul(&c, &inv), &q(2));
    let mut y = iso.y_image(0).clone();
    *y.entry_mut(0, 0) = comp.add(y.entry(0, 0), &twice);
    *y.entry_mut(0, 1) = comp.sub(y.entry(0, 1), &twice);
    let lhs = ctx.sub(&ctx.mul(&y, iso.x_image(0)), &ctx.mul(iso.x_image(0), &y));
    let rhs = iso.theta(&iso.ambient().relation_rhs(0, 0)).unwrap();
    assert_ne!(lhs, rhs);
}

#[test]
fn truncation_is_coherent() {
    let high = be_iso(sym(2), &[q(1)], None, 6).unwrap();
    let low = be_iso(sym(2), &[q(1)], None, 4).unwrap();
    for ((n1, a), (n2, b)) in high.generator_images().into_iter().zip(low.generator_images()) {
        assert_eq!(n1, n2);
        let a4 = a.map(|e| e.truncate(4));
        for (x, y) in a4.entries.iter().zip(&b.entries) {
            assert_eq!(x.value, y.value, "{n1}");
        }
    }
    let r_high = verify_homomorphism(&high).unwrap();
    let r_low = verify_homomorphism(&low).unwrap();
    let names = |r: &HomomorphismReport| r.checks.iter().map(|c| (c.relation.clone(), c.passed)).collect::<Vec<_>>();
    assert_eq!(names(&r_high), names(&r_low));
}

#[test]
fn undeformed_baseline() {
    for iso in [be_iso(sym(2), &[q(1)], None, 5).unwrap(), s3_iso(3)] {
        let r = mod_param_baseline(&iso).unwrap();
        assert!(r.passed(), "{r:?}");
    }
    // at c = 0 the commutator is exactly t, with nothing lost to truncation
    let iso = be_iso(sym(2), &[q(1)], Some(&[q(0)]), 4).unwrap();
    let ctx = iso.context();
    let (x, y) = (iso.x_image(0), iso.y_image(0));
    let comm = ctx.sub(&ctx.mul(y, x), &ctx.mul(x, y));
    let t = ctx.algebra().constant(ParamPoly::t(iso.ambient().arity()));
    for i in 0..2 {
        assert_eq!(comm.entry(i, i).value, t.value);
        assert!(comm.entry(i, 1 - i).value.is_zero());
    }
}

#[test]
fn torus_equivariance() {
    for iso in [be_iso(sym(2), &[q(1)], None, 5).unwrap(), s3_iso(3)] {
        let r = equivariance_check(&iso);
        assert!(r.passed(), "{r:?}");
        assert!(r.checks.iter().any(|c| c.1 == 2));
    }
}

#[test]
fn corners() {
    let iso = be_iso(sym(2), &[q(1)], None, 6).unwrap();
    let comp = iso.context().algebra();
    let amb = iso.ambient();
    let arity = amb.arity();
    let one = corner_extract(&iso, &amb.sra().one()).unwrap();
    assert_eq!(one, comp.one());
    let x = corner_extract(&iso, &amb.x(0)).unwrap();
    assert_eq!(x, comp.add(&comp.linear_x(&[q(1)]), &comp.one()));
    // Euler element: x̲y̲ + y̲ + 1/2 − c
    let h = corner_extract(&iso, &amb.euler_element()).unwrap();
    let xl = comp.linear_x(&[q(1)]);
    let yl = comp.linear_y(&[q(1)]);
    let expect = comp.add(
        &comp.add(&comp.mul(&xl, &yl), &yl),
        &comp.constant(&ParamPoly::constant(arity, Rational::new(1, 2)) - &ParamPoly::c(arity, 1)),
    );
    assert_eq!(h, expect);
}

#[test]
fn s3_corner_of_x_is_shifted() {
    let iso = s3_iso(3);
    let comp = iso.context().algebra();
    for j in 0..2 {
        let mut alpha = vec![q(0), q(0)];
        alpha[j] = q(1);
        let got = corner_extract(&iso, &iso.ambient().x(j)).unwrap();
        let shift = ParamPoly::constant(iso.ambient().arity(), iso.base_point()[j].clone());
        assert_eq!(got, comp.add(&comp.linear_x(&alpha), &comp.constant(shift)));
    }
}

#[test]
fn matrix_units_over_the_truncated_completion() {
    let iso = be_iso(sym(2), &[q(1)], None, 2).unwrap();
    assert!(iso.context().matrix_unit_check().passed());
    let iso = s3_iso(1);
    assert!(iso.context().matrix_unit_check().passed());
}

#[test]
fn base_point_errors() {
    assert!(matches!(be_iso(sym(2), &[q(1), q(2)], None, 3), Err(Error::Dimension(_))));
    assert!(be_iso(sym(2), &[q(1)], None, 0).is_err());
    assert!(matches!(be_iso(sym(2), &[q(1)], Some(&[q(1), q(2)]), 3), Err(Error::LengthMismatch(_))));
    // b = 0 has stabilizer W and gives the trivial one-coset centralizer
    let iso = be_iso(sym(2), &[q(0)], None, 3).unwrap();
    assert_eq!(iso.context().size(), 1);
    assert!(verify_homomorphism(&iso).unwrap().passed());
}

#[test]
fn flipped_form_breaks_the_homomorphism() {
    use crate::cherednik::flip_omega_s;
    for (n, b, order) in [(2usize, vec![q(1)], 4u32), (3, vec![q(1), q(3)], 3)] {
        let alg = build_cherednik(sym(n), Representation::Trivial).unwrap();
        let s = alg.reflections()[0].element;
        let iso = be_iso_for(flip_omega_s(&alg, s).unwrap(), &b, order).unwrap();
        let report = verify_homomorphism(&iso).unwrap();
        assert!(!report.passed());
        let bad = report.checks.iter().find(|c| !c.passed).unwrap();
        assert!(bad.first_failure.as_ref().unwrap().contains("differs by"), "{bad:?}");
        assert!(verify_homomorphism(&be_iso_for(alg, &b, order).unwrap()).unwrap().passed());
    }
}
