use std::collections::BTreeMap;
use std::sync::Arc;

use super::*;
use crate::coeffs::RatMatrix;
use crate::error::Error;
use crate::groups::{FiniteSymplecticGroup, SymmetricRep};

fn sym(n: usize) -> Arc<FiniteSymplecticGroup> {
    Arc::new(FiniteSymplecticGroup::symmetric(n, SymmetricRep::Reflection).unwrap())
}

/// `{1, s}` for the first transposition in index order.
fn s2_in(g: &FiniteSymplecticGroup) -> Vec<usize> {
    let s = (1..g.order()).find(|&x| g.mul(x, x) == g.identity() && g.h_matrix(x).unwrap().trace() == Rational::from_int(g.dim_h().unwrap() as i64 - 2)).unwrap();
    g.subgroup_generated(&[s])
}

fn three_cycle(g: &FiniteSymplecticGroup) -> usize {
    (1..g.order()).find(|&x| g.mul(x, g.mul(x, x)) == g.identity()).unwrap()
}

#[test]
fn context_sizes() {
    let g2 = sym(2);
    let all2: Vec<usize> = (0..2).collect();
    assert_eq!(build_centralizer(g2.clone(), &all2, FdAlgebra::rationals(&all2)).unwrap().size(), 1);
    assert_eq!(build_centralizer(g2.clone(), &[0], FdAlgebra::rationals(&[0])).unwrap().size(), 2);
    let g3 = sym(3);
    let h = s2_in(&g3);
    let ctx = build_centralizer(g3.clone(), &h, FdAlgebra::group_algebra(&g3, &h).unwrap()).unwrap();
    assert_eq!((ctx.size(), ctx.rational_dim()), (3, 18));
    assert_eq!(ctx.representatives()[0], g3.identity());
    assert!(matches!(build_centralizer(g3.clone(), &[0, 1, 2], FdAlgebra::rationals(&[0])).unwrap_err(), Error::NotSubgroup(_)));
}

#[test]
fn group_embedding_by_coset_arithmetic() {
    let g2 = sym(2);
    let ctx = build_centralizer(g2.clone(), &[0], FdAlgebra::rationals(&[0])).unwrap();
    assert_eq!(ctx.embed_group(0), ctx.one_element());
    let one = vec![Rational::one()];
    let swap = ctx.add(&ctx.matrix_unit(0, 1, &one), &ctx.matrix_unit(1, 0, &one));
    assert_eq!(ctx.embed_group(1), swap);

    let g3 = sym(3);
    let h = s2_in(&g3);
    let qh = FdAlgebra::group_algebra(&g3, &h).unwrap();
    let ctx = build_centralizer(g3.clone(), &h, qh.clone()).unwrap();
    let c = three_cycle(&g3);
    let m = ctx.embed_group(c);
    // oracle: g_i c g_j^{-1} ∈ H picks the column and the entry
    for (i, &ri) in ctx.representatives().iter().enumerate() {
        for (j, &rj) in ctx.representatives().iter().enumerate() {
            let w = g3.mul(g3.mul(ri, c), g3.inv(rj));
            let want = if h.contains(&w) { qh.embed_subgroup(w) } else { qh.zero() };
            assert_eq!(m.entry(i, j), &want);
        }
    }
}

#[test]
fn matrix_unit_relations_exhaustive() {
    let g3 = sym(3);
    let g2 = sym(2);
    let cases: Vec<(Arc<FiniteSymplecticGroup>, Vec<usize>)> = vec![
        (g3.clone(), s2_in(&g3)),
        (g3.clone(), vec![0]),
        (g2.clone(), vec![0, 1]),
    ];
    for (g, h) in cases {
        let ctx = build_centralizer(g.clone(), &h, FdAlgebra::group_algebra(&g, &h).unwrap()).unwrap();
        let report = ctx.matrix_unit_check();
        assert!(report.passed(), "{report:?}");
        assert!(ctx.verify_morita(&ctx.morita_witness()));
        let q = build_centralizer(g, &h, FdAlgebra::rationals(&h)).unwrap();
        assert!(q.matrix_unit_check().passed());
    }
}

#[test]
fn conjugation_direction() {
    // g e(x) g^{-1} is e(x g^{-1}); it agrees with e(xg) only when g is an involution
    let g3 = sym(3);
    let h = s2_in(&g3);
    let ctx = build_centralizer(g3.clone(), &h, FdAlgebra::group_algebra(&g3, &h).unwrap()).unwrap();
    let c = three_cycle(&g3);
    let (eg, eg_inv) = (ctx.embed_group(c), ctx.embed_group(g3.inv(c)));
    for x in 0..ctx.size() {
        let e = ctx.idempotent(x).unwrap();
        let lhs = ctx.mul(&ctx.mul(&eg, &e), &eg_inv);
        assert_eq!(lhs, ctx.idempotent(ctx.coset_times(x, g3.inv(c))).unwrap());
    }
    assert_ne!(ctx.coset_times(1, c), ctx.coset_times(1, g3.inv(c)));
}

#[test]
fn invariants_and_idempotents() {
    let g3 = sym(3);
    let h = s2_in(&g3);
    let qh = FdAlgebra::group_algebra(&g3, &h).unwrap();
    let ctx = build_centralizer(g3.clone(), &h, qh.clone()).unwrap();
    assert_eq!(ctx.embed_invariant(&qh.one()).unwrap(), ctx.one_element());
    // 1 + s is central in ℚS_2, hence central in Z
    let z = ctx.embed_invariant(&qh.add(&qh.embed_subgroup(h[0]), &qh.embed_subgroup(h[1]))).unwrap();
    for b in ctx.spanning_set() {
        assert_eq!(ctx.mul(&z, &b), ctx.mul(&b, &z));
    }
    assert_eq!(ctx.idempotent(3).unwrap_err(), Error::UnknownCoset(3));
    // E_11 in Mat_2(ℚ) is not invariant under the swap
    let g2 = sym(2);
    let rho = BTreeMap::from([(0, RatMatrix::identity(2)), (1, RatMatrix::from_int_rows(&[&[0, 1], &[1, 0]]))]);
    let mat = FdAlgebra::matrices(2, &rho).unwrap();
    let ctx = build_centralizer(g2, &[0, 1], mat.clone()).unwrap();
    assert_eq!(ctx.embed_invariant(&mat.basis_element(0)).unwrap_err(), Error::NotInvariant);
    assert!(ctx.matrix_unit_check().passed());
}

#[test]
fn change_of_representatives() {
    let g3 = sym(3);
    let h = s2_in(&g3);
    let ctx = build_centralizer(g3.clone(), &h, FdAlgebra::group_algebra(&g3, &h).unwrap()).unwrap();
    let mut alt = vec![0; ctx.size()];
    for g in 0..g3.order() {
        alt[ctx.coset_of(g)] = g;
    }
    assert_ne!(alt, ctx.representatives());
    assert!(ctx.representatives_independent(alt).unwrap());
}

#[test]
fn corner_recovery() {
    // B = Z itself: the recovered matrix is b placed in the (1,1) corners
    let g3 = sym(3);
    let h = s2_in(&g3);
    let st = selftest(g3.clone(), &h).unwrap();
    assert!(st.passed(), "{st:?}");
    assert_eq!(st.smash.source_dim, 18);

    // B = Mat_2(ℚ) with s acting by the swap matrix and e = E_11
    let g2 = sym(2);
    let ctx = build_centralizer(g2.clone(), &[0], FdAlgebra::rationals(&[0])).unwrap();
    let mat = FdAlgebra::matrices(2, &BTreeMap::new()).unwrap();
    let flat = |rows: &[&[i64]]| RatMatrix::from_int_rows(rows).entries().to_vec();
    let images = MatrixUnitImages { group_images: vec![mat.one(), flat(&[&[0, 1], &[1, 0]])], e: flat(&[&[1, 0], &[0, 0]]) };
    let b = flat(&[&[2, 3], &[5, 7]]);
    let rec = corner_recover(&ctx, &mat, &images, &b).unwrap();
    let e11 = &images.e;
    for (i, j, v) in [(0, 0, 2), (0, 1, 3), (1, 0, 5), (1, 1, 7)] {
        assert_eq!(rec.entry(i, j), &mat.scale(e11, &Rational::from_int(v)));
    }
    assert!(corner_maps_roundtrip(&ctx, &mat, &images, &mat.spanning_set()).unwrap());
    let bad = MatrixUnitImages { group_images: images.group_images.clone(), e: mat.one() };
    assert!(matches!(corner_recover(&ctx, &mat, &bad, &b).unwrap_err(), Error::MatrixUnits(_)));

    let qh = FdAlgebra::group_algebra(&g3, &h).unwrap();
    let z = build_centralizer(g3, &h, qh).unwrap();
    let zi = MatrixUnitImages::from_centralizer(&z);
    let samples: Vec<_> = z.spanning_set().into_iter().step_by(5).collect();
    assert!(corner_maps_roundtrip(&z, &z, &zi, &samples).unwrap());
}

#[test]
fn smash_product_isomorphism() {
    let g3 = sym(3);
    let h = s2_in(&g3);
    let trivial: BTreeMap<usize, RatMatrix> = h.iter().map(|&x| (x, RatMatrix::identity(1))).collect();
    let r = smash_iso(g3.clone(), &h, &FdAlgebra::rationals(&[]), &trivial).unwrap();
    assert_eq!((r.source_dim, r.target_dim, r.image_rank), (18, 18, 18));
    assert!(r.passed());
    // ℚ[x]/(x^2) with the sign action of S_2
    let a0 = FdAlgebra::truncated_polynomials(2, &[]);
    let sign = BTreeMap::from([(h[0], RatMatrix::identity(2)), (h[1], RatMatrix::from_int_rows(&[&[1, 0], &[0, -1]]))]);
    let r = smash_iso(g3.clone(), &h, &a0, &sign).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.target_dim, 36);
    let bad = BTreeMap::from([(h[0], RatMatrix::identity(2)), (h[1], RatMatrix::from_int_rows(&[&[1, 0], &[0, 2]]))]);
    assert!(matches!(smash_iso(g3, &h, &a0, &bad).unwrap_err(), Error::NotAutomorphism(_)));
}

#[test]
fn bimodule_transport() {
    let g3 = sym(3);
    let h = s2_in(&g3);
    let qh = FdAlgebra::group_algebra(&g3, &h).unwrap();
    let ctx = build_centralizer(g3, &h, qh.clone()).unwrap();
    let reg = FdBimodule::regular(&qh);
    let t = BimoduleTransport::new(&ctx, reg.clone()).unwrap();
    assert_eq!(t.dim(), ctx.rational_dim());
    let samples: Vec<_> = ctx.spanning_set().into_iter().step_by(4).collect();
    assert!(t.check_axioms(&samples));
    assert!(t.corner_roundtrip());
    assert_eq!(BimoduleTransport::new(&ctx, FdBimodule::zero(&qh)).unwrap().dim(), 0);
    let double = BimoduleTransport::new(&ctx, reg.direct_sum(&reg)).unwrap();
    assert_eq!(double.dim(), 2 * t.dim());
    assert!(double.corner_roundtrip());
    let mut broken = reg;
    broken.right[1] = RatMatrix::zeros(2, 2);
    assert!(matches!(BimoduleTransport::new(&ctx, broken).unwrap_err(), Error::BimoduleAxioms(_)));
}

fn conjugation_action(g: &FiniteSymplecticGroup, a: &FdAlgebra, elems: &[usize]) -> BTreeMap<usize, RatMatrix> {
    // x acts on the basis of ℚH by conjugation
    let basis: Vec<usize> = {
        let mut v: Vec<usize> = a.subgroup_images().keys().copied().collect();
        v.sort_unstable();
        v
    };
    elems
        .iter()
        .map(|&x| {
            let mut m = RatMatrix::zeros(basis.len(), basis.len());
            for (j, &b) in basis.iter().enumerate() {
                let i = basis.iter().position(|&c| c == g.conj(x, b)).unwrap();
                m[(i, j)] = Rational::one();
            }
            (x, m)
        })
        .collect()
}

#[test]
fn equivariant_actions() {
    let g3 = sym(3);
    let all: Vec<usize> = (0..6).collect();
    let a3 = g3.subgroup_generated(&[three_cycle(&g3)]);
    let qa3 = FdAlgebra::group_algebra(&g3, &a3).unwrap();
    let ctx = build_centralizer(g3.clone(), &a3, qa3.clone()).unwrap();
    let act = equivariant_action(&ctx, &all, &conjugation_action(&g3, &qa3, &all)).unwrap();
    let e = ctx.idempotent(0).unwrap();
    let samples = ctx.spanning_set();
    for &x in &all {
        assert_eq!(act.act_first(&ctx, x, &e).unwrap(), e);
        let (ex, ex_inv) = (ctx.embed_group(x), ctx.embed_group(g3.inv(x)));
        for phi in &samples {
            let first = act.act_first(&ctx, x, phi).unwrap();
            let inner = ctx.mul(&ctx.mul(&ex, phi), &ex_inv);
            assert_eq!(act.act_second(&ctx, x, &inner).unwrap(), first);
            if a3.contains(&x) {
                assert_eq!(first, inner);
                assert_eq!(&act.act_second(&ctx, x, phi).unwrap(), phi);
            }
        }
        for &y in &all {
            let phi = &samples[7];
            let xy = g3.mul(x, y);
            let lhs = act.act_first(&ctx, x, &act.act_first(&ctx, y, phi).unwrap()).unwrap();
            assert_eq!(lhs, act.act_first(&ctx, xy, phi).unwrap());
        }
    }
    let p = &samples[3];
    let q = &samples[10];
    let x = all[1];
    assert_eq!(
        act.act_first(&ctx, x, &ctx.mul(p, q)).unwrap(),
        ctx.mul(&act.act_first(&ctx, x, p).unwrap(), &act.act_first(&ctx, x, q).unwrap())
    );
    // S_2 is not normal in S_3
    let h = s2_in(&g3);
    let qh = FdAlgebra::group_algebra(&g3, &h).unwrap();
    let ctx2 = build_centralizer(g3.clone(), &h, qh.clone()).unwrap();
    assert!(matches!(equivariant_action(&ctx2, &all, &conjugation_action(&g3, &qh, &h)).unwrap_err(), Error::NotNormal(_)));
    // H̃ = H: the first action is conjugation by the embedded group
    let act = equivariant_action(&ctx2, &h, &conjugation_action(&g3, &qh, &h)).unwrap();
    for phi in ctx2.spanning_set() {
        let inner = ctx2.mul(&ctx2.mul(&ctx2.embed_group(h[1]), &phi), &ctx2.embed_group(h[1]));
        assert_eq!(act.act_first(&ctx2, h[1], &phi).unwrap(), inner);
    }
}

#[test]
fn derivations_lift_entrywise() {
    let g3 = sym(3);
    let h = s2_in(&g3);
    let a = FdAlgebra::truncated_polynomials(3, &h);
    let ctx = build_centralizer(g3.clone(), &h, a.clone()).unwrap();
    let euler = RatMatrix::from_int_rows(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
    let d = derivation_lift(&ctx, &euler).unwrap();
    let span = ctx.spanning_set();
    for p in &span {
        for q in &span {
            let lhs = d.apply(&ctx.mul(p, q));
            let rhs = ctx.add(&ctx.mul(&d.apply(p), q), &ctx.mul(p, &d.apply(q)));
            assert_eq!(lhs, rhs);
        }
    }
    for g in 0..g3.order() {
        let eg = ctx.embed_group(g);
        assert!(ctx.is_zero_element(&d.apply(&eg)));
        assert_eq!(d.apply(&ctx.mul(&eg, &span[4])), ctx.mul(&eg, &d.apply(&span[4])));
    }
    let zero = derivation_lift(&ctx, &RatMatrix::zeros(3, 3)).unwrap();
    assert!(ctx.is_zero_element(&zero.apply(&span[5])));
    // d/dx does not preserve the ideal (x^3)
    let ddx = RatMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 2], &[0, 0, 0]]);
    assert!(matches!(derivation_lift(&ctx, &ddx).unwrap_err(), Error::NotDerivation(_)));
}
