use std::sync::Arc;

use nlie::algebra::{adjoint_rep, fundamental_bracket, word, Space};
use nlie::basis::increasing_tuples;
use nlie::rep::Matrix;
use nlie::{bracket_eval, check_fundamental_identity, delta_rho, fixtures, graded_bracket, random};
use nlie::{cochain::pi_cochain, CochainSpace, Cochain, NLieAlgebra, Scalar, Vector};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| Scalar::new(p, q))
}

fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(), dim).prop_map(|c| Vector::from_coeffs(Space::G, c))
}

fn algebras() -> Vec<NLieAlgebra> {
    let mut rng = random::rng(11);
    vec![fixtures::a4(), fixtures::so3(), random::lie_algebra(&mut rng, 4), fixtures::wronskian_algebra(5)]
}

fn combo(a: &Scalar, u: &Vector, b: &Scalar, w: &Vector) -> Vector {
    let mut out = u.scaled(a);
    out.add_scaled(b, &w.coeffs);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_multilinear(
        which in 0usize..4,
        args in prop::collection::vec(vector(5), 3),
        extra in vector(5),
        a in scalar(),
        b in scalar(),
        slot in 0usize..3,
    ) {
        let alg = &algebras()[which];
        let (n, m) = (alg.arity(), alg.dim());
        let cut = |v: &Vector| Vector::from_coeffs(Space::G, v.coeffs[..m].to_vec());
        let args: Vec<Vector> = args.iter().take(n).map(cut).collect();
        let extra = cut(&extra);
        let slot = slot % n;
        let mut mixed = args.clone();
        mixed[slot] = combo(&a, &args[slot], &b, &extra);
        let mut other = args.clone();
        other[slot] = extra;
        let lhs = bracket_eval(alg, &mixed).unwrap();
        let rhs = combo(&a, &bracket_eval(alg, &args).unwrap(), &b, &bracket_eval(alg, &other).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_alternating(which in 0usize..4, args in prop::collection::vec(vector(5), 3), i in 0usize..3, j in 0usize..3) {
        let alg = &algebras()[which];
        let (n, m) = (alg.arity(), alg.dim());
        let (i, j) = (i % n, j % n);
        prop_assume!(i != j);
        let mut args: Vec<Vector> = args.iter().take(n).map(|v| Vector::from_coeffs(Space::G, v.coeffs[..m].to_vec())).collect();
        args[j] = args[i].clone();
        prop_assert!(bracket_eval(alg, &args).unwrap().is_zero());
    }
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y]` over basis triples.
fn jacobi_holds(a: &NLieAlgebra) -> bool {
    let m = a.dim();
    let e = |i: usize| Vector::basis(Space::G, m, i);
    let br = |u: &Vector, v: &Vector| bracket_eval(a, &[u.clone(), v.clone()]).unwrap();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let mut s = br(&br(&e(x), &e(y)), &e(z));
                s.add_scaled(&Scalar::ONE, &br(&br(&e(y), &e(z)), &e(x)).coeffs);
                s.add_scaled(&Scalar::ONE, &br(&br(&e(z), &e(x)), &e(y)).coeffs);
                if !s.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn binary_fundamental_identity_is_jacobi() {
    let mut rng = random::rng(12);
    let mut tables = vec![fixtures::so3(), fixtures::bad_jacobi(), fixtures::abelian(2, 3), fixtures::abelian(2, 2)];
    for m in [2, 3] {
        for _ in 0..3 {
            let l = random::lie_algebra(&mut rng, m);
            tables.push(random::perturb(&mut rng, &l));
            tables.push(l);
        }
    }
    let mut failing = 0;
    for a in &tables {
        let fi = check_fundamental_identity(a).is_empty();
        assert_eq!(fi, jacobi_holds(a), "{a:?}");
        failing += usize::from(!fi);
    }
    assert!(failing >= 2);
}

#[test]
fn fundamental_identity_iff_bracket_squared_zero() {
    let mut rng = random::rng(13);
    let mut tables = vec![fixtures::a4(), fixtures::bad_jacobi(), fixtures::so3(), fixtures::abelian(3, 4)];
    for k in 4..=8 {
        tables.push(fixtures::wronskian_algebra(k));
    }
    for m in [2, 3, 4] {
        tables.push(random::lie_algebra(&mut rng, m));
    }
    for base in [fixtures::a4(), fixtures::so3(), fixtures::wronskian_algebra(5)] {
        for _ in 0..3 {
            tables.push(random::perturb(&mut rng, &base));
        }
    }
    let (mut valid, mut invalid) = (0, 0);
    for a in &tables {
        let fi = check_fundamental_identity(a).is_empty();
        let pi = pi_cochain(a);
        assert_eq!(fi, graded_bracket(&pi, &pi).unwrap().is_zero(), "{a:?}");
        if fi {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    assert!(valid >= 5 && invalid >= 5, "{valid} valid, {invalid} invalid");
}

#[test]
fn wronskian_identity_fails_from_seven() {
    for k in 3..=6 {
        assert!(check_fundamental_identity(&fixtures::wronskian_algebra(k)).is_empty(), "k = {k}");
    }
    for k in [7, 8] {
        assert!(!check_fundamental_identity(&fixtures::wronskian_algebra(k)).is_empty(), "k = {k}");
    }
}

/// `ad_X ad_Y − ad_Y ad_X = ad_{[X,Y]_F}` on a valid algebra.
#[test]
fn fundamental_objects_act_by_commutators() {
    let mut rng = random::rng(14);
    for a in [fixtures::a4(), fixtures::wronskian_algebra(5), random::lie_algebra(&mut rng, 3)] {
        let a = Arc::new(a);
        let ad = adjoint_rep(&a).unwrap();
        let words = increasing_tuples(a.dim(), a.arity() - 1);
        let mat = |w: &[usize]| ad.matrix(w).cloned().unwrap_or_else(|| Matrix::zeros(a.dim()));
        for x in &words {
            for y in &words {
                let xy = fundamental_bracket(&a, &[(word(x, a.dim()).unwrap(), Scalar::ONE)], &[(word(y, a.dim()).unwrap(), Scalar::ONE)])
                    .unwrap();
                let mut rhs = Matrix::zeros(a.dim());
                for (w, c) in &xy {
                    rhs.add_scaled(c, &mat(w.indices()));
                }
                let lhs = mat(x).mul(&mat(y)).sub(&mat(y).mul(&mat(x)));
                assert_eq!(lhs, rhs, "x = {x:?}, y = {y:?}");
            }
        }
    }
}

#[test]
fn fundamental_bracket_rejects_bad_words() {
    let a = fixtures::a4();
    let short = word(&[0], 4).unwrap();
    let ok = word(&[0, 1], 4).unwrap();
    assert!(fundamental_bracket(&a, &[(short, Scalar::ONE)], &[(ok, Scalar::ONE)]).is_err());
}

/// `[π, α] = δ_ad(α)` for binary brackets as well.
#[test]
fn pi_bracket_is_adjoint_coboundary_for_lie_algebras() {
    let mut rng = random::rng(15);
    for a in [fixtures::so3(), random::lie_algebra(&mut rng, 3)] {
        let a = Arc::new(a);
        let ad = adjoint_rep(&a).unwrap();
        let pi = pi_cochain(&a);
        let space = CochainSpace::new(a.dim(), 2).unwrap();
        for p in 0..=2 {
            for code in 0..space.key_count(p) {
                for coord in 0..a.dim() as u32 {
                    let alpha = Cochain::unit(space.clone(), p, a.dim(), code, coord);
                    let diff = graded_bracket(&pi, &alpha).unwrap().sub(&delta_rho(&ad, &alpha).unwrap()).unwrap();
                    assert!(diff.is_zero(), "degree {p}, key {}", space.key_of(code, p));
                }
            }
        }
    }
}

#[test]
fn adjoint_of_invalid_algebra_is_refused() {
    let a = Arc::new(fixtures::bad_jacobi());
    assert!(matches!(adjoint_rep(&a), Err(nlie::Error::Invalid(_))));
}
