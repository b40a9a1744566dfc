use std::sync::Arc;

use nlie::cochain::{compose, embed, new_differential, restrict_to_g};
use nlie::rep::{build_mu, GeneralizedRepresentation, Matrix, MuElement, Representation};
use nlie::{fixtures, graded_bracket, random, Cochain, CochainSpace, RestrictedCochain, Scalar};
use proptest::prelude::*;

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::ONE
    } else {
        -Scalar::ONE
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// `[α, β] + (−1)^{pq} [β, α] = 0`
    #[test]
    fn graded_antisymmetry(seed in any::<u64>(), p in 0usize..=2, q in 0usize..=2, ternary in any::<bool>()) {
        let mut rng = random::rng(seed);
        let space = if ternary { CochainSpace::new(3, 3).unwrap() } else { CochainSpace::new(3, 2).unwrap() };
        let a = random::cochain(&mut rng, &space, p, 3);
        let b = random::cochain(&mut rng, &space, q, 3);
        let ab = graded_bracket(&a, &b).unwrap();
        let ba = graded_bracket(&b, &a).unwrap();
        prop_assert!(ab.axpy(&sign(p * q), &ba).unwrap().is_zero());
    }

    #[test]
    fn compose_is_bilinear(seed in any::<u64>(), p in 0usize..=1, q in 0usize..=1) {
        let mut rng = random::rng(seed);
        let space = CochainSpace::new(4, 3).unwrap();
        let a1 = random::cochain(&mut rng, &space, p, 4);
        let a2 = random::cochain(&mut rng, &space, p, 4);
        let b = random::cochain(&mut rng, &space, q, 4);
        let (s, t) = (random::scalar(&mut rng), random::scalar(&mut rng));
        let lhs = compose(&a1.scale(&s).axpy(&t, &a2).unwrap(), &b).unwrap();
        let rhs = compose(&a1, &b).unwrap().scale(&s).axpy(&t, &compose(&a2, &b).unwrap()).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
        let lhs = compose(&b, &a1.scale(&s).axpy(&t, &a2).unwrap()).unwrap();
        let rhs = compose(&b, &a1).unwrap().scale(&s).axpy(&t, &compose(&b, &a2).unwrap()).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
    }
}

fn small_genreps() -> Vec<(&'static str, Arc<nlie::NLieAlgebra>, GeneralizedRepresentation)> {
    let (th, thg) = fixtures::theta_example();
    let ab = Arc::new(fixtures::abelian(3, 2));
    let mut rng = random::rng(31);
    let r = random::commuting_rep(&mut rng, &ab, 2).unwrap();
    let so = Arc::new(fixtures::so3());
    let so_ad = GeneralizedRepresentation::from_rep(nlie::algebra::adjoint_rep(&so).unwrap());
    vec![
        ("theta example", th, thg),
        ("abelian m=2 commuting ρ", ab, GeneralizedRepresentation::from_rep(r)),
        ("so3 adjoint", so, so_ad),
    ]
}

fn basis_element(mu: &MuElement, p: usize, code: u64, coord: u32) -> RestrictedCochain {
    let c = Cochain::unit(mu.space().clone(), p, mu.sum_space().dim(), code, coord);
    RestrictedCochain::new(c, mu.sum_space()).unwrap()
}

/// `d` maps every basis element of `C^p_>` back into `C^{p+1}_>`; the
/// constructor of the result rejects anything on all-V keys.
#[test]
fn closure_on_basis_elements() {
    for (name, a, g) in small_genreps() {
        let mu = build_mu(&a, &g).unwrap();
        for p in 0..=2 {
            for (code, coord) in random::restricted_basis(mu.space(), p, mu.sum_space()) {
                let r = new_differential(&mu, &basis_element(&mu, p, code, coord));
                assert!(r.is_ok(), "{name}: degree {p}, key {}: {:?}", mu.space().key_of(code, p), r.err());
            }
        }
    }
    let (a, g) = fixtures::trace_induced();
    let mu = build_mu(&a, &g).unwrap();
    for p in 0..=1 {
        for (code, coord) in random::restricted_basis(mu.space(), p, mu.sum_space()) {
            assert!(new_differential(&mu, &basis_element(&mu, p, code, coord)).is_ok());
        }
    }
}

/// Whenever `[μ, μ] = 0`, `[μ, [μ, α]] = 0`.
#[test]
fn mu_squared_zero_gives_nilpotent_differential() {
    let mut rng = random::rng(32);
    let mut all = small_genreps();
    let (ti, tg) = fixtures::trace_induced();
    all.push(("trace-induced", ti, tg));
    for (name, a, g) in all {
        let mu = build_mu(&a, &g).unwrap();
        assert!(mu.is_canonical());
        for p in 0..=1 {
            for _ in 0..5 {
                let alpha = random::restricted_cochain(&mut rng, mu.space(), p, mu.sum_space(), Some(6));
                let once = graded_bracket(mu.cochain(), alpha.cochain()).unwrap();
                let twice = graded_bracket(mu.cochain(), &once).unwrap();
                assert!(twice.is_zero(), "{name}: degree {p}");
            }
        }
    }
}

#[test]
fn embed_then_restrict_is_identity() {
    let mut rng = random::rng(33);
    for (name, a, g) in small_genreps() {
        let mu = build_mu(&a, &g).unwrap();
        let space = CochainSpace::new(a.dim(), a.arity()).unwrap();
        for p in 0..=2 {
            let alpha = random::cochain(&mut rng, &space, p, g.rep().v_dim());
            let back = restrict_to_g(&embed(&alpha, &mu).unwrap());
            assert!(back.sub(&alpha).unwrap().is_zero(), "{name}: degree {p}");
        }
    }
}

#[test]
fn non_canonical_mu_is_refused() {
    // ρ(e0), ρ(e1) do not commute, but the algebra is abelian
    let a = Arc::new(fixtures::abelian(2, 2));
    let m = |r: [[i64; 2]; 2]| Matrix::from_rows(r.iter().map(|x| x.iter().map(|&c| Scalar::from_int(c)).collect()).collect()).unwrap();
    let r = Representation::new(a.clone(), 2, [(vec![0], m([[1, 0], [0, 0]])), (vec![1], m([[0, 1], [0, 0]]))]).unwrap();
    let mu = build_mu(&a, &GeneralizedRepresentation::from_rep(r)).unwrap();
    assert!(!mu.is_canonical());
    let alpha = RestrictedCochain::zero(mu.space().clone(), 0, mu.sum_space());
    assert!(matches!(new_differential(&mu, &alpha), Err(nlie::Error::Invalid(_))));
}

#[test]
fn mismatched_spaces_are_refused() {
    let s3 = CochainSpace::new(3, 3).unwrap();
    let s4 = CochainSpace::new(4, 3).unwrap();
    let a = Cochain::zero(s3, 1, 3);
    let b = Cochain::zero(s4, 1, 4);
    assert!(compose(&a, &b).is_err());
    assert!(graded_bracket(&a, &b).is_err());
}
