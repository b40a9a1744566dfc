use std::sync::Arc;

use nlie::algebra::adjoint_rep;
use nlie::basis::increasing_tuples;
use nlie::rep::{
    build_mu, build_pi_bar, build_rho_bar, build_theta_bar, check_generalized_rep, check_representation,
    GeneralizedRepresentation, Matrix, Representation,
};
use nlie::{fixtures, random, NLieAlgebra, Scalar};
use rand::Rng;

/// Add one to a single entry of one ρ matrix.
fn perturb_rep<R: Rng>(rng: &mut R, r: &Representation) -> Representation {
    let a = r.algebra().clone();
    let d = r.v_dim();
    let words = increasing_tuples(a.dim(), a.arity() - 1);
    let w = words[rng.gen_range(0..words.len())].clone();
    let mut entries: Vec<(Vec<usize>, Matrix)> = r.rho().iter().map(|(k, m)| (k.clone(), m.clone())).collect();
    let (row, col) = (rng.gen_range(0..d), rng.gen_range(0..d));
    match entries.iter_mut().find(|(k, _)| *k == w) {
        Some((_, m)) => {
            let v = m.get(row, col) + &Scalar::ONE;
            m.set(row, col, v);
        }
        None => {
            let mut m = Matrix::zeros(d);
            m.set(row, col, Scalar::ONE);
            entries.push((w, m));
        }
    }
    Representation::new(a, d, entries).unwrap()
}

fn valid_reps() -> Vec<(String, Representation)> {
    let mut rng = random::rng(21);
    let mut out = Vec::new();
    for m in [2, 3, 3, 4, 4] {
        let a = Arc::new(random::lie_algebra(&mut rng, m));
        out.push((format!("ad random Lie m={m}"), adjoint_rep(&a).unwrap()));
    }
    for a in [fixtures::a4(), fixtures::so3(), fixtures::wronskian_algebra(5), fixtures::wronskian_algebra(4)] {
        let a = Arc::new(a);
        out.push((format!("ad {}-dim", a.dim()), adjoint_rep(&a).unwrap()));
    }
    for (n, m, d) in [(2, 2, 2), (2, 3, 2), (2, 3, 3), (3, 3, 2), (3, 3, 3), (3, 2, 2), (4, 4, 2), (4, 3, 2)] {
        let a = Arc::new(fixtures::abelian(n, m));
        out.push((format!("commuting n={n} m={m} d={d}"), random::commuting_rep(&mut rng, &a, d).unwrap()));
    }
    for (n, m, d) in [(2, 3, 2), (3, 4, 1), (3, 4, 3)] {
        let (_, g) = fixtures::abelian_zero(n, m, d);
        out.push((format!("zero n={n} m={m} d={d}"), g.rep().clone()));
    }
    let a4 = Arc::new(fixtures::a4());
    out.push(("A4 trivial".into(), Representation::zero(a4, 3)));
    let (_, g) = fixtures::trace_induced();
    out.push(("trace-induced ρ".into(), g.rep().clone()));
    out
}

#[test]
fn representation_axioms_iff_mu_squared_zero() {
    let valid = valid_reps();
    assert!(valid.len() >= 20);
    let mut rng = random::rng(22);
    let mut failing = 0;
    for (name, r) in &valid {
        assert!(check_representation(r).is_empty(), "{name} should be valid");
        let g = GeneralizedRepresentation::from_rep(r.clone());
        assert!(check_generalized_rep(r.algebra(), &g).unwrap().is_zero(), "{name}: [μ,μ] ≠ 0");
        for _ in 0..2 {
            let p = perturb_rep(&mut rng, r);
            let ok = check_representation(&p).is_empty();
            let g = GeneralizedRepresentation::from_rep(p.clone());
            let mu_ok = check_generalized_rep(p.algebra(), &g).unwrap().is_zero();
            assert_eq!(ok, mu_ok, "{name} perturbed");
            failing += usize::from(!ok);
        }
    }
    assert!(failing >= 20, "only {failing} perturbations fail");
}

fn genreps() -> Vec<(&'static str, Arc<NLieAlgebra>, GeneralizedRepresentation)> {
    let (a4, ad) = fixtures::a4_adjoint();
    let (ti, tg) = fixtures::trace_induced();
    let (th, thg) = fixtures::theta_example();
    vec![("A4 adjoint", a4, ad), ("trace-induced", ti, tg), ("theta example", th, thg)]
}

/// Read π, ρ and ϑ back off μ and compare with the inputs.
#[test]
fn mu_decomposes_into_its_parts() {
    for (name, a, g) in genreps() {
        let mu = build_mu(&a, &g).unwrap();
        let w = g.space();
        let n = a.arity();
        let value = |t: &[usize]| mu.cochain().eval_basis(&[&t[..n - 1]], t[n - 1]).unwrap();
        for t in increasing_tuples(w.dim(), n) {
            let n_v = t.iter().filter(|&&i| !w.is_g(i)).count();
            let v = value(&t);
            if n_v == 0 {
                assert_eq!(w.project_g(&v), a.basis_bracket_vec(&t), "{name}: π at {t:?}");
                assert!(w.project_v(&v).iter().all(Scalar::is_zero));
            } else if n_v == 1 {
                // the V argument is last in an increasing tuple
                let rho = g.rep().act_basis(&t[..n - 1], &fixtures::unit(w.d, t[n - 1] - w.m));
                assert_eq!(w.project_v(&v), rho, "{name}: ρ at {t:?}");
            } else if n_v == n - 1 {
                let vs: Vec<usize> = t[1..].iter().map(|i| i - w.m).collect();
                let theta = g.theta_basis(t[0], &vs).map(|(s, x)| {
                    x.iter().map(|c| c.clone().signed(s * if (n - 1) % 2 == 0 { 1 } else { -1 })).collect::<Vec<_>>()
                });
                let expected = theta.unwrap_or_else(|| vec![Scalar::ZERO; w.d]);
                assert_eq!(w.project_v(&v), expected, "{name}: ϑ at {t:?}");
            } else {
                assert!(v.iter().all(Scalar::is_zero), "{name}: mixed pattern {t:?} must vanish");
            }
            if n_v > 0 {
                assert!(w.project_g(&v).iter().all(Scalar::is_zero), "{name}: g-component on {t:?}");
            }
        }
        let pi = build_pi_bar(&g, &w).unwrap();
        let rho = build_rho_bar(g.rep(), &w).unwrap();
        let theta = build_theta_bar(&g, &w).unwrap();
        for (x, y) in [(&pi, &rho), (&pi, &theta), (&rho, &theta)] {
            assert!(x.terms().keys().all(|k| !y.terms().contains_key(k)), "{name}: overlapping parts");
        }
        let sum = pi.add(&rho).unwrap().add(&theta).unwrap();
        assert!(sum.sub(mu.cochain()).unwrap().is_zero(), "{name}: parts do not sum to μ");
    }
}

/// μ is alternating in all n arguments, including the tail.
#[test]
fn mu_is_alternating() {
    for (name, a, g) in genreps() {
        let mu = build_mu(&a, &g).unwrap();
        let w = g.space();
        let n = a.arity();
        for t in increasing_tuples(w.dim(), n) {
            let canonical = mu.cochain().eval_basis(&[&t[..n - 1]], t[n - 1]).unwrap();
            for j in 0..n {
                let block: Vec<usize> = t.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &x)| x).collect();
                let v = mu.cochain().eval_basis(&[&block], t[j]).unwrap();
                let s = if (n - 1 - j) % 2 == 0 { 1 } else { -1 };
                let expected: Vec<Scalar> = canonical.iter().map(|c| c.clone().signed(s)).collect();
                assert_eq!(v, expected, "{name}: tail {} of {t:?}", t[j]);
            }
        }
        for b in increasing_tuples(w.dim(), n - 1) {
            for &z in &b {
                let v = mu.cochain().eval_basis(&[&b], z).unwrap();
                assert!(v.iter().all(Scalar::is_zero), "{name}: repeated argument {z} in {b:?}");
            }
        }
    }
}

#[test]
fn trace_induced_has_theta_and_rho() {
    let (a, g) = fixtures::trace_induced();
    assert!(!g.theta().is_empty());
    assert!(g.rep().rho().values().any(|m| !m.is_zero()));
    assert!(check_representation(g.rep()).is_empty());
    assert!(check_generalized_rep(&a, &g).unwrap().is_zero());
}

#[test]
fn breaking_theta_breaks_mu() {
    let (a, g) = fixtures::trace_induced();
    let mut theta: Vec<_> = g.theta().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    theta[0].1[0] += Scalar::ONE;
    let broken = GeneralizedRepresentation::new(g.rep().clone(), theta).unwrap();
    assert!(!check_generalized_rep(&a, &broken).unwrap().is_zero());
}

#[test]
fn mismatched_algebra_is_refused() {
    let (_, g) = fixtures::a4_adjoint();
    let other = fixtures::abelian(3, 4);
    assert!(build_mu(&other, &g).is_err());
}
