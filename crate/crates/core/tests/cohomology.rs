use std::collections::HashMap;
use std::sync::Arc;

use nlie::algebra::adjoint_rep;
use nlie::cohomology::{
    assemble_matrix, cohomology_report, rank_and_kernel_of, ComplexKind, Differential, MAX_DEGREE_CAP,
};
use nlie::rep::{build_mu, GeneralizedRepresentation, Representation};
use nlie::{fixtures, random, CochainSpace, NLieAlgebra, Scalar};

fn cases() -> Vec<(&'static str, Arc<NLieAlgebra>, GeneralizedRepresentation)> {
    let (a4, ad) = fixtures::a4_adjoint();
    let (ti, tg) = fixtures::trace_induced();
    let (th, thg) = fixtures::theta_example();
    let so = Arc::new(fixtures::so3());
    let so_ad = GeneralizedRepresentation::from_rep(adjoint_rep(&so).unwrap());
    let ab = Arc::new(fixtures::abelian(3, 3));
    let r = random::commuting_rep(&mut random::rng(41), &ab, 2).unwrap();
    vec![
        ("A4 adjoint", a4, ad),
        ("trace-induced", ti, tg),
        ("theta example", th, thg),
        ("so3 adjoint", so, so_ad),
        ("abelian commuting ρ", ab, GeneralizedRepresentation::from_rep(r)),
    ]
}

#[test]
fn rank_plus_nullity_is_column_count() {
    for (name, a, g) in cases() {
        let mu = build_mu(&a, &g).unwrap();
        for diff in [Differential::new_complex(&mu), Differential::classical(g.rep()).unwrap()] {
            for p in 0..=1 {
                let m = assemble_matrix(&diff, p).unwrap();
                let e = rank_and_kernel_of(&m, true);
                assert_eq!(e.rank + e.kernel.len(), m.shape().1, "{name} degree {p}");
                for k in &e.kernel {
                    assert!(m.matrix.apply(k).is_empty(), "{name}: kernel vector not in kernel");
                }
            }
        }
    }
}

/// The classical matrix is the block of the new one on pure-g rows and columns.
#[test]
fn classical_matrix_is_pure_g_block() {
    for (name, a, g) in cases() {
        let mu = build_mu(&a, &g).unwrap();
        let (m, n) = (a.dim(), a.arity());
        let gs = CochainSpace::new(m, n).unwrap();
        let ws = mu.space().clone();
        let to_w = |code: u64, coord: u32, p: usize| -> (u64, u32) {
            (ws.code_of(&gs.key_of(code, p)).unwrap(), coord + m as u32)
        };
        let new = Differential::new_complex(&mu);
        let classical = Differential::classical(g.rep()).unwrap();
        for p in 0..=1 {
            let nm = assemble_matrix(&new, p).unwrap();
            let cm = assemble_matrix(&classical, p).unwrap();
            let col_of: HashMap<(u64, u32), usize> = nm.source.iter().enumerate().map(|(i, k)| (*k, i)).collect();
            let row_of: HashMap<(u64, u32), usize> = nm.target.iter().enumerate().map(|(i, k)| (*k, i)).collect();
            for (j, &(code, coord)) in cm.source.iter().enumerate() {
                let nj = col_of[&to_w(code, coord, p)];
                let mut expected: Vec<(usize, Scalar)> = cm.matrix.cols[j]
                    .iter()
                    .map(|(i, v)| {
                        let (c, k) = cm.target[*i];
                        (row_of[&to_w(c, k, p + 1)], v.clone())
                    })
                    .collect();
                expected.sort_by_key(|(i, _)| *i);
                let pure_g_rows: std::collections::HashSet<usize> = cm
                    .target
                    .iter()
                    .map(|&(c, k)| row_of[&to_w(c, k, p + 1)])
                    .collect();
                let got: Vec<(usize, Scalar)> =
                    nm.matrix.cols[nj].iter().filter(|(i, _)| pure_g_rows.contains(i)).cloned().collect();
                assert_eq!(got, expected, "{name}: degree {p}, column {j}");
            }
        }
    }
}

#[test]
fn reports_are_consistent() {
    for (name, _, g) in cases() {
        for kind in [ComplexKind::New, ComplexKind::Classical] {
            let r = cohomology_report(&g, kind, 1).unwrap();
            assert!(r.consistent(), "{name} {kind:?}");
            for d in &r.degrees {
                assert_eq!(d.cochain_order, d.degree + 1);
                if kind == ComplexKind::New {
                    assert_eq!(d.restriction_agrees, Some(true), "{name}");
                    assert!(d.forgetful_rank.is_some());
                }
            }
        }
    }
}

#[test]
fn known_dimensions() {
    // derivations of so(3) and of A4 (which form so(4))
    let so = Arc::new(fixtures::so3());
    let ad = GeneralizedRepresentation::from_rep(adjoint_rep(&so).unwrap());
    let r = cohomology_report(&ad, ComplexKind::Classical, 2).unwrap();
    let h: Vec<usize> = r.degrees.iter().map(|d| d.dim_h).collect();
    assert_eq!(h, vec![3, 0, 0]);
    let (_, a4) = fixtures::a4_adjoint();
    let r = cohomology_report(&a4, ComplexKind::Classical, 0).unwrap();
    assert_eq!(r.degrees[0].dim_h, 6);
    // zero differential: everything is cohomology
    let (_, z) = fixtures::abelian_zero(3, 2, 2);
    for kind in [ComplexKind::New, ComplexKind::Classical] {
        let r = cohomology_report(&z, kind, 2).unwrap();
        assert!(r.degrees.iter().all(|d| d.dim_h == d.dim_c && d.rank_d == 0));
    }
}

#[test]
fn degree_cap_and_invalid_inputs() {
    let (_, g) = fixtures::a4_adjoint();
    assert!(matches!(cohomology_report(&g, ComplexKind::New, MAX_DEGREE_CAP + 1), Err(nlie::Error::Input(_))));
    let bad = Arc::new(fixtures::bad_jacobi());
    let z = GeneralizedRepresentation::from_rep(Representation::zero(bad, 2));
    assert!(matches!(cohomology_report(&z, ComplexKind::Classical, 1), Err(nlie::Error::Invalid(_))));
}

#[test]
fn reports_serialize_without_pivots() {
    let (_, g) = fixtures::theta_example();
    let r = cohomology_report(&g, ComplexKind::New, 1).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    let d0 = &v["degrees"][0];
    assert!(d0.get("pivot_cols").is_none());
    assert_eq!(v["complex"], "new");
    assert!(d0.get("cochain_order").is_some());
}
