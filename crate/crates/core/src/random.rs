//! Seeded random instances.
//!
//! Every stream is a `ChaCha8Rng` seeded with `seed_from_u64`. A random scalar
//! draws a numerator uniform in `[-5, 5]` and then a denominator uniform in
//! `[1, 4]`; cochain coefficients are drawn in lexicographic basis order.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{check_fundamental_identity, NLieAlgebra};
use crate::basis::{increasing_tuples, CochainSpace};
use crate::cochain::{is_all_v, Cochain, RestrictedCochain};
use crate::error::{Error, Result};
use crate::linalg::invert;
use crate::rep::{check_representation, DirectSumSpace, Matrix, Representation};
use crate::scalar::Scalar;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar<R: Rng>(rng: &mut R) -> Scalar {
    let num = rng.gen_range(-5i64..=5);
    let den = rng.gen_range(1i64..=4);
    Scalar::new(num, den)
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let s = scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Basis of `C^p_>(g ⊕ V, V)`: `(key code, W-coordinate)` in lexicographic order.
pub fn restricted_basis(space: &CochainSpace, degree: usize, sum: DirectSumSpace) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for code in 0..space.key_count(degree) {
        if is_all_v(space, code, degree, sum.m) {
            continue;
        }
        out.extend((sum.m..sum.dim()).map(|c| (code, c as u32)));
    }
    out
}

/// Random element of `C^p_>`; `support = Some(k)` picks `k` basis elements
/// uniformly (nonzero coefficients), `None` fills every coordinate.
pub fn restricted_cochain<R: Rng>(
    rng: &mut R,
    space: &CochainSpace,
    degree: usize,
    sum: DirectSumSpace,
    support: Option<usize>,
) -> RestrictedCochain {
    let basis = restricted_basis(space, degree, sum);
    let terms: Vec<((u64, u32), Scalar)> = match support {
        None => basis.into_iter().map(|b| (b, scalar(rng))).collect(),
        Some(k) => {
            let mut chosen: Vec<(u64, u32)> = basis.choose_multiple(rng, k.min(basis.len())).copied().collect();
            chosen.sort_unstable();
            chosen.into_iter().map(|b| (b, nonzero_scalar(rng))).collect()
        }
    };
    let c = Cochain::from_terms(space.clone(), degree, sum.dim(), terms);
    RestrictedCochain::new(c, sum).expect("basis elements are restricted")
}

/// Random `codim`-valued cochain, dense over all keys.
pub fn cochain<R: Rng>(rng: &mut R, space: &CochainSpace, degree: usize, codim: usize) -> Cochain {
    let mut terms = Vec::new();
    for code in 0..space.key_count(degree) {
        for c in 0..codim {
            terms.push(((code, c as u32), scalar(rng)));
        }
    }
    Cochain::from_terms(space.clone(), degree, codim, terms)
}

fn random_invertible<R: Rng>(rng: &mut R, m: usize) -> (Matrix, Matrix) {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..m).map(|_| (0..m).map(|_| scalar(rng)).collect()).collect();
        let p = Matrix::from_rows(rows).expect("square");
        if let Some(inv) = invert(&p) {
            return (p, inv);
        }
    }
}

/// A Lie algebra `ℚ ⋉_A ℚ^{m-1}` (`[f1, f_i] = Σ_j A_ij f_j`, the ideal
/// abelian) written in a random rational basis.
pub fn lie_algebra<R: Rng>(rng: &mut R, m: usize) -> NLieAlgebra {
    assert!(m >= 2);
    let a: Vec<Vec<Scalar>> = (0..m - 1).map(|_| (0..m - 1).map(|_| scalar(rng)).collect()).collect();
    // structure constants in the f basis
    let f_bracket = |i: usize, j: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; m];
        let (sign, other) = match (i, j) {
            (0, j) if j > 0 => (1, j),
            (i, 0) if i > 0 => (-1, i),
            _ => return v,
        };
        for (k, c) in a[other - 1].iter().enumerate() {
            v[k + 1] = c.clone().signed(sign);
        }
        v
    };
    let (p, inv) = random_invertible(rng, m);
    let mut entries = Vec::new();
    for x in 0..m {
        for y in x + 1..m {
            // [e_x, e_y] with e_a = Σ_i P_ia f_i
            let mut in_f = vec![Scalar::ZERO; m];
            for i in 0..m {
                for j in 0..m {
                    let c = p.get(i, x) * p.get(j, y);
                    if c.is_zero() {
                        continue;
                    }
                    for (k, v) in f_bracket(i, j).iter().enumerate() {
                        if !v.is_zero() {
                            in_f[k] += &c * v;
                        }
                    }
                }
            }
            entries.push((vec![x, y], inv.apply(&in_f)));
        }
    }
    let alg = NLieAlgebra::new(2, m, entries).expect("well-formed table");
    debug_assert!(check_fundamental_identity(&alg).is_empty());
    alg
}

/// Add `+1` to one structure constant chosen uniformly among all
/// `(increasing tuple, coordinate)` slots.
pub fn perturb<R: Rng>(rng: &mut R, a: &NLieAlgebra) -> NLieAlgebra {
    let tuples = increasing_tuples(a.dim(), a.arity());
    let t = tuples[rng.gen_range(0..tuples.len())].clone();
    let coord = rng.gen_range(0..a.dim());
    let mut table = a.table().clone();
    let e = table.entry(t).or_insert_with(|| vec![Scalar::ZERO; a.dim()]);
    e[coord] += Scalar::ONE;
    NLieAlgebra::new(a.arity(), a.dim(), table).expect("perturbation keeps keys valid")
}

/// A representation of an abelian algebra by polynomials in one random matrix.
///
/// Such matrices commute; validity is still confirmed with
/// [`check_representation`] and the draw is repeated otherwise.
pub fn commuting_rep<R: Rng>(rng: &mut R, a: &Arc<NLieAlgebra>, d: usize) -> Result<Representation> {
    if !a.is_abelian() {
        return Err(Error::Input("commuting representations are generated for abelian algebras only".into()));
    }
    for _ in 0..32 {
        let rows: Vec<Vec<Scalar>> = (0..d).map(|_| (0..d).map(|_| scalar(rng)).collect()).collect();
        let base = Matrix::from_rows(rows)?;
        let sq = base.mul(&base);
        let mut entries = Vec::new();
        for w in increasing_tuples(a.dim(), a.arity() - 1) {
            let mut mat = Matrix::identity(d).scaled(&scalar(rng));
            mat.add_scaled(&scalar(rng), &base);
            mat.add_scaled(&scalar(rng), &sq);
            entries.push((w, mat));
        }
        let r = Representation::new(a.clone(), d, entries)?;
        if check_representation(&r).is_empty() {
            return Ok(r);
        }
    }
    Err(Error::Consistency("no valid commuting representation found".into()))
}
