//! Small built-in algebras and representations.

use std::sync::Arc;

use crate::algebra::{adjoint_rep, NLieAlgebra};
use crate::rep::{GeneralizedRepresentation, Matrix, Representation};
use crate::scalar::Scalar;

pub fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; dim];
    v[i] = Scalar::ONE;
    v
}

fn signed_unit(dim: usize, i: usize, s: i64) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; dim];
    v[i] = Scalar::from_int(s);
    v
}

/// The simple 4-dimensional 3-Lie algebra:
/// `[e1,e2,e3] = e4, [e1,e2,e4] = −e3, [e1,e3,e4] = e2, [e2,e3,e4] = −e1`.
pub fn a4() -> NLieAlgebra {
    NLieAlgebra::new(
        3,
        4,
        [
            (vec![0, 1, 2], signed_unit(4, 3, 1)),
            (vec![0, 1, 3], signed_unit(4, 2, -1)),
            (vec![0, 2, 3], signed_unit(4, 1, 1)),
            (vec![1, 2, 3], signed_unit(4, 0, -1)),
        ],
    )
    .expect("static table")
}

/// A skew bracket on three generators that violates the Jacobi identity:
/// `[e1,e2] = e3, [e1,e3] = e1, [e2,e3] = e2`.
pub fn bad_jacobi() -> NLieAlgebra {
    NLieAlgebra::new(
        2,
        3,
        [
            (vec![0, 1], unit(3, 2)),
            (vec![0, 2], unit(3, 0)),
            (vec![1, 2], unit(3, 1)),
        ],
    )
    .expect("static table")
}

/// `so(3)`: `[e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2`.
pub fn so3() -> NLieAlgebra {
    NLieAlgebra::new(
        2,
        3,
        [
            (vec![0, 1], unit(3, 2)),
            (vec![0, 2], signed_unit(3, 1, -1)),
            (vec![1, 2], unit(3, 0)),
        ],
    )
    .expect("static table")
}

pub fn abelian(arity: usize, dim: usize) -> NLieAlgebra {
    NLieAlgebra::abelian(arity, dim).expect("arity ≥ 2 and dim ≥ 1")
}

/// A4 with its adjoint representation and `ϑ = 0`.
pub fn a4_adjoint() -> (Arc<NLieAlgebra>, GeneralizedRepresentation) {
    let a = Arc::new(a4());
    let ad = adjoint_rep(&a).expect("A4 satisfies the fundamental identity");
    (a, GeneralizedRepresentation::from_rep(ad))
}

/// Zero representation of an abelian algebra.
pub fn abelian_zero(arity: usize, m: usize, d: usize) -> (Arc<NLieAlgebra>, GeneralizedRepresentation) {
    let a = Arc::new(abelian(arity, m));
    let r = Representation::zero(a.clone(), d);
    (a, GeneralizedRepresentation::from_rep(r))
}

/// A generalized representation with `ϑ ≠ 0`: the one-dimensional 3-Lie
/// algebra acting on `V = ℚ²` with `ρ = 0` and `ϑ(e1)(v1 ∧ v2) = 2v1 − 3v2`.
///
/// `g ⊕ V` is three-dimensional and every skew ternary bracket on a
/// three-dimensional space satisfies the fundamental identity, so `[μ, μ] = 0`.
pub fn theta_example() -> (Arc<NLieAlgebra>, GeneralizedRepresentation) {
    let a = Arc::new(abelian(3, 1));
    let r = Representation::zero(a.clone(), 2);
    let g = GeneralizedRepresentation::new(r, [((0, vec![0, 1]), vec![Scalar::from_int(2), Scalar::from_int(-3)])])
        .expect("static table");
    (a, g)
}

fn vandermonde(a: i64, b: i64, c: i64) -> i64 {
    (b - a) * (c - a) * (c - b)
}

/// The Wronskian 3-Lie algebra `[a, b, c] = det(a, b, c; Da, Db, Dc; D²a, D²b, D²c)`
/// on `ℚ[t]/(t^k)` with `D = t∂_t`, in the basis `1, t, …, t^{k-1}`:
/// `[t^a, t^b, t^c] = (b−a)(c−a)(c−b) t^{a+b+c}`. The fundamental identity
/// holds for `k ≤ 6` and fails from `k = 7` on, so larger `k` gives an
/// invalid table.
pub fn wronskian_algebra(k: usize) -> NLieAlgebra {
    let mut entries = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                if a + b + c < k {
                    let mut v = unit(k, a + b + c);
                    v[a + b + c] = Scalar::from_int(vandermonde(a as i64, b as i64, c as i64));
                    entries.push((vec![a, b, c], v));
                }
            }
        }
    }
    NLieAlgebra::new(3, k, entries).expect("static table")
}

/// A generalized representation with `ρ ≠ 0` and `ϑ ≠ 0` on every algebra index.
///
/// Take the Lie algebra `h = ℚ³ ⋉ V`, `V = ℚ³`, where `x_i` acts by the
/// commuting nilpotent matrices `A_0 = N`, `A_1 = N²`, `A_2 = N + 2N²`
/// (`N v_0 = v_1`, `N v_1 = v_2`), and the trace `f` (`f([h, h]) = 0`) with
/// `f(x) = (1, −1, 2)`, `f(v) = (1, 0, 0)`. Then
/// `[a, b, c] = f(a)[b, c] + f(b)[c, a] + f(c)[a, b]` is a 3-Lie algebra in
/// which V is an abelian ideal, giving `ρ(x, y) = f(x)A_y − f(y)A_x` and
/// `ϑ(x)(u, v) = f(v)A_x u − f(u)A_x v`.
pub fn trace_induced() -> (Arc<NLieAlgebra>, GeneralizedRepresentation) {
    let a = Arc::new(abelian(3, 3));
    let s = Scalar::from_int;
    let mut nil = Matrix::zeros(3);
    nil.set(1, 0, s(1));
    nil.set(2, 1, s(1));
    let nil2 = nil.mul(&nil);
    let mut a2 = nil.clone();
    a2.add_scaled(&s(2), &nil2);
    let act = [nil, nil2, a2];
    let fx = [s(1), s(-1), s(2)];
    let fv = [s(1), s(0), s(0)];
    let mut rho = Vec::new();
    for x in 0..3 {
        for y in x + 1..3 {
            let mut m = act[y].scaled(&fx[x]);
            m.add_scaled(&-fx[y].clone(), &act[x]);
            rho.push((vec![x, y], m));
        }
    }
    let r = Representation::new(a.clone(), 3, rho).expect("static table");
    let mut theta = Vec::new();
    for (x, ax) in act.iter().enumerate() {
        for i in 0..3 {
            for j in i + 1..3 {
                // f(v_j) A_x v_i − f(v_i) A_x v_j
                let col = |k: usize| (0..3).map(|r| ax.get(r, k).clone()).collect::<Vec<_>>();
                let v: Vec<Scalar> = col(i)
                    .iter()
                    .zip(col(j))
                    .map(|(p, q)| &fv[j] * p - &fv[i] * &q)
                    .collect();
                theta.push(((x, vec![i, j]), v));
            }
        }
    }
    let g = GeneralizedRepresentation::new(r, theta).expect("static table");
    (a, g)
}
