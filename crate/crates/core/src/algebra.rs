//! n-Lie algebras given by structure constants.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::basis::{increasing_tuples, normalize_wedge, permutation_sign, replace_slot, WedgeWord};
use crate::error::{Error, Result};
use crate::rep::{Matrix, Representation};
use crate::scalar::Scalar;

/// Which space a [`Vector`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Space {
    /// The algebra.
    G,
    /// The representation space.
    V,
    /// The direct sum `g ⊕ V` (algebra indices first).
    Sum,
}

/// Dense coordinates with a space tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Vector {
    pub space: Space,
    pub coeffs: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(space: Space, dim: usize) -> Self {
        Vector { space, coeffs: vec![Scalar::ZERO; dim] }
    }

    pub fn basis(space: Space, dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(space, dim);
        v.coeffs[i] = Scalar::ONE;
        v
    }

    pub fn from_coeffs(space: Space, coeffs: Vec<Scalar>) -> Self {
        Vector { space, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &[Scalar]) {
        for (a, b) in self.coeffs.iter_mut().zip(other) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Vector {
        Vector { space: self.space, coeffs: self.coeffs.iter().map(|x| c * x).collect() }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector {
            space: self.space,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

/// Calls `f(indices, coefficient)` for every term of the multilinear expansion
/// of `args` over the standard basis.
pub(crate) fn expand_multilinear(args: &[&[Scalar]], mut f: impl FnMut(&[usize], Scalar)) {
    fn rec(
        args: &[&[Scalar]],
        depth: usize,
        idx: &mut Vec<usize>,
        coef: Scalar,
        f: &mut dyn FnMut(&[usize], Scalar),
    ) {
        if depth == args.len() {
            f(idx, coef);
            return;
        }
        for (i, c) in args[depth].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            idx.push(i);
            rec(args, depth + 1, idx, &coef * c, f);
            idx.pop();
        }
    }
    let mut idx = Vec::with_capacity(args.len());
    rec(args, 0, &mut idx, Scalar::ONE, &mut f);
}

/// An n-Lie algebra: arity `n`, dimension `m`, and the bracket of basis
/// vectors on strictly increasing `n`-tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NLieAlgebra {
    arity: usize,
    dim: usize,
    table: BTreeMap<Vec<usize>, Vec<Scalar>>,
}

impl NLieAlgebra {
    pub fn new(
        arity: usize,
        dim: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Vec<Scalar>)>,
    ) -> Result<Self> {
        if arity < 2 {
            return Err(Error::Input(format!("arity must be at least 2, got {arity}")));
        }
        if dim == 0 {
            return Err(Error::Input("dimension must be positive".into()));
        }
        let mut table = BTreeMap::new();
        for (args, value) in entries {
            if args.len() != arity {
                return Err(Error::Input(format!("bracket key {args:?} does not have {arity} entries")));
            }
            WedgeWord::new(args.clone(), dim)
                .map_err(|_| Error::Input(format!("non-increasing bracket key {args:?}")))?;
            if value.len() != dim {
                return Err(Error::Input(format!("bracket value for {args:?} has wrong length")));
            }
            if table.contains_key(&args) {
                return Err(Error::Input(format!("duplicate bracket key {args:?}")));
            }
            if value.iter().any(|c| !c.is_zero()) {
                table.insert(args, value);
            }
        }
        Ok(NLieAlgebra { arity, dim, table })
    }

    pub fn abelian(arity: usize, dim: usize) -> Result<Self> {
        Self::new(arity, dim, std::iter::empty())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &BTreeMap<Vec<usize>, Vec<Scalar>> {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    /// Bracket of basis vectors in any order: `(sign, value)` or `None` if zero.
    pub fn basis_bracket(&self, idx: &[usize]) -> Option<(i32, &[Scalar])> {
        debug_assert_eq!(idx.len(), self.arity);
        let sign = permutation_sign(idx);
        if sign == 0 {
            return None;
        }
        let mut sorted = idx.to_vec();
        sorted.sort_unstable();
        self.table.get(&sorted).map(|v| (sign, v.as_slice()))
    }

    /// Dense bracket of basis vectors.
    pub fn basis_bracket_vec(&self, idx: &[usize]) -> Vec<Scalar> {
        match self.basis_bracket(idx) {
            Some((s, v)) => v.iter().map(|c| c.clone().signed(s)).collect(),
            None => vec![Scalar::ZERO; self.dim],
        }
    }

    /// Bracket of dense coordinate vectors, extended multilinearly.
    pub fn bracket_dense(&self, args: &[&[Scalar]]) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.dim];
        expand_multilinear(args, |idx, c| {
            if let Some((s, v)) = self.basis_bracket(idx) {
                let c = c.signed(s);
                for (o, x) in out.iter_mut().zip(v) {
                    if !x.is_zero() {
                        *o += &c * x;
                    }
                }
            }
        });
        out
    }
}

/// Evaluate the bracket on `n` vectors of the algebra.
pub fn bracket_eval(a: &NLieAlgebra, args: &[Vector]) -> Result<Vector> {
    if args.len() != a.arity() {
        return Err(Error::Input(format!("expected {} arguments, got {}", a.arity(), args.len())));
    }
    for v in args {
        if v.space != Space::G || v.dim() != a.dim() {
            return Err(Error::Input("bracket arguments must be algebra vectors of matching dimension".into()));
        }
    }
    let refs: Vec<&[Scalar]> = args.iter().map(|v| v.coeffs.as_slice()).collect();
    Ok(Vector::from_coeffs(Space::G, a.bracket_dense(&refs)))
}

/// A pair of basis tuples on which the fundamental identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FIViolation {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// `[x_1, …, x_{n-1}, [y_1, …, y_n]]`
    pub left: Vector,
    /// `Σ_i [y_1, …, [x_1, …, x_{n-1}, y_i], …, y_n]`
    pub right: Vector,
}

impl FIViolation {
    /// `right − left`
    pub fn residual(&self) -> Vector {
        self.right.sub(&self.left)
    }
}

fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; dim];
    v[i] = Scalar::ONE;
    v
}

/// `[x_1, …, x_{n-1}, v]` for basis `x` and dense `v`.
pub(crate) fn act(a: &NLieAlgebra, x: &[usize], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::ZERO; a.dim()];
    let mut idx = x.to_vec();
    idx.push(0);
    let last = idx.len() - 1;
    for (c, coef) in v.iter().enumerate() {
        if coef.is_zero() {
            continue;
        }
        idx[last] = c;
        if let Some((s, val)) = a.basis_bracket(&idx) {
            let coef = coef.clone().signed(s);
            for (o, x) in out.iter_mut().zip(val) {
                if !x.is_zero() {
                    *o += &coef * x;
                }
            }
        }
    }
    out
}

/// Exhaustive check of the fundamental identity over increasing basis tuples.
pub fn check_fundamental_identity(a: &NLieAlgebra) -> Vec<FIViolation> {
    let n = a.arity();
    let m = a.dim();
    let xs = increasing_tuples(m, n - 1);
    let ys = increasing_tuples(m, n);
    let mut out = Vec::new();
    for x in &xs {
        for y in &ys {
            let inner = a.basis_bracket_vec(y);
            let left = act(a, x, &inner);
            let mut right = vec![Scalar::ZERO; m];
            for i in 0..n {
                let moved = act(a, x, &unit(m, y[i]));
                let mut args: Vec<Vec<Scalar>> = y.iter().map(|&j| unit(m, j)).collect();
                args[i] = moved;
                let refs: Vec<&[Scalar]> = args.iter().map(Vec::as_slice).collect();
                for (r, v) in right.iter_mut().zip(a.bracket_dense(&refs)) {
                    *r += v;
                }
            }
            if left != right {
                out.push(FIViolation {
                    x: x.clone(),
                    y: y.clone(),
                    left: Vector::from_coeffs(Space::G, left),
                    right: Vector::from_coeffs(Space::G, right),
                });
            }
        }
    }
    out
}

/// A linear combination of wedge words, sorted and without zero terms.
pub type WedgeComb = Vec<(WedgeWord, Scalar)>;

pub(crate) fn push_comb(acc: &mut BTreeMap<WedgeWord, Scalar>, w: WedgeWord, c: Scalar) {
    let e = acc.entry(w).or_insert(Scalar::ZERO);
    *e += c;
}

pub(crate) fn finish_comb(acc: BTreeMap<WedgeWord, Scalar>) -> WedgeComb {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `[X, Y]_F = Σ_i (y_1, …, X·y_i, …, y_{n-1})`, extended bilinearly.
pub fn fundamental_bracket(a: &NLieAlgebra, x: &[(WedgeWord, Scalar)], y: &[(WedgeWord, Scalar)]) -> Result<WedgeComb> {
    let k = a.arity() - 1;
    for (w, _) in x.iter().chain(y) {
        if w.len() != k || w.indices().iter().any(|&i| i >= a.dim()) {
            return Err(Error::Input(format!("{w} is not a basis word of Λ^{k}g")));
        }
    }
    let mut acc = BTreeMap::new();
    for (xw, xc) in x {
        for (yw, yc) in y {
            let c = xc * yc;
            for s in 1..=k {
                let moved = act(a, xw.indices(), &unit(a.dim(), yw.indices()[s - 1]));
                for (w, t) in replace_slot(yw, s, &moved)? {
                    push_comb(&mut acc, w, &c * &t);
                }
            }
        }
    }
    Ok(finish_comb(acc))
}

/// The adjoint representation `ρ(X)(y) = [x_1, …, x_{n-1}, y]` on `V = g`.
///
/// Refused when the algebra violates the fundamental identity.
pub fn adjoint_rep(a: &Arc<NLieAlgebra>) -> Result<Representation> {
    let violations = check_fundamental_identity(a);
    if let Some(v) = violations.first() {
        return Err(Error::Invalid(format!(
            "adjoint representation needs a valid n-Lie algebra; fundamental identity fails at x = {:?}, y = {:?} ({} violations)",
            v.x,
            v.y,
            violations.len()
        )));
    }
    let m = a.dim();
    let mut rho = Vec::new();
    for x in increasing_tuples(m, a.arity() - 1) {
        let mut mat = Matrix::zeros(m);
        for col in 0..m {
            let v = act(a, &x, &unit(m, col));
            for (row, c) in v.into_iter().enumerate() {
                mat.set(row, col, c);
            }
        }
        rho.push((x, mat));
    }
    Representation::new(a.clone(), m, rho)
}

/// Wedge word helper for tests and fixtures.
pub fn word(indices: &[usize], dim: usize) -> Result<WedgeWord> {
    let nw = normalize_wedge(indices, dim)?;
    nw.word
        .filter(|_| nw.sign == 1)
        .ok_or_else(|| Error::Input(format!("{indices:?} is not strictly increasing")))
}
