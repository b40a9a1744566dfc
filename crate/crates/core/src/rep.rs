//! Representations, generalized representations and the element `μ = π + ρ̄ + ϑ̄`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::algebra::{act, NLieAlgebra};
use crate::basis::{increasing_tuples, permutation_sign, CochainSpace, WedgeWord};
use crate::cochain::{graded_bracket, Cochain};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Square matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![Scalar::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Scalar::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Input(format!("matrix is not {n}×{n}")));
        }
        Ok(Matrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.n + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.n.max(1)).map(<[Scalar]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.n];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Matrix) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().map(|x| c * x).collect() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::ONE, other);
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// `ρ : Λ^{n-1}g → gl(V)`, stored on increasing words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<NLieAlgebra>,
    v_dim: usize,
    rho: BTreeMap<Vec<usize>, Matrix>,
}

impl Representation {
    pub fn new(
        algebra: Arc<NLieAlgebra>,
        v_dim: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Matrix)>,
    ) -> Result<Self> {
        let k = algebra.arity() - 1;
        let mut rho = BTreeMap::new();
        for (word, mat) in entries {
            if word.len() != k {
                return Err(Error::Input(format!("rho key {word:?} does not have {k} entries")));
            }
            WedgeWord::new(word.clone(), algebra.dim())
                .map_err(|_| Error::Input(format!("non-increasing rho key {word:?}")))?;
            if mat.dim() != v_dim {
                return Err(Error::Input(format!("rho matrix for {word:?} is not {v_dim}×{v_dim}")));
            }
            if rho.contains_key(&word) {
                return Err(Error::Input(format!("duplicate rho key {word:?}")));
            }
            if !mat.is_zero() {
                rho.insert(word, mat);
            }
        }
        Ok(Representation { algebra, v_dim, rho })
    }

    pub fn zero(algebra: Arc<NLieAlgebra>, v_dim: usize) -> Self {
        Representation { algebra, v_dim, rho: BTreeMap::new() }
    }

    pub fn algebra(&self) -> &Arc<NLieAlgebra> {
        &self.algebra
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn rho(&self) -> &BTreeMap<Vec<usize>, Matrix> {
        &self.rho
    }

    /// `ρ` on an increasing word; `None` means the zero matrix.
    pub fn matrix(&self, word: &[usize]) -> Option<&Matrix> {
        self.rho.get(word)
    }

    /// `ρ(x_1, …, x_{n-1})` for basis indices in any order.
    pub fn basis_matrix(&self, idx: &[usize]) -> Option<(i32, &Matrix)> {
        let sign = permutation_sign(idx);
        if sign == 0 {
            return None;
        }
        let mut sorted = idx.to_vec();
        sorted.sort_unstable();
        self.rho.get(&sorted).map(|m| (sign, m))
    }

    /// `ρ(x_1, …, x_{n-1})(v)` for basis `x`.
    pub fn act_basis(&self, idx: &[usize], v: &[Scalar]) -> Vec<Scalar> {
        match self.basis_matrix(idx) {
            Some((s, m)) => m.apply(v).into_iter().map(|c| c.signed(s)).collect(),
            None => vec![Scalar::ZERO; self.v_dim],
        }
    }

    /// `ρ(x_1, …, x_{n-1})(v)` for dense algebra vectors `x`.
    pub fn act_dense(&self, xs: &[&[Scalar]], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.v_dim];
        crate::algebra::expand_multilinear(xs, |idx, c| {
            if let Some((s, m)) = self.basis_matrix(idx) {
                let c = c.signed(s);
                for (o, x) in out.iter_mut().zip(m.apply(v)) {
                    *o += &c * &x;
                }
            }
        });
        out
    }

    /// Dense `ρ(x_1, …, x_{n-1})` for dense algebra vectors.
    pub fn matrix_dense(&self, xs: &[&[Scalar]]) -> Matrix {
        let mut out = Matrix::zeros(self.v_dim);
        crate::algebra::expand_multilinear(xs, |idx, c| {
            if let Some((s, m)) = self.basis_matrix(idx) {
                out.add_scaled(&c.signed(s), m);
            }
        });
        out
    }
}

/// Which representation axiom a violation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RepIdentity {
    /// `[ρ(X), ρ(Y)] = Σ_i ρ(y_1, …, X·y_i, …, y_{n-1})`
    #[serde(rename = "commutator")]
    Commutator,
    /// `ρ(x_1, …, x_{n-2}, [y_1, …, y_n]) = Σ_i (−1)^{n-i} ρ(…ŷ_i…) ρ(x_1, …, x_{n-2}, y_i)`
    #[serde(rename = "bracket-action")]
    BracketAction,
}

impl RepIdentity {
    pub fn id(&self) -> &'static str {
        match self {
            RepIdentity::Commutator => "commutator",
            RepIdentity::BracketAction => "bracket-action",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepViolation {
    pub identity: RepIdentity,
    /// The basis tuples the identity was evaluated on.
    pub args: Vec<Vec<usize>>,
    /// left − right
    pub residual: Matrix,
}

fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; dim];
    v[i] = Scalar::ONE;
    v
}

/// Exhaustive check of both representation axioms over increasing basis tuples.
pub fn check_representation(r: &Representation) -> Vec<RepViolation> {
    let a = r.algebra();
    let n = a.arity();
    let m = a.dim();
    let d = r.v_dim();
    let mut out = Vec::new();
    let words = increasing_tuples(m, n - 1);
    let zero = Matrix::zeros(d);
    let mat = |w: &[usize]| r.matrix(w).unwrap_or(&zero).clone();

    for x in &words {
        for y in &words {
            let (rx, ry) = (mat(x), mat(y));
            let left = rx.mul(&ry).sub(&ry.mul(&rx));
            let mut right = Matrix::zeros(d);
            for i in 0..n - 1 {
                let moved = act(a, x, &unit(m, y[i]));
                let mut args: Vec<Vec<Scalar>> = y.iter().map(|&j| unit(m, j)).collect();
                args[i] = moved;
                let refs: Vec<&[Scalar]> = args.iter().map(Vec::as_slice).collect();
                right.add_scaled(&Scalar::ONE, &r.matrix_dense(&refs));
            }
            if left != right {
                out.push(RepViolation {
                    identity: RepIdentity::Commutator,
                    args: vec![x.clone(), y.clone()],
                    residual: left.sub(&right),
                });
            }
        }
    }

    for x in increasing_tuples(m, n - 2) {
        for y in increasing_tuples(m, n) {
            let inner = a.basis_bracket_vec(&y);
            let mut args: Vec<Vec<Scalar>> = x.iter().map(|&j| unit(m, j)).collect();
            args.push(inner);
            let refs: Vec<&[Scalar]> = args.iter().map(Vec::as_slice).collect();
            let left = r.matrix_dense(&refs);
            let mut right = Matrix::zeros(d);
            for i in 0..n {
                let rest: Vec<usize> = y.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                let mut xi = x.clone();
                xi.push(y[i]);
                if let (Some((s1, m1)), Some((s2, m2))) = (r.basis_matrix(&rest), r.basis_matrix(&xi)) {
                    let sign = s1 * s2 * if (n - 1 - i).is_multiple_of(2) { 1 } else { -1 };
                    right.add_scaled(&Scalar::from_int(sign as i64), &m1.mul(m2));
                }
            }
            if left != right {
                out.push(RepViolation {
                    identity: RepIdentity::BracketAction,
                    args: vec![x.clone(), y.clone()],
                    residual: left.sub(&right),
                });
            }
        }
    }
    out
}

/// `ρ` together with `ϑ : g → Hom(Λ^{n-1}V, V)`, stored on increasing V-words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedRepresentation {
    rho: Representation,
    theta: BTreeMap<(usize, Vec<usize>), Vec<Scalar>>,
}

impl GeneralizedRepresentation {
    pub fn new(
        rho: Representation,
        entries: impl IntoIterator<Item = ((usize, Vec<usize>), Vec<Scalar>)>,
    ) -> Result<Self> {
        let m = rho.algebra().dim();
        let d = rho.v_dim();
        let k = rho.algebra().arity() - 1;
        let mut theta = BTreeMap::new();
        for ((g, vargs), value) in entries {
            if g >= m {
                return Err(Error::Input(format!("theta algebra index {g} out of range")));
            }
            if vargs.len() != k {
                return Err(Error::Input(format!("theta key {vargs:?} does not have {k} entries")));
            }
            WedgeWord::new(vargs.clone(), d)
                .map_err(|_| Error::Input(format!("non-increasing theta key {vargs:?}")))?;
            if value.len() != d {
                return Err(Error::Input(format!("theta value for ({g}, {vargs:?}) has wrong length")));
            }
            let key = (g, vargs);
            if theta.contains_key(&key) {
                return Err(Error::Input(format!("duplicate theta key {key:?}")));
            }
            if value.iter().any(|c| !c.is_zero()) {
                theta.insert(key, value);
            }
        }
        Ok(GeneralizedRepresentation { rho, theta })
    }

    /// `(V; ρ, 0)`.
    pub fn from_rep(rho: Representation) -> Self {
        GeneralizedRepresentation { rho, theta: BTreeMap::new() }
    }

    pub fn rep(&self) -> &Representation {
        &self.rho
    }

    pub fn algebra(&self) -> &Arc<NLieAlgebra> {
        self.rho.algebra()
    }

    pub fn theta(&self) -> &BTreeMap<(usize, Vec<usize>), Vec<Scalar>> {
        &self.theta
    }

    pub fn space(&self) -> DirectSumSpace {
        DirectSumSpace { m: self.algebra().dim(), d: self.rho.v_dim() }
    }

    /// `ϑ(e_g)(e_{v_1} ∧ … ∧ e_{v_{n-1}})` for V-local indices in any order.
    pub fn theta_basis(&self, g: usize, vargs: &[usize]) -> Option<(i32, &[Scalar])> {
        let sign = permutation_sign(vargs);
        if sign == 0 {
            return None;
        }
        let mut sorted = vargs.to_vec();
        sorted.sort_unstable();
        self.theta.get(&(g, sorted)).map(|v| (sign, v.as_slice()))
    }

    /// `ϑ(x)(v_1, …, v_{n-1})` for dense `x ∈ g` and dense `v_i ∈ V`.
    pub fn theta_dense(&self, x: &[Scalar], vs: &[&[Scalar]]) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.rho.v_dim()];
        if self.theta.is_empty() {
            return out;
        }
        for (g, cx) in x.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            crate::algebra::expand_multilinear(vs, |idx, c| {
                if let Some((s, val)) = self.theta_basis(g, idx) {
                    let c = (cx * &c).signed(s);
                    for (o, t) in out.iter_mut().zip(val) {
                        if !t.is_zero() {
                            *o += &c * t;
                        }
                    }
                }
            });
        }
        out
    }
}

/// `W = g ⊕ V`; indices `0..m` are g and `m..m+d` are V.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DirectSumSpace {
    pub m: usize,
    pub d: usize,
}

impl DirectSumSpace {
    pub fn dim(&self) -> usize {
        self.m + self.d
    }

    pub fn is_g(&self, i: usize) -> bool {
        i < self.m
    }

    pub fn include_g(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        out.resize(self.dim(), Scalar::ZERO);
        out
    }

    pub fn include_v(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.m];
        out.extend_from_slice(v);
        out
    }

    pub fn project_g(&self, w: &[Scalar]) -> Vec<Scalar> {
        w[..self.m].to_vec()
    }

    pub fn project_v(&self, w: &[Scalar]) -> Vec<Scalar> {
        w[self.m..].to_vec()
    }
}

/// Which of `π`, `ρ̄`, `ϑ̄` to tabulate.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Parts {
    pi: bool,
    rho: bool,
    theta: bool,
}

fn mu_on_tuple(g: &GeneralizedRepresentation, parts: Parts, t: &[usize], out: &mut Vec<(u32, Scalar)>) {
    let w = g.space();
    let a = g.algebra();
    let n = t.len();
    let n_v = t.iter().filter(|&&i| !w.is_g(i)).count();
    let push = |out: &mut Vec<(u32, Scalar)>, offset: usize, sign: i32, val: &[Scalar]| {
        for (i, c) in val.iter().enumerate() {
            if !c.is_zero() {
                out.push(((offset + i) as u32, c.clone().signed(sign)));
            }
        }
    };
    let parity = |i: usize| if (n - 1 - i).is_multiple_of(2) { 1 } else { -1 };
    if n_v == 0 && parts.pi {
        if let Some((s, val)) = a.basis_bracket(t) {
            push(out, 0, s, val);
        }
    }
    if n_v == 1 && parts.rho {
        let i = t.iter().position(|&x| !w.is_g(x)).unwrap();
        let rest: Vec<usize> = t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
        if let Some((s, mat)) = g.rep().basis_matrix(&rest) {
            let col = t[i] - w.m;
            let val: Vec<Scalar> = (0..w.d).map(|r| mat.get(r, col).clone()).collect();
            push(out, w.m, s * parity(i), &val);
        }
    }
    if n_v == n - 1 && parts.theta {
        let i = t.iter().position(|&x| w.is_g(x)).unwrap();
        let vs: Vec<usize> = t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x - w.m).collect();
        if let Some((s, val)) = g.theta_basis(t[i], &vs) {
            push(out, w.m, s * parity(i), val);
        }
    }
}

fn tabulate(g: &GeneralizedRepresentation, space: &CochainSpace, parts: Parts) -> Cochain {
    let w = g.space();
    let bb = space.blocks();
    let mut terms = Vec::new();
    let mut buf = Vec::new();
    let mut tuple = Vec::with_capacity(space.arity());
    for b in 0..bb.len() as u32 {
        for tail in 0..w.dim() {
            tuple.clear();
            tuple.extend_from_slice(bb.word(b));
            tuple.push(tail);
            if permutation_sign(&tuple) == 0 {
                continue;
            }
            buf.clear();
            mu_on_tuple(g, parts, &tuple, &mut buf);
            let code = space.encode(&[b], tail);
            terms.extend(buf.drain(..).map(|(c, v)| ((code, c), v)));
        }
    }
    Cochain::from_terms(space.clone(), 1, w.dim(), terms)
}

fn check_space(w: &DirectSumSpace, g: &GeneralizedRepresentation) -> Result<()> {
    if *w != g.space() {
        return Err(Error::Input(format!(
            "direct sum g({}) ⊕ V({}) does not match the representation g({}) ⊕ V({})",
            w.m,
            w.d,
            g.space().m,
            g.space().d
        )));
    }
    Ok(())
}

fn w_space(g: &GeneralizedRepresentation) -> Result<CochainSpace> {
    CochainSpace::new(g.space().dim(), g.algebra().arity())
}

/// `π` extended by zero to `W`.
pub fn build_pi_bar(g: &GeneralizedRepresentation, w: &DirectSumSpace) -> Result<Cochain> {
    check_space(w, g)?;
    Ok(tabulate(g, &w_space(g)?, Parts { pi: true, rho: false, theta: false }))
}

/// `ρ̄(x_1+v_1, …, x_n+v_n) = Σ_i (−1)^{n-i} ρ(x_1, …, x̂_i, …, x_n)(v_i)` on `W`.
pub fn build_rho_bar(r: &Representation, w: &DirectSumSpace) -> Result<Cochain> {
    let g = GeneralizedRepresentation::from_rep(r.clone());
    check_space(w, &g)?;
    Ok(tabulate(&g, &w_space(&g)?, Parts { pi: false, rho: true, theta: false }))
}

/// `ϑ̄(x_1+v_1, …, x_n+v_n) = Σ_i (−1)^{n-i} ϑ(x_i)(v_1 ∧ … v̂_i … ∧ v_n)` on `W`.
pub fn build_theta_bar(g: &GeneralizedRepresentation, w: &DirectSumSpace) -> Result<Cochain> {
    check_space(w, g)?;
    Ok(tabulate(g, &w_space(g)?, Parts { pi: false, rho: false, theta: true }))
}

/// The degree-1 cochain `π + ρ̄ + ϑ̄` on `W = g ⊕ V`.
#[derive(Debug)]
pub struct MuElement {
    genrep: GeneralizedRepresentation,
    cochain: Cochain,
    canonical: OnceLock<bool>,
}

impl MuElement {
    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    pub fn genrep(&self) -> &GeneralizedRepresentation {
        &self.genrep
    }

    pub fn sum_space(&self) -> DirectSumSpace {
        self.genrep.space()
    }

    pub fn space(&self) -> &CochainSpace {
        self.cochain.space()
    }

    /// `[μ, μ] = 0`, computed once.
    pub fn is_canonical(&self) -> bool {
        *self
            .canonical
            .get_or_init(|| graded_bracket(&self.cochain, &self.cochain).map(|c| c.is_zero()).unwrap_or(false))
    }
}

pub fn build_mu(a: &NLieAlgebra, g: &GeneralizedRepresentation) -> Result<MuElement> {
    if a != g.algebra().as_ref() {
        return Err(Error::Input("representation is defined over a different algebra".into()));
    }
    let cochain = tabulate(g, &w_space(g)?, Parts { pi: true, rho: true, theta: true });
    Ok(MuElement { genrep: g.clone(), cochain, canonical: OnceLock::new() })
}

/// `[μ, μ]`; the pair is a generalized representation iff this is zero.
pub fn check_generalized_rep(a: &NLieAlgebra, g: &GeneralizedRepresentation) -> Result<Cochain> {
    let mu = build_mu(a, g)?;
    let res = graded_bracket(mu.cochain(), mu.cochain())?;
    let _ = mu.canonical.set(res.is_zero());
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::adjoint_rep;
    use crate::fixtures;

    #[test]
    fn zero_rep_passes() {
        let a = Arc::new(fixtures::a4());
        assert!(check_representation(&Representation::zero(a.clone(), 3)).is_empty());
    }

    #[test]
    fn adjoint_passes_and_perturbation_fails() {
        let a = Arc::new(fixtures::a4());
        let ad = adjoint_rep(&a).unwrap();
        assert!(check_representation(&ad).is_empty());
        let mut entries: Vec<_> = ad.rho().clone().into_iter().collect();
        let e = entries[0].1.get(0, 0).clone();
        entries[0].1.set(0, 0, e + Scalar::ONE);
        let bad = Representation::new(a, 4, entries).unwrap();
        let v = check_representation(&bad);
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| !x.residual.is_zero()));
    }

    #[test]
    fn rho_bar_examples() {
        let a = Arc::new(fixtures::a4());
        let ad = adjoint_rep(&a).unwrap();
        let w = DirectSumSpace { m: 4, d: 4 };
        let rb = build_rho_bar(&ad, &w).unwrap();
        // (e1, e2 | v3) picks up ρ(e1∧e2)(v3) = v4
        let v = rb.eval_basis(&[&[0, 1]], 4 + 2).unwrap();
        assert_eq!(w.project_v(&v), fixtures::unit(4, 3));
        assert!(w.project_g(&v).iter().all(Scalar::is_zero));
        // (e1, v3 | e2) = (−1)^{3-2} ρ(e1∧e2)(v3)
        let v = rb.eval_basis(&[&[0, 6]], 1).unwrap();
        assert_eq!(w.project_v(&v), fixtures::unit(4, 3).into_iter().map(|c| -c).collect::<Vec<_>>());
        // all g
        assert!(rb.eval_basis(&[&[0, 1]], 2).unwrap().iter().all(Scalar::is_zero));
        assert!(build_rho_bar(&Representation::zero(a, 4), &w).unwrap().is_zero());
    }

    #[test]
    fn mu_with_zero_theta_is_pi_on_g() {
        let a = Arc::new(fixtures::a4());
        let g = GeneralizedRepresentation::from_rep(adjoint_rep(&a).unwrap());
        let mu = build_mu(&a, &g).unwrap();
        let w = g.space();
        assert!(build_theta_bar(&g, &w).unwrap().is_zero());
        let pi = crate::cochain::pi_cochain(&a);
        for (code, coord, c) in pi.iter() {
            let key = pi.space().key_of(code, 1);
            let val = mu.cochain().value_at(&key).unwrap();
            assert_eq!(&val[coord as usize], c);
        }
        assert!(check_generalized_rep(&a, &g).unwrap().is_zero());
        assert!(mu.is_canonical());
    }

    #[test]
    fn parts_are_disjoint_and_sum_to_mu() {
        let (a, g) = fixtures::theta_example();
        let w = g.space();
        let pi = build_pi_bar(&g, &w).unwrap();
        let rb = build_rho_bar(g.rep(), &w).unwrap();
        let tb = build_theta_bar(&g, &w).unwrap();
        assert!(!tb.is_zero());
        let mu = build_mu(&a, &g).unwrap();
        let sum = pi.add(&rb).unwrap().add(&tb).unwrap();
        assert_eq!(&sum, mu.cochain());
        for (x, y) in [(&pi, &rb), (&pi, &tb), (&rb, &tb)] {
            assert!(x.iter().all(|(k, _, _)| y.iter().all(|(k2, _, _)| k2 != k)));
        }
    }

    #[test]
    fn theta_example_is_generalized_rep() {
        let (a, g) = fixtures::theta_example();
        assert!(check_generalized_rep(&a, &g).unwrap().is_zero());
    }

    #[test]
    fn abelian_zero_mu_is_zero() {
        let a = Arc::new(NLieAlgebra::abelian(3, 3).unwrap());
        let g = GeneralizedRepresentation::from_rep(Representation::zero(a.clone(), 2));
        assert!(build_mu(&a, &g).unwrap().cochain().is_zero());
    }

    #[test]
    fn rejects_bad_theta_keys() {
        let a = Arc::new(NLieAlgebra::abelian(3, 3).unwrap());
        let r = Representation::zero(a, 2);
        let v = vec![Scalar::ONE, Scalar::ZERO];
        assert!(GeneralizedRepresentation::new(r.clone(), [((0, vec![1, 0]), v.clone())]).is_err());
        assert!(GeneralizedRepresentation::new(r.clone(), [((3, vec![0, 1]), v.clone())]).is_err());
        assert!(GeneralizedRepresentation::new(r, [((0, vec![0, 1]), vec![Scalar::ONE])]).is_err());
    }
}
