//! Cochains `(Λ^{n-1}W)^{⊗p} ⊗ W → U`, their composition and graded bracket,
//! the classical coboundary `δ_ρ`, and the restricted complex on `g ⊕ V`.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::algebra::{act, fundamental_bracket, NLieAlgebra};
use crate::basis::{normalize_wedge, shuffle_sign, CochainKey, CochainSpace, WedgeWord};
use crate::error::{Error, Result};
use crate::rep::{DirectSumSpace, MuElement, Representation};
use crate::scalar::Scalar;

/// A degree-`p` cochain: `p` blocks of `n-1` arguments from `W` plus one tail
/// argument, with values in a space of dimension `codim`.
///
/// Terms are keyed by `(key code, output coordinate)`; see
/// [`CochainSpace::encode`].
#[derive(Clone, Debug)]
pub struct Cochain {
    space: CochainSpace,
    degree: usize,
    codim: usize,
    terms: BTreeMap<(u64, u32), Scalar>,
}

impl PartialEq for Cochain {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.codim == other.codim
            && self.space.same_as(&other.space)
            && self.terms == other.terms
    }
}

impl Eq for Cochain {}

impl Cochain {
    pub fn zero(space: CochainSpace, degree: usize, codim: usize) -> Self {
        Cochain { space, degree, codim, terms: BTreeMap::new() }
    }

    /// Sums repeated terms and drops zeros.
    pub fn from_terms(
        space: CochainSpace,
        degree: usize,
        codim: usize,
        terms: impl IntoIterator<Item = ((u64, u32), Scalar)>,
    ) -> Self {
        let mut map: BTreeMap<(u64, u32), Scalar> = BTreeMap::new();
        for (k, v) in terms {
            debug_assert!((k.1 as usize) < codim);
            debug_assert!(k.0 < space.key_count(degree));
            *map.entry(k).or_insert(Scalar::ZERO) += v;
        }
        map.retain(|_, v| !v.is_zero());
        Cochain { space, degree, codim, terms: map }
    }

    pub fn from_keys(
        space: CochainSpace,
        degree: usize,
        codim: usize,
        entries: impl IntoIterator<Item = (CochainKey, usize, Scalar)>,
    ) -> Result<Self> {
        let mut terms = Vec::new();
        for (key, coord, c) in entries {
            if key.degree() != degree {
                return Err(Error::Input(format!("key {key} does not have degree {degree}")));
            }
            if coord >= codim {
                return Err(Error::Input(format!("coordinate {coord} out of range")));
            }
            terms.push(((space.code_of(&key)?, coord as u32), c));
        }
        Ok(Self::from_terms(space, degree, codim, terms))
    }

    /// The cochain with a single unit coefficient.
    pub fn unit(space: CochainSpace, degree: usize, codim: usize, code: u64, coord: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((code, coord), Scalar::ONE);
        Cochain { space, degree, codim, terms }
    }

    pub fn space(&self) -> &CochainSpace {
        &self.space
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(u64, u32), Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32, &Scalar)> {
        self.terms.iter().map(|(&(k, c), v)| (k, c, v))
    }

    pub fn get(&self, code: u64, coord: u32) -> Scalar {
        self.terms.get(&(code, coord)).cloned().unwrap_or(Scalar::ZERO)
    }

    /// Dense value at an encoded key.
    pub fn value_code(&self, code: u64) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.codim];
        for (&(_, c), v) in self.terms.range((code, 0)..(code + 1, 0)) {
            out[c as usize] = v.clone();
        }
        out
    }

    pub fn value_at(&self, key: &CochainKey) -> Result<Vec<Scalar>> {
        if key.degree() != self.degree {
            return Err(Error::Input(format!("key {key} does not have degree {}", self.degree)));
        }
        Ok(self.value_code(self.space.code_of(key)?))
    }

    /// Value on basis arguments given in any order inside each block.
    pub fn eval_basis(&self, blocks: &[&[usize]], tail: usize) -> Result<Vec<Scalar>> {
        if blocks.len() != self.degree {
            return Err(Error::Input(format!("expected {} blocks, got {}", self.degree, blocks.len())));
        }
        let mut sign = 1;
        let mut idx = Vec::with_capacity(blocks.len());
        for b in blocks {
            if b.len() != self.space.arity() - 1 {
                return Err(Error::Input(format!("block {b:?} has the wrong length")));
            }
            let nw = normalize_wedge(b, self.space.dim())?;
            let Some(w) = nw.word else {
                return Ok(vec![Scalar::ZERO; self.codim]);
            };
            sign *= nw.sign;
            idx.push(self.space.blocks().index_of(w.indices()).expect("word in basis"));
        }
        if tail >= self.space.dim() {
            return Err(Error::Input(format!("tail {tail} out of range")));
        }
        let v = self.value_code(self.space.encode(&idx, tail));
        Ok(v.into_iter().map(|c| c.signed(sign)).collect())
    }

    pub fn entries(&self) -> Vec<(CochainKey, usize, Scalar)> {
        self.iter()
            .map(|(k, c, v)| (self.space.key_of(k, self.degree), c as usize, v.clone()))
            .collect()
    }

    fn check_same(&self, other: &Cochain) -> Result<()> {
        if !self.space.same_as(&other.space) || self.degree != other.degree || self.codim != other.codim {
            return Err(Error::Input("cochains live in different spaces".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.axpy(&Scalar::ONE, other)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.axpy(&-Scalar::ONE, other)
    }

    /// `self + c·other`
    pub fn axpy(&self, c: &Scalar, other: &Cochain) -> Result<Cochain> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            let e = terms.entry(*k).or_insert(Scalar::ZERO);
            *e += c * v;
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(Cochain { terms, ..self.clone_empty() })
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        if c.is_zero() {
            return self.clone_empty();
        }
        Cochain {
            terms: self.terms.iter().map(|(k, v)| (*k, c * v)).collect(),
            ..self.clone_empty()
        }
    }

    fn clone_empty(&self) -> Cochain {
        Cochain::zero(self.space.clone(), self.degree, self.codim)
    }
}

/// `(positions of β's blocks among the first k+q output blocks, (−1)^{(J,I)})`
type Shuffles = Vec<(Vec<usize>, i32)>;

fn shuffle_table(p: usize, q: usize) -> Result<Vec<Shuffles>> {
    let size = p + q + 1;
    let mut table = Vec::with_capacity(p + 1);
    for k in 0..=p {
        let mut list = Vec::new();
        for pos in crate::basis::increasing_tuples(k + q, q) {
            let mut j: Vec<usize> = pos.iter().map(|x| x + 1).collect();
            j.push(if k < p { k + q + 1 } else { size });
            let split = shuffle_sign(&j, size)?;
            list.push((pos, split.sign));
        }
        table.push(list);
    }
    Ok(table)
}

/// Fill `out[..k+q]` with `a[..k]` and `b` interleaved so that `b` lands on `bpos`.
fn interleave(out: &mut [u32], a: &[u32], b: &[u32], bpos: &[usize]) {
    let (mut ia, mut ib) = (0, 0);
    for (slot, o) in out.iter_mut().enumerate().take(a.len() + b.len()) {
        if ib < bpos.len() && bpos[ib] == slot {
            *o = b[ib];
            ib += 1;
        } else {
            *o = a[ia];
            ia += 1;
        }
    }
}

/// `α∘β`: insert `β` into every block slot of `α` and into its tail, with the
/// shuffle signs `(−1)^{(J,I)}`, `(−1)^k` and `(−1)^p`.
pub fn compose(alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    let space = &alpha.space;
    if !space.same_as(&beta.space) {
        return Err(Error::Input("cannot compose cochains on different spaces".into()));
    }
    let w = space.dim();
    if beta.codim != w {
        return Err(Error::Input(format!(
            "inner cochain must take values in the argument space (dim {w}), not dim {}",
            beta.codim
        )));
    }
    let (p, q) = (alpha.degree, beta.degree);
    let out_degree = p + q;
    if alpha.is_zero() || beta.is_zero() {
        return Ok(Cochain::zero(space.clone(), out_degree, alpha.codim));
    }
    let bb = space.blocks();
    let k_len = space.arity() - 1;
    let shuffles = shuffle_table(p, q)?;

    // β grouped by (tail, coordinate) and by coordinate
    let mut by_tail_coord: FxHashMap<(u32, u32), Vec<(Vec<u32>, &Scalar)>> = FxHashMap::default();
    let mut by_coord: Vec<Vec<(Vec<u32>, usize, &Scalar)>> = vec![Vec::new(); w];
    for (code, coord, c) in beta.iter() {
        let (blocks, tail) = space.decode(code, q);
        by_tail_coord.entry((tail as u32, coord)).or_default().push((blocks.clone(), c));
        by_coord[coord as usize].push((blocks, tail, c));
    }

    let mut acc: FxHashMap<(u64, u32), Scalar> = FxHashMap::default();
    let mut out = vec![0u32; out_degree];
    let mut a_blocks = vec![0u32; p];
    let mut last_code = u64::MAX;
    let mut a_tail = 0usize;
    for (code, coord, ca) in alpha.iter() {
        if code != last_code {
            a_tail = space.decode_into(code, &mut a_blocks);
            last_code = code;
        }
        // β inserted into block k+1 of α
        for k in 0..p {
            let sign_k = if k % 2 == 0 { 1 } else { -1 };
            let target = a_blocks[k];
            for pos in 0..k_len {
                let r = bb.word(target)[pos] as u32;
                for pre in bb.preimages(target, pos) {
                    let Some(list) = by_tail_coord.get(&(pre.b, r)) else {
                        continue;
                    };
                    for (b_blocks, cb) in list {
                        let coef = (ca * *cb).signed(pre.sign as i32 * sign_k);
                        for (bpos, s) in &shuffles[k] {
                            interleave(&mut out, &a_blocks[..k], b_blocks, bpos);
                            out[k + q] = pre.word;
                            out[k + q + 1..].copy_from_slice(&a_blocks[k + 1..]);
                            let e = acc.entry((space.encode(&out, a_tail), coord)).or_insert(Scalar::ZERO);
                            *e += coef.clone().signed(*s);
                        }
                    }
                }
            }
        }
        // β inserted into the tail of α
        let sign_p = if p % 2 == 0 { 1 } else { -1 };
        for (b_blocks, b_tail, cb) in &by_coord[a_tail] {
            let coef = (ca * *cb).signed(sign_p);
            for (bpos, s) in &shuffles[p] {
                interleave(&mut out, &a_blocks, b_blocks, bpos);
                let e = acc.entry((space.encode(&out, *b_tail), coord)).or_insert(Scalar::ZERO);
                *e += coef.clone().signed(*s);
            }
        }
    }
    Ok(Cochain::from_terms(space.clone(), out_degree, alpha.codim, acc))
}

/// `[α, β] = (−1)^{pq} α∘β − β∘α`
pub fn graded_bracket(alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    if alpha.codim != beta.codim {
        return Err(Error::Input("graded bracket needs equal codomains".into()));
    }
    let ab = compose(alpha, beta)?;
    let ba = compose(beta, alpha)?;
    let sign = if (alpha.degree * beta.degree).is_multiple_of(2) { Scalar::ONE } else { -Scalar::ONE };
    ab.scale(&sign).sub(&ba)
}

/// The bracket of `A` as a degree-1 cochain on `g` with values in `g`.
pub fn pi_cochain(a: &NLieAlgebra) -> Cochain {
    let space = CochainSpace::new(a.dim(), a.arity()).expect("valid algebra dimensions");
    let bb = space.blocks();
    let mut terms = Vec::new();
    let mut t = Vec::with_capacity(a.arity());
    for b in 0..bb.len() as u32 {
        for z in 0..a.dim() {
            t.clear();
            t.extend_from_slice(bb.word(b));
            t.push(z);
            if let Some((s, v)) = a.basis_bracket(&t) {
                let code = space.encode(&[b], z);
                for (i, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        terms.push(((code, i as u32), c.clone().signed(s)));
                    }
                }
            }
        }
    }
    Cochain::from_terms(space, 1, a.dim(), terms)
}

fn sparse(v: Vec<Scalar>) -> Vec<(usize, Scalar)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

fn add_into(out: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += c * x;
        }
    }
}

/// The classical coboundary `δ_ρ α` evaluated key by key.
///
/// For `α` with `P` blocks and output arguments `(χ_1, …, χ_{P+1}, z)`:
///
/// ```text
///   Σ_{i<k} (−1)^i     α(…χ̂_i…, [χ_i, χ_k]_F at k, …, z)
/// + Σ_i     (−1)^i     α(…χ̂_i…, [χ_i, z])
/// + Σ_i     (−1)^{i+1} ρ(χ_i) α(…χ̂_i…, z)
/// + Σ_s     (−1)^{n+P-s} ρ(x^1_{P+1}, …, x̂^s_{P+1}, …, x^{n-1}_{P+1}, z) α(χ_1, …, χ_P, x^s_{P+1})
/// ```
pub fn delta_rho(r: &Representation, alpha: &Cochain) -> Result<Cochain> {
    let a = r.algebra();
    let (m, n, d) = (a.dim(), a.arity(), r.v_dim());
    let space = alpha.space();
    if space.dim() != m || space.arity() != n || alpha.codim() != d {
        return Err(Error::Input(format!(
            "cochain must live on g (dim {m}, arity {n}) with values in V (dim {d})"
        )));
    }
    let p = alpha.degree();
    let bb = space.blocks();
    let nb = bb.len();
    let out_degree = p + 1;
    if alpha.is_zero() || nb == 0 {
        return Ok(Cochain::zero(space.clone(), out_degree, d));
    }

    let unit = |i: usize| {
        let mut v = vec![Scalar::ZERO; m];
        v[i] = Scalar::ONE;
        v
    };
    let words: Vec<WedgeWord> = (0..nb as u32).map(|i| WedgeWord::new_unchecked(bb.word(i).to_vec())).collect();
    // [χ_i, χ_k]_F and [χ_i, z] for all basis pairs
    let mut fb: Vec<Vec<(u32, Scalar)>> = Vec::with_capacity(nb * nb);
    for x in &words {
        for y in &words {
            let comb = fundamental_bracket(a, &[(x.clone(), Scalar::ONE)], &[(y.clone(), Scalar::ONE)])?;
            fb.push(comb.into_iter().map(|(w, c)| (bb.index_of(w.indices()).unwrap(), c)).collect());
        }
    }
    let acts: Vec<Vec<(usize, Scalar)>> = words
        .iter()
        .flat_map(|x| (0..m).map(move |z| (x, z)))
        .map(|(x, z)| sparse(act(a, x.indices(), &unit(z))))
        .collect();
    let zero = crate::rep::Matrix::zeros(d);
    let rho = |b: u32| r.matrix(bb.word(b)).unwrap_or(&zero);

    let mut terms = Vec::new();
    let mut blocks = vec![0u32; out_degree];
    let mut arg = vec![0u32; p];
    let total = space.key_count(out_degree);
    for code in 0..total {
        let z = space.decode_into(code, &mut blocks);
        let mut val = vec![Scalar::ZERO; d];
        let omit = |i: usize, arg: &mut Vec<u32>| {
            arg.clear();
            arg.extend(blocks.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &b)| b));
        };
        for i in 0..out_degree {
            let sign_i = if (i + 1) % 2 == 0 { 1 } else { -1 };
            omit(i, &mut arg);
            // [χ_i, χ_k]_F in place of χ_k
            for k in i + 1..out_degree {
                for (wd, c) in &fb[blocks[i] as usize * nb + blocks[k] as usize] {
                    arg[k - 1] = *wd;
                    let v = alpha.value_code(space.encode(&arg, z));
                    add_into(&mut val, &c.clone().signed(sign_i), &v);
                }
                arg[k - 1] = blocks[k];
            }
            // [χ_i, z] in the tail
            for (t, c) in &acts[blocks[i] as usize * m + z] {
                let v = alpha.value_code(space.encode(&arg, *t));
                add_into(&mut val, &c.clone().signed(sign_i), &v);
            }
            // ρ(χ_i) α(…χ̂_i…, z)
            let v = alpha.value_code(space.encode(&arg, z));
            add_into(&mut val, &Scalar::from_int(-sign_i as i64), &rho(blocks[i]).apply(&v));
        }
        // last block against the tail
        let last = bb.word(blocks[p]);
        for s in 0..n - 1 {
            let mut rest: Vec<usize> = last.iter().enumerate().filter(|&(j, _)| j != s).map(|(_, &x)| x).collect();
            rest.push(z);
            let Some((rs, mat)) = r.basis_matrix(&rest) else {
                continue;
            };
            let v = alpha.value_code(space.encode(&blocks[..p], last[s]));
            let sign = if (n + p - (s + 1)).is_multiple_of(2) { rs } else { -rs };
            add_into(&mut val, &Scalar::from_int(sign as i64), &mat.apply(&v));
        }
        for (i, c) in val.into_iter().enumerate() {
            if !c.is_zero() {
                terms.push(((code, i as u32), c));
            }
        }
    }
    Ok(Cochain::from_terms(space.clone(), out_degree, d, terms))
}

/// True when every block entry and the tail lie in the V part.
pub fn is_all_v(space: &CochainSpace, code: u64, degree: usize, m: usize) -> bool {
    let (blocks, tail) = space.decode(code, degree);
    tail >= m && blocks.iter().all(|&b| space.blocks().word(b)[0] >= m)
}

/// True when every block entry and the tail lie in the g part.
pub fn is_all_g(space: &CochainSpace, code: u64, degree: usize, m: usize) -> bool {
    let (blocks, tail) = space.decode(code, degree);
    let k = space.arity() - 1;
    tail < m && blocks.iter().all(|&b| space.blocks().word(b)[k - 1] < m)
}

/// A V-valued cochain on `g ⊕ V` (stored with `W`-coordinates `≥ m`) that
/// vanishes on all-V keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedCochain {
    cochain: Cochain,
    sum: DirectSumSpace,
}

impl RestrictedCochain {
    pub fn new(cochain: Cochain, sum: DirectSumSpace) -> Result<Self> {
        if cochain.space().dim() != sum.dim() || cochain.codim() != sum.dim() {
            return Err(Error::Input("restricted cochains live on and take values in g ⊕ V".into()));
        }
        for (code, coord, _) in cochain.iter() {
            if (coord as usize) < sum.m {
                let key = cochain.space().key_of(code, cochain.degree());
                return Err(Error::Input(format!("value at {key} has a g component")));
            }
            if is_all_v(cochain.space(), code, cochain.degree(), sum.m) {
                let key = cochain.space().key_of(code, cochain.degree());
                return Err(Error::Input(format!("nonzero value at all-V key {key}")));
            }
        }
        Ok(RestrictedCochain { cochain, sum })
    }

    pub fn zero(space: CochainSpace, degree: usize, sum: DirectSumSpace) -> Self {
        RestrictedCochain { cochain: Cochain::zero(space, degree, sum.dim()), sum }
    }

    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    pub fn into_cochain(self) -> Cochain {
        self.cochain
    }

    pub fn sum_space(&self) -> DirectSumSpace {
        self.sum
    }

    pub fn degree(&self) -> usize {
        self.cochain.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.cochain.is_zero()
    }
}

/// `d(α) = [μ, α]`.
///
/// Fails with a consistency error if `[μ, μ] ≠ 0` or if the result leaves the
/// restricted subspace.
pub fn new_differential(mu: &MuElement, alpha: &RestrictedCochain) -> Result<RestrictedCochain> {
    if alpha.sum != mu.sum_space() || !alpha.cochain.space().same_as(mu.space()) {
        return Err(Error::Input("cochain does not live on the same g ⊕ V".into()));
    }
    if !mu.is_canonical() {
        return Err(Error::Invalid("[μ, μ] ≠ 0: not a generalized representation".into()));
    }
    let d = graded_bracket(mu.cochain(), &alpha.cochain)?;
    RestrictedCochain::new(d, alpha.sum)
        .map_err(|e| Error::Consistency(format!("d left the restricted complex: {e}")))
}

/// Regard a `V`-valued cochain on `g` as a restricted cochain on `g ⊕ V`
/// (zero on every key with a V argument).
pub fn embed(alpha: &Cochain, mu: &MuElement) -> Result<RestrictedCochain> {
    let sum = mu.sum_space();
    let gs = alpha.space();
    if gs.dim() != sum.m || gs.arity() != mu.space().arity() || alpha.codim() != sum.d {
        return Err(Error::Input("cochain does not live on g with values in V".into()));
    }
    let ws = mu.space();
    let p = alpha.degree();
    let mut blocks = vec![0u32; p];
    let mut terms = Vec::with_capacity(alpha.len());
    for (code, coord, c) in alpha.iter() {
        let tail = gs.decode_into(code, &mut blocks);
        for b in blocks.iter_mut() {
            *b = ws.blocks().index_of(gs.blocks().word(*b)).expect("g word is a W word");
        }
        terms.push(((ws.encode(&blocks, tail), coord + sum.m as u32), c.clone()));
    }
    Ok(RestrictedCochain { cochain: Cochain::from_terms(ws.clone(), p, sum.dim(), terms), sum })
}

/// Keep only the keys whose arguments all lie in g, as a `V`-valued cochain on `g`.
pub fn restrict_to_g(alpha: &RestrictedCochain) -> Cochain {
    let sum = alpha.sum;
    let ws = alpha.cochain.space();
    let gs = CochainSpace::new(sum.m, ws.arity()).expect("valid dimensions");
    let p = alpha.degree();
    let mut blocks = vec![0u32; p];
    let mut terms = Vec::new();
    'terms: for (code, coord, c) in alpha.cochain.iter() {
        let tail = ws.decode_into(code, &mut blocks);
        if tail >= sum.m {
            continue;
        }
        for b in blocks.iter_mut() {
            match gs.blocks().index_of(ws.blocks().word(*b)) {
                Some(i) => *b = i,
                None => continue 'terms,
            }
        }
        terms.push(((gs.encode(&blocks, tail), coord - sum.m as u32), c.clone()));
    }
    Cochain::from_terms(gs, p, sum.d, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{adjoint_rep, check_fundamental_identity};
    use crate::fixtures;
    use crate::rep::{build_mu, GeneralizedRepresentation};
    use std::sync::Arc;

    #[test]
    fn pi_squared_vanishes_iff_fi() {
        for a in [fixtures::a4(), fixtures::bad_jacobi(), NLieAlgebra::abelian(3, 4).unwrap()] {
            let pi = pi_cochain(&a);
            let sq = graded_bracket(&pi, &pi).unwrap();
            assert_eq!(sq.is_zero(), check_fundamental_identity(&a).is_empty());
        }
    }

    #[test]
    fn compose_with_zero() {
        let a = fixtures::a4();
        let pi = pi_cochain(&a);
        let z = Cochain::zero(pi.space().clone(), 1, 4);
        assert!(compose(&pi, &z).unwrap().is_zero());
        assert!(compose(&z, &pi).unwrap().is_zero());
    }

    #[test]
    fn pi_bracket_is_adjoint_coboundary_low_degree() {
        let a = Arc::new(fixtures::a4());
        let ad = adjoint_rep(&a).unwrap();
        let pi = pi_cochain(&a);
        for p in 0..2 {
            for code in 0..pi.space().key_count(p) {
                for coord in 0..4 {
                    let alpha = Cochain::unit(pi.space().clone(), p, 4, code, coord);
                    let lhs = graded_bracket(&pi, &alpha).unwrap();
                    let rhs = delta_rho(&ad, &alpha).unwrap();
                    assert_eq!(lhs, rhs, "p = {p}, key {code}, coord {coord}");
                }
            }
        }
    }

    #[test]
    fn embed_restrict_round_trip() {
        let a = Arc::new(fixtures::a4());
        let g = GeneralizedRepresentation::from_rep(adjoint_rep(&a).unwrap());
        let mu = build_mu(&a, &g).unwrap();
        let gs = CochainSpace::new(4, 3).unwrap();
        let alpha = Cochain::from_terms(
            gs.clone(),
            1,
            4,
            [((3, 1), Scalar::new(2, 3)), ((17, 0), Scalar::from_int(-5))],
        );
        let e = embed(&alpha, &mu).unwrap();
        assert_eq!(restrict_to_g(&e), alpha);
    }

    #[test]
    fn restricted_rejects_all_v_values() {
        let sum = DirectSumSpace { m: 2, d: 2 };
        let ws = CochainSpace::new(4, 2).unwrap();
        // key (v0 | v1) has code encode([2], 3)
        let code = ws.encode(&[2], 3);
        let c = Cochain::unit(ws.clone(), 1, 4, code, 2);
        assert!(RestrictedCochain::new(c, sum).is_err());
        let c = Cochain::unit(ws.clone(), 1, 4, ws.encode(&[0], 3), 0);
        assert!(RestrictedCochain::new(c, sum).is_err());
        let c = Cochain::unit(ws.clone(), 1, 4, ws.encode(&[0], 3), 3);
        assert!(RestrictedCochain::new(c, sum).is_ok());
    }
}
