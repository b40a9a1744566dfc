//! Explicit low-degree cocycle identities, checked against `d = [μ, ·]`.
//!
//! Degree 0: a linear map `α : g → V` is a cocycle iff
//! `−α([x_1, …, x_n]) + ρ(x_1, …, x_{n-1})α(x_n) + Σ_i (−1)^{n-i} ρ(…x̂_i…, x_n)α(x_i) = 0`.
//!
//! Degree 1: a totally skew form `β = β_1 + β_2 + β_3` on `g ⊕ V` with values in
//! V, where `β_1` takes one argument from g, `β_2` takes `n-1` and `β_3` takes
//! all `n`, is a cocycle iff a battery of identities holds. Each identity lives
//! on one class of degree-2 keys `(X | Y | z)`, labelled by the number of g
//! entries in `X`, in `Y`, and whether `z` lies in g or V, and is named
//! `b<c>[<#g X>,<#g Y>,<g|v>]` after the component it constrains.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{expand_multilinear, NLieAlgebra};
use crate::basis::{increasing_tuples, permutation_sign, CochainKey, WedgeWord};
use crate::cochain::{embed, new_differential, Cochain, RestrictedCochain};
use crate::error::{Error, Result};
use crate::random;
use crate::rep::{build_mu, DirectSumSpace, GeneralizedRepresentation, MuElement};
use crate::scalar::Scalar;

/// Identifier of the degree-0 identity.
pub const ONE_COCYCLE: &str = "1-cocycle";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualEntry {
    pub equation: String,
    pub key: CochainKey,
    /// Coordinates in V.
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualReport {
    pub entries: Vec<ResidualEntry>,
    /// Largest absolute coefficient over all residuals (zero when empty).
    pub max_abs_residual: Scalar,
}

impl ResidualReport {
    fn from_entries(entries: Vec<ResidualEntry>) -> Self {
        let max_abs_residual = entries
            .iter()
            .flat_map(|e| e.residual.iter().map(Scalar::abs))
            .max()
            .unwrap_or(Scalar::ZERO);
        ResidualReport { entries, max_abs_residual }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A key where the battery and `d` disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    /// Equations (with the signs applied) expected to reproduce `d` at this key.
    pub equations: Vec<String>,
    pub key: CochainKey,
    pub battery: Vec<Scalar>,
    pub differential: Vec<Scalar>,
}

/// Outcome of comparing a battery with `d` on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub report: ResidualReport,
    pub d_is_zero: bool,
    pub mismatches: Vec<Discrepancy>,
    /// Nonzero values of `d` on key classes no identity covers.
    pub outside_support: Vec<ResidualEntry>,
}

impl Crosscheck {
    /// Battery and `d` agree key by key, nothing falls outside the battery,
    /// and the battery is empty exactly when `d` vanishes.
    pub fn passes(&self) -> bool {
        self.mismatches.is_empty() && self.outside_support.is_empty() && self.report.is_empty() == self.d_is_zero
    }
}

fn v_part(sum: &DirectSumSpace, w: &[Scalar]) -> Vec<Scalar> {
    w[sum.m..].to_vec()
}

fn nonzero(v: &[Scalar]) -> bool {
    v.iter().any(|c| !c.is_zero())
}

fn check_alpha(g: &GeneralizedRepresentation, alpha: &Cochain) -> Result<()> {
    let (m, n, d) = (g.algebra().dim(), g.algebra().arity(), g.rep().v_dim());
    if alpha.degree() != 0 || alpha.space().dim() != m || alpha.space().arity() != n || alpha.codim() != d {
        return Err(Error::Input("expected a degree-0 cochain on g with values in V".into()));
    }
    Ok(())
}

/// Identifiers of the supplementary degree-0 identities on keys with two
/// algebra arguments: `(x_1, x_2, u_3, …, u_{n-1} | h)` and `(x_1, u_2, …, u_{n-1} | y)`.
pub const ONE_COCYCLE_2V: &str = "1-cocycle[2,v]";
pub const ONE_COCYCLE_1G: &str = "1-cocycle[1,g]";

/// Residuals of the degree-0 identity over every `(x_1 < … < x_{n-1} | x_n)`,
/// plus the ϑ-identities of [`Reading::Completed`].
pub fn one_cocycle_residual(a: &NLieAlgebra, g: &GeneralizedRepresentation, alpha: &Cochain) -> Result<ResidualReport> {
    one_cocycle_residual_with(a, g, alpha, Reading::Completed)
}

pub fn one_cocycle_residual_with(
    a: &NLieAlgebra,
    g: &GeneralizedRepresentation,
    alpha: &Cochain,
    reading: Reading,
) -> Result<ResidualReport> {
    if a != g.algebra().as_ref() {
        return Err(Error::Input("representation is defined over a different algebra".into()));
    }
    check_alpha(g, alpha)?;
    let (m, n, d) = (a.dim(), a.arity(), g.rep().v_dim());
    let r = g.rep();
    let val = |z: usize| alpha.value_code(z as u64);
    let mut entries = Vec::new();
    for x in increasing_tuples(m, n - 1) {
        for xn in 0..m {
            let mut res = vec![Scalar::ZERO; d];
            let mut t = x.clone();
            t.push(xn);
            if let Some((s, br)) = a.basis_bracket(&t) {
                for (i, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        for (o, v) in res.iter_mut().zip(val(i)) {
                            *o -= (c * &v).signed(s);
                        }
                    }
                }
            }
            for (o, v) in res.iter_mut().zip(r.act_basis(&x, &val(xn))) {
                *o += v;
            }
            for i in 0..n - 1 {
                let mut rest: Vec<usize> = x.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                rest.push(xn);
                let sign = if (n - 1 - i) % 2 == 0 { 1 } else { -1 };
                for (o, v) in res.iter_mut().zip(r.act_basis(&rest, &val(x[i]))) {
                    *o += v.signed(sign);
                }
            }
            if nonzero(&res) {
                entries.push(ResidualEntry {
                    equation: ONE_COCYCLE.into(),
                    key: CochainKey { blocks: vec![WedgeWord::new_unchecked(x.clone())], tail: xn },
                    residual: res,
                });
            }
        }
    }
    if reading == Reading::Completed && n >= 3 {
        entries.extend(one_cocycle_theta_residuals(g, alpha));
    }
    entries.sort_by(|x, y| (&x.key, &x.equation).cmp(&(&y.key, &y.equation)));
    Ok(ResidualReport::from_entries(entries))
}

/// `ϑ`-identities of a degree-0 cochain:
/// `(−1)^{n-2}ϑ(x_2)(α(x_1), u…, h) + (−1)^{n-1}ϑ(x_1)(α(x_2), u…, h)` and
/// `ϑ(y)(α(x_1), u…) + (−1)^{n-1}ϑ(x_1)(u…, α(y))`.
fn one_cocycle_theta_residuals(g: &GeneralizedRepresentation, alpha: &Cochain) -> Vec<ResidualEntry> {
    let (m, n, d) = (g.algebra().dim(), g.algebra().arity(), g.rep().v_dim());
    let val = |z: usize| alpha.value_code(z as u64);
    let gu = |i: usize| crate::fixtures::unit(m, i);
    let vu = |i: usize| crate::fixtures::unit(d, i);
    let theta = |x: usize, vs: &[Vec<Scalar>]| {
        let refs: Vec<&[Scalar]> = vs.iter().map(Vec::as_slice).collect();
        g.theta_dense(&gu(x), &refs)
    };
    let sign = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    let mut out = Vec::new();
    let mut push = |id: &str, block: Vec<usize>, tail: usize, res: Vec<Scalar>| {
        if nonzero(&res) {
            out.push(ResidualEntry {
                equation: id.into(),
                key: CochainKey { blocks: vec![WedgeWord::new_unchecked(block)], tail },
                residual: res,
            });
        }
    };
    for x in increasing_tuples(m, 2) {
        for u in increasing_tuples(d, n - 3) {
            for h in 0..d {
                let us: Vec<Vec<Scalar>> = u.iter().map(|&i| vu(i)).collect();
                let args = |first: Vec<Scalar>| -> Vec<Vec<Scalar>> {
                    let mut v = vec![first];
                    v.extend(us.iter().cloned());
                    v.push(vu(h));
                    v
                };
                let t1 = theta(x[1], &args(val(x[0])));
                let t2 = theta(x[0], &args(val(x[1])));
                let res = t1
                    .iter()
                    .zip(&t2)
                    .map(|(p, q)| p.clone().signed(sign(n - 2)) + q.clone().signed(sign(n - 1)))
                    .collect();
                let block = x.iter().copied().chain(u.iter().map(|i| i + m)).collect();
                push(ONE_COCYCLE_2V, block, h + m, res);
            }
        }
    }
    for x1 in 0..m {
        for u in increasing_tuples(d, n - 2) {
            for y in 0..m {
                let us: Vec<Vec<Scalar>> = u.iter().map(|&i| vu(i)).collect();
                let mut a1 = vec![val(x1)];
                a1.extend(us.iter().cloned());
                let mut a2 = us.clone();
                a2.push(val(y));
                let t1 = theta(y, &a1);
                let t2 = theta(x1, &a2);
                let res = t1.iter().zip(&t2).map(|(p, q)| p + &q.clone().signed(sign(n - 1))).collect();
                let block = std::iter::once(x1).chain(u.iter().map(|i| i + m)).collect();
                push(ONE_COCYCLE_1G, block, y, res);
            }
        }
    }
    out
}

/// Degree-0 identities versus `d(α)` on `g ⊕ V` ([`Reading::Completed`]).
pub fn crosscheck_one_cocycle(a: &NLieAlgebra, g: &GeneralizedRepresentation, alpha: &Cochain) -> Result<Crosscheck> {
    crosscheck_one_cocycle_with(a, g, alpha, Reading::Completed)
}

pub fn crosscheck_one_cocycle_with(
    a: &NLieAlgebra,
    g: &GeneralizedRepresentation,
    alpha: &Cochain,
    reading: Reading,
) -> Result<Crosscheck> {
    let report = one_cocycle_residual_with(a, g, alpha, reading)?;
    let mu = build_mu(a, g)?;
    let d = new_differential(&mu, &embed(alpha, &mu)?)?;
    let sum = mu.sum_space();
    let n = a.arity();
    let space = mu.space();
    let mut mismatches = Vec::new();
    let mut outside_support = Vec::new();
    let battery: BTreeMap<CochainKey, &ResidualEntry> = report.entries.iter().map(|e| (e.key.clone(), e)).collect();
    let zero = vec![Scalar::ZERO; sum.d];
    let mut keys: Vec<CochainKey> = battery.keys().cloned().collect();
    for (code, _, _) in d.cochain().iter() {
        keys.push(space.key_of(code, 1));
    }
    keys.sort();
    keys.dedup();
    for key in keys {
        let dv = v_part(&sum, &d.cochain().value_at(&key)?);
        let in_g = key.blocks[0].indices().iter().filter(|&&i| i < sum.m).count();
        let id = match (in_g, key.tail < sum.m) {
            (k, true) if k == n - 1 => Some(ONE_COCYCLE),
            _ if reading == Reading::Printed || n < 3 => None,
            (2, false) => Some(ONE_COCYCLE_2V),
            (1, true) => Some(ONE_COCYCLE_1G),
            _ => None,
        };
        match id {
            Some(id) => {
                let bv = battery.get(&key).map_or(&zero, |e| &e.residual);
                if *bv != dv {
                    mismatches.push(Discrepancy { equations: vec![id.into()], key, battery: bv.clone(), differential: dv });
                }
            }
            None if nonzero(&dv) => {
                outside_support.push(ResidualEntry { equation: "outside-support".into(), key, residual: dv });
            }
            None => {}
        }
    }
    Ok(Crosscheck { report, d_is_zero: d.is_zero(), mismatches, outside_support })
}

/// Which component of a two-cochain triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Component {
    /// one argument from g
    B1,
    /// `n-1` arguments from g
    B2,
    /// all arguments from g
    B3,
}

impl Component {
    pub const ALL: [Component; 3] = [Component::B1, Component::B2, Component::B3];

    pub fn g_count(&self, n: usize) -> usize {
        match self {
            Component::B1 => 1,
            Component::B2 => n - 1,
            Component::B3 => n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Component::B1 => "b1",
            Component::B2 => "b2",
            Component::B3 => "b3",
        }
    }
}

/// A totally skew V-valued `n`-form on `g ⊕ V` supported on the three
/// argument patterns of [`Component`], stored on increasing `n`-tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCochainTriple {
    sum: DirectSumSpace,
    arity: usize,
    forms: BTreeMap<Vec<usize>, Vec<Scalar>>,
}

impl TwoCochainTriple {
    fn component_of(sum: &DirectSumSpace, n: usize, t: &[usize]) -> Option<Component> {
        let k = t.iter().filter(|&&i| sum.is_g(i)).count();
        Component::ALL.into_iter().find(|c| c.g_count(n) == k)
    }

    pub fn new(
        sum: DirectSumSpace,
        arity: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Vec<Scalar>)>,
    ) -> Result<Self> {
        if arity < 3 {
            return Err(Error::Input(format!("the two-cochain battery needs arity ≥ 3, got {arity}")));
        }
        let mut forms = BTreeMap::new();
        for (t, v) in entries {
            if t.len() != arity {
                return Err(Error::Input(format!("form argument {t:?} does not have {arity} entries")));
            }
            WedgeWord::new(t.clone(), sum.dim())?;
            if Self::component_of(&sum, arity, &t).is_none() {
                return Err(Error::Input(format!("{t:?} is not a β₁, β₂ or β₃ argument pattern")));
            }
            if v.len() != sum.d {
                return Err(Error::Input(format!("value at {t:?} has wrong length")));
            }
            if nonzero(&v) {
                forms.insert(t, v);
            }
        }
        Ok(TwoCochainTriple { sum, arity, forms })
    }

    pub fn zero(sum: DirectSumSpace, arity: usize) -> Result<Self> {
        Self::new(sum, arity, std::iter::empty())
    }

    /// Random coefficients on every admissible increasing tuple, lexicographically.
    pub fn random<R: Rng>(rng: &mut R, sum: DirectSumSpace, arity: usize) -> Result<Self> {
        let mut entries = Vec::new();
        for t in increasing_tuples(sum.dim(), arity) {
            if Self::component_of(&sum, arity, &t).is_some() {
                let v = (0..sum.d).map(|_| random::scalar(rng)).collect();
                entries.push((t, v));
            }
        }
        Self::new(sum, arity, entries)
    }

    pub fn forms(&self) -> &BTreeMap<Vec<usize>, Vec<Scalar>> {
        &self.forms
    }

    pub fn sum_space(&self) -> DirectSumSpace {
        self.sum
    }

    pub fn is_zero(&self) -> bool {
        self.forms.is_empty()
    }

    /// Only the given component.
    pub fn component(&self, c: Component) -> TwoCochainTriple {
        let forms = self
            .forms
            .iter()
            .filter(|(t, _)| Self::component_of(&self.sum, self.arity, t) == Some(c))
            .map(|(t, v)| (t.clone(), v.clone()))
            .collect();
        TwoCochainTriple { sum: self.sum, arity: self.arity, forms }
    }

    /// `a·self + b·other`
    pub fn combine(&self, a: &Scalar, other: &TwoCochainTriple, b: &Scalar) -> TwoCochainTriple {
        let mut forms: BTreeMap<Vec<usize>, Vec<Scalar>> = BTreeMap::new();
        for (src, c) in [(self, a), (other, b)] {
            for (t, v) in &src.forms {
                let e = forms.entry(t.clone()).or_insert_with(|| vec![Scalar::ZERO; self.sum.d]);
                for (x, y) in e.iter_mut().zip(v) {
                    *x += c * y;
                }
            }
        }
        forms.retain(|_, v| nonzero(v));
        TwoCochainTriple { sum: self.sum, arity: self.arity, forms }
    }

    /// Value on basis arguments in any order.
    pub fn eval_basis(&self, t: &[usize]) -> Option<(i32, &Vec<Scalar>)> {
        let sign = permutation_sign(t);
        if sign == 0 {
            return None;
        }
        let mut sorted = t.to_vec();
        sorted.sort_unstable();
        self.forms.get(&sorted).map(|v| (sign, v))
    }

    /// Value of component `c` on dense W-vectors, as a W-vector (V part only).
    pub fn eval_component(&self, c: Component, args: &[&[Scalar]]) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.sum.dim()];
        let want = c.g_count(self.arity);
        expand_multilinear(args, |idx, coef| {
            if idx.iter().filter(|&&i| self.sum.is_g(i)).count() != want {
                return;
            }
            if let Some((s, v)) = self.eval_basis(idx) {
                let coef = coef.signed(s);
                for (o, x) in out[self.sum.m..].iter_mut().zip(v) {
                    if !x.is_zero() {
                        *o += &coef * x;
                    }
                }
            }
        });
        out
    }

    /// The degree-1 cochain `(X | z) ↦ β(x_1, …, x_{n-1}, z)`.
    pub fn to_cochain(&self, mu: &MuElement) -> Result<RestrictedCochain> {
        if mu.sum_space() != self.sum || mu.space().arity() != self.arity {
            return Err(Error::Input("triple and μ live on different spaces".into()));
        }
        let space = mu.space();
        let bb = space.blocks();
        let mut terms = Vec::new();
        for b in 0..bb.len() as u32 {
            for z in 0..self.sum.dim() {
                let mut t = bb.word(b).to_vec();
                t.push(z);
                if let Some((s, v)) = self.eval_basis(&t) {
                    let code = space.encode(&[b], z);
                    for (i, c) in v.iter().enumerate() {
                        if !c.is_zero() {
                            terms.push(((code, (self.sum.m + i) as u32), c.clone().signed(s)));
                        }
                    }
                }
            }
        }
        RestrictedCochain::new(Cochain::from_terms(space.clone(), 1, self.sum.dim(), terms), self.sum)
    }

    /// Read a totally skew degree-1 restricted cochain as a triple; fails if
    /// the cochain is not skew in all `n` arguments or has other patterns.
    pub fn from_cochain(c: &RestrictedCochain, mu: &MuElement) -> Result<Self> {
        let sum = c.sum_space();
        let n = mu.space().arity();
        if c.degree() != 1 {
            return Err(Error::Input("expected a degree-1 cochain".into()));
        }
        let mut entries = Vec::new();
        for t in increasing_tuples(sum.dim(), n) {
            let v = v_part(&sum, &c.cochain().eval_basis(&[&t[..n - 1]], t[n - 1])?);
            if nonzero(&v) {
                entries.push((t, v));
            }
        }
        let triple = Self::new(sum, n, entries)?;
        if triple.to_cochain(mu)?.cochain() != c.cochain() {
            return Err(Error::Input("cochain is not totally skew-symmetric".into()));
        }
        Ok(triple)
    }
}

/// Argument groups an identity ranges over.
#[derive(Clone, Copy, Debug)]
enum Group {
    /// increasing tuple of algebra indices
    G(usize),
    /// increasing tuple of V indices
    V(usize),
}

type Vars = [Vec<usize>];

/// One identity of the two-cochain battery.
struct Equation {
    id: &'static str,
    component: Component,
    groups: fn(usize) -> Vec<Group>,
    /// W-index blocks and tail of the degree-2 key the identity sits on.
    key: fn(&Ctx, &Vars) -> (Vec<Vec<usize>>, usize),
    eval: fn(&Ctx, &Vars) -> Vec<(Term, W)>,
    /// part of the displayed list
    printed: bool,
}

/// Evaluation context: every vector is dense over `W = g ⊕ V`.
struct Ctx<'a> {
    g: &'a GeneralizedRepresentation,
    beta: &'a TwoCochainTriple,
    sum: DirectSumSpace,
    n: usize,
}

type W = Vec<Scalar>;

fn sgn(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::ONE
    } else {
        -Scalar::ONE
    }
}

fn without(v: &[W], i: usize) -> Vec<W> {
    v.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect()
}

fn with(v: &[W], i: usize, x: W) -> Vec<W> {
    let mut out = v.to_vec();
    out[i] = x;
    out
}

fn cat(parts: &[&[W]]) -> Vec<W> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

impl<'a> Ctx<'a> {
    fn gs(&self, idx: &[usize]) -> Vec<W> {
        idx.iter().map(|&i| crate::fixtures::unit(self.sum.dim(), i)).collect()
    }

    fn vs(&self, idx: &[usize]) -> Vec<W> {
        idx.iter().map(|&i| crate::fixtures::unit(self.sum.dim(), self.sum.m + i)).collect()
    }

    fn b(&self, c: Component, args: &[W]) -> W {
        let refs: Vec<&[Scalar]> = args.iter().map(Vec::as_slice).collect();
        self.beta.eval_component(c, &refs)
    }

    /// `ρ(x_1, …, x_{n-1})(v)`
    fn rho(&self, xs: &[W], v: &W) -> W {
        let gs: Vec<&[Scalar]> = xs.iter().map(|x| &x[..self.sum.m]).collect();
        let out = self.g.rep().act_dense(&gs, &v[self.sum.m..]);
        self.sum.include_v(&out)
    }

    /// `ϑ(x)(v_1, …, v_{n-1})`
    fn theta(&self, x: &W, vs: &[W]) -> W {
        let refs: Vec<&[Scalar]> = vs.iter().map(|v| &v[self.sum.m..]).collect();
        self.sum.include_v(&self.g.theta_dense(&x[..self.sum.m], &refs))
    }

    /// `μ(a_1, …, a_n)` on `g ⊕ V`: π on the g-parts, plus `(−1)^{n−i}ρ(…)(v_i)`
    /// for one V-part at slot `i`, plus `(−1)^{n−i}ϑ(x_i)(…)` for one g-part.
    fn mu(&self, args: &[W]) -> W {
        let m = self.sum.m;
        let split = |keep_g: bool| -> Vec<W> {
            args.iter()
                .map(|a| a.iter().enumerate().map(|(i, x)| if (i < m) == keep_g { x.clone() } else { Scalar::ZERO }).collect())
                .collect()
        };
        let (gp, vp) = (split(true), split(false));
        let mut out = self.pi(&gp);
        for i in 0..self.n {
            let s = sgn(self.n - 1 - i);
            let terms = [self.rho(&without(&gp, i), &vp[i]), self.theta(&gp[i], &without(&vp, i))];
            for t in terms {
                for (o, x) in out.iter_mut().zip(t) {
                    *o += &s * &x;
                }
            }
        }
        out
    }

    /// `[x_1, …, x_n]`
    fn pi(&self, xs: &[W]) -> W {
        let refs: Vec<&[Scalar]> = xs.iter().map(|x| &x[..self.sum.m]).collect();
        self.sum.include_g(&self.g.algebra().bracket_dense(&refs))
    }
}

/// Which version of the identities to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    /// Terms and signs exactly as displayed; no supplementary identities.
    Printed,
    /// One sign repaired, the arity-3 terms that arise when a block with
    /// `n−2` V-arguments meets an algebra element added, and identities for
    /// the two key classes the printed list leaves uncovered.
    #[default]
    Completed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Term {
    Printed,
    /// sign differs from the printed one; stored with the corrected sign
    SignFixed,
    /// absent from the printed identity
    Supplement,
}

/// Signed terms of one identity; the residual is their sum.
#[derive(Default)]
struct Acc(Vec<(Term, W)>);

impl Acc {
    fn push(&mut self, kind: Term, c: Scalar, v: W) {
        self.0.push((kind, v.into_iter().map(|x| &c * &x).collect()));
    }

    fn add(&mut self, c: Scalar, v: W) {
        self.push(Term::Printed, c, v);
    }

    fn fix(&mut self, c: Scalar, v: W) {
        self.push(Term::SignFixed, c, v);
    }

    fn extra(&mut self, c: Scalar, v: W) {
        self.push(Term::Supplement, c, v);
    }
}

fn sum_terms(terms: &[(Term, W)], len: usize, reading: Reading) -> W {
    let mut out = vec![Scalar::ZERO; len];
    for (kind, t) in terms {
        let c = match (reading, kind) {
            (Reading::Completed, _) | (Reading::Printed, Term::Printed) => Scalar::ONE,
            (Reading::Printed, Term::SignFixed) => -Scalar::ONE,
            (Reading::Printed, Term::Supplement) => continue,
        };
        for (o, x) in out.iter_mut().zip(t) {
            *o += &c * x;
        }
    }
    out
}

fn vshift(c: &Ctx, idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + c.sum.m).collect()
}

fn join(parts: &[&[usize]]) -> Vec<usize> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

use Component::{B1, B2, B3};
use Group::{G, V};

/// `(X | Y | z)` with `X`, `Y` of `n−1` algebra indices and `z` in g.
fn eq_b3_xyz(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x, y, z) = (c.gs(&v[0]), c.gs(&v[1]), c.gs(&v[2]).remove(0));
    let mut r = Acc::default();
    for s in 0..n - 1 {
        let b = c.b(B3, &cat(&[&x, &[y[s].clone()]]));
        r.add(-sgn(n - 1 - s), c.rho(&cat(&[&without(&y, s), std::slice::from_ref(&z)]), &b));
    }
    r.add(Scalar::ONE, c.rho(&x, &c.b(B3, &cat(&[&y, std::slice::from_ref(&z)]))));
    r.add(-Scalar::ONE, c.rho(&y, &c.b(B3, &cat(&[&x, std::slice::from_ref(&z)]))));
    for s in 0..n - 1 {
        let moved = c.pi(&cat(&[&x, &[y[s].clone()]]));
        r.add(-Scalar::ONE, c.b(B3, &cat(&[&with(&y, s, moved), std::slice::from_ref(&z)])));
    }
    r.add(Scalar::ONE, c.b(B3, &cat(&[&x, &[c.pi(&cat(&[&y, std::slice::from_ref(&z)]))]])));
    r.add(-Scalar::ONE, c.b(B3, &cat(&[&y, &[c.pi(&cat(&[&x, &[z]]))]])));
    r.0
}

/// `(X | y_1, y_2, h_3, …, h_{n-1} | h_n)`, shared by `β_3`, `β_2` and `β_1`
/// forms `β(P, y)` with `P` the first block's arguments.
fn theta_pair(c: &Ctx, comp: Component, p: &[W], y: &[W], h: &[W], hn: &W) -> Vec<(Term, W)> {
    let n = c.n;
    let mut r = Acc::default();
    let rest = cat(&[h, std::slice::from_ref(hn)]);
    let b1 = c.b(comp, &cat(&[p, &[y[0].clone()]]));
    r.add(-sgn(n - 2), c.theta(&y[1], &cat(&[&[b1], &rest])));
    let b2 = c.b(comp, &cat(&[p, &[y[1].clone()]]));
    r.add(-sgn(n - 1), c.theta(&y[0], &cat(&[&[b2], &rest])));
    r.0
}

fn eq_b3_xyh(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    theta_pair(c, B3, &c.gs(&v[0]), &c.gs(&v[1]), &c.vs(&v[2]), &c.vs(&v[3])[0])
}

fn eq_b3_xuyz(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x1, u, y, z) = (&c.gs(&v[0])[0], c.vs(&v[1]), c.gs(&v[2]), c.gs(&v[3]).remove(0));
    let b = c.b(B3, &cat(&[&y, &[z]]));
    let mut r = Acc::default();
    r.add(sgn(n - 1), c.theta(x1, &cat(&[&u, &[b]])));
    r.0
}

fn eq_b2_xyh(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x, y, h) = (c.gs(&v[0]), c.gs(&v[1]), c.vs(&v[2]).remove(0));
    let mut r = Acc::default();
    r.add(Scalar::ONE, c.rho(&x, &c.b(B2, &cat(&[&y, std::slice::from_ref(&h)]))));
    r.add(-Scalar::ONE, c.rho(&y, &c.b(B2, &cat(&[&x, std::slice::from_ref(&h)]))));
    for s in 0..n - 1 {
        let moved = c.pi(&cat(&[&x, &[y[s].clone()]]));
        r.add(-Scalar::ONE, c.b(B2, &cat(&[&with(&y, s, moved), std::slice::from_ref(&h)])));
    }
    r.add(Scalar::ONE, c.b(B2, &cat(&[&x, &[c.rho(&y, &h)]])));
    r.add(-Scalar::ONE, c.b(B2, &cat(&[&y, &[c.rho(&x, &h)]])));
    r.0
}

fn eq_b2_xyhy(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x, y, h, yn) = (c.gs(&v[0]), c.gs(&v[1]), c.vs(&v[2]).remove(0), c.gs(&v[3]).remove(0));
    let y_yn = cat(&[&y, std::slice::from_ref(&yn)]);
    let mut r = Acc::default();
    r.add(Scalar::ONE, c.rho(&y_yn, &c.b(B2, &cat(&[&x, std::slice::from_ref(&h)]))));
    r.add(Scalar::ONE, c.rho(&x, &c.b(B2, &cat(&[&y, &[h.clone(), yn.clone()]]))));
    for s in 0..n - 2 {
        let moved = c.pi(&cat(&[&x, &[y[s].clone()]]));
        r.add(-Scalar::ONE, c.b(B2, &cat(&[&with(&y, s, moved), &[h.clone(), yn.clone()]])));
    }
    r.add(-Scalar::ONE, c.b(B2, &cat(&[&y, &[c.rho(&x, &h), yn.clone()]])));
    r.fix(-Scalar::ONE, c.b(B2, &cat(&[&x, &[c.rho(&y_yn, &h)]])));
    let moved = c.pi(&cat(&[&x, &[yn]]));
    r.add(-Scalar::ONE, c.b(B2, &cat(&[&y, &[h, moved]])));
    r.0
}

fn eq_b2_xyhh(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x, y1, h, hn) = (c.gs(&v[0]), c.gs(&v[1]).remove(0), c.vs(&v[2]), c.vs(&v[3]).remove(0));
    let hs = cat(&[&h, std::slice::from_ref(&hn)]);
    let mut r = Acc::default();
    // h_2 … h_{n-1} are hs[0..n-2]; the sum runs over s = 2..n-1
    for s in 0..n - 2 {
        let b = c.b(B2, &cat(&[&x, &[hs[s].clone()]]));
        r.add(-sgn(n - 1), c.theta(&y1, &with(&hs, s, b)));
    }
    let b = c.b(B2, &cat(&[&x, &[hn]]));
    r.add(-sgn(n - 1), c.theta(&y1, &cat(&[&h, &[b]])));
    r.add(sgn(n - 1), c.b(B2, &cat(&[&x, &[c.theta(&y1, &hs)]])));
    r.0
}

fn eq_b2_xuyz(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x, u1, y, z) = (c.gs(&v[0]), c.vs(&v[1]).remove(0), c.gs(&v[2]), c.gs(&v[3]).remove(0));
    let xu = cat(&[&x, std::slice::from_ref(&u1)]);
    let mut r = Acc::default();
    for s in 0..n - 1 {
        let b = c.b(B2, &cat(&[&xu, &[y[s].clone()]]));
        r.add(-sgn(n - 1 - s), c.rho(&cat(&[&without(&y, s), std::slice::from_ref(&z)]), &b));
    }
    r.add(-Scalar::ONE, c.rho(&y, &c.b(B2, &cat(&[&xu, std::slice::from_ref(&z)]))));
    for s in 0..n - 1 {
        let moved = c.rho(&cat(&[&x, &[y[s].clone()]]), &u1);
        r.add(Scalar::ONE, c.b(B2, &cat(&[&with(&y, s, moved), std::slice::from_ref(&z)])));
    }
    r.add(Scalar::ONE, c.b(B2, &cat(&[&xu, &[c.pi(&cat(&[&y, std::slice::from_ref(&z)]))]])));
    r.add(Scalar::ONE, c.b(B2, &cat(&[&y, &[c.rho(&cat(&[&x, &[z]]), &u1)]])));
    r.0
}

fn eq_b2_xuyh(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let xu = cat(&[&c.gs(&v[0]), &c.vs(&v[1])]);
    theta_pair(c, B2, &xu, &c.gs(&v[2]), &c.vs(&v[3]), &c.vs(&v[4])[0])
}

fn eq_b2_xu_yh(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x1, u, y, hn) = (c.gs(&v[0]).remove(0), c.vs(&v[1]), c.gs(&v[2]), c.vs(&v[3]).remove(0));
    let mut r = Acc::default();
    let b = c.b(B2, &cat(&[&y, std::slice::from_ref(&hn)]));
    r.add(sgn(n - 1), c.theta(&x1, &cat(&[&u, &[b]])));
    let t = c.theta(&x1, &cat(&[&u, &[hn]]));
    r.add(-sgn(n - 1), c.b(B2, &cat(&[&y, &[t]])));
    r.0
}

fn eq_b2_xu_yhy(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x1, u, y, h, yn) =
        (c.gs(&v[0]).remove(0), c.vs(&v[1]), c.gs(&v[2]), c.vs(&v[3]).remove(0), c.gs(&v[4]).remove(0));
    let mut r = Acc::default();
    let b = c.b(B2, &cat(&[&y, &[h.clone(), yn.clone()]]));
    r.add(sgn(n - 1), c.theta(&x1, &cat(&[&u, &[b]])));
    let t = c.theta(&x1, &cat(&[&u, std::slice::from_ref(&h)]));
    r.add(-sgn(n - 1), c.b(B2, &cat(&[&y, &[t, yn.clone()]])));
    let xu = cat(&[&[x1], &u]);
    let yb = cat(&[&y, &[h]]);
    r.extra(-Scalar::ONE, c.mu(&cat(&[&yb, &[c.b(B2, &cat(&[&xu, std::slice::from_ref(&yn)]))]])));
    for s in 0..n - 1 {
        let b = c.b(B2, &cat(&[&xu, &[yb[s].clone()]]));
        r.extra(-Scalar::ONE, c.mu(&cat(&[&with(&yb, s, b), std::slice::from_ref(&yn)])));
    }
    r.0
}

fn eq_b2_u_yy(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (u, y, yn) = (c.vs(&v[0]), c.gs(&v[1]), c.gs(&v[2]).remove(0));
    let mut r = Acc::default();
    for s in 0..n - 1 {
        let t = c.theta(&y[s], &u);
        r.add(-Scalar::ONE, c.b(B2, &cat(&[&with(&y, s, t), std::slice::from_ref(&yn)])));
    }
    r.add(-Scalar::ONE, c.b(B2, &cat(&[&y, &[c.theta(&yn, &u)]])));
    r.0
}

fn eq_b2_x_hy(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x, h, yn) = (c.gs(&v[0]), c.vs(&v[1]), c.gs(&v[2]).remove(0));
    let mut r = Acc::default();
    for s in 0..n - 1 {
        let b = c.b(B2, &cat(&[&x, &[h[s].clone()]]));
        r.add(-Scalar::ONE, c.theta(&yn, &with(&h, s, b)));
    }
    r.add(Scalar::ONE, c.b(B2, &cat(&[&x, &[c.theta(&yn, &h)]])));
    r.0
}

fn eq_b1_x_yhh(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x, y1, h, hn) = (c.gs(&v[0]), c.gs(&v[1]).remove(0), c.vs(&v[2]), c.vs(&v[3]).remove(0));
    let hs = cat(&[&h, &[hn]]);
    let mut r = Acc::default();
    r.add(Scalar::ONE, c.rho(&x, &c.b(B1, &cat(&[std::slice::from_ref(&y1), &hs]))));
    let moved = c.pi(&cat(&[&x, std::slice::from_ref(&y1)]));
    r.add(-Scalar::ONE, c.b(B1, &cat(&[&[moved], &hs])));
    // s = 2..n−1 then the tail h_n: every h slot
    for s in 0..n - 1 {
        let acted = c.rho(&x, &hs[s]);
        r.add(-Scalar::ONE, c.b(B1, &cat(&[std::slice::from_ref(&y1), &with(&hs, s, acted)])));
    }
    r.0
}

fn eq_b1_x_hy(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x, h, yn) = (c.gs(&v[0]), c.vs(&v[1]), c.gs(&v[2]).remove(0));
    let mut r = Acc::default();
    for s in 0..n - 1 {
        let b = c.b(B1, &cat(&[&x, &[h[s].clone()]]));
        r.add(-Scalar::ONE, c.theta(&yn, &with(&h, s, b)));
    }
    r.add(Scalar::ONE, c.rho(&x, &c.b(B1, &cat(&[&h, std::slice::from_ref(&yn)]))));
    for s in 0..n - 1 {
        let acted = c.rho(&x, &h[s]);
        r.add(-Scalar::ONE, c.b(B1, &cat(&[&with(&h, s, acted), std::slice::from_ref(&yn)])));
    }
    let moved = c.pi(&cat(&[&x, &[yn]]));
    r.add(-Scalar::ONE, c.b(B1, &cat(&[&h, &[moved]])));
    r.0
}

fn eq_b1_xu_yh(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let (x1, u, y, hn) = (c.gs(&v[0]).remove(0), c.vs(&v[1]), c.gs(&v[2]), c.vs(&v[3]).remove(0));
    let xu = cat(&[&[x1], &u]);
    let mut r = Acc::default();
    r.add(-Scalar::ONE, c.rho(&y, &c.b(B1, &cat(&[&xu, std::slice::from_ref(&hn)]))));
    r.add(Scalar::ONE, c.b(B1, &cat(&[&xu, &[c.rho(&y, &hn)]])));
    for s in 0..c.n - 1 {
        let moved = c.mu(&cat(&[&xu, &[y[s].clone()]]));
        r.extra(-Scalar::ONE, c.b(B1, &cat(&[&with(&y, s, moved), std::slice::from_ref(&hn)])));
    }
    r.0
}

fn eq_b1_xu_yhh(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x1, u, y1, h, hn) =
        (c.gs(&v[0]).remove(0), c.vs(&v[1]), c.gs(&v[2]).remove(0), c.vs(&v[3]), c.vs(&v[4]).remove(0));
    let xu = cat(&[std::slice::from_ref(&x1), &u]);
    let hs = cat(&[&h, std::slice::from_ref(&hn)]);
    let mut r = Acc::default();
    for s in 0..n - 2 {
        let b = c.b(B1, &cat(&[&xu, &[hs[s].clone()]]));
        r.add(-Scalar::ONE, c.theta(&y1, &with(&hs, s, b)));
    }
    let b = c.b(B1, &cat(&[std::slice::from_ref(&y1), &hs]));
    r.add(sgn(n - 1), c.theta(&x1, &cat(&[&u, &[b]])));
    let b = c.b(B1, &cat(&[&xu, std::slice::from_ref(&hn)]));
    r.add(-sgn(n - 1), c.theta(&y1, &cat(&[&h, &[b]])));
    for s in 0..n - 2 {
        let t = c.theta(&x1, &cat(&[&u, &[hs[s].clone()]]));
        r.add(-sgn(n - 1), c.b(B1, &cat(&[std::slice::from_ref(&y1), &with(&hs, s, t)])));
    }
    r.add(sgn(n - 1), c.b(B1, &cat(&[&xu, &[c.theta(&y1, &hs)]])));
    let t = c.theta(&x1, &cat(&[&u, &[hn]]));
    r.add(-sgn(n - 1), c.b(B1, &cat(&[&[y1], &h, &[t]])));
    r.0
}

fn eq_b1_xu_hy(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x1, u, h, yn) = (c.gs(&v[0]).remove(0), c.vs(&v[1]), c.vs(&v[2]), c.gs(&v[3]).remove(0));
    let xu = cat(&[std::slice::from_ref(&x1), &u]);
    let mut r = Acc::default();
    for s in 0..n - 1 {
        let b = c.b(B1, &cat(&[&xu, &[h[s].clone()]]));
        r.add(-Scalar::ONE, c.theta(&yn, &with(&h, s, b)));
    }
    let b = c.b(B1, &cat(&[&h, std::slice::from_ref(&yn)]));
    r.add(sgn(n - 1), c.theta(&x1, &cat(&[&u, &[b]])));
    for s in 0..n - 1 {
        let t = c.theta(&x1, &cat(&[&u, &[h[s].clone()]]));
        r.add(-sgn(n - 1), c.b(B1, &cat(&[&with(&h, s, t), std::slice::from_ref(&yn)])));
    }
    r.add(Scalar::ONE, c.b(B1, &cat(&[&xu, &[c.theta(&yn, &h)]])));
    r.0
}

fn eq_b1_u_yz(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (u, y, z) = (c.vs(&v[0]), c.gs(&v[1]), c.gs(&v[2]).remove(0));
    let mut r = Acc::default();
    for s in 0..n - 1 {
        let b = c.b(B1, &cat(&[&u, &[y[s].clone()]]));
        r.add(-sgn(n - 1 - s), c.rho(&cat(&[&without(&y, s), std::slice::from_ref(&z)]), &b));
    }
    r.add(-Scalar::ONE, c.rho(&y, &c.b(B1, &cat(&[&u, std::slice::from_ref(&z)]))));
    r.add(Scalar::ONE, c.b(B1, &cat(&[&u, &[c.pi(&cat(&[&y, &[z]]))]])));
    r.0
}

fn eq_b1_u_yyh(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let (u, y, h, hn) = (c.vs(&v[0]), c.gs(&v[1]), c.vs(&v[2]), c.vs(&v[3]).remove(0));
    let rest = cat(&[&h, std::slice::from_ref(&hn)]);
    let mut r = Acc(theta_pair(c, B1, &u, &y, &h, &hn));
    r.add(-Scalar::ONE, c.b(B1, &cat(&[&[c.theta(&y[0], &u), y[1].clone()], &rest])));
    r.add(-Scalar::ONE, c.b(B1, &cat(&[&[y[0].clone(), c.theta(&y[1], &u)], &rest])));
    r.0
}

fn eq_b1_u_yhy(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (u, y1, h, yn) = (c.vs(&v[0]), c.gs(&v[1]).remove(0), c.vs(&v[2]), c.gs(&v[3]).remove(0));
    let mut r = Acc::default();
    let b = c.b(B1, &cat(&[&u, std::slice::from_ref(&y1)]));
    r.add(-Scalar::ONE, c.theta(&yn, &cat(&[&[b], &h])));
    let b = c.b(B1, &cat(&[&u, std::slice::from_ref(&yn)]));
    r.add(-sgn(n - 1), c.theta(&y1, &cat(&[&h, &[b]])));
    r.add(-Scalar::ONE, c.b(B1, &cat(&[&[c.theta(&y1, &u)], &h, std::slice::from_ref(&yn)])));
    r.add(-Scalar::ONE, c.b(B1, &cat(&[&[y1], &h, &[c.theta(&yn, &u)]])));
    r.0
}

/// `(X | y_1, …, y_{n-2}, h | y_n)` on `β_3`; only arity 3 contributes.
fn eq_b3_x_yhy(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x, y, h, yn) = (c.gs(&v[0]), c.gs(&v[1]), c.vs(&v[2]).remove(0), c.gs(&v[3]).remove(0));
    let yb = cat(&[&y, &[h]]);
    let mut r = Acc::default();
    r.extra(-Scalar::ONE, c.mu(&cat(&[&yb, &[c.b(B3, &cat(&[&x, std::slice::from_ref(&yn)]))]])));
    for s in 0..n - 1 {
        let b = c.b(B3, &cat(&[&x, &[yb[s].clone()]]));
        r.extra(-Scalar::ONE, c.mu(&cat(&[&with(&yb, s, b), std::slice::from_ref(&yn)])));
    }
    r.0
}

/// `(x_1, u_2, …, u_{n-1} | y_1, …, y_{n-2}, h | y_n)` on `β_1`.
fn eq_b1_xu_yhy(c: &Ctx, v: &Vars) -> Vec<(Term, W)> {
    let n = c.n;
    let (x1, u, y, h, yn) =
        (c.gs(&v[0]).remove(0), c.vs(&v[1]), c.gs(&v[2]), c.vs(&v[3]).remove(0), c.gs(&v[4]).remove(0));
    let xu = cat(&[&[x1], &u]);
    let y_yn = cat(&[&y, std::slice::from_ref(&yn)]);
    let yb = cat(&[&y, std::slice::from_ref(&h)]);
    let mut r = Acc::default();
    r.extra(Scalar::ONE, c.rho(&y_yn, &c.b(B1, &cat(&[&xu, std::slice::from_ref(&h)]))));
    r.extra(-Scalar::ONE, c.b(B1, &cat(&[&xu, &[c.rho(&y_yn, &h)]])));
    r.extra(-Scalar::ONE, c.b(B1, &cat(&[&yb, &[c.mu(&cat(&[&xu, std::slice::from_ref(&yn)]))]])));
    for s in 0..n - 1 {
        let moved = c.mu(&cat(&[&xu, &[yb[s].clone()]]));
        r.extra(-Scalar::ONE, c.b(B1, &cat(&[&with(&yb, s, moved), std::slice::from_ref(&yn)])));
    }
    r.0
}

// Key builders. `v` holds the groups in the order the identity declares them;
// V indices are shifted into W.
fn key_xy_t(c: &Ctx, v: &Vars, tail_is_v: bool) -> (Vec<Vec<usize>>, usize) {
    let tail = if tail_is_v { v[2][0] + c.sum.m } else { v[2][0] };
    (vec![v[0].clone(), v[1].clone()], tail)
}

const EQUATIONS: &[Equation] = &[
    Equation {
        id: "b3[n-1,n-1,g]",
        component: B3,
        groups: |n| vec![G(n - 1), G(n - 1), G(1)],
        key: |c, v| key_xy_t(c, v, false),
        printed: true,
        eval: eq_b3_xyz,
    },
    Equation {
        id: "b3[n-1,2,v]",
        component: B3,
        groups: |n| vec![G(n - 1), G(2), V(n - 3), V(1)],
        key: |c, v| (vec![v[0].clone(), join(&[&v[1], &vshift(c, &v[2])])], v[3][0] + c.sum.m),
        printed: true,
        eval: eq_b3_xyh,
    },
    Equation {
        id: "b3[1,n-1,g]",
        component: B3,
        groups: |n| vec![G(1), V(n - 2), G(n - 1), G(1)],
        key: |c, v| (vec![join(&[&v[0], &vshift(c, &v[1])]), v[2].clone()], v[3][0]),
        printed: true,
        eval: eq_b3_xuyz,
    },
    Equation {
        id: "b2[n-1,n-1,v]",
        component: B2,
        groups: |n| vec![G(n - 1), G(n - 1), V(1)],
        key: |c, v| key_xy_t(c, v, true),
        printed: true,
        eval: eq_b2_xyh,
    },
    Equation {
        id: "b2[n-1,n-2,g]",
        component: B2,
        groups: |n| vec![G(n - 1), G(n - 2), V(1), G(1)],
        key: |c, v| (vec![v[0].clone(), join(&[&v[1], &vshift(c, &v[2])])], v[3][0]),
        printed: true,
        eval: eq_b2_xyhy,
    },
    Equation {
        id: "b2[n-1,1,v]",
        component: B2,
        groups: |n| vec![G(n - 1), G(1), V(n - 2), V(1)],
        key: |c, v| (vec![v[0].clone(), join(&[&v[1], &vshift(c, &v[2])])], v[3][0] + c.sum.m),
        printed: true,
        eval: eq_b2_xyhh,
    },
    Equation {
        id: "b2[n-2,n-1,g]",
        component: B2,
        groups: |n| vec![G(n - 2), V(1), G(n - 1), G(1)],
        key: |c, v| (vec![join(&[&v[0], &vshift(c, &v[1])]), v[2].clone()], v[3][0]),
        printed: true,
        eval: eq_b2_xuyz,
    },
    Equation {
        id: "b2[n-2,2,v]",
        component: B2,
        groups: |n| vec![G(n - 2), V(1), G(2), V(n - 3), V(1)],
        key: |c, v| {
            (
                vec![join(&[&v[0], &vshift(c, &v[1])]), join(&[&v[2], &vshift(c, &v[3])])],
                v[4][0] + c.sum.m,
            )
        },
        printed: true,
        eval: eq_b2_xuyh,
    },
    Equation {
        id: "b2[1,n-1,v]",
        component: B2,
        groups: |n| vec![G(1), V(n - 2), G(n - 1), V(1)],
        key: |c, v| (vec![join(&[&v[0], &vshift(c, &v[1])]), v[2].clone()], v[3][0] + c.sum.m),
        printed: true,
        eval: eq_b2_xu_yh,
    },
    Equation {
        id: "b2[1,n-2,g]",
        component: B2,
        groups: |n| vec![G(1), V(n - 2), G(n - 2), V(1), G(1)],
        key: |c, v| {
            (
                vec![join(&[&v[0], &vshift(c, &v[1])]), join(&[&v[2], &vshift(c, &v[3])])],
                v[4][0],
            )
        },
        printed: true,
        eval: eq_b2_xu_yhy,
    },
    Equation {
        id: "b2[0,n-1,g]",
        component: B2,
        groups: |n| vec![V(n - 1), G(n - 1), G(1)],
        key: |c, v| (vec![vshift(c, &v[0]), v[1].clone()], v[2][0]),
        printed: true,
        eval: eq_b2_u_yy,
    },
    Equation {
        id: "b2[n-1,0,g]",
        component: B2,
        groups: |n| vec![G(n - 1), V(n - 1), G(1)],
        key: |c, v| (vec![v[0].clone(), vshift(c, &v[1])], v[2][0]),
        printed: true,
        eval: eq_b2_x_hy,
    },
    Equation {
        id: "b1[n-1,1,v]",
        component: B1,
        groups: |n| vec![G(n - 1), G(1), V(n - 2), V(1)],
        key: |c, v| (vec![v[0].clone(), join(&[&v[1], &vshift(c, &v[2])])], v[3][0] + c.sum.m),
        printed: true,
        eval: eq_b1_x_yhh,
    },
    Equation {
        id: "b1[n-1,0,g]",
        component: B1,
        groups: |n| vec![G(n - 1), V(n - 1), G(1)],
        key: |c, v| (vec![v[0].clone(), vshift(c, &v[1])], v[2][0]),
        printed: true,
        eval: eq_b1_x_hy,
    },
    Equation {
        id: "b1[1,n-1,v]",
        component: B1,
        groups: |n| vec![G(1), V(n - 2), G(n - 1), V(1)],
        key: |c, v| (vec![join(&[&v[0], &vshift(c, &v[1])]), v[2].clone()], v[3][0] + c.sum.m),
        printed: true,
        eval: eq_b1_xu_yh,
    },
    Equation {
        id: "b1[1,1,v]",
        component: B1,
        groups: |n| vec![G(1), V(n - 2), G(1), V(n - 2), V(1)],
        key: |c, v| {
            (
                vec![join(&[&v[0], &vshift(c, &v[1])]), join(&[&v[2], &vshift(c, &v[3])])],
                v[4][0] + c.sum.m,
            )
        },
        printed: true,
        eval: eq_b1_xu_yhh,
    },
    Equation {
        id: "b1[1,0,g]",
        component: B1,
        groups: |n| vec![G(1), V(n - 2), V(n - 1), G(1)],
        key: |c, v| (vec![join(&[&v[0], &vshift(c, &v[1])]), vshift(c, &v[2])], v[3][0]),
        printed: true,
        eval: eq_b1_xu_hy,
    },
    Equation {
        id: "b1[0,n-1,g]",
        component: B1,
        groups: |n| vec![V(n - 1), G(n - 1), G(1)],
        key: |c, v| (vec![vshift(c, &v[0]), v[1].clone()], v[2][0]),
        printed: true,
        eval: eq_b1_u_yz,
    },
    Equation {
        id: "b1[0,2,v]",
        component: B1,
        groups: |n| vec![V(n - 1), G(2), V(n - 3), V(1)],
        key: |c, v| (vec![vshift(c, &v[0]), join(&[&v[1], &vshift(c, &v[2])])], v[3][0] + c.sum.m),
        printed: true,
        eval: eq_b1_u_yyh,
    },
    Equation {
        id: "b1[0,1,g]",
        component: B1,
        groups: |n| vec![V(n - 1), G(1), V(n - 2), G(1)],
        key: |c, v| (vec![vshift(c, &v[0]), join(&[&v[1], &vshift(c, &v[2])])], v[3][0]),
        printed: true,
        eval: eq_b1_u_yhy,
    },
    Equation {
        id: "b3[n-1,n-2,g]",
        component: B3,
        groups: |n| vec![G(n - 1), G(n - 2), V(1), G(1)],
        key: |c, v| (vec![v[0].clone(), join(&[&v[1], &vshift(c, &v[2])])], v[3][0]),
        printed: false,
        eval: eq_b3_x_yhy,
    },
    Equation {
        id: "b1[1,n-2,g]",
        component: B1,
        groups: |n| vec![G(1), V(n - 2), G(n - 2), V(1), G(1)],
        key: |c, v| {
            (
                vec![join(&[&v[0], &vshift(c, &v[1])]), join(&[&v[2], &vshift(c, &v[3])])],
                v[4][0],
            )
        },
        printed: false,
        eval: eq_b1_xu_yhy,
    },
];

/// Identifiers of the two-cochain identities, in battery order.
pub fn equation_ids() -> Vec<&'static str> {
    EQUATIONS.iter().map(|e| e.id).collect()
}

/// Version of [`SIGN_TABLE`].
pub const SIGN_TABLE_VERSION: u32 = 1;

/// Overall sign `s_e` with `d(β_c) = Σ_e s_e · residual_e` on each key class.
pub const SIGN_TABLE: &[(&str, i32)] = &[
    ("b3[n-1,n-1,g]", 1),
    ("b3[n-1,2,v]", 1),
    ("b3[1,n-1,g]", 1),
    ("b2[n-1,n-1,v]", 1),
    ("b2[n-1,n-2,g]", 1),
    ("b2[n-1,1,v]", 1),
    ("b2[n-2,n-1,g]", 1),
    ("b2[n-2,2,v]", 1),
    ("b2[1,n-1,v]", 1),
    ("b2[1,n-2,g]", 1),
    ("b2[0,n-1,g]", 1),
    ("b2[n-1,0,g]", 1),
    ("b1[n-1,1,v]", 1),
    ("b1[n-1,0,g]", 1),
    ("b1[1,n-1,v]", 1),
    ("b1[1,1,v]", 1),
    ("b1[1,0,g]", 1),
    ("b1[0,n-1,g]", 1),
    ("b1[0,2,v]", 1),
    ("b1[0,1,g]", 1),
    ("b3[n-1,n-2,g]", 1),
    ("b1[1,n-2,g]", 1),
];

fn frozen_sign(id: &str) -> i32 {
    SIGN_TABLE.iter().find(|(e, _)| *e == id).map(|(_, s)| *s).expect("every identity has a sign")
}

fn tuples(g: &GeneralizedRepresentation, groups: &[Group]) -> Vec<Vec<Vec<usize>>> {
    let (m, d) = (g.algebra().dim(), g.rep().v_dim());
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for grp in groups {
        let choices = match *grp {
            G(k) => increasing_tuples(m, k),
            V(k) => increasing_tuples(d, k),
        };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// Class label `(#g in X, #g in Y, tail in g)` of a degree-2 key.
pub fn key_class(key: &CochainKey, m: usize) -> (usize, usize, bool) {
    let count = |w: &WedgeWord| w.indices().iter().filter(|&&i| i < m).count();
    (count(&key.blocks[0]), count(&key.blocks[1]), key.tail < m)
}

fn make_key(blocks: Vec<Vec<usize>>, tail: usize) -> CochainKey {
    CochainKey { blocks: blocks.into_iter().map(WedgeWord::new_unchecked).collect(), tail }
}

/// Per-identity residuals: `(component, class) → key → [(identity, residual)]`.
type Residuals = BTreeMap<(Component, (usize, usize, bool)), BTreeMap<CochainKey, Vec<(&'static str, Vec<Scalar>)>>>;

fn check_instance(a: &NLieAlgebra, g: &GeneralizedRepresentation, beta: &TwoCochainTriple) -> Result<()> {
    if a != g.algebra().as_ref() {
        return Err(Error::Input("representation is defined over a different algebra".into()));
    }
    if a.arity() < 3 {
        return Err(Error::Input(format!("the two-cochain battery needs arity ≥ 3, got {}", a.arity())));
    }
    if beta.sum != g.space() || beta.arity != a.arity() {
        return Err(Error::Input("triple does not live on this g ⊕ V".into()));
    }
    Ok(())
}

fn residuals(g: &GeneralizedRepresentation, beta: &TwoCochainTriple, reading: Reading) -> Residuals {
    let n = g.algebra().arity();
    let ctx = Ctx { g, beta, sum: g.space(), n };
    let mut out: Residuals = BTreeMap::new();
    for eq in EQUATIONS.iter().filter(|e| e.printed || reading == Reading::Completed) {
        for vars in tuples(g, &(eq.groups)(n)) {
            let (blocks, tail) = (eq.key)(&ctx, &vars);
            let key = make_key(blocks, tail);
            let class = key_class(&key, ctx.sum.m);
            let r = v_part(&ctx.sum, &sum_terms(&(eq.eval)(&ctx, &vars), ctx.sum.dim(), reading));
            out.entry((eq.component, class)).or_default().entry(key).or_default().push((eq.id, r));
        }
    }
    out
}

/// Nonzero residuals of each identity separately, before identities that
/// share a key are summed; signs are not applied.
pub fn per_equation_residuals(
    a: &NLieAlgebra,
    g: &GeneralizedRepresentation,
    beta: &TwoCochainTriple,
    reading: Reading,
) -> Result<Vec<ResidualEntry>> {
    check_instance(a, g, beta)?;
    let mut entries = Vec::new();
    for per_key in residuals(g, beta, reading).into_values() {
        for (key, list) in per_key {
            for (id, r) in list {
                if nonzero(&r) {
                    entries.push(ResidualEntry { equation: id.into(), key: key.clone(), residual: r });
                }
            }
        }
    }
    entries.sort_by(|x, y| (&x.key, &x.equation).cmp(&(&y.key, &y.equation)));
    Ok(entries)
}

/// Residuals of the two-cochain identities over all basis argument tuples
/// ([`Reading::Completed`]). Identities evaluated at the same key are summed
/// into one entry labelled `id1+id2`.
pub fn two_cocycle_residuals(
    a: &NLieAlgebra,
    g: &GeneralizedRepresentation,
    beta: &TwoCochainTriple,
) -> Result<ResidualReport> {
    two_cocycle_residuals_with(a, g, beta, Reading::Completed)
}

pub fn two_cocycle_residuals_with(
    a: &NLieAlgebra,
    g: &GeneralizedRepresentation,
    beta: &TwoCochainTriple,
    reading: Reading,
) -> Result<ResidualReport> {
    check_instance(a, g, beta)?;
    // identities sharing a key (possible at arity 3) only vanish jointly
    let mut by_key: BTreeMap<CochainKey, (Vec<&'static str>, Vec<Scalar>)> = BTreeMap::new();
    for per_key in residuals(g, beta, reading).into_values() {
        for (key, list) in per_key {
            let (ids, acc) = by_key.entry(key).or_insert_with(|| (Vec::new(), vec![Scalar::ZERO; g.rep().v_dim()]));
            for (id, r) in list {
                ids.push(id);
                let s = Scalar::from_int(frozen_sign(id) as i64);
                for (e, x) in acc.iter_mut().zip(&r) {
                    *e += &s * x;
                }
            }
        }
    }
    let entries = by_key
        .into_iter()
        .filter(|(_, (_, r))| nonzero(r))
        .map(|(key, (mut ids, residual))| {
            ids.sort_unstable();
            ids.dedup();
            ResidualEntry { equation: ids.join("+"), key, residual }
        })
        .collect();
    Ok(ResidualReport::from_entries(entries))
}

/// `d(β_c)` for each component, as V-valued maps on degree-2 keys.
fn differentials(mu: &MuElement, beta: &TwoCochainTriple) -> Result<BTreeMap<Component, BTreeMap<CochainKey, Vec<Scalar>>>> {
    let sum = mu.sum_space();
    let mut out = BTreeMap::new();
    for c in Component::ALL {
        let d = new_differential(mu, &beta.component(c).to_cochain(mu)?)?;
        let mut map: BTreeMap<CochainKey, Vec<Scalar>> = BTreeMap::new();
        for (code, coord, v) in d.cochain().iter() {
            let key = mu.space().key_of(code, 2);
            map.entry(key).or_insert_with(|| vec![Scalar::ZERO; sum.d])[coord as usize - sum.m] = v.clone();
        }
        out.insert(c, map);
    }
    Ok(out)
}

/// The two-cochain battery versus `d(β)`, component by component, using the
/// frozen [`SIGN_TABLE`] and [`Reading::Completed`].
pub fn crosscheck_two_cocycle(
    a: &NLieAlgebra,
    g: &GeneralizedRepresentation,
    beta: &TwoCochainTriple,
) -> Result<Crosscheck> {
    crosscheck_two_cocycle_with(a, g, beta, Reading::Completed)
}

pub fn crosscheck_two_cocycle_with(
    a: &NLieAlgebra,
    g: &GeneralizedRepresentation,
    beta: &TwoCochainTriple,
    reading: Reading,
) -> Result<Crosscheck> {
    check_instance(a, g, beta)?;
    let report = two_cocycle_residuals_with(a, g, beta, reading)?;
    let mu = build_mu(a, g)?;
    let res = residuals(g, beta, reading);
    let diffs = differentials(&mu, beta)?;
    let d_total = new_differential(&mu, &beta.to_cochain(&mu)?)?;
    let sum = mu.sum_space();
    let zero = vec![Scalar::ZERO; sum.d];
    let mut mismatches = Vec::new();
    let mut outside_support = Vec::new();
    for (comp, dmap) in &diffs {
        for ((c, _), per_key) in res.iter().filter(|((c, _), _)| c == comp) {
            debug_assert_eq!(c, comp);
            for (key, list) in per_key {
                let mut expected = zero.clone();
                for (id, r) in list {
                    let s = Scalar::from_int(frozen_sign(id) as i64);
                    for (e, x) in expected.iter_mut().zip(r) {
                        *e += &s * x;
                    }
                }
                let got = dmap.get(key).unwrap_or(&zero);
                if *got != expected {
                    mismatches.push(Discrepancy {
                        equations: list.iter().map(|(id, _)| id.to_string()).collect(),
                        key: key.clone(),
                        battery: expected,
                        differential: got.clone(),
                    });
                }
            }
        }
        for (key, v) in dmap {
            let class = key_class(key, sum.m);
            if !res.contains_key(&(*comp, class)) {
                outside_support.push(ResidualEntry {
                    equation: format!("outside-support:{}", comp.name()),
                    key: key.clone(),
                    residual: v.clone(),
                });
            }
        }
    }
    Ok(Crosscheck { report, d_is_zero: d_total.is_zero(), mismatches, outside_support })
}

/// What the data say about one identity's overall sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SignInference {
    Plus,
    Minus,
    /// Every sample was zero on both sides, or the sign is not separable
    /// from another identity on the same key class.
    Undetermined,
    /// No choice of signs reproduces `d`.
    Inconsistent,
}

/// Infer each identity's sign from instances: for every `(component, class)`
/// group, keep the sign vectors `s ∈ {±1}^k` with `d(β_c) = Σ s_e r_e` on all
/// keys of all instances.
pub fn infer_sign_table(
    instances: &[(Arc<NLieAlgebra>, GeneralizedRepresentation, TwoCochainTriple)],
    reading: Reading,
) -> Result<BTreeMap<&'static str, SignInference>> {
    // group → key-level samples (identities, residuals, d value)
    type Sample = (Vec<Vec<Scalar>>, Vec<Scalar>);
    let mut groups: BTreeMap<Vec<&'static str>, Vec<Sample>> = BTreeMap::new();
    for (a, g, beta) in instances {
        check_instance(a, g, beta)?;
        let mu = build_mu(a, g)?;
        let res = residuals(g, beta, reading);
        let diffs = differentials(&mu, beta)?;
        let zero = vec![Scalar::ZERO; g.space().d];
        for ((comp, _), per_key) in &res {
            for (key, list) in per_key {
                let ids: Vec<&'static str> = list.iter().map(|(id, _)| *id).collect();
                let rs: Vec<Vec<Scalar>> = list.iter().map(|(_, r)| r.clone()).collect();
                let dv = diffs[comp].get(key).unwrap_or(&zero).clone();
                groups.entry(ids).or_default().push((rs, dv));
            }
        }
    }
    let mut out = BTreeMap::new();
    for (ids, samples) in groups {
        let k = ids.len();
        let mut fits: Vec<Vec<i32>> = Vec::new();
        for mask in 0..(1u32 << k) {
            let signs: Vec<i32> = (0..k).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            let ok = samples.iter().all(|(rs, dv)| {
                let mut e = vec![Scalar::ZERO; dv.len()];
                for (r, s) in rs.iter().zip(&signs) {
                    for (x, y) in e.iter_mut().zip(r) {
                        *x += y.clone().signed(*s);
                    }
                }
                e == *dv
            });
            if ok {
                fits.push(signs);
            }
        }
        for (i, id) in ids.iter().enumerate() {
            let inf = if fits.is_empty() {
                SignInference::Inconsistent
            } else if fits.iter().all(|f| f[i] == 1) {
                SignInference::Plus
            } else if fits.iter().all(|f| f[i] == -1) {
                SignInference::Minus
            } else {
                SignInference::Undetermined
            };
            // an identity in several groups (different n) keeps the most informative verdict
            let e = out.entry(*id).or_insert(inf);
            if *e == SignInference::Undetermined {
                *e = inf;
            } else if inf != SignInference::Undetermined && inf != *e {
                *e = SignInference::Inconsistent;
            }
        }
    }
    Ok(out)
}

/// `d(γ)` for `γ ∈ C^0_>` read back as a triple.
pub fn coboundary_triple(mu: &MuElement, gamma: &RestrictedCochain) -> Result<TwoCochainTriple> {
    let d = new_differential(mu, gamma)?;
    TwoCochainTriple::from_cochain(&d, mu)
}
