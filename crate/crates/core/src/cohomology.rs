//! Differentials as exact matrices and the dimensions of `Z`, `B` and `H`.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::check_fundamental_identity;
use crate::basis::{binomial, CochainSpace};
use crate::cochain::{delta_rho, embed, new_differential, restrict_to_g, Cochain, RestrictedCochain};
use crate::error::{Error, Result};
use crate::linalg::{rank_and_kernel, Elimination, SparseMatrix, SparseVec};
use crate::random::restricted_basis;
use crate::rep::{build_mu, check_representation, GeneralizedRepresentation, MuElement, Representation};

/// Highest block degree a report may request.
pub const MAX_DEGREE_CAP: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    /// `d = [μ, ·]` on `C^p_>(g ⊕ V, V)`.
    New,
    /// `δ_ρ` on `C^p(g, V)`.
    Classical,
}

/// A differential together with the basis of its cochain spaces.
pub enum Differential<'a> {
    New(&'a MuElement),
    Classical(&'a Representation, CochainSpace),
}

impl<'a> Differential<'a> {
    pub fn new_complex(mu: &'a MuElement) -> Self {
        Differential::New(mu)
    }

    pub fn classical(r: &'a Representation) -> Result<Self> {
        let a = r.algebra();
        Ok(Differential::Classical(r, CochainSpace::new(a.dim(), a.arity())?))
    }

    fn codim(&self) -> usize {
        match self {
            Differential::New(mu) => mu.sum_space().dim(),
            Differential::Classical(r, _) => r.v_dim(),
        }
    }

    fn space(&self) -> &CochainSpace {
        match self {
            Differential::New(mu) => mu.space(),
            Differential::Classical(_, s) => s,
        }
    }

    /// Basis of the degree-`p` cochains: `(key code, coordinate)`, lexicographic.
    pub fn basis(&self, p: usize) -> Vec<(u64, u32)> {
        match self {
            Differential::New(mu) => restricted_basis(mu.space(), p, mu.sum_space()),
            Differential::Classical(r, s) => (0..s.key_count(p))
                .flat_map(|k| (0..r.v_dim() as u32).map(move |c| (k, c)))
                .collect(),
        }
    }

    pub fn apply(&self, alpha: &Cochain) -> Result<Cochain> {
        match self {
            Differential::New(mu) => {
                let r = RestrictedCochain::new(alpha.clone(), mu.sum_space())?;
                Ok(new_differential(mu, &r)?.into_cochain())
            }
            Differential::Classical(r, _) => delta_rho(r, alpha),
        }
    }
}

/// Column `j` holds the coefficients of the differential applied to source
/// basis element `j`, in target basis order.
#[derive(Clone, Debug)]
pub struct DifferentialMatrix {
    pub degree: usize,
    pub source: Vec<(u64, u32)>,
    pub target: Vec<(u64, u32)>,
    pub matrix: SparseMatrix,
}

impl DifferentialMatrix {
    pub fn shape(&self) -> (usize, usize) {
        (self.target.len(), self.source.len())
    }
}

fn to_column(c: &Cochain, row_of: &HashMap<(u64, u32), usize>) -> Result<SparseVec> {
    let mut col = Vec::with_capacity(c.len());
    for (k, v) in c.terms() {
        let row = row_of
            .get(k)
            .ok_or_else(|| Error::Consistency(format!("differential produced a term outside the target basis: {k:?}")))?;
        col.push((*row, v.clone()));
    }
    col.sort_by_key(|(r, _)| *r);
    Ok(col)
}

pub fn assemble_matrix(diff: &Differential, p: usize) -> Result<DifferentialMatrix> {
    let source = diff.basis(p);
    let target = diff.basis(p + 1);
    let row_of: HashMap<(u64, u32), usize> = target.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let mut matrix = SparseMatrix::new(target.len());
    for &(code, coord) in &source {
        let e = Cochain::unit(diff.space().clone(), p, diff.codim(), code, coord);
        matrix.cols.push(to_column(&diff.apply(&e)?, &row_of)?);
    }
    Ok(DifferentialMatrix { degree: p, source, target, matrix })
}

/// Exact rank, pivot columns and (on request) a kernel basis.
pub fn rank_and_kernel_of(m: &DifferentialMatrix, want_kernel: bool) -> Elimination {
    rank_and_kernel(&m.matrix, want_kernel)
}

/// Kernel vectors of `m` as cochains.
pub fn kernel_cochains(diff: &Differential, m: &DifferentialMatrix, elim: &Elimination) -> Vec<Cochain> {
    elim.kernel
        .iter()
        .map(|k| {
            Cochain::from_terms(
                diff.space().clone(),
                m.degree,
                diff.codim(),
                k.iter().map(|(j, v)| (m.source[*j], v.clone())),
            )
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRecord {
    /// Number of `(n-1)`-blocks.
    pub degree: usize,
    /// The same degree counted as cochain order (`degree + 1`).
    pub cochain_order: usize,
    pub dim_c: usize,
    /// Rank of the differential out of this degree.
    pub rank_d: usize,
    pub dim_z: usize,
    /// Rank of the differential into this degree.
    pub dim_b: usize,
    pub dim_h: usize,
    /// Source columns of the outgoing differential that carry pivots.
    #[serde(skip)]
    pub pivot_cols: Vec<usize>,
    /// Every pivot column of the incoming differential is killed by the outgoing one.
    pub boundaries_in_kernel: bool,
    /// New complex only: restriction of `d` to pure-g keys equals `δ_ρ`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restriction_agrees: Option<bool>,
    /// New complex only: rank of the induced map to classical cohomology.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forgetful_rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub complex: ComplexKind,
    pub arity: usize,
    pub dim_g: usize,
    pub dim_v: usize,
    pub max_degree: usize,
    pub degrees: Vec<DegreeRecord>,
}

impl CohomologyReport {
    /// All internal consistency checks hold.
    pub fn consistent(&self) -> bool {
        self.degrees.iter().all(|d| {
            d.boundaries_in_kernel
                && d.restriction_agrees != Some(false)
                && d.dim_z == d.dim_c - d.rank_d
                && d.dim_b <= d.dim_z
                && d.dim_h + d.dim_b == d.dim_z
        })
    }
}

/// Columns of `prev` at its pivots, pushed through `next`, must vanish.
fn boundaries_in_kernel(next: &DifferentialMatrix, prev: &DifferentialMatrix, prev_pivots: &[usize]) -> Result<bool> {
    if next.source != prev.target {
        return Err(Error::Consistency("consecutive differentials disagree on the middle basis".into()));
    }
    Ok(prev_pivots.iter().all(|&j| next.matrix.apply(&prev.matrix.cols[j]).is_empty()))
}

struct Level {
    matrix: DifferentialMatrix,
    elim: Elimination,
}

fn levels(diff: &Differential, max_degree: usize, kernels: bool) -> Result<Vec<Level>> {
    let mut out = Vec::new();
    for p in 0..=max_degree {
        let matrix = assemble_matrix(diff, p)?;
        let elim = rank_and_kernel_of(&matrix, kernels);
        out.push(Level { matrix, elim });
    }
    Ok(out)
}

fn records(levels: &[Level]) -> Result<Vec<DegreeRecord>> {
    let mut out = Vec::new();
    for (p, lv) in levels.iter().enumerate() {
        let dim_c = lv.matrix.source.len();
        let rank_d = lv.elim.rank;
        let dim_z = dim_c - rank_d;
        let (dim_b, in_kernel) = if p == 0 {
            (0, true)
        } else {
            let prev = &levels[p - 1];
            (prev.elim.rank, boundaries_in_kernel(&lv.matrix, &prev.matrix, &prev.elim.pivot_cols)?)
        };
        out.push(DegreeRecord {
            degree: p,
            cochain_order: p + 1,
            dim_c,
            rank_d,
            dim_z,
            dim_b,
            dim_h: dim_z.saturating_sub(dim_b),
            pivot_cols: lv.elim.pivot_cols.clone(),
            boundaries_in_kernel: in_kernel,
            restriction_agrees: None,
            forgetful_rank: None,
        });
    }
    Ok(out)
}

/// `restrict(d(embed α)) = δ_ρ(α)` for every basis `α` of `C^p(g, V)`.
pub fn restriction_agrees(mu: &MuElement, p: usize) -> Result<bool> {
    let r = mu.genrep().rep();
    let classical = Differential::classical(r)?;
    for (code, coord) in classical.basis(p) {
        let alpha = Cochain::unit(classical.space().clone(), p, r.v_dim(), code, coord);
        let lhs = restrict_to_g(&new_differential(mu, &embed(&alpha, mu)?)?);
        if lhs != delta_rho(r, &alpha)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn validate(g: &GeneralizedRepresentation) -> Result<()> {
    let a = g.algebra();
    if let Some(v) = check_fundamental_identity(a).first() {
        return Err(Error::Invalid(format!(
            "algebra violates the fundamental identity at x = {:?}, y = {:?}",
            v.x, v.y
        )));
    }
    if let Some(v) = check_representation(g.rep()).first() {
        return Err(Error::Invalid(format!(
            "representation violates the {} identity at {:?}",
            v.identity.id(),
            v.args
        )));
    }
    Ok(())
}

/// Dimensions of `Z_p`, `B_p`, `H_p` for `p = 0..=max_degree`.
pub fn cohomology_report(g: &GeneralizedRepresentation, kind: ComplexKind, max_degree: usize) -> Result<CohomologyReport> {
    if max_degree > MAX_DEGREE_CAP {
        return Err(Error::Input(format!("max degree {max_degree} exceeds the cap {MAX_DEGREE_CAP}")));
    }
    validate(g)?;
    let a = g.algebra();
    let mut report = CohomologyReport {
        complex: kind,
        arity: a.arity(),
        dim_g: a.dim(),
        dim_v: g.rep().v_dim(),
        max_degree,
        degrees: Vec::new(),
    };
    match kind {
        ComplexKind::Classical => {
            let diff = Differential::classical(g.rep())?;
            report.degrees = records(&levels(&diff, max_degree, false)?)?;
        }
        ComplexKind::New => {
            let mu = build_mu(a, g)?;
            if !mu.is_canonical() {
                return Err(Error::Invalid("[μ, μ] ≠ 0: not a generalized representation".into()));
            }
            let diff = Differential::new_complex(&mu);
            let new_levels = levels(&diff, max_degree, true)?;
            let classical = Differential::classical(g.rep())?;
            let cl_levels = levels(&classical, max_degree, false)?;
            report.degrees = records(&new_levels)?;
            for (p, rec) in report.degrees.iter_mut().enumerate() {
                rec.restriction_agrees = Some(restriction_agrees(&mu, p)?);
                rec.forgetful_rank = Some(forgetful_rank(&diff, &new_levels[p], &classical, &cl_levels, p)?);
            }
        }
    }
    Ok(report)
}

/// Rank of `H_p(new) → H^p(classical)` induced by restriction to pure-g keys:
/// `rank[restrict(Z_p) | B^p] − rank B^p`.
fn forgetful_rank(
    diff: &Differential,
    level: &Level,
    classical: &Differential,
    cl_levels: &[Level],
    p: usize,
) -> Result<usize> {
    let Differential::New(mu) = diff else {
        return Err(Error::Input("forgetful map starts at the new complex".into()));
    };
    let cl_basis = classical.basis(p);
    let row_of: HashMap<(u64, u32), usize> = cl_basis.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let mut m = SparseMatrix::new(cl_basis.len());
    if p > 0 {
        let prev = &cl_levels[p - 1];
        for &j in &prev.elim.pivot_cols {
            m.cols.push(prev.matrix.matrix.cols[j].clone());
        }
    }
    let b_rank = m.cols.len();
    for z in kernel_cochains(diff, &level.matrix, &level.elim) {
        let r = RestrictedCochain::new(z, mu.sum_space())?;
        m.cols.push(to_column(&restrict_to_g(&r), &row_of)?);
    }
    Ok(rank_and_kernel(&m, false).rank - b_rank)
}

/// Number of keys of degree `p` on `W = g ⊕ V` with at least one g argument.
pub fn restricted_key_count(m: usize, d: usize, arity: usize, p: usize) -> u64 {
    let count = |dim: usize| (binomial(dim, arity - 1) as u64).pow(p as u32) * dim as u64;
    count(m + d) - count(d)
}
