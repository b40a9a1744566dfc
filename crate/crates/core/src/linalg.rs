//! Exact rank, kernel and inverse computations.

use num_integer::Integer;
use num_traits::One;

use crate::rep::Matrix;
use crate::scalar::Scalar;

/// Sparse vector: `(index, value)` sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        SparseMatrix { rows, cols: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::ZERO; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    /// `M·x` for a sparse `x` over the columns.
    pub fn apply(&self, x: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = std::collections::BTreeMap::new();
        for (j, c) in x {
            for (i, v) in &self.cols[*j] {
                *acc.entry(*i).or_insert(Scalar::ZERO) += c * v;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }
}

fn lcm_of_denominators(v: &[(usize, Scalar)]) -> Scalar {
    let mut l = num_bigint::BigInt::one();
    for (_, x) in v {
        let d = x.denom();
        if !d.is_one() {
            l = l.lcm(&d);
        }
    }
    Scalar::from(l)
}

/// Divide out the gcd of the entries of `v` (which must be integers), and the
/// same factor from `track`.
fn remove_content(v: &mut SparseVec, track: &mut SparseVec) {
    let mut g = Scalar::ZERO;
    for (_, x) in v.iter() {
        g = g.int_gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    let inv = g.recip().unwrap();
    for (_, x) in v.iter_mut().chain(track.iter_mut()) {
        *x = &*x * &inv;
    }
}

/// `a·u − b·w`, sparse.
fn combine(a: &Scalar, u: &[(usize, Scalar)], b: &Scalar, w: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(u.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < w.len() {
        let take_u = j >= w.len() || (i < u.len() && u[i].0 < w[j].0);
        let take_w = i >= u.len() || (j < w.len() && w[j].0 < u[i].0);
        if take_u {
            out.push((u[i].0, a * &u[i].1));
            i += 1;
        } else if take_w {
            out.push((w[j].0, -(b * &w[j].1)));
            j += 1;
        } else {
            let v = a * &u[i].1 - b * &w[j].1;
            if !v.is_zero() {
                out.push((u[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Result of [`rank_and_kernel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub rank: usize,
    /// Columns that became pivots; they form a basis of the column space.
    pub pivot_cols: Vec<usize>,
    /// Kernel basis over the columns (empty unless requested).
    pub kernel: Vec<SparseVec>,
}

impl Elimination {
    pub fn nullity(&self, ncols: usize) -> usize {
        ncols - self.rank
    }
}

/// Fraction-free column elimination over ℚ.
///
/// Columns are integerized and processed left to right; a column is reduced
/// against earlier pivots by `v ← u_r·v − v_r·u` on its lowest nonzero row `r`,
/// with the row content divided out after every step. A column that reduces to
/// zero yields a kernel vector.
pub fn rank_and_kernel(m: &SparseMatrix, want_kernel: bool) -> Elimination {
    // pivot_of_row[r] = index into `reduced`
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.rows];
    let mut reduced: Vec<(SparseVec, SparseVec)> = Vec::new();
    let mut pivot_cols = Vec::new();
    let mut kernel = Vec::new();
    for (j, col) in m.cols.iter().enumerate() {
        let scale = lcm_of_denominators(col);
        let mut v: SparseVec = col.iter().map(|(i, x)| (*i, x * &scale)).collect();
        let mut track: SparseVec = if want_kernel { vec![(j, scale)] } else { Vec::new() };
        remove_content(&mut v, &mut track);
        while let Some(&(r, _)) = v.first() {
            let Some(p) = pivot_of_row[r] else { break };
            let (u, ut) = &reduced[p];
            let a = u[0].1.clone();
            let b = v[0].1.clone();
            let g = a.int_gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            v = combine(&a, &v, &b, u);
            if want_kernel {
                track = combine(&a, &track, &b, ut);
            }
            remove_content(&mut v, &mut track);
        }
        match v.first() {
            Some(&(r, _)) => {
                pivot_of_row[r] = Some(reduced.len());
                reduced.push((v, track));
                pivot_cols.push(j);
            }
            None => {
                if want_kernel {
                    kernel.push(track);
                }
            }
        }
    }
    Elimination { rank: pivot_cols.len(), pivot_cols, kernel }
}

/// Rank of a dense matrix by Bareiss fraction-free elimination (rows are
/// integerized first; pivot = first nonzero entry in row-major order).
pub fn bareiss_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut a: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| {
            let s: SparseVec = r.iter().cloned().enumerate().collect();
            let l = lcm_of_denominators(&s);
            r.iter().map(|x| x * &l).collect()
        })
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = Scalar::ONE;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let v = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = &v / &prev;
            }
            a[i][col] = Scalar::ZERO;
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Inverse by Gauss–Jordan elimination; `None` if singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.dim();
    let mut a = m.rows();
    let mut inv = Matrix::identity(n).rows();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].recip().unwrap();
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..n {
                let (x, y) = (&f * &a[col][j], &f * &inv[col][j]);
                a[i][j] -= x;
                inv[i][j] -= y;
            }
        }
    }
    Matrix::from_rows(inv).ok()
}
