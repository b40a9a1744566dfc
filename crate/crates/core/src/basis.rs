//! Wedge-word bases, shuffle signs and cochain-domain enumeration.
//!
//! Every multilinear object in the crate is tabulated on canonical basis
//! labels: a [`WedgeWord`] is a strictly increasing tuple of basis indices
//! standing for `e_{i_1} ∧ … ∧ e_{i_k}`, and a [`CochainKey`] is a tuple of
//! `p` such words followed by a single tail index. Orders are lexicographic
//! throughout.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sign of the permutation that sorts `seq`, or 0 if `seq` has a repeated entry.
pub fn permutation_sign<T: Ord>(seq: &[T]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match seq[i].cmp(&seq[j]) {
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A strictly increasing tuple of basis indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct WedgeWord(Vec<usize>);

impl WedgeWord {
    pub fn new(indices: Vec<usize>, dim: usize) -> Result<Self> {
        if let Some(&i) = indices.iter().find(|&&i| i >= dim) {
            return Err(Error::Input(format!("index {i} out of range for dimension {dim}")));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Input(format!("wedge word {indices:?} is not strictly increasing")));
        }
        Ok(WedgeWord(indices))
    }

    pub(crate) fn new_unchecked(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        WedgeWord(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WedgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A wedge word together with the sign picked up while sorting it.
///
/// `word` is `None` exactly when the originating tuple repeated an index, in
/// which case `sign` is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedWedge {
    pub word: Option<WedgeWord>,
    pub sign: i32,
}

/// Sort `indices`, tracking the parity of the sorting permutation.
pub fn normalize_wedge(indices: &[usize], dim: usize) -> Result<SignedWedge> {
    if let Some(&i) = indices.iter().find(|&&i| i >= dim) {
        return Err(Error::Input(format!("index {i} out of range for dimension {dim}")));
    }
    let sign = permutation_sign(indices);
    if sign == 0 {
        return Ok(SignedWedge { word: None, sign: 0 });
    }
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    Ok(SignedWedge { word: Some(WedgeWord(sorted)), sign })
}

/// Arguments `(χ_1, …, χ_p, z)` of a degree-`p` cochain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CochainKey {
    pub blocks: Vec<WedgeWord>,
    pub tail: usize,
}

impl CochainKey {
    pub fn degree(&self) -> usize {
        self.blocks.len()
    }
}

impl fmt::Display for CochainKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for b in &self.blocks {
            write!(f, "{b} ")?;
        }
        write!(f, "| {}]", self.tail)
    }
}

/// A split of `N = {1, …, size}` into `J` and its complement `I`, as used
/// when inserting one cochain into another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleSplit {
    /// Increasing, 1-based.
    pub j: Vec<usize>,
    /// Complement of `j`, increasing.
    pub i: Vec<usize>,
    /// Number of elements of `I` smaller than the last element of `J`.
    pub k: usize,
    /// Parity of the permutation `(j_1, …, j_last, i_1, …, i_p)` of `N`.
    pub sign: i32,
}

pub fn shuffle_sign(j: &[usize], size: usize) -> Result<ShuffleSplit> {
    let Some(&last) = j.last() else {
        return Err(Error::Input("empty J in shuffle".into()));
    };
    if j.windows(2).any(|w| w[0] >= w[1]) || j[0] == 0 || last > size {
        return Err(Error::Input(format!("J = {j:?} is not an increasing subset of 1..={size}")));
    }
    let i: Vec<usize> = (1..=size).filter(|x| j.binary_search(x).is_err()).collect();
    let k = i.iter().filter(|&&x| x < last).count();
    let perm: Vec<usize> = j.iter().chain(i.iter()).copied().collect();
    let sign = permutation_sign(&perm);
    Ok(ShuffleSplit { j: j.to_vec(), i, k, sign })
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All strictly increasing `k`-tuples from `0..dim`, lexicographically.
pub fn increasing_tuples(dim: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(dim, k));
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, dim: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..dim {
            if dim - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, dim, k, cur, out);
            cur.pop();
        }
    }
    rec(0, dim, k, &mut cur, &mut out);
    out
}

/// Basis of the domain `(Λ^{n-1}W)^{⊗p} ⊗ W`, lexicographic.
pub fn enumerate_cochain_keys(w_dim: usize, n: usize, p: usize) -> Result<Vec<CochainKey>> {
    if w_dim == 0 || n < 2 {
        return Err(Error::Input(format!("need dim ≥ 1 and arity ≥ 2, got dim {w_dim}, arity {n}")));
    }
    let words: Vec<WedgeWord> = increasing_tuples(w_dim, n - 1)
        .into_iter()
        .map(WedgeWord)
        .collect();
    if p > 0 && words.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; p];
    loop {
        for tail in 0..w_dim {
            out.push(CochainKey {
                blocks: idx.iter().map(|&b| words[b].clone()).collect(),
                tail,
            });
        }
        // odometer, last block fastest
        let mut pos = p;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < words.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Replace slot `s` (1-based) of `word` by the vector `v` (dense over the
/// ambient space) and expand back over sorted words.
pub fn replace_slot(word: &WedgeWord, s: usize, v: &[Scalar]) -> Result<Vec<(WedgeWord, Scalar)>> {
    if s == 0 || s > word.len() {
        return Err(Error::Input(format!("slot {s} out of range for word of length {}", word.len())));
    }
    let mut out: Vec<(WedgeWord, Scalar)> = Vec::new();
    for (r, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut t = word.0.clone();
        t[s - 1] = r;
        let nw = normalize_wedge(&t, v.len())?;
        if let Some(w) = nw.word {
            let coef = c.clone().signed(nw.sign);
            match out.iter_mut().find(|(x, _)| *x == w) {
                Some((_, acc)) => *acc += coef,
                None => out.push((w, coef)),
            }
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// A word `x` and slot `s` such that writing `r` into slot `s` of `x` gives
/// `sign · target`; `b` is the entry of `x` that was overwritten.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Preimage {
    pub b: u32,
    pub word: u32,
    pub sign: i8,
}

/// Precomputed tables for the `(n-1)`-word basis of one ambient space.
#[derive(Debug)]
pub struct BlockBasis {
    dim: usize,
    k: usize,
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, u32>,
    /// `preimages[word][pos]` for `r = words[word][pos]`.
    preimages: Vec<Vec<Vec<Preimage>>>,
}

impl BlockBasis {
    pub fn new(dim: usize, k: usize) -> Self {
        let words = increasing_tuples(dim, k);
        let index: HashMap<Vec<usize>, u32> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        let mut preimages = Vec::with_capacity(words.len());
        for w in &words {
            let mut per_pos = Vec::with_capacity(k);
            for pos in 0..k {
                let r = w[pos];
                let mut list = Vec::new();
                for b in 0..dim {
                    if b != r && w.contains(&b) {
                        continue;
                    }
                    let mut x: Vec<usize> = w.iter().copied().filter(|&y| y != r).collect();
                    x.push(b);
                    x.sort_unstable();
                    let s = x.iter().position(|&y| y == b).unwrap();
                    let mut t = x.clone();
                    t[s] = r;
                    let sign = permutation_sign(&t);
                    debug_assert!(sign != 0);
                    list.push(Preimage { b: b as u32, word: index[&x], sign: sign as i8 });
                }
                per_pos.push(list);
            }
            preimages.push(per_pos);
        }
        BlockBasis { dim, k, words, index, preimages }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn word_len(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, idx: u32) -> &[usize] {
        &self.words[idx as usize]
    }

    pub fn index_of(&self, word: &[usize]) -> Option<u32> {
        self.index.get(word).copied()
    }

    pub(crate) fn preimages(&self, word: u32, pos: usize) -> &[Preimage] {
        &self.preimages[word as usize][pos]
    }
}

/// The domain `(Λ^{n-1}W)^{⊗p} ⊗ W` of cochains on a space `W`, with a dense
/// integer encoding of keys (`blocks` in base `C(dim, n-1)`, tail in base
/// `dim`) whose numeric order is the lexicographic key order.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    arity: usize,
    blocks: Arc<BlockBasis>,
}

impl CochainSpace {
    pub fn new(dim: usize, arity: usize) -> Result<Self> {
        if dim == 0 || arity < 2 {
            return Err(Error::Input(format!("need dim ≥ 1 and arity ≥ 2, got dim {dim}, arity {arity}")));
        }
        Ok(CochainSpace { arity, blocks: Arc::new(BlockBasis::new(dim, arity - 1)) })
    }

    pub fn dim(&self) -> usize {
        self.blocks.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn blocks(&self) -> &BlockBasis {
        &self.blocks
    }

    pub fn same_as(&self, other: &CochainSpace) -> bool {
        Arc::ptr_eq(&self.blocks, &other.blocks) || (self.dim() == other.dim() && self.arity == other.arity)
    }

    /// Number of keys of degree `p`.
    pub fn key_count(&self, p: usize) -> u64 {
        (self.blocks.len() as u64).pow(p as u32) * self.dim() as u64
    }

    pub fn encode(&self, blocks: &[u32], tail: usize) -> u64 {
        let nb = self.blocks.len() as u64;
        let mut k = 0u64;
        for &b in blocks {
            k = k * nb + b as u64;
        }
        k * self.dim() as u64 + tail as u64
    }

    /// Decode a degree-`blocks.len()` key into `blocks`; returns the tail.
    pub fn decode_into(&self, mut key: u64, blocks: &mut [u32]) -> usize {
        let w = self.dim() as u64;
        let tail = (key % w) as usize;
        key /= w;
        let nb = self.blocks.len() as u64;
        for slot in blocks.iter_mut().rev() {
            *slot = (key % nb) as u32;
            key /= nb;
        }
        tail
    }

    pub fn decode(&self, key: u64, degree: usize) -> (Vec<u32>, usize) {
        let mut b = vec![0u32; degree];
        let t = self.decode_into(key, &mut b);
        (b, t)
    }

    pub fn key_of(&self, code: u64, degree: usize) -> CochainKey {
        let (b, tail) = self.decode(code, degree);
        CochainKey {
            blocks: b
                .iter()
                .map(|&i| WedgeWord::new_unchecked(self.blocks.word(i).to_vec()))
                .collect(),
            tail,
        }
    }

    pub fn code_of(&self, key: &CochainKey) -> Result<u64> {
        if key.tail >= self.dim() {
            return Err(Error::Input(format!("tail {} out of range", key.tail)));
        }
        let mut idx = Vec::with_capacity(key.blocks.len());
        for w in &key.blocks {
            idx.push(
                self.blocks
                    .index_of(w.indices())
                    .ok_or_else(|| Error::Input(format!("{w} is not a basis word of this space")))?,
            );
        }
        Ok(self.encode(&idx, key.tail))
    }
}
