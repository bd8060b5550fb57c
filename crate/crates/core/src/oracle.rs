//! Brute-force multigraded Betti numbers via strand simplicial homology.
//!
//! For a monomial ideal `I` and a multidegree `α`, the strand complex is
//! `K^α(I) = {τ ⊆ supp α square-free : x^{α−τ} ∈ I}` and
//! `β_{q,α}(I) = dim H̃_{q−1}(K^α(I))`. Every nonzero `β_{q,α}` has
//! `α ≤ lcm(G(I))`, so scanning that box is complete.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{BaseField, SparseMatrix};
use crate::monomial::Monomial;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub field: BaseField,
    /// Largest number of multidegrees `Π(lcm_i + 1)` the oracle may scan.
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { field: BaseField::Rationals, budget: DEFAULT_BUDGET }
    }
}

/// A simplicial complex on variable indices. `faces` is downward closed,
/// sorted by size then lexicographically; a void complex has no faces at
/// all, while `{∅}` has exactly the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplexDesc {
    pub vertices: Vec<usize>,
    pub faces: Vec<Vec<usize>>,
}

impl SimplicialComplexDesc {
    fn from_masks(vertices: Vec<usize>, masks: &[u32]) -> Self {
        let mut faces: Vec<Vec<usize>> = masks
            .iter()
            .map(|&m| (0..vertices.len()).filter(|&b| m >> b & 1 == 1).map(|b| vertices[b]).collect())
            .collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SimplicialComplexDesc { vertices, faces }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|f| {
            (0..f.len()).all(|drop| {
                let mut g = f.clone();
                g.remove(drop);
                self.faces.binary_search_by(|h| h.len().cmp(&g.len()).then_with(|| h.cmp(&g))).is_ok()
            })
        })
    }

    /// `dim H̃_k` for `k = −1, 0, …`; entry `k + 1` of the result. Empty for
    /// the void complex.
    pub fn reduced_homology(&self, field: BaseField) -> Vec<usize> {
        let index: BTreeMap<usize, usize> = self.vertices.iter().enumerate().map(|(b, &v)| (v, b)).collect();
        let masks: Vec<u32> = self
            .faces
            .iter()
            .map(|f| f.iter().fold(0u32, |m, v| m | 1 << index[v]))
            .collect();
        reduced_homology_masks(self.vertices.len(), &masks, field)
    }
}

/// Reduced homology of the complex whose faces are `masks` over `nverts`
/// local vertices.
fn reduced_homology_masks(nverts: usize, masks: &[u32], field: BaseField) -> Vec<usize> {
    if masks.is_empty() {
        return Vec::new();
    }
    // by_dim[k + 1] lists faces of dimension k; slot[mask] is the position
    // of the face within its dimension.
    let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); nverts + 1];
    let mut slot = vec![u32::MAX; 1 << nverts];
    for &m in masks {
        let k = m.count_ones() as usize;
        slot[m as usize] = by_dim[k].len() as u32;
        by_dim[k].push(m);
    }
    while by_dim.last().is_some_and(Vec::is_empty) {
        by_dim.pop();
    }
    // rank[k] = rank of ∂ from faces of size k to faces of size k − 1.
    let mut rank = vec![0usize; by_dim.len() + 1];
    for k in 1..by_dim.len() {
        let mut mat = SparseMatrix::new(by_dim[k - 1].len());
        for &f in &by_dim[k] {
            let mut sign = 1i64;
            let mut row = Vec::with_capacity(k);
            for b in 0..nverts {
                if f >> b & 1 == 1 {
                    row.push((slot[(f & !(1 << b)) as usize] as usize, sign));
                    sign = -sign;
                }
            }
            mat.push_row(row);
        }
        rank[k] = field.rank(&mat);
    }
    (0..by_dim.len()).map(|k| by_dim[k].len() - rank[k] - rank[k + 1]).collect()
}

/// `K^α(I)` by direct membership tests.
pub fn strand_complex(ideal: &MonomialIdeal, alpha: &[u32]) -> Result<SimplicialComplexDesc> {
    if alpha.len() != ideal.nvars() {
        return Err(Error::AmbientMismatch { expected: ideal.nvars(), found: alpha.len() });
    }
    let vertices: Vec<usize> = (0..alpha.len()).filter(|&i| alpha[i] > 0).collect();
    if vertices.len() > 24 {
        return Err(Error::InvalidShape("strand support above 24 variables".into()));
    }
    let mut masks = Vec::new();
    for m in 0u32..1 << vertices.len() {
        let mut exps = alpha.to_vec();
        for (b, &v) in vertices.iter().enumerate() {
            exps[v] -= m >> b & 1;
        }
        if ideal.contains(&Monomial::new(exps)) {
            masks.push(m);
        }
    }
    Ok(SimplicialComplexDesc::from_masks(vertices, &masks))
}

/// The box `0 ≤ α ≤ lcm(G(I))` in row-major order (first variable slowest),
/// with ideal membership tabulated for every point.
#[derive(Debug, Clone)]
pub struct StrandBox {
    dims: Vec<u32>,
    strides: Vec<usize>,
    member: Vec<bool>,
}

/// Number of multidegrees `Π(lcm_i + 1)` an oracle run would scan.
pub fn strand_count(ideal: &MonomialIdeal) -> u128 {
    ideal.lcm_exponents().iter().map(|&e| e as u128 + 1).product()
}

impl StrandBox {
    pub fn new(ideal: &MonomialIdeal, budget: u64) -> Result<Self> {
        let strands = strand_count(ideal);
        if strands > budget as u128 {
            return Err(Error::BudgetExceeded { strands, budget });
        }
        let dims = ideal.lcm_exponents();
        let n = dims.len();
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (dims[i + 1] as usize + 1);
        }
        let len = strands as usize;
        let mut member = vec![false; len];
        for g in ideal.gens() {
            let at: usize = g.exponents().iter().zip(&strides).map(|(&e, &s)| e as usize * s).sum();
            member[at] = true;
        }
        // Every β − e_i precedes β, so one pass closes membership upward.
        let mut alpha = vec![0u32; n];
        for at in 0..len {
            if !member[at] {
                member[at] = (0..n).any(|i| alpha[i] > 0 && member[at - strides[i]]);
            }
            Self::advance(&dims, &mut alpha);
        }
        Ok(StrandBox { dims, strides, member })
    }

    fn advance(dims: &[u32], alpha: &mut [u32]) {
        for i in (0..dims.len()).rev() {
            if alpha[i] < dims[i] {
                alpha[i] += 1;
                return;
            }
            alpha[i] = 0;
        }
    }

    pub fn len(&self) -> usize {
        self.member.len()
    }

    pub fn is_empty(&self) -> bool {
        self.member.is_empty()
    }

    pub fn alpha(&self, mut at: usize) -> Vec<u32> {
        self.strides
            .iter()
            .map(|&s| {
                let a = at / s;
                at %= s;
                a as u32
            })
            .collect()
    }

    pub fn index(&self, alpha: &[u32]) -> Option<usize> {
        if alpha.len() != self.dims.len() || alpha.iter().zip(&self.dims).any(|(a, d)| a > d) {
            return None;
        }
        Some(alpha.iter().zip(&self.strides).map(|(&a, &s)| a as usize * s).sum())
    }

    /// Whether `x^α ∈ I`. Otherwise `K^α` is void and contributes nothing.
    pub fn contains(&self, at: usize) -> bool {
        self.member[at]
    }

    fn masks(&self, at: usize) -> (Vec<usize>, Vec<u32>) {
        let alpha = self.alpha(at);
        let vertices: Vec<usize> = (0..alpha.len()).filter(|&i| alpha[i] > 0).collect();
        let mut masks = Vec::new();
        for m in 0u32..1 << vertices.len() {
            let below: usize = vertices
                .iter()
                .enumerate()
                .filter(|(b, _)| m >> b & 1 == 1)
                .map(|(_, &v)| self.strides[v])
                .sum();
            if self.member[at - below] {
                masks.push(m);
            }
        }
        (vertices, masks)
    }

    pub fn complex(&self, at: usize) -> SimplicialComplexDesc {
        let (vertices, masks) = self.masks(at);
        SimplicialComplexDesc::from_masks(vertices, &masks)
    }

    /// Nonzero `(q, β_{q,α})` at the box point `at`.
    pub fn betti_at(&self, at: usize, field: BaseField) -> Vec<(usize, usize)> {
        if !self.member[at] {
            return Vec::new();
        }
        let (vertices, masks) = self.masks(at);
        if is_cone(vertices.len(), &masks) {
            return Vec::new();
        }
        reduced_homology_masks(vertices.len(), &masks, field)
            .into_iter()
            .enumerate()
            .filter(|&(_, h)| h > 0)
            .collect()
    }
}

/// A vertex `v` such that `τ ∪ {v}` is a face whenever `τ` is. Cones are
/// acyclic.
fn is_cone(nverts: usize, masks: &[u32]) -> bool {
    if masks.len() < 2 {
        return false;
    }
    let mut present = vec![false; 1 << nverts];
    masks.iter().for_each(|&m| present[m as usize] = true);
    (0..nverts).any(|b| masks.iter().all(|&m| present[(m | 1 << b) as usize]))
}

/// Multigraded Betti numbers, sorted by `(q, α)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultigradedBetti {
    pub entries: Vec<MultigradedEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultigradedEntry {
    pub q: usize,
    pub alpha: Vec<u32>,
    pub dim: usize,
}

impl MultigradedBetti {
    /// Graded table, internal degree `|α|`.
    pub fn table(&self) -> BettiTable {
        let mut table = BettiTable::new();
        for e in &self.entries {
            table.add(e.q, e.alpha.iter().sum(), (e.dim as u64).into());
        }
        table
    }
}

/// Deterministic merge of per-strand results given as `(box index, [(q, dim)])`
/// in any order.
pub fn merge(sbox: &StrandBox, parts: impl IntoIterator<Item = (usize, Vec<(usize, usize)>)>) -> MultigradedBetti {
    let mut entries: Vec<MultigradedEntry> = parts
        .into_iter()
        .flat_map(|(at, dims)| {
            let alpha = sbox.alpha(at);
            dims.into_iter().map(move |(q, dim)| MultigradedEntry { q, alpha: alpha.clone(), dim })
        })
        .collect();
    entries.sort();
    MultigradedBetti { entries }
}

/// Sequential oracle run over the whole box.
pub fn betti_oracle(ideal: &MonomialIdeal, config: &OracleConfig) -> Result<MultigradedBetti> {
    let sbox = StrandBox::new(ideal, config.budget)?;
    let parts = (0..sbox.len()).map(|at| (at, sbox.betti_at(at, config.field)));
    Ok(merge(&sbox, parts))
}
