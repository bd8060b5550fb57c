//! The complex `L_•` with its boundary maps and augmentation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::label::{enumerate_basis, BasisLabel};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, VariableSet};
use crate::transversal::BlockShape;

/// Sign rule for the two kinds of boundary terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum SignConvention {
    /// `Δ_v`: `(−1)^{Σ_{v'<v}(r_{v'}−1) + h + 1}`; `Λ` at the marker in
    /// position `p` of `δ`: `(−1)^{Σ_v(r_v−1) + p}` (0-based `p`). Each row
    /// contributes Koszul degree `r_v − 1` and markers are contracted like
    /// an interior product. Gives `d² = 0` on every shape.
    #[default]
    Graded,
    /// `Δ_v`: `(−1)^{r_1+⋯+r_{v−1}+h+1}`; `Λ`: `(−1)^{ℓ+1}` with `ℓ` the
    /// number of singleton-row markers up to and including this one. Kept
    /// for comparison; `d² ≠ 0` already on blocks `(2,1,1)`, `t = 2`.
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrigin {
    /// Removes one column from a row with at least two.
    Delta,
    /// Removes a marked singleton row together with its marker.
    Lambda,
}

/// One summand `coef · y_var · (ξ' ⊗ δ')` of the boundary on `C_•`, before
/// reduction to the representatives of `L_•`. `delta` lists all marker
/// positions and need not end at the last row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTerm {
    pub coef: i64,
    pub var: usize,
    pub rows: Vec<u32>,
    pub columns: Vec<Vec<u32>>,
    pub delta: Vec<u32>,
    pub origin: TermOrigin,
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Boundary of one basis element in `C_•`.
pub fn raw_boundary(shape: &BlockShape, label: &BasisLabel, convention: SignConvention) -> Vec<RawTerm> {
    let (rows, columns) = (label.rows(), label.columns());
    let delta = label.delta();
    let mut out = Vec::new();

    let (mut koszul_before, mut width_before) = (0, 0);
    for (v, cols) in columns.iter().enumerate() {
        if cols.len() >= 2 {
            for (h, &c) in cols.iter().enumerate() {
                // h is 0-based here, so h + 1 + 1 ≡ h.
                let coef = match convention {
                    SignConvention::Graded => sign(koszul_before + h),
                    SignConvention::Literal => sign(width_before + h),
                };
                let mut cols2 = columns.to_vec();
                cols2[v].remove(h);
                out.push(RawTerm {
                    coef,
                    var: shape.var_index(rows[v] as usize, c as usize),
                    rows: rows.to_vec(),
                    columns: cols2,
                    delta: delta.clone(),
                    origin: TermOrigin::Delta,
                });
            }
        }
        koszul_before += cols.len() - 1;
        width_before += cols.len();
    }

    if delta.len() >= 2 {
        let mut singles = 0;
        for (p, &k) in delta.iter().enumerate() {
            let k = k as usize;
            if columns[k].len() != 1 {
                continue;
            }
            singles += 1;
            let coef = match convention {
                SignConvention::Graded => sign(koszul_before + p),
                SignConvention::Literal => sign(singles + 1),
            };
            let mut rows2 = rows.to_vec();
            rows2.remove(k);
            let mut cols2 = columns.to_vec();
            cols2.remove(k);
            let delta2 = delta
                .iter()
                .filter(|&&x| x as usize != k)
                .map(|&x| if x as usize > k { x - 1 } else { x })
                .collect();
            out.push(RawTerm {
                coef,
                var: shape.var_index(rows[k] as usize, columns[k][0] as usize),
                rows: rows2,
                columns: cols2,
                delta: delta2,
                origin: TermOrigin::Lambda,
            });
        }
    }
    out
}

/// Rewrites a raw term as a signed sum of representatives, whose marker set
/// contains the last row. With `N = δ ∪ {last}` of size `L`,
/// `ε_δ ≡ −(−1)^L Σ_{p=1}^{L−1} (−1)^p ε_{N∖N_p}` modulo `K_•`.
pub fn normalize(term: &RawTerm) -> Vec<(i64, BasisLabel)> {
    let last = term.rows.len() as u32 - 1;
    if term.delta.last() == Some(&last) {
        let markers = term.delta[..term.delta.len() - 1].to_vec();
        return alloc::vec![(term.coef, BasisLabel::from_parts(term.rows.clone(), term.columns.clone(), markers))];
    }
    let mut full = term.delta.clone();
    full.push(last);
    let l = full.len();
    (0..l - 1)
        .map(|p| {
            let coef = term.coef * -sign(l) * sign(p + 1);
            let mut markers = full[..l - 1].to_vec();
            markers.remove(p);
            (coef, BasisLabel::from_parts(term.rows.clone(), term.columns.clone(), markers))
        })
        .collect()
}

/// Entry `coef · y_var` at (`row` in `L_{q−1}`, `col` in `L_q`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryEntry {
    pub col: usize,
    pub row: usize,
    pub var: usize,
    pub coef: i64,
}

/// `L_0 ← L_1 ← ⋯ ← L_{m−t}` with `L_0 → I_t(D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeComplex {
    shape: BlockShape,
    convention: SignConvention,
    modules: Vec<Vec<BasisLabel>>,
    boundaries: Vec<Vec<BoundaryEntry>>,
    augmentation: Vec<Monomial>,
    rewrites: usize,
}

impl FreeComplex {
    pub fn build(shape: &BlockShape, convention: SignConvention) -> Result<Self> {
        let top = shape.m() - shape.t();
        let modules: Vec<Vec<BasisLabel>> = (0..=top).map(|q| enumerate_basis(shape, q)).collect();
        let m = shape.m() as usize;
        let augmentation = modules[0]
            .iter()
            .map(|l| Monomial::from_indices(m, &l.shift(shape)))
            .collect();
        let mut boundaries = Vec::with_capacity(top as usize);
        let mut rewrites = 0;
        for q in 1..=top as usize {
            let index: BTreeMap<&BasisLabel, usize> = modules[q - 1].iter().enumerate().map(|(i, l)| (l, i)).collect();
            let mut entries = Vec::new();
            for (col, label) in modules[q].iter().enumerate() {
                let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
                for term in raw_boundary(shape, label, convention) {
                    let normal = normalize(&term);
                    if term.delta.last().copied() != Some(term.rows.len() as u32 - 1) {
                        // Only deleting the last row can drop its marker.
                        if term.origin != TermOrigin::Lambda {
                            return Err(Error::Invariant(format!("Δ term of {label:?} left the representatives")));
                        }
                        rewrites += 1;
                    }
                    for (coef, target) in normal {
                        let Some(&row) = index.get(&target) else {
                            return Err(Error::Invariant(format!("boundary of {label:?} hit {target:?} outside L_{}", q - 1)));
                        };
                        *acc.entry((row, term.var)).or_default() += coef;
                    }
                }
                entries.extend(
                    acc.into_iter()
                        .filter(|&(_, c)| c != 0)
                        .map(|((row, var), coef)| BoundaryEntry { col, row, var, coef }),
                );
            }
            boundaries.push(entries);
        }
        Ok(FreeComplex { shape: shape.clone(), convention, modules, boundaries, augmentation, rewrites })
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn convention(&self) -> SignConvention {
        self.convention
    }

    pub fn variables(&self) -> VariableSet {
        self.shape.variables()
    }

    /// `m − t`, the index of the last module.
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn module(&self, q: usize) -> &[BasisLabel] {
        self.modules.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(Vec::len).collect()
    }

    /// Entries of `d_q : L_q → L_{q−1}` for `q ≥ 1`, sorted by column then row.
    pub fn boundary(&self, q: usize) -> &[BoundaryEntry] {
        match q {
            0 => &[],
            _ => self.boundaries.get(q - 1).map_or(&[], Vec::as_slice),
        }
    }

    /// Image of each `L_0` basis element in `I_t(D)`.
    pub fn augmentation(&self) -> &[Monomial] {
        &self.augmentation
    }

    /// Number of boundary terms that needed rewriting into representatives.
    pub fn rewrites(&self) -> usize {
        self.rewrites
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn shape(blocks: &[u32], t: u32) -> BlockShape {
        BlockShape::new(blocks.to_vec(), t).unwrap()
    }

    #[test]
    fn d1_on_22() {
        let s = shape(&[2, 2], 2);
        let c = FreeComplex::build(&s, SignConvention::Graded).unwrap();
        assert_eq!(c.ranks(), vec![4, 4, 1]);
        let d1 = c.boundary(1);
        for col in 0..4 {
            assert_eq!(d1.iter().filter(|e| e.col == col).count(), 2);
        }
        // rows (1,2), J = ({1,2},{1}) ↦ y11·[2(1),1(2)] − y12·[1(1),1(2)].
        let src = BasisLabel::from_parts(vec![0, 1], vec![vec![0, 1], vec![0]], vec![]);
        let col = c.module(1).iter().position(|l| *l == src).unwrap();
        let t11 = BasisLabel::from_parts(vec![0, 1], vec![vec![0], vec![0]], vec![]);
        let t21 = BasisLabel::from_parts(vec![0, 1], vec![vec![1], vec![0]], vec![]);
        let row = |l: &BasisLabel| c.module(0).iter().position(|x| x == l).unwrap();
        let mut got: Vec<_> = d1.iter().filter(|e| e.col == col).map(|e| (e.row, e.var, e.coef)).collect();
        got.sort();
        let mut want = vec![(row(&t11), s.var_index(0, 1), -1), (row(&t21), s.var_index(0, 0), 1)];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn augmentation_is_the_product() {
        let s = shape(&[2, 2], 2);
        let c = FreeComplex::build(&s, SignConvention::Graded).unwrap();
        let l = BasisLabel::from_parts(vec![0, 1], vec![vec![0], vec![0]], vec![]);
        let at = c.module(0).iter().position(|x| *x == l).unwrap();
        assert_eq!(c.augmentation()[at].display(&c.variables()).to_string(), "y1_1 y2_1");
    }

    #[test]
    fn normalize_keeps_representatives() {
        let term = RawTerm {
            coef: 1,
            var: 0,
            rows: vec![0, 1, 2],
            columns: vec![vec![0], vec![0], vec![0]],
            delta: vec![0, 1],
            origin: TermOrigin::Lambda,
        };
        let out = normalize(&term);
        assert_eq!(out.len(), 2);
        assert!(out.iter().all(|(_, l)| l.delta().last() == Some(&2)));
        // N = {0,1,2}, L = 3: −(−1)^3 = +1; p=1 → −ε_{12}, p=2 → +ε_{02}.
        assert_eq!(out[0], (-1, BasisLabel::from_parts(vec![0, 1, 2], vec![vec![0]; 3], vec![1])));
        assert_eq!(out[1], (1, BasisLabel::from_parts(vec![0, 1, 2], vec![vec![0]; 3], vec![0])));
    }

    #[test]
    fn only_lambda_rewrites() {
        for (blocks, t) in [(&[2u32, 1, 1][..], 2), (&[1, 1, 1, 1], 2), (&[2, 2, 1], 2), (&[3, 2, 1], 2)] {
            let c = FreeComplex::build(&shape(blocks, t), SignConvention::Graded).unwrap();
            assert!(c.rewrites() > 0, "{blocks:?}");
        }
        // With t = n, or t = 1 where every row is marked, nothing is rewritten.
        let c = FreeComplex::build(&shape(&[2, 2, 2], 3), SignConvention::Graded).unwrap();
        assert_eq!(c.rewrites(), 0);
        let c = FreeComplex::build(&shape(&[2, 2, 1], 1), SignConvention::Graded).unwrap();
        assert_eq!(c.rewrites(), 0);
    }

    use alloc::string::ToString;
}
