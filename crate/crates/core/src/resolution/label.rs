//! Basis labels of the modules `L_q`.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::transversal::{subsets, BlockShape};

/// A basis element `e_{J_1}(i_1) ∧ ⋯ ∧ e_{J_s}(i_s) ⊗ ε_{k_1} ∧ ⋯ ∧ ε_{k_{s−t}} ∧ ε_s`
/// of `L_q`, with `Σ|J_v| = t + q`.
///
/// Everything is 0-based: `rows` are block indices, `columns[v]` are
/// positions inside block `rows[v]`, and `markers` are positions into
/// `rows`, all `< s − 1`. The marker on the last row is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    rows: Vec<u32>,
    columns: Vec<Vec<u32>>,
    markers: Vec<u32>,
}

impl BasisLabel {
    pub fn new(shape: &BlockShape, rows: Vec<u32>, columns: Vec<Vec<u32>>, markers: Vec<u32>) -> Result<Self> {
        let s = rows.len();
        let bad = |why: &str| Err(Error::InvalidShape(format!("basis label: {why}")));
        if s < shape.t() as usize || rows.windows(2).any(|w| w[0] >= w[1]) || rows.iter().any(|&r| r >= shape.n()) {
            return bad("rows must be increasing, at least t of them, inside the shape");
        }
        if columns.len() != s {
            return bad("one column set per row");
        }
        for (v, cols) in columns.iter().enumerate() {
            let width = shape.blocks()[rows[v] as usize];
            if cols.is_empty() || cols.windows(2).any(|w| w[0] >= w[1]) || cols.iter().any(|&c| c >= width) {
                return bad("column sets must be nonempty, increasing, inside the block");
            }
        }
        if markers.len() != s - shape.t() as usize
            || markers.windows(2).any(|w| w[0] >= w[1])
            || markers.iter().any(|&k| k as usize + 1 >= s)
        {
            return bad("need s − t increasing markers below the last row");
        }
        Ok(BasisLabel { rows, columns, markers })
    }

    pub(crate) fn from_parts(rows: Vec<u32>, columns: Vec<Vec<u32>>, markers: Vec<u32>) -> Self {
        BasisLabel { rows, columns, markers }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Free markers, without the implicit last one.
    pub fn markers(&self) -> &[u32] {
        &self.markers
    }

    pub fn s(&self) -> usize {
        self.rows.len()
    }

    /// `t + q`.
    pub fn degree(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// All marker positions including the last row.
    pub fn delta(&self) -> Vec<u32> {
        let mut d = self.markers.clone();
        d.push(self.s() as u32 - 1);
        d
    }

    /// Indices of the variables in `ξ`, increasing. This is the multidegree
    /// shift of the basis element.
    pub fn shift(&self, shape: &BlockShape) -> Vec<usize> {
        self.rows
            .iter()
            .zip(&self.columns)
            .flat_map(|(&r, cols)| cols.iter().map(move |&c| shape.var_index(r as usize, c as usize)))
            .collect()
    }

    pub fn shift_mask(&self, shape: &BlockShape) -> u64 {
        self.shift(shape).iter().fold(0, |m, &i| m | 1 << i)
    }

    fn key(&self) -> (usize, &[u32], &[Vec<u32>], &[u32]) {
        (self.s(), &self.rows, &self.columns, &self.markers)
    }
}

/// Order by `(s, rows, columns, markers)`.
impl Ord for BasisLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for BasisLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Basis of `L_q`, sorted. Empty for `q > m − t`.
pub fn enumerate_basis(shape: &BlockShape, q: u32) -> Vec<BasisLabel> {
    let (n, t) = (shape.n() as usize, shape.t() as usize);
    let total = t + q as usize;
    let mut out = Vec::new();
    for s in t..=n.min(total) {
        for rows in subsets(n, s) {
            let widths: Vec<usize> = rows.iter().map(|&r| shape.blocks()[r] as usize).collect();
            let mut columns = Vec::with_capacity(s);
            let mut all_columns = Vec::new();
            column_choices(&widths, total, &mut columns, &mut all_columns);
            let rows: Vec<u32> = rows.iter().map(|&r| r as u32).collect();
            for cols in all_columns {
                for markers in subsets(s - 1, s - t) {
                    let markers = markers.into_iter().map(|k| k as u32).collect();
                    out.push(BasisLabel::from_parts(rows.clone(), cols.clone(), markers));
                }
            }
        }
    }
    out.sort();
    out
}

/// Nonempty column subsets, one per row, of total size `remaining`.
fn column_choices(widths: &[usize], remaining: usize, cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
    let v = cur.len();
    if v == widths.len() {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let later = widths.len() - v - 1;
    let most = widths[v].min(remaining.saturating_sub(later));
    for r in 1..=most {
        for cols in subsets(widths[v], r) {
            cur.push(cols.into_iter().map(|c| c as u32).collect());
            column_choices(widths, remaining - r, cur, out);
            cur.pop();
        }
    }
}
