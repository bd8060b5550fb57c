//! Transversal monomial ideals `I_t(D)`: the ideal of `t`-minors of the
//! block matrix `D(b_1, …, b_n)` whose row `i` holds `y_{i,1}, …, y_{i,b_i}`
//! in its own column block and zeros elsewhere.
//!
//! A `t`-minor of `D` is nonzero only when it picks one entry from each of
//! `t` distinct rows, so `I_t(D)` is generated by the square-free products
//! `y_{i_1,j_1} ⋯ y_{i_t,j_t}` with `i_1 < ⋯ < i_t`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::betti::BettiTable;
use crate::combinat::{binom, binom_int, compositions, pow2};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VariableSet};

/// Block sizes `(b_1, …, b_n)` and the minor size `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockShape {
    blocks: Vec<u32>,
    t: u32,
    m: u32,
}

impl BlockShape {
    pub fn new(blocks: Vec<u32>, t: u32) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidShape("at least one block is required".into()));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidShape("block sizes must be positive".into()));
        }
        if t == 0 || t as usize > blocks.len() {
            return Err(Error::InvalidShape(format!(
                "minor size t = {t} must satisfy 1 <= t <= n = {}",
                blocks.len()
            )));
        }
        let m = blocks.iter().sum();
        Ok(BlockShape { blocks, t, m })
    }

    /// `n` blocks of equal size `b`.
    pub fn uniform(n: u32, b: u32, t: u32) -> Result<Self> {
        BlockShape::new(alloc::vec![b; n as usize], t)
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn n(&self) -> u32 {
        self.blocks.len() as u32
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Number of variables `Σ b_i`.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Offset of block `row` in the block-major variable order.
    pub fn block_offset(&self, row: usize) -> usize {
        self.blocks[..row].iter().map(|&b| b as usize).sum()
    }

    /// Index of `y_{row+1, col+1}` (both arguments 0-based).
    pub fn var_index(&self, row: usize, col: usize) -> usize {
        debug_assert!(col < self.blocks[row] as usize);
        self.block_offset(row) + col
    }

    /// Inverse of [`var_index`](Self::var_index).
    pub fn var_position(&self, index: usize) -> (usize, usize) {
        let mut rest = index;
        for (row, &b) in self.blocks.iter().enumerate() {
            if rest < b as usize {
                return (row, rest);
            }
            rest -= b as usize;
        }
        panic!("variable index {index} out of range");
    }

    /// `y{i}_{j}`, block by block.
    pub fn variables(&self) -> VariableSet {
        let mut names = Vec::with_capacity(self.m as usize);
        for (i, &b) in self.blocks.iter().enumerate() {
            for j in 0..b {
                names.push(format!("y{}_{}", i + 1, j + 1));
            }
        }
        VariableSet::new(names).expect("labels are distinct")
    }
}

/// Index subsets of `0..n` of size `k`, in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    core::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Minimal generators of `I_t(D)`.
pub fn gens_transversal(shape: &BlockShape) -> MonomialIdeal {
    let vars = shape.variables();
    let m = shape.m as usize;
    let mut gens = Vec::new();
    for rows in subsets(shape.blocks.len(), shape.t as usize) {
        // Odometer over one column per selected row.
        let mut cols = alloc::vec![0usize; rows.len()];
        loop {
            let idx: Vec<usize> = rows.iter().zip(&cols).map(|(&r, &c)| shape.var_index(r, c)).collect();
            gens.push(Monomial::from_indices(m, &idx));
            let mut v = rows.len();
            let mut done = true;
            while v > 0 {
                v -= 1;
                if cols[v] + 1 < shape.blocks[rows[v]] as usize {
                    cols[v] += 1;
                    cols[v + 1..].iter_mut().for_each(|c| *c = 0);
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
    }
    MonomialIdeal::minimalize(vars, gens).expect("generators live in the ring")
}

/// `Σ_{compositions r of total into the given caps} Π C(b_v, r_v)`.
fn capped_product_sum(total: u32, caps: &[u32]) -> BigUint {
    compositions(total, caps)
        .map(|c| {
            c.parts()
                .iter()
                .zip(caps)
                .map(|(&r, &b)| binom(b as u64, r as i64))
                .product::<BigUint>()
        })
        .sum()
}

/// `β_q(I_t(D))` for an arbitrary block shape: sum over the number `s` of
/// selected rows, the `C(s−1, t−1)` marker choices, the row subsets, and the
/// column counts `r_v >= 1` with `Σ r_v = t + q`.
pub fn betti_formula_general(shape: &BlockShape, q: u32) -> BigUint {
    let t = shape.t;
    let n = shape.n();
    if q > shape.m - t {
        return BigUint::zero();
    }
    let mut total = BigUint::zero();
    for s in t..=(t + q).min(n) {
        let markers = binom((s - 1) as u64, (t - 1) as i64);
        let mut rows_sum = BigUint::zero();
        for rows in subsets(n as usize, s as usize) {
            let caps: Vec<u32> = rows.iter().map(|&i| shape.blocks[i]).collect();
            rows_sum += capped_product_sum(t + q, &caps);
        }
        total += markers * rows_sum;
    }
    total
}

/// `β_q(I_t(D))` when `b_1 = ⋯ = b_n = b`.
pub fn betti_formula_uniform(n: u32, b: u32, t: u32, q: u32) -> BigUint {
    let mut total = BigUint::zero();
    for s in t..=t + q {
        let outer = binom((s - 1) as u64, (t - 1) as i64) * binom(n as u64, s as i64);
        if outer.is_zero() {
            continue;
        }
        let caps = alloc::vec![b; s as usize];
        total += outer * capped_product_sum(t + q, &caps);
    }
    total
}

/// `β_q(I_t(D))` when every block has size 2:
/// `Σ_s C(s−1, t−1)·C(n, s)·C(s, t+q−s)·2^{2s−t−q}` over
/// `max(t, ⌈(t+q)/2⌉) <= s <= min(t+q, n)`.
pub fn betti_formula_b2(n: u32, t: u32, q: u32) -> BigUint {
    let lo = t.max((t + q).div_ceil(2));
    let hi = (t + q).min(n);
    let mut total = BigUint::zero();
    for s in lo..=hi {
        total += binom((s - 1) as u64, (t - 1) as i64)
            * binom(n as u64, s as i64)
            * binom_int(s as i64, (t + q) as i64 - s as i64)
            * pow2((2 * s - t - q) as u64);
    }
    total
}

/// Linear Betti table of `I_t(D)` from [`betti_formula_general`], for
/// `q = 0, …, m − t`.
pub fn betti_table_formula(shape: &BlockShape) -> BettiTable {
    let totals: Vec<BigUint> = (0..=shape.m - shape.t).map(|q| betti_formula_general(shape, q)).collect();
    BettiTable::linear(shape.t, &totals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn b(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn shape_validation() {
        assert!(BlockShape::new(vec![2], 2).is_err());
        assert!(BlockShape::new(vec![2, 0], 1).is_err());
        assert!(BlockShape::new(vec![], 1).is_err());
        assert!(BlockShape::new(vec![2, 2], 0).is_err());
        let s = BlockShape::new(vec![2, 1, 3], 2).unwrap();
        assert_eq!(s.m(), 6);
        assert_eq!(s.var_index(2, 1), 4);
        assert_eq!(s.var_position(4), (2, 1));
    }

    #[test]
    fn subsets_in_lex_order() {
        let all: Vec<_> = subsets(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 0).count(), 1);
        assert_eq!(subsets(2, 3).count(), 0);
    }

    #[test]
    fn generator_examples() {
        let i = gens_transversal(&BlockShape::new(vec![1, 1, 1], 2).unwrap());
        let text: Vec<_> = i.gens().iter().map(|g| g.display(i.vars()).to_string()).collect();
        assert_eq!(text, vec!["y1_1 y2_1", "y1_1 y3_1", "y2_1 y3_1"]);

        let i = gens_transversal(&BlockShape::new(vec![2, 2], 2).unwrap());
        let text: Vec<_> = i.gens().iter().map(|g| g.display(i.vars()).to_string()).collect();
        assert_eq!(text, vec!["y1_1 y2_1", "y1_1 y2_2", "y1_2 y2_1", "y1_2 y2_2"]);

        let i = gens_transversal(&BlockShape::new(vec![2, 2], 1).unwrap());
        assert_eq!(i.gens().len(), 4);
        assert!(i.gens().iter().all(|g| g.degree() == 1));
    }

    /// Brute force over column t-subsets of the explicit matrix D: a minor
    /// of a matrix with one nonzero per column is nonzero iff the chosen
    /// columns sit in distinct rows, and then it is the product of entries.
    fn minors_brute_force(shape: &BlockShape) -> Vec<Monomial> {
        let m = shape.m() as usize;
        let row_of: Vec<usize> = (0..m).map(|c| shape.var_position(c).0).collect();
        let mut out = Vec::new();
        for cols in subsets(m, shape.t() as usize) {
            let mut rows: Vec<usize> = cols.iter().map(|&c| row_of[c]).collect();
            rows.sort();
            rows.dedup();
            if rows.len() == cols.len() {
                out.push(Monomial::from_indices(m, &cols));
            }
        }
        out
    }

    #[test]
    fn generators_match_minor_enumeration() {
        for blocks in [vec![2, 2], vec![1, 2, 3], vec![3, 1, 1, 2], vec![2, 2, 2]] {
            for t in 1..=blocks.len() as u32 {
                let shape = BlockShape::new(blocks.clone(), t).unwrap();
                let ideal = gens_transversal(&shape);
                let brute = MonomialIdeal::minimalize(shape.variables(), minors_brute_force(&shape)).unwrap();
                assert_eq!(ideal, brute);
                assert!(ideal.gens().iter().all(Monomial::is_squarefree));
                assert_eq!(b(ideal.gens().len() as u64), betti_formula_general(&shape, 0));
            }
        }
    }

    #[test]
    fn general_formula_examples() {
        let s = BlockShape::new(vec![2, 2], 2).unwrap();
        assert_eq!(betti_formula_general(&s, 0), b(4));
        assert_eq!(betti_formula_general(&s, 1), b(4));
        assert_eq!(betti_formula_general(&s, 2), b(1));
        assert_eq!(betti_formula_general(&s, 3), b(0));
    }

    #[test]
    fn uniform_and_b2_examples() {
        assert_eq!(betti_formula_uniform(2, 2, 2, 1), b(4));
        assert_eq!(betti_formula_uniform(3, 1, 2, 0), b(3));
        assert_eq!(betti_formula_uniform(3, 2, 3, 1), b(12));
        let small: Vec<_> = (0..3).map(|q| betti_formula_b2(2, 2, q)).collect();
        assert_eq!(small, vec![b(4), b(4), b(1)]);
        assert_eq!(betti_formula_b2(4, 4, 1), b(32));
        // Top Betti number: s = 3, r = (2,2,2), C(2,1) marker choices.
        assert_eq!(betti_formula_b2(3, 2, 4), b(2));
    }

    #[test]
    fn t_equals_n_closed_form() {
        for n in 1..=8u32 {
            for q in 0..=n {
                let want = binom(n as u64, q as i64) * pow2((n - q) as u64);
                assert_eq!(betti_formula_b2(n, n, q), want);
            }
        }
    }

    #[test]
    fn general_matches_uniform() {
        for n in 1..=6u32 {
            for bsize in 1..=3u32 {
                for t in 1..=n {
                    let shape = BlockShape::uniform(n, bsize, t).unwrap();
                    for q in 0..=shape.m() - t {
                        assert_eq!(
                            betti_formula_general(&shape, q),
                            betti_formula_uniform(n, bsize, t, q),
                            "n={n} b={bsize} t={t} q={q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn uniform_matches_b2() {
        for n in 1..=8u32 {
            for t in 1..=n {
                for q in 0..=2 * n {
                    assert_eq!(betti_formula_uniform(n, 2, t, q), betti_formula_b2(n, t, q));
                }
            }
        }
    }

    #[test]
    fn betti_vanish_exactly_past_m_minus_t() {
        for blocks in [vec![1, 1, 1], vec![2, 3], vec![1, 2, 2, 1], vec![3, 3, 1]] {
            for t in 1..=blocks.len() as u32 {
                let shape = BlockShape::new(blocks.clone(), t).unwrap();
                let top = shape.m() - t;
                assert!(!betti_formula_general(&shape, top).is_zero());
                assert!(betti_formula_general(&shape, top + 1).is_zero());
            }
        }
    }

    #[test]
    fn dropping_positive_parts_overcounts() {
        // With zero parts allowed the inner sum collapses by Vandermonde to
        // C(Σ b, t+q) per row selection, which is strictly larger whenever a
        // zero part is feasible.
        for blocks in [vec![2, 2], vec![1, 2, 3], vec![2, 2, 2]] {
            let n = blocks.len();
            for s in 2..=n {
                for rows in subsets(n, s) {
                    let caps: Vec<u32> = rows.iter().map(|&i| blocks[i]).collect();
                    let cap_sum: u32 = caps.iter().sum();
                    for total in s as u32..=cap_sum {
                        let positive = capped_product_sum(total, &caps);
                        let caps64: Vec<u64> = caps.iter().map(|&c| c as u64).collect();
                        let (free, closed) = crate::combinat::identity_vandermonde(&caps64, total as u64);
                        assert_eq!(free, closed);
                        let zero_part_possible = (0..s).any(|v| cap_sum - caps[v] >= total);
                        if zero_part_possible {
                            assert!(free > positive);
                        } else {
                            assert_eq!(free, positive);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transversal_has_linear_quotients() {
        for (blocks, t) in [(vec![2, 2], 2), (vec![1, 2, 1], 2), (vec![2, 1, 2], 3), (vec![3, 2], 1)] {
            let ideal = gens_transversal(&BlockShape::new(blocks, t).unwrap());
            assert!(ideal.has_linear_quotients_default());
            assert!(!ideal.is_stable() || ideal.gens().iter().all(|g| g.degree() == 1));
        }
    }
}
