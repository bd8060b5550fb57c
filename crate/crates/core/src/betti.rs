//! Total and graded Betti numbers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

/// Betti numbers `β_{q,j}` of an ideal, `j` the internal degree.
///
/// Totals are derived from the graded part, so `β_q = Σ_j β_{q,j}` holds by
/// construction. Zero entries are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    graded: BTreeMap<(usize, u32), BigUint>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table with a single internal degree per homological index: `β_{q, t+q}`.
    pub fn linear(t: u32, totals: &[BigUint]) -> Self {
        let mut table = BettiTable::new();
        for (q, b) in totals.iter().enumerate() {
            table.add(q, t + q as u32, b.clone());
        }
        table
    }

    pub fn add(&mut self, q: usize, j: u32, value: BigUint) {
        if value.is_zero() {
            return;
        }
        *self.graded.entry((q, j)).or_default() += value;
    }

    pub fn graded(&self, q: usize, j: u32) -> BigUint {
        self.graded.get(&(q, j)).cloned().unwrap_or_default()
    }

    pub fn graded_entries(&self) -> impl Iterator<Item = (usize, u32, &BigUint)> {
        self.graded.iter().map(|(&(q, j), b)| (q, j, b))
    }

    pub fn total(&self, q: usize) -> BigUint {
        self.graded
            .range((q, 0)..=(q, u32::MAX))
            .map(|(_, b)| b)
            .sum()
    }

    /// Largest `q` with `β_q ≠ 0`.
    pub fn max_index(&self) -> Option<usize> {
        self.graded.keys().map(|&(q, _)| q).max()
    }

    /// `[β_0, …, β_{max_index}]`, empty for the zero table.
    pub fn totals(&self) -> Vec<BigUint> {
        match self.max_index() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|q| self.total(q)).collect(),
        }
    }

    /// True when every nonzero `β_{q,j}` sits at `j = t + q`.
    pub fn is_linear(&self, t: u32) -> bool {
        self.graded.keys().all(|&(q, j)| j == t + q as u32)
    }
}
