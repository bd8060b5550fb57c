//! Exact ranks of sparse integer matrices over `ℚ` or `GF(p)`.
//!
//! Matrices are stored row-wise as sorted `(column, value)` lists with
//! nonzero values. Over `ℚ` elimination is fraction-free: rows stay integral
//! and are divided by their content after every step. Arithmetic runs in
//! `i64` and restarts in `BigInt` on the first overflow.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use crate::error::{Error, Result};

/// Sparse matrix with integer entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    /// Appends a row given as `(column, value)` pairs in any order; repeated
    /// columns are summed and zeros dropped.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, i64)>) {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.ncols, "column {c} out of range");
            *acc.entry(c).or_default() += v;
        }
        self.rows.push(acc.into_iter().filter(|&(_, v)| v != 0).collect());
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<(usize, i64)>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

/// `GF(p)` for an odd prime `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || p >= 1 << 32 || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Rank of a matrix whose entries are already reduced mod `p`.
    pub fn rank_reduced(&self, rows: &[Vec<(usize, u64)>]) -> usize {
        let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
        for row in rows {
            let mut row: Vec<(usize, u64)> = row.iter().copied().filter(|&(_, v)| v % self.p != 0).collect();
            while let Some(&(lead, a)) = row.first() {
                match pivots.get(&lead) {
                    Some(piv) => row = self.axpy(&row, a, piv),
                    None => {
                        let inv = self.inv(a);
                        row.iter_mut().for_each(|(_, v)| *v = self.mul(*v, inv));
                        pivots.insert(lead, row);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    /// `row − a·piv`, where `piv` has leading entry 1.
    fn axpy(&self, row: &[(usize, u64)], a: u64, piv: &[(usize, u64)]) -> Vec<(usize, u64)> {
        let mut out = Vec::with_capacity(row.len() + piv.len());
        let (mut i, mut j) = (0, 0);
        while i < row.len() || j < piv.len() {
            let ci = row.get(i).map_or(usize::MAX, |e| e.0);
            let cj = piv.get(j).map_or(usize::MAX, |e| e.0);
            let (c, v) = if ci < cj {
                i += 1;
                (ci, row[i - 1].1)
            } else if cj < ci {
                j += 1;
                (cj, self.sub(0, self.mul(a, piv[j - 1].1)))
            } else {
                i += 1;
                j += 1;
                (ci, self.sub(row[i - 1].1, self.mul(a, piv[j - 1].1)))
            };
            if v != 0 {
                out.push((c, v));
            }
        }
        out
    }

    pub fn rank(&self, m: &SparseMatrix) -> usize {
        let rows: Vec<Vec<(usize, u64)>> = m
            .rows
            .iter()
            .map(|r| r.iter().map(|&(c, v)| (c, self.reduce(v))).collect())
            .collect();
        self.rank_reduced(&rows)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank over `ℚ` by fraction-free elimination.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    let small: Vec<Vec<(usize, i64)>> = m.rows.clone();
    if let Some(r) = ff_rank(small) {
        return r;
    }
    let big = m
        .rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    ff_rank(big).expect("BigInt arithmetic does not overflow")
}

/// Fraction-free sparse elimination; `None` on overflow.
fn ff_rank<T>(rows: Vec<Vec<(usize, T)>>) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let mut pivots: BTreeMap<usize, Vec<(usize, T)>> = BTreeMap::new();
    for mut row in rows {
        while let Some((lead, b)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(piv) => {
                    let a = piv[0].1.clone();
                    let g = a.gcd(&b);
                    row = combine(&row, &(a / g.clone()), &piv[..], &(b / g))?;
                }
                None => {
                    normalize(&mut row);
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// `x·row − y·piv`, zeros dropped; the leading column cancels.
fn combine<T>(row: &[(usize, T)], x: &T, piv: &[(usize, T)], y: &T) -> Option<Vec<(usize, T)>>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    let zero = T::zero();
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = piv.get(j).map_or(usize::MAX, |e| e.0);
        let (c, u, w) = if ci < cj {
            i += 1;
            (ci, &row[i - 1].1, &zero)
        } else if cj < ci {
            j += 1;
            (cj, &zero, &piv[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (ci, &row[i - 1].1, &piv[j - 1].1)
        };
        let v = x.checked_mul(u)?.checked_sub(&y.checked_mul(w)?)?;
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    normalize(&mut out);
    Some(out)
}

/// Divide by the content and make the leading entry positive.
fn normalize<T: Clone + Integer + Signed>(row: &mut [(usize, T)]) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter() {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    if first.1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        row.iter_mut().for_each(|(_, v)| *v = v.clone() / g.clone());
    }
}

/// Field over which homology and exactness are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[derive(Default)]
pub enum BaseField {
    #[default]
    Rationals,
    Prime(PrimeField),
}

impl BaseField {
    pub fn rank(&self, m: &SparseMatrix) -> usize {
        match self {
            BaseField::Rationals => rank_rational(m),
            BaseField::Prime(f) => f.rank(m),
        }
    }
}
