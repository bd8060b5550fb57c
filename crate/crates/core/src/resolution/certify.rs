//! Mechanical certificate that `L_•` is the minimal free resolution of
//! `I_t(D)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_core::RngCore;

use super::complex::{FreeComplex, SignConvention};
use crate::error::{Error, Result};
use crate::linalg::{BaseField, PrimeField, SparseMatrix};
use crate::transversal::{betti_formula_general, gens_transversal, BlockShape};

pub const DEFAULT_MAX_M: u32 = 10;
pub const EVALUATION_PRIME: u64 = 32003;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Field for the square-free strand homology.
    pub field: BaseField,
    /// Number of random evaluation points.
    pub points: usize,
    /// Field for the random evaluations.
    pub point_field: PrimeField,
    /// Largest number of variables accepted.
    pub max_m: u32,
    pub convention: SignConvention,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            field: BaseField::Rationals,
            points: 5,
            point_field: PrimeField::new(EVALUATION_PRIME).expect("prime"),
            max_m: DEFAULT_MAX_M,
            convention: SignConvention::Graded,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    DSquared,
    Minimality,
    Ranks,
    StrandExactness,
    RandomEvaluation,
}

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::DSquared => "d_squared",
            CheckKind::Minimality => "minimality",
            CheckKind::Ranks => "ranks",
            CheckKind::StrandExactness => "strand_exactness",
            CheckKind::RandomEvaluation => "random_evaluation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub kind: CheckKind,
    /// First failure found; `None` means the check passed.
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub blocks: Vec<u32>,
    pub t: u32,
    pub ranks: Vec<usize>,
    pub expected_ranks: Vec<BigUint>,
    pub rewrites: usize,
    pub checks: Vec<CheckResult>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, kind: CheckKind) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.kind == kind)
    }
}

/// Builds `L_•` for `shape` and runs all five checks.
pub fn certify_resolution(shape: &BlockShape, options: &CertifyOptions, rng: &mut impl RngCore) -> Result<Certificate> {
    if shape.m() > options.max_m {
        return Err(Error::InvalidShape(format!("m = {} exceeds the certification bound {}", shape.m(), options.max_m)));
    }
    let complex = FreeComplex::build(shape, options.convention)?;
    Ok(certify_complex(&complex, options, rng))
}

pub fn certify_complex(complex: &FreeComplex, options: &CertifyOptions, rng: &mut impl RngCore) -> Certificate {
    let shape = complex.shape();
    let expected_ranks = (0..=complex.length() as u32).map(|q| betti_formula_general(shape, q)).collect();
    let checks = vec![
        CheckResult { kind: CheckKind::DSquared, failure: check_d_squared(complex).err() },
        CheckResult { kind: CheckKind::Minimality, failure: check_minimality(complex).err() },
        CheckResult { kind: CheckKind::Ranks, failure: check_ranks(complex).err() },
        CheckResult { kind: CheckKind::StrandExactness, failure: check_strand_exactness(complex, options.field).err() },
        CheckResult {
            kind: CheckKind::RandomEvaluation,
            failure: check_random_points(complex, options.point_field, options.points, rng).err(),
        },
    ];
    Certificate {
        blocks: shape.blocks().to_vec(),
        t: shape.t(),
        ranks: complex.ranks(),
        expected_ranks,
        rewrites: complex.rewrites(),
        checks,
    }
}

/// `d_{q−1} ∘ d_q = 0` for all `q`, and `ε ∘ d_1 = 0`, symbolically.
pub fn check_d_squared(complex: &FreeComplex) -> core::result::Result<(), String> {
    for q in 2..=complex.length() {
        let inner = columns(complex, q - 1);
        let outer = columns(complex, q);
        for (col, entries) in outer.iter().enumerate() {
            let mut acc: BTreeMap<(usize, usize, usize), i64> = BTreeMap::new();
            for &(mid, v1, c1) in entries {
                for &(row, v2, c2) in &inner[mid] {
                    *acc.entry((row, v1.min(v2), v1.max(v2))).or_default() += c1 * c2;
                }
            }
            if let Some((&(row, _, _), _)) = acc.iter().find(|(_, &c)| c != 0) {
                let src = &complex.module(q)[col];
                let dst = &complex.module(q - 2)[row];
                return Err(format!("d_{} d_{q} ≠ 0 at q = {q}: {src:?} → {dst:?}", q - 1));
            }
        }
    }
    if complex.length() >= 1 {
        let aug = complex.augmentation();
        for (col, entries) in columns(complex, 1).iter().enumerate() {
            let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
            for &(row, var, coef) in entries {
                let mut exps = aug[row].exponents().to_vec();
                exps[var] += 1;
                *acc.entry(exps).or_default() += coef;
            }
            if acc.values().any(|&c| c != 0) {
                return Err(format!("ε ∘ d_1 ≠ 0 on {:?}", complex.module(1)[col]));
            }
        }
    }
    Ok(())
}

/// Per source column: `(row, var, coef)`.
fn columns(complex: &FreeComplex, q: usize) -> Vec<Vec<(usize, usize, i64)>> {
    let mut out = vec![Vec::new(); complex.module(q).len()];
    for e in complex.boundary(q) {
        out[e.col].push((e.row, e.var, e.coef));
    }
    out
}

/// Every entry is `±1` times one variable, and multidegrees match:
/// `shift(target) ∪ {var} = shift(source)`.
pub fn check_minimality(complex: &FreeComplex) -> core::result::Result<(), String> {
    let shape = complex.shape();
    for q in 1..=complex.length() {
        let src: Vec<u64> = complex.module(q).iter().map(|l| l.shift_mask(shape)).collect();
        let dst: Vec<u64> = complex.module(q - 1).iter().map(|l| l.shift_mask(shape)).collect();
        for e in complex.boundary(q) {
            if e.coef.abs() != 1 {
                return Err(format!("entry {} at q = {q}, column {}, row {}", e.coef, e.col, e.row));
            }
            if dst[e.row] & 1 << e.var != 0 || dst[e.row] | 1 << e.var != src[e.col] {
                return Err(format!("entry at q = {q}, column {}, row {} is not homogeneous", e.col, e.row));
            }
        }
    }
    let aug = complex.augmentation();
    if aug.iter().any(|m| !m.is_squarefree() || m.degree() != shape.t()) {
        return Err("augmentation does not land on degree-t square-free monomials".into());
    }
    Ok(())
}

/// `rank L_q` equals the closed-form `β_q` for `q = 0, …, m − t`, and the
/// formula vanishes beyond.
pub fn check_ranks(complex: &FreeComplex) -> core::result::Result<(), String> {
    let shape = complex.shape();
    for (q, &r) in complex.ranks().iter().enumerate() {
        let want = betti_formula_general(shape, q as u32);
        if BigUint::from(r) != want {
            return Err(format!("rank L_{q} = {r}, formula gives {want}"));
        }
    }
    let past = betti_formula_general(shape, complex.length() as u32 + 1);
    if past != BigUint::from(0u32) {
        return Err(format!("formula gives β_{} = {past} past the end", complex.length() + 1));
    }
    Ok(())
}

/// Homology of the strand at every square-free `α`: zero for `q ≥ 1`, and
/// at `q = 0` one-dimensional exactly when `y^α ∈ I_t(D)`. Shifts are
/// square-free, so any `α` has the same strand as `min(α, 1)`.
pub fn check_strand_exactness(complex: &FreeComplex, field: BaseField) -> core::result::Result<(), String> {
    let shape = complex.shape();
    let m = shape.m() as usize;
    if m > 24 {
        return Err(format!("m = {m} is too large for square-free strand enumeration"));
    }
    let ideal = gens_transversal(shape);
    let gen_masks: Vec<u64> = ideal.gens().iter().map(|g| g.support().fold(0, |a, i| a | 1 << i)).collect();
    let shifts: Vec<Vec<u64>> = (0..=complex.length())
        .map(|q| complex.module(q).iter().map(|l| l.shift_mask(shape)).collect())
        .collect();
    let cols: Vec<Vec<Vec<(usize, usize, i64)>>> = (0..=complex.length()).map(|q| columns(complex, q)).collect();
    for alpha in 0u64..1 << m {
        let selected: Vec<Vec<usize>> = shifts
            .iter()
            .map(|s| (0..s.len()).filter(|&i| s[i] & !alpha == 0).collect())
            .collect();
        let mut rank = vec![0usize; complex.length() + 2];
        for q in 1..=complex.length() {
            let position: BTreeMap<usize, usize> = selected[q - 1].iter().enumerate().map(|(k, &i)| (i, k)).collect();
            let mut mat = SparseMatrix::new(selected[q - 1].len());
            for &c in &selected[q] {
                mat.push_row(cols[q][c].iter().map(|&(row, _, coef)| (position[&row], coef)));
            }
            rank[q] = field.rank(&mat);
        }
        let in_ideal = gen_masks.iter().any(|g| g & !alpha == 0);
        for q in 0..=complex.length() {
            let h = selected[q].len() - rank[q] - rank[q + 1];
            let want = usize::from(q == 0 && in_ideal);
            if h != want {
                return Err(format!("strand α = {:?}: dim H_{q} = {h}, expected {want}", strand_reduction_bits(alpha, m)));
            }
        }
    }
    Ok(())
}

fn strand_reduction_bits(alpha: u64, m: usize) -> Vec<u32> {
    (0..m).map(|i| (alpha >> i & 1) as u32).collect()
}

/// `min(α, 1)`: the square-free multidegree with the same strand.
pub fn strand_reduction(alpha: &[u32]) -> Vec<u32> {
    alpha.iter().map(|&a| a.min(1)).collect()
}

/// At random points with nonzero coordinates over `GF(p)`, the evaluated
/// complex has homology only at `q = 0`, of dimension one.
pub fn check_random_points(
    complex: &FreeComplex,
    field: PrimeField,
    points: usize,
    rng: &mut impl RngCore,
) -> core::result::Result<(), String> {
    let m = complex.shape().m() as usize;
    let p = field.modulus();
    for point in 0..points {
        let values: Vec<u64> = (0..m).map(|_| rng.next_u64() % (p - 1) + 1).collect();
        let mut rank = vec![0usize; complex.length() + 2];
        for q in 1..=complex.length() {
            let mut rows = vec![Vec::new(); complex.module(q).len()];
            for e in complex.boundary(q) {
                rows[e.col].push((e.row, field.mul(field.reduce(e.coef), values[e.var])));
            }
            rows.iter_mut().for_each(|r| r.sort_unstable());
            rank[q] = field.rank_reduced(&rows);
        }
        for q in 0..=complex.length() {
            let h = complex.module(q).len() - rank[q] - rank[q + 1];
            let want = usize::from(q == 0);
            if h != want {
                return Err(format!("point {point} ({values:?}): dim H_{q} = {h}, expected {want}"));
            }
        }
    }
    Ok(())
}
