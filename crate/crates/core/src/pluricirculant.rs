//! Initial ideals `J_t` of generic pluri-circulant matrices.
//!
//! `P = [M_1 ⋯ M_b]` concatenates `b` generic `n×n` circulants, `M_j` having
//! first row `x_{1j}, …, x_{nj}`. `T = [T_1 ⋯ T_b]` keeps the first `t` rows
//! of each circulant with the entries below the diagonal set to zero, and
//! `J_t` is generated by the nonzero products along the main diagonals of
//! the `t×t` column selections of `T`.
//!
//! For `b = 2` the variables are re-indexed so that `J_t` is stable: the
//! nonzero entries of the last row of `[T_1 T_2]` become `z_1, …, z_{2d}`
//! (`d = n − t + 1`), the remaining first-row entries of `T_1` become
//! `z_{2d+1}, …, z_{2d+t−1}`, and the remaining first-row entries of `T_2`
//! never occur in a generator and are kept last, unrenamed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::betti::BettiTable;
use crate::combinat::{binom, binom_int};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VariableSet};
use crate::transversal::betti_formula_b2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PluriShape {
    n: u32,
    b: u32,
    t: u32,
}

impl PluriShape {
    pub fn new(n: u32, b: u32, t: u32) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidShape("b must be at least 1".into()));
        }
        if t == 0 || t > n {
            return Err(Error::InvalidShape(format!("t = {t} must satisfy 1 <= t <= n = {n}")));
        }
        Ok(PluriShape { n, b, t })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `d = n − t + 1`, the length of the last row of each `T_j`.
    pub fn d(&self) -> u32 {
        self.n - self.t + 1
    }

    /// Number of re-indexed variables `z_1, …, z_{bd + (b−1)(t−1)}`; equals
    /// `2d + t − 1 = 2n − t + 1` for `b = 2`.
    pub fn meaningful_vars(&self) -> u32 {
        self.b * self.d() + (self.b - 1) * (self.t - 1)
    }

    fn require_two_blocks(&self) -> Result<()> {
        if self.b != 2 {
            return Err(Error::RequiresTwoBlocks(self.b));
        }
        Ok(())
    }
}

/// The indeterminate `x_{ij}`: `i` indexes the first row of the circulant,
/// `j` the block, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircVar {
    pub i: u32,
    pub j: u32,
}

/// `t × nb` matrix of indeterminates or zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Option<CircVar>>,
}

impl TruncatedMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<CircVar> {
        self.entries[row * self.cols + col]
    }
}

/// `T = [T_1 ⋯ T_b]`: entry `(r, c)` of block `j` is `x_{c−r+1, j}` when
/// `c >= r` and zero otherwise (1-based `r`, `c`).
pub fn build_t(shape: &PluriShape) -> TruncatedMatrix {
    let (n, t) = (shape.n as usize, shape.t as usize);
    let cols = n * shape.b as usize;
    let mut entries = vec![None; t * cols];
    for j in 0..shape.b as usize {
        for r in 0..t {
            for c in r..n {
                entries[r * cols + j * n + c] = Some(CircVar { i: (c - r + 1) as u32, j: j as u32 + 1 });
            }
        }
    }
    TruncatedMatrix { rows: t, cols, entries }
}

/// Circulant block `M_j` (rows 1..t only), for comparison with `T_j`.
pub fn circulant_rows(shape: &PluriShape, block: u32) -> Vec<Vec<CircVar>> {
    let n = shape.n;
    (0..shape.t)
        .map(|r| (0..n).map(|c| CircVar { i: (c + n - r) % n + 1, j: block }).collect())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// `z_ℓ`, 1-based.
    Z(u32),
    /// An indeterminate that never occurs in `G(J_t)`; `Star(k)` is the
    /// `k`-th such one, 1-based.
    Star(u32),
}

/// Re-indexing of `x_{ij}` into `z_ℓ` labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReindexMap {
    forward: BTreeMap<CircVar, Label>,
    backward: Vec<CircVar>,
    starred: Vec<CircVar>,
}

impl ReindexMap {
    pub fn forward(&self, x: CircVar) -> Label {
        self.forward[&x]
    }

    /// The `x_{ij}` renamed to `z_ℓ`.
    pub fn backward(&self, l: u32) -> Option<CircVar> {
        self.backward.get(l.checked_sub(1)? as usize).copied()
    }

    pub fn meaningful(&self) -> usize {
        self.backward.len()
    }

    pub fn starred(&self) -> &[CircVar] {
        &self.starred
    }

    /// Position of the label in [`variables`](Self::variables).
    pub fn var_index(&self, label: Label) -> usize {
        match label {
            Label::Z(l) => l as usize - 1,
            Label::Star(k) => self.backward.len() + k as usize - 1,
        }
    }

    /// `z1, …, zK` followed by the starred indeterminates under their
    /// original names `x{i}_{j}`.
    pub fn variables(&self) -> VariableSet {
        let mut names: Vec<String> = (1..=self.backward.len()).map(|l| format!("z{l}")).collect();
        names.extend(self.starred.iter().map(|x| format!("x{}_{}", x.i, x.j)));
        VariableSet::new(names).expect("labels are distinct")
    }
}

/// Re-indexing for any `b`: the last row of every block first, left to
/// right; then the leftover first-row entries of blocks `1, …, b−1`; the
/// leftover first-row entries of block `b` are starred. For `b = 2` this is
/// exactly the `T'_1, T'_2` layout.
pub fn reindex(shape: &PluriShape) -> ReindexMap {
    let (d, n) = (shape.d(), shape.n);
    let mut forward = BTreeMap::new();
    let mut backward = Vec::new();
    let mut starred = Vec::new();
    for j in 1..=shape.b {
        for i in 1..=d {
            let x = CircVar { i, j };
            backward.push(x);
            forward.insert(x, Label::Z(backward.len() as u32));
        }
    }
    for j in 1..=shape.b {
        for i in d + 1..=n {
            let x = CircVar { i, j };
            if j < shape.b {
                backward.push(x);
                forward.insert(x, Label::Z(backward.len() as u32));
            } else {
                starred.push(x);
                forward.insert(x, Label::Star(starred.len() as u32));
            }
        }
    }
    ReindexMap { forward, backward, starred }
}

/// [`reindex`] restricted to `b = 2`.
pub fn reindex_b2(shape: &PluriShape) -> Result<ReindexMap> {
    shape.require_two_blocks()?;
    Ok(reindex(shape))
}

/// `G(J_t)` from the diagonal products of `T`, in the re-indexed variables.
pub fn gens_jt_diagonals(shape: &PluriShape) -> MonomialIdeal {
    let matrix = build_t(shape);
    let map = reindex(shape);
    let vars = map.variables();
    let nvars = vars.len();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut chosen = Vec::with_capacity(matrix.rows);

    fn walk(
        matrix: &TruncatedMatrix,
        map: &ReindexMap,
        row: usize,
        first_col: usize,
        chosen: &mut Vec<usize>,
        found: &mut BTreeSet<Vec<usize>>,
    ) {
        if row == matrix.rows {
            let mut key = chosen.clone();
            key.sort_unstable();
            found.insert(key);
            return;
        }
        // Leave room for the remaining rows.
        let last_col = matrix.cols - (matrix.rows - row);
        for c in first_col..=last_col {
            if let Some(x) = matrix.get(row, c) {
                chosen.push(map.var_index(map.forward(x)));
                walk(matrix, map, row + 1, c + 1, chosen, found);
                chosen.pop();
            }
        }
    }
    walk(&matrix, &map, 0, 0, &mut chosen, &mut found);
    let gens = found.into_iter().map(|idx| Monomial::from_indices(nvars, &idx));
    MonomialIdeal::minimalize(vars, gens).expect("generators live in the ring")
}

/// Upper bound on the `z_{2d+…}` indices in the unique representation of a
/// generator of `J_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepresentationBound {
    /// `j_r <= 2d + t − q − r`: the first-row indices together with the
    /// `z_1..z_d` factors occupy at most `t − (j_r − 2d)` diagonal slots.
    Exact,
    /// `j_r <= 2d + t − 1 − q`, as the parametrization is usually written.
    /// It admits non-generators such as `z_5^2` for `n = 3, t = 2`.
    Loose,
}

/// All products `z_{i_1}⋯z_{i_q} z_{j_1}⋯z_{j_r} z_{k_1}⋯z_{k_s}` with
/// `1 <= i ≤ d`, `2d+1 <= j <= bound`, `d+1 <= k <= 2d`, `q + r + s = t`,
/// each index sequence weakly increasing. Duplicates are kept so that
/// injectivity can be checked.
pub fn representation_monomials(shape: &PluriShape, bound: RepresentationBound) -> Result<Vec<Monomial>> {
    shape.require_two_blocks()?;
    let map = reindex(shape);
    let nvars = map.variables().len();
    let (d, t) = (shape.d() as usize, shape.t as usize);
    let mut out = Vec::new();
    for q in 0..=t {
        for r in 0..=t - q {
            let s = t - q - r;
            let top = match bound {
                RepresentationBound::Exact => (2 * d + t) as i64 - q as i64 - r as i64,
                RepresentationBound::Loose => (2 * d + t) as i64 - 1 - q as i64,
            };
            let j_range = (2 * d + 1, top.max(2 * d as i64) as usize);
            for is in multisets(1, d, q) {
                for js in multisets(j_range.0, j_range.1, r) {
                    for ks in multisets(d + 1, 2 * d, s) {
                        let idx: Vec<usize> = is.iter().chain(&js).chain(&ks).map(|&z| z - 1).collect();
                        out.push(Monomial::from_indices(nvars, &idx));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Weakly increasing sequences of length `len` over `lo..=hi`.
fn multisets(lo: usize, hi: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    if lo > hi {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![lo; len];
    loop {
        out.push(cur.clone());
        let Some(p) = (0..len).rev().find(|&p| cur[p] < hi) else {
            return out;
        };
        let v = cur[p] + 1;
        cur[p..].iter_mut().for_each(|c| *c = v);
    }
}

/// `G(J_t)` from the unique-representation parametrization. Fails if two
/// parameter choices give the same monomial.
pub fn gens_jt_representation(shape: &PluriShape) -> Result<MonomialIdeal> {
    let monos = representation_monomials(shape, RepresentationBound::Exact)?;
    let distinct: BTreeSet<&Monomial> = monos.iter().collect();
    if distinct.len() != monos.len() {
        return Err(Error::Invariant(format!(
            "representation is not injective for {shape:?}: {} parameters, {} monomials",
            monos.len(),
            distinct.len()
        )));
    }
    let vars = reindex(shape).variables();
    MonomialIdeal::minimalize(vars, monos)
}

/// Number of generators with largest index `ℓ`, for `ℓ = 1, …, K` (entry
/// `ℓ−1` of the result), `K` the number of re-indexed variables.
pub fn max_index_histogram(ideal: &MonomialIdeal, meaningful: usize) -> Vec<usize> {
    let mut hist = vec![0; meaningful];
    for g in ideal.gens() {
        if let Some(m) = g.max_index() {
            hist[m] += 1;
        }
    }
    hist
}

/// First closed form for `ν_{2d+j}`:
/// `Σ_{k=0}^{t−j−1} C(n−t+j+k, k)·C(n−k−1, n−t)`.
///
/// Also meaningful for `1 − d <= j <= 0`, where it reproduces `ν_{2d+j}` of
/// the first range.
pub fn nu_first_expression(n: u32, t: u32, j: i64) -> BigUint {
    let (n, t) = (n as i64, t as i64);
    (0..=(t - j - 1))
        .map(|k| binom_int(n - t + j + k, k) * binom_int(n - k - 1, n - t))
        .sum()
}

/// `Σ_{τ=1}^{n−t+1} C(n+τ−1, t−j−1)·C(n−t+j−τ, j−1)`.
pub fn nu_second_expression(n: u32, t: u32, j: i64) -> BigUint {
    let (n, t) = (n as i64, t as i64);
    (1..=(n - t + 1))
        .map(|tau| binom_int(n + tau - 1, t - j - 1) * binom_int(n - t + j - tau, j - 1))
        .sum()
}

/// `Σ_{τ=1}^{n−t+1} C(n, t−j−τ)·C(n−t+j, j+τ−1)`.
pub fn nu_third_expression(n: u32, t: u32, j: i64) -> BigUint {
    let (n, t) = (n as i64, t as i64);
    (1..=(n - t + 1))
        .map(|tau| binom_int(n, t - j - tau) * binom_int(n - t + j, j + tau - 1))
        .sum()
}

/// `ν_1, …, ν_{2d+t−1}`: `ν_ℓ = C(t+ℓ−2, t−1)` for `ℓ <= 2d`, and the common
/// value of the three closed forms for `ℓ = 2d + j`, `1 <= j <= t−1`.
pub fn nu_counts(shape: &PluriShape) -> Result<Vec<BigUint>> {
    shape.require_two_blocks()?;
    let (n, t, d) = (shape.n, shape.t, shape.d());
    let mut nu: Vec<BigUint> = (1..=2 * d)
        .map(|l| binom((t + l - 2) as u64, (t - 1) as i64))
        .collect();
    for j in 1..t as i64 {
        let first = nu_first_expression(n, t, j);
        let second = nu_second_expression(n, t, j);
        let third = nu_third_expression(n, t, j);
        if first != second || first != third {
            return Err(Error::Invariant(format!(
                "nu expressions disagree at n={n}, t={t}, j={j}: {first}, {second}, {third}"
            )));
        }
        nu.push(first);
    }
    Ok(nu)
}

/// `β_q(J_t) = Σ_{ℓ=q+1}^{2n−t+1} C(ℓ−1, q)·ν_ℓ` for `q = 0, …, 2n − t`,
/// as a linear table.
pub fn betti_jt(shape: &PluriShape) -> Result<BettiTable> {
    let nu = nu_counts(shape)?;
    let top = (2 * shape.n - shape.t) as usize;
    let totals: Vec<BigUint> = (0..=top)
        .map(|q| {
            nu.iter()
                .enumerate()
                .skip(q)
                .map(|(l0, v)| binom(l0 as u64, q as i64) * v)
                .sum()
        })
        .collect();
    Ok(BettiTable::linear(shape.t, &totals))
}

/// Betti numbers of `J_t` through the generic Eliahou–Kervaire count on the
/// enumerated generators.
pub fn betti_jt_ek(shape: &PluriShape) -> Result<BettiTable> {
    shape.require_two_blocks()?;
    gens_jt_diagonals(shape).betti_ek()
}

/// Entrywise comparison of `β(J_t)` and `β(I_t(D))` for `b = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiComparison {
    pub n: u32,
    pub t: u32,
    pub betti_jt: Vec<BigUint>,
    pub betti_transversal: Vec<BigUint>,
    pub equal: bool,
    /// Equality is a theorem for `t ∈ {n, n−1, n−2}`; other rows are
    /// informational.
    pub asserted: bool,
}

pub fn compare_betti(n: u32, t: u32) -> Result<BettiComparison> {
    let shape = PluriShape::new(n, 2, t)?;
    let jt = betti_jt(&shape)?;
    let top = 2 * n - t;
    let betti_jt: Vec<BigUint> = (0..=top as usize).map(|q| jt.total(q)).collect();
    let betti_transversal: Vec<BigUint> = (0..=top).map(|q| betti_formula_b2(n, t, q)).collect();
    let equal = betti_jt == betti_transversal;
    Ok(BettiComparison { n, t, betti_jt, betti_transversal, equal, asserted: t + 2 >= n })
}

/// Radical of `J_t` against `Q = (z_1, …, z_{2d})`, plus a witness that
/// `J_t` is not `Q`-primary when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalReport {
    pub radical: MonomialIdeal,
    pub expected: MonomialIdeal,
    pub equal: bool,
    /// `(u, v)` with `u·v ∈ J_t`, `u ∉ J_t`, `v ∉ rad(J_t)`.
    pub primary_witness: Option<(Monomial, Monomial)>,
}

pub fn check_radical_q(shape: &PluriShape) -> Result<RadicalReport> {
    shape.require_two_blocks()?;
    let ideal = gens_jt_diagonals(shape);
    let radical = ideal.radical();
    let expected = MonomialIdeal::generated_by_variables(ideal.vars().clone(), 0..2 * shape.d() as usize);
    let equal = radical == expected;
    let primary_witness = primaryness_witness(&ideal, &radical);
    Ok(RadicalReport { radical, expected, equal, primary_witness })
}

fn primaryness_witness(ideal: &MonomialIdeal, radical: &MonomialIdeal) -> Option<(Monomial, Monomial)> {
    for w in ideal.gens() {
        for u in divisors(w) {
            if u.degree() == 0 || u.degree() == w.degree() || ideal.contains(&u) {
                continue;
            }
            let v = w.checked_div(&u).expect("u divides w");
            if !radical.contains(&v) {
                return Some((u, v));
            }
        }
    }
    None
}

fn divisors(w: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(w.nvars())];
    for (i, &e) in w.exponents().iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for base in &out {
            let mut exps = base.exponents().to_vec();
            for k in 0..=e {
                exps[i] = k;
                next.push(Monomial::new(exps.clone()));
            }
        }
        out = next;
    }
    out.sort();
    out
}
