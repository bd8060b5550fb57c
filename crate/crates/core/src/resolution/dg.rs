//! The multiplicative structure when every block has size one.
//!
//! With `b_1 = ⋯ = b_n = 1` a basis element `ξ ⊗ δ` is determined by its
//! rows and marked rows. Write `e_u` for an unmarked row and `f_u` for a
//! marked one (`f_u ↔ e_u ⊗ ε_u`). The algebra is the exterior algebra on
//! all `e_u, f_u` over `S = k[y_1, …, y_n]`, graded by the number of
//! exterior factors, with `d = Σ_u y_u ∂/∂f_u`. It is graded-commutative,
//! associative and satisfies Leibniz; on basis elements with at least two
//! markers `d` is `(−1)^{t−1}` times the boundary of `C_•`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;

use super::label::BasisLabel;
use crate::error::{Error, Result};
use crate::transversal::BlockShape;

/// `coef · y^y · e_E ∧ f_F`, exterior factors in canonical order: all `e`s
/// by increasing row, then all `f`s by increasing row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DgMonomial {
    pub y: Vec<u32>,
    pub e: u32,
    pub f: u32,
}

impl DgMonomial {
    pub fn degree(&self) -> u32 {
        self.e.count_ones() + self.f.count_ones()
    }

    /// Position bits: `e_u` at bit `u`, `f_u` at bit `n + u`.
    fn word(&self, n: usize) -> u64 {
        self.e as u64 | (self.f as u64) << n
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DgElement {
    terms: BTreeMap<DgMonomial, i64>,
}

impl DgElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DgMonomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn add_term(&mut self, mono: DgMonomial, coef: i64) {
        let c = self.terms.entry(mono).or_default();
        *c += coef;
        if *c == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&self, other: &DgElement) -> DgElement {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> DgElement {
        let mut out = DgElement::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Common exterior degree, `None` if mixed or zero.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(DgMonomial::degree);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DgAlgebra {
    n: usize,
    t: u32,
}

impl DgAlgebra {
    pub fn new(shape: &BlockShape) -> Result<Self> {
        if shape.blocks().iter().any(|&b| b != 1) {
            return Err(Error::RequiresUnitBlocks);
        }
        if shape.n() > 31 {
            return Err(Error::InvalidShape("at most 31 rows".into()));
        }
        Ok(DgAlgebra { n: shape.n() as usize, t: shape.t() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn monomial(&self, e: u32, f: u32) -> DgMonomial {
        DgMonomial { y: vec![0; self.n], e, f }
    }

    /// `ξ ⊗ δ ↦ e_{rows∖δ} ∧ f_δ`.
    pub fn from_label(&self, label: &BasisLabel) -> DgElement {
        let rows = label.rows();
        let f = label.delta().iter().fold(0u32, |a, &k| a | 1 << rows[k as usize]);
        let all = rows.iter().fold(0u32, |a, &r| a | 1 << r);
        let mut out = DgElement::zero();
        out.add_term(self.monomial(all & !f, f), 1);
        out
    }

    pub fn multiply(&self, a: &DgElement, b: &DgElement) -> DgElement {
        let mut out = DgElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let (wa, wb) = (ma.word(self.n), mb.word(self.n));
                if wa & wb != 0 {
                    continue;
                }
                // Each factor of b moves past the factors of a above it.
                let swaps: u32 = (0..2 * self.n).filter(|&i| wb >> i & 1 == 1).map(|i| (wa >> i >> 1).count_ones()).sum();
                let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
                let y = ma.y.iter().zip(&mb.y).map(|(p, q)| p + q).collect();
                out.add_term(DgMonomial { y, e: ma.e | mb.e, f: ma.f | mb.f }, sign * ca * cb);
            }
        }
        out
    }

    pub fn differential(&self, a: &DgElement) -> DgElement {
        let mut out = DgElement::zero();
        for (m, c) in a.terms() {
            for u in 0..self.n {
                if m.f >> u & 1 == 0 {
                    continue;
                }
                let before = m.e.count_ones() + (m.f & ((1 << u) - 1)).count_ones();
                let sign = if before % 2 == 0 { 1 } else { -1 };
                let mut y = m.y.clone();
                y[u] += 1;
                out.add_term(DgMonomial { y, e: m.e, f: m.f & !(1 << u) }, sign * c);
            }
        }
        out
    }

    /// Sum of up to three random terms of exterior degree `degree`, each with
    /// disjoint `e` and `f` rows, a coefficient in `−3..=3` and a `y`
    /// monomial of degree at most one.
    pub fn random_homogeneous(&self, degree: u32, rng: &mut impl RngCore) -> DgElement {
        let mut out = DgElement::zero();
        let below = |rng: &mut dyn RngCore, k: u64| (rng.next_u64() % k) as usize;
        let terms = 1 + below(rng, 3);
        for _ in 0..terms {
            let mut rows: Vec<usize> = (0..self.n).collect();
            // Partial Fisher–Yates for `degree` distinct rows.
            for i in 0..degree as usize {
                let j = i + below(rng, (self.n - i) as u64);
                rows.swap(i, j);
            }
            let (mut e, mut f) = (0u32, 0u32);
            for &r in &rows[..degree as usize] {
                if rng.next_u32() & 1 == 0 {
                    e |= 1 << r;
                } else {
                    f |= 1 << r;
                }
            }
            let mut mono = self.monomial(e, f);
            let pick = below(rng, self.n as u64 + 1);
            if pick < self.n {
                mono.y[pick] += 1;
            }
            let coef = below(rng, 7) as i64 - 3;
            out.add_term(mono, coef);
        }
        out
    }
}

/// Graded commutativity and Leibniz on `samples` random pairs, and
/// associativity on `samples` random triples, all of random degrees.
/// Returns the first violated identity.
pub fn check_dg_axioms(alg: &DgAlgebra, samples: usize, rng: &mut impl RngCore) -> Result<(), alloc::string::String> {
    let top = 2 * alg.n as u64 + 1;
    let random = |rng: &mut dyn RngCore| {
        let deg = (rng.next_u64() % top) as u32;
        alg.random_homogeneous(deg.min(alg.n as u32), &mut RngRef(rng))
    };
    let sign = |k: u32| if k.is_multiple_of(2) { 1 } else { -1 };
    for i in 0..samples {
        let (a, b, c) = (random(rng), random(rng), random(rng));
        let (da, db) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
        let ab = alg.multiply(&a, &b);
        if ab != alg.multiply(&b, &a).scale(sign(da * db)) {
            return Err(alloc::format!("sample {i}: ab ≠ (−1)^(|a||b|) ba for a = {a:?}, b = {b:?}"));
        }
        if alg.multiply(&ab, &c) != alg.multiply(&a, &alg.multiply(&b, &c)) {
            return Err(alloc::format!("sample {i}: (ab)c ≠ a(bc) for a = {a:?}, b = {b:?}, c = {c:?}"));
        }
        let lhs = alg.differential(&ab);
        let rhs = alg
            .multiply(&alg.differential(&a), &b)
            .add(&alg.multiply(&a, &alg.differential(&b)).scale(sign(da)));
        if lhs != rhs {
            return Err(alloc::format!("sample {i}: Leibniz fails for a = {a:?}, b = {b:?}"));
        }
    }
    Ok(())
}

/// Lets a `&mut dyn RngCore` be passed where `impl RngCore` is expected.
struct RngRef<'a>(&'a mut dyn RngCore);

impl RngCore for RngRef<'_> {
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.0.fill_bytes(dst)
    }
}

/// Product of two elements for a shape with unit blocks.
pub fn dg_multiply(shape: &BlockShape, a: &DgElement, b: &DgElement) -> Result<DgElement> {
    Ok(DgAlgebra::new(shape)?.multiply(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::complex::{raw_boundary, SignConvention, TermOrigin};
    use crate::resolution::label::enumerate_basis;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(n: u32, t: u32) -> DgAlgebra {
        DgAlgebra::new(&BlockShape::new(vec![1; n as usize], t).unwrap()).unwrap()
    }

    fn single(a: &DgAlgebra, e: u32, f: u32) -> DgElement {
        let mut x = DgElement::zero();
        x.add_term(a.monomial(e, f), 1);
        x
    }

    #[test]
    fn rejects_wide_blocks() {
        let shape = BlockShape::new(vec![1, 2], 1).unwrap();
        assert_eq!(DgAlgebra::new(&shape), Err(Error::RequiresUnitBlocks));
    }

    #[test]
    fn disjoint_and_overlapping_products() {
        let a = alg(4, 2);
        // (e_1⊗ε_1)(e_2⊗ε_2) = f_1 f_2.
        let p = a.multiply(&single(&a, 0, 0b01), &single(&a, 0, 0b10));
        assert_eq!(p, single(&a, 0, 0b11));
        assert!(a.multiply(&single(&a, 0b01, 0), &single(&a, 0b01, 0b10)).is_zero());
        assert!(a.multiply(&single(&a, 0, 0b01), &single(&a, 0b10, 0b01)).is_zero());
        // f_2 · e_1 = −e_1 f_2.
        assert_eq!(a.multiply(&single(&a, 0, 0b10), &single(&a, 0b01, 0)), single(&a, 0b01, 0b10).scale(-1));
    }

    #[test]
    fn d_squared_vanishes() {
        let a = alg(4, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for deg in 0..=4 {
            let x = a.random_homogeneous(deg, &mut rng);
            assert!(a.differential(&a.differential(&x)).is_zero());
        }
    }

    #[test]
    fn differential_matches_lambda() {
        for (n, t) in [(4, 2), (5, 3), (4, 1)] {
            let shape = BlockShape::new(vec![1; n], t).unwrap();
            let a = DgAlgebra::new(&shape).unwrap();
            let global = if t % 2 == 1 { 1 } else { -1 };
            for q in 1..=n as u32 - t {
                for label in enumerate_basis(&shape, q) {
                    let mut want = DgElement::zero();
                    for term in raw_boundary(&shape, &label, SignConvention::Graded) {
                        assert_eq!(term.origin, TermOrigin::Lambda);
                        let rows: u32 = term.rows.iter().fold(0, |m, &r| m | 1 << r);
                        let f: u32 = term.delta.iter().fold(0, |m, &k| m | 1 << term.rows[k as usize]);
                        let mut mono = a.monomial(rows & !f, f);
                        mono.y[term.var] += 1;
                        want.add_term(mono, term.coef * global);
                    }
                    assert_eq!(a.differential(&a.from_label(&label)), want, "n={n} t={t} {label:?}");
                }
            }
        }
    }

    #[test]
    fn axioms_hold_on_samples() {
        let a = alg(4, 2);
        check_dg_axioms(&a, 100, &mut ChaCha8Rng::seed_from_u64(2024)).unwrap();
    }

    #[test]
    fn row_overlap_rule_breaks_leibniz() {
        // Under a row-overlap rule (e1 f2)(e3 f1) = 0 and
        // d(e1 f2)(e3 f1) = ±y2 e1 e3 f1 = 0, yet (e1 f2) d(e3 f1) = ±y1 e1 e3 f2.
        let a = alg(4, 2);
        let x = single(&a, 0b001, 0b010);
        let y = single(&a, 0b100, 0b001);
        assert!(!a.multiply(&x, &y).is_zero());
        assert!(!a.multiply(&x, &a.differential(&y)).is_zero());
    }

    #[test]
    fn random_elements_are_homogeneous() {
        let a = alg(4, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for deg in 1..=4 {
            let x = a.random_homogeneous(deg, &mut rng);
            assert!(x.is_zero() || x.degree() == Some(deg));
        }
    }
}
