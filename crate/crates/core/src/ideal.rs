//! Monomial ideals given by their minimal generators, and the structural
//! predicates used on them.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::betti::BettiTable;
use crate::combinat::binom;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, VariableSet};

/// A monomial ideal stored as its unique minimal generating set `G(I)`,
/// sorted in the canonical [`Monomial`] order. Two ideals are equal iff their
/// rings and minimal generators agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: VariableSet,
    gens: Vec<Monomial>,
}

/// `z_index · w / z_max(w) ∉ I` for the generator `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityWitness {
    pub generator: Monomial,
    pub index: usize,
}

/// `z_to · w / z_from ∉ I` with `to < from` and `z_from | w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelWitness {
    pub generator: Monomial,
    pub from: usize,
    pub to: usize,
}

impl fmt::Display for StabilityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "generator {:?} with variable index {} (0-based) leaves the ideal",
            self.generator.exponents(),
            self.index
        )
    }
}

impl MonomialIdeal {
    /// Ideal generated by `gens`, keeping only divisibility-minimal elements.
    pub fn minimalize(vars: VariableSet, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            g.check_ambient(&vars)?;
            all.push(g);
        }
        // Canonical order is degree-first, so a divisor always precedes its
        // multiples and a single forward pass suffices.
        all.sort();
        all.dedup();
        let mut min: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !min.iter().any(|h| h.divides(&g)) {
                min.push(g);
            }
        }
        Ok(MonomialIdeal { vars, gens: min })
    }

    pub fn zero(vars: VariableSet) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    /// `(z_i : i in indices)`.
    pub fn generated_by_variables(vars: VariableSet, indices: impl IntoIterator<Item = usize>) -> Self {
        let n = vars.len();
        let gens = indices.into_iter().map(|i| Monomial::var(n, i));
        MonomialIdeal::minimalize(vars, gens).expect("variables live in the ring")
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when every generator has the same degree.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn contains(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(w))
    }

    /// Componentwise maximum of the generators' exponent vectors.
    pub fn lcm_exponents(&self) -> Vec<u32> {
        let mut out = alloc::vec![0; self.nvars()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// First violation of the stability condition, checked on `G(I)`.
    pub fn stability_witness(&self) -> Option<StabilityWitness> {
        for w in &self.gens {
            let Some(m) = w.max_index() else { continue };
            for i in 0..m {
                if !self.contains(&w.exchange(m, i)) {
                    return Some(StabilityWitness { generator: w.clone(), index: i });
                }
            }
        }
        None
    }

    pub fn is_stable(&self) -> bool {
        self.stability_witness().is_none()
    }

    /// First violation of Borel-fixedness (strong stability), checked on `G(I)`.
    pub fn borel_witness(&self) -> Option<BorelWitness> {
        for w in &self.gens {
            for from in w.support().collect::<Vec<_>>() {
                for to in 0..from {
                    if !self.contains(&w.exchange(from, to)) {
                        return Some(BorelWitness { generator: w.clone(), from, to });
                    }
                }
            }
        }
        None
    }

    pub fn is_borel(&self) -> bool {
        self.borel_witness().is_none()
    }

    /// Whether the colon ideals `(g_1, …, g_{k−1}) : g_k` are all generated by
    /// variables, for the generators taken in `order` (a permutation of
    /// indices into [`gens`](Self::gens)).
    pub fn has_linear_quotients(&self, order: &[usize]) -> bool {
        let mut seen = BTreeSet::new();
        assert!(
            order.len() == self.gens.len() && order.iter().all(|&i| i < self.gens.len() && seen.insert(i)),
            "order must be a permutation of the generators"
        );
        for k in 1..order.len() {
            let gk = &self.gens[order[k]];
            let colon = order[..k].iter().map(|&i| {
                self.gens[i].lcm(gk).checked_div(gk).expect("g_k divides lcm")
            });
            let colon = MonomialIdeal::minimalize(self.vars.clone(), colon).expect("same ring");
            if colon.gens.iter().any(|c| c.degree() != 1) {
                return false;
            }
        }
        true
    }

    /// Linear quotients in the canonical generator order.
    pub fn has_linear_quotients_default(&self) -> bool {
        let order: Vec<usize> = (0..self.gens.len()).collect();
        self.has_linear_quotients(&order)
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.vars.clone(), self.gens.iter().map(Monomial::squarefree_part))
            .expect("same ring")
    }

    /// Betti numbers of a stable ideal from the Eliahou–Kervaire count
    /// `β_q = Σ_{w ∈ G(I)} C(max(w) − 1, q)`, with `w` contributing to
    /// internal degree `deg(w) + q`. Variable indices are 1-based in the
    /// formula.
    pub fn betti_ek(&self) -> Result<BettiTable> {
        if let Some(w) = self.stability_witness() {
            return Err(Error::NotStable(w));
        }
        let mut table = BettiTable::new();
        for w in &self.gens {
            // The unit ideal is stable with a single free generator.
            let below = w.max_index().unwrap_or(0) as u64;
            for q in 0..=below {
                table.add(q as usize, w.degree() + q as u32, binom(below, q as i64));
            }
        }
        Ok(table)
    }
}
