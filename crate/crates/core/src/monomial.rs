//! Monomials as exponent vectors over an ordered set of variables.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Ordered variable labels. Position in the list is the variable index used
/// by `max(w)`, stability and Borel checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Arc<[String]>,
}

impl VariableSet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || a.chars().any(|c| c.is_whitespace() || c == '^') {
                return Err(Error::InvalidShape(alloc::format!("bad variable label {a:?}")));
            }
            if names[..i].contains(a) {
                return Err(Error::InvalidShape(alloc::format!("duplicate variable label {a}")));
            }
        }
        Ok(VariableSet { names: names.into() })
    }

    /// `prefix1, prefix2, …, prefix{count}`.
    pub fn numbered(prefix: &str, count: usize) -> Self {
        let names = (1..=count).map(|i| alloc::format!("{prefix}{i}")).collect();
        VariableSet::new(names).expect("numbered labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A monomial `Π z_i^{a_i}`; the degree is cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(alloc::vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = alloc::vec![0; nvars];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    /// Product of the listed variables (repeats allowed).
    pub fn from_indices(nvars: usize, indices: &[usize]) -> Self {
        let mut exps = alloc::vec![0; nvars];
        for &i in indices {
            exps[i] += 1;
        }
        Monomial::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Largest index of a variable dividing the monomial, `None` for `1`.
    pub fn max_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: self.degree - other.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect())
    }

    /// Replace one factor `z_from` by `z_to`. Requires `z_from | self`.
    pub fn exchange(&self, from: usize, to: usize) -> Monomial {
        debug_assert!(self.exps[from] > 0);
        let mut exps = self.exps.clone();
        exps[from] -= 1;
        exps[to] += 1;
        Monomial { exps, degree: self.degree }
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial::new(self.exps.iter().map(|&e| e.min(1)).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn check_ambient(&self, vars: &VariableSet) -> Result<()> {
        if self.exps.len() != vars.len() {
            return Err(Error::AmbientMismatch { expected: vars.len(), found: self.exps.len() });
        }
        Ok(())
    }

    /// Text form: space-separated `name^exp` tokens, exponent 1 omitted,
    /// `1` for the unit monomial.
    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> DisplayMonomial<'a> {
        DisplayMonomial { mono: self, vars }
    }
}

/// Canonical generator order: lower degree first, then lexicographically
/// larger exponent vectors first (so `z1^2 < z1 z2 < z2^2 < z2 z3`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    vars: &'a VariableSet,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(self.vars.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
