//! JSON report types and their CSV / aligned-table projections.
//!
//! JSON is canonical. Big integers are JSON numbers when they fit in `u64`
//! and decimal strings otherwise.

use std::fmt::Write as _;

use monres_core::oracle::MultigradedBetti;
use monres_core::pluricirculant::{RadicalReport, BettiComparison};
use monres_core::resolution::{Certificate, FreeComplex};
use monres_core::{BettiTable, BigUint, MonomialIdeal};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Big(pub BigUint);

impl Serialize for Big {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(&self.0) {
            Ok(v) => s.serialize_u64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl std::fmt::Display for Big {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn bigs(v: &[BigUint]) -> Vec<Big> {
    v.iter().cloned().map(Big).collect()
}

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// A serializable report with a flat tabular view.
pub trait Report: Serialize {
    fn columns(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;
}

pub fn render<R: Report>(report: &R, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(report.columns()).expect("in-memory write");
            for row in report.rows() {
                w.write_record(&row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Table => {
            let header: Vec<String> = report.columns().iter().map(|s| s.to_string()).collect();
            let rows = report.rows();
            let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
            for r in &rows {
                for (w, c) in width.iter_mut().zip(r) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let mut out = String::new();
            for r in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> = r.iter().zip(&width).map(|(c, &w)| format!("{c:>w$}")).collect();
                writeln!(out, "{}", cells.join("  ").trim_end()).expect("writing to a String");
            }
            out
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedRow {
    pub q: usize,
    pub j: u32,
    pub value: Big,
}

#[derive(Debug, Clone, Serialize)]
pub struct MultigradedRow {
    pub q: usize,
    pub alpha: Vec<u32>,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiReport {
    pub ideal: String,
    pub method: String,
    pub totals: Vec<Big>,
    pub graded: Vec<GradedRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multigraded: Option<Vec<MultigradedRow>>,
}

impl BettiReport {
    pub fn new(ideal: impl Into<String>, method: impl Into<String>, table: &BettiTable) -> Self {
        BettiReport {
            ideal: ideal.into(),
            method: method.into(),
            totals: bigs(&table.totals()),
            graded: table
                .graded_entries()
                .map(|(q, j, v)| GradedRow { q, j, value: Big(v.clone()) })
                .collect(),
            multigraded: None,
        }
    }

    pub fn with_multigraded(mut self, mb: &MultigradedBetti) -> Self {
        self.multigraded = Some(
            mb.entries.iter().map(|e| MultigradedRow { q: e.q, alpha: e.alpha.clone(), dim: e.dim }).collect(),
        );
        self
    }

    pub fn totals_line(&self) -> String {
        self.totals.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

impl Report for BettiReport {
    fn columns(&self) -> Vec<&'static str> {
        vec!["q", "j", "beta"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.graded.iter().map(|g| vec![g.q.to_string(), g.j.to_string(), g.value.to_string()]).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealReport {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
}

impl IdealReport {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        IdealReport {
            vars: ideal.vars().names().to_vec(),
            gens: ideal.gens().iter().map(|g| g.display(ideal.vars()).to_string()).collect(),
        }
    }
}

impl Report for IdealReport {
    fn columns(&self) -> Vec<&'static str> {
        vec!["generator"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.gens.iter().map(|g| vec![g.clone()]).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonRow {
    pub n: u32,
    pub t: u32,
    pub betti_jt: Vec<Big>,
    pub betti_transversal: Vec<Big>,
    pub equal: bool,
    /// Equality is proven for this `(n, t)`; otherwise the row is informational.
    pub asserted: bool,
}

impl From<&BettiComparison> for ComparisonRow {
    fn from(r: &BettiComparison) -> Self {
        ComparisonRow {
            n: r.n,
            t: r.t,
            betti_jt: bigs(&r.betti_jt),
            betti_transversal: bigs(&r.betti_transversal),
            equal: r.equal,
            asserted: r.asserted,
        }
    }
}

impl Report for ComparisonRow {
    fn columns(&self) -> Vec<&'static str> {
        ScanReport::COLUMNS.to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![ScanReport::row(self)]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub n_max: u32,
    pub rows: Vec<ComparisonRow>,
}

impl ScanReport {
    const COLUMNS: [&'static str; 6] = ["n", "t", "betti_jt", "betti_transversal", "equal", "asserted"];

    fn row(r: &ComparisonRow) -> Vec<String> {
        vec![
            r.n.to_string(),
            r.t.to_string(),
            join(&r.betti_jt),
            join(&r.betti_transversal),
            r.equal.to_string(),
            r.asserted.to_string(),
        ]
    }
}

impl Report for ScanReport {
    fn columns(&self) -> Vec<&'static str> {
        Self::COLUMNS.to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(Self::row).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NuReport {
    pub n: u32,
    pub t: u32,
    pub d: u32,
    pub nu: Vec<Big>,
    pub histogram: Vec<usize>,
    pub generators: usize,
}

impl Report for NuReport {
    fn columns(&self) -> Vec<&'static str> {
        vec!["l", "nu", "histogram"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.nu
            .iter()
            .zip(&self.histogram)
            .enumerate()
            .map(|(l, (v, h))| vec![(l + 1).to_string(), v.to_string(), h.to_string()])
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub blocks: Vec<u32>,
    pub t: u32,
    pub passed: bool,
    pub ranks: Vec<usize>,
    pub expected_ranks: Vec<Big>,
    pub rewrites: usize,
    pub checks: Vec<CheckRow>,
}

impl From<&Certificate> for CertificateReport {
    fn from(c: &Certificate) -> Self {
        CertificateReport {
            blocks: c.blocks.clone(),
            t: c.t,
            passed: c.passed(),
            ranks: c.ranks.clone(),
            expected_ranks: bigs(&c.expected_ranks),
            rewrites: c.rewrites,
            checks: c
                .checks
                .iter()
                .map(|k| CheckRow { name: k.kind.name().into(), passed: k.passed(), detail: k.failure.clone() })
                .collect(),
        }
    }
}

impl Report for CertificateReport {
    fn columns(&self) -> Vec<&'static str> {
        vec!["check", "passed", "detail"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.checks
            .iter()
            .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone().unwrap_or_default()])
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Triplet {
    pub row: usize,
    pub col: usize,
    pub sign: i64,
    pub variable: String,
}

/// `d_q` as sparse triplets, rows indexing `L_{q−1}`.
#[derive(Debug, Clone, Serialize)]
pub struct BoundaryReport {
    pub q: usize,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Triplet>,
}

impl BoundaryReport {
    pub fn new(complex: &FreeComplex, q: usize) -> Self {
        let vars = complex.variables();
        BoundaryReport {
            q,
            rows: complex.module(q.saturating_sub(1)).len(),
            cols: complex.module(q).len(),
            entries: complex
                .boundary(q)
                .iter()
                .map(|e| Triplet { row: e.row, col: e.col, sign: e.coef, variable: vars.name(e.var).into() })
                .collect(),
        }
    }
}

impl Report for BoundaryReport {
    fn columns(&self) -> Vec<&'static str> {
        vec!["row", "col", "sign", "variable"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|e| vec![e.row.to_string(), e.col.to_string(), e.sign.to_string(), e.variable.clone()])
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimaryWitness {
    pub u: String,
    pub v: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RadicalRow {
    pub n: u32,
    pub t: u32,
    pub radical: Vec<String>,
    pub expected: Vec<String>,
    pub equal: bool,
    pub primary_witness: Option<PrimaryWitness>,
}

impl RadicalRow {
    pub fn new(n: u32, t: u32, r: &RadicalReport) -> Self {
        let vars = r.radical.vars();
        let show = |i: &MonomialIdeal| IdealReport::new(i).gens;
        RadicalRow {
            n,
            t,
            radical: show(&r.radical),
            expected: show(&r.expected),
            equal: r.equal,
            primary_witness: r.primary_witness.as_ref().map(|(u, v)| PrimaryWitness {
                u: u.display(vars).to_string(),
                v: v.display(vars).to_string(),
            }),
        }
    }
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckRow>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckRow>) -> Self {
        SuiteReport { suite: suite.into(), passed: checks.iter().all(|c| c.passed), checks }
    }

    pub fn first_failure(&self) -> Option<&CheckRow> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl Report for SuiteReport {
    fn columns(&self) -> Vec<&'static str> {
        vec!["check", "passed", "detail"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.checks
            .iter()
            .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone().unwrap_or_default()])
            .collect()
    }
}

/// Several suite reports, as produced by `verify all`.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl Report for VerifyReport {
    fn columns(&self) -> Vec<&'static str> {
        vec!["suite", "check", "passed", "detail"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.suites
            .iter()
            .flat_map(|s| {
                s.checks.iter().map(move |c| {
                    vec![s.suite.clone(), c.name.clone(), c.passed.to_string(), c.detail.clone().unwrap_or_default()]
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_serializes_as_number_or_string() {
        assert_eq!(serde_json::to_string(&Big(7u32.into())).unwrap(), "7");
        let huge: BigUint = BigUint::from(u64::MAX) + 1u32;
        assert_eq!(serde_json::to_string(&Big(huge)).unwrap(), "\"18446744073709551616\"");
    }

    #[test]
    fn projections() {
        let table = BettiTable::linear(2, &[4u32.into(), 4u32.into(), 1u32.into()]);
        let r = BettiReport::new("I", "formula", &table);
        assert_eq!(r.totals_line(), "4,4,1");
        assert_eq!(render(&r, Format::Csv), "q,j,beta\n0,2,4\n1,3,4\n2,4,1\n");
        assert_eq!(render(&r, Format::Table), "q  j  beta\n0  2     4\n1  3     4\n2  4     1\n");
        let json: serde_json::Value = serde_json::from_str(&render(&r, Format::Json)).unwrap();
        assert_eq!(json["totals"], serde_json::json!([4, 4, 1]));
    }
}
