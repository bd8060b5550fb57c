//! Verification suites: each returns a [`SuiteReport`] with one row per
//! check and the first counterexample in `detail`.

use monres_core::combinat::{
    identity_absorb, identity_diagonal_sum, identity_shift, identity_vandermonde, identity_weighted_sum, partitions,
};
use monres_core::oracle::OracleConfig;
use monres_core::pluricirculant::{
    betti_jt, betti_jt_ek, check_radical_q, compare_betti, gens_jt_diagonals, gens_jt_representation,
    max_index_histogram, nu_counts, nu_first_expression, nu_second_expression, nu_third_expression,
};
use monres_core::resolution::{certify_resolution, check_dg_axioms, CertifyOptions, DgAlgebra};
use monres_core::transversal::{betti_table_formula, gens_transversal, BlockShape};
use monres_core::{combinat::binom, BigUint, PluriShape, Result};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::parallel::betti_oracle_par;
use crate::report::{CertificateReport, CheckRow, SuiteReport};

fn row(name: impl Into<String>, outcome: std::result::Result<String, String>) -> CheckRow {
    match outcome {
        Ok(detail) => CheckRow { name: name.into(), passed: true, detail: (!detail.is_empty()).then_some(detail) },
        Err(detail) => CheckRow { name: name.into(), passed: false, detail: Some(detail) },
    }
}

fn show(v: &[BigUint]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Equality of `β(J_t)` and `β(I_t(D))`, `b = 2`, for `n <= n_max` and
/// `t ∈ {n, n−1, n−2}`.
pub fn suite_equal_betti(n_max: u32) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for n in 1..=n_max {
        for t in (n.saturating_sub(2).max(1)..=n).rev() {
            let r = compare_betti(n, t)?;
            let outcome = if r.equal {
                Ok(show(&r.betti_jt))
            } else {
                Err(format!("J_t: {} vs I_t(D): {}", show(&r.betti_jt), show(&r.betti_transversal)))
            };
            checks.push(row(format!("n={n} t={t}"), outcome));
        }
    }
    Ok(SuiteReport::new("equal-betti", checks))
}

fn sweep<I: IntoIterator>(cases: I, f: impl Fn(&I::Item) -> (BigUint, BigUint)) -> std::result::Result<String, String>
where
    I::Item: std::fmt::Debug,
{
    let mut count = 0usize;
    for case in cases {
        let (lhs, rhs) = f(&case);
        if lhs != rhs {
            return Err(format!("{case:?}: {lhs} ≠ {rhs}"));
        }
        count += 1;
    }
    Ok(format!("{count} cases"))
}

/// The binomial identities behind the Betti formulas.
pub fn suite_identities(range: u64) -> SuiteReport {
    let cube = move || (0..=range).flat_map(move |a| (0..=range).flat_map(move |b| (0..=range).map(move |c| (a, b, c))));
    let weighted = (0..=20u64).flat_map(|n| (0..=n).map(move |q| (n, q)));
    let mut lists = Vec::new();
    for len in 1..=4u32 {
        for code in 0..5u64.pow(len) {
            let list: Vec<u64> = (0..len).map(|k| code / 5u64.pow(k) % 5).collect();
            for total in 0..=range {
                lists.push((list.clone(), total));
            }
        }
    }
    let diagonal = (0..=8u64).flat_map(|a| {
        (0..=a).flat_map(move |m| (0..=8u64).flat_map(move |c| (0..=c).map(move |n| (a, m, c, n))))
    });
    let checks = vec![
        row("absorb", sweep(cube(), |&(i, tau, q)| identity_absorb(i, tau, q))),
        row("shift", sweep(cube(), |&(n, rho, q)| identity_shift(n, rho, q))),
        row("weighted_sum", sweep(weighted, |&(n, q)| identity_weighted_sum(n, q))),
        row("vandermonde", sweep(lists, |(b, total)| identity_vandermonde(b, *total))),
        row("diagonal_sum", sweep(diagonal, |&(a, m, c, n)| identity_diagonal_sum(a, m, c, n))),
    ];
    SuiteReport::new("identities", checks)
}

/// Stability of `G(J_t)` for `b = 2`, `n <= n_max`, plus the two expected
/// failures: non-stable at `b = 3, n = t = 3`, non-Borel at `b = 2, n = t = 5`.
pub fn suite_stability(n_max: u32) -> Result<SuiteReport> {
    let mut checks: Vec<CheckRow> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            for t in 1..=n {
                let ideal = gens_jt_diagonals(&PluriShape::new(n, 2, t)?);
                if let Some(w) = ideal.stability_witness() {
                    return Ok(row(format!("stable n={n}"), Err(format!("t={t}: {}", w.generator.display(ideal.vars())))));
                }
            }
            Ok(row(format!("stable n={n}"), Ok(format!("t=1..{n}"))))
        })
        .collect::<Result<_>>()?;

    let b3 = gens_jt_diagonals(&PluriShape::new(3, 3, 3)?);
    checks.push(row(
        "non-stable b=3 n=t=3",
        match b3.stability_witness() {
            Some(w) => {
                let vars = b3.vars();
                let top = w.generator.max_index().expect("nonconstant");
                let moved = w.generator.exchange(top, w.index);
                if b3.contains(&moved) {
                    Err("witness does not leave the ideal".into())
                } else {
                    Ok(format!("{} → {} ∉ J_3", w.generator.display(vars), moved.display(vars)))
                }
            }
            None => Err("ideal is stable".into()),
        },
    ));
    let j5 = gens_jt_diagonals(&PluriShape::new(5, 2, 5)?);
    checks.push(row(
        "non-Borel b=2 n=t=5",
        match j5.borel_witness() {
            Some(w) => {
                let vars = j5.vars();
                let moved = w.generator.exchange(w.from, w.to);
                if j5.contains(&moved) {
                    Err("witness does not leave the ideal".into())
                } else {
                    Ok(format!("{} → {} ∉ J_5", w.generator.display(vars), moved.display(vars)))
                }
            }
            None => Err("ideal is Borel-fixed".into()),
        },
    ));
    Ok(SuiteReport::new("stability", checks))
}

/// `rad(J_t) = (z_1, …, z_{2d})` for `b = 2`, `n <= n_max`.
pub fn suite_radical(n_max: u32) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for n in 1..=n_max {
        for t in 1..=n {
            let r = check_radical_q(&PluriShape::new(n, 2, t)?)?;
            let gens = crate::report::IdealReport::new(&r.radical).gens.join(", ");
            let outcome = if r.equal { Ok(format!("({gens})")) } else { Err(format!("radical is ({gens})")) };
            checks.push(row(format!("n={n} t={t}"), outcome));
        }
    }
    Ok(SuiteReport::new("radical", checks))
}

/// Certificates for the given shapes; point evaluations for shape `i` use
/// the stream seeded with `seed + i`.
pub fn suite_resolution(
    shapes: &[BlockShape],
    options: &CertifyOptions,
    seed: u64,
) -> Result<(SuiteReport, Vec<CertificateReport>)> {
    let certs: Vec<CertificateReport> = shapes
        .par_iter()
        .enumerate()
        .map(|(i, shape)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            certify_resolution(shape, options, &mut rng).map(|c| CertificateReport::from(&c))
        })
        .collect::<Result<_>>()?;
    let checks = certs
        .iter()
        .map(|c| {
            let name = format!("blocks={:?} t={}", c.blocks, c.t);
            let outcome = match c.checks.iter().find(|k| !k.passed) {
                None => Ok(format!("ranks {:?}", c.ranks)),
                Some(k) => Err(format!("{}: {}", k.name, k.detail.clone().unwrap_or_default())),
            };
            row(name, outcome)
        })
        .collect();
    Ok((SuiteReport::new("resolution", checks), certs))
}

/// Every shape up to block order with `m <= m_max`, each with all `t`.
pub fn shapes_up_to(m_max: u32) -> Vec<BlockShape> {
    (1..=m_max)
        .flat_map(partitions)
        .flat_map(|blocks| {
            (1..=blocks.len() as u32).map(move |t| BlockShape::new(blocks.clone(), t).expect("valid shape"))
        })
        .collect()
}

/// Two enumerations of `G(J_t)`, `ν` against the max-index histogram, and
/// the closed forms for `ν`.
pub fn suite_generators(n_max: u32, nu_n_max: u32) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let mut outcome = Ok(String::new());
        for t in 1..=n {
            let shape = PluriShape::new(n, 2, t)?;
            let diag = gens_jt_diagonals(&shape);
            let rep = gens_jt_representation(&shape)?;
            let nu = nu_counts(&shape)?;
            let hist: Vec<BigUint> = max_index_histogram(&diag, shape.meaningful_vars() as usize)
                .into_iter()
                .map(BigUint::from)
                .collect();
            let total: BigUint = nu.iter().sum();
            if diag != rep {
                outcome = Err(format!("t={t}: enumerations differ"));
            } else if nu != hist {
                outcome = Err(format!("t={t}: ν = {} but histogram {}", show(&nu), show(&hist)));
            } else if total != BigUint::from(diag.gens().len()) {
                outcome = Err(format!("t={t}: Σν = {total} but |G| = {}", diag.gens().len()));
            }
            if outcome.is_err() {
                break;
            }
        }
        checks.push(row(format!("generators n={n}"), outcome));
    }
    let mut outcome = Ok(String::new());
    'scan: for n in 1..=nu_n_max {
        for t in 1..=n {
            for j in 1..t as i64 {
                let e = [nu_first_expression(n, t, j), nu_second_expression(n, t, j), nu_third_expression(n, t, j)];
                if e[0] != e[1] || e[0] != e[2] {
                    outcome = Err(format!("n={n} t={t} j={j}: {}", show(&e)));
                    break 'scan;
                }
            }
            let d = (n - t + 1) as i64;
            for j in 1 - d..=0 {
                let l = 2 * d + j;
                let want = binom((t as i64 + l - 2) as u64, t as i64 - 1);
                let got = nu_first_expression(n, t, j);
                if got != want {
                    outcome = Err(format!("n={n} t={t} ℓ={l}: {got} ≠ {want}"));
                    break 'scan;
                }
            }
        }
    }
    checks.push(row(format!("nu expressions n<={nu_n_max}"), outcome));
    Ok(SuiteReport::new("generators", checks))
}

/// Oracle against the closed form for every shape with `m <= m_max`; the
/// graded comparison also confirms the resolution is linear.
pub fn suite_oracle_transversal(m_max: u32, config: &OracleConfig) -> Result<SuiteReport> {
    let shapes = shapes_up_to(m_max);
    let checks = shapes
        .par_iter()
        .map(|shape| {
            let table = betti_oracle_par(&gens_transversal(shape), config)?.table();
            let formula = betti_table_formula(shape);
            let name = format!("blocks={:?} t={}", shape.blocks(), shape.t());
            let outcome = if table == formula && table.is_linear(shape.t()) {
                Ok(show(&table.totals()))
            } else {
                Err(format!("oracle {:?} vs formula {}", table, show(&formula.totals())))
            };
            Ok(row(name, outcome))
        })
        .collect::<Result<_>>()?;
    Ok(SuiteReport::new("oracle-transversal", checks))
}

/// Formula, Eliahou–Kervaire and oracle for `β(J_t)`, `b = 2`, `n <= n_max`,
/// `t ∈ {n, n−1, n−2}`.
pub fn suite_oracle_jt(n_max: u32, config: &OracleConfig) -> Result<SuiteReport> {
    let grid: Vec<(u32, u32)> =
        (1..=n_max).flat_map(|n| (n.saturating_sub(2).max(1)..=n).rev().map(move |t| (n, t))).collect();
    let checks = grid
        .par_iter()
        .map(|&(n, t)| {
            let shape = PluriShape::new(n, 2, t)?;
            let formula = betti_jt(&shape)?;
            let ek = betti_jt_ek(&shape)?;
            let oracle = betti_oracle_par(&gens_jt_diagonals(&shape), config)?.table();
            let outcome = if formula == ek && ek == oracle {
                Ok(show(&formula.totals()))
            } else {
                Err(format!(
                    "formula {} / ek {} / oracle {}",
                    show(&formula.totals()),
                    show(&ek.totals()),
                    show(&oracle.totals())
                ))
            };
            Ok(row(format!("n={n} t={t}"), outcome))
        })
        .collect::<Result<_>>()?;
    Ok(SuiteReport::new("oracle-jt", checks))
}

/// Graded commutativity, associativity and Leibniz for unit blocks.
pub fn suite_dg(n: u32, t: u32, samples: usize, seed: u64) -> Result<SuiteReport> {
    let alg = DgAlgebra::new(&BlockShape::new(vec![1; n as usize], t)?)?;
    let outcome = check_dg_axioms(&alg, samples, &mut ChaCha8Rng::seed_from_u64(seed)).map(|()| format!("{samples} samples"));
    Ok(SuiteReport::new("dg", vec![row(format!("n={n} t={t}"), outcome)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(suite_equal_betti(4).unwrap().passed);
        assert!(suite_identities(4).passed);
        assert!(suite_stability(5).unwrap().passed);
        assert!(suite_radical(4).unwrap().passed);
        assert!(suite_generators(4, 6).unwrap().passed);
        assert!(suite_oracle_transversal(4, &OracleConfig::default()).unwrap().passed);
        assert!(suite_oracle_jt(3, &OracleConfig::default()).unwrap().passed);
        assert!(suite_dg(4, 2, 10, 1).unwrap().passed);
        let shapes = [BlockShape::new(vec![2, 2], 2).unwrap()];
        let (report, certs) = suite_resolution(&shapes, &CertifyOptions::default(), 0).unwrap();
        assert!(report.passed);
        assert_eq!(certs[0].ranks, vec![4, 4, 1]);
    }

    #[test]
    fn block_order_does_not_matter() {
        // Every ordered block tuple, not only partitions.
        let config = OracleConfig::default();
        for m in 1..=6u32 {
            for s in 1..=m {
                for c in monres_core::combinat::compositions(m, &vec![m; s as usize]) {
                    for t in 1..=s {
                        let shape = BlockShape::new(c.parts().to_vec(), t).unwrap();
                        let oracle = betti_oracle_par(&gens_transversal(&shape), &config).unwrap().table();
                        assert_eq!(oracle, betti_table_formula(&shape), "{:?} t={t}", c.parts());
                    }
                }
            }
        }
    }

    #[test]
    fn shape_sweep_size() {
        // Σ over partitions of m <= 4 of their lengths: 1 + 3 + 6 + 12.
        assert_eq!(shapes_up_to(4).len(), 22);
    }
}
