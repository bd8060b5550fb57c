//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use monres::report::SuiteReport;
use monres::suites;
use monres_core::oracle::OracleConfig;
use monres_core::resolution::{CertifyOptions, CheckKind};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn suite(report: Result<SuiteReport, monres_core::Error>) -> Outcome {
    let report = report.map_err(|e| e.to_string())?;
    match report.first_failure() {
        None => Ok(format!("{} checks", report.checks.len())),
        Some(c) => Err(format!("{}: {}", c.name, c.detail.clone().unwrap_or_default())),
    }
}

fn within(limit: Duration, elapsed: Duration, outcome: Outcome) -> Outcome {
    let detail = outcome?;
    if elapsed > limit {
        return Err(format!("{detail}, but took {elapsed:.2?} > {limit:?}"));
    }
    Ok(format!("{detail} in {elapsed:.2?}"))
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let outcome = f();
    within(limit, start.elapsed(), outcome)
}

fn equal_betti() -> Outcome {
    timed(Duration::from_secs(5), || {
        let report = suites::suite_equal_betti(8).map_err(|e| e.to_string())?;
        // n ≤ 8 with t ∈ {n, n−1, n−2} ∩ [1, n]: 1 + 2 + 3·6.
        if report.checks.len() != 21 {
            return Err(format!("expected 21 (n, t) pairs, got {}", report.checks.len()));
        }
        suite(Ok(report))
    })
}

fn oracle_transversal() -> Outcome {
    timed(Duration::from_secs(120), || {
        let report = suites::suite_oracle_transversal(10, &OracleConfig::default()).map_err(|e| e.to_string())?;
        let expected: usize = suites::shapes_up_to(10).len();
        if report.checks.len() != expected {
            return Err(format!("expected {expected} shapes, got {}", report.checks.len()));
        }
        suite(Ok(report))
    })
}

fn oracle_jt() -> Outcome {
    timed(Duration::from_secs(120), || suite(suites::suite_oracle_jt(5, &OracleConfig::default())))
}

fn resolution() -> Outcome {
    let shapes = suites::shapes_up_to(8);
    for probe in [vec![2, 2], vec![2, 2, 2], vec![1; 8]] {
        if !shapes.iter().any(|s| s.blocks() == probe.as_slice()) {
            return Err(format!("shape {probe:?} missing from the sweep"));
        }
    }
    let mut slowest = Duration::ZERO;
    let mut passed = 0;
    for (i, shape) in shapes.iter().enumerate() {
        let start = Instant::now();
        let (report, certs) = suites::suite_resolution(std::slice::from_ref(shape), &CertifyOptions::default(), i as u64)
            .map_err(|e| format!("{:?} t={}: {e}", shape.blocks(), shape.t()))?;
        slowest = slowest.max(start.elapsed());
        let kinds: Vec<&str> = certs[0].checks.iter().map(|c| c.name.as_str()).collect();
        let wanted = [
            CheckKind::DSquared,
            CheckKind::Minimality,
            CheckKind::Ranks,
            CheckKind::StrandExactness,
            CheckKind::RandomEvaluation,
        ];
        if wanted.iter().any(|k| !kinds.contains(&k.name())) {
            return Err(format!("{:?} t={}: certificate lacks a check ({kinds:?})", shape.blocks(), shape.t()));
        }
        suite(Ok(report))?;
        passed += 1;
    }
    within(Duration::from_secs(60), slowest, Ok(format!("{passed} shapes, slowest certificate")))
}

fn generators() -> Outcome {
    suite(suites::suite_generators(7, 12))
}

fn structure() -> Outcome {
    let stability = suite(suites::suite_stability(10))?;
    let radical = suite(suites::suite_radical(6))?;
    Ok(format!("stability {stability}; radical {radical}"))
}

fn identities() -> Outcome {
    timed(Duration::from_secs(2), || suite(Ok(suites::suite_identities(12))))
}

fn dg() -> Outcome {
    suite(suites::suite_dg(4, 2, 100, 0))
}

fn scan() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_monres"))
        .args(["scan", "--n-max", "8"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit status {}", out.status));
    }
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let rows = json["rows"].as_array().ok_or("missing `rows` array")?;
    let mut expected = (1..=8u64).flat_map(|n| (1..=n).map(move |t| (n, t)));
    let mut informational = 0;
    for row in rows {
        let n = row["n"].as_u64().ok_or("row without `n`")?;
        let t = row["t"].as_u64().ok_or("row without `t`")?;
        if expected.next() != Some((n, t)) {
            return Err(format!("unexpected row (n, t) = ({n}, {t})"));
        }
        for key in ["betti_jt", "betti_transversal"] {
            let ok = row[key].as_array().is_some_and(|v| v.iter().all(|x| x.is_u64() || x.is_string()));
            if !ok {
                return Err(format!("({n}, {t}): `{key}` is not a list of integers"));
            }
        }
        if !row["equal"].is_boolean() || !row["asserted"].is_boolean() {
            return Err(format!("({n}, {t}): `equal` / `asserted` must be booleans"));
        }
        if row["asserted"] != (t + 2 >= n) {
            return Err(format!("({n}, {t}): wrong `asserted` flag"));
        }
        informational += usize::from(t + 2 < n);
    }
    if expected.next().is_some() {
        return Err("report is missing rows".into());
    }
    Ok(format!("{} rows, {informational} informational", rows.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("J_t and I_t(D) Betti numbers agree, n <= 8", equal_betti),
        ("oracle = closed form and linear, transversal m <= 10", oracle_transversal),
        ("oracle = Eliahou-Kervaire = closed form for J_t, n <= 5", oracle_jt),
        ("resolution certificates, m <= 8", resolution),
        ("generator enumerations and nu counts", generators),
        ("stability, Borel and radical predicates", structure),
        ("binomial identity sweeps", identities),
        ("DG algebra axioms, n = 4, t = 2", dg),
        ("scan --n-max 8 report", scan),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
