//! Randomized structural properties across modules.

use std::collections::BTreeMap;

use monres_core::combinat::binom;
use monres_core::oracle::{betti_oracle, OracleConfig};
use monres_core::resolution::{certify_resolution, CertifyOptions};
use monres_core::transversal::{betti_table_formula, gens_transversal};
use monres_core::{BigUint, BlockShape, Monomial, MonomialIdeal, VariableSet};
use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn exponent_vectors(nvars: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    proptest::collection::vec(proptest::collection::vec(0u32..=2, nvars), 1..=5)
        .prop_map(|gens| gens.into_iter().filter(|e| e.iter().any(|&x| x > 0)).collect::<Vec<_>>())
        .prop_filter("at least one nonconstant generator", |g| !g.is_empty())
}

fn random_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        exponent_vectors(n).prop_map(move |gens| {
            MonomialIdeal::minimalize(VariableSet::numbered("z", n), gens.into_iter().map(Monomial::new)).unwrap()
        })
    })
}

/// Smallest Borel-fixed ideal containing `ideal`.
fn borel_closure(ideal: &MonomialIdeal) -> MonomialIdeal {
    let mut all: Vec<Monomial> = ideal.gens().to_vec();
    let mut at = 0;
    while at < all.len() {
        let w = all[at].clone();
        for from in w.support().collect::<Vec<_>>() {
            for to in 0..from {
                let moved = w.exchange(from, to);
                if !all.contains(&moved) {
                    all.push(moved);
                }
            }
        }
        at += 1;
    }
    MonomialIdeal::minimalize(ideal.vars().clone(), all).unwrap()
}

/// `Σ_q (−1)^q β_{q,α}` from the Taylor complex: signed count of nonempty
/// generator subsets with lcm `α`.
fn taylor_euler(ideal: &MonomialIdeal) -> BTreeMap<Vec<u32>, i64> {
    let gens = ideal.gens();
    let mut out = BTreeMap::new();
    for mask in 1u32..(1 << gens.len()) {
        let mut l = Monomial::one(ideal.nvars());
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l = l.lcm(g);
            }
        }
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        *out.entry(l.exponents().to_vec()).or_insert(0) += sign;
    }
    out.retain(|_, v| *v != 0);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_is_idempotent_and_order_free(ideal in random_ideal(), seed in any::<u64>()) {
        let again = MonomialIdeal::minimalize(ideal.vars().clone(), ideal.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &ideal);
        let mut shuffled = ideal.gens().to_vec();
        let shift = (seed % shuffled.len() as u64) as usize;
        shuffled.rotate_left(shift);
        shuffled.reverse();
        prop_assert_eq!(MonomialIdeal::minimalize(ideal.vars().clone(), shuffled).unwrap(), ideal);
    }

    #[test]
    fn radical_is_idempotent_and_contains(ideal in random_ideal()) {
        let r = ideal.radical();
        prop_assert_eq!(r.radical(), r.clone());
        prop_assert!(ideal.gens().iter().all(|g| r.contains(g)));
        prop_assert!(r.gens().iter().all(Monomial::is_squarefree));
    }

    #[test]
    fn borel_implies_stable(ideal in random_ideal()) {
        let b = borel_closure(&ideal);
        prop_assert!(b.is_borel());
        prop_assert!(b.is_stable());
        prop_assert!(ideal.gens().iter().all(|g| b.contains(g)));
    }

    #[test]
    fn eliahou_kervaire_matches_oracle(ideal in random_ideal()) {
        let b = borel_closure(&ideal);
        let oracle = betti_oracle(&b, &OracleConfig::default()).unwrap().table();
        prop_assert_eq!(b.betti_ek().unwrap(), oracle);
    }

    #[test]
    fn oracle_euler_characteristic_matches_taylor(ideal in random_ideal()) {
        let mb = betti_oracle(&ideal, &OracleConfig::default()).unwrap();
        let mut euler: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for e in &mb.entries {
            let sign = if e.q % 2 == 0 { 1 } else { -1 };
            *euler.entry(e.alpha.clone()).or_insert(0) += sign * e.dim as i64;
        }
        euler.retain(|_, v| *v != 0);
        prop_assert_eq!(euler, taylor_euler(&ideal));
        prop_assert_eq!(mb.table().total(0), ideal.gens().len().into());
    }

    #[test]
    fn closed_form_alternating_sum_is_one(blocks in proptest::collection::vec(1u32..=4, 1..=5), pick in any::<u32>()) {
        let shape = BlockShape::new(blocks.clone(), 1 + pick % blocks.len() as u32).unwrap();
        let totals = betti_table_formula(&shape).totals();
        let (even, odd) = totals.iter().enumerate().fold((0u32.into(), 0u32.into()), |(e, o): (BigUint, BigUint), (q, b)| {
            if q % 2 == 0 { (e + b, o) } else { (e, o + b) }
        });
        prop_assert_eq!(even, odd + 1u32);
        prop_assert_eq!(&totals[0], &gens_transversal(&shape).gens().len().into());
    }

    #[test]
    fn variables_have_koszul_betti_numbers(n in 1usize..=6, k in 1usize..=6) {
        let k = k.min(n);
        let ideal = MonomialIdeal::generated_by_variables(VariableSet::numbered("z", n), 0..k);
        let totals = betti_oracle(&ideal, &OracleConfig::default()).unwrap().table().totals();
        let want: Vec<_> = (0..k).map(|q| binom(k as u64, q as i64 + 1)).collect();
        prop_assert_eq!(totals, want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_shapes_certify(blocks in proptest::collection::vec(1u32..=3, 1..=3), pick in any::<u32>(), seed in any::<u64>()) {
        let shape = BlockShape::new(blocks.clone(), 1 + pick % blocks.len() as u32).unwrap();
        let cert = certify_resolution(&shape, &CertifyOptions::default(), &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(cert.passed(), "{:?}", cert.checks);
    }
}
