//! Exact binomial arithmetic, bounded compositions, and the binomial
//! identities used by the Betti number computations.
//!
//! Every identity function returns both sides evaluated independently, so
//! callers can check equality rather than trust a closed form.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(a, b)` with the conventions `C(a, b) = 0` for `b < 0` or `b > a`.
pub fn binom(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigUint::one();
    for i in 1..=b {
        // acc * (a - b + i) is divisible by i after the multiplication.
        acc *= a - b + i;
        acc /= i;
    }
    acc
}

/// `C(a, b)` for arbitrary integer arguments: zero unless `0 <= b <= a`.
pub fn binom_int(a: i64, b: i64) -> BigUint {
    if a < 0 {
        return BigUint::zero();
    }
    binom(a as u64, b)
}

/// `2^e` as a big integer.
pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// An ordered tuple of positive parts with a fixed sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
    total: u32,
}

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Lexicographic stream of compositions of `total` into `caps.len()` parts
/// with `1 <= r_v <= caps[v]`.
#[derive(Debug, Clone)]
pub struct Compositions {
    caps: Vec<u32>,
    total: u32,
    current: Option<Vec<u32>>,
}

/// All compositions `(r_1, …, r_s)` of `total` with `1 <= r_v <= caps[v]`,
/// each exactly once, in lexicographic order.
///
/// `caps.len()` is the number of parts `s`; an empty `caps` yields nothing.
pub fn compositions(total: u32, caps: &[u32]) -> Compositions {
    let mut parts = vec![0; caps.len()];
    let current = if caps.is_empty() || !fill_min(&mut parts, 0, total, caps) {
        None
    } else {
        Some(parts)
    };
    Compositions {
        caps: caps.to_vec(),
        total,
        current,
    }
}

/// Assign the lexicographically smallest valid tail `parts[from..]` summing
/// to `remaining`. Returns false if no tail exists.
fn fill_min(parts: &mut [u32], from: usize, remaining: u32, caps: &[u32]) -> bool {
    let s = parts.len();
    let mut rem = remaining as u64;
    for p in from..s {
        let cap_after: u64 = caps[p + 1..].iter().map(|&c| c as u64).sum();
        let count_after = (s - p - 1) as u64;
        let lo = core::cmp::max(1, rem.saturating_sub(cap_after));
        let hi = core::cmp::min(caps[p] as u64, rem.saturating_sub(count_after));
        if rem < count_after + 1 || lo > hi {
            return false;
        }
        parts[p] = lo as u32;
        rem -= lo;
    }
    rem == 0
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let parts = self.current.take()?;
        let out = Composition {
            parts: parts.clone(),
            total: self.total,
        };
        let s = parts.len();
        let mut next = parts;
        let mut prefix: u32 = next.iter().take(s.saturating_sub(1)).sum();
        for v in (0..s.saturating_sub(1)).rev() {
            prefix -= next[v];
            let rem = self.total - prefix;
            let bumped = next[v] + 1;
            if bumped <= self.caps[v] && bumped < rem {
                next[v] = bumped;
                if fill_min(&mut next, v + 1, rem - bumped, &self.caps) {
                    self.current = Some(next);
                    break;
                }
            }
        }
        Some(out)
    }
}

/// Partitions of `total` into positive parts, weakly decreasing, in
/// reverse lexicographic order (`[total]` first).
pub fn partitions(total: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, largest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=largest.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total > 0 {
        go(total, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Both sides of `C(i, τ)·C(i−τ, q−τ) = C(q, τ)·C(i, q)`.
pub fn identity_absorb(i: u64, tau: u64, q: u64) -> (BigUint, BigUint) {
    let lhs = binom(i, tau as i64) * binom_int(i as i64 - tau as i64, q as i64 - tau as i64);
    let rhs = binom(q, tau as i64) * binom(i, q as i64);
    (lhs, rhs)
}

/// Both sides of `C(n+ρ, q) = Σ_{i=0}^{ρ} C(ρ, i)·C(n, q−i)`.
pub fn identity_shift(n: u64, rho: u64, q: u64) -> (BigUint, BigUint) {
    let lhs = binom(n + rho, q as i64);
    let rhs = (0..=rho)
        .map(|i| binom(rho, i as i64) * binom(n, q as i64 - i as i64))
        .sum();
    (lhs, rhs)
}

/// Both sides of `Σ_{i=q}^{n} C(i, q)·C(n, i) = C(n, q)·2^{n−q}`.
pub fn identity_weighted_sum(n: u64, q: u64) -> (BigUint, BigUint) {
    let lhs = (q..=n)
        .map(|i| binom(i, q as i64) * binom(n, i as i64))
        .sum();
    let rhs = binom(n, q as i64) * pow2(n.saturating_sub(q));
    (lhs, rhs)
}

/// Generalized Vandermonde convolution: the left side sums
/// `Π C(b_i, r_i)` over all non-negative `(r_1, …, r_s)` with `Σ r_i = total`
/// (zero parts allowed); the right side is `C(Σ b_i, total)`.
pub fn identity_vandermonde(blocks: &[u64], total: u64) -> (BigUint, BigUint) {
    fn go(blocks: &[u64], remaining: u64) -> BigUint {
        match blocks.split_first() {
            None => {
                if remaining == 0 {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            }
            Some((&b, rest)) => (0..=remaining)
                .map(|r| binom(b, r as i64) * go(rest, remaining - r))
                .sum(),
        }
    }
    let lhs = go(blocks, total);
    let rhs = binom(blocks.iter().sum(), total as i64);
    (lhs, rhs)
}

/// Both sides of `Σ_k C(a+k, m)·C(c−k, n) = C(a+c+1, m+n+1)`.
///
/// The sum runs over `m−a <= k <= c−n`, which is exactly the range of
/// non-vanishing terms (requires `a >= m`, `c >= n`).
pub fn identity_diagonal_sum(a: u64, m: u64, c: u64, n: u64) -> (BigUint, BigUint) {
    let lo = m as i64 - a as i64;
    let hi = c as i64 - n as i64;
    let lhs = (lo..=hi)
        .map(|k| binom_int(a as i64 + k, m as i64) * binom_int(c as i64 - k, n as i64))
        .sum();
    let rhs = binom(a + c + 1, (m + n + 1) as i64);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|m| partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(4), vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert!(partitions(0).is_empty());
    }

    fn pascal_row(n: usize) -> Vec<BigUint> {
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
        row
    }

    fn parts(c: &Composition) -> Vec<u32> {
        c.parts().to_vec()
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(5, 2), BigUint::from(10u32));
        assert_eq!(binom(3, 7), BigUint::zero());
        assert_eq!(binom(4, -1), BigUint::zero());
        assert_eq!(binom(0, 0), BigUint::one());
        assert_eq!(binom(60, 30), BigUint::from(118_264_581_564_861_424u64));
    }

    #[test]
    fn binom_matches_pascal() {
        for n in 0..70usize {
            let row = pascal_row(n);
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binom(n as u64, k as i64), v, "C({n},{k})");
            }
        }
    }

    #[test]
    fn binom_int_negative_top_is_zero() {
        assert_eq!(binom_int(-1, 0), BigUint::zero());
        assert_eq!(binom_int(-3, 2), BigUint::zero());
        assert_eq!(binom_int(4, 2), BigUint::from(6u32));
    }

    #[test]
    fn composition_examples() {
        let got: Vec<_> = compositions(3, &[2, 2]).map(|c| parts(&c)).collect();
        assert_eq!(got, vec![vec![1, 2], vec![2, 1]]);
        let got: Vec<_> = compositions(4, &[2, 2]).map(|c| parts(&c)).collect();
        assert_eq!(got, vec![vec![2, 2]]);
        assert_eq!(compositions(5, &[2, 2]).count(), 0);
        assert_eq!(compositions(0, &[]).count(), 0);
        assert_eq!(compositions(1, &[3, 3]).count(), 0);
    }

    fn brute_compositions(total: u32, caps: &[u32]) -> Vec<Vec<u32>> {
        // Odometer over the full box [1, cap_v]; keeps only the right sum.
        let mut out = Vec::new();
        if caps.is_empty() {
            return out;
        }
        let mut cur: Vec<u32> = vec![1; caps.len()];
        loop {
            if cur.iter().sum::<u32>() == total {
                out.push(cur.clone());
            }
            let mut v = caps.len();
            loop {
                if v == 0 {
                    return out;
                }
                v -= 1;
                if cur[v] < caps[v] {
                    cur[v] += 1;
                    for w in v + 1..caps.len() {
                        cur[w] = 1;
                    }
                    break;
                }
            }
        }
    }

    fn inclusion_exclusion_count(total: u32, caps: &[u32]) -> i64 {
        // Number of solutions of Σ r_v = total, 1 <= r_v <= cap_v.
        let s = caps.len();
        let mut count: i64 = 0;
        for mask in 0u32..(1 << s) {
            let over: u32 = (0..s).filter(|v| mask >> v & 1 == 1).map(|v| caps[v]).sum();
            let rem = total as i64 - s as i64 - over as i64;
            if rem < 0 {
                continue;
            }
            // Stars and bars: non-negative solutions of Σ x_v = rem.
            let ways = binom((rem + s as i64 - 1) as u64, s as i64 - 1);
            let ways: i64 = ways.try_into().unwrap();
            if mask.count_ones() % 2 == 0 {
                count += ways;
            } else {
                count -= ways;
            }
        }
        count
    }

    #[test]
    fn compositions_match_brute_force_and_inclusion_exclusion() {
        let cap_lists: &[&[u32]] = &[&[1], &[3], &[2, 2], &[1, 3], &[3, 1, 2], &[2, 2, 2, 2], &[4, 1, 1, 3]];
        for caps in cap_lists {
            for total in 0..=10 {
                let got: Vec<_> = compositions(total, caps).map(|c| parts(&c)).collect();
                let want = brute_compositions(total, caps);
                assert_eq!(got, want, "total={total} caps={caps:?}");
                assert_eq!(got.len() as i64, inclusion_exclusion_count(total, caps));
            }
        }
    }

    #[test]
    fn identity_examples() {
        let b = |v: u64| BigUint::from(v);
        assert_eq!(identity_absorb(5, 2, 3), (b(30), b(30)));
        assert_eq!(identity_absorb(7, 0, 3), (binom(7, 3), binom(7, 3)));
        assert_eq!(identity_absorb(4, 3, 2), (b(0), b(0)));
        assert_eq!(identity_shift(5, 0, 2), (binom(5, 2), binom(5, 2)));
        assert_eq!(identity_shift(4, 2, 3), (b(20), b(20)));
        assert_eq!(identity_shift(3, 3, 6), (b(1), b(1)));
        assert_eq!(identity_weighted_sum(4, 2), (b(24), b(24)));
        assert_eq!(identity_weighted_sum(6, 6), (b(1), b(1)));
        assert_eq!(identity_weighted_sum(5, 0), (b(32), b(32)));
        assert_eq!(identity_vandermonde(&[2, 2], 2), (b(6), b(6)));
        assert_eq!(identity_vandermonde(&[5], 3), (binom(5, 3), binom(5, 3)));
        assert_eq!(identity_vandermonde(&[1, 1, 1], 2), (b(3), b(3)));
        assert_eq!(identity_diagonal_sum(1, 1, 1, 1), (b(1), b(1)));
        assert_eq!(identity_diagonal_sum(2, 1, 2, 1), (b(10), b(10)));
        assert_eq!(identity_diagonal_sum(3, 2, 2, 1), (b(15), b(15)));
    }

    #[test]
    fn identity_ranges() {
        for i in 0..=12 {
            for tau in 0..=12 {
                for q in 0..=12 {
                    let (l, r) = identity_absorb(i, tau, q);
                    assert_eq!(l, r, "absorb {i} {tau} {q}");
                    let (l, r) = identity_shift(i, tau, q);
                    assert_eq!(l, r, "shift {i} {tau} {q}");
                }
            }
        }
        for n in 0..=20 {
            for q in 0..=n {
                let (l, r) = identity_weighted_sum(n, q);
                assert_eq!(l, r);
            }
        }
        for a in 0..=8 {
            for m in 0..=a {
                for c in 0..=8 {
                    for n in 0..=c {
                        let (l, r) = identity_diagonal_sum(a, m, c, n);
                        assert_eq!(l, r, "diag {a} {m} {c} {n}");
                    }
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn vandermonde_holds(blocks in proptest::collection::vec(0u64..=4, 1..=4), total in 0u64..=12) {
            let (l, r) = identity_vandermonde(&blocks, total);
            proptest::prop_assert_eq!(l, r);
        }

        #[test]
        fn compositions_are_valid_and_sorted(caps in proptest::collection::vec(1u32..=4, 1..=5), total in 0u32..=14) {
            let all: Vec<_> = compositions(total, &caps).collect();
            for c in &all {
                proptest::prop_assert_eq!(c.parts().iter().sum::<u32>(), total);
                for (r, cap) in c.parts().iter().zip(&caps) {
                    proptest::prop_assert!(*r >= 1 && r <= cap);
                }
            }
            for w in all.windows(2) {
                proptest::prop_assert!(w[0] < w[1]);
            }
        }
    }
}
