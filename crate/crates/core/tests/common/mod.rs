//! Shared randomized generators for the integration test suites.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lexval::{Frame, LexVector, Monomial, Subgroup};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random full-rank subgroup of `Z^n` with generator entries in
/// `[-entry_bound, entry_bound]`, with an optional redundant extra column.
pub fn random_subgroup(rng: &mut ChaCha8Rng, n: usize, entry_bound: i64) -> Subgroup {
    loop {
        let m = n + usize::from(rng.gen_bool(0.3));
        let cols: Vec<Vec<BigInt>> = (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| BigInt::from(rng.gen_range(-entry_bound..=entry_bound)))
                    .collect()
            })
            .collect();
        if let Ok(sub) = Subgroup::from_generators(n, cols) {
            return sub;
        }
    }
}

/// Like [`random_subgroup`], but with a small multiple of `e_n` appended
/// half of the time so that small initial indices stay common in high rank.
pub fn random_subgroup_mixed(rng: &mut ChaCha8Rng, n: usize, entry_bound: i64) -> Subgroup {
    loop {
        let m = n + usize::from(rng.gen_bool(0.3));
        let mut cols: Vec<Vec<BigInt>> = (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| BigInt::from(rng.gen_range(-entry_bound..=entry_bound)))
                    .collect()
            })
            .collect();
        if rng.gen_bool(0.5) {
            let mut last = vec![BigInt::from(0); n];
            last[n - 1] = BigInt::from(rng.gen_range(1..=entry_bound));
            cols.push(last);
        }
        if let Ok(sub) = Subgroup::from_generators(n, cols) {
            return sub;
        }
    }
}

/// Random subgroup whose initial index equals its group index: a reduced
/// unit-triangular basis with last diagonal `eps`.
pub fn random_unit_triangular_subgroup(rng: &mut ChaCha8Rng, n: usize, eps: i64) -> Subgroup {
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut col = vec![BigInt::from(0); n];
        let d = if j == n - 1 { eps } else { 1 };
        col[j] = BigInt::from(d);
        for i in (j + 1)..n {
            let hi = if i == n - 1 { eps } else { 1 };
            col[i] = BigInt::from(rng.gen_range(0..hi.max(1)));
        }
        cols.push(col);
    }
    Subgroup::from_generators(n, cols).expect("triangular with positive diagonal is full rank")
}

/// Random unimodular frame with strictly positive columns: the identity
/// scrambled by elementary column operations, columns re-oriented positive.
pub fn random_frame(rng: &mut ChaCha8Rng, n: usize, scrambles: usize) -> Frame {
    let mut cols: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|i| i64::from(i == j)).collect())
        .collect();
    let scrambles = if n == 1 { 0 } else { scrambles };
    for _ in 0..scrambles {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let r = rng.gen_range(-2..=2i64);
        for row in 0..n {
            cols[j][row] += r * cols[i][row];
        }
    }
    for col in cols.iter_mut() {
        let lead = col.iter().find(|&&c| c != 0).copied().unwrap_or(0);
        if lead < 0 {
            for c in col.iter_mut() {
                *c = -*c;
            }
        }
    }
    let views: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
    Frame::from_i64_columns(&views).expect("scrambled identity stays unimodular and positive")
}

/// Random monomial with total exponent at most `max_total`.
pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_total: u64) -> Monomial {
    let total = rng.gen_range(0..=max_total);
    let mut exps = vec![0u64; n];
    for _ in 0..total {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_u64s(&exps)
}

pub fn lv(coords: &[i64]) -> LexVector {
    LexVector::from_i64s(coords)
}
