//! Smith normal form of a full-rank square integer matrix.
//!
//! Only the invariant factors are needed here, so no transform matrices are
//! tracked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Invariant factors `d_1 | d_2 | ... | d_n` (all positive) of the cokernel
/// of a full-rank matrix given by columns.
pub(crate) fn invariant_factors(n: usize, cols: &[Vec<BigInt>]) -> Vec<BigInt> {
    // Row-major working copy.
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
        .collect();

    for t in 0..n {
        loop {
            let Some((pi, pj)) = min_nonzero(&a, t) else {
                panic!("matrix is not full rank");
            };
            a.swap(t, pi);
            swap_cols(&mut a, t, pj);

            let mut clean = true;
            for i in (t + 1)..n {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..n {
                    let s = &q * &a[t][j];
                    a[i][j] -= s;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in (t + 1)..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..n {
                    let s = &q * &a[i][t];
                    a[i][j] -= s;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Pivot must divide the rest of the submatrix; if not, pull the
            // offending row up and keep reducing.
            let offender =
                ((t + 1)..n).find(|&i| ((t + 1)..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    for j in t..n {
                        let add = a[i][j].clone();
                        a[t][j] += add;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            a[t][t] = -a[t][t].clone();
        }
    }

    (0..n).map(|t| a[t][t].clone()).collect()
}

fn min_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let n = a.len();
    let mut best: Option<(usize, usize)> = None;
    for i in t..n {
        for j in t..n {
            if a[i][j].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if a[i][j].abs() < a[bi][bj].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], j0: usize, j1: usize) {
    if j0 == j1 {
        return;
    }
    for row in a.iter_mut() {
        row.swap(j0, j1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(n: usize, cols: &[&[i64]]) -> Vec<i64> {
        let cols: Vec<Vec<BigInt>> = cols
            .iter()
            .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        invariant_factors(n, &cols)
            .into_iter()
            .map(|d| i64::try_from(&d).unwrap())
            .collect()
    }

    #[test]
    fn diagonal_inputs() {
        assert_eq!(factors(2, &[&[1, 0], &[0, 1]]), vec![1, 1]);
        assert_eq!(factors(2, &[&[2, 0], &[0, 2]]), vec![2, 2]);
        assert_eq!(factors(2, &[&[4, 0], &[0, 6]]), vec![2, 12]);
    }

    #[test]
    fn divisibility_chain_holds() {
        let f = factors(3, &[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        assert_eq!(f.len(), 3);
        for w in f.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        // Product equals |det| = 2 * (6*16-12*4) + 6 * (4*16-4*4) + 10 * (4*12-6*4)
        let det: i64 = 2 * (6 * 16 - 12 * 4) + 6 * (4 * 16 - 4 * 4) + 10 * (4 * 12 - 4 * 6);
        assert_eq!(f.iter().product::<i64>(), det.abs());
    }
}
