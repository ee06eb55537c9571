//! Brute-force reference implementations used as ground truth in tests and
//! by the CLI `verify` commands.
//!
//! Everything here is deliberately naive: plain enumeration over boxes with
//! no use of the triangular theory, no shared code with the fast paths it
//! validates, and stability checks (recompute at a doubled bound) instead of
//! cleverness. Performance and ranks above 4 are non-goals.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::frame::{Frame, Monomial, PmtStep};
use crate::lex::LexVector;
use crate::subgroup::Subgroup;

/// Enumeration cube `[-B, B]^n`, used both for coefficient vectors and for
/// lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBox {
    bound: i64,
}

impl SearchBox {
    pub fn new(bound: i64) -> Self {
        assert!(bound >= 1, "search bound must be >= 1");
        SearchBox { bound }
    }

    /// Default desk-scale bounds: 8 for rank <= 3, 5 above.
    pub fn default_for(n: usize) -> Self {
        SearchBox {
            bound: if n <= 3 { 8 } else { 5 },
        }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    fn doubled(&self) -> Self {
        SearchBox {
            bound: self.bound * 2,
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum OracleError {
    #[error("oracle arithmetic out of range: {0}")]
    Overflow(String),
    #[error("count unstable: {at_bound} at bound {bound} vs {at_doubled} at bound {doubled}")]
    UnstableCount {
        bound: i64,
        doubled: i64,
        at_bound: BigInt,
        at_doubled: BigInt,
    },
    #[error("enumeration of {size} points is too large for the oracle")]
    EnumerationTooLarge { size: u128 },
    #[error("no positive subgroup element found inside the box")]
    NoPositiveElement,
    #[error("{0}")]
    InvalidInput(String),
}

/// Verdict of a cover check, with the first uncovered point when invalid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverVerdict {
    pub valid: bool,
    pub counterexample: Option<LexVector>,
}

const ENUMERATION_CAP: u128 = 50_000_000;

// ---------------------------------------------------------------------------
// small exact helpers
// ---------------------------------------------------------------------------

fn to_i64_cols(cols: &[Vec<BigInt>]) -> Result<Vec<Vec<i64>>, OracleError> {
    cols.iter()
        .map(|col| {
            col.iter()
                .map(|c| {
                    i64::try_from(c).map_err(|_| {
                        OracleError::Overflow(format!("matrix entry {c} exceeds oracle range"))
                    })
                })
                .collect()
        })
        .collect()
}

fn lex_positive(p: &[i64]) -> bool {
    match p.iter().find(|&&c| c != 0) {
        Some(&c) => c > 0,
        None => false,
    }
}

fn lex_nonnegative(p: &[i64]) -> bool {
    match p.iter().find(|&&c| c != 0) {
        Some(&c) => c > 0,
        None => true,
    }
}

fn lex_less(a: &[i64], b: &[i64]) -> bool {
    a < b
}

/// Visits every integer point of the box `[lo_k, hi_k]` in ascending
/// lexicographic order. Stops early when the visitor returns `false`.
fn for_each_point(lo: &[i64], hi: &[i64], mut f: impl FnMut(&[i64]) -> bool) {
    let n = lo.len();
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return;
    }
    let mut cur: Vec<i64> = lo.to_vec();
    loop {
        if !f(&cur) {
            return;
        }
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur[k] += 1;
                cur[(k + 1)..n].copy_from_slice(&lo[(k + 1)..n]);
                break;
            }
        }
    }
}

fn box_size(lo: &[i64], hi: &[i64]) -> u128 {
    lo.iter()
        .zip(hi)
        .map(|(l, h)| if h >= l { (h - l + 1) as u128 } else { 0 })
        .product()
}

/// `p = sum_k c_k * col_k` in i128, then i64. The caller pre-checks ranges,
/// so the conversion cannot fail in practice; overflow is still reported.
fn combination(cols: &[Vec<i64>], n: usize, c: &[i64]) -> Result<Vec<i64>, OracleError> {
    let mut acc = vec![0i128; n];
    for (k, ck) in c.iter().enumerate() {
        if *ck == 0 {
            continue;
        }
        for i in 0..n {
            acc[i] += (*ck as i128) * (cols[k][i] as i128);
        }
    }
    acc.into_iter()
        .map(|v| i64::try_from(v).map_err(|_| OracleError::Overflow("point overflow".into())))
        .collect()
}

fn check_combination_range(
    cols: &[Vec<i64>],
    n: usize,
    coeff_bound: i64,
) -> Result<(), OracleError> {
    for i in 0..n {
        let total: i128 = cols
            .iter()
            .map(|col| (col[i].unsigned_abs() as i128) * (coeff_bound as i128))
            .sum();
        if total > i64::MAX as i128 {
            return Err(OracleError::Overflow(
                "combination bound exceeds oracle range".into(),
            ));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// subgroup oracles
// ---------------------------------------------------------------------------

/// Lex-least strictly positive subgroup element among `H·c`, `c` in the box.
/// `None` when no positive combination lies in the box.
pub fn brute_min_positive(
    sub: &Subgroup,
    bx: &SearchBox,
) -> Result<Option<LexVector>, OracleError> {
    let n = sub.rank();
    let cols = to_i64_cols(sub.hnf_columns())?;
    check_combination_range(&cols, n, bx.bound())?;
    let lo = vec![-bx.bound(); n];
    let hi = vec![bx.bound(); n];
    let mut best: Option<Vec<i64>> = None;
    let mut err = None;
    for_each_point(&lo, &hi, |c| match combination(&cols, n, c) {
        Ok(p) => {
            if lex_positive(&p) && best.as_deref().is_none_or(|b| lex_less(&p, b)) {
                best = Some(p);
            }
            true
        }
        Err(e) => {
            err = Some(e);
            false
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(best.map(|p| LexVector::from_i64s(&p)))
}

/// The nonnegative lattice points of the box strictly below the smallest
/// positive subgroup element, ascending.
pub fn brute_small_elements(sub: &Subgroup, bx: &SearchBox) -> Result<Vec<LexVector>, OracleError> {
    let n = sub.rank();
    let min = brute_min_positive(sub, bx)?.ok_or(OracleError::NoPositiveElement)?;
    let min_i64: Vec<i64> = min
        .coords()
        .iter()
        .map(|c| i64::try_from(c).map_err(|_| OracleError::Overflow("min element".into())))
        .collect::<Result<_, _>>()?;
    let lo = vec![-bx.bound(); n];
    let hi = vec![bx.bound(); n];
    let mut out = Vec::new();
    for_each_point(&lo, &hi, |p| {
        if lex_nonnegative(p) && lex_less(p, &min_i64) {
            out.push(LexVector::from_i64s(p));
        }
        true
    });
    Ok(out)
}

/// Literal count of the initial-index set, accepted only when stable under
/// doubling the box.
pub fn brute_epsilon(sub: &Subgroup, bx: &SearchBox) -> Result<BigInt, OracleError> {
    let at_bound = BigInt::from(brute_small_elements(sub, bx)?.len());
    let at_doubled = BigInt::from(brute_small_elements(sub, &bx.doubled())?.len());
    if at_bound != at_doubled {
        return Err(OracleError::UnstableCount {
            bound: bx.bound(),
            doubled: bx.bound() * 2,
            at_bound,
            at_doubled,
        });
    }
    Ok(at_bound)
}

/// Relative variant: counts elements of `Sigma_{>=0}` strictly below the
/// smallest positive element of `Delta`, with the same stability rule.
pub fn brute_epsilon_rel(
    sigma: &Subgroup,
    delta: &Subgroup,
    bx: &SearchBox,
) -> Result<BigInt, OracleError> {
    let count_at = |bx: &SearchBox| -> Result<BigInt, OracleError> {
        let n = sigma.rank();
        let min = brute_min_positive(delta, bx)?.ok_or(OracleError::NoPositiveElement)?;
        let min_i64: Vec<i64> = min
            .coords()
            .iter()
            .map(|c| i64::try_from(c).map_err(|_| OracleError::Overflow("min element".into())))
            .collect::<Result<_, _>>()?;
        let cols = to_i64_cols(sigma.hnf_columns())?;
        check_combination_range(&cols, n, bx.bound())?;
        let lo = vec![-bx.bound(); n];
        let hi = vec![bx.bound(); n];
        let mut count = 0u64;
        let mut err = None;
        for_each_point(&lo, &hi, |c| match combination(&cols, n, c) {
            Ok(p) => {
                if lex_nonnegative(&p) && lex_less(&p, &min_i64) {
                    count += 1;
                }
                true
            }
            Err(e) => {
                err = Some(e);
                false
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        Ok(BigInt::from(count))
    };
    let at_bound = count_at(bx)?;
    let at_doubled = count_at(&bx.doubled())?;
    if at_bound != at_doubled {
        return Err(OracleError::UnstableCount {
            bound: bx.bound(),
            doubled: bx.bound() * 2,
            at_bound,
            at_doubled,
        });
    }
    Ok(at_bound)
}

/// Exhaustively checks the cover equation on every lex-nonnegative point of
/// the box: some representative must leave a nonnegative subgroup element.
///
/// Points with all coordinates nonnegative are scanned first (ascending), so
/// the reported counterexample is the first failure in the positive orthant
/// when one exists there.
pub fn brute_cover_verify(
    sub: &Subgroup,
    reps: &[LexVector],
    bx: &SearchBox,
) -> Result<CoverVerdict, OracleError> {
    let n = sub.rank();
    let mut reps_i64: Vec<Vec<i64>> = Vec::with_capacity(reps.len());
    for r in reps {
        if r.len() != n {
            return Err(OracleError::InvalidInput(format!(
                "representative {r} has wrong length"
            )));
        }
        if !r.is_nonnegative() {
            return Err(OracleError::InvalidInput(format!(
                "representative {r} is negative"
            )));
        }
        reps_i64.push(
            r.coords()
                .iter()
                .map(|c| {
                    i64::try_from(c).map_err(|_| OracleError::Overflow("representative".into()))
                })
                .collect::<Result<_, _>>()?,
        );
    }

    // Precompute the subgroup points that can appear as gamma - rep:
    // componentwise within [-B - max_rep, B].
    let b = bx.bound();
    let mut lo_diff = vec![0i64; n];
    let mut hi_diff = vec![0i64; n];
    for i in 0..n {
        let max_rep = reps_i64.iter().map(|r| r[i]).max().unwrap_or(0);
        lo_diff[i] = -b - max_rep;
        hi_diff[i] = b;
    }
    let points = subgroup_points_in_range(sub, &lo_diff, &hi_diff)?;

    let covered = |gamma: &[i64]| -> bool {
        reps_i64.iter().any(|r| {
            let diff: Vec<i64> = gamma.iter().zip(r).map(|(g, ri)| g - ri).collect();
            lex_nonnegative(&diff) && points.contains(&diff)
        })
    };

    let mut counterexample: Option<Vec<i64>> = None;
    // Positive orthant first.
    for_each_point(&vec![0; n], &vec![b; n], |gamma| {
        if !covered(gamma) {
            counterexample = Some(gamma.to_vec());
            return false;
        }
        true
    });
    if counterexample.is_none() {
        for_each_point(&vec![-b; n], &vec![b; n], |gamma| {
            if gamma.iter().all(|&c| c >= 0) || !lex_nonnegative(gamma) {
                return true;
            }
            if !covered(gamma) {
                counterexample = Some(gamma.to_vec());
                return false;
            }
            true
        });
    }
    Ok(match counterexample {
        None => CoverVerdict {
            valid: true,
            counterexample: None,
        },
        Some(p) => CoverVerdict {
            valid: false,
            counterexample: Some(LexVector::from_i64s(&p)),
        },
    })
}

/// All subgroup points lying componentwise inside `[lo, hi]`, found by
/// enumerating coefficient vectors against the triangular columns with
/// per-coordinate coefficient bounds derived by interval arithmetic.
fn subgroup_points_in_range(
    sub: &Subgroup,
    lo: &[i64],
    hi: &[i64],
) -> Result<HashSet<Vec<i64>>, OracleError> {
    let n = sub.rank();
    let cols = to_i64_cols(sub.hnf_columns())?;
    // p_i = sum_{j <= i} c_j * H[j][i]  =>  bound c_i recursively.
    let mut cb = vec![0i128; n];
    for i in 0..n {
        let max_abs_p = (lo[i].unsigned_abs().max(hi[i].unsigned_abs())) as i128;
        let mut slack = max_abs_p;
        for j in 0..i {
            slack += cb[j] * (cols[j][i].unsigned_abs() as i128);
        }
        let d = cols[i][i] as i128;
        cb[i] = slack / d + 1;
    }
    let clo: Vec<i64> = cb
        .iter()
        .map(|&c| i64::try_from(-c).map_err(|_| OracleError::Overflow("coefficient bound".into())))
        .collect::<Result<_, _>>()?;
    let chi: Vec<i64> = cb
        .iter()
        .map(|&c| i64::try_from(c).map_err(|_| OracleError::Overflow("coefficient bound".into())))
        .collect::<Result<_, _>>()?;
    let size = box_size(&clo, &chi);
    if size > ENUMERATION_CAP {
        return Err(OracleError::EnumerationTooLarge { size });
    }
    check_combination_range(&cols, n, chi.iter().copied().max().unwrap_or(1))?;
    let mut points = HashSet::new();
    let mut err = None;
    for_each_point(&clo, &chi, |c| match combination(&cols, n, c) {
        Ok(p) => {
            if p.iter()
                .zip(lo.iter().zip(hi))
                .all(|(v, (l, h))| l <= v && v <= h)
            {
                points.insert(p);
            }
            true
        }
        Err(e) => {
            err = Some(e);
            false
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(points)
}

/// Size of `Z^n / <columns>` by pure enumeration: wrap the grid modulo an
/// independently computed determinant and count connected components under
/// generator translations. Works from the raw generators, not the canonical
/// form.
pub fn brute_quotient_size(n: usize, gen_cols: &[Vec<BigInt>]) -> Result<BigInt, OracleError> {
    let cols = to_i64_cols(gen_cols)?;
    if cols.iter().any(|c| c.len() != n) {
        return Err(OracleError::InvalidInput("column length mismatch".into()));
    }
    let modulus = first_nonzero_det(n, &cols)
        .ok_or_else(|| OracleError::InvalidInput("generators are not full rank".into()))?;
    let modulus = modulus.unsigned_abs();
    let grid: u128 = modulus.pow(n as u32);
    if grid > 4_000_000 {
        return Err(OracleError::EnumerationTooLarge { size: grid });
    }
    let m = modulus as i64;
    let grid = grid as usize;

    // Union-find over the wrapped grid.
    let mut parent: Vec<u32> = (0..grid as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let index_of = |p: &[i64]| -> usize {
        let mut idx = 0usize;
        for &c in p {
            idx = idx * (m as usize) + c as usize;
        }
        idx
    };
    let mut neighbor = vec![0i64; n];
    for_each_point(&vec![0; n], &vec![m - 1; n], |p| {
        let a = index_of(p) as u32;
        for col in &cols {
            for i in 0..n {
                neighbor[i] = (p[i] + col[i]).rem_euclid(m);
            }
            let b = index_of(&neighbor) as u32;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra as usize] = rb;
            }
        }
        true
    });
    let mut count = 0u64;
    for x in 0..grid as u32 {
        if find(&mut parent, x) == x {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Determinant of the first full-rank `n`-column subset, by cofactor
/// expansion. `None` when every subset is singular.
fn first_nonzero_det(n: usize, cols: &[Vec<i64>]) -> Option<i128> {
    let mut chosen = Vec::new();
    subsets(cols.len(), n, 0, &mut chosen, &mut |subset| {
        let mat: Vec<&Vec<i64>> = subset.iter().map(|&k| &cols[k]).collect();
        let d = det_cofactor(n, &mat);
        if d != 0 {
            Some(d)
        } else {
            None
        }
    })
}

fn subsets<T>(
    m: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if chosen.len() == k {
        return f(chosen);
    }
    for i in start..m {
        chosen.push(i);
        if let Some(v) = subsets(m, k, i + 1, chosen, f) {
            chosen.pop();
            return Some(v);
        }
        chosen.pop();
    }
    None
}

fn det_cofactor(n: usize, cols: &[&Vec<i64>]) -> i128 {
    fn go(rows: &[usize], cols: &[&Vec<i64>], skip: u32) -> i128 {
        let _ = skip;
        if rows.len() == 1 {
            return cols[0][rows[0]] as i128;
        }
        let mut det = 0i128;
        for (k, &r) in rows.iter().enumerate() {
            let a = cols[0][r] as i128;
            if a != 0 {
                let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
                let minor = go(&rest, &cols[1..], 0);
                if k % 2 == 0 {
                    det += a * minor;
                } else {
                    det -= a * minor;
                }
            }
        }
        det
    }
    let rows: Vec<usize> = (0..n).collect();
    go(&rows, cols, 0)
}

/// Integer combinations of all columns with coefficients in
/// `[-coeff_bound, coeff_bound]`, filtered to the point box. Used to compare
/// the lattices spanned by two presentations on a window.
pub fn lattice_points_i64(
    n: usize,
    cols: &[Vec<BigInt>],
    coeff_bound: i64,
    point_bound: i64,
) -> Result<BTreeSet<Vec<i64>>, OracleError> {
    let cols = to_i64_cols(cols)?;
    check_combination_range(&cols, n, coeff_bound)?;
    let m = cols.len();
    let lo = vec![-coeff_bound; m];
    let hi = vec![coeff_bound; m];
    if box_size(&lo, &hi) > ENUMERATION_CAP {
        return Err(OracleError::EnumerationTooLarge {
            size: box_size(&lo, &hi),
        });
    }
    let mut out = BTreeSet::new();
    let mut err = None;
    for_each_point(&lo, &hi, |c| match combination(&cols, n, c) {
        Ok(p) => {
            if p.iter().all(|v| v.unsigned_abs() <= point_bound as u64) {
                out.insert(p);
            }
            true
        }
        Err(e) => {
            err = Some(e);
            false
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// blow-up oracle
// ---------------------------------------------------------------------------

/// Exhaustive breadth-first search over all legal transform sequences up to
/// `depth`, looking for one after which the first monomial divides the
/// second. Returns a shortest certificate, or `None` at the depth bound.
///
/// Owns its transform application; it does not call into [`Frame::pmt`].
pub fn pmt_bfs(frame: &Frame, m1: &Monomial, m2: &Monomial, depth: usize) -> Option<Vec<PmtStep>> {
    assert!(depth <= 16, "BFS depth above 16 is not sensible");
    let n = frame.n();

    type State = (Vec<Vec<BigInt>>, Vec<BigInt>, Vec<BigInt>);
    let start: State = (
        frame.values().iter().map(|v| v.coords().to_vec()).collect(),
        m1.exps().to_vec(),
        m2.exps().to_vec(),
    );

    let divisible = |s: &State| s.1.iter().zip(&s.2).all(|(a, b)| a <= b);
    let col_positive = |col: &[BigInt]| match col.iter().find(|c| !c.is_zero()) {
        Some(c) => c > &BigInt::zero(),
        None => false,
    };

    if divisible(&start) {
        return Some(Vec::new());
    }

    let mut frontier: Vec<(State, Vec<PmtStep>)> = vec![(start.clone(), Vec::new())];
    let mut seen: HashSet<State> = HashSet::new();
    seen.insert(start);

    for _ in 0..depth {
        let mut next = Vec::new();
        for (state, path) in &frontier {
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let (vi, vj) = (&state.0[i - 1], &state.0[j - 1]);
                    if !(vj > vi) {
                        continue;
                    }
                    let mut cols = state.0.clone();
                    let newcol: Vec<BigInt> = vj.iter().zip(vi).map(|(a, b)| a - b).collect();
                    debug_assert!(col_positive(&newcol));
                    cols[j - 1] = newcol;
                    let mut a = state.1.clone();
                    let mut b = state.2.clone();
                    let add = a[j - 1].clone();
                    a[i - 1] += add;
                    let add = b[j - 1].clone();
                    b[i - 1] += add;
                    let child: State = (cols, a, b);
                    if seen.contains(&child) {
                        continue;
                    }
                    let mut path = path.clone();
                    path.push(PmtStep { i, j });
                    if divisible(&child) {
                        return Some(path);
                    }
                    seen.insert(child.clone());
                    next.push((child, path));
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(n: usize, cols: &[&[i64]]) -> Subgroup {
        Subgroup::from_generators_i64(n, cols).unwrap()
    }

    fn lv(coords: &[i64]) -> LexVector {
        LexVector::from_i64s(coords)
    }

    #[test]
    fn min_positive_examples() {
        let b1 = SearchBox::new(1);
        assert_eq!(
            brute_min_positive(&Subgroup::full(2), &b1).unwrap(),
            Some(lv(&[0, 1]))
        );
        let b = SearchBox::new(3);
        assert_eq!(
            brute_min_positive(&sub(2, &[&[1, 1], &[0, 3]]), &b).unwrap(),
            Some(lv(&[0, 3]))
        );
        assert_eq!(
            brute_min_positive(&sub(2, &[&[1, 1], &[0, 3]]), &SearchBox::new(6)).unwrap(),
            Some(lv(&[0, 3]))
        );
        assert_eq!(
            brute_min_positive(&sub(2, &[&[3, 0], &[0, 3]]), &b).unwrap(),
            Some(lv(&[0, 3]))
        );
    }

    #[test]
    fn epsilon_examples() {
        let b = SearchBox::new(8);
        assert_eq!(
            brute_epsilon(&Subgroup::full(3), &b).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            brute_epsilon(&sub(2, &[&[3, 0], &[0, 3]]), &b).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            brute_epsilon(&sub(2, &[&[1, 0], &[0, 3]]), &b).unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn epsilon_set_is_the_literal_one() {
        let b = SearchBox::new(8);
        let got = brute_small_elements(&sub(2, &[&[3, 0], &[0, 3]]), &b).unwrap();
        assert_eq!(got, vec![lv(&[0, 0]), lv(&[0, 1]), lv(&[0, 2])]);
    }

    #[test]
    fn min_positive_agrees_with_raw_generator_combinations() {
        // Secondary cross-check bypassing the canonical form entirely.
        for cols in [
            vec![vec![1i64, 1], vec![0, 3]],
            vec![vec![2, 0], vec![0, 2], vec![1, 1]],
            vec![vec![5, 3], vec![2, 1]],
        ] {
            let views: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
            let d = sub(2, &views);
            let raw_cols: Vec<Vec<BigInt>> = cols
                .iter()
                .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let points = lattice_points_i64(2, &raw_cols, 8, 24).unwrap();
            let raw_min = points
                .iter()
                .filter(|p| lex_positive(p))
                .min_by(|a, b| a.cmp(b))
                .map(|p| LexVector::from_i64s(p));
            assert_eq!(brute_min_positive(&d, &SearchBox::new(8)).unwrap(), raw_min);
        }
    }

    #[test]
    fn unstable_count_is_reported() {
        // eps = 12 exceeds a box of 4, and 2*4 still cuts it off.
        let d = sub(1, &[&[12]]);
        let err = brute_epsilon(&d, &SearchBox::new(4)).unwrap_err();
        assert!(matches!(err, OracleError::UnstableCount { .. }));
    }

    #[test]
    fn cover_examples() {
        let b = SearchBox::new(8);
        let v = brute_cover_verify(&Subgroup::full(2), &[lv(&[0, 0])], &b).unwrap();
        assert!(v.valid);

        let d = sub(2, &[&[1, 0], &[0, 3]]);
        let reps = vec![lv(&[0, 0]), lv(&[0, 1]), lv(&[0, 2])];
        let v = brute_cover_verify(&d, &reps, &b).unwrap();
        assert!(v.valid);

        let d = sub(2, &[&[3, 0], &[0, 3]]);
        let v = brute_cover_verify(&d, &reps, &b).unwrap();
        assert!(!v.valid);
        assert_eq!(v.counterexample, Some(lv(&[1, 0])));
    }

    #[test]
    fn quotient_size_examples() {
        assert_eq!(
            brute_quotient_size(2, Subgroup::full(2).generator_columns()).unwrap(),
            BigInt::from(1)
        );
        let d = sub(2, &[&[3, 0], &[0, 3]]);
        assert_eq!(
            brute_quotient_size(2, d.generator_columns()).unwrap(),
            BigInt::from(9)
        );
        // Redundant presentation: determinant of a subset overestimates the
        // modulus, the component count still lands on the index.
        let d = sub(2, &[&[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(
            brute_quotient_size(2, d.generator_columns()).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn bfs_examples() {
        let f = Frame::from_i64_columns(&[&[0, 1], &[1, 0]]).unwrap();
        let m1 = Monomial::from_u64s(&[2, 0]);
        let m2 = Monomial::from_u64s(&[0, 1]);
        // Already divisible: empty list.
        assert_eq!(
            pmt_bfs(
                &f,
                &Monomial::from_u64s(&[1, 0]),
                &Monomial::from_u64s(&[2, 0]),
                4
            ),
            Some(vec![])
        );
        // The worked instance needs exactly two steps.
        let steps = pmt_bfs(&f, &m1, &m2, 8).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(steps, vec![PmtStep { i: 1, j: 2 }, PmtStep { i: 1, j: 2 }]);
        // And cannot be done in one.
        assert_eq!(pmt_bfs(&f, &m1, &m2, 1), None);
    }
}
