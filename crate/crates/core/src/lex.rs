//! Integer vectors of `Z^n` under the lexicographic order.
//!
//! The convention used everywhere in this crate: coordinate 0 is the most
//! significant, so a vector is positive exactly when its first nonzero
//! coordinate is positive. This is the one place the convention is defined;
//! every other module relies on [`LexVector`]'s ordering rather than
//! restating it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Errors from lattice and subgroup construction and comparison.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("vectors have mismatched lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("generators span a rank-{rank} sublattice of Z^{n}, not a finite-index subgroup")]
    NotFiniteIndex { n: usize, rank: usize },
    #[error("subgroup is not nested: generator {generator} lies outside the ambient subgroup")]
    NotNested { generator: String },
    #[error("{0}")]
    InvalidInput(String),
}

/// An element of `Z^n`, compared lexicographically with coordinate 0 most
/// significant.
///
/// The derived-from-`Vec` comparison is exactly the lexicographic order when
/// both vectors have the same length; [`lex_compare`] is the checked variant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LexVector {
    coords: Vec<BigInt>,
}

impl LexVector {
    /// Wraps a coordinate vector. Panics if empty: the rank is always >= 1.
    pub fn new(coords: Vec<BigInt>) -> Self {
        assert!(!coords.is_empty(), "LexVector must have length >= 1");
        LexVector { coords }
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![BigInt::zero(); n])
    }

    /// The unit vector `e_n = (0, ..., 0, 1)`, the smallest positive element
    /// of `Z^n`.
    pub fn last_unit(n: usize) -> Self {
        let mut coords = vec![BigInt::zero(); n];
        coords[n - 1] = BigInt::from(1);
        Self::new(coords)
    }

    /// `k * e_n`.
    pub fn last_unit_scaled(n: usize, k: BigInt) -> Self {
        let mut coords = vec![BigInt::zero(); n];
        coords[n - 1] = k;
        Self::new(coords)
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// True when the vector is `>= 0`, i.e. zero or with positive leading
    /// nonzero coordinate.
    pub fn is_nonnegative(&self) -> bool {
        match self.coords.iter().find(|c| !c.is_zero()) {
            None => true,
            Some(c) => c.is_positive(),
        }
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.is_nonnegative()
    }

    /// Index of the leading (first) nonzero coordinate, or `None` for zero.
    pub fn leading_index(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }

    pub fn checked_add(&self, other: &LexVector) -> Result<LexVector, GroupError> {
        check_len(self, other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &LexVector) -> Result<LexVector, GroupError> {
        check_len(self, other)?;
        Ok(self - other)
    }
}

fn check_len(a: &LexVector, b: &LexVector) -> Result<(), GroupError> {
    if a.len() != b.len() {
        return Err(GroupError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// Total lexicographic comparison of two vectors of equal length.
///
/// Returns `Less` exactly when, at the first index where the vectors differ,
/// the left entry is smaller.
pub fn lex_compare(a: &LexVector, b: &LexVector) -> Result<Ordering, GroupError> {
    check_len(a, b)?;
    Ok(a.cmp(b))
}

impl Ord for LexVector {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(
            self.len(),
            other.len(),
            "comparing vectors of unequal length"
        );
        self.coords.cmp(&other.coords)
    }
}

impl PartialOrd for LexVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &LexVector {
    type Output = LexVector;
    fn add(self, rhs: &LexVector) -> LexVector {
        debug_assert_eq!(self.len(), rhs.len());
        LexVector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &LexVector {
    type Output = LexVector;
    fn sub(self, rhs: &LexVector) -> LexVector {
        debug_assert_eq!(self.len(), rhs.len());
        LexVector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl fmt::Debug for LexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(coords: &[i64]) -> LexVector {
        LexVector::from_i64s(coords)
    }

    #[test]
    fn compare_equal() {
        assert_eq!(
            lex_compare(&lv(&[0, 0]), &lv(&[0, 0])).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn leading_coordinate_dominates() {
        assert_eq!(
            lex_compare(&lv(&[1, -100]), &lv(&[0, 7])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn last_coordinate_breaks_ties() {
        assert_eq!(
            lex_compare(&lv(&[0, 2]), &lv(&[0, 5])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert_eq!(
            lex_compare(&lv(&[1]), &lv(&[1, 2])),
            Err(GroupError::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn sign_predicates() {
        assert!(lv(&[0, 0]).is_nonnegative());
        assert!(!lv(&[0, 0]).is_positive());
        assert!(lv(&[0, 3]).is_positive());
        assert!(lv(&[1, -100]).is_positive());
        assert!(!lv(&[-1, 100]).is_nonnegative());
    }
}
