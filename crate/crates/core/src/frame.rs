//! Frames of regular parameters with lattice values, and primitive monoidal
//! transforms.
//!
//! A [`Frame`] assigns each parameter `x_1 .. x_n` a value column in `Z^n`
//! (lex ordered); the columns form a unimodular matrix and are all strictly
//! positive. A primitive monoidal transform `x_j <- x_j / x_i` replaces
//! column `j` by `col_j - col_i` and rewrites monomial exponents so that
//! every monomial keeps its value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lex::LexVector;
use crate::subgroup::Subgroup;

/// Errors from frame construction and blow-up transforms.
#[derive(Debug, Clone, Error)]
pub enum BlowupError {
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("invalid primitive monoidal transform: {0}")]
    InvalidPmt(String),
    #[error("negative exponent in monomial: {0}")]
    NegativeExponent(String),
    #[error("lengths disagree: {0}")]
    LengthMismatch(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("step budget of {budget} exhausted")]
    BudgetExceeded {
        budget: usize,
        trace: Box<DivisionTrace>,
    },
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
}

/// Partial state carried by [`BlowupError::BudgetExceeded`]: the steps taken
/// so far and where they led.
#[derive(Debug, Clone)]
pub struct DivisionTrace {
    pub steps: Vec<PmtStep>,
    pub frame: Frame,
    pub monomials: Vec<Monomial>,
}

/// A regular-parameter system `x_1 .. x_n` together with the value
/// `nu(x_i)` of each parameter.
///
/// Invariants, checked on construction: the value columns form a unimodular
/// matrix (they are a Z-basis of the value lattice) and every column is
/// strictly positive in the lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct Frame {
    names: Vec<String>,
    values: Vec<LexVector>,
}

impl Frame {
    /// Builds a frame from value columns, naming the parameters `x1 .. xn`.
    pub fn new(values: Vec<LexVector>) -> Result<Self, BlowupError> {
        let n = values.len();
        let names = (1..=n).map(|k| format!("x{k}")).collect();
        Self::with_names(names, values)
    }

    pub fn with_names(names: Vec<String>, values: Vec<LexVector>) -> Result<Self, BlowupError> {
        let n = values.len();
        if n == 0 {
            return Err(BlowupError::InvalidFrame(
                "a frame needs at least one parameter".into(),
            ));
        }
        if names.len() != n {
            return Err(BlowupError::LengthMismatch(format!(
                "{} names for {} parameters",
                names.len(),
                n
            )));
        }
        for (k, v) in values.iter().enumerate() {
            if v.len() != n {
                return Err(BlowupError::InvalidFrame(format!(
                    "value column {k} has length {}, expected {n}",
                    v.len()
                )));
            }
            if !v.is_positive() {
                return Err(BlowupError::InvalidFrame(format!(
                    "value of parameter {} is {}, not strictly positive",
                    k + 1,
                    v
                )));
            }
        }
        let cols: Vec<Vec<BigInt>> = values.iter().map(|v| v.coords().to_vec()).collect();
        match Subgroup::from_generators(n, cols) {
            Ok(sub) if sub.group_index().is_one() => {}
            _ => {
                return Err(BlowupError::InvalidFrame(
                    "value columns are not a Z-basis of Z^n (|det| != 1)".into(),
                ))
            }
        }
        Ok(Frame { names, values })
    }

    pub fn from_i64_columns(cols: &[&[i64]]) -> Result<Self, BlowupError> {
        Self::new(cols.iter().map(|c| LexVector::from_i64s(c)).collect())
    }

    /// The identity frame: `nu(x_i) = e_i`.
    pub fn identity(n: usize) -> Self {
        let values = (0..n)
            .map(|i| {
                let mut coords = vec![BigInt::zero(); n];
                coords[i] = BigInt::one();
                LexVector::new(coords)
            })
            .collect();
        Self::new(values).expect("identity frame is valid")
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn values(&self) -> &[LexVector] {
        &self.values
    }

    /// Value of parameter `x_k`, 1-based.
    pub fn value(&self, k: usize) -> &LexVector {
        &self.values[k - 1]
    }

    /// The value `V · exps` of a monomial in this frame.
    pub fn value_of(&self, m: &Monomial) -> LexVector {
        assert_eq!(m.len(), self.n(), "monomial length must match frame");
        let n = self.n();
        let mut acc = vec![BigInt::zero(); n];
        for (k, e) in m.exps().iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            for i in 0..n {
                let t = e * &self.values[k].coords()[i];
                acc[i] += t;
            }
        }
        LexVector::new(acc)
    }

    /// Applies the primitive monoidal transform `x_j <- x_j / x_i`.
    ///
    /// Requires `nu(x_j) > nu(x_i)` strictly; equality is impossible for a
    /// unimodular frame and is rejected as [`BlowupError::InvalidPmt`]. The
    /// resulting frame satisfies the same invariants, and for every monomial
    /// `M`, `value_of(rewritten M)` in the new frame equals `value_of(M)`
    /// here when paired with [`PmtStep::rewrite`].
    pub fn pmt(&self, step: &PmtStep) -> Result<Frame, BlowupError> {
        let n = self.n();
        step.check_bounds(n)?;
        let (i, j) = (step.i - 1, step.j - 1);
        if self.values[j] <= self.values[i] {
            return Err(BlowupError::InvalidPmt(format!(
                "nu(x{}) = {} is not strictly greater than nu(x{}) = {}",
                step.j, self.values[j], step.i, self.values[i]
            )));
        }
        let mut values = self.values.clone();
        values[j] = &values[j] - &values[i];
        Frame::with_names(self.names.clone(), values)
            .map_err(|e| BlowupError::InvalidPmt(format!("transform broke frame invariants: {e}")))
    }

    /// Applies a transform and rewrites a batch of monomials alongside.
    pub fn pmt_rewriting(
        &self,
        step: &PmtStep,
        monomials: &[Monomial],
    ) -> Result<(Frame, Vec<Monomial>), BlowupError> {
        let frame = self.pmt(step)?;
        let rewritten = monomials.iter().map(|m| step.rewrite(m)).collect();
        Ok((frame, rewritten))
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frame[")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} -> {}", self.names[k], v)?;
        }
        write!(f, "]")
    }
}

/// A monomial in the frame parameters: a nonnegative exponent vector. The
/// unit in front is abstract and never tracked.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<BigInt>,
}

impl Monomial {
    pub fn new(exps: Vec<BigInt>) -> Result<Self, BlowupError> {
        if exps.is_empty() {
            return Err(BlowupError::NegativeExponent(
                "empty exponent vector".into(),
            ));
        }
        if let Some(e) = exps.iter().find(|e| e.is_negative()) {
            return Err(BlowupError::NegativeExponent(format!("exponent {e}")));
        }
        Ok(Monomial { exps })
    }

    pub fn from_u64s(exps: &[u64]) -> Self {
        Monomial {
            exps: exps.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }

    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![BigInt::zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn exps(&self) -> &[BigInt] {
        &self.exps
    }

    /// Componentwise divisibility: `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.len(), other.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, e) in self.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            wrote = true;
            if e.is_one() {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// One primitive monoidal transform `x_j <- x_j / x_i`, with 1-based
/// parameter indices: `i` divides, `j` is divided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PmtStep {
    pub i: usize,
    pub j: usize,
}

impl PmtStep {
    pub fn new(i: usize, j: usize) -> Result<Self, BlowupError> {
        if i == 0 || j == 0 || i == j {
            return Err(BlowupError::InvalidPmt(format!(
                "step indices must be distinct 1-based parameter indices, got i={i}, j={j}"
            )));
        }
        Ok(PmtStep { i, j })
    }

    fn check_bounds(&self, n: usize) -> Result<(), BlowupError> {
        if self.i == 0 || self.j == 0 || self.i > n || self.j > n || self.i == self.j {
            return Err(BlowupError::InvalidPmt(format!(
                "step (i={}, j={}) out of range for {n} parameters",
                self.i, self.j
            )));
        }
        Ok(())
    }

    /// The exponent rewrite induced by the substitution `x_j = x_j' * x_i'`:
    /// the `i` entry gains the `j` entry, everything else is unchanged.
    pub fn rewrite(&self, m: &Monomial) -> Monomial {
        let mut exps = m.exps.clone();
        let add = exps[self.j - 1].clone();
        exps[self.i - 1] += add;
        Monomial { exps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(cols: &[&[i64]]) -> Frame {
        Frame::from_i64_columns(cols).unwrap()
    }

    #[test]
    fn monomial_value_examples() {
        let id = Frame::identity(2);
        assert!(id.value_of(&Monomial::one(2)).is_zero());
        assert_eq!(
            id.value_of(&Monomial::from_u64s(&[2, 1])),
            LexVector::from_i64s(&[2, 1])
        );
        let f = frame(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            f.value_of(&Monomial::from_u64s(&[3, 0])),
            LexVector::from_i64s(&[0, 3])
        );
    }

    #[test]
    fn pmt_on_identity_frame() {
        // nu(x1) = (1,0) > nu(x2) = (0,1), so x1 may be divided by x2.
        let id = Frame::identity(2);
        let step = PmtStep::new(2, 1).unwrap();
        let f1 = id.pmt(&step).unwrap();
        assert_eq!(f1.value(1), &LexVector::from_i64s(&[1, -1]));
        assert_eq!(f1.value(2), &LexVector::from_i64s(&[0, 1]));

        let m = Monomial::from_u64s(&[1, 0]);
        let rewritten = step.rewrite(&m);
        assert_eq!(rewritten, Monomial::from_u64s(&[1, 1]));
        assert_eq!(f1.value_of(&rewritten), id.value_of(&m));
    }

    #[test]
    fn pmt_rejects_wrong_direction() {
        let id = Frame::identity(2);
        let err = id.pmt(&PmtStep::new(1, 2).unwrap()).unwrap_err();
        assert!(matches!(err, BlowupError::InvalidPmt(_)));
    }

    #[test]
    fn frame_invariants_enforced() {
        // |det| = 2.
        assert!(Frame::from_i64_columns(&[&[2, 0], &[0, 1]]).is_err());
        // Negative column.
        assert!(Frame::from_i64_columns(&[&[-1, 0], &[0, 1]]).is_err());
        // Zero column.
        assert!(Frame::from_i64_columns(&[&[0, 0], &[0, 1]]).is_err());
    }
}
