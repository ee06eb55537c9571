//! Numeric invariants of a valuation extension and the statement profile
//! decided by them.
//!
//! An [`ExtensionRecord`] holds the value-group model, the residue degree
//! `f`, and optionally the henselian degree, the total degree `[L:K]`, and
//! externally asserted truth values for the ring-theoretic statements the
//! numeric data cannot decide. From it the ramification index `e`, the
//! initial index `epsilon` and the defect `d` are computed exactly, and the
//! statement diagram is evaluated at the decidable level:
//!
//! - s1: the valuation-ring extension is essentially finitely generated
//!   (asserted externally).
//! - s2: the graded-algebra extension is finitely generated, as a ring-level
//!   fact (asserted externally).
//! - s3: the graded-algebra extension is finitely generated, decided via the
//!   value-semigroup criterion (the graded and semigroup statements decide
//!   each other, so s3 always equals s4; it is semigroup-level evidence).
//! - s4: the nonnegative value semigroup of the big group is finitely
//!   covered by shifts of the small one (computed).
//! - s5: the integral closure is a finitely generated algebra (asserted).
//! - s6: the integral closure is a finite module (asserted).
//! - s7: `epsilon = e` (computed).
//! - s8: `epsilon = e` and `d = 1` (computed where `d` is known).
//!
//! The family-level statement s9 (`s8` for every extension at once) lives in
//! [`crate::family_check`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::family::ArrowViolation;
use crate::lex::LexVector;
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Error)]
pub enum ExtensionError {
    #[error("defect is not integral: hensel degree {hensel} is not divisible by e*f = {ef}")]
    NonIntegralDefect { hensel: BigInt, ef: BigInt },
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("invalid record: {0}")]
    InvalidRecord(String),
    #[error("family members disagree on [L:K]: {0}")]
    LkDegreeMismatch(String),
    #[error("family contradicts the statement diagram: {arrows}", arrows = .violations.iter().map(|v| v.arrow.label()).collect::<Vec<_>>().join(", "))]
    InconsistentFamily {
        violations: Vec<ArrowViolation>,
        report: Box<crate::family::FamilyReport>,
    },
}

/// The value-group pair of an extension.
///
/// `Lattice` models `Gamma_omega = Z^n` (lex) with the small group a
/// finite-index subgroup. `DenseRank1` models a rank-1 big group without a
/// least positive element; only the finite index is carried, and the initial
/// index of such an extension is always 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueGroupModel {
    Lattice(Subgroup),
    DenseRank1 { index: BigInt },
}

impl ValueGroupModel {
    pub fn dense_rank1(index: BigInt) -> Result<Self, ExtensionError> {
        if index < BigInt::one() {
            return Err(ExtensionError::InvalidRecord(format!(
                "dense rank-1 index {index} must be positive"
            )));
        }
        Ok(ValueGroupModel::DenseRank1 { index })
    }
}

/// Externally asserted truth values for the ring-theoretic statements.
/// `None` means "not asserted"; these are never computed, only checked for
/// consistency against the proven arrows.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExternalAssertions {
    pub s1: Option<bool>,
    pub s2: Option<bool>,
    pub s5: Option<bool>,
    pub s6: Option<bool>,
}

/// The numeric data of one valuation extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionRecord {
    pub groups: ValueGroupModel,
    /// Residue degree, `>= 1`.
    pub f: BigInt,
    /// `[L^h : K^h]`, when known.
    pub hensel_degree: Option<BigInt>,
    /// `[L : K]`, when known.
    pub lk_degree: Option<BigInt>,
    pub external: ExternalAssertions,
}

impl ExtensionRecord {
    pub fn new(
        groups: ValueGroupModel,
        f: BigInt,
        hensel_degree: Option<BigInt>,
        lk_degree: Option<BigInt>,
        external: ExternalAssertions,
    ) -> Result<Self, ExtensionError> {
        if f < BigInt::one() {
            return Err(ExtensionError::InvalidRecord(format!(
                "residue degree f = {f} must be positive"
            )));
        }
        for (name, v) in [("hensel_degree", &hensel_degree), ("lk_degree", &lk_degree)] {
            if let Some(v) = v {
                if v < &BigInt::one() {
                    return Err(ExtensionError::InvalidRecord(format!(
                        "{name} = {v} must be positive"
                    )));
                }
            }
        }
        Ok(ExtensionRecord {
            groups,
            f,
            hensel_degree,
            lk_degree,
            external,
        })
    }

    /// The ramification index `e`, the group index of the extension.
    pub fn ramification_index(&self) -> BigInt {
        match &self.groups {
            ValueGroupModel::Lattice(delta) => delta.group_index(),
            ValueGroupModel::DenseRank1 { index } => index.clone(),
        }
    }

    /// The initial index `epsilon`. For the dense rank-1 model this is 1:
    /// a group with no least positive element admits no second nonnegative
    /// element below the subgroup.
    pub fn initial_index(&self) -> BigInt {
        match &self.groups {
            ValueGroupModel::Lattice(delta) => delta.initial_index(),
            ValueGroupModel::DenseRank1 { .. } => BigInt::one(),
        }
    }

    /// The defect `d = [L^h:K^h] / (e*f)`, exactly.
    pub fn defect(&self) -> Result<BigInt, ExtensionError> {
        let hensel = self
            .hensel_degree
            .as_ref()
            .ok_or_else(|| ExtensionError::MissingData("hensel degree is not supplied".into()))?;
        let ef = self.ramification_index() * &self.f;
        let (d, r) = hensel.div_rem(&ef);
        if !r.is_zero() {
            return Err(ExtensionError::NonIntegralDefect {
                hensel: hensel.clone(),
                ef,
            });
        }
        Ok(d)
    }
}

/// Three-valued truth: what the numeric data decides, with
/// `Undecidable` for everything it cannot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truth {
    True,
    False,
    Undecidable,
}

impl Truth {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn from_assertion(a: Option<bool>) -> Self {
        match a {
            Some(b) => Truth::from_bool(b),
            None => Truth::Undecidable,
        }
    }

    /// Kleene conjunction: false wins over unknown.
    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Undecidable,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Truth::True => "true",
            Truth::False => "false",
            Truth::Undecidable => "undecidable",
        }
    }
}

/// Witness values backing a [`StatementProfile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileWitnesses {
    pub e: BigInt,
    pub epsilon: BigInt,
    pub f: BigInt,
    pub defect: Option<BigInt>,
    /// `epsilon * f`, the dimension of the reduction of the big valuation
    /// ring over the small residue field.
    pub epsilon_f: BigInt,
    /// Set when `epsilon * f` equals a supplied hensel degree; the degree
    /// chain then forces `d = 1` and `epsilon = e`.
    pub degree_chain_tight: bool,
    /// Cover representatives when s4 holds over a lattice model.
    pub cover: Option<Vec<LexVector>>,
}

/// Truth values of statements s1..s8 for one extension, plus witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementProfile {
    pub s1: Truth,
    pub s2: Truth,
    pub s3: Truth,
    pub s4: Truth,
    pub s5: Truth,
    pub s6: Truth,
    pub s7: Truth,
    pub s8: Truth,
    pub witnesses: ProfileWitnesses,
}

/// Evaluates the statement diagram for one extension.
///
/// s7 compares `epsilon` with `e`; s4 runs the semigroup cover search on the
/// lattice model (for the dense model it is `e = 1`); s3 mirrors s4 through
/// the semigroup criterion; s8 conjoins s7 with `d = 1` where the defect is
/// computable and stays undecidable otherwise. The external assertions are
/// echoed unchanged.
pub fn statement_profile(rec: &ExtensionRecord) -> Result<StatementProfile, ExtensionError> {
    if let (Some(h), Some(lk)) = (&rec.hensel_degree, &rec.lk_degree) {
        if h > lk {
            return Err(ExtensionError::InvalidRecord(format!(
                "hensel degree {h} exceeds [L:K] = {lk}"
            )));
        }
    }
    let e = rec.ramification_index();
    let epsilon = rec.initial_index();
    let s7 = Truth::from_bool(epsilon == e);

    let (s4, cover) = match &rec.groups {
        ValueGroupModel::Lattice(delta) => match delta.semigroup_cover() {
            Some(cover) => (Truth::True, Some(cover.representatives)),
            None => (Truth::False, None),
        },
        ValueGroupModel::DenseRank1 { index } => (Truth::from_bool(index.is_one()), None),
    };
    let s3 = s4;

    let defect = match rec.defect() {
        Ok(d) => Some(d),
        Err(ExtensionError::MissingData(_)) => None,
        Err(e) => return Err(e),
    };
    let d_is_one = match &defect {
        Some(d) => Truth::from_bool(d.is_one()),
        None => Truth::Undecidable,
    };
    let s8 = s7.and(d_is_one);

    let epsilon_f = &epsilon * &rec.f;
    let degree_chain_tight = rec.hensel_degree.as_ref().is_some_and(|h| h == &epsilon_f);

    Ok(StatementProfile {
        s1: Truth::from_assertion(rec.external.s1),
        s2: Truth::from_assertion(rec.external.s2),
        s3,
        s4,
        s5: Truth::from_assertion(rec.external.s5),
        s6: Truth::from_assertion(rec.external.s6),
        s7,
        s8,
        witnesses: ProfileWitnesses {
            e,
            epsilon,
            f: rec.f.clone(),
            defect,
            epsilon_f,
            degree_chain_tight,
            cover,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn lattice(n: usize, cols: &[&[i64]]) -> ValueGroupModel {
        ValueGroupModel::Lattice(Subgroup::from_generators_i64(n, cols).unwrap())
    }

    fn record(groups: ValueGroupModel, f: i64, hensel: Option<i64>) -> ExtensionRecord {
        ExtensionRecord::new(
            groups,
            big(f),
            hensel.map(big),
            None,
            ExternalAssertions::default(),
        )
        .unwrap()
    }

    #[test]
    fn ramification_index_examples() {
        assert_eq!(
            record(lattice(2, &[&[1, 0], &[0, 1]]), 1, None).ramification_index(),
            big(1)
        );
        let dense = ValueGroupModel::dense_rank1(big(2)).unwrap();
        assert_eq!(record(dense, 1, None).ramification_index(), big(2));
        assert_eq!(
            record(lattice(2, &[&[1, 0], &[0, 3]]), 1, None).ramification_index(),
            big(3)
        );
    }

    #[test]
    fn initial_index_examples() {
        let dense = ValueGroupModel::dense_rank1(big(2)).unwrap();
        assert_eq!(record(dense, 1, None).initial_index(), big(1));
        assert_eq!(
            record(lattice(2, &[&[3, 0], &[0, 3]]), 1, None).initial_index(),
            big(3)
        );
        assert_eq!(
            record(lattice(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 1, None).initial_index(),
            big(1)
        );
    }

    #[test]
    fn defect_examples() {
        let rec = record(lattice(1, &[&[2]]), 3, Some(6));
        assert_eq!(rec.defect().unwrap(), big(1));

        let rec = record(lattice(1, &[&[1]]), 1, Some(3));
        assert_eq!(rec.defect().unwrap(), big(3));

        let rec = record(lattice(1, &[&[2]]), 1, Some(3));
        assert!(matches!(
            rec.defect(),
            Err(ExtensionError::NonIntegralDefect { .. })
        ));

        let rec = record(lattice(1, &[&[2]]), 1, None);
        assert!(matches!(rec.defect(), Err(ExtensionError::MissingData(_))));
    }

    #[test]
    fn profile_trivial_extension() {
        let rec = record(lattice(2, &[&[1, 0], &[0, 1]]), 1, Some(1));
        let p = statement_profile(&rec).unwrap();
        assert_eq!(p.s3, Truth::True);
        assert_eq!(p.s4, Truth::True);
        assert_eq!(p.s7, Truth::True);
        assert_eq!(p.s8, Truth::True);
        assert!(p.witnesses.degree_chain_tight);
    }

    #[test]
    fn profile_dense_ramified_extension() {
        // e = 2 over a dense group: epsilon = 1, so s7 and s4 both fail.
        let dense = ValueGroupModel::dense_rank1(big(2)).unwrap();
        let rec = record(dense, 1, Some(2));
        let p = statement_profile(&rec).unwrap();
        assert_eq!(p.s7, Truth::False);
        assert_eq!(p.s4, Truth::False);
        assert_eq!(p.witnesses.defect, Some(big(1)));
        assert_eq!(p.s8, Truth::False);
    }

    #[test]
    fn profile_lattice_with_epsilon_below_index() {
        let rec = record(lattice(2, &[&[3, 0], &[0, 3]]), 1, Some(9));
        let p = statement_profile(&rec).unwrap();
        assert_eq!(p.witnesses.epsilon, big(3));
        assert_eq!(p.witnesses.e, big(9));
        assert_eq!(p.s7, Truth::False);
        assert_eq!(p.s8, Truth::False);
        assert_eq!(p.s4, Truth::False);
    }

    #[test]
    fn kleene_and_decides_s8_without_defect_data() {
        let rec = record(lattice(2, &[&[3, 0], &[0, 3]]), 1, None);
        let p = statement_profile(&rec).unwrap();
        assert_eq!(p.s7, Truth::False);
        assert_eq!(p.s8, Truth::False);

        let rec = record(lattice(2, &[&[1, 0], &[0, 3]]), 1, None);
        let p = statement_profile(&rec).unwrap();
        assert_eq!(p.s7, Truth::True);
        assert_eq!(p.s8, Truth::Undecidable);
    }

    #[test]
    fn hensel_degree_may_not_exceed_lk() {
        let rec = ExtensionRecord::new(
            lattice(1, &[&[1]]),
            big(1),
            Some(big(4)),
            Some(big(2)),
            ExternalAssertions::default(),
        )
        .unwrap();
        assert!(matches!(
            statement_profile(&rec),
            Err(ExtensionError::InvalidRecord(_))
        ));
    }

    #[test]
    fn profile_coherence_of_the_triple() {
        for cols in [
            vec![vec![1i64, 0], vec![0, 5]],
            vec![vec![2, 0], vec![0, 2]],
            vec![vec![1, 1], vec![0, 3]],
            vec![vec![5, 3], vec![0, 1]],
        ] {
            let cols: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
            let rec = record(lattice(2, &cols), 1, None);
            let p = statement_profile(&rec).unwrap();
            assert_eq!(p.s3, p.s4);
            assert_eq!(p.s4, p.s7);
        }
    }
}
