//! Family-level evaluation of the statement diagram.
//!
//! Given all extensions of one valuation to a fixed finite field extension,
//! [`family_check`] computes the family statement s9 (`epsilon = e` and
//! `d = 1` for every member) and cross-checks the externally asserted
//! statements against the proven arrows, reporting each contradiction with
//! the specific violated arrow.

use num_bigint::BigInt;

use crate::extension::{
    statement_profile, ExtensionError, ExtensionRecord, StatementProfile, Truth,
};

/// The proven implications used for consistency checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arrow {
    /// s5 <=> s6: finite algebra iff finite module over a normal base.
    S5IffS6,
    /// s6 <=> s9: finite module iff defectless with epsilon = e everywhere.
    S6IffS9,
    /// s5 <=> s9: composition of the two above.
    S5IffS9,
    /// s5 => s1: a finite integral closure localizes to the big ring.
    S5ImpliesS1,
    /// s1 => s8: essential finite generation forces epsilon = e and d = 1.
    S1ImpliesS8,
    /// Single extension with s6 asserted: [L:K] = epsilon * f must hold.
    LkIdentity,
}

impl Arrow {
    pub fn label(self) -> &'static str {
        match self {
            Arrow::S5IffS6 => "5<->6",
            Arrow::S6IffS9 => "6<->9",
            Arrow::S5IffS9 => "5<->9",
            Arrow::S5ImpliesS1 => "5->1",
            Arrow::S1ImpliesS8 => "1->8",
            Arrow::LkIdentity => "lk=epsilon*f",
        }
    }
}

/// One contradiction between asserted and computed statements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowViolation {
    pub arrow: Arrow,
    /// Index of the record whose assertion is contradicted.
    pub record: usize,
    pub detail: String,
}

/// The family report returned when no arrow is violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    /// s9: every member satisfies s8.
    pub nine: Truth,
    pub profiles: Vec<StatementProfile>,
    /// The shared `[L:K]`, when any member carries one.
    pub lk_degree: Option<BigInt>,
}

/// Evaluates s9 over the family and cross-checks every external assertion
/// against the statement diagram.
///
/// Structural problems (empty family, disagreeing `[L:K]`, invalid records)
/// and contradictions ([`ExtensionError::InconsistentFamily`], which carries
/// the violated arrows together with the full report) are errors; a clean
/// family returns its report.
pub fn family_check(records: &[ExtensionRecord]) -> Result<FamilyReport, ExtensionError> {
    if records.is_empty() {
        return Err(ExtensionError::InvalidRecord("empty family".into()));
    }
    let mut lk: Option<&BigInt> = None;
    for rec in records {
        if let Some(d) = &rec.lk_degree {
            match lk {
                None => lk = Some(d),
                Some(prev) if prev == d => {}
                Some(prev) => {
                    return Err(ExtensionError::LkDegreeMismatch(format!("{prev} vs {d}")))
                }
            }
        }
    }
    let lk = lk.cloned();

    let profiles: Vec<StatementProfile> = records
        .iter()
        .map(statement_profile)
        .collect::<Result<_, _>>()?;

    let nine = profiles.iter().fold(Truth::True, |acc, p| acc.and(p.s8));

    let mut violations = Vec::new();
    for (k, (rec, profile)) in records.iter().zip(&profiles).enumerate() {
        let ext = &rec.external;
        if let (Some(s5), Some(s6)) = (ext.s5, ext.s6) {
            if s5 != s6 {
                violations.push(ArrowViolation {
                    arrow: Arrow::S5IffS6,
                    record: k,
                    detail: format!("s5 asserted {s5} but s6 asserted {s6}"),
                });
            }
        }
        for (arrow, asserted) in [(Arrow::S6IffS9, ext.s6), (Arrow::S5IffS9, ext.s5)] {
            if let (Some(a), Truth::True | Truth::False) = (asserted, nine) {
                let nine_holds = nine == Truth::True;
                if a != nine_holds {
                    violations.push(ArrowViolation {
                        arrow,
                        record: k,
                        detail: format!("assertion {a} contradicts computed s9 = {}", nine.label()),
                    });
                }
            }
        }
        if ext.s5 == Some(true) && ext.s1 == Some(false) {
            violations.push(ArrowViolation {
                arrow: Arrow::S5ImpliesS1,
                record: k,
                detail: "s5 asserted true but s1 asserted false".into(),
            });
        }
        if ext.s1 == Some(true) && profile.s8 == Truth::False {
            violations.push(ArrowViolation {
                arrow: Arrow::S1ImpliesS8,
                record: k,
                detail: format!(
                    "s1 asserted true but epsilon = {}, e = {}, defect = {}",
                    profile.witnesses.epsilon,
                    profile.witnesses.e,
                    profile
                        .witnesses
                        .defect
                        .as_ref()
                        .map(|d| d.to_string())
                        .unwrap_or_else(|| "unknown".into())
                ),
            });
        }
        if records.len() == 1 && ext.s6 == Some(true) {
            if let Some(lk) = &rec.lk_degree {
                if lk != &profile.witnesses.epsilon_f {
                    violations.push(ArrowViolation {
                        arrow: Arrow::LkIdentity,
                        record: k,
                        detail: format!(
                            "[L:K] = {lk} but epsilon * f = {}",
                            profile.witnesses.epsilon_f
                        ),
                    });
                }
            }
        }
    }

    let report = FamilyReport {
        nine,
        profiles,
        lk_degree: lk,
    };
    if violations.is_empty() {
        Ok(report)
    } else {
        Err(ExtensionError::InconsistentFamily {
            violations,
            report: Box::new(report),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::{ExternalAssertions, ValueGroupModel};
    use crate::subgroup::Subgroup;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn dense(index: i64, f: i64, hensel: i64, ext: ExternalAssertions) -> ExtensionRecord {
        ExtensionRecord::new(
            ValueGroupModel::dense_rank1(big(index)).unwrap(),
            big(f),
            Some(big(hensel)),
            Some(big(3)),
            ext,
        )
        .unwrap()
    }

    #[test]
    fn two_extension_family_refutes_s5() {
        let omega1 = dense(
            1,
            1,
            1,
            ExternalAssertions {
                s1: Some(true),
                s5: Some(true),
                ..Default::default()
            },
        );
        let omega2 = dense(2, 1, 2, ExternalAssertions::default());
        let err = family_check(&[omega1, omega2]).unwrap_err();
        match err {
            ExtensionError::InconsistentFamily { violations, report } => {
                assert_eq!(report.nine, Truth::False);
                assert_eq!(report.profiles[0].s8, Truth::True);
                assert_eq!(report.profiles[1].s8, Truth::False);
                assert!(violations
                    .iter()
                    .any(|v| v.arrow == Arrow::S5IffS9 && v.record == 0));
            }
            other => panic!("expected InconsistentFamily, got {other:?}"),
        }
    }

    #[test]
    fn consistent_trivial_extension() {
        let rec = ExtensionRecord::new(
            ValueGroupModel::Lattice(Subgroup::full(2)),
            big(1),
            Some(big(1)),
            Some(big(1)),
            ExternalAssertions {
                s1: Some(true),
                s2: Some(true),
                s5: Some(true),
                s6: Some(true),
            },
        )
        .unwrap();
        let report = family_check(&[rec]).unwrap();
        assert_eq!(report.nine, Truth::True);
    }

    #[test]
    fn necessity_arrow_catches_bad_s1() {
        let rec = ExtensionRecord::new(
            ValueGroupModel::Lattice(
                Subgroup::from_generators_i64(2, &[&[3, 0], &[0, 3]]).unwrap(),
            ),
            big(1),
            None,
            None,
            ExternalAssertions {
                s1: Some(true),
                ..Default::default()
            },
        )
        .unwrap();
        let err = family_check(&[rec]).unwrap_err();
        match err {
            ExtensionError::InconsistentFamily { violations, .. } => {
                assert!(violations
                    .iter()
                    .any(|v| v.arrow == Arrow::S1ImpliesS8 && v.record == 0));
            }
            other => panic!("expected InconsistentFamily, got {other:?}"),
        }
    }

    #[test]
    fn lk_degrees_must_agree() {
        let a = ExtensionRecord::new(
            ValueGroupModel::Lattice(Subgroup::full(1)),
            big(1),
            None,
            Some(big(2)),
            ExternalAssertions::default(),
        )
        .unwrap();
        let b = ExtensionRecord::new(
            ValueGroupModel::Lattice(Subgroup::full(1)),
            big(1),
            None,
            Some(big(3)),
            ExternalAssertions::default(),
        )
        .unwrap();
        assert!(matches!(
            family_check(&[a, b]),
            Err(ExtensionError::LkDegreeMismatch(_))
        ));
    }

    #[test]
    fn lk_identity_checked_for_single_extension() {
        // s6 asserted with [L:K] = 4 but epsilon * f = 2.
        let rec = ExtensionRecord::new(
            ValueGroupModel::Lattice(Subgroup::from_generators_i64(1, &[&[2]]).unwrap()),
            big(1),
            Some(big(2)),
            Some(big(4)),
            ExternalAssertions {
                s6: Some(true),
                ..Default::default()
            },
        )
        .unwrap();
        let err = family_check(std::slice::from_ref(&rec)).unwrap_err();
        match err {
            ExtensionError::InconsistentFamily { violations, .. } => {
                assert!(violations.iter().any(|v| v.arrow == Arrow::LkIdentity));
            }
            other => panic!("expected InconsistentFamily, got {other:?}"),
        }
    }
}
