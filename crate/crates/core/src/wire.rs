//! JSON exchange formats.
//!
//! Integers are serialized as JSON numbers while they fit in the 53-bit
//! safe range and as decimal strings beyond it, so results survive lossy
//! JSON consumers; both forms are accepted on input. The input shapes are
//! plain mirror structs ([`SubgroupSpec`], [`FrameSpec`], [`RecordSpec`],
//! ...) that validate into the domain types via `TryFrom`, keeping
//! construction errors typed rather than buried in parse errors.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::extension::{ExtensionError, ExtensionRecord, ExternalAssertions, ValueGroupModel};
use crate::frame::{BlowupError, Frame, Monomial};
use crate::lex::{GroupError, LexVector};
use crate::relation::Relation2;
use crate::subgroup::Subgroup;

/// Largest integer magnitude emitted as a bare JSON number.
const SAFE_JSON_INT: i64 = (1 << 53) - 1;

/// An arbitrary-precision integer with lossless JSON encoding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct JsonInt(pub BigInt);

impl From<BigInt> for JsonInt {
    fn from(v: BigInt) -> Self {
        JsonInt(v)
    }
}

impl From<i64> for JsonInt {
    fn from(v: i64) -> Self {
        JsonInt(BigInt::from(v))
    }
}

impl From<JsonInt> for BigInt {
    fn from(v: JsonInt) -> Self {
        v.0
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) if v.unsigned_abs() <= SAFE_JSON_INT as u64 => serializer.serialize_i64(v),
            _ => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IntVisitor;
        impl<'de> Visitor<'de> for IntVisitor {
            type Value = JsonInt;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(BigInt::from(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(BigInt::from(v)))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.parse::<BigInt>()
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("not a decimal integer: {v:?}")))
            }
        }
        deserializer.deserialize_any(IntVisitor)
    }
}

pub fn to_json_ints(values: &[BigInt]) -> Vec<JsonInt> {
    values.iter().cloned().map(JsonInt).collect()
}

pub fn vector_out(v: &LexVector) -> Vec<JsonInt> {
    to_json_ints(v.coords())
}

pub fn columns_out(cols: &[Vec<BigInt>]) -> Vec<Vec<JsonInt>> {
    cols.iter().map(|c| to_json_ints(c)).collect()
}

// ---------------------------------------------------------------------------
// input shapes
// ---------------------------------------------------------------------------

/// `{"n": int, "generators": [[int, ...], ...]}` with generators as columns.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubgroupSpec {
    pub n: usize,
    pub generators: Vec<Vec<JsonInt>>,
}

impl TryFrom<SubgroupSpec> for Subgroup {
    type Error = GroupError;

    fn try_from(spec: SubgroupSpec) -> Result<Self, GroupError> {
        let cols = spec
            .generators
            .into_iter()
            .map(|col| col.into_iter().map(BigInt::from).collect())
            .collect();
        Subgroup::from_generators(spec.n, cols)
    }
}

impl From<&Subgroup> for SubgroupSpec {
    fn from(sub: &Subgroup) -> Self {
        SubgroupSpec {
            n: sub.rank(),
            generators: columns_out(sub.hnf_columns()),
        }
    }
}

/// `{"n": int, "values": [[int, ...], ...]}` with value columns.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameSpec {
    pub n: usize,
    pub values: Vec<Vec<JsonInt>>,
}

impl TryFrom<FrameSpec> for Frame {
    type Error = BlowupError;

    fn try_from(spec: FrameSpec) -> Result<Self, BlowupError> {
        let values: Vec<LexVector> = spec
            .values
            .iter()
            .map(|col| {
                if col.len() != spec.n || spec.n == 0 {
                    return Err(BlowupError::InvalidFrame(format!(
                        "value column of length {} for n = {}",
                        col.len(),
                        spec.n
                    )));
                }
                Ok(LexVector::new(col.iter().map(|v| v.0.clone()).collect()))
            })
            .collect::<Result<_, _>>()?;
        Frame::new(values)
    }
}

impl From<&Frame> for FrameSpec {
    fn from(frame: &Frame) -> Self {
        FrameSpec {
            n: frame.n(),
            values: frame.values().iter().map(vector_out).collect(),
        }
    }
}

pub fn monomial_from_spec(exps: &[JsonInt]) -> Result<Monomial, BlowupError> {
    Monomial::new(exps.iter().map(|e| e.0.clone()).collect())
}

pub fn monomial_out(m: &Monomial) -> Vec<JsonInt> {
    to_json_ints(m.exps())
}

/// `{"a":..,"b":..,"c":..,"d":..,"e":..}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationSpec {
    pub a: JsonInt,
    pub b: JsonInt,
    pub c: JsonInt,
    pub d: JsonInt,
    pub e: JsonInt,
}

impl TryFrom<RelationSpec> for Relation2 {
    type Error = BlowupError;

    fn try_from(spec: RelationSpec) -> Result<Self, BlowupError> {
        Relation2::new(spec.a.0, spec.b.0, spec.c.0, spec.d.0, spec.e.0)
    }
}

impl From<&Relation2> for RelationSpec {
    fn from(rel: &Relation2) -> Self {
        RelationSpec {
            a: rel.a().clone().into(),
            b: rel.b().clone().into(),
            c: rel.c().clone().into(),
            d: rel.d().clone().into(),
            e: rel.e().clone().into(),
        }
    }
}

/// Value-group model: `{"kind": "lattice", "n": .., "generators": ..}` or
/// `{"kind": "dense-rank1", "index": ..}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GroupModelSpec {
    Lattice {
        n: usize,
        generators: Vec<Vec<JsonInt>>,
    },
    DenseRank1 {
        index: JsonInt,
    },
}

/// One extension record.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecordSpec {
    pub groups: GroupModelSpec,
    pub f: JsonInt,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hensel_degree: Option<JsonInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lk_degree: Option<JsonInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub external: Option<ExternalSpec>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ExternalSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s1: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s2: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s5: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s6: Option<bool>,
}

/// Error from converting a record spec: group construction and record
/// validation fail differently.
#[derive(Debug, Clone, thiserror::Error)]
pub enum RecordSpecError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
}

impl TryFrom<RecordSpec> for ExtensionRecord {
    type Error = RecordSpecError;

    fn try_from(spec: RecordSpec) -> Result<Self, RecordSpecError> {
        let groups = match spec.groups {
            GroupModelSpec::Lattice { n, generators } => {
                let cols = generators
                    .into_iter()
                    .map(|col| col.into_iter().map(BigInt::from).collect())
                    .collect();
                ValueGroupModel::Lattice(Subgroup::from_generators(n, cols)?)
            }
            GroupModelSpec::DenseRank1 { index } => ValueGroupModel::dense_rank1(index.0)?,
        };
        let external = spec.external.unwrap_or_default();
        Ok(ExtensionRecord::new(
            groups,
            spec.f.0,
            spec.hensel_degree.map(BigInt::from),
            spec.lk_degree.map(BigInt::from),
            ExternalAssertions {
                s1: external.s1,
                s2: external.s2,
                s5: external.s5,
                s6: external.s6,
            },
        )?)
    }
}

impl Serialize for crate::extension::Truth {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for crate::extension::Truth {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        match s.as_str() {
            "true" => Ok(crate::extension::Truth::True),
            "false" => Ok(crate::extension::Truth::False),
            "undecidable" => Ok(crate::extension::Truth::Undecidable),
            other => Err(de::Error::custom(format!(
                "expected \"true\", \"false\" or \"undecidable\", got {other:?}"
            ))),
        }
    }
}

/// Serializable view of a statement profile.
#[derive(Debug, Clone, Serialize)]
pub struct ProfileOut {
    pub e: JsonInt,
    pub epsilon: JsonInt,
    pub f: JsonInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<JsonInt>,
    pub epsilon_f: JsonInt,
    pub degree_chain_tight: bool,
    pub statements: StatementsOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<Vec<Vec<JsonInt>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StatementsOut {
    pub s1: crate::extension::Truth,
    pub s2: crate::extension::Truth,
    pub s3: crate::extension::Truth,
    pub s4: crate::extension::Truth,
    pub s5: crate::extension::Truth,
    pub s6: crate::extension::Truth,
    pub s7: crate::extension::Truth,
    pub s8: crate::extension::Truth,
}

impl From<&crate::extension::StatementProfile> for ProfileOut {
    fn from(p: &crate::extension::StatementProfile) -> Self {
        ProfileOut {
            e: p.witnesses.e.clone().into(),
            epsilon: p.witnesses.epsilon.clone().into(),
            f: p.witnesses.f.clone().into(),
            defect: p.witnesses.defect.clone().map(JsonInt),
            epsilon_f: p.witnesses.epsilon_f.clone().into(),
            degree_chain_tight: p.witnesses.degree_chain_tight,
            statements: StatementsOut {
                s1: p.s1,
                s2: p.s2,
                s3: p.s3,
                s4: p.s4,
                s5: p.s5,
                s6: p.s6,
                s7: p.s7,
                s8: p.s8,
            },
            cover: p
                .witnesses
                .cover
                .as_ref()
                .map(|reps| reps.iter().map(vector_out).collect()),
        }
    }
}

/// Serializable view of an arrow violation.
#[derive(Debug, Clone, Serialize)]
pub struct ViolationOut {
    pub arrow: String,
    pub record: usize,
    pub detail: String,
}

impl From<&crate::family::ArrowViolation> for ViolationOut {
    fn from(v: &crate::family::ArrowViolation) -> Self {
        ViolationOut {
            arrow: v.arrow.label().to_string(),
            record: v.record,
            detail: v.detail.clone(),
        }
    }
}

/// Serializable view of a family report.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyOut {
    pub nine: crate::extension::Truth,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lk_degree: Option<JsonInt>,
    pub profiles: Vec<ProfileOut>,
    pub violations: Vec<ViolationOut>,
    pub consistent: bool,
}

impl FamilyOut {
    pub fn consistent(report: &crate::family::FamilyReport) -> Self {
        FamilyOut {
            nine: report.nine,
            lk_degree: report.lk_degree.clone().map(JsonInt),
            profiles: report.profiles.iter().map(ProfileOut::from).collect(),
            violations: Vec::new(),
            consistent: true,
        }
    }

    pub fn inconsistent(
        report: &crate::family::FamilyReport,
        violations: &[crate::family::ArrowViolation],
    ) -> Self {
        FamilyOut {
            nine: report.nine,
            lk_degree: report.lk_degree.clone().map(JsonInt),
            profiles: report.profiles.iter().map(ProfileOut::from).collect(),
            violations: violations.iter().map(ViolationOut::from).collect(),
            consistent: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_integers_are_numbers() {
        let v = serde_json::to_string(&JsonInt::from(42)).unwrap();
        assert_eq!(v, "42");
        let v = serde_json::to_string(&JsonInt::from(-(1i64 << 53) + 1)).unwrap();
        assert_eq!(v, "-9007199254740991");
    }

    #[test]
    fn big_integers_are_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = serde_json::to_string(&JsonInt(big.clone())).unwrap();
        assert_eq!(v, "\"123456789012345678901234567890\"");
        let back: JsonInt = serde_json::from_str(&v).unwrap();
        assert_eq!(back.0, big);
        let over = JsonInt(BigInt::from(1i64 << 53));
        assert_eq!(
            serde_json::to_string(&over).unwrap(),
            "\"9007199254740992\""
        );
    }

    #[test]
    fn subgroup_spec_round_trip() {
        let spec: SubgroupSpec =
            serde_json::from_str(r#"{"n": 2, "generators": [[1, 1], [0, 3]]}"#).unwrap();
        let sub: Subgroup = spec.try_into().unwrap();
        assert_eq!(sub.group_index(), BigInt::from(3));
        let spec = SubgroupSpec::from(&sub);
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"n":2,"generators":[[1,1],[0,3]]}"#);
    }

    #[test]
    fn rank_deficient_spec_is_a_group_error() {
        let spec: SubgroupSpec =
            serde_json::from_str(r#"{"n": 2, "generators": [[1, 2]]}"#).unwrap();
        let err = Subgroup::try_from(spec).unwrap_err();
        assert!(matches!(err, GroupError::NotFiniteIndex { .. }));
    }

    #[test]
    fn frame_spec_validates() {
        let spec: FrameSpec =
            serde_json::from_str(r#"{"n": 2, "values": [[0, 1], [1, 0]]}"#).unwrap();
        let frame: Frame = spec.try_into().unwrap();
        assert_eq!(frame.n(), 2);

        let spec: FrameSpec =
            serde_json::from_str(r#"{"n": 2, "values": [[2, 0], [0, 1]]}"#).unwrap();
        assert!(Frame::try_from(spec).is_err());
    }

    #[test]
    fn record_spec_parses_both_models() {
        let spec: RecordSpec = serde_json::from_str(
            r#"{"groups": {"kind": "dense-rank1", "index": 2}, "f": 1, "hensel_degree": 2}"#,
        )
        .unwrap();
        let rec: ExtensionRecord = spec.try_into().unwrap();
        assert_eq!(rec.ramification_index(), BigInt::from(2));

        let spec: RecordSpec = serde_json::from_str(
            r#"{"groups": {"kind": "lattice", "n": 1, "generators": [[3]]}, "f": 2,
                "external": {"s1": true}}"#,
        )
        .unwrap();
        let rec: ExtensionRecord = spec.try_into().unwrap();
        assert_eq!(rec.ramification_index(), BigInt::from(3));
        assert_eq!(rec.external.s1, Some(true));
    }
}
