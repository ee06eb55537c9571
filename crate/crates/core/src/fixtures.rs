//! Bundled example families and a runner that checks them against their
//! expected invariants.
//!
//! The fixture files live under `fixtures/` and are embedded in the binary,
//! so the CLI can replay them from anywhere.

use serde::{Deserialize, Serialize};

use crate::extension::{statement_profile, ExtensionError, ExtensionRecord, Truth};
use crate::family::{family_check, ArrowViolation, FamilyReport};
use crate::wire::{JsonInt, RecordSpec};

const FILES: &[&str] = &[
    include_str!("../fixtures/cubic-two-extensions.json"),
    include_str!("../fixtures/immediate-defect.json"),
    include_str!("../fixtures/trivial-extension.json"),
];

/// A named example family with its expected invariants.
#[derive(Debug, Clone, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub family: Vec<RecordSpec>,
    pub expect: Expectations,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Expectations {
    pub e: Vec<JsonInt>,
    pub epsilon: Vec<JsonInt>,
    pub f: Vec<JsonInt>,
    pub defect: Vec<JsonInt>,
    #[serde(default)]
    pub s7: Option<Vec<Truth>>,
    pub s8: Vec<Truth>,
    pub nine: Truth,
    pub violated_arrows: Vec<String>,
    pub consistent: bool,
}

/// One comparison in a fixture run.
#[derive(Debug, Clone, Serialize)]
pub struct FixtureCheck {
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureReport {
    pub name: String,
    pub description: String,
    pub checks: Vec<FixtureCheck>,
    pub all_pass: bool,
}

/// Names of all bundled fixtures.
pub fn names() -> Vec<String> {
    FILES.iter().map(|f| parse(f).name).collect()
}

/// Loads one bundled fixture by name.
pub fn load(name: &str) -> Option<Fixture> {
    FILES.iter().map(|f| parse(f)).find(|f| f.name == name)
}

fn parse(text: &str) -> Fixture {
    serde_json::from_str(text).expect("bundled fixture parses")
}

/// Runs a fixture: computes the per-extension profiles and the family check
/// and compares every expectation.
pub fn run(fixture: &Fixture) -> Result<FixtureReport, ExtensionError> {
    let records: Vec<ExtensionRecord> = fixture
        .family
        .iter()
        .cloned()
        .map(|spec| {
            ExtensionRecord::try_from(spec)
                .map_err(|e| ExtensionError::InvalidRecord(e.to_string()))
        })
        .collect::<Result<_, _>>()?;

    let mut checks = Vec::new();
    let mut push = |check: String, expected: String, actual: String| {
        let pass = expected == actual;
        checks.push(FixtureCheck {
            check,
            expected,
            actual,
            pass,
        });
    };

    for (k, rec) in records.iter().enumerate() {
        let profile = statement_profile(rec)?;
        let exp = &fixture.expect;
        push(
            format!("e[{k}]"),
            exp.e[k].0.to_string(),
            profile.witnesses.e.to_string(),
        );
        push(
            format!("epsilon[{k}]"),
            exp.epsilon[k].0.to_string(),
            profile.witnesses.epsilon.to_string(),
        );
        push(
            format!("f[{k}]"),
            exp.f[k].0.to_string(),
            profile.witnesses.f.to_string(),
        );
        push(
            format!("defect[{k}]"),
            exp.defect[k].0.to_string(),
            profile
                .witnesses
                .defect
                .as_ref()
                .map(|d| d.to_string())
                .unwrap_or_else(|| "unknown".into()),
        );
        if let Some(s7) = &exp.s7 {
            push(
                format!("s7[{k}]"),
                s7[k].label().into(),
                profile.s7.label().into(),
            );
        }
        push(
            format!("s8[{k}]"),
            exp.s8[k].label().into(),
            profile.s8.label().into(),
        );
    }

    let (report, violations): (FamilyReport, Vec<ArrowViolation>) = match family_check(&records) {
        Ok(report) => (report, Vec::new()),
        Err(ExtensionError::InconsistentFamily { violations, report }) => (*report, violations),
        Err(other) => return Err(other),
    };
    push(
        "nine".into(),
        fixture.expect.nine.label().into(),
        report.nine.label().into(),
    );
    push(
        "consistent".into(),
        fixture.expect.consistent.to_string(),
        violations.is_empty().to_string(),
    );
    let mut arrows: Vec<String> = violations.iter().map(|v| v.arrow.label().into()).collect();
    arrows.sort();
    arrows.dedup();
    let mut expected_arrows = fixture.expect.violated_arrows.clone();
    expected_arrows.sort();
    for arrow in &expected_arrows {
        push(
            format!("arrow {arrow} violated"),
            "true".into(),
            arrows.contains(arrow).to_string(),
        );
    }

    let all_pass = checks.iter().all(|c| c.pass);
    Ok(FixtureReport {
        name: fixture.name.clone(),
        description: fixture.description.clone(),
        checks,
        all_pass,
    })
}
