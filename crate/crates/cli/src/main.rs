//! Batch command-line front end: every computation of the library behind a
//! subcommand with JSON on stdin/stdout.
//!
//! Output is byte-deterministic for identical input. Exit codes: 0 on
//! success, 2 on validation or precondition errors (with a machine-readable
//! `{"error": code, "detail": ...}` object), 3 when a step budget or search
//! depth runs out (with the partial trace in the detail).

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use lexval::wire::{
    columns_out, monomial_from_spec, monomial_out, vector_out, FamilyOut, FrameSpec, JsonInt,
    ProfileOut, RecordSpec, RelationSpec, SubgroupSpec,
};
use lexval::{
    epsilon_chain, family_check, fixtures, make_divisible, oracle, paired_step_rank1,
    rank2_normalize, reduce_fraction_supports, statement_profile, BlowupError, ExtensionError,
    ExtensionRecord, Frame, GroupError, LexVector, Monomial, PmtStep, Relation2, Subgroup,
    DEFAULT_PMT_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "lexval",
    version,
    about = "Exact lattice, blow-up and valuation-extension computations with JSON input and output"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Read the JSON input from this file instead of stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Step budget for transform searches (default 10000; search depth for
    /// verify bfs, default 8).
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Enumeration bound for the brute-force verifiers (default 8 for rank
    /// <= 3, 5 above).
    #[arg(long, global = true)]
    bound: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Subgroup invariants: index, initial index, covers, quotients, chains.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Frames, monoidal transforms and divisibility normal forms.
    #[command(subcommand)]
    Blowup(BlowupCmd),
    /// Valuation-extension invariants and the statement diagram.
    #[command(subcommand)]
    Ext(ExtCmd),
    /// Brute-force verification of the fast-path results.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Bundled example families.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Group index of a subgroup of Z^n.
    Index,
    /// Initial index (and group index) of a subgroup.
    Epsilon,
    /// Semigroup coset cover, when one exists.
    Cosets,
    /// Unit-triangular criterion for epsilon = index.
    Criterion,
    /// Invariant factors of the quotient.
    Quotient,
    /// Initial indices along a nested chain delta <= sigma <= Z^n.
    Chain,
}

#[derive(Subcommand)]
enum BlowupCmd {
    /// Apply one primitive monoidal transform to a frame (and monomials).
    Pmt,
    /// Find a transform sequence making the first monomial divide the second.
    Divide,
    /// Closed-form normalization of a rank-2 relation to (1,0;0,e).
    Normalize2,
    /// One paired quadratic-transform step in the discrete rank-1 model.
    PairedStep,
    /// Normalize the monomial supports of a fraction.
    ReduceFraction,
}

#[derive(Subcommand)]
enum ExtCmd {
    /// Statement profile of one extension record.
    Profile,
    /// Defect of one extension record.
    Defect,
    /// Family check: s9 and consistency of the asserted statements.
    Family,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Recompute the initial index by brute force and compare.
    Epsilon,
    /// Check cover representatives exhaustively on a box.
    Cover,
    /// Breadth-first search for a shortest divisibility certificate.
    Bfs,
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// List the bundled fixtures.
    List,
    /// Run one bundled fixture and report every check.
    Run { name: String },
}

struct Failure {
    exit: u8,
    code: &'static str,
    detail: Value,
}

impl Failure {
    fn new(exit: u8, code: &'static str, detail: Value) -> Self {
        Failure { exit, code, detail }
    }

    fn to_value(&self) -> Value {
        json!({ "error": self.code, "detail": self.detail })
    }
}

fn group_failure(e: GroupError) -> Failure {
    let code = match &e {
        GroupError::LengthMismatch { .. } => "LengthMismatch",
        GroupError::NotFiniteIndex { .. } => "NotFiniteIndex",
        GroupError::NotNested { .. } => "NotNested",
        GroupError::InvalidInput(_) => "InvalidInput",
    };
    Failure::new(2, code, Value::String(e.to_string()))
}

fn blowup_failure(e: BlowupError) -> Failure {
    match e {
        BlowupError::BudgetExceeded { budget, trace } => Failure::new(
            3,
            "BudgetExceeded",
            json!({
                "budget": budget,
                "steps": trace.steps,
                "frame": FrameSpec::from(&trace.frame),
                "monomials": trace.monomials.iter().map(monomial_out).collect::<Vec<_>>(),
            }),
        ),
        other => {
            let code = match &other {
                BlowupError::InvalidFrame(_) => "InvalidFrame",
                BlowupError::InvalidPmt(_) => "InvalidPmt",
                BlowupError::NegativeExponent(_) => "NegativeExponent",
                BlowupError::LengthMismatch(_) => "LengthMismatch",
                BlowupError::PreconditionViolated(_) => "PreconditionViolated",
                BlowupError::MalformedRelation(_) => "MalformedRelation",
                BlowupError::BudgetExceeded { .. } => unreachable!(),
            };
            Failure::new(2, code, Value::String(other.to_string()))
        }
    }
}

fn extension_failure(e: ExtensionError) -> Failure {
    match e {
        ExtensionError::InconsistentFamily { violations, report } => Failure::new(
            2,
            "InconsistentFamily",
            serde_json::to_value(FamilyOut::inconsistent(&report, &violations))
                .expect("serializes"),
        ),
        other => {
            let code = match &other {
                ExtensionError::NonIntegralDefect { .. } => "NonIntegralDefect",
                ExtensionError::MissingData(_) => "MissingData",
                ExtensionError::InvalidRecord(_) => "InvalidRecord",
                ExtensionError::LkDegreeMismatch(_) => "LkDegreeMismatch",
                ExtensionError::InconsistentFamily { .. } => unreachable!(),
            };
            Failure::new(2, code, Value::String(other.to_string()))
        }
    }
}

fn oracle_failure(e: oracle::OracleError) -> Failure {
    let code = match &e {
        oracle::OracleError::Overflow(_) => "Overflow",
        oracle::OracleError::UnstableCount { .. } => "UnstableCount",
        oracle::OracleError::EnumerationTooLarge { .. } => "EnumerationTooLarge",
        oracle::OracleError::NoPositiveElement => "NoPositiveElement",
        oracle::OracleError::InvalidInput(_) => "InvalidInput",
    };
    Failure::new(2, code, Value::String(e.to_string()))
}

fn parse_input<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text)
        .map_err(|e| Failure::new(2, "MalformedInput", Value::String(e.to_string())))
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| {
            Failure::new(
                2,
                "InputUnreadable",
                Value::String(format!("{}: {e}", p.display())),
            )
        }),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::new(2, "InputUnreadable", Value::String(e.to_string())))?;
            Ok(buf)
        }
    }
}

fn ok<T: Serialize>(value: T) -> Result<Value, Failure> {
    Ok(serde_json::to_value(value).expect("output serializes"))
}

// ---------------------------------------------------------------------------
// input shapes specific to the CLI
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct ChainInput {
    delta: SubgroupSpec,
    sigma: SubgroupSpec,
}

#[derive(Deserialize)]
struct PmtInput {
    frame: FrameSpec,
    step: PmtStep,
    #[serde(default)]
    monomials: Vec<Vec<JsonInt>>,
}

#[derive(Deserialize)]
struct DivideInput {
    frame: FrameSpec,
    m1: Vec<JsonInt>,
    m2: Vec<JsonInt>,
    #[serde(default)]
    budget: Option<usize>,
}

#[derive(Deserialize)]
struct PairedStepInput {
    relation: RelationSpec,
    omega_x2: JsonInt,
}

#[derive(Deserialize)]
struct ReduceFractionInput {
    frame: FrameSpec,
    e: JsonInt,
    numerators: Vec<Vec<JsonInt>>,
    denominators: Vec<Vec<JsonInt>>,
    #[serde(default)]
    budget: Option<usize>,
}

#[derive(Deserialize)]
struct FamilyInput {
    family: Vec<RecordSpec>,
}

#[derive(Deserialize)]
struct CoverInput {
    n: usize,
    generators: Vec<Vec<JsonInt>>,
    representatives: Vec<Vec<JsonInt>>,
}

#[derive(Deserialize)]
struct BfsInput {
    frame: FrameSpec,
    m1: Vec<JsonInt>,
    m2: Vec<JsonInt>,
}

fn subgroup_of(spec: SubgroupSpec) -> Result<Subgroup, Failure> {
    Subgroup::try_from(spec).map_err(group_failure)
}

fn frame_of(spec: FrameSpec) -> Result<Frame, Failure> {
    Frame::try_from(spec).map_err(blowup_failure)
}

fn monomial_of(exps: &[JsonInt]) -> Result<Monomial, Failure> {
    monomial_from_spec(exps).map_err(blowup_failure)
}

fn record_of(spec: RecordSpec) -> Result<ExtensionRecord, Failure> {
    ExtensionRecord::try_from(spec).map_err(|e| match e {
        lexval::wire::RecordSpecError::Group(e) => group_failure(e),
        lexval::wire::RecordSpecError::Extension(e) => extension_failure(e),
    })
}

fn lexvector_of(coords: &[JsonInt], n: usize) -> Result<LexVector, Failure> {
    if coords.len() != n || n == 0 {
        return Err(Failure::new(
            2,
            "LengthMismatch",
            Value::String(format!("vector of length {} for n = {n}", coords.len())),
        ));
    }
    Ok(LexVector::new(coords.iter().map(|c| c.0.clone()).collect()))
}

// ---------------------------------------------------------------------------
// command bodies
// ---------------------------------------------------------------------------

fn run(cli: &Cli) -> Result<Value, Failure> {
    match &cli.command {
        Command::Group(cmd) => run_group(cli, cmd),
        Command::Blowup(cmd) => run_blowup(cli, cmd),
        Command::Ext(cmd) => run_ext(cli, cmd),
        Command::Verify(cmd) => run_verify(cli, cmd),
        Command::Fixtures(cmd) => run_fixtures(cmd),
    }
}

fn run_group(cli: &Cli, cmd: &GroupCmd) -> Result<Value, Failure> {
    let text = read_input(&cli.input)?;
    match cmd {
        GroupCmd::Index => {
            let sub = subgroup_of(parse_input(&text)?)?;
            ok(json!({
                "n": sub.rank(),
                "index": JsonInt(sub.group_index()),
                "hnf": columns_out(sub.hnf_columns()),
            }))
        }
        GroupCmd::Epsilon => {
            let sub = subgroup_of(parse_input(&text)?)?;
            ok(json!({
                "epsilon": JsonInt(sub.initial_index()),
                "index": JsonInt(sub.group_index()),
            }))
        }
        GroupCmd::Cosets => {
            let sub = subgroup_of(parse_input(&text)?)?;
            match sub.semigroup_cover() {
                Some(cover) => ok(json!({
                    "status": "cover",
                    "n": sub.rank(),
                    "generators": columns_out(sub.hnf_columns()),
                    "representatives": cover
                        .representatives
                        .iter()
                        .map(vector_out)
                        .collect::<Vec<_>>(),
                })),
                None => ok(json!({
                    "status": "no-cover",
                    "epsilon": JsonInt(sub.initial_index()),
                    "index": JsonInt(sub.group_index()),
                })),
            }
        }
        GroupCmd::Criterion => {
            let sub = subgroup_of(parse_input(&text)?)?;
            let eps = sub.initial_index();
            let index = sub.group_index();
            ok(json!({
                "unit_triangular": sub.unit_triangular_criterion(),
                "epsilon": JsonInt(eps.clone()),
                "index": JsonInt(index.clone()),
                "epsilon_equals_index": eps == index,
            }))
        }
        GroupCmd::Quotient => {
            let sub = subgroup_of(parse_input(&text)?)?;
            ok(json!({
                "invariant_factors": sub
                    .quotient_invariants()
                    .invariant_factors
                    .into_iter()
                    .map(JsonInt)
                    .collect::<Vec<_>>(),
            }))
        }
        GroupCmd::Chain => {
            let input: ChainInput = parse_input(&text)?;
            let delta = subgroup_of(input.delta)?;
            let sigma = subgroup_of(input.sigma)?;
            let chain = epsilon_chain(&delta, &sigma).map_err(group_failure)?;
            ok(json!({
                "epsilon_gamma_sigma": JsonInt(chain.epsilon_gamma_sigma.clone()),
                "epsilon_sigma_delta": JsonInt(chain.epsilon_sigma_delta.clone()),
                "epsilon_gamma_delta": JsonInt(chain.epsilon_gamma_delta.clone()),
                "index_gamma_sigma": JsonInt(chain.index_gamma_sigma.clone()),
                "index_sigma_delta": JsonInt(chain.index_sigma_delta.clone()),
                "index_gamma_delta": JsonInt(chain.index_gamma_delta.clone()),
                "product_law_holds":
                    chain.epsilon_gamma_sigma * chain.epsilon_sigma_delta
                        == chain.epsilon_gamma_delta,
            }))
        }
    }
}

fn run_blowup(cli: &Cli, cmd: &BlowupCmd) -> Result<Value, Failure> {
    let text = read_input(&cli.input)?;
    let budget_or = |explicit: Option<usize>| explicit.or(cli.budget).unwrap_or(DEFAULT_PMT_BUDGET);
    match cmd {
        BlowupCmd::Pmt => {
            let input: PmtInput = parse_input(&text)?;
            let frame = frame_of(input.frame)?;
            let monomials: Vec<Monomial> = input
                .monomials
                .iter()
                .map(|m| monomial_of(m))
                .collect::<Result<_, _>>()?;
            for m in &monomials {
                if m.len() != frame.n() {
                    return Err(Failure::new(
                        2,
                        "LengthMismatch",
                        Value::String("monomial length must match the frame".into()),
                    ));
                }
            }
            let (frame, monomials) = frame
                .pmt_rewriting(&input.step, &monomials)
                .map_err(blowup_failure)?;
            ok(json!({
                "frame": FrameSpec::from(&frame),
                "monomials": monomials.iter().map(monomial_out).collect::<Vec<_>>(),
            }))
        }
        BlowupCmd::Divide => {
            let input: DivideInput = parse_input(&text)?;
            let frame = frame_of(input.frame)?;
            let m1 = monomial_of(&input.m1)?;
            let m2 = monomial_of(&input.m2)?;
            if m1.len() != frame.n() || m2.len() != frame.n() {
                return Err(Failure::new(
                    2,
                    "LengthMismatch",
                    Value::String("monomial length must match the frame".into()),
                ));
            }
            let out = make_divisible(&frame, &m1, &m2, budget_or(input.budget))
                .map_err(blowup_failure)?;
            ok(json!({
                "steps": out.steps,
                "frame": FrameSpec::from(&out.frame),
                "m1": monomial_out(&out.m1),
                "m2": monomial_out(&out.m2),
            }))
        }
        BlowupCmd::Normalize2 => {
            let spec: RelationSpec = parse_input(&text)?;
            let rel = Relation2::try_from(spec).map_err(blowup_failure)?;
            let out = rank2_normalize(&rel).map_err(blowup_failure)?;
            ok(json!({
                "r": JsonInt(out.r),
                "s": JsonInt(out.s),
                "relation": RelationSpec::from(&out.relation),
            }))
        }
        BlowupCmd::PairedStep => {
            let input: PairedStepInput = parse_input(&text)?;
            let rel = Relation2::try_from(input.relation).map_err(blowup_failure)?;
            let out = paired_step_rank1(&rel, &input.omega_x2.0).map_err(blowup_failure)?;
            ok(json!({
                "relation": RelationSpec::from(&out.relation),
                "omega_x2": JsonInt(out.omega_x2),
            }))
        }
        BlowupCmd::ReduceFraction => {
            let input: ReduceFractionInput = parse_input(&text)?;
            let frame = frame_of(input.frame)?;
            let numerators: Vec<Monomial> = input
                .numerators
                .iter()
                .map(|m| monomial_of(m))
                .collect::<Result<_, _>>()?;
            let denominators: Vec<Monomial> = input
                .denominators
                .iter()
                .map(|m| monomial_of(m))
                .collect::<Result<_, _>>()?;
            let cert = reduce_fraction_supports(
                &frame,
                &input.e.0,
                &numerators,
                &denominators,
                budget_or(input.budget),
            )
            .map_err(blowup_failure)?;
            ok(json!({
                "steps": cert.steps,
                "frame": FrameSpec::from(&cert.frame),
                "e": JsonInt(cert.e),
                "numerators": cert.numerators.iter().map(monomial_out).collect::<Vec<_>>(),
                "denominators": cert.denominators.iter().map(monomial_out).collect::<Vec<_>>(),
                "m1_index": cert.m1_index,
                "n1_index": cert.n1_index,
            }))
        }
    }
}

fn run_ext(cli: &Cli, cmd: &ExtCmd) -> Result<Value, Failure> {
    let text = read_input(&cli.input)?;
    match cmd {
        ExtCmd::Profile => {
            let rec = record_of(parse_input(&text)?)?;
            let profile = statement_profile(&rec).map_err(extension_failure)?;
            ok(ProfileOut::from(&profile))
        }
        ExtCmd::Defect => {
            let rec = record_of(parse_input(&text)?)?;
            let d = rec.defect().map_err(extension_failure)?;
            ok(json!({ "defect": JsonInt(d) }))
        }
        ExtCmd::Family => {
            let input: FamilyInput = parse_input(&text)?;
            let records: Vec<ExtensionRecord> = input
                .family
                .into_iter()
                .map(record_of)
                .collect::<Result<_, _>>()?;
            let report = family_check(&records).map_err(extension_failure)?;
            ok(FamilyOut::consistent(&report))
        }
    }
}

fn run_verify(cli: &Cli, cmd: &VerifyCmd) -> Result<Value, Failure> {
    let text = read_input(&cli.input)?;
    match cmd {
        VerifyCmd::Epsilon => {
            let sub = subgroup_of(parse_input(&text)?)?;
            let bx = match cli.bound {
                Some(b) => oracle::SearchBox::new(b),
                None => oracle::SearchBox::default_for(sub.rank()),
            };
            let fast = sub.initial_index();
            let brute = oracle::brute_epsilon(&sub, &bx).map_err(oracle_failure)?;
            if fast != brute {
                return Err(Failure::new(
                    2,
                    "VerificationFailed",
                    json!({
                        "epsilon": JsonInt(fast),
                        "brute_epsilon": JsonInt(brute),
                    }),
                ));
            }
            ok(json!({
                "epsilon": JsonInt(fast),
                "brute_epsilon": JsonInt(brute),
                "agree": true,
            }))
        }
        VerifyCmd::Cover => {
            let input: CoverInput = parse_input(&text)?;
            let sub = subgroup_of(SubgroupSpec {
                n: input.n,
                generators: input.generators,
            })?;
            let reps: Vec<LexVector> = input
                .representatives
                .iter()
                .map(|r| lexvector_of(r, input.n))
                .collect::<Result<_, _>>()?;
            let bx = match cli.bound {
                Some(b) => oracle::SearchBox::new(b),
                None => oracle::SearchBox::default_for(sub.rank()),
            };
            let verdict = oracle::brute_cover_verify(&sub, &reps, &bx).map_err(oracle_failure)?;
            if !verdict.valid {
                return Err(Failure::new(
                    2,
                    "VerificationFailed",
                    json!({
                        "valid": false,
                        "counterexample": verdict.counterexample.map(|c| vector_out(&c)),
                    }),
                ));
            }
            ok(json!({ "valid": true, "bound": bx.bound() }))
        }
        VerifyCmd::Bfs => {
            let input: BfsInput = parse_input(&text)?;
            let frame = frame_of(input.frame)?;
            let m1 = monomial_of(&input.m1)?;
            let m2 = monomial_of(&input.m2)?;
            if m1.len() != frame.n() || m2.len() != frame.n() {
                return Err(Failure::new(
                    2,
                    "LengthMismatch",
                    Value::String("monomial length must match the frame".into()),
                ));
            }
            let depth = cli.budget.unwrap_or(8);
            if depth > 16 {
                return Err(Failure::new(
                    2,
                    "InvalidInput",
                    Value::String("BFS depth above 16 is not supported".into()),
                ));
            }
            match oracle::pmt_bfs(&frame, &m1, &m2, depth) {
                Some(steps) => ok(json!({ "found": true, "depth": depth, "steps": steps })),
                None => Err(Failure::new(
                    3,
                    "NotFound",
                    json!({ "found": false, "depth": depth }),
                )),
            }
        }
    }
}

fn run_fixtures(cmd: &FixturesCmd) -> Result<Value, Failure> {
    match cmd {
        FixturesCmd::List => {
            let entries: Vec<Value> = fixtures::names()
                .iter()
                .map(|name| {
                    let f = fixtures::load(name).expect("listed fixture loads");
                    json!({ "name": f.name, "description": f.description })
                })
                .collect();
            ok(json!({ "fixtures": entries }))
        }
        FixturesCmd::Run { name } => {
            let Some(fixture) = fixtures::load(name) else {
                return Err(Failure::new(
                    2,
                    "UnknownFixture",
                    Value::String(format!("no fixture named {name:?}")),
                ));
            };
            let report = fixtures::run(&fixture).map_err(extension_failure)?;
            if !report.all_pass {
                return Err(Failure::new(
                    2,
                    "FixtureMismatch",
                    serde_json::to_value(&report).expect("serializes"),
                ));
            }
            ok(report)
        }
    }
}

fn emit(output: &Option<PathBuf>, value: &Value) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).expect("output serializes");
    text.push('\n');
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => match emit(&cli.output, &value) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error writing output: {e}");
                ExitCode::from(2)
            }
        },
        Err(failure) => {
            let value = failure.to_value();
            if emit(&cli.output, &value).is_err() {
                eprintln!("{value}");
            }
            ExitCode::from(failure.exit)
        }
    }
}
