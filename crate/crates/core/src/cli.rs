//! JSON batch front-end: one command applied to one presentation file.
//!
//! All logic lives here so it can be driven from tests; `src/bin/monofol.rs`
//! only parses arguments and writes the outcome.

use std::fs;
use std::path::PathBuf;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::blowup::{atlas, center_normal_crossing_check, Chart};
use crate::error::Error;
use crate::presentation::{validate_json, MonomialChange, Presentation, PresentationJson, RationalPoint};
use crate::rat::format_rat;
use crate::subspace::SubspaceJson;
use crate::symbolic::{check_first_integrals, replay_last_chart, verify_presentation, Check, Report};
use crate::Rat;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 2;
    pub const INVALID_CENTER: i32 = 3;
    pub const LENGTH_MISMATCH: i32 = 4;
    pub const VERIFICATION_FAILED: i32 = 5;
}

/// Number of random non-integral exponents sampled by `verify`.
pub const VERIFY_SAMPLES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Perp,
    Blowup,
    Atlas,
    Localize,
    Verify,
    Freedirs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub input: PathBuf,
    pub command: Command,
    /// 1-based center indices.
    pub center: Option<Vec<usize>>,
    /// 1-based chart index.
    pub chart: Option<usize>,
    pub point: Option<Vec<Rat>>,
    pub seed: u64,
    pub output: Option<PathBuf>,
}

impl Job {
    pub fn new(command: Command, input: impl Into<PathBuf>) -> Self {
        Job { input: input.into(), command, center: None, chart: None, point: None, seed: 0, output: None }
    }
}

/// What a job produced: an exit code and a JSON document. Errors carry
/// `{"error": {"kind": ..., "message": ...}}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub json: Value,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { code: exit::OK, json }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::IndexOutOfRange { .. } => exit::PARSE,
            Error::InvalidCenter(_) => exit::INVALID_CENTER,
            Error::LengthMismatch { .. } => exit::LENGTH_MISMATCH,
            Error::NonCanonicalBasis => exit::VERIFICATION_FAILED,
        };
        Outcome { code, json: json!({ "error": { "kind": e.kind(), "message": e.to_string() } }) }
    }

    pub fn is_error(&self) -> bool {
        self.json.get("error").is_some()
    }

    /// Pretty JSON with a trailing newline; this is the byte-exact output.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

/// Reads the input file, runs the job and writes the output file when one
/// is requested. Errors are never written to the output file.
pub fn run(job: &Job) -> Outcome {
    let text = match fs::read_to_string(&job.input) {
        Ok(t) => t,
        Err(e) => return Outcome::error(&Error::Parse(format!("{}: {e}", job.input.display()))),
    };
    let outcome = execute(job, &text);
    if let (Some(path), false) = (&job.output, outcome.is_error()) {
        if let Err(e) = fs::write(path, outcome.render()) {
            return Outcome::error(&Error::Parse(format!("{}: {e}", path.display())));
        }
    }
    outcome
}

/// Runs a job on the given presentation text.
pub fn execute(job: &Job, text: &str) -> Outcome {
    let raw: PresentationJson = match serde_json::from_str(text) {
        Ok(r) => r,
        Err(e) => return Outcome::error(&Error::Parse(e.to_string())),
    };
    if job.command == Command::Validate {
        return validate(&raw);
    }
    let p = match Presentation::try_from(&raw) {
        Ok(p) => p,
        Err(e) => return Outcome::error(&e),
    };
    let result = match job.command {
        Command::Validate => unreachable!(),
        Command::Perp => to_value(&SubspaceJson::from(&p.subspace().perp())),
        Command::Freedirs => {
            let dirs: Vec<usize> = p.free_directions().iter().map(|i| i + 1).collect();
            Ok(json!({ "free_directions": dirs }))
        }
        Command::Blowup => blowup(job, &p),
        Command::Atlas => run_atlas(job, &p),
        Command::Localize => localize(job, &p),
        Command::Verify => return verify(job, &raw, &p),
    };
    match result {
        Ok(v) => Outcome::ok(v),
        Err(e) => Outcome::error(&e),
    }
}

fn to_value<T: Serialize>(t: &T) -> Result<Value, Error> {
    serde_json::to_value(t).map_err(|e| Error::Parse(e.to_string()))
}

fn presentation_value(p: &Presentation) -> Value {
    serde_json::to_value(PresentationJson::from(p)).expect("presentations serialize")
}

fn validate(raw: &PresentationJson) -> Outcome {
    let violations = validate_json(raw);
    if violations.is_empty() {
        return Outcome::ok(json!({ "ok": true }));
    }
    let list: Vec<Value> =
        violations.iter().map(|e| json!({ "kind": e.kind(), "message": e.to_string() })).collect();
    Outcome { code: exit::VERIFICATION_FAILED, json: json!({ "ok": false, "violations": list }) }
}

fn require_center(job: &Job) -> Result<&[usize], Error> {
    job.center
        .as_deref()
        .ok_or_else(|| Error::Parse("this command requires --center".into()))
}

fn blowup(job: &Job, p: &Presentation) -> Result<Value, Error> {
    let indices = require_center(job)?;
    let j = job.chart.ok_or_else(|| Error::Parse("blowup requires --chart".into()))?;
    let report = center_normal_crossing_check(p, indices)?;
    let j = j
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidCenter("chart index 0 is out of range".into()))?;
    let chart = Chart::new(report.center, j)?;
    Ok(presentation_value(&chart.presentation(p)?))
}

fn run_atlas(job: &Job, p: &Presentation) -> Result<Value, Error> {
    let report = center_normal_crossing_check(p, require_center(job)?)?;
    let charts = atlas(p, &report.center)?;
    Ok(Value::Array(
        charts
            .iter()
            .map(|(j, q)| json!({ "chart": j + 1, "presentation": presentation_value(q) }))
            .collect(),
    ))
}

fn change_value(change: &MonomialChange) -> Value {
    let entry = |i: &usize, r: &Rat| json!({ "index": i + 1, "value": format_rat(r) });
    let shifts: Vec<Value> = change.shifts.iter().map(|(i, r)| entry(i, r)).collect();
    let multipliers: Vec<Value> = change
        .multipliers
        .iter()
        .map(|(k, exps)| {
            let exps: Vec<Value> = exps.iter().map(|(i, r)| entry(i, r)).collect();
            json!({ "index": k + 1, "exponents": exps })
        })
        .collect();
    json!({ "shifts": shifts, "multipliers": multipliers })
}

fn localize(job: &Job, p: &Presentation) -> Result<Value, Error> {
    let coords = job.point.clone().ok_or_else(|| Error::Parse("localize requires --point".into()))?;
    let loc = p.localize(&RationalPoint(coords))?;
    let change = loc.change.as_ref().map_or(Value::Null, change_value);
    Ok(json!({ "presentation": presentation_value(&loc.presentation), "change": change }))
}

fn verify(job: &Job, raw: &PresentationJson, p: &Presentation) -> Outcome {
    let mut report = Report::default();
    let violations: Vec<String> = validate_json(raw).iter().map(ToString::to_string).collect();
    let ok = violations.is_empty();
    report.push(Check {
        name: "structure".into(),
        ok,
        detail: if ok { "indices in range, canonical basis".into() } else { violations.join("; ") },
    });
    report.extend(verify_presentation(p));
    if let Some(check) = replay_last_chart(p) {
        report.push(check);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(job.seed);
    report.push(check_first_integrals(p, &mut rng, VERIFY_SAMPLES));

    let code = if report.ok() { exit::OK } else { exit::VERIFICATION_FAILED };
    Outcome { code, json: json!({ "ok": report.ok(), "checks": report.checks }) }
}
