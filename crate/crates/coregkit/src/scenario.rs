//! Declarative scenarios: a list of operations whose results are bound to
//! names, followed by tagged expectations on those results.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use polyring::{parse_rat, Rat};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::ops::run_op;
use crate::CoregError;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    /// Quoted from the literature.
    Literature,
    /// Immediate from definitions or harness behaviour.
    Trivial,
    /// Recomputed independently of the code under test.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub op: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bind: Option<String>,
    #[serde(default)]
    pub args: Value,
    /// Bind `{"error": message}` instead of aborting when the op fails.
    #[serde(default)]
    pub allow_error: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Compare {
    #[default]
    Eq,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    /// Dotted path into the bound results, e.g. `bu.d_restrict.class`.
    pub value: String,
    pub equals: Value,
    #[serde(default)]
    pub compare: Compare,
    #[serde(default)]
    pub tag: Option<Tag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub name: String,
    pub citation: String,
    #[serde(default)]
    pub seed: u64,
    pub steps: Vec<Step>,
    pub expect: Vec<Expectation>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StepResult {
    pub op: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bind: Option<String>,
    pub result: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    pub value: String,
    pub expected: Value,
    pub actual: Value,
    pub compare: Compare,
    pub tag: Tag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub name: String,
    pub citation: String,
    pub seed: u64,
    pub steps: Vec<StepResult>,
    pub expectations: Vec<Outcome>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "scenario {} ({})", self.name, self.citation);
        for o in &self.expectations {
            let status = if o.pass { "ok  " } else { "FAIL" };
            let _ = write!(s, "  {status} {} [{:?}]", o.value, o.tag);
            match &o.diff {
                Some(d) => {
                    let _ = writeln!(s, ": {d}");
                }
                None => {
                    let _ = writeln!(s, " = {}", show(&o.actual));
                }
            }
        }
        let _ = writeln!(s, "{} passed, {} failed", self.passed, self.failed);
        s
    }
}

fn show(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn as_rat(v: &Value) -> Option<Rat> {
    match v {
        Value::Number(n) => n.as_i64().map(|x| Rat::from_integer(x.into())),
        Value::String(s) => parse_rat(s).ok(),
        _ => None,
    }
}

fn lookup<'a>(bound: &'a BTreeMap<String, Value>, path: &str) -> Result<&'a Value, CoregError> {
    let mut parts = path.split('.');
    let head = parts.next().unwrap_or_default();
    let mut cur = bound.get(head).ok_or_else(|| CoregError::BadRef(path.to_string()))?;
    for p in parts {
        cur = match cur {
            Value::Array(a) => p.parse::<usize>().ok().and_then(|i| a.get(i)),
            Value::Object(m) => m.get(p),
            _ => None,
        }
        .ok_or_else(|| CoregError::BadRef(path.to_string()))?;
    }
    Ok(cur)
}

/// Replaces `"$name.path"` strings by the bound value; `"$$..."` escapes.
fn resolve(v: &Value, bound: &BTreeMap<String, Value>) -> Result<Value, CoregError> {
    Ok(match v {
        Value::String(s) if s.starts_with("$$") => Value::String(s[1..].to_string()),
        Value::String(s) if s.starts_with('$') => lookup(bound, &s[1..])?.clone(),
        Value::Array(a) => Value::Array(a.iter().map(|x| resolve(x, bound)).collect::<Result<_, _>>()?),
        Value::Object(m) => Value::Object(
            m.iter().map(|(k, x)| Ok((k.clone(), resolve(x, bound)?))).collect::<Result<_, CoregError>>()?,
        ),
        other => other.clone(),
    })
}

fn compare(actual: &Value, expected: &Value, how: Compare) -> (bool, Option<String>) {
    let neg = match how {
        Compare::Eq => "≠",
        Compare::Lt => "≮",
        Compare::Le => "≰",
        Compare::Gt => "≯",
        Compare::Ge => "≱",
    };
    let pass = match (as_rat(actual), as_rat(expected)) {
        (Some(a), Some(e)) => match how {
            Compare::Eq => a == e,
            Compare::Lt => a < e,
            Compare::Le => a <= e,
            Compare::Gt => a > e,
            Compare::Ge => a >= e,
        },
        _ => how == Compare::Eq && actual == expected,
    };
    (pass, (!pass).then(|| format!("{} {neg} {}", show(actual), show(expected))))
}

pub fn validate(s: &Scenario) -> Result<(), CoregError> {
    for (i, e) in s.expect.iter().enumerate() {
        if e.tag.is_none() {
            return Err(CoregError::Untagged(i));
        }
    }
    for st in &s.steps {
        if !crate::ops::OPS.contains(&st.op.as_str()) {
            return Err(CoregError::UnknownOp(st.op.clone()));
        }
    }
    Ok(())
}

pub fn execute(s: &Scenario) -> Result<Report, CoregError> {
    validate(s)?;
    let mut bound: BTreeMap<String, Value> = BTreeMap::new();
    let mut steps = Vec::new();
    for st in &s.steps {
        let args = resolve(&st.args, &bound)?;
        let result = match run_op(&st.op, &args, s.seed) {
            Ok(v) => v,
            Err(e) if st.allow_error => serde_json::json!({ "error": e.to_string() }),
            Err(e) => return Err(e),
        };
        if let Some(name) = &st.bind {
            bound.insert(name.clone(), result.clone());
        }
        steps.push(StepResult { op: st.op.clone(), bind: st.bind.clone(), result });
    }
    let mut expectations = Vec::new();
    for e in &s.expect {
        let actual = lookup(&bound, &e.value)?.clone();
        let (pass, diff) = compare(&actual, &e.equals, e.compare);
        expectations.push(Outcome {
            value: e.value.clone(),
            expected: e.equals.clone(),
            actual,
            compare: e.compare,
            tag: e.tag.expect("validated"),
            source: e.source.clone(),
            pass,
            diff,
        });
    }
    let failed = expectations.iter().filter(|o| !o.pass).count();
    Ok(Report {
        name: s.name.clone(),
        citation: s.citation.clone(),
        seed: s.seed,
        passed: expectations.len() - failed,
        failed,
        steps,
        expectations,
    })
}

pub fn run_scenario_str(text: &str) -> Result<Report, CoregError> {
    let s: Scenario =
        serde_json::from_str(text).map_err(|e| CoregError::Input(format!("scenario does not parse: {e}")))?;
    execute(&s)
}

pub fn run_scenario(path: &Path) -> Result<Report, CoregError> {
    let text = std::fs::read_to_string(path).map_err(|e| CoregError::Input(format!("{}: {e}", path.display())))?;
    run_scenario_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUSP: &str = r#"{
        "name": "cusp", "citation": "plane cusp", "seed": 1,
        "steps": [{ "op": "curve_lct", "bind": "c", "args": { "germ": "x1^2 + x2^3" } }],
        "expect": [{ "value": "c.value", "equals": "5/9", "tag": "trivial" }]
    }"#;

    #[test]
    fn wrong_expectation_is_reported() {
        let r = run_scenario_str(CUSP).unwrap();
        assert_eq!((r.passed, r.failed, r.exit_code()), (0, 1, 1));
        assert_eq!(r.expectations[0].diff.as_deref(), Some("5/6 ≠ 5/9"));
    }

    #[test]
    fn untagged_and_unknown() {
        let untagged = CUSP.replace(r#", "tag": "trivial""#, "");
        assert_eq!(run_scenario_str(&untagged), Err(CoregError::Untagged(0)));
        let unknown = CUSP.replace("curve_lct", "curve_lkt");
        assert_eq!(run_scenario_str(&unknown), Err(CoregError::UnknownOp("curve_lkt".into())));
        assert!(matches!(run_scenario_str("{"), Err(CoregError::Input(_))));
        let bad_tag = CUSP.replace("trivial", "folklore");
        assert!(matches!(run_scenario_str(&bad_tag), Err(CoregError::Input(_))));
    }

    #[test]
    fn references_thread_values() {
        let text = r#"{
            "name": "thread", "citation": "-",
            "steps": [
                { "op": "curve_blowup", "bind": "bu", "args": { "normal": [0, 0], "ldot": 1 } },
                { "op": "zero_stratum", "bind": "z", "args": { "d1": "$bu.d_restrict", "d2": "$bu.d_restrict" } }
            ],
            "expect": [
                { "value": "z.points", "equals": 2, "tag": "derived" },
                { "value": "bu.e_cubed", "equals": 0, "tag": "derived" },
                { "value": "z.points", "equals": "3/2", "compare": "gt", "tag": "trivial" }
            ]
        }"#;
        let r = run_scenario_str(text).unwrap();
        assert!(r.ok(), "{}", r.to_text());
        let missing = text.replace("$bu.d_restrict\", \"d2", "$bx.d_restrict\", \"d2");
        assert_eq!(run_scenario_str(&missing), Err(CoregError::BadRef("bx.d_restrict".into())));
    }

    #[test]
    fn allowed_errors_bind() {
        let text = r#"{
            "name": "err", "citation": "-",
            "steps": [{ "op": "curve_lct", "bind": "c", "args": { "germ": "x1^2*x2^2" }, "allow_error": true }],
            "expect": [{ "value": "c.error", "equals": "x", "tag": "trivial" }]
        }"#;
        let r = run_scenario_str(text).unwrap();
        assert!(r.expectations[0].actual.as_str().unwrap().contains("reduced"));
    }
}
