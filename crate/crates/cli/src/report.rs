// SPDX-License-Identifier: Apache-2.0

//! Report documents: JSON emission behind the shipped schema, and a text table.

use std::fmt::Write;
use std::path::Path;
use std::sync::OnceLock;
use std::time::Instant;

use kaschlab::{AnyAlgebra, FieldSpec, PropertyReport, Side};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const SCHEMA: &str = include_str!("../../../docs/report.schema.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraMeta {
    pub name: String,
    pub field: String,
    pub dim: usize,
}

/// Wall-clock milliseconds per phase.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub parse_ms: f64,
    pub analyze_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub input: InputDigest,
    pub algebra: AlgebraMeta,
    pub report: PropertyReport,
    pub timing: Timing,
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

impl ReportDocument {
    /// Parses and analyzes one input.
    pub fn from_source(path: &str, text: &str, field: Option<FieldSpec>) -> Result<Self, kaschlab::Error> {
        let t0 = Instant::now();
        let alg = AnyAlgebra::parse(text, field)?;
        let parse_ms = millis(t0);
        let t1 = Instant::now();
        let report = alg.analyze()?;
        let analyze_ms = millis(t1);
        Ok(ReportDocument {
            tool: "kaschlab".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            input: InputDigest { path: path.into(), sha256: sha256_hex(text.as_bytes()) },
            algebra: AlgebraMeta {
                name: alg.name().into(),
                field: alg.field_spec().to_string(),
                dim: alg.dim(),
            },
            report,
            timing: Timing { parse_ms, analyze_ms },
        })
    }

    pub fn from_file(path: &Path, field: Option<FieldSpec>) -> Result<Self, CliError> {
        let text = crate::read(path)?;
        Self::from_source(&path.display().to_string(), &text, field).map_err(|e| CliError::in_file(path, e))
    }

    /// Schema-checked JSON value.
    pub fn to_value(&self) -> Result<Value, CliError> {
        let v = serde_json::to_value(self)?;
        validate(&v)?;
        Ok(v)
    }
}

fn validator() -> &'static jsonschema::Validator {
    static V: OnceLock<jsonschema::Validator> = OnceLock::new();
    V.get_or_init(|| {
        let schema: Value = serde_json::from_str(SCHEMA).expect("shipped schema is valid JSON");
        jsonschema::validator_for(&schema).expect("shipped schema compiles")
    })
}

/// Checks a report document against the shipped schema.
pub fn validate(doc: &Value) -> Result<(), CliError> {
    let errors: Vec<String> =
        validator().iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(CliError::Schema(errors.join("; ")))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TextOptions {
    /// Only this side's one-sided properties; both when `None`.
    pub side: Option<Side>,
    pub certificates: bool,
}

const SIDED: &[(&str, &str)] = &[
    ("kasch", "Kasch"),
    ("dual_kasch", "dual Kasch"),
    ("strongly_dual_kasch", "strongly dual Kasch"),
    ("self_injective", "self-injective"),
    ("v_ring", "V-ring"),
    ("gv_ring", "GV-ring"),
    ("hereditary", "hereditary"),
    ("h_ring", "H-ring"),
];

const TWO_SIDED: &[(&str, &str)] = &[
    ("qf", "QF"),
    ("weakly_symmetric", "weakly symmetric"),
    ("retractable_ER", "E(A) retractable"),
    ("coretractable_ER", "E(A) coretractable"),
];

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn line(out: &mut String, label: &str, key: &str, value: bool, r: &PropertyReport, opts: TextOptions) {
    let _ = write!(out, "{label}: {}", yes_no(value));
    match r.certificates.get(key) {
        // witnesses for negative answers are always shown
        Some(c) if !value => {
            let _ = write!(out, " — witness: {c}");
        }
        Some(c) if opts.certificates => {
            let _ = write!(out, " — certificate: {c}");
        }
        _ => {}
    }
    out.push('\n');
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// Human-readable table with the same booleans as the JSON document.
pub fn render_text(doc: &ReportDocument, opts: TextOptions) -> String {
    let r = &doc.report;
    let s = &r.algebra;
    let flags = r.flags();
    let mut out = String::new();
    let _ = writeln!(out, "{} over {} ({})", s.name, s.field, doc.input.path);
    let _ = writeln!(
        out,
        "dimension {}, radical {}, nilpotency index {}, simple classes {}",
        s.dim, s.radical_dim, s.nilpotency_index, s.classes
    );
    let cartan: Vec<String> = s.cartan.iter().map(|row| format!("[{}]", join(row))).collect();
    let _ = writeln!(out, "Cartan matrix: [{}]", cartan.join(", "));
    let sides = match opts.side {
        Some(side) => vec![side],
        None => Side::BOTH.to_vec(),
    };
    for (key, label) in SIDED {
        for side in &sides {
            let k = format!("{key}_{side}");
            line(&mut out, &format!("{label} ({side})"), &k, flags[k.as_str()], r, opts);
        }
    }
    for (key, label) in TWO_SIDED {
        line(&mut out, label, key, flags[key], r, opts);
    }
    if let Some(c) = r.condition_c {
        line(&mut out, "condition (c)", "condition_c", c, r, opts);
    }
    match &r.nakayama {
        Some(p) => {
            let _ = write!(out, "Nakayama permutation: [{}]", join(p));
            if opts.certificates {
                if let Some(c) = r.certificates.get("nakayama") {
                    let _ = write!(out, " — {c}");
                }
            }
            out.push('\n');
        }
        None => out.push_str("Nakayama permutation: none (not self-injective)\n"),
    }
    if opts.certificates {
        for side in &sides {
            let routes = match side {
                Side::Right => &r.agreement.right,
                Side::Left => &r.agreement.left,
            };
            let _ = writeln!(
                out,
                "dual Kasch routes ({side}): DK1 {} DK2 {} DK3 {} DK4 {}",
                yes_no(routes.dk1),
                yes_no(routes.dk2),
                yes_no(routes.dk3),
                yes_no(routes.dk4)
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const T2: &str = "algebra T2 over QQ {\n  basis e1, e2, a;\n  unit = e1 + e2;\n  mult e1*e1 = e1;\n  mult e1*a = a;\n  mult e2*e2 = e2;\n  mult a*e2 = a;\n}\n";

    #[test]
    fn document_validates() {
        let doc = ReportDocument::from_source("T2.alg", T2, None).unwrap();
        let v = doc.to_value().unwrap();
        assert_eq!(v["report"]["kasch_right"], Value::Bool(false));
        assert_eq!(v["input"]["sha256"].as_str().unwrap().len(), 64);
    }

    #[test]
    fn schema_rejects_missing_keys() {
        let doc = ReportDocument::from_source("T2.alg", T2, Some(FieldSpec::Prime(101))).unwrap();
        let mut v = serde_json::to_value(&doc).unwrap();
        v["report"].as_object_mut().unwrap().remove("qf");
        assert!(validate(&v).is_err());
    }

    #[test]
    fn text_shows_witnesses_for_negative_answers() {
        let doc = ReportDocument::from_source("T2.alg", T2, None).unwrap();
        let text = render_text(&doc, TextOptions::default());
        assert!(text.contains("dual Kasch (right): NO — witness: Hom(E(e2·A), S2) = 0"), "{text}");
        assert!(!text.contains("certificate:"));
        let right = render_text(&doc, TextOptions { side: Some(Side::Right), certificates: true });
        assert!(!right.contains("(left)"));
        assert!(right.contains("DK1 NO"));
    }

    #[test]
    fn text_and_json_agree() {
        let doc = ReportDocument::from_source("T2.alg", T2, None).unwrap();
        let text = render_text(&doc, TextOptions::default());
        for (key, label) in SIDED {
            for side in Side::BOTH {
                let value = doc.report.flags()[format!("{key}_{side}").as_str()];
                assert!(text.contains(&format!("{label} ({side}): {}", yes_no(value))));
            }
        }
    }
}
