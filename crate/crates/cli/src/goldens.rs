// SPDX-License-Identifier: Apache-2.0

//! Golden reports for the checked-in example algebras.
//!
//! Every `examples/<stem>.alg` is analyzed over QQ and over GF(101) and
//! compared byte for byte with `goldens/<stem>.<QQ|GF101>.json`.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use kaschlab::{AnyAlgebra, FieldSpec, PropertyReport};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const FIELDS: [FieldSpec; 2] = [FieldSpec::Rationals, FieldSpec::Prime(101)];

/// Where each expected value comes from.
pub fn provenance(stem: &str) -> Option<&'static str> {
    Some(match stem {
        "T2" => "hand computation on upper triangular 2x2 matrices: S1 is not a submodule of A and S2 is not a quotient of E(A)",
        "T3" => "hand computation on upper triangular 3x3 matrices, same pattern as T2",
        "T2_quiver" => "quiver presentation of T2; flags must equal those of T2",
        "R4" => "hand computation: self-injective with two simples exchanged by the socle, so the Nakayama permutation is a transposition",
        "R4_quiver" => "quiver presentation of R4; flags must equal those of R4",
        "A5" => "hand computation: every simple right module embeds in A while some simple left module does not; dual Kasch holds on the left only",
        "A5op" => "opposite algebra of A5; every one-sided flag is the mirror of A5",
        "dual_numbers" => "hand computation: local self-injective algebra with trivial Nakayama permutation",
        "M2" => "semisimple algebra, so every property holds",
        "kxk" => "semisimple commutative product of two copies of the field",
        "DxD" => "product of two copies of the dual numbers; flags are those of a single factor",
        "DxD_skew" => "skew group algebra of DxD under the factor swap; right dual Kasch is the independently known value, other flags are recorded output",
        "DxD_fixed" => "fixed ring of the factor swap on DxD, isomorphic to the dual numbers",
        _ => return None,
    })
}

pub fn field_tag(field: FieldSpec) -> String {
    field.to_string().replace(['(', ')'], "")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenCase {
    pub stem: String,
    pub field: FieldSpec,
    pub algebra: PathBuf,
    pub expected: PathBuf,
    pub provenance: &'static str,
}

impl GoldenCase {
    pub fn name(&self) -> String {
        format!("{}.{}", self.stem, field_tag(self.field))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Golden {
    pub case: String,
    pub algebra: String,
    pub field: String,
    pub provenance: String,
    pub report: PropertyReport,
}

/// All cases under `root`, sorted by stem then field.
pub fn cases(root: &Path) -> Result<Vec<GoldenCase>, CliError> {
    let dir = root.join("examples");
    let entries = std::fs::read_dir(&dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
    let mut stems = Vec::new();
    for entry in entries {
        let path = entry.map_err(|source| CliError::Io { path: dir.display().to_string(), source })?.path();
        if path.extension().is_some_and(|e| e == "alg") {
            if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                stems.push(stem.to_string());
            }
        }
    }
    stems.sort();
    let mut out = Vec::new();
    for stem in stems {
        let note = provenance(&stem)
            .ok_or_else(|| CliError::Usage(format!("example `{stem}` has no provenance note")))?;
        for field in FIELDS {
            let mut case = GoldenCase {
                stem: stem.clone(),
                field,
                algebra: PathBuf::from("examples").join(format!("{stem}.alg")),
                expected: PathBuf::new(),
                provenance: note,
            };
            case.expected = PathBuf::from("goldens").join(format!("{}.json", case.name()));
            out.push(case);
        }
    }
    Ok(out)
}

pub fn load(root: &Path, case: &GoldenCase) -> Result<AnyAlgebra, CliError> {
    crate::load(&root.join(&case.algebra), Some(case.field))
}

/// Canonical golden text for a case.
pub fn render(root: &Path, case: &GoldenCase) -> Result<String, CliError> {
    let alg = load(root, case)?;
    let report = alg.analyze().map_err(|e| CliError::in_file(&case.algebra, e))?;
    let golden = Golden {
        case: case.name(),
        algebra: case.algebra.display().to_string().replace('\\', "/"),
        field: case.field.to_string(),
        provenance: case.provenance.to_string(),
        report,
    };
    Ok(serde_json::to_string_pretty(&golden)? + "\n")
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub case: String,
    pub passed: bool,
    /// Field-level differences, `path: expected -> actual`.
    pub diff: Vec<String>,
    pub elapsed: Duration,
}

/// Paths at which two JSON values differ.
pub fn diff(expected: &Value, actual: &Value) -> Vec<String> {
    fn walk(path: String, a: &Value, b: &Value, out: &mut Vec<String>) {
        match (a, b) {
            (Value::Object(x), Value::Object(y)) => {
                let mut keys: Vec<&String> = x.keys().chain(y.keys()).collect();
                keys.sort();
                keys.dedup();
                for k in keys {
                    let p = format!("{path}/{k}");
                    match (x.get(k), y.get(k)) {
                        (Some(u), Some(v)) => walk(p, u, v, out),
                        (u, v) => out.push(format!("{p}: {} -> {}", show(u), show(v))),
                    }
                }
            }
            (Value::Array(x), Value::Array(y)) if x.len() == y.len() => {
                for (i, (u, v)) in x.iter().zip(y).enumerate() {
                    walk(format!("{path}/{i}"), u, v, out);
                }
            }
            _ if a != b => out.push(format!("{path}: {a} -> {b}")),
            _ => {}
        }
    }
    fn show(v: Option<&Value>) -> String {
        v.map_or_else(|| "(missing)".into(), Value::to_string)
    }
    let mut out = Vec::new();
    walk(String::new(), expected, actual, &mut out);
    out
}

/// Checks one case, or rewrites its golden when `update` is set.
pub fn check(root: &Path, case: &GoldenCase, update: bool) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let actual = render(root, case)?;
    let elapsed = start.elapsed();
    let path = root.join(&case.expected);
    if update {
        std::fs::write(&path, &actual).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        return Ok(Outcome { case: case.name(), passed: true, diff: Vec::new(), elapsed });
    }
    let expected = match std::fs::read_to_string(&path) {
        Ok(s) => s,
        Err(_) => {
            let diff = vec![format!("missing golden {}", case.expected.display())];
            return Ok(Outcome { case: case.name(), passed: false, diff, elapsed });
        }
    };
    if expected == actual {
        return Ok(Outcome { case: case.name(), passed: true, diff: Vec::new(), elapsed });
    }
    let mut d = match serde_json::from_str::<Value>(&expected) {
        Ok(e) => diff(&e, &serde_json::from_str(&actual)?),
        Err(e) => vec![format!("golden is not JSON: {e}")],
    };
    if d.is_empty() {
        d.push("formatting differs".into());
    }
    Ok(Outcome { case: case.name(), passed: false, diff: d, elapsed })
}

pub fn run(root: &Path, update: bool) -> Result<Vec<Outcome>, CliError> {
    cases(root)?.iter().map(|c| check(root, c, update)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn field_tags() {
        assert_eq!(field_tag(FieldSpec::Prime(101)), "GF101");
        assert_eq!(field_tag(FieldSpec::Rationals), "QQ");
    }

    #[test]
    fn diff_reports_paths() {
        let a = json!({"report": {"qf": true, "nakayama": [1, 2]}});
        let b = json!({"report": {"qf": false, "nakayama": [2, 1], "extra": 0}});
        let d = diff(&a, &b);
        assert_eq!(
            d,
            vec![
                "/report/extra: (missing) -> 0",
                "/report/nakayama/0: 1 -> 2",
                "/report/nakayama/1: 2 -> 1",
                "/report/qf: true -> false",
            ]
        );
    }
}
