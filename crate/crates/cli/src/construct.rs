// SPDX-License-Identifier: Apache-2.0

//! Builder specs such as `triangular 3 over GF(7)` or `skewgroup dxd.alg swap`.

use std::path::Path;

use kaschlab::{AnyAlgebra, FieldSpec};

use crate::error::CliError;

pub const BUILDERS: &[&str] = &[
    "triangular N",
    "matrix N",
    "truncated N",
    "zoo NAME",
    "groupalgebra cyclic N",
    "skewgroup FILE swap",
    "fixedring FILE swap",
    "opposite FILE",
    "product FILE FILE",
    "amplify FILE N",
    "trivext FILE",
];

fn usage(builder: &str) -> CliError {
    let forms: Vec<&str> = BUILDERS.iter().copied().filter(|b| b.split(' ').next() == Some(builder)).collect();
    CliError::Usage(format!("usage: construct {} [over FIELD]", forms.join(" | ")))
}

fn number(s: &str, builder: &str) -> Result<usize, CliError> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(CliError::Usage(format!("{builder}: expected a positive integer, found `{s}`"))),
    }
}

/// Builds the algebra described by `words`. A trailing `over FIELD` picks
/// the field; file-based builders otherwise keep the file's field.
pub fn build(words: &[String]) -> Result<AnyAlgebra, CliError> {
    let (words, field) = match words {
        [rest @ .., over, f] if over == "over" => (rest, Some(f.parse::<FieldSpec>()?)),
        _ => (words, None),
    };
    let Some((builder, args)) = words.split_first() else {
        return Err(CliError::Usage("missing builder".into()));
    };
    let b = builder.as_str();
    let k = field.unwrap_or(FieldSpec::Rationals);
    let file = |p: &String| crate::load(Path::new(p), field);
    let alg = match (b, args) {
        ("triangular", [n]) => AnyAlgebra::triangular(number(n, b)?, k)?,
        ("matrix", [n]) => AnyAlgebra::matrix(number(n, b)?, k)?,
        ("truncated", [n]) => AnyAlgebra::truncated(number(n, b)?, k)?,
        ("zoo", [name]) => AnyAlgebra::zoo(name, k)?,
        ("groupalgebra", [kind, n]) if kind == "cyclic" => AnyAlgebra::cyclic_group_algebra(number(n, b)?, k)?,
        ("skewgroup", [p, action]) if action == "swap" => file(p)?.skew_swap()?,
        ("fixedring", [p, action]) if action == "swap" => file(p)?.fixed_swap()?,
        ("opposite", [p]) => file(p)?.opposite()?,
        ("product", [p, q]) => file(p)?.product(&file(q)?)?,
        ("amplify", [p, n]) => file(p)?.amplify(number(n, b)?)?,
        ("trivext", [p]) => file(p)?.trivial_extension()?,
        _ if BUILDERS.iter().any(|f| f.split(' ').next() == Some(b)) => return Err(usage(b)),
        _ => return Err(CliError::UnknownBuilder(b.to_string())),
    };
    Ok(alg)
}
