// SPDX-License-Identifier: Apache-2.0

//! Known implications between the properties, checked on concrete algebras.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homological::{injective_hull, is_injective, is_max_projective, is_projective};
use crate::module::{regular, Side};
use crate::props::{analyze, PropertyReport};

/// One implication evaluated on one algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantCheck {
    pub name: String,
    /// False when the hypothesis does not apply (e.g. a non-commutative algebra).
    pub applicable: bool,
    pub holds: bool,
}

impl InvariantCheck {
    fn new(name: impl Into<String>, holds: bool) -> Self {
        InvariantCheck { name: name.into(), applicable: true, holds }
    }

    fn skipped(name: impl Into<String>) -> Self {
        InvariantCheck { name: name.into(), applicable: false, holds: true }
    }
}

fn implies(a: bool, b: bool) -> bool {
    !a || b
}

/// Evaluates every implication on `alg`, given its report.
pub fn check_report<F: Field>(alg: &Algebra<F>, r: &PropertyReport) -> Result<Vec<InvariantCheck>> {
    let st = alg.structure()?;
    let mut out = Vec::new();
    for side in Side::BOTH {
        let dk = r.dual_kasch(side);
        let (v, gv, hered, h) = match side {
            Side::Right => (r.v_ring_right, r.gv_ring_right, r.hereditary_right, r.h_ring_right),
            Side::Left => (r.v_ring_left, r.gv_ring_left, r.hereditary_left, r.h_ring_left),
        };

        // dual Kasch: projective simples are injective
        let mut ok = true;
        if dk {
            for s in st.simples(side) {
                if is_projective(alg, s)? && !is_injective(alg, s)? {
                    ok = false;
                }
            }
        }
        out.push(InvariantCheck::new(format!("projective_simples_injective_{side}"), ok));

        let e = injective_hull(alg, &regular(alg, side))?.hull;
        let e_proj = is_projective(alg, &e)?;
        out.push(InvariantCheck::new(
            format!("self_injective_bridge_{side}"),
            r.self_injective(side) == (dk && e_proj),
        ));
        let name = format!("self_injective_bridge_max_projective_{side}");
        if alg.field().characteristic() == 0 {
            out.push(InvariantCheck::skipped(name));
        } else {
            match is_max_projective(alg, &e) {
                Ok(mp) => out.push(InvariantCheck::new(name, r.self_injective(side) == (dk && mp))),
                Err(Error::UnsupportedField(_)) => out.push(InvariantCheck::skipped(name)),
                Err(other) => return Err(other),
            }
        }
        out.push(InvariantCheck::new(format!("qf_bridge_{side}"), r.qf == (dk && e_proj)));

        let name = format!("strongly_dual_kasch_iff_nakayama_identity_{side}");
        match &r.nakayama {
            Some(pi) => {
                let identity = pi.iter().enumerate().all(|(i, &j)| j == i + 1);
                out.push(InvariantCheck::new(name, r.strongly_dual_kasch(side) == identity));
            }
            None => out.push(InvariantCheck::skipped(name)),
        }
        out.push(InvariantCheck::new(
            format!("h_ring_strongly_dual_kasch_{side}"),
            implies(h, r.strongly_dual_kasch(side)),
        ));
        out.push(InvariantCheck::new(
            format!("v_ring_criterion_{side}"),
            implies(dk && (hered || gv), v),
        ));
    }
    out.push(InvariantCheck::new(
        "retractable_kasch_dual_kasch",
        implies(r.retractable_er && r.kasch_right, r.dual_kasch_right),
    ));
    out.push(InvariantCheck::new(
        "coretractable_dual_kasch_kasch",
        implies(r.coretractable_er && r.dual_kasch_right, r.kasch_right),
    ));

    let names = [
        "commutative_kasch_strongly_dual_kasch",
        "commutative_kasch_iff_dual_kasch",
        "commutative_condition_c_iff_dual_kasch",
    ];
    if alg.is_commutative() {
        let c = r.condition_c.ok_or_else(|| {
            Error::InvariantViolation("commutative algebra without condition (c)".into())
        })?;
        out.push(InvariantCheck::new(
            names[0],
            implies(r.kasch_right, r.strongly_dual_kasch_right),
        ));
        out.push(InvariantCheck::new(names[1], r.kasch_right == r.dual_kasch_right));
        out.push(InvariantCheck::new(names[2], c == r.dual_kasch_right));
    } else {
        out.extend(names.iter().map(|n| InvariantCheck::skipped(*n)));
    }
    Ok(out)
}

/// Names of the failed checks.
pub fn violations(checks: &[InvariantCheck]) -> Vec<String> {
    checks.iter().filter(|c| !c.holds).map(|c| c.name.clone()).collect()
}

/// Property keys whose values differ between two reports.
pub fn differing_flags(a: &PropertyReport, b: &PropertyReport) -> Vec<&'static str> {
    let fb = b.flags();
    let mut diff: Vec<&'static str> =
        a.flags().into_iter().filter(|(k, v)| fb[k] != *v).map(|(k, _)| k).collect();
    if a.nakayama != b.nakayama {
        diff.push("nakayama");
    }
    if a.condition_c != b.condition_c {
        diff.push("condition_c");
    }
    diff
}

/// Flags of `M_n(A)` that differ from those of `A`; empty when Morita invariance holds.
pub fn morita_differences<F: Field>(alg: &Algebra<F>, n: usize) -> Result<Vec<&'static str>> {
    let a = analyze(alg)?;
    let b = analyze(&alg.matrix_amplification(n)?)?;
    // the amplification is not commutative, so condition (c) is not comparable
    let mut diff = differing_flags(&a, &b);
    diff.retain(|k| *k != "condition_c");
    Ok(diff)
}
