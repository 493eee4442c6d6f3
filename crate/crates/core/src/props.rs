// SPDX-License-Identifier: Apache-2.0

//! Kasch-type ring properties with certificates.
//!
//! Every decider reduces to Hom-dimensions between explicit modules, so each
//! answer comes with the dimensions it was read from. Dual Kasch is decided
//! four ways and the answers must agree.
//!
//! The "classical ring" condition (every element a unit or a zero divisor)
//! holds in every finite-dimensional algebra and is not reported.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homological::{
    cartan_matrix, injective_hull, injective_indecomposable, is_hereditary, is_injective,
    is_projective, projective_indecomposable, HullEmbedding,
};
use crate::linalg::{EchelonBasis, Matrix};
use crate::module::{
    hom_dim, hom_space, regular, socle_decomposition, top_decomposition, ModuleRep, Side,
};

/// A yes/no answer with the data it was read from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub holds: bool,
    pub certificate: String,
}

impl Decision {
    /// `holds` iff every listed dimension is positive. The certificate is the
    /// first zero, or the full list when there is none.
    fn all_positive(items: Vec<(String, usize)>) -> Decision {
        match items.iter().find(|(_, d)| *d == 0) {
            Some((what, _)) => Decision { holds: false, certificate: format!("{what} = 0") },
            None => Decision {
                holds: true,
                certificate: items
                    .iter()
                    .map(|(what, d)| format!("{what} = {d}"))
                    .collect::<Vec<_>>()
                    .join(", "),
            },
        }
    }
}

/// Outcomes of the four dual Kasch routes on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteResults {
    /// Every simple is an image of `E(A)`.
    #[serde(rename = "DK1")]
    pub dk1: bool,
    /// Restriction `Hom(E(A), S) -> Hom(A, S)` is onto for every simple.
    #[serde(rename = "DK2")]
    pub dk2: bool,
    /// `Hom(E(e_i A), S_i) != 0` for every class.
    #[serde(rename = "DK3")]
    pub dk3: bool,
    /// Kasch on the opposite side, from the socle of the regular module.
    #[serde(rename = "DK4")]
    pub dk4: bool,
}

impl RouteResults {
    pub fn agree(&self) -> bool {
        self.dk1 == self.dk2 && self.dk2 == self.dk3 && self.dk3 == self.dk4
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualKaschDecision {
    pub holds: bool,
    pub routes: RouteResults,
    /// One certificate per route, DK1 first.
    pub certificates: [String; 4],
}

/// `pi(i) = j` when `soc(e_i A) = S_j`; classes are numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NakayamaPermutation {
    pub mapping: Vec<usize>,
    /// `dim Hom(S_{pi(i)}, soc(e_i A))` for each `i`.
    pub witness: Vec<usize>,
}

impl NakayamaPermutation {
    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &j)| j == i + 1)
    }
}

/// Shape data reported alongside the properties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSummary {
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub radical_dim: usize,
    pub nilpotency_index: usize,
    pub classes: usize,
    pub multiplicities: Vec<usize>,
    pub simple_dims: Vec<usize>,
    pub commutative: bool,
    pub cartan: Vec<Vec<usize>>,
}

/// Route agreement for dual Kasch on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    pub right: RouteResults,
    pub left: RouteResults,
    pub consistent: bool,
}

/// All decided properties of one algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub algebra: StructureSummary,
    pub kasch_right: bool,
    pub kasch_left: bool,
    pub dual_kasch_right: bool,
    pub dual_kasch_left: bool,
    pub strongly_dual_kasch_right: bool,
    pub strongly_dual_kasch_left: bool,
    pub self_injective_right: bool,
    pub self_injective_left: bool,
    pub qf: bool,
    pub v_ring_right: bool,
    pub v_ring_left: bool,
    pub gv_ring_right: bool,
    pub gv_ring_left: bool,
    pub hereditary_right: bool,
    pub hereditary_left: bool,
    pub h_ring_right: bool,
    pub h_ring_left: bool,
    pub weakly_symmetric: bool,
    #[serde(rename = "retractable_ER")]
    pub retractable_er: bool,
    #[serde(rename = "coretractable_ER")]
    pub coretractable_er: bool,
    /// Only for commutative algebras.
    pub condition_c: Option<bool>,
    /// Only for self-injective algebras.
    pub nakayama: Option<Vec<usize>>,
    pub agreement: Agreement,
    pub certificates: BTreeMap<String, String>,
}

impl PropertyReport {
    /// Every boolean property by its report key.
    pub fn flags(&self) -> BTreeMap<&'static str, bool> {
        let mut m = BTreeMap::new();
        m.insert("kasch_right", self.kasch_right);
        m.insert("kasch_left", self.kasch_left);
        m.insert("dual_kasch_right", self.dual_kasch_right);
        m.insert("dual_kasch_left", self.dual_kasch_left);
        m.insert("strongly_dual_kasch_right", self.strongly_dual_kasch_right);
        m.insert("strongly_dual_kasch_left", self.strongly_dual_kasch_left);
        m.insert("self_injective_right", self.self_injective_right);
        m.insert("self_injective_left", self.self_injective_left);
        m.insert("qf", self.qf);
        m.insert("v_ring_right", self.v_ring_right);
        m.insert("v_ring_left", self.v_ring_left);
        m.insert("gv_ring_right", self.gv_ring_right);
        m.insert("gv_ring_left", self.gv_ring_left);
        m.insert("hereditary_right", self.hereditary_right);
        m.insert("hereditary_left", self.hereditary_left);
        m.insert("h_ring_right", self.h_ring_right);
        m.insert("h_ring_left", self.h_ring_left);
        m.insert("weakly_symmetric", self.weakly_symmetric);
        m.insert("retractable_ER", self.retractable_er);
        m.insert("coretractable_ER", self.coretractable_er);
        m
    }

    pub fn kasch(&self, side: Side) -> bool {
        match side {
            Side::Right => self.kasch_right,
            Side::Left => self.kasch_left,
        }
    }

    pub fn dual_kasch(&self, side: Side) -> bool {
        match side {
            Side::Right => self.dual_kasch_right,
            Side::Left => self.dual_kasch_left,
        }
    }

    pub fn strongly_dual_kasch(&self, side: Side) -> bool {
        match side {
            Side::Right => self.strongly_dual_kasch_right,
            Side::Left => self.strongly_dual_kasch_left,
        }
    }

    pub fn self_injective(&self, side: Side) -> bool {
        match side {
            Side::Right => self.self_injective_right,
            Side::Left => self.self_injective_left,
        }
    }

    /// Checks the implications every report must satisfy.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::InvariantViolation(what.to_string()));
        if !self.agreement.consistent {
            return fail("dual Kasch routes disagree");
        }
        if self.qf
            && !(self.self_injective_right
                && self.self_injective_left
                && self.kasch_right
                && self.kasch_left)
        {
            return fail("QF without two-sided self-injectivity and Kasch");
        }
        for side in Side::BOTH {
            let (v, gv) = match side {
                Side::Right => (self.v_ring_right, self.gv_ring_right),
                Side::Left => (self.v_ring_left, self.gv_ring_left),
            };
            if self.strongly_dual_kasch(side) && !self.dual_kasch(side) {
                return fail(&format!("strongly dual Kasch without dual Kasch ({side})"));
            }
            if v && !(gv && self.dual_kasch(side) && self.strongly_dual_kasch(side)) {
                return fail(&format!("V-ring without GV, dual Kasch and strongly dual Kasch ({side})"));
            }
        }
        Ok(())
    }
}

/// Modules shared by the deciders on one side.
pub struct SideData<F: Field> {
    pub side: Side,
    pub regular: ModuleRep<F>,
    pub simples: Vec<ModuleRep<F>>,
    pub projectives: Vec<ModuleRep<F>>,
    pub injectives: Vec<ModuleRep<F>>,
    /// `A -> E(A)`.
    pub hull: HullEmbedding<F>,
}

impl<F: Field> SideData<F> {
    pub fn new(alg: &Algebra<F>, side: Side) -> Result<Self> {
        let st = alg.structure()?;
        let s = st.num_classes();
        let reg = regular(alg, side).with_label("A");
        let projectives =
            (0..s).map(|i| projective_indecomposable(alg, side, i)).collect::<Result<Vec<_>>>()?;
        let injectives =
            (0..s).map(|i| injective_indecomposable(alg, side, i)).collect::<Result<Vec<_>>>()?;
        let hull = injective_hull(alg, &reg)?;
        Ok(SideData {
            side,
            regular: reg,
            simples: st.simples(side).to_vec(),
            projectives,
            injectives,
            hull,
        })
    }
}

/// Every simple module of the side embeds in the regular module.
pub fn kasch<F: Field>(alg: &Algebra<F>, side: Side) -> Result<Decision> {
    kasch_with(&SideData::new(alg, side)?)
}

pub fn is_kasch<F: Field>(alg: &Algebra<F>, side: Side) -> Result<bool> {
    Ok(kasch(alg, side)?.holds)
}

fn kasch_with<F: Field>(d: &SideData<F>) -> Result<Decision> {
    let mut items = Vec::new();
    for s in &d.simples {
        items.push((format!("Hom({}, A)", s.label()), hom_dim(s, &d.regular)?));
    }
    Ok(Decision::all_positive(items))
}

/// Every simple module of the side is an image of `E(A)`, decided four ways.
pub fn dual_kasch<F: Field>(alg: &Algebra<F>, side: Side) -> Result<DualKaschDecision> {
    let d = SideData::new(alg, side)?;
    dual_kasch_with(alg, &d)
}

pub fn is_dual_kasch<F: Field>(alg: &Algebra<F>, side: Side) -> Result<bool> {
    Ok(dual_kasch(alg, side)?.holds)
}

fn dual_kasch_with<F: Field>(alg: &Algebra<F>, d: &SideData<F>) -> Result<DualKaschDecision> {
    let f = alg.field();
    let e = &d.hull.hull;
    let e_label = format!("E({})", d.regular.label());

    let mut dk1 = Vec::new();
    for s in &d.simples {
        dk1.push((format!("Hom({e_label}, {})", s.label()), hom_dim(e, s)?));
    }
    let dk1 = Decision::all_positive(dk1);

    // restriction along A -> E(A)
    let mut dk2_ok = true;
    let mut dk2_parts = Vec::new();
    for s in &d.simples {
        let from_a = hom_dim(&d.regular, s)?;
        let mut image = EchelonBasis::new(f, d.regular.dim() * s.dim());
        for phi in hom_space(e, s)?.basis {
            image.insert(d.hull.embedding.mul(&phi)?.data());
        }
        dk2_parts.push(format!("rank {} of {from_a} for {}", image.dim(), s.label()));
        if image.dim() != from_a {
            dk2_ok = false;
            dk2_parts = vec![format!(
                "restriction Hom({e_label}, {0}) -> Hom(A, {0}) has rank {1} < {from_a}",
                s.label(),
                image.dim()
            )];
            break;
        }
    }
    let dk2 = Decision { holds: dk2_ok, certificate: dk2_parts.join(", ") };

    let mut dk3 = Vec::new();
    for (p, s) in d.projectives.iter().zip(&d.simples) {
        let hull = injective_hull(alg, p)?;
        dk3.push((format!("Hom(E({}), {})", p.label(), s.label()), hom_dim(&hull.hull, s)?));
    }
    let dk3 = Decision::all_positive(dk3);

    let other = d.side.opposite();
    let soc = socle_decomposition(alg, &regular(alg, other))?;
    let st = alg.structure()?;
    let dk4 = Decision::all_positive(
        st.simples(other)
            .iter()
            .zip(&soc.multiplicities)
            .map(|(s, &m)| (format!("[soc(A) : {}]", s.label()), m))
            .collect(),
    );

    let routes = RouteResults { dk1: dk1.holds, dk2: dk2.holds, dk3: dk3.holds, dk4: dk4.holds };
    let certificates = [dk1.certificate, dk2.certificate, dk3.certificate, dk4.certificate];
    if !routes.agree() {
        return Err(Error::RouteDisagreement(format!(
            "{} side: DK1 {} ({}); DK2 {} ({}); DK3 {} ({}); DK4 {} ({})",
            d.side,
            routes.dk1,
            certificates[0],
            routes.dk2,
            certificates[1],
            routes.dk3,
            certificates[2],
            routes.dk4,
            certificates[3]
        )));
    }
    Ok(DualKaschDecision { holds: routes.dk1, routes, certificates })
}

/// Every simple `S_i` is an image of its own hull `E(S_i)`.
pub fn strongly_dual_kasch<F: Field>(alg: &Algebra<F>, side: Side) -> Result<Decision> {
    strongly_dual_kasch_with(alg, &SideData::new(alg, side)?)
}

fn strongly_dual_kasch_with<F: Field>(alg: &Algebra<F>, d: &SideData<F>) -> Result<Decision> {
    let mut items = Vec::new();
    for (i, (inj, s)) in d.injectives.iter().zip(&d.simples).enumerate() {
        let h = hom_dim(inj, s)?;
        let in_top = top_decomposition(alg, inj)?.multiplicities[i] > 0;
        if in_top != (h > 0) {
            return Err(Error::InvariantViolation(format!(
                "Hom({}, {}) = {h} but the top test says {in_top}",
                inj.label(),
                s.label()
            )));
        }
        items.push((format!("Hom({}, {})", inj.label(), s.label()), h));
    }
    Ok(Decision::all_positive(items))
}

/// The regular module of the side is injective.
pub fn self_injective<F: Field>(alg: &Algebra<F>, side: Side) -> Result<bool> {
    is_injective(alg, &regular(alg, side))
}

/// Self-injective on both sides; the two sides must agree.
pub fn is_qf<F: Field>(alg: &Algebra<F>) -> Result<bool> {
    let r = self_injective(alg, Side::Right)?;
    let l = self_injective(alg, Side::Left)?;
    if r != l {
        return Err(Error::InvariantViolation(format!(
            "self-injectivity differs by side (right {r}, left {l})"
        )));
    }
    Ok(r)
}

pub fn nakayama_permutation<F: Field>(alg: &Algebra<F>) -> Result<NakayamaPermutation> {
    if !self_injective(alg, Side::Right)? {
        return Err(Error::NotSelfInjective);
    }
    let s = alg.structure()?.num_classes();
    let mut mapping = Vec::with_capacity(s);
    let mut witness = Vec::with_capacity(s);
    for i in 0..s {
        let p = projective_indecomposable(alg, Side::Right, i)?;
        let soc = socle_decomposition(alg, &p)?;
        let classes: Vec<usize> = soc.classes().collect();
        if soc.total() != 1 {
            return Err(Error::InvariantViolation(format!(
                "socle of {} is not simple in a self-injective algebra",
                p.label()
            )));
        }
        mapping.push(classes[0] + 1);
        witness.push(soc.multiplicities[classes[0]]);
    }
    let mut seen = vec![false; s];
    for &j in &mapping {
        if std::mem::replace(&mut seen[j - 1], true) {
            return Err(Error::InvariantViolation("Nakayama map is not a bijection".into()));
        }
    }
    Ok(NakayamaPermutation { mapping, witness })
}

/// Self-injective with identity Nakayama permutation; false otherwise.
pub fn weakly_symmetric<F: Field>(alg: &Algebra<F>) -> Result<bool> {
    if !is_qf(alg)? {
        return Ok(false);
    }
    Ok(nakayama_permutation(alg)?.is_identity())
}

/// Every simple module of the side is injective.
pub fn v_ring<F: Field>(alg: &Algebra<F>, side: Side) -> Result<bool> {
    for s in alg.structure()?.simples(side) {
        if !is_injective(alg, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every simple module of the side is injective or projective.
pub fn gv_ring<F: Field>(alg: &Algebra<F>, side: Side) -> Result<bool> {
    for s in alg.structure()?.simples(side) {
        if !is_injective(alg, s)? && !is_projective(alg, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hulls of non-isomorphic simples admit no non-zero maps between them.
pub fn h_ring<F: Field>(alg: &Algebra<F>, side: Side) -> Result<Decision> {
    h_ring_with(&SideData::new(alg, side)?)
}

fn h_ring_with<F: Field>(d: &SideData<F>) -> Result<Decision> {
    for (i, a) in d.injectives.iter().enumerate() {
        for (j, b) in d.injectives.iter().enumerate() {
            if i == j {
                continue;
            }
            let h = hom_dim(a, b)?;
            if h > 0 {
                return Ok(Decision {
                    holds: false,
                    certificate: format!("dim Hom({}, {}) = {h}", a.label(), b.label()),
                });
            }
        }
    }
    Ok(Decision { holds: true, certificate: "no maps between distinct E(S_i)".into() })
}

/// `Hom(M, K) != 0` for every non-zero submodule `K`.
///
/// Every non-zero `K` contains a simple `S` from `soc(M)`, and a non-zero map
/// `M -> S` composed with `S -> K` is non-zero. Conversely each simple in
/// `soc(M)` is such a `K`. So it suffices that `Hom(M, S) != 0` for each
/// simple class occurring in `soc(M)`.
pub fn retractable<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<bool> {
    let st = alg.structure()?;
    let simples = st.simples(m.side());
    for i in socle_decomposition(alg, m)?.classes() {
        if hom_dim(m, &simples[i])? == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Hom(M/K, M) != 0` for every proper submodule `K`.
///
/// Each proper `K` lies in a maximal one, whose quotient is a simple from
/// `top(M)`; a non-zero map from that simple into `M` lands in `soc(M)`.
/// Conversely any non-zero `M/K -> M` has a simple in its image whose class
/// is in `top(M/K)`, a quotient of `top(M)`. So it suffices that every class
/// in `top(M)` also occurs in `soc(M)`.
pub fn coretractable<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<bool> {
    let soc = socle_decomposition(alg, m)?;
    let top = top_decomposition(alg, m)?;
    let covered = top.classes().all(|i| soc.multiplicities[i] > 0);
    Ok(covered)
}

/// For a commutative algebra: `m E != E` for every maximal ideal `m`, where `E = E(A)`.
pub fn commutative_condition_c<F: Field>(alg: &Algebra<F>) -> Result<bool> {
    if !alg.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let f = alg.field();
    let st = alg.structure()?;
    let hull = injective_hull(alg, &regular(alg, Side::Right))?.hull;
    for s in st.simples(Side::Right) {
        // m = annihilator of S
        let flat: Vec<Vec<F::Elem>> = s.actions().iter().map(|a| a.data().to_vec()).collect();
        let rows = Matrix::from_rows(f, s.dim() * s.dim(), flat)?;
        let ideal = rows.left_kernel_basis().row_vecs();
        if hull.image_of(&ideal).dim() == hull.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs every decider on both sides and checks the report invariants.
pub fn analyze<F: Field>(alg: &Algebra<F>) -> Result<PropertyReport> {
    let st = alg.structure()?;
    let right = SideData::new(alg, Side::Right)?;
    let left = SideData::new(alg, Side::Left)?;
    let mut certificates = BTreeMap::new();

    let kasch_r = kasch_with(&right)?;
    let kasch_l = kasch_with(&left)?;
    let dk_r = dual_kasch_with(alg, &right)?;
    let dk_l = dual_kasch_with(alg, &left)?;
    let sdk_r = strongly_dual_kasch_with(alg, &right)?;
    let sdk_l = strongly_dual_kasch_with(alg, &left)?;
    let h_r = h_ring_with(&right)?;
    let h_l = h_ring_with(&left)?;
    let si_r = self_injective(alg, Side::Right)?;
    let si_l = self_injective(alg, Side::Left)?;
    let qf = is_qf(alg)?;
    let nakayama = if si_r { Some(nakayama_permutation(alg)?) } else { None };
    let weakly_symmetric = nakayama.as_ref().is_some_and(|n| qf && n.is_identity());
    let er = &right.hull.hull;
    let condition_c =
        if alg.is_commutative() { Some(commutative_condition_c(alg)?) } else { None };

    for (side, k, dk, sdk, h) in [
        ("right", &kasch_r, &dk_r, &sdk_r, &h_r),
        ("left", &kasch_l, &dk_l, &sdk_l, &h_l),
    ] {
        certificates.insert(format!("kasch_{side}"), k.certificate.clone());
        for (route, cert) in ["DK1", "DK2", "DK3", "DK4"].iter().zip(&dk.certificates) {
            certificates.insert(format!("dual_kasch_{side}.{route}"), cert.clone());
        }
        certificates.insert(format!("dual_kasch_{side}"), dk.certificates[2].clone());
        certificates.insert(format!("strongly_dual_kasch_{side}"), sdk.certificate.clone());
        certificates.insert(format!("h_ring_{side}"), h.certificate.clone());
    }
    if let Some(n) = &nakayama {
        let parts: Vec<String> = n
            .mapping
            .iter()
            .enumerate()
            .map(|(i, j)| format!("soc(e{}·A) = S{j}", i + 1))
            .collect();
        certificates.insert("nakayama".into(), parts.join(", "));
    }

    let simple_dims = st.simples(Side::Right).iter().map(|s| s.dim()).collect();
    let report = PropertyReport {
        algebra: StructureSummary {
            name: alg.name().to_string(),
            field: alg.field().spec().to_string(),
            dim: alg.dim(),
            radical_dim: st.radical().dim(),
            nilpotency_index: st.nilpotency_index(),
            classes: st.num_classes(),
            multiplicities: st.multiplicities().to_vec(),
            simple_dims,
            commutative: alg.is_commutative(),
            cartan: cartan_matrix(alg)?,
        },
        kasch_right: kasch_r.holds,
        kasch_left: kasch_l.holds,
        dual_kasch_right: dk_r.holds,
        dual_kasch_left: dk_l.holds,
        strongly_dual_kasch_right: sdk_r.holds,
        strongly_dual_kasch_left: sdk_l.holds,
        self_injective_right: si_r,
        self_injective_left: si_l,
        qf,
        v_ring_right: v_ring(alg, Side::Right)?,
        v_ring_left: v_ring(alg, Side::Left)?,
        gv_ring_right: gv_ring(alg, Side::Right)?,
        gv_ring_left: gv_ring(alg, Side::Left)?,
        hereditary_right: is_hereditary(alg, Side::Right)?,
        hereditary_left: is_hereditary(alg, Side::Left)?,
        h_ring_right: h_r.holds,
        h_ring_left: h_l.holds,
        weakly_symmetric,
        retractable_er: retractable(alg, er)?,
        coretractable_er: coretractable(alg, er)?,
        condition_c,
        nakayama: nakayama.map(|n| n.mapping),
        agreement: Agreement {
            right: dk_r.routes,
            left: dk_l.routes,
            consistent: dk_r.routes.agree() && dk_l.routes.agree(),
        },
        certificates,
    };
    report.check_invariants()?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::zoo::zoo;

    #[test]
    fn triangular_is_neither_kasch_nor_dual_kasch() {
        let t2 = zoo("T2", &Rationals).unwrap();
        let r = analyze(&t2).unwrap();
        assert!(!r.kasch_right && !r.kasch_left);
        assert!(!r.dual_kasch_right && !r.dual_kasch_left);
        assert_eq!(r.certificates["dual_kasch_right"], "Hom(E(e2·A), S2) = 0");
        assert_eq!(r.certificates["kasch_right"], "Hom(S1, A) = 0");
        assert!(!r.qf && !r.weakly_symmetric);
        assert_eq!(r.nakayama, None);
        assert!(r.hereditary_right && r.hereditary_left);
    }

    #[test]
    fn r4_is_qf_with_swapped_nakayama_permutation() {
        let r4 = zoo("R4", &Rationals).unwrap();
        let r = analyze(&r4).unwrap();
        assert!(r.qf);
        assert_eq!(r.nakayama, Some(vec![2, 1]));
        assert!(!r.weakly_symmetric);
        assert!(!r.strongly_dual_kasch_right && !r.strongly_dual_kasch_left);
        assert!(r.dual_kasch_right && r.dual_kasch_left);
        assert!(r.coretractable_er);
    }

    #[test]
    fn a5_splits_left_and_right() {
        let f = PrimeField::new(5).unwrap();
        let a5 = zoo("A5", &f).unwrap();
        let r = analyze(&a5).unwrap();
        assert!(r.kasch_right && !r.kasch_left);
        assert!(r.dual_kasch_left && !r.dual_kasch_right);
        let op = analyze(&a5.opposite().unwrap()).unwrap();
        assert!(op.kasch_left && !op.kasch_right);
        assert!(op.dual_kasch_right && !op.dual_kasch_left);
    }

    #[test]
    fn semisimple_has_everything() {
        let f = PrimeField::new(7).unwrap();
        let m2 = Algebra::matrix_algebra(&f, 2).unwrap();
        let r = analyze(&m2).unwrap();
        assert!(r.flags().values().all(|&b| b));
        assert_eq!(r.nakayama, Some(vec![1]));
    }

    #[test]
    fn dual_numbers() {
        let d = zoo("dual_numbers", &Rationals).unwrap();
        let r = analyze(&d).unwrap();
        assert!(r.qf && r.weakly_symmetric && r.strongly_dual_kasch_right);
        assert_eq!(r.condition_c, Some(true));
        assert!(!r.v_ring_right && !r.hereditary_right);
        assert!(commutative_condition_c(&zoo("kxk", &Rationals).unwrap()).unwrap());
        assert!(matches!(
            commutative_condition_c(&zoo("T2", &Rationals).unwrap()),
            Err(Error::NotCommutative)
        ));
    }

    #[test]
    fn nakayama_requires_self_injectivity() {
        let t2 = zoo("T2", &Rationals).unwrap();
        assert!(matches!(nakayama_permutation(&t2), Err(Error::NotSelfInjective)));
        assert!(h_ring(&zoo("kxk", &Rationals).unwrap(), Side::Right).unwrap().holds);
    }
}
