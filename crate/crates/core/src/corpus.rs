// SPDX-License-Identifier: Apache-2.0

//! Seeded random quiver algebras and the cross-checks run on each of them.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::dsl::{flatten, serialize, Arrow, Path, QuiverPresentation};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::homological::{injective_indecomposable, projective_indecomposable};
use crate::module::{hom_dim, regular, ModuleRep, Side};
use crate::props::analyze;
use crate::theorems::{check_report, violations};

/// Attempts at drawing a presentation within the dimension bound.
const MAX_DRAWS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusConfig {
    pub count: usize,
    pub dim_max: usize,
    pub field: FieldSpec,
    pub seed: u64,
    /// Random module pairs per algebra for the duality checks.
    pub duality_pairs: usize,
}

impl CorpusConfig {
    /// The corpus only runs where the plain trace-form radical applies.
    pub fn check(&self) -> Result<()> {
        self.field.validated()?;
        let p = self.field.characteristic();
        if p != 0 && p as usize <= self.dim_max {
            return Err(Error::UnsupportedCharacteristic { characteristic: p, dim: self.dim_max });
        }
        if self.dim_max == 0 {
            return Err(Error::InvalidAlgebra("dimension bound must be positive".into()));
        }
        Ok(())
    }
}

/// Independent generator for item `index`.
pub fn item_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn random_path(rng: &mut ChaCha8Rng, arrows: &[Arrow], len: usize) -> Option<Vec<usize>> {
    let mut path = vec![rng.gen_range(0..arrows.len())];
    while path.len() < len {
        let end = arrows[*path.last()?].target;
        let next: Vec<usize> = (0..arrows.len()).filter(|&a| arrows[a].source == end).collect();
        if next.is_empty() {
            return None;
        }
        path.push(next[rng.gen_range(0..next.len())]);
    }
    Some(path)
}

fn parallel_paths(arrows: &[Arrow], from: usize, to: usize, len: usize) -> Vec<Vec<usize>> {
    let mut layer: Vec<Vec<usize>> =
        (0..arrows.len()).filter(|&a| arrows[a].source == from).map(|a| vec![a]).collect();
    for _ in 1..len {
        let mut next = Vec::new();
        for p in &layer {
            let end = arrows[*p.last().expect("non-empty")].target;
            for (a, arrow) in arrows.iter().enumerate() {
                if arrow.source == end {
                    let mut q = p.clone();
                    q.push(a);
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    layer.retain(|p| arrows[*p.last().expect("non-empty")].target == to);
    layer
}

fn coefficient(rng: &mut ChaCha8Rng) -> BigRational {
    let c: i64 = rng.gen_range(1..=9);
    BigRational::from_integer(if rng.gen_bool(0.5) { c } else { -c }.into())
}

/// A random bound quiver: either loops with commutation relations at each
/// vertex (a commutative algebra) or an arbitrary quiver with monomial and
/// binomial relations.
pub fn random_presentation(rng: &mut ChaCha8Rng, name: &str, field: FieldSpec) -> QuiverPresentation {
    let commutative = rng.gen_bool(0.3);
    let n = if commutative { rng.gen_range(1..=2) } else { rng.gen_range(1..=4) };
    let nilpotency = rng.gen_range(2..=4);
    let vertices: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    let mut arrows = Vec::new();
    let mut relations = Vec::new();
    let one = BigRational::from_integer(1.into());
    if commutative {
        for v in 0..n {
            let loops = rng.gen_range(0..=2);
            let first = arrows.len();
            for k in 0..loops {
                arrows.push(Arrow { label: format!("x{}_{}", v + 1, k + 1), source: v, target: v });
            }
            if loops == 2 {
                let (x, y) = (first, first + 1);
                relations.push(vec![
                    (one.clone(), Path::Arrows(vec![x, y])),
                    (-one.clone(), Path::Arrows(vec![y, x])),
                ]);
                if rng.gen_bool(0.5) {
                    relations.push(vec![(one.clone(), Path::Arrows(vec![x, x]))]);
                }
            }
        }
    } else {
        let m = rng.gen_range(0..=4);
        for k in 0..m {
            let source = rng.gen_range(0..n);
            let target = rng.gen_range(0..n);
            arrows.push(Arrow { label: format!("a{}", k + 1), source, target });
        }
        if !arrows.is_empty() && nilpotency > 2 {
            for _ in 0..rng.gen_range(0..=3) {
                let len = rng.gen_range(2..nilpotency);
                let Some(p) = random_path(rng, &arrows, len) else { continue };
                let from = arrows[p[0]].source;
                let to = arrows[*p.last().expect("non-empty")].target;
                let others: Vec<Vec<usize>> = parallel_paths(&arrows, from, to, len)
                    .into_iter()
                    .filter(|q| *q != p)
                    .collect();
                let mut rel = vec![(one.clone(), Path::Arrows(p))];
                if !others.is_empty() && rng.gen_bool(0.5) {
                    let q = others[rng.gen_range(0..others.len())].clone();
                    rel.push((coefficient(rng), Path::Arrows(q)));
                }
                relations.push(rel);
            }
        }
    }
    QuiverPresentation { name: name.to_string(), field, vertices, arrows, relations, nilpotency }
}

/// Item `index` of the corpus: the first draw whose algebra fits the bound.
pub fn corpus_algebra<F: Field>(
    config: &CorpusConfig,
    field: &F,
    index: usize,
) -> Result<(Algebra<F>, ChaCha8Rng)> {
    let mut rng = item_rng(config.seed, index);
    let name = format!("corpus-{}-{index}", config.seed);
    for _ in 0..MAX_DRAWS {
        let q = random_presentation(&mut rng, &name, config.field);
        let alg = flatten(&q, field)?;
        if alg.dim() <= config.dim_max {
            return Ok((alg, rng));
        }
    }
    let k = Algebra::truncated_poly(field, 1)?.renamed(name);
    Ok((k, rng))
}

fn random_vector<F: Field>(rng: &mut ChaCha8Rng, field: &F, n: usize) -> Vec<F::Elem> {
    (0..n).map(|_| field.from_i64(rng.gen_range(-5..=5))).collect()
}

/// A random module: a regular, projective or injective module, or a cyclic
/// submodule or quotient of one.
pub fn random_module<F: Field>(alg: &Algebra<F>, rng: &mut ChaCha8Rng, side: Side) -> Result<ModuleRep<F>> {
    let f = alg.field();
    let s = alg.structure()?.num_classes();
    let base = match rng.gen_range(0..4) {
        0 => regular(alg, side),
        1 => projective_indecomposable(alg, side, rng.gen_range(0..s))?,
        2 => injective_indecomposable(alg, side, rng.gen_range(0..s))?,
        _ => alg.structure()?.simples(side)[rng.gen_range(0..s)].clone(),
    };
    Ok(match rng.gen_range(0..3) {
        0 => base,
        1 => base.submodule_of(&base.spin(&[random_vector(rng, f, base.dim())]))?.0,
        _ => base.quotient_of(&base.spin(&[random_vector(rng, f, base.dim())]))?.0,
    })
}

/// `dim Hom(M, N) = dim Hom(D N, D M)` and `D D M = M` on `pairs` random pairs.
pub fn duality_failures<F: Field>(alg: &Algebra<F>, rng: &mut ChaCha8Rng, pairs: usize) -> Result<usize> {
    let mut failures = 0;
    for _ in 0..pairs {
        let side = if rng.gen_bool(0.5) { Side::Right } else { Side::Left };
        let m = random_module(alg, rng, side)?;
        let n = random_module(alg, rng, side)?;
        let dd = m.dual().dual();
        if hom_dim(&m, &n)? != hom_dim(&n.dual(), &m.dual())?
            || dd.side() != m.side()
            || dd.actions() != m.actions()
        {
            failures += 1;
        }
    }
    Ok(failures)
}

/// What one corpus item produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemOutcome {
    pub index: usize,
    pub name: String,
    pub dim: usize,
    pub commutative: bool,
    pub flags: BTreeMap<String, bool>,
    pub route_disagreement: bool,
    pub violations: Vec<String>,
    pub duality_failures: usize,
    pub error: Option<String>,
    /// Serialized algebra, kept only when something failed.
    pub algebra: Option<String>,
}

impl ItemOutcome {
    pub fn failed(&self) -> bool {
        self.route_disagreement
            || !self.violations.is_empty()
            || self.duality_failures > 0
            || self.error.is_some()
    }
}

pub fn run_item<F: Field>(config: &CorpusConfig, field: &F, index: usize) -> ItemOutcome {
    let mut out = ItemOutcome {
        index,
        name: format!("corpus-{}-{index}", config.seed),
        dim: 0,
        commutative: false,
        flags: BTreeMap::new(),
        route_disagreement: false,
        violations: Vec::new(),
        duality_failures: 0,
        error: None,
        algebra: None,
    };
    let (alg, mut rng) = match corpus_algebra(config, field, index) {
        Ok(x) => x,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    out.dim = alg.dim();
    out.commutative = alg.is_commutative();
    let result = (|| -> Result<()> {
        let report = analyze(&alg)?;
        out.flags = report.flags().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        if let Some(c) = report.condition_c {
            out.flags.insert("condition_c".into(), c);
        }
        out.violations = violations(&check_report(&alg, &report)?);
        out.duality_failures = duality_failures(&alg, &mut rng, config.duality_pairs)?;
        Ok(())
    })();
    match result {
        Err(Error::RouteDisagreement(msg)) => {
            out.route_disagreement = true;
            out.error = Some(msg);
        }
        Err(e) => out.error = Some(e.to_string()),
        Ok(()) => {}
    }
    if out.failed() {
        out.algebra = Some(serialize(&alg));
    }
    out
}

/// A property combination worth reporting when the corpus hits it.
const SEPARATIONS: &[(&str, &str, &str)] = &[
    ("strongly dual Kasch but not a V-ring", "strongly_dual_kasch_right", "v_ring_right"),
    ("dual Kasch but not self-injective", "dual_kasch_right", "self_injective_right"),
    ("Kasch but not dual Kasch", "kasch_right", "dual_kasch_right"),
    ("right dual Kasch but not left dual Kasch", "dual_kasch_right", "dual_kasch_left"),
    ("dual Kasch but not strongly dual Kasch", "dual_kasch_right", "strongly_dual_kasch_right"),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub seed: u64,
    pub count: usize,
    pub dim_max: usize,
    pub field: String,
    pub commutative: usize,
    pub total_dim: usize,
    pub property_counts: BTreeMap<String, usize>,
    pub route_disagreements: usize,
    pub invariant_violations: usize,
    pub duality_failures: usize,
    pub errors: usize,
    /// First corpus index for each separating combination found.
    pub separating_examples: BTreeMap<String, usize>,
    pub failures: Vec<ItemOutcome>,
}

impl CorpusSummary {
    pub fn from_items(config: &CorpusConfig, items: &[ItemOutcome]) -> Self {
        let mut s = CorpusSummary {
            seed: config.seed,
            count: items.len(),
            dim_max: config.dim_max,
            field: config.field.to_string(),
            commutative: 0,
            total_dim: 0,
            property_counts: BTreeMap::new(),
            route_disagreements: 0,
            invariant_violations: 0,
            duality_failures: 0,
            errors: 0,
            separating_examples: BTreeMap::new(),
            failures: Vec::new(),
        };
        for it in items {
            s.commutative += usize::from(it.commutative);
            s.total_dim += it.dim;
            for (k, &v) in &it.flags {
                *s.property_counts.entry(k.clone()).or_insert(0) += usize::from(v);
            }
            s.route_disagreements += usize::from(it.route_disagreement);
            s.invariant_violations += it.violations.len();
            s.duality_failures += it.duality_failures;
            s.errors += usize::from(it.error.is_some() && !it.route_disagreement);
            for (label, yes, no) in SEPARATIONS {
                if it.flags.get(*yes) == Some(&true) && it.flags.get(*no) == Some(&false) {
                    s.separating_examples.entry(label.to_string()).or_insert(it.index);
                }
            }
            if it.failed() {
                s.failures.push(it.clone());
            }
        }
        s
    }

    pub fn clean(&self) -> bool {
        self.failures.is_empty()
    }

    /// Plain-text rendering; contains no timing, so runs are comparable byte for byte.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "corpus seed={} count={} field={} dim-max={}",
            self.seed, self.count, self.field, self.dim_max
        );
        let _ = writeln!(out, "algebras: {} (commutative: {}, total dimension: {})", self.count, self.commutative, self.total_dim);
        let _ = writeln!(out, "property counts:");
        for (k, v) in &self.property_counts {
            let _ = writeln!(out, "  {k}: {v}");
        }
        let _ = writeln!(out, "route disagreements: {}", self.route_disagreements);
        let _ = writeln!(out, "invariant violations: {}", self.invariant_violations);
        let _ = writeln!(out, "duality failures: {}", self.duality_failures);
        let _ = writeln!(out, "errors: {}", self.errors);
        let _ = writeln!(out, "separating examples:");
        if self.separating_examples.is_empty() {
            let _ = writeln!(out, "  none");
        }
        for (k, v) in &self.separating_examples {
            let _ = writeln!(out, "  {k}: item {v}");
        }
        for f in &self.failures {
            let _ = writeln!(out, "FAILED item {} ({}):", f.index, f.name);
            if let Some(e) = &f.error {
                let _ = writeln!(out, "  error: {e}");
            }
            for v in &f.violations {
                let _ = writeln!(out, "  violated: {v}");
            }
            if f.duality_failures > 0 {
                let _ = writeln!(out, "  duality failures: {}", f.duality_failures);
            }
            if let Some(a) = &f.algebra {
                for line in a.lines() {
                    let _ = writeln!(out, "  | {line}");
                }
            }
        }
        out
    }
}

/// Runs the corpus on up to `jobs` threads; results are ordered by index.
pub fn run_corpus<F: Field>(config: &CorpusConfig, field: &F, jobs: usize) -> Result<CorpusSummary> {
    config.check()?;
    if field.spec() != config.field {
        return Err(Error::InvalidField(format!("{} does not match {}", field.spec(), config.field)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidAlgebra(format!("thread pool: {e}")))?;
    let items: Vec<ItemOutcome> = pool.install(|| {
        (0..config.count).into_par_iter().map(|i| run_item(config, field, i)).collect()
    });
    Ok(CorpusSummary::from_items(config, &items))
}
