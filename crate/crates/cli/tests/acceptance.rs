// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Prints one PASS/FAIL line per criterion and fails if any
//! criterion fails. Every decision is exact, so all tolerances are zero; only
//! the wall-clock limits are pinned below.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use kaschlab::corpus::{corpus_algebra, run_corpus, CorpusConfig, CorpusSummary};
use kaschlab::dsl::{self, AlgebraDocument};
use kaschlab::theorems::{check_report, differing_flags, InvariantCheck};
use kaschlab::{analyze, AnyAlgebra, FieldSpec, PrimeField, PropertyReport};
use kaschlab_cli::goldens;

const GOLDEN_LIMIT: Duration = Duration::from_secs(1);
const ROUTES_LIMIT: Duration = Duration::from_secs(120);
const CORPUS_SIZE: usize = 200;
const CORPUS_DIM_MAX: usize = 12;
const CORPUS_SEED: u64 = 7;
const DUALITY_PAIRS: usize = 100;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn config() -> CorpusConfig {
    CorpusConfig {
        count: CORPUS_SIZE,
        dim_max: CORPUS_DIM_MAX,
        field: FieldSpec::Prime(101),
        seed: CORPUS_SEED,
        duality_pairs: DUALITY_PAIRS,
    }
}

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn load(stem: &str, field: FieldSpec) -> Result<AnyAlgebra, String> {
    let path = root().join("examples").join(format!("{stem}.alg"));
    kaschlab_cli::load(&path, Some(field)).map_err(|e| e.to_string())
}

fn timed_analyze(alg: &AnyAlgebra) -> Result<(PropertyReport, Duration), String> {
    let t = Instant::now();
    let r = alg.analyze().map_err(|e| format!("{}: {e}", alg.name()))?;
    Ok((r, t.elapsed()))
}

struct Expect {
    stem: &'static str,
    values: &'static [(&'static str, bool)],
    nakayama: Option<Option<&'static [usize]>>,
}

const EXPECTED: &[Expect] = &[
    Expect {
        stem: "T2",
        values: &[("kasch_right", false), ("kasch_left", false), ("dual_kasch_right", false), ("dual_kasch_left", false)],
        nakayama: None,
    },
    Expect {
        stem: "T3",
        values: &[("kasch_right", false), ("kasch_left", false), ("dual_kasch_right", false), ("dual_kasch_left", false)],
        nakayama: None,
    },
    Expect {
        stem: "R4",
        values: &[
            ("qf", true),
            ("weakly_symmetric", false),
            ("strongly_dual_kasch_right", false),
            ("strongly_dual_kasch_left", false),
            ("dual_kasch_right", true),
            ("dual_kasch_left", true),
        ],
        nakayama: Some(Some(&[2, 1])),
    },
    Expect {
        stem: "A5",
        values: &[("kasch_right", true), ("kasch_left", false), ("dual_kasch_left", true), ("dual_kasch_right", false)],
        nakayama: None,
    },
    Expect {
        stem: "A5op",
        values: &[("kasch_left", true), ("kasch_right", false), ("dual_kasch_right", true), ("dual_kasch_left", false)],
        nakayama: None,
    },
];

fn golden_reproduction() -> Verdict {
    let mut slowest = Duration::ZERO;
    let mut n = 0;
    for field in goldens::FIELDS {
        for e in EXPECTED {
            let from_file = load(e.stem, field)?;
            // the zoo and the opposite construction must agree with the checked-in files
            let built = match e.stem {
                "A5op" => AnyAlgebra::zoo("A5", field).and_then(|a| a.opposite()),
                s => AnyAlgebra::zoo(s, field),
            }
            .map_err(|err| err.to_string())?;
            for alg in [&from_file, &built] {
                let (r, t) = timed_analyze(alg)?;
                slowest = slowest.max(t);
                ensure(t < GOLDEN_LIMIT, format!("{} over {field} took {t:?}", e.stem))?;
                let flags = r.flags();
                for (k, v) in e.values {
                    ensure(flags[k] == *v, format!("{} over {field}: {k} = {}", e.stem, flags[k]))?;
                }
                if let Some(expected) = e.nakayama {
                    ensure(
                        r.nakayama.as_deref() == expected,
                        format!("{} over {field}: nakayama {:?}", e.stem, r.nakayama),
                    )?;
                }
                n += 1;
            }
            let case = goldens::cases(&root())
                .map_err(|e| e.to_string())?
                .into_iter()
                .find(|c| c.stem == e.stem && c.field == field)
                .ok_or(format!("no golden for {}", e.stem))?;
            let outcome = goldens::check(&root(), &case, false).map_err(|e| e.to_string())?;
            ensure(outcome.passed, format!("golden {} differs: {:?}", outcome.case, outcome.diff))?;
        }
    }
    Ok(format!("{n} analyses over QQ and GF(101) match, goldens byte-identical, slowest {slowest:.0?} (limit {GOLDEN_LIMIT:?})"))
}

fn route_triangulation(summary: &CorpusSummary, corpus_time: Duration) -> Verdict {
    let t = Instant::now();
    let mut golden_count = 0;
    for case in goldens::cases(&root()).map_err(|e| e.to_string())? {
        let alg = goldens::load(&root(), &case).map_err(|e| e.to_string())?;
        let (r, _) = timed_analyze(&alg)?;
        ensure(
            r.agreement.consistent && r.agreement.right.agree() && r.agreement.left.agree(),
            format!("routes disagree on {}", case.name()),
        )?;
        golden_count += 1;
    }
    let total = corpus_time + t.elapsed();
    ensure(summary.route_disagreements == 0, format!("{} corpus disagreements", summary.route_disagreements))?;
    ensure(summary.errors == 0, format!("{} corpus errors", summary.errors))?;
    ensure(total < ROUTES_LIMIT, format!("took {total:?}"))?;
    Ok(format!(
        "DK1=DK2=DK3=DK4 on {golden_count} golden cases and {} corpus algebras, {total:.1?} (limit {ROUTES_LIMIT:?})",
        summary.count
    ))
}

/// Applicable / holding counts per invariant over the corpus and the goldens.
#[derive(Default)]
struct Tally {
    checks: BTreeMap<String, (usize, usize)>,
    failures: Vec<String>,
}

impl Tally {
    fn add(&mut self, who: &str, checks: &[InvariantCheck]) {
        for c in checks {
            let e = self.checks.entry(c.name.clone()).or_default();
            if c.applicable {
                e.0 += 1;
                e.1 += usize::from(c.holds);
            }
            if !c.holds {
                self.failures.push(format!("{who}: {}", c.name));
            }
        }
    }

    fn applicable(&self, prefix: &str) -> usize {
        self.checks.iter().filter(|(k, _)| k.starts_with(prefix)).map(|(_, v)| v.0).sum()
    }

    fn failures(&self, prefix: &str) -> Vec<&String> {
        self.failures.iter().filter(|f| f.split(": ").nth(1).is_some_and(|n| n.starts_with(prefix))).collect()
    }
}

fn tally() -> Result<Tally, String> {
    let mut t = Tally::default();
    let f = PrimeField::new(101).map_err(|e| e.to_string())?;
    let cfg = config();
    for i in 0..cfg.count {
        let (alg, _) = corpus_algebra(&cfg, &f, i).map_err(|e| e.to_string())?;
        let r = analyze(&alg).map_err(|e| format!("item {i}: {e}"))?;
        t.add(&format!("item {i}"), &check_report(&alg, &r).map_err(|e| e.to_string())?);
    }
    for case in goldens::cases(&root()).map_err(|e| e.to_string())? {
        let alg = goldens::load(&root(), &case).map_err(|e| e.to_string())?;
        let r = alg.analyze().map_err(|e| e.to_string())?;
        t.add(&case.name(), &alg.check_report(&r).map_err(|e| e.to_string())?);
    }
    Ok(t)
}

fn invariant_suite(summary: &CorpusSummary, t: &Tally) -> Verdict {
    ensure(summary.invariant_violations == 0, format!("{} violations in the corpus run", summary.invariant_violations))?;
    ensure(t.failures.is_empty(), format!("violations: {:?}", t.failures))?;
    let applied: usize = t.checks.values().map(|v| v.0).sum();
    Ok(format!("{} invariants, {applied} applicable evaluations, 0 violations", t.checks.len()))
}

fn duality(summary: &CorpusSummary) -> Verdict {
    ensure(summary.duality_failures == 0, format!("{} failures", summary.duality_failures))?;
    ensure(summary.errors == 0, format!("{} errors", summary.errors))?;
    Ok(format!(
        "{} module pairs ({DUALITY_PAIRS} per algebra): Hom dimensions and double duals agree",
        DUALITY_PAIRS * summary.count
    ))
}

fn morita() -> Verdict {
    let mut n = 0;
    for case in goldens::cases(&root()).map_err(|e| e.to_string())? {
        let alg = goldens::load(&root(), &case).map_err(|e| e.to_string())?;
        let a = alg.analyze().map_err(|e| e.to_string())?;
        let m = alg.amplify(2).map_err(|e| e.to_string())?;
        let b = m.analyze().map_err(|e| format!("M2({}): {e}", case.name()))?;
        let mut diff = differing_flags(&a, &b);
        // condition (c) is only defined for commutative algebras
        diff.retain(|k| *k != "condition_c");
        ensure(diff.is_empty(), format!("{}: {diff:?}", case.name()))?;
        n += 1;
    }
    Ok(format!("M2(A) has the same report booleans and Nakayama permutation as A for {n} golden cases"))
}

fn skew_group() -> Verdict {
    let dxd = AnyAlgebra::zoo("DxD", FieldSpec::Rationals).map_err(|e| e.to_string())?;
    let skew = dxd.skew_swap().map_err(|e| e.to_string())?;
    let rs = skew.analyze().map_err(|e| e.to_string())?;
    ensure(skew.dim() == 8, format!("skew group algebra has dim {}", skew.dim()))?;
    ensure(rs.dual_kasch_right, "skew group algebra is not right dual Kasch")?;
    let fixed = dxd.fixed_swap().map_err(|e| e.to_string())?;
    let rf = fixed.analyze().map_err(|e| e.to_string())?;
    ensure(rf.dual_kasch_right && rf.dual_kasch_left, "fixed ring is not dual Kasch")?;
    let gf3 = FieldSpec::Prime(3);
    let kg = AnyAlgebra::cyclic_group_algebra(2, gf3).map_err(|e| e.to_string())?;
    let kxk = AnyAlgebra::zoo("kxk", gf3).map_err(|e| e.to_string())?;
    let (a, b) = (kg.analyze().map_err(|e| e.to_string())?, kxk.analyze().map_err(|e| e.to_string())?);
    let diff = differing_flags(&a, &b);
    ensure(diff.is_empty(), format!("GF(3)[C2] differs from GF(3)xGF(3) in {diff:?}"))?;
    Ok("skew group algebra right dual Kasch, fixed ring dual Kasch, GF(3)[C2] report = GF(3)xGF(3) report".into())
}

fn self_injective_bridge(t: &Tally) -> Verdict {
    let fails = t.failures("self_injective_bridge");
    ensure(fails.is_empty(), format!("{fails:?}"))?;
    let plain = t.applicable("self_injective_bridge_right") + t.applicable("self_injective_bridge_left");
    let maxp = t.applicable("self_injective_bridge_max_projective");
    let qf = t.applicable("qf_bridge");
    ensure(maxp > 0, "max-projective variant never applied")?;
    Ok(format!("{plain} projective, {maxp} max-projective and {qf} QF bridge evaluations hold"))
}

fn commutative_suite(t: &Tally) -> Verdict {
    let fails = t.failures("commutative_");
    ensure(fails.is_empty(), format!("{fails:?}"))?;
    let n = t.checks.get("commutative_kasch_iff_dual_kasch").map_or(0, |v| v.0);
    ensure(n > 0, "no commutative algebras in the corpus")?;
    Ok(format!("kasch <=> dual Kasch <=> condition (c) and kasch => strongly dual Kasch on {n} commutative algebras"))
}

/// Malformed inputs with the line and column the error must point at.
const NEGATIVE: &[(&str, usize, usize)] = &[
    ("", 1, 1),
    ("algebra", 1, 8),
    ("algebra A over RR { basis a; }", 1, 16),
    ("algebra A over GF(4) { basis a; }", 1, 19),
    ("algebra A over QQ {\n  unit = a;\n  basis a;\n}", 2, 3),
    ("algebra A over QQ {\n  basis a, a;\n}", 2, 12),
    ("algebra A over QQ {\n  basis a;\n  mult a*b = a;\n}", 3, 10),
    ("algebra A over QQ {\n  basis a;\n  mult a*a = a;\n  mult a*a = a;\n}", 4, 3),
    ("algebra A over QQ {\n  basis a;\n  unit = 2;\n}", 3, 10),
    ("algebra A over QQ {\n  basis a;\n  unit = ;\n}", 3, 10),
    ("algebra A over QQ {\n  basis a;\n  unit = a\n}", 4, 1),
    ("algebra A over QQ {\n  basis a;\n  unit = a;\n", 4, 1),
    ("algebra A over QQ {\n  basis a;\n  unit = 1/0*a;\n}", 3, 12),
    ("algebra A over QQ { basis a; } extra", 1, 32),
    ("algebra A over QQ {\n  basis a;\n  mult a a = a;\n}", 3, 10),
    ("algebra A over QQ {\n  basis a;\n  unit = a @;\n}", 3, 12),
    ("algebra \"A over QQ { basis a; }", 1, 9),
    ("quiver Q over QQ {\n  vertices 1;\n  arrow x: 1 -> 2;\n  nilpotency 2;\n}", 3, 17),
    ("quiver Q over QQ {\n  vertices 1;\n  arrow x: 1 -> 1;\n  nilpotency 1;\n}", 4, 14),
    ("quiver Q over QQ {\n  vertices 1, 2;\n  arrow x: 1 -> 2;\n  relations x*x = 0;\n  nilpotency 2;\n}", 4, 15),
    ("quiver Q over QQ {\n  vertices 1;\n  arrow x 1 -> 1;\n  nilpotency 2;\n}", 3, 11),
    ("quiver Q over QQ {\n  vertices 1;\n  arrow x: 1 -> 1;\n}", 4, 1),
];

fn parser() -> Verdict {
    let mut round_trips = 0;
    for case in goldens::cases(&root()).map_err(|e| e.to_string())? {
        let alg = goldens::load(&root(), &case).map_err(|e| e.to_string())?;
        let text = alg.serialize();
        let back = AnyAlgebra::parse(&text, None).map_err(|e| format!("{}: {e}", case.name()))?;
        ensure(back.serialize() == text, format!("{} does not round-trip", case.name()))?;
        round_trips += 1;
    }
    for stem in ["T2", "T3", "R4", "A5", "M2"] {
        let path = root().join("examples").join(format!("{stem}.alg"));
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let alg = AnyAlgebra::parse(&text, None).map_err(|e| e.to_string())?;
        ensure(alg.serialize() == text, format!("{stem}.alg is not in canonical form"))?;
    }

    let mut wrong = Vec::new();
    for (src, line, col) in NEGATIVE {
        match dsl::parse(src) {
            Ok(AlgebraDocument::Structure(_) | AlgebraDocument::Quiver(_)) => wrong.push(format!("{src:?} parsed")),
            Err(e) if (e.span.line, e.span.column) != (*line, *col) => {
                wrong.push(format!("{src:?}: {}:{} ({e})", e.span.line, e.span.column))
            }
            Err(_) => {}
        }
    }
    ensure(wrong.is_empty(), format!("misplaced errors: {wrong:?}"))?;

    let cartan = |alg: &AnyAlgebra| -> Result<Vec<Vec<usize>>, String> {
        Ok(alg.analyze().map_err(|e| e.to_string())?.algebra.cartan)
    };
    let quiver = load("T2_quiver", FieldSpec::Rationals)?;
    let tri = AnyAlgebra::triangular(2, FieldSpec::Rationals).map_err(|e| e.to_string())?;
    let (cq, ct) = (cartan(&quiver)?, cartan(&tri)?);
    ensure(cq == ct, format!("quiver Cartan {cq:?} vs triangular {ct:?}"))?;
    Ok(format!(
        "{round_trips} golden round-trips, {} positioned parse errors, T2 quiver Cartan {cq:?}",
        NEGATIVE.len()
    ))
}

fn determinism() -> Verdict {
    let run = |jobs: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_kaschlab"))
            .args(["corpus", "--seed", "7"])
            .env("KASCHLAB_JOBS", jobs)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), format!("exit {:?}", out.status.code()))?;
        Ok(out.stdout)
    };
    let a = run("1")?;
    let b = run("4")?;
    ensure(a == b, "summaries differ")?;
    ensure(!a.is_empty(), "empty summary")?;
    Ok(format!("two `corpus --seed 7` runs (1 and 4 jobs) give identical {}-byte summaries", a.len()))
}

fn corpus_run() -> Result<(CorpusSummary, Duration), String> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let t = Instant::now();
    let s = run_corpus(&config(), &PrimeField::new(101).map_err(|e| e.to_string())?, jobs).map_err(|e| e.to_string())?;
    Ok((s, t.elapsed()))
}

fn main() {
    let (summary, corpus_time) = match corpus_run() {
        Ok(x) => x,
        Err(e) => {
            eprintln!("corpus failed to run: {e}");
            std::process::exit(1);
        }
    };
    let t = tally();
    let with_tally = |f: &dyn Fn(&Tally) -> Verdict| match &t {
        Ok(t) => f(t),
        Err(e) => Err(e.clone()),
    };
    let results: Vec<(&str, Verdict)> = vec![
        ("1 golden reproduction", golden_reproduction()),
        ("2 route triangulation", route_triangulation(&summary, corpus_time)),
        ("3 invariant suite", with_tally(&|t| invariant_suite(&summary, t))),
        ("4 duality", duality(&summary)),
        ("5 Morita invariance", morita()),
        ("6 skew group suite", skew_group()),
        ("7 self-injective bridge", with_tally(&self_injective_bridge)),
        ("8 commutative suite", with_tally(&commutative_suite)),
        ("9 parser", parser()),
        ("10 determinism", determinism()),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(msg) => println!("PASS {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    if !summary.clean() {
        print!("{}", summary.to_text());
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

