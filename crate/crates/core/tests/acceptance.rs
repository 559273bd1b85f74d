//! The nine acceptance criteria, run in order in a single test so that the
//! timings are not distorted by parallel test threads. Each criterion
//! prints one `PASS`/`FAIL` line; the test fails if any criterion does.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use catkit::corpus::{
    closures_on_chain, corruption_sweep, lax_tuples, monad_corpus, monotone_maps, oplax_tuples,
    symmetric_tuples,
};
use catkit::fincat::{compose_functors, Functor};
use catkit::lift::{lift_em, lift_em_braided, lift_kleisli, lift_kleisli_braided};
use catkit::monad::{Laxity, Monad};
use catkit::monmonad::{check_interchange_equivalence_with, InterchangeContext};
use catkit::resolutions::{em, kleisli, kleisli_product_comparison, verify_adjunction, Algebra};
use catkit::workspace::Workspace;
use catkit::{FinCat, ObjId};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

/// The monotone self-map of the `n`-chain, with components taken to be the
/// unique morphism of the right type where it exists and an identity of the
/// wrong type where it does not, so that the law checker sees every map.
fn monad_of_map(c: &Arc<FinCat>, map: &[usize]) -> Option<Monad> {
    let endo = Functor::from_fn(
        c.clone(),
        c.clone(),
        |a| ObjId(map[a.0]),
        |f| c.hom(ObjId(map[c.dom(f).0]), ObjId(map[c.cod(f).0]))[0],
    )
    .ok()?;
    let unit = c
        .objects()
        .map(|a| c.hom(a, endo.ob(a)).first().copied().unwrap_or(c.id(a)))
        .collect();
    let mult = c
        .objects()
        .map(|a| {
            let (s, ss) = (endo.ob(a), endo.ob(endo.ob(a)));
            c.hom(ss, s).first().copied().unwrap_or(c.id(ss))
        })
        .collect();
    Monad::new(endo, unit, mult).ok()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let (mut accepted, mut total) = (0, 0);
    for n in 2..=5 {
        let c = Arc::new(FinCat::chain(n));
        let mut accepted_here = 0;
        for map in monotone_maps(n) {
            total += 1;
            let closure = (0..n).all(|i| map[i] >= i && map[map[i]] == map[i]);
            let ok = monad_of_map(&c, &map).is_some_and(|m| m.check().is_ok());
            if ok != closure {
                mismatches.push(format!("{map:?}"));
            }
            if ok {
                accepted_here += 1;
            }
        }
        if accepted_here != 1 << (n - 1) {
            mismatches.push(format!("{n}-chain accepted {accepted_here}"));
        }
        accepted += accepted_here;
    }
    let t = start.elapsed();
    outcome(
        mismatches.is_empty() && t < Duration::from_secs(1),
        format!(
            "{accepted} of {total} monotone maps accepted, {} mismatches, {}",
            mismatches.len(),
            secs(t)
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    let corpus = monad_corpus();
    for (name, m) in &corpus {
        let start = Instant::now();
        let res = match kleisli(m) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        let (c, kc, s) = (m.base(), &res.kleisli_cat, m.endo());
        let kob = |a: ObjId| kc.object(c.ob_name(a)).expect("same objects");
        let mut ok = res.check().map(|r| r.is_ok()).unwrap_or(false);
        for a in c.objects() {
            for b in c.objects() {
                ok &= kc.hom(kob(a), kob(b)).len() == c.hom(a, s.ob(b)).len();
            }
            // κ_X is the identity of S X, and ε at a free object is κ
            ok &= res.rep(res.kappa.at(a)) == c.id(s.ob(a));
            ok &= res.counit.at(res.free.ob(a)) == res.kappa.at(a);
        }
        ok &= compose_functors(&res.forget, &res.free).is_ok_and(|us| us == *s);
        ok &= verify_adjunction(&res.free, &res.forget, &res.unit, &res.counit)
            .is_ok_and(|r| r.is_ok());
        let t = start.elapsed();
        slowest = slowest.max(t);
        if !ok || t >= Duration::from_secs(1) {
            failures.push(name.clone());
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{} monads, {} failures, slowest {}",
            corpus.len(),
            failures.len(),
            secs(slowest)
        ),
    )
}

fn criterion_3() -> Outcome {
    let small: Vec<_> = monad_corpus()
        .into_iter()
        .filter(|(_, m)| m.base().object_count() <= 4)
        .collect();
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    let mut pairs = 0;
    for (i, (n1, m1)) in small.iter().enumerate() {
        for (n2, m2) in &small[i..] {
            pairs += 1;
            let start = Instant::now();
            let ok = match kleisli_product_comparison(m1, m2) {
                Ok(pc) => {
                    let left = Functor::identity(pc.kleisli_product.kleisli_cat.clone());
                    let right = Functor::identity(pc.target.category.clone());
                    pc.check().is_ok_and(|r| r.is_ok())
                        && compose_functors(&pc.inverse, &pc.h).is_ok_and(|f| f == left)
                        && compose_functors(&pc.h, &pc.inverse).is_ok_and(|f| f == right)
                }
                Err(_) => false,
            };
            let t = start.elapsed();
            slowest = slowest.max(t);
            if !ok || t >= Duration::from_secs(5) {
                failures.push(format!("{n1}*{n2}"));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{pairs} pairs, {} failures, slowest {}",
            failures.len(),
            secs(slowest)
        ),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let corpus = monad_corpus();
    for (name, m) in &corpus {
        let res = match em(m) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        let (c, s) = (m.base(), m.endo());
        let mut brute = BTreeSet::new();
        for a in c.objects() {
            for &act in c.hom(s.ob(a), a) {
                let unit_law = c.compose(act, m.unit().at(a)) == Some(c.id(a));
                let lhs = c.compose(act, m.mult().at(a));
                let assoc_law = lhs.is_some() && lhs == c.compose(act, s.mor(act));
                if unit_law && assoc_law {
                    brute.insert(Algebra {
                        carrier: a,
                        action: act,
                    });
                }
            }
        }
        let found: BTreeSet<Algebra> = res.algebras().iter().copied().collect();
        if found != brute || found.len() != res.algebras().len() {
            failures.push(name.clone());
        }
    }
    for n in 2..=5 {
        let c = Arc::new(FinCat::chain(n));
        for (name, m) in closures_on_chain(&c) {
            let fixed: BTreeSet<ObjId> = c.objects().filter(|&a| m.endo().ob(a) == a).collect();
            let carriers: Vec<ObjId> = em(&m)
                .map(|r| r.algebras().iter().map(|x| x.carrier).collect())
                .unwrap_or_default();
            let distinct: BTreeSet<ObjId> = carriers.iter().copied().collect();
            if distinct != fixed || carriers.len() != fixed.len() {
                failures.push(format!("{name} fixed points"));
            }
        }
    }
    let t = start.elapsed();
    outcome(
        failures.is_empty() && t < Duration::from_secs(1),
        format!(
            "{} monads, {} failures, {}",
            corpus.len(),
            failures.len(),
            secs(t)
        ),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let tuples: Vec<_> = lax_tuples().into_iter().chain(oplax_tuples()).collect();
    let (mut checked, mut agreed, mut thinnest) = (0usize, 0usize, usize::MAX);
    let mut invalid_base = Vec::new();
    for (name, t) in &tuples {
        let ctx = InterchangeContext::new(t.monoidal()).expect("corpus structures are well-formed");
        let base = check_interchange_equivalence_with(&ctx, t);
        if !base.both_valid() {
            invalid_base.push(name.clone());
        }
        let sweep = corruption_sweep(t, 100);
        thinnest = thinnest.min(sweep.len());
        for u in std::iter::once(t.clone()).chain(sweep) {
            checked += 1;
            if check_interchange_equivalence_with(&ctx, &u).agree() {
                agreed += 1;
            }
        }
    }
    let t = start.elapsed();
    outcome(
        agreed == checked && thinnest >= 100 && invalid_base.is_empty() && t < Duration::from_secs(30),
        format!(
            "{} tuples, {checked} checked, {agreed} agree, at least {thinnest} corruptions per tuple, {}",
            tuples.len(),
            secs(t)
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    let tuples = lax_tuples();
    for (name, t) in &tuples {
        let start = Instant::now();
        let ok = match lift_kleisli(t) {
            Ok(l) => {
                let kc = l.lifted.base().clone();
                let strict = kc.objects().all(|a| {
                    kc.objects().all(|b| {
                        let m = l.free_as_monoidal.tensorator(a, b);
                        m == kc.id(kc.dom(m))
                    })
                });
                l.check().is_ok()
                    && l.lifted.check().is_ok()
                    && kleisli(t.monad()).is_ok_and(|plain| *plain.kleisli_cat == *kc)
                    && strict
            }
            Err(_) => false,
        };
        let t = start.elapsed();
        slowest = slowest.max(t);
        if !ok || t >= Duration::from_secs(5) {
            failures.push(name.clone());
        }
    }
    outcome(
        failures.is_empty() && !tuples.is_empty(),
        format!(
            "{} lax tuples, {} failures, slowest {}",
            tuples.len(),
            failures.len(),
            secs(slowest)
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    let tuples = oplax_tuples();
    for (name, t) in &tuples {
        let start = Instant::now();
        let ok = match lift_em(t) {
            Ok(l) => {
                let ec = l.lifted.base().clone();
                let strict = ec.objects().all(|a| {
                    ec.objects().all(|b| {
                        let m = l.forget_as_monoidal.tensorator(a, b);
                        let c = t.base();
                        m == c.id(c.dom(m))
                    })
                });
                let unit = l.forget_as_monoidal.unitor();
                l.check().is_ok()
                    && l.lifted.check().is_ok()
                    && em(t.monad()).is_ok_and(|plain| *plain.em_cat == *ec)
                    && strict
                    && unit == t.base().id(t.base().dom(unit))
            }
            Err(_) => false,
        };
        let t = start.elapsed();
        slowest = slowest.max(t);
        if !ok || t >= Duration::from_secs(5) {
            failures.push(name.clone());
        }
    }
    outcome(
        failures.is_empty() && !tuples.is_empty(),
        format!(
            "{} oplax tuples, {} failures, slowest {}",
            tuples.len(),
            failures.len(),
            secs(slowest)
        ),
    )
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let tuples = symmetric_tuples();
    for (name, t, b) in &tuples {
        let lifted = match t.laxity() {
            Laxity::Lax => lift_kleisli_braided(t, b).map(|(l, lb)| (l.check(), lb)),
            Laxity::Oplax => lift_em_braided(t, b).map(|(l, lb)| (l.check(), lb)),
        };
        let ok = lifted.is_ok_and(|(r, lb)| {
            r.is_ok() && lb.check().is_ok() && lb.is_symmetric() == b.is_symmetric()
        });
        if !ok {
            failures.push(name.clone());
        }
    }
    let t = start.elapsed();
    outcome(
        failures.is_empty() && !tuples.is_empty() && t < Duration::from_secs(5),
        format!(
            "{} braided tuples, {} failures, {}",
            tuples.len(),
            failures.len(),
            secs(t)
        ),
    )
}

fn catkit(args: &[&str], cwd: &Path) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_catkit"))
        .args(args)
        .current_dir(cwd)
        .output()
        .unwrap();
    (out.status.code(), out.stdout)
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let chain3 = corpus.join("chain3.ck");
    let broken = corpus.join("broken_pentagon.ck");
    let (chain3, broken) = (chain3.to_str().unwrap(), broken.to_str().unwrap());
    let commands: Vec<Vec<&str>> = vec![
        vec!["validate", chain3],
        vec!["validate", broken],
        vec!["kleisli", chain3, "-o", "out.ck"],
        vec!["em", chain3, "-o", "out.ck"],
        vec!["check-interchange", chain3],
        vec!["check-interchange", "--oplax", chain3],
        vec!["lift-kleisli", chain3, "-o", "out.ck"],
        vec!["lift-em", "--oplax", chain3],
        vec!["lift-braided", chain3, "-o", "out.ck"],
        vec!["product-check", chain3, "-o", "out.ck"],
    ];
    let mut failures = Vec::new();
    let mut runs = 0;
    for args in &commands {
        for format in ["text", "json"] {
            let mut full = args.clone();
            full.extend(["--report", format]);
            let first = catkit(&full, dir.path());
            let emitted = std::fs::read(dir.path().join("out.ck")).ok();
            let second = catkit(&full, dir.path());
            let emitted_again = std::fs::read(dir.path().join("out.ck")).ok();
            runs += 2;
            if first != second || emitted != emitted_again {
                failures.push(full.join(" "));
            }
            if let Some(bytes) = emitted {
                let text = String::from_utf8(bytes).unwrap();
                if Workspace::from_text(&text)
                    .map(|w| w.to_canonical_string())
                    .ok()
                    .as_deref()
                    != Some(text.as_str())
                {
                    failures.push(format!("round trip of {}", full.join(" ")));
                }
                std::fs::remove_file(dir.path().join("out.ck")).unwrap();
            }
        }
    }
    for file in [chain3, broken] {
        let text = std::fs::read_to_string(file).unwrap();
        let ws = Workspace::load(file).unwrap();
        let saved = dir.path().join("saved.ck");
        ws.save(&saved).unwrap();
        if std::fs::read_to_string(&saved).unwrap() != text {
            failures.push(format!("save of {file}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{runs} runs, {} nondeterministic or lossy: {failures:?}",
            failures.len()
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("monad laws accept exactly the chain closures", criterion_1),
        ("Kleisli resolutions", criterion_2),
        ("Kleisli product comparison", criterion_3),
        ("Eilenberg-Moore algebra enumeration", criterion_4),
        ("interchange validator agreement", criterion_5),
        ("Kleisli monoidal lift", criterion_6),
        ("Eilenberg-Moore monoidal lift", criterion_7),
        ("braided and symmetric lifts", criterion_8),
        ("CLI determinism and round trips", criterion_9),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let o = run();
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        writeln!(out, "criterion {}: {verdict} {title}: {}", i + 1, o.detail).unwrap();
        if !o.passed {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
