//! The `catkit` command line: load files into a [`Workspace`], run checks
//! and constructions, print a deterministic report and optionally emit the
//! constructed entities as a new file.
//!
//! Exit codes: 0 when every check passes, 1 when some law is violated, 2 on
//! parse, reference or structural errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{find_isomorphism, FinCat, Functor, DEFAULT_MAX_OBJECTS};
use crate::lift::{lift_em, lift_em_braided, lift_kleisli, lift_kleisli_braided};
use crate::monad::Laxity;
use crate::monmonad::{check_interchange_equivalence, MonoidalMonadTuple};
use crate::monoidal::{Braiding, MonoidalStructure};
use crate::report::{Report, Violation};
use crate::resolutions::{em, kleisli, kleisli_product_comparison};
use crate::workspace::{to_canonical_json, Workspace, FORMAT_VERSION};

/// The file used when a command is given no input files.
pub const BUNDLED_CORPUS: &str = include_str!("../corpus/chain3.ck");

#[derive(Parser, Debug)]
#[command(
    name = "catkit",
    about = "Exhaustive law checking for finite categorical structures",
    disable_version_flag = true
)]
pub struct Cli {
    /// Print the file format version and exit.
    #[arg(long)]
    pub version: bool,

    #[arg(long, value_enum, default_value_t = ReportFormat::Text, global = true)]
    pub report: ReportFormat,

    /// Run every tuple through the oplax validators and constructions.
    #[arg(long, global = true)]
    pub oplax: bool,

    /// Object cap for isomorphism searches.
    #[arg(long, default_value_t = DEFAULT_MAX_OBJECTS, global = true)]
    pub max_objects: usize,

    /// Write the constructed entities to this file.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the laws of every entity in the input.
    Validate(Inputs),
    /// Build and audit the Kleisli resolution of monads.
    Kleisli(MonadArgs),
    /// Build and audit the Eilenberg-Moore resolution of monads.
    Em(MonadArgs),
    /// Run both interchange validators on tuples and compare their verdicts.
    CheckInterchange(TupleArgs),
    /// Lift the monoidal structure of lax tuples to their Kleisli categories.
    LiftKleisli(TupleArgs),
    /// Lift the monoidal structure of oplax tuples to their algebras.
    LiftEm(TupleArgs),
    /// Lift a braiding along the Kleisli (lax) or algebra (oplax) lift.
    LiftBraided(TupleArgs),
    /// Build and audit the Kleisli product comparison for pairs of monads.
    ProductCheck(PairArgs),
}

#[derive(clap::Args, Debug)]
pub struct Inputs {
    /// Input files; the bundled corpus when none are given.
    pub files: Vec<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct MonadArgs {
    /// Restrict to these monads; all monads when absent.
    #[arg(long)]
    pub monad: Vec<String>,
    #[command(flatten)]
    pub inputs: Inputs,
}

#[derive(clap::Args, Debug)]
pub struct TupleArgs {
    /// Restrict to these tuples; all applicable tuples when absent.
    #[arg(long)]
    pub tuple: Vec<String>,
    #[command(flatten)]
    pub inputs: Inputs,
}

#[derive(clap::Args, Debug)]
pub struct PairArgs {
    /// Exactly two monads; every unordered pair when absent.
    #[arg(long, num_args = 2, value_names = ["LEFT", "RIGHT"])]
    pub pair: Vec<String>,
    #[command(flatten)]
    pub inputs: Inputs,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub violations: usize,
}

/// The outcome of one command, independent of how it is rendered.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CommandReport {
    pub command: Vec<String>,
    pub checks: Vec<CheckOutcome>,
    /// `[subject, key, value]` observations that are not pass/fail.
    pub facts: Vec<[String; 3]>,
    pub summary: Summary,
}

impl CommandReport {
    fn check(&mut self, name: impl Into<String>, report: Report) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            passed: report.is_ok(),
            violations: report.violations().to_vec(),
        });
    }

    fn fact(&mut self, subject: &str, key: &str, value: impl ToString) {
        self.facts
            .push([subject.to_string(), key.to_string(), value.to_string()]);
    }

    fn finish(&mut self) {
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        self.summary = Summary {
            checks: self.checks.len(),
            passed: self.checks.len() - failed,
            failed,
            violations: self.checks.iter().map(|c| c.violations.len()).sum(),
        };
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => to_canonical_json(self),
            ReportFormat::Text => {
                let mut out = format!("command: catkit {}\n", self.command.join(" "));
                for c in &self.checks {
                    if c.passed {
                        out.push_str(&format!("PASS {}\n", c.name));
                    } else {
                        let n = c.violations.len();
                        out.push_str(&format!(
                            "FAIL {} ({n} violation{})\n",
                            c.name,
                            if n == 1 { "" } else { "s" }
                        ));
                        for v in &c.violations {
                            out.push_str(&format!("  {v}\n"));
                        }
                    }
                }
                for [subject, key, value] in &self.facts {
                    out.push_str(&format!("{subject}: {key}={value}\n"));
                }
                let s = &self.summary;
                out.push_str(&format!(
                    "summary: {} checks, {} passed, {} failed, {} violations\n",
                    s.checks, s.passed, s.failed, s.violations
                ));
                out
            }
        }
    }
}

/// Everything a run produced: the exit code and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let echo: Vec<String> = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let cli = match Cli::try_parse_from(std::iter::once(OsString::from("catkit")).chain(args)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                ok_text(text)
            } else {
                failure(text)
            };
        }
    };
    if cli.version {
        return ok_text(format!("{FORMAT_VERSION}\n"));
    }
    let format = cli.report;
    match execute(&cli, echo) {
        Ok(report) => Outcome {
            code: if report.all_passed() { 0 } else { 1 },
            stdout: report.render(format),
            stderr: String::new(),
        },
        Err(e) => failure(format!("error: {e}\n")),
    }
}

fn ok_text(stdout: String) -> Outcome {
    Outcome {
        code: 0,
        stdout,
        stderr: String::new(),
    }
}

fn failure(stderr: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr,
    }
}

fn execute(cli: &Cli, echo: Vec<String>) -> Result<CommandReport> {
    let Some(command) = &cli.command else {
        return Err(Error::structural("no command given; see --help"));
    };
    let inputs = match command {
        Command::Validate(i) => i,
        Command::Kleisli(a) | Command::Em(a) => &a.inputs,
        Command::CheckInterchange(a)
        | Command::LiftKleisli(a)
        | Command::LiftEm(a)
        | Command::LiftBraided(a) => &a.inputs,
        Command::ProductCheck(a) => &a.inputs,
    };
    if let Some(out) = &cli.output {
        guard_output(out, &inputs.files)?;
    }
    let ws = if inputs.files.is_empty() {
        Workspace::from_text(BUNDLED_CORPUS)?
    } else {
        Workspace::load_all(&inputs.files)?
    };
    let mut ctx = Run {
        ws,
        oplax: cli.oplax,
        max_objects: cli.max_objects,
        report: CommandReport {
            command: echo,
            ..Default::default()
        },
        emitted: Workspace::new(),
    };
    let emits = match command {
        Command::Validate(_) => {
            ctx.validate()?;
            false
        }
        Command::Kleisli(a) => {
            ctx.resolutions(&a.monad, false)?;
            true
        }
        Command::Em(a) => {
            ctx.resolutions(&a.monad, true)?;
            true
        }
        Command::CheckInterchange(a) => {
            ctx.check_interchange(&a.tuple)?;
            false
        }
        Command::LiftKleisli(a) => {
            ctx.lift(&a.tuple, Some(Laxity::Lax), false)?;
            true
        }
        Command::LiftEm(a) => {
            ctx.lift(&a.tuple, Some(Laxity::Oplax), false)?;
            true
        }
        Command::LiftBraided(a) => {
            ctx.lift(&a.tuple, None, true)?;
            true
        }
        Command::ProductCheck(a) => {
            ctx.product_check(&a.pair)?;
            true
        }
    };
    if let Some(out) = &cli.output {
        if !emits {
            return Err(Error::structural(
                "this command constructs nothing to write with -o",
            ));
        }
        ctx.emitted.save(out)?;
    }
    ctx.report.finish();
    Ok(ctx.report)
}

/// `true`/`false`, or `skipped` when the search exceeds the object cap.
fn iso_fact<T>(found: Result<Option<T>>) -> Result<&'static str> {
    match found {
        Ok(Some(_)) => Ok("true"),
        Ok(None) => Ok("false"),
        Err(Error::SearchAborted { .. }) => Ok("skipped"),
        Err(e) => Err(e),
    }
}

/// Refuses an output path that names one of the inputs.
fn guard_output(out: &Path, inputs: &[PathBuf]) -> Result<()> {
    let canon = |p: &Path| std::fs::canonicalize(p).unwrap_or_else(|_| p.to_path_buf());
    if inputs.iter().any(|i| canon(i) == canon(out)) {
        return Err(Error::structural(format!(
            "refusing to overwrite input file `{}`",
            out.display()
        )));
    }
    Ok(())
}

struct Run {
    ws: Workspace,
    oplax: bool,
    max_objects: usize,
    report: CommandReport,
    emitted: Workspace,
}

/// The names in `wanted`, or every key of `map` when `wanted` is empty,
/// each verified to exist.
fn select<'a, V>(
    map: &'a BTreeMap<String, V>,
    kind: &'static str,
    wanted: &[String],
) -> Result<Vec<(&'a str, &'a V)>> {
    if wanted.is_empty() {
        return Ok(map.iter().map(|(k, v)| (k.as_str(), v)).collect());
    }
    wanted
        .iter()
        .map(|n| {
            map.get_key_value(n)
                .map(|(k, v)| (k.as_str(), v))
                .ok_or_else(|| Error::Unresolved {
                    kind,
                    name: n.clone(),
                })
        })
        .collect()
}

impl Run {
    /// The tuple as the command sees it: the recorded laxity, or oplax under
    /// `--oplax`.
    fn tuple(&self, t: &MonoidalMonadTuple) -> Result<MonoidalMonadTuple> {
        if !self.oplax || t.laxity() == Laxity::Oplax {
            return Ok(t.clone());
        }
        MonoidalMonadTuple::new(
            t.monoidal().clone(),
            t.monad().clone(),
            Laxity::Oplax,
            t.phi_components().to_vec(),
            t.phi_bar(),
        )
    }

    fn validate(&mut self) -> Result<()> {
        let ws = &self.ws;
        let r = &mut self.report;
        for (name, c) in &ws.categories {
            r.check(format!("category/{name}"), c.check());
        }
        for (name, f) in &ws.functors {
            r.check(format!("functor/{name}"), f.functor.check());
        }
        for (name, n) in &ws.nattrans {
            r.check(format!("nattrans/{name}"), n.cell.check());
        }
        for (name, m) in &ws.monads {
            r.check(format!("monad/{name}"), m.monad.check());
        }
        for (name, m) in &ws.monoidal {
            r.check(format!("monoidal/{name}"), m.structure.check());
            if let Some(b) = &m.braiding {
                r.check(format!("braiding/{name}"), b.check());
            }
        }
        let names: Vec<String> = self.ws.tuples.keys().cloned().collect();
        self.check_interchange(&names)
    }

    fn check_interchange(&mut self, wanted: &[String]) -> Result<()> {
        let mut done = Vec::new();
        for (name, t) in select(&self.ws.tuples, "tuple", wanted)? {
            let t = self.tuple(&t.tuple)?;
            let out = check_interchange_equivalence(&t);
            done.push((name.to_string(), t.laxity(), out));
        }
        for (name, laxity, out) in done {
            let agree = out.agree();
            let r = &mut self.report;
            r.check(format!("tuple/{name}/in-monads"), out.in_monads);
            r.check(format!("tuple/{name}/on-monoidal"), out.on_monoidal);
            let mut a = Report::new();
            if !agree {
                a.violation(
                    "agreement",
                    name.as_str(),
                    "in-monads verdict",
                    "on-monoidal verdict",
                );
            }
            r.check(format!("tuple/{name}/agreement"), a);
            r.fact(&format!("tuple/{name}"), "laxity", laxity);
            r.fact(&format!("tuple/{name}"), "agreement", agree);
        }
        Ok(())
    }

    fn category_name(&self, c: &Arc<FinCat>) -> Result<String> {
        self.ws
            .category_name(c)
            .map(str::to_string)
            .ok_or_else(|| Error::structural("entity lives on an unregistered category"))
    }

    fn emit_category(&mut self, name: &str, c: &Arc<FinCat>) -> Result<()> {
        match self.emitted.categories.get(name) {
            Some(existing) if **existing == **c => Ok(()),
            _ => self.emitted.add_category(name, c.clone()),
        }
    }

    fn emit_functor(&mut self, name: &str, f: &Functor) -> Result<()> {
        self.emitted.add_functor(name, f.clone())
    }

    fn resolutions(&mut self, wanted: &[String], algebras: bool) -> Result<()> {
        let monads: Vec<(String, crate::monad::Monad)> = select(&self.ws.monads, "monad", wanted)?
            .into_iter()
            .map(|(n, m)| (n.to_string(), m.monad.clone()))
            .collect();
        for (name, m) in monads {
            let base = self.category_name(m.base())?;
            let (kind, result) = if algebras {
                (
                    "em",
                    em(&m).map(|r| {
                        (
                            r.em_cat.clone(),
                            r.free.clone(),
                            r.forget.clone(),
                            r.check(),
                        )
                    }),
                )
            } else {
                (
                    "kleisli",
                    kleisli(&m).map(|r| {
                        (
                            r.kleisli_cat.clone(),
                            r.free.clone(),
                            r.forget.clone(),
                            r.check(),
                        )
                    }),
                )
            };
            let check = format!("monad/{name}/{kind}");
            match result {
                Err(Error::Precondition(pre)) => self.report.check(check, pre),
                Err(e) => return Err(e),
                Ok((cat, free, forget, audit)) => {
                    self.report.check(check, audit?);
                    let subject = format!("monad/{name}");
                    self.report
                        .fact(&subject, &format!("{kind}.objects"), cat.object_count());
                    self.report
                        .fact(&subject, &format!("{kind}.morphisms"), cat.morphism_count());
                    if algebras {
                        let kl = kleisli(&m)?;
                        let iso =
                            iso_fact(find_isomorphism(&kl.kleisli_cat, &cat, self.max_objects))?;
                        self.report.fact(&subject, "em.isomorphic-to-kleisli", iso);
                    }
                    let cat_name = format!("{name}.{kind}");
                    self.emit_category(&base, m.base())?;
                    self.emit_category(&cat_name, &cat)?;
                    self.emit_functor(&format!("{cat_name}.free"), &free)?;
                    self.emit_functor(&format!("{cat_name}.forget"), &forget)?;
                }
            }
        }
        Ok(())
    }

    /// Lifts every selected tuple. `want` fixes the required laxity; `None`
    /// (braided) follows each tuple's own laxity.
    fn lift(&mut self, wanted: &[String], want: Option<Laxity>, braided: bool) -> Result<()> {
        let mut jobs = Vec::new();
        for (name, t) in select(&self.ws.tuples, "tuple", wanted)? {
            let tuple = self.tuple(&t.tuple)?;
            if let Some(l) = want {
                if tuple.laxity() != l {
                    if wanted.is_empty() {
                        continue;
                    }
                    return Err(Error::Boundary(format!(
                        "tuple `{name}` is {}, this lift needs {l}",
                        tuple.laxity()
                    )));
                }
            }
            let braiding = self.ws.monoidal[&t.monoidal].braiding.clone();
            if braided && braiding.is_none() {
                if wanted.is_empty() {
                    continue;
                }
                return Err(Error::structural(format!(
                    "monoidal `{}` carries no braiding",
                    t.monoidal
                )));
            }
            jobs.push((name.to_string(), tuple, braiding));
        }
        for (name, t, braiding) in jobs {
            self.lift_one(&name, &t, braiding.as_ref().filter(|_| braided))?;
        }
        Ok(())
    }

    fn lift_one(
        &mut self,
        name: &str,
        t: &MonoidalMonadTuple,
        braiding: Option<&Braiding>,
    ) -> Result<()> {
        let kind = match t.laxity() {
            Laxity::Lax => "kleisli",
            Laxity::Oplax => "em",
        };
        let check = format!(
            "tuple/{name}/lift-{kind}{}",
            if braiding.is_some() { "-braided" } else { "" }
        );
        type Lifted = (
            Report,
            Arc<FinCat>,
            MonoidalStructure,
            Option<Braiding>,
            Functor,
            Functor,
        );
        let built: Result<Lifted> = match (t.laxity(), braiding) {
            (Laxity::Lax, None) => lift_kleisli(t).map(|l| {
                (
                    l.check(),
                    l.resolution.kleisli_cat.clone(),
                    l.lifted.clone(),
                    None,
                    l.resolution.free.clone(),
                    l.resolution.forget.clone(),
                )
            }),
            (Laxity::Oplax, None) => lift_em(t).map(|l| {
                (
                    l.check(),
                    l.resolution.em_cat.clone(),
                    l.lifted.clone(),
                    None,
                    l.resolution.free.clone(),
                    l.resolution.forget.clone(),
                )
            }),
            (Laxity::Lax, Some(b)) => lift_kleisli_braided(t, b).map(|(l, lb)| {
                let mut r = l.check();
                r.absorb("braiding", lb.check());
                (
                    r,
                    l.resolution.kleisli_cat.clone(),
                    l.lifted.clone(),
                    Some(lb),
                    l.resolution.free.clone(),
                    l.resolution.forget.clone(),
                )
            }),
            (Laxity::Oplax, Some(b)) => lift_em_braided(t, b).map(|(l, lb)| {
                let mut r = l.check();
                r.absorb("braiding", lb.check());
                (
                    r,
                    l.resolution.em_cat.clone(),
                    l.lifted.clone(),
                    Some(lb),
                    l.resolution.free.clone(),
                    l.resolution.forget.clone(),
                )
            }),
        };
        match built {
            Err(Error::Precondition(pre)) => {
                self.report.check(check, pre);
                Ok(())
            }
            Err(e) => Err(e),
            Ok((audit, cat, lifted, lifted_braiding, free, forget)) => {
                self.report.check(check, audit);
                let subject = format!("tuple/{name}");
                self.report
                    .fact(&subject, &format!("{kind}.objects"), cat.object_count());
                self.report
                    .fact(&subject, &format!("{kind}.morphisms"), cat.morphism_count());
                let base = self.category_name(t.base())?;
                let cat_name = format!("{name}.{kind}");
                self.emit_category(&base, t.base())?;
                self.emit_category(&cat_name, &cat)?;
                self.emit_functor(&format!("{cat_name}.free"), &free)?;
                self.emit_functor(&format!("{cat_name}.forget"), &forget)?;
                self.emitted
                    .add_monoidal(&cat_name, lifted, lifted_braiding)
            }
        }
    }

    fn product_check(&mut self, pair: &[String]) -> Result<()> {
        let names: Vec<String> = select(&self.ws.monads, "monad", pair)?
            .into_iter()
            .map(|(n, _)| n.to_string())
            .collect();
        let pairs: Vec<(String, String)> = if pair.is_empty() {
            let mut v = Vec::new();
            for (i, a) in names.iter().enumerate() {
                for b in &names[i..] {
                    v.push((a.clone(), b.clone()));
                }
            }
            v
        } else {
            vec![(names[0].clone(), names[1].clone())]
        };
        for (a, b) in pairs {
            let (m1, m2) = (
                self.ws.monads[&a].monad.clone(),
                self.ws.monads[&b].monad.clone(),
            );
            let check = format!("pair/{a}*{b}/kleisli-product");
            match kleisli_product_comparison(&m1, &m2) {
                Err(Error::Precondition(pre)) => self.report.check(check, pre),
                Err(e) => return Err(e),
                Ok(pc) => {
                    self.report.check(check, pc.check()?);
                    let iso = iso_fact(find_isomorphism(
                        &pc.kleisli_product.kleisli_cat,
                        &pc.target.category,
                        self.max_objects,
                    ))?;
                    self.report
                        .fact(&format!("pair/{a}*{b}"), "isomorphic-by-search", iso);
                    let stem = format!("{a}*{b}");
                    self.emit_category(
                        &format!("{stem}.kleisli"),
                        &pc.kleisli_product.kleisli_cat,
                    )?;
                    self.emit_category(&format!("{stem}.kleisli-pair"), &pc.target.category)?;
                    self.emit_functor(&format!("{stem}.comparison"), &pc.h)?;
                    self.emit_functor(&format!("{stem}.comparison-inverse"), &pc.inverse)?;
                }
            }
        }
        Ok(())
    }
}
