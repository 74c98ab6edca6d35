//! Command dispatch. A command applies to every block of the kind it
//! targets, in file order.

use std::fmt;
use std::time::Instant;

use crate::algebroid::{check_algebroid, check_bialgebroid_with};
use crate::cli::model::{ModelFile, Object};
use crate::cli::print::Printer;
use crate::cli::report::Report;
use crate::doublela::{
    build_cotangent_double, check_double_with, induced_pair, matched_from_vacant, structural_diagnostics,
    vacant_from_matched_unchecked,
};
use crate::dvb::{is_nondegenerate, random_vector};
use crate::error::{Error, Result};
use crate::exact::random::{rng, OracleOptions};
use crate::lavb::check_lavb;
use crate::liealg::{check_cocycle, check_manin, drinfeld_double, dual_bracket};
use crate::matched::{bowtie_unchecked, build_semidirects, check_cor_sdp, check_matched, extract_actions};
use crate::verdict::{CheckReport, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Check,
    Build,
    Dualize,
    Extract,
}

/// An action and its target, e.g. `check double` or `build bowtie`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub action: Action,
    pub target: String,
}

const CHECK_TARGETS: &[&str] = &[
    "algebroid",
    "lie_algebra",
    "poisson",
    "cocycle",
    "bialgebroid",
    "matched",
    "manin",
    "lavb",
    "double",
];
const BUILD_TARGETS: &[&str] = &["double", "bowtie", "drinfeld", "cotangent-double", "semidirects", "vacant"];

impl Command {
    /// `verify` is accepted as a synonym of `check`.
    pub fn parse(action: &str, target: &str) -> Result<Command> {
        let (action, targets) = match action {
            "check" | "verify" => (Action::Check, CHECK_TARGETS),
            "build" => (Action::Build, BUILD_TARGETS),
            "dualize" => (Action::Dualize, &["dvb"][..]),
            "extract" => (Action::Extract, &["matched"][..]),
            other => return Err(Error::Unsupported(format!("unknown verb `{other}`"))),
        };
        if !targets.contains(&target) {
            return Err(Error::Unsupported(format!(
                "unknown target `{target}`; expected one of {}",
                targets.join(", ")
            )));
        }
        Ok(Command {
            action,
            target: target.to_string(),
        })
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = match self.action {
            Action::Check => "check",
            Action::Build => "build",
            Action::Dualize => "dualize",
            Action::Extract => "extract",
        };
        write!(f, "{a} {}", self.target)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub timings: bool,
}

struct Runner<'a> {
    report: Report,
    printer: Printer,
    opts: RunOptions,
    oracle: OracleOptions,
    model: &'a ModelFile,
}

/// A construction refused for a failed precondition counts as a failed
/// check rather than an error.
fn rejected<T>(r: Result<T>) -> Result<std::result::Result<T, Verdict>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(Error::Rejected { witness }) => Ok(Err(Verdict::Fail(witness))),
        Err(e) => Err(e),
    }
}

impl Runner<'_> {
    fn check(&mut self, id: String, f: impl FnOnce() -> Result<Verdict>) -> Result<bool> {
        let start = Instant::now();
        let v = match rejected(f())? {
            Ok(v) => v,
            Err(v) => v,
        };
        let t = self.opts.timings.then(|| start.elapsed().as_micros() as u64);
        self.report.push(id, &v, t);
        Ok(v.passed())
    }

    fn merge(&mut self, prefix: &str, f: impl FnOnce() -> Result<CheckReport>) -> Result<bool> {
        let start = Instant::now();
        let r = f()?;
        let t = self.opts.timings.then(|| start.elapsed().as_micros() as u64);
        for c in &r.checks {
            self.report.push(format!("{prefix}: {}", c.id), &c.verdict, t);
        }
        for (k, v) in &r.notes {
            self.report.note(format!("{prefix}: {k}"), v.clone());
        }
        Ok(r.passed())
    }

    /// Adds everything printed since the last call as one output.
    fn emit(&mut self, name: &str, o: &Object) {
        let before = self.printer.len();
        self.printer.object(o, name);
        let text = self.printer.since(before);
        self.report.output(name, text);
    }

    fn items(&self, kind: &str) -> Vec<(String, Object)> {
        self.model
            .of_kind(kind)
            .map(|(n, o)| (n.to_string(), o.clone()))
            .collect()
    }

    fn require(&self, kind: &str) -> Result<Vec<(String, Object)>> {
        let items = self.items(kind);
        if items.is_empty() {
            return Err(Error::Schema(format!("the model has no [{kind}] block")));
        }
        Ok(items)
    }

    fn run_check(&mut self, target: &str) -> Result<()> {
        match target {
            "algebroid" => {
                for (n, o) in self.require("algebroid")? {
                    let Object::Algebroid { algebroid, .. } = o else { unreachable!() };
                    self.check(format!("algebroid {n}"), || Ok(check_algebroid(&algebroid)))?;
                }
            }
            "lie_algebra" => {
                for (n, o) in self.require("lie_algebra")? {
                    let Object::LieAlgebra(g) = o else { unreachable!() };
                    self.check(format!("jacobi {n}"), || Ok(g.check_jacobi()))?;
                }
            }
            "poisson" => {
                for (n, o) in self.require("poisson")? {
                    let Object::Poisson(p) = o else { unreachable!() };
                    self.check(format!("poisson {n}"), || Ok(p.check_poisson()))?;
                }
            }
            "cocycle" => {
                for (n, o) in self.require("cobracket")? {
                    let Object::Cobracket(b) = o else { unreachable!() };
                    self.check(format!("co-jacobi {n}"), || dual_bracket(&b).map(|_| Verdict::Pass))?;
                    self.check(format!("cocycle {n}"), || Ok(check_cocycle(&b)))?;
                }
            }
            "bialgebroid" => {
                let items = self.items("bialgebroid");
                let bialgebras = self.items("cobracket");
                if items.is_empty() && bialgebras.is_empty() {
                    return Err(Error::Schema("the model has no [bialgebroid] or [cobracket] block".into()));
                }
                for (n, o) in bialgebras {
                    let Object::Cobracket(b) = o else { unreachable!() };
                    self.check(format!("bialgebra {n}"), || {
                        dual_bracket(&b)?;
                        Ok(check_cocycle(&b))
                    })?;
                }
                let oracle = self.oracle;
                for (n, o) in items {
                    let Object::Bialgebroid(l, ls) = o else { unreachable!() };
                    self.check(format!("bialgebroid {n}"), || check_bialgebroid_with(&l, &ls, &oracle))?;
                }
            }
            "matched" => {
                for (n, o) in self.require("matched_pair")? {
                    let Object::Matched(mp) = o else { unreachable!() };
                    self.check(format!("matched pair {n}"), || Ok(check_matched(&mp)))?;
                    self.check(format!("semidirect products {n}"), || check_cor_sdp(&mp))?;
                }
            }
            "manin" => {
                let manins = self.items("manin");
                let bialgebras = self.items("cobracket");
                if manins.is_empty() && bialgebras.is_empty() {
                    return Err(Error::Schema("the model has no [manin] or [cobracket] block".into()));
                }
                for (n, o) in bialgebras {
                    let Object::Cobracket(b) = o else { unreachable!() };
                    self.check(format!("drinfeld double of {n}"), || {
                        drinfeld_double(&b).map(|p| check_manin(&p))
                    })?;
                }
                for (n, o) in manins {
                    let Object::Manin(p) = o else { unreachable!() };
                    self.check(format!("manin {n}"), || Ok(check_manin(&p)))?;
                }
            }
            "lavb" => {
                for (n, o) in self.require("lavb")? {
                    let Object::Lavb(v) = o else { unreachable!() };
                    self.check(format!("lavb {n}"), || Ok(check_lavb(&v)))?;
                }
            }
            "double" => {
                let oracle = self.oracle;
                for (n, o) in self.require("double")? {
                    let Object::Double(d) = o else { unreachable!() };
                    // Diagnostics are consequences of the axioms, so they
                    // only run once the axioms hold.
                    if self.merge(&format!("double {n}"), || check_double_with(&d, &oracle))? {
                        self.merge(&format!("double {n} diagnostics"), || structural_diagnostics(&d))?;
                    }
                }
            }
            _ => unreachable!("validated target"),
        }
        Ok(())
    }

    fn run_build(&mut self, target: &str) -> Result<()> {
        let oracle = self.oracle;
        match target {
            "double" => {
                for (n, o) in self.require("double")? {
                    let Object::Double(d) = o.clone() else { unreachable!() };
                    let ok = self.merge(&format!("double {n}"), || check_double_with(&d, &oracle))?;
                    self.emit(&n, &o);
                    if ok {
                        let (e, es) = induced_pair(&d)?;
                        self.emit(&format!("{n}_induced"), &Object::Bialgebroid(e, es));
                    }
                }
            }
            "bowtie" => {
                for (n, o) in self.require("matched_pair")? {
                    let Object::Matched(mp) = o else { unreachable!() };
                    if self.check(format!("matched pair {n}"), || Ok(check_matched(&mp)))? {
                        let l = bowtie_unchecked(&mp)?;
                        let split = Some(mp.a.rank());
                        self.emit(&format!("{n}_bowtie"), &Object::Algebroid { algebroid: l, split });
                    }
                }
            }
            "drinfeld" => {
                for (n, o) in self.require("cobracket")? {
                    let Object::Cobracket(b) = o else { unreachable!() };
                    let mut built = None;
                    self.check(format!("drinfeld double of {n}"), || {
                        let p = drinfeld_double(&b)?;
                        let v = check_manin(&p);
                        built = Some(p);
                        Ok(v)
                    })?;
                    if let Some(p) = built {
                        self.emit(&format!("{n}_double"), &Object::Manin(p));
                    }
                }
            }
            "cotangent-double" => {
                for (n, o) in self.require("bialgebroid")? {
                    let Object::Bialgebroid(l, ls) = o else { unreachable!() };
                    self.check(format!("bialgebroid {n}"), || check_bialgebroid_with(&l, &ls, &oracle))?;
                    let d = build_cotangent_double(&l, &ls)?;
                    self.emit(&format!("{n}_double"), &Object::Double(d));
                }
            }
            "semidirects" => {
                for (n, o) in self.require("matched_pair")? {
                    let Object::Matched(mp) = o else { unreachable!() };
                    self.check(format!("semidirect products {n}"), || check_cor_sdp(&mp))?;
                    if let Ok((e, es)) = rejected(build_semidirects(&mp))? {
                        self.emit(&format!("{n}_semidirects"), &Object::Bialgebroid(e, es));
                    }
                }
            }
            "vacant" => {
                for (n, o) in self.require("matched_pair")? {
                    let Object::Matched(mp) = o else { unreachable!() };
                    self.check(format!("matched pair {n}"), || Ok(check_matched(&mp)))?;
                    let d = vacant_from_matched_unchecked(&mp)?;
                    self.emit(&format!("{n}_vacant"), &Object::Double(d));
                }
            }
            _ => unreachable!("validated target"),
        }
        Ok(())
    }

    fn run_dualize(&mut self) -> Result<()> {
        let mut r = rng(self.opts.seed);
        for (n, o) in self.require("dvb")? {
            let Object::Dvb(d) = o else { unreachable!() };
            let m = random_vector(&mut r, d.chart().dim());
            let kappa = random_vector(&mut r, d.core().rank());
            self.check(format!("pairing of {n} nondegenerate"), || {
                let ok = is_nondegenerate(&d, &m, &kappa)?;
                Ok(if ok {
                    Verdict::Pass
                } else {
                    Verdict::Fail(crate::Witness::new(
                        "pairing nondegenerate",
                        format!("m = {m:?}, kappa = {kappa:?}"),
                        "0",
                    ))
                })
            })?;
            self.emit(&format!("{n}_dual_over_a"), &Object::Dvb(d.dual_over_a()));
            self.emit(&format!("{n}_dual_over_b"), &Object::Dvb(d.dual_over_b()));
        }
        Ok(())
    }

    fn run_extract(&mut self) -> Result<()> {
        let doubles = self.items("double");
        let splits: Vec<_> = self
            .items("algebroid")
            .into_iter()
            .filter(|(_, o)| matches!(o, Object::Algebroid { split: Some(_), .. }))
            .collect();
        if doubles.is_empty() && splits.is_empty() {
            return Err(Error::Schema("the model has no [double] block and no [algebroid] block with `split`".into()));
        }
        for (n, o) in splits {
            let Object::Algebroid { algebroid, split: Some(k) } = o else { unreachable!() };
            let mut built = None;
            self.check(format!("matched pair from {n}"), || {
                let mp = extract_actions(&algebroid, k)?;
                let v = check_matched(&mp);
                built = Some(mp);
                Ok(v)
            })?;
            if let Some(mp) = built {
                self.emit(&format!("{n}_matched"), &Object::Matched(mp));
            }
        }
        for (n, o) in doubles {
            let Object::Double(d) = o else { unreachable!() };
            let mp = matched_from_vacant(&d)?;
            self.check(format!("matched pair from {n}"), || Ok(check_matched(&mp)))?;
            self.emit(&format!("{n}_matched"), &Object::Matched(mp));
        }
        Ok(())
    }
}

/// Runs a command on a parsed model. `input` is the raw file, hashed into
/// the report.
pub fn run(command: &Command, model: &ModelFile, input: &[u8], opts: RunOptions) -> Result<Report> {
    let mut runner = Runner {
        report: Report::new(input, command.to_string(), opts.seed),
        printer: Printer::new(),
        opts,
        oracle: OracleOptions::from_env(opts.seed),
        model,
    };
    match command.action {
        Action::Check => runner.run_check(&command.target)?,
        Action::Build => runner.run_build(&command.target)?,
        Action::Dualize => runner.run_dualize()?,
        Action::Extract => runner.run_extract()?,
    }
    Ok(runner.report)
}
