//! Named verification suites and their reports.
//!
//! Each check is registered under a stable identifier with the statement it
//! tests. Checks run on a small thread pool; the report lists them sorted by
//! identifier so identical inputs give identical JSON.

pub mod claims;
pub mod identities;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cancel;
use crate::constructions::{ComplexName, IdealKind};
use crate::error::{Error, Result};
use crate::ring::{PolyRing, PrimeField, Rationals};
use claims::Resolved;

/// Verdict payload produced by a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    pub fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome { passed, detail: detail.into() }
    }

    pub fn pass(detail: impl Into<String>) -> Self {
        Self::new(true, detail)
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Self::new(false, detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    ExteriorIdentities,
    ComplexClosure,
    Grades,
    Exactness,
    Resolutions,
    Gorenstein,
    Localization,
    CharAnomaly,
    All,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::ExteriorIdentities,
        Suite::ComplexClosure,
        Suite::Grades,
        Suite::Exactness,
        Suite::Resolutions,
        Suite::Gorenstein,
        Suite::Localization,
        Suite::CharAnomaly,
        Suite::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::ExteriorIdentities => "exterior-identities",
            Suite::ComplexClosure => "complex-closure",
            Suite::Grades => "grades",
            Suite::Exactness => "exactness",
            Suite::Resolutions => "resolutions",
            Suite::Gorenstein => "gorenstein",
            Suite::Localization => "localization",
            Suite::CharAnomaly => "char-anomaly",
            Suite::All => "all",
        }
    }

    /// One-line summary of what the suite establishes.
    pub fn summary(self) -> &'static str {
        match self {
            Suite::ExteriorIdentities => {
                "contraction and divided-power identities in the exterior algebra; Pf^2 = det"
            }
            Suite::ComplexClosure => "the relation complex and the three presented complexes are complexes",
            Suite::Grades => "codimensions of I, I_λ and J",
            Suite::Exactness => "homology of the presented complexes vanishes where claimed",
            Suite::Resolutions => "perfection: pd equals codim for A, N and ℛ/J; oracle and mapping-cone agreement",
            Suite::Gorenstein => "ℛ/J and A are Gorenstein; the resolution of N is self-dual in shape",
            Suite::Localization => "after inverting x_(1,2), J is generated by two elements over A",
            Suite::CharAnomaly => "the resolution of N at f = 5 depends on the characteristic",
            Suite::All => "every suite above",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL[..8].to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.as_str() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Matrix sizes, characteristics and seed to run the checks over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub f: Vec<usize>,
    pub characteristics: Vec<u64>,
    pub seed: u64,
}

impl Grid {
    pub fn new(f: Vec<usize>, characteristics: Vec<u64>, seed: u64) -> Self {
        Grid { f, characteristics, seed }
    }
}

/// Execution settings that do not change what is checked.
#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Wall-clock budget for the whole run; unfinished checks are skipped.
    pub budget: Option<Duration>,
    pub threads: usize,
    /// Record per-check timings (makes the report non-deterministic).
    pub timings: bool,
    pub trials_prime: usize,
    pub trials_rational: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            budget: None,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            timings: false,
            trials_prime: 100,
            trials_rational: 20,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    #[serde(rename = "skipped (budget)")]
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub suite: Suite,
    /// The statement the check tests.
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Incomplete,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub grid: Grid,
    pub checks: Vec<CheckResult>,
    pub status: Status,
    pub passed: bool,
}

impl SuiteReport {
    fn assemble(suite: Suite, grid: Grid, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let status = if checks.iter().any(|c| c.verdict == Verdict::Fail) {
            Status::Fail
        } else if checks.iter().any(|c| c.verdict == Verdict::Skipped) {
            Status::Incomplete
        } else {
            Status::Pass
        };
        SuiteReport { suite, grid, checks, passed: status == Status::Pass, status }
    }

    /// Process exit code: 0 pass, 1 fail, 2 incomplete.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Incomplete => 2,
        }
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

pub fn export_report(report: &SuiteReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let mut out = format!(
                "suite {}  f {:?}  char {:?}  seed {}\n",
                report.suite, report.grid.f, report.grid.characteristics, report.grid.seed
            );
            for c in &report.checks {
                out.push_str(&format!("{}  {}  [{}]  {}", c.verdict, c.id, c.claim, c.detail));
                if let Some(ms) = c.millis {
                    out.push_str(&format!("  ({ms} ms)"));
                }
                out.push('\n');
            }
            let count = |v: Verdict| report.checks.iter().filter(|c| c.verdict == v).count();
            out.push_str(&format!(
                "{:?}: {} passed, {} failed, {} skipped\n",
                report.status,
                count(Verdict::Pass),
                count(Verdict::Fail),
                count(Verdict::Skipped)
            ));
            out
        }
    }
}

type Job = Box<dyn Fn(u64) -> Result<Outcome> + Send + Sync>;

struct Check {
    id: String,
    suite: Suite,
    claim: &'static str,
    f: Option<usize>,
    characteristic: Option<u64>,
    run: Job,
}

/// Runs `$body` with `$ring` bound to a ring over the field of characteristic `$c`.
macro_rules! over_field {
    ($c:expr, $f:expr, |$ring:ident| $body:expr) => {
        match $c {
            0 => {
                let $ring = PolyRing::new(Rationals, $f)?;
                $body
            }
            p => {
                let $ring = PolyRing::new(PrimeField::new(u32::try_from(p).map_err(|_| {
                    Error::InvalidParameter(format!("characteristic {p} too large"))
                })?)?, $f)?;
                $body
            }
        }
    };
}

struct Registry<'a> {
    grid: &'a Grid,
    options: &'a RunOptions,
    checks: Vec<Check>,
}

impl Registry<'_> {
    fn trials(&self, c: u64) -> usize {
        if c == 0 {
            self.options.trials_rational
        } else {
            self.options.trials_prime
        }
    }

    /// Registers `run` for every grid point with `f >= min_f` accepted by `keep`.
    fn per_point<G>(&mut self, suite: Suite, name: &str, claim: &'static str, min_f: usize, keep: impl Fn(usize, u64) -> bool, run: G)
    where
        G: Fn(usize, u64, usize, u64) -> Result<Outcome> + Send + Sync + Clone + 'static,
    {
        for &f in &self.grid.f {
            for &c in &self.grid.characteristics {
                if f < min_f || !keep(f, c) {
                    continue;
                }
                let id = format!("{suite}/{name}/f={f}/char={c}");
                let trials = self.trials(c);
                let run = run.clone();
                let check_id = id.clone();
                self.checks.push(Check {
                    id,
                    suite,
                    claim,
                    f: Some(f),
                    characteristic: Some(c),
                    run: Box::new(move |seed| run(f, c, trials, seed ^ hash_id(&check_id))),
                });
            }
        }
    }
}

fn hash_id(id: &str) -> u64 {
    let mut h = DefaultHasher::new();
    id.hash(&mut h);
    h.finish()
}

fn any(_: usize, _: u64) -> bool {
    true
}

macro_rules! trial_check {
    ($reg:expr, $name:expr, $claim:expr, $min_f:expr, $keep:expr, $func:path) => {
        $reg.per_point(Suite::ExteriorIdentities, $name, $claim, $min_f, $keep, |f, c, trials, seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            over_field!(c, f, |ring| $func(&ring, &mut rng, trials))
        })
    };
}

macro_rules! ring_check {
    ($reg:expr, $suite:expr, $name:expr, $claim:expr, $min_f:expr, $keep:expr, |$ring:ident| $body:expr) => {
        $reg.per_point($suite, $name, $claim, $min_f, $keep, move |f, c, _, _| over_field!(c, f, |$ring| $body))
    };
}

fn register_exterior(reg: &mut Registry) {
    trial_check!(
        reg,
        "contraction-derivation",
        "(f1(φq))(fp) = f1 ∧ φq(fp) + (-1)^(1+q) φq(f1 ∧ fp)",
        2,
        any,
        identities::contraction_derivation
    );
    trial_check!(
        reg,
        "divided-power-contraction",
        "[f2(φ3)](f2) = φ3(f2^(2))",
        3,
        any,
        identities::divided_power_contraction
    );
    trial_check!(
        reg,
        "three-covector-expansion",
        "f2(φ∧φ'∧φ'') = f2(φ∧φ')φ'' - f2(φ∧φ'')φ' + f2(φ'∧φ'')φ",
        3,
        any,
        identities::three_covector_expansion
    );
    trial_check!(
        reg,
        "divided-power-derivation",
        "covectors act on divided powers of 2-forms as derivations: τ(v^(2)) = τ(v) ∧ v",
        2,
        any,
        identities::divided_power_derivation
    );
    trial_check!(
        reg,
        "pairing-compatibility",
        "the two pairings agree: φi(fi) = fi(φi) in every degree",
        2,
        any,
        identities::pairing_compatibility
    );
    trial_check!(
        reg,
        "half-identity",
        "ξ^(2)(φ4)·φ1 = ξ([φ1(ξ)](φ4) + ½ ξ(φ1 ∧ φ4)) when 2 is a unit",
        4,
        |_, c| c != 2,
        identities::half_identity
    );
    let grid_chars = reg.grid.characteristics.clone();
    if reg.grid.f.is_empty() {
        return;
    }
    for c in grid_chars {
        let id = format!("{}/pfaffian-squared/char={c}", Suite::ExteriorIdentities);
        let trials = 20;
        let check_id = id.clone();
        reg.checks.push(Check {
            id,
            suite: Suite::ExteriorIdentities,
            claim: "Pf(A)^2 = det(A) for random 6×6 integer alternating matrices (cofactor determinant)",
            f: None,
            characteristic: Some(c),
            run: Box::new(move |seed| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ hash_id(&check_id));
                match c {
                    0 => identities::pfaffian_squared(&Rationals, &mut rng, trials),
                    p => identities::pfaffian_squared(
                        &PrimeField::new(u32::try_from(p).map_err(|_| Error::InvalidParameter(format!("characteristic {p} too large")))?)?,
                        &mut rng,
                        trials,
                    ),
                }
            }),
        });
    }
}

fn register_closure(reg: &mut Registry) {
    let s = Suite::ComplexClosure;
    ring_check!(reg, s, "relcplx-composite", "D1 ∘ D2 = 0 identically", 2, any, |ring| claims::relation_complex_closes(&ring));
    ring_check!(reg, s, "relcplx-image", "the entries of D1 generate J", 2, any, |ring| claims::relation_complex_image(&ring));
    ring_check!(
        reg,
        s,
        "precplx",
        "⋀³F̄* → F̄* → F̄ → ⋀³F̄ is a complex of well-defined A-module maps",
        3,
        any,
        |ring| claims::complex_closes(&ring, ComplexName::PreComplex)
    );
    ring_check!(
        reg,
        s,
        "seq32",
        "⋀³F̄* → F̄* → A³ → A → A' is a complex of well-defined maps",
        3,
        any,
        |ring| claims::complex_closes(&ring, ComplexName::Seq32)
    );
    ring_check!(
        reg,
        s,
        "seq43",
        "𝒜 → 𝒩 → 𝒜 → ℛ/J is a complex of well-defined maps",
        2,
        any,
        |ring| claims::complex_closes(&ring, ComplexName::Seq43)
    );
}

fn register_grades(reg: &mut Registry) {
    let s = Suite::Grades;
    ring_check!(reg, s, "codim-I", "codim Pf_4(X) = C(f-2,2)", 2, any, |ring| claims::grade_of_i(&ring));
    ring_check!(reg, s, "codim-I-lambda", "codim I_λ = C(f-2,2) + λ - 1 for 1 <= λ < f", 2, any, |ring| {
        claims::grades_of_i_lambda(&ring)
    });
    ring_check!(reg, s, "codim-J", "codim J = C(f-2,2) + 2 (and 1 at f = 2)", 2, any, |ring| claims::grade_of_j(&ring));
}

fn register_exactness(reg: &mut Registry) {
    let s = Suite::Exactness;
    ring_check!(
        reg,
        s,
        "precplx",
        "⋀³F̄* → F̄* → F̄ → ⋀³F̄ is exact at F̄* and F̄",
        3,
        any,
        |ring| claims::complex_exact(&ring, ComplexName::PreComplex)
    );
    ring_check!(
        reg,
        s,
        "seq32",
        "⋀³F̄* → F̄* → A³ → A → A' → 0 is exact past ⋀³F̄*",
        3,
        any,
        |ring| claims::complex_exact(&ring, ComplexName::Seq32)
    );
    ring_check!(
        reg,
        s,
        "seq43",
        "0 → 𝒜 → 𝒩 → 𝒜 → ℛ/J → 0 is exact",
        2,
        any,
        |ring| claims::complex_exact(&ring, ComplexName::Seq43)
    );
}

/// The oracle is run only where its linear algebra stays small.
fn oracle_feasible(module: Resolved) -> impl Fn(usize, u64) -> bool {
    move |f, _| match module {
        Resolved::A | Resolved::N => f <= 5,
        Resolved::RJ => f <= 4,
    }
}

fn register_resolutions(reg: &mut Registry) {
    let s = Suite::Resolutions;
    ring_check!(reg, s, "perfect-A", "A = R/I is perfect: pd A = codim I = C(f-2,2)", 4, any, |ring| {
        claims::perfection(&ring, Resolved::A)
    });
    ring_check!(reg, s, "perfect-N", "N is perfect: pd N = codim I = C(f-2,2)", 4, any, |ring| {
        claims::perfection(&ring, Resolved::N)
    });
    ring_check!(reg, s, "perfect-RJ", "ℛ/J is perfect: pd = codim J = C(f-2,2) + 2", 3, any, |ring| {
        claims::perfection(&ring, Resolved::RJ)
    });
    for (name, module) in [("oracle-A", Resolved::A), ("oracle-N", Resolved::N), ("oracle-RJ", Resolved::RJ)] {
        let min_f = if module == Resolved::RJ { 3 } else { 4 };
        ring_check!(
            reg,
            s,
            name,
            "Betti numbers agree with the Koszul-homology count",
            min_f,
            oracle_feasible(module),
            |ring| claims::oracle_agreement(&ring, module)
        );
    }
    ring_check!(
        reg,
        s,
        "mapping-cone",
        "the iterated mapping cone of the resolutions of A and N predicts the bigraded Betti numbers of ℛ/J",
        4,
        any,
        |ring| claims::mapping_cone(&ring)
    );
}

fn register_gorenstein(reg: &mut Registry) {
    let s = Suite::Gorenstein;
    ring_check!(reg, s, "RJ", "ℛ/J is Gorenstein: last Betti number 1, symmetric table", 4, any, |ring| {
        claims::gorenstein(&ring, Resolved::RJ)
    });
    ring_check!(reg, s, "A", "R/I is Gorenstein: last Betti number 1, symmetric table", 4, any, |ring| {
        claims::gorenstein(&ring, Resolved::A)
    });
    ring_check!(reg, s, "N", "N is self-dual: its Betti table is a palindrome", 4, any, |ring| {
        claims::gorenstein(&ring, Resolved::N)
    });
}

fn register_localization(reg: &mut Registry) {
    let s = Suite::Localization;
    ring_check!(reg, s, "S2-in-J", "the elements of S2 lie in J", 3, any, |ring| claims::s2_in_j(&ring));
    ring_check!(reg, s, "J-over-S2", "x_(1,2)^2 · g ∈ (S2) for every generator g of J", 3, any, |ring| {
        claims::j_in_s2_after_inverting(&ring)
    });
    ring_check!(
        reg,
        s,
        "J-over-two-entries",
        "x_(1,2)^N · g ∈ I + ((tX)_1, (tX)_2) with N <= 4 for every generator g of J",
        3,
        any,
        |ring| claims::j_in_two_entries_after_inverting(&ring, 4)
    );
    ring_check!(reg, s, "regular-I", "x_(1,2), x_(1,3) is a regular sequence on R/I", 3, any, |ring| {
        claims::regular_sequence(&ring, IdealKind::I)
    });
    ring_check!(reg, s, "regular-J", "x_(1,2), x_(1,3) is a regular sequence on ℛ/J", 4, any, |ring| {
        claims::regular_sequence(&ring, IdealKind::J)
    });
}

fn register_anomaly(reg: &mut Registry) {
    if !reg.grid.f.contains(&5) {
        return;
    }
    reg.checks.push(Check {
        id: format!("{}/witness/f=5", Suite::CharAnomaly),
        suite: Suite::CharAnomaly,
        claim: "at f = 5 the column Pf_1234·e_5* is zero in N but outside im d1 over F_2, inside it over Q; β1(N) differs, pd(N) does not",
        f: Some(5),
        characteristic: None,
        run: Box::new(|_| claims::char2_anomaly()),
    });
}

fn register(suite: Suite, grid: &Grid, options: &RunOptions) -> Vec<Check> {
    let mut reg = Registry { grid, options, checks: Vec::new() };
    for s in suite.members() {
        match s {
            Suite::ExteriorIdentities => register_exterior(&mut reg),
            Suite::ComplexClosure => register_closure(&mut reg),
            Suite::Grades => register_grades(&mut reg),
            Suite::Exactness => register_exactness(&mut reg),
            Suite::Resolutions => register_resolutions(&mut reg),
            Suite::Gorenstein => register_gorenstein(&mut reg),
            Suite::Localization => register_localization(&mut reg),
            Suite::CharAnomaly => register_anomaly(&mut reg),
            Suite::All => unreachable!("expanded by members"),
        }
    }
    reg.checks.sort_by(|a, b| a.id.cmp(&b.id));
    reg.checks
}

/// Identifiers of the checks a run would execute.
pub fn planned_checks(suite: Suite, grid: &Grid) -> Vec<String> {
    register(suite, grid, &RunOptions::default()).into_iter().map(|c| c.id).collect()
}

fn execute(check: &Check, seed: u64, deadline: Option<Instant>, timings: bool) -> CheckResult {
    let start = Instant::now();
    let (verdict, detail) = if deadline.is_some_and(|d| start >= d) {
        (Verdict::Skipped, "budget exhausted before start".to_string())
    } else {
        let _scope = cancel::install(deadline, None);
        match (check.run)(seed) {
            Ok(o) if o.passed => (Verdict::Pass, o.detail),
            Ok(o) => (Verdict::Fail, o.detail),
            Err(Error::Cancelled) => (Verdict::Skipped, "budget exhausted".to_string()),
            Err(e) => (Verdict::Fail, format!("error: {e}")),
        }
    };
    CheckResult {
        id: check.id.clone(),
        suite: check.suite,
        claim: check.claim.to_string(),
        f: check.f,
        characteristic: check.characteristic,
        verdict,
        detail,
        millis: timings.then(|| start.elapsed().as_millis() as u64),
    }
}

/// Runs every check of `suite` over `grid`.
pub fn run_suite(suite: Suite, grid: &Grid, options: &RunOptions) -> SuiteReport {
    let checks = register(suite, grid, options);
    let deadline = options.budget.map(|b| Instant::now() + b);
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::with_capacity(checks.len()));
    let workers = options.threads.clamp(1, checks.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(check) = checks.get(k) else {
                    break;
                };
                let r = execute(check, grid.seed, deadline, options.timings);
                results.lock().expect("no worker panics while holding the lock").push(r);
            });
        }
    });
    let results = results.into_inner().expect("workers finished");
    SuiteReport::assemble(suite, grid.clone(), results)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> RunOptions {
        RunOptions { trials_prime: 5, trials_rational: 2, ..RunOptions::default() }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("nonsense".parse::<Suite>().is_err());
    }

    #[test]
    fn empty_grid_gives_empty_passing_report() {
        let r = run_suite(Suite::All, &Grid::new(vec![], vec![], 0), &quick());
        assert!(r.checks.is_empty());
        assert_eq!(r.status, Status::Pass);
        let json = export_report(&r, ReportFormat::Json);
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn zero_budget_skips_everything() {
        let opts = RunOptions { budget: Some(Duration::ZERO), ..quick() };
        let r = run_suite(Suite::Grades, &Grid::new(vec![4], vec![32003], 0), &opts);
        assert!(!r.checks.is_empty());
        assert!(r.checks.iter().all(|c| c.verdict == Verdict::Skipped));
        assert_eq!(r.status, Status::Incomplete);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn grades_at_four_pass_and_text_carries_claims() {
        let r = run_suite(Suite::Grades, &Grid::new(vec![4], vec![32003], 0), &quick());
        assert!(r.passed, "{r:?}");
        let text = export_report(&r, ReportFormat::Text);
        assert!(text.contains("[codim J = C(f-2,2) + 2 (and 1 at f = 2)]"), "{text}");
    }

    #[test]
    fn failures_outrank_skips() {
        let mk = |v| CheckResult {
            id: format!("{v:?}"),
            suite: Suite::Grades,
            claim: String::new(),
            f: None,
            characteristic: None,
            verdict: v,
            detail: String::new(),
            millis: None,
        };
        let r = SuiteReport::assemble(Suite::Grades, Grid::new(vec![], vec![], 0), vec![mk(Verdict::Skipped), mk(Verdict::Fail)]);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.exit_code(), 1);
    }
}
