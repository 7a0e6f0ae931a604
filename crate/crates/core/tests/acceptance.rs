//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use pfaffkit::constructions::{map_matrix, ComplexName, IdealKind, MapName};
use pfaffkit::homology::free_resolution;
use pfaffkit::oracle::KoszulOracle;
use pfaffkit::ring::{Field, PolyRing, PrimeField, Rationals};
use pfaffkit::verify::claims::{self, Resolved};
use pfaffkit::verify::{identities, Outcome};
use pfaffkit::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const P: u32 = 32003;
const SEED: u64 = 0x5eed;

/// Runs `$body` with `$r` bound to the ring over characteristic `$c` with matrix size `$f`.
macro_rules! on {
    ($c:expr, $f:expr, |$r:ident| $body:expr) => {{
        let (c, f): (u32, usize) = ($c, $f);
        if c == 0 {
            let $r = PolyRing::new(Rationals, f)?;
            $body
        } else {
            let $r = PolyRing::new(PrimeField::new(c)?, f)?;
            $body
        }
    }};
}

/// Collected sub-checks of one criterion.
#[derive(Default)]
struct Checks(Vec<(String, Outcome)>);

impl Checks {
    fn add(&mut self, label: impl Into<String>, outcome: Outcome) {
        self.0.push((label.into(), outcome));
    }

    fn expect(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.add(label, Outcome::new(ok, detail));
    }
}

fn field_name(c: u32) -> String {
    if c == 0 {
        "Q".into()
    } else {
        format!("F_{c}")
    }
}

fn grades() -> Result<Checks> {
    let mut out = Checks::default();
    for c in [0, P] {
        for f in [4, 5] {
            let at = format!("f={f} {}", field_name(c));
            on!(c, f, |r| {
                out.add(format!("codim I_lambda {at}"), claims::grades_of_i_lambda(&r)?);
                out.add(format!("codim I {at}"), claims::grade_of_i(&r)?);
                out.add(format!("codim J {at}"), claims::grade_of_j(&r)?);
            });
        }
        for f in [2, 3] {
            on!(c, f, |r| out.add(format!("codim J f={f} {}", field_name(c)), claims::grade_of_j(&r)?));
        }
    }
    Ok(out)
}

fn resolve_rj<F: Field>(r: &PolyRing<F>, out: &mut Checks, at: &str, expected: Option<&[usize]>, len: usize) -> Result<()> {
    let res = Resolved::RJ.resolve(r)?;
    let totals = res.betti().totals();
    let shape = res.length() == len && totals.last() == Some(&1) && expected.is_none_or(|e| totals == e);
    out.expect(format!("shape {at}"), shape, format!("Betti {totals:?}"));
    if expected.is_some() {
        let pres = Resolved::RJ.presentation(r)?;
        let max_deg = res.betti().entries().iter().map(|e| e.j).max().unwrap_or(0) + 1;
        let oracle = KoszulOracle::new(r, &Resolved::RJ.variables(r), &pres)?.betti_table(len + 1, max_deg)?;
        out.expect(format!("oracle {at}"), oracle == res.betti(), format!("oracle {:?}", oracle.totals()));
    }
    Ok(())
}

fn gorenstein_witness() -> Result<Checks> {
    let mut out = Checks::default();
    for c in [0, P] {
        on!(c, 4, |r| resolve_rj(&r, &mut out, &format!("f=4 {}", field_name(c)), Some(&[1, 5, 5, 1]), 3)?);
    }
    on!(P, 5, |r| resolve_rj(&r, &mut out, "f=5 F_32003", None, 5)?);
    Ok(out)
}

fn perfection_of_n() -> Result<Checks> {
    let mut out = Checks::default();
    for f in [4, 5] {
        let mut lengths = Vec::new();
        for c in [0, 2, P] {
            on!(c, f, |r| {
                let res = Resolved::N.resolve(&r)?;
                lengths.push(res.length());
                out.add(format!("perfect f={f} {}", field_name(c)), claims::perfection(&r, Resolved::N)?);
            });
        }
        let equal = lengths.windows(2).all(|w| w[0] == w[1]);
        out.expect(format!("equal lengths f={f}"), equal, format!("{lengths:?}"));
    }
    Ok(out)
}

fn exactness() -> Result<Checks> {
    let mut out = Checks::default();
    for c in [0, 2] {
        for f in [4, 5] {
            for name in [ComplexName::Seq32, ComplexName::Seq43] {
                on!(c, f, |r| out.add(format!("{name} f={f} {}", field_name(c)), claims::complex_exact(&r, name)?));
            }
        }
        for f in [2, 3] {
            on!(c, f, |r| {
                out.add(format!("seq43 f={f} {}", field_name(c)), claims::complex_exact(&r, ComplexName::Seq43)?)
            });
        }
    }
    Ok(out)
}

fn identity_suite() -> Result<Checks> {
    let mut out = Checks::default();
    for (c, trials) in [(P, 100), (0, 20)] {
        for f in [4, 5, 6] {
            let at = format!("f={f} {}", field_name(c));
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (f as u64) ^ u64::from(c));
            on!(c, f, |r| {
                out.add(format!("contraction derivation {at}"), identities::contraction_derivation(&r, &mut rng, trials)?);
                out.add(format!("divided power contraction {at}"), identities::divided_power_contraction(&r, &mut rng, trials)?);
                out.add(format!("three covector expansion {at}"), identities::three_covector_expansion(&r, &mut rng, trials)?);
                out.add(format!("divided power derivation {at}"), identities::divided_power_derivation(&r, &mut rng, trials)?);
                out.add(format!("pairing compatibility {at}"), identities::pairing_compatibility(&r, &mut rng, trials)?);
                out.add(format!("half identity {at}"), identities::half_identity(&r, &mut rng, trials)?);
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    out.add("Pf^2 = det over Q", identities::pfaffian_squared(&Rationals, &mut rng, 20)?);
    out.add("Pf^2 = det over F_32003", identities::pfaffian_squared(&PrimeField::new(P)?, &mut rng, 20)?);
    Ok(out)
}

fn closure() -> Result<Checks> {
    let mut out = Checks::default();
    for f in [4, 5] {
        on!(0, f, |r| {
            let d = map_matrix(&r, MapName::BigD1)?.compose(&r, &map_matrix(&r, MapName::BigD2)?)?;
            out.expect(format!("D1 D2 = 0 f={f}"), d.is_zero(), "composite checked entrywise");
        });
    }
    for f in [3, 4, 5] {
        for name in [ComplexName::PreComplex, ComplexName::Seq32, ComplexName::Seq43] {
            on!(0, f, |r| out.add(format!("{name} f={f}"), claims::complex_closes(&r, name)?));
        }
    }
    Ok(out)
}

fn localization() -> Result<Checks> {
    let mut out = Checks::default();
    for f in [4, 5] {
        on!(0, f, |r| {
            out.add(format!("S2 in J f={f}"), claims::s2_in_j(&r)?);
            out.add(format!("J in S2 after x_(1,2)^2 f={f}"), claims::j_in_s2_after_inverting(&r)?);
            out.add(format!("I regular f={f}"), claims::regular_sequence(&r, IdealKind::I)?);
            out.add(format!("J regular f={f}"), claims::regular_sequence(&r, IdealKind::J)?);
        });
    }
    on!(0, 4, |r| out.add("J in two entries after x_(1,2)^4 f=4", claims::j_in_two_entries_after_inverting(&r, 4)?));
    Ok(out)
}

fn anomaly() -> Result<Checks> {
    let mut out = Checks::default();
    out.add("witness f=5", claims::char2_anomaly()?);
    Ok(out)
}

fn cone() -> Result<Checks> {
    let mut out = Checks::default();
    on!(0, 4, |r| out.add("bigraded cone f=4 Q", claims::mapping_cone(&r)?));
    Ok(out)
}

fn self_duality() -> Result<Checks> {
    let mut out = Checks::default();
    for f in [4, 5] {
        on!(0, f, |r| {
            let table = free_resolution(&r, &Resolved::N.presentation(&r)?, 8)?.betti();
            let palindrome = table.palindrome();
            out.expect(
                format!("N palindromic f={f} Q"),
                palindrome.is_some_and(|(c, _)| c == claims::codim_i(f)),
                format!("Betti {:?}, {palindrome:?}", table.totals()),
            );
        });
    }
    Ok(out)
}

type Criterion = (&'static str, fn() -> Result<Checks>);

const CRITERIA: &[Criterion] = &[
    ("grades of I, I_lambda and J", grades),
    ("R/J is Gorenstein with Betti numbers 1,5,5,1 at f=4", gorenstein_witness),
    ("N is perfect of the same length in every characteristic", perfection_of_n),
    ("seq32 and seq43 are exact", exactness),
    ("exterior algebra identities and Pf^2 = det", identity_suite),
    ("relation complex and presented complexes close", closure),
    ("localization at x_(1,2) and regular sequences", localization),
    ("characteristic two anomaly", anomaly),
    ("mapping cone gives the Betti table of R/J", cone),
    ("Betti table of N is palindromic", self_duality),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (name, run) in CRITERIA {
        let start = Instant::now();
        let line = match run() {
            Ok(Checks(checks)) => {
                let bad: Vec<String> = checks
                    .iter()
                    .filter(|(_, o)| !o.passed)
                    .map(|(label, o)| format!("{label}: {}", o.detail))
                    .collect();
                if bad.is_empty() {
                    format!("PASS  {name}  ({} checks, {:.1}s)", checks.len(), start.elapsed().as_secs_f64())
                } else {
                    failed += 1;
                    format!("FAIL  {name}  [{}]", bad.join("; "))
                }
            }
            Err(e) => {
                failed += 1;
                format!("FAIL  {name}  error: {e}")
            }
        };
        println!("{line}");
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
