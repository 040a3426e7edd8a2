use std::fs;
use std::path::Path;
use std::sync::Arc;

use lefschetz::chain::ChainSystem;
use lefschetz::complex::{CellSet, Complex, Subdivision};
use lefschetz::corpus::{run_suite, worked_examples};
use lefschetz::engine::{FreenessCheck, SelfMapSystem, Verdict};
use lefschetz::io::{build_map, parse_cellset, parse_complex, parse_map};
use lefschetz::properties::run_properties;
use lefschetz::torus::{
    connected_sum_lambda, torus_lefschetz, torus_nielsen, triad_bound_via_lambda, triad_lower_bound, SignCase,
    TorusMapMatrix,
};
use lefschetz::unbounded::{ClassTag, CompactifiedSystem, SpaceClass};

use crate::error::CliError;
use crate::report::Report;
use crate::{Cli, Command};

type Outcome = Result<(), CliError>;

/// Runs one command. The report holds whatever was computed before a failure.
pub fn run(cli: &Cli) -> (Report, Outcome) {
    let mut out = Report::default();
    let mut chains: Option<ChainSystem> = None;
    let outcome = dispatch(&cli.command, &mut out, &mut chains);
    if cli.dump_chain {
        if let Some(c) = &chains {
            dump(&mut out, c);
        }
    }
    (out, outcome)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<Arc<Complex>, CliError> {
    Ok(Arc::new(parse_complex(&read(path)?)?))
}

fn load_set(x: &Arc<Complex>, path: &Path) -> Result<CellSet, CliError> {
    Ok(parse_cellset(&read(path)?, x)?)
}

fn load_system(x: &Arc<Complex>, path: &Path, chains: &mut Option<ChainSystem>) -> Result<SelfMapSystem, CliError> {
    let map = build_map(x, parse_map(&read(path)?)?)?;
    let sys = SelfMapSystem::new(map)?;
    *chains = Some(sys.chains().clone());
    Ok(sys)
}

fn boundary_only(x: &Arc<Complex>, chains: &mut Option<ChainSystem>) -> Result<(), CliError> {
    *chains = Some(ChainSystem::boundary_system(x)?);
    Ok(())
}

fn freeness(asserted: bool) -> FreenessCheck {
    if asserted {
        FreenessCheck::CallerAsserted
    } else {
        FreenessCheck::Combinatorial
    }
}

fn counts(out: &mut Report, x: &Complex) {
    out.push("vertices", x.num_vertices());
    out.push("dim", x.dim());
    for p in 0..=x.dim() {
        out.push(format!("cells.{p}"), x.count(p));
    }
}

fn dispatch(cmd: &Command, out: &mut Report, chains: &mut Option<ChainSystem>) -> Outcome {
    match cmd {
        Command::Check { complex, map } => {
            let x = load_complex(complex)?;
            out.push("complex", "ok");
            counts(out, &x);
            boundary_only(&x, chains)?;
            if let Some(map) = map {
                let sys = load_system(&x, map, chains)?;
                out.push("map", "simplicial");
                out.push("fixed_simplices", sys.fixed_cells().count());
            }
        }
        Command::Euler { complex } => {
            let x = load_complex(complex)?;
            counts(out, &x);
            out.push("euler", x.euler_characteristic());
            boundary_only(&x, chains)?;
        }
        Command::EulerComb { complex, set } => {
            let x = load_complex(complex)?;
            let a = load_set(&x, set)?;
            out.push("cells", a.len());
            out.push("euler_comb", a.euler_comb());
        }
        Command::Homology { complex } => {
            let x = load_complex(complex)?;
            boundary_only(&x, chains)?;
            let betti = chains.as_ref().expect("just built").betti();
            for (p, b) in betti.iter().enumerate() {
                out.push(format!("betti.{p}"), b);
            }
            out.push("euler", x.euler_characteristic());
        }
        Command::Lefschetz { complex, map } => {
            let x = load_complex(complex)?;
            let sys = load_system(&x, map, chains)?;
            out.push("lefschetz", sys.lefschetz());
            for (p, t) in sys.chains().homology_traces()?.iter().enumerate() {
                out.push(format!("homology_trace.{p}"), t);
            }
        }
        Command::LefschetzComb { complex, map, set, no_enforce } => {
            let x = load_complex(complex)?;
            let sys = load_system(&x, map, chains)?;
            let a = load_set(&x, set)?;
            let value = sys.lambda_comb(&a, !no_enforce)?;
            out.push("lambda_comb", value);
            out.push("enforced", !no_enforce);
            if *no_enforce {
                out.push("compatible", sys.check_compatibility(&a).passes());
            }
        }
        Command::Relative { complex, map, sub } => {
            let x = load_complex(complex)?;
            let sys = load_system(&x, map, chains)?;
            let c = load_set(&x, sub)?;
            out.push("relative_lefschetz", sys.relative_lefschetz(&c)?);
        }
        Command::QuotientLefschetz { complex, map, sub } => {
            let x = load_complex(complex)?;
            let sys = load_system(&x, map, chains)?;
            let a = load_set(&x, sub)?;
            let quotient = sys.quotient_lambda(&a)?;
            let restricted = sys.restrict(&a)?.lefschetz();
            out.push("quotient_lambda", quotient);
            out.push("restricted_lefschetz", restricted);
            out.push("lefschetz", sys.lefschetz());
            let holds = sys.lefschetz() == restricted + quotient - 1;
            out.push("cofibration_identity", if holds { "holds" } else { "FAILS" });
            if !holds {
                return Err(CliError::Failure("cofibration identity fails".into()));
            }
        }
        Command::Index { complex, map, open, asserted_free } => {
            let x = load_complex(complex)?;
            let sys = load_system(&x, map, chains)?;
            let u = load_set(&x, open)?;
            out.push("index", sys.index_via_lambda(&u, freeness(*asserted_free))?);
            out.push("freeness", if *asserted_free { "caller-asserted" } else { "combinatorial" });
        }
        Command::Certify { complex, map, set } => {
            let x = load_complex(complex)?;
            let sys = load_system(&x, map, chains)?;
            let a = load_set(&x, set)?;
            let cert = sys.certify_fixed_point(&a)?;
            out.extend("", cert.key_values());
            if cert.verdict == Verdict::PreconditionViolated {
                return Err(CliError::Precondition(cert.notes.join("; ")));
            }
        }
        Command::CertifyUnbounded {
            complex,
            map,
            corona,
            class,
            chi,
            assume_conjecture,
            asserted_free,
        } => {
            let tag = ClassTag::parse(class).ok_or_else(|| {
                CliError::Parse(format!("unknown class `{class}`; expected graph, surface, surface-boundary or wedge"))
            })?;
            let chi_list = chi.as_deref().map(parse_chi).transpose()?;
            let space_class = SpaceClass::new(tag, chi_list)?;
            let x = load_complex(complex)?;
            let sys = load_system(&x, map, chains)?;
            let c = load_set(&x, corona)?;
            let cs = CompactifiedSystem::new(sys, c)?.with_freeness(freeness(*asserted_free));
            out.push("class", tag);
            out.push("lambda_comb_unbounded", cs.lambda_comb_unbounded());
            out.push("lambda_corona", cs.lambda_corona());
            if let Ok(index) = cs.index_at_infinity() {
                out.push("index_at_infinity", index);
            }
            let cert = cs.certify_unbounded(&space_class, *assume_conjecture);
            out.extend("", cert.key_values());
            let ext = cs.certify_extension_fixed_point();
            out.push("corona.verdict", ext.verdict);
            out.push("corona.witness", ext.witness.as_deref().unwrap_or("none"));
            out.extend("corona.", ext.notes.iter().enumerate().map(|(i, n)| (format!("note.{i}"), n.clone())).collect());
            if cert.verdict == Verdict::PreconditionViolated {
                return Err(CliError::Precondition(cert.notes.join("; ")));
            }
        }
        Command::TorusLefschetz { p, matrix } => {
            let m = TorusMapMatrix::parse(*p, matrix)?;
            out.push("lefschetz", torus_lefschetz(&m)?);
            out.push("nielsen", torus_nielsen(&m)?);
        }
        Command::NielsenBound { p, matrix1, matrix2, sphere_lambda } => {
            let m1 = TorusMapMatrix::parse(*p, matrix1)?;
            let m2 = TorusMapMatrix::parse(*p, matrix2.as_deref().unwrap_or(matrix1))?;
            let bound = triad_lower_bound(&m1, &m2)?;
            out.push("triad_lower_bound", bound.value);
            if let Some(w) = &bound.warning {
                out.push("warning", w);
            }
            match SignCase::of(&m1, &m2)? {
                Some(case) => {
                    let total = connected_sum_lambda(&m1, &m2, *sphere_lambda)?;
                    let via = triad_bound_via_lambda(total, *sphere_lambda, case);
                    out.push("sign_case", if case == SignCase::PlusPlus { "plus-plus" } else { "minus-minus" });
                    out.push("lefschetz_connected_sum", total);
                    out.push("via_lambda", via);
                    out.push("routes_agree", via == bound.value);
                    if via != bound.value {
                        return Err(CliError::Failure("the two routes to the bound disagree".into()));
                    }
                }
                None => out.push("sign_case", "mixed"),
            }
        }
        Command::Subdivide { complex, rounds, set } => {
            let mut x = load_complex(complex)?;
            let mut a = set.as_deref().map(|p| load_set(&x, p)).transpose()?;
            let before = a.as_ref().map(CellSet::euler_comb);
            let euler_before = x.euler_characteristic();
            for _ in 0..*rounds {
                let sd = Subdivision::new(&x);
                a = a.map(|s| sd.subdivide_cellset(&s));
                x = Arc::clone(sd.subdivided());
            }
            out.push("rounds", rounds);
            counts(out, &x);
            out.push("euler", x.euler_characteristic());
            let mut invariant = euler_before == x.euler_characteristic();
            if let (Some(b), Some(a)) = (before, &a) {
                out.push("euler_comb.before", b);
                out.push("euler_comb.after", a.euler_comb());
                invariant &= b == a.euler_comb();
            }
            if !invariant {
                return Err(CliError::Failure("Euler characteristic changed under subdivision".into()));
            }
        }
        Command::PaperSuite => {
            let rows = run_suite(&worked_examples()?);
            let passed = rows.iter().filter(|r| r.passed()).count();
            for r in &rows {
                let computed = match &r.computed {
                    Ok(v) => v.to_string(),
                    Err(e) => format!("error({e})"),
                };
                out.push(
                    format!("{}.{}", r.fixture, r.quantity),
                    format!(
                        "expected {} computed {} {} {}",
                        r.expected,
                        computed,
                        r.origin,
                        if r.passed() { "PASS" } else { "FAIL" }
                    ),
                );
            }
            out.push("rows", rows.len());
            out.push("passed", passed);
            let ok = passed == rows.len();
            out.push("suite", if ok { "PASS" } else { "FAIL" });
            if !ok {
                return Err(CliError::Failure(format!("{} of {} rows failed", rows.len() - passed, rows.len())));
            }
        }
        Command::Proptest { seed, cases } => {
            let reports = run_properties(*seed, *cases);
            out.push("seed", seed);
            out.push("cases", cases);
            for r in &reports {
                let status = match &r.counterexample {
                    None => "PASS".to_string(),
                    Some(c) => format!("FAIL {c}"),
                };
                out.push(format!("property.{}", r.name), status);
            }
            let ok = reports.iter().all(|r| r.passed());
            out.push("proptest", if ok { "PASS" } else { "FAIL" });
            if !ok {
                return Err(CliError::Failure("a property failed".into()));
            }
        }
    }
    Ok(())
}

fn parse_chi(raw: &str) -> Result<Vec<i64>, CliError> {
    raw.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Parse(format!("bad chi entry `{t}`"))))
        .collect()
}

fn dump(out: &mut Report, chains: &ChainSystem) {
    let x = chains.complex();
    let text = |m: &lefschetz::linalg::IntMatrix| {
        let rows: Vec<String> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        format!("{}x{}: {}", m.rows(), m.cols(), rows.join("; "))
    };
    for p in 1..=x.dim() {
        out.push(format!("chain.boundary.{p}"), text(chains.boundary(p)));
    }
    for p in 0..=x.dim() {
        if let Some(m) = chains.chain_map(p) {
            out.push(format!("chain.map.{p}"), text(m));
        }
    }
}
