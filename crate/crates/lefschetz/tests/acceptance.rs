//! The nine acceptance criteria, one PASS/FAIL line each. All comparisons are exact integers.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{all_cellsets, count_euler, det_identity_minus, fixed_cell_trace};
use lefschetz::complex::{CellSet, Complex, Subdivision};
use lefschetz::corpus::{
    all_fixtures, compactification_pairs, constant_map_approximations, corpus_complexes, figure_eight_at_infinity,
    figure_eight_fixture, paired_triangulations, run_suite, worked_examples, FigureEightMap, Fixture, Pairing,
    Quantity,
};
use lefschetz::engine::{EngineError, SelfMapSystem, Verdict};
use lefschetz::random::Generator;
use lefschetz::torus::{
    connected_sum_lambda, triad_bound_via_lambda, triad_lower_bound, SignCase, TorusMapMatrix,
};
use lefschetz::unbounded::{ClassTag, SpaceClass};

type Outcome = Result<String, String>;

macro_rules! ensure_eq {
    ($left:expr, $right:expr, $($ctx:tt)+) => {{
        let (l, r) = ($left, $right);
        if l != r {
            return Err(format!("{}: {:?} != {:?}", format!($($ctx)+), l, r));
        }
    }};
}

macro_rules! ensure {
    ($cond:expr, $($ctx:tt)+) => {
        if !$cond {
            return Err(format!($($ctx)+));
        }
    };
}

fn fixtures() -> Vec<Fixture> {
    all_fixtures().expect("corpus builds")
}

/// Subsets of a fixture with their complements and the full complex.
fn fixture_sets(fx: &Fixture) -> Vec<(String, CellSet)> {
    let mut out = vec![("X".to_string(), CellSet::full(fx.complex()))];
    for (name, s) in &fx.subsets {
        out.push((name.clone(), s.clone()));
        out.push((format!("{name}^c"), s.complement()));
    }
    out
}

fn worked_example_values() -> Outcome {
    let rows = run_suite(&worked_examples().map_err(|e| e.to_string())?);
    let stated: &[(&str, &str, i64)] = &[
        ("interval-identity", "lefschetz", 1),
        ("interval-identity", "lambda_comb[open-edge]", -1),
        ("circle-rotation", "lefschetz", 0),
        ("circle-reflection", "lefschetz", 2),
        ("wedge-loop-swap", "lefschetz", 1),
        ("annulus-slits", "lambda_comb[X1]", -1),
        ("annulus-slits", "lambda_comb[X2]", -2),
        ("annulus-slits", "lambda_comb[X3]", -3),
        ("annulus-slits", "lambda_comb[X4]", -4),
        ("cone-cylinder", "lefschetz", 3),
        ("cone-cylinder", "lefschetz_restricted[D]", 2),
        ("torus-antipodal", "torus_lefschetz[-1 0; 0 -1]", 4),
        ("punctured-tori", "lambda_comb_unbounded[corona]", 6),
        ("square-boundary", "lambda_comb_unbounded[boundary]", 1),
        ("square-one-point", "index_at_infinity[infinity]", 2),
    ];
    for &(fixture, quantity, value) in stated {
        let row = rows
            .iter()
            .find(|r| r.fixture == fixture && r.quantity == quantity)
            .ok_or_else(|| format!("missing row {fixture}.{quantity}"))?;
        ensure_eq!(row.computed.clone(), Ok(value), "{fixture}.{quantity}");
    }
    for r in &rows {
        ensure!(r.passed(), "{}.{} expected {} got {:?}", r.fixture, r.quantity, r.expected, r.computed);
    }
    // Cell-set values recomputed by counting fixed cells.
    let mut oracle_checked = 0;
    for fx in worked_examples().map_err(|e| e.to_string())? {
        for e in &fx.expected {
            let set = match &e.quantity {
                Quantity::LambdaComb(a) => fx.subset(a).map_err(|e| e.to_string())?.clone(),
                Quantity::Unbounded(c) => fx.subset(c).map_err(|e| e.to_string())?.complement(),
                _ => continue,
            };
            ensure_eq!(fixed_cell_trace(fx.system.map(), &set), e.value, "oracle {}.{}", fx.name, e.quantity);
            oracle_checked += 1;
        }
    }
    Ok(format!("{} rows, {} stated values, {oracle_checked} oracle rechecks", rows.len(), stated.len()))
}

fn hopf_trace_oracle() -> Outcome {
    let compare = |sys: &SelfMapSystem, label: &str| -> Result<(), String> {
        let homology = sys.chains().homology_lefschetz().map_err(|e| e.to_string())?;
        ensure_eq!(sys.lefschetz(), homology, "{label}: hopf vs homology");
        ensure_eq!(
            fixed_cell_trace(sys.map(), &CellSet::full(sys.complex())),
            homology,
            "{label}: fixed cells vs homology"
        );
        Ok(())
    };
    let mut checked = 0;
    for fx in fixtures() {
        compare(&fx.system, &fx.name)?;
        checked += 1;
    }
    let mut gen = Generator::new(2024);
    for (name, x) in corpus_complexes().map_err(|e| e.to_string())? {
        compare(&SelfMapSystem::identity(&x), &name)?;
        for k in 0..3 {
            let sys = SelfMapSystem::new(gen.self_map(&x)).map_err(|e| e.to_string())?;
            compare(&sys, &format!("{name} map {k}"))?;
        }
        checked += 4;
    }
    let before = checked;
    let mut random = 0;
    for case in 0..150 {
        let x = gen.complex(7);
        ensure!(x.num_vertices() <= 7, "case {case} has {} vertices", x.num_vertices());
        let sys = SelfMapSystem::new(gen.self_map(&x)).map_err(|e| e.to_string())?;
        compare(&sys, &format!("random case {case}"))?;
        random += 1;
    }
    ensure!(random >= 100, "only {random} random pairs");
    Ok(format!("{before} corpus systems, {random} random pairs"))
}

fn small_complexes() -> Vec<(String, Arc<Complex>)> {
    let mut out: Vec<(String, Arc<Complex>)> = corpus_complexes()
        .expect("corpus builds")
        .into_iter()
        .filter(|(_, x)| x.cell_count() <= 8)
        .collect();
    let extra: Vec<(&str, Vec<Vec<i64>>)> = vec![
        ("solid triangle", vec![vec![0, 1, 2]]),
        ("two points", vec![vec![0], vec![1]]),
        ("edge and point", vec![vec![0, 1], vec![2]]),
        ("path of two edges", vec![vec![0, 1], vec![1, 2]]),
    ];
    for (name, s) in extra {
        out.push((name.to_string(), Arc::new(Complex::from_maximal(s).expect("valid"))));
    }
    out
}

fn inclusion_exclusion() -> Outcome {
    let mut exhaustive = 0usize;
    let mut enforced = 0usize;
    let mut gen = Generator::new(77);
    for (name, x) in small_complexes() {
        ensure!(x.cell_count() <= 8, "{name} has {} cells", x.cell_count());
        let mut systems = vec![SelfMapSystem::identity(&x)];
        for _ in 0..2 {
            systems.push(SelfMapSystem::new(gen.self_map(&x)).map_err(|e| e.to_string())?);
        }
        let sets = all_cellsets(&x);
        for sys in &systems {
            for a in &sets {
                for b in &sets {
                    let u = a.union(b).map_err(|e| e.to_string())?;
                    let i = a.intersection(b).map_err(|e| e.to_string())?;
                    let l = |s: &CellSet| sys.lambda_comb(s, false).expect("same domain");
                    ensure_eq!(l(&u) + l(&i), l(a) + l(b), "{name}: lambda_comb on {:?} / {:?}", a.describe(), b.describe());
                    ensure_eq!(
                        u.euler_comb() + i.euler_comb(),
                        a.euler_comb() + b.euler_comb(),
                        "{name}: chi_c"
                    );
                    if let Ok((lhs, rhs)) = sys.lambda_comb_additive_check(a, b) {
                        ensure_eq!(lhs, rhs, "{name}: enforced additivity");
                        enforced += 1;
                    }
                    exhaustive += 1;
                }
            }
        }
    }
    let mut randomized = 0;
    let mut large: Vec<(String, SelfMapSystem)> = Vec::new();
    for (name, x) in corpus_complexes().map_err(|e| e.to_string())? {
        if x.cell_count() > 8 {
            large.push((format!("{name} identity"), SelfMapSystem::identity(&x)));
            let sys = SelfMapSystem::new(gen.self_map(&x)).map_err(|e| e.to_string())?;
            large.push((format!("{name} random map"), sys));
        }
    }
    large.extend(fixtures().into_iter().map(|f| (f.name, f.system)));
    while randomized < 600 {
        for (name, sys) in &large {
            let x = sys.complex();
            let (a, b) = (gen.cellset(x), gen.cellset(x));
            let u = a.union(&b).map_err(|e| e.to_string())?;
            let i = a.intersection(&b).map_err(|e| e.to_string())?;
            let l = |s: &CellSet| sys.lambda_comb(s, false).expect("same domain");
            ensure_eq!(l(&u) + l(&i), l(&a) + l(&b), "{name}: random pair");
            ensure_eq!(count_euler(&u) + count_euler(&i), a.euler_comb() + b.euler_comb(), "{name}: chi_c");
            randomized += 1;
        }
    }
    Ok(format!("{exhaustive} exhaustive pairs ({enforced} fully compatible), {randomized} randomized"))
}

/// Forward-invariant closure of one cell.
fn orbit_closure(sys: &SelfMapSystem, start: CellSet) -> CellSet {
    let mut current = start.closure();
    loop {
        let images = CellSet::from_cells(sys.complex(), current.iter().map(|c| sys.map().image_simplex(c)));
        let next = current.union(&images).expect("same complex");
        if next == current {
            return current;
        }
        current = next;
    }
}

fn cofibration_identity() -> Outcome {
    let mut pairs = 0;
    let (mut whole, mut point) = (false, false);
    let mut systems: Vec<(String, SelfMapSystem)> = fixtures().into_iter().map(|f| (f.name, f.system)).collect();
    for (name, x) in corpus_complexes().map_err(|e| e.to_string())? {
        systems.push((format!("{name} identity"), SelfMapSystem::identity(&x)));
    }
    for (name, sys) in &systems {
        let x = sys.complex();
        let mut candidates = vec![CellSet::full(x)];
        candidates.extend(x.cells().map(|c| orbit_closure(sys, CellSet::from_cells(x, [c]))));
        candidates.sort_by_key(|s| s.len());
        candidates.dedup();
        for a in candidates.iter().take(12) {
            let Ok(quotient) = sys.quotient_lambda(a) else { continue };
            let restricted = sys.restrict(a).map_err(|e| e.to_string())?;
            let restricted_homology = restricted.chains().homology_lefschetz().map_err(|e| e.to_string())?;
            ensure_eq!(restricted.lefschetz(), restricted_homology, "{name}: restricted hopf vs homology");
            ensure_eq!(
                quotient,
                1 + fixed_cell_trace(sys.map(), &a.complement()),
                "{name}: quotient oracle"
            );
            ensure_eq!(
                sys.lefschetz(),
                restricted_homology + quotient - 1,
                "{name}: cofibration on {:?}",
                a.describe()
            );
            whole |= a.len() == x.cell_count();
            point |= a.len() == 1;
            pairs += 1;
        }
    }
    ensure!(pairs >= 50, "only {pairs} pairs");
    ensure!(whole && point, "edge cases missing: whole {whole}, point {point}");
    Ok(format!("{pairs} (system, invariant subcomplex) pairs incl. A = X and A = point"))
}

fn topological_invariance() -> Outcome {
    let stated = [
        (Pairing::CircleReflection, 1),
        (Pairing::CircleRotation, 0),
        (Pairing::Annulus, -1),
        (Pairing::PuncturedTorus, -1),
    ];
    for (p, value) in stated {
        let (a, b) = paired_triangulations(p).map_err(|e| e.to_string())?;
        let q = Quantity::LambdaComb("A".into());
        let (va, vb) = (a.evaluate(&q).map_err(|e| e.to_string())?, b.evaluate(&q).map_err(|e| e.to_string())?);
        ensure_eq!(va, vb, "{p:?}: two triangulations");
        ensure_eq!(va, value, "{p:?}: value");
        ensure_eq!(fixed_cell_trace(b.system.map(), b.subset("A").map_err(|e| e.to_string())?), value, "{p:?} oracle");
    }
    for (name, a, b) in compactification_pairs().map_err(|e| e.to_string())? {
        ensure_eq!(a.lambda_comb_unbounded(), b.lambda_comb_unbounded(), "{name}: two compactifications");
    }
    let mut sets = 0;
    for fx in fixtures() {
        let once = Subdivision::new(fx.complex());
        let twice = Subdivision::new(once.subdivided());
        for (name, s) in fixture_sets(&fx) {
            let chi = s.euler_comb();
            let s1 = once.subdivide_cellset(&s);
            let s2 = twice.subdivide_cellset(&s1);
            ensure_eq!(count_euler(&s1), chi, "{}.{name}: one round", fx.name);
            ensure_eq!(count_euler(&s2), chi, "{}.{name}: two rounds", fx.name);
            sets += 1;
        }
    }
    Ok(format!("{} pairings agree, chi_c stable on {sets} cell sets over 2 rounds", stated.len()))
}

fn decomposition_identity() -> Outcome {
    let mut cases = 0;
    let mut check = |sys: &SelfMapSystem, a: &CellSet, label: &str| -> Result<(), String> {
        let d = a.decompose_triple();
        let parts = d.interior.union(&d.frontier).and_then(|u| u.union(&d.trace_part)).map_err(|e| e.to_string())?;
        ensure_eq!(parts, a.closure(), "{label}: parts cover the closure");
        ensure_eq!(
            d.interior.len() + d.frontier.len() + d.trace_part.len(),
            a.closure().len(),
            "{label}: parts are disjoint"
        );
        match sys.decomposition_identity(a) {
            Ok((lhs, rhs)) => {
                ensure_eq!(lhs, rhs, "{label}");
                let oracle: i64 = [&d.interior, &d.frontier, &d.trace_part]
                    .iter()
                    .map(|s| fixed_cell_trace(sys.map(), s))
                    .sum();
                ensure_eq!(fixed_cell_trace(sys.map(), &a.closure()), oracle, "{label} oracle");
                cases += 1;
            }
            Err(EngineError::Precondition(_)) => {}
            Err(e) => return Err(format!("{label}: {e}")),
        }
        Ok(())
    };
    for fx in fixtures() {
        for (name, s) in fixture_sets(&fx) {
            check(&fx.system, &s, &format!("{}.{name}", fx.name))?;
        }
    }
    for (name, x) in small_complexes() {
        let id = SelfMapSystem::identity(&x);
        for a in all_cellsets(&x) {
            check(&id, &a, &name)?;
        }
    }
    ensure!(cases > 0, "no compatible case");
    Ok(format!("{cases} compatible cases"))
}

fn certificates() -> Outcome {
    let annulus = worked_examples()
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|f| f.name == "annulus-slits")
        .ok_or("annulus fixture missing")?;
    for i in 1..=4 {
        let set = annulus.subset(&format!("X{i}")).map_err(|e| e.to_string())?;
        let cert = annulus.system.certify_fixed_point(set).map_err(|e| e.to_string())?;
        ensure_eq!(cert.verdict, Verdict::FixedPointInClosure, "annulus X{i}");
        let witness = cert.witness.clone().ok_or(format!("annulus X{i}: no witness"))?;
        let x = annulus.complex();
        let cell = x.cells().find(|&c| x.describe(c) == witness).ok_or("witness is not a cell")?;
        ensure!(annulus.system.map().fixes(cell), "annulus X{i}: witness {witness} is not fixed");
    }
    let eight = figure_eight_at_infinity(FigureEightMap::BothReflected).map_err(|e| e.to_string())?;
    let graph = SpaceClass::new(ClassTag::GraphConnected, None).map_err(|e| e.to_string())?;
    let cert = eight.certify_unbounded(&graph, false);
    ensure_eq!(cert.verdict, Verdict::FixedPointInClosure, "figure-eight reflected");
    ensure!(cert.witness.is_some(), "figure-eight reflected: no witness");
    let bounded = eight.system().certify_fixed_point(eight.open()).map_err(|e| e.to_string())?;
    ensure!(bounded.witness.is_some(), "figure-eight reflected, bounded certificate: no witness");

    let mut rotations = 0;
    for fx in fixtures().iter().filter(|f| f.name.contains("rotation")) {
        let cert = fx.system.certify_fixed_point(&CellSet::full(fx.complex())).map_err(|e| e.to_string())?;
        ensure_eq!(cert.verdict, Verdict::NoGuarantee, "{}", fx.name);
        rotations += 1;
    }
    ensure!(rotations >= 3, "only {rotations} rotation fixtures");

    let mut at_zero = 0;
    let mut total = 0;
    let classes = [
        SpaceClass::new(ClassTag::GraphConnected, None),
        SpaceClass::new(ClassTag::SurfaceNegChi, None),
        SpaceClass::new(ClassTag::SurfaceWithBoundary, None),
        SpaceClass::new(ClassTag::WedgeOfSurfaces, Some(vec![-1])),
    ];
    for fx in fixtures() {
        for (name, s) in fixture_sets(&fx) {
            let cert = fx.system.certify_fixed_point(&s).map_err(|e| e.to_string())?;
            if cert.lambda_value == 0 {
                ensure!(cert.verdict != Verdict::FixedPointInClosure, "{}.{name} fired at zero", fx.name);
                at_zero += 1;
            }
            if cert.verdict == Verdict::FixedPointInClosure && fx.system.witness_in_closure(&s).is_some() {
                ensure!(cert.witness.is_some(), "{}.{name}: witness exists but was not reported", fx.name);
            }
            total += 1;
            let Ok(cs) = fx.compactified(&name) else { continue };
            for class in classes.iter().flatten() {
                for conjecture in [false, true] {
                    let c = cs.certify_unbounded(class, conjecture);
                    if c.lambda_value == 0 {
                        ensure!(c.verdict != Verdict::FixedPointInClosure, "{}.{name} unbounded fired at zero", fx.name);
                        at_zero += 1;
                    }
                    total += 1;
                }
            }
            let ext = cs.certify_extension_fixed_point();
            if ext.lambda_value == 0 {
                ensure!(ext.verdict != Verdict::FixedPointInClosure, "{}.{name} extension fired at zero", fx.name);
            }
        }
    }
    let swap = figure_eight_fixture(FigureEightMap::LoopSwap).map_err(|e| e.to_string())?;
    let swap_cert = swap.compactified("basepoint").map_err(|e| e.to_string())?.certify_unbounded(&graph, false);
    ensure_eq!(swap_cert.verdict, Verdict::NoGuarantee, "figure-eight swap at zero");
    Ok(format!("witnesses found, {rotations} rotations silent, {at_zero} zero cases of {total} silent"))
}

fn nielsen_arithmetic() -> Outcome {
    let minus = vec![vec![-1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]];
    let m = TorusMapMatrix::new(3, minus.clone()).map_err(|e| e.to_string())?;
    let direct = triad_lower_bound(&m, &m).map_err(|e| e.to_string())?.value;
    ensure_eq!(direct, 13, "triad bound for -I3");
    let oracle = 2 * det_identity_minus(&minus).abs() - 3;
    ensure_eq!(direct, oracle, "cofactor oracle");
    let case = SignCase::of(&m, &m).map_err(|e| e.to_string())?;
    ensure_eq!(case, Some(SignCase::PlusPlus), "-I3 sign case");
    for sphere in [-2, 0, 2] {
        let total = connected_sum_lambda(&m, &m, sphere).map_err(|e| e.to_string())?;
        ensure_eq!(total, 8 + 8 - 2 + sphere, "connected sum lambda");
        ensure_eq!(triad_bound_via_lambda(total, sphere, SignCase::PlusPlus), direct, "plus-plus route");
    }
    let two = vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]];
    let d = TorusMapMatrix::new(3, two.clone()).map_err(|e| e.to_string())?;
    let direct2 = triad_lower_bound(&d, &d).map_err(|e| e.to_string())?.value;
    ensure_eq!(direct2, 2 * det_identity_minus(&two).abs() - 3, "cofactor oracle for 2I");
    ensure_eq!(SignCase::of(&d, &d).map_err(|e| e.to_string())?, Some(SignCase::MinusMinus), "2I sign case");
    for sphere in [-2, 0, 2] {
        let total = connected_sum_lambda(&d, &d, sphere).map_err(|e| e.to_string())?;
        ensure_eq!(triad_bound_via_lambda(total, sphere, SignCase::MinusMinus), direct2, "minus-minus route");
    }
    Ok(format!("direct 13, plus-plus 13, minus-minus instance {direct2} by both routes"))
}

fn ill_defined_without_enforcement() -> Outcome {
    let (collapse, identity, open) = constant_map_approximations().map_err(|e| e.to_string())?;
    ensure_eq!(collapse.lambda_comb(&open, false), Ok(0), "collapse approximation");
    ensure_eq!(identity.lambda_comb(&open, false), Ok(-1), "identity approximation");
    ensure!(
        matches!(collapse.lambda_comb(&open, true), Err(EngineError::Precondition(_))),
        "collapse approximation accepted under enforcement"
    );
    ensure!(
        matches!(identity.lambda_comb(&open, true), Err(EngineError::Precondition(_))),
        "identity approximation accepted under enforcement"
    );
    Ok("0 and -1 unenforced, both rejected when enforced".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("worked-example values", worked_example_values),
        ("Hopf trace equals homology trace", hopf_trace_oracle),
        ("inclusion-exclusion", inclusion_exclusion),
        ("cofibration identity", cofibration_identity),
        ("topological invariance", topological_invariance),
        ("decomposition identity", decomposition_identity),
        ("fixed-point certificates", certificates),
        ("Nielsen-bound arithmetic", nielsen_arithmetic),
        ("ill-defined without enforcement", ill_defined_without_enforcement),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed < Duration::from_secs(60) {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:?}, limit is one minute"))
            }
        });
        match result {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {:.2}s)", i + 1, elapsed.as_secs_f64()),
            Err(e) => {
                failures += 1;
                println!("criterion {} {name}: FAIL ({e})", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("acceptance: {failures} of 9 criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: all 9 criteria passed");
}
