//! Seeded randomized checks of the algebraic identities, shared by the CLI and the test suites.

use std::sync::Arc;

use crate::complex::{CellSet, Complex, Subdivision};
use crate::engine::{SelfMapSystem, Verdict};
use crate::random::Generator;

/// Outcome of one identity over many random cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub cases: usize,
    /// Description of the first failing case.
    pub counterexample: Option<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

type Check = fn(&mut Generator, &Arc<Complex>, &SelfMapSystem) -> Result<(), String>;

const CHECKS: [(&str, Check); 7] = [
    ("hopf_equals_homology", hopf_equals_homology),
    ("inclusion_exclusion", inclusion_exclusion),
    ("cofibration_identity", cofibration_identity),
    ("complement_additivity", complement_additivity),
    ("subdivision_preserves_euler_comb", subdivision_preserves_euler_comb),
    ("decomposition_identity", decomposition_identity),
    ("certificate_silent_at_zero", certificate_silent_at_zero),
];

/// Runs every identity on `cases` random (complex, map) pairs drawn from `seed`.
pub fn run_properties(seed: u64, cases: usize) -> Vec<PropertyReport> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(k, (name, check))| {
            let mut gen = Generator::new(seed.wrapping_add(k as u64));
            let counterexample = (0..cases).find_map(|case| {
                let x = gen.complex(7);
                let sys = SelfMapSystem::new(gen.self_map(&x)).expect("generated maps are simplicial");
                check(&mut gen, &x, &sys).err().map(|e| format!("case {case}: {e}"))
            });
            PropertyReport { name, cases, counterexample }
        })
        .collect()
}

fn describe(x: &Complex, sys: &SelfMapSystem) -> String {
    let maximal = crate::io::write_complex(x).replace('\n', ";");
    format!("complex [{maximal}] map {:?}", sys.map().images())
}

fn hopf_equals_homology(_: &mut Generator, x: &Arc<Complex>, sys: &SelfMapSystem) -> Result<(), String> {
    let homology = sys.chains().homology_lefschetz().map_err(|e| e.to_string())?;
    (sys.lefschetz() == homology)
        .then_some(())
        .ok_or_else(|| format!("{}: hopf {} vs homology {homology}", describe(x, sys), sys.lefschetz()))
}

fn inclusion_exclusion(gen: &mut Generator, x: &Arc<Complex>, sys: &SelfMapSystem) -> Result<(), String> {
    let (a, b) = (gen.cellset(x), gen.cellset(x));
    let lc = |s: &CellSet| sys.restricted_trace(s);
    let union = a.union(&b).expect("same complex");
    let inter = a.intersection(&b).expect("same complex");
    let (lhs, rhs) = (lc(&union), lc(&a) + lc(&b) - lc(&inter));
    let chi = (union.euler_comb(), a.euler_comb() + b.euler_comb() - inter.euler_comb());
    (lhs == rhs && chi.0 == chi.1)
        .then_some(())
        .ok_or_else(|| format!("{}: union {lhs} vs {rhs}, chi {chi:?}", describe(x, sys)))
}

/// Cells of the eventual image f^k(X), an invariant subcomplex that f maps onto itself.
fn stable_image(sys: &SelfMapSystem) -> CellSet {
    let mut current = CellSet::full(sys.complex());
    loop {
        let next = CellSet::from_cells(sys.complex(), current.iter().map(|c| sys.map().image_simplex(c)));
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Smallest forward-invariant subcomplex containing a random cell.
fn forward_orbit(gen: &mut Generator, sys: &SelfMapSystem) -> CellSet {
    let x = sys.complex();
    let start = x.cells().nth(gen.below(x.cell_count())).expect("nonempty complex");
    let mut current = CellSet::from_cells(x, [start]).closure();
    loop {
        let next = current
            .union(&CellSet::from_cells(x, current.iter().map(|c| sys.map().image_simplex(c))))
            .expect("same complex");
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Tries invariant subcomplexes of the map until one meets the quotient preconditions, then falls
/// back to the identity, for which every subcomplex does.
fn cofibration_identity(gen: &mut Generator, x: &Arc<Complex>, sys: &SelfMapSystem) -> Result<(), String> {
    let candidates = [stable_image(sys), forward_orbit(gen, sys), CellSet::full(x)];
    let fallback = SelfMapSystem::identity(x);
    let identity_set = gen.cellset(x).closure();
    let (sys, a, quotient) = candidates
        .into_iter()
        .find_map(|a| sys.quotient_lambda(&a).ok().map(|q| (sys, a, q)))
        .unwrap_or_else(|| {
            let q = fallback.quotient_lambda(&identity_set).expect("identity meets every precondition");
            (&fallback, identity_set, q)
        });
    let restricted = sys.restrict(&a).map_err(|e| e.to_string())?.lefschetz();
    (sys.lefschetz() == restricted + quotient - 1).then_some(()).ok_or_else(|| {
        format!(
            "{}: {} vs {restricted} + {quotient} - 1",
            describe(x, sys),
            sys.lefschetz()
        )
    })
}

fn complement_additivity(gen: &mut Generator, x: &Arc<Complex>, sys: &SelfMapSystem) -> Result<(), String> {
    let a = gen.cellset(x);
    let total = sys.restricted_trace(&a) + sys.restricted_trace(&a.complement());
    (total == sys.lefschetz())
        .then_some(())
        .ok_or_else(|| format!("{}: split {total} vs {}", describe(x, sys), sys.lefschetz()))
}

fn subdivision_preserves_euler_comb(gen: &mut Generator, x: &Arc<Complex>, sys: &SelfMapSystem) -> Result<(), String> {
    let a = gen.cellset(x);
    let sd = Subdivision::new(x).subdivide_cellset(&a);
    (sd.euler_comb() == a.euler_comb())
        .then_some(())
        .ok_or_else(|| format!("{}: chi_c {} became {}", describe(x, sys), a.euler_comb(), sd.euler_comb()))
}

/// Uses the identity so that every cell set is compatible.
fn decomposition_identity(gen: &mut Generator, x: &Arc<Complex>, _: &SelfMapSystem) -> Result<(), String> {
    let id = SelfMapSystem::identity(x);
    let a = gen.cellset(x);
    let (lhs, rhs) = id.decomposition_identity(&a).map_err(|e| e.to_string())?;
    (lhs == rhs)
        .then_some(())
        .ok_or_else(|| format!("{}: closure {lhs} vs parts {rhs}", describe(x, &id)))
}

fn certificate_silent_at_zero(gen: &mut Generator, x: &Arc<Complex>, sys: &SelfMapSystem) -> Result<(), String> {
    let a = if gen.below(2) == 0 { gen.cellset(x) } else { stable_image(sys) };
    let cert = sys.certify_fixed_point(&a).map_err(|e| e.to_string())?;
    let fired = cert.verdict == Verdict::FixedPointInClosure;
    if fired && (cert.lambda_value == 0 || cert.witness.is_none()) {
        return Err(format!("{}: fired with lambda {} witness {:?}", describe(x, sys), cert.lambda_value, cert.witness));
    }
    if cert.verdict == Verdict::NoGuarantee && cert.lambda_value != 0 {
        return Err(format!("{}: silent with lambda {}", describe(x, sys), cert.lambda_value));
    }
    Ok(())
}
