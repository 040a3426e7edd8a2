//! Combinatorial Lefschetz numbers of cell sets, their identities, and fixed-point certificates.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::chain::{ChainError, ChainSystem, VertexSelfMap};
use crate::complex::{sign, CellId, CellSet, Complex, ComplexError, Subdivision};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("precondition violated: {0}")]
    Precondition(Box<CompatibilityReport>),
    #[error("map does not carry {0} onto itself: {1} is not hit")]
    NotOnto(String, String),
    #[error("complement of the open set is not a subcomplex: face {face} of {cell} lies in the open set")]
    NotOpen { cell: String, face: String },
    #[error("fixed simplex {0} on the frontier; index equality not certified")]
    FrontierFixed(String),
    #[error("not a simplicial approximation: the star of {vertex} is not carried into the star of its image (cell {cell})")]
    NotApproximation { vertex: String, cell: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// How fixed-point-freeness on a region is established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FreenessCheck {
    /// No simplex of the region is fixed by the vertex map.
    #[default]
    Combinatorial,
    /// The vertex map stands in for a homotopic map that the caller asserts is fixed-point-free
    /// on the region; the combinatorial check is skipped and the output says so.
    CallerAsserted,
}

/// A simplicial self-map together with its chain system.
#[derive(Clone, Debug)]
pub struct SelfMapSystem {
    map: VertexSelfMap,
    chains: ChainSystem,
}

impl SelfMapSystem {
    pub fn new(map: VertexSelfMap) -> Result<SelfMapSystem, EngineError> {
        let chains = ChainSystem::induced_chain_map(&map)?;
        Ok(SelfMapSystem { map, chains })
    }

    pub fn identity(complex: &Arc<Complex>) -> SelfMapSystem {
        SelfMapSystem::new(VertexSelfMap::identity(complex)).expect("identity is simplicial")
    }

    pub fn complex(&self) -> &Arc<Complex> {
        self.map.complex()
    }

    pub fn map(&self) -> &VertexSelfMap {
        &self.map
    }

    pub fn chains(&self) -> &ChainSystem {
        &self.chains
    }

    /// Λ(f, X) by the Hopf trace.
    pub fn lefschetz(&self) -> i64 {
        self.chains.hopf_lefschetz().expect("chain map attached")
    }

    fn diagonal(&self, cell: CellId) -> i64 {
        self.chains.diagonal(cell).expect("chain map attached")
    }

    /// Σ over cells of A of (−1)^dim times the diagonal chain entry, with no checks.
    pub fn restricted_trace(&self, set: &CellSet) -> i64 {
        set.iter().map(|c| sign(c.dim) * self.diagonal(c)).sum()
    }

    /// Simplices fixed setwise by the vertex map, in canonical order.
    pub fn fixed_cells(&self) -> impl Iterator<Item = CellId> + '_ {
        self.complex().cells().filter(|&c| self.map.fixes(c))
    }

    /// The restriction to an invariant subcomplex, as a system of its own.
    pub fn restrict(&self, sub: &CellSet) -> Result<SelfMapSystem, EngineError> {
        self.check_domain(sub)?;
        let (local, embed) = self.complex().subcomplex(sub)?;
        for c in sub.iter() {
            let img = self.map.image_simplex(c);
            if !sub.contains(img) {
                return Err(EngineError::Precondition(Box::new(self.check_compatibility(sub))));
            }
        }
        let local = Arc::new(local);
        let back: std::collections::HashMap<usize, usize> =
            embed.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let image = embed.iter().map(|&v| back[&self.map.vertex_image(v)]).collect();
        SelfMapSystem::new(VertexSelfMap::new(&local, image)?)
    }

    fn check_domain(&self, set: &CellSet) -> Result<(), EngineError> {
        if Arc::ptr_eq(self.complex(), set.complex()) || **self.complex() == **set.complex() {
            Ok(())
        } else {
            Err(ComplexError::DomainMismatch.into())
        }
    }

    pub fn check_compatibility(&self, set: &CellSet) -> CompatibilityReport {
        let x = self.complex();
        let mut report = CompatibilityReport {
            a_preserved: true,
            complement_preserved: true,
            nondegenerate_on_cells: true,
            violations: Vec::new(),
        };
        for c in x.cells() {
            let img = self.map.cell_image(c);
            let inside = set.contains(c);
            let mut kinds = Vec::new();
            if inside && !set.contains(img.span) {
                report.a_preserved = false;
                kinds.push(ViolationKind::LeavesSet);
            }
            if !inside && set.contains(img.span) {
                report.complement_preserved = false;
                kinds.push(ViolationKind::EntersSet);
            }
            if inside && img.sign == 0 {
                report.nondegenerate_on_cells = false;
                kinds.push(ViolationKind::Degenerate);
            }
            for kind in kinds {
                report.violations.push(Violation {
                    cell: x.describe(c),
                    image: x.describe(img.span),
                    kind,
                });
            }
        }
        report
    }

    /// Λ(f, A)_X. With `enforce`, A and its complement must both be carried into themselves.
    pub fn lambda_comb(&self, set: &CellSet, enforce: bool) -> Result<i64, EngineError> {
        self.check_domain(set)?;
        if enforce {
            let report = self.check_compatibility(set);
            if !report.passes() {
                return Err(EngineError::Precondition(Box::new(report)));
            }
        }
        Ok(self.restricted_trace(set))
    }

    /// Both sides of Λ(A∪B) = Λ(A) + Λ(B) − Λ(A∩B).
    pub fn lambda_comb_additive_check(&self, a: &CellSet, b: &CellSet) -> Result<(i64, i64), EngineError> {
        let la = self.lambda_comb(a, true)?;
        let lb = self.lambda_comb(b, true)?;
        let lu = self.lambda_comb(&a.union(b)?, true)?;
        let li = self.lambda_comb(&a.intersection(b)?, true)?;
        Ok((lu, la + lb - li))
    }

    /// Λ(f, (X, C)) = Λ(f, X∖C)_X for a subcomplex C.
    pub fn relative_lefschetz(&self, sub: &CellSet) -> Result<i64, EngineError> {
        self.check_domain(sub)?;
        sub.require_subcomplex()?;
        self.lambda_comb(&sub.complement(), true)
    }

    /// Λ of the induced map on X/A: 1 plus the chain trace over cells outside A.
    pub fn quotient_lambda(&self, sub: &CellSet) -> Result<i64, EngineError> {
        self.check_domain(sub)?;
        sub.require_subcomplex()?;
        let report = self.check_compatibility(sub);
        if !report.passes() {
            return Err(EngineError::Precondition(Box::new(report)));
        }
        let x = self.complex();
        let hit: std::collections::BTreeSet<CellId> = sub.iter().map(|c| self.map.image_simplex(c)).collect();
        if let Some(missed) = sub.iter().find(|c| !hit.contains(c)) {
            return Err(EngineError::NotOnto(
                format!("{{{}}}", sub.describe().join(" ")),
                x.describe(missed),
            ));
        }
        Ok(1 + self.restricted_trace(&sub.complement()))
    }

    /// Λ(f, U)_X read as the fixed-point index of an open U with no fixed simplex on its frontier.
    pub fn index_via_lambda(&self, open: &CellSet, freeness: FreenessCheck) -> Result<i64, EngineError> {
        self.check_domain(open)?;
        let x = self.complex();
        let closed = open.complement();
        for c in closed.iter() {
            if let Some(f) = x.facets(c).into_iter().find(|f| open.contains(*f)) {
                return Err(EngineError::NotOpen {
                    cell: x.describe(c),
                    face: x.describe(f),
                });
            }
        }
        let value = self.lambda_comb(open, true)?;
        if freeness == FreenessCheck::Combinatorial {
            let frontier = open.decompose_triple().frontier;
            let fixed = frontier.iter().find(|&c| self.map.fixes(c));
            if let Some(c) = fixed {
                return Err(EngineError::FrontierFixed(x.describe(c)));
            }
        }
        Ok(value)
    }

    /// Both sides of Λ(cl A) = Λ(interior) + Λ(frontier) + Λ(trace part); every piece must be compatible.
    pub fn decomposition_identity(&self, set: &CellSet) -> Result<(i64, i64), EngineError> {
        let d = set.decompose_triple();
        let lhs = self.lambda_comb(&set.closure(), true)?;
        let rhs = self.lambda_comb(&d.interior, true)?
            + self.lambda_comb(&d.frontier, true)?
            + self.lambda_comb(&d.trace_part, true)?;
        Ok((lhs, rhs))
    }

    /// First simplex of cl(A) fixed setwise by the vertex map.
    pub fn witness_in_closure(&self, set: &CellSet) -> Option<CellId> {
        set.closure().iter().find(|&c| self.map.fixes(c))
    }

    pub fn certify_fixed_point(&self, set: &CellSet) -> Result<Certificate, EngineError> {
        self.check_domain(set)?;
        let report = self.check_compatibility(set);
        let value = self.restricted_trace(set);
        let mut cert = Certificate::new(value, IDENTITY_RESTRICTED, RULE_BOUNDED);
        if !report.passes() {
            cert.verdict = Verdict::PreconditionViolated;
            cert.notes.push(report.summary());
            return Ok(cert);
        }
        if value != 0 {
            cert.verdict = Verdict::FixedPointInClosure;
            cert.witness = self.witness_in_closure(set).map(|c| self.complex().describe(c));
        }
        Ok(cert)
    }
}

const IDENTITY_RESTRICTED: &str = "lambda_comb(A) = sum over open cells of A of (-1)^dim times the diagonal chain entry";
const RULE_BOUNDED: &str = "a compatible set with nonzero lambda_comb has a fixed point in its closure";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// A cell of the set maps outside it.
    LeavesSet,
    /// A cell outside the set maps into it.
    EntersSet,
    /// A cell of the set collapses (advisory only).
    Degenerate,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::LeavesSet => "leaves-set",
            ViolationKind::EntersSet => "enters-set",
            ViolationKind::Degenerate => "degenerate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub cell: String,
    pub image: String,
    pub kind: ViolationKind,
}

/// Cell-level compatibility of a vertex map with a cell set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub a_preserved: bool,
    pub complement_preserved: bool,
    pub nondegenerate_on_cells: bool,
    pub violations: Vec<Violation>,
}

impl CompatibilityReport {
    /// The enforced part of the check; nondegeneracy is advisory.
    pub fn passes(&self) -> bool {
        self.a_preserved && self.complement_preserved
    }

    pub fn summary(&self) -> String {
        let first = self
            .violations
            .iter()
            .find(|v| v.kind != ViolationKind::Degenerate)
            .or(self.violations.first());
        match first {
            Some(v) => format!(
                "a_preserved={} complement_preserved={} first violation {} -> {} ({})",
                self.a_preserved, self.complement_preserved, v.cell, v.image, v.kind
            ),
            None => "compatible".to_string(),
        }
    }

    pub fn key_values(&self) -> Vec<(String, String)> {
        let mut kv = vec![
            ("a_preserved".to_string(), self.a_preserved.to_string()),
            ("complement_preserved".to_string(), self.complement_preserved.to_string()),
            ("nondegenerate_on_cells".to_string(), self.nondegenerate_on_cells.to_string()),
            ("violations".to_string(), self.violations.len().to_string()),
        ];
        for (i, v) in self.violations.iter().enumerate() {
            kv.push((format!("violation.{i}"), format!("{} -> {} {}", v.cell, v.image, v.kind)));
        }
        kv
    }
}

impl fmt::Display for CompatibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    FixedPointInClosure,
    NoGuarantee,
    PreconditionViolated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::FixedPointInClosure => "FixedPointInClosure",
            Verdict::NoGuarantee => "NoGuarantee",
            Verdict::PreconditionViolated => "PreconditionViolated",
        })
    }
}

/// A verdict with the number and the rule that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub lambda_value: i64,
    pub witness: Option<String>,
    pub identity: String,
    pub rule: String,
    pub conjectural: bool,
    pub notes: Vec<String>,
}

impl Certificate {
    pub(crate) fn new(lambda_value: i64, identity: &str, rule: &str) -> Certificate {
        Certificate {
            verdict: Verdict::NoGuarantee,
            lambda_value,
            witness: None,
            identity: identity.to_string(),
            rule: rule.to_string(),
            conjectural: false,
            notes: Vec::new(),
        }
    }

    pub fn key_values(&self) -> Vec<(String, String)> {
        let mut kv = vec![
            ("verdict".to_string(), self.verdict.to_string()),
            ("lambda".to_string(), self.lambda_value.to_string()),
            ("witness".to_string(), self.witness.clone().unwrap_or_else(|| "none".to_string())),
            ("identity".to_string(), self.identity.clone()),
            ("rule".to_string(), self.rule.clone()),
            (
                "status".to_string(),
                if self.conjectural { "CONJECTURAL" } else { "PROVEN" }.to_string(),
            ),
        ];
        for (i, n) in self.notes.iter().enumerate() {
            kv.push((format!("note.{i}"), n.clone()));
        }
        kv
    }

    /// Deterministic `key = value` block.
    pub fn render(&self) -> String {
        self.key_values()
            .into_iter()
            .map(|(k, v)| format!("{k} = {v}\n"))
            .collect()
    }
}

/// A vertex map on X used to compute with a map that is itself simplicial on the barycentric
/// subdivision of X. Construction checks the star condition f(st v) ⊆ st g(v).
#[derive(Clone, Debug)]
pub struct Approximation {
    subdivision: Subdivision,
    target: SelfMapSystem,
    approximation: SelfMapSystem,
}

impl Approximation {
    pub fn new(subdivision: Subdivision, target: VertexSelfMap, approximation: VertexSelfMap) -> Result<Approximation, EngineError> {
        if **target.complex() != **subdivision.subdivided() || **approximation.complex() != **subdivision.original() {
            return Err(ChainError::DomainMismatch.into());
        }
        let x = subdivision.original();
        let sd = subdivision.subdivided();
        for v in 0..x.num_vertices() {
            let g = approximation.vertex_image(v);
            for tau in sd.cells() {
                if !x.simplex(subdivision.carrier(tau)).contains(&v) {
                    continue;
                }
                let carrier = subdivision.carrier(target.image_simplex(tau));
                if !x.simplex(carrier).contains(&g) {
                    return Err(EngineError::NotApproximation {
                        vertex: x.label(v).to_string(),
                        cell: sd.describe(tau),
                    });
                }
            }
        }
        Ok(Approximation {
            subdivision,
            target: SelfMapSystem::new(target)?,
            approximation: SelfMapSystem::new(approximation)?,
        })
    }

    pub fn target(&self) -> &SelfMapSystem {
        &self.target
    }

    pub fn approximation(&self) -> &SelfMapSystem {
        &self.approximation
    }

    /// Compatibility of the approximated map with the subdivided set.
    pub fn check_target(&self, set: &CellSet) -> CompatibilityReport {
        self.target.check_compatibility(&self.subdivision.subdivide_cellset(set))
    }

    /// Λ(f, A)_X computed with the approximation. With `enforce`, both the approximated map
    /// (on the subdivision) and the approximation must be compatible with A.
    pub fn lambda_comb(&self, set: &CellSet, enforce: bool) -> Result<i64, EngineError> {
        if enforce {
            let report = self.check_target(set);
            if !report.passes() {
                return Err(EngineError::Precondition(Box::new(report)));
            }
        }
        self.approximation.lambda_comb(set, enforce)
    }
}
