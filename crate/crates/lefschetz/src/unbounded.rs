//! Unbounded spaces modelled as the complement of a corona in a compactification.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::chain::VertexSelfMap;
use crate::complex::{CellSet, Complex, ComplexError, VertexToken};
use crate::engine::{Certificate, EngineError, FreenessCheck, SelfMapSystem, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnboundedError {
    #[error("corona is not invariant: {cell} maps to {image}")]
    CoronaNotInvariant { cell: String, image: String },
    #[error("open part is not invariant: {cell} maps into the corona at {image}")]
    OpenNotInvariant { cell: String, image: String },
    #[error("index at infinity needs a one-vertex corona, got {0} cells")]
    CoronaNotPoint(usize),
    #[error("fixed simplex {0} in the open part: infinity is not the only fixed point")]
    NotIsolated(String),
    #[error("a cone apex is already fixed on this complex")]
    ApexCollision,
    #[error("chi list must be given exactly for a wedge of surfaces")]
    ChiListMismatch,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Cones a new apex over a subcomplex `link` of `k`. Returns the new complex and the apex token.
pub fn one_point_compactify(k: &Complex, link: &CellSet) -> Result<(Complex, VertexToken), UnboundedError> {
    if **link.complex() != *k {
        return Err(ComplexError::DomainMismatch.into());
    }
    link.require_subcomplex()?;
    let mut apex = VertexToken::Name("inf".to_string());
    let mut n = 0;
    while k.vertex_index(&apex).is_some() {
        n += 1;
        apex = VertexToken::Name(format!("inf{n}"));
    }
    let mut simplices: Vec<Vec<VertexToken>> = k
        .cells()
        .map(|c| k.simplex(c).iter().map(|&v| k.label(v).clone()).collect())
        .collect();
    simplices.push(vec![apex.clone()]);
    for c in link.iter() {
        let mut s: Vec<VertexToken> = k.simplex(c).iter().map(|&v| k.label(v).clone()).collect();
        s.push(apex.clone());
        simplices.push(s);
    }
    Ok((Complex::from_maximal(simplices)?, apex))
}

/// Carries a self-map of `k` over to its cone extension, fixing the apex.
pub fn extend_fixing_apex(map: &VertexSelfMap, cone: &Arc<Complex>, apex: &VertexToken) -> Result<VertexSelfMap, UnboundedError> {
    let k = map.complex();
    let mut pairs: Vec<(VertexToken, VertexToken)> = (0..k.num_vertices())
        .map(|v| (k.label(v).clone(), k.label(map.vertex_image(v)).clone()))
        .collect();
    pairs.push((apex.clone(), apex.clone()));
    Ok(VertexSelfMap::from_pairs(cone, pairs).map_err(EngineError::from)?)
}

/// A self-map of a compactification, with the corona at infinity and its open complement U.
#[derive(Clone, Debug)]
pub struct CompactifiedSystem {
    system: SelfMapSystem,
    corona: CellSet,
    open: CellSet,
    freeness: FreenessCheck,
}

impl CompactifiedSystem {
    /// The corona must be a subcomplex carried into itself, and U must be carried into U.
    pub fn new(system: SelfMapSystem, corona: CellSet) -> Result<CompactifiedSystem, UnboundedError> {
        if **corona.complex() != **system.complex() {
            return Err(ComplexError::DomainMismatch.into());
        }
        corona.require_subcomplex()?;
        let x = system.complex();
        for c in x.cells() {
            let img = system.map().image_simplex(c);
            match (corona.contains(c), corona.contains(img)) {
                (true, false) => {
                    return Err(UnboundedError::CoronaNotInvariant {
                        cell: x.describe(c),
                        image: x.describe(img),
                    })
                }
                (false, true) => {
                    return Err(UnboundedError::OpenNotInvariant {
                        cell: x.describe(c),
                        image: x.describe(img),
                    })
                }
                _ => {}
            }
        }
        let open = corona.complement();
        Ok(CompactifiedSystem {
            system,
            corona,
            open,
            freeness: FreenessCheck::Combinatorial,
        })
    }

    /// Marks the vertex map as a homotopy stand-in for a map asserted fixed-point-free on U.
    pub fn with_freeness(mut self, freeness: FreenessCheck) -> CompactifiedSystem {
        self.freeness = freeness;
        self
    }

    pub fn system(&self) -> &SelfMapSystem {
        &self.system
    }

    pub fn corona(&self) -> &CellSet {
        &self.corona
    }

    pub fn open(&self) -> &CellSet {
        &self.open
    }

    pub fn freeness(&self) -> FreenessCheck {
        self.freeness
    }

    /// Λ_comb(f, U).
    pub fn lambda_comb_unbounded(&self) -> i64 {
        self.system.restricted_trace(&self.open)
    }

    pub fn lambda_corona(&self) -> i64 {
        self.system.restricted_trace(&self.corona)
    }

    fn fixed_in_open(&self) -> Option<String> {
        let x = self.system.complex();
        self.open
            .iter()
            .find(|&c| self.system.map().fixes(c))
            .map(|c| x.describe(c))
    }

    /// ind(∞) = Λ_comb(f, U) + 1 for a one-vertex corona.
    pub fn index_at_infinity(&self) -> Result<i64, UnboundedError> {
        let point = self.corona.len() == 1 && self.corona.iter().all(|c| c.dim == 0);
        if !point {
            return Err(UnboundedError::CoronaNotPoint(self.corona.len()));
        }
        if self.freeness == FreenessCheck::Combinatorial {
            if let Some(cell) = self.fixed_in_open() {
                return Err(UnboundedError::NotIsolated(cell));
            }
        }
        Ok(self.lambda_comb_unbounded() + 1)
    }

    pub fn certify_unbounded(&self, class: &SpaceClass, assume_conjecture: bool) -> Certificate {
        let lambda = self.lambda_comb_unbounded();
        let mut cert = Certificate::new(lambda, IDENTITY_UNBOUNDED, class.tag.rule());
        let failures = if assume_conjecture {
            cert.conjectural = true;
            cert.rule = RULE_CONJECTURAL.to_string();
            self.connectivity_failure().into_iter().collect()
        } else {
            self.class_failures(class)
        };
        if !failures.is_empty() {
            cert.verdict = Verdict::PreconditionViolated;
            cert.notes = failures;
            return cert;
        }
        let second_branch = class.tag == ClassTag::WedgeOfSurfaces
            && !assume_conjecture
            && class.chi_list.iter().sum::<i64>() == -1
            && lambda < -2;
        if lambda >= 1 || second_branch {
            cert.verdict = Verdict::FixedPointInClosure;
            cert.witness = self.fixed_in_open();
            if second_branch {
                cert.notes.push("wedge branch: chi sum -1 and lambda_comb < -2".to_string());
            }
        }
        if self.freeness == FreenessCheck::CallerAsserted {
            cert.notes.push("vertex map is a homotopy stand-in asserted by the caller".to_string());
        }
        cert
    }

    fn connectivity_failure(&self) -> Option<String> {
        (!self.system.complex().is_connected()).then(|| "compactification is not connected".to_string())
    }

    fn class_failures(&self, class: &SpaceClass) -> Vec<String> {
        let x = self.system.complex();
        let mut out: Vec<String> = self.connectivity_failure().into_iter().collect();
        match class.tag {
            ClassTag::GraphConnected => {
                if x.dim() > 1 {
                    out.push(format!("graph class needs dimension <= 1, got {}", x.dim()));
                }
            }
            ClassTag::SurfaceWithBoundary => out.extend(surface_failure(x, false)),
            ClassTag::SurfaceNegChi => {
                out.extend(surface_failure(x, true));
                if x.euler_characteristic() >= 0 {
                    out.push(format!("surface class needs chi < 0, got {}", x.euler_characteristic()));
                }
            }
            ClassTag::WedgeOfSurfaces => {
                if x.dim() != 2 {
                    out.push(format!("wedge of surfaces needs dimension 2, got {}", x.dim()));
                }
                if let Some(bad) = class.chi_list.iter().find(|&&c| c > -1) {
                    out.push(format!("every summand needs negative chi_c, got {bad}"));
                }
                let total: i64 = class.chi_list.iter().sum();
                if total != self.open.euler_comb() {
                    out.push(format!(
                        "chi list sums to {total} but chi_c(U) = {}",
                        self.open.euler_comb()
                    ));
                }
            }
        }
        out
    }

    /// Nonzero Λ_comb(f, U) puts a fixed point of every admissible extension in the corona.
    pub fn certify_extension_fixed_point(&self) -> Certificate {
        let lambda = self.lambda_comb_unbounded();
        let mut cert = Certificate::new(lambda, IDENTITY_AT_INFINITY, RULE_EXTENSION);
        if self.freeness == FreenessCheck::Combinatorial {
            if let Some(cell) = self.fixed_in_open() {
                cert.notes.push(format!("advisory: {cell} in U is fixed; freeness on U is not established"));
            }
        } else {
            cert.notes.push("vertex map is a homotopy stand-in asserted by the caller".to_string());
        }
        if lambda != 0 {
            cert.verdict = Verdict::FixedPointInClosure;
            let x = self.system.complex();
            cert.witness = self
                .corona
                .iter()
                .find(|&c| self.system.map().fixes(c))
                .map(|c| x.describe(c));
        }
        cert
    }
}

/// Connected pure 2-complex whose edges lie on one or two triangles (exactly two when closed).
fn surface_failure(x: &Complex, closed: bool) -> Option<String> {
    if x.dim() != 2 {
        return Some(format!("surface needs dimension 2, got {}", x.dim()));
    }
    let mut edge_degree = vec![0usize; x.count(1)];
    let mut vertex_used = vec![false; x.count(0)];
    for t in x.simplices(2) {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let e = x.find(&[a, b]).expect("face of a triangle");
            edge_degree[e.pos] += 1;
        }
        for &v in t {
            vertex_used[v] = true;
        }
    }
    if let Some(v) = vertex_used.iter().position(|u| !u) {
        return Some(format!("vertex {} lies on no triangle", x.label(v)));
    }
    let bad = edge_degree
        .iter()
        .position(|&d| d == 0 || d > 2 || (closed && d != 2))?;
    Some(format!(
        "edge {} lies on {} triangles",
        x.describe(crate::complex::CellId { dim: 1, pos: bad }),
        edge_degree[bad]
    ))
}

const IDENTITY_UNBOUNDED: &str = "lambda_comb(U) = restricted chain trace over the open complement of the corona";
const IDENTITY_AT_INFINITY: &str = "Lambda(X) = lambda_comb(U) + lambda_comb(corona)";
const RULE_EXTENSION: &str = "nonzero lambda_comb(U) forces a fixed point of the extension in the corona";
const RULE_CONJECTURAL: &str = "lambda_comb(U) >= 1 forces a fixed point, assuming the index bound for collapsed surfaces";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassTag {
    GraphConnected,
    SurfaceNegChi,
    SurfaceWithBoundary,
    WedgeOfSurfaces,
}

impl ClassTag {
    pub fn parse(raw: &str) -> Option<ClassTag> {
        match raw {
            "graph" => Some(ClassTag::GraphConnected),
            "surface" => Some(ClassTag::SurfaceNegChi),
            "surface-boundary" => Some(ClassTag::SurfaceWithBoundary),
            "wedge" => Some(ClassTag::WedgeOfSurfaces),
            _ => None,
        }
    }

    fn rule(self) -> &'static str {
        match self {
            ClassTag::GraphConnected => "connected graph: lambda_comb(U) >= 1 forces a fixed point",
            ClassTag::SurfaceNegChi => "surface with chi < 0: lambda_comb(U) >= 1 forces a fixed point",
            ClassTag::SurfaceWithBoundary => "surface with boundary: lambda_comb(U) >= 1 forces a fixed point",
            ClassTag::WedgeOfSurfaces => {
                "wedge of surfaces: lambda_comb(U) > 0, or chi sum -1 and lambda_comb(U) < -2, forces a fixed point"
            }
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassTag::GraphConnected => "graph",
            ClassTag::SurfaceNegChi => "surface",
            ClassTag::SurfaceWithBoundary => "surface-boundary",
            ClassTag::WedgeOfSurfaces => "wedge",
        })
    }
}

/// Caller-asserted topological class of the compactification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceClass {
    pub tag: ClassTag,
    /// χ_c of each wedge summand; empty unless the tag is a wedge.
    pub chi_list: Vec<i64>,
}

impl SpaceClass {
    pub fn new(tag: ClassTag, chi_list: Option<Vec<i64>>) -> Result<SpaceClass, UnboundedError> {
        match (tag, chi_list) {
            (ClassTag::WedgeOfSurfaces, Some(list)) if !list.is_empty() => Ok(SpaceClass { tag, chi_list: list }),
            (ClassTag::WedgeOfSurfaces, _) | (_, Some(_)) => Err(UnboundedError::ChiListMismatch),
            (tag, None) => Ok(SpaceClass { tag, chi_list: Vec::new() }),
        }
    }
}
