//! Boundary matrices, induced chain maps of vertex maps, and rational homology traces.

use std::fmt::Write as _;
use std::sync::Arc;

use num::Zero;
use thiserror::Error;

use crate::complex::{sign, CellId, Complex, ComplexError, VertexToken};
use crate::linalg::{kernel, rank, rational_to_i64, Echelon, IntMatrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("map is not simplicial: {simplex} maps onto {image}, which is not a simplex")]
    NotSimplicial { simplex: String, image: String },
    #[error("vertex map assigns {got} images to {expected} vertices")]
    WrongArity { expected: usize, got: usize },
    #[error("vertex {0} has no image")]
    MissingImage(String),
    #[error("vertex {0} is assigned twice")]
    DuplicateImage(String),
    #[error("maps act on different complexes")]
    DomainMismatch,
    #[error("no chain map attached")]
    NoChainMap,
    #[error("chain invariant broken: {0}")]
    Invariant(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// How a vertex map acts on one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellImage {
    /// The simplex spanned by the image vertices.
    pub span: CellId,
    /// Orientation sign, or 0 when the image is degenerate.
    pub sign: i64,
}

/// A vertex assignment that is simplicial on its complex.
#[derive(Clone, Debug)]
pub struct VertexSelfMap {
    complex: Arc<Complex>,
    image: Vec<usize>,
}

impl PartialEq for VertexSelfMap {
    fn eq(&self, other: &Self) -> bool {
        *self.complex == *other.complex && self.image == other.image
    }
}

impl VertexSelfMap {
    pub fn new(complex: &Arc<Complex>, image: Vec<usize>) -> Result<VertexSelfMap, ChainError> {
        if image.len() != complex.num_vertices() {
            return Err(ChainError::WrongArity {
                expected: complex.num_vertices(),
                got: image.len(),
            });
        }
        if let Some(&bad) = image.iter().find(|&&w| w >= complex.num_vertices()) {
            return Err(ChainError::Complex(ComplexError::UnknownVertex(bad.to_string())));
        }
        let map = VertexSelfMap {
            complex: Arc::clone(complex),
            image,
        };
        for c in complex.cells() {
            let span = map.span_vertices(c);
            if complex.find(&span).is_none() {
                let toks: Vec<String> = span.iter().map(|&v| complex.label(v).to_string()).collect();
                return Err(ChainError::NotSimplicial {
                    simplex: complex.describe(c),
                    image: format!("({})", toks.join(",")),
                });
            }
        }
        Ok(map)
    }

    pub fn identity(complex: &Arc<Complex>) -> VertexSelfMap {
        VertexSelfMap {
            complex: Arc::clone(complex),
            image: (0..complex.num_vertices()).collect(),
        }
    }

    /// Builds a map from `(source, target)` token pairs; every vertex needs exactly one image.
    pub fn from_pairs<I, A, B>(complex: &Arc<Complex>, pairs: I) -> Result<VertexSelfMap, ChainError>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<VertexToken>,
        B: Into<VertexToken>,
    {
        let n = complex.num_vertices();
        let mut image: Vec<Option<usize>> = vec![None; n];
        for (a, b) in pairs {
            let (a, b) = (a.into(), b.into());
            let s = complex
                .vertex_index(&a)
                .ok_or_else(|| ComplexError::UnknownVertex(a.to_string()))?;
            let t = complex
                .vertex_index(&b)
                .ok_or_else(|| ComplexError::UnknownVertex(b.to_string()))?;
            if image[s].replace(t).is_some() {
                return Err(ChainError::DuplicateImage(a.to_string()));
            }
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(v, t)| t.ok_or_else(|| ChainError::MissingImage(complex.label(v).to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        VertexSelfMap::new(complex, image)
    }

    pub fn complex(&self) -> &Arc<Complex> {
        &self.complex
    }

    pub fn vertex_image(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    fn span_vertices(&self, cell: CellId) -> Vec<usize> {
        let mut s: Vec<usize> = self.complex.simplex(cell).iter().map(|&v| self.image[v]).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn cell_image(&self, cell: CellId) -> CellImage {
        let imgs: Vec<usize> = self.complex.simplex(cell).iter().map(|&v| self.image[v]).collect();
        let span = self.span_vertices(cell);
        let target = self.complex.find(&span).expect("simpliciality checked at construction");
        let sign = if span.len() == imgs.len() {
            permutation_sign(&imgs)
        } else {
            0
        };
        CellImage { span: target, sign }
    }

    /// The simplex spanned by the images of the vertices of `cell`.
    pub fn image_simplex(&self, cell: CellId) -> CellId {
        self.cell_image(cell).span
    }

    /// φ maps the vertex set of `cell` onto itself.
    pub fn fixes(&self, cell: CellId) -> bool {
        self.image_simplex(cell) == cell
    }

    /// Nondegenerate on `cell`: the vertex images are distinct.
    pub fn injective_on(&self, cell: CellId) -> bool {
        self.cell_image(cell).sign != 0
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &VertexSelfMap) -> Result<VertexSelfMap, ChainError> {
        if *self.complex != *inner.complex {
            return Err(ChainError::DomainMismatch);
        }
        VertexSelfMap::new(&self.complex, inner.image.iter().map(|&v| self.image[v]).collect())
    }
}

/// Sign of the permutation that sorts a sequence of distinct values.
pub fn permutation_sign(values: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                inversions += 1;
            }
        }
    }
    sign(inversions)
}

/// Boundary matrices and, optionally, the chain map of a vertex self-map.
#[derive(Clone, Debug)]
pub struct ChainSystem {
    complex: Arc<Complex>,
    boundary: Vec<IntMatrix>,
    chain_map: Option<Vec<IntMatrix>>,
}

impl ChainSystem {
    /// Simplicial boundary with sign (−1)^i on deleting the i-th sorted vertex. Index 0 is the
    /// zero map to the trivial group.
    pub fn boundary_system(complex: &Arc<Complex>) -> Result<ChainSystem, ChainError> {
        let mut boundary = vec![IntMatrix::zeros(0, complex.count(0))];
        for p in 1..=complex.dim() {
            let mut d = IntMatrix::zeros(complex.count(p - 1), complex.count(p));
            for pos in 0..complex.count(p) {
                let cell = CellId { dim: p, pos };
                for (i, f) in complex.facets(cell).into_iter().enumerate() {
                    d.set(f.pos, pos, sign(i));
                }
            }
            boundary.push(d);
        }
        for p in 1..complex.dim() {
            if !boundary[p].mul(&boundary[p + 1]).is_zero() {
                return Err(ChainError::Invariant(format!("boundary squares to nonzero in degree {p}")));
            }
        }
        Ok(ChainSystem {
            complex: Arc::clone(complex),
            boundary,
            chain_map: None,
        })
    }

    pub fn induced_chain_map(map: &VertexSelfMap) -> Result<ChainSystem, ChainError> {
        let mut sys = ChainSystem::boundary_system(map.complex())?;
        let x = map.complex();
        let mut maps = Vec::with_capacity(x.dim() + 1);
        for p in 0..=x.dim() {
            let mut m = IntMatrix::zeros(x.count(p), x.count(p));
            for pos in 0..x.count(p) {
                let img = map.cell_image(CellId { dim: p, pos });
                if img.sign != 0 {
                    m.set(img.span.pos, pos, img.sign);
                }
            }
            maps.push(m);
        }
        for p in 1..=x.dim() {
            if sys.boundary[p].mul(&maps[p]) != maps[p - 1].mul(&sys.boundary[p]) {
                return Err(ChainError::Invariant(format!("chain map does not commute with boundary in degree {p}")));
            }
        }
        sys.chain_map = Some(maps);
        Ok(sys)
    }

    pub fn complex(&self) -> &Arc<Complex> {
        &self.complex
    }

    /// ∂_p; `boundary(0)` is the zero map.
    pub fn boundary(&self, p: usize) -> &IntMatrix {
        &self.boundary[p]
    }

    pub fn chain_map(&self, p: usize) -> Option<&IntMatrix> {
        self.chain_map.as_ref().map(|m| &m[p])
    }

    pub fn diagonal(&self, cell: CellId) -> Result<i64, ChainError> {
        let m = self.chain_map.as_ref().ok_or(ChainError::NoChainMap)?;
        Ok(m[cell.dim].get(cell.pos, cell.pos))
    }

    /// Σ_p (−1)^p tr M_p.
    pub fn hopf_lefschetz(&self) -> Result<i64, ChainError> {
        let m = self.chain_map.as_ref().ok_or(ChainError::NoChainMap)?;
        Ok(m.iter().enumerate().map(|(p, mp)| sign(p) * mp.trace()).sum())
    }

    pub fn betti(&self) -> Vec<usize> {
        (0..=self.complex.dim())
            .map(|p| {
                let cycles = self.complex.count(p) - rank(&self.boundary[p]);
                let boundaries = if p < self.complex.dim() {
                    rank(&self.boundary[p + 1])
                } else {
                    0
                };
                cycles - boundaries
            })
            .collect()
    }

    /// Traces of the induced maps on rational homology, degree by degree.
    pub fn homology_traces(&self) -> Result<Vec<i64>, ChainError> {
        let maps = self.chain_map.as_ref().ok_or(ChainError::NoChainMap)?;
        let top = self.complex.dim();
        let mut traces = Vec::with_capacity(top + 1);
        for p in 0..=top {
            let mut span = Echelon::new();
            if p < top {
                let d = self.boundary[p + 1].to_rational();
                for c in 0..self.boundary[p + 1].cols() {
                    let col: Vec<Rational> = d.iter().map(|row| row[c].clone()).collect();
                    span.insert(&col);
                }
            }
            let boundaries = span.len();
            let cycles = if p == 0 {
                IntMatrix::identity(self.complex.count(0))
                    .to_rational()
            } else {
                kernel(&self.boundary[p])
            };
            let mut classes = Vec::new();
            for z in cycles {
                if span.insert(&z) {
                    classes.push(z);
                }
            }
            let mp = maps[p].to_rational();
            let mut trace = Rational::zero();
            for (k, h) in classes.iter().enumerate() {
                let image: Vec<Rational> = mp
                    .iter()
                    .map(|row| row.iter().zip(h).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
                    .collect();
                let coords = span
                    .coordinates(&image)
                    .ok_or_else(|| ChainError::Invariant(format!("image of a {p}-cycle is not a cycle")))?;
                trace += &coords[boundaries + k];
            }
            let t = rational_to_i64(&trace)
                .ok_or_else(|| ChainError::Invariant(format!("non-integral homology trace in degree {p}")))?;
            traces.push(t);
        }
        Ok(traces)
    }

    /// Σ_p (−1)^p tr H_p(φ; ℚ), computed independently of the chain-level trace.
    pub fn homology_lefschetz(&self) -> Result<i64, ChainError> {
        Ok(self
            .homology_traces()?
            .iter()
            .enumerate()
            .map(|(p, t)| sign(p) * t)
            .sum())
    }

    /// Row-major dump of every boundary and chain matrix.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for p in 1..self.boundary.len() {
            let _ = writeln!(s, "boundary[{p}] = {}x{}", self.boundary[p].rows(), self.boundary[p].cols());
            s.push_str(&self.boundary[p].dump());
        }
        if let Some(maps) = &self.chain_map {
            for (p, m) in maps.iter().enumerate() {
                let _ = writeln!(s, "chain_map[{p}] = {}x{}", m.rows(), m.cols());
                s.push_str(&m.dump());
            }
        }
        s
    }
}
