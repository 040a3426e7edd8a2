//! Finite abstract simplicial complexes and sets of open cells.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("malformed simplex {simplex}: repeated vertex")]
    RepeatedVertex { simplex: String },
    #[error("empty simplex")]
    EmptySimplex,
    #[error("complex has no simplices")]
    NoSimplices,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("{0} is not a simplex of the complex")]
    NotASimplex(String),
    #[error("cell sets belong to different complexes")]
    DomainMismatch,
    #[error("cell set is not a subcomplex: face {face} of {cell} is missing")]
    NotASubcomplex { cell: String, face: String },
}

/// Opaque vertex identifier. Integers sort before names, integers numerically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexToken {
    Int(i64),
    Name(String),
}

impl VertexToken {
    pub fn parse(raw: &str) -> Self {
        match raw.parse::<i64>() {
            Ok(n) => VertexToken::Int(n),
            Err(_) => VertexToken::Name(raw.to_string()),
        }
    }
}

impl fmt::Display for VertexToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexToken::Int(n) => write!(f, "{n}"),
            VertexToken::Name(s) => f.write_str(s),
        }
    }
}

impl From<i64> for VertexToken {
    fn from(n: i64) -> Self {
        VertexToken::Int(n)
    }
}

impl From<i32> for VertexToken {
    fn from(n: i32) -> Self {
        VertexToken::Int(n as i64)
    }
}

impl From<usize> for VertexToken {
    fn from(n: usize) -> Self {
        VertexToken::Int(n as i64)
    }
}

impl From<&str> for VertexToken {
    fn from(s: &str) -> Self {
        VertexToken::parse(s)
    }
}

impl From<String> for VertexToken {
    fn from(s: String) -> Self {
        VertexToken::parse(&s)
    }
}

impl From<&VertexToken> for VertexToken {
    fn from(t: &VertexToken) -> Self {
        t.clone()
    }
}

/// Position of a simplex in the canonical order: dimension, then index in that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId {
    pub dim: usize,
    pub pos: usize,
}

/// Face-closed set of simplices over densely indexed vertices.
///
/// Vertices are indexed `0..n` in token order; each dimension's simplices are strictly
/// sorted tuples listed lexicographically. That order is the row/column order of every matrix.
#[derive(Clone, Debug)]
pub struct Complex {
    labels: Vec<VertexToken>,
    by_dim: Vec<Vec<Vec<usize>>>,
    lookup: HashMap<Vec<usize>, CellId>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.by_dim == other.by_dim
    }
}

impl Eq for Complex {}

impl Complex {
    /// Builds the face closure of the given simplices.
    pub fn from_maximal<I, S, T>(simplices: I) -> Result<Complex, ComplexError>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = T>,
        T: Into<VertexToken>,
    {
        let mut tuples: Vec<Vec<VertexToken>> = Vec::new();
        for s in simplices {
            let mut t: Vec<VertexToken> = s.into_iter().map(Into::into).collect();
            if t.is_empty() {
                return Err(ComplexError::EmptySimplex);
            }
            t.sort();
            if t.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::RepeatedVertex {
                    simplex: format_tokens(&t),
                });
            }
            tuples.push(t);
        }
        if tuples.is_empty() {
            return Err(ComplexError::NoSimplices);
        }
        let labels: Vec<VertexToken> = tuples
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<&VertexToken, usize> =
            labels.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let dense: Vec<Vec<usize>> = tuples
            .iter()
            .map(|t| t.iter().map(|v| index[v]).collect())
            .collect();
        Ok(Self::from_dense(labels, dense))
    }

    /// Face closure of simplices already given as sorted dense indices into `labels`.
    pub(crate) fn from_dense(labels: Vec<VertexToken>, maximal: Vec<Vec<usize>>) -> Complex {
        let mut sets: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for s in &maximal {
            let k = s.len();
            if sets.len() < k {
                sets.resize_with(k, BTreeSet::new);
            }
            if sets[k - 1].contains(s) {
                continue;
            }
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                sets[face.len() - 1].insert(face);
            }
        }
        let by_dim: Vec<Vec<Vec<usize>>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut lookup = HashMap::new();
        for (dim, list) in by_dim.iter().enumerate() {
            for (pos, s) in list.iter().enumerate() {
                lookup.insert(s.clone(), CellId { dim, pos });
            }
        }
        Complex {
            labels,
            by_dim,
            lookup,
        }
    }

    pub fn dim(&self) -> usize {
        self.by_dim.len() - 1
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn count(&self, dim: usize) -> usize {
        self.by_dim.get(dim).map_or(0, Vec::len)
    }

    pub fn cell_count(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn simplices(&self, dim: usize) -> &[Vec<usize>] {
        self.by_dim.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn simplex(&self, cell: CellId) -> &[usize] {
        &self.by_dim[cell.dim][cell.pos]
    }

    pub fn find(&self, vertices: &[usize]) -> Option<CellId> {
        self.lookup.get(vertices).copied()
    }

    pub fn label(&self, vertex: usize) -> &VertexToken {
        &self.labels[vertex]
    }

    pub fn labels(&self) -> &[VertexToken] {
        &self.labels
    }

    pub fn vertex_index(&self, token: &VertexToken) -> Option<usize> {
        self.labels.binary_search(token).ok()
    }

    /// Resolves a tuple of tokens (any order) to a cell.
    pub fn find_tokens(&self, tokens: &[VertexToken]) -> Result<CellId, ComplexError> {
        let mut idx = Vec::with_capacity(tokens.len());
        for t in tokens {
            idx.push(
                self.vertex_index(t)
                    .ok_or_else(|| ComplexError::UnknownVertex(t.to_string()))?,
            );
        }
        idx.sort_unstable();
        self.find(&idx)
            .ok_or_else(|| ComplexError::NotASimplex(format_tokens(tokens)))
    }

    /// All cells in canonical order.
    pub fn cells(&self) -> impl Iterator<Item = CellId> + '_ {
        self.by_dim
            .iter()
            .enumerate()
            .flat_map(|(dim, l)| (0..l.len()).map(move |pos| CellId { dim, pos }))
    }

    /// Codimension-one faces, in the order of the deleted vertex.
    pub fn facets(&self, cell: CellId) -> Vec<CellId> {
        if cell.dim == 0 {
            return Vec::new();
        }
        let s = self.simplex(cell);
        (0..s.len())
            .map(|i| {
                let mut f = s.to_vec();
                f.remove(i);
                self.lookup[&f]
            })
            .collect()
    }

    /// All faces including the cell itself.
    pub fn faces(&self, cell: CellId) -> Vec<CellId> {
        let s = self.simplex(cell);
        let k = s.len();
        (1u64..(1u64 << k))
            .map(|mask| {
                let f: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                self.lookup[&f]
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(p, l)| sign(p) * l.len() as i64)
            .sum()
    }

    pub fn describe(&self, cell: CellId) -> String {
        let toks: Vec<VertexToken> = self.simplex(cell).iter().map(|&v| self.labels[v].clone()).collect();
        format_tokens(&toks)
    }

    /// True when every pair of vertices is joined by an edge path.
    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.simplices(1) {
            let (a, b) = (root(&mut parent, e[0]), root(&mut parent, e[1]));
            parent[a] = b;
        }
        let r = root(&mut parent, 0);
        (0..n).all(|v| root(&mut parent, v) == r)
    }

    /// The subcomplex spanned by a face-closed cell set, with the dense vertex embedding.
    pub fn subcomplex(&self, set: &CellSet) -> Result<(Complex, Vec<usize>), ComplexError> {
        set.require_subcomplex()?;
        if set.is_empty() {
            return Err(ComplexError::NoSimplices);
        }
        let verts: Vec<usize> = set.iter().filter(|c| c.dim == 0).map(|c| self.simplex(c)[0]).collect();
        let local: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let maximal = set
            .iter()
            .map(|c| self.simplex(c).iter().map(|v| local[v]).collect())
            .collect();
        Ok((Complex::from_dense(labels, maximal), verts))
    }
}

pub(crate) fn sign(p: usize) -> i64 {
    if p % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn format_tokens(t: &[VertexToken]) -> String {
    let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// A union of open cells of one complex.
#[derive(Clone, Debug)]
pub struct CellSet {
    complex: Arc<Complex>,
    cells: BTreeSet<CellId>,
}

impl PartialEq for CellSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_domain(other) && self.cells == other.cells
    }
}

impl Eq for CellSet {}

/// The three disjoint pieces of a closure: interior part, frontier, and the part of the set
/// touching the frontier's closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub interior: CellSet,
    pub frontier: CellSet,
    pub trace_part: CellSet,
}

impl CellSet {
    pub fn empty(complex: &Arc<Complex>) -> CellSet {
        CellSet {
            complex: Arc::clone(complex),
            cells: BTreeSet::new(),
        }
    }

    pub fn full(complex: &Arc<Complex>) -> CellSet {
        CellSet {
            complex: Arc::clone(complex),
            cells: complex.cells().collect(),
        }
    }

    pub fn from_cells<I: IntoIterator<Item = CellId>>(complex: &Arc<Complex>, cells: I) -> CellSet {
        let cells: BTreeSet<CellId> = cells.into_iter().collect();
        debug_assert!(cells.iter().all(|c| c.pos < complex.count(c.dim)));
        CellSet {
            complex: Arc::clone(complex),
            cells,
        }
    }

    /// Cells given as token tuples.
    pub fn from_tokens<I, S, T>(complex: &Arc<Complex>, simplices: I) -> Result<CellSet, ComplexError>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = T>,
        T: Into<VertexToken>,
    {
        let mut cells = BTreeSet::new();
        for s in simplices {
            let toks: Vec<VertexToken> = s.into_iter().map(Into::into).collect();
            cells.insert(complex.find_tokens(&toks)?);
        }
        Ok(CellSet {
            complex: Arc::clone(complex),
            cells,
        })
    }

    pub fn complex(&self) -> &Arc<Complex> {
        &self.complex
    }

    pub fn contains(&self, cell: CellId) -> bool {
        self.cells.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = CellId> + '_ {
        self.cells.iter().copied()
    }

    pub fn same_domain(&self, other: &CellSet) -> bool {
        Arc::ptr_eq(&self.complex, &other.complex) || *self.complex == *other.complex
    }

    fn check_domain(&self, other: &CellSet) -> Result<(), ComplexError> {
        if self.same_domain(other) {
            Ok(())
        } else {
            Err(ComplexError::DomainMismatch)
        }
    }

    fn with_cells(&self, cells: BTreeSet<CellId>) -> CellSet {
        CellSet {
            complex: Arc::clone(&self.complex),
            cells,
        }
    }

    pub fn closure(&self) -> CellSet {
        let mut out = BTreeSet::new();
        for c in self.iter() {
            if out.contains(&c) {
                continue;
            }
            out.extend(self.complex.faces(c));
        }
        self.with_cells(out)
    }

    pub fn is_subcomplex(&self) -> bool {
        self.iter()
            .all(|c| self.complex.facets(c).iter().all(|f| self.cells.contains(f)))
    }

    pub(crate) fn require_subcomplex(&self) -> Result<(), ComplexError> {
        for c in self.iter() {
            for f in self.complex.facets(c) {
                if !self.cells.contains(&f) {
                    return Err(ComplexError::NotASubcomplex {
                        cell: self.complex.describe(c),
                        face: self.complex.describe(f),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn union(&self, other: &CellSet) -> Result<CellSet, ComplexError> {
        self.check_domain(other)?;
        Ok(self.with_cells(self.cells.union(&other.cells).copied().collect()))
    }

    pub fn intersection(&self, other: &CellSet) -> Result<CellSet, ComplexError> {
        self.check_domain(other)?;
        Ok(self.with_cells(self.cells.intersection(&other.cells).copied().collect()))
    }

    pub fn difference(&self, other: &CellSet) -> Result<CellSet, ComplexError> {
        self.check_domain(other)?;
        Ok(self.with_cells(self.cells.difference(&other.cells).copied().collect()))
    }

    pub fn complement(&self) -> CellSet {
        self.with_cells(self.complex.cells().filter(|c| !self.cells.contains(c)).collect())
    }

    /// frontier = cl(A) \ A, trace_part = cl(frontier) ∩ A, interior = A \ cl(frontier).
    pub fn decompose_triple(&self) -> Decomposition {
        let closure = self.closure();
        let frontier = self.with_cells(closure.cells.difference(&self.cells).copied().collect());
        let frontier_closure = frontier.closure();
        let trace_part = self.with_cells(frontier_closure.cells.intersection(&self.cells).copied().collect());
        let interior = self.with_cells(self.cells.difference(&frontier_closure.cells).copied().collect());
        Decomposition {
            interior,
            frontier,
            trace_part,
        }
    }

    /// Alternating count of open cells.
    pub fn euler_comb(&self) -> i64 {
        self.iter().map(|c| sign(c.dim)).sum()
    }

    pub fn describe(&self) -> Vec<String> {
        self.iter().map(|c| self.complex.describe(c)).collect()
    }
}

/// Barycentric subdivision with its carrier map.
#[derive(Clone, Debug)]
pub struct Subdivision {
    original: Arc<Complex>,
    subdivided: Arc<Complex>,
    vertex_cell: Vec<CellId>,
    carrier: Vec<Vec<CellId>>,
}

impl Subdivision {
    pub fn new(original: &Arc<Complex>) -> Subdivision {
        let x = original.as_ref();
        let mut token_cell: BTreeMap<VertexToken, CellId> = BTreeMap::new();
        for c in x.cells() {
            let toks: Vec<String> = x.simplex(c).iter().map(|&v| x.label(v).to_string()).collect();
            token_cell.insert(VertexToken::Name(format!("[{}]", toks.join(","))), c);
        }
        let labels: Vec<VertexToken> = token_cell.keys().cloned().collect();
        let vertex_cell: Vec<CellId> = token_cell.values().copied().collect();
        let dense: HashMap<CellId, usize> = vertex_cell.iter().enumerate().map(|(i, &c)| (c, i)).collect();

        // Maximal flags come from orderings of the vertices of each top-dimensional face.
        let mut maximal: Vec<Vec<usize>> = Vec::new();
        for c in x.cells() {
            let is_maximal = x.count(c.dim + 1) == 0
                || !x.simplices(c.dim + 1).iter().any(|t| is_face(x.simplex(c), t));
            if !is_maximal {
                continue;
            }
            let verts = x.simplex(c).to_vec();
            for perm in permutations(verts.len()) {
                let mut flag = Vec::with_capacity(verts.len());
                let mut prefix: Vec<usize> = Vec::with_capacity(verts.len());
                for &i in &perm {
                    prefix.push(verts[i]);
                    let mut sorted = prefix.clone();
                    sorted.sort_unstable();
                    flag.push(dense[&x.find(&sorted).expect("face of a simplex")]);
                }
                flag.sort_unstable();
                maximal.push(flag);
            }
        }
        let subdivided = Complex::from_dense(labels, maximal);
        let carrier = (0..=subdivided.dim())
            .map(|p| {
                subdivided
                    .simplices(p)
                    .iter()
                    .map(|s| {
                        s.iter()
                            .map(|&v| vertex_cell[v])
                            .max_by_key(|c| c.dim)
                            .expect("nonempty simplex")
                    })
                    .collect()
            })
            .collect();
        Subdivision {
            original: Arc::clone(original),
            subdivided: Arc::new(subdivided),
            vertex_cell,
            carrier,
        }
    }

    pub fn original(&self) -> &Arc<Complex> {
        &self.original
    }

    pub fn subdivided(&self) -> &Arc<Complex> {
        &self.subdivided
    }

    /// The original cell whose open cell contains the given subdivided open cell.
    pub fn carrier(&self, cell: CellId) -> CellId {
        self.carrier[cell.dim][cell.pos]
    }

    /// The original cell whose barycenter is this subdivided vertex.
    pub fn vertex_cell(&self, vertex: usize) -> CellId {
        self.vertex_cell[vertex]
    }

    /// Subdivided vertex at the barycenter of an original cell.
    pub fn barycenter(&self, cell: CellId) -> usize {
        self.vertex_cell
            .iter()
            .position(|&c| c == cell)
            .expect("every cell has a barycenter")
    }

    pub fn subdivide_cellset(&self, set: &CellSet) -> CellSet {
        CellSet::from_cells(
            &self.subdivided,
            self.subdivided.cells().filter(|&c| set.contains(self.carrier(c))),
        )
    }
}

fn is_face(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(s: &[&[i64]]) -> Arc<Complex> {
        Arc::new(Complex::from_maximal(s.iter().map(|t| t.iter().copied())).unwrap())
    }

    #[test]
    fn builds_circle_and_triangle() {
        let c = cx(&[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!((c.count(0), c.count(1), c.count(2)), (3, 3, 0));
        assert_eq!(c.euler_characteristic(), 0);
        let t = cx(&[&[0, 1, 2]]);
        assert_eq!((t.count(0), t.count(1), t.count(2)), (3, 3, 1));
        assert_eq!(t.euler_characteristic(), 1);
        assert_eq!(cx(&[&[0]]).euler_characteristic(), 1);
    }

    #[test]
    fn repeated_vertex_is_rejected() {
        let err = Complex::from_maximal([[0i64, 0]]).unwrap_err();
        assert!(matches!(err, ComplexError::RepeatedVertex { .. }));
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let c = cx(&[&[2, 0, 1], &[3, 1]]);
        assert_eq!(c.simplices(1), &[vec![0, 1], vec![0, 2], vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn tokens_sort_numerically_before_names() {
        let c = Complex::from_maximal([vec!["10", "9"], vec!["b", "a"]]).unwrap();
        let labels: Vec<String> = c.labels().iter().map(|t| t.to_string()).collect();
        assert_eq!(labels, ["9", "10", "a", "b"]);
    }

    #[test]
    fn closure_of_open_edge() {
        let c = cx(&[&[0, 1]]);
        let a = CellSet::from_tokens(&c, [[0i64, 1]]).unwrap();
        assert_eq!(a.closure(), CellSet::full(&c));
        assert!(CellSet::full(&c).is_subcomplex());
        assert!(!a.is_subcomplex());
    }

    #[test]
    fn closure_of_sphere_triangle() {
        let s = cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let a = CellSet::from_tokens(&s, [[0i64, 1, 2]]).unwrap();
        assert_eq!(a.closure().len(), 7);
    }

    #[test]
    fn algebra_with_complement() {
        let c = cx(&[&[0, 1]]);
        let a = CellSet::from_tokens(&c, [[0i64, 1]]).unwrap();
        let comp = a.complement();
        assert_eq!(a.union(&comp).unwrap(), CellSet::full(&c));
        assert!(a.intersection(&comp).unwrap().is_empty());
        let other = cx(&[&[0, 1, 2]]);
        assert_eq!(a.union(&CellSet::full(&other)), Err(ComplexError::DomainMismatch));
    }

    #[test]
    fn half_open_interval_decomposition() {
        let c = cx(&[&[0, 1]]);
        let a = CellSet::from_tokens(&c, vec![vec![0i64], vec![0, 1]]).unwrap();
        let d = a.decompose_triple();
        assert_eq!(d.frontier, CellSet::from_tokens(&c, [[1i64]]).unwrap());
        // cl({1}) meets A nowhere, so A is its own interior part.
        assert!(d.trace_part.is_empty());
        assert_eq!(d.interior, a);
    }

    #[test]
    fn open_interval_has_empty_trace_part() {
        let c = cx(&[&[0, 1], &[1, 2]]);
        let a = CellSet::from_tokens(&c, vec![vec![0i64, 1], vec![1], vec![1, 2]]).unwrap();
        let d = a.decompose_triple();
        assert_eq!(d.frontier.len(), 2);
        assert!(d.trace_part.is_empty());
        assert_eq!(d.interior, a);
    }

    #[test]
    fn euler_comb_values() {
        let c = cx(&[&[0, 1]]);
        assert_eq!(CellSet::from_tokens(&c, [[0i64, 1]]).unwrap().euler_comb(), -1);
        assert_eq!(CellSet::empty(&c).euler_comb(), 0);
    }

    #[test]
    fn subdivided_edge_is_a_path() {
        let c = cx(&[&[0, 1]]);
        let sd = Subdivision::new(&c);
        assert_eq!(sd.subdivided().count(0), 3);
        assert_eq!(sd.subdivided().count(1), 2);
    }

    #[test]
    fn subdivision_preserves_euler_characteristic() {
        let s = cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let sd = Subdivision::new(&s);
        assert_eq!(sd.subdivided().euler_characteristic(), 2);
        let a = CellSet::from_tokens(&s, [[0i64, 1, 2]]).unwrap();
        assert_eq!(sd.subdivide_cellset(&a).euler_comb(), 1);
    }

    #[test]
    fn carrier_fibres_have_the_right_alternating_count() {
        let c = cx(&[&[0, 1, 2], &[2, 3]]);
        let sd = Subdivision::new(&c);
        for cell in c.cells() {
            let fibre: i64 = sd
                .subdivided()
                .cells()
                .filter(|&s| sd.carrier(s) == cell)
                .map(|s| sign(s.dim))
                .sum();
            assert_eq!(fibre, sign(cell.dim));
        }
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(1), vec![vec![0]]);
    }
}
