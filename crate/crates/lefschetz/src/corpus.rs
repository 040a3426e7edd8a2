//! Deterministic builders for standard spaces, self-maps on them, and fixtures with expected values.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::chain::{ChainError, VertexSelfMap};
use crate::complex::{CellId, CellSet, Complex, ComplexError, Subdivision, VertexToken};
use crate::engine::{Approximation, EngineError, FreenessCheck, SelfMapSystem};
use crate::torus::{torus_lefschetz, triad_lower_bound, TorusError, TorusMapMatrix};
use crate::unbounded::{extend_fixing_apex, one_point_compactify, CompactifiedSystem, UnboundedError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("fixture `{fixture}` has no subset `{name}`")]
    UnknownSubset { fixture: String, name: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Unbounded(#[from] UnboundedError),
    #[error(transparent)]
    Torus(#[from] TorusError),
}

fn need(ok: bool, what: impl FnOnce() -> String) -> Result<(), CorpusError> {
    if ok {
        Ok(())
    } else {
        Err(CorpusError::BadParameter(what()))
    }
}

fn ints(simplices: Vec<Vec<i64>>) -> Complex {
    Complex::from_maximal(simplices).expect("builder simplices are valid")
}

/// Path 0 - 1 - ... - n.
pub fn interval(n: usize) -> Result<Complex, CorpusError> {
    need(n >= 1, || format!("interval needs n >= 1, got {n}"))?;
    Ok(ints((0..n as i64).map(|i| vec![i, i + 1]).collect()))
}

/// The n-gon on vertices 0..n.
pub fn circle(n: usize) -> Result<Complex, CorpusError> {
    need(n >= 3, || format!("circle needs n >= 3, got {n}"))?;
    let n = n as i64;
    Ok(ints((0..n).map(|i| vec![i, (i + 1) % n]).collect()))
}

/// k n-gons sharing vertex 0; loop l uses vertices l(n−1)+1 ..= l(n−1)+n−1.
pub fn wedge_circles(k: usize, n: usize) -> Result<Complex, CorpusError> {
    need(k >= 1 && n >= 3, || format!("wedge needs k >= 1 and n >= 3, got k = {k}, n = {n}"))?;
    let (k, n) = (k as i64, n as i64);
    let mut edges = Vec::new();
    for l in 0..k {
        let mut cycle = vec![0];
        cycle.extend((1..n).map(|i| l * (n - 1) + i));
        for i in 0..cycle.len() {
            edges.push(vec![cycle[i], cycle[(i + 1) % cycle.len()]]);
        }
    }
    Ok(ints(edges))
}

/// Boundary of the (d+1)-simplex on vertices 0..=d+1.
pub fn sphere(d: usize) -> Result<Complex, CorpusError> {
    need(d <= 6, || format!("sphere dimension {d} is too large"))?;
    let n = d as i64 + 2;
    Ok(ints((0..n).map(|skip| (0..n).filter(|&v| v != skip).collect()).collect()))
}

/// Cone from vertex n over the n-gon.
pub fn disk(n: usize) -> Result<Complex, CorpusError> {
    need(n >= 3, || format!("disk needs n >= 3, got {n}"))?;
    let n = n as i64;
    Ok(ints((0..n).map(|i| vec![i, (i + 1) % n, n]).collect()))
}

/// Two triangles per unit square of an m × n grid, vertices relabelled by `v`.
fn grid(m: usize, n: usize, v: impl Fn(usize, usize) -> i64) -> Complex {
    let mut t = Vec::with_capacity(2 * m * n);
    for i in 0..m {
        for j in 0..n {
            t.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            t.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    ints(t)
}

/// [0,m]×[0,n] with both pairs of sides identified; vertex (i,j) is labelled i·n + j.
pub fn torus_grid(m: usize, n: usize) -> Result<Complex, CorpusError> {
    need(m >= 3 && n >= 3, || format!("torus grid needs m, n >= 3, got {m}x{n}"))?;
    Ok(grid(m, n, |i, j| ((i % m) * n + j % n) as i64))
}

/// [0,m]×[0,n] with (i, n) ~ (i, 0) and (m, j) ~ (0, n − j).
pub fn klein_bottle_grid(m: usize, n: usize) -> Result<Complex, CorpusError> {
    need(m >= 3 && n >= 3, || format!("Klein bottle grid needs m, n >= 3, got {m}x{n}"))?;
    Ok(grid(m, n, |i, j| {
        let j = j % n;
        let (i, j) = if i == m { (0, (n - j) % n) } else { (i, j) };
        (i * n + j) as i64
    }))
}

/// The 6-vertex real projective plane.
pub fn projective_plane() -> Complex {
    ints(vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 5, 1],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![3, 4, 1],
        vec![4, 5, 2],
        vec![5, 1, 3],
    ])
}

/// m angular columns by n layers; vertex (i,j) is labelled j·m + i.
pub fn cylinder(m: usize, n: usize) -> Result<Complex, CorpusError> {
    need(m >= 3 && n >= 1, || format!("cylinder needs m >= 3 and n >= 1, got {m}x{n}"))?;
    Ok(grid(m, n, |i, j| (j * m + i % m) as i64))
}

/// [0,m]×[0,n] with (m, j) ~ (0, n − j).
pub fn mobius(m: usize, n: usize) -> Result<Complex, CorpusError> {
    need(m >= 3 && n >= 1, || format!("Mobius strip needs m >= 3 and n >= 1, got {m}x{n}"))?;
    Ok(grid(m, n, |i, j| {
        let (i, j) = if i == m { (0, n - j) } else { (i, j) };
        (j * m + i) as i64
    }))
}

/// The k × k grid square; vertex (i,j) is labelled i·(k+1) + j.
pub fn square(k: usize) -> Result<Complex, CorpusError> {
    need(k >= 1, || format!("square needs k >= 1, got {k}"))?;
    Ok(grid(k, k, |i, j| (i * (k + 1) + j) as i64))
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// A value stated for a worked example.
    Reference,
    /// Immediate from the definitions.
    Trivial,
    /// Computed by hand from the construction.
    Derived,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Origin::Reference => "reference",
            Origin::Trivial => "trivial",
            Origin::Derived => "derived",
        })
    }
}

/// A number computed from a fixture. Subsets are referred to by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantity {
    /// Λ(f, X).
    Lefschetz,
    /// Λ(f, A)_X with compatibility enforced.
    LambdaComb(String),
    /// Λ(f|A, A) of an invariant subcomplex.
    Restricted(String),
    /// Λ_comb of the complement of a corona.
    Unbounded(String),
    /// Fixed-point index at a one-vertex corona.
    IndexAtInfinity(String, FreenessCheck),
    TorusLefschetz(TorusMapMatrix),
    TriadBound(TorusMapMatrix, TorusMapMatrix),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Lefschetz => write!(f, "lefschetz"),
            Quantity::LambdaComb(a) => write!(f, "lambda_comb[{a}]"),
            Quantity::Restricted(a) => write!(f, "lefschetz_restricted[{a}]"),
            Quantity::Unbounded(c) => write!(f, "lambda_comb_unbounded[{c}]"),
            Quantity::IndexAtInfinity(c, _) => write!(f, "index_at_infinity[{c}]"),
            Quantity::TorusLefschetz(m) => write!(f, "torus_lefschetz[{}]", matrix_text(m)),
            Quantity::TriadBound(a, b) => write!(f, "triad_lower_bound[{} | {}]", matrix_text(a), matrix_text(b)),
        }
    }
}

fn matrix_text(m: &TorusMapMatrix) -> String {
    m.entries()
        .iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub quantity: Quantity,
    pub value: i64,
    pub origin: Origin,
    /// Short description of the claim the value checks.
    pub anchor: String,
}

/// A self-map with named cell sets and the values it must reproduce.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub system: SelfMapSystem,
    pub subsets: Vec<(String, CellSet)>,
    pub expected: Vec<Expected>,
}

impl Fixture {
    fn new(name: &str, map: VertexSelfMap) -> Result<Fixture, CorpusError> {
        Ok(Fixture {
            name: name.to_string(),
            system: SelfMapSystem::new(map)?,
            subsets: Vec::new(),
            expected: Vec::new(),
        })
    }

    fn with_subset(mut self, name: &str, set: CellSet) -> Fixture {
        self.subsets.push((name.to_string(), set));
        self
    }

    fn expect(mut self, quantity: Quantity, value: i64, origin: Origin, anchor: &str) -> Fixture {
        self.expected.push(Expected {
            quantity,
            value,
            origin,
            anchor: anchor.to_string(),
        });
        self
    }

    pub fn complex(&self) -> &Arc<Complex> {
        self.system.complex()
    }

    pub fn subset(&self, name: &str) -> Result<&CellSet, CorpusError> {
        self.subsets
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| CorpusError::UnknownSubset {
                fixture: self.name.clone(),
                name: name.to_string(),
            })
    }

    /// The system with the named subset as its corona.
    pub fn compactified(&self, corona: &str) -> Result<CompactifiedSystem, CorpusError> {
        Ok(CompactifiedSystem::new(self.system.clone(), self.subset(corona)?.clone())?)
    }

    pub fn evaluate(&self, q: &Quantity) -> Result<i64, CorpusError> {
        Ok(match q {
            Quantity::Lefschetz => self.system.lefschetz(),
            Quantity::LambdaComb(a) => self.system.lambda_comb(self.subset(a)?, true)?,
            Quantity::Restricted(a) => self.system.restrict(self.subset(a)?)?.lefschetz(),
            Quantity::Unbounded(c) => self.compactified(c)?.lambda_comb_unbounded(),
            Quantity::IndexAtInfinity(c, freeness) => self.compactified(c)?.with_freeness(*freeness).index_at_infinity()?,
            Quantity::TorusLefschetz(m) => torus_lefschetz(m)?,
            Quantity::TriadBound(a, b) => triad_lower_bound(a, b)?.value,
        })
    }

    pub fn rows(&self) -> Vec<SuiteRow> {
        self.expected
            .iter()
            .map(|e| SuiteRow {
                fixture: self.name.clone(),
                quantity: e.quantity.to_string(),
                expected: e.value,
                computed: self.evaluate(&e.quantity).map_err(|err| err.to_string()),
                origin: e.origin,
                anchor: e.anchor.clone(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteRow {
    pub fixture: String,
    pub quantity: String,
    pub expected: i64,
    pub computed: Result<i64, String>,
    pub origin: Origin,
    pub anchor: String,
}

impl SuiteRow {
    pub fn passed(&self) -> bool {
        self.computed.as_ref() == Ok(&self.expected)
    }
}

fn map_fn(c: &Arc<Complex>, f: impl Fn(&VertexToken) -> VertexToken) -> Result<VertexSelfMap, CorpusError> {
    Ok(VertexSelfMap::from_pairs(c, c.labels().iter().map(|t| (t.clone(), f(t))))?)
}

fn int_of(t: &VertexToken) -> i64 {
    match t {
        VertexToken::Int(i) => *i,
        VertexToken::Name(n) => panic!("integer-labelled builder met `{n}`"),
    }
}

fn vertex_set(c: &Arc<Complex>, vertices: impl IntoIterator<Item = i64>) -> Result<CellSet, CorpusError> {
    Ok(CellSet::from_tokens(c, vertices.into_iter().map(|v| [v]))?)
}

/// Closure of the given simplices.
fn closed(c: &Arc<Complex>, simplices: Vec<Vec<VertexToken>>) -> Result<CellSet, CorpusError> {
    Ok(CellSet::from_tokens(c, simplices)?.closure())
}

/// Crossed-square annulus, radially reflected, with n open radial slits removed.
///
/// Vertex (a, j) of angle a < columns and radius j ≤ layers is labelled j·columns + a; the centre of
/// the square between angles a, a+1 and radii j, j+1 is labelled (layers+1)·columns + j·columns + a.
/// The map sends radius j to layers − j. Each slit has Λ = 1 and the annulus has Λ = 0.
pub fn annulus_with_slits(n: usize, columns: usize, layers: usize) -> Result<Fixture, CorpusError> {
    need(columns >= 3 && layers >= 2, || {
        format!("annulus needs columns >= 3 and layers >= 2, got {columns}x{layers}")
    })?;
    need(n <= columns, || format!("at most {columns} slits fit, got {n}"))?;
    let (m, l) = (columns as i64, layers as i64);
    let corner = |a: i64, j: i64| j * m + a.rem_euclid(m);
    let centre = |a: i64, j: i64| (l + 1) * m + j * m + a.rem_euclid(m);
    let mut tris = Vec::new();
    for a in 0..m {
        for j in 0..l {
            let ring = [corner(a, j), corner(a + 1, j), corner(a + 1, j + 1), corner(a, j + 1)];
            for k in 0..4 {
                tris.push(vec![ring[k], ring[(k + 1) % 4], centre(a, j)]);
            }
        }
    }
    let x = Arc::new(ints(tris));
    let corners = (l + 1) * m;
    let map = map_fn(&x, |t| {
        let v = int_of(t);
        if v < corners {
            VertexToken::Int(corner(v % m, l - v / m))
        } else {
            let w = v - corners;
            VertexToken::Int(centre(w % m, l - 1 - w / m))
        }
    })?;
    let slit = |a: i64| -> Vec<Vec<VertexToken>> {
        let mut s: Vec<Vec<VertexToken>> = (1..l).map(|j| vec![corner(a, j).into()]).collect();
        s.extend((0..l).map(|j| vec![corner(a, j).into(), corner(a, j + 1).into()]));
        s
    };
    let mut fx = Fixture::new("annulus-slits", map)?.expect(
        Quantity::Lefschetz,
        0,
        Origin::Reference,
        "the annulus map has Lambda = chi(annulus) = 0",
    );
    let mut removed = CellSet::empty(&x);
    for i in 1..=n {
        let s = CellSet::from_tokens(&x, slit(i as i64 - 1))?;
        if i == 1 {
            fx = fx.with_subset("slit-1", s.clone());
        }
        removed = removed.union(&s)?;
        let name = format!("X{i}");
        fx = fx.with_subset(&name, removed.complement()).expect(
            Quantity::LambdaComb(name.clone()),
            -(i as i64),
            Origin::Reference,
            &format!("annulus minus {i} open radial slits has lambda_comb -{i}"),
        );
    }
    Ok(fx)
}

/// Cone over a planar complex Y glued to a cylinder D along two circles T, B of Y.
///
/// The map fixes the apex c and the vertex p of Y and swaps the two halves of Y, taking T to B.
pub fn cone_glued_cylinder() -> Result<Fixture, CorpusError> {
    let y: &[&[&str]] = &[
        &["p", "t0", "t1"],
        &["p", "t0", "t2"],
        &["t0", "t1", "t2"],
        &["p", "b0", "b2"],
        &["p", "b0", "b1"],
        &["b0", "b1", "b2"],
    ];
    let mut simplices: Vec<Vec<String>> = Vec::new();
    for t in y {
        let mut s: Vec<String> = t.iter().map(|v| v.to_string()).collect();
        s.push("c".to_string());
        simplices.push(s);
    }
    let mut bands: Vec<Vec<String>> = Vec::new();
    for (upper, lower) in [("t", "s"), ("s", "b")] {
        for i in 0..3 {
            let (a0, a1) = (format!("{upper}{i}"), format!("{upper}{}", (i + 1) % 3));
            let (b0, b1) = (format!("{lower}{i}"), format!("{lower}{}", (i + 1) % 3));
            bands.push(vec![a0, a1.clone(), b0.clone()]);
            bands.push(vec![a1, b0, b1]);
        }
    }
    simplices.extend(bands.iter().cloned());
    let x = Arc::new(Complex::from_maximal(simplices)?);
    let map = map_fn(&x, |t| {
        let s = t.to_string();
        let (ring, idx) = s.split_at(1);
        let mirrored = idx.parse::<usize>().map(|i| (3 - i) % 3);
        VertexToken::Name(match (ring, mirrored) {
            ("t", Ok(i)) => format!("b{i}"),
            ("b", Ok(i)) => format!("t{i}"),
            ("s", Ok(i)) => format!("s{i}"),
            _ => s,
        })
    })?;
    let d = closed(&x, bands.iter().map(|b| b.iter().map(|v| VertexToken::from(v.as_str())).collect()).collect())?;
    let rings: Vec<Vec<VertexToken>> = ["t", "b"]
        .iter()
        .flat_map(|r| (0..3).map(move |i| vec![format!("{r}{i}").into(), format!("{r}{}", (i + 1) % 3).into()]))
        .collect();
    let tb = closed(&x, rings)?;
    let open_band = d.difference(&tb)?;
    Ok(Fixture::new("cone-cylinder", map)?
        .with_subset("D", d)
        .with_subset("T+B", tb)
        .with_subset("D-(T+B)", open_band)
        .expect(Quantity::Lefschetz, 3, Origin::Reference, "cone glued to a cylinder has Lambda 3")
        .expect(Quantity::Restricted("D".into()), 2, Origin::Reference, "the cylinder alone has Lambda 2")
        .expect(Quantity::Restricted("T+B".into()), 0, Origin::Reference, "T and B are swapped, so Lambda 0")
        .expect(
            Quantity::LambdaComb("D-(T+B)".into()),
            2,
            Origin::Derived,
            "open cylinder: 2 - 0 by additivity",
        ))
}

/// (i, j) ↦ (−i, −j) on the n × n torus grid.
pub fn torus_antipodal(n: usize) -> Result<Fixture, CorpusError> {
    let x = Arc::new(torus_grid(n, n)?);
    let nn = n as i64;
    let map = map_fn(&x, |t| {
        let v = int_of(t);
        VertexToken::Int((-(v / nn)).rem_euclid(nn) * nn + (-(v % nn)).rem_euclid(nn))
    })?;
    let minus2 = TorusMapMatrix::scalar(2, -1);
    let minus3 = TorusMapMatrix::scalar(3, -1);
    Ok(Fixture::new("torus-antipodal", map)?
        .expect(Quantity::Lefschetz, 4, Origin::Reference, "simplicial model of -I on the 2-torus")
        .expect(Quantity::TorusLefschetz(minus2), 4, Origin::Reference, "det(I - (-I)) = 4")
        .expect(
            Quantity::TriadBound(minus3.clone(), minus3),
            13,
            Origin::Derived,
            "|det(2I)| + |det(2I)| - 3 on the 3-torus",
        ))
}

/// Two n × n torus grids, each with (i, j) ↦ (−i, −j); the corona is the vertex (0, 0) of each.
pub fn punctured_tori_fixture(n: usize) -> Result<Fixture, CorpusError> {
    let one = torus_grid(n, n)?;
    let nn = (n * n) as i64;
    let mut simplices: Vec<Vec<i64>> = Vec::new();
    for offset in [0, nn] {
        for s in one.simplices(2) {
            simplices.push(s.iter().map(|&v| int_of(one.label(v)) + offset).collect());
        }
    }
    let x = Arc::new(ints(simplices));
    let k = n as i64;
    let map = map_fn(&x, |t| {
        let v = int_of(t);
        let (offset, w) = (v / nn * nn, v % nn);
        VertexToken::Int(offset + (-(w / k)).rem_euclid(k) * k + (-(w % k)).rem_euclid(k))
    })?;
    let first = CellSet::from_cells(
        &x,
        x.cells().filter(|&c| x.simplex(c).iter().all(|&v| int_of(x.label(v)) < nn)),
    );
    let point = vertex_set(&x, [0])?;
    Ok(Fixture::new("punctured-tori", map)?
        .with_subset("corona", vertex_set(&x, [0, nn])?)
        .with_subset("torus-1-punctured", first.difference(&point)?)
        .with_subset("torus-1", first)
        .expect(Quantity::Unbounded("corona".into()), 6, Origin::Reference, "two punctured tori, 3 each")
        .expect(Quantity::Restricted("torus-1".into()), 4, Origin::Reference, "det(I - (-I)) = 4 on one torus")
        .expect(
            Quantity::LambdaComb("torus-1-punctured".into()),
            3,
            Origin::Reference,
            "one torus minus its fixed vertex",
        ))
}

/// Compactification A of the punctured-tori example, and compactification B when one is built.
/// B (a genus-2 surface carrying a circle-fixing extension) is not built.
pub fn punctured_tori_pair(n: usize) -> Result<(CompactifiedSystem, Option<CompactifiedSystem>), CorpusError> {
    Ok((punctured_tori_fixture(n)?.compactified("corona")?, None))
}

fn boundary_of_square(x: &Arc<Complex>, k: usize) -> Result<CellSet, CorpusError> {
    let v = |i: usize, j: usize| VertexToken::Int((i * (k + 1) + j) as i64);
    let mut edges = Vec::new();
    for s in 0..k {
        edges.push(vec![v(0, s), v(0, s + 1)]);
        edges.push(vec![v(k, s), v(k, s + 1)]);
        edges.push(vec![v(s, 0), v(s + 1, 0)]);
        edges.push(vec![v(s, k), v(s + 1, k)]);
    }
    closed(x, edges)
}

/// Identity on the 2 × 2 grid square with its boundary as corona.
pub fn square_boundary_fixture() -> Result<Fixture, CorpusError> {
    let x = Arc::new(square(2)?);
    let boundary = boundary_of_square(&x, 2)?;
    Ok(Fixture::new("square-boundary", VertexSelfMap::identity(&x))?
        .with_subset("interior", boundary.complement())
        .with_subset("boundary", boundary)
        .expect(Quantity::Unbounded("boundary".into()), 1, Origin::Reference, "open square: 1 - Lambda(boundary)")
        .expect(Quantity::Lefschetz, 1, Origin::Trivial, "identity on a disk")
        .expect(Quantity::LambdaComb("boundary".into()), 0, Origin::Trivial, "chi of a circle"))
}

pub fn square_identity_boundary() -> Result<CompactifiedSystem, CorpusError> {
    square_boundary_fixture()?.compactified("boundary")
}

/// The 2 × 2 square coned off along its boundary (a 2-sphere), identity, apex as corona.
/// The identity stands in for a translation of the open square, so freeness is caller-asserted.
pub fn square_one_point_fixture() -> Result<Fixture, CorpusError> {
    let sq = Arc::new(square(2)?);
    let boundary = boundary_of_square(&sq, 2)?;
    let (cone, apex) = one_point_compactify(&sq, &boundary)?;
    let cone = Arc::new(cone);
    let map = extend_fixing_apex(&VertexSelfMap::identity(&sq), &cone, &apex)?;
    Ok(Fixture::new("square-one-point", map)?
        .with_subset("infinity", CellSet::from_tokens(&cone, [[apex]])?)
        .expect(
            Quantity::IndexAtInfinity("infinity".into(), FreenessCheck::CallerAsserted),
            2,
            Origin::Reference,
            "a translation of the plane has index 2 at infinity",
        )
        .expect(Quantity::Unbounded("infinity".into()), 1, Origin::Reference, "open square: lambda_comb 1"))
}

pub fn square_one_point() -> Result<CompactifiedSystem, CorpusError> {
    Ok(square_one_point_fixture()?
        .compactified("infinity")?
        .with_freeness(FreenessCheck::CallerAsserted))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureEightMap {
    /// Each hexagon loop reflected through the basepoint.
    BothReflected,
    /// The two loops exchanged.
    LoopSwap,
    Identity,
}

/// Two hexagon loops b a1 .. a5 and b c1 .. c5 at the basepoint b, which is the corona.
pub fn figure_eight_fixture(kind: FigureEightMap) -> Result<Fixture, CorpusError> {
    let loop_edges = |l: &str| -> Vec<Vec<String>> {
        let cycle: Vec<String> = std::iter::once("b".to_string())
            .chain((1..6).map(|i| format!("{l}{i}")))
            .collect();
        (0..6).map(|i| vec![cycle[i].clone(), cycle[(i + 1) % 6].clone()]).collect()
    };
    let x = Arc::new(Complex::from_maximal(loop_edges("a").into_iter().chain(loop_edges("c")))?);
    let map = map_fn(&x, |t| {
        let s = t.to_string();
        if s == "b" {
            return t.clone();
        }
        let (l, i) = s.split_at(1);
        let i: usize = i.parse().expect("loop vertex index");
        VertexToken::Name(match kind {
            FigureEightMap::BothReflected => format!("{l}{}", 6 - i),
            FigureEightMap::LoopSwap => format!("{}{i}", if l == "a" { "c" } else { "a" }),
            FigureEightMap::Identity => s,
        })
    })?;
    let (name, value, origin, anchor) = match kind {
        FigureEightMap::BothReflected => ("figure-eight-reflected", 2, Origin::Derived, "1 - (-2) - 1 at the basepoint"),
        FigureEightMap::LoopSwap => ("figure-eight-swap", 0, Origin::Derived, "traceless swap on H1, 1 - 1"),
        FigureEightMap::Identity => ("figure-eight-identity", -2, Origin::Trivial, "chi_c of the wedge minus its basepoint"),
    };
    Ok(Fixture::new(name, map)?
        .with_subset("basepoint", CellSet::from_tokens(&x, [["b"]])?)
        .expect(Quantity::Unbounded("basepoint".into()), value, origin, anchor))
}

pub fn figure_eight_at_infinity(kind: FigureEightMap) -> Result<CompactifiedSystem, CorpusError> {
    figure_eight_fixture(kind)?.compactified("basepoint")
}

/// The path 0..4 closed up by an apex at infinity; the identity stands in for a translation.
pub fn line_translation_fixture() -> Result<Fixture, CorpusError> {
    let path = Arc::new(interval(4)?);
    let ends = vertex_set(&path, [0, 4])?;
    let (circle, apex) = one_point_compactify(&path, &ends)?;
    let circle = Arc::new(circle);
    let map = extend_fixing_apex(&VertexSelfMap::identity(&path), &circle, &apex)?;
    Ok(Fixture::new("line-translation", map)?
        .with_subset("infinity", CellSet::from_tokens(&circle, [[apex]])?)
        .expect(Quantity::Unbounded("infinity".into()), -1, Origin::Derived, "chi_c of the open line"))
}

fn simple(name: &str, x: Complex, image: impl Fn(i64) -> i64) -> Result<Fixture, CorpusError> {
    let x = Arc::new(x);
    Fixture::new(name, map_fn(&x, |t| VertexToken::Int(image(int_of(t))))?)
}

/// Fixtures of the worked-example suite, in report order.
pub fn worked_examples() -> Result<Vec<Fixture>, CorpusError> {
    let unit = Arc::new(interval(1)?);
    let interval_fx = Fixture::new("interval-identity", VertexSelfMap::identity(&unit))?
        .with_subset("open-edge", CellSet::from_tokens(&unit, [[0i64, 1]])?)
        .expect(Quantity::Lefschetz, 1, Origin::Reference, "identity on [0,1]")
        .expect(Quantity::LambdaComb("open-edge".into()), -1, Origin::Reference, "identity on (0,1)");
    let rotation = simple("circle-rotation", circle(3)?, |v| (v + 1) % 3)?
        .expect(Quantity::Lefschetz, 0, Origin::Reference, "rotation of the circle");
    let reflection = simple("circle-reflection", circle(3)?, |v| (3 - v) % 3)?
        .expect(Quantity::Lefschetz, 2, Origin::Reference, "reflection of the circle");
    let swap = simple("wedge-loop-swap", wedge_circles(2, 3)?, |v| match v {
        0 => 0,
        v if v <= 2 => v + 2,
        v => v - 2,
    })?
    .expect(Quantity::Lefschetz, 1, Origin::Reference, "1 - 0 with both loop degrees off the diagonal");
    Ok(vec![
        interval_fx,
        rotation,
        reflection,
        swap,
        annulus_with_slits(4, 6, 6)?,
        cone_glued_cylinder()?,
        torus_antipodal(3)?,
        punctured_tori_fixture(3)?,
        square_boundary_fixture()?,
        square_one_point_fixture()?,
        figure_eight_fixture(FigureEightMap::BothReflected)?,
        figure_eight_fixture(FigureEightMap::LoopSwap)?,
        figure_eight_fixture(FigureEightMap::Identity)?,
        line_translation_fixture()?,
    ])
}

pub fn run_suite(fixtures: &[Fixture]) -> Vec<SuiteRow> {
    fixtures.iter().flat_map(Fixture::rows).collect()
}

/// The same space and map on two triangulations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// Reflection of circle(3) vs circle(6), A = circle minus the fixed vertex 0.
    CircleReflection,
    /// One-step rotation of circle(3) vs circle(6), A = whole circle.
    CircleRotation,
    /// Annulus at (6, 2) vs (8, 4), A = X1.
    Annulus,
    /// Identity on torus(3,3) vs torus(4,4), A = torus minus a vertex.
    PuncturedTorus,
}

impl Pairing {
    pub const ALL: [Pairing; 4] = [
        Pairing::CircleReflection,
        Pairing::CircleRotation,
        Pairing::Annulus,
        Pairing::PuncturedTorus,
    ];
}

pub fn paired_triangulations(pairing: Pairing) -> Result<(Fixture, Fixture), CorpusError> {
    let build = |size: usize| -> Result<Fixture, CorpusError> {
        match pairing {
            Pairing::CircleReflection => {
                let n = size as i64;
                let fx = simple(&format!("circle{size}-reflection"), circle(size)?, |v| (n - v) % n)?;
                let a = vertex_set(fx.complex(), [0])?.complement();
                Ok(fx.with_subset("A", a).expect(
                    Quantity::LambdaComb("A".into()),
                    1,
                    Origin::Derived,
                    "reflection minus its fixed vertex: 2 - 1",
                ))
            }
            Pairing::CircleRotation => {
                let n = size as i64;
                let fx = simple(&format!("circle{size}-rotation"), circle(size)?, |v| (v + 1) % n)?;
                let a = CellSet::full(fx.complex());
                Ok(fx
                    .with_subset("A", a)
                    .expect(Quantity::LambdaComb("A".into()), 0, Origin::Trivial, "rotation of the circle"))
            }
            Pairing::Annulus => {
                let (columns, layers) = if size == 3 { (6, 2) } else { (8, 4) };
                let mut fx = annulus_with_slits(1, columns, layers)?;
                fx.name = format!("annulus{columns}x{layers}");
                let a = fx.subset("X1")?.clone();
                fx.subsets.push(("A".into(), a));
                Ok(fx.expect(Quantity::LambdaComb("A".into()), -1, Origin::Reference, "annulus minus one slit"))
            }
            Pairing::PuncturedTorus => {
                let x = Arc::new(torus_grid(size, size)?);
                let a = vertex_set(&x, [0])?.complement();
                Ok(Fixture::new(&format!("torus{size}-identity"), VertexSelfMap::identity(&x))?
                    .with_subset("A", a)
                    .expect(Quantity::LambdaComb("A".into()), -1, Origin::Trivial, "chi_c of a punctured torus"))
            }
        }
    };
    match pairing {
        Pairing::CircleReflection | Pairing::CircleRotation => Ok((build(3)?, build(6)?)),
        _ => Ok((build(3)?, build(4)?)),
    }
}

/// Two compactifications of one open space with one map: (label, first, second).
pub fn compactification_pairs() -> Result<Vec<(String, CompactifiedSystem, CompactifiedSystem)>, CorpusError> {
    let path = Arc::new(interval(4)?);
    let line_ends = CompactifiedSystem::new(SelfMapSystem::identity(&path), vertex_set(&path, [0, 4])?)?;
    Ok(vec![
        ("open-square".to_string(), square_identity_boundary()?, square_one_point()?),
        (
            "open-line".to_string(),
            line_ends,
            line_translation_fixture()?.compactified("infinity")?,
        ),
    ])
}

/// Two vertex maps on [0,1] that approximate the constant map to the midpoint on its subdivision.
/// Returns (collapse to 0, identity, open edge).
pub fn constant_map_approximations() -> Result<(Approximation, Approximation, CellSet), CorpusError> {
    let x = Arc::new(interval(1)?);
    let sd = Subdivision::new(&x);
    let mid = sd.barycenter(CellId { dim: 1, pos: 0 });
    let target = VertexSelfMap::new(sd.subdivided(), vec![mid; sd.subdivided().num_vertices()])?;
    let collapse = Approximation::new(sd.clone(), target.clone(), VertexSelfMap::new(&x, vec![0, 0])?)?;
    let identity = Approximation::new(sd, target, VertexSelfMap::identity(&x))?;
    Ok((collapse, identity, CellSet::from_tokens(&x, [[0i64, 1]])?))
}

/// Named complexes of the corpus, small enough for exhaustive checks.
pub fn corpus_complexes() -> Result<Vec<(String, Arc<Complex>)>, CorpusError> {
    let list = vec![
        ("interval(1)", interval(1)?),
        ("interval(3)", interval(3)?),
        ("circle(3)", circle(3)?),
        ("circle(5)", circle(5)?),
        ("wedge_circles(2,3)", wedge_circles(2, 3)?),
        ("sphere(1)", sphere(1)?),
        ("sphere(2)", sphere(2)?),
        ("disk(4)", disk(4)?),
        ("torus_grid(3,3)", torus_grid(3, 3)?),
        ("klein_bottle_grid(3,3)", klein_bottle_grid(3, 3)?),
        ("projective_plane", projective_plane()),
        ("cylinder(3,1)", cylinder(3, 1)?),
        ("mobius(3,1)", mobius(3, 1)?),
        ("square(2)", square(2)?),
    ];
    Ok(list.into_iter().map(|(n, c)| (n.to_string(), Arc::new(c))).collect())
}

/// Worked examples followed by both sides of every paired triangulation.
pub fn all_fixtures() -> Result<Vec<Fixture>, CorpusError> {
    let mut out = worked_examples()?;
    for p in Pairing::ALL {
        let (a, b) = paired_triangulations(p)?;
        out.push(a);
        out.push(b);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(c: &Complex) -> Vec<usize> {
        (0..=c.dim()).map(|p| c.count(p)).collect()
    }

    #[test]
    fn basic_spaces() {
        assert_eq!(circle(3).unwrap().euler_characteristic(), 0);
        assert_eq!(sphere(2).unwrap().euler_characteristic(), 2);
        assert_eq!(counts(&sphere(2).unwrap()), vec![4, 6, 4]);
        assert_eq!(wedge_circles(2, 3).unwrap().euler_characteristic(), -1);
        assert_eq!(counts(&wedge_circles(3, 4).unwrap()), vec![10, 12]);
        assert_eq!(disk(5).unwrap().euler_characteristic(), 1);
        assert_eq!(interval(4).unwrap().euler_characteristic(), 1);
        assert!(circle(2).is_err());
    }

    #[test]
    fn surfaces() {
        let t = torus_grid(3, 3).unwrap();
        assert_eq!(counts(&t), vec![9, 27, 18]);
        assert_eq!(t.euler_characteristic(), 0);
        let k = klein_bottle_grid(3, 3).unwrap();
        assert_eq!(counts(&k), vec![9, 27, 18]);
        let rp2 = projective_plane();
        assert_eq!(counts(&rp2), vec![6, 15, 10]);
        assert_eq!(rp2.euler_characteristic(), 1);
        assert_eq!(cylinder(4, 2).unwrap().euler_characteristic(), 0);
        assert_eq!(mobius(3, 1).unwrap().euler_characteristic(), 0);
        assert_eq!(square(3).unwrap().euler_characteristic(), 1);
    }

    #[test]
    fn closed_surfaces_have_two_triangles_per_edge() {
        for c in [torus_grid(3, 4).unwrap(), klein_bottle_grid(3, 3).unwrap(), projective_plane()] {
            let mut deg = vec![0; c.count(1)];
            for t in c.cells().filter(|t| t.dim == 2) {
                for f in c.facets(t) {
                    deg[f.pos] += 1;
                }
            }
            assert!(deg.iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn klein_and_torus_differ_in_homology() {
        let t = crate::chain::ChainSystem::boundary_system(&Arc::new(torus_grid(3, 3).unwrap())).unwrap();
        let k = crate::chain::ChainSystem::boundary_system(&Arc::new(klein_bottle_grid(3, 3).unwrap())).unwrap();
        assert_eq!(t.betti(), vec![1, 2, 1]);
        assert_eq!(k.betti(), vec![1, 1, 0]);
    }

    #[test]
    fn builders_are_deterministic() {
        let a = annulus_with_slits(2, 4, 2).unwrap();
        let b = annulus_with_slits(2, 4, 2).unwrap();
        assert_eq!(a.complex().labels(), b.complex().labels());
        assert_eq!(a.system.map(), b.system.map());
        assert_eq!(a.subsets, b.subsets);
    }

    #[test]
    fn annulus_needs_room_for_slits() {
        assert!(annulus_with_slits(7, 6, 6).is_err());
        assert!(annulus_with_slits(1, 2, 6).is_err());
    }

    #[test]
    fn every_worked_example_matches() {
        for row in run_suite(&worked_examples().unwrap()) {
            assert!(row.passed(), "{row:?}");
        }
    }

    #[test]
    fn paired_values_agree() {
        for p in Pairing::ALL {
            let (a, b) = paired_triangulations(p).unwrap();
            let q = Quantity::LambdaComb("A".into());
            assert_eq!(a.evaluate(&q).unwrap(), b.evaluate(&q).unwrap(), "{p:?}");
            assert!(a.complex().cell_count() < b.complex().cell_count());
        }
    }

    #[test]
    fn compactifications_agree() {
        for (name, a, b) in compactification_pairs().unwrap() {
            assert_eq!(a.lambda_comb_unbounded(), b.lambda_comb_unbounded(), "{name}");
        }
    }

    #[test]
    fn double_torus_compactification_is_absent() {
        let (a, b) = punctured_tori_pair(3).unwrap();
        assert_eq!(a.lambda_comb_unbounded(), 6);
        assert!(b.is_none());
    }

    #[test]
    fn unknown_subset_is_reported() {
        let fx = square_boundary_fixture().unwrap();
        assert!(matches!(
            fx.evaluate(&Quantity::LambdaComb("nope".into())),
            Err(CorpusError::UnknownSubset { .. })
        ));
    }
}
