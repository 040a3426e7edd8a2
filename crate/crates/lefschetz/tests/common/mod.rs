//! Independent oracles: brute-force recomputation without chain matrices or library determinants.
#![allow(dead_code)]

use lefschetz::chain::VertexSelfMap;
use lefschetz::complex::{CellId, CellSet, Complex};

/// Contribution of one cell: (−1)^dim times the orientation sign when the map fixes the vertex
/// set of the cell and permutes it, else 0.
pub fn fixed_cell_contribution(map: &VertexSelfMap, x: &Complex, cell: CellId) -> i64 {
    let verts = x.simplex(cell);
    let images: Vec<usize> = verts.iter().map(|&v| map.vertex_image(v)).collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    if sorted != verts {
        return 0;
    }
    let mut inversions = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                inversions += 1;
            }
        }
    }
    let orientation = if inversions % 2 == 0 { 1 } else { -1 };
    let dim_sign = if cell.dim % 2 == 0 { 1 } else { -1 };
    orientation * dim_sign
}

/// Λ_comb of a cell set by counting setwise-fixed cells.
pub fn fixed_cell_trace(map: &VertexSelfMap, set: &CellSet) -> i64 {
    let x = set.complex();
    set.iter().map(|c| fixed_cell_contribution(map, x, c)).sum()
}

/// χ_c by direct counting.
pub fn count_euler(set: &CellSet) -> i64 {
    set.iter().map(|c| if c.dim % 2 == 0 { 1 } else { -1 }).sum()
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

/// det(I − A) by cofactor expansion.
pub fn det_identity_minus(a: &[Vec<i64>]) -> i64 {
    let shifted: Vec<Vec<i64>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().enumerate().map(|(j, &v)| i64::from(i == j) - v).collect())
        .collect();
    cofactor_det(&shifted)
}

/// All cell sets of a complex, as bitmasks over its canonical cell order.
pub fn all_cellsets(x: &std::sync::Arc<Complex>) -> Vec<CellSet> {
    let cells: Vec<CellId> = x.cells().collect();
    assert!(cells.len() <= 12, "exhaustive enumeration is for small complexes");
    (0u32..1 << cells.len())
        .map(|mask| {
            CellSet::from_cells(
                x,
                cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c),
            )
        })
        .collect()
}

/// Every vertex map on a complex that is simplicial.
pub fn all_simplicial_maps(x: &std::sync::Arc<Complex>) -> Vec<VertexSelfMap> {
    let n = x.num_vertices();
    let total = n.pow(n as u32);
    (0..total)
        .filter_map(|mut code| {
            let image: Vec<usize> = (0..n)
                .map(|_| {
                    let v = code % n;
                    code /= n;
                    v
                })
                .collect();
            VertexSelfMap::new(x, image).ok()
        })
        .collect()
}
