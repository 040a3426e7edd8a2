//! Seeded generation of small complexes, simplicial self-maps and cell sets.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::VertexSelfMap;
use crate::complex::{CellSet, Complex};

/// Reproducible source of random test inputs. Identical seeds give identical streams.
pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Generator {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A complex on at most `max_vertices` vertices (at most 7 is the intended range), built
    /// from one to four random faces of the full simplex.
    pub fn complex(&mut self, max_vertices: usize) -> Arc<Complex> {
        let n = self.rng.gen_range(1..=max_vertices.max(1));
        let pieces = self.rng.gen_range(1..=4);
        let mut maximal: Vec<Vec<i64>> = Vec::with_capacity(pieces);
        for _ in 0..pieces {
            let size = self.rng.gen_range(1..=n.min(4));
            let mut verts: Vec<i64> = (0..n as i64).collect();
            verts.shuffle(&mut self.rng);
            verts.truncate(size);
            maximal.push(verts);
        }
        Arc::new(Complex::from_maximal(maximal).expect("distinct vertices"))
    }

    /// A simplicial self-map, built vertex by vertex; falls back to a constant map.
    pub fn self_map(&mut self, complex: &Arc<Complex>) -> VertexSelfMap {
        let n = complex.num_vertices();
        for _ in 0..32 {
            if let Some(image) = self.greedy_images(complex) {
                return VertexSelfMap::new(complex, image).expect("checked while building");
            }
        }
        let target = self.rng.gen_range(0..n);
        VertexSelfMap::new(complex, vec![target; n]).expect("constant maps are simplicial")
    }

    fn greedy_images(&mut self, complex: &Complex) -> Option<Vec<usize>> {
        let n = complex.num_vertices();
        let mut image: Vec<usize> = Vec::with_capacity(n);
        for v in 0..n {
            let mut candidates: Vec<usize> = (0..n).collect();
            candidates.shuffle(&mut self.rng);
            let chosen = candidates.into_iter().find(|&t| {
                image.push(t);
                let ok = simplices_through(complex, v).all(|s| {
                    let mut img: Vec<usize> = s.iter().map(|&u| image[u]).collect();
                    img.sort_unstable();
                    img.dedup();
                    complex.find(&img).is_some()
                });
                image.pop();
                ok
            })?;
            image.push(chosen);
        }
        Some(image)
    }

    /// Each cell kept with probability one half.
    pub fn cellset(&mut self, complex: &Arc<Complex>) -> CellSet {
        let cells: Vec<_> = complex.cells().filter(|_| self.rng.gen_bool(0.5)).collect();
        CellSet::from_cells(complex, cells)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}

/// Simplices containing `v` whose other vertices all precede it.
fn simplices_through(complex: &Complex, v: usize) -> impl Iterator<Item = &[usize]> {
    (0..=complex.dim())
        .flat_map(move |p| complex.simplices(p).iter())
        .filter(move |s| s.last() == Some(&v))
        .map(Vec::as_slice)
}
