use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{escape_time, FractalConfig};

/// Upper bound on rendered cells (about 4.3 × 10⁹ bytes of counts).
pub const MAX_CELLS: u64 = 1 << 30;

/// Rows of the x axis handed to a worker at a time.
const TILE_ROWS: usize = 16;

/// Escape counts on a 3D lattice, x fastest, then y, then z.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipGrid<T> {
    config: FractalConfig<T>,
    shape: [usize; 3],
    counts: Vec<u32>,
}

impl<T: Scalar> MembershipGrid<T> {
    pub fn config(&self) -> &FractalConfig<T> {
        &self.config
    }

    pub fn shape(&self) -> [usize; 3] {
        self.shape
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        i + self.shape[0] * (j + self.shape[1] * k)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.counts[self.index(i, j, k)]
    }

    pub fn is_member(&self, i: usize, j: usize, k: usize) -> bool {
        self.get(i, j, k) == self.config.n_max
    }

    /// Sample point of cell `(i, j, k)`.
    pub fn cell_center(&self, i: usize, j: usize, k: usize) -> [T; 3] {
        cell_center(&self.config, self.shape, [i, j, k])
    }

    /// Iterate over `((i, j, k), count)` in storage order.
    pub fn cells(&self) -> impl Iterator<Item = ([usize; 3], u32)> + '_ {
        let [nx, ny, _] = self.shape;
        self.counts.iter().enumerate().map(move |(idx, &c)| ([idx % nx, (idx / nx) % ny, idx / (nx * ny)], c))
    }
}

fn cell_center<T: Scalar>(cfg: &FractalConfig<T>, shape: [usize; 3], idx: [usize; 3]) -> [T; 3] {
    let mut p = [T::zero(); 3];
    for a in 0..3 {
        p[a] = match cfg.slice {
            Some(s) if s.axis.index() == a => s.value,
            _ => cfg.region[a].cell_center(idx[a], shape[a]),
        };
    }
    p
}

/// Escape time at every cell center, using rayon's global pool.
pub fn render_grid<T: Scalar>(cfg: &FractalConfig<T>) -> Result<MembershipGrid<T>> {
    cfg.validate()?;
    Ok(render_validated(cfg))
}

/// As [`render_grid`] on a dedicated pool of `threads` workers. The output
/// does not depend on `threads`.
pub fn render_grid_with_threads<T: Scalar>(cfg: &FractalConfig<T>, threads: usize) -> Result<MembershipGrid<T>> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    Ok(pool.install(|| render_validated(cfg)))
}

fn render_validated<T: Scalar>(cfg: &FractalConfig<T>) -> MembershipGrid<T> {
    let shape = cfg.shape();
    let [nx, ny, nz] = shape;
    let mut counts = vec![0u32; nx * ny * nz];
    // Each tile owns a disjoint run of whole x-rows.
    counts.par_chunks_mut(nx * TILE_ROWS).enumerate().for_each(|(tile, out)| {
        let first_row = tile * TILE_ROWS;
        for (r, row) in out.chunks_mut(nx).enumerate() {
            let row_idx = first_row + r;
            let (j, k) = (row_idx % ny, row_idx / ny);
            for (i, cell) in row.iter_mut().enumerate() {
                *cell = escape_time(cell_center(cfg, shape, [i, j, k]), cfg);
            }
        }
    });
    MembershipGrid { config: cfg.clone(), shape, counts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractal::{Approach, Axis, Interval};

    #[test]
    fn single_cell_at_origin_is_member() {
        let cfg = FractalConfig::<f64>::new(Approach::First, [1, 1, 1]);
        let g = render_grid(&cfg).unwrap();
        assert_eq!(g.counts(), &[100]);
        assert_eq!(g.cell_center(0, 0, 0), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn slice_collapses_axis() {
        let cfg = FractalConfig::<f64>::new(Approach::First, [8, 6, 5]).with_slice(Axis::Y, 0.25);
        let g = render_grid(&cfg).unwrap();
        assert_eq!(g.shape(), [8, 1, 5]);
        assert_eq!(g.counts().len(), 40);
        assert_eq!(g.cell_center(3, 0, 2)[1], 0.25);
    }

    #[test]
    fn cells_iterate_in_storage_order() {
        let cfg = FractalConfig::<f64>::new(Approach::First, [3, 2, 2]);
        let g = render_grid(&cfg).unwrap();
        let idx: Vec<[usize; 3]> = g.cells().map(|(p, _)| p).collect();
        assert_eq!(idx[0], [0, 0, 0]);
        assert_eq!(idx[1], [1, 0, 0]);
        assert_eq!(idx[3], [0, 1, 0]);
        assert_eq!(idx[6], [0, 0, 1]);
        for (p, c) in g.cells() {
            assert_eq!(c, g.get(p[0], p[1], p[2]));
        }
    }

    #[test]
    fn rejects_invalid_configs() {
        let cfg = FractalConfig::<f64>::new(Approach::First, [0, 1, 1]);
        assert!(matches!(render_grid(&cfg), Err(Error::InvalidConfig(_))));
        let cfg = FractalConfig::<f64>::new(Approach::First, [1, 1, 1]).with_n_max(0);
        assert!(render_grid(&cfg).is_err());
        let cfg = FractalConfig::<f64>::new(Approach::First, [1 << 20, 1 << 20, 4]);
        assert!(matches!(render_grid(&cfg), Err(Error::ResolutionOverflow(_))));
        let bad = Interval::new(1.0, -1.0);
        let cfg = FractalConfig::<f64>::new(Approach::First, [1, 1, 1]).with_region([bad; 3]);
        assert!(render_grid(&cfg).is_err());
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let cfg = FractalConfig::<f64>::new(Approach::Second, [13, 11, 7]);
        let a = render_grid_with_threads(&cfg, 1).unwrap();
        let b = render_grid_with_threads(&cfg, 3).unwrap();
        assert_eq!(a.counts(), b.counts());
    }
}
